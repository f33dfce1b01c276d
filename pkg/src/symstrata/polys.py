"""Exact polynomial and truncated power-series types.

``EPoly`` is a two-variable integer polynomial in ``u, v`` (E-polynomials),
``QPoly`` a one-variable rational polynomial in ``q`` (point-count
polynomials), and ``Series`` a truncated power series in ``t`` whose
coefficients are any of the above (or plain ints).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping


class EPoly:
    """Integer polynomial in ``u, v`` stored as ``{(p, q): coeff}``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        c = {}
        for (p, q), a in (coeffs or {}).items():
            if int(a) != a:
                raise ValueError(f"non-integer coefficient {a!r}")
            if a:
                c[(int(p), int(q))] = c.get((int(p), int(q)), 0) + int(a)
        self._c = {k: a for k, a in c.items() if a}

    @classmethod
    def constant(cls, a: int) -> EPoly:
        return cls({(0, 0): a})

    @classmethod
    def monomial(cls, p: int, q: int, a: int = 1) -> EPoly:
        return cls({(p, q): a})

    @classmethod
    def uv_power(cls, k: int, a: int = 1) -> EPoly:
        return cls({(k, k): a})

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def is_tate(self) -> bool:
        return all(p == q for p, q in self._c)

    def to_qpoly(self) -> QPoly:
        """Substitute ``uv -> q``; only defined for Tate polynomials."""
        if not self.is_tate():
            raise ValueError(f"{self} is not a polynomial in uv")
        return QPoly({p: a for (p, _), a in self._c.items()})

    def __call__(self, u, v):
        return sum(a * u**p * v**q for (p, q), a in self._c.items())

    def _coerce(self, other) -> EPoly:
        if isinstance(other, EPoly):
            return other
        if isinstance(other, int):
            return EPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for k, a in other._c.items():
            c[k] = c.get(k, 0) + a
        return EPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return EPoly({k: -a for k, a in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: dict[tuple[int, int], int] = {}
        for (p1, q1), a in self._c.items():
            for (p2, q2), b in other._c.items():
                k = (p1 + p2, q1 + q2)
                c[k] = c.get(k, 0) + a * b
        return EPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = EPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return f"EPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for (p, q), a in sorted(self._c.items(), reverse=True):
            mono = "".join(
                s if e == 1 else f"{s}^{e}" for s, e in (("u", p), ("v", q)) if e
            )
            terms.append(_term(a, mono))
        return _join(terms)

    def to_json(self) -> list[dict]:
        return [{"p": p, "q": q, "coeff": a} for (p, q), a in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> EPoly:
        return cls({(d["p"], d["q"]): d["coeff"] for d in data})


class QPoly:
    """Polynomial in ``q`` with exact rational coefficients, ``{power: coeff}``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int | Fraction] | Iterable | None = None):
        if coeffs is None:
            coeffs = {}
        if not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        c = {}
        for k, a in coeffs.items():
            if k < 0:
                raise ValueError("negative power of q")
            a = Fraction(a)
            if a:
                c[int(k)] = c.get(int(k), Fraction(0)) + a
        self._c = {k: a for k, a in c.items() if a}

    @classmethod
    def q(cls) -> QPoly:
        return cls({1: 1})

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return max(self._c, default=-1)

    def coeff(self, k: int) -> Fraction:
        return self._c.get(k, Fraction(0))

    def coefficients(self) -> list[Fraction]:
        """Dense coefficient list, constant term first."""
        return [self.coeff(k) for k in range(self.degree + 1)]

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self._c.values())

    def __call__(self, x):
        return sum(a * x**k for k, a in self._c.items())

    def _coerce(self, other) -> QPoly:
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for k, a in other._c.items():
            c[k] = c.get(k, 0) + a
        return QPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({k: -a for k, a in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: dict[int, Fraction] = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                c[i + j] = c.get(i + j, 0) + a * b
        return QPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = QPoly({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return f"QPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for k, a in sorted(self._c.items(), reverse=True):
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            terms.append(_term(a, mono))
        return _join(terms)

    def to_json(self) -> list[dict]:
        return [{"power": k, "coeff": _frac_json(a)} for k, a in sorted(self._c.items())]


def _frac_json(a: Fraction):
    return a.numerator if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def _term(a, mono: str) -> str:
    if not mono:
        return str(a)
    if a == 1:
        return mono
    if a == -1:
        return "-" + mono
    return f"{a}{mono}"


def _join(terms: list[str]) -> str:
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


class Series:
    """Power series in ``t`` truncated at ``t^order`` (inclusive).

    Coefficients may be ints, Fractions, QPoly or EPoly; arithmetic never
    produces terms beyond the truncation order, and combining series of
    different orders truncates to the smaller one.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = list(coeffs)[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def one(cls, order: int, one=1) -> Series:
        return cls([one], order)

    def __getitem__(self, n: int):
        if n > self.order:
            raise IndexError(f"t^{n} lies beyond truncation order {self.order}")
        return self.coeffs[n]

    def __add__(self, other: Series) -> Series:
        order = min(self.order, other.order)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], order)

    def __sub__(self, other: Series) -> Series:
        order = min(self.order, other.order)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)], order)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series([a * other for a in self.coeffs], self.order)
        order = min(self.order, other.order)
        out = []
        for n in range(order + 1):
            acc = 0
            for k in range(n + 1):
                acc = acc + self.coeffs[k] * other.coeffs[n - k]
            out.append(acc)
        return Series(out, order)

    def inverse(self) -> Series:
        """Multiplicative inverse; the constant term must be 1."""
        if self.coeffs[0] != 1:
            raise ValueError("can only invert series with constant term 1")
        inv = [1]
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * inv[n - k]
            inv.append(-acc)
        return Series(inv, self.order)

    def __truediv__(self, other: Series) -> Series:
        return self * other.inverse()

    def substitute_power(self, k: int) -> Series:
        """The series ``f(t^k)`` at the same truncation order."""
        out = [0] * (self.order + 1)
        for n, a in enumerate(self.coeffs):
            if n * k > self.order:
                break
            out[n * k] = a
        return Series(out, self.order)

    def map(self, fn: Callable) -> Series:
        return Series([fn(a) for a in self.coeffs], self.order)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __repr__(self):
        return f"Series({list(self.coeffs)!r}, order={self.order})"

    def to_json(self) -> dict:
        def enc(a):
            if hasattr(a, "to_json"):
                return a.to_json()
            if isinstance(a, Fraction):
                return _frac_json(a)
            return a

        return {"order": self.order, "coefficients": [enc(a) for a in self.coeffs]}


def binomial_series(x, exponent: int, order: int) -> Series:
    """``(1 - x t)^(-exponent)`` truncated at ``order``; ``x`` is a ring element."""
    from math import comb

    out = []
    power = 1
    for k in range(order + 1):
        if exponent >= 0:
            c = comb(exponent + k - 1, k) if exponent else int(k == 0)
        else:
            c = (-1) ** k * comb(-exponent, k)
        out.append(power * c if c else 0)
        power = power * x
    return Series(out, order)
