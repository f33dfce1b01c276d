"""Closed-form cohomology of the spaces in play, plus conic geometry.

All tables use standard (positive) weights.  Results usually phrased in
terms of ``Q(i)`` with weight ``-2i`` appear here with weight ``2i`` and
type ``(i, i)``; only relative weights are comparable across conventions.

Space identifiers (``SpaceId``) parse from strings:

=====================  ==========================================
``p1`` ``p2`` ``a1``   projective line / plane, affine line
``gm``                 the punctured line ``C^x``
``p1-minus-deg2``      the line minus one degree-2 closed point
``sym:p1:<k>``         ``Sym^k P^1``
``uconf:gm:<n>``       ``UConf_n(C^x)``
``uconf:p1:2``         ``UConf_2(P^1)``
``w1n22:<n>``          stratum ``w_{1^n 2 2}(P^1)``
``w1n23:<n>``          stratum ``w_{1^n 2 3}(P^1)``
``w:<partition>``      any of the strata above, by multiplicity type
=====================  ==========================================
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from symstrata.hodge import (
    Flavor,
    HodgeTable,
    betti,
    poincare_dual,
    zero,
)
from symstrata.plethysm import graded_sym
from symstrata.spectral import Page, e1_page, resolve, serre_e2

SPACE_KINDS = (
    "P1", "P2", "A1", "Gm", "SymP1", "UConf2P1", "UConfGm", "W1n22", "W1n23", "P1MinusDeg2Point",
)


class UnsupportedSpace(ValueError):
    pass


@dataclass(frozen=True)
class SpaceId:
    kind: str
    param: int | None = None

    def __post_init__(self):
        if self.kind not in SPACE_KINDS:
            raise UnsupportedSpace(f"unknown space kind {self.kind!r}")
        needs = self.kind in ("SymP1", "UConfGm", "W1n22", "W1n23")
        if needs and self.param is None:
            raise UnsupportedSpace(f"{self.kind} needs an integer parameter")
        if not needs and self.param is not None:
            raise UnsupportedSpace(f"{self.kind} takes no parameter")
        if self.kind == "SymP1" and self.param < 0:
            raise UnsupportedSpace("Sym^k needs k >= 0")
        if self.kind in ("UConfGm", "W1n22", "W1n23") and self.param < 1:
            raise UnsupportedSpace(f"{self.kind} needs n >= 1")

    @property
    def dimension(self) -> int:
        if self.kind in ("SymP1", "UConfGm"):
            return self.param
        if self.kind in ("W1n22", "W1n23"):
            return self.param + 2
        return 2 if self.kind in ("P2", "UConf2P1") else 1

    def __str__(self):
        return {
            "P1": "p1", "P2": "p2", "A1": "a1", "Gm": "gm", "P1MinusDeg2Point": "p1-minus-deg2",
            "UConf2P1": "uconf:p1:2",
        }.get(self.kind) or {
            "SymP1": "sym:p1:", "UConfGm": "uconf:gm:", "W1n22": "w1n22:", "W1n23": "w1n23:",
        }[self.kind] + str(self.param)


def parse_space(text: str) -> SpaceId:
    t = text.strip().lower()
    simple = {
        "p1": "P1", "p2": "P2", "a1": "A1", "gm": "Gm", "p1-minus-deg2": "P1MinusDeg2Point",
        "uconf:p1:2": "UConf2P1",
    }
    if t in simple:
        return SpaceId(simple[t])
    head, _, rest = t.rpartition(":")
    prefixed = {"sym:p1": "SymP1", "uconf:gm": "UConfGm", "w1n22": "W1n22", "w1n23": "W1n23"}
    if head in prefixed:
        try:
            return SpaceId(prefixed[head], int(rest))
        except ValueError as exc:
            raise UnsupportedSpace(f"bad parameter in {text!r}") from exc
    if t.startswith("w:"):
        from symstrata.arith import parse_partition

        try:
            return space_for_partition(parse_partition(t[2:]).parts)
        except ValueError as exc:
            raise UnsupportedSpace(str(exc)) from exc
    raise UnsupportedSpace(f"cannot parse space {text!r}")


def space_for_partition(parts) -> SpaceId:
    """The catalog space ``w_lambda(P^1)`` for a multiplicity type, if there is one."""
    parts = tuple(sorted(parts))
    ones = parts.count(1)
    rest = parts[ones:]
    if parts in ((1,), (2,)):
        return SpaceId("P1")
    if parts == (1, 1):
        return SpaceId("UConf2P1")
    if rest == (2, 2) and ones >= 1:
        return SpaceId("W1n22", ones)
    if rest == (2, 3) and ones >= 1:
        return SpaceId("W1n23", ones)
    raise UnsupportedSpace(f"no catalog entry for w_lambda with lambda={parts}")


def uconf_gm_ordinary(n: int) -> HodgeTable:
    """``H^*(UConf_n C^x)``: ``Q`` in degrees 0 and n, ``Q^2`` between, type ``(i, i)``."""
    counts = {(i, i, i): (1 if i in (0, n) else 2) for i in range(n + 1)}
    return HodgeTable.from_counts(counts, Flavor.ORDINARY)


def theorem_a_ordinary(n: int) -> HodgeTable:
    """``H^*(w_{1^n 22}(P^1))`` in the closed form; same shape as ``UConf_n C^x``."""
    if n < 2:
        raise UnsupportedSpace("the closed form for w_{1^n 22} holds for n >= 2")
    return uconf_gm_ordinary(n)


def hc_table(space: SpaceId) -> HodgeTable:
    """Compactly supported cohomology of a catalog space."""
    k, n = space.kind, space.param
    if k == "P1":
        return HodgeTable.of((0, 0, 0), (2, 1, 1))
    if k == "Gm" or k == "P1MinusDeg2Point":
        # over C both are the line minus two points; they differ only arithmetically
        return HodgeTable.of((1, 0, 0), (2, 1, 1))
    if k == "A1":
        return HodgeTable.of((2, 1, 1))
    if k == "P2":
        return HodgeTable.of((0, 0, 0), (2, 1, 1), (4, 2, 2))
    if k == "SymP1":
        return graded_sym(hc_table(SpaceId("P1")), n)
    if k == "UConf2P1":
        return HodgeTable.of((4, 2, 2))
    if k == "UConfGm":
        return poincare_dual(uconf_gm_ordinary(n), n)
    if k == "W1n22":
        return poincare_dual(theorem_a_ordinary(n), n + 2)
    if k == "W1n23":
        raise UnsupportedSpace("w_{1^n 23}(P^1) is only bracketed; use bounds_w1n23")
    raise UnsupportedSpace(str(space))


def h_table(space: SpaceId) -> HodgeTable:
    """Ordinary cohomology, by Poincare duality from ``hc_table``."""
    return poincare_dual(hc_table(space), space.dimension)


def supported_spaces(max_param: int = 6) -> list[SpaceId]:
    out = [SpaceId(k) for k in ("P1", "P2", "A1", "Gm", "P1MinusDeg2Point", "UConf2P1")]
    out += [SpaceId("SymP1", k) for k in range(max_param + 1)]
    out += [SpaceId("UConfGm", n) for n in range(1, max_param + 1)]
    out += [SpaceId("W1n22", n) for n in range(2, max_param + 1)]
    return out


# Re-derivations through the spectral machinery.  These never read the
# closed forms above; tests compare the two routes.


def derive_uconf_gm(n: int) -> HodgeTable:
    """``H_c(UConf_n C^x)`` from its E1 page, which degenerates for position reasons."""
    return resolve(e1_page(hc_table(SpaceId("Gm")), n), {})


def conic_ranks() -> dict[tuple[int, int], int]:
    """Ranks of ``d_1`` on the E1 page for ``UConf_2 P^1``.

    Pullback along the diagonal conic is an isomorphism in degrees 0 and 2
    (the hyperplane class restricts to twice a point, invertible over Q).
    """
    return {(0, 0): 1, (0, 2): 1}


def derive_uconf2_p1() -> HodgeTable:
    return resolve(e1_page(hc_table(SpaceId("P1")), 2), conic_ranks())


def w1n22_serre_page(n: int) -> Page:
    base = poincare_dual(derive_uconf2_p1(), 2)
    fiber = poincare_dual(derive_uconf_gm(n), n)
    empty = zero(Flavor.ORDINARY)
    return serre_e2(base, empty, fiber, empty)


def derive_w1n22(n: int) -> HodgeTable:
    """Ordinary ``H^*(w_{1^n 22})`` from the Serre sequence with trivial monodromy."""
    return resolve(w1n22_serre_page(n), {})


def w1n23_serre_page(n: int) -> Page:
    """E2 page over ``PConf_2 P^1`` (cohomology of a 2-sphere) with trivial monodromy."""
    base = HodgeTable.of((0, 0, 0), (2, 1, 1), flavor=Flavor.ORDINARY)
    empty = zero(Flavor.ORDINARY)
    return serre_e2(base, empty, uconf_gm_ordinary(n), empty)


def bounds_w1n23(n: int) -> list[tuple[int, int]]:
    """Per-degree ``(lower, upper)`` bounds on ``dim H^i(w_{1^n 23}(P^1))``.

    Lower bounds: the invariants under the swap of the two marked points are
    ``H^*(w_{1^n 22})``.  Upper bounds: total dimensions of the E2 page.
    Degrees run over ``0 .. n + 2``.
    """
    if n < 2:
        raise ValueError("bounds need n >= 2")
    lower = betti(theorem_a_ordinary(n))
    page = w1n23_serre_page(n)
    top = n + 2
    upper = [0] * (top + 1)
    for (p, q), t in page.entries.items():
        upper[p + q] += t.dim
    lower = list(lower) + [0] * (top + 1 - len(lower))
    out = list(zip(lower, upper))
    assert all(lo <= hi for lo, hi in out)
    return out


# Conic geometry over Q or a prime field


@dataclass(frozen=True)
class ProjPoint:
    """Homogeneous coordinates; ``modulus`` selects a prime field, ``None`` means Q."""

    coords: tuple
    modulus: int | None = None

    def __post_init__(self):
        if len(self.coords) not in (2, 3):
            raise ValueError("projective points here have 2 or 3 coordinates")
        cs = tuple(self._reduce(c) for c in self.coords)
        if all(c == 0 for c in cs):
            raise ValueError("the zero vector is not a projective point")
        object.__setattr__(self, "coords", cs)

    def _reduce(self, c):
        return c % self.modulus if self.modulus else Fraction(c)

    def normalized(self) -> tuple:
        lead = next(c for c in self.coords if c != 0)
        if self.modulus:
            inv = pow(lead, -1, self.modulus)
            return tuple(c * inv % self.modulus for c in self.coords)
        return tuple(c / lead for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.modulus == other.modulus and self.normalized() == other.normalized()

    def __hash__(self):
        return hash((self.modulus, self.normalized()))

    def __str__(self):
        return "[" + " : ".join(str(c) for c in self.coords) + "]"


def diagonal_coords(pt: ProjPoint) -> ProjPoint:
    """Image of ``{x, x}`` in ``Sym^2 P^1 = P^2``: ``[a : b] -> [a^2 : -2ab : b^2]``."""
    if len(pt.coords) != 2:
        raise ValueError("expected a point of P^1")
    a, b = pt.coords
    return ProjPoint((a * a, -2 * a * b, b * b), pt.modulus)


def pair_coords(p1: ProjPoint, p2: ProjPoint) -> ProjPoint:
    """Image of ``{p1, p2}``: the coefficients of the binary quadratic they cut out."""
    (a1, b1), (a2, b2) = p1.coords, p2.coords
    return ProjPoint((a1 * a2, -(a1 * b2 + a2 * b1), b1 * b2), p1.modulus)


def conic_form(x, y, z):
    """Discriminant conic ``y^2 - 4xz`` in the coordinates of ``pair_coords``."""
    return y * y - 4 * x * z


def conic_membership(pt: ProjPoint) -> bool:
    if len(pt.coords) != 3:
        raise ValueError("expected a point of P^2")
    val = conic_form(*pt.coords)
    return (val % pt.modulus if pt.modulus else val) == 0


def _kernel_basis(line: tuple[int, int, int], p: int) -> tuple[tuple, tuple]:
    """Two independent points spanning the line ``a x + b y + c z = 0`` over F_p."""
    a, b, c = (x % p for x in line)
    cands = [v for v in ((b, -a % p, 0), (c, 0, -a % p), (0, c, -b % p)) if any(v)]
    if not cands:
        raise ValueError(f"line {line} is degenerate")
    first = cands[0]
    for w in cands[1:]:
        if _independent(first, w, p):
            return first, w
    raise ValueError(f"line {line} is degenerate")


def _independent(v, w, p) -> bool:
    return any((v[i] * w[j] - v[j] * w[i]) % p for i in range(3) for j in range(i + 1, 3))


def restrict_to_line(line: tuple[int, int, int], p: int) -> tuple[int, int, int]:
    """Binary quadratic form ``A s^2 + B st + C t^2`` of the conic on a line over F_p."""
    P, Q = _kernel_basis(line, p)

    def f(s, t):
        return conic_form(*(s * P[i] + t * Q[i] for i in range(3)))

    A = f(1, 0) % p
    C = f(0, 1) % p
    B = (f(1, 1) - f(1, 0) - f(0, 1)) % p
    return A, B, C


def tangent_line(pt: ProjPoint) -> tuple[int, int, int]:
    """Tangent line to the conic at a point of it: the gradient of ``y^2 - 4xz``."""
    if not conic_membership(pt):
        raise ValueError(f"{pt} is not on the conic")
    x, y, z = pt.coords
    grad = (-4 * z, 2 * y, -4 * x)
    m = pt.modulus
    return tuple(int(g % m) for g in grad) if m else grad


@dataclass(frozen=True)
class ConicLineReport:
    field_order: int
    trials: int
    degree_two: int
    tangent: int
    contained: int

    @property
    def passed(self) -> bool:
        return self.degree_two == self.trials and self.contained == 0

    def to_json(self) -> dict:
        return {
            "field_order": self.field_order,
            "trials": self.trials,
            "degree_two": self.degree_two,
            "tangent": self.tangent,
            "contained": self.contained,
            "passed": self.passed,
        }


def conic_line_degree(field_order: int, trials: int, seed: int = 0, max_resample: int = 1000):
    """Restrict the conic to random lines over F_p and record the degree of the result.

    A smooth conic meets every line in a degree-2 scheme, so the restricted
    binary form must be nonzero of degree 2; tangency shows up as a vanishing
    discriminant.
    """
    from sympy import isprime

    p = field_order
    if not isprime(p):
        raise ValueError("field order must be prime")
    if p == 2:
        raise ValueError("the conic y^2 - 4xz degenerates in characteristic 2")
    rng = random.Random(seed)
    deg2 = tangent = contained = 0
    for _ in range(trials):
        for _ in range(max_resample):
            line = tuple(rng.randrange(p) for _ in range(3))
            if any(line):
                break
        else:
            raise RuntimeError("could not sample a nonzero line")
        A, B, C = restrict_to_line(line, p)
        if (A, B, C) == (0, 0, 0):
            contained += 1
            continue
        deg2 += 1
        if (B * B - 4 * A * C) % p == 0:
            tangent += 1
    return ConicLineReport(p, trials, deg2, tangent, contained)
