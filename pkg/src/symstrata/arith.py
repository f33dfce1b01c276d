"""Point counts of strata ``w_lambda(P^1)`` over prime fields.

Three independent routes:

* ``count_brute`` enumerates every effective divisor of the right degree and
  reads off its multiplicity type from the factorization shape;
* ``count_fast`` counts choices of closed points by degree (Galois descent);
* ``count_strata_w1n22`` fibres ``w_{1^n 22}`` over its degree-2 base divisor
  and counts squarefree divisors on each fibre with zeta series.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Callable, Iterable, Iterator, Sequence

from sympy import divisors, isprime, mobius, nextprime

from symstrata import gfpoly
from symstrata.polys import QPoly, Series

DEFAULT_BUDGET = 10**8
ENGINE_VERSION = "0.1.0"


class BudgetExceeded(RuntimeError):
    pass


class InterpolationError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(int(x) for x in self.parts))
        if any(x < 1 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int] | Partition) -> Partition:
        return parts if isinstance(parts, Partition) else cls(tuple(parts))

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def multiplicities(self) -> dict[int, int]:
        """Multiplicity value -> number of parts equal to it (``a_m``)."""
        return dict(sorted(Counter(self.parts).items()))

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))


def parse_partition(text: str) -> Partition:
    try:
        parts = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}") from exc
    if not parts:
        raise ValueError("empty partition")
    return Partition(tuple(parts))


def w1n22(n: int) -> Partition:
    return Partition((1,) * n + (2, 2))


def w1n23(n: int) -> Partition:
    return Partition((1,) * n + (2, 3))


@dataclass(frozen=True)
class CountRecord:
    lam: Partition
    q: int
    count: int
    method: str

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "q": self.q,
            "count": self.count,
            "method": self.method,
            "engine_version": ENGINE_VERSION,
        }


def _check_prime(q: int):
    if not isprime(q):
        raise ValueError(f"q = {q} is not prime")


def first_primes(k: int, start: int = 2) -> list[int]:
    out, p = [], start if isprime(start) else nextprime(start)
    while len(out) < k:
        out.append(p)
        p = nextprime(p)
    return out


# closed points


def closed_point_count(d: int, q: int) -> int:
    """Number of closed points of degree ``d`` on ``P^1`` over F_q (necklace count)."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    if d == 1:
        return q + 1
    total = sum(mobius(e) * q ** (d // e) for e in divisors(d))
    assert total % d == 0
    return total // d


# brute force

_enumerated = 0


def enumeration_count() -> int:
    """Polynomials classified by brute force so far (an operation counter for tests)."""
    return _enumerated


def clear_caches():
    global _enumerated
    _enumerated = 0
    _poly_shapes.cache_clear()


def divisor_type(shape: Sequence[tuple[int, int]], at_infinity: int = 0) -> tuple[int, ...]:
    """Geometric multiplicity type from a factorization shape plus multiplicity at infinity."""
    parts = [e for d, e in shape for _ in range(d)]
    if at_infinity:
        parts.append(at_infinity)
    return tuple(sorted(parts))


@lru_cache(maxsize=None)
def _poly_shapes(k: int, p: int) -> Counter:
    global _enumerated
    hist: Counter = Counter()
    for tail in itertools.product(range(p), repeat=k):
        f = list(tail) + [1]
        hist[divisor_type(gfpoly.factorization_shape(f, p))] += 1
        _enumerated += 1
    return hist


def divisor_candidates(m: int, q: int) -> int:
    return sum(q**k for k in range(m + 1))


def divisor_type_histogram(m: int, q: int, budget: int = DEFAULT_BUDGET) -> Counter:
    """Number of degree-``m`` effective divisors of ``P^1`` over F_q of each type.

    A divisor is a monic polynomial of degree ``m - j`` (its affine part) with
    multiplicity ``j`` at infinity.
    """
    _check_prime(q)
    if divisor_candidates(m, q) > budget:
        raise BudgetExceeded(
            f"{divisor_candidates(m, q)} divisors of degree {m} over F_{q} exceed budget {budget}"
        )
    hist: Counter = Counter()
    for j in range(m + 1):
        for t, c in _poly_shapes(m - j, q).items():
            hist[tuple(sorted(t + ((j,) if j else ())))] += c
    return hist


def count_brute(lam, q: int, budget: int = DEFAULT_BUDGET) -> CountRecord:
    lam = Partition.of(lam)
    hist = divisor_type_histogram(lam.total, q, budget)
    return CountRecord(lam, q, hist.get(lam.parts, 0), "brute")


# fast count


def _degree_splits(a: int) -> Iterator[dict[int, int]]:
    """Ways to write ``a = sum d * k_d``: as maps degree -> number of closed points."""

    def rec(rem, max_d):
        if rem == 0:
            yield {}
            return
        for d in range(min(rem, max_d), 0, -1):
            for k in range(rem // d, 0, -1):
                for rest in rec(rem - k * d, d - 1):
                    yield {d: k, **rest}

    yield from rec(a, a)


def count_fast_with(lam, n_closed: Callable[[int], int]) -> int:
    """Stratum count given the number of closed points of each degree."""
    lam = Partition.of(lam)
    groups = list(lam.multiplicities.values())
    total = 0
    for choice in itertools.product(*(list(_degree_splits(a)) for a in groups)):
        term = 1
        for d in set().union(*choice):
            ks = [c.get(d, 0) for c in choice]
            avail, used = n_closed(d), sum(ks)
            if used > avail:
                term = 0
                break
            term *= comb(avail, used) * factorial(used) // prod(factorial(k) for k in ks)
        total += term
    return total


def count_fast(lam, q: int) -> CountRecord:
    _check_prime(q)
    lam = Partition.of(lam)
    return CountRecord(lam, q, count_fast_with(lam, lambda d: closed_point_count(d, q)), "fast")


# zeta series


def zeta_complement(removed: Sequence[tuple[int, int]], order: int) -> Series:
    """Zeta series of ``P^1`` minus closed points, coefficients in ``q``.

    ``removed`` lists ``(degree, how_many)``; the result is
    ``prod (1 - t^deg)^how_many / ((1 - t)(1 - q t))``.
    """
    q = QPoly.q()
    ones = Series([QPoly({0: 1})] * (order + 1), order)
    geom = Series([q**k for k in range(order + 1)], order)
    z = ones * geom
    for d, count in removed:
        factor = Series([QPoly({0: 1})] + [0] * (d - 1) + [QPoly({0: -1})], order)
        for _ in range(count):
            z = z * factor
    return z.map(lambda c: c if isinstance(c, QPoly) else QPoly({0: c}))


def uconf_poly(removed: Sequence[tuple[int, int]], n: int) -> QPoly:
    """Squarefree degree-``n`` divisors avoiding the removed points, as a polynomial in q."""
    if n < 0:
        raise ValueError("n must be >= 0")
    z = zeta_complement(removed, n)
    c = (z / z.substitute_power(2))[n]
    return c if isinstance(c, QPoly) else QPoly({0: c})


def uconf_count(removed: Sequence[tuple[int, int]], n: int, q: int) -> int:
    val = uconf_poly(removed, n)(q)
    assert Fraction(val).denominator == 1
    return int(val)


TWO_RATIONAL = ((1, 2),)
ONE_QUADRATIC = ((2, 1),)


def strata_w1n22_poly(n: int) -> QPoly:
    """Count of ``w_{1^n 22}`` fibred over split and nonsplit base pairs."""
    q = QPoly.q()
    split = (q * q + q) * Fraction(1, 2)
    nonsplit = (q * q - q) * Fraction(1, 2)
    return split * uconf_poly(TWO_RATIONAL, n) + nonsplit * uconf_poly(ONE_QUADRATIC, n)


def count_strata_w1n22(n: int, q: int) -> CountRecord:
    _check_prime(q)
    if n < 0:
        raise ValueError("n must be >= 0")
    split = (q * q + q) // 2 * uconf_count(TWO_RATIONAL, n, q)
    nonsplit = (q * q - q) // 2 * uconf_count(ONE_QUADRATIC, n, q)
    return CountRecord(w1n22(n), q, split + nonsplit, "strata")


# interpolation


def lagrange(points: Sequence[tuple[int, int]]) -> QPoly:
    """Unique polynomial of degree < len(points) through ``points``, exactly."""
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    result = QPoly()
    for i, (xi, yi) in enumerate(points):
        basis = QPoly({0: 1})
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * QPoly({0: -xj, 1: 1})
                denom *= xi - xj
        result = result + basis * Fraction(yi, denom)
    return result


def interpolate(lam, primes: Sequence[int], holdout: int | None = None) -> QPoly:
    """Exact count polynomial of ``w_lambda(P^1)`` from ``count_fast`` at ``primes``.

    Checks that the result has integer coefficients, degree equal to the number
    of parts, and reproduces the count at a held-out prime (the next prime
    after ``max(primes)`` unless given).
    """
    lam = Partition.of(lam)
    primes = list(primes)
    if len(primes) < len(lam) + 1:
        raise ValueError(f"need at least {len(lam) + 1} primes for {len(lam)} parts")
    for p in primes:
        _check_prime(p)
    poly = lagrange([(p, count_fast(lam, p).count) for p in primes])
    if not poly.is_integral():
        raise InterpolationError(f"non-integral interpolant {poly} for lambda={lam}")
    if poly.degree != len(lam):
        raise InterpolationError(f"degree {poly.degree} != {len(lam)} parts for lambda={lam}")
    holdout = holdout if holdout is not None else nextprime(max(primes))
    expected = count_fast(lam, holdout).count
    if poly(holdout) != expected:
        raise InterpolationError(
            f"interpolant gives {poly(holdout)} at q={holdout}, count is {expected}"
        )
    return poly


def default_primes(lam) -> list[int]:
    return first_primes(len(Partition.of(lam)) + 1)
