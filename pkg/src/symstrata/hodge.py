"""Graded vector spaces with weight/type-tagged pure Hodge pieces.

A ``HodgeTable`` records, for each cohomological degree, the Hodge
bidegrees ``(p, q)`` that occur in the associated graded of the weight
filtration together with their multiplicities.  Weights follow the usual
Deligne normalization: ``H_c^1`` of the punctured line has weight 0 and
``H_c^2`` has weight 2, type ``(1, 1)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from symstrata.polys import EPoly


class Flavor(str, enum.Enum):
    ORDINARY = "ordinary"
    COMPACT = "compact"

    def flipped(self) -> Flavor:
        return Flavor.COMPACT if self is Flavor.ORDINARY else Flavor.ORDINARY


class FlavorMismatch(ValueError):
    pass


@dataclass(frozen=True, order=True)
class HodgeClass:
    degree: int
    hp: int
    hq: int
    mult: int = 1

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"negative cohomological degree {self.degree}")
        if self.mult < 1:
            raise ValueError("multiplicity must be >= 1")

    @property
    def weight(self) -> int:
        return self.hp + self.hq

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.degree, self.hp, self.hq)


Key = tuple[int, int, int]


@dataclass(frozen=True)
class HodgeTable:
    """Canonical multiset of ``HodgeClass`` records of one flavor.

    Construct with ``HodgeTable.from_counts`` or ``HodgeTable.of``; the
    constructor merges duplicate ``(degree, p, q)`` keys and drops zero
    multiplicities.
    """

    classes: tuple[HodgeClass, ...] = ()
    flavor: Flavor = Flavor.COMPACT
    _counts: Mapping[Key, int] = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        counts: dict[Key, int] = {}
        for c in self.classes:
            counts[c.key] = counts.get(c.key, 0) + c.mult
        canon = tuple(HodgeClass(d, p, q, m) for (d, p, q), m in sorted(counts.items()) if m)
        object.__setattr__(self, "classes", canon)
        object.__setattr__(self, "flavor", Flavor(self.flavor))
        object.__setattr__(self, "_counts", {c.key: c.mult for c in canon})

    @classmethod
    def from_counts(cls, counts: Mapping[Key, int], flavor=Flavor.COMPACT) -> HodgeTable:
        for k, m in counts.items():
            if m < 0:
                raise ValueError(f"negative multiplicity at {k}")
        return cls(tuple(HodgeClass(*k, m) for k, m in counts.items() if m), flavor)

    @classmethod
    def of(cls, *records: tuple, flavor=Flavor.COMPACT) -> HodgeTable:
        """Build from ``(degree, p, q[, mult])`` tuples."""
        return cls(tuple(HodgeClass(*r) for r in records), flavor)

    @property
    def counts(self) -> dict[Key, int]:
        return dict(self._counts)

    def mult(self, degree: int, hp: int, hq: int) -> int:
        return self._counts.get((degree, hp, hq), 0)

    @property
    def dim(self) -> int:
        return sum(self._counts.values())

    def is_empty(self) -> bool:
        return not self.classes

    def is_tate(self) -> bool:
        return all(c.hp == c.hq for c in self.classes)

    def degrees(self) -> list[int]:
        return sorted({c.degree for c in self.classes})

    def types(self) -> dict[tuple[int, int], int]:
        """Multiplicity per Hodge type, ignoring degree."""
        out: dict[tuple[int, int], int] = {}
        for c in self.classes:
            out[(c.hp, c.hq)] = out.get((c.hp, c.hq), 0) + c.mult
        return out

    def odd_part(self) -> HodgeTable:
        return HodgeTable(tuple(c for c in self.classes if c.degree % 2), self.flavor)

    def even_part(self) -> HodgeTable:
        return HodgeTable(tuple(c for c in self.classes if c.degree % 2 == 0), self.flavor)

    def regraded(self, degree: int) -> HodgeTable:
        """All classes moved to a single cohomological degree."""
        return HodgeTable(
            tuple(HodgeClass(degree, c.hp, c.hq, c.mult) for c in self.classes), self.flavor
        )

    def with_flavor(self, flavor) -> HodgeTable:
        return HodgeTable(self.classes, flavor)

    def __add__(self, other: HodgeTable) -> HodgeTable:
        return direct_sum(self, other)

    def __mul__(self, other: HodgeTable) -> HodgeTable:
        return tensor(self, other)

    def __str__(self):
        if not self.classes:
            return f"0 [{self.flavor.value}]"
        parts = [
            f"H^{c.degree}:({c.hp},{c.hq})" + (f"x{c.mult}" if c.mult > 1 else "")
            for c in self.classes
        ]
        return " + ".join(parts) + f" [{self.flavor.value}]"

    def to_json(self) -> dict:
        return {
            "flavor": self.flavor.value,
            "classes": [
                {"degree": c.degree, "p": c.hp, "q": c.hq, "mult": c.mult} for c in self.classes
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> HodgeTable:
        return cls(
            tuple(HodgeClass(r["degree"], r["p"], r["q"], r["mult"]) for r in data["classes"]),
            Flavor(data.get("flavor", "compact")),
        )


def zero(flavor=Flavor.COMPACT) -> HodgeTable:
    return HodgeTable((), flavor)


def unit(flavor=Flavor.COMPACT) -> HodgeTable:
    """The one-dimensional table in degree 0 of type (0, 0)."""
    return HodgeTable.of((0, 0, 0), flavor=flavor)


def _check_flavors(a: HodgeTable, b: HodgeTable):
    if a.flavor != b.flavor:
        raise FlavorMismatch(f"cannot combine {a.flavor.value} and {b.flavor.value} tables")


def direct_sum(a: HodgeTable, b: HodgeTable) -> HodgeTable:
    _check_flavors(a, b)
    return HodgeTable(a.classes + b.classes, a.flavor)


def direct_sum_all(tables: Iterable[HodgeTable], flavor=Flavor.COMPACT) -> HodgeTable:
    out = zero(flavor)
    for t in tables:
        out = direct_sum(out, t)
    return out


def tensor(a: HodgeTable, b: HodgeTable) -> HodgeTable:
    _check_flavors(a, b)
    return HodgeTable(
        tuple(
            HodgeClass(x.degree + y.degree, x.hp + y.hp, x.hq + y.hq, x.mult * y.mult)
            for x in a.classes
            for y in b.classes
        ),
        a.flavor,
    )


def tate_twist(v: HodgeTable, k: int) -> HodgeTable:
    """Twist by ``Q(k)``: types shift by ``(-k, -k)``, weights by ``-2k``."""
    return HodgeTable(
        tuple(HodgeClass(c.degree, c.hp - k, c.hq - k, c.mult) for c in v.classes), v.flavor
    )


def poincare_dual(v: HodgeTable, d: int) -> HodgeTable:
    """Poincare duality for a smooth connected variety of complex dimension ``d``.

    Sends ``(i, p, q)`` to ``(2d - i, d - p, d - q)`` and flips the flavor.
    """
    out = []
    for c in v.classes:
        i = 2 * d - c.degree
        if not 0 <= i <= 2 * d:
            raise ValueError(f"degree {c.degree} does not dualize into [0, {2 * d}]")
        out.append(HodgeClass(i, d - c.hp, d - c.hq, c.mult))
    return HodgeTable(tuple(out), v.flavor.flipped())


def epoly(v: HodgeTable) -> EPoly:
    """Hodge-Deligne polynomial of a compactly supported table."""
    if v.flavor is not Flavor.COMPACT:
        raise ValueError("E-polynomials are defined from compactly supported cohomology")
    coeffs: dict[tuple[int, int], int] = {}
    for c in v.classes:
        k = (c.hp, c.hq)
        coeffs[k] = coeffs.get(k, 0) + (-1) ** c.degree * c.mult
    return EPoly(coeffs)


def betti(v: HodgeTable) -> tuple[int, ...]:
    if v.is_empty():
        return ()
    dims = [0] * (max(v.degrees()) + 1)
    for c in v.classes:
        dims[c.degree] += c.mult
    return tuple(dims)


def euler_characteristic(v: HodgeTable) -> int:
    return sum((-1) ** c.degree * c.mult for c in v.classes)


@dataclass(frozen=True)
class WindowReport:
    passed: bool
    violations: tuple[HodgeClass, ...]
    dimension: int
    flavor: Flavor

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "dimension": self.dimension,
            "flavor": self.flavor.value,
            "violations": [
                {"degree": c.degree, "p": c.hp, "q": c.hq, "mult": c.mult} for c in self.violations
            ],
        }


def weight_window(degree: int, d: int, flavor: Flavor) -> tuple[int, int]:
    """Admissible weight range in ``degree`` for a smooth variety of dimension ``d``."""
    if Flavor(flavor) is Flavor.ORDINARY:
        return degree, 2 * degree
    return 2 * degree - 2 * d, degree


def weight_window_check(v: HodgeTable, d: int) -> WindowReport:
    bad = []
    for c in v.classes:
        lo, hi = weight_window(c.degree, d, v.flavor)
        if not lo <= c.weight <= hi:
            bad.append(c)
    return WindowReport(not bad, tuple(bad), d, v.flavor)
