"""Spectral-sequence pages: construction, admissible differentials, resolution.

Every page uses the cohomological shape ``d_r: (p, q) -> (p + r, q - r + 1)``,
which is ``(+1, 0)`` on page 1 for the configuration-space sequence and
``(+2, -1)`` on page 2 for a Serre sequence.  Classes stored in the entry at
``(p, q)`` always carry total degree ``p + q``.

Differentials are never guessed.  ``admissible_differentials`` bounds what a
differential could do given positions and Hodge types; ``resolve`` needs the
actual ranks supplied by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from symstrata.hodge import Flavor, HodgeTable, direct_sum, tensor, zero
from symstrata.plethysm import ext_plain, graded_sym, graded_summand, sym_plain


class ResolutionError(ValueError):
    pass


def shape(r: int) -> tuple[int, int]:
    return (r, 1 - r)


@dataclass(frozen=True)
class Page:
    entries: Mapping[tuple[int, int], HodgeTable]
    page_index: int = 1
    flavor: Flavor = Flavor.COMPACT

    def __post_init__(self):
        if self.page_index < 1:
            raise ValueError("page index must be >= 1")
        clean = {}
        for (p, q), t in sorted(self.entries.items()):
            if t.is_empty():
                continue
            if t.flavor != self.flavor:
                raise ValueError(f"entry ({p},{q}) has flavor {t.flavor.value}")
            if any(c.degree != p + q for c in t.classes):
                raise ValueError(f"entry ({p},{q}) holds classes off total degree {p + q}")
            clean[(p, q)] = t
        object.__setattr__(self, "entries", clean)
        object.__setattr__(self, "flavor", Flavor(self.flavor))

    @property
    def shape(self) -> tuple[int, int]:
        return shape(self.page_index)

    def get(self, p: int, q: int) -> HodgeTable:
        return self.entries.get((p, q), zero(self.flavor))

    def dims(self) -> dict[tuple[int, int], int]:
        return {k: t.dim for k, t in self.entries.items()}

    def at_index(self, r: int) -> Page:
        return Page(self.entries, r, self.flavor)

    def total(self) -> HodgeTable:
        out = zero(self.flavor)
        for t in self.entries.values():
            out = direct_sum(out, t)
        return out

    def to_json(self) -> dict:
        return {
            "page_index": self.page_index,
            "shape": list(self.shape),
            "flavor": self.flavor.value,
            "entries": [
                {"p": p, "q": q, "table": t.to_json()} for (p, q), t in self.entries.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Page:
        entries = {(e["p"], e["q"]): HodgeTable.from_json(e["table"]) for e in data["entries"]}
        return cls(entries, data["page_index"], Flavor(data.get("flavor", "compact")))

    def grid_tsv(self) -> str:
        """Dimensions as a grid: rows are q descending, columns p ascending."""
        if not self.entries:
            return "q\\p\n"
        ps = range(0, max(p for p, _ in self.entries) + 1)
        qs = range(max(q for _, q in self.entries), min(0, *(q for _, q in self.entries)) - 1, -1)
        lines = ["q\\p\t" + "\t".join(str(p) for p in ps)]
        for q in qs:
            cells = [str(self.get(p, q).dim) if (p, q) in self.entries else "." for p in ps]
            lines.append(f"{q}\t" + "\t".join(cells))
        return "\n".join(lines) + "\n"


def _shift_to_total(t: HodgeTable, p: int, q: int) -> HodgeTable:
    return t.regraded(p + q)


def e1_page(hcX: HodgeTable, n: int) -> Page:
    """E1 page of the semi-filtration sequence converging to ``H_c(UConf_n X)``.

    The entry at ``(p, q)`` is the sum over ``l + m = q`` and ``i + j = p`` of
    the degree-``l`` part of ``Sym^i(odd) (x) Lambda^j(even)`` tensored with
    the degree-``m`` part of ``H_c(Sym^{n-2p} X)``.
    """
    if hcX.flavor is not Flavor.COMPACT:
        raise ValueError("e1_page expects compactly supported cohomology")
    if n < 1:
        raise ValueError("n must be >= 1")
    odd, even = hcX.odd_part(), hcX.even_part()
    entries: dict[tuple[int, int], HodgeTable] = {}
    for p in range(n // 2 + 1):
        left = zero()
        for i in range(p + 1):
            left = direct_sum(left, tensor(sym_plain(odd, i), ext_plain(even, p - i)))
        right = graded_sym(hcX, n - 2 * p)
        for l in left.degrees():
            for m in right.degrees():
                piece = tensor(graded_summand(left, l), graded_summand(right, m))
                q = l + m
                prev = entries.get((p, q), zero())
                entries[(p, q)] = direct_sum(prev, _shift_to_total(piece, p, q))
    return Page(entries, 1, Flavor.COMPACT)


def _degree_slice(t: HodgeTable, degree: int) -> HodgeTable:
    return graded_summand(t, degree)


def serre_e2(
    base_triv: HodgeTable,
    base_sign: HodgeTable,
    fiber_triv: HodgeTable,
    fiber_sign: HodgeTable,
) -> Page:
    """E2 page of a Serre sequence with monodromy through a group of order two.

    Entry ``(p, q)`` is ``base_triv^p (x) fiber_triv^q`` plus
    ``base_sign^p (x) fiber_sign^q``.  Pass empty sign parts for trivial
    monodromy.
    """
    tables = (base_triv, base_sign, fiber_triv, fiber_sign)
    if any(t.flavor is not Flavor.ORDINARY for t in tables):
        raise ValueError("serre_e2 works with ordinary cohomology")
    entries: dict[tuple[int, int], HodgeTable] = {}
    for base, fiber in ((base_triv, fiber_triv), (base_sign, fiber_sign)):
        for p in base.degrees():
            for q in fiber.degrees():
                piece = tensor(_degree_slice(base, p), _degree_slice(fiber, q))
                prev = entries.get((p, q), zero(Flavor.ORDINARY))
                entries[(p, q)] = direct_sum(prev, piece)
    return Page(entries, 2, Flavor.ORDINARY)


@dataclass(frozen=True)
class Differential:
    source: tuple[int, int]
    target: tuple[int, int]
    max_rank: int
    type_bounds: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "source": list(self.source),
            "target": list(self.target),
            "max_rank": self.max_rank,
            "type_bounds": [
                {"p": hp, "q": hq, "bound": b} for (hp, hq), b in sorted(self.type_bounds.items())
            ],
        }


def admissible_differentials(page: Page, r: int | None = None) -> list[Differential]:
    """Every nonzero-to-nonzero position pair for ``d_r`` with its type-preserving bound."""
    r = page.page_index if r is None else r
    dp, dq = shape(r)
    out = []
    for (p, q), src in page.entries.items():
        tgt = page.entries.get((p + dp, q + dq))
        if tgt is None:
            continue
        a, b = src.types(), tgt.types()
        bounds = {t: min(a[t], b[t]) for t in sorted(a) if t in b}
        out.append(Differential((p, q), (p + dp, q + dq), sum(bounds.values()), bounds))
    return out


def _span(page: Page) -> int:
    if not page.entries:
        return 0
    ps = [p for p, _ in page.entries]
    return max(ps) - min(ps)


RankSpec = int | Mapping[tuple[int, int], int]


def _type_ranks(d: Differential, spec: RankSpec) -> dict[tuple[int, int], int]:
    if isinstance(spec, Mapping):
        ranks = {tuple(t): int(k) for t, k in spec.items() if k}
        for t, k in ranks.items():
            if k < 0 or k > d.type_bounds.get(t, 0):
                raise ResolutionError(
                    f"rank {k} of type {t} at {d.source} exceeds bound {d.type_bounds.get(t, 0)}"
                )
        return ranks
    k = int(spec)
    if k < 0 or k > d.max_rank:
        raise ResolutionError(f"rank {k} at {d.source} exceeds bound {d.max_rank}")
    if k == 0:
        return {}
    if k == d.max_rank:
        return {t: b for t, b in d.type_bounds.items() if b}
    live = [t for t, b in d.type_bounds.items() if b]
    if len(live) > 1:
        raise ResolutionError(
            f"rank {k} at {d.source} is ambiguous across Hodge types {live}; give per-type ranks"
        )
    return {live[0]: k}


def _remove(t: HodgeTable, hp: int, hq: int, k: int) -> HodgeTable:
    counts = t.counts
    for key in counts:
        if key[1:] == (hp, hq):
            counts[key] -= k
    return HodgeTable.from_counts(counts, t.flavor)


def cancel(page: Page, ranks: Mapping[tuple[int, int], RankSpec]) -> Page:
    """The next page after a differential with the given ranks on ``page``."""
    diffs = {d.source: d for d in admissible_differentials(page)}
    entries = dict(page.entries)
    for src, spec in ranks.items():
        src = tuple(src)
        d = diffs.get(src)
        if d is None:
            if (isinstance(spec, Mapping) and any(spec.values())) or (
                not isinstance(spec, Mapping) and spec
            ):
                raise ResolutionError(f"no admissible differential leaves {src}")
            continue
        for (hp, hq), k in _type_ranks(d, spec).items():
            entries[d.source] = _remove(entries[d.source], hp, hq, k)
            entries[d.target] = _remove(entries[d.target], hp, hq, k)
    return Page(entries, page.page_index + 1, page.flavor)


def pending_differentials(page: Page, decided=()) -> list[Differential]:
    """Differentials with nonzero bound still open on ``page`` or any later page.

    Sources listed in ``decided`` are exempt on ``page`` itself.
    """
    decided = {tuple(s) for s in decided}
    out = [d for d in admissible_differentials(page) if d.max_rank and d.source not in decided]
    for r in range(page.page_index + 1, _span(page) + 1):
        out += [d for d in admissible_differentials(page, r) if d.max_rank]
    return out


def resolve(page: Page, ranks: Mapping[tuple[int, int], RankSpec] | None = None) -> HodgeTable:
    """Abutment of ``page`` after cancelling the given ranks.

    ``ranks`` maps a source position to either a total rank (allowed when the
    Hodge type of the cancelled classes is unambiguous) or a per-type map
    ``{(hp, hq): rank}``.  Raises ``ResolutionError`` if a rank exceeds its
    admissible bound or if any differential with nonzero bound is left
    undecided, on this page or on a later one.
    """
    ranks = {tuple(k): v for k, v in (ranks or {}).items()}
    open_now = pending_differentials(page, ranks)
    after = cancel(page, ranks)
    problems = [d for d in open_now if _is_same_page(d, page.page_index)]
    problems += pending_differentials(after)
    if problems:
        desc = ", ".join(f"{d.source}->{d.target} (<= {d.max_rank})" for d in problems)
        raise ResolutionError(f"undecided differentials remain: {desc}")
    return after.total()


def _is_same_page(d: Differential, r: int) -> bool:
    return (d.target[0] - d.source[0], d.target[1] - d.source[1]) == shape(r)


@dataclass(frozen=True)
class EulerReport:
    passed: bool
    ledger: Mapping[tuple[int, int], tuple[int, int]]

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "ledger": [
                {"p": hp, "q": hq, "page": a, "target": b}
                for (hp, hq), (a, b) in sorted(self.ledger.items())
            ],
        }


def abutment_euler_check(page: Page, target: HodgeTable) -> EulerReport:
    """Compare per-type alternating sums of a page and a claimed abutment."""
    if page.flavor != target.flavor:
        raise ValueError("page and target flavors differ")
    lhs: dict[tuple[int, int], int] = {}
    for (p, q), t in page.entries.items():
        for c in t.classes:
            lhs[(c.hp, c.hq)] = lhs.get((c.hp, c.hq), 0) + (-1) ** (p + q) * c.mult
    rhs: dict[tuple[int, int], int] = {}
    for c in target.classes:
        rhs[(c.hp, c.hq)] = rhs.get((c.hp, c.hq), 0) + (-1) ** c.degree * c.mult
    ledger = {t: (lhs.get(t, 0), rhs.get(t, 0)) for t in sorted(set(lhs) | set(rhs))}
    return EulerReport(all(a == b for a, b in ledger.values()), ledger)
