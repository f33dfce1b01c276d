"""Symmetric and exterior powers of HodgeTables.

Two conventions coexist and must not be confused:

* ``sym_plain`` / ``ext_plain`` ignore cohomological parity entirely.  The
  E1 term of the configuration-space spectral sequence applies plain Sym to
  the odd part and plain Lambda to the even part of ``H_c(X)``.
* ``graded_sym`` is the Koszul-signed symmetric power (exterior on odd
  classes, symmetric on even ones), which computes ``H_c(Sym^k X)``.

Negative powers give the zero table so that summation loops can run over
out-of-range indices without special cases.
"""

from __future__ import annotations

from math import comb

from symstrata.hodge import HodgeClass, HodgeTable, direct_sum, tensor, unit, zero


def _power(v: HodgeTable, k: int, count) -> HodgeTable:
    # DP over classes: state maps (chosen so far, degree, p, q) -> multiplicity
    if k < 0:
        return zero(v.flavor)
    states: dict[tuple[int, int, int, int], int] = {(0, 0, 0, 0): 1}
    for c in v.classes:
        nxt: dict[tuple[int, int, int, int], int] = {}
        for (n, d, p, q), m in states.items():
            for j in range(k - n + 1):
                w = count(c.mult, j)
                if not w:
                    continue
                key = (n + j, d + j * c.degree, p + j * c.hp, q + j * c.hq)
                nxt[key] = nxt.get(key, 0) + m * w
        states = nxt
    return HodgeTable(
        tuple(HodgeClass(d, p, q, m) for (n, d, p, q), m in states.items() if n == k and m),
        v.flavor,
    )


def sym_plain(v: HodgeTable, k: int) -> HodgeTable:
    """``Sym^k`` of ``v`` viewed as an ungraded space; gradings add."""
    return _power(v, k, lambda m, j: comb(m + j - 1, j))


def ext_plain(v: HodgeTable, k: int) -> HodgeTable:
    """``Lambda^k`` of ``v`` viewed as an ungraded space; gradings add."""
    return _power(v, k, comb)


def graded_sym(v: HodgeTable, k: int) -> HodgeTable:
    """Koszul symmetric power: ``sum_{a+b=k} Lambda^a(odd) (x) Sym^b(even)``."""
    if k < 0:
        return zero(v.flavor)
    if k == 0:
        return unit(v.flavor)
    odd, even = v.odd_part(), v.even_part()
    out = zero(v.flavor)
    for a in range(k + 1):
        out = direct_sum(out, tensor(ext_plain(odd, a), sym_plain(even, k - a)))
    return out


def graded_summand(v: HodgeTable, degree: int) -> HodgeTable:
    return HodgeTable(tuple(c for c in v.classes if c.degree == degree), v.flavor)
