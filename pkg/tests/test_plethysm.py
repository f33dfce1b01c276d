import itertools
from math import comb

import pytest
import sympy
from hypothesis import given, settings

from symstrata.hodge import HodgeTable, betti, unit
from symstrata.plethysm import ext_plain, graded_sym, graded_summand, sym_plain

from conftest import tables

HC_GM = HodgeTable.of((1, 0, 0), (2, 1, 1))
HC_P1 = HodgeTable.of((0, 0, 0), (2, 1, 1))


def basis(v):
    """Expand a table into its individual basis vectors (with indices to keep them distinct)."""
    return [(c.key, j) for c in v.classes for j in range(c.mult)]


def enumerate_power(v, k, exterior):
    """Brute-force Sym^k / Lambda^k by listing multisets / subsets of basis vectors."""
    pick = itertools.combinations if exterior else itertools.combinations_with_replacement
    counts = {}
    for choice in pick(basis(v), k):
        key = tuple(sum(b[0][i] for b in choice) for i in range(3))
        counts[key] = counts.get(key, 0) + 1
    return HodgeTable.from_counts(counts, v.flavor)


class TestSymPlain:
    def test_zero_power_is_unit(self):
        assert sym_plain(HC_GM, 0) == unit()

    @pytest.mark.parametrize("p", range(6))
    def test_odd_generator(self, p):
        assert sym_plain(HodgeTable.of((1, 0, 0)), p) == HodgeTable.of((p, 0, 0))

    @pytest.mark.parametrize("k", range(6))
    def test_even_generator(self, k):
        assert sym_plain(HodgeTable.of((2, 1, 1)), k) == HodgeTable.of((2 * k, k, k))

    def test_negative_power_is_zero(self):
        assert sym_plain(HC_GM, -1).is_empty()


class TestExtPlain:
    def test_p1_first_power(self):
        assert ext_plain(HC_P1, 1) == HC_P1

    def test_beyond_dimension(self):
        assert ext_plain(HC_P1, 3).is_empty()

    def test_single(self):
        assert ext_plain(HodgeTable.of((2, 1, 1)), 1) == HodgeTable.of((2, 1, 1))


class TestGradedSym:
    def test_p1_squared_is_plane(self):
        assert graded_sym(HC_P1, 2) == HodgeTable.of((0, 0, 0), (2, 1, 1), (4, 2, 2))

    @pytest.mark.parametrize("k", range(1, 8))
    def test_punctured_line(self, k):
        assert graded_sym(HC_GM, k) == HodgeTable.of((2 * k, k, k), (2 * k - 1, k - 1, k - 1))

    def test_zero_power(self):
        assert graded_sym(HC_GM, 0) == unit()

    @pytest.mark.parametrize("k", range(11))
    def test_projective_space_pattern(self, k):
        assert betti(graded_sym(HC_P1, k)) == tuple(1 - i % 2 for i in range(2 * k + 1))


class TestGradedSummand:
    def test_filter(self):
        assert graded_summand(HC_P1, 2) == HodgeTable.of((2, 1, 1))

    def test_empty(self):
        assert graded_summand(HC_P1, 1).is_empty()

    def test_top_of_plane(self):
        assert graded_summand(graded_sym(HC_P1, 2), 4) == HodgeTable.of((4, 2, 2))


@pytest.mark.parametrize("D", range(1, 7))
@pytest.mark.parametrize("k", range(7))
@pytest.mark.parametrize("degree", [1, 2])
def test_dimension_counts(D, k, degree):
    v = HodgeTable.of((degree, 0, 0, D))
    assert sym_plain(v, k).dim == comb(D + k - 1, k)
    assert ext_plain(v, k).dim == comb(D, k)


@given(tables(max_size=3, max_mult=2))
@settings(max_examples=60, deadline=None)
def test_powers_match_enumeration(v):
    for k in range(4):
        assert sym_plain(v, k) == enumerate_power(v, k, exterior=False)
        assert ext_plain(v, k) == enumerate_power(v, k, exterior=True)


@given(tables(max_size=3, max_mult=2))
@settings(max_examples=40, deadline=None)
def test_graded_sym_dimension_series(v):
    # x^k coefficient of prod_odd (1 + x y^i) * prod_even 1/(1 - x y^i); y tracks degree
    x, y = sympy.symbols("x y")
    gen = sympy.Integer(1)
    for c in v.classes:
        f = (1 + x * y**c.degree) if c.degree % 2 else 1 / (1 - x * y**c.degree)
        gen *= f**c.mult
    ser = sympy.expand(sympy.series(gen, x, 0, 4).removeO())
    for k in range(1, 4):
        expected = sympy.Poly(ser.coeff(x, k), y).as_dict()
        expected = {m[0]: int(a) for m, a in expected.items() if a}
        got = {}
        for c in graded_sym(v, k).classes:
            got[c.degree] = got.get(c.degree, 0) + c.mult
        assert got == expected
