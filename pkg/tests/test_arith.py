import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor, gf_irreducible_p

from symstrata import arith, gfpoly
from symstrata.polys import QPoly

q = QPoly.q()


def sympy_shape(f, p):
    """Factorization shape via sympy (coefficients highest degree first there)."""
    _, factors = gf_factor([ZZ(c) for c in reversed(f)], p, ZZ)
    return sorted((len(g) - 1, e) for g, e in factors)


def oracle_type_counts(m, p):
    """Divisor types of degree m on P^1 over F_p, classified with sympy's factorizer."""
    counts = {}
    for j in range(m + 1):
        for tail in itertools.product(range(p), repeat=m - j):
            f = list(tail) + [1]
            parts = [e for d, e in sympy_shape(f, p) for _ in range(d)] + ([j] if j else [])
            key = tuple(sorted(parts))
            counts[key] = counts.get(key, 0) + 1
    return counts


class TestGFPoly:
    @pytest.mark.parametrize("p, k", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 3), (3, 4), (5, 3)])
    def test_shapes_exhaustive(self, p, k):
        for tail in itertools.product(range(p), repeat=k):
            f = list(tail) + [1]
            assert gfpoly.factorization_shape(f, p) == sympy_shape(f, p), f

    @pytest.mark.parametrize("p", [5, 7, 11])
    def test_shapes_random(self, p):
        rng = random.Random(p)
        for _ in range(200):
            k = rng.randint(1, 9)
            f = [rng.randrange(p) for _ in range(k)] + [1]
            assert gfpoly.factorization_shape(f, p) == sympy_shape(f, p), f

    def test_pth_power_factor(self):
        # (x+1)^4 over F_2 has zero derivative
        f = [1, 0, 0, 0, 1]
        assert gfpoly.factorization_shape(f, 2) == [(1, 4)]
        # (x^2+x+1)^3 * x over F_3
        g = gfpoly.mul(gfpoly.mul(gfpoly.mul([1, 1, 1], [1, 1, 1], 3), [1, 1, 1], 3), [0, 1], 3)
        assert gfpoly.factorization_shape(g, 3) == [(1, 1), (1, 6)]

    def test_divmod(self):
        f = [1, 2, 0, 1]
        g = [1, 1]
        qt, r = gfpoly.divmod_(f, g, 5)
        assert gfpoly.sub(f, gfpoly.mul(qt, g, 5), 5) == r


class TestClosedPoints:
    @pytest.mark.parametrize("d, p, expected", [(1, 2, 3), (2, 2, 1), (3, 2, 2)])
    def test_examples(self, d, p, expected):
        assert arith.closed_point_count(d, p) == expected

    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_against_irreducible_enumeration(self, p, d):
        if p**d > 700:
            pytest.skip("enumeration too large")
        n = sum(
            gf_irreducible_p([ZZ(1)] + [ZZ(c) for c in tail], p, ZZ)
            for tail in itertools.product(range(p), repeat=d)
        )
        assert arith.closed_point_count(d, p) == n


class TestBrute:
    @pytest.mark.parametrize(
        "lam, p, expected", [((1, 1), 2, 4), ((2, 2, 1, 1), 2, 6), ((1,), 5, 6)]
    )
    def test_examples(self, lam, p, expected):
        assert arith.count_brute(lam, p).count == expected

    @pytest.mark.parametrize("m, p", [(1, 3), (2, 3), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2)])
    def test_histogram_against_sympy(self, m, p):
        assert dict(arith.divisor_type_histogram(m, p)) == oracle_type_counts(m, p)

    def test_histogram_total_is_sym_count(self):
        for m in range(5):
            assert sum(arith.divisor_type_histogram(m, 3).values()) == sum(3**k for k in range(m + 1))

    def test_budget(self):
        with pytest.raises(arith.BudgetExceeded):
            arith.count_brute((1, 1, 1, 1), 5, budget=100)

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            arith.count_brute((1,), 4)


class TestFast:
    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
    def test_closed_forms(self, p):
        assert arith.count_fast((2,), p).count == p + 1
        assert arith.count_fast((1, 2), p).count == p * (p + 1)
        assert arith.count_fast((1, 1), p).count == p * p

    def test_examples(self):
        assert arith.count_fast((2,), 3).count == 4
        assert arith.count_fast((1, 2), 2).count == 6
        assert arith.count_fast((1, 1), 2).count == 4

    @pytest.mark.parametrize("p", [2, 3])
    def test_matches_brute_total_up_to_five(self, p):
        for m in range(1, 6):
            for part in sympy.utilities.iterables.partitions(m):
                lam = [k for k, v in part.items() for _ in range(v)]
                assert arith.count_fast(lam, p).count == arith.count_brute(lam, p).count, lam


class TestZeta:
    def test_nothing_removed(self):
        z = arith.zeta_complement([], 5)
        for n in range(6):
            assert z[n] == sum((q**k for k in range(n + 1)), QPoly())

    def test_two_rational_points(self):
        z = arith.zeta_complement(arith.TWO_RATIONAL, 5)
        assert z[0] == 1
        for n in range(1, 6):
            assert z[n] == q**n - q ** (n - 1)

    def test_one_quadratic_point(self):
        z = arith.zeta_complement(arith.ONE_QUADRATIC, 5)
        for n in range(1, 6):
            assert z[n] == q**n + q ** (n - 1)

    def test_truncation_guard(self):
        with pytest.raises(IndexError):
            arith.zeta_complement([], 3)[4]


def squarefree_avoiding(p, n, bad):
    """Brute force: monic squarefree degree-n polys over F_p coprime to ``bad`` (high-first)."""
    total = 0
    for tail in itertools.product(range(p), repeat=n):
        f = [1] + list(tail)
        _, factors = gf_factor([ZZ(c) for c in f], p, ZZ)
        if any(e > 1 for _, e in factors):
            continue
        if any(g == [ZZ(c) for c in bad] for g, _ in factors):
            continue
        total += 1
    return total


class TestUConf:
    def test_two_rational(self):
        assert arith.uconf_count(arith.TWO_RATIONAL, 2, 3) == 4
        assert arith.uconf_poly(arith.TWO_RATIONAL, 2) == (q - 1) ** 2

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
    def test_two_rational_closed_form(self, p):
        assert arith.uconf_count(arith.TWO_RATIONAL, 2, p) == (p - 1) ** 2

    def test_one_quadratic(self):
        assert arith.uconf_count(arith.ONE_QUADRATIC, 2, 2) == 3
        assert arith.uconf_poly(arith.ONE_QUADRATIC, 2) == q**2 - 1

    def test_empty(self):
        assert arith.uconf_count(arith.TWO_RATIONAL, 0, 5) == 1

    @pytest.mark.parametrize("p, n", [(3, 2), (3, 3), (5, 2), (5, 3), (3, 4)])
    def test_brute_two_rational(self, p, n):
        # removing 0 and infinity: squarefree monic affine polys not divisible by x
        assert arith.uconf_count(arith.TWO_RATIONAL, n, p) == squarefree_avoiding(p, n, [1, 0])

    @pytest.mark.parametrize("p, n", [(3, 2), (3, 3), (5, 2), (2, 4)])
    def test_brute_one_quadratic(self, p, n):
        # with infinity allowed: a squarefree divisor of degree n is either a squarefree
        # degree-n poly or infinity plus a squarefree degree-(n-1) poly
        irr = {2: [1, 1, 1], 3: [1, 0, 1], 5: [1, 0, 2]}[p]
        expected = squarefree_avoiding(p, n, irr) + squarefree_avoiding(p, n - 1, irr)
        assert arith.uconf_count(arith.ONE_QUADRATIC, n, p) == expected


class TestStrata:
    def test_n2_q2(self):
        assert arith.count_strata_w1n22(2, 2).count == 6

    def test_n2_symbolic(self):
        assert arith.strata_w1n22_poly(2) == q**4 - q**3 - q**2 + q

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_n0(self, p):
        assert arith.count_strata_w1n22(0, p).count == p * p

    @pytest.mark.parametrize("n", range(6))
    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_matches_fast(self, n, p):
        assert arith.count_strata_w1n22(n, p).count == arith.count_fast(arith.w1n22(n), p).count


class TestInterpolate:
    def test_two_points(self):
        assert arith.interpolate((1, 1), [2, 3, 5]) == q**2

    def test_w1n22(self):
        poly = arith.interpolate((2, 2, 1, 1), [2, 3, 5, 7, 11])
        assert poly == q**4 - q**3 - q**2 + q
        assert poly(2) == 6

    def test_line(self):
        assert arith.interpolate((1,), [2, 3]) == q + 1

    def test_too_few_primes(self):
        with pytest.raises(ValueError):
            arith.interpolate((1, 1), [2, 3])

    def test_lagrange_against_sympy(self):
        pts = [(2, 7), (3, -1), (5, 4), (7, 10)]
        x = sympy.Symbol("x")
        ref = sympy.Poly(sympy.interpolate(pts, x), x)
        ours = arith.lagrange(pts)
        assert [Fraction(int(c.p), int(c.q)) for c in reversed(ref.all_coeffs())] == ours.coefficients()

    @pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (1, 2), (1, 1, 1), (3,), (1, 1, 2), (2, 2, 1, 1)])
    def test_reproduces_inputs(self, lam):
        primes = arith.default_primes(lam)
        poly = arith.interpolate(lam, primes)
        assert poly.is_integral()
        assert poly.degree == len(lam)
        for p in primes:
            assert poly(p) == arith.count_fast(lam, p).count


class TestPartition:
    def test_parse(self):
        lam = arith.parse_partition("2,1,2,1")
        assert lam.parts == (1, 1, 2, 2)
        assert lam.total == 6
        assert lam.multiplicities == {1: 2, 2: 2}
        assert str(lam) == "1,1,2,2"

    @pytest.mark.parametrize("text", ["", "1,x", "0,1", "-1"])
    def test_malformed(self, text):
        with pytest.raises(ValueError):
            arith.parse_partition(text)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=4), st.sampled_from([2, 3, 5, 7]))
@settings(max_examples=40, deadline=None)
def test_fast_count_nonnegative_and_polynomial(parts, p):
    lam = arith.Partition(tuple(parts))
    poly = arith.interpolate(lam, arith.default_primes(lam))
    assert arith.count_fast(lam, p).count == poly(p) >= 0


def test_fast_count_large_field():
    # closed-point numbers run into the millions here; the count must stay cheap
    lam = (1,) * 6
    poly = arith.interpolate(lam, arith.default_primes(lam))
    assert arith.count_fast(lam, 101).count == poly(101)
