"""E-polynomial side: Kapranov zeta functions and classes of strata."""

from __future__ import annotations

from symstrata import arith
from symstrata.polys import EPoly, Series, binomial_series


def kapranov_zeta(e: EPoly, order: int) -> Series:
    """``prod (1 - u^p v^q t)^(-a)`` over the terms ``a u^p v^q`` of ``e``.

    The coefficient of ``t^n`` is the E-polynomial of ``Sym^n``.
    """
    if any(p < 0 or q < 0 for (p, q) in e.coeffs):
        raise ValueError("kapranov_zeta needs monomials with nonnegative exponents")
    z = Series.one(order, EPoly.constant(1))
    for (p, q), a in e.items():
        z = z * binomial_series(EPoly.monomial(p, q), a, order)
    return z.map(_as_epoly)


def _as_epoly(c) -> EPoly:
    return c if isinstance(c, EPoly) else EPoly.constant(c)


def e_sym(e: EPoly, n: int) -> EPoly:
    return kapranov_zeta(e, n)[n]


def e_uconf(e: EPoly, n: int) -> EPoly:
    """Class of ``UConf_n``: the ``t^n`` coefficient of ``Z(t) / Z(t^2)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    z = kapranov_zeta(e, n)
    return _as_epoly((z / z.substitute_power(2))[n])


def e_wlambda_p1(lam, primes=None) -> EPoly:
    """Class of ``w_lambda(P^1)``: its interpolated count with ``q -> uv``."""
    lam = arith.Partition.of(lam)
    primes = primes or arith.default_primes(lam)
    poly = arith.interpolate(lam, primes)
    if not poly.is_integral():
        raise AssertionError(f"non-integral class for {lam}")
    out = EPoly({(k, k): int(poly.coeff(k)) for k in range(poly.degree + 1)})
    if not out.is_tate():
        raise AssertionError(f"non-Tate class for {lam}")
    return out
