"""Dense polynomials over a prime field, just enough to classify factorization types.

Polynomials are lists of ints in ``[0, p)``, constant term first, with no
trailing zeros (``[]`` is zero).  Nothing here ever finds an actual factor:
squarefree decomposition plus distinct-degree splitting yields the multiset
of (degree, multiplicity) pairs, which is all a stratum count needs.
"""

from __future__ import annotations


def trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def deg(f: list[int]) -> int:
    return len(f) - 1


def sub(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)])


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return trim(out)


def divmod_(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    inv = pow(g[-1], -1, p)
    dg = deg(g)
    qt = [0] * max(len(f) - dg, 0)
    while r and deg(r) >= dg:
        c = r[-1] * inv % p
        shift = deg(r) - dg
        qt[shift] = c
        for j, b in enumerate(g):
            r[shift + j] = (r[shift + j] - c * b) % p
        trim(r)
    return trim(qt), r


def monic(f, p):
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return [a * inv % p for a in f]


def gcd(f, g, p):
    while g:
        f, g = g, divmod_(f, g, p)[1]
    return monic(f, p)


def derivative(f, p):
    return trim([i * a % p for i, a in enumerate(f)][1:])


def powmod(f, e: int, m, p):
    result = [1]
    base = divmod_(f, m, p)[1]
    while e:
        if e & 1:
            result = divmod_(mul(result, base, p), m, p)[1]
        base = divmod_(mul(base, base, p), m, p)[1]
        e >>= 1
    return result


def pth_root(f, p):
    """``g`` with ``g(x)^p = f(x)``; valid when ``f`` only has exponents divisible by ``p``."""
    return [f[i] for i in range(0, len(f), p)]


def squarefree_decomposition(f, p) -> list[tuple[list[int], int]]:
    """Pairs ``(g, e)`` with ``f = prod g^e`` and each ``g`` squarefree; ``f`` monic."""
    out: list[tuple[list[int], int]] = []
    if deg(f) < 1:
        return out
    c = gcd(f, derivative(f, p), p)
    w = divmod_(f, c, p)[0]
    i = 1
    while deg(w) > 0:
        y = gcd(w, c, p)
        z = divmod_(w, y, p)[0]
        if deg(z) > 0:
            out.append((z, i))
        w = y
        c = divmod_(c, y, p)[0]
        i += 1
    if deg(c) > 0:
        out += [(g, e * p) for g, e in squarefree_decomposition(pth_root(c, p), p)]
    return out


def distinct_degree_counts(f, p) -> dict[int, int]:
    """Number of irreducible factors of each degree of a squarefree monic ``f``."""
    counts: dict[int, int] = {}
    x = [0, 1]
    h = x
    d = 1
    while deg(f) >= 2 * d:
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, x, p), p)
        if deg(g) > 0:
            counts[d] = counts.get(d, 0) + deg(g) // d
            f = divmod_(f, g, p)[0]
            h = divmod_(h, f, p)[1]
        d += 1
    if deg(f) > 0:
        counts[deg(f)] = counts.get(deg(f), 0) + 1
    return counts


def factorization_shape(f, p) -> list[tuple[int, int]]:
    """Sorted ``(degree, multiplicity)`` of the irreducible factors of monic ``f``."""
    shape = []
    for g, e in squarefree_decomposition(f, p):
        for d, k in distinct_degree_counts(g, p).items():
            shape += [(d, e)] * k
    return sorted(shape)
