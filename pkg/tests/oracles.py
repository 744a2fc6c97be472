"""Independent reference computations used by the tests.

Deliberately naive: dense lists of Fractions, textbook Gaussian elimination,
brute-force enumeration.  Nothing here imports the package under test.
"""

from fractions import Fraction
from itertools import product
from math import comb


def dense_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def dense_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]) if b else 0)] for i in range(len(a))]


def dense_nullity(rows, ncols):
    return ncols - dense_rank(rows)


def binomial_convolution(f, g, n):
    return sum(comb(n, k) * f[k] * g[n - k] for k in range(n + 1))


def group_coend_dim(elements, mul, inv):
    """Number of conjugacy classes, by orbit enumeration."""
    seen, classes = set(), 0
    for x in elements:
        if x in seen:
            continue
        classes += 1
        for g in elements:
            seen.add(mul(mul(g, x), inv(g)))
    return classes


def cyclic_multiplicative_violations(n, m, kernel):
    """Brute-force multiplicativity of a Z/n -> Z/m kernel ``kernel(a, x) in {0,1}``.

    For discrete groups with the monoidal convolution the conditions are
    ``Σ_{x+y=z} K(a,x)K(b,y) = Σ_c [a+b=c] K(c,z)`` and ``K(0,x) = [x=0]``.
    Returns ``(a, b, z, lhs, rhs)`` tuples that fail.
    """
    out = []
    for a, b, z in product(range(n), range(n), range(m)):
        lhs = sum(kernel(a, x) * kernel(b, (z - x) % m) for x in range(m))
        rhs = kernel((a + b) % n, z)
        if lhs != rhs:
            out.append((a, b, z, lhs, rhs))
    return out


def closed_subsets(carrier, closed):
    """All subsets of ``carrier`` accepted by the predicate."""
    carrier = list(carrier)
    out = []
    for mask in range(1 << len(carrier)):
        s = frozenset(x for i, x in enumerate(carrier) if mask >> i & 1)
        if closed(s):
            out.append(s)
    return out
