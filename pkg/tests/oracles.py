"""Independent oracles for the test suite.

These deliberately avoid the elimination routines of the package:
determinants come from the Leibniz permutation expansion, ranks from
the largest nonvanishing minor, and equation solving from brute
enumeration where feasible.  Slow but obviously correct at desk scale.
"""

from fractions import Fraction
from itertools import combinations, permutations


def leibniz_det(rows):
    """Permutation-expansion determinant over exact scalars (n <= 7)."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        # count inversions for the sign
        inv = sum(
            1 for i in range(n) for j in range(i + 1, n) if seen[i] > seen[j]
        )
        sign = -1 if inv % 2 else 1
        term = sign
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term
    return total


def minor_rank(rows, nonzero=lambda v: v != 0):
    """Rank as the size of the largest minor with nonvanishing determinant."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    for size in range(min(nrows, ncols), 0, -1):
        for rs in combinations(range(nrows), size):
            for cs in combinations(range(ncols), size):
                minor = [[rows[i][j] for j in cs] for i in rs]
                if nonzero(leibniz_det(minor)):
                    return size
    return 0


def mod_p_nonzero(p):
    return lambda v: v % p != 0


def brute_kernel_dim_fp(rows, p, ncols):
    """Kernel dimension over F_p by enumerating all vectors (tiny cases)."""
    count = 0
    total = p ** ncols
    for code in range(total):
        vec = []
        c = code
        for _ in range(ncols):
            c, r = divmod(c, p)
            vec.append(r)
        if all(sum(row[j] * vec[j] for j in range(ncols)) % p == 0 for row in rows):
            count += 1
    # count = p^dim
    dim = 0
    while p ** dim < count:
        dim += 1
    assert p ** dim == count
    return dim


def frac(a, b=1):
    return Fraction(a, b)
