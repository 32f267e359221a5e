"""Independent reference computations used to check the library."""

from __future__ import annotations

import itertools

from repkit.exactfield import Polynomial
from repkit.linalg import Matrix


def _sign(perm) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def leibniz_det(A: Matrix):
    """Sum over permutations; exponential, fine for n <= 6."""
    F, n = A.field, A.rows
    total = F.zero
    for perm in itertools.permutations(range(n)):
        term = F.one
        for i, j in enumerate(perm):
            term = F.mul(term, A.raw(i, j))
        total = F.add(total, term) if _sign(perm) > 0 else F.sub(total, term)
    return total


def det_minus_t(A: Matrix) -> Polynomial:
    """det(A - tI) by Leibniz expansion with polynomial entries."""
    F, n = A.field, A.rows
    t = Polynomial.variable(F)
    entries = [
        [Polynomial._from_raw(F, [A.raw(i, j)]) - (t if i == j else Polynomial._from_raw(F, [])) for j in range(n)]
        for i in range(n)
    ]
    total = Polynomial._from_raw(F, [])
    for perm in itertools.permutations(range(n)):
        term = Polynomial.constant(F, 1)
        for i, j in enumerate(perm):
            term = term * entries[i][j]
        total = total + term if _sign(perm) > 0 else total - term
    return total


def det_minus_t_elimination(A: Matrix) -> Polynomial:
    """det(A - tI) by fraction-free (Bareiss) elimination over F[t].

    The k-th pivot is a leading principal minor of A - tI, a polynomial of
    degree k + 1, so no row swaps are needed and every division is exact.
    """
    F, n = A.field, A.rows
    t = Polynomial.variable(F)
    M = [[Polynomial._from_raw(F, [A.raw(i, j)]) - (t if i == j else Polynomial._from_raw(F, [])) for j in range(n)] for i in range(n)]
    prev = Polynomial.constant(F, 1)
    for k in range(n - 1):
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                q, r = divmod(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev)
                assert r == Polynomial._from_raw(F, [])
                M[i][j] = q
        prev = M[k][k]
    return M[n - 1][n - 1]


def cofactor_adjugate(A: Matrix) -> Matrix:
    F, n = A.field, A.rows
    if n == 1:
        return Matrix._raw(F, [[F.one]], 1, 1)
    data = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = Matrix._raw(
                F, [[A.raw(r, c) for c in range(n) if c != j] for r in range(n) if r != i], n - 1, n - 1
            )
            d = leibniz_det(minor)
            data[j][i] = d if (i + j) % 2 == 0 else F.neg(d)
    return Matrix._raw(F, data, n, n)


def gf2_invariant_lines(matrices) -> list[tuple[int, int]]:
    """All 1-dimensional subspaces of GF(2)^2 fixed by every matrix (matrices as 0/1 nested lists)."""
    lines = [(1, 0), (0, 1), (1, 1)]
    out = []
    for v in lines:
        ok = True
        for M in matrices:
            w = tuple((M[i][0] * v[0] + M[i][1] * v[1]) % 2 for i in range(2))
            if w != v and w != (0, 0):
                ok = False
        if ok:
            out.append(v)
    return out


def permutation_compose(s, t):
    """(s t)(i) = s(t(i))."""
    return tuple(s[t[i]] for i in range(len(t)))
