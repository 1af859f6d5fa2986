"""Exact linear algebra over any field whose elements support +, -, *, /
and truthiness (zero test).  Used with Fraction, square-root towers and
cyclotomic fields alike.  Matrices are lists of lists, row major.
"""

from __future__ import annotations

from fractions import Fraction


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    assert len(A[0]) == k
    return [
        [sum((A[i][t] * B[t][j] for t in range(1, k)), A[i][0] * B[0][j]) for j in range(m)]
        for i in range(n)
    ]


def mat_vec(A, v):
    return [sum((A[i][t] * v[t] for t in range(1, len(v))), A[i][0] * v[0]) for i in range(len(A))]


def transpose(A):
    return [list(col) for col in zip(*A)]


def identity(n, one=Fraction(1)):
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def scale_mat(A, c):
    return [[c * x for x in row] for row in A]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_eq(A, B) -> bool:
    if len(A) != len(B) or len(A[0]) != len(B[0]):
        return False
    return all(not (a - b) for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def _echelon(M):
    """In-place row reduction; returns list of pivot column indices."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv_lead = M[r][c]
        M[r] = [x / inv_lead for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def rank(A) -> int:
    if not A or not A[0]:
        return 0
    M = [list(row) for row in A]
    return len(_echelon(M))


def kernel_basis(A, one=None):
    """Basis of the right kernel of A, as a list of vectors.

    `one` may be supplied when A could be the zero matrix over a field
    whose unit cannot be inferred from the entries.
    """
    rows, cols = len(A), len(A[0])
    M = [list(row) for row in A]
    pivots = _echelon(M)
    sample = A[0][0]
    zero = sample - sample
    if one is None:
        one = _unit_like(A) if any(any(x for x in row) for row in A) else Fraction(1)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * cols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = zero - M[r][fc]
        basis.append(v)
    return basis


def _unit_like(A):
    for row in A:
        for x in row:
            if x:
                return x / x
    raise ValueError("cannot infer field unit from zero matrix")


def solve(A, b):
    """One solution x of A x = b, or None if inconsistent."""
    rows, cols = len(A), len(A[0])
    M = [list(A[i]) + [b[i]] for i in range(rows)]
    pivots = _echelon(M)
    if cols in pivots:
        return None
    sample = A[0][0]
    zero = sample - sample
    x = [zero] * cols
    for r, pc in enumerate(pivots):
        x[pc] = M[r][cols]
    return x


def inverse(A):
    """Matrix inverse; raises ValueError if singular."""
    n = len(A)
    sample = A[0][0]
    zero = sample - sample
    one = _unit_like(A)
    M = [list(A[i]) + [one if i == j else zero for j in range(n)] for i in range(n)]
    pivots = _echelon(M)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in M]


def det(A):
    """Determinant by fraction-free-ish elimination with exact division."""
    n = len(A)
    M = [list(row) for row in A]
    sample = A[0][0]
    zero = sample - sample
    d = _unit_like(A) if any(any(x for x in row) for row in A) else None
    if d is None:
        return zero
    sign_flip = False
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return zero
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            sign_flip = not sign_flip
        d = d * M[c][c]
        inv_lead = M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] / inv_lead
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return zero - d if sign_flip else d


def column_space_equal(A, B) -> bool:
    """Whether two matrices with the same row count have equal column spans."""
    ra = rank(A)
    rb = rank(B)
    if ra != rb:
        return False
    stacked = [list(r1) + list(r2) for r1, r2 in zip(A, B)]
    return rank(stacked) == ra
