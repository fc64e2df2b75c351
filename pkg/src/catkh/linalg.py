"""Dense exact linear algebra over a pluggable field.

Matrices are lists of row lists.  Dimensions here are tiny (graded
pieces of quotient rings, Hom blocks), so plain Gaussian elimination is
the right tool; everything is exact.
"""


def zeros(F, m, n):
    z = F.zero
    return [[z] * n for _ in range(m)]


def identity(F, n):
    A = zeros(F, n, n)
    for i in range(n):
        A[i][i] = F.one
    return A


def mat_copy(A):
    return [row[:] for row in A]


def shape(A):
    return (len(A), len(A[0]) if A else 0)


def mat_mul(F, A, B):
    m = len(A)
    k = len(A[0]) if A else 0
    n = len(B[0]) if B else 0
    assert k == len(B), "shape mismatch"
    C = zeros(F, m, n)
    for i in range(m):
        Ai = A[i]
        Ci = C[i]
        for t in range(k):
            a = Ai[t]
            if F.is_zero(a):
                continue
            Bt = B[t]
            for j in range(n):
                b = Bt[j]
                if not F.is_zero(b):
                    Ci[j] = F.add(Ci[j], F.mul(a, b))
    return C


def mat_add(F, A, B):
    assert shape(A) == shape(B)
    return [[F.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(F, A, B):
    assert shape(A) == shape(B)
    return [[F.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(F, c, A):
    return [[F.mul(c, a) for a in row] for row in A]


def mat_neg(F, A):
    return [[F.neg(a) for a in row] for row in A]


def mat_vec(F, A, v):
    assert (len(A[0]) if A else 0) == len(v)
    out = []
    for row in A:
        s = F.zero
        for a, x in zip(row, v):
            if not (F.is_zero(a) or F.is_zero(x)):
                s = F.add(s, F.mul(a, x))
        out.append(s)
    return out


def is_zero_matrix(F, A):
    return all(F.is_zero(a) for row in A for a in row)


def mat_eq(F, A, B):
    return shape(A) == shape(B) and all(
        F.eq(a, b) for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def transpose(A):
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def rref(F, A):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    R = mat_copy(A)
    m, n = shape(R)
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if not F.is_zero(R[i][c]):
                piv = i
                break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = F.inv(R[r][c])
        R[r] = [F.mul(inv, x) for x in R[r]]
        for i in range(m):
            if i != r and not F.is_zero(R[i][c]):
                f = R[i][c]
                R[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, pivots


def rank(F, A):
    if not A or not A[0]:
        return 0
    return len(rref(F, A)[1])


def nullspace(F, A):
    """Basis of the right kernel of A, as a list of vectors."""
    m, n = shape(A)
    if n == 0:
        return []
    R, pivots = rref(F, A)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = []
    for fc in free:
        v = [F.zero] * n
        v[fc] = F.one
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(R[r][fc])
        basis.append(v)
    return basis


def solve(F, A, b):
    """One solution x of A x = b, or None if inconsistent."""
    m, n = shape(A)
    assert len(b) == m
    aug = [A[i][:] + [b[i]] for i in range(m)]
    R, pivots = rref(F, aug)
    for r, pc in enumerate(pivots):
        if pc == n:
            return None
    x = [F.zero] * n
    for r, pc in enumerate(pivots):
        x[pc] = R[r][n]
    return x


def solve_matrix(F, A, B):
    """One solution X of A X = B (columnwise), or None."""
    m, n = shape(A)
    mb, k = shape(B)
    assert m == mb
    aug = [A[i][:] + B[i][:] for i in range(m)]
    R, pivots = rref(F, aug)
    for pc in pivots:
        if pc >= n:
            return None
    X = zeros(F, n, k)
    for r, pc in enumerate(pivots):
        for j in range(k):
            X[pc][j] = R[r][n + j]
    return X


def inv(F, A):
    """Inverse of a square matrix, or None if singular."""
    n = len(A)
    if n == 0:
        return []
    assert len(A[0]) == n
    X = solve_matrix(F, A, identity(F, n))
    if X is None:
        return None
    if not mat_eq(F, mat_mul(F, A, X), identity(F, n)):
        return None
    return X


def is_invertible(F, A):
    m, n = shape(A)
    return m == n and (n == 0 or rank(F, A) == n)


class SpanSolver:
    """Incremental echelonized span with expression bookkeeping.

    Vectors are added with a tag; afterwards `express(v)` writes v as a
    combination of the added vectors (a dict tag -> coefficient) or
    returns None when v is outside the span.
    """

    def __init__(self, F, dim):
        self.F = F
        self.dim = dim
        self.rows = []    # echelon rows
        self.combos = []  # combo[i]: dict tag -> coeff with rows[i] = sum combo * added
        self.pivots = []  # pivot index of rows[i]

    def _reduce(self, v, combo):
        F = self.F
        v = v[:]
        for i, p in enumerate(self.pivots):
            c = v[p]
            if F.is_zero(c):
                continue
            row = self.rows[i]
            for j in range(self.dim):
                if not F.is_zero(row[j]):
                    v[j] = F.sub(v[j], F.mul(c, row[j]))
            for t, x in self.combos[i].items():
                combo[t] = F.sub(combo.get(t, F.zero), F.mul(c, x))
        return v, combo

    def add(self, v, tag):
        """Add a vector; returns True if it enlarged the span."""
        F = self.F
        assert len(v) == self.dim
        v, combo = self._reduce(v, {tag: F.one})
        piv = next((j for j in range(self.dim) if not F.is_zero(v[j])), None)
        if piv is None:
            return False
        c = F.inv(v[piv])
        v = [F.mul(c, x) for x in v]
        combo = {t: F.mul(c, x) for t, x in combo.items()}
        self.rows.append(v)
        self.combos.append(combo)
        self.pivots.append(piv)
        return True

    def rank(self):
        return len(self.rows)

    def contains(self, v):
        res, _ = self._reduce(v, {})
        return all(self.F.is_zero(x) for x in res)

    def express(self, v):
        """Write v as {tag: coeff} over the added vectors, or None."""
        F = self.F
        res, combo = self._reduce(v, {})
        if any(not F.is_zero(x) for x in res):
            return None
        out = {t: F.neg(c) for t, c in combo.items() if not F.is_zero(c)}
        return out
