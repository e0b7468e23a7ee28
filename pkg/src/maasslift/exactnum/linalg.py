"""Exact dense linear algebra over small matrices (lists of lists).

Dimensions here are tiny (Hecke matrices, symbol spaces: < 100), so clarity
wins over asymptotics.  charpoly is Berkowitz's division-free algorithm and
therefore valid over any commutative coefficient ring, not just fields.
"""

from ..errors import DomainError
from .poly import Poly, QQ


def identity(n, ring=QQ):
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def mat_mul(a, b, ring=QQ):
    n, k, m = len(a), len(b), len(b[0])
    z = ring.zero
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = z
            for t in range(k):
                acc = acc + ai[t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a, v, ring=QQ):
    z = ring.zero
    out = []
    for row in a:
        acc = z
        for x, y in zip(row, v):
            acc = acc + x * y
        out.append(acc)
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def charpoly(matrix, ring=QQ) -> Poly:
    """det(xI - M) by the Berkowitz algorithm (division-free)."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DomainError("characteristic polynomial needs a square matrix")
    z, one = ring.zero, ring.one
    if n == 0:
        return Poly([one], ring)
    # vec holds the coefficients of charpoly of the leading r x r block,
    # highest degree first, length r + 1
    vec = [one, -matrix[0][0]]
    for r in range(1, n):
        m_block = [row[:r] for row in matrix[:r]]
        row_r = matrix[r][:r]
        col_r = [matrix[i][r] for i in range(r)]
        a_rr = matrix[r][r]
        # Toeplitz column: [1, -a_rr, -R S, -R M S, -R M^2 S, ...]
        toep = [one, -a_rr]
        vcur = col_r
        for _ in range(r):
            acc = z
            for x, y in zip(row_r, vcur):
                acc = acc + x * y
            toep.append(-acc)
            vcur = mat_vec(m_block, vcur, ring)
        new = [z] * (r + 2)
        for i in range(r + 2):
            acc = z
            for j in range(min(i, r) + 1):
                acc = acc + toep[i - j] * vec[j] if i - j < len(toep) else acc
            new[i] = acc
        vec = new
    return Poly(list(reversed(vec)), ring)


def rref(matrix, ring=QQ):
    """Reduced row echelon form; returns (new_matrix, pivot_columns)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    z = ring.zero
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != z:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ring.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != z:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def kernel_basis(matrix, ring=QQ):
    """Basis of the right kernel of the matrix, as a list of vectors."""
    if not matrix:
        return []
    red, pivots = rref(matrix, ring)
    ncols = len(matrix[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ring.zero] * ncols
        v[fc] = ring.one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(matrix, rhs, ring=QQ):
    """One solution of M x = rhs, or None if inconsistent."""
    n = len(matrix)
    ncols = len(matrix[0])
    aug = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    red, pivots = rref(aug, ring)
    for row in red:
        if all(x == ring.zero for x in row[:-1]) and row[-1] != ring.zero:
            return None
    x = [ring.zero] * ncols
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = red[r][ncols]
    return x


def smith_normal_form(mat):
    """(U, D, V) with U*mat*V = D diagonal, U and V unimodular (small sizes)."""
    a = [list(map(int, row)) for row in mat]
    n = len(a)
    m = len(a[0]) if a else 0
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def addmul_col(dst, src, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    t = 0
    while t < min(n, m):
        piv = None
        for i in range(t, n):
            for j in range(t, m):
                if a[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            done = True
            for i in range(t + 1, n):
                if a[i][t]:
                    addmul_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        swap_rows(t, i)
                    done = False
            for j in range(t + 1, m):
                if a[t][j]:
                    addmul_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(t, j)
                    done = False
            if done:
                break
        if a[t][t] < 0:
            addmul_row(t, t, -2)
        t += 1
    return u, a, v


def integer_kernel(mat):
    """Basis of the saturated integer kernel of an integer matrix (as rows)."""
    if not mat:
        return []
    m = len(mat[0])
    _u, d, v = smith_normal_form(mat)
    rank = sum(1 for i in range(min(len(d), m)) if d[i][i] != 0)
    return [[v[i][j] for i in range(m)] for j in range(rank, m)]


def hermite_row_basis(rows):
    """Z-basis (row Hermite form, nonzero rows) of the row lattice of rows."""
    a = [list(map(int, r)) for r in rows if any(r)]
    if not a:
        return []
    m = len(a[0])
    r = 0
    for c in range(m):
        piv = None
        for i in range(r, len(a)):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        # clear the column below via euclidean steps
        changed = True
        while changed:
            changed = False
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        a[r], a[i] = a[i], a[r]
                        changed = True
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return [row for row in a[:r] if any(row)]


def det(matrix, ring=QQ):
    """Determinant by exact Gaussian elimination (field ring)."""
    n = len(matrix)
    rows = [list(r) for r in matrix]
    z = ring.zero
    out = ring.one
    for c in range(n):
        piv = None
        for r in range(c, n):
            if rows[r][c] != z:
                piv = r
                break
        if piv is None:
            return z
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            out = -out
        out = out * rows[c][c]
        inv = ring.one / rows[c][c]
        for r in range(c + 1, n):
            if rows[r][c] != z:
                f = rows[r][c] * inv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return out
