"""Exact linear algebra over the integers and rationals.

Everything in this package runs on Python ints and ``fractions.Fraction``;
no floating point is used anywhere.  Matrices are immutable tuples of tuples,
vectors are tuples.  The matrices that occur are tiny (at most 6x6), so the
implementations favour clarity over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Matrix = tuple  # tuple of row tuples
Vector = tuple


def mat(rows) -> Matrix:
    """Freeze a nested sequence into a matrix (tuple of row tuples)."""
    return tuple(tuple(r) for r in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero(n: int, m: int) -> Matrix:
    return tuple((0,) * m for _ in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_dot(u: Vector, v: Vector):
    return sum(x * y for x, y in zip(u, v))


def is_integral(a) -> bool:
    """True if every entry of a matrix or vector is an integer."""
    rows = a if a and isinstance(a[0], tuple) else (a,)
    return all(Fraction(x).denominator == 1 for row in rows for x in row)


def to_int(a: Matrix) -> Matrix:
    """Cast an integral matrix to plain ints (raises if any entry is not)."""
    out = []
    for row in a:
        r = []
        for x in row:
            f = Fraction(x)
            if f.denominator != 1:
                raise ValueError(f"entry {x} is not an integer")
            r.append(f.numerator)
        out.append(tuple(r))
    return tuple(out)


def det(a: Matrix):
    """Determinant by fraction-free-ish Gaussian elimination."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    sign = 1
    for i in range(n):
        piv = next((r for r in range(i, n) if m[r][i] != 0), None)
        if piv is None:
            return 0
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            sign = -sign
        for r in range(i + 1, n):
            f = m[r][i] / m[i][i]
            for c in range(i, n):
                m[r][c] -= f * m[i][c]
    prod = sign
    for i in range(n):
        prod *= m[i][i]
    return prod.numerator if prod.denominator == 1 else prod


def inverse(a: Matrix) -> Matrix:
    """Exact inverse via Gauss-Jordan; raises ValueError if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for i in range(n):
        piv = next((r for r in range(i, n) if m[r][i] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[i], m[piv] = m[piv], m[i]
        inv = 1 / m[i][i]
        m[i] = [x * inv for x in m[i]]
        for r in range(n):
            if r != i and m[r][i] != 0:
                f = m[r][i]
                m[r] = [x - f * y for x, y in zip(m[r], m[i])]
    return tuple(tuple(row[n:]) for row in m)


def kernel_basis(a: Matrix) -> tuple:
    """Basis of the right null space of a (rows x cols), as exact vectors."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [[Fraction(x) for x in row] for row in a]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(tuple(v))
    return tuple(basis)


def primitive_vector(v: Vector) -> Vector:
    """Scale a nonzero rational vector to a primitive integer vector.

    Clears denominators, divides by the content, and fixes the sign so the
    first nonzero coordinate is positive.
    """
    fr = [Fraction(x) for x in v]
    if all(x == 0 for x in fr):
        raise ValueError("zero vector has no primitive representative")
    denom = 1
    for x in fr:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def smith_normal_form(a: Matrix):
    """Smith normal form with transforms: returns (d, u, v) with u*a*v = d.

    u and v are unimodular; d is diagonal with nonnegative entries satisfying
    d[i] | d[i+1].
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [list(row) for row in a]
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    def row_op(i, j, q):  # row i -= q * row j
        m[i] = [x - q * y for x, y in zip(m[i], m[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col i -= q * col j
        for r in range(rows):
            m[r][i] -= q * m[r][j]
        for r in range(cols):
            v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(rows):
            m[r][i], m[r][j] = m[r][j], m[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    t = 0
    while t < min(rows, cols):
        # move a smallest-magnitude nonzero entry to the pivot slot
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    row_op(i, t, q)
                    if m[i][t] != 0:  # remainder smaller than pivot: swap up
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    col_op(j, t, q)
                    if m[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
        # pivot must divide the remaining block
        for i in range(t + 1, rows):
            bad = next((j for j in range(t + 1, cols) if m[i][j] % m[t][t] != 0), None)
            if bad is not None:
                row_op(t, i, -1)  # add row i to row t, then restart reduction
                break
        else:
            t += 1
            continue
    # normalize signs
    for i in range(min(rows, cols)):
        if m[i][i] < 0:
            m[i] = [-x for x in m[i]]
            u[i] = [-x for x in u[i]]
    d = mat(m)
    return d, mat(u), mat(v)


def symmetric_diagonalize(q: Matrix):
    """Rational congruence diagonalization: returns (p, d) with p^T q p = d.

    p is invertible over Q and d is diagonal.  Used for exact signatures and
    for producing vectors of known sign.
    """
    n = len(q)
    m = [[Fraction(x) for x in row] for row in q]
    p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def col_axpy(dst, src, f):  # col dst += f * col src, on m (both sides) and p
        for r in range(n):
            m[r][dst] += f * m[r][src]
        for r in range(n):
            m[dst][r] += f * m[src][r]
        for r in range(n):
            p[r][dst] += f * p[r][src]

    def col_swap(i, j):
        for r in range(n):
            m[r][i], m[r][j] = m[r][j], m[r][i]
        m[i], m[j] = m[j], m[i]
        for r in range(n):
            p[r][i], p[r][j] = p[r][j], p[r][i]

    for i in range(n):
        if m[i][i] == 0:
            j = next((k for k in range(i + 1, n) if m[k][k] != 0), None)
            if j is not None:
                col_swap(i, j)
            else:
                j = next((k for k in range(i + 1, n) if m[i][k] != 0), None)
                if j is None:
                    continue  # row/col i entirely zero
                col_axpy(i, j, Fraction(1))  # now m[i][i] = 2*m[i][j] != 0
        for j in range(i + 1, n):
            if m[i][j] != 0:
                col_axpy(j, i, -m[i][j] / m[i][i])
    return mat(p), mat(m)


def signature_of(q: Matrix):
    """(s_plus, s_minus) of a symmetric rational matrix, exactly."""
    _, d = symmetric_diagonalize(q)
    plus = sum(1 for i in range(len(d)) if d[i][i] > 0)
    minus = sum(1 for i in range(len(d)) if d[i][i] < 0)
    return plus, minus


def positive_vector(q: Matrix) -> Vector:
    """An integer vector v with v^T q v > 0; requires s_plus >= 1."""
    p, d = symmetric_diagonalize(q)
    for i in range(len(d)):
        if d[i][i] > 0:
            col = tuple(p[r][i] for r in range(len(d)))
            return primitive_vector(col)
    raise ValueError("form is negative semidefinite")


def char_poly_3x3(a: Matrix):
    """Coefficients (c3, c2, c1, c0) of det(tI - a) = c3 t^3 + c2 t^2 + c1 t + c0."""
    tr = a[0][0] + a[1][1] + a[2][2]
    m01 = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    m02 = a[0][0] * a[2][2] - a[0][2] * a[2][0]
    m12 = a[1][1] * a[2][2] - a[1][2] * a[2][1]
    return (1, -tr, m01 + m02 + m12, -det(a))


def squarefree_part(n: int) -> int:
    """The squarefree integer representing n modulo nonzero rational squares."""
    if n == 0:
        raise ValueError("0 has no square class")
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            out *= p
        p += 1
    return sign * out * n
