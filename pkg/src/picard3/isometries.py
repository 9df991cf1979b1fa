"""The rank-3 discriminant-kernel isomorphism as algorithms: isometries from
Clifford units (h, phi, and the family matrix P), Clifford lifts of
isometries, spinor norms, and bounded unit enumeration for the lattices
U(k) + <2l>.

The unit-to-isometry map is h_alpha(v) = eps * alpha v alpha^{-1} with
eps = +1 for even alpha and -1 for odd alpha; it lands in the discriminant
kernel, has det = eps, and every kernel isometry arises this way (up to the
sign of alpha).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from .clifford import (CliffordElement, EvenCliffordElement, GramParams,
                       OddCliffordElement, clifford_mul, norm, reversal)
from .lattice import (Lattice, in_discriminant_kernel, is_isometry,
                      preserves_positive_cone, signature)
from .linalg import (identity, is_integral, kernel_basis, mat, mat_mul,
                     mat_scale, primitive_vector, squarefree_part, to_int,
                     transpose)

_GEN_MASKS = (1, 2, 4)  # E1, E2, E3


class Isometry3:
    """A 3x3 integer isometry of a rank-3 even lattice, with cached flags."""

    def __init__(self, matrix, lat: Lattice):
        self.matrix = mat(matrix)
        self.lattice = lat
        if not is_isometry(self.matrix, lat):
            raise ValueError("matrix does not preserve the form")

    def __eq__(self, other):
        return (isinstance(other, Isometry3)
                and self.matrix == other.matrix
                and self.lattice == other.lattice)

    def __hash__(self):
        return hash((self.matrix, self.lattice.gram))

    def __repr__(self):
        return f"Isometry3({self.matrix})"

    @cached_property
    def det(self) -> int:
        from .linalg import det
        return int(det(self.matrix))

    @cached_property
    def in_kernel(self) -> bool:
        return in_discriminant_kernel(self.matrix, self.lattice)

    @cached_property
    def preserves_cone(self) -> bool:
        return preserves_positive_cone(self.matrix, self.lattice)

    def to_json(self) -> dict:
        return {"g": [list(r) for r in self.matrix]}


@dataclass(frozen=True)
class CliffordUnit:
    """A unit of Cl+-(L): integral pure-grade element with N = +-1, mod sign.

    The stored element is the sign-class representative whose first nonzero
    coordinate is positive.
    """

    element: object  # EvenCliffordElement | OddCliffordElement
    grade: str       # "even" | "odd"
    norm: int

    @staticmethod
    def from_element(elem, params: GramParams) -> "CliffordUnit":
        if isinstance(elem, EvenCliffordElement):
            grade, full = "even", elem.to_full(params)
        elif isinstance(elem, OddCliffordElement):
            grade, full = "odd", elem.to_full()
        else:
            raise TypeError("need an even or odd Clifford element")
        if not elem.is_integral:
            raise ValueError("unit must have integral coordinates")
        n = norm(full, params)
        if n not in (1, -1):
            raise ValueError(f"not a unit: N = {n}")
        coords = _normalize_sign(elem.coords)
        cls = EvenCliffordElement if grade == "even" else OddCliffordElement
        return CliffordUnit(cls(*coords), grade, n)

    def full(self, params: GramParams) -> CliffordElement:
        if self.grade == "even":
            return self.element.to_full(params)
        return self.element.to_full()

    def to_json(self, params: GramParams) -> dict:
        out = self.full(params).to_json()
        out["grade"] = self.grade
        return out


def _normalize_sign(coords):
    for x in coords:
        if x != 0:
            return coords if x > 0 else tuple(-v for v in coords)
    raise ValueError("zero element is not a unit")


def unit_product(u1: CliffordUnit, u2: CliffordUnit,
                 params: GramParams) -> CliffordUnit:
    """Product of two units (grades multiply by parity)."""
    full = clifford_mul(u1.full(params), u2.full(params), params)
    if full.is_even:
        elem = EvenCliffordElement.from_full(full, params)
    else:
        elem = OddCliffordElement.from_full(full)
    return CliffordUnit.from_element(elem, params)


def _conjugation_matrix(alpha: CliffordElement, eps: int,
                        params: GramParams):
    """Matrix of v -> eps * alpha v alpha^{-1} on (E1, E2, E3)."""
    n = norm(alpha, params)
    astar = reversal(alpha, params)
    cols = []
    for m in _GEN_MASKS:
        img = clifford_mul(clifford_mul(alpha, CliffordElement.basis(m), params),
                           astar, params)
        img = img.scale(Fraction(eps, 1) / n)
        oc = OddCliffordElement.from_full(img)
        if oc.x4 != 0:
            raise AssertionError("conjugation image left L (x) Q")
        cols.append((oc.x1, oc.x2, oc.x3))
    return mat(tuple(zip(*cols)))


def h_alpha(unit: CliffordUnit, params: GramParams) -> Isometry3:
    """The kernel isometry h_alpha: v -> eps_alpha * alpha v alpha^{-1}."""
    eps = 1 if unit.grade == "even" else -1
    g = _conjugation_matrix(unit.full(params), eps, params)
    if not is_integral(g):
        raise AssertionError("h_alpha is not integral")
    iso = Isometry3(to_int(g), Lattice(params.gram))
    if iso.det != eps:
        raise AssertionError("det(h_alpha) != eps_alpha")
    return iso


def g_alpha(unit: CliffordUnit, params: GramParams):
    """Plain conjugation v -> alpha v alpha^{-1} (determinant +1)."""
    return to_int(_conjugation_matrix(unit.full(params), 1, params))


def phi_alpha(unit: CliffordUnit, params: GramParams) -> Isometry3:
    """phi_alpha = eps*(N alpha)*h_alpha = (v -> alpha v alpha*); det = N alpha."""
    h = h_alpha(unit, params)
    eps = 1 if unit.grade == "even" else -1
    gm = to_int(mat_scale(eps * unit.norm, h.matrix))
    iso = Isometry3(gm, h.lattice)
    if iso.det != unit.norm:
        raise AssertionError("det(phi_alpha) != N alpha")
    return iso


def clifford_lift(g, params: GramParams):
    """Solve alpha * Ei = det(g) * g(Ei) * alpha for the lift of an isometry.

    The solution space over the 4-dimensional even part (det g = 1) or odd
    part (det g = -1) is one-dimensional for genuine isometries; the
    primitive integral representative is returned (sign fixed by the first
    nonzero coordinate), together with its norm N.  g lies in the
    discriminant kernel iff N = +-1.
    """
    lat = Lattice(params.gram)
    iso = g if isinstance(g, Isometry3) else Isometry3(g, lat)
    eps = iso.det
    if eps == 1:
        basis = [EvenCliffordElement(*[int(i == j) for j in range(4)]).to_full(params)
                 for i in range(4)]
        from_full = lambda x: EvenCliffordElement.from_full(x, params)
    else:
        basis = [OddCliffordElement(*[int(i == j) for j in range(4)]).to_full()
                 for i in range(4)]
        from_full = OddCliffordElement.from_full

    # rows of the homogeneous system over the odd (resp. even) 4-space
    rows = []
    for i, m in enumerate(_GEN_MASKS):
        v = CliffordElement.basis(m)
        gv = CliffordElement.vector(tuple(iso.matrix[r][i] for r in range(3)))
        cols = []
        for bj in basis:
            term = clifford_mul(bj, v, params) - clifford_mul(gv, bj, params).scale(eps)
            if eps == 1:
                cols.append(OddCliffordElement.from_full(term).coords)
            else:
                cols.append(EvenCliffordElement.from_full(term, params).coords)
        for r in range(4):
            rows.append(tuple(col[r] for col in cols))

    ker = kernel_basis(mat(rows))
    if len(ker) == 0:
        raise ValueError("no Clifford lift: g is not an isometry of L (x) Q")
    if len(ker) != 1:
        raise ValueError(f"lift space has dimension {len(ker)}")
    coords = primitive_vector(ker[0])
    if eps == 1:
        elem = EvenCliffordElement(*coords)
        full = elem.to_full(params)
    else:
        elem = OddCliffordElement(*coords)
        full = elem.to_full()
    n = norm(full, params)
    # consistency: the lift must reproduce g
    check = _conjugation_matrix(full, eps, params)
    if check != mat(iso.matrix):
        raise AssertionError("lift does not reproduce g")
    return elem, n


def spinor_norm(g, params: GramParams) -> int:
    """theta(g): the square class of N(lift), as a squarefree integer."""
    _, n = clifford_lift(g, params)
    if n == 0:
        raise ValueError("lift has norm 0")
    num = Fraction(n)
    return squarefree_part(num.numerator * num.denominator)


def p_alpha_matrix(alpha, k: int, l: int) -> Isometry3:
    """The printed ternary matrix P_alpha for alpha in B_{k,l}, det = +-1.

    P_alpha represents phi_alpha on U(k) + <2l> under the basis
    ((k/2) te1, -l te2, (k/2) te3) of the twisted lattice; it satisfies
    P^T Q P = (ad - bc)^2 Q = Q exactly.
    """
    (a, b), (c, d) = alpha[0], alpha[1]
    if (a - d) % k != 0 or c % k != 0 or b % l != 0:
        raise ValueError("alpha is not in B_{k,l}")
    dt = a * d - b * c
    if dt not in (1, -1):
        raise ValueError("det(alpha) must be +-1")
    rows = [
        [a * a, 2 * a * b, Fraction(-k, l) * b * b],
        [a * c, a * d + b * c, Fraction(-k, l) * b * d],
        [Fraction(-l, k) * c * c, Fraction(-l, k) * 2 * c * d, d * d],
    ]
    p = to_int(mat(rows))
    lat = Lattice(((0, 0, k), (0, 2 * l, 0), (k, 0, 0)))
    return Isometry3(p, lat)


def family_unit(alpha, k: int, l: int) -> CliffordUnit:
    """The even Clifford unit corresponding to a B_{k,l} matrix.

    Under e1 = [[0,l],[0,0]], e2 = [[k,0],[0,0]], e3 = [[0,0],[k,0]] the
    matrix [[a,b],[c,d]] has coordinates (d, b/l, (a-d)/k, c/k).
    """
    (a, b), (c, d) = alpha[0], alpha[1]
    if (a - d) % k != 0 or c % k != 0 or b % l != 0:
        raise ValueError("alpha is not in B_{k,l}")
    params = GramParams(0, l, 0, 0, k, 0)
    elem = EvenCliffordElement(d, Fraction(b, l), Fraction(a - d, k),
                               Fraction(c, k))
    return CliffordUnit.from_element(elem, params)


def unit_search_even(k: int, l: int, bound: int):
    """All alpha in B_{k,l} with |entries| <= bound and det = +-1, mod +-1.

    Returned as 2x2 integer matrices sorted lexicographically by (a, b, c, d),
    each normalized so its first nonzero entry is positive.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    found = {(1, 0, 0, 1)}  # the identity class is a unit of every order
    kk, ll = abs(k), abs(l)
    bs = range(-(bound // ll) * ll, bound + 1, ll)
    cs = range(-(bound // kk) * kk, bound + 1, kk)
    for a in range(-bound, bound + 1):
        if a == 0:
            for b in bs:
                for c in cs:
                    if b * c in (1, -1):
                        for d in range(-(bound // kk) * kk, bound + 1, kk):
                            found.add(_norm2x2((0, b, c, d)))
            continue
        for b in bs:
            for c in cs:
                for eps in (1, -1):
                    num = eps + b * c
                    if num % a != 0:
                        continue
                    d = num // a
                    if abs(d) <= bound and (a - d) % k == 0:
                        found.add(_norm2x2((a, b, c, d)))
    return tuple(mat([[a, b], [c, d]]) for a, b, c, d in sorted(found))


def _norm2x2(entries):
    for x in entries:
        if x != 0:
            return entries if x > 0 else tuple(-v for v in entries)
    raise ValueError("zero matrix")


def _bounded_divisor_pairs(m: int, bound: int):
    """All (x, y) with x*y = m and |x|, |y| <= bound (m != 0)."""
    am = abs(m)
    for x in range(1, bound + 1):
        if am % x == 0:
            y = am // x
            if y <= bound:
                s = 1 if m > 0 else -1
                yield (x, s * y)
                yield (-x, -s * y)


def v_set_search(k: int, l: int, bound: int):
    """All odd elements with |coords| <= bound solving k x1 x3 + l x2 (x2 - k x4) = +-1.

    Deduplicated mod +-1 and sorted by (x1, x2, x3, x4).  Empty exactly when
    the halved family lattice represents neither +1 nor -1 (for bounds large
    enough to witness a solution).
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    found = set()
    for x2 in range(-bound, bound + 1):
        for x4 in range(-bound, bound + 1):
            base = l * x2 * (x2 - k * x4)
            for eps in (1, -1):
                r = eps - base
                if r == 0:
                    for t in range(-bound, bound + 1):
                        found.add(_norm_v((0, x2, t, x4)))
                        found.add(_norm_v((t, x2, 0, x4)))
                    continue
                if r % k != 0:
                    continue
                for x1, x3 in _bounded_divisor_pairs(r // k, bound):
                    found.add(_norm_v((x1, x2, x3, x4)))
    out = []
    for x1, x2, x3, x4 in sorted(found):
        out.append(OddCliffordElement(x4, x1, x2, x3))
    return tuple(out)


def _norm_v(t):
    for x in t:
        if x != 0:
            return t if x > 0 else tuple(-v for v in t)
    raise ValueError("zero solution impossible")


def seeded_units(k: int, l: int, count: int, seed: int,
                 gen_bound: int = 3, word_length: int = 5):
    """Deterministic pseudo-random units of Cl+-(U(k)+<2l>), for test suites.

    Generators come from the bounded searches; units are random words in
    them.  Both grades occur whenever the odd coset is nonempty.
    """
    import random as _random

    params = GramParams(0, l, 0, 0, k, 0)
    b = gen_bound
    while True:
        gens = [family_unit(m, k, l) for m in unit_search_even(k, l, b)]
        gens = [u for u in gens if u.element.coords != (1, 0, 0, 0)]
        if gens or b > 64 * max(abs(k), abs(l)):
            break
        b *= 2
    for odd in v_set_search(k, l, 2)[:6]:
        gens.append(CliffordUnit.from_element(odd, params))
    if not gens:
        raise ValueError("no nontrivial generators found; raise gen_bound")
    rng = _random.Random(seed)
    out = []
    for _ in range(count):
        u = CliffordUnit.from_element(EvenCliffordElement(1, 0, 0, 0), params)
        for _ in range(rng.randint(1, word_length)):
            u = unit_product(u, rng.choice(gens), params)
        out.append(u)
    return out


def isometry_scan(lat: Lattice, bound: int):
    """All isometries of a rank-3 lattice with |entries| <= bound (brute force).

    Desk-scale oracle used by tests; columns are constrained to the correct
    diagonal Gram values before assembling candidates.
    """
    q = lat.gram
    from itertools import product as _product

    cols = list(_product(range(-bound, bound + 1), repeat=3))
    by_val = {}
    for v in cols:
        val = sum(v[i] * q[i][j] * v[j] for i in range(3) for j in range(3))
        by_val.setdefault(val, []).append(v)
    out = []
    for c1 in by_val.get(q[0][0], []):
        for c2 in by_val.get(q[1][1], []):
            if sum(c1[i] * q[i][j] * c2[j] for i in range(3) for j in range(3)) != q[0][1]:
                continue
            for c3 in by_val.get(q[2][2], []):
                if sum(c1[i] * q[i][j] * c3[j] for i in range(3) for j in range(3)) != q[0][2]:
                    continue
                if sum(c2[i] * q[i][j] * c3[j] for i in range(3) for j in range(3)) != q[1][2]:
                    continue
                g = mat(tuple(zip(c1, c2, c3)))
                from .linalg import det as _det
                if _det(g) in (1, -1):
                    out.append(Isometry3(g, lat))
    return out
