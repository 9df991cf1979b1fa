"""Even integer lattices: discriminants, duals, discriminant groups and forms,
discriminant-kernel and positive-cone tests, and the family representability
criterion.

A lattice is its symmetric integer Gram matrix.  Degenerate or odd lattices
are rejected at construction.  All values are exact; q-values live in Q/2Z on
the diagonal and Q/Z off it, stored as reduced ``Fraction`` representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .linalg import (det, identity, inverse, is_integral, mat, mat_mul,
                     mat_vec, positive_vector, signature_of, transpose,
                     vec_dot)


@dataclass(frozen=True)
class Lattice:
    """An even non-degenerate lattice, identified with its Gram matrix."""

    gram: tuple

    def __post_init__(self):
        g = mat(self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
                if not isinstance(g[i][j], int):
                    raise ValueError("Gram entries must be integers")
            if g[i][i] % 2 != 0:
                raise ValueError("lattice must be even (even diagonal)")
        if det(g) == 0:
            raise ValueError("lattice must be non-degenerate")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def pairing(self, x, y):
        """<x, y> extended to rational coordinate vectors."""
        return vec_dot(x, mat_vec(self.gram, y))

    def to_json(self) -> dict:
        return {"gram": [list(row) for row in self.gram]}


def family_lattice(k: int, l: int) -> Lattice:
    """U(k) + <2l> with Gram [[0,0,k],[0,2l,0],[k,0,0]]."""
    if k == 0 or l == 0:
        raise ValueError("k and l must be nonzero")
    return Lattice(((0, 0, k), (0, 2 * l, 0), (k, 0, 0)))


def m_n_lattice(n: int) -> Lattice:
    """M_n = U(n) + <-2n>."""
    if n == 0:
        raise ValueError("n must be nonzero")
    return Lattice(((0, 0, n), (0, -2 * n, 0), (n, 0, 0)))


def lattice_from_json(obj) -> Lattice:
    """Parse {"gram": ...} or the family shorthands accepted everywhere."""
    if "gram" in obj:
        return Lattice(tuple(tuple(row) for row in obj["gram"]))
    fam = obj.get("family")
    if fam == "U(k)+<2l>":
        return family_lattice(int(obj["k"]), int(obj["l"]))
    if fam == "M_n":
        return m_n_lattice(int(obj["n"]))
    raise ValueError(f"unrecognized lattice spec: {obj!r}")


def disc(lat: Lattice) -> int:
    """The discriminant det(Q_L)."""
    return det(lat.gram)


def signature(lat: Lattice):
    """(s_plus, s_minus), computed exactly by rational symmetric reduction."""
    return signature_of(lat.gram)


@dataclass(frozen=True)
class DiscriminantGroup:
    """A(L) = L^v / L with invariant factors d1 | d2 | ... (each > 1).

    ``generator_lifts`` are rational coordinate vectors in L (x) Q whose
    classes generate the cyclic summands, lift i having order d_i.
    """

    invariant_factors: tuple
    generator_lifts: tuple

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def elements(self):
        """All tuples of exponents (c1, ..., cm), ci in Z/d_i."""
        return product(*(range(d) for d in self.invariant_factors))


def discriminant_group(lat: Lattice) -> DiscriminantGroup:
    """Invariant factors of coker(Q_L) via Smith normal form.

    The lifts are the columns of Q_L^{-1} U^{-1} for the row transform U of
    the SNF (U Q V = D): the class of column i has order d_i.
    """
    from .linalg import smith_normal_form

    q = lat.gram
    d, u, _ = smith_normal_form(q)
    qinv = inverse(q)
    uinv = inverse(u)
    lifts_mat = mat_mul(qinv, uinv)
    factors = []
    lifts = []
    for i in range(lat.rank):
        di = d[i][i]
        if di > 1:
            factors.append(di)
            lifts.append(tuple(lifts_mat[r][i] for r in range(lat.rank)))
    return DiscriminantGroup(tuple(factors), tuple(lifts))


def _mod(x, modulus):
    f = Fraction(x)
    m = Fraction(modulus)
    return f - (f / m).__floor__() * m


@dataclass(frozen=True)
class FiniteQuadraticForm:
    """The discriminant form q(L): A(L) -> Q/2Z.

    ``values`` is the Gram matrix of the generator lifts, reduced mod 2Z on
    the diagonal and mod Z off it.  Two forms are equal iff these reduced
    matrices (and the invariant factors) agree.
    """

    group: DiscriminantGroup
    values: tuple

    def q_of(self, coeffs):
        """q(sum_i c_i g_i) in Q/2Z for an exponent tuple."""
        m = len(self.group.invariant_factors)
        total = Fraction(0)
        for i in range(m):
            total += coeffs[i] * coeffs[i] * self.values[i][i]
            for j in range(i + 1, m):
                total += 2 * coeffs[i] * coeffs[j] * self.values[i][j]
        return _mod(total, 2)

    def bilinear(self, c1, c2):
        """<x, y> in Q/Z for exponent tuples."""
        m = len(self.group.invariant_factors)
        total = Fraction(0)
        for i in range(m):
            for j in range(m):
                total += c1[i] * c2[j] * self.values[i][j]
        return _mod(total, 1)


def discriminant_form(lat: Lattice) -> FiniteQuadraticForm:
    group = discriminant_group(lat)
    m = len(group.invariant_factors)
    vals = []
    for i in range(m):
        row = []
        for j in range(m):
            v = lat.pairing(group.generator_lifts[i], group.generator_lifts[j])
            row.append(_mod(v, 2) if i == j else _mod(v, 1))
        vals.append(tuple(row))
    return FiniteQuadraticForm(group, tuple(vals))


def _element_order(coeffs, factors):
    """Order of an exponent tuple in the group +Z/d_i."""
    o = 1
    for c, d in zip(coeffs, factors):
        if c % d != 0:
            oi = d // gcd(c % d, d)
            o = o * oi // gcd(o, oi)
    return o


def form_orthogonal_group(form: FiniteQuadraticForm, cap: int = 1000):
    """All automorphisms of A(L) preserving q, by backtracking over images.

    Each automorphism is an m x m integer matrix whose column i is the image
    of generator i in exponent coordinates.  Raises ValueError when
    |A(L)| > cap.
    """
    group = form.group
    factors = group.invariant_factors
    m = len(factors)
    if group.order > cap:
        raise ValueError(f"|A(L)| = {group.order} exceeds cap {cap}")
    if m == 0:
        return (mat([]),)

    gens = [tuple(int(i == j) for j in range(m)) for i in range(m)]
    elements = list(group.elements())

    # candidate images per generator: matching order, q-value preserved
    candidates = []
    for i in range(m):
        want_q = form.q_of(gens[i])
        cand = [e for e in elements
                if _element_order(e, factors) == factors[i]
                and form.q_of(e) == want_q]
        candidates.append(cand)

    auts = []

    def bilinear_ok(imgs, new):
        i = len(imgs)
        for j, old in enumerate(imgs):
            if form.bilinear(new, old) != form.bilinear(gens[i], gens[j]):
                return False
        return True

    def is_bijective(imgs):
        seen = set()
        for e in elements:
            img = tuple(sum(ci * imgs[i][r] for i, ci in enumerate(e)) % factors[r]
                        for r in range(m))
            if img in seen:
                return False
            seen.add(img)
        return True

    def backtrack(imgs):
        if len(imgs) == m:
            if is_bijective(imgs):
                auts.append(mat(transpose(imgs)))
            return
        for cand in candidates[len(imgs)]:
            if bilinear_ok(imgs, cand):
                backtrack(imgs + [cand])

    backtrack([])
    return tuple(auts)


def is_isometry(g, lat: Lattice) -> bool:
    gm = mat(g)
    return (is_integral(gm)
            and mat_mul(mat_mul(transpose(gm), lat.gram), gm) == lat.gram)


def in_discriminant_kernel(g, lat: Lattice) -> bool:
    """g acts trivially on A(L)  <=>  (g - I) Q_L^{-1} is an integer matrix."""
    gm = mat(g)
    if not is_isometry(gm, lat):
        raise ValueError("g is not an isometry of L")
    n = lat.rank
    diff = mat(tuple(tuple(gm[i][j] - int(i == j) for j in range(n))
                     for i in range(n)))
    return is_integral(mat_mul(diff, inverse(lat.gram)))


def induced_action_trivial(g, lat: Lattice) -> bool:
    """Cross-check for the kernel test: g fixes every generator lift mod L."""
    group = discriminant_group(lat)
    gm = mat(g)
    for lift in group.generator_lifts:
        diff = tuple(a - b for a, b in zip(mat_vec(gm, lift), lift))
        if not all(Fraction(x).denominator == 1 for x in diff):
            return False
    return True


def preserves_positive_cone(g, lat: Lattice) -> bool:
    """Cone test for signature (1, n) lattices; (n, 1) is handled by negation.

    Picks any v with <v,v> > 0 and returns sign <gv, v> > 0.
    """
    s_plus, s_minus = signature(lat)
    if s_plus == 1:
        q = lat.gram
    elif s_minus == 1:
        q = mat(tuple(tuple(-x for x in row) for row in lat.gram))
    else:
        raise ValueError(f"cone test unsupported for signature {(s_plus, s_minus)}")
    gm = mat(g)
    if not is_isometry(gm, lat):
        raise ValueError("g is not an isometry of L")
    v = positive_vector(q)
    val = vec_dot(mat_vec(gm, v), mat_vec(q, v))
    if val == 0:
        raise AssertionError("degenerate cone pairing")  # impossible for isometries
    return val > 0


def represents(k: int, l: int, eps: int) -> bool:
    """Does U(k)+<2l> halved represent eps (= +-1)?

    Closed-form criterion: gcd(k, l) = 1 and eps*l a square mod |k|.  Used
    both for the existence of the odd-unit coset and for the (-2)-curve test
    (the lattice has a (-2)-vector iff the halved form represents -1).
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if k == 0 or l == 0:
        raise ValueError("k and l must be nonzero")
    if gcd(k, l) != 1:
        return False
    kk = abs(k)
    target = (eps * l) % kk
    return any((x * x) % kk == target for x in range(kk))
