"""The Clifford algebra of an even lattice of rank 3, in exact arithmetic.

Conventions.  The lattice has Gram matrix

    Q_L = [[2a, u, t],
           [ u, 2b, s],
           [ t,  s, 2c]]

on the basis (E1, E2, E3), and the algebra is generated by the Ei subject to
v*w + w*v = <v, w> (so Ei^2 = <Ei, Ei>/2, i.e. a, b, c).  A general element
is stored by its 8 coordinates on the monomials E_S, S a subset of {1,2,3}
taken in ascending order; every sign in a product is produced by the
rewriting rules, never read from a table.

The even part carries the quaternion basis

    e0 = 1,  e1 = E2*E3,  e2 = E3*E1,  e3 = E1*E2,

the matrix embedding ``phi_rep``, the reduced trace/norm, and the central
odd element E with E^2 = -D0 where D0 = disc(L)/8.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .linalg import det, identity, inverse, mat, mat_mul, mat_scale

# Basis monomials indexed by bitmask: bit (i-1) set  <=>  Ei present.
DIM = 8
MASK_NAMES = ("", "1", "2", "12", "3", "13", "23", "123")
NAME_TO_MASK = {name: i for i, name in enumerate(MASK_NAMES)}
EVEN_MASKS = (0, 3, 5, 6)
ODD_MASKS = (1, 2, 4, 7)


@dataclass(frozen=True)
class GramParams:
    """The six integers (a, b, c, s, t, u) determining a rank-3 even lattice."""

    a: int
    b: int
    c: int
    s: int
    t: int
    u: int

    @staticmethod
    def from_gram(q) -> "GramParams":
        if len(q) != 3 or any(len(r) != 3 for r in q):
            raise ValueError("rank-3 Gram matrix required")
        for i in range(3):
            for j in range(3):
                if q[i][j] != q[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
            if q[i][i] % 2 != 0:
                raise ValueError("lattice must be even")
        p = GramParams(q[0][0] // 2, q[1][1] // 2, q[2][2] // 2,
                       q[1][2], q[0][2], q[0][1])
        if p.disc == 0:
            raise ValueError("lattice must be non-degenerate")
        return p

    @property
    def gram(self):
        a, b, c, s, t, u = self.a, self.b, self.c, self.s, self.t, self.u
        return mat([[2 * a, u, t], [u, 2 * b, s], [t, s, 2 * c]])

    @property
    def gram_half(self):
        """Q_{L0} = Q_L / 2 (rational)."""
        return mat_scale(Fraction(1, 2), self.gram)

    @property
    def disc(self) -> int:
        a, b, c, s, t, u = self.a, self.b, self.c, self.s, self.t, self.u
        return 2 * (4 * a * b * c + s * t * u - a * s * s - b * t * t - c * u * u)

    @property
    def disc_half(self) -> Fraction:
        """D0 = disc(L)/8 = disc(L0)."""
        return Fraction(self.disc, 8)


@dataclass(frozen=True)
class CliffordElement:
    """An element of Cl(L) tensor Q: 8 exact rational coordinates."""

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != DIM:
            raise ValueError("need 8 coefficients")
        object.__setattr__(self, "coeffs",
                           tuple(Fraction(x) for x in self.coeffs))

    @staticmethod
    def zero() -> "CliffordElement":
        return CliffordElement((0,) * DIM)

    @staticmethod
    def scalar(x) -> "CliffordElement":
        return CliffordElement((x,) + (0,) * (DIM - 1))

    @staticmethod
    def basis(mask: int) -> "CliffordElement":
        return CliffordElement(tuple(int(i == mask) for i in range(DIM)))

    @staticmethod
    def vector(v) -> "CliffordElement":
        """The lattice vector v1*E1 + v2*E2 + v3*E3 as a Clifford element."""
        c = [0] * DIM
        c[1], c[2], c[4] = v[0], v[1], v[2]
        return CliffordElement(tuple(c))

    def __add__(self, other):
        return CliffordElement(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return CliffordElement(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CliffordElement(tuple(-x for x in self.coeffs))

    def scale(self, c) -> "CliffordElement":
        return CliffordElement(tuple(c * x for x in self.coeffs))

    @property
    def even_part(self) -> "CliffordElement":
        return CliffordElement(tuple(x if m in EVEN_MASKS else 0
                                     for m, x in enumerate(self.coeffs)))

    @property
    def odd_part(self) -> "CliffordElement":
        return CliffordElement(tuple(x if m in ODD_MASKS else 0
                                     for m, x in enumerate(self.coeffs)))

    @property
    def is_even(self) -> bool:
        return all(self.coeffs[m] == 0 for m in ODD_MASKS)

    @property
    def is_odd(self) -> bool:
        return all(self.coeffs[m] == 0 for m in EVEN_MASKS)

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": {MASK_NAMES[m]: str(x)
                           for m, x in enumerate(self.coeffs) if x != 0}}

    @staticmethod
    def from_json(obj) -> "CliffordElement":
        c = [Fraction(0)] * DIM
        for name, val in obj["coeffs"].items():
            c[NAME_TO_MASK[name]] = Fraction(val)
        return CliffordElement(tuple(c))


@dataclass(frozen=True)
class EvenCliffordElement:
    """Coordinates (x0, x1, x2, x3) on the quaternion basis (e0, e1, e2, e3)."""

    x0: Fraction
    x1: Fraction
    x2: Fraction
    x3: Fraction

    def __post_init__(self):
        for f in ("x0", "x1", "x2", "x3"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))

    @property
    def coords(self):
        return (self.x0, self.x1, self.x2, self.x3)

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coords)

    def to_full(self, params: GramParams) -> CliffordElement:
        # e2 = E3*E1 = t - E1*E3, so the e2 coordinate feeds both the scalar
        # and the E1E3 slots.
        c = [Fraction(0)] * DIM
        c[0] = self.x0 + params.t * self.x2
        c[6] = self.x1
        c[5] = -self.x2
        c[3] = self.x3
        return CliffordElement(tuple(c))

    @staticmethod
    def from_full(x: CliffordElement, params: GramParams) -> "EvenCliffordElement":
        if not x.is_even:
            raise ValueError("element is not even")
        x2 = -x.coeffs[5]
        return EvenCliffordElement(x.coeffs[0] - params.t * x2,
                                   x.coeffs[6], x2, x.coeffs[3])


@dataclass(frozen=True)
class OddCliffordElement:
    """Coordinates (x4, x1, x2, x3) on the basis (E1E2E3, E1, E2, E3)."""

    x4: Fraction
    x1: Fraction
    x2: Fraction
    x3: Fraction

    def __post_init__(self):
        for f in ("x4", "x1", "x2", "x3"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))

    @property
    def coords(self):
        return (self.x4, self.x1, self.x2, self.x3)

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coords)

    def to_full(self) -> CliffordElement:
        c = [Fraction(0)] * DIM
        c[7], c[1], c[2], c[4] = self.x4, self.x1, self.x2, self.x3
        return CliffordElement(tuple(c))

    @staticmethod
    def from_full(x: CliffordElement) -> "OddCliffordElement":
        if not x.is_odd:
            raise ValueError("element is not odd")
        return OddCliffordElement(x.coeffs[7], x.coeffs[1], x.coeffs[2], x.coeffs[4])


def _full_pairing(params: GramParams):
    """<Ei, Ej> as a 1-indexed lookup."""
    q = params.gram
    return {(i + 1, j + 1): q[i][j] for i in range(3) for j in range(3)}


def _mono_times_gen(mono: tuple, j: int, pair, half):
    """E_mono * E_j as a list of (coeff, mono) terms, monos ascending."""
    if not mono or mono[-1] < j:
        return [(1, mono + (j,))]
    last = mono[-1]
    if last == j:
        return [(half[j], mono[:-1])]
    # last > j: E_last E_j = <E_last, E_j> - E_j E_last
    out = [(pair[(last, j)], mono[:-1])]
    for c, m in _mono_times_gen(mono[:-1], j, pair, half):
        out.append((-c, m + (last,)))
    return out


@lru_cache(maxsize=None)
def _mult_table(params: GramParams):
    """64-entry table: product of basis monomials as coefficient 8-vectors."""
    pair = _full_pairing(params)
    half = {i: pair[(i, i)] // 2 for i in (1, 2, 3)}

    def mask_to_mono(m):
        return tuple(i for i in (1, 2, 3) if m & (1 << (i - 1)))

    def mono_to_mask(mono):
        mk = 0
        for i in mono:
            mk |= 1 << (i - 1)
        return mk

    table = {}
    for m1 in range(DIM):
        for m2 in range(DIM):
            terms = [(1, mask_to_mono(m1))]
            for g in mask_to_mono(m2):
                new = []
                for c, mono in terms:
                    for c2, mono2 in _mono_times_gen(mono, g, pair, half):
                        new.append((c * c2, mono2))
                terms = new
            vec = [0] * DIM
            for c, mono in terms:
                vec[mono_to_mask(mono)] += c
            table[(m1, m2)] = tuple(vec)
    return table


def clifford_mul(x: CliffordElement, y: CliffordElement,
                 params: GramParams) -> CliffordElement:
    """Product in Cl(L), by the rewriting rules Ei Ej = <Ei,Ej> - Ej Ei."""
    table = _mult_table(params)
    out = [Fraction(0)] * DIM
    for m1, c1 in enumerate(x.coeffs):
        if c1 == 0:
            continue
        for m2, c2 in enumerate(y.coeffs):
            if c2 == 0:
                continue
            f = c1 * c2
            for m3, c3 in enumerate(table[(m1, m2)]):
                if c3 != 0:
                    out[m3] += f * c3
    return CliffordElement(tuple(out))


@lru_cache(maxsize=None)
def _reversal_table(params: GramParams):
    """Reversal of each basis monomial, computed by multiplying in reverse."""
    out = {}
    for m in range(DIM):
        gens = [i for i in (1, 2, 3) if m & (1 << (i - 1))]
        acc = CliffordElement.scalar(1)
        for i in reversed(gens):
            acc = clifford_mul(acc, CliffordElement.basis(1 << (i - 1)), params)
        out[m] = acc.coeffs
    return out


def reversal(x: CliffordElement, params: GramParams) -> CliffordElement:
    """The involution * (reversal of tensor factors), an anti-automorphism."""
    table = _reversal_table(params)
    out = [Fraction(0)] * DIM
    for m, c in enumerate(x.coeffs):
        if c == 0:
            continue
        for m2, c2 in enumerate(table[m]):
            if c2 != 0:
                out[m2] += c * c2
    return CliffordElement(tuple(out))


def trace(x: CliffordElement, params: GramParams):
    """Reduced trace Tr(x) = x + x* of an even element (a scalar)."""
    if not x.is_even:
        raise ValueError("reduced trace is defined on the even part")
    s = x + reversal(x, params)
    if any(s.coeffs[m] != 0 for m in range(1, DIM)):
        raise AssertionError("x + x* is not scalar")
    val = s.coeffs[0]
    return val.numerator if val.denominator == 1 else val


def norm(x: CliffordElement, params: GramParams):
    """N x = x * x^* for a pure even or pure odd element (a scalar)."""
    if not (x.is_even or x.is_odd):
        raise ValueError("norm requires a pure even or pure odd element")
    p = clifford_mul(x, reversal(x, params), params)
    if any(p.coeffs[m] != 0 for m in range(1, DIM)):
        raise AssertionError("x * x^* is not scalar")
    val = p.coeffs[0]
    return val.numerator if val.denominator == 1 else val


def _phi_generators(params: GramParams):
    a, b, c, s, t, u = (params.a, params.b, params.c,
                        params.s, params.t, params.u)
    m1 = mat([[0, -b * c, c * u, -s * u],
              [1, s, 0, u],
              [0, 0, 0, b],
              [0, 0, -c, s]])
    m2 = mat([[0, -s * t, -a * c, a * s],
              [0, t, 0, -a],
              [1, s, t, 0],
              [0, c, 0, 0]])
    m3 = mat([[0, b * t, -t * u, -a * b],
              [0, 0, a, 0],
              [0, -b, u, 0],
              [1, 0, t, u]])
    return m1, m2, m3


def phi_rep(x: EvenCliffordElement, params: GramParams):
    """The 4x4 matrix representation of the even part (left multiplication)."""
    m1, m2, m3 = _phi_generators(params)
    out = [[Fraction(0)] * 4 for _ in range(4)]
    mats = (identity(4), m1, m2, m3)
    for coef, m in zip(x.coords, mats):
        for i in range(4):
            for j in range(4):
                out[i][j] += coef * m[i][j]
    res = mat(out)
    if x.is_integral:
        res = mat(tuple(tuple(int(v) for v in row) for row in res))
    return res


def gram_B(params: GramParams):
    """Gram matrix of <x,y>_B = Tr(x y*)/2 on (e0, e1, e2, e3); det = D0^2."""
    a, b, c, s, t, u = (params.a, params.b, params.c,
                        params.s, params.t, params.u)
    m = [[2, s, t, u],
         [s, 2 * b * c, s * t - c * u, s * u - b * t],
         [t, s * t - c * u, 2 * a * c, t * u - a * s],
         [u, s * u - b * t, t * u - a * s, 2 * a * b]]
    return mat([[Fraction(x, 2) for x in row] for row in m])


def element_E(params: GramParams) -> CliffordElement:
    """The central odd element E = E1E2E3 + (-s E1 + t E2 - u E3)/2.

    Satisfies Ex = xE for all x, E* = -E and E^2 = -D0.  The sign of E is a
    global convention; this closed form fixes it.
    """
    c = [Fraction(0)] * DIM
    c[7] = Fraction(1)
    c[1] = Fraction(-params.s, 2)
    c[2] = Fraction(params.t, 2)
    c[4] = Fraction(-params.u, 2)
    return CliffordElement(tuple(c))


def tilde_e(i: int, params: GramParams) -> EvenCliffordElement:
    """The trace-zero projection e_i - Tr(e_i)/2 for i in {1, 2, 3}."""
    tr = {1: params.s, 2: params.t, 3: params.u}[i]
    coords = [Fraction(-tr, 2), 0, 0, 0]
    coords[i] = Fraction(1)
    return EvenCliffordElement(*coords)


def v_dot_E(v, params: GramParams) -> CliffordElement:
    """The even element v * E for a (rational) lattice vector v."""
    return clifford_mul(CliffordElement.vector(v), element_E(params), params)


def pairing_E(x: EvenCliffordElement, y: OddCliffordElement,
              params: GramParams):
    """(x, y)_E: the E1E2E3-coefficient of x * y*."""
    prod = clifford_mul(x.to_full(params),
                        reversal(y.to_full(), params), params)
    val = prod.coeffs[7]
    return val.numerator if val.denominator == 1 else val


def odd_gram(params: GramParams, basis_choice: str = "standard"):
    """Intersection matrix of the odd part under the quadratic form N.

    ``standard``: basis (E1E2E3, E1, E2, E3).
    ``dual``: basis (-E1E2E3 - t E2, E1, E2, E3), dual to (e_i) under the
    pairing (,)_E; its Gram equals D0 * Q_B^{-1}.
    """
    if basis_choice == "standard":
        basis = [OddCliffordElement(1, 0, 0, 0).to_full(),
                 OddCliffordElement(0, 1, 0, 0).to_full(),
                 OddCliffordElement(0, 0, 1, 0).to_full(),
                 OddCliffordElement(0, 0, 0, 1).to_full()]
    elif basis_choice == "dual":
        basis = [OddCliffordElement(-1, 0, -params.t, 0).to_full(),
                 OddCliffordElement(0, 1, 0, 0).to_full(),
                 OddCliffordElement(0, 0, 1, 0).to_full(),
                 OddCliffordElement(0, 0, 0, 1).to_full()]
    else:
        raise ValueError("basis_choice must be 'standard' or 'dual'")
    out = []
    for x in basis:
        row = []
        for y in basis:
            nxy = norm(x + y, params) - norm(x, params) - norm(y, params)
            row.append(Fraction(nxy, 2))
        out.append(tuple(row))
    return mat(out)


def odd_norm_family(x1, x2, x3, x4, k: int, l: int):
    """N(x1 E1 + x2 E2 + x3 E3 + x4 E1E2E3) on U(k) + <2l>, closed form."""
    return k * x1 * x3 + l * x2 * (x2 - k * x4)


def alternating_E(params: GramParams):
    """E as the alternating sum over S_3, plus the dual elements E-hat.

    Returns (E, (Ehat_1, Ehat_2, Ehat_3)).  Cross-checks performed here:
    the alternating E equals the closed form of :func:`element_E`, and
    Ei * E = sum_j <Ei, Ej>_0 Ehat_j.  Disagreement raises AssertionError.
    """
    acc = CliffordElement.zero()
    for perm in permutations((1, 2, 3)):
        sign = _perm_sign(perm)
        term = CliffordElement.scalar(1)
        for i in perm:
            term = clifford_mul(term, CliffordElement.basis(1 << (i - 1)), params)
        acc = acc + term.scale(Fraction(sign, 6))
    if acc.coeffs != element_E(params).coeffs:
        raise AssertionError("alternating sum disagrees with the closed form of E")

    hats = []
    for j in (1, 2, 3):
        others = [i for i in (1, 2, 3) if i != j]
        h = CliffordElement.zero()
        for perm in permutations(others):
            # sign of the permutation fixing j and permuting the others
            full = [0, 0, 0]
            full[j - 1] = j
            idx = iter(perm)
            for pos in range(3):
                if full[pos] == 0:
                    full[pos] = next(idx)
            sign = _perm_sign(tuple(full))
            term = CliffordElement.scalar(1)
            for i in perm:
                term = clifford_mul(term, CliffordElement.basis(1 << (i - 1)), params)
            h = h + term.scale(Fraction((-1) ** (j + 1) * sign, 2))
        hats.append(h)

    gram0 = params.gram_half
    for i in (1, 2, 3):
        lhs = clifford_mul(CliffordElement.basis(1 << (i - 1)), acc, params)
        rhs = CliffordElement.zero()
        for j in (1, 2, 3):
            rhs = rhs + hats[j - 1].scale(gram0[i - 1][j - 1])
        if lhs.coeffs != rhs.coeffs:
            raise AssertionError("Ei * E != sum <Ei,Ej>_0 Ehat_j")
    return acc, tuple(hats)


def _perm_sign(perm) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def dual_basis_vectors(params: GramParams):
    """Columns of Q_{L0}^{-1}: the dual basis of (Ei) for the halved form."""
    return inverse(params.gram_half)


def gram_B_det_identity(params: GramParams) -> bool:
    """det(Q_B) == D0^2 (used as a cheap self-check)."""
    return det(gram_B(params)) == params.disc_half ** 2
