from fractions import Fraction

import pytest

from picard3 import linalg as la
from picard3.clifford import (CliffordElement, EvenCliffordElement,
                              GramParams, OddCliffordElement, alternating_E,
                              clifford_mul, dual_basis_vectors, element_E,
                              gram_B, norm, odd_gram, odd_norm_family,
                              pairing_E, phi_rep, reversal, tilde_e, trace,
                              v_dot_E)
from conftest import random_gram_params

WEHLER = GramParams.from_gram(((0, 2, 2), (2, 0, 2), (2, 2, 0)))


def family_params(k, l):
    return GramParams(0, l, 0, 0, k, 0)


def test_gram_params_from_gram():
    assert (WEHLER.a, WEHLER.b, WEHLER.c) == (0, 0, 0)
    assert (WEHLER.s, WEHLER.t, WEHLER.u) == (2, 2, 2)
    assert WEHLER.disc == 16 and WEHLER.disc_half == 2
    with pytest.raises(ValueError):
        GramParams.from_gram(((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        GramParams.from_gram(((0, 0, 0), (0, 2, 0), (0, 0, 2)))


def test_scalar_and_basis_products():
    one = CliffordElement.scalar(1)
    x = CliffordElement(tuple(range(8)))
    assert clifford_mul(one, x, WEHLER).coeffs == x.coeffs
    e1 = CliffordElement.basis(1)
    assert clifford_mul(e1, e1, WEHLER).coeffs == CliffordElement.zero().coeffs
    e2, e3 = CliffordElement.basis(2), CliffordElement.basis(4)
    anti = clifford_mul(e2, e3, WEHLER) + clifford_mul(e3, e2, WEHLER)
    assert anti.coeffs == CliffordElement.scalar(WEHLER.s).coeffs


def test_mul_is_associative_and_respects_form(rng):
    for _ in range(30):
        p = random_gram_params(rng)
        xs = [CliffordElement(tuple(rng.randint(-3, 3) for _ in range(8)))
              for _ in range(3)]
        x, y, z = xs
        assert clifford_mul(clifford_mul(x, y, p), z, p).coeffs == \
            clifford_mul(x, clifford_mul(y, z, p), p).coeffs
        v = [rng.randint(-4, 4) for _ in range(3)]
        w = [rng.randint(-4, 4) for _ in range(3)]
        cv, cw = CliffordElement.vector(v), CliffordElement.vector(w)
        anti = clifford_mul(cv, cw, p) + clifford_mul(cw, cv, p)
        form = sum(v[i] * p.gram[i][j] * w[j] for i in range(3) for j in range(3))
        assert anti.coeffs == CliffordElement.scalar(form).coeffs


def test_reversal_is_antiautomorphism(rng):
    for _ in range(20):
        p = random_gram_params(rng)
        x = CliffordElement(tuple(rng.randint(-3, 3) for _ in range(8)))
        y = CliffordElement(tuple(rng.randint(-3, 3) for _ in range(8)))
        assert reversal(clifford_mul(x, y, p), p).coeffs == \
            clifford_mul(reversal(y, p), reversal(x, p), p).coeffs


def test_norm_examples():
    one = CliffordElement.scalar(1)
    assert norm(one, WEHLER) == 1
    # appendix fixture: N(5 E2 + E3 + E1E2E3) = 1 over diag(6,-10,-18)
    p = GramParams.from_gram(((6, 0, 0), (0, -10, 0), (0, 0, -18)))
    alpha = OddCliffordElement(1, 0, 5, 1)
    assert norm(alpha.to_full(), p) == 1
    assert norm(OddCliffordElement(-1, 0, -5, -1).to_full(), p) == 1
    # Nr(e1) on Wehler by the multiplication oracle
    e1 = EvenCliffordElement(0, 1, 0, 0)
    prod = clifford_mul(e1.to_full(WEHLER),
                        reversal(e1.to_full(WEHLER), WEHLER), WEHLER)
    assert norm(e1.to_full(WEHLER), WEHLER) == prod.coeffs[0]


def test_norm_rejects_mixed_grade():
    x = CliffordElement((1, 1, 0, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        norm(x, WEHLER)
    with pytest.raises(ValueError):
        trace(CliffordElement.basis(1), WEHLER)


def test_norm_multiplicative_pure_grades(rng):
    for _ in range(30):
        p = random_gram_params(rng)
        fx = EvenCliffordElement(*(rng.randint(-4, 4) for _ in range(4))).to_full(p)
        fy = EvenCliffordElement(*(rng.randint(-4, 4) for _ in range(4))).to_full(p)
        ox = OddCliffordElement(*(rng.randint(-4, 4) for _ in range(4))).to_full()
        oy = OddCliffordElement(*(rng.randint(-4, 4) for _ in range(4))).to_full()
        assert norm(clifford_mul(fx, fy, p), p) == norm(fx, p) * norm(fy, p)
        assert norm(clifford_mul(ox, oy, p), p) == norm(ox, p) * norm(oy, p)
        assert norm(clifford_mul(fx, ox, p), p) == norm(fx, p) * norm(ox, p)


PRINTED_M1 = lambda p: la.mat([[0, -p.b * p.c, p.c * p.u, -p.s * p.u],
                               [1, p.s, 0, p.u],
                               [0, 0, 0, p.b],
                               [0, 0, -p.c, p.s]])


def test_phi_of_e1_is_printed_matrix(rng):
    for _ in range(15):
        p = random_gram_params(rng)
        assert phi_rep(EvenCliffordElement(0, 1, 0, 0), p) == PRINTED_M1(p)
    assert phi_rep(EvenCliffordElement(1, 0, 0, 0), WEHLER) == la.identity(4)


def test_phi_is_ring_homomorphism(rng):
    for _ in range(25):
        p = random_gram_params(rng)
        x = EvenCliffordElement(*(rng.randint(-4, 4) for _ in range(4)))
        y = EvenCliffordElement(*(rng.randint(-4, 4) for _ in range(4)))
        xy = EvenCliffordElement.from_full(
            clifford_mul(x.to_full(p), y.to_full(p), p), p)
        assert la.mat_mul(phi_rep(x, p), phi_rep(y, p)) == phi_rep(xy, p)
        # e1 * e2 expanded in the e-basis against the matrix product
        e1, e2 = EvenCliffordElement(0, 1, 0, 0), EvenCliffordElement(0, 0, 1, 0)
        e12 = EvenCliffordElement.from_full(
            clifford_mul(e1.to_full(p), e2.to_full(p), p), p)
        assert phi_rep(e12, p) == la.mat_mul(phi_rep(e1, p), phi_rep(e2, p))


def test_phi_trace_and_norm_identities(rng):
    for _ in range(25):
        p = random_gram_params(rng)
        x = EvenCliffordElement(*(rng.randint(-4, 4) for _ in range(4)))
        fx = x.to_full(p)
        m = phi_rep(x, p)
        assert 2 * trace(fx, p) == sum(m[i][i] for i in range(4))
        assert norm(fx, p) ** 2 == la.det(m)


def test_gram_B(rng):
    qb = gram_B(WEHLER)
    assert qb[0][0] == 1
    assert la.det(qb) == WEHLER.disc_half ** 2 == 4
    for _ in range(50):
        p = random_gram_params(rng)
        assert la.det(gram_B(p)) == p.disc_half ** 2
    # bilinear trace form reproduces gram_B on the basis
    for _ in range(10):
        p = random_gram_params(rng)
        basis = [EvenCliffordElement(*[int(i == j) for j in range(4)]).to_full(p)
                 for i in range(4)]
        qb = gram_B(p)
        for i in range(4):
            for j in range(4):
                prod = clifford_mul(basis[i], reversal(basis[j], p), p)
                tr = (prod + reversal(prod, p)).coeffs[0]
                assert tr / 2 == qb[i][j]


def test_element_E_properties(rng):
    for _ in range(30):
        p = random_gram_params(rng)
        E = element_E(p)
        for m in range(8):
            bm = CliffordElement.basis(m)
            assert clifford_mul(E, bm, p).coeffs == clifford_mul(bm, E, p).coeffs
        assert reversal(E, p).coeffs == (-E).coeffs
        assert clifford_mul(E, E, p).coeffs == \
            CliffordElement.scalar(-p.disc_half).coeffs


def test_element_E_examples():
    ortho = GramParams.from_gram(((2, 0, 0), (0, 2, 0), (0, 0, -2)))
    assert element_E(ortho).coeffs == CliffordElement.basis(7).coeffs
    fam = family_params(2, 1)         # U(2) + <2>
    E = element_E(fam)
    assert E.coeffs[7] == 1 and E.coeffs[2] == Fraction(2, 2)
    assert clifford_mul(E, E, fam).coeffs == \
        CliffordElement.scalar(Fraction(4 * 1, 4)).coeffs   # k^2 l / 4
    assert clifford_mul(element_E(WEHLER), element_E(WEHLER), WEHLER).coeffs \
        == CliffordElement.scalar(-2).coeffs


def test_tilde_e_and_v_dot_E(rng):
    for _ in range(25):
        p = random_gram_params(rng)
        tes = [tilde_e(i, p).to_full(p) for i in (1, 2, 3)]
        assert tilde_e(1, p).x0 == -Fraction(p.s, 2)
        # (E1 E, E2 E, E3 E) = (te1, te2, te3) Q_L0
        for i in range(3):
            ei = [0, 0, 0]
            ei[i] = 1
            rhs = CliffordElement.zero()
            for j in range(3):
                rhs = rhs + tes[j].scale(p.gram_half[j][i])
            assert v_dot_E(ei, p).coeffs == rhs.coeffs
        # <vE, v'E>_B = D0 <v, v'>_0
        v = [rng.randint(-4, 4) for _ in range(3)]
        w = [rng.randint(-4, 4) for _ in range(3)]
        prod = clifford_mul(v_dot_E(v, p), reversal(v_dot_E(w, p), p), p)
        tr = (prod + reversal(prod, p)).coeffs[0] / 2
        pairing0 = sum(v[i] * p.gram_half[i][j] * w[j]
                       for i in range(3) for j in range(3))
        assert tr == p.disc_half * pairing0
        # dual-basis image: Ehat_i * E = te_i
        dual = dual_basis_vectors(p)
        for i in range(3):
            col = tuple(dual[r][i] for r in range(3))
            assert v_dot_E(col, p).coeffs == tes[i].coeffs
        # gram of (te_i) equals D0 * Q_L0^{-1}
        q0inv = la.inverse(p.gram_half)
        for i in range(3):
            for j in range(3):
                prod = clifford_mul(tes[i], reversal(tes[j], p), p)
                tr = (prod + reversal(prod, p)).coeffs[0] / 2
                assert tr == p.disc_half * q0inv[i][j]


def test_pairing_E_printed_matrix(rng):
    for _ in range(20):
        p = random_gram_params(rng)
        evens = [EvenCliffordElement(*[int(i == j) for j in range(4)])
                 for i in range(4)]
        odds = [OddCliffordElement(*[int(i == j) for j in range(4)])
                for i in range(4)]
        assert pairing_E(evens[0], odds[0], p) == -1
        for i in range(1, 4):
            assert pairing_E(evens[0], odds[i], p) == 0
            for j in range(1, 4):
                assert pairing_E(evens[i], odds[j], p) == int(i == j)
        # (te_i, E_j)_E = delta_ij including index 0 with E_0 = -E, te_0 = e_0
        e0 = OddCliffordElement.from_full(-element_E(p))
        tes = [EvenCliffordElement(1, 0, 0, 0)] + [tilde_e(i, p) for i in (1, 2, 3)]
        fs = [e0] + odds[1:]
        for i in range(4):
            for j in range(4):
                assert pairing_E(tes[i], fs[j], p) == int(i == j)


def test_odd_gram(rng):
    ortho = GramParams.from_gram(((2, 0, 0), (0, 4, 0), (0, 0, -2)))
    og = odd_gram(ortho, "standard")
    a, b, c = ortho.a, ortho.b, ortho.c
    assert og == la.mat([[a * b * c, 0, 0, 0], [0, a, 0, 0],
                         [0, 0, b, 0], [0, 0, 0, c]])
    for _ in range(20):
        p = random_gram_params(rng)
        og = odd_gram(p, "standard")
        a, b, c, s, t, u = p.a, p.b, p.c, p.s, p.t, p.u
        printed = [[2 * a * b * c, a * s, s * u - b * t, c * u],
                   [a * s, 2 * a, u, t],
                   [s * u - b * t, u, 2 * b, s],
                   [c * u, t, s, 2 * c]]
        assert og == la.mat([[Fraction(x, 2) for x in row] for row in printed])
        # lower-right block is Q_L / 2
        for i in range(3):
            for j in range(3):
                assert og[i + 1][j + 1] == Fraction(p.gram[i][j], 2)
        assert odd_gram(p, "dual") == \
            la.mat_scale(p.disc_half, la.inverse(gram_B(p)))
    with pytest.raises(ValueError):
        odd_gram(WEHLER, "other")


def test_odd_norm_family(rng):
    assert odd_norm_family(1, 0, 1, 0, 1, -1) == 1
    assert odd_norm_family(0, 1, 0, 0, 3, 7) == 7
    for n in range(2, 8):
        for _ in range(20):
            xs = [rng.randint(-9, 9) for _ in range(4)]
            assert odd_norm_family(*xs, n, -n) % n == 0
    for _ in range(40):
        k = rng.choice([1, 2, 3, 5, -2])
        l = rng.choice([1, -1, 2, -3, -7])
        p = family_params(k, l)
        x1, x2, x3, x4 = (rng.randint(-4, 4) for _ in range(4))
        beta = OddCliffordElement(x4, x1, x2, x3).to_full()
        assert norm(beta, p) == odd_norm_family(x1, x2, x3, x4, k, l)


def test_alternating_E(rng):
    ortho = GramParams.from_gram(((2, 0, 0), (0, 2, 0), (0, 0, -2)))
    acc, hats = alternating_E(ortho)
    assert acc.coeffs == CliffordElement.basis(7).coeffs
    for _ in range(50):
        p = random_gram_params(rng)
        alternating_E(p)    # all cross-checks are built in


def test_alternating_E_basis_change_invariance(rng):
    # an elementary transformation (det 1) leaves E fixed
    for _ in range(10):
        p = random_gram_params(rng)
        lam = rng.randint(-3, 3)
        s_mat = ((1, lam, 0), (0, 1, 0), (0, 0, 1))     # E1 -> E1 + lam E2
        new_gram = la.mat_mul(la.mat_mul(la.transpose(s_mat), p.gram), s_mat)
        p2 = GramParams.from_gram(new_gram)
        e_new = element_E(p2)
        # rewrite e_new (built on the transformed basis) in the old basis
        vecs = [CliffordElement.vector(tuple(s_mat[r][i] for r in range(3)))
                for i in range(3)]
        acc = CliffordElement.zero()
        from itertools import permutations
        for perm in permutations((0, 1, 2)):
            sign = 1
            pl = list(perm)
            for i in range(3):
                for j in range(i + 1, 3):
                    if pl[i] > pl[j]:
                        sign = -sign
            term = CliffordElement.scalar(sign)
            for i in perm:
                term = clifford_mul(term, vecs[i], p)
            acc = acc + term.scale(Fraction(1, 6))
        assert acc.coeffs == element_E(p).coeffs


def test_clifford_json_roundtrip():
    x = CliffordElement((1, Fraction(3, 2), 0, 0, -2, 0, 0, Fraction(-1, 4)))
    assert CliffordElement.from_json(x.to_json()).coeffs == x.coeffs
    assert x.to_json()["coeffs"]["1"] == "3/2"
