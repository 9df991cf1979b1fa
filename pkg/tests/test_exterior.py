from fractions import Fraction

import pytest

from picard3 import linalg as la
from picard3.clifford import (CliffordElement, EvenCliffordElement,
                              GramParams, OddCliffordElement, clifford_mul,
                              element_E, norm)
from picard3.exterior import (GRAM_W, WElement, eta_matrix, iota_matrix,
                              lambda_minus_matrix, lambda_plus_matrix,
                              mu_matrix, mu_of_unit_conjugation,
                              mu_tilde_matrix, p_bases, w_form)
from conftest import random_gram_params

WEHLER = GramParams.from_gram(((0, 2, 2), (2, 0, 2), (2, 2, 0)))
ONE = EvenCliffordElement(1, 0, 0, 0)


def test_w_form_values():
    e01 = WElement((1, 0, 0, 0, 0, 0))
    e02 = WElement((0, 1, 0, 0, 0, 0))
    e23 = WElement((0, 0, 0, 1, 0, 0))
    assert w_form(e01, e23) == 1
    assert w_form(e01, e02) == 0
    basis = [WElement(tuple(int(i == j) for j in range(6))) for i in range(6)]
    assert la.mat([[w_form(basis[i], basis[j]) for j in range(6)]
                   for i in range(6)]) == GRAM_W
    w = WElement((1, 2, 3, 4, 5, 6))
    assert w_form(w, w) == 2 * (1 * 4 + 2 * 5 + 3 * 6)


def test_p_bases_rows_and_certificates(rng):
    pb = p_bases(WEHLER)
    # w1+ = a e01 + u e02 + e23
    assert pb.plus[0].coords == tuple(map(Fraction, (0, 2, 0, 1, 0, 0)))
    # Gram(w+) = the Wehler matrix exactly
    for i in range(3):
        for j in range(3):
            assert w_form(pb.plus[i], pb.plus[j]) == WEHLER.gram[i][j]
    for _ in range(50):
        p_bases(random_gram_params(rng))   # certificates built in


def test_mu_identities(rng):
    assert mu_matrix(ONE, ONE, WEHLER) == la.identity(6)
    for _ in range(20):
        p = random_gram_params(rng)
        lp, lm = lambda_plus_matrix(p), lambda_minus_matrix(p)
        for _ in range(5):
            x = EvenCliffordElement(*(rng.randint(-3, 3) for _ in range(4)))
            nx = norm(x.to_full(p), p)
            assert la.mat_mul(mu_matrix(x, ONE, p), lp) == la.mat_scale(nx, lp)
            assert la.mat_mul(mu_matrix(ONE, x, p), lm) == la.mat_scale(nx, lm)


def test_mu_functoriality_and_scaling(rng):
    for _ in range(15):
        p = random_gram_params(rng)
        xs = [EvenCliffordElement(*(rng.randint(-2, 2) for _ in range(4)))
              for _ in range(4)]
        x1, x2, y1, y2 = xs
        x12 = EvenCliffordElement.from_full(
            clifford_mul(x1.to_full(p), x2.to_full(p), p), p)
        y21 = EvenCliffordElement.from_full(
            clifford_mul(y2.to_full(p), y1.to_full(p), p), p)
        assert mu_matrix(x12, y21, p) == \
            la.mat_mul(mu_matrix(x1, y1, p), mu_matrix(x2, y2, p))
        mm = mu_matrix(x1, y1, p)
        n1, n2 = norm(x1.to_full(p), p), norm(y1.to_full(p), p)
        w1 = WElement(tuple(rng.randint(-3, 3) for _ in range(6)))
        w2 = WElement(tuple(rng.randint(-3, 3) for _ in range(6)))
        assert w_form(WElement(la.mat_vec(mm, w1.coords)),
                      WElement(la.mat_vec(mm, w2.coords))) == \
            n1 * n1 * n2 * n2 * w_form(w1, w2)


def test_iota_sample(rng):
    # iota(te0 ^ te1) = E2 ^ E3; te0 ^ te1 = e0 ^ e1 has coordinates e01
    for _ in range(10):
        p = random_gram_params(rng)
        img = la.mat_vec(iota_matrix(p), (1, 0, 0, 0, 0, 0))
        assert list(img) == [0, 0, 0, 1, 0, 0]


def test_mu_tilde_identities(rng):
    for _ in range(25):
        p = random_gram_params(rng)
        lp, lm = lambda_plus_matrix(p), lambda_minus_matrix(p)
        while True:
            x = OddCliffordElement(*(rng.randint(-3, 3) for _ in range(4)))
            nx = norm(x.to_full(), p)
            if nx != 0:
                break
        mt = mu_tilde_matrix(x, p)
        assert la.mat_mul(mt, lm) == la.mat_scale(-nx, lm)
        assert la.mat_mul(mt, lp) == \
            la.mat_mul(la.mat_scale(-nx, lp), eta_matrix(x, p))


def test_mu_tilde_rejects_norm_zero():
    x = OddCliffordElement(0, 1, 0, 0)      # N(E1) = a = 0 on Wehler
    assert norm(x.to_full(), WEHLER) == 0
    with pytest.raises(ValueError):
        mu_tilde_matrix(x, WEHLER)
    with pytest.raises(ValueError):
        eta_matrix(x, WEHLER)


def test_mu_tilde_on_central_element(rng):
    for _ in range(10):
        p = random_gram_params(rng)
        mt = mu_tilde_matrix(element_E(p), p)
        lp, lm = lambda_plus_matrix(p), lambda_minus_matrix(p)
        assert la.mat_mul(mt, lp) == la.mat_scale(p.disc_half, lp)
        assert la.mat_mul(mt, lm) == la.mat_scale(-p.disc_half, lm)


def test_claim1_roundtrip():
    # lambda+ conjugates g_alpha into mu(alpha, alpha^{-1}) on P+
    from picard3.isometries import family_unit, g_alpha, unit_search_even
    for k, l in ((1, -1), (2, -2), (2, 3)):
        params = GramParams(0, l, 0, 0, k, 0)
        lam = lambda_plus_matrix(params)
        for m in unit_search_even(k, l, 4)[:12]:
            u = family_unit(m, k, l)
            g = g_alpha(u, params)
            mm = mu_of_unit_conjugation(u.element, params)
            assert la.mat_mul(mm, lam) == la.mat_mul(lam, g)
