"""Seeded property suites: the executable witnesses of the main
correctness claims, shared by the command line driver and the test suite.

Three suites:

* ``clifford``: multiplication, trace/norm, the matrix representation, the
  central element, and the printed Gram matrices, on random Gram tuples.
* ``exterior``: the P+/P- certificates and the two-sided and odd actions
  on the exterior square, on random Gram tuples.
* ``roundtrip``: unit -> isometry -> lift round trips on the U(k) + <2l>
  families, including the ternary matrix identity and cone checks.

Every suite is reproducible from (trials, seed, gram_bound) alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import exterior as ext
from .clifford import (CliffordElement, EvenCliffordElement, GramParams,
                       OddCliffordElement, alternating_E, clifford_mul,
                       element_E, gram_B, norm, phi_rep, reversal, trace)
from .isometries import (clifford_lift, family_unit, h_alpha, p_alpha_matrix,
                         phi_alpha, seeded_units, unit_product,
                         unit_search_even)
from .lattice import Lattice
from .linalg import det, identity, inverse, mat, mat_mul, mat_scale, mat_vec, transpose

DEFAULT_FAMILIES = ((1, -1), (2, -2), (3, -3), (2, 3), (5, -7))


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok: bool, label: str):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(label)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed,
                "failed": self.failed, "failures": self.failures}


def _rng(seed: int, name: str) -> random.Random:
    return random.Random(f"picard3:{seed}:{name}")


def _random_params(rng: random.Random, bound: int) -> GramParams:
    while True:
        p = GramParams(*(rng.randint(-bound, bound) for _ in range(6)))
        if p.disc != 0:
            return p


def clifford_suite(trials: int, seed: int, gram_bound: int = 5,
                   pairs_per_trial: int = 10) -> SuiteResult:
    rng = _rng(seed, "clifford")
    res = SuiteResult("clifford")
    for t in range(trials):
        p = _random_params(rng, gram_bound)
        tag = f"params {p}"
        E = element_E(p)
        res.check(all(clifford_mul(E, CliffordElement.basis(m), p).coeffs
                      == clifford_mul(CliffordElement.basis(m), E, p).coeffs
                      for m in range(8)), f"E central: {tag}")
        res.check(reversal(E, p).coeffs == (-E).coeffs, f"E* = -E: {tag}")
        res.check(clifford_mul(E, E, p).coeffs
                  == CliffordElement.scalar(-p.disc_half).coeffs,
                  f"E^2 = -D0: {tag}")
        res.check(det(gram_B(p)) == p.disc_half ** 2, f"det Q_B: {tag}")
        try:
            alternating_E(p)
            res.check(True, "")
        except AssertionError:
            res.check(False, f"alternating E: {tag}")
        for _ in range(pairs_per_trial):
            x = EvenCliffordElement(*(rng.randint(-4, 4) for _ in range(4)))
            y = EvenCliffordElement(*(rng.randint(-4, 4) for _ in range(4)))
            fx, fy = x.to_full(p), y.to_full(p)
            prod = EvenCliffordElement.from_full(clifford_mul(fx, fy, p), p)
            res.check(mat_mul(phi_rep(x, p), phi_rep(y, p)) == phi_rep(prod, p),
                      f"Phi multiplicative: {tag}")
            res.check(norm(fx, p) ** 2 == det(phi_rep(x, p)),
                      f"Nr^2 = det Phi: {tag}")
            res.check(2 * trace(fx, p)
                      == sum(phi_rep(x, p)[i][i] for i in range(4)),
                      f"Tr = trace Phi / 2: {tag}")
    return res


def exterior_suite(trials: int, seed: int, gram_bound: int = 5,
                   actions_per_trial: int = 5) -> SuiteResult:
    rng = _rng(seed, "exterior")
    res = SuiteResult("exterior")
    one = EvenCliffordElement(1, 0, 0, 0)
    for t in range(trials):
        p = _random_params(rng, gram_bound)
        tag = f"params {p}"
        try:
            ext.p_bases(p)  # gram, orthogonality, primitivity certificates
            res.check(True, "")
        except AssertionError as exc:
            res.check(False, f"P bases: {tag}: {exc}")
            continue
        lp, lm = ext.lambda_plus_matrix(p), ext.lambda_minus_matrix(p)
        for _ in range(actions_per_trial):
            x = EvenCliffordElement(*(rng.randint(-3, 3) for _ in range(4)))
            nx = norm(x.to_full(p), p)
            res.check(mat_mul(ext.mu_matrix(x, one, p), lp)
                      == mat_scale(nx, lp), f"mu(x,1)|P+: {tag}")
            res.check(mat_mul(ext.mu_matrix(one, x, p), lm)
                      == mat_scale(nx, lm), f"mu(1,x)|P-: {tag}")
            while True:
                ox = OddCliffordElement(*(rng.randint(-3, 3) for _ in range(4)))
                nox = norm(ox.to_full(), p)
                if nox != 0:
                    break
            mt = ext.mu_tilde_matrix(ox, p)
            res.check(mat_mul(mt, lm) == mat_scale(-nox, lm),
                      f"mu~(x)|P-: {tag}")
            res.check(mat_mul(mt, lp)
                      == mat_mul(mat_scale(-nox, lp), ext.eta_matrix(ox, p)),
                      f"mu~(x)|P+ = (-Nx) eta_x: {tag}")
        # functoriality and the scaling law on one random pair
        x1, x2, y1, y2 = (EvenCliffordElement(*(rng.randint(-2, 2) for _ in range(4)))
                          for _ in range(4))
        x12 = EvenCliffordElement.from_full(
            clifford_mul(x1.to_full(p), x2.to_full(p), p), p)
        y21 = EvenCliffordElement.from_full(
            clifford_mul(y2.to_full(p), y1.to_full(p), p), p)
        res.check(ext.mu_matrix(x12, y21, p)
                  == mat_mul(ext.mu_matrix(x1, y1, p), ext.mu_matrix(x2, y2, p)),
                  f"mu functorial: {tag}")
        mm = ext.mu_matrix(x1, y1, p)
        w1 = ext.WElement(tuple(rng.randint(-3, 3) for _ in range(6)))
        w2 = ext.WElement(tuple(rng.randint(-3, 3) for _ in range(6)))
        n1 = norm(x1.to_full(p), p)
        n2 = norm(y1.to_full(p), p)
        res.check(ext.w_form(ext.WElement(mat_vec(mm, w1.coords)),
                             ext.WElement(mat_vec(mm, w2.coords)))
                  == n1 * n1 * n2 * n2 * ext.w_form(w1, w2),
                  f"mu scaling law: {tag}")
        # central element scalars
        E = element_E(p)
        mtE = ext.mu_tilde_matrix(E, p)
        res.check(mat_mul(mtE, lp) == mat_scale(p.disc_half, lp),
                  f"mu~(E)|P+ = D0: {tag}")
        res.check(mat_mul(mtE, lm) == mat_scale(-p.disc_half, lm),
                  f"mu~(E)|P- = -D0: {tag}")
    return res


def roundtrip_suite(trials: int, seed: int,
                    families=DEFAULT_FAMILIES) -> SuiteResult:
    """Main-Theorem round trips: ``trials`` seeded units per family."""
    res = SuiteResult("roundtrip")
    for k, l in families:
        params = GramParams(0, l, 0, 0, k, 0)
        lat = Lattice(params.gram)
        sig12 = l < 0
        units = seeded_units(k, l, trials, seed)
        tag = f"family ({k},{l})"
        for u in units:
            eps = 1 if u.grade == "even" else -1
            try:
                h = h_alpha(u, params)  # integrality + isometry + det checked
            except AssertionError as exc:
                res.check(False, f"h_alpha: {tag}: {exc}")
                continue
            res.check(h.in_kernel, f"h_alpha kernel: {tag}")
            lift, n = clifford_lift(h, params)
            res.check(n in (1, -1), f"lift norm: {tag}")
            res.check(_sign_class(lift.coords) == _sign_class(u.element.coords),
                      f"lift = +-alpha: {tag}")
            ph = phi_alpha(u, params)
            res.check(ph.det == u.norm, f"det phi = N: {tag}")
            if sig12:
                res.check(ph.preserves_cone, f"phi in O+: {tag}")
        # homomorphism property and the ternary matrix identity
        rng = _rng(seed, f"roundtrip:{k}:{l}")
        for _ in range(min(trials, 25)):
            u1, u2 = rng.choice(units), rng.choice(units)
            u12 = unit_product(u1, u2, params)
            res.check(h_alpha(u12, params).matrix
                      == mat_mul(h_alpha(u1, params).matrix,
                                 h_alpha(u2, params).matrix),
                      f"h homomorphism: {tag}")
        for m in unit_search_even(k, l, 6)[:20]:
            pal = p_alpha_matrix(m, k, l)
            res.check(mat_mul(mat_mul(transpose(pal.matrix), lat.gram),
                              pal.matrix) == lat.gram,
                      f"P_alpha isometry: {tag}")
            s = mat([[0, 0, 1], [0, -1, 0], [1, 0, 0]])
            ph = phi_alpha(family_unit(m, k, l), params)
            res.check(mat_mul(mat_mul(s, ph.matrix), s) == pal.matrix,
                      f"P_alpha = phi_alpha: {tag}")
        # Claim 1 round trip through the exterior square
        for m in unit_search_even(k, l, 4)[:10]:
            u = family_unit(m, k, l)
            g = mat_scale(u.norm, phi_alpha(u, params).matrix)  # g_alpha
            lam = ext.lambda_plus_matrix(params)
            mm = ext.mu_of_unit_conjugation(u.element, params)
            res.check(mat_mul(mm, lam) == mat_mul(lam, mat(g)),
                      f"Claim 1: {tag}")
    return res


def _sign_class(coords):
    for x in coords:
        if x != 0:
            return coords if x > 0 else tuple(-v for v in coords)
    return coords


ALL_SUITES = {
    "clifford": clifford_suite,
    "exterior": exterior_suite,
    "roundtrip": roundtrip_suite,
}


def run_suites(names, trials: int, seed: int, gram_bound: int = 5):
    """Run the named suites and return the list of SuiteResult."""
    out = []
    for name in names:
        fn = ALL_SUITES[name]
        if name == "roundtrip":
            out.append(fn(trials, seed))
        else:
            out.append(fn(trials, seed, gram_bound))
    return out
