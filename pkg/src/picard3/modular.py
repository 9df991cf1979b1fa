"""Congruence-subgroup arithmetic in PGL2(Z) and PSL2(Z).

Elements are 2x2 integer matrices of determinant +-1, normalized modulo +-1
so that the first nonzero entry (in row-major order) is positive.  Subgroups
are congruence predicates: Pi(n), Gamma(n), the unit groups of the orders
B_{k,l}, the scalar-congruence groups G_n, Gamma_0(k), and the Fricke-style
extensions Gamma_0^+(l) whose elements carry an exact divisor scaling (the
irrational factor sqrt(l') never materializes).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .linalg import mat


@dataclass(frozen=True)
class ModularElement:
    """An element of PGL2(Z): integer matrix mod +-1, det = +-1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise ValueError("determinant must be +-1")
        for x in (self.a, self.b, self.c, self.d):
            if x != 0:
                if x < 0:
                    object.__setattr__(self, "a", -self.a)
                    object.__setattr__(self, "b", -self.b)
                    object.__setattr__(self, "c", -self.c)
                    object.__setattr__(self, "d", -self.d)
                break

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        # trace is only defined mod sign in PGL2; callers use |trace| or parity
        return self.a + self.d

    @property
    def matrix(self):
        return mat([[self.a, self.b], [self.c, self.d]])

    @staticmethod
    def from_matrix(m) -> "ModularElement":
        return ModularElement(m[0][0], m[0][1], m[1][0], m[1][1])

    def __mul__(self, other: "ModularElement") -> "ModularElement":
        return ModularElement(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "ModularElement":
        dt = self.det
        return ModularElement(dt * self.d, -dt * self.b,
                              -dt * self.c, dt * self.a)


@dataclass(frozen=True)
class ScaledModularElement:
    """An element sqrt(l') [[a0, b0/l'], [c0 (l/l'), d0]] of Gamma_0^+(l).

    Stored exactly as (l_prime, a0, b0, c0, d0); the reduced norm is
    a0 d0 l' - b0 c0 (l/l').
    """

    l_prime: int
    a0: int
    b0: int
    c0: int
    d0: int

    def norm(self, l: int) -> int:
        if self.l_prime <= 0 or l % self.l_prime != 0:
            raise ValueError("l' must be a positive divisor of l")
        return self.a0 * self.d0 * self.l_prime - self.b0 * self.c0 * (l // self.l_prime)

    def radical(self) -> int:
        """rad(l'): the product of the primes dividing l'."""
        r, n, p = 1, self.l_prime, 2
        while p * p <= n:
            if n % p == 0:
                r *= p
                while n % p == 0:
                    n //= p
            p += 1
        return r * (n if n > 1 else 1)


def _scaled_entries(x: ScaledModularElement, l: int):
    """The matrix sqrt(l') * X as exact rational entries times sqrt(1):
    returns (p, q, r, s) with X_scaled = [[p, q], [r, s]] / sqrt(l')."""
    lp = x.l_prime
    return (x.a0 * lp, x.b0, x.c0 * l, x.d0 * lp)


def scaled_mul(x: ScaledModularElement, y: ScaledModularElement,
               l: int) -> ScaledModularElement:
    """Exact product of two Gamma_0^+(l) elements, renormalized."""
    # write x = M_x / sqrt(l1) with integer M_x = [[a0 l1, b0],[c0 l, d0 l1]]
    p1 = _scaled_entries(x, l)
    p2 = _scaled_entries(y, l)
    m = (p1[0] * p2[0] + p1[1] * p2[2],
         p1[0] * p2[1] + p1[1] * p2[3],
         p1[2] * p2[0] + p1[3] * p2[2],
         p1[2] * p2[1] + p1[3] * p2[3])
    l1, l2 = x.l_prime, y.l_prime
    g = gcd(l1, l2)
    l3 = l1 * l2 // (g * g)
    # m / sqrt(l1 l2) = (m / g) / sqrt(l3); target form [[a0 l3, b0],[c0 l, d0 l3]]
    mm = tuple(v // g for v in m)
    if any(v % g for v in m):
        raise AssertionError("scaled product did not renormalize")
    a0, rem = divmod(mm[0], l3)
    if rem:
        raise AssertionError("scaled product left the group")
    b0 = mm[1]
    c0, rem = divmod(mm[2], l)
    if rem:
        raise AssertionError("scaled product left the group")
    d0, rem = divmod(mm[3], l3)
    if rem:
        raise AssertionError("scaled product left the group")
    return ScaledModularElement(l3, a0, b0, c0, d0)


@dataclass(frozen=True)
class SubgroupSpec:
    """A congruence predicate: one of Pi_n, Gamma_n, B_kl_units, G_n,
    Gamma0_k, Gamma0_plus_l, with its parameters."""

    kind: str
    n: int = 0
    k: int = 0
    l: int = 0

    def __post_init__(self):
        kinds = ("Pi_n", "Gamma_n", "B_kl_units", "G_n", "Gamma0_k",
                 "Gamma0_plus_l")
        if self.kind not in kinds:
            raise ValueError(f"kind must be one of {kinds}")
        if self.kind in ("Pi_n", "Gamma_n", "G_n") and self.n == 0:
            raise ValueError("n must be nonzero")
        if self.kind == "B_kl_units" and (self.k == 0 or self.l == 0):
            raise ValueError("k and l must be nonzero")
        if self.kind == "Gamma0_k" and self.k == 0:
            raise ValueError("k must be nonzero")
        if self.kind == "Gamma0_plus_l" and self.l == 0:
            raise ValueError("l must be nonzero")


def member(x, spec: SubgroupSpec) -> bool:
    """Membership predicate; Gamma_0^+(l) takes a ScaledModularElement
    (a plain element is treated as the l' = 1 stratum)."""
    if spec.kind == "Gamma0_plus_l":
        l = spec.l
        if isinstance(x, ModularElement):
            x = ScaledModularElement(1, x.a, x.b, x.c // l, x.d) \
                if x.c % l == 0 else None
            if x is None:
                return False
        if not isinstance(x, ScaledModularElement):
            raise ValueError("Gamma_0^+(l) membership needs a scaled element")
        if x.l_prime <= 0 or l % x.l_prime != 0:
            return False
        return x.norm(l) == 1
    if not isinstance(x, ModularElement):
        x = ModularElement.from_matrix(x)
    a, b, c, d = x.a, x.b, x.c, x.d
    if spec.kind == "Pi_n":
        n = abs(spec.n)
        return ((a % n == 1 % n and d % n == 1 % n and b % n == 0 and c % n == 0)
                or ((-a) % n == 1 % n and (-d) % n == 1 % n and b % n == 0 and c % n == 0))
    if spec.kind == "Gamma_n":
        return x.det == 1 and member(x, SubgroupSpec("Pi_n", n=spec.n))
    if spec.kind == "G_n":
        n = abs(spec.n)
        return b % n == 0 and c % n == 0 and (a - d) % n == 0
    if spec.kind == "B_kl_units":
        return (a - d) % spec.k == 0 and c % spec.k == 0 and b % spec.l == 0
    if spec.kind == "Gamma0_k":
        return c % spec.k == 0
    raise AssertionError("unreachable")


def _totient_like_index(n: int) -> int:
    """n^3 * prod_{p|n} (1 - 1/p^2), exactly."""
    num, den = n ** 3, 1
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            num *= p * p - 1
            den *= p * p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        num *= m * m - 1
        den *= m * m
    assert num % den == 0
    return num // den


def index_gamma_n(n: int) -> int:
    """[Gamma : Gamma(n)] = n^3/2 * prod (1 - 1/p^2) for n >= 3; 1, 6 below."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    if n == 2:
        return 6
    v = _totient_like_index(n)
    assert v % 2 == 0
    return v // 2


def order_psl2_zn(n: int) -> int:
    """|PSL2(Z/n)| by exhaustive scan (the oracle for index_gamma_n)."""
    if n == 1:
        return 1
    count = 0
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if (a * d - b * c) % n == 1:
                        count += 1
    if n == 2:
        return count
    assert count % 2 == 0
    return count // 2


def delta_n(n: int) -> int:
    """|{a in (Z/n)^x : a^2 = +-1 mod n} / {+-1}| by exhaustive scan."""
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 2:
        return 1
    sols = {a for a in range(1, n) if gcd(a, n) == 1
            and (a * a) % n in (1 % n, (-1) % n)}
    classes = {frozenset((a, (-a) % n)) for a in sols}
    return len(classes)


def index_pi_g_n(n: int) -> int:
    """[Pi : G_n]: 1 for n = 1, 6 for n = 2, else n^3 prod(1-1/p^2) / delta_n."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    if n == 2:
        return 6
    v = _totient_like_index(n)
    d = delta_n(n)
    assert v % d == 0
    return v // d


def is_torsion(x: ModularElement):
    """(finite, order): decided by the closed trace/determinant criterion.

    det 1: identity (x = +-I), order 2 iff tr = 0, order 3 iff tr = +-1,
    otherwise infinite.  det -1: order 2 iff tr = 0, otherwise infinite.
    """
    if (x.a, x.b, x.c, x.d) in ((1, 0, 0, 1),):
        return True, 1
    t = x.trace
    if x.det == 1:
        if t == 0:
            return True, 2
        if t in (1, -1):
            return True, 3
        return False, None
    if t == 0:
        return True, 2
    return False, None


def element_order(x: ModularElement, cap: int = 12):
    """Matrix-power oracle for is_torsion (projective order, or None)."""
    acc = x
    for k in range(1, cap + 1):
        if (acc.a, acc.b, acc.c, acc.d) == (1, 0, 0, 1):
            return k
        acc = acc * x
    return None


def torsion_search(spec: SubgroupSpec, bound: int):
    """All torsion elements of the subgroup with |entries| <= bound.

    Emptiness is bounded evidence only, never a proof of torsion-freeness.
    The enumeration runs over the complete torsion trace/det classes
    (det 1 with tr in {0, +-1}; det -1 with tr 0), solving bc = ad - det by
    divisor enumeration, which is exactly the bounded box scan.
    """
    found = set()

    def consider(a, b, c, d):
        if max(abs(a), abs(b), abs(c), abs(d)) > bound:
            return
        try:
            el = ModularElement(a, b, c, d)
        except ValueError:
            return
        if el == ModularElement(1, 0, 0, 1):
            return
        if member(el, spec) and is_torsion(el)[0]:
            found.add(el)

    for det_val, traces in ((1, (0, 1, -1)), (-1, (0,))):
        for t in traces:
            for a in range(-bound, bound + 1):
                d = t - a
                if abs(d) > bound:
                    continue
                m = a * d - det_val  # need bc = m
                if m == 0:
                    for b in range(-bound, bound + 1):
                        consider(a, b, 0, d)
                    for c in range(-bound, bound + 1):
                        consider(a, 0, c, d)
                else:
                    am = abs(m)
                    for b in range(1, bound + 1):
                        if am % b == 0 and am // b <= bound:
                            c = m // b
                            consider(a, b, c, d)
                            consider(a, -b, -c, d)
    return tuple(sorted(found, key=lambda e: (e.a, e.b, e.c, e.d)))


def free_rank(index_in_pi: int) -> int:
    """Rank of a torsion-free finite-index subgroup of PGL2(Z): index/12 + 1.

    The index must be taken in Pi = PGL2(Z); callers holding an index in
    Gamma = PSL2(Z) must double it first.  An index not divisible by 12
    signals torsion or a wrong ambient group and raises ValueError.
    """
    if index_in_pi % 12 != 0:
        raise ValueError("index not divisible by 12 (torsion, or index not in Pi?)")
    return index_in_pi // 12 + 1


def qr_minus_one(n: int) -> bool:
    """Is -1 a quadratic residue modulo n?  (Unit square; scan.)"""
    if n < 1:
        raise ValueError("n must be positive")
    target = (-1) % n
    return any((a * a) % n == target for a in range(n) if gcd(a, n) == 1)


def _sqrt_continued_fraction(d: int):
    """Period of the continued fraction of sqrt(d) and the convergent
    (p, q) at the end of the first period (d > 0 nonsquare)."""
    a0 = isqrt(d)
    m, q, a = 0, 1, a0
    p_prev, p_cur = 1, a0
    q_prev, q_cur = 0, 1
    period = 0
    while True:
        m = a * q - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        period += 1
        if q == 1:
            break
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
    return period, p_cur, q_cur


def _pell_minus_one(d: int):
    """Fundamental solution of x^2 - d y^2 = -1, or None (CF period parity)."""
    period, p, q = _sqrt_continued_fraction(d)
    if period % 2 == 0:
        return None
    assert p * p - d * q * q == -1
    return p, q


def negative_pell(d: int):
    """Solve x^2 - d y^2 = -4: returns a fundamental witness (x, y) or None.

    Solvability is the continued-fraction period-parity criterion (for
    sqrt(d), or sqrt(d/4) when 4 | d since x is then forced even).  For
    d = 1 mod 4 the fundamental solution may be half-integral relative to
    the -1 Pell solution (T, U); it is recovered exactly by the cube-root
    descent x^3 + 3x = 2T, d y^3 - 3y = 2U.  Raises for d <= 0 or square.
    """
    if d <= 0:
        raise ValueError("d must be positive")
    r = isqrt(d)
    if r * r == d:
        raise ValueError("d must not be a perfect square")
    if d % 4 == 0:
        sol = _pell_minus_one(d // 4)
        if sol is None:
            return None
        t, u = sol
        return 2 * t, u
    sol = _pell_minus_one(d)
    if sol is None:
        return None
    t, u = sol
    if d % 4 == 1:
        x = _integer_cbrt_solve(lambda v: v ** 3 + 3 * v, 2 * t)
        y = _integer_cbrt_solve(lambda v: d * v ** 3 - 3 * v, 2 * u)
        if x is not None and y is not None and x * x - d * y * y == -4:
            return x, y
    return 2 * t, 2 * u


def _integer_cbrt_solve(f, target: int):
    """Unique integer v >= 1 with monotone cubic f(v) = target, else None."""
    lo, hi = 1, 2
    while f(hi) < target:
        hi *= 2
    while lo <= hi:
        mid = (lo + hi) // 2
        val = f(mid)
        if val == target:
            return mid
        if val < target:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def prime_power_generator(n: int):
    """The extra generator of G_n over Gamma(n) for prime powers n (or None).

    Cases: n = 2 -> diag(1, -1); n = 4 -> None (G_4 = Gamma(4));
    n = 2^e, e >= 3 -> the unipotent-like matrix with lambda = 1 + 2^{e-1};
    n = p^e with p = 3 mod 4 -> None; n = p^e with p = 1 mod 4 -> the
    det -1 matrix built from a with a^2 = -1 mod n.
    """
    p, e = _prime_power(n)
    if p is None:
        raise ValueError("n must be a prime power")
    if n == 2:
        return ModularElement(1, 0, 0, -1)
    if n == 4:
        return None
    if p == 2:
        lam = 1 + 2 ** (e - 1)
        return ModularElement(lam, 2 ** e, 2 ** (2 * e - 3),
                              1 - 2 ** (e - 1) + 2 ** (2 * (e - 1)))
    if p % 4 == 3:
        return None
    a = next(x for x in range(2, n) if (x * x + 1) % n == 0)
    top = a ** (2 * n) + 1
    assert top % n == 0
    return ModularElement(a, n, top // n, a ** (2 * n - 1))


def _prime_power(n: int):
    if n < 2:
        return None, None
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            return (p, e) if m == 1 else (None, None)
        p += 1
    return n, 1


def g_n_class_witness(n: int, lam: int, eps: int) -> ModularElement:
    """An explicit element of G_n congruent to lam*I mod n with det = eps.

    Requires lam^2 = eps mod n.  Construction: lam*I + n*[[t, r], [1, 0]]
    with t chosen so the determinant comes out exactly eps.
    """
    if (lam * lam - eps) % n != 0:
        raise ValueError("lam^2 != eps mod n")
    m = (lam * lam - eps) // n
    lam_inv = next(x for x in range(1, n + 1) if (x * lam) % n == 1 % n)
    t = (-m * lam_inv) % n
    r = (m + lam * t) // n
    el = ModularElement(lam + n * t, n * r, n, lam)
    assert el.det == eps
    assert member(el, SubgroupSpec("G_n", n=n))
    return el
