"""Invariant suites behind ``tanderiv verify``.

Each suite yields :class:`Check` results; a check passes only if every one
of its cases passes.  Randomness comes from one seeded ``random.Random``
per suite, so reports are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import arc_derivatives as arc
from . import chebyshev as cheb
from . import oracles
from . import signum as sgn
from . import tangent_triangle as tri
from .polycore import IntPoly, binomial, hp, poly_eval, to_hp

SUITES = ("poly", "triangle", "arc", "cheb", "signum")

# points within this distance of a pole or branch point are not sampled
POLE_MARGIN = 0.2


@dataclass
class Check:
    suite: str
    name: str
    passed: int = 0
    total: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, case=None) -> None:
        self.total += 1
        if ok:
            self.passed += 1
        elif len(self.failures) < 5:
            self.failures.append(case)

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        s = f"{status} {self.suite}.{self.name}: {self.passed}/{self.total}"
        if self.failures:
            s += f"  first failures: {self.failures}"
        return s


def rel_close(a, b, tol) -> bool:
    return abs(a - b) <= tol * max(abs(a), abs(b), 1)


# --------------------------------------------------------------------------


def suite_poly(nmax=None, seed=42):
    rng = random.Random(seed)

    def rand_poly(deg):
        return IntPoly(rng.randint(-9, 9) for _ in range(rng.randint(0, deg + 1)))

    comm = Check("poly", "add_mul_commutative_associative")
    prod = Check("poly", "product_rule")
    evalc = Check("poly", "exact_vs_float_eval")
    pascal = Check("poly", "pascal_rule")
    for _ in range(200):
        a, b, c = rand_poly(8), rand_poly(8), rand_poly(8)
        comm.record(a + b == b + a and a * b == b * a
                    and (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c))
        prod.record((a * b).derivative() == a.derivative() * b + a * b.derivative(), (a, b))
        p = rand_poly(12)
        q = Fraction(rng.randint(-400, 400), rng.randint(100, 1000))
        exact = poly_eval(p, q)
        approx = poly_eval(p, to_hp(q))
        evalc.record(abs(approx - to_hp(Fraction(exact))) <= 1e-12 * max(abs(exact), 1), (p, q))
    for n in range(1, (nmax or 40) + 1):
        for k in range(1, n + 1):
            pascal.record(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k), (n, k))
    return [comm, prod, evalc, pascal]


def _tan_sample(func, rng):
    """Random point at least POLE_MARGIN away from the poles of func."""
    half_pi = float(hp.pi) / 2
    if func is tri.TanFunc.TAN:
        return rng.uniform(-half_pi + POLE_MARGIN, half_pi - POLE_MARGIN)
    if func is tri.TanFunc.COT:
        return rng.uniform(POLE_MARGIN, 2 * half_pi - POLE_MARGIN)
    if func is tri.TanFunc.TANH:
        return rng.uniform(-3, 3)
    x = rng.uniform(POLE_MARGIN, 3)
    return x if rng.random() < 0.5 else -x


def suite_triangle(nmax=None, seed=42):
    rng = random.Random(seed)
    N = 60 if nmax is None else nmax
    rows = tri.triangle_rows(N + 1)

    lead = Check("triangle", "leading_coeff_is_factorial")
    parity = Check("triangle", "parity_vanishing")
    chain = Check("triangle", "chain_rule_recursion")
    tnum = Check("triangle", "tangent_numbers_vs_series")
    cot = Check("triangle", "cot_sign_symmetry")
    jet = Check("triangle", "jet_oracle_agreement")

    one_plus_t2 = IntPoly([1, 0, 1])
    for n in range(N + 1):
        row = rows[n]
        lead.record(row[n + 1] == factorial(n), n)
        parity.record(all(row[k] == 0 for k in range(n + 2) if (n - k + 1) % 2), n)
        cur = tri.tan_family_deriv(tri.TanFunc.TAN, n).as_poly()
        nxt = tri.tan_family_deriv(tri.TanFunc.TAN, n + 1).as_poly()
        chain.record(cur.derivative() * one_plus_t2 == nxt, n)
        t = tri.tan_family_deriv(tri.TanFunc.TAN, n).terms
        c = tri.tan_family_deriv(tri.TanFunc.COT, n).terms
        sign = -1 if n % 2 else 1
        cot.record(c == {p: sign * v for p, v in t.items()}, n)

    kmax = min(12, N // 2)
    series = oracles.tan_series(2 * kmax + 1)
    for k in range(kmax + 1):
        expected = series[2 * k + 1] * factorial(2 * k + 1)
        tnum.record(expected == rows[2 * k + 1][0] == tri.tangent_number(k), k)

    for func in tri.TanFunc:
        for _ in range(50):
            x = _tan_sample(func, rng)
            j = oracles.jet(func, x, 8)
            for n in range(9):
                ok = rel_close(tri.eval_tan_family_deriv(func, n, x), j.derivative_at(n), 1e-9)
                jet.record(ok, (func.value, n, x))
    return [lead, parity, chain, tnum, cot, jet]


def _arc_sample(func, rng):
    if func is arc.ArcFunc.ARCTANH:
        return rng.uniform(-1 + POLE_MARGIN, 1 - POLE_MARGIN)
    if func is arc.ArcFunc.ARCCOTH:
        x = rng.uniform(1 + POLE_MARGIN, 3)
    elif func is arc.ArcFunc.ARCCOT:
        x = rng.uniform(POLE_MARGIN, 3)
    else:
        return rng.uniform(-3, 3)
    return x if rng.random() < 0.5 else -x


def _induction_lhs(n):
    def g(x):
        r = hp.sqrt(1 + x * x)
        return hp.sin(n * hp.asin(1 / r)) / r**n
    return g


def induction_rhs(n, x):
    x = to_hp(x)
    r = hp.sqrt(1 + x * x)
    return -n * sgn.sg_real(x) * hp.sin((n + 1) * hp.asin(1 / r)) / r ** (n + 1)


def suite_arc(nmax=None, seed=42):
    rng = random.Random(seed)
    N = 20 if nmax is None else nmax
    A = arc.ArcFunc

    oracle = Check("arc", "closed_form_vs_symbolic_oracle")
    closure = Check("arc", "differentiation_closure")
    absrel = Check("arc", "arctanh_is_abs_arctan")
    reduction = Check("arc", "arccot_arccoth_reduction")
    zero = Check("arc", "value_at_zero")
    three = Check("arc", "three_way_numeric_agreement")
    hyp = Check("arc", "arctanh_chebyshev_agreement")
    induc = Check("arc", "induction_step_identity")
    parity = Check("arc", "parity")
    jet = Check("arc", "jet_oracle_agreement")

    seeds = {
        A.ARCTAN: oracles.RatFun(IntPoly([1]), IntPoly([1, 0, 1])),
        A.ARCCOT: oracles.RatFun(IntPoly([-1]), IntPoly([1, 0, 1])),
        A.ARCTANH: oracles.RatFun(IntPoly([1]), IntPoly([1, 0, -1])),
        A.ARCCOTH: oracles.RatFun(IntPoly([1]), IntPoly([1, 0, -1])),
    }
    for func, f in seeds.items():
        g = oracles.RatFun.reduced(f.num, f.den)
        for n in range(1, N + 1):
            form = arc.arc_deriv(func, n)
            oracle.record(g.num == form.full_numerator() and g.den == form.base**n,
                          (func.value, n))
            d = oracles.ratfun_derivative(
                oracles.RatFun(form.full_numerator(), form.base**n))
            nxt = arc.arc_deriv(func, n + 1)
            closure.record(d.num == nxt.full_numerator() and d.den == nxt.base**(n + 1),
                           (func.value, n))
            g = oracles.ratfun_derivative(g)

    for n in range(1, max(N, 30) + 1):
        t, h = arc.arc_deriv(A.ARCTAN, n), arc.arc_deriv(A.ARCTANH, n)
        absrel.record(h.numerator == IntPoly(abs(c) for c in t.numerator), n)
        c, ch = arc.arc_deriv(A.ARCCOT, n), arc.arc_deriv(A.ARCCOTH, n)
        reduction.record(c.scalar == -t.scalar and c.numerator == t.numerator
                         and ch.scalar == h.scalar and ch.numerator == h.numerator, n)
        zero.record(arc.arc_deriv_at_zero(n) == arc.arc_deriv_eval(A.ARCTAN, n, 0), n)
        same = n % 2 == 1
        refl = t.numerator.reflect()
        parity.record(refl == (t.numerator if same else -t.numerator), n)

    xs = [rng.uniform(-3, 3) for _ in range(100)]
    for n in range(1, 11):
        for x in xs:
            a = arc.arc_deriv_eval(A.ARCTAN, n, x)
            b = arc.cheb_form_eval(A.ARCTAN, n, x)
            c = arc.sin_arcsin_form_eval(n, x)
            three.record(rel_close(a, b, 1e-10) and rel_close(a, c, 1e-10)
                         and rel_close(b, c, 1e-10), (n, x))
            sign = 1 if n % 2 else -1
            parity.record(rel_close(arc.arc_deriv_eval(A.ARCTAN, n, -x), sign * a, 1e-12),
                          (n, x))
        for x in xs:
            y = x * 0.3  # (-0.9, 0.9)
            a = arc.arc_deriv_eval(A.ARCTANH, n, y)
            b = arc.cheb_form_eval(A.ARCTANH, n, y)
            hyp.record(rel_close(a, b, 1e-10), (n, y))

    grid = [k / 4 for k in range(-12, 13) if k != 0]
    for n in range(1, 9):
        g = _induction_lhs(n)
        for x in grid:
            fd = oracles.finite_difference(g, 1, x, 1e-5)
            induc.record(abs(fd - induction_rhs(n, x)) <= 1e-6, (n, x))

    for func in A:
        for _ in range(50):
            x = _arc_sample(func, rng)
            j = oracles.jet(func, x, 8)
            for n in range(1, 9):
                ok = rel_close(arc.arc_deriv_eval(func, n, x), j.derivative_at(n), 1e-9)
                jet.record(ok, (func.value, n, x))

    return [oracle, closure, absrel, reduction, zero, three, hyp, induc, parity, jet]


def suite_cheb(nmax=None, seed=42):
    rng = random.Random(seed)
    N = 64 if nmax is None else nmax
    K = cheb.Kind

    closed = Check("cheb", "closed_form_vs_recurrence")
    tfromu = Check("cheb", "t_from_u")
    refl = Check("cheb", "parity_reflection")
    struct = Check("cheb", "leading_coeff_and_value_at_one")
    bound = Check("cheb", "bounded_on_interval")
    sinas = Check("cheb", "sin_n_arcsin_vs_direct")
    defn = Check("cheb", "definition_consistency")

    for n in range(1, N + 1):
        for kind in K:
            c = cheb.cheb_closed(kind, n).poly
            closed.record(c == cheb.cheb_recurrence(kind, n).poly, (kind.value, n))
            sign = -1 if n % 2 else 1
            refl.record(c.reflect() == c.scale(sign), (kind.value, n))
        u = cheb.cheb_closed(K.SECOND, n).poly
        t = cheb.cheb_closed(K.FIRST, n).poly
        tfromu.record(cheb.t_from_u(n).poly == cheb.cheb_recurrence(K.FIRST, n).poly, n)
        struct.record(u.coeffs[-1] == 2**n and u(1) == n + 1
                      and t.coeffs[-1] == 2 ** (n - 1) and t(1) == 1, n)

    samples = [rng.uniform(-1, 1) for _ in range(200)]
    for n in range(21):
        u = cheb.cheb_closed(K.SECOND, n).poly
        t = cheb.cheb_closed(K.FIRST, n).poly
        bound.record(all(abs(u(x)) <= n + 1 + 1e-12 and abs(t(x)) <= 1 + 1e-12
                         for x in samples), n)

    grid = [Fraction(k - 50, 50) for k in range(101)]
    for n in range(16):
        for x in grid:
            xv = to_hp(x)
            direct = hp.sin(n * hp.asin(xv))
            sinas.record(abs(cheb.sin_n_arcsin(n, xv) - direct) <= 1e-12, (n, str(x)))
    for n in range(16):
        u = cheb.cheb_closed(K.SECOND, n).poly
        for x in grid[1:-1]:
            xv = to_hp(x)
            lhs = u(xv) * hp.sqrt(1 - xv * xv)
            defn.record(abs(lhs - hp.sin((n + 1) * hp.acos(xv))) <= 1e-12, (n, str(x)))
    return [closed, tfromu, refl, struct, bound, sinas, defn]


def complex_grid(steps=41, lo=-2, hi=2):
    """Exact-decimal grid over [lo, hi]^2 without the origin."""
    pts = []
    for i in range(steps):
        for k in range(steps):
            re = Fraction(lo) + Fraction(hi - lo) * i / (steps - 1)
            im = Fraction(lo) + Fraction(hi - lo) * k / (steps - 1)
            if re or im:
                pts.append(hp.mpc(to_hp(re), to_hp(im)))
    return pts


def suite_signum(nmax=None, seed=42):
    rng = random.Random(seed)
    table = Check("signum", "branch_table_vs_sqrt_formula")
    sqrt_ids = Check("signum", "sg_times_sqrt_identities")
    odd = Check("signum", "odd_and_self_inverse")
    sqrt_one = Check("signum", "sg_of_principal_sqrt_is_one")
    rot = Check("signum", "sg_ix_equals_sg_x_for_real_x")
    ident = Check("signum", "angle_identities_off_branch_cuts")

    for z in complex_grid():
        s = sgn.sg_complex(z)
        table.record(s == sgn.sg_sqrt_formula(z), z)
        r = hp.sqrt(z * z)
        sqrt_ids.record(abs(s * r - z) <= 1e-14 and abs(s * z - r) <= 1e-14, z)
        odd.record(sgn.sg_complex(-z) == -s and 1 / s == s, z)
        sqrt_one.record(sgn.sg_complex(hp.sqrt(z)) == 1, z)
    sqrt_one.record(sgn.sg_complex(hp.sqrt(hp.mpc(0))) == 1, 0)
    for x in [-2, -0.5, 0, 0.5, 2] + [rng.uniform(-5, 5) for _ in range(50)]:
        rot.record(sgn.sg_complex(hp.mpc(0, x)) == sgn.sg_real(x), x)

    # Off the imaginary axis (arctan form) and off the real axis (arctanh form)
    # the identities hold with principal logs; on the cuts see README.
    for _ in range(200):
        x = rng.uniform(-5, 5)
        ident.record(sgn.arctan_arccot_identity_residual(x) < 1e-12, x)
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        ident.record(sgn.arctan_arccot_identity_residual(z) < 1e-12, z)
        ident.record(sgn.arctanh_arccoth_identity_residual(z) < 1e-12, z)
    for y in (0.5, 2, 3):
        ident.record(sgn.arctan_arccot_identity_residual(complex(0, y)) < 1e-12, complex(0, y))
    return [table, sqrt_ids, odd, sqrt_one, rot, ident]


_RUNNERS = {
    "poly": suite_poly,
    "triangle": suite_triangle,
    "arc": suite_arc,
    "cheb": suite_cheb,
    "signum": suite_signum,
}


def run(suite: str = "all", nmax=None, seed: int = 42):
    names = SUITES if suite == "all" else (suite,)
    checks = []
    for name in names:
        checks.extend(_RUNNERS[name](nmax=nmax, seed=seed))
    return checks
