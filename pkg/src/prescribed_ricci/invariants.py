"""Self-checks run by ``prescribed-ricci verify``.

Each check returns a CheckResult; sample sizes are small enough that the
whole suite finishes in well under a minute. The acceptance tests use the
same building blocks with larger samples.
"""
from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from . import generic_prp as gp
from . import lie_core, polyroots, registry
from . import so17_prp as sp


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def random_phi(rng, n, zero_z=False):
    """n positive-definite Phi triples (x, y, z), spread over a few decades."""
    out = []
    while len(out) < n:
        x, y = np.exp(rng.uniform(-2.0, 2.0, 2))
        z = 0.0 if zero_z else rng.uniform(-0.95, 0.95) * math.sqrt(x * y)
        if not zero_z and abs(z) < 1e-3:
            continue
        out.append((float(x), float(y), float(z)))
    return out


def _rel(a, b):
    return max(abs(u - v) / max(1.0, abs(u), abs(v)) for u, v in zip(a, b))


def check_structure_sums():
    s = lie_core.structure_sums(exact=True)
    want = (7, 7, Fraction(7, 6), Fraction(7, 6))
    got = (s.d1, s.d2, s.p1_sum, s.p2_sum)
    ok = got == want and s.p2_sum_alt == Fraction(7, 6)
    return CheckResult("structure_sums", ok, f"{got}, alt={s.p2_sum_alt}")


def check_killing_form():
    d = lie_core.killing_adjoint_discrepancy()
    return CheckResult("killing_form_scale", d == 0, f"max discrepancy {d}")


def check_basis():
    B = lie_core.build_p_basis().all
    worst = 0.0
    for i in range(14):
        if not lie_core.in_so17(B[i]):
            return CheckResult("basis_orthonormal", False, f"x_{i + 1} not in so(1,7)")
        sym = 1.0 if i >= 7 else -1.0  # p2 symmetric, p1 antisymmetric
        if np.abs(B[i].T - sym * B[i]).max() > 0:
            return CheckResult("basis_orthonormal", False, f"x_{i + 1} has the wrong symmetry")
        for j in range(14):
            worst = max(worst, abs(lie_core.fixed_inner(B[i], B[j]) - (i == j)))
    return CheckResult("basis_orthonormal", worst < 1e-12, f"max deviation {worst:.3g}")


def check_cartan_relations():
    """[p1,p1] and [p2,p2] have no p2 part, [p1,p2] has no p1 part; ad_X is
    skew on p for X in p1 and symmetric for X in p2."""
    B = lie_core.build_p_basis().all
    P = np.array([[lie_core.project_p(lie_core.bracket(B[i], B[j])) for j in range(14)]
                  for i in range(14)])  # P[i, j, k] = <[x_i, x_j], x_k>
    worst = max(np.abs(P[:7, :7, 7:]).max(), np.abs(P[7:, 7:, 7:]).max(),
                np.abs(P[:7, 7:, :7]).max(), np.abs(P[7:, :7, :7]).max())
    adsym = 0.0
    for i in range(14):
        sign = -1.0 if i < 7 else 1.0
        adsym = max(adsym, np.abs(P[i] - sign * P[i].T).max())
    ok = worst < 1e-12 and adsym < 1e-12
    return CheckResult("cartan_relations", ok, f"max wrong-part {worst:.3g}, ad symmetry defect {adsym:.3g}")


def check_oracle_equivalence(n=40, seed=1):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for p in random_phi(rng, n):
        worst = max(worst, _rel(lie_core.ric_oracle(xyz=p), sp.ric_xyz(p)))
    for _ in range(n):
        a, b = np.exp(rng.uniform(-1.0, 1.0, 2))
        c = rng.uniform(-0.9, 0.9) * math.sqrt(a * b)
        abc = (float(a), float(b), float(c))
        worst = max(worst, _rel(lie_core.ric_oracle(abc=abc), sp.ric_abc(abc)))
    return CheckResult("oracle_equivalence", worst < 1e-9, f"max rel diff {worst:.3g}")


def check_closed_form_symmetries(n=60, seed=11):
    """Substitution identity, scale invariance and the z -> -z reflection."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n):
        a, b = np.exp(rng.uniform(-1.0, 1.0, 2))
        c = float(rng.uniform(-0.9, 0.9) * math.sqrt(a * b))
        abc = (float(a), float(b), c)
        worst = max(worst, _rel(sp.ric_abc(abc), sp.ric_xyz(sp.phi_square(abc))))
    for x, y, z in random_phi(rng, n):
        r = sp.ric_xyz((x, y, z))
        s_ = float(np.exp(rng.uniform(-3, 3)))
        worst = max(worst, _rel(sp.ric_xyz((s_ * x, s_ * y, s_ * z)), r))
        worst = max(worst, _rel(sp.ric_xyz((x, y, -z)), (r.r1, r.r2, -r.r3)))
    g = sp.ric_xyz((1, 1, Fraction(1, 2)))
    exact = tuple(sp.ric_xyz((1, 1, Fraction(-1, 2)))) == (g.r1, g.r2, -g.r3)
    return CheckResult("closed_form_symmetries", worst < 1e-10 and exact, f"max rel diff {worst:.3g}")


def check_golden_point():
    want = (Fraction(65, 108), Fraction(-43, 108), Fraction(-16, 27))
    closed = tuple(sp.ric_xyz((1, 1, Fraction(1, 2))))
    brute = lie_core.ric_oracle_exact(1, 1, Fraction(1, 2))
    cub = sp.cubic_value(*[Fraction(v) for v in want])
    ok = closed == want and tuple(brute) == want and cub == 0
    return CheckResult("golden_point", ok, f"closed={closed}, cubic={cub}")


def check_cubic_image(n=60, seed=2):
    rng = np.random.default_rng(seed)
    worst, cub, r1_min = 0.0, 0.0, math.inf
    for p in random_phi(rng, n):
        r1, r2, r3 = sp.ric_xyz(p)
        r1_min = min(r1_min, r1)
        cub = max(cub, abs(sp.cubic_value(r1, r2, r3)) / sp.cubic_scale(r1, r2, r3))
        if sp.t_branch(r2, r3) == "exceptional":
            continue
        worst = max(worst, abs(sp.f1(r2, r3) - r1) / max(1.0, abs(r1)))
    ok = worst < 1e-9 and cub < 1e-9 and r1_min > 0.375
    return CheckResult("cubic_image", ok,
                       f"max |f1 - r1| {worst:.3g}, cubic residual {cub:.3g}, min r1 {r1_min:.6f}")


def check_diagonal_consistency(n=40, seed=3):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for p in random_phi(rng, n, zero_z=True):
        r1, r2, r3 = sp.ric_xyz(p)
        worst = max(worst, abs(r3), abs(r1 - (6 * r2 * r2 + 6 * r2 + 15 / 8)))
        t1, _ = gp.solve_T(gp.SO17_PARAMS, r2)
        worst = max(worst, abs(t1 - r1))
    tau = gp.threshold_tau(gp.SO17_PARAMS)
    worst = max(worst, abs(tau - (6 - 3 * math.sqrt(5))), abs(1 / tau - sp.DIAG_L_MIN))
    return CheckResult("diagonal_consistency", worst < 1e-12, f"max deviation {worst:.3g}")


GENERIC_PARAM_SETS = (
    gp.SO17_PARAMS,
    gp.TwoSummandParams(5, 4, 0, 2),
    gp.TwoSummandParams(1, 2, 0, 1),
    gp.TwoSummandParams(10, 12, 3, 5),
    gp.TwoSummandParams(6, 9, Fraction(1, 2), Fraction(3, 2)),
)


def check_generic_signs(n=40, seed=12):
    rng = np.random.default_rng(seed)
    ok = True
    for params in GENERIC_PARAM_SETS:
        for lam in np.exp(rng.uniform(-8, 8, n)):
            r = gp.ric_diag(params, float(lam))
            ok &= r.t1 > 0 and r.t2 < 0
    return CheckResult("generic_sign_theorem", bool(ok), "r1 > 0 and r2 < 0 for all sampled metrics")


def check_generic_roundtrip(n=40, seed=4):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for params in GENERIC_PARAM_SETS:
        for t2 in -0.5 - np.exp(rng.uniform(-6, 3, n)):
            t1, lam = gp.solve_T(params, float(t2))
            r = gp.ric_diag(params, lam)
            worst = max(worst, abs(r.t1 - t1) / max(1.0, abs(t1)), abs(r.t2 - t2) / max(1.0, abs(t2)))
    return CheckResult("generic_T_roundtrip", worst < 1e-12, f"max rel error {worst:.3g}")


def check_generic_cT(n=40, seed=5):
    rng = np.random.default_rng(seed)
    worst, quad, both, stray = 0.0, 0.0, 0, 0
    for params in GENERIC_PARAM_SETS:
        tau = gp.threshold_tau(params)
        low = gp.second_band_low(params)
        for ratio in rng.uniform(min(low, tau) - 3.0, tau, n):
            t2 = -float(np.exp(rng.uniform(-1, 1)))
            t1 = float(ratio) * t2
            if t1 <= 0:
                continue
            res = gp.analyze_cT(params, t1, t2)
            both += res.solution_count == 2
            A, B, C0 = gp.quadratic_in_c(params, t1, t2)
            for s in res.solutions:
                r = gp.ric_diag(params, s.lam)
                worst = max(worst, abs(r.t1 - s.c * t1), abs(r.t2 - s.c * t2))
                quad = max(quad, abs(A * s.c * s.c + B * s.c + C0))
            if not params.trivial_p1 and ratio < low and res.c_minus is not None:
                stray += res.c_minus > 0 and res.lambda_minus > 0
    # t1/t2 = tau exactly, with t2 = -1
    at_tau = gp.analyze_cT(gp.SO17_PARAMS, -gp.threshold_tau(gp.SO17_PARAMS), -1.0)
    gap = abs(at_tau.c_plus - at_tau.c_minus)
    ok = worst < 1e-10 and quad < 1e-10 and both > 0 and stray == 0 and gap < 1e-9
    return CheckResult("generic_cT_roundtrip", ok,
                       f"max error {worst:.3g}, quadratic residual {quad:.3g}, two-solution cases {both}, "
                       f"admissible c- outside the band {stray}, |c+ - c-| at tau {gap:.3g}")


def check_trivial_regime():
    res = gp.analyze_cT(gp.TwoSummandParams(1, 2, 0, 1), 1.0, -1.0)
    s = res.solutions[0]
    d = res.diagnostics
    ok = (abs(s.c - 1) < 1e-12 and abs(s.lam - 2) < 1e-12
          and d["general_roundtrip_error"] < 1e-12 and d["d1_formula_roundtrip_error"] > 1e-6)
    return CheckResult("trivial_regime", ok,
                       f"c={s.c}, lambda={s.lam}, d1-formula error {d['d1_formula_roundtrip_error']:.3g}")


def check_polyroots(n=30, seed=6):
    rng = np.random.default_rng(seed)
    for _ in range(n):
        roots = sorted(rng.integers(-5, 6, rng.integers(1, 6)).tolist())
        coeffs = [int(c) for c in np.poly1d(roots, r=True).coeffs[::-1]]
        got = polyroots.real_roots(coeffs)
        distinct = sorted(set(roots))
        if [round(r.value) for r in got] != distinct:
            return CheckResult("polyroots", False, f"roots {roots}: got {[r.value for r in got]}")
        mult = [r.multiplicity for r in got]
        if mult != [roots.count(v) for v in distinct]:
            return CheckResult("polyroots", False, f"roots {roots}: multiplicities {mult}")
    return CheckResult("polyroots", True, f"{n} random integer-rooted polynomials")


def check_polyroot_certificates(n=30, seed=13):
    """Sign change across each simple root, Sturm count agreement, and
    stability of count and order under refinement."""
    rng = np.random.default_rng(seed)
    for _ in range(n):
        coeffs = [int(c) for c in rng.integers(-20, 21, rng.integers(3, 9))]
        if coeffs[-1] == 0:
            coeffs[-1] = 1
        coarse = polyroots.real_roots(coeffs, precision=1e-4)
        fine = polyroots.real_roots(coeffs, precision=1e-12)
        if len(coarse) != len(fine) or len(fine) != polyroots.count_real_roots(coeffs):
            return CheckResult("polyroot_certificates", False, f"count mismatch for {coeffs}")
        if any(not (c.lo <= f.value <= c.hi) for c, f in zip(coarse, fine)):
            return CheckResult("polyroot_certificates", False, f"order changed for {coeffs}")
        exact = polyroots.RealPoly(coeffs).exact
        ev = lambda x: sum(c * x ** k for k, c in enumerate(exact))
        for r in fine:
            if r.multiplicity == 1 and ev(r.lo) * ev(r.hi) > 0:
                return CheckResult("polyroot_certificates", False, f"no sign change at root {r.value}")
    return CheckResult("polyroot_certificates", True, f"{n} random integer polynomials")


def check_crossovers():
    bad = [c.name for c in sp.crossovers().values() if not c.anchor_ok()]
    return CheckResult("crossover_anchors", not bad, "all round to their anchor decimals" if not bad else f"off: {bad}")


def check_so17_cT():
    out = []
    for T, want in (((5 / 6, -7 / 6, 0.0), 0.5), ((65 / 36, -43 / 36, 16 / 9), 1 / 3)):
        cs = sp.solve_cT_so17(T).c_values
        out.append(any(abs(c - want) < 1e-9 for c in cs))
    none = sp.solve_cT_so17((1.0, -2.0, 0.0)).c_values == []
    return CheckResult("so17_cT_scaling", all(out) and none, f"found={out}, exterior empty={none}")


def check_so17_cT_roundtrip(n=20, seed=14):
    """Image points give c = 1, every returned c makes cT an image point,
    and t1 <= 0 is rejected."""
    rng = np.random.default_rng(seed)
    missing, bad = 0, 0
    for p in random_phi(rng, n):
        T = tuple(sp.ric_xyz(p))
        res = sp.solve_cT_so17(T)
        missing += not any(abs(c - 1) < 1e-9 for c in res.c_values)
        bad += sum(not sp.solve_T_so17(tuple(c * t for t in T)).member for c in res.c_values)
    try:
        sp.solve_cT_so17((-1.0, -1.0, 0.5))
        rejects = False
    except ValueError:
        rejects = True
    ok = missing == 0 and bad == 0 and rejects
    return CheckResult("so17_cT_roundtrip", ok,
                       f"image points without c = 1: {missing}, c failing membership: {bad}, t1 <= 0 rejected: {rejects}")


def check_region_oracle(n=12, seed=7):
    rng = np.random.default_rng(seed)
    disagree = []
    for p in random_phi(rng, n):
        r1, r2, r3 = sp.ric_xyz(p)
        pt = (r2 / r1, abs(r3) / r1)
        if not sp.region_contains(pt).contained or sp.region_oracle(pt).verdict != "member":
            disagree.append(pt)
    for pt in ((-2.0, 0.1), (0.5, 0.1), (0.05, 0.2), (9.1, 3.0)):
        if sp.region_contains(pt).contained or sp.region_oracle(pt).verdict != "non-member":
            disagree.append(pt)
    return CheckResult("region_vs_oracle", not disagree, f"disagreements {disagree}")


def check_registry():
    rep = registry.integrity_report()
    e = registry.lookup("I.16")
    ok = all(rep.values()) and "equivalent_summands" in e.flags
    return CheckResult("registry_integrity", ok, ", ".join(k for k, v in rep.items() if not v) or "ok")


ALL_CHECKS = (
    check_structure_sums, check_killing_form, check_basis, check_cartan_relations,
    check_oracle_equivalence, check_closed_form_symmetries, check_golden_point,
    check_cubic_image, check_diagonal_consistency, check_generic_signs,
    check_generic_roundtrip, check_generic_cT, check_trivial_regime, check_polyroots,
    check_polyroot_certificates, check_crossovers, check_so17_cT, check_so17_cT_roundtrip,
    check_region_oracle, check_registry,
)


def run_all():
    results = []
    for fn in ALL_CHECKS:
        try:
            results.append(fn())
        except Exception as exc:  # a crash counts as a failed check
            results.append(CheckResult(fn.__name__.removeprefix("check_"), False, f"{type(exc).__name__}: {exc}"))
    return results
