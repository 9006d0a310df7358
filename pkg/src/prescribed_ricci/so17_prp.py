"""ric = T and ric = cT on SO0(1,7)/G2, where the two isotropy summands are equivalent.

Invariant metrics are <Phi^-1 ., .> with Phi = [[x, z], [z, y]] (x, y > 0,
xy - z^2 > 0) acting on p1 + p2 = R^7 (x) R^2, or equivalently phi-triples
(a, b, c) with Phi = phi^2. Ricci tensors and prescribed tensors are
(t1, t2, t3): t1 on p1, t2 on p2 and t3 pairing x_i with x_{i+7}.

Normalized tensors are described by (l, m) = (t2/t1, |t3|/t1).
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
import math
from typing import NamedTuple, Optional

import numpy as np
from scipy.optimize import brentq, least_squares, minimize_scalar

from . import _kernels
from ._types import PhiParams, PhiSqrtParams, RicTriple
from .polyroots import RootIndexError, count_real_roots, real_roots, root_at_index

SINGULAR_TOL = 1e-12
MEMBER_TOL = 1e-9
BOUNDARY_TOL = 1e-9

SQRT3 = math.sqrt(3.0)
INV_SQRT3 = 1.0 / SQRT3
SQRT_2_3 = math.sqrt(2.0 / 3.0)
THREE_SQRT3_5 = 3.0 * SQRT3 / 5.0
DIAG_L_MIN = -(2.0 + math.sqrt(5.0)) / 3.0  # smallest t2/t1 reachable with t3 = 0


class RegionPoint(NamedTuple):
    l: float
    m: float


# --- closed-form Ricci functions ------------------------------------------

def ric_abc(p):
    """Ricci triple from a phi-triple (a, b, c), ab - c^2 != 0."""
    a, b, c = p
    det = c * c - a * b
    if abs(det) < SINGULAR_TOL:
        raise ValueError("singular phi: ab - c^2 = 0")
    D = 24 * det ** 4
    r1 = (9 * a**4 * (b**4 + c**4) - 36 * a**3 * b * c**2 * (b**2 - c**2)
          + 6 * a**2 * c**2 * (b**4 + 20 * b**2 * c**2 + c**4)
          + 12 * a * b * c**2 * (b**4 + 5 * b**2 * c**2 - 2 * c**4)
          + b**8 + 10 * b**6 * c**2 + 27 * b**4 * c**4 + 10 * b**2 * c**6 + 10 * c**8) / D
    r2 = (-2 * ((a * a + c * c)**2 + 2 * c * c * (a + b)**2 + (b * b + c * c)**2) * det**2
          + c * c * (2 * a * a * b + a * (b * b + c * c) + b**3 + 3 * b * c * c)**2
          + c * c * (3 * a + b)**2 * (a * a + c * c)**2
          + 2 * (a**3 * b + 2 * a * a * c * c + 3 * a * b * c * c + b * b * c * c + c**4)**2
          - 12 * det**4) / D
    r3 = -c * (a + b) * (b * b + c * c) * (3 * a * a + b * b + 4 * c * c)**2 / D
    return RicTriple(r1, r2, r3)


def _check_phi(p):
    x, y, z = p
    if not (x > 0 and y > 0 and x * y - z * z > 0):
        raise ValueError("Phi must satisfy x > 0, y > 0, xy - z^2 > 0")


def ric_xyz(p):
    """Ricci triple from a positive-definite Phi-triple (x, y, z)."""
    _check_phi(p)
    x, y, z = p
    if all(isinstance(v, (int, Fraction)) for v in p):
        x, y, z = (Fraction(v) for v in p)
        d = 24 * (z * z - x * y) ** 2
        r1 = (9 * x * x * y * y - 18 * x * y * z * z + y**4 + 6 * y * y * z * z + 18 * z**4) / d
        r2 = (-3 * x * x * (4 * y * y - 3 * z * z) - 2 * x * (y**3 - 12 * y * z * z)
              + 3 * y * y * z * z - 6 * z**4) / d
        r3 = -y * z * (3 * x + y) ** 2 / d
        return RicTriple(r1, r2, r3)
    r1, r2, r3 = _kernels.ric_xyz_numpy(x, y, z)
    return RicTriple(float(r1), float(r2), float(r3))


def phi_square(p):
    a, b, c = p
    if abs(a * b - c * c) < SINGULAR_TOL:
        raise ValueError("singular phi: ab - c^2 = 0")
    return PhiParams(a * a + c * c, b * b + c * c, c * (a + b))


def phi_sqrt(p):
    """Principal (positive-definite) square root of Phi."""
    _check_phi(p)
    x, y, z = p
    s = math.sqrt(x * y - z * z)
    t = math.sqrt(x + y + 2 * s)
    return PhiSqrtParams((x + s) / t, (y + s) / t, z / t)


# --- the cubic relation between r1, r2, r3 -------------------------------

def cubic_coeffs(t2, t3):
    """Ascending coefficients in t1 of the cubic vanishing on the Ricci image."""
    q2 = t3 * t3
    return [
        -432 * t2 * t2 - 432 * t2 - 768 * q2 * q2 - 288 * q2 - 135,
        1152 * t2 * t2 + 1536 * t2 * q2 + 1152 * t2 + 1536 * q2 + 432,
        -768 * t2 * t2 - 768 * t2 - 432,
        128,
    ]


def cubic_value(t1, t2, t3):
    c = cubic_coeffs(t2, t3)
    return c[0] + t1 * (c[1] + t1 * (c[2] + t1 * c[3]))


def cubic_scale(t1, t2, t3):
    """Largest monomial magnitude of the cubic, for relative residuals."""
    q2 = t3 * t3
    terms = [432 * t2 * t2, 432 * abs(t2), 768 * q2 * q2, 288 * q2, 135,
             abs(t1) * 1152 * t2 * t2, abs(t1) * 1536 * abs(t2) * q2, abs(t1) * 1152 * abs(t2),
             abs(t1) * 1536 * q2, abs(t1) * 432, t1 * t1 * 768 * t2 * t2, t1 * t1 * 768 * abs(t2),
             t1 * t1 * 432, 128 * abs(t1) ** 3]
    return max(terms)


def f1(t2, t3, precision=1e-12):
    """Smallest real root in t1 of the cubic at (t2, t3)."""
    return root_at_index(_exactify(cubic_coeffs(_q(t2), _q(t3))), 1, precision)


def _q(v):
    return v if isinstance(v, Fraction) else Fraction(float(v))


def _exactify(coeffs):
    return [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]


def exceptional_t3(t2):
    """|t3| on the curve where the image is t1 = 3/4 instead of the cubic's first root."""
    return 0.5 * math.sqrt(1.5) * math.sqrt(4 * t2 + 3)


def generic_lower_t3(t2):
    """Lower bound on |t3| for image points with t2 > -1/2."""
    return SQRT3 / 4 * math.sqrt(2 * t2 + 1)


# --- ric = T ------------------------------------------------------------------

@dataclass
class TVerdict:
    member: bool
    branch: Optional[str]
    expected_t1: Optional[float] = None
    reason: str = ""

    def __bool__(self):
        return self.member


def _close(a, b, tol):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def t_branch(t2, t3, tol=MEMBER_TOL):
    """Which description of t1 applies at (t2, t3); None if no image point has them."""
    if t3 == 0:
        return "diagonal" if t2 < -0.5 else None
    a3 = abs(t3)
    on_curve = t2 > -0.75 and _close(a3, exceptional_t3(t2), tol)
    if t2 <= -0.75:
        return "cubic_low"
    if on_curve:
        return "exceptional"
    if t2 <= -0.5:
        return "cubic_mid"
    if a3 > generic_lower_t3(t2):
        return "cubic_high"
    return None


def solve_T_so17(T, tol=MEMBER_TOL):
    """Is T = (t1, t2, t3) the Ricci tensor of some invariant metric?"""
    t1, t2, t3 = T
    branch = t_branch(t2, t3, tol)
    if branch is None:
        if t3 == 0:
            return TVerdict(False, None, None, "t3 = 0 requires t2 < -1/2")
        return TVerdict(False, None, None, "t2 > -1/2 requires |t3| above the lower bound")
    if branch == "diagonal":
        expect = 6 * t2 * t2 + 6 * t2 + 15 / 8
    elif branch == "exceptional":
        expect = 0.75
    else:
        expect = f1(t2, t3)
    ok = _close(t1, expect, tol)
    return TVerdict(ok, branch, expect, "" if ok else f"t1 should be {expect!r}")


# --- region bounds ------------------------------------------------------------

def _bound_poly(tag, m):
    m2 = m * m
    m4 = m2 * m2
    if tag == "275":
        return [-2 - 75 * m2, 6 - 180 * m2, 180 - 378 * m2, 756 - 324 * m2, 1134 - 243 * m2, 486]
    if tag == "2213":
        return [-2160 * m4 * m2 + 5112 * m4 + 213 * m2 - 2, 5616 * m4 - 3780 * m2 + 6,
                -648 * m4 - 1242 * m2 + 180, 972 * m2 + 756, 1134 - 243 * m2, 486]
    if tag == "4507":
        return [4 - 507 * m2, 51 - 1404 * m2, 252 - 1674 * m2, 594 - 972 * m2, 648 - 243 * m2, 243]
    if tag == "25":
        return [-25 * m2, 1 + 60 * m2, 12 - 126 * m2, 54 + 108 * m2, 108 - 81 * m2, 81]
    if tag == "1168":
        return [1 - 168 * m2 + 144 * m4, 12 + 144 * m2, 54 + 216 * m2, 108, 81]
    if tag == "166360":
        return [16 - 6360 * m2 + 47961 * m4, 216 + 8478 * m2 + 149796 * m4,
                1161 + 54432 * m2 + 176094 * m4, 3132 + 64476 * m2 + 92340 * m4,
                4374 + 29160 * m2 + 18225 * m4, 2916 + 4374 * m2, 729]
    if tag == "150":
        return [-150 * m2 + 75 * m4, 2 - 231 * m2 + 540 * m4, 42 + 4806 * m2 + 3402 * m4,
                378 + 14742 * m2 + 8748 * m4, 1890 - 6966 * m2 + 19683 * m4,
                5670 - 45927 * m2, 10206 - 13122 * m2, 10206, 4374]
    raise KeyError(tag)


BOUND_TAGS = ("275", "2213", "4507", "25", "1168", "166360", "150")
ROOT_BOUNDS = {
    "f275m1": ("275", 1), "f2213m1": ("2213", 1), "f4507m1": ("4507", 1), "f4507m2": ("4507", 2),
    "f25m1": ("25", 1), "f1168m1": ("1168", 1), "f1168m2": ("1168", 2),
    "f166360m1": ("166360", 1), "f166360m2": ("166360", 2),
    "f150m1": ("150", 1), "f150m2": ("150", 2),
}
EXPLICIT_BOUNDS = {
    "m2": lambda m: m * m,
    "c4": lambda m: (3 * m * m - 4) / 3,
    "c2": lambda m: (m * m - 2) / 2,
}
BOUND_NAMES = tuple(ROOT_BOUNDS) + tuple(EXPLICIT_BOUNDS)


def bound_poly(tag, m):
    return _bound_poly(tag, _q(m))


def bound_value(name, m, precision=1e-12):
    """Evaluate a named region bound at m; raises RootIndexError outside its domain."""
    if name in EXPLICIT_BOUNDS:
        return float(EXPLICIT_BOUNDS[name](float(m)))
    tag, idx = ROOT_BOUNDS[name]
    return root_at_index(bound_poly(tag, m), idx, precision)


def f1168_radicals(m):
    """Closed forms of the two real roots of the 1168 quartic, valid for m <= 2/sqrt(3).

    The quartic equals (9l^2 + 6l + 1 + 12m^2)^2 - 192 m^2, so
    l = (-1 -+ 2 sqrt(2 sqrt(3) m - 3 m^2)) / 3.
    """
    rad = 2 * SQRT3 * m - 3 * m * m
    if rad < 0:
        raise ValueError("no real roots for m > 2/sqrt(3)")
    s = 2 * math.sqrt(rad)
    return (-1 - s) / 3, (-1 + s) / 3


# --- crossover abscissas ------------------------------------------------------

@dataclass(frozen=True)
class Crossover:
    name: str
    value: float
    anchor: str  # reference decimal the value must round to
    kind: str  # "cross", "touch" or "merge"
    curves: tuple

    def anchor_ok(self):
        """Value rounds to the anchor decimal (half a unit in its last place)."""
        digits = len(self.anchor.split(".")[1])
        return abs(self.value - float(self.anchor)) <= 0.5 * 10 ** (-digits) + 1e-12


def _diff(a, b):
    return lambda m: bound_value(a, m) - bound_value(b, m)


def _cross(a, b, lo, hi):
    return brentq(_diff(a, b), lo, hi, xtol=1e-15, rtol=1e-15)


def _touch(a, b, lo, hi):
    d = _diff(a, b)
    res = minimize_scalar(lambda m: abs(d(m)), bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-13})
    return float(res.x)


def _merge(tag, lo, hi):
    # the m where the number of distinct real roots drops, by bisection on the count
    count = lambda m: count_real_roots(bound_poly(tag, m))
    n_lo = count(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if count(mid) == n_lo:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-15:
            break
    return 0.5 * (lo + hi)


# (name, anchor decimal, kind, curves, bracket)
_CROSSOVER_SPECS = (
    ("m281", ".281", "cross", ("f166360m2", "m2"), (0.27, 0.29)),
    ("m372", ".372", "cross", ("f150m2", "m2"), (0.36, 0.38)),
    ("m423", ".423", "cross", ("f275m1", "f4507m1"), (0.41, 0.43)),
    ("m556", ".556", "touch", ("f2213m1", "f4507m1"), (0.55, 0.56)),
    ("m625", ".625", "merge", ("4507",), (0.60, 0.65)),
    ("m875", ".875", "touch", ("f2213m1", "f166360m1"), (0.86, 0.88)),
    ("m986", ".986", "touch", ("f2213m1", "f1168m1"), (0.98, 0.99)),
    ("m109", "1.09", "cross", ("f150m1", "c4"), (1.08, 1.10)),
    ("m111", "1.11", "cross", ("f1168m2", "c4"), (1.10, 1.12)),
    ("m113", "1.13", "cross", ("f1168m2", "f150m1"), (1.12, 1.14)),
    ("m117", "1.17", "cross", ("f150m2", "c4"), (1.16, 1.18)),
    ("m140", "1.40", "cross", ("f25m1", "c4"), (1.39, 1.41)),
    ("m152a", "1.52", "touch", ("f2213m1", "f150m1"), (1.51, 1.5195)),
    ("m152b", "1.52", "merge", ("150",), (1.51, 1.53)),
    ("m156", "1.56", "cross", ("f275m1", "c4"), (1.55, 1.57)),
    ("m222", "2.22", "touch", ("f2213m1", "f25m1"), (2.20, 2.23)),
)


@lru_cache(maxsize=1)
def crossovers():
    """All m-abscissas bounding the region clauses, computed from the bound curves."""
    out = {}
    for name, anchor, kind, curves, (lo, hi) in _CROSSOVER_SPECS:
        if kind == "cross":
            v = _cross(curves[0], curves[1], lo, hi)
        elif kind == "touch":
            v = _touch(curves[0], curves[1], lo, hi)
        else:
            v = _merge(curves[0], lo, hi)
        out[name] = Crossover(name, v, anchor, kind, curves)
    return out


def m_constants():
    c = {k: v.value for k, v in crossovers().items()}
    c.update({"0": 0.0, "inf": math.inf, "inv_sqrt3": INV_SQRT3, "sqrt_2_3": SQRT_2_3,
              "3sqrt3_5": THREE_SQRT3_5})
    return c


# --- the 14 regions -----------------------------------------------------------
# (m_lo, lo_closed, m_hi, hi_closed, lower_bound, lower_op, upper_bound, upper_op)
# lower_op "le" means bound <= l, "lt" bound < l, "eq" l == bound (no upper bound).

REGIONS = {
    1: [("0", False, "inf", False, "c2", "le", "m2", "lt")],
    2: [("0", False, "inv_sqrt3", False, "f275m1", "le", "c4", "lt")],
    3: [("0", False, "sqrt_2_3", True, "f2213m1", "le", "c2", "le"),
        ("sqrt_2_3", False, "inf", False, "f2213m1", "le", "c4", "lt")],
    4: [("0", False, "m625", True, "f4507m1", "eq", None, None),
        ("inv_sqrt3", False, "m625", False, "f4507m2", "eq", None, None)],
    5: [("inv_sqrt3", False, "inf", False, "f275m1", "le", "m2", "lt")],
    6: [("inv_sqrt3", False, "m986", True, "f1168m1", "lt", "c4", "lt"),
        ("inv_sqrt3", False, "m111", True, "f1168m2", "lt", "f25m1", "lt"),
        ("m111", False, "m140", False, "f2213m1", "le", "f25m1", "lt"),
        ("m222", True, "inf", False, "f25m1", "lt", "c4", "lt")],
    7: [("inv_sqrt3", False, "m111", True, "f1168m2", "lt", "f275m1", "le"),
        ("m111", False, "m156", True, "f2213m1", "le", "f275m1", "le")],
    8: [("inv_sqrt3", False, "m222", True, "f25m1", "lt", "f275m1", "le"),
        ("m222", False, "inf", False, "f2213m1", "le", "f275m1", "le")],
    9: [("m281", False, "inv_sqrt3", True, "f166360m2", "lt", "m2", "lt"),
        ("inv_sqrt3", False, "sqrt_2_3", True, "f166360m1", "lt", "c4", "lt"),
        ("inv_sqrt3", False, "sqrt_2_3", True, "f166360m2", "lt", "f25m1", "lt"),
        ("sqrt_2_3", False, "m875", True, "f166360m1", "lt", "f25m1", "lt")],
    10: [("0", False, "m372", True, "f4507m1", "lt", "m2", "lt"),
         ("m372", False, "m556", True, "f4507m1", "lt", "f150m2", "lt"),
         ("m556", False, "m152a", False, "f2213m1", "le", "f150m2", "lt"),
         ("m152a", True, "m152b", False, "f150m1", "lt", "f150m2", "lt")],
    11: [("m372", False, "inv_sqrt3", True, "f150m2", "lt", "m2", "lt"),
         ("inv_sqrt3", False, "m117", True, "f150m2", "lt", "f25m1", "lt"),
         ("m117", False, "m140", False, "f150m1", "lt", "f25m1", "lt"),
         ("m140", True, "m152b", True, "f150m1", "lt", "c4", "lt")],
    12: [("3sqrt3_5", False, "m117", True, "f150m2", "lt", "f275m1", "le"),
         ("m117", False, "m152b", True, "f150m1", "lt", "f275m1", "le")],
    13: [("3sqrt3_5", False, "m113", True, "f1168m2", "lt", "f150m2", "lt"),
         ("m109", False, "m113", True, "f2213m1", "le", "f150m1", "lt")],
    14: [("0", False, "m423", False, "f2213m1", "le", "f4507m1", "lt"),
         ("m423", True, "m556", False, "f2213m1", "le", "f275m1", "le"),
         ("m556", True, "inv_sqrt3", False, "f4507m1", "lt", "f275m1", "le"),
         ("inv_sqrt3", True, "m625", False, "f4507m1", "lt", "f4507m2", "lt")],
}


@dataclass
class RegionVerdict:
    contained: bool
    region_ids: list
    boundary: bool = False
    near: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)

    def __bool__(self):
        return self.contained


def _m_in(m, lo, lo_closed, hi, hi_closed):
    ok_lo = m >= lo if lo_closed else m > lo
    ok_hi = m <= hi if hi_closed else m < hi
    return ok_lo and ok_hi


def _cmp(op, a, b):
    return a <= b if op == "le" else a < b


def region_contains(pt, boundary_tol=BOUNDARY_TOL):
    """Check (l, m), m > 0, against every clause of the 14 regions."""
    l, m = float(pt[0]), float(pt[1])
    if not m > 0:
        raise ValueError("m must be positive; use the t3 = 0 description on the axis")
    consts = m_constants()
    cache = {}
    verdict = RegionVerdict(False, [])

    def bound(name, where):
        if name not in cache:
            try:
                cache[name] = bound_value(name, m)
            except RootIndexError as exc:
                cache[name] = None
                verdict.diagnostics.append(f"{name} undefined at m={m!r} ({where}): {exc}")
        return cache[name]

    for rid, clauses in REGIONS.items():
        hit = False
        for k, (mlo, lo_c, mhi, hi_c, lb, lop, ub, uop) in enumerate(clauses, start=1):
            lo_v, hi_v = consts[mlo], consts[mhi]
            if not _m_in(m, lo_v, lo_c, hi_v, hi_c):
                for edge in (lo_v, hi_v):
                    if math.isfinite(edge) and abs(m - edge) <= boundary_tol and edge > 0:
                        verdict.boundary = True
                        verdict.near.append(f"region {rid}.{k} m-edge")
                continue
            a = bound(lb, f"region {rid}.{k}")
            if a is None:
                continue
            if lop == "eq":
                if abs(l - a) <= boundary_tol:
                    hit = True
                    verdict.boundary = True
                    verdict.near.append(lb)
                continue
            if abs(l - a) <= boundary_tol:
                verdict.boundary = True
                verdict.near.append(lb)
            if not _cmp(lop, a, l):
                continue
            b = bound(ub, f"region {rid}.{k}")
            if b is None:
                continue
            if abs(l - b) <= boundary_tol:
                verdict.boundary = True
                verdict.near.append(ub)
            if _cmp(uop, l, b):
                hit = True
        if hit:
            verdict.region_ids.append(rid)
    verdict.contained = bool(verdict.region_ids)
    return verdict


def diagonal_contains(l):
    """t3 = 0 slice: ric = cT solvable iff this holds for l = t2/t1."""
    return DIAG_L_MIN - 1e-15 <= l < 0


# --- ric = cT -----------------------------------------------------------------

@dataclass
class CTResult:
    solutions: list  # list of (c, branch)
    in_region: bool
    region_ids: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)

    @property
    def c_values(self):
        return [c for c, _ in self.solutions]


def scaled_quartic(l, m):
    """Ascending coefficients in c0 of the cubic evaluated at (c0, c0 l, c0 m)."""
    l2, m2 = l * l, m * m
    return [
        -135,
        432 - 432 * l,
        -432 + 1152 * l - 432 * l2 - 288 * m2,
        128 - 768 * l + 1152 * l2 + 1536 * m2,
        -768 * (l - m2) ** 2,
    ]


def solve_cT_so17(T, tol=MEMBER_TOL):
    """All c > 0 with ric(g) = cT for some invariant metric g."""
    t1, t2, t3 = T
    if not t1 > 0:
        raise ValueError("t1 must be positive (every Ricci tensor here has r1 > 3/8)")
    l = t2 / t1
    m = abs(t3) / t1
    res = CTResult([], False)
    if t3 == 0:
        res.in_region = diagonal_contains(l)
        # c0 = 6 (c0 l)^2 + 6 c0 l + 15/8
        coeffs = [Fraction(15, 8), 6 * _q(l) - 1, 6 * _q(l) ** 2]
        cands = _positive_roots(coeffs)
    else:
        reg = region_contains((l, m))
        res.in_region, res.region_ids = reg.contained, reg.region_ids
        res.diagnostics.extend(reg.diagnostics)
        cands = _positive_roots(scaled_quartic(_q(l), _q(m)))
    for c0 in cands:
        v = solve_T_so17((c0, c0 * l, c0 * m), tol)
        if v.member:
            res.solutions.append((c0 / t1, v.branch))
    if res.in_region != bool(res.solutions):
        res.diagnostics.append(
            f"region verdict {res.in_region} disagrees with {len(res.solutions)} c-solutions")
    return res


def _positive_roots(coeffs):
    try:
        roots = real_roots(coeffs)
    except ValueError:
        return []
    return [r.value for r in roots if r.value > 0]


# --- numeric preimage oracle ---------------------------------------------------

@dataclass
class OracleVerdict:
    verdict: str  # "member", "non-member" or "inconclusive"
    residual: float
    xyz: Optional[tuple] = None


ORACLE_Z = np.sinh(np.linspace(0.0, 6.0, 121))
ORACLE_W = np.linspace(-10.0, 25.0, 141)
ORACLE_BOUNDS = ([0.0, -12.0], [1e3, 30.0])


def oracle_xyz(z, w):
    """The metric behind oracle parameters: Phi = (1, z^2 + e^w, z)."""
    z, w = float(z), float(w)
    return 1.0, z * z + math.exp(w), z


def _oracle_residuals(v, l, m):
    r1, r2, r3 = _kernels.ric_unit_x_numpy(v[0], v[1])
    return np.array([r2 / r1 - l, abs(r3) / r1 - m])


def region_oracle(pt, tol=1e-5, margin=100.0, n_refine=6):
    """Search for a metric whose normalized Ricci tensor is (1, l, m).

    Ricci ratios are scale invariant, so Phi is normalized to x = 1 and
    written as (1, z^2 + e^w, z) with z >= 0 (the sign of z only flips r3).
    A coarse grid picks starting points and bounded least squares refines
    them. "member" if the best squared residual is below tol^2, "non-member"
    if it stays above margin * tol^2, otherwise "inconclusive".
    """
    l, m = float(pt[0]), float(pt[1])
    grid = _kernels.residual_grid(ORACLE_Z, ORACLE_W, l, m)
    grid = np.where(np.isfinite(grid), grid, np.inf)
    order = np.argsort(grid, axis=None, kind="stable")[:n_refine]
    best = (math.inf, None)
    for idx in order:
        i, j = np.unravel_index(idx, grid.shape)
        x0 = np.array([ORACLE_Z[i], ORACLE_W[j]])
        sol = least_squares(_oracle_residuals, x0, args=(l, m), method="trf",
                            bounds=ORACLE_BOUNDS, xtol=1e-15, ftol=1e-15, gtol=1e-15,
                            max_nfev=400)
        r = float(np.sum(sol.fun ** 2))
        if r < best[0]:
            best = (r, sol.x)
    r, v = best
    xyz = oracle_xyz(*v) if v is not None else None
    if r < tol * tol:
        return OracleVerdict("member", r, xyz)
    if r > margin * tol * tol:
        return OracleVerdict("non-member", r, xyz)
    return OracleVerdict("inconclusive", r, xyz)
