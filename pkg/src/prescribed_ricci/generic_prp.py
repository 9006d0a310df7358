"""Closed-form ric = T and ric = cT for homogeneous spaces with two isotropy summands.

Conventions: T = t1 <.,.>_1 + t2 <.,.>_2 where <.,.>_i is the fixed inner
product restricted to the i-th summand; p' (index 1) lies in k and p''
(index 2) does not. A metric is x1 <.,.>_1 + x2 <.,.>_2 and only the ratio
lambda = x1/x2 matters for the Ricci coefficients.
"""
from dataclasses import dataclass, field
from fractions import Fraction
import math
from typing import Optional

BOUNDARY_BAND = 1e-9


class NotInImage(ValueError):
    """The prescribed tensor is not a Ricci tensor of any invariant metric."""


def _num(v):
    if isinstance(v, str):
        return Fraction(v)
    return v


@dataclass(frozen=True)
class TwoSummandParams:
    d1: int
    d2: int
    p1: object
    p2: object
    summand_signs: tuple = field(default=(1, -1), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "p1", _num(self.p1))
        object.__setattr__(self, "p2", _num(self.p2))
        if self.d1 < 1 or self.d2 < 1:
            raise ValueError("dimensions must be positive")
        if not self.p2 > 0:
            raise ValueError("p2 must be positive")
        if self.p1 < 0:
            raise ValueError("p1 must be nonnegative")
        if self.p1 + self.p2 > self.d1:
            raise ValueError("need p1 + p2 <= d1")
        if 2 * self.p2 > self.d2:
            raise ValueError("need 2 p2 <= d2")

    @property
    def trivial_p1(self):
        """p1 = 0 and p2 = d1 = 1: the first summand carries the trivial h-action."""
        return self.p1 == 0 and self.p2 == 1 and self.d1 == 1

    @property
    def k(self):
        # the recurring combination 2 d1 - p1 - 2 p2
        return 2 * self.d1 - self.p1 - 2 * self.p2


SO17_PARAMS = TwoSummandParams(7, 7, Fraction(7, 6), Fraction(7, 6))


@dataclass(frozen=True)
class DiagTensor:
    t1: float
    t2: float


@dataclass
class CTSolution:
    c: float
    lam: float
    branch: str  # "plus", "minus", "trivial"


@dataclass
class CTAnalysis:
    tau: float
    second_band_low: float
    ratio: float
    solutions: list
    c_plus: Optional[float] = None
    c_minus: Optional[float] = None
    lambda_plus: Optional[float] = None
    lambda_minus: Optional[float] = None
    boundary: bool = False
    trivial_regime: bool = False
    diagnostics: dict = field(default_factory=dict)

    @property
    def solution_count(self):
        return len(self.solutions)


def _f(v):
    return float(v)


def ric_diag(params, lam):
    """Ricci coefficients (r1, r2) of the metric with ratio lambda = x1/x2."""
    if not lam > 0:
        raise ValueError("lambda must be positive")
    d1, d2, p2 = params.d1, params.d2, _f(params.p2)
    r1 = _f(params.k) / (4 * d1) + p2 / (4 * d1) * lam * lam
    r2 = -0.5 - p2 / (2 * d2) * lam
    return DiagTensor(r1, r2)


def lambda_for(params, t2):
    """Metric ratio realizing r2 = t2 (r2 is affine and decreasing in lambda)."""
    return (-2.0 * params.d2 / _f(params.p2)) * (t2 + 0.5)


def solve_T(params, t2):
    """Given t2 < -1/2, return (t1, lambda) with ric_diag(lambda) = (t1, t2)."""
    if not t2 < -0.5:
        raise NotInImage(f"t2 = {t2} is not below -1/2; no metric has this r2")
    d1, d2, p2 = params.d1, params.d2, _f(params.p2)
    a = d2 * d2 / (d1 * p2)
    t1 = a * t2 * t2 + a * t2 + (p2 * params.k + d2 * d2) / (4 * d1 * p2)
    return t1, lambda_for(params, t2)


def in_image_T(params, t1, t2, tol=1e-9):
    try:
        expect, _ = solve_T(params, t2)
    except NotInImage:
        return False
    return abs(expect - t1) <= tol * max(1.0, abs(expect))


def threshold_tau(params):
    """Largest value of t1/t2 for which ric = cT has a solution."""
    d1, d2, p2 = params.d1, params.d2, _f(params.p2)
    k = _f(params.k)
    return d2 * d2 / (d1 * p2) - (d2 / d1) * math.sqrt(d2 * d2 / (p2 * p2) + k / p2)


def second_band_low(params):
    """Lower end of the two-solution band for t1/t2."""
    return -_f(params.k) / (2 * params.d1)


def quadratic_in_c(params, t1, t2):
    """Coefficients (A, B, C0) of A c^2 + B c + C0 = 0 solved by every admissible c."""
    d1, d2, p2 = params.d1, params.d2, _f(params.p2)
    a = d2 * d2 / (d1 * p2)
    return a * t2 * t2, a * t2 - t1, d2 * d2 / (4 * p2 * d1) + _f(params.k) / (4 * d1)


def trivial_c(params, t1, t2):
    """Single c for the trivial-p1 regime, d1 = p2 = 1, p1 = 0."""
    d2 = params.d2
    disc = t1 * t1 - 2 * d2 * d2 * t1 * t2
    return (t1 - d2 * d2 * t2 + math.sqrt(disc)) / (2 * d2 * d2 * t2 * t2)


def analyze_cT(params, t1, t2):
    """Solve ric = cT (c > 0) for a diagonal T with t1 > 0, t2 < 0."""
    if not t1 > 0:
        raise ValueError("t1 must be positive")
    if not t2 < 0:
        raise ValueError("t2 must be negative")
    tau = threshold_tau(params)
    low = second_band_low(params)
    ratio = t1 / t2
    out = CTAnalysis(tau=tau, second_band_low=low, ratio=ratio, solutions=[])

    if params.trivial_p1:
        out.trivial_regime = True
        c = trivial_c(params, t1, t2)
        lam = lambda_for(params, c * t2)
        out.solutions.append(CTSolution(c, lam, "trivial"))
        out.c_plus, out.lambda_plus = c, lam
        # -2 d1 (c t2 + 1/2) looks like the same formula with d1 = 1 but drops
        # the d2 dependence; report how far off it is next to the correct one
        alt = -2.0 * params.d1 * (c * t2 + 0.5)
        out.diagnostics["lambda_d1_formula"] = alt
        out.diagnostics["lambda_general"] = lam
        out.diagnostics["d1_formula_roundtrip_error"] = _roundtrip_error(params, alt, c, t1, t2)
        out.diagnostics["general_roundtrip_error"] = _roundtrip_error(params, lam, c, t1, t2)
        return out

    A, B, C0 = quadratic_in_c(params, t1, t2)
    disc = B * B - 4 * A * C0
    band = BOUNDARY_BAND * max(1.0, abs(tau))
    if abs(ratio - tau) <= band:
        # the discriminant vanishes at tau; rounding leaves ~1e-16 which sqrt inflates
        out.boundary = True
        disc = 0.0
    elif ratio > tau:
        return out
    sq = math.sqrt(max(disc, 0.0))
    c_plus = (-B + sq) / (2 * A)
    c_minus = (-B - sq) / (2 * A)
    for c, tag in ((c_plus, "plus"), (c_minus, "minus")):
        lam = lambda_for(params, c * t2)
        if tag == "plus":
            out.c_plus, out.lambda_plus = c, lam
        else:
            out.c_minus, out.lambda_minus = c, lam
    out.solutions.append(CTSolution(c_plus, out.lambda_plus, "plus"))
    if out.boundary:
        return out
    if low < ratio < tau and c_minus > 0 and out.lambda_minus > 0:
        out.solutions.append(CTSolution(c_minus, out.lambda_minus, "minus"))
    return out


def _roundtrip_error(params, lam, c, t1, t2):
    if not lam > 0:
        return math.inf
    r = ric_diag(params, lam)
    return max(abs(r.t1 - c * t1), abs(r.t2 - c * t2))


# --- products of symmetric spaces ------------------------------------------

RIC_SYMMETRIC = -0.5  # Ricci coefficient of any invariant metric on a symmetric factor


@dataclass
class ProductResult:
    solvable: bool
    c: Optional[float] = None
    message: str = ""


def product_case_solve(mode, T, tol=1e-12):
    """ric = T or ric = cT on a product of two irreducible noncompact symmetric spaces.

    Every invariant metric there has ric = -1/2 (B restricted to p) in the
    fixed coordinates, so only multiples of (-1/2, -1/2) are reachable.
    """
    t1, t2 = (T.t1, T.t2) if isinstance(T, DiagTensor) else T
    if mode in ("T", "ric=T"):
        ok = abs(t1 - RIC_SYMMETRIC) <= tol and abs(t2 - RIC_SYMMETRIC) <= tol
        return ProductResult(ok, 1.0 if ok else None,
                             "any metric works" if ok else "no solution: T must equal (-1/2, -1/2)")
    if mode in ("cT", "ric=cT"):
        if abs(t1 - t2) <= tol * max(1.0, abs(t1)) and t1 < 0:
            return ProductResult(True, RIC_SYMMETRIC / t1, "any metric works")
        return ProductResult(False, None, "no solution: T is not a negative multiple of (-1/2, -1/2)")
    raise ValueError(f"unknown mode {mode!r}")
