"""Real-root isolation for univariate polynomials.

Counting is exact: coefficients are converted to rationals (a float converts
exactly) and Sturm sequences are evaluated in integer arithmetic at dyadic
points. Roots are then refined by bisection. "Root n" always means the n-th
smallest *distinct* real root.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

DEFAULT_PRECISION = 1e-12


class RootIndexError(IndexError):
    """Requested root index exceeds the number of real roots."""


def _frac(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c)
    return Fraction(c) if isinstance(c, int) else Fraction(float(c))


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


class RealPoly:
    """Polynomial with real coefficients stored in ascending degree."""

    def __init__(self, coeffs):
        c = _trim(_frac(x) for x in coeffs)
        if not c:
            raise ValueError("zero polynomial")
        self.exact = tuple(c)
        self.coeffs = tuple(float(x) for x in c)

    @property
    def degree(self):
        return len(self.exact) - 1

    def __call__(self, x):
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        if self.degree == 0:
            raise ValueError("derivative of a constant is the zero polynomial")
        return RealPoly([k * c for k, c in enumerate(self.exact) if k > 0])

    def __repr__(self):
        return f"RealPoly({list(self.coeffs)})"


@dataclass(frozen=True)
class IndexedRoot:
    poly: RealPoly = field(repr=False)
    index: int
    value: float
    width: float
    multiplicity: int = 1
    lo: Fraction = field(default=Fraction(0), repr=False)
    hi: Fraction = field(default=Fraction(0), repr=False)


# --- exact polynomial helpers (lists of Fractions, ascending) ---------------

def _deriv(p):
    return [k * p[k] for k in range(1, len(p))]


def _divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        f = a[-1] / lb
        q[k] = f
        for i, bc in enumerate(b):
            a[i + k] -= f * bc
        a.pop()
        a = _trim(a)
    return _trim(q), a


def _monic(p):
    lc = p[-1]
    return [c / lc for c in p]


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    return _monic(a)


def _sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def squarefree_factors(coeffs):
    """Yun decomposition: returns [(a_i, i)] with f = lc * prod a_i**i."""
    f = _trim(_frac(c) for c in coeffs)
    if len(f) <= 1:
        return []
    out = []
    fp = _deriv(f)
    c = _gcd(f, fp)
    w = _divmod(f, c)[0]
    y = _divmod(fp, c)[0]
    z = _sub(y, _deriv(w))
    i = 1
    while len(w) > 1:
        g = _gcd(w, z) if z else _monic(w)
        if len(g) > 1:
            out.append((g, i))
        w = _divmod(w, g)[0]
        y = _divmod(z, g)[0] if z else []
        z = _sub(y, _deriv(w))
        i += 1
    return out


def _primitive_int(p):
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints] if g > 1 else ints


def sturm_chain(p):
    """Sturm sequence of a square-free polynomial, as primitive integer lists."""
    p = _trim(p)
    chain = [p, _deriv(p)]
    while len(chain[-1]) > 1:
        _, r = _divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [_primitive_int(q) for q in chain]


def _homog(ip, n, d):
    # sum c_k n^k d^(deg-k), evaluated Horner-style
    deg = len(ip) - 1
    acc = ip[deg]
    dp = 1
    for k in range(deg - 1, -1, -1):
        dp *= d
        acc = acc * n + ip[k] * dp
    return acc


def _variations(chain, x):
    count = 0
    last = 0
    for q in chain:
        v = _homog(q, x.numerator, x.denominator)
        s = (v > 0) - (v < 0)
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def _cauchy_bound(p):
    lc = abs(p[-1])
    m = max(abs(c) for c in p[:-1]) / lc if len(p) > 1 else Fraction(0)
    b = 1
    while b <= 1 + m:
        b *= 2
    return Fraction(b)


def sturm_count(coeffs, a, b):
    """Number of distinct real roots in the half-open interval (a, b]."""
    f = _trim(_frac(c) for c in coeffs)
    sf = _squarefree_part(f)
    if len(sf) <= 1:
        return 0
    chain = sturm_chain(sf)
    return _variations(chain, _frac(a)) - _variations(chain, _frac(b))


def _squarefree_part(f):
    if len(f) <= 1:
        return f
    g = _gcd(f, _deriv(f))
    return _divmod(f, g)[0] if len(g) > 1 else f


def _isolate(sf):
    chain = sturm_chain(sf)
    M = _cauchy_bound(sf)
    lo, hi = -M, M
    stack = [(lo, hi, _variations(chain, lo), _variations(chain, hi))]
    found = []
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1:
            found.append((a, b))
            continue
        mid = (a + b) / 2
        vm = _variations(chain, mid)
        stack.append((a, mid, va, vm))
        stack.append((mid, b, vm, vb))
    found.sort()
    return chain, found


def _refine(sf, chain, a, b, precision):
    ip = chain[0]
    if _homog(ip, b.numerator, b.denominator) == 0:
        return b, b
    sa = _homog(ip, a.numerator, a.denominator)
    steps = 0
    while b - a > precision and steps < 400:
        mid = (a + b) / 2
        if sa == 0:
            # a is a neighbouring root; fall back to counting
            if _variations(chain, a) - _variations(chain, mid) >= 1:
                b = mid
            else:
                a = mid
                sa = _homog(ip, a.numerator, a.denominator)
        else:
            sm = _homog(ip, mid.numerator, mid.denominator)
            if sm == 0:
                return mid, mid
            if (sm > 0) == (sa > 0):
                a, sa = mid, sm
            else:
                b = mid
        steps += 1
        if float(a) == float(b):
            break
    return a, b


def real_roots(p, precision=DEFAULT_PRECISION):
    """All distinct real roots of p, ascending, each bracketed to `precision`.

    Multiple roots are reported once, with their multiplicity.
    """
    if not isinstance(p, RealPoly):
        p = RealPoly(p)
    if p.degree < 1:
        raise ValueError("polynomial must have degree >= 1")
    prec = Fraction(precision)
    items = []
    for factor, mult in squarefree_factors(p.exact):
        chain, intervals = _isolate(factor)
        for a, b in intervals:
            lo, hi = _refine(factor, chain, a, b, prec)
            items.append((lo, hi, mult))
    items.sort()
    return [IndexedRoot(p, k + 1, float((lo + hi) / 2), float(hi - lo), mult, lo, hi)
            for k, (lo, hi, mult) in enumerate(items)]


def count_real_roots(p):
    if not isinstance(p, RealPoly):
        p = RealPoly(p)
    sf = _squarefree_part(list(p.exact))
    if len(sf) <= 1:
        return 0
    chain = sturm_chain(sf)
    M = _cauchy_bound(sf)
    return _variations(chain, -M) - _variations(chain, M)


def root_at_index(p, n, precision=DEFAULT_PRECISION):
    """The n-th smallest distinct real root (1-based)."""
    if not isinstance(p, RealPoly):
        p = RealPoly(p)
    if n < 1:
        raise RootIndexError(f"index out of range: {n} (indices start at 1)")
    if p.degree < 1:
        raise RootIndexError("index out of range: constant polynomial has no roots")
    sf = _squarefree_part(list(p.exact))
    chain, intervals = _isolate(sf)
    if n > len(intervals):
        raise RootIndexError(
            f"index out of range: asked for root {n}, polynomial has {len(intervals)} real roots")
    a, b = intervals[n - 1]
    lo, hi = _refine(sf, chain, a, b, Fraction(precision))
    return float((lo + hi) / 2)
