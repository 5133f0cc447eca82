"""Volume polynomials of weighted Minkowski sums of hypersimplices (type A)
and of the signed analogues Gamma_{k,n} (type B), built by exact symbolic
integration over cross-sections, plus the permutohedron membership tests the
cross-section construction rests on.

All arithmetic is exact; nothing in this module uses floats.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import accumulate
from math import factorial, prod
from typing import Sequence

from .core import check_composition, check_type
from .polynomial import MVPoly

DEFAULT_ORACLE_CAP = 8

Vector = tuple[Fraction, ...]


class OracleError(ArithmeticError):
    """Raised when an extracted value is not a nonnegative integer."""


class OracleCapExceeded(RuntimeError):
    pass


def _recursion_terms(n: int, kind: str) -> list[tuple[int, list[MVPoly]]]:
    """(integration variable, arguments for f_{n-1}) for each cross-section case.

    Variables 0..n-1 are the weights, variable n is the slice parameter t.
    """
    nv = n + 1
    lam = [MVPoly.variable(nv, j) for j in range(n)]
    t = MVPoly.variable(nv, n)
    terms = [(0, [t + lam[1]] + lam[2:])]
    for i in range(1, n - 1):
        args = lam[: i - 1] + [lam[i - 1] + lam[i] - t, t + lam[i + 1]] + lam[i + 2:]
        terms.append((i, args))
    if kind == "A":
        terms.append((n - 1, lam[: n - 2] + [lam[n - 2] + lam[n - 1] - t]))
    else:
        terms.append((n - 1, lam[: n - 2] + [lam[n - 2] + lam[n - 1]]))
    return terms


@lru_cache(maxsize=None)
def _volume_poly(n: int, kind: str) -> MVPoly:
    if n == 1:
        return MVPoly(1, {(1,): 1 if kind == "A" else 2})
    lower = _volume_poly(n - 1, kind)
    zero = MVPoly(n + 1)
    total = MVPoly(n + 1)
    for var, args in _recursion_terms(n, kind):
        integrand = lower.compose(args)
        total = total + integrand.integrate(n, zero, MVPoly.variable(n + 1, var))
    if kind == "B":
        total = total.scale(2)
    return total.drop_variable(n)


def volume_poly(n: int, kind: str = "A", cap: int = DEFAULT_ORACLE_CAP) -> MVPoly:
    """Exact Vol(l1*P_1 + ... + ln*P_n) as a homogeneous polynomial of degree n."""
    kind = check_type(kind)
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise OracleCapExceeded(f"n={n} exceeds the oracle cap {cap}")
    return _volume_poly(n, kind)


def volume_poly_A(n: int, cap: int = DEFAULT_ORACLE_CAP) -> MVPoly:
    return volume_poly(n, "A", cap)


def volume_poly_B(n: int, cap: int = DEFAULT_ORACLE_CAP) -> MVPoly:
    return volume_poly(n, "B", cap)


def extract_mixed_eulerian(f: MVPoly, c: Sequence[int]) -> int:
    """c1!...cn! times the coefficient of l^c in f."""
    c = check_composition(c)
    n = len(c)
    if f.nvars != n or not f.is_homogeneous(n):
        raise OracleError(f"polynomial is not homogeneous of degree {n} in {n} variables")
    value = f.coefficient(c) * prod(factorial(ci) for ci in c)
    if value.denominator != 1 or value < 0:
        raise OracleError(f"extracted value {value} for {c} is not a nonnegative integer")
    return int(value)


def oracle_mixed_eulerian(c: Sequence[int], kind: str = "A", cap: int = DEFAULT_ORACLE_CAP) -> int:
    c = check_composition(c)
    return extract_mixed_eulerian(volume_poly(len(c), kind, cap), c)


# --- permutohedra -----------------------------------------------------------


def _vector(v: Sequence) -> Vector:
    return tuple(Fraction(x) for x in v)


def _check_decreasing(y: Vector):
    if any(a < b for a, b in zip(y, y[1:])):
        raise ValueError(f"{y} is not weakly decreasing")


def permutohedron_contains(y: Sequence, x: Sequence) -> bool:
    """Membership in P(y): sorted partial sums of x bounded by those of y, equal totals."""
    y, x = _vector(y), _vector(x)
    if len(y) != len(x):
        raise ValueError(f"dimension mismatch: {len(y)} vs {len(x)}")
    _check_decreasing(y)
    xs = sorted(x, reverse=True)
    if sum(xs) != sum(y):
        return False
    return all(a <= b for a, b in zip(accumulate(xs), accumulate(y)))


def signed_permutohedron_contains(y: Sequence, x: Sequence) -> bool:
    y, x = _vector(y), _vector(x)
    if len(y) != len(x):
        raise ValueError(f"dimension mismatch: {len(y)} vs {len(x)}")
    _check_decreasing(y)
    if y and y[-1] < 0:
        raise ValueError(f"{y} has a negative entry")
    xs = sorted((abs(v) for v in x), reverse=True)
    return all(a <= b for a, b in zip(accumulate(xs), accumulate(y)))


def minkowski_to_perm(lam: Sequence, kind: str = "A") -> Vector:
    """Weights on P_1..P_n to the (signed) permutohedron parameters y.

    Type A appends a trailing 0, giving n+1 coordinates.
    """
    kind = check_type(kind)
    lam = _vector(lam)
    if any(v < 0 for v in lam):
        raise ValueError(f"negative weight in {lam}")
    y = tuple(accumulate(reversed(lam)))[::-1]
    return y + (Fraction(0),) if kind == "A" else y


def perm_to_minkowski(y: Sequence, kind: str = "A") -> Vector:
    """Inverse of :func:`minkowski_to_perm`; type A drops the translation by y_{n+1}."""
    kind = check_type(kind)
    y = _vector(y)
    _check_decreasing(y)
    diffs = tuple(a - b for a, b in zip(y, y[1:]))
    if kind == "A":
        return diffs
    if y[-1] < 0:
        raise ValueError(f"{y} has a negative entry")
    return diffs + (y[-1],)


def cross_section_reduce(lam: Sequence, x, kind: str = "A") -> tuple[int, Vector]:
    """Slice the weighted Minkowski sum at first coordinate ``x``.

    Returns the 1-based case index i and the n-1 weights of the slice.  On a
    breakpoint the smaller i is used.  Type B slices depend on |x| only.
    """
    kind = check_type(kind)
    lam = _vector(lam)
    n = len(lam)
    if n < 1 or any(v < 0 for v in lam):
        raise ValueError(f"weights {lam} must be nonempty and nonnegative")
    x = Fraction(x)
    total = sum(lam)
    if kind == "B":
        if abs(x) > total:
            raise ValueError(f"|x|={abs(x)} outside [0, {total}]")
        x = abs(x)
    elif not 0 <= x <= total:
        raise ValueError(f"x={x} outside [0, {total}]")
    tails = tuple(accumulate(reversed(lam)))[::-1] + (Fraction(0),)
    i = next(i for i in range(1, n + 1) if tails[i] <= x <= tails[i - 1])
    t = tails[i - 1] - x
    if n == 1:
        return i, ()
    if i == 1:
        return i, (t + lam[1],) + lam[2:]
    if i < n:
        return i, lam[: i - 2] + (lam[i - 2] + lam[i - 1] - t, t + lam[i]) + lam[i + 1:]
    last = lam[n - 2] + lam[n - 1]
    return i, lam[: n - 2] + (last - t if kind == "A" else last,)


@lru_cache(maxsize=None)
def _newton_cotes(points: int) -> tuple[Fraction, ...]:
    """Exact closed Newton-Cotes weights on [0, 1]; exact for degree < points."""
    if points == 1:
        return (Fraction(1),)
    d = points - 1
    nodes = [Fraction(k, d) for k in range(points)]
    weights = []
    for k, xk in enumerate(nodes):
        coeffs = [Fraction(1)]  # ascending powers of u
        denom = Fraction(1)
        for j, xj in enumerate(nodes):
            if j == k:
                continue
            coeffs = [a - xj * b for a, b in zip([Fraction(0)] + coeffs, coeffs + [Fraction(0)])]
            denom *= xk - xj
        weights.append(sum(a / (p + 1) for p, a in enumerate(coeffs)) / denom)
    return tuple(weights)


def fubini_volume(lam: Sequence, kind: str = "A", reverse: bool = False) -> Fraction:
    """Volume as the exact integral over x of the slice volumes.

    Slice volumes come from the degree n-1 polynomial, so on each piece the
    integrand is a polynomial of degree n-1 in x and an n-point Newton-Cotes
    rule integrates it exactly.  ``reverse`` slices the mirrored sum instead.
    """
    kind = check_type(kind)
    lam = _vector(lam)
    if reverse:
        if kind == "B":
            raise ValueError("type B sums have no mirror symmetry; reverse slicing is type A only")
        lam = lam[::-1]
    n = len(lam)
    lower = None if n == 1 else _volume_poly(n - 1, kind)

    def slice_volume(x: Fraction) -> Fraction:
        if lower is None:
            return Fraction(1)
        return lower.evaluate(cross_section_reduce(lam, x, kind)[1])

    tails = tuple(accumulate(reversed(lam)))[::-1] + (Fraction(0),)
    weights = _newton_cotes(n)
    total = Fraction(0)
    for i in range(n):
        a, b = tails[i + 1], tails[i]
        if a == b:
            continue
        if len(weights) == 1:
            nodes = [a]
        else:
            nodes = [a + (b - a) * Fraction(k, n - 1) for k in range(n)]
        total += (b - a) * sum(w * slice_volume(x) for w, x in zip(weights, nodes))
    return 2 * total if kind == "B" else total
