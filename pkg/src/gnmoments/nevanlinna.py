"""Real rational functions as generalized Nevanlinna functions.

Negative indices come from Kronecker's theorem (inertia of the Hankel
matrix of the moments). Multiplicities of generalized poles and zeros of
nonpositive type are read off from the exact local behaviour
phi ~ a * w**e, where w = λ - alpha at a real point and w = λ at infinity.
Along the ray λ = alpha + iy a quantity w**k * phi then tends to 0, to a,
or to infinity according to the sign of k + e, so every limit condition
reduces to a table lookup.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import DegenerateTransform, ImproperFunction
from .exact import (
    RationalFunction,
    as_sequence,
    laurent_expand,
    moments_from_expansion,
    to_rational,
)
from .hankel import hankel_matrix, inertia

__all__ = [
    "INF",
    "GNIndexReport",
    "ParameterCheck",
    "Verdict",
    "kronecker_kappa",
    "kappa_of",
    "gpnt_multiplicity",
    "gznt_multiplicity",
    "apply_lft",
    "check_parameter",
    "verify_solution",
    "index_report",
]


class _Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "∞"


INF = _Infinity()


def kronecker_kappa(phi) -> int:
    """Negative index of a rational phi vanishing at infinity."""
    phi = RationalFunction.coerce(phi)
    if not phi.is_strictly_proper():
        raise ImproperFunction("kronecker_kappa needs deg num < deg den")
    if phi.is_zero():
        return 0
    n = phi.den.degree
    s = moments_from_expansion(laurent_expand(phi, 2 * n + 1), 2 * n)
    return inertia(hankel_matrix(s, n + 1)).nu_minus


def kappa_of(phi) -> int:
    """Negative index of any real rational function.

    The polynomial part only carries a generalized pole at infinity, the
    strictly proper part is handled by Kronecker's theorem, and indices of
    summands without common generalized poles add up.
    """
    phi = RationalFunction.coerce(phi)
    poly = phi.polynomial_part()
    k = kronecker_kappa(phi - poly)
    if poly.degree >= 1:
        k += gpnt_multiplicity(RationalFunction(poly), INF)
    return k


def _local(phi: RationalFunction, point) -> tuple[int, Fraction]:
    """(e, a) with phi ~ a * w**e near the point."""
    if phi.is_zero():
        raise ValueError("local behaviour of the zero function")
    if point is INF:
        return phi.num.degree - phi.den.degree, phi.num.leading / phi.den.leading
    alpha = to_rational(point)
    kn, qn = phi.num.root_multiplicity(alpha)
    kd, qd = phi.den.root_multiplicity(alpha)
    return kn - kd, qn(alpha) / qd(alpha)


# limit of w**k * phi along the ray, for phi ~ a w**e
_ZERO, _VAL, _INF = "zero", "value", "inf"


def _lim(e: int, a: Fraction, k: int, at_infinity: bool):
    x = k + e
    if x == 0:
        return _VAL
    # at a finite point w -> 0, at infinity w -> infinity
    if at_infinity:
        return _INF if x > 0 else _ZERO
    return _ZERO if x > 0 else _INF


def _ok(kind: str, a: Fraction, allow_zero: bool, allow_inf: bool, sign: int) -> bool:
    if kind == _ZERO:
        return allow_zero
    if kind == _INF:
        return allow_inf
    return (a > 0) if sign > 0 else (a < 0)


def _search(e: int, a: Fraction, test) -> int:
    for k in range(0, abs(e) + 3):
        if test(k):
            return k
    return 0


def gpnt_multiplicity(phi, point) -> int:
    """Multiplicity of phi's generalized pole of nonpositive type at point.

    At a real alpha, k is the number with
    -inf < lim (λ-alpha)**(2k+1) phi <= 0 and 0 < lim (λ-alpha)**(2k-1) phi <= inf.
    At infinity, 0 <= lim phi/λ**(2k+1) < inf and -inf <= lim phi/λ**(2k-1) < 0.
    Returns 0 when no k qualifies.
    """
    phi = RationalFunction.coerce(phi)
    e, a = _local(phi, point)
    if point is INF:
        def test(k):
            return _ok(_lim(e, a, -(2 * k + 1), True), a, True, False, +1) and _ok(
                _lim(e, a, -(2 * k - 1), True), a, False, True, -1
            )
    else:
        def test(k):
            return _ok(_lim(e, a, 2 * k + 1, False), a, True, False, -1) and _ok(
                _lim(e, a, 2 * k - 1, False), a, False, True, +1
            )
    return _search(e, a, test)


def gznt_multiplicity(phi, point) -> int:
    """Multiplicity of phi's generalized zero of nonpositive type at point.

    At a real beta: 0 < lim phi/(λ-beta)**(2k+1) <= inf and
    -inf < lim phi/(λ-beta)**(2k-1) <= 0. At infinity:
    -inf <= lim λ**(2k+1) phi < 0 and 0 <= lim λ**(2k-1) phi < inf.
    """
    phi = RationalFunction.coerce(phi)
    e, a = _local(phi, point)
    if point is INF:
        def test(k):
            return _ok(_lim(e, a, 2 * k + 1, True), a, False, True, -1) and _ok(
                _lim(e, a, 2 * k - 1, True), a, True, False, +1
            )
    else:
        def test(k):
            return _ok(_lim(e, a, -(2 * k + 1), False), a, False, True, +1) and _ok(
                _lim(e, a, -(2 * k - 1), False), a, True, False, -1
            )
    return _search(e, a, test)


@dataclass(frozen=True)
class GNIndexReport:
    kappa: int
    pi_inf: int
    kappa_inf: int
    kappa_0: int
    pi_0: int


def index_report(phi) -> GNIndexReport:
    phi = RationalFunction.coerce(phi)
    if phi.is_zero():
        return GNIndexReport(0, 0, 0, 0, 0)
    return GNIndexReport(
        kappa_of(phi),
        gznt_multiplicity(phi, INF),
        gpnt_multiplicity(phi, INF),
        gpnt_multiplicity(phi, 0),
        gznt_multiplicity(phi, 0),
    )


def apply_lft(W, tau) -> RationalFunction:
    """(w11 tau + w12) / (w21 tau + w22), reduced."""
    tau = RationalFunction.coerce(tau)
    tn, td = tau.num, tau.den
    num = W.w11 * tn + W.w12 * td
    den = W.w21 * tn + W.w22 * td
    if den.is_zero():
        raise DegenerateTransform("w21*tau + w22 vanishes identically")
    return RationalFunction(num, den)


@dataclass(frozen=True)
class ParameterCheck:
    kappa_tau: int
    satisfies_E: bool
    satisfies_O: bool
    in_subclass_1: bool
    odd_shift: Fraction = Fraction(0)


def check_parameter(tau, desc=None) -> ParameterCheck:
    """Class and growth conditions of a rational parameter.

    (E) is tau = o(λ), i.e. tau proper. (O) is tau + shift = o(1), where the
    shift is the descriptor's ``odd_shift`` (0 without a descriptor).
    """
    tau = RationalFunction.coerce(tau)
    shift = getattr(desc, "odd_shift", Fraction(0)) if desc is not None else Fraction(0)
    e = tau.is_proper()
    return ParameterCheck(
        kappa_tau=kappa_of(tau),
        satisfies_E=e,
        satisfies_O=(tau + shift).is_strictly_proper(),
        in_subclass_1=e,
        odd_shift=shift,
    )


class FailedCheck:
    NOT_VANISHING_AT_INFINITY = "NOT_VANISHING_AT_INFINITY"
    MOMENT_MISMATCH = "MOMENT_MISMATCH"
    KAPPA_MISMATCH = "KAPPA_MISMATCH"


class Verdict(NamedTuple):
    status: str
    failed_check: str | None = None
    detail: dict = {}

    @property
    def passed(self) -> bool:
        return self.status == "PASS"


def verify_solution(s, kappa: int, kind: str, phi) -> Verdict:
    """Check that phi solves the moment problem with data s and index kappa.

    The checks run in order: phi vanishes at infinity, its first ell + 1
    moments equal s, and its negative index equals kappa. For rational phi
    the MP and IP versions coincide, so ``kind`` does not change the verdict.
    """
    if kind not in ("MP", "IP"):
        raise ValueError(f"kind must be MP or IP, got {kind!r}")
    s = as_sequence(s)
    phi = RationalFunction.coerce(phi)
    if not phi.is_strictly_proper():
        return Verdict(
            "FAIL",
            FailedCheck.NOT_VANISHING_AT_INFINITY,
            {"deg_num": phi.num.degree, "deg_den": phi.den.degree},
        )
    got = moments_from_expansion(laurent_expand(phi, s.ell + 1), s.ell)
    for j, (x, y) in enumerate(zip(s.entries, got.entries)):
        if x != y:
            return Verdict("FAIL", FailedCheck.MOMENT_MISMATCH, {"index": j, "expected": x, "got": y})
    k = kronecker_kappa(phi)
    if k != kappa:
        return Verdict("FAIL", FailedCheck.KAPPA_MISMATCH, {"expected": kappa, "got": k})
    return Verdict("PASS", None, {})
