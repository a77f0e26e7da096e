"""Upper-triangular Toeplitz algebra for truncated expansions.

T(c_0, ..., c_n) is the upper-triangular matrix with t_ij = c_{j-i}. These
matrices multiply like power series truncated at degree n, which is all the
moment manipulations need.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import LengthMismatch, NotNormalizable
from .exact import MomentSequence, Polynomial, as_sequence, to_rational

__all__ = [
    "UpperToeplitz",
    "Regime",
    "Inversion",
    "expansion_product",
    "series_reciprocal",
    "monic_inverter",
    "invert_expansion",
]


@dataclass(frozen=True, init=False)
class UpperToeplitz:
    first_row: tuple

    def __init__(self, first_row: Sequence):
        object.__setattr__(self, "first_row", tuple(to_rational(x) for x in first_row))

    @property
    def size(self) -> int:
        return len(self.first_row)

    def matrix(self) -> list[list[Fraction]]:
        c, n = self.first_row, len(self.first_row)
        return [[c[j - i] if j >= i else Fraction(0) for j in range(n)] for i in range(n)]

    def __matmul__(self, other: "UpperToeplitz") -> "UpperToeplitz":
        return UpperToeplitz(expansion_product(self.first_row, other.first_row))


def expansion_product(c: Sequence, d: Sequence) -> list[Fraction]:
    """First row of T(c) T(d): the Cauchy product truncated to len(c) terms."""
    if len(c) != len(d):
        raise LengthMismatch(f"lengths {len(c)} and {len(d)} differ")
    c = [to_rational(x) for x in c]
    d = [to_rational(x) for x in d]
    return [sum((c[i] * d[k - i] for i in range(k + 1)), Fraction(0)) for k in range(len(c))]


def series_reciprocal(c: Sequence, length: int) -> list[Fraction]:
    """First ``length`` coefficients of 1/c(t) by back-substitution (c_0 != 0)."""
    c = [to_rational(x) for x in c]
    if not c or c[0] == 0:
        raise ZeroDivisionError("series with zero constant term has no reciprocal")
    out: list[Fraction] = []
    for k in range(length):
        acc = Fraction(1) if k == 0 else Fraction(0)
        for i in range(1, min(k, len(c) - 1) + 1):
            acc -= c[i] * out[k - i]
        out.append(acc / c[0])
    return out


class Regime(str, Enum):
    EVEN_E = "EVEN_E"
    ODD_O = "ODD_O"
    TAIL = "TAIL"


class Inversion(NamedTuple):
    p: Polynomial
    eps: int
    regime: Regime
    tail: MomentSequence | None


def _check_lead(s: MomentSequence, m: int | None) -> int:
    first = s.first_nonzero()
    if m is None:
        if first is None:
            raise NotNormalizable("sequence is identically zero")
        m = first
    if 2 * m > s.ell:
        raise NotNormalizable(f"need ell >= 2m, got ell={s.ell}, m={m}")
    if first != m:
        if s.is_zero(2 * m):
            raise NotNormalizable(f"sequence vanishes up to index {2 * m}")
        raise ValueError(f"first nonzero moment is at {first}, not at m={m}")
    return m


def monic_inverter(s, m: int | None = None, s_odd_choice=None) -> Polynomial:
    """The monic polynomial p of degree m + 1 with -s_m/phi = p + o(1).

    Its coefficients satisfy T(p_{m+1}, ..., p_1) T(s_m, ..., s_{2m}) = s_m I,
    with p_0 fixed by s_{2m+1}. When ell = 2m that moment is not part of the
    data and ``s_odd_choice`` (default 0) is used instead.
    """
    s = as_sequence(s)
    m = _check_lead(s, m)
    c = list(s.entries[m : 2 * m + 2])
    if len(c) == m + 1:
        c.append(to_rational(s_odd_choice) if s_odd_choice is not None else Fraction(0))
    d = [s[m] * x for x in series_reciprocal(c, m + 2)]
    return Polynomial(d[::-1])


def invert_expansion(s, m: int | None = None) -> Inversion:
    """Invert the expansion of phi with moments s around its leading moment.

    Writes -s_m/phi = p + eps * tau. For ell > 2m + 1 the moments of tau,
    tau_j = -eps * d_{m+2+j}, are returned as the tail.
    """
    s = as_sequence(s)
    m = _check_lead(s, m)
    eps = 1 if s[m] > 0 else -1
    p = monic_inverter(s, m)
    if s.ell == 2 * m:
        return Inversion(p, eps, Regime.EVEN_E, None)
    if s.ell == 2 * m + 1:
        return Inversion(p, eps, Regime.ODD_O, None)
    c = s.entries[m:]
    d = [s[m] * x for x in series_reciprocal(c, len(c))]
    tail = MomentSequence(-eps * d[m + 2 + j] for j in range(s.ell - 2 * m - 1))
    return Inversion(p, eps, Regime.TAIL, tail)
