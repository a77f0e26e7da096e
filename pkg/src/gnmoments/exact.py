"""Exact arithmetic substrate: rationals, polynomials, rational functions and
Laurent expansions at infinity.

Everything here is immutable and uses :class:`fractions.Fraction`, so rank and
sign decisions made further up never depend on rounding.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable

from .errors import (
    ImproperFunction,
    NonzeroConstantTerm,
    ZeroDenominator,
)

__all__ = [
    "to_rational",
    "format_rational",
    "Polynomial",
    "RationalFunction",
    "LaurentExpansion",
    "MomentSequence",
    "laurent_expand",
    "moments_from_expansion",
    "rf_normalize",
    "moments_of",
    "as_sequence",
    "VAR",
]

VAR = "λ"

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def to_rational(x) -> Fraction:
    """Coerce ``x`` to a Fraction without ever going through a float.

    Accepts ints, Fractions, other exact rationals and strings of the form
    ``"p"`` or ``"p/q"``. Floats are rejected on purpose.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        m = _RATIONAL_RE.match(x.replace("−", "-"))
        if m is None:
            raise ValueError(f"malformed rational {x!r}")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise ZeroDenominator(f"zero denominator in {x!r}")
        return Fraction(num, den)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


class Polynomial:
    """Dense univariate polynomial with rational coefficients, ascending order.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [to_rational(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    # constructors
    @classmethod
    def constant(cls, a) -> "Polynomial":
        return cls((a,))

    @classmethod
    def monomial(cls, k: int, a=1) -> "Polynomial":
        return cls([0] * k + [a])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @staticmethod
    def coerce(p) -> "Polynomial":
        if isinstance(p, Polynomial):
            return p
        if isinstance(p, (list, tuple)):
            return Polynomial(p)
        return Polynomial((p,))

    # basic data
    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def __getitem__(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def __iter__(self):
        return iter(self._c)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Polynomial((other,))._c
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self._c))

    def __bool__(self):
        return bool(self._c)

    # arithmetic
    def __neg__(self):
        return Polynomial(-a for a in self._c)

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        n = max(len(self._c), len(other._c))
        return Polynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if not self._c or not other._c:
            return Polynomial()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "Polynomial":
        """Multiply by λ**k."""
        if not self._c:
            return self
        return Polynomial((0,) * k + self._c)

    def scale(self, a) -> "Polynomial":
        a = to_rational(a)
        return Polynomial(a * c for c in self._c)

    def __divmod__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDenominator("polynomial division by zero")
        rem = list(self._c)
        dd = other.degree
        lead = other.leading
        q = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1 - dd, -1, -1):
            f = rem[k + dd] / lead
            q[k] = f
            if f:
                for i, b in enumerate(other._c):
                    rem[k + i] -= f * b
        return Polynomial(q), Polynomial(rem[:dd] if dd > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        x = to_rational(x)
        acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def monic(self) -> "Polynomial":
        if not self._c:
            return self
        return self.scale(1 / self.leading)

    def derivative(self) -> "Polynomial":
        return Polynomial(k * a for k, a in enumerate(self._c) if k)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic gcd by the Euclidean algorithm over Q (zero if both are zero)."""
        a, b = self, _as_poly(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def root_multiplicity(self, alpha) -> tuple[int, "Polynomial"]:
        """Return (k, q) with self = (λ - alpha)**k * q and q(alpha) != 0."""
        if self.is_zero():
            raise ValueError("multiplicity of a root of the zero polynomial")
        alpha = to_rational(alpha)
        k, p = 0, self
        while True:
            # synthetic division by (λ - alpha)
            c = p._c
            out = [Fraction(0)] * (len(c) - 1)
            acc = Fraction(0)
            for i in range(len(c) - 1, 0, -1):
                acc = acc * alpha + c[i]
                out[i - 1] = acc
            if acc * alpha + c[0] != 0:
                return k, p
            p = Polynomial(out)
            k += 1

    # display
    def __str__(self):
        return self.display()

    def display(self, var: str = VAR) -> str:
        if not self._c:
            return "0"
        parts = []
        for k in range(len(self._c) - 1, -1, -1):
            a = self._c[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = format_rational(mag)
            else:
                mono = var if k == 1 else var + str(k).translate(_SUP)
                if mag == 1:
                    body = mono
                elif mag.denominator == 1:
                    body = f"{mag.numerator}{mono}"
                else:
                    body = f"({format_rational(mag)}){mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self):
        return f"Polynomial({self.display()!s})"


def _as_poly(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Polynomial((x,))
    return None


class RationalFunction:
    """Reduced quotient num/den with den monic and gcd(num, den) = 1.

    Construction always normalizes, so two equal functions have identical
    representations and ``==`` is a structural comparison.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num=0, den=1):
        num = Polynomial.coerce(num)
        den = Polynomial.coerce(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero():
            self._num, self._den = Polynomial(), Polynomial((1,))
            return
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.leading
        self._num = num.scale(1 / lead)
        self._den = den.scale(1 / lead)

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Polynomial):
            return cls(x, 1)
        if isinstance(x, (int, Fraction, str)) and not isinstance(x, bool):
            return cls(Polynomial((to_rational(x),)), 1)
        raise TypeError(f"cannot interpret {type(x).__name__} as a rational function")

    @property
    def num(self) -> Polynomial:
        return self._num

    @property
    def den(self) -> Polynomial:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_proper(self) -> bool:
        return self._num.degree <= self._den.degree

    def is_strictly_proper(self) -> bool:
        return self._num.degree < self._den.degree

    def value_at_infinity(self) -> Fraction:
        if not self.is_proper():
            raise ImproperFunction("function is unbounded at infinity")
        if self._num.degree == self._den.degree:
            return self._num.leading
        return Fraction(0)

    def polynomial_part(self) -> Polynomial:
        return self._num // self._den

    def proper_part(self) -> "RationalFunction":
        return RationalFunction(self._num % self._den, self._den)

    def __eq__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash(("RationalFunction", self._num, self._den))

    def __neg__(self):
        return RationalFunction(-self._num, self._den)

    def __add__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self._num * o._den + o._num * self._den, self._den * o._den)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self._num * o._num, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFunction.coerce(other)
        if o.is_zero():
            raise ZeroDenominator("division by the zero function")
        return RationalFunction(self._num * o._den, self._den * o._num)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __call__(self, x):
        x = to_rational(x)
        d = self._den(x)
        if d == 0:
            raise ZeroDenominator(f"pole at {x}")
        return self._num(x) / d

    def __str__(self):
        if self._den.degree == 0:
            return self._num.display()
        return f"({self._num.display()})/({self._den.display()})"

    def __repr__(self):
        return f"RationalFunction({self})"


def rf_normalize(num, den) -> RationalFunction:
    """Reduced form of num/den: common factors cancelled, denominator monic."""
    return RationalFunction(num, den)


@dataclass(frozen=True)
class LaurentExpansion:
    """Coefficients c_0..c_K of c_0 + c_1/λ + ... + c_K/λ**K."""

    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]


def laurent_expand(phi, K: int) -> LaurentExpansion:
    """First K+1 coefficients of the expansion of a proper ``phi`` in 1/λ.

    Works in t = 1/λ: with a = deg num and d = deg den,
    phi = t**(d-a) * num_rev(t) / den_rev(t), where den_rev(0) = 1 because the
    denominator is monic. The quotient is a plain power-series division.
    """
    phi = RationalFunction.coerce(phi)
    if K < 0:
        raise ValueError("expansion order must be nonnegative")
    if not phi.is_proper():
        raise ImproperFunction(f"deg num {phi.num.degree} > deg den {phi.den.degree}")
    out = [Fraction(0)] * (K + 1)
    if phi.is_zero():
        return LaurentExpansion(tuple(out))
    a, d = phi.num.degree, phi.den.degree
    nrev = phi.num.coeffs[::-1]
    drev = phi.den.coeffs[::-1]
    shift = d - a
    q = []
    for k in range(K + 1 - shift):
        acc = nrev[k] if k < len(nrev) else Fraction(0)
        for i in range(1, min(k, d) + 1):
            acc -= drev[i] * q[k - i]
        q.append(acc)
    for j, v in enumerate(q):
        out[j + shift] = v
    return LaurentExpansion(tuple(out))


@dataclass(frozen=True, init=False)
class MomentSequence:
    """Finite sequence s_0..s_ell of exact rationals.

    The empty sequence (ell = -1) is allowed so that a Schur step whose
    induced problem has no data left can still carry a sequence object.
    """

    entries: tuple

    def __init__(self, entries: Iterable = ()):
        if isinstance(entries, MomentSequence):
            entries = entries.entries
        object.__setattr__(self, "entries", tuple(to_rational(x) for x in entries))

    @property
    def ell(self) -> int:
        return len(self.entries) - 1

    @property
    def n(self) -> int:
        return self.ell // 2

    @property
    def parity(self) -> str:
        return "even" if self.ell % 2 == 0 else "odd"

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return MomentSequence(self.entries[k])
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def is_zero(self, upto: int | None = None) -> bool:
        e = self.entries if upto is None else self.entries[: upto + 1]
        return all(x == 0 for x in e)

    def first_nonzero(self) -> int | None:
        for i, x in enumerate(self.entries):
            if x != 0:
                return i
        return None

    def scaled(self, c) -> "MomentSequence":
        c = to_rational(c)
        return MomentSequence(c * x for x in self.entries)

    def __repr__(self):
        return "MomentSequence(" + ", ".join(format_rational(x) for x in self.entries) + ")"


def as_sequence(s) -> MomentSequence:
    return s if isinstance(s, MomentSequence) else MomentSequence(s)


def moments_from_expansion(e: LaurentExpansion, ell: int) -> MomentSequence:
    """Moments s_j = -c_{j+1}, j = 0..ell, of an expansion vanishing at infinity."""
    if e.order < ell + 1:
        raise ValueError(f"expansion of order {e.order} is too short for ell={ell}")
    if e.coeffs[0] != 0:
        raise NonzeroConstantTerm(f"constant term {e.coeffs[0]} is nonzero")
    return MomentSequence(-e.coeffs[j + 1] for j in range(ell + 1))


def moments_of(phi, ell: int) -> MomentSequence:
    """Shorthand for moments_from_expansion(laurent_expand(phi, ell + 1), ell)."""
    return moments_from_expansion(laurent_expand(phi, ell + 1), ell)

