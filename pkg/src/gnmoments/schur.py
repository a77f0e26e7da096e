"""Schur-Chebyshev reduction of a moment sequence.

One step writes -s_m/phi = p + eps * a^2 * phi_1, where m + 1 is the first
normal index. phi_1 solves a shorter moment problem whose data, the induced
sequence, has leading nonzero moment of modulus 1. Iterating over all normal
indices gives the chain; the step matrices compose into the resolvent.

The polynomials here are rescaled so that only a_j^2 appears, never a_j:
the linear fractional maps are projective, so the common factor drops out.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexOutOfRange, NoNormalIndex
from .exact import MomentSequence, Polynomial, as_sequence
from .hankel import hankel_matrix, inertia, normal_indices
from .toeplitz import Regime, invert_expansion

__all__ = [
    "SchurStep",
    "SchurChain",
    "PolyMatrix2x2",
    "schur_step",
    "schur_chain",
    "pq_polynomials",
    "resolvent",
    "normalize",
]

ONE = Polynomial((1,))
ZERO = Polynomial()


@dataclass(frozen=True)
class SchurStep:
    gap: int
    p: Polynomial
    eps: int
    a_sq: Fraction
    induced: MomentSequence
    regime: Regime

    def matrix(self) -> "PolyMatrix2x2":
        """[[0, -eps], [eps a^2, p]]: maps phi_1 to phi."""
        return PolyMatrix2x2(
            ZERO,
            Polynomial((-self.eps,)),
            Polynomial((self.eps * self.a_sq,)),
            self.p,
            self.a_sq,
        )


@dataclass(frozen=True)
class SchurChain:
    """Steps of the reduction of the normalized sequence ``source``.

    ``moment_scale`` is the modulus of the first nonzero moment of the
    original input, which was divided out before reducing.
    """

    steps: tuple
    residual: MomentSequence
    kappa_offsets: tuple
    source: MomentSequence
    moment_scale: Fraction = Fraction(1)

    @property
    def N(self) -> int:
        return len(self.steps)

    @property
    def normal_indices(self) -> tuple:
        out, acc = [], 0
        for st in self.steps:
            acc += st.gap
            out.append(acc)
        return tuple(out)

    @property
    def n_N(self) -> int:
        return sum(st.gap for st in self.steps)


@dataclass(frozen=True)
class PolyMatrix2x2:
    """2x2 polynomial matrix with det(W) == scale * λ**lambda_power."""

    w11: Polynomial
    w12: Polynomial
    w21: Polynomial
    w22: Polynomial
    scale: Fraction = Fraction(1)
    lambda_power: int = 0

    @classmethod
    def identity(cls) -> "PolyMatrix2x2":
        return cls(ONE, ZERO, ZERO, ONE)

    @classmethod
    def of(cls, rows, scale=None, lambda_power=None) -> "PolyMatrix2x2":
        (a, b), (c, d) = rows
        a, b, c, d = (Polynomial.coerce(x) for x in (a, b, c, d))
        det = a * d - b * c
        if det.is_zero():
            raise ValueError("singular polynomial matrix")
        if lambda_power is None:
            lambda_power = next(k for k, v in enumerate(det.coeffs) if v != 0)
        if scale is None:
            scale = det[lambda_power]
        return cls(a, b, c, d, Fraction(scale), lambda_power)

    def rows(self):
        return ((self.w11, self.w12), (self.w21, self.w22))

    def det(self) -> Polynomial:
        return self.w11 * self.w22 - self.w12 * self.w21

    def det_ok(self) -> bool:
        return self.det() == Polynomial.monomial(self.lambda_power, self.scale)

    def __matmul__(self, o: "PolyMatrix2x2") -> "PolyMatrix2x2":
        return PolyMatrix2x2(
            self.w11 * o.w11 + self.w12 * o.w21,
            self.w11 * o.w12 + self.w12 * o.w22,
            self.w21 * o.w11 + self.w22 * o.w21,
            self.w21 * o.w12 + self.w22 * o.w22,
            self.scale * o.scale,
            self.lambda_power + o.lambda_power,
        )

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix2x2):
            return NotImplemented
        return self.rows() == other.rows()

    def __hash__(self):
        return hash(self.rows())

    def __str__(self):
        r = self.rows()
        return "[[{}, {}], [{}, {}]]".format(*(x.display() for row in r for x in row))


def normalize(s) -> tuple[MomentSequence, Fraction]:
    """Divide s by the modulus of its first nonzero entry (1 if all zero)."""
    s = as_sequence(s)
    f = s.first_nonzero()
    c = abs(s[f]) if f is not None else Fraction(1)
    return (s if c == 1 else s.scaled(1 / c)), c


def schur_step(s) -> SchurStep:
    s = as_sequence(s)
    ni = normal_indices(s)
    if not ni:
        raise NoNormalIndex("det S_j = 0 for every j <= n")
    n1 = ni.indices[0]
    p, eps, regime, tail = invert_expansion(s, n1 - 1)
    if tail is None:
        return SchurStep(n1, p, eps, Fraction(1), MomentSequence(), regime)
    f = tail.first_nonzero()
    a_sq = abs(tail[f]) if f is not None else Fraction(1)
    induced = tail if a_sq == 1 else tail.scaled(1 / a_sq)
    return SchurStep(n1, p, eps, a_sq, induced, regime)


def schur_chain(s) -> SchurChain:
    """Run Schur steps until the current sequence has no normal index."""
    src, c = normalize(s)
    steps, cur = [], src
    while len(cur) and normal_indices(cur):
        st = schur_step(cur)
        steps.append(st)
        cur = st.induced
    offsets, acc = [], 0
    for st in steps:
        acc += st.gap
        offsets.append(inertia(hankel_matrix(src, acc)).nu_minus)
    return SchurChain(tuple(steps), cur, tuple(offsets), src, c)


def pq_polynomials(chain: SchurChain) -> tuple[list[Polynomial], list[Polynomial]]:
    """Rescaled first and second kind polynomials P~_0..P~_N, Q~_0..Q~_N."""
    P, Q = [ONE], [ZERO]
    if not chain.steps:
        return P, Q
    st = chain.steps[0]
    P.append(st.p)
    Q.append(Polynomial((st.eps,)))
    for j in range(1, chain.N):
        prev, st = chain.steps[j - 1], chain.steps[j]
        c = prev.eps * st.eps * prev.a_sq
        P.append(st.p * P[-1] - P[-2].scale(c))
        Q.append(st.p * Q[-1] - Q[-2].scale(c))
    return P, Q


def resolvent(chain: SchurChain, j: int | None = None) -> PolyMatrix2x2:
    """W~_[1,j] = [[-eps_j a_j^2 Q~_{j-1}, -Q~_j], [eps_j a_j^2 P~_{j-1}, P~_j]]."""
    if j is None:
        j = chain.N
    if not 0 <= j <= chain.N:
        raise IndexOutOfRange(f"j={j} outside 0..{chain.N}")
    if j == 0:
        return PolyMatrix2x2.identity()
    P, Q = pq_polynomials(chain)
    st = chain.steps[j - 1]
    k = st.eps * st.a_sq
    scale = Fraction(1)
    for t in chain.steps[:j]:
        scale *= t.a_sq
    return PolyMatrix2x2(-Q[j - 1].scale(k), -Q[j], P[j - 1].scale(k), P[j], scale)
