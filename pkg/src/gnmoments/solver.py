"""Classification and solution of the truncated moment problem in the
generalized Nevanlinna classes.

Given s_0..s_ell and kappa, the problem asks for a real function phi with
kappa negative squares and phi(λ) = -s_0/λ - ... - s_ell/λ**(ell+1) + o(...)
at infinity. The answer is either "unsolvable", a unique rational function,
or a 2x2 polynomial matrix W whose linear fractional map sends the admissible
parameters tau onto all solutions.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import NotParametrized
from .exact import MomentSequence, Polynomial, RationalFunction, as_sequence
from .hankel import Inertia, NormalIndexSet, hankel_matrix, inertia, normal_indices
from .nevanlinna import gpnt_multiplicity, kappa_of
from .schur import PolyMatrix2x2, SchurChain, pq_polynomials, resolvent, schur_chain
from .toeplitz import monic_inverter
from . import _linalg

__all__ = [
    "Category",
    "Status",
    "Reason",
    "ProblemInstance",
    "Classification",
    "ParamDescriptor",
    "SolutionReport",
    "classify",
    "solve",
    "param_matrix",
]


class Category(str, Enum):
    NONDEGENERATE = "NONDEGENERATE"
    DEGENERATE_A = "DEGENERATE_A"
    DEGENERATE_B = "DEGENERATE_B"
    ZERO = "ZERO"


class Status(str, Enum):
    UNSOLVABLE = "UNSOLVABLE"
    UNIQUE = "UNIQUE"
    PARAMETRIZED = "PARAMETRIZED"


class Reason(str, Enum):
    OK_UNIQUE = "OK_UNIQUE"
    OK_PARAMETRIZED = "OK_PARAMETRIZED"
    KAPPA_TOO_SMALL = "KAPPA_TOO_SMALL"
    GAP_REGIME = "GAP_REGIME"
    NOT_RECURSIVELY_GENERATED = "NOT_RECURSIVELY_GENERATED"
    ODD_TRAILING_NONZERO = "ODD_TRAILING_NONZERO"


@dataclass(frozen=True)
class ProblemInstance:
    s: MomentSequence
    kappa: int
    kind: str = "MP"

    def __post_init__(self):
        object.__setattr__(self, "s", as_sequence(self.s))
        if len(self.s) == 0:
            raise ValueError("moment sequence must be nonempty")
        if isinstance(self.kappa, bool) or not isinstance(self.kappa, int) or self.kappa < 0:
            raise ValueError(f"kappa must be a nonnegative integer, got {self.kappa!r}")
        if self.kind not in ("MP", "IP"):
            raise ValueError(f"kind must be MP or IP, got {self.kind!r}")


@dataclass(frozen=True)
class Classification:
    """Case split of a moment sequence.

    ``hankel_rank`` is the Hankel rank of the sequence (n + 1, the largest
    normal index, or 0) while ``rank`` is the matrix rank of S_n; they differ
    exactly in case B.
    """

    s: MomentSequence
    category: Category
    inertia: Inertia
    normal_indices: NormalIndexSet
    hankel_rank: int
    rank: int
    residual: MomentSequence
    m_res: int | None
    nu0: int
    chain: SchurChain

    @property
    def nu_minus(self) -> int:
        return self.inertia.nu_minus

    @property
    def moment_scale(self) -> Fraction:
        return self.chain.moment_scale

    @property
    def odd_trailing(self) -> Fraction:
        """Last residual moment in the odd case (0 otherwise)."""
        if self.s.ell % 2 == 1 and len(self.residual):
            return self.residual[-1]
        return Fraction(0)


def classify(s) -> Classification:
    s = as_sequence(s)
    if len(s) == 0:
        raise ValueError("moment sequence must be nonempty")
    n = s.n
    S = hankel_matrix(s)
    ine = inertia(S)
    ni = normal_indices(s)
    chain = schur_chain(s)
    res = chain.residual
    rk = _linalg.rank(S.rows())
    m_res = None
    if s.is_zero(2 * n):
        cat = Category.ZERO
    elif ni.largest == n + 1:
        cat = Category.NONDEGENERATE
    else:
        n_prime = n - chain.n_N
        if res.is_zero(2 * n_prime):
            cat = Category.DEGENERATE_A
        else:
            cat = Category.DEGENERATE_B
            m_res = res.first_nonzero()
    return Classification(s, cat, ine, ni, ni.largest, rk, res, m_res, ine.nu_zero, chain)


def _lam_pow(k: int) -> Polynomial:
    return Polynomial.monomial(k)


def _case_b_data(cls: Classification) -> tuple[int, Polynomial]:
    """(eps_hat, p_hat) for case B.

    The shifted residual s_hat_j = r_{j + 2 nu0} starts with its nonzero
    moment at m_hat = m_res - 2 nu0. p_hat inverts its expansion with the
    free coefficient s_hat_{2 m_hat + 1} set to 0; in the odd case the true
    value reappears as the shift in the parameter condition.
    """
    r = cls.residual
    nu0 = cls.nu0
    s_hat = MomentSequence(r.entries[2 * nu0 :])
    m_hat = cls.m_res - 2 * nu0
    eps_hat = 1 if s_hat[m_hat] > 0 else -1
    p_hat = monic_inverter(s_hat[: 2 * m_hat + 1], m_hat, 0)
    return eps_hat, p_hat


def param_matrix(cls: Classification, chain: SchurChain | None = None) -> PolyMatrix2x2:
    """Matrix W with phi = (w11 tau + w12)/(w21 tau + w22) over admissible tau.

    The moment scale c (input was divided by c before reduction) is folded
    in as diag(c, 1), so W maps parameters straight to solutions of the
    original problem.
    """
    chain = cls.chain if chain is None else chain
    Wt = resolvent(chain, chain.N)
    nu0 = cls.nu0
    if cls.category is Category.NONDEGENERATE:
        W = Wt
    elif cls.category in (Category.DEGENERATE_A, Category.ZERO):
        L = _lam_pow(2 * nu0)
        W = Wt @ PolyMatrix2x2(Polynomial((1,)), Polynomial(), Polynomial(), L, Fraction(1), 2 * nu0)
    elif cls.category is Category.DEGENERATE_B:
        eps_hat, p_hat = _case_b_data(cls)
        L = _lam_pow(2 * nu0)
        W = Wt @ PolyMatrix2x2(
            Polynomial(),
            Polynomial((-eps_hat,)),
            L.scale(eps_hat),
            L * p_hat,
            Fraction(1),
            2 * nu0,
        )
    else:  # pragma: no cover
        raise NotParametrized(str(cls.category))
    c = chain.moment_scale
    if c != 1:
        W = PolyMatrix2x2(W.w11.scale(c), W.w12.scale(c), W.w21, W.w22, W.scale * c, W.lambda_power)
    if not W.det_ok():  # pragma: no cover - internal invariant
        raise AssertionError("parametrization matrix has the wrong determinant")
    return W


@dataclass(frozen=True)
class ParamDescriptor:
    """Everything needed to turn a parameter tau into a solution.

    Solutions are apply_lft(W, tau) for rational tau with
    - tau proper (condition E) for even ell, or tau + odd_shift vanishing at
      infinity (condition O) for odd ell,
    - kappa(tau) = kappa - nu_minus - nu(tau), where nu(tau) is 0 in the
      nondegenerate case and otherwise the extra index picked up at 0, see
      :meth:`nu_readings`.

    ``tau_kappa`` is the generic value kappa - nu_minus - nu0 (kappa - nu_minus
    when nondegenerate).
    """

    W: PolyMatrix2x2
    category: Category
    kappa: int
    nu_minus: int
    nu_zero: int
    tau_kappa: int
    tau_condition: str
    tau_class: str
    odd_shift: Fraction
    moment_scale: Fraction
    eps_hat: int | None = None
    p_hat: Polynomial | None = None

    def _phi_hat(self, tau: RationalFunction) -> RationalFunction:
        if self.category is Category.DEGENERATE_B:
            return RationalFunction(-self.eps_hat) / (RationalFunction(self.p_hat) + tau * self.eps_hat)
        return tau

    def nu_readings(self, tau) -> dict:
        """Two readings of the index nu gained at 0.

        With phi_N = phi_hat / λ**(2 nu0) the solution of the basic residual
        problem and k0 its generalized pole multiplicity at 0:
        ``literal`` is nu0 if k0 > 0 else k0, ``corrected`` is min(k0, nu0).
        The corrected value equals k0(phi_N) - k0(phi_hat) and is what the
        index bookkeeping needs.
        """
        if self.category is Category.NONDEGENERATE:
            return {"literal": 0, "corrected": 0}
        tau = RationalFunction.coerce(tau)
        phi_hat = self._phi_hat(tau)
        if phi_hat.is_zero():
            return {"literal": 0, "corrected": 0}
        phi_N = phi_hat / RationalFunction(_lam_pow(2 * self.nu_zero))
        k0 = gpnt_multiplicity(phi_N, 0)
        return {"literal": self.nu_zero if k0 > 0 else k0, "corrected": min(k0, self.nu_zero)}

    def required_tau_kappa(self, tau) -> int:
        return self.kappa - self.nu_minus - self.nu_readings(tau)["corrected"]

    def predicted_kappa(self, tau) -> int:
        """Negative index of apply_lft(W, tau)."""
        return self.nu_minus + kappa_of(RationalFunction.coerce(tau)) + self.nu_readings(tau)["corrected"]

    def admits(self, tau) -> bool:
        """True when tau meets the growth condition and has the required index."""
        tau = RationalFunction.coerce(tau)
        if self.tau_condition == "E":
            grow = tau.is_proper()
        else:
            grow = (tau + self.odd_shift).is_strictly_proper()
        return grow and self.predicted_kappa(tau) == self.kappa


@dataclass(frozen=True)
class SolutionReport:
    status: Status
    reason: Reason
    instance: ProblemInstance
    classification: Classification
    unique_solution: RationalFunction | None = None
    descriptor: ParamDescriptor | None = None


def _descriptor(inst: ProblemInstance, cls: Classification) -> ParamDescriptor:
    W = param_matrix(cls)
    odd = inst.s.ell % 2 == 1
    degenerate = cls.category is not Category.NONDEGENERATE
    if cls.category is Category.DEGENERATE_B:
        eps_hat, p_hat = _case_b_data(cls)
    else:
        eps_hat, p_hat = None, None
    return ParamDescriptor(
        W=W,
        category=cls.category,
        kappa=inst.kappa,
        nu_minus=cls.nu_minus,
        nu_zero=cls.nu0 if degenerate else 0,
        tau_kappa=inst.kappa - cls.nu_minus - (cls.nu0 if degenerate else 0),
        tau_condition="O" if odd else "E",
        tau_class="SUBCLASS_1" if (odd and inst.kind == "MP") else "PLAIN",
        odd_shift=cls.odd_trailing if (odd and degenerate) else Fraction(0),
        moment_scale=cls.moment_scale,
        eps_hat=eps_hat,
        p_hat=p_hat,
    )


def solve(inst: ProblemInstance | None = None, *, s=None, kappa: int | None = None, kind: str = "MP") -> SolutionReport:
    """Decide the problem and produce the unique solution or a parametrization.

    Accepts a :class:`ProblemInstance` or keyword arguments ``s``, ``kappa``
    and ``kind``.
    """
    if inst is None:
        inst = ProblemInstance(as_sequence(s), kappa, kind)
    cls = classify(inst.s)
    k, nm, nu0 = inst.kappa, cls.nu_minus, cls.nu0

    def report(status, reason, **kw):
        return SolutionReport(status, reason, inst, cls, **kw)

    if k < nm:
        return report(Status.UNSOLVABLE, Reason.KAPPA_TOO_SMALL)
    if cls.category is Category.NONDEGENERATE:
        return report(Status.PARAMETRIZED, Reason.OK_PARAMETRIZED, descriptor=_descriptor(inst, cls))

    if k == nm:
        if cls.category is Category.DEGENERATE_B:
            return report(Status.UNSOLVABLE, Reason.NOT_RECURSIVELY_GENERATED)
        if cls.odd_trailing != 0:
            return report(Status.UNSOLVABLE, Reason.ODD_TRAILING_NONZERO)
        P, Q = pq_polynomials(cls.chain)
        phi = RationalFunction(-Q[-1], P[-1]) * cls.moment_scale
        return report(Status.UNIQUE, Reason.OK_UNIQUE, unique_solution=phi)
    if k < nm + nu0:
        return report(Status.UNSOLVABLE, Reason.GAP_REGIME)
    return report(Status.PARAMETRIZED, Reason.OK_PARAMETRIZED, descriptor=_descriptor(inst, cls))
