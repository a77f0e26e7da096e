"""Hankel matrices of moment sequences: inertia, normal indices, Hankel rank,
recursive generation and inertia-preserving extension."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import _linalg
from .exact import MomentSequence, as_sequence

__all__ = [
    "MomentSequence",
    "HankelMatrix",
    "Inertia",
    "NormalIndexSet",
    "hankel_matrix",
    "inertia",
    "leading_minors",
    "normal_indices",
    "hankel_rank",
    "recursive_generation",
    "extend_preserving_inertia",
]


class Inertia(NamedTuple):
    nu_plus: int
    nu_zero: int
    nu_minus: int


@dataclass(frozen=True)
class HankelMatrix:
    """S_k = (s_{i+j}), i, j = 0..k, with size k + 1 (default k = n)."""

    source: MomentSequence
    size: int

    def __post_init__(self):
        if self.size < 0 or 2 * self.size - 2 > self.source.ell:
            raise ValueError(f"size {self.size} needs moments up to s_{2 * self.size - 2}")

    def __getitem__(self, ij):
        i, j = ij
        return self.source[i + j]

    def rows(self) -> list[list[Fraction]]:
        s = self.source.entries
        return [[s[i + j] for j in range(self.size)] for i in range(self.size)]

    def leading(self, k: int) -> "HankelMatrix":
        return HankelMatrix(self.source, k)


@dataclass(frozen=True)
class NormalIndexSet:
    """Indices j in 1..n+1 with det S_{j-1} != 0, increasing."""

    indices: tuple

    @property
    def N(self) -> int:
        return len(self.indices)

    @property
    def largest(self) -> int:
        return self.indices[-1] if self.indices else 0

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __contains__(self, j):
        return j in self.indices

    def __bool__(self):
        return bool(self.indices)


def hankel_matrix(s, size: int | None = None) -> HankelMatrix:
    s = as_sequence(s)
    return HankelMatrix(s, s.n + 1 if size is None else size)


def inertia(S) -> Inertia:
    """Exact inertia of a real symmetric matrix (HankelMatrix or nested lists)."""
    rows = S.rows() if isinstance(S, HankelMatrix) else S
    return Inertia(*_linalg.symmetric_inertia(rows))


def leading_minors(s) -> list[Fraction]:
    """det S_0, ..., det S_n of the sequence."""
    return _linalg.leading_minors(hankel_matrix(s).rows())


def normal_indices(s) -> NormalIndexSet:
    minors = leading_minors(s)
    return NormalIndexSet(tuple(j + 1 for j, d in enumerate(minors) if d != 0))


def hankel_rank(s) -> int:
    """Hankel rank of (s, 2n); odd sequences use their first 2n + 1 entries.

    n + 1 when S_n is invertible, otherwise the largest normal index, and 0
    when no leading minor is nonzero.
    """
    return normal_indices(s).largest


def recursive_generation(s) -> tuple[bool, tuple | None]:
    """Test s_j = sum_i alpha_i s_{j-r+i}, r <= j <= ell, with r the Hankel rank.

    Returns (True, alphas) on success and (False, None) otherwise. The
    all-zero sequence is generated by the empty recursion.
    """
    s = as_sequence(s)
    r = hankel_rank(s)
    if r == 0:
        return (True, ()) if s.is_zero() else (False, None)
    e = list(s.entries)
    if 2 * r - 1 > s.ell:
        # nondegenerate even case: s_{2n+1} is free, take 0
        e.append(Fraction(0))
    A = [[e[i + j] for j in range(r)] for i in range(r)]
    alpha = _linalg.solve(A, e[r : 2 * r])
    for j in range(r, s.ell + 1):
        if sum(alpha[i] * e[j - r + i] for i in range(r)) != e[j]:
            return False, None
    return True, tuple(alpha)


def _continue(s: MomentSequence, alpha: tuple, steps: int) -> list[Fraction]:
    e = list(s.entries)
    r = len(alpha)
    for _ in range(steps):
        e.append(sum((alpha[i] * e[len(e) - r + i] for i in range(r)), Fraction(0)) if r else Fraction(0))
    return e


def extend_preserving_inertia(s) -> tuple[bool, tuple | None]:
    """Look for s_{2n+1}, s_{2n+2} with nu_minus(S_{n+1}) = nu_minus(S_n).

    Such an extension exists exactly when s is recursively generated; the
    witness continues the recursion. For odd input the given s_{2n+1} is
    kept and only s_{2n+2} is produced.
    """
    s = as_sequence(s)
    ok, alpha = recursive_generation(s)
    if not ok:
        return False, None
    need = 2 * s.n + 2 - s.ell
    ext = MomentSequence(_continue(s, alpha, need))
    before = inertia(hankel_matrix(s, s.n + 1)).nu_minus
    after = inertia(hankel_matrix(ext, s.n + 2)).nu_minus
    if before != after:
        return False, None
    return True, (ext[2 * s.n + 1], ext[2 * s.n + 2])
