"""Deformed ladder-operator algebras on a finite number basis.

A deformation is a positive function f(n) rescaling the usual oscillator
ladder amplitudes, so that the lowering operator acts as
A|n> = sqrt(k(n)) |n-1> with k(n) = n * f(n)^2.  Four families are
supported:

    unit        f(n) = 1              (the standard oscillator)
    quadratic   f(n) = sqrt(n)        (k(n) = n^2)
    shift_plus  f(n) = sqrt(v + n)    (su(1,1) type, infinite spectrum)
    shift_minus f(n) = sqrt(v - n)    (su(2) type, finite spectrum)

The Morse energy spectrum E_n = -(p-n)^2 corresponds to shift_minus with
v = 2p, since k(n) = n(2p-n) then factorizes the Hamiltonian.

All factorial-like quantities (n!, f(n)! = prod f(i), rho(n) = prod k(i))
are kept in log domain throughout: for the HCl Morse parameter p = 28.22,
rho(27) ~ exp(180) and four-fold products of such terms overflow doubles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import floor, inf, lgamma, log
from typing import Optional

import numpy as np

UNIT = "unit"
QUADRATIC = "quadratic"
SHIFT_PLUS = "shift_plus"
SHIFT_MINUS = "shift_minus"

_KINDS = (UNIT, QUADRATIC, SHIFT_PLUS, SHIFT_MINUS)


@dataclass(frozen=True)
class DeformationSpec:
    """A deformation function together with the retained basis size.

    ``dimension`` counts the basis states |0>, ..., |dimension-1>.  For a
    genuine finite spectrum (shift_minus, or unit weights over the Morse
    basis) it is the full state count and ``truncated`` is False; for
    infinite spectra it is a truncation cap and ``truncated`` is True.
    """

    kind: str
    dimension: int
    v: float = 0.0
    truncated: bool = True

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown deformation kind {self.kind!r}")
        if self.dimension < 1:
            raise ValueError("dimension must be a positive integer")
        if self.kind == SHIFT_PLUS and self.v < 0:
            raise ValueError("shift_plus requires v >= 0")
        if self.kind == SHIFT_MINUS:
            if self.v < 1:
                raise ValueError("shift_minus requires v >= 1")
            # keep every ladder amplitude strictly positive: f(n)^2 = v-n > 0
            # for all n <= dimension
            if self.v <= self.dimension:
                raise ValueError(
                    f"shift_minus dimension {self.dimension} too large for "
                    f"v={self.v}: ladder amplitudes would vanish or turn imaginary"
                )

    # ---- deformation values ----

    def f_squared(self, n: int) -> float:
        if self.kind == UNIT:
            return 1.0
        if self.kind == QUADRATIC:
            return float(n)
        if self.kind == SHIFT_PLUS:
            return self.v + n
        return self.v - n

    def k(self, n: int) -> float:
        """Squared ladder amplitude k(n) = n * f(n)^2."""
        return n * self.f_squared(n)

    @property
    def max_index(self) -> int:
        return self.dimension - 1

    # ---- common constructors ----

    @classmethod
    def unit(cls, dimension: int, truncated: bool = True) -> "DeformationSpec":
        return cls(UNIT, dimension, truncated=truncated)

    @classmethod
    def quadratic(cls, dimension: int) -> "DeformationSpec":
        return cls(QUADRATIC, dimension)

    @classmethod
    def shift_plus(cls, v: float, dimension: int) -> "DeformationSpec":
        return cls(SHIFT_PLUS, dimension, v=v)

    @classmethod
    def shift_minus(cls, v: float, dimension: int) -> "DeformationSpec":
        return cls(SHIFT_MINUS, dimension, v=v, truncated=False)

    @classmethod
    def morse_oscillator_like(cls, p: float) -> "DeformationSpec":
        """Unit weights over the finite Morse basis of floor(p) bound states."""
        return cls(UNIT, floor(p), truncated=False)

    @classmethod
    def morse_energy_like(cls, p: float) -> "DeformationSpec":
        """shift_minus with v = 2p, so ladder products factorize the energies."""
        return cls(SHIFT_MINUS, floor(p), v=2.0 * p, truncated=False)


def log_k(spec: DeformationSpec, n: int) -> float:
    """ln k(n); raises if k(n) is not strictly positive."""
    kn = spec.k(n)
    if kn <= 0.0:
        raise ValueError(f"k({n}) = {kn} is not positive for {spec.kind}")
    return log(kn)


def log_rho(spec: DeformationSpec, n: int) -> float:
    """ln rho(n) with rho(n) = prod_{i=1..n} k(i), rho(0) = 1.

    Accumulated as a sum of ln k(i); the direct product overflows doubles
    well inside the Morse range (rho(27) ~ exp(180) for p = 28.22).
    """
    if not 0 <= n <= spec.dimension:
        raise ValueError(f"n={n} outside 0..{spec.dimension}")
    return float(log_rho_table(spec)[n])


@lru_cache(maxsize=None)
def log_rho_table(spec: DeformationSpec) -> np.ndarray:
    """Cached table of ln rho(n) for n = 0..dimension."""
    out = np.zeros(spec.dimension + 1)
    for n in range(1, spec.dimension + 1):
        out[n] = out[n - 1] + log_k(spec, n)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def log_factorials(upto: int) -> np.ndarray:
    """Cached table of ln n! for n = 0..upto."""
    out = np.array([lgamma(n + 1.0) for n in range(upto + 1)])
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def log_f_factorial_table(spec: DeformationSpec) -> np.ndarray:
    """Cached table of ln f(n)! = ln prod_{i=1..n} f(i) = (ln rho(n) - ln n!)/2."""
    lr = log_rho_table(spec)
    lf = log_factorials(spec.dimension)
    out = 0.5 * (lr - lf)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class LadderMatrices:
    """Matrix actions of A, A-dagger and N on the retained basis.

    a_lower[n-1, n] = sqrt(k(n)); a_raise is its conjugate transpose within
    the retained dimension; number_op is diag(0..dimension-1).
    """

    a_lower: np.ndarray
    a_raise: np.ndarray
    number_op: np.ndarray


def ladder_matrices(spec: DeformationSpec) -> LadderMatrices:
    d = spec.dimension
    amps = np.array([np.sqrt(spec.k(n)) for n in range(1, d)])
    a_lower = np.diag(amps, k=1)
    a_raise = np.diag(amps, k=-1)
    number_op = np.diag(np.arange(d, dtype=float))
    for m in (a_lower, a_raise, number_op):
        m.setflags(write=False)
    return LadderMatrices(a_lower, a_raise, number_op)


@dataclass(frozen=True)
class CommutatorReport:
    """Residuals of the commutation relations on interior basis states."""

    heisenberg_residual: float
    number_residual: float
    su_residual: Optional[float]
    su_kind: Optional[str]

    @property
    def max_residual(self) -> float:
        worst = max(self.heisenberg_residual, self.number_residual)
        if self.su_residual is not None:
            worst = max(worst, self.su_residual)
        return worst


def commutator_check(spec: DeformationSpec) -> CommutatorReport:
    """Verify the deformed commutators on the truncated matrices.

    [A, A+] = (N+1) f(N+1)^2 - N f(N)^2 cannot hold at the last retained
    state of any finite matrix representation (the raising amplitude out of
    it is cut off), so that relation is checked on rows/columns
    0..dimension-2 only.  [N, A] = -A and [N, A+] = A+ are exact on the
    full truncation and are checked everywhere.  For shift algebras the
    su(1,1) / su(2) form [J-, J+] = 2 delta J0 with
    J0 = N + (delta v + 1)/2 is checked on the same interior.
    """
    if spec.dimension < 3:
        raise ValueError("commutator check needs dimension >= 3")
    lad = ladder_matrices(spec)
    a, ad, nop = lad.a_lower, lad.a_raise, lad.number_op
    d = spec.dimension

    number_res = max(
        np.max(np.abs(nop @ a - a @ nop + a)),
        np.max(np.abs(nop @ ad - ad @ nop - ad)),
    )

    comm = a @ ad - ad @ a
    rhs = np.diag([(n + 1) * spec.f_squared(n + 1) - n * spec.f_squared(n) for n in range(d)])
    interior = np.s_[: d - 1, : d - 1]
    heis_res = np.max(np.abs((comm - rhs)[interior]))

    su_res = None
    su_kind = None
    if spec.kind in (SHIFT_PLUS, SHIFT_MINUS):
        delta = 1.0 if spec.kind == SHIFT_PLUS else -1.0
        su_kind = "su(1,1)" if spec.kind == SHIFT_PLUS else "su(2)"
        j0 = nop + 0.5 * (delta * spec.v + 1.0) * np.eye(d)
        su_res = float(np.max(np.abs((comm - 2.0 * delta * j0)[interior])))

    return CommutatorReport(float(heis_res), float(number_res), su_res, su_kind)
