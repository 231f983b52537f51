"""Closed-form auxiliary field method (AFM) energies.

Replacing the potential by ``nu r^2`` plus compensating terms gives a
harmonic surrogate whose spectrum is known for every ``(n, l)``::

    E(nu) = sqrt(2 N^2 nu / m) + a^2 / (4 nu) + b nu / a^2.

Minimising over ``nu`` reduces, through ``x0 = a^(2/3) (m/(2N^2))^(1/6) nu^(-1/2)``,
to the quartic ``4 x0^4 - 8 x0 - 3Y = 0`` with
``Y = (16 b / 3) (m / (2 a^2 N^2))^(2/3)``.  Its positive root ``G(Y)`` is
obtained from the resolvent cubic ``V^3 + 3 Y V - 4 = 0`` and the energy is

    E = 1/2 (2 a^2 N^2 / m)^(1/3) [G^2 + 1/G].

How ``N`` depends on ``(n, l)`` decides the character of the result: the
harmonic choice gives an upper bound, the Coulomb choice a lower bound.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import (
    EnergyEstimate,
    Kind,
    PotentialParams,
    QuantumNumbers,
    ValidationError,
    reduce,
)

__all__ = [
    "Variant",
    "PrincipalN",
    "QuarticSolution",
    "AFMSolution",
    "compute_Y",
    "compute_Y_reduced",
    "cardano_V",
    "solve_G",
    "energy_of_nu",
    "nu_minimum",
    "afm_solution",
    "afm_energy",
    "afm_energy_simple",
    "asymptotic_linear",
    "harmonic_limit",
    "bounds",
]

# Above this Y the closed form for V cancels catastrophically.
_NEWTON_THRESHOLD = 1e3


class Variant(str, enum.Enum):
    HARMONIC = "harmonic"
    COULOMB = "coulomb"
    LINEAR = "linear"
    FITTED = "fitted"

    def __str__(self) -> str:
        return self.value


_KIND_OF_VARIANT = {
    Variant.HARMONIC: Kind.UPPER_BOUND,
    Variant.COULOMB: Kind.LOWER_BOUND,
    Variant.LINEAR: Kind.APPROXIMATION,
    Variant.FITTED: Kind.APPROXIMATION,
}


@dataclass(frozen=True)
class PrincipalN:
    """Rule turning ``(n, l, beta)`` into the principal quantum number ``N``.

    For the fitted variant ``A`` and ``C`` may be given as constants; when
    left as ``None`` the hyperbolic forms of :func:`afm_sqrtwell.fit.hyperbolic_AC`
    are evaluated at the problem's ``beta``.
    """

    variant: Variant
    A: float | None = None
    C: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        if self.variant is not Variant.FITTED and (self.A is not None or self.C is not None):
            raise ValidationError("A and C only apply to the fitted variant")
        if (self.A is None) != (self.C is None):
            raise ValidationError("A and C must be given together")
        if self.A is not None and (not self.A > 0 or not self.C > 0):
            raise ValidationError(f"A and C must be > 0, got A={self.A}, C={self.C}")

    @classmethod
    def harmonic(cls) -> PrincipalN:
        return cls(Variant.HARMONIC)

    @classmethod
    def coulomb(cls) -> PrincipalN:
        return cls(Variant.COULOMB)

    @classmethod
    def linear(cls) -> PrincipalN:
        return cls(Variant.LINEAR)

    @classmethod
    def fitted(cls, A: float | None = None, C: float | None = None) -> PrincipalN:
        return cls(Variant.FITTED, A, C)

    @property
    def kind(self) -> Kind:
        return _KIND_OF_VARIANT[self.variant]

    def value(self, n: int, l: int, beta: float = 0.0) -> float:
        if self.variant is Variant.HARMONIC:
            return 2 * n + l + 1.5
        if self.variant is Variant.COULOMB:
            return n + l + 1.0
        if self.variant is Variant.LINEAR:
            return math.pi / math.sqrt(3.0) * n + l + math.sqrt(3.0) * math.pi / 4.0
        if self.A is None:
            from .fit import hyperbolic_AC

            A, C = hyperbolic_AC(beta)
        else:
            A, C = self.A, self.C
        return A * n + l + C


class QuarticSolution(NamedTuple):
    Y: float
    V: float
    G: float
    residual: float


class AFMSolution(NamedTuple):
    estimate: EnergyEstimate
    N: float
    quartic: QuarticSolution


def _check_N(N: float) -> float:
    N = float(N)
    if not (math.isfinite(N) and N > 0):
        raise ValidationError(f"N must be a positive finite number, got {N}")
    return N


def compute_Y(params: PotentialParams, N: float) -> float:
    N = _check_N(N)
    return 16.0 * params.b / 3.0 * (params.m / (2.0 * params.a**2 * N**2)) ** (2.0 / 3.0)


def compute_Y_reduced(beta: float, N: float) -> float:
    N = _check_N(N)
    if not beta >= 0:
        raise ValidationError(f"beta must be >= 0, got {beta}")
    return 16.0 * beta / (3.0 * N ** (4.0 / 3.0))


def _check_Y(Y: float) -> float:
    Y = float(Y)
    if not math.isfinite(Y):
        raise ValidationError(f"Y must be finite, got {Y}")
    if Y < 0:
        raise ValidationError(f"Y must be >= 0, got {Y}")
    return Y


def _polish(V: float, Y: float, steps: int) -> float:
    for _ in range(steps):
        step = (V**3 + 3.0 * Y * V - 4.0) / (3.0 * V**2 + 3.0 * Y)
        V -= step
        if abs(step) <= 1e-15 * V:
            break
    return V


def cardano_V(Y: float) -> float:
    """Positive real root of the resolvent cubic ``V^3 + 3 Y V - 4 = 0``.

    Cardano's closed form is exact in principle but is a difference of two
    ``~sqrt(Y)`` terms, so it loses about ``log10(Y)`` digits; it is used as
    the starting point for Newton steps, and skipped entirely above
    ``Y = 1e3`` where the asymptotic root ``4 / (3Y)`` is a better start.
    """
    Y = _check_Y(Y)
    if Y <= _NEWTON_THRESHOLD:
        c = np.cbrt(2.0 + math.sqrt(4.0 + Y**3))
        return _polish(float(c - Y / c), Y, 3)
    # f is increasing and convex on V > 0 and f(4/(3Y)) > 0, so Newton
    # descends monotonically onto the root.
    return _polish(4.0 / (3.0 * Y), Y, 50)


def solve_G(Y: float) -> QuarticSolution:
    """Positive root ``G(Y)`` of ``4 x^4 - 8 x - 3 Y = 0``.

    >>> round(solve_G(0.0).G, 12) == round(2 ** (1 / 3), 12)
    True
    """
    Y = _check_Y(Y)
    V = cardano_V(Y)
    radicand = 4.0 / math.sqrt(V) - V
    if not (V > 0 and radicand > 0):
        raise FloatingPointError(f"quartic root lost for Y={Y}: V={V}, radicand={radicand}")
    G = 0.5 * math.sqrt(V) + 0.5 * math.sqrt(radicand)
    return QuarticSolution(Y, V, G, abs(4.0 * G**4 - 8.0 * G - 3.0 * Y))


def energy_of_nu(nu: float, params: PotentialParams, N: float) -> float:
    """Eigenvalue of the harmonic surrogate for a fixed auxiliary field ``nu``."""
    if not (math.isfinite(nu) and nu > 0):
        raise ValidationError(f"nu must be > 0, got {nu}")
    N = _check_N(N)
    m, a, b = params.m, params.a, params.b
    return math.sqrt(2.0 * N**2 * nu / m) + a**2 / (4.0 * nu) + b * nu / a**2


def nu_minimum(params: PotentialParams, N: float) -> float:
    """Auxiliary field value minimising :func:`energy_of_nu`."""
    N = _check_N(N)
    G = solve_G(compute_Y(params, N)).G
    return (params.a ** (2.0 / 3.0) * (params.m / (2.0 * N**2)) ** (1.0 / 6.0) / G) ** 2


def _energy_unit(params: PotentialParams, N: float) -> float:
    # sqrt(b / 3Y) rewritten without b, so b = 0 needs no special case
    return 0.25 * np.cbrt(2.0 * params.a**2 * N**2 / params.m)


def afm_solution(params: PotentialParams, qn: QuantumNumbers, N: PrincipalN) -> AFMSolution:
    """AFM energy together with the ``N`` used and the quartic intermediates."""
    beta = reduce(params).beta if N.variant is Variant.FITTED else 0.0
    N_value = _check_N(N.value(qn.n, qn.l, beta))
    quartic = solve_G(compute_Y(params, N_value))
    G = quartic.G
    value = 2.0 * _energy_unit(params, N_value) * (G**2 + 1.0 / G)
    return AFMSolution(EnergyEstimate(float(value), N.kind), N_value, quartic)


def afm_energy(params: PotentialParams, qn: QuantumNumbers, N: PrincipalN) -> EnergyEstimate:
    return afm_solution(params, qn, N).estimate


def afm_energy_simple(
    params: PotentialParams, qn: QuantumNumbers, N: PrincipalN, eta: float = 1.0
) -> EnergyEstimate:
    """Root-free approximation to :func:`afm_energy`.

    Exact at both ``Y -> 0`` and ``Y -> infinity``; with ``eta = 1`` it stays
    within 2% of the full formula for every ``Y``.
    """
    if not math.isfinite(eta):
        raise ValidationError(f"eta must be finite, got {eta}")
    beta = reduce(params).beta if N.variant is Variant.FITTED else 0.0
    N_value = _check_N(N.value(qn.n, qn.l, beta))
    Y = compute_Y(params, N_value)
    shift = 3.0 * 2.0 ** (2.0 / 3.0) - eta
    value = _energy_unit(params, N_value) * (math.sqrt(3.0 * Y + shift**2) + eta)
    return EnergyEstimate(float(value), Kind.APPROXIMATION)


def asymptotic_linear(params: PotentialParams, N: float) -> float:
    """Energy for the pure linear potential ``a r`` (the ``b -> 0`` limit)."""
    N = _check_N(N)
    return 1.5 * float(np.cbrt(params.a**2 * N**2 / params.m))


def harmonic_limit(params: PotentialParams, qn: QuantumNumbers) -> float:
    """Exact spectrum of ``sqrt(b) + a^2 r^2 / (2 sqrt(b))``, the ``b -> infinity`` limit."""
    if params.b <= 0:
        raise ValidationError("harmonic limit needs b > 0")
    root_b = math.sqrt(params.b)
    return params.a / math.sqrt(params.m * root_b) * (2 * qn.n + qn.l + 1.5) + root_b


def bounds(params: PotentialParams, qn: QuantumNumbers) -> tuple[EnergyEstimate, EnergyEstimate]:
    """Lower (Coulomb ``N``) and upper (harmonic ``N``) bounds on the exact energy."""
    lower = afm_energy(params, qn, PrincipalN.coulomb())
    upper = afm_energy(params, qn, PrincipalN.harmonic())
    return lower, upper
