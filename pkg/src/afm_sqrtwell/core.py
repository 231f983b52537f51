"""Domain types and the scaling reduction to the dimensionless problem.

The physical Hamiltonian ``p^2/(2m) + sqrt(a^2 r^2 + b)`` depends on
``(m, a, b)`` only through the dimensionless offset ``beta`` and an energy
unit ``scale``::

    E(m, a, b) = scale * eps(beta),
    scale = (2 a^2 / m)^(1/3),   beta = b (m / (2 a^2))^(2/3),

where ``eps(beta)`` is an eigenvalue of ``q^2/4 + sqrt(x^2 + beta)``.
Natural units (hbar = 1) are used throughout.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ValidationError",
    "ConvergenceError",
    "Kind",
    "PotentialParams",
    "QuantumNumbers",
    "ReducedProblem",
    "EnergyEstimate",
    "reduce",
    "unreduce",
]


class ValidationError(ValueError):
    """Raised when inputs fall outside the admissible domain."""


class ConvergenceError(RuntimeError):
    """Raised when a numerical procedure fails its own accuracy check.

    ``estimates`` holds the competing values that failed to agree.
    """

    def __init__(self, message: str, estimates: tuple[float, ...] = ()):
        super().__init__(message)
        self.estimates = estimates


def _finite(name: str, value: float) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{name} must be a real number, got {value!r}") from exc
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    return value


class Kind(str, enum.Enum):
    """Epistemic status of an energy value."""

    UPPER_BOUND = "UpperBound"
    LOWER_BOUND = "LowerBound"
    APPROXIMATION = "Approximation"
    EXACT = "Exact"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PotentialParams:
    """Reduced mass ``m``, slope ``a`` and offset ``b`` of the potential."""

    m: float
    a: float
    b: float

    def __post_init__(self):
        m = _finite("m", self.m)
        a = _finite("a", self.a)
        b = _finite("b", self.b)
        if m <= 0:
            raise ValidationError(f"m must be > 0, got {m}")
        if a <= 0:
            raise ValidationError(f"a must be > 0, got {a}")
        if b < 0:
            raise ValidationError(f"b must be >= 0, got {b}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def potential(self, r):
        """Evaluate ``sqrt(a^2 r^2 + b)``; accepts scalars or arrays."""
        return (self.a**2 * r**2 + self.b) ** 0.5


@dataclass(frozen=True)
class QuantumNumbers:
    n: int
    l: int

    def __post_init__(self):
        for name in ("n", "l"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value:
                raise ValidationError(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise ValidationError(f"{name} must be >= 0, got {value}")
            object.__setattr__(self, name, int(value))


@dataclass(frozen=True)
class ReducedProblem:
    """Dimensionless offset ``beta`` and the energy unit ``scale``."""

    beta: float
    scale: float


@dataclass(frozen=True)
class EnergyEstimate:
    value: float
    kind: Kind

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValidationError(f"energy must be finite, got {self.value!r}")
        object.__setattr__(self, "kind", Kind(self.kind))

    def __float__(self) -> float:
        return float(self.value)


def reduce(params: PotentialParams) -> ReducedProblem:
    """Map physical parameters onto the dimensionless problem.

    >>> reduce(PotentialParams(m=1.0, a=2.0, b=3.0))
    ReducedProblem(beta=0.75, scale=2.0)
    """
    ratio = 2.0 * params.a**2 / params.m
    scale = np.cbrt(ratio)
    beta = params.b / scale**2
    if not (math.isfinite(scale) and math.isfinite(beta)) or scale <= 0:
        raise ValidationError(f"parameters {params} do not reduce to a finite problem")
    return ReducedProblem(beta=float(beta), scale=float(scale))


def unreduce(epsilon: float, reduced: ReducedProblem) -> float:
    """Convert a dimensionless energy back to physical units."""
    return reduced.scale * _finite("epsilon", epsilon)

