"""Map to the spinless Salpeter Hamiltonian ``omega sqrt(p^2 + M^2) + sigma r^2``.

The Fourier transform of ``p^2/(2m) + sqrt(a^2 r^2 + b)`` is this
semirelativistic Hamiltonian with

    omega = (4 a / m^2)^(1/3),   M = sqrt(b) / omega,   sigma = m a omega / 8,

so both share one spectrum.  Physically ``omega`` is 1 (one body) or 2
(two equal masses), but the algebra holds for any ``omega > 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .afm import PrincipalN, afm_energy
from .core import EnergyEstimate, PotentialParams, QuantumNumbers, ValidationError

__all__ = ["SalpeterParams", "to_salpeter", "from_salpeter", "salpeter_spectrum"]


@dataclass(frozen=True)
class SalpeterParams:
    omega: float
    M: float
    sigma: float

    def __post_init__(self):
        for name in ("omega", "M", "sigma"):
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError) as exc:
                raise ValidationError(f"{name} must be a real number, got {value!r}") from exc
            if not math.isfinite(value):
                raise ValidationError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.omega <= 0:
            raise ValidationError(f"omega must be > 0, got {self.omega}")
        if self.M < 0:
            raise ValidationError(f"M must be >= 0, got {self.M}")
        if self.sigma <= 0:
            raise ValidationError(f"sigma must be > 0, got {self.sigma}")


def to_salpeter(params: PotentialParams) -> SalpeterParams:
    omega = float(np.cbrt(4.0 * params.a / params.m**2))
    return SalpeterParams(
        omega=omega,
        M=math.sqrt(params.b) / omega,
        sigma=params.m * params.a * omega / 8.0,
    )


def from_salpeter(sp: SalpeterParams) -> PotentialParams:
    m = float(np.cbrt(32.0 * sp.sigma / sp.omega**4))
    return PotentialParams(m=m, a=sp.omega**3 * m**2 / 4.0, b=(sp.M * sp.omega) ** 2)


def salpeter_spectrum(sp: SalpeterParams, qn: QuantumNumbers, N: PrincipalN) -> EnergyEstimate:
    """AFM energy of the Salpeter Hamiltonian, via its Schroedinger dual."""
    return afm_energy(from_salpeter(sp), qn, N)
