"""Reference eigenvalues of ``q^2/4 + sqrt(x^2 + beta)`` on a Lagrange-Laguerre mesh.

The reduced radial equation

    -1/4 u'' + [l(l+1)/(4 x^2) + sqrt(x^2 + beta)] u = eps u,   u(0) = u(inf) = 0,

is discretised on the regularised Lagrange-Laguerre mesh: nodes ``x_i`` are
the zeros of the Laguerre polynomial ``L_N``, mapped to ``r_i = h x_i``.
With the Gauss approximation the potential matrix is diagonal and the
kinetic matrix of ``-d^2/dx^2`` is known in closed form (Baye, Phys. Rep.
565 (2015) 1):

    T_ii = (4 + (4N + 2) x_i - x_i^2) / (12 x_i^2)
    T_ij = (-1)^(i-j) (x_i + x_j) / (sqrt(x_i x_j) (x_i - x_j)^2)

Every value is recomputed on a larger mesh; the two must agree to 1e-6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh
from scipy.special import roots_laguerre

from .afm import PrincipalN, afm_energy
from .core import (
    ConvergenceError,
    EnergyEstimate,
    Kind,
    PotentialParams,
    QuantumNumbers,
    ReducedProblem,
    ValidationError,
    reduce,
    unreduce,
)

__all__ = [
    "MeshConfig",
    "SpectrumResult",
    "auto_scale",
    "radial_levels",
    "solve_reduced",
    "solve_physical",
    "spectrum",
    "spectrum_for",
]

MIN_SIZE = 20
REFINE_STEP = 20
REFINE_TOL = 1e-6
# outermost node sits at TURNING_POINT_FACTOR * x_turn + TAIL_MARGIN; the
# additive margin covers the Airy-like tail of low states whose turning
# point is close to the origin
TURNING_POINT_FACTOR = 3.0
TAIL_MARGIN = 5.0


@dataclass(frozen=True)
class MeshConfig:
    """Mesh size and scaling ``h``; ``scale=None`` selects ``h`` per solve."""

    size: int = 100
    scale: float | None = None

    def __post_init__(self):
        if isinstance(self.size, bool) or int(self.size) != self.size or self.size < MIN_SIZE:
            raise ValidationError(f"mesh size must be an integer >= {MIN_SIZE}, got {self.size!r}")
        object.__setattr__(self, "size", int(self.size))
        if self.scale is not None:
            if not (math.isfinite(self.scale) and self.scale > 0):
                raise ValidationError(f"mesh scale must be > 0, got {self.scale!r}")
            object.__setattr__(self, "scale", float(self.scale))

    def refined(self, steps: int = 1) -> MeshConfig:
        return MeshConfig(self.size + steps * REFINE_STEP, self.scale)


@dataclass
class SpectrumResult:
    beta: float
    entries: list[tuple[tuple[int, int], float]]
    config: MeshConfig
    converged: list[bool]
    # signed change of each value under the last mesh refinement
    deltas: list[float] = field(default_factory=list)
    # mesh size that produced each value
    sizes: list[int] = field(default_factory=list)

    @property
    def n_max(self) -> int:
        return max(n for (n, _), _ in self.entries)

    @property
    def l_max(self) -> int:
        return max(l for (_, l), _ in self.entries)

    def value(self, n: int, l: int) -> float:
        for key, eps in self.entries:
            if key == (n, l):
                return eps
        raise KeyError((n, l))

    def grid(self) -> np.ndarray:
        """Energies as an ``(n_max + 1, l_max + 1)`` array indexed ``[n, l]``."""
        out = np.full((self.n_max + 1, self.l_max + 1), np.nan)
        for (n, l), eps in self.entries:
            out[n, l] = eps
        return out


@lru_cache(maxsize=32)
def _laguerre_mesh(size: int) -> tuple[np.ndarray, np.ndarray]:
    x, _ = roots_laguerre(size)
    i = np.arange(size)
    xi, xj = x[:, None], x[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        T = (-1.0) ** (i[:, None] - i[None, :]) * (xi + xj) / (np.sqrt(xi * xj) * (xi - xj) ** 2)
    T[i, i] = (4.0 + (4.0 * size + 2.0) * x - x**2) / (12.0 * x**2)
    x.flags.writeable = False
    T.flags.writeable = False
    return x, T


def _check_beta(beta: float) -> float:
    beta = float(beta)
    if not (math.isfinite(beta) and beta >= 0):
        raise ValidationError(f"beta must be finite and >= 0, got {beta}")
    return beta


def auto_scale(beta: float, n: int, l: int, size: int) -> float:
    """Mesh scaling placing the last node well beyond the turning point of state ``(n, l)``.

    The harmonic-N AFM energy bounds the exact one from above, so its
    turning point is never inside the true one.
    """
    upper = afm_energy(PotentialParams(2.0, 1.0, beta), QuantumNumbers(n, l), PrincipalN.harmonic())
    turning = math.sqrt(max(upper.value**2 - beta, 0.0))
    x_last = _laguerre_mesh(size)[0][-1]
    return (TURNING_POINT_FACTOR * turning + TAIL_MARGIN) / x_last


def radial_levels(beta: float, l: int, count: int, size: int, scale: float) -> np.ndarray:
    """Lowest ``count`` eigenvalues for angular momentum ``l`` on one fixed mesh.

    The k-th eigenvalue belongs to radial quantum number ``n = k``.
    """
    x, T = _laguerre_mesh(size)
    r = scale * x
    root_beta = math.sqrt(beta)
    # sqrt(r^2 + beta) - sqrt(beta), without cancellation at large beta
    shifted = r**2 / (np.sqrt(r**2 + beta) + root_beta)
    H = T / (4.0 * scale**2)
    H[np.diag_indices(size)] += l * (l + 1) / (4.0 * r**2) + shifted
    levels = eigh(H, eigvals_only=True, subset_by_index=[0, count - 1], check_finite=False)
    return levels + root_beta


def _converged_levels(beta: float, l: int, count: int, cfg: MeshConfig):
    def attempt(c: MeshConfig) -> np.ndarray:
        h = c.scale if c.scale is not None else auto_scale(beta, count - 1, l, c.size)
        return radial_levels(beta, l, count, c.size, h)

    coarse = attempt(cfg)
    fine_cfg = cfg.refined()
    fine = attempt(fine_cfg)
    if np.abs(fine - coarse).max() > REFINE_TOL:
        fine_cfg = cfg.refined(2)
        coarse, fine = fine, attempt(fine_cfg)
    return fine, fine - coarse, fine_cfg.size


def solve_reduced(beta: float, qn: QuantumNumbers, cfg: MeshConfig | None = None) -> EnergyEstimate:
    """Exact eigenvalue ``eps*_{nl}(beta)`` of the dimensionless Hamiltonian.

    Raises :class:`ConvergenceError` when two successive refinements still
    disagree by more than 1e-6.
    """
    cfg = cfg or MeshConfig()
    beta = _check_beta(beta)
    result = spectrum_for(beta, [(qn.n, qn.l)], cfg)
    if not result.converged[0]:
        raise ConvergenceError(
            f"mesh refinement did not converge for beta={beta}, n={qn.n}, l={qn.l}",
            estimates=(result.entries[0][1] - result.deltas[0], result.entries[0][1]),
        )
    return EnergyEstimate(result.entries[0][1], Kind.EXACT)


def solve_physical(
    params: PotentialParams, qn: QuantumNumbers, cfg: MeshConfig | None = None
) -> EnergyEstimate:
    reduced: ReducedProblem = reduce(params)
    eps = solve_reduced(reduced.beta, qn, cfg)
    return EnergyEstimate(unreduce(eps.value, reduced), Kind.EXACT)


def spectrum_for(beta: float, states, cfg: MeshConfig) -> SpectrumResult:
    """Solve an arbitrary set of ``(n, l)`` states, one diagonalisation per ``l``.

    Entries that fail the refinement gate are returned with
    ``converged=False`` rather than raising.
    """
    beta = _check_beta(beta)
    states = [(int(n), int(l)) for n, l in states]
    by_l: dict[int, int] = {}
    for n, l in states:
        by_l[l] = max(by_l.get(l, 0), n + 1)
    if any(n < 0 for n, _ in states) or any(l < 0 for l in by_l):
        raise ValidationError("quantum numbers must be non-negative")
    solved = {}
    for l, count in sorted(by_l.items()):
        if count > cfg.size:
            raise ValidationError(f"mesh of size {cfg.size} cannot resolve n={count - 1}")
        solved[l] = _converged_levels(beta, l, count, cfg)
    entries, converged, deltas, sizes = [], [], [], []
    for n, l in states:
        fine, delta, size = solved[l]
        entries.append(((n, l), float(fine[n])))
        deltas.append(float(delta[n]))
        sizes.append(size)
        converged.append(bool(abs(delta[n]) <= REFINE_TOL))
    return SpectrumResult(beta, entries, cfg, converged, deltas, sizes)


def spectrum(beta: float, n_max: int, l_max: int, cfg: MeshConfig | None = None) -> SpectrumResult:
    """Exact values for ``0 <= n <= n_max``, ``0 <= l <= l_max``, ordered by ``n`` then ``l``.

    Raises :class:`ConvergenceError` if any entry fails the refinement gate.
    """
    cfg = cfg or MeshConfig()
    if n_max < 0 or l_max < 0:
        raise ValidationError("n_max and l_max must be >= 0")
    states = [(n, l) for n in range(n_max + 1) for l in range(l_max + 1)]
    result = spectrum_for(beta, states, cfg)
    bad = [key for (key, _), ok in zip(result.entries, result.converged) if not ok]
    if bad:
        raise ConvergenceError(f"mesh refinement did not converge for states {bad} at beta={beta}")
    return result
