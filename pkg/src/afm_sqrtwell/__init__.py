"""Auxiliary field method energies for the potential ``sqrt(a^2 r^2 + b)``.

Closed-form AFM eigenvalues with harmonic/Coulomb bounds, a Lagrange-mesh
reference solver, coefficient fitting, and the spinless Salpeter dual.
"""

__version__ = "0.1.0"

from .afm import (
    PrincipalN,
    QuarticSolution,
    Variant,
    afm_energy,
    afm_energy_simple,
    asymptotic_linear,
    bounds,
    cardano_V,
    compute_Y,
    compute_Y_reduced,
    energy_of_nu,
    harmonic_limit,
    solve_G,
)
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
from .exact import MeshConfig, SpectrumResult, solve_physical, solve_reduced, spectrum
from .fit import FitSample, HyperbolicCoefficients, chi_square, fit_AC, fit_hyperbolic, hyperbolic_AC
from .relmap import SalpeterParams, from_salpeter, salpeter_spectrum, to_salpeter
