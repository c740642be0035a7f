"""Central numerical tolerances and shared constants.

Energies are dimensionless reals throughout and hbar = 1, so times carry
units of inverse energy. Every invariant check in the package reads its
tolerance from the single record below instead of hardcoding numbers.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Tolerance configuration shared by all validators and bound checks.

    Attributes
    ----------
    hermiticity : max allowed |A - A^dag| entry for Hermitian inputs.
    orthonormality : max deviation of a Gram matrix from the identity,
        and of a POVM outcome sum from the identity.
    reconstruction : spectral-norm budget for V diag(E) V^dag - H.
    trace : allowed |tr(rho) - 1| for density matrices.
    psd : eigenvalue floor; positive semidefinite means min eig >= -psd.
    weight : floor for time-average weights, p_n >= -weight; also the
        threshold below which an out-of-band fraction counts as zero.
    commutation : allowed norm of [omega, H] for time-averaged states.
    idempotency : allowed |P^2 - P| for projectors.
    degeneracy_rel : eigenvalues within degeneracy_rel * max(1, spectral
        range) of each other join one degeneracy class.
    gap : absolute coincidence tolerance for the energy-gap scan.
    bound_pass : slack for inequality checks; a bound passes iff
        lhs <= rhs + bound_pass.
    decomposition : reconstruction slack for state decompositions
        (band/complement splits, basis round trips).
    """

    hermiticity: float = 1e-12
    orthonormality: float = 1e-10
    reconstruction: float = 1e-9
    trace: float = 1e-10
    psd: float = 1e-10
    weight: float = 1e-12
    commutation: float = 1e-9
    idempotency: float = 1e-10
    degeneracy_rel: float = 1e-9
    gap: float = 1e-9
    bound_pass: float = 1e-8
    decomposition: float = 1e-10


DEFAULT_TOL = Tolerances()

# Long-time-average oracle: horizon T = HORIZON_GAP_MULTIPLE / (minimum
# nonzero gap), sampled at QUADRATURE_POINTS midpoint times. The same
# horizon is the default t_max for time-sampled equilibration checks.
HORIZON_GAP_MULTIPLE = 1e4
QUADRATURE_POINTS = 10_000
