"""Steady-state amplitudes in the two-excitation subspace and g2(0).

Two routes are provided:

* ``steady_amplitudes`` -- the ground-truth path.  It projects the
  non-Hermitian Hamiltonian onto the n1+n2 <= 2 subspace and solves the
  weak-driving hierarchy (c00 = 1, then the 2x2 one-photon block, then the
  3x3 two-photon block).

* ``analytic_coefficients`` -- the published closed forms, kept verbatim
  for comparison.  These closed forms use the opposite detuning sign
  (their Lambda = delta + i*kappa/2 - mu, versus the projected diagonal
  -(delta + mu) - i*kappa/2), so they reproduce the solve path evaluated
  at -delta, up to complex conjugation and an alternating sign on the
  one-photon amplitudes.  Magnitudes agree under that delta reflection.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .fock import FockBasis
from .model import SystemParams, non_hermitian_hamiltonian

# Two-excitation subspace ordering used throughout this module.
TWO_EXCITATION_LABELS = ((0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (2, 0))

_DET_FLOOR = 1e-300


class ResonanceSingularityError(ArithmeticError):
    """A one- or two-photon block is singular (parameters on a resonance)."""


class UndefinedCorrelationError(ZeroDivisionError):
    """g2(0) requested for a mode with vanishing one-photon amplitude."""


class WeakDrivingWarning(UserWarning):
    """Drive outside the recommended weak-driving window (E <= 0.1*kappa)."""


@dataclass(frozen=True)
class AmplitudeState:
    """Complex amplitudes of |00>, |01>, |10>, |11>, |02>, |20>."""

    c00: complex
    c01: complex
    c10: complex
    c11: complex
    c02: complex
    c20: complex

    def as_array(self) -> np.ndarray:
        return np.array([self.c00, self.c01, self.c10,
                         self.c11, self.c02, self.c20])

    def hierarchy_satisfied(self) -> bool:
        """Weak-driving ordering |c00| >> one-photon >> two-photon."""
        one = max(abs(self.c01), abs(self.c10))
        two = max(abs(self.c11), abs(self.c02), abs(self.c20))
        return abs(self.c00) > 10 * one and (one == 0 or one > 10 * two)


@dataclass(frozen=True)
class LambdaGamma:
    """Published one- and two-photon denominators.

    Lambda = delta + i*kappa/2 - mu, Gamma = delta + i*kappa/2 - 2*mu.
    """

    Lambda: complex
    Gamma: complex


def lambda_gamma(p: SystemParams) -> LambdaGamma:
    base = p.delta + 0.5j * p.kappa
    return LambdaGamma(Lambda=base - p.mu, Gamma=base - 2 * p.mu)


def _subspace_hamiltonian(p: SystemParams, basis: FockBasis) -> np.ndarray:
    """Non-Hermitian Hamiltonian restricted to the 6 states n1+n2 <= 2."""
    if basis.n_max_1 < 2 or basis.n_max_2 < 2:
        raise ValueError("basis must hold at least 2 photons per mode")
    h = non_hermitian_hamiltonian(p, basis)
    idx = [basis.flatten(n1, n2) for n1, n2 in TWO_EXCITATION_LABELS]
    return h[np.ix_(idx, idx)]


def steady_amplitudes(p: SystemParams, basis: FockBasis | None = None
                      ) -> AmplitudeState:
    """Steady amplitudes from the projected non-Hermitian Hamiltonian.

    c00 is pinned to 1 (no renormalization).  The one-photon 2x2 block is
    solved ignoring two-photon feedback; the two-photon 3x3 block is then
    sourced by the one-photon amplitudes and the direct parametric-gain
    excitation of |02> and |20>.
    """
    if p.drive_E <= 0:
        raise ValueError("steady_amplitudes requires drive_E > 0")
    if p.drive_E > 0.1 * p.kappa:
        warnings.warn("drive_E > 0.1*kappa: outside the weak-driving window, "
                      "amplitude hierarchy may be inaccurate",
                      WeakDrivingWarning, stacklevel=2)
    h = _subspace_hamiltonian(p, basis or FockBasis(2, 2))
    one = [1, 2]            # |01>, |10>
    two = [3, 4, 5]         # |11>, |02>, |20>

    m1 = h[np.ix_(one, one)]
    if abs(np.linalg.det(m1)) < _DET_FLOOR:
        raise ResonanceSingularityError("one-photon block is singular")
    c_one = np.linalg.solve(m1, -h[one, 0])

    m2 = h[np.ix_(two, two)]
    if abs(np.linalg.det(m2)) < _DET_FLOOR:
        raise ResonanceSingularityError("two-photon block is singular")
    src = h[two, 0] + h[np.ix_(two, one)] @ c_one
    c_two = np.linalg.solve(m2, -src)

    return AmplitudeState(c00=1.0 + 0.0j, c01=c_one[0], c10=c_one[1],
                          c11=c_two[0], c02=c_two[1], c20=c_two[2])


def analytic_coefficients(p: SystemParams) -> AmplitudeState:
    """Published closed-form steady amplitudes, transcribed verbatim.

    Valid only for theta = phi = 0.  Kept as printed, including their
    detuning-sign convention; see the module docstring for how they relate
    to ``steady_amplitudes``.
    """
    if p.theta != 0.0 or p.phi != 0.0:
        raise ValueError("analytic_coefficients requires theta = phi = 0")
    lg = lambda_gamma(p)
    lam, gam = lg.Lambda, lg.Gamma
    e, j, lam_g = p.drive_E, p.hop_J, p.lambda_gain

    d1 = lam ** 2 - j ** 2
    d2 = gam * lam - j ** 2
    if min(abs(d1), abs(d2), abs(gam)) < _DET_FLOOR:
        raise ResonanceSingularityError("closed-form denominator underflow")

    c01 = j * e / d1
    c10 = lam * e / d1
    c11 = j * (-e ** 2 * gam - 2j * j ** 2 * lam_g + e ** 2 * lam
               + 2j * lam_g * lam ** 2) / (2 * d2 * d1)
    c02 = (j ** 2 * e ** 2 * gam + j ** 2 * e ** 2 * lam
           - 2j * j ** 2 * lam_g * gam * lam
           + 2j * lam_g * gam * lam ** 3) / (2 * np.sqrt(2) * gam * d2 * d1)
    c20 = (j ** 2 * e ** 2 * gam - j ** 2 * e ** 2 * lam
           - 2j * j ** 2 * lam_g * gam * lam + 2 * e ** 2 * gam * lam ** 2
           + 2j * lam_g * gam * lam ** 3) / (2 * np.sqrt(2) * gam * d2 * d1)
    return AmplitudeState(c00=1.0 + 0.0j, c01=c01, c10=c10,
                          c11=c11, c02=c02, c20=c20)


def _g2_single(c_two: complex, c_one: complex) -> float:
    if c_one == 0:
        raise UndefinedCorrelationError("one-photon amplitude is zero")
    return float(2.0 * abs(c_two) ** 2 / abs(c_one) ** 4)


def g2_cavity(s: AmplitudeState, cavity: int) -> float:
    """g2(0) of one cavity from the amplitude hierarchy.

    Uses the weak-driving occupation approximation n_1 ~ |c10|**2,
    n_2 ~ |c01|**2.
    """
    if cavity == 1:
        return _g2_single(s.c20, s.c10)
    if cavity == 2:
        return _g2_single(s.c02, s.c01)
    raise ValueError("cavity must be 1 or 2")


def g2_from_amplitudes(s: AmplitudeState) -> tuple[float, float]:
    """(g2_1, g2_2) = (2|c20|^2/|c10|^4, 2|c02|^2/|c01|^4)."""
    return g2_cavity(s, 1), g2_cavity(s, 2)
