"""Truncated two-mode Fock space and the ladder operators built on it.

Operators are plain dense complex numpy arrays; the flat index convention
is mode-1 major: flat = n1 * (n_max_2 + 1) + n2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITIAN_TOL = 1e-12


class InvalidCutoffError(ValueError):
    """Photon-number cutoff below 1."""


@dataclass(frozen=True)
class FockBasis:
    """Tensor product of two truncated Fock spaces.

    n_max_j is the highest photon number kept in mode j, so the per-mode
    dimension is n_max_j + 1.
    """

    n_max_1: int
    n_max_2: int

    def __post_init__(self):
        if self.n_max_1 < 1 or self.n_max_2 < 1:
            raise InvalidCutoffError(
                "cutoffs must be >= 1, got (%r, %r)" % (self.n_max_1, self.n_max_2)
            )

    @property
    def dim(self) -> int:
        return (self.n_max_1 + 1) * (self.n_max_2 + 1)

    def flatten(self, n1: int, n2: int) -> int:
        """Flat index of |n1, n2>."""
        if not (0 <= n1 <= self.n_max_1 and 0 <= n2 <= self.n_max_2):
            raise IndexError("occupation (%d, %d) outside basis" % (n1, n2))
        return n1 * (self.n_max_2 + 1) + n2

    def unflatten(self, idx: int) -> tuple[int, int]:
        """Occupations (n1, n2) of flat index idx."""
        if not 0 <= idx < self.dim:
            raise IndexError("flat index %d outside [0, %d)" % (idx, self.dim))
        return divmod(idx, self.n_max_2 + 1)

    def state(self, n1: int, n2: int) -> np.ndarray:
        """Unit basis vector |n1, n2>."""
        v = np.zeros(self.dim, dtype=complex)
        v[self.flatten(n1, n2)] = 1.0
        return v


def annihilation(n_max: int) -> np.ndarray:
    """Single-mode annihilation operator on an (n_max+1)-level ladder."""
    if n_max < 1:
        raise InvalidCutoffError("n_max must be >= 1, got %r" % (n_max,))
    a = np.zeros((n_max + 1, n_max + 1), dtype=complex)
    for k in range(1, n_max + 1):
        a[k - 1, k] = np.sqrt(k)
    return a


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, mode-1 factor on the left."""
    if a.shape[0] != a.shape[1] or b.shape[0] != b.shape[1]:
        raise ValueError("tensor factors must be square")
    return np.kron(a, b)


def two_mode_ops(basis: FockBasis) -> tuple[np.ndarray, np.ndarray]:
    """Annihilation operators (a1, a2) on the flat two-mode space."""
    a1 = tensor(annihilation(basis.n_max_1), np.eye(basis.n_max_2 + 1, dtype=complex))
    a2 = tensor(np.eye(basis.n_max_1 + 1, dtype=complex), annihilation(basis.n_max_2))
    return a1, a2


def is_hermitian(a: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    return bool(np.max(np.abs(a - a.conj().T)) <= tol)
