"""Exact rational elimination and a dense symmetric Jacobi eigensolver."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NoConvergence, NotSymmetric

__all__ = [
    "KernelBasis",
    "exact_rank_and_kernel",
    "exact_rank",
    "rref",
    "jacobi_eigh",
    "eigenvalues_symmetric",
]


def _rows(A):
    A = np.asarray(A, dtype=object)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {A.shape}")
    return [[Fraction(x) for x in row] for row in A], A.shape


def rref(A):
    """Reduced row echelon form over the rationals.

    Returns ``(R, pivots)`` where ``R`` is a list of Fraction rows (zero rows
    dropped) and ``pivots`` the pivot column of each row.
    """
    rows, (n_rows, n_cols) = _rows(A)
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        if lead != 1:
            rows[r] = [x / lead for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows[:r], pivots


@dataclass(frozen=True)
class KernelBasis:
    """Rank and right-kernel basis of a rational matrix.

    ``basis`` holds one Fraction tuple per free column, in increasing order of
    the free column index; the free coordinate is 1.
    """

    label: str | None
    shape: tuple
    rank: int
    basis: tuple

    @property
    def nullity(self) -> int:
        return len(self.basis)


def exact_rank_and_kernel(A, label: str | None = None) -> KernelBasis:
    R, pivots = rref(A)
    shape = np.shape(A)
    n_cols = shape[1]
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * n_cols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return KernelBasis(label, tuple(shape), len(pivots), tuple(basis))


def exact_rank(A) -> int:
    if 0 in np.shape(A):
        return 0
    return len(rref(A)[1])


def _round_robin(m):
    """Disjoint index pairs for each of the m-1 rounds of one sweep (m even)."""
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        rounds.append([(players[k], players[m - 1 - k]) for k in range(m // 2)])
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off(A):
    return float(np.linalg.norm(A - np.diag(np.diag(A))))


def jacobi_eigh(S, tol: float = 1e-12, max_sweeps: int = 100):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Rotations on disjoint index pairs commute, so each sweep is run as n-1
    rounds of simultaneous rotations (round-robin ordering); one sweep still
    annihilates every off-diagonal pair once.

    Returns ``(values, vectors)`` with values in descending order and the
    matching unit eigenvectors as columns.

    Raises:
        NotSymmetric: if ``S`` deviates from its transpose by more than 1e-12.
        NoConvergence: if the off-diagonal Frobenius norm is still above
            ``tol`` after ``max_sweeps`` sweeps.
    """
    A = np.array(S, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {A.shape}")
    n = A.shape[0]
    if n == 0:
        return np.zeros(0), np.zeros((0, 0))
    if np.max(np.abs(A - A.T)) > 1e-12:
        raise NotSymmetric("matrix is not symmetric within 1e-12")
    A = (A + A.T) / 2
    V = np.eye(n)

    m = n + (n % 2)
    if m != n:
        A = np.pad(A, ((0, 1), (0, 1)))
        V = np.pad(V, ((0, 1), (0, 1)))
    rounds = [np.array(r).T for r in _round_robin(m)]

    sweeps = 0
    while _off(A) > tol:
        if sweeps == max_sweeps:
            raise NoConvergence(f"off-diagonal norm {_off(A):.3e} after {max_sweeps} sweeps")
        for p, q in rounds:
            apq = A[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            theta = np.zeros_like(apq)
            with np.errstate(over="ignore"):
                # theta may overflow for a negligible apq; t then rounds to 0
                theta[active] = (A[q, q][active] - A[p, p][active]) / (2.0 * apq[active])
                t = np.where(
                    active,
                    np.copysign(1.0, theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0)),
                    0.0,
                )
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            J = np.eye(m)
            J[p, p] = c
            J[q, q] = c
            J[p, q] = s
            J[q, p] = -s
            A = J.T @ A @ J
            V = V @ J
        sweeps += 1

    values = np.diag(A)[:n]
    V = V[:n, :n]
    order = np.argsort(-values, kind="stable")
    return values[order], V[:, order]


def eigenvalues_symmetric(S, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of ``S`` in descending order (largest first)."""
    return jacobi_eigh(S, tol, max_sweeps)[0]
