"""
Dense complex linear algebra on one and two qubits.

Matrices are plain ``numpy`` arrays of dtype ``complex128``; kets are 1-d
arrays. The two-qubit basis is ordered |00>, |01>, |10>, |11> with the
first tensor factor belonging to Alice and the second to Bob.
"""

import numpy as np

TOL = 1e-12

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)

KET0 = np.array([1, 0], dtype=complex)
KET1 = np.array([0, 1], dtype=complex)
KET_PLUS = np.array([1, 1], dtype=complex) / np.sqrt(2)
KET_MINUS = np.array([1, -1], dtype=complex) / np.sqrt(2)


def as_matrix(m):
    """Coerce ``m`` to a finite square complex matrix of dimension 2 or 4."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] not in (2, 4):
        raise ValueError(f"only dimensions 2 and 4 are supported, got {a.shape[0]}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains NaN or Inf")
    return a


def as_ket(k, normalize=False):
    """Coerce ``k`` to a finite complex ket of dimension 2 or 4.

    With ``normalize=False`` the norm must already be 1 within ``TOL``.
    """
    v = np.asarray(k, dtype=complex).reshape(-1)
    if v.shape[0] not in (2, 4):
        raise ValueError(f"only dimensions 2 and 4 are supported, got {v.shape[0]}")
    if not np.all(np.isfinite(v)):
        raise ValueError("ket contains NaN or Inf")
    n = np.linalg.norm(v)
    if normalize:
        if n < TOL:
            raise ValueError("cannot normalize a null vector")
        return v / n
    if abs(n - 1.0) > TOL:
        raise ValueError(f"ket is not normalized (norm = {n!r})")
    return v


def tensor(a, b):
    """Kronecker product ``a (x) b``."""
    return np.kron(a, b)


def outer(k):
    """Rank-1 projector |k><k| for a normalized ket."""
    v = as_ket(k)
    return np.outer(v, v.conj())


def adjoint(m):
    return np.conj(np.transpose(m))


def trace(m):
    """Sum of the diagonal entries (complex)."""
    return complex(np.trace(m))


def apply(m, k):
    return np.asarray(m) @ np.asarray(k)


def commutator(a, b):
    return a @ b - b @ a


def partial_trace_second(m):
    """Trace out Bob's qubit from a 4x4 operator, returning Alice's 2x2 block."""
    a = np.asarray(m, dtype=complex)
    if a.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {a.shape}")
    return np.einsum("ijkj->ik", a.reshape(2, 2, 2, 2))


def purity(rho):
    """Tr[rho^2] as a real number."""
    return float(np.real(np.trace(rho @ rho)))


def max_abs(m):
    return float(np.max(np.abs(m))) if np.size(m) else 0.0


def is_hermitian(m, tol=TOL):
    return max_abs(m - adjoint(m)) <= tol


def is_projector(m, tol=TOL):
    return is_hermitian(m, tol) and max_abs(m @ m - m) <= tol


def is_unit_trace(m, tol=TOL):
    return abs(trace(m) - 1.0) <= tol
