"""Dense complex linear algebra at desk scale (square matrices up to 16x16).

Matrices are plain numpy arrays of dtype complex128.  All functions are pure
and never mutate their arguments.  Tolerances throughout are stated in the
max-abs entry norm ``max_abs``.
"""

from __future__ import annotations

import math

import numpy as np

MAX_DIM = 16
HERMITICITY_TOL = 1e-12

# Taylor terms used after scaling the argument below Frobenius norm 1/2;
# the series tail is then < 0.5**19/19! and irrelevant next to rounding.
_EXPM_TAYLOR_TERMS = 18

_JACOBI_OFF_TOL = 1e-12
_JACOBI_MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """The iterative eigensolver did not reach its threshold in budget."""


def as_matrix(data) -> np.ndarray:
    """Coerce to a validated square complex matrix (finite, dim 1..16)."""
    a = np.asarray(data, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n < 1 or n > MAX_DIM:
        raise ValueError(f"dimension {n} outside supported range 1..{MAX_DIM}")
    if not np.isfinite(a).all():
        raise ValueError("matrix has non-finite entries")
    return a


def max_abs(a: np.ndarray) -> float:
    """Largest entry magnitude; the norm used for all tolerances here."""
    return float(np.max(np.abs(a)))


def hermitize(a: np.ndarray) -> np.ndarray:
    """Hermitian part (a + a†)/2."""
    return (a + a.conj().T) / 2


def is_hermitian(a: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    a = np.asarray(a, dtype=complex)
    return max_abs(a - a.conj().T) <= tol


def require_hermitian(a, tol: float = HERMITICITY_TOL) -> np.ndarray:
    a = as_matrix(a)
    dev = max_abs(a - a.conj().T)
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian: deviation {dev:.3e} > {tol:.3e}")
    return a


def commutator(x, y) -> np.ndarray:
    """[X, Y] = XY - YX."""
    x = as_matrix(x)
    y = as_matrix(y)
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.shape[0]} vs {y.shape[0]}")
    return x @ y - y @ x


def expm(x) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring with a truncated Taylor core.

    The argument is scaled by 2**-s until its Frobenius norm is at most 1/2,
    the series is summed to 18 terms by Horner evaluation, and the result is
    squared s times.
    """
    x = as_matrix(x)
    n = x.shape[0]
    eye = np.eye(n, dtype=complex)
    norm = float(np.linalg.norm(x))
    squarings = 0
    if norm > 0.5:
        squarings = int(math.ceil(math.log2(norm))) + 1
        x = x / (2.0**squarings)
    acc = eye.copy()
    for k in range(_EXPM_TAYLOR_TERMS, 0, -1):
        acc = eye + (x @ acc) / k
    for _ in range(squarings):
        acc = acc @ acc
    return acc


def conjugate_by_exp(x, t: float, y) -> np.ndarray:
    """e^{tX} Y e^{-tX}, the inverse taken by negating the exponent.

    No explicit matrix inverse is ever formed.
    """
    x = as_matrix(x)
    y = as_matrix(y)
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.shape[0]} vs {y.shape[0]}")
    fwd = expm(t * x)
    bwd = expm(-t * x)
    return fwd @ y @ bwd


def eigh(
    a,
    off_tol: float = _JACOBI_OFF_TOL,
    max_sweeps: int = _JACOBI_MAX_SWEEPS,
    hermiticity_tol: float = HERMITICITY_TOL,
) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(values, vectors)`` with real eigenvalues ascending and the
    matching eigenvectors as columns.  Sweeps run until the off-diagonal
    Frobenius mass drops below ``off_tol``; exceeding ``max_sweeps`` raises
    ConvergenceError.
    """
    a = require_hermitian(a, tol=hermiticity_tol)
    n = a.shape[0]
    work = hermitize(a)
    vecs = np.eye(n, dtype=complex)
    if n == 1:
        return work.real.diagonal().copy(), vecs

    def _off_diagonal_mass() -> float:
        return float(np.sqrt(np.sum(np.abs(work - np.diag(np.diag(work))) ** 2)))

    converged = False
    for _ in range(max_sweeps):
        if _off_diagonal_mass() <= off_tol:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = work[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                phase = apq / r
                app = work[p, p].real
                aqq = work[q, q].real
                theta = (aqq - app) / (2.0 * r)
                sign = 1.0 if theta >= 0.0 else -1.0
                t = sign / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # Unitary J differing from identity in rows/cols p, q:
                #   J[p,p] = c*phase   J[p,q] = s*phase
                #   J[q,p] = -s        J[q,q] = c
                col_p = work[:, p].copy()
                col_q = work[:, q].copy()
                work[:, p] = col_p * (c * phase) - col_q * s
                work[:, q] = col_p * (s * phase) + col_q * c
                row_p = work[p, :].copy()
                row_q = work[q, :].copy()
                work[p, :] = row_p * np.conj(c * phase) - row_q * s
                work[q, :] = row_p * np.conj(s * phase) + row_q * c
                work[p, q] = 0.0
                work[q, p] = 0.0
                work[p, p] = work[p, p].real
                work[q, q] = work[q, q].real
                v_p = vecs[:, p].copy()
                v_q = vecs[:, q].copy()
                vecs[:, p] = v_p * (c * phase) - v_q * s
                vecs[:, q] = v_p * (s * phase) + v_q * c
    if not converged and _off_diagonal_mass() > off_tol:
        raise ConvergenceError(
            f"Jacobi sweeps exceeded {max_sweeps} without reaching {off_tol:.1e}"
        )

    values = work.diagonal().real.copy()
    order = np.argsort(values, kind="stable")
    return values[order], vecs[:, order]


def spectrum(a, hermiticity_tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted ascending."""
    values, _ = eigh(a, hermiticity_tol=hermiticity_tol)
    return values


def random_complex(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Matrix with real and imaginary parts drawn uniformly from [-1, 1]."""
    re = rng.uniform(-1.0, 1.0, size=(dim, dim))
    im = rng.uniform(-1.0, 1.0, size=(dim, dim))
    return re + 1j * im


def random_hermitian(
    rng: np.random.Generator, dim: int, unit_norm: bool = False
) -> np.ndarray:
    """Hermitized uniform random matrix, optionally scaled to max_abs 1."""
    h = hermitize(random_complex(rng, dim))
    if unit_norm:
        h = h / max_abs(h)
    return h


def matrix_to_json(a) -> dict:
    """Serialize to ``{"dim": n, "re": [[...]], "im": [[...]]}``."""
    a = as_matrix(a)
    return {
        "dim": int(a.shape[0]),
        "re": a.real.tolist(),
        "im": a.imag.tolist(),
    }


def matrix_from_json(obj) -> np.ndarray:
    """Parse the wire format produced by :func:`matrix_to_json`."""
    if not isinstance(obj, dict):
        raise ValueError("matrix JSON must be an object with dim/re/im")
    try:
        dim = int(obj["dim"])
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix JSON: {exc}") from exc
    if re.shape != (dim, dim) or im.shape != (dim, dim):
        raise ValueError(
            f"matrix JSON shape mismatch: dim={dim}, re {re.shape}, im {im.shape}"
        )
    return as_matrix(re + 1j * im)
