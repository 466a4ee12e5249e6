"""Perturbed correlation matrices and correlated uniform sampling.

Correlation matrices are plain float ndarrays; :func:`validate_correlation_matrix`
checks the invariants (symmetry, unit diagonal, entries in [-1, 1], positive
semi-definiteness up to numerical tolerance).
"""

import numpy as np
from scipy.special import ndtr

PSD_TOLERANCE = 1e-10


def validate_correlation_matrix(m, tol=PSD_TOLERANCE):
    """Raise ValueError unless m is a valid correlation matrix."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.allclose(m, m.T, atol=1e-12):
        raise ValueError("correlation matrix must be symmetric")
    if not np.allclose(np.diag(m), 1.0, atol=1e-12):
        raise ValueError("correlation matrix must have a unit diagonal")
    if np.any(np.abs(m) > 1.0 + 1e-12):
        raise ValueError("correlation entries must lie in [-1, 1]")
    if m.shape[0] > 1 and np.linalg.eigvalsh(m)[0] < -tol:
        raise ValueError("correlation matrix is not positive semi-definite")
    return m


def base_matrix(order, rho):
    """Equicorrelation matrix: unit diagonal, every off-diagonal entry rho.

    For order >= 2 the matrix is PSD iff rho >= -1/(order-1); values outside
    that range (or outside [-1, 1]) are rejected.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if not -1.0 <= rho <= 1.0:
        raise ValueError(f"rho must be in [-1, 1], got {rho}")
    if order > 1 and rho < -1.0 / (order - 1):
        raise ValueError(
            f"rho={rho} makes the order-{order} equicorrelation matrix "
            f"indefinite (needs rho >= {-1.0 / (order - 1):.6g})"
        )
    m = np.full((order, order), float(rho))
    np.fill_diagonal(m, 1.0)
    return m


def perturb(base, jitter, rng):
    """Randomly perturbed copy of a correlation matrix.

    Adds symmetric Gaussian noise (stddev ``jitter``) to the off-diagonal
    entries, then projects back onto the correlation-matrix set: negative
    eigenvalues are clipped to zero and the diagonal is renormalized to 1.
    The off-diagonal mean stays close to the base value while individual
    pairwise correlations become heterogeneous.

    jitter=0 returns the base unchanged.
    """
    base = np.asarray(base, dtype=float)
    if jitter < 0:
        raise ValueError(f"jitter must be >= 0, got {jitter}")
    if jitter == 0 or base.shape[0] == 1:
        return base.copy()

    order = base.shape[0]
    noise = rng.normal(0.0, jitter, size=(order, order))
    noise = (noise + noise.T) / 2.0
    perturbed = base + noise
    np.fill_diagonal(perturbed, 1.0)

    eigvals, eigvecs = np.linalg.eigh(perturbed)
    if eigvals[0] < 0:
        projected = (eigvecs * np.clip(eigvals, 0.0, None)) @ eigvecs.T
        # renormalize to unit diagonal; diagonal is > 0 unless the whole
        # matrix collapsed, which clipping cannot produce from a unit diagonal
        scale = 1.0 / np.sqrt(np.diag(projected))
        perturbed = projected * scale[:, None] * scale[None, :]
        perturbed = (perturbed + perturbed.T) / 2.0
        np.fill_diagonal(perturbed, 1.0)
    np.clip(perturbed, -1.0, 1.0, out=perturbed)
    return perturbed


def cholesky_factor(m, tol=1e-8):
    """Lower-triangular L with L @ L.T == m (within 1e-8 elementwise).

    Falls back to a rank-revealing route for inputs that are only positive
    semi-definite: the clipped eigendecomposition square root is rotated to
    triangular form by a QR step, which is stable even when many eigenvalues
    are (numerically) zero.  Raises numpy.linalg.LinAlgError if m is
    indefinite beyond tolerance.
    """
    m = np.asarray(m, dtype=float)
    try:
        return np.linalg.cholesky(m)
    except np.linalg.LinAlgError:
        pass

    eigvals, eigvecs = np.linalg.eigh(m)
    if eigvals[0] < -tol:
        raise np.linalg.LinAlgError(
            f"matrix is not positive semi-definite (eigenvalue {eigvals[0]:.3e})"
        )
    root = eigvecs * np.sqrt(np.clip(eigvals, 0.0, None))  # root @ root.T == m
    lower = np.linalg.qr(root.T, mode="r").T
    signs = np.where(np.diag(lower) < 0.0, -1.0, 1.0)
    return lower * signs[None, :]


def sample_correlated_uniforms(factor, count, rng):
    """Draw ``count`` rows of correlated uniforms via a Gaussian copula.

    Each row is L @ z with z independent standard Gaussians, mapped through
    the standard normal CDF.  Marginals are uniform on [0, 1]; the Gaussian
    correlation between columns equals the entry of the matrix the factor
    was computed from.
    """
    factor = np.asarray(factor, dtype=float)
    order = factor.shape[0]
    z = rng.standard_normal((count, order))
    return ndtr(z @ factor.T)
