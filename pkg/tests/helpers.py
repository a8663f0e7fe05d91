"""Shared random-instance generators for the test suite."""

import numpy as np


def rand_sym(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    M = rng.standard_normal((n, n))
    return scale * (M + M.T) / 2.0


def rand_psd(rng: np.random.Generator, n: int, rank: int | None = None) -> np.ndarray:
    G = rng.standard_normal((n, n if rank is None else rank))
    return G @ G.T


def rand_pd(rng: np.random.Generator, n: int, shift: float = 0.5) -> np.ndarray:
    return rand_psd(rng, n) + shift * np.eye(n)


def full_rank_tall(rng: np.random.Generator, m: int, k: int) -> np.ndarray:
    """Random (m, k) matrix with full column rank, k <= m."""
    while True:
        B = rng.standard_normal((m, k))
        s = np.linalg.svd(B, compute_uv=False)
        if s[-1] > 1e-6 * s[0]:
            return B


def violations(evals: np.ndarray, lo: float, hi: float, nonzero_only: bool = False) -> int:
    """Eigenvalues strictly inside (lo, hi) beyond the acceptance margin."""
    margin = 1e-10 * max(1.0, float(np.max(np.abs(evals))))
    inside = evals[(evals > lo + margin) & (evals < hi - margin)]
    if nonzero_only:
        inside = inside[np.abs(inside) > margin]
    return int(inside.size)
