"""Gap certificates and inverse-norm bounds for symmetric saddle matrices.

The central object is H = [[A, B], [B^T, -C]] with A and C positive
semidefinite.  Each certificate produces an open interval that the
spectrum of H provably avoids (entirely, or up to the eigenvalue zero),
together with the scalar quantities the bound is built from.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    B22Singular,
    BNotInvertible,
    BothSemidefiniteSingular,
    DimensionMismatch,
    NegativeDiscriminant,
    NotDefinite,
    NotPSD,
    NotSymmetric,
    Singular,
    UnboundedRelativeBound,
)

EPS = linalg.EPS


def _check_symmetric_psd(M: np.ndarray, name: str) -> np.ndarray:
    M = linalg.require_finite(M, name)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NotSymmetric(f"{name} must be square, got shape {M.shape}")
    scale = max(linalg.op_norm_bound(M), 1.0)
    defect = np.max(np.abs(M - M.T)) if M.size else 0.0
    if defect > 1e-12 * scale:
        raise NotSymmetric(f"{name} is not symmetric (defect {defect:.3e})")
    w = np.linalg.eigvalsh((M + M.T) / 2.0)
    if w.size and w[0] < -1e-10 * scale:
        raise NotPSD(f"{name} has eigenvalue {w[0]:.3e}, not positive semidefinite")
    return M


@dataclass(frozen=True)
class BlockSaddle:
    """Blocks of H = [[A, B], [B^T, -C]]; A and C symmetric positive semidefinite."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray

    def __post_init__(self):
        A = _check_symmetric_psd(self.A, "A")
        C = _check_symmetric_psd(self.C, "C")
        B = linalg.require_finite(self.B, "B")
        B = np.atleast_2d(B)
        if B.shape != (A.shape[0], C.shape[0]):
            raise DimensionMismatch(
                f"B must be {A.shape[0]}x{C.shape[0]}, got {B.shape[0]}x{B.shape[1]}"
            )
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", C)

    @property
    def m(self) -> int:
        return self.A.shape[0]

    @property
    def k(self) -> int:
        return self.C.shape[0]

    def assemble(self) -> np.ndarray:
        return np.block([[self.A, self.B], [self.B.T, -self.C]])


@dataclass(frozen=True)
class GapCertificate:
    """An open interval the spectrum of H avoids, and how it was obtained.

    claim is "excludes_all" when sigma(H) misses the whole open interval,
    or "excludes_nonzero" when only the eigenvalue zero may sit inside.
    For method="stretch" the inv_norm_bound applies to the shifted
    resolvent (H - lambda0 I)^{-1}; for every other method it bounds
    ||H^{-1}|| itself.
    """

    method: str
    interval: tuple[float, float]
    claim: str
    inv_norm_bound: float | None
    quantities: dict[str, float] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "method": self.method,
            "interval": [self.interval[0], self.interval[1]],
            "claim": self.claim,
            "inv_norm_bound": self.inv_norm_bound,
            "quantities": {k: self.quantities[k] for k in sorted(self.quantities)},
        }


@dataclass(frozen=True)
class NullSpaceReport:
    """Null space of H split into its two halves."""

    na_nb: np.ndarray  # basis of N(A) ∩ N(B^T)
    nc_nb: np.ndarray  # basis of N(C) ∩ N(B)
    singular: bool


@dataclass(frozen=True)
class RelativeBounds:
    alpha: float
    gamma: float


def null_space_H(H: BlockSaddle, tol_rank: float | None = None) -> NullSpaceReport:
    """Null space of the assembled H: x-part in N(A)∩N(B^T), y-part in N(C)∩N(B)."""
    na_nb = linalg.null_space_basis(np.vstack([H.A, H.B.T]), tol_rank)
    nc_nb = linalg.null_space_basis(np.vstack([H.C, H.B]), tol_rank)
    return NullSpaceReport(na_nb, nc_nb, na_nb.shape[1] + nc_nb.shape[1] > 0)


def _min_eig_definite(M: np.ndarray, name: str) -> float:
    w = linalg.sym_eig(M).values
    scale = max(abs(float(w[0])), abs(float(w[-1]))) if w.size else 0.0
    if scale == 0.0 or w[0] <= w.size * EPS * scale:
        raise NotDefinite(f"{name} is not positive definite (min eigenvalue {w[0] if w.size else 0.0:.3e})")
    return float(w[0])


def _pd_inv_power(M: np.ndarray, power: float, name: str) -> np.ndarray:
    w, V = linalg.sym_eig(M)
    scale = max(abs(float(w[0])), abs(float(w[-1]))) if w.size else 0.0
    if scale == 0.0 or w[0] <= w.size * EPS * scale:
        raise NotDefinite(f"{name} is not positive definite")
    return (V * w**power) @ V.T


def diag_gap(H: BlockSaddle) -> GapCertificate:
    """Gap interval (-min sigma(C), min sigma(A)) from the diagonal blocks alone.

    Requires both blocks positive definite; no eigenvalue of H lies in the
    open interval, and ||H^{-1}|| <= 1/min(min sigma(A), min sigma(C)).
    """
    a = _min_eig_definite(H.A, "A")
    c = _min_eig_definite(H.C, "C")
    return GapCertificate(
        method="diag_gap",
        interval=(-c, a),
        claim="excludes_all",
        inv_norm_bound=1.0 / min(a, c),
        quantities={"min_sigma_A": a, "min_sigma_C": c},
    )


def stretch_certificate(H: BlockSaddle) -> GapCertificate:
    """Widened gap interval centred at lambda0 = (min sigma(A) - min sigma(C))/2.

    Congruence with the shifted blocks turns H - lambda0 I into a unitary
    stretch [[I, Z], [Z^T, -I]] scaled from below by (a+c)/2, so
    ||(H - lambda0 I)^{-1}|| <= 2/((a+c) sqrt(1 + sigma^2)), where sigma
    is the smallest singular value of Z when Z is square and 0 otherwise
    (a rectangular Z always leaves a unit eigenvalue in the stretch).
    The certified interval is lambda0 plus/minus the reciprocal of that
    bound; inv_norm_bound refers to the resolvent at lambda0.
    """
    a = _min_eig_definite(H.A, "A")
    c = _min_eig_definite(H.C, "C")
    lam0 = (a - c) / 2.0
    SA = _pd_inv_power(H.A - lam0 * np.eye(H.m), -0.5, "A - lambda0 I")
    SC = _pd_inv_power(H.C + lam0 * np.eye(H.k), -0.5, "C + lambda0 I")
    Z = SA @ H.B @ SC
    s = np.linalg.svd(Z, compute_uv=False) if Z.size else np.zeros(0)
    sigma_eff = float(s[-1]) if (H.m == H.k and s.size) else 0.0
    bound = 2.0 / ((a + c) * np.hypot(1.0, sigma_eff))
    radius = 1.0 / bound
    return GapCertificate(
        method="stretch",
        interval=(lam0 - radius, lam0 + radius),
        claim="excludes_all",
        inv_norm_bound=bound,
        quantities={
            "lambda0": lam0,
            "sigma_min_Z": float(s[-1]) if s.size else 0.0,
            "sigma_max_Z": float(s[0]) if s.size else 0.0,
            "min_sigma_A": a,
            "min_sigma_C": c,
        },
    )


def inv_IplusAC_bound(A: np.ndarray, C: np.ndarray) -> float:
    """Upper bound on ||(I + AC)^{-1}|| for positive semidefinite A, C.

    Takes the best of three factorized estimates over the denominator
    1 + min sigma(AC); with L L^T = A and M M^T = C the numerators are
    ||A||^(1/2)||L^T C||, ||C||^(1/2)||A M|| and
    ||A||^(1/2)||C||^(1/2)||L^T M||.
    """
    A = _check_symmetric_psd(A, "A")
    C = _check_symmetric_psd(C, "C")
    if A.shape != C.shape:
        raise DimensionMismatch(f"A and C must share a shape, got {A.shape} and {C.shape}")
    RA = linalg.psd_sqrt(A)
    L = linalg.psd_factor(A)
    M = linalg.psd_factor(C)
    w = np.linalg.eigvalsh(RA @ C @ RA)
    den = 1.0 + max(float(w[0]) if w.size else 0.0, 0.0)
    na = linalg.op_norm(A)
    nc = linalg.op_norm(C)
    t1 = np.sqrt(na) * linalg.op_norm(L.T @ C)
    t2 = np.sqrt(nc) * linalg.op_norm(A @ M)
    t3 = np.sqrt(na * nc) * linalg.op_norm(L.T @ M)
    return 1.0 + min(t1, t2, t3) / den


def verify_norm_floor(A: np.ndarray, C: np.ndarray) -> tuple[float, bool]:
    """Return (||I + AC||, flag); the norm is >= 1 with equality iff AC = 0."""
    A = _check_symmetric_psd(A, "A")
    C = _check_symmetric_psd(C, "C")
    if A.shape != C.shape:
        raise DimensionMismatch(f"A and C must share a shape, got {A.shape} and {C.shape}")
    AC = A @ C
    norm = linalg.op_norm(np.eye(A.shape[0]) + AC)
    zero = linalg.op_norm(AC) <= 1e-12 * max(1.0, linalg.op_norm(A) * linalg.op_norm(C))
    return norm, zero


def _quarter_inverse(G: np.ndarray, name: str) -> np.ndarray:
    w, V = linalg.sym_eig(G)
    scale = float(w[-1]) if w.size else 0.0
    if scale <= 0.0 or w[0] <= w.size * EPS * scale:
        raise UnboundedRelativeBound(f"{name} is rank deficient; relative bound is infinite")
    return (V * w**-0.25) @ V.T


def alpha_relative(M: np.ndarray, B: np.ndarray) -> float:
    """Largest eigenvalue of (BB^T)^{-1/4} M (BB^T)^{-1/4}."""
    S = _quarter_inverse(B @ B.T, "B B^T")
    w = np.linalg.eigvalsh(S @ ((M + M.T) / 2.0) @ S)
    return max(float(w[-1]), 0.0)


def relative_bounds(H: BlockSaddle) -> RelativeBounds:
    """Relative sizes alpha, gamma of A and C against |B^T| and |B|."""
    return RelativeBounds(
        alpha=alpha_relative(H.A, H.B),
        gamma=alpha_relative(H.C, H.B.T),
    )


def hbinv_certificate(H: BlockSaddle) -> GapCertificate:
    """Gap certificate driven by invertibility of B rather than of A and C.

    With alpha, gamma the relative bounds of A and C against |B^T|, |B|,
    ||H^{-1}|| <= ||B^{-1}|| (1 + max(alpha, gamma) + alpha gamma).
    Works for semidefinite A, C; H is nonsingular whenever B is.
    """
    if H.m != H.k:
        raise BNotInvertible(f"B must be square, got {H.m}x{H.k}")
    s = np.linalg.svd(H.B, compute_uv=False)
    if s.size == 0 or s[0] == 0.0 or s[-1] <= H.m * EPS * s[0]:
        raise UnboundedRelativeBound("B is singular; relative bounds are infinite")
    rb = relative_bounds(H)
    binv = 1.0 / float(s[-1])
    bound = binv * (1.0 + max(rb.alpha, rb.gamma) + rb.alpha * rb.gamma)
    radius = 1.0 / bound
    return GapCertificate(
        method="hbinv",
        interval=(-radius, radius),
        claim="excludes_all",
        inv_norm_bound=bound,
        quantities={"alpha": rb.alpha, "gamma": rb.gamma, "inv_B_norm": binv},
    )


def _psd_split(M: np.ndarray, tol_rank: float | None):
    # split R^n into numerical range and null space of a PSD matrix
    w, V = linalg.sym_eig(M)
    if tol_rank is None:
        tol_rank = w.size * EPS
    scale = max(abs(float(w[0])), abs(float(w[-1]))) if w.size else 0.0
    cutoff = tol_rank * scale
    null = w <= cutoff
    return V[:, ~null], V[:, null], w[~null]


def zero_dichotomy_certificate(H: BlockSaddle, tol_rank: float | None = None) -> GapCertificate:
    """Gap certificate for semidefinite A, C with matching null-space dimensions.

    Splitting both halves into range and null parts leaves a quasi-definite
    core coupled to an off-diagonal pair through B22, the restriction of B
    between the null spaces.  If B22 is invertible, H is nonsingular and

        ||H^{-1}|| <= (1 + max(||B12 B22^{-1}||, ||B21^T B22^{-T}||))^2
                      * max(||A1^{-1}||, ||C1^{-1}||, ||B22^{-1}||).
    """
    RA, NA, wa = _psd_split(H.A, tol_rank)
    RC, NC, wc = _psd_split(H.C, tol_rank)
    p, q = NA.shape[1], NC.shape[1]
    if p != q:
        raise DimensionMismatch(f"dim N(A) = {p} differs from dim N(C) = {q}")
    inv_parts = []
    if wa.size:
        inv_parts.append(1.0 / float(wa[0]))
    if wc.size:
        inv_parts.append(1.0 / float(wc[0]))
    coupling = 0.0
    if p > 0:
        B22 = NA.T @ H.B @ NC
        s22 = np.linalg.svd(B22, compute_uv=False)
        if s22[0] == 0.0 or s22[-1] <= p * EPS * s22[0]:
            raise B22Singular("restriction of B between N(A) and N(C) is singular")
        inv_parts.append(1.0 / float(s22[-1]))
        B12 = RA.T @ H.B @ NC
        B21 = NA.T @ H.B @ RC
        if B12.size:
            coupling = max(coupling, linalg.op_norm(np.linalg.solve(B22.T, B12.T).T))
        if B21.size:
            coupling = max(coupling, linalg.op_norm(np.linalg.solve(B22, B21).T))
    if not inv_parts:
        raise NotDefinite("both blocks are zero-dimensional")
    eps = 1.0 / ((1.0 + coupling) ** 2 * max(inv_parts))
    return GapCertificate(
        method="zero_dichotomy",
        interval=(-eps, eps),
        claim="excludes_all",
        inv_norm_bound=1.0 / eps,
        quantities={"epsilon": eps, "null_dim": float(p), "coupling": coupling},
    )


def kirsch_certificate(A: np.ndarray, B: np.ndarray) -> GapCertificate:
    """Gap radius sqrt(min sigma(A)^2 + min sigma(B)^2) for H = [[A, B], [B, -A]].

    A and B must be symmetric positive semidefinite of equal size, at
    least one of them definite.
    """
    A = _check_symmetric_psd(A, "A")
    B = _check_symmetric_psd(B, "B")
    if A.shape != B.shape:
        raise DimensionMismatch(f"A and B must share a shape, got {A.shape} and {B.shape}")
    n = A.shape[0]
    amin = max(float(np.linalg.eigvalsh(A)[0]), 0.0)
    bmin = max(float(np.linalg.eigvalsh(B)[0]), 0.0)
    scale = max(linalg.op_norm_bound(A), linalg.op_norm_bound(B), 1.0)
    if amin <= n * EPS * scale and bmin <= n * EPS * scale:
        raise BothSemidefiniteSingular("both A and B have smallest eigenvalue zero")
    radius = float(np.hypot(amin, bmin))
    return GapCertificate(
        method="kirsch",
        interval=(-radius, radius),
        claim="excludes_all",
        inv_norm_bound=1.0 / radius,
        quantities={"min_sigma_A": amin, "min_sigma_B": bmin},
    )


def winklmeier_bound(H: BlockSaddle) -> float:
    """Quadratic-numerical-range gap radius; may come out <= 0 (void bound).

    Value: -(||A|| + ||C||)/2 + sqrt((||A|| - ||C||)^2/4 + 1/||B^{-1}||^2).
    """
    if H.m != H.k:
        raise BNotInvertible(f"B must be square, got {H.m}x{H.k}")
    s = np.linalg.svd(H.B, compute_uv=False)
    if s.size == 0 or s[0] == 0.0 or s[-1] <= H.m * EPS * s[0]:
        raise BNotInvertible("B is singular to working precision")
    na = linalg.op_norm(H.A)
    nc = linalg.op_norm(H.C)
    return float(-(na + nc) / 2.0 + np.hypot((na - nc) / 2.0, float(s[-1])))


def func_calc_AC(A: np.ndarray, C: np.ndarray, f0: float, f1) -> np.ndarray:
    """Evaluate f(AC) = f0 I + A C^(1/2) f1(C^(1/2) A C^(1/2)) C^(1/2).

    Meaningful for functions with f(x) = f0 + x f1(x); the inner argument
    is symmetric PSD, so f1 only ever sees the nonnegative eigenvalues.
    """
    A = _check_symmetric_psd(A, "A")
    C = _check_symmetric_psd(C, "C")
    if A.shape != C.shape:
        raise DimensionMismatch(f"A and C must share a shape, got {A.shape} and {C.shape}")
    R = linalg.psd_sqrt(C)
    w, V = linalg.sym_eig(R @ A @ R)
    w = np.clip(w, 0.0, None)
    vals = np.asarray([float(f1(x)) for x in w])
    F = (V * vals) @ V.T
    return f0 * np.eye(A.shape[0]) + A @ R @ F @ R


@dataclass(frozen=True)
class Quartic4x4Params:
    """Parameters of the 4x4 closed form for H = [[A, B], [B*, -A]].

    A = [[a_plus, a], [conj(a), a_minus]] is Hermitian; B has diagonal
    b_plus, b_minus and off-diagonal b with lower entry sign*conj(b).
    sign=+1 makes B Hermitian (real diagonal); sign=-1 makes it
    anti-Hermitian (purely imaginary diagonal).  Complex entries are
    passed as (re, im) pairs.
    """

    a_plus: float
    a_minus: float
    a: tuple[float, float] = (0.0, 0.0)
    b: tuple[float, float] = (0.0, 0.0)
    b_plus: tuple[float, float] = (0.0, 0.0)
    b_minus: tuple[float, float] = (0.0, 0.0)
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.sign == -1 and (self.b_plus[0] != 0.0 or self.b_minus[0] != 0.0):
            raise ValueError("sign = -1 requires purely imaginary b_plus, b_minus")
        if self.sign == 1 and (self.b_plus[1] != 0.0 or self.b_minus[1] != 0.0):
            raise ValueError("sign = +1 requires real b_plus, b_minus")

    def blocks(self) -> tuple[np.ndarray, np.ndarray]:
        a = complex(*self.a)
        b = complex(*self.b)
        bp = complex(*self.b_plus)
        bm = complex(*self.b_minus)
        A = np.array([[self.a_plus, a], [np.conj(a), self.a_minus]])
        B = np.array([[bp, b], [self.sign * np.conj(b), bm]])
        return A, B

    def assemble(self) -> np.ndarray:
        A, B = self.blocks()
        return np.block([[A, B], [B.conj().T, -A]])


def eig_4x4(p: Quartic4x4Params) -> np.ndarray:
    """All four eigenvalues of the parametrized 4x4, ascending.

    The characteristic polynomial is biquadratic, lambda^4 - 2s lambda^2
    + c0, so the spectrum is plus/minus two square roots.
    """
    A, B = p.blocks()
    s = (
        p.a_plus**2
        + p.a_minus**2
        + abs(complex(*p.b_plus)) ** 2
        + abs(complex(*p.b_minus)) ** 2
    ) / 2.0 + abs(complex(*p.a)) ** 2 + abs(complex(*p.b)) ** 2
    if p.sign == 1:
        c0 = abs(np.linalg.det(A - 1j * B)) ** 2
    else:
        c0 = abs(np.linalg.det(A - B)) ** 2
    disc = s * s - c0
    if disc < -1e-12 * max(s * s, 1.0):
        raise NegativeDiscriminant(f"s^2 - c0 = {disc:.3e} < 0; parameters inconsistent")
    root = np.sqrt(max(disc, 0.0))
    lo = np.sqrt(max(s - root, 0.0))
    hi = np.sqrt(s + root)
    return np.array([-hi, -lo, lo, hi])


_SCALED_A = np.array([[1.24, 0.81], [0.81, 0.53]])
_SCALED_B = np.array([[0.30, -0.27], [-0.31, -0.48]])


def nonmono_curve(t_grid: np.ndarray, family: str) -> np.ndarray:
    """Distance of the spectrum to zero along a one-parameter family.

    Families: "kirsch_Bt" uses A = [[2,-1],[-1,2]] with B_t = diag(1, t);
    "scaled_A" scales a fixed indefinite-coupling pair as [[tA, B],
    [B^T, -tA]]; "simple" uses A_t = diag(0, t) with antisymmetric unit
    coupling, whose determinant stays 1 for every t.  Returns rows
    (t, min |eigenvalue|).
    """
    t_grid = np.asarray(t_grid, dtype=float)
    mins = np.zeros(t_grid.size)
    if family == "kirsch_Bt":
        for i, t in enumerate(t_grid):
            p = Quartic4x4Params(2.0, 2.0, a=(-1.0, 0.0), b_plus=(1.0, 0.0), b_minus=(t, 0.0))
            mins[i] = eig_4x4(p)[2]
    elif family == "scaled_A":
        for i, t in enumerate(t_grid):
            H = np.block([[t * _SCALED_A, _SCALED_B], [_SCALED_B.T, -t * _SCALED_A]])
            mins[i] = float(np.min(np.abs(np.linalg.eigvalsh(H))))
    elif family == "simple":
        Bs = np.array([[0.0, 1.0], [-1.0, 0.0]])
        for i, t in enumerate(t_grid):
            A = np.diag([0.0, t])
            H = np.block([[A, Bs], [Bs.T, -A]])
            det = float(np.linalg.det(H))
            if abs(det - 1.0) > 1e-10:
                raise ArithmeticError(f"unit determinant drifted: det = {det!r} at t = {t}")
            mins[i] = float(np.min(np.abs(np.linalg.eigvalsh(H))))
    else:
        raise ValueError(f"unknown family {family!r}")
    return np.column_stack([t_grid, mins])


def omladic_pair(t: float) -> tuple[np.ndarray, np.ndarray]:
    """PSD pair with ||(I + AC)^{-1}|| = ||[[2, -t], [-1/t, 2]]||/3, unbounded in t."""
    A = np.diag([t, 1.0 / t])
    C = np.array([[1.0 / t, 1.0], [1.0, t]])
    return A, C


def boettcher_matrix() -> np.ndarray:
    """Diagonalizable M with positive spectrum whose I + M inverts badly."""
    return np.array([[1.0, 0.0, 0.0], [-20.0, 1.1, 0.0], [0.0, -20.0, 1.2]])


def boettcher_psd_split() -> tuple[np.ndarray, np.ndarray]:
    """PSD factors A, C with AC equal to the boettcher matrix.

    Built from its eigenvector matrix U and eigenvalues L as A = U L^(1/2) U^T,
    C = U^{-T} L^(1/2) U^{-1}; U is very ill-conditioned, so the product
    reproduces M only to about 1e-11.
    """
    U = np.array([[1.0, 0.0, 0.0], [200.0, 1.0, 0.0], [20000.0, 200.0, 1.0]])
    S = np.diag(np.sqrt([1.0, 1.1, 1.2]))
    Uinv = np.linalg.inv(U)
    return U @ S @ U.T, Uinv.T @ S @ Uinv


@dataclass(frozen=True)
class CounterexampleReport:
    """Computed evidence against the bounded-inverse conjecture."""

    omladic: list[tuple[float, float, float]]  # (t, computed norm, closed form)
    boettcher_norm: float
    boettcher_inv_norm: float
    conjecture_violated: bool
    boettcher_split_residual: float
    commuting_inv_norm: float


def counterexample_suite() -> CounterexampleReport:
    """Evaluate the inverse-norm counterexamples of the I + AC problem.

    The omladic family shows ||(I + AC)^{-1}|| growing like t/3; the
    boettcher matrix violates ||(I + AC)^{-1}|| <= ||I + AC|| outright;
    a commuting pair is included as the contrast where the conjectured
    inequality does hold.
    """
    n3 = np.eye(3)
    rows = []
    for t in (1.0, 10.0, 100.0):
        A, C = omladic_pair(t)
        computed = linalg.op_norm(np.linalg.inv(np.eye(2) + A @ C))
        closed = linalg.op_norm(np.array([[2.0, -t], [-1.0 / t, 2.0]])) / 3.0
        rows.append((t, computed, closed))
    M = boettcher_matrix()
    norm = linalg.op_norm(n3 + M)
    inv_norm = linalg.op_norm(np.linalg.inv(n3 + M))
    As, Cs = boettcher_psd_split()
    # the factors reach norm ~4e8, so the residual only means anything
    # relative to the scale ||As|| ||Cs|| ~ 2e17 at which it was formed
    residual = linalg.op_norm(As @ Cs - M) / (linalg.op_norm(As) * linalg.op_norm(Cs))
    Ac = np.diag([1.0, 2.0])
    commuting = linalg.op_norm(np.linalg.inv(np.eye(2) + Ac @ Ac))
    return CounterexampleReport(
        omladic=rows,
        boettcher_norm=norm,
        boettcher_inv_norm=inv_norm,
        conjecture_violated=inv_norm > norm,
        boettcher_split_residual=residual,
        commuting_inv_norm=commuting,
    )
