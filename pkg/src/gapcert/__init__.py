"""Certified spectral gaps at zero for Hermitian block saddle matrices."""

from .bounds import (
    BlockSaddle,
    CounterexampleReport,
    GapCertificate,
    NullSpaceReport,
    Quartic4x4Params,
    RelativeBounds,
    counterexample_suite,
    diag_gap,
    eig_4x4,
    func_calc_AC,
    hbinv_certificate,
    inv_IplusAC_bound,
    kirsch_certificate,
    nonmono_curve,
    null_space_H,
    relative_bounds,
    stretch_certificate,
    verify_norm_floor,
    winklmeier_bound,
    zero_dichotomy_certificate,
)
from .linalg import (
    Bidiagonal,
    EigenDecomposition,
    bidiag_svd_hra,
    complex_svd_via_embedding,
    null_space_basis,
    op_norm,
    polar_factors,
    psd_factor,
    psd_sqrt,
    sym_eig,
)
from .matio import (
    format_block_saddle,
    format_matrix,
    parse_block_saddle,
    parse_matrix,
    read_block_saddle,
    read_matrix,
    write_block_saddle,
    write_matrix,
)
from .model import (
    DisorderReport,
    DisorderSpec,
    ModelSpec,
    SecularRoots,
    SpuriousEstimate,
    StableGap,
    build_Hc,
    build_Kc,
    build_Tc,
    build_Wc,
    build_blocks,
    build_modified,
    disorder_experiment,
    gap_scan,
    hc_spectrum,
    lambda_of_alpha,
    modified_spectrum_closed_form,
    secular_eigenvalues,
    secular_solve,
    spurious_estimate,
    stable_gap,
    stable_gap_check,
    symbol_spectrum,
)
from .stokes import (
    IntervalPair,
    PencilSpectrum,
    PerturbationSpec,
    StokesMatrix,
    axel_intervals,
    minimal_intervals,
    new_gap_estimate,
    pencil_spectrum,
    perturbation_bounds,
    rayleigh_p,
    ruwa_intervals,
)

__version__ = "0.1.0"
