from ._core import (
    CovEstimate,
    GammaPoly,
    InputError,
    NExpansion,
    ResourceError,
    __version__,
    arc_weight,
    catalan,
    centered_cov_limit,
    cov_limit_closed,
    cov_limit_semiclosed,
    cycle_count,
    decompose,
    enumerate_nc2_annular,
    enumerate_pairings,
    estimate_cov,
    exact_cov,
    exact_cumulant,
    exact_moment,
    fuss_catalan,
    fuss_catalan_series,
    is_noncrossing_annular,
    is_noncrossing_disc,
    moment_limit,
    nc2_count_closed,
    second_order_rhs,
    spoke_count,
    sstar_cov_limit,
    verify,
)
