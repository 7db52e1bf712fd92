"""Mean widths of regular polytopes and normal-sample range moments."""

from ._core import (
    DomainError,
    ConvergenceError,
    normal_pdf,
    normal_cdf,
    arcsec,
    lambert_w0,
    bessel_k0,
    gamma_ratio_half,
    chi_mean,
    mu_quadrature,
    nu_quadrature,
    mu_closed,
    nu_closed,
    s_constant,
    t_constant,
    u_constant,
    v_constant,
    simplex_mean_width,
    simplex_mean_width_hz,
    simplex_mean_sq_width,
    cube_mean_width,
    cube_mean_sq_width,
    crosspolytope_mean_width,
    width_report,
    a_n,
    a_n_expansion,
    limit_range_density,
    mu_asymptotic,
    simplex_mean_width_asymptotic,
    inscaled_mean_width_asymptotic,
    mc_width_moments,
    octa_g,
    octa_mean_width_exact,
    octa_mean_sq_width_exact,
    octa_sphere_integral,
    octa_phi_boundary,
    octa_sector_mean_sq,
)

__all__ = [name for name in dir() if not name.startswith("_")]
