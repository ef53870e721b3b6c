//! Quadrant walks, the kernel root series and the exact and asymptotic
//! routes to `ρ₃(n)`.

pub mod asymptotics;
pub mod counting;
pub mod kernel;
pub mod laurent;
pub mod series;

pub use asymptotics::{
    asymptotic_estimate, characteristic_analysis, expansion_from_recurrence, fit_k, relative_error, AsymptoticParams,
};
pub use counting::{
    coeff_y0_pow, count_walks_dp, count_walks_table, rho3_closed_form, rho3_kernel_ct, rho3_kernel_ct_table,
    rho3_recurrence, rho3_recurrence_from_closed_form, run_recurrence, walk_differences,
};
pub use kernel::{kernel_at_y0, kernel_symmetry_holds, y0_series};
pub use laurent::{BiLaurent, LaurentPoly};
pub use series::TruncatedSeries;
