//! Test ideals `τ(a_1^{c_1} ··· a_n^{c_n})` of ideal families in
//! `F_p[x_1, ..., x_d]`, their F-thresholds and jumping numbers.

mod rational;
mod tau;
mod threshold;

pub use rational::{
    ceil_scaled, floor_to_u64, format_rational, p_power_exponent, parse_rational, rat, rat_int, PAdicRational,
    ParamPoint, Rational,
};
pub use tau::{reduce_to_single, skoda_reduce, tau_mixed, tau_mixed_gb, tau_principal, IdealFamily, TauConfig};
pub use threshold::{default_v_cap, f_threshold, jumping_scan, v_number, v_number_with, FThreshold, Jump};
