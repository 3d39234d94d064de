//! Reference answers for the solver, computed along routes that share no
//! code with the Minkowski edge merge.
//!
//! - [`brute_force`] enumerates every weight tuple.
//! - [`support_solve`] works on the dual side: it splits the unit circle of
//!   directions into arcs on which each summand's support point is fixed,
//!   and takes the largest Thales-circle diameter `|sum of support points|`.

mod brute;
mod support;

pub use brute::{brute_force, brute_force_with_cap, DEFAULT_BRUTE_FORCE_CAP};
pub use support::{
    arc_breakpoints, support_solve, support_value, thales_residual, ArcBreakpoints,
    SupportSolution, ARC_MERGE_TOLERANCE,
};
