//! Green functions, Lyapunov exponents, fixed points and families.

mod chi;
mod family;
mod fixed;
mod green;

pub use chi::{przytycki_chi, ChiBreakdown, ChiValue, CriticalTerm};
pub use family::{
    benedetto_poly, benedetto_scan, family_classify, BenedettoRow, CycleClass, FamilyReport, Regime,
};
pub use fixed::{
    fixed_point_report, rational_iterate, FixedClass, FixedPointClass, MultiplierVal, MAX_PERIOD,
};
pub use green::{
    escape_radius, green_sum_over_roots, green_value, invariant_ball, EscapeData, GreenResult,
    InvariantBall, RootGreenSum, DEFAULT_MAX_STEPS, MAX_ITERATE_BITS,
};
