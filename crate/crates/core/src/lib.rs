//! Exact anthyphairesis of quadratic ratios.
//!
//! The crate expands ratios of lines in real quadratic fields into their
//! quotient sequences by repeated integer substitution on quadratic relations,
//! detects periodicity by the recurrence of relation states, and builds the
//! proportion calculus on equality of those expansions.
//!
//! ```
//! use anthyph_core::{run_anthyphairesis, QuadraticForm};
//!
//! // a² = 2·b²
//! let form = QuadraticForm::excess(1, 0, 2).unwrap();
//! let (cf, _trace) = run_anthyphairesis(&form, 100).unwrap();
//! assert_eq!(cf.to_string(), "[1; period(2)]");
//! ```

pub mod areas;
pub mod arith;
pub mod cf;
pub mod error;
pub mod expand;
pub mod form;
pub mod propositions;
pub mod ratio;
pub mod side_diameter;
pub mod surd;
pub mod verify;

pub use arith::{is_perfect_square, isqrt, Int, Rational};
pub use cf::{euclid_cf, surd_cf, ContinuedFraction};
pub use error::{Error, Result};
pub use expand::{expand_value, run_anthyphairesis, Expander, ExpansionTrace, DEFAULT_MAX_STEPS};
pub use form::{
    defect_step, excess_step, minimal_form, mixed_step, state_space_size, DefectCase, DefectStep,
    FormKind, MinimalForm, QuadraticForm, Step,
};
pub use propositions::{check_proposition, PropReport, Proposition};
pub use ratio::{
    anth_of_ratio, commensurable_pure, cross_product_eq, mixed_ratio_eq, ratio_eq,
    square_ratio_witness, Magnitude, Role,
};
pub use side_diameter::{convergents, period_to_form, remainder, SideDiameter};
pub use surd::QuadSurd;
