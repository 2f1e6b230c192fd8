//! The exact semantic oracle: rational joint distributions, Shannon
//! measures in bits, and validity of a statement on a distribution.

mod distribution;
mod measures;
mod random;
mod validity;

pub use distribution::{project, Assignment, JointDistribution};
pub use measures::{cond_entropy, cond_mutual_info, entropy, j_value};
pub use random::{random_distribution, MAX_RANDOM_ALPHABET, MAX_RANDOM_VARIABLES};
pub use validity::{is_valid, is_valid_by_definition};

/// Exact probabilities, always in lowest terms.
pub type Rational = num_rational::BigRational;
