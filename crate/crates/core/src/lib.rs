//! Conditional mutual independence statements over discrete random
//! variables: canonical forms, decision procedures for equivalence and
//! implication, an exact rational-arithmetic oracle, and counterexample
//! distributions.
//!
//! A statement `I(Q_1 ; ... ; Q_k | C)` says that the groups of variables
//! `X_{Q_1}, ..., X_{Q_k}` are mutually independent given `X_C`.
//!
//! ```
//! use cmikit::{canonicalize, implies, witness_non_implication, Cmi};
//!
//! let k = Cmi::parse("I(1,2 ; 2,3 ; 4 ; 5 | 1)", 5)?;
//! assert_eq!(canonicalize(&k).to_string(), "I(2 ; 2 ; 3 ; 4 ; 5 | 1)");
//!
//! let weaker = Cmi::parse("I(1 ; 3 ; 4 | 1,2)", 5)?;
//! assert!(implies(&k, &weaker)?);
//!
//! let unrelated = Cmi::parse("I(3 ; 4 | 5)", 5)?;
//! let w = witness_non_implication(&k, &unrelated)?;
//! println!("{}", w.to_file());
//! # Ok::<(), cmikit::Error>(())
//! ```

mod canonical;
mod cmi;
mod enumerate;
mod error;
mod implication;
mod index_set;
mod transform;

pub mod cli;
pub mod semantics;
pub mod textio;
pub mod witness;

pub use canonical::{canonicalize, is_degenerate, pure_form, repeated_indices, CanonicalCmi};
pub use cmi::{BlockList, Cmi, CmiSet};
pub use enumerate::{
    enumerate_canonical, enumerate_statements, MAX_ENUMERATION_BLOCKS, MAX_ENUMERATION_VARIABLES,
};
pub use error::{Error, Result};
pub use implication::{
    equivalent, implies, is_sub_cmi, residual, residual_canonical, set_implies, sub_cmi_clause,
    SubCmiClause,
};
pub use index_set::{IndexSet, MAX_VARIABLES};
pub use semantics::{
    cond_entropy, cond_mutual_info, entropy, is_valid, is_valid_by_definition, j_value,
    random_distribution, JointDistribution, Rational,
};
pub use textio::{parse_cmi, parse_distribution, render_cmi, render_distribution, ParseError};
pub use transform::{decompose_to_cis, weaken};
pub use witness::{witness_non_equivalence, witness_non_implication, Direction, Step, Template, Witness};

/// The guide's chapters, compiled as doctests so their examples stay
/// current.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/statements.md")]
    mod statements {}
    #[doc = include_str!("../../../book/src/canonical.md")]
    mod canonical {}
    #[doc = include_str!("../../../book/src/implication.md")]
    mod implication {}
    #[doc = include_str!("../../../book/src/semantics.md")]
    mod semantics {}
    #[doc = include_str!("../../../book/src/witnesses.md")]
    mod witnesses {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
