use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::index_set::{IndexSet, MAX_VARIABLES};
use crate::semantics::Rational;

/// One symbol per variable, 0-based, in variable order.
pub type Assignment = Vec<u32>;

/// An exact joint pmf over `X_1, ..., X_n` with finite alphabets.
///
/// Only assignments with positive probability are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct JointDistribution {
    names: Vec<String>,
    alphabet_sizes: Vec<usize>,
    pmf: BTreeMap<Assignment, Rational>,
}

impl JointDistribution {
    /// Builds a distribution with the default names `X1, ..., Xn`.
    ///
    /// Rows with probability zero are dropped. Fails on a negative
    /// probability, a symbol outside its alphabet, a repeated assignment,
    /// or a total mass other than exactly 1.
    pub fn new(
        alphabet_sizes: Vec<usize>,
        rows: impl IntoIterator<Item = (Assignment, Rational)>,
    ) -> Result<JointDistribution> {
        let names = (1..=alphabet_sizes.len()).map(|i| format!("X{i}")).collect();
        JointDistribution::with_names(names, alphabet_sizes, rows)
    }

    pub fn with_names(
        names: Vec<String>,
        alphabet_sizes: Vec<usize>,
        rows: impl IntoIterator<Item = (Assignment, Rational)>,
    ) -> Result<JointDistribution> {
        let n = alphabet_sizes.len();
        if n == 0 || n > MAX_VARIABLES {
            return Err(Error::InvalidDistribution(format!(
                "{n} variables (must be 1..={MAX_VARIABLES})"
            )));
        }
        if names.len() != n {
            return Err(Error::InvalidDistribution(format!(
                "{} names for {n} variables",
                names.len()
            )));
        }
        if let Some(i) = alphabet_sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidDistribution(format!(
                "variable {} has an empty alphabet",
                i + 1
            )));
        }
        let mut pmf = BTreeMap::new();
        let mut seen = std::collections::BTreeSet::new();
        let mut total = Rational::zero();
        for (assignment, prob) in rows {
            check_assignment(&assignment, &alphabet_sizes)?;
            if prob.is_negative() {
                return Err(Error::InvalidDistribution(format!(
                    "negative probability {prob} for {assignment:?}"
                )));
            }
            if !seen.insert(assignment.clone()) {
                return Err(Error::InvalidDistribution(format!(
                    "assignment {assignment:?} listed twice"
                )));
            }
            total += &prob;
            if !prob.is_zero() {
                pmf.insert(assignment, prob);
            }
        }
        if !total.is_one() {
            return Err(Error::InvalidDistribution(format!(
                "total mass is {total}, not 1"
            )));
        }
        Ok(JointDistribution {
            names,
            alphabet_sizes,
            pmf,
        })
    }

    pub fn n(&self) -> usize {
        self.alphabet_sizes.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn alphabet_sizes(&self) -> &[usize] {
        &self.alphabet_sizes
    }

    /// Probability of a full assignment.
    pub fn probability(&self, assignment: &[u32]) -> Rational {
        self.pmf.get(assignment).cloned().unwrap_or_else(Rational::zero)
    }

    /// Positive-probability assignments in lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = (&Assignment, &Rational)> {
        self.pmf.iter()
    }

    pub fn support_len(&self) -> usize {
        self.pmf.len()
    }

    /// The pmf of `X_a`, keyed by the symbols of `a` in ascending index
    /// order. Only positive entries appear.
    pub fn marginal(&self, a: IndexSet) -> HashMap<Assignment, Rational> {
        assert!(
            a.is_subset(IndexSet::full(self.n())),
            "index set {a} outside the {} variables of the distribution",
            self.n()
        );
        let mut out: HashMap<Assignment, Rational> = HashMap::new();
        for (x, p) in &self.pmf {
            *out.entry(project(x, a)).or_insert_with(Rational::zero) += p;
        }
        out
    }
}

/// The symbols of `x` at the indices of `a`, ascending.
pub fn project(x: &[u32], a: IndexSet) -> Assignment {
    a.iter().map(|i| x[i - 1]).collect()
}

fn check_assignment(assignment: &[u32], sizes: &[usize]) -> Result<()> {
    if assignment.len() != sizes.len() {
        return Err(Error::InvalidDistribution(format!(
            "assignment {assignment:?} has {} symbols, expected {}",
            assignment.len(),
            sizes.len()
        )));
    }
    for (i, (&s, &size)) in assignment.iter().zip(sizes).enumerate() {
        if s as usize >= size {
            return Err(Error::InvalidDistribution(format!(
                "symbol {s} of variable {} is outside its alphabet of size {size}",
                i + 1
            )));
        }
    }
    Ok(())
}

impl std::fmt::Debug for JointDistribution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::textio::render_distribution(self))
    }
}
