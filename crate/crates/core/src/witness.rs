//! Counterexample distributions for failed implications.
//!
//! Every witness is built from one of four small templates over uniform
//! bits `U` and `V`: one variable set to `U`, two or three copies of `U`, or
//! `U`, `V` and `U xor V`. All other variables are the constant 0 and every
//! alphabet has size 2. Nothing is returned before the exact oracle has
//! confirmed that the premise holds and the conclusion fails.

use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::canonical::{canonicalize, CanonicalCmi};
use crate::cmi::{same_ground_set, Cmi};
use crate::error::{Error, Result};
use crate::implication::{implies, residual_canonical};
use crate::index_set::IndexSet;
use crate::semantics::{is_valid, is_valid_by_definition, JointDistribution, Rational};
use crate::textio::render_distribution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Template {
    /// `X_m = U`.
    Single,
    /// `X_a = X_b = U`.
    Copy2,
    /// `X_a = X_b = X_c = U`.
    Copy3,
    /// `X_a = U`, `X_b = V`, `X_c = U xor V`.
    Xor,
}

impl Template {
    pub fn arity(self) -> usize {
        match self {
            Template::Single => 1,
            Template::Copy2 => 2,
            Template::Copy3 | Template::Xor => 3,
        }
    }

    /// The template's distribution over `n` binary variables.
    ///
    /// # Panics
    ///
    /// If the pivots are not distinct indices in `1..=n` or their number
    /// does not match the template.
    pub fn distribution(self, n: usize, pivots: &[usize]) -> JointDistribution {
        assert_eq!(pivots.len(), self.arity(), "{self} takes {} pivots", self.arity());
        assert!(
            pivots.iter().all(|&m| (1..=n).contains(&m)),
            "pivots {pivots:?} outside 1..={n}"
        );
        assert_eq!(IndexSet::from(pivots).len(), pivots.len(), "pivots must be distinct");
        let outcomes: u32 = if self == Template::Xor { 4 } else { 2 };
        let rows = (0..outcomes).map(|x| {
            let mut row = vec![0u32; n];
            if self == Template::Xor {
                let (u, v) = (x >> 1, x & 1);
                row[pivots[0] - 1] = u;
                row[pivots[1] - 1] = v;
                row[pivots[2] - 1] = u ^ v;
            } else {
                for &m in pivots {
                    row[m - 1] = x;
                }
            }
            (row, Rational::new(1.into(), outcomes.into()))
        });
        JointDistribution::new(vec![2; n], rows).expect("templates are valid pmfs")
    }

    const ALL: [Template; 4] = [Template::Single, Template::Copy2, Template::Copy3, Template::Xor];
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Template::Single => "SINGLE",
            Template::Copy2 => "COPY2",
            Template::Copy3 => "COPY3",
            Template::Xor => "XOR",
        })
    }
}

/// Which of the two statements passed in is the premise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// The first statement holds and the second fails.
    Forward,
    /// The second statement holds and the first fails.
    Backward,
}

/// The reason a witness was chosen: the first failed requirement of the
/// implication test, or a brute-force search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Step {
    /// The premise is degenerate and the conclusion is not.
    DegeneratePremise,
    /// The premise's condition is not inside the conclusion's.
    Condition,
    /// The conclusion forces a variable the premise leaves free.
    Repeated,
    /// The residual mentions a variable outside the premise's parts.
    PartsOutside,
    /// The residual conditions on a variable outside the premise.
    ConditionOutside,
    /// Two residual blocks draw from one part of the premise.
    Separation,
    /// None of the above produced a witness; found by search.
    Search,
}

/// A distribution on which `premise` holds and `conclusion` does not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub distribution: JointDistribution,
    pub premise: Cmi,
    pub conclusion: Cmi,
    pub direction: Direction,
    pub template: Template,
    pub pivots: Vec<usize>,
    pub step: Step,
}

impl Witness {
    /// Binary alphabets everywhere, and every variable outside the pivots
    /// constantly 0.
    pub fn is_template_shaped(&self) -> bool {
        let pivots = IndexSet::from(self.pivots.as_slice());
        let total: Rational = self.distribution.support().map(|(_, q)| q.clone()).sum();
        total.is_one()
            && self.distribution.alphabet_sizes().iter().all(|&s| s == 2)
            && self.distribution.support().all(|(x, _)| {
                x.iter().enumerate().all(|(i, &s)| s == 0 || pivots.contains(i + 1))
            })
    }

    /// The distribution in the pmf file format, followed by comment lines
    /// describing the construction.
    pub fn to_file(&self) -> String {
        let pivots: Vec<String> = self.pivots.iter().map(usize::to_string).collect();
        format!(
            "{}# template: {}\n# pivots: {}\n# premise: {}\n# conclusion: {}\n",
            render_distribution(&self.distribution),
            self.template,
            pivots.join(" "),
            self.premise,
            self.conclusion,
        )
    }
}

/// A verified distribution on which `k` holds and `k2` fails.
///
/// Fails with [`Error::NoWitness`] if `k` implies `k2`.
///
/// ```
/// use cmikit::{is_valid, witness_non_implication, Cmi, Template};
///
/// let k = Cmi::parse("I(1 ; 2)", 3).unwrap();
/// let k2 = Cmi::parse("I(1 ; 3)", 3).unwrap();
/// let w = witness_non_implication(&k, &k2).unwrap();
/// assert_eq!((w.template, w.pivots.as_slice()), (Template::Copy2, &[1, 3][..]));
/// assert!(is_valid(&w.distribution, &k) && !is_valid(&w.distribution, &k2));
/// ```
pub fn witness_non_implication(k: &Cmi, k2: &Cmi) -> Result<Witness> {
    same_ground_set(k, k2)?;
    if implies(k, k2)? {
        return Err(Error::NoWitness(format!("{k} implies {k2}")));
    }
    let n = k.n();
    let verified = |template: Template, pivots: Vec<usize>, step: Step| {
        let distribution = template.distribution(n, &pivots);
        separates(&distribution, k, k2).then(|| Witness {
            distribution,
            premise: k.clone(),
            conclusion: k2.clone(),
            direction: Direction::Forward,
            template,
            pivots,
            step,
        })
    };
    if let Some((template, pivots, step)) = cascade(&canonicalize(k), &canonicalize(k2)) {
        if let Some(w) = verified(template, pivots, step) {
            return Ok(w);
        }
    }
    let pool: Vec<usize> = k.support().union(k2.support()).iter().collect();
    for template in Template::ALL {
        for pivots in tuples(&pool, template.arity()) {
            if let Some(w) = verified(template, pivots, Step::Search) {
                return Ok(w);
            }
        }
    }
    Err(Error::Internal(format!(
        "no template separates {k} from {k2}"
    )))
}

/// A verified distribution on which exactly one of `k`, `k2` holds; the
/// direction `k` to `k2` is tried first.
///
/// Fails with [`Error::NoWitness`] if the statements are equivalent.
pub fn witness_non_equivalence(k: &Cmi, k2: &Cmi) -> Result<Witness> {
    same_ground_set(k, k2)?;
    if !implies(k, k2)? {
        return witness_non_implication(k, k2);
    }
    if !implies(k2, k)? {
        let mut w = witness_non_implication(k2, k)?;
        w.direction = Direction::Backward;
        return Ok(w);
    }
    Err(Error::NoWitness(format!("{k} and {k2} are equivalent")))
}

fn separates(p: &JointDistribution, premise: &Cmi, conclusion: &Cmi) -> bool {
    is_valid(p, premise)
        && is_valid_by_definition(p, premise)
        && !is_valid(p, conclusion)
        && !is_valid_by_definition(p, conclusion)
}

/// Picks a template by the first requirement of the implication test that
/// fails. Assumes `k` does not imply `k2`.
fn cascade(k: &CanonicalCmi, k2: &CanonicalCmi) -> Option<(Template, Vec<usize>, Step)> {
    let first = |s: IndexSet| s.min_index();
    let two_parts = |parts: &[IndexSet]| -> Option<(usize, usize)> {
        Some((first(*parts.first()?)?, first(*parts.get(1)?)?))
    };

    if k2.is_degenerate() {
        return None;
    }
    if k.is_degenerate() {
        return Some(match first(k2.repeated()) {
            Some(m) => (Template::Single, vec![m], Step::DegeneratePremise),
            None => {
                let (a, b) = two_parts(k2.parts())?;
                (Template::Copy2, vec![a, b], Step::DegeneratePremise)
            }
        });
    }
    if let Some(m1) = first(k.cond().difference(k2.cond())) {
        let pivots = match two_parts(k2.parts()) {
            Some((a, b)) => vec![m1, a, b],
            None => vec![m1, first(k2.repeated())?],
        };
        return copies(pivots, Step::Condition);
    }
    if let Some(m) = first(k2.repeated().difference(k.repeated())) {
        return Some((Template::Single, vec![m], Step::Repeated));
    }

    let res = residual_canonical(k, k2);
    let parts = k.part_union();
    let outside = |m: usize| res.parts().iter().find(|p| !p.contains(m)).and_then(|p| first(*p));
    if let Some(m1) = first(res.part_union().difference(parts)) {
        return copies(vec![m1, outside(m1)?], Step::PartsOutside);
    }
    let allowed = k.cond().union(parts).difference(res.part_union());
    if let Some(m5) = first(res.cond().difference(allowed)) {
        let (m3, m4) = two_parts(res.parts())?;
        let home = |m: usize| k.parts().iter().position(|p| p.contains(m));
        return Some(if home(m3) == home(m4) {
            (Template::Copy2, vec![m3, m4], Step::ConditionOutside)
        } else {
            (Template::Xor, vec![m3, m4, m5], Step::ConditionOutside)
        });
    }
    for (i, a) in res.parts().iter().enumerate() {
        for b in &res.parts()[i + 1..] {
            for p in k.parts() {
                if let (Some(x), Some(y)) = (first(a.intersection(*p)), first(b.intersection(*p))) {
                    return Some((Template::Copy2, vec![x, y], Step::Separation));
                }
            }
        }
    }
    None
}

/// `SINGLE`, `COPY2` or `COPY3` on the distinct members of `pivots`,
/// ascending.
fn copies(mut pivots: Vec<usize>, step: Step) -> Option<(Template, Vec<usize>, Step)> {
    pivots.sort_unstable();
    pivots.dedup();
    let template = match pivots.len() {
        1 => Template::Single,
        2 => Template::Copy2,
        3 => Template::Copy3,
        _ => return None,
    };
    Some((template, pivots, step))
}

/// Ordered selections of `len` distinct elements of `pool`, in
/// lexicographic order of positions. Copy templates are symmetric, so only
/// increasing selections are produced for them; `XOR` is symmetric too.
fn tuples(pool: &[usize], len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn go(pool: &[usize], from: usize, len: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        for i in from..pool.len() {
            current.push(pool[i]);
            go(pool, i + 1, len, current, out);
            current.pop();
        }
    }
    go(pool, 0, len, &mut current, &mut out);
    out
}
