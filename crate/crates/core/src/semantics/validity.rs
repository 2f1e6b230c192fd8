use std::collections::HashSet;

use num_traits::{pow, Zero};

use crate::canonical::canonicalize;
use crate::cmi::Cmi;
use crate::index_set::IndexSet;
use crate::semantics::distribution::project;
use crate::semantics::{JointDistribution, Rational};

/// Decides exactly whether `k` holds on `p`.
///
/// Works on the canonical form `(C, <I, I, P_1, ..., P_t>)`: `X_I` must be
/// a function of `X_C`, and the parts must factorize given `X_C`. All
/// arithmetic is rational.
///
/// # Panics
///
/// If `k` and `p` have different numbers of variables.
pub fn is_valid(p: &JointDistribution, k: &Cmi) -> bool {
    assert_eq!(k.n(), p.n(), "statement and distribution disagree on n");
    let can = canonicalize(k);
    if can.is_degenerate() {
        return true;
    }
    let c = can.cond();
    let fd = p.marginal(c.union(can.repeated())).len() == p.marginal(c).len();
    fd && factorizes(p, c, can.parts())
}

/// Decides exactly whether `k` holds on `p`, straight from the definition
/// and without canonicalizing: for every `(x, y)` with `p(x_U, y) > 0`,
/// `p(x_U, y) p(y)^(k-1) = Π p(x_{Q_i}, y)`, where `U` is the union of the
/// blocks.
///
/// Blocks may overlap each other and the condition. Agrees with
/// [`is_valid`] on every input; it exists as an independent check.
pub fn is_valid_by_definition(p: &JointDistribution, k: &Cmi) -> bool {
    assert_eq!(k.n(), p.n(), "statement and distribution disagree on n");
    factorizes(p, k.cond(), k.blocks().as_slice())
}

/// `p(x_B, y) p(y)^(m-1) = Π_j p(x_{B_j}, y)` on the support of `X_{B ∪ C}`,
/// with `B` the union of the `m` blocks. Off that support the right side is
/// forced to vanish, since both sides sum to `p(y)^m` for each `y`.
fn factorizes(p: &JointDistribution, c: IndexSet, blocks: &[IndexSet]) -> bool {
    if blocks.len() <= 1 {
        return true;
    }
    let all = blocks.iter().fold(c, |acc, b| acc.union(*b));
    let joint = p.marginal(all);
    let cond = p.marginal(c);
    let margins: Vec<_> = blocks.iter().map(|b| (b.union(c), p.marginal(b.union(c)))).collect();
    let mut seen = HashSet::new();
    for (x, _) in p.support() {
        let key = project(x, all);
        if !seen.insert(key.clone()) {
            continue;
        }
        let lhs = &joint[&key] * pow(cond[&project(x, c)].clone(), blocks.len() - 1);
        let rhs = margins
            .iter()
            .fold(Rational::from_integer(1.into()), |acc, (set, m)| {
                acc * m.get(&project(x, *set)).cloned().unwrap_or_else(Rational::zero)
            });
        if lhs != rhs {
            return false;
        }
    }
    true
}
