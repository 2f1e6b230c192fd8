//! Statements derived from a given one: the chain of plain conditional
//! independencies it splits into, and its weakenings.

use crate::canonical::canonicalize;
use crate::cmi::Cmi;
use crate::error::{Error, Result};
use crate::index_set::IndexSet;

/// Splits `k` into statements with exactly two blocks.
///
/// On the canonical form `(C, <I, I, P_1, ..., P_t>)` this gives the
/// functional dependence `(C, <I, I>)` when `I` is non-empty, followed by
/// `(C ∪ I ∪ P_1 ∪ ... ∪ P_{i-1}, <P_i, P_{i+1} ∪ ... ∪ P_t>)` for
/// `i = 1, ..., t - 1`. A distribution satisfies `k` exactly when it
/// satisfies every returned statement. Degenerate input gives nothing.
///
/// ```
/// use cmikit::{decompose_to_cis, Cmi};
///
/// let k = Cmi::parse("I(1 ; 1 ; 2 ; 3 | 4)", 4).unwrap();
/// let parts: Vec<String> = decompose_to_cis(&k).iter().map(|c| c.to_string()).collect();
/// assert_eq!(parts, ["I(1 ; 1 | 4)", "I(2 ; 3 | 1,4)"]);
/// ```
pub fn decompose_to_cis(k: &Cmi) -> Vec<Cmi> {
    let can = canonicalize(k);
    if can.is_degenerate() {
        return Vec::new();
    }
    let n = k.n();
    let mut out = Vec::new();
    let repeated = can.repeated();
    if !repeated.is_empty() {
        out.push(Cmi::new(n, can.cond(), [repeated, repeated]).expect("in range"));
    }
    let parts = can.parts();
    let mut given = can.cond().union(repeated);
    for (i, part) in parts.iter().enumerate().take(parts.len().saturating_sub(1)) {
        let later = parts[i + 1..]
            .iter()
            .fold(IndexSet::EMPTY, |acc, p| acc.union(*p));
        out.push(Cmi::new(n, given, [*part, later]).expect("in range"));
        given = given.union(*part);
    }
    out
}

/// Weakens a pure statement `(C, <Q_1, ..., Q_k>)`.
///
/// Each block is shrunk to `sub_blocks[i] ⊆ Q_i`. `grouping` lists disjoint
/// sets `A_j` of 1-based block positions, and block `j` of the result is
/// `G_j`, the union of the shrunk blocks in `A_j`. Blocks not named in any
/// group are dropped. `extra_cond` must come from the original blocks and
/// avoid every `G_j`; it joins the condition. The result is implied by `k`.
///
/// ```
/// use cmikit::{implies, weaken, Cmi, IndexSet};
///
/// let k = Cmi::parse("I(1 ; 2 ; 3)", 3).unwrap();
/// let subs = [IndexSet::from([1]), IndexSet::from([2]), IndexSet::from([3])];
/// let w = weaken(&k, &subs, &[IndexSet::from([1]), IndexSet::from([2])], IndexSet::from([3])).unwrap();
/// assert_eq!(w.to_string(), "I(1 ; 2 | 3)");
/// assert!(implies(&k, &w).unwrap());
/// ```
pub fn weaken(
    k: &Cmi,
    sub_blocks: &[IndexSet],
    grouping: &[IndexSet],
    extra_cond: IndexSet,
) -> Result<Cmi> {
    if !k.is_pure() {
        return Err(Error::NotPureForm(format!("{k} cannot be weakened directly")));
    }
    let blocks = k.blocks().as_slice();
    if sub_blocks.len() != blocks.len() {
        return Err(Error::InvalidWeakening(format!(
            "{} sub-blocks for {} blocks",
            sub_blocks.len(),
            blocks.len()
        )));
    }
    for (i, (sub, block)) in sub_blocks.iter().zip(blocks).enumerate() {
        if !sub.is_subset(*block) {
            return Err(Error::InvalidWeakening(format!(
                "sub-block {sub} is not inside block {} ({block})",
                i + 1
            )));
        }
    }
    let positions = IndexSet::full(blocks.len());
    let mut claimed = IndexSet::EMPTY;
    let mut groups = Vec::with_capacity(grouping.len());
    for a in grouping {
        if !a.is_subset(positions) {
            return Err(Error::InvalidWeakening(format!(
                "group {a} names a block outside 1..={}",
                blocks.len()
            )));
        }
        if !a.is_disjoint(claimed) {
            return Err(Error::InvalidWeakening(format!(
                "group {a} overlaps an earlier group"
            )));
        }
        claimed = claimed.union(*a);
        groups.push(a.iter().fold(IndexSet::EMPTY, |acc, i| acc.union(sub_blocks[i - 1])));
    }
    let grouped = groups.iter().fold(IndexSet::EMPTY, |acc, g| acc.union(*g));
    if !extra_cond.is_subset(k.blocks().union().difference(grouped)) {
        return Err(Error::InvalidWeakening(format!(
            "extra condition {extra_cond} must lie in the blocks and avoid every group"
        )));
    }
    Cmi::new(k.n(), k.cond().union(extra_cond), groups)
}
