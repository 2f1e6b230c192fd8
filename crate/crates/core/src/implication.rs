//! Equivalence and single-premise implication.
//!
//! `K` implies `K'` exactly when `K'` is a sub-CMI of `K`. The test works on
//! canonical forms: first strip from `K'` everything `K` already forces to
//! be a function of its condition (the residual), then compare what is left
//! against the parts of `K`.

use crate::canonical::{canonicalize, CanonicalCmi};
use crate::cmi::{same_ground_set, Cmi, CmiSet};
use crate::error::{Error, Result};
use crate::index_set::IndexSet;

/// `R_K^{K'}`, "`K'` conditioning on `K`", in canonical form.
///
/// With `I_K` the repeated set of `K`, this is `K'` with `I_K` removed from
/// its condition, its repeated set and each of its parts.
pub fn residual_canonical(k: &CanonicalCmi, k2: &CanonicalCmi) -> CanonicalCmi {
    let forced = k.repeated();
    CanonicalCmi::from_components(
        k2.n(),
        k2.cond().difference(forced),
        k2.repeated().difference(forced),
        k2.parts().iter().map(|p| p.difference(forced)),
    )
}

/// `R_K^{K'}` as a statement. A degenerate `k` leaves `can(pur(k2))`.
pub fn residual(k: &Cmi, k2: &Cmi) -> Result<Cmi> {
    same_ground_set(k, k2)?;
    Ok(residual_canonical(&canonicalize(k), &canonicalize(k2)).as_cmi())
}

/// Which clause of the sub-CMI definition decided the outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubCmiClause {
    /// The conclusion is degenerate.
    DegenerateConclusion,
    /// The residual is degenerate and `C ⊆ C'`.
    DegenerateResidual,
    /// The residual is a pure independence among pieces of `K`'s parts.
    PartRefinement,
}

/// Returns the clause under which `k2` is a sub-CMI of `k`, if any.
pub fn sub_cmi_clause(k: &CanonicalCmi, k2: &CanonicalCmi) -> Option<SubCmiClause> {
    if k2.is_degenerate() {
        return Some(SubCmiClause::DegenerateConclusion);
    }
    let res = residual_canonical(k, k2);
    if res.is_degenerate() {
        return k
            .cond()
            .is_subset(k2.cond())
            .then_some(SubCmiClause::DegenerateResidual);
    }
    let parts = k.part_union();
    let rest = k.cond().union(parts);
    let res_parts = res.part_union();
    let ok = res.repeated().is_empty()
        && res_parts.is_subset(parts)
        && k.cond().is_subset(res.cond())
        && res.cond().is_subset(rest.difference(res_parts))
        && separated(k.parts(), res.parts());
    ok.then_some(SubCmiClause::PartRefinement)
}

/// Indices taken from two different `fine` blocks always lie in two
/// different `coarse` blocks. Equivalently, the sets of coarse blocks that
/// each fine block touches are pairwise disjoint.
pub(crate) fn separated(coarse: &[IndexSet], fine: &[IndexSet]) -> bool {
    let mut claimed = 0u64;
    for block in fine {
        let touched = coarse
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_disjoint(*block))
            .fold(0u64, |acc, (i, _)| acc | (1 << i));
        if touched & claimed != 0 {
            return false;
        }
        claimed |= touched;
    }
    true
}

/// True iff `k2` is a sub-CMI of `k`.
pub fn is_sub_cmi(k: &Cmi, k2: &Cmi) -> Result<bool> {
    same_ground_set(k, k2)?;
    Ok(sub_cmi_clause(&canonicalize(k), &canonicalize(k2)).is_some())
}

/// True iff every distribution satisfying `k` also satisfies `k2`.
pub fn implies(k: &Cmi, k2: &Cmi) -> Result<bool> {
    is_sub_cmi(k, k2)
}

/// True iff `k` and `k2` hold on exactly the same distributions.
pub fn equivalent(k: &Cmi, k2: &Cmi) -> Result<bool> {
    same_ground_set(k, k2)?;
    Ok(canonicalize(k) == canonicalize(k2))
}

/// Sound test for implication between sets of statements: true when every
/// conclusion is implied by a single premise.
///
/// A `false` answer does not mean the implication fails; premises can
/// combine in ways a one-at-a-time test cannot see.
pub fn set_implies(premises: &CmiSet, conclusions: &CmiSet) -> Result<bool> {
    if premises.is_empty() {
        return Err(Error::EmptyPremises);
    }
    if premises.n() != conclusions.n() {
        return Err(Error::GroundSetMismatch {
            left: premises.n(),
            right: conclusions.n(),
        });
    }
    let canon: Vec<CanonicalCmi> = premises.items().iter().map(canonicalize).collect();
    Ok(conclusions.items().iter().all(|c| {
        let c = canonicalize(c);
        canon.iter().any(|p| sub_cmi_clause(p, &c).is_some())
    }))
}
