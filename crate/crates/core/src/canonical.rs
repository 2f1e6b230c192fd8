//! Pure form, repeated indices and the canonical form of a statement.
//!
//! Two statements are equivalent (hold on exactly the same distributions)
//! if and only if their canonical forms are equal, so [`CanonicalCmi`] is
//! the normal form the rest of the crate works with.

use std::cmp::Ordering;
use std::fmt;

use crate::cmi::Cmi;
use crate::error::{Error, Result};
use crate::index_set::IndexSet;

/// Canonical form `(C, <I, I, P_1, ..., P_t>)` of a statement.
///
/// Outside the degenerate value, `C`, `I` and the parts are pairwise
/// disjoint, every part is non-empty, `t != 1`, and `I` and the parts are
/// not both empty. The degenerate value stores empty components; its
/// condition carries no meaning.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalCmi {
    n: usize,
    cond: IndexSet,
    repeated: IndexSet,
    parts: Vec<IndexSet>,
}

impl CanonicalCmi {
    pub fn degenerate(n: usize) -> CanonicalCmi {
        CanonicalCmi {
            n,
            cond: IndexSet::EMPTY,
            repeated: IndexSet::EMPTY,
            parts: Vec::new(),
        }
    }

    /// Builds the canonical value from a condition, a repeated set and
    /// candidate parts, all pairwise disjoint. Empty candidates are
    /// dropped; a single surviving part is absorbed.
    pub(crate) fn from_components(
        n: usize,
        cond: IndexSet,
        repeated: IndexSet,
        candidates: impl IntoIterator<Item = IndexSet>,
    ) -> CanonicalCmi {
        let mut parts: Vec<IndexSet> = candidates.into_iter().filter(|p| !p.is_empty()).collect();
        if parts.len() <= 1 {
            if repeated.is_empty() {
                return CanonicalCmi::degenerate(n);
            }
            parts.clear();
        }
        parts.sort_by(IndexSet::block_cmp);
        debug_assert!(parts.iter().all(|p| p.is_disjoint(cond) && p.is_disjoint(repeated)));
        debug_assert!(cond.is_disjoint(repeated));
        CanonicalCmi {
            n,
            cond,
            repeated,
            parts,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_degenerate(&self) -> bool {
        self.repeated.is_empty() && self.parts.is_empty()
    }

    pub fn cond(&self) -> IndexSet {
        self.cond
    }

    /// The repeated-index set `I_K`.
    pub fn repeated(&self) -> IndexSet {
        self.repeated
    }

    /// The disjoint parts `P_1, ..., P_t`, sorted by [`IndexSet::block_cmp`].
    pub fn parts(&self) -> &[IndexSet] {
        &self.parts
    }

    /// `P = P_1 ∪ ... ∪ P_t`.
    pub fn part_union(&self) -> IndexSet {
        self.parts.iter().fold(IndexSet::EMPTY, |acc, p| acc.union(*p))
    }

    /// The canonical form spelled as an ordinary statement:
    /// `(C, <I, I, P_1, ..., P_t>)`, with `I` omitted when empty.
    pub fn as_cmi(&self) -> Cmi {
        let mut blocks = Vec::with_capacity(self.parts.len() + 2);
        if !self.repeated.is_empty() {
            blocks.push(self.repeated);
            blocks.push(self.repeated);
        }
        blocks.extend_from_slice(&self.parts);
        Cmi::new(self.n, self.cond, blocks).expect("canonical components lie in the ground set")
    }
}

/// Degenerate value first, then by condition, repeated set and parts.
impl Ord for CanonicalCmi {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .is_degenerate()
            .cmp(&self.is_degenerate())
            .then(self.n.cmp(&other.n))
            .then(self.cond.bits().cmp(&other.cond.bits()))
            .then(self.repeated.bits().cmp(&other.repeated.bits()))
            .then(self.parts.len().cmp(&other.parts.len()))
            .then_with(|| {
                self.parts
                    .iter()
                    .zip(&other.parts)
                    .map(|(a, b)| a.block_cmp(b))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
    }
}

impl PartialOrd for CanonicalCmi {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CanonicalCmi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_degenerate() {
            write!(f, "degenerate [n={}]", self.n)
        } else {
            write!(
                f,
                "C={:?} I={:?} parts={:?} [n={}]",
                self.cond, self.repeated, self.parts, self.n
            )
        }
    }
}

impl fmt::Display for CanonicalCmi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.as_cmi(), f)
    }
}

/// `pur(K)`: removes the condition from every block and drops blocks that
/// become empty.
pub fn pure_form(k: &Cmi) -> Cmi {
    let cond = k.cond();
    let blocks = k
        .blocks()
        .iter()
        .map(|b| b.difference(cond))
        .filter(|b| !b.is_empty());
    Cmi::new(k.n(), cond, blocks).expect("subsets of valid blocks stay in range")
}

/// `I_K`: the indices that occur in at least two blocks of a pure statement.
pub fn repeated_indices(k: &Cmi) -> Result<IndexSet> {
    if !k.is_pure() {
        return Err(Error::NotPureForm(format!(
            "{k} has an empty block or a block meeting the condition"
        )));
    }
    Ok(repeated_in(k.blocks().as_slice()))
}

pub(crate) fn repeated_in(blocks: &[IndexSet]) -> IndexSet {
    let mut once = 0u64;
    let mut twice = 0u64;
    for b in blocks {
        twice |= once & b.bits();
        once |= b.bits();
    }
    IndexSet::from_bits(twice)
}

/// `can(pur(K))`.
pub fn canonicalize(k: &Cmi) -> CanonicalCmi {
    let pure = pure_form(k);
    let blocks = pure.blocks().as_slice();
    if blocks.len() <= 1 {
        return CanonicalCmi::degenerate(k.n());
    }
    let repeated = repeated_in(blocks);
    CanonicalCmi::from_components(
        k.n(),
        pure.cond(),
        repeated,
        blocks.iter().map(|b| b.difference(repeated)),
    )
}

/// True when `k` holds for every joint distribution.
pub fn is_degenerate(k: &Cmi) -> bool {
    canonicalize(k).is_degenerate()
}
