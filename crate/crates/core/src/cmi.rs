//! Conditional mutual independence statements.
//!
//! A statement `K = (C, <Q_1, ..., Q_k>)` over the variables `X_1, ..., X_n`
//! asserts that the groups `X_{Q_1}, ..., X_{Q_k}` are mutually independent
//! given `X_C`. Blocks form a multiset: order is irrelevant but repeats are
//! significant, since `<{2}, {2}>` says that `X_2` is a function of `X_C`
//! while `<{2}>` says nothing at all.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::index_set::{IndexSet, MAX_VARIABLES};

/// An order-insensitive multiset of index sets.
///
/// Blocks keep the order they were written in; equality and hashing go
/// through [`BlockList::normalized`].
#[derive(Clone, Default)]
pub struct BlockList(Vec<IndexSet>);

impl BlockList {
    pub fn new(blocks: Vec<IndexSet>) -> BlockList {
        BlockList(blocks)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IndexSet> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[IndexSet] {
        &self.0
    }

    /// Blocks sorted by [`IndexSet::block_cmp`].
    pub fn normalized(&self) -> Vec<IndexSet> {
        let mut blocks = self.0.clone();
        blocks.sort_by(IndexSet::block_cmp);
        blocks
    }

    /// Union of all blocks.
    pub fn union(&self) -> IndexSet {
        self.0.iter().fold(IndexSet::EMPTY, |acc, b| acc.union(*b))
    }
}

impl PartialEq for BlockList {
    fn eq(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.normalized() == other.normalized()
    }
}

impl Eq for BlockList {}

impl Hash for BlockList {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.normalized().hash(state);
    }
}

impl fmt::Debug for BlockList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl FromIterator<IndexSet> for BlockList {
    fn from_iter<T: IntoIterator<Item = IndexSet>>(iter: T) -> Self {
        BlockList(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a BlockList {
    type Item = &'a IndexSet;
    type IntoIter = std::slice::Iter<'a, IndexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A statement `(C, <Q_i>)` over the ground set `{1, ..., n}`.
///
/// Blocks may be empty, may repeat and may overlap `C`; none of that is
/// normalized away here (see [`pure_form`](crate::pure_form) and
/// [`canonicalize`](crate::canonicalize)).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cmi {
    n: usize,
    cond: IndexSet,
    blocks: BlockList,
}

impl Cmi {
    pub fn new(
        n: usize,
        cond: impl Into<IndexSet>,
        blocks: impl IntoIterator<Item = IndexSet>,
    ) -> Result<Cmi> {
        check_ground_set(n)?;
        let cond = cond.into();
        let blocks: BlockList = blocks.into_iter().collect();
        let ground = IndexSet::full(n);
        for set in std::iter::once(&cond).chain(blocks.iter()) {
            if !set.is_subset(ground) {
                return Err(Error::IndexOutOfRange {
                    index: set.max_index(),
                    n,
                });
            }
        }
        Ok(Cmi { n, cond, blocks })
    }

    /// Parses the `I(Q_1 ; ... ; Q_k | C)` notation; see
    /// [`textio::parse_cmi`](crate::textio::parse_cmi).
    pub fn parse(text: &str, n: usize) -> Result<Cmi> {
        crate::textio::parse_cmi(text, n)
    }

    /// The statement with no blocks, which holds for every distribution.
    pub fn trivial(n: usize) -> Result<Cmi> {
        Cmi::new(n, IndexSet::EMPTY, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cond(&self) -> IndexSet {
        self.cond
    }

    pub fn blocks(&self) -> &BlockList {
        &self.blocks
    }

    /// Number of blocks, counting repeats and empty blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Every index the statement mentions.
    pub fn support(&self) -> IndexSet {
        self.cond.union(self.blocks.union())
    }

    /// True when every block is non-empty and disjoint from the condition.
    pub fn is_pure(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| !b.is_empty() && b.is_disjoint(self.cond))
    }

    /// Applies an index relabeling to every set in the statement.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Result<Cmi> {
        Cmi::new(
            self.n,
            self.cond.map(&f),
            self.blocks.iter().map(|b| b.map(&f)),
        )
    }
}

impl fmt::Debug for Cmi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [n={}]", crate::textio::render_cmi(self), self.n)
    }
}

impl fmt::Display for Cmi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::textio::render_cmi(self))
    }
}

/// A set of statements over one ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmiSet {
    n: usize,
    items: Vec<Cmi>,
}

impl CmiSet {
    pub fn new(n: usize, items: Vec<Cmi>) -> Result<CmiSet> {
        check_ground_set(n)?;
        if let Some(bad) = items.iter().find(|k| k.n() != n) {
            return Err(Error::GroundSetMismatch {
                left: n,
                right: bad.n(),
            });
        }
        Ok(CmiSet { n, items })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn items(&self) -> &[Cmi] {
        &self.items
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

pub(crate) fn check_ground_set(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARIABLES {
        Err(Error::GroundSetSize(n))
    } else {
        Ok(())
    }
}

pub(crate) fn same_ground_set(a: &Cmi, b: &Cmi) -> Result<()> {
    if a.n() == b.n() {
        Ok(())
    } else {
        Err(Error::GroundSetMismatch {
            left: a.n(),
            right: b.n(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(members: &[usize]) -> IndexSet {
        IndexSet::from(members)
    }

    #[test]
    fn block_lists_compare_as_multisets() {
        let a = BlockList::new(vec![set(&[1]), set(&[2, 3]), set(&[1])]);
        let b = BlockList::new(vec![set(&[2, 3]), set(&[1]), set(&[1])]);
        let c = BlockList::new(vec![set(&[2, 3]), set(&[1])]);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.union(), set(&[1, 2, 3]));
    }

    #[test]
    fn rejects_out_of_range_indices() {
        assert_eq!(
            Cmi::new(3, set(&[4]), []),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        );
        assert_eq!(
            Cmi::new(3, IndexSet::EMPTY, [set(&[1]), set(&[2, 7])]),
            Err(Error::IndexOutOfRange { index: 7, n: 3 })
        );
        assert_eq!(Cmi::trivial(0), Err(Error::GroundSetSize(0)));
        assert_eq!(Cmi::trivial(65), Err(Error::GroundSetSize(65)));
    }

    #[test]
    fn statement_equality_ignores_block_order() {
        let a = Cmi::new(3, set(&[3]), [set(&[1]), set(&[2])]).unwrap();
        let b = Cmi::new(3, set(&[3]), [set(&[2]), set(&[1])]).unwrap();
        assert_eq!(a, b);
        assert!(a.is_pure());
        let impure = Cmi::new(3, set(&[3]), [set(&[2, 3]), set(&[1])]).unwrap();
        assert!(!impure.is_pure());
        assert_ne!(a, impure);
    }

    #[test]
    fn mixed_ground_sets_are_rejected_in_sets() {
        let a = Cmi::trivial(3).unwrap();
        let b = Cmi::trivial(4).unwrap();
        assert!(CmiSet::new(3, vec![a.clone()]).is_ok());
        assert_eq!(
            CmiSet::new(3, vec![a, b]),
            Err(Error::GroundSetMismatch { left: 3, right: 4 })
        );
    }
}
