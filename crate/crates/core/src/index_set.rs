//! Fixed-width sets of 1-based variable indices.

use std::cmp::Ordering;
use std::fmt;

/// Largest ground set an [`IndexSet`] can address.
pub const MAX_VARIABLES: usize = 64;

/// A set of variable indices drawn from `{1, ..., 64}`.
///
/// Index `i` is stored in bit `i - 1`. Whether the members fit a particular
/// ground set `N_n` is checked by the statement that owns the set, not here.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    /// The ground set `{1, ..., n}`.
    pub fn full(n: usize) -> IndexSet {
        assert!(n <= MAX_VARIABLES, "ground set larger than {MAX_VARIABLES}");
        if n == MAX_VARIABLES {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(index: usize) -> IndexSet {
        assert!(
            (1..=MAX_VARIABLES).contains(&index),
            "index {index} outside 1..={MAX_VARIABLES}"
        );
        IndexSet(1u64 << (index - 1))
    }

    pub const fn from_bits(bits: u64) -> IndexSet {
        IndexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, index: usize) -> bool {
        (1..=MAX_VARIABLES).contains(&index) && self.0 & (1u64 << (index - 1)) != 0
    }

    pub fn insert(&mut self, index: usize) {
        *self = self.union(IndexSet::singleton(index));
    }

    pub const fn union(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: IndexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Largest member, or 0 for the empty set.
    pub const fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn min_index(self) -> Option<usize> {
        if self.is_empty() {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Applies `f` to every member. `f` must map into `1..=64`.
    pub fn map(self, mut f: impl FnMut(usize) -> usize) -> IndexSet {
        self.iter().map(&mut f).collect()
    }

    /// All subsets of `self`, in increasing order of their bit patterns.
    pub fn subsets(self) -> impl Iterator<Item = IndexSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == full {
                None
            } else {
                Some(current.wrapping_sub(full) & full)
            };
            Some(IndexSet(current))
        })
    }

    /// The block order used everywhere a list of sets is normalized:
    /// cardinality first, then the ascending member lists compared
    /// lexicographically.
    pub fn block_cmp(&self, other: &IndexSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut set = IndexSet::EMPTY;
        for index in iter {
            set.insert(index);
        }
        set
    }
}

impl<const N: usize> From<[usize; N]> for IndexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl From<&[usize]> for IndexSet {
    fn from(members: &[usize]) -> Self {
        members.iter().copied().collect()
    }
}

impl IntoIterator for IndexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let index = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(index)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Comma-separated members, e.g. `1,2,5`; the empty set prints as `{}`.
impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        for (i, index) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{index}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_algebra() {
        let a = IndexSet::from([1, 2, 5]);
        let b = IndexSet::from([2, 3]);
        assert_eq!(a.union(b), IndexSet::from([1, 2, 3, 5]));
        assert_eq!(a.intersection(b), IndexSet::from([2]));
        assert_eq!(a.difference(b), IndexSet::from([1, 5]));
        assert!(IndexSet::from([2]).is_subset(a));
        assert!(!b.is_subset(a));
        assert_eq!(a.len(), 3);
        assert_eq!(a.max_index(), 5);
        assert_eq!(a.min_index(), Some(1));
        assert_eq!(IndexSet::EMPTY.max_index(), 0);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![1, 2, 5]);
    }

    #[test]
    fn full_sets_at_the_edges() {
        assert_eq!(IndexSet::full(0), IndexSet::EMPTY);
        assert_eq!(IndexSet::full(3), IndexSet::from([1, 2, 3]));
        assert_eq!(IndexSet::full(64).len(), 64);
        assert!(IndexSet::full(64).contains(64));
        assert!(!IndexSet::full(64).contains(65));
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = IndexSet::from([2, 4, 7]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|x| x.is_subset(s)));
        assert_eq!(all[0], IndexSet::EMPTY);
        assert_eq!(*all.last().unwrap(), s);
        assert_eq!(IndexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn block_order_is_cardinality_then_lexicographic() {
        let mut blocks = [
            IndexSet::from([2, 3]),
            IndexSet::from([5]),
            IndexSet::from([1, 4]),
            IndexSet::EMPTY,
            IndexSet::from([1, 2, 3]),
            IndexSet::from([1]),
        ];
        blocks.sort_by(IndexSet::block_cmp);
        let shown: Vec<String> = blocks.iter().map(|b| b.to_string()).collect();
        assert_eq!(shown, ["{}", "1", "5", "1,4", "2,3", "1,2,3"]);
    }
}
