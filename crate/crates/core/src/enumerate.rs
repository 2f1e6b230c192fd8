//! Exhaustive enumeration of small statement families, for brute-force
//! checking.

use crate::canonical::CanonicalCmi;
use crate::cmi::Cmi;
use crate::error::{Error, Result};
use crate::index_set::IndexSet;

pub const MAX_ENUMERATION_VARIABLES: usize = 5;
pub const MAX_ENUMERATION_BLOCKS: usize = 4;

/// Every distinct canonical form over `{1, ..., n}` with at most
/// `max_blocks` parts, sorted, with the degenerate value first.
///
/// ```
/// use cmikit::enumerate_canonical;
///
/// let all = enumerate_canonical(1, 2).unwrap();
/// let shown: Vec<String> = all.iter().map(|c| c.to_string()).collect();
/// assert_eq!(shown, ["I()", "I(1 ; 1)"]);
/// ```
pub fn enumerate_canonical(n: usize, max_blocks: usize) -> Result<Vec<CanonicalCmi>> {
    check_bounds(n, max_blocks)?;
    let ground = IndexSet::full(n);
    let mut out = vec![CanonicalCmi::degenerate(n)];
    for cond in ground.subsets() {
        for repeated in ground.difference(cond).subsets() {
            let rest = ground.difference(cond.union(repeated));
            if !repeated.is_empty() {
                out.push(CanonicalCmi::from_components(n, cond, repeated, []));
            }
            for used in rest.subsets() {
                for parts in set_partitions(used) {
                    if (2..=max_blocks).contains(&parts.len()) {
                        out.push(CanonicalCmi::from_components(n, cond, repeated, parts));
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Every statement over `{1, ..., n}` with at most `max_blocks` non-empty
/// blocks, counted as multisets, under every condition.
pub fn enumerate_statements(n: usize, max_blocks: usize) -> Result<Vec<Cmi>> {
    check_bounds(n, max_blocks)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let ground = IndexSet::full(n);
    let nonempty: Vec<IndexSet> = ground.subsets().skip(1).collect();
    let mut multisets: Vec<Vec<IndexSet>> = vec![Vec::new()];
    let mut layer: Vec<(usize, Vec<IndexSet>)> = vec![(0, Vec::new())];
    for _ in 0..max_blocks {
        let mut next = Vec::new();
        for (from, blocks) in &layer {
            for (i, b) in nonempty.iter().enumerate().skip(*from) {
                let mut grown = blocks.clone();
                grown.push(*b);
                next.push((i, grown));
            }
        }
        multisets.extend(next.iter().map(|(_, b)| b.clone()));
        layer = next;
    }
    let mut out = Vec::with_capacity(multisets.len() << n);
    for cond in ground.subsets() {
        for blocks in &multisets {
            out.push(Cmi::new(n, cond, blocks.iter().copied()).expect("in range"));
        }
    }
    Ok(out)
}

fn check_bounds(n: usize, max_blocks: usize) -> Result<()> {
    if n > MAX_ENUMERATION_VARIABLES || max_blocks > MAX_ENUMERATION_BLOCKS {
        return Err(Error::BoundsExceeded(format!(
            "enumeration supports n <= {MAX_ENUMERATION_VARIABLES} and at most \
             {MAX_ENUMERATION_BLOCKS} blocks (got n={n}, max_blocks={max_blocks})"
        )));
    }
    Ok(())
}

/// All partitions of `set` into non-empty blocks.
fn set_partitions(set: IndexSet) -> Vec<Vec<IndexSet>> {
    let Some(first) = set.min_index() else {
        return vec![Vec::new()];
    };
    let rest = set.difference(IndexSet::singleton(first));
    let mut out = Vec::new();
    for mut partition in set_partitions(rest) {
        for i in 0..partition.len() {
            let mut extended = partition.clone();
            extended[i].insert(first);
            out.push(extended);
        }
        partition.push(IndexSet::singleton(first));
        out.push(partition);
    }
    out
}
