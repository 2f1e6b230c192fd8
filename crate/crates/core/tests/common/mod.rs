//! Samplers shared by the integration tests.
//!
//! Uniformly random distributions almost never satisfy a non-trivial
//! statement, so soundness checks that only use them pass vacuously.
//! [`satisfying_distribution`] builds distributions that satisfy a chosen
//! statement by construction, straight from the definition.

#![allow(dead_code)]

pub mod golden;

use cmikit::semantics::Assignment;
use cmikit::{canonicalize, Cmi, IndexSet, JointDistribution, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random statement over `n` variables with up to `max_blocks` blocks.
/// Blocks may be empty, repeated, or overlap the condition.
pub fn random_cmi(rng: &mut impl Rng, n: usize, max_blocks: usize) -> Cmi {
    let full = 1u64 << n;
    let cond = if rng.gen_bool(0.5) {
        IndexSet::EMPTY
    } else {
        IndexSet::from_bits(rng.gen_range(0..full))
    };
    let k = rng.gen_range(0..=max_blocks);
    let mut blocks: Vec<IndexSet> = Vec::with_capacity(k);
    for _ in 0..k {
        let b = if !blocks.is_empty() && rng.gen_bool(0.15) {
            blocks[rng.gen_range(0..blocks.len())]
        } else {
            IndexSet::from_bits(rng.gen_range(0..full))
        };
        blocks.push(b);
    }
    Cmi::new(n, cond, blocks).unwrap()
}

/// A random distribution on which `k` holds.
///
/// With `(C, <I, I, P_1, ..., P_t>)` the canonical form of `k`: `X_C` gets
/// a random pmf, `X_I` is a random function of `X_C`, each `X_{P_j}` is
/// drawn from its own random conditional pmf given `X_C`, and every other
/// variable is constant. That is the definition of `k` holding, read
/// forwards, so it does not rely on any code under test beyond
/// canonicalization.
pub fn satisfying_distribution(k: &Cmi, sizes: &[usize], seed: u64) -> JointDistribution {
    let n = k.n();
    assert_eq!(sizes.len(), n);
    let mut rng = rng(seed);
    let can = canonicalize(k);
    let (cond, repeated, parts) = if can.is_degenerate() {
        // anything goes; use one free part over everything
        (IndexSet::EMPTY, IndexSet::EMPTY, vec![IndexSet::full(n)])
    } else {
        (can.cond(), can.repeated(), can.parts().to_vec())
    };
    let conds = assignments(cond, sizes);
    let mut rows: Vec<(Assignment, Rational)> = Vec::new();
    let weights_c = weights(&mut rng, conds.len());
    for (y, wy) in conds.iter().zip(&weights_c) {
        if wy.is_zero() {
            continue;
        }
        let mut base = vec![0u32; n];
        place(&mut base, cond, y);
        let f: Vec<u32> = repeated.iter().map(|i| rng.gen_range(0..sizes[i - 1] as u32)).collect();
        place(&mut base, repeated, &f);
        // each part: its own conditional pmf given y
        let mut partial: Vec<(Assignment, Rational)> = vec![(base, wy.clone())];
        for part in &parts {
            let options = assignments(*part, sizes);
            let w = weights(&mut rng, options.len());
            let mut next = Vec::new();
            for (row, q) in &partial {
                for (x, wx) in options.iter().zip(&w) {
                    if wx.is_zero() {
                        continue;
                    }
                    let mut row = row.clone();
                    place(&mut row, *part, x);
                    next.push((row, q * wx));
                }
            }
            partial = next;
        }
        rows.extend(partial);
    }
    JointDistribution::new(sizes.to_vec(), rows).expect("a product of pmfs is a pmf")
}

/// A random pmf over `len` outcomes with small integer weights; zeros are
/// common, all-zero never happens.
fn weights(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    let mut raw: Vec<i64> = (0..len).map(|_| rng.gen_range(0..=3)).collect();
    if raw.iter().all(|&w| w == 0) {
        let i = rng.gen_range(0..len);
        raw[i] = 1;
    }
    let total: i64 = raw.iter().sum();
    raw.into_iter()
        .map(|w| Rational::new(w.into(), total.into()))
        .collect()
}

/// Every assignment to the variables in `set`, ascending index order.
fn assignments(set: IndexSet, sizes: &[usize]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for i in set.iter() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..sizes[i - 1] as u32).map(move |s| {
                    let mut v = prefix.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out
}

fn place(row: &mut [u32], set: IndexSet, values: &[u32]) {
    for (i, &v) in set.iter().zip(values) {
        row[i - 1] = v;
    }
}

/// Random alphabet sizes in `1..=max`.
pub fn random_sizes(rng: &mut impl Rng, n: usize, max: usize) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(1..=max)).collect()
}
