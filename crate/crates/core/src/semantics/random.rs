use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::semantics::{JointDistribution, Rational};

pub const MAX_RANDOM_VARIABLES: usize = 8;
pub const MAX_RANDOM_ALPHABET: usize = 4;

/// A random pmf whose probabilities are multiples of `1 / grain`.
///
/// The support size is drawn uniformly from `1..=min(outcomes, grain)`, so
/// distributions with small support, including point masses, come up often.
/// The same arguments always give the same distribution.
///
/// ```
/// use cmikit::random_distribution;
///
/// let p = random_distribution(1, &[2], 7, 4).unwrap();
/// assert_eq!(p, random_distribution(1, &[2], 7, 4).unwrap());
/// assert_eq!(random_distribution(3, &[2, 2, 2], 7, 1).unwrap().support_len(), 1);
/// ```
pub fn random_distribution(
    n: usize,
    alphabet_sizes: &[usize],
    seed: u64,
    mass_grain: u64,
) -> Result<JointDistribution> {
    if n == 0 || n > MAX_RANDOM_VARIABLES || alphabet_sizes.len() != n {
        return Err(Error::BoundsExceeded(format!(
            "random distributions take 1..={MAX_RANDOM_VARIABLES} variables with one \
             alphabet size each (got n={n} and {} sizes)",
            alphabet_sizes.len()
        )));
    }
    if alphabet_sizes
        .iter()
        .any(|&s| s == 0 || s > MAX_RANDOM_ALPHABET)
    {
        return Err(Error::BoundsExceeded(format!(
            "alphabet sizes must be 1..={MAX_RANDOM_ALPHABET}, got {alphabet_sizes:?}"
        )));
    }
    if mass_grain == 0 {
        return Err(Error::BoundsExceeded("mass grain must be positive".into()));
    }
    let outcomes: usize = alphabet_sizes.iter().product();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let support = rng.gen_range(1..=outcomes.min(mass_grain as usize));
    let mut chosen = sample(&mut rng, outcomes, support).into_vec();
    chosen.sort_unstable();

    // one unit each, then the rest by stars and bars
    let spare = mass_grain - support as u64;
    let mut cuts: Vec<u64> = (0..support - 1)
        .map(|_| rng.gen_range(0..=spare))
        .collect();
    cuts.sort_unstable();
    cuts.push(spare);
    let mut prev = 0;
    let rows = chosen.into_iter().zip(cuts).map(|(outcome, cut)| {
        let units = 1 + cut - prev;
        prev = cut;
        (
            decode(outcome, alphabet_sizes),
            Rational::new(units.into(), mass_grain.into()),
        )
    });
    JointDistribution::new(alphabet_sizes.to_vec(), rows)
}

/// Mixed-radix digits of `outcome`, first variable most significant.
fn decode(mut outcome: usize, sizes: &[usize]) -> Vec<u32> {
    let mut digits = vec![0; sizes.len()];
    for (d, &s) in digits.iter_mut().zip(sizes).rev() {
        *d = (outcome % s) as u32;
        outcome /= s;
    }
    digits
}
