use num_traits::ToPrimitive;

use crate::cmi::Cmi;
use crate::index_set::IndexSet;
use crate::semantics::JointDistribution;

/// `H(X_a)` in bits. `H(X_∅) = 0`.
pub fn entropy(p: &JointDistribution, a: IndexSet) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    let h: f64 = p
        .marginal(a)
        .values()
        .map(|q| {
            let q = q.to_f64().expect("probabilities are finite");
            -q * q.log2()
        })
        .sum();
    // a point mass gives -0.0
    h.max(0.0)
}

/// `H(X_a | X_c) = H(X_a, X_c) - H(X_c)`.
pub fn cond_entropy(p: &JointDistribution, a: IndexSet, c: IndexSet) -> f64 {
    entropy(p, a.union(c)) - entropy(p, c)
}

/// `I(X_a ; X_b | X_c) = H(X_a, X_c) + H(X_b, X_c) - H(X_a, X_b, X_c) - H(X_c)`.
pub fn cond_mutual_info(p: &JointDistribution, a: IndexSet, b: IndexSet, c: IndexSet) -> f64 {
    entropy(p, a.union(c)) + entropy(p, b.union(c))
        - entropy(p, a.union(b).union(c))
        - entropy(p, c)
}

/// `J(X_{Q_i}, 1 <= i <= k | X_C) = Σ H(X_{Q_i} | X_C) - H(X_{Q_1}, ..., X_{Q_k} | X_C)`.
///
/// Exactly zero for statements with fewer than two blocks.
pub fn j_value(p: &JointDistribution, k: &Cmi) -> f64 {
    assert_eq!(k.n(), p.n(), "statement and distribution disagree on n");
    if k.block_count() <= 1 {
        return 0.0;
    }
    let c = k.cond();
    let h_c = entropy(p, c);
    let sum: f64 = k
        .blocks()
        .iter()
        .map(|q| entropy(p, q.union(c)) - h_c)
        .sum();
    sum - (entropy(p, k.blocks().union().union(c)) - h_c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::Rational;

    const TOL: f64 = 1e-12;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn set(members: &[usize]) -> IndexSet {
        IndexSet::from(members)
    }

    fn xor_triple() -> JointDistribution {
        let rows = (0..4u32).map(|x| {
            let (u, v) = (x >> 1, x & 1);
            (vec![u, v, u ^ v], r(1, 4))
        });
        JointDistribution::new(vec![2, 2, 2], rows).unwrap()
    }

    /// `X_1 = U` and `X_2 = f(U)` for a uniform bit `U`.
    fn pair(copy: bool) -> JointDistribution {
        let rows: Vec<_> = if copy {
            vec![(vec![0, 0], r(1, 2)), (vec![1, 1], r(1, 2))]
        } else {
            (0..4u32).map(|x| (vec![x >> 1, x & 1], r(1, 4))).collect()
        };
        JointDistribution::new(vec![2, 2], rows).unwrap()
    }

    #[test]
    fn entropy_examples() {
        let bit = JointDistribution::new(vec![2], [(vec![0], r(1, 2)), (vec![1], r(1, 2))]).unwrap();
        assert!((entropy(&bit, set(&[1])) - 1.0).abs() < TOL);
        assert!((entropy(&xor_triple(), set(&[1, 2, 3])) - 2.0).abs() < TOL);
        let point = JointDistribution::new(vec![3, 2], [(vec![2, 1], r(1, 1))]).unwrap();
        assert_eq!(entropy(&point, set(&[1, 2])), 0.0);
        assert_eq!(entropy(&point, IndexSet::EMPTY), 0.0);
    }

    #[test]
    fn conditional_entropy_examples() {
        assert!(cond_entropy(&pair(true), set(&[2]), set(&[1])).abs() < TOL);
        assert!((cond_entropy(&pair(false), set(&[2]), set(&[1])) - 1.0).abs() < TOL);
        assert!(cond_entropy(&xor_triple(), set(&[3]), set(&[1, 2])).abs() < TOL);
    }

    #[test]
    fn mutual_information_examples() {
        let xor = xor_triple();
        assert!(cond_mutual_info(&xor, set(&[1]), set(&[2]), IndexSet::EMPTY).abs() < TOL);
        assert!((cond_mutual_info(&xor, set(&[1]), set(&[2]), set(&[3])) - 1.0).abs() < TOL);
        let bit = JointDistribution::new(vec![2], [(vec![0], r(1, 2)), (vec![1], r(1, 2))]).unwrap();
        assert!((cond_mutual_info(&bit, set(&[1]), set(&[1]), IndexSet::EMPTY) - 1.0).abs() < TOL);
    }

    #[test]
    fn j_examples() {
        let two = Cmi::parse("I(1 ; 2)", 2).unwrap();
        assert!((j_value(&pair(true), &two) - 1.0).abs() < TOL);
        assert!(j_value(&pair(false), &two).abs() < TOL);
        assert_eq!(j_value(&pair(true), &Cmi::parse("I(1,2)", 2).unwrap()), 0.0);
        assert_eq!(j_value(&pair(true), &Cmi::parse("I(|1)", 2).unwrap()), 0.0);
        // equivalent statements can have different J values
        let bit = JointDistribution::new(vec![2], [(vec![0], r(1, 2)), (vec![1], r(1, 2))]).unwrap();
        assert!((j_value(&bit, &Cmi::parse("I(1 ; 1 ; 1)", 1).unwrap()) - 2.0).abs() < TOL);
        assert!((j_value(&bit, &Cmi::parse("I(1 ; 1)", 1).unwrap()) - 1.0).abs() < TOL);
        // a repeated block measures H(X_2 | X_C)
        let fd = Cmi::parse("I(2 ; 2)", 2).unwrap();
        assert!((j_value(&pair(false), &fd) - 1.0).abs() < TOL);
    }
}
