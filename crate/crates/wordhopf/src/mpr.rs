//! The Hopf algebra of permutations: shifted-shuffle product, standardized
//! cut coproduct, the inverse-permutation inner product, and the second
//! multiplication by composition.

use crate::hopf::{HopfAlgebra, Pairing};
use crate::lincomb::{Coeff, LinComb, Tensor};
use crate::words::{permutations_up_to, shuffle, PermWord, Word};
use num_traits::{One, Zero};
use std::fmt;

/// Enumeration bound: all permutation words of length at most the given value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LenBound(pub usize);

impl fmt::Display for LenBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "len<={}", self.0)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct MprAlgebra;

impl HopfAlgebra for MprAlgebra {
    type Basis = PermWord;
    type Bounds = LenBound;

    fn name(&self) -> &'static str {
        "mpr"
    }

    fn unit(&self) -> PermWord {
        PermWord::identity(0)
    }

    fn counit(&self, x: &PermWord) -> Coeff {
        if x.is_empty() {
            Coeff::one()
        } else {
            Coeff::zero()
        }
    }

    fn degree(&self, x: &PermWord) -> usize {
        x.len()
    }

    /// Shuffle of the first word with the second shifted past it; every term
    /// is again a permutation word.
    fn product(&self, a: &PermWord, b: &PermWord) -> LinComb<PermWord> {
        let shifted = b.word().shift(a.len() as u32);
        shuffle(a.word(), &shifted).lift(|w| {
            LinComb::basis(
                PermWord::new(w.clone())
                    .expect("shuffling a permutation with a shifted permutation yields permutations"),
            )
        })
    }

    /// Sum of standardized prefix/suffix pairs over all cuts.
    fn coproduct(&self, x: &PermWord) -> LinComb<Tensor<PermWord, PermWord>> {
        x.word()
            .cuts()
            .into_iter()
            .map(|(a, b)| {
                let left = a.standardize().expect("cut of a permutation has no repeats");
                let right = b.standardize().expect("cut of a permutation has no repeats");
                (Tensor::new(left, right), Coeff::one())
            })
            .collect()
    }

    fn enumerate(&self, bounds: &LenBound) -> Vec<PermWord> {
        permutations_up_to(bounds.0)
    }
}

/// Composition of equal-length permutations, zero otherwise. `compose(a, b)`
/// is the word of `i -> a[b[i]]`.
pub fn compose(a: &PermWord, b: &PermWord) -> LinComb<PermWord> {
    match a.compose(b) {
        Some(c) => LinComb::basis(c),
        None => LinComb::zero(),
    }
}

/// The nondegenerate, non positive definite inner product: 1 on inverse
/// pairs, 0 otherwise.
#[derive(Clone, Copy, Debug, Default)]
pub struct MprPairing;

impl Pairing<PermWord> for MprPairing {
    fn pair(&self, a: &PermWord, b: &PermWord) -> Coeff {
        if a.inverse() == *b {
            Coeff::one()
        } else {
            Coeff::zero()
        }
    }
}

/// Convenience constructor used by tests and the CLI.
pub fn perm(letters: Vec<u32>) -> PermWord {
    PermWord::new(Word::new(letters)).expect("not a permutation word")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{antipode, check_all, check_selfdual};

    #[test]
    fn product_reproduces_the_shifted_shuffle() {
        let h = MprAlgebra;
        let r = h.product(&perm(vec![1]), &perm(vec![3, 2, 1]));
        let expected: LinComb<PermWord> = [
            perm(vec![1, 4, 3, 2]),
            perm(vec![4, 1, 3, 2]),
            perm(vec![4, 3, 1, 2]),
            perm(vec![4, 3, 2, 1]),
        ]
        .into_iter()
        .map(|p| (p, Coeff::one()))
        .collect();
        assert_eq!(r, expected);

        let b = perm(vec![2, 1]);
        assert_eq!(h.product(&h.unit(), &b), LinComb::basis(b));

        let r2 = h.product(&perm(vec![1]), &perm(vec![1]));
        assert_eq!(r2.coeff(&perm(vec![1, 2])), Coeff::one());
        assert_eq!(r2.coeff(&perm(vec![2, 1])), Coeff::one());
    }

    #[test]
    fn product_terms_are_permutations_up_to_len_3() {
        let h = MprAlgebra;
        let elems = h.enumerate(&LenBound(3));
        for a in &elems {
            for b in &elems {
                for (w, _) in h.product(a, b).iter() {
                    assert_eq!(w.len(), a.len() + b.len());
                }
            }
        }
    }

    #[test]
    fn coproduct_standardizes_both_halves() {
        let h = MprAlgebra;
        let mu = h.coproduct(&perm(vec![2, 1]));
        let expected: LinComb<_> = [
            (Tensor::new(perm(vec![]), perm(vec![2, 1])), Coeff::one()),
            (Tensor::new(perm(vec![1]), perm(vec![1])), Coeff::one()),
            (Tensor::new(perm(vec![2, 1]), perm(vec![])), Coeff::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(mu, expected);

        // the (2,3) component of mu([3,1,4,5,2]) is st([3,1]) (x) st([4,5,2])
        let mu5 = h.coproduct(&perm(vec![3, 1, 4, 5, 2]));
        assert_eq!(
            mu5.coeff(&Tensor::new(perm(vec![2, 1]), perm(vec![2, 3, 1]))),
            Coeff::one()
        );

        assert_eq!(
            h.coproduct(&h.unit()),
            LinComb::basis(Tensor::new(perm(vec![]), perm(vec![])))
        );
    }

    #[test]
    fn inverse_and_pairing() {
        assert_eq!(perm(vec![2, 3, 1]).inverse(), perm(vec![3, 1, 2]));
        assert_eq!(perm(vec![2, 1]).inverse(), perm(vec![2, 1]));
        assert_eq!(perm(vec![]).inverse(), perm(vec![]));

        let p = MprPairing;
        assert_eq!(p.pair(&perm(vec![2, 3, 1]), &perm(vec![3, 1, 2])), Coeff::one());
        assert_eq!(p.pair(&perm(vec![2, 3, 1]), &perm(vec![2, 3, 1])), Coeff::zero());
        assert_eq!(p.pair(&perm(vec![]), &perm(vec![])), Coeff::one());
    }

    #[test]
    fn composition_examples() {
        assert_eq!(
            compose(&perm(vec![2, 1]), &perm(vec![2, 1])),
            LinComb::basis(perm(vec![1, 2]))
        );
        assert_eq!(
            compose(&perm(vec![2, 3, 1]), &perm(vec![3, 1, 2])),
            LinComb::basis(perm(vec![1, 2, 3]))
        );
        assert!(compose(&perm(vec![1]), &perm(vec![2, 1])).is_zero());

        for n in 0..=4 {
            use itertools::Itertools;
            for p in (1..=n as u32).permutations(n) {
                let p = perm(p);
                assert_eq!(
                    compose(&p, &p.inverse()),
                    LinComb::basis(PermWord::identity(n))
                );
            }
        }
    }

    #[test]
    fn axiom_suite_len_3() {
        for report in check_all(&MprAlgebra, &LenBound(3)) {
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn selfduality_len_3() {
        let report = check_selfdual(&MprAlgebra, &MprPairing, &LenBound(3));
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn selfduality_worked_instance() {
        // <m([1] (x) [1]), [1,2]> = 1 = <[1] (x) [1], mu([1,2])>
        let h = MprAlgebra;
        let p = MprPairing;
        let one = perm(vec![1]);
        let tau = perm(vec![1, 2]);
        let lhs: Coeff = h
            .product(&one, &one)
            .iter()
            .map(|(w, c)| c * p.pair(w, &tau))
            .sum();
        let rhs: Coeff = h
            .coproduct(&tau)
            .iter()
            .map(|(t, c)| c * p.pair(&one, &t.left) * p.pair(&one, &t.right))
            .sum();
        assert_eq!(lhs, Coeff::one());
        assert_eq!(rhs, Coeff::one());
    }

    #[test]
    fn antipode_of_the_transposition() {
        // recursion oracle: mu([1,2]) = 1(x)[1,2] + [1](x)[1] + [1,2](x)1,
        // iota([1]) = -[1], and [1]*[1] = [1,2] + [2,1], so iota([1,2]) = [2,1]
        let s = antipode(&MprAlgebra, &perm(vec![1, 2]));
        assert_eq!(s, LinComb::basis(perm(vec![2, 1])));
    }
}
