//! The free associative algebra on generators `Z_1, Z_2, ...` with the
//! coproduct determined on generators by splitting an n-box strip into two
//! strips in all possible ways; this is the Hopf algebra of noncommutative
//! symmetric functions.

use crate::hopf::HopfAlgebra;
use crate::lincomb::{Coeff, LinComb, Tensor};
use crate::shuffle_algebra::WeightBound;
use crate::words::{compositions_up_to_weight, Word};
use num_traits::{One, Zero};
use std::fmt;

/// The monomial `Z_{i1} Z_{i2} ... Z_{im}`, stored as its composition
/// `(i1, ..., im)`. The empty composition is the monomial 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NsymmMonomial(Word);

impl NsymmMonomial {
    pub fn new(composition: Word) -> Self {
        NsymmMonomial(composition)
    }

    pub fn one() -> Self {
        NsymmMonomial(Word::empty())
    }

    pub fn generator(n: u32) -> Self {
        NsymmMonomial(Word::new(vec![n]))
    }

    pub fn composition(&self) -> &Word {
        &self.0
    }
}

impl fmt::Display for NsymmMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct NsymmAlgebra;

impl HopfAlgebra for NsymmAlgebra {
    type Basis = NsymmMonomial;
    type Bounds = WeightBound;

    fn name(&self) -> &'static str {
        "nsymm"
    }

    fn unit(&self) -> NsymmMonomial {
        NsymmMonomial::one()
    }

    fn counit(&self, x: &NsymmMonomial) -> Coeff {
        if x.0.is_empty() {
            Coeff::one()
        } else {
            Coeff::zero()
        }
    }

    fn degree(&self, x: &NsymmMonomial) -> usize {
        x.0.weight() as usize
    }

    /// Concatenation of monomials; the algebra is free, so the product of two
    /// basis elements is a single basis element.
    fn product(&self, a: &NsymmMonomial, b: &NsymmMonomial) -> LinComb<NsymmMonomial> {
        LinComb::basis(NsymmMonomial(a.0.concat(&b.0)))
    }

    /// The algebra-morphism extension of `mu(Z_n) = sum_{i+j=n} Z_i (x) Z_j`
    /// with `Z_0 = 1`: multiply the generator coproducts letter by letter in
    /// the tensor-square algebra.
    fn coproduct(&self, x: &NsymmMonomial) -> LinComb<Tensor<NsymmMonomial, NsymmMonomial>> {
        let mut acc = LinComb::basis(Tensor::new(NsymmMonomial::one(), NsymmMonomial::one()));
        for &n in x.0.letters() {
            let mut next = LinComb::zero();
            for (t, c) in acc.iter() {
                for i in 0..=n {
                    let j = n - i;
                    let left = append_power(&t.left, i);
                    let right = append_power(&t.right, j);
                    next.add_term(Tensor::new(left, right), c.clone());
                }
            }
            acc = next;
        }
        acc
    }

    fn enumerate(&self, bounds: &WeightBound) -> Vec<NsymmMonomial> {
        compositions_up_to_weight(bounds.0)
            .into_iter()
            .map(NsymmMonomial)
            .collect()
    }
}

fn append_power(m: &NsymmMonomial, i: u32) -> NsymmMonomial {
    if i == 0 {
        m.clone()
    } else {
        NsymmMonomial(m.0.concat(&Word::new(vec![i])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{check_all, tensor_square_product};

    fn z(letters: Vec<u32>) -> NsymmMonomial {
        NsymmMonomial::new(Word::new(letters))
    }

    #[test]
    fn product_is_concatenation() {
        let h = NsymmAlgebra;
        assert_eq!(
            h.product(&z(vec![2, 1]), &z(vec![3])),
            LinComb::basis(z(vec![2, 1, 3]))
        );
        assert_eq!(
            h.product(&NsymmMonomial::one(), &z(vec![5])),
            LinComb::basis(z(vec![5]))
        );
        // the stack with layers 7,4,2,6,1
        assert_eq!(
            h.product(&z(vec![7, 4]), &z(vec![2, 6, 1])),
            LinComb::basis(z(vec![7, 4, 2, 6, 1]))
        );
    }

    #[test]
    fn noncommutative() {
        let h = NsymmAlgebra;
        assert_ne!(
            h.product(&z(vec![1]), &z(vec![2])),
            h.product(&z(vec![2]), &z(vec![1]))
        );
    }

    #[test]
    fn generator_coproducts() {
        let h = NsymmAlgebra;
        let mu1 = h.coproduct(&z(vec![1]));
        let expected1: LinComb<_> = [
            (Tensor::new(z(vec![1]), NsymmMonomial::one()), Coeff::one()),
            (Tensor::new(NsymmMonomial::one(), z(vec![1])), Coeff::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(mu1, expected1);

        let mu2 = h.coproduct(&z(vec![2]));
        assert_eq!(mu2.num_terms(), 3);
        assert_eq!(
            mu2.coeff(&Tensor::new(z(vec![1]), z(vec![1]))),
            Coeff::one()
        );
    }

    #[test]
    fn coproduct_of_z1_squared() {
        let h = NsymmAlgebra;
        let mu = h.coproduct(&z(vec![1, 1]));
        assert_eq!(
            mu.coeff(&Tensor::new(z(vec![1, 1]), NsymmMonomial::one())),
            Coeff::one()
        );
        assert_eq!(
            mu.coeff(&Tensor::new(z(vec![1]), z(vec![1]))),
            Coeff::from(2)
        );
        assert_eq!(
            mu.coeff(&Tensor::new(NsymmMonomial::one(), z(vec![1, 1]))),
            Coeff::one()
        );
        assert_eq!(mu.num_terms(), 3);
    }

    #[test]
    fn coproduct_is_an_algebra_morphism_up_to_weight_4() {
        let h = NsymmAlgebra;
        let elems = h.enumerate(&WeightBound(4));
        for a in &elems {
            for b in &elems {
                if h.degree(a) + h.degree(b) > 4 {
                    continue;
                }
                let ab = z(a.composition().concat(b.composition()).letters().to_vec());
                let lhs = h.coproduct(&ab);
                let rhs = tensor_square_product(&h, &h.coproduct(a), &h.coproduct(b));
                assert_eq!(lhs, rhs, "mu({a}*{b})");
            }
        }
    }

    #[test]
    fn axiom_suite_weight_4() {
        for report in check_all(&NsymmAlgebra, &WeightBound(4)) {
            assert!(report.passed(), "{report}");
        }
    }
}
