//! Linear combinations over an arbitrary basis with exact integer coefficients.
//!
//! Everything in this crate lives in free Z-modules: a value is a finite map
//! from basis elements to nonzero `BigInt` coefficients. Zero coefficients are
//! pruned on every operation, so structural equality is equality of elements.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exact integer coefficient. Shuffle multiplicities compound multinomially,
/// so no fixed-width type is safe here.
pub type Coeff = BigInt;

/// An ordered pair of basis elements, used as the basis of a tensor product
/// of free modules.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor<L, R> {
    pub left: L,
    pub right: R,
}

impl<L, R> Tensor<L, R> {
    pub fn new(left: L, right: R) -> Self {
        Tensor { left, right }
    }
}

impl<L: fmt::Display, R: fmt::Display> fmt::Display for Tensor<L, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {}", self.left, self.right)
    }
}

/// A finite Z-linear combination of basis elements.
///
/// Invariant: no stored coefficient is zero; the zero element is the empty map.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Coeff>,
}

impl<B: Ord> LinComb<B> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    /// The single basis element `b` with coefficient 1.
    pub fn basis(b: B) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(b, Coeff::one());
        LinComb { terms }
    }

    /// `c * b`, pruned if `c` is zero.
    pub fn term(b: B, c: Coeff) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct basis elements with nonzero coefficient.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `b` (zero if absent).
    pub fn coeff(&self, b: &B) -> Coeff {
        self.terms.get(b).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Coeff)> {
        self.terms.iter()
    }

    /// Add `c * b` in place, pruning a resulting zero.
    pub fn add_term(&mut self, b: B, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Add `c * other` in place.
    pub fn add_scaled(&mut self, c: &Coeff, other: &Self)
    where
        B: Clone,
    {
        if c.is_zero() {
            return;
        }
        for (b, k) in other.iter() {
            self.add_term(b.clone(), c * k);
        }
    }

    /// `self + c * other`.
    pub fn combine(&self, c: &Coeff, other: &Self) -> Self
    where
        B: Clone,
    {
        let mut out = self.clone();
        out.add_scaled(c, other);
        out
    }

    pub fn add(&self, other: &Self) -> Self
    where
        B: Clone,
    {
        self.combine(&Coeff::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self
    where
        B: Clone,
    {
        self.combine(&-Coeff::one(), other)
    }

    pub fn neg(&self) -> Self
    where
        B: Clone,
    {
        self.scale(&-Coeff::one())
    }

    pub fn scale(&self, c: &Coeff) -> Self
    where
        B: Clone,
    {
        let mut out = Self::zero();
        out.add_scaled(c, self);
        out
    }

    /// Linear extension of a basis-level map.
    pub fn lift<C: Ord + Clone, F>(&self, mut f: F) -> LinComb<C>
    where
        F: FnMut(&B) -> LinComb<C>,
    {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_scaled(c, &f(b));
        }
        out
    }

    /// Sum of all coefficients (the image under the counit of a group-like
    /// basis, or the total interleaving count of a shuffle).
    pub fn coeff_sum(&self) -> Coeff {
        let mut s = Coeff::zero();
        for (_, c) in self.iter() {
            s += c;
        }
        s
    }
}

impl<B: Ord> IntoIterator for LinComb<B> {
    type Item = (B, Coeff);
    type IntoIter = std::collections::btree_map::IntoIter<B, Coeff>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<B: Ord> FromIterator<(B, Coeff)> for LinComb<B> {
    fn from_iter<T: IntoIterator<Item = (B, Coeff)>>(iter: T) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

/// Bilinear tensor product: the coefficient of `x (x) y` is the product of
/// the coefficients of `x` and `y`.
pub fn tensor<B1, B2>(a: &LinComb<B1>, b: &LinComb<B2>) -> LinComb<Tensor<B1, B2>>
where
    B1: Ord + Clone,
    B2: Ord + Clone,
{
    let mut out = LinComb::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out.add_term(Tensor::new(x.clone(), y.clone()), cx * cy);
        }
    }
    out
}

/// Terms rendered and ordered lexicographically by their serialized basis
/// form, so output is deterministic across runs and platforms.
impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_lincomb(self, |b| b.to_string()))
    }
}

/// Render a combination with a custom basis serializer (the CLI substitutes
/// `1` for the unit basis element).
pub fn render_lincomb<B: Ord + fmt::Display>(
    lc: &LinComb<B>,
    basis_str: impl Fn(&B) -> String,
) -> String {
    if lc.is_zero() {
        return "0".to_string();
    }
    let mut rendered: Vec<(String, &Coeff)> = lc.iter().map(|(b, c)| (basis_str(b), c)).collect();
    rendered.sort();
    let mut out = String::new();
    let one = Coeff::one();
    for (i, (b, c)) in rendered.iter().enumerate() {
        let negative = **c < Coeff::zero();
        let mag = if negative { -(*c).clone() } else { (*c).clone() };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if mag != one {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push_str(b);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lc(pairs: &[(&str, i64)]) -> LinComb<String> {
        pairs
            .iter()
            .map(|(b, c)| (b.to_string(), Coeff::from(*c)))
            .collect()
    }

    #[test]
    fn combine_collects_like_terms() {
        let a = lc(&[("[1,2]", 2)]);
        let b = lc(&[("[1,2]", 1)]);
        assert_eq!(a.combine(&Coeff::one(), &b), lc(&[("[1,2]", 3)]));
    }

    #[test]
    fn combine_cancels_to_empty() {
        let a = lc(&[("[1]", 1)]);
        let r = a.combine(&Coeff::from(-1), &a);
        assert!(r.is_zero());
        assert_eq!(r.num_terms(), 0);
    }

    #[test]
    fn combine_zero_left_operand() {
        let z: LinComb<String> = LinComb::zero();
        let b = lc(&[("[2,1]", 1)]);
        assert_eq!(z.combine(&Coeff::from(5), &b), lc(&[("[2,1]", 5)]));
    }

    #[test]
    fn tensor_single_terms_and_coefficients() {
        let a = lc(&[("[1]", 1)]);
        let b = lc(&[("[2]", 1)]);
        let t = tensor(&a, &b);
        assert_eq!(t.num_terms(), 1);
        assert_eq!(
            t.coeff(&Tensor::new("[1]".to_string(), "[2]".to_string())),
            Coeff::one()
        );

        let t2 = tensor(&lc(&[("[1]", 2)]), &lc(&[("[2]", 3)]));
        assert_eq!(
            t2.coeff(&Tensor::new("[1]".to_string(), "[2]".to_string())),
            Coeff::from(6)
        );
    }

    #[test]
    fn tensor_is_bilinear_on_sums() {
        let a = lc(&[("[1]", 1), ("[2]", 1)]);
        let b = lc(&[("[3]", 1)]);
        let t = tensor(&a, &b);
        assert_eq!(t.num_terms(), 2);
        assert_eq!(
            t.coeff(&Tensor::new("[1]".to_string(), "[3]".to_string())),
            Coeff::one()
        );
        assert_eq!(
            t.coeff(&Tensor::new("[2]".to_string(), "[3]".to_string())),
            Coeff::one()
        );
    }

    #[test]
    fn lift_identity_and_zero() {
        let x = lc(&[("[1]", 2), ("[2]", -3)]);
        assert_eq!(x.lift(|b| LinComb::basis(b.clone())), x);
        let z: LinComb<String> = x.lift(|_| LinComb::zero());
        assert!(z.is_zero());
    }

    #[test]
    fn display_is_sorted_and_signed() {
        let x = lc(&[("[2]", -1), ("[1]", 3), ("[3]", 1)]);
        assert_eq!(x.to_string(), "3*[1] - [2] + [3]");
        let z: LinComb<String> = LinComb::zero();
        assert_eq!(z.to_string(), "0");
        assert_eq!(lc(&[("[1]", -2)]).to_string(), "-2*[1]");
    }

    fn arb_lincomb() -> impl Strategy<Value = LinComb<u8>> {
        proptest::collection::vec((0u8..6, -4i64..5), 0..6).prop_map(|pairs| {
            pairs
                .into_iter()
                .map(|(b, c)| (b, Coeff::from(c)))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn addition_commutes(a in arb_lincomb(), b in arb_lincomb()) {
            prop_assert_eq!(a.combine(&Coeff::one(), &b), b.combine(&Coeff::one(), &a));
        }

        #[test]
        fn self_cancellation(a in arb_lincomb()) {
            prop_assert!(a.combine(&-Coeff::one(), &a).is_zero());
        }

        #[test]
        fn tensor_bilinear(a in arb_lincomb(), a2 in arb_lincomb(), b in arb_lincomb(), c in -4i64..5) {
            let c = Coeff::from(c);
            let lhs = tensor(&a.combine(&c, &a2), &b);
            let rhs = tensor(&a, &b).combine(&c, &tensor(&a2, &b));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn lift_distributes_over_combine(a in arb_lincomb(), b in arb_lincomb(), c in -4i64..5) {
            let c = Coeff::from(c);
            // an arbitrary-ish basis-level map into another module
            let f = |x: &u8| -> LinComb<u8> {
                let mut out = LinComb::basis(x / 2);
                out.add_term(x + 1, Coeff::from(*x as i64 - 2));
                out
            };
            let lhs = a.combine(&c, &b).lift(f);
            let rhs = a.lift(f).combine(&c, &b.lift(f));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
