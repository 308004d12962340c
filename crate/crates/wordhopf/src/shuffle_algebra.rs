//! The shuffle Hopf algebra: words under the shuffle product and the cut
//! coproduct, graded by letter sum, with the sign-reversal antipode.

use crate::hopf::HopfAlgebra;
use crate::lincomb::{Coeff, LinComb, Tensor};
use crate::words::{compositions_up_to_weight, shuffle, Word};
use num_traits::{One, Zero};
use std::fmt;

/// Enumeration bound: all words of weight (letter sum) at most the given
/// value. The weight-n slice is the set of compositions of n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightBound(pub usize);

impl fmt::Display for WeightBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "weight<={}", self.0)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ShuffleAlgebra;

impl HopfAlgebra for ShuffleAlgebra {
    type Basis = Word;
    type Bounds = WeightBound;

    fn name(&self) -> &'static str {
        "shuffle"
    }

    fn unit(&self) -> Word {
        Word::empty()
    }

    fn counit(&self, x: &Word) -> Coeff {
        if x.is_empty() {
            Coeff::one()
        } else {
            Coeff::zero()
        }
    }

    fn degree(&self, x: &Word) -> usize {
        x.weight() as usize
    }

    fn product(&self, a: &Word, b: &Word) -> LinComb<Word> {
        shuffle(a, b)
    }

    fn coproduct(&self, x: &Word) -> LinComb<Tensor<Word, Word>> {
        x.cuts()
            .into_iter()
            .map(|(a, b)| (Tensor::new(a, b), Coeff::one()))
            .collect()
    }

    fn enumerate(&self, bounds: &WeightBound) -> Vec<Word> {
        compositions_up_to_weight(bounds.0)
    }
}

/// The closed-form antipode: `(-1)^m` times the reversed word. The generic
/// degree recursion must agree with this on every word; that comparison is
/// one of the acceptance checks.
pub fn shuffle_antipode(w: &Word) -> LinComb<Word> {
    let reversed = Word::new(w.letters().iter().rev().copied().collect());
    let sign = if w.len() % 2 == 0 {
        Coeff::one()
    } else {
        -Coeff::one()
    };
    LinComb::term(reversed, sign)
}
