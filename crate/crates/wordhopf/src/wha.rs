//! The word Hopf algebra: integer words as a sub-Hopf-algebra of the double
//! word algebra via the run encoding. The product has a direct word-level
//! formula (shuffle against the height-shifted second factor); the coproduct
//! is transported through the substitution algebra.

use crate::dwha::{DwhaAlgebra, Substitution};
use crate::hopf::HopfAlgebra;
use crate::lincomb::{Coeff, LinComb, Tensor};
use crate::words::{shuffle, words_up_to, Word};
use crate::Error;
use num_traits::{One, Zero};
use std::fmt;

/// Enumeration bounds: all words of length at most `max_len` with letters at
/// most `max_height`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordBounds {
    pub max_len: usize,
    pub max_height: u32,
}

impl fmt::Display for WordBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "len<={},ht<={}", self.max_len, self.max_height)
    }
}

/// Encode a word as its substitution: letting `supp = {a_1 < ... < a_n}` and
/// `r_i = a_i - a_{i-1}` (with `r_1 = a_1`), the top is the run word
/// `1^{r_1} 2^{r_2} ... n^{r_n}` and the bottom replaces each value `a_i`
/// by the letter `i`.
pub fn encode(a: &Word) -> Substitution {
    let support: Vec<u32> = a.support().into_iter().collect();
    let mut top = Vec::new();
    let mut prev = 0u32;
    for (i, &v) in support.iter().enumerate() {
        for _ in 0..(v - prev) {
            top.push(i as u32 + 1);
        }
        prev = v;
    }
    let rank = |x: u32| support.iter().position(|&v| v == x).unwrap() as u32 + 1;
    let bottom = Word::new(a.letters().iter().map(|&x| rank(x)).collect());
    Substitution::new(Word::new(top), bottom).expect("run word and ranked word share support")
}

/// Decode a run-form substitution back to a word: bottom letter `i` becomes
/// the partial sum `r_1 + ... + r_i` of the top's run lengths.
pub fn decode(s: &Substitution) -> Result<Word, Error> {
    if !s.is_wha_form() {
        return Err(Error::NotWhaForm);
    }
    // canonical + run form means the top is 1^{r_1} 2^{r_2} ... n^{r_n}
    let n = s.degree();
    let mut runs = vec![0u32; n + 1];
    for &x in s.top().letters() {
        runs[x as usize] += 1;
    }
    let mut partial = vec![0u32; n + 1];
    for i in 1..=n {
        partial[i] = partial[i - 1] + runs[i];
    }
    Ok(Word::new(
        s.bottom().letters().iter().map(|&i| partial[i as usize]).collect(),
    ))
}

#[derive(Clone, Copy, Debug, Default)]
pub struct WhaAlgebra;

/// The word-level product: shuffle `a` against `b` shifted by the height
/// of `a`.
pub fn word_product(a: &Word, b: &Word) -> LinComb<Word> {
    shuffle(a, &b.shift(a.height()))
}

impl HopfAlgebra for WhaAlgebra {
    type Basis = Word;
    type Bounds = WordBounds;

    fn name(&self) -> &'static str {
        "wha"
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
        x.support().len()
    }

    fn product(&self, a: &Word, b: &Word) -> LinComb<Word> {
        word_product(a, b)
    }

    /// Transport through the substitution algebra: encode, take the good-cut
    /// coproduct there, and decode both tensor factors. Good cuts preserve
    /// the run form, so decoding is total here.
    fn coproduct(&self, x: &Word) -> LinComb<Tensor<Word, Word>> {
        DwhaAlgebra.coproduct(&encode(x)).lift(|t| {
            let left = decode(&t.left).expect("good cuts preserve the run form");
            let right = decode(&t.right).expect("good cuts preserve the run form");
            LinComb::basis(Tensor::new(left, right))
        })
    }

    fn enumerate(&self, bounds: &WordBounds) -> Vec<Word> {
        words_up_to(bounds.max_len, bounds.max_height)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dwha::enumerate_substitutions;
    use crate::hopf::check_all;
    use crate::mpr::MprAlgebra;
    use crate::word;
    use crate::words::permutations_up_to;

    fn sub(top: Word, bottom: Word) -> Substitution {
        Substitution::new(top, bottom).unwrap()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(
            encode(&word![3, 2, 7, 2, 4]),
            sub(word![1, 1, 2, 3, 4, 4, 4], word![2, 1, 4, 1, 3])
        );
        assert_eq!(encode(&Word::empty()), Substitution::empty());
        assert_eq!(encode(&word![1]), sub(word![1], word![1]));
    }

    #[test]
    fn decode_examples() {
        assert_eq!(
            decode(&sub(word![1, 1, 2, 3, 4, 4, 4], word![2, 1, 4, 1, 3])).unwrap(),
            word![3, 2, 7, 2, 4]
        );
        assert_eq!(decode(&Substitution::empty()).unwrap(), Word::empty());
        // the right factor of the worked coproduct, in its original letters
        assert_eq!(
            decode(&sub(word![1, 1, 3, 4, 4, 4], word![1, 4, 1, 3])).unwrap(),
            word![2, 6, 2, 3]
        );
        assert_eq!(
            decode(&sub(word![1, 2, 1], word![2, 1, 2])),
            Err(Error::NotWhaForm)
        );
    }

    #[test]
    fn decode_encode_round_trip() {
        for w in words_up_to(5, 5) {
            assert_eq!(decode(&encode(&w)).unwrap(), w, "word {w}");
        }
        for s in enumerate_substitutions(3, 4, 4) {
            if s.is_wha_form() {
                assert_eq!(encode(&decode(&s).unwrap()), s, "substitution {s}");
            }
        }
    }

    #[test]
    fn product_examples() {
        let h = WhaAlgebra;
        // agrees with the permutation product when the left factor is a permutation
        assert_eq!(
            h.product(&word![1], &word![3, 2, 1]),
            shuffle(&word![1], &word![4, 3, 2])
        );
        let r = h.product(&word![2], &word![1, 1]);
        let expected: LinComb<Word> = [word![2, 3, 3], word![3, 2, 3], word![3, 3, 2]]
            .into_iter()
            .map(|w| (w, Coeff::one()))
            .collect();
        assert_eq!(r, expected);
        let b = word![4, 1];
        assert_eq!(h.product(&Word::empty(), &b), LinComb::basis(b));
    }

    #[test]
    fn coproduct_reproduces_the_worked_examples() {
        let h = WhaAlgebra;
        let alpha = word![3, 2, 7, 2, 4];
        let mu = h.coproduct(&alpha);
        let mut expected = LinComb::zero();
        expected.add_term(Tensor::new(word![], alpha.clone()), Coeff::one());
        expected.add_term(Tensor::new(word![1], word![2, 6, 2, 3]), Coeff::one());
        expected.add_term(Tensor::new(word![3, 2, 6, 2], word![1]), Coeff::one());
        expected.add_term(Tensor::new(alpha.clone(), word![]), Coeff::one());
        assert_eq!(mu, expected);

        let beta = word![7, 3, 2, 2, 4];
        let mu2 = h.coproduct(&beta);
        let mut expected2 = LinComb::zero();
        expected2.add_term(Tensor::new(word![], beta.clone()), Coeff::one());
        expected2.add_term(Tensor::new(word![3], word![3, 2, 2, 4]), Coeff::one());
        expected2.add_term(Tensor::new(word![4, 1], word![2, 2, 3]), Coeff::one());
        expected2.add_term(Tensor::new(word![6, 3, 2, 2], word![1]), Coeff::one());
        expected2.add_term(Tensor::new(beta.clone(), word![]), Coeff::one());
        assert_eq!(mu2, expected2);

        assert_eq!(
            h.coproduct(&Word::empty()),
            LinComb::basis(Tensor::new(word![], word![]))
        );
    }

    #[test]
    fn closure_under_the_substitution_operations() {
        let d = DwhaAlgebra;
        let words = words_up_to(3, 3);
        for a in &words {
            for (t, _) in d.coproduct(&encode(a)).iter() {
                assert!(t.left.is_wha_form() && t.right.is_wha_form(), "mu({a})");
            }
            for b in &words {
                for (s, _) in d.product(&encode(a), &encode(b)).iter() {
                    assert!(s.is_wha_form(), "({a},{b})");
                }
            }
        }
    }

    #[test]
    fn transport_consistency_with_the_direct_product() {
        let h = WhaAlgebra;
        let d = DwhaAlgebra;
        for a in words_up_to(3, 3) {
            for b in words_up_to(3, 3) {
                let through = d
                    .product(&encode(&a), &encode(&b))
                    .lift(|s| LinComb::basis(decode(s).unwrap()));
                assert_eq!(through, h.product(&a, &b), "({a},{b})");
            }
        }
    }

    #[test]
    fn restricts_to_mpr_on_permutation_words() {
        let h = WhaAlgebra;
        let m = MprAlgebra;
        let perms = permutations_up_to(4);
        for a in &perms {
            let mu_word = h.coproduct(a.word());
            let mu_perm = m.coproduct(a).lift(|t| {
                LinComb::basis(Tensor::new(t.left.word().clone(), t.right.word().clone()))
            });
            assert_eq!(mu_word, mu_perm, "mu({a})");
        }
        for a in permutations_up_to(3) {
            for b in permutations_up_to(3) {
                let prod_word = h.product(a.word(), b.word());
                let prod_perm = m.product(&a, &b).lift(|p| LinComb::basis(p.word().clone()));
                assert_eq!(prod_word, prod_perm, "({a},{b})");
            }
        }
    }

    #[test]
    fn axiom_suite_small_bounds() {
        for report in check_all(&WhaAlgebra, &WordBounds { max_len: 2, max_height: 3 }) {
            assert!(report.passed(), "{report}");
        }
    }
}
