//! Words, permutations and substitutions as endomorphism recipes of the
//! shuffle algebra: the three action kinds, the convolution realization of
//! the products, the projected-coconvolution procedure for reading off
//! coproducts, and the naive-word construction on which that procedure
//! fails to produce a bialgebra.

pub mod finite;

pub use finite::{
    end_conv, end_coconv, end_hopf_check, end_pair, group_algebra, EndoMatrix, FiniteHopfData,
    GroupTable, MatrixUnit,
};

use crate::dwha::Substitution;
use crate::hopf::HopfAlgebra;
use crate::lincomb::{Coeff, LinComb, Tensor};
use crate::wha::word_product;
use crate::words::{shuffle, words_up_to, PermWord, Word};
use crate::Error;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A recipe for an endomorphism of the shuffle algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionKind {
    /// A permutation word acting on words of its own length by position:
    /// `sigma(alpha) = [a_{s_1}, ..., a_{s_m}]`.
    Perm(PermWord),
    /// A substitution acting on the words matching its top pattern, sending
    /// them to the bottom pattern under the same letter assignment.
    Subst(Substitution),
    /// An arbitrary word of height `m` acting on words of length `m` by
    /// position, like the permutation case but with repeats allowed.
    Naive(Word),
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionKind::Perm(p) => write!(f, "perm {p}"),
            ActionKind::Subst(s) => write!(f, "subst {s}"),
            ActionKind::Naive(w) => write!(f, "naive {w}"),
        }
    }
}

/// Apply a recipe to a basis word. The result is zero or a single word with
/// coefficient 1.
pub fn act(kind: &ActionKind, a: &Word) -> LinComb<Word> {
    match kind {
        ActionKind::Perm(p) => act_positions(p.word(), p.len(), a),
        ActionKind::Naive(w) => act_positions(w, w.height() as usize, a),
        ActionKind::Subst(s) => {
            if !a.matches(s.top()) {
                return LinComb::zero();
            }
            let mut assignment: BTreeMap<u32, u32> = BTreeMap::new();
            for (&letter, &value) in s.top().letters().iter().zip(a.letters()) {
                assignment.insert(letter, value);
            }
            let image = Word::new(
                s.bottom().letters().iter().map(|x| assignment[x]).collect(),
            );
            LinComb::basis(image)
        }
    }
}

fn act_positions(indices: &Word, domain_len: usize, a: &Word) -> LinComb<Word> {
    if a.len() != domain_len {
        return LinComb::zero();
    }
    let image = Word::new(
        indices
            .letters()
            .iter()
            .map(|&i| a.letters()[(i - 1) as usize])
            .collect(),
    );
    LinComb::basis(image)
}

/// The convolution of two recipes evaluated on a word: cut, act on the two
/// halves, and shuffle the images back together.
pub fn convolution_action(x: &ActionKind, y: &ActionKind, a: &Word) -> LinComb<Word> {
    let mut out = LinComb::zero();
    for (a1, a2) in a.cuts() {
        let left = act(x, &a1);
        let right = act(y, &a2);
        for (u, cu) in left.iter() {
            for (v, cv) in right.iter() {
                out.add_scaled(&(cu * cv), &shuffle(u, v));
            }
        }
    }
    out
}

/// The coconvolution of a recipe, projected back onto word-pairs: apply the
/// recipe to the shuffle of two disjoint-support test words, cut every
/// resulting word, and keep exactly the cuts whose left half stays in the
/// letters of `a` and right half in the letters of `b`.
pub fn projected_coconvolution(
    x: &ActionKind,
    a: &Word,
    b: &Word,
) -> Result<LinComb<Tensor<Word, Word>>, Error> {
    let sa = a.support();
    let sb = b.support();
    if !sa.is_disjoint(&sb) {
        return Err(Error::DisjointnessViolation);
    }
    let mut out = LinComb::zero();
    for (w, c) in shuffle(a, b).iter() {
        for (img, ci) in act(x, w).iter() {
            for (w1, w2) in img.cuts() {
                if w1.support().is_subset(&sa) && w2.support().is_subset(&sb) {
                    out.add_term(Tensor::new(w1, w2), c * ci);
                }
            }
        }
    }
    Ok(out)
}

/// The coproduct candidate the projection procedure assigns to a naive word:
/// for each split of the height, probe with generic disjoint test words,
/// read the index pair off each qualifying cut, and keep the pairs whose
/// heights match the split (the only ones meaningful as a component of that
/// bidegree).
pub fn naive_coproduct(sigma: &Word) -> LinComb<Tensor<Word, Word>> {
    let m = sigma.height();
    let mut out = LinComb::zero();
    for m1 in 0..=m {
        let m2 = m - m1;
        let a = Word::new((1..=m1).collect());
        let b = Word::new(((m1 + 1)..=m).collect());
        let action = ActionKind::Naive(sigma.clone());
        for (w, c) in shuffle(&a, &b).iter() {
            for (img, ci) in act(&action, w).iter() {
                for (u1, u2) in img.cuts() {
                    let left_ok = u1.letters().iter().all(|&x| x <= m1);
                    let right_ok = u2.letters().iter().all(|&x| x > m1);
                    if !(left_ok && right_ok) {
                        continue;
                    }
                    let p1 = u1;
                    let p2 = u2.unshift(m1);
                    if p1.height() == m1 && p2.height() == m2 {
                        out.add_term(Tensor::new(p1, p2), c * ci);
                    }
                }
            }
        }
    }
    out
}

/// Bounds for the naive-word fixture: height and length of the recipe words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NaiveBounds {
    pub max_height: u32,
    pub max_len: usize,
}

impl fmt::Display for NaiveBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ht<={},len<={}", self.max_height, self.max_len)
    }
}

/// The naive-word construction: the word-level product together with the
/// coproduct produced by the projection procedure for position actions.
/// This is *not* a bialgebra; `check_bialgebra` finds witnesses, which is
/// the point of the fixture.
#[derive(Clone, Copy, Debug, Default)]
pub struct NaiveWordAlgebra;

impl HopfAlgebra for NaiveWordAlgebra {
    type Basis = Word;
    type Bounds = NaiveBounds;

    fn name(&self) -> &'static str {
        "naive"
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
        x.height() as usize
    }

    fn product(&self, a: &Word, b: &Word) -> LinComb<Word> {
        word_product(a, b)
    }

    fn coproduct(&self, x: &Word) -> LinComb<Tensor<Word, Word>> {
        naive_coproduct(x)
    }

    fn enumerate(&self, bounds: &NaiveBounds) -> Vec<Word> {
        words_up_to(bounds.max_len, bounds.max_height)
    }
}

/// The frozen first bialgebra violation of the naive construction, in the
/// deterministic enumeration order of `NaiveBounds { ht<=3, len<=2 }`. The
/// verification CLI reproduces this witness; reproducing it is a pass.
pub fn naive_witness() -> (Word, Word) {
    (Word::new(vec![2]), Word::new(vec![1]))
}

/// Both evaluated sides at the frozen witness: the projected coproduct
/// double-counts the mixed terms of `mu([2] * [1])`.
pub const NAIVE_WITNESS_LHS: &str =
    "2*[1] (x) [2] + [2,3] (x) [] + 2*[2] (x) [1] + [3,2] (x) [] + [] (x) [2,3] + [] (x) [3,2]";
pub const NAIVE_WITNESS_RHS: &str =
    "[1] (x) [2] + [2,3] (x) [] + [2] (x) [1] + [3,2] (x) [] + [] (x) [2,3] + [] (x) [3,2]";
