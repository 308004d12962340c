//! The double word Hopf algebra: substitutions (pairs of words with equal
//! support, up to bijective relabeling), with concatenation-over-shuffle
//! product, good-cut coproduct, the flip inner product, the embedding of the
//! permutation Hopf algebra, and recipe composition.

use crate::hopf::{HopfAlgebra, Pairing};
use crate::lincomb::{Coeff, LinComb, Tensor};
use crate::words::{shuffle, PermWord, Word};
use crate::Error;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A substitution: a pair of words with equal support, stored as the unique
/// representative of its relabeling class. Letters are renumbered `1..=k` in
/// order of first occurrence in the top word, so derived equality is equality
/// of classes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Substitution {
    top: Word,
    bottom: Word,
}

impl Substitution {
    /// Canonicalize a top/bottom pair. Fails unless the supports agree.
    pub fn new(top: Word, bottom: Word) -> Result<Self, Error> {
        if top.support() != bottom.support() {
            return Err(Error::SupportMismatch);
        }
        let mut relabel: BTreeMap<u32, u32> = BTreeMap::new();
        for &x in top.letters() {
            let next = relabel.len() as u32 + 1;
            relabel.entry(x).or_insert(next);
        }
        let map = |w: &Word| Word::new(w.letters().iter().map(|x| relabel[x]).collect());
        Ok(Substitution { top: map(&top), bottom: map(&bottom) })
    }

    pub fn empty() -> Self {
        Substitution { top: Word::empty(), bottom: Word::empty() }
    }

    pub fn top(&self) -> &Word {
        &self.top
    }

    pub fn bottom(&self) -> &Word {
        &self.bottom
    }

    /// Number of distinct letters; the grading of the algebra.
    pub fn degree(&self) -> usize {
        self.top.support().len()
    }

    /// The substitution with top and bottom exchanged, canonicalized.
    pub fn flip(&self) -> Substitution {
        Substitution::new(self.bottom.clone(), self.top.clone())
            .expect("top and bottom of a substitution share their support")
    }

    /// True iff equal top letters are contiguous; these are exactly the
    /// substitutions encoding plain integer words.
    pub fn is_wha_form(&self) -> bool {
        self.top.is_run_word()
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}/{}}}", self.top, self.bottom)
    }
}

/// Enumeration bounds for the algebra: each homogeneous slice is infinite in
/// both the top-length and bottom-length directions, so all three knobs are
/// needed to cut out a finite set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubstBounds {
    pub max_support: usize,
    pub max_top_len: usize,
    pub max_bottom_len: usize,
}

impl fmt::Display for SubstBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "supp<={},top<={},bot<={}",
            self.max_support, self.max_top_len, self.max_bottom_len
        )
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct DwhaAlgebra;

impl HopfAlgebra for DwhaAlgebra {
    type Basis = Substitution;
    type Bounds = SubstBounds;

    fn name(&self) -> &'static str {
        "dwha"
    }

    fn unit(&self) -> Substitution {
        Substitution::empty()
    }

    fn counit(&self, x: &Substitution) -> Coeff {
        if x.degree() == 0 {
            Coeff::one()
        } else {
            Coeff::zero()
        }
    }

    fn degree(&self, x: &Substitution) -> usize {
        x.degree()
    }

    /// Relabel the second factor away from the first, concatenate the tops,
    /// and shuffle the bottoms; each resulting pair is canonicalized.
    fn product(&self, p: &Substitution, q: &Substitution) -> LinComb<Substitution> {
        let k = p.degree() as u32;
        let q_top = q.top.shift(k);
        let q_bottom = q.bottom.shift(k);
        let top = p.top.concat(&q_top);
        shuffle(&p.bottom, &q_bottom).lift(|w| {
            LinComb::basis(
                Substitution::new(top.clone(), w.clone())
                    .expect("concatenated tops and shuffled bottoms share their support"),
            )
        })
    }

    /// Sum over the good cuts of the bottom word; the support condition
    /// partitions the top into the two matching subwords.
    fn coproduct(&self, p: &Substitution) -> LinComb<Tensor<Substitution, Substitution>> {
        p.bottom
            .good_cuts()
            .into_iter()
            .map(|(s1, s2)| {
                let left = Substitution::new(p.top.restrict(&s1.support()), s1)
                    .expect("a good cut splits the support");
                let right = Substitution::new(p.top.restrict(&s2.support()), s2)
                    .expect("a good cut splits the support");
                (Tensor::new(left, right), Coeff::one())
            })
            .collect()
    }

    fn enumerate(&self, bounds: &SubstBounds) -> Vec<Substitution> {
        enumerate_substitutions(bounds.max_support, bounds.max_top_len, bounds.max_bottom_len)
    }
}

/// The inner product: 1 iff flipping one substitution gives the other.
#[derive(Clone, Copy, Debug, Default)]
pub struct DwhaPairing;

impl Pairing<Substitution> for DwhaPairing {
    fn pair(&self, p: &Substitution, q: &Substitution) -> Coeff {
        if p.flip() == *q {
            Coeff::one()
        } else {
            Coeff::zero()
        }
    }
}

/// All canonical substitutions with support size, top length and bottom
/// length within the given bounds, ordered by support size, then top, then
/// bottom. No duplicates: canonical tops are exactly the restricted-growth
/// words, so each class is generated once.
pub fn enumerate_substitutions(
    max_support: usize,
    max_top_len: usize,
    max_bottom_len: usize,
) -> Vec<Substitution> {
    let mut out = Vec::new();
    for s in 0..=max_support {
        if s > max_top_len || s > max_bottom_len {
            break;
        }
        let mut tops = Vec::new();
        for len in s..=max_top_len {
            canonical_tops(len, s, &mut Vec::new(), &mut tops);
        }
        let mut bottoms = Vec::new();
        for len in s..=max_bottom_len {
            surjective_words(len, s, &mut Vec::new(), &mut bottoms);
        }
        for top in &tops {
            for bottom in &bottoms {
                out.push(Substitution { top: top.clone(), bottom: bottom.clone() });
            }
        }
    }
    out
}

/// Words of the given length whose letters first occur in the order
/// `1, 2, ...` and whose support is exactly `{1..=support}`.
fn canonical_tops(len: usize, support: usize, prefix: &mut Vec<u32>, out: &mut Vec<Word>) {
    let used = prefix.iter().copied().max().unwrap_or(0);
    if prefix.len() == len {
        if used as usize == support {
            out.push(Word::new(prefix.clone()));
        }
        return;
    }
    let limit = (used + 1).min(support as u32);
    for x in 1..=limit {
        prefix.push(x);
        canonical_tops(len, support, prefix, out);
        prefix.pop();
    }
}

/// Words of the given length over `{1..=support}` using every letter.
fn surjective_words(len: usize, support: usize, prefix: &mut Vec<u32>, out: &mut Vec<Word>) {
    if prefix.len() == len {
        let distinct: std::collections::BTreeSet<u32> = prefix.iter().copied().collect();
        if distinct.len() == support {
            out.push(Word::new(prefix.clone()));
        }
        return;
    }
    for x in 1..=support as u32 {
        prefix.push(x);
        surjective_words(len, support, prefix, out);
        prefix.pop();
    }
}

/// The embedding of the permutation Hopf algebra: top is the identity word,
/// bottom is the permutation. Its image is exactly the substitutions whose
/// top and bottom both have no repeated letters.
pub fn embed(t: &PermWord) -> Substitution {
    let n = t.len() as u32;
    Substitution::new(Word::new((1..=n).collect()), t.word().clone())
        .expect("a permutation word has full support")
}

/// Compose two substitution recipes: the result acts as `p` after `q`. Zero
/// unless the bottom of `q` and the top of `p` have equal length; otherwise a
/// single substitution, obtained by merging the letters of `q` that `p`'s
/// top pattern forces to agree.
pub fn subst_compose(p: &Substitution, q: &Substitution) -> LinComb<Substitution> {
    if q.bottom.len() != p.top.len() {
        return LinComb::zero();
    }
    // union-find over q's letters, seeded by p's top equalities
    let k = q.top.support().len() as u32;
    let mut parent: Vec<u32> = (0..=k).collect();
    fn find(parent: &mut Vec<u32>, x: u32) -> u32 {
        let mut x = x;
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    let mut first_pos: BTreeMap<u32, usize> = BTreeMap::new();
    for (i, &t) in p.top.letters().iter().enumerate() {
        match first_pos.entry(t) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(i);
            }
            std::collections::btree_map::Entry::Occupied(o) => {
                let j = *o.get();
                let a = find(&mut parent, q.bottom.letters()[i]);
                let b = find(&mut parent, q.bottom.letters()[j]);
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi as usize] = lo;
                }
            }
        }
    }
    let mut quotient = |x: u32| find(&mut parent, x);
    let new_top = Word::new(q.top.letters().iter().map(|&x| quotient(x)).collect());
    // p's letter at its first top position maps to the class of q's bottom there
    let induced: BTreeMap<u32, u32> = first_pos
        .iter()
        .map(|(&letter, &i)| (letter, quotient(q.bottom.letters()[i])))
        .collect();
    let new_bottom = Word::new(p.bottom.letters().iter().map(|x| induced[x]).collect());
    LinComb::basis(
        Substitution::new(new_top, new_bottom)
            .expect("every merge class contains a letter of both new words"),
    )
}
