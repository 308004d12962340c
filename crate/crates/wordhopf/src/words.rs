//! Words over the positive integers and the combinatorics shared by every
//! algebra in the crate: concatenation, shuffles, cuts, good cuts, support,
//! height, standardization, pattern matching and support-restricted subwords.

use crate::lincomb::{Coeff, LinComb};
use crate::Error;
use std::collections::BTreeSet;
use std::fmt;

/// A finite sequence of positive-integer letters. The empty word is the
/// monoid unit under concatenation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u32>);

/// Build a word from letter literals: `word![3, 2, 7, 2, 4]`.
#[macro_export]
macro_rules! word {
    ($($x:expr),* $(,)?) => {
        $crate::words::Word::new(vec![$($x),*])
    };
}

impl Word {
    /// Letters must be >= 1.
    pub fn new(letters: Vec<u32>) -> Self {
        assert!(
            letters.iter().all(|&x| x >= 1),
            "word letters must be positive"
        );
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Every letter increased by `k`.
    pub fn shift(&self, k: u32) -> Word {
        Word(self.0.iter().map(|&x| x + k).collect())
    }

    /// Every letter decreased by `k`; letters must stay positive.
    pub fn unshift(&self, k: u32) -> Word {
        Word::new(self.0.iter().map(|&x| x - k).collect())
    }

    /// The set of distinct letters.
    pub fn support(&self) -> BTreeSet<u32> {
        self.0.iter().copied().collect()
    }

    /// Maximum letter; 0 for the empty word.
    pub fn height(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Sum of letters (the Shuffle/NSymm grading).
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    /// All `len + 1` prefix/suffix splits, in left-to-right order, including
    /// the two trivial cuts.
    pub fn cuts(&self) -> Vec<(Word, Word)> {
        (0..=self.len())
            .map(|i| (Word(self.0[..i].to_vec()), Word(self.0[i..].to_vec())))
            .collect()
    }

    /// The cuts whose two halves have disjoint supports. The trivial cuts
    /// are always good.
    pub fn good_cuts(&self) -> Vec<(Word, Word)> {
        self.cuts()
            .into_iter()
            .filter(|(a, b)| a.support().is_disjoint(&b.support()))
            .collect()
    }

    /// The subword of positions whose letter lies in `s`, in original order.
    pub fn restrict(&self, s: &BTreeSet<u32>) -> Word {
        Word(self.0.iter().copied().filter(|x| s.contains(x)).collect())
    }

    /// Equalities-only pattern matching: true iff the words have the same
    /// length and `self` is constant wherever `pattern` is. Extra equalities
    /// in `self` are allowed.
    pub fn matches(&self, pattern: &Word) -> bool {
        if self.len() != pattern.len() {
            return false;
        }
        let mut assigned: std::collections::BTreeMap<u32, u32> = Default::default();
        for (&p, &w) in pattern.0.iter().zip(self.0.iter()) {
            match assigned.entry(p) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(w);
                }
                std::collections::btree_map::Entry::Occupied(o) => {
                    if *o.get() != w {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Relabel a repeat-free word by the unique order-preserving bijection
    /// onto `{1, ..., len}`.
    pub fn standardize(&self) -> Result<PermWord, Error> {
        let support = self.support();
        if support.len() != self.len() {
            return Err(Error::RepeatedLetters);
        }
        let rank: std::collections::BTreeMap<u32, u32> = support
            .into_iter()
            .enumerate()
            .map(|(i, x)| (x, i as u32 + 1))
            .collect();
        let letters = self.0.iter().map(|x| rank[x]).collect();
        Ok(PermWord(Word(letters)))
    }

    /// True iff equal letters are contiguous (each letter's occurrences form
    /// a single run).
    pub fn is_run_word(&self) -> bool {
        let mut finished: BTreeSet<u32> = BTreeSet::new();
        let mut current: Option<u32> = None;
        for &x in &self.0 {
            if current == Some(x) {
                continue;
            }
            if let Some(c) = current {
                finished.insert(c);
            }
            if finished.contains(&x) {
                return false;
            }
            current = Some(x);
        }
        true
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// A word whose letters are exactly `{1, ..., m}`, each once; encodes the
/// permutation `i -> a_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermWord(Word);

impl PermWord {
    pub fn new(word: Word) -> Result<Self, Error> {
        let m = word.len() as u32;
        let support = word.support();
        let ok = support.len() == word.len() && support.iter().all(|&x| x <= m);
        if ok {
            Ok(PermWord(word))
        } else {
            Err(Error::NotAPermutation)
        }
    }

    pub fn identity(n: usize) -> Self {
        PermWord(Word((1..=n as u32).collect()))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The inverse permutation word: position `a_i` of the output holds `i`.
    pub fn inverse(&self) -> PermWord {
        let mut out = vec![0u32; self.len()];
        for (i, &x) in self.0.letters().iter().enumerate() {
            out[(x - 1) as usize] = i as u32 + 1;
        }
        PermWord(Word(out))
    }

    /// `(self . other)(i) = self(other(i))`; `None` on length mismatch.
    pub fn compose(&self, other: &PermWord) -> Option<PermWord> {
        if self.len() != other.len() {
            return None;
        }
        let letters = other
            .0
            .letters()
            .iter()
            .map(|&b| self.0.letters()[(b - 1) as usize])
            .collect();
        Some(PermWord(Word(letters)))
    }
}

impl fmt::Display for PermWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Sum over all interleavings of `a` and `b` preserving the internal order of
/// each, with multiplicities; total coefficient mass is `C(|a|+|b|, |a|)`.
pub fn shuffle(a: &Word, b: &Word) -> LinComb<Word> {
    let mut out = LinComb::zero();
    let mut prefix = Vec::with_capacity(a.len() + b.len());
    shuffle_rec(a.letters(), b.letters(), &mut prefix, &mut out);
    out
}

fn shuffle_rec(a: &[u32], b: &[u32], prefix: &mut Vec<u32>, out: &mut LinComb<Word>) {
    if a.is_empty() && b.is_empty() {
        out.add_term(Word(prefix.clone()), Coeff::from(1));
        return;
    }
    if let Some((&x, rest)) = a.split_first() {
        prefix.push(x);
        shuffle_rec(rest, b, prefix, out);
        prefix.pop();
    }
    if let Some((&y, rest)) = b.split_first() {
        prefix.push(y);
        shuffle_rec(a, rest, prefix, out);
        prefix.pop();
    }
}

/// All words with positive letters and weight (letter sum) at most
/// `max_weight`, ordered by weight then lexicographically. These are the
/// compositions of `0..=max_weight`.
pub fn compositions_up_to_weight(max_weight: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for w in 1..=max_weight {
        let mut buf = Vec::new();
        compositions_of(w as u32, &mut Vec::new(), &mut buf);
        out.extend(buf);
    }
    out
}

fn compositions_of(remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Word>) {
    if remaining == 0 {
        out.push(Word(prefix.clone()));
        return;
    }
    for first in 1..=remaining {
        prefix.push(first);
        compositions_of(remaining - first, prefix, out);
        prefix.pop();
    }
}

/// All words of length at most `max_len` over the alphabet `{1..=max_letter}`,
/// ordered by length then lexicographically.
pub fn words_up_to(max_len: usize, max_letter: u32) -> Vec<Word> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        let mut current = Vec::with_capacity(len);
        words_of_len(len, max_letter, &mut current, &mut out);
    }
    out
}

fn words_of_len(len: usize, max_letter: u32, current: &mut Vec<u32>, out: &mut Vec<Word>) {
    if current.len() == len {
        out.push(Word(current.clone()));
        return;
    }
    for x in 1..=max_letter {
        current.push(x);
        words_of_len(len, max_letter, current, out);
        current.pop();
    }
}

/// All permutation words of length `0..=max_len`, ordered by length then
/// lexicographically.
pub fn permutations_up_to(max_len: usize) -> Vec<PermWord> {
    use itertools::Itertools;
    let mut out = vec![PermWord(Word::empty())];
    for n in 1..=max_len {
        for p in (1..=n as u32).permutations(n) {
            out.push(PermWord(Word(p)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn concat_examples() {
        assert_eq!(
            word![4, 3, 5, 1].concat(&word![7, 1, 1]),
            word![4, 3, 5, 1, 7, 1, 1]
        );
        let w = word![2, 9];
        assert_eq!(Word::empty().concat(&w), w);
        assert_eq!(w.concat(&Word::empty()), w);
    }

    #[test]
    fn shuffle_with_multiplicities() {
        let r = shuffle(&word![1], &word![1, 1, 1]);
        assert_eq!(r, LinComb::term(word![1, 1, 1, 1], Coeff::from(4)));
    }

    #[test]
    fn shuffle_two_by_two() {
        // [a,b] x [c,d] with a,b,c,d = 1,2,3,4
        let r = shuffle(&word![1, 2], &word![3, 4]);
        let expected: LinComb<Word> = [
            word![1, 2, 3, 4],
            word![1, 3, 2, 4],
            word![1, 3, 4, 2],
            word![3, 1, 2, 4],
            word![3, 1, 4, 2],
            word![3, 4, 1, 2],
        ]
        .into_iter()
        .map(|w| (w, Coeff::from(1)))
        .collect();
        assert_eq!(r, expected);
    }

    #[test]
    fn shuffle_empty_factor() {
        let w = word![5, 1];
        assert_eq!(shuffle(&Word::empty(), &w), LinComb::basis(w.clone()));
        assert_eq!(shuffle(&w, &Word::empty()), LinComb::basis(w));
    }

    #[test]
    fn cuts_examples() {
        assert_eq!(
            word![4, 3, 5, 1].cuts(),
            vec![
                (word![], word![4, 3, 5, 1]),
                (word![4], word![3, 5, 1]),
                (word![4, 3], word![5, 1]),
                (word![4, 3, 5], word![1]),
                (word![4, 3, 5, 1], word![]),
            ]
        );
        assert_eq!(Word::empty().cuts(), vec![(word![], word![])]);
        assert_eq!(word![7].cuts(), vec![(word![], word![7]), (word![7], word![])]);
    }

    #[test]
    fn good_cuts_examples() {
        assert_eq!(
            word![2, 3, 2, 4, 1].good_cuts(),
            vec![
                (word![], word![2, 3, 2, 4, 1]),
                (word![2, 3, 2], word![4, 1]),
                (word![2, 3, 2, 4], word![1]),
                (word![2, 3, 2, 4, 1], word![]),
            ]
        );
        assert_eq!(
            word![1, 1].good_cuts(),
            vec![(word![], word![1, 1]), (word![1, 1], word![])]
        );
        // distinct supports: every cut is good
        assert_eq!(word![1, 2].good_cuts(), word![1, 2].cuts());
    }

    #[test]
    fn support_and_height() {
        assert_eq!(
            word![1, 2, 1, 3, 3, 1, 4].support(),
            [1, 2, 3, 4].into_iter().collect()
        );
        assert!(Word::empty().support().is_empty());
        assert_eq!(word![5, 5, 5].support(), [5].into_iter().collect());
        assert_eq!(word![3, 2, 7, 2, 4].height(), 7);
        assert_eq!(Word::empty().height(), 0);
        assert_eq!(word![1, 1].height(), 1);
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(word![5, 2, 1, 8].standardize().unwrap().word(), &word![3, 2, 1, 4]);
        assert_eq!(word![4, 5, 2].standardize().unwrap().word(), &word![2, 3, 1]);
        assert_eq!(Word::empty().standardize().unwrap().word(), &word![]);
        assert_eq!(word![2, 2].standardize(), Err(Error::RepeatedLetters));
    }

    #[test]
    fn matches_equalities_only() {
        let pattern = word![1, 2, 1, 3, 3, 1, 4];
        assert!(word![9, 8, 9, 5, 5, 9, 7].matches(&pattern));
        // extra equality allowed
        assert!(word![9, 9, 9, 5, 5, 9, 7].matches(&pattern));
        assert!(!word![1, 2].matches(&word![1, 1]));
        assert!(!word![1, 2].matches(&word![1]));
    }

    #[test]
    fn restrict_examples() {
        let w = word![1, 2, 1, 3, 3, 1, 4, 1, 4];
        assert_eq!(w.restrict(&[2, 3].into_iter().collect()), word![2, 3, 3]);
        assert_eq!(
            w.restrict(&[1, 4].into_iter().collect()),
            word![1, 1, 1, 4, 1, 4]
        );
        assert_eq!(w.restrict(&BTreeSet::new()), word![]);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(word![3, 2, 1].shift(1), word![4, 3, 2]);
        assert_eq!(word![2, 9].shift(0), word![2, 9]);
        assert_eq!(Word::empty().shift(5), Word::empty());
    }

    #[test]
    fn perm_word_validation_and_inverse() {
        assert!(PermWord::new(word![2, 3, 1]).is_ok());
        assert_eq!(PermWord::new(word![1, 3]), Err(Error::NotAPermutation));
        assert_eq!(PermWord::new(word![1, 1]), Err(Error::NotAPermutation));
        let p = PermWord::new(word![2, 3, 1]).unwrap();
        assert_eq!(p.inverse().word(), &word![3, 1, 2]);
        assert_eq!(p.compose(&p.inverse()).unwrap(), PermWord::identity(3));
    }

    #[test]
    fn run_word_predicate() {
        assert!(word![1, 1, 2, 3, 4, 4, 4].is_run_word());
        assert!(Word::empty().is_run_word());
        assert!(!word![1, 2, 1].is_run_word());
        assert!(!word![2, 1, 1, 2].is_run_word());
    }

    #[test]
    fn enumeration_counts() {
        // 2^(w-1) compositions of w
        assert_eq!(compositions_up_to_weight(5).len(), 1 + 1 + 2 + 4 + 8 + 16);
        assert_eq!(permutations_up_to(4).len(), 1 + 1 + 2 + 6 + 24);
        assert_eq!(words_up_to(3, 3).len(), 1 + 3 + 9 + 27);
    }

    fn arb_word(max_len: usize, max_letter: u32) -> impl Strategy<Value = Word> {
        proptest::collection::vec(1..=max_letter, 0..=max_len).prop_map(Word::new)
    }

    /// The canonical equality pattern of a word: letters renumbered by first
    /// occurrence. Two words force each other under `matches` iff these agree.
    fn equality_pattern(w: &Word) -> Vec<u32> {
        let mut seen: std::collections::BTreeMap<u32, u32> = Default::default();
        let mut out = Vec::new();
        for &x in w.letters() {
            let next = seen.len() as u32 + 1;
            out.push(*seen.entry(x).or_insert(next));
        }
        out
    }

    proptest! {
        #[test]
        fn shuffle_commutes(a in arb_word(4, 4), b in arb_word(4, 4)) {
            prop_assert_eq!(shuffle(&a, &b), shuffle(&b, &a));
        }

        #[test]
        fn shuffle_assoc(a in arb_word(3, 3), b in arb_word(3, 3), c in arb_word(3, 3)) {
            let lhs = shuffle(&a, &b).lift(|w| shuffle(w, &c));
            let rhs = shuffle(&b, &c).lift(|w| shuffle(&a, w));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn shuffle_terms_preserve_length_and_mass(a in arb_word(4, 4), b in arb_word(4, 4)) {
            let r = shuffle(&a, &b);
            let total_len = a.len() + b.len();
            let mut expected_multiset: Vec<u32> = a.letters().iter().chain(b.letters()).copied().collect();
            expected_multiset.sort_unstable();
            for (w, _) in r.iter() {
                prop_assert_eq!(w.len(), total_len);
                let mut ms: Vec<u32> = w.letters().to_vec();
                ms.sort_unstable();
                prop_assert_eq!(&ms, &expected_multiset);
            }
            // total mass = C(m+n, m)
            let binom = {
                let mut v = Coeff::from(1);
                for i in 0..a.len() {
                    v = v * Coeff::from((total_len - i) as u64) / Coeff::from((i + 1) as u64);
                }
                v
            };
            prop_assert_eq!(r.coeff_sum(), binom);
        }

        #[test]
        fn cuts_reassemble(w in arb_word(6, 5)) {
            let cuts = w.cuts();
            prop_assert_eq!(cuts.len(), w.len() + 1);
            for (a, b) in &cuts {
                prop_assert_eq!(a.concat(b), w.clone());
            }
            let good = w.good_cuts();
            prop_assert!(good.iter().all(|c| cuts.contains(c)));
            if w.support().len() == w.len() {
                prop_assert_eq!(good, cuts);
            }
        }

        #[test]
        fn standardize_is_idempotent(w in arb_word(6, 9)) {
            if let Ok(st) = w.standardize() {
                let again = st.word().standardize().unwrap();
                prop_assert_eq!(&again, &st);
                // output is a permutation word by construction
                prop_assert!(PermWord::new(st.word().clone()).is_ok());
            }
        }

        #[test]
        fn mutual_match_means_same_pattern(a in arb_word(4, 3), b in arb_word(4, 3)) {
            if a.matches(&b) && b.matches(&a) {
                prop_assert_eq!(equality_pattern(&a), equality_pattern(&b));
            }
        }

        #[test]
        fn restrict_complement_interleaves(w in arb_word(6, 4), mask in proptest::collection::vec(any::<bool>(), 4)) {
            let support = w.support();
            let chosen: BTreeSet<u32> = support.iter().copied()
                .filter(|&x| mask[(x - 1) as usize]).collect();
            let rest: BTreeSet<u32> = support.difference(&chosen).copied().collect();
            prop_assert_eq!(w.restrict(&support), w.clone());
            let left = w.restrict(&chosen);
            let right = w.restrict(&rest);
            // merging the two complementary subwords by original position gives w back
            let mut li = left.letters().iter();
            let mut ri = right.letters().iter();
            for &x in w.letters() {
                if chosen.contains(&x) {
                    prop_assert_eq!(li.next(), Some(&x));
                } else {
                    prop_assert_eq!(ri.next(), Some(&x));
                }
            }
            prop_assert!(li.next().is_none() && ri.next().is_none());
        }
    }
}
