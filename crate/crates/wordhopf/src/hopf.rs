//! The language of graded connected Hopf algebras: the structure-map bundle,
//! generic convolution, the antipode recursion, and the exhaustive axiom and
//! duality checkers that turn definitions and theorems into executable tests.

use crate::lincomb::{tensor, Coeff, LinComb, Tensor};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

/// The structure maps of one algebra, bundled behind a basis type.
///
/// Implementations must be connected graded: the unit is the only degree-0
/// basis element the enumeration produces, and product/coproduct are
/// degree-homogeneous. The checkers below verify exactly these claims, so a
/// deliberately broken implementation is also a valid input.
pub trait HopfAlgebra {
    type Basis: Clone + Eq + Ord + Hash + fmt::Display + fmt::Debug;
    /// Finiteness knobs for `enumerate`; rendered into check reports.
    type Bounds: fmt::Display;

    fn name(&self) -> &'static str;
    fn unit(&self) -> Self::Basis;
    fn counit(&self, x: &Self::Basis) -> Coeff;
    fn degree(&self, x: &Self::Basis) -> usize;
    fn product(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;
    fn coproduct(&self, x: &Self::Basis) -> LinComb<Tensor<Self::Basis, Self::Basis>>;
    /// All basis elements within the bounds, in a deterministic order, no
    /// duplicates.
    fn enumerate(&self, bounds: &Self::Bounds) -> Vec<Self::Basis>;
}

/// A bilinear form given on basis elements; extends bilinearly, and pairs
/// tensors componentwise.
pub trait Pairing<B> {
    fn pair(&self, a: &B, b: &B) -> Coeff;
}

/// Product extended bilinearly to module elements.
pub fn product_lin<H: HopfAlgebra>(
    h: &H,
    a: &LinComb<H::Basis>,
    b: &LinComb<H::Basis>,
) -> LinComb<H::Basis> {
    let mut out = LinComb::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out.add_scaled(&(cx * cy), &h.product(x, y));
        }
    }
    out
}

/// Coproduct extended linearly.
pub fn coproduct_lin<H: HopfAlgebra>(
    h: &H,
    a: &LinComb<H::Basis>,
) -> LinComb<Tensor<H::Basis, H::Basis>> {
    a.lift(|x| h.coproduct(x))
}

/// The componentwise product on the tensor square: `(a (x) b)(c (x) d) =
/// ac (x) bd`, extended bilinearly.
pub fn tensor_square_product<H: HopfAlgebra>(
    h: &H,
    u: &LinComb<Tensor<H::Basis, H::Basis>>,
    v: &LinComb<Tensor<H::Basis, H::Basis>>,
) -> LinComb<Tensor<H::Basis, H::Basis>> {
    let mut out = LinComb::zero();
    for (s, cs) in u.iter() {
        for (t, ct) in v.iter() {
            let left = h.product(&s.left, &t.left);
            let right = h.product(&s.right, &t.right);
            out.add_scaled(&(cs * ct), &tensor(&left, &right));
        }
    }
    out
}

/// The convolution `m . (f (x) g) . mu` of two basis-level maps, applied
/// to a basis element.
pub fn convolution<H, F, G>(h: &H, mut f: F, mut g: G, x: &H::Basis) -> LinComb<H::Basis>
where
    H: HopfAlgebra,
    F: FnMut(&H::Basis) -> LinComb<H::Basis>,
    G: FnMut(&H::Basis) -> LinComb<H::Basis>,
{
    let mut out = LinComb::zero();
    for (t, c) in h.coproduct(x).iter() {
        out.add_scaled(c, &product_lin(h, &f(&t.left), &g(&t.right)));
    }
    out
}

/// Memoized antipode computed by the connected-graded recursion: the antipode
/// of the unit is the unit, and for positive degree
/// `iota(x) = -x - sum iota(x') * x''` over the proper terms of the coproduct.
///
/// The table is owned by one caller; identical results are produced
/// regardless of the order elements are requested in.
pub struct AntipodeTable<'a, H: HopfAlgebra> {
    alg: &'a H,
    memo: HashMap<H::Basis, LinComb<H::Basis>>,
}

impl<'a, H: HopfAlgebra> AntipodeTable<'a, H> {
    pub fn new(alg: &'a H) -> Self {
        AntipodeTable { alg, memo: HashMap::new() }
    }

    pub fn get(&mut self, x: &H::Basis) -> LinComb<H::Basis> {
        if let Some(v) = self.memo.get(x) {
            return v.clone();
        }
        let result = if self.alg.degree(x) == 0 {
            LinComb::basis(x.clone())
        } else {
            let mut acc = LinComb::basis(x.clone()).neg();
            for (t, c) in self.alg.coproduct(x).iter() {
                if self.alg.degree(&t.left) > 0 && self.alg.degree(&t.right) > 0 {
                    let s = self.get(&t.left);
                    let prod = product_lin(self.alg, &s, &LinComb::basis(t.right.clone()));
                    acc.add_scaled(&-c.clone(), &prod);
                }
            }
            acc
        };
        self.memo.insert(x.clone(), result.clone());
        result
    }
}

/// One-shot antipode of a basis element.
pub fn antipode<H: HopfAlgebra>(h: &H, x: &H::Basis) -> LinComb<H::Basis> {
    AntipodeTable::new(h).get(x)
}

/// One failed law instance, with both evaluated sides serialized for diffing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: String,
    pub elements: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "VIOLATION {} {} lhs={} rhs={}",
            self.law, self.elements, self.lhs, self.rhs
        )
    }
}

/// The outcome of one exhaustive check: all violations found within the
/// bounds, in enumeration order. Empty means pass.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check: String,
    pub algebra: String,
    pub bounds: String,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    fn new(check: &str, algebra: &str, bounds: String) -> Self {
        CheckReport {
            check: check.to_string(),
            algebra: algebra.to_string(),
            bounds,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// The one-line `CHECK ...` summary, without the violation lines.
    pub fn summary(&self) -> String {
        format!(
            "CHECK {} {} {} {} {}",
            self.check,
            self.algebra,
            self.bounds,
            if self.passed() { "PASS" } else { "FAIL" },
            self.violations.len()
        )
    }

    fn record<A: fmt::Display, L: fmt::Display, R: fmt::Display>(
        &mut self,
        law: &str,
        elements: A,
        lhs: &L,
        rhs: &R,
    ) {
        self.violations.push(Violation {
            law: law.to_string(),
            elements: elements.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        write!(f, "{}", self.summary())
    }
}

fn unit_counit<H: HopfAlgebra>(h: &H, x: &H::Basis) -> LinComb<H::Basis> {
    LinComb::term(h.unit(), h.counit(x))
}

/// Associativity and the two-sided unit law on all enumerated pairs/triples.
pub fn check_assoc<H: HopfAlgebra>(h: &H, bounds: &H::Bounds) -> CheckReport {
    let mut report = CheckReport::new("assoc", h.name(), bounds.to_string());
    let elems = h.enumerate(bounds);
    let unit = LinComb::basis(h.unit());
    for a in &elems {
        let la = LinComb::basis(a.clone());
        let left = product_lin(h, &unit, &la);
        if left != la {
            report.record("unit-left", a, &left, &la);
        }
        let right = product_lin(h, &la, &unit);
        if right != la {
            report.record("unit-right", a, &right, &la);
        }
    }
    for a in &elems {
        for b in &elems {
            let ab = h.product(a, b);
            for c in &elems {
                let lhs = product_lin(h, &ab, &LinComb::basis(c.clone()));
                let rhs = product_lin(h, &LinComb::basis(a.clone()), &h.product(b, c));
                if lhs != rhs {
                    report.record("assoc", format!("({a},{b},{c})"), &lhs, &rhs);
                }
            }
        }
    }
    report
}

/// Coassociativity and both counit laws on every enumerated basis element.
pub fn check_coassoc<H: HopfAlgebra>(h: &H, bounds: &H::Bounds) -> CheckReport {
    let mut report = CheckReport::new("coassoc", h.name(), bounds.to_string());
    for x in h.enumerate(bounds) {
        let mu = h.coproduct(&x);
        // both sides flattened to right-nested triples
        let lhs: LinComb<Tensor<H::Basis, Tensor<H::Basis, H::Basis>>> = mu.lift(|t| {
            h.coproduct(&t.left).lift(|s| {
                LinComb::basis(Tensor::new(
                    s.left.clone(),
                    Tensor::new(s.right.clone(), t.right.clone()),
                ))
            })
        });
        let rhs: LinComb<Tensor<H::Basis, Tensor<H::Basis, H::Basis>>> = mu.lift(|t| {
            h.coproduct(&t.right)
                .lift(|s| LinComb::basis(Tensor::new(t.left.clone(), s.clone())))
        });
        if lhs != rhs {
            report.record("coassoc", &x, &lhs, &rhs);
        }

        let expected = LinComb::basis(x.clone());
        let counit_left: LinComb<H::Basis> =
            mu.lift(|t| LinComb::term(t.right.clone(), h.counit(&t.left)));
        if counit_left != expected {
            report.record("counit-left", &x, &counit_left, &expected);
        }
        let counit_right: LinComb<H::Basis> =
            mu.lift(|t| LinComb::term(t.left.clone(), h.counit(&t.right)));
        if counit_right != expected {
            report.record("counit-right", &x, &counit_right, &expected);
        }
    }
    report
}

/// The bialgebra compatibility: the coproduct and counit are algebra
/// morphisms, and the unit is a coalgebra morphism.
pub fn check_bialgebra<H: HopfAlgebra>(h: &H, bounds: &H::Bounds) -> CheckReport {
    let mut report = CheckReport::new("bialgebra", h.name(), bounds.to_string());
    let unit = h.unit();
    let unit_coprod = h.coproduct(&unit);
    let unit_expected = LinComb::basis(Tensor::new(unit.clone(), unit.clone()));
    if unit_coprod != unit_expected {
        report.record("coproduct-of-unit", &unit, &unit_coprod, &unit_expected);
    }
    if h.counit(&unit) != Coeff::one() {
        report.record(
            "counit-of-unit",
            &unit,
            &h.counit(&unit),
            &Coeff::one(),
        );
    }
    let elems = h.enumerate(bounds);
    for a in &elems {
        let mu_a = h.coproduct(a);
        for b in &elems {
            let ab = h.product(a, b);
            let lhs = coproduct_lin(h, &ab);
            let rhs = tensor_square_product(h, &mu_a, &h.coproduct(b));
            if lhs != rhs {
                report.record("coproduct-multiplicative", format!("({a},{b})"), &lhs, &rhs);
            }
            let eps_ab: Coeff = ab.iter().map(|(x, c)| c * h.counit(x)).sum();
            let eps_prod = h.counit(a) * h.counit(b);
            if eps_ab != eps_prod {
                report.record("counit-multiplicative", format!("({a},{b})"), &eps_ab, &eps_prod);
            }
        }
    }
    report
}

/// Both convolution identities `conv(id, iota) = conv(iota, id) = e . eps`
/// with the antipode computed by the degree recursion.
pub fn check_antipode<H: HopfAlgebra>(h: &H, bounds: &H::Bounds) -> CheckReport {
    let mut report = CheckReport::new("antipode", h.name(), bounds.to_string());
    let mut table = AntipodeTable::new(h);
    for x in h.enumerate(bounds) {
        let mu = h.coproduct(&x);
        let expected = unit_counit(h, &x);
        let mut id_then_s = LinComb::zero();
        let mut s_then_id = LinComb::zero();
        for (t, c) in mu.iter() {
            let s_right = table.get(&t.right);
            id_then_s.add_scaled(
                c,
                &product_lin(h, &LinComb::basis(t.left.clone()), &s_right),
            );
            let s_left = table.get(&t.left);
            s_then_id.add_scaled(
                c,
                &product_lin(h, &s_left, &LinComb::basis(t.right.clone())),
            );
        }
        if id_then_s != expected {
            report.record("conv(id,antipode)", &x, &id_then_s, &expected);
        }
        if s_then_id != expected {
            report.record("conv(antipode,id)", &x, &s_then_id, &expected);
        }
    }
    report
}

/// Degree homogeneity of product and coproduct, connectedness of the
/// enumerated degree-0 slice, and vanishing of the counit in positive degree.
pub fn check_grading<H: HopfAlgebra>(h: &H, bounds: &H::Bounds) -> CheckReport {
    let mut report = CheckReport::new("grading", h.name(), bounds.to_string());
    let unit = h.unit();
    if h.degree(&unit) != 0 {
        report.record("unit-degree", &unit, &h.degree(&unit), &0);
    }
    let elems = h.enumerate(bounds);
    for x in &elems {
        if h.degree(x) == 0 && *x != unit {
            report.record("connected", x, &"degree-0 element", &"unit only");
        }
        if h.degree(x) > 0 && !h.counit(x).is_zero() {
            report.record("counit-positive-degree", x, &h.counit(x), &Coeff::zero());
        }
        for (t, _) in h.coproduct(x).iter() {
            if h.degree(&t.left) + h.degree(&t.right) != h.degree(x) {
                report.record("coproduct-homogeneous", x, t, &h.degree(x));
            }
        }
    }
    for a in &elems {
        for b in &elems {
            let expected = h.degree(a) + h.degree(b);
            for (w, _) in h.product(a, b).iter() {
                if h.degree(w) != expected {
                    report.record("product-homogeneous", format!("({a},{b})"), w, &expected);
                }
            }
        }
    }
    report
}

/// The adjointness `<m(a (x) b), c> = <a (x) b, mu(c)>` for all enumerated
/// triples, with the tensor-side pairing the product of component pairings.
pub fn check_selfdual<H: HopfAlgebra, P: Pairing<H::Basis>>(
    h: &H,
    p: &P,
    bounds: &H::Bounds,
) -> CheckReport {
    let mut report = CheckReport::new("selfdual", h.name(), bounds.to_string());
    let elems = h.enumerate(bounds);
    let coproducts: Vec<LinComb<Tensor<H::Basis, H::Basis>>> =
        elems.iter().map(|c| h.coproduct(c)).collect();
    for a in &elems {
        for b in &elems {
            let ab = h.product(a, b);
            for (c, mu_c) in elems.iter().zip(coproducts.iter()) {
                let lhs: Coeff = ab.iter().map(|(w, k)| k * p.pair(w, c)).sum();
                let rhs: Coeff = mu_c
                    .iter()
                    .map(|(t, k)| k * p.pair(a, &t.left) * p.pair(b, &t.right))
                    .sum();
                if lhs != rhs {
                    report.record("selfdual", format!("({a},{b},{c})"), &lhs, &rhs);
                }
            }
        }
    }
    report
}

/// The standard verification battery for one algebra. Self-duality is run
/// separately where a pairing exists.
pub fn check_all<H: HopfAlgebra>(h: &H, bounds: &H::Bounds) -> Vec<CheckReport> {
    vec![
        check_grading(h, bounds),
        check_coassoc(h, bounds),
        check_bialgebra(h, bounds),
        check_antipode(h, bounds),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shuffle_algebra::{ShuffleAlgebra, WeightBound};
    use crate::word;
    use crate::words::Word;

    /// Shuffle with the final cut dropped from every coproduct of a word of
    /// positive length: a negative control for the checkers.
    struct BrokenCoproduct;

    impl HopfAlgebra for BrokenCoproduct {
        type Basis = Word;
        type Bounds = WeightBound;
        fn name(&self) -> &'static str {
            "broken"
        }
        fn unit(&self) -> Word {
            Word::empty()
        }
        fn counit(&self, x: &Word) -> Coeff {
            ShuffleAlgebra.counit(x)
        }
        fn degree(&self, x: &Word) -> usize {
            ShuffleAlgebra.degree(x)
        }
        fn product(&self, a: &Word, b: &Word) -> LinComb<Word> {
            ShuffleAlgebra.product(a, b)
        }
        fn coproduct(&self, x: &Word) -> LinComb<Tensor<Word, Word>> {
            let mut cuts = x.cuts();
            if x.len() > 0 {
                cuts.pop();
            }
            cuts.into_iter()
                .map(|(a, b)| (Tensor::new(a, b), Coeff::one()))
                .collect()
        }
        fn enumerate(&self, bounds: &WeightBound) -> Vec<Word> {
            ShuffleAlgebra.enumerate(bounds)
        }
    }

    #[test]
    fn broken_fixture_is_caught() {
        let r = check_coassoc(&BrokenCoproduct, &WeightBound(2));
        assert!(!r.passed());
        assert!(r.to_string().contains("VIOLATION"));
        assert!(r.to_string().contains("FAIL"));
    }

    #[test]
    fn convolution_of_identities_on_shuffle() {
        let h = ShuffleAlgebra;
        let id = |b: &Word| LinComb::basis(b.clone());
        // m(mu([1])) = m(1 (x) [1] + [1] (x) 1) = 2*[1]
        let r = convolution(&h, id, id, &word![1]);
        assert_eq!(r, LinComb::term(word![1], Coeff::from(2)));
    }

    #[test]
    fn convolution_with_antipode_kills_degree_one() {
        let h = ShuffleAlgebra;
        let id = |b: &Word| LinComb::basis(b.clone());
        let s = |b: &Word| antipode(&h, b);
        assert!(convolution(&h, id, s, &word![1]).is_zero());
    }

    #[test]
    fn unit_counit_is_convolution_identity_on_unit() {
        let h = ShuffleAlgebra;
        let e = |b: &Word| unit_counit(&h, b);
        let r = convolution(&h, e, e, &Word::empty());
        assert_eq!(r, LinComb::basis(Word::empty()));
    }

    #[test]
    fn antipode_fixes_the_unit_and_respects_the_grading() {
        let h = ShuffleAlgebra;
        assert_eq!(antipode(&h, &Word::empty()), LinComb::basis(Word::empty()));
        let mut table = AntipodeTable::new(&h);
        for w in h.enumerate(&WeightBound(5)) {
            for (t, _) in table.get(&w).iter() {
                assert_eq!(h.degree(t), h.degree(&w), "antipode of {w}");
            }
        }
    }

    #[test]
    fn antipode_table_is_order_independent() {
        let h = ShuffleAlgebra;
        let elems = h.enumerate(&WeightBound(5));
        let mut forward = AntipodeTable::new(&h);
        let mut backward = AntipodeTable::new(&h);
        for w in elems.iter().rev() {
            backward.get(w);
        }
        for w in &elems {
            assert_eq!(forward.get(w), backward.get(w), "word {w}");
        }
    }

    #[test]
    fn report_lines_follow_the_wire_format() {
        let r = check_coassoc(&BrokenCoproduct, &WeightBound(1));
        let text = r.to_string();
        let mut lines = text.lines();
        let first = lines.next().unwrap();
        assert!(first.starts_with("VIOLATION "));
        assert!(first.contains(" lhs="));
        assert!(first.contains(" rhs="));
        let last = text.lines().last().unwrap();
        assert!(last.starts_with("CHECK coassoc broken weight<=1 FAIL "));
    }
}
