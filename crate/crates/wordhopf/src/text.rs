//! The shared text grammar for elements of every algebra: linear
//! combinations of basis literals with integer coefficients and an infix
//! tensor token.
//!
//! ```text
//! expr   := '0' | term (('+'|'-') term)*
//! term   := [int '*'] factor
//! factor := basis ['(x)' basis]
//! basis  := '1' | word | 'Z' word | '{' word '/' word '}'
//! word   := '[' [int (',' int)*] ']'
//! ```
//!
//! `1` denotes the unit basis element of the selected algebra, and printed
//! output renders the unit the same way, so parse and print round-trip.

use crate::dwha::Substitution;
use crate::lincomb::{render_lincomb, Coeff, LinComb, Tensor};
use crate::nsymm::NsymmMonomial;
use crate::words::{PermWord, Word};
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error: {0}")]
pub struct ParseError(pub String);

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

pub struct Cursor<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Cursor { input, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len()
            && self.input.as_bytes()[self.pos].is_ascii_whitespace()
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.input[self.pos..].chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.input[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            err(format!("expected `{token}` at `{}`", self.rest()))
        }
    }

    fn rest(&self) -> &str {
        &self.input[self.pos.min(self.input.len())..]
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.input.len()
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.input.as_bytes();
        let mut i = self.pos;
        if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
            i += 1;
        }
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == start || !bytes[start..i].iter().any(|b| b.is_ascii_digit()) {
            return err(format!("expected integer at `{}`", self.rest()));
        }
        self.pos = i;
        BigInt::from_str(&self.input[start..i]).map_err(|e| ParseError(e.to_string()))
    }

    fn letter(&mut self) -> Result<u32, ParseError> {
        let v = self.integer()?;
        match u32::try_from(&v) {
            Ok(x) if x >= 1 => Ok(x),
            _ => err(format!("letter out of range: {v}")),
        }
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        self.expect("[")?;
        let mut letters = Vec::new();
        if !self.eat("]") {
            loop {
                letters.push(self.letter()?);
                if self.eat("]") {
                    break;
                }
                self.expect(",")?;
            }
        }
        Ok(Word::new(letters))
    }
}

/// How to read one basis literal of a particular algebra.
pub trait BasisSyntax: Sized + Ord + Clone + fmt::Display {
    fn parse_basis(cursor: &mut Cursor) -> Result<Self, ParseError>;
    fn unit() -> Self;
}

impl BasisSyntax for Word {
    fn parse_basis(cursor: &mut Cursor) -> Result<Self, ParseError> {
        if cursor.eat("1") {
            return Ok(Word::empty());
        }
        cursor.word()
    }
    fn unit() -> Self {
        Word::empty()
    }
}

impl BasisSyntax for PermWord {
    fn parse_basis(cursor: &mut Cursor) -> Result<Self, ParseError> {
        if cursor.eat("1") {
            return Ok(PermWord::identity(0));
        }
        let w = cursor.word()?;
        PermWord::new(w).map_err(|e| ParseError(e.to_string()))
    }
    fn unit() -> Self {
        PermWord::identity(0)
    }
}

impl BasisSyntax for NsymmMonomial {
    fn parse_basis(cursor: &mut Cursor) -> Result<Self, ParseError> {
        if cursor.eat("1") {
            return Ok(NsymmMonomial::one());
        }
        cursor.expect("Z")?;
        Ok(NsymmMonomial::new(cursor.word()?))
    }
    fn unit() -> Self {
        NsymmMonomial::one()
    }
}

impl BasisSyntax for Substitution {
    fn parse_basis(cursor: &mut Cursor) -> Result<Self, ParseError> {
        if cursor.eat("1") {
            return Ok(Substitution::empty());
        }
        cursor.expect("{")?;
        let top = cursor.word()?;
        cursor.expect("/")?;
        let bottom = cursor.word()?;
        cursor.expect("}")?;
        Substitution::new(top, bottom).map_err(|e| ParseError(e.to_string()))
    }
    fn unit() -> Self {
        Substitution::empty()
    }
}

impl<B: BasisSyntax> BasisSyntax for Tensor<B, B> {
    fn parse_basis(cursor: &mut Cursor) -> Result<Self, ParseError> {
        let left = B::parse_basis(cursor)?;
        cursor.expect("(x)")?;
        let right = B::parse_basis(cursor)?;
        Ok(Tensor::new(left, right))
    }
    fn unit() -> Self {
        Tensor::new(B::unit(), B::unit())
    }
}

/// Parse a full linear-combination expression.
pub fn parse_expr<B: BasisSyntax>(input: &str) -> Result<LinComb<B>, ParseError> {
    let mut cursor = Cursor::new(input);
    {
        // `0` alone denotes the zero combination
        let save = cursor.pos;
        if cursor.eat("0") && cursor.at_end() {
            return Ok(LinComb::zero());
        }
        cursor.pos = save;
    }
    let mut out = LinComb::zero();
    let mut sign = if cursor.eat("-") { -1 } else { 1 };
    loop {
        // a coefficient is an integer followed by `*`; a bare `1` is the
        // unit basis literal, handled by the basis parser after rollback
        let save = cursor.pos;
        let coeff = match cursor.peek() {
            Some(c) if c.is_ascii_digit() => {
                let v = cursor.integer()?;
                if cursor.eat("*") {
                    v
                } else {
                    cursor.pos = save;
                    BigInt::one()
                }
            }
            _ => BigInt::one(),
        };
        let basis = B::parse_basis(&mut cursor)?;
        out.add_term(basis, coeff * Coeff::from(sign));
        if cursor.at_end() {
            return Ok(out);
        }
        sign = next_sign(&mut cursor)?;
    }
}

fn next_sign(cursor: &mut Cursor) -> Result<i32, ParseError> {
    if cursor.eat("+") {
        Ok(1)
    } else if cursor.eat("-") {
        Ok(-1)
    } else {
        err(format!("expected `+` or `-` at `{}`", cursor.rest()))
    }
}

/// Parse a single basis literal (no coefficients, no sums).
pub fn parse_single<B: BasisSyntax>(input: &str) -> Result<B, ParseError> {
    let mut cursor = Cursor::new(input);
    let b = B::parse_basis(&mut cursor)?;
    if cursor.at_end() {
        Ok(b)
    } else {
        err(format!("unexpected trailing input `{}`", cursor.rest()))
    }
}

/// Serialize one basis element, with the algebra unit printed as `1`.
pub fn basis_str_with_unit<B: BasisSyntax>(b: &B) -> String {
    if *b == B::unit() {
        "1".to_string()
    } else {
        b.to_string()
    }
}

/// The terms of a combination as `(basis string, coefficient)` pairs in
/// display order.
pub fn sorted_terms<B: BasisSyntax>(lc: &LinComb<B>) -> Vec<(String, Coeff)> {
    let mut out: Vec<(String, Coeff)> = lc
        .iter()
        .map(|(b, c)| (basis_str_with_unit(b), c.clone()))
        .collect();
    out.sort();
    out
}

/// Tensor variant of [`sorted_terms`], substituting `1` on both sides.
pub fn sorted_tensor_terms<B: BasisSyntax>(lc: &LinComb<Tensor<B, B>>) -> Vec<(String, Coeff)> {
    let mut out: Vec<(String, Coeff)> = lc
        .iter()
        .map(|(t, c)| {
            (
                format!(
                    "{} (x) {}",
                    basis_str_with_unit(&t.left),
                    basis_str_with_unit(&t.right)
                ),
                c.clone(),
            )
        })
        .collect();
    out.sort();
    out
}

/// Render with the algebra unit printed as `1`.
pub fn display_with_unit<B: BasisSyntax>(lc: &LinComb<B>) -> String {
    render_lincomb(lc, basis_str_with_unit)
}

/// Render a combination of tensors with units printed as `1` on both sides.
pub fn display_tensor_with_unit<B: BasisSyntax>(lc: &LinComb<Tensor<B, B>>) -> String {
    let unit = B::unit();
    let side = |b: &B| {
        if *b == unit {
            "1".to_string()
        } else {
            b.to_string()
        }
    };
    render_lincomb(lc, |t| format!("{} (x) {}", side(&t.left), side(&t.right)))
}
