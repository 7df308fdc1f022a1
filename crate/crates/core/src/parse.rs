//! Text form of graded polynomials.
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! term   := coeff ["*" factor ("*" factor)*] | factor ("*" factor)*
//! factor := ("x"|"y"|"z") INT "{" LABEL "}"        | "[" poly "," poly "]"  (Lie form only)
//! coeff  := INT | INT "/" INT
//! ```
//!
//! Labels resolve against the group's element labels. Whitespace is ignored.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::field::{FieldSpec, Scalar};
use crate::group::GroupTable;
use crate::poly::{Family, GradedPolynomial, GradedVariable, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("at column {pos}: {message}")]
pub struct ParseError {
    /// 1-based character column.
    pub pos: usize,
    pub message: String,
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    group: &'a GroupTable,
    field: FieldSpec,
    lie: bool,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: at + 1, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => self.err(self.pos, format!("expected '{c}', found '{d}'")),
            None => self.err(self.pos, format!("expected '{c}', found end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected an integer");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits parse"))
    }

    fn poly(&mut self) -> Result<GradedPolynomial, ParseError> {
        let mut acc = GradedPolynomial::zero(self.field);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GradedPolynomial, ParseError> {
        let start = self.pos;
        let mut acc = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.coeff()?;
                let c = match self.field.normalize(&coeff) {
                    Ok(c) => c,
                    Err(e) => return self.err(start, e.to_string()),
                };
                let mut acc = GradedPolynomial::monomial(self.field, Word::empty(), c);
                if self.peek() == Some('*') {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                acc
            }
            _ => self.factor()?,
        };
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn coeff(&mut self) -> Result<Scalar, ParseError> {
        let num = self.integer()?;
        if self.peek() == Some('/') {
            let at = self.pos;
            self.pos += 1;
            let den = self.integer()?;
            if den == BigInt::from(0) {
                return self.err(at, "zero denominator");
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn factor(&mut self) -> Result<GradedPolynomial, ParseError> {
        let family = match self.peek() {
            Some('x') => Family::X,
            Some('y') => Family::Y,
            Some('z') => Family::Z,
            Some('[') if self.lie => {
                self.pos += 1;
                let a = self.poly()?;
                self.expect(',')?;
                let b = self.poly()?;
                self.expect(']')?;
                return Ok(&(&a * &b) - &(&b * &a));
            }
            Some(c) => return self.err(self.pos, format!("expected a variable, found '{c}'")),
            None => return self.err(self.pos, "expected a variable, found end of input"),
        };
        let fam_at = self.pos;
        self.pos += 1;
        // the index must follow the family letter directly
        if !self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            return self.err(fam_at + 1, "expected a variable index");
        }
        let idx_at = self.pos;
        let index = self.integer()?;
        let index: u32 = match u32::try_from(&index) {
            Ok(i) if i >= 1 => i,
            _ => return self.err(idx_at, "variable index must be a positive 32-bit integer"),
        };
        self.expect('{')?;
        self.skip_ws();
        let label_at = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos] != '}' {
            self.pos += 1;
        }
        let label: String = self.chars[label_at..self.pos].iter().collect::<String>().trim().to_string();
        self.expect('}')?;
        let degree = match self.group.index_of(&label) {
            Ok(d) => d,
            Err(_) => return self.err(label_at, format!("unknown degree label {label:?}")),
        };
        Ok(GradedPolynomial::var(self.field, GradedVariable::new(family, index, degree)))
    }
}

fn run(text: &str, group: &GroupTable, field: FieldSpec, lie: bool) -> Result<GradedPolynomial, ParseError> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, group, field, lie };
    if p.peek().is_none() {
        return p.err(0, "empty polynomial");
    }
    let f = p.poly()?;
    if let Some(c) = p.peek() {
        return p.err(p.pos, format!("unexpected '{c}'"));
    }
    Ok(f)
}

pub fn parse_poly(text: &str, group: &GroupTable, field: FieldSpec) -> Result<GradedPolynomial, ParseError> {
    run(text, group, field, false)
}

/// Parses a polynomial that may contain Lie brackets `[a,b]`, expanded to `ab - ba`.
pub fn parse_lie(text: &str, group: &GroupTable, field: FieldSpec) -> Result<GradedPolynomial, ParseError> {
    run(text, group, field, true)
}

/// Canonical text: terms in word order, unit coefficients omitted.
pub fn print_poly(f: &GradedPolynomial, group: &GroupTable) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, c)) in f.terms().iter().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let body = w.display(group);
        if w.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&format!("{mag}*{body}"));
        }
    }
    out
}
