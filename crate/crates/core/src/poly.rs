//! Graded variables, words and sparse noncommutative polynomials.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use thiserror::Error;

use crate::field::{FieldError, FieldSpec, Scalar};
use crate::group::GroupTable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("variable {var} has degree index {degree}, outside a group of order {order}")]
    InvalidDegree { var: String, degree: usize, order: usize },
    #[error("substitution for {var} has degree {got}, expected {expected}")]
    DegreeViolation { var: String, expected: String, got: String },
    #[error("image of {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("polynomial is not multilinear")]
    NotMultilinear,
    #[error("{0}")]
    Invalid(String),
}

/// Variable families, ordered `X < Y < Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    X,
    Y,
    Z,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::X => 'x',
            Family::Y => 'y',
            Family::Z => 'z',
        }
    }
}

/// `family{index}` of homogeneous degree `degree` (a group element index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedVariable {
    pub family: Family,
    pub index: u32,
    pub degree: usize,
}

impl GradedVariable {
    pub fn new(family: Family, index: u32, degree: usize) -> Self {
        GradedVariable { family, index, degree }
    }

    pub fn x(index: u32, degree: usize) -> Self {
        Self::new(Family::X, index, degree)
    }

    pub fn y(index: u32, degree: usize) -> Self {
        Self::new(Family::Y, index, degree)
    }

    pub fn z(index: u32, degree: usize) -> Self {
        Self::new(Family::Z, index, degree)
    }

    /// The same slot in another family.
    pub fn with_family(self, family: Family) -> Self {
        GradedVariable { family, ..self }
    }

    pub fn display(&self, group: &GroupTable) -> String {
        let label = if group.contains(self.degree) { group.label(self.degree).to_string() } else { format!("#{}", self.degree) };
        format!("{}{}{{{}}}", self.family.letter(), self.index, label)
    }
}

/// A monomial. Ordered by length first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<GradedVariable>);

impl Word {
    pub fn new(vars: Vec<GradedVariable>) -> Self {
        Word(vars)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn vars(&self) -> &[GradedVariable] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// True if no variable occurs twice.
    pub fn is_multilinear(&self) -> bool {
        let set: BTreeSet<&GradedVariable> = self.0.iter().collect();
        set.len() == self.0.len()
    }

    pub fn display(&self, group: &GroupTable) -> String {
        self.0.iter().map(|v| v.display(group)).collect::<Vec<_>>().join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn check_degree(v: &GradedVariable, group: &GroupTable) -> Result<(), PolyError> {
    if group.contains(v.degree) {
        Ok(())
    } else {
        Err(PolyError::InvalidDegree { var: format!("{}{}", v.family.letter(), v.index), degree: v.degree, order: group.order() })
    }
}

/// Ordered product of the variable degrees; the identity for the empty word.
pub fn word_degree(w: &Word, group: &GroupTable) -> Result<usize, PolyError> {
    let mut acc = group.identity();
    for v in w.vars() {
        check_degree(v, group)?;
        acc = group.mul(acc, v.degree);
    }
    Ok(acc)
}

/// Sparse polynomial: words mapped to nonzero scalars in canonical word order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedPolynomial {
    field: FieldSpec,
    terms: BTreeMap<Word, Scalar>,
}

impl GradedPolynomial {
    pub fn zero(field: FieldSpec) -> Self {
        GradedPolynomial { field, terms: BTreeMap::new() }
    }

    /// The constant `1` (empty word).
    pub fn one(field: FieldSpec) -> Self {
        Self::monomial(field, Word::empty(), field.one())
    }

    pub fn var(field: FieldSpec, v: GradedVariable) -> Self {
        Self::monomial(field, Word::new(vec![v]), field.one())
    }

    pub fn word(field: FieldSpec, w: Word) -> Self {
        Self::monomial(field, w, field.one())
    }

    pub fn monomial(field: FieldSpec, w: Word, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        GradedPolynomial { field, terms }
    }

    /// Sums duplicate words; coefficients are normalized into `field`.
    pub fn from_terms(field: FieldSpec, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Result<Self, PolyError> {
        let mut out = GradedPolynomial::zero(field);
        for (w, c) in terms {
            let c = field.normalize(&c)?;
            out.add_term(w, &c);
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let field = self.field;
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot = field.add(slot, c);
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn variables(&self) -> BTreeSet<GradedVariable> {
        self.terms.keys().flat_map(|w| w.vars().iter().copied()).collect()
    }

    /// Largest number of occurrences of a single variable in a single word.
    pub fn max_variable_degree(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|w| {
                let mut counts: BTreeMap<GradedVariable, usize> = BTreeMap::new();
                for v in w.vars() {
                    *counts.entry(*v).or_default() += 1;
                }
                counts.into_values()
            })
            .max()
            .unwrap_or(0)
    }

    /// Degree of every word if they all agree; `None` for mixed polynomials.
    /// The zero polynomial is homogeneous of every degree and yields the identity.
    pub fn homogeneous_degree(&self, group: &GroupTable) -> Result<Option<usize>, PolyError> {
        let mut deg = None;
        for w in self.terms.keys() {
            let d = word_degree(w, group)?;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return Ok(None),
                _ => {}
            }
        }
        Ok(Some(deg.unwrap_or(group.identity())))
    }

    pub fn check_degrees(&self, group: &GroupTable) -> Result<(), PolyError> {
        for w in self.terms.keys() {
            for v in w.vars() {
                check_degree(v, group)?;
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.field.ensure_same(&other.field)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&other.neg_poly())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.field.ensure_same(&other.field)?;
        let f = self.field;
        let mut out = GradedPolynomial::zero(f);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), &f.mul(a, b));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let f = self.field;
        let mut out = GradedPolynomial::zero(f);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), &f.mul(a, c));
        }
        out
    }

    fn neg_poly(&self) -> Self {
        self.scale(&self.field.from_i64(-1))
    }

    /// Applies a graded endomorphism given on variables; unmapped variables are fixed.
    /// Each image must be homogeneous of the degree of the variable it replaces.
    pub fn substitute(
        &self,
        sigma: &BTreeMap<GradedVariable, GradedPolynomial>,
        group: &GroupTable,
    ) -> Result<Self, PolyError> {
        for (v, img) in sigma {
            check_degree(v, group)?;
            self.field.ensure_same(&img.field)?;
            if img.is_zero() {
                continue;
            }
            match img.homogeneous_degree(group)? {
                Some(d) if d == v.degree => {}
                Some(d) => {
                    return Err(PolyError::DegreeViolation {
                        var: v.display(group),
                        expected: group.label(v.degree).to_string(),
                        got: group.label(d).to_string(),
                    })
                }
                None => return Err(PolyError::NotHomogeneous(v.display(group))),
            }
        }
        Ok(self.map_variables(|v| sigma.get(v).cloned()))
    }

    /// Replaces variables by polynomials (identity where `image` returns `None`),
    /// without any degree checks.
    pub(crate) fn map_variables(&self, image: impl Fn(&GradedVariable) -> Option<GradedPolynomial>) -> Self {
        let f = self.field;
        let mut out = GradedPolynomial::zero(f);
        for (w, c) in &self.terms {
            let mut acc = GradedPolynomial::monomial(f, Word::empty(), c.clone());
            for v in w.vars() {
                let img = image(v).unwrap_or_else(|| GradedPolynomial::var(f, *v));
                acc = &acc * &img;
                if acc.is_zero() {
                    break;
                }
            }
            for (w2, c2) in acc.terms {
                out.add_term(w2, &c2);
            }
        }
        out
    }

    /// Replaces every `x_i^(g)` by `y_i^(g) + z_i^(g)`.
    pub fn expand_x(&self) -> Self {
        let f = self.field;
        self.map_variables(|v| {
            (v.family == Family::X).then(|| {
                &GradedPolynomial::var(f, v.with_family(Family::Y)) + &GradedPolynomial::var(f, v.with_family(Family::Z))
            })
        })
    }

    /// True iff every word uses exactly the same variables, each once, and the
    /// per-degree variable counts equal `signature` (indexed by group element).
    pub fn is_multilinear(&self, signature: &[usize]) -> bool {
        if self.is_zero() {
            return true;
        }
        let vars = self.variables();
        let mut counts = vec![0usize; signature.len()];
        for v in &vars {
            if v.degree >= counts.len() {
                return false;
            }
            counts[v.degree] += 1;
        }
        counts == signature && self.words_span_all(&vars)
    }

    /// The per-degree variable counts if every word is a permutation of the
    /// variable set.
    pub fn multilinear_signature(&self, group: &GroupTable) -> Option<Vec<usize>> {
        let vars = self.variables();
        if !self.words_span_all(&vars) {
            return None;
        }
        let mut counts = vec![0usize; group.order()];
        for v in &vars {
            *counts.get_mut(v.degree)? += 1;
        }
        Some(counts)
    }

    fn words_span_all(&self, vars: &BTreeSet<GradedVariable>) -> bool {
        self.terms.keys().all(|w| w.len() == vars.len() && w.is_multilinear())
    }
}

impl Add for &GradedPolynomial {
    type Output = GradedPolynomial;

    /// Panics on a field mismatch; use [`GradedPolynomial::checked_add`] otherwise.
    fn add(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        self.checked_add(rhs).expect("field mismatch")
    }
}

impl Sub for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn sub(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        self.checked_sub(rhs).expect("field mismatch")
    }
}

impl Mul for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn mul(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        self.checked_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn neg(self) -> GradedPolynomial {
        self.neg_poly()
    }
}
