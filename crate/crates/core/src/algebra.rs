//! Finite-dimensional graded algebras by structure constants, and evaluation
//! of graded polynomials in them.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use thiserror::Error;

use crate::field::{FieldError, FieldSpec, Scalar};
use crate::group::{GroupError, GroupTable};
use crate::linalg::SparseVec;
use crate::parse::{parse_lie, ParseError};
use crate::poly::{GradedPolynomial, GradedVariable, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("algebra must have at least one basis vector")]
    Empty,
    #[error("basis has {labels} labels but {grading} degrees")]
    LabelMismatch { labels: usize, grading: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("basis vector {label} has invalid degree index {degree}")]
    BadDegree { label: String, degree: usize },
    #[error("grading incompatible: product ({i},{j}) has a component on basis vector {k} of the wrong degree")]
    GradingIncompatible { i: usize, j: usize, k: usize },
    #[error("not associative on basis triple ({i},{j},{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("value for {var} is not homogeneous of its degree")]
    DegreeViolation { var: String },
    #[error("no value assigned to {0}")]
    Unassigned(String),
    #[error("constant terms cannot be evaluated in a non-unital algebra")]
    ConstantTerm,
    #[error("vector has length {got}, expected {dim}")]
    VectorLength { got: usize, dim: usize },
    #[error("subspace is not homogeneous")]
    NotHomogeneous,
    #[error("subspace {0} is not closed under multiplication")]
    NotClosed(String),
    #[error("B is flagged as an ideal but {0} is not contained in B")]
    NotIdeal(String),
    #[error("B + C has dimension {got}, expected dim A = {dim}")]
    SumDeficient { got: usize, dim: usize },
}

/// `A = ⊕ A_g` with a homogeneous basis and sparse structure constants.
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    field: FieldSpec,
    group: GroupTable,
    labels: Vec<String>,
    grading: Vec<usize>,
    mult: HashMap<(usize, usize), SparseVec>,
    by_degree: Vec<Vec<usize>>,
}

impl GradedAlgebra {
    /// Builds the algebra and checks grading compatibility of every product.
    /// Products not listed are zero; repeated `(i, j)` entries are summed.
    pub fn new(
        field: FieldSpec,
        group: GroupTable,
        labels: Vec<String>,
        grading: Vec<usize>,
        products: impl IntoIterator<Item = ((usize, usize), SparseVec)>,
    ) -> Result<Self, ModelError> {
        let dim = labels.len();
        if dim == 0 {
            return Err(ModelError::Empty);
        }
        if grading.len() != dim {
            return Err(ModelError::LabelMismatch { labels: dim, grading: grading.len() });
        }
        for (i, &g) in grading.iter().enumerate() {
            if !group.contains(g) {
                return Err(ModelError::BadDegree { label: labels[i].clone(), degree: g });
            }
        }
        let mut mult: HashMap<(usize, usize), SparseVec> = HashMap::new();
        for ((i, j), v) in products {
            for idx in [i, j].into_iter().chain(v.support()) {
                if idx >= dim {
                    return Err(ModelError::IndexOutOfRange { index: idx, dim });
                }
            }
            let v = SparseVec::from_entries(
                &field,
                v.entries().iter().map(|(k, c)| field.normalize(c).map(|c| (*k, c))).collect::<Result<Vec<_>, _>>()?,
            );
            let slot = mult.entry((i, j)).or_default();
            *slot = slot.add(&field, &v);
        }
        mult.retain(|_, v| !v.is_zero());
        for (&(i, j), v) in &mult {
            let want = group.mul(grading[i], grading[j]);
            if let Some(k) = v.support().find(|&k| grading[k] != want) {
                return Err(ModelError::GradingIncompatible { i, j, k });
            }
        }
        let mut by_degree = vec![Vec::new(); group.order()];
        for (i, &g) in grading.iter().enumerate() {
            by_degree[g].push(i);
        }
        Ok(GradedAlgebra { field, group, labels, grading, mult, by_degree })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn grading(&self) -> &[usize] {
        &self.grading
    }

    pub fn degree_of(&self, i: usize) -> usize {
        self.grading[i]
    }

    /// Basis indices of degree `g`.
    pub fn component_indices(&self, g: usize) -> &[usize] {
        &self.by_degree[g]
    }

    pub fn component_dim(&self, g: usize) -> usize {
        self.by_degree[g].len()
    }

    /// Basis of `A_g` as unit vectors.
    pub fn component_basis(&self, g: usize) -> Vec<SparseVec> {
        self.by_degree[g].iter().map(|&i| SparseVec::unit(i)).collect()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Option<&SparseVec> {
        self.mult.get(&(i, j))
    }

    /// Nonzero basis products.
    pub fn structure_constants(&self) -> impl Iterator<Item = (&(usize, usize), &SparseVec)> {
        self.mult.iter()
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        if a.is_zero() || b.is_zero() {
            return SparseVec::zero();
        }
        let f = &self.field;
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, x) in a.entries() {
            for (j, y) in b.entries() {
                if let Some(p) = self.mult.get(&(*i, *j)) {
                    let c = f.mul(x, y);
                    for (k, z) in p.entries() {
                        let slot = acc.entry(*k).or_insert_with(Scalar::zero);
                        *slot = f.add(slot, &f.mul(&c, z));
                    }
                }
            }
        }
        SparseVec::from_sorted_unchecked(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    /// The degree of `v` if it is supported on a single component; zero is
    /// homogeneous of every degree and yields `None`.
    pub fn homogeneous_degree(&self, v: &SparseVec) -> Option<usize> {
        let mut it = v.support().map(|i| self.grading[i]);
        let first = it.next()?;
        it.all(|g| g == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, v: &SparseVec, g: usize) -> bool {
        v.support().all(|i| self.grading[i] == g)
    }

    /// Normalizes a vector's entries into the field and checks its length.
    pub fn vector(&self, dense: &[Scalar]) -> Result<SparseVec, ModelError> {
        if dense.len() != self.dim() {
            return Err(ModelError::VectorLength { got: dense.len(), dim: self.dim() });
        }
        let entries = dense
            .iter()
            .enumerate()
            .map(|(i, c)| self.field.normalize(c).map(|c| (i, c)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SparseVec::from_entries(&self.field, entries))
    }

    /// Exhaustive check of `(e_i e_j) e_k = e_i (e_j e_k)`, skipping triples
    /// where both sides vanish for structural reasons.
    pub fn check_associative(&self) -> Result<(), ModelError> {
        let m = self.dim();
        let check = |i: usize, j: usize, k: usize| -> Result<(), ModelError> {
            let left = match self.mult.get(&(i, j)) {
                Some(ij) => self.mul(ij, &SparseVec::unit(k)),
                None => SparseVec::zero(),
            };
            let right = match self.mult.get(&(j, k)) {
                Some(jk) => self.mul(&SparseVec::unit(i), jk),
                None => SparseVec::zero(),
            };
            if left == right {
                Ok(())
            } else {
                Err(ModelError::NotAssociative { i, j, k })
            }
        };
        let mut keys: Vec<(usize, usize)> = self.mult.keys().copied().collect();
        keys.sort_unstable();
        for &(i, j) in &keys {
            for k in 0..m {
                check(i, j, k)?;
            }
        }
        for &(j, k) in &keys {
            for i in 0..m {
                if !self.mult.contains_key(&(i, j)) {
                    check(i, j, k)?;
                }
            }
        }
        Ok(())
    }
}

/// Image of `f` under the graded homomorphism fixed by `assignment`.
pub fn evaluate(
    alg: &GradedAlgebra,
    f: &GradedPolynomial,
    assignment: &BTreeMap<GradedVariable, SparseVec>,
) -> Result<SparseVec, ModelError> {
    alg.field.ensure_same(&f.field())?;
    f.check_degrees(alg.group())?;
    for v in f.variables() {
        let val = assignment.get(&v).ok_or_else(|| ModelError::Unassigned(v.display(alg.group())))?;
        if !alg.is_homogeneous_of(val, v.degree) {
            return Err(ModelError::DegreeViolation { var: v.display(alg.group()) });
        }
    }
    evaluate_unchecked(alg, f, |v| &assignment[v])
}

/// Evaluation without homogeneity checks; consecutive words share prefix products.
pub(crate) fn evaluate_unchecked<'a>(
    alg: &GradedAlgebra,
    f: &GradedPolynomial,
    value: impl Fn(&GradedVariable) -> &'a SparseVec,
) -> Result<SparseVec, ModelError> {
    let field = alg.field();
    let mut stack: Vec<(GradedVariable, SparseVec)> = Vec::new();
    let mut total = SparseVec::zero();
    for (w, c) in f.terms() {
        if w.is_empty() {
            return Err(ModelError::ConstantTerm);
        }
        let vars = w.vars();
        let common = stack.iter().zip(vars).take_while(|((a, _), b)| a == *b).count();
        stack.truncate(common);
        for v in &vars[common..] {
            let next = match stack.last() {
                Some((_, p)) => alg.mul(p, value(v)),
                None => value(v).clone(),
            };
            stack.push((*v, next));
        }
        let prod = &stack.last().expect("nonempty word").1;
        total = total.add_scaled(&field, c, prod);
    }
    Ok(total)
}

/// Expands a Lie expression such as `[x1{1},x2{1}]` and evaluates it.
pub fn lie_evaluate(
    alg: &GradedAlgebra,
    expr: &str,
    assignment: &BTreeMap<GradedVariable, SparseVec>,
) -> Result<SparseVec, ModelError> {
    let f = parse_lie(expr, alg.group(), alg.field())?;
    evaluate(alg, &f, assignment)
}
