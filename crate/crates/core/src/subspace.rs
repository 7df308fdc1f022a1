//! Subspaces of a graded algebra and pairs of homogeneous subalgebras.

use crate::algebra::{GradedAlgebra, ModelError};
use crate::field::FieldSpec;
use crate::linalg::{Echelon, SparseVec};

/// A subspace kept in reduced echelon form, with its homogeneous components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<SparseVec>,
    homogeneous: bool,
    /// `S ∩ A_g` per degree when homogeneous.
    components: Vec<Vec<SparseVec>>,
    /// Set when the subspace is spanned by basis vectors of `A`.
    coordinate_mask: Option<Vec<bool>>,
}

impl Subspace {
    /// Span of arbitrary vectors of `A`.
    pub fn new(alg: &GradedAlgebra, vectors: &[SparseVec]) -> Result<Self, ModelError> {
        let field = alg.field();
        let mut ech = Echelon::for_field(&field);
        for v in vectors {
            if let Some(i) = v.support().find(|&i| i >= alg.dim()) {
                return Err(ModelError::IndexOutOfRange { index: i, dim: alg.dim() });
            }
            ech.insert(v)?;
        }
        let rows = ech.rref(&field);
        let k = alg.group().order();
        let mut components = Vec::with_capacity(k);
        let mut total = 0;
        for g in 0..k {
            let mut e = Echelon::for_field(&field);
            for r in &rows {
                let p = r.project(|i| alg.degree_of(i) == g);
                if !p.is_zero() {
                    e.insert(&p)?;
                }
            }
            total += e.rank();
            components.push(e.rref(&field));
        }
        let homogeneous = total == rows.len();
        if !homogeneous {
            components.clear();
        }
        Ok(Subspace { field, ambient: alg.dim(), rows, homogeneous, components, coordinate_mask: None })
    }

    /// Span of the basis vectors with the given indices (always homogeneous).
    pub fn from_basis_indices(alg: &GradedAlgebra, indices: impl IntoIterator<Item = usize>) -> Result<Self, ModelError> {
        let mut mask = vec![false; alg.dim()];
        for i in indices {
            if i >= alg.dim() {
                return Err(ModelError::IndexOutOfRange { index: i, dim: alg.dim() });
            }
            mask[i] = true;
        }
        let rows: Vec<SparseVec> = (0..alg.dim()).filter(|&i| mask[i]).map(SparseVec::unit).collect();
        let mut components = vec![Vec::new(); alg.group().order()];
        for (i, _) in mask.iter().enumerate().filter(|(_, m)| **m) {
            components[alg.degree_of(i)].push(SparseVec::unit(i));
        }
        Ok(Subspace {
            field: alg.field(),
            ambient: alg.dim(),
            rows,
            homogeneous: true,
            components,
            coordinate_mask: Some(mask),
        })
    }

    pub fn whole(alg: &GradedAlgebra) -> Self {
        Self::from_basis_indices(alg, 0..alg.dim()).expect("indices in range")
    }

    pub fn zero(alg: &GradedAlgebra) -> Self {
        Self::from_basis_indices(alg, std::iter::empty()).expect("no indices")
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// Basis of `S ∩ A_g`; requires a homogeneous subspace.
    pub fn component(&self, g: usize) -> Result<&[SparseVec], ModelError> {
        if !self.homogeneous {
            return Err(ModelError::NotHomogeneous);
        }
        Ok(&self.components[g])
    }

    pub fn contains(&self, v: &SparseVec) -> Result<bool, ModelError> {
        if let Some(mask) = &self.coordinate_mask {
            return Ok(v.support().all(|i| i < mask.len() && mask[i]));
        }
        let mut e = Echelon::for_field(&self.field);
        for r in &self.rows {
            e.insert(r)?;
        }
        Ok(e.contains(v)?)
    }

    fn membership(&self) -> Result<Membership<'_>, ModelError> {
        Ok(match &self.coordinate_mask {
            Some(mask) => Membership::Mask(mask),
            None => {
                let mut e = Echelon::for_field(&self.field);
                for r in &self.rows {
                    e.insert(r)?;
                }
                Membership::Echelon(e)
            }
        })
    }
}

enum Membership<'a> {
    Mask(&'a [bool]),
    Echelon(Echelon),
}

impl Membership<'_> {
    fn contains(&self, v: &SparseVec) -> Result<bool, ModelError> {
        match self {
            Membership::Mask(m) => Ok(v.support().all(|i| m[i])),
            Membership::Echelon(e) => Ok(e.contains(v)?),
        }
    }
}

/// Basis of `S ∩ A_g` for a subspace, or of `A_g` itself.
pub enum ComponentSource<'a> {
    Algebra(&'a GradedAlgebra),
    Subspace(&'a Subspace),
}

pub fn homogeneous_component(src: ComponentSource<'_>, g: usize) -> Result<Vec<SparseVec>, ModelError> {
    match src {
        ComponentSource::Algebra(a) => Ok(a.component_basis(g)),
        ComponentSource::Subspace(s) => Ok(s.component(g)?.to_vec()),
    }
}

/// Dimension of the sum of two subspaces.
pub fn sum_dim(field: &FieldSpec, a: &[SparseVec], b: &[SparseVec]) -> Result<usize, ModelError> {
    let mut e = Echelon::for_field(field);
    for v in a.iter().chain(b) {
        e.insert(v)?;
    }
    Ok(e.rank())
}

/// Homogeneous subalgebras `B`, `C` with `A = B + C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraPair {
    pub b: Subspace,
    pub c: Subspace,
    pub b_is_ideal: bool,
}

impl SubalgebraPair {
    pub fn new(b: Subspace, c: Subspace, b_is_ideal: bool) -> Self {
        SubalgebraPair { b, c, b_is_ideal }
    }

    pub fn intersection_dim(&self, field: &FieldSpec) -> Result<usize, ModelError> {
        let s = sum_dim(field, self.b.rows(), self.c.rows())?;
        Ok(self.b.dim() + self.c.dim() - s)
    }

    /// Checks homogeneity, closure, the ideal flag and `B + C = A`.
    pub fn validate(&self, alg: &GradedAlgebra) -> Result<(), ModelError> {
        for (name, s) in [("B", &self.b), ("C", &self.c)] {
            if !s.is_homogeneous() {
                return Err(ModelError::NotHomogeneous);
            }
            let mem = s.membership()?;
            for u in s.rows() {
                for v in s.rows() {
                    if !mem.contains(&alg.mul(u, v))? {
                        return Err(ModelError::NotClosed(name.to_string()));
                    }
                }
            }
        }
        if self.b_is_ideal {
            let mem = self.b.membership()?;
            for i in 0..alg.dim() {
                let e = SparseVec::unit(i);
                for v in self.b.rows() {
                    if !mem.contains(&alg.mul(&e, v))? {
                        return Err(ModelError::NotIdeal(format!("{} * b", alg.labels()[i])));
                    }
                    if !mem.contains(&alg.mul(v, &e))? {
                        return Err(ModelError::NotIdeal(format!("b * {}", alg.labels()[i])));
                    }
                }
            }
        }
        let got = sum_dim(&alg.field(), self.b.rows(), self.c.rows())?;
        if got != alg.dim() {
            return Err(ModelError::SumDeficient { got, dim: alg.dim() });
        }
        Ok(())
    }
}
