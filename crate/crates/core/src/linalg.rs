//! Sparse vectors and exact incremental row echelon forms.
//!
//! Over the rationals rows are kept as primitive integer vectors and reduced
//! fraction-free (`v <- p*v - c*row`, then divided by the content). Over a
//! prime field rows are kept monic in `u64` arithmetic. Both backends share
//! the same leading-column discipline: every stored row has a distinct
//! pivot equal to its first nonzero column.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::{inv_mod, mod_u64, mul_mod, FieldError, FieldSpec, Scalar};

/// Modulus used by the fast rank pre-filter (2^31 - 1).
pub const FILTER_PRIME: u64 = 2_147_483_647;

/// A sparse coordinate vector; entries sorted by index, no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Scalar::one())] }
    }

    /// Builds from unsorted entries, summing duplicates in `field`.
    pub fn from_entries(field: &FieldSpec, entries: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in entries {
            let slot = acc.entry(i).or_insert_with(Scalar::zero);
            *slot = field.add(slot, &c);
        }
        SparseVec { entries: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn from_dense(field: &FieldSpec, dense: &[Scalar]) -> Self {
        Self::from_entries(field, dense.iter().cloned().enumerate())
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn leading(&self) -> Option<usize> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|(i, _)| *i)
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn scale(&self, field: &FieldSpec, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, a)| (*i, field.mul(a, c)))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    /// `self + c * other`
    pub fn add_scaled(&self, field: &FieldSpec, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, field.mul(c, y)));
                        b.next();
                    } else {
                        let v = field.add(x, &field.mul(c, y));
                        if !v.is_zero() {
                            out.push((*i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, field.mul(c, y)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    pub fn add(&self, field: &FieldSpec, other: &SparseVec) -> SparseVec {
        self.add_scaled(field, &Scalar::one(), other)
    }

    pub fn sub(&self, field: &FieldSpec, other: &SparseVec) -> SparseVec {
        self.add_scaled(field, &field.from_i64(-1), other)
    }

    /// Keeps only the coordinates selected by `keep`.
    pub fn project(&self, keep: impl Fn(usize) -> bool) -> SparseVec {
        SparseVec { entries: self.entries.iter().filter(|(i, _)| keep(*i)).cloned().collect() }
    }

    /// Re-indexes coordinates by `shift`.
    pub fn shifted(&self, shift: usize) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, c)| (i + shift, c.clone())).collect() }
    }

    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        SparseVec { entries }
    }
}

/// Which arithmetic the echelon form runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    /// Fraction-free integer elimination (rational field).
    Integer,
    /// Elimination modulo `p`.
    Modular(u64),
}

impl Backend {
    pub fn exact_for(field: &FieldSpec) -> Backend {
        match field {
            FieldSpec::Rational => Backend::Integer,
            FieldSpec::Prime { p } => Backend::Modular(*p),
        }
    }
}

#[derive(Debug, Clone)]
enum Rows {
    Int(BTreeMap<usize, Vec<(usize, BigInt)>>),
    Mod(u64, BTreeMap<usize, Vec<(usize, u64)>>),
}

/// Incrementally built row echelon form.
#[derive(Debug, Clone)]
pub struct Echelon {
    rows: Rows,
}

fn int_row(v: &SparseVec) -> Vec<(usize, BigInt)> {
    if v.is_zero() {
        return Vec::new();
    }
    let lcm = v.entries.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let row: Vec<(usize, BigInt)> =
        v.entries.iter().map(|(i, c)| (*i, c.numer() * (&lcm / c.denom()))).collect();
    make_primitive(row)
}

fn make_primitive(mut row: Vec<(usize, BigInt)>) -> Vec<(usize, BigInt)> {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for (_, c) in row.iter_mut() {
            *c = &*c / &g;
        }
    }
    if let Some((_, lead)) = row.first() {
        if lead.is_negative() {
            for (_, c) in row.iter_mut() {
                *c = -&*c;
            }
        }
    }
    row
}

fn mod_row(v: &SparseVec, p: u64) -> Result<Vec<(usize, u64)>, FieldError> {
    let mut out = Vec::with_capacity(v.len());
    for (i, c) in v.entries() {
        let den = mod_u64(c.denom(), p);
        if den == 0 {
            return Err(FieldError::DenominatorVanishes { value: c.to_string(), p });
        }
        let x = mul_mod(mod_u64(c.numer(), p), inv_mod(den, p), p);
        if x != 0 {
            out.push((*i, x));
        }
    }
    Ok(out)
}

/// `a*x - b*y` on sparse integer rows.
fn int_combine(a: &BigInt, x: &[(usize, BigInt)], b: &BigInt, y: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `x - c*y` on sparse modular rows.
fn mod_combine(x: &[(usize, u64)], c: u64, y: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let neg = |v: u64| if v == 0 { 0 } else { p - v };
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_y {
            let v = neg(mul_mod(c, y[j].1, p));
            if v != 0 {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = (x[i].1 + neg(mul_mod(c, y[j].1, p))) % p;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Echelon {
    pub fn new(backend: Backend) -> Self {
        let rows = match backend {
            Backend::Integer => Rows::Int(BTreeMap::new()),
            Backend::Modular(p) => Rows::Mod(p, BTreeMap::new()),
        };
        Echelon { rows }
    }

    pub fn for_field(field: &FieldSpec) -> Self {
        Self::new(Backend::exact_for(field))
    }

    pub fn rank(&self) -> usize {
        match &self.rows {
            Rows::Int(r) => r.len(),
            Rows::Mod(_, r) => r.len(),
        }
    }

    pub fn pivots(&self) -> Vec<usize> {
        match &self.rows {
            Rows::Int(r) => r.keys().copied().collect(),
            Rows::Mod(_, r) => r.keys().copied().collect(),
        }
    }

    /// Inserts `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec) -> Result<bool, FieldError> {
        match &mut self.rows {
            Rows::Int(rows) => {
                let row = reduce_int(rows, int_row(v));
                match row.first().map(|(i, _)| *i) {
                    Some(lead) => {
                        rows.insert(lead, row);
                        Ok(true)
                    }
                    None => Ok(false),
                }
            }
            Rows::Mod(p, rows) => {
                let p = *p;
                let row = reduce_mod(rows, mod_row(v, p)?, p);
                match row.first().copied() {
                    Some((lead, c)) => {
                        let inv = inv_mod(c, p);
                        let row = row.into_iter().map(|(i, x)| (i, mul_mod(x, inv, p))).collect();
                        rows.insert(lead, row);
                        Ok(true)
                    }
                    None => Ok(false),
                }
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> Result<bool, FieldError> {
        match &self.rows {
            Rows::Int(rows) => Ok(reduce_int(rows, int_row(v)).is_empty()),
            Rows::Mod(p, rows) => Ok(reduce_mod(rows, mod_row(v, *p)?, *p).is_empty()),
        }
    }

    /// Reduced row echelon basis (pivot entries equal to one), sorted by pivot.
    pub fn rref(&self, field: &FieldSpec) -> Vec<SparseVec> {
        let mut rows: Vec<(usize, SparseVec)> = match &self.rows {
            Rows::Int(rows) => rows
                .iter()
                .map(|(piv, row)| {
                    let lead = BigRational::from_integer(row[0].1.clone());
                    let v = SparseVec::from_sorted_unchecked(
                        row.iter().map(|(i, c)| (*i, BigRational::from_integer(c.clone()) / &lead)).collect(),
                    );
                    (*piv, v)
                })
                .collect(),
            Rows::Mod(_, rows) => rows
                .iter()
                .map(|(piv, row)| {
                    let v = SparseVec::from_sorted_unchecked(
                        row.iter().map(|(i, c)| (*i, BigRational::from_integer(BigInt::from(*c)))).collect(),
                    );
                    (*piv, v)
                })
                .collect(),
        };
        // back substitution, last pivot first
        for k in (0..rows.len()).rev() {
            let (piv, pivot_row) = rows[k].clone();
            for row in rows.iter_mut().take(k) {
                let c = row.1.get(piv);
                if !c.is_zero() {
                    row.1 = row.1.add_scaled(field, &field.neg(&c), &pivot_row);
                }
            }
        }
        rows.into_iter().map(|(_, v)| v).collect()
    }
}

fn reduce_int(rows: &BTreeMap<usize, Vec<(usize, BigInt)>>, mut v: Vec<(usize, BigInt)>) -> Vec<(usize, BigInt)> {
    while let Some((lead, c)) = v.first().cloned() {
        match rows.get(&lead) {
            Some(row) => {
                let p = &row[0].1;
                let g = p.gcd(&c);
                let (a, b) = (p / &g, &c / &g);
                v = make_primitive(int_combine(&a, &v, &b, row));
            }
            None => break,
        }
    }
    v
}

fn reduce_mod(rows: &BTreeMap<usize, Vec<(usize, u64)>>, mut v: Vec<(usize, u64)>, p: u64) -> Vec<(usize, u64)> {
    while let Some((lead, c)) = v.first().copied() {
        match rows.get(&lead) {
            Some(row) => v = mod_combine(&v, c, row, p),
            None => break,
        }
    }
    v
}

/// Rank of a list of vectors.
pub fn rank_of(field: &FieldSpec, vectors: &[SparseVec]) -> Result<usize, FieldError> {
    let mut ech = Echelon::for_field(field);
    for v in vectors {
        ech.insert(v)?;
    }
    Ok(ech.rank())
}

/// Basis of `{ l in F^dim : <l, b> = 0 for every row b }`, in reduced echelon form.
pub fn orthogonal_complement(field: &FieldSpec, rref_rows: &[SparseVec], dim: usize) -> Vec<SparseVec> {
    let pivots: Vec<usize> = rref_rows.iter().map(|r| r.leading().expect("nonzero row")).collect();
    let mut out = Vec::new();
    for j in 0..dim {
        if pivots.contains(&j) {
            continue;
        }
        let mut entries = vec![(j, field.one())];
        for (row, piv) in rref_rows.iter().zip(&pivots) {
            let c = row.get(j);
            if !c.is_zero() {
                entries.push((*piv, field.neg(&c)));
            }
        }
        out.push(SparseVec::from_entries(field, entries));
    }
    let mut ech = Echelon::for_field(field);
    for v in &out {
        ech.insert(v).expect("field-normalized entries");
    }
    ech.rref(field)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(field: &FieldSpec, xs: &[i64]) -> SparseVec {
        SparseVec::from_entries(field, xs.iter().enumerate().map(|(i, x)| (i, field.from_i64(*x))))
    }

    #[test]
    fn rank_small_matrices() {
        let f = FieldSpec::Rational;
        let rows = vec![v(&f, &[1, 2, 3]), v(&f, &[2, 4, 6]), v(&f, &[0, 1, 1])];
        assert_eq!(rank_of(&f, &rows).unwrap(), 2);
        let p = FieldSpec::prime(2).unwrap();
        let rows = vec![v(&p, &[1, 1, 0]), v(&p, &[0, 1, 1]), v(&p, &[1, 0, 1])];
        assert_eq!(rank_of(&p, &rows).unwrap(), 2);
        assert_eq!(rank_of(&f, &[v(&f, &[1, 1, 0]), v(&f, &[0, 1, 1]), v(&f, &[1, 0, 1])]).unwrap(), 3);
    }

    #[test]
    fn rref_and_complement() {
        let f = FieldSpec::Rational;
        let mut e = Echelon::for_field(&f);
        e.insert(&v(&f, &[2, 4, 0, 2])).unwrap();
        e.insert(&v(&f, &[1, 3, 1, 0])).unwrap();
        let r = e.rref(&f);
        assert_eq!(r.len(), 2);
        let comp = orthogonal_complement(&f, &r, 4);
        assert_eq!(comp.len(), 2);
        for c in &comp {
            for row in &r {
                let dot = c.entries().iter().fold(Scalar::zero(), |acc, (i, x)| acc + x * row.get(*i));
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn containment() {
        let f = FieldSpec::Rational;
        let mut e = Echelon::for_field(&f);
        e.insert(&v(&f, &[1, 1, 0])).unwrap();
        assert!(e.contains(&v(&f, &[3, 3, 0])).unwrap());
        assert!(!e.contains(&v(&f, &[1, 0, 0])).unwrap());
        assert!(!e.insert(&v(&f, &[-2, -2, 0])).unwrap());
    }

    #[test]
    fn add_scaled_cancels() {
        let f = FieldSpec::Rational;
        let a = v(&f, &[1, 2, 0]);
        let b = v(&f, &[1, 2, 5]);
        let d = a.sub(&f, &b);
        assert_eq!(d, v(&f, &[0, 0, -5]));
        assert!(a.sub(&f, &a).is_zero());
    }
}
