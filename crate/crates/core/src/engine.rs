//! Identity checking and graded codimensions of finite-dimensional algebras.
//!
//! Multilinear questions are settled on tuples of basis vectors. Tuples are
//! visited in shells of increasing largest index so that full-rank
//! certificates usually appear after a handful of evaluations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{GradedAlgebra, ModelError};
use crate::combinatorics::{factorial, next_permutation};
use crate::field::{FieldError, FieldSpec, Scalar};
use crate::group::GroupTable;
use crate::linalg::{orthogonal_complement, Backend, Echelon, SparseVec, FILTER_PRIME};
use crate::parse::print_poly;
use crate::poly::{Family, GradedPolynomial, GradedVariable, PolyError, Word};
use crate::semi::Pattern;
use crate::subspace::{SubalgebraPair, Subspace};

/// Default cap on evaluated matrix cells (tuples times algebra dimension).
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Tuples evaluated per parallel batch.
const BATCH: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("polynomial is not multilinear")]
    NotMultilinear,
    #[error("grid evaluation needs the rational field; got {0}")]
    RequiresRational(FieldSpec),
    #[error("resource guard: {needed} evaluation cells exceed the budget of {budget}")]
    ResourceGuard { needed: u64, budget: u64 },
    #[error("signature has {got} entries, the group has order {order}")]
    SignatureLength { got: usize, order: usize },
    #[error("signature must have total degree at least 1")]
    EmptySignature,
    #[error("signature total degree {n} exceeds the supported maximum {max}")]
    SignatureTooLarge { n: usize, max: usize },
    #[error("w must be a nonzero homogeneous polynomial")]
    BadWitnessWord,
    #[error("witness polynomial vanished: defect")]
    WitnessVanished,
    #[error("{0}")]
    Precondition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineOptions {
    pub budget: u64,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions { budget: DEFAULT_BUDGET }
    }
}

/// Largest total degree accepted for a multilinear space (`n!` rows).
pub const MAX_SIGNATURE_DEGREE: usize = 8;

/// Variable counts per group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    counts: Vec<usize>,
}

impl Signature {
    pub fn new(counts: Vec<usize>, group: &GroupTable) -> Result<Self, EngineError> {
        if counts.len() != group.order() {
            return Err(EngineError::SignatureLength { got: counts.len(), order: group.order() });
        }
        let n: usize = counts.iter().sum();
        if n == 0 {
            return Err(EngineError::EmptySignature);
        }
        if n > MAX_SIGNATURE_DEGREE {
            return Err(EngineError::SignatureTooLarge { n, max: MAX_SIGNATURE_DEGREE });
        }
        Ok(Signature { counts })
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn degree(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Degree of slot `i` (0-based); slots are grouped by group element.
    pub fn slot_degrees(&self) -> Vec<usize> {
        self.counts.iter().enumerate().flat_map(|(g, &c)| std::iter::repeat_n(g, c)).collect()
    }

    /// `x_1 .. x_n`, the first `n_1` of degree `g_1`, and so on.
    pub fn variables(&self, family: Family) -> Vec<GradedVariable> {
        self.slot_degrees()
            .into_iter()
            .enumerate()
            .map(|(i, g)| GradedVariable::new(family, i as u32 + 1, g))
            .collect()
    }

    /// All orderings of the given variables, in canonical word order.
    pub fn monomials(vars: &[GradedVariable]) -> Vec<Word> {
        let mut cur: Vec<GradedVariable> = vars.to_vec();
        cur.sort();
        let mut out = vec![Word::new(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Word::new(cur.clone()));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        self.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

/// Which multilinear space over a signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceMode {
    /// Words in the `x` variables.
    P,
    /// Words choosing `y_i` or `z_i` in every slot.
    V,
    /// The part of `V` with a fixed set of `y` slots.
    Pattern(Pattern),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureSpace {
    pub signature: Signature,
    pub mode: SpaceMode,
}

impl SignatureSpace {
    pub fn new(signature: Signature, mode: SpaceMode) -> Self {
        SignatureSpace { signature, mode }
    }

    pub fn dim(&self) -> BigInt {
        let n = self.signature.degree();
        let nf = BigInt::from(factorial(n));
        match self.mode {
            SpaceMode::P | SpaceMode::Pattern(_) => nf,
            SpaceMode::V => nf << n,
        }
    }

    /// Basis monomials in canonical order.
    pub fn basis(&self) -> Vec<Word> {
        let sig = &self.signature;
        match &self.mode {
            SpaceMode::P => Signature::monomials(&sig.variables(Family::X)),
            SpaceMode::Pattern(p) => Signature::monomials(&p.variables(sig)),
            SpaceMode::V => {
                let mut out: Vec<Word> = Pattern::all(sig)
                    .into_iter()
                    .flat_map(|p| Signature::monomials(&p.variables(sig)))
                    .collect();
                out.sort();
                out
            }
        }
    }
}

/// How a rank was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Strategy {
    /// Full rank modulo a large prime, which bounds the rational rank from below.
    ModularPrefilter,
    /// Exhaustive fraction-free rational elimination.
    ExactRational,
    /// Exhaustive elimination in the configured prime field.
    PrimeField,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::ModularPrefilter => write!(f, "basis-tuples/prefilter-mod-{FILTER_PRIME}"),
            Strategy::ExactRational => write!(f, "basis-tuples/exact-rational"),
            Strategy::PrimeField => write!(f, "basis-tuples/prime-field"),
        }
    }
}

/// Result of a row-rank computation over an evaluation matrix.
#[derive(Debug, Clone)]
pub struct RankOutcome {
    pub rank: usize,
    /// Basis of the left kernel in reduced echelon form (empty at full rank).
    pub kernel: Vec<SparseVec>,
    pub strategy: Strategy,
    pub tuples: u64,
}

/// Tuples with every coordinate below its length, grouped by largest coordinate.
fn shell(lens: &[usize], k: usize) -> Vec<Vec<usize>> {
    let caps: Vec<usize> = lens.iter().map(|&l| l.min(k + 1)).collect();
    if caps.contains(&0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut t = vec![0usize; lens.len()];
    loop {
        if t.contains(&k) || (lens.is_empty() && k == 0) {
            out.push(t.clone());
        }
        let mut pos = 0;
        loop {
            if pos == t.len() {
                return out;
            }
            t[pos] += 1;
            if t[pos] < caps[pos] {
                break;
            }
            t[pos] = 0;
            pos += 1;
        }
    }
}

fn total_tuples(lens: &[usize]) -> u128 {
    lens.iter().map(|&l| l as u128).product()
}

/// Products of every word under one tuple, reusing common prefixes.
fn eval_words(
    alg: &GradedAlgebra,
    words: &[Word],
    slot: &HashMap<GradedVariable, usize>,
    domains: &[Vec<SparseVec>],
    tuple: &[usize],
) -> Vec<SparseVec> {
    let value = |v: &GradedVariable| &domains[slot[v]][tuple[slot[v]]];
    let mut stack: Vec<(GradedVariable, SparseVec)> = Vec::new();
    let mut out = Vec::with_capacity(words.len());
    for w in words {
        let vars = w.vars();
        let common = stack.iter().zip(vars).take_while(|((a, _), b)| a == *b).count();
        stack.truncate(common);
        for v in &vars[common..] {
            let next = match stack.last() {
                Some((_, p)) if p.is_zero() => SparseVec::zero(),
                Some((_, p)) => alg.mul(p, value(v)),
                None => value(v).clone(),
            };
            stack.push((*v, next));
        }
        out.push(stack.last().map(|(_, p)| p.clone()).unwrap_or_default());
    }
    out
}

/// An evaluation matrix: rows are words, columns are (tuple, coordinate) pairs.
pub struct EvalProblem<'a> {
    pub alg: &'a GradedAlgebra,
    pub words: &'a [Word],
    /// Per variable, the vectors it ranges over.
    pub domains: Vec<(GradedVariable, Vec<SparseVec>)>,
}

impl EvalProblem<'_> {
    fn slots(&self) -> (HashMap<GradedVariable, usize>, Vec<Vec<SparseVec>>, Vec<usize>) {
        let slot = self.domains.iter().enumerate().map(|(i, (v, _))| (*v, i)).collect();
        let doms: Vec<Vec<SparseVec>> = self.domains.iter().map(|(_, d)| d.clone()).collect();
        let lens = doms.iter().map(|d| d.len()).collect();
        (slot, doms, lens)
    }

    /// Row rank of the evaluation matrix. With `need_kernel` unset a full
    /// modular rank is accepted as a certificate.
    pub fn rank(&self, opts: &EngineOptions, need_kernel: bool) -> Result<RankOutcome, EngineError> {
        let field = self.alg.field();
        match field {
            FieldSpec::Prime { p } => self.rank_with(opts, Backend::Modular(p), Strategy::PrimeField),
            FieldSpec::Rational => {
                if !need_kernel {
                    match self.rank_with(opts, Backend::Modular(FILTER_PRIME), Strategy::ModularPrefilter) {
                        Ok(out) if out.rank == self.words.len() => return Ok(out),
                        Ok(_) | Err(EngineError::Field(_)) => {}
                        Err(e) => return Err(e),
                    }
                }
                self.rank_with(opts, Backend::Integer, Strategy::ExactRational)
            }
        }
    }

    fn rank_with(&self, opts: &EngineOptions, backend: Backend, strategy: Strategy) -> Result<RankOutcome, EngineError> {
        let field = self.alg.field();
        let rows = self.words.len();
        let mut ech = Echelon::new(backend);
        let (slot, doms, lens) = self.slots();
        let dim = self.alg.dim() as u64;
        let mut tuples = 0u64;
        let max_len = lens.iter().copied().max().unwrap_or(1);
        if rows > 0 && lens.iter().all(|&l| l > 0) {
            'shells: for k in 0..max_len {
                let sh = shell(&lens, k);
                for batch in sh.chunks(BATCH) {
                    let needed = (tuples + batch.len() as u64).saturating_mul(dim);
                    if needed > opts.budget {
                        return Err(EngineError::ResourceGuard { needed, budget: opts.budget });
                    }
                    let evals: Vec<Vec<SparseVec>> =
                        batch.par_iter().map(|t| eval_words(self.alg, self.words, &slot, &doms, t)).collect();
                    tuples += batch.len() as u64;
                    for vals in evals {
                        // transpose: one column per output coordinate
                        let mut cols: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
                        for (r, v) in vals.into_iter().enumerate() {
                            for (c, x) in v.entries() {
                                cols.entry(*c).or_default().push((r, x.clone()));
                            }
                        }
                        for (_, col) in cols {
                            ech.insert(&SparseVec::from_entries(&field, col))?;
                            if ech.rank() == rows {
                                break 'shells;
                            }
                        }
                    }
                }
            }
        }
        let rank = ech.rank();
        let kernel = if rank == rows { Vec::new() } else { orthogonal_complement(&field, &ech.rref(&field), rows) };
        Ok(RankOutcome { rank, kernel, strategy, tuples })
    }

    /// True iff `f` (a combination of `words`) vanishes at every tuple.
    pub fn vanishes(&self, coeffs: &[Scalar], opts: &EngineOptions) -> Result<bool, EngineError> {
        let field = self.alg.field();
        let (slot, doms, lens) = self.slots();
        if lens.contains(&0) {
            return Ok(true);
        }
        let total = total_tuples(&lens);
        let needed = total.saturating_mul(self.alg.dim() as u128);
        let max_len = lens.iter().copied().max().unwrap_or(1);
        let dim = self.alg.dim() as u64;
        let mut tuples = 0u64;
        for k in 0..max_len {
            let sh = shell(&lens, k);
            for batch in sh.chunks(BATCH) {
                let cells = (tuples + batch.len() as u64).saturating_mul(dim);
                if cells > opts.budget {
                    return Err(EngineError::ResourceGuard {
                        needed: needed.min(u64::MAX as u128) as u64,
                        budget: opts.budget,
                    });
                }
                tuples += batch.len() as u64;
                let nonzero = batch.par_iter().any(|t| {
                    let vals = eval_words(self.alg, self.words, &slot, &doms, t);
                    let mut acc = SparseVec::zero();
                    for (v, c) in vals.iter().zip(coeffs) {
                        acc = acc.add_scaled(&field, c, v);
                    }
                    !acc.is_zero()
                });
                if nonzero {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Where identity-checking variables take their values.
#[derive(Clone, Copy)]
pub enum Target<'a> {
    Algebra,
    Subspace(&'a Subspace),
}

fn target_basis(alg: &GradedAlgebra, target: Target<'_>, g: usize) -> Result<Vec<SparseVec>, EngineError> {
    Ok(match target {
        Target::Algebra => alg.component_basis(g),
        Target::Subspace(s) => s.component(g)?.to_vec(),
    })
}

/// Splits a polynomial into its word list and coefficient vector.
fn words_and_coeffs(f: &GradedPolynomial) -> (Vec<Word>, Vec<Scalar>) {
    f.terms().iter().map(|(w, c)| (w.clone(), c.clone())).unzip()
}

/// Vanishing of a multilinear `f` when each variable ranges over `domain(v)`.
pub fn vanishes_multilinear(
    alg: &GradedAlgebra,
    f: &GradedPolynomial,
    domain: impl Fn(&GradedVariable) -> Result<Vec<SparseVec>, EngineError>,
    opts: &EngineOptions,
) -> Result<bool, EngineError> {
    alg.field().ensure_same(&f.field())?;
    f.check_degrees(alg.group())?;
    if f.is_zero() {
        return Ok(true);
    }
    if f.multilinear_signature(alg.group()).is_none() {
        return Err(EngineError::NotMultilinear);
    }
    let domains = f.variables().into_iter().map(|v| Ok((v, domain(&v)?))).collect::<Result<Vec<_>, EngineError>>()?;
    let (words, coeffs) = words_and_coeffs(f);
    EvalProblem { alg, words: &words, domains }.vanishes(&coeffs, opts)
}

/// Whether the multilinear `f` is a graded identity of `A` (or of a subspace).
pub fn check_identity_multilinear(
    f: &GradedPolynomial,
    alg: &GradedAlgebra,
    target: Target<'_>,
    opts: &EngineOptions,
) -> Result<bool, EngineError> {
    vanishes_multilinear(alg, f, |v| target_basis(alg, target, v.degree), opts)
}

/// Points `sum c_j b_j` with nonnegative integers `c` of total at most `d`.
fn simplex_grid(basis: &[SparseVec], d: usize, field: &FieldSpec) -> Vec<SparseVec> {
    let mut out = Vec::new();
    let mut coeffs = vec![0usize; basis.len()];
    fn rec(
        j: usize,
        left: usize,
        basis: &[SparseVec],
        coeffs: &mut Vec<usize>,
        field: &FieldSpec,
        out: &mut Vec<SparseVec>,
    ) {
        if j == basis.len() {
            let mut v = SparseVec::zero();
            for (b, &c) in basis.iter().zip(coeffs.iter()) {
                if c > 0 {
                    v = v.add_scaled(field, &field.from_i64(c as i64), b);
                }
            }
            out.push(v);
            return;
        }
        for c in 0..=left {
            coeffs[j] = c;
            rec(j + 1, left - c, basis, coeffs, field, out);
        }
        coeffs[j] = 0;
    }
    rec(0, d, basis, &mut coeffs, field, &mut out);
    out
}

/// Vanishing of an arbitrary `f` on the product of per-variable grids. Each
/// grid is unisolvent for polynomials of the variable's degree in `f`, so the
/// verdict is exact over the rationals.
pub fn vanishes_general(
    alg: &GradedAlgebra,
    f: &GradedPolynomial,
    domain: impl Fn(&GradedVariable) -> Result<Vec<SparseVec>, EngineError>,
    opts: &EngineOptions,
) -> Result<bool, EngineError> {
    let field = alg.field();
    if !field.is_rational() {
        return Err(EngineError::RequiresRational(field));
    }
    field.ensure_same(&f.field())?;
    f.check_degrees(alg.group())?;
    if f.is_zero() {
        return Ok(true);
    }
    if f.terms().keys().any(|w| w.is_empty()) {
        return Err(ModelError::ConstantTerm.into());
    }
    let mut degree: BTreeMap<GradedVariable, usize> = BTreeMap::new();
    for w in f.terms().keys() {
        let mut counts: BTreeMap<GradedVariable, usize> = BTreeMap::new();
        for v in w.vars() {
            *counts.entry(*v).or_default() += 1;
        }
        for (v, c) in counts {
            let slot = degree.entry(v).or_default();
            *slot = (*slot).max(c);
        }
    }
    let mut domains = Vec::new();
    for (v, d) in &degree {
        domains.push((*v, simplex_grid(&domain(v)?, *d, &field)));
    }
    let (words, coeffs) = words_and_coeffs(f);
    EvalProblem { alg, words: &words, domains }.vanishes(&coeffs, opts)
}

/// Exact identity test for arbitrary polynomials over the rationals.
pub fn check_identity_general(
    f: &GradedPolynomial,
    alg: &GradedAlgebra,
    target: Target<'_>,
    opts: &EngineOptions,
) -> Result<bool, EngineError> {
    vanishes_general(alg, f, |v| target_basis(alg, target, v.degree), opts)
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub signature: Signature,
    /// `n!`
    pub space_dim: usize,
    pub codimension: usize,
    /// Basis of `P ∩ Id`, with pairwise distinct leading monomials.
    pub identities: Vec<GradedPolynomial>,
    pub strategy: Strategy,
    pub tuples_evaluated: u64,
}

impl IdentityReport {
    pub fn to_json(&self, group: &GroupTable) -> serde_json::Value {
        serde_json::json!({
            "signature": self.signature.counts(),
            "space_dim": self.space_dim,
            "codimension": self.codimension,
            "identities": self.identities.iter().map(|f| print_poly(f, group)).collect::<Vec<_>>(),
            "strategy": self.strategy.to_string(),
            "tuples_evaluated": self.tuples_evaluated,
        })
    }
}

/// `dim P / (P ∩ Id)` for the multilinear space of `sig`, with a basis of the
/// identities in `P`.
pub fn codimension(alg: &GradedAlgebra, sig: &Signature, opts: &EngineOptions) -> Result<IdentityReport, EngineError> {
    if sig.counts().len() != alg.group().order() {
        return Err(EngineError::SignatureLength { got: sig.counts().len(), order: alg.group().order() });
    }
    let vars = sig.variables(Family::X);
    let words = Signature::monomials(&vars);
    let domains = vars.iter().map(|v| (*v, alg.component_basis(v.degree))).collect();
    let problem = EvalProblem { alg, words: &words, domains };
    let out = problem.rank(opts, false)?;
    let field = alg.field();
    let identities = out
        .kernel
        .iter()
        .map(|row| {
            GradedPolynomial::from_terms(field, row.entries().iter().map(|(i, c)| (words[*i].clone(), c.clone())))
                .expect("kernel entries are field elements")
        })
        .collect();
    Ok(IdentityReport {
        signature: sig.clone(),
        space_dim: words.len(),
        codimension: out.rank,
        identities,
        strategy: out.strategy,
        tuples_evaluated: out.tuples,
    })
}

/// Noncommutative polynomial over integer coefficients in letters `0, 1, ...`.
type FreeEntry = BTreeMap<Vec<u32>, BigInt>;

fn free_mul(a: &FreeEntry, b: &FreeEntry) -> FreeEntry {
    let mut out = FreeEntry::new();
    for (u, x) in a {
        for (v, y) in b {
            let mut w = u.clone();
            w.extend_from_slice(v);
            let slot = out.entry(w).or_insert_with(BigInt::zero);
            *slot += x * y;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn free_add(a: &FreeEntry, b: &FreeEntry) -> FreeEntry {
    let mut out = a.clone();
    for (w, c) in b {
        let slot = out.entry(w.clone()).or_insert_with(BigInt::zero);
        *slot += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

type FreeMatrix = [[FreeEntry; 2]; 2];

fn mat_mul(a: &FreeMatrix, b: &FreeMatrix) -> FreeMatrix {
    let mut out: FreeMatrix = Default::default();
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = free_add(&free_mul(&a[i][0], &b[0][j]), &free_mul(&a[i][1], &b[1][j]));
        }
    }
    out
}

fn letter(l: u32) -> FreeEntry {
    [(vec![l], BigInt::one())].into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenericCheck {
    pub neutral: usize,
    pub odd: usize,
    pub rank: usize,
    pub monomials: usize,
    pub no_identity: bool,
}

/// Substitutes generic matrices over the free algebra into every monomial of
/// the signature (`neutral` variables of degree 0, `odd` of degree 1 over Z_2)
/// and computes the rank of the results. Variable `i` uses letters
/// `4(i-1) .. 4(i-1)+3`; neutral ones are `diag(u, v)`, odd ones `antidiag(w, t)`.
pub fn generic_no_identity_check(neutral: usize, odd: usize) -> Result<GenericCheck, EngineError> {
    let n = neutral + odd;
    if n == 0 {
        return Err(EngineError::EmptySignature);
    }
    if n > MAX_SIGNATURE_DEGREE {
        return Err(EngineError::SignatureTooLarge { n, max: MAX_SIGNATURE_DEGREE });
    }
    let mats: Vec<FreeMatrix> = (0..n as u32)
        .map(|i| {
            let base = 4 * i;
            let mut m: FreeMatrix = Default::default();
            if (i as usize) < neutral {
                m[0][0] = letter(base);
                m[1][1] = letter(base + 1);
            } else {
                m[0][1] = letter(base + 2);
                m[1][0] = letter(base + 3);
            }
            m
        })
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut columns: HashMap<(usize, Vec<u32>), usize> = HashMap::new();
    let mut ech = Echelon::new(Backend::Integer);
    let field = FieldSpec::Rational;
    let mut count = 0;
    loop {
        let prod = perm[1..].iter().fold(mats[perm[0]].clone(), |acc, &k| mat_mul(&acc, &mats[k]));
        let mut entries = Vec::new();
        for (i, row) in prod.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                for (w, c) in cell {
                    let next = columns.len();
                    let col = *columns.entry((2 * i + j, w.clone())).or_insert(next);
                    entries.push((col, BigRational::from_integer(c.clone())));
                }
            }
        }
        ech.insert(&SparseVec::from_entries(&field, entries))?;
        count += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let rank = ech.rank();
    Ok(GenericCheck { neutral, odd, rank, monomials: count, no_identity: rank == count })
}

/// `f(x_1^{(h_1)} w, ..., x_n^{(h_n)} w)` with `h_i = g_i g^{-1}`, computed in
/// the free algebra; it never vanishes for multilinear nonzero `f`.
pub fn left_ideal_witness(
    f: &GradedPolynomial,
    w: &GradedPolynomial,
    group: &GroupTable,
) -> Result<GradedPolynomial, EngineError> {
    f.field().ensure_same(&w.field())?;
    if f.multilinear_signature(group).is_none() || f.is_zero() {
        return Err(EngineError::NotMultilinear);
    }
    f.check_degrees(group)?;
    let g = match w.homogeneous_degree(group)? {
        Some(g) if !w.is_zero() => g,
        _ => return Err(EngineError::BadWitnessWord),
    };
    let g_inv = group.inv(g);
    let sigma: BTreeMap<GradedVariable, GradedPolynomial> = f
        .variables()
        .into_iter()
        .map(|v| {
            let h = group.mul(v.degree, g_inv);
            let img = &GradedPolynomial::var(f.field(), GradedVariable::new(v.family, v.index, h)) * w;
            (v, img)
        })
        .collect();
    let out = f.substitute(&sigma, group)?;
    if out.is_zero() {
        return Err(EngineError::WitnessVanished);
    }
    Ok(out)
}

fn sorted_vars(f: &GradedPolynomial, group: &GroupTable, what: &str) -> Result<Vec<GradedVariable>, EngineError> {
    if f.is_zero() || f.multilinear_signature(group).is_none() {
        return Err(EngineError::Precondition(format!("{what} must be a nonzero multilinear polynomial")));
    }
    f.check_degrees(group)?;
    Ok(f.variables().into_iter().collect())
}

/// `f(g(x_{11}, .., x_{1n}), .., g(x_{m1}, .., x_{mn}))` for an ordinary `f`
/// and a graded `g`. Fresh variable `x_{ij}` is `x` with index `(i-1)n + j`
/// and the degree of the `j`-th variable of `g`.
pub fn compose_outer_ordinary(
    f: &GradedPolynomial,
    g: &GradedPolynomial,
    group: &GroupTable,
) -> Result<GradedPolynomial, EngineError> {
    let fv = sorted_vars(f, group, "f")?;
    let gv = sorted_vars(g, group, "g")?;
    if fv.iter().any(|v| v.degree != group.identity()) {
        return Err(EngineError::Precondition("f must be an ordinary polynomial in neutral variables".into()));
    }
    if g.homogeneous_degree(group)?.is_none() {
        return Err(EngineError::Precondition("g must be homogeneous".into()));
    }
    let n = gv.len() as u32;
    let copies: BTreeMap<GradedVariable, GradedPolynomial> = fv
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let copy = g.map_variables(|u| {
                let j = gv.iter().position(|x| x == u).expect("variable of g") as u32;
                Some(GradedPolynomial::var(g.field(), GradedVariable::x(i as u32 * n + j + 1, u.degree)))
            });
            (*v, copy)
        })
        .collect();
    Ok(f.map_variables(|v| copies.get(v).cloned()))
}

/// `f(g(x_{11}^{(g_1)}, x_{12}^{(1)}, ..), .., g(x_{m1}^{(g_m)}, x_{m2}^{(1)}, ..))`
/// for a graded `f` and an ordinary `g`; indices as in [`compose_outer_ordinary`].
pub fn compose_outer_graded(
    f: &GradedPolynomial,
    g: &GradedPolynomial,
    group: &GroupTable,
) -> Result<GradedPolynomial, EngineError> {
    let fv = sorted_vars(f, group, "f")?;
    let gv = sorted_vars(g, group, "g")?;
    if gv.iter().any(|v| v.degree != group.identity()) {
        return Err(EngineError::Precondition("g must be an ordinary polynomial in neutral variables".into()));
    }
    let n = gv.len() as u32;
    let copies: BTreeMap<GradedVariable, GradedPolynomial> = fv
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let copy = g.map_variables(|u| {
                let j = gv.iter().position(|x| x == u).expect("variable of g") as u32;
                let deg = if j == 0 { v.degree } else { group.identity() };
                Some(GradedPolynomial::var(g.field(), GradedVariable::x(i as u32 * n + j + 1, deg)))
            });
            (*v, copy)
        })
        .collect();
    Ok(f.map_variables(|v| copies.get(v).cloned()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeDims {
    pub degree: usize,
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_c: usize,
    pub dim_sum: usize,
    pub dim_intersection: usize,
    pub holds: bool,
}

/// Per degree, `dim(B_g + C_g)` against `dim A_g`.
pub fn check_sum_decomposition(alg: &GradedAlgebra, pair: &SubalgebraPair) -> Result<Vec<DegreeDims>, EngineError> {
    let field = alg.field();
    let mut out = Vec::new();
    for g in 0..alg.group().order() {
        let b = pair.b.component(g)?;
        let c = pair.c.component(g)?;
        let dim_sum = crate::subspace::sum_dim(&field, b, c)?;
        let dim_a = alg.component_dim(g);
        out.push(DegreeDims {
            degree: g,
            dim_a,
            dim_b: b.len(),
            dim_c: c.len(),
            dim_sum,
            dim_intersection: b.len() + c.len() - dim_sum,
            holds: dim_sum == dim_a,
        });
    }
    Ok(out)
}
