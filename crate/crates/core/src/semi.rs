//! Graded semi-identities of a decomposition `A = B + C`, the staircase
//! polynomial `Sp_d`, pattern components, good monomials and degree bounds.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::GradedAlgebra;
use crate::combinatorics::{all_permutations, d_y_good_monomial, factorial};
use crate::engine::{
    vanishes_general, vanishes_multilinear, EngineError, EngineOptions, EvalProblem, Signature,
};
use crate::field::Scalar;
use crate::group::GroupTable;
use crate::interval::{e_interval, Interval};
use crate::linalg::SparseVec;
use crate::poly::{Family, GradedPolynomial, GradedVariable, Word};
use crate::subspace::SubalgebraPair;

/// Largest degree for spanning checks.
pub const MAX_SPANNING_N: usize = 3;

/// Default cap on the decimal digits of an exact theorem degree.
pub const DEFAULT_DIGIT_CAP: u64 = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemiError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("polynomial is not multilinear in its Y/Z slots")]
    NotSlotMultilinear,
    #[error("expected {expected} coefficients, one per permutation of S_d; got {got}")]
    AlphaLength { expected: usize, got: usize },
    #[error("the coefficient of the identity permutation must be nonzero")]
    AlphaIdentityZero,
    #[error("not a semi-identity of the context: {0}")]
    NotSemiIdentity(String),
    #[error("Sp_{d} of degree index {g} is not registered in the context")]
    SpNotRegistered { d: usize, g: usize },
    #[error("degree {n} exceeds the spanning-check limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl From<crate::algebra::ModelError> for SemiError {
    fn from(e: crate::algebra::ModelError) -> Self {
        SemiError::Engine(e.into())
    }
}

impl From<crate::poly::PolyError> for SemiError {
    fn from(e: crate::poly::PolyError) -> Self {
        SemiError::Engine(e.into())
    }
}

/// A slot is a variable position `(degree, index)`, filled by `y` or `z`.
type Slot = (usize, u32);

/// The set of slots filled by `y` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Pattern {
    y: BTreeSet<Slot>,
}

impl Pattern {
    pub fn new(y: impl IntoIterator<Item = Slot>) -> Self {
        Pattern { y: y.into_iter().collect() }
    }

    pub fn of_word(w: &Word) -> Self {
        Pattern::new(w.vars().iter().filter(|v| v.family == Family::Y).map(|v| (v.degree, v.index)))
    }

    /// Number of `y` slots of degree `g`.
    pub fn r(&self, g: usize) -> usize {
        self.y.iter().filter(|s| s.0 == g).count()
    }

    /// Sorted `y` indices of degree `g`.
    pub fn t(&self, g: usize) -> Vec<u32> {
        self.y.iter().filter(|s| s.0 == g).map(|s| s.1).collect()
    }

    pub fn is_y(&self, v: &GradedVariable) -> bool {
        self.y.contains(&(v.degree, v.index))
    }

    /// The signature's slots with families chosen by this pattern.
    pub fn variables(&self, sig: &Signature) -> Vec<GradedVariable> {
        sig.variables(Family::X)
            .into_iter()
            .map(|v| v.with_family(if self.is_y(&v) { Family::Y } else { Family::Z }))
            .collect()
    }

    /// All `2^n` patterns of a signature.
    pub fn all(sig: &Signature) -> Vec<Pattern> {
        let slots: Vec<Slot> = sig.variables(Family::X).iter().map(|v| (v.degree, v.index)).collect();
        (0u64..1 << slots.len())
            .map(|mask| Pattern::new(slots.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, s)| *s)))
            .collect()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.y.iter().map(|(g, i)| format!("y{i}@{g}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn slots_of(w: &Word) -> Option<BTreeSet<Slot>> {
    let mut out = BTreeSet::new();
    for v in w.vars() {
        if v.family == Family::X || !out.insert((v.degree, v.index)) {
            return None;
        }
    }
    Some(out)
}

/// True iff every word fills the same slots, each exactly once, with Y/Z variables.
pub fn is_slot_multilinear(f: &GradedPolynomial) -> bool {
    let mut it = f.terms().keys().map(slots_of);
    match it.next() {
        None => true,
        Some(None) => false,
        Some(Some(first)) => it.all(|s| s.as_ref() == Some(&first)),
    }
}

/// Groups the words of a slot-multilinear polynomial by their Y/Z pattern.
pub fn pattern_split(f: &GradedPolynomial) -> Result<BTreeMap<Pattern, GradedPolynomial>, SemiError> {
    if !is_slot_multilinear(f) {
        return Err(SemiError::NotSlotMultilinear);
    }
    let mut parts: BTreeMap<Pattern, Vec<(Word, Scalar)>> = BTreeMap::new();
    for (w, c) in f.terms() {
        parts.entry(Pattern::of_word(w)).or_default().push((w.clone(), c.clone()));
    }
    Ok(parts
        .into_iter()
        .map(|(p, terms)| (p, GradedPolynomial::from_terms(f.field(), terms).expect("terms of f")))
        .collect())
}

/// An algebra with a fixed decomposition and a list of verified semi-identities.
#[derive(Debug, Clone)]
pub struct SemiContext {
    alg: Arc<GradedAlgebra>,
    pair: Arc<SubalgebraPair>,
    registered: Vec<GradedPolynomial>,
    sp: BTreeSet<(usize, usize)>,
    opts: EngineOptions,
}

impl SemiContext {
    /// Validates the pair against the algebra.
    pub fn new(alg: GradedAlgebra, pair: SubalgebraPair, opts: EngineOptions) -> Result<Self, SemiError> {
        pair.validate(&alg)?;
        Ok(SemiContext { alg: Arc::new(alg), pair: Arc::new(pair), registered: Vec::new(), sp: BTreeSet::new(), opts })
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.alg
    }

    pub fn pair(&self) -> &SubalgebraPair {
        &self.pair
    }

    pub fn options(&self) -> &EngineOptions {
        &self.opts
    }

    pub fn registered(&self) -> &[GradedPolynomial] {
        &self.registered
    }

    /// A new context with `f` added, after checking it is a semi-identity.
    pub fn register(&self, f: GradedPolynomial) -> Result<SemiContext, SemiError> {
        if !is_semi_identity(&f, self)? {
            return Err(SemiError::NotSemiIdentity(crate::parse::print_poly(&f, self.alg.group())));
        }
        let mut next = self.clone();
        next.registered.push(f);
        Ok(next)
    }

    /// Registers `Sp_d[Y^(g), X^(g^-1)]` with the given coefficients.
    pub fn register_sp(&self, d: usize, g: usize, alpha: Option<&[Scalar]>) -> Result<SemiContext, SemiError> {
        let f = sp_d(d, g, alpha, self.alg.group(), self.alg.field())?;
        let mut next = self.register(f)?;
        next.sp.insert((d, g));
        Ok(next)
    }

    pub fn has_sp(&self, d: usize, g: usize) -> bool {
        self.sp.contains(&(d, g))
    }

    fn subspace_basis(&self, v: &GradedVariable) -> Result<Vec<SparseVec>, EngineError> {
        let s = match v.family {
            Family::Y => &self.pair.b,
            Family::Z => &self.pair.c,
            Family::X => unreachable!("X variables are expanded first"),
        };
        Ok(s.component(v.degree)?.to_vec())
    }
}

fn vanishes_by_pattern(
    alg: &GradedAlgebra,
    f: &GradedPolynomial,
    domain: impl Fn(&GradedVariable) -> Result<Vec<SparseVec>, EngineError> + Copy,
    opts: &EngineOptions,
) -> Result<bool, SemiError> {
    let f = f.expand_x();
    if f.is_zero() {
        return Ok(true);
    }
    if is_slot_multilinear(&f) {
        for part in pattern_split(&f)?.values() {
            if !vanishes_multilinear(alg, part, domain, opts)? {
                return Ok(false);
            }
        }
        Ok(true)
    } else {
        Ok(vanishes_general(alg, &f, domain, opts)?)
    }
}

/// Whether `f` vanishes whenever `y` slots take values in `B` and `z` slots in `C`.
/// `x` variables are first expanded to `y + z`. Slot-multilinear input is
/// decided on basis tuples; anything else uses the rational grid.
pub fn is_semi_identity(f: &GradedPolynomial, ctx: &SemiContext) -> Result<bool, SemiError> {
    vanishes_by_pattern(&ctx.alg, f, |v| ctx.subspace_basis(v), &ctx.opts)
}

/// Whether `f`, with every variable ranging over `A`, is a graded identity of `A`.
pub fn is_trivial_semi(f: &GradedPolynomial, ctx: &SemiContext) -> Result<bool, SemiError> {
    let alg = &ctx.alg;
    vanishes_by_pattern(alg, f, |v| Ok(alg.component_basis(v.degree)), &ctx.opts)
}

/// `sum_s alpha_s y_s(1) x_{d+1} y_s(2) ... x_{2d-1} y_s(d)` with `y` of degree
/// `g` and `x` of degree `g^-1`. `alpha` follows lexicographic order of `S_d`
/// (identity first); `None` means the identity term alone.
pub fn sp_d(
    d: usize,
    g: usize,
    alpha: Option<&[Scalar]>,
    group: &GroupTable,
    field: crate::field::FieldSpec,
) -> Result<GradedPolynomial, SemiError> {
    if d == 0 {
        return Err(SemiError::InvalidParameter("d must be at least 1".into()));
    }
    if !group.contains(g) {
        return Err(SemiError::InvalidParameter(format!("no group element with index {g}")));
    }
    let perms = all_permutations(d);
    let coeffs: Vec<Scalar> = match alpha {
        Some(a) if a.len() != perms.len() => {
            return Err(SemiError::AlphaLength { expected: perms.len(), got: a.len() });
        }
        Some(a) => a.iter().map(|c| field.normalize(c)).collect::<Result<_, _>>().map_err(EngineError::from)?,
        None => {
            let mut v = vec![Scalar::zero(); perms.len()];
            v[0] = Scalar::one();
            v
        }
    };
    if coeffs[0].is_zero() {
        return Err(SemiError::AlphaIdentityZero);
    }
    let g_inv = group.inv(g);
    let terms = perms.iter().zip(coeffs).map(|(p, c)| {
        let mut vars = Vec::with_capacity(2 * d - 1);
        for (k, &s) in p.as_slice().iter().enumerate() {
            if k > 0 {
                vars.push(GradedVariable::x((d + k) as u32, g_inv));
            }
            vars.push(GradedVariable::y(s as u32, g));
        }
        (Word::new(vars), c)
    });
    Ok(GradedPolynomial::from_terms(field, terms)?)
}

/// `D = (2d - 1) o(g)`.
pub fn goodness_threshold(d: usize, g: usize, group: &GroupTable) -> usize {
    (2 * d - 1) * group.elt_order(g)
}

/// The `n` slots `y_1 .. y_r, z_{r+1} .. z_n`, all of degree `g`.
fn yz_slots(n: usize, r: usize, g: usize) -> Vec<GradedVariable> {
    (1..=n as u32).map(|i| if (i as usize) <= r { GradedVariable::y(i, g) } else { GradedVariable::z(i, g) }).collect()
}

/// Words of the pattern space with `y` slots `1..r` whose `y` order is
/// `D`-good, `D = (2d - 1) o(g)`.
pub fn good_monomials(n: usize, r: usize, d: usize, g: usize, group: &GroupTable) -> Result<Vec<Word>, SemiError> {
    if r > n || d == 0 || !group.contains(g) {
        return Err(SemiError::InvalidParameter(format!("need 0 <= r <= n, d >= 1 and a valid degree (n={n}, r={r}, d={d})")));
    }
    let big_d = goodness_threshold(d, g, group);
    let mut out = Vec::new();
    for w in Signature::monomials(&yz_slots(n, r, g)) {
        if d_y_good_monomial(&w, big_d).map_err(|e| SemiError::InvalidParameter(e.to_string()))? {
            out.push(w);
        }
    }
    Ok(out)
}

fn eval_rank(ctx: &SemiContext, words: &[Word], vars: &[GradedVariable]) -> Result<usize, SemiError> {
    let domains = vars.iter().map(|v| Ok((*v, ctx.subspace_basis(v)?))).collect::<Result<Vec<_>, EngineError>>()?;
    Ok(EvalProblem { alg: &ctx.alg, words, domains }.rank(&ctx.opts, false)?.rank)
}

/// Dimension of the pattern space (`y` slots `1..r`, all of degree `g`)
/// modulo the kernel of the `(B, C)` evaluation map.
pub fn quotient_dim(ctx: &SemiContext, n: usize, r: usize, g: usize) -> Result<usize, SemiError> {
    if n > MAX_SPANNING_N || r > n {
        return Err(SemiError::TooLarge { n, max: MAX_SPANNING_N });
    }
    let vars = yz_slots(n, r, g);
    eval_rank(ctx, &Signature::monomials(&vars), &vars)
}

/// Dimension of `V_{n,r}` (all choices of `r` among `n` slots of degree `g`)
/// modulo the evaluation kernel; the sum of the pattern quotients.
pub fn quotient_dim_all_t(ctx: &SemiContext, n: usize, r: usize, g: usize) -> Result<usize, SemiError> {
    if n > MAX_SPANNING_N || r > n {
        return Err(SemiError::TooLarge { n, max: MAX_SPANNING_N });
    }
    let mut total = 0;
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != r {
            continue;
        }
        let vars: Vec<GradedVariable> = (1..=n as u32)
            .map(|i| if mask >> (i - 1) & 1 == 1 { GradedVariable::y(i, g) } else { GradedVariable::z(i, g) })
            .collect();
        total += eval_rank(ctx, &Signature::monomials(&vars), &vars)?;
    }
    Ok(total)
}

/// Whether the good monomials span the pattern space modulo the evaluation
/// kernel. Requires `Sp_d` of degree `g` to be registered.
pub fn spanning_check(ctx: &SemiContext, n: usize, r: usize, d: usize, g: usize) -> Result<bool, SemiError> {
    if !ctx.has_sp(d, g) {
        return Err(SemiError::SpNotRegistered { d, g });
    }
    if n > MAX_SPANNING_N {
        return Err(SemiError::TooLarge { n, max: MAX_SPANNING_N });
    }
    let good = good_monomials(n, r, d, g, ctx.alg.group())?;
    let vars = yz_slots(n, r, g);
    let all = Signature::monomials(&vars);
    if good.len() == all.len() {
        return Ok(true);
    }
    Ok(eval_rank(ctx, &good, &vars)? == eval_rank(ctx, &all, &vars)?)
}

/// Run-length shape of a Y/Z word: `y^p1 z^q1 y^p2 ... y^pu z^qu`, with only
/// `p1` and `qu` allowed to be zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BlockShape {
    pub p: Vec<usize>,
    pub q: Vec<usize>,
}

impl BlockShape {
    pub fn u(&self) -> usize {
        self.p.len()
    }

    pub fn of_word(w: &Word) -> Self {
        Self::of_flags(w.vars().iter().map(|v| v.family == Family::Y))
    }

    fn of_flags(flags: impl Iterator<Item = bool>) -> Self {
        let (mut p, mut q) = (vec![0], vec![0]);
        for is_y in flags {
            if is_y {
                if *q.last().unwrap() > 0 {
                    p.push(0);
                    q.push(0);
                }
                *p.last_mut().unwrap() += 1;
            } else {
                *q.last_mut().unwrap() += 1;
            }
        }
        BlockShape { p, q }
    }
}

/// Every block shape with `r` y-letters among `n`, in lexicographic order.
pub fn block_shapes(n: usize, r: usize) -> Vec<BlockShape> {
    let mut out: BTreeSet<BlockShape> = BTreeSet::new();
    for mask in 0u64..1 << n {
        if mask.count_ones() as usize == r {
            out.insert(BlockShape::of_flags((0..n).map(|i| mask >> i & 1 == 1)));
        }
    }
    out.into_iter().collect()
}

/// `(|G| d - 1)^(2n)`.
pub fn riley_bound(group_order: usize, d: usize, n: usize) -> Result<BigUint, SemiError> {
    if group_order == 0 || d == 0 || n == 0 {
        return Err(SemiError::InvalidParameter("riley_bound needs |G|, d, n >= 1".into()));
    }
    Ok(BigUint::from(group_order * d - 1).pow(2 * n as u32))
}

/// `2^n ((2 d1 - 1) o_g - 1)^(2r) (|G| d2 - 1)^(2(n - r)) (r + 1)^(n - r)`.
pub fn lemma10_bound(
    n: usize,
    r: usize,
    d1: usize,
    d2: usize,
    o_g: usize,
    group_order: usize,
) -> Result<BigUint, SemiError> {
    if r > n || d1 == 0 || d2 == 0 || o_g == 0 || group_order == 0 {
        return Err(SemiError::InvalidParameter("need 0 <= r <= n and d1, d2, o(g), |G| >= 1".into()));
    }
    let a = BigUint::from((2 * d1 - 1) * o_g - 1);
    let b = BigUint::from(group_order * d2 - 1);
    Ok((BigUint::one() << n)
        * a.pow(2 * r as u32)
        * b.pow(2 * (n - r) as u32)
        * BigUint::from(r + 1).pow((n - r) as u32))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeMode {
    Log,
    Exact { digit_cap: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeValue {
    Exact(BigInt),
    /// Enclosure of `log10 n`.
    Log10(Interval),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremDegree {
    pub alpha: Interval,
    pub n: DegreeValue,
}

impl TheoremDegree {
    pub fn to_json(&self) -> serde_json::Value {
        let (lo, hi) = self.alpha.to_f64_outward();
        let n = match &self.n {
            DegreeValue::Exact(v) => serde_json::Value::String(v.to_string()),
            DegreeValue::Log10(iv) => {
                let (l, h) = iv.to_f64_outward();
                serde_json::json!({ "log10_lo": l, "log10_hi": h })
            }
        };
        serde_json::json!({ "alpha": { "lo": lo, "hi": hi }, "n": n })
    }
}

/// Working precision in bits for `theorem_degree`.
pub const DEFAULT_DEGREE_PREC: u32 = 96;

/// `alpha = 8e ((2 d1 - 1) o_g - 1)^2 (|G| d2 - 1)^2` and `n = ceil(alpha^alpha)`.
pub fn theorem_degree(
    d1: usize,
    d2: usize,
    o_g: usize,
    group_order: usize,
    mode: DegreeMode,
) -> Result<TheoremDegree, SemiError> {
    theorem_degree_at(d1, d2, o_g, group_order, mode, DEFAULT_DEGREE_PREC)
}

pub fn theorem_degree_at(
    d1: usize,
    d2: usize,
    o_g: usize,
    group_order: usize,
    mode: DegreeMode,
    prec: u32,
) -> Result<TheoremDegree, SemiError> {
    if d1 == 0 || d2 == 0 || o_g == 0 || group_order == 0 {
        return Err(SemiError::InvalidParameter("d1, d2, o(g), |G| must be at least 1".into()));
    }
    let a = (2 * d1 - 1) * o_g - 1;
    let b = group_order * d2 - 1;
    if a == 0 || b == 0 {
        return Err(SemiError::Degenerate(format!(
            "alpha = 0 since (2d1-1)o(g)-1 = {a} and |G|d2-1 = {b}"
        )));
    }
    let k = BigInt::from(8u32) * BigInt::from(a * a) * BigInt::from(b * b);
    let alpha = e_interval(prec).mul_int(&k);
    let ln_alpha = alpha.ln();
    let exponent = alpha.mul(&ln_alpha);
    let ln10 = Interval::from_integer(10, prec).ln();
    let log10_n = log10_of_ceil(&exponent.div(&ln10), &alpha, &ln10);
    let n = match mode {
        DegreeMode::Log => DegreeValue::Log10(log10_n),
        DegreeMode::Exact { digit_cap } => {
            let digits = log10_n.hi().ceil().to_integer();
            if digits > BigInt::from(digit_cap) {
                DegreeValue::Log10(log10_n)
            } else {
                DegreeValue::Exact(exact_ceil_power(d1, d2, o_g, group_order, &digits)?)
            }
        }
    };
    Ok(TheoremDegree { alpha, n })
}

/// Encloses `log10 ceil(x)` from an enclosure of `log10 x`; the ceiling adds
/// less than `1 / (x ln 10) <= 1 / (alpha ln 10)` since `x = alpha^alpha >= alpha >= 1`.
fn log10_of_ceil(log10_x: &Interval, alpha: &Interval, ln10: &Interval) -> Interval {
    let slack = Interval::from_integer(1, log10_x.prec()).div(&alpha.mul(ln10));
    let upper = log10_x.add(&slack);
    Interval::from_bounds(log10_x.lo(), upper.hi(), log10_x.prec())
}

/// `ceil(alpha^alpha)` by escalating precision until the ceiling is determined.
fn exact_ceil_power(d1: usize, d2: usize, o_g: usize, group_order: usize, digits: &BigInt) -> Result<BigInt, SemiError> {
    let a = (2 * d1 - 1) * o_g - 1;
    let b = group_order * d2 - 1;
    let k = BigInt::from(8u32) * BigInt::from(a * a) * BigInt::from(b * b);
    let digits: u32 = digits.try_into().map_err(|_| SemiError::InvalidParameter("too many digits".into()))?;
    let mut prec = digits.saturating_mul(4) + 64;
    for _ in 0..8 {
        let alpha = e_interval(prec).mul_int(&k);
        let power = alpha.mul(&alpha.ln()).exp();
        if let Some(n) = power.ceil_if_determined() {
            return Ok(n);
        }
        prec = prec.saturating_mul(2);
    }
    Err(SemiError::Degenerate("exact ceiling not determined within the precision limit".into()))
}

/// `n! / 2^n`.
pub fn l8_threshold(n: usize) -> BigRational {
    BigRational::new(BigInt::from(factorial(n)), BigInt::one() << n)
}

/// True iff every dimension is strictly below `n! / 2^n`.
pub fn l8_check(dims: &[BigUint], n: usize) -> bool {
    let t = l8_threshold(n);
    dims.iter().all(|d| BigRational::from_integer(BigInt::from(d.clone())) < t)
}

/// `2^n n!`.
pub fn dim_v(n: usize) -> BigUint {
    factorial(n) << n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::group::cyclic_group;
    use crate::models::{counterexample_a, semi_example};
    use crate::parse::parse_poly;

    const Q: FieldSpec = FieldSpec::Rational;

    fn semi_ctx() -> SemiContext {
        let (a, pair) = semi_example(2, 2, Q).unwrap();
        SemiContext::new(a, pair, EngineOptions::default()).unwrap()
    }

    #[test]
    fn example_semi_identity() {
        let z2 = cyclic_group(2);
        let ctx = semi_ctx();
        let f = parse_poly("y1{1}", &z2, Q).unwrap();
        assert!(is_semi_identity(&f, &ctx).unwrap());
        assert!(!is_trivial_semi(&f, &ctx).unwrap());
        assert!(is_trivial_semi(&GradedPolynomial::zero(Q), &ctx).unwrap());
    }

    #[test]
    fn counterexample_context() {
        let z2 = cyclic_group(2);
        let (a, pair) = counterexample_a(2, 2, Q).unwrap();
        let ctx = SemiContext::new(a, pair, EngineOptions::default()).unwrap();
        let p = |s: &str| parse_poly(s, &z2, Q).unwrap();
        assert!(is_semi_identity(&p("y1{1}*y2{1}"), &ctx).unwrap());
        assert!(is_semi_identity(&p("z1{1}*z2{1}"), &ctx).unwrap());
        assert!(!is_semi_identity(&p("x1{1}*x2{1}"), &ctx).unwrap());
    }

    #[test]
    fn split_components() {
        let z2 = cyclic_group(2);
        let f = parse_poly("y1{1} + z1{1}", &z2, Q).unwrap();
        let parts = pattern_split(&f).unwrap();
        assert_eq!(parts.len(), 2);
        let g = parse_poly("y1{1}*z2{0} - z2{0}*y1{1}", &z2, Q).unwrap();
        let parts = pattern_split(&g).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts.values().next().unwrap(), &g);
        assert!(pattern_split(&parse_poly("y1{1}*y1{1}", &z2, Q).unwrap()).is_err());
    }

    #[test]
    fn sp_shapes() {
        let z2 = cyclic_group(2);
        let one = sp_d(1, 1, None, &z2, Q).unwrap();
        assert_eq!(one, parse_poly("y1{1}", &z2, Q).unwrap());
        let a = [Scalar::one(), -Scalar::one()];
        let two = sp_d(2, 1, Some(&a), &z2, Q).unwrap();
        assert_eq!(two, parse_poly("y1{1}*x3{1}*y2{1} - y2{1}*x3{1}*y1{1}", &z2, Q).unwrap());
        assert_eq!(two.homogeneous_degree(&z2).unwrap(), Some(1));
        assert_eq!(sp_d(2, 1, Some(&[Scalar::zero(), Scalar::one()]), &z2, Q), Err(SemiError::AlphaIdentityZero));
        let three = sp_d(3, 1, Some(&vec![Scalar::one(); 6]), &z2, Q).unwrap();
        assert!(three.multilinear_signature(&z2).is_some());
    }

    #[test]
    fn good_monomial_counts() {
        let z2 = cyclic_group(1);
        // D = (2*1-1)*1 = 1 would exclude everything but the empty y-order; use d=2 -> D=3
        assert_eq!(good_monomials(3, 3, 2, 0, &z2).unwrap().len(), 5);
        assert_eq!(good_monomials(2, 2, 2, 0, &z2).unwrap().len(), 2);
        assert_eq!(good_monomials(3, 0, 1, 0, &z2).unwrap().len(), 6);
    }

    #[test]
    fn spanning() {
        let ctx = semi_ctx();
        assert!(matches!(spanning_check(&ctx, 2, 2, 1, 1), Err(SemiError::SpNotRegistered { .. })));
        let ctx = ctx.register_sp(1, 1, None).unwrap();
        assert!(spanning_check(&ctx, 2, 2, 1, 1).unwrap());
        assert!(spanning_check(&ctx, 2, 1, 1, 1).unwrap());
        assert!(spanning_check(&ctx, 2, 0, 1, 1).unwrap());
    }

    #[test]
    fn shapes_tile() {
        for n in 1..=5 {
            let total: usize = (0..=n).map(|r| block_shapes(n, r).len()).sum();
            assert_eq!(total, 1 << n);
        }
        let s = block_shapes(3, 1);
        assert!(s.iter().all(|b| b.p.iter().sum::<usize>() == 1 && b.q.iter().sum::<usize>() == 2));
    }

    #[test]
    fn bounds() {
        assert_eq!(riley_bound(2, 2, 1).unwrap(), BigUint::from(9u32));
        assert_eq!(riley_bound(2, 2, 3).unwrap(), BigUint::from(729u32));
        assert!(riley_bound(1, 1, 4).unwrap().is_zero());
        assert_eq!(lemma10_bound(2, 1, 1, 1, 2, 2).unwrap(), BigUint::from(8u32));
        assert_eq!(l8_threshold(4), BigRational::new(3.into(), 2.into()));
        assert!(l8_check(&vec![BigUint::zero(); 3], 4));
        assert!(!l8_check(&[BigUint::from(24u32)], 4));
        assert_eq!(dim_v(3), BigUint::from(48u32));
    }

    #[test]
    fn degree_small_alpha_exact() {
        let t = theorem_degree(1, 1, 2, 2, DegreeMode::Exact { digit_cap: DEFAULT_DIGIT_CAP }).unwrap();
        let want: BigInt = "121088582625159471277495779540".parse().unwrap();
        assert_eq!(t.n, DegreeValue::Exact(want));
    }

    #[test]
    fn degree_true_values() {
        let t = theorem_degree(2, 2, 2, 2, DegreeMode::Log).unwrap();
        let q = |s: &str| crate::field::parse_rational(s).unwrap();
        assert!(t.alpha.lo() > q("48929072912/10000000") && t.alpha.hi() < q("48929072913/10000000"));
        assert!(t.alpha.width() < q("1/100"));
        match &t.n {
            DegreeValue::Log10(iv) => {
                assert!(iv.contains(&q("180527093/10000")));
                assert!(iv.width() < BigRational::one());
            }
            other => panic!("expected log form, got {other:?}"),
        }
        assert!(matches!(theorem_degree(1, 2, 1, 2, DegreeMode::Log), Err(SemiError::Degenerate(_))));
    }
}
