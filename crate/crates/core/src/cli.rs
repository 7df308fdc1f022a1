//! Command-line front end. [`run`] maps an argument vector to an exit code and
//! the text written to standard output and standard error.
//!
//! Exit codes: 0 verdict computed (true), 1 verdict false, 2 input error,
//! 3 resource guard.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::GradedAlgebra;
use crate::combinatorics::{count_d_good, trivial_blocks, factorial};
use crate::engine::{
    check_identity_general, check_identity_multilinear, codimension, compose_outer_graded, compose_outer_ordinary,
    generic_no_identity_check, left_ideal_witness, EngineError, EngineOptions, Signature, Target, DEFAULT_BUDGET,
};
use crate::field::FieldSpec;
use crate::group::{cyclic_group, symmetric_group, GroupTable};
use crate::io::load_algebra;
use crate::models::{counterexample_a, counterexample_direct_sum};
use crate::parse::{parse_lie, print_poly};
use crate::poly::{GradedPolynomial, GradedVariable, Word};
use crate::semi::{
    is_semi_identity, is_trivial_semi, lemma10_bound, pattern_split, riley_bound, theorem_degree, DegreeMode,
    DegreeValue, SemiContext, SemiError, DEFAULT_DIGIT_CAP,
};
use crate::subspace::SubalgebraPair;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn report(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn error(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

#[derive(Parser, Debug)]
#[command(name = "grpi", version, about = "Graded polynomial identities of finite-dimensional algebras")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// rational | p:PRIME
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldSpec>,
    /// Cap on evaluated matrix cells.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum On {
    A,
    B,
    C,
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// Algebra description whose group (and field) to use.
    #[arg(long)]
    algebra: Option<PathBuf>,
    /// Use the cyclic group of this order.
    #[arg(long, conflicts_with = "symmetric")]
    cyclic: Option<usize>,
    /// Use the symmetric group S_n (n <= 5).
    #[arg(long)]
    symmetric: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Codimension of one signature, or of every signature up to --max-degree.
    Codim {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        signature: Option<String>,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Whether a polynomial is a graded identity of A, B or C.
    Check {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "a")]
        on: On,
    },
    /// Whether a polynomial over Y and Z is a semi-identity of the file's pair.
    SemiCheck {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Symbolic and truncated ranks for the upper/lower triangular counterexample.
    Counterexample {
        #[arg(long)]
        max_degree: usize,
        /// Use the top-row/bottom-row decomposition.
        #[arg(long)]
        direct_sum: bool,
    },
    /// Counts of d-good permutations as CSV rows n,d,good_count,bound.
    Goodperms {
        #[arg(long)]
        max_n: usize,
        /// Comma-separated values of d.
        #[arg(long, default_value = "3")]
        d: String,
    },
    /// Consecutive trivial blocks in a sequence of group elements.
    Blocks {
        #[command(flatten)]
        group: GroupArgs,
        /// Comma-separated element labels.
        #[arg(long)]
        seq: String,
        #[arg(long)]
        d: usize,
    },
    /// Degree bounds; lemma and Riley bounds are added when --n is given.
    Bound {
        #[arg(long)]
        d1: usize,
        #[arg(long)]
        d2: usize,
        #[arg(long)]
        elt_order: usize,
        #[arg(long)]
        group_order: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Print the degree as an exact integer (refused past 100000 digits).
        #[arg(long)]
        exact: bool,
    },
    /// Pattern components of a multilinear polynomial over Y and Z.
    Split {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        poly: String,
    },
    /// Image of f under x_i -> x_i w; with --random, a seeded property run.
    Witness {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, required_unless_present = "random")]
        poly: Option<String>,
        #[arg(long, required_unless_present = "random")]
        w: Option<String>,
        /// Number of random (f, w) pairs; requires --seed.
        #[arg(long)]
        random: Option<usize>,
    },
    /// Substitutes copies of g into the variables of f.
    Compose {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum)]
        outer: Outer,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Outer {
    /// f ordinary, g graded.
    Ordinary,
    /// f graded, g ordinary.
    Graded,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    if s == "rational" {
        return Ok(FieldSpec::Rational);
    }
    let p = s.strip_prefix("p:").ok_or_else(|| format!("expected rational or p:INT, got {s:?}"))?;
    let p: u64 = p.parse().map_err(|_| format!("invalid prime {p:?}"))?;
    FieldSpec::prime(p).map_err(|e| e.to_string())
}

/// An input problem; maps to exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

enum Failure {
    Input(String),
    Guard(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.0)
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::ResourceGuard { .. } => Failure::Guard(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<SemiError> for Failure {
    fn from(e: SemiError) -> Self {
        match e {
            SemiError::Engine(inner) => inner.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

struct Ctx {
    field: Option<FieldSpec>,
    opts: EngineOptions,
    format: Option<Format>,
    seed: Option<u64>,
}

impl Ctx {
    fn field(&self) -> FieldSpec {
        self.field.unwrap_or_default()
    }

    fn header(&self, field: FieldSpec) -> Value {
        json!({ "version": VERSION, "field": field.to_string(), "budget": self.opts.budget })
    }

    /// A JSON report with the common header fields merged in.
    fn json(&self, field: FieldSpec, body: Value) -> String {
        let mut out = self.header(field);
        if let (Value::Object(o), Value::Object(b)) = (&mut out, body) {
            o.extend(b);
        }
        let mut s = serde_json::to_string_pretty(&out).expect("serializable report");
        s.push('\n');
        s
    }

    fn csv_preamble(&self, field: FieldSpec) -> String {
        format!("# grpi {VERSION} field={field} budget={}\n", self.opts.budget)
    }

    fn load(&self, path: &Path) -> Result<(GradedAlgebra, Option<SubalgebraPair>), InputError> {
        let (alg, pair) = load_algebra(path)?;
        if let Some(f) = self.field {
            if f != alg.field() {
                return Err(InputError(format!("--field {f} does not match the file's field {}", alg.field())));
            }
        }
        Ok((alg, pair))
    }

    fn group(&self, g: &GroupArgs) -> Result<(GroupTable, FieldSpec), InputError> {
        if let Some(p) = &g.algebra {
            let (alg, _) = self.load(p)?;
            return Ok((alg.group().clone(), alg.field()));
        }
        let group = match (g.cyclic, g.symmetric) {
            (Some(0), _) => return Err(InputError("--cyclic needs a positive order".into())),
            (Some(n), _) => cyclic_group(n),
            (None, Some(n)) if (1..=5).contains(&n) => symmetric_group(n),
            (None, Some(n)) => return Err(InputError(format!("--symmetric {n}: only S_1..S_5 are available"))),
            (None, None) => cyclic_group(2),
        };
        Ok((group, self.field()))
    }
}

/// Runs one command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::report(0, text),
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let ctx = Ctx {
        field: cli.common.field,
        opts: EngineOptions { budget: cli.common.budget },
        format: cli.common.format,
        seed: cli.common.seed,
    };
    match dispatch(&ctx, cli.verb) {
        Ok(out) => out,
        Err(Failure::Input(m)) => Outcome::error(2, m),
        Err(Failure::Guard(m)) => Outcome::error(3, m),
    }
}

fn parse_counts(s: &str) -> Result<Vec<usize>, InputError> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| InputError(format!("invalid count {t:?} in {s:?}"))))
        .collect()
}

/// Weak compositions of `n` into `k` parts, in lexicographic order.
fn signatures(k: usize, n: usize) -> Vec<Vec<usize>> {
    if k == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in signatures(k - 1, n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn verdict(b: bool) -> i32 {
    if b {
        0
    } else {
        1
    }
}

fn dispatch(ctx: &Ctx, verb: Verb) -> Result<Outcome, Failure> {
    match verb {
        Verb::Codim { algebra, signature, max_degree } => codim(ctx, &algebra, signature, max_degree),
        Verb::Check { algebra, poly, on } => {
            let (alg, pair) = ctx.load(&algebra)?;
            let f = parse_lie(&poly, alg.group(), alg.field()).map_err(InputError::from)?;
            let target = match (on, &pair) {
                (On::A, _) => Target::Algebra,
                (On::B, Some(p)) => Target::Subspace(&p.b),
                (On::C, Some(p)) => Target::Subspace(&p.c),
                (_, None) => return Err(Failure::Input("--on B|C needs a subalgebras entry in the algebra file".into())),
            };
            let multilinear = f.multilinear_signature(alg.group()).is_some();
            let holds = if multilinear {
                check_identity_multilinear(&f, &alg, target, &ctx.opts)?
            } else {
                check_identity_general(&f, &alg, target, &ctx.opts)?
            };
            let on_label = format!("{on:?}");
            let body = json!({
                "poly": print_poly(&f, alg.group()),
                "on": on_label,
                "method": if multilinear { "basis-tuples" } else { "grid" },
                "identity": holds,
            });
            Ok(Outcome::report(verdict(holds), ctx.json(alg.field(), body)))
        }
        Verb::SemiCheck { algebra, poly } => {
            let (alg, pair) = ctx.load(&algebra)?;
            let pair = pair.ok_or_else(|| Failure::Input("semi-check needs a subalgebras entry in the algebra file".into()))?;
            let field = alg.field();
            let f = parse_lie(&poly, alg.group(), field).map_err(InputError::from)?;
            let group = alg.group().clone();
            let sctx = SemiContext::new(alg, pair, ctx.opts)?;
            let semi = is_semi_identity(&f, &sctx)?;
            let trivial = if semi { Some(is_trivial_semi(&f, &sctx)?) } else { None };
            let body = json!({ "poly": print_poly(&f, &group), "semi_identity": semi, "trivial": trivial });
            Ok(Outcome::report(verdict(semi), ctx.json(field, body)))
        }
        Verb::Counterexample { max_degree, direct_sum } => counterexample(ctx, max_degree, direct_sum),
        Verb::Goodperms { max_n, d } => {
            let ds = parse_counts(&d)?;
            let mut out = ctx.csv_preamble(ctx.field());
            out.push_str("n,d,good_count,bound\n");
            for n in 1..=max_n {
                for &d in &ds {
                    let c = count_d_good(n, d).map_err(InputError::from)?;
                    out.push_str(&format!("{},{},{},{}\n", c.n, c.d, c.good, c.bound));
                }
            }
            Ok(Outcome::report(0, out))
        }
        Verb::Blocks { group, seq, d } => {
            let (h, field) = ctx.group(&group)?;
            let elems = seq
                .split(',')
                .map(|t| h.index_of(t.trim()).map_err(InputError::from))
                .collect::<Result<Vec<_>, _>>()?;
            let blocks = trivial_blocks(&h, &elems, d).map_err(InputError::from)?;
            let body = json!({ "blocks": blocks.iter().map(|(a, b)| [a, b]).collect::<Vec<_>>() });
            Ok(Outcome::report(0, ctx.json(field, body)))
        }
        Verb::Bound { d1, d2, elt_order, group_order, n, r, exact } => {
            let mode = if exact { DegreeMode::Exact { digit_cap: DEFAULT_DIGIT_CAP } } else { DegreeMode::Log };
            let t = theorem_degree(d1, d2, elt_order, group_order, mode)?;
            let mut body = t.to_json();
            body["n_form"] = json!(match t.n {
                DegreeValue::Exact(_) => "exact",
                DegreeValue::Log10(_) => "log10",
            });
            if let Some(n) = n {
                body["riley_bound"] = json!(riley_bound(group_order, d2, n)?.to_string());
                if let Some(r) = r {
                    body["lemma_bound"] = json!(lemma10_bound(n, r, d1, d2, elt_order, group_order)?.to_string());
                }
            }
            Ok(Outcome::report(0, ctx.json(ctx.field(), body)))
        }
        Verb::Split { group, poly } => {
            let (g, field) = ctx.group(&group)?;
            let f = parse_lie(&poly, &g, field).map_err(InputError::from)?;
            let parts = pattern_split(&f)?;
            let comps: Vec<Value> = parts
                .iter()
                .map(|(p, c)| json!({ "pattern": p.to_string(), "poly": print_poly(c, &g) }))
                .collect();
            Ok(Outcome::report(0, ctx.json(field, json!({ "components": comps }))))
        }
        Verb::Witness { group, poly, w, random } => {
            let (g, field) = ctx.group(&group)?;
            if let Some(count) = random {
                let seed = ctx.seed.ok_or_else(|| Failure::Input("--random needs --seed".into()))?;
                let nonzero = random_witness_run(&g, field, count, seed)?;
                let body = json!({ "cases": count, "seed": seed, "nonzero": nonzero });
                return Ok(Outcome::report(verdict(nonzero == count), ctx.json(field, body)));
            }
            let f = parse_lie(poly.as_deref().unwrap_or_default(), &g, field).map_err(InputError::from)?;
            let w = parse_lie(w.as_deref().unwrap_or_default(), &g, field).map_err(InputError::from)?;
            let out = left_ideal_witness(&f, &w, &g)?;
            Ok(Outcome::report(0, ctx.json(field, json!({ "witness": print_poly(&out, &g), "nonzero": true }))))
        }
        Verb::Compose { group, outer, f, g } => {
            let (grp, field) = ctx.group(&group)?;
            let f = parse_lie(&f, &grp, field).map_err(InputError::from)?;
            let g = parse_lie(&g, &grp, field).map_err(InputError::from)?;
            let out = match outer {
                Outer::Ordinary => compose_outer_ordinary(&f, &g, &grp)?,
                Outer::Graded => compose_outer_graded(&f, &g, &grp)?,
            };
            Ok(Outcome::report(0, ctx.json(field, json!({ "composition": print_poly(&out, &grp) }))))
        }
    }
}

fn codim(ctx: &Ctx, path: &Path, signature: Option<String>, max_degree: Option<usize>) -> Result<Outcome, Failure> {
    let (alg, _) = ctx.load(path)?;
    let group = alg.group();
    let sigs: Vec<Vec<usize>> = match (signature, max_degree) {
        (Some(s), _) => vec![parse_counts(&s)?],
        (None, Some(m)) => (1..=m).flat_map(|n| signatures(group.order(), n)).collect(),
        (None, None) => return Err(Failure::Input("codim needs --signature or --max-degree".into())),
    };
    let mut reports = Vec::new();
    for counts in sigs {
        let sig = Signature::new(counts, group)?;
        reports.push(codimension(&alg, &sig, &ctx.opts)?);
    }
    let csv = ctx.format == Some(Format::Csv) || (ctx.format.is_none() && reports.len() > 1);
    if csv {
        let mut out = ctx.csv_preamble(alg.field());
        out.push_str("signature,n,space_dim,codimension,strategy\n");
        for r in &reports {
            out.push_str(&format!(
                "\"{}\",{},{},{},{}\n",
                r.signature.to_csv(),
                r.signature.degree(),
                r.space_dim,
                r.codimension,
                r.strategy
            ));
        }
        return Ok(Outcome::report(0, out));
    }
    let body = if reports.len() == 1 {
        reports[0].to_json(group)
    } else {
        json!({ "reports": reports.iter().map(|r| r.to_json(group)).collect::<Vec<_>>() })
    };
    Ok(Outcome::report(0, ctx.json(alg.field(), body)))
}

fn counterexample(ctx: &Ctx, max_degree: usize, direct_sum: bool) -> Result<Outcome, Failure> {
    if max_degree == 0 {
        return Err(Failure::Input("--max-degree must be at least 1".into()));
    }
    let field = ctx.field();
    let build = if direct_sum { counterexample_direct_sum } else { counterexample_a };
    let z2 = cyclic_group(2);
    let sub = {
        let (letters, depth) = (4, 3);
        let (a, pair) = build(letters, depth, field).map_err(InputError::from)?;
        let f = parse_lie("x1{1}*x2{1}", &z2, field).map_err(InputError::from)?;
        json!({
            "poly": "x1{1}*x2{1}",
            "letters": letters,
            "depth": depth,
            "B": check_identity_multilinear(&f, &a, Target::Subspace(&pair.b), &ctx.opts)?,
            "C": check_identity_multilinear(&f, &a, Target::Subspace(&pair.c), &ctx.opts)?,
            "A": check_identity_multilinear(&f, &a, Target::Algebra, &ctx.opts)?,
        })
    };
    let mut rows = Vec::new();
    let mut all_full = true;
    for n in 1..=max_degree {
        let (alg, _) = build(4 * n, n, field).map_err(InputError::from)?;
        for counts in signatures(2, n) {
            let generic = generic_no_identity_check(counts[0], counts[1])?;
            let report = codimension(&alg, &Signature::new(counts.clone(), &z2)?, &ctx.opts)?;
            let full = factorial(n).to_string() == report.codimension.to_string();
            all_full &= full && generic.no_identity;
            rows.push(json!({
                "signature": counts,
                "n": n,
                "n_factorial": report.space_dim,
                "generic_rank": generic.rank,
                "codimension": report.codimension,
                "strategy": report.strategy.to_string(),
                "full": full && generic.no_identity,
            }));
        }
    }
    if ctx.format == Some(Format::Csv) {
        let mut out = ctx.csv_preamble(field);
        out.push_str("signature,n,n_factorial,generic_rank,codimension,full\n");
        for r in &rows {
            out.push_str(&format!(
                "\"{},{}\",{},{},{},{},{}\n",
                r["signature"][0], r["signature"][1], r["n"], r["n_factorial"], r["generic_rank"], r["codimension"], r["full"]
            ));
        }
        return Ok(Outcome::report(verdict(all_full), out));
    }
    let body = json!({
        "decomposition": if direct_sum { "direct-sum" } else { "triangular" },
        "sub_identities": sub,
        "signatures": rows,
        "no_identity_up_to_degree": all_full,
    });
    Ok(Outcome::report(verdict(all_full), ctx.json(field, body)))
}

/// Random multilinear `f` with up to four variables and a homogeneous `w` of
/// at most three terms; returns how many witnesses came out nonzero.
fn random_witness_run(g: &GroupTable, field: FieldSpec, count: usize, seed: u64) -> Result<usize, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut nonzero = 0;
    for _ in 0..count {
        let (f, w) = random_witness_input(&mut rng, g, field);
        match left_ideal_witness(&f, &w, g) {
            Ok(out) if !out.is_zero() => nonzero += 1,
            Ok(_) | Err(EngineError::WitnessVanished) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(nonzero)
}

/// One random input for the left-ideal witness: a nonzero multilinear `f`
/// in `1..=4` variables and a nonzero homogeneous `w` with at most 3 terms.
pub fn random_witness_input(rng: &mut impl Rng, g: &GroupTable, field: FieldSpec) -> (GradedPolynomial, GradedPolynomial) {
    let n = rng.gen_range(1..=4usize);
    let vars: Vec<GradedVariable> =
        (1..=n as u32).map(|i| GradedVariable::x(i, rng.gen_range(0..g.order()))).collect();
    let words = Signature::monomials(&vars);
    let f = loop {
        let terms = (0..rng.gen_range(1..=words.len().min(6))).map(|_| {
            let w = words[rng.gen_range(0..words.len())].clone();
            (w, field.from_i64(rng.gen_range(-3..=3)))
        });
        let f = GradedPolynomial::from_terms(field, terms).expect("integers are field elements");
        if !f.is_zero() {
            break f;
        }
    };
    let target = rng.gen_range(0..g.order());
    let w = loop {
        let mut terms = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let len = rng.gen_range(1..=3usize);
            let mut vars: Vec<GradedVariable> = (0..len - 1)
                .map(|_| GradedVariable::y(rng.gen_range(1..=3), rng.gen_range(0..g.order())))
                .collect();
            // the last letter fixes the word's degree to `target`
            let prefix = g.product(vars.iter().map(|v| v.degree));
            vars.push(GradedVariable::y(rng.gen_range(1..=3), g.mul(g.inv(prefix), target)));
            terms.push((Word::new(vars), field.from_i64(rng.gen_range(1..=4))));
        }
        let w = GradedPolynomial::from_terms(field, terms).expect("integers are field elements");
        if !w.is_zero() {
            break w;
        }
    };
    (f, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weak_compositions() {
        assert_eq!(signatures(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(signatures(3, 2).len(), 6);
        let total: usize = (1..=4).map(|n| signatures(2, n).len()).sum();
        assert_eq!(total, 14);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["grpi", "frobnicate"]).code, 2);
        assert_eq!(run(["grpi", "goodperms"]).code, 2);
        assert_eq!(run(["grpi", "goodperms", "--max-n", "3", "--field", "p:4"]).code, 2);
        assert_eq!(run(["grpi", "--version"]).code, 0);
    }

    #[test]
    fn goodperms_csv() {
        let out = run(["grpi", "goodperms", "--max-n", "3", "--d", "3"]);
        assert_eq!(out.code, 0);
        let rows: Vec<&str> = out.stdout.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(rows, vec!["n,d,good_count,bound", "1,3,1,4", "2,3,2,16", "3,3,5,64"]);
    }
}
