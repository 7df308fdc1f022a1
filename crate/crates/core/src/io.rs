//! JSON description files for graded algebras and subalgebra pairs.

use std::path::Path;

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{GradedAlgebra, ModelError};
use crate::field::{parse_rational, FieldSpec, Scalar};
use crate::group::{cyclic_group, group_from_table, GroupTable};
use crate::linalg::SparseVec;
use crate::subspace::{SubalgebraPair, Subspace};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("schema violation at {pointer}: {message}")]
    Schema { pointer: String, message: String },
    #[error(transparent)]
    Model(#[from] ModelError),
}

fn schema<T>(pointer: impl Into<String>, message: impl Into<String>) -> Result<T, LoadError> {
    Err(LoadError::Schema { pointer: pointer.into(), message: message.into() })
}

fn get<'a>(v: &'a Value, ptr: &str) -> Result<&'a Value, LoadError> {
    match v.pointer(ptr) {
        Some(x) => Ok(x),
        None => schema(ptr, "missing"),
    }
}

fn as_array<'a>(v: &'a Value, ptr: &str) -> Result<&'a Vec<Value>, LoadError> {
    match v.pointer(ptr) {
        Some(Value::Array(a)) => Ok(a),
        Some(_) => schema(ptr, "expected an array"),
        None => schema(ptr, "missing"),
    }
}

fn as_usize(v: &Value, ptr: &str) -> Result<usize, LoadError> {
    match v.pointer(ptr).and_then(Value::as_u64) {
        Some(x) => Ok(x as usize),
        None => schema(ptr, "expected a nonnegative integer"),
    }
}

fn as_str<'a>(v: &'a Value, ptr: &str) -> Result<&'a str, LoadError> {
    match v.pointer(ptr) {
        Some(Value::String(s)) => Ok(s),
        Some(_) => schema(ptr, "expected a string"),
        None => schema(ptr, "missing"),
    }
}

/// Rational from a string such as `"-2/3"` or a JSON integer.
fn as_scalar(v: &Value, ptr: &str, field: &FieldSpec) -> Result<Scalar, LoadError> {
    let q = match v.pointer(ptr) {
        Some(Value::String(s)) => parse_rational(s),
        Some(Value::Number(n)) => n.as_i64().map(|i| Scalar::from_integer(i.into())),
        _ => None,
    };
    match q {
        Some(q) => field.normalize(&q).or_else(|e| schema(ptr, e.to_string())),
        None => schema(ptr, "expected a rational number as a string"),
    }
}

fn escape(key: &str) -> String {
    key.replace('~', "~0").replace('/', "~1")
}

fn parse_field(doc: &Value) -> Result<FieldSpec, LoadError> {
    if doc.pointer("/field").is_none() {
        return Ok(FieldSpec::Rational);
    }
    match as_str(doc, "/field/kind")? {
        "rational" => Ok(FieldSpec::Rational),
        "prime" => {
            let p = as_usize(doc, "/field/p")? as u64;
            FieldSpec::prime(p).or_else(|e| schema("/field/p", e.to_string()))
        }
        other => schema("/field/kind", format!("unknown field kind {other:?}")),
    }
}

fn parse_group(doc: &Value) -> Result<GroupTable, LoadError> {
    match as_str(doc, "/group/kind")? {
        "cyclic" => {
            let n = as_usize(doc, "/group/n")?;
            if n == 0 {
                return schema("/group/n", "order must be positive");
            }
            Ok(cyclic_group(n))
        }
        "table" => {
            let labels = as_array(doc, "/group/labels")?
                .iter()
                .enumerate()
                .map(|(i, _)| as_str(doc, &format!("/group/labels/{i}")).map(str::to_string))
                .collect::<Result<Vec<_>, _>>()?;
            let rows = as_array(doc, "/group/table")?;
            let mut table = Vec::with_capacity(rows.len());
            for i in 0..rows.len() {
                let row = as_array(doc, &format!("/group/table/{i}"))?;
                table.push((0..row.len()).map(|j| as_usize(doc, &format!("/group/table/{i}/{j}"))).collect::<Result<Vec<_>, _>>()?);
            }
            group_from_table(labels, table).or_else(|e| schema("/group/table", e.to_string()))
        }
        other => schema("/group/kind", format!("unknown group kind {other:?}")),
    }
}

fn parse_vectors(doc: &Value, ptr: &str, dim: usize, field: &FieldSpec) -> Result<Vec<SparseVec>, LoadError> {
    let vs = as_array(doc, ptr)?;
    let mut out = Vec::with_capacity(vs.len());
    for (i, _) in vs.iter().enumerate() {
        let p = format!("{ptr}/{i}");
        let entries = as_array(doc, &p)?;
        if entries.len() != dim {
            return schema(p, format!("vector has length {}, expected {dim}", entries.len()));
        }
        let dense = (0..dim).map(|j| as_scalar(doc, &format!("{p}/{j}"), field)).collect::<Result<Vec<_>, _>>()?;
        out.push(SparseVec::from_dense(field, &dense));
    }
    Ok(out)
}

/// Parses a description, checks grading compatibility, associativity and, when
/// present, the subalgebra pair.
pub fn parse_algebra(text: &str) -> Result<(GradedAlgebra, Option<SubalgebraPair>), LoadError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| LoadError::Json(e.to_string()))?;
    if !doc.is_object() {
        return schema("", "expected an object");
    }
    let field = parse_field(&doc)?;
    let group = parse_group(&doc)?;
    let basis = as_array(&doc, "/basis")?;
    let labels = (0..basis.len()).map(|i| as_str(&doc, &format!("/basis/{i}")).map(str::to_string)).collect::<Result<Vec<_>, _>>()?;
    let grading_obj = match get(&doc, "/grading")? {
        Value::Object(m) => m,
        _ => return schema("/grading", "expected an object mapping basis labels to degree labels"),
    };
    let mut grading = Vec::with_capacity(labels.len());
    for label in &labels {
        let ptr = format!("/grading/{}", escape(label));
        let deg = match grading_obj.get(label) {
            Some(Value::String(s)) => s.clone(),
            Some(Value::Number(n)) => n.to_string(),
            Some(_) => return schema(ptr, "expected a degree label"),
            None => return schema(ptr, "missing degree for basis vector"),
        };
        grading.push(group.index_of(&deg).or_else(|e| schema(ptr.clone(), e.to_string()))?);
    }
    if let Some(extra) = grading_obj.keys().find(|k| !labels.contains(k)) {
        return schema(format!("/grading/{}", escape(extra)), "not a basis label");
    }
    let mut products: Vec<((usize, usize), SparseVec)> = Vec::new();
    let mult = match doc.pointer("/mult") {
        None => &[][..],
        Some(_) => &as_array(&doc, "/mult")?[..],
    };
    for (n, entry) in mult.iter().enumerate() {
        let p = format!("/mult/{n}");
        if entry.as_array().map(Vec::len) != Some(4) {
            return schema(p, "expected [i, j, k, \"coeff\"]");
        }
        let i = as_usize(&doc, &format!("{p}/0"))?;
        let j = as_usize(&doc, &format!("{p}/1"))?;
        let k = as_usize(&doc, &format!("{p}/2"))?;
        let c = as_scalar(&doc, &format!("{p}/3"), &field)?;
        for (slot, idx) in [(0, i), (1, j), (2, k)] {
            if idx >= labels.len() {
                return schema(format!("{p}/{slot}"), format!("basis index {idx} out of range for dimension {}", labels.len()));
            }
        }
        products.push(((i, j), SparseVec::from_entries(&field, [(k, c)])));
    }
    let dim = labels.len();
    let alg = GradedAlgebra::new(field, group, labels, grading, products)?;
    alg.check_associative()?;
    let pair = match doc.pointer("/subalgebras") {
        None | Some(Value::Null) => None,
        Some(_) => {
            let b = Subspace::new(&alg, &parse_vectors(&doc, "/subalgebras/B", dim, &field)?)?;
            let c = Subspace::new(&alg, &parse_vectors(&doc, "/subalgebras/C", dim, &field)?)?;
            let ideal = match doc.pointer("/subalgebras/b_is_ideal") {
                None => false,
                Some(Value::Bool(x)) => *x,
                Some(_) => return schema("/subalgebras/b_is_ideal", "expected a boolean"),
            };
            let pair = SubalgebraPair::new(b, c, ideal);
            pair.validate(&alg)?;
            Some(pair)
        }
    };
    Ok((alg, pair))
}

pub fn load_algebra(path: &Path) -> Result<(GradedAlgebra, Option<SubalgebraPair>), LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| LoadError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_algebra(&text)
}

/// Description of an algebra (and pair) in the format read by [`parse_algebra`].
pub fn algebra_to_json(alg: &GradedAlgebra, pair: Option<&SubalgebraPair>) -> Value {
    let field = alg.field();
    let group = alg.group();
    let fv = match field {
        FieldSpec::Rational => json!({"kind": "rational"}),
        FieldSpec::Prime { p } => json!({"kind": "prime", "p": p}),
    };
    let cyclic = (0..group.order()).all(|i| group.label(i) == i.to_string())
        && (0..group.order()).all(|i| (0..group.order()).all(|j| group.mul(i, j) == (i + j) % group.order()));
    let gv = if cyclic {
        json!({"kind": "cyclic", "n": group.order()})
    } else {
        json!({"kind": "table", "labels": group.labels(), "table": group.table()})
    };
    let grading: serde_json::Map<String, Value> = alg
        .labels()
        .iter()
        .zip(alg.grading())
        .map(|(l, &g)| (l.clone(), Value::String(group.label(g).to_string())))
        .collect();
    let mut mult: Vec<(usize, usize, usize, String)> = alg
        .structure_constants()
        .flat_map(|(&(i, j), v)| v.entries().iter().map(move |(k, c)| (i, j, *k, field.format(c))))
        .collect();
    mult.sort();
    let mut doc = json!({
        "field": fv,
        "group": gv,
        "basis": alg.labels(),
        "grading": grading,
        "mult": mult.into_iter().map(|(i, j, k, c)| json!([i, j, k, c])).collect::<Vec<_>>(),
    });
    if let Some(pair) = pair {
        let dense = |s: &Subspace| -> Vec<Vec<String>> {
            s.rows().iter().map(|r| r.to_dense(alg.dim()).iter().map(|c| field.format(c)).collect()).collect()
        };
        doc["subalgebras"] = json!({"B": dense(&pair.b), "C": dense(&pair.c), "b_is_ideal": pair.b_is_ideal});
    }
    doc
}
