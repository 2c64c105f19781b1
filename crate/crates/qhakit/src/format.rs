//! JSON file format for structures, twists and dynamical families.
//!
//! See `FORMAT.md` at the repository root for the grammar. Every loader runs
//! the complete verifier battery before returning.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use qhakit_core::dynamical::{DynamicalTwist, Param, ShiftSystem};
use qhakit_core::scalar::{parse_rational, rational_to_string, FieldKind};
use qhakit_core::structures::{QuasiAntipode, QuasiBialgebra, QuasiHopf, QuasiTriangular};
use qhakit_core::twist::Twist;
use qhakit_core::{Algebra, Field, LinearMap, Rational, Scalar, Tensor};
use serde::{Deserialize, Serialize};

use qhakit_core::catalog::Structure;
use qhakit_core::dynamical::check_shifted_quasi_cocycle;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("`{0}` is neither a readable file nor a built-in structure")]
    NotFound(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{location}: {message}")]
    Schema { location: String, message: String },
    #[error("{location}: {source}")]
    Construction { location: String, source: qhakit_core::Error },
    #[error("failing checks {}", .0.join(", "))]
    Verification(Vec<String>),
}

impl LoadError {
    /// Short class name used in reports.
    pub fn class(&self) -> &'static str {
        match self {
            LoadError::NotFound(_) => "not-found",
            LoadError::Io { .. } => "io",
            LoadError::Syntax { .. } => "syntax",
            LoadError::Schema { .. } => "schema",
            LoadError::Construction { .. } => "construction",
            LoadError::Verification(_) => "verification",
        }
    }

    fn from_json(e: serde_json::Error) -> Self {
        use serde_json::error::Category;
        match e.classify() {
            Category::Data => {
                LoadError::Schema { location: format!("line {}, column {}", e.line(), e.column()), message: strip_position(&e.to_string()) }
            }
            _ => LoadError::Syntax { line: e.line(), column: e.column(), message: strip_position(&e.to_string()) },
        }
    }
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn schema(location: impl Into<String>, message: impl Into<String>) -> LoadError {
    LoadError::Schema { location: location.into(), message: message.into() }
}

fn construction(location: &str) -> impl FnOnce(qhakit_core::Error) -> LoadError + '_ {
    move |source| match source {
        qhakit_core::Error::VerificationFailed(ids) => LoadError::Verification(ids),
        source => LoadError::Construction { location: location.to_string(), source },
    }
}

// ---- serde model ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Rational,
    Cyclotomic { order: u32 },
}

/// `"p/q"` in Q, a list of reduced-basis coefficients in Q(zeta_n).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Rational(String),
    Coeffs(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<ScalarText>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry2 {
    pub i: usize,
    pub j: usize,
    pub scalar: ScalarText,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry3 {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub scalar: ScalarText,
}

/// `matrix[i]` lists the coordinates of `S(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSpec {
    pub matrix: Vec<Vec<ScalarText>>,
}

/// A parameter tuple; a bare string is a one-parameter tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamText {
    One(String),
    Tuple(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShiftSpec {
    pub idempotents: Vec<Vec<ScalarText>>,
    pub weights: Vec<ParamText>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistAt {
    pub lambda: ParamText,
    pub f: Vec<Entry2>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DynamicalSpec {
    pub domain: Vec<ParamText>,
    pub shift: ShiftSpec,
    pub twists: Vec<TwistAt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub field: FieldSpec,
    pub dimension: usize,
    pub unit: Vec<ScalarText>,
    pub mult: Vec<MultEntry>,
    pub coproduct: Vec<Vec<Entry2>>,
    pub counit: Vec<ScalarText>,
    pub antipode: MatrixSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_inv: Option<MatrixSpec>,
    pub alpha: Vec<ScalarText>,
    pub beta: Vec<ScalarText>,
    pub phi: Vec<Entry3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_matrix: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dynamical: Option<DynamicalSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistFile {
    pub field: FieldSpec,
    pub dimension: usize,
    pub f: Vec<Entry2>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_inv: Option<Vec<Entry2>>,
}

// ---- loaded documents ----

/// A verified structure together with an optional dynamical family over it.
#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub structure: Structure,
    pub dynamical: Option<DynamicalTwist>,
}

// ---- scalars ----

fn encode_scalar(s: &Scalar) -> ScalarText {
    match s.field().kind() {
        FieldKind::Rational => ScalarText::Rational(rational_to_string(&s.coeffs()[0])),
        FieldKind::Cyclotomic => ScalarText::Coeffs(s.coeffs().iter().map(rational_to_string).collect()),
    }
}

fn rational(text: &str, at: &str) -> Result<Rational, LoadError> {
    parse_rational(text).ok_or_else(|| schema(at, format!("`{text}` is not a rational of the form p or p/q")))
}

fn decode_scalar(t: &ScalarText, field: &Field, at: &str) -> Result<Scalar, LoadError> {
    match t {
        ScalarText::Rational(s) => Ok(Scalar::from_rational(rational(s, at)?, field)),
        ScalarText::Coeffs(cs) => {
            if cs.len() != field.degree() {
                return Err(schema(at, format!("expected {} coefficients, found {}", field.degree(), cs.len())));
            }
            let qs = cs.iter().enumerate().map(|(n, c)| rational(c, &format!("{at}[{n}]"))).collect::<Result<_, _>>()?;
            Scalar::from_coeffs(qs, field).map_err(construction(at))
        }
    }
}

fn encode_dense(t: &Tensor) -> Vec<ScalarText> {
    t.to_dense().iter().map(encode_scalar).collect()
}

fn decode_dense(v: &[ScalarText], field: &Field, dim: usize, at: &str) -> Result<Tensor, LoadError> {
    if v.len() != dim {
        return Err(schema(at, format!("expected {dim} coordinates, found {}", v.len())));
    }
    let cs = v.iter().enumerate().map(|(n, s)| decode_scalar(s, field, &format!("{at}[{n}]"))).collect::<Result<Vec<_>, _>>()?;
    Tensor::from_coeffs(field, &cs).map_err(construction(at))
}

fn encode_sparse2(t: &Tensor) -> Vec<Entry2> {
    t.iter().map(|(idx, c)| Entry2 { i: idx[0], j: idx[1], scalar: encode_scalar(c) }).collect()
}

fn encode_sparse3(t: &Tensor) -> Vec<Entry3> {
    t.iter().map(|(idx, c)| Entry3 { i: idx[0], j: idx[1], k: idx[2], scalar: encode_scalar(c) }).collect()
}

fn check_index(v: usize, dim: usize, at: &str) -> Result<(), LoadError> {
    if v >= dim {
        return Err(schema(at, format!("basis index {v} out of range for dimension {dim}")));
    }
    Ok(())
}

/// Sparse entries; repeated indices are rejected rather than summed.
fn decode_sparse<'a, I>(entries: I, field: &Field, dim: usize, arity: usize, at: &str) -> Result<Tensor, LoadError>
where
    I: IntoIterator<Item = (Vec<usize>, &'a ScalarText)>,
{
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (n, (idx, s)) in entries.into_iter().enumerate() {
        let here = format!("{at}[{n}]");
        for &v in &idx {
            check_index(v, dim, &here)?;
        }
        if !seen.insert(idx.clone()) {
            return Err(schema(here, format!("index {idx:?} listed twice")));
        }
        out.push((idx, decode_scalar(s, field, &format!("{here}.scalar"))?));
    }
    Tensor::from_entries(field, dim, arity, out).map_err(construction(at))
}

fn decode_sparse2(v: &[Entry2], field: &Field, dim: usize, at: &str) -> Result<Tensor, LoadError> {
    decode_sparse(v.iter().map(|e| (vec![e.i, e.j], &e.scalar)), field, dim, 2, at)
}

fn decode_field(f: &FieldSpec) -> Result<Field, LoadError> {
    match f {
        FieldSpec::Rational => Ok(Field::rational()),
        FieldSpec::Cyclotomic { order } => Field::cyclotomic(*order).map_err(construction("field")),
    }
}

fn encode_field(f: &Field) -> FieldSpec {
    match f.kind() {
        FieldKind::Rational => FieldSpec::Rational,
        FieldKind::Cyclotomic => FieldSpec::Cyclotomic { order: f.order() },
    }
}

fn encode_param(p: &Param) -> ParamText {
    ParamText::Tuple(p.iter().map(rational_to_string).collect())
}

fn decode_param(p: &ParamText, at: &str) -> Result<Param, LoadError> {
    match p {
        ParamText::One(s) => Ok(vec![rational(s, at)?]),
        ParamText::Tuple(v) => v.iter().enumerate().map(|(n, s)| rational(s, &format!("{at}[{n}]"))).collect(),
    }
}

fn encode_matrix(m: &LinearMap) -> MatrixSpec {
    MatrixSpec { matrix: m.columns().iter().map(encode_dense).collect() }
}

fn decode_matrix(m: &MatrixSpec, field: &Field, dim: usize, at: &str) -> Result<LinearMap, LoadError> {
    if m.matrix.len() != dim {
        return Err(schema(format!("{at}.matrix"), format!("expected {dim} rows, found {}", m.matrix.len())));
    }
    let cols = m
        .matrix
        .iter()
        .enumerate()
        .map(|(n, row)| decode_dense(row, field, dim, &format!("{at}.matrix[{n}]")))
        .collect::<Result<Vec<_>, _>>()?;
    LinearMap::new(cols, true).map_err(construction(at))
}

// ---- structures ----

fn encode_algebra(alg: &Algebra) -> (Vec<ScalarText>, Vec<MultEntry>) {
    let d = alg.dim();
    let mut mult = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let row = alg.product_of(i, j);
            if row.is_empty() {
                continue;
            }
            let mut dense = vec![alg.field().zero(); d];
            for (k, c) in row {
                dense[*k] = c.clone();
            }
            mult.push(MultEntry { i, j, coeffs: dense.iter().map(encode_scalar).collect() });
        }
    }
    (encode_dense(&alg.one()), mult)
}

pub fn to_file(doc: &Document) -> StructureFile {
    let h = doc.structure.qha();
    let q = h.qba();
    let alg = q.algebra();
    let (unit, mult) = encode_algebra(alg);
    StructureFile {
        field: encode_field(alg.field()),
        dimension: alg.dim(),
        unit,
        mult,
        coproduct: q.coproduct().columns().iter().map(encode_sparse2).collect(),
        counit: q.counit().columns().iter().map(|c| encode_scalar(&c.scalar_value())).collect(),
        antipode: encode_matrix(h.antipode().s_map()),
        antipode_inv: None,
        alpha: encode_dense(h.alpha()),
        beta: encode_dense(h.beta()),
        phi: encode_sparse3(q.phi()),
        r_matrix: doc.structure.triangular().map(|t| encode_sparse2(t.r())),
        dynamical: doc.dynamical.as_ref().map(encode_dynamical),
    }
}

fn encode_dynamical(d: &DynamicalTwist) -> DynamicalSpec {
    DynamicalSpec {
        domain: d.domain().map(encode_param).collect(),
        shift: ShiftSpec {
            idempotents: d.shift().idempotents().iter().map(encode_dense).collect(),
            weights: d.shift().weights().iter().map(encode_param).collect(),
        },
        twists: d.twists().iter().map(|(l, f)| TwistAt { lambda: encode_param(l), f: encode_sparse2(f.f()) }).collect(),
    }
}

pub fn from_file(file: &StructureFile) -> Result<Document, LoadError> {
    let field = decode_field(&file.field)?;
    let d = file.dimension;
    if d == 0 {
        return Err(schema("dimension", "must be at least 1"));
    }
    let unit: Vec<Scalar> = decode_dense(&file.unit, &field, d, "unit")?.to_dense();
    let mut products = Vec::new();
    let mut seen = BTreeSet::new();
    for (n, m) in file.mult.iter().enumerate() {
        let at = format!("mult[{n}]");
        check_index(m.i, d, &at)?;
        check_index(m.j, d, &at)?;
        if !seen.insert((m.i, m.j)) {
            return Err(schema(at, format!("product ({}, {}) listed twice", m.i, m.j)));
        }
        products.push((m.i, m.j, decode_dense(&m.coeffs, &field, d, &format!("{at}.coeffs"))?.to_dense()));
    }
    let alg = Arc::new(Algebra::new(&field, d, products, &unit).map_err(construction("mult"))?);

    if file.coproduct.len() != d {
        return Err(schema("coproduct", format!("expected {d} tables, found {}", file.coproduct.len())));
    }
    let delta_cols = file
        .coproduct
        .iter()
        .enumerate()
        .map(|(n, t)| decode_sparse2(t, &field, d, &format!("coproduct[{n}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let delta = LinearMap::new(delta_cols, false).map_err(construction("coproduct"))?;
    if file.counit.len() != d {
        return Err(schema("counit", format!("expected {d} values, found {}", file.counit.len())));
    }
    let eps_cols = file
        .counit
        .iter()
        .enumerate()
        .map(|(n, s)| decode_scalar(s, &field, &format!("counit[{n}]")).map(|c| Tensor::scalar(c, d)))
        .collect::<Result<Vec<_>, _>>()?;
    let eps = LinearMap::new(eps_cols, false).map_err(construction("counit"))?;
    let phi = decode_sparse(file.phi.iter().map(|e| (vec![e.i, e.j, e.k], &e.scalar)), &field, d, 3, "phi")?;
    let qba = QuasiBialgebra::unverified(alg, delta, eps, phi, None).map_err(construction("phi"))?;

    let s = decode_matrix(&file.antipode, &field, d, "antipode")?;
    let alpha = decode_dense(&file.alpha, &field, d, "alpha")?;
    let beta = decode_dense(&file.beta, &field, d, "beta")?;
    let ap = QuasiAntipode::new(s, alpha, beta).map_err(construction("antipode"))?;
    if let Some(inv) = &file.antipode_inv {
        let given = decode_matrix(inv, &field, d, "antipode_inv")?;
        if given.columns() != ap.s_inv_map().columns() {
            return Err(LoadError::Construction {
                location: "antipode_inv".to_string(),
                source: qhakit_core::Error::Postcondition("antipode_inv is not the inverse of antipode".to_string()),
            });
        }
    }
    let h = QuasiHopf::unverified(qba, ap);
    let structure = match &file.r_matrix {
        None => Structure::Hopf(h.into_verified().map_err(construction("structure"))?),
        Some(r) => {
            let r = decode_sparse2(r, &field, d, "r_matrix")?;
            let t = QuasiTriangular::unverified(h, r, None).map_err(construction("r_matrix"))?;
            Structure::Triangular(t.into_verified().map_err(construction("structure"))?)
        }
    };
    let dynamical = match &file.dynamical {
        None => None,
        Some(spec) => Some(decode_dynamical(spec, structure.qha().qba())?),
    };
    Ok(Document { structure, dynamical })
}

fn decode_dynamical(spec: &DynamicalSpec, q: &QuasiBialgebra) -> Result<DynamicalTwist, LoadError> {
    let alg = q.algebra();
    let (field, d) = (alg.field(), alg.dim());
    let idem = spec
        .shift
        .idempotents
        .iter()
        .enumerate()
        .map(|(n, v)| decode_dense(v, field, d, &format!("dynamical.shift.idempotents[{n}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let weights = spec
        .shift
        .weights
        .iter()
        .enumerate()
        .map(|(n, w)| decode_param(w, &format!("dynamical.shift.weights[{n}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let shift = ShiftSystem::new(alg, idem, weights).map_err(construction("dynamical.shift"))?;
    let domain = spec
        .domain
        .iter()
        .enumerate()
        .map(|(n, p)| decode_param(p, &format!("dynamical.domain[{n}]")))
        .collect::<Result<BTreeSet<_>, _>>()?;
    let mut twists = BTreeMap::new();
    for (n, t) in spec.twists.iter().enumerate() {
        let at = format!("dynamical.twists[{n}]");
        let lambda = decode_param(&t.lambda, &format!("{at}.lambda"))?;
        if !domain.contains(&lambda) {
            return Err(schema(format!("{at}.lambda"), "parameter is not listed in the domain"));
        }
        let f = decode_sparse2(&t.f, field, d, &format!("{at}.f"))?;
        let f = Twist::new(q, f).map_err(construction(&at))?;
        if twists.insert(lambda, f).is_some() {
            return Err(schema(format!("{at}.lambda"), "parameter listed twice"));
        }
    }
    if twists.len() != domain.len() {
        return Err(schema("dynamical.twists", "every domain point needs exactly one twist"));
    }
    let family = DynamicalTwist::new(twists, shift).map_err(construction("dynamical"))?;
    let rep = check_shifted_quasi_cocycle(&family, q);
    if !rep.passed() {
        return Err(LoadError::Verification(rep.failed_ids()));
    }
    Ok(family)
}

// ---- twists ----

pub fn twist_to_file(q: &QuasiBialgebra, f: &Twist) -> TwistFile {
    TwistFile { field: encode_field(q.field()), dimension: q.dim(), f: encode_sparse2(f.f()), f_inv: None }
}

/// Reads a twist for `q`; field and dimension must match.
pub fn twist_from_file(file: &TwistFile, q: &QuasiBialgebra) -> Result<Twist, LoadError> {
    let field = decode_field(&file.field)?;
    if &field != q.field() {
        return Err(schema("field", "twist and structure use different fields"));
    }
    if file.dimension != q.dim() {
        return Err(schema("dimension", format!("twist has dimension {}, structure has {}", file.dimension, q.dim())));
    }
    let f = decode_sparse2(&file.f, &field, q.dim(), "f")?;
    let tw = match &file.f_inv {
        None => Twist::new(q, f),
        Some(inv) => Twist::with_inverse(q, f, decode_sparse2(inv, &field, q.dim(), "f_inv")?),
    };
    tw.map_err(construction("f"))
}

// ---- text entry points ----

const LINE: usize = 96;

/// Pretty JSON that keeps any value fitting on one line on one line.
pub fn json_text(v: &serde_json::Value) -> String {
    let mut out = String::new();
    write_json(v, 0, &mut out);
    out.push('\n');
    out
}

fn write_json(v: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let compact = v.to_string();
    if indent + compact.len() <= LINE {
        out.push_str(&compact);
        return;
    }
    let pad = " ".repeat(indent + 2);
    match v {
        Value::Array(items) => {
            out.push_str("[\n");
            for (n, item) in items.iter().enumerate() {
                out.push_str(&pad);
                write_json(item, indent + 2, out);
                out.push_str(if n + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&" ".repeat(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (n, (k, item)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_json(item, indent + 2, out);
                out.push_str(if n + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&" ".repeat(indent));
            out.push('}');
        }
        _ => out.push_str(&compact),
    }
}

fn render<T: Serialize>(v: &T) -> String {
    json_text(&serde_json::to_value(v).expect("the model has string keys only"))
}

pub fn parse_structure(text: &str) -> Result<Document, LoadError> {
    let file: StructureFile = serde_json::from_str(text).map_err(LoadError::from_json)?;
    from_file(&file)
}

pub fn serialize_structure(doc: &Document) -> String {
    render(&to_file(doc))
}

pub fn parse_twist(text: &str, q: &QuasiBialgebra) -> Result<Twist, LoadError> {
    let file: TwistFile = serde_json::from_str(text).map_err(LoadError::from_json)?;
    twist_from_file(&file, q)
}

pub fn serialize_twist(q: &QuasiBialgebra, f: &Twist) -> String {
    render(&twist_to_file(q, f))
}

/// Element encoding used by the compute command: coordinates for elements
/// of `H`, sorted sparse entries for tensors.
pub fn encode_tensor(t: &Tensor) -> serde_json::Value {
    use serde_json::{json, Value};
    if t.arity() == 1 {
        return serde_json::to_value(encode_dense(t)).expect("plain data");
    }
    Value::Array(
        t.iter().map(|(idx, c)| json!({ "index": idx, "scalar": serde_json::to_value(encode_scalar(c)).expect("plain data") })).collect(),
    )
}

pub fn scalar_text(s: &Scalar) -> String {
    match encode_scalar(s) {
        ScalarText::Rational(r) => r,
        ScalarText::Coeffs(v) => format!("[{}]", v.join(", ")),
    }
}
