//! Single computations with their postcondition checks.

use qhakit_core::antipode_equiv::{antipode_from_v, v_report};
use qhakit_core::drinfeld::{drinfeld_report, gamma_bar_report, gamma_report};
use qhakit_core::qtriangular::{altschuler_coste_report, u_report};
use qhakit_core::random::random_invertible;
use qhakit_core::report::{Check, Report};
use qhakit_core::structures::QuasiTriangular;
use qhakit_core::twist::quadratic_invariant;
use qhakit_core::Tensor;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::format::{encode_tensor, scalar_text, Document};
use crate::render::{check_json, witness_text, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum What {
    Drinfeld,
    SecondDrinfeld,
    U,
    V,
    Gamma,
    Invariants(i64),
    AcOperator,
}

impl What {
    pub fn name(self) -> String {
        match self {
            What::Drinfeld => "drinfeld".into(),
            What::SecondDrinfeld => "second-drinfeld".into(),
            What::U => "u".into(),
            What::V => "v".into(),
            What::Gamma => "gamma".into(),
            What::Invariants(m) => format!("invariants {m}"),
            What::AcOperator => "ac-operator".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Computed {
    pub what: What,
    pub values: Vec<(&'static str, Tensor)>,
    pub report: Report,
}

#[derive(Debug, thiserror::Error)]
pub enum ComputeError {
    #[error("`{what}` is not applicable: {reason}")]
    Inapplicable { what: String, reason: &'static str },
    #[error("computation failed: {0}")]
    Failed(qhakit_core::Error),
}

fn needs_r(doc: &Document, what: What) -> Result<&QuasiTriangular, ComputeError> {
    doc.structure.triangular().ok_or(ComputeError::Inapplicable { what: what.name(), reason: "the structure has no R-matrix" })
}

/// `seed` only matters for `v`, whose second quasi-antipode is drawn from it.
pub fn compute(doc: &Document, what: What, seed: u64) -> Result<Computed, ComputeError> {
    let h = doc.structure.qha();
    let alg = h.algebra();
    let (values, report) = match what {
        What::Drinfeld | What::SecondDrinfeld => {
            let (d, r) = drinfeld_report(h);
            let d = d.ok_or_else(|| ComputeError::Failed(qhakit_core::Error::Postcondition(r.failed_ids().join(", "))))?;
            let tw = if what == What::Drinfeld { d.f_delta } else { d.f_zero };
            (vec![("f", tw.f().clone()), ("f_inv", tw.f_inv().clone())], r)
        }
        What::Gamma => {
            let (g, mut r) = gamma_report(h);
            let (gb, rb) = gamma_bar_report(h);
            r.extend(rb);
            (vec![("gamma", g), ("gamma_bar", gb)], r)
        }
        What::U => {
            let (u, r) = u_report(needs_r(doc, what)?);
            (vec![("u", u.u), ("u_inv", u.u_inv), ("u_tilde", u.u_tilde), ("u_tilde_inv", u.u_tilde_inv)], r)
        }
        What::V => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let w = random_invertible(alg, &mut rng);
            let alt = antipode_from_v(h, &w).map_err(ComputeError::Failed)?;
            let (f, mut r) = v_report(h, &alt);
            r.push(Check::equal("v-equals-generator", &f.v, &w));
            (vec![("v", f.v), ("v_inv", f.v_inv), ("alt_alpha", alt.alpha().clone()), ("alt_beta", alt.beta().clone())], r)
        }
        What::Invariants(m) => {
            let t = needs_r(doc, what)?;
            let mut r = Report::new();
            let z = quadratic_invariant(t, m).map_err(ComputeError::Failed)?;
            r.push(Check::from_bool("invariant-central", alg.is_central(&z), "not central"));
            (vec![("z", z)], r)
        }
        What::AcOperator => {
            let (a, r) = altschuler_coste_report(needs_r(doc, what)?).map_err(ComputeError::Failed)?;
            (vec![("a", a)], r)
        }
    };
    Ok(Computed { what, values, report })
}

fn tensor_text(t: &Tensor) -> String {
    if t.arity() == 1 {
        let parts: Vec<String> = t.to_dense().iter().map(scalar_text).collect();
        return format!("[{}]", parts.join(", "));
    }
    let parts: Vec<String> = t.iter().map(|(idx, c)| format!("{:?} {}", idx, scalar_text(c))).collect();
    format!("{{{}}}", parts.join("; "))
}

pub fn render_computed(input: &str, c: &Computed, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = format!("input {} compute {}\n", input, c.what.name());
            for (name, t) in &c.values {
                out.push_str(&format!("{name} = {}\n", tensor_text(t)));
            }
            let total = c.report.checks.len();
            let failed = c.report.failures().count();
            out.push_str(&format!("checks: {} of {total} passed\n", total - failed));
            for f in c.report.failures() {
                out.push_str(&format!("  FAIL {}  {}\n", f.id, f.witness.as_ref().map(witness_text).unwrap_or_default()));
            }
            out
        }
        Format::Structured => {
            let values: serde_json::Map<String, Value> = c.values.iter().map(|(n, t)| (n.to_string(), encode_tensor(t))).collect();
            let v = json!({
                "input": input,
                "compute": c.what.name(),
                "values": values,
                "passed": c.report.passed(),
                "checks": c.report.checks.iter().map(check_json).collect::<Vec<_>>(),
            });
            crate::format::json_text(&v)
        }
    }
}
