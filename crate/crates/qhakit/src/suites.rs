//! Verification suites over one loaded structure.

use qhakit_core::antipode_equiv::{antipode_from_v, check_v_universality, compute_v, v_report};
use qhakit_core::catalog::Structure;
use qhakit_core::drinfeld::{
    compute_drinfeld_twist, drinfeld_report, drinfeld_under_twist_report, gamma_bar_under_twist, opposite_drinfeld_report,
};
use qhakit_core::dynamical::{
    check_shifted_quasi_cocycle, classical_dqybe_sides, dynamical_report, param_to_string, qdqybe_sides, DynamicalTwist, Param, ShiftSystem,
};
use qhakit_core::qtriangular::{altschuler_coste_report, check_u_universality, opposite_by_r_vs_cop, r_twist, ssr_report, u_report, Which};
use qhakit_core::random::{random_central_invertible, random_invertible, random_twist};
use qhakit_core::report::{Check, Report, Witness};
use qhakit_core::structures::{helper_identities, qqybe_sides, QuasiHopf, QuasiTriangular};
use qhakit_core::twist::{
    central_to_compatible, compatible_to_central, is_compatible, is_quasi_cocycle, quadratic_invariant, twist_qba, twist_qha, twist_qt,
    twisted_phi, Twist,
};
use qhakit_core::{Rational, Result};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::format::Document;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Axioms,
    Twist,
    Drinfeld,
    Qtriangular,
    Dynamical,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [Suite::Axioms, Suite::Twist, Suite::Drinfeld, Suite::Qtriangular, Suite::Dynamical];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Twist => "twist",
            Suite::Drinfeld => "drinfeld",
            Suite::Qtriangular => "qtriangular",
            Suite::Dynamical => "dynamical",
            Suite::All => "all",
        }
    }

    fn needs_r(self) -> bool {
        matches!(self, Suite::Qtriangular | Suite::Dynamical)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    /// Random instances per randomized battery.
    pub samples: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, samples: 25 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub report: Report,
    /// Why the suite did not run, if it did not.
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Run {
    pub input: String,
    pub options: Options,
    pub outcomes: Vec<SuiteOutcome>,
}

impl Run {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.report.passed())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("suite `{suite}` does not apply: {reason}")]
pub struct Inapplicable {
    pub suite: &'static str,
    pub reason: String,
}

const NO_R: &str = "the structure has no R-matrix";

pub fn run(input: &str, doc: &Document, suite: Suite, opts: Options) -> std::result::Result<Run, Inapplicable> {
    let has_r = doc.structure.triangular().is_some();
    if suite.needs_r() && !has_r {
        return Err(Inapplicable { suite: suite.name(), reason: NO_R.to_string() });
    }
    let chosen: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let outcomes = chosen
        .into_iter()
        .map(|s| {
            if s.needs_r() && !has_r {
                SuiteOutcome { suite: s, report: Report::new(), skipped: Some(NO_R.to_string()) }
            } else {
                SuiteOutcome { suite: s, report: run_one(doc, s, opts), skipped: None }
            }
        })
        .collect();
    Ok(Run { input: input.to_string(), options: opts, outcomes })
}

fn run_one(doc: &Document, suite: Suite, opts: Options) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let h = doc.structure.qha();
    let t = doc.structure.triangular();
    match suite {
        Suite::Axioms => axioms(&doc.structure),
        Suite::Twist => twist_suite(h, t, opts.samples, &mut rng),
        Suite::Drinfeld => drinfeld_suite(h, opts.samples, &mut rng),
        Suite::Qtriangular => qtriangular_suite(t.expect("checked by run")),
        Suite::Dynamical => dynamical_suite(t.expect("checked by run"), doc.dynamical.as_ref(), opts.samples, &mut rng),
        Suite::All => unreachable!("expanded by run"),
    }
}

/// One check summarizing a whole sub-report: passes iff every check does,
/// otherwise carries the first witness and the list of failing ids.
pub fn fold(id: impl Into<String>, rep: &Report) -> Check {
    match rep.failures().next() {
        None => Check::pass(id),
        Some(first) => {
            let mut w = first.witness.clone().unwrap_or_else(|| Witness::note(""));
            w.note = Some(format!("failing: {}", rep.failed_ids().join(", ")));
            Check::fail(id, w)
        }
    }
}

fn from_result(id: &str, r: Result<Report>) -> Report {
    match r {
        Ok(rep) => rep,
        Err(e) => {
            let mut rep = Report::new();
            rep.push(Check::from_bool(id, false, &e.to_string()));
            rep
        }
    }
}

fn bool_result(id: String, r: Result<bool>, note: &str) -> Check {
    match r {
        Ok(ok) => Check::from_bool(id, ok, note),
        Err(e) => Check::from_bool(id, false, &e.to_string()),
    }
}

pub fn axioms(s: &Structure) -> Report {
    let mut rep = s.verify();
    rep.extend(helper_identities(s.qha()));
    rep
}

/// Random twists: twisted structures, the group law, the cocycle criterion,
/// the v-operator and its universality, compatible twists and their central
/// elements.
pub fn twist_suite(h: &QuasiHopf, t: Option<&QuasiTriangular>, samples: usize, rng: &mut ChaCha8Rng) -> Report {
    let q = h.qba();
    let alg = h.algebra();
    let mut rep = Report::new();
    for k in 0..samples {
        let p = format!("sample[{k}].");
        let f = random_twist(q, rng);
        let g = random_twist(q, rng);
        let twisted = match t {
            Some(t) => twist_qt(t, &f).verify(),
            None => twist_qha(h, &f).verify(),
        };
        rep.push(fold(format!("{p}twisted-structure-verifies"), &twisted));
        let back = match t {
            Some(t) => twist_qt(&twist_qt(t, &f), &f.inverse()) == *t,
            None => twist_qha(&twist_qha(h, &f), &f.inverse()) == *h,
        };
        rep.push(Check::from_bool(format!("{p}twist-by-inverse-restores"), back, "twisting back changed the structure"));
        let fg = f.compose(&g, alg);
        let law = match t {
            Some(t) => twist_qt(&twist_qt(t, &g), &f) == twist_qt(t, &fg),
            None => twist_qha(&twist_qha(h, &g), &f) == twist_qha(h, &fg),
        };
        rep.push(Check::from_bool(format!("{p}composition-law"), law, "twisting by G then F differs from FG"));
        let cocycle = is_quasi_cocycle(&f, q) == (twisted_phi(q, &f) == *q.phi());
        rep.push(Check::from_bool(
            format!("{p}cocycle-iff-phi-fixed"),
            cocycle,
            "quasi-cocycle test disagrees with the twisted coassociator",
        ));

        let w = random_invertible(alg, rng);
        match antipode_from_v(h, &w) {
            Ok(alt) => {
                let (_, vr) = v_report(h, &alt);
                rep.push(fold(format!("{p}v-relations"), &vr));
                rep.push(bool_result(format!("{p}v-recovers-generator"), compute_v(h, &alt).map(|v| v == w), "v differs from w"));
                rep.push(bool_result(format!("{p}v-universal"), check_v_universality(h, &alt, &f), "v changed under the twist"));
            }
            Err(e) => rep.push(Check::from_bool(format!("{p}v-relations"), false, &e.to_string())),
        }
        if let Some(t) = t {
            rep.push(bool_result(format!("{p}u-universal"), check_u_universality(t, &f), "u changed under the twist"));
        }

        let z = random_central_invertible(alg, rng);
        match central_to_compatible(&z, q) {
            Ok(c) => {
                rep.push(Check::from_bool(format!("{p}central-to-compatible"), is_compatible(&c, q), "not compatible"));
                rep.push(bool_result(format!("{p}compatible-to-central"), compatible_to_central(&c, h).map(|_| true), ""));
                let gc = f.compose(&c, alg);
                let same = twist_qba(q, &gc) == twist_qba(q, &f);
                rep.push(Check::from_bool(format!("{p}compatible-factor-invisible"), same, "F C and F twist differently"));
                let back = f.inverse().compose(&gc, alg);
                rep.push(Check::from_bool(format!("{p}quotient-is-compatible"), is_compatible(&back, q), "F^-1 G is not compatible"));
            }
            Err(e) => rep.push(Check::from_bool(format!("{p}central-to-compatible"), false, &e.to_string())),
        }
        let equal = twist_qba(q, &f) == twist_qba(q, &g);
        let quot = is_compatible(&f.inverse().compose(&g, alg), q);
        rep.push(Check::from_bool(format!("{p}equal-twists-iff-compatible"), equal == quot, "criterion disagrees"));
    }
    rep
}

/// The Drinfeld twists, their opposite-structure routes, and their
/// behaviour under random twists.
pub fn drinfeld_suite(h: &QuasiHopf, samples: usize, rng: &mut ChaCha8Rng) -> Report {
    let (_, mut rep) = drinfeld_report(h);
    rep.extend(from_result("opposite-drinfeld", opposite_drinfeld_report(h).map(|(_, r)| r)));
    for k in 0..samples {
        let p = format!("sample[{k}].");
        let g = random_twist(h.qba(), rng);
        let r = from_result("drinfeld-under-twist", drinfeld_under_twist_report(h, &g).map(|(_, r)| r));
        rep.push(fold(format!("{p}drinfeld-under-twist"), &r));
        let gb = gamma_bar_under_twist(h, &g).map(|_| true);
        rep.push(bool_result(format!("{p}gamma-bar-under-twist"), gb, ""));
    }
    rep
}

/// Compatible twists built from `R` and `R~ = (R^T)^{-1}`.
pub fn r_compatibles(t: &QuasiTriangular) -> Vec<(&'static str, qhakit_core::Tensor)> {
    let alg = t.qba().algebra();
    let r = t.r();
    let rt = t.r_inv().transpose();
    let rt_inv = r.transpose();
    vec![
        ("rt-r", alg.mul(&r.transpose(), r)),
        ("r-tilde-inverse-r", alg.mul(&rt_inv, r)),
        ("r-tilde-transpose-r", alg.mul(&rt.transpose(), r)),
        ("r-inverse-r-tilde", alg.mul(t.r_inv(), &rt)),
        ("r-transpose-r-tilde", alg.mul(&r.transpose(), &rt)),
    ]
}

pub fn qtriangular_suite(t: &QuasiTriangular) -> Report {
    let q = t.qba();
    let alg = q.algebra();
    let (_, mut rep) = u_report(t);
    rep.extend(from_result("ssr", ssr_report(t)));
    rep.extend(from_result("ac", altschuler_coste_report(t).map(|(_, r)| r)));
    rep.extend(from_result("opposite-by-r", opposite_by_r_vs_cop(t)));
    let (l, r) = qqybe_sides(q, t.r());
    rep.push(Check::equal("qqybe", &l, &r));
    for (label, c) in r_compatibles(t) {
        let ok = Twist::new(q, c).is_ok_and(|c| is_compatible(&c, q));
        rep.push(Check::from_bool(format!("compatible-{label}"), ok, "not a compatible twist"));
    }
    match quadratic_invariant(t, 0) {
        Ok(z) => rep.push(Check::equal("quadratic-invariant[0]", &z, &alg.one())),
        Err(e) => rep.push(Check::from_bool("quadratic-invariant[0]", false, &e.to_string())),
    }
    for m in [1i64, 2] {
        let id = format!("quadratic-invariants-inverse[{m}]");
        match (quadratic_invariant(t, m), quadratic_invariant(t, -m)) {
            (Ok(a), Ok(b)) => rep.push(Check::equal(id, &alg.mul(&a, &b), &alg.one())),
            (Err(e), _) | (_, Err(e)) => rep.push(Check::from_bool(id, false, &e.to_string())),
        }
    }
    let h = t.qha();
    let fr = drinfeld_under_twist_report(h, &r_twist(t, Which::R)).and_then(|(fr, r)| {
        let fd = compute_drinfeld_twist(h)?;
        let rrt = alg.mul(t.r(), &t.r().transpose());
        let want = alg.mul(&fd.f().transpose(), &alg.invert(&rrt)?);
        let mut r = r;
        r.push(Check::equal("drinfeld-of-r-twist", fr.f(), &want));
        Ok(r)
    });
    rep.extend_prefixed("r-twist.", from_result("drinfeld-of-r-twist", fr));
    rep
}

fn zero(n: i64) -> Param {
    vec![Rational::from_integer(n.into())]
}

/// The family's own identities, plus the degenerations: zero weights
/// collapse the shifted conditions to the plain ones, and a trivial
/// coassociator collapses the quasi-dynamical equation to the classical one.
pub fn dynamical_suite(t: &QuasiTriangular, family: Option<&DynamicalTwist>, samples: usize, rng: &mut ChaCha8Rng) -> Report {
    let q = t.qba();
    let alg = q.algebra();
    let domain = [zero(0), zero(1)];
    let flat = ShiftSystem::trivial(alg, 1);
    let mut rep = match family {
        Some(d) => {
            let mut rep = dynamical_report(d, t);
            if *q.phi() == q.one(3) {
                for lambda in d.checkable() {
                    let id = format!("classical-dqybe[{}]", param_to_string(&lambda));
                    let same = qdqybe_sides(d, t, &lambda).and_then(|a| Ok(a == classical_dqybe_sides(d, t, &lambda)?));
                    rep.push(bool_result(id, same, "quasi-dynamical and classical sides differ"));
                }
            }
            rep
        }
        None => Report::new(),
    };

    let c = Twist::new(q, alg.mul(&t.r().transpose(), t.r()));
    let degenerate = c.and_then(|c| {
        let d = DynamicalTwist::constant(&c, &domain, flat.clone())?;
        let mut r = Report::new();
        r.extend_prefixed("constant.", dynamical_report(&d, t));
        let sides = qdqybe_sides(&d, t, &domain[0])?;
        let tw = twist_qt(t, &c);
        r.push(Check::from_bool("zero-weights-qdqybe-is-qqybe", sides == qqybe_sides(tw.qba(), tw.r()), "sides differ"));
        Ok(r)
    });
    rep.extend(from_result("zero-weights", degenerate));
    for k in 0..samples.min(8) {
        let f = random_twist(q, rng);
        let id = format!("sample[{k}].zero-weights-shifted-is-plain");
        let ok = DynamicalTwist::constant(&f, &domain, flat.clone())
            .map(|d| check_shifted_quasi_cocycle(&d, q).passed() == is_quasi_cocycle(&f, q));
        rep.push(bool_result(id, ok, "shifted and plain cocycle conditions disagree"));
    }
    rep
}
