//! One line per acceptance criterion. Every check is an exact equality.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::Instant;

use qhakit::format::{parse_structure, serialize_structure};
use qhakit::render::{render_run, Format};
use qhakit::suites::{drinfeld_suite, dynamical_suite, qtriangular_suite, r_compatibles, run, Options, Suite};
use qhakit::{builtin_document, exit_status};
use qhakit_core::antipode_equiv::{antipode_from_v, check_v_universality, compute_v, v_report};
use qhakit_core::catalog::z2_p;
use qhakit_core::drinfeld::compute_drinfeld_twist;
use qhakit_core::dynamical::z2_family;
use qhakit_core::qtriangular::{altschuler_coste_operator, check_u_universality, compute_u, r_twist, Which};
use qhakit_core::random::{random_central_invertible, random_invertible, random_twist};
use qhakit_core::report::Report;
use qhakit_core::structures::{verify_rmatrix, QuasiAntipode, QuasiBialgebra, QuasiTriangular};
use qhakit_core::twist::{central_to_compatible, compatible_to_central, is_compatible, quadratic_invariant, twist_qba, twist_qt, Twist};
use qhakit_core::Scalar;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const ENTRIES: [&str; 5] = ["trivial", "group_zn(3)", "z2_triangular", "sweedler_h4", "semion"];
const TRIANGULAR: [&str; 3] = ["z2_triangular", "sweedler_h4", "semion"];
const SEEDS: u64 = 25;

/// Counts checks and keeps the first few failures.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, id: impl Into<String>, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures.push(id.into());
        }
    }

    fn report(&mut self, prefix: &str, r: &Report) {
        assert!(!r.checks.is_empty(), "{prefix}: empty report");
        for c in &r.checks {
            self.check(format!("{prefix}{}", c.id), c.passed);
        }
    }

    fn require(&mut self, id: impl Into<String>, r: qhakit_core::Result<bool>) {
        let id = id.into();
        match r {
            Ok(ok) => self.check(id, ok),
            Err(e) => self.check(format!("{id} ({e})"), false),
        }
    }
}

fn doc(name: &str) -> qhakit::format::Document {
    builtin_document(name).unwrap()
}

fn qt(name: &str) -> QuasiTriangular {
    doc(name).structure.triangular().unwrap().clone()
}

fn rng(name: &str, salt: u64) -> ChaCha8Rng {
    let h = name.bytes().fold(salt, |h, b| h.wrapping_mul(31).wrapping_add(b as u64));
    ChaCha8Rng::seed_from_u64(h)
}

/// Three verifiers on every entry, and one mutation per verifier that must
/// fail in that verifier only.
fn axioms(t: &mut Tally) {
    for name in ENTRIES.iter().copied().chain(["group_zn(1)", "group_zn(2)", "group_zn(4)", "group_zn(5)"]) {
        let d = doc(name);
        let h = d.structure.qha();
        t.report(&format!("{name}.qba."), &h.qba().verify());
        t.report(&format!("{name}.antipode."), &h.antipode().verify(h.qba()));
        if let Some(tr) = d.structure.triangular() {
            t.report(&format!("{name}.rmatrix."), &verify_rmatrix(tr.qba(), tr.r(), tr.r_inv()));
        }
    }

    // 1 - 2 p(x)p(x)p becomes 1 - (1/2) p(x)p(x)p: still counital and invertible
    let s = qt("semion");
    let q = s.qba();
    let f = q.field();
    let ppp = z2_p(f).outer(&z2_p(f)).outer(&z2_p(f));
    let phi = q.one(3).sub(&ppp.scale(&Scalar::from_rational(qhakit_core::scalar::rat(1, 2), f)));
    let bad = QuasiBialgebra::unverified(q.algebra_arc().clone(), q.coproduct().clone(), q.counit().clone(), phi, None).unwrap();
    let failed = bad.verify().failed_ids();
    t.check(format!("negative.phi localizes to pentagon, got {failed:?}"), failed == ["pentagon"]);

    // alpha = 1 instead of g on the semion
    let h = s.qha();
    let ap = QuasiAntipode::new(h.antipode().s_map().clone(), q.algebra().one(), h.beta().clone()).unwrap();
    let failed = ap.verify(q).failed_ids();
    t.check(format!("negative.alpha fails the antipode verifier, got {failed:?}"), !failed.is_empty());
    t.check("negative.alpha leaves the coassociator verifier passing", q.verify().passed());
    t.check(
        format!("negative.alpha localizes to antipode identities, got {failed:?}"),
        failed.iter().all(|id| id.starts_with("antipode-phi")),
    );

    // R = 1 (x) 1 on Sweedler's algebra, which is not cocommutative
    let sw = qt("sweedler_h4");
    let one = sw.qba().one(2);
    let failed = verify_rmatrix(sw.qba(), &one, &one).failed_ids();
    t.check(format!("negative.r localizes to intertwining, got {failed:?}"), failed == ["r-intertwines-coproduct"]);
}

/// `antipode_from_v` followed by `compute_v` gives back `w`, checked also
/// against the conjugation formula written out here.
fn quasi_antipodes(t: &mut Tally) {
    for name in ENTRIES {
        let d = doc(name);
        let h = d.structure.qha();
        let alg = h.algebra();
        let mut rng = rng(name, 2);
        for k in 0..SEEDS {
            let w = random_invertible(alg, &mut rng);
            let p = format!("{name}.w[{k}].");
            let alt = match antipode_from_v(h, &w) {
                Ok(a) => a,
                Err(e) => {
                    t.check(format!("{p}antipode-from-v ({e})"), false);
                    continue;
                }
            };
            t.require(format!("{p}compute-v-returns-w"), compute_v(h, &alt).map(|v| v == w));
            let (forms, r) = v_report(h, &alt);
            t.report(&p, &r);
            t.check(format!("{p}four-forms"), forms.v == w && forms.v_alt == w && alg.mul(&forms.v_inv, &w) == alg.one());
            let wi = alg.invert(&w).unwrap();
            t.check(format!("{p}alpha"), *alt.alpha() == alg.mul(&w, h.alpha()));
            t.check(format!("{p}beta"), *alt.beta() == alg.mul(h.beta(), &wi));
            let conj = (0..alg.dim()).all(|i| alt.s(&alg.basis(i)) == alg.mul_all(&[&w, &h.s(&alg.basis(i)), &wi]));
            t.check(format!("{p}antipode-conjugated"), conj);
        }
    }
}

fn universality(t: &mut Tally) {
    for name in ENTRIES {
        let d = doc(name);
        let h = d.structure.qha();
        let mut rng = rng(name, 3);
        let w = random_invertible(h.algebra(), &mut rng);
        let alt = antipode_from_v(h, &w).unwrap();
        for k in 0..SEEDS {
            let f = random_twist(h.qba(), &mut rng);
            t.require(format!("{name}.f[{k}].v-universal"), check_v_universality(h, &alt, &f));
            if let Some(tr) = d.structure.triangular() {
                t.require(format!("{name}.f[{k}].u-universal"), check_u_universality(tr, &f));
                // the same thing computed from scratch on the twisted structure
                let same = compute_u(&twist_qt(tr, &f)).and_then(|a| Ok(a.u == compute_u(tr)?.u));
                t.require(format!("{name}.f[{k}].u-recomputed"), same);
            }
        }
    }
}

fn drinfeld(t: &mut Tally) {
    for name in ENTRIES {
        let d = doc(name);
        let h = d.structure.qha();
        let r = drinfeld_suite(h, SEEDS as usize, &mut rng(name, 4));
        t.report(&format!("{name}."), &r);
        // F Delta(a) F^{-1} = (S (x) S) Delta^T (S^{-1} a), written out
        let f = compute_drinfeld_twist(h).unwrap();
        let alg = h.algebra();
        let q = h.qba();
        let ok = (0..alg.dim()).all(|i| {
            let a = alg.basis(i);
            let want = h.antipode().s_legs(&q.delta(&h.s_inv(&a)).transpose());
            alg.mul_all(&[f.f(), &q.delta(&a), f.f_inv()]) == want
        });
        t.check(format!("{name}.drinfeld-conjugation-direct"), ok);
    }
}

fn quasi_triangular(t: &mut Tally) {
    for name in TRIANGULAR {
        let tr = qt(name);
        let h = tr.qha();
        let alg = h.algebra();
        t.report(&format!("{name}."), &qtriangular_suite(&tr));
        let u = compute_u(&tr).unwrap();
        let ok = (0..alg.dim()).all(|i| {
            let a = alg.basis(i);
            h.s(&h.s(&a)) == alg.mul_all(&[&u.u, &a, &u.u_inv]) && h.s(&h.s(&a)) == alg.mul_all(&[&u.u_tilde, &a, &u.u_tilde_inv])
        });
        t.check(format!("{name}.s-squared-direct"), ok);
        t.check(format!("{name}.u-tilde-direct"), u.u_tilde == h.s(&u.u_inv));
        for which in [Which::R, Which::RTilde] {
            t.report(&format!("{name}.twisted-by-{which:?}."), &twist_qt(&tr, &r_twist(&tr, which)).verify());
        }
    }
    let z2 = qt("z2_triangular");
    t.check("z2_triangular.u-is-g", compute_u(&z2).unwrap().u == z2.qha().algebra().basis(1));
}

fn compatible(t: &mut Tally) {
    for name in TRIANGULAR.iter().copied().chain(["trivial"]) {
        let tr = qt(name);
        let q = tr.qba();
        let h = tr.qha();
        let alg = q.algebra();
        for (label, c) in r_compatibles(&tr) {
            let ok = Twist::new(q, c).is_ok_and(|c| is_compatible(&c, q));
            t.check(format!("{name}.{label}"), ok);
        }
        let a = altschuler_coste_operator(&tr).unwrap();
        let a = a.scale(&q.eps(&q.eps_at(&a, 0)).inverse().unwrap());
        t.check(format!("{name}.ac-normalized-compatible"), Twist::new(q, a).is_ok_and(|a| is_compatible(&a, q)));

        let mut rng = rng(name, 6);
        for k in 0..SEEDS {
            let p = format!("{name}.z[{k}].");
            let z = random_central_invertible(alg, &mut rng);
            let c = central_to_compatible(&z, q).unwrap();
            t.check(format!("{p}central-to-compatible"), is_compatible(&c, q));
            t.require(format!("{p}compatible-to-central"), compatible_to_central(&c, h).map(|z| alg.is_central(&z)));
            let f = random_twist(q, &mut rng);
            let fc = f.compose(&c, alg);
            // F and FC twist alike, and F^{-1} (FC) is compatible
            t.check(format!("{p}compatible-factor-invisible"), twist_qba(q, &fc) == twist_qba(q, &f));
            t.check(format!("{p}quotient-compatible"), is_compatible(&f.inverse().compose(&fc, alg), q));
            // a non-compatible quotient twists differently
            let g = random_twist(q, &mut rng);
            let quot = is_compatible(&f.inverse().compose(&g, alg), q);
            t.check(format!("{p}criterion"), quot == (twist_qba(q, &f) == twist_qba(q, &g)));
        }
        for m in [1i64, 2] {
            let ok = quadratic_invariant(&tr, m).and_then(|a| Ok(alg.mul(&a, &quadratic_invariant(&tr, -m)?) == alg.one()));
            t.require(format!("{name}.z{m}-z-{m}"), ok);
        }
    }
    let s = qt("semion");
    let q = s.qba();
    let z = q.algebra().one().add(&z2_p(q.field()));
    let c = central_to_compatible(&z, q).unwrap();
    t.check("semion.one-plus-p-compatible", is_compatible(&c, q));
    t.require("semion.one-plus-p-central", compatible_to_central(&c, s.qha()).map(|z| s.qha().algebra().is_central(&z)));
}

fn qqybe(t: &mut Tally) {
    for name in ENTRIES {
        if let Some(tr) = doc(name).structure.triangular() {
            let (l, r) = tr.qqybe_sides();
            t.check(format!("{name}.qqybe"), l == r && tr.check_qqybe());
            let f = random_twist(tr.qba(), &mut rng(name, 7));
            t.check(format!("{name}.twisted-qqybe"), twist_qt(tr, &f).check_qqybe());
        }
    }
    for name in ["semion", "sweedler_h4"] {
        let tr = qt(name);
        let h = tr.qha();
        let alg = h.algebra();
        let fd = compute_drinfeld_twist(h).unwrap();
        let twisted = twist_qt(&tr, &r_twist(&tr, Which::R));
        let fr = compute_drinfeld_twist(twisted.qha()).unwrap();
        let rrt = alg.mul(tr.r(), &tr.r().transpose());
        let want = alg.mul(&fd.f().transpose(), &alg.invert(&rrt).unwrap());
        t.check(format!("{name}.drinfeld-of-r-twist"), *fr.f() == want);
    }
}

fn dynamical(t: &mut Tally) {
    for name in TRIANGULAR {
        let d = doc(name);
        let tr = d.structure.triangular().unwrap();
        let r = dynamical_suite(tr, d.dynamical.as_ref(), 8, &mut rng(name, 8));
        t.report(&format!("{name}."), &r);
        for needle in ["zero-weights-qdqybe-is-qqybe", "zero-weights-shifted-is-plain", "constant.shifted-quasi-cocycle"] {
            t.check(format!("{name}.has {needle}"), r.checks.iter().any(|c| c.id.contains(needle)));
        }
        if d.dynamical.is_some() {
            for needle in ["dynamical-coassociator-routes", "shifted-quasi-cocycle[", "dynamical-coproduct-left-op", "qdqybe["] {
                t.check(format!("{name}.has {needle}"), r.checks.iter().any(|c| c.id.starts_with(needle)));
            }
        }
    }
    // the trivial coassociator on k[Z/2] reduces to the classical equation
    let z2 = doc("z2_triangular");
    let r = dynamical_suite(z2.structure.triangular().unwrap(), z2.dynamical.as_ref(), 0, &mut rng("z2", 8));
    t.check("z2_triangular.has classical-dqybe", r.checks.iter().filter(|c| c.id.starts_with("classical-dqybe")).count() >= 3);
    let rebuilt = z2_family(z2.structure.qha().qba()).unwrap();
    t.check("z2_triangular.family-rebuilds", Some(&rebuilt) == z2.dynamical.as_ref());
}

fn infrastructure(t: &mut Tally) {
    for name in ENTRIES.iter().copied().chain(["group_zn(1)", "group_zn(2)", "group_zn(4)"]) {
        let d = doc(name);
        let text = serialize_structure(&d);
        let back = parse_structure(&text);
        t.check(format!("{name}.round-trip"), back.as_ref().is_ok_and(|b| *b == d && serialize_structure(b) == text));
    }
    for name in ["sweedler_h4", "semion"] {
        let d = doc(name);
        let opts = Options { seed: 9, samples: 2 };
        let a = run(name, &d, Suite::All, opts).unwrap();
        let b = run(name, &d, Suite::All, opts).unwrap();
        for f in [Format::Text, Format::Structured] {
            t.check(format!("{name}.deterministic-{f:?}"), render_run(&a, f) == render_run(&b, f));
        }
    }
    t.check("exit-status-values", exit_status(true) == 0 && exit_status(false) == 1);

    let bin = env!("CARGO_BIN_EXE_qhakit");
    let code = |args: &[&str]| Command::new(bin).args(args).env_remove("QHAKIT_SEED").output().unwrap();
    t.check("cli.pass-exits-0", code(&["verify", "trivial"]).status.code() == Some(0));
    t.check("cli.not-found-exits-2", code(&["verify", "nothing"]).status.code() == Some(2));
    t.check("cli.inapplicable-exits-2", code(&["verify", "group_zn(2)", "--suite", "qtriangular"]).status.code() == Some(2));
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/verify_z2_triangular.txt");
    let out = code(&["verify", "z2_triangular", "--samples", "2"]);
    t.check("cli.golden-report", std::fs::read(golden).is_ok_and(|g| g == out.stdout));
}

type Criterion = (&'static str, fn(&mut Tally));

fn criteria() -> [Criterion; 9] {
    [
        ("axiom verifiers on every entry with localized negative controls", axioms),
        ("quasi-antipodes from v recover v exactly", quasi_antipodes),
        ("v and u are invariant under random twists", universality),
        ("Drinfeld twists, their routes and their behaviour under twisting", drinfeld),
        ("u-operators, S^2 conjugation and the R-twisted structures", quasi_triangular),
        ("compatible twists, central elements and quadratic invariants", compatible),
        ("quasi-quantum Yang-Baxter equation and the Drinfeld twist of the R-twist", qqybe),
        ("dynamical families and their degenerations", dynamical),
        ("file round-trips, determinism and exit codes", infrastructure),
    ]
}

fn main() -> ExitCode {
    let mut all = true;
    let start = Instant::now();
    for (n, (desc, f)) in criteria().into_iter().enumerate() {
        let mut t = Tally::default();
        let began = Instant::now();
        f(&mut t);
        let ok = t.failures.is_empty() && t.checks > 0;
        all &= ok;
        let status = if ok { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} {desc} ({} checks, {:.1}s)", n + 1, t.checks, began.elapsed().as_secs_f64());
        for id in t.failures.iter().take(10) {
            println!("    failed: {id}");
        }
    }
    println!("acceptance: {} in {:.1}s", if all { "pass" } else { "fail" }, start.elapsed().as_secs_f64());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
