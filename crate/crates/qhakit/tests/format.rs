use qhakit::builtin_document;
use qhakit::format::{parse_structure, parse_twist, serialize_structure, serialize_twist, Document, LoadError};
use qhakit_core::catalog::Structure;
use qhakit_core::random::random_twist;
use qhakit_core::twist::{twist_qha, twist_qt};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const ENTRIES: [&str; 8] =
    ["trivial", "group_zn(1)", "group_zn(2)", "group_zn(3)", "group_zn(4)", "z2_triangular", "sweedler_h4", "semion"];

fn round_trip(doc: &Document) {
    let text = serialize_structure(doc);
    let back = parse_structure(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
    assert_eq!(&back, doc);
    assert_eq!(serialize_structure(&back), text);
}

fn value(name: &str) -> Value {
    serde_json::from_str(&serialize_structure(&builtin_document(name).unwrap())).unwrap()
}

fn load(v: &Value) -> Result<Document, LoadError> {
    parse_structure(&serde_json::to_string_pretty(v).unwrap())
}

#[test]
fn builtins_round_trip() {
    for name in ENTRIES {
        round_trip(&builtin_document(name).unwrap());
    }
}

#[test]
fn builtin_dynamical_families_survive() {
    for name in ["z2_triangular", "semion"] {
        let doc = builtin_document(name).unwrap();
        assert!(doc.dynamical.is_some(), "{name}");
        let back = parse_structure(&serialize_structure(&doc)).unwrap();
        assert_eq!(back.dynamical, doc.dynamical);
    }
}

#[test]
fn twisted_structures_round_trip() {
    for name in ["group_zn(3)", "sweedler_h4", "semion"] {
        let doc = builtin_document(name).unwrap();
        let q = doc.structure.qha().qba();
        for seed in 0..4 {
            let f = random_twist(q, &mut ChaCha8Rng::seed_from_u64(seed));
            let structure = match &doc.structure {
                Structure::Hopf(h) => Structure::Hopf(twist_qha(h, &f)),
                Structure::Triangular(t) => Structure::Triangular(twist_qt(t, &f)),
            };
            round_trip(&Document { structure, dynamical: None });
        }
    }
}

#[test]
fn twists_round_trip() {
    for name in ["group_zn(2)", "sweedler_h4", "semion"] {
        let doc = builtin_document(name).unwrap();
        let q = doc.structure.qha().qba();
        for seed in 0..8 {
            let f = random_twist(q, &mut ChaCha8Rng::seed_from_u64(seed));
            let text = serialize_twist(q, &f);
            let back = parse_twist(&text, q).unwrap();
            assert_eq!(back.f(), f.f());
            assert_eq!(back.f_inv(), f.f_inv());
            assert_eq!(serialize_twist(q, &back), text);
        }
    }
}

#[test]
fn twist_for_another_structure_is_rejected() {
    let small = builtin_document("group_zn(2)").unwrap();
    let big = builtin_document("sweedler_h4").unwrap();
    let f = random_twist(big.structure.qha().qba(), &mut ChaCha8Rng::seed_from_u64(1));
    let text = serialize_twist(big.structure.qha().qba(), &f);
    let e = parse_twist(&text, small.structure.qha().qba()).unwrap_err();
    assert_eq!(e.class(), "schema");
}

#[test]
fn bare_rationals_are_accepted_in_cyclotomic_fields() {
    let mut v = value("semion");
    v["counit"] = json!(["1", "1"]);
    let doc = load(&v).unwrap();
    assert_eq!(doc, builtin_document("semion").unwrap());
}

#[test]
fn non_associative_table_names_the_triple() {
    // e1 e1 = e2, e2 e1 = e1 and everything else from the unit e0
    let v = json!({
        "field": {"kind": "rational"},
        "dimension": 3,
        "unit": ["1", "0", "0"],
        "mult": [
            {"i": 0, "j": 0, "coeffs": ["1", "0", "0"]},
            {"i": 0, "j": 1, "coeffs": ["0", "1", "0"]},
            {"i": 0, "j": 2, "coeffs": ["0", "0", "1"]},
            {"i": 1, "j": 0, "coeffs": ["0", "1", "0"]},
            {"i": 2, "j": 0, "coeffs": ["0", "0", "1"]},
            {"i": 1, "j": 1, "coeffs": ["0", "0", "1"]},
            {"i": 2, "j": 1, "coeffs": ["0", "1", "0"]}
        ],
        "coproduct": [[{"i": 0, "j": 0, "scalar": "1"}], [], []],
        "counit": ["1", "0", "0"],
        "antipode": {"matrix": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]},
        "alpha": ["1", "0", "0"],
        "beta": ["1", "0", "0"],
        "phi": [{"i": 0, "j": 0, "k": 0, "scalar": "1"}]
    });
    match load(&v).unwrap_err() {
        LoadError::Construction { location, source } => {
            assert_eq!(location, "mult");
            assert!(matches!(source, qhakit_core::Error::NotAssociative { .. }), "{source}");
        }
        e => panic!("{e}"),
    }
}

#[test]
fn mutated_phi_fails_the_pentagon() {
    let mut v = value("semion");
    v["phi"][0]["scalar"][0] = json!("1/3");
    match load(&v).unwrap_err() {
        LoadError::Verification(ids) => assert!(ids.iter().any(|i| i.contains("pentagon")), "{ids:?}"),
        e => panic!("{} {e}", e.class()),
    }
}

#[test]
fn syntax_errors_carry_a_line() {
    let text = "{\n  \"field\": {\"kind\": \"rational\"},\n  \"dimension\": 1,,\n}";
    match parse_structure(text).unwrap_err() {
        LoadError::Syntax { line, .. } => assert_eq!(line, 3),
        e => panic!("{e}"),
    }
}

type Mutation = Box<dyn Fn(&mut Value)>;

#[test]
fn schema_errors_name_the_field() {
    let cases: Vec<(Mutation, &str)> = vec![
        (Box::new(|v| v["unknown"] = json!(1)), "unknown"),
        (Box::new(|v| v["mult"][0]["i"] = json!(9)), "mult[0]"),
        (Box::new(|v| v["mult"][1]["coeffs"] = json!(["1"])), "mult[1].coeffs"),
        (Box::new(|v| v["counit"][0] = json!(["1", "0", "0"])), "counit[0]"),
        (Box::new(|v| v["alpha"][0] = json!(["1/0", "0"])), "alpha"),
        (
            Box::new(|v| {
                let dup = v["mult"][0].clone();
                v["mult"].as_array_mut().unwrap().push(dup);
            }),
            "listed twice",
        ),
        (Box::new(|v| v["coproduct"].as_array_mut().unwrap().truncate(1)), "coproduct"),
    ];
    for (mutate, needle) in cases {
        let mut v = value("semion");
        mutate(&mut v);
        let e = load(&v).unwrap_err();
        assert_eq!(e.class(), "schema", "{needle}: {e}");
        assert!(e.to_string().contains(needle), "{needle}: {e}");
    }
}

#[test]
fn wrong_antipode_inverse_is_rejected() {
    let mut v = value("sweedler_h4");
    let m = v["antipode"].clone();
    v["antipode_inv"] = m;
    let e = load(&v).unwrap_err();
    assert_eq!(e.class(), "construction");
    assert!(e.to_string().contains("antipode_inv"), "{e}");
}

#[test]
fn correct_antipode_inverse_is_accepted() {
    let mut v = value("semion");
    // S is the identity on k[Z/2]
    v["antipode_inv"] = v["antipode"].clone();
    assert!(load(&v).is_ok());
}

#[test]
fn broken_dynamical_family_is_a_verification_error() {
    let mut v = value("z2_triangular");
    // F(0) plus (1/2) p(x)p stays counital and invertible
    v["dynamical"]["twists"][0]["f"] = json!([
        {"i": 0, "j": 0, "scalar": "11/8"},
        {"i": 0, "j": 1, "scalar": "-3/8"},
        {"i": 1, "j": 0, "scalar": "-3/8"},
        {"i": 1, "j": 1, "scalar": "3/8"}
    ]);
    match load(&v).unwrap_err() {
        LoadError::Verification(ids) => assert!(ids.iter().any(|i| i.starts_with("shifted-quasi-cocycle")), "{ids:?}"),
        e => panic!("{} {e}", e.class()),
    }
}

#[test]
fn dynamical_twist_outside_the_domain_is_rejected() {
    let mut v = value("semion");
    v["dynamical"]["twists"][0]["lambda"] = json!(["7"]);
    let e = load(&v).unwrap_err();
    assert_eq!(e.class(), "schema");
    assert!(e.to_string().contains("dynamical.twists[0].lambda"), "{e}");
}
