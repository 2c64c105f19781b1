use qhakit_core::catalog::builtin;
use qhakit_core::drinfeld::*;
use qhakit_core::random::random_twist;
use qhakit_core::structures::QuasiHopf;
use qhakit_core::twist::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn entries() -> Vec<(String, QuasiHopf)> {
    let mut v = Vec::new();
    for name in ["trivial", "group_zn(3)", "z2_triangular", "semion", "sweedler_h4"] {
        v.push((name.to_string(), builtin(name).unwrap().structure.qha().clone()));
    }
    // twisted copies have nontrivial coassociators and canonical elements
    let base: Vec<_> = v.clone();
    for (name, h) in base {
        for seed in 0..2u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random_twist(h.qba(), &mut rng);
            v.push((format!("{name}/twisted{seed}"), twist_qha(&h, &f)));
        }
    }
    v
}

#[test]
fn drinfeld_battery() {
    for (name, h) in entries() {
        let (d, r) = drinfeld_report(&h);
        assert!(r.passed(), "{name}: {:?}", r.failed_ids());
        assert!(d.is_some());
        let (_, r) = opposite_drinfeld_report(&h).unwrap();
        assert!(r.passed(), "{name} opposite: {:?}", r.failed_ids());
    }
}

#[test]
fn drinfeld_under_random_twists() {
    for (name, h) in entries() {
        for seed in 10..12u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_twist(h.qba(), &mut rng);
            gamma_bar_under_twist(&h, &g).unwrap_or_else(|e| panic!("{name} {seed}: {e}"));
            drinfeld_under_twist(&h, &g).unwrap_or_else(|e| panic!("{name} {seed}: {e}"));
        }
    }
}
