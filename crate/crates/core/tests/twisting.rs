use qhakit_core::catalog::builtin;
use qhakit_core::random::random_twist;
use qhakit_core::twist::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn twisted_structures_verify() {
    for name in ["z2_triangular", "semion", "sweedler_h4"] {
        let t = builtin(name).unwrap().structure.triangular().unwrap().clone();
        for seed in 0..3u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random_twist(t.qba(), &mut rng);
            let tw = twist_qt(&t, &f);
            let rep = tw.verify();
            assert!(rep.passed(), "{name} seed {seed}: {:?}", rep.failed_ids());
        }
    }
}
