//! Seeded generators of small exact test data.

use alloc::vec::Vec;

use rand::Rng;

use crate::scalar::{Field, Scalar};
use crate::structures::QuasiBialgebra;
use crate::tensor::{Algebra, Tensor};
use crate::twist::Twist;

const MAX_TRIES: usize = 1000;

/// `p/q` with `|p| <= 3`, `q` in `{1, 2}`, never zero.
pub fn small_scalar<R: Rng + ?Sized>(f: &Field, rng: &mut R) -> Scalar {
    loop {
        let p = rng.gen_range(-3i64..=3);
        if p != 0 {
            return f.ratio(p, rng.gen_range(1i64..=2));
        }
    }
}

/// `1 + ` a sparse perturbation with one to three terms.
pub fn random_near_identity<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Tensor {
    let mut t = alg.one();
    for _ in 0..rng.gen_range(1..=3usize) {
        let i = rng.gen_range(0..alg.dim());
        t = t.add(&alg.basis(i).scale(&small_scalar(alg.field(), rng)));
    }
    t
}

/// Invertible element; rejects and redraws singular candidates.
pub fn random_invertible<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Tensor {
    for _ in 0..MAX_TRIES {
        let w = random_near_identity(alg, rng);
        if alg.invert(&w).is_ok() {
            return w;
        }
    }
    alg.one()
}

/// Invertible central element built from a basis of the center.
pub fn random_central_invertible<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Tensor {
    let center = alg.center_basis();
    for _ in 0..MAX_TRIES {
        let mut z = alg.one();
        for c in &center {
            if rng.gen_bool(0.7) {
                z = z.add(&c.scale(&small_scalar(alg.field(), rng)));
            }
        }
        if alg.invert(&z).is_ok() {
            return z;
        }
    }
    alg.one()
}

/// Spanning set `e_i - eps(e_i) 1` of the augmentation ideal.
fn counit_kernel(q: &QuasiBialgebra) -> Vec<Tensor> {
    let alg = q.algebra();
    (0..alg.dim())
        .map(|i| {
            let e = alg.basis(i);
            e.sub(&alg.scalar(&q.eps(&e)))
        })
        .filter(|k| !k.is_zero())
        .collect()
}

/// `1 (x) 1 + sum c k_i (x) k_j` with `k` in the kernel of the counit,
/// which makes the counit property automatic; singular draws are rejected.
pub fn random_twist<R: Rng + ?Sized>(q: &QuasiBialgebra, rng: &mut R) -> Twist {
    let ker = counit_kernel(q);
    if ker.is_empty() {
        return Twist::identity(q);
    }
    for _ in 0..MAX_TRIES {
        let mut f = q.one(2);
        for _ in 0..rng.gen_range(1..=3usize) {
            let a = &ker[rng.gen_range(0..ker.len())];
            let b = &ker[rng.gen_range(0..ker.len())];
            f = f.add(&a.outer(b).scale(&small_scalar(q.field(), rng)));
        }
        if let Ok(t) = Twist::new(q, f) {
            return t;
        }
    }
    Twist::identity(q)
}
