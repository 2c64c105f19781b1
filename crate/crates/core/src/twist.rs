//! Twists and the structures they induce, the quasi-cocycle condition and
//! compatible twists.

use alloc::string::String;

use crate::error::{Error, Result};
use crate::structures::{contract, QuasiAntipode, QuasiBialgebra, QuasiHopf, QuasiTriangular};
use crate::tensor::{Algebra, LinearMap, Tensor};

/// Invertible counital element of `H (x) H` with its cached inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    f: Tensor,
    f_inv: Tensor,
}

fn counital(q: &QuasiBialgebra, f: &Tensor) -> bool {
    let one = q.algebra().one();
    q.eps_at(f, 0) == one && q.eps_at(f, 1) == one
}

impl Twist {
    pub fn new(q: &QuasiBialgebra, f: Tensor) -> Result<Self> {
        if f.arity() != 2 {
            return Err(Error::ArityMismatch { expected: 2, found: f.arity() });
        }
        let f_inv = q.algebra().invert(&f).map_err(|_| Error::InvalidTwist("not invertible"))?;
        if !counital(q, &f) {
            return Err(Error::InvalidTwist("counit property fails"));
        }
        Ok(Twist { f, f_inv })
    }

    /// Accepts a known inverse after checking it on both sides.
    pub fn with_inverse(q: &QuasiBialgebra, f: Tensor, f_inv: Tensor) -> Result<Self> {
        let one = q.one(2);
        if q.mul(&f, &f_inv) != one || q.mul(&f_inv, &f) != one {
            return Err(Error::InvalidTwist("not invertible"));
        }
        if !counital(q, &f) {
            return Err(Error::InvalidTwist("counit property fails"));
        }
        Ok(Twist { f, f_inv })
    }

    pub fn identity(q: &QuasiBialgebra) -> Self {
        Twist { f: q.one(2), f_inv: q.one(2) }
    }

    pub fn f(&self) -> &Tensor {
        &self.f
    }

    pub fn f_inv(&self) -> &Tensor {
        &self.f_inv
    }

    /// `F^{-1}` viewed as a twist.
    pub fn inverse(&self) -> Twist {
        Twist { f: self.f_inv.clone(), f_inv: self.f.clone() }
    }

    /// The product twist `F G` (self on the left).
    pub fn compose(&self, g: &Twist, alg: &Algebra) -> Twist {
        Twist { f: alg.mul(&self.f, &g.f), f_inv: alg.mul(&g.f_inv, &self.f_inv) }
    }
}

/// `Delta_F(a) = F Delta(a) F^{-1}` on the basis.
pub fn twisted_coproduct(q: &QuasiBialgebra, f: &Twist) -> LinearMap {
    let cols = q.coproduct().columns().iter().map(|c| q.mul_all(&[&f.f, c, &f.f_inv])).collect();
    LinearMap::new(cols, false).expect("same shape")
}

/// `Phi_F = (F (x) 1)(Delta (x) 1)F Phi (1 (x) Delta)F^{-1} (1 (x) F^{-1})`.
pub fn twisted_phi(q: &QuasiBialgebra, f: &Twist) -> Tensor {
    let one = q.algebra().one();
    q.mul_all(&[&f.f.outer(&one), &q.delta_at(&f.f, 0), q.phi(), &q.delta_at(&f.f_inv, 1), &one.outer(&f.f_inv)])
}

/// `Phi_F^{-1} = (1 (x) F)(1 (x) Delta)F Phi^{-1} (Delta (x) 1)F^{-1} (F^{-1} (x) 1)`.
pub fn twisted_phi_inv(q: &QuasiBialgebra, f: &Twist) -> Tensor {
    let one = q.algebra().one();
    q.mul_all(&[&one.outer(&f.f), &q.delta_at(&f.f, 1), q.phi_inv(), &q.delta_at(&f.f_inv, 0), &f.f_inv.outer(&one)])
}

pub fn twist_qba(q: &QuasiBialgebra, f: &Twist) -> QuasiBialgebra {
    q.with_coproduct(twisted_coproduct(q, f), twisted_phi(q, f), twisted_phi_inv(q, f))
}

/// `alpha_F = S(fbar_i) alpha fbar^i`, `beta_F = f_i beta S(f^i)`, with the
/// antipode of `ap` itself; the same formula twists any quasi-antipode.
pub fn twist_antipode(alg: &Algebra, ap: &QuasiAntipode, f: &Twist) -> QuasiAntipode {
    let alpha = contract(alg, &f.f_inv, 1, |x| alg.mul_all(&[ap.s_basis(x[0]), ap.alpha(), &alg.basis(x[1])]));
    let beta = contract(alg, &f.f, 1, |x| alg.mul_all(&[&alg.basis(x[0]), ap.beta(), ap.s_basis(x[1])]));
    QuasiAntipode::new(ap.s_map().clone(), alpha, beta).expect("same antipode map")
}

/// The twisted quasi-Hopf structure (unverified; callers verify as needed).
pub fn twist_qha(h: &QuasiHopf, f: &Twist) -> QuasiHopf {
    QuasiHopf::unverified(twist_qba(h.qba(), f), twist_antipode(h.algebra(), h.antipode(), f))
}

/// Adds `R_F = F^T R F^{-1}` to the twisted quasi-Hopf structure.
pub fn twist_qt(t: &QuasiTriangular, f: &Twist) -> QuasiTriangular {
    let q = t.qba();
    let r = q.mul_all(&[&f.f.transpose(), t.r(), &f.f_inv]);
    let r_inv = q.mul_all(&[&f.f, t.r_inv(), &f.f_inv.transpose()]);
    QuasiTriangular::with_r(twist_qha(t.qha(), f), r, r_inv)
}

/// Both sides of `(F (x) 1)(Delta (x) 1)F Phi = Phi (1 (x) F)(1 (x) Delta)F`.
pub fn quasi_cocycle_sides(q: &QuasiBialgebra, f: &Tensor) -> (Tensor, Tensor) {
    let one = q.algebra().one();
    let lhs = q.mul_all(&[&f.outer(&one), &q.delta_at(f, 0), q.phi()]);
    let rhs = q.mul_all(&[q.phi(), &one.outer(f), &q.delta_at(f, 1)]);
    (lhs, rhs)
}

pub fn is_quasi_cocycle(f: &Twist, q: &QuasiBialgebra) -> bool {
    let (l, r) = quasi_cocycle_sides(q, &f.f);
    l == r
}

pub fn commutes_with_coproduct(c: &Tensor, q: &QuasiBialgebra) -> bool {
    q.coproduct().columns().iter().all(|d| q.algebra().commutes(c, d))
}

pub fn is_compatible(c: &Twist, q: &QuasiBialgebra) -> bool {
    commutes_with_coproduct(&c.f, q) && is_quasi_cocycle(c, q)
}

/// `eps(z^{-1}) (z (x) z) Delta(z^{-1})` for an invertible central `z`.
pub fn central_to_compatible(z: &Tensor, q: &QuasiBialgebra) -> Result<Twist> {
    let alg = q.algebra();
    if !alg.is_central(z) {
        return Err(Error::NotCentral);
    }
    let zi = alg.invert(z)?;
    let c = alg.mul(&z.outer(z), &q.delta(&zi)).scale(&q.eps(&zi));
    Twist::new(q, c)
}

/// The four explicit formulas for the central element of a compatible
/// twist: `z` two ways and `z^{-1}` two ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralOfCompatible {
    pub z: Tensor,
    pub z_alt: Tensor,
    pub z_inv: Tensor,
    pub z_inv_alt: Tensor,
}

pub fn central_formulas(c: &Twist, h: &QuasiHopf) -> CentralOfCompatible {
    let alg = h.algebra();
    let ap = h.antipode();
    let tw = twist_antipode(alg, ap, c);
    let (alpha, beta) = (h.alpha(), h.beta());
    let (alpha_c, beta_c) = (tw.alpha(), tw.beta());
    let q = h.qba();
    let z = contract(alg, q.phi(), 1, |x| alg.mul_all(&[ap.s_basis(x[0]), alpha_c, &alg.basis(x[1]), beta, ap.s_basis(x[2])]));
    let z_alt = contract(alg, q.phi_inv(), 1, |x| alg.mul_all(&[&alg.basis(x[0]), beta, ap.s_basis(x[1]), alpha_c, &alg.basis(x[2])]));
    let z_inv = contract(alg, q.phi(), 1, |x| alg.mul_all(&[ap.s_basis(x[0]), alpha, &alg.basis(x[1]), beta_c, ap.s_basis(x[2])]));
    let z_inv_alt = contract(alg, q.phi_inv(), 1, |x| alg.mul_all(&[&alg.basis(x[0]), beta_c, ap.s_basis(x[1]), alpha, &alg.basis(x[2])]));
    CentralOfCompatible { z, z_alt, z_inv, z_inv_alt }
}

/// The unique invertible central `z` with `z alpha = alpha_C` and
/// `beta_C z = beta`, with every postcondition asserted.
pub fn compatible_to_central(c: &Twist, h: &QuasiHopf) -> Result<Tensor> {
    let q = h.qba();
    if !is_compatible(c, q) {
        return Err(Error::InvalidTwist("not a compatible twist"));
    }
    let alg = h.algebra();
    let forms = central_formulas(c, h);
    let tw = twist_antipode(alg, h.antipode(), c);
    let post = |ok: bool, what: &str| if ok { Ok(()) } else { Err(Error::Postcondition(String::from(what))) };
    post(forms.z == forms.z_alt, "the two expressions for z differ")?;
    post(forms.z_inv == forms.z_inv_alt, "the two expressions for z^-1 differ")?;
    let inv = alg.invert(&forms.z).map_err(|_| Error::Postcondition(String::from("z is not invertible")))?;
    post(inv == forms.z_inv, "z^-1 formula disagrees with the inverse")?;
    post(alg.is_central(&forms.z), "z is not central")?;
    post(alg.mul(&forms.z, h.alpha()) == *tw.alpha(), "z alpha != alpha_C")?;
    post(alg.mul(tw.beta(), &forms.z) == *h.beta(), "beta_C z != beta")?;
    Ok(forms.z)
}

/// `z_m` for the compatible twist `(R^T R)^m`.
pub fn quadratic_invariant(t: &QuasiTriangular, m: i64) -> Result<Tensor> {
    let q = t.qba();
    let alg = q.algebra();
    let rtr = alg.mul(&t.r().transpose(), t.r());
    let c = Twist::new(q, alg.pow(&rtr, m)?)?;
    compatible_to_central(&c, t.qha())
}
