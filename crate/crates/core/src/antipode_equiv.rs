//! The element relating two quasi-antipodes on one quasi-bialgebra.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::structures::{contract, QuasiAntipode, QuasiHopf};
use crate::tensor::{LinearMap, Tensor};
use crate::twist::{twist_antipode, twist_qha, Twist};

/// Both explicit expressions for `v` and for `v^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VForms {
    pub v: Tensor,
    pub v_alt: Tensor,
    pub v_inv: Tensor,
    pub v_inv_alt: Tensor,
}

/// `v = S~(X) a~ Y b S(Z)`, `v = S~(S^{-1} Xbar) S~(S^{-1} b) S~(Ybar) a~ Zbar`,
/// `v^{-1} = S(X) a Y b~ S~(Z)`, `v^{-1} = Xbar b~ S~(Ybar) S~(S^{-1} a) S~(S^{-1} Zbar)`.
pub fn v_forms(base: &QuasiHopf, alt: &QuasiAntipode) -> VForms {
    let alg = base.algebra();
    let q = base.qba();
    let ap = base.antipode();
    let (a, b) = (base.alpha(), base.beta());
    let (at, bt) = (alt.alpha(), alt.beta());
    let st = |x: &Tensor| alt.s(x);
    let e = |i: usize| alg.basis(i);

    let v = contract(alg, q.phi(), 1, |x| alg.mul_all(&[alt.s_basis(x[0]), at, &e(x[1]), b, ap.s_basis(x[2])]));
    let sb = st(&ap.s_inv(b));
    let v_alt = contract(alg, q.phi_inv(), 1, |x| alg.mul_all(&[&st(ap.s_inv_map().column(x[0])), &sb, alt.s_basis(x[1]), at, &e(x[2])]));
    let v_inv = contract(alg, q.phi(), 1, |x| alg.mul_all(&[ap.s_basis(x[0]), a, &e(x[1]), bt, alt.s_basis(x[2])]));
    let sa = st(&ap.s_inv(a));
    let v_inv_alt =
        contract(alg, q.phi_inv(), 1, |x| alg.mul_all(&[&e(x[0]), bt, alt.s_basis(x[1]), &sa, &st(ap.s_inv_map().column(x[2]))]));
    VForms { v, v_alt, v_inv, v_inv_alt }
}

/// Every relation the element `v` must satisfy, as a report.
pub fn v_report(base: &QuasiHopf, alt: &QuasiAntipode) -> (VForms, Report) {
    let alg = base.algebra();
    let f = v_forms(base, alt);
    let mut r = Report::new();
    r.push(Check::equal("v-forms-agree", &f.v, &f.v_alt));
    r.push(Check::equal("v-inverse-forms-agree", &f.v_inv, &f.v_inv_alt));
    r.push(Check::equal("v-inverse", &alg.mul(&f.v, &f.v_inv), &alg.one()));
    r.push(Check::equal("v-inverse-left", &alg.mul(&f.v_inv, &f.v), &alg.one()));
    r.push(Check::equal("v-alpha", &alg.mul(&f.v, base.alpha()), alt.alpha()));
    r.push(Check::equal("v-beta", &alg.mul(alt.beta(), &f.v), base.beta()));
    r.push(Check::for_all("v-conjugates-antipode", alg.dim(), 1, |i| {
        (alg.mul(alt.s_basis(i[0]), &f.v), alg.mul(&f.v, base.antipode().s_basis(i[0])))
    }));
    (f, r)
}

fn postcondition(r: &Report) -> Error {
    let ids: Vec<String> = r.failed_ids();
    Error::Postcondition(ids.join(", "))
}

/// The unique invertible `v` with `v alpha = alpha~`, `beta~ v = beta` and
/// `S~(a) = v S(a) v^{-1}`, after checking all four explicit forms.
pub fn compute_v(base: &QuasiHopf, alt: &QuasiAntipode) -> Result<Tensor> {
    let (f, r) = v_report(base, alt);
    if r.passed() {
        Ok(f.v)
    } else {
        Err(postcondition(&r))
    }
}

/// The quasi-antipode `(w S w^{-1}, w alpha, beta w^{-1})`.
pub fn antipode_from_v(h: &QuasiHopf, w: &Tensor) -> Result<QuasiAntipode> {
    let alg = h.algebra();
    let wi = alg.invert(w)?;
    let cols = h.antipode().s_map().columns().iter().map(|c| alg.mul_all(&[w, c, &wi])).collect();
    QuasiAntipode::new(LinearMap::new(cols, true)?, alg.mul(w, h.alpha()), alg.mul(h.beta(), &wi))
}

/// Twists the base structure and the alternative antipode by `f` and
/// compares the resulting `v` with the untwisted one.
pub fn check_v_universality(base: &QuasiHopf, alt: &QuasiAntipode, f: &Twist) -> Result<bool> {
    let v = compute_v(base, alt)?;
    let tb = twist_qha(base, f);
    let ta = twist_antipode(base.algebra(), alt, f);
    Ok(compute_v(&tb, &ta)? == v)
}
