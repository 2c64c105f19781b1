//! The elements `gamma`, `gamma-bar`, the Drinfeld twist relating `Delta`
//! and `Delta'`, the second Drinfeld twist, and how they change under twists.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::structures::{contract, QuasiHopf};
use crate::tensor::Tensor;
use crate::twist::{twist_antipode, twist_qha, twisted_phi, Twist};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldData {
    pub gamma: Tensor,
    pub gamma_bar: Tensor,
    pub f_delta: Twist,
    pub f_zero: Twist,
}

fn postcondition(r: &Report) -> Error {
    let ids: Vec<String> = r.failed_ids();
    Error::Postcondition(ids.join(", "))
}

fn finish<T>(value: T, r: &Report) -> Result<T> {
    if r.passed() {
        Ok(value)
    } else {
        Err(postcondition(r))
    }
}

/// `(S (x) S) Delta^T (a)`.
fn ss_delta_op(h: &QuasiHopf, a: &Tensor) -> Tensor {
    h.antipode().s_legs(&h.qba().delta(a).transpose())
}

/// `S(B) alpha C (x) S(A) alpha D` summed over a four-leg tensor.
fn gamma_from(h: &QuasiHopf, abcd: &Tensor) -> Tensor {
    let alg = h.algebra();
    let ap = h.antipode();
    let a = h.alpha();
    contract(alg, abcd, 2, |x| {
        alg.mul_all(&[ap.s_basis(x[1]), a, &alg.basis(x[2])]).outer(&alg.mul_all(&[ap.s_basis(x[0]), a, &alg.basis(x[3])]))
    })
}

/// `Abar beta S(Dbar) (x) Bbar beta S(Cbar)`.
fn gamma_bar_from(h: &QuasiHopf, abcd: &Tensor) -> Tensor {
    let alg = h.algebra();
    let ap = h.antipode();
    let b = h.beta();
    contract(alg, abcd, 2, |x| {
        alg.mul_all(&[&alg.basis(x[0]), b, ap.s_basis(x[3])]).outer(&alg.mul_all(&[&alg.basis(x[1]), b, ap.s_basis(x[2])]))
    })
}

/// `gamma` from `(Phi^{-1} (x) 1)(Delta (x) 1 (x) 1)Phi`, from
/// `(1 (x) Phi)(1 (x) 1 (x) Delta)Phi^{-1}`, and from the fully expanded form
/// `S(X Ybar) alpha Y Zbar_(1) (x) S(Xbar) alpha Z Zbar_(2)`.
pub fn gamma_routes(h: &QuasiHopf) -> [Tensor; 3] {
    let q = h.qba();
    let alg = h.algebra();
    let ap = h.antipode();
    let a = h.alpha();
    let first = q.mul(&q.embed(q.phi_inv(), &[0, 1, 2], 4), &q.delta_at(q.phi(), 0));
    let second = q.mul(&q.embed(q.phi(), &[1, 2, 3], 4), &q.delta_at(q.phi_inv(), 2));
    let split = q.delta_at(q.phi_inv(), 2);
    let e = |i: usize| alg.basis(i);
    let explicit = contract(alg, q.phi(), 2, |x| {
        contract(alg, &split, 2, |y| {
            let left = alg.mul_all(&[&ap.s(&alg.mul(&e(x[0]), &e(y[1]))), a, &e(x[1]), &e(y[2])]);
            let right = alg.mul_all(&[ap.s_basis(y[0]), a, &e(x[2]), &e(y[3])]);
            left.outer(&right)
        })
    });
    [gamma_from(h, &first), gamma_from(h, &second), explicit]
}

/// `gamma-bar` from `(Delta (x) 1 (x) 1)Phi^{-1} (Phi (x) 1)` and from
/// `(1 (x) 1 (x) Delta)Phi (1 (x) Phi^{-1})`.
pub fn gamma_bar_routes(h: &QuasiHopf) -> [Tensor; 2] {
    let q = h.qba();
    let first = q.mul(&q.delta_at(q.phi_inv(), 0), &q.embed(q.phi(), &[0, 1, 2], 4));
    let second = q.mul(&q.delta_at(q.phi(), 2), &q.embed(q.phi_inv(), &[1, 2, 3], 4));
    [gamma_bar_from(h, &first), gamma_bar_from(h, &second)]
}

/// `(S (x) S)Delta^T(a_(1)) gamma Delta(a_(2)) = eps(a) gamma` on the basis.
fn gamma_intertwining(h: &QuasiHopf, gamma: &Tensor) -> Check {
    let q = h.qba();
    let alg = h.algebra();
    Check::for_all("gamma-intertwining", alg.dim(), 1, |i| {
        let a = alg.basis(i[0]);
        let lhs = contract(alg, &q.delta(&a), 2, |y| alg.mul_all(&[&ss_delta_op(h, &alg.basis(y[0])), gamma, &q.delta(&alg.basis(y[1]))]));
        (lhs, gamma.scale(&q.eps(&a)))
    })
}

/// `Delta(a_(1)) gamma-bar (S (x) S)Delta^T(a_(2)) = eps(a) gamma-bar`.
fn gamma_bar_intertwining(h: &QuasiHopf, gamma_bar: &Tensor) -> Check {
    let q = h.qba();
    let alg = h.algebra();
    Check::for_all("gamma-bar-intertwining", alg.dim(), 1, |i| {
        let a = alg.basis(i[0]);
        let lhs =
            contract(alg, &q.delta(&a), 2, |y| alg.mul_all(&[&q.delta(&alg.basis(y[0])), gamma_bar, &ss_delta_op(h, &alg.basis(y[1]))]));
        (lhs, gamma_bar.scale(&q.eps(&a)))
    })
}

pub fn gamma_report(h: &QuasiHopf) -> (Tensor, Report) {
    let [g1, g2, g3] = gamma_routes(h);
    let mut r = Report::new();
    r.push(Check::equal("gamma-expansions-agree", &g1, &g2));
    r.push(Check::equal("gamma-explicit-form", &g1, &g3));
    r.push(gamma_intertwining(h, &g1));
    (g1, r)
}

pub fn gamma_bar_report(h: &QuasiHopf) -> (Tensor, Report) {
    let [g1, g2] = gamma_bar_routes(h);
    let mut r = Report::new();
    r.push(Check::equal("gamma-bar-expansions-agree", &g1, &g2));
    r.push(gamma_bar_intertwining(h, &g1));
    (g1, r)
}

pub fn compute_gamma(h: &QuasiHopf) -> Result<Tensor> {
    let (g, r) = gamma_report(h);
    finish(g, &r)
}

pub fn compute_gamma_bar(h: &QuasiHopf) -> Result<Tensor> {
    let (g, r) = gamma_bar_report(h);
    finish(g, &r)
}

/// Both expressions for `F_delta` and for its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldForms {
    pub f: Tensor,
    pub f_alt: Tensor,
    pub f_inv: Tensor,
    pub f_inv_alt: Tensor,
}

/// `F = (S (x) S)Delta^T(X) gamma Delta(Y beta S(Z)) = Delta'(Xbar beta S(Ybar)) gamma Delta(Zbar)`,
/// `F^{-1} = Delta(Xbar) gamma-bar Delta'(S(Ybar) alpha Zbar) = Delta(S(X) alpha Y) gamma-bar (S (x) S)Delta^T(Z)`.
pub fn drinfeld_forms(h: &QuasiHopf, gamma: &Tensor, gamma_bar: &Tensor) -> DrinfeldForms {
    let q = h.qba();
    let alg = h.algebra();
    let ap = h.antipode();
    let (a, b) = (h.alpha(), h.beta());
    let e = |i: usize| alg.basis(i);
    let dp = h.coproduct_primed();
    let f = contract(alg, q.phi(), 2, |x| {
        alg.mul_all(&[&ss_delta_op(h, &e(x[0])), gamma, &q.delta(&alg.mul_all(&[&e(x[1]), b, ap.s_basis(x[2])]))])
    });
    let f_alt = contract(alg, q.phi_inv(), 2, |x| {
        alg.mul_all(&[&dp.apply(&alg.mul_all(&[&e(x[0]), b, ap.s_basis(x[1])])), gamma, &q.delta(&e(x[2]))])
    });
    let f_inv = contract(alg, q.phi_inv(), 2, |x| {
        alg.mul_all(&[&q.delta(&e(x[0])), gamma_bar, &dp.apply(&alg.mul_all(&[ap.s_basis(x[1]), a, &e(x[2])]))])
    });
    let f_inv_alt = contract(alg, q.phi(), 2, |x| {
        alg.mul_all(&[&q.delta(&alg.mul_all(&[ap.s_basis(x[0]), a, &e(x[1])])), gamma_bar, &ss_delta_op(h, &e(x[2]))])
    });
    DrinfeldForms { f, f_alt, f_inv, f_inv_alt }
}

/// `F_0 = (S^{-1} (x) S^{-1}) F^T` with its inverse, built from `F_delta`.
fn second_from(h: &QuasiHopf, fd: &Twist) -> (Tensor, Tensor) {
    let ap = h.antipode();
    (ap.s_inv_legs(&fd.f().transpose()), ap.s_inv_legs(&fd.f_inv().transpose()))
}

/// Checks that twisting `h` by `f` gives the structure `target` (coproduct,
/// coassociator and canonical elements).
fn twists_into(h: &QuasiHopf, f: &Twist, target: &QuasiHopf, prefix: &str) -> Report {
    let q = h.qba();
    let alg = h.algebra();
    let tq = target.qba();
    let mut r = Report::new();
    r.push(Check::for_all("conjugation", alg.dim(), 1, |i| {
        (tq.delta(&alg.basis(i[0])), q.mul_all(&[f.f(), &q.delta(&alg.basis(i[0])), f.f_inv()]))
    }));
    r.push(Check::equal("coassociator", &twisted_phi(q, f), tq.phi()));
    let tw = twist_antipode(alg, h.antipode(), f);
    let ok = tw.alpha() == target.alpha() && tw.beta() == target.beta();
    r.push(Check::from_bool("canonical-elements", ok, "twisted alpha, beta differ from the target"));
    let mut out = Report::new();
    out.extend_prefixed(prefix, r);
    out
}

/// Every relation the Drinfeld twists satisfy, as a report; the data is
/// `None` only when `F_delta` is not invertible.
pub fn drinfeld_report(h: &QuasiHopf) -> (Option<DrinfeldData>, Report) {
    let q = h.qba();
    let alg = h.algebra();
    let (gamma, mut r) = gamma_report(h);
    let (gamma_bar, rb) = gamma_bar_report(h);
    r.extend(rb);
    let forms = drinfeld_forms(h, &gamma, &gamma_bar);
    r.push(Check::equal("drinfeld-forms-agree", &forms.f, &forms.f_alt));
    r.push(Check::equal("drinfeld-inverse-forms-agree", &forms.f_inv, &forms.f_inv_alt));
    let one = q.one(2);
    r.push(Check::equal("drinfeld-inverse", &alg.mul(&forms.f, &forms.f_inv), &one));
    r.push(Check::equal("drinfeld-inverse-left", &alg.mul(&forms.f_inv, &forms.f), &one));
    r.push(Check::equal("drinfeld-gamma", &alg.mul(&forms.f, &q.delta(h.alpha())), &gamma));
    r.push(Check::equal("drinfeld-gamma-bar", &alg.mul(&q.delta(h.beta()), &forms.f_inv), &gamma_bar));
    let fd = match Twist::with_inverse(q, forms.f.clone(), forms.f_inv.clone()) {
        Ok(t) => t,
        Err(e) => {
            r.push(Check::from_bool("drinfeld-is-twist", false, &alloc::format!("{e}")));
            return (None, r);
        }
    };
    r.extend(twists_into(h, &fd, &h.primed(), "drinfeld-"));
    let (f0, f0_inv) = second_from(h, &fd);
    let fz = match Twist::with_inverse(q, f0, f0_inv) {
        Ok(t) => t,
        Err(e) => {
            r.push(Check::from_bool("second-drinfeld-is-twist", false, &alloc::format!("{e}")));
            return (None, r);
        }
    };
    r.extend(twists_into(h, &fz, &h.zero_structure(), "second-drinfeld-"));
    (Some(DrinfeldData { gamma, gamma_bar, f_delta: fd, f_zero: fz }), r)
}

pub fn drinfeld_data(h: &QuasiHopf) -> Result<DrinfeldData> {
    let (d, r) = drinfeld_report(h);
    match d {
        Some(d) if r.passed() => Ok(d),
        _ => Err(postcondition(&r)),
    }
}

/// `F_delta`, with `Delta' = F Delta F^{-1}`, `Phi' = Phi_F`, the
/// `gamma` relations and the twisted canonical elements all asserted.
pub fn compute_drinfeld_twist(h: &QuasiHopf) -> Result<Twist> {
    drinfeld_data(h).map(|d| d.f_delta)
}

/// `F_0 = (S^{-1} (x) S^{-1}) F_delta^T`, asserted to twist `h` into the
/// zero-subscript structure.
pub fn compute_second_drinfeld(h: &QuasiHopf) -> Result<Twist> {
    drinfeld_data(h).map(|d| d.f_zero)
}

/// The Drinfeld twist of `H^cop` computed directly and as
/// `(S^{-1} (x) S^{-1}) F_delta = F_0^T`, plus its second Drinfeld twist
/// against `F_delta^T`.
pub fn opposite_drinfeld_report(h: &QuasiHopf) -> Result<(Twist, Report)> {
    let d = drinfeld_data(h)?;
    let op = h.opposite();
    let (od, mut r) = drinfeld_report(&op);
    let od = od.ok_or_else(|| postcondition(&r))?;
    let ap = h.antipode();
    r.push(Check::equal("opposite-drinfeld-routes", od.f_delta.f(), &ap.s_inv_legs(d.f_delta.f())));
    r.push(Check::equal("opposite-drinfeld-transpose", od.f_delta.f(), &d.f_zero.f().transpose()));
    r.push(Check::equal("opposite-second-drinfeld", od.f_zero.f(), &d.f_delta.f().transpose()));
    Ok((od.f_delta, r))
}

pub fn opposite_drinfeld(h: &QuasiHopf) -> Result<Twist> {
    let (t, r) = opposite_drinfeld_report(h)?;
    finish(t, &r)
}

/// `G Delta(g_i) gamma-bar (S (x) S)(G^T Delta^T(g^i))` for `G = g_i (x) g^i`.
pub fn gamma_bar_closed_form(h: &QuasiHopf, gamma_bar: &Tensor, g: &Twist) -> Tensor {
    let q = h.qba();
    let alg = h.algebra();
    let gt = g.f().transpose();
    let inner = contract(alg, g.f(), 2, |x| {
        let right = h.antipode().s_legs(&alg.mul(&gt, &q.delta(&alg.basis(x[1])).transpose()));
        alg.mul_all(&[&q.delta(&alg.basis(x[0])), gamma_bar, &right])
    });
    alg.mul(g.f(), &inner)
}

/// `gamma-bar` of the `G`-twisted structure, computed from its definition
/// and from the closed form, asserted equal.
pub fn gamma_bar_under_twist(h: &QuasiHopf, g: &Twist) -> Result<Tensor> {
    let gb = compute_gamma_bar(h)?;
    let direct = compute_gamma_bar(&twist_qha(h, g))?;
    let mut r = Report::new();
    r.push(Check::equal("gamma-bar-under-twist", &direct, &gamma_bar_closed_form(h, &gb, g)));
    finish(direct, &r)
}

/// Twisted Drinfeld twists: directly on the twisted structure against
/// `(S (x) S)(G^T)^{-1} F_delta G^{-1}` and
/// `(S^{-1} (x) S^{-1})(G^T)^{-1} F_0 G^{-1}`.
pub fn drinfeld_under_twist_report(h: &QuasiHopf, g: &Twist) -> Result<(Twist, Report)> {
    let alg = h.algebra();
    let ap = h.antipode();
    let d = drinfeld_data(h)?;
    let t = drinfeld_data(&twist_qha(h, g))?;
    let git = g.f_inv().transpose();
    let mut r = Report::new();
    let fd = alg.mul_all(&[&ap.s_legs(&git), d.f_delta.f(), g.f_inv()]);
    r.push(Check::equal("drinfeld-under-twist", t.f_delta.f(), &fd));
    let fd_inv = alg.mul_all(&[g.f(), d.f_delta.f_inv(), &ap.s_legs(&g.f().transpose())]);
    r.push(Check::equal("drinfeld-inverse-under-twist", t.f_delta.f_inv(), &fd_inv));
    let f0 = alg.mul_all(&[&ap.s_inv_legs(&git), d.f_zero.f(), g.f_inv()]);
    r.push(Check::equal("second-drinfeld-under-twist", t.f_zero.f(), &f0));
    Ok((t.f_delta, r))
}

pub fn drinfeld_under_twist(h: &QuasiHopf, g: &Twist) -> Result<Twist> {
    let (t, r) = drinfeld_under_twist_report(h, g)?;
    finish(t, &r)
}
