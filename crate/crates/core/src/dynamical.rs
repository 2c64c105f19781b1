//! Parameter-dependent twists satisfying the shifted quasi-cocycle
//! condition, the dynamical coassociator and the quasi-dynamical QYBE.
//!
//! The shift `lambda + h^(k)` is realized through a complete system of
//! orthogonal central idempotents `p_i` with weights `w_i`:
//! `X(lambda + h^(k)) = sum_i p_i (at leg k) X(lambda + w_i) (at the other legs)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::scalar::{rational_to_string, Rational, Scalar};
use crate::structures::{QuasiBialgebra, QuasiTriangular};
use crate::tensor::{Algebra, Tensor};
use crate::twist::{twisted_coproduct, twisted_phi, twisted_phi_inv, Twist};

/// A point of the parameter space; one-parameter families use length 1.
pub type Param = Vec<Rational>;

pub fn param_to_string(p: &Param) -> String {
    let parts: Vec<String> = p.iter().map(rational_to_string).collect();
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        format!("({})", parts.join(", "))
    }
}

fn shifted(p: &Param, w: &Param) -> Param {
    p.iter().zip(w).map(|(a, b)| a + b).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftSystem {
    idempotents: Vec<Tensor>,
    weights: Vec<Param>,
}

impl ShiftSystem {
    /// Checks orthogonality, completeness and centrality of the idempotents.
    pub fn new(alg: &Algebra, idempotents: Vec<Tensor>, weights: Vec<Param>) -> Result<Self> {
        if idempotents.is_empty() || idempotents.len() != weights.len() {
            return Err(Error::InvalidShiftSystem("one weight per idempotent is required"));
        }
        let n = weights[0].len();
        if n == 0 || weights.iter().any(|w| w.len() != n) {
            return Err(Error::InvalidShiftSystem("weights must share one parameter count"));
        }
        let mut sum = alg.zero(1);
        for (i, p) in idempotents.iter().enumerate() {
            if p.arity() != 1 || p.dim() != alg.dim() {
                return Err(Error::InvalidShiftSystem("idempotents must be algebra elements"));
            }
            if !alg.is_central(p) {
                return Err(Error::InvalidShiftSystem("idempotents must be central"));
            }
            for (j, q) in idempotents.iter().enumerate() {
                let pq = alg.mul(p, q);
                let want = if i == j { p.clone() } else { alg.zero(1) };
                if pq != want {
                    return Err(Error::InvalidShiftSystem("idempotents must be orthogonal"));
                }
            }
            sum = sum.add(p);
        }
        if sum != alg.one() {
            return Err(Error::InvalidShiftSystem("idempotents must sum to one"));
        }
        Ok(ShiftSystem { idempotents, weights })
    }

    /// The single idempotent `1` with weight zero.
    pub fn trivial(alg: &Algebra, params: usize) -> Self {
        ShiftSystem { idempotents: vec![alg.one()], weights: vec![vec![Rational::default(); params]] }
    }

    pub fn idempotents(&self) -> &[Tensor] {
        &self.idempotents
    }

    pub fn weights(&self) -> &[Param] {
        &self.weights
    }

    pub fn params(&self) -> usize {
        self.weights[0].len()
    }

    /// `h = sum_i w_i p_i`, one element per parameter.
    pub fn h(&self) -> Vec<Tensor> {
        (0..self.params())
            .map(|k| {
                let f = self.idempotents[0].field();
                let mut h = Tensor::zero(f, self.idempotents[0].dim(), 1);
                for (p, w) in self.idempotents.iter().zip(&self.weights) {
                    h = h.add(&p.scale(&Scalar::from_rational(w[k].clone(), f)));
                }
                h
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(|w| w.iter().all(|x| *x == Rational::default()))
    }
}

/// A finite family `lambda -> F(lambda)` with its shift system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynamicalTwist {
    twists: BTreeMap<Param, Twist>,
    shift: ShiftSystem,
}

impl DynamicalTwist {
    pub fn new(twists: BTreeMap<Param, Twist>, shift: ShiftSystem) -> Result<Self> {
        if twists.keys().any(|k| k.len() != shift.params()) {
            return Err(Error::InvalidShiftSystem("parameter count differs from the weights"));
        }
        let d = DynamicalTwist { twists, shift };
        if d.checkable().is_empty() {
            return Err(Error::InvalidShiftSystem("no parameter has all its shifts inside the domain"));
        }
        Ok(d)
    }

    /// `F(lambda) = f` on every point of `domain`.
    pub fn constant(f: &Twist, domain: &[Param], shift: ShiftSystem) -> Result<Self> {
        Self::new(domain.iter().map(|p| (p.clone(), f.clone())).collect(), shift)
    }

    pub fn shift(&self) -> &ShiftSystem {
        &self.shift
    }

    pub fn domain(&self) -> impl Iterator<Item = &Param> {
        self.twists.keys()
    }

    pub fn twists(&self) -> &BTreeMap<Param, Twist> {
        &self.twists
    }

    pub fn at(&self, p: &Param) -> Result<&Twist> {
        self.twists.get(p).ok_or(Error::ShiftOutOfDomain)
    }

    /// Parameters whose every shift stays inside the domain.
    pub fn checkable(&self) -> Vec<Param> {
        self.twists.keys().filter(|p| self.shift.weights.iter().all(|w| self.twists.contains_key(&shifted(p, w)))).cloned().collect()
    }
}

/// The two legs other than `leg` in an arity-3 tensor.
fn other_legs(leg: usize) -> [usize; 2] {
    match leg {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    }
}

/// `sum_i p_i (at leg) * value(lambda + w_i) (at the other two legs)`.
pub fn shifted_with<F>(alg: &Algebra, shift: &ShiftSystem, lambda: &Param, leg: usize, mut value: F) -> Result<Tensor>
where
    F: FnMut(&Param) -> Result<Tensor>,
{
    if leg > 2 {
        return Err(Error::LegOutOfRange { leg, arity: 3 });
    }
    let mut acc = alg.zero(3);
    for (p, w) in shift.idempotents.iter().zip(&shift.weights) {
        let x = value(&shifted(lambda, w))?;
        let placed = alg.embed_legs(&x, &other_legs(leg), 3)?;
        acc = acc.add(&alg.mul(&alg.embed_legs(p, &[leg], 3)?, &placed));
    }
    Ok(acc)
}

/// `F(lambda + h^(leg))` in `H^(x)3`, with `leg` 0-based.
pub fn shifted_insert(d: &DynamicalTwist, alg: &Algebra, lambda: &Param, leg: usize) -> Result<Tensor> {
    shifted_with(alg, &d.shift, lambda, leg, |p| Ok(d.at(p)?.f().clone()))
}

fn shifted_insert_inv(d: &DynamicalTwist, alg: &Algebra, lambda: &Param, leg: usize) -> Result<Tensor> {
    shifted_with(alg, &d.shift, lambda, leg, |p| Ok(d.at(p)?.f_inv().clone()))
}

/// `F_12(l) (Delta (x) 1)F(l) Phi` and `Phi F_23(l + h^(1)) (1 (x) Delta)F(l)`.
pub fn shifted_quasi_cocycle_sides(d: &DynamicalTwist, q: &QuasiBialgebra, lambda: &Param) -> Result<(Tensor, Tensor)> {
    let alg = q.algebra();
    let f = d.at(lambda)?.f();
    let lhs = q.mul_all(&[&q.embed(f, &[0, 1], 3), &q.delta_at(f, 0), q.phi()]);
    let rhs = q.mul_all(&[q.phi(), &shifted_insert(d, alg, lambda, 0)?, &q.delta_at(f, 1)]);
    Ok((lhs, rhs))
}

fn at_id(base: &str, lambda: &Param) -> String {
    format!("{base}[{}]", param_to_string(lambda))
}

/// The shifted condition at every checkable parameter.
pub fn check_shifted_quasi_cocycle(d: &DynamicalTwist, q: &QuasiBialgebra) -> Report {
    let mut r = Report::new();
    for lambda in d.checkable() {
        let id = at_id("shifted-quasi-cocycle", &lambda);
        match shifted_quasi_cocycle_sides(d, q, &lambda) {
            Ok((l, rr)) => r.push(Check::equal(id, &l, &rr)),
            Err(e) => r.push(Check::from_bool(id, false, &format!("{e}"))),
        }
    }
    r
}

fn require_shifted(d: &DynamicalTwist, q: &QuasiBialgebra, lambda: &Param) -> Result<()> {
    let (l, r) = shifted_quasi_cocycle_sides(d, q, lambda)?;
    if l == r {
        Ok(())
    } else {
        Err(Error::Postcondition(format!("shifted quasi-cocycle condition fails at {}", param_to_string(lambda))))
    }
}

/// `Phi(lambda)` and its inverse: the twisted coassociator of `F(lambda)`,
/// asserted equal to `Phi F_23(l + h^(1)) F_23(l)^{-1}` and
/// `F_23(l) F_23(l + h^(1))^{-1} Phi^{-1}`.
pub fn dynamical_coassociator(d: &DynamicalTwist, q: &QuasiBialgebra, lambda: &Param) -> Result<(Tensor, Tensor)> {
    require_shifted(d, q, lambda)?;
    let alg = q.algebra();
    let f = d.at(lambda)?;
    let direct = twisted_phi(q, f);
    let direct_inv = twisted_phi_inv(q, f);
    let f23_inv = q.embed(f.f_inv(), &[1, 2], 3);
    let f23 = q.embed(f.f(), &[1, 2], 3);
    let closed = q.mul_all(&[q.phi(), &shifted_insert(d, alg, lambda, 0)?, &f23_inv]);
    let closed_inv = q.mul_all(&[&f23, &shifted_insert_inv(d, alg, lambda, 0)?, q.phi_inv()]);
    let mut r = Report::new();
    r.push(Check::equal(at_id("dynamical-coassociator", lambda), &direct, &closed));
    r.push(Check::equal(at_id("dynamical-coassociator-inverse", lambda), &direct_inv, &closed_inv));
    if r.passed() {
        Ok((direct, direct_inv))
    } else {
        Err(Error::Postcondition(r.failed_ids().join(", ")))
    }
}

/// `R(lambda) = F^T(lambda) R F(lambda)^{-1}`.
pub fn dynamical_r(d: &DynamicalTwist, t: &QuasiTriangular, lambda: &Param) -> Result<Tensor> {
    let f = d.at(lambda)?;
    Ok(t.qba().mul_all(&[&f.f().transpose(), t.r(), f.f_inv()]))
}

/// `X(lambda + h^(leg))` for a derived family `X` of two-leg elements.
fn shifted_family<F>(d: &DynamicalTwist, alg: &Algebra, lambda: &Param, leg: usize, value: F) -> Result<Tensor>
where
    F: Fn(&Param) -> Result<Tensor>,
{
    shifted_with(alg, &d.shift, lambda, leg, |p| value(p))
}

/// The four coproduct identities of `R(lambda)` under the
/// `F(lambda)`-twisted structure.
pub fn check_dynamical_coproduct(d: &DynamicalTwist, t: &QuasiTriangular, lambda: &Param) -> Result<Report> {
    let q = t.qba();
    let alg = q.algebra();
    let (pl, pl_inv) = dynamical_coassociator(d, q, lambda)?;
    let f = d.at(lambda)?;
    let dl = twisted_coproduct(q, f);
    let dl_op: Vec<Tensor> = dl.columns().iter().map(Tensor::transpose).collect();
    let dl_op = crate::tensor::LinearMap::new(dl_op, false)?;
    let rl = dynamical_r(d, t, lambda)?;
    let r_at = |p: &Param| dynamical_r(d, t, p);
    let e = |x: &Tensor, legs: [usize; 2]| q.embed(x, &legs, 3);
    let (p, pi) = (q.phi(), q.phi_inv());
    let r23_h1 = shifted_family(d, alg, lambda, 0, r_at)?;
    let r13_h2 = shifted_family(d, alg, lambda, 1, r_at)?;
    let r12_h3 = shifted_family(d, alg, lambda, 2, r_at)?;

    let mut rep = Report::new();
    let lhs = rl.apply_on_leg(&dl, 0)?;
    let rhs = q.mul_all(&[&pl_inv.relabel(&[2, 3, 1]), &e(&rl, [0, 2]), &p.relabel(&[1, 3, 2]), &r23_h1, pi]);
    rep.push(Check::equal(at_id("dynamical-coproduct-left", lambda), &lhs, &rhs));
    let lhs = rl.apply_on_leg(&dl, 1)?;
    let rhs = q.mul_all(&[&p.relabel(&[3, 1, 2]), &r13_h2, &pi.relabel(&[2, 1, 3]), &e(&rl, [0, 1]), &pl]);
    rep.push(Check::equal(at_id("dynamical-coproduct-right", lambda), &lhs, &rhs));
    let lhs = rl.apply_on_leg(&dl_op, 0)?;
    let rhs = q.mul_all(&[&pl_inv.relabel(&[3, 2, 1]), &e(&rl, [1, 2]), &p.relabel(&[3, 1, 2]), &r13_h2, &pi.relabel(&[2, 1, 3])]);
    rep.push(Check::equal(at_id("dynamical-coproduct-left-op", lambda), &lhs, &rhs));
    let lhs = rl.apply_on_leg(&dl_op, 1)?;
    let rhs = q.mul_all(&[&p.relabel(&[3, 2, 1]), &r12_h3, &pi.relabel(&[2, 3, 1]), &e(&rl, [0, 2]), &pl.relabel(&[1, 3, 2])]);
    rep.push(Check::equal(at_id("dynamical-coproduct-right-op", lambda), &lhs, &rhs));
    Ok(rep)
}

/// Both sides of
/// `R_12(l+h3) Phi^{-1}_231 R_13(l) Phi_132 R_23(l+h1) Phi^{-1}_123 = Phi^{-1}_321 R_23(l) Phi_312 R_13(l+h2) Phi^{-1}_213 R_12(l)`.
pub fn qdqybe_sides(d: &DynamicalTwist, t: &QuasiTriangular, lambda: &Param) -> Result<(Tensor, Tensor)> {
    require_shifted(d, t.qba(), lambda)?;
    let r_at = |p: &Param| dynamical_r(d, t, p);
    qdqybe_sides_for(d, t.qba(), lambda, &r_at)
}

fn qdqybe_sides_for<F>(d: &DynamicalTwist, q: &QuasiBialgebra, lambda: &Param, r_at: &F) -> Result<(Tensor, Tensor)>
where
    F: Fn(&Param) -> Result<Tensor>,
{
    let alg = q.algebra();
    let rl = r_at(lambda)?;
    let e = |x: &Tensor, legs: [usize; 2]| q.embed(x, &legs, 3);
    let (p, pi) = (q.phi(), q.phi_inv());
    let r12_h3 = shifted_family(d, alg, lambda, 2, r_at)?;
    let r13_h2 = shifted_family(d, alg, lambda, 1, r_at)?;
    let r23_h1 = shifted_family(d, alg, lambda, 0, r_at)?;
    let lhs = q.mul_all(&[&r12_h3, &pi.relabel(&[2, 3, 1]), &e(&rl, [0, 2]), &p.relabel(&[1, 3, 2]), &r23_h1, pi]);
    let rhs =
        q.mul_all(&[&pi.relabel(&[3, 2, 1]), &e(&rl, [1, 2]), &p.relabel(&[3, 1, 2]), &r13_h2, &pi.relabel(&[2, 1, 3]), &e(&rl, [0, 1])]);
    Ok((lhs, rhs))
}

pub fn check_qdqybe(d: &DynamicalTwist, t: &QuasiTriangular, lambda: &Param) -> Result<bool> {
    let (l, r) = qdqybe_sides(d, t, lambda)?;
    Ok(l == r)
}

/// `R_12(l+h3) R_13(l) R_23(l+h1)` and `R_23(l) R_13(l+h2) R_12(l)`, the
/// dynamical QYBE without coassociators.
pub fn classical_dqybe_sides(d: &DynamicalTwist, t: &QuasiTriangular, lambda: &Param) -> Result<(Tensor, Tensor)> {
    let q = t.qba();
    let alg = q.algebra();
    let r_at = |p: &Param| dynamical_r(d, t, p);
    let rl = r_at(lambda)?;
    let e = |x: &Tensor, legs: [usize; 2]| q.embed(x, &legs, 3);
    let lhs = q.mul_all(&[&shifted_family(d, alg, lambda, 2, r_at)?, &e(&rl, [0, 2]), &shifted_family(d, alg, lambda, 0, r_at)?]);
    let rhs = q.mul_all(&[&e(&rl, [1, 2]), &shifted_family(d, alg, lambda, 1, r_at)?, &e(&rl, [0, 1])]);
    Ok((lhs, rhs))
}

/// The three R-matrix families satisfying the opposite quasi-dynamical QYBE.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `(S (x) S) R(lambda)` with coassociator `(S (x) S (x) S) Phi_321`.
    Primed,
    /// `(S^{-1} (x) S^{-1}) R(lambda)` with `(S^{-1})^(x)3 Phi_321`.
    Zero,
    /// `R^T(lambda)` with `Phi^{-1}_321`.
    Transpose,
}

/// Both sides of
/// `R~_12(l) P~^{-1}_231 R~_13(l+h2) P~_132 R~_23(l) P~^{-1}_123 = P~^{-1}_321 R~_23(l+h1) P~_312 R~_13(l) P~^{-1}_213 R~_12(l+h3)`.
pub fn opposite_qdqybe_sides(d: &DynamicalTwist, t: &QuasiTriangular, variant: Variant, lambda: &Param) -> Result<(Tensor, Tensor)> {
    require_shifted(d, t.qba(), lambda)?;
    let h = t.qha();
    let q = t.qba();
    let ap = h.antipode();
    let alg = q.algebra();
    let (pt, pti) = match variant {
        Variant::Primed => (ap.s_legs(&q.phi().relabel(&[3, 2, 1])), ap.s_legs(&q.phi_inv().relabel(&[3, 2, 1]))),
        Variant::Zero => (ap.s_inv_legs(&q.phi().relabel(&[3, 2, 1])), ap.s_inv_legs(&q.phi_inv().relabel(&[3, 2, 1]))),
        Variant::Transpose => (q.phi_inv().relabel(&[3, 2, 1]), q.phi().relabel(&[3, 2, 1])),
    };
    let r_at = |p: &Param| -> Result<Tensor> {
        let r = dynamical_r(d, t, p)?;
        Ok(match variant {
            Variant::Primed => ap.s_legs(&r),
            Variant::Zero => ap.s_inv_legs(&r),
            Variant::Transpose => r.transpose(),
        })
    };
    let rl = r_at(lambda)?;
    let e = |x: &Tensor, legs: [usize; 2]| q.embed(x, &legs, 3);
    let r12_h3 = shifted_family(d, alg, lambda, 2, r_at)?;
    let r13_h2 = shifted_family(d, alg, lambda, 1, r_at)?;
    let r23_h1 = shifted_family(d, alg, lambda, 0, r_at)?;
    let lhs = q.mul_all(&[&e(&rl, [0, 1]), &pti.relabel(&[2, 3, 1]), &r13_h2, &pt.relabel(&[1, 3, 2]), &e(&rl, [1, 2]), &pti]);
    let rhs = q.mul_all(&[&pti.relabel(&[3, 2, 1]), &r23_h1, &pt.relabel(&[3, 1, 2]), &e(&rl, [0, 2]), &pti.relabel(&[2, 1, 3]), &r12_h3]);
    Ok((lhs, rhs))
}

pub fn check_opposite_qdqybe(d: &DynamicalTwist, t: &QuasiTriangular, variant: Variant, lambda: &Param) -> Result<bool> {
    let (l, r) = opposite_qdqybe_sides(d, t, variant, lambda)?;
    Ok(l == r)
}

/// Every dynamical identity at every checkable parameter, as one report.
pub fn dynamical_report(d: &DynamicalTwist, t: &QuasiTriangular) -> Report {
    let q = t.qba();
    let mut rep = check_shifted_quasi_cocycle(d, q);
    if !rep.passed() {
        return rep;
    }
    for lambda in d.checkable() {
        let r = dynamical_coassociator(d, q, &lambda).map(|_| ());
        rep.push(Check::from_bool(at_id("dynamical-coassociator-routes", &lambda), r.is_ok(), "routes differ"));
        match check_dynamical_coproduct(d, t, &lambda) {
            Ok(r) => rep.extend(r),
            Err(e) => rep.push(Check::from_bool(at_id("dynamical-coproduct", &lambda), false, &format!("{e}"))),
        }
        match qdqybe_sides(d, t, &lambda) {
            Ok((l, r)) => rep.push(Check::equal(at_id("qdqybe", &lambda), &l, &r)),
            Err(e) => rep.push(Check::from_bool(at_id("qdqybe", &lambda), false, &format!("{e}"))),
        }
        for (name, v) in [("primed", Variant::Primed), ("zero", Variant::Zero), ("transpose", Variant::Transpose)] {
            let id = at_id(&format!("opposite-qdqybe-{name}"), &lambda);
            match opposite_qdqybe_sides(d, t, v, &lambda) {
                Ok((l, r)) => rep.push(Check::equal(id, &l, &r)),
                Err(e) => rep.push(Check::from_bool(id, false, &format!("{e}"))),
            }
        }
    }
    rep
}

/// `{0, 1/2, 1, .., 3}`.
pub fn half_integer_grid() -> Vec<Param> {
    (0..=6).map(|k| vec![Rational::new(k.into(), 2.into())]).collect()
}

/// On k[Z/2]: idempotents `q = (1+g)/2`, `p = (1-g)/2` with weights 0 and 1,
/// and `F(lambda) = 1 (x) 1 + (c(lambda) - 1) p (x) p`. The shifted condition
/// reduces to `c(lambda) = c(lambda + 1)`; `c = 2` on integers and `3` on
/// half-integers satisfies it on the half-integer grid.
pub fn z2_family(q: &QuasiBialgebra) -> Result<DynamicalTwist> {
    let f = q.field();
    let c = |l: &Param| if l[0].is_integer() { f.int(2) } else { f.int(3) };
    z2_family_with(q, &half_integer_grid(), c)
}

pub fn z2_family_with<C>(q: &QuasiBialgebra, domain: &[Param], c: C) -> Result<DynamicalTwist>
where
    C: Fn(&Param) -> Scalar,
{
    let alg = q.algebra();
    let f = q.field();
    if alg.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: alg.dim() });
    }
    let p = crate::catalog::z2_p(f);
    let qq = crate::catalog::z2_q(f);
    let shift = ShiftSystem::new(alg, vec![qq, p.clone()], vec![vec![Rational::default()], vec![Rational::from_integer(1.into())]])?;
    let pp = p.outer(&p);
    let mut twists = BTreeMap::new();
    for l in domain {
        let ft = q.one(2).add(&pp.scale(&(&c(l) - &f.one())));
        twists.insert(l.clone(), Twist::new(q, ft)?);
    }
    DynamicalTwist::new(twists, shift)
}
