//! Quasi-bialgebras, quasi-Hopf algebras and quasi-triangular quasi-Hopf
//! algebras, with their axiom verifiers and the derived structures
//! (opposite, primed and zero-subscript).

use alloc::string::String;
use alloc::sync::Arc;

use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::scalar::{Field, Scalar};
use crate::tensor::{Algebra, LinearMap, Tensor};

/// `sum_idx t[idx] * term(idx)`; the zero of `A^{(x)out_arity}` when `t` is zero.
pub fn contract<F>(alg: &Algebra, t: &Tensor, out_arity: usize, mut term: F) -> Tensor
where
    F: FnMut(&[usize]) -> Tensor,
{
    let mut acc = alg.zero(out_arity);
    for (idx, c) in t.iter() {
        acc = acc.add(&term(&idx).scale(c));
    }
    acc
}

fn rejected(report: &Report) -> Error {
    Error::VerificationFailed(report.failed_ids())
}

#[derive(Clone, Debug)]
pub struct QuasiBialgebra {
    algebra: Arc<Algebra>,
    coproduct: LinearMap,
    counit: LinearMap,
    phi: Tensor,
    phi_inv: Tensor,
    verified: bool,
}

impl PartialEq for QuasiBialgebra {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.coproduct.columns() == other.coproduct.columns()
            && self.counit.columns() == other.counit.columns()
            && self.phi == other.phi
            && self.phi_inv == other.phi_inv
    }
}

impl QuasiBialgebra {
    /// Builds and fully verifies; a failing axiom is returned as
    /// [`Error::VerificationFailed`] listing the failed check ids.
    pub fn new(algebra: Arc<Algebra>, coproduct: LinearMap, counit: LinearMap, phi: Tensor) -> Result<Self> {
        Self::unverified(algebra, coproduct, counit, phi, None)?.into_verified()
    }

    /// Shape-checked but unverified. When `phi_inv` is omitted it is computed
    /// by exact inversion.
    pub fn unverified(
        algebra: Arc<Algebra>,
        coproduct: LinearMap,
        counit: LinearMap,
        phi: Tensor,
        phi_inv: Option<Tensor>,
    ) -> Result<Self> {
        let d = algebra.dim();
        if coproduct.dim() != d || counit.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: coproduct.dim().min(counit.dim()) });
        }
        if coproduct.out_arity() != 2 {
            return Err(Error::ArityMismatch { expected: 2, found: coproduct.out_arity() });
        }
        if counit.out_arity() != 0 {
            return Err(Error::ArityMismatch { expected: 0, found: counit.out_arity() });
        }
        if phi.arity() != 3 {
            return Err(Error::ArityMismatch { expected: 3, found: phi.arity() });
        }
        for t in coproduct.columns().iter().chain(counit.columns()).chain(core::iter::once(&phi)) {
            if t.field() != algebra.field() {
                return Err(Error::FieldMismatch);
            }
            if t.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, found: t.dim() });
            }
        }
        let phi_inv = match phi_inv {
            Some(p) => p,
            None => algebra.invert(&phi).map_err(|_| Error::VerificationFailed(alloc::vec![String::from("phi-invertible")]))?,
        };
        Ok(QuasiBialgebra { algebra, coproduct, counit, phi, phi_inv, verified: false })
    }

    pub fn into_verified(mut self) -> Result<Self> {
        let r = self.verify();
        if !r.passed() {
            return Err(rejected(&r));
        }
        self.verified = true;
        Ok(self)
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn coproduct(&self) -> &LinearMap {
        &self.coproduct
    }

    pub fn counit(&self) -> &LinearMap {
        &self.counit
    }

    pub fn phi(&self) -> &Tensor {
        &self.phi
    }

    pub fn phi_inv(&self) -> &Tensor {
        &self.phi_inv
    }

    pub fn delta(&self, a: &Tensor) -> Tensor {
        self.coproduct.apply(a)
    }

    /// `Delta` on leg `leg` (0-based) of `t`.
    pub fn delta_at(&self, t: &Tensor, leg: usize) -> Tensor {
        t.apply_on_leg(&self.coproduct, leg).expect("leg in range")
    }

    pub fn eps(&self, a: &Tensor) -> Scalar {
        self.counit.apply(a).scalar_value()
    }

    pub fn eps_at(&self, t: &Tensor, leg: usize) -> Tensor {
        t.apply_on_leg(&self.counit, leg).expect("leg in range")
    }

    pub fn one(&self, arity: usize) -> Tensor {
        self.algebra.unit_tensor(arity)
    }

    pub fn mul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        self.algebra.mul(a, b)
    }

    pub fn mul_all(&self, factors: &[&Tensor]) -> Tensor {
        self.algebra.mul_all(factors)
    }

    /// Places `t` on the given 0-based legs of an arity-`total` tensor.
    pub fn embed(&self, t: &Tensor, positions: &[usize], total: usize) -> Tensor {
        self.algebra.embed_legs(t, positions, total).expect("valid leg positions")
    }

    /// `Delta^T` as a linear map.
    pub fn coproduct_op(&self) -> LinearMap {
        let cols = self.coproduct.columns().iter().map(Tensor::transpose).collect();
        LinearMap::new(cols, false).expect("same shape")
    }

    /// The quasi-bialgebra with coproduct and coassociator replaced (counit
    /// and algebra kept), unverified.
    pub fn with_coproduct(&self, coproduct: LinearMap, phi: Tensor, phi_inv: Tensor) -> QuasiBialgebra {
        QuasiBialgebra { algebra: self.algebra.clone(), coproduct, counit: self.counit.clone(), phi, phi_inv, verified: false }
    }

    pub fn verify(&self) -> Report {
        let alg = &*self.algebra;
        let d = alg.dim();
        let f = alg.field();
        let mut r = Report::new();

        r.push(Check::for_all("coproduct-multiplicative", d, 2, |ij| {
            let (a, b) = (alg.basis(ij[0]), alg.basis(ij[1]));
            (self.delta(&alg.mul(&a, &b)), alg.mul(&self.delta(&a), &self.delta(&b)))
        }));
        r.push(Check::equal("coproduct-unital", &self.delta(&alg.one()), &self.one(2)));
        r.push(Check::for_all("counit-multiplicative", d, 2, |ij| {
            let (a, b) = (alg.basis(ij[0]), alg.basis(ij[1]));
            let lhs = Tensor::scalar(self.eps(&alg.mul(&a, &b)), d);
            (lhs, Tensor::scalar(&self.eps(&a) * &self.eps(&b), d))
        }));
        r.push(Check::equal("counit-unital", &Tensor::scalar(self.eps(&alg.one()), d), &Tensor::scalar(f.one(), d)));

        r.push(Check::for_all("quasi-coassociativity", d, 1, |i| {
            let da = self.delta(&alg.basis(i[0]));
            let lhs = self.delta_at(&da, 1);
            let rhs = self.mul_all(&[&self.phi_inv, &self.delta_at(&da, 0), &self.phi]);
            (lhs, rhs)
        }));

        let lhs = alg.mul(&self.delta_at(&self.phi, 0), &self.delta_at(&self.phi, 2));
        let rhs = self.mul_all(&[&self.phi.outer(&alg.one()), &self.delta_at(&self.phi, 1), &alg.one().outer(&self.phi)]);
        r.push(Check::equal("pentagon", &lhs, &rhs));

        r.push(Check::for_all("counit-left", d, 1, |i| {
            let a = alg.basis(i[0]);
            (self.eps_at(&self.delta(&a), 0), a)
        }));
        r.push(Check::for_all("counit-right", d, 1, |i| {
            let a = alg.basis(i[0]);
            (self.eps_at(&self.delta(&a), 1), a)
        }));
        r.push(Check::equal("phi-counit-middle", &self.eps_at(&self.phi, 1), &self.one(2)));
        r.push(Check::equal("phi-counit-first", &self.eps_at(&self.phi, 0), &self.one(2)));
        r.push(Check::equal("phi-counit-last", &self.eps_at(&self.phi, 2), &self.one(2)));

        let one3 = self.one(3);
        let left = alg.mul(&self.phi, &self.phi_inv);
        let right = alg.mul(&self.phi_inv, &self.phi);
        r.push(Check::equal("phi-invertible", if left != one3 { &left } else { &right }, &one3));
        r
    }
}

/// Antipode `S` (with cached inverse) and canonical elements `alpha`, `beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiAntipode {
    s: LinearMap,
    s_inv: LinearMap,
    alpha: Tensor,
    beta: Tensor,
}

impl QuasiAntipode {
    /// `s` is treated as an anti-homomorphism; fails if it is not bijective.
    pub fn new(s: LinearMap, alpha: Tensor, beta: Tensor) -> Result<Self> {
        if s.out_arity() != 1 {
            return Err(Error::ArityMismatch { expected: 1, found: s.out_arity() });
        }
        if alpha.arity() != 1 || beta.arity() != 1 {
            return Err(Error::ArityMismatch { expected: 1, found: alpha.arity().max(beta.arity()) });
        }
        let s = LinearMap::new(s.columns().to_vec(), true)?;
        let s_inv = s.inverse()?;
        Ok(QuasiAntipode { s, s_inv, alpha, beta })
    }

    pub fn s_map(&self) -> &LinearMap {
        &self.s
    }

    pub fn s_inv_map(&self) -> &LinearMap {
        &self.s_inv
    }

    pub fn alpha(&self) -> &Tensor {
        &self.alpha
    }

    pub fn beta(&self) -> &Tensor {
        &self.beta
    }

    pub fn s(&self, a: &Tensor) -> Tensor {
        self.s.apply(a)
    }

    pub fn s_inv(&self, a: &Tensor) -> Tensor {
        self.s_inv.apply(a)
    }

    /// `S` applied on every leg.
    pub fn s_legs(&self, t: &Tensor) -> Tensor {
        t.apply_on_all_legs(&self.s).expect("arity-1 map")
    }

    pub fn s_inv_legs(&self, t: &Tensor) -> Tensor {
        t.apply_on_all_legs(&self.s_inv).expect("arity-1 map")
    }

    pub fn s_basis(&self, i: usize) -> &Tensor {
        self.s.column(i)
    }

    /// Checks the quasi-antipode axioms against `qba`.
    pub fn verify(&self, qba: &QuasiBialgebra) -> Report {
        let alg = qba.algebra();
        let d = alg.dim();
        let mut r = Report::new();
        let one = alg.one();
        let (alpha, beta) = (&self.alpha, &self.beta);

        let lhs = contract(alg, qba.phi(), 1, |x| alg.mul_all(&[self.s_basis(x[0]), alpha, &alg.basis(x[1]), beta, self.s_basis(x[2])]));
        r.push(Check::equal("antipode-phi-left", &lhs, &one));
        let rhs = contract(alg, qba.phi_inv(), 1, |x| alg.mul_all(&[&alg.basis(x[0]), beta, self.s_basis(x[1]), alpha, &alg.basis(x[2])]));
        r.push(Check::equal("antipode-phi-right", &rhs, &one));

        r.push(Check::for_all("antipode-alpha", d, 1, |i| {
            let a = alg.basis(i[0]);
            let lhs = contract(alg, &qba.delta(&a), 1, |x| alg.mul_all(&[self.s_basis(x[0]), alpha, &alg.basis(x[1])]));
            (lhs, alpha.scale(&qba.eps(&a)))
        }));
        r.push(Check::for_all("antipode-beta", d, 1, |i| {
            let a = alg.basis(i[0]);
            let lhs = contract(alg, &qba.delta(&a), 1, |x| alg.mul_all(&[&alg.basis(x[0]), beta, self.s_basis(x[1])]));
            (lhs, beta.scale(&qba.eps(&a)))
        }));
        r.push(Check::for_all("antipode-anti-multiplicative", d, 2, |ij| {
            let ab = alg.mul(&alg.basis(ij[0]), &alg.basis(ij[1]));
            (self.s(&ab), alg.mul(self.s_basis(ij[1]), self.s_basis(ij[0])))
        }));
        r.push(Check::equal("antipode-unital", &self.s(&one), &one));
        r.push(Check::for_all("antipode-inverse", d, 1, |i| {
            let a = alg.basis(i[0]);
            (self.s_inv(&self.s(&a)), a)
        }));
        let eab = &qba.eps(alpha) * &qba.eps(beta);
        r.push(Check::equal("alpha-beta-counit", &Tensor::scalar(eab, d), &Tensor::scalar(alg.field().one(), d)));
        r.push(Check::for_all("counit-antipode", d, 1, |i| {
            let a = alg.basis(i[0]);
            (Tensor::scalar(qba.eps(&self.s(&a)), d), Tensor::scalar(qba.eps(&a), d))
        }));
        r.push(Check::for_all("counit-antipode-inverse", d, 1, |i| {
            let a = alg.basis(i[0]);
            (Tensor::scalar(qba.eps(&self.s_inv(&a)), d), Tensor::scalar(qba.eps(&a), d))
        }));
        r
    }
}

#[derive(Clone, Debug)]
pub struct QuasiHopf {
    qba: QuasiBialgebra,
    antipode: QuasiAntipode,
    verified: bool,
}

impl PartialEq for QuasiHopf {
    fn eq(&self, other: &Self) -> bool {
        self.qba == other.qba && self.antipode == other.antipode
    }
}

impl QuasiHopf {
    pub fn new(qba: QuasiBialgebra, antipode: QuasiAntipode) -> Result<Self> {
        Self::unverified(qba, antipode).into_verified()
    }

    pub fn unverified(qba: QuasiBialgebra, antipode: QuasiAntipode) -> Self {
        QuasiHopf { qba, antipode, verified: false }
    }

    pub fn into_verified(mut self) -> Result<Self> {
        let r = self.verify();
        if !r.passed() {
            return Err(rejected(&r));
        }
        self.verified = true;
        self.qba.verified = true;
        Ok(self)
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn verify(&self) -> Report {
        let mut r = self.qba.verify();
        r.extend(self.antipode.verify(&self.qba));
        r
    }

    pub fn qba(&self) -> &QuasiBialgebra {
        &self.qba
    }

    pub fn antipode(&self) -> &QuasiAntipode {
        &self.antipode
    }

    pub fn algebra(&self) -> &Algebra {
        self.qba.algebra()
    }

    pub fn field(&self) -> &Field {
        self.qba.field()
    }

    pub fn dim(&self) -> usize {
        self.qba.dim()
    }

    pub fn alpha(&self) -> &Tensor {
        self.antipode.alpha()
    }

    pub fn beta(&self) -> &Tensor {
        self.antipode.beta()
    }

    pub fn s(&self, a: &Tensor) -> Tensor {
        self.antipode.s(a)
    }

    pub fn s_inv(&self, a: &Tensor) -> Tensor {
        self.antipode.s_inv(a)
    }

    /// Same quasi-bialgebra with another quasi-antipode, unverified.
    pub fn with_antipode(&self, antipode: QuasiAntipode) -> QuasiHopf {
        QuasiHopf { qba: self.qba.clone(), antipode, verified: false }
    }

    /// `Delta'(a) = (S (x) S) Delta^T (S^{-1} a)` as a linear map.
    pub fn coproduct_primed(&self) -> LinearMap {
        let ap = &self.antipode;
        let cols = (0..self.dim()).map(|i| ap.s_legs(&self.qba.delta(ap.s_inv_map().column(i)).transpose())).collect();
        LinearMap::new(cols, false).expect("same shape")
    }

    /// `Delta_0(a) = (S^{-1} (x) S^{-1}) Delta^T (S a)` as a linear map.
    pub fn coproduct_zero(&self) -> LinearMap {
        let ap = &self.antipode;
        let cols = (0..self.dim()).map(|i| ap.s_inv_legs(&self.qba.delta(ap.s_basis(i)).transpose())).collect();
        LinearMap::new(cols, false).expect("same shape")
    }

    /// `H^cop`: coproduct `Delta^T`, coassociator `Phi^{-1}_{321}`, antipode
    /// `S^{-1}` with canonical elements `S^{-1}(alpha)`, `S^{-1}(beta)`.
    pub fn opposite(&self) -> QuasiHopf {
        let q = &self.qba;
        let qba = q.with_coproduct(q.coproduct_op(), q.phi_inv().relabel(&[3, 2, 1]), q.phi().relabel(&[3, 2, 1]));
        let ap = &self.antipode;
        let antipode = QuasiAntipode { s: ap.s_inv.clone(), s_inv: ap.s.clone(), alpha: ap.s_inv(ap.alpha()), beta: ap.s_inv(ap.beta()) };
        QuasiHopf { qba, antipode, verified: false }
    }

    /// Coproduct `Delta'`, coassociator `(S (x) S (x) S) Phi_{321}`,
    /// canonical elements `S(beta)`, `S(alpha)`.
    pub fn primed(&self) -> QuasiHopf {
        let ap = &self.antipode;
        let q = &self.qba;
        let phi = ap.s_legs(&q.phi().relabel(&[3, 2, 1]));
        let phi_inv = ap.s_legs(&q.phi_inv().relabel(&[3, 2, 1]));
        let qba = q.with_coproduct(self.coproduct_primed(), phi, phi_inv);
        let antipode = QuasiAntipode { s: ap.s.clone(), s_inv: ap.s_inv.clone(), alpha: ap.s(ap.beta()), beta: ap.s(ap.alpha()) };
        QuasiHopf { qba, antipode, verified: false }
    }

    /// Coproduct `Delta_0`, coassociator `(S^{-1})^{(x)3} Phi_{321}`,
    /// canonical elements `S^{-1}(beta)`, `S^{-1}(alpha)`.
    pub fn zero_structure(&self) -> QuasiHopf {
        let ap = &self.antipode;
        let q = &self.qba;
        let phi = ap.s_inv_legs(&q.phi().relabel(&[3, 2, 1]));
        let phi_inv = ap.s_inv_legs(&q.phi_inv().relabel(&[3, 2, 1]));
        let qba = q.with_coproduct(self.coproduct_zero(), phi, phi_inv);
        let antipode = QuasiAntipode { s: ap.s.clone(), s_inv: ap.s_inv.clone(), alpha: ap.s_inv(ap.beta()), beta: ap.s_inv(ap.alpha()) };
        QuasiHopf { qba, antipode, verified: false }
    }
}

#[derive(Clone, Debug)]
pub struct QuasiTriangular {
    qha: QuasiHopf,
    r: Tensor,
    r_inv: Tensor,
    verified: bool,
}

impl PartialEq for QuasiTriangular {
    fn eq(&self, other: &Self) -> bool {
        self.qha == other.qha && self.r == other.r && self.r_inv == other.r_inv
    }
}

impl QuasiTriangular {
    pub fn new(qha: QuasiHopf, r: Tensor) -> Result<Self> {
        Self::unverified(qha, r, None)?.into_verified()
    }

    pub fn unverified(qha: QuasiHopf, r: Tensor, r_inv: Option<Tensor>) -> Result<Self> {
        if r.arity() != 2 {
            return Err(Error::ArityMismatch { expected: 2, found: r.arity() });
        }
        if r.field() != qha.field() {
            return Err(Error::FieldMismatch);
        }
        if r.dim() != qha.dim() {
            return Err(Error::DimensionMismatch { expected: qha.dim(), found: r.dim() });
        }
        let r_inv = match r_inv {
            Some(x) => x,
            None => qha.algebra().invert(&r).map_err(|_| Error::VerificationFailed(alloc::vec![String::from("r-invertible")]))?,
        };
        Ok(QuasiTriangular { qha, r, r_inv, verified: false })
    }

    pub fn into_verified(mut self) -> Result<Self> {
        let rep = self.verify();
        if !rep.passed() {
            return Err(rejected(&rep));
        }
        self.verified = true;
        self.qha.verified = true;
        self.qha.qba.verified = true;
        Ok(self)
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn qha(&self) -> &QuasiHopf {
        &self.qha
    }

    pub fn qba(&self) -> &QuasiBialgebra {
        self.qha.qba()
    }

    pub fn r(&self) -> &Tensor {
        &self.r
    }

    pub fn r_inv(&self) -> &Tensor {
        &self.r_inv
    }

    pub fn verify(&self) -> Report {
        let mut rep = self.qha.verify();
        rep.extend(self.verify_rmatrix());
        rep
    }

    /// The R-matrix axioms only, assuming the quasi-Hopf part.
    pub fn verify_rmatrix(&self) -> Report {
        verify_rmatrix(self.qba(), &self.r, &self.r_inv)
    }

    /// Both sides of the quasi-QYBE; they must be equal.
    pub fn qqybe_sides(&self) -> (Tensor, Tensor) {
        qqybe_sides(self.qba(), &self.r)
    }

    pub fn check_qqybe(&self) -> bool {
        let (l, r) = self.qqybe_sides();
        l == r
    }

    pub fn with_r(qha: QuasiHopf, r: Tensor, r_inv: Tensor) -> QuasiTriangular {
        QuasiTriangular { qha, r, r_inv, verified: false }
    }

    /// `H^cop` with R-matrix `R^T`.
    pub fn opposite(&self) -> QuasiTriangular {
        QuasiTriangular::with_r(self.qha.opposite(), self.r.transpose(), self.r_inv.transpose())
    }

    /// Primed structure with `R' = (S (x) S) R`.
    pub fn primed(&self) -> QuasiTriangular {
        let ap = self.qha.antipode();
        QuasiTriangular::with_r(self.qha.primed(), ap.s_legs(&self.r), ap.s_legs(&self.r_inv))
    }

    /// Zero-subscript structure with `R_0 = (S^{-1} (x) S^{-1}) R`.
    pub fn zero_structure(&self) -> QuasiTriangular {
        let ap = self.qha.antipode();
        QuasiTriangular::with_r(self.qha.zero_structure(), ap.s_inv_legs(&self.r), ap.s_inv_legs(&self.r_inv))
    }
}

/// `Phi^{-1}_{231} R_13 Phi_132 R_23 Phi^{-1}_{123}`, the required value of
/// `(Delta (x) 1) R`.
pub fn r_coproduct_left(q: &QuasiBialgebra, r: &Tensor) -> Tensor {
    q.mul_all(&[
        &q.phi_inv().relabel(&[2, 3, 1]),
        &q.embed(r, &[0, 2], 3),
        &q.phi().relabel(&[1, 3, 2]),
        &q.embed(r, &[1, 2], 3),
        q.phi_inv(),
    ])
}

/// `Phi_312 R_13 Phi^{-1}_{213} R_12 Phi_123`, the required value of
/// `(1 (x) Delta) R`.
pub fn r_coproduct_right(q: &QuasiBialgebra, r: &Tensor) -> Tensor {
    q.mul_all(&[&q.phi().relabel(&[3, 1, 2]), &q.embed(r, &[0, 2], 3), &q.phi_inv().relabel(&[2, 1, 3]), &q.embed(r, &[0, 1], 3), q.phi()])
}

pub fn verify_rmatrix(q: &QuasiBialgebra, r: &Tensor, r_inv: &Tensor) -> Report {
    let alg = q.algebra();
    let d = alg.dim();
    let mut rep = Report::new();
    rep.push(Check::for_all("r-intertwines-coproduct", d, 1, |i| {
        let da = q.delta(&alg.basis(i[0]));
        (alg.mul(&da.transpose(), r), alg.mul(r, &da))
    }));
    rep.push(Check::equal("r-coproduct-left", &q.delta_at(r, 0), &r_coproduct_left(q, r)));
    rep.push(Check::equal("r-coproduct-right", &q.delta_at(r, 1), &r_coproduct_right(q, r)));
    rep.push(Check::equal("r-counit-left", &q.eps_at(r, 0), &alg.one()));
    rep.push(Check::equal("r-counit-right", &q.eps_at(r, 1), &alg.one()));
    let one = q.one(2);
    let left = alg.mul(r, r_inv);
    let right = alg.mul(r_inv, r);
    rep.push(Check::equal("r-invertible", if left != one { &left } else { &right }, &one));
    rep
}

/// Left and right sides of
/// `R_12 Phi^{-1}_{231} R_13 Phi_132 R_23 Phi^{-1}_{123} = Phi^{-1}_{321} R_23 Phi_312 R_13 Phi^{-1}_{213} R_12`.
pub fn qqybe_sides(q: &QuasiBialgebra, r: &Tensor) -> (Tensor, Tensor) {
    let r12 = q.embed(r, &[0, 1], 3);
    let r13 = q.embed(r, &[0, 2], 3);
    let r23 = q.embed(r, &[1, 2], 3);
    let (p, pi) = (q.phi(), q.phi_inv());
    let lhs = q.mul_all(&[&r12, &pi.relabel(&[2, 3, 1]), &r13, &p.relabel(&[1, 3, 2]), &r23, pi]);
    let rhs = q.mul_all(&[&pi.relabel(&[3, 2, 1]), &r23, &p.relabel(&[3, 1, 2]), &r13, &pi.relabel(&[2, 1, 3]), &r12]);
    (lhs, rhs)
}

/// Consequences of the axioms that the other identities lean on:
/// the `a`-left relation and the two rearrangements of the pentagon.
pub fn helper_identities(h: &QuasiHopf) -> Report {
    let q = h.qba();
    let alg = q.algebra();
    let d = alg.dim();
    let ap = h.antipode();
    let beta = h.beta();
    let mut rep = Report::new();

    // X a (x) Y beta S(Z) = a_(1)^(1) X (x) a_(1)^(2) Y beta S(Z) S(a_(2))
    rep.push(Check::for_all("helper-a-left", d, 1, |i| {
        let a = alg.basis(i[0]);
        let lhs =
            contract(alg, q.phi(), 2, |x| alg.mul(&alg.basis(x[0]), &a).outer(&alg.mul_all(&[&alg.basis(x[1]), beta, ap.s_basis(x[2])])));
        let da = q.delta_at(&q.delta(&a), 0);
        let rhs = contract(alg, &da, 2, |y| {
            contract(alg, q.phi(), 2, |x| {
                let left = alg.mul(&alg.basis(y[0]), &alg.basis(x[0]));
                let right = alg.mul_all(&[&alg.basis(y[1]), &alg.basis(x[1]), beta, ap.s_basis(x[2]), ap.s_basis(y[2])]);
                left.outer(&right)
            })
        });
        (lhs, rhs)
    }));

    let one = alg.one();
    let phi_1 = q.phi().outer(&one);
    let one_phi = one.outer(q.phi());
    let rhs = q.mul_all(&[&q.delta_at(q.phi(), 0), &q.delta_at(q.phi(), 2), &one.outer(q.phi_inv()), &q.delta_at(q.phi_inv(), 1)]);
    rep.push(Check::equal("helper-phi-by-one", &phi_1, &rhs));
    let rhs = q.mul_all(&[&q.delta_at(q.phi_inv(), 1), &q.phi_inv().outer(&one), &q.delta_at(q.phi(), 0), &q.delta_at(q.phi(), 2)]);
    rep.push(Check::equal("helper-one-by-phi", &one_phi, &rhs));
    rep
}
