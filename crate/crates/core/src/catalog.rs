//! Built-in example structures.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::structures::{QuasiAntipode, QuasiBialgebra, QuasiHopf, QuasiTriangular};
use crate::tensor::{Algebra, LinearMap, Tensor};

/// A quasi-Hopf algebra, possibly with an R-matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum Structure {
    Hopf(QuasiHopf),
    Triangular(QuasiTriangular),
}

impl Structure {
    pub fn qha(&self) -> &QuasiHopf {
        match self {
            Structure::Hopf(h) => h,
            Structure::Triangular(t) => t.qha(),
        }
    }

    pub fn triangular(&self) -> Option<&QuasiTriangular> {
        match self {
            Structure::Hopf(_) => None,
            Structure::Triangular(t) => Some(t),
        }
    }

    pub fn verify(&self) -> crate::report::Report {
        match self {
            Structure::Hopf(h) => h.verify(),
            Structure::Triangular(t) => t.verify(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub structure: Structure,
    pub notes: &'static str,
}

pub const BUILTIN_NAMES: &[&str] = &["trivial", "group_zn(n)", "z2_triangular", "sweedler_h4", "semion"];

/// Looks up a built-in by name; `group_zn(n)` takes the order in parentheses.
pub fn builtin(name: &str) -> Result<CatalogEntry> {
    let unknown = || Error::UnknownBuiltin(name.to_string());
    let (structure, notes) = match name {
        "trivial" => (Structure::Triangular(trivial()?), "one-dimensional algebra; every structure map is the identity"),
        "z2_triangular" => (Structure::Triangular(z2_triangular()?), "k[Z/2] with its nontrivial triangular R-matrix"),
        "sweedler_h4" => (Structure::Triangular(sweedler_h4()?), "Sweedler's four-dimensional Hopf algebra, R-matrix at t = 1"),
        "semion" => (Structure::Triangular(semion()?), "k[Z/2] with the nontrivial 3-cocycle coassociator, over Q(zeta_4)"),
        _ => {
            let n = name
                .strip_prefix("group_zn(")
                .and_then(|s| s.strip_suffix(')'))
                .and_then(|s| s.trim().parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(unknown)?;
            (Structure::Hopf(group_zn(n)?), "group algebra of the cyclic group")
        }
    };
    let name = if let Structure::Hopf(h) = &structure { format!("group_zn({})", h.dim()) } else { name.to_string() };
    Ok(CatalogEntry { name, structure, notes })
}

fn ints(f: &Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| f.int(x)).collect()
}

fn t2(f: &Field, d: usize, entries: &[(usize, usize, Scalar)]) -> Tensor {
    Tensor::from_entries(f, d, 2, entries.iter().map(|(i, j, c)| (vec![*i, *j], c.clone()))).expect("in range")
}

fn counit(f: &Field, values: &[i64]) -> LinearMap {
    let d = values.len();
    LinearMap::new(values.iter().map(|&v| Tensor::scalar(f.int(v), d)).collect(), false).expect("consistent")
}

/// Group algebra of Z/n in the basis `g^0, .., g^(n-1)`.
fn cyclic_algebra(f: &Field, n: usize) -> Result<Algebra> {
    let mut prods = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut v = vec![f.zero(); n];
            v[(i + j) % n] = f.one();
            prods.push((i, j, v));
        }
    }
    let mut unit = vec![f.zero(); n];
    unit[0] = f.one();
    Algebra::new(f, n, prods, &unit)
}

fn group_hopf(f: &Field, n: usize) -> Result<QuasiHopf> {
    let alg = Arc::new(cyclic_algebra(f, n)?);
    let delta = LinearMap::new((0..n).map(|i| t2(f, n, &[(i, i, f.one())])).collect(), false)?;
    let eps = counit(f, &vec![1; n]);
    let phi = alg.unit_tensor(3);
    let qba = QuasiBialgebra::new(alg.clone(), delta, eps, phi)?;
    let s = LinearMap::new((0..n).map(|i| alg.basis((n - i) % n)).collect(), true)?;
    QuasiHopf::new(qba, QuasiAntipode::new(s, alg.one(), alg.one())?)
}

pub fn group_zn(n: usize) -> Result<QuasiHopf> {
    group_hopf(&Field::rational(), n)
}

pub fn trivial() -> Result<QuasiTriangular> {
    let h = group_hopf(&Field::rational(), 1)?;
    let r = h.qba().one(2);
    QuasiTriangular::new(h, r)
}

/// `1/2 (1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g)` in the group basis.
pub fn z2_r_matrix(f: &Field) -> Tensor {
    let h = f.ratio(1, 2);
    t2(f, 2, &[(0, 0, h.clone()), (0, 1, h.clone()), (1, 0, h.clone()), (1, 1, -&h)])
}

pub fn z2_triangular() -> Result<QuasiTriangular> {
    let f = Field::rational();
    QuasiTriangular::new(group_hopf(&f, 2)?, z2_r_matrix(&f))
}

/// The idempotent `p = (1 - g)/2` of k[Z/2].
pub fn z2_p(f: &Field) -> Tensor {
    Tensor::from_coeffs(f, &[f.ratio(1, 2), f.ratio(-1, 2)]).expect("dimension 2")
}

/// The idempotent `q = (1 + g)/2` of k[Z/2].
pub fn z2_q(f: &Field) -> Tensor {
    Tensor::from_coeffs(f, &[f.ratio(1, 2), f.ratio(1, 2)]).expect("dimension 2")
}

pub fn semion() -> Result<QuasiTriangular> {
    let f = Field::cyclotomic(4)?;
    let alg = Arc::new(cyclic_algebra(&f, 2)?);
    let delta = LinearMap::new(vec![t2(&f, 2, &[(0, 0, f.one())]), t2(&f, 2, &[(1, 1, f.one())])], false)?;
    let p = z2_p(&f);
    let ppp = p.outer(&p).outer(&p);
    let phi = alg.unit_tensor(3).sub(&ppp.scale(&f.int(2)));
    let qba = QuasiBialgebra::new(alg.clone(), delta, counit(&f, &[1, 1]), phi)?;
    let g = alg.basis(1);
    let h = QuasiHopf::new(qba, QuasiAntipode::new(LinearMap::identity(&f, 2), g, alg.one())?)?;
    let zeta_minus_one = &Scalar::zeta(&f) - &f.one();
    let r = alg.unit_tensor(2).add(&p.outer(&p).scale(&zeta_minus_one));
    QuasiTriangular::new(h, r)
}

/// Basis `1, g, x, gx` with `g^2 = 1`, `x^2 = 0`, `xg = -gx`.
pub fn sweedler_algebra(f: &Field) -> Result<Algebra> {
    // index of g^a x^b is a + 2b; e_{a,b} e_{c,d} = (-1)^{bc} g^{a+c} x^{b+d}
    let mut prods = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for dd in 0..2 {
                    if b + dd > 1 {
                        continue;
                    }
                    let mut v = vec![f.zero(); 4];
                    v[(a + c) % 2 + 2 * (b + dd)] = f.int(if b * c == 1 { -1 } else { 1 });
                    prods.push((a + 2 * b, c + 2 * dd, v));
                }
            }
        }
    }
    Algebra::new(f, 4, prods, &ints(f, &[1, 0, 0, 0]))
}

/// The standard R-matrix family
/// `1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g) + t/2 (x(x)x - x(x)gx + gx(x)gx + gx(x)x)`.
pub fn sweedler_r_matrix(f: &Field, t: &Scalar) -> Tensor {
    let h = f.ratio(1, 2);
    let th = t * &h;
    t2(
        f,
        4,
        &[
            (0, 0, h.clone()),
            (0, 1, h.clone()),
            (1, 0, h.clone()),
            (1, 1, -&h),
            (2, 2, th.clone()),
            (2, 3, -&th),
            (3, 3, th.clone()),
            (3, 2, th),
        ],
    )
}

pub fn sweedler_hopf(f: &Field) -> Result<QuasiHopf> {
    let alg = Arc::new(sweedler_algebra(f)?);
    let o = f.one();
    // Delta(x) = x(x)1 + g(x)x, Delta(gx) = gx(x)g + 1(x)gx
    let delta = LinearMap::new(
        vec![
            t2(f, 4, &[(0, 0, o.clone())]),
            t2(f, 4, &[(1, 1, o.clone())]),
            t2(f, 4, &[(2, 0, o.clone()), (1, 2, o.clone())]),
            t2(f, 4, &[(3, 1, o.clone()), (0, 3, o.clone())]),
        ],
        false,
    )?;
    let qba = QuasiBialgebra::new(alg.clone(), delta, counit(f, &[1, 1, 0, 0]), alg.unit_tensor(3))?;
    // S(g) = g, S(x) = -gx, S(gx) = x
    let s = LinearMap::new(vec![alg.basis(0), alg.basis(1), alg.basis(3).neg(), alg.basis(2)], true)?;
    QuasiHopf::new(qba, QuasiAntipode::new(s, alg.one(), alg.one())?)
}

pub fn sweedler_h4() -> Result<QuasiTriangular> {
    let f = Field::rational();
    let h = sweedler_hopf(&f)?;
    QuasiTriangular::new(h, sweedler_r_matrix(&f, &f.one()))
}
