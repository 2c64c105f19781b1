//! Exact scalars: rationals and elements of cyclotomic fields `Q(zeta_n)`.
//!
//! A cyclotomic element is stored as a polynomial in `zeta_n` of degree below
//! `phi(n)` with rational coefficients, always reduced modulo the n-th
//! cyclotomic polynomial. Rationals use the same representation with a single
//! coefficient, so every arithmetic path is shared.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Builds `p/q` as a rational; panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Cyclotomic,
}

struct FieldData {
    kind: FieldKind,
    order: u32,
    /// Monic modulus, lowest degree first.
    modulus: Vec<BigInt>,
}

/// Descriptor of the coefficient field; cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl Field {
    pub fn rational() -> Self {
        Field(Arc::new(FieldData { kind: FieldKind::Rational, order: 1, modulus: vec![BigInt::from(-1), BigInt::one()] }))
    }

    pub fn cyclotomic(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidField(order));
        }
        Ok(Field(Arc::new(FieldData { kind: FieldKind::Cyclotomic, order, modulus: cyclotomic_polynomial(order) })))
    }

    pub fn kind(&self) -> FieldKind {
        self.0.kind
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// Degree of the field over Q, i.e. Euler's totient of the order.
    pub fn degree(&self) -> usize {
        self.0.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(self)
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(self)
    }

    pub fn int(&self, n: i64) -> Scalar {
        Scalar::from_rational(Rational::from_integer(BigInt::from(n)), self)
    }

    pub fn ratio(&self, p: i64, q: i64) -> Scalar {
        Scalar::from_rational(rat(p, q), self)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.kind == other.0.kind && self.0.order == other.0.order)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Cyclotomic => write!(f, "Q(zeta_{})", self.order()),
        }
    }
}

/// n-th cyclotomic polynomial by dividing `x^n - 1` by the lower-order factors.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let n = n as usize;
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::from(-1);
    p[n] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = divide_monic(&p, &cyclotomic_polynomial(d as u32));
        }
    }
    p
}

/// Exact quotient of integer polynomials where the divisor is monic.
fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Exact field element. Equality is coefficient-wise on the reduced form.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    field: Field,
    coeffs: Vec<Rational>,
}

impl Scalar {
    pub fn zero(field: &Field) -> Self {
        Scalar { field: field.clone(), coeffs: vec![Rational::zero(); field.degree()] }
    }

    pub fn one(field: &Field) -> Self {
        Self::from_rational(Rational::one(), field)
    }

    /// Constant-polynomial embedding of a rational.
    pub fn from_rational(q: Rational, field: &Field) -> Self {
        let mut s = Self::zero(field);
        s.coeffs[0] = q;
        s
    }

    /// The primitive root `zeta_n` of a cyclotomic field (1 in Q).
    pub fn zeta(field: &Field) -> Self {
        Self::from_poly(vec![Rational::zero(), Rational::one()], field)
    }

    /// Reduced-basis coefficients; the length must equal the field degree.
    pub fn from_coeffs(coeffs: Vec<Rational>, field: &Field) -> Result<Self> {
        if coeffs.len() != field.degree() {
            return Err(Error::CoefficientLength { expected: field.degree(), found: coeffs.len() });
        }
        Ok(Scalar { field: field.clone(), coeffs })
    }

    /// Arbitrary polynomial in `zeta`, reduced modulo the cyclotomic polynomial.
    pub fn from_poly(mut poly: Vec<Rational>, field: &Field) -> Self {
        reduce(&mut poly, field.modulus());
        poly.resize(field.degree(), Rational::zero());
        Scalar { field: field.clone(), coeffs: poly }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check_field(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Scalar { field: self.field.clone(), coeffs })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Multiplicative inverse; in a cyclotomic field this is the extended
    /// Euclidean algorithm against the modulus.
    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.field.degree() == 1 {
            return Ok(Scalar { field: self.field.clone(), coeffs: vec![self.coeffs[0].recip()] });
        }
        let modulus: Vec<Rational> = self.field.modulus().iter().map(|c| Rational::from_integer(c.clone())).collect();
        let inv = poly_inverse_mod(&self.coeffs, &modulus).ok_or(Error::DivisionByZero)?;
        Ok(Scalar::from_poly(inv, &self.field))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.inverse()?)
    }

    fn check_field(&self, other: &Scalar) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn add_unchecked(&self, other: &Scalar) -> Scalar {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Scalar { field: self.field.clone(), coeffs }
    }

    fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let n = self.coeffs.len();
        if n == 1 {
            return Scalar { field: self.field.clone(), coeffs: vec![&self.coeffs[0] * &other.coeffs[0]] };
        }
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        reduce(&mut prod, self.field.modulus());
        prod.truncate(n);
        Scalar { field: self.field.clone(), coeffs: prod }
    }

    fn scale_rational(&self, q: &Rational) -> Scalar {
        Scalar { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Multiplies by a rational without leaving the field.
    pub fn mul_rational(&self, q: &Rational) -> Scalar {
        self.scale_rational(q)
    }

    /// A square root of the form `zeta^j r` with `r` rational, if one exists.
    pub fn sqrt_exact(&self) -> Option<Scalar> {
        let order = self.field.order().max(1);
        let zeta = Scalar::zeta(&self.field);
        let zeta_inv = zeta.inverse().ok()?;
        let step = &zeta_inv * &zeta_inv;
        let (mut root, mut y) = (Scalar::one(&self.field), self.clone());
        for _ in 0..order {
            if let Some(r) = y.as_rational() {
                if let Some(q) = rational_sqrt(r) {
                    return Some(root.mul_rational(&q));
                }
            }
            y = &y * &step;
            root = &root * &zeta;
        }
        None
    }
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

/// In-place reduction modulo a monic integer polynomial.
fn reduce(poly: &mut Vec<Rational>, modulus: &[BigInt]) {
    let deg = modulus.len() - 1;
    while poly.len() > deg {
        let top = poly.len() - 1;
        let c = poly.pop().unwrap_or_default();
        if c.is_zero() {
            continue;
        }
        let base = top - deg;
        for (i, m) in modulus[..deg].iter().enumerate() {
            if !m.is_zero() {
                poly[base + i] -= &c * Rational::from_integer(m.clone());
            }
        }
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// `(quotient, remainder)` of polynomial division over Q.
fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let mut den = den.to_vec();
    trim(&mut den);
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / &lead;
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    trim(&mut rem);
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `m` when `gcd(a, m) = 1`.
fn poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut t0, mut t1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = core::mem::replace(&mut r1, r);
        t0 = core::mem::replace(&mut t1, t2);
    }
    // r0 is the gcd; it must be a nonzero constant.
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    Some(t0.into_iter().map(|x| x * &c).collect())
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            /// Panics if the operands live in different fields; use the
            /// `try_` variant for a fallible version.
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar field mismatch")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        assert!(self.field == rhs.field, "scalar field mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        assert!(self.field == rhs.field, "scalar field mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rational(q: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Rationals print as `p/q` (or `p`); cyclotomic elements as the bracketed
/// list of reduced-basis coefficients.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.kind() == FieldKind::Rational {
            return fmt_rational(&self.coeffs[0], f);
        }
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            fmt_rational(c, f)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Text form of a single rational, as used by the file format.
pub fn rational_to_string(q: &Rational) -> alloc::string::String {
    use alloc::string::ToString;
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p/q` or `p` (optional sign on the numerator only).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().ok()?;
    let q: BigInt = q.parse().ok()?;
    if q.is_zero() || q.is_negative() {
        return None;
    }
    Some(Rational::new(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q4() -> Field {
        Field::cyclotomic(4).unwrap()
    }

    #[test]
    fn rational_addition() {
        let f = Field::rational();
        assert_eq!(f.ratio(1, 2) + f.ratio(1, 3), f.ratio(5, 6));
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let f = q4();
        let z = Scalar::zeta(&f);
        assert_eq!(&z * &z, f.int(-1));
    }

    #[test]
    fn zeta3_plus_square() {
        let f = Field::cyclotomic(3).unwrap();
        let z = Scalar::zeta(&f);
        assert_eq!(&z + &(&z * &z), f.int(-1));
    }

    #[test]
    fn inverses() {
        let f = Field::rational();
        assert_eq!(f.ratio(3, 4).inverse().unwrap(), f.ratio(4, 3));
        let g = q4();
        let z = Scalar::zeta(&g);
        assert_eq!(z.inverse().unwrap(), -&z);
        // (1 + i)^{-1} = (1 - i)/2
        let w = &g.one() + &z;
        let expected = Scalar::from_coeffs(vec![rat(1, 2), rat(-1, 2)], &g).unwrap();
        assert_eq!(w.inverse().unwrap(), expected);
        assert!(g.zero().inverse().is_err());
    }

    #[test]
    fn embeddings() {
        let g = q4();
        assert_eq!(g.one().coeffs(), &[Rational::one(), Rational::zero()]);
        let f = Field::rational();
        assert_eq!(f.int(0).coeffs(), &[Rational::zero()]);
        let g3 = Field::cyclotomic(3).unwrap();
        let s = Scalar::from_rational(rat(-2, 3), &g3);
        assert_eq!(s.coeffs(), &[rat(-2, 3), Rational::zero()]);
    }

    #[test]
    fn mixing_fields_is_an_error() {
        let a = Field::rational().one();
        let b = q4().one();
        assert_eq!(a.try_add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.try_mul(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |n| cyclotomic_polynomial(n).iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(as_i64(15), vec![1, -1, 0, 1, -1, 1, 0, -1, 1]);
        for n in 1..=16u32 {
            let f = Field::cyclotomic(n).unwrap();
            let z = Scalar::zeta(&f);
            let mut p = f.one();
            for _ in 0..n {
                p = &p * &z;
            }
            assert!(p.is_one(), "zeta_{n}^{n} != 1");
        }
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("-3/6"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("7"), Some(rat(7, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("1/-2"), None);
        assert_eq!(rational_to_string(&rat(4, -6)), "-2/3");
        assert_eq!(alloc::format!("{}", q4().ratio(1, 2)), "[1/2, 0]");
    }
}
