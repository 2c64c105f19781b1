//! Finite-dimensional algebras given by structure constants, and sparse
//! tensors over them.
//!
//! An element of `A^{(x)n}` is a map from multi-indices `(i_1, .., i_n)` to
//! scalars. Entries are keyed by the big-endian encoding
//! `sum_k i_k d^(n-1-k)`, so key order is lexicographic order of the indices.
//! Zero coefficients are never stored. Arity 0 represents a bare scalar.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{linear_solve, Matrix};
use crate::scalar::{Field, Scalar};

fn pow(d: usize, n: usize) -> usize {
    d.checked_pow(n as u32).expect("tensor index space overflows usize")
}

#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    field: Field,
    dim: usize,
    arity: usize,
    entries: BTreeMap<usize, Scalar>,
}

impl core::fmt::Debug for Tensor {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Tensor[d={}, n={}]{{", self.dim, self.arity)?;
        let mut first = true;
        for (idx, c) in self.iter() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{idx:?}: {c}")?;
        }
        write!(f, "}}")
    }
}

impl Tensor {
    pub fn zero(field: &Field, dim: usize, arity: usize) -> Self {
        Tensor { field: field.clone(), dim, arity, entries: BTreeMap::new() }
    }

    /// Arity-0 tensor holding `s`.
    pub fn scalar(s: Scalar, dim: usize) -> Self {
        let mut t = Self::zero(s.field(), dim, 0);
        if !s.is_zero() {
            t.entries.insert(0, s);
        }
        t
    }

    /// Sums the given entries; repeated indices accumulate.
    pub fn from_entries<I>(field: &Field, dim: usize, arity: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        let mut t = Self::zero(field, dim, arity);
        for (idx, c) in entries {
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            let key = t.encode(&idx)?;
            t.add_at(key, &c);
        }
        Ok(t)
    }

    /// Arity-1 element from its full coefficient vector.
    pub fn from_coeffs(field: &Field, coeffs: &[Scalar]) -> Result<Self> {
        let mut t = Self::zero(field, coeffs.len(), 1);
        for (i, c) in coeffs.iter().enumerate() {
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            if !c.is_zero() {
                t.entries.insert(i, c.clone());
            }
        }
        Ok(t)
    }

    /// Tensor with the single entry `c` at `idx`.
    pub fn basis(field: &Field, dim: usize, idx: &[usize], c: Scalar) -> Result<Self> {
        Self::from_entries(field, dim, idx.len(), [(idx.to_vec(), c)])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn encode(&self, idx: &[usize]) -> Result<usize> {
        if idx.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: idx.len() });
        }
        let mut key = 0;
        for &i in idx {
            if i >= self.dim {
                return Err(Error::IndexOutOfRange { index: i, dim: self.dim });
            }
            key = key * self.dim + i;
        }
        Ok(key)
    }

    pub fn decode(&self, key: usize) -> Vec<usize> {
        let mut idx = vec![0; self.arity];
        decode_into(key, self.dim, &mut idx);
        idx
    }

    pub fn get(&self, idx: &[usize]) -> Scalar {
        match self.encode(idx) {
            Ok(k) => self.entries.get(&k).cloned().unwrap_or_else(|| self.field.zero()),
            Err(_) => self.field.zero(),
        }
    }

    /// Value of an arity-0 tensor.
    pub fn scalar_value(&self) -> Scalar {
        debug_assert_eq!(self.arity, 0);
        self.entries.get(&0).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Nonzero entries in lexicographic index order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &Scalar)> + '_ {
        self.entries.iter().map(move |(&k, c)| (self.decode(k), c))
    }

    pub fn raw_entries(&self) -> &BTreeMap<usize, Scalar> {
        &self.entries
    }

    /// Full coefficient vector of length `d^n`.
    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); pow(self.dim, self.arity)];
        for (&k, c) in &self.entries {
            out[k] = c.clone();
        }
        out
    }

    pub fn from_dense(field: &Field, dim: usize, arity: usize, dense: &[Scalar]) -> Self {
        let mut t = Self::zero(field, dim, arity);
        for (k, c) in dense.iter().enumerate() {
            if !c.is_zero() {
                t.entries.insert(k, c.clone());
            }
        }
        t
    }

    fn add_at(&mut self, key: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.entries.remove(&key);
                }
            }
            None => {
                self.entries.insert(key, c.clone());
            }
        }
    }

    fn check_shape(&self, other: &Tensor) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Tensor) -> Result<Tensor> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (&k, c) in &other.entries {
            out.add_at(k, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Tensor) -> Result<Tensor> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (&k, c) in &other.entries {
            out.add_at(k, &-c);
        }
        Ok(out)
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        self.try_add(other).expect("tensor shape mismatch")
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.try_sub(other).expect("tensor shape mismatch")
    }

    pub fn scale(&self, s: &Scalar) -> Tensor {
        let mut out = Self::zero(&self.field, self.dim, self.arity);
        if s.is_zero() {
            return out;
        }
        for (&k, c) in &self.entries {
            let v = c * s;
            if !v.is_zero() {
                out.entries.insert(k, v);
            }
        }
        out
    }

    pub fn neg(&self) -> Tensor {
        let mut out = self.clone();
        for v in out.entries.values_mut() {
            *v = -&*v;
        }
        out
    }

    /// Outer product `self (x) other`.
    pub fn outer(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dim, other.dim, "tensor dimension mismatch");
        let shift = pow(self.dim, other.arity);
        let mut out = Self::zero(&self.field, self.dim, self.arity + other.arity);
        for (&ka, a) in &self.entries {
            for (&kb, b) in &other.entries {
                out.add_at(ka * shift + kb, &(a * b));
            }
        }
        out
    }

    /// Rearranges legs so that new position `j` holds old leg `perm[j]`
    /// (0-based), i.e. `new[i_perm(0), .., i_perm(n-1)] = old[i_0, .., i_(n-1)]`.
    /// For `perm = [1, 2, 0]` on
    /// `X (x) Y (x) Z` the result is `Y (x) Z (x) X`.
    pub fn permute_legs(&self, perm: &[usize]) -> Result<Tensor> {
        check_permutation(perm, self.arity)?;
        let mut out = Self::zero(&self.field, self.dim, self.arity);
        let mut old = vec![0; self.arity];
        for (&k, c) in &self.entries {
            decode_into(k, self.dim, &mut old);
            let mut key = 0;
            for &p in perm {
                key = key * self.dim + old[p];
            }
            out.entries.insert(key, c.clone());
        }
        Ok(out)
    }

    /// Leg relabeling in 1-based subscript notation: `relabel(&[2, 3, 1])`
    /// turns `X (x) Y (x) Z` into `Y (x) Z (x) X`.
    pub fn relabel(&self, sub: &[usize]) -> Tensor {
        let perm: Vec<usize> = sub.iter().map(|&k| k.wrapping_sub(1)).collect();
        self.permute_legs(&perm).expect("subscripts must be a permutation of 1..=n")
    }

    /// Swap of the two legs of an arity-2 tensor.
    pub fn transpose(&self) -> Tensor {
        assert_eq!(self.arity, 2, "transpose needs arity 2");
        self.permute_legs(&[1, 0]).expect("valid permutation")
    }

    /// Applies `map` to leg `leg` (0-based); a map with output arity `m`
    /// replaces that leg by `m` legs.
    pub fn apply_on_leg(&self, map: &LinearMap, leg: usize) -> Result<Tensor> {
        if leg >= self.arity {
            return Err(Error::LegOutOfRange { leg, arity: self.arity });
        }
        if map.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: map.dim });
        }
        let d = self.dim;
        let m = map.out_arity;
        let after = pow(d, self.arity - leg - 1);
        let col_span = pow(d, m);
        let mut out = Self::zero(&self.field, d, self.arity - 1 + m);
        for (&k, c) in &self.entries {
            let suffix = k % after;
            let i = (k / after) % d;
            let prefix = k / (after * d);
            for (&ck, v) in &map.columns[i].entries {
                out.add_at((prefix * col_span + ck) * after + suffix, &(c * v));
            }
        }
        Ok(out)
    }

    /// Applies the same map to every leg.
    pub fn apply_on_all_legs(&self, map: &LinearMap) -> Result<Tensor> {
        if map.out_arity != 1 {
            return Err(Error::ArityMismatch { expected: 1, found: map.out_arity });
        }
        let mut t = self.clone();
        for leg in 0..self.arity {
            t = t.apply_on_leg(map, leg)?;
        }
        Ok(t)
    }

    /// First multi-index at which the two tensors differ, with both values.
    pub fn first_difference(&self, other: &Tensor) -> Option<(Vec<usize>, Scalar, Scalar)> {
        if self.check_shape(other).is_err() {
            return Some((Vec::new(), self.field.zero(), other.field.zero()));
        }
        let mut keys: Vec<usize> = self.entries.keys().chain(other.entries.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        for k in keys {
            let a = self.entries.get(&k);
            let b = other.entries.get(&k);
            if a != b {
                let z = self.field.zero();
                return Some((self.decode(k), a.cloned().unwrap_or_else(|| z.clone()), b.cloned().unwrap_or(z)));
            }
        }
        None
    }
}

fn decode_into(mut key: usize, dim: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = key % dim;
        key /= dim;
    }
}

pub fn check_permutation(perm: &[usize], arity: usize) -> Result<()> {
    if perm.len() != arity {
        return Err(Error::InvalidPermutation);
    }
    let mut seen = vec![false; arity];
    for &p in perm {
        if p >= arity || seen[p] {
            return Err(Error::InvalidPermutation);
        }
        seen[p] = true;
    }
    Ok(())
}

/// Linear map `A -> A^{(x)m}` given by the images of the basis, optionally
/// flagged as an anti-homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    dim: usize,
    out_arity: usize,
    columns: Vec<Tensor>,
    anti: bool,
}

impl LinearMap {
    pub fn new(columns: Vec<Tensor>, anti: bool) -> Result<Self> {
        let dim = columns.len();
        let out_arity = columns.first().map_or(1, Tensor::arity);
        let field = columns.first().map(|c| c.field().clone());
        for c in &columns {
            if c.dim != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: c.dim });
            }
            if c.arity != out_arity {
                return Err(Error::ArityMismatch { expected: out_arity, found: c.arity });
            }
            if Some(c.field()) != field.as_ref() {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(LinearMap { dim, out_arity, columns, anti })
    }

    pub fn identity(field: &Field, dim: usize) -> Self {
        let columns = (0..dim).map(|i| Tensor::basis(field, dim, &[i], field.one()).expect("in range")).collect();
        LinearMap { dim, out_arity: 1, columns, anti: false }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn out_arity(&self) -> usize {
        self.out_arity
    }

    pub fn is_anti(&self) -> bool {
        self.anti
    }

    pub fn column(&self, i: usize) -> &Tensor {
        &self.columns[i]
    }

    pub fn columns(&self) -> &[Tensor] {
        &self.columns
    }

    /// Image of an arity-1 element.
    pub fn apply(&self, a: &Tensor) -> Tensor {
        assert_eq!(a.arity, 1, "linear maps act on arity-1 elements");
        a.apply_on_leg(self, 0).expect("shape checked")
    }

    /// `self` after `inner`; `inner` must map into arity 1.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if inner.out_arity != 1 {
            return Err(Error::ArityMismatch { expected: 1, found: inner.out_arity });
        }
        if inner.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: inner.dim });
        }
        let columns = inner.columns.iter().map(|c| self.apply(c)).collect();
        Ok(LinearMap { dim: self.dim, out_arity: self.out_arity, columns, anti: self.anti != inner.anti })
    }

    /// Square matrix of an arity-1 map (column `i` is the image of `e_i`).
    pub fn matrix(&self) -> Matrix {
        let field = self.columns[0].field().clone();
        let cols: Vec<Vec<Scalar>> = self.columns.iter().map(Tensor::to_dense).collect();
        Matrix::from_columns(&field, pow(self.dim, self.out_arity), &cols).expect("consistent shape")
    }

    /// Inverse of a bijective map `A -> A`.
    pub fn inverse(&self) -> Result<LinearMap> {
        if self.out_arity != 1 {
            return Err(Error::ArityMismatch { expected: 1, found: self.out_arity });
        }
        let field = self.columns[0].field().clone();
        let inv = self.matrix().inverse()?;
        let columns = (0..self.dim).map(|j| Tensor::from_dense(&field, self.dim, 1, &inv.column(j))).collect();
        Ok(LinearMap { dim: self.dim, out_arity: 1, columns, anti: self.anti })
    }
}

/// Associative unital algebra of dimension `d` with product
/// `e_i e_j = sum_k c_ij^k e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    /// Structure constants of `e_i e_j`, indexed by `i * d + j`.
    table: Vec<Vec<(usize, Scalar)>>,
    unit: Tensor,
}

impl Algebra {
    /// Validates associativity on all basis triples and the two unit laws.
    /// `products` lists `(i, j, coefficients of e_i e_j)`; absent pairs are zero.
    pub fn new<I>(field: &Field, dim: usize, products: I, unit: &[Scalar]) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<Scalar>)>,
    {
        let alg = Self::new_unchecked(field, dim, products, unit)?;
        alg.check_axioms()?;
        Ok(alg)
    }

    /// Builds the algebra without checking associativity or unitality.
    pub fn new_unchecked<I>(field: &Field, dim: usize, products: I, unit: &[Scalar]) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<Scalar>)>,
    {
        if dim == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        let mut table = vec![Vec::new(); dim * dim];
        for (i, j, coeffs) in products {
            if i >= dim {
                return Err(Error::IndexOutOfRange { index: i, dim });
            }
            if j >= dim {
                return Err(Error::IndexOutOfRange { index: j, dim });
            }
            if coeffs.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: coeffs.len() });
            }
            let mut row = Vec::new();
            for (k, c) in coeffs.into_iter().enumerate() {
                if c.field() != field {
                    return Err(Error::FieldMismatch);
                }
                if !c.is_zero() {
                    row.push((k, c));
                }
            }
            table[i * dim + j] = row;
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: unit.len() });
        }
        let unit = Tensor::from_coeffs(field, unit)?;
        Ok(Algebra { field: field.clone(), dim, table, unit })
    }

    fn check_axioms(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            let ei = self.basis(i);
            if self.mul(&self.unit, &ei) != ei || self.mul(&ei, &self.unit) != ei {
                return Err(Error::NotUnital { i });
            }
        }
        for i in 0..d {
            for j in 0..d {
                let eij = self.mul(&self.basis(i), &self.basis(j));
                for k in 0..d {
                    let ek = self.basis(k);
                    let left = self.mul(&eij, &ek);
                    let right = self.mul(&self.basis(i), &self.mul(&self.basis(j), &ek));
                    if left != right {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Structure constants of `e_i e_j` as sparse `(k, c_ij^k)` pairs.
    pub fn product_of(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    pub fn one(&self) -> Tensor {
        self.unit.clone()
    }

    pub fn zero(&self, arity: usize) -> Tensor {
        Tensor::zero(&self.field, self.dim, arity)
    }

    pub fn basis(&self, i: usize) -> Tensor {
        Tensor::basis(&self.field, self.dim, &[i], self.field.one()).expect("basis index in range")
    }

    pub fn element(&self, coeffs: &[Scalar]) -> Result<Tensor> {
        if coeffs.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: coeffs.len() });
        }
        Tensor::from_coeffs(&self.field, coeffs)
    }

    pub fn scalar(&self, s: &Scalar) -> Tensor {
        self.unit.scale(s)
    }

    /// The unit `1 (x) .. (x) 1` of `A^{(x)n}`.
    pub fn unit_tensor(&self, arity: usize) -> Tensor {
        let mut t = Tensor::scalar(self.field.one(), self.dim);
        for _ in 0..arity {
            t = t.outer(&self.unit);
        }
        t
    }

    fn check(&self, t: &Tensor) -> Result<()> {
        if t.field != self.field {
            return Err(Error::FieldMismatch);
        }
        if t.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: t.dim });
        }
        Ok(())
    }

    /// Legwise product in `A^{(x)n}`.
    pub fn try_mul(&self, s: &Tensor, t: &Tensor) -> Result<Tensor> {
        self.check(s)?;
        self.check(t)?;
        if s.arity != t.arity {
            return Err(Error::ArityMismatch { expected: s.arity, found: t.arity });
        }
        let n = s.arity;
        let d = self.dim;
        let mut out = self.zero(n);
        let mut si = vec![0; n];
        let mut ti = vec![0; n];
        let mut partial: Vec<(usize, Scalar)> = Vec::new();
        let mut next: Vec<(usize, Scalar)> = Vec::new();
        for (&ks, a) in &s.entries {
            decode_into(ks, d, &mut si);
            for (&kt, b) in &t.entries {
                decode_into(kt, d, &mut ti);
                partial.clear();
                partial.push((0, a * b));
                for leg in 0..n {
                    let prods = &self.table[si[leg] * d + ti[leg]];
                    next.clear();
                    for (key, c) in &partial {
                        for (k, m) in prods {
                            next.push((key * d + k, c * m));
                        }
                    }
                    core::mem::swap(&mut partial, &mut next);
                    if partial.is_empty() {
                        break;
                    }
                }
                for (key, c) in partial.drain(..) {
                    out.add_at(key, &c);
                }
            }
        }
        Ok(out)
    }

    /// Panicking form of [`Algebra::try_mul`].
    pub fn mul(&self, s: &Tensor, t: &Tensor) -> Tensor {
        self.try_mul(s, t).expect("tensor shape mismatch")
    }

    /// Left-to-right product of a nonempty list.
    pub fn mul_all(&self, factors: &[&Tensor]) -> Tensor {
        let mut acc = factors[0].clone();
        for f in &factors[1..] {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Places the legs of `t` at `positions` (0-based) of an arity-`total`
    /// tensor and fills the other legs with the unit.
    pub fn embed_legs(&self, t: &Tensor, positions: &[usize], total: usize) -> Result<Tensor> {
        self.check(t)?;
        if positions.len() != t.arity {
            return Err(Error::ArityMismatch { expected: t.arity, found: positions.len() });
        }
        let mut slot = vec![None; total];
        for (leg, &p) in positions.iter().enumerate() {
            if p >= total {
                return Err(Error::LegOutOfRange { leg: p, arity: total });
            }
            if slot[p].is_some() {
                return Err(Error::DuplicateLeg(p));
            }
            slot[p] = Some(leg);
        }
        // t (x) 1^{(x)(total - n)}, then move the legs into place.
        let padded = t.outer(&self.unit_tensor(total - t.arity));
        let mut perm = Vec::with_capacity(total);
        let mut filler = t.arity;
        for s in slot {
            match s {
                Some(leg) => perm.push(leg),
                None => {
                    perm.push(filler);
                    filler += 1;
                }
            }
        }
        padded.permute_legs(&perm)
    }

    /// Matrix of `x -> t x` on `A^{(x)n}` with respect to the product basis.
    pub fn left_mult_matrix(&self, t: &Tensor) -> Matrix {
        let n = t.arity;
        let size = pow(self.dim, n);
        let mut m = Matrix::zeros(&self.field, size, size);
        for col in 0..size {
            let mut e = self.zero(n);
            e.entries.insert(col, self.field.one());
            for (&row, v) in &self.mul(t, &e).entries {
                m.set(row, col, v.clone());
            }
        }
        m
    }

    /// Two-sided inverse, found by solving `t x = 1` and verified on both
    /// sides.
    pub fn invert(&self, t: &Tensor) -> Result<Tensor> {
        self.check(t)?;
        let n = t.arity;
        let one = self.unit_tensor(n);
        let x = linear_solve(&self.left_mult_matrix(t), &one.to_dense())?;
        let inv = Tensor::from_dense(&self.field, self.dim, n, &x);
        if self.mul(t, &inv) != one || self.mul(&inv, t) != one {
            return Err(Error::Singular);
        }
        Ok(inv)
    }

    /// Integer power; negative exponents go through [`Algebra::invert`].
    pub fn pow(&self, t: &Tensor, e: i64) -> Result<Tensor> {
        let base = if e < 0 { self.invert(t)? } else { t.clone() };
        let mut acc = self.unit_tensor(t.arity);
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        Ok(acc)
    }

    pub fn commutes(&self, a: &Tensor, b: &Tensor) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Whether an arity-1 element commutes with every basis element.
    pub fn is_central(&self, a: &Tensor) -> bool {
        (0..self.dim).all(|i| self.commutes(a, &self.basis(i)))
    }

    /// Basis of the center, as arity-1 elements.
    pub fn center_basis(&self) -> Vec<Tensor> {
        // rows: coefficients of e_i a - a e_i for every i, as a linear map in a
        let d = self.dim;
        let mut rows = Vec::new();
        for i in 0..d {
            let ei = self.basis(i);
            let cols: Vec<Vec<Scalar>> = (0..d)
                .map(|j| {
                    let ej = self.basis(j);
                    self.mul(&ei, &ej).sub(&self.mul(&ej, &ei)).to_dense()
                })
                .collect();
            for k in 0..d {
                rows.push(cols.iter().map(|c| c[k].clone()).collect::<Vec<_>>());
            }
        }
        let m = Matrix::from_rows(&self.field, &rows).expect("rectangular");
        m.nullspace().iter().map(|v| Tensor::from_dense(&self.field, d, 1, v)).collect()
    }

    /// Checks that `map` is (anti-)multiplicative on basis pairs, returning
    /// the first offending pair.
    pub fn multiplicativity_defect(&self, map: &LinearMap) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = map.apply(&self.mul(&self.basis(i), &self.basis(j)));
                let (x, y) = (map.column(i), map.column(j));
                let rhs = if map.is_anti() { self.mul(y, x) } else { self.mul(x, y) };
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Group algebra of Z/2 in the group basis {1, g}.
    fn z2() -> Algebra {
        let f = Field::rational();
        let (o, z) = (f.one(), f.zero());
        Algebra::new(
            &f,
            2,
            [
                (0, 0, vec![o.clone(), z.clone()]),
                (0, 1, vec![z.clone(), o.clone()]),
                (1, 0, vec![z.clone(), o.clone()]),
                (1, 1, vec![o.clone(), z.clone()]),
            ],
            &[o.clone(), z],
        )
        .unwrap()
    }

    /// 2x2 matrices in the basis E11, E12, E21, E22.
    fn mat2() -> Algebra {
        let f = Field::rational();
        let mut prods = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    // E_ab E_bc = E_ac
                    let mut v = vec![f.zero(); 4];
                    v[a * 2 + c] = f.one();
                    prods.push((a * 2 + b, b * 2 + c, v));
                }
            }
        }
        Algebra::new(&f, 4, prods, &[f.one(), f.zero(), f.zero(), f.one()]).unwrap()
    }

    #[test]
    fn rejects_nonassociative() {
        let f = Field::rational();
        let (o, z) = (f.one(), f.zero());
        // only e_0 e_0 is nonzero, so e_0 cannot be a unit
        let bad = Algebra::new(&f, 2, [(0, 0, vec![o.clone(), z.clone()])], &[o, z]);
        assert_eq!(bad, Err(Error::NotUnital { i: 1 }));
    }

    #[test]
    fn matrix_units_noncommutative() {
        let m = mat2();
        let (e12, e21) = (m.basis(1), m.basis(2));
        assert!(!m.commutes(&e12, &e21));
        assert!(m.is_central(&m.one()));
        assert!(!m.is_central(&e12));
    }

    #[test]
    fn legwise_product() {
        let a = z2();
        let f = a.field().clone();
        let g_g = Tensor::basis(&f, 2, &[1, 1], f.one()).unwrap();
        assert_eq!(a.mul(&g_g, &g_g), a.unit_tensor(2));
        let one_g = a.embed_legs(&a.basis(1), &[1], 2).unwrap();
        assert_eq!(one_g, Tensor::basis(&f, 2, &[0, 1], f.one()).unwrap());
    }

    #[test]
    fn permutation_convention() {
        let a = mat2();
        let f = a.field().clone();
        let t = Tensor::basis(&f, 4, &[0, 1, 2], f.one()).unwrap();
        // X(x)Y(x)Z with X=e0, Y=e1, Z=e2 -> Y(x)Z(x)X
        let p = t.permute_legs(&[1, 2, 0]).unwrap();
        assert_eq!(p, Tensor::basis(&f, 4, &[1, 2, 0], f.one()).unwrap());
        assert!(t.permute_legs(&[0, 0, 1]).is_err());
    }

    #[test]
    fn invert_and_singular() {
        let a = mat2();
        let f = a.field().clone();
        let x = a.element(&[f.int(1), f.int(2), f.int(0), f.int(1)]).unwrap();
        let xi = a.invert(&x).unwrap();
        assert_eq!(xi, a.element(&[f.int(1), f.int(-2), f.int(0), f.int(1)]).unwrap());
        assert_eq!(a.invert(&a.basis(1)), Err(Error::Singular));
    }

    #[test]
    fn apply_on_leg_inserts_legs() {
        let a = z2();
        let f = a.field().clone();
        // coproduct of the group algebra: g -> g(x)g
        let delta =
            LinearMap::new(vec![Tensor::basis(&f, 2, &[0, 0], f.one()).unwrap(), Tensor::basis(&f, 2, &[1, 1], f.one()).unwrap()], false)
                .unwrap();
        let t = Tensor::basis(&f, 2, &[0, 1], f.one()).unwrap();
        let r = t.apply_on_leg(&delta, 1).unwrap();
        assert_eq!(r, Tensor::basis(&f, 2, &[0, 1, 1], f.one()).unwrap());
    }

    #[test]
    fn linear_map_inverse() {
        let a = mat2();
        let f = a.field().clone();
        // transpose of 2x2 matrices is an anti-automorphism
        let cols = [0usize, 2, 1, 3].iter().map(|&k| a.basis(k)).collect();
        let t = LinearMap::new(cols, true).unwrap();
        assert_eq!(a.multiplicativity_defect(&t), None);
        let ti = t.inverse().unwrap();
        assert_eq!(ti.compose(&t).unwrap().columns(), LinearMap::identity(&f, 4).columns());
    }
}
