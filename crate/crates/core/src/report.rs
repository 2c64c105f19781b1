//! Named pass/fail results with localized witnesses.

use alloc::string::String;
use alloc::vec::Vec;

use crate::scalar::Scalar;
use crate::tensor::Tensor;

/// Where an equality first broke: the basis instance the check was run on
/// (empty for element-level checks), the multi-index of the first differing
/// entry, and the two values found there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub at: Vec<usize>,
    pub entry: Vec<usize>,
    pub lhs: Option<Scalar>,
    pub rhs: Option<Scalar>,
    pub note: Option<String>,
}

impl Witness {
    pub fn note(text: impl Into<String>) -> Self {
        Witness { at: Vec::new(), entry: Vec::new(), lhs: None, rhs: None, note: Some(text.into()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(id: impl Into<String>) -> Self {
        Check { id: id.into(), passed: true, witness: None }
    }

    pub fn fail(id: impl Into<String>, witness: Witness) -> Self {
        Check { id: id.into(), passed: false, witness: Some(witness) }
    }

    pub fn from_bool(id: impl Into<String>, ok: bool, note: &str) -> Self {
        if ok {
            Self::pass(id)
        } else {
            Self::fail(id, Witness::note(note))
        }
    }

    /// Exact tensor equality.
    pub fn equal(id: impl Into<String>, lhs: &Tensor, rhs: &Tensor) -> Self {
        match diff(&[], lhs, rhs) {
            None => Self::pass(id),
            Some(w) => Self::fail(id, w),
        }
    }

    /// Runs `pair` on every multi-index of `[0, dim)^k` (lexicographic) and
    /// stops at the first inequality.
    pub fn for_all<F>(id: impl Into<String>, dim: usize, k: usize, mut pair: F) -> Self
    where
        F: FnMut(&[usize]) -> (Tensor, Tensor),
    {
        let id = id.into();
        let mut idx = alloc::vec![0usize; k];
        loop {
            let (l, r) = pair(&idx);
            if let Some(w) = diff(&idx, &l, &r) {
                return Self::fail(id, w);
            }
            // advance the odometer
            let mut pos = k;
            loop {
                if pos == 0 {
                    return Self::pass(id);
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < dim {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    /// Prefixes the check id, e.g. `"opposite."`.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        self.id = alloc::format!("{prefix}{}", self.id);
        self
    }
}

fn diff(at: &[usize], lhs: &Tensor, rhs: &Tensor) -> Option<Witness> {
    if lhs.arity() != rhs.arity() || lhs.dim() != rhs.dim() {
        return Some(Witness { at: at.to_vec(), entry: Vec::new(), lhs: None, rhs: None, note: Some(String::from("shape mismatch")) });
    }
    lhs.first_difference(rhs).map(|(entry, l, r)| Witness { at: at.to_vec(), entry, lhs: Some(l), rhs: Some(r), note: None })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report { checks: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        self.checks.extend(other.checks.into_iter().map(|c| c.prefixed(prefix)));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn failed_ids(&self) -> Vec<String> {
        self.failures().map(|c| c.id.clone()).collect()
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}
