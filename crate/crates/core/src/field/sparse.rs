use std::collections::BTreeMap;

use super::Field;

/// Sparse vector keyed by basis index. Zero entries are never stored.
pub type SparseVec<F> = BTreeMap<usize, F>;

/// `acc += c * v`.
pub fn add_scaled<F: Field>(acc: &mut SparseVec<F>, c: &F, v: &SparseVec<F>) {
    if c.is_zero() {
        return;
    }
    for (&k, x) in v {
        add_entry(acc, k, c.clone() * x.clone());
    }
}

/// `acc[k] += x`, pruning zeros.
pub fn add_entry<F: Field>(acc: &mut SparseVec<F>, k: usize, x: F) {
    if x.is_zero() {
        return;
    }
    match acc.get_mut(&k) {
        Some(y) => {
            let s = y.clone() + x;
            if s.is_zero() {
                acc.remove(&k);
            } else {
                *y = s;
            }
        }
        None => {
            acc.insert(k, x);
        }
    }
}

pub fn scaled<F: Field>(c: &F, v: &SparseVec<F>) -> SparseVec<F> {
    let mut out = SparseVec::new();
    add_scaled(&mut out, c, v);
    out
}

pub fn to_dense<F: Field>(v: &SparseVec<F>, dim: usize) -> Vec<F> {
    let mut out = vec![F::zero(); dim];
    for (&k, x) in v {
        out[k] = x.clone();
    }
    out
}

pub fn from_dense<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

pub fn from_pairs<F: Field>(pairs: impl IntoIterator<Item = (usize, F)>) -> SparseVec<F> {
    let mut out = SparseVec::new();
    for (k, x) in pairs {
        add_entry(&mut out, k, x);
    }
    out
}
