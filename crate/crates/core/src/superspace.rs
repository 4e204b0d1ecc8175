//! Graded supervector spaces, the Koszul sign rule, Hom components and super
//! exterior powers.
//!
//! Sign convention for super exterior powers: exchanging two neighbouring
//! entries `a`, `b` multiplies by `-(-1)^{|a||b|}`. Evens anticommute with
//! everything, two odds commute. Every cochain sign in the crate is routed
//! through [`koszul_sign`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Self {
        if b.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^{|self||other|}` as `1` or `-1`.
    pub fn sign_with(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// Superdimension `(even|odd)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperDim {
    pub even: usize,
    pub odd: usize,
}

impl SuperDim {
    pub const ZERO: SuperDim = SuperDim { even: 0, odd: 0 };

    pub fn new(even: usize, odd: usize) -> Self {
        SuperDim { even, odd }
    }

    pub fn total(self) -> usize {
        self.even + self.odd
    }

    pub fn is_zero(self) -> bool {
        self.total() == 0
    }

    pub fn count(&mut self, p: Parity) {
        match p {
            Parity::Even => self.even += 1,
            Parity::Odd => self.odd += 1,
        }
    }

    pub fn get(self, p: Parity) -> usize {
        match p {
            Parity::Even => self.even,
            Parity::Odd => self.odd,
        }
    }

    /// Componentwise `self <= other` (the "strong sense" comparison).
    pub fn le_strong(self, other: SuperDim) -> bool {
        self.even <= other.even && self.odd <= other.odd
    }
}

impl Add for SuperDim {
    type Output = SuperDim;

    fn add(self, rhs: SuperDim) -> SuperDim {
        SuperDim::new(self.even + rhs.even, self.odd + rhs.odd)
    }
}

impl std::iter::Sum for SuperDim {
    fn sum<I: Iterator<Item = SuperDim>>(iter: I) -> SuperDim {
        iter.fold(SuperDim::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisVector {
    pub name: String,
    pub degree: i32,
    pub parity: Parity,
}

impl BasisVector {
    pub fn new(name: impl Into<String>, degree: i32, parity: Parity) -> Self {
        BasisVector {
            name: name.into(),
            degree,
            parity,
        }
    }
}

#[derive(Clone, Debug, thiserror::Error, PartialEq, Eq)]
#[error("duplicate basis vector name {0:?}")]
pub struct DuplicateName(pub String);

/// Ordered basis of a ℤ-graded supervector space.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedSuperSpace {
    basis: Vec<BasisVector>,
}

impl GradedSuperSpace {
    pub fn new(basis: Vec<BasisVector>) -> Result<Self, DuplicateName> {
        let mut seen = std::collections::HashSet::new();
        for b in &basis {
            if !seen.insert(b.name.as_str()) {
                return Err(DuplicateName(b.name.clone()));
            }
        }
        Ok(GradedSuperSpace { basis })
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn get(&self, i: usize) -> &BasisVector {
        &self.basis[i]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.basis[i].degree
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    pub fn superdim(&self) -> SuperDim {
        let mut d = SuperDim::ZERO;
        for b in &self.basis {
            d.count(b.parity);
        }
        d
    }

    /// Per-degree superdimensions, ascending by degree.
    pub fn superdims_by_degree(&self) -> BTreeMap<i32, SuperDim> {
        let mut out = BTreeMap::new();
        for b in &self.basis {
            out.entry(b.degree).or_insert(SuperDim::ZERO).count(b.parity);
        }
        out
    }

    pub fn superdim_at(&self, degree: i32) -> SuperDim {
        let mut d = SuperDim::ZERO;
        for b in self.basis.iter().filter(|b| b.degree == degree) {
            d.count(b.parity);
        }
        d
    }

    pub fn indices_of_degree(&self, degree: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].degree == degree).collect()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.basis.iter().map(|b| b.degree).min()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.basis.iter().map(|b| b.degree).max()
    }

    /// Direct sum, keeping names unique by construction of the caller.
    pub fn direct_sum(&self, other: &GradedSuperSpace) -> Result<Self, DuplicateName> {
        let mut basis = self.basis.clone();
        basis.extend(other.basis.iter().cloned());
        GradedSuperSpace::new(basis)
    }
}

/// Elementary map `e* ⊗ f`: sends `src[source]` to `dst[target]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementaryMap {
    pub source: usize,
    pub target: usize,
}

/// Degree-`d` component of `Hom(src, dst)`, spanned by the elementary maps
/// `e* ⊗ f` with `deg f - deg e = d`, of parity `|e| + |f|`.
pub fn hom_degree_component(
    src: &GradedSuperSpace,
    dst: &GradedSuperSpace,
    d: i32,
) -> (GradedSuperSpace, Vec<ElementaryMap>) {
    let mut basis = Vec::new();
    let mut maps = Vec::new();
    for (s, e) in src.basis().iter().enumerate() {
        for (t, f) in dst.basis().iter().enumerate() {
            if f.degree - e.degree == d {
                basis.push(BasisVector::new(
                    format!("{}*⊗{}", e.name, f.name),
                    d,
                    e.parity + f.parity,
                ));
                maps.push(ElementaryMap {
                    source: s,
                    target: t,
                });
            }
        }
    }
    (GradedSuperSpace { basis }, maps)
}

/// Canonically sorted monomial `x_{i1} ∧ … ∧ x_{ik}` of the super exterior
/// algebra: indices weakly increasing, strictly increasing on even entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExteriorBasisMonomial {
    pub indices: Vec<usize>,
    pub degree: i32,
    pub parity: Parity,
}

impl ExteriorBasisMonomial {
    pub fn new(space: &GradedSuperSpace, indices: Vec<usize>) -> Self {
        let degree = indices.iter().map(|&i| space.degree(i)).sum();
        let parity = indices
            .iter()
            .fold(Parity::Even, |p, &i| p + space.parity(i));
        ExteriorBasisMonomial {
            indices,
            degree,
            parity,
        }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn name(&self, space: &GradedSuperSpace) -> String {
        if self.indices.is_empty() {
            return "1".to_string();
        }
        self.indices
            .iter()
            .map(|&i| space.get(i).name.as_str())
            .collect::<Vec<_>>()
            .join("∧")
    }
}

/// All canonical monomials of super-Λᵏ(S).
pub fn exterior_power_basis(space: &GradedSuperSpace, k: usize) -> Vec<ExteriorBasisMonomial> {
    fn rec(
        space: &GradedSuperSpace,
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<ExteriorBasisMonomial>,
    ) {
        if cur.len() == k {
            out.push(ExteriorBasisMonomial::new(space, cur.clone()));
            return;
        }
        for i in start..space.dim() {
            cur.push(i);
            let next = if space.parity(i).is_odd() { i } else { i + 1 };
            rec(space, k, next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(space, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Sign of reordering a super-exterior product.
///
/// `parities[j]` is the parity of the `j`-th factor of the original product
/// and `perm[k]` the original position of the factor placed at position `k`.
/// Each inverted pair `(a, b)` contributes `-(-1)^{|a||b|}`, so two evens or
/// an even and an odd anticommute while two odds commute.
pub fn koszul_sign(parities: &[Parity], perm: &[usize]) -> i64 {
    assert_eq!(parities.len(), perm.len(), "permutation length mismatch");
    let mut sign = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                sign *= -parities[perm[i]].sign_with(parities[perm[j]]);
            }
        }
    }
    sign
}

/// Sorts `indices` into canonical order. Returns the exterior sign, or `None`
/// when an even index repeats (the product vanishes).
pub fn sort_exterior(space: &GradedSuperSpace, indices: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut perm: Vec<usize> = (0..indices.len()).collect();
    perm.sort_by_key(|&k| (indices[k], k));
    let sorted: Vec<usize> = perm.iter().map(|&k| indices[k]).collect();
    for w in sorted.windows(2) {
        if w[0] == w[1] && !space.parity(w[0]).is_odd() {
            return None;
        }
    }
    let parities: Vec<Parity> = indices.iter().map(|&i| space.parity(i)).collect();
    Some((koszul_sign(&parities, &perm), sorted))
}
