//! Lie superalgebras given by structure constants.

pub mod catalog;
mod derivations;
mod json;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::sparse::{add_entry, add_scaled, from_dense, to_dense};
use crate::field::{ExactMatrix, Field, SparseVec, Span};
use crate::superspace::{BasisVector, GradedSuperSpace, Parity, SuperDim};

pub use derivations::{check_derivation, derivations_gr, diagonal_derivations, Derivations};
pub use json::{AlgebraJson, BracketJson, TermJson};

/// Defining matrix representation attached to a matrix family.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRealization<F> {
    /// Parities of the representation space basis.
    pub rep: Vec<Parity>,
    /// One matrix per algebra basis element.
    pub matrices: Vec<ExactMatrix<F>>,
}

/// Finite-dimensional ℤ-graded Lie superalgebra.
///
/// Brackets are stored sparsely per ordered pair of basis indices. A missing
/// `(a, b)` entry falls back to `-(-1)^{|a||b|}` times the `(b, a)` entry, so
/// it is enough to record each bracket once.
#[derive(Clone, Debug)]
pub struct LieSuperalgebra<F> {
    space: GradedSuperSpace,
    brackets: BTreeMap<(usize, usize), SparseVec<F>>,
    realization: Option<MatrixRealization<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Degree { left: String, right: String, result: String },
    Parity { left: String, right: String, result: String },
    Antisymmetry { left: String, right: String },
    Jacobi { a: String, b: String, c: String },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Degree { left, right, result } => {
                write!(f, "degree: [{left},{right}] has a component on {result}")
            }
            Violation::Parity { left, right, result } => {
                write!(f, "parity: [{left},{right}] has a component on {result}")
            }
            Violation::Antisymmetry { left, right } => {
                write!(f, "antisymmetry fails for ({left},{right})")
            }
            Violation::Jacobi { a, b, c } => write!(f, "Jacobi fails on ({a},{b},{c})"),
        }
    }
}

/// Outcome of [`LieSuperalgebra::validate`]; empty iff the algebra is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Outcome of [`LieSuperalgebra::check_fundamental_nondegenerate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolReport {
    pub negatively_graded: bool,
    pub fundamental: bool,
    /// A basis element of degree ≤ -2 outside the algebra generated by degree -1.
    pub fundamental_witness: Option<String>,
    pub nondegenerate: bool,
    /// Coordinates (by basis name) of a central element of degree -1.
    pub central_witness: Option<Vec<(String, String)>>,
}

impl SymbolReport {
    pub fn is_ok(&self) -> bool {
        self.negatively_graded && self.fundamental && self.nondegenerate
    }
}

impl<F: Field> LieSuperalgebra<F> {
    /// Abelian algebra on `space`.
    pub fn abelian(space: GradedSuperSpace) -> Self {
        LieSuperalgebra {
            space,
            brackets: BTreeMap::new(),
            realization: None,
        }
    }

    pub fn space(&self) -> &GradedSuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn superdim(&self) -> SuperDim {
        self.space.superdim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.space.degree(i)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.space.get(i).name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.space.index_of(name)
    }

    pub fn realization(&self) -> Option<&MatrixRealization<F>> {
        self.realization.as_ref()
    }

    pub fn set_realization(&mut self, r: MatrixRealization<F>) {
        assert_eq!(r.matrices.len(), self.dim());
        self.realization = Some(r);
    }

    /// Depth μ: minus the lowest degree (0 if nothing is negative).
    pub fn depth(&self) -> i32 {
        (-self.space.min_degree().unwrap_or(0)).max(0)
    }

    /// Records `[a, b] = result`. The opposite order is implied.
    pub fn set_bracket(&mut self, a: usize, b: usize, result: SparseVec<F>) {
        self.brackets.insert((a, b), result);
    }

    pub fn set_bracket_named(&mut self, a: &str, b: &str, result: &[(&str, i64)]) {
        let ia = self.index_of(a).unwrap_or_else(|| panic!("no basis element {a}"));
        let ib = self.index_of(b).unwrap_or_else(|| panic!("no basis element {b}"));
        let mut v = SparseVec::new();
        for (n, c) in result {
            let k = self.index_of(n).unwrap_or_else(|| panic!("no basis element {n}"));
            add_entry(&mut v, k, F::from_i64(*c));
        }
        self.set_bracket(ia, ib, v);
    }

    /// Removes a recorded bracket in both orders (used to build broken tables).
    pub fn remove_bracket(&mut self, a: usize, b: usize) {
        self.brackets.remove(&(a, b));
        self.brackets.remove(&(b, a));
    }

    /// Explicitly recorded pairs, in storage order.
    pub fn recorded_brackets(&self) -> impl Iterator<Item = (&(usize, usize), &SparseVec<F>)> {
        self.brackets.iter()
    }

    /// `[e_a, e_b]`.
    pub fn bracket_basis(&self, a: usize, b: usize) -> SparseVec<F> {
        if let Some(v) = self.brackets.get(&(a, b)) {
            return v.clone();
        }
        if let Some(v) = self.brackets.get(&(b, a)) {
            let s = F::from_i64(-self.parity(a).sign_with(self.parity(b)));
            let mut out = SparseVec::new();
            add_scaled(&mut out, &s, v);
            return out;
        }
        SparseVec::new()
    }

    pub fn bracket_sparse(&self, x: &SparseVec<F>, y: &SparseVec<F>) -> SparseVec<F> {
        let mut out = SparseVec::new();
        for (&a, xa) in x {
            for (&b, yb) in y {
                add_scaled(&mut out, &(xa.clone() * yb.clone()), &self.bracket_basis(a, b));
            }
        }
        out
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        to_dense(&self.bracket_sparse(&from_dense(x), &from_dense(y)), self.dim())
    }

    /// Checks degree and parity additivity, super antisymmetry and the super
    /// Jacobi identity `[a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]]` on all
    /// basis triples.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let ab = self.bracket_basis(a, b);
                for &c in ab.keys() {
                    if self.degree(c) != self.degree(a) + self.degree(b) {
                        violations.push(Violation::Degree {
                            left: self.name(a).into(),
                            right: self.name(b).into(),
                            result: self.name(c).into(),
                        });
                    }
                    if self.parity(c) != self.parity(a) + self.parity(b) {
                        violations.push(Violation::Parity {
                            left: self.name(a).into(),
                            right: self.name(b).into(),
                            result: self.name(c).into(),
                        });
                    }
                }
                if a <= b {
                    let s = F::from_i64(-self.parity(a).sign_with(self.parity(b)));
                    let ba = self.bracket_basis(b, a);
                    let mut diff = ab.clone();
                    add_scaled(&mut diff, &-s, &ba);
                    if !diff.is_empty() {
                        violations.push(Violation::Antisymmetry {
                            left: self.name(a).into(),
                            right: self.name(b).into(),
                        });
                    }
                }
            }
        }
        let unit = |i: usize| -> SparseVec<F> { [(i, F::one())].into_iter().collect() };
        for a in 0..n {
            for b in a..n {
                let ab = self.bracket_basis(a, b);
                for c in b..n {
                    let lhs = self.bracket_sparse(&unit(a), &self.bracket_basis(b, c));
                    let mut rhs = self.bracket_sparse(&ab, &unit(c));
                    let s = F::from_i64(self.parity(a).sign_with(self.parity(b)));
                    add_scaled(
                        &mut rhs,
                        &s,
                        &self.bracket_sparse(&unit(b), &self.bracket_basis(a, c)),
                    );
                    let mut diff = lhs;
                    add_scaled(&mut diff, &-F::one(), &rhs);
                    if !diff.is_empty() {
                        violations.push(Violation::Jacobi {
                            a: self.name(a).into(),
                            b: self.name(b).into(),
                            c: self.name(c).into(),
                        });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// Fundamentality (degree -1 generates) and non-degeneracy (no central
    /// elements in degree -1 when the depth exceeds 1).
    pub fn check_fundamental_nondegenerate(&self) -> SymbolReport {
        let n = self.dim();
        let negatively_graded = (0..n).all(|i| self.degree(i) < 0);
        let mut span: Span<F> = Span::new(n);
        let mut layer: Vec<SparseVec<F>> = Vec::new();
        for i in self.space.indices_of_degree(-1) {
            let v: SparseVec<F> = [(i, F::one())].into_iter().collect();
            span.insert(&to_dense(&v, n));
            layer.push(v);
        }
        let gens = layer.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for g in &gens {
                for l in &layer {
                    let v = self.bracket_sparse(g, l);
                    if !v.is_empty() && span.insert(&to_dense(&v, n)) {
                        next.push(v);
                    }
                }
            }
            layer = next;
        }
        let fundamental_witness = (0..n)
            .find(|&i| {
                let mut e = vec![F::zero(); n];
                e[i] = F::one();
                !span.contains(&e)
            })
            .map(|i| self.name(i).to_string());

        let mut central_witness = None;
        if self.depth() > 1 {
            let minus_one = self.space.indices_of_degree(-1);
            // columns: degree -1 basis elements; rows: coordinates of [x, e_b]
            let mut rows = Vec::new();
            for b in 0..n {
                for c in 0..n {
                    rows.push(
                        minus_one
                            .iter()
                            .map(|&x| self.bracket_basis(x, b).get(&c).cloned().unwrap_or_else(F::zero))
                            .collect::<Vec<F>>(),
                    );
                }
            }
            let m = ExactMatrix::from_rows(minus_one.len(), rows);
            if let Some(k) = m.kernel_basis().into_iter().next() {
                central_witness = Some(
                    minus_one
                        .iter()
                        .zip(&k)
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(&i, x)| (self.name(i).to_string(), x.to_pretty()))
                        .collect(),
                );
            }
        }
        SymbolReport {
            negatively_graded,
            fundamental: fundamental_witness.is_none(),
            fundamental_witness,
            nondegenerate: central_witness.is_none(),
            central_witness,
        }
    }

    /// Subalgebra of `gl(rep)` spanned by `matrices`, with brackets computed
    /// as supercommutators. Fails if the span is not closed or the matrices
    /// are dependent.
    pub fn from_matrices(
        basis: Vec<BasisVector>,
        rep: Vec<Parity>,
        matrices: Vec<ExactMatrix<F>>,
    ) -> Result<Self> {
        let space = GradedSuperSpace::new(basis).map_err(|e| Error::InvalidParameter(e.to_string()))?;
        let n = matrices.len();
        if space.dim() != n {
            return Err(Error::InvalidParameter("basis/matrix count mismatch".into()));
        }
        let flat = |m: &ExactMatrix<F>| -> Vec<F> {
            (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
        };
        let d = rep.len();
        let span = Span::from_basis(d * d, &matrices.iter().map(flat).collect::<Vec<_>>())
            .ok_or_else(|| Error::InvalidParameter("matrices are linearly dependent".into()))?;
        let mut alg = LieSuperalgebra::abelian(space);
        for a in 0..n {
            for b in a..n {
                let c = supercommutator(&matrices[a], alg.parity(a), &matrices[b], alg.parity(b));
                if c.is_zero() {
                    continue;
                }
                let coords = span.coords(&flat(&c)).ok_or_else(|| {
                    Error::InvalidParameter(format!(
                        "span not closed: [{}, {}]",
                        alg.name(a),
                        alg.name(b)
                    ))
                })?;
                alg.set_bracket(a, b, from_dense(&coords));
            }
        }
        alg.realization = Some(MatrixRealization { rep, matrices });
        Ok(alg)
    }

    /// Same basis, names and brackets with every degree set by `degree`.
    pub fn regraded(&self, degree: impl Fn(usize) -> i32) -> Self {
        let basis = self
            .space
            .basis()
            .iter()
            .enumerate()
            .map(|(i, b)| BasisVector::new(b.name.clone(), degree(i), b.parity))
            .collect();
        LieSuperalgebra {
            space: GradedSuperSpace::new(basis).expect("names unchanged"),
            brackets: self.brackets.clone(),
            realization: self.realization.clone(),
        }
    }

    /// The subalgebra of negative-degree elements, in basis order. Requires
    /// the negative elements to come first in the basis.
    pub fn negative_part(&self) -> Result<Self> {
        let k = (0..self.dim()).take_while(|&i| self.degree(i) < 0).count();
        if (k..self.dim()).any(|i| self.degree(i) < 0) {
            return Err(Error::InvalidParameter(
                "negative-degree elements must precede the rest of the basis".into(),
            ));
        }
        let space = GradedSuperSpace::new(self.space.basis()[..k].to_vec()).expect("sub-basis");
        let mut m = LieSuperalgebra::abelian(space);
        for a in 0..k {
            for b in a..k {
                let v = self.bracket_basis(a, b);
                if !v.is_empty() {
                    m.set_bracket(a, b, v);
                }
            }
        }
        Ok(m)
    }
}

/// `XY - (-1)^{|X||Y|} YX`.
pub fn supercommutator<F: Field>(
    x: &ExactMatrix<F>,
    px: Parity,
    y: &ExactMatrix<F>,
    py: Parity,
) -> ExactMatrix<F> {
    let xy = x.mul(y);
    let yx = y.mul(x);
    let s = F::from_i64(px.sign_with(py));
    let mut out = xy.clone();
    for i in 0..out.rows() {
        for j in 0..out.cols() {
            out[(i, j)] = xy[(i, j)].clone() - s.clone() * yx[(i, j)].clone();
        }
    }
    out
}

/// Parity of the elementary matrix `E_{ij}` on a representation with the
/// given basis parities.
pub fn elementary_parity(rep: &[Parity], i: usize, j: usize) -> Parity {
    rep[i] + rep[j]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn heis() -> LieSuperalgebra<Rational> {
        let space = GradedSuperSpace::new(vec![
            BasisVector::new("p", -1, Parity::Even),
            BasisVector::new("q", -1, Parity::Even),
            BasisVector::new("z", -2, Parity::Even),
        ])
        .unwrap();
        let mut h = LieSuperalgebra::abelian(space);
        h.set_bracket_named("p", "q", &[("z", 1)]);
        h
    }

    #[test]
    fn implied_opposite_bracket() {
        let h = heis();
        assert_eq!(h.bracket_basis(1, 0), [(2, Rational::from_i64(-1))].into_iter().collect());
        assert!(h.validate().is_ok());
        assert!(h.check_fundamental_nondegenerate().is_ok());
    }

    #[test]
    fn abelian_is_valid() {
        let space = GradedSuperSpace::new(vec![
            BasisVector::new("a", -1, Parity::Even),
            BasisVector::new("b", -1, Parity::Odd),
            BasisVector::new("c", -2, Parity::Odd),
        ])
        .unwrap();
        let a: LieSuperalgebra<Rational> = LieSuperalgebra::abelian(space);
        assert!(a.validate().is_ok());
        let r = a.check_fundamental_nondegenerate();
        assert!(!r.fundamental);
        assert_eq!(r.fundamental_witness.as_deref(), Some("c"));
        assert!(!r.nondegenerate);
    }

    #[test]
    fn wrong_degree_and_parity_reported() {
        let mut h = heis();
        h.set_bracket_named("p", "z", &[("q", 1)]);
        let r = h.validate();
        assert!(r.violations.iter().any(|v| matches!(v, Violation::Degree { .. })));
    }

    #[test]
    fn inconsistent_explicit_pairs_break_antisymmetry() {
        let mut h = heis();
        h.set_bracket_named("q", "p", &[("z", 1)]);
        assert!(h
            .validate()
            .violations
            .contains(&Violation::Antisymmetry { left: "p".into(), right: "q".into() }));
    }

    #[test]
    fn supercommutator_of_odd_matrices_is_anticommutator() {
        let rep = vec![Parity::Even, Parity::Odd];
        let mut e12 = ExactMatrix::<Rational>::zeros(2, 2);
        e12[(0, 1)] = Rational::from_i64(1);
        let e21 = e12.transpose();
        assert_eq!(elementary_parity(&rep, 0, 1), Parity::Odd);
        let c = supercommutator(&e12, Parity::Odd, &e21, Parity::Odd);
        assert_eq!(c, ExactMatrix::identity(2));
    }
}
