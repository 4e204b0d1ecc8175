//! Generalized Spencer complex `Λ•m* ⊗ g` and its cohomology.
//!
//! A `k`-cochain is stored by its values on canonically sorted argument
//! tuples. The differential is
//!
//! ```text
//! δc(x_1,…,x_{k+1}) = Σ_i ε_i (-1)^{|x_i||c|} [x_i, c(…x̂_i…)]
//!                   - Σ_{i<j} ε_{ij} c([x_i,x_j], …x̂_i…x̂_j…)
//! ```
//!
//! where `ε_i` (`ε_{ij}`) is the [`koszul_sign`] of moving `x_i` (`x_i, x_j`)
//! to the front. For `k = 1` and even `c` this is
//! `[x,c(y)] - (-1)^{|x||y|}[y,c(x)] - c([x,y])`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::sparse::add_entry;
use crate::field::{ExactMatrix, Field, SparseVec, Span};
use crate::liesuper::LieSuperalgebra;
use crate::prolong::ProlongationResult;
use crate::superspace::{
    exterior_power_basis, koszul_sign, sort_exterior, BasisVector, GradedSuperSpace, Parity, SuperDim,
};

/// A graded `m`-module: `action[a][t] = e_a · t`.
#[derive(Clone, Debug)]
pub struct CoefficientModule<F> {
    pub space: GradedSuperSpace,
    pub action: Vec<Vec<SparseVec<F>>>,
}

impl<F: Field> CoefficientModule<F> {
    /// The adjoint module of a graded algebra whose basis starts with the
    /// symbol `m` (its negative part).
    pub fn adjoint(g: &LieSuperalgebra<F>, m_dim: usize) -> Self {
        let action = (0..m_dim)
            .map(|a| (0..g.dim()).map(|t| g.bracket_basis(a, t)).collect())
            .collect();
        CoefficientModule {
            space: g.space().clone(),
            action,
        }
    }

    /// Submodule of elements of degree ≤ `max_degree`. Fails if the action
    /// leaves it.
    pub fn truncated(&self, max_degree: i32) -> Result<Self> {
        let keep: Vec<usize> = (0..self.space.dim())
            .filter(|&t| self.space.degree(t) <= max_degree)
            .collect();
        let new_index: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &t)| (t, k)).collect();
        let basis: Vec<BasisVector> = keep.iter().map(|&t| self.space.get(t).clone()).collect();
        let mut action = Vec::new();
        for row in &self.action {
            let mut new_row = Vec::new();
            for &t in &keep {
                let mut v = SparseVec::new();
                for (s, x) in &row[t] {
                    let k = new_index
                        .get(s)
                        .ok_or_else(|| Error::Inconsistent("truncation is not a submodule".into()))?;
                    add_entry(&mut v, *k, x.clone());
                }
                new_row.push(v);
            }
            action.push(new_row);
        }
        Ok(CoefficientModule {
            space: GradedSuperSpace::new(basis).expect("sub-basis"),
            action,
        })
    }
}

impl<F: Field> ProlongationResult<F> {
    /// `m ⊕ g0 ⊕ …` as an `m`-module, built from the realizations (works for
    /// truncated results too). `max_degree` cuts the tower.
    pub fn coefficient_module(&self, max_degree: Option<i32>) -> Result<CoefficientModule<F>> {
        let n = self.symbol.dim();
        let mut basis = self.symbol.space().basis().to_vec();
        let mut reals = Vec::new();
        for c in &self.components {
            basis.extend(c.space.basis().iter().cloned());
            reals.extend(c.realization.iter().cloned());
        }
        let space = GradedSuperSpace::new(basis).map_err(|e| Error::Inconsistent(e.to_string()))?;
        let mut action = Vec::new();
        for a in 0..n {
            let mut row = Vec::new();
            for t in 0..space.dim() {
                if t < n {
                    row.push(self.symbol.bracket_basis(a, t));
                } else {
                    let s = F::from_i64(-space.parity(a).sign_with(space.parity(t)));
                    let mut v = SparseVec::new();
                    for (k, x) in &reals[t - n][a] {
                        add_entry(&mut v, *k, s.clone() * x.clone());
                    }
                    row.push(v);
                }
            }
            action.push(row);
        }
        let module = CoefficientModule { space, action };
        match max_degree {
            Some(d) => module.truncated(d),
            None => Ok(module),
        }
    }
}

/// Basis element of `C^{d,k}`: argument monomial and coefficient index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cochain {
    pub args: Vec<usize>,
    pub value: usize,
}

/// `C^{d,k}(m, g)` with a fixed basis order.
#[derive(Clone, Debug)]
pub struct CochainSlice {
    pub d: i32,
    pub k: usize,
    pub basis: Vec<Cochain>,
    pub parities: Vec<Parity>,
    index: HashMap<Cochain, usize>,
}

impl CochainSlice {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn index_of(&self, c: &Cochain) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn superdim(&self) -> SuperDim {
        let mut s = SuperDim::ZERO;
        for p in &self.parities {
            s.count(*p);
        }
        s
    }
}

/// The complex `Λ•m* ⊗ g`.
pub struct SpencerComplex<F> {
    m: LieSuperalgebra<F>,
    g: CoefficientModule<F>,
    monomials: HashMap<usize, Vec<Vec<usize>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyRow {
    pub d: i32,
    pub k: usize,
    pub dim_even: usize,
    pub dim_odd: usize,
}

impl<F: Field> SpencerComplex<F> {
    pub fn new(m: LieSuperalgebra<F>, g: CoefficientModule<F>) -> Result<Self> {
        if g.action.len() != m.dim() {
            return Err(Error::InvalidParameter("module action must cover the symbol basis".into()));
        }
        Ok(SpencerComplex {
            m,
            g,
            monomials: HashMap::new(),
        })
    }

    /// Adjoint coefficients for a graded algebra whose negative part comes first.
    pub fn adjoint(g: &LieSuperalgebra<F>) -> Result<Self> {
        let m = g.negative_part()?;
        let module = CoefficientModule::adjoint(g, m.dim());
        Self::new(m, module)
    }

    pub fn symbol(&self) -> &LieSuperalgebra<F> {
        &self.m
    }

    pub fn module(&self) -> &CoefficientModule<F> {
        &self.g
    }

    fn monomials(&mut self, k: usize) -> &Vec<Vec<usize>> {
        let space = self.m.space().clone();
        self.monomials.entry(k).or_insert_with(|| {
            exterior_power_basis(&space, k)
                .into_iter()
                .map(|m| m.indices)
                .collect()
        })
    }

    fn args_degree(&self, args: &[usize]) -> i32 {
        args.iter().map(|&a| self.m.degree(a)).sum()
    }

    fn args_parity(&self, args: &[usize]) -> Parity {
        args.iter().fold(Parity::Even, |p, &a| p + self.m.parity(a))
    }

    pub fn slice(&mut self, d: i32, k: usize) -> CochainSlice {
        let monos = self.monomials(k).clone();
        let mut basis = Vec::new();
        let mut parities = Vec::new();
        for args in monos {
            let deg = self.args_degree(&args);
            let par = self.args_parity(&args);
            for t in 0..self.g.space.dim() {
                if self.g.space.degree(t) - deg == d {
                    basis.push(Cochain {
                        args: args.clone(),
                        value: t,
                    });
                    parities.push(par + self.g.space.parity(t));
                }
            }
        }
        let index = basis.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        CochainSlice {
            d,
            k,
            basis,
            parities,
            index,
        }
    }

    /// Degrees `d` with `C^{d,k} ≠ 0`.
    pub fn degrees(&mut self, k: usize) -> BTreeSet<i32> {
        let monos = self.monomials(k).clone();
        let mut out = BTreeSet::new();
        for args in monos {
            let deg = self.args_degree(&args);
            for t in 0..self.g.space.dim() {
                out.insert(self.g.space.degree(t) - deg);
            }
        }
        out
    }

    /// Matrix of `δ: C^{d,k} → C^{d,k+1}` (rows indexed by the target slice).
    pub fn ce_differential(&mut self, d: i32, k: usize) -> (CochainSlice, CochainSlice, ExactMatrix<F>) {
        let src = self.slice(d, k);
        let dst = self.slice(d, k + 1);
        let mut rows: Vec<SparseVec<F>> = vec![SparseVec::new(); dst.len()];
        // group source columns by argument monomial
        let mut by_args: HashMap<&[usize], Vec<usize>> = HashMap::new();
        for (j, c) in src.basis.iter().enumerate() {
            by_args.entry(c.args.as_slice()).or_default().push(j);
        }
        let mut done: BTreeSet<Vec<usize>> = BTreeSet::new();
        for (r, target) in dst.basis.iter().enumerate() {
            let args = &target.args;
            if !done.insert(args.clone()) {
                continue;
            }
            let _ = r;
            let pars: Vec<Parity> = args.iter().map(|&a| self.m.parity(a)).collect();
            let len = args.len();
            // action terms
            for i in 0..len {
                let rest: Vec<usize> = (0..len).filter(|&l| l != i).map(|l| args[l]).collect();
                let Some(cols) = by_args.get(rest.as_slice()) else {
                    continue;
                };
                let perm: Vec<usize> = std::iter::once(i).chain((0..len).filter(|&l| l != i)).collect();
                let eps = koszul_sign(&pars, &perm);
                let xi = args[i];
                for &j in cols {
                    let c = &src.basis[j];
                    let s = eps * pars[i].sign_with(src.parities[j]);
                    for (out, coeff) in &self.g.action[xi][c.value] {
                        let key = Cochain {
                            args: args.clone(),
                            value: *out,
                        };
                        if let Some(row) = dst.index_of(&key) {
                            add_entry(&mut rows[row], j, F::from_i64(s) * coeff.clone());
                        }
                    }
                }
            }
            // bracket terms
            for i in 0..len {
                for jj in i + 1..len {
                    let bracket = self.m.bracket_basis(args[i], args[jj]);
                    if bracket.is_empty() {
                        continue;
                    }
                    let perm: Vec<usize> = [i, jj]
                        .into_iter()
                        .chain((0..len).filter(|&l| l != i && l != jj))
                        .collect();
                    let eps = koszul_sign(&pars, &perm);
                    let rest: Vec<usize> = (0..len).filter(|&l| l != i && l != jj).map(|l| args[l]).collect();
                    for (l, coeff) in &bracket {
                        let mut tuple = vec![*l];
                        tuple.extend(&rest);
                        let Some((sign, sorted)) = sort_exterior(self.m.space(), &tuple) else {
                            continue;
                        };
                        let Some(cols) = by_args.get(sorted.as_slice()) else {
                            continue;
                        };
                        for &j in cols {
                            let key = Cochain {
                                args: args.clone(),
                                value: src.basis[j].value,
                            };
                            if let Some(row) = dst.index_of(&key) {
                                add_entry(&mut rows[row], j, F::from_i64(-eps * sign) * coeff.clone());
                            }
                        }
                    }
                }
            }
        }
        let mut mat = ExactMatrix::zeros(dst.len(), src.len());
        for (r, row) in rows.into_iter().enumerate() {
            for (j, x) in row {
                mat[(r, j)] = x;
            }
        }
        (src, dst, mat)
    }

    /// `dim ker δ_k - rank δ_{k-1}` at bidegree `(d, k)`, split by parity.
    pub fn cohomology_dims(&mut self, d: i32, k: usize) -> SuperDim {
        let (src, _, delta) = self.ce_differential(d, k);
        let mut out = SuperDim::ZERO;
        for p in [Parity::Even, Parity::Odd] {
            let cols: Vec<usize> = (0..src.len()).filter(|&j| src.parities[j] == p).collect();
            let ker = cols.len() - columns(&delta, &cols).rank();
            let im = if k == 0 {
                0
            } else {
                let (prev, _, dprev) = self.ce_differential(d, k - 1);
                let pc: Vec<usize> = (0..prev.len()).filter(|&j| prev.parities[j] == p).collect();
                columns(&dprev, &pc).rank()
            };
            let h = ker - im;
            match p {
                Parity::Even => out.even = h,
                Parity::Odd => out.odd = h,
            }
        }
        out
    }

    pub fn cohomology_row(&mut self, d: i32, k: usize) -> CohomologyRow {
        let h = self.cohomology_dims(d, k);
        CohomologyRow {
            d,
            k,
            dim_even: h.even,
            dim_odd: h.odd,
        }
    }

    /// `δ_{k+1} ∘ δ_k = 0` at degree `d`.
    pub fn delta_squared_vanishes(&mut self, d: i32, k: usize) -> bool {
        let (_, _, a) = self.ce_differential(d, k);
        let (_, _, b) = self.ce_differential(d, k + 1);
        if a.cols() == 0 || b.rows() == 0 {
            return true;
        }
        b.mul(&a).is_zero()
    }

    /// The reduced-differential lemma at every degree with `C^{d,1}` or
    /// `C^{d,2}` nonzero: `rank ∂ = rank δ` on `C^{d,1}`, `p` injective on
    /// `ker δ|C^{d,2}`, and `N = Z ⊕ 𝔅` complementary to `Im δ`.
    pub fn reduced_differential_check(&mut self) -> ReducedReport {
        let mut degrees = self.degrees(1);
        degrees.extend(self.degrees(2));
        let rows = degrees.into_iter().map(|d| self.reduced_at(d)).collect();
        ReducedReport { rows }
    }

    /// `p` injective on `ker δ₂` computed from the kernel itself (dense;
    /// meant for small slices).
    pub fn projection_injective_on_kernel(&mut self, d: i32) -> bool {
        let (src, _, delta2) = self.ce_differential(d, 2);
        let in_a: Vec<usize> = (0..src.len()).filter(|&j| self.in_reduced_part(&src.basis[j].args)).collect();
        let ker = delta2.kernel_basis();
        if ker.is_empty() {
            return true;
        }
        let projected: Vec<Vec<F>> = ker
            .iter()
            .map(|v| in_a.iter().map(|&j| v[j].clone()).collect())
            .collect();
        if in_a.is_empty() {
            return false;
        }
        ExactMatrix::from_rows(in_a.len(), projected).rank() == ker.len()
    }

    fn in_reduced_part(&self, args: &[usize]) -> bool {
        args.iter().any(|&a| self.m.degree(a) == -1)
    }

    fn reduced_at(&mut self, d: i32) -> ReducedRow {
        let (_, c2, delta1) = self.ce_differential(d, 1);
        let in_a: Vec<bool> = c2.basis.iter().map(|c| self.in_reduced_part(&c.args)).collect();
        let a_rows: Vec<usize> = (0..c2.len()).filter(|&r| in_a[r]).collect();
        let rank_delta = delta1.rank();
        let partial = rows_of(&delta1, &a_rows);
        let rank_partial = partial.rank();

        // ker δ₂ ∩ 𝔅 = 0 ⇔ δ₂ injective on the 𝔅 columns
        let (src2, _, delta2) = self.ce_differential(d, 2);
        let b_cols: Vec<usize> = (0..src2.len()).filter(|&j| !self.in_reduced_part(&src2.basis[j].args)).collect();
        let p_injective = columns(&delta2, &b_cols).rank() == b_cols.len();

        // N = Z ⊕ 𝔅, Z completing Im ∂ inside 𝔄 by coordinate vectors
        let dim = c2.len();
        let mut im_partial: Span<F> = Span::new(a_rows.len());
        for j in 0..partial.cols() {
            im_partial.insert(&partial.column(j));
        }
        let mut complement = Vec::new();
        for (pos, &r) in a_rows.iter().enumerate() {
            let mut e = vec![F::zero(); a_rows.len()];
            e[pos] = F::one();
            if im_partial.insert(&e) {
                complement.push(r);
            }
        }
        complement.extend((0..dim).filter(|&r| !in_a[r]));
        let mut total: Span<F> = Span::new(dim);
        for j in 0..delta1.cols() {
            total.insert(&delta1.column(j));
        }
        let mut complement_ok = total.len() + complement.len() == dim;
        for &r in &complement {
            let mut e = vec![F::zero(); dim];
            e[r] = F::one();
            complement_ok &= total.insert(&e);
        }
        complement_ok &= total.len() == dim;
        let names = complement
            .iter()
            .map(|&r| {
                let c = &c2.basis[r];
                let args: Vec<&str> = c.args.iter().map(|&a| self.m.name(a)).collect();
                format!("({})*⊗{}", args.join("∧"), self.g.space.get(c.value).name)
            })
            .collect();
        ReducedRow {
            d,
            rank_delta,
            rank_partial,
            p_injective,
            complement_dim: complement.len(),
            complement_ok,
            complement: names,
        }
    }
}

fn columns<F: Field>(m: &ExactMatrix<F>, cols: &[usize]) -> ExactMatrix<F> {
    let rows = (0..m.rows())
        .map(|i| cols.iter().map(|&j| m[(i, j)].clone()).collect())
        .collect();
    ExactMatrix::from_rows(cols.len(), rows)
}

fn rows_of<F: Field>(m: &ExactMatrix<F>, rows: &[usize]) -> ExactMatrix<F> {
    ExactMatrix::from_rows(m.cols(), rows.iter().map(|&i| m.row(i).to_vec()).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct ReducedRow {
    pub d: i32,
    pub rank_delta: usize,
    pub rank_partial: usize,
    pub p_injective: bool,
    pub complement_dim: usize,
    pub complement_ok: bool,
    /// Basis of `N = Z ⊕ 𝔅` as `(args)*⊗value`.
    pub complement: Vec<String>,
}

impl ReducedRow {
    pub fn passes(&self) -> bool {
        self.rank_delta == self.rank_partial && self.p_injective && self.complement_ok
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReducedReport {
    pub rows: Vec<ReducedRow>,
}

impl ReducedReport {
    pub fn passes(&self) -> bool {
        self.rows.iter().all(ReducedRow::passes)
    }
}

/// Cohomology table over a degree range.
pub fn cohomology_table<F: Field>(
    complex: &mut SpencerComplex<F>,
    degrees: impl IntoIterator<Item = i32>,
    k: usize,
) -> Vec<CohomologyRow> {
    degrees.into_iter().map(|d| complex.cohomology_row(d, k)).collect()
}

/// `dim ker δ₁` on `C^{i,1}` with coefficients truncated to degrees `< i`.
/// For full prolongation data this is `dim g_i`.
pub fn prolongation_kernel_dim<F: Field>(r: &ProlongationResult<F>, i: i32) -> Result<SuperDim> {
    let module = r.coefficient_module(Some(i - 1))?;
    let mut c = SpencerComplex::new(r.symbol.clone(), module)?;
    let (src, _, delta) = c.ce_differential(i, 1);
    let mut out = SuperDim::ZERO;
    for p in [Parity::Even, Parity::Odd] {
        let cols: Vec<usize> = (0..src.len()).filter(|&j| src.parities[j] == p).collect();
        let k = cols.len() - columns(&delta, &cols).rank();
        match p {
            Parity::Even => out.even = k,
            Parity::Odd => out.odd = k,
        }
    }
    Ok(out)
}

/// Per-degree superdimensions of a cohomology table, keyed by `d`.
pub fn table_map(rows: &[CohomologyRow]) -> BTreeMap<i32, SuperDim> {
    rows.iter().map(|r| (r.d, SuperDim::new(r.dim_even, r.dim_odd))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::liesuper::catalog;
    use crate::prolong::{prolong, Reduction, G0};
    use num_traits::Zero;

    type Q = Rational;

    fn sd(e: usize, o: usize) -> SuperDim {
        SuperDim::new(e, o)
    }

    fn projective(p: usize, q: usize) -> ProlongationResult<Q> {
        let m = catalog::abelian_symbol(p, q).unwrap();
        prolong(&m, G0::Given(catalog::gl(p, q).unwrap()), &[(1, Reduction::ProjectiveTrace)], None).unwrap()
    }

    #[test]
    fn delta_squared_on_sl21() {
        let g: LieSuperalgebra<Q> = catalog::sl21_ode().unwrap();
        let mut c = SpencerComplex::adjoint(&g).unwrap();
        for d in -2..=4 {
            for k in 0..=2 {
                assert!(c.delta_squared_vanishes(d, k), "d={d} k={k}");
            }
        }
    }

    #[test]
    fn delta_squared_on_odd_symbols() {
        let r = prolong(&catalog::odd_ode_symbol::<Q>(3).unwrap(), G0::Scalings, &[], None).unwrap();
        let mut c = SpencerComplex::new(r.symbol.clone(), r.coefficient_module(None).unwrap()).unwrap();
        for d in -1..=4 {
            for k in 0..=2 {
                assert!(c.delta_squared_vanishes(d, k), "d={d} k={k}");
            }
        }
        let r = projective(1, 2);
        let mut c = SpencerComplex::new(r.symbol.clone(), r.coefficient_module(None).unwrap()).unwrap();
        for d in 0..=3 {
            for k in 0..=2 {
                assert!(c.delta_squared_vanishes(d, k), "d={d} k={k}");
            }
        }
    }

    #[test]
    fn k1_formula_matches_hand_evaluation() {
        // one even x, one odd θ, [x,θ] = η; coefficients = m itself
        let m: LieSuperalgebra<Q> = catalog::odd_ode_symbol(2).unwrap();
        let module = CoefficientModule::adjoint(&m, m.dim());
        let mut c = SpencerComplex::new(m.clone(), module).unwrap();
        // ψ = θ1* ⊗ θ2: every bracket with θ2 vanishes and ψ([X,θ1]) = ψ(θ2) = 0
        let (src, dst, mat) = c.ce_differential(-1, 1);
        let j = src
            .index_of(&Cochain { args: vec![1], value: 2 })
            .unwrap();
        for r in 0..dst.len() {
            assert!(mat[(r, j)].is_zero());
        }
        // ψ = X* ⊗ X (even, degree 0): δψ(X,θ1) = [X,0] - [θ1,X] - ψ(θ2) = θ2
        let (src, dst, mat) = c.ce_differential(0, 1);
        let j = src.index_of(&Cochain { args: vec![0], value: 0 }).unwrap();
        let r = dst.index_of(&Cochain { args: vec![0, 1], value: 2 }).unwrap();
        assert_eq!(mat[(r, j)], Q::from_i64(1));
    }

    #[test]
    fn sl21_positive_cohomology_vanishes() {
        let g: LieSuperalgebra<Q> = catalog::sl21_ode().unwrap();
        let mut c = SpencerComplex::adjoint(&g).unwrap();
        for d in 1..=4 {
            assert_eq!(c.cohomology_dims(d, 1), sd(0, 0), "d={d}");
        }
        // bigrade (1,1): ker δ₁ is spanned by δ₀(E13) … and δ₀ of the degree-1 part
        let (_, _, d1) = c.ce_differential(1, 1);
        assert_eq!(d1.kernel_basis().len(), 2);
        let (_, _, d1) = c.ce_differential(2, 1);
        assert_eq!(d1.kernel_basis().len(), 1);
    }

    #[test]
    fn projective_second_cohomology_vanishes() {
        for (p, q) in [(2, 1), (1, 2), (2, 2)] {
            let r = projective(p, q);
            let mut c = SpencerComplex::new(r.symbol.clone(), r.coefficient_module(None).unwrap()).unwrap();
            // degree-2 1-cochains: no g2 in the coefficients, and ker δ = 0
            let (_, _, d1) = c.ce_differential(2, 1);
            assert!(d1.kernel_basis().is_empty());
            assert_eq!(c.cohomology_dims(2, 1), sd(0, 0));
        }
    }

    #[test]
    fn invariants_of_trivial_action() {
        // abelian symbol acting on itself: H^{0,0} = degree-0 invariants = 0 (no degree 0),
        // H^{-1,0} = g_{-1}
        let m: LieSuperalgebra<Q> = catalog::abelian_symbol(1, 0).unwrap();
        let module = CoefficientModule::adjoint(&m, 1);
        let mut c = SpencerComplex::new(m, module).unwrap();
        assert_eq!(c.cohomology_dims(-1, 0), sd(1, 0));
        assert_eq!(c.cohomology_dims(0, 0), sd(0, 0));
    }

    #[test]
    fn euler_characteristic() {
        let g: LieSuperalgebra<Q> = catalog::sl21_ode().unwrap();
        let mut c = SpencerComplex::adjoint(&g).unwrap();
        // Λ^k m* vanishes for k > 0 only in the purely even case, so compare
        // truncated sums where every map is accounted for: Σ(-1)^k dim C = Σ(-1)^k dim H
        // holds per degree up to the last differential's image; check k ≤ 2 with δ₂'s rank
        for d in 0..=3 {
            for p in [Parity::Even, Parity::Odd] {
                let mut chi_c: i64 = 0;
                let mut chi_h: i64 = 0;
                for k in 0..=2 {
                    let s = c.slice(d, k);
                    let dim = s.parities.iter().filter(|&&x| x == p).count() as i64;
                    let h = c.cohomology_dims(d, k).get(p) as i64;
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    chi_c += sign * dim;
                    chi_h += sign * h;
                }
                // correction: the image of δ₂ inside C^{d,3} is not in the truncated sum
                let (src, _, d2) = c.ce_differential(d, 2);
                let cols: Vec<usize> = (0..src.len()).filter(|&j| src.parities[j] == p).collect();
                let r2 = columns(&d2, &cols).rank() as i64;
                assert_eq!(chi_c, chi_h + r2, "d={d}");
            }
        }
    }

    #[test]
    fn reduced_lemma_on_odd_ode() {
        let r = prolong(&catalog::odd_ode_symbol::<Q>(3).unwrap(), G0::Scalings, &[], None).unwrap();
        let mut c = SpencerComplex::new(r.symbol.clone(), r.coefficient_module(None).unwrap()).unwrap();
        let rep = c.reduced_differential_check();
        assert!(rep.passes(), "{rep:?}");
        // the shortcut through δ₂ on 𝔅 agrees with projecting the kernel
        for row in &rep.rows {
            assert_eq!(row.p_injective, c.projection_injective_on_kernel(row.d));
        }
    }

    #[test]
    fn reduced_lemma_trivial_in_depth_one() {
        let r = projective(2, 1);
        let mut c = SpencerComplex::new(r.symbol.clone(), r.coefficient_module(None).unwrap()).unwrap();
        let rep = c.reduced_differential_check();
        assert!(rep.passes());
        for row in &rep.rows {
            assert_eq!(row.rank_delta, row.rank_partial);
        }
    }

    #[test]
    fn kernel_cross_check_against_prolongation() {
        let r = prolong(&catalog::odd_ode_symbol::<Q>(3).unwrap(), G0::Scalings, &[], None).unwrap();
        for i in 1..=3 {
            assert_eq!(prolongation_kernel_dim(&r, i).unwrap(), r.component_superdim(i), "i={i}");
        }
        let m = catalog::abelian_symbol::<Q>(2, 2).unwrap();
        let r = prolong(&m, G0::Given(catalog::cpe(2).unwrap()), &[], None).unwrap();
        for i in 1..=3 {
            assert_eq!(prolongation_kernel_dim(&r, i).unwrap(), r.component_superdim(i), "i={i}");
        }
    }
}
