//! Tanaka–Weisfeiler prolongation `pr(m, g0)` with optional reductions.
//!
//! Elements of the tower `g = m ⊕ g0 ⊕ g1 ⊕ …` carry global indices: the
//! symbol occupies `0..dim m`, then each `g_i` follows in degree order. An
//! element `u ∈ g_i` (`i ≥ 0`) is stored as its restriction to `m`:
//! `u(e_a) = [u, e_a]`, a sparse vector over global indices of degree
//! `i + deg e_a`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::sparse::{add_entry, add_scaled, to_dense};
use crate::field::{ExactMatrix, Field, SparseVec, Span};
use crate::liesuper::{check_derivation, derivations_gr, diagonal_derivations, AlgebraJson, LieSuperalgebra};
use crate::superspace::{BasisVector, GradedSuperSpace, Parity, SuperDim};

/// Restriction of a non-negative element to the symbol, one entry per
/// symbol basis vector.
pub type Realization<F> = Vec<SparseVec<F>>;

/// Choice of the degree-zero part.
#[derive(Clone, Debug)]
pub enum G0<F> {
    /// All degree-0 derivations of the symbol.
    Full,
    /// Degree-0 derivations diagonal in the symbol basis.
    Scalings,
    /// A subalgebra of `der_gr(m)` realized by matrices on `m` (column `a`
    /// holds `u(e_a)`), e.g. a matrix algebra acting on `g_{-1} = V`.
    Given(LieSuperalgebra<F>),
}

/// Replacement subspace for a reduction at a positive degree.
#[derive(Clone, Debug)]
pub enum Reduction<F> {
    /// Keep the full prolongation (no-op).
    All,
    /// Replace by zero.
    Zero,
    /// For `g0 = gl(V)` on abelian `g_{-1} = V`: the trace part
    /// `u_k(e_a)(e_b) = δ_{ak} e_b + (-1)^{|a||b|} δ_{bk} e_a`, `k` over `V`.
    ProjectiveTrace,
    /// Explicit spanning set, realizations in global coordinates.
    Span(Vec<Realization<F>>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Status {
    /// The component at this degree vanished; all higher ones vanish too.
    Stabilized { at: i32 },
    /// `max_degree` was reached with a nonzero component.
    Truncated { max_degree: i32 },
}

#[derive(Clone, Debug)]
pub struct ProlongationComponent<F> {
    pub degree: i32,
    pub space: GradedSuperSpace,
    pub realization: Vec<Realization<F>>,
}

#[derive(Clone, Debug)]
pub struct ProlongationResult<F> {
    pub symbol: LieSuperalgebra<F>,
    pub components: Vec<ProlongationComponent<F>>,
    pub status: Status,
    /// Degrees at which a reduction replaced the computed component.
    pub reduced_degrees: Vec<i32>,
    /// `⊕ g_i` with all brackets, present when stabilized.
    pub algebra: Option<LieSuperalgebra<F>>,
}

struct Level<F> {
    degree: i32,
    range: Range<usize>,
    // coordinates of flattened realizations
    slots: HashMap<(usize, usize), usize>,
    span: Span<F>,
}

/// Incremental prolongation. [`prolong`] drives it; tests use it to take
/// extra steps past stabilization.
pub struct Prolongation<F> {
    m: LieSuperalgebra<F>,
    basis: Vec<BasisVector>,
    real: Vec<Realization<F>>,
    levels: Vec<Level<F>>,
    cache: RefCell<HashMap<(usize, usize), SparseVec<F>>>,
}

fn matrix_realization<F: Field>(mat: &ExactMatrix<F>) -> Realization<F> {
    (0..mat.cols())
        .map(|a| {
            let mut v = SparseVec::new();
            for c in 0..mat.rows() {
                add_entry(&mut v, c, mat[(c, a)].clone());
            }
            v
        })
        .collect()
}

impl<F: Field> Prolongation<F> {
    pub fn new(m: LieSuperalgebra<F>, g0: G0<F>) -> Result<Self> {
        if !m.validate().is_ok() {
            return Err(Error::InvalidParameter("symbol fails validation".into()));
        }
        if (0..m.dim()).any(|i| m.degree(i) >= 0) {
            return Err(Error::InvalidParameter("symbol must be negatively graded".into()));
        }
        let (names, parities, mats): (Vec<String>, Vec<Parity>, Vec<ExactMatrix<F>>) = match g0 {
            G0::Full | G0::Scalings => {
                let d = if matches!(g0, G0::Full) {
                    derivations_gr(&m, 0)
                } else {
                    diagonal_derivations(&m)
                };
                (
                    d.space.basis().iter().map(|b| b.name.clone()).collect(),
                    d.space.basis().iter().map(|b| b.parity).collect(),
                    d.matrices,
                )
            }
            G0::Given(g) => {
                let r = g
                    .realization()
                    .ok_or_else(|| Error::InvalidParameter("g0 needs matrices acting on the symbol".into()))?;
                if r.rep.len() != m.dim() || (0..m.dim()).any(|i| r.rep[i] != m.parity(i)) {
                    return Err(Error::InvalidParameter(
                        "g0 representation does not match the symbol basis".into(),
                    ));
                }
                for (k, mat) in r.matrices.iter().enumerate() {
                    if !check_derivation(&m, mat, g.parity(k)) {
                        return Err(Error::InvalidParameter(format!(
                            "g0 element {} is not a derivation of the symbol",
                            g.name(k)
                        )));
                    }
                }
                (
                    (0..g.dim()).map(|k| g.name(k).to_string()).collect(),
                    (0..g.dim()).map(|k| g.parity(k)).collect(),
                    r.matrices.clone(),
                )
            }
        };
        let mut p = Prolongation {
            basis: m.space().basis().to_vec(),
            m,
            real: Vec::new(),
            levels: Vec::new(),
            cache: RefCell::new(HashMap::new()),
        };
        let reals = mats.iter().map(matrix_realization).collect();
        let names = names
            .into_iter()
            .map(|n| if p.m.index_of(&n).is_some() { format!("g0:{n}") } else { n })
            .collect();
        p.push_level(0, names, parities, reals)?;
        Ok(p)
    }

    pub fn symbol(&self) -> &LieSuperalgebra<F> {
        &self.m
    }

    fn n(&self) -> usize {
        self.m.dim()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self, t: usize) -> i32 {
        self.basis[t].degree
    }

    pub fn parity(&self, t: usize) -> Parity {
        self.basis[t].parity
    }

    /// Highest computed degree.
    pub fn top(&self) -> i32 {
        self.levels.last().map_or(-1, |l| l.degree)
    }

    pub fn level_superdim(&self, i: i32) -> SuperDim {
        let mut d = SuperDim::ZERO;
        if let Some(l) = self.level(i) {
            for t in l.range.clone() {
                d.count(self.parity(t));
            }
        }
        d
    }

    fn level(&self, i: i32) -> Option<&Level<F>> {
        (i >= 0).then(|| self.levels.get(i as usize)).flatten()
    }

    fn global_of_degree(&self, d: i32) -> Vec<usize> {
        if d >= 0 {
            self.level(d).map_or(Vec::new(), |l| l.range.clone().collect())
        } else {
            self.m.space().indices_of_degree(d)
        }
    }

    fn slots_for(&self, i: i32) -> HashMap<(usize, usize), usize> {
        let mut slots = HashMap::new();
        for a in 0..self.n() {
            for t in self.global_of_degree(i + self.m.degree(a)) {
                let k = slots.len();
                slots.insert((a, t), k);
            }
        }
        slots
    }

    fn flatten(slots: &HashMap<(usize, usize), usize>, r: &Realization<F>) -> Vec<F> {
        let mut v = vec![F::zero(); slots.len()];
        for (a, col) in r.iter().enumerate() {
            for (&t, x) in col {
                let k = slots
                    .get(&(a, t))
                    .unwrap_or_else(|| panic!("realization entry ({a},{t}) outside its degree"));
                v[*k] = x.clone();
            }
        }
        v
    }

    fn push_level(
        &mut self,
        degree: i32,
        names: Vec<String>,
        parities: Vec<Parity>,
        reals: Vec<Realization<F>>,
    ) -> Result<()> {
        let slots = self.slots_for(degree);
        let flat: Vec<Vec<F>> = reals.iter().map(|r| Self::flatten(&slots, r)).collect();
        let span = Span::from_basis(slots.len(), &flat)
            .ok_or_else(|| Error::Inconsistent(format!("degree {degree} basis is dependent")))?;
        let start = self.basis.len();
        for (name, p) in names.into_iter().zip(parities) {
            self.basis.push(BasisVector::new(name, degree, p));
        }
        self.real.extend(reals);
        self.levels.push(Level {
            degree,
            range: start..self.basis.len(),
            slots,
            span,
        });
        Ok(())
    }

    /// `[e_x, e_y]` for any two global indices, in global coordinates.
    pub fn bracket(&self, x: usize, y: usize) -> Result<SparseVec<F>> {
        let n = self.n();
        match (x < n, y < n) {
            (true, true) => Ok(self.m.bracket_basis(x, y)),
            (false, true) => Ok(self.real[x - n][y].clone()),
            (true, false) => {
                let s = F::from_i64(-self.parity(x).sign_with(self.parity(y)));
                let mut out = SparseVec::new();
                add_scaled(&mut out, &s, &self.real[y - n][x]);
                Ok(out)
            }
            (false, false) => {
                if let Some(v) = self.cache.borrow().get(&(x, y)) {
                    return Ok(v.clone());
                }
                let map = self.commutator_map(x, y)?;
                let d = self.degree(x) + self.degree(y);
                let v = self.solve_in_level(d, &map).ok_or_else(|| {
                    Error::Inconsistent(format!(
                        "[{}, {}] is not in g_{d}",
                        self.basis[x].name, self.basis[y].name
                    ))
                })?;
                self.cache.borrow_mut().insert((x, y), v.clone());
                Ok(v)
            }
        }
    }

    /// `[u, w]` for a non-negative basis element `u` and a tower vector `w`.
    fn act(&self, u: usize, w: &SparseVec<F>) -> Result<SparseVec<F>> {
        let mut out = SparseVec::new();
        for (&t, c) in w {
            add_scaled(&mut out, c, &self.bracket(u, t)?);
        }
        Ok(out)
    }

    /// `v ↦ [x,[y,v]] - (-1)^{|x||y|}[y,[x,v]]` on the symbol.
    fn commutator_map(&self, x: usize, y: usize) -> Result<Realization<F>> {
        let n = self.n();
        let s = F::from_i64(self.parity(x).sign_with(self.parity(y)));
        (0..n)
            .map(|v| {
                let mut out = self.act(x, &self.real[y - n][v])?;
                add_scaled(&mut out, &-s.clone(), &self.act(y, &self.real[x - n][v])?);
                Ok(out)
            })
            .collect()
    }

    /// Coordinates of a degree-`d` map in the basis of `g_d`. Beyond the top
    /// computed degree only the zero map is accepted.
    fn solve_in_level(&self, d: i32, map: &Realization<F>) -> Option<SparseVec<F>> {
        if map.iter().all(|c| c.is_empty()) {
            return Some(SparseVec::new());
        }
        let level = self.level(d)?;
        let coords = level.span.coords(&Self::flatten(&level.slots, map))?;
        let mut out = SparseVec::new();
        for (k, x) in coords.into_iter().enumerate() {
            add_entry(&mut out, level.range.start + k, x);
        }
        Some(out)
    }

    /// Solves for the full prolongation in degree `top() + 1` without adding
    /// it. Returns realizations grouped by parity.
    pub fn solve_next(&self) -> Result<Vec<(Parity, Realization<F>)>> {
        let i = self.top() + 1;
        let n = self.n();
        let mut out = Vec::new();
        for p in [Parity::Even, Parity::Odd] {
            let unknowns: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| {
                    self.global_of_degree(i + self.m.degree(a))
                        .into_iter()
                        .filter(move |&t| self.parity(t) == self.m.parity(a) + p)
                        .map(move |t| (a, t))
                })
                .collect();
            if unknowns.is_empty() {
                continue;
            }
            let mut rows: Vec<Vec<F>> = Vec::new();
            for a in 0..n {
                for b in a..n {
                    // u([a,b]) - [u(a), b] - (-1)^{p|a|} [a, u(b)] = 0
                    let ab = self.m.bracket_basis(a, b);
                    let sab = F::from_i64(p.sign_with(self.m.parity(a)));
                    let mut cols: Vec<SparseVec<F>> = Vec::with_capacity(unknowns.len());
                    for &(src, t) in &unknowns {
                        let mut col = SparseVec::new();
                        if let Some(c) = ab.get(&src) {
                            add_entry(&mut col, t, c.clone());
                        }
                        if src == a {
                            add_scaled(&mut col, &-F::one(), &self.bracket(t, b)?);
                        }
                        if src == b {
                            add_scaled(&mut col, &-sab.clone(), &self.bracket(a, t)?);
                        }
                        cols.push(col);
                    }
                    let outputs: std::collections::BTreeSet<usize> =
                        cols.iter().flat_map(|c| c.keys().copied()).collect();
                    for e in outputs {
                        rows.push(
                            cols.iter()
                                .map(|c| c.get(&e).cloned().unwrap_or_else(F::zero))
                                .collect(),
                        );
                    }
                }
            }
            let sys = ExactMatrix::from_rows(unknowns.len(), rows);
            for v in sys.kernel_basis() {
                let mut r: Realization<F> = vec![SparseVec::new(); n];
                for (k, &(a, t)) in unknowns.iter().enumerate() {
                    add_entry(&mut r[a], t, v[k].clone());
                }
                out.push((p, r));
            }
        }
        Ok(out)
    }

    /// Computes and appends the next component (full prolongation).
    pub fn step(&mut self) -> Result<SuperDim> {
        let sol = self.solve_next()?;
        self.push_solution(sol)
    }

    fn push_solution(&mut self, sol: Vec<(Parity, Realization<F>)>) -> Result<SuperDim> {
        let i = self.top() + 1;
        let mut d = SuperDim::ZERO;
        let mut names = Vec::new();
        let mut parities = Vec::new();
        let mut reals = Vec::new();
        for (p, r) in sol {
            d.count(p);
            names.push(format!("g{i}[{}]", names.len() + 1));
            parities.push(p);
            reals.push(r);
        }
        self.push_level(i, names, parities, reals)?;
        Ok(d)
    }

    /// Computes the next component, replaces it by the reduction, and
    /// appends it.
    pub fn step_reduced(&mut self, reduction: &Reduction<F>) -> Result<SuperDim> {
        let ell = self.top() + 1;
        let full = self.solve_next()?;
        let slots = self.slots_for(ell);
        let mut full_span = Span::new(slots.len());
        for (_, r) in &full {
            full_span.insert(&Self::flatten(&slots, r));
        }
        let candidates: Vec<Realization<F>> = match reduction {
            Reduction::All => return self.push_solution(full),
            Reduction::Zero => Vec::new(),
            Reduction::ProjectiveTrace => self.projective_trace(ell)?,
            Reduction::Span(v) => v.clone(),
        };
        // keep an independent subset, by parity
        let mut sub = Span::new(slots.len());
        let mut kept = Vec::new();
        for r in candidates {
            let parity = self.realization_parity(ell, &r).ok_or_else(|| {
                Error::InvalidParameter(format!("reduction at degree {ell}: element is not parity-homogeneous"))
            })?;
            let flat = Self::flatten(&slots, &r);
            if !full_span.contains(&flat) {
                return Err(Error::InvalidParameter(format!(
                    "reduction at degree {ell}: element outside the computed g_{ell}"
                )));
            }
            if sub.insert(&flat) {
                kept.push((parity, r));
            }
        }
        kept.sort_by_key(|(p, _)| *p);
        // [g_j, g_{ell-j}] ⊂ g_ell' for 1 ≤ j ≤ ell-1
        for j in 1..ell {
            let (Some(lj), Some(lk)) = (self.level(j), self.level(ell - j)) else {
                continue;
            };
            for x in lj.range.clone() {
                for y in lk.range.clone() {
                    let map = self.commutator_map(x, y)?;
                    if !sub.contains(&Self::flatten(&slots, &map)) {
                        return Err(Error::ReductionIncompatible { degree: ell, j, k: ell - j });
                    }
                }
            }
        }
        self.push_solution(kept)
    }

    fn realization_parity(&self, i: i32, r: &Realization<F>) -> Option<Parity> {
        let _ = i;
        let mut p = None;
        for (a, col) in r.iter().enumerate() {
            for &t in col.keys() {
                let q = self.parity(t) + self.m.parity(a);
                if *p.get_or_insert(q) != q {
                    return None;
                }
            }
        }
        Some(p.unwrap_or(Parity::Even))
    }

    fn projective_trace(&self, ell: i32) -> Result<Vec<Realization<F>>> {
        let n = self.n();
        if ell != 1 || (0..n).any(|i| self.m.degree(i) != -1) {
            return Err(Error::InvalidParameter(
                "trace reduction applies at degree 1 over an abelian g_{-1}".into(),
            ));
        }
        let level0 = self.level(0).expect("g0 present");
        let mut out = Vec::new();
        for k in 0..n {
            let mut r: Realization<F> = vec![SparseVec::new(); n];
            for (a, slot) in r.iter_mut().enumerate() {
                // the operator M_a = u_k(e_a) ∈ gl(V)
                let mut mat: Realization<F> = vec![SparseVec::new(); n];
                if a == k {
                    for (b, col) in mat.iter_mut().enumerate() {
                        add_entry(col, b, F::one());
                    }
                }
                let s = F::from_i64(self.m.parity(a).sign_with(self.m.parity(k)));
                add_entry(&mut mat[k], a, s);
                let coords = level0
                    .span
                    .coords(&Self::flatten(&level0.slots, &mat))
                    .ok_or_else(|| Error::InvalidParameter("trace reduction needs g0 = gl(V)".into()))?;
                for (c, x) in coords.into_iter().enumerate() {
                    add_entry(slot, level0.range.start + c, x);
                }
            }
            out.push(r);
        }
        Ok(out)
    }

    /// Realizations of every element of degree `i ≥ 0`.
    pub fn level_realizations(&self, i: i32) -> Vec<Realization<F>> {
        let n = self.n();
        self.level(i)
            .map_or(Vec::new(), |l| l.range.clone().map(|t| self.real[t - n].clone()).collect())
    }

    /// `ad(g_{-1})` is injective on every computed component.
    pub fn is_transitive(&self) -> bool {
        let minus_one = self.m.space().indices_of_degree(-1);
        self.levels.iter().all(|l| {
            let vecs: Vec<Vec<F>> = l
                .range
                .clone()
                .map(|t| {
                    let r = &self.real[t - self.n()];
                    minus_one
                        .iter()
                        .flat_map(|&a| to_dense(&r[a], self.dim()))
                        .collect()
                })
                .collect();
            vecs.is_empty() || ExactMatrix::from_rows(vecs[0].len(), vecs.clone()).rank() == vecs.len()
        })
    }

    /// The full graded algebra `m ⊕ g0 ⊕ … ⊕ g_top`.
    pub fn assemble(&self) -> Result<LieSuperalgebra<F>> {
        let space = GradedSuperSpace::new(self.basis.clone()).map_err(|e| Error::Inconsistent(e.to_string()))?;
        let mut alg = LieSuperalgebra::abelian(space);
        // increasing total degree keeps the recursion shallow
        let mut pairs: Vec<(usize, usize)> = (0..self.dim())
            .flat_map(|x| (x..self.dim()).map(move |y| (x, y)))
            .collect();
        pairs.sort_by_key(|&(x, y)| self.degree(x) + self.degree(y));
        for (x, y) in pairs {
            let v = self.bracket(x, y)?;
            if !v.is_empty() {
                alg.set_bracket(x, y, v);
            }
        }
        Ok(alg)
    }

    fn into_result(self, status: Status, reduced_degrees: Vec<i32>) -> Result<ProlongationResult<F>> {
        let algebra = match status {
            Status::Stabilized { .. } => Some(self.assemble()?),
            Status::Truncated { .. } => None,
        };
        let n = self.n();
        let components = self
            .levels
            .iter()
            .map(|l| ProlongationComponent {
                degree: l.degree,
                space: GradedSuperSpace::new(self.basis[l.range.clone()].to_vec()).expect("unique"),
                realization: l.range.clone().map(|t| self.real[t - n].clone()).collect(),
            })
            .collect();
        Ok(ProlongationResult {
            symbol: self.m,
            components,
            status,
            reduced_degrees,
            algebra,
        })
    }
}

/// Default cap: depth + 8.
pub fn default_max_degree<F: Field>(m: &LieSuperalgebra<F>) -> i32 {
    m.depth() + 8
}

/// `pr(m, g0)` with reductions at positive degrees, stopping at the first
/// zero component or at `max_degree`.
pub fn prolong<F: Field>(
    m: &LieSuperalgebra<F>,
    g0: G0<F>,
    reductions: &[(i32, Reduction<F>)],
    max_degree: Option<i32>,
) -> Result<ProlongationResult<F>> {
    let max_degree = max_degree.unwrap_or_else(|| default_max_degree(m));
    let mut red: BTreeMap<i32, &Reduction<F>> = BTreeMap::new();
    for (l, r) in reductions {
        if *l < 1 {
            return Err(Error::InvalidParameter(format!("reduction degree {l} must be ≥ 1")));
        }
        if red.insert(*l, r).is_some() {
            return Err(Error::InvalidParameter(format!("two reductions at degree {l}")));
        }
    }
    let mut p = Prolongation::new(m.clone(), g0)?;
    let mut reduced = Vec::new();
    if p.level_superdim(0).is_zero() {
        return p.into_result(Status::Stabilized { at: 0 }, reduced);
    }
    for i in 1..=max_degree {
        let d = match red.get(&i) {
            Some(r) => {
                reduced.push(i);
                p.step_reduced(r)?
            }
            None => p.step()?,
        };
        if d.is_zero() {
            return p.into_result(Status::Stabilized { at: i }, reduced);
        }
    }
    p.into_result(Status::Truncated { max_degree }, reduced)
}

impl<F: Field> ProlongationResult<F> {
    pub fn component_superdim(&self, i: i32) -> SuperDim {
        self.components
            .iter()
            .find(|c| c.degree == i)
            .map_or(SuperDim::ZERO, |c| c.space.superdim())
    }

    /// `dim m + Σ dim g_i`.
    pub fn total_superdim(&self) -> SuperDim {
        self.symbol.superdim() + self.components.iter().map(|c| c.space.superdim()).sum()
    }

    pub fn is_stabilized(&self) -> bool {
        matches!(self.status, Status::Stabilized { .. })
    }

    /// Superdimension of every degree, negative ones included.
    pub fn superdims_by_degree(&self) -> BTreeMap<i32, SuperDim> {
        let mut out = self.symbol.space().superdims_by_degree();
        for c in &self.components {
            out.insert(c.degree, c.space.superdim());
        }
        out
    }

    pub fn bound_sentence(&self) -> String {
        match self.status {
            Status::Stabilized { .. } => format!(
                "symmetry superalgebra dimension ≤ {} in the strong sense",
                self.total_superdim()
            ),
            Status::Truncated { max_degree } => format!("not stabilized by max_degree {max_degree}"),
        }
    }

    pub fn report(&self, with_algebra: bool) -> ProlongationReport {
        ProlongationReport {
            degrees: self
                .superdims_by_degree()
                .into_iter()
                .map(|(degree, d)| DegreeDims {
                    degree,
                    even: d.even,
                    odd: d.odd,
                })
                .collect(),
            total: DegreeTotal {
                even: self.total_superdim().even,
                odd: self.total_superdim().odd,
            },
            status: self.status,
            reduced_degrees: self.reduced_degrees.clone(),
            codomain_policy: "cumulative",
            bound: self.bound_sentence(),
            algebra: if with_algebra {
                self.algebra.as_ref().map(|a| a.to_json())
            } else {
                None
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeDims {
    pub degree: i32,
    pub even: usize,
    pub odd: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeTotal {
    pub even: usize,
    pub odd: usize,
}

/// JSON form of a prolongation.
#[derive(Clone, Debug, Serialize)]
pub struct ProlongationReport {
    pub degrees: Vec<DegreeDims>,
    pub total: DegreeTotal,
    #[serde(flatten)]
    pub status: Status,
    pub reduced_degrees: Vec<i32>,
    /// Reductions restrict the codomain of every later step.
    pub codomain_policy: &'static str,
    pub bound: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraJson>,
}
