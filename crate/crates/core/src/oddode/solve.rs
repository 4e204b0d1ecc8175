//! Contact symmetries of odd ODEs `ξ^{(n)} = F(x, ξ, …, ξ^{(n-1)})` by an
//! exact ansatz `f = Σ c_α(x) μ_α`, `μ_α ∈ {1, ξ, ξ′, ξξ′}`.

use std::collections::BTreeSet;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::jet::{lagrange_bracket, prolong_field, JetAlgebra, JetFn, JetMonomial, Q};
use crate::error::{Error, Result};
use crate::field::{ExactMatrix, Field, SparseVec, Span};
use crate::liesuper::{catalog, LieSuperalgebra};
use crate::prolong::{prolong, G0};
use crate::superspace::{BasisVector, GradedSuperSpace, Parity, SuperDim};

pub const DEFAULT_POLY_DEGREE: u32 = 4;

/// Coefficient functions `x^k e^{λx}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionBasis {
    pub poly_degree: u32,
    pub exponentials: Vec<Q>,
}

impl FunctionBasis {
    pub fn polynomial(poly_degree: u32) -> Self {
        FunctionBasis {
            poly_degree,
            exponentials: Vec::new(),
        }
    }

    pub fn with_exponentials(mut self, lambdas: impl IntoIterator<Item = Q>) -> Self {
        for l in lambdas {
            if !l.is_zero() && !self.exponentials.contains(&l) {
                self.exponentials.push(l);
            }
        }
        self
    }

    /// `x^k e^{λx}`, `k ≤ poly_degree`, `λ ∈ {0} ∪ exponentials`; highest
    /// degree first.
    pub fn elements(&self, alg: &JetAlgebra) -> Vec<JetFn> {
        let lambdas = std::iter::once(Q::zero()).chain(self.exponentials.iter().cloned());
        lambdas
            .flat_map(|l| {
                let e = alg.exp(vec![l]);
                (0..=self.poly_degree).rev().map(move |k| (k, e.clone()))
            })
            .map(|(k, mut f)| {
                for _ in 0..k {
                    f = alg.mul(&f, &alg.x(0));
                }
                f
            })
            .collect()
    }

    pub fn check_closed(&self, alg: &JetAlgebra) -> Result<()> {
        let elems = self.elements(alg);
        let keys = key_index(elems.iter());
        let mut span = Span::new(keys.len());
        for e in &elems {
            span.insert(&flatten(e, &keys));
        }
        for e in &elems {
            let d = alg.diff_x(e, 0);
            let inside = d.terms.keys().all(|m| keys.contains(m)) && span.contains(&flatten(&d, &keys));
            if !inside {
                return Err(Error::InvalidParameter(format!(
                    "ansatz basis not closed under d/dx: d/dx({}) = {}",
                    alg.format(e),
                    alg.format(&d)
                )));
            }
        }
        Ok(())
    }
}

fn key_index<'a>(fs: impl Iterator<Item = &'a JetFn>) -> Vec<JetMonomial> {
    let set: BTreeSet<JetMonomial> = fs.flat_map(|f| f.terms.keys().cloned()).collect();
    set.into_iter().collect()
}

fn flatten(f: &JetFn, keys: &[JetMonomial]) -> Vec<Q> {
    keys.iter().map(|k| f.terms.get(k).cloned().unwrap_or_else(Q::zero)).collect()
}

/// `ξ^{(n)} = rhs`, `rhs` odd and of order `< n`.
#[derive(Clone, Debug)]
pub struct OdeSpec {
    pub order: usize,
    pub alg: JetAlgebra,
    pub rhs: JetFn,
    pub basis: FunctionBasis,
    /// Set when characteristic roots were left out of the basis.
    pub basis_note: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OdeJson {
    pub order: usize,
    pub rhs: String,
    #[serde(default)]
    pub basis: Option<BasisJson>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct BasisJson {
    #[serde(default)]
    pub poly_degree: Option<u32>,
    #[serde(default)]
    pub exponentials: Vec<ScalarJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Int(i64),
    Str(String),
}

impl ScalarJson {
    fn value(&self) -> Result<Q> {
        match self {
            ScalarJson::Int(n) => Ok(Q::from_integer((*n).into())),
            ScalarJson::Str(s) => <Q as Field>::parse_scalar(s).map_err(|e| Error::Parse(e.0)),
        }
    }
}

impl OdeSpec {
    /// Polynomial basis of the given degree plus the rational characteristic
    /// exponentials of a constant-coefficient linear right-hand side.
    pub fn new(order: usize, rhs: &str, poly_degree: u32) -> Result<Self> {
        Self::with_basis(order, rhs, FunctionBasis::polynomial(poly_degree), true)
    }

    pub fn with_basis(order: usize, rhs: &str, basis: FunctionBasis, auto_exponentials: bool) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidParameter("ODE order must be at least 2".into()));
        }
        let alg = JetAlgebra::new(1, order)?;
        let rhs = alg.parse(rhs)?;
        if !rhs.is_zero() && rhs.parity() != Some(Parity::Odd) {
            return Err(Error::InvalidParameter("right-hand side must be odd".into()));
        }
        let top = 1u64 << alg.xi(order);
        if rhs.terms.keys().any(|m| m.odd & top != 0) {
            return Err(Error::InvalidParameter(format!("right-hand side must have order < {order}")));
        }
        let mut spec = OdeSpec {
            order,
            alg,
            rhs,
            basis,
            basis_note: None,
        };
        if auto_exponentials {
            if let Some((roots, complete)) = spec.characteristic_roots() {
                let lambdas = exponent_lattice(&roots);
                spec.basis = spec.basis.clone().with_exponentials(lambdas);
                if !complete {
                    spec.basis_note = Some("characteristic polynomial has irrational or complex roots; basis may be incomplete".into());
                }
            }
        }
        spec.basis.check_closed(&spec.alg)?;
        Ok(spec)
    }

    pub fn from_json(j: &OdeJson) -> Result<Self> {
        let b = j.basis.clone().unwrap_or_default();
        let lambdas = b.exponentials.iter().map(ScalarJson::value).collect::<Result<Vec<_>>>()?;
        let basis = FunctionBasis::polynomial(b.poly_degree.unwrap_or(DEFAULT_POLY_DEGREE)).with_exponentials(lambdas);
        Self::with_basis(j.order, &j.rhs, basis, true)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }

    pub fn equation(&self) -> String {
        format!("{} = {}", self.alg.odd_name(self.alg.xi(self.order)), self.alg.format(&self.rhs))
    }

    /// Rational roots (with multiplicity) of `λ^n - Σ a_k λ^k` when the
    /// right-hand side is `Σ a_k ξ^{(k)}` with constant `a_k`; the flag says
    /// whether every root is rational.
    pub fn characteristic_roots(&self) -> Option<(Vec<Q>, bool)> {
        let mut coeffs = vec![Q::zero(); self.order + 1];
        coeffs[self.order] = Q::one();
        for (m, c) in &self.rhs.terms {
            let linear = m.odd.count_ones() == 1 && m.x[0] == 0 && m.lambda[0].is_zero();
            if !linear {
                return None;
            }
            let k = (0..self.alg.odd_count()).find(|&k| m.odd == 1 << k)?;
            coeffs[self.alg.multi_index(k).len()] -= c.clone();
        }
        Some(rational_roots(coeffs))
    }

    /// Unknowns `(μ, c)` ordered `μ ∈ [ξξ′, ξ, ξ′, 1]`, then by basis element.
    fn unknowns(&self) -> Vec<JetFn> {
        let a = &self.alg;
        let (xi, xi1) = (a.odd_var(a.xi(0)), a.odd_var(a.xi(1)));
        let mus = [a.mul(&xi, &xi1), xi, xi1, a.one()];
        let elems = self.basis.elements(a);
        mus.iter()
            .flat_map(|mu| elems.iter().map(move |c| a.mul(c, mu)))
            .collect()
    }

    /// `S_f^{(n)}(ξ^{(n)} - rhs)` restricted to the equation.
    pub fn determining(&self, f: &JetFn) -> Result<JetFn> {
        let a = &self.alg;
        let field = prolong_field(a, f, self.order)?;
        let top = a.xi(self.order);
        let e = field.coeffs[1 + top].sub(&field.apply(a, &self.rhs));
        Ok(a.substitute(&e, top, &self.rhs))
    }

    /// Is `S_f` a symmetry?
    pub fn is_symmetry(&self, f: &JetFn) -> Result<bool> {
        Ok(self.determining(f)?.is_zero())
    }
}

/// Nonzero `i·λ + j·μ`, `i, j ∈ -2..=2`, over pairs of characteristic roots.
fn exponent_lattice(roots: &[Q]) -> Vec<Q> {
    let distinct: Vec<Q> = roots.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let mut out = BTreeSet::new();
    for l in &distinct {
        for m in &distinct {
            for i in -2i64..=2 {
                for j in -2i64..=2 {
                    let v = l * Q::from_integer(i.into()) + m * Q::from_integer(j.into());
                    if !v.is_zero() {
                        out.insert(v);
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Rational roots with multiplicity of `Σ c_k λ^k`; the flag is true when
/// the polynomial splits over ℚ.
pub fn rational_roots(mut coeffs: Vec<Q>) -> (Vec<Q>, bool) {
    let mut roots = Vec::new();
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    loop {
        let deg = coeffs.len().saturating_sub(1);
        if deg == 0 {
            return (roots, true);
        }
        if coeffs[0].is_zero() {
            roots.push(Q::zero());
            coeffs.remove(0);
            continue;
        }
        // integer coefficients
        let lcm = coeffs.iter().fold(num_bigint::BigInt::one(), |l, c| num_integer::Integer::lcm(&l, c.denom()));
        let ints: Vec<num_bigint::BigInt> = coeffs.iter().map(|c| (c * Q::from_integer(lcm.clone())).to_integer()).collect();
        let found = candidates(&ints[0], &ints[deg]).into_iter().find(|r| eval(&coeffs, r).is_zero());
        match found {
            Some(r) => {
                coeffs = deflate(&coeffs, &r);
                roots.push(r);
            }
            None => return (roots, false),
        }
    }
}

fn divisors(n: &num_bigint::BigInt) -> Vec<num_bigint::BigInt> {
    let n = n.abs().to_u64().unwrap_or(0);
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(Into::into).collect()
}

fn candidates(c0: &num_bigint::BigInt, lead: &num_bigint::BigInt) -> Vec<Q> {
    let mut out = Vec::new();
    for p in divisors(c0) {
        for q in divisors(lead) {
            let r = Q::new(p.clone(), q);
            out.push(r.clone());
            out.push(-r);
        }
    }
    out
}

fn eval(coeffs: &[Q], x: &Q) -> Q {
    coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

fn deflate(coeffs: &[Q], r: &Q) -> Vec<Q> {
    let n = coeffs.len() - 1;
    let mut out = vec![Q::zero(); n];
    let mut carry = Q::zero();
    for k in (1..=n).rev() {
        carry = &coeffs[k] + carry * r;
        out[k - 1] = carry.clone();
    }
    out
}

/// One contact symmetry `S_f`.
#[derive(Clone, Debug)]
pub struct Symmetry {
    pub f: JetFn,
    /// Parity of `S_f`, i.e. `|f| + 1`.
    pub parity: Parity,
    /// Eigenvalue grading; `None` when `f` is not an eigenvector.
    pub grade: Option<i32>,
}

#[derive(Clone, Debug)]
pub struct SymmetryResult {
    pub alg: JetAlgebra,
    pub order: usize,
    pub generators: Vec<Symmetry>,
    pub algebra: LieSuperalgebra<Q>,
    pub basis_note: Option<String>,
}

impl SymmetryResult {
    pub fn superdim(&self) -> SuperDim {
        self.algebra.superdim()
    }

    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| self.alg.format(&g.f)).collect()
    }

    pub fn index_of(&self, f: &str) -> Option<usize> {
        let f = self.alg.parse(f).ok()?;
        self.generators.iter().position(|g| g.f == f)
    }

    /// `[f_a, f_b]` as generating functions.
    pub fn bracket_table(&self) -> Result<Vec<Vec<JetFn>>> {
        self.generators
            .iter()
            .map(|a| {
                self.generators
                    .iter()
                    .map(|b| lagrange_bracket(&self.alg, &a.f, &b.f))
                    .collect()
            })
            .collect()
    }

    /// `dim pr(m, g0)` for the odd ODE symbol of this order with its grading
    /// scalings.
    pub fn bound(&self) -> Result<SuperDim> {
        pr_bound(self.order)
    }
}

pub fn pr_bound(order: usize) -> Result<SuperDim> {
    let m: LieSuperalgebra<Q> = catalog::odd_ode_symbol(order)?;
    let g0 = catalog::odd_ode_scalings(order)?;
    Ok(prolong(&m, G0::Given(g0), &[], None)?.total_superdim())
}

/// `E = xξ′ - nξ`; `grade(f) = -c` when `[E, f] = c f`.
pub fn grade(alg: &JetAlgebra, order: usize, f: &JetFn) -> Result<Option<i32>> {
    let e = alg
        .mul(&alg.x(0), &alg.odd_var(alg.xi(1)))
        .sub(&alg.odd_var(alg.xi(0)).scale(&Q::from_integer((order as i64).into())));
    let ef = lagrange_bracket(alg, &e, f)?;
    let Some((m, c)) = f.terms.iter().next() else {
        return Ok(None);
    };
    let ratio = ef.terms.get(m).cloned().unwrap_or_else(Q::zero) / c;
    if ef != f.scale(&ratio) || !ratio.is_integer() {
        return Ok(None);
    }
    Ok((-ratio).to_integer().to_i32())
}

pub fn determine_symmetries(spec: &OdeSpec) -> Result<SymmetryResult> {
    let unknowns = spec.unknowns();
    let images = unknowns.iter().map(|f| spec.determining(f)).collect::<Result<Vec<_>>>()?;
    let a1 = JetAlgebra::new(1, 1)?;
    let mut found: Vec<JetFn> = Vec::new();
    for class in [Parity::Odd, Parity::Even] {
        let cols: Vec<usize> = (0..unknowns.len())
            .filter(|&u| unknowns[u].parity() == Some(class))
            .collect();
        let keys = key_index(cols.iter().map(|&u| &images[u]));
        let mut m = ExactMatrix::zeros(keys.len(), cols.len());
        for (j, &u) in cols.iter().enumerate() {
            for (i, v) in flatten(&images[u], &keys).into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        let kernel = m.kernel_basis();
        if kernel.is_empty() {
            continue;
        }
        let (r, pivots) = ExactMatrix::from_rows(cols.len(), kernel).rref();
        for i in 0..pivots.len() {
            let mut f = JetFn::default();
            for (j, &u) in cols.iter().enumerate() {
                f = f.add(&unknowns[u].scale(&r[(i, j)]));
            }
            found.push(spec.alg.embed(&f, &a1)?);
        }
    }
    let mut generators = found
        .into_iter()
        .map(|f| {
            let parity = f.parity().expect("homogeneous") + Parity::Odd;
            let grade = grade(&a1, spec.order, &f)?;
            Ok(Symmetry { f, parity, grade })
        })
        .collect::<Result<Vec<_>>>()?;
    // even first, then by grade descending
    generators.sort_by_key(|g| (g.parity, std::cmp::Reverse(g.grade.map_or(i64::MIN, i64::from))));
    let algebra = symmetry_algebra(&a1, &generators)?;
    Ok(SymmetryResult {
        alg: a1,
        order: spec.order,
        generators,
        algebra,
        basis_note: spec.basis_note.clone(),
    })
}

fn symmetry_algebra(alg: &JetAlgebra, gens: &[Symmetry]) -> Result<LieSuperalgebra<Q>> {
    let graded = gens.iter().all(|g| g.grade.is_some());
    let basis = gens
        .iter()
        .map(|g| BasisVector::new(alg.format(&g.f), if graded { g.grade.unwrap() } else { 0 }, g.parity))
        .collect();
    let space = GradedSuperSpace::new(basis).map_err(|e| Error::Inconsistent(e.to_string()))?;
    let mut out = LieSuperalgebra::abelian(space);
    let mut brackets = Vec::new();
    for a in 0..gens.len() {
        for b in a..gens.len() {
            brackets.push((a, b, lagrange_bracket(alg, &gens[a].f, &gens[b].f)?));
        }
    }
    let keys = key_index(gens.iter().map(|g| &g.f).chain(brackets.iter().map(|t| &t.2)));
    let mut span = Span::new(keys.len());
    for g in gens {
        span.insert(&flatten(&g.f, &keys));
    }
    for (a, b, br) in brackets {
        let c = span.coords(&flatten(&br, &keys)).ok_or_else(|| {
            Error::Inconsistent(format!(
                "[{}, {}] = {} lies outside the computed symmetries; basis may be incomplete",
                alg.format(&gens[a].f),
                alg.format(&gens[b].f),
                alg.format(&br)
            ))
        })?;
        let v: SparseVec<Q> = c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        if !v.is_empty() {
            out.set_bracket(a, b, v);
        }
    }
    let report = out.validate();
    if !report.is_ok() {
        return Err(Error::Inconsistent(format!("symmetry algebra: {}", report.violations[0])));
    }
    Ok(out)
}
