//! Named algebras: symbols of geometric structures and matrix families.
//!
//! Matrix families act on `ℝ^{p|q}` with the `p` even basis vectors first.
//! Form-preserving families use the intrinsic condition
//! `B(Xu, v) + (-1)^{|X||u|} B(u, Xv) = 0` with `B(e_a, e_b) = B_ab`.

use super::LieSuperalgebra;
use crate::error::{Error, Result};
use crate::field::sparse::from_pairs;
use crate::field::{ExactMatrix, Field};
use crate::superspace::{BasisVector, GradedSuperSpace, Parity};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn rep(p: usize, q: usize) -> Vec<Parity> {
    let mut r = vec![Parity::Even; p];
    r.extend(vec![Parity::Odd; q]);
    r
}

fn elementary<F: Field>(d: usize, i: usize, j: usize) -> ExactMatrix<F> {
    let mut m = ExactMatrix::zeros(d, d);
    m[(i, j)] = F::one();
    m
}

fn e_name(d: usize, i: usize, j: usize) -> String {
    if d > 9 {
        format!("E{},{}", i + 1, j + 1)
    } else {
        format!("E{}{}", i + 1, j + 1)
    }
}

/// Abelian `g_{-1} = ℝ^{p|q}` with basis `x1.. | ξ1..`.
pub fn abelian_symbol<F: Field>(p: usize, q: usize) -> Result<LieSuperalgebra<F>> {
    let mut basis: Vec<BasisVector> = (1..=p)
        .map(|i| BasisVector::new(format!("x{i}"), -1, Parity::Even))
        .collect();
    basis.extend((1..=q).map(|i| BasisVector::new(format!("ξ{i}"), -1, Parity::Odd)));
    let space = GradedSuperSpace::new(basis).map_err(|e| invalid(e.to_string()))?;
    Ok(LieSuperalgebra::abelian(space))
}

/// `gl(p|q)` with basis `E_ij`.
pub fn gl<F: Field>(p: usize, q: usize) -> Result<LieSuperalgebra<F>> {
    let r = rep(p, q);
    let d = p + q;
    if d == 0 {
        return Err(invalid("gl(0|0)"));
    }
    let mut basis = Vec::new();
    let mut mats = Vec::new();
    for i in 0..d {
        for j in 0..d {
            basis.push(BasisVector::new(e_name(d, i, j), 0, r[i] + r[j]));
            mats.push(elementary(d, i, j));
        }
    }
    LieSuperalgebra::from_matrices(basis, r, mats)
}

/// Linear conditions on `gl(rep)` solved per parity; each constraint maps a
/// matrix to a list of values that must vanish.
fn solve_subalgebra<F: Field>(
    prefix: &str,
    r: &[Parity],
    constraints: &dyn Fn(&ExactMatrix<F>, Parity) -> Vec<F>,
) -> (Vec<BasisVector>, Vec<ExactMatrix<F>>) {
    let d = r.len();
    let mut basis = Vec::new();
    let mut mats = Vec::new();
    for p in [Parity::Even, Parity::Odd] {
        let unknowns: Vec<(usize, usize)> = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .filter(|&(i, j)| r[i] + r[j] == p)
            .collect();
        if unknowns.is_empty() {
            continue;
        }
        // constraint values are linear in the matrix, so evaluate on E_ij
        let cols: Vec<Vec<F>> = unknowns
            .iter()
            .map(|&(i, j)| constraints(&elementary(d, i, j), p))
            .collect();
        let nrows = cols[0].len();
        let rows: Vec<Vec<F>> = (0..nrows)
            .map(|k| cols.iter().map(|c| c[k].clone()).collect())
            .collect();
        let sys = ExactMatrix::from_rows(unknowns.len(), rows);
        for v in sys.kernel_basis() {
            let mut m = ExactMatrix::zeros(d, d);
            for (u, &(i, j)) in unknowns.iter().enumerate() {
                m[(i, j)] = v[u].clone();
            }
            basis.push(BasisVector::new(format!("{prefix}{}", mats.len() + 1), 0, p));
            mats.push(m);
        }
    }
    (basis, mats)
}

fn supertrace<F: Field>(m: &ExactMatrix<F>, r: &[Parity]) -> F {
    (0..r.len()).fold(F::zero(), |acc, i| {
        if r[i].is_odd() {
            acc - m[(i, i)].clone()
        } else {
            acc + m[(i, i)].clone()
        }
    })
}

fn form_conditions<F: Field>(b: &ExactMatrix<F>, r: &[Parity], x: &ExactMatrix<F>, p: Parity) -> Vec<F> {
    let d = r.len();
    let mut out = Vec::with_capacity(d * d);
    for u in 0..d {
        for v in 0..d {
            let mut val = F::zero();
            let s = F::from_i64(p.sign_with(r[u]));
            for c in 0..d {
                val = val + x[(c, u)].clone() * b[(c, v)].clone();
                val = val + s.clone() * x[(c, v)].clone() * b[(u, c)].clone();
            }
            out.push(val);
        }
    }
    out
}

/// Subalgebra of `gl(p|q)` preserving the bilinear form with Gram matrix `b`,
/// optionally intersected with `sl`.
pub fn form_preserving<F: Field>(
    prefix: &str,
    p: usize,
    q: usize,
    b: &ExactMatrix<F>,
    traceless: bool,
) -> Result<LieSuperalgebra<F>> {
    let r = rep(p, q);
    let constraints = |x: &ExactMatrix<F>, par: Parity| {
        let mut v = form_conditions(b, &r, x, par);
        if traceless {
            v.push(supertrace(x, &r));
        }
        v
    };
    let (basis, mats) = solve_subalgebra(prefix, &r, &constraints);
    LieSuperalgebra::from_matrices(basis, r, mats)
}

/// `sl(p|q)`: supertrace zero.
pub fn sl<F: Field>(p: usize, q: usize) -> Result<LieSuperalgebra<F>> {
    let r = rep(p, q);
    let (basis, mats) = solve_subalgebra("sl", &r, &|x: &ExactMatrix<F>, _| vec![supertrace(x, &r)]);
    LieSuperalgebra::from_matrices(basis, r, mats)
}

fn symplectic_block<F: Field>(b: &mut ExactMatrix<F>, offset: usize, n: usize) {
    for i in 0..n {
        b[(offset + i, offset + n + i)] = F::one();
        b[(offset + n + i, offset + i)] = -F::one();
    }
}

/// `osp(m|2n)`: even supersymmetric form `I_m ⊕ J_{2n}`. `rank` is `2n`.
pub fn osp<F: Field>(m: usize, rank: usize) -> Result<LieSuperalgebra<F>> {
    if !rank.is_multiple_of(2) {
        return Err(invalid(format!("osp({m}|{rank}): odd symplectic rank")));
    }
    let d = m + rank;
    let mut b = ExactMatrix::zeros(d, d);
    for i in 0..m {
        b[(i, i)] = F::one();
    }
    symplectic_block(&mut b, m, rank / 2);
    form_preserving("osp", m, rank, &b, false)
}

/// `spo(m|n)`: even skew-supersymmetric form, symplectic on the even part
/// and the identity on the odd part.
pub fn spo<F: Field>(m: usize, n: usize) -> Result<LieSuperalgebra<F>> {
    if !m.is_multiple_of(2) {
        return Err(invalid(format!("spo({m}|{n}): even part must have even dimension")));
    }
    let d = m + n;
    let mut b = ExactMatrix::zeros(d, d);
    symplectic_block(&mut b, 0, m / 2);
    for i in m..d {
        b[(i, i)] = F::one();
    }
    form_preserving("spo", m, n, &b, false)
}

/// Odd form on `ℝ^{n|n}`: `[[0, I], [I, 0]]`, or `[[0, I], [-I, 0]]` when skew.
fn periplectic_form<F: Field>(n: usize, skew: bool) -> ExactMatrix<F> {
    let mut b = ExactMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        b[(i, n + i)] = F::one();
        b[(n + i, i)] = if skew { -F::one() } else { F::one() };
    }
    b
}

/// Periplectic variants. `trace` restricts to supertrace zero, `extra` adds
/// an even diagonal element `a·τ + b·z` (`τ = diag(I, -I)`, `z = id`).
fn periplectic<F: Field>(
    prefix: &str,
    n: usize,
    skew: bool,
    traceless: bool,
    extra: Option<(F, F)>,
) -> Result<LieSuperalgebra<F>> {
    if n == 0 {
        return Err(invalid("periplectic family needs n ≥ 1"));
    }
    let r = rep(n, n);
    let b = periplectic_form::<F>(n, skew);
    let constraints = |x: &ExactMatrix<F>, par: Parity| {
        let mut v = form_conditions(&b, &r, x, par);
        if traceless {
            v.push(supertrace(x, &r));
        }
        v
    };
    let (mut basis, mut mats) = solve_subalgebra(prefix, &r, &constraints);
    if let Some((a, bb)) = extra {
        let mut m = ExactMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            m[(i, i)] = a.clone() + bb.clone();
            m[(n + i, n + i)] = bb.clone() - a.clone();
        }
        let name = if a.is_zero() {
            "z".to_string()
        } else if bb.is_zero() {
            "τ".to_string()
        } else {
            format!("τ+({})z", (bb / a).to_pretty())
        };
        basis.insert(0, BasisVector::new(name, 0, Parity::Even));
        mats.insert(0, m);
    }
    LieSuperalgebra::from_matrices(basis, r, mats)
}

pub fn pe<F: Field>(n: usize) -> Result<LieSuperalgebra<F>> {
    periplectic("pe", n, false, false, None)
}

pub fn spe<F: Field>(n: usize) -> Result<LieSuperalgebra<F>> {
    periplectic("spe", n, false, true, None)
}

pub fn cpe<F: Field>(n: usize) -> Result<LieSuperalgebra<F>> {
    periplectic("pe", n, false, false, Some((F::zero(), F::one())))
}

pub fn cspe<F: Field>(n: usize) -> Result<LieSuperalgebra<F>> {
    periplectic("spe", n, false, true, Some((F::zero(), F::one())))
}

/// `⟨aτ + bz⟩ ⋉ spe(n)`, depending only on `[a:b]`.
pub fn spe_ab<F: Field>(n: usize, a: F, b: F) -> Result<LieSuperalgebra<F>> {
    let (a, b) = normalize_projective(a, b)?;
    periplectic("spe", n, false, true, Some((a, b)))
}

pub fn pe_sk<F: Field>(n: usize) -> Result<LieSuperalgebra<F>> {
    periplectic("pesk", n, true, false, None)
}

pub fn spe_sk<F: Field>(n: usize) -> Result<LieSuperalgebra<F>> {
    periplectic("spesk", n, true, true, None)
}

pub fn cpe_sk<F: Field>(n: usize) -> Result<LieSuperalgebra<F>> {
    periplectic("pesk", n, true, false, Some((F::zero(), F::one())))
}

pub fn cspe_sk<F: Field>(n: usize) -> Result<LieSuperalgebra<F>> {
    periplectic("spesk", n, true, true, Some((F::zero(), F::one())))
}

/// Scales `(a, b)` so the first nonzero entry is one.
pub fn normalize_projective<F: Field>(a: F, b: F) -> Result<(F, F)> {
    if !a.is_zero() {
        Ok((F::one(), b / a))
    } else if !b.is_zero() {
        Ok((F::zero(), F::one()))
    } else {
        Err(invalid("[a:b] = [0:0]"))
    }
}

/// Heisenberg-type contact symbol `g_{-1} ⊕ ⟨z⟩` with `[u, v] = ω(u, v) z`,
/// `ω` standard symplectic on the even part and the identity on the odd part.
pub fn heisenberg_contact<F: Field>(p: usize, q: usize) -> Result<LieSuperalgebra<F>> {
    if !p.is_multiple_of(2) {
        return Err(invalid(format!("heisenberg({p}|{q}): even part must be even-dimensional")));
    }
    let k = p / 2;
    let mut basis = Vec::new();
    for i in 1..=k {
        basis.push(BasisVector::new(format!("x{i}"), -1, Parity::Even));
    }
    for i in 1..=k {
        basis.push(BasisVector::new(format!("y{i}"), -1, Parity::Even));
    }
    for i in 1..=q {
        basis.push(BasisVector::new(format!("ξ{i}"), -1, Parity::Odd));
    }
    basis.push(BasisVector::new("z", -2, Parity::Even));
    let z = basis.len() - 1;
    let mut alg = LieSuperalgebra::abelian(GradedSuperSpace::new(basis).expect("unique names"));
    for i in 0..k {
        alg.set_bracket(i, k + i, from_pairs([(z, F::one())]));
    }
    for i in 0..q {
        alg.set_bracket(p + i, p + i, from_pairs([(z, F::one())]));
    }
    Ok(alg)
}

/// Symbol of the SHC (G(3)-contact) superdistribution, growth (2|4, 1|2, 2|0).
pub fn shc_symbol<F: Field>() -> Result<LieSuperalgebra<F>> {
    use Parity::*;
    let spec: [(&str, i32, Parity); 11] = [
        ("e1", -1, Even),
        ("e2", -1, Even),
        ("θ1'", -1, Odd),
        ("θ1''", -1, Odd),
        ("θ2'", -1, Odd),
        ("θ2''", -1, Odd),
        ("h", -2, Even),
        ("ϱ1", -2, Odd),
        ("ϱ2", -2, Odd),
        ("f1", -3, Even),
        ("f2", -3, Even),
    ];
    let basis = spec
        .iter()
        .map(|&(n, d, p)| BasisVector::new(n, d, p))
        .collect();
    let mut m = LieSuperalgebra::abelian(GradedSuperSpace::new(basis).expect("unique names"));
    m.set_bracket_named("e1", "e2", &[("h", 1)]);
    m.set_bracket_named("e1", "h", &[("f1", 1)]);
    m.set_bracket_named("e2", "h", &[("f2", 1)]);
    m.set_bracket_named("θ1'", "θ2'", &[("h", 1)]);
    m.set_bracket_named("θ1''", "θ2''", &[("h", 1)]);
    m.set_bracket_named("e1", "θ2'", &[("ϱ1", 1)]);
    m.set_bracket_named("e2", "θ1''", &[("ϱ1", 1)]);
    m.set_bracket_named("e1", "θ2''", &[("ϱ2", 1)]);
    m.set_bracket_named("e2", "θ1'", &[("ϱ2", -1)]);
    m.set_bracket_named("θ1'", "ϱ1", &[("f1", 1)]);
    m.set_bracket_named("θ1''", "ϱ2", &[("f1", 1)]);
    m.set_bracket_named("θ2''", "ϱ1", &[("f2", 1)]);
    m.set_bracket_named("θ2'", "ϱ2", &[("f2", -1)]);
    Ok(m)
}

/// Symbol of an odd ODE of order `n`: `⟨X | θ1⟩ ⊕ ⟨θ2⟩ ⊕ … ⊕ ⟨θn⟩`,
/// `[X, θk] = θ(k+1)`.
pub fn odd_ode_symbol<F: Field>(n: usize) -> Result<LieSuperalgebra<F>> {
    if n < 2 {
        return Err(invalid("odd ODE symbol needs order ≥ 2"));
    }
    let mut basis = vec![BasisVector::new("X", -1, Parity::Even)];
    for k in 1..=n {
        basis.push(BasisVector::new(format!("θ{k}"), -(k as i32), Parity::Odd));
    }
    let mut m = LieSuperalgebra::abelian(GradedSuperSpace::new(basis).expect("unique names"));
    for k in 1..n {
        m.set_bracket(0, k, from_pairs([(k + 1, F::one())]));
    }
    Ok(m)
}

/// The grading scalings `T1 = diag(1, 0, 1, 2, …)` and `T2 = diag(0, 1, 1, …)`
/// of [`odd_ode_symbol`], as matrices on the symbol.
pub fn odd_ode_scalings<F: Field>(n: usize) -> Result<LieSuperalgebra<F>> {
    let m: LieSuperalgebra<F> = odd_ode_symbol(n)?;
    let d = m.dim();
    let mut t1 = ExactMatrix::zeros(d, d);
    let mut t2 = ExactMatrix::zeros(d, d);
    t1[(0, 0)] = F::one();
    for k in 1..=n {
        t1[(k, k)] = F::from_i64(k as i64 - 1);
        t2[(k, k)] = F::one();
    }
    let rep = (0..d).map(|i| m.parity(i)).collect();
    LieSuperalgebra::from_matrices(
        vec![
            BasisVector::new("T1", 0, Parity::Even),
            BasisVector::new("T2", 0, Parity::Even),
        ],
        rep,
        vec![t1, t2],
    )
}

/// `sl(2|1)` graded by `ad Z`, `Z = diag(-1, -2, -3)`, with the third basis
/// vector odd. Negative part `⟨E21 | E32⟩ ⊕ ⟨E31⟩`, Cartan `Z1, Z2`.
pub fn sl21_ode<F: Field>() -> Result<LieSuperalgebra<F>> {
    use Parity::*;
    let r = vec![Even, Even, Odd];
    let z = [-1i32, -2, -3];
    let mut basis = Vec::new();
    let mut mats = Vec::new();
    for (i, j) in [(1, 0), (2, 1), (2, 0)] {
        basis.push(BasisVector::new(e_name(3, i, j), z[i] - z[j], r[i] + r[j]));
        mats.push(elementary(3, i, j));
    }
    for (name, diag) in [("Z1", [0, -1, -1]), ("Z2", [-1, -1, -2])] {
        let mut m = ExactMatrix::zeros(3, 3);
        for (k, &x) in diag.iter().enumerate() {
            m[(k, k)] = F::from_i64(x);
        }
        basis.push(BasisVector::new(name, 0, Even));
        mats.push(m);
    }
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        basis.push(BasisVector::new(e_name(3, i, j), z[i] - z[j], r[i] + r[j]));
        mats.push(elementary(3, i, j));
    }
    LieSuperalgebra::from_matrices(basis, r, mats)
}

/// Pauli matrices `σ1, σ2, σ3` (requires `i`).
fn pauli<F: Field>() -> Result<[ExactMatrix<F>; 3]> {
    let i = F::imaginary_unit()
        .ok_or_else(|| invalid("supertranslation algebras need the field Qi"))?;
    let one = F::one;
    let zero = F::zero;
    Ok([
        ExactMatrix::from_rows(2, vec![vec![zero(), one()], vec![one(), zero()]]),
        ExactMatrix::from_rows(2, vec![vec![zero(), -i.clone()], vec![i, zero()]]),
        ExactMatrix::from_rows(2, vec![vec![one(), zero()], vec![zero(), -one()]]),
    ])
}

/// Default admissible form `ε ⊗ I_N`, `ε = [[0, 1], [-1, 0]]`.
pub fn default_admissible_form<F: Field>(copies: usize) -> ExactMatrix<F> {
    let mut b = ExactMatrix::zeros(2 * copies, 2 * copies);
    for a in 0..copies {
        b[(2 * a, 2 * a + 1)] = F::one();
        b[(2 * a + 1, 2 * a)] = -F::one();
    }
    b
}

/// Supertranslation algebra for `dim V = 3`: `V` in degree -2 (`e1, e2, e3`),
/// `N` copies of `S = ℂ²` in degree -1 (`s{A}{α}`), bracket
/// `[s, t] = Σ_k B(σ_k s, t) e_k` for the admissible form `B` on `S^N`.
pub fn supertranslation<F: Field>(copies: usize, form: &ExactMatrix<F>) -> Result<LieSuperalgebra<F>> {
    if copies == 0 {
        return Err(invalid("supertranslation needs N ≥ 1"));
    }
    let d = 2 * copies;
    if form.rows() != d || form.cols() != d {
        return Err(invalid(format!("admissible form must be {d}x{d}")));
    }
    let sig = pauli::<F>()?;
    let mut basis = Vec::new();
    for a in 1..=copies {
        for al in 1..=2 {
            basis.push(BasisVector::new(format!("s{a}{al}"), -1, Parity::Odd));
        }
    }
    for k in 1..=3 {
        basis.push(BasisVector::new(format!("e{k}"), -2, Parity::Even));
    }
    let mut m = LieSuperalgebra::abelian(GradedSuperSpace::new(basis).expect("unique names"));
    // coefficient of e_k in [s_u, s_v] = ((σ_k ⊗ I)^T B)_{uv}
    let coeff = |k: usize, u: usize, v: usize| -> F {
        let (cu, au) = (u / 2, u % 2);
        (0..2).fold(F::zero(), |acc, g| {
            acc + sig[k][(g, au)].clone() * form[(2 * cu + g, v)].clone()
        })
    };
    for u in 0..d {
        for v in u..d {
            let mut terms = Vec::new();
            for k in 0..3 {
                let c = coeff(k, u, v);
                if c != coeff(k, v, u) {
                    return Err(invalid("form is not admissible: bracket not symmetric"));
                }
                terms.push((d + k, c));
            }
            m.set_bracket(u, v, from_pairs(terms));
        }
    }
    Ok(m)
}

/// A catalog entry resolved from a name.
#[derive(Clone, Debug)]
pub enum Named<F> {
    /// A negatively graded symbol; prolong with its full degree-0 derivations
    /// unless a `g0` choice says otherwise.
    Symbol(LieSuperalgebra<F>),
    /// A symbol together with a fixed `g0` realized on it.
    SymbolWithG0 {
        symbol: LieSuperalgebra<F>,
        g0: LieSuperalgebra<F>,
    },
    /// A matrix algebra `g0 ⊂ gl(V)`; prolong the abelian `g_{-1} = V`.
    Holonomic(LieSuperalgebra<F>),
    /// A full graded algebra whose negative part is the symbol.
    Graded(LieSuperalgebra<F>),
}

fn parse_usize(name: &str, s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Parse(format!("{name}: expected a nonnegative integer, got {s:?}")))
}

/// Resolves a name such as `shc_symbol`, `odd_ode_symbol:3`, `cpe:2`,
/// `spe_ab:2:1:2`, `osp:3:2`, `heisenberg:2:0`, `supertranslation:2`.
pub fn build_named<F: Field>(name: &str) -> Result<Named<F>> {
    let parts: Vec<&str> = name.split(':').collect();
    let head = parts[0];
    let args = &parts[1..];
    let want = |k: usize| -> Result<()> {
        if args.len() == k {
            Ok(())
        } else {
            Err(Error::Parse(format!("{head} takes {k} parameter(s), got {}", args.len())))
        }
    };
    let n1 = || -> Result<usize> {
        want(1)?;
        parse_usize(head, args[0])
    };
    let n2 = || -> Result<(usize, usize)> {
        want(2)?;
        Ok((parse_usize(head, args[0])?, parse_usize(head, args[1])?))
    };
    let hol = |r: Result<LieSuperalgebra<F>>| r.map(Named::Holonomic);
    match head {
        "shc_symbol" | "shc" => {
            want(0)?;
            Ok(Named::Symbol(shc_symbol()?))
        }
        "odd_ode_symbol" => Ok(Named::Symbol(odd_ode_symbol(n1()?)?)),
        "odd_ode_scalings" => {
            let n = n1()?;
            Ok(Named::SymbolWithG0 {
                symbol: odd_ode_symbol(n)?,
                g0: odd_ode_scalings(n)?,
            })
        }
        "heisenberg" | "heisenberg_contact" => {
            let (p, q) = n2()?;
            Ok(Named::Symbol(heisenberg_contact(p, q)?))
        }
        "abelian" => {
            let (p, q) = n2()?;
            Ok(Named::Symbol(abelian_symbol(p, q)?))
        }
        "supertranslation" => {
            let n = n1()?;
            Ok(Named::Symbol(supertranslation(n, &default_admissible_form(n))?))
        }
        "sl21_ode" => {
            want(0)?;
            Ok(Named::Graded(sl21_ode()?))
        }
        "gl" => {
            let (p, q) = n2()?;
            hol(gl(p, q))
        }
        "sl" => {
            let (p, q) = n2()?;
            hol(sl(p, q))
        }
        "osp" => {
            let (m, r) = n2()?;
            hol(osp(m, r))
        }
        "spo" => {
            let (m, n) = n2()?;
            hol(spo(m, n))
        }
        "pe" => hol(pe(n1()?)),
        "spe" => hol(spe(n1()?)),
        "cpe" => hol(cpe(n1()?)),
        "cspe" => hol(cspe(n1()?)),
        "pe_sk" | "skew_pe" => hol(pe_sk(n1()?)),
        "spe_sk" | "skew_spe" => hol(spe_sk(n1()?)),
        "cpe_sk" | "skew_cpe" => hol(cpe_sk(n1()?)),
        "cspe_sk" | "skew_cspe" => hol(cspe_sk(n1()?)),
        "spe_ab" => {
            want(3)?;
            let n = parse_usize(head, args[0])?;
            let a = F::parse_scalar(args[1]).map_err(|e| Error::Parse(e.to_string()))?;
            let b = F::parse_scalar(args[2]).map_err(|e| Error::Parse(e.to_string()))?;
            hol(spe_ab(n, a, b))
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gaussian, Rational};
    use crate::liesuper::supercommutator;
    use crate::superspace::SuperDim;
    use num_traits::Zero;

    type Q = Rational;

    fn sd(e: usize, o: usize) -> SuperDim {
        SuperDim::new(e, o)
    }

    #[test]
    fn shc_symbol_growth_and_validity() {
        let m: LieSuperalgebra<Q> = shc_symbol().unwrap();
        let dims = m.space().superdims_by_degree();
        assert_eq!(dims[&-1], sd(2, 4));
        assert_eq!(dims[&-2], sd(1, 2));
        assert_eq!(dims[&-3], sd(2, 0));
        assert!(m.validate().is_ok());
        assert!(m.check_fundamental_nondegenerate().is_ok());
    }

    #[test]
    fn shc_table_mutations() {
        // [e1,e2] = h only feeds brackets with h that vanish on both sides,
        // so dropping it still leaves a Lie superalgebra
        let mut m: LieSuperalgebra<Q> = shc_symbol().unwrap();
        let (e1, e2, h) = (m.index_of("e1").unwrap(), m.index_of("e2").unwrap(), m.index_of("h").unwrap());
        m.remove_bracket(e1, e2);
        assert!(m.validate().is_ok());
        assert!(m.check_fundamental_nondegenerate().fundamental);

        // dropping [e1,h] = f1 breaks [θ1',[θ2',e1]] = [[θ1',θ2'],e1] - [θ2',[θ1',e1]]
        let mut m: LieSuperalgebra<Q> = shc_symbol().unwrap();
        m.remove_bracket(e1, h);
        let r = m.validate();
        assert!(r.violations.iter().all(|v| matches!(v, crate::liesuper::Violation::Jacobi { .. })));
        assert!(r.violations.contains(&crate::liesuper::Violation::Jacobi {
            a: "e1".into(),
            b: "θ1'".into(),
            c: "θ2'".into(),
        }));
    }

    #[test]
    fn odd_ode_symbols() {
        let m: LieSuperalgebra<Q> = odd_ode_symbol(2).unwrap();
        assert_eq!(m.bracket_basis(0, 1), from_pairs([(2, Q::from_i64(1))]));
        assert_eq!(m.space().superdim_at(-1), sd(1, 1));
        assert_eq!(m.space().superdim_at(-2), sd(0, 1));
        let m3: LieSuperalgebra<Q> = odd_ode_symbol(3).unwrap();
        assert!(m3.validate().is_ok());
        assert!(m3.check_fundamental_nondegenerate().is_ok());
        assert_eq!(m3.degree(3), -3);
    }

    #[test]
    fn matrix_family_dimensions() {
        assert_eq!(gl::<Q>(2, 1).unwrap().superdim(), sd(5, 4));
        assert_eq!(sl::<Q>(2, 1).unwrap().superdim(), sd(4, 4));
        for n in 1..=3 {
            let nn = n * n;
            assert_eq!(pe::<Q>(n).unwrap().superdim(), sd(nn, nn));
            assert_eq!(spe::<Q>(n).unwrap().superdim(), sd(nn - 1, nn));
            assert_eq!(cpe::<Q>(n).unwrap().superdim(), sd(nn + 1, nn));
            assert_eq!(cspe::<Q>(n).unwrap().superdim(), sd(nn, nn));
            assert_eq!(pe_sk::<Q>(n).unwrap().superdim(), sd(nn, nn));
            assert_eq!(spe_ab::<Q>(n, Q::from_i64(1), Q::from_i64(2)).unwrap().superdim(), sd(nn, nn));
        }
        // osp(m|2n) = (m(m-1)/2 + n(2n+1) | 2mn)
        assert_eq!(osp::<Q>(2, 2).unwrap().superdim(), sd(1 + 3, 4));
        assert_eq!(osp::<Q>(3, 2).unwrap().superdim(), sd(3 + 3, 6));
        assert_eq!(osp::<Q>(4, 4).unwrap().superdim(), sd(6 + 10, 16));
        assert_eq!(osp::<Q>(1, 4).unwrap().superdim(), sd(10, 4));
        assert_eq!(spo::<Q>(0, 3).unwrap().superdim(), sd(3, 0));
        assert_eq!(spo::<Q>(2, 1).unwrap().superdim(), sd(3, 2));
        assert!(osp::<Q>(2, 3).is_err());
    }

    #[test]
    fn periplectic_blocks_match_the_parametrization() {
        // even part [[A, 0], [0, -A^T]], odd part [[0, B], [C, 0]], B = B^T, C = -C^T
        let n = 2;
        let g: LieSuperalgebra<Q> = pe(n).unwrap();
        let r = g.realization().unwrap();
        for (k, m) in r.matrices.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    if g.parity(k) == Parity::Even {
                        assert_eq!(m[(n + i, n + j)], -m[(j, i)].clone());
                        assert!(m[(i, n + j)].is_zero() && m[(n + i, j)].is_zero());
                    } else {
                        assert_eq!(m[(i, n + j)], m[(j, n + i)]);
                        assert_eq!(m[(n + i, j)], -m[(n + j, i)].clone());
                    }
                }
            }
        }
        // skew variant swaps the symmetric and skew blocks
        let s: LieSuperalgebra<Q> = pe_sk(n).unwrap();
        for (k, m) in s.realization().unwrap().matrices.iter().enumerate() {
            if s.parity(k).is_odd() {
                for i in 0..n {
                    for j in 0..n {
                        assert_eq!(m[(i, n + j)], -m[(j, n + i)].clone());
                        assert_eq!(m[(n + i, j)], m[(n + j, i)]);
                    }
                }
            }
        }
    }

    /// `X^{st} P + (-1)^{|X|} P X = 0` with
    /// `X^{st} = [[A^T, (-1)^{|X|} C^T], [-(-1)^{|X|} B^T, D^T]]`.
    #[test]
    fn supertranspose_membership_for_pe() {
        let n = 2;
        let g: LieSuperalgebra<Q> = pe(n).unwrap();
        let p = periplectic_form::<Q>(n, false);
        for (k, x) in g.realization().unwrap().matrices.iter().enumerate() {
            let sgn = if g.parity(k).is_odd() { -1 } else { 1 };
            let mut st = ExactMatrix::<Q>::zeros(2 * n, 2 * n);
            for i in 0..n {
                for j in 0..n {
                    st[(i, j)] = x[(j, i)].clone();
                    st[(n + i, n + j)] = x[(n + j, n + i)].clone();
                    st[(i, n + j)] = Q::from_i64(sgn) * x[(n + j, i)].clone();
                    st[(n + i, j)] = Q::from_i64(-sgn) * x[(j, n + i)].clone();
                }
            }
            let lhs = st.mul(&p);
            let rhs = p.mul(x);
            for i in 0..2 * n {
                for j in 0..2 * n {
                    assert!((lhs[(i, j)].clone() + Q::from_i64(sgn) * rhs[(i, j)].clone()).is_zero());
                }
            }
        }
    }

    #[test]
    fn spe_ab_depends_only_on_ratio() {
        let a: LieSuperalgebra<Q> = spe_ab(2, Q::from_i64(2), Q::from_i64(4)).unwrap();
        let b: LieSuperalgebra<Q> = spe_ab(2, Q::from_i64(1), Q::from_i64(2)).unwrap();
        assert_eq!(a.realization(), b.realization());
        let pe_like: LieSuperalgebra<Q> = spe_ab(2, Q::from_i64(3), Q::from_i64(0)).unwrap();
        assert_eq!(pe_like.superdim(), pe::<Q>(2).unwrap().superdim());
    }

    #[test]
    fn brackets_are_supercommutators() {
        for g in [pe::<Q>(2).unwrap(), osp::<Q>(3, 2).unwrap(), sl21_ode::<Q>().unwrap()] {
            let r = g.realization().unwrap().clone();
            for a in 0..g.dim() {
                for b in 0..g.dim() {
                    let c = supercommutator(&r.matrices[a], g.parity(a), &r.matrices[b], g.parity(b));
                    let mut via = ExactMatrix::<Q>::zeros(r.rep.len(), r.rep.len());
                    for (k, x) in g.bracket_basis(a, b) {
                        for i in 0..r.rep.len() {
                            for j in 0..r.rep.len() {
                                via[(i, j)] = via[(i, j)].clone() + x.clone() * r.matrices[k][(i, j)].clone();
                            }
                        }
                    }
                    assert_eq!(c, via);
                }
            }
        }
    }

    #[test]
    fn sl21_grading() {
        let g: LieSuperalgebra<Q> = sl21_ode().unwrap();
        assert_eq!(g.superdim(), sd(4, 4));
        assert!(g.validate().is_ok());
        let m = g.negative_part().unwrap();
        assert_eq!(m.space().superdim_at(-1), sd(1, 1));
        assert_eq!(m.space().superdim_at(-2), sd(0, 1));
        assert!(m.check_fundamental_nondegenerate().is_ok());
    }

    #[test]
    fn supertranslation_needs_gaussian() {
        assert!(supertranslation::<Q>(1, &default_admissible_form(1)).is_err());
        for n in 1..=2 {
            let m: LieSuperalgebra<Gaussian> = supertranslation(n, &default_admissible_form(n)).unwrap();
            assert_eq!(m.superdim(), sd(3, 2 * n));
            assert!(m.validate().is_ok());
            assert!(m.check_fundamental_nondegenerate().is_ok());
        }
        let mut bad = ExactMatrix::<Gaussian>::identity(2);
        bad[(0, 1)] = Gaussian::from_i64(1);
        assert!(supertranslation(1, &bad).is_err());
    }

    #[test]
    fn catalog_validates_for_small_parameters() {
        for p in 0..=3 {
            for q in 0..=3 {
                if p + q == 0 {
                    continue;
                }
                assert!(gl::<Q>(p, q).unwrap().validate().is_ok(), "gl({p}|{q})");
                assert!(sl::<Q>(p, q).unwrap().validate().is_ok(), "sl({p}|{q})");
            }
        }
        for m in 0..=4 {
            for r in [0, 2, 4] {
                if m + r > 0 {
                    assert!(osp::<Q>(m, r).unwrap().validate().is_ok(), "osp({m}|{r})");
                    assert!(spo::<Q>(r, m).unwrap().validate().is_ok(), "spo({r}|{m})");
                }
            }
        }
        for n in 1..=3 {
            for g in [
                pe::<Q>(n),
                spe(n),
                cpe(n),
                cspe(n),
                pe_sk(n),
                spe_sk(n),
                cpe_sk(n),
                cspe_sk(n),
                spe_ab(n, Q::from_i64(1), Q::from_i64(2)),
            ] {
                assert!(g.unwrap().validate().is_ok());
            }
        }
        for (p, q) in [(2, 0), (2, 1), (0, 2), (4, 1)] {
            assert!(heisenberg_contact::<Q>(p, q).unwrap().validate().is_ok());
        }
        for n in 2..=4 {
            assert!(odd_ode_symbol::<Q>(n).unwrap().validate().is_ok());
        }
    }

    #[test]
    fn names_resolve() {
        assert!(matches!(build_named::<Q>("shc_symbol").unwrap(), Named::Symbol(_)));
        assert!(matches!(build_named::<Q>("skew_cpe:2").unwrap(), Named::Holonomic(_)));
        assert!(matches!(build_named::<Q>("spe_ab:2:1:2").unwrap(), Named::Holonomic(_)));
        assert!(matches!(build_named::<Q>("nope").unwrap_err(), Error::UnknownName(_)));
        assert!(matches!(build_named::<Q>("cpe").unwrap_err(), Error::Parse(_)));
        assert!(build_named::<Q>("supertranslation:1").is_err());
        assert!(build_named::<Gaussian>("supertranslation:1").is_ok());
    }

    #[test]
    fn json_round_trip() {
        let m: LieSuperalgebra<Q> = shc_symbol().unwrap();
        let back = LieSuperalgebra::<Q>::from_json_str(&m.to_json_string()).unwrap();
        assert_eq!(back.to_json(), m.to_json());
        let g: LieSuperalgebra<Gaussian> = supertranslation(1, &default_admissible_form(1)).unwrap();
        let s = g.to_json_string();
        assert!(LieSuperalgebra::<Q>::from_json_str(&s).is_err());
        let back = LieSuperalgebra::<Gaussian>::from_json_str(&s).unwrap();
        assert_eq!(back.to_json(), g.to_json());
        let p: LieSuperalgebra<Q> = pe(2).unwrap();
        let back = LieSuperalgebra::<Q>::from_json_str(&p.to_json_string()).unwrap();
        assert_eq!(back.realization(), p.realization());
    }
}
