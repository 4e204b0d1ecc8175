use super::LieSuperalgebra;
use crate::error::Result;
use crate::field::sparse::add_scaled;
use crate::field::{ExactMatrix, Field, SparseVec};
use crate::superspace::{BasisVector, GradedSuperSpace, Parity};

/// Graded superderivations of fixed degree, realized as matrices on the
/// algebra: column `a` of a matrix holds the coordinates of `D(e_a)`.
#[derive(Clone, Debug)]
pub struct Derivations<F> {
    pub space: GradedSuperSpace,
    pub matrices: Vec<ExactMatrix<F>>,
}

impl<F: Field> Derivations<F> {
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// The derivations as a Lie superalgebra acting on `m`.
    pub fn to_algebra(&self, m: &LieSuperalgebra<F>) -> Result<LieSuperalgebra<F>> {
        let rep = (0..m.dim()).map(|i| m.parity(i)).collect();
        LieSuperalgebra::from_matrices(self.space.basis().to_vec(), rep, self.matrices.clone())
    }
}

/// All degree-`d` derivations of `m`, both parities.
pub fn derivations_gr<F: Field>(m: &LieSuperalgebra<F>, d: i32) -> Derivations<F> {
    solve(m, d, |_, _| true)
}

/// Degree-0 derivations acting diagonally on the basis (the grading-type
/// scalings).
pub fn diagonal_derivations<F: Field>(m: &LieSuperalgebra<F>) -> Derivations<F> {
    solve(m, 0, |a, c| a == c)
}

fn solve<F: Field>(
    m: &LieSuperalgebra<F>,
    d: i32,
    allowed: impl Fn(usize, usize) -> bool,
) -> Derivations<F> {
    let n = m.dim();
    let mut basis = Vec::new();
    let mut matrices = Vec::new();
    for p in [Parity::Even, Parity::Odd] {
        let unknowns: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |c| (a, c)))
            .filter(|&(a, c)| {
                m.degree(c) == m.degree(a) + d && m.parity(c) == m.parity(a) + p && allowed(a, c)
            })
            .collect();
        if unknowns.is_empty() {
            continue;
        }
        let col = |a: usize, c: usize| unknowns.iter().position(|&u| u == (a, c));
        let mut rows: Vec<Vec<F>> = Vec::new();
        for a in 0..n {
            for b in a..n {
                // per output coordinate: sum over unknowns
                let mut eq: Vec<SparseVec<F>> = vec![SparseVec::new(); unknowns.len()];
                for (k, ck) in m.bracket_basis(a, b) {
                    for (u, &(src, tgt)) in unknowns.iter().enumerate() {
                        if src == k {
                            crate::field::sparse::add_entry(&mut eq[u], tgt, ck.clone());
                        }
                    }
                }
                let s = F::from_i64(p.sign_with(m.parity(a)));
                for (u, &(src, tgt)) in unknowns.iter().enumerate() {
                    if src == a {
                        add_scaled(&mut eq[u], &-F::one(), &m.bracket_basis(tgt, b));
                    }
                    if src == b {
                        add_scaled(&mut eq[u], &-s.clone(), &m.bracket_basis(a, tgt));
                    }
                }
                for e in 0..n {
                    let row: Vec<F> = eq
                        .iter()
                        .map(|v| v.get(&e).cloned().unwrap_or_else(F::zero))
                        .collect();
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let sys = ExactMatrix::from_rows(unknowns.len(), rows);
        for v in sys.kernel_basis() {
            let mut mat = ExactMatrix::zeros(n, n);
            for a in 0..n {
                for c in 0..n {
                    if let Some(u) = col(a, c) {
                        mat[(c, a)] = v[u].clone();
                    }
                }
            }
            let k = basis.len() + 1;
            let name = if d == 0 { format!("D{k}") } else { format!("D({d}){k}") };
            basis.push(BasisVector::new(name, d, p));
            matrices.push(mat);
        }
    }
    Derivations {
        space: GradedSuperSpace::new(basis).expect("generated names are unique"),
        matrices,
    }
}

/// Direct check of `D[x,y] = [Dx,y] + (-1)^{|D||x|}[x,Dy]` on all basis pairs.
pub fn check_derivation<F: Field>(m: &LieSuperalgebra<F>, mat: &ExactMatrix<F>, parity: Parity) -> bool {
    let n = m.dim();
    let apply = |v: &SparseVec<F>| -> SparseVec<F> {
        let mut out = SparseVec::new();
        for (&k, x) in v {
            for c in 0..n {
                crate::field::sparse::add_entry(&mut out, c, x.clone() * mat[(c, k)].clone());
            }
        }
        out
    };
    let unit = |i: usize| -> SparseVec<F> { [(i, F::one())].into_iter().collect() };
    for a in 0..n {
        for b in 0..n {
            let lhs = apply(&m.bracket_basis(a, b));
            let mut rhs = m.bracket_sparse(&apply(&unit(a)), &unit(b));
            let s = F::from_i64(parity.sign_with(m.parity(a)));
            add_scaled(&mut rhs, &s, &m.bracket_sparse(&unit(a), &apply(&unit(b))));
            let mut diff = lhs;
            add_scaled(&mut diff, &-F::one(), &rhs);
            if !diff.is_empty() {
                return false;
            }
        }
    }
    true
}
