use super::Field;

/// Incrementally built span of vectors with coordinate recovery.
///
/// Vectors are inserted one at a time; dependent insertions are rejected, so
/// the accepted vectors always form a basis of the span. `coords` expresses a
/// vector in that basis, or returns `None` when it lies outside.
#[derive(Clone, Debug)]
pub struct Span<F> {
    dim: usize,
    // reduced rows: (pivot column, row, combination of accepted vectors)
    rows: Vec<(usize, Vec<F>, Vec<F>)>,
    accepted: usize,
}

impl<F: Field> Span<F> {
    pub fn new(dim: usize) -> Self {
        Span {
            dim,
            rows: Vec::new(),
            accepted: 0,
        }
    }

    /// Span of `vectors`; `None` if they are linearly dependent.
    pub fn from_basis(dim: usize, vectors: &[Vec<F>]) -> Option<Self> {
        let mut s = Span::new(dim);
        for v in vectors {
            if !s.insert(v) {
                return None;
            }
        }
        Some(s)
    }

    pub fn len(&self) -> usize {
        self.accepted
    }

    pub fn is_empty(&self) -> bool {
        self.accepted == 0
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Residual of `v` after reduction, with the combination used.
    fn reduce(&self, v: &[F]) -> (Vec<F>, Vec<F>) {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut r = v.to_vec();
        let mut comb = vec![F::zero(); self.accepted];
        for (p, row, c) in &self.rows {
            let f = r[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
            for (x, y) in comb.iter_mut().zip(c) {
                if !y.is_zero() {
                    *x = x.clone() + f.clone() * y.clone();
                }
            }
        }
        (r, comb)
    }

    /// Inserts `v` if it is independent of the current span.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let (r, comb) = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let piv = r[p].clone();
        let row: Vec<F> = r.into_iter().map(|x| x / piv.clone()).collect();
        // new basis element e_new = v; row = (v - sum comb_k e_k) / piv
        let mut c: Vec<F> = comb.into_iter().map(|x| -x / piv.clone()).collect();
        c.push(F::one() / piv);
        for (_, _, old) in &mut self.rows {
            old.push(F::zero());
        }
        // keep existing rows reduced at the new pivot
        for (_, orow, oc) in &mut self.rows {
            let f = orow[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in orow.iter_mut().zip(&row) {
                *x = x.clone() - f.clone() * y.clone();
            }
            for (x, y) in oc.iter_mut().zip(&c) {
                *x = x.clone() - f.clone() * y.clone();
            }
        }
        self.rows.push((p, row, c));
        self.accepted += 1;
        true
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).0.iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the accepted basis.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        let (r, comb) = self.reduce(v);
        r.iter().all(|x| x.is_zero()).then_some(comb)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_i64(x)).collect()
    }

    #[test]
    fn coordinates_recover_combinations() {
        let basis = [v(&[1, 2, 0, 1]), v(&[0, 1, 1, 0]), v(&[2, 0, 1, 3])];
        let s = Span::from_basis(4, &basis).unwrap();
        let target: Vec<Rational> = (0..4)
            .map(|j| {
                basis[0][j].clone() * Rational::from_i64(3) - basis[1][j].clone()
                    + basis[2][j].clone() * Rational::from_ratio(1, 2)
            })
            .collect();
        assert_eq!(
            s.coords(&target).unwrap(),
            vec![Rational::from_i64(3), Rational::from_i64(-1), Rational::from_ratio(1, 2)]
        );
        assert!(s.coords(&v(&[0, 0, 0, 1])).is_none());
    }

    #[test]
    fn dependent_insert_rejected() {
        let mut s = Span::new(2);
        assert!(s.insert(&v(&[1, 1])));
        assert!(!s.insert(&v(&[2, 2])));
        assert!(!s.insert(&v(&[0, 0])));
        assert!(s.insert(&v(&[0, 1])));
        assert_eq!(s.len(), 2);
        assert!(Span::from_basis(2, &[v(&[1, 0]), v(&[3, 0])]).is_none());
    }
}
