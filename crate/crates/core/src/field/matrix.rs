use std::fmt;

use super::Field;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq)]
pub struct ExactMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds from row vectors. All rows must share `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        ExactMatrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| F::from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let v = out[(i, j)].clone() + a.clone() * b.clone();
                        out[(i, j)] = v;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        ExactMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Fraction-free (Bareiss) forward elimination. Returns the echelon form
    /// and the pivot columns. Pivot choice: first nonzero entry of the
    /// column, scanning rows top-down.
    fn bareiss(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut prev = F::one();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let piv = a[(r, c)].clone();
            for i in r + 1..a.rows {
                let f = a[(i, c)].clone();
                for j in c..a.cols {
                    let v = (piv.clone() * a[(i, j)].clone() - f.clone() * a[(r, j)].clone())
                        / prev.clone();
                    a[(i, j)] = v;
                }
            }
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let (mut a, pivots) = self.bareiss();
        for (r, &c) in pivots.iter().enumerate().rev() {
            let piv = a[(r, c)].clone();
            for j in 0..a.cols {
                let v = a[(r, j)].clone() / piv.clone();
                a[(r, j)] = v;
            }
            for i in 0..r {
                let f = a[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..a.cols {
                    let v = a[(i, j)].clone() - f.clone() * a[(r, j)].clone();
                    a[(i, j)] = v;
                }
            }
        }
        for i in pivots.len()..a.rows {
            for j in 0..a.cols {
                a[(i, j)] = F::zero();
            }
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    /// Basis of the right kernel `{v : M v = 0}`. Each vector has its first
    /// nonzero entry equal to one. An empty matrix with `cols > 0` yields the
    /// standard basis.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -r[(row, free)].clone();
            }
            normalize_leading(&mut v);
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Scales `v` so that its first nonzero entry is one.
pub(crate) fn normalize_leading<F: Field>(v: &mut [F]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        for x in v.iter_mut() {
            *x = x.clone() / lead.clone();
        }
    }
}

impl<F> std::ops::Index<(usize, usize)> for ExactMatrix<F> {
    type Output = F;

    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for ExactMatrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Debug> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}
