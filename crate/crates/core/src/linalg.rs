//! Small dense matrices and Gaussian elimination over a [`Scalar`].

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Dense<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Dense<S> {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let data = (0..rows * cols).map(|n| f(n / cols, n % cols)).collect();
        Dense { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn at(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    fn at_mut(&mut self, r: usize, c: usize) -> &mut S {
        &mut self.data[r * self.cols + c]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        Self::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).fold(S::zero(), |acc, n| {
                acc + self.at(r, n).clone() * other.at(n, c).clone()
            })
        })
    }

    /// Row of the entry in `col` (rows `from..`) with the largest magnitude
    /// among those that are nonzero.
    fn pivot_row(&self, col: usize, from: usize) -> Option<usize> {
        (from..self.rows)
            .filter(|&r| !self.at(r, col).is_zero())
            .max_by(|&a, &b| {
                let (x, y) = (
                    self.at(a, col).to_f64().abs(),
                    self.at(b, col).to_f64().abs(),
                );
                x.total_cmp(&y).then(b.cmp(&a))
            })
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = m.pivot_row(col, row) else {
                continue;
            };
            m.swap_rows(row, p);
            let lead = m.at(row, col).clone();
            for c in 0..m.cols {
                let v = m.at(row, c).clone() / lead.clone();
                *m.at_mut(row, c) = v;
            }
            *m.at_mut(row, col) = S::one();
            for r in (0..m.rows).filter(|&r| r != row) {
                let factor = m.at(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in 0..m.cols {
                    let v = m.at(r, c).clone() - factor.clone() * m.at(row, c).clone();
                    *m.at_mut(r, c) = v;
                }
                *m.at_mut(r, col) = S::zero();
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> S {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return S::one();
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = S::one();
        for k in 0..n - 1 {
            let Some(p) = m.pivot_row(k, k) else {
                return S::zero();
            };
            if p != k {
                m.swap_rows(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.at(i, j).clone() * m.at(k, k).clone()
                        - m.at(i, k).clone() * m.at(k, j).clone())
                        / prev.clone();
                    *m.at_mut(i, j) = v;
                }
            }
            prev = m.at(k, k).clone();
        }
        let d = m.at(n - 1, n - 1).clone();
        if negate {
            -d
        } else {
            d
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.at(r, c).clone()
            } else if c - n == r {
                S::one()
            } else {
                S::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| red.at(r, c + n).clone()))
    }

    /// Basis of `{v : M v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let (red, pivots) = self.rref();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![S::zero(); self.cols];
                v[free] = S::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -red.at(row, free).clone();
                }
                v
            })
            .collect()
    }

    /// One solution of `M x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![S::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = red.at(row, self.cols).clone();
        }
        Some(x)
    }

    /// Moore-Penrose inverse through a full-rank factorization `M = B C`:
    /// `M⁺ = Cᵀ (C Cᵀ)⁻¹ (Bᵀ B)⁻¹ Bᵀ`.
    ///
    /// `B` holds the pivot columns of `M` and `C` the nonzero rows of its
    /// reduced echelon form, so both have full rank `r` and the two `r × r`
    /// Gram matrices are invertible.
    pub fn mp_inverse(&self) -> Self {
        let (red, pivots) = self.rref();
        let r = pivots.len();
        if r == 0 {
            return Self::zeros(self.cols, self.rows);
        }
        let b = Self::from_fn(self.rows, r, |row, k| self.at(row, pivots[k]).clone());
        let c = Self::from_fn(r, self.cols, |k, col| red.at(k, col).clone());
        let (bt, ct) = (b.transpose(), c.transpose());
        let cct_inv = c.mul(&ct).inverse().expect("C has full row rank");
        let btb_inv = bt.mul(&b).inverse().expect("B has full column rank");
        ct.mul(&cct_inv).mul(&btb_inv).mul(&bt)
    }
}
