//! Dense linear algebra over F_p: Gaussian elimination, rank, solving,
//! inverses and kernels. Everything is exact; dimensions here are desk scale
//! (a few hundred at most), so dense row reduction is the right tool.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl FpMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FpMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = FpMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        FpMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn mul(&self, f: &Field, other: &FpMat) -> FpMat {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = FpMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other[(k, j)];
                    if b != 0 {
                        out[(i, j)] = f.add(out[(i, j)], f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, f: &Field, mut e: u64) -> FpMat {
        assert_eq!(self.rows, self.cols);
        let mut acc = FpMat::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            base = base.mul(f, &base);
            e >>= 1;
        }
        acc
    }

    pub fn transpose(&self) -> FpMat {
        let mut out = FpMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// Row echelon form in place; returns pivot columns.
    fn echelon(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            for j in 0..self.cols {
                let tmp = self[(r, j)];
                self[(r, j)] = self[(pr, j)];
                self[(pr, j)] = tmp;
            }
            let inv = f.inv(self[(r, c)]).expect("pivot nonzero");
            for j in 0..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i != r && self[(i, c)] != 0 {
                    let factor = self[(i, c)];
                    for j in 0..self.cols {
                        let v = f.mul(factor, self[(r, j)]);
                        self[(i, j)] = f.sub(self[(i, j)], v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &Field) -> usize {
        let mut m = self.clone();
        m.echelon(f).len()
    }

    /// Solves `self * x = b` for a single right-hand side.
    pub fn solve(&self, f: &Field, b: &[Scalar]) -> Result<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let sols = self.solve_many(f, &FpMat::from_rows(b.iter().map(|&x| vec![x]).collect()))?;
        Ok((0..self.cols).map(|i| sols[(i, 0)]).collect())
    }

    /// Solves `self * X = B` column by column. Errors if any column is
    /// inconsistent. Free variables are set to zero.
    pub fn solve_many(&self, f: &Field, b: &FpMat) -> Result<FpMat> {
        assert_eq!(b.rows, self.rows);
        let mut aug = FpMat::zeros(self.rows, self.cols + b.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            for j in 0..b.cols {
                aug[(i, self.cols + j)] = b[(i, j)];
            }
        }
        let pivots = aug.echelon(f);
        // any pivot in the augmented block means inconsistency
        if pivots.iter().any(|&c| c >= self.cols) {
            return Err(Error::InconsistentSystem("no solution".into()));
        }
        let mut x = FpMat::zeros(self.cols, b.cols);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(c, j)] = aug[(r, self.cols + j)];
            }
        }
        Ok(x)
    }

    /// Exact inverse; errors with the computed rank when singular.
    pub fn inverse(&self, f: &Field) -> Result<FpMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = FpMat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = 1;
        }
        let pivots = aug.echelon(f);
        let rank = pivots.iter().filter(|&&c| c < n).count();
        if rank < n {
            return Err(Error::RankDeficient { rank, need: n });
        }
        let mut inv = FpMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)];
            }
        }
        Ok(inv)
    }

    /// A left inverse `g` with `g * self = id` for a full-column-rank matrix.
    pub fn left_inverse(&self, f: &Field) -> Result<FpMat> {
        let rank = self.rank(f);
        if rank < self.cols {
            return Err(Error::RankDeficient {
                rank,
                need: self.cols,
            });
        }
        // solve self^T * self * G^T = self^T (Gram is invertible only over R;
        // over F_p use elimination on [self | I] instead)
        let n = self.rows;
        let mut aug = FpMat::zeros(n, self.cols + n);
        for i in 0..n {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols + i)] = 1;
        }
        aug.echelon(f);
        // rows 0..cols now read x_j = sum of transformed identity columns
        let mut g = FpMat::zeros(self.cols, n);
        for i in 0..self.cols {
            for j in 0..n {
                g[(i, j)] = aug[(i, self.cols + j)];
            }
        }
        Ok(g)
    }

    /// Basis of the right kernel (vectors v with `self * v = 0`).
    pub fn kernel(&self, f: &Field) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.echelon(f);
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = f.neg(m[(r, free)]);
            }
            basis.push(v);
        }
        basis
    }
}

impl std::ops::Index<(usize, usize)> for FpMat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FpMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_rank() {
        let f = Field::new(5).unwrap();
        let m = FpMat::from_rows(vec![vec![1, 2], vec![3, 4]]);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&f, &inv), FpMat::identity(2));
        assert_eq!(inv.mul(&f, &m), FpMat::identity(2));
        let sing = FpMat::from_rows(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(sing.rank(&f), 1);
        assert!(sing.inverse(&f).is_err());
    }

    #[test]
    fn solve_and_kernel() {
        let f = Field::new(7).unwrap();
        let m = FpMat::from_rows(vec![vec![1, 2, 3], vec![0, 1, 4]]);
        let ker = m.kernel(&f);
        assert_eq!(ker.len(), 1);
        for v in &ker {
            for i in 0..2 {
                let s = (0..3).fold(0, |acc, j| f.add(acc, f.mul(m[(i, j)], v[j])));
                assert_eq!(s, 0);
            }
        }
        let x = m.solve(&f, &[6, 5]).unwrap();
        for i in 0..2 {
            let s = (0..3).fold(0, |acc, j| f.add(acc, f.mul(m[(i, j)], x[j])));
            assert_eq!(s, [6, 5][i]);
        }
    }

    #[test]
    fn left_inverse_tall() {
        let f = Field::new(5).unwrap();
        let m = FpMat::from_rows(vec![vec![1, 0], vec![2, 1], vec![3, 3]]);
        let g = m.left_inverse(&f).unwrap();
        assert_eq!(g.mul(&f, &m), FpMat::identity(2));
        let zero = FpMat::zeros(3, 2);
        assert!(zero.left_inverse(&f).is_err());
    }
}
