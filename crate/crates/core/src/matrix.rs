//! Dense integer matrices, just enough linear algebra for homological
//! monodromy and Smith normal form.

use serde::Serialize;
use std::fmt;
use std::ops::{Index, IndexMut, Mul};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c));
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Columns are the given vectors.
    pub fn from_columns(cols: &[Vec<i64>], dim: usize) -> Self {
        let mut m = Self::zeros(dim, cols.len());
        for (j, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), dim);
            for (i, &x) in v.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn det(&self) -> i64 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| self[(i, j)] as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                    return 0;
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        (sign * a[n - 1][n - 1]) as i64
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul<&IntMatrix> for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Invariant factors `d_1 | d_2 | ...` of an integer matrix, together with
/// the rank deficiency of the cokernel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmithForm {
    /// Nonzero diagonal factors, each dividing the next, all positive.
    pub factors: Vec<i64>,
    /// Rank of the free part of the cokernel (`rows - #factors`).
    pub coker_free_rank: usize,
}

impl SmithForm {
    /// True if the cokernel is the trivial group.
    pub fn coker_is_trivial(&self) -> bool {
        self.coker_free_rank == 0 && self.factors.iter().all(|&d| d == 1)
    }

    /// Torsion factors greater than one.
    pub fn torsion(&self) -> Vec<i64> {
        self.factors.iter().copied().filter(|&d| d > 1).collect()
    }

    /// Render the cokernel as an abelian group, e.g. `Z^2 + Z/3`.
    pub fn coker_string(&self) -> String {
        let mut parts = Vec::new();
        if self.coker_free_rank > 0 {
            parts.push(if self.coker_free_rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.coker_free_rank)
            });
        }
        for d in self.torsion() {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Smith normal form of `m`, as its list of invariant factors.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut a: Vec<Vec<i128>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)] as i128).collect())
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut factors = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        // Find a pivot of minimal absolute value in the remaining block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if a[i][j] != 0
                    && pivot.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        // Reduce row and column against the pivot until it divides
        // everything it meets.
        loop {
            let mut done = true;
            for i in k + 1..rows {
                let q = a[i][k].div_euclid(a[k][k]);
                if q != 0 {
                    for j in k..cols {
                        a[i][j] -= q * a[k][j];
                    }
                }
                if a[i][k] != 0 {
                    // Remainder is smaller than the pivot; swap it up.
                    a.swap(k, i);
                    done = false;
                }
            }
            for j in k + 1..cols {
                let q = a[k][j].div_euclid(a[k][k]);
                if q != 0 {
                    for row in a.iter_mut().take(rows).skip(k) {
                        row[j] -= q * row[k];
                    }
                }
                if a[k][j] != 0 {
                    for row in a.iter_mut().take(rows).skip(k) {
                        row.swap(k, j);
                    }
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        // Enforce divisibility into the rest of the block.
        let mut retry = false;
        'scan: for i in k + 1..rows {
            for j in k + 1..cols {
                if a[i][j] % a[k][k] != 0 {
                    for jj in k..cols {
                        let add = a[i][jj];
                        a[k][jj] += add;
                    }
                    retry = true;
                    break 'scan;
                }
            }
        }
        if retry {
            continue;
        }
        factors.push(a[k][k].unsigned_abs() as i64);
        k += 1;
    }
    SmithForm {
        coker_free_rank: rows - factors.len(),
        factors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_identity_and_scalars() {
        let snf = smith_normal_form(&IntMatrix::identity(3));
        assert_eq!(snf.factors, vec![1, 1, 1]);
        assert!(snf.coker_is_trivial());

        let snf = smith_normal_form(&IntMatrix::from_rows(vec![vec![2]]));
        assert_eq!(snf.factors, vec![2]);
        assert_eq!(snf.coker_string(), "Z/2");

        let snf = smith_normal_form(&IntMatrix::zeros(2, 3));
        assert_eq!(snf.factors, Vec::<i64>::new());
        assert_eq!(snf.coker_free_rank, 2);
        assert_eq!(snf.coker_string(), "Z^2");
    }

    #[test]
    fn smith_classic_example() {
        let m = IntMatrix::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.factors, vec![2, 2, 156]);
    }

    #[test]
    fn det_matches_cofactor_small() {
        let m = IntMatrix::from_rows(vec![vec![3, 1], vec![4, 2]]);
        assert_eq!(m.det(), 2);
        let m = IntMatrix::from_rows(vec![vec![0, 1, 2], vec![1, 0, 3], vec![4, 5, 6]]);
        // Cofactor expansion by hand: 0*(0*6-3*5) - 1*(1*6-3*4) + 2*(1*5-0*4) = 16.
        assert_eq!(m.det(), 16);
    }
}
