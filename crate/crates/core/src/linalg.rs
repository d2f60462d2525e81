//! Dense exact linear algebra over the rationals: reduced row echelon form,
//! ranks, null spaces and linear solves. Small matrices only; everything is
//! computed with `Scalar` arithmetic, no pivot-size heuristics.

use crate::kernel::Scalar;
use num::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> QMat {
        QMat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> QMat {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> QMat {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_cols(cols: Vec<Vec<Scalar>>) -> QMat {
        let c = cols.len();
        let r = cols.first().map(|col| col.len()).unwrap_or(0);
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        let mut m = QMat::zeros(r, c);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = QMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &v[j])
                    .fold(Scalar::zero(), |a, b| a + b)
            })
            .collect()
    }

    pub fn add(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (QMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = Scalar::one() / m.get(r, c).clone();
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of { v : A v = 0 }, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of A x = b, if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len(), "dimension mismatch");
        let mut aug = QMat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent system
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Some(x)
    }
}

/// Row-space basis of the given vectors, as canonical RREF rows.
pub fn row_space_basis(vectors: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (r, pivots) = QMat::from_rows(vectors.to_vec()).rref();
    (0..pivots.len()).map(|i| r.row(i)).collect()
}

/// Coordinates of `v` in the span of `basis` (as columns), if it lies there.
pub fn coordinates_in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> Option<Vec<Scalar>> {
    if basis.is_empty() {
        return if v.iter().all(|c| c.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    QMat::from_cols(basis.to_vec()).solve(v)
}

/// Reduce `v` modulo the row space of `rref_rows` (which must be RREF rows
/// with the given pivot columns): subtract the unique combination matching
/// `v` on the pivot coordinates.
pub fn reduce_mod_rows(rref_rows: &[Vec<Scalar>], pivots: &[usize], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = v.to_vec();
    for (row, &pc) in rref_rows.iter().zip(pivots) {
        if out[pc].is_zero() {
            continue;
        }
        let f = out[pc].clone();
        for (o, r) in out.iter_mut().zip(row) {
            *o = &*o - &(&f * r);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{ratio, scalar};

    #[test]
    fn rref_rank_nullspace() {
        let m = QMat::from_rows(vec![
            vec![scalar(1), scalar(2), scalar(3)],
            vec![scalar(2), scalar(4), scalar(6)],
            vec![scalar(1), scalar(0), scalar(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = QMat::from_rows(vec![
            vec![scalar(1), scalar(1)],
            vec![scalar(1), scalar(-1)],
        ]);
        let x = m.solve(&[scalar(3), scalar(1)]).unwrap();
        assert_eq!(x, vec![scalar(2), scalar(1)]);

        let sing = QMat::from_rows(vec![
            vec![scalar(1), scalar(1)],
            vec![scalar(2), scalar(2)],
        ]);
        assert!(sing.solve(&[scalar(0), scalar(1)]).is_none());
        assert!(sing.solve(&[scalar(1), scalar(2)]).is_some());
    }

    #[test]
    fn reduce_mod_rows_projects() {
        let rows = vec![vec![scalar(1), scalar(0), ratio(1, 2)]];
        let pivots = vec![0];
        let v = vec![scalar(2), scalar(3), scalar(5)];
        let red = reduce_mod_rows(&rows, &pivots, &v);
        assert_eq!(red, vec![scalar(0), scalar(3), scalar(4)]);
    }

    #[test]
    fn coordinates_in_span_works() {
        let basis = vec![
            vec![scalar(1), scalar(0), scalar(1)],
            vec![scalar(0), scalar(1), scalar(1)],
        ];
        let c = coordinates_in_span(&basis, &[scalar(2), scalar(3), scalar(5)]).unwrap();
        assert_eq!(c, vec![scalar(2), scalar(3)]);
        assert!(coordinates_in_span(&basis, &[scalar(0), scalar(0), scalar(1)]).is_none());
    }
}
