use crate::error::{Error, Result};

/// Small dense real matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::invalid(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::invalid("matrix entries must be finite"));
        }
        Ok(RealMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RealMatrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }
}

/// Rank by Gaussian elimination with partial pivoting.
///
/// A pivot counts when its magnitude exceeds `tol` times the largest entry of
/// the input, so the result does not depend on the overall scale.
pub fn real_rank(m: &RealMatrix, tol: f64) -> usize {
    assert!(tol > 0.0, "rank tolerance must be positive");
    let scale = m.data.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()));
    if scale == 0.0 {
        return 0;
    }
    let threshold = tol * scale;
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.data.clone();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let (pivot_row, pivot_abs) = (rank..rows)
            .map(|r| (r, a[r * cols + col].abs()))
            .fold((rank, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if pivot_abs <= threshold {
            continue;
        }
        if pivot_row != rank {
            for j in 0..cols {
                a.swap(rank * cols + j, pivot_row * cols + j);
            }
        }
        let pivot = a[rank * cols + col];
        for r in rank + 1..rows {
            let factor = a[r * cols + col] / pivot;
            if factor != 0.0 {
                for j in col..cols {
                    a[r * cols + j] -= factor * a[rank * cols + j];
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(real_rank(&RealMatrix::zeros(8, 8), 1e-10), 0);
        for n in 1..9 {
            assert_eq!(real_rank(&RealMatrix::identity(n), 1e-10), n);
        }
        let m = RealMatrix::new(2, 2, vec![1., 2., 2., 4.]).unwrap();
        assert_eq!(real_rank(&m, 1e-10), 1);
    }

    #[test]
    fn rank_is_scale_free() {
        let m = RealMatrix::new(2, 3, vec![1e-7, 2e-7, 0.0, 0.0, 1e-7, 3e-7]).unwrap();
        assert_eq!(real_rank(&m, 1e-10), 2);
        let big = RealMatrix::new(2, 2, vec![1e7, 2e7, 2e7, 4e7]).unwrap();
        assert_eq!(real_rank(&big, 1e-10), 1);
    }

    #[test]
    fn shape_mismatch_rejected() {
        assert!(RealMatrix::new(2, 2, vec![1.0; 3]).is_err());
        assert!(RealMatrix::new(1, 1, vec![f64::NAN]).is_err());
    }
}
