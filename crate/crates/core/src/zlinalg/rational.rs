//! Small dense rational matrices: determinants, solves, and the inertia of
//! symmetric forms.

use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::Rat;

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rat::ZERO; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|x| Rat::from(*x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn scaled(&self, s: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other.data[k * other.cols + j];
                    out.data[i * other.cols + j] += t;
                }
            }
        }
        out
    }

    /// Inverse of a square invertible matrix.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut out = RatMatrix::zeros(n, n);
        for j in 0..n {
            let mut e = vec![Rat::ZERO; n];
            e[j] = Rat::ONE;
            let x = self.solve(&e)?;
            for (i, v) in x.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        (out.mul(self) == RatMatrix::identity(n)).then_some(out)
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::ONE);
        }
        m
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(Rat::is_int)
    }

    /// Determinant by fraction-exact elimination. The 0x0 determinant is 1.
    pub fn det(&self) -> Rat {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = Rat::ONE;
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
                return Rat::ZERO;
            };
            if p != k {
                for c in 0..n {
                    a.swap(p * n + c, k * n + c);
                }
                det = -det;
            }
            let piv = a[k * n + k].clone();
            det *= &piv;
            for r in (k + 1)..n {
                if a[r * n + k].is_zero() {
                    continue;
                }
                let f = &a[r * n + k] / &piv;
                for c in k..n {
                    let t = &f * &a[k * n + c];
                    a[r * n + c] -= t;
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        let (m, n) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut rank = 0;
        for c in 0..n {
            let Some(p) = (rank..m).find(|&r| !a[r * n + c].is_zero()) else {
                continue;
            };
            for j in 0..n {
                a.swap(p * n + j, rank * n + j);
            }
            let piv = a[rank * n + c].clone();
            for r in (rank + 1)..m {
                if a[r * n + c].is_zero() {
                    continue;
                }
                let f = &a[r * n + c] / &piv;
                for j in c..n {
                    let t = &f * &a[rank * n + j];
                    a[r * n + j] -= t;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && !self.det().is_zero()
    }

    /// Solves `self * x = b`; returns one solution or `None`.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let (m, n) = (self.rows, self.cols);
        let w = n + 1;
        let mut a: Vec<Rat> = Vec::with_capacity(m * w);
        for r in 0..m {
            a.extend_from_slice(&self.data[r * n..(r + 1) * n]);
            a.push(b[r].clone());
        }
        let mut pivot_cols = Vec::new();
        let mut rank = 0;
        for c in 0..n {
            let Some(p) = (rank..m).find(|&r| !a[r * w + c].is_zero()) else {
                continue;
            };
            for j in 0..w {
                a.swap(p * w + j, rank * w + j);
            }
            let piv = a[rank * w + c].clone();
            for j in 0..w {
                a[rank * w + j] = &a[rank * w + j] / &piv;
            }
            for r in 0..m {
                if r == rank || a[r * w + c].is_zero() {
                    continue;
                }
                let f = a[r * w + c].clone();
                for j in 0..w {
                    let t = &f * &a[rank * w + j];
                    a[r * w + j] -= t;
                }
            }
            pivot_cols.push(c);
            rank += 1;
        }
        if (rank..m).any(|r| !a[r * w + n].is_zero()) {
            return None;
        }
        let mut x = vec![Rat::ZERO; n];
        for (r, &c) in pivot_cols.iter().enumerate() {
            x[c] = a[r * w + n].clone();
        }
        Some(x)
    }
}

/// Inertia (positive, negative, zero) of a symmetric rational matrix, by
/// symmetric Gaussian elimination (congruence, so Sylvester's law applies).
pub fn rational_inertia(m: &RatMatrix) -> (usize, usize, usize) {
    assert!(m.is_square());
    assert!(*m == m.transpose(), "inertia needs a symmetric matrix");
    let n = m.rows();
    let mut a = m.clone();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        // Prefer a nonzero diagonal pivot.
        if let Some(&k) = active.iter().find(|&&k| !a.get(k, k).is_zero()) {
            let d = a.get(k, k).clone();
            if d > Rat::ZERO {
                pos += 1;
            } else {
                neg += 1;
            }
            active.retain(|&x| x != k);
            for &i in &active {
                let f = a.get(i, k) / &d;
                if f.is_zero() {
                    continue;
                }
                for &j in &active {
                    let v = a.get(i, j) - &f * a.get(k, j);
                    a.set(i, j, v);
                }
            }
            for &i in &active {
                a.set(i, k, Rat::ZERO);
                a.set(k, i, Rat::ZERO);
            }
            continue;
        }
        // Zero diagonal: find an off-diagonal entry and add row/col j to k.
        let pair = active.iter().find_map(|&i| {
            active
                .iter()
                .find(|&&j| j != i && !a.get(i, j).is_zero())
                .map(|&j| (i, j))
        });
        let Some((k, j)) = pair else { break };
        // row_k += row_j; col_k += col_j  -> a_kk becomes 2 a_kj
        for c in 0..n {
            let v = a.get(k, c) + a.get(j, c);
            a.set(k, c, v);
        }
        for r in 0..n {
            let v = a.get(r, k) + a.get(r, j);
            a.set(r, k, v);
        }
    }
    (pos, neg, n - pos - neg)
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Serialized as a list of rows of strings ("3", "-1/2").
impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}
