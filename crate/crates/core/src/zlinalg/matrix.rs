use std::fmt;

use dashu_int::IBig;

use super::{Int, SparseVec};

/// Sparse integer matrix, stored column by column.
///
/// Absent entries are zero; stored entries never are.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            columns: vec![SparseVec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            columns: (0..n).map(SparseVec::unit).collect(),
        }
    }

    /// Builds a matrix from columns. Panics if a column has an index `>= rows`.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        for c in &columns {
            if let Some(i) = c.max_index() {
                assert!(i < rows, "column entry {i} out of range for {rows} rows");
            }
        }
        Self {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Int)>,
    {
        let mut buckets: Vec<Vec<(usize, Int)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r},{c}) out of range");
            buckets[c].push((r, v));
        }
        Self {
            rows,
            cols,
            columns: buckets.into_iter().map(SparseVec::from_entries).collect(),
        }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_triplets(
            r,
            c,
            rows.iter().enumerate().flat_map(|(i, row)| {
                assert_eq!(row.len(), c, "ragged dense matrix");
                row.iter()
                    .enumerate()
                    .map(move |(j, x)| (i, j, IBig::from(*x)))
            }),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<SparseVec> {
        self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Int {
        self.columns[c].get(r).cloned().unwrap_or(IBig::ZERO)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Int) {
        assert!(r < self.rows && c < self.cols);
        self.columns[c].set(r, v);
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    /// All stored entries as (row, col, value), column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Int)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (r, c, v)))
    }

    pub fn push_column(&mut self, col: SparseVec) {
        if let Some(i) = col.max_index() {
            assert!(i < self.rows);
        }
        self.columns.push(col);
        self.cols += 1;
    }

    /// Matrix–vector product `self * x`.
    pub fn mul_vec(&self, x: &SparseVec) -> SparseVec {
        assert!(x.max_index().map_or(true, |i| i < self.cols));
        let mut acc: Vec<(usize, Int)> = Vec::new();
        for (j, a) in x.iter() {
            for (i, b) in self.columns[j].iter() {
                acc.push((i, a * b));
            }
        }
        SparseVec::from_entries(acc)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        IntMatrix {
            rows: self.rows,
            cols: other.cols,
            columns: other.columns.iter().map(|c| self.mul_vec(c)).collect(),
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_triplets(
            self.cols,
            self.rows,
            self.entries().map(|(r, c, v)| (c, r, v.clone())),
        )
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().cloned());
        IntMatrix {
            rows: self.rows,
            cols: columns.len(),
            columns,
        }
    }

    pub fn select_columns(&self, idx: &[usize]) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: idx.len(),
            columns: idx.iter().map(|&j| self.columns[j].clone()).collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Int>> {
        let mut out = vec![vec![IBig::ZERO; self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            out[r][c] = v.clone();
        }
        out
    }

    /// Row-major sparse copy.
    pub(crate) fn to_rows(&self) -> Vec<SparseVec> {
        let mut buckets: Vec<Vec<(usize, Int)>> = vec![Vec::new(); self.rows];
        for (r, c, v) in self.entries() {
            buckets[r].push((c, v.clone()));
        }
        buckets.into_iter().map(SparseVec::from_sorted).collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows <= 12 && self.cols <= 12 {
            writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
            write!(f, "]")
        } else {
            write!(f, "IntMatrix {}x{} ({} nnz)", self.rows, self.cols, self.nnz())
        }
    }
}
