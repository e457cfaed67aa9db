//! Smith normal form over the integers.
//!
//! Sparse elimination with a Markowitz-style pivot choice: unit entries with
//! the smallest fill estimate go first; otherwise the entry of least absolute
//! value is isolated by gcd-reducing row and column combinations. A final pass
//! turns the isolated pivots into a divisibility chain.

use std::collections::BTreeSet;

use dashu_int::ops::{ExtendedGcd, UnsignedAbs};
use dashu_int::{IBig, UBig};

use super::{Int, IntMatrix, SparseVec};

/// `U * A * V = S` with `U`, `V` unimodular and `S` diagonal with `d1 | d2 | ...`.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Nonzero diagonal entries in chain order.
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s.get(i, i))
            .take_while(|d| *d != IBig::ZERO)
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().len()
    }
}

/// Full Smith normal form with both transforms.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let mut e = Engine::new(a, true, false, true);
    e.run();
    e.finish(a.rows(), a.cols()).0
}

/// Smith normal form together with `U^{-1}`, whose leading columns generate the
/// cokernel summands.
pub(crate) fn smith_with_u_inverse(a: &IntMatrix) -> (SnfResult, IntMatrix) {
    let mut e = Engine::new(a, true, true, true);
    e.run();
    let (r, inv) = e.finish(a.rows(), a.cols());
    (r, inv.expect("inverse tracked"))
}

/// Nonzero invariant factors of `a` (the SNF diagonal) without transforms.
pub fn invariant_factors(a: &IntMatrix) -> Vec<Int> {
    let mut e = Engine::new(a, false, false, false);
    e.run();
    e.chain_diagonal()
}

struct Engine {
    rows: Vec<SparseVec>,
    col_occ: Vec<BTreeSet<usize>>,
    row_active: Vec<bool>,
    col_active: Vec<bool>,
    pivots: Vec<(usize, usize)>,
    // U row-major, U^{-1} column-major, V column-major.
    u: Option<Vec<SparseVec>>,
    u_inv: Option<Vec<SparseVec>>,
    v: Option<Vec<SparseVec>>,
}

/// 2x2 integer matrix [[p, q], [r, s]] with determinant +-1.
#[derive(Clone)]
struct Mat2 {
    p: Int,
    q: Int,
    r: Int,
    s: Int,
}

impl Mat2 {
    fn det(&self) -> Int {
        &self.p * &self.s - &self.q * &self.r
    }

    fn inverse(&self) -> Mat2 {
        let d = self.det();
        debug_assert!(d == IBig::ONE || d == IBig::NEG_ONE);
        Mat2 {
            p: &d * &self.s,
            q: -(&d * &self.q),
            r: -(&d * &self.r),
            s: &d * &self.p,
        }
    }
}

impl Engine {
    fn new(a: &IntMatrix, track_u: bool, track_u_inv: bool, track_v: bool) -> Self {
        let rows = a.to_rows();
        let mut col_occ = vec![BTreeSet::new(); a.cols()];
        for (r, row) in rows.iter().enumerate() {
            for c in row.indices() {
                col_occ[c].insert(r);
            }
        }
        let m = a.rows();
        let n = a.cols();
        Self {
            rows,
            col_occ,
            row_active: vec![true; m],
            col_active: vec![true; n],
            pivots: Vec::new(),
            u: track_u.then(|| (0..m).map(SparseVec::unit).collect()),
            u_inv: track_u_inv.then(|| (0..m).map(SparseVec::unit).collect()),
            v: track_v.then(|| (0..n).map(SparseVec::unit).collect()),
        }
    }

    fn entry(&self, r: usize, c: usize) -> Int {
        self.rows[r].get(c).cloned().unwrap_or(IBig::ZERO)
    }

    fn replace_row(&mut self, i: usize, new: SparseVec) {
        let old: BTreeSet<usize> = self.rows[i].indices().collect();
        let fresh: BTreeSet<usize> = new.indices().collect();
        for c in old.difference(&fresh) {
            self.col_occ[*c].remove(&i);
        }
        for c in fresh.difference(&old) {
            self.col_occ[*c].insert(i);
        }
        self.rows[i] = new;
    }

    /// rows (i, j) <- m * (row_i, row_j)
    fn row_op(&mut self, i: usize, j: usize, m: &Mat2) {
        let ri = SparseVec::lin_comb(&m.p, &self.rows[i], &m.q, &self.rows[j]);
        let rj = SparseVec::lin_comb(&m.r, &self.rows[i], &m.s, &self.rows[j]);
        self.replace_row(i, ri);
        self.replace_row(j, rj);
        if let Some(u) = self.u.as_mut() {
            let ui = SparseVec::lin_comb(&m.p, &u[i], &m.q, &u[j]);
            let uj = SparseVec::lin_comb(&m.r, &u[i], &m.s, &u[j]);
            u[i] = ui;
            u[j] = uj;
        }
        if let Some(w) = self.u_inv.as_mut() {
            // columns (i, j) of U^{-1} <- (col_i, col_j) * m^{-1}
            let inv = m.inverse();
            let ci = SparseVec::lin_comb(&inv.p, &w[i], &inv.r, &w[j]);
            let cj = SparseVec::lin_comb(&inv.q, &w[i], &inv.s, &w[j]);
            w[i] = ci;
            w[j] = cj;
        }
    }

    /// columns (i, j) <- (col_i, col_j) * m
    fn col_op(&mut self, i: usize, j: usize, m: &Mat2) {
        let touched: BTreeSet<usize> = self.col_occ[i]
            .iter()
            .chain(self.col_occ[j].iter())
            .copied()
            .collect();
        for r in touched {
            let x = self.entry(r, i);
            let y = self.entry(r, j);
            let xi = &m.p * &x + &m.r * &y;
            let yj = &m.q * &x + &m.s * &y;
            self.rows[r].set(i, xi.clone());
            self.rows[r].set(j, yj.clone());
            if xi == IBig::ZERO {
                self.col_occ[i].remove(&r);
            } else {
                self.col_occ[i].insert(r);
            }
            if yj == IBig::ZERO {
                self.col_occ[j].remove(&r);
            } else {
                self.col_occ[j].insert(r);
            }
        }
        if let Some(v) = self.v.as_mut() {
            let ci = SparseVec::lin_comb(&m.p, &v[i], &m.r, &v[j]);
            let cj = SparseVec::lin_comb(&m.q, &v[i], &m.s, &v[j]);
            v[i] = ci;
            v[j] = cj;
        }
    }

    fn choose_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<((u8, UBig, usize), (usize, usize))> = None;
        for (r, row) in self.rows.iter().enumerate() {
            if !self.row_active[r] || row.is_zero() {
                continue;
            }
            let rlen = row.nnz();
            for (c, val) in row.iter() {
                if !self.col_active[c] {
                    continue;
                }
                let mag = val.unsigned_abs();
                let unit = u8::from(mag != UBig::ONE);
                let cost = (rlen - 1) * (self.col_occ[c].len() - 1);
                let key = (unit, mag, cost);
                if unit == 0 && cost == 0 {
                    return Some((r, c));
                }
                if best.as_ref().map_or(true, |(k, _)| key < *k) {
                    best = Some((key, (r, c)));
                }
            }
        }
        best.map(|(_, rc)| rc)
    }

    fn isolate(&mut self, pr: usize, pc: usize) {
        loop {
            let others: Vec<usize> = self.col_occ[pc].iter().copied().filter(|&r| r != pr).collect();
            for r in others {
                let p = self.entry(pr, pc);
                let x = self.entry(r, pc);
                if x == IBig::ZERO {
                    continue;
                }
                if (&x % &p) == IBig::ZERO {
                    let q = &x / &p;
                    // row_r -= q * row_pr
                    self.row_op(
                        r,
                        pr,
                        &Mat2 {
                            p: IBig::ONE,
                            q: -q,
                            r: IBig::ZERO,
                            s: IBig::ONE,
                        },
                    );
                } else {
                    let (g, s, t) = (&p).gcd_ext(&x);
                    let g = IBig::from(g);
                    self.row_op(
                        pr,
                        r,
                        &Mat2 {
                            p: s,
                            q: t,
                            r: -(&x / &g),
                            s: &p / &g,
                        },
                    );
                }
            }
            let others: Vec<usize> = self.rows[pr].indices().filter(|&c| c != pc).collect();
            for c in others {
                let p = self.entry(pr, pc);
                let y = self.entry(pr, c);
                if y == IBig::ZERO {
                    continue;
                }
                if (&y % &p) == IBig::ZERO {
                    let q = &y / &p;
                    // col_c -= q * col_pc ; as (col_pc, col_c) * [[1, -q], [0, 1]]
                    self.col_op(
                        pc,
                        c,
                        &Mat2 {
                            p: IBig::ONE,
                            q: -q,
                            r: IBig::ZERO,
                            s: IBig::ONE,
                        },
                    );
                } else {
                    let (g, s, t) = (&p).gcd_ext(&y);
                    let g = IBig::from(g);
                    // new col_pc = s col_pc + t col_c ; new col_c = -(y/g) col_pc + (p/g) col_c
                    self.col_op(
                        pc,
                        c,
                        &Mat2 {
                            p: s,
                            q: -(&y / &g),
                            r: t,
                            s: &p / &g,
                        },
                    );
                }
            }
            if self.col_occ[pc].len() == 1 && self.rows[pr].nnz() == 1 {
                break;
            }
        }
    }

    fn run(&mut self) {
        while let Some((pr, pc)) = self.choose_pivot() {
            self.isolate(pr, pc);
            self.row_active[pr] = false;
            self.col_active[pc] = false;
            self.pivots.push((pr, pc));
        }
        self.fix_divisibility();
    }

    /// Pairwise (a, b) -> (gcd, lcm) so that the pivots form a divisibility chain.
    fn fix_divisibility(&mut self) {
        let k = self.pivots.len();
        for i in 0..k {
            for j in (i + 1)..k {
                let (ri, ci) = self.pivots[i];
                let (rj, cj) = self.pivots[j];
                let a = self.entry(ri, ci);
                let b = self.entry(rj, cj);
                if (&b % &a) == IBig::ZERO {
                    continue;
                }
                // R_i += R_j
                self.row_op(
                    ri,
                    rj,
                    &Mat2 {
                        p: IBig::ONE,
                        q: IBig::ONE,
                        r: IBig::ZERO,
                        s: IBig::ONE,
                    },
                );
                let (g, s, t) = (&a).gcd_ext(&b);
                let g = IBig::from(g);
                self.col_op(
                    ci,
                    cj,
                    &Mat2 {
                        p: s,
                        q: -(&b / &g),
                        r: t.clone(),
                        s: &a / &g,
                    },
                );
                // R_j -= (t b / g) R_i
                let f = &t * &b / &g;
                self.row_op(
                    rj,
                    ri,
                    &Mat2 {
                        p: IBig::ONE,
                        q: -f,
                        r: IBig::ZERO,
                        s: IBig::ONE,
                    },
                );
            }
            let (ri, ci) = self.pivots[i];
            if self.entry(ri, ci) < IBig::ZERO {
                self.negate_row(ri);
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        let mut row = self.rows[r].clone();
        row.neg();
        self.rows[r] = row;
        if let Some(u) = self.u.as_mut() {
            u[r].neg();
        }
        if let Some(w) = self.u_inv.as_mut() {
            w[r].neg();
        }
    }

    fn chain_diagonal(&self) -> Vec<Int> {
        self.pivots.iter().map(|&(r, c)| self.entry(r, c)).collect()
    }

    fn finish(self, m: usize, n: usize) -> (SnfResult, Option<IntMatrix>) {
        let diag = self.chain_diagonal();
        let mut row_order: Vec<usize> = self.pivots.iter().map(|p| p.0).collect();
        let mut col_order: Vec<usize> = self.pivots.iter().map(|p| p.1).collect();
        let used_r: BTreeSet<usize> = row_order.iter().copied().collect();
        let used_c: BTreeSet<usize> = col_order.iter().copied().collect();
        row_order.extend((0..m).filter(|r| !used_r.contains(r)));
        col_order.extend((0..n).filter(|c| !used_c.contains(c)));

        let u_rows = self.u.expect("U tracked");
        let u_perm: Vec<SparseVec> = row_order.iter().map(|&r| u_rows[r].clone()).collect();
        // U is row-major; convert to columns.
        let u = IntMatrix::from_triplets(
            m,
            m,
            u_perm
                .iter()
                .enumerate()
                .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, j, v.clone()))),
        );
        let v_cols = self.v.expect("V tracked");
        let v = IntMatrix::from_columns(n, col_order.iter().map(|&c| v_cols[c].clone()).collect());
        let s = IntMatrix::from_triplets(
            m,
            n,
            diag.into_iter().enumerate().map(|(i, d)| (i, i, d)),
        );
        let u_inv = self.u_inv.map(|w| {
            IntMatrix::from_columns(m, row_order.iter().map(|&r| w[r].clone()).collect())
        });
        (SnfResult { u, s, v }, u_inv)
    }
}
