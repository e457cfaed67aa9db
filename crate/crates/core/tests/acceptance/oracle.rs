//! Independent reference computations. Everything here starts from facet
//! lists and uses its own face enumeration and arithmetic.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub const PRIMES: [u64; 5] = [2, 3, 5, 7, 1_000_000_007];

pub struct Complex {
    pub facets: Vec<Vec<u32>>,
    /// Sorted simplices per dimension.
    pub faces: Vec<Vec<Vec<u32>>>,
    index: Vec<HashMap<Vec<u32>, usize>>,
}

fn subsets(f: &[u32], out: &mut BTreeSet<Vec<u32>>) {
    let n = f.len();
    for mask in 1u32..(1 << n) {
        out.insert((0..n).filter(|i| mask & (1 << i) != 0).map(|i| f[i]).collect());
    }
}

impl Complex {
    pub fn new(facets: &[Vec<u32>]) -> Self {
        let facets: Vec<Vec<u32>> = facets
            .iter()
            .map(|f| {
                let mut f = f.clone();
                f.sort_unstable();
                f
            })
            .collect();
        let mut all = BTreeSet::new();
        for f in &facets {
            subsets(f, &mut all);
        }
        let dim = facets.iter().map(|f| f.len() - 1).max().unwrap_or(0);
        let mut faces = vec![Vec::new(); dim + 1];
        for s in all {
            faces[s.len() - 1].push(s);
        }
        let index = faces
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Self { facets, faces, index }
    }

    pub fn dim(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn index(&self, s: &[u32]) -> Option<usize> {
        self.index.get(s.len().wrapping_sub(1))?.get(s).copied()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Entries `(row, col, sign)` of the boundary from dimension `k`.
    fn boundary(&self, k: usize) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for (c, s) in self.faces[k].iter().enumerate() {
            for i in 0..s.len() {
                let mut f = s.clone();
                f.remove(i);
                let r = self.index(&f).unwrap();
                out.push((r, c, if i % 2 == 0 { 1 } else { -1 }));
            }
        }
        out
    }

    /// Ridges and the facets containing them.
    pub fn ridge_cofaces(&self) -> BTreeMap<Vec<u32>, Vec<usize>> {
        let mut m: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
        for (j, f) in self.facets.iter().enumerate() {
            for i in 0..f.len() {
                let mut r = f.clone();
                r.remove(i);
                m.entry(r).or_default().push(j);
            }
        }
        m
    }

    /// Pure, every ridge in one or two facets, strongly connected.
    pub fn is_pseudomanifold(&self) -> bool {
        let n = self.dim();
        if self.facets.iter().any(|f| f.len() != n + 1) {
            return false;
        }
        let cof = self.ridge_cofaces();
        if cof.values().any(|c| c.len() > 2) {
            return false;
        }
        let mut seen = vec![false; self.facets.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(f) = stack.pop() {
            for c in cof.values().filter(|c| c.contains(&f)) {
                for &g in c {
                    if !seen[g] {
                        seen[g] = true;
                        stack.push(g);
                    }
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn boundary_facets(&self) -> Vec<Vec<u32>> {
        self.ridge_cofaces().into_iter().filter(|(_, c)| c.len() == 1).map(|(r, _)| r).collect()
    }

    pub fn link(&self, s: &[u32]) -> Vec<Vec<u32>> {
        self.facets
            .iter()
            .filter(|f| s.iter().all(|v| f.contains(v)))
            .map(|f| f.iter().copied().filter(|v| !s.contains(v)).collect())
            .collect()
    }

    /// Dimensions of `H_k(K; F_p)`.
    pub fn homology_mod_p(&self, p: u64) -> Vec<usize> {
        let n = self.dim();
        let ranks: Vec<usize> = (0..=n + 1)
            .map(|k| {
                if k == 0 || k > n {
                    0
                } else {
                    rank_mod_p(self.faces[k - 1].len(), self.faces[k].len(), &self.boundary(k), p)
                }
            })
            .collect();
        (0..=n).map(|k| self.faces[k].len() - ranks[k] - ranks[k + 1]).collect()
    }

    /// `homology_mod_p` for every prime in `PRIMES`.
    pub fn profile(&self) -> Vec<Vec<usize>> {
        PRIMES.iter().map(|&p| self.homology_mod_p(p)).collect()
    }

    /// Splits vertex `v` into one copy per connected component of its link.
    pub fn normalize_at(&self, v: u32) -> Vec<Vec<u32>> {
        let star: Vec<usize> = (0..self.facets.len()).filter(|&j| self.facets[j].contains(&v)).collect();
        let mut comp: HashMap<usize, usize> = HashMap::new();
        let mut next = 0;
        for &s in &star {
            if comp.contains_key(&s) {
                continue;
            }
            let mut stack = vec![s];
            comp.insert(s, next);
            while let Some(a) = stack.pop() {
                for &b in &star {
                    let shared = self.facets[a].iter().filter(|x| **x != v && self.facets[b].contains(x)).count();
                    if shared > 0 && !comp.contains_key(&b) {
                        comp.insert(b, next);
                        stack.push(b);
                    }
                }
            }
            next += 1;
        }
        let fresh = self.facets.iter().flatten().max().unwrap() + 1;
        self.facets
            .iter()
            .enumerate()
            .map(|(j, f)| match comp.get(&j) {
                Some(&c) if c > 0 => f.iter().map(|&x| if x == v { fresh + c as u32 - 1 } else { x }).collect(),
                _ => f.clone(),
            })
            .collect()
    }
}

pub fn rank_mod_p(rows: usize, cols: usize, entries: &[(usize, usize, i64)], p: u64) -> usize {
    let mut m = vec![vec![0u64; cols]; rows];
    for &(r, c, x) in entries {
        m[r][c] = (m[r][c] + x.rem_euclid(p as i64) as u64) % p;
    }
    let inv = |a: u64| -> u64 {
        let (mut r, mut b, mut e) = (1u128, a as u128, p as u128 - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u128;
            }
            b = b * b % p as u128;
            e >>= 1;
        }
        r as u64
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let f = inv(m[rank][c]);
        for x in m[rank].iter_mut() {
            *x = (*x as u128 * f as u128 % p as u128) as u64;
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let g = m[r][c];
                for cc in c..cols {
                    let sub = (g as u128 * m[rank][cc] as u128 % p as u128) as u64;
                    m[r][cc] = (m[r][cc] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// F_p dimensions implied by an integral table `(betti, torsion)` through
/// the universal coefficient theorem.
pub fn profile_of_table(table: &[(usize, Vec<u64>)]) -> Vec<Vec<usize>> {
    PRIMES
        .iter()
        .map(|&p| {
            (0..table.len())
                .map(|k| {
                    let t = |j: usize| table[j].1.iter().filter(|&&x| x % p == 0).count();
                    table[k].0 + t(k) + if k > 0 { t(k - 1) } else { 0 }
                })
                .collect()
        })
        .collect()
}

/// Intersection homology of the suspension of a connected closed
/// (n-1)-manifold `L` from Mayer–Vietoris over the two cones: with
/// `t = n - 1 - p(n)`, degree 0 is `H_0`, `H_i(L)` below `t`, zero at `t`
/// and `H_{i-1}(L)` above, per field of coefficients.
pub fn suspension_formula(link_profile: &[Vec<usize>], n: usize, p: usize) -> Vec<Vec<usize>> {
    let t = n - 1 - p;
    link_profile
        .iter()
        .map(|h| {
            (0..=n)
                .map(|i| match i {
                    0 => 1,
                    i if i < t => h[i],
                    i if i == t => 0,
                    i => h[i - 1],
                })
                .collect()
        })
        .collect()
}

pub fn nbar(c: usize) -> i64 {
    if c < 2 {
        0
    } else {
        (c as i64 - 1) / 2
    }
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Reduced row echelon form; returns pivot columns.
fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &piv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn coboundary(k: &Complex, d: usize) -> Vec<Vec<BigRational>> {
    // rows: (d+1)-simplices, cols: d-simplices
    let mut m = vec![vec![rat(0); k.faces[d].len()]; k.faces[d + 1].len()];
    for (r, c, x) in k.boundary(d + 1) {
        m[c][r] = rat(x);
    }
    m
}

/// Cocycles spanning `H^d(K; Q)`.
pub fn cohomology_basis(k: &Complex, d: usize) -> Vec<Vec<BigRational>> {
    let nd = k.faces[d].len();
    let mut delta = if d < k.dim() { coboundary(k, d) } else { Vec::new() };
    let pivots = rref(&mut delta);
    let free: Vec<usize> = (0..nd).filter(|c| !pivots.contains(c)).collect();
    let kernel: Vec<Vec<BigRational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![rat(0); nd];
            v[f] = rat(1);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -delta[row][f].clone();
            }
            v
        })
        .collect();
    let mut span: Vec<Vec<BigRational>> = if d > 0 {
        let prev = coboundary(k, d - 1);
        (0..k.faces[d - 1].len()).map(|c| prev.iter().map(|row| row[c].clone()).collect()).collect()
    } else {
        Vec::new()
    };
    let rank = |vs: &[Vec<BigRational>]| {
        let mut m = vs.to_vec();
        rref(&mut m).len()
    };
    let mut r = rank(&span);
    let mut out = Vec::new();
    for v in kernel {
        span.push(v.clone());
        let r2 = rank(&span);
        if r2 > r {
            out.push(v);
            r = r2;
        } else {
            span.pop();
        }
    }
    out
}

/// Sign propagation across ridges; signs are per facet position.
pub fn orient(k: &Complex) -> Option<Vec<i64>> {
    let mut sign = vec![0i64; k.facets.len()];
    sign[0] = 1;
    let cof = k.ridge_cofaces();
    let pos = |f: &[u32], r: &[u32]| f.iter().position(|v| !r.contains(v)).unwrap();
    let mut changed = true;
    while changed {
        changed = false;
        for (r, c) in &cof {
            if let [a, b] = c[..] {
                let (ia, ib) = (pos(&k.facets[a], r), pos(&k.facets[b], r));
                // induced orientations on the ridge must cancel
                let rel = if (ia + ib) % 2 == 0 { -1 } else { 1 };
                match (sign[a], sign[b]) {
                    (0, 0) => {}
                    (x, 0) => {
                        sign[b] = x * rel;
                        changed = true;
                    }
                    (0, y) => {
                        sign[a] = y * rel;
                        changed = true;
                    }
                    (x, y) if x * rel != y => return None,
                    _ => {}
                }
            }
        }
    }
    Some(sign)
}

/// Matrix of `(x, y) -> <x ∪ y, [K]>` on a basis of `H^{n/2}(K; Q)`.
pub fn cup_form(k: &Complex, signs: &[i64]) -> Vec<Vec<BigRational>> {
    let n = k.dim();
    let h = n / 2;
    let basis = cohomology_basis(k, h);
    let b = basis.len();
    let mut g = vec![vec![rat(0); b]; b];
    for (f, &s) in k.facets.iter().zip(signs) {
        let front = k.index(&f[..=h]).unwrap();
        let back = k.index(&f[h..]).unwrap();
        for i in 0..b {
            for j in 0..b {
                let t = &basis[i][front] * &basis[j][back] * rat(s);
                g[i][j] += t;
            }
        }
    }
    g
}

fn det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = rat(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else { return rat(0) };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        let piv = a[c][c].clone();
        d *= &piv;
        for r in c + 1..n {
            let f = &a[r][c] / &piv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[r][j] -= t;
            }
        }
    }
    d
}

/// Signature by Jacobi's rule on leading principal minors, after a fixed
/// unimodular change of basis if some minor vanishes.
pub fn signature(m: &[Vec<BigRational>]) -> i64 {
    let n = m.len();
    let mut a = m.to_vec();
    for attempt in 0..32i64 {
        let minors: Vec<BigRational> = (0..=n)
            .map(|k| {
                if k == 0 {
                    BigRational::one()
                } else {
                    det(&a[..k].iter().map(|r| r[..k].to_vec()).collect::<Vec<_>>())
                }
            })
            .collect();
        if minors.iter().all(|x| !x.is_zero()) {
            let changes = minors.windows(2).filter(|w| (w[0].is_positive()) != (w[1].is_positive())).count();
            return n as i64 - 2 * changes as i64;
        }
        // a -> E^T a E, adding basis vector i+1 to basis vector i
        let i = (attempt as usize) % n.max(2).saturating_sub(1);
        let mut b = a.clone();
        for r in 0..n {
            let x = b[r][i + 1].clone();
            b[r][i] += x;
        }
        let mut c = b.clone();
        for col in 0..n {
            let x = c[i + 1][col].clone();
            c[i][col] += x;
        }
        a = c;
    }
    panic!("no nonsingular minor sequence found");
}
