//! Triangulation-induced and user-supplied stratifications.
//!
//! Every skeleton `X^i` and every stratum closure is required to be a full
//! subcomplex, so both are determined by their vertex sets and
//! `dim(s ∩ cl S)` is the number of vertices of `s` in `cl S`, minus one.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{check_pseudomanifold, extract_boundary, BoundaryDecomposition};
use crate::complex::{
    count_in, is_acyclic, is_homology_sphere, ProductComplex, SimplicialComplex, Simplex, Vertex,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StratificationSource {
    Skeletal,
    User,
    Product,
}

#[derive(Clone, Debug, Serialize)]
pub struct Stratum {
    pub id: usize,
    pub dim: usize,
    pub codim: usize,
    pub regular: bool,
    /// Simplices of the open stratum. Left empty for product strata, which
    /// are described by their factors.
    #[serde(skip)]
    pub simplices: Vec<Simplex>,
    /// Vertices of the closure, sorted. The closure is the full subcomplex
    /// on these vertices.
    pub closure_vertices: Vec<Vertex>,
    /// Factor stratum ids for product strata.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<usize>>,
    /// Factor codimensions for product strata.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor_codims: Option<Vec<usize>>,
}

impl Stratum {
    /// `dim(s ∩ cl S)`, with the empty intersection as `None`.
    pub fn meet_dim(&self, s: &[Vertex]) -> Option<usize> {
        count_in(s, &self.closure_vertices).checked_sub(1)
    }

    /// Top-dimensional simplices of the open stratum not lying in the boundary.
    pub fn interior_simplices<'a>(
        &'a self,
        k: &'a SimplicialComplex,
        boundary: &'a BoundaryDecomposition,
    ) -> impl Iterator<Item = &'a Simplex> + 'a {
        self.simplices
            .iter()
            .filter(move |s| s.dim() == self.dim && !boundary.contains(k, s.vertices()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Stratification {
    pub dim: usize,
    /// Vertex sets of `X^0, ..., X^{n-1}`.
    pub skeleta: Vec<Vec<Vertex>>,
    pub strata: Vec<Stratum>,
    pub source: StratificationSource,
}

impl Stratification {
    pub fn singular(&self) -> impl Iterator<Item = &Stratum> + '_ {
        self.strata.iter().filter(|s| !s.regular)
    }

    pub fn regular(&self) -> impl Iterator<Item = &Stratum> + '_ {
        self.strata.iter().filter(|s| s.regular)
    }

    pub fn has_singular_strata(&self) -> bool {
        self.singular().next().is_some()
    }

    /// Singular strata as (dimension, codimension, closure size), for comparing
    /// stratifications.
    pub fn summary(&self) -> Vec<(usize, usize, usize)> {
        let mut v: Vec<_> = self
            .singular()
            .map(|s| (s.dim, s.codim, s.closure_vertices.len()))
            .collect();
        v.sort_unstable();
        v
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Membership flags for every simplex, per dimension.
pub(crate) type SimplexSet = Vec<Vec<bool>>;

fn empty_set(k: &SimplicialComplex) -> SimplexSet {
    (0..=k.dim()).map(|d| vec![false; k.count(d)]).collect()
}

fn close_under_faces(k: &SimplicialComplex, set: &mut SimplexSet) {
    for d in (1..=k.dim()).rev() {
        for j in 0..k.count(d) {
            if set[d][j] {
                let s = k.simplex(d, j).to_vec();
                for i in 0..s.len() {
                    let f = crate::complex::delete(&s, i);
                    let idx = k.index_of(&f).expect("closed");
                    set[d - 1][idx] = true;
                }
            }
        }
    }
}

fn vertex_set(k: &SimplicialComplex, set: &SimplexSet) -> Vec<Vertex> {
    (0..k.count(0)).filter(|&j| set[0][j]).map(|j| k.simplex(0, j)[0]).collect()
}

/// The full subcomplex on `vertices` equals the closed set `set`.
fn is_full(k: &SimplicialComplex, set: &SimplexSet, vertices: &[Vertex]) -> bool {
    (0..=k.dim()).all(|d| {
        k.simplices(d)
            .enumerate()
            .all(|(j, s)| set[d][j] || !s.iter().all(|v| vertices.binary_search(v).is_ok()))
    })
}

/// Whether the simplex is a point of the PL manifold part: its link is a
/// homology sphere (interior) or a homology ball with homology-sphere
/// boundary (boundary simplex).
fn is_regular_simplex(k: &SimplicialComplex, s: &Simplex, in_boundary: bool) -> Result<bool> {
    let n = k.dim();
    let d = n as isize - s.dim() as isize - 1;
    let lk = k.link(s)?;
    if !in_boundary {
        return is_homology_sphere(&lk, d);
    }
    if lk.is_empty() || lk.dim() as isize != d {
        return Ok(false);
    }
    if d == 0 {
        return Ok(lk.count(0) == 1);
    }
    if !is_acyclic(&lk)? {
        return Ok(false);
    }
    let lb = extract_boundary(&lk);
    match lb.boundary {
        Some(b) => is_homology_sphere(&b, d - 1),
        None => Ok(false),
    }
}

/// Singular simplices: those whose link is not a homology sphere or ball.
fn singular_simplices(k: &SimplicialComplex, bset: &SimplexSet) -> Result<SimplexSet> {
    let n = k.dim();
    let mut sing = empty_set(k);
    for d in 0..n {
        for j in 0..k.count(d) {
            let s = Simplex::from_sorted(k.simplex(d, j).to_vec());
            if !is_regular_simplex(k, &s, bset[d][j])? {
                sing[d][j] = true;
            }
        }
    }
    Ok(sing)
}

pub(crate) fn boundary_set(k: &SimplicialComplex, b: &BoundaryDecomposition) -> SimplexSet {
    let mut set = empty_set(k);
    if k.dim() == 0 {
        return set;
    }
    for &r in &b.boundary_ridges {
        set[k.dim() - 1][r] = true;
    }
    close_under_faces(k, &mut set);
    set
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidUserStratification(msg.into())
}

fn incompatible(msg: impl Into<String>) -> Error {
    Error::IncompatibleStratification(msg.into())
}

/// Builds strata from the closed skeleta `X^0 ⊆ ... ⊆ X^{n-1}`.
fn strata_from_skeleta(
    k: &SimplicialComplex,
    skel: &[SimplexSet],
    bdry: &BoundaryDecomposition,
    source: StratificationSource,
) -> Result<Stratification> {
    let n = k.dim();
    let offsets: Vec<usize> = (0..=n)
        .scan(0, |acc, d| {
            let o = *acc;
            *acc += k.count(d);
            Some(o)
        })
        .collect();
    let total: usize = (0..=n).map(|d| k.count(d)).sum();
    let mut strata = Vec::new();
    let none = empty_set(k);
    // level n is X itself
    for i in 0..=n {
        let in_level = |d: usize, j: usize| -> bool {
            let upper = if i == n { true } else { skel[i][d][j] };
            let lower = if i == 0 { none[d][j] } else { skel[i - 1][d][j] };
            upper && !lower
        };
        let mut uf = UnionFind::new(total);
        let mut members = Vec::new();
        for d in 0..=n {
            for j in 0..k.count(d) {
                if !in_level(d, j) {
                    continue;
                }
                members.push((d, j));
                if d == 0 {
                    continue;
                }
                let s = k.simplex(d, j);
                for f in 0..s.len() {
                    let face = crate::complex::delete(s, f);
                    let fj = k.index_of(&face).expect("closed");
                    if in_level(d - 1, fj) {
                        uf.union(offsets[d] + j, offsets[d - 1] + fj);
                    }
                }
            }
        }
        let mut comps: std::collections::BTreeMap<usize, Vec<(usize, usize)>> = Default::default();
        for &(d, j) in &members {
            comps.entry(uf.find(offsets[d] + j)).or_default().push((d, j));
        }
        for (_, simplices) in comps {
            let top = simplices.iter().map(|&(d, _)| d).max().unwrap_or(0);
            if top > i {
                return Err(invalid(format!("X^{i} contains a simplex of dimension {top}")));
            }
            let mut closure = empty_set(k);
            for &(d, j) in &simplices {
                closure[d][j] = true;
            }
            close_under_faces(k, &mut closure);
            let verts = vertex_set(k, &closure);
            if !is_full(k, &closure, &verts) {
                return Err(incompatible(format!(
                    "closure of a {i}-dimensional stratum is not a full subcomplex (vertices {verts:?})"
                )));
            }
            strata.push(Stratum {
                id: 0,
                dim: i,
                codim: n - i,
                regular: i == n,
                simplices: simplices
                    .iter()
                    .map(|&(d, j)| Simplex::from_sorted(k.simplex(d, j).to_vec()))
                    .collect(),
                closure_vertices: verts,
                factors: None,
                factor_codims: None,
            });
        }
    }
    for (id, s) in strata.iter_mut().enumerate() {
        s.id = id;
    }
    if strata.iter().any(|s| !s.regular && s.codim == 1) {
        return Err(invalid("codimension-one stratum"));
    }
    // local cone condition at interior top simplices of singular strata
    for s in strata.iter().filter(|s| !s.regular) {
        for t in s.interior_simplices(k, bdry) {
            let lk = k.link(t)?;
            let want = n - s.dim - 1;
            let v = check_pseudomanifold(&lk);
            if lk.is_empty() || lk.dim() != want || !v.ok {
                return Err(invalid(format!(
                    "link of {t:?} is not a pseudomanifold of dimension {want}"
                )));
            }
        }
    }
    let skeleta = skel.iter().map(|set| vertex_set(k, set)).collect();
    Ok(Stratification {
        dim: n,
        skeleta,
        strata,
        source,
    })
}

/// Triangulation-induced stratification, or validation of a user one.
///
/// Without `user`, the singular set is the closure of the simplices whose
/// links are not homology spheres (homology balls at the boundary), and
/// `X^i` is generated by its interior simplices of dimension at most `i` and
/// its boundary simplices of dimension at most `i - 1` (a boundary stratum
/// of dimension `i - 1` is the end of an `i`-dimensional collar stratum).
/// `user` lists the facets of `X^0, ..., X^{n-1}`.
pub fn skeletal_stratification(
    k: &SimplicialComplex,
    user: Option<&[Vec<Vec<Vertex>>]>,
) -> Result<Stratification> {
    let n = k.dim();
    let v = super::check_boundary_pseudomanifold(k).verdict;
    if !v.ok {
        return Err(Error::NotPseudomanifold {
            reason: v.reason.unwrap_or_default(),
            witness: v.witness.unwrap_or_default(),
        });
    }
    let bdry = extract_boundary(k);
    let bset = boundary_set(k, &bdry);
    let sing = singular_simplices(k, &bset)?;
    let mut sigma = sing.clone();
    close_under_faces(k, &mut sigma);

    let (skel, source) = match user {
        None => {
            let mut skel = Vec::with_capacity(n);
            for i in 0..n {
                let mut set = empty_set(k);
                for d in 0..n {
                    for j in 0..k.count(d) {
                        if sigma[d][j] && (d + usize::from(bset[d][j]) <= i) {
                            set[d][j] = true;
                        }
                    }
                }
                close_under_faces(k, &mut set);
                skel.push(set);
            }
            (skel, StratificationSource::Skeletal)
        }
        Some(levels) => {
            if levels.len() != n {
                return Err(invalid(format!("expected {n} skeleton levels, got {}", levels.len())));
            }
            let mut skel = Vec::with_capacity(n);
            for (i, level) in levels.iter().enumerate() {
                let mut set = empty_set(k);
                for f in level {
                    let s = Simplex::new(f.clone()).map_err(|_| invalid(format!("X^{i}: bad simplex {f:?}")))?;
                    let idx = k
                        .index_of(s.vertices())
                        .ok_or_else(|| invalid(format!("X^{i}: {s:?} is not a simplex of the complex")))?;
                    if s.dim() > i {
                        return Err(invalid(format!("X^{i} contains {s:?} of dimension {}", s.dim())));
                    }
                    set[s.dim()][idx] = true;
                }
                close_under_faces(k, &mut set);
                skel.push(set);
            }
            for i in 1..n {
                let nested = (0..=n).all(|d| (0..k.count(d)).all(|j| !skel[i - 1][d][j] || skel[i][d][j]));
                if !nested {
                    return Err(invalid(format!("X^{} is not contained in X^{i}", i - 1)));
                }
            }
            if n >= 2 && skel[n - 1] != skel[n - 2] {
                return Err(invalid("codimension-one stratum: X^{n-1} differs from X^{n-2}"));
            }
            if n == 1 && skel[0].iter().any(|d| d.iter().any(|&x| x)) {
                return Err(invalid("codimension-one stratum in a 1-dimensional complex"));
            }
            if n >= 2 {
                for d in 0..=n {
                    for j in 0..k.count(d) {
                        if sing[d][j] && !skel[n - 2][d][j] {
                            return Err(invalid(format!(
                                "singular simplex {:?} is not in X^{}",
                                k.simplex(d, j),
                                n - 2
                            )));
                        }
                    }
                }
            }
            (skel, StratificationSource::User)
        }
    };
    for (i, set) in skel.iter().enumerate() {
        let verts = vertex_set(k, set);
        if !is_full(k, set, &verts) {
            return Err(incompatible(format!("X^{i} is not a full subcomplex")));
        }
    }
    strata_from_skeleta(k, &skel, &bdry, source)
}

/// Product of two stratifications on the staircase product: strata are the
/// pairs `(S1, S2)` with codimension `c1 + c2`, and the closure of a pair is
/// the full subcomplex on the product of the factor closures.
pub fn product_stratification(
    p: &ProductComplex,
    left: &Stratification,
    right: &Stratification,
) -> Stratification {
    let n = left.dim + right.dim;
    let pair_vertices = |a: &[Vertex], b: &[Vertex]| -> Vec<Vertex> {
        let mut v: Vec<Vertex> = a.iter().flat_map(|&x| b.iter().map(move |&y| p.vertex(x, y))).collect();
        v.sort_unstable();
        v
    };
    let mut strata = Vec::new();
    for s1 in &left.strata {
        for s2 in &right.strata {
            let codim = s1.codim + s2.codim;
            strata.push(Stratum {
                id: strata.len(),
                dim: n - codim,
                codim,
                regular: codim == 0,
                simplices: Vec::new(),
                closure_vertices: pair_vertices(&s1.closure_vertices, &s2.closure_vertices),
                factors: Some(vec![s1.id, s2.id]),
                factor_codims: Some(vec![s1.codim, s2.codim]),
            });
        }
    }
    let skeleta = (0..n)
        .map(|i| {
            let mut v: BTreeSet<Vertex> = BTreeSet::new();
            for s in strata.iter().filter(|s| s.dim <= i) {
                v.extend(s.closure_vertices.iter().copied());
            }
            v.into_iter().collect()
        })
        .collect();
    Stratification {
        dim: n,
        skeleta,
        strata,
        source: StratificationSource::Product,
    }
}
