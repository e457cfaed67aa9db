//! Pseudomanifold axioms, boundaries, orientations and stratifications.

mod stratification;

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::complex::{delete, is_subset, Chain, SimplicialComplex, Simplex, Vertex};
use crate::error::{Error, Result};
use crate::zlinalg::{Coefficients, Rat};

pub(crate) use stratification::{boundary_set, SimplexSet};
pub use stratification::{
    product_stratification, skeletal_stratification, Stratification, StratificationSource, Stratum,
};

/// Outcome of a combinatorial check, with a witness simplex on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub ok: bool,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl Verdict {
    fn pass(dim: usize) -> Self {
        Self {
            ok: true,
            dim,
            reason: None,
            witness: None,
        }
    }

    fn fail(dim: usize, reason: impl Into<String>, witness: &[Vertex]) -> Self {
        Self {
            ok: false,
            dim,
            reason: Some(reason.into()),
            witness: Some(witness.iter().map(|&v| v as usize).collect()),
        }
    }
}

/// For every (n-1)-simplex, the n-simplices containing it together with the
/// position of the vertex that is deleted to reach the ridge.
pub(crate) fn ridge_cofaces(k: &SimplicialComplex) -> Vec<Vec<(usize, usize)>> {
    let n = k.dim();
    if n == 0 {
        return Vec::new();
    }
    let mut out = vec![Vec::new(); k.count(n - 1)];
    for (j, s) in k.simplices(n).enumerate() {
        for i in 0..s.len() {
            let r = k.index_of(&delete(s, i)).expect("closed under faces");
            out[r].push((j, i));
        }
    }
    out
}

fn purity_witness(k: &SimplicialComplex) -> Option<&Simplex> {
    let n = k.dim();
    k.facets()
        .iter()
        .filter(|f| f.dim() < n)
        .find(|f| !k.simplices(n).any(|s| is_subset(f.vertices(), s)))
}

/// Every simplex lies in an n-simplex and every (n-1)-simplex lies in
/// exactly two.
pub fn check_pseudomanifold(k: &SimplicialComplex) -> Verdict {
    let n = k.dim();
    if k.is_empty() {
        return Verdict {
            ok: false,
            dim: 0,
            reason: Some("empty complex".into()),
            witness: None,
        };
    }
    if let Some(f) = purity_witness(k) {
        return Verdict::fail(n, "simplex not contained in a top-dimensional simplex", f.vertices());
    }
    for (r, cof) in ridge_cofaces(k).iter().enumerate() {
        if cof.len() != 2 {
            return Verdict::fail(
                n,
                format!("codimension-one face with {} cofaces", cof.len()),
                k.simplex(n - 1, r),
            );
        }
    }
    Verdict::pass(n)
}

/// `X` split into its boundary (the closure of the (n-1)-simplices with one
/// coface) and the rest.
#[derive(Clone, Debug)]
pub struct BoundaryDecomposition {
    /// Indices of the boundary (n-1)-simplices in the ambient table.
    pub boundary_ridges: Vec<usize>,
    /// The boundary as its own complex; `None` when it is empty.
    pub boundary: Option<SimplicialComplex>,
    /// Ambient id of each boundary vertex.
    pub boundary_inclusion: Vec<Vertex>,
}

impl BoundaryDecomposition {
    pub fn is_empty(&self) -> bool {
        self.boundary_ridges.is_empty()
    }

    /// Whether a simplex of the ambient complex lies in the boundary.
    pub fn contains(&self, ambient: &SimplicialComplex, s: &[Vertex]) -> bool {
        let n = ambient.dim();
        if n == 0 || s.len() > n {
            return false;
        }
        let Some(b) = &self.boundary else { return false };
        let mapped: Option<Vec<Vertex>> = s
            .iter()
            .map(|v| self.boundary_inclusion.binary_search(v).ok().map(|i| i as Vertex))
            .collect();
        mapped.is_some_and(|m| b.contains(&m))
    }
}

#[derive(Clone, Debug)]
pub struct BoundaryVerdict {
    pub verdict: Verdict,
    /// Result of `check_pseudomanifold` on the boundary (true when empty).
    pub boundary_is_pseudomanifold: bool,
    /// Collaring of the boundary is not checked.
    pub collar: &'static str,
    pub decomposition: BoundaryDecomposition,
}

pub fn extract_boundary(k: &SimplicialComplex) -> BoundaryDecomposition {
    let n = k.dim();
    let ridges: Vec<usize> = ridge_cofaces(k)
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() == 1)
        .map(|(r, _)| r)
        .collect();
    if ridges.is_empty() {
        return BoundaryDecomposition {
            boundary_ridges: ridges,
            boundary: None,
            boundary_inclusion: Vec::new(),
        };
    }
    let mut verts: Vec<Vertex> = ridges.iter().flat_map(|&r| k.simplex(n - 1, r).to_vec()).collect();
    verts.sort_unstable();
    verts.dedup();
    let facets = ridges
        .iter()
        .map(|&r| {
            k.simplex(n - 1, r)
                .iter()
                .map(|v| verts.binary_search(v).expect("boundary vertex") as Vertex)
                .collect()
        })
        .collect();
    let mut b = SimplicialComplex::from_facets(format!("bd({})", k.name()), facets)
        .expect("boundary ridges form a complex");
    b.set_labels(verts.iter().enumerate().map(|(i, &v)| (i as Vertex, k.label(v))).collect());
    BoundaryDecomposition {
        boundary_ridges: ridges,
        boundary: Some(b),
        boundary_inclusion: verts,
    }
}

/// Checks the ∂-pseudomanifold axioms: purity, one or two cofaces per
/// (n-1)-simplex, and a boundary that is itself a pseudomanifold.
pub fn check_boundary_pseudomanifold(k: &SimplicialComplex) -> BoundaryVerdict {
    let n = k.dim();
    let decomposition = extract_boundary(k);
    let mut verdict = if k.is_empty() {
        Verdict {
            ok: false,
            dim: 0,
            reason: Some("empty complex".into()),
            witness: None,
        }
    } else if let Some(f) = purity_witness(k) {
        Verdict::fail(n, "simplex not contained in a top-dimensional simplex", f.vertices())
    } else {
        let bad = ridge_cofaces(k).iter().position(|c| c.is_empty() || c.len() > 2);
        match bad {
            Some(r) => Verdict::fail(n, "codimension-one face with more than two cofaces", k.simplex(n - 1, r)),
            None => Verdict::pass(n),
        }
    };
    let boundary_is_pseudomanifold = match &decomposition.boundary {
        None => true,
        Some(b) => {
            let v = check_pseudomanifold(b);
            if verdict.ok && (!v.ok || b.dim() + 1 != n) {
                let w: Vec<Vertex> = v
                    .witness
                    .unwrap_or_default()
                    .iter()
                    .map(|&i| decomposition.boundary_inclusion[i])
                    .collect();
                verdict = Verdict::fail(n, "boundary is not a pseudomanifold", &w);
            }
            v.ok
        }
    };
    BoundaryVerdict {
        verdict,
        boundary_is_pseudomanifold,
        collar: "assumed",
        decomposition,
    }
}

/// Signs on the n-simplices (indexed as in the complex's table) whose signed
/// sum is a cycle, or a cycle relative to the boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    signs: Vec<i8>,
}

impl Orientation {
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn reversed(&self) -> Orientation {
        Orientation {
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }

    /// Signed sum of the n-simplices.
    pub fn fundamental_chain(&self, k: &SimplicialComplex) -> Chain {
        let n = k.dim();
        let terms = k
            .simplices(n)
            .zip(&self.signs)
            .map(|(s, &e)| (Simplex::from_sorted(s.to_vec()), Rat::from(e)));
        Chain::from_terms(n, Coefficients::Z, terms).expect("n-simplices of the right degree")
    }

    /// Reads signs keyed by facet position (as stored in complex files).
    pub fn from_facet_signs(k: &SimplicialComplex, signs: &BTreeMap<usize, i8>) -> Result<Orientation> {
        let n = k.dim();
        let mut out = vec![0i8; k.count(n)];
        for (i, f) in k.facets().iter().enumerate() {
            if f.dim() != n {
                continue;
            }
            let e = *signs
                .get(&i)
                .ok_or_else(|| Error::ParseError(format!("orientation: no sign for facet {i}")))?;
            out[k.index_of(f.vertices()).expect("facet")] = e;
        }
        let o = Orientation { signs: out };
        if !is_relative_cycle(k, &o) {
            return Err(Error::ParseError("orientation: signed facet sum is not a cycle".into()));
        }
        Ok(o)
    }

    /// Signs keyed by facet position.
    pub fn to_facet_signs(&self, k: &SimplicialComplex) -> BTreeMap<usize, i8> {
        let n = k.dim();
        k.facets()
            .iter()
            .enumerate()
            .filter(|(_, f)| f.dim() == n)
            .map(|(i, f)| (i, self.signs[k.index_of(f.vertices()).expect("facet")]))
            .collect()
    }
}

/// Whether the signed sum has boundary supported on the boundary ridges.
pub fn is_relative_cycle(k: &SimplicialComplex, o: &Orientation) -> bool {
    let n = k.dim();
    if n == 0 {
        return true;
    }
    let ridges = ridge_cofaces(k);
    ridges.iter().all(|cof| {
        if cof.len() == 1 {
            return true;
        }
        let total: i64 = cof
            .iter()
            .map(|&(j, i)| i64::from(o.signs[j]) * if i % 2 == 0 { 1 } else { -1 })
            .sum();
        total == 0
    })
}

/// Breadth-first sign propagation across (n-1)-simplices with two cofaces.
pub fn orient(k: &SimplicialComplex) -> Result<Orientation> {
    let n = k.dim();
    let bv = check_boundary_pseudomanifold(k);
    if !bv.verdict.ok {
        return Err(Error::NotPseudomanifold {
            reason: bv.verdict.reason.unwrap_or_default(),
            witness: bv.verdict.witness.unwrap_or_default(),
        });
    }
    let count = k.count(n);
    if n == 0 {
        return Ok(Orientation { signs: vec![1; count] });
    }
    // adjacency: facet -> (neighbor, own deleted position, neighbor's)
    let mut adj: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); count];
    for cof in ridge_cofaces(k) {
        if let [(f, i), (g, j)] = cof[..] {
            adj[f].push((g, i, j));
            adj[g].push((f, j, i));
        }
    }
    let mut sign = vec![0i8; count];
    let mut parent = vec![usize::MAX; count];
    for root in 0..count {
        if sign[root] != 0 {
            continue;
        }
        sign[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            for &(g, i, j) in &adj[f] {
                let want = -sign[f] * if (i + j) % 2 == 0 { 1 } else { -1 };
                if sign[g] == 0 {
                    sign[g] = want;
                    parent[g] = f;
                    queue.push_back(g);
                } else if sign[g] != want {
                    return Err(Error::NonOrientable(odd_cycle(k, &parent, f, g)));
                }
            }
        }
    }
    Ok(Orientation { signs: sign })
}

/// Closed walk of facets through the BFS tree witnessing a sign conflict on
/// the edge `f -- g`.
fn odd_cycle(k: &SimplicialComplex, parent: &[usize], f: usize, g: usize) -> Vec<Vec<usize>> {
    let path = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let (pf, pg) = (path(f), path(g));
    let common = pf.iter().find(|x| pg.contains(x)).copied().expect("same tree");
    let mut cycle: Vec<usize> = pf.iter().copied().take_while(|&x| x != common).collect();
    cycle.push(common);
    let back: Vec<usize> = pg.iter().copied().take_while(|&x| x != common).collect();
    cycle.extend(back.into_iter().rev());
    let n = k.dim();
    cycle
        .into_iter()
        .map(|j| k.simplex(n, j).iter().map(|&v| v as usize).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bd(n: u32) -> SimplicialComplex {
        let all: Vec<Vertex> = (0..=n).collect();
        SimplicialComplex::from_facets("bd", (0..=n as usize).map(|i| delete(&all, i)).collect()).unwrap()
    }

    #[test]
    fn spheres_are_pseudomanifolds() {
        assert!(check_pseudomanifold(&bd(4)).ok);
        let o = orient(&bd(3)).unwrap();
        assert!(o.fundamental_chain(&bd(3)).boundary().is_zero());
    }

    #[test]
    fn wedge_fails_with_edge_witness() {
        let w = SimplicialComplex::from_facets("w", vec![vec![0, 1, 2], vec![0, 3, 4]]).unwrap();
        let v = check_pseudomanifold(&w);
        assert!(!v.ok);
        assert_eq!(v.witness.unwrap().len(), 2);
    }

    #[test]
    fn solid_simplex_boundary() {
        let d = SimplicialComplex::from_facets("D3", vec![vec![0, 1, 2, 3]]).unwrap();
        let bv = check_boundary_pseudomanifold(&d);
        assert!(bv.verdict.ok && bv.boundary_is_pseudomanifold);
        assert_eq!(bv.decomposition.boundary.as_ref().unwrap().f_vector(), vec![4, 6, 4]);
        let o = orient(&d).unwrap();
        assert!(is_relative_cycle(&d, &o));
        let closed = check_boundary_pseudomanifold(&bd(3));
        assert!(closed.verdict.ok && closed.decomposition.is_empty());
    }

    #[test]
    fn rp2_is_not_orientable() {
        let rp2 = SimplicialComplex::from_facets(
            "rp2",
            vec![
                vec![0, 1, 2],
                vec![0, 2, 3],
                vec![0, 3, 4],
                vec![0, 4, 5],
                vec![0, 1, 5],
                vec![1, 2, 4],
                vec![2, 3, 5],
                vec![1, 3, 4],
                vec![2, 4, 5],
                vec![1, 3, 5],
            ],
        )
        .unwrap();
        assert!(check_pseudomanifold(&rp2).ok);
        match orient(&rp2) {
            Err(Error::NonOrientable(cycle)) => assert!(cycle.len() >= 3),
            other => panic!("expected NonOrientable, got {other:?}"),
        }
    }
}
