use std::collections::BTreeMap;

use dashu_int::IBig;

use super::simplex::{delete, is_subset, Simplex, Vertex};
use crate::error::{Error, Result};
use crate::zlinalg::{IntMatrix, SparseVec};

/// Finite abstract simplicial complex on dense vertex ids `0..n`.
///
/// Simplices of each dimension are kept in one flat table sorted
/// lexicographically; the position in that table is the simplex index used
/// by every chain and matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    name: String,
    n_vertices: usize,
    facets: Vec<Simplex>,
    tables: Vec<Vec<Vertex>>,
    labels: BTreeMap<Vertex, String>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `facets` (kept in the given order).
    ///
    /// Vertex ids must be exactly `0..n`.
    pub fn from_facets(name: impl Into<String>, facets: Vec<Vec<Vertex>>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let mut simplices = Vec::with_capacity(facets.len());
        for f in facets {
            let raw: Vec<usize> = f.iter().map(|&v| v as usize).collect();
            let s = Simplex::new(f).map_err(|_| Error::NonSimplexFace(raw))?;
            simplices.push(s);
        }
        let mut seen = simplices.clone();
        seen.sort();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateFacet(w[0].to_usize()));
        }
        let max = simplices.iter().flat_map(|s| s.vertices()).max().copied().unwrap_or(0);
        let n = max as usize + 1;
        let mut used = vec![false; n];
        for s in &simplices {
            for &v in s.vertices() {
                used[v as usize] = true;
            }
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(Error::ParseError(format!("vertex ids are not dense: {v} is unused")));
        }
        let dim = simplices.iter().map(Simplex::dim).max().unwrap_or(0);
        let mut per_dim: Vec<Vec<Vec<Vertex>>> = vec![Vec::new(); dim + 1];
        for s in &simplices {
            let vs = s.vertices();
            let k = vs.len();
            for mask in 1u64..(1u64 << k) {
                let face: Vec<Vertex> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
                per_dim[face.len() - 1].push(face);
            }
        }
        let tables = per_dim
            .into_iter()
            .map(|mut faces| {
                faces.sort_unstable();
                faces.dedup();
                faces.into_iter().flatten().collect()
            })
            .collect();
        Ok(Self {
            name: name.into(),
            n_vertices: n,
            facets: simplices,
            tables,
            labels: BTreeMap::new(),
        })
    }

    /// Assembles a complex from per-dimension lists that are already closed
    /// under faces. Each list is sorted here.
    pub(crate) fn from_closed_lists(
        name: String,
        n_vertices: usize,
        facets: Vec<Simplex>,
        lists: Vec<Vec<Vec<Vertex>>>,
    ) -> Self {
        let tables = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                debug_assert!(l.windows(2).all(|w| w[0] < w[1]));
                l.into_iter().flatten().collect()
            })
            .collect();
        Self {
            name,
            n_vertices,
            facets,
            tables,
            labels: BTreeMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    /// The complex with no simplices (link of a facet).
    pub fn empty(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            n_vertices: 0,
            facets: Vec::new(),
            tables: Vec::new(),
            labels: BTreeMap::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    /// Dimension; 0 for the empty complex (check `is_empty`).
    pub fn dim(&self) -> usize {
        self.tables.len().saturating_sub(1)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    pub fn set_labels(&mut self, labels: BTreeMap<Vertex, String>) {
        self.labels = labels;
    }

    /// External label of a vertex, defaulting to its id.
    pub fn label(&self, v: Vertex) -> String {
        self.labels.get(&v).cloned().unwrap_or_else(|| v.to_string())
    }

    /// Number of k-simplices (0 above the dimension).
    pub fn count(&self, k: usize) -> usize {
        self.tables.get(k).map_or(0, |t| t.len() / (k + 1))
    }

    pub fn f_vector(&self) -> Vec<usize> {
        (0..self.tables.len()).map(|k| self.count(k)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// The k-simplices in canonical order.
    pub fn simplices(&self, k: usize) -> impl ExactSizeIterator<Item = &[Vertex]> + '_ {
        let t: &[Vertex] = self.tables.get(k).map_or(&[], |t| t.as_slice());
        t.chunks_exact(k + 1)
    }

    pub fn simplex(&self, k: usize, index: usize) -> &[Vertex] {
        &self.tables[k][index * (k + 1)..(index + 1) * (k + 1)]
    }

    /// Index of a simplex (sorted vertex list) in its dimension's table.
    pub fn index_of(&self, s: &[Vertex]) -> Option<usize> {
        if s.is_empty() || s.len() > self.tables.len() {
            return None;
        }
        let k = s.len() - 1;
        let t = &self.tables[k];
        let n = t.len() / (k + 1);
        let (mut lo, mut hi) = (0usize, n);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match t[mid * (k + 1)..(mid + 1) * (k + 1)].cmp(s) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains(&self, s: &[Vertex]) -> bool {
        self.index_of(s).is_some()
    }

    /// Boundary matrix `C_k -> C_{k-1}`; `k = 0` gives a zero-row matrix.
    pub fn boundary_matrix(&self, k: usize) -> Result<IntMatrix> {
        if self.is_empty() || k > self.dim() {
            return Err(Error::DegreeOutOfRange {
                degree: k,
                dim: self.dim(),
            });
        }
        if k == 0 {
            return Ok(IntMatrix::zeros(0, self.count(0)));
        }
        let cols = self
            .simplices(k)
            .map(|s| self.boundary_column(s))
            .collect();
        Ok(IntMatrix::from_columns(self.count(k - 1), cols))
    }

    /// Boundary of one simplex as a vector over the (k-1)-simplices.
    pub fn boundary_column(&self, s: &[Vertex]) -> SparseVec {
        if s.len() <= 1 {
            return SparseVec::new();
        }
        SparseVec::from_entries((0..s.len()).map(|i| {
            let idx = self.index_of(&delete(s, i)).expect("complex is closed under faces");
            (idx, if i % 2 == 0 { IBig::ONE } else { IBig::NEG_ONE })
        }))
    }

    /// Maximal simplices containing `s`.
    pub fn facets_containing<'a>(&'a self, s: &'a [Vertex]) -> impl Iterator<Item = &'a Simplex> + 'a {
        self.facets.iter().filter(move |f| is_subset(s, f.vertices()))
    }

    /// Link `{t : t and s disjoint, t u s in K}` with vertices renumbered in
    /// increasing order of their old ids; labels are inherited.
    pub fn link(&self, s: &Simplex) -> Result<SimplicialComplex> {
        Ok(self.link_with_map(s)?.0)
    }

    /// The link together with the old id of each new vertex.
    pub fn link_with_map(&self, s: &Simplex) -> Result<(SimplicialComplex, Vec<Vertex>)> {
        let sv = s.vertices();
        if !self.contains(sv) {
            return Err(Error::SimplexNotInComplex(s.to_usize()));
        }
        let mut pieces: Vec<Vec<Vertex>> = self
            .facets_containing(sv)
            .map(|f| f.vertices().iter().copied().filter(|v| !s.contains(*v)).collect())
            .filter(|p: &Vec<Vertex>| !p.is_empty())
            .collect();
        pieces.sort_unstable();
        pieces.dedup();
        // keep maximal pieces only
        let maximal: Vec<Vec<Vertex>> = pieces
            .iter()
            .filter(|p| !pieces.iter().any(|q| q.len() > p.len() && is_subset(p, q)))
            .cloned()
            .collect();
        let name = format!("lk({}, {:?})", self.name, s);
        if maximal.is_empty() {
            return Ok((SimplicialComplex::empty(name), Vec::new()));
        }
        let mut old: Vec<Vertex> = maximal.iter().flatten().copied().collect();
        old.sort_unstable();
        old.dedup();
        let renum = |v: Vertex| old.binary_search(&v).expect("vertex of link") as Vertex;
        let facets = maximal
            .iter()
            .map(|p| p.iter().map(|&v| renum(v)).collect())
            .collect();
        let mut lk = SimplicialComplex::from_facets(name, facets)?;
        let labels = old
            .iter()
            .enumerate()
            .map(|(i, &v)| (i as Vertex, self.label(v)))
            .collect();
        lk.labels = labels;
        Ok((lk, old))
    }

    /// Closed cone with apex `n` (the new last vertex).
    pub fn cone(&self) -> SimplicialComplex {
        let apex = self.n_vertices as Vertex;
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let mut v = f.vertices().to_vec();
                v.push(apex);
                v
            })
            .collect();
        let mut c = SimplicialComplex::from_facets(format!("cone({})", self.name), facets)
            .expect("cone of a valid complex");
        if !self.labels.is_empty() {
            c.labels = self.labels.clone();
            c.labels.insert(apex, "apex".into());
        }
        c
    }

    /// Suspension with apexes `n` and `n + 1`.
    pub fn suspension(&self) -> SimplicialComplex {
        let (a, b) = (self.n_vertices as Vertex, self.n_vertices as Vertex + 1);
        let mut facets = Vec::with_capacity(2 * self.facets.len());
        for apex in [a, b] {
            for f in &self.facets {
                let mut v = f.vertices().to_vec();
                v.push(apex);
                facets.push(v);
            }
        }
        let mut c = SimplicialComplex::from_facets(format!("susp({})", self.name), facets)
            .expect("suspension of a valid complex");
        if !self.labels.is_empty() {
            c.labels = self.labels.clone();
            c.labels.insert(a, "north".into());
            c.labels.insert(b, "south".into());
        }
        c
    }

    /// Whether the simplices spanned by `vertices` (sorted) in this complex
    /// are exactly the faces generated by `generators`.
    pub fn is_full_subcomplex(&self, vertices: &[Vertex], generators: &[Vec<Vertex>]) -> bool {
        (0..=self.dim()).all(|k| {
            self.simplices(k)
                .filter(|s| s.iter().all(|v| vertices.binary_search(v).is_ok()))
                .all(|s| generators.iter().any(|g| is_subset(s, g)))
        })
    }
}

pub fn build_cone(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    if k.is_empty() {
        return Err(Error::EmptyComplex);
    }
    Ok(k.cone())
}

pub fn build_suspension(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    if k.is_empty() {
        return Err(Error::EmptyComplex);
    }
    Ok(k.suspension())
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimplicialComplex({:?}, f = {:?})", self.name, self.f_vector())
    }
}
