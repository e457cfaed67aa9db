use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex identifier. Ids are dense: a complex on `n` vertices uses `0..n`.
pub type Vertex = u32;

/// A simplex as its strictly increasing vertex list; that order is the
/// canonical orientation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Sorts the vertices; fails on an empty list or a repeated vertex.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.is_empty() || vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NonSimplexFace(vertices.iter().map(|&v| v as usize).collect()));
        }
        Ok(Simplex(vertices))
    }

    /// Trusted constructor for already increasing vertex lists.
    pub fn from_sorted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(!vertices.is_empty() && vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Codimension-one faces with their boundary signs `(-1)^i`.
    pub fn boundary(&self) -> Vec<(i8, Simplex)> {
        if self.0.len() == 1 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|i| {
                let mut f = self.0.clone();
                f.remove(i);
                (if i % 2 == 0 { 1 } else { -1 }, Simplex(f))
            })
            .collect()
    }

    pub fn to_usize(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize).collect()
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Faces of `s` (as vertex lists) obtained by deleting vertex `i`.
pub(crate) fn delete(s: &[Vertex], i: usize) -> Vec<Vertex> {
    let mut f = Vec::with_capacity(s.len() - 1);
    f.extend_from_slice(&s[..i]);
    f.extend_from_slice(&s[i + 1..]);
    f
}

/// True if `a` is a subset of `b`; both sorted.
pub(crate) fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// Number of entries of sorted `a` that lie in the sorted set `b`.
pub(crate) fn count_in(a: &[Vertex], b: &[Vertex]) -> usize {
    a.iter().filter(|v| b.binary_search(v).is_ok()).count()
}
