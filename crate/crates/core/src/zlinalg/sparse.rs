use std::cmp::Ordering;

use dashu_int::ops::{Gcd, UnsignedAbs};
use dashu_int::{IBig, UBig};

use super::Int;

/// Sparse integer vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Int)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self { entries: Vec::new() }
    }

    /// Builds a vector from arbitrary (index, value) pairs, summing repeats.
    pub fn from_entries<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (usize, Int)>,
    {
        let mut raw: Vec<(usize, Int)> = iter.into_iter().collect();
        raw.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Int)> = Vec::with_capacity(raw.len());
        for (i, v) in raw {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += v,
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| *v != IBig::ZERO);
        Self { entries }
    }

    /// Trusted constructor: indices must already be strictly increasing and values nonzero.
    pub(crate) fn from_sorted(entries: Vec<(usize, Int)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| *v != IBig::ZERO));
        Self { entries }
    }

    pub fn unit(i: usize) -> Self {
        Self { entries: vec![(i, IBig::ONE)] }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (usize, &Int)> + ExactSizeIterator + '_ {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|(i, _)| *i)
    }

    pub fn get(&self, i: usize) -> Option<&Int> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    /// Entry with the largest index ("low" entry in column-reduction terms).
    pub fn last(&self) -> Option<(usize, &Int)> {
        self.entries.last().map(|(i, v)| (*i, v))
    }

    /// Largest index, or `None` for the zero vector.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn set(&mut self, i: usize, v: Int) {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => {
                if v == IBig::ZERO {
                    self.entries.remove(k);
                } else {
                    self.entries[k].1 = v;
                }
            }
            Err(k) => {
                if v != IBig::ZERO {
                    self.entries.insert(k, (i, v));
                }
            }
        }
    }

    /// `a * x + b * y`.
    pub fn lin_comb(a: &Int, x: &SparseVec, b: &Int, y: &SparseVec) -> SparseVec {
        let mut out = Vec::with_capacity(x.entries.len() + y.entries.len());
        let (mut p, mut q) = (0, 0);
        let (xs, ys) = (&x.entries, &y.entries);
        while p < xs.len() || q < ys.len() {
            let ord = match (xs.get(p), ys.get(q)) {
                (Some((i, _)), Some((j, _))) => i.cmp(j),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Less => {
                    let (i, v) = &xs[p];
                    let w = a * v;
                    if w != IBig::ZERO {
                        out.push((*i, w));
                    }
                    p += 1;
                }
                Ordering::Greater => {
                    let (j, v) = &ys[q];
                    let w = b * v;
                    if w != IBig::ZERO {
                        out.push((*j, w));
                    }
                    q += 1;
                }
                Ordering::Equal => {
                    let w = a * &xs[p].1 + b * &ys[q].1;
                    if w != IBig::ZERO {
                        out.push((xs[p].0, w));
                    }
                    p += 1;
                    q += 1;
                }
            }
        }
        SparseVec { entries: out }
    }

    /// `self += a * other`.
    pub fn add_scaled(&mut self, a: &Int, other: &SparseVec) {
        if *a == IBig::ZERO || other.is_zero() {
            return;
        }
        *self = SparseVec::lin_comb(&IBig::ONE, self, a, other);
    }

    pub fn scale(&mut self, a: &Int) {
        if *a == IBig::ZERO {
            self.entries.clear();
            return;
        }
        for (_, v) in self.entries.iter_mut() {
            *v *= a;
        }
    }

    pub fn neg(&mut self) {
        for (_, v) in self.entries.iter_mut() {
            *v = -std::mem::take(v);
        }
    }

    /// Divides every entry by `d`; caller guarantees divisibility.
    pub fn div_exact(&mut self, d: &Int) {
        for (_, v) in self.entries.iter_mut() {
            debug_assert!((&*v % d) == IBig::ZERO);
            *v = &*v / d;
        }
    }

    /// gcd of all entries (0 for the zero vector).
    pub fn content(&self) -> UBig {
        let mut g = UBig::ZERO;
        for (_, v) in &self.entries {
            g = (&g).gcd(v.unsigned_abs());
            if g == UBig::ONE {
                break;
            }
        }
        g
    }

    /// Divides by the content and fixes the sign of the last entry to be positive.
    pub fn make_primitive(&mut self) {
        let g = self.content();
        if g > UBig::ONE {
            self.div_exact(&IBig::from(g));
        }
        if let Some((_, v)) = self.entries.last() {
            if *v < IBig::ZERO {
                self.neg();
            }
        }
    }

    pub fn dot(&self, other: &SparseVec) -> Int {
        let (mut p, mut q) = (0, 0);
        let mut acc = IBig::ZERO;
        while p < self.entries.len() && q < other.entries.len() {
            match self.entries[p].0.cmp(&other.entries[q].0) {
                Ordering::Less => p += 1,
                Ordering::Greater => q += 1,
                Ordering::Equal => {
                    acc += &self.entries[p].1 * &other.entries[q].1;
                    p += 1;
                    q += 1;
                }
            }
        }
        acc
    }

    /// Re-indexes entries through `map`; entries mapped to `None` must be zero-free
    /// positions the caller wants dropped.
    pub fn reindex<F>(&self, mut map: F) -> SparseVec
    where
        F: FnMut(usize) -> Option<usize>,
    {
        SparseVec::from_entries(
            self.entries
                .iter()
                .filter_map(|(i, v)| map(*i).map(|j| (j, v.clone()))),
        )
    }

    pub fn into_entries(self) -> Vec<(usize, Int)> {
        self.entries
    }
}

impl FromIterator<(usize, Int)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Int)>>(iter: T) -> Self {
        SparseVec::from_entries(iter)
    }
}
