//! Incremental column echelon forms keyed by the lowest nonzero row.
//!
//! `ZEchelon` keeps a Z-basis of the lattice spanned by the inserted vectors
//! (unimodular gcd steps only); `QEchelon` keeps primitive integer vectors
//! spanning the same Q-space and is the cheap choice for ranks.

use std::collections::BTreeMap;

use dashu_int::ops::{ExtendedGcd, UnsignedAbs};
use dashu_int::IBig;

use super::{Int, Rat, SparseVec};

struct Slot {
    vec: SparseVec,
    track: Option<SparseVec>,
    ordinal: usize,
}

/// Lattice echelon form with optional tracking of combinations of the inputs.
pub struct ZEchelon {
    pivots: BTreeMap<usize, Slot>,
    by_ordinal: Vec<usize>,
    track: bool,
    inserted: usize,
    kernel: Vec<SparseVec>,
}

impl ZEchelon {
    pub fn new(track: bool) -> Self {
        Self {
            pivots: BTreeMap::new(),
            by_ordinal: Vec::new(),
            track,
            inserted: 0,
            kernel: Vec::new(),
        }
    }

    /// Echelon form of the given vectors, without tracking.
    pub fn from_vectors<'a, I: IntoIterator<Item = &'a SparseVec>>(vs: I) -> Self {
        let mut e = Self::new(false);
        for v in vs {
            e.insert(v.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts a vector; returns true if the rank grew.
    ///
    /// With tracking on, a vector that reduces to zero records the relation
    /// among inputs; the recorded relations form a Z-basis of the relation
    /// lattice.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let index = self.inserted;
        self.inserted += 1;
        let mut cur = v;
        let mut cur_t = self.track.then(|| SparseVec::unit(index));
        loop {
            let Some((low, b)) = cur.last().map(|(i, x)| (i, x.clone())) else {
                if let Some(t) = cur_t {
                    self.kernel.push(t);
                }
                return false;
            };
            let Some(slot) = self.pivots.get_mut(&low) else {
                let ordinal = self.by_ordinal.len();
                self.by_ordinal.push(low);
                self.pivots.insert(
                    low,
                    Slot {
                        vec: cur,
                        track: cur_t,
                        ordinal,
                    },
                );
                return true;
            };
            let a = slot.vec.last().expect("pivot vectors are nonzero").1.clone();
            if (&b % &a) == IBig::ZERO {
                let q = -(&b / &a);
                cur.add_scaled(&q, &slot.vec);
                if let (Some(ct), Some(st)) = (cur_t.as_mut(), slot.track.as_ref()) {
                    ct.add_scaled(&q, st);
                }
            } else {
                let (g, s, t) = (&a).gcd_ext(&b);
                let g = IBig::from(g);
                let (ag, bg) = (&a / &g, &b / &g);
                let new_w = SparseVec::lin_comb(&s, &slot.vec, &t, &cur);
                let new_c = SparseVec::lin_comb(&ag, &cur, &-bg.clone(), &slot.vec);
                if let (Some(ct), Some(st)) = (cur_t.as_mut(), slot.track.as_mut()) {
                    let nst = SparseVec::lin_comb(&s, st, &t, ct);
                    let nct = SparseVec::lin_comb(&ag, ct, &-bg, st);
                    *st = nst;
                    *ct = nct;
                }
                slot.vec = new_w;
                cur = new_c;
            }
        }
    }

    /// Relations among the inserted vectors (only when tracking).
    pub fn kernel(&self) -> &[SparseVec] {
        &self.kernel
    }

    pub fn into_kernel(self) -> Vec<SparseVec> {
        self.kernel
    }

    /// Basis vectors in order of creation.
    pub fn basis(&self) -> Vec<&SparseVec> {
        self.by_ordinal.iter().map(|p| &self.pivots[p].vec).collect()
    }

    /// Coordinates of `v` in the basis (by ordinal), or `None` if `v` is not in
    /// the lattice.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut cur = v.clone();
        let mut coords = Vec::new();
        while let Some((low, b)) = cur.last().map(|(i, x)| (i, x.clone())) {
            let slot = self.pivots.get(&low)?;
            let a = slot.vec.last().expect("nonzero").1;
            if (&b % a) != IBig::ZERO {
                return None;
            }
            let q = &b / a;
            cur.add_scaled(&-q.clone(), &slot.vec);
            coords.push((slot.ordinal, q));
        }
        Some(SparseVec::from_entries(coords))
    }

    /// Expresses `v` as an integer combination of the inserted vectors.
    /// Requires tracking.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        assert!(self.track, "solve needs a tracked echelon");
        let coords = self.coordinates(v)?;
        let mut out = SparseVec::new();
        for (ord, q) in coords.iter() {
            let slot = &self.pivots[&self.by_ordinal[ord]];
            out.add_scaled(q, slot.track.as_ref().expect("tracked"));
        }
        Some(out)
    }
}

/// Rational echelon form with primitive integer basis vectors.
///
/// The basis is kept fully reduced: no basis vector has a nonzero entry at
/// another vector's pivot row, so `normal_form` is a canonical projection.
pub struct QEchelon {
    pivots: BTreeMap<usize, SparseVec>,
    reduced: bool,
}

impl Default for QEchelon {
    fn default() -> Self {
        Self::new()
    }
}

impl QEchelon {
    pub fn new() -> Self {
        Self {
            pivots: BTreeMap::new(),
            reduced: true,
        }
    }

    /// Variant that only clears lowest entries: cheaper, but `normal_form`
    /// is unavailable.
    pub fn for_rank() -> Self {
        Self {
            pivots: BTreeMap::new(),
            reduced: false,
        }
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a SparseVec>>(vs: I) -> Self {
        let mut e = Self::new();
        for v in vs {
            e.insert(v.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Clears the lowest entry repeatedly; returns the residual (a nonzero
    /// integer multiple of `v` modulo the span) whose low row is not a pivot.
    fn reduce_low(&self, v: SparseVec) -> SparseVec {
        let mut cur = v;
        while let Some((low, b)) = cur.last().map(|(i, x)| (i, x.clone())) {
            let Some(w) = self.pivots.get(&low) else { break };
            let a = w.last().expect("nonzero").1.clone();
            cur = eliminate(&cur, &a, &b, w).0;
        }
        cur
    }

    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut cur = self.reduce_low(v);
        let Some(low) = cur.max_index() else { return false };
        if !self.reduced {
            cur.make_primitive();
            self.pivots.insert(low, cur);
            return true;
        }
        cur = self.reduce_full(cur).0;
        cur.make_primitive();
        // Clear the new pivot row from the existing vectors.
        let b_val = cur.get(low).expect("pivot").clone();
        let keys: Vec<usize> = self.pivots.range(low + 1..).map(|(k, _)| *k).collect();
        for k in keys {
            let w = &self.pivots[&k];
            if let Some(x) = w.get(low).cloned() {
                let mut nw = eliminate(w, &b_val, &x, &cur).0;
                nw.make_primitive();
                self.pivots.insert(k, nw);
            }
        }
        self.pivots.insert(low, cur);
        true
    }

    /// Eliminates every pivot row from `v`; returns the residual and the
    /// accumulated positive-or-negative integer scale.
    fn reduce_full(&self, v: SparseVec) -> (SparseVec, Int) {
        let mut cur = v;
        let mut scale = IBig::ONE;
        let mut bound = usize::MAX;
        loop {
            let next = cur
                .iter()
                .rev()
                .map(|(i, _)| i)
                .filter(|&i| i < bound)
                .find(|i| self.pivots.contains_key(i));
            let Some(i) = next else { break };
            let w = &self.pivots[&i];
            let a = w.last().expect("nonzero").1.clone();
            let b = cur.get(i).expect("present").clone();
            let (next, f) = eliminate(&cur, &a, &b, w);
            cur = next;
            scale *= f;
            bound = i;
        }
        (cur, scale)
    }

    /// Residual of `v` after clearing pivot lows; a nonzero multiple of `v`
    /// modulo the span.
    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        self.reduce_low(v)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_low(v.clone()).is_zero()
    }

    /// Canonical representative of `v` modulo the span, over Q.
    pub fn normal_form(&self, v: &SparseVec) -> Vec<(usize, Rat)> {
        assert!(self.reduced, "normal_form needs a fully reduced echelon");
        let (r, scale) = self.reduce_full(v.clone());
        let (sign, mag) = (scale.signum(), scale.unsigned_abs());
        r.iter()
            .map(|(i, x)| (i, Rat::from_parts(x * &sign, mag.clone())))
            .collect()
    }
}

/// `(a/g) * cur - (b/g) * w`, clearing the row where `cur` has `b` and `w`
/// has `a`; also returns the factor `a/g` applied to `cur`.
fn eliminate(cur: &SparseVec, a: &Int, b: &Int, w: &SparseVec) -> (SparseVec, Int) {
    let g = IBig::from((a).gcd_ext(b).0);
    let (a, b) = (a / &g, b / &g);
    (SparseVec::lin_comb(&a, cur, &-b, w), a)
}
