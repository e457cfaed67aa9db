//! Staircase triangulation of a product, the shuffle cross product and the
//! simplicial diagonal.

use std::collections::HashMap;

use super::chain::Chain;
use super::complex::SimplicialComplex;
use super::simplex::{Simplex, Vertex};
use crate::error::{Error, Result};
use crate::zlinalg::Coefficients;

/// `|L| x |R|` triangulated by monotone staircase chains.
///
/// The product vertex `(l, r)` has id `l * |R| + r`, so id order is the
/// lexicographic order of pairs.
#[derive(Clone, Debug)]
pub struct ProductComplex {
    left: SimplicialComplex,
    right: SimplicialComplex,
    product: SimplicialComplex,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Step {
    Left,
    Right,
    Both,
}

/// All step sequences with the given numbers of left, right and diagonal steps.
fn step_sequences(l: usize, r: usize, d: usize) -> Vec<Vec<Step>> {
    fn go(l: usize, r: usize, d: usize, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if l == 0 && r == 0 && d == 0 {
            out.push(cur.clone());
            return;
        }
        for (step, ok) in [(Step::Left, l > 0), (Step::Right, r > 0), (Step::Both, d > 0)] {
            if !ok {
                continue;
            }
            cur.push(step);
            match step {
                Step::Left => go(l - 1, r, d, cur, out),
                Step::Right => go(l, r - 1, d, cur, out),
                Step::Both => go(l, r, d - 1, cur, out),
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(l, r, d, &mut Vec::new(), &mut out);
    out
}

/// Shuffles of a p-simplex with a q-simplex and their signs: a right step
/// followed later by a left step is one inversion.
fn shuffles(p: usize, q: usize) -> Vec<(Vec<Step>, i8)> {
    step_sequences(p, q, 0)
        .into_iter()
        .map(|seq| {
            let mut rights = 0usize;
            let mut inversions = 0usize;
            for s in &seq {
                match s {
                    Step::Right => rights += 1,
                    Step::Left => inversions += rights,
                    Step::Both => unreachable!(),
                }
            }
            (seq, if inversions % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

fn walk(sigma: &[Vertex], tau: &[Vertex], steps: &[Step], nr: Vertex) -> Vec<Vertex> {
    let (mut i, mut j) = (0usize, 0usize);
    let mut out = Vec::with_capacity(steps.len() + 1);
    out.push(sigma[0] * nr + tau[0]);
    for s in steps {
        match s {
            Step::Left => i += 1,
            Step::Right => j += 1,
            Step::Both => {
                i += 1;
                j += 1;
            }
        }
        out.push(sigma[i] * nr + tau[j]);
    }
    out
}

/// Number of staircase m-simplices over a p-simplex times a q-simplex that
/// project onto both factors: `m! / ((m-q)! (m-p)! (p+q-m)!)`.
pub fn staircase_count(p: usize, q: usize, m: usize) -> u128 {
    if m < p.max(q) || m > p + q {
        return 0;
    }
    let f = |n: usize| (1..=n as u128).product::<u128>();
    f(m) / (f(m - q) * f(m - p) * f(p + q - m))
}

impl ProductComplex {
    pub fn left(&self) -> &SimplicialComplex {
        &self.left
    }

    pub fn right(&self) -> &SimplicialComplex {
        &self.right
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.product
    }

    pub fn into_complex(self) -> SimplicialComplex {
        self.product
    }

    pub fn vertex(&self, l: Vertex, r: Vertex) -> Vertex {
        l * self.right.n_vertices() as Vertex + r
    }

    /// Projections of a product vertex.
    pub fn project(&self, w: Vertex) -> (Vertex, Vertex) {
        let nr = self.right.n_vertices() as Vertex;
        (w / nr, w % nr)
    }

    pub fn is_square(&self) -> bool {
        self.left == self.right
    }

    /// Eilenberg–Zilber shuffle map `a x b`.
    pub fn shuffle_cross(&self, a: &Chain, b: &Chain) -> Result<Chain> {
        a.check_ambient(&self.left)?;
        b.check_ambient(&self.right)?;
        let (p, q) = (a.degree(), b.degree());
        let domain = if a.domain() == Coefficients::Q || b.domain() == Coefficients::Q {
            Coefficients::Q
        } else {
            Coefficients::Z
        };
        let sh = shuffles(p, q);
        let nr = self.right.n_vertices() as Vertex;
        let mut out = Chain::zero(p + q, domain);
        for (s, x) in a.terms() {
            for (t, y) in b.terms() {
                let xy = x * y;
                for (steps, sign) in &sh {
                    let v = walk(s.vertices(), t.vertices(), steps, nr);
                    let c = if *sign > 0 { xy.clone() } else { -xy.clone() };
                    out.add_term(Simplex::from_sorted(v), c);
                }
            }
        }
        Ok(out)
    }

    /// Image of a chain under the diagonal `v -> (v, v)`.
    pub fn diagonal_chain(&self, c: &Chain) -> Result<Chain> {
        if !self.is_square() {
            return Err(Error::AmbientMismatch("diagonal needs a product of a complex with itself".into()));
        }
        c.check_ambient(&self.left)?;
        let n = self.right.n_vertices() as Vertex;
        let mut out = Chain::zero(c.degree(), c.domain());
        for (s, x) in c.terms() {
            let v = s.vertices().iter().map(|&u| u * n + u).collect();
            out.add_term(Simplex::from_sorted(v), x.clone());
        }
        Ok(out)
    }

    /// The factor swap `(u, v) -> (v, u)`; it preserves the vertex order of
    /// every staircase simplex, so it acts on simplices without signs.
    pub fn transpose_chain(&self, c: &Chain) -> Result<Chain> {
        if !self.is_square() {
            return Err(Error::AmbientMismatch("transposition needs a square product".into()));
        }
        c.check_ambient(&self.product)?;
        let mut out = Chain::zero(c.degree(), c.domain());
        for (s, x) in c.terms() {
            let v = s
                .vertices()
                .iter()
                .map(|&w| {
                    let (a, b) = self.project(w);
                    self.vertex(b, a)
                })
                .collect();
            out.add_term(Simplex::from_sorted(v), x.clone());
        }
        Ok(out)
    }

    /// Projections of a product simplex onto the factors (deduplicated).
    pub fn project_simplex(&self, s: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
        let mut l: Vec<Vertex> = s.iter().map(|&w| self.project(w).0).collect();
        let mut r: Vec<Vertex> = s.iter().map(|&w| self.project(w).1).collect();
        l.dedup();
        r.dedup();
        (l, r)
    }
}

/// Builds the staircase product. Every product simplex projects onto a
/// unique pair of faces and is enumerated exactly once from that pair.
pub fn product_staircase(left: &SimplicialComplex, right: &SimplicialComplex) -> ProductComplex {
    let nr = right.n_vertices() as Vertex;
    let dim = left.dim() + right.dim();
    let mut lists: Vec<Vec<Vec<Vertex>>> = vec![Vec::new(); dim + 1];
    let mut seq_cache: HashMap<(usize, usize, usize), Vec<Vec<Step>>> = HashMap::new();
    for p in 0..=left.dim() {
        for q in 0..=right.dim() {
            for m in p.max(q)..=p + q {
                let seqs = seq_cache
                    .entry((m - q, m - p, p + q - m))
                    .or_insert_with(|| step_sequences(m - q, m - p, p + q - m));
                for s in left.simplices(p) {
                    for t in right.simplices(q) {
                        for steps in seqs.iter() {
                            lists[m].push(walk(s, t, steps, nr));
                        }
                    }
                }
            }
        }
    }
    let mut facets = Vec::new();
    for f in left.facets() {
        for g in right.facets() {
            let (p, q) = (f.dim(), g.dim());
            for steps in step_sequences(p, q, 0) {
                facets.push(Simplex::from_sorted(walk(f.vertices(), g.vertices(), &steps, nr)));
            }
        }
    }
    facets.sort();
    let name = format!("{} x {}", left.name(), right.name());
    let n = left.n_vertices() * right.n_vertices();
    let product = SimplicialComplex::from_closed_lists(name, n, facets, lists);
    ProductComplex {
        left: left.clone(),
        right: right.clone(),
        product,
    }
}

/// Estimated number of simplices of the staircase product, from f-vectors.
pub fn product_size(left: &[usize], right: &[usize]) -> u128 {
    let mut total = 0u128;
    for (p, &a) in left.iter().enumerate() {
        for (q, &b) in right.iter().enumerate() {
            for m in p.max(q)..=p + q {
                total += a as u128 * b as u128 * staircase_count(p, q, m);
            }
        }
    }
    total
}
