//! Simplicial intersection chains and their homology.
//!
//! A chain is allowable when every simplex in its support is, so `A_k` is
//! spanned by a subset of the k-simplices. `IC_k = A_k ∩ ∂⁻¹(A_{k-1})` is then
//! the allowable simplices whose boundary is allowable, plus the integer
//! kernel of the boundary, projected onto the non-allowable (k-1)-simplices,
//! restricted to the remaining allowable simplices.

use std::borrow::Cow;

use serde::{Serialize, Serializer};

use crate::complex::{count_in, Chain, SimplicialComplex};
use crate::error::{Error, Result};
use crate::perversity::Perversity;
use crate::pseudomanifold::{boundary_set, extract_boundary, SimplexSet, Stratification};
use crate::zlinalg::{homology_basis, homology_q, homology_z, Coefficients, Int, IntMatrix, SparseVec, ZEchelon};

/// Per-stratum data for the allowability test: closure vertices and
/// `p(S) - codim(S)`.
struct Bounds<'a>(Vec<(&'a [u32], i64)>);

impl<'a> Bounds<'a> {
    fn new(k: &SimplicialComplex, strat: &'a Stratification, p: &Perversity) -> Result<Self> {
        if strat.dim != k.dim() {
            return Err(Error::IncompatibleStratification(format!(
                "stratification of dimension {} on a complex of dimension {}",
                strat.dim,
                k.dim()
            )));
        }
        if strat
            .strata
            .iter()
            .any(|s| s.closure_vertices.last().is_some_and(|&v| v as usize >= k.n_vertices()))
        {
            return Err(Error::IncompatibleStratification("stratum vertex outside the complex".into()));
        }
        p.validate(strat)?;
        let v = strat
            .singular()
            .map(|s| Ok((s.closure_vertices.as_slice(), p.value(s)? - s.codim as i64)))
            .collect::<Result<_>>()?;
        Ok(Self(v))
    }

    fn allows(&self, s: &[u32]) -> bool {
        let k = s.len() as i64 - 1;
        self.0.iter().all(|(verts, b)| {
            let c = count_in(s, verts) as i64;
            c == 0 || c - 1 <= k + b
        })
    }
}

/// Indices of the allowable k-simplices.
pub fn allowable_simplices(
    k: &SimplicialComplex,
    strat: &Stratification,
    p: &Perversity,
    degree: usize,
) -> Result<Vec<usize>> {
    if degree > k.dim() {
        return Err(Error::DegreeOutOfRange { degree, dim: k.dim() });
    }
    let b = Bounds::new(k, strat, p)?;
    Ok(k.simplices(degree).enumerate().filter(|(_, s)| b.allows(s)).map(|(j, _)| j).collect())
}

/// First simplex of a chain that is not allowable, if any. Works on any
/// complex the stratification is defined on, without building its tables.
pub fn first_non_allowable(
    k: &SimplicialComplex,
    strat: &Stratification,
    p: &Perversity,
    c: &Chain,
) -> Result<Option<Vec<usize>>> {
    let b = Bounds::new(k, strat, p)?;
    Ok(c.terms().find(|(s, _)| !b.allows(s.vertices())).map(|(s, _)| s.to_usize()))
}

fn serialize_ints<S: Serializer>(v: &[Int], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match i64::try_from(x) {
            Ok(i) => seq.serialize_element(&i)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

#[derive(Clone, Debug, Serialize)]
pub struct IHDegree {
    pub degree: usize,
    pub betti: usize,
    #[serde(serialize_with = "serialize_ints")]
    pub torsion: Vec<Int>,
    /// Cycle representatives: free part first, then one per torsion summand.
    #[serde(skip)]
    pub generators: Option<Vec<Chain>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IHResult {
    pub coefficients: Coefficients,
    pub perversity: String,
    pub relative: bool,
    pub degrees: Vec<IHDegree>,
}

impl IHResult {
    /// `(betti, torsion)` per degree.
    pub fn table(&self) -> Vec<(usize, Vec<Int>)> {
        self.degrees.iter().map(|d| (d.betti, d.torsion.clone())).collect()
    }

    pub fn bettis(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }
}

pub struct ICComplex<'a> {
    ambient: Cow<'a, SimplicialComplex>,
    strat: Cow<'a, Stratification>,
    perversity: Perversity,
    relative: bool,
    allowable: Vec<Vec<bool>>,
    excluded: Option<SimplexSet>,
    /// Generators of `IC_k` as vectors over the k-simplices.
    bases: Vec<Vec<SparseVec>>,
    /// Generator index of each simplex that is itself a generator.
    unit: Vec<Vec<Option<usize>>>,
    /// Echelon of the non-unit generators, for coordinates.
    rest: Vec<ZEchelon>,
    boundary_maps: Vec<IntMatrix>,
}

impl<'a> ICComplex<'a> {
    /// Builds `IC_*`; with `relative`, the chains of `X` modulo those of `∂X`.
    pub fn new(k: &'a SimplicialComplex, strat: &'a Stratification, p: &Perversity, relative: bool) -> Result<Self> {
        let bounds = Bounds::new(k, strat, p)?;
        let n = k.dim();
        let excluded = relative.then(|| boundary_set(k, &extract_boundary(k)));
        let is_excluded = |d: usize, j: usize| excluded.as_ref().is_some_and(|e| e[d][j]);
        let allowable: Vec<Vec<bool>> = (0..=n)
            .map(|d| k.simplices(d).map(|s| bounds.allows(s)).collect())
            .collect();

        let mut ic = Self {
            ambient: Cow::Borrowed(k),
            strat: Cow::Borrowed(strat),
            perversity: p.clone(),
            relative,
            allowable,
            excluded: None,
            bases: Vec::with_capacity(n + 1),
            unit: Vec::with_capacity(n + 1),
            rest: Vec::with_capacity(n + 1),
            boundary_maps: Vec::with_capacity(n + 1),
        };
        for d in 0..=n {
            let mut gens = Vec::new();
            let mut unit = vec![None; k.count(d)];
            let mut bad = Vec::new();
            let mut proj = ZEchelon::new(true);
            for (j, s) in k.simplices(d).enumerate() {
                if !ic.allowable[d][j] || is_excluded(d, j) {
                    continue;
                }
                let col = if d == 0 { SparseVec::new() } else { k.boundary_column(s) };
                let off = SparseVec::from_entries(
                    col.iter()
                        .filter(|&(i, _)| !ic.allowable[d - 1][i] && !is_excluded(d - 1, i))
                        .map(|(i, x)| (i, x.clone())),
                );
                if off.is_zero() {
                    unit[j] = Some(gens.len());
                    gens.push(SparseVec::unit(j));
                } else {
                    bad.push(j);
                    proj.insert(off);
                }
            }
            let relations: Vec<SparseVec> = proj
                .into_kernel()
                .iter()
                .map(|r| r.reindex(|i| Some(bad[i])))
                .collect();
            let rest = ZEchelon::from_vectors(&relations);
            gens.extend(rest.basis().into_iter().cloned());
            ic.bases.push(gens);
            ic.unit.push(unit);
            ic.rest.push(rest);
        }
        ic.excluded = excluded;
        for d in 0..=n {
            let m = if d == 0 {
                IntMatrix::zeros(0, ic.bases[0].len())
            } else {
                let cols = ic.bases[d]
                    .iter()
                    .enumerate()
                    .map(|(c, g)| {
                        let b = ic.chain_boundary(d, g);
                        ic.coordinates(d - 1, &b).ok_or(Error::CompositionNonzero(c))
                    })
                    .collect::<Result<_>>()?;
                IntMatrix::from_columns(ic.bases[d - 1].len(), cols)
            };
            ic.boundary_maps.push(m);
        }
        Ok(ic)
    }

    /// Detaches the complex from borrowed inputs by cloning them.
    pub fn into_owned(self) -> ICComplex<'static> {
        ICComplex {
            ambient: Cow::Owned(self.ambient.into_owned()),
            strat: Cow::Owned(self.strat.into_owned()),
            perversity: self.perversity,
            relative: self.relative,
            allowable: self.allowable,
            excluded: self.excluded,
            bases: self.bases,
            unit: self.unit,
            rest: self.rest,
            boundary_maps: self.boundary_maps,
        }
    }

    pub fn ambient(&self) -> &SimplicialComplex {
        &self.ambient
    }

    pub fn stratification(&self) -> &Stratification {
        &self.strat
    }

    pub fn perversity(&self) -> &Perversity {
        &self.perversity
    }

    pub fn is_relative(&self) -> bool {
        self.relative
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim()
    }

    pub fn rank(&self, d: usize) -> usize {
        self.bases[d].len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn generators(&self, d: usize) -> &[SparseVec] {
        &self.bases[d]
    }

    /// `d_k : IC_k -> IC_{k-1}` in the generating bases.
    pub fn boundary_map(&self, d: usize) -> &IntMatrix {
        &self.boundary_maps[d]
    }

    pub fn is_allowable(&self, d: usize, j: usize) -> bool {
        self.allowable[d][j]
    }

    fn is_excluded(&self, d: usize, j: usize) -> bool {
        self.excluded.as_ref().is_some_and(|e| e[d][j])
    }

    /// Boundary of a vector over the d-simplices, with `∂X` dropped in the
    /// relative case.
    pub fn chain_boundary(&self, d: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        if d == 0 {
            return out;
        }
        for (j, x) in v.iter() {
            out.add_scaled(x, &self.ambient.boundary_column(self.ambient.simplex(d, j)));
        }
        if self.excluded.is_some() {
            out = SparseVec::from_entries(out.into_entries().into_iter().filter(|&(i, _)| !self.is_excluded(d - 1, i)));
        }
        out
    }

    /// Coordinates of a vector over the d-simplices in the generators of
    /// `IC_d`, or `None` if it is not an intersection chain.
    pub fn coordinates(&self, d: usize, v: &SparseVec) -> Option<SparseVec> {
        let mut coords = Vec::new();
        let mut residual = Vec::new();
        for (j, x) in v.iter() {
            match self.unit[d][j] {
                Some(g) => coords.push((g, x.clone())),
                None => residual.push((j, x.clone())),
            }
        }
        let offset = self.bases[d].len() - self.rest[d].rank();
        let r = self.rest[d].coordinates(&SparseVec::from_entries(residual))?;
        coords.extend(r.iter().map(|(i, x)| (offset + i, x.clone())));
        Some(SparseVec::from_entries(coords))
    }

    /// Whether a vector over the d-simplices lies in `IC_d`.
    pub fn is_intersection_chain(&self, d: usize, v: &SparseVec) -> bool {
        let inside = |dd: usize, w: &SparseVec| w.indices().all(|j| self.allowable[dd][j] || self.is_excluded(dd, j));
        inside(d, v) && (d == 0 || inside(d - 1, &self.chain_boundary(d, v)))
    }

    /// Vector over the d-simplices of a combination of generators.
    pub fn to_ambient(&self, d: usize, coords: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in coords.iter() {
            out.add_scaled(x, &self.bases[d][i]);
        }
        out
    }

    fn upper(&self, d: usize) -> IntMatrix {
        if d < self.dim() {
            self.boundary_maps[d + 1].clone()
        } else {
            IntMatrix::zeros(self.bases[d].len(), 0)
        }
    }

    pub fn homology(&self, d: usize, coefficients: Coefficients, with_generators: bool) -> Result<IHDegree> {
        let lower = &self.boundary_maps[d];
        let upper = self.upper(d);
        if with_generators {
            let hb = homology_basis(lower, &upper)?;
            let mut gens: Vec<&SparseVec> = hb.free.iter().collect();
            let torsion = match coefficients {
                Coefficients::Z => {
                    gens.extend(hb.torsion_cycles.iter());
                    hb.torsion
                }
                Coefficients::Q => Vec::new(),
            };
            let chains = gens
                .into_iter()
                .map(|z| Chain::from_vector(&self.ambient, d, &self.to_ambient(d, z)))
                .collect();
            return Ok(IHDegree {
                degree: d,
                betti: hb.betti,
                torsion,
                generators: Some(chains),
            });
        }
        let (betti, torsion) = match coefficients {
            Coefficients::Z => homology_z(lower, &upper)?,
            Coefficients::Q => (homology_q(lower, &upper)?, Vec::new()),
        };
        Ok(IHDegree {
            degree: d,
            betti,
            torsion,
            generators: None,
        })
    }

    pub fn homology_all(&self, coefficients: Coefficients, with_generators: bool) -> Result<IHResult> {
        let degrees = (0..=self.dim())
            .map(|d| self.homology(d, coefficients, with_generators))
            .collect::<Result<_>>()?;
        Ok(IHResult {
            coefficients,
            perversity: self.perversity.name(),
            relative: self.relative,
            degrees,
        })
    }

    /// Whether every term of a chain is an allowable simplex of `X` (or lies
    /// in `∂X` in the relative case).
    pub fn chain_is_allowable(&self, c: &Chain) -> bool {
        c.terms().all(|(s, _)| {
            self.ambient
                .index_of(s.vertices())
                .is_some_and(|j| self.allowable[c.degree()][j] || self.is_excluded(c.degree(), j))
        })
    }
}

pub fn ic_complex<'a>(
    k: &'a SimplicialComplex,
    strat: &'a Stratification,
    p: &Perversity,
    relative: bool,
) -> Result<ICComplex<'a>> {
    ICComplex::new(k, strat, p, relative)
}

/// Intersection homology in every degree.
pub fn ih(
    k: &SimplicialComplex,
    strat: &Stratification,
    p: &Perversity,
    coefficients: Coefficients,
    relative: bool,
) -> Result<IHResult> {
    ICComplex::new(k, strat, p, relative)?.homology_all(coefficients, false)
}
