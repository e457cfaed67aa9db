//! Symmetric-complex data of an oriented pseudomanifold and its signature.
//!
//! `C` is the upper-middle intersection chain complex of `X`, `D` the
//! `Q_{n̄,n̄}` intersection chains of the staircase square `X x X`, `β` the
//! shuffle cross product `C ⊗ C -> D` and `φ` the diagonal image of a
//! fundamental cycle. The duality matrices are the Künneth coordinates of
//! `[φ]` in the classes `[β(z_i^a x z_{n-i}^b)]`.
//!
//! Manifolds whose square is too large for `D` are handled by evaluating
//! Alexander–Whitney cross products of dual cocycles on `φ`, which computes
//! the same coordinates since `AW ∘ EZ` is the identity.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::{product_size, product_staircase, Chain, ProductComplex, Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::intersection_homology::{allowable_simplices, first_non_allowable, ICComplex};
use crate::ip_witt::check_ip;
use crate::perversity::{product_perversity_qnn, ClassicalName, Perversity};
use crate::pseudomanifold::{
    check_boundary_pseudomanifold, extract_boundary, is_relative_cycle, orient, product_stratification,
    skeletal_stratification, Orientation, Stratification,
};
use crate::zlinalg::{
    homology_basis, rational_inertia, solve_modulo_image, Coefficients, Int, IntMatrix, Rat, RatMatrix, SparseVec,
};

#[derive(Clone, Debug, Serialize)]
pub struct FundamentalCycle {
    #[serde(skip)]
    pub xi: Chain,
    pub dim: usize,
    pub terms: usize,
    /// Whether `X` has boundary, so that `xi` is a relative cycle.
    pub relative: bool,
    pub zero_allowable: bool,
}

fn require_pseudomanifold(k: &SimplicialComplex) -> Result<()> {
    let v = check_boundary_pseudomanifold(k).verdict;
    if v.ok {
        Ok(())
    } else {
        Err(Error::NotPseudomanifold {
            reason: v.reason.unwrap_or_default(),
            witness: v.witness.unwrap_or_default(),
        })
    }
}

fn with_strat<T>(
    k: &SimplicialComplex,
    strat: Option<&Stratification>,
    f: impl FnOnce(&Stratification) -> Result<T>,
) -> Result<T> {
    match strat {
        Some(s) => f(s),
        None => f(&skeletal_stratification(k, None)?),
    }
}

/// Signed facet sum of an orientation, checked to be a (relative) cycle whose
/// simplices are all 0̄-allowable.
pub fn fundamental_cycle(
    k: &SimplicialComplex,
    orientation: &Orientation,
    strat: Option<&Stratification>,
) -> Result<FundamentalCycle> {
    require_pseudomanifold(k)?;
    if orientation.signs().len() != k.count(k.dim()) || !is_relative_cycle(k, orientation) {
        return Err(Error::NonOrientable(Vec::new()));
    }
    let xi = orientation.fundamental_chain(k);
    let bdry = extract_boundary(k);
    let stray = xi.boundary().terms().find(|(s, _)| !bdry.contains(k, s.vertices())).map(|(s, _)| s.to_usize());
    if let Some(s) = stray {
        return Err(Error::NonOrientable(vec![s]));
    }
    let n = k.dim();
    let zero = Perversity::classical(ClassicalName::Zero);
    let allowed = with_strat(k, strat, |s| allowable_simplices(k, s, &zero, n))?;
    Ok(FundamentalCycle {
        dim: n,
        terms: xi.len(),
        relative: !bdry.is_empty(),
        zero_allowable: allowed.len() == k.count(n),
        xi,
    })
}

/// Size limits for the product `X x X`.
#[derive(Clone, Copy, Debug)]
pub struct SymmetricOptions {
    /// Largest product (total simplex count) that is triangulated explicitly.
    pub materialize_limit: u128,
    /// Largest product of a manifold for which `D` is built; singular spaces
    /// always get `D` once the product is materialized.
    pub chain_limit: u128,
}

impl Default for SymmetricOptions {
    fn default() -> Self {
        Self {
            materialize_limit: 5_000_000,
            chain_limit: 400_000,
        }
    }
}

/// `β` in generator coordinates: for total degree `m`, column
/// `offset[m][p] + g * rank C_{m-p} + h` is `β(g ⊗ h)` with `g` in `C_p`.
#[derive(Clone, Debug)]
pub struct Beta {
    offsets: Vec<Vec<usize>>,
    pub matrices: Vec<IntMatrix>,
    /// Every cross product of generators is a `Q_{n̄,n̄}` intersection chain.
    pub lands_in_d: bool,
}

impl Beta {
    pub fn column(&self, p: usize, g: usize, q: usize, h: usize, rank_q: usize) -> usize {
        self.offsets[p + q][p] + g * rank_q + h
    }
}

/// Transposition on `D`: the swap `(u, v) -> (v, u)` acts on staircase
/// simplices without sign, and `φ` is fixed by it.
#[derive(Clone, Debug, Serialize)]
pub struct Involution {
    pub convention: &'static str,
    pub phi_invariant: bool,
}

pub struct SymmetricComplexData<'a> {
    pub dim: usize,
    pub xi: FundamentalCycle,
    pub c: ICComplex<'a>,
    pub product_simplices: u128,
    pub product: Option<ProductComplex>,
    pub product_stratification: Option<Stratification>,
    pub q: Option<Perversity>,
    pub d: Option<ICComplex<'static>>,
    pub beta: Option<Beta>,
    pub phi: Chain,
    pub phi_closed: bool,
    pub involution: Involution,
    singular: bool,
}

/// The diagonal image of a chain on `X`, with product ids `v * |V| + v`.
fn diagonal(c: &Chain, nv: Vertex) -> Chain {
    let terms = c
        .terms()
        .map(|(s, x)| (Simplex::from_sorted(s.vertices().iter().map(|&v| v * nv + v).collect()), x.clone()));
    Chain::from_terms(c.degree(), c.domain(), terms).expect("diagonal keeps the degree")
}

fn generator_chains(c: &ICComplex, d: usize) -> Vec<Chain> {
    (0..c.rank(d))
        .map(|g| Chain::from_vector(c.ambient(), d, &c.to_ambient(d, &SparseVec::unit(g))))
        .collect()
}

fn build_beta(c: &ICComplex, d: &ICComplex, p: &ProductComplex) -> Result<Beta> {
    let n = c.dim();
    let chains: Vec<Vec<Chain>> = (0..=n).map(|i| generator_chains(c, i)).collect();
    let mut offsets = Vec::with_capacity(2 * n + 1);
    let mut matrices = Vec::with_capacity(2 * n + 1);
    let mut lands = true;
    for m in 0..=2 * n {
        let mut off = vec![0; n + 1];
        let mut cols = Vec::new();
        for pd in 0..=n {
            off[pd] = cols.len();
            if m < pd || m - pd > n {
                continue;
            }
            let qd = m - pd;
            for a in &chains[pd] {
                for b in &chains[qd] {
                    let v = p.shuffle_cross(a, b)?.to_vector(p.complex())?;
                    match d.coordinates(m, &v) {
                        Some(x) => cols.push(x),
                        None => {
                            lands = false;
                            cols.push(SparseVec::new());
                        }
                    }
                }
            }
        }
        offsets.push(off);
        matrices.push(IntMatrix::from_columns(d.rank(m), cols));
    }
    Ok(Beta {
        offsets,
        matrices,
        lands_in_d: lands,
    })
}

/// Checks `∂_D β(g ⊗ h) = β(∂g ⊗ h) + (-1)^p β(g ⊗ ∂h)` on every pair of
/// generators.
fn beta_is_chain_map(c: &ICComplex, d: &ICComplex, beta: &Beta) -> bool {
    let n = c.dim();
    for m in 1..=2 * n {
        let dm = d.boundary_map(m);
        for pd in 0..=n.min(m) {
            let qd = m - pd;
            if qd > n {
                continue;
            }
            for g in 0..c.rank(pd) {
                for h in 0..c.rank(qd) {
                    let col = beta.column(pd, g, qd, h, c.rank(qd));
                    let lhs = dm.mul_vec(beta.matrices[m].column(col));
                    let mut rhs = SparseVec::new();
                    if pd > 0 {
                        for (g2, x) in c.boundary_map(pd).column(g).iter() {
                            let j = beta.column(pd - 1, g2, qd, h, c.rank(qd));
                            rhs.add_scaled(x, beta.matrices[m - 1].column(j));
                        }
                    }
                    if qd > 0 {
                        let sign = if pd % 2 == 0 { Int::ONE } else { Int::NEG_ONE };
                        for (h2, y) in c.boundary_map(qd).column(h).iter() {
                            let j = beta.column(pd, g, qd - 1, h2, c.rank(qd - 1));
                            rhs.add_scaled(&(&sign * y), beta.matrices[m - 1].column(j));
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Builds `(C, D, β, φ)` with the default size limits.
pub fn symmetric_complex<'a>(
    k: &'a SimplicialComplex,
    strat: &'a Stratification,
    xi: FundamentalCycle,
) -> Result<SymmetricComplexData<'a>> {
    symmetric_complex_with(k, strat, xi, SymmetricOptions::default())
}

pub fn symmetric_complex_with<'a>(
    k: &'a SimplicialComplex,
    strat: &'a Stratification,
    xi: FundamentalCycle,
    opts: SymmetricOptions,
) -> Result<SymmetricComplexData<'a>> {
    let n = k.dim();
    let c = ICComplex::new(k, strat, &Perversity::classical(ClassicalName::UpperMiddle), false)?;
    let size = product_size(&k.f_vector(), &k.f_vector());
    let singular = strat.has_singular_strata();
    let nv = k.n_vertices() as Vertex;
    let phi = diagonal(&xi.xi, nv);
    let phi_closed = phi.boundary().is_zero();

    let (mut product, mut pstrat, mut q, mut d, mut beta) = (None, None, None, None, None);
    let mut phi_invariant = true;
    if size <= opts.materialize_limit {
        log::info!("triangulating the square of {} ({size} simplices)", k.name());
        let p = product_staircase(k, k);
        let ps = product_stratification(&p, strat, strat);
        let qp = product_perversity_qnn(&ps)?;
        phi.check_ambient(p.complex())?;
        if let Some(w) = first_non_allowable(p.complex(), &ps, &qp, &phi)? {
            return Err(Error::DiagonalNotAllowable(w));
        }
        phi_invariant = p.transpose_chain(&phi)? == phi;
        if singular || size <= opts.chain_limit {
            let dc = ICComplex::new(p.complex(), &ps, &qp, false)?.into_owned();
            beta = Some(build_beta(&c, &dc, &p)?);
            d = Some(dc);
        }
        product = Some(p);
        pstrat = Some(ps);
        q = Some(qp);
    } else if singular {
        return Err(Error::ProductTooLarge(size));
    }
    Ok(SymmetricComplexData {
        dim: n,
        xi,
        c,
        product_simplices: size,
        product,
        product_stratification: pstrat,
        q,
        d,
        beta,
        phi,
        phi_closed,
        involution: Involution {
            convention: "unsigned transposition of staircase simplices",
            phi_invariant,
        },
        singular,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Solve for `[φ]` in `H_n(D)`.
    Direct,
    /// Evaluate cross products of dual cocycles on `φ` (manifolds only).
    Cup,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub coefficients: Coefficients,
    pub route: Route,
    pub bettis: Vec<usize>,
    /// `M_i`, rows indexed by degree-i classes, columns by degree-(n-i).
    pub matrices: BTreeMap<usize, RatMatrix>,
    pub nondegenerate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral_unimodular: Option<bool>,
    pub signature: i64,
}

fn default_route(data: &SymmetricComplexData) -> Route {
    if data.d.is_some() {
        Route::Direct
    } else {
        Route::Cup
    }
}

pub fn duality_matrices(data: &SymmetricComplexData, coefficients: Coefficients) -> Result<DualityReport> {
    duality_matrices_via(data, coefficients, default_route(data))
}

pub fn duality_matrices_via(
    data: &SymmetricComplexData,
    coefficients: Coefficients,
    route: Route,
) -> Result<DualityReport> {
    if data.xi.relative {
        return Err(Error::HasBoundary);
    }
    let n = data.dim;
    let bases = (0..=n)
        .map(|i| {
            let h = data.c.homology(i, coefficients, true)?;
            let gens = h.generators.unwrap_or_default();
            Ok((h.betti, gens))
        })
        .collect::<Result<Vec<_>>>()?;
    let bettis: Vec<usize> = bases.iter().map(|b| b.0).collect();
    let matrices = match route {
        Route::Direct => direct(data, coefficients, &bases)?,
        Route::Cup => cup(data, &bettis)?,
    };
    finish(n, coefficients, route, bettis, matrices)
}

fn finish(
    n: usize,
    coefficients: Coefficients,
    route: Route,
    bettis: Vec<usize>,
    matrices: BTreeMap<usize, RatMatrix>,
) -> Result<DualityReport> {
    let nondegenerate = matrices.values().all(RatMatrix::is_invertible);
    let integral_unimodular = (coefficients == Coefficients::Z).then(|| {
        matrices
            .values()
            .all(|m| m.is_square() && m.is_integral() && (m.det() == Rat::ONE || m.det() == Rat::NEG_ONE))
    });
    let mut signature = 0;
    if n % 4 == 0 {
        let i = n / 2;
        let m = &matrices[&i];
        if m.is_square() {
            // Koszul sign (-1)^{i(n-i)} is +1 here
            if *m != m.transpose() {
                return Err(Error::AsymmetricPairing(i));
            }
            let (pos, neg, _) = rational_inertia(m);
            signature = pos as i64 - neg as i64;
        }
    }
    Ok(DualityReport {
        coefficients,
        route,
        bettis,
        matrices,
        nondegenerate,
        integral_unimodular,
        signature,
    })
}

fn direct(
    data: &SymmetricComplexData,
    coefficients: Coefficients,
    bases: &[(usize, Vec<Chain>)],
) -> Result<BTreeMap<usize, RatMatrix>> {
    let n = data.dim;
    let (Some(p), Some(d)) = (&data.product, &data.d) else {
        return Err(Error::ProductTooLarge(data.product_simplices));
    };
    let phi = data.phi.to_vector(p.complex())?;
    let target = d.coordinates(n, &phi).ok_or_else(|| {
        let w = data.phi.terms().next().map(|(s, _)| s.to_usize()).unwrap_or_default();
        Error::DiagonalNotAllowable(w)
    })?;
    let cross = |a: &Chain, b: &Chain, i: usize| -> Result<SparseVec> {
        let v = p.shuffle_cross(a, b)?.to_vector(p.complex())?;
        d.coordinates(n, &v).ok_or(Error::UnsolvableDecomposition(i))
    };
    // free x free pairs first, in (i, a, b) order; torsion pairs after
    let mut gens = Vec::new();
    let mut slots = Vec::new();
    for i in 0..=n {
        let (bi, zi) = &bases[i];
        let (bj, zj) = &bases[n - i];
        for a in 0..*bi {
            for b in 0..*bj {
                gens.push(cross(&zi[a], &zj[b], i)?);
                slots.push((i, a, b));
            }
        }
    }
    let free = gens.len();
    if coefficients == Coefficients::Z {
        for i in 0..=n {
            let (bi, zi) = &bases[i];
            let (bj, zj) = &bases[n - i];
            for (a, za) in zi.iter().enumerate() {
                for (b, zb) in zj.iter().enumerate() {
                    if a >= *bi || b >= *bj {
                        gens.push(cross(za, zb, i)?);
                    }
                }
            }
        }
    }
    let upper = if n < d.dim() {
        d.boundary_map(n + 1).clone()
    } else {
        IntMatrix::zeros(d.rank(n), 0)
    };
    let coeffs = solve_modulo_image(&target, &gens, &upper, coefficients)?.ok_or(Error::UnsolvableDecomposition(n))?;
    let mut out: BTreeMap<usize, RatMatrix> =
        (0..=n).map(|i| (i, RatMatrix::zeros(bases[i].0, bases[n - i].0))).collect();
    for (x, &(i, a, b)) in coeffs.into_iter().take(free).zip(&slots) {
        out.get_mut(&i).expect("degree").set(a, b, x);
    }
    Ok(out)
}

/// Free cocycle basis of `H^i`, from the transposed boundary maps of `C`.
fn cocycles(c: &ICComplex, i: usize) -> Result<Vec<SparseVec>> {
    let n = c.dim();
    let delta = if i < n {
        c.boundary_map(i + 1).transpose()
    } else {
        IntMatrix::zeros(0, c.rank(n))
    };
    let prev = if i > 0 {
        c.boundary_map(i).transpose()
    } else {
        IntMatrix::zeros(c.rank(0), 0)
    };
    Ok(homology_basis(&delta, &prev)?.free)
}

fn cup(data: &SymmetricComplexData, bettis: &[usize]) -> Result<BTreeMap<usize, RatMatrix>> {
    if data.singular {
        return Err(Error::ProductTooLarge(data.product_simplices));
    }
    let n = data.dim;
    let c = &data.c;
    let k = c.ambient();
    let nv = k.n_vertices() as Vertex;
    // C has one generator per simplex here, so vectors are simplex vectors
    let mut duals = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let z = c.homology(i, Coefficients::Z, true)?.generators.unwrap_or_default();
        let z: Vec<SparseVec> = z.iter().take(bettis[i]).map(|ch| ch.to_vector(k)).collect::<Result<_>>()?;
        let eta = cocycles(c, i)?;
        let mut g = RatMatrix::zeros(eta.len(), z.len());
        for (r, e) in eta.iter().enumerate() {
            for (s, zz) in z.iter().enumerate() {
                g.set(r, s, Rat::from(e.dot(zz)));
            }
        }
        let x = g.inverse().ok_or(Error::UnsolvableDecomposition(i))?;
        duals.push((eta, x));
    }
    let value = |e: &SparseVec, face: &[Vertex]| -> Int {
        if face.windows(2).any(|w| w[0] >= w[1]) {
            return Int::ZERO;
        }
        let idx = k.index_of(face).expect("projection of a product simplex");
        e.get(idx).cloned().unwrap_or(Int::ZERO)
    };
    let mut out = BTreeMap::new();
    for i in 0..=n {
        let (ei, xi) = &duals[i];
        let (ej, xj) = &duals[n - i];
        let mut w = RatMatrix::zeros(ei.len(), ej.len());
        for (s, coef) in data.phi.terms() {
            let front: Vec<Vertex> = s.vertices()[..=i].iter().map(|&v| v / nv).collect();
            let back: Vec<Vertex> = s.vertices()[i..].iter().map(|&v| v % nv).collect();
            for (a, e) in ei.iter().enumerate() {
                let fa = value(e, &front);
                if fa.is_zero() {
                    continue;
                }
                for (b, f) in ej.iter().enumerate() {
                    let fb = value(f, &back);
                    if !fb.is_zero() {
                        let t = coef * Rat::from(&fa * &fb);
                        let cur = w.get(a, b).clone();
                        w.set(a, b, cur + t);
                    }
                }
            }
        }
        out.insert(i, xi.mul(&w).mul(&xj.transpose()));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct KunnethCheck {
    pub rank_hn_d: usize,
    pub expected: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    pub closed: bool,
    /// Degreewise free quotients; automatic for the coordinate subgroups used.
    pub well_behaved: bool,
    pub finite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_lands_in_d: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_chain_map: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kunneth: Option<KunnethCheck>,
    pub phi_invariant: bool,
    pub nondegenerate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duality: Option<DualityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl ConditionReport {
    pub fn all_pass(&self) -> bool {
        self.closed
            && self.well_behaved
            && self.finite
            && self.beta_lands_in_d != Some(false)
            && self.beta_chain_map != Some(false)
            && self.kunneth.as_ref().is_none_or(|k| k.holds)
            && self.nondegenerate
    }
}

/// The conditions at a point; failures are reported, not raised.
pub fn verify_symmetric_conditions(data: &SymmetricComplexData) -> ConditionReport {
    let n = data.dim;
    let (beta_lands_in_d, beta_chain_map, kunneth) = match (&data.d, &data.beta) {
        (Some(d), Some(beta)) => {
            let chain_map = beta_is_chain_map(&data.c, d, beta);
            let kunneth = (|| -> Result<KunnethCheck> {
                let rank = d.homology(n, Coefficients::Q, false)?.betti;
                let b = data.c.homology_all(Coefficients::Q, false)?.bettis();
                let expected = (0..=n).map(|i| b[i] * b[n - i]).sum();
                Ok(KunnethCheck {
                    rank_hn_d: rank,
                    expected,
                    holds: rank == expected,
                })
            })()
            .ok();
            (Some(beta.lands_in_d), Some(chain_map), kunneth)
        }
        _ => (None, None, None),
    };
    let (duality, failure) = match duality_matrices(data, Coefficients::Q) {
        Ok(r) => (Some(r), None),
        Err(e) => (None, Some(e.to_string())),
    };
    ConditionReport {
        closed: data.phi_closed && !data.xi.relative,
        well_behaved: true,
        finite: true,
        beta_lands_in_d,
        beta_chain_map,
        kunneth,
        phi_invariant: data.involution.phi_invariant,
        nondegenerate: duality.as_ref().is_some_and(|d| d.nondegenerate),
        duality,
        failure,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SignatureReport {
    pub dim: usize,
    pub signature: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inertia: Option<(usize, usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duality: Option<DualityReport>,
}

/// Signature of the intersection form; 0 unless `4 | n`.
pub fn signature(
    k: &SimplicialComplex,
    strat: Option<&Stratification>,
    orientation: Option<&Orientation>,
) -> Result<SignatureReport> {
    signature_with(k, strat, orientation, SymmetricOptions::default())
}

pub fn signature_with(
    k: &SimplicialComplex,
    strat: Option<&Stratification>,
    orientation: Option<&Orientation>,
    opts: SymmetricOptions,
) -> Result<SignatureReport> {
    let owned;
    let strat = match strat {
        Some(s) => s,
        None => {
            owned = skeletal_stratification(k, None)?;
            &owned
        }
    };
    if !check_ip(k, Some(strat), false)?.verdict() {
        return Err(Error::NotIP);
    }
    let o = match orientation {
        Some(o) => o.clone(),
        None => orient(k)?,
    };
    let xi = fundamental_cycle(k, &o, Some(strat))?;
    let n = k.dim();
    if n % 4 != 0 {
        return Ok(SignatureReport {
            dim: n,
            signature: 0,
            inertia: None,
            duality: None,
        });
    }
    let data = symmetric_complex_with(k, strat, xi, opts)?;
    let rep = duality_matrices(&data, Coefficients::Q)?;
    let m = &rep.matrices[&(n / 2)];
    let inertia = m.is_square().then(|| rational_inertia(m));
    Ok(SignatureReport {
        dim: n,
        signature: rep.signature,
        inertia,
        duality: Some(rep),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn data_for(k: &SimplicialComplex, st: &Stratification) -> SymmetricComplexData<'static> {
        let k: &'static SimplicialComplex = Box::leak(Box::new(k.clone()));
        let st: &'static Stratification = Box::leak(Box::new(st.clone()));
        let o = orient(k).unwrap();
        let xi = fundamental_cycle(k, &o, Some(st)).unwrap();
        symmetric_complex(k, st, xi).unwrap()
    }

    #[test]
    fn sphere_conditions_and_routes_agree() {
        let k = zoo::sphere(2);
        let st = skeletal_stratification(&k, None).unwrap();
        let data = data_for(&k, &st);
        let r = verify_symmetric_conditions(&data);
        assert!(r.all_pass(), "{r:?}");
        let k2 = r.kunneth.unwrap();
        assert_eq!((k2.rank_hn_d, k2.expected), (2, 2));
        for coeff in [Coefficients::Q, Coefficients::Z] {
            let a = duality_matrices_via(&data, coeff, Route::Direct).unwrap();
            let b = duality_matrices_via(&data, coeff, Route::Cup).unwrap();
            assert_eq!(a.matrices, b.matrices);
        }
        let z = duality_matrices(&data, Coefficients::Z).unwrap();
        assert_eq!(z.integral_unimodular, Some(true));
        assert_eq!(z.matrices[&1].rows(), 0);
    }

    #[test]
    fn relative_simplex_cycle() {
        let k = zoo::simplex(3);
        let o = orient(&k).unwrap();
        let xi = fundamental_cycle(&k, &o, None).unwrap();
        assert!(xi.relative && xi.zero_allowable);
        assert_eq!(xi.terms, 1);
    }

    #[test]
    fn torus_pairing_is_unimodular() {
        let k = zoo::torus();
        let st = skeletal_stratification(&k, None).unwrap();
        let data = data_for(&k, &st);
        let z = duality_matrices(&data, Coefficients::Z).unwrap();
        assert!(z.nondegenerate);
        assert_eq!(z.integral_unimodular, Some(true));
        assert_eq!(z.matrices[&1].rows(), 2);
        // antisymmetric middle pairing in dimension 2
        assert_eq!(z.matrices[&1], z.matrices[&1].transpose().scaled(&Rat::NEG_ONE));
    }

    #[test]
    fn pinched_torus_conditions() {
        let k = zoo::pinched_torus();
        let st = skeletal_stratification(&k, None).unwrap();
        let data = data_for(&k, &st);
        assert!(data.q.is_some() && data.d.is_some());
        let r = verify_symmetric_conditions(&data);
        assert!(r.all_pass(), "{r:?}");
        let z = duality_matrices(&data, Coefficients::Z).unwrap();
        assert_eq!(z.bettis, vec![1, 0, 1]);
        assert_eq!(z.integral_unimodular, Some(true));
    }

    #[test]
    fn dimension_rule_and_reversal() {
        for k in [zoo::sphere(3), zoo::torus(), zoo::pinched_torus()] {
            assert_eq!(signature(&k, None, None).unwrap().signature, 0);
        }
        let k = zoo::cp2();
        let o = orient(&k).unwrap();
        let a = signature(&k, None, Some(&o)).unwrap().signature;
        let b = signature(&k, None, Some(&o.reversed())).unwrap().signature;
        assert_eq!(a.abs(), 1);
        assert_eq!(a, -b);
    }

    #[test]
    fn non_ip_is_rejected() {
        let k = zoo::complex("sigma_rp3").unwrap();
        assert_eq!(signature(&k, None, None).unwrap_err(), Error::NotIP);
        assert!(matches!(signature(&zoo::rp2(), None, None), Err(Error::NonOrientable(_))));
    }
}
