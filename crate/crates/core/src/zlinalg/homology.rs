use dashu_int::IBig;

use super::snf::{invariant_factors, smith_with_u_inverse};
use super::{Int, IntMatrix, QEchelon, SparseVec, ZEchelon};
use crate::error::{Error, Result};

fn check_composable(d_k: &IntMatrix, d_k1: &IntMatrix) -> Result<()> {
    if d_k.cols() != d_k1.rows() {
        return Err(Error::DimensionMismatch {
            expected: d_k.cols(),
            found: d_k1.rows(),
        });
    }
    for (j, col) in d_k1.columns().iter().enumerate() {
        if !d_k.mul_vec(col).is_zero() {
            return Err(Error::CompositionNonzero(j));
        }
    }
    Ok(())
}

/// Rank over Q.
pub fn rank_q(a: &IntMatrix) -> usize {
    let mut e = QEchelon::for_rank();
    for c in a.columns() {
        e.insert(c.clone());
    }
    e.rank()
}

/// Homology at the middle of `C_{k+1} --d_k1--> C_k --d_k--> C_{k-1}`:
/// the Betti number and the invariant factors > 1.
pub fn homology_z(d_k: &IntMatrix, d_k1: &IntMatrix) -> Result<(usize, Vec<Int>)> {
    check_composable(d_k, d_k1)?;
    let factors = invariant_factors(d_k1);
    let betti = d_k.cols() - rank_q(d_k) - factors.len();
    let torsion = factors.into_iter().filter(|d| *d > IBig::ONE).collect();
    Ok((betti, torsion))
}

/// Betti number over Q.
pub fn homology_q(d_k: &IntMatrix, d_k1: &IntMatrix) -> Result<usize> {
    check_composable(d_k, d_k1)?;
    Ok(d_k.cols() - rank_q(d_k) - rank_q(d_k1))
}

/// Homology together with cycle representatives of a basis of the free part
/// and of each cyclic torsion summand.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    pub betti: usize,
    pub torsion: Vec<Int>,
    pub free: Vec<SparseVec>,
    pub torsion_cycles: Vec<SparseVec>,
}

pub fn homology_basis(d_k: &IntMatrix, d_k1: &IntMatrix) -> Result<HomologyBasis> {
    check_composable(d_k, d_k1)?;
    let mut kern = ZEchelon::new(true);
    for c in d_k.columns() {
        kern.insert(c.clone());
    }
    let cycles = ZEchelon::from_vectors(kern.kernel());
    let basis: Vec<SparseVec> = cycles.basis().into_iter().cloned().collect();
    let r = basis.len();
    let mut bz = Vec::with_capacity(d_k1.cols());
    for (j, col) in d_k1.columns().iter().enumerate() {
        bz.push(cycles.coordinates(col).ok_or(Error::CompositionNonzero(j))?);
    }
    let bz = IntMatrix::from_columns(r, bz);
    let (snf, u_inv) = smith_with_u_inverse(&bz);
    let diag = snf.diagonal();
    let to_chain = |i: usize| {
        let mut z = SparseVec::new();
        for (j, c) in u_inv.column(i).iter() {
            z.add_scaled(c, &basis[j]);
        }
        z
    };
    let mut torsion = Vec::new();
    let mut torsion_cycles = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        if *d > IBig::ONE {
            torsion.push(d.clone());
            torsion_cycles.push(to_chain(i));
        }
    }
    let free: Vec<SparseVec> = (diag.len()..r).map(to_chain).collect();
    Ok(HomologyBasis {
        betti: free.len(),
        torsion,
        free,
        torsion_cycles,
    })
}
