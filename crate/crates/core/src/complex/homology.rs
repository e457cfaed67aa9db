use super::complex::SimplicialComplex;
use crate::error::Result;
use crate::zlinalg::{homology_z, IntMatrix, Int};

/// Ordinary integral homology, one `(betti, torsion)` pair per degree.
pub fn simplicial_homology(k: &SimplicialComplex) -> Result<Vec<(usize, Vec<Int>)>> {
    if k.is_empty() {
        return Ok(Vec::new());
    }
    let n = k.dim();
    let mut out = Vec::with_capacity(n + 1);
    let mut lower = k.boundary_matrix(0)?;
    for d in 0..=n {
        let upper = if d < n {
            k.boundary_matrix(d + 1)?
        } else {
            IntMatrix::zeros(k.count(n), 0)
        };
        out.push(homology_z(&lower, &upper)?);
        lower = upper;
    }
    Ok(out)
}

/// True if `k` has the integral homology of the `d`-sphere. The empty
/// complex counts as the (-1)-sphere.
pub fn is_homology_sphere(k: &SimplicialComplex, d: isize) -> Result<bool> {
    if k.is_empty() {
        return Ok(d == -1);
    }
    if d < 0 || k.dim() != d as usize {
        return Ok(false);
    }
    let h = simplicial_homology(k)?;
    Ok(h.iter().enumerate().all(|(i, (b, t))| {
        let expect = if d == 0 {
            if i == 0 { 2 } else { 0 }
        } else if i == 0 || i == d as usize {
            1
        } else {
            0
        };
        *b == expect && t.is_empty()
    }))
}

/// True if `k` is acyclic over Z (reduced homology vanishes) and nonempty.
pub fn is_acyclic(k: &SimplicialComplex) -> Result<bool> {
    if k.is_empty() {
        return Ok(false);
    }
    let h = simplicial_homology(k)?;
    Ok(h.iter()
        .enumerate()
        .all(|(i, (b, t))| t.is_empty() && *b == usize::from(i == 0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spheres_and_balls() {
        let c = SimplicialComplex::from_facets("c", vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert!(is_homology_sphere(&c, 1).unwrap());
        assert!(!is_homology_sphere(&c, 2).unwrap());
        let two = SimplicialComplex::from_facets("s0", vec![vec![0], vec![1]]).unwrap();
        assert!(is_homology_sphere(&two, 0).unwrap());
        assert!(is_homology_sphere(&SimplicialComplex::empty("e"), -1).unwrap());
        let arc = SimplicialComplex::from_facets("a", vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert!(is_acyclic(&arc).unwrap());
        assert!(!is_acyclic(&c).unwrap());
    }
}
