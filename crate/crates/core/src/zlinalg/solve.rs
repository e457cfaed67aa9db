use super::{Coefficients, Int, IntMatrix, QEchelon, Rat, SparseVec, ZEchelon};
use crate::error::{Error, Result};

fn check_dim(v: &SparseVec, rows: usize) -> Result<()> {
    match v.max_index() {
        Some(i) if i >= rows => Err(Error::DimensionMismatch {
            expected: rows,
            found: i + 1,
        }),
        _ => Ok(()),
    }
}

/// Finds `c` with `target = sum c_i generators_i + b * y` for some `y`.
///
/// Over Q the answer is one rational solution; over Z an integral one. `None`
/// means no solution exists.
pub fn solve_modulo_image(
    target: &SparseVec,
    generators: &[SparseVec],
    b: &IntMatrix,
    field: Coefficients,
) -> Result<Option<Vec<Rat>>> {
    check_dim(target, b.rows())?;
    for g in generators {
        check_dim(g, b.rows())?;
    }
    match field {
        Coefficients::Q => Ok(solve_q(target, generators, b)),
        Coefficients::Z => Ok(solve_z(target, generators, b)),
    }
}

/// Tags generator `j` with row `j` and the target with row `g`, shifts the
/// real rows above them and clears lows: once only tags remain, the residual
/// reads off `s * target - sum a_j generators_j` in the image of `b`.
fn solve_q(target: &SparseVec, generators: &[SparseVec], b: &IntMatrix) -> Option<Vec<Rat>> {
    let g = generators.len();
    let shift = |v: &SparseVec| v.reindex(|i| Some(i + g + 1));
    let mut e = QEchelon::for_rank();
    for c in b.columns() {
        e.insert(shift(c));
    }
    for (j, x) in generators.iter().enumerate() {
        let mut v = shift(x);
        v.set(j, Int::ONE);
        e.insert(v);
    }
    let mut t = shift(target);
    t.set(g, Int::ONE);
    let r = e.reduce(t);
    if r.max_index() != Some(g) {
        return None;
    }
    let s = Rat::from(r.get(g).expect("tag").clone());
    Some((0..g).map(|j| -Rat::from(r.get(j).cloned().unwrap_or(Int::ZERO)) / &s).collect())
}

fn solve_z(target: &SparseVec, generators: &[SparseVec], b: &IntMatrix) -> Option<Vec<Rat>> {
    let mut e = ZEchelon::new(true);
    for g in generators.iter().chain(b.columns()) {
        e.insert(g.clone());
    }
    let combo = e.solve(target)?;
    let mut c = vec![Rat::ZERO; generators.len()];
    for (i, x) in combo.iter() {
        if i < generators.len() {
            c[i] = Rat::from(x.clone());
        }
    }
    Some(c)
}

/// Integer solution of `a * x = rhs`, if one exists.
pub fn solve_integer_system(a: &IntMatrix, rhs: &SparseVec) -> Result<Option<SparseVec>> {
    check_dim(rhs, a.rows())?;
    let mut e = ZEchelon::new(true);
    for c in a.columns() {
        e.insert(c.clone());
    }
    Ok(e.solve(rhs))
}

#[cfg(test)]
mod tests {
    use dashu_int::IBig;

    use super::*;

    fn v(e: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_entries(e.iter().map(|(i, x)| (*i, IBig::from(*x))))
    }

    #[test]
    fn zero_target() {
        let gens = vec![v(&[(0, 1)])];
        let b = IntMatrix::zeros(2, 0);
        for f in [Coefficients::Z, Coefficients::Q] {
            assert_eq!(solve_modulo_image(&SparseVec::new(), &gens, &b, f).unwrap(), Some(vec![Rat::ZERO]));
        }
    }

    #[test]
    fn generator_plus_boundary() {
        let gens = vec![v(&[(0, 1), (1, 1)]), v(&[(2, 1)])];
        let b = IntMatrix::from_columns(3, vec![v(&[(1, 1), (2, -1)])]);
        let t = v(&[(0, 1), (1, 2), (2, -1)]);
        let z = solve_modulo_image(&t, &gens, &b, Coefficients::Z).unwrap().unwrap();
        // gens are independent modulo b, so the answer is unique
        assert_eq!(z, vec![Rat::ONE, Rat::ZERO]);
        let q = solve_modulo_image(&t, &gens, &b, Coefficients::Q).unwrap().unwrap();
        assert_eq!(q, z);
    }

    #[test]
    fn integrality_matters() {
        let gens = vec![v(&[(0, 2)])];
        let b = IntMatrix::zeros(1, 0);
        let t = v(&[(0, 1)]);
        assert_eq!(solve_modulo_image(&t, &gens, &b, Coefficients::Z).unwrap(), None);
        let q = solve_modulo_image(&t, &gens, &b, Coefficients::Q).unwrap().unwrap();
        assert_eq!(q, vec![Rat::from_parts(IBig::ONE, 2u8.into())]);
    }

    #[test]
    fn dimension_checked() {
        let r = solve_modulo_image(&v(&[(5, 1)]), &[], &IntMatrix::zeros(2, 0), Coefficients::Q);
        assert!(matches!(r, Err(Error::DimensionMismatch { .. })));
    }
}
