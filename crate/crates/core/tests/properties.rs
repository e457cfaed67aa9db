use ipsig_core::complex::{product_staircase, Chain, Simplex, SimplicialComplex};
use ipsig_core::perversity::{q_rho_value, qk_value};
use ipsig_core::zlinalg::{invariant_factors, smith_normal_form, Coefficients, Int, IntMatrix, Rat};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

fn simplex_complex(n: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets("delta", vec![(0..=n as u32).collect()]).unwrap()
}

/// Random integral chain of degree `p` on the full simplex on `n + 1` vertices.
fn random_chain(n: usize, p: usize, seeds: &[(u32, i64)]) -> Chain {
    let faces: Vec<Vec<u32>> = (0u32..1 << (n + 1))
        .filter(|m| m.count_ones() as usize == p + 1)
        .map(|m| (0..=n as u32).filter(|i| m & (1 << i) != 0).collect())
        .collect();
    let terms = seeds.iter().map(|&(i, x)| {
        let f = faces[i as usize % faces.len()].clone();
        (Simplex::new(f).unwrap(), Rat::from(Int::from(x)))
    });
    Chain::from_terms(p, Coefficients::Z, terms).unwrap()
}

fn seeds() -> impl Strategy<Value = Vec<(u32, i64)>> {
    prop::collection::vec((0u32..64, -3i64..=3), 1..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_is_a_valid_decomposition(rows in small_matrix()) {
        let a = IntMatrix::from_dense(&rows);
        let r = smith_normal_form(&a);
        prop_assert_eq!(r.u.mul(&a).mul(&r.v), r.s.clone());
        let d = r.diagonal();
        for w in d.windows(2) {
            prop_assert_eq!(&w[1] % &w[0], Int::ZERO);
        }
        prop_assert!(d.iter().all(|x| *x > Int::ZERO));
        prop_assert_eq!(invariant_factors(&a), d);
    }

    #[test]
    fn cross_product_satisfies_leibniz(p in 1usize..3, q in 1usize..3, sa in seeds(), sb in seeds()) {
        let (k, l) = (simplex_complex(3), simplex_complex(2));
        let prod = product_staircase(&k, &l);
        let a = random_chain(3, p, &sa);
        let b = random_chain(2, q, &sb);
        let lhs = prod.shuffle_cross(&a, &b).unwrap().boundary();
        let mut rhs = prod.shuffle_cross(&a.boundary(), &b).unwrap();
        let sign = if p % 2 == 0 { Rat::ONE } else { Rat::NEG_ONE };
        rhs.add_scaled(&sign, &prod.shuffle_cross(&a, &b.boundary()).unwrap());
        prop_assert!(lhs == rhs);
    }

    #[test]
    fn diagonal_is_a_chain_map(p in 1usize..4, s in seeds()) {
        let k = simplex_complex(3);
        let prod = product_staircase(&k, &k);
        let c = random_chain(3, p, &s);
        let lhs = prod.diagonal_chain(&c).unwrap().boundary();
        let rhs = prod.diagonal_chain(&c.boundary()).unwrap();
        prop_assert!(lhs == rhs);
    }

    #[test]
    fn refinement_never_lowers_q_rho(
        codims in prop::collection::vec(prop::sample::select(vec![0usize, 2, 3, 4, 5, 6, 9]), 1..5),
        cuts in prop::collection::vec(any::<bool>(), 4),
    ) {
        let k = codims.len();
        let coarse = vec![(0..k).collect::<Vec<_>>()];
        let mut fine: Vec<Vec<usize>> = vec![vec![0]];
        for i in 1..k {
            if cuts[i - 1] {
                fine.push(vec![i]);
            } else {
                fine.last_mut().unwrap().push(i);
            }
        }
        let singletons: Vec<Vec<usize>> = (0..k).map(|i| vec![i]).collect();
        prop_assert!(q_rho_value(&codims, &coarse) <= q_rho_value(&codims, &fine));
        prop_assert!(q_rho_value(&codims, &fine) <= q_rho_value(&codims, &singletons));
        prop_assert_eq!(q_rho_value(&codims, &singletons), qk_value(&codims));
    }

    #[test]
    fn qk_stays_below_top(codims in prop::collection::vec(2usize..12, 1..5)) {
        let total: usize = codims.iter().sum();
        prop_assert!(qk_value(&codims) <= total as i64 - 2);
    }
}
