//! Acceptance suite: one line per criterion, exact arithmetic throughout
//! (tolerance 0). A criterion listed in `KNOWN_FAILING` is still computed
//! and printed as FAIL; the process fails if any other criterion fails or
//! if a known failure starts passing.

mod oracle;

use std::time::{Duration, Instant};

use ipsig_core::complex::{simplicial_homology, SimplicialComplex};
use ipsig_core::intersection_homology::{ih, IHResult};
use ipsig_core::ip_witt::{check_ip, check_witt, Condition};
use ipsig_core::perversity::{
    partition_perversity_qk, product_perversity_qnn, q_rho_value, qk_value, ClassicalName, Perversity,
};
use ipsig_core::pseudomanifold::{
    check_boundary_pseudomanifold, check_pseudomanifold, orient, product_stratification, skeletal_stratification,
    Orientation,
};
use ipsig_core::symmetric_signature::{
    duality_matrices, fundamental_cycle, signature, symmetric_complex, verify_symmetric_conditions,
};
use ipsig_core::zlinalg::{Coefficients, Rat};
use ipsig_core::{zoo, Error};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Criterion 3 states the lower-middle table of the suspended torus as
/// (Z, 0, Z², Z); the cone-formula oracle and the implementation both give
/// (Z, Z², 0, Z), and the stated table is the upper-middle one.
const KNOWN_FAILING: &[usize] = &[3];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn oracle_of(k: &SimplicialComplex) -> oracle::Complex {
    let facets: Vec<Vec<u32>> = k.facets().iter().map(|f| f.vertices().to_vec()).collect();
    oracle::Complex::new(&facets)
}

fn table(r: &IHResult) -> Vec<(usize, Vec<u64>)> {
    r.table()
        .into_iter()
        .map(|(b, t)| (b, t.iter().map(|x| u64::try_from(x).unwrap()).collect()))
        .collect()
}

fn strat(k: &SimplicialComplex) -> ipsig_core::pseudomanifold::Stratification {
    skeletal_stratification(k, None).unwrap()
}

fn ih_of(k: &SimplicialComplex, name: ClassicalName) -> IHResult {
    ih(k, &strat(k), &Perversity::classical(name), Coefficients::Z, false).unwrap()
}

const ALL_PERVERSITIES: [ClassicalName; 4] = ClassicalName::ALL;

fn c1() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for name in ["s3", "pinched_torus"] {
        let k = zoo::complex(name).unwrap();
        let lib = check_pseudomanifold(&k).ok;
        let orc = oracle_of(&k).is_pseudomanifold();
        ok &= lib && orc;
        notes.push(format!("{name}: {lib}"));
    }
    let w = zoo::wedge_of_triangles();
    let v = check_pseudomanifold(&w);
    let orc = oracle_of(&w).is_pseudomanifold();
    ok &= !v.ok && !orc && v.witness.is_some();
    notes.push(format!("wedge: {} witness {:?}", v.ok, v.witness.unwrap_or_default()));
    outcome(ok, notes.join("; "))
}

fn c2() -> Outcome {
    let mut ok = true;
    let mut n = 0;
    for name in ["s2", "t2", "rp3"] {
        let k = zoo::complex(name).unwrap();
        let h: Vec<(usize, Vec<u64>)> = simplicial_homology(&k)
            .unwrap()
            .into_iter()
            .map(|(b, t)| (b, t.iter().map(|x| u64::try_from(x).unwrap()).collect()))
            .collect();
        ok &= oracle::profile_of_table(&h) == oracle_of(&k).profile();
        for p in ALL_PERVERSITIES {
            ok &= table(&ih_of(&k, p)) == h;
            n += 1;
        }
    }
    outcome(ok, format!("{n} tables equal to ordinary homology; homology matches the mod-p oracle"))
}

fn c3() -> Outcome {
    let st2 = zoo::complex("sigma_t2").unwrap();
    let got = table(&ih_of(&st2, ClassicalName::LowerMiddle));
    let stated: Vec<(usize, Vec<u64>)> = vec![(1, vec![]), (0, vec![]), (2, vec![]), (1, vec![])];
    let t2 = oracle_of(&zoo::torus()).profile();
    let m_formula = oracle::suspension_formula(&t2, 3, 0);
    let n_formula = oracle::suspension_formula(&t2, 3, 1);
    let m_oracle = oracle::profile_of_table(&got) == m_formula;
    let n_got = table(&ih_of(&st2, ClassicalName::UpperMiddle));
    let n_oracle = oracle::profile_of_table(&n_got) == n_formula;

    let pt = zoo::pinched_torus();
    let pt_got = table(&ih_of(&pt, ClassicalName::LowerMiddle));
    let pt_stated = pt_got == vec![(1, vec![]), (0, vec![]), (1, vec![])];
    let normal = oracle::Complex::new(&oracle_of(&pt).normalize_at(0));
    let pt_oracle = oracle::profile_of_table(&pt_got) == normal.profile();

    let bettis = |t: &[(usize, Vec<u64>)]| t.iter().map(|x| x.0).collect::<Vec<_>>();
    let literal = got == stated && pt_stated;
    let oracles = m_oracle && n_oracle && pt_oracle;
    outcome(
        literal && oracles,
        format!(
            "sigma_t2 lower-middle bettis {:?} (stated [1, 0, 2, 1]; cone-formula oracle agrees with computed: {m_oracle}; \
             upper-middle {:?} matches oracle: {n_oracle}); pinched torus {:?} stated match {pt_stated}, normalization oracle {pt_oracle}",
            bettis(&got),
            bettis(&n_got),
            bettis(&pt_got)
        ),
    )
}

fn c3_oracles_hold(detail: &str) -> bool {
    detail.contains("agrees with computed: true")
        && detail.contains("matches oracle: true")
        && detail.contains("stated match true, normalization oracle true")
}

fn link_oracle_even_vanishes(k: &oracle::Complex, v: u32, degree: usize, prime: u64) -> bool {
    oracle::Complex::new(&k.link(&[v])).homology_mod_p(prime)[degree] == 0
}

fn c4() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    // pinched torus: link of the pinch point is two circles, H_0 torsion-free
    let pt = zoo::pinched_torus();
    let r = check_ip(&pt, None, false).unwrap();
    let link = oracle::Complex::new(&oracle_of(&pt).link(&[0])).profile();
    let torsion_free = link.iter().all(|h| h[0] == link[4][0]);
    ok &= r.verdict() && r.witt && torsion_free;
    notes.push(format!("pinched_torus IP {}", r.verdict()));

    // ΣRP³: link RP³, Z/2 in degree 1
    let s = zoo::complex("sigma_rp3").unwrap();
    let r = check_ip(&s, None, false).unwrap();
    let w = check_witt(&s, None, false).unwrap();
    let apex = s.n_vertices() as u32 - 1;
    let lp = oracle::Complex::new(&oracle_of(&s).link(&[apex])).profile();
    let oracle_torsion = lp[0][1] == 1 && lp[4][1] == 0;
    let witness = r
        .evidence
        .iter()
        .any(|e| e.condition == Condition::TorsionFree && !e.pass && e.torsion.iter().any(|t| *t == 2.into()));
    ok &= !r.verdict() && w.witt && r.witt && witness && oracle_torsion;
    notes.push(format!("sigma_rp3 IP {} Witt {} Z/2 witness {witness}", r.verdict(), w.witt));

    // ΣT²: link T², H_1 = Z² in the middle degree
    let s = zoo::complex("sigma_t2").unwrap();
    let r = check_ip(&s, None, false).unwrap();
    let w = check_witt(&s, None, false).unwrap();
    let apex = s.n_vertices() as u32 - 1;
    let oracle_nonvanishing = !link_oracle_even_vanishes(&oracle_of(&s), apex, 1, oracle::PRIMES[4]);
    ok &= !r.verdict() && !w.witt && oracle_nonvanishing;
    notes.push(format!("sigma_t2 IP {} Witt {}", r.verdict(), w.witt));

    let mut manifolds = 0;
    for name in ["s2", "s3", "rp2", "t2", "rp3", "cp2", "s2xs2", "delta3"] {
        let k = zoo::complex(name).unwrap();
        let r = check_ip(&k, None, false).unwrap();
        let w = check_witt(&k, None, false).unwrap();
        ok &= r.verdict() && w.witt && r.evidence.is_empty();
        manifolds += 1;
    }
    notes.push(format!("{manifolds} manifolds vacuous"));
    outcome(ok, notes.join("; "))
}

fn c5() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for name in ["pinched_torus_user", "pinched_torus_extra_point"] {
        let f = zoo::entry(name).unwrap();
        let k = &f.complex;
        let user = skeletal_stratification(k, f.stratification.as_deref()).unwrap();
        let skel = strat(k);
        let m = Perversity::classical(ClassicalName::LowerMiddle);
        let a = ih(k, &user, &m, Coefficients::Z, false).unwrap().table();
        let b = ih(k, &skel, &m, Coefficients::Z, false).unwrap().table();
        let ia = check_ip(k, Some(&user), false).unwrap().verdict();
        let ib = check_ip(k, Some(&skel), false).unwrap().verdict();
        ok &= a == b && ia == ib && ia;
        notes.push(format!("{name}: tables equal {}, IP {ia}/{ib}", a == b));
    }
    outcome(ok, notes.join("; "))
}

fn c6() -> Outcome {
    let k = zoo::complex("pinched_torus_x_interval").unwrap();
    let v = check_boundary_pseudomanifold(&k);
    let Some(b) = v.decomposition.boundary.clone() else {
        return outcome(false, "no boundary extracted");
    };
    let ip = check_ip(&b, None, false).unwrap().verdict();
    let orc = oracle_of(&k);
    let ob = oracle::Complex::new(&orc.boundary_facets());
    let same = ob.f_vector() == b.f_vector();
    // two disjoint closed copies of the pinched torus
    let closed = ob.ridge_cofaces().values().all(|c| c.len() == 2);
    let ok = v.verdict.ok && v.boundary_is_pseudomanifold && ip && same && closed;
    outcome(ok, format!("boundary f-vector {:?}, IP {ip}, oracle boundary agrees {same}", b.f_vector()))
}

fn ip_members() -> Vec<&'static str> {
    zoo::NAMES
        .iter()
        .copied()
        .filter(|n| check_ip(&zoo::complex(n).unwrap(), None, false).map(|r| r.verdict()).unwrap_or(false))
        .collect()
}

fn c7() -> Outcome {
    let members = ip_members();
    let mut ok = true;
    for name in &members {
        let k = zoo::complex(name).unwrap();
        ok &= ih_of(&k, ClassicalName::LowerMiddle).table() == ih_of(&k, ClassicalName::UpperMiddle).table();
    }
    outcome(ok, format!("{} IP members: {}", members.len(), members.join(", ")))
}

fn closed_orientable_ip() -> Vec<&'static str> {
    ip_members()
        .into_iter()
        .filter(|n| {
            let k = zoo::complex(n).unwrap();
            check_boundary_pseudomanifold(&k).decomposition.is_empty() && orient(&k).is_ok()
        })
        .collect()
}

fn c8() -> Outcome {
    let members = closed_orientable_ip();
    let mut ok = true;
    let mut notes = Vec::new();
    for name in &members {
        let f = zoo::entry(name).unwrap();
        let k = &f.complex;
        let t = table(&ih_of(k, ClassicalName::LowerMiddle));
        let n = k.dim();
        let sym = (0..=n).all(|i| t[i].0 == t[n - i].0) && (0..n).all(|i| t[i].1 == t[n - 1 - i].1);
        let st = strat(k);
        let o = orient(k).unwrap();
        let xi = fundamental_cycle(k, &o, Some(&st)).unwrap();
        let data = symmetric_complex(k, &st, xi).unwrap();
        let q = duality_matrices(&data, Coefficients::Q).unwrap();
        ok &= sym && q.nondegenerate;
        if ["s2", "pinched_torus"].contains(name) {
            let z = duality_matrices(&data, Coefficients::Z).unwrap();
            let unit = |m: &ipsig_core::zlinalg::RatMatrix| m.det() == Rat::ONE || m.det() == Rat::NEG_ONE;
            // oracle: both have H_0 = H_2 = Z and H_1 = 0, so M_0 and M_2 are ±1
            let shapes = z.bettis == vec![1, 0, 1] && unit(&z.matrices[&0]) && unit(&z.matrices[&2]);
            ok &= z.integral_unimodular == Some(true) && shapes;
            notes.push(format!("{name} |det| = 1"));
        }
        if !sym || !q.nondegenerate {
            notes.push(format!("{name} FAILED"));
        }
    }
    outcome(ok, format!("{} members ({}); {}", members.len(), members.join(", "), notes.join(", ")))
}

fn c9() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for name in ["s2", "pinched_torus"] {
        let k = zoo::complex(name).unwrap();
        let st = strat(&k);
        let xi = fundamental_cycle(&k, &orient(&k).unwrap(), Some(&st)).unwrap();
        let data = symmetric_complex(&k, &st, xi).unwrap();
        let r = verify_symmetric_conditions(&data);
        // Künneth expectation from oracle Betti numbers (S² itself, or the
        // normalization of the pinched torus)
        let orc = if name == "s2" {
            oracle_of(&k)
        } else {
            oracle::Complex::new(&oracle_of(&k).normalize_at(0))
        };
        let b = orc.homology_mod_p(oracle::PRIMES[4]);
        let n = k.dim();
        let expected: usize = (0..=n).map(|i| b[i] * b[n - i]).sum();
        let kun = r.kunneth.as_ref().is_some_and(|x| x.holds && x.expected == expected);
        let pass = r.closed && r.beta_chain_map == Some(true) && r.beta_lands_in_d == Some(true) && kun && r.nondegenerate;
        ok &= pass;
        notes.push(format!(
            "{name}: closed {} chain map {:?} rank H_n(D) {:?} expected {expected}",
            r.closed,
            r.beta_chain_map,
            r.kunneth.map(|x| x.rank_hn_d)
        ));
    }
    let k = zoo::complex("sigma_t2").unwrap();
    let st = strat(&k);
    let xi = fundamental_cycle(&k, &orient(&k).unwrap(), Some(&st)).unwrap();
    let data = symmetric_complex(&k, &st, xi).unwrap();
    let r = verify_symmetric_conditions(&data);
    let formula = oracle::suspension_formula(&oracle_of(&zoo::torus()).profile(), 3, 1);
    let asym = formula[4][1] != formula[4][2];
    ok &= !r.nondegenerate && asym;
    notes.push(format!("sigma_t2 nondegenerate {}", r.nondegenerate));
    outcome(ok, notes.join("; "))
}

fn c10() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    let f = zoo::entry("cp2").unwrap();
    let k = &f.complex;
    let o = Orientation::from_facet_signs(k, f.orientation.as_ref().unwrap()).unwrap();
    let st = strat(k);
    let xi = fundamental_cycle(k, &o, Some(&st)).unwrap();
    let data = symmetric_complex(k, &st, xi).unwrap();
    let materialized = data.product.as_ref().map(|p| p.complex().f_vector());
    let sig = signature(k, None, Some(&o)).unwrap().signature;
    let rev = signature(k, None, Some(&o.reversed())).unwrap().signature;
    let signs: Vec<i64> = (0..k.facets().len()).map(|i| f.orientation.as_ref().unwrap()[&i] as i64).collect();
    let oc = oracle_of(k);
    let form = oracle::cup_form(&oc, &signs);
    let oracle_sig = oracle::signature(&form);
    ok &= sig == 1 && oracle_sig == 1 && rev == -1 && materialized.is_some();
    notes.push(format!(
        "cp2 {sig} (oracle {oracle_sig}, reversed {rev}); square triangulated with f-vector {:?}",
        materialized.unwrap_or_default()
    ));

    let s = zoo::complex("s2xs2").unwrap();
    let sig = signature(&s, None, None).unwrap().signature;
    let os = oracle_of(&s);
    let signs = oracle::orient(&os).unwrap();
    let oracle_sig = oracle::signature(&oracle::cup_form(&os, &signs));
    ok &= sig == 0 && oracle_sig == 0;
    notes.push(format!("s2xs2 {sig} (oracle {oracle_sig})"));

    let mut zeros = Vec::new();
    for name in zoo::NAMES {
        let k = zoo::complex(name).unwrap();
        if k.dim() % 4 == 0 {
            continue;
        }
        match signature(&k, None, None) {
            Ok(r) => {
                ok &= r.signature == 0;
                zeros.push(name);
            }
            Err(Error::NotIP | Error::NonOrientable(_) | Error::NotPseudomanifold { .. }) => {}
            Err(e) => {
                ok = false;
                notes.push(format!("{name}: {e}"));
            }
        }
    }
    notes.push(format!("zero by dimension: {}", zeros.join(", ")));
    outcome(ok, notes.join("; "))
}

fn c11() -> Outcome {
    let mut ok = true;
    for c in 2..=16 {
        ok &= qk_value(&[c]) == oracle::nbar(c);
    }
    let mut strata = 0;
    for name in ["s2", "t2", "pinched_torus", "sigma_t2", "pinched_torus_extra_point", "delta3"] {
        let k = zoo::complex(name).unwrap();
        let st = strat(&k);
        let p = ipsig_core::complex::product_staircase(&k, &k);
        let ps = product_stratification(&p, &st, &st);
        let qnn = product_perversity_qnn(&ps).unwrap();
        let q2 = partition_perversity_qk(&ps).unwrap();
        for s in ps.singular() {
            let c = s.factor_codims.clone().unwrap();
            let expect = match (c[0] > 0, c[1] > 0) {
                (true, true) => oracle::nbar(c[0]) + oracle::nbar(c[1]) + 2,
                (true, false) => oracle::nbar(c[0]),
                (false, true) => oracle::nbar(c[1]),
                _ => 0,
            };
            let a = qnn.value(s).unwrap();
            ok &= a == expect && q2.value(s).unwrap() == a && a <= s.codim as i64 - 2;
            strata += 1;
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut trials = 0;
    for _ in 0..2000 {
        let k = rng.gen_range(1..=4);
        let codims: Vec<usize> = (0..k).map(|_| [0, 2, 3, 4, 5, 6, 7, 8][rng.gen_range(0..8)]).collect();
        let mut idx: Vec<usize> = (0..k).collect();
        idx.shuffle(&mut rng);
        // a random partition and a random refinement of it
        let mut coarse: Vec<Vec<usize>> = Vec::new();
        for i in idx {
            if coarse.is_empty() || rng.gen_bool(0.5) {
                coarse.push(vec![i]);
            } else {
                let j = rng.gen_range(0..coarse.len());
                coarse[j].push(i);
            }
        }
        let mut fine = Vec::new();
        for b in &coarse {
            let cut = rng.gen_range(0..=b.len());
            let (x, y) = b.split_at(cut);
            fine.extend([x.to_vec(), y.to_vec()].into_iter().filter(|v| !v.is_empty()));
        }
        ok &= q_rho_value(&codims, &coarse) <= q_rho_value(&codims, &fine);
        trials += 1;
    }
    outcome(ok, format!("Q_1 = n̄ up to codim 16; {strata} product strata; {trials} random refinements"))
}

type Criterion = (usize, &'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "pseudomanifold gate", c1, Duration::from_secs(1)),
        (2, "manifold agreement", c2, Duration::from_secs(5)),
        (3, "IH of singular spaces", c3, Duration::from_secs(5)),
        (4, "IP/Witt discrimination", c4, Duration::from_secs(10)),
        (5, "stratification independence", c5, Duration::from_secs(5)),
        (6, "boundary inheritance", c6, Duration::from_secs(30)),
        (7, "lower/upper middle comparison", c7, Duration::from_secs(10)),
        (8, "duality", c8, Duration::from_secs(60)),
        (9, "symmetric-complex conditions", c9, Duration::from_secs(120)),
        (10, "signature", c10, Duration::from_secs(600)),
        (11, "perversity algebra", c11, Duration::from_secs(1)),
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for (id, title, f, budget) in criteria {
        let t = Instant::now();
        let o = f();
        let dt = t.elapsed();
        let in_time = dt <= budget;
        let pass = o.pass && in_time;
        println!(
            "criterion {id:>2} {} {title}: {} [tolerance 0 (exact); {:.2}s of {}s budget]",
            if pass { "PASS" } else { "FAIL" },
            o.detail,
            dt.as_secs_f64(),
            budget.as_secs()
        );
        if pass {
            passed += 1;
        }
        let known = KNOWN_FAILING.contains(&id);
        if pass == known || (known && !c3_oracles_hold(&o.detail)) {
            unexpected.push(id);
        }
    }
    println!("acceptance: {passed}/11 criteria pass; known failing: {KNOWN_FAILING:?}");
    if !unexpected.is_empty() {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
