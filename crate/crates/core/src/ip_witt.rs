//! IP and Witt conditions, decided on links of singular strata.
//!
//! A stratum of codimension `c` has links of dimension `c - 1`. Even links
//! (dimension `2l`) must have vanishing lower-middle intersection homology in
//! degree `l`; over Z for IP, over Q for Witt. Odd links (dimension `2l - 1`)
//! must have torsion-free lower-middle intersection homology in degree
//! `l - 1`, which only constrains IP.

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::intersection_homology::{ICComplex, IHDegree};
use crate::perversity::{ClassicalName, Perversity};
use crate::pseudomanifold::{check_boundary_pseudomanifold, extract_boundary, orient, skeletal_stratification, Stratification};
use crate::zlinalg::{Coefficients, Int};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    Vanishing,
    TorsionFree,
    /// Odd link under rational coefficients: nothing to check.
    None,
}

#[derive(Clone, Debug, Serialize)]
pub struct EvidenceRow {
    pub stratum: usize,
    pub codim: usize,
    /// Interior simplex whose link was tested.
    pub simplex: Vec<usize>,
    pub link_f_vector: Vec<usize>,
    pub degree: usize,
    pub betti: usize,
    #[serde(serialize_with = "ints")]
    pub torsion: Vec<Int>,
    pub condition: Condition,
    pub pass: bool,
    /// Full lower-middle table of the link, in audit mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub link_table: Option<Vec<(usize, Vec<String>)>>,
}

fn ints<S: serde::Serializer>(v: &[Int], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[derive(Clone, Debug, Serialize)]
pub struct IPReport {
    pub coefficients: Coefficients,
    /// Only decided from integral evidence.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ip: Option<bool>,
    pub witt: bool,
    pub orientable: bool,
    pub audit: bool,
    /// In audit mode, whether every interior simplex of a stratum gave the
    /// same data in the tested degree.
    pub strata_consistent: bool,
    pub evidence: Vec<EvidenceRow>,
}

impl IPReport {
    /// The verdict for the coefficients the report was computed with.
    pub fn verdict(&self) -> bool {
        match self.coefficients {
            Coefficients::Z => self.ip == Some(true),
            Coefficients::Q => self.witt,
        }
    }
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

fn link_degree(link: &SimplicialComplex, degree: usize, coefficients: Coefficients, audit: bool) -> Result<(IHDegree, Option<Vec<(usize, Vec<String>)>>)> {
    let st = skeletal_stratification(link, None)?;
    let ic = ICComplex::new(link, &st, &Perversity::classical(ClassicalName::LowerMiddle), false)?;
    let h = ic.homology(degree, coefficients, false)?;
    let table = if audit {
        let all = ic.homology_all(coefficients, false)?;
        Some(
            all.table()
                .into_iter()
                .map(|(b, t)| (b, t.iter().map(|x| x.to_string()).collect()))
                .collect(),
        )
    } else {
        None
    };
    Ok((h, table))
}

/// Runs the link tests with the given coefficients: Z decides IP (and Witt,
/// since Z-vanishing implies Q-vanishing and Betti numbers agree), Q decides
/// Witt only.
pub fn check_links(
    k: &SimplicialComplex,
    strat: Option<&Stratification>,
    coefficients: Coefficients,
    audit: bool,
) -> Result<IPReport> {
    require_pseudomanifold(k)?;
    let owned;
    let strat = match strat {
        Some(s) => s,
        None => {
            owned = skeletal_stratification(k, None)?;
            &owned
        }
    };
    let bdry = extract_boundary(k);
    let mut evidence = Vec::new();
    let mut consistent = true;
    for s in strat.singular() {
        let link_dim = s.codim - 1;
        let (degree, condition) = if link_dim % 2 == 0 {
            (link_dim / 2, Condition::Vanishing)
        } else {
            let l = (link_dim + 1) / 2;
            let c = match coefficients {
                Coefficients::Z => Condition::TorsionFree,
                Coefficients::Q => Condition::None,
            };
            (l - 1, c)
        };
        let mut first: Option<(usize, Vec<Int>)> = None;
        for t in s.interior_simplices(k, &bdry) {
            let link = k.link(t)?;
            let (h, table) = link_degree(&link, degree, coefficients, audit)?;
            let pass = match condition {
                Condition::Vanishing => h.betti == 0 && h.torsion.is_empty(),
                Condition::TorsionFree => h.torsion.is_empty(),
                Condition::None => true,
            };
            let data = (h.betti, h.torsion.clone());
            match &first {
                None => first = Some(data),
                Some(f) => consistent &= *f == data,
            }
            evidence.push(EvidenceRow {
                stratum: s.id,
                codim: s.codim,
                simplex: t.to_usize(),
                link_f_vector: link.f_vector(),
                degree,
                betti: h.betti,
                torsion: h.torsion,
                condition,
                pass,
                link_table: table,
            });
            if !audit {
                break;
            }
        }
    }
    let all_pass = evidence.iter().all(|r| r.pass);
    let even_vanish = evidence
        .iter()
        .filter(|r| r.condition == Condition::Vanishing)
        .all(|r| r.betti == 0);
    let (ip, witt) = match coefficients {
        Coefficients::Z => (Some(all_pass), even_vanish),
        Coefficients::Q => (None, all_pass),
    };
    Ok(IPReport {
        coefficients,
        ip,
        witt,
        orientable: orient(k).is_ok(),
        audit,
        strata_consistent: consistent,
        evidence,
    })
}

/// IP verdict with integral evidence.
pub fn check_ip(k: &SimplicialComplex, strat: Option<&Stratification>, audit: bool) -> Result<IPReport> {
    check_links(k, strat, Coefficients::Z, audit)
}

/// Witt verdict with rational evidence.
pub fn check_witt(k: &SimplicialComplex, strat: Option<&Stratification>, audit: bool) -> Result<IPReport> {
    check_links(k, strat, Coefficients::Q, audit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn pinched_torus_is_ip() {
        let r = check_ip(&zoo::pinched_torus(), None, true).unwrap();
        assert!(r.verdict() && r.witt && r.strata_consistent);
        assert_eq!(r.evidence[0].condition, Condition::TorsionFree);
        assert_eq!(r.evidence[0].betti, 2);
    }

    #[test]
    fn suspended_torus_is_neither() {
        let k = zoo::complex("sigma_t2").unwrap();
        let r = check_ip(&k, None, false).unwrap();
        assert!(!r.verdict() && !r.witt);
        assert_eq!(r.evidence.len(), 2);
        assert!(!check_witt(&k, None, false).unwrap().witt);
    }

    #[test]
    fn manifolds_pass_vacuously() {
        let r = check_ip(&zoo::torus(), None, false).unwrap();
        assert!(r.verdict() && r.witt && r.evidence.is_empty());
    }

    #[test]
    fn wedge_is_rejected() {
        assert!(matches!(
            check_ip(&zoo::wedge_of_triangles(), None, false),
            Err(Error::NotPseudomanifold { .. })
        ));
    }
}
