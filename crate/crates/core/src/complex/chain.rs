use std::collections::BTreeMap;

use dashu_int::IBig;

use super::complex::SimplicialComplex;
use super::simplex::Simplex;
use crate::error::{Error, Result};
use crate::zlinalg::{Coefficients, Rat, SparseVec};

/// Homogeneous simplicial chain. Coefficients are rationals; a chain tagged
/// `Z` only ever holds integers.
#[derive(Clone, PartialEq, Eq)]
pub struct Chain {
    degree: usize,
    domain: Coefficients,
    terms: BTreeMap<Simplex, Rat>,
}

impl Chain {
    pub fn zero(degree: usize, domain: Coefficients) -> Self {
        Self {
            degree,
            domain,
            terms: BTreeMap::new(),
        }
    }

    /// Chain with coefficient 1 on one simplex.
    pub fn elementary(s: Simplex) -> Self {
        let mut c = Self::zero(s.dim(), Coefficients::Z);
        c.terms.insert(s, Rat::ONE);
        c
    }

    pub fn from_terms<I>(degree: usize, domain: Coefficients, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Simplex, Rat)>,
    {
        let mut c = Self::zero(degree, domain);
        for (s, x) in terms {
            if s.dim() != degree {
                return Err(Error::AmbientMismatch(format!("{s:?} in a degree-{degree} chain")));
            }
            if domain == Coefficients::Z && !x.is_int() {
                return Err(Error::AmbientMismatch(format!("non-integral coefficient {x} in a Z-chain")));
            }
            c.add_term(s, x);
        }
        Ok(c)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn domain(&self) -> Coefficients {
        self.domain
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, &Rat)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: &Simplex) -> Rat {
        self.terms.get(s).cloned().unwrap_or(Rat::ZERO)
    }

    pub(crate) fn add_term(&mut self, s: Simplex, x: Rat) {
        if x.is_zero() {
            return;
        }
        let e = self.terms.entry(s.clone()).or_insert(Rat::ZERO);
        *e += x;
        if e.is_zero() {
            self.terms.remove(&s);
        }
    }

    /// `self + a * other`.
    pub fn add_scaled(&mut self, a: &Rat, other: &Chain) {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        if other.domain == Coefficients::Q || !a.is_int() {
            self.domain = Coefficients::Q;
        }
        for (s, x) in &other.terms {
            self.add_term(s.clone(), a * x);
        }
    }

    pub fn scaled(&self, a: &Rat) -> Chain {
        let mut c = Chain::zero(self.degree, self.domain);
        c.add_scaled(a, self);
        c
    }

    pub fn negated(&self) -> Chain {
        self.scaled(&Rat::NEG_ONE)
    }

    /// Formal simplicial boundary.
    pub fn boundary(&self) -> Chain {
        if self.degree == 0 {
            return Chain::zero(0, self.domain);
        }
        let mut c = Chain::zero(self.degree - 1, self.domain);
        for (s, x) in &self.terms {
            for (sign, f) in s.boundary() {
                c.add_term(f, if sign > 0 { x.clone() } else { -x.clone() });
            }
        }
        c
    }

    /// Every support simplex belongs to `k`.
    pub fn check_ambient(&self, k: &SimplicialComplex) -> Result<()> {
        match self.terms.keys().find(|s| !k.contains(s.vertices())) {
            Some(s) => Err(Error::AmbientMismatch(format!("{s:?} is not a simplex of {}", k.name()))),
            None => Ok(()),
        }
    }

    /// Integer coordinate vector over the degree-k simplices of `k`.
    pub fn to_vector(&self, k: &SimplicialComplex) -> Result<SparseVec> {
        let mut entries = Vec::with_capacity(self.terms.len());
        for (s, x) in &self.terms {
            let idx = k
                .index_of(s.vertices())
                .ok_or_else(|| Error::AmbientMismatch(format!("{s:?} is not a simplex of {}", k.name())))?;
            if !x.is_int() {
                return Err(Error::AmbientMismatch("rational chain has no integer vector".into()));
            }
            entries.push((idx, x.numerator().clone()));
        }
        Ok(SparseVec::from_entries(entries))
    }

    pub fn from_vector(k: &SimplicialComplex, degree: usize, v: &SparseVec) -> Chain {
        let mut c = Chain::zero(degree, Coefficients::Z);
        for (i, x) in v.iter() {
            c.terms
                .insert(Simplex::from_sorted(k.simplex(degree, i).to_vec()), Rat::from(x.clone()));
        }
        c
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Rat::is_int)
    }

    pub fn integer_coefficient(&self, s: &Simplex) -> Option<IBig> {
        let x = self.coefficient(s);
        x.is_int().then(|| x.numerator().clone())
    }
}

impl std::fmt::Debug for Chain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Chain<{}>[{}](", self.domain, self.degree)?;
        for (i, (s, x)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{x}{s:?}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_of_boundary_vanishes() {
        let c = Chain::elementary(Simplex::from_sorted(vec![0, 1, 2, 3]));
        assert!(!c.boundary().is_zero());
        assert!(c.boundary().boundary().is_zero());
    }

    #[test]
    fn domain_tag() {
        let half = Rat::from_parts(IBig::ONE, 2u8.into());
        let bad = Chain::from_terms(1, Coefficients::Z, [(Simplex::from_sorted(vec![0, 1]), half.clone())]);
        assert!(bad.is_err());
        let mut c = Chain::elementary(Simplex::from_sorted(vec![0, 1]));
        c.add_scaled(&half, &Chain::elementary(Simplex::from_sorted(vec![1, 2])));
        assert_eq!(c.domain(), Coefficients::Q);
        assert!(!c.is_integral());
    }
}
