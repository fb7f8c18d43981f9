//! Sparse homogeneous polynomials in the Pontrjagin classes.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::Rational;

/// Pontrjagin numbers of a manifold: `λ ↦ ⟨p_λ, [M]⟩`.
pub type NumberTable = BTreeMap<Partition, Rational>;

/// A homogeneous polynomial of weight `w` in `p1, p2, ...`, stored as a map
/// from monomials to non-zero coefficients. The weight is kept explicitly so
/// that the zero polynomial of each weight is a distinct value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionPolynomial {
    weight: u32,
    terms: BTreeMap<Partition, Rational>,
}

impl PartitionPolynomial {
    pub fn zero(weight: u32) -> Self {
        PartitionPolynomial { weight, terms: BTreeMap::new() }
    }

    /// The constant `1`, of weight zero.
    pub fn one() -> Self {
        Self::monomial(Partition::empty(), Rational::one())
    }

    pub fn monomial(partition: Partition, coeff: Rational) -> Self {
        let mut out = Self::zero(partition.weight());
        if !coeff.is_zero() {
            out.terms.insert(partition, coeff);
        }
        out
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing
    /// repeats. Every monomial must have the given weight.
    pub fn from_terms(
        weight: u32,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(weight);
        for (p, c) in terms {
            if p.weight() != weight {
                return Err(Error::MixedWeightSum { left: weight, right: p.weight() });
            }
            out.accumulate(p, &c);
        }
        Ok(out)
    }

    pub fn weight(&self) -> u32 {
        self.weight
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

    pub fn coefficient(&self, p: &Partition) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    /// Non-zero terms in ascending partition order (`p1^2` before `p2`).
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    fn accumulate(&mut self, p: Partition, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.weight != other.weight {
            return Err(Error::MixedWeightSum { left: self.weight, right: other.weight });
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.accumulate(p.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.weight);
        }
        PartitionPolynomial {
            weight: self.weight,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.weight + other.weight);
        for (pa, ca) in &self.terms {
            for (pb, cb) in &other.terms {
                out.accumulate(pa.join(pb), &(ca * cb));
            }
        }
        out
    }

    /// `Σ_λ coeff(λ) · numbers(λ)`, reading absent numbers as zero.
    pub fn evaluate(&self, numbers: &NumberTable) -> Rational {
        self.terms
            .iter()
            .filter_map(|(p, c)| numbers.get(p).map(|n| c * n))
            .sum()
    }

    pub fn into_terms(self) -> Vec<(Partition, Rational)> {
        self.terms.into_iter().collect()
    }
}
