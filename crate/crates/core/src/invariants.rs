//! Path-component invariants of psc metrics, evaluated topologically.
//!
//! A psc metric `g_M` on `M^{4m-1}` is represented by a compact spin
//! `W^{4m}` with `∂W = M` carrying a psc metric that is a product near the
//! boundary. For such data the Kreck-Stolz invariant is the purely
//! topological quantity
//!
//! ```text
//! t(W) = -⟨(Â + a_m L)(j⁻¹ p(W)), [W, M]⟩ + a_m σ(W)
//! ```
//!
//! and on a product `M × N` with `Â(N) != 0` the extended invariant is
//! `s̃ = Â(N) · t(W)`. The eta-invariant side of these identities is never
//! computed.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::format;

use num_bigint::BigInt;
use num_traits::One;

use crate::bernoulli::bernoulli;
use crate::error::{Error, Result};
use crate::genera::{a_constant, combined_polynomial, genus_of, Genus};
use crate::manifolds::{self, validate_ks_product, CharacteristicData};
use crate::poly::NumberTable;
use crate::rational::Rational;

/// A compact oriented `W^{4m}` with boundary, described by its relative
/// Pontrjagin numbers `⟨(j⁻¹p)_λ, [W, ∂W]⟩`, signature and boundary data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobordismData {
    name: String,
    dimension: u32,
    relative_pontrjagin_numbers: NumberTable,
    signature: BigInt,
    boundary: CharacteristicData,
    psc_extension: bool,
}

impl CobordismData {
    pub fn new(
        name: impl Into<String>,
        dimension: u32,
        relative_pontrjagin_numbers: NumberTable,
        signature: impl Into<BigInt>,
        boundary: CharacteristicData,
        psc_extension: bool,
    ) -> Result<Self> {
        let name = name.into();
        let invalid = |reason: String| Error::InvalidData { name: name.clone(), reason };
        if dimension == 0 || !dimension.is_multiple_of(4) {
            return Err(invalid(format!("dimension {dimension} is not a positive multiple of 4")));
        }
        if boundary.dimension() + 1 != dimension {
            return Err(invalid(format!(
                "boundary {} has dimension {}, expected {}",
                boundary.name(),
                boundary.dimension(),
                dimension - 1
            )));
        }
        let weight = dimension / 4;
        let numbers: NumberTable = relative_pontrjagin_numbers
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        if let Some(p) = numbers.keys().find(|p| p.weight() != weight) {
            return Err(invalid(format!(
                "relative number {p} has weight {}, expected {weight}",
                p.weight()
            )));
        }
        Ok(CobordismData {
            name,
            dimension,
            relative_pontrjagin_numbers: numbers,
            signature: signature.into(),
            boundary,
            psc_extension,
        })
    }

    /// `M × I` with a psc product metric. Its Pontrjagin classes and
    /// signature vanish.
    pub fn cylinder(boundary: CharacteristicData) -> Result<Self> {
        let name = format!("{} x I", boundary.name());
        let dimension = boundary.dimension() + 1;
        Self::new(name, dimension, NumberTable::new(), 0, boundary, true)
    }

    /// Parallelisable plumbing of signature `8` bounding `boundary`; every
    /// relative Pontrjagin number is zero.
    pub fn e8_plumbing(boundary: CharacteristicData) -> Result<Self> {
        Self::parallelisable("E8 plumbing", boundary, 8)
    }

    /// Parallelisable psc-bounding manifold of the given signature.
    pub fn parallelisable(
        name: impl Into<String>,
        boundary: CharacteristicData,
        signature: impl Into<BigInt>,
    ) -> Result<Self> {
        let dimension = boundary.dimension() + 1;
        Self::new(name, dimension, NumberTable::new(), signature, boundary, true)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    /// `m` with `dim W = 4m`.
    pub fn weight(&self) -> u32 {
        self.dimension / 4
    }

    pub fn relative_pontrjagin_numbers(&self) -> &NumberTable {
        &self.relative_pontrjagin_numbers
    }

    pub fn signature(&self) -> &BigInt {
        &self.signature
    }

    pub fn boundary(&self) -> &CharacteristicData {
        &self.boundary
    }

    pub fn psc_extension(&self) -> bool {
        self.psc_extension
    }

    /// `-W`: relative numbers, signature and boundary orientation flip.
    pub fn reverse_orientation(&self) -> Self {
        CobordismData {
            name: format!("-{}", self.name),
            dimension: self.dimension,
            relative_pontrjagin_numbers: self
                .relative_pontrjagin_numbers
                .iter()
                .map(|(p, v)| (p.clone(), -v))
                .collect(),
            signature: -&self.signature,
            boundary: manifolds::reverse_orientation(&self.boundary),
            psc_extension: self.psc_extension,
        }
    }

    fn combine(&self, other: &Self, name: String, boundary: CharacteristicData) -> Self {
        let mut numbers = self.relative_pontrjagin_numbers.clone();
        for (p, v) in &other.relative_pontrjagin_numbers {
            *numbers.entry(p.clone()).or_insert_with(Rational::zero) += v;
        }
        numbers.retain(|_, v| !v.is_zero());
        CobordismData {
            name,
            dimension: self.dimension,
            relative_pontrjagin_numbers: numbers,
            signature: &self.signature + &other.signature,
            boundary,
            psc_extension: self.psc_extension && other.psc_extension,
        }
    }
}

/// A psc metric on `boundary(cobordism)`, encoded by a psc bounding manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricRepresentative {
    boundary_metric_label: String,
    cobordism: CobordismData,
}

impl MetricRepresentative {
    /// Fails unless the cobordism carries a psc metric extending the boundary
    /// metric; without one only the analytic definition applies.
    pub fn new(label: impl Into<String>, cobordism: CobordismData) -> Result<Self> {
        if !cobordism.psc_extension {
            return Err(Error::AnalyticPathUnavailable);
        }
        Ok(MetricRepresentative { boundary_metric_label: label.into(), cobordism })
    }

    pub fn from_cobordism(cobordism: CobordismData) -> Result<Self> {
        let label = format!("g({})", cobordism.name);
        Self::new(label, cobordism)
    }

    pub fn label(&self) -> &str {
        &self.boundary_metric_label
    }

    pub fn cobordism(&self) -> &CobordismData {
        &self.cobordism
    }

    pub fn boundary(&self) -> &CharacteristicData {
        &self.cobordism.boundary
    }

    pub fn reverse_orientation(&self) -> Self {
        MetricRepresentative {
            boundary_metric_label: format!("-{}", self.boundary_metric_label),
            cobordism: self.cobordism.reverse_orientation(),
        }
    }

    /// Representative of the metric on `M ⊔ M'`, bounded by `W ⊔ W'`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let boundary = manifolds::disjoint_union(self.boundary(), other.boundary())?;
        let name = format!("{} + {}", self.cobordism.name, other.cobordism.name);
        Ok(MetricRepresentative {
            boundary_metric_label: format!("{} + {}", self.boundary_metric_label, other.boundary_metric_label),
            cobordism: self.cobordism.combine(&other.cobordism, name, boundary),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildeSResult {
    pub value: Rational,
    pub ahat_factor: Rational,
    pub t_term: Rational,
}

/// `t(W) = -⟨(Â + a_m L)(j⁻¹p(W)), [W, M]⟩ + a_m σ(W)`, `m = dim W / 4`.
pub fn t_term(w: &CobordismData) -> Result<Rational> {
    if !w.boundary.rational_pontrjagin_classes_vanish() {
        return Err(Error::BoundaryClassesNonVanishing { boundary: w.boundary.name().to_string() });
    }
    let m = w.weight();
    let pairing = combined_polynomial(m).evaluate(&w.relative_pontrjagin_numbers);
    Ok(a_constant(m) * Rational::from(w.signature.clone()) - pairing)
}

/// Kreck-Stolz `s(M, g_M)` for a metric with a psc bounding manifold: `t(W)`.
pub fn s_invariant(rep: &MetricRepresentative) -> Result<Rational> {
    t_term(&rep.cobordism)
}

/// `s̃(M × N, g_M + g_N) = Â(N) · t(W)`.
pub fn tilde_s(rep: &MetricRepresentative, n: &CharacteristicData) -> Result<TildeSResult> {
    validate_ks_product(rep.boundary(), n).into_result()?;
    let t = t_term(&rep.cobordism)?;
    let ahat_factor = genus_of(Genus::AHat, n);
    Ok(TildeSResult { value: &ahat_factor * &t, ahat_factor, t_term: t })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeIndex {
    pub value: Rational,
    /// A genuine Dirac index is an integer; `false` flags data that cannot
    /// come from a single manifold.
    pub is_integer: bool,
}

/// `i(g, g') = s̃(X, g) - s̃(X, g')`.
pub fn relative_index(
    rep1: &MetricRepresentative,
    rep2: &MetricRepresentative,
    n: &CharacteristicData,
) -> Result<RelativeIndex> {
    if !rep1.boundary().same_characteristics(rep2.boundary()) {
        return Err(Error::BoundaryMismatch {
            left: rep1.boundary().name().to_string(),
            right: rep2.boundary().name().to_string(),
        });
    }
    let value = tilde_s(rep1, n)?.value - tilde_s(rep2, n)?.value;
    let is_integer = value.is_integer();
    Ok(RelativeIndex { value, is_integer })
}

/// Boundary connected sum `W ♮ W'`, representing `g ♯ g'` on `M ♯ M'`.
pub fn connected_sum(
    rep1: &MetricRepresentative,
    rep2: &MetricRepresentative,
) -> Result<MetricRepresentative> {
    let (a, b) = (&rep1.cobordism, &rep2.cobordism);
    if a.dimension != b.dimension {
        return Err(Error::DimensionMismatch { expected: a.dimension, actual: b.dimension });
    }
    let boundary = manifolds::connected_sum(&a.boundary, &b.boundary)?;
    let name = format!("{} # {}", a.name, b.name);
    Ok(MetricRepresentative {
        boundary_metric_label: format!("{} # {}", rep1.boundary_metric_label, rep2.boundary_metric_label),
        cobordism: a.combine(b, name, boundary),
    })
}

/// `s̃(base ♯ p·block, N)` for `p = 0..count`. The values are pairwise
/// distinct, so the metrics lie in distinct path components.
pub fn component_family(
    base: &MetricRepresentative,
    block: &MetricRepresentative,
    n: &CharacteristicData,
    count: usize,
) -> Result<Vec<TildeSResult>> {
    if tilde_s(block, n)?.value.is_zero() {
        return Err(Error::FamilyDoesNotSeparate);
    }
    let mut out = Vec::with_capacity(count);
    let mut current = base.clone();
    for p in 0..count {
        if p > 0 {
            current = connected_sum(&current, block)?;
        }
        out.push(tilde_s(&current, n)?);
    }
    Ok(out)
}

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e as usize
}

/// Order of `bP_{4n}`: `2^{2n-2} (2^{2n-1} - 1) · numerator(4 B_n / n)`.
pub fn bp_order(n: u32) -> BigInt {
    assert!(n >= 2, "bP_{{4n}} order formula needs n >= 2");
    let ratio = Rational::from(4) * bernoulli(n) / Rational::from(n);
    pow2(2 * n - 2) * (pow2(2 * n - 1) - BigInt::one()) * ratio.numer()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NFactor {
    K3,
    Bott,
}

impl NFactor {
    pub fn data(self) -> CharacteristicData {
        match self {
            NFactor::K3 => manifolds::k3(),
            NFactor::Bott => manifolds::bott(),
        }
    }
}

impl core::str::FromStr for NFactor {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s {
            "K3" | "k3" => Ok(NFactor::K3),
            "Bott" | "bott" => Ok(NFactor::Bott),
            other => Err(format!("unknown factor {other:?}; expected K3 or Bott")),
        }
    }
}

/// Closed forms for the metrics `g_j` on a homotopy sphere `Σ^{4n-1}`
/// bounding a parallelisable manifold:
///
/// ```text
/// s̃(Σ × K3,   g_j + g_K) = -(j|bP_{4n}| + q) / (2^{2n-3} (2^{2n-1} - 1))
/// s̃(Σ × Bott, g_j + g_B) =  (j|bP_{4n}| + q) / (2^{2n-2} (2^{2n-1} - 1))
/// ```
///
/// `q` depends on `Σ` and is taken as given.
pub fn theorem04_value(n: u32, j: u64, q: i64, factor: NFactor) -> Rational {
    assert!(n >= 2, "n >= 2");
    let numer = BigInt::from(j) * bp_order(n) + BigInt::from(q);
    let odd = pow2(2 * n - 1) - BigInt::one();
    let value = match factor {
        NFactor::K3 => -Rational::new(numer, pow2(2 * n - 3) * odd),
        NFactor::Bott => Rational::new(numer, pow2(2 * n - 2) * odd),
    };
    debug_assert_eq!(
        Ok(&value),
        theorem04_constructive(n, j, q, factor).as_ref(),
        "closed form disagrees with Â(N) t(W_j)"
    );
    value
}

/// The same value built from data: `W_j` is parallelisable with
/// `σ(W_j) = 8 (j|bP_{4n}| + q)` and bounds `Σ^{4n-1}`.
pub fn theorem04_constructive(n: u32, j: u64, q: i64, factor: NFactor) -> Result<Rational> {
    let sigma = (BigInt::from(j) * bp_order(n) + BigInt::from(q)) * BigInt::from(8);
    let w = CobordismData::parallelisable(format!("W_{j}"), manifolds::sphere(4 * n - 1), sigma)?;
    let rep = MetricRepresentative::new(format!("g_{j}"), w)?;
    Ok(tilde_s(&rep, &factor.data())?.value)
}

/// Vanishing of all rational Pontrjagin classes: sufficient (not necessary)
/// for `Â(T_φ) = 0` on every mapping torus.
pub fn hss_degree0_sufficient(x: &CharacteristicData) -> bool {
    x.rational_pontrjagin_classes_vanish()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelfPullbackIndex {
    Known(Rational),
    Unknown,
}

/// `i(g, φ*g) = Â(T_φ)`, known to vanish only under the sufficient condition.
pub fn self_pullback_relative_index(x: &CharacteristicData) -> SelfPullbackIndex {
    if hss_degree0_sufficient(x) {
        SelfPullbackIndex::Known(Rational::zero())
    } else {
        SelfPullbackIndex::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifolds::{bott, k3, product, sphere};
    use crate::partition::Partition;
    use alloc::vec;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn e8() -> MetricRepresentative {
        MetricRepresentative::from_cobordism(CobordismData::e8_plumbing(sphere(7)).unwrap()).unwrap()
    }

    fn cyl() -> MetricRepresentative {
        MetricRepresentative::from_cobordism(CobordismData::cylinder(sphere(7)).unwrap()).unwrap()
    }

    #[test]
    fn t_term_examples() {
        assert_eq!(t_term(cyl().cobordism()).unwrap(), Rational::zero());
        assert_eq!(t_term(e8().cobordism()).unwrap(), r(1, 28));
        let numbers: NumberTable =
            [(Partition::new(vec![1, 1]), r(5760, 7))].into_iter().collect();
        let w = CobordismData::new("w", 8, numbers, 0, sphere(7), true).unwrap();
        // combined p1^2 coefficient is 1/896
        assert_eq!(t_term(&w).unwrap(), r(-45, 49));
    }

    #[test]
    fn boundary_must_have_vanishing_classes() {
        let m = crate::manifolds::CharacteristicData::new(
            "M",
            7,
            NumberTable::new(),
            0,
            crate::manifolds::ManifoldFlags { is_spin: true, rational_pontrjagin_classes_vanish: false, admits_psc: true },
        )
        .unwrap();
        let w = CobordismData::cylinder(m).unwrap();
        assert!(matches!(t_term(&w), Err(Error::BoundaryClassesNonVanishing { .. })));
    }

    #[test]
    fn cobordism_shape_checked() {
        assert!(CobordismData::new("w", 8, NumberTable::new(), 0, sphere(6), true).is_err());
        assert!(CobordismData::new("w", 7, NumberTable::new(), 0, sphere(6), true).is_err());
        let bad: NumberTable = [(Partition::single(1), r(1, 1))].into_iter().collect();
        assert!(CobordismData::new("w", 8, bad, 0, sphere(7), true).is_err());
    }

    #[test]
    fn s_invariant_needs_psc_cobordism() {
        let w = CobordismData::new("w", 8, NumberTable::new(), 8, sphere(7), false).unwrap();
        assert_eq!(MetricRepresentative::from_cobordism(w), Err(Error::AnalyticPathUnavailable));
        assert_eq!(s_invariant(&e8()).unwrap(), r(1, 28));
        assert_eq!(s_invariant(&cyl()).unwrap(), Rational::zero());
        let two = connected_sum(&e8(), &e8()).unwrap();
        assert_eq!(s_invariant(&two).unwrap(), r(1, 14));
    }

    #[test]
    fn tilde_s_examples() {
        let v = tilde_s(&e8(), &k3()).unwrap();
        assert_eq!(v.value, r(-1, 14));
        assert_eq!(v.ahat_factor, r(-2, 1));
        assert_eq!(v.t_term, r(1, 28));
        assert!(tilde_s(&cyl(), &k3()).unwrap().value.is_zero());
        assert_eq!(tilde_s(&e8(), &bott()).unwrap().value, r(1, 28));
        let zero_ahat = crate::manifolds::disjoint_union(&k3(), &crate::manifolds::reverse_orientation(&k3())).unwrap();
        assert!(matches!(tilde_s(&e8(), &zero_ahat), Err(Error::ValidationFailed(_))));
    }

    #[test]
    fn relative_indices() {
        let same = relative_index(&e8(), &e8(), &bott()).unwrap();
        assert!(same.value.is_zero());
        assert!(same.is_integer);
        let two = connected_sum(&e8(), &e8()).unwrap();
        let ri = relative_index(&two, &e8(), &bott()).unwrap();
        assert_eq!(ri.value, r(1, 28));
        assert!(!ri.is_integer);
        let other = MetricRepresentative::from_cobordism(CobordismData::cylinder(sphere(11)).unwrap()).unwrap();
        assert!(matches!(relative_index(&e8(), &other, &k3()), Err(Error::BoundaryMismatch { .. })));
    }

    #[test]
    fn families() {
        let fam = component_family(&cyl(), &e8(), &k3(), 3).unwrap();
        let values: Vec<_> = fam.into_iter().map(|t| t.value).collect();
        assert_eq!(values, vec![Rational::zero(), r(-1, 14), r(-1, 7)]);
        assert_eq!(component_family(&e8(), &e8(), &k3(), 1).unwrap().len(), 1);
        assert_eq!(component_family(&cyl(), &cyl(), &k3(), 3), Err(Error::FamilyDoesNotSeparate));
    }

    #[test]
    fn bp_orders() {
        assert_eq!(bp_order(2), BigInt::from(28));
        assert_eq!(bp_order(3), BigInt::from(992));
        assert_eq!(bp_order(4), BigInt::from(8128));
        assert_eq!(bp_order(5), BigInt::from(261632));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(theorem04_value(2, 1, 0, NFactor::K3), r(-2, 1));
        assert_eq!(theorem04_value(2, 1, 0, NFactor::Bott), r(1, 1));
        assert_eq!(theorem04_constructive(3, 2, -1, NFactor::Bott).unwrap(), theorem04_value(3, 2, -1, NFactor::Bott));
    }

    #[test]
    fn mapping_torus_index() {
        assert_eq!(self_pullback_relative_index(&sphere(7)), SelfPullbackIndex::Known(Rational::zero()));
        assert!(!hss_degree0_sufficient(&k3()));
        assert_eq!(self_pullback_relative_index(&product(&sphere(7), &k3())), SelfPullbackIndex::Unknown);
    }
}
