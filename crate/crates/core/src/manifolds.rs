//! Closed oriented manifolds described by their characteristic data.
//!
//! Only Pontrjagin *numbers* are stored. Class-level facts that numbers
//! cannot see (vanishing of real Pontrjagin classes, spin, psc) are flags
//! asserted by whoever builds the data; nothing here tries to verify them.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::genera::{genus_of, Genus};
use crate::partition::Partition;
use crate::poly::NumberTable;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ManifoldFlags {
    pub is_spin: bool,
    pub rational_pontrjagin_classes_vanish: bool,
    pub admits_psc: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacteristicData {
    name: String,
    dimension: u32,
    pontrjagin_numbers: NumberTable,
    signature: BigInt,
    flags: ManifoldFlags,
}

impl CharacteristicData {
    /// Checks the table against the dimension and the flags. Zero entries
    /// are dropped, so tables compare equal regardless of explicit zeros.
    pub fn new(
        name: impl Into<String>,
        dimension: u32,
        pontrjagin_numbers: NumberTable,
        signature: impl Into<BigInt>,
        flags: ManifoldFlags,
    ) -> Result<Self> {
        let name = name.into();
        let signature = signature.into();
        let invalid = |reason: String| Error::InvalidData { name: name.clone(), reason };

        let numbers: NumberTable =
            pontrjagin_numbers.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if !dimension.is_multiple_of(4) {
            if let Some(p) = numbers.keys().next() {
                return Err(invalid(format!(
                    "dimension {dimension} is not a multiple of 4 but number {p} is non-zero"
                )));
            }
            if !signature.is_zero() {
                return Err(invalid(format!(
                    "dimension {dimension} is not a multiple of 4 but signature is {signature}"
                )));
            }
        } else {
            let weight = dimension / 4;
            if let Some(p) = numbers.keys().find(|p| p.weight() != weight) {
                return Err(invalid(format!(
                    "partition {p} has weight {}, dimension {dimension} needs weight {weight}",
                    p.weight()
                )));
            }
        }
        if flags.rational_pontrjagin_classes_vanish {
            if let Some(p) = numbers.keys().find(|p| !p.is_empty()) {
                return Err(invalid(format!(
                    "Pontrjagin classes are flagged as vanishing but number {p} is non-zero"
                )));
            }
        }
        Ok(CharacteristicData { name, dimension, pontrjagin_numbers: numbers, signature, flags })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn pontrjagin_numbers(&self) -> &NumberTable {
        &self.pontrjagin_numbers
    }

    pub fn pontrjagin_number(&self, p: &Partition) -> Rational {
        self.pontrjagin_numbers.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn signature(&self) -> &BigInt {
        &self.signature
    }

    pub fn flags(&self) -> ManifoldFlags {
        self.flags
    }

    pub fn is_spin(&self) -> bool {
        self.flags.is_spin
    }

    pub fn rational_pontrjagin_classes_vanish(&self) -> bool {
        self.flags.rational_pontrjagin_classes_vanish
    }

    pub fn admits_psc(&self) -> bool {
        self.flags.admits_psc
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Overrides the psc flag, e.g. for a product where one factor carries
    /// psc and the other is scaled up.
    pub fn with_admits_psc(mut self, admits_psc: bool) -> Self {
        self.flags.admits_psc = admits_psc;
        self
    }

    /// Equality of everything except the name.
    pub fn same_characteristics(&self, other: &Self) -> bool {
        self.dimension == other.dimension
            && self.pontrjagin_numbers == other.pontrjagin_numbers
            && self.signature == other.signature
            && self.flags == other.flags
    }

    pub fn has_nonzero_pontrjagin_number(&self) -> bool {
        self.pontrjagin_numbers.keys().any(|p| !p.is_empty())
    }
}

/// Cartesian product. Pontrjagin numbers come from the Whitney formula
/// `p_i(A×B) = Σ_{j+k=i} p_j(A) p_k(B)`, expanded formally and paired with
/// `[A]×[B]`: only terms of bidegree `(dim A, dim B)` survive.
pub fn product(a: &CharacteristicData, b: &CharacteristicData) -> CharacteristicData {
    let dimension = a.dimension + b.dimension;
    let mut numbers = NumberTable::new();
    if a.dimension.is_multiple_of(4) && b.dimension.is_multiple_of(4) {
        let (wa, wb) = (a.dimension / 4, b.dimension / 4);
        for lambda in crate::partition::partitions(wa + wb) {
            let value: Rational = whitney_expansion(&lambda, wa, wb)
                .into_iter()
                .filter(|((mu, nu), _)| mu.weight() == wa && nu.weight() == wb)
                .map(|((mu, nu), c)| {
                    let na = a.pontrjagin_numbers.get(&mu);
                    let nb = b.pontrjagin_numbers.get(&nu);
                    match (na, nb) {
                        (Some(x), Some(y)) => Rational::from(c) * x * y,
                        _ => Rational::zero(),
                    }
                })
                .sum();
            if !value.is_zero() {
                numbers.insert(lambda, value);
            }
        }
    }
    let flags = ManifoldFlags {
        is_spin: a.flags.is_spin && b.flags.is_spin,
        rational_pontrjagin_classes_vanish: a.flags.rational_pontrjagin_classes_vanish
            && b.flags.rational_pontrjagin_classes_vanish,
        admits_psc: false,
    };
    CharacteristicData {
        name: format!("{} x {}", a.name, b.name),
        dimension,
        pontrjagin_numbers: numbers,
        signature: &a.signature * &b.signature,
        flags,
    }
}

/// Expands `p_λ(A×B)` into `Σ c · p_μ(A) p_ν(B)`, keeping only terms with
/// `weight(μ) <= wa` and `weight(ν) <= wb`.
fn whitney_expansion(lambda: &Partition, wa: u32, wb: u32) -> BTreeMap<(Partition, Partition), BigInt> {
    let mut terms: BTreeMap<(Partition, Partition), BigInt> = BTreeMap::new();
    terms.insert((Partition::empty(), Partition::empty()), BigInt::one());
    for &part in lambda.parts() {
        let mut next: BTreeMap<(Partition, Partition), BigInt> = BTreeMap::new();
        for ((mu, nu), c) in &terms {
            for j in 0..=part {
                let k = part - j;
                if mu.weight() + j > wa || nu.weight() + k > wb {
                    continue;
                }
                let key = (mu.join(&Partition::single(j)), nu.join(&Partition::single(k)));
                *next.entry(key).or_insert_with(BigInt::zero) += c;
            }
        }
        terms = next;
    }
    terms
}

/// Same manifold with the opposite orientation.
pub fn reverse_orientation(a: &CharacteristicData) -> CharacteristicData {
    CharacteristicData {
        name: format!("-{}", a.name),
        dimension: a.dimension,
        pontrjagin_numbers: a.pontrjagin_numbers.iter().map(|(p, v)| (p.clone(), -v)).collect(),
        signature: -&a.signature,
        flags: a.flags,
    }
}

fn additive_combination(
    a: &CharacteristicData,
    b: &CharacteristicData,
    name: String,
) -> Result<CharacteristicData> {
    if a.dimension != b.dimension {
        return Err(Error::DimensionMismatch { expected: a.dimension, actual: b.dimension });
    }
    let mut numbers = a.pontrjagin_numbers.clone();
    for (p, v) in &b.pontrjagin_numbers {
        *numbers.entry(p.clone()).or_insert_with(Rational::zero) += v;
    }
    numbers.retain(|_, v| !v.is_zero());
    Ok(CharacteristicData {
        name,
        dimension: a.dimension,
        pontrjagin_numbers: numbers,
        signature: &a.signature + &b.signature,
        flags: ManifoldFlags {
            is_spin: a.flags.is_spin && b.flags.is_spin,
            rational_pontrjagin_classes_vanish: a.flags.rational_pontrjagin_classes_vanish
                && b.flags.rational_pontrjagin_classes_vanish,
            admits_psc: a.flags.admits_psc && b.flags.admits_psc,
        },
    })
}

pub fn disjoint_union(a: &CharacteristicData, b: &CharacteristicData) -> Result<CharacteristicData> {
    additive_combination(a, b, format!("{} + {}", a.name, b.name))
}

/// Connected sum. In positive dimension its Pontrjagin numbers and signature
/// are those of the disjoint union.
pub fn connected_sum(a: &CharacteristicData, b: &CharacteristicData) -> Result<CharacteristicData> {
    additive_combination(a, b, format!("{} # {}", a.name, b.name))
}

pub fn sphere(n: u32) -> CharacteristicData {
    assert!(n >= 1, "spheres start at S1");
    CharacteristicData {
        name: format!("S{n}"),
        dimension: n,
        pontrjagin_numbers: NumberTable::new(),
        signature: BigInt::zero(),
        flags: ManifoldFlags {
            is_spin: true,
            rational_pontrjagin_classes_vanish: true,
            admits_psc: n >= 2,
        },
    }
}

/// The one-point space: unit for [`product`].
pub fn point() -> CharacteristicData {
    CharacteristicData {
        name: "point".to_string(),
        dimension: 0,
        pontrjagin_numbers: [(Partition::empty(), Rational::one())].into_iter().collect(),
        signature: BigInt::one(),
        flags: ManifoldFlags { is_spin: true, rational_pontrjagin_classes_vanish: true, admits_psc: false },
    }
}

fn table(entries: &[(&[u32], i64)]) -> NumberTable {
    entries
        .iter()
        .map(|(parts, v)| (Partition::new(parts.to_vec()), Rational::from(*v)))
        .collect()
}

const NON_PSC_SPIN: ManifoldFlags =
    ManifoldFlags { is_spin: true, rational_pontrjagin_classes_vanish: false, admits_psc: false };

/// K3 surface oriented so that `Â = -2`: `p1 = 48`, `σ = 16`.
/// (The complex orientation has `p1 = -48`, `σ = -16`, `Â = 2`.)
pub fn k3() -> CharacteristicData {
    CharacteristicData::new("K3", 4, table(&[(&[1], 48)]), 16, NON_PSC_SPIN).unwrap()
}

/// Bott manifold oriented so that `Â = 1`. It is built from 28 `E8`
/// plumbings, so `p1` vanishes and `p1^2 = 0`; then `Â = -p2/1440 = 1` forces
/// `p2 = -1440` and `σ = 7 p2 / 45 = -224`.
pub fn bott() -> CharacteristicData {
    CharacteristicData::new("Bott", 8, table(&[(&[2], -1440)]), -224, NON_PSC_SPIN).unwrap()
}

/// Quaternionic projective plane: `p1 = 2u`, `p2 = 7u^2`, `u^2[HP2] = 1`.
pub fn hp2() -> CharacteristicData {
    CharacteristicData::new(
        "HP2",
        8,
        table(&[(&[1, 1], 4), (&[2], 7)]),
        1,
        ManifoldFlags { is_spin: true, rational_pontrjagin_classes_vanish: false, admits_psc: true },
    )
    .unwrap()
}

/// Names with a fixed catalog entry. Any `S<n>` with `n >= 1` is also accepted.
pub const CATALOG_NAMES: [&str; 7] = ["Bott", "HP2", "K3", "S3", "S7", "S11", "point"];

pub fn catalog(name: &str) -> Result<CharacteristicData> {
    match name {
        "K3" => return Ok(k3()),
        "Bott" => return Ok(bott()),
        "HP2" => return Ok(hp2()),
        "point" => return Ok(point()),
        _ => {}
    }
    if let Some(n) = name.strip_prefix('S').and_then(|d| d.parse::<u32>().ok()) {
        if n >= 1 {
            return Ok(sphere(n));
        }
    }
    let mut available: Vec<String> = CATALOG_NAMES.iter().map(|s| s.to_string()).collect();
    available.push("S<n>".to_string());
    Err(Error::UnknownCatalogEntry { name: name.to_string(), available })
}

/// A failed clause of the Kreck-Stolz conditions or of the product structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Clause {
    DimensionNot4kMinus1,
    DimensionBelow7,
    NotSpin,
    NoPsc,
    PontrjaginClassesNonVanishing,
    FactorDimensionNot4l,
    FactorNotSpin,
    FactorAHatZero,
    ProductDimension,
}

impl Clause {
    pub fn description(self) -> &'static str {
        match self {
            Clause::DimensionNot4kMinus1 => "M must have dimension 4k-1",
            Clause::DimensionBelow7 => "M must have k >= 2 (dimension at least 7)",
            Clause::NotSpin => "M must be spin",
            Clause::NoPsc => "M must admit a positive scalar curvature metric",
            Clause::PontrjaginClassesNonVanishing => "all real Pontrjagin classes of M must vanish",
            Clause::FactorDimensionNot4l => "N must have dimension 4l with l >= 1",
            Clause::FactorNotSpin => "N must be spin",
            Clause::FactorAHatZero => "A-hat(N) must be non-zero",
            Clause::ProductDimension => "M x N must have dimension 4k-1 with k-l >= 2",
        }
    }
}

impl core::fmt::Display for Clause {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.description())
    }
}

/// Conditions that are inputs to the model rather than checked by it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Warning {
    /// `H^1(M x N; Z/2) = 0` cannot be read off characteristic numbers.
    FirstZ2CohomologyUnchecked,
}

impl Warning {
    pub fn description(self) -> &'static str {
        match self {
            Warning::FirstZ2CohomologyUnchecked => {
                "H^1(M x N; Z/2) = 0 is assumed, not checked"
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub failures: Vec<Clause>,
    pub warnings: Vec<Warning>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn into_result(self) -> Result<ValidationReport> {
        if self.passed() {
            Ok(self)
        } else {
            Err(Error::ValidationFailed(self.failures))
        }
    }
}

/// Closed spin, dimension `4k-1` with `k >= 2`, admits psc, all real
/// Pontrjagin classes vanish.
pub fn validate_kreck_stolz_conditions(m: &CharacteristicData) -> ValidationReport {
    let mut failures = Vec::new();
    if m.dimension % 4 != 3 {
        failures.push(Clause::DimensionNot4kMinus1);
    }
    if m.dimension < 7 {
        failures.push(Clause::DimensionBelow7);
    }
    if !m.flags.is_spin {
        failures.push(Clause::NotSpin);
    }
    if !m.flags.admits_psc {
        failures.push(Clause::NoPsc);
    }
    if !m.flags.rational_pontrjagin_classes_vanish {
        failures.push(Clause::PontrjaginClassesNonVanishing);
    }
    ValidationReport { failures, warnings: Vec::new() }
}

/// `M` satisfies the Kreck-Stolz conditions, `N` is spin of dimension `4l`
/// (`l >= 1`) with `Â(N) != 0`. The `H^1` clause is reported as a warning.
pub fn validate_ks_product(m: &CharacteristicData, n: &CharacteristicData) -> ValidationReport {
    let mut report = validate_kreck_stolz_conditions(m);
    if !n.dimension.is_multiple_of(4) || n.dimension == 0 {
        report.failures.push(Clause::FactorDimensionNot4l);
    }
    if !n.flags.is_spin {
        report.failures.push(Clause::FactorNotSpin);
    }
    if genus_of(Genus::AHat, n).is_zero() {
        report.failures.push(Clause::FactorAHatZero);
    }
    let total = m.dimension + n.dimension;
    let top_ok = total % 4 == 3 && (m.dimension + 1) / 4 >= 2 && m.dimension % 4 == 3;
    if !top_ok {
        report.failures.push(Clause::ProductDimension);
    }
    report.warnings = vec![Warning::FirstZ2CohomologyUnchecked];
    report
}
