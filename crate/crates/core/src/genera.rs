//! Multiplicative sequences in the Pontrjagin classes.
//!
//! A characteristic power series `Q(z) = 1 + q1 z + q2 z^2 + ...` determines
//! polynomials `K_k(p1, ..., pk)` through `Σ K_k = Π_i Q(x_i)` where the
//! `p_j` are the elementary symmetric functions of the formal roots `x_i`.
//! We generate `K_k` without tables:
//!
//! 1. take `log Q(z) = Σ c_m z^m`, so `log Π Q(x_i) = Σ_m c_m s_m` with
//!    `s_m` the m-th power sum of the roots;
//! 2. rewrite each `s_m` in the `p_j` by Newton's identities;
//! 3. exponentiate degree by degree: `n K_n = Σ_{m=1..n} m c_m s_m K_{n-m}`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::bernoulli::bernoulli_even_signed;
use crate::error::{Error, Result};
use crate::manifolds::CharacteristicData;
use crate::partition::Partition;
use crate::poly::PartitionPolynomial;
use crate::rational::Rational;

/// Taylor coefficients `q1, q2, ...` of a characteristic series with `Q(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusSeries {
    pub name: String,
    pub coefficients: Vec<Rational>,
}

impl GenusSeries {
    pub fn new(name: impl Into<String>, coefficients: Vec<Rational>) -> Self {
        GenusSeries { name: name.into(), coefficients }
    }

    /// `Q(z) = (√z/2) / sinh(√z/2)` truncated after `z^k`.
    pub fn ahat(k: u32) -> Self {
        Self::new("ahat", ahat_series_coefficients(k))
    }

    /// `Q(z) = √z / tanh(√z)` truncated after `z^k`.
    pub fn l(k: u32) -> Self {
        Self::new("l", l_series_coefficients(k))
    }
}

/// The two genera the rest of the crate cares about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Genus {
    AHat,
    L,
}

impl Genus {
    pub fn name(self) -> &'static str {
        match self {
            Genus::AHat => "ahat",
            Genus::L => "l",
        }
    }

    pub fn series(self, k: u32) -> GenusSeries {
        match self {
            Genus::AHat => GenusSeries::ahat(k),
            Genus::L => GenusSeries::l(k),
        }
    }

    pub fn polynomial(self, k: u32) -> PartitionPolynomial {
        genus_polynomial(&self.series(k), k).expect("series generated to the requested weight")
    }
}

impl core::str::FromStr for Genus {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ahat" | "a-hat" | "a" => Ok(Genus::AHat),
            "l" => Ok(Genus::L),
            other => Err(alloc::format!("unknown genus {other:?}; expected ahat or l")),
        }
    }
}

fn factorial(n: u32) -> Rational {
    (1..=n as u64).map(Rational::from).product()
}

fn pow2(e: u32) -> Rational {
    Rational::from(num_bigint::BigInt::from(1) << e as usize)
}

/// `q_n = (2 - 2^{2n}) B_{2n} / ((2n)! 4^n)` for `n = 1..=k` (analyst's `B_{2n}`).
pub fn ahat_series_coefficients(k: u32) -> Vec<Rational> {
    (1..=k)
        .map(|n| {
            let b = bernoulli_even_signed(n);
            let num = (Rational::from(2) - pow2(2 * n)) * b;
            &num / &(factorial(2 * n) * pow2(2 * n))
        })
        .collect()
}

/// `q_n = 2^{2n} B_{2n} / (2n)!` for `n = 1..=k` (analyst's `B_{2n}`).
pub fn l_series_coefficients(k: u32) -> Vec<Rational> {
    (1..=k)
        .map(|n| &(pow2(2 * n) * bernoulli_even_signed(n)) / &factorial(2 * n))
        .collect()
}

/// Coefficients `c_1..c_k` of `log Q(z)`, from `n q_n = Σ_{m=1..n} m c_m q_{n-m}`.
fn log_coefficients(q: &[Rational]) -> Vec<Rational> {
    let coeff = |i: usize| if i == 0 { Rational::one() } else { q[i - 1].clone() };
    let mut c: Vec<Rational> = Vec::with_capacity(q.len());
    for n in 1..=q.len() {
        let mut acc = Rational::zero();
        for m in 1..n {
            acc += &(&c[m - 1] * &coeff(n - m)) * &Rational::from(m as u64);
        }
        let cn = &coeff(n) - &(&acc / &Rational::from(n as u64));
        c.push(cn);
    }
    c
}

/// Power sums `s_1..s_k` of the formal roots as polynomials in `p_j = e_j`:
/// `s_m = Σ_{i=1..m-1} (-1)^{i-1} e_i s_{m-i} + (-1)^{m-1} m e_m`.
fn power_sums(k: u32) -> Vec<PartitionPolynomial> {
    let e = |i: u32| PartitionPolynomial::monomial(Partition::single(i), Rational::one());
    let sign = |i: u32| if i % 2 == 1 { Rational::one() } else { -Rational::one() };
    let mut s: Vec<PartitionPolynomial> = Vec::with_capacity(k as usize);
    for m in 1..=k {
        let mut sm = e(m).scale(&(sign(m) * Rational::from(m)));
        for i in 1..m {
            let term = e(i).multiply(&s[(m - i - 1) as usize]).scale(&sign(i));
            sm = sm.add(&term).expect("homogeneous of weight m");
        }
        s.push(sm);
    }
    s
}

/// Weight-`k` polynomial `K_k` of the multiplicative sequence of `series`.
pub fn genus_polynomial(series: &GenusSeries, k: u32) -> Result<PartitionPolynomial> {
    if series.coefficients.len() < k as usize {
        return Err(Error::InsufficientSeries {
            name: series.name.clone(),
            available: series.coefficients.len(),
            requested: k,
        });
    }
    Ok(multiplicative_sequence(&series.coefficients[..k as usize]).pop().unwrap())
}

/// `K_0, ..., K_k` for the series with coefficients `q` (length `k`).
fn multiplicative_sequence(q: &[Rational]) -> Vec<PartitionPolynomial> {
    let k = q.len() as u32;
    let c = log_coefficients(q);
    let s = power_sums(k);
    // weighted log terms m * c_m * s_m
    let log_terms: Vec<PartitionPolynomial> = (1..=k)
        .map(|m| s[(m - 1) as usize].scale(&(&c[(m - 1) as usize] * &Rational::from(m))))
        .collect();
    let mut out = Vec::with_capacity(k as usize + 1);
    out.push(PartitionPolynomial::one());
    for n in 1..=k {
        let mut acc = PartitionPolynomial::zero(n);
        for m in 1..=n {
            let term = log_terms[(m - 1) as usize].multiply(&out[(n - m) as usize]);
            acc = acc.add(&term).expect("homogeneous of weight n");
        }
        out.push(acc.scale(&Rational::new(1, n)));
    }
    out
}

/// `a_k = 1 / (2^{2k+1} (2^{2k-1} - 1))`. Panics if `k == 0`.
pub fn a_constant(k: u32) -> Rational {
    assert!(k >= 1, "a_k is defined for k >= 1");
    (pow2(2 * k + 1) * (pow2(2 * k - 1) - Rational::one())).recip()
}

/// `Â_k + a_k L_k`, whose `p_k` coefficient vanishes.
pub fn combined_polynomial(k: u32) -> PartitionPolynomial {
    let ahat = Genus::AHat.polynomial(k);
    let l = Genus::L.polynomial(k);
    ahat.add(&l.scale(&a_constant(k))).expect("both of weight k")
}

/// Evaluates a weight-`k` polynomial on the Pontrjagin numbers of a `4k`-manifold.
pub fn evaluate_genus(poly: &PartitionPolynomial, data: &CharacteristicData) -> Result<Rational> {
    if poly.weight() * 4 != data.dimension() {
        return Err(Error::DimensionMismatch {
            expected: poly.weight() * 4,
            actual: data.dimension(),
        });
    }
    Ok(poly.evaluate(data.pontrjagin_numbers()))
}

/// Â- or L-genus of `data`. Zero when the dimension is not a multiple of 4.
pub fn genus_of(genus: Genus, data: &CharacteristicData) -> Rational {
    if !data.dimension().is_multiple_of(4) {
        return Rational::zero();
    }
    genus.polynomial(data.dimension() / 4).evaluate(data.pontrjagin_numbers())
}

/// Renders `coef * p_λ` lines in ascending partition order.
pub fn describe(poly: &PartitionPolynomial) -> Vec<String> {
    poly.terms()
        .map(|(p, c)| alloc::format!("{}: {}", p.monomial(), c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn series_first_terms() {
        assert_eq!(ahat_series_coefficients(1), vec![r(-1, 24)]);
        assert_eq!(l_series_coefficients(1), vec![r(1, 3)]);
        assert_eq!(l_series_coefficients(2)[1], r(-1, 45));
    }

    #[test]
    fn low_weight_polynomials() {
        let a1 = Genus::AHat.polynomial(1);
        assert_eq!(a1.into_terms(), vec![(p(&[1]), r(-1, 24))]);
        assert_eq!(Genus::L.polynomial(1).into_terms(), vec![(p(&[1]), r(1, 3))]);

        let a2 = Genus::AHat.polynomial(2);
        assert_eq!(a2.coefficient(&p(&[1, 1])), r(7, 5760));
        assert_eq!(a2.coefficient(&p(&[2])), r(-4, 5760));

        let l2 = Genus::L.polynomial(2);
        assert_eq!(l2.coefficient(&p(&[2])), r(7, 45));
        assert_eq!(l2.coefficient(&p(&[1, 1])), r(-1, 45));
    }

    #[test]
    fn a_constants() {
        assert_eq!(a_constant(1), r(1, 8));
        assert_eq!(a_constant(2), r(1, 224));
        assert_eq!(a_constant(3), r(1, 3968));
    }

    #[test]
    fn combined_has_no_top_class() {
        for k in 2..=5 {
            assert!(combined_polynomial(k).coefficient(&Partition::single(k)).is_zero(), "k={k}");
        }
        let c2 = combined_polynomial(2);
        assert_eq!(c2.coefficient(&p(&[1, 1])), r(7, 5760) + r(1, 224) * r(-1, 45));
        assert_eq!(c2.coefficient(&p(&[1, 1])), r(1, 896));
    }

    #[test]
    fn insufficient_series() {
        let s = GenusSeries::new("short", vec![r(1, 2)]);
        assert!(matches!(genus_polynomial(&s, 2), Err(Error::InsufficientSeries { .. })));
    }

    #[test]
    fn describe_lines() {
        assert_eq!(describe(&Genus::AHat.polynomial(2)), vec!["p1^2: 7/5760", "p2: -1/1440"]);
    }
}
