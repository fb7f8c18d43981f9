//! Brute-force reference for multiplicative sequences.
//!
//! Shares nothing with `scalcurv_core::genera` beyond the `Rational` type:
//! the series coefficients come from power-series division of the
//! hyperbolic functions (no Bernoulli numbers), the product `Π Q(z_i)` is
//! expanded in explicit formal variables, and the symmetric result is
//! rewritten in elementary symmetric polynomials by leading-term reduction.

use std::collections::BTreeMap;

use scalcurv_core::{Partition, Rational};

fn factorial(n: u64) -> Rational {
    (1..=n).map(Rational::from).product()
}

/// `1 / a(z)` to `k` terms beyond the constant, for `a(0) = 1`.
fn invert(a: &[Rational], k: usize) -> Vec<Rational> {
    let mut inv = vec![Rational::one()];
    for n in 1..=k {
        let s: Rational = (1..=n).map(|i| &a[i] * &inv[n - i]).sum();
        inv.push(-s);
    }
    inv
}

fn multiply_series(a: &[Rational], b: &[Rational], k: usize) -> Vec<Rational> {
    (0..=k)
        .map(|n| (0..=n).map(|i| &a[i] * &b[n - i]).sum())
        .collect()
}

/// Coefficients `1, q1, ..., qk` of `(√z/2)/sinh(√z/2)`.
pub fn ahat_series(k: usize) -> Vec<Rational> {
    // sinh(x)/x = Σ x^{2n}/(2n+1)!, x^2 = z/4
    let sinh_over_x: Vec<Rational> = (0..=k as u64)
        .map(|n| (factorial(2 * n + 1) * Rational::from(4u64).pow(n as u32)).recip())
        .collect();
    invert(&sinh_over_x, k)
}

/// Coefficients `1, q1, ..., qk` of `√z / tanh(√z)`.
pub fn l_series(k: usize) -> Vec<Rational> {
    let cosh: Vec<Rational> = (0..=k as u64).map(|n| factorial(2 * n).recip()).collect();
    let sinh_over_x: Vec<Rational> = (0..=k as u64).map(|n| factorial(2 * n + 1).recip()).collect();
    multiply_series(&cosh, &invert(&sinh_over_x, k), k)
}

type Exponents = Vec<u32>;
type Multi = BTreeMap<Exponents, Rational>;

fn multi_mul(a: &Multi, b: &Multi, max_degree: u32) -> Multi {
    let mut out = Multi::new();
    for (ea, ca) in a {
        let da: u32 = ea.iter().sum();
        for (eb, cb) in b {
            if da + eb.iter().sum::<u32>() > max_degree {
                continue;
            }
            let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(Rational::zero) += &(ca * cb);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn elementary(j: u32, vars: usize) -> Multi {
    let mut out = Multi::new();
    for mask in 0u32..(1 << vars) {
        if mask.count_ones() == j {
            let e = (0..vars).map(|i| (mask >> i) & 1).collect();
            out.insert(e, Rational::one());
        }
    }
    out
}

/// Weight-`k` polynomial in `p_j = e_j(z)` equal to the degree-`k` part of
/// `Π_{i=1}^{2k} Q(z_i)`, where `series = [1, q1, q2, ...]`.
pub fn brute_force_genus(series: &[Rational], k: u32) -> BTreeMap<Partition, Rational> {
    let vars = (2 * k) as usize;
    let mut product = Multi::new();
    product.insert(vec![0; vars], Rational::one());
    for i in 0..vars {
        let mut factor = Multi::new();
        for (d, q) in series.iter().enumerate().take(k as usize + 1) {
            let mut e = vec![0; vars];
            e[i] = d as u32;
            factor.insert(e, q.clone());
        }
        product = multi_mul(&product, &factor, k);
    }
    let mut remainder: Multi = product
        .into_iter()
        .filter(|(e, _)| e.iter().sum::<u32>() == k)
        .collect();

    let e_polys: Vec<Multi> = (0..=k).map(|j| elementary(j, vars)).collect();
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = remainder.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        // the lex-largest monomial of a symmetric polynomial has sorted exponents
        assert!(lead.windows(2).all(|w| w[0] >= w[1]), "remainder is not symmetric");
        let mut parts = Vec::new();
        let mut term = Multi::new();
        term.insert(vec![0; vars], Rational::one());
        for j in 1..=vars {
            let next = if j < vars { lead[j] } else { 0 };
            let mult = lead[j - 1] - next;
            for _ in 0..mult {
                parts.push(j as u32);
                term = multi_mul(&term, &e_polys[j], k);
            }
        }
        for (e, v) in term {
            *remainder.entry(e).or_insert_with(Rational::zero) -= &(&c * &v);
        }
        remainder.retain(|_, v| !v.is_zero());
        out.insert(Partition::new(parts), c);
    }
    out
}

fn binomial(n: u64, k: u64) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * Rational::new(n - i, i + 1))
}

/// Analyst's `B_0..=B_max` from `Σ_{k=0}^{m} C(m+1, k) B_k = 0`.
pub fn bernoulli_by_recurrence(max: u64) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=max {
        let s: Rational = (0..m).map(|k| binomial(m + 1, k) * &b[k as usize]).sum();
        b.push(-s / Rational::from(m + 1));
    }
    b
}

/// Kervaire-Milnor `|bP_{4n}| = 2^{2n-2} (2^{2n-1} - 1) numerator(4 |B_{2n}| / n)`,
/// evaluated with machine integers and the recurrence above.
pub fn kervaire_milnor_order(n: u32) -> i128 {
    let b = bernoulli_by_recurrence(2 * n as u64)[2 * n as usize].abs();
    let ratio = Rational::from(4) * b / Rational::from(n);
    let numer: i128 = ratio.numer().try_into().expect("small n");
    (1i128 << (2 * n - 2)) * ((1i128 << (2 * n - 1)) - 1) * numer
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn series_heads() {
        assert_eq!(ahat_series(2)[1], Rational::new(-1, 24));
        assert_eq!(ahat_series(2)[2], Rational::new(7, 5760));
        assert_eq!(l_series(2)[1], Rational::new(1, 3));
        assert_eq!(l_series(2)[2], Rational::new(-1, 45));
    }

    #[test]
    fn hand_anchors() {
        let a1 = brute_force_genus(&ahat_series(1), 1);
        assert_eq!(a1, [(p(&[1]), Rational::new(-1, 24))].into_iter().collect());
        let a2 = brute_force_genus(&ahat_series(2), 2);
        assert_eq!(a2[&p(&[1, 1])], Rational::new(7, 5760));
        assert_eq!(a2[&p(&[2])], Rational::new(-4, 5760));
        let l2 = brute_force_genus(&l_series(2), 2);
        assert_eq!(l2[&p(&[2])], Rational::new(7, 45));
        assert_eq!(l2[&p(&[1, 1])], Rational::new(-1, 45));
    }

    #[test]
    fn kervaire_milnor() {
        assert_eq!(kervaire_milnor_order(2), 28);
        assert_eq!(kervaire_milnor_order(3), 992);
        assert_eq!(kervaire_milnor_order(4), 8128);
    }
}
