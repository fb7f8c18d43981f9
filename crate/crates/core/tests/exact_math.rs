use num_bigint::BigInt;
use proptest::prelude::*;

use scalcurv_core::bernoulli::bernoulli;
use scalcurv_core::{partitions, Partition, PartitionPolynomial, Rational};

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Independent (a/b + c/d) reduced with a plain Euclid gcd.
fn oracle_sum(a: i64, b: i64, c: i64, d: i64) -> (i128, i128) {
    let (a, b, c, d) = (a as i128, b as i128, c as i128, d as i128);
    let mut n = a * d + c * b;
    let mut m = b * d;
    if m < 0 {
        n = -n;
        m = -m;
    }
    let g = gcd(n, m).max(1);
    (n / g, m / g)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_sum_matches_gcd_oracle(
        a in -1_000_000_000i64..1_000_000_000,
        b in prop_oneof![-1_000_000_000i64..-1, 1i64..1_000_000_000],
        c in -1_000_000_000i64..1_000_000_000,
        d in prop_oneof![-1_000_000_000i64..-1, 1i64..1_000_000_000],
    ) {
        let got = Rational::new(a, b) + Rational::new(c, d);
        let (n, m) = oracle_sum(a, b, c, d);
        prop_assert_eq!(got.numer(), &BigInt::from(n));
        prop_assert_eq!(got.denom(), &BigInt::from(m));
    }
}

fn binomial(n: u64, k: u64) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * Rational::new(n - i, i + 1))
}

/// Analyst's B_0..B_max from Σ_{k=0}^{m} C(m+1, k) B_k = 0.
fn bernoulli_by_recurrence(max: u64) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=max {
        let s: Rational = (0..m).map(|k| binomial(m + 1, k) * &b[k as usize]).sum();
        b.push(-s / Rational::from(m + 1));
    }
    b
}

#[test]
fn bernoulli_matches_recurrence() {
    let b = bernoulli_by_recurrence(24);
    for n in 1..=12u32 {
        assert_eq!(bernoulli(n), b[2 * n as usize].abs(), "n = {n}");
    }
    assert_eq!(bernoulli(1), Rational::new(1, 6));
    assert_eq!(bernoulli(2), Rational::new(1, 30));
    assert_eq!(bernoulli(4), Rational::new(1, 30));
}

/// p(n) via Euler's pentagonal-number recurrence.
fn partition_count(max: usize) -> Vec<i64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[n] += sign * p[n - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                p[n] += sign * p[n - g2];
            }
            k += 1;
        }
    }
    p
}

#[test]
fn partition_counts_match_recurrence() {
    let expected = partition_count(12);
    for k in 0..=12u32 {
        let ps = partitions(k);
        assert_eq!(ps.len() as i64, expected[k as usize], "k = {k}");
        assert!(ps.iter().all(|p| p.weight() == k));
        assert!(ps.iter().all(|p| p.parts().windows(2).all(|w| w[0] >= w[1])));
    }
}

fn arb_poly(weight: u32) -> impl Strategy<Value = PartitionPolynomial> {
    let monomials = partitions(weight);
    let n = monomials.len();
    prop::collection::vec((-20i64..20, 1i64..12), n).prop_map(move |coeffs| {
        PartitionPolynomial::from_terms(
            weight,
            monomials.iter().cloned().zip(coeffs.into_iter().map(|(a, b)| Rational::new(a, b))),
        )
        .unwrap()
    })
}

fn arb_weighted_poly() -> impl Strategy<Value = PartitionPolynomial> {
    (0u32..=4).prop_flat_map(arb_poly)
}

proptest! {
    #[test]
    fn multiply_commutes(a in arb_weighted_poly(), b in arb_weighted_poly()) {
        prop_assert_eq!(a.multiply(&b), b.multiply(&a));
    }

    #[test]
    fn multiply_associates(a in arb_weighted_poly(), b in arb_weighted_poly(), c in arb_weighted_poly()) {
        let left = a.multiply(&b).multiply(&c);
        let right = a.multiply(&b.multiply(&c));
        prop_assert_eq!(left.weight(), a.weight() + b.weight() + c.weight());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiply_distributes(a in arb_poly(2), b in arb_poly(2), c in arb_poly(1)) {
        let left = a.add(&b).unwrap().multiply(&c);
        let right = a.multiply(&c).add(&b.multiply(&c)).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rational_text_round_trip(n in any::<i64>(), d in 1i64..i64::MAX) {
        let r = Rational::new(n, d);
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }

    #[test]
    fn partition_text_round_trip(parts in prop::collection::vec(1u32..9, 0..6)) {
        let p = Partition::new(parts);
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }
}
