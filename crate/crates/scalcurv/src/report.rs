//! Reproduction checks for the headline values, shared by `scalcurv report
//! paper` and the `acceptance` test target. Every comparison is exact.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use scalcurv_core::genera::{a_constant, combined_polynomial, genus_of, genus_polynomial, Genus, GenusSeries};
use scalcurv_core::invariants::{
    bp_order, component_family, connected_sum, hss_degree0_sufficient, self_pullback_relative_index,
    t_term, theorem04_constructive, theorem04_value, tilde_s, CobordismData, MetricRepresentative,
    NFactor, SelfPullbackIndex,
};
use scalcurv_core::manifolds::{
    self, bott, catalog, hp2, k3, product, sphere, validate_ks_product, CharacteristicData,
    ManifoldFlags, CATALOG_NAMES,
};
use scalcurv_core::{partitions, NumberTable, Partition, Rational};

use crate::oracle;

pub type Outcome = Result<String, String>;

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub check: fn() -> Outcome,
}

pub const CRITERIA: [Criterion; 9] = [
    Criterion { id: 1, title: "Â_k and L_k match brute-force oracle, k = 1..4", check: polynomial_oracle },
    Criterion { id: 2, title: "Â_k + a_k L_k has zero p_k term, k = 2..5", check: combined_polynomial_check },
    Criterion { id: 3, title: "catalog genera and signature theorem", check: catalog_genera },
    Criterion { id: 4, title: "Â and L multiplicative on 100 random pairs", check: multiplicativity },
    Criterion { id: 5, title: "t(M x I) = 0, t(E8) = 1/28", check: t_term_anchors },
    Criterion { id: 6, title: "closed forms for g_j match Â(N) t(W_j)", check: closed_form_sweep },
    Criterion { id: 7, title: "|bP_8|, |bP_12|, |bP_16| = 28, 992, 8128", check: bp_orders },
    Criterion { id: 8, title: "path-component separation, additivity, orientation", check: separation },
    Criterion { id: 9, title: "degree-0 sufficiency never holds on KS products", check: degree0 },
];

pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub outcome: Outcome,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }

    pub fn line(&self) -> String {
        match &self.outcome {
            Ok(detail) => format!("[PASS] {}. {} ({detail})", self.id, self.title),
            Err(why) => format!("[FAIL] {}. {}: {why}", self.id, self.title),
        }
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .map(|c| CriterionResult { id: c.id, title: c.title, outcome: (c.check)() })
        .collect()
}

macro_rules! ensure_eq {
    ($left:expr, $right:expr, $($ctx:tt)+) => {{
        let (l, r) = (&$left, &$right);
        if l != r {
            return Err(format!("{}: {:?} != {:?}", format!($($ctx)+), l, r));
        }
    }};
}

macro_rules! ensure {
    ($cond:expr, $($ctx:tt)+) => {
        if !$cond {
            return Err(format!($($ctx)+));
        }
    };
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

pub fn polynomial_oracle() -> Outcome {
    for k in 1..=4u32 {
        for (genus, series) in [
            (Genus::AHat, oracle::ahat_series(k as usize)),
            (Genus::L, oracle::l_series(k as usize)),
        ] {
            let expected = oracle::brute_force_genus(&series, k);
            let got: std::collections::BTreeMap<Partition, Rational> =
                genus.polynomial(k).into_terms().into_iter().collect();
            ensure_eq!(got, expected, "{} weight {k}", genus.name());
            // the core series themselves, fed through the generator
            let core = genus_polynomial(&GenusSeries::new(genus.name(), series[1..].to_vec()), k)
                .map_err(|e| e.to_string())?;
            ensure_eq!(core, genus.polynomial(k), "{} weight {k} from oracle series", genus.name());
        }
    }
    let a1 = Genus::AHat.polynomial(1);
    ensure_eq!(a1.coefficient(&p(&[1])), r(-1, 24), "Â1");
    ensure_eq!(Genus::L.polynomial(1).coefficient(&p(&[1])), r(1, 3), "L1");
    let a2 = Genus::AHat.polynomial(2);
    ensure_eq!(a2.coefficient(&p(&[1, 1])), r(7, 5760), "Â2 p1^2");
    ensure_eq!(a2.coefficient(&p(&[2])), r(-4, 5760), "Â2 p2");
    let l2 = Genus::L.polynomial(2);
    ensure_eq!(l2.coefficient(&p(&[2])), r(7, 45), "L2 p2");
    ensure_eq!(l2.coefficient(&p(&[1, 1])), r(-1, 45), "L2 p1^2");
    Ok("8 polynomials, exact".into())
}

pub fn combined_polynomial_check() -> Outcome {
    for k in 2..=5u32 {
        let expected = r(1, (1i64 << (2 * k + 1)) * ((1i64 << (2 * k - 1)) - 1));
        ensure_eq!(a_constant(k), expected, "a_{k}");
        let c = combined_polynomial(k);
        ensure!(c.coefficient(&Partition::single(k)).is_zero(), "p_{k} coefficient of combined polynomial is {}", c.coefficient(&Partition::single(k)));
    }
    ensure_eq!(a_constant(2), r(1, 224), "a_2");
    Ok("a_2 = 1/224".into())
}

pub fn catalog_genera() -> Outcome {
    ensure_eq!(genus_of(Genus::AHat, &k3()), r(-2, 1), "Â(K3)");
    ensure_eq!(genus_of(Genus::AHat, &bott()), r(1, 1), "Â(Bott)");
    ensure_eq!(genus_of(Genus::AHat, &hp2()), Rational::zero(), "Â(HP2)");
    for name in CATALOG_NAMES {
        let m = catalog(name).map_err(|e| e.to_string())?;
        if m.dimension() % 4 == 0 {
            ensure_eq!(genus_of(Genus::L, &m), Rational::from(m.signature().clone()), "L({name})");
        } else {
            ensure!(m.signature() == &0.into(), "{name} has odd-dimension signature");
        }
    }
    Ok(format!("{} entries", CATALOG_NAMES.len()))
}

fn random_rational(rng: &mut StdRng) -> Rational {
    Rational::new(rng.random_range(-1000i64..=1000), rng.random_range(1i64..=97))
}

fn random_table(rng: &mut StdRng, weight: u32) -> NumberTable {
    partitions(weight).into_iter().map(|p| (p, random_rational(rng))).collect()
}

fn random_manifold(rng: &mut StdRng, max_weight: u32) -> CharacteristicData {
    let w = rng.random_range(0..=max_weight);
    let flags = ManifoldFlags { is_spin: rng.random(), ..Default::default() };
    let sigma = rng.random_range(-500i64..=500);
    CharacteristicData::new("random", 4 * w, random_table(rng, w), sigma, flags).expect("well-formed")
}

fn random_representative(rng: &mut StdRng, weight: u32) -> MetricRepresentative {
    let w = CobordismData::new(
        "random W",
        4 * weight,
        random_table(rng, weight),
        rng.random_range(-800i64..=800),
        sphere(4 * weight - 1),
        true,
    )
    .expect("well-formed");
    MetricRepresentative::from_cobordism(w).expect("psc")
}

pub fn multiplicativity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5ca1_c0b0);
    for i in 0..100 {
        let a = random_manifold(&mut rng, 3);
        let b = random_manifold(&mut rng, 3);
        let x = product(&a, &b);
        for g in [Genus::AHat, Genus::L] {
            ensure_eq!(genus_of(g, &x), genus_of(g, &a) * genus_of(g, &b), "pair {i}, {}", g.name());
        }
    }
    Ok("100 pairs".into())
}

pub fn t_term_anchors() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let mut boundaries: Vec<CharacteristicData> = (1..=5).map(|m| sphere(4 * m - 1)).collect();
    for _ in 0..20 {
        let m = rng.random_range(1..=5u32);
        let flags = ManifoldFlags {
            is_spin: rng.random(),
            rational_pontrjagin_classes_vanish: true,
            admits_psc: rng.random(),
        };
        boundaries.push(
            CharacteristicData::new("M", 4 * m - 1, NumberTable::new(), 0, flags).expect("well-formed"),
        );
    }
    for m in &boundaries {
        let cyl = CobordismData::cylinder(m.clone()).map_err(|e| e.to_string())?;
        ensure_eq!(t_term(&cyl).map_err(|e| e.to_string())?, Rational::zero(), "t({} x I)", m.name());
    }
    let e8 = CobordismData::e8_plumbing(sphere(7)).map_err(|e| e.to_string())?;
    ensure_eq!(t_term(&e8).map_err(|e| e.to_string())?, r(1, 28), "t(E8)");
    Ok(format!("{} cylinders", boundaries.len()))
}

pub fn closed_form_sweep() -> Outcome {
    let mut count = 0;
    for n in 2..=5u32 {
        for j in 0..=10u64 {
            for q in -3..=3i64 {
                let k3v = theorem04_value(n, j, q, NFactor::K3);
                let bv = theorem04_value(n, j, q, NFactor::Bott);
                for (factor, closed) in [(NFactor::K3, &k3v), (NFactor::Bott, &bv)] {
                    let built = theorem04_constructive(n, j, q, factor).map_err(|e| e.to_string())?;
                    ensure_eq!(&built, closed, "n={n} j={j} q={q} {factor:?}");
                }
                if !bv.is_zero() {
                    ensure_eq!(&k3v / &bv, r(-2, 1), "K3/Bott ratio n={n} j={j} q={q}");
                } else {
                    ensure!(k3v.is_zero(), "K3 value non-zero where Bott value vanishes");
                }
                count += 1;
            }
        }
    }
    ensure_eq!(theorem04_value(2, 1, 0, NFactor::K3), r(-2, 1), "n=2 j=1 q=0 K3");
    ensure_eq!(theorem04_value(2, 1, 0, NFactor::Bott), r(1, 1), "n=2 j=1 q=0 Bott");
    Ok(format!("{count} (n, j, q) triples, both factors"))
}

pub fn bp_orders() -> Outcome {
    for (n, expected) in [(2u32, 28i64), (3, 992), (4, 8128)] {
        ensure_eq!(bp_order(n), expected.into(), "bP_{}", 4 * n);
        ensure_eq!(i128::from(expected), oracle::kervaire_milnor_order(n), "oracle bP_{}", 4 * n);
    }
    Ok("28, 992, 8128".into())
}

pub fn separation() -> Outcome {
    let cyl = MetricRepresentative::from_cobordism(CobordismData::cylinder(sphere(7)).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let e8 = MetricRepresentative::from_cobordism(CobordismData::e8_plumbing(sphere(7)).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    for (n, step) in [(k3(), r(-1, 14)), (bott(), r(1, 28))] {
        let fam = component_family(&cyl, &e8, &n, 10).map_err(|e| e.to_string())?;
        ensure_eq!(fam.len(), 10, "family length");
        for (i, v) in fam.iter().enumerate() {
            ensure_eq!(v.value, &step * &Rational::from(i as u64), "entry {i} over {}", n.name());
            for w in &fam[i + 1..] {
                ensure!(v.value != w.value, "repeated value {} over {}", v.value, n.name());
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(0xe8);
    for i in 0..100 {
        let weight = rng.random_range(2..=3u32);
        let a = random_representative(&mut rng, weight);
        let b = random_representative(&mut rng, weight);
        let n = if rng.random() { k3() } else { bott() };
        let s = |rep: &MetricRepresentative| tilde_s(rep, &n).map(|v| v.value).map_err(|e| e.to_string());
        let sum = connected_sum(&a, &b).map_err(|e| e.to_string())?;
        ensure_eq!(s(&sum)?, s(&a)? + s(&b)?, "connected-sum additivity #{i}");
        let union = a.disjoint_union(&b).map_err(|e| e.to_string())?;
        ensure_eq!(s(&union)?, s(&a)? + s(&b)?, "disjoint-union additivity #{i}");
        ensure_eq!(s(&a.reverse_orientation())?, -s(&a)?, "orientation sign #{i}");
        let ta = t_term(a.cobordism()).map_err(|e| e.to_string())?;
        ensure_eq!(t_term(a.reverse_orientation().cobordism()).map_err(|e| e.to_string())?, -ta, "t sign #{i}");
    }
    Ok("10 distinct values over K3 and Bott; 100 random representatives".into())
}

pub fn degree0() -> Outcome {
    let mut pool: Vec<CharacteristicData> = CATALOG_NAMES.iter().map(|n| catalog(n).expect("built-in")).collect();
    pool.extend([sphere(4), sphere(15), sphere(19), manifolds::reverse_orientation(&k3())]);
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..20 {
        pool.push(random_manifold(&mut rng, 3));
    }
    let mut passing = 0;
    let mut all = pool.clone();
    for m in &pool {
        for n in &pool {
            let x = product(m, n);
            if validate_ks_product(m, n).passed() {
                passing += 1;
                ensure!(!hss_degree0_sufficient(&x), "{} passes but has vanishing classes", x.name());
            }
            all.push(x);
        }
    }
    ensure!(passing > 0, "no Kreck-Stolz product in the pool");
    for x in &all {
        let flag = hss_degree0_sufficient(x);
        let known_zero = self_pullback_relative_index(x) == SelfPullbackIndex::Known(Rational::zero());
        ensure_eq!(flag, known_zero, "self-pullback index on {}", x.name());
    }
    Ok(format!("{passing} valid products, {} manifolds", all.len()))
}

#[cfg(test)]
mod tests {
    #[test]
    fn every_criterion_has_a_distinct_id() {
        let mut ids: Vec<u8> = super::CRITERIA.iter().map(|c| c.id).collect();
        ids.dedup();
        assert_eq!(ids, (1..=9).collect::<Vec<_>>());
    }
}
