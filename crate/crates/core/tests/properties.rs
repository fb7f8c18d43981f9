use proptest::prelude::*;

use scalcurv_core::genera::{genus_of, Genus};
use scalcurv_core::invariants::{
    component_family, connected_sum, relative_index, t_term, tilde_s, CobordismData,
    MetricRepresentative,
};
use scalcurv_core::manifolds::{
    self, bott, catalog, hp2, k3, point, product, reverse_orientation, sphere, CharacteristicData,
    ManifoldFlags, CATALOG_NAMES,
};
use scalcurv_core::{partitions, NumberTable, Rational};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-500i64..500, 1i64..60).prop_map(|(n, d)| Rational::new(n, d))
}

fn arb_table(weight: u32) -> impl Strategy<Value = NumberTable> {
    let monomials = partitions(weight);
    prop::collection::vec(arb_rational(), monomials.len())
        .prop_map(move |vals| monomials.iter().cloned().zip(vals).collect())
}

fn arb_manifold(max_weight: u32) -> impl Strategy<Value = CharacteristicData> {
    (0..=max_weight)
        .prop_flat_map(|w| (Just(w), arb_table(w), -300i64..300, any::<bool>()))
        .prop_map(|(w, numbers, sigma, spin)| {
            let flags = ManifoldFlags { is_spin: spin, ..Default::default() };
            CharacteristicData::new("X", 4 * w, numbers, sigma, flags).unwrap()
        })
}

fn arb_representative(weight: u32) -> impl Strategy<Value = MetricRepresentative> {
    (arb_table(weight), -400i64..400).prop_map(move |(numbers, sigma)| {
        let w = CobordismData::new("W", 4 * weight, numbers, sigma, sphere(4 * weight - 1), true)
            .unwrap();
        MetricRepresentative::from_cobordism(w).unwrap()
    })
}

fn catalog_entries() -> Vec<CharacteristicData> {
    CATALOG_NAMES.iter().map(|n| catalog(n).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn genera_are_multiplicative(a in arb_manifold(3), b in arb_manifold(3)) {
        let x = product(&a, &b);
        for g in [Genus::AHat, Genus::L] {
            prop_assert_eq!(genus_of(g, &x), genus_of(g, &a) * genus_of(g, &b));
        }
    }

    #[test]
    fn product_commutes_and_associates(a in arb_manifold(2), b in arb_manifold(2), c in arb_manifold(2)) {
        let (ab, ba) = (product(&a, &b), product(&b, &a));
        prop_assert!(ab.same_characteristics(&ba));
        let left = product(&product(&a, &b), &c);
        let right = product(&a, &product(&b, &c));
        prop_assert!(left.same_characteristics(&right));
    }

    #[test]
    fn reversal_negates_genera(a in arb_manifold(3)) {
        let r = reverse_orientation(&a);
        for g in [Genus::AHat, Genus::L] {
            prop_assert_eq!(genus_of(g, &r), -genus_of(g, &a));
        }
    }

    #[test]
    fn genus_evaluation_is_linear(a in arb_manifold(3), b in arb_manifold(3), c in arb_rational()) {
        prop_assume!(a.dimension() == b.dimension() && a.dimension() > 0);
        let k = a.dimension() / 4;
        let sum = manifolds::disjoint_union(&a, &b).unwrap();
        let ahat = Genus::AHat.polynomial(k);
        let l = Genus::L.polynomial(k);
        prop_assert_eq!(genus_of(Genus::AHat, &sum), genus_of(Genus::AHat, &a) + genus_of(Genus::AHat, &b));
        let mixed = ahat.add(&l.scale(&c)).unwrap();
        prop_assert_eq!(
            mixed.evaluate(a.pontrjagin_numbers()),
            ahat.evaluate(a.pontrjagin_numbers()) + c * l.evaluate(a.pontrjagin_numbers())
        );
    }

    #[test]
    fn t_term_additive_under_connected_sum(a in arb_representative(2), b in arb_representative(2)) {
        let s = connected_sum(&a, &b).unwrap();
        prop_assert_eq!(
            t_term(s.cobordism()).unwrap(),
            t_term(a.cobordism()).unwrap() + t_term(b.cobordism()).unwrap()
        );
        let (ta, tb, ts) = (tilde_s(&a, &k3()).unwrap(), tilde_s(&b, &k3()).unwrap(), tilde_s(&s, &k3()).unwrap());
        prop_assert_eq!(ts.value, ta.value + tb.value);
    }

    #[test]
    fn tilde_s_additive_under_disjoint_union(a in arb_representative(3), b in arb_representative(3)) {
        let u = a.disjoint_union(&b).unwrap();
        let n = bott();
        prop_assert_eq!(
            tilde_s(&u, &n).unwrap().value,
            tilde_s(&a, &n).unwrap().value + tilde_s(&b, &n).unwrap().value
        );
    }

    #[test]
    fn orientation_flips_sign(a in arb_representative(2)) {
        let r = a.reverse_orientation();
        prop_assert_eq!(t_term(r.cobordism()).unwrap(), -t_term(a.cobordism()).unwrap());
        prop_assert_eq!(tilde_s(&r, &k3()).unwrap().value, -tilde_s(&a, &k3()).unwrap().value);
    }

    #[test]
    fn tilde_s_factorises(a in arb_representative(2)) {
        for n in [k3(), bott()] {
            let v = tilde_s(&a, &n).unwrap();
            prop_assert_eq!(&v.value, &(&v.ahat_factor * &v.t_term));
            prop_assert!(!v.ahat_factor.is_zero());
        }
    }

    #[test]
    fn relative_index_antisymmetric(a in arb_representative(2), b in arb_representative(2)) {
        let ab = relative_index(&a, &b, &k3()).unwrap();
        let ba = relative_index(&b, &a, &k3()).unwrap();
        prop_assert_eq!(ab.is_integer, ab.value.is_integer());
        prop_assert_eq!(ab.value, -ba.value);
    }

    #[test]
    fn families_separate(base in arb_representative(2), block in arb_representative(2)) {
        match component_family(&base, &block, &k3(), 6) {
            Ok(fam) => {
                for i in 0..fam.len() {
                    for j in i + 1..fam.len() {
                        prop_assert_ne!(&fam[i].value, &fam[j].value);
                    }
                }
            }
            Err(e) => {
                prop_assert_eq!(e, scalcurv_core::Error::FamilyDoesNotSeparate);
                prop_assert!(tilde_s(&block, &k3()).unwrap().value.is_zero());
            }
        }
    }
}

#[test]
fn signature_theorem_on_catalog() {
    for m in catalog_entries() {
        assert_eq!(genus_of(Genus::L, &m), Rational::from(m.signature().clone()), "{}", m.name());
    }
}

#[test]
fn signature_multiplies_on_catalog_pairs() {
    let entries = catalog_entries();
    for a in &entries {
        for b in &entries {
            let x = product(a, b);
            assert_eq!(x.signature(), &(a.signature() * b.signature()));
            assert_eq!(genus_of(Genus::L, &x), Rational::from(x.signature().clone()), "{} x {}", a.name(), b.name());
        }
    }
}

#[test]
fn ks_products_carry_nonzero_classes() {
    let entries: Vec<_> = catalog_entries().into_iter().chain([sphere(4), sphere(15)]).collect();
    let mut passing = 0;
    for m in &entries {
        for n in &entries {
            if manifolds::validate_ks_product(m, n).passed() {
                passing += 1;
                assert!(n.has_nonzero_pontrjagin_number());
                let n2 = product(n, n);
                assert!(n2.has_nonzero_pontrjagin_number());
                assert!(!product(m, n).rational_pontrjagin_classes_vanish());
            }
        }
    }
    // S7, S11, S15 against K3 and Bott
    assert_eq!(passing, 6);
}

#[test]
fn point_products() {
    let x = product(&hp2(), &point());
    assert!(x.same_characteristics(&hp2().with_admits_psc(false)));
}
