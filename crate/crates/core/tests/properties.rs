use groupring::arith::{ipow, ord_mod, valuation_of_pow_minus_one};
use groupring::components::describe_component;
use groupring::components::predict::{faithful_instances, NonNilpotentFamily};
use groupring::group::{catalog, parse_spec, subgroups, FiniteGroup, GroupSpec, Subgroup};
use groupring::props::is_sn;
use groupring::qalgebra::{AlgElem, Rational};
use groupring::report::{analyze, table_spec, AnalyzeOptions};
use groupring::shoda::{e_idem, e_idem_with_transversal, epsilon, epsilon_centralizer, is_strong_shoda_pair, pcis};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::{Arc, OnceLock};

const SMALL: [&str; 8] = ["S3", "D8", "Q8", "D12", "A4", "C3:C4", "C5:C4", "C7:C3"];

fn named(n: &str) -> Arc<FiniteGroup> {
    Arc::new(catalog::build_named(n, 256).unwrap())
}

fn small_groups() -> &'static Vec<Arc<FiniteGroup>> {
    static G: OnceLock<Vec<Arc<FiniteGroup>>> = OnceLock::new();
    G.get_or_init(|| SMALL.iter().map(|n| named(n)).collect())
}

/// Product straight from the multiplication table, as the oracle for `*`.
fn naive_mul(g: &FiniteGroup, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; g.order()];
    for (x, &ca) in a.iter().enumerate() {
        for (y, &cb) in b.iter().enumerate() {
            out[g.mul(x, y)] += ca * cb;
        }
    }
    out
}

fn ints(e: &AlgElem) -> Vec<i64> {
    e.coeffs().iter().map(|c| c.to_integer().try_into().unwrap()).collect()
}

fn group_and_coeffs(k: usize) -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (0..SMALL.len()).prop_flat_map(move |gi| {
        let n = small_groups()[gi].order();
        (Just(gi), proptest::collection::vec(proptest::collection::vec(-4i64..5, n), k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms((gi, vs) in group_and_coeffs(3)) {
        let g = &small_groups()[gi];
        let a = AlgElem::from_ints(g, &vs[0]).unwrap();
        let b = AlgElem::from_ints(g, &vs[1]).unwrap();
        let c = AlgElem::from_ints(g, &vs[2]).unwrap();
        prop_assert_eq!(ints(&(&a * &b)), naive_mul(g, &vs[0], &vs[1]));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&c * &(&a + &b), &(&c * &a) + &(&c * &b));
        prop_assert_eq!(&AlgElem::one(g) * &a, a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn alg_elem_json_round_trip((gi, vs) in group_and_coeffs(2)) {
        let g = &small_groups()[gi];
        let coeffs: Vec<Rational> = vs[0]
            .iter()
            .zip(&vs[1])
            .map(|(&n, &d)| Rational::new(n.into(), (d.abs() + 1).into()))
            .collect();
        let a = AlgElem::from_coeffs(g, &coeffs).unwrap();
        let back = AlgElem::from_json(&a.to_json(), 256).unwrap();
        prop_assert_eq!(back.coeffs(), a.coeffs());
        prop_assert_eq!(back.group().label(), g.label());
    }

    #[test]
    fn spec_display_parses_back(s in spec_strategy()) {
        let text = s.to_string();
        prop_assert_eq!(parse_spec(&text).unwrap(), s);
    }

    #[test]
    fn ord_and_valuation_of_one_plus_prime_power(
        qi in 0usize..6,
        a in 1u32..4,
        d in 0u32..4,
        b in 1u64..50,
    ) {
        let q = [2u64, 3, 5, 7, 11, 13][qi];
        prop_assume!(b % q != 0);
        prop_assume!(q != 2 || a >= 2);
        let m = ipow(q, a + d);
        let c = 1 + ipow(q, a) * b;
        prop_assert_eq!(ord_mod(m, c).unwrap(), ipow(q, d));
        // Oracle: the least k with c^k = 1 mod m, by repeated multiplication.
        let mut x = c % m;
        let mut k = 1;
        while x != 1 % m {
            x = x * (c % m) % m;
            k += 1;
        }
        prop_assert_eq!(k, ipow(q, d));
        prop_assert_eq!(valuation_of_pow_minus_one(q, c, ipow(q, d)).unwrap(), a + d);
    }

    #[test]
    fn transversal_choice_does_not_matter(gi in 0..SMALL.len(), seed in any::<u64>()) {
        let g = &small_groups()[gi];
        let lat = subgroups(g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for p in pcis(g, &lat).unwrap() {
            let Some(pair) = p.pair else { continue };
            let cen = epsilon_centralizer(g, &pair.h, &pair.k).unwrap();
            let ts = random_right_transversal(g, &cen, &mut rng);
            prop_assert_eq!(e_idem_with_transversal(g, &pair.h, &pair.k, &ts).unwrap(), e_idem(g, &pair.h, &pair.k).unwrap());
        }
    }

    #[test]
    fn sn_passes_to_quotients(gi in 0usize..SN_GROUPS.len(), pick in any::<prop::sample::Index>()) {
        let g = sn_groups()[gi].clone();
        let lat = subgroups(&g);
        let normals: Vec<&Subgroup> = lat.normal_subgroups();
        let n = normals[pick.index(normals.len())];
        let (q, _) = g.quotient(n, "Q").unwrap();
        prop_assert!(is_sn(&q));
    }

    #[test]
    fn derived_subgroup_of_quotient_is_image(gi in 0..SMALL.len(), pick in any::<prop::sample::Index>()) {
        let g = &small_groups()[gi];
        let lat = subgroups(g);
        let normals = lat.normal_subgroups();
        let n = normals[pick.index(normals.len())];
        let (q, proj) = g.quotient(n, "Q").unwrap();
        let image: std::collections::BTreeSet<usize> = g.derived_subgroup().members.iter().map(|x| proj[x]).collect();
        let derived: std::collections::BTreeSet<usize> = q.derived_subgroup().members.iter().collect();
        prop_assert_eq!(image, derived);
    }
}

fn spec_strategy() -> impl Strategy<Value = GroupSpec> {
    let leaf = prop_oneof![
        (1usize..60).prop_map(GroupSpec::Cyclic),
        (3usize..30).prop_map(|n| GroupSpec::Dihedral(2 * n)),
        (2usize..8).prop_map(|n| GroupSpec::Quaternion(4 * n)),
        (0..catalog::CATALOG.len()).prop_map(|i| GroupSpec::Named(catalog::CATALOG[i].name.to_string())),
        (2usize..8, 1usize..4).prop_map(|(p, r)| GroupSpec::ElementaryAbelian(p, r)),
        (2usize..12, 2usize..12, 1usize..5).prop_map(|(p, n, r)| GroupSpec::SdCyc(p, n, r)),
        (2usize..6, 1usize..4, 1usize..4).prop_map(|(p, m, n)| GroupSpec::Bj1(p, m, n)),
        (2usize..6).prop_map(GroupSpec::Bj3),
        (2usize..8).prop_map(GroupSpec::Heis),
    ];
    leaf.prop_recursive(2, 6, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| GroupSpec::Direct(Box::new(a), Box::new(b)))
    })
}

/// A right transversal built by picking a random element of each right coset.
fn random_right_transversal(g: &FiniteGroup, h: &Subgroup, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let coset: Vec<usize> = h.members.iter().map(|y| g.mul(y, x)).collect();
        for &c in &coset {
            seen[c] = true;
        }
        out.push(*coset.choose(rng).unwrap());
    }
    out
}

const SN_GROUPS: [&str; 7] = ["S3", "A4", "C3^2:C8", "C3^2:C4", "C5:C4", "D8cpD8", "Q16"];

fn sn_groups() -> &'static Vec<Arc<FiniteGroup>> {
    static G: OnceLock<Vec<Arc<FiniteGroup>>> = OnceLock::new();
    G.get_or_init(|| SN_GROUPS.iter().map(|n| named(n)).collect())
}

#[test]
fn sn_pool_is_sn() {
    for g in sn_groups() {
        assert!(is_sn(g), "{}", g.label());
    }
}

#[test]
fn centralizer_of_epsilon_is_normalizer_of_k() {
    for name in ["S3", "D8", "Q8", "D12", "A4", "C5:C4", "C3^2:C4", "Q8xC3", "Heis3"] {
        let g = named(name);
        let lat = subgroups(&g);
        for p in pcis(&g, &lat).unwrap() {
            let Some(pair) = p.pair else { continue };
            assert!(is_strong_shoda_pair(&g, &pair.h, &pair.k));
            let eps = epsilon(&g, &pair.h, &pair.k).unwrap();
            let direct = eps.centralizer_subgroup();
            assert_eq!(direct, g.normalizer(&pair.k), "{name}");
            assert_eq!(epsilon_centralizer(&g, &pair.h, &pair.k).unwrap(), direct, "{name}");
        }
    }
}

#[test]
fn commutative_iff_h_is_g_iff_derived_in_k() {
    for name in ["S3", "D8", "Q8", "A4", "C3:C8", "C7:C3", "C2^3:C7", "C3^2:C8", "M27"] {
        let g = named(name);
        let lat = subgroups(&g);
        let d = g.derived_subgroup();
        for p in pcis(&g, &lat).unwrap() {
            let pair = p.pair.unwrap();
            let desc = describe_component(&g, &pair).unwrap();
            let commutative = desc.dim_over_q == desc.center_rank;
            let h_is_g = pair.h.order() == g.order();
            let derived_in_k = d.is_subgroup_of(&pair.k);
            assert!(commutative == h_is_g && h_is_g == derived_in_k, "{name}");
        }
    }
}

#[test]
fn faithful_family_noncommutative_part() {
    for f in faithful_instances(200) {
        let NonNilpotentFamily::Faithful { p, n, q } = f else { unreachable!() };
        let g = Arc::new(f.build(250).unwrap());
        let lat = subgroups(&g);
        let d = g.derived_subgroup();
        let noncomm: Vec<AlgElem> = pcis(&g, &lat)
            .unwrap()
            .into_iter()
            .filter(|p| !d.is_subgroup_of(&p.pair.as_ref().unwrap().k))
            .map(|p| p.e)
            .collect();
        // C_q permutes the index-p subgroups of C_p^n freely once n >= 2;
        // for n = 1 the only one is trivial and fixed.
        let orbits = if n == 1 { 1 } else { (ipow(p, n) - 1) / (p - 1) / q };
        assert_eq!(noncomm.len() as u64, orbits, "{}", f.name());
        let sum = noncomm.iter().fold(AlgElem::zero(&g), |acc, e| &acc + e);
        assert_eq!(sum, &AlgElem::one(&g) - &AlgElem::tilde(&g, &d), "{}", f.name());
    }
}

#[test]
fn repunit_faithful_has_single_noncommutative_pci() {
    for (p, n, q) in [(2u64, 2u32, 3u64), (2, 3, 7)] {
        let g = Arc::new(NonNilpotentFamily::Faithful { p, n, q }.build(250).unwrap());
        let d = g.derived_subgroup();
        let noncomm: Vec<AlgElem> = pcis(&g, &subgroups(&g))
            .unwrap()
            .into_iter()
            .filter(|x| !d.is_subgroup_of(&x.pair.as_ref().unwrap().k))
            .map(|x| x.e)
            .collect();
        assert_eq!(noncomm, vec![&AlgElem::one(&g) - &AlgElem::tilde(&g, &d)]);
    }
}

#[test]
fn table_spec_reproduces_the_analysis() {
    let opts = AnalyzeOptions { witness_budget: 20_000, ..AnalyzeOptions::default() };
    for name in ["S3", "Q8", "D12", "A4", "C3:C8"] {
        let by_name = serde_json::to_value(analyze(name, &opts).unwrap()).unwrap();
        let g = named(name);
        let by_table = serde_json::to_value(analyze(&table_spec(&g), &opts).unwrap()).unwrap();
        for key in ["properties", "matrix_count", "prediction"] {
            assert_eq!(by_name[key], by_table[key], "{name}: {key}");
        }
        assert_eq!(by_name["nd"]["verdict"], by_table["nd"]["verdict"], "{name}");
        let shape = |v: &serde_json::Value| {
            let mut s: Vec<(u64, u64, String)> = v["pcis"]
                .as_array()
                .unwrap()
                .iter()
                .map(|p| (p["dim"].as_u64().unwrap(), p["center_rank"].as_u64().unwrap(), p["idempotent_hash"].to_string()))
                .collect();
            s.sort();
            s
        };
        assert_eq!(shape(&by_name), shape(&by_table), "{name}");
    }
}
