use num_bigint::BigUint;
use proptest::prelude::*;

use zgray::constructions::{code_di, TypeProfile};
use zgray::format::{parse_bincode, parse_zcode, write_bincode, write_zcode, Role};
use zgray::gray::{phi, phi_cap, OrderedHadamard, PerfectPartition};
use zgray::ring::{dist, Metric, Modulus, RingWord};
use zgray::verify::{canonicalize, one_prime_perfect_criterion, one_prime_perfect_definition};
use zgray::zcode::{BoundedSearch, LinearZCode, ZMatrix, DEFAULT_BUDGET};

fn word(md: Modulus, n: usize) -> impl Strategy<Value = RingWord> {
    proptest::collection::vec(0..md.two_m(), n).prop_map(move |s| RingWord::new(md, s).unwrap())
}

fn matrix(two_m: u32, rows: usize, cols: usize) -> impl Strategy<Value = ZMatrix> {
    let md = Modulus::new(two_m).unwrap();
    proptest::collection::vec(proptest::collection::vec(0..two_m, cols), 1..=rows)
        .prop_map(move |r| ZMatrix::new(md, cols, r).unwrap())
}

fn metric() -> impl Strategy<Value = Metric> {
    prop_oneof![Just(Metric::Star), Just(Metric::Diamond)]
}

fn set_distance(a: &zgray::BinaryCode, b: &zgray::BinaryCode) -> u32 {
    a.words()
        .iter()
        .flat_map(|x| b.words().iter().map(move |y| x.distance(y)))
        .min()
        .unwrap()
}

proptest! {
    #[test]
    fn metric_axioms(k in 2u32..=5, m in metric(), seed in any::<[u32; 9]>()) {
        let md = Modulus::power_of_two(k).unwrap();
        let q = md.two_m();
        let w = |i: usize| RingWord::new(md, seed[i..i + 3].iter().map(|s| s % q).collect()).unwrap();
        let (x, y, z) = (w(0), w(3), w(6));
        let dxy = dist(&x, &y, m).unwrap();
        prop_assert_eq!(dxy, dist(&y, &x, m).unwrap());
        prop_assert_eq!(dxy == 0, x == y);
        prop_assert!(dxy <= dist(&x, &z, m).unwrap() + dist(&z, &y, m).unwrap());
        // translation invariance
        prop_assert_eq!(dxy, dist(&x.add(&z).unwrap(), &y.add(&z).unwrap(), m).unwrap());
    }

    #[test]
    fn dual_sizes_multiply_to_the_space(g in matrix(8, 3, 4)) {
        let c = LinearZCode::from_generators(g).unwrap();
        let d = c.dual();
        prop_assert_eq!(c.cardinality() * d.cardinality(), BigUint::from(8u32.pow(4)));
        prop_assert!(d.same_code(&c.dual_by_scan().unwrap()));
        prop_assert!(d.dual().same_code(&c));
    }

    #[test]
    fn orders_multiply_to_cardinality(g in matrix(16, 3, 3)) {
        let c = LinearZCode::from_generators(g).unwrap();
        let (_, orders) = c.row_canonical().unwrap();
        let prod: BigUint = orders.iter().map(|&o| BigUint::from(o)).product();
        prop_assert_eq!(&prod, &c.cardinality());
        prop_assert_eq!(c.enumerate_raw().unwrap().len() as u64, c.cardinality_u64().unwrap());
    }

    #[test]
    fn monomial_maps_preserve_weight_distribution(
        g in matrix(8, 2, 4),
        z in proptest::sample::subsequence(vec![1u32, 3, 5, 7], 1..=4),
        perm in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(),
        m in metric(),
    ) {
        let md = Modulus::new(8).unwrap();
        let z = RingWord::new(md, (0..4).map(|i| z[i % z.len()]).collect()).unwrap();
        let c = LinearZCode::from_generators(g).unwrap();
        let t = c.apply_monomial(&z, &perm).unwrap();
        let hist = |code: &LinearZCode| {
            let mut h = vec![0u32; 17];
            code.for_each_word(|w| h[m.word_weight(w, md) as usize] += 1).unwrap();
            h
        };
        prop_assert_eq!(hist(&c), hist(&t));
        prop_assert_eq!(c.min_distance(m).unwrap(), t.min_distance(m).unwrap());
    }

    #[test]
    fn bounded_search_agrees_with_enumeration(h in matrix(8, 2, 4), m in metric(), radius in 0u64..6) {
        let c = LinearZCode::from_check(h);
        let exact = c.min_distance(m).unwrap().unwrap_or(u64::MAX);
        prop_assert_eq!(c.min_distance_bounded(m, BoundedSearch { radius }), exact.min(radius + 1));
    }

    #[test]
    fn phi_is_an_isometry(k in 2u32..=5, seed in any::<[u32; 6]>()) {
        let a = OrderedHadamard::sylvester(k).unwrap();
        let md = a.modulus();
        let q = md.two_m();
        let x = RingWord::new(md, seed[..3].iter().map(|s| s % q).collect()).unwrap();
        let y = RingWord::new(md, seed[3..].iter().map(|s| s % q).collect()).unwrap();
        let d = phi(&x, &a).unwrap().distance(&phi(&y, &a).unwrap()) as u64;
        prop_assert_eq!(d, dist(&x, &y, Metric::Star).unwrap());
    }

    #[test]
    fn phi_cap_set_distance_is_diamond(x in word(Modulus::new(8).unwrap(), 2), y in word(Modulus::new(8).unwrap(), 2)) {
        let p = PerfectPartition::standard(3).unwrap();
        let (a, b) = (phi_cap(&x, &p, DEFAULT_BUDGET).unwrap(), phi_cap(&y, &p, DEFAULT_BUDGET).unwrap());
        prop_assert_eq!(set_distance(&a, &b) as u64, dist(&x, &y, Metric::Diamond).unwrap());
    }

    #[test]
    fn partition_classes_are_disjoint_cosets(k in 2u32..=4) {
        let p = PerfectPartition::standard(k).unwrap();
        let m = p.m();
        let mut seen = vec![false; 1 << m];
        for j in 0..2 * m {
            let class = p.class(j).unwrap();
            prop_assert_eq!(class.cardinality() as u64, p.class_size());
            for w in class.words() {
                let v = w.block(0, m) as usize;
                prop_assert!(!seen[v]);
                seen[v] = true;
                prop_assert_eq!(p.class_of(v as u64), j);
                prop_assert_eq!(w.weight() % 2 == 1, j % 2 == 1);
            }
            // distance 4 inside each class (k = 2 classes are singletons)
            let want = if p.class_size() > 1 { Some(4) } else { None };
            prop_assert_eq!(class.min_distance(), want);
        }
        prop_assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn zcode_format_round_trip(g in matrix(24, 3, 5), gen in any::<bool>()) {
        let role = if gen { Role::Gen } else { Role::Check };
        let text = write_zcode(&g, role);
        let (back, r) = parse_zcode(&text).unwrap();
        prop_assert_eq!(r, role);
        prop_assert_eq!(back.rows(), g.rows());
        prop_assert_eq!(write_zcode(&back, r), text);
    }

    #[test]
    fn bincode_format_round_trip(words in proptest::collection::btree_set(0u64..1 << 12, 1..40)) {
        let code = zgray::BinaryCode::new(12, words.iter().map(|&w| zgray::BitWord::from_u64(w, 12)).collect()).unwrap();
        let back = parse_bincode(&write_bincode(&code)).unwrap();
        prop_assert_eq!(back.words(), code.words());
    }

    #[test]
    fn canonicalize_round_trip(
        idx in 0usize..8,
        z_seed in any::<[u8; 16]>(),
        perm_seed in any::<u64>(),
    ) {
        let profiles = TypeProfile::all(3, 2).unwrap();
        let p = &profiles[idx % profiles.len()];
        let md = p.modulus();
        let n = p.n();
        let z = RingWord::new(md, (0..n).map(|i| 2 * (z_seed[i] as u32 % 4) + 1).collect()).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let scrambled = code_di(p).unwrap().apply_monomial(&z, &perm).unwrap();
        let c = canonicalize(&scrambled).unwrap();
        prop_assert_eq!(&c.profile, p);
        prop_assert!(code_di(&c.profile).unwrap().apply_monomial(&c.z, &c.perm).unwrap().same_code(&scrambled));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn definition_and_criterion_agree_z8(h in matrix(8, 2, 2)) {
        agree(h)?;
    }

    #[test]
    fn definition_and_criterion_agree_z4(h in matrix(4, 3, 3)) {
        agree(h)?;
    }
}

fn agree(h: ZMatrix) -> Result<(), TestCaseError> {
    let code = LinearZCode::from_check(h.clone());
    let def = one_prime_perfect_definition(&code).unwrap();
    let crit = one_prime_perfect_criterion(&h, DEFAULT_BUDGET).unwrap();
    prop_assert_eq!(def.verdict, crit.verdict, "H = {:?}", h.rows());
    Ok(())
}
