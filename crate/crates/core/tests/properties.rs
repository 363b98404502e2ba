//! Property suites over randomized and exhaustive small inputs: order
//! axioms, minimalization, membership against brute force, the class
//! hierarchy, agreement of the two lexicographic checkers, closure
//! monotonicity, and encoding round-trips.

use std::cmp::Ordering;
use std::collections::HashSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sqbetti_core::*;

fn arb_monomial(n: u32) -> impl Strategy<Value = SquarefreeMonomial> {
    (1u64..(1u64 << n)).prop_map(SquarefreeMonomial::from_mask)
}

fn arb_gens(n: u32, max: usize) -> impl Strategy<Value = Vec<SquarefreeMonomial>> {
    prop::collection::vec(arb_monomial(n), 1..=max)
}

fn arb_equal_degree_pair(
    n: u32,
) -> impl Strategy<Value = (SquarefreeMonomial, SquarefreeMonomial)> {
    let vars: Vec<u32> = (1..=n).collect();
    (1..=n as usize).prop_flat_map(move |d| {
        let a = prop::sample::subsequence(vars.clone(), d);
        let b = prop::sample::subsequence(vars.clone(), d);
        (a, b).prop_map(|(x, y)| {
            (
                SquarefreeMonomial::from_vars(&x).unwrap(),
                SquarefreeMonomial::from_vars(&y).unwrap(),
            )
        })
    })
}

/// Degree slices of an ideal computed the other way around: as the union of
/// the supersets of each generator, rather than via divisibility queries.
fn member_masks_bruteforce(ideal: &MonomialIdeal) -> HashSet<u64> {
    let n = ideal.n();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut members = HashSet::new();
    for g in ideal.gens() {
        let free = full & !g.mask();
        // enumerate all submasks of the complement
        let mut sub = free;
        loop {
            members.insert(g.mask() | sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
    members
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalize_idempotent_and_order_independent(
        gens in arb_gens(6, 8),
        seed in any::<u64>(),
    ) {
        let once = minimalize(gens.clone());
        prop_assert_eq!(&minimalize(once.clone()), &once);
        let mut shuffled = gens;
        shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(&minimalize(shuffled), &once);
    }

    #[test]
    fn slex_is_a_total_order((a, b) in arb_equal_degree_pair(7), (c, _) in arb_equal_degree_pair(7)) {
        prop_assert_eq!(slex_cmp(a, b) == Ordering::Equal, a == b);
        prop_assert_eq!(slex_cmp(a, b), slex_cmp(b, a).reverse());
        if c.degree() == a.degree()
            && slex_cmp(a, b) != Ordering::Less
            && slex_cmp(b, c) != Ordering::Less
        {
            prop_assert_ne!(slex_cmp(a, c), Ordering::Less);
        }
    }

    #[test]
    fn slexf_is_a_total_order((a, b) in arb_equal_degree_pair(6), ca in 0usize..3, cb in 0usize..3) {
        let x = ModuleMonomial::new(a, ca);
        let y = ModuleMonomial::new(b, cb);
        prop_assert_eq!(slexf_cmp(&x, &y) == Ordering::Equal, x == y);
        prop_assert_eq!(slexf_cmp(&x, &y), slexf_cmp(&y, &x).reverse());
    }

    #[test]
    fn membership_matches_bruteforce(gens in arb_gens(6, 5)) {
        let ideal = MonomialIdeal::new(6, gens).unwrap();
        let members = member_masks_bruteforce(&ideal);
        for mask in 0u64..(1 << 6) {
            prop_assert_eq!(ideal.contains_support(mask), members.contains(&mask));
        }
    }

    #[test]
    fn enumeration_count_and_order(n in 1u32..=8, d in 0usize..=9) {
        let slice = enumerate_squarefree(n, d);
        let mut expect = 1u64;
        if d <= n as usize {
            // C(n, d)
            for t in 0..d as u64 {
                expect = expect * (n as u64 - t) / (t + 1);
            }
        } else {
            expect = 0;
        }
        prop_assert_eq!(slice.len() as u64, expect);
        for w in slice.windows(2) {
            prop_assert_eq!(slex_cmp(w[0], w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn gens_in_degree_partitions_generators(seed in any::<u64>(), n in 3u32..=6, r in 1usize..=3) {
        let module = random_stable_submodule(&RandomModuleParams::new(n, r), seed).unwrap();
        let all: HashSet<ModuleMonomial> = module.generators().into_iter().collect();
        let mut seen: HashSet<ModuleMonomial> = HashSet::new();
        for d in module.generator_degrees() {
            for mm in module.gens_in_degree(d) {
                prop_assert!(seen.insert(mm), "duplicate generator across degrees");
            }
        }
        prop_assert_eq!(seen, all);
    }

    #[test]
    fn hierarchy_and_lex_agreement_on_random_modules(
        gens1 in arb_gens(4, 4),
        gens2 in arb_gens(4, 4),
        shift in 0i64..=1,
    ) {
        let i1 = MonomialIdeal::new(4, gens1).unwrap();
        let i2 = MonomialIdeal::new(4, gens2).unwrap();
        let module = GradedSubmodule::new(4, vec![0, shift], vec![i1, i2]).unwrap();
        let limit = EnumLimit::default();
        let report = classify_module(&module, limit).unwrap();
        if report.is_lex() {
            prop_assert!(report.is_strongly_stable());
        }
        if report.is_strongly_stable() {
            prop_assert!(report.is_stable());
        }
        let direct = check_lex_submodule_direct(&module, limit).unwrap();
        prop_assert_eq!(report.is_lex(), direct.holds());
    }

    #[test]
    fn closure_idempotent_and_monotone(
        seeds in arb_gens(6, 4),
        extra in arb_monomial(6),
        strong in any::<bool>(),
    ) {
        let closed = stable_closure(6, &seeds, strong).unwrap();
        prop_assert_eq!(&stable_closure(6, closed.gens(), strong).unwrap(), &closed);
        let mut more = seeds.clone();
        more.push(extra);
        let bigger = stable_closure(6, &more, strong).unwrap();
        for g in closed.gens() {
            prop_assert!(bigger.contains(g));
        }
        // the closure passes its own classifier
        if strong {
            prop_assert!(check_strongly_stable_ideal(&closed).holds());
        } else {
            prop_assert!(check_stable_ideal(&closed).holds());
        }
    }

    #[test]
    fn lexsegment_prefix_and_initial_monomial(n in 3u32..=7, pick in any::<u64>()) {
        // x1..x_rho belongs to every lexsegment ideal
        let d = 1 + (pick % (n as u64 - 1)) as usize;
        let slice = enumerate_squarefree(n, d);
        let u = slice[(pick % slice.len() as u64) as usize];
        let ideal = lexsegment_of(u, n).unwrap();
        let rho = ideal.initial_degree().unwrap();
        let initial = SquarefreeMonomial::from_vars(&(1..=rho as u32).collect::<Vec<_>>()).unwrap();
        prop_assert!(ideal.contains(&initial));
        // generators form a slex prefix of the slice
        let cut = slice.iter().position(|w| *w == u).unwrap();
        prop_assert_eq!(ideal.gens(), &slice[..=cut]);
        prop_assert!(check_lexsegment_ideal(&ideal, EnumLimit::default()).unwrap().holds());
    }

    #[test]
    fn betti_row_zero_counts_generators(seed in any::<u64>(), n in 3u32..=6, r in 1usize..=3) {
        let module = random_stable_submodule(&RandomModuleParams::new(n, r), seed).unwrap();
        let table = betti_table(&module).unwrap();
        for d in module.generator_degrees() {
            prop_assert_eq!(table.get(0, d), module.gens_in_degree(d).len() as u128);
        }
    }

    #[test]
    fn corner_values_match_formula(seed in any::<u64>(), n in 3u32..=6, r in 1usize..=2) {
        let module = random_stable_submodule(&RandomModuleParams::new(n, r), seed).unwrap();
        let report = corners(&module).unwrap();
        for (&(k, l), &v) in report.corners.iter().zip(&report.corner_values) {
            prop_assert_eq!(v, betti_module(&module, k, l).unwrap());
            prop_assert_eq!(v, extremal_value(&module, k, l).unwrap());
        }
    }

    #[test]
    fn module_json_roundtrip(seed in any::<u64>(), n in 2u32..=6, r in 1usize..=3) {
        let module = random_stable_submodule(&RandomModuleParams::new(n, r), seed).unwrap();
        let (parsed, warnings) = GradedSubmodule::from_json(&module.to_json()).unwrap();
        prop_assert!(warnings.is_empty());
        prop_assert_eq!(parsed, module);
    }

    #[test]
    fn table_render_roundtrip(seed in any::<u64>(), n in 3u32..=6, r in 1usize..=3) {
        let module = random_stable_submodule(&RandomModuleParams::new(n, r), seed).unwrap();
        let table = betti_table(&module).unwrap();
        let parsed = BettiTable::parse_rendered(&table.render()).unwrap();
        prop_assert_eq!(parsed, table);
    }
}

/// Exhaustive hierarchy and checker-agreement sweep over tiny modules:
/// every ideal on up to two generators over three variables, paired into
/// rank-2 modules with shifts (0,0) and (0,1).
#[test]
fn exhaustive_small_hierarchy() {
    let n = 3u32;
    let monomials: Vec<SquarefreeMonomial> = (1u64..(1 << n))
        .map(SquarefreeMonomial::from_mask)
        .collect();
    let mut ideals: Vec<MonomialIdeal> = Vec::new();
    for a in &monomials {
        ideals.push(MonomialIdeal::new(n, [*a]).unwrap());
        for b in &monomials {
            ideals.push(MonomialIdeal::new(n, [*a, *b]).unwrap());
        }
    }
    ideals.sort_by(|x, y| format!("{x:?}").cmp(&format!("{y:?}")));
    ideals.dedup();

    let limit = EnumLimit::default();
    let mut checked = 0usize;
    for i1 in &ideals {
        for i2 in &ideals {
            for shift in [0i64, 1] {
                let module =
                    GradedSubmodule::new(n, vec![0, shift], vec![i1.clone(), i2.clone()]).unwrap();
                let report = classify_module(&module, limit).unwrap();
                if report.is_lex() {
                    assert!(report.is_strongly_stable(), "{module:?}");
                }
                if report.is_strongly_stable() {
                    assert!(report.is_stable(), "{module:?}");
                }
                let direct = check_lex_submodule_direct(&module, limit).unwrap();
                assert_eq!(report.is_lex(), direct.holds(), "{module:?}");
                checked += 1;
            }
        }
    }
    assert!(checked >= 500, "swept {checked} modules");
}

/// The stable-submodule containment chain over S^r from the equal-shift
/// case: I_r ⊆ ... ⊆ I_1 for random stable draws with zero shifts.
#[test]
fn equal_shift_chain_condition() {
    for seed in 0..20u64 {
        let mut params = RandomModuleParams::new(5, 3);
        params.max_shift_step = 0;
        let module = random_stable_submodule(&params, seed).unwrap();
        for c in 0..module.rank() - 1 {
            assert!(module.ideal(c).contains_ideal(module.ideal(c + 1)));
        }
    }
}
