use proptest::prelude::*;

use genomic_schur::bijection::{phi, phi_inverse, psi_image_index};
use genomic_schur::combinatorics::{comp_of, par_candidates, set_of, Composition};
use genomic_schur::genome::{equivalence_classes, linear_extension, order_leq};
use genomic_schur::hecke::{characteristic_by_descents, check_relations, g_module, x_module};
use genomic_schur::qsym::{expand_monomials, genomic_component};
use genomic_schur::tableau::{descent_data, enumerate_iglt, enumerate_syt};
use genomic_schur::{Family, TwoRowPartition};

fn shapes_up_to(n_max: usize) -> Vec<TwoRowPartition> {
    (2..=n_max).flat_map(TwoRowPartition::all_of_size).collect()
}

fn cases_up_to(n_max: usize) -> Vec<(TwoRowPartition, usize)> {
    shapes_up_to(n_max)
        .into_iter()
        .flat_map(|l| (l.l_lambda()..=l.size()).map(move |m| (l, m)))
        .collect()
}

fn case_strategy(n_max: usize) -> impl Strategy<Value = (TwoRowPartition, usize)> {
    let cases = cases_up_to(n_max);
    (0..cases.len()).prop_map(move |k| cases[k])
}

proptest! {
    #[test]
    fn set_comp_round_trip(parts in proptest::collection::vec(1usize..5, 0..8)) {
        let alpha = Composition::new(parts).unwrap();
        prop_assert_eq!(comp_of(&set_of(&alpha), alpha.size()).unwrap(), alpha);
    }

    #[test]
    fn pi_action_is_idempotent_elementwise((lambda, m) in case_strategy(9), pick in any::<prop::sample::Index>()) {
        let g = g_module(lambda, m).unwrap();
        let b = pick.index(g.dim());
        for i in g.generators() {
            let once = g.apply(i, Some(b));
            prop_assert_eq!(g.apply(i, once), once);
            if let Some(t) = once.filter(|&t| t != b) {
                // a swap moves a non-attacking descent to a non-descent
                prop_assert!(descent_data(&g.basis()[b]).is_non_attacking_descent(i));
                prop_assert!(!descent_data(&g.basis()[t]).descents.contains(&i));
                prop_assert_eq!(g.basis()[t].swap_values(i), g.basis()[b].clone());
            }
        }
    }

    #[test]
    fn phi_round_trip_sampled((lambda, m) in case_strategy(12), pick in any::<prop::sample::Index>()) {
        let all = enumerate_iglt(lambda, m);
        let t = &all[pick.index(all.len())];
        let tr = phi(t).unwrap();
        prop_assert_eq!(&phi_inverse(&tr.output, lambda, m).unwrap(), t);
        prop_assert_eq!(descent_data(t).descents, descent_data(&tr.output).descents);
        let k = lambda.size() - m;
        prop_assert_eq!(tr.removed.len(), k);
        prop_assert!(tr.moved.len() <= k && k <= tr.moved.len() + 1);
    }
}

#[test]
fn bijection_both_ways_up_to_10() {
    for (lambda, m) in cases_up_to(10) {
        let domain = enumerate_iglt(lambda, m);
        let mut images = Vec::new();
        for t in &domain {
            let s = phi(t).unwrap().output;
            assert!(s.is_standard());
            assert_eq!(descent_data(t).descents, descent_data(&s).descents, "{t}");
            assert_eq!(&phi_inverse(&s, lambda, m).unwrap(), t);
            images.push(s);
        }
        let mut codomain = 0;
        for (_, mu) in par_candidates(lambda, m).unwrap() {
            for s in enumerate_syt(&mu) {
                codomain += 1;
                let t = phi_inverse(&s, lambda, m).unwrap();
                assert!(t.is_increasing_gapless() && t.max_entry() as usize == m);
                assert_eq!(phi(&t).unwrap().output, s);
            }
        }
        assert_eq!(domain.len(), codomain, "{lambda} m={m}");
        images.sort();
        images.dedup();
        assert_eq!(images.len(), domain.len());
    }
}

#[test]
fn psi_is_injective() {
    for (lambda, m) in cases_up_to(8) {
        let mut seen: Vec<_> = enumerate_iglt(lambda, m).iter().map(|t| psi_image_index(t).unwrap()).collect();
        let n = seen.len();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), n);
    }
}

#[test]
fn hecke_relations_and_characteristics_up_to_8() {
    for (lambda, m) in cases_up_to(8) {
        let g = g_module(lambda, m).unwrap();
        assert!(check_relations(&g).is_ok(), "{lambda} m={m}");
        assert_eq!(characteristic_by_descents(&g), genomic_component(lambda, m));
        for (_, mu) in par_candidates(lambda, m).unwrap() {
            assert!(check_relations(&x_module(&mu)).is_ok(), "{mu}");
        }
    }
}

#[test]
fn genomic_components_are_symmetric_up_to_8() {
    for (lambda, m) in cases_up_to(8) {
        let poly = expand_monomials(&genomic_component(lambda, m), m + 1);
        assert!(!poly.is_zero());
        assert!(poly.is_symmetric(), "{lambda} m={m}");
    }
}

#[test]
fn class_structure_up_to_8() {
    for (lambda, m) in cases_up_to(8) {
        let classes = equivalence_classes(lambda, m).unwrap();
        let total: usize = classes.iter().map(|c| c.len()).sum();
        assert_eq!(total, enumerate_iglt(lambda, m).len());
        for c in &classes {
            let shapes: Vec<_> = c.members.iter().map(|t| phi(t).unwrap().output.shape()).collect();
            assert!(shapes.windows(2).all(|w| w[0] == w[1]), "{lambda} m={m}");
        }
        for x in Family::ALL {
            let size: usize = classes.iter().filter(|c| c.family == x).map(|c| c.len()).sum();
            let want = par_candidates(lambda, m)
                .unwrap()
                .into_iter()
                .find(|(f, _)| *f == x)
                .map_or(0, |(_, mu)| enumerate_syt(&mu).len());
            assert_eq!(size, want, "{lambda} m={m} family {x}");

            let fam: Vec<_> = classes.iter().filter(|c| c.family == x).collect();
            let order = linear_extension(&fam);
            for (p, &a) in order.iter().enumerate() {
                for &b in &order[..p] {
                    // nothing placed earlier sits strictly above
                    let later_below = order_leq(fam[a], fam[b]).unwrap() && !order_leq(fam[b], fam[a]).unwrap();
                    assert!(!later_below, "{lambda} m={m}");
                }
            }
        }
        if m == lambda.size() {
            assert_eq!(classes.len(), 1);
        }
    }
}
