mod common;

use proptest::prelude::*;
use tribasis::basis::{classify, path_coverage};
use tribasis::logic::theory_equal;
use tribasis::{canonical_basis, Rational};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn generated_bases_classify_on_every_route(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let b = common::random_basis_any(&mut rng);
        let p = b.family();
        let c = classify(&p).unwrap();
        prop_assert!(c.definition.holds() && c.properties.holds() && c.geometric.holds());
        prop_assert!(c.verify(&p));
        let s = c.structure.as_ref().unwrap();
        prop_assert_eq!(&s.nodes, &b.nodes);
        prop_assert_eq!(&s.permutation, &b.path_order());
        prop_assert_eq!(c.coverage.permutation.as_ref(), Some(&b.path_order()));
        let affine = b.falls.iter().all(|f| collinear(f));
        prop_assert_eq!(c.triangular, affine);

        let cov = path_coverage(&p);
        prop_assert_eq!(cov.full_edges().count(), p.len() - 1);
        prop_assert!(cov.leftovers.is_empty());
        let order = b.path_order();
        for w in order.windows(2) {
            prop_assert!(cov.edge(w[0], w[1]).is_some_and(|e| e.is_full()));
        }
    }

    #[test]
    fn mutants_fail_every_route(seed in any::<u64>(), which in 0usize..4) {
        let mut rng = common::rng(seed);
        let b = common::random_basis_any(&mut rng);
        let p = common::mutate(&mut rng, &b, common::MUTATIONS[which]);
        let c = classify(&p).unwrap();
        prop_assert!(c.definition.fails() && c.properties.fails() && c.geometric.fails(),
            "{:?}: {:?}", common::MUTATIONS[which], c);
        prop_assert!(c.verify(&p));
    }

    #[test]
    fn random_families_never_split_the_routes(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let p = common::random_family(&mut rng);
        let c = classify(&p).unwrap();
        prop_assert!(c.routes_agree());
        prop_assert!(c.verify(&p));
    }

    #[test]
    fn proper_sub_paths_miss_an_end_vertex(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let b = common::random_basis_any(&mut rng);
        let p = b.family();
        let cut = common::distinct_between(&mut rng, &Rational::zero(), &Rational::one(), 2);
        let (a, e) = match rng_choice(seed) {
            0 => (Rational::zero(), cut[1].clone()),
            1 => (cut[0].clone(), Rational::one()),
            _ => (cut[0].clone(), cut[1].clone()),
        };
        let q = common::restrict_family(&p, &a, &e);
        let cov = path_coverage(&q);
        prop_assert!(cov.leftovers.is_empty());
        let order = b.path_order();
        let full = order.windows(2).all(|w| cov.edge(w[0], w[1]).is_some_and(|x| x.is_full()));
        prop_assert!(!full);
        let first = order[0];
        let last = *order.last().unwrap();
        prop_assert!(!cov.vertices.contains(&first) || !cov.vertices.contains(&last));

        let relabelled = q.relabel(&order).unwrap();
        let cert = theory_equal(&relabelled).unwrap();
        prop_assert!(!cert.is_equal());
        prop_assert!(cert.verify(&relabelled).unwrap());
    }
}

fn collinear(pts: &[(Rational, Rational)]) -> bool {
    let (x0, y0) = &pts[0];
    let (x1, y1) = &pts[pts.len() - 1];
    pts.iter().all(|(x, y)| (y - y0) * (x1 - x0) == (y1 - y0) * (x - x0))
}

fn rng_choice(seed: u64) -> u64 {
    seed % 3
}

#[test]
fn canonical_bases_are_triangular() {
    for n in 2..=16 {
        let p = canonical_basis(n).unwrap();
        let c = classify(&p).unwrap();
        assert!(c.triangular, "n = {n}");
        assert_eq!(c.coverage.permutation, Some((1..=n).collect()));
        assert_eq!(path_coverage(&p).full_edges().count(), n - 1);
    }
}
