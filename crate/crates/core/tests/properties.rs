//! Property-based suites for the arithmetic layer, graph invariants,
//! and the relation between constructed labelings and independence
//! bounds.

use proptest::prelude::*;

use coprime_core::graphs::{build, independence_exact, independence_formula, GraphFamily};
use coprime_core::labeling::{verify, Labeling};
use coprime_core::numtheory::{find_s, gcd, is_prime};
use coprime_core::{label_gp2, label_gpstar, label_prism, label_y3, label_y5};

proptest! {
    #[test]
    fn gcd_divides_both_and_dominates_common_divisors(
        a in 1u64..1_000_000_000,
        b in 1u64..1_000_000_000,
        d in 1u64..10_000,
    ) {
        let g = gcd(a, b);
        prop_assert_eq!(a % g, 0);
        prop_assert_eq!(b % g, 0);
        // Any common divisor divides the gcd: scale a pair by d.
        let g_scaled = gcd(a * d, b * d);
        prop_assert_eq!(g_scaled % d, 0);
        prop_assert_eq!(g_scaled, g * d);
    }

    #[test]
    fn gcd_shift_laws(a in 1u64..1_000_000_000, b in 1u64..1_000_000_000) {
        prop_assert_eq!(gcd(a, b), gcd(b, a));
        prop_assert_eq!(gcd(a, b), gcd(a + b, b));
        if a > b {
            prop_assert_eq!(gcd(a, b), gcd(a - b, b));
        }
    }

    #[test]
    fn sum_prime_implies_coprime(a in 1u64..5_000_000, b in 1u64..5_000_000) {
        if is_prime(a + b) {
            prop_assert_eq!(gcd(a, b), 1);
        }
    }

    #[test]
    fn prime_difference_law(a in 1u64..1_000_000, b in 1u64..1_000_000) {
        // If a - b is prime and neither side is a multiple of it, the
        // pair is coprime.
        if a > b {
            let p = a - b;
            if is_prime(p) && a % p != 0 && b % p != 0 {
                prop_assert_eq!(gcd(a, b), 1);
            }
        }
    }

    #[test]
    fn find_s_result_is_smallest_witness(n in prop::sample::select(
        (3u64..400).filter(|n| n % 2 == 1).collect::<Vec<_>>()
    )) {
        match find_s(n) {
            Some(s) => {
                prop_assert!((3..n).contains(&s));
                prop_assert!(is_prime(n + s + 1) && is_prime(2 * n + s + 2));
                for smaller in 3..s {
                    prop_assert!(!(is_prime(n + smaller + 1) && is_prime(2 * n + smaller + 2)));
                }
            }
            None => {
                for s in 3..n {
                    prop_assert!(!(is_prime(n + s + 1) && is_prime(2 * n + s + 2)));
                }
            }
        }
    }

    #[test]
    fn petersen_families_are_cubic(n in 3u64..120) {
        let g = build(GraphFamily::Prism(n)).unwrap();
        prop_assert_eq!(g.vertex_count() as u64, 2 * n);
        prop_assert_eq!(g.edge_count() as u64, 3 * n);
        prop_assert!(g.degrees().iter().all(|&d| d == 3));
        if n >= 5 {
            let g = build(GraphFamily::Gp2(n)).unwrap();
            prop_assert_eq!(g.edge_count() as u64, 3 * n);
            prop_assert!(g.degrees().iter().all(|&d| d == 3));
        }
    }

    #[test]
    fn gpstar_degrees_split(k in 2u64..80) {
        let g = build(GraphFamily::GpStar(k)).unwrap();
        prop_assert_eq!(g.vertex_count() as u64, 4 * k);
        prop_assert_eq!(g.edge_count() as u64, 5 * k);
        let deg = g.degrees();
        for (vid, d) in g.vertices.iter().zip(&deg) {
            match vid {
                coprime_core::VertexId::Inner(_) => prop_assert_eq!(*d, 2),
                _ => prop_assert_eq!(*d, 3),
            }
        }
    }

    #[test]
    fn stacked_prism_counts(m in 3u64..12, n in 1u64..12) {
        let g = build(GraphFamily::StackedPrism(m, n)).unwrap();
        prop_assert_eq!(g.vertex_count() as u64, m * n);
        prop_assert_eq!(g.edge_count() as u64, m * n + m * (n - 1));
    }

    #[test]
    fn constructions_verify_everywhere(p in 1u64..300) {
        // One sweep driving all five constructors at an arbitrary
        // parameter; every output must verify.
        let cases: Vec<(GraphFamily, Labeling)> = [
            (p % 2 == 1 && p >= 3).then(|| (GraphFamily::Prism(p), label_prism(p).unwrap().0)),
            (p >= 5).then(|| (GraphFamily::Gp2(p), label_gp2(p).unwrap().0)),
            Some((GraphFamily::StackedPrism(3, p), label_y3(p).unwrap().0)),
            Some((GraphFamily::StackedPrism(5, p), label_y5(p).unwrap().0)),
            (p >= 2).then(|| (GraphFamily::GpStar(p), label_gpstar(p).unwrap().0)),
        ]
        .into_iter()
        .flatten()
        .collect();
        for (family, labeling) in cases {
            let g = build(family).unwrap();
            let report = verify(&g, &labeling).unwrap();
            prop_assert!(report.is_coprime(), "{family}");
        }
    }
}

/// Count of even labels used by a labeling.
fn even_labels(l: &Labeling) -> u64 {
    l.iter().filter(|(_, label)| label.get() % 2 == 0).count() as u64
}

#[test]
fn even_label_count_never_exceeds_alpha() {
    // Formula-backed families over substantial ranges.
    for n in (3..402u64).step_by(2) {
        let (l, _) = label_prism(n).unwrap();
        let alpha = independence_formula(GraphFamily::Prism(n)).unwrap().alpha;
        assert!(even_labels(&l) <= alpha, "prism n={n}");
    }
    for n in 5..300u64 {
        let (l, _) = label_gp2(n).unwrap();
        let alpha = independence_formula(GraphFamily::Gp2(n)).unwrap().alpha;
        assert!(even_labels(&l) <= alpha, "gp2 n={n}");
    }
    for n in 1..200u64 {
        let (l, _) = label_y3(n).unwrap();
        let alpha = independence_formula(GraphFamily::StackedPrism(3, n))
            .unwrap()
            .alpha;
        assert!(even_labels(&l) <= alpha, "y3 n={n}");
        let (l, _) = label_y5(n).unwrap();
        let alpha = independence_formula(GraphFamily::StackedPrism(5, n))
            .unwrap()
            .alpha;
        assert!(even_labels(&l) <= alpha, "y5 n={n}");
    }
    // No closed form for this family; compare with the exact solver at
    // small sizes.
    for k in 2..7u64 {
        let g = build(GraphFamily::GpStar(k)).unwrap();
        let alpha = independence_exact(&g, 100_000_000).unwrap().alpha;
        let (l, _) = label_gpstar(k).unwrap();
        assert!(even_labels(&l) <= alpha, "gpstar k={k}");
    }
}

#[test]
fn exact_alpha_matches_formula_on_small_instances() {
    let mut cases: Vec<GraphFamily> = Vec::new();
    for n in (3..=12u64).step_by(2) {
        cases.push(GraphFamily::Prism(n));
    }
    for n in 5..=12u64 {
        cases.push(GraphFamily::Gp2(n));
    }
    for m in [3u64, 5, 7, 9, 11] {
        for n in 1..=(24 / m) {
            cases.push(GraphFamily::StackedPrism(m, n));
        }
    }
    for family in cases {
        let formula = independence_formula(family).unwrap();
        let g = build(family).unwrap();
        let exact = independence_exact(&g, 100_000_000).unwrap();
        assert_eq!(formula.alpha, exact.alpha, "{family}");
        assert_eq!(
            formula.odd_label_lower_bound, exact.odd_label_lower_bound,
            "{family}"
        );
    }
}

#[test]
fn prism_dispatch_is_deterministic() {
    for n in (3..501u64).step_by(2) {
        let (l1, c1) = label_prism(n).unwrap();
        let (l2, c2) = label_prism(n).unwrap();
        assert_eq!(c1, c2);
        assert_eq!(l1, l2);
    }
}
