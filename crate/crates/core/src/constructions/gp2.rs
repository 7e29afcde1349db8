//! Labeling construction for `GP(n, 2)`, `n >= 5`.
//!
//! The graph is labeled in blocks of five outer and five inner
//! vertices. Block 0 is a fixed seed; each later block `k` gets a base
//! assignment and then one of eight corrective cases chosen by the
//! divisibility of `12k - 1`, `12k - 3`, and `12k + 5` by 5 and of
//! `12k - 3` by 7, 11, 13. Three of the cases reach back and rewrite
//! two labels of block `k - 1`. A residue tail finishes the last
//! `n mod 5` vertices.

use crate::labeling::{Certificate, TheoremId};

/// The maximum label: `12m - 1`, `12m + 3`, `12m + 5`, `12m + 7`, or
/// `12m + 9` for `n = 5m + r`, `r = 0..4`.
pub fn max_label_formula(n: u64) -> u64 {
    let m = n / 5;
    match n % 5 {
        0 => 12 * m - 1,
        1 => 12 * m + 3,
        2 => 12 * m + 5,
        3 => 12 * m + 7,
        _ => 12 * m + 9,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum BlockCase {
    Seed,
    C1,
    C2,
    C3a,
    C3b,
    C4a,
    C4b,
    C4c,
    C4d,
}

/// Case for block `k >= 1`, total and exclusive: the three quantities
/// `12k - 1`, `12k - 3`, `12k + 5` occupy distinct residues mod 5, so
/// at most one is divisible by 5.
pub(crate) fn block_case(k: u64) -> BlockCase {
    let a = 12 * k - 1;
    let b = 12 * k - 3;
    let c = 12 * k + 5;
    if c % 5 == 0 {
        BlockCase::C2
    } else if a % 5 == 0 {
        if b % 7 == 0 {
            BlockCase::C3b
        } else {
            BlockCase::C3a
        }
    } else if b % 5 == 0 {
        if b % 7 != 0 {
            BlockCase::C4a
        } else if b % 11 != 0 {
            BlockCase::C4b
        } else if b % 13 != 0 {
            BlockCase::C4c
        } else {
            BlockCase::C4d
        }
    } else {
        BlockCase::C1
    }
}

/// Outer and inner label arrays (1-based positions stored 0-based) for
/// `GP(n, 2)`, plus the certificate. `n >= 5`.
pub(crate) fn gp2_labels(n: u64) -> (Vec<u64>, Vec<u64>, Certificate) {
    assert!(n >= 5);
    let m = n / 5;
    let r = n % 5;
    let mut v = vec![0u64; n as usize];
    let mut u = vec![0u64; n as usize];

    // 1-based position helpers.
    macro_rules! set {
        ($row:ident, $pos:expr, $label:expr) => {
            $row[($pos - 1) as usize] = $label;
        };
    }

    // Block 0 seed.
    for (i, (lv, lu)) in [(2, 1), (3, 4), (5, 6), (8, 7), (9, 11)].iter().enumerate() {
        set!(v, i as u64 + 1, *lv);
        set!(u, i as u64 + 1, *lu);
    }

    let mut prev_case = BlockCase::Seed;
    for k in 1..m {
        let base = 5 * k;
        // Base assignment for the block.
        set!(v, base + 1, 12 * k + 2);
        set!(v, base + 2, 12 * k + 3);
        set!(v, base + 3, 12 * k + 5);
        set!(v, base + 4, 12 * k + 8);
        set!(v, base + 5, 12 * k + 9);
        set!(u, base + 1, 12 * k + 1);
        set!(u, base + 2, 12 * k + 4);
        set!(u, base + 3, 12 * k + 10);
        set!(u, base + 4, 12 * k + 7);
        set!(u, base + 5, 12 * k + 11);

        let case = block_case(k);
        match case {
            BlockCase::Seed | BlockCase::C1 => {}
            BlockCase::C2 => {
                set!(u, base + 3, 12 * k + 6);
            }
            BlockCase::C3a => {
                set!(u, base + 2, 12 * k + 2);
                set!(v, base + 1, 12 * k + 4);
            }
            BlockCase::C3b => {
                set!(u, base + 2, 12 * k + 6);
                set!(v, base + 2, 12 * k + 5);
                set!(v, base + 3, 12 * k + 3);
            }
            BlockCase::C4a => {
                set!(v, base + 1, 12 * k + 4);
                set!(v, base + 4, 12 * k + 10);
                set!(u, base + 2, 12 * k + 8);
                set!(u, base + 3, 12 * k + 2);
            }
            BlockCase::C4b | BlockCase::C4c | BlockCase::C4d => {
                // These reach into block k-1, which the divisibility
                // assumptions force to be a 3a block left untouched at
                // the rewritten positions.
                assert_eq!(
                    prev_case,
                    BlockCase::C3a,
                    "block {} must be case 3a before case {:?} at block {k}",
                    k - 1,
                    case
                );
                match case {
                    BlockCase::C4b => {
                        set!(v, base, 12 * k - 1);
                        set!(u, base, 12 * k - 3);
                        set!(u, base + 2, 12 * k + 8);
                        set!(v, base + 4, 12 * k + 4);
                    }
                    BlockCase::C4c => {
                        set!(v, base, 12 * k - 1);
                        set!(u, base, 12 * k - 3);
                        set!(u, base + 2, 12 * k + 10);
                        set!(u, base + 3, 12 * k + 8);
                        set!(v, base + 4, 12 * k + 4);
                    }
                    _ => {
                        set!(u, base - 2, 12 * k + 2);
                        set!(v, base + 1, 12 * k - 2);
                    }
                }
            }
        }
        prev_case = case;
    }

    // Residue tail on positions 5m+1 ..= n.
    let base = 5 * m;
    let case_tag = match r {
        0 => "n=5m".to_string(),
        1 => {
            set!(u, base + 1, 12 * m + 3);
            set!(v, base + 1, 12 * m + 1);
            "n=5m+1".to_string()
        }
        2 => {
            set!(u, base + 1, 12 * m + 4);
            set!(u, base + 2, 12 * m + 5);
            set!(v, base + 1, 12 * m + 1);
            set!(v, base + 2, 12 * m + 3);
            "n=5m+2".to_string()
        }
        3 => {
            set!(u, base + 1, 12 * m + 4);
            set!(u, base + 2, 12 * m + 3);
            set!(u, base + 3, 12 * m + 7);
            set!(v, base + 1, 12 * m + 1);
            set!(v, base + 2, 12 * m + 2);
            set!(v, base + 3, 12 * m + 5);
            "n=5m+3".to_string()
        }
        _ => {
            let q = 12 * m + 2;
            if q % 5 != 0 {
                set!(u, base + 1, 12 * m + 4);
                set!(u, base + 2, 12 * m + 8);
                set!(u, base + 3, 12 * m + 3);
                set!(u, base + 4, 12 * m + 9);
                set!(v, base + 1, 12 * m + 1);
                set!(v, base + 2, 12 * m + 5);
                set!(v, base + 3, 12 * m + 2);
                set!(v, base + 4, 12 * m + 7);
                "n=5m+4, 12m+2 not divisible by 5".to_string()
            } else if q % 7 != 0 {
                set!(u, base + 1, 12 * m + 2);
                set!(u, base + 2, 12 * m + 8);
                set!(u, base + 3, 12 * m + 3);
                set!(u, base + 4, 12 * m + 9);
                set!(v, base + 1, 12 * m + 1);
                set!(v, base + 2, 12 * m + 5);
                set!(v, base + 3, 12 * m + 4);
                set!(v, base + 4, 12 * m + 7);
                "n=5m+4, 12m+2 divisible by 5 only".to_string()
            } else {
                set!(u, base + 1, 12 * m);
                set!(u, base + 2, 12 * m + 2);
                set!(u, base + 3, 12 * m + 7);
                set!(u, base + 4, 12 * m + 1);
                set!(v, base + 1, 12 * m + 5);
                set!(v, base + 2, 12 * m + 3);
                set!(v, base + 3, 12 * m + 4);
                set!(v, base + 4, 12 * m + 9);
                "n=5m+4, 12m+2 divisible by 5 and 7".to_string()
            }
        }
    };

    let theorem = if r == 0 { TheoremId::L4_1 } else { TheoremId::T4_2 };
    (v, u, Certificate::new(theorem, case_tag))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_block_matches_fixed_labels() {
        let (v, u, cert) = gp2_labels(5);
        assert_eq!(v, vec![2, 3, 5, 8, 9]);
        assert_eq!(u, vec![1, 4, 6, 7, 11]);
        assert_eq!(cert.theorem, TheoremId::L4_1);
    }

    #[test]
    fn case_predicate_total_and_exclusive() {
        // Every k takes exactly one case; spot-check the residues that
        // drive the split.
        for k in 1..100_000u64 {
            let case = block_case(k);
            let a5 = (12 * k - 1) % 5 == 0;
            let b5 = (12 * k - 3) % 5 == 0;
            let c5 = (12 * k + 5) % 5 == 0;
            assert!(!(a5 && b5) && !(a5 && c5) && !(b5 && c5));
            match case {
                BlockCase::C1 => assert!(!a5 && !b5 && !c5),
                BlockCase::C2 => assert!(c5),
                BlockCase::C3a | BlockCase::C3b => assert!(a5),
                _ => assert!(b5),
            }
        }
    }

    #[test]
    fn first_blocks_use_expected_cases() {
        // k mod 5: 3 -> case 3, 4 -> case 4, 0 -> case 2, else case 1.
        assert_eq!(block_case(1), BlockCase::C1);
        assert_eq!(block_case(2), BlockCase::C1);
        assert_eq!(block_case(3), BlockCase::C3a);
        assert_eq!(block_case(4), BlockCase::C4a);
        assert_eq!(block_case(5), BlockCase::C2);
        // 12k-3 divisible by 35 first at k = 9.
        assert_eq!(block_case(9), BlockCase::C4b);
        // Divisible by 5*7*11 first at k = 289.
        assert_eq!(block_case(289), BlockCase::C4c);
        // Divisible by 5*7*11*13 first at k = 3754.
        assert_eq!(block_case(3754), BlockCase::C4d);
    }

    #[test]
    fn max_label_formula_cases() {
        assert_eq!(max_label_formula(5), 11);
        assert_eq!(max_label_formula(9), 21); // m=1, r=4
        assert_eq!(max_label_formula(10), 23);
        assert_eq!(max_label_formula(6), 15); // m=1, r=1
        assert_eq!(max_label_formula(7), 17);
        assert_eq!(max_label_formula(8), 19);
    }

    #[test]
    fn labels_reach_formula_max() {
        for n in 5..200u64 {
            let (v, u, _) = gp2_labels(n);
            let max = v.iter().chain(u.iter()).copied().max().unwrap();
            assert_eq!(max, max_label_formula(n), "n={n}");
        }
    }
}
