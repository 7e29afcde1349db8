//! Labeling construction for the variant `GP*(2k, k)`.
//!
//! The base pattern labels consecutive spoke pairs and inner partners
//! with consecutive integers; around the outer cycle it leaves pairs
//! whose labels differ by 7. Where both such labels are divisible by 7
//! a local rearrangement is applied, chosen by the residue of the
//! smaller label mod 3 and the divisibility of nearby labels by 5. Odd
//! `k` yields a prime labeling on `{1..4k}`; even `k` additionally
//! moves the label of `v_k` to `4k + 1`, the minimum possible maximum.

use crate::labeling::{Certificate, TheoremId};

/// Base labels: outer and inner rows indexed by ring position 1..=2k.
pub(crate) fn gpstar_base(k: u64) -> (Vec<u64>, Vec<u64>) {
    let n = 2 * k;
    let mut v = vec![0u64; n as usize];
    let mut u = vec![0u64; n as usize];
    for i in 1..=k {
        let (lv, lu) = if i % 2 == 1 {
            (4 * i - 3, 4 * i - 2)
        } else {
            (4 * i, 4 * i - 1)
        };
        v[(i - 1) as usize] = lv;
        u[(i - 1) as usize] = lu;
    }
    for j in 1..=k {
        let (lv, lu) = if j % 2 == 1 {
            (4 * j, 4 * j - 1)
        } else {
            (4 * j - 3, 4 * j - 2)
        };
        v[(k + j - 1) as usize] = lv;
        u[(k + j - 1) as usize] = lu;
    }
    (v, u)
}

struct LabelMap {
    /// Labels by vertex: 0..2k outer, 2k..4k inner.
    labels: Vec<u64>,
    /// Vertex holding each label; labels run 1..=4k (+1 for even k).
    pos: Vec<u32>,
    n: usize,
}

impl LabelMap {
    fn new(v: Vec<u64>, u: Vec<u64>) -> LabelMap {
        let n = v.len();
        let mut labels = v;
        labels.extend(u);
        let mut pos = vec![u32::MAX; labels.len() + 2];
        for (idx, &l) in labels.iter().enumerate() {
            pos[l as usize] = idx as u32;
        }
        LabelMap { labels, pos, n }
    }

    fn outer(&self, i1: u64) -> usize {
        (i1 - 1) as usize
    }

    fn assign(&mut self, vertex: usize, label: u64) {
        self.labels[vertex] = label;
        self.pos[label as usize] = vertex as u32;
    }

    fn swap_labels(&mut self, l1: u64, l2: u64) {
        let x = self.pos[l1 as usize] as usize;
        let y = self.pos[l2 as usize] as usize;
        self.assign(x, l2);
        self.assign(y, l1);
    }

    /// Apply `(current label -> new label)` reassignments by position.
    fn reassign(&mut self, moves: &[(u64, u64)]) {
        let targets: Vec<(usize, u64)> = moves
            .iter()
            .map(|&(old, new)| (self.pos[old as usize] as usize, new))
            .collect();
        for (vertex, label) in targets {
            self.assign(vertex, label);
        }
    }

    fn into_rows(mut self) -> (Vec<u64>, Vec<u64>) {
        let inner = self.labels.split_off(self.n);
        (self.labels, inner)
    }
}

/// Outer and inner label rows for `GP*(2k, k)`, plus the certificate.
/// `k >= 2`.
pub(crate) fn gpstar_labels(k: u64) -> (Vec<u64>, Vec<u64>, Certificate) {
    assert!(k >= 2);
    let n = 2 * k;
    let (v, u) = gpstar_base(k);

    // Outer pairs whose labels differ by exactly 7 in the base pattern,
    // recorded with their base label: the case conditions are stated on
    // the unaltered pattern, and earlier rearrangements may move other
    // labels onto these vertices.
    let pairs: Vec<(u64, u64)> = (1..=n)
        .filter_map(|p| {
            let q = p % n + 1;
            let (a, b) = (v[(p - 1) as usize], v[(q - 1) as usize]);
            (b > a && b - a == 7).then_some((p, a))
        })
        .collect();

    let mut map = LabelMap::new(v, u);
    let even_boundary = k % 2 == 0;

    for &(p, a) in &pairs {
        if a % 7 != 0 {
            continue;
        }
        let boundary = even_boundary && p == k - 1;
        match (a % 3, (a + 2) % 5 == 0, a % 5 == 0) {
            (1, _, _) => {
                // Swap with the label two below, held by an inner
                // neighbor of the pair. At the even-k boundary the
                // final relabel of v_k makes the swap unnecessary, and
                // it would pull two multiples of 5 together whenever
                // k = 1 mod 5, so it is skipped there.
                if !boundary {
                    map.swap_labels(a, a - 2);
                }
            }
            (0, _, false) => map.swap_labels(a + 5, a + 7),
            (0, _, true) => {
                map.reassign(&[
                    (a - 1, a + 7),
                    (a, a + 6),
                    (a + 1, a + 5),
                    (a + 5, a - 1),
                    (a + 6, a),
                    (a + 7, a + 1),
                ]);
            }
            (_, false, _) => map.swap_labels(a, a + 2),
            (_, true, _) => {
                // Six-label reversal. The slot that would receive the
                // label above the block is the outer vertex two past
                // the pair; at the ring seam that vertex holds a small
                // label which takes part in the reversal instead. At
                // the even-k boundary the relabel of v_k covers the
                // conflict, and the reversal itself would break the
                // spoke at the inner vertex, so it is skipped.
                if !boundary {
                    let q3 = map.outer((p + 1) % n + 1);
                    let carried = map.labels[q3];
                    map.reassign(&[
                        (a, a + 6),
                        (a + 1, a + 7),
                        (a + 2, carried),
                        (a + 6, a + 2),
                        (a + 7, a + 1),
                        (carried, a),
                    ]);
                }
            }
        }
    }

    let case = if k % 2 == 1 {
        "k odd (prime labeling)"
    } else {
        // The largest even label cannot sit on v_k next to v_{k+1}'s
        // label 4; move v_k up to 4k+1 regardless of which case, if
        // any, touched it.
        let vk = map.outer(k);
        map.assign(vk, 4 * k + 1);
        "k even (max 4k+1)"
    };

    let (v, u) = map.into_rows();
    (v, u, Certificate::new(TheoremId::T6_1, case))
}
