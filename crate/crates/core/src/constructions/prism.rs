//! Labeling rules for odd prisms, all reaching maximum label `2n + 1`.
//!
//! Each rule writes both rings as a handful of arithmetic runs
//! (consecutive ascending or descending labels). That shape is encoded
//! explicitly as [`Segment`]s; the materializing constructor and the
//! streaming scan verifier both read the same description.

use crate::labeling::TheoremId;
use crate::numtheory::{coprime, find_s, is_prime};

/// One run of labels: positions `lo..=hi` (1-based) carry
/// `start, start±1, start±2, ...` depending on direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub lo: u64,
    pub hi: u64,
    pub start: u64,
    pub desc: bool,
}

impl Segment {
    fn asc(start: u64, lo: u64, hi: u64) -> Segment {
        Segment {
            lo,
            hi,
            start,
            desc: false,
        }
    }

    fn desc(start: u64, lo: u64, hi: u64) -> Segment {
        Segment {
            lo,
            hi,
            start,
            desc: true,
        }
    }

    fn one(value: u64, pos: u64) -> Segment {
        Segment::asc(value, pos, pos)
    }

    pub fn len(&self) -> u64 {
        self.hi - self.lo + 1
    }

    #[inline]
    pub fn label_at(&self, pos: u64) -> u64 {
        debug_assert!(self.lo <= pos && pos <= self.hi);
        if self.desc {
            self.start - (pos - self.lo)
        } else {
            self.start + (pos - self.lo)
        }
    }

    /// Inclusive value interval covered by this run.
    pub fn value_range(&self) -> (u64, u64) {
        if self.desc {
            (self.start - (self.len() - 1), self.start)
        } else {
            (self.start, self.start + self.len() - 1)
        }
    }
}

/// A full ring row: segments tiling positions `1..=n`.
#[derive(Debug, Clone)]
pub struct Row {
    pub segments: Vec<Segment>,
    pub n: u64,
}

impl Row {
    fn new(n: u64, segments: Vec<Segment>) -> Row {
        let segments: Vec<Segment> = segments.into_iter().filter(|s| s.lo <= s.hi).collect();
        debug_assert!(!segments.is_empty());
        debug_assert_eq!(segments[0].lo, 1);
        debug_assert_eq!(segments.last().unwrap().hi, n);
        debug_assert!(segments.windows(2).all(|w| w[1].lo == w[0].hi + 1));
        Row { segments, n }
    }

    pub fn label_at(&self, pos: u64) -> u64 {
        let seg = self
            .segments
            .iter()
            .find(|s| s.lo <= pos && pos <= s.hi)
            .expect("position inside 1..=n");
        seg.label_at(pos)
    }

    pub fn materialize(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.n as usize);
        for seg in &self.segments {
            for pos in seg.lo..=seg.hi {
                out.push(seg.label_at(pos));
            }
        }
        out
    }
}

/// Both rows of a prism labeling.
#[derive(Debug, Clone)]
pub struct PrismPattern {
    pub n: u64,
    pub outer: Row,
    pub inner: Row,
}

/// Sub-case of a rule, where the printed pattern splits on residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrismVariant {
    Plain,
    /// Prime-pair fallback witness.
    WithWitness(u64),
    Mod3Is0,
    Mod3Is1,
    Mod3Is2,
    /// `n mod 5` in {1, 2, 4}.
    Mod5In124,
    /// `n mod 3 == 0` and `n mod 5 == 3`.
    Mod3Is0Mod5Is3,
    /// `n mod 3 == 2` and `n mod 5 == 3`.
    Mod3Is2Mod5Is3,
    /// `n mod 5` in {0, 2, 3}.
    Mod5In023,
    /// `n mod 3 == 2` and `n mod 5 == 1`.
    Mod3Is2Mod5Is1,
    /// `n mod 3 == 1` and `n mod 5 == 1`.
    Mod3Is1Mod5Is1,
}

impl PrismVariant {
    pub fn case_tag(&self) -> String {
        match self {
            PrismVariant::Plain => "direct".to_string(),
            PrismVariant::WithWitness(s) => format!("s={s}"),
            PrismVariant::Mod3Is0 => "n mod 3 = 0".to_string(),
            PrismVariant::Mod3Is1 => "n mod 3 = 1".to_string(),
            PrismVariant::Mod3Is2 => "n mod 3 = 2".to_string(),
            PrismVariant::Mod5In124 => "n mod 5 in {1,2,4}".to_string(),
            PrismVariant::Mod3Is0Mod5Is3 => "n mod 3 = 0, n mod 5 = 3".to_string(),
            PrismVariant::Mod3Is2Mod5Is3 => "n mod 3 = 2, n mod 5 = 3".to_string(),
            PrismVariant::Mod5In023 => "n mod 5 in {0,2,3}".to_string(),
            PrismVariant::Mod3Is2Mod5Is1 => "n mod 3 = 2, n mod 5 = 1".to_string(),
            PrismVariant::Mod3Is1Mod5Is1 => "n mod 3 = 1, n mod 5 = 1".to_string(),
        }
    }
}

/// Rules in fixed precedence order; `T3_6` is the fallback and is tried
/// last by the dispatcher.
pub const PRISM_PRECEDENCE: [TheoremId; 12] = [
    TheoremId::T3_1,
    TheoremId::T3_2,
    TheoremId::T3_3,
    TheoremId::T3_4,
    TheoremId::A_n4,
    TheoremId::A_nm2,
    TheoremId::A_nm4,
    TheoremId::A_2n3,
    TheoremId::A_2nm3,
    TheoremId::A_2nm5,
    TheoremId::A_n6,
    TheoremId::T3_6,
];

/// Check the hypothesis (primality plus residue admissibility plus the
/// pattern's own minimum size) of one rule at odd `n`. On success
/// returns the applicable sub-case; on failure, the condition that
/// failed.
pub fn applies(theorem: TheoremId, n: u64) -> Result<PrismVariant, String> {
    if n < 3 || n % 2 == 0 {
        return Err(format!("n = {n} is not an odd integer >= 3"));
    }
    let m3 = n % 3;
    let m5 = n % 5;
    let prime_req = |value: u64, what: &str| -> Result<(), String> {
        if is_prime(value) {
            Ok(())
        } else {
            Err(format!("{what} = {value} is not prime"))
        }
    };
    match theorem {
        TheoremId::T3_1 => prime_req(n, "n").map(|_| PrismVariant::Plain),
        TheoremId::T3_2 => prime_req(n + 2, "n+2").map(|_| PrismVariant::Plain),
        TheoremId::T3_3 => prime_req(2 * n + 1, "2n+1").map(|_| PrismVariant::Plain),
        TheoremId::T3_4 => {
            prime_req(2 * n - 1, "2n-1")?;
            match m3 {
                0 => Ok(PrismVariant::Mod3Is0),
                1 => Ok(PrismVariant::Mod3Is1),
                _ => Err("n mod 3 = 2 (2n-1 divisible by 3)".to_string()),
            }
        }
        TheoremId::A_n4 => {
            prime_req(n + 4, "n+4")?;
            match m3 {
                0 => Ok(PrismVariant::Mod3Is0),
                1 => Ok(PrismVariant::Mod3Is1),
                _ => Err("n mod 3 = 2 (n+4 divisible by 3)".to_string()),
            }
        }
        TheoremId::A_nm2 => {
            if n <= 5 {
                return Err(format!("n = {n}, rule requires n > 5"));
            }
            prime_req(n - 2, "n-2")?;
            match m3 {
                0 => Ok(PrismVariant::Mod3Is0),
                // The printed pattern needs room for its middle run.
                1 if n >= 13 => Ok(PrismVariant::Mod3Is1),
                1 => Err(format!("n = {n}, pattern for n mod 3 = 1 requires n >= 13")),
                _ => Err("n mod 3 = 2 (n-2 divisible by 3)".to_string()),
            }
        }
        TheoremId::A_nm4 => {
            if n <= 7 {
                return Err(format!("n = {n}, rule requires n > 7"));
            }
            prime_req(n - 4, "n-4")?;
            match m3 {
                0 if n >= 15 => Ok(PrismVariant::Mod3Is0),
                0 => Err(format!("n = {n}, pattern for n mod 3 = 0 requires n >= 15")),
                2 => Ok(PrismVariant::Mod3Is2),
                _ => Err("n mod 3 = 1 (n-4 divisible by 3)".to_string()),
            }
        }
        TheoremId::A_2n3 => {
            prime_req(2 * n + 3, "2n+3")?;
            match m3 {
                1 => Ok(PrismVariant::Mod3Is1),
                2 => Ok(PrismVariant::Mod3Is2),
                _ => Err("n mod 3 = 0 (2n+3 divisible by 3)".to_string()),
            }
        }
        TheoremId::A_2nm3 => {
            prime_req(2 * n - 3, "2n-3")?;
            match m3 {
                2 => Ok(PrismVariant::Mod3Is2),
                1 => Ok(PrismVariant::Mod3Is1),
                _ => Err("n mod 3 = 0 (2n-3 divisible by 3)".to_string()),
            }
        }
        TheoremId::A_2nm5 => {
            prime_req(2 * n - 5, "2n-5")?;
            if m3 == 1 {
                return Err("n mod 3 = 1 (2n-5 divisible by 3)".to_string());
            }
            match m5 {
                1 | 2 | 4 => Ok(PrismVariant::Mod5In124),
                3 if m3 == 0 => Ok(PrismVariant::Mod3Is0Mod5Is3),
                3 => Ok(PrismVariant::Mod3Is2Mod5Is3),
                _ => Err("n mod 5 = 0 (2n-5 divisible by 5); case removed".to_string()),
            }
        }
        TheoremId::A_n6 => {
            prime_req(n + 6, "n+6")?;
            if m3 == 0 {
                return Err("n mod 3 = 0 (n+6 divisible by 3)".to_string());
            }
            match m5 {
                0 | 2 | 3 => Ok(PrismVariant::Mod5In023),
                1 if m3 == 2 => Ok(PrismVariant::Mod3Is2Mod5Is1),
                1 => Ok(PrismVariant::Mod3Is1Mod5Is1),
                _ => Err("n mod 5 = 4 (n+6 divisible by 5); case removed".to_string()),
            }
        }
        TheoremId::T3_6 => match find_s(n) {
            Some(s) => Ok(PrismVariant::WithWitness(s)),
            None => Err(format!(
                "no s in [3, {}] with n+s+1 and 2n+s+2 both prime",
                n - 1
            )),
        },
        _ => Err(format!("{theorem} is not a prism rule")),
    }
}

/// The segment description of a rule's labeling at odd `n`.
///
/// Callers must have checked [`applies`] first; the ranges here assume
/// the variant's admissibility.
pub fn pattern(theorem: TheoremId, variant: PrismVariant, n: u64) -> PrismPattern {
    use Segment as S;
    let id = Row::new(n, vec![S::asc(1, 1, n)]);
    let (outer, inner) = match (theorem, variant) {
        (TheoremId::T3_1, _) => (
            id,
            Row::new(n, vec![S::asc(n + 1, 1, n - 1), S::one(2 * n + 1, n)]),
        ),
        (TheoremId::T3_2, _) => (
            id,
            Row::new(n, vec![S::asc(n + 3, 1, n - 1), S::one(n + 2, n)]),
        ),
        (TheoremId::T3_3, _) => (
            id,
            Row::new(n, vec![S::one(2 * n + 1, 1), S::desc(2 * n - 1, 2, n)]),
        ),
        (TheoremId::T3_4, v) => {
            let outer = Row::new(n, vec![S::asc(1, 1, n - 1), S::one(2 * n - 1, n)]);
            let inner = match v {
                PrismVariant::Mod3Is0 => Row::new(
                    n,
                    vec![S::desc(2 * n - 2, 1, n - 1), S::one(2 * n + 1, n)],
                ),
                _ => Row::new(
                    n,
                    vec![
                        S::one(2 * n, 1),
                        S::desc(2 * n - 3, 2, n - 1),
                        S::one(2 * n + 1, n),
                    ],
                ),
            };
            (outer, inner)
        }
        (TheoremId::T3_6, PrismVariant::WithWitness(s)) => (
            id,
            Row::new(
                n,
                vec![
                    S::one(n + s + 1, 1),
                    S::desc(n + s - 1, 2, s),
                    S::desc(2 * n + 1, s + 1, n),
                ],
            ),
        ),
        (TheoremId::A_n4, v) => match v {
            PrismVariant::Mod3Is0 => (
                id,
                Row::new(
                    n,
                    vec![
                        S::asc(n + 5, 1, n - 3),
                        S::asc(n + 1, n - 2, n - 1),
                        S::one(n + 4, n),
                    ],
                ),
            ),
            _ => (
                Row::new(
                    n,
                    vec![S::asc(1, 1, n - 2), S::one(n + 2, n - 1), S::one(n + 1, n)],
                ),
                Row::new(
                    n,
                    vec![
                        S::asc(n + 5, 1, n - 3),
                        S::one(n, n - 2),
                        S::asc(n + 3, n - 1, n),
                    ],
                ),
            ),
        },
        (TheoremId::A_nm2, v) => {
            let inner = match v {
                PrismVariant::Mod3Is0 => Row::new(
                    n,
                    vec![
                        S::one(2 * n - 1, 1),
                        S::one(2 * n + 1, 2),
                        S::asc(n + 1, 3, n - 3),
                        S::desc(2 * n - 2, n - 2, n),
                    ],
                ),
                _ => Row::new(
                    n,
                    vec![
                        S::one(2 * n - 1, 1),
                        S::one(2 * n + 1, 2),
                        S::asc(n + 1, 3, n - 5),
                        S::desc(2 * n - 4, n - 4, n - 2),
                        S::asc(2 * n - 3, n - 1, n),
                    ],
                ),
            };
            (id, inner)
        }
        (TheoremId::A_nm4, v) => {
            let inner = match v {
                PrismVariant::Mod3Is0 => Row::new(
                    n,
                    vec![
                        S::one(2 * n - 3, 1),
                        S::one(2 * n - 1, 2),
                        S::one(2 * n - 2, 3),
                        S::one(2 * n + 1, 4),
                        S::asc(n + 1, 5, n - 7),
                        S::desc(2 * n - 8, n - 6, n - 4),
                        S::asc(2 * n - 7, n - 3, n),
                    ],
                ),
                _ => Row::new(
                    n,
                    vec![
                        S::one(2 * n - 3, 1),
                        S::asc(2 * n - 1, 2, 4),
                        S::asc(n + 1, 5, n - 5),
                        S::desc(2 * n - 6, n - 4, n - 2),
                        S::asc(2 * n - 5, n - 1, n),
                    ],
                ),
            };
            (id, inner)
        }
        (TheoremId::A_2n3, v) => match v {
            PrismVariant::Mod3Is1 => (
                Row::new(n, vec![S::asc(1, 1, n - 2), S::asc(n + 1, n - 1, n)]),
                Row::new(n, vec![S::one(n, 1), S::desc(2 * n + 1, 2, n)]),
            ),
            _ => (
                Row::new(
                    n,
                    vec![S::asc(1, 1, n - 2), S::one(n, n - 1), S::one(n + 3, n)],
                ),
                Row::new(
                    n,
                    vec![
                        S::one(n - 1, 1),
                        S::desc(2 * n + 1, 2, n - 1),
                        S::one(n + 2, n),
                    ],
                ),
            ),
        },
        (TheoremId::A_2nm3, v) => match v {
            PrismVariant::Mod3Is2 => (
                Row::new(
                    n,
                    vec![
                        S::asc(1, 1, n - 2),
                        S::one(2 * n - 3, n - 1),
                        S::one(2 * n, n),
                    ],
                ),
                Row::new(
                    n,
                    vec![
                        S::one(2 * n - 2, 1),
                        S::desc(2 * n - 5, 2, n - 2),
                        S::one(2 * n - 1, n - 1),
                        S::one(2 * n + 1, n),
                    ],
                ),
            ),
            _ => (
                Row::new(n, vec![S::asc(1, 1, n - 2), S::asc(2 * n, n - 1, n)]),
                Row::new(
                    n,
                    vec![
                        S::desc(2 * n - 4, 1, n - 2),
                        S::one(2 * n - 3, n - 1),
                        S::one(2 * n - 1, n),
                    ],
                ),
            ),
        },
        (TheoremId::A_2nm5, v) => match v {
            PrismVariant::Mod5In124 => (
                Row::new(
                    n,
                    vec![
                        S::asc(1, 1, n - 3),
                        S::one(2 * n - 5, n - 2),
                        S::one(2 * n + 1, n - 1),
                        S::one(2 * n, n),
                    ],
                ),
                Row::new(
                    n,
                    vec![S::desc(2 * n - 6, 1, n - 3), S::asc(2 * n - 3, n - 2, n)],
                ),
            ),
            PrismVariant::Mod3Is0Mod5Is3 => (
                Row::new(
                    n,
                    vec![
                        S::asc(1, 1, n - 3),
                        S::one(2 * n - 5, n - 2),
                        S::asc(2 * n - 1, n - 1, n),
                    ],
                ),
                Row::new(
                    n,
                    vec![
                        S::one(2 * n - 4, 1),
                        S::desc(2 * n - 7, 2, n - 3),
                        S::asc(2 * n - 3, n - 2, n - 1),
                        S::one(2 * n + 1, n),
                    ],
                ),
            ),
            _ => (
                Row::new(
                    n,
                    vec![
                        S::asc(1, 1, n - 3),
                        S::one(2 * n - 5, n - 2),
                        S::asc(2 * n - 1, n - 1, n),
                    ],
                ),
                Row::new(
                    n,
                    vec![
                        S::desc(2 * n - 6, 1, n - 3),
                        S::one(2 * n + 1, n - 2),
                        S::desc(2 * n - 2, n - 1, n),
                    ],
                ),
            ),
        },
        (TheoremId::A_n6, v) => match v {
            PrismVariant::Mod5In023 => (
                Row::new(n, vec![S::asc(1, 1, n - 2), S::asc(n + 2, n - 1, n)]),
                Row::new(
                    n,
                    vec![
                        S::asc(n + 7, 1, n - 5),
                        S::desc(n + 1, n - 4, n - 2),
                        S::one(n + 4, n - 1),
                        S::one(n + 6, n),
                    ],
                ),
            ),
            PrismVariant::Mod3Is2Mod5Is1 => (
                Row::new(
                    n,
                    vec![S::asc(1, 1, n - 2), S::one(n + 2, n - 1), S::one(n + 5, n)],
                ),
                Row::new(
                    n,
                    vec![
                        S::asc(n + 7, 1, n - 5),
                        S::desc(n + 1, n - 4, n - 3),
                        S::asc(n + 3, n - 2, n - 1),
                        S::one(n + 6, n),
                    ],
                ),
            ),
            _ => (
                Row::new(n, vec![S::asc(1, 1, n - 2), S::asc(n + 4, n - 1, n)]),
                Row::new(
                    n,
                    vec![
                        S::asc(n + 7, 1, n - 5),
                        S::desc(n + 1, n - 4, n - 3),
                        S::one(n + 3, n - 2),
                        S::one(n + 2, n - 1),
                        S::one(n + 6, n),
                    ],
                ),
            ),
        },
        (t, v) => unreachable!("no pattern for {t} with {v:?}"),
    };
    PrismPattern { n, outer, inner }
}

/// First applicable rule for odd `n` in precedence order.
pub fn select_rule(n: u64) -> Option<(TheoremId, PrismVariant)> {
    PRISM_PRECEDENCE
        .iter()
        .find_map(|&t| applies(t, n).ok().map(|v| (t, v)))
}

/// Smallest-prime-factor sieve for factoring the fixed spoke
/// differences and sums during scans.
pub struct SpfSieve {
    spf: Vec<u32>,
}

impl SpfSieve {
    pub fn new(limit: u64) -> SpfSieve {
        let limit = limit.max(4) as usize;
        let mut spf: Vec<u32> = vec![0; limit + 1];
        for i in 2..=limit {
            if spf[i] == 0 {
                for j in (i..=limit).step_by(i) {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                }
            }
        }
        SpfSieve { spf }
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    /// Distinct prime factors of `x`, requiring `x <= limit`.
    fn for_each_prime(&self, mut x: u64, mut f: impl FnMut(u64) -> bool) -> bool {
        while x > 1 {
            let p = self.spf[x as usize] as u64;
            if !f(p) {
                return false;
            }
            while x % p == 0 {
                x /= p;
            }
        }
        true
    }
}

#[inline]
fn multiples_in(p: u64, lo: u64, hi: u64) -> u64 {
    hi / p - (lo - 1) / p
}

/// Verify that the labeling described by `pattern` is a coprime
/// labeling of the prism with maximum label exactly `2n + 1`.
///
/// Ring pairs inside a run are consecutive integers; boundary and wrap
/// pairs are checked by direct gcd. Spokes pair two runs, so along any
/// overlap the two labels keep either a constant difference or a
/// constant sum; a shared factor exists exactly when some prime factor
/// of that constant divides a label in the run, which is counted
/// directly. Injectivity is the disjointness of the runs' value
/// intervals. Every edge of the graph is accounted for.
pub fn verify_pattern(p: &PrismPattern, sieve: &SpfSieve) -> bool {
    let n = p.n;

    // Ring boundaries, including the wrap pair (n, 1).
    for row in [&p.outer, &p.inner] {
        for w in row.segments.windows(2) {
            if !coprime(w[0].label_at(w[0].hi), w[1].label_at(w[1].lo)) {
                return false;
            }
        }
        if !coprime(row.label_at(n), row.label_at(1)) {
            return false;
        }
    }

    // Spokes: sweep the overlaps of outer and inner segments.
    let (mut oi, mut ii) = (0usize, 0usize);
    while oi < p.outer.segments.len() && ii < p.inner.segments.len() {
        let so = &p.outer.segments[oi];
        let si = &p.inner.segments[ii];
        let lo = so.lo.max(si.lo);
        let hi = so.hi.min(si.hi);
        if lo <= hi {
            let a = so.label_at(lo);
            let b = si.label_at(lo);
            // Value interval swept by the outer-ring labels.
            let a_end = so.label_at(hi);
            let (vlo, vhi) = (a.min(a_end), a.max(a_end));
            let ok = if so.desc == si.desc {
                let d = a.abs_diff(b);
                if d == 0 {
                    false // identical labels; also caught by injectivity
                } else {
                    debug_assert!(d <= sieve.limit());
                    sieve.for_each_prime(d, |prime| multiples_in(prime, vlo, vhi) == 0)
                }
            } else {
                let s = a + b;
                debug_assert!(s <= sieve.limit());
                sieve.for_each_prime(s, |prime| multiples_in(prime, vlo, vhi) == 0)
            };
            if !ok {
                return false;
            }
        }
        if so.hi <= si.hi {
            oi += 1;
        } else {
            ii += 1;
        }
    }

    // Injectivity and label range: run value-intervals must be disjoint
    // and fit in [1, 2n+1] with maximum exactly 2n+1.
    let mut intervals: Vec<(u64, u64)> = p
        .outer
        .segments
        .iter()
        .chain(p.inner.segments.iter())
        .map(Segment::value_range)
        .collect();
    intervals.sort_unstable();
    let mut total = 0u64;
    for w in intervals.windows(2) {
        if w[1].0 <= w[0].1 {
            return false;
        }
    }
    for &(lo, hi) in &intervals {
        if lo < 1 || hi > 2 * n + 1 {
            return false;
        }
        total += hi - lo + 1;
    }
    total == 2 * n && intervals.last().map(|&(_, hi)| hi) == Some(2 * n + 1)
}
