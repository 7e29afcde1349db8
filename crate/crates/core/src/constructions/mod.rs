//! Constructive labelings for every supported family, each returning
//! the labeling together with a certificate naming the rule and case
//! that produced it.

pub(crate) mod gp2;
pub(crate) mod gpstar;
pub(crate) mod prism;
pub(crate) mod stacked;

use crate::graphs::VertexId;
use crate::labeling::{Certificate, Labeling, TheoremId};

pub use prism::{SpfSieve, PRISM_PRECEDENCE};

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("{theorem} does not apply at n = {n}: {reason}")]
    HypothesisViolated {
        theorem: TheoremId,
        n: u64,
        reason: String,
    },
    #[error("no labeling rule applies at n = {n} (all hypotheses fail, including the prime-pair fallback)")]
    Unavailable { n: u64 },
}

fn rings_to_labeling(outer: Vec<u64>, inner: Vec<u64>) -> Labeling {
    let pairs = outer
        .into_iter()
        .enumerate()
        .map(|(i, l)| (VertexId::Outer(i as u32 + 1), l))
        .chain(
            inner
                .into_iter()
                .enumerate()
                .map(|(i, l)| (VertexId::Inner(i as u32 + 1), l)),
        );
    Labeling::from_u64_pairs(pairs)
}

fn grid_to_labeling<const M: usize>(rows: Vec<[u64; M]>) -> Labeling {
    let pairs = rows.into_iter().enumerate().flat_map(|(i, row)| {
        row.into_iter().enumerate().map(move |(j, l)| {
            (
                VertexId::Grid {
                    layer: i as u32 + 1,
                    pos: j as u32 + 1,
                },
                l,
            )
        })
    });
    Labeling::from_u64_pairs(pairs)
}

pub(crate) fn prism_certificate(theorem: TheoremId, variant: prism::PrismVariant) -> Certificate {
    use prism::PrismVariant as V;
    match (theorem, variant) {
        (TheoremId::T3_1, _) => Certificate::new(theorem, "n prime"),
        (TheoremId::T3_2, _) => Certificate::new(theorem, "n+2 prime"),
        (TheoremId::T3_3, _) => Certificate::new(theorem, "2n+1 prime"),
        (_, V::WithWitness(s)) => Certificate::with_witness(theorem, "prime pair", s),
        (_, v) => Certificate::new(theorem, v.case_tag()),
    }
}

fn check_odd_prism_param(n: u64) -> Result<(), ConstructionError> {
    if n < 3 || n % 2 == 0 {
        return Err(ConstructionError::ParamOutOfRange(format!(
            "prism constructions require odd n >= 3, got {n}"
        )));
    }
    Ok(())
}

/// Label the odd prism `GP(n, 1)` with maximum label `2n + 1`, using
/// the first applicable rule in the fixed precedence order (the
/// prime-pair fallback last).
pub fn label_prism(n: u64) -> Result<(Labeling, Certificate), ConstructionError> {
    check_odd_prism_param(n)?;
    let (theorem, variant) =
        prism::select_rule(n).ok_or(ConstructionError::Unavailable { n })?;
    let p = prism::pattern(theorem, variant, n);
    Ok((
        rings_to_labeling(p.outer.materialize(), p.inner.materialize()),
        prism_certificate(theorem, variant),
    ))
}

/// Label the odd prism by one named rule, failing if its hypothesis
/// (primality plus residue admissibility) does not hold at `n`.
pub fn label_prism_by(
    theorem: TheoremId,
    n: u64,
) -> Result<(Labeling, Certificate), ConstructionError> {
    check_odd_prism_param(n)?;
    let variant = prism::applies(theorem, n).map_err(|reason| {
        ConstructionError::HypothesisViolated { theorem, n, reason }
    })?;
    let p = prism::pattern(theorem, variant, n);
    Ok((
        rings_to_labeling(p.outer.materialize(), p.inner.materialize()),
        prism_certificate(theorem, variant),
    ))
}

/// Label `GP(n, 2)` for any `n >= 5`; the maximum label is the closed
/// form of [`gp2_max_label`].
pub fn label_gp2(n: u64) -> Result<(Labeling, Certificate), ConstructionError> {
    if n < 5 {
        return Err(ConstructionError::ParamOutOfRange(format!(
            "gp2 construction requires n >= 5, got {n}"
        )));
    }
    let (v, u, cert) = gp2::gp2_labels(n);
    Ok((rings_to_labeling(v, u), cert))
}

/// Closed-form maximum label of the `GP(n, 2)` construction.
pub fn gp2_max_label(n: u64) -> u64 {
    gp2::max_label_formula(n)
}

/// Label the stacked triangular prism `Y(3, n)`, maximum label `4n - 1`.
pub fn label_y3(n: u64) -> Result<(Labeling, Certificate), ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::ParamOutOfRange(
            "y3 construction requires n >= 1".to_string(),
        ));
    }
    let (rows, cert) = stacked::y3_labels(n);
    Ok((grid_to_labeling(rows), cert))
}

/// Label the stacked pentagonal prism `Y(5, n)`, maximum label `6n - 1`.
pub fn label_y5(n: u64) -> Result<(Labeling, Certificate), ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::ParamOutOfRange(
            "y5 construction requires n >= 1".to_string(),
        ));
    }
    let (rows, cert) = stacked::y5_labels(n);
    Ok((grid_to_labeling(rows), cert))
}

/// Label `GP*(2k, k)`: a prime labeling on `{1..4k}` for odd `k`,
/// maximum label `4k + 1` for even `k`.
pub fn label_gpstar(k: u64) -> Result<(Labeling, Certificate), ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::ParamOutOfRange(format!(
            "gpstar construction requires k >= 2, got {k}"
        )));
    }
    let (v, u, cert) = gpstar::gpstar_labels(k);
    Ok((rings_to_labeling(v, u), cert))
}
