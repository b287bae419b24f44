//! Closed-form geodesic path numbers and the double-counting necessary
//! conditions for geodesic Leech labelings.
//!
//! Summing all geodesic weights edge by edge gives `sum_e k_e * a_e`,
//! where `k_e` is the number of geodesics through `e`. For a Leech
//! labeling the same sum is `1 + 2 + ... + t = t(t+1)/2`. When every edge
//! has the same `k` this forces `sum_e a_e = t(t+1) / (2k)`, which must be
//! a whole number no smaller than `1 + 2 + ... + m`.

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::families::FamilySpec;
use crate::graph::{GeodesicCensus, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{formula} needs {requirement}, got n = {n}")]
    TooSmall {
        formula: &'static str,
        requirement: &'static str,
        n: u64,
    },
    #[error("closed form for {formula} only holds for {requirement} (diameter 2); got n = {n}")]
    FormulaDomain {
        formula: &'static str,
        requirement: &'static str,
        n: u64,
    },
}

/// `1 + 2 + ... + n`.
pub fn triangular(n: u64) -> u64 {
    n * (n + 1) / 2
}

pub fn tgp_cycle(n: u64) -> Result<u64, FormulaError> {
    if n < 3 {
        return Err(FormulaError::TooSmall {
            formula: "cycle",
            requirement: "n >= 3",
            n,
        });
    }
    let k = n / 2;
    Ok(if n % 2 == 1 { k * (2 * k + 1) } else { 2 * k * k })
}

pub fn tgp_knn(n: u64) -> Result<u64, FormulaError> {
    if n < 1 {
        return Err(FormulaError::TooSmall {
            formula: "K_{n,n}",
            requirement: "n >= 1",
            n,
        });
    }
    Ok(n * n * n)
}

/// Wheel on `n` vertices in total.
pub fn tgp_wheel(n: u64) -> Result<u64, FormulaError> {
    if n < 5 {
        return Err(FormulaError::FormulaDomain {
            formula: "wheel",
            requirement: "n >= 5",
            n,
        });
    }
    Ok((n - 1) * (n + 2) / 2)
}

pub fn tgp_complete(n: u64) -> Result<u64, FormulaError> {
    if n < 2 {
        return Err(FormulaError::TooSmall {
            formula: "complete",
            requirement: "n >= 2",
            n,
        });
    }
    Ok(n * (n - 1) / 2)
}

/// Closed form for a named family, when one is known.
pub fn closed_form_tgp(spec: &FamilySpec) -> Option<Result<u64, FormulaError>> {
    Some(match *spec {
        FamilySpec::Cycle(n) => tgp_cycle(n as u64),
        FamilySpec::Knn(n) => tgp_knn(n as u64),
        FamilySpec::Wheel(n) => tgp_wheel(n as u64),
        FamilySpec::Complete(n) => tgp_complete(n as u64),
        _ => return None,
    })
}

/// Outcome of the edge-transitive double-counting test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibilityResult {
    pub feasible: bool,
    /// Geodesics through each edge.
    pub per_edge_count: u64,
    pub geodesic_count: u64,
    pub edge_count: u64,
    /// `t(t+1)/2`.
    pub required_total: u64,
    /// `required_total / per_edge_count`, reduced.
    pub required_label_sum: Ratio<u64>,
    /// Smallest possible sum of `edge_count` distinct positive labels.
    pub minimum_label_sum: u64,
    pub reason: String,
}

impl FeasibilityResult {
    /// The forced label sum, when it is a whole number.
    pub fn forced_label_sum(&self) -> Option<u64> {
        self.required_label_sum
            .is_integer()
            .then(|| self.required_label_sum.to_integer())
    }
}

/// Necessary condition for a graph whose edges each lie on exactly `k` of
/// its `t` geodesics; `m` is the edge count.
pub fn edge_transitive_feasibility(k: u64, t: u64, m: u64) -> FeasibilityResult {
    assert!(k >= 1 && m >= 1 && t >= m, "need k >= 1 and t >= m >= 1");
    let required_total = triangular(t);
    let required_label_sum = Ratio::new(required_total, k);
    let minimum_label_sum = triangular(m);
    let divisible = required_total.is_multiple_of(k);
    let (feasible, reason) = if !divisible {
        (
            false,
            format!(
                "{required_total} not divisible by {k}: the label sum {required_total}/{k} is not an integer"
            ),
        )
    } else {
        let sum = required_total / k;
        if sum < minimum_label_sum {
            (
                false,
                format!(
                    "forced label sum {required_total}/{k} = {sum} is below {minimum_label_sum}, the least sum of {m} distinct positive labels"
                ),
            )
        } else {
            (
                true,
                format!("{required_total} = {k} x {sum}; labels must sum to {sum} (at least {minimum_label_sum} is attainable)"),
            )
        }
    };
    FeasibilityResult {
        feasible,
        per_edge_count: k,
        geodesic_count: t,
        edge_count: m,
        required_total,
        required_label_sum,
        minimum_label_sum,
        reason,
    }
}

pub fn cycle_feasibility(n: u64) -> Result<FeasibilityResult, FormulaError> {
    let t = tgp_cycle(n)?;
    let d = n / 2;
    Ok(edge_transitive_feasibility(triangular(d), t, n))
}

pub fn knn_feasibility(n: u64) -> Result<FeasibilityResult, FormulaError> {
    let t = tgp_knn(n)?;
    Ok(edge_transitive_feasibility(2 * n - 1, t, n * n))
}

/// The linear identity `sum_e k_e * a_e = target` satisfied by every
/// geodesic Leech labeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedSumIdentity {
    pub coefficients: Vec<u64>,
    pub target: u64,
}

impl WeightedSumIdentity {
    pub fn evaluate(&self, labels: &[u64]) -> u64 {
        self.coefficients
            .iter()
            .zip(labels)
            .map(|(k, a)| k * a)
            .sum()
    }

    /// `Some(target / k)` when all coefficients equal `k` and divide the
    /// target.
    pub fn forced_label_sum(&self) -> Option<u64> {
        let k = *self.coefficients.first()?;
        (self.coefficients.iter().all(|&c| c == k) && self.target.is_multiple_of(k))
            .then(|| self.target / k)
    }
}

pub fn general_weighted_sum_identity(census: &GeodesicCensus) -> WeightedSumIdentity {
    WeightedSumIdentity {
        coefficients: census.per_edge.clone(),
        target: triangular(census.total),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundArgument {
    /// Every single edge is a geodesic, so its label is a path weight.
    SingleEdgeGeodesic,
    /// Even-cycle argument: geodesics through the heaviest edge, plus the
    /// antipodal geodesics avoiding it, need distinct weights.
    EvenCycleComplement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelBound {
    pub graph_id: String,
    pub max_label: u64,
    pub argument: BoundArgument,
}

fn is_even_cycle(g: &Graph) -> bool {
    let n = g.vertex_count();
    n >= 4 && n.is_multiple_of(2) && g.edge_count() == n && (0..n).all(|v| g.degree(v) == 2) && g.is_connected()
}

/// Upper bound on any label of a geodesic Leech labeling.
pub fn max_label_bound(g: &Graph, census: &GeodesicCensus) -> LabelBound {
    let t = census.total;
    let general = LabelBound {
        graph_id: format!("n={} m={}", g.vertex_count(), g.edge_count()),
        max_label: t.max(1),
        argument: BoundArgument::SingleEdgeGeodesic,
    };
    if !is_even_cycle(g) {
        return general;
    }
    let half = (g.vertex_count() / 2) as u64;
    let Some(through) = census.uniform_edge_count() else {
        return general;
    };
    let Some(label_sum) = general_weighted_sum_identity(census).forced_label_sum() else {
        // no Leech labeling at all; keep the trivial bound
        return general;
    };
    // An antipodal path and its complement partition the cycle, so their
    // weights sum to `label_sum`; with both at most `t`, each is at least
    // `label_sum - t`.
    let antipodal_floor = label_sum.saturating_sub(t);
    let antipodal_total = census.by_length.get(&(half as usize)).copied().unwrap_or(0);
    let antipodal_avoiding = antipodal_total.saturating_sub(half);
    // If M were at most the floor, all these paths would weigh at least M
    // and need distinct weights in [M, t].
    let with_complement = (t + 1).saturating_sub(through + antipodal_avoiding);
    let bound = if antipodal_floor > with_complement {
        with_complement
    } else {
        // only the paths through the heaviest edge are usable
        (t + 1).saturating_sub(through)
    };
    LabelBound {
        graph_id: format!("C_{}", g.vertex_count()),
        max_label: bound.clamp(1, t),
        argument: BoundArgument::EvenCycleComplement,
    }
}
