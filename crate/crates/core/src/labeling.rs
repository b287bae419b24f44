//! Edge labelings, path weights and the Leech / almost-Leech classifier.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{enumerate_geodesics, GeodesicPath, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("labeling has {labels} labels but the graph has {edges} edges")]
    LabelCountMismatch { labels: usize, edges: usize },
    #[error("label at edge {edge} is {value}; labels must be positive")]
    NonPositiveLabel { edge: usize, value: i64 },
    #[error("edge id {edge} out of range for a labeling of {len} edges")]
    EdgeIdOutOfRange { edge: usize, len: usize },
}

/// Positive integer labels indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Labeling {
    labels: Vec<u64>,
}

impl Labeling {
    pub fn new(labels: Vec<u64>) -> Result<Self, LabelingError> {
        if let Some(edge) = labels.iter().position(|&a| a == 0) {
            return Err(LabelingError::NonPositiveLabel { edge, value: 0 });
        }
        Ok(Labeling { labels })
    }

    /// Accepts raw signed values as read from a file.
    pub fn from_values(values: &[i64]) -> Result<Self, LabelingError> {
        values
            .iter()
            .enumerate()
            .map(|(edge, &value)| {
                if value >= 1 {
                    Ok(value as u64)
                } else {
                    Err(LabelingError::NonPositiveLabel { edge, value })
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(|labels| Labeling { labels })
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.labels.iter().sum()
    }

    pub fn get(&self, edge: usize) -> Option<u64> {
        self.labels.get(edge).copied()
    }
}

pub fn path_weight(lab: &Labeling, path: &GeodesicPath) -> Result<u64, LabelingError> {
    path.edge_ids.iter().try_fold(0u64, |acc, &edge| {
        lab.get(edge)
            .map(|a| acc + a)
            .ok_or(LabelingError::EdgeIdOutOfRange {
                edge,
                len: lab.len(),
            })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    GeodesicLeech,
    AlmostGeodesicLeech,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    pub t_gp: u64,
    /// Weights of all geodesics, ascending.
    pub weight_multiset: Vec<u64>,
    /// Values of `1..=t_gp` that no geodesic attains.
    pub missing: Vec<u64>,
    /// `(value, multiplicity)` for every weight attained more than once.
    pub duplicates: Vec<(u64, usize)>,
    /// Weights above `t_gp`, ascending, with repetition.
    pub overshoot: Vec<u64>,
}

impl ClassificationReport {
    pub fn from_weights(mut weights: Vec<u64>) -> Self {
        weights.sort_unstable();
        let t = weights.len() as u64;
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for &w in &weights {
            *counts.entry(w).or_insert(0) += 1;
        }
        let missing: Vec<u64> = (1..=t).filter(|w| !counts.contains_key(w)).collect();
        let duplicates: Vec<(u64, usize)> = counts
            .iter()
            .filter(|&(_, &c)| c > 1)
            .map(|(&w, &c)| (w, c))
            .collect();
        let overshoot: Vec<u64> = weights.iter().copied().filter(|&w| w > t).collect();

        let verdict = if missing.is_empty() && duplicates.is_empty() && overshoot.is_empty() {
            Verdict::GeodesicLeech
        } else if missing.len() == 1 && duplicates.len() == 1 && duplicates[0].1 == 2 && overshoot.is_empty() {
            Verdict::AlmostGeodesicLeech
        } else {
            Verdict::Neither
        };
        ClassificationReport {
            verdict,
            t_gp: t,
            weight_multiset: weights,
            missing,
            duplicates,
            overshoot,
        }
    }
}

/// Classifies `lab` against the geodesics of `g`, enumerated afresh.
pub fn classify(g: &Graph, lab: &Labeling) -> Result<ClassificationReport, LabelingError> {
    classify_paths(g, &enumerate_geodesics(g), lab)
}

/// Same as [`classify`] with a precomputed geodesic list.
pub fn classify_paths(
    g: &Graph,
    paths: &[GeodesicPath],
    lab: &Labeling,
) -> Result<ClassificationReport, LabelingError> {
    if lab.len() != g.edge_count() {
        return Err(LabelingError::LabelCountMismatch {
            labels: lab.len(),
            edges: g.edge_count(),
        });
    }
    let weights = paths
        .iter()
        .map(|p| path_weight(lab, p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ClassificationReport::from_weights(weights))
}
