use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Analytic,
    Simulated,
}

/// Pairwise handover rates in handovers per second. Entry `(m, n)` is the
/// rate of handovers from serving tier m to tier n inside the reporting
/// region; `total` is their sum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateMatrix {
    pub pairwise: Vec<Vec<f64>>,
    pub total: f64,
    pub provenance: Provenance,
    /// 95% normal-approximation halfwidths for simulated matrices. Entries
    /// are NaN when too few events were observed to estimate a spread.
    pub ci_halfwidth: Option<Vec<Vec<f64>>>,
}

impl RateMatrix {
    /// Builds the matrix and accumulates `total` row-major with compensated
    /// summation, so the sum is reproducible regardless of how callers later
    /// combine entries.
    pub fn from_pairwise(pairwise: Vec<Vec<f64>>, provenance: Provenance) -> Self {
        let total = compensated_sum(pairwise.iter().flat_map(|row| row.iter().copied()));
        Self { pairwise, total, provenance, ci_halfwidth: None }
    }

    pub fn tier_count(&self) -> usize {
        self.pairwise.len()
    }

    pub fn get(&self, m: usize, n: usize) -> f64 {
        self.pairwise[m][n]
    }
}

/// Neumaier-compensated summation; exact even when a partial sum is much
/// smaller than the term being added.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut carry = 0.0;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    sum + carry
}
