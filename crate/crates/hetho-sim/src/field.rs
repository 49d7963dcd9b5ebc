//! PPP base-station fields and max-BRP association.
//!
//! Stations live on a disk; each tier carries a uniform-grid index sized to
//! its mean spacing so nearest-station queries touch a handful of cells.
//! Association picks the station with the strongest biased received power;
//! with a common path-loss exponent the comparison reduces to a weighted
//! squared distance, which the stepping loop leans on heavily.

use std::f64::consts::TAU;

use hetho_core::NetworkConfig;
use rand::Rng;
use rand_distr::{Distribution, Poisson};

/// Draw one homogeneous PPP realization on the disk of the given radius.
/// Count is Poisson(density·π·radius²), positions i.i.d. uniform.
pub fn sample_ppp(density: f64, disk_radius: f64, rng: &mut impl Rng) -> Vec<[f64; 2]> {
    let mean = density * std::f64::consts::PI * disk_radius * disk_radius;
    if mean <= 0.0 {
        return Vec::new();
    }
    let count = Poisson::new(mean).expect("positive mean").sample(rng) as usize;
    (0..count)
        .map(|_| {
            let r = disk_radius * rng.gen::<f64>().sqrt();
            let phi = rng.gen_range(0.0..TAU);
            [r * phi.cos(), r * phi.sin()]
        })
        .collect()
}

/// One tier's stations plus a flat grid over [-extent, extent]² for
/// nearest-point lookups.
pub struct TierStations {
    pub points: Vec<[f64; 2]>,
    cell_width: f64,
    side: usize,
    extent: f64,
    starts: Vec<u32>,
    order: Vec<u32>,
}

impl TierStations {
    pub fn index(points: Vec<[f64; 2]>, extent: f64) -> Self {
        // one cell per mean spacing keeps ring searches at one or two rings
        let side = if points.is_empty() {
            1
        } else {
            let spacing = extent * (std::f64::consts::PI / points.len() as f64).sqrt();
            ((2.0 * extent / spacing).ceil() as usize).clamp(1, 512)
        };
        let cell_width = 2.0 * extent / side as f64;
        let cell_of = |p: &[f64; 2]| {
            let cx = (((p[0] + extent) / cell_width) as usize).min(side - 1);
            let cy = (((p[1] + extent) / cell_width) as usize).min(side - 1);
            cy * side + cx
        };
        let mut starts = vec![0u32; side * side + 1];
        for p in &points {
            starts[cell_of(p) + 1] += 1;
        }
        for i in 0..side * side {
            starts[i + 1] += starts[i];
        }
        let mut cursor = starts.clone();
        let mut order = vec![0u32; points.len()];
        // insertion in index order keeps each cell's list sorted by index,
        // which the tie-break below relies on
        for (i, p) in points.iter().enumerate() {
            let c = cell_of(p);
            order[cursor[c] as usize] = i as u32;
            cursor[c] += 1;
        }
        Self { points, cell_width, side, extent, starts, order }
    }

    /// Nearest station to (x, y): (index, squared distance). Exact ties go
    /// to the lowest index. Expanding ring search; after finishing ring k
    /// every unvisited cell lies at least k·cell_width away, so the scan
    /// stops as soon as the best hit beats that bound.
    pub fn nearest(&self, x: f64, y: f64) -> Option<(u32, f64)> {
        if self.points.is_empty() {
            return None;
        }
        let side = self.side as isize;
        let cx = (((x + self.extent) / self.cell_width) as isize).clamp(0, side - 1);
        let cy = (((y + self.extent) / self.cell_width) as isize).clamp(0, side - 1);
        let mut best: Option<(u32, f64)> = None;
        for ring in 0..=self.side as isize {
            let mut visit = |gx: isize, gy: isize| {
                if gx < 0 || gy < 0 || gx >= side || gy >= side {
                    return;
                }
                let c = (gy * side + gx) as usize;
                for &idx in &self.order[self.starts[c] as usize..self.starts[c + 1] as usize] {
                    let p = self.points[idx as usize];
                    let (dx, dy) = (p[0] - x, p[1] - y);
                    let d2 = dx * dx + dy * dy;
                    if best.map_or(true, |(bi, bd)| d2 < bd || (d2 == bd && idx < bi)) {
                        best = Some((idx, d2));
                    }
                }
            };
            if ring == 0 {
                visit(cx, cy);
            } else {
                for gx in cx - ring..=cx + ring {
                    visit(gx, cy - ring);
                    visit(gx, cy + ring);
                }
                for gy in cy - ring + 1..=cy + ring - 1 {
                    visit(cx - ring, gy);
                    visit(cx + ring, gy);
                }
            }
            let reach = ring as f64 * self.cell_width;
            if let Some((_, bd)) = best {
                if bd <= reach * reach {
                    break;
                }
            }
        }
        best
    }
}

/// How stations compete for a UE. With one shared path-loss exponent the
/// argmax of P·B·d^{-α} is the argmin of d²/(P·B)^{2/α}; otherwise compare
/// log powers directly.
pub enum Selector {
    CommonExponent { inverse_weight_sq: Vec<f64> },
    General { log_power_bias: Vec<f64>, half_exponent: Vec<f64> },
}

impl Selector {
    pub fn for_config(cfg: &NetworkConfig) -> Self {
        if cfg.common_exponent().is_ok() {
            let alpha = cfg.tiers[0].pathloss_exponent;
            Selector::CommonExponent {
                inverse_weight_sq: cfg
                    .tiers
                    .iter()
                    .map(|t| (t.power * t.bias).powf(-2.0 / alpha))
                    .collect(),
            }
        } else {
            Selector::General {
                log_power_bias: cfg.tiers.iter().map(|t| (t.power * t.bias).ln()).collect(),
                half_exponent: cfg.tiers.iter().map(|t| 0.5 * t.pathloss_exponent).collect(),
            }
        }
    }
}

/// All tiers of one deployment realization.
pub struct BsField {
    pub tiers: Vec<TierStations>,
    selector: Selector,
}

impl BsField {
    pub fn new(tiers: Vec<TierStations>, selector: Selector) -> Self {
        Self { tiers, selector }
    }

    pub fn station_count(&self) -> usize {
        self.tiers.iter().map(|t| t.points.len()).sum()
    }

    pub fn station_position(&self, tier: u32, index: u32) -> [f64; 2] {
        self.tiers[tier as usize].points[index as usize]
    }

    /// Serving station at a position: argmax of biased received power over
    /// every station. Ties (including exact colocations, where the power is
    /// +∞) go to the lowest tier, then the lowest station index; both fall
    /// out of the strict comparisons against the scan order.
    pub fn strongest(&self, x: f64, y: f64) -> Option<(u32, u32)> {
        match &self.selector {
            Selector::CommonExponent { inverse_weight_sq } => {
                let mut best: Option<(f64, u32, u32)> = None;
                for (t, (tier, iw2)) in self.tiers.iter().zip(inverse_weight_sq).enumerate() {
                    if let Some((idx, d2)) = tier.nearest(x, y) {
                        let score = d2 * iw2;
                        if best.map_or(true, |(bs, _, _)| score < bs) {
                            best = Some((score, t as u32, idx));
                        }
                    }
                }
                best.map(|(_, t, i)| (t, i))
            }
            Selector::General { log_power_bias, half_exponent } => {
                let mut best: Option<(f64, u32, u32)> = None;
                for (t, tier) in self.tiers.iter().enumerate() {
                    if let Some((idx, d2)) = tier.nearest(x, y) {
                        let score = log_power_bias[t] - half_exponent[t] * d2.ln();
                        if best.map_or(true, |(bs, _, _)| score > bs) {
                            best = Some((score, t as u32, idx));
                        }
                    }
                }
                best.map(|(_, t, i)| (t, i))
            }
        }
    }
}

/// Free-function form of the association rule.
pub fn strongest_bs(field: &BsField, position: [f64; 2]) -> Option<(u32, u32)> {
    field.strongest(position[0], position[1])
}
