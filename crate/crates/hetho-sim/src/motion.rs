//! UE motion: walking models, speed sampling, and the reflecting boundary.

use std::f64::consts::TAU;

use hetho_core::SpeedLaw;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Longest a random-direction UE keeps a heading, in seconds. Hold
/// durations are uniform on [0, this].
pub const MAX_HEADING_HOLD: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WalkingModel {
    /// Heading drawn once, never changed.
    StraightLine,
    /// Memoryless random-direction walk: on hold expiry draw a fresh
    /// heading uniform on [0, 2π) and a fresh hold uniform on [0, 100] s.
    /// No pause time.
    Rwp,
}

/// One user's kinematic state. Velocity is the heading premultiplied by the
/// speed so stepping needs no trigonometry; `heading()` recovers the angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UeState {
    pub position: [f64; 2],
    pub velocity: [f64; 2],
    pub speed: f64,
    pub heading_hold_remaining: f64,
    pub serving: Option<(u32, u32)>,
}

impl UeState {
    pub fn new(position: [f64; 2], speed: f64, heading: f64, hold: f64) -> Self {
        Self {
            position,
            velocity: [speed * heading.cos(), speed * heading.sin()],
            speed,
            heading_hold_remaining: hold,
            serving: None,
        }
    }

    pub fn heading(&self) -> f64 {
        self.velocity[1].atan2(self.velocity[0])
    }
}

/// Draw one speed from the law.
pub fn sample_speed(law: &SpeedLaw, rng: &mut impl Rng) -> f64 {
    match law {
        SpeedLaw::Constant { value } => *value,
        SpeedLaw::Uniform { mean } => 2.0 * mean * rng.gen::<f64>(),
        SpeedLaw::Table { points } => {
            let total: f64 = points.iter().map(|(_, w)| w).sum();
            let mut pick = rng.gen::<f64>() * total;
            for &(v, w) in points {
                pick -= w;
                if pick <= 0.0 {
                    return v;
                }
            }
            points.last().map(|&(v, _)| v).unwrap_or(0.0)
        }
    }
}

/// Uniform position on the disk of the given radius.
pub fn place_uniform_in_disk(radius: f64, rng: &mut impl Rng) -> [f64; 2] {
    let r = radius * rng.gen::<f64>().sqrt();
    let phi = rng.gen_range(0.0..TAU);
    [r * phi.cos(), r * phi.sin()]
}

/// Advance one time step: expire the heading hold (random-direction model
/// only), move, and reflect specularly off the circular motion boundary.
/// `redraw_speed` controls whether a heading change also resamples the
/// speed from the law.
pub fn step_ue(
    ue: &mut UeState,
    model: WalkingModel,
    redraw_speed: bool,
    law: &SpeedLaw,
    time_step: f64,
    reflect_radius: f64,
    rng: &mut impl Rng,
) {
    if model == WalkingModel::Rwp {
        ue.heading_hold_remaining -= time_step;
        if ue.heading_hold_remaining <= 0.0 {
            if redraw_speed {
                ue.speed = sample_speed(law, rng);
            }
            let heading = rng.gen_range(0.0..TAU);
            ue.velocity = [ue.speed * heading.cos(), ue.speed * heading.sin()];
            ue.heading_hold_remaining = MAX_HEADING_HOLD * rng.gen::<f64>();
        }
    }
    ue.position[0] += ue.velocity[0] * time_step;
    ue.position[1] += ue.velocity[1] * time_step;
    reflect(ue, reflect_radius);
}

/// Fold any overshoot back across the boundary circle and mirror the
/// velocity about the radial normal. One fold suffices for steps much
/// smaller than the radius; the loop covers the corner cases.
fn reflect(ue: &mut UeState, reflect_radius: f64) {
    loop {
        let r2 = ue.position[0] * ue.position[0] + ue.position[1] * ue.position[1];
        if r2 <= reflect_radius * reflect_radius {
            return;
        }
        let r = r2.sqrt();
        let nx = ue.position[0] / r;
        let ny = ue.position[1] / r;
        let fold = 2.0 * reflect_radius - r;
        ue.position = [nx * fold, ny * fold];
        let vn = ue.velocity[0] * nx + ue.velocity[1] * ny;
        ue.velocity[0] -= 2.0 * vn * nx;
        ue.velocity[1] -= 2.0 * vn * ny;
    }
}
