//! Five-point finite-difference stencils on uniform grids.
//!
//! Derivatives of orders one to three are taken from the degree-four
//! interpolating polynomial through five equally spaced samples, which makes
//! every stencil exact on polynomials up to degree four. Near a domain edge
//! the same five points are kept and the anchor shifts, so accuracy degrades
//! gracefully instead of falling off a cliff: orders one and two stay at
//! fourth order in the interior, order three is second order.

/// Relative step scale; the actual step is `step_at`.
pub const STEP_SCALE: f64 = 1e-3;

/// Differentiation step at `s`: `1e-3 * max(1, |s|)`.
pub fn step_at(s: f64) -> f64 {
    STEP_SCALE * s.abs().max(1.0)
}

/// Derivative order supported by the stencils (and by curve queries).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivOrder {
    First,
    Second,
    Third,
}

impl DerivOrder {
    pub const ALL: [DerivOrder; 3] = [DerivOrder::First, DerivOrder::Second, DerivOrder::Third];

    pub fn n(self) -> u8 {
        match self {
            DerivOrder::First => 1,
            DerivOrder::Second => 2,
            DerivOrder::Third => 3,
        }
    }
}

/// A placed stencil: five sample abscissae, the index of the one the
/// derivative is taken at, and the spacing.
#[derive(Debug, Clone, Copy)]
pub struct Stencil {
    pub nodes: [f64; 5],
    pub anchor: usize,
    pub h: f64,
}

/// Places a five-point stencil at `s` inside `[lo, hi]`, shifting the anchor
/// off-center near the edges. The query point is always one of the nodes.
pub fn stencil(s: f64, lo: f64, hi: f64) -> Stencil {
    debug_assert!(hi > lo, "stencil needs a non-degenerate interval");
    let h = step_at(s).min((hi - lo) / 4.0);
    let slack = 1e-7 * h;
    // Prefer the centered stencil, then the least skewed one that fits.
    let anchor = [2usize, 1, 3, 0, 4]
        .into_iter()
        .find(|&a| s - a as f64 * h >= lo - slack && s + (4 - a) as f64 * h <= hi + slack)
        .unwrap_or_else(|| (((s - lo) / h).round() as usize).min(4));
    let mut nodes = [0.0; 5];
    for (i, node) in nodes.iter_mut().enumerate() {
        *node = s + (i as f64 - anchor as f64) * h;
    }
    Stencil { nodes, anchor, h }
}

// Stencil weights for the derivative at node `anchor` of five uniform
// samples. Rows are anchors 0..=4; the shared denominators live in
// `combine`.
const D1: [[f64; 5]; 5] = [
    [-25.0, 48.0, -36.0, 16.0, -3.0],
    [-3.0, -10.0, 18.0, -6.0, 1.0],
    [1.0, -8.0, 0.0, 8.0, -1.0],
    [-1.0, 6.0, -18.0, 10.0, 3.0],
    [3.0, -16.0, 36.0, -48.0, 25.0],
];

const D2: [[f64; 5]; 5] = [
    [35.0, -104.0, 114.0, -56.0, 11.0],
    [11.0, -20.0, 6.0, 4.0, -1.0],
    [-1.0, 16.0, -30.0, 16.0, -1.0],
    [-1.0, 4.0, 6.0, -20.0, 11.0],
    [11.0, -56.0, 114.0, -104.0, 35.0],
];

const D3: [[f64; 5]; 5] = [
    [-5.0, 18.0, -24.0, 14.0, -3.0],
    [-3.0, 10.0, -12.0, 6.0, -1.0],
    [-1.0, 2.0, 0.0, -2.0, 1.0],
    [1.0, -6.0, 12.0, -10.0, 3.0],
    [3.0, -14.0, 24.0, -18.0, 5.0],
];

/// Combines five samples taken at a stencil's nodes into the derivative of
/// the requested order at the anchor node.
pub fn combine(order: DerivOrder, anchor: usize, h: f64, samples: &[f64; 5]) -> f64 {
    let (weights, denom) = match order {
        DerivOrder::First => (&D1[anchor], 12.0 * h),
        DerivOrder::Second => (&D2[anchor], 12.0 * h * h),
        DerivOrder::Third => (&D3[anchor], 2.0 * h * h * h),
    };
    let mut acc = 0.0;
    for (w, f) in weights.iter().zip(samples) {
        acc += w * f;
    }
    acc / denom
}
