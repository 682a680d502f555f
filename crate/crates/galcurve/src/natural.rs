//! Reconstruction of a curve from its natural equations.
//!
//! Given curvature `kappa(s) > 0` and torsion `tau(s)`, the graph components
//! of the curve satisfy
//!
//! ```text
//! theta' = tau      y'' = kappa cos theta      z'' = kappa sin theta
//! ```
//!
//! where `theta` is the turning angle of the (isotropic) normal. This module
//! integrates the equivalent first-order system in
//! `(theta, y, y', z, z')` with a classical fixed-step fourth-order
//! Runge-Kutta scheme, taking every component to be zero at the start of the
//! domain. That normalization pins down the integration constants the
//! natural equations leave free, so the same inputs always reproduce the
//! same curve and family constructors degenerate into each other exactly.
//!
//! Node states *and* node derivatives are stored. Queries between nodes use
//! cubic Hermite interpolation of the state, and second/third derivatives
//! are assembled from the differential equations themselves (`kappa`, `tau`
//! and the interpolated angle) rather than by differencing the interpolant.
//! Extracting curvature and torsion from a reconstructed curve therefore
//! returns the inputs up to rounding, independent of the step size.

use crate::curve::{check_domain, Curve, CurveMeta, Repr};
use crate::error::{Error, Result};
use crate::frenet;
use crate::scalar::ScalarFn;

/// A pair of natural equations over a parameter interval.
#[derive(Debug, Clone)]
pub struct NaturalEquations {
    pub kappa: ScalarFn,
    pub tau: ScalarFn,
    pub domain: (f64, f64),
}

impl NaturalEquations {
    pub fn new(kappa: ScalarFn, tau: ScalarFn, domain: (f64, f64)) -> Result<Self> {
        check_domain(domain)?;
        Ok(NaturalEquations { kappa, tau, domain })
    }
}

/// Reconstructs the curve with the given natural equations, using `steps`
/// Runge-Kutta steps across the domain.
pub fn reconstruct(eqs: &NaturalEquations, steps: usize) -> Result<Curve> {
    let grid = integrate(eqs, steps)?;
    let meta = CurveMeta::new("reconstructed")
        .with("kappa", eqs.kappa.label())
        .with("tau", eqs.tau.label())
        .with("steps", steps);
    Curve::from_parts(meta, eqs.domain, Repr::Integrated(grid))
}

/// Reconstructs the curve, re-extracts curvature and torsion at `probes`
/// interior points, and returns the worst absolute deviation from the
/// inputs as `(kappa_error, tau_error)`.
pub fn round_trip_error(
    eqs: &NaturalEquations,
    steps: usize,
    probes: usize,
) -> Result<(f64, f64)> {
    if probes == 0 {
        return Err(Error::InvalidParam {
            name: "probes",
            reason: "need at least one probe point".into(),
        });
    }
    let curve = reconstruct(eqs, steps)?;
    let (s0, s1) = eqs.domain;
    let mut worst_kappa = 0.0f64;
    let mut worst_tau = 0.0f64;
    for j in 1..=probes {
        let s = s0 + (s1 - s0) * j as f64 / (probes + 1) as f64;
        let kappa_in = eqs.kappa.eval(s)?;
        let tau_in = eqs.tau.eval(s)?;
        let kappa_out = frenet::curvature(&curve, s)?;
        let tau_out = frenet::torsion(&curve, s)?;
        worst_kappa = worst_kappa.max((kappa_out - kappa_in).abs());
        worst_tau = worst_tau.max((tau_out - tau_in).abs());
    }
    Ok((worst_kappa, worst_tau))
}

/// Integration state sampled on a uniform grid: node values and node
/// derivatives of `(theta, y, y', z, z')`.
#[derive(Clone)]
pub(crate) struct StateGrid {
    s_min: f64,
    s_max: f64,
    h: f64,
    theta: Vec<f64>,
    y: Vec<f64>,
    yp: Vec<f64>,
    z: Vec<f64>,
    zp: Vec<f64>,
    /// Node derivatives of `theta`, `y'`, `z'` — that is, `tau`,
    /// `kappa cos theta`, `kappa sin theta` at the nodes.
    dtheta: Vec<f64>,
    dyp: Vec<f64>,
    dzp: Vec<f64>,
    kappa: ScalarFn,
    tau: ScalarFn,
}

/// Runs the integrator; `steps >= 2`.
pub(crate) fn integrate(eqs: &NaturalEquations, steps: usize) -> Result<StateGrid> {
    if steps < 2 {
        return Err(Error::InvalidParam {
            name: "steps",
            reason: format!("need at least 2 integration steps, got {steps}"),
        });
    }
    let (s0, s1) = eqs.domain;
    let h = (s1 - s0) / steps as f64;

    // kappa and tau at a point, with the positivity requirement enforced at
    // every evaluation the integrator makes.
    let coeffs = |s: f64| -> Result<(f64, f64)> {
        let k = eqs.kappa.eval(s)?;
        if !(k > 0.0) {
            return Err(Error::KappaNotPositive { s, value: k });
        }
        let t = eqs.tau.eval(s)?;
        Ok((k, t))
    };

    let mut grid = StateGrid {
        s_min: s0,
        s_max: s1,
        h,
        theta: Vec::with_capacity(steps + 1),
        y: Vec::with_capacity(steps + 1),
        yp: Vec::with_capacity(steps + 1),
        z: Vec::with_capacity(steps + 1),
        zp: Vec::with_capacity(steps + 1),
        dtheta: Vec::with_capacity(steps + 1),
        dyp: Vec::with_capacity(steps + 1),
        dzp: Vec::with_capacity(steps + 1),
        kappa: eqs.kappa.clone(),
        tau: eqs.tau.clone(),
    };

    // State vector (theta, y, y', z, z'); everything starts at zero.
    let mut u = [0.0f64; 5];
    let mut node_s = s0;
    let (mut k_node, mut t_node) = coeffs(node_s)?;

    for i in 0..=steps {
        grid.theta.push(u[0]);
        grid.y.push(u[1]);
        grid.yp.push(u[2]);
        grid.z.push(u[3]);
        grid.zp.push(u[4]);
        grid.dtheta.push(t_node);
        grid.dyp.push(k_node * u[0].cos());
        grid.dzp.push(k_node * u[0].sin());
        if i == steps {
            break;
        }

        let s_mid = s0 + (i as f64 + 0.5) * h;
        // Land the final node on the right endpoint exactly, so coefficient
        // functions are never evaluated a rounding error past the domain.
        let s_next = if i + 1 == steps {
            s1
        } else {
            s0 + (i + 1) as f64 * h
        };
        let (k_mid, t_mid) = coeffs(s_mid)?;
        let (k_end, t_end) = coeffs(s_next)?;

        let d1 = slope(&u, k_node, t_node);
        let d2 = slope(&axpy(&u, &d1, 0.5 * h), k_mid, t_mid);
        let d3 = slope(&axpy(&u, &d2, 0.5 * h), k_mid, t_mid);
        let d4 = slope(&axpy(&u, &d3, h), k_end, t_end);
        for j in 0..5 {
            u[j] += h / 6.0 * (d1[j] + 2.0 * d2[j] + 2.0 * d3[j] + d4[j]);
        }
        if u.iter().any(|v| !v.is_finite()) {
            return Err(Error::Diverged {
                last_good_s: node_s,
            });
        }

        node_s = s_next;
        k_node = k_end;
        t_node = t_end;
    }

    Ok(grid)
}

fn slope(u: &[f64; 5], kappa: f64, tau: f64) -> [f64; 5] {
    [
        tau,
        u[2],
        kappa * u[0].cos(),
        u[4],
        kappa * u[0].sin(),
    ]
}

fn axpy(u: &[f64; 5], d: &[f64; 5], c: f64) -> [f64; 5] {
    let mut out = [0.0; 5];
    for j in 0..5 {
        out[j] = u[j] + c * d[j];
    }
    out
}

impl StateGrid {
    fn segments(&self) -> usize {
        self.theta.len() - 1
    }

    /// Segment index and local coordinate for a query parameter. Queries a
    /// rounding error outside the grid land on the nearest segment.
    fn locate(&self, s: f64) -> (usize, f64) {
        let raw = ((s - self.s_min) / self.h).floor();
        let i = (raw as isize).clamp(0, self.segments() as isize - 1) as usize;
        let t = (s - (self.s_min + i as f64 * self.h)) / self.h;
        (i, t)
    }

    /// Cubic Hermite interpolation of one state component. At the nodes the
    /// basis collapses, so node values are returned exactly.
    fn hermite(&self, v: &[f64], d: &[f64], s: f64) -> f64 {
        let (i, t) = self.locate(s);
        let omt = 1.0 - t;
        let h00 = (1.0 + 2.0 * t) * omt * omt;
        let h10 = t * omt * omt;
        let h01 = t * t * (3.0 - 2.0 * t);
        let h11 = t * t * (t - 1.0);
        h00 * v[i] + self.h * h10 * d[i] + h01 * v[i + 1] + self.h * h11 * d[i + 1]
    }

    pub(crate) fn position(&self, s: f64) -> (f64, f64) {
        (
            self.hermite(&self.y, &self.yp, s),
            self.hermite(&self.z, &self.zp, s),
        )
    }

    pub(crate) fn d1(&self, s: f64) -> (f64, f64) {
        (
            self.hermite(&self.yp, &self.dyp, s),
            self.hermite(&self.zp, &self.dzp, s),
        )
    }

    fn theta_at(&self, s: f64) -> f64 {
        self.hermite(&self.theta, &self.dtheta, s)
    }

    /// Second derivatives straight from the differential equations:
    /// `(kappa cos theta, kappa sin theta)`.
    pub(crate) fn d2(&self, s: f64) -> Result<(f64, f64)> {
        let k = self.kappa.eval(s)?;
        let th = self.theta_at(s);
        Ok((k * th.cos(), k * th.sin()))
    }

    /// Third derivatives by differentiating the second analytically;
    /// `kappa'` comes from a finite-difference stencil, and cancels exactly
    /// in the torsion determinant.
    pub(crate) fn d3(&self, s: f64) -> Result<(f64, f64)> {
        let k = self.kappa.eval(s)?;
        let t = self.tau.eval(s)?;
        let kp = self.kappa.derivative(s, self.s_min, self.s_max)?;
        let th = self.theta_at(s);
        let (c, n) = (th.cos(), th.sin());
        Ok((kp * c - k * t * n, kp * n + k * t * c))
    }
}
