//! The Frenet apparatus: derivatives, curvature, torsion, the moving frame,
//! frame-equation residuals and admissibility checks.
//!
//! For a graph curve `(s, y, z)` the tangent is `T = (1, y', z')`, the
//! curvature is the norm of the (isotropic) second derivative,
//! `kappa = sqrt(y''^2 + z''^2)`, the principal normal is
//! `N = (0, y'', z'')/kappa`, and the binormal `B = (0, -z'', y'')/kappa`
//! completes the frame; the torsion is `tau = (y'' z''' - z'' y''')/kappa^2`.
//! The frame satisfies `T' = kappa N`, `N' = tau B`, `B' = -tau N`.

use crate::curve::{uniform_grid, Curve, Repr};
use crate::error::{Error, Result};
use crate::fd::{self, DerivOrder};
use crate::gal3::GVec3;

/// Below this curvature a frame is numerically meaningless and frame
/// queries refuse to answer.
pub const KAPPA_MIN: f64 = 1e-9;

/// Curvature floor for the global admissibility verdict (and for sampling
/// derived curves). Deliberately far above [`KAPPA_MIN`]: pointwise frame
/// queries still work on curves that fail the stricter global check.
pub const KAPPA_ADMISSIBLE: f64 = 1e-6;

/// The moving frame at one parameter value.
#[derive(Debug, Clone, Copy)]
pub struct FrenetFrame {
    pub s: f64,
    pub tangent: GVec3,
    pub normal: GVec3,
    pub binormal: GVec3,
    pub kappa: f64,
    pub tau: f64,
}

/// Derivative of the curve at `s`. The first component is `1` for order one
/// and exactly `0` for orders two and three — higher derivatives of a graph
/// curve are isotropic by construction, not by rounding.
pub fn derivatives(curve: &Curve, s: f64, order: DerivOrder) -> Result<GVec3> {
    curve.check_s(s)?;
    let (dy, dz) = match curve.repr() {
        Repr::Closed(cf) => match order {
            DerivOrder::First => (cf.d1)(s),
            DerivOrder::Second => (cf.d2)(s),
            DerivOrder::Third => (cf.d3)(s),
        },
        Repr::Integrated(grid) => match order {
            DerivOrder::First => grid.d1(s),
            DerivOrder::Second => grid.d2(s)?,
            DerivOrder::Third => grid.d3(s)?,
        },
        Repr::Graph(_) => {
            let (lo, hi) = curve.domain();
            let st = fd::stencil(s, lo, hi);
            let mut ys = [0.0; 5];
            let mut zs = [0.0; 5];
            for (i, &x) in st.nodes.iter().enumerate() {
                let (y, z) = curve.position_raw(x);
                ys[i] = y;
                zs[i] = z;
            }
            (
                fd::combine(order, st.anchor, st.h, &ys),
                fd::combine(order, st.anchor, st.h, &zs),
            )
        }
    };
    if dy.is_finite() && dz.is_finite() {
        let first = if order == DerivOrder::First { 1.0 } else { 0.0 };
        Ok(GVec3::new(first, dy, dz))
    } else {
        Err(Error::NonFinite {
            what: "derivative",
            s,
        })
    }
}

/// Curvature without the frame-threshold check; used by the admissibility
/// scan, which wants the value even when it is tiny.
pub(crate) fn curvature_raw(curve: &Curve, s: f64) -> Result<f64> {
    Ok(derivatives(curve, s, DerivOrder::Second)?.norm())
}

/// Curvature at `s`; errors with [`Error::KappaTooSmall`] below
/// [`KAPPA_MIN`].
pub fn curvature(curve: &Curve, s: f64) -> Result<f64> {
    let kappa = curvature_raw(curve, s)?;
    if kappa < KAPPA_MIN {
        Err(Error::KappaTooSmall { s, kappa })
    } else {
        Ok(kappa)
    }
}

/// Torsion at `s`, by the two-by-two determinant of the second and third
/// derivative components divided by the squared curvature.
pub fn torsion(curve: &Curve, s: f64) -> Result<f64> {
    let d2 = derivatives(curve, s, DerivOrder::Second)?;
    let kappa = d2.norm();
    if kappa < KAPPA_MIN {
        return Err(Error::KappaTooSmall { s, kappa });
    }
    let d3 = derivatives(curve, s, DerivOrder::Third)?;
    let det = d2.y * d3.z - d2.z * d3.y;
    let tau = det / (kappa * kappa);
    if tau.is_finite() {
        Ok(tau)
    } else {
        Err(Error::NonFinite { what: "torsion", s })
    }
}

/// The full frame at `s`. The binormal is assembled from the normal's
/// components, which agrees bit-for-bit with `cross(T, N)`.
pub fn frenet_frame(curve: &Curve, s: f64) -> Result<FrenetFrame> {
    let tangent = derivatives(curve, s, DerivOrder::First)?;
    let d2 = derivatives(curve, s, DerivOrder::Second)?;
    let kappa = d2.norm();
    if kappa < KAPPA_MIN {
        return Err(Error::KappaTooSmall { s, kappa });
    }
    let normal = GVec3::new(0.0, d2.y / kappa, d2.z / kappa);
    let binormal = GVec3::new(0.0, -normal.z, normal.y);
    let d3 = derivatives(curve, s, DerivOrder::Third)?;
    let det = d2.y * d3.z - d2.z * d3.y;
    let tau = det / (kappa * kappa);
    if !tau.is_finite() {
        return Err(Error::NonFinite { what: "torsion", s });
    }
    Ok(FrenetFrame {
        s,
        tangent,
        normal,
        binormal,
        kappa,
        tau,
    })
}

/// Worst-case residuals of the three frame equations at `s`, measured with
/// the Galilean norm (the differences are isotropic, so this is Euclidean
/// in the last two components).
#[derive(Debug, Clone, Copy)]
pub struct FrameResiduals {
    /// `|| T' - kappa N ||`
    pub tangent: f64,
    /// `|| N' - tau B ||`
    pub normal: f64,
    /// `|| B' + tau N ||`
    pub binormal: f64,
}

impl FrameResiduals {
    pub fn worst(&self) -> f64 {
        self.tangent.max(self.normal).max(self.binormal)
    }
}

/// Checks the frame equations at `s` by differencing the frame fields over
/// a five-point stencil.
pub fn frenet_residuals(curve: &Curve, s: f64) -> Result<FrameResiduals> {
    curve.check_s(s)?;
    let (lo, hi) = curve.domain();
    let st = fd::stencil(s, lo, hi);

    // Frame fields sampled per component; the first components are constant
    // (1 or 0) and their stencil derivative is exactly zero.
    let mut ty = [0.0; 5];
    let mut tz = [0.0; 5];
    let mut ny = [0.0; 5];
    let mut nz = [0.0; 5];
    let mut by = [0.0; 5];
    let mut bz = [0.0; 5];
    let mut center = None;
    for (i, &x) in st.nodes.iter().enumerate() {
        let f = frenet_frame(curve, x)?;
        ty[i] = f.tangent.y;
        tz[i] = f.tangent.z;
        ny[i] = f.normal.y;
        nz[i] = f.normal.z;
        by[i] = f.binormal.y;
        bz[i] = f.binormal.z;
        if i == st.anchor {
            center = Some(f);
        }
    }
    let f = center.expect("anchor is one of the five nodes");

    let d = |vals: &[f64; 5]| fd::combine(DerivOrder::First, st.anchor, st.h, vals);
    let residual = |dy: f64, dz: f64, ref_y: f64, ref_z: f64, what: &'static str| -> Result<f64> {
        let ry = dy - ref_y;
        let rz = dz - ref_z;
        if ry.is_finite() && rz.is_finite() {
            Ok(GVec3::new(0.0, ry, rz).norm())
        } else {
            Err(Error::NonFinite { what, s })
        }
    };

    Ok(FrameResiduals {
        tangent: residual(
            d(&ty),
            d(&tz),
            f.kappa * f.normal.y,
            f.kappa * f.normal.z,
            "tangent residual",
        )?,
        normal: residual(
            d(&ny),
            d(&nz),
            f.tau * f.binormal.y,
            f.tau * f.binormal.z,
            "normal residual",
        )?,
        binormal: residual(
            d(&by),
            d(&bz),
            -f.tau * f.normal.y,
            -f.tau * f.normal.z,
            "binormal residual",
        )?,
    })
}

/// Why a curve failed the admissibility check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdmissibilityIssue {
    KappaTooSmall,
    NonFiniteDerivative,
    EmptyDomain,
}

impl std::fmt::Display for AdmissibilityIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            AdmissibilityIssue::KappaTooSmall => "curvature below threshold",
            AdmissibilityIssue::NonFiniteDerivative => "non-finite derivative",
            AdmissibilityIssue::EmptyDomain => "empty domain",
        })
    }
}

/// Result of scanning a curve's domain for admissibility.
#[derive(Debug, Clone)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub grid_points: usize,
    /// Smallest curvature seen among grid points where it was computable.
    pub min_kappa: Option<f64>,
    /// First grid parameter that failed, if any.
    pub offending_s: Option<f64>,
    pub reason: Option<AdmissibilityIssue>,
}

/// Scans `grid_points >= 2` uniform points: the curve is admissible iff the
/// first three derivatives are finite and the curvature stays at or above
/// [`KAPPA_ADMISSIBLE`] everywhere on the grid.
pub fn check_admissible(curve: &Curve, grid_points: usize) -> Result<AdmissibilityReport> {
    if grid_points < 2 {
        return Err(Error::InvalidParam {
            name: "grid_points",
            reason: format!("need at least 2 grid points, got {grid_points}"),
        });
    }
    let (lo, hi) = curve.domain();
    let mut min_kappa: Option<f64> = None;
    let mut offending: Option<(f64, AdmissibilityIssue)> = None;
    for &s in &uniform_grid(lo, hi, grid_points) {
        let issue = (|| {
            let d2 = match derivatives(curve, s, DerivOrder::Second) {
                Ok(v) => v,
                Err(_) => return Some(AdmissibilityIssue::NonFiniteDerivative),
            };
            if derivatives(curve, s, DerivOrder::First).is_err()
                || derivatives(curve, s, DerivOrder::Third).is_err()
            {
                return Some(AdmissibilityIssue::NonFiniteDerivative);
            }
            let kappa = d2.norm();
            min_kappa = Some(min_kappa.map_or(kappa, |m: f64| m.min(kappa)));
            if kappa < KAPPA_ADMISSIBLE {
                return Some(AdmissibilityIssue::KappaTooSmall);
            }
            None
        })();
        if let (Some(kind), None) = (issue, &offending) {
            offending = Some((s, kind));
        }
    }
    Ok(AdmissibilityReport {
        admissible: offending.is_none(),
        grid_points,
        min_kappa,
        offending_s: offending.map(|(s, _)| s),
        reason: offending.map(|(_, kind)| kind),
    })
}
