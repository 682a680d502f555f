//! Smarandache curves: position vectors assembled from a moving frame.
//!
//! For a frame `(T, N, B)` the three derived curves are the unit
//! combinations `(T+N)/||T+N||`, `(T+B)/||T+B||` and `(T+N+B)/||T+N+B||`.
//! `N` and `B` are isotropic while `T` has first component `1`, so each sum
//! already has Galilean norm exactly one and the normalization is the
//! identity — it is kept in the formulas for the formal structure, and the
//! division by `1.0` preserves every bit.

use std::fmt;
use std::str::FromStr;

use crate::curve::{uniform_grid, Curve};
use crate::error::{Error, Result};
use crate::frenet::{self, FrenetFrame, KAPPA_ADMISSIBLE};
use crate::gal3::GVec3;
use crate::polyline::{Polyline, PolylineMeta, Sample};

/// Which frame combination to build.
#[allow(clippy::upper_case_acronyms)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmarandacheKind {
    TN,
    TB,
    TNB,
}

impl SmarandacheKind {
    pub const ALL: [SmarandacheKind; 3] =
        [SmarandacheKind::TN, SmarandacheKind::TB, SmarandacheKind::TNB];

    pub fn label(self) -> &'static str {
        match self {
            SmarandacheKind::TN => "tn",
            SmarandacheKind::TB => "tb",
            SmarandacheKind::TNB => "tnb",
        }
    }
}

impl fmt::Display for SmarandacheKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SmarandacheKind {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text.to_ascii_lowercase().as_str() {
            "tn" => Ok(SmarandacheKind::TN),
            "tb" => Ok(SmarandacheKind::TB),
            "tnb" => Ok(SmarandacheKind::TNB),
            other => Err(Error::BadSpec(format!(
                "unknown frame combination '{other}'; expected tn, tb or tnb"
            ))),
        }
    }
}

/// The Smarandache position vector of one frame.
pub fn smarandache_point(frame: &FrenetFrame, kind: SmarandacheKind) -> GVec3 {
    let sum = match kind {
        SmarandacheKind::TN => frame.tangent + frame.normal,
        SmarandacheKind::TB => frame.tangent + frame.binormal,
        SmarandacheKind::TNB => frame.tangent + frame.normal + frame.binormal,
    };
    sum / sum.norm()
}

/// Samples the Smarandache curve of `curve` at `samples >= 2` uniform
/// parameters. Fails at the first grid point whose curvature falls below
/// the admissibility floor.
pub fn smarandache_curve(
    curve: &Curve,
    kind: SmarandacheKind,
    samples: usize,
) -> Result<Polyline> {
    if samples < 2 {
        return Err(Error::InvalidParam {
            name: "samples",
            reason: format!("need at least 2 sample points, got {samples}"),
        });
    }
    let (lo, hi) = curve.domain();
    let mut pts = Vec::with_capacity(samples);
    for &s in &uniform_grid(lo, hi, samples) {
        let frame = frenet_frame_checked(curve, s)?;
        let p = smarandache_point(&frame, kind);
        pts.push(Sample {
            s,
            x: p.x,
            y: p.y,
            z: p.z,
        });
    }
    let mut meta = PolylineMeta::new(
        curve.meta().name.clone(),
        format!("smarandache-{}", kind.label()),
    );
    meta.params = curve.meta().params.clone();
    Polyline::new(meta, pts)
}

fn frenet_frame_checked(curve: &Curve, s: f64) -> Result<FrenetFrame> {
    let frame = frenet::frenet_frame(curve, s)?;
    if frame.kappa < KAPPA_ADMISSIBLE {
        return Err(Error::KappaTooSmall {
            s,
            kappa: frame.kappa,
        });
    }
    Ok(frame)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{example_anti_salkowski, example_general_helix, Curve, CurveMeta};
    use crate::frenet::frenet_frame;

    #[test]
    fn example1_points_at_unit_parameter() {
        let c = example_general_helix();
        let f = frenet_frame(&c, 1.0).unwrap();
        let tn = smarandache_point(&f, SmarandacheKind::TN);
        let tb = smarandache_point(&f, SmarandacheKind::TB);
        let tnb = smarandache_point(&f, SmarandacheKind::TNB);
        assert_eq!((tn.x, tn.y, tn.z), (1.0, 1.0, -0.5));
        assert_eq!((tb.x, tb.y, tb.z), (1.0, 0.0, 0.5));
        assert_eq!((tnb.x, tnb.y, tnb.z), (1.0, 1.0, 0.5));
    }

    #[test]
    fn closed_forms_across_example1() {
        let c = example_general_helix();
        for &s in &uniform_grid(0.5, 3.0, 101) {
            let f = frenet_frame(&c, s).unwrap();
            let a = 2.0 * s.ln();
            let tn = smarandache_point(&f, SmarandacheKind::TN);
            assert!((tn.y - (0.5 * a.sin() + a.cos())).abs() < 1e-12);
            assert!((tn.z - (-0.5 * a.cos() + a.sin())).abs() < 1e-12);
            let tb = smarandache_point(&f, SmarandacheKind::TB);
            assert!((tb.y - (0.5 * a.sin() - a.sin())).abs() < 1e-12);
            assert!((tb.z - (-0.5 * a.cos() + a.cos())).abs() < 1e-12);
            let tnb = smarandache_point(&f, SmarandacheKind::TNB);
            assert!((tnb.y - (0.5 * a.sin() + a.cos() - a.sin())).abs() < 1e-12);
            assert!((tnb.z - (-0.5 * a.cos() + a.sin() + a.cos())).abs() < 1e-12);
        }
    }

    #[test]
    fn closed_forms_across_example2() {
        let c = example_anti_salkowski();
        for &s in &uniform_grid(0.0, 2.0, 101) {
            let f = frenet_frame(&c, s).unwrap();
            let e = (-s).exp();
            let (co, si) = ((2.0 * s).cos(), (2.0 * s).sin());
            let (ty, tz) = (-(e / 5.0) * (co - 2.0 * si), -(e / 5.0) * (2.0 * co + si));
            let tn = smarandache_point(&f, SmarandacheKind::TN);
            assert!((tn.y - (ty + co)).abs() < 1e-12);
            assert!((tn.z - (tz + si)).abs() < 1e-12);
            let tb = smarandache_point(&f, SmarandacheKind::TB);
            assert!((tb.y - (ty - si)).abs() < 1e-12);
            assert!((tb.z - (tz + co)).abs() < 1e-12);
            let tnb = smarandache_point(&f, SmarandacheKind::TNB);
            assert!((tnb.y - (ty + co - si)).abs() < 1e-12);
            assert!((tnb.z - (tz + si + co)).abs() < 1e-12);
        }
    }

    #[test]
    fn first_component_is_exactly_one() {
        let c = example_anti_salkowski();
        for kind in SmarandacheKind::ALL {
            let pl = smarandache_curve(&c, kind, 64).unwrap();
            for p in pl.samples() {
                assert_eq!(p.x, 1.0);
            }
        }
    }

    #[test]
    fn tnb_is_the_linear_combination_of_tn_and_tb() {
        let c = example_general_helix();
        for &s in &uniform_grid(0.5, 3.0, 33) {
            let f = frenet_frame(&c, s).unwrap();
            let tn = smarandache_point(&f, SmarandacheKind::TN);
            let tb = smarandache_point(&f, SmarandacheKind::TB);
            let tnb = smarandache_point(&f, SmarandacheKind::TNB);
            let combo = tn + tb - f.tangent;
            assert!((combo.y - tnb.y).abs() < 1e-12);
            assert!((combo.z - tnb.z).abs() < 1e-12);
            assert_eq!(combo.x, 1.0);
        }
    }

    #[test]
    fn sampling_metadata_names_the_source_curve() {
        let pl = smarandache_curve(&example_general_helix(), SmarandacheKind::TB, 16).unwrap();
        assert_eq!(pl.meta().source, "example1");
        assert_eq!(pl.meta().kind, "smarandache-tb");
    }

    #[test]
    fn inadmissible_grid_points_abort_with_the_parameter() {
        let line = Curve::from_graph(CurveMeta::new("line"), (0.25, 1.0), |s| (2.0 * s, 3.0))
            .unwrap();
        match smarandache_curve(&line, SmarandacheKind::TN, 8) {
            Err(Error::KappaTooSmall { s, .. }) => assert_eq!(s, 0.25),
            other => panic!("expected curvature abort, got {other:?}"),
        }
    }

    #[test]
    fn kind_parsing_round_trips() {
        for kind in SmarandacheKind::ALL {
            assert_eq!(kind.label().parse::<SmarandacheKind>().unwrap(), kind);
        }
        assert_eq!("TNB".parse::<SmarandacheKind>().unwrap(), SmarandacheKind::TNB);
        assert!("nb".parse::<SmarandacheKind>().is_err());
    }
}
