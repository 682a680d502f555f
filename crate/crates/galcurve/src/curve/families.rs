//! The special curve families, parametrized by their natural equations.
//!
//! All four families share one normalization: the reconstruction constants
//! are chosen so that the turning angle and every antiderivative vanish at
//! the start of the domain. Two members of the same family over the same
//! domain therefore differ only through their parameters, and a family with
//! its parameters frozen to constants coincides with the circular helix
//! exactly — not merely up to a rigid motion.

use crate::error::{Error, Result};
use crate::natural::{self, NaturalEquations};
use crate::scalar::ScalarFn;

use super::{check_domain, Curve, CurveMeta, Repr};

/// Parameter sets for the four families.
#[derive(Debug, Clone)]
pub enum FamilyParams {
    /// Curvature `kappa(s)` with torsion locked to `tau = m * kappa`.
    GeneralHelix { m: f64, kappa: ScalarFn },
    /// Constant curvature and constant torsion.
    CircularHelix { kappa0: f64, tau0: f64 },
    /// Constant curvature, arbitrary torsion.
    Salkowski { kappa0: f64, tau: ScalarFn },
    /// Arbitrary curvature, constant torsion.
    AntiSalkowski { kappa: ScalarFn, tau0: f64 },
}

impl FamilyParams {
    pub fn kind_name(&self) -> &'static str {
        match self {
            FamilyParams::GeneralHelix { .. } => "general-helix",
            FamilyParams::CircularHelix { .. } => "circular-helix",
            FamilyParams::Salkowski { .. } => "salkowski",
            FamilyParams::AntiSalkowski { .. } => "anti-salkowski",
        }
    }
}

/// Builds any family member; `steps` is the integration step count for the
/// families that need numeric reconstruction (the circular helix is closed
/// form and ignores it).
pub fn make_family(params: FamilyParams, domain: (f64, f64), steps: usize) -> Result<Curve> {
    match params {
        FamilyParams::GeneralHelix { m, kappa } => make_general_helix(m, kappa, domain, steps),
        FamilyParams::CircularHelix { kappa0, tau0 } => make_circular_helix(kappa0, tau0, domain),
        FamilyParams::Salkowski { kappa0, tau } => make_salkowski(kappa0, tau, domain, steps),
        FamilyParams::AntiSalkowski { kappa, tau0 } => make_anti_salkowski(kappa, tau0, domain, steps),
    }
}

/// The circular helix: constant curvature `kappa0 > 0`, constant torsion
/// `tau0 != 0`, in closed form.
///
/// With `phi = tau0 * (s - s_min)` the components are
/// `y = (kappa0/tau0^2)(1 - cos phi)` and
/// `z = (kappa0/tau0) (s - s_min) - (kappa0/tau0^2) sin phi`,
/// which is exactly the constant-coefficient solution of the natural
/// equations under the shared vanishing-at-`s_min` normalization.
pub fn make_circular_helix(kappa0: f64, tau0: f64, domain: (f64, f64)) -> Result<Curve> {
    check_domain(domain)?;
    require_positive("kappa0", kappa0)?;
    if !tau0.is_finite() || tau0 == 0.0 {
        return Err(Error::InvalidParam {
            name: "tau0",
            reason: format!("must be finite and nonzero, got {tau0}"),
        });
    }
    let s0 = domain.0;
    let (k, t) = (kappa0, tau0);
    let meta = CurveMeta::new("circular-helix")
        .with("kappa0", kappa0)
        .with("tau0", tau0);
    Curve::from_closed_form(
        meta,
        domain,
        move |s| {
            let phi = t * (s - s0);
            (
                (k / (t * t)) * (1.0 - phi.cos()),
                (k / t) * (s - s0) - (k / (t * t)) * phi.sin(),
            )
        },
        move |s| {
            let phi = t * (s - s0);
            ((k / t) * phi.sin(), (k / t) * (1.0 - phi.cos()))
        },
        move |s| {
            let phi = t * (s - s0);
            (k * phi.cos(), k * phi.sin())
        },
        move |s| {
            let phi = t * (s - s0);
            (-k * t * phi.sin(), k * t * phi.cos())
        },
    )
}

/// A general helix: torsion proportional to curvature, `tau = m * kappa`
/// with `m != 0`.
pub fn make_general_helix(m: f64, kappa: ScalarFn, domain: (f64, f64), steps: usize) -> Result<Curve> {
    if !m.is_finite() || m == 0.0 {
        return Err(Error::InvalidParam {
            name: "m",
            reason: format!("must be finite and nonzero, got {m}"),
        });
    }
    let tau = kappa.scaled(m);
    let meta = CurveMeta::new("general-helix")
        .with("m", m)
        .with("kappa", kappa.label());
    integrate_family(meta, kappa, tau, domain, steps)
}

/// A Salkowski curve: constant curvature `kappa0 > 0`, arbitrary torsion.
pub fn make_salkowski(kappa0: f64, tau: ScalarFn, domain: (f64, f64), steps: usize) -> Result<Curve> {
    require_positive("kappa0", kappa0)?;
    let meta = CurveMeta::new("salkowski")
        .with("kappa0", kappa0)
        .with("tau", tau.label());
    integrate_family(meta, ScalarFn::constant(kappa0), tau, domain, steps)
}

/// An anti-Salkowski curve: arbitrary curvature, constant torsion.
pub fn make_anti_salkowski(
    kappa: ScalarFn,
    tau0: f64,
    domain: (f64, f64),
    steps: usize,
) -> Result<Curve> {
    if !tau0.is_finite() {
        return Err(Error::InvalidParam {
            name: "tau0",
            reason: format!("must be finite, got {tau0}"),
        });
    }
    let meta = CurveMeta::new("anti-salkowski")
        .with("kappa", kappa.label())
        .with("tau0", tau0);
    integrate_family(meta, kappa, ScalarFn::constant(tau0), domain, steps)
}

fn integrate_family(
    meta: CurveMeta,
    kappa: ScalarFn,
    tau: ScalarFn,
    domain: (f64, f64),
    steps: usize,
) -> Result<Curve> {
    let eqs = NaturalEquations::new(kappa, tau, domain)?;
    let grid = natural::integrate(&eqs, steps)?;
    Curve::from_parts(meta, domain, Repr::Integrated(grid))
}

fn require_positive(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParam {
            name,
            reason: format!("must be a positive finite number, got {v}"),
        })
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::curve::uniform_grid;

    #[test]
    fn circular_helix_unit_parameters_reach_the_known_endpoint() {
        let c = make_circular_helix(1.0, 1.0, (0.0, PI)).unwrap();
        let p = c.point(PI).unwrap();
        assert!((p.x - PI).abs() < 1e-15);
        assert!((p.y - 2.0).abs() < 1e-15);
        assert!((p.z - PI).abs() < 1e-15);
        // Everything vanishes at the start of the domain.
        let p0 = c.point(0.0).unwrap();
        assert_eq!((p0.x, p0.y, p0.z), (0.0, 0.0, 0.0));
    }

    #[test]
    fn circular_helix_normalization_is_anchored_at_domain_start() {
        // Same parameters, shifted domain: the shape is translated, not
        // re-phased.
        let a = make_circular_helix(2.0, 1.5, (0.0, 2.0)).unwrap();
        let b = make_circular_helix(2.0, 1.5, (10.0, 12.0)).unwrap();
        for i in 0..=20 {
            let ds = 2.0 * i as f64 / 20.0;
            let pa = a.point(ds).unwrap();
            let pb = b.point(10.0 + ds).unwrap();
            assert!((pa.y - pb.y).abs() < 1e-12);
            assert!((pa.z - pb.z).abs() < 1e-12);
        }
    }

    #[test]
    fn invalid_family_parameters_are_rejected() {
        let dom = (0.0, 1.0);
        assert!(matches!(
            make_circular_helix(0.0, 1.0, dom),
            Err(Error::InvalidParam { name: "kappa0", .. })
        ));
        assert!(matches!(
            make_circular_helix(-1.0, 1.0, dom),
            Err(Error::InvalidParam { name: "kappa0", .. })
        ));
        assert!(matches!(
            make_circular_helix(1.0, 0.0, dom),
            Err(Error::InvalidParam { name: "tau0", .. })
        ));
        assert!(matches!(
            make_general_helix(0.0, ScalarFn::constant(1.0), dom, 64),
            Err(Error::InvalidParam { name: "m", .. })
        ));
        assert!(matches!(
            make_salkowski(f64::NAN, ScalarFn::constant(1.0), dom, 64),
            Err(Error::InvalidParam { name: "kappa0", .. })
        ));
        assert!(matches!(
            make_anti_salkowski(ScalarFn::constant(1.0), f64::INFINITY, dom, 64),
            Err(Error::InvalidParam { name: "tau0", .. })
        ));
        assert!(matches!(
            make_circular_helix(1.0, 1.0, (1.0, 1.0)),
            Err(Error::EmptyDomain)
        ));
    }

    #[test]
    fn nonpositive_curvature_on_the_grid_is_rejected() {
        let kappa = ScalarFn::parse("1-s").unwrap();
        match make_anti_salkowski(kappa, 1.0, (0.0, 2.0), 64) {
            Err(Error::KappaNotPositive { s, value }) => {
                assert!((0.9..=1.1).contains(&s), "offending s = {s}");
                assert!(value <= 0.0);
            }
            other => panic!("expected curvature rejection, got {other:?}"),
        }
    }

    #[test]
    fn salkowski_with_constant_torsion_degenerates_to_the_circular_helix() {
        let sal = make_salkowski(1.0, ScalarFn::constant(2.0), (0.0, 2.0), 2048).unwrap();
        let hel = make_circular_helix(1.0, 2.0, (0.0, 2.0)).unwrap();
        for &s in &uniform_grid(0.0, 2.0, 33) {
            let p = sal.point(s).unwrap();
            let q = hel.point(s).unwrap();
            assert!((p.y - q.y).abs() < 1e-10, "y at {s}");
            assert!((p.z - q.z).abs() < 1e-10, "z at {s}");
        }
    }

    #[test]
    fn general_helix_with_constant_curvature_degenerates_to_the_circular_helix() {
        let gh = make_general_helix(2.0, ScalarFn::constant(1.5), (0.0, 2.0), 2048).unwrap();
        let hel = make_circular_helix(1.5, 3.0, (0.0, 2.0)).unwrap();
        for &s in &uniform_grid(0.0, 2.0, 33) {
            let p = gh.point(s).unwrap();
            let q = hel.point(s).unwrap();
            assert!((p.y - q.y).abs() < 1e-10, "y at {s}");
            assert!((p.z - q.z).abs() < 1e-10, "z at {s}");
        }
    }

    #[test]
    fn make_family_dispatches_by_kind() {
        let c = make_family(
            FamilyParams::CircularHelix { kappa0: 1.0, tau0: 1.0 },
            (0.0, 1.0),
            0,
        )
        .unwrap();
        assert_eq!(c.meta().name, "circular-helix");
        let c = make_family(
            FamilyParams::AntiSalkowski { kappa: ScalarFn::parse("exp(-s)").unwrap(), tau0: 2.0 },
            (0.0, 1.0),
            256,
        )
        .unwrap();
        assert_eq!(c.meta().name, "anti-salkowski");
        assert_eq!(
            c.meta().params[0],
            ("kappa".to_string(), "exp(-s)".to_string())
        );
    }
}
