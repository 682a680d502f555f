//! Admissible curves.
//!
//! Every curve here is a graph over the distinguished axis,
//! `s -> (s, y(s), z(s))`, parametrized by Galilean arc length `s` on a
//! closed interval. Three representations sit behind one type:
//!
//! * **closed form** — exact position and exact derivatives up to order
//!   three (the built-in worked examples, the circular helix);
//! * **integrated** — reconstructed from natural equations; derivatives are
//!   read back out of the integration state, not differenced;
//! * **graph** — position only; derivatives fall back to finite
//!   differences.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gal3::GVec3;
use crate::natural::StateGrid;
use crate::polyline::{Polyline, PolylineMeta, Sample};

mod examples;
mod families;

pub use examples::{example_anti_salkowski, example_general_helix};
pub use families::{
    make_anti_salkowski, make_circular_helix, make_family, make_general_helix, make_salkowski,
    FamilyParams,
};

/// Shared closure type for `s -> (y, z)` component pairs.
pub(crate) type PairFn = Arc<dyn Fn(f64) -> (f64, f64) + Send + Sync>;

/// Exact position and derivatives of a closed-form curve.
pub(crate) struct ClosedForm {
    pub yz: PairFn,
    pub d1: PairFn,
    pub d2: PairFn,
    pub d3: PairFn,
}

pub(crate) enum Repr {
    Closed(ClosedForm),
    Integrated(StateGrid),
    Graph(PairFn),
}

/// Descriptive metadata carried into polyline exports.
#[derive(Debug, Clone)]
pub struct CurveMeta {
    pub name: String,
    pub params: Vec<(String, String)>,
}

impl CurveMeta {
    pub fn new(name: impl Into<String>) -> Self {
        CurveMeta {
            name: name.into(),
            params: Vec::new(),
        }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }
}

/// A curve `(s, y(s), z(s))` over a closed parameter interval.
pub struct Curve {
    s_min: f64,
    s_max: f64,
    meta: CurveMeta,
    repr: Repr,
}

impl std::fmt::Debug for Curve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Curve")
            .field("name", &self.meta.name)
            .field("domain", &(self.s_min, self.s_max))
            .finish_non_exhaustive()
    }
}

impl Curve {
    pub(crate) fn from_parts(meta: CurveMeta, domain: (f64, f64), repr: Repr) -> Result<Curve> {
        check_domain(domain)?;
        Ok(Curve {
            s_min: domain.0,
            s_max: domain.1,
            meta,
            repr,
        })
    }

    /// Builds a curve from exact component closures: position and the first
    /// three derivatives of `(y, z)`.
    pub fn from_closed_form<P, D1, D2, D3>(
        meta: CurveMeta,
        domain: (f64, f64),
        yz: P,
        d1: D1,
        d2: D2,
        d3: D3,
    ) -> Result<Curve>
    where
        P: Fn(f64) -> (f64, f64) + Send + Sync + 'static,
        D1: Fn(f64) -> (f64, f64) + Send + Sync + 'static,
        D2: Fn(f64) -> (f64, f64) + Send + Sync + 'static,
        D3: Fn(f64) -> (f64, f64) + Send + Sync + 'static,
    {
        Curve::from_parts(
            meta,
            domain,
            Repr::Closed(ClosedForm {
                yz: Arc::new(yz),
                d1: Arc::new(d1),
                d2: Arc::new(d2),
                d3: Arc::new(d3),
            }),
        )
    }

    /// Builds a curve from a position-only closure; derivative queries use
    /// finite differences.
    pub fn from_graph<P>(meta: CurveMeta, domain: (f64, f64), yz: P) -> Result<Curve>
    where
        P: Fn(f64) -> (f64, f64) + Send + Sync + 'static,
    {
        Curve::from_parts(meta, domain, Repr::Graph(Arc::new(yz)))
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.s_min, self.s_max)
    }

    pub fn meta(&self) -> &CurveMeta {
        &self.meta
    }

    pub(crate) fn repr(&self) -> &Repr {
        &self.repr
    }

    /// Errors unless `s` lies in the closed parameter interval.
    pub(crate) fn check_s(&self, s: f64) -> Result<()> {
        if s.is_finite() && s >= self.s_min && s <= self.s_max {
            Ok(())
        } else {
            Err(Error::OutOfDomain {
                s,
                min: self.s_min,
                max: self.s_max,
            })
        }
    }

    /// Position components without a domain check; finite-difference
    /// stencils may step a rounding error past the boundary.
    pub(crate) fn position_raw(&self, s: f64) -> (f64, f64) {
        match &self.repr {
            Repr::Closed(cf) => (cf.yz)(s),
            Repr::Integrated(grid) => grid.position(s),
            Repr::Graph(f) => f(s),
        }
    }

    /// The curve point at `s`.
    pub fn point(&self, s: f64) -> Result<GVec3> {
        self.check_s(s)?;
        let (y, z) = self.position_raw(s);
        if y.is_finite() && z.is_finite() {
            Ok(GVec3::new(s, y, z))
        } else {
            Err(Error::NonFinite {
                what: "position",
                s,
            })
        }
    }

    /// Samples `n >= 2` uniformly spaced points into a polyline.
    pub fn sample(&self, n: usize) -> Result<Polyline> {
        if n < 2 {
            return Err(Error::InvalidParam {
                name: "samples",
                reason: format!("need at least 2 sample points, got {n}"),
            });
        }
        let mut pts = Vec::with_capacity(n);
        for &s in &uniform_grid(self.s_min, self.s_max, n) {
            let p = self.point(s)?;
            pts.push(Sample {
                s,
                x: p.x,
                y: p.y,
                z: p.z,
            });
        }
        let mut meta = PolylineMeta::new(self.meta.name.clone(), "curve");
        meta.params = self.meta.params.clone();
        Polyline::new(meta, pts)
    }
}

/// `n` uniformly spaced points over `[s0, s1]`, first and last exact.
pub fn uniform_grid(s0: f64, s1: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![s0],
        _ => {
            let step = (s1 - s0) / (n - 1) as f64;
            (0..n)
                .map(|i| if i == n - 1 { s1 } else { s0 + i as f64 * step })
                .collect()
        }
    }
}

/// Validates a parameter interval: finite endpoints in strict order.
pub(crate) fn check_domain((s0, s1): (f64, f64)) -> Result<()> {
    if s0.is_finite() && s1.is_finite() && s0 < s1 {
        Ok(())
    } else {
        Err(Error::EmptyDomain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_grid_hits_both_endpoints_exactly() {
        let g = uniform_grid(0.5, 3.0, 7);
        assert_eq!(g.len(), 7);
        assert_eq!(g[0], 0.5);
        assert_eq!(g[6], 3.0);
        for w in g.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn degenerate_domains_are_rejected() {
        assert!(matches!(
            Curve::from_graph(CurveMeta::new("x"), (1.0, 1.0), |_| (0.0, 0.0)),
            Err(Error::EmptyDomain)
        ));
        assert!(matches!(
            Curve::from_graph(CurveMeta::new("x"), (2.0, 1.0), |_| (0.0, 0.0)),
            Err(Error::EmptyDomain)
        ));
        assert!(matches!(
            Curve::from_graph(CurveMeta::new("x"), (0.0, f64::INFINITY), |_| (0.0, 0.0)),
            Err(Error::EmptyDomain)
        ));
    }

    #[test]
    fn point_checks_the_domain() {
        let c = Curve::from_graph(CurveMeta::new("p"), (0.0, 1.0), |s| (s * s, 0.0)).unwrap();
        let p = c.point(0.5).unwrap();
        assert_eq!((p.x, p.y, p.z), (0.5, 0.25, 0.0));
        assert!(matches!(c.point(1.5), Err(Error::OutOfDomain { .. })));
        assert!(matches!(c.point(f64::NAN), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn non_finite_positions_become_errors() {
        let c = Curve::from_graph(CurveMeta::new("bad"), (-1.0, 1.0), |s| (1.0 / s, 0.0)).unwrap();
        assert!(matches!(
            c.point(0.0),
            Err(Error::NonFinite { what: "position", .. })
        ));
    }

    #[test]
    fn sampling_carries_metadata() {
        let c = Curve::from_graph(
            CurveMeta::new("parabola").with("a", 1),
            (0.0, 1.0),
            |s| (s * s, 0.0),
        )
        .unwrap();
        let pl = c.sample(5).unwrap();
        assert_eq!(pl.meta().source, "parabola");
        assert_eq!(pl.meta().kind, "curve");
        assert_eq!(pl.samples().len(), 5);
        assert_eq!(pl.samples()[4].s, 1.0);
        assert_eq!(pl.samples()[2].x, pl.samples()[2].s);
        assert!(matches!(c.sample(1), Err(Error::InvalidParam { .. })));
    }
}
