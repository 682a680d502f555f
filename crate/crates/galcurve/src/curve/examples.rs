//! Built-in worked examples with exact closed-form derivatives.
//!
//! Both examples are admissible on their whole domain and have simple
//! natural equations, which makes them the reference curves for every
//! numeric check in the crate:
//!
//! * `example1` — a general helix on `[1/2, 3]` with `kappa = 1/s`,
//!   `tau = 2/s` (constant ratio 2);
//! * `example2` — an anti-Salkowski curve on `[0, 2]` with
//!   `kappa = exp(-s)` and constant `tau = 2`.

use super::{Curve, CurveMeta};

/// The logarithmic general helix `example1`.
///
/// Position `(s, y, z)` with `a = 2 ln s`:
/// `y = (s/10)(sin a - 2 cos a)`, `z = -(s/10)(cos a + 2 sin a)`.
pub fn example_general_helix() -> Curve {
    let meta = CurveMeta::new("example1")
        .with("kappa", "1/s")
        .with("tau", "2/s");
    Curve::from_closed_form(
        meta,
        (0.5, 3.0),
        |s| {
            let a = 2.0 * s.ln();
            (
                (s / 10.0) * (a.sin() - 2.0 * a.cos()),
                -(s / 10.0) * (a.cos() + 2.0 * a.sin()),
            )
        },
        |s| {
            let a = 2.0 * s.ln();
            (0.5 * a.sin(), -0.5 * a.cos())
        },
        |s| {
            let a = 2.0 * s.ln();
            (a.cos() / s, a.sin() / s)
        },
        |s| {
            let a = 2.0 * s.ln();
            (
                -(a.cos() + 2.0 * a.sin()) / (s * s),
                (2.0 * a.cos() - a.sin()) / (s * s),
            )
        },
    )
    .expect("static domain is valid")
}

/// The damped-oscillation anti-Salkowski curve `example2`.
///
/// Position `(s, y, z)` with `e = exp(-s)`, `c = cos 2s`, `n = sin 2s`:
/// `y = -(e/25)(3c + 4n)`, `z = (e/25)(4c - 3n)`.
pub fn example_anti_salkowski() -> Curve {
    let meta = CurveMeta::new("example2")
        .with("kappa", "exp(-s)")
        .with("tau", "2");
    Curve::from_closed_form(
        meta,
        (0.0, 2.0),
        |s| {
            let e = (-s).exp();
            let (c, n) = ((2.0 * s).cos(), (2.0 * s).sin());
            (-(e / 25.0) * (3.0 * c + 4.0 * n), (e / 25.0) * (4.0 * c - 3.0 * n))
        },
        |s| {
            let e = (-s).exp();
            let (c, n) = ((2.0 * s).cos(), (2.0 * s).sin());
            (-(e / 5.0) * (c - 2.0 * n), -(e / 5.0) * (2.0 * c + n))
        },
        |s| {
            let e = (-s).exp();
            (e * (2.0 * s).cos(), e * (2.0 * s).sin())
        },
        |s| {
            let e = (-s).exp();
            let (c, n) = ((2.0 * s).cos(), (2.0 * s).sin());
            (-e * (c + 2.0 * n), e * (2.0 * c - n))
        },
    )
    .expect("static domain is valid")
}
