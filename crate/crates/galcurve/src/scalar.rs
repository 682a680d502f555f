//! Scalar functions of the curve parameter, with a human-readable label.
//!
//! Curvature and torsion inputs arrive either as parsed expressions or as
//! native closures; `ScalarFn` erases the difference and gives evaluation a
//! single fallible entry point whose errors identify the function and the
//! offending parameter value.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::expr::{self, EvalError, Expression};
use crate::fd::{self, DerivOrder};

#[derive(Clone)]
pub struct ScalarFn {
    label: Arc<str>,
    f: Arc<dyn Fn(f64) -> std::result::Result<f64, EvalError> + Send + Sync>,
}

impl fmt::Debug for ScalarFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScalarFn({})", self.label)
    }
}

impl ScalarFn {
    /// The constant function `s -> c`.
    pub fn constant(c: f64) -> Self {
        ScalarFn {
            label: format!("{c}").into(),
            f: Arc::new(move |_| Ok(c)),
        }
    }

    /// Wraps a native closure under the given label.
    pub fn from_fn(label: impl Into<String>, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        ScalarFn {
            label: label.into().into(),
            f: Arc::new(move |s| Ok(f(s))),
        }
    }

    /// Wraps a parsed expression; the label is its canonical printed form.
    pub fn from_expr(expr: Expression) -> Self {
        ScalarFn {
            label: expr.to_string().into(),
            f: Arc::new(move |s| expr.eval(s)),
        }
    }

    /// Parses `text` as an expression in `s`.
    pub fn parse(text: &str) -> Result<Self> {
        Ok(ScalarFn::from_expr(expr::parse(text)?))
    }

    /// The function `s -> factor * self(s)`, labeled accordingly.
    pub fn scaled(&self, factor: f64) -> ScalarFn {
        let inner = self.f.clone();
        ScalarFn {
            label: format!("{factor}*({})", self.label).into(),
            f: Arc::new(move |s| inner(s).map(|v| factor * v)),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, s: f64) -> Result<f64> {
        let v = (self.f)(s).map_err(|fault| Error::Eval {
            label: self.label.to_string(),
            s,
            fault,
        })?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite {
                what: "scalar value",
                s,
            })
        }
    }

    /// First derivative by a five-point stencil placed inside `[lo, hi]`.
    pub fn derivative(&self, s: f64, lo: f64, hi: f64) -> Result<f64> {
        let st = fd::stencil(s, lo, hi);
        let mut samples = [0.0; 5];
        for (out, &x) in samples.iter_mut().zip(&st.nodes) {
            *out = self.eval(x)?;
        }
        let d = fd::combine(DerivOrder::First, st.anchor, st.h, &samples);
        if d.is_finite() {
            Ok(d)
        } else {
            Err(Error::NonFinite {
                what: "scalar derivative",
                s,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_evaluates_and_labels() {
        let f = ScalarFn::constant(2.5);
        assert_eq!(f.eval(100.0).unwrap(), 2.5);
        assert_eq!(f.label(), "2.5");
    }

    #[test]
    fn expression_errors_carry_label_and_parameter() {
        let f = ScalarFn::parse("1/s").unwrap();
        match f.eval(0.0) {
            Err(Error::Eval { label, s, .. }) => {
                assert_eq!(label, "1/s");
                assert_eq!(s, 0.0);
            }
            other => panic!("expected eval error, got {other:?}"),
        }
    }

    #[test]
    fn native_closures_are_screened_for_finiteness() {
        let f = ScalarFn::from_fn("spike", |s| 1.0 / s);
        assert!(matches!(f.eval(0.0), Err(Error::NonFinite { .. })));
        assert_eq!(f.eval(2.0).unwrap(), 0.5);
    }

    #[test]
    fn derivative_matches_closed_form() {
        let f = ScalarFn::parse("exp(-s)").unwrap();
        let d = f.derivative(1.0, 0.0, 2.0).unwrap();
        assert!((d + (-1.0f64).exp()).abs() < 1e-10);

        // One-sided at the boundary.
        let d = f.derivative(0.0, 0.0, 2.0).unwrap();
        assert!((d + 1.0).abs() < 1e-10);
    }
}
