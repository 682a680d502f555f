//! Vector algebra of the Galilean 3-space.
//!
//! The Galilean scalar product is degenerate: for vectors `p` and `q` it is
//! `p.x * q.x` whenever at least one first component is nonzero, and the
//! Euclidean product `p.y * q.y + p.z * q.z` of the remaining components when
//! both first components vanish. Vectors with a vanishing first component are
//! called *isotropic*; they span the plane the degenerate metric cannot see,
//! and they carry an induced Euclidean geometry. The branch test is an exact
//! comparison against zero — the two regimes are a structural property of the
//! vector, not a numerical tolerance.

/// A vector in the Galilean 3-space. The first component is the
/// metrically-distinguished one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GVec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Metric class of a vector: determined solely by whether `x` vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorClass {
    NonIsotropic,
    Isotropic,
}

impl GVec3 {
    pub const ZERO: GVec3 = GVec3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    /// Builds a vector from components. Panics on NaN or infinite input;
    /// fallible callers should screen components first.
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        assert!(
            x.is_finite() && y.is_finite() && z.is_finite(),
            "GVec3 components must be finite: ({x}, {y}, {z})"
        );
        GVec3 { x, y, z }
    }

    pub fn classify(self) -> VectorClass {
        if self.x != 0.0 {
            VectorClass::NonIsotropic
        } else {
            VectorClass::Isotropic
        }
    }

    pub fn is_isotropic(self) -> bool {
        self.classify() == VectorClass::Isotropic
    }

    /// The Galilean scalar product.
    pub fn dot(self, other: GVec3) -> f64 {
        if self.x != 0.0 || other.x != 0.0 {
            self.x * other.x
        } else {
            self.y * other.y + self.z * other.z
        }
    }

    /// The Galilean cross product. When at least one factor is
    /// non-isotropic the result lies in the isotropic plane; for two
    /// isotropic factors it degenerates to the Euclidean cross product.
    pub fn cross(self, other: GVec3) -> GVec3 {
        if self.x != 0.0 || other.x != 0.0 {
            GVec3 {
                x: 0.0,
                y: self.z * other.x - self.x * other.z,
                z: self.x * other.y - self.y * other.x,
            }
        } else {
            GVec3 {
                x: self.y * other.z - self.z * other.y,
                y: self.z * other.x - self.x * other.z,
                z: self.x * other.y - self.y * other.x,
            }
        }
    }

    /// The Galilean norm: `|x|` for non-isotropic vectors, the Euclidean
    /// length of `(y, z)` for isotropic ones.
    pub fn norm(self) -> f64 {
        if self.x != 0.0 {
            self.x.abs()
        } else {
            (self.y * self.y + self.z * self.z).sqrt()
        }
    }
}

impl std::ops::Add for GVec3 {
    type Output = GVec3;
    fn add(self, rhs: GVec3) -> GVec3 {
        GVec3 {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
            z: self.z + rhs.z,
        }
    }
}

impl std::ops::Sub for GVec3 {
    type Output = GVec3;
    fn sub(self, rhs: GVec3) -> GVec3 {
        GVec3 {
            x: self.x - rhs.x,
            y: self.y - rhs.y,
            z: self.z - rhs.z,
        }
    }
}

impl std::ops::Neg for GVec3 {
    type Output = GVec3;
    fn neg(self) -> GVec3 {
        GVec3 {
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

impl std::ops::Mul<f64> for GVec3 {
    type Output = GVec3;
    fn mul(self, k: f64) -> GVec3 {
        GVec3 {
            x: self.x * k,
            y: self.y * k,
            z: self.z * k,
        }
    }
}

impl std::ops::Div<f64> for GVec3 {
    type Output = GVec3;
    fn div(self, k: f64) -> GVec3 {
        GVec3 {
            x: self.x / k,
            y: self.y / k,
            z: self.z / k,
        }
    }
}

impl std::fmt::Display for GVec3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}
