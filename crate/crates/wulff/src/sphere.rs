//! Primitives on the unit sphere S² ⊂ ℝ³: points, arcs, hemispheres, lunes,
//! the central (gnomonic) projection from the north pole, and the spherical
//! blow-up. All formulas are closed-form; results are renormalized so that
//! the unit-norm invariant holds to within [`UNIT_TOL`].

use crate::error::{GeomError, Result};

/// Unit-norm postcondition tolerance.
pub const UNIT_TOL: f64 = 1e-12;
/// Angular tolerance for pole/antipode degeneracy checks.
pub const ANGULAR_TOL: f64 = 1e-9;

/// A point of S², stored as a unit vector in ambient 3-space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// A point of the plane ℝ², identified with the affine plane {z = 1}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarPoint {
    pub u: f64,
    pub v: f64,
}

/// North pole (0, 0, 1).
pub const NORTH: SphericalPoint = SphericalPoint {
    x: 0.0,
    y: 0.0,
    z: 1.0,
};

impl SphericalPoint {
    /// Accepts coordinates that are already unit-norm within [`UNIT_TOL`].
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let n2 = x * x + y * y + z * z;
        if !n2.is_finite() || (n2.sqrt() - 1.0).abs() > UNIT_TOL {
            return Err(GeomError::invalid("point", "coordinates are not unit-norm"));
        }
        Ok(SphericalPoint { x, y, z })
    }

    /// Normalizes arbitrary nonzero coordinates onto the sphere.
    pub fn normalized(x: f64, y: f64, z: f64) -> Result<Self> {
        let n = (x * x + y * y + z * z).sqrt();
        if !n.is_finite() || n < 1e-300 {
            return Err(GeomError::invalid(
                "point",
                "cannot normalize (near-)zero vector",
            ));
        }
        Ok(SphericalPoint {
            x: x / n,
            y: y / n,
            z: z / n,
        })
    }

    pub fn dot(self, other: SphericalPoint) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: SphericalPoint) -> (f64, f64, f64) {
        (
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn antipode(self) -> SphericalPoint {
        SphericalPoint {
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }

    /// Spherical distance arccos(P·Q), with the dot product clamped to [−1, 1].
    pub fn distance(self, other: SphericalPoint) -> f64 {
        self.dot(other).clamp(-1.0, 1.0).acos()
    }

    /// Azimuth atan2(y, x) in (−π, π].
    pub fn azimuth(self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Euclidean chord length; agrees with the spherical distance to first
    /// order and, unlike arccos of the dot product, resolves separations
    /// well below 1e-8.
    pub fn chord(self, other: SphericalPoint) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

impl PlanarPoint {
    pub fn new(u: f64, v: f64) -> Result<Self> {
        if !u.is_finite() || !v.is_finite() {
            return Err(GeomError::invalid("point", "coordinates must be finite"));
        }
        Ok(PlanarPoint { u, v })
    }

    pub fn dot(self, other: PlanarPoint) -> f64 {
        self.u * other.u + self.v * other.v
    }

    pub fn cross(self, other: PlanarPoint) -> f64 {
        self.u * other.v - self.v * other.u
    }

    pub fn norm(self) -> f64 {
        self.u.hypot(self.v)
    }
}

impl std::ops::Sub for PlanarPoint {
    type Output = PlanarPoint;

    fn sub(self, other: PlanarPoint) -> PlanarPoint {
        PlanarPoint {
            u: self.u - other.u,
            v: self.v - other.v,
        }
    }
}

/// Spherical distance between two points.
pub fn distance(p: SphericalPoint, q: SphericalPoint) -> f64 {
    p.distance(q)
}

/// Closed hemisphere H(P) = { Q : P·Q ≥ 0 }.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hemisphere {
    pub center: SphericalPoint,
}

impl Hemisphere {
    pub fn new(center: SphericalPoint) -> Self {
        Hemisphere { center }
    }

    /// Membership with tolerance: center·Q ≥ −tol.
    pub fn contains(self, q: SphericalPoint, tol: f64) -> bool {
        self.center.dot(q) >= -tol
    }
}

/// Intersection of two distinct, non-opposite hemispheres.
#[derive(Debug, Clone, Copy)]
pub struct Lune {
    p: SphericalPoint,
    q: SphericalPoint,
}

impl Lune {
    pub fn new(p: SphericalPoint, q: SphericalPoint) -> Result<Self> {
        let d = p.distance(q);
        if d <= ANGULAR_TOL {
            return Err(GeomError::Degenerate("lune centers coincide".into()));
        }
        if std::f64::consts::PI - d <= ANGULAR_TOL {
            return Err(GeomError::Degenerate("lune centers are antipodal".into()));
        }
        Ok(Lune { p, q })
    }

    pub fn centers(self) -> (SphericalPoint, SphericalPoint) {
        (self.p, self.q)
    }

    /// Thickness π − |PQ| of the lune H(P) ∩ H(Q); always in (0, π).
    pub fn thickness(self) -> f64 {
        std::f64::consts::PI - self.p.distance(self.q)
    }
}

/// Shorter great-circle arc between two non-antipodal points.
#[derive(Debug, Clone, Copy)]
pub struct GreatArc {
    pub a: SphericalPoint,
    pub b: SphericalPoint,
}

impl GreatArc {
    pub fn new(a: SphericalPoint, b: SphericalPoint) -> Result<Self> {
        if a.dot(b) <= -1.0 + UNIT_TOL {
            return Err(GeomError::Degenerate("arc endpoints are antipodal".into()));
        }
        Ok(GreatArc { a, b })
    }

    /// Normalized convex combination (1−t)a + tb for t in [0, 1].
    pub fn point_at(self, t: f64) -> Result<SphericalPoint> {
        if !(0.0..=1.0).contains(&t) {
            return Err(GeomError::invalid("t", "parameter must lie in [0, 1]"));
        }
        let x = (1.0 - t) * self.a.x + t * self.b.x;
        let y = (1.0 - t) * self.a.y + t * self.b.y;
        let z = (1.0 - t) * self.a.z + t * self.b.z;
        SphericalPoint::normalized(x, y, z)
    }

    /// Arc length = spherical distance between endpoints.
    pub fn length(self) -> f64 {
        self.a.distance(self.b)
    }
}

/// Central (gnomonic) projection from the open north hemisphere onto {z = 1},
/// with the fixed last coordinate dropped: P ↦ (P_x/P_z, P_y/P_z).
pub fn central_project(p: SphericalPoint) -> Result<PlanarPoint> {
    if p.z <= ANGULAR_TOL {
        return Err(GeomError::EquatorialPoint);
    }
    Ok(PlanarPoint {
        u: p.x / p.z,
        v: p.y / p.z,
    })
}

/// Inverse central projection: x ↦ (x, 1)/‖(x, 1)‖.
pub fn central_unproject(x: PlanarPoint) -> SphericalPoint {
    let n = (1.0 + x.u * x.u + x.v * x.v).sqrt();
    SphericalPoint {
        x: x.u / n,
        y: x.v / n,
        z: 1.0 / n,
    }
}

/// Spherical blow-up with respect to `m`:
/// Ψ_m(P) = (m − (m·P)P) / √(1 − (m·P)²).
///
/// The result is the point at distance π/2 from P on the great circle through
/// m and P, on m's side. When m·P = 0 the formula yields m itself.
pub fn blow_up(m: SphericalPoint, p: SphericalPoint) -> Result<SphericalPoint> {
    let d_pole = m.distance(p);
    if d_pole <= ANGULAR_TOL || std::f64::consts::PI - d_pole <= ANGULAR_TOL {
        return Err(GeomError::PoleInput);
    }
    let c = m.dot(p);
    let x = m.x - c * p.x;
    let y = m.y - c * p.y;
    let z = m.z - c * p.z;
    SphericalPoint::normalized(x, y, z)
}

/// Rotation of ℝ³ (row-major 3×3 orthogonal matrix, det +1).
#[derive(Debug, Clone, Copy)]
pub struct Rotation {
    pub m: [[f64; 3]; 3],
}

impl Rotation {
    pub fn identity() -> Self {
        Rotation {
            m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    /// Minimal rotation carrying `from` onto `to` (Rodrigues form).
    pub fn between(from: SphericalPoint, to: SphericalPoint) -> Self {
        let c = from.dot(to).clamp(-1.0, 1.0);
        let (ax, ay, az) = from.cross(to);
        let s2 = ax * ax + ay * ay + az * az;
        if s2 < 1e-30 {
            if c > 0.0 {
                return Rotation::identity();
            }
            // Antipodal: rotate by pi about any axis orthogonal to `from`.
            let axis = if from.x.abs() < 0.9 {
                SphericalPoint::normalized(0.0, -from.z, from.y).unwrap()
            } else {
                SphericalPoint::normalized(-from.z, 0.0, from.x).unwrap()
            };
            return Rotation::about_axis(axis, std::f64::consts::PI);
        }
        let k = (1.0 - c) / s2;
        Rotation {
            m: [
                [c + ax * ax * k, ax * ay * k - az, ax * az * k + ay],
                [ay * ax * k + az, c + ay * ay * k, ay * az * k - ax],
                [az * ax * k - ay, az * ay * k + ax, c + az * az * k],
            ],
        }
    }

    pub fn about_axis(axis: SphericalPoint, angle: f64) -> Self {
        let (c, s) = (angle.cos(), angle.sin());
        let t = 1.0 - c;
        let (x, y, z) = (axis.x, axis.y, axis.z);
        Rotation {
            m: [
                [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
                [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
                [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
            ],
        }
    }

    /// Rotation built from an orthonormal frame (columns e1, e2, e3).
    pub fn from_frame(e1: SphericalPoint, e2: SphericalPoint, e3: SphericalPoint) -> Self {
        Rotation {
            m: [[e1.x, e2.x, e3.x], [e1.y, e2.y, e3.y], [e1.z, e2.z, e3.z]],
        }
    }

    pub fn apply(&self, p: SphericalPoint) -> SphericalPoint {
        let x = self.m[0][0] * p.x + self.m[0][1] * p.y + self.m[0][2] * p.z;
        let y = self.m[1][0] * p.x + self.m[1][1] * p.y + self.m[1][2] * p.z;
        let z = self.m[2][0] * p.x + self.m[2][1] * p.y + self.m[2][2] * p.z;
        SphericalPoint::normalized(x, y, z).expect("rotation preserves norm")
    }

    pub fn transpose(&self) -> Rotation {
        let m = &self.m;
        Rotation {
            m: [
                [m[0][0], m[1][0], m[2][0]],
                [m[0][1], m[1][1], m[2][1]],
                [m[0][2], m[1][2], m[2][2]],
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    const E1: SphericalPoint = SphericalPoint {
        x: 1.0,
        y: 0.0,
        z: 0.0,
    };
    const E2: SphericalPoint = SphericalPoint {
        x: 0.0,
        y: 1.0,
        z: 0.0,
    };

    #[test]
    fn distance_basics() {
        assert_eq!(distance(NORTH, NORTH), 0.0);
        assert!((distance(NORTH, E1) - FRAC_PI_2).abs() < 1e-15);
        assert!((distance(E1, E1.antipode()) - PI).abs() < 1e-15);
        // symmetry
        assert_eq!(distance(E1, E2), distance(E2, E1));
    }

    #[test]
    fn arc_endpoints_and_midpoint() {
        let arc = GreatArc::new(NORTH, E1).unwrap();
        let p0 = arc.point_at(0.0).unwrap();
        assert!(p0.distance(NORTH) < 1e-15);
        let mid = arc.point_at(0.5).unwrap();
        let s = 0.5_f64.sqrt();
        assert!((mid.x - s).abs() < 1e-15 && mid.y.abs() < 1e-15 && (mid.z - s).abs() < 1e-15);

        let arc2 = GreatArc::new(NORTH, E2).unwrap();
        let p1 = arc2.point_at(1.0).unwrap();
        assert!(p1.distance(E2) < 1e-15);

        assert!(arc.point_at(-0.1).is_err());
        assert!(arc.point_at(1.1).is_err());
        assert!(GreatArc::new(E1, E1.antipode()).is_err());
    }

    #[test]
    fn central_projection_examples() {
        let p = central_project(NORTH).unwrap();
        assert_eq!((p.u, p.v), (0.0, 0.0));

        // direct evaluation of the projection formula
        let q = SphericalPoint::new(0.6, 0.0, 0.8).unwrap();
        let pq = central_project(q).unwrap();
        assert!((pq.u - 0.75).abs() < 1e-15 && pq.v.abs() < 1e-15);

        let r = SphericalPoint::new(0.0, 0.6, 0.8).unwrap();
        let pr = central_project(r).unwrap();
        assert!(pr.u.abs() < 1e-15 && (pr.v - 0.75).abs() < 1e-15);

        assert_eq!(central_project(E1), Err(GeomError::EquatorialPoint));
        assert_eq!(
            central_project(NORTH.antipode()),
            Err(GeomError::EquatorialPoint)
        );
    }

    #[test]
    fn central_unprojection_examples() {
        let p = central_unproject(PlanarPoint::new(0.0, 0.0).unwrap());
        assert!(p.distance(NORTH) < 1e-15);

        // normalize (0.75, 0, 1)
        let q = central_unproject(PlanarPoint::new(0.75, 0.0).unwrap());
        assert!((q.x - 0.6).abs() < 1e-15 && (q.z - 0.8).abs() < 1e-15);

        // normalize (1, 0, 1)
        let r = central_unproject(PlanarPoint::new(1.0, 0.0).unwrap());
        let s = 0.5_f64.sqrt();
        assert!((r.x - s).abs() < 1e-15 && (r.z - s).abs() < 1e-15);
    }

    #[test]
    fn projection_round_trip() {
        for &(u, v) in &[(0.0, 0.0), (1.5, -2.25), (0.3, 0.4), (-10.0, 7.0)] {
            let x = PlanarPoint::new(u, v).unwrap();
            let back = central_project(central_unproject(x)).unwrap();
            assert!((back.u - u).abs() <= 1e-12 * u.abs().max(1.0));
            assert!((back.v - v).abs() <= 1e-12 * v.abs().max(1.0));
        }
    }

    #[test]
    fn blow_up_examples() {
        // N·P = 0 forces the result to be N itself
        let b = blow_up(NORTH, E1).unwrap();
        assert!(b.distance(NORTH) < 1e-15);

        let s = 0.5_f64.sqrt();
        let p = SphericalPoint::new(s, 0.0, s).unwrap();
        let b = blow_up(NORTH, p).unwrap();
        assert!((b.x + s).abs() < 1e-15 && (b.z - s).abs() < 1e-15);
        assert!(b.dot(p).abs() <= 1e-12);

        let q = SphericalPoint::new(0.0, s, s).unwrap();
        let b = blow_up(NORTH, q).unwrap();
        assert!((b.y + s).abs() < 1e-15 && (b.z - s).abs() < 1e-15);

        assert_eq!(blow_up(NORTH, NORTH), Err(GeomError::PoleInput));
        assert_eq!(blow_up(NORTH, NORTH.antipode()), Err(GeomError::PoleInput));
    }

    #[test]
    fn lune_thickness_examples() {
        let l = Lune::new(NORTH, E1).unwrap();
        assert!((l.thickness() - FRAC_PI_2).abs() < 1e-15);

        let p = SphericalPoint::new(0.6, 0.0, 0.8).unwrap();
        let l = Lune::new(NORTH, p).unwrap();
        assert!((l.thickness() - (PI - 0.8_f64.acos())).abs() < 1e-15);

        assert!(Lune::new(NORTH, NORTH).is_err());
        assert!(Lune::new(E1, E1.antipode()).is_err());
    }

    #[test]
    fn hemisphere_membership() {
        let h = Hemisphere::new(NORTH);
        assert!(h.contains(NORTH, 0.0));
        assert!(h.contains(E1, 0.0)); // boundary point
        assert!(!h.contains(NORTH.antipode(), 1e-9));
    }

    #[test]
    fn rotation_between_carries_points() {
        let a = SphericalPoint::normalized(0.3, -0.4, 0.8).unwrap();
        let r = Rotation::between(a, NORTH);
        assert!(r.apply(a).distance(NORTH) < 1e-14);
        let back = r.transpose().apply(NORTH);
        assert!(back.distance(a) < 1e-14);
    }
}
