//! Planar convex polygons with the origin interior: construction, convex
//! hull, the classical polar body, support and radial functions, and exact
//! Hausdorff distance between convex polygons.

use crate::error::{GeomError, Result};
use crate::sphere::PlanarPoint;

/// Cross-product threshold for collinearity, relative to coordinate scale².
const CROSS_TOL: f64 = 1e-12;

/// Convex polygon in the plane, counterclockwise, strictly convex,
/// with the origin strictly interior.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarConvexBody {
    vertices: Vec<PlanarPoint>,
}

fn scale_of(points: &[PlanarPoint]) -> f64 {
    points
        .iter()
        .map(|p| p.u.abs().max(p.v.abs()))
        .fold(1.0, f64::max)
}

impl PlanarConvexBody {
    /// Validates: ≥ 3 finite vertices, strictly convex counterclockwise,
    /// origin strictly interior. Collinear vertex triples are rejected.
    pub fn new(vertices: Vec<PlanarPoint>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(GeomError::Degenerate(
                "polygon needs at least 3 vertices".into(),
            ));
        }
        for p in &vertices {
            if !p.u.is_finite() || !p.v.is_finite() {
                return Err(GeomError::invalid("vertices", "coordinates must be finite"));
            }
        }
        let n = vertices.len();
        let scale = scale_of(&vertices);
        let eps = CROSS_TOL * scale * scale;
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            let cr = (b - a).cross(c - b);
            if cr.abs() <= eps {
                return Err(GeomError::Degenerate("collinear vertex triple".into()));
            }
            if cr < 0.0 {
                return Err(GeomError::Degenerate(
                    "vertices are not counterclockwise convex".into(),
                ));
            }
            // origin strictly left of every directed edge
            let side = (b - a).cross(PlanarPoint { u: -a.u, v: -a.v });
            if side <= eps {
                return Err(GeomError::Degenerate(
                    "origin is not strictly interior".into(),
                ));
            }
        }
        Ok(PlanarConvexBody {
            vertices: canonical_start(vertices),
        })
    }

    pub fn vertices(&self) -> &[PlanarPoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Support function h(θ) = max over vertices of v·θ for a unit direction.
    pub fn support(&self, dir: PlanarPoint) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.dot(dir))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Radial function: distance from the origin to the boundary along
    /// direction (cos φ, sin φ).
    pub fn radial(&self, phi: f64) -> f64 {
        let d = PlanarPoint {
            u: phi.cos(),
            v: phi.sin(),
        };
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let ca = d.cross(a);
            let cb = d.cross(b);
            if ca <= 0.0 && cb > 0.0 || (ca <= 0.0 && cb == 0.0 && b.dot(d) > 0.0) {
                let s = ca / (ca - cb);
                let p = PlanarPoint {
                    u: a.u + s * (b.u - a.u),
                    v: a.v + s * (b.v - a.v),
                };
                let r = p.dot(d);
                if r > 0.0 {
                    return r;
                }
            }
        }
        // Fallback: scan for any forward crossing (handles ties at vertices).
        let mut best = f64::INFINITY;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let ca = d.cross(a);
            let cb = d.cross(b);
            if (ca <= 0.0) != (cb <= 0.0) || ca == 0.0 || cb == 0.0 {
                let denom = ca - cb;
                if denom.abs() > 0.0 {
                    let s = (ca / denom).clamp(0.0, 1.0);
                    let p = PlanarPoint {
                        u: a.u + s * (b.u - a.u),
                        v: a.v + s * (b.v - a.v),
                    };
                    let r = p.dot(d);
                    if r > 0.0 && r < best {
                        best = r;
                    }
                }
            }
        }
        best
    }

    pub fn contains(&self, p: PlanarPoint) -> bool {
        let n = self.vertices.len();
        let scale = scale_of(&self.vertices);
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            if (b - a).cross(p - a) < -CROSS_TOL * scale * scale {
                return false;
            }
        }
        true
    }

    /// Distance from a point to the body (zero inside).
    pub fn distance_to(&self, p: PlanarPoint) -> f64 {
        if self.contains(p) {
            0.0
        } else {
            self.boundary_distance(p)
        }
    }

    /// Distance from a point to the boundary polyline.
    pub fn boundary_distance(&self, p: PlanarPoint) -> f64 {
        let n = self.vertices.len();
        let mut best = f64::INFINITY;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            best = best.min(point_segment_distance(p, a, b));
        }
        best
    }

    pub fn negated(&self) -> PlanarConvexBody {
        let verts: Vec<PlanarPoint> = self
            .vertices
            .iter()
            .map(|p| PlanarPoint { u: -p.u, v: -p.v })
            .collect();
        PlanarConvexBody {
            vertices: canonical_start(verts),
        }
    }
}

/// Rotate the vertex cycle so the smallest-azimuth vertex comes first.
/// Keeps output independent of which construction path produced the cycle.
fn canonical_start(vertices: Vec<PlanarPoint>) -> Vec<PlanarPoint> {
    let mut best = 0;
    let mut best_az = f64::INFINITY;
    for (i, p) in vertices.iter().enumerate() {
        let mut az = p.v.atan2(p.u);
        if az < 0.0 {
            az += std::f64::consts::TAU;
        }
        if az < best_az {
            best_az = az;
            best = i;
        }
    }
    let n = vertices.len();
    (0..n).map(|i| vertices[(best + i) % n]).collect()
}

pub fn point_segment_distance(p: PlanarPoint, a: PlanarPoint, b: PlanarPoint) -> f64 {
    let ab = b - a;
    let ap = p - a;
    let len2 = ab.dot(ab);
    let t = if len2 > 0.0 {
        (ap.dot(ab) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let q = PlanarPoint {
        u: a.u + t * ab.u,
        v: a.v + t * ab.v,
    };
    (p - q).norm()
}

/// Andrew monotone-chain convex hull, counterclockwise.
/// Collinear points are dropped (cross threshold scaled to the input).
pub fn convex_hull(points: &[PlanarPoint]) -> Vec<PlanarPoint> {
    let mut pts: Vec<PlanarPoint> = points.to_vec();
    pts.sort_by(|a, b| (a.u, a.v).partial_cmp(&(b.u, b.v)).unwrap());
    pts.dedup_by(|a, b| a.u == b.u && a.v == b.v);
    if pts.len() < 3 {
        return pts;
    }
    let scale = scale_of(&pts);
    let eps = CROSS_TOL * scale * scale;
    let mut lower: Vec<PlanarPoint> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 {
            let a = lower[lower.len() - 2];
            let b = lower[lower.len() - 1];
            if (b - a).cross(p - b) <= eps {
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(p);
    }
    let mut upper: Vec<PlanarPoint> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 {
            let a = upper[upper.len() - 2];
            let b = upper[upper.len() - 1];
            if (b - a).cross(p - b) <= eps {
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Classical polar body { y : p·y ≤ 1 for all p in the input set },
/// computed as the polygon whose vertices solve adjacent hull constraints.
/// Errors with `Unbounded` when the origin is not strictly interior to the
/// hull, and `Degenerate` when the hull is lower-dimensional.
pub fn polar_dual(points: &[PlanarPoint]) -> Result<PlanarConvexBody> {
    let hull = convex_hull(points);
    if hull.len() < 3 {
        return Err(GeomError::Degenerate(
            "polar input hull is lower-dimensional".into(),
        ));
    }
    let n = hull.len();
    let scale = scale_of(&hull);
    let eps = CROSS_TOL * scale * scale;
    for i in 0..n {
        let a = hull[i];
        let b = hull[(i + 1) % n];
        if (b - a).cross(PlanarPoint { u: -a.u, v: -a.v }) <= eps {
            return Err(GeomError::Unbounded);
        }
    }
    let mut verts = Vec::with_capacity(n);
    for i in 0..n {
        let p = hull[i];
        let q = hull[(i + 1) % n];
        let det = p.cross(q);
        // det > 0 by the interior-origin check above
        verts.push(PlanarPoint {
            u: (q.v - p.v) / det,
            v: (p.u - q.u) / det,
        });
    }
    // merge duplicates produced by tangency ties
    let merged = merge_close(verts, 1e-11 * scale_of_inv(scale));
    PlanarConvexBody::new(merged)
}

fn scale_of_inv(scale: f64) -> f64 {
    // polar coordinates scale like 1/scale for bodies of the given scale
    (1.0 / scale).max(1.0)
}

fn merge_close(verts: Vec<PlanarPoint>, tol: f64) -> Vec<PlanarPoint> {
    let mut out: Vec<PlanarPoint> = Vec::with_capacity(verts.len());
    for v in verts {
        if let Some(last) = out.last() {
            if (v - *last).norm() <= tol {
                continue;
            }
        }
        out.push(v);
    }
    if out.len() >= 2 {
        let first = out[0];
        if (*out.last().unwrap() - first).norm() <= tol {
            out.pop();
        }
    }
    out
}

/// Exact Hausdorff distance between convex bodies: the farthest point of a
/// convex polygon from a convex set is always one of its vertices.
pub fn hausdorff_planar(a: &PlanarConvexBody, b: &PlanarConvexBody) -> f64 {
    let d_ab = a
        .vertices()
        .iter()
        .map(|v| b.distance_to(*v))
        .fold(0.0, f64::max);
    let d_ba = b
        .vertices()
        .iter()
        .map(|v| a.distance_to(*v))
        .fold(0.0, f64::max);
    d_ab.max(d_ba)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(u: f64, v: f64) -> PlanarPoint {
        PlanarPoint { u, v }
    }

    fn square() -> PlanarConvexBody {
        PlanarConvexBody::new(vec![
            pp(1.0, 1.0),
            pp(-1.0, 1.0),
            pp(-1.0, -1.0),
            pp(1.0, -1.0),
        ])
        .unwrap()
    }

    #[test]
    fn rejects_degenerate_polygons() {
        assert!(PlanarConvexBody::new(vec![pp(1.0, 0.0), pp(0.0, 1.0)]).is_err());
        // collinear triple
        assert!(PlanarConvexBody::new(vec![
            pp(1.0, -1.0),
            pp(1.0, 0.0),
            pp(1.0, 1.0),
            pp(-1.0, 0.0)
        ])
        .is_err());
        // clockwise
        assert!(PlanarConvexBody::new(vec![pp(1.0, -1.0), pp(-1.0, -1.0), pp(0.0, 1.0)]).is_err());
        // origin outside
        assert!(PlanarConvexBody::new(vec![pp(2.0, 1.0), pp(4.0, 1.0), pp(3.0, 2.0)]).is_err());
    }

    #[test]
    fn support_and_radial_of_square() {
        let s = square();
        assert!((s.support(pp(1.0, 0.0)) - 1.0).abs() < 1e-15);
        let d = 0.5_f64.sqrt();
        assert!((s.support(pp(d, d)) - 2.0 * d).abs() < 1e-15);
        assert!((s.radial(0.0) - 1.0).abs() < 1e-15);
        assert!((s.radial(std::f64::consts::FRAC_PI_4) - 2.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn hull_drops_interior_and_collinear() {
        let pts = vec![
            pp(0.0, 0.0),
            pp(2.0, 0.0),
            pp(2.0, 2.0),
            pp(0.0, 2.0),
            pp(1.0, 1.0),
            pp(1.0, 0.0), // on the bottom edge
        ];
        let h = convex_hull(&pts);
        assert_eq!(h.len(), 4);
    }

    #[test]
    fn polar_of_square_is_diamond() {
        let s = square();
        let d = polar_dual(s.vertices()).unwrap();
        assert_eq!(d.len(), 4);
        for v in d.vertices() {
            assert!((v.norm() - 1.0).abs() < 1e-14);
            assert!(v.u.abs() < 1e-14 || v.v.abs() < 1e-14);
        }
    }

    #[test]
    fn hausdorff_examples() {
        let s = square();
        assert_eq!(hausdorff_planar(&s, &s), 0.0);
        let diamond = polar_dual(s.vertices()).unwrap();
        // farthest square corner to the diamond edge u+v=1: 1/sqrt(2)
        let expect = 0.5_f64.sqrt();
        assert!((hausdorff_planar(&s, &diamond) - expect).abs() < 1e-14);
    }

    #[test]
    fn polar_involution_on_polygon() {
        let tri = PlanarConvexBody::new(vec![pp(2.0, -1.0), pp(0.5, 1.5), pp(-1.5, -0.8)]).unwrap();
        let p2 = polar_dual(polar_dual(tri.vertices()).unwrap().vertices()).unwrap();
        assert_eq!(p2.len(), tri.len());
        for (a, b) in tri.vertices().iter().zip(p2.vertices()) {
            assert!((*a - *b).norm() < 1e-12);
        }
    }

    #[test]
    fn unbounded_polar_detected() {
        // origin on the hull boundary -> polar unbounded
        let pts = vec![pp(0.0, 0.0), pp(1.0, 0.0), pp(0.0, 1.0)];
        assert!(matches!(polar_dual(&pts), Err(GeomError::Unbounded)));
    }
}
