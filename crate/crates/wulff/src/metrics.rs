//! Widths, thickness, and diameter of spherical convex bodies.
//!
//! The width of a body C with respect to a supporting hemisphere H(P) is the
//! least lune thickness π − |PQ| over supporting hemispheres H(Q), which
//! equals π minus the largest distance from P to the boundary of the polar
//! body. Polygon computations are exact: the dot product along a geodesic
//! edge is A·cos s + B·sin s, so per-edge extrema are closed-form. Sampled
//! bodies are measured through their inscribed polygon (collinear sample
//! runs merged); caps are handled by exact identities.

use crate::error::{GeomError, Result};
use crate::region::{classify, find_hemisphere_witness, Location, SphericalBody, SphericalPolygon};
use crate::report::{CheckReport, CheckStatus};
use crate::sphere::{distance, Hemisphere, SphericalPoint};
use std::f64::consts::{FRAC_PI_2, PI};

pub use crate::planar::hausdorff_planar;

/// Tolerance for the "H supports the body" precondition.
const SUPPORT_TOL: f64 = 1e-6;

/// Width extremes over all supporting hemispheres.
#[derive(Debug, Clone)]
pub struct WidthReport {
    pub min_width: f64,
    pub max_width: f64,
    pub argmin_center: SphericalPoint,
    pub argmax_center: SphericalPoint,
    pub constant: bool,
    /// Common width when `constant` holds (midpoint of the extremes).
    pub delta: f64,
}

#[derive(Debug, Clone)]
pub struct DiameterReport {
    pub diameter: f64,
    pub witness_p: SphericalPoint,
    pub witness_q: SphericalPoint,
    pub constant: bool,
}

/// Golden-section search for the minimum of `f` on `[a, b]`.
/// Returns `(x_min, f_min)`.
pub fn golden_min(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, max_evals: usize) -> (f64, f64) {
    const PHI: f64 = 1.618_033_988_749_895;
    const RESP: f64 = 2.0 - PHI;

    let mut x1 = a + RESP * (b - a);
    let mut x2 = b - RESP * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut evals = 2;
    while evals < max_evals && (b - a).abs() > 1e-14 {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + RESP * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - RESP * (b - a);
            f2 = f(x2);
        }
        evals += 1;
    }
    if f1 < f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Coarse scan followed by golden refinement of the best bracket.
fn refine_min(f: &dyn Fn(f64) -> f64, a: f64, b: f64, coarse: usize) -> (f64, f64) {
    let mut best_i = 0;
    let mut best_v = f64::INFINITY;
    for i in 0..=coarse {
        let x = a + (b - a) * i as f64 / coarse as f64;
        let v = f(x);
        if v < best_v {
            best_v = v;
            best_i = i;
        }
    }
    let lo = a + (b - a) * best_i.saturating_sub(1) as f64 / coarse as f64;
    let hi = a + (b - a) * (best_i + 1).min(coarse) as f64 / coarse as f64;
    let (x, v) = golden_min(f, lo, hi, 64);
    if v < best_v {
        (x, v)
    } else {
        (a + (b - a) * best_i as f64 / coarse as f64, best_v)
    }
}

/// Geodesic edge parameterized as P(s) = cos(s)·a + sin(s)·e, s ∈ [0, len].
#[derive(Debug, Clone, Copy)]
struct EdgeFrame {
    a: SphericalPoint,
    e: SphericalPoint,
    len: f64,
}

impl EdgeFrame {
    fn new(a: SphericalPoint, b: SphericalPoint) -> EdgeFrame {
        let d = a.dot(b);
        let e = SphericalPoint::normalized(b.x - d * a.x, b.y - d * a.y, b.z - d * a.z)
            .expect("edge endpoints are distinct");
        EdgeFrame {
            a,
            e,
            len: a.distance(b),
        }
    }

    fn point_at(&self, s: f64) -> SphericalPoint {
        let (ss, cs) = s.sin_cos();
        SphericalPoint::normalized(
            cs * self.a.x + ss * self.e.x,
            cs * self.a.y + ss * self.e.y,
            cs * self.a.z + ss * self.e.z,
        )
        .expect("edge point")
    }

    /// Minimum of P(s)·q over the edge: the dot is A·cos s + B·sin s, so the
    /// only interior candidate is the trough of the phase representation.
    fn min_dot(&self, q: SphericalPoint) -> (f64, f64) {
        let a = q.dot(self.a);
        let b = q.dot(self.e);
        let end = a * self.len.cos() + b * self.len.sin();
        let (mut best_v, mut best_s) = if a <= end { (a, 0.0) } else { (end, self.len) };
        let trough = b.atan2(a) + PI;
        if trough >= 0.0 && trough <= self.len {
            let v = -a.hypot(b);
            if v < best_v {
                best_v = v;
                best_s = trough;
            }
        }
        (best_v, best_s)
    }
}

fn polygon_edges(verts: &[SphericalPoint]) -> Vec<EdgeFrame> {
    let n = verts.len();
    (0..n)
        .map(|i| EdgeFrame::new(verts[i], verts[(i + 1) % n]))
        .collect()
}

/// Farthest boundary point of the polygon from q (exact per edge).
/// Returns (max distance, attaining point). Edges whose endpoint dots cannot
/// beat the current best even by the maximal interior dip are skipped.
fn farthest_on_polygon(
    q: SphericalPoint,
    verts: &[SphericalPoint],
    edges: &[EdgeFrame],
) -> (f64, SphericalPoint) {
    let n = verts.len();
    let dots: Vec<f64> = verts.iter().map(|v| q.dot(*v)).collect();
    let mut best_dot = f64::INFINITY;
    let mut best_i = 0;
    for (i, &d) in dots.iter().enumerate() {
        if d < best_dot {
            best_dot = d;
            best_i = i;
        }
    }
    let mut best_pt = verts[best_i];
    for (i, edge) in edges.iter().enumerate() {
        let emin = dots[i].min(dots[(i + 1) % n]);
        let dip = 1.0 - (edge.len * 0.5).cos();
        if emin > best_dot + dip {
            continue;
        }
        let (v, s) = edge.min_dot(q);
        if v < best_dot {
            best_dot = v;
            best_pt = edge.point_at(s);
        }
    }
    (best_dot.clamp(-1.0, 1.0).acos(), best_pt)
}

/// Inscribed polygon used for measurements of a body (caps excluded).
fn measure_polygon(body: &SphericalBody) -> Result<Option<SphericalPolygon>> {
    match body {
        SphericalBody::Polygon(p) => Ok(Some(p.clone())),
        SphericalBody::Sampled(s) => Ok(Some(s.inscribed_polygon()?)),
        SphericalBody::Cap(_) => Ok(None),
    }
}

fn support_precondition(body: &SphericalBody, h: Hemisphere) -> Result<()> {
    let margin = match body {
        SphericalBody::Cap(c) => {
            // supporting centers sit exactly at distance π/2 − r from the axis
            let d = distance(h.center, c.center);
            return if (d - (FRAC_PI_2 - c.radius)).abs() <= SUPPORT_TOL {
                Ok(())
            } else {
                Err(GeomError::NotSupporting)
            };
        }
        SphericalBody::Polygon(p) => p
            .vertices()
            .iter()
            .map(|v| h.center.dot(*v))
            .fold(f64::INFINITY, f64::min),
        SphericalBody::Sampled(s) => s
            .boundary()
            .iter()
            .map(|v| h.center.dot(*v))
            .fold(f64::INFINITY, f64::min),
    };
    // containment (margin ≥ −tol) and touching (margin ≤ tol)
    if (-SUPPORT_TOL..=SUPPORT_TOL).contains(&margin) {
        Ok(())
    } else {
        Err(GeomError::NotSupporting)
    }
}

/// Width of the body with respect to a supporting hemisphere:
/// π − max over the polar boundary of the distance to the center.
pub fn width_wrt(body: &SphericalBody, h: Hemisphere) -> Result<f64> {
    support_precondition(body, h)?;
    match body {
        SphericalBody::Cap(c) => Ok(2.0 * c.radius),
        _ => {
            let polar = measure_polygon(body)?.unwrap().polar()?;
            let edges = polygon_edges(polar.vertices());
            let (dmax, _) = farthest_on_polygon(h.center, polar.vertices(), &edges);
            Ok(PI - dmax)
        }
    }
}

/// Width extremes over the full family of supporting hemispheres (their
/// centers trace the polar boundary: vertices, edge interiors, and the fans
/// at body vertices, which are exactly the polar edges).
pub fn is_constant_width(body: &SphericalBody, tol: f64) -> Result<WidthReport> {
    if let SphericalBody::Cap(c) = body {
        let w = 2.0 * c.radius;
        let centers = c.polar().boundary_samples(2);
        return Ok(WidthReport {
            min_width: w,
            max_width: w,
            argmin_center: centers[0],
            argmax_center: centers[1],
            constant: true,
            delta: w,
        });
    }
    let polar = measure_polygon(body)?.unwrap().polar()?;
    let verts = polar.vertices();
    let n = verts.len();
    let edges = polygon_edges(verts);
    let width_at = |c: SphericalPoint| -> f64 {
        let (dmax, _) = farthest_on_polygon(c, verts, &edges);
        PI - dmax
    };

    let mut evals: Vec<(f64, SphericalPoint)> = Vec::new();
    for v in verts {
        evals.push((width_at(*v), *v));
    }
    if n <= 64 {
        for edge in &edges {
            for s in 1..16 {
                let p = edge.point_at(edge.len * s as f64 / 16.0);
                evals.push((width_at(p), p));
            }
        }
    }
    let mut min_w = f64::INFINITY;
    let mut max_w = f64::NEG_INFINITY;
    let mut argmin = verts[0];
    let mut argmax = verts[0];
    for (w, p) in &evals {
        if *w < min_w {
            min_w = *w;
            argmin = *p;
        }
        if *w > max_w {
            max_w = *w;
            argmax = *p;
        }
    }
    // refine the extremes along the edges adjacent to the best candidates
    let refine = |target_min: bool, cur: f64, arg: SphericalPoint| -> (f64, SphericalPoint) {
        let mut best = cur;
        let mut best_p = arg;
        for (i, edge) in edges.iter().enumerate() {
            let near = verts[i].distance(arg) < 2.0 * edge.len + 1e-9
                || verts[(i + 1) % n].distance(arg) < 2.0 * edge.len + 1e-9;
            if !near {
                continue;
            }
            let f = |s: f64| {
                let w = width_at(edge.point_at(s));
                if target_min {
                    w
                } else {
                    -w
                }
            };
            let (s, v) = refine_min(&f, 0.0, edge.len, 32);
            let w = if target_min { v } else { -v };
            if (target_min && w < best) || (!target_min && w > best) {
                best = w;
                best_p = edge.point_at(s);
            }
        }
        (best, best_p)
    };
    let (min_w, argmin) = refine(true, min_w, argmin);
    let (max_w, argmax) = refine(false, max_w, argmax);

    let constant = max_w - min_w <= tol;
    Ok(WidthReport {
        min_width: min_w,
        max_width: max_w,
        argmin_center: argmin,
        argmax_center: argmax,
        constant,
        delta: 0.5 * (min_w + max_w),
    })
}

/// Minimum width over all supporting hemispheres; coincides with
/// π − diameter(polar), which callers use as a cross-check.
pub fn thickness(body: &SphericalBody) -> Result<f64> {
    match body {
        SphericalBody::Cap(c) => Ok(2.0 * c.radius),
        _ => {
            let report = is_constant_width(body, f64::INFINITY)?;
            Ok(report.min_width)
        }
    }
}

fn diameter_polygon(verts: &[SphericalPoint]) -> (f64, SphericalPoint, SphericalPoint) {
    let n = verts.len();
    let edges = polygon_edges(verts);
    // vertex-vertex pass in dot space
    let mut best_dot = f64::INFINITY;
    let mut best = (verts[0], verts[1.min(n - 1)]);
    for i in 0..n {
        for j in (i + 1)..n {
            let d = verts[i].dot(verts[j]);
            if d < best_dot {
                best_dot = d;
                best = (verts[i], verts[j]);
            }
        }
    }
    // vertex-edge pass with the interior-dip bound as pruning
    for (i, edge) in edges.iter().enumerate() {
        let dip = 1.0 - (edge.len * 0.5).cos();
        for (j, v) in verts.iter().enumerate() {
            if j == i || j == (i + 1) % n {
                continue;
            }
            let emin = v.dot(verts[i]).min(v.dot(verts[(i + 1) % n]));
            if emin > best_dot + dip {
                continue;
            }
            let (d, s) = edge.min_dot(*v);
            if d < best_dot {
                best_dot = d;
                best = (*v, edge.point_at(s));
            }
        }
    }
    // alternating refinement handles edge-edge critical pairs
    let (mut p, mut q) = best;
    for _ in 0..64 {
        let (_, q2) = farthest_on_polygon(p, verts, &edges);
        let (_, p2) = farthest_on_polygon(q2, verts, &edges);
        let new_dot = p2.dot(q2);
        if new_dot >= best_dot - 1e-16 {
            break;
        }
        best_dot = new_dot;
        p = p2;
        q = q2;
    }
    (best_dot.clamp(-1.0, 1.0).acos(), p, q)
}

/// Largest distance between two points of the body. Exact vertex/edge
/// extremization for polygons; the constancy flag is left to
/// `is_constant_diameter`.
pub fn diameter(body: &SphericalBody) -> Result<DiameterReport> {
    match body {
        SphericalBody::Cap(c) => {
            let b = c.boundary_samples(2);
            Ok(DiameterReport {
                diameter: 2.0 * c.radius,
                witness_p: b[0],
                witness_q: b[1],
                constant: false,
            })
        }
        _ => {
            let poly = measure_polygon(body)?.unwrap();
            let (d, p, q) = diameter_polygon(poly.vertices());
            Ok(DiameterReport {
                diameter: d,
                witness_p: p,
                witness_q: q,
                constant: false,
            })
        }
    }
}

/// Constant diameter at tolerance `tol`: every boundary point must realize
/// a distance of at least diameter − tol to some body point.
pub fn is_constant_diameter(body: &SphericalBody, tol: f64) -> Result<DiameterReport> {
    if let SphericalBody::Cap(c) = body {
        let b = c.boundary_samples(2);
        return Ok(DiameterReport {
            diameter: 2.0 * c.radius,
            witness_p: b[0],
            witness_q: b[1],
            constant: true,
        });
    }
    let poly = measure_polygon(body)?.unwrap();
    let verts = poly.vertices();
    let edges = polygon_edges(verts);
    let (delta, wp, wq) = diameter_polygon(verts);
    let reach = |p: SphericalPoint| -> f64 { farthest_on_polygon(p, verts, &edges).0 };

    let mut min_reach = f64::INFINITY;
    for v in verts {
        min_reach = min_reach.min(reach(*v));
        if min_reach < delta - tol {
            break;
        }
    }
    // long edges need interior checks (failures happen at edge feet)
    if min_reach >= delta - tol {
        for edge in &edges {
            if edge.len <= 0.05 {
                continue;
            }
            let f = |s: f64| reach(edge.point_at(s));
            let (_, v) = refine_min(&f, 0.0, edge.len, 32);
            min_reach = min_reach.min(v);
            if min_reach < delta - tol {
                break;
            }
        }
    }
    Ok(DiameterReport {
        diameter: delta,
        witness_p: wp,
        witness_q: wq,
        constant: min_reach >= delta - tol,
    })
}

fn distance_to_set(body: &SphericalBody, q: SphericalPoint) -> f64 {
    match classify(body, q, 0.0) {
        Location::Exterior => crate::region::boundary_distance(body, q),
        _ => 0.0,
    }
}

/// Symmetric spherical Hausdorff distance via boundary sampling with local
/// refinement. Both bodies must share an open hemisphere.
pub fn hausdorff_spherical(a: &SphericalBody, b: &SphericalBody) -> Result<f64> {
    let mut probe = a.boundary_samples(128);
    probe.extend(b.boundary_samples(128));
    if find_hemisphere_witness(&probe).is_none() {
        return Err(GeomError::NotHemispherical);
    }
    let directed = |from: &SphericalBody, to: &SphericalBody| -> f64 {
        let samples = from.boundary_samples(2048);
        let n = samples.len();
        let mut best = 0.0;
        let mut best_i = 0;
        for (i, s) in samples.iter().enumerate() {
            let d = distance_to_set(to, *s);
            if d > best {
                best = d;
                best_i = i;
            }
        }
        // refine along the two arcs adjacent to the best sample
        let a_pt = samples[(best_i + n - 1) % n];
        let m_pt = samples[best_i];
        let b_pt = samples[(best_i + 1) % n];
        for (x, y) in [(a_pt, m_pt), (m_pt, b_pt)] {
            if let Ok(arc) = crate::sphere::GreatArc::new(x, y) {
                let f = |t: f64| -distance_to_set(to, arc.point_at(t).unwrap());
                let (_, v) = refine_min(&f, 0.0, 1.0, 16);
                best = best.max(-v);
            }
        }
        best
    };
    Ok(directed(a, b).max(directed(b, a)))
}

/// Checks that the hemisphere orthogonal to the diameter chord at one
/// witness, containing the other, supports the body.
pub fn diameter_support_check(body: &SphericalBody) -> Result<CheckReport> {
    let rep = diameter(body)?;
    let (p, q) = (rep.witness_p, rep.witness_q);
    let c = p.dot(q);
    let center = SphericalPoint::normalized(q.x - c * p.x, q.y - c * p.y, q.z - c * p.z)
        .map_err(|_| GeomError::Degenerate("diameter witnesses coincide".into()))?;
    let mut report = CheckReport::new("diameter_support", 0, 1);
    report.residual("diameter", rep.diameter);
    // touches at p by construction
    report.check("touch_residual", center.dot(p).abs(), 1e-9);
    // contains the whole body
    let viol = body
        .boundary_samples(2048)
        .iter()
        .map(|x| -center.dot(*x))
        .fold(f64::NEG_INFINITY, f64::max)
        .max(0.0);
    report.check("containment_residual", viol, 1e-8);
    if report.status == CheckStatus::Fail {
        report.witness_spherical(p);
        report.witness_spherical(q);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{octant_polygon, Preset};
    use crate::region::{supporting_centers, Cap};
    use crate::sphere::NORTH;
    use std::f64::consts::FRAC_PI_4;

    const E1: SphericalPoint = SphericalPoint {
        x: 1.0,
        y: 0.0,
        z: 0.0,
    };

    fn octant_body() -> SphericalBody {
        SphericalBody::Polygon(octant_polygon())
    }

    #[test]
    fn width_wrt_octant_vertex_hemisphere() {
        let w = width_wrt(&octant_body(), Hemisphere::new(E1)).unwrap();
        assert!((w - FRAC_PI_2).abs() < 1e-14);
    }

    #[test]
    fn width_wrt_cap_any_support() {
        let cap = Cap::new(NORTH, FRAC_PI_4).unwrap();
        let body = SphericalBody::Cap(cap);
        for c in cap.polar().boundary_samples(7) {
            let w = width_wrt(&body, Hemisphere::new(c)).unwrap();
            assert!((w - FRAC_PI_2).abs() < 1e-15);
        }
        // non-supporting center rejected
        assert!(matches!(
            width_wrt(&body, Hemisphere::new(NORTH)),
            Err(GeomError::NotSupporting)
        ));
    }

    #[test]
    fn width_wrt_lifted_ellipse_against_dense_oracle() {
        let body = Preset::Ellipse21.spherical(2048).unwrap();
        // supporting hemisphere at the lift of (2, 0)
        let p = crate::sphere::central_unproject(crate::sphere::PlanarPoint { u: 2.0, v: 0.0 });
        let fan = crate::region::supporting_hemispheres_at(&body, p).unwrap();
        let h = fan.principal();
        let w = width_wrt(&body, h).unwrap();
        // oracle: max distance from the center over 1e5 polar boundary points
        let polar = crate::region::polar_sampled(&body, 100_000).unwrap();
        let dmax = polar
            .boundary()
            .iter()
            .map(|q| distance(h.center, *q))
            .fold(0.0, f64::max);
        assert!(
            (w - (PI - dmax)).abs() < 1e-6,
            "w = {w}, oracle = {}",
            PI - dmax
        );
    }

    #[test]
    fn thickness_examples() {
        assert!((thickness(&octant_body()).unwrap() - FRAC_PI_2).abs() < 1e-13);
        let cap = SphericalBody::Cap(Cap::new(NORTH, PI / 8.0).unwrap());
        assert!((thickness(&cap).unwrap() - FRAC_PI_4).abs() < 1e-15);
        // identity: thickness + diameter(polar) = pi, on the lifted square
        let body = Preset::Square.spherical(2048).unwrap();
        let t = thickness(&body).unwrap();
        let polar = supporting_centers(&body).unwrap();
        let d = diameter(&polar).unwrap().diameter;
        assert!(
            (t + d - PI).abs() < 1e-9,
            "identity residual {}",
            (t + d - PI).abs()
        );
    }

    #[test]
    fn diameter_examples() {
        let rep = diameter(&octant_body()).unwrap();
        assert!((rep.diameter - FRAC_PI_2).abs() < 1e-14);
        // witnesses are a vertex pair
        assert!((distance(rep.witness_p, rep.witness_q) - rep.diameter).abs() < 1e-12);

        let cap = SphericalBody::Cap(Cap::new(NORTH, PI / 8.0).unwrap());
        assert!((diameter(&cap).unwrap().diameter - FRAC_PI_4).abs() < 1e-15);

        let reuleaux = Preset::Reuleaux.spherical(2048).unwrap();
        let rep = diameter(&reuleaux).unwrap();
        assert!((rep.diameter - FRAC_PI_2).abs() < 1e-12);
        // oracle: no sample pair exceeds pi/2
        let samples = reuleaux.boundary_samples(0);
        let mut worst: f64 = 0.0;
        for (i, p) in samples.iter().enumerate().step_by(7) {
            for q in samples.iter().skip(i).step_by(11) {
                worst = worst.max(distance(*p, *q));
            }
        }
        assert!(worst <= FRAC_PI_2 + 1e-12);
    }

    #[test]
    fn constant_width_verdicts() {
        let cap = SphericalBody::Cap(Cap::new(NORTH, FRAC_PI_4).unwrap());
        let r = is_constant_width(&cap, 1e-6).unwrap();
        assert!(r.constant);
        assert!((r.delta - FRAC_PI_2).abs() < 1e-15);

        let r = is_constant_width(&octant_body(), 1e-9).unwrap();
        assert!(r.constant, "spread {}", r.max_width - r.min_width);
        assert!((r.delta - FRAC_PI_2).abs() < 1e-12);

        let ellipse = Preset::Ellipse21.spherical(2048).unwrap();
        let r = is_constant_width(&ellipse, 1e-6).unwrap();
        assert!(!r.constant);
        assert!(
            r.max_width - r.min_width > 0.1,
            "spread {}",
            r.max_width - r.min_width
        );
    }

    #[test]
    fn constant_diameter_verdicts() {
        let reuleaux = Preset::Reuleaux.spherical(2048).unwrap();
        let r = is_constant_diameter(&reuleaux, 1e-6).unwrap();
        assert!(r.constant);
        assert!((r.diameter - FRAC_PI_2).abs() < 1e-12);

        let cap = SphericalBody::Cap(Cap::new(NORTH, FRAC_PI_4).unwrap());
        let r = is_constant_diameter(&cap, 1e-6).unwrap();
        assert!(r.constant && (r.diameter - FRAC_PI_2).abs() < 1e-15);

        let square = Preset::Square.spherical(2048).unwrap();
        let r = is_constant_diameter(&square, 1e-6).unwrap();
        assert!(!r.constant, "square lift fails at edge feet");
    }

    #[test]
    fn hausdorff_spherical_examples() {
        let cap8 = SphericalBody::Cap(Cap::new(NORTH, PI / 8.0).unwrap());
        let cap4 = SphericalBody::Cap(Cap::new(NORTH, FRAC_PI_4).unwrap());
        assert!(hausdorff_spherical(&cap8, &cap8).unwrap() < 1e-12);
        let d = hausdorff_spherical(&cap8, &cap4).unwrap();
        assert!((d - PI / 8.0).abs() < 1e-9, "concentric caps: {d}");

        // octant vs the cap of radius pi/4 about its center, against a
        // dense-sampling oracle
        let oct = octant_body();
        let center = SphericalPoint::normalized(1.0, 1.0, 1.0).unwrap();
        let cap = SphericalBody::Cap(Cap::new(center, FRAC_PI_4).unwrap());
        let d = hausdorff_spherical(&oct, &cap).unwrap();
        assert!(d > 0.1);
        let mut oracle: f64 = 0.0;
        for p in oct.boundary_samples(50_000) {
            oracle = oracle.max(distance_to_set(&cap, p));
        }
        for p in cap.boundary_samples(50_000) {
            oracle = oracle.max(distance_to_set(&oct, p));
        }
        assert!(
            (d - oracle).abs() < 1e-6,
            "hausdorff {d} vs oracle {oracle}"
        );
    }

    #[test]
    fn diameter_support_check_presets() {
        for body in [
            octant_body(),
            SphericalBody::Cap(Cap::new(NORTH, PI / 8.0).unwrap()),
            Preset::Reuleaux.spherical(2048).unwrap(),
        ] {
            let rep = diameter_support_check(&body).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
    }

    #[test]
    fn width_never_below_thickness() {
        for preset in [Preset::Square, Preset::Ellipse21, Preset::Octant] {
            let body = preset.spherical(2048).unwrap();
            let t = thickness(&body).unwrap();
            let polar = supporting_centers(&body).unwrap();
            for c in polar.boundary_samples(32) {
                let w = width_wrt(&body, Hemisphere::new(c)).unwrap();
                assert!(
                    w >= t - 1e-9,
                    "{}: width {w} below thickness {t}",
                    preset.name()
                );
            }
        }
    }

    #[test]
    fn widths_lie_in_open_interval() {
        for preset in [
            Preset::Square,
            Preset::Ellipse21,
            Preset::CapPi8,
            Preset::Octant,
        ] {
            let body = preset.spherical(2048).unwrap();
            let r = is_constant_width(&body, 1e-6).unwrap();
            assert!(r.min_width > 0.0 && r.max_width < PI);
            let d = diameter(&body).unwrap().diameter;
            assert!(d > 0.0 && d < PI);
            // width never exceeds reach: min width <= diameter here
            assert!(r.min_width <= d + 1e-12);
        }
    }
}
