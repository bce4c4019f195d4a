//! Spherical convex regions on S²: polygons (geodesic vertices), densely
//! sampled convex boundary curves, and exact spherical caps. Provides the
//! spherical convex hull, hemisphere-witness search, polar sets, membership
//! classification, and supporting hemispheres.

use crate::error::{GeomError, Result};
use crate::sphere::{central_project, Hemisphere, PlanarPoint, Rotation, SphericalPoint, NORTH};

/// Determinant threshold separating genuine turning from collinear noise.
const DET_TOL: f64 = 1e-13;
/// Default boundary mesh parameter.
pub const DEFAULT_MESH: f64 = std::f64::consts::TAU / 2048.0;
/// Default fan-extent threshold for discrete smoothness.
pub const DEFAULT_SMOOTH_TOL: f64 = 0.05;

fn det3(a: SphericalPoint, b: SphericalPoint, c: SphericalPoint) -> f64 {
    let (cx, cy, cz) = a.cross(b);
    cx * c.x + cy * c.y + cz * c.z
}

/// Membership classification with respect to a body boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary,
    Exterior,
}

/// Spherical convex polygon: counterclockwise geodesic vertex cycle
/// (as seen from outside the sphere) contained in an open hemisphere.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalPolygon {
    vertices: Vec<SphericalPoint>,
    witness: SphericalPoint,
}

impl SphericalPolygon {
    pub fn new(vertices: Vec<SphericalPoint>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(GeomError::Degenerate(
                "polygon needs at least 3 vertices".into(),
            ));
        }
        let witness = find_hemisphere_witness(&vertices).ok_or(GeomError::NotHemispherical)?;
        for v in &vertices {
            if witness.dot(*v) <= 1e-9 {
                return Err(GeomError::NotHemispherical);
            }
        }
        let n = vertices.len();
        for i in 0..n {
            let d = det3(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
            if d.abs() <= DET_TOL {
                return Err(GeomError::Degenerate("collinear vertex triple".into()));
            }
            if d < 0.0 {
                return Err(GeomError::Degenerate(
                    "vertices are not counterclockwise convex".into(),
                ));
            }
        }
        // Reject multi-winding cycles: total turning in the witness chart
        // must be a single revolution.
        let rot = Rotation::between(witness, NORTH);
        let chart: Vec<PlanarPoint> = vertices
            .iter()
            .map(|v| central_project(rot.apply(*v)).expect("witness chart"))
            .collect();
        let mut turning = 0.0;
        for i in 0..n {
            let a = chart[i];
            let b = chart[(i + 1) % n];
            let c = chart[(i + 2) % n];
            let e1 = b - a;
            let e2 = c - b;
            turning += e1.cross(e2).atan2(e1.dot(e2));
        }
        if (turning - std::f64::consts::TAU).abs() > 1e-6 {
            return Err(GeomError::Degenerate(
                "vertex cycle winds more than once".into(),
            ));
        }
        Ok(SphericalPolygon { vertices, witness })
    }

    pub fn vertices(&self) -> &[SphericalPoint] {
        &self.vertices
    }

    pub fn witness(&self) -> SphericalPoint {
        self.witness
    }

    /// Normalized vertex sum; strictly interior for a convex polygon.
    pub fn interior_point(&self) -> SphericalPoint {
        let (mut x, mut y, mut z) = (0.0, 0.0, 0.0);
        for v in &self.vertices {
            x += v.x;
            y += v.y;
            z += v.z;
        }
        SphericalPoint::normalized(x, y, z).expect("vertex sum of hemispherical set")
    }

    /// Poles of the edge great circles, in edge order; the polygon equals
    /// the intersection of the hemispheres they define.
    pub fn edge_poles(&self) -> Vec<SphericalPoint> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let (x, y, z) = self.vertices[i].cross(self.vertices[(i + 1) % n]);
                SphericalPoint::normalized(x, y, z).expect("adjacent vertices are distinct")
            })
            .collect()
    }

    /// Spherical polar set ∩ H(v) over the vertices, again a polygon: its
    /// vertices are the edge poles of this one.
    pub fn polar(&self) -> Result<SphericalPolygon> {
        SphericalPolygon::new(self.edge_poles())
    }
}

/// Densely sampled convex boundary curve, azimuth-monotone around a given
/// interior point. The polyline through the samples is itself a convex
/// spherical polygon inscribed in the body being represented.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSphericalBody {
    boundary: Vec<SphericalPoint>,
    interior_point: SphericalPoint,
    mesh: f64,
}

impl SampledSphericalBody {
    pub fn new(
        boundary: Vec<SphericalPoint>,
        interior_point: SphericalPoint,
        mesh: f64,
    ) -> Result<Self> {
        let mut pts = boundary;
        pts.dedup_by(|a, b| a.distance(*b) < 1e-14);
        if pts.len() >= 2 && pts[0].distance(*pts.last().unwrap()) < 1e-14 {
            pts.pop();
        }
        if pts.len() < 8 {
            return Err(GeomError::Degenerate(
                "sampled boundary needs at least 8 points".into(),
            ));
        }
        let n = pts.len();
        let mut max_gap = 0.0_f64;
        for i in 0..n {
            let gap = pts[i].distance(pts[(i + 1) % n]);
            max_gap = max_gap.max(gap);
            if interior_point.dot(pts[i]) <= 1e-12 {
                return Err(GeomError::NotHemispherical);
            }
            // local convexity: edge poles must not turn backwards
            let d = det3(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]);
            if d < -1e-8 {
                return Err(GeomError::Degenerate(
                    "boundary is locally non-convex".into(),
                ));
            }
        }
        if max_gap > mesh * (1.0 + 1e-9) {
            return Err(GeomError::invalid(
                "mesh",
                format!("max sample gap {max_gap:.3e} exceeds mesh parameter {mesh:.3e}"),
            ));
        }
        // azimuth-monotone around the interior point (star-shaped check)
        let rot = Rotation::between(interior_point, NORTH);
        let az: Vec<f64> = pts.iter().map(|p| rot.apply(*p).azimuth()).collect();
        let mut wraps = 0;
        for i in 0..n {
            let mut d = az[(i + 1) % n] - az[i];
            if d <= 0.0 {
                d += std::f64::consts::TAU;
                wraps += 1;
            }
            if d >= std::f64::consts::PI {
                return Err(GeomError::Degenerate(
                    "boundary is not azimuth-monotone around the interior point".into(),
                ));
            }
        }
        if wraps != 1 {
            return Err(GeomError::Degenerate(
                "boundary must wind exactly once around the interior point".into(),
            ));
        }
        Ok(SampledSphericalBody {
            boundary: pts,
            interior_point,
            mesh,
        })
    }

    /// Builds with the mesh parameter measured from the samples themselves
    /// (never below the default).
    pub fn with_measured_mesh(
        boundary: Vec<SphericalPoint>,
        interior_point: SphericalPoint,
    ) -> Result<Self> {
        let n = boundary.len();
        let mut max_gap: f64 = 0.0;
        for i in 0..n {
            max_gap = max_gap.max(boundary[i].distance(boundary[(i + 1) % n]));
        }
        SampledSphericalBody::new(boundary, interior_point, max_gap.max(DEFAULT_MESH))
    }

    pub fn boundary(&self) -> &[SphericalPoint] {
        &self.boundary
    }

    pub fn interior_point(&self) -> SphericalPoint {
        self.interior_point
    }

    pub fn mesh(&self) -> f64 {
        self.mesh
    }

    /// Inscribed polygon through the samples, with collinear runs merged so
    /// that flat boundary stretches become single geodesic edges.
    pub fn inscribed_polygon(&self) -> Result<SphericalPolygon> {
        let n = self.boundary.len();
        let mut keep: Vec<SphericalPoint> = Vec::with_capacity(n);
        for i in 0..n {
            let prev = if keep.is_empty() {
                self.boundary[(i + n - 1) % n]
            } else {
                *keep.last().unwrap()
            };
            let cur = self.boundary[i];
            let next = self.boundary[(i + 1) % n];
            if det3(prev, cur, next).abs() > DET_TOL {
                keep.push(cur);
            }
        }
        // second pass against wrap-around collinearity
        let m = keep.len();
        if m >= 4 {
            let mut out: Vec<SphericalPoint> = Vec::with_capacity(m);
            for i in 0..m {
                let prev = keep[(i + m - 1) % m];
                let cur = keep[i];
                let next = keep[(i + 1) % m];
                if det3(prev, cur, next).abs() > DET_TOL {
                    out.push(cur);
                }
            }
            keep = out;
        }
        SphericalPolygon::new(keep)
    }
}

/// Spherical cap of radius < π/2; the exact rotation-invariant convex body.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cap {
    pub center: SphericalPoint,
    pub radius: f64,
}

impl Cap {
    pub fn new(center: SphericalPoint, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius < std::f64::consts::FRAC_PI_2 - 1e-12) {
            return Err(GeomError::invalid(
                "radius",
                "cap radius must lie in (0, pi/2)",
            ));
        }
        Ok(Cap { center, radius })
    }

    pub fn polar(&self) -> Cap {
        Cap {
            center: self.center,
            radius: std::f64::consts::FRAC_PI_2 - self.radius,
        }
    }

    pub fn boundary_samples(&self, k: usize) -> Vec<SphericalPoint> {
        let rot = Rotation::between(NORTH, self.center);
        let (sr, cr) = (self.radius.sin(), self.radius.cos());
        (0..k)
            .map(|i| {
                let phi = std::f64::consts::TAU * i as f64 / k as f64;
                rot.apply(SphericalPoint::normalized(sr * phi.cos(), sr * phi.sin(), cr).unwrap())
            })
            .collect()
    }

    pub fn to_sampled(&self, k: usize) -> SampledSphericalBody {
        SampledSphericalBody::with_measured_mesh(self.boundary_samples(k), self.center)
            .expect("cap sampling is valid")
    }
}

/// A spherical convex body in one of three representations.
#[derive(Debug, Clone, PartialEq)]
pub enum SphericalBody {
    Polygon(SphericalPolygon),
    Sampled(SampledSphericalBody),
    Cap(Cap),
}

impl SphericalBody {
    pub fn interior_point(&self) -> SphericalPoint {
        match self {
            SphericalBody::Polygon(p) => p.interior_point(),
            SphericalBody::Sampled(s) => s.interior_point(),
            SphericalBody::Cap(c) => c.center,
        }
    }

    /// A hemisphere center whose open hemisphere contains the whole body.
    pub fn witness(&self) -> SphericalPoint {
        match self {
            SphericalBody::Polygon(p) => p.witness(),
            SphericalBody::Sampled(s) => s.interior_point(),
            SphericalBody::Cap(c) => c.center,
        }
    }

    /// Boundary sample points (vertices included for polygons).
    pub fn boundary_samples(&self, k: usize) -> Vec<SphericalPoint> {
        match self {
            SphericalBody::Polygon(p) => {
                let verts = p.vertices();
                let n = verts.len();
                let total: f64 = (0..n).map(|i| verts[i].distance(verts[(i + 1) % n])).sum();
                let mut out = Vec::with_capacity(k + n);
                for i in 0..n {
                    let a = verts[i];
                    let b = verts[(i + 1) % n];
                    let len = a.distance(b);
                    let steps = ((k as f64 * len / total).ceil() as usize).max(1);
                    let arc = crate::sphere::GreatArc::new(a, b).expect("polygon edge");
                    for s in 0..steps {
                        out.push(arc.point_at(s as f64 / steps as f64).unwrap());
                    }
                }
                out
            }
            SphericalBody::Sampled(s) => s.boundary().to_vec(),
            SphericalBody::Cap(c) => c.boundary_samples(k),
        }
    }

    pub fn mesh(&self) -> f64 {
        match self {
            SphericalBody::Sampled(s) => s.mesh(),
            _ => DEFAULT_MESH,
        }
    }
}

/// Searches for a point c with c·v > 0 for every input point. Tries the mean
/// and the points themselves, then pairwise cross products for small inputs,
/// and polishes the best candidate by subgradient ascent on the margin.
/// Returns None when no strict witness is found.
pub fn find_hemisphere_witness(points: &[SphericalPoint]) -> Option<SphericalPoint> {
    if points.is_empty() {
        return None;
    }
    let margin = |c: SphericalPoint| -> f64 {
        points
            .iter()
            .map(|v| c.dot(*v))
            .fold(f64::INFINITY, f64::min)
    };
    let (mut sx, mut sy, mut sz) = (0.0, 0.0, 0.0);
    for p in points {
        sx += p.x;
        sy += p.y;
        sz += p.z;
    }
    // the mean settles almost every practical input
    if let Ok(mean) = SphericalPoint::normalized(sx, sy, sz) {
        if margin(mean) > 1e-3 {
            return Some(mean);
        }
    }
    let mut candidates: Vec<SphericalPoint> = points.to_vec();
    if let Ok(mean) = SphericalPoint::normalized(sx, sy, sz) {
        candidates.push(mean);
    }
    if points.len() <= 200 {
        let mut feasible_rays: Vec<SphericalPoint> = Vec::new();
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                let (cx, cy, cz) = points[i].cross(points[j]);
                for sign in [1.0, -1.0] {
                    if let Ok(w) = SphericalPoint::normalized(sign * cx, sign * cy, sign * cz) {
                        if points.iter().all(|v| w.dot(*v) >= -1e-12) {
                            feasible_rays.push(w);
                        }
                    }
                }
            }
        }
        if !feasible_rays.is_empty() {
            let (mut rx, mut ry, mut rz) = (0.0, 0.0, 0.0);
            for r in &feasible_rays {
                rx += r.x;
                ry += r.y;
                rz += r.z;
            }
            if let Ok(c) = SphericalPoint::normalized(rx, ry, rz) {
                candidates.push(c);
            }
            candidates.extend(feasible_rays.into_iter().take(64));
        }
    }
    let mut best = candidates[0];
    let mut best_m = margin(best);
    for c in &candidates[1..] {
        let m = margin(*c);
        if m > best_m {
            best_m = m;
            best = *c;
        }
    }
    // subgradient polish: push toward the worst-satisfied point
    let mut cur = best;
    let mut step = 0.5;
    for _ in 0..200 {
        let worst = points
            .iter()
            .copied()
            .min_by(|a, b| cur.dot(*a).partial_cmp(&cur.dot(*b)).unwrap())
            .unwrap();
        let cand = SphericalPoint::normalized(
            cur.x + step * worst.x,
            cur.y + step * worst.y,
            cur.z + step * worst.z,
        );
        match cand {
            Ok(c) => {
                let m = margin(c);
                if m > margin(cur) {
                    cur = c;
                } else {
                    step *= 0.7;
                }
            }
            Err(_) => step *= 0.7,
        }
        if margin(cur) > best_m {
            best_m = margin(cur);
            best = cur;
        }
        if step < 1e-12 {
            break;
        }
    }
    if best_m > 1e-12 {
        Some(best)
    } else {
        None
    }
}

/// Spherical convex hull of a hemispherical point set: gnomonic-project
/// through a witness, take the planar hull, and keep the original points at
/// the hull indices (the projection maps polytopes to polytopes exactly).
pub fn s_conv_hull(points: &[SphericalPoint]) -> Result<SphericalPolygon> {
    let witness = find_hemisphere_witness(points).ok_or(GeomError::NotHemispherical)?;
    s_conv_hull_with_witness(points, witness)
}

pub fn s_conv_hull_with_witness(
    points: &[SphericalPoint],
    witness: SphericalPoint,
) -> Result<SphericalPolygon> {
    let rot = Rotation::between(witness, NORTH);
    let mut chart: Vec<(PlanarPoint, usize)> = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        let q = rot.apply(*p);
        if q.z <= 1e-9 {
            return Err(GeomError::NotHemispherical);
        }
        chart.push((central_project(q)?, i));
    }
    chart.sort_by(|a, b| (a.0.u, a.0.v).partial_cmp(&(b.0.u, b.0.v)).unwrap());
    chart.dedup_by(|a, b| a.0.u == b.0.u && a.0.v == b.0.v);
    if chart.len() < 3 {
        return Err(GeomError::Degenerate("hull has empty interior".into()));
    }
    let scale = chart
        .iter()
        .map(|(p, _)| p.u.abs().max(p.v.abs()))
        .fold(1.0, f64::max);
    let eps = 1e-12 * scale * scale;
    let turn = |a: PlanarPoint, b: PlanarPoint, c: PlanarPoint| (b - a).cross(c - b);
    let mut lower: Vec<(PlanarPoint, usize)> = Vec::new();
    for &(p, i) in &chart {
        while lower.len() >= 2 && turn(lower[lower.len() - 2].0, lower[lower.len() - 1].0, p) <= eps
        {
            lower.pop();
        }
        lower.push((p, i));
    }
    let mut upper: Vec<(PlanarPoint, usize)> = Vec::new();
    for &(p, i) in chart.iter().rev() {
        while upper.len() >= 2 && turn(upper[upper.len() - 2].0, upper[upper.len() - 1].0, p) <= eps
        {
            upper.pop();
        }
        upper.push((p, i));
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(GeomError::Degenerate("hull has empty interior".into()));
    }
    let verts: Vec<SphericalPoint> = lower.iter().map(|&(_, i)| points[i]).collect();
    SphericalPolygon::new(verts)
}

/// First zero colatitude along the meridian ray with azimuth φ (in the frame
/// where the polar's interior point is the pole) of the constraint P·R(t) ≥ 0.
fn first_zero_colatitude(p: SphericalPoint, cos_phi: f64, sin_phi: f64) -> f64 {
    let a = p.z;
    let b = p.x * cos_phi + p.y * sin_phi;
    b.atan2(a) + std::f64::consts::FRAC_PI_2
}

/// Boundary of the spherical polar set ∩ H(P), sampled along a uniform
/// azimuthal fan of size `k` around the polar's interior point. Exact for
/// polygon and polyline bodies: the binding constraint along each ray is
/// attained at a vertex.
pub fn polar_sampled(body: &SphericalBody, k: usize) -> Result<SampledSphericalBody> {
    if let SphericalBody::Cap(c) = body {
        return Ok(c.polar().to_sampled(k));
    }
    let c = body.witness();
    let rot = Rotation::between(c, NORTH);
    let constraints: Vec<SphericalPoint> = match body {
        SphericalBody::Polygon(p) => p.vertices().iter().map(|v| rot.apply(*v)).collect(),
        SphericalBody::Sampled(s) => s.boundary().iter().map(|v| rot.apply(*v)).collect(),
        SphericalBody::Cap(_) => unreachable!(),
    };
    let inv = rot.transpose();
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let phi = std::f64::consts::TAU * j as f64 / k as f64;
        let (cp, sp) = (phi.cos(), phi.sin());
        let t = constraints
            .iter()
            .map(|p| first_zero_colatitude(*p, cp, sp))
            .fold(f64::INFINITY, f64::min);
        if !(t > 1e-9) {
            return Err(GeomError::Degenerate("polar set has empty interior".into()));
        }
        if t >= std::f64::consts::FRAC_PI_2 - 1e-9 {
            return Err(GeomError::Degenerate(
                "polar boundary reaches the witness equator".into(),
            ));
        }
        let (st, ct) = (t.sin(), t.cos());
        out.push(inv.apply(SphericalPoint::normalized(st * cp, st * sp, ct).unwrap()));
    }
    SampledSphericalBody::with_measured_mesh(out, c)
}

/// Spherical distance via the chord; resolves small separations far below
/// the arccos noise floor.
fn robust_distance(a: SphericalPoint, b: SphericalPoint) -> f64 {
    2.0 * (0.5 * a.chord(b)).min(1.0).asin()
}

/// Exact distance from a point to the geodesic segment [a, b].
pub fn point_arc_distance(q: SphericalPoint, a: SphericalPoint, b: SphericalPoint) -> f64 {
    let (nx, ny, nz) = a.cross(b);
    let n = match SphericalPoint::normalized(nx, ny, nz) {
        Ok(n) => n,
        Err(_) => return robust_distance(q, a).min(robust_distance(q, b)),
    };
    let qn = q.dot(n);
    let fx = q.x - qn * n.x;
    let fy = q.y - qn * n.y;
    let fz = q.z - qn * n.z;
    if let Ok(foot) = SphericalPoint::normalized(fx, fy, fz) {
        // foot lies on the shorter arc iff it is forward of a and behind b;
        // the slack keeps queries at the endpoints from falling through on
        // sign noise
        let in_a = det3(a, foot, n) >= -1e-12;
        let in_b = det3(foot, b, n) >= -1e-12;
        if in_a && in_b {
            return qn.abs().asin();
        }
    }
    robust_distance(q, a).min(robust_distance(q, b))
}

/// Distance from a point to the body boundary (polyline/edge-exact).
pub fn boundary_distance(body: &SphericalBody, q: SphericalPoint) -> f64 {
    match body {
        SphericalBody::Cap(c) => (q.distance(c.center) - c.radius).abs(),
        SphericalBody::Polygon(p) => {
            let v = p.vertices();
            let n = v.len();
            (0..n)
                .map(|i| point_arc_distance(q, v[i], v[(i + 1) % n]))
                .fold(f64::INFINITY, f64::min)
        }
        SphericalBody::Sampled(s) => {
            let v = s.boundary();
            let n = v.len();
            (0..n)
                .map(|i| point_arc_distance(q, v[i], v[(i + 1) % n]))
                .fold(f64::INFINITY, f64::min)
        }
    }
}

/// Azimuth-indexed distance to a polygon boundary. Queries look only at
/// edges within an azimuth window around the query direction (as seen from
/// an interior star center), which is exact for points near the boundary of
/// a star-shaped cycle; distances of far points may be overestimated.
pub struct BoundaryIndex {
    frame: Rotation,
    verts: Vec<SphericalPoint>,
    azimuths: Vec<f64>,
    window: f64,
}

impl BoundaryIndex {
    pub fn new(poly: &SphericalPolygon) -> BoundaryIndex {
        let center = poly.interior_point();
        let frame = Rotation::between(center, NORTH);
        let n = poly.vertices().len();
        let raw_az: Vec<f64> = poly
            .vertices()
            .iter()
            .map(|v| frame.apply(*v).azimuth())
            .collect();
        // rotate the cycle so azimuths start at the minimum and increase
        let start = raw_az
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .map(|(i, _)| i)
            .unwrap_or(0);
        let verts: Vec<SphericalPoint> = (0..n).map(|i| poly.vertices()[(start + i) % n]).collect();
        let azimuths: Vec<f64> = (0..n).map(|i| raw_az[(start + i) % n]).collect();
        // convex CCW cycles are azimuth-monotone around any interior point
        debug_assert!(azimuths.windows(2).all(|w| w[0] <= w[1]));
        // widest azimuth gap between consecutive vertices bounds how local
        // the nearest edge can be
        let mut max_gap: f64 = (azimuths[0] + std::f64::consts::TAU - azimuths[n - 1]).abs();
        for w in azimuths.windows(2) {
            max_gap = max_gap.max(w[1] - w[0]);
        }
        BoundaryIndex {
            frame,
            verts,
            azimuths,
            window: (4.0 * max_gap).max(0.15),
        }
    }

    pub fn distance(&self, q: SphericalPoint) -> f64 {
        let n = self.verts.len();
        let local = self.frame.apply(q);
        if local.x.hypot(local.y) < 1e-9 {
            // azimuth undefined at the star center; full scan
            return (0..n)
                .map(|i| point_arc_distance(q, self.verts[i], self.verts[(i + 1) % n]))
                .fold(f64::INFINITY, f64::min);
        }
        let az = local.azimuth();
        let pos = self.azimuths.partition_point(|a| *a <= az);
        let mut best = f64::INFINITY;
        // walk outward from the insertion point while within the window
        let reach = |k: isize| -> usize { k.rem_euclid(n as isize) as usize };
        for dir in [-1i64, 1i64] {
            let mut steps = 0i64;
            loop {
                let k = pos as i64 + if dir < 0 { -1 - steps } else { steps };
                let i = reach(k as isize);
                let gap = (self.azimuths[i] - az).abs();
                let gap = gap.min(std::f64::consts::TAU - gap);
                // evaluate the first out-of-window edge too: walking down,
                // its far end still reaches into the window
                let last = steps > 0 && gap > self.window;
                best = best.min(point_arc_distance(
                    q,
                    self.verts[i],
                    self.verts[(i + 1) % n],
                ));
                steps += 1;
                if last || steps as usize >= n {
                    break;
                }
            }
        }
        best
    }
}

fn inside_by_poles(vertices: &[SphericalPoint], q: SphericalPoint) -> bool {
    let n = vertices.len();
    for i in 0..n {
        let (cx, cy, cz) = vertices[i].cross(vertices[(i + 1) % n]);
        if cx * q.x + cy * q.y + cz * q.z < 0.0 {
            return false;
        }
    }
    true
}

/// Classifies a point against the body with boundary-band tolerance `tol`.
pub fn classify(body: &SphericalBody, q: SphericalPoint, tol: f64) -> Location {
    match body {
        SphericalBody::Cap(c) => {
            let d = q.distance(c.center);
            if (d - c.radius).abs() <= tol {
                Location::Boundary
            } else if d < c.radius {
                Location::Interior
            } else {
                Location::Exterior
            }
        }
        SphericalBody::Polygon(p) => {
            if boundary_distance(body, q) <= tol {
                Location::Boundary
            } else if inside_by_poles(p.vertices(), q) {
                Location::Interior
            } else {
                Location::Exterior
            }
        }
        SphericalBody::Sampled(s) => {
            if boundary_distance(body, q) <= tol {
                Location::Boundary
            } else if inside_by_poles(s.boundary(), q) {
                Location::Interior
            } else {
                Location::Exterior
            }
        }
    }
}

/// Boundary of the polar body, as a body: the centers of all supporting
/// hemispheres of the input trace exactly this curve. For sampled bodies the
/// polar of the inscribed polyline is returned as an exact polygon (a fan
/// resampling would cut its corners).
pub fn supporting_centers(body: &SphericalBody) -> Result<SphericalBody> {
    match body {
        SphericalBody::Polygon(p) => Ok(SphericalBody::Polygon(p.polar()?)),
        SphericalBody::Sampled(s) => Ok(SphericalBody::Polygon(s.inscribed_polygon()?.polar()?)),
        SphericalBody::Cap(c) => Ok(SphericalBody::Cap(c.polar())),
    }
}

/// Supporting hemispheres at a boundary point: a single hemisphere at a
/// smooth or edge-interior point, the fan between the adjacent edge poles at
/// a polygon vertex (represented by its two extreme hemispheres).
#[derive(Debug, Clone)]
pub struct SupportFan {
    pub hemispheres: Vec<Hemisphere>,
    pub is_fan: bool,
}

impl SupportFan {
    /// Midpoint of the fan (the hemisphere itself when not a fan).
    pub fn principal(&self) -> Hemisphere {
        if self.hemispheres.len() == 1 {
            self.hemispheres[0]
        } else {
            let a = self.hemispheres[0].center;
            let b = self.hemispheres[1].center;
            Hemisphere::new(
                SphericalPoint::normalized(a.x + b.x, a.y + b.y, a.z + b.z)
                    .expect("fan extremes are not antipodal"),
            )
        }
    }
}

pub fn supporting_hemispheres_at(body: &SphericalBody, p: SphericalPoint) -> Result<SupportFan> {
    let tol = match body {
        SphericalBody::Sampled(s) => (s.mesh() * 0.5).max(1e-9),
        _ => 1e-9,
    };
    if classify(body, p, tol) != Location::Boundary {
        return Err(GeomError::NotOnBoundary);
    }
    match body {
        SphericalBody::Cap(c) => {
            let (sr, cr) = (c.radius.sin(), c.radius.cos());
            let center = SphericalPoint::normalized(
                c.center.x - cr * p.x,
                c.center.y - cr * p.y,
                c.center.z - cr * p.z,
            )
            .map(|v| SphericalPoint {
                x: v.x,
                y: v.y,
                z: v.z,
            })
            .expect("boundary point differs from the cap axis");
            let _ = sr;
            Ok(SupportFan {
                hemispheres: vec![Hemisphere::new(center)],
                is_fan: false,
            })
        }
        SphericalBody::Polygon(poly) => {
            let v = poly.vertices();
            let n = v.len();
            let poles = poly.edge_poles();
            let mut touching: Vec<usize> = Vec::new();
            for i in 0..n {
                if point_arc_distance(p, v[i], v[(i + 1) % n]) <= tol {
                    touching.push(i);
                }
            }
            match touching.len() {
                0 => Err(GeomError::NotOnBoundary),
                1 => Ok(SupportFan {
                    hemispheres: vec![Hemisphere::new(poles[touching[0]])],
                    is_fan: false,
                }),
                _ => {
                    // vertex: fan between the two adjacent edge poles
                    let a = poles[touching[0]];
                    let b = poles[*touching.last().unwrap()];
                    Ok(SupportFan {
                        hemispheres: vec![Hemisphere::new(b), Hemisphere::new(a)],
                        is_fan: a.distance(b) > 1e-12,
                    })
                }
            }
        }
        SphericalBody::Sampled(s) => {
            let v = s.boundary();
            let n = v.len();
            let mut best = 0;
            let mut best_d = f64::INFINITY;
            for i in 0..n {
                let d = point_arc_distance(p, v[i], v[(i + 1) % n]);
                if d < best_d {
                    best_d = d;
                    best = i;
                }
            }
            let pole = |i: usize| -> SphericalPoint {
                let (cx, cy, cz) = v[i % n].cross(v[(i + 1) % n]);
                SphericalPoint::normalized(cx, cy, cz).expect("distinct samples")
            };
            // at a sample point, report the fan between adjacent edge poles
            let at_vertex = p.distance(v[best]) <= tol || p.distance(v[(best + 1) % n]) <= tol;
            if at_vertex {
                let i = if p.distance(v[best]) <= tol {
                    best
                } else {
                    (best + 1) % n
                };
                let a = pole((i + n - 1) % n);
                let b = pole(i);
                Ok(SupportFan {
                    hemispheres: vec![Hemisphere::new(a), Hemisphere::new(b)],
                    is_fan: a.distance(b) > 1e-12,
                })
            } else {
                Ok(SupportFan {
                    hemispheres: vec![Hemisphere::new(pole(best))],
                    is_fan: false,
                })
            }
        }
    }
}

/// Discrete smoothness: true when the supporting fan extent at every
/// boundary point is at most `tol`. Polygons always report false.
pub fn is_smooth(body: &SphericalBody, tol: f64) -> bool {
    match body {
        SphericalBody::Cap(_) => true,
        SphericalBody::Polygon(_) => false,
        SphericalBody::Sampled(s) => {
            let v = s.boundary();
            let n = v.len();
            let poles: Vec<SphericalPoint> = (0..n)
                .map(|i| {
                    let (cx, cy, cz) = v[i].cross(v[(i + 1) % n]);
                    SphericalPoint::normalized(cx, cy, cz).expect("distinct samples")
                })
                .collect();
            (0..n).all(|i| poles[i].distance(poles[(i + 1) % n]) <= tol)
        }
    }
}
