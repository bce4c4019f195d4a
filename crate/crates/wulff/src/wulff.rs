//! Wulff-shape pipeline: planar convex bodies built from positive support
//! functions as intersections of halfplanes x·θ ≤ γ(θ), their lifts to S²
//! by the inverse central projection, and the dual body computed two ways —
//! directly in the plane (negated classical polar) and through the full
//! spherical composition (lift the support graph, blow up, take the
//! spherical polar, project back).

use crate::error::{GeomError, Result};
use crate::planar::{hausdorff_planar, polar_dual, PlanarConvexBody};
use crate::region::{
    boundary_distance, classify, Location, SampledSphericalBody, SphericalBody, SphericalPolygon,
};
use crate::sphere::{blow_up, central_unproject, PlanarPoint, SphericalPoint, NORTH};
use std::f64::consts::{PI, TAU};

/// Positive continuous support function on the unit circle of directions.
#[derive(Debug, Clone)]
pub enum SupportFunction {
    Constant(f64),
    Ellipse {
        a: f64,
        b: f64,
    },
    PolygonGamma(PlanarConvexBody),
    Sampled(Vec<(f64, f64)>),
    /// Support function of the central projection of the width-π/2 spherical
    /// Reuleaux triangle (corner radius 0 is the exact triangle).
    ReuleauxLift {
        corner_radius: f64,
        boundary: Vec<PlanarPoint>,
    },
}

impl SupportFunction {
    pub fn constant(c: f64) -> Result<Self> {
        if !(c > 0.0) {
            return Err(GeomError::NotPositive { field: "c".into() });
        }
        Ok(SupportFunction::Constant(c))
    }

    pub fn ellipse(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0) {
            return Err(GeomError::NotPositive { field: "a".into() });
        }
        if !(b > 0.0) {
            return Err(GeomError::NotPositive { field: "b".into() });
        }
        Ok(SupportFunction::Ellipse { a, b })
    }

    pub fn polygon_gamma(body: PlanarConvexBody) -> Self {
        // origin is strictly interior by construction, so the support is positive
        SupportFunction::PolygonGamma(body)
    }

    /// Strictly increasing angles in [0, 2π), positive values, at least 8
    /// samples, and no wraparound jump beyond 10× the median neighbor
    /// variation.
    pub fn sampled(samples: Vec<(f64, f64)>) -> Result<Self> {
        if samples.len() < 8 {
            return Err(GeomError::invalid("samples", "need at least 8 samples"));
        }
        for (i, &(t, g)) in samples.iter().enumerate() {
            if !(0.0..TAU).contains(&t) {
                return Err(GeomError::invalid(
                    "samples",
                    format!("theta[{i}] outside [0, 2pi)"),
                ));
            }
            if !(g > 0.0) {
                return Err(GeomError::NotPositive {
                    field: format!("gamma[{i}]"),
                });
            }
            if i > 0 && t <= samples[i - 1].0 {
                return Err(GeomError::invalid(
                    "samples",
                    "theta must be strictly increasing",
                ));
            }
        }
        let mut diffs: Vec<f64> = samples
            .windows(2)
            .map(|w| (w[1].1 - w[0].1).abs())
            .collect();
        diffs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median = diffs[diffs.len() / 2];
        let gmax = samples.iter().map(|s| s.1).fold(0.0, f64::max);
        let wrap = (samples[0].1 - samples.last().unwrap().1).abs();
        if wrap > 10.0 * median + 1e-9 * gmax {
            return Err(GeomError::invalid(
                "samples",
                "wraparound jump exceeds 10x the median neighbor variation",
            ));
        }
        Ok(SupportFunction::Sampled(samples))
    }

    pub fn reuleaux_lift(corner_radius: f64) -> Result<Self> {
        let boundary = crate::presets::reuleaux_planar_boundary(corner_radius)?;
        Ok(SupportFunction::ReuleauxLift {
            corner_radius,
            boundary,
        })
    }

    pub fn eval(&self, theta: f64) -> f64 {
        match self {
            SupportFunction::Constant(c) => *c,
            SupportFunction::Ellipse { a, b } => {
                let (s, c) = theta.sin_cos();
                (a * a * c * c + b * b * s * s).sqrt()
            }
            SupportFunction::PolygonGamma(body) => {
                let (s, c) = theta.sin_cos();
                body.support(PlanarPoint { u: c, v: s })
            }
            SupportFunction::Sampled(samples) => {
                let t = theta.rem_euclid(TAU);
                let n = samples.len();
                let idx = samples.partition_point(|&(ti, _)| ti <= t);
                let (t0, g0, t1, g1) = if idx == 0 || idx == n {
                    let (tl, gl) = samples[n - 1];
                    let (tf, gf) = samples[0];
                    if idx == 0 {
                        (tl - TAU, gl, tf, gf)
                    } else {
                        (tl, gl, tf + TAU, gf)
                    }
                } else {
                    let (ta, ga) = samples[idx - 1];
                    let (tb, gb) = samples[idx];
                    (ta, ga, tb, gb)
                };
                let w = if t1 > t0 { (t - t0) / (t1 - t0) } else { 0.0 };
                g0 + w * (g1 - g0)
            }
            SupportFunction::ReuleauxLift { boundary, .. } => {
                let (s, c) = theta.sin_cos();
                let dir = PlanarPoint { u: c, v: s };
                boundary
                    .iter()
                    .map(|p| p.dot(dir))
                    .fold(f64::NEG_INFINITY, f64::max)
            }
        }
    }
}

/// Halfplane { x : x·theta ≤ gamma } with a unit direction and positive offset.
#[derive(Debug, Clone, Copy)]
pub struct HalfPlane {
    pub theta: PlanarPoint,
    pub gamma: f64,
}

impl HalfPlane {
    pub fn new(theta: PlanarPoint, gamma: f64) -> Result<Self> {
        if (theta.norm() - 1.0).abs() > 1e-12 {
            return Err(GeomError::invalid("theta", "direction must be unit-norm"));
        }
        if !(gamma > 0.0) {
            return Err(GeomError::NotPositive {
                field: "gamma".into(),
            });
        }
        Ok(HalfPlane { theta, gamma })
    }
}

/// Primal body, its dual, their Hausdorff distance, and the verdict.
#[derive(Debug, Clone)]
pub struct WulffPair {
    pub primal: PlanarConvexBody,
    pub dual: PlanarConvexBody,
    pub hausdorff_distance: f64,
    pub self_dual: bool,
}

/// Default Hausdorff tolerance for the self-duality verdict: tight for exact
/// polygons, second-order mesh budget for sampled constructions.
pub fn default_self_dual_tol(k: usize, sampled: bool) -> f64 {
    if sampled {
        10.0 * (TAU / k as f64).powi(2)
    } else {
        1e-6
    }
}

/// Discretizes a support function into K halfplanes at uniformly spaced
/// directions θ_k = 2πk/K.
pub fn sample_gamma(sf: &SupportFunction, k: usize) -> Result<Vec<HalfPlane>> {
    if k < 8 {
        return Err(GeomError::invalid("k", "need at least 8 directions"));
    }
    (0..k)
        .map(|i| {
            let theta = TAU * i as f64 / k as f64;
            let (s, c) = theta.sin_cos();
            let g = sf.eval(theta);
            if !(g > 0.0) {
                return Err(GeomError::NotPositive {
                    field: format!("gamma({theta})"),
                });
            }
            HalfPlane::new(PlanarPoint { u: c, v: s }, g)
        })
        .collect()
}

/// Intersection polygon of the halfplanes x·θ ≤ γ. Computed by classical
/// polarity: the intersection equals the polar body of the point set
/// { θ/γ }, so redundant constraints drop out with the planar hull.
pub fn wulff_construct(halfplanes: &[HalfPlane]) -> Result<PlanarConvexBody> {
    if halfplanes.len() < 8 {
        return Err(GeomError::invalid(
            "halfplanes",
            "need at least 8 halfplanes",
        ));
    }
    let mut angles: Vec<f64> = halfplanes
        .iter()
        .map(|h| h.theta.v.atan2(h.theta.u).rem_euclid(TAU))
        .collect();
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut max_gap: f64 = TAU - angles[angles.len() - 1] + angles[0];
    for w in angles.windows(2) {
        max_gap = max_gap.max(w[1] - w[0]);
    }
    if max_gap >= PI {
        return Err(GeomError::Unbounded);
    }
    let points: Vec<PlanarPoint> = halfplanes
        .iter()
        .map(|h| PlanarPoint {
            u: h.theta.u / h.gamma,
            v: h.theta.v / h.gamma,
        })
        .collect();
    let body = polar_dual(&points)?;
    debug_assert!(body.contains(PlanarPoint { u: 0.0, v: 0.0 }));
    Ok(body)
}

/// Lift of a planar body to the sphere by the inverse central projection.
/// Dense boundaries (≥ 64 vertices) become sampled bodies; small vertex
/// counts stay genuine spherical polygons.
pub fn spherical_wulff(w: &PlanarConvexBody) -> SphericalBody {
    let lifted: Vec<SphericalPoint> = w.vertices().iter().map(|p| central_unproject(*p)).collect();
    if lifted.len() < 64 {
        SphericalBody::Polygon(SphericalPolygon::new(lifted).expect("lift of a valid planar body"))
    } else {
        SphericalBody::Sampled(
            SampledSphericalBody::with_measured_mesh(lifted, NORTH)
                .expect("lift of a valid planar body"),
        )
    }
}

/// Dual Wulff shape: project(polar(lift(W))) computed exactly in the plane.
/// The spherical polar with H(P) = {Q : P·Q ≥ 0} projects to x·y ≥ −1, so
/// the result is the negation of the classical polar body {y : x·y ≤ 1}.
pub fn dual_wulff(w: &PlanarConvexBody) -> Result<PlanarConvexBody> {
    Ok(polar_dual(w.vertices())?.negated())
}

/// Wulff shape recovered through the spherical composition: lift the polar
/// plot of γ, blow each point up with respect to the pole, intersect the
/// hemispheres centered at the images, and project back down. Cross-validates
/// the direct halfplane construction.
pub fn dual_via_pipeline(sf: &SupportFunction, k: usize) -> Result<PlanarConvexBody> {
    if k < 8 {
        return Err(GeomError::invalid("k", "need at least 8 directions"));
    }
    let mut halfplanes = Vec::with_capacity(k);
    for i in 0..k {
        let theta = TAU * i as f64 / k as f64;
        let g = sf.eval(theta);
        if !(g > 0.0) {
            return Err(GeomError::NotPositive {
                field: format!("gamma({theta})"),
            });
        }
        let (s, c) = theta.sin_cos();
        let graph_pt = PlanarPoint { u: g * c, v: g * s };
        let lifted = central_unproject(graph_pt);
        let b = blow_up(NORTH, lifted)?;
        // H(b) ∩ {z > 0} projects to the halfplane b_x u + b_y v + b_z ≥ 0
        let sxy = b.x.hypot(b.y);
        if sxy < 1e-300 || b.z <= 0.0 {
            return Err(GeomError::Degenerate("blow-up image degenerate".into()));
        }
        halfplanes.push(HalfPlane::new(
            PlanarPoint {
                u: -b.x / sxy,
                v: -b.y / sxy,
            },
            b.z / sxy,
        )?);
    }
    wulff_construct(&halfplanes)
}

/// Computes the dual and the self-duality verdict at the given Hausdorff
/// tolerance.
pub fn is_self_dual(w: &PlanarConvexBody, tol: f64) -> Result<WulffPair> {
    let dual = dual_wulff(w)?;
    let d = hausdorff_planar(w, &dual);
    Ok(WulffPair {
        primal: w.clone(),
        dual,
        hausdorff_distance: d,
        self_dual: d <= tol,
    })
}

/// Default near-zero threshold for detecting boundary/support-graph touch
/// points.
pub fn default_support_tol(body: &SphericalBody) -> f64 {
    match body {
        SphericalBody::Sampled(s) => (10.0 * s.mesh() * s.mesh()).max(1e-9),
        _ => 1e-9,
    }
}

/// Points of ∂W̃ ∩ Ψ_M(∂(W̃°)): boundary points P (with M·P > 0) whose
/// blow-up with respect to M lands on the boundary of the polar body.
/// Equivalently, under the projection that recenters M to the pole, these are
/// the points of ∂W ∩ graph(γ) for the support function measured from M.
/// Non-empty for every interior M: the boundary point farthest from M's
/// projection always qualifies.
pub fn boundary_support_intersection(
    body: &SphericalBody,
    m: SphericalPoint,
) -> Result<Vec<SphericalPoint>> {
    boundary_support_intersection_with_tol(body, m, default_support_tol(body))
}

pub fn boundary_support_intersection_with_tol(
    body: &SphericalBody,
    m: SphericalPoint,
    tol: f64,
) -> Result<Vec<SphericalPoint>> {
    let polar = crate::region::supporting_centers(body)?;
    let polar_index = match &polar {
        SphericalBody::Polygon(p) if p.vertices().len() > 128 => {
            Some(crate::region::BoundaryIndex::new(p))
        }
        _ => None,
    };
    boundary_support_intersection_prepared(body, m, tol, &polar, polar_index.as_ref())
}

/// Variant that reuses a precomputed polar body (and optional distance
/// index) across many interior points.
pub fn boundary_support_intersection_prepared(
    body: &SphericalBody,
    m: SphericalPoint,
    tol: f64,
    polar: &SphericalBody,
    polar_index: Option<&crate::region::BoundaryIndex>,
) -> Result<Vec<SphericalPoint>> {
    if classify(body, m, 1e-9) != Location::Interior {
        return Err(GeomError::NotInterior);
    }
    // distance of the blow-up image to the polar boundary; infinite where
    // the blow-up cannot reach (far side of m) or is undefined
    let dist_at = |p: SphericalPoint| -> f64 {
        if m.dot(p) <= 1e-9 {
            return f64::INFINITY;
        }
        match blow_up(m, p) {
            Ok(psi) => match polar_index {
                Some(index) => index.distance(psi),
                None => boundary_distance(polar, psi),
            },
            Err(_) => f64::INFINITY,
        }
    };

    // continuous boundary parameterization by fractional sample index, so
    // refinement stays on the true boundary (caps follow their circle, the
    // others their polyline arcs)
    let point_of: Box<dyn Fn(f64) -> SphericalPoint>;
    let n: usize;
    match body {
        SphericalBody::Cap(c) => {
            n = 2048;
            let rot = crate::sphere::Rotation::between(NORTH, c.center);
            let (sr, cr) = (c.radius.sin(), c.radius.cos());
            let count = n as f64;
            point_of = Box::new(move |u: f64| {
                let phi = TAU * u.rem_euclid(count) / count;
                rot.apply(SphericalPoint::normalized(sr * phi.cos(), sr * phi.sin(), cr).unwrap())
            });
        }
        _ => {
            let samples: Vec<SphericalPoint> = match body {
                SphericalBody::Polygon(_) => body.boundary_samples(1024),
                SphericalBody::Sampled(s) => s.boundary().to_vec(),
                SphericalBody::Cap(_) => unreachable!(),
            };
            n = samples.len();
            let count = n as f64;
            point_of = Box::new(move |u: f64| {
                let u = u.rem_euclid(count);
                let i = u.floor() as usize % samples.len();
                let frac = u - u.floor();
                let a = samples[i];
                if frac < 1e-12 {
                    return a;
                }
                let b = samples[(i + 1) % samples.len()];
                match crate::sphere::GreatArc::new(a, b) {
                    Ok(arc) => arc.point_at(frac).unwrap(),
                    Err(_) => a,
                }
            });
        }
    }

    let d: Vec<f64> = (0..n).map(|i| dist_at(point_of(i as f64))).collect();
    let dmax = d.iter().copied().fold(0.0, f64::max);
    if dmax <= tol {
        // the whole boundary qualifies (rotationally symmetric case)
        return Ok((0..n).map(|i| point_of(i as f64)).collect());
    }

    // local minima of the distance along the boundary, refined in place
    let mut found: Vec<SphericalPoint> = Vec::new();
    for i in 0..n {
        let prev = d[(i + n - 1) % n];
        let next = d[(i + 1) % n];
        if d[i] <= prev && d[i] <= next && d[i].is_finite() {
            let eval = |u: f64| dist_at(point_of(u));
            let (ubest, dbest) =
                crate::metrics::golden_min(&eval, i as f64 - 1.0, i as f64 + 1.0, 96);
            if dbest <= tol {
                found.push(point_of(ubest));
            }
        }
    }
    // deduplicate nearby finds
    let sep = match body {
        SphericalBody::Sampled(s) => 2.0 * s.mesh(),
        SphericalBody::Cap(c) => 2.0 * TAU * c.radius.sin() / n as f64,
        SphericalBody::Polygon(_) => 1e-6,
    };
    let mut out: Vec<SphericalPoint> = Vec::new();
    for p in found {
        if out.iter().all(|q| q.distance(p) > sep) {
            out.push(p);
        }
    }
    if out.len() >= 2 {
        let first = out[0];
        if out.last().unwrap().distance(first) <= sep {
            out.pop();
        }
    }
    Ok(out)
}

/// Vertex-wise cyclic comparison of two planar polygons.
pub fn polygons_close(a: &PlanarConvexBody, b: &PlanarConvexBody, tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    'outer: for shift in 0..n {
        for i in 0..n {
            let va = a.vertices()[i];
            let vb = b.vertices()[(i + shift) % n];
            if (va - vb).norm() > tol {
                continue 'outer;
            }
        }
        return true;
    }
    false
}
