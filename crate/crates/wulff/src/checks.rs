//! Executable numerical checks of the self-duality characterizations:
//! constant-width polygons have width exactly π/2; a Wulff shape is
//! self-dual iff its spherical lift has constant width π/2 iff it has
//! constant diameter π/2; the polar of a constant-width-δ body has constant
//! width π − δ; constant width below π/2 forces strict convexity; and for
//! smooth bodies, self-duality is equivalent to the blow-up of every
//! boundary/support-graph intersection point landing on the boundary.

use crate::error::Result;
use crate::metrics::{
    diameter, diameter_support_check, is_constant_diameter, is_constant_width, thickness,
};
use crate::planar::PlanarConvexBody;
use crate::presets::Preset;
use crate::region::{
    boundary_distance, classify, is_smooth, s_conv_hull, supporting_centers,
    supporting_hemispheres_at, Location, SphericalBody, SphericalPolygon, DEFAULT_SMOOTH_TOL,
};
use crate::report::{CheckReport, CheckStatus};
use crate::sphere::{blow_up, GreatArc, Rotation, SphericalPoint};
use crate::wulff::{default_self_dual_tol, is_self_dual, spherical_wulff};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Independent deterministic stream per (master seed, check name), so that
/// parallel scheduling cannot change any result.
pub fn rng_for(seed: u64, name: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ fnv1a(name))
}

pub fn random_unit(rng: &mut ChaCha8Rng) -> SphericalPoint {
    loop {
        let x: f64 = rng.sample(rand_distr::StandardNormal);
        let y: f64 = rng.sample(rand_distr::StandardNormal);
        let z: f64 = rng.sample(rand_distr::StandardNormal);
        if let Ok(p) = SphericalPoint::normalized(x, y, z) {
            return p;
        }
    }
}

pub fn random_rotation(rng: &mut ChaCha8Rng) -> Rotation {
    loop {
        let e1 = random_unit(rng);
        let raw = random_unit(rng);
        let d = e1.dot(raw);
        let e2 = match SphericalPoint::normalized(
            raw.x - d * e1.x,
            raw.y - d * e1.y,
            raw.z - d * e1.z,
        ) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let (cx, cy, cz) = e1.cross(e2);
        let e3 = SphericalPoint::normalized(cx, cy, cz).expect("orthonormal frame");
        return Rotation::from_frame(e1, e2, e3);
    }
}

/// Uniform point in the cap of the given radius about `center`.
pub fn random_in_cap(rng: &mut ChaCha8Rng, center: SphericalPoint, radius: f64) -> SphericalPoint {
    let zmin = radius.cos();
    let z = zmin + (1.0 - zmin) * rng.gen::<f64>();
    let az = TAU * rng.gen::<f64>();
    let s = (1.0 - z * z).sqrt();
    let local = SphericalPoint::normalized(s * az.cos(), s * az.sin(), z).unwrap();
    Rotation::between(crate::sphere::NORTH, center).apply(local)
}

/// Random spherical convex polygon: 3-10 points in a cap of radius 0.4π
/// about a random center, hulled; degenerate or needle-thin hulls are
/// resampled.
pub fn random_spherical_polygon(rng: &mut ChaCha8Rng) -> SphericalPolygon {
    loop {
        let center = random_unit(rng);
        let k = rng.gen_range(3..=10);
        let pts: Vec<SphericalPoint> = (0..k)
            .map(|_| random_in_cap(rng, center, 0.4 * PI))
            .collect();
        let hull = match s_conv_hull(&pts) {
            Ok(h) => h,
            Err(_) => continue,
        };
        let v = hull.vertices();
        let n = v.len();
        let mut ok = n >= 3;
        for i in 0..n {
            if v[i].distance(v[(i + 1) % n]) < 1e-2 {
                ok = false;
            }
        }
        if ok {
            return hull;
        }
    }
}

/// Random support function: a positive trigonometric polynomial sampled at
/// jittered angles.
pub fn random_sampled_support(rng: &mut ChaCha8Rng) -> crate::wulff::SupportFunction {
    loop {
        let n = rng.gen_range(16..=48);
        let c0 = 0.8 + 0.7 * rng.gen::<f64>();
        let amps: Vec<(f64, f64)> = (1..=3)
            .map(|j| {
                (
                    0.15 * c0 / j as f64 * rng.gen::<f64>(),
                    TAU * rng.gen::<f64>(),
                )
            })
            .collect();
        let samples: Vec<(f64, f64)> = (0..n)
            .map(|i| {
                let base = TAU * i as f64 / n as f64;
                let jitter = 0.3 * (TAU / n as f64) * (rng.gen::<f64>() - 0.5);
                let t = (base + jitter).clamp(0.0, TAU - 1e-9);
                let g = c0
                    + amps
                        .iter()
                        .enumerate()
                        .map(|(j, (a, phi))| a * ((j as f64 + 1.0) * t + phi).cos())
                        .sum::<f64>();
                (t, g)
            })
            .collect();
        if let Ok(sf) = crate::wulff::SupportFunction::sampled(samples) {
            return sf;
        }
    }
}

/// Every random or constructed spherical convex polygon that measures as
/// constant width must have width exactly π/2; the octant and its rotations
/// must report constant width π/2 outright.
pub fn check_constant_width_polytope(trials: u64, seed: u64, tol: f64) -> Result<CheckReport> {
    let mut report = CheckReport::new("constant_width_polytope", seed, trials);
    let mut rng = rng_for(seed, "constant_width_polytope");
    let mut constant_count = 0u64;
    let mut worst_delta_dev: f64 = 0.0;
    for _ in 0..trials {
        let poly = random_spherical_polygon(&mut rng);
        let body = SphericalBody::Polygon(poly.clone());
        let wr = is_constant_width(&body, tol)?;
        if wr.constant {
            constant_count += 1;
            let dev = (wr.delta - FRAC_PI_2).abs();
            worst_delta_dev = worst_delta_dev.max(dev);
            if dev > tol {
                report.fail();
                for v in poly.vertices() {
                    report.witness_spherical(*v);
                }
            }
        }
    }
    report.residual("constant_width_instances", constant_count as f64);
    report.check("constant_width_delta_deviation", worst_delta_dev, tol);

    // octant and 20 random rotations: constant width with delta = pi/2
    let mut worst_octant: f64 = 0.0;
    let mut worst_spread: f64 = 0.0;
    for i in 0..=20 {
        let rot = if i == 0 {
            Rotation::identity()
        } else {
            random_rotation(&mut rng)
        };
        let verts: Vec<SphericalPoint> = crate::presets::octant_polygon()
            .vertices()
            .iter()
            .map(|v| rot.apply(*v))
            .collect();
        let body = SphericalBody::Polygon(SphericalPolygon::new(verts.clone())?);
        let wr = is_constant_width(&body, 1e-9)?;
        worst_spread = worst_spread.max(wr.max_width - wr.min_width);
        worst_octant = worst_octant.max((wr.delta - FRAC_PI_2).abs());
        if !wr.constant || (wr.delta - FRAC_PI_2).abs() > 1e-9 {
            report.fail();
            for v in &verts {
                report.witness_spherical(*v);
            }
        }
    }
    report.check("octant_width_spread", worst_spread, 1e-9);
    report.check("octant_delta_residual", worst_octant, 1e-9);
    Ok(report)
}

/// The three self-duality characterizations must agree: (a) W = DW, (b) the
/// lift has constant width π/2, (c) the lift has constant diameter π/2.
pub fn check_selfdual_equivalences(w: &PlanarConvexBody, tol: f64) -> Result<CheckReport> {
    let mut report = CheckReport::new("selfdual_equivalences", 0, 1);
    let sampled = w.len() >= 64;
    let sd_tol = default_self_dual_tol(if sampled { w.len() } else { 2048 }, sampled);
    let pair = is_self_dual(w, sd_tol)?;
    let lift = spherical_wulff(w);
    let wr = is_constant_width(&lift, tol)?;
    let dr = is_constant_diameter(&lift, tol)?;
    let a = pair.self_dual;
    let b = wr.constant && (wr.delta - FRAC_PI_2).abs() <= tol;
    let c = dr.constant && (dr.diameter - FRAC_PI_2).abs() <= tol;
    report.residual("self_dual", a as u64 as f64);
    report.residual("constant_width_half_pi", b as u64 as f64);
    report.residual("constant_diameter_half_pi", c as u64 as f64);
    report.residual("hausdorff_primal_dual", pair.hausdorff_distance);
    report.residual("width_spread", wr.max_width - wr.min_width);
    report.residual("width_delta", wr.delta);
    report.residual("diameter", dr.diameter);
    if a != b || b != c {
        report.fail();
        report.witness_spherical(wr.argmin_center);
        report.witness_spherical(wr.argmax_center);
        report.witness_spherical(dr.witness_p);
        report.witness_spherical(dr.witness_q);
    }
    Ok(report)
}

/// A constant-width-δ body must have a polar of constant width π − δ.
pub fn check_width_duality(body: &SphericalBody, tol: f64) -> Result<CheckReport> {
    let mut report = CheckReport::new("width_duality", 0, 1);
    let wr = is_constant_width(body, tol)?;
    if !wr.constant {
        report.residual("width_spread", wr.max_width - wr.min_width);
        report.not_applicable();
        return Ok(report);
    }
    let polar = supporting_centers(body)?;
    let pr = is_constant_width(&polar, tol)?;
    report.residual("delta", wr.delta);
    report.residual("polar_delta", pr.delta);
    report.check("polar_width_spread", pr.max_width - pr.min_width, tol);
    report.check("duality_residual", (pr.delta - (PI - wr.delta)).abs(), tol);
    if report.status == CheckStatus::Fail {
        report.witness_spherical(pr.argmin_center);
        report.witness_spherical(pr.argmax_center);
    }
    Ok(report)
}

fn longest_great_circle_run(body: &SphericalBody) -> f64 {
    match body {
        SphericalBody::Cap(_) => 0.0,
        SphericalBody::Polygon(p) => {
            let v = p.vertices();
            let n = v.len();
            (0..n)
                .map(|i| v[i].distance(v[(i + 1) % n]))
                .fold(0.0, f64::max)
        }
        SphericalBody::Sampled(s) => {
            let v = s.boundary();
            let n = v.len();
            let mut longest: f64 = 0.0;
            let mut run_start = 0usize;
            let mut running = false;
            for i in 0..n + 1 {
                let j = i % n;
                let (cx, cy, cz) = v[j].cross(v[(j + 1) % n]);
                let pole = SphericalPoint::normalized(cx, cy, cz).unwrap();
                let next = v[(j + 2) % n];
                let flat = pole.dot(next).abs() <= 1e-10;
                if flat && !running {
                    running = true;
                    run_start = j;
                } else if !flat && running {
                    running = false;
                    longest = longest.max(v[run_start].distance(v[(j + 1) % n]));
                }
            }
            longest
        }
    }
}

/// Constant width below π/2 forces strict convexity: no boundary sub-arc of
/// meaningful length may lie on one great circle. Polygons therefore can
/// never measure constant width below π/2 (the contrapositive is asserted).
pub fn check_strict_convexity(body: &SphericalBody, tol: f64) -> Result<CheckReport> {
    let mut report = CheckReport::new("strict_convexity", 0, 1);
    let wr = is_constant_width(body, tol)?;
    report.residual("width_spread", wr.max_width - wr.min_width);
    if !wr.constant {
        if matches!(body, SphericalBody::Polygon(_)) {
            // contrapositive holds vacuously
            report.residual("delta", wr.delta);
        } else {
            report.not_applicable();
        }
        return Ok(report);
    }
    report.residual("delta", wr.delta);
    if wr.delta >= FRAC_PI_2 - tol {
        // great-circle arcs permitted at width π/2 (the octant has them)
        report.not_applicable();
        return Ok(report);
    }
    let run = longest_great_circle_run(body);
    report.check("longest_flat_run", run, tol.max(1e-6));
    if matches!(body, SphericalBody::Polygon(_)) {
        // a polygon that measured constant width below π/2 contradicts the
        // width bound outright
        report.fail();
    }
    if report.status == CheckStatus::Fail {
        report.witness_spherical(wr.argmin_center);
    }
    Ok(report)
}

/// For a smooth body, the arc from a boundary point to the center of its
/// supporting hemisphere must pass through the interior.
pub fn check_arc_interior(body: &SphericalBody, samples: usize, tol: f64) -> Result<CheckReport> {
    let mut report = CheckReport::new("arc_interior", 0, samples as u64);
    if !is_smooth(body, DEFAULT_SMOOTH_TOL) {
        report.not_applicable();
        return Ok(report);
    }
    let band = tol.max(1e-9);
    let boundary = body.boundary_samples(samples);
    let step = (boundary.len() / samples.max(1)).max(1);
    let mut checked = 0u64;
    for p in boundary.iter().step_by(step) {
        let fan = supporting_hemispheres_at(body, *p)?;
        let q = fan.principal().center;
        let arc = match GreatArc::new(*p, q) {
            Ok(a) => a,
            Err(_) => continue,
        };
        let mut hit = false;
        for i in 1..100 {
            let pt = arc.point_at(i as f64 / 100.0).unwrap();
            if classify(body, pt, band) == Location::Interior {
                hit = true;
                break;
            }
        }
        checked += 1;
        if !hit {
            report.fail();
            report.witness_spherical(*p);
            report.witness_spherical(q);
            break;
        }
    }
    report.residual("boundary_points_checked", checked as f64);
    report.trials = checked;
    Ok(report)
}

/// Outcome of the blow-up boundary property scan, before comparing against
/// the expectation for the body.
pub struct BlowupScan {
    pub holds: bool,
    pub max_boundary_residual: f64,
    pub diameter: f64,
    pub witness: Option<(SphericalPoint, SphericalPoint, SphericalPoint)>,
    pub interior_points_used: u64,
}

/// Scans seeded interior points M: every point of the boundary/support-graph
/// intersection must blow up (with respect to M) onto the boundary.
pub fn blowup_property_scan(
    body: &SphericalBody,
    interior_samples: usize,
    tol: f64,
    seed: u64,
) -> Result<BlowupScan> {
    let mut rng = rng_for(seed, "blowup_property");
    let c = body.interior_point();
    let radius = body
        .boundary_samples(512)
        .iter()
        .map(|p| p.distance(c))
        .fold(0.0, f64::max);
    let polar = supporting_centers(body)?;
    let polar_index = match &polar {
        SphericalBody::Polygon(p) if p.vertices().len() > 128 => {
            Some(crate::region::BoundaryIndex::new(p))
        }
        _ => None,
    };
    let detect_tol = crate::wulff::default_support_tol(body);
    let mut holds = true;
    let mut max_resid: f64 = 0.0;
    let mut witness = None;
    let mut used = 0u64;
    let mut attempts = 0usize;
    while used < interior_samples as u64 && attempts < interior_samples * 200 {
        attempts += 1;
        let m = random_in_cap(&mut rng, c, radius);
        // interior with a safety margin away from the boundary
        if classify(body, m, 0.05) != Location::Interior {
            continue;
        }
        used += 1;
        let s = crate::wulff::boundary_support_intersection_prepared(
            body,
            m,
            detect_tol,
            &polar,
            polar_index.as_ref(),
        )?;
        if s.is_empty() {
            holds = false;
            witness = witness.or(Some((m, m, m)));
            break;
        }
        let step = (s.len() / 256).max(1);
        for p in s.iter().step_by(step) {
            let psi = blow_up(m, *p)?;
            let resid = boundary_distance(body, psi);
            max_resid = max_resid.max(resid);
            if classify(body, psi, tol) != Location::Boundary {
                holds = false;
                if witness.is_none() {
                    witness = Some((m, *p, psi));
                }
            }
        }
        if !holds {
            break;
        }
    }
    let diam = diameter(body)?.diameter;
    Ok(BlowupScan {
        holds,
        max_boundary_residual: max_resid,
        diameter: diam,
        witness,
        interior_points_used: used,
    })
}

/// Blow-up boundary property with an expectation: bodies known self-dual
/// must satisfy it (and then have diameter π/2); bodies known not self-dual
/// must violate it with an explicit witness.
pub fn check_blowup_property(
    body: &SphericalBody,
    interior_samples: usize,
    tol: f64,
    seed: u64,
    expect_holds: bool,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("blowup_property", seed, interior_samples as u64);
    if !is_smooth(body, DEFAULT_SMOOTH_TOL) {
        report.not_applicable();
        return Ok(report);
    }
    let scan = blowup_property_scan(body, interior_samples, tol, seed)?;
    report.trials = scan.interior_points_used;
    report.residual("property_holds", scan.holds as u64 as f64);
    report.residual("expected_to_hold", expect_holds as u64 as f64);
    report.residual("max_boundary_residual", scan.max_boundary_residual);
    report.residual("diameter", scan.diameter);
    if scan.holds != expect_holds {
        report.fail();
    }
    if scan.holds {
        report.check(
            "diameter_half_pi_residual",
            (scan.diameter - FRAC_PI_2).abs(),
            tol,
        );
    }
    if let Some((m, p, psi)) = scan.witness {
        report.witness_spherical(m);
        report.witness_spherical(p);
        report.witness_spherical(psi);
    }
    if report.status == CheckStatus::Fail && report.witnesses.is_empty() {
        report.witness_spherical(body.interior_point());
    }
    Ok(report)
}

/// Internal consistency of the two width definitions:
/// thickness(C) + diameter(C°) = π.
pub fn check_thickness_diameter_duality(
    trials: u64,
    seed: u64,
    tol: f64,
    k: usize,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("thickness_diameter_duality", seed, trials);
    let mut rng = rng_for(seed, "thickness_diameter_duality");
    let mut worst: f64 = 0.0;
    let eval = |body: &SphericalBody, report: &mut CheckReport, worst: &mut f64| -> Result<()> {
        let t = thickness(body)?;
        let polar = supporting_centers(body)?;
        let d = diameter(&polar)?.diameter;
        let resid = (t + d - PI).abs();
        *worst = worst.max(resid);
        if resid > tol {
            report.fail();
            report.witness_spherical(body.interior_point());
        }
        Ok(())
    };
    for preset in [
        Preset::Disk,
        Preset::Ellipse21,
        Preset::Square,
        Preset::TriangleSqrt2,
        Preset::CapPi16,
        Preset::CapPi8,
        Preset::CapPi4,
        Preset::Cap3Pi8,
        Preset::Octant,
        Preset::Reuleaux,
        Preset::ReuleauxSmoothed,
    ] {
        let body = preset.spherical(k)?;
        eval(&body, &mut report, &mut worst)?;
    }
    for _ in 0..trials {
        let poly = random_spherical_polygon(&mut rng);
        eval(&SphericalBody::Polygon(poly), &mut report, &mut worst)?;
    }
    report.check("max_duality_residual", worst, tol);
    Ok(report)
}

/// Configuration for the full check suite.
#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub seed: u64,
    pub trials: u64,
    pub k: usize,
    /// Overrides every per-check tolerance when set.
    pub tol_override: Option<f64>,
    /// Per-check tolerance overrides by exact report name.
    pub tol_map: Vec<(String, f64)>,
    /// Substring filter on check names.
    pub only: Option<String>,
    pub threads: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 0,
            trials: 1000,
            k: 2048,
            tol_override: None,
            tol_map: Vec::new(),
            only: None,
            threads: 1,
        }
    }
}

impl CheckConfig {
    /// Tolerance for a named check: exact-name override, then the global
    /// override, then the built-in default.
    pub fn tol(&self, name: &str, default: f64) -> f64 {
        self.tol_map
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, t)| *t)
            .or(self.tol_override)
            .unwrap_or(default)
    }
}

fn preset_width_tol(p: Preset, k: usize) -> f64 {
    if p.is_sampled() {
        10.0 * (TAU / k as f64).powi(2)
    } else {
        1e-6
    }
}

/// Runs the complete suite over the preset shapes and seeded random
/// ensembles. Reports come back in a fixed order regardless of thread count.
pub fn run_all(config: &CheckConfig) -> Result<Vec<CheckReport>> {
    type Job = Box<dyn Fn(&CheckConfig) -> Result<CheckReport> + Send + Sync>;
    let mut jobs: Vec<(String, Job)> = Vec::new();

    jobs.push((
        "constant_width_polytope".into(),
        Box::new(|c: &CheckConfig| {
            check_constant_width_polytope(
                c.trials.max(1000),
                c.seed,
                c.tol("constant_width_polytope", 1e-6),
            )
        }),
    ));

    let planar_presets = [
        Preset::Disk,
        Preset::Ellipse21,
        Preset::Square,
        Preset::TriangleSqrt2,
        Preset::CapPi16,
        Preset::CapPi8,
        Preset::CapPi4,
        Preset::Cap3Pi8,
        Preset::Reuleaux,
        Preset::ReuleauxSmoothed,
    ];
    for p in planar_presets {
        let name = format!("selfdual_equivalences[{}]", p.name());
        let job_name = name.clone();
        jobs.push((
            name,
            Box::new(move |c: &CheckConfig| {
                let w = p.planar(c.k)?.expect("planar preset");
                let tol = c.tol(&job_name, preset_width_tol(p, c.k));
                Ok(check_selfdual_equivalences(&w, tol)?.with_name(job_name.clone()))
            }),
        ));
    }

    let spherical_presets = [
        Preset::CapPi16,
        Preset::CapPi8,
        Preset::CapPi4,
        Preset::Cap3Pi8,
        Preset::Octant,
        Preset::Reuleaux,
        Preset::ReuleauxSmoothed,
        Preset::Ellipse21,
        Preset::Square,
    ];
    for p in spherical_presets {
        let name = format!("width_duality[{}]", p.name());
        let job_name = name.clone();
        jobs.push((
            name,
            Box::new(move |c: &CheckConfig| {
                let body = p.spherical(c.k)?;
                let tol = c.tol(&job_name, preset_width_tol(p, c.k).max(1e-6));
                Ok(check_width_duality(&body, tol)?.with_name(job_name.clone()))
            }),
        ));
    }
    for p in spherical_presets {
        let name = format!("strict_convexity[{}]", p.name());
        let job_name = name.clone();
        jobs.push((
            name,
            Box::new(move |c: &CheckConfig| {
                let body = p.spherical(c.k)?;
                let tol = c.tol(&job_name, preset_width_tol(p, c.k).max(1e-6));
                Ok(check_strict_convexity(&body, tol)?.with_name(job_name.clone()))
            }),
        ));
    }

    for p in [
        Preset::CapPi4,
        Preset::Ellipse21,
        Preset::ReuleauxSmoothed,
        Preset::Octant,
    ] {
        let name = format!("arc_interior[{}]", p.name());
        let job_name = name.clone();
        jobs.push((
            name,
            Box::new(move |c: &CheckConfig| {
                let body = p.spherical(c.k)?;
                let tol = c.tol(&job_name, 1e-6);
                Ok(check_arc_interior(&body, 1000, tol)?.with_name(job_name.clone()))
            }),
        ));
    }

    // blow-up property: expectation = known self-duality of the preset
    let blowup_cases = [
        (Preset::CapPi4, true, 1e-6),
        (Preset::ReuleauxSmoothed, true, 1e-3),
        (Preset::Ellipse21, false, 1e-6),
        (Preset::CapPi8, false, 1e-6),
    ];
    for (p, expect, tol) in blowup_cases {
        let name = format!("blowup_property[{}]", p.name());
        let job_name = name.clone();
        jobs.push((
            name,
            Box::new(move |c: &CheckConfig| {
                let body = p.spherical(c.k)?;
                let tol = c.tol(&job_name, tol);
                Ok(check_blowup_property(&body, 100, tol, c.seed, expect)?
                    .with_name(job_name.clone()))
            }),
        ));
    }

    jobs.push((
        "thickness_diameter_duality".into(),
        Box::new(|c: &CheckConfig| {
            check_thickness_diameter_duality(
                50.min(c.trials),
                c.seed,
                c.tol("thickness_diameter_duality", 1e-8),
                c.k,
            )
        }),
    ));

    for p in [
        Preset::Octant,
        Preset::CapPi16,
        Preset::CapPi8,
        Preset::CapPi4,
        Preset::Cap3Pi8,
        Preset::Reuleaux,
    ] {
        let name = format!("diameter_support[{}]", p.name());
        let job_name = name.clone();
        jobs.push((
            name,
            Box::new(move |c: &CheckConfig| {
                let body = p.spherical(c.k)?;
                Ok(diameter_support_check(&body)?.with_name(job_name.clone()))
            }),
        ));
    }

    let selected: Vec<&(String, Job)> = jobs
        .iter()
        .filter(|(name, _)| {
            config
                .only
                .as_ref()
                .is_none_or(|f| name.contains(f.as_str()))
        })
        .collect();

    let threads = config.threads.max(1).min(selected.len().max(1));
    let mut results: Vec<Option<Result<CheckReport>>> = Vec::new();
    results.resize_with(selected.len(), || None);
    if threads <= 1 {
        for (slot, (_, job)) in selected.iter().enumerate() {
            results[slot] = Some(job(config));
        }
    } else {
        let next = std::sync::atomic::AtomicUsize::new(0);
        let results_mx = std::sync::Mutex::new(&mut results);
        std::thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                    if i >= selected.len() {
                        break;
                    }
                    let out = (selected[i].1)(config);
                    results_mx.lock().unwrap()[i] = Some(out);
                });
            }
        });
    }
    let mut reports = Vec::with_capacity(results.len());
    for r in results {
        let mut report = r.expect("job executed")?;
        report.seed = config.seed;
        reports.push(report);
    }
    Ok(reports)
}
