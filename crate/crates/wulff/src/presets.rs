//! Compiled-in preset shapes used by the check suite and the CLI: disk,
//! ellipse, square, the self-dual equilateral triangle of circumradius √2,
//! spherical caps, the octant, and the width-π/2 spherical Reuleaux triangle
//! (exact, and with corners rounded by small circular arcs).

use crate::error::{GeomError, Result};
use crate::planar::PlanarConvexBody;
use crate::region::{Cap, SampledSphericalBody, SphericalBody, SphericalPolygon};
use crate::sphere::{central_project, PlanarPoint, SphericalPoint, NORTH};
use crate::wulff::{sample_gamma, spherical_wulff, wulff_construct, SupportFunction};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8, PI, TAU};

/// Corner radius of the smoothed Reuleaux preset.
pub const SMOOTHED_CORNER_RADIUS: f64 = 0.01;

pub fn planar_square() -> PlanarConvexBody {
    PlanarConvexBody::new(vec![
        PlanarPoint { u: 1.0, v: 1.0 },
        PlanarPoint { u: -1.0, v: 1.0 },
        PlanarPoint { u: -1.0, v: -1.0 },
        PlanarPoint { u: 1.0, v: -1.0 },
    ])
    .expect("square preset")
}

/// Equilateral triangle of circumradius √2 centered at the origin; its lift
/// is a rotated octant, so it is exactly self-dual.
pub fn planar_triangle_sqrt2() -> PlanarConvexBody {
    let r = 2.0_f64.sqrt();
    let verts = [
        FRAC_PI_2,
        FRAC_PI_2 + TAU / 3.0,
        FRAC_PI_2 + 2.0 * TAU / 3.0,
    ]
    .iter()
    .map(|a| PlanarPoint {
        u: r * a.cos(),
        v: r * a.sin(),
    })
    .collect();
    PlanarConvexBody::new(verts).expect("triangle preset")
}

pub fn octant_polygon() -> SphericalPolygon {
    SphericalPolygon::new(vec![
        SphericalPoint {
            x: 1.0,
            y: 0.0,
            z: 0.0,
        },
        SphericalPoint {
            x: 0.0,
            y: 1.0,
            z: 0.0,
        },
        NORTH,
    ])
    .expect("octant preset")
}

fn tangent_basis(c: SphericalPoint) -> (SphericalPoint, SphericalPoint) {
    let helper = if c.z.abs() < 0.9 {
        NORTH
    } else {
        SphericalPoint {
            x: 1.0,
            y: 0.0,
            z: 0.0,
        }
    };
    let (hx, hy, hz) = c.cross(helper);
    let e1 = SphericalPoint::normalized(hx, hy, hz).expect("tangent basis");
    let (ex, ey, ez) = c.cross(e1);
    let e2 = SphericalPoint::normalized(ex, ey, ez).expect("tangent basis");
    (e1, e2)
}

fn circle_point(
    c: SphericalPoint,
    r: f64,
    e1: SphericalPoint,
    e2: SphericalPoint,
    u: f64,
) -> SphericalPoint {
    let (cr, sr) = (r.cos(), r.sin());
    let (cu, su) = (u.cos(), u.sin());
    SphericalPoint::normalized(
        cr * c.x + sr * (cu * e1.x + su * e2.x),
        cr * c.y + sr * (cu * e1.y + su * e2.y),
        cr * c.z + sr * (cu * e1.z + su * e2.z),
    )
    .expect("circle point")
}

/// Direction angle, in the tangent frame at `c`, of the great circle from
/// `c` toward `q`.
fn direction_angle(
    c: SphericalPoint,
    e1: SphericalPoint,
    e2: SphericalPoint,
    q: SphericalPoint,
) -> f64 {
    let d = c.dot(q);
    let tx = q.x - d * c.x;
    let ty = q.y - d * c.y;
    let tz = q.z - d * c.z;
    let a = tx * e1.x + ty * e1.y + tz * e1.z;
    let b = tx * e2.x + ty * e2.y + tz * e2.z;
    b.atan2(a)
}

/// Spherical Reuleaux triangle of width π/2 centered at the north pole,
/// with corners rounded by circular arcs of the given spherical radius.
///
/// Built as the outer parallel body at distance ρ of the Reuleaux triangle
/// of width π/2 − 2ρ, which keeps the width exactly π/2: the boundary is
/// three arcs of circles of radius π/2 − ρ about the shrunk vertices plus
/// three corner arcs of radius ρ about those same vertices. With ρ = 0 this
/// is the exact Reuleaux triangle, which coincides with a rotated octant.
pub fn reuleaux_spherical(corner_radius: f64, k: usize) -> Result<SampledSphericalBody> {
    let rho = corner_radius;
    if !(0.0..0.2).contains(&rho) {
        return Err(GeomError::invalid("corner_radius", "must lie in [0, 0.2)"));
    }
    let w = FRAC_PI_2 - 2.0 * rho;
    // vertex colatitude: pairwise distance w at azimuth spacing 2π/3
    let cos_colat = ((2.0 * w.cos() + 1.0) / 3.0).sqrt();
    let sin_colat = (1.0 - cos_colat * cos_colat).sqrt();
    let verts: Vec<SphericalPoint> = (0..3)
        .map(|i| {
            let az = FRAC_PI_2 + TAU * i as f64 / 3.0;
            SphericalPoint::normalized(sin_colat * az.cos(), sin_colat * az.sin(), cos_colat)
                .expect("reuleaux vertex")
        })
        .collect();

    let n_main = (k / 3).max(64);
    let n_corner = if rho > 0.0 { (k / 12).max(64) } else { 0 };
    let mut pts: Vec<SphericalPoint> = Vec::with_capacity(3 * (n_main + n_corner) + 3);

    for i in 0..3 {
        let vi = verts[i];
        let (e1, e2) = tangent_basis(vi);
        // main arc opposite the other two vertices, radius w + ρ
        let r_main = w + rho;
        let ua = direction_angle(vi, e1, e2, verts[(i + 1) % 3]);
        let ub = direction_angle(vi, e1, e2, verts[(i + 2) % 3]);
        let mut du = ub - ua;
        while du > PI {
            du -= TAU;
        }
        while du < -PI {
            du += TAU;
        }
        for s in 0..=n_main {
            let u = ua + du * s as f64 / n_main as f64;
            pts.push(circle_point(vi, r_main, e1, e2, u));
        }
        if rho > 0.0 {
            // corner arc at this vertex, radius ρ, between the directions
            // away from the two neighbors
            let ua = direction_angle(vi, e1, e2, verts[(i + 1) % 3]) + PI;
            let ub = direction_angle(vi, e1, e2, verts[(i + 2) % 3]) + PI;
            let mut du = ub - ua;
            while du > PI {
                du -= TAU;
            }
            while du < -PI {
                du += TAU;
            }
            for s in 0..=n_corner {
                let u = ua + du * s as f64 / n_corner as f64;
                pts.push(circle_point(vi, rho, e1, e2, u));
            }
        } else {
            pts.push(vi);
        }
    }

    pts.sort_by(|a, b| a.azimuth().partial_cmp(&b.azimuth()).unwrap());
    // junction points are built twice (once per incident arc) and agree only
    // to ~1e-8; genuine sample spacing stays above 9e-5
    pts.dedup_by(|a, b| a.distance(*b) < 1e-7);
    if pts.len() >= 2 && pts[0].distance(*pts.last().unwrap()) < 1e-7 {
        pts.pop();
    }
    SampledSphericalBody::with_measured_mesh(pts, NORTH)
}

/// Central projection of the Reuleaux boundary onto the plane.
pub fn reuleaux_planar_boundary(corner_radius: f64) -> Result<Vec<PlanarPoint>> {
    let body = reuleaux_spherical(corner_radius, 2048)?;
    body.boundary()
        .iter()
        .map(|p| central_project(*p))
        .collect()
}

/// Named preset shapes available to the CLI and the check suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Disk,
    Ellipse21,
    Square,
    TriangleSqrt2,
    CapPi16,
    CapPi8,
    CapPi4,
    Cap3Pi8,
    Octant,
    Reuleaux,
    ReuleauxSmoothed,
}

impl Preset {
    pub fn all() -> [Preset; 11] {
        [
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
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Preset::Disk => "disk",
            Preset::Ellipse21 => "ellipse21",
            Preset::Square => "square",
            Preset::TriangleSqrt2 => "triangle_sqrt2",
            Preset::CapPi16 => "cap_pi16",
            Preset::CapPi8 => "cap_pi8",
            Preset::CapPi4 => "cap_pi4",
            Preset::Cap3Pi8 => "cap_3pi8",
            Preset::Octant => "octant",
            Preset::Reuleaux => "reuleaux",
            Preset::ReuleauxSmoothed => "reuleaux_smoothed",
        }
    }

    pub fn from_name(name: &str) -> Option<Preset> {
        Preset::all().into_iter().find(|p| p.name() == name)
    }

    pub fn cap_radius(&self) -> Option<f64> {
        match self {
            Preset::CapPi16 => Some(PI / 16.0),
            Preset::CapPi8 => Some(FRAC_PI_8),
            Preset::CapPi4 => Some(FRAC_PI_4),
            Preset::Cap3Pi8 => Some(3.0 * FRAC_PI_8),
            _ => None,
        }
    }

    /// Support function of the planar Wulff shape; None for the octant,
    /// whose projection from the pole is unbounded (use `triangle_sqrt2`
    /// for its rotated planar copy).
    pub fn support_function(&self) -> Result<Option<SupportFunction>> {
        Ok(Some(match self {
            Preset::Disk => SupportFunction::constant(1.0)?,
            Preset::Ellipse21 => SupportFunction::ellipse(2.0, 1.0)?,
            Preset::Square => SupportFunction::polygon_gamma(planar_square()),
            Preset::TriangleSqrt2 => SupportFunction::polygon_gamma(planar_triangle_sqrt2()),
            Preset::CapPi16 | Preset::CapPi8 | Preset::CapPi4 | Preset::Cap3Pi8 => {
                SupportFunction::constant(self.cap_radius().unwrap().tan())?
            }
            Preset::Octant => return Ok(None),
            Preset::Reuleaux => SupportFunction::reuleaux_lift(0.0)?,
            Preset::ReuleauxSmoothed => SupportFunction::reuleaux_lift(SMOOTHED_CORNER_RADIUS)?,
        }))
    }

    /// Planar Wulff shape. Polygon presets are exact; curved presets are
    /// the K-direction halfplane intersections.
    pub fn planar(&self, k: usize) -> Result<Option<PlanarConvexBody>> {
        Ok(Some(match self {
            Preset::Square => planar_square(),
            Preset::TriangleSqrt2 | Preset::Reuleaux => planar_triangle_sqrt2(),
            Preset::Octant => return Ok(None),
            Preset::ReuleauxSmoothed => {
                PlanarConvexBody::new(reuleaux_planar_boundary(SMOOTHED_CORNER_RADIUS)?)?
            }
            _ => {
                let sf = self.support_function()?.unwrap();
                wulff_construct(&sample_gamma(&sf, k)?)?
            }
        }))
    }

    /// Spherical body: caps are exact, the octant is a polygon, the
    /// Reuleaux presets are sampled directly on the sphere, everything else
    /// is the lift of the planar shape.
    pub fn spherical(&self, k: usize) -> Result<SphericalBody> {
        Ok(match self {
            Preset::CapPi16 | Preset::CapPi8 | Preset::CapPi4 | Preset::Cap3Pi8 => {
                SphericalBody::Cap(Cap::new(NORTH, self.cap_radius().unwrap())?)
            }
            Preset::Octant => SphericalBody::Polygon(octant_polygon()),
            Preset::Reuleaux => SphericalBody::Sampled(reuleaux_spherical(0.0, k)?),
            Preset::ReuleauxSmoothed => {
                SphericalBody::Sampled(reuleaux_spherical(SMOOTHED_CORNER_RADIUS, k)?)
            }
            _ => spherical_wulff(&self.planar(k)?.unwrap()),
        })
    }

    /// Whether curved boundaries make the default verdict tolerance mesh-bound.
    pub fn is_sampled(&self) -> bool {
        !matches!(
            self,
            Preset::Square | Preset::TriangleSqrt2 | Preset::Reuleaux
        )
    }
}
