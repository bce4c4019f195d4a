//! Wulff shapes in the plane and their spherical geometry: construction from
//! support functions, lifting to S² by the inverse central projection, polar
//! duality, width/thickness/diameter metrics, and executable checks of the
//! self-duality characterizations (constant width π/2, constant diameter
//! π/2, and the blow-up boundary property).

// `!(x > 0.0)`-style guards double as NaN rejection; keep them literal.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod metrics;
pub mod planar;
pub mod presets;
pub mod region;
pub mod sphere;
pub mod wulff;

pub mod checks;
pub mod render;
pub mod report;
pub mod shape_spec;

pub use error::{GeomError, Result};
pub use planar::PlanarConvexBody;
pub use region::{Cap, Location, SampledSphericalBody, SphericalBody, SphericalPolygon};
pub use sphere::{GreatArc, Hemisphere, Lune, PlanarPoint, SphericalPoint, NORTH};
