//! JSON shape specifications for the CLI: validated on load, unknown keys
//! rejected, errors name the offending field. The emitter round-trips specs
//! with the same deterministic float formatting as the report writer.

use crate::error::{GeomError, Result};
use crate::planar::PlanarConvexBody;
use crate::presets::Preset;
use crate::report::fmt_f64;
use crate::sphere::PlanarPoint;
use crate::wulff::SupportFunction;
use serde_json::Value;

pub const DEFAULT_K: usize = 2048;

/// Parsed and validated shape description.
#[derive(Debug, Clone)]
pub struct ShapeSpec {
    pub kind: ShapeKind,
    pub k: usize,
}

#[derive(Debug, Clone)]
pub enum ShapeKind {
    Constant { c: f64 },
    Ellipse { a: f64, b: f64 },
    PolygonGamma { vertices: Vec<PlanarPoint> },
    Sampled { samples: Vec<(f64, f64)> },
    Preset { preset: Preset },
}

fn err(path: &str, reason: impl Into<String>) -> GeomError {
    GeomError::invalid(path, reason)
}

fn expect_object<'v>(
    v: &'v Value,
    allowed: &[&str],
    path: &str,
) -> Result<&'v serde_json::Map<String, Value>> {
    let obj = v
        .as_object()
        .ok_or_else(|| err(path, "expected a JSON object"))?;
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(err(&format!("{path}.{key}"), "unknown key"));
        }
    }
    Ok(obj)
}

fn get_number(obj: &serde_json::Map<String, Value>, key: &str, path: &str) -> Result<f64> {
    obj.get(key)
        .ok_or_else(|| err(&format!("{path}.{key}"), "missing required field"))?
        .as_f64()
        .ok_or_else(|| err(&format!("{path}.{key}"), "expected a number"))
}

/// Parses a shape spec from JSON text. All angles are radians.
pub fn parse_shape_spec(text: &str) -> Result<ShapeSpec> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| err("$", format!("malformed JSON: {e}")))?;
    let obj = expect_object(
        &value,
        &["kind", "c", "a", "b", "vertices", "samples", "name", "k"],
        "$",
    )?;
    let kind_str = obj
        .get("kind")
        .ok_or_else(|| err("$.kind", "missing required field"))?
        .as_str()
        .ok_or_else(|| err("$.kind", "expected a string"))?;
    let k = match obj.get("k") {
        None => DEFAULT_K,
        Some(v) => {
            let k = v
                .as_u64()
                .ok_or_else(|| err("$.k", "expected a positive integer"))?
                as usize;
            if k < 8 {
                return Err(err("$.k", "need at least 8 directions"));
            }
            k
        }
    };
    let kind = match kind_str {
        "constant" => {
            expect_object(&value, &["kind", "c", "k"], "$")?;
            let c = get_number(obj, "c", "$")?;
            if !(c > 0.0) {
                return Err(GeomError::NotPositive { field: "c".into() });
            }
            ShapeKind::Constant { c }
        }
        "ellipse" => {
            expect_object(&value, &["kind", "a", "b", "k"], "$")?;
            let a = get_number(obj, "a", "$")?;
            let b = get_number(obj, "b", "$")?;
            if !(a > 0.0) {
                return Err(GeomError::NotPositive { field: "a".into() });
            }
            if !(b > 0.0) {
                return Err(GeomError::NotPositive { field: "b".into() });
            }
            ShapeKind::Ellipse { a, b }
        }
        "polygon_gamma" => {
            expect_object(&value, &["kind", "vertices", "k"], "$")?;
            let arr = obj
                .get("vertices")
                .ok_or_else(|| err("$.vertices", "missing required field"))?
                .as_array()
                .ok_or_else(|| err("$.vertices", "expected an array"))?;
            let mut vertices = Vec::with_capacity(arr.len());
            for (i, item) in arr.iter().enumerate() {
                let pair = item
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| err(&format!("$.vertices[{i}]"), "expected [u, v]"))?;
                let u = pair[0]
                    .as_f64()
                    .ok_or_else(|| err(&format!("$.vertices[{i}][0]"), "expected a number"))?;
                let v = pair[1]
                    .as_f64()
                    .ok_or_else(|| err(&format!("$.vertices[{i}][1]"), "expected a number"))?;
                vertices.push(PlanarPoint::new(u, v)?);
            }
            // validate now so load-time errors carry the field path
            PlanarConvexBody::new(vertices.clone())
                .map_err(|e| err("$.vertices", e.to_string()))?;
            ShapeKind::PolygonGamma { vertices }
        }
        "sampled" => {
            expect_object(&value, &["kind", "samples", "k"], "$")?;
            let arr = obj
                .get("samples")
                .ok_or_else(|| err("$.samples", "missing required field"))?
                .as_array()
                .ok_or_else(|| err("$.samples", "expected an array"))?;
            let mut samples = Vec::with_capacity(arr.len());
            for (i, item) in arr.iter().enumerate() {
                let pair = item
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| err(&format!("$.samples[{i}]"), "expected [theta, gamma]"))?;
                let t = pair[0]
                    .as_f64()
                    .ok_or_else(|| err(&format!("$.samples[{i}][0]"), "expected a number"))?;
                let g = pair[1]
                    .as_f64()
                    .ok_or_else(|| err(&format!("$.samples[{i}][1]"), "expected a number"))?;
                samples.push((t, g));
            }
            SupportFunction::sampled(samples.clone())
                .map_err(|e| err("$.samples", e.to_string()))?;
            ShapeKind::Sampled { samples }
        }
        "preset" => {
            expect_object(&value, &["kind", "name", "k"], "$")?;
            let name = obj
                .get("name")
                .ok_or_else(|| err("$.name", "missing required field"))?
                .as_str()
                .ok_or_else(|| err("$.name", "expected a string"))?;
            let preset = Preset::from_name(name).ok_or_else(|| {
                err(
                    "$.name",
                    format!(
                        "unknown preset {name:?}; known presets: {}",
                        Preset::all().map(|p| p.name()).join(", ")
                    ),
                )
            })?;
            ShapeKind::Preset { preset }
        }
        other => return Err(err("$.kind", format!("unknown kind {other:?}"))),
    };
    Ok(ShapeSpec { kind, k })
}

/// Deterministic re-emission of a spec (stable keys, 17-digit floats).
pub fn emit_shape_spec(spec: &ShapeSpec) -> String {
    let body = match &spec.kind {
        ShapeKind::Constant { c } => format!("\"kind\":\"constant\",\"c\":{}", fmt_f64(*c)),
        ShapeKind::Ellipse { a, b } => {
            format!(
                "\"kind\":\"ellipse\",\"a\":{},\"b\":{}",
                fmt_f64(*a),
                fmt_f64(*b)
            )
        }
        ShapeKind::PolygonGamma { vertices } => {
            let vs: Vec<String> = vertices
                .iter()
                .map(|p| format!("[{},{}]", fmt_f64(p.u), fmt_f64(p.v)))
                .collect();
            format!("\"kind\":\"polygon_gamma\",\"vertices\":[{}]", vs.join(","))
        }
        ShapeKind::Sampled { samples } => {
            let ss: Vec<String> = samples
                .iter()
                .map(|(t, g)| format!("[{},{}]", fmt_f64(*t), fmt_f64(*g)))
                .collect();
            format!("\"kind\":\"sampled\",\"samples\":[{}]", ss.join(","))
        }
        ShapeKind::Preset { preset } => {
            format!("\"kind\":\"preset\",\"name\":\"{}\"", preset.name())
        }
    };
    format!("{{{body},\"k\":{}}}\n", spec.k)
}

impl ShapeSpec {
    /// The support function, when the shape has a planar form.
    pub fn support_function(&self) -> Result<Option<SupportFunction>> {
        Ok(match &self.kind {
            ShapeKind::Constant { c } => Some(SupportFunction::constant(*c)?),
            ShapeKind::Ellipse { a, b } => Some(SupportFunction::ellipse(*a, *b)?),
            ShapeKind::PolygonGamma { vertices } => Some(SupportFunction::polygon_gamma(
                PlanarConvexBody::new(vertices.clone())?,
            )),
            ShapeKind::Sampled { samples } => Some(SupportFunction::sampled(samples.clone())?),
            ShapeKind::Preset { preset } => preset.support_function()?,
        })
    }

    /// The planar Wulff shape (None for the octant preset).
    pub fn planar_body(&self) -> Result<Option<PlanarConvexBody>> {
        match &self.kind {
            ShapeKind::Preset { preset } => preset.planar(self.k),
            ShapeKind::PolygonGamma { vertices } => {
                // a polygon support function reconstructs the polygon itself
                Ok(Some(PlanarConvexBody::new(vertices.clone())?))
            }
            _ => {
                let sf = self
                    .support_function()?
                    .expect("non-preset has a support function");
                Ok(Some(crate::wulff::wulff_construct(
                    &crate::wulff::sample_gamma(&sf, self.k)?,
                )?))
            }
        }
    }

    /// The spherical body (exact caps for cap presets, lift otherwise).
    pub fn spherical_body(&self) -> Result<crate::region::SphericalBody> {
        match &self.kind {
            ShapeKind::Preset { preset } => preset.spherical(self.k),
            _ => Ok(crate::wulff::spherical_wulff(
                &self.planar_body()?.expect("non-preset has a planar body"),
            )),
        }
    }

    pub fn is_sampled(&self) -> bool {
        match &self.kind {
            ShapeKind::Preset { preset } => preset.is_sampled(),
            ShapeKind::PolygonGamma { .. } => false,
            _ => true,
        }
    }
}
