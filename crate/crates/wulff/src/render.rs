//! SVG and CSV emission for a primal/dual body pair: the primal boundary is
//! drawn solid with id "primal", the dual dashed with id "dual", and the
//! origin is marked. The CSV lists boundary samples as curve,u,v rows.

use crate::planar::PlanarConvexBody;
use crate::report::fmt_f64;
use crate::sphere::PlanarPoint;

const VIEW: f64 = 640.0;

fn path_data(body: &PlanarConvexBody, to_px: &dyn Fn(PlanarPoint) -> (f64, f64)) -> String {
    let mut d = String::new();
    for (i, v) in body.vertices().iter().enumerate() {
        let (x, y) = to_px(*v);
        if i == 0 {
            d.push_str(&format!("M {x:.3} {y:.3}"));
        } else {
            d.push_str(&format!(" L {x:.3} {y:.3}"));
        }
    }
    d.push_str(" Z");
    d
}

/// SVG 1.1 document overlaying the primal (solid) and dual (dashed)
/// boundaries with the origin marked.
pub fn render_svg(primal: &PlanarConvexBody, dual: &PlanarConvexBody) -> String {
    let mut extent: f64 = 1e-9;
    for v in primal.vertices().iter().chain(dual.vertices()) {
        extent = extent.max(v.u.abs()).max(v.v.abs());
    }
    extent *= 1.1;
    let scale = VIEW / (2.0 * extent);
    let to_px = move |p: PlanarPoint| -> (f64, f64) {
        (VIEW / 2.0 + p.u * scale, VIEW / 2.0 - p.v * scale)
    };
    let primal_d = path_data(primal, &to_px);
    let dual_d = path_data(dual, &to_px);
    let (ox, oy) = to_px(PlanarPoint { u: 0.0, v: 0.0 });
    format!(
        concat!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" ",
            "width=\"{v}\" height=\"{v}\" viewBox=\"0 0 {v} {v}\">\n",
            "  <rect width=\"{v}\" height=\"{v}\" fill=\"white\"/>\n",
            "  <path id=\"primal\" d=\"{p}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
            "  <path id=\"dual\" d=\"{d}\" fill=\"none\" stroke=\"#c02020\" ",
            "stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n",
            "  <g id=\"origin\" stroke=\"#404040\" stroke-width=\"1\">\n",
            "    <line x1=\"{x0:.3}\" y1=\"{oy:.3}\" x2=\"{x1:.3}\" y2=\"{oy:.3}\"/>\n",
            "    <line x1=\"{ox:.3}\" y1=\"{y0:.3}\" x2=\"{ox:.3}\" y2=\"{y1:.3}\"/>\n",
            "    <circle cx=\"{ox:.3}\" cy=\"{oy:.3}\" r=\"3\" fill=\"none\"/>\n",
            "  </g>\n",
            "</svg>\n"
        ),
        v = VIEW,
        p = primal_d,
        d = dual_d,
        ox = ox,
        oy = oy,
        x0 = ox - 8.0,
        x1 = ox + 8.0,
        y0 = oy - 8.0,
        y1 = oy + 8.0,
    )
}

/// CSV of boundary samples: header `curve,u,v`, one row per vertex.
pub fn render_csv(primal: &PlanarConvexBody, dual: &PlanarConvexBody) -> String {
    let mut out = String::from("curve,u,v\n");
    for v in primal.vertices() {
        out.push_str(&format!("primal,{},{}\n", fmt_f64(v.u), fmt_f64(v.v)));
    }
    for v in dual.vertices() {
        out.push_str(&format!("dual,{},{}\n", fmt_f64(v.u), fmt_f64(v.v)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn svg_structure() {
        let sq = presets::planar_square();
        let dual = crate::wulff::dual_wulff(&sq).unwrap();
        let svg = render_svg(&sq, &dual);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.contains("version=\"1.1\""));
        assert!(svg.contains("id=\"primal\""));
        assert!(svg.contains("id=\"dual\""));
        assert!(svg.contains("id=\"origin\""));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn csv_structure() {
        let sq = presets::planar_square();
        let dual = crate::wulff::dual_wulff(&sq).unwrap();
        let csv = render_csv(&sq, &dual);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("curve,u,v"));
        assert_eq!(csv.lines().count(), 1 + sq.len() + dual.len());
        assert!(csv.lines().nth(1).unwrap().starts_with("primal,"));
    }
}
