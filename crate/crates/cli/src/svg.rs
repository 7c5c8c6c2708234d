//! Standalone SVG rendering of the tangent-circle figure from oracle
//! scene coordinates: both circles, the tangent line out to the homothety
//! center, the chords and cevians, labeled points, and a legend of the
//! integer lengths.

use tangent_triangles::generator::FullConfig;
use tangent_triangles::oracle::{Point, Scene};
use tangent_triangles::Int;

const WIDTH: f64 = 1000.0;
const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 40.0;
/// Right-hand panel reserved for the legend.
const LEGEND_WIDTH: f64 = 230.0;

/// Length annotations for a fully integral configuration.
pub fn annotations(config: &FullConfig<Int>) -> Vec<(String, String)> {
    let mut out = vec![
        (
            "(m, n, t)".to_string(),
            format!("({}, {}, {})", config.params.m(), config.params.n(), config.t),
        ),
        ("delta".to_string(), config.delta.to_string()),
        ("R1".to_string(), config.radius1.to_string()),
        ("R2".to_string(), config.radius2.to_string()),
    ];
    for (name, value) in config.lengths.named() {
        out.push((name.to_string(), value.to_string()));
    }
    let surds = config.length_set();
    out.push(("d1".to_string(), surds.d1.to_string()));
    out.push(("d2".to_string(), surds.d2.to_string()));
    out
}

struct Mapper {
    scale: f64,
    x_min: f64,
    y_min: f64,
    x_offset: f64,
    y_offset: f64,
}

impl Mapper {
    fn new(scene: &Scene) -> Self {
        let r1 = scene.c1.dist(&scene.i);
        let x_min = scene.c1.x - r1;
        let x_max = scene.k.x;
        let y_min = -r1;
        let y_max = r1;
        let usable_w = WIDTH - LEGEND_WIDTH - 2.0 * MARGIN;
        let usable_h = HEIGHT - 2.0 * MARGIN;
        let scale = (usable_w / (x_max - x_min)).min(usable_h / (y_max - y_min));
        // center the drawing in the usable area
        let x_offset = MARGIN + (usable_w - (x_max - x_min) * scale) / 2.0;
        let y_offset = MARGIN + (usable_h - (y_max - y_min) * scale) / 2.0;
        Self {
            scale,
            x_min,
            y_min,
            x_offset,
            y_offset,
        }
    }

    fn x(&self, x: f64) -> f64 {
        self.x_offset + (x - self.x_min) * self.scale
    }

    /// SVG y grows downward.
    fn y(&self, y: f64) -> f64 {
        HEIGHT - self.y_offset - (y - self.y_min) * self.scale
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.2}")
}

pub fn figure(scene: &Scene, annotations: &[(String, String)]) -> String {
    let map = Mapper::new(scene);
    let r1 = scene.c1.dist(&scene.i);
    let r2 = scene.c2.dist(&scene.i);

    let mut body = String::new();

    let mut circle = |center: &Point, radius: f64| {
        body.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#333\" stroke-width=\"1.5\"/>\n",
            fmt(map.x(center.x)),
            fmt(map.y(center.y)),
            fmt(radius * map.scale),
        ));
    };
    circle(&scene.c1, r1);
    circle(&scene.c2, r2);

    let segments: [(&Point, &Point, &str, bool); 9] = [
        (&scene.c1, &scene.k, "#555", false),  // line of centers out to K
        (&scene.t1, &scene.k, "#1a6", false),  // tangent through T2 to K
        (&scene.i, &scene.m, "#1a6", false),   // third common tangent
        (&scene.t1, &scene.i, "#448", false),  // chord a1
        (&scene.i, &scene.t2, "#448", false),  // chord a2
        (&scene.c1, &scene.m, "#a33", false),  // cevian x1
        (&scene.c2, &scene.m, "#a33", false),  // cevian x2
        (&scene.c1, &scene.t1, "#555", false), // radius R1
        (&scene.c2, &scene.f, "#999", true),   // perpendicular foot construction
    ];
    for (a, b, color, dashed) in segments {
        let dash = if dashed { " stroke-dasharray=\"6 4\"" } else { "" };
        body.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"1.2\"{dash}/>\n",
            fmt(map.x(a.x)),
            fmt(map.y(a.y)),
            fmt(map.x(b.x)),
            fmt(map.y(b.y)),
        ));
    }

    let labeled: [(&Point, &str, f64, f64); 10] = [
        (&scene.i, "I", 4.0, 16.0),
        (&scene.c1, "C1", -8.0, 16.0),
        (&scene.c2, "C2", 4.0, 16.0),
        (&scene.t1, "T1", -16.0, -6.0),
        (&scene.t2, "T2", 6.0, -6.0),
        (&scene.m, "M", 2.0, -8.0),
        (&scene.m1, "M1", -24.0, 0.0),
        (&scene.m2, "M2", 8.0, 8.0),
        (&scene.f, "F", -14.0, 0.0),
        (&scene.k, "K", 6.0, -6.0),
    ];
    for (p, label, dx, dy) in labeled {
        body.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"#000\"/>\n",
            fmt(map.x(p.x)),
            fmt(map.y(p.y)),
        ));
        body.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\">{label}</text>\n",
            fmt(map.x(p.x) + dx),
            fmt(map.y(p.y) + dy),
        ));
    }

    // legend panel
    let legend_x = WIDTH - LEGEND_WIDTH + 10.0;
    let mut legend_y = MARGIN;
    for (name, value) in annotations {
        body.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\">{} = {}</text>\n",
            fmt(legend_x),
            fmt(legend_y),
            escape(name),
            escape(value),
        ));
        legend_y += 15.0;
    }

    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" width=\"{WIDTH}\" height=\"{HEIGHT}\">\n\
         <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"#fff\"/>\n{body}</svg>\n"
    )
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
