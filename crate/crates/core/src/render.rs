//! SVG, TikZ and ASCII pictures of tableaux, arc diagrams and paths.
//!
//! Renderers only read their input.  Output is deterministic: coordinates
//! are printed with at most two decimals and elements appear in a fixed
//! order, so the same object always yields the same bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::assemblee::SignedPerm;
use crate::laguerre::{Mlh, MlhStar, StarStep, StepKind};
use crate::shapes::{Point, TileKind};
use crate::tableaux::{ArrowKind, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("unknown format {0:?}; expected ascii, svg or tikz")]
    UnknownFormat(String),
    #[error("{object} cannot be drawn as {format}; ascii is available for paths only")]
    Unsupported {
        object: &'static str,
        format: &'static str,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
    Tikz,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Ascii => "ascii",
            Format::Svg => "svg",
            Format::Tikz => "tikz",
        }
    }
}

impl FromStr for Format {
    type Err = RenderError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ascii" => Ok(Format::Ascii),
            "svg" => Ok(Format::Svg),
            "tikz" => Ok(Format::Tikz),
            _ => Err(RenderError::UnknownFormat(s.to_string())),
        }
    }
}

/// Prints a coordinate with at most two decimals and no trailing zeros.
fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

const SVG_HEAD: &str = "<svg xmlns=\"http://www.w3.org/2000/svg\"";

fn svg_open(out: &mut String, width: f64, height: f64, style: &str) {
    let _ = writeln!(
        out,
        "{SVG_HEAD} width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = num(width),
        h = num(height)
    );
    let _ = writeln!(out, "<style>{style}</style>");
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace("--", "- -")
}

// ---------------------------------------------------------------------------
// Tableaux

/// Pixels per doubled lattice unit.
const TILE_SCALE: f64 = 12.0;
const MARGIN: f64 = 24.0;

fn kind_class(kind: TileKind) -> &'static str {
    match kind {
        TileKind::Square => "square",
        TileKind::Tall => "tall",
        TileKind::Short => "short",
    }
}

struct Glyph {
    kind: ArrowKind,
    from: (f64, f64),
    to: (f64, f64),
}

/// Arrow glyphs in lattice coordinates: each runs through the tile centre
/// toward the side where its strip leaves for the northwest border.
fn glyphs(rat: &Rat) -> Vec<Glyph> {
    let d = rat.diagram();
    d.tiles()
        .iter()
        .zip(rat.cells())
        .filter_map(|(t, a)| a.map(|kind| (t, kind)))
        .map(|(t, kind)| {
            let c = t.corners;
            let cx = c.iter().map(|p| p.x as f64).sum::<f64>() / 4.0;
            let cy = c.iter().map(|p| p.y as f64).sum::<f64>() / 4.0;
            let target = match kind {
                ArrowKind::Up => mid(c[0], c[3]),
                ArrowKind::Left => mid(c[3], c[2]),
            };
            let (vx, vy) = (target.0 - cx, target.1 - cy);
            Glyph {
                kind,
                from: (cx - 0.6 * vx, cy - 0.6 * vy),
                to: (cx + 0.75 * vx, cy + 0.75 * vy),
            }
        })
        .collect()
}

fn mid(a: Point, b: Point) -> (f64, f64) {
    ((a.x + b.x) as f64 / 2.0, (a.y + b.y) as f64 / 2.0)
}

/// Label anchors just outside the southeast border, one per strip.
fn border_labels(rat: &Rat) -> Vec<((f64, f64), String)> {
    let d = rat.diagram();
    let border = d.se_border();
    rat.word()
        .labels()
        .iter()
        .enumerate()
        .map(|(p, l)| {
            let (a, b) = (border[p], border[p + 1]);
            let (mx, my) = mid(a, b);
            let (dx, dy) = ((b.x - a.x) as f64, (b.y - a.y) as f64);
            let norm = (dx * dx + dy * dy).sqrt();
            ((mx - dy / norm * 0.8, my + dx / norm * 0.8), l.to_string())
        })
        .collect()
}

fn lattice_bounds(rat: &Rat) -> (f64, f64, f64, f64) {
    let d = rat.diagram();
    let pts = d.se_border().iter().chain(d.nw_border());
    let (mut x0, mut y0, mut x1, mut y1) = (i64::MAX, i64::MAX, i64::MIN, i64::MIN);
    for p in pts {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    (x0 as f64, y0 as f64, x1 as f64, y1 as f64)
}

/// Draws a tableau: tile outlines by kind, arrows as glyphs and strip labels
/// along the southeast border.
pub fn render_rat(rat: &Rat, format: Format) -> Result<String, RenderError> {
    match format {
        Format::Svg => Ok(rat_svg(rat)),
        Format::Tikz => Ok(rat_tikz(rat)),
        Format::Ascii => Err(RenderError::Unsupported {
            object: "a tableau",
            format: "ascii",
        }),
    }
}

fn rat_svg(rat: &Rat) -> String {
    let (x0, y0, x1, y1) = lattice_bounds(rat);
    let px = |x: f64| MARGIN + (x - x0) * TILE_SCALE;
    let py = |y: f64| MARGIN + (y1 - y) * TILE_SCALE;
    let mut out = String::new();
    svg_open(
        &mut out,
        2.0 * MARGIN + (x1 - x0) * TILE_SCALE,
        2.0 * MARGIN + (y1 - y0) * TILE_SCALE,
        ".square{fill:#fff}.tall{fill:#eef}.short{fill:#efe}polygon{stroke:#000;stroke-width:1}\
         .border{fill:none;stroke:#000;stroke-width:2}.up,.left{stroke:#c00;stroke-width:2}\
         text{font:11px sans-serif;text-anchor:middle;dominant-baseline:middle}",
    );
    let _ = writeln!(out, "<!-- {} -->", escape(&rat.to_line()));
    let _ = writeln!(
        out,
        "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" markerWidth=\"5\" markerHeight=\"5\" orient=\"auto\"><path d=\"M0 0L10 5L0 10z\" fill=\"#c00\"/></marker></defs>"
    );
    let d = rat.diagram();
    out.push_str("<g class=\"tiles\">\n");
    for t in d.tiles() {
        let pts: Vec<String> = t
            .corners
            .iter()
            .map(|p| format!("{},{}", num(px(p.x as f64)), num(py(p.y as f64))))
            .collect();
        let _ = writeln!(
            out,
            "<polygon class=\"{}\" data-strips=\"{},{}\" points=\"{}\"/>",
            kind_class(t.kind),
            t.strips.0,
            t.strips.1,
            pts.join(" ")
        );
    }
    out.push_str("</g>\n");
    let outline: Vec<String> = d
        .se_border()
        .iter()
        .chain(d.nw_border().iter().rev().skip(1))
        .map(|p| format!("{},{}", num(px(p.x as f64)), num(py(p.y as f64))))
        .collect();
    let _ = writeln!(
        out,
        "<polyline class=\"border\" points=\"{}\"/>",
        outline.join(" ")
    );
    out.push_str("<g class=\"arrows\">\n");
    for g in glyphs(rat) {
        let class = if g.kind == ArrowKind::Up {
            "up"
        } else {
            "left"
        };
        let _ = writeln!(
            out,
            "<line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" marker-end=\"url(#head)\"/>",
            num(px(g.from.0)),
            num(py(g.from.1)),
            num(px(g.to.0)),
            num(py(g.to.1))
        );
    }
    out.push_str("</g>\n<g class=\"labels\">\n");
    for ((x, y), l) in border_labels(rat) {
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\">{}</text>",
            num(px(x)),
            num(py(y)),
            escape(&l)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

fn rat_tikz(rat: &Rat) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "% {}", rat.to_line());
    out.push_str("\\begin{tikzpicture}[x=0.4cm,y=0.4cm]\n");
    let d = rat.diagram();
    for t in d.tiles() {
        let fill = match t.kind {
            TileKind::Square => "white",
            TileKind::Tall => "blue!7",
            TileKind::Short => "green!7",
        };
        let pts: Vec<String> = t
            .corners
            .iter()
            .map(|p| format!("({},{})", p.x, p.y))
            .collect();
        let _ = writeln!(
            out,
            "  \\filldraw[fill={fill}] {} -- cycle; % {}",
            pts.join(" -- "),
            kind_class(t.kind)
        );
    }
    let outline: Vec<String> = d
        .se_border()
        .iter()
        .chain(d.nw_border().iter().rev().skip(1))
        .map(|p| format!("({},{})", p.x, p.y))
        .collect();
    let _ = writeln!(out, "  \\draw[thick] {};", outline.join(" -- "));
    for g in glyphs(rat) {
        let _ = writeln!(
            out,
            "  \\draw[->,red,thick] ({},{}) -- ({},{}); % {}",
            num(g.from.0),
            num(g.from.1),
            num(g.to.0),
            num(g.to.1),
            if g.kind == ArrowKind::Up {
                "up"
            } else {
                "left"
            }
        );
    }
    for ((x, y), l) in border_labels(rat) {
        let _ = writeln!(
            out,
            "  \\node at ({},{}) {{\\scriptsize ${l}$}};",
            num(x),
            num(y)
        );
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

// ---------------------------------------------------------------------------
// Arc diagrams

const ARC_GAP: f64 = 36.0;

struct ArcLayout {
    /// Vertex names in drawing order, negatives first.
    vertices: Vec<i64>,
    /// `(left, right, class)` for arcs above the line.
    upper: Vec<(usize, usize, &'static str)>,
    lower: Vec<(usize, usize, &'static str)>,
}

fn arc_layout(tau: &SignedPerm) -> ArcLayout {
    let diagram = tau.arc_diagram();
    let mut vertices: Vec<i64> = (1..=diagram.negatives as i64).rev().map(|j| -j).collect();
    vertices.extend(diagram.domain.iter().map(|&d| d as i64));
    let index = |v: i64| {
        vertices
            .iter()
            .position(|&w| w == v)
            .expect("arc endpoint is a vertex")
    };
    let class = |a: i64| if a < 0 { "spiral" } else { "arc" };
    let upper = diagram
        .upper
        .iter()
        .map(|&(a, b)| (index(a), index(b), class(a)))
        .collect();
    let lower = diagram
        .lower
        .iter()
        .map(|&(a, b)| (index(a), index(b), class(a)))
        .collect();
    ArcLayout {
        vertices,
        upper,
        lower,
    }
}

/// Draws the arc diagram of a signed permutation: upper arcs, lower arcs,
/// arcs through negative vertices, and the crossing count in a comment.
pub fn render_signed(tau: &SignedPerm, format: Format) -> Result<String, RenderError> {
    match format {
        Format::Svg => Ok(signed_svg(tau)),
        Format::Tikz => Ok(signed_tikz(tau)),
        Format::Ascii => Err(RenderError::Unsupported {
            object: "an arc diagram",
            format: "ascii",
        }),
    }
}

fn crossing_comment(tau: &SignedPerm) -> String {
    let c = tau.crossings();
    format!(
        "crossings: {} (upper {}, lower {})",
        c.total, c.upper, c.lower
    )
}

fn signed_svg(tau: &SignedPerm) -> String {
    let layout = arc_layout(tau);
    let span = |(a, b, _): &(usize, usize, &str)| (b - a) as f64 * ARC_GAP / 2.0;
    let up_h = layout.upper.iter().map(span).fold(12.0_f64, f64::max);
    let low_h = layout.lower.iter().map(span).fold(0.0_f64, f64::max);
    let base = MARGIN + up_h;
    let x = |k: usize| MARGIN + k as f64 * ARC_GAP;
    let width = 2.0 * MARGIN + (layout.vertices.len().max(1) - 1) as f64 * ARC_GAP;
    let height = base + low_h + MARGIN + 16.0;
    let mut out = String::new();
    svg_open(
        &mut out,
        width,
        height,
        "path,circle{fill:none;stroke:#000;stroke-width:1.5}.spiral{stroke:#06c}\
         .vertex{fill:#000;stroke:none}text{font:12px sans-serif;text-anchor:middle}",
    );
    let _ = writeln!(out, "<!-- {} -->", escape(&tau.to_string()));
    let _ = writeln!(out, "<!-- {} -->", crossing_comment(tau));
    out.push_str("<g class=\"upper\">\n");
    for &(a, b, class) in &layout.upper {
        if a == b {
            let _ = writeln!(
                out,
                "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"8\"/>",
                num(x(a)),
                num(base - 8.0)
            );
        } else {
            let r = num((x(b) - x(a)) / 2.0);
            let _ = writeln!(
                out,
                "<path class=\"{class}\" d=\"M{} {} A{r} {r} 0 0 1 {} {}\"/>",
                num(x(a)),
                num(base),
                num(x(b)),
                num(base)
            );
        }
    }
    out.push_str("</g>\n<g class=\"lower\">\n");
    for &(a, b, class) in &layout.lower {
        let r = num((x(b) - x(a)) / 2.0);
        let _ = writeln!(
            out,
            "<path class=\"{class}\" d=\"M{} {} A{r} {r} 0 0 0 {} {}\"/>",
            num(x(a)),
            num(base),
            num(x(b)),
            num(base)
        );
    }
    out.push_str("</g>\n<g class=\"vertices\">\n");
    for (k, v) in layout.vertices.iter().enumerate() {
        let _ = writeln!(
            out,
            "<circle class=\"vertex\" cx=\"{}\" cy=\"{}\" r=\"3\"/>",
            num(x(k)),
            num(base)
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\">{v}</text>",
            num(x(k)),
            num(base + low_h + 16.0)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

fn signed_tikz(tau: &SignedPerm) -> String {
    let layout = arc_layout(tau);
    let mut out = String::new();
    let _ = writeln!(out, "% {tau}");
    let _ = writeln!(out, "% {}", crossing_comment(tau));
    out.push_str("\\begin{tikzpicture}[x=0.8cm,y=0.8cm]\n");
    for &(a, b, class) in &layout.upper {
        let style = if class == "spiral" { "[blue]" } else { "" };
        if a == b {
            let _ = writeln!(
                out,
                "  \\draw{style} ({a},0) .. controls ({},0.8) and ({},0.8) .. ({a},0);",
                num(a as f64 - 0.4),
                num(a as f64 + 0.4)
            );
        } else {
            let _ = writeln!(
                out,
                "  \\draw{style} ({a},0) arc[start angle=180, end angle=0, radius={}];",
                num((b - a) as f64 / 2.0)
            );
        }
    }
    for &(a, b, class) in &layout.lower {
        let style = if class == "spiral" { "[blue]" } else { "" };
        let _ = writeln!(
            out,
            "  \\draw{style} ({a},0) arc[start angle=180, end angle=360, radius={}];",
            num((b - a) as f64 / 2.0)
        );
    }
    for (k, v) in layout.vertices.iter().enumerate() {
        let _ = writeln!(
            out,
            "  \\fill ({k},0) circle (2pt) node[below=3pt] {{${v}$}};"
        );
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

// ---------------------------------------------------------------------------
// Paths

/// One step of a path picture: its kind, the text above it and below it.
struct PathStep {
    kind: StepKind,
    label: String,
    mark: String,
}

fn plain_steps(h: &Mlh) -> Vec<PathStep> {
    h.steps()
        .iter()
        .map(|s| PathStep {
            kind: s.kind,
            label: s.label.to_string(),
            mark: if s.marked { "*".into() } else { String::new() },
        })
        .collect()
}

fn star_steps(h: &MlhStar) -> Vec<PathStep> {
    h.steps()
        .iter()
        .map(|&s| {
            let label = match s {
                StarStep::Up { .. } => String::new(),
                StarStep::Solid { label, .. } | StarStep::Dashed { label, .. } => label.to_string(),
                StarStep::Down(a, b) => format!("{a},{b}"),
            };
            let mut mark = String::new();
            if s.mark_a() {
                mark.push('a');
            }
            if s.mark_d() {
                mark.push('d');
            }
            PathStep {
                kind: s.kind(),
                label,
                mark,
            }
        })
        .collect()
}

fn rise(kind: StepKind) -> i64 {
    match kind {
        StepKind::Up => 1,
        StepKind::Down => -1,
        StepKind::Solid | StepKind::Dashed => 0,
    }
}

/// Draws a marked Laguerre history as a lattice path with labels above the
/// steps and marks below them.
pub fn render_mlh(h: &Mlh, format: Format) -> Result<String, RenderError> {
    Ok(render_path(&plain_steps(h), &h.to_string(), format))
}

/// Same as [`render_mlh`] for the modified form; `D` steps carry both labels.
pub fn render_mlh_star(h: &MlhStar, format: Format) -> Result<String, RenderError> {
    Ok(render_path(&star_steps(h), &h.to_string(), format))
}

fn render_path(steps: &[PathStep], text: &str, format: Format) -> String {
    match format {
        Format::Ascii => path_ascii(steps),
        Format::Svg => path_svg(steps, text),
        Format::Tikz => path_tikz(steps, text),
    }
}

fn path_ascii(steps: &[PathStep]) -> String {
    const W: usize = 4;
    let mut heights = vec![0i64];
    for s in steps {
        heights.push(heights.last().unwrap() + rise(s.kind));
    }
    let top = *heights.iter().max().unwrap();
    let rows = top.max(0) as usize + 1;
    let mut grid = vec![vec![' '; W * steps.len()]; rows];
    for (k, s) in steps.iter().enumerate() {
        let h = heights[k];
        let (row, ch) = match s.kind {
            StepKind::Up => (h, '/'),
            StepKind::Down => (h - 1, '\\'),
            StepKind::Solid => (h, '_'),
            StepKind::Dashed => (h, '.'),
        };
        let cell = &mut grid[row as usize][W * k..W * (k + 1)];
        match s.kind {
            StepKind::Solid | StepKind::Dashed => cell.iter_mut().for_each(|c| *c = ch),
            _ => cell[W / 2 - 1] = ch,
        }
    }
    let centred = |texts: Vec<&str>| {
        let mut line = String::new();
        for t in texts {
            let _ = write!(line, "{t:^W$}");
        }
        line.trim_end().to_string()
    };
    let mut out = String::new();
    out.push_str(&centred(steps.iter().map(|s| s.label.as_str()).collect()));
    out.push('\n');
    for row in grid.iter().rev() {
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    out.push_str(&centred(steps.iter().map(|s| s.mark.as_str()).collect()));
    out.push('\n');
    out
}

const STEP_PX: f64 = 36.0;

fn path_svg(steps: &[PathStep], text: &str) -> String {
    let mut heights = vec![0i64];
    for s in steps {
        heights.push(heights.last().unwrap() + rise(s.kind));
    }
    let top = *heights.iter().max().unwrap() as f64;
    let x = |k: usize| MARGIN + k as f64 * STEP_PX;
    let y = |h: i64| MARGIN + 16.0 + (top - h as f64) * STEP_PX;
    let mut out = String::new();
    svg_open(
        &mut out,
        2.0 * MARGIN + steps.len() as f64 * STEP_PX,
        2.0 * MARGIN + 32.0 + top * STEP_PX,
        "line{stroke:#000;stroke-width:2}.dashed{stroke-dasharray:4 3}.vertex{fill:#000}\
         text{font:12px sans-serif;text-anchor:middle}.mark{fill:#c00}",
    );
    let _ = writeln!(out, "<!-- {} -->", escape(text));
    for (k, s) in steps.iter().enumerate() {
        let (h0, h1) = (heights[k], heights[k + 1]);
        let class = if s.kind == StepKind::Dashed {
            " class=\"dashed\""
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "<line{class} x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            num(x(k)),
            num(y(h0)),
            num(x(k + 1)),
            num(y(h1))
        );
        let mx = (x(k) + x(k + 1)) / 2.0;
        let my = (y(h0) + y(h1)) / 2.0;
        if !s.label.is_empty() {
            let _ = writeln!(
                out,
                "<text class=\"label\" x=\"{}\" y=\"{}\">{}</text>",
                num(mx),
                num(my - 8.0),
                s.label
            );
        }
        if !s.mark.is_empty() {
            let _ = writeln!(
                out,
                "<text class=\"mark\" x=\"{}\" y=\"{}\">{}</text>",
                num(mx),
                num(my + 18.0),
                s.mark
            );
        }
    }
    for (k, &h) in heights.iter().enumerate() {
        let _ = writeln!(
            out,
            "<circle class=\"vertex\" cx=\"{}\" cy=\"{}\" r=\"2.5\"/>",
            num(x(k)),
            num(y(h))
        );
    }
    out.push_str("</svg>\n");
    out
}

fn path_tikz(steps: &[PathStep], text: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "% {text}");
    out.push_str("\\begin{tikzpicture}[x=0.7cm,y=0.7cm]\n");
    let mut h = 0i64;
    for (k, s) in steps.iter().enumerate() {
        let h1 = h + rise(s.kind);
        let style = if s.kind == StepKind::Dashed {
            "[thick,dashed]"
        } else {
            "[thick]"
        };
        let _ = write!(out, "  \\draw{style} ({k},{h}) -- ({},{h1})", k + 1);
        if !s.label.is_empty() {
            let _ = write!(out, " node[midway,above] {{\\scriptsize ${}$}}", s.label);
        }
        if !s.mark.is_empty() {
            let _ = write!(
                out,
                " node[midway,below=2pt,red] {{\\scriptsize ${}$}}",
                s.mark
            );
        }
        out.push_str(";\n");
        h = h1;
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
