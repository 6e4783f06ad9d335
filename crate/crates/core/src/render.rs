//! Deterministic SVG emission for polygons, assemblies and patches.
//!
//! Exact coordinates are converted to doubles only here, printed with six
//! decimal places and the y-axis flipped so mathematically counter-
//! clockwise polygons render counter-clockwise on screen. Output is
//! byte-stable across runs and platforms.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::error::Error;
use crate::geom::{Point, Polygon};
use crate::numeric::QS3;
use crate::tilefamily::{build_tile, TileParam};
use crate::Result;

/// Fixed fill palette for kites in assemblies; cycling keeps neighboring
/// golden files stable when counts change.
pub const PALETTE: [&str; 12] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
];

#[derive(Debug, Clone)]
pub struct SceneItem {
    pub polygon: Polygon,
    pub fill: Option<String>,
    pub stroke_width: f64,
    pub labeled: bool,
}

/// An ordered list of drawables; order is paint order.
#[derive(Debug, Clone, Default)]
pub struct Scene {
    items: Vec<SceneItem>,
}

impl Scene {
    pub fn new() -> Scene {
        Scene::default()
    }

    pub fn add(&mut self, polygon: Polygon, fill: Option<&str>) -> &mut Self {
        self.items.push(SceneItem {
            polygon,
            fill: fill.map(str::to_string),
            stroke_width: 0.02,
            labeled: false,
        });
        self
    }

    pub fn add_item(&mut self, item: SceneItem) -> &mut Self {
        self.items.push(item);
        self
    }

    pub fn items(&self) -> &[SceneItem] {
        &self.items
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Exact bounding box over all items.
    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        let mut boxes = self.items.iter().map(|i| i.polygon.bounding_box());
        let (mut min, mut max) = boxes.next()?;
        for (lo, hi) in boxes {
            if lo.x < min.x {
                min.x = lo.x;
            }
            if lo.y < min.y {
                min.y = lo.y;
            }
            if hi.x > max.x {
                max.x = hi.x;
            }
            if hi.y > max.y {
                max.y = hi.y;
            }
        }
        Some((min, max))
    }
}

fn fmt_coord(v: f64) -> String {
    // normalize negative zero so output is byte-stable
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.6}")
}

/// Render to SVG 1.1 with the viewbox fitted to the scene plus 5% margin.
pub fn scene_to_svg(scene: &Scene) -> Result<Vec<u8>> {
    let (min, max) = scene.bounding_box().ok_or(Error::EmptyScene)?;
    scene_to_svg_in_box(scene, &(min, max))
}

/// Render with an explicit exact bounding box (shared across animation
/// frames so the morph is visually stable).
pub fn scene_to_svg_in_box(scene: &Scene, bbox: &(Point, Point)) -> Result<Vec<u8>> {
    if scene.is_empty() {
        return Err(Error::EmptyScene);
    }
    let (min, max) = bbox;
    let x0 = min.x.to_f64();
    let y0 = min.y.to_f64();
    let x1 = max.x.to_f64();
    let y1 = max.y.to_f64();
    let width = x1 - x0;
    let height = y1 - y0;
    let margin = 0.05 * width.max(height).max(f64::MIN_POSITIVE);
    // y-axis flip: emit (x, -y), so the box's y-range is [-y1, -y0]
    let vb = (
        x0 - margin,
        -y1 - margin,
        width + 2.0 * margin,
        height + 2.0 * margin,
    );
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        fmt_coord(vb.0),
        fmt_coord(vb.1),
        fmt_coord(vb.2),
        fmt_coord(vb.3)
    );
    for item in scene.items() {
        let mut d = String::new();
        for (i, p) in item.polygon.vertices().iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            let _ = write!(
                d,
                "{}{} {} ",
                cmd,
                fmt_coord(p.x.to_f64()),
                fmt_coord(-p.y.to_f64())
            );
        }
        d.push('Z');
        let fill = item.fill.as_deref().unwrap_or("none");
        let _ = writeln!(
            out,
            "  <path d=\"{}\" fill=\"{}\" stroke=\"#000000\" stroke-width=\"{}\"/>",
            d,
            fill,
            fmt_coord(item.stroke_width)
        );
        if item.labeled {
            for (i, p) in item.polygon.vertices().iter().enumerate() {
                let label = (b'A' + (i % 26) as u8) as char;
                let _ = writeln!(
                    out,
                    "  <text x=\"{}\" y=\"{}\" font-size=\"0.15\" font-family=\"monospace\">{}</text>",
                    fmt_coord(p.x.to_f64() + 0.03),
                    fmt_coord(-p.y.to_f64() - 0.03),
                    label
                );
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out.into_bytes())
}

/// Emit `frames` SVG files morphing Tile(a, 1-a) from `a_from` to `a_to`,
/// parameters interpolated in exact rational arithmetic and every frame
/// checked simple before writing. All frames share one viewbox.
pub fn animate(a_from: &QS3, a_to: &QS3, frames: usize, out_dir: &Path) -> Result<Vec<PathBuf>> {
    if frames < 2 {
        return Err(Error::InvalidRange);
    }
    if a_from.is_negative()
        || (&(a_to.clone()) - &QS3::one()).is_positive()
        || (a_to - a_from).signum() <= 0
    {
        return Err(Error::InvalidRange);
    }
    let span = a_to - a_from;
    let denom = QS3::from_int((frames - 1) as i64);
    let mut polygons = Vec::with_capacity(frames);
    for i in 0..frames {
        let step = &(&span * &QS3::from_int(i as i64)) / &denom;
        let a = a_from + &step;
        let tile = build_tile(TileParam::new(a)?)?;
        let poly = tile.normalized().clone();
        if !poly.is_simple() {
            return Err(Error::DegeneratePolygon);
        }
        polygons.push(poly);
    }
    // shared exact bounding box across all frames
    let mut shared = Scene::new();
    for p in &polygons {
        shared.add(p.clone(), None);
    }
    let bbox = shared.bounding_box().ok_or(Error::EmptyScene)?;
    std::fs::create_dir_all(out_dir)?;
    let mut files = Vec::with_capacity(frames);
    for (i, poly) in polygons.into_iter().enumerate() {
        let mut scene = Scene::new();
        scene.add(poly, Some(PALETTE[0]));
        let bytes = scene_to_svg_in_box(&scene, &bbox)?;
        let path = out_dir.join(format!("frame_{i:03}.svg"));
        std::fs::write(&path, bytes)?;
        files.push(path);
    }
    Ok(files)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kite::{assemble, laves_kite, AssemblySpec};

    #[test]
    fn single_kite_scene_has_one_closed_path() {
        let mut scene = Scene::new();
        scene.add(laves_kite().polygon().clone(), Some(PALETTE[0]));
        let svg = String::from_utf8(scene_to_svg(&scene).unwrap()).unwrap();
        assert_eq!(svg.matches("<path").count(), 1);
        assert!(svg.contains("Z\""));
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn assembly_scene_counts_paths() {
        let spec = AssemblySpec::new(vec![(0, 1), (1, 2)]).unwrap();
        let asm = assemble(&spec).unwrap();
        let mut scene = Scene::new();
        for (i, kite) in asm.kite_polygons().into_iter().enumerate() {
            scene.add(kite, Some(PALETTE[i % PALETTE.len()]));
        }
        scene.add(asm.boundary().unwrap(), None);
        let svg = String::from_utf8(scene_to_svg(&scene).unwrap()).unwrap();
        assert_eq!(svg.matches("<path").count(), 4); // 3 kites + boundary
    }

    #[test]
    fn rendering_is_deterministic() {
        let mut scene = Scene::new();
        scene.add(laves_kite().polygon().clone(), Some("#123456"));
        let a = scene_to_svg(&scene).unwrap();
        let b = scene_to_svg(&scene).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn empty_scene_is_an_error() {
        assert!(matches!(scene_to_svg(&Scene::new()), Err(Error::EmptyScene)));
    }

    #[test]
    fn animation_emits_simple_frames() {
        let dir = tempfile::tempdir().unwrap();
        let from = QS3::from_ratio(1, 1000);
        let to = QS3::from_ratio(999, 1000);
        let files = animate(&from, &to, 4, dir.path()).unwrap();
        assert_eq!(files.len(), 4);
        assert!(files[0].ends_with("frame_000.svg"));
        assert!(files[3].ends_with("frame_003.svg"));
        let f0 = std::fs::read_to_string(&files[0]).unwrap();
        let f3 = std::fs::read_to_string(&files[3]).unwrap();
        // shared viewbox: identical header line
        assert_eq!(f0.lines().nth(1), f3.lines().nth(1));
        assert!(animate(&to, &from, 4, dir.path()).is_err());
        assert!(animate(&from, &to, 1, dir.path()).is_err());
    }
}
