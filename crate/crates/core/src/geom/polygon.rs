//! Polygons with exact vertices: area, simplicity, normalization.

use crate::error::Error;
use crate::numeric::QS3;
use crate::Result;

use super::{Isometry, Point, Vec2};

/// Closed polygon given by its vertex cycle. Raw polygons may contain
/// zero-length edges and straight-angle vertices; [`Polygon::normalize`]
/// removes both. Simplicity is a checked property, never assumed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polygon {
    verts: Vec<Point>,
}

impl Polygon {
    pub fn new(verts: Vec<Point>) -> Result<Polygon> {
        if verts.len() < 3 {
            return Err(Error::DegeneratePolygon);
        }
        Ok(Polygon { verts })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.verts
    }

    pub fn num_vertices(&self) -> usize {
        self.verts.len()
    }

    /// Endpoints of edge `i` (from vertex `i` to vertex `i+1 mod n`).
    pub fn edge(&self, i: usize) -> (&Point, &Point) {
        let n = self.verts.len();
        (&self.verts[i], &self.verts[(i + 1) % n])
    }

    pub fn edge_vec(&self, i: usize) -> Vec2 {
        let (a, b) = self.edge(i);
        b - a
    }

    /// Signed area by the shoelace formula: positive iff counter-clockwise.
    pub fn shoelace_area(&self) -> QS3 {
        let n = self.verts.len();
        let mut acc = QS3::zero();
        for i in 0..n {
            let a = &self.verts[i];
            let b = &self.verts[(i + 1) % n];
            acc = &acc + &(&(&a.x * &b.y) - &(&b.x * &a.y));
        }
        &acc / &QS3::from_int(2)
    }

    /// Exact simplicity test: no two non-adjacent edges intersect, and
    /// adjacent edges meet only at their shared vertex. O(n²) segment
    /// predicates; polygon sizes here stay small.
    pub fn is_simple(&self) -> bool {
        let n = self.verts.len();
        for i in 0..n {
            let (a, b) = self.edge(i);
            if a == b {
                return false; // zero-length edge
            }
            for j in (i + 1)..n {
                let (c, d) = self.edge(j);
                let adjacent_next = j == i + 1;
                let adjacent_wrap = i == 0 && j == n - 1;
                if adjacent_next || adjacent_wrap {
                    // shared endpoint allowed; a collinear fold-back is not
                    let (shared, p, q) = if adjacent_next {
                        (b, a, d)
                    } else {
                        (a, c, b) // edge j ends where edge i starts
                    };
                    let u = p - shared;
                    let v = q - shared;
                    if u.cross(&v).is_zero() && u.dot(&v).is_positive() {
                        return false;
                    }
                } else if segments_intersect(a, b, c, d) {
                    return false;
                }
            }
        }
        true
    }

    /// Remove zero-length edges, merge maximal collinear runs, and fix the
    /// orientation to counter-clockwise.
    pub fn normalize(&self) -> Result<Polygon> {
        // drop consecutive duplicates (cyclically)
        let mut vs: Vec<Point> = Vec::with_capacity(self.verts.len());
        for v in &self.verts {
            if vs.last() != Some(v) {
                vs.push(v.clone());
            }
        }
        while vs.len() > 1 && vs.first() == vs.last() {
            vs.pop();
        }
        if vs.len() < 3 {
            return Err(Error::DegeneratePolygon);
        }
        // merge straight-angle vertices until stable
        loop {
            let n = vs.len();
            let mut removed = false;
            let mut keep: Vec<Point> = Vec::with_capacity(n);
            for i in 0..n {
                let prev = &vs[(i + n - 1) % n];
                let cur = &vs[i];
                let next = &vs[(i + 1) % n];
                let u = cur - prev;
                let w = next - cur;
                if u.cross(&w).is_zero() && u.dot(&w).is_positive() {
                    removed = true;
                } else {
                    keep.push(cur.clone());
                }
            }
            vs = keep;
            if vs.len() < 3 {
                return Err(Error::DegeneratePolygon);
            }
            if !removed {
                break;
            }
        }
        let poly = Polygon { verts: vs };
        match poly.shoelace_area().signum() {
            0 => Err(Error::DegeneratePolygon),
            s if s < 0 => Ok(poly.reversed()),
            _ => Ok(poly),
        }
    }

    pub fn reversed(&self) -> Polygon {
        let mut verts = self.verts.clone();
        verts.reverse();
        Polygon { verts }
    }

    /// Mirror across the x-axis.
    pub fn mirror_x(&self) -> Polygon {
        Polygon {
            verts: self
                .verts
                .iter()
                .map(|p| Point::new(p.x.clone(), -&p.y))
                .collect(),
        }
    }

    pub fn transformed(&self, iso: &Isometry) -> Polygon {
        Polygon {
            verts: self.verts.iter().map(|p| iso.apply(p)).collect(),
        }
    }

    /// Uniform scaling about the origin.
    pub fn scaled(&self, k: &QS3) -> Polygon {
        Polygon {
            verts: self
                .verts
                .iter()
                .map(|p| Point::new(&p.x * k, &p.y * k))
                .collect(),
        }
    }

    pub fn translated(&self, v: &Vec2) -> Polygon {
        Polygon {
            verts: self.verts.iter().map(|p| p + v).collect(),
        }
    }

    /// Canonical vertex cycle for geometric equality tests: CCW orientation,
    /// rotated so the lexicographically least vertex comes first.
    pub fn canonical_cycle(&self) -> Result<Polygon> {
        let norm = self.normalize()?;
        let start = norm
            .verts
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.cmp(b))
            .map(|(i, _)| i)
            .unwrap();
        let mut verts = Vec::with_capacity(norm.verts.len());
        for i in 0..norm.verts.len() {
            verts.push(norm.verts[(start + i) % norm.verts.len()].clone());
        }
        Ok(Polygon { verts })
    }

    /// Exact squared lengths of all edges, in traversal order.
    pub fn edge_lengths2(&self) -> Vec<QS3> {
        (0..self.verts.len()).map(|i| self.edge_vec(i).norm2()).collect()
    }

    /// Axis-aligned exact bounding box `(min, max)`.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut min = self.verts[0].clone();
        let mut max = self.verts[0].clone();
        for v in &self.verts[1..] {
            if v.x < min.x {
                min.x = v.x.clone();
            }
            if v.y < min.y {
                min.y = v.y.clone();
            }
            if v.x > max.x {
                max.x = v.x.clone();
            }
            if v.y > max.y {
                max.y = v.y.clone();
            }
        }
        (min, max)
    }

    /// Vertex centroid (the face "center" for regular polygons).
    pub fn centroid(&self) -> Point {
        let n = QS3::from_int(self.verts.len() as i64);
        let mut sx = QS3::zero();
        let mut sy = QS3::zero();
        for v in &self.verts {
            sx = &sx + &v.x;
            sy = &sy + &v.y;
        }
        Point::new(&sx / &n, &sy / &n)
    }
}

fn orient(a: &Point, b: &Point, c: &Point) -> i32 {
    (b - a).cross(&(c - a)).signum()
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    // assumes a, b, p collinear
    let (lo_x, hi_x) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (lo_y, hi_y) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    lo_x <= &p.x && &p.x <= hi_x && lo_y <= &p.y && &p.y <= hi_y
}

/// Exact closed-segment intersection test (shared endpoints count).
pub fn segments_intersect(p1: &Point, p2: &Point, p3: &Point, p4: &Point) -> bool {
    let d1 = orient(p3, p4, p1);
    let d2 = orient(p3, p4, p2);
    let d3 = orient(p1, p2, p3);
    let d4 = orient(p1, p2, p4);
    if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)) {
        return true;
    }
    (d1 == 0 && on_segment(p3, p4, p1))
        || (d2 == 0 && on_segment(p3, p4, p2))
        || (d3 == 0 && on_segment(p1, p2, p3))
        || (d4 == 0 && on_segment(p1, p2, p4))
}

/// Exact test whether the interiors of two convex polygons intersect.
///
/// Separating-axis over the edge normals of both polygons; touching along
/// edges or at vertices does not count as interior overlap.
pub fn convex_interiors_intersect(a: &Polygon, b: &Polygon) -> bool {
    for (poly, other) in [(a, b), (b, a)] {
        for i in 0..poly.num_vertices() {
            let axis = poly.edge_vec(i).perp();
            let (a_min, a_max) = project(poly, &axis);
            let (b_min, b_max) = project(other, &axis);
            if a_max <= b_min || b_max <= a_min {
                return false;
            }
        }
    }
    true
}

fn project(poly: &Polygon, axis: &Vec2) -> (QS3, QS3) {
    let mut vals = poly.vertices().iter().map(|v| axis.dot(&v.to_vec()));
    let first = vals.next().unwrap();
    let mut min = first.clone();
    let mut max = first;
    for v in vals {
        if v < min {
            min = v.clone();
        }
        if v > max {
            max = v;
        }
    }
    (min, max)
}
