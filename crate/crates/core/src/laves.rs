//! Finite patches of the (3.3.3.3.3.3) and (3.4.6.4) tessellations and
//! their dual (Laves) tessellations.
//!
//! The dual connects face centers across shared edges: one dual face per
//! interior vertex of the base patch, its corners the centroids of the
//! incident faces in angular order. The dual of the triangle tessellation
//! is the hexagon tessellation (6.6.6); the dual of (3.4.6.4) is the kite
//! tessellation the whole monotile story is built on.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::geom::{angular_cmp, interior_angles, unit_vector, Point, Polygon, Vec2};
use crate::numeric::QS3;
use crate::Result;

/// A finite edge-to-edge patch of regular polygons with exact coordinates.
#[derive(Debug, Clone)]
pub struct Patch {
    faces: Vec<Polygon>,
    adjacency: Vec<(usize, usize)>,
    vertices: Vec<PatchVertex>,
}

/// A deduplicated patch vertex with the faces incident to it.
#[derive(Debug, Clone)]
pub struct PatchVertex {
    pub position: Point,
    pub incident_faces: Vec<usize>,
    pub interior: bool,
}

impl Patch {
    /// Index faces into shared-edge adjacency and deduplicated vertices,
    /// classifying a vertex as interior when its incident corner angles
    /// close a full 360° fan.
    fn from_faces(faces: Vec<Polygon>) -> Result<Patch> {
        let mut edge_faces: BTreeMap<(Point, Point), Vec<usize>> = BTreeMap::new();
        let mut vertex_ids: BTreeMap<Point, usize> = BTreeMap::new();
        let mut vertices: Vec<PatchVertex> = Vec::new();
        let mut angle_sum: Vec<u32> = Vec::new();
        for (fi, face) in faces.iter().enumerate() {
            let angles = interior_angles(face)?;
            for i in 0..face.num_vertices() {
                let (a, b) = face.edge(i);
                let key = if a <= b {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                };
                edge_faces.entry(key).or_default().push(fi);
                let vid = *vertex_ids.entry(a.clone()).or_insert_with(|| {
                    vertices.push(PatchVertex {
                        position: a.clone(),
                        incident_faces: Vec::new(),
                        interior: false,
                    });
                    angle_sum.push(0);
                    vertices.len() - 1
                });
                vertices[vid].incident_faces.push(fi);
                angle_sum[vid] += angles[i].degrees();
            }
        }
        let mut adjacency = Vec::new();
        for (edge, fs) in &edge_faces {
            match fs.len() {
                1 => {}
                2 => adjacency.push((fs[0], fs[1])),
                _ => {
                    return Err(Error::BadFixture(format!(
                        "edge {:?} shared by {} faces",
                        edge,
                        fs.len()
                    )))
                }
            }
        }
        for (vid, v) in vertices.iter_mut().enumerate() {
            v.interior = angle_sum[vid] == 360;
        }
        Ok(Patch {
            faces,
            adjacency,
            vertices,
        })
    }

    pub fn faces(&self) -> &[Polygon] {
        &self.faces
    }

    pub fn adjacency(&self) -> &[(usize, usize)] {
        &self.adjacency
    }

    pub fn vertices(&self) -> &[PatchVertex] {
        &self.vertices
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = &PatchVertex> {
        self.vertices.iter().filter(|v| v.interior)
    }
}

/// The dual (Laves) patch: one face per interior vertex of the base patch.
#[derive(Debug, Clone)]
pub struct DualPatch {
    faces: Vec<Polygon>,
}

impl DualPatch {
    pub fn faces(&self) -> &[Polygon] {
        &self.faces
    }
}

/// All unit triangles of the (3.3.3.3.3.3) tessellation whose centroids lie
/// within Euclidean distance `radius` of the origin.
pub fn triangular_patch(radius: u32) -> Result<Patch> {
    if !(1..=6).contains(&radius) {
        return Err(Error::RadiusOutOfRange);
    }
    let r2 = QS3::from_int((radius * radius) as i64);
    let e1 = unit_vector(0);
    let e2 = unit_vector(2);
    let origin = Point::origin();
    let mut faces = Vec::new();
    let range = radius as i64 + 2;
    for i in -range..=range {
        for j in -range..=range {
            let base = &(&origin + &e1.scaled(&QS3::from_int(i))) + &e2.scaled(&QS3::from_int(j));
            let up = Polygon::new(vec![
                base.clone(),
                &base + &e1,
                &base + &e2,
            ])
            .unwrap();
            let down = Polygon::new(vec![
                &base + &e1,
                &(&base + &e1) + &e2,
                &base + &e2,
            ])
            .unwrap();
            for tri in [up, down] {
                let c = tri.centroid();
                if (&c.dist2(&origin) - &r2).signum() <= 0 {
                    faces.push(tri.normalize().unwrap());
                }
            }
        }
    }
    Patch::from_faces(faces)
}

/// A patch of the semiregular (3.4.6.4) tessellation: unit hexagons on a
/// triangular superlattice of spacing 1+√3, a unit square on every hexagon
/// edge, and unit triangles filling the corners.
pub fn patch_3464(radius: u32) -> Result<Patch> {
    if !(1..=4).contains(&radius) {
        return Err(Error::RadiusOutOfRange);
    }
    let r = radius as i64;
    // hexagon centers m·u + n·v with axial hex-distance <= radius
    let spacing = &QS3::one() + &QS3::sqrt3();
    let u = unit_vector(1).scaled(&spacing); // 30°
    let v = unit_vector(3).scaled(&spacing); // 90°
    let origin = Point::origin();
    let mut hex_centers = Vec::new();
    for m in -r..=r {
        for n in -r..=r {
            if (m + n).abs() > r {
                continue;
            }
            hex_centers.push(&(&origin + &u.scaled(&QS3::from_int(m))) + &v.scaled(&QS3::from_int(n)));
        }
    }
    let mut faces: Vec<Polygon> = Vec::new();
    let mut seen: BTreeMap<Vec<Point>, ()> = BTreeMap::new();
    let mut push_unique = |poly: Polygon| {
        let mut key = poly.vertices().to_vec();
        key.sort();
        if seen.insert(key, ()).is_none() {
            faces.push(poly.normalize().unwrap());
        }
    };
    for center in &hex_centers {
        // vertices at 0°, 60°, ...: edge normals then point at 30°+k·60°,
        // lining up with the superlattice directions
        let corners: Vec<Point> = (0..6)
            .map(|k| center + &unit_vector(2 * k))
            .collect();
        push_unique(Polygon::new(corners.clone()).unwrap());
        for k in 0..6usize {
            let a = corners[k].clone();
            let b = corners[(k + 1) % 6].clone();
            let outward = unit_vector(2 * k as i32 + 1);
            // square on the edge
            push_unique(
                Polygon::new(vec![
                    a.clone(),
                    b.clone(),
                    &b + &outward,
                    &a + &outward,
                ])
                .unwrap(),
            );
            // triangle at corner b, between this square and the next
            let outward_next = unit_vector(2 * k as i32 + 3);
            push_unique(
                Polygon::new(vec![
                    b.clone(),
                    &b + &outward_next,
                    &b + &outward,
                ])
                .unwrap(),
            );
        }
    }
    Patch::from_faces(faces)
}

/// Dual (Laves) patch: for each interior vertex, connect the centroids of
/// its incident faces in angular order.
pub fn dual(patch: &Patch) -> Result<DualPatch> {
    let mut faces = Vec::new();
    for v in patch.interior_vertices() {
        let mut centroids: Vec<Point> = v
            .incident_faces
            .iter()
            .map(|&fi| patch.faces()[fi].centroid())
            .collect();
        centroids.sort_by(|a, b| {
            let da: Vec2 = a - &v.position;
            let db: Vec2 = b - &v.position;
            angular_cmp(&da, &db)
        });
        faces.push(Polygon::new(centroids)?.normalize()?);
    }
    if faces.is_empty() {
        return Err(Error::NoInteriorVertex);
    }
    Ok(DualPatch { faces })
}
