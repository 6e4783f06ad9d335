//! Assembly search: a brute-force oracle that recovers reflection orders
//! from target boundary shapes.
//!
//! Reflecting the seed kite across its edges only ever lands on cells of
//! one fixed global tessellation, so placements are interned as integer
//! cell ids and the breadth-first enumeration runs on small integer sets
//! instead of exact matrices. The exact arithmetic happens once per
//! distinct cell.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::Error;
use crate::geom::{canonical_signature, Isometry, Point, Polygon, Signature};
use crate::numeric::QS3;
use crate::Result;

use super::{boundary_of_placements, laves_kite, reflect_step, AssemblySpec};

type CellId = u32;

/// The kite's own mirror symmetry (across its A–C diagonal). This mirror
/// line is also a symmetry of the ambient tessellation, so two placements
/// differing by it put the kite on the same geometric cell; cell identity
/// must be taken modulo this involution.
fn kite_self_mirror() -> Isometry {
    let k = laves_kite();
    let axis = crate::geom::Line::through(k.vertex_a(), k.vertex_c()).unwrap();
    Isometry::reflection_across(&axis)
}

/// Interned placements of the global kite tessellation, grown on demand.
/// Placements are kept exact (so reflection chains replay verbatim), and
/// each carries the id of the geometric cell it covers plus its transformed
/// kite polygon re-oriented CCW, so the search never re-applies isometries.
struct CellStore {
    placements: Vec<Isometry>,
    polygons: Vec<Polygon>,
    neighbors: Vec<[Option<CellId>; 4]>,
    cell_of: Vec<u32>,
    by_placement: BTreeMap<Isometry, CellId>,
    self_mirror: Isometry,
    cell_count: u32,
}

impl CellStore {
    fn new() -> CellStore {
        let mut store = CellStore {
            placements: Vec::new(),
            polygons: Vec::new(),
            neighbors: Vec::new(),
            cell_of: Vec::new(),
            by_placement: BTreeMap::new(),
            self_mirror: kite_self_mirror(),
            cell_count: 0,
        };
        store.intern(Isometry::identity());
        store
    }

    fn intern(&mut self, placement: Isometry) -> CellId {
        if let Some(&id) = self.by_placement.get(&placement) {
            return id;
        }
        let twin = placement.compose(&self.self_mirror);
        let cell = match self.by_placement.get(&twin) {
            Some(&tid) => self.cell_of[tid as usize],
            None => {
                self.cell_count += 1;
                self.cell_count - 1
            }
        };
        let poly = laves_kite().polygon().transformed(&placement);
        let poly = if placement.det_sign() < 0 {
            poly.reversed()
        } else {
            poly
        };
        let id = self.placements.len() as CellId;
        self.by_placement.insert(placement.clone(), id);
        self.placements.push(placement);
        self.polygons.push(poly);
        self.neighbors.push([None; 4]);
        self.cell_of.push(cell);
        id
    }

    fn neighbor(&mut self, id: CellId, edge: u8) -> CellId {
        if let Some(n) = self.neighbors[id as usize][edge as usize] {
            return n;
        }
        let reflected = reflect_step(&self.placements[id as usize], edge);
        let n = self.intern(reflected);
        self.neighbors[id as usize][edge as usize] = Some(n);
        n
    }

    fn placement(&self, id: CellId) -> &Isometry {
        &self.placements[id as usize]
    }

    fn polygon(&self, id: CellId) -> &Polygon {
        &self.polygons[id as usize]
    }

    /// Geometric cell id, identical for the two mirror-twin placements.
    fn cell(&self, id: CellId) -> u32 {
        self.cell_of[id as usize]
    }
}

/// Breadth-first enumeration of reflection assemblies, deduplicated by
/// placement-set equality, returning every spec of exactly `n_kites` kites
/// whose normalized boundary signature equals `target`.
///
/// `limit` bounds the number of distinct placement sets entered into the
/// frontier; exceeding it is an error. Results come in deterministic
/// discovery order.
pub fn search_assembly(
    target: &Signature,
    n_kites: usize,
    limit: usize,
) -> Result<Vec<AssemblySpec>> {
    if n_kites < 1 {
        return Err(Error::InvalidRange);
    }
    let mut store = CellStore::new();
    let mut visited: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<(usize, u8)>> = VecDeque::new();
    let mut results = Vec::new();
    visited.insert(vec![store.cell(0)]);
    queue.push_back(Vec::new());
    while let Some(steps) = queue.pop_front() {
        // rebuild the ordered placement list; neighbor lookups are cached
        let mut order: Vec<CellId> = vec![0];
        for &(src, edge) in &steps {
            let id = store.neighbor(order[src], edge);
            order.push(id);
        }
        if order.len() == n_kites {
            if boundary_matches(order.iter().map(|&c| store.polygon(c)), target)? {
                results.push(AssemblySpec::new(steps).unwrap());
            }
            continue;
        }
        // occupancy and deduplication use geometric cells, not placements:
        // mirror-twin placements cover the same kite
        let occupied: BTreeSet<u32> = order.iter().map(|&id| store.cell(id)).collect();
        for src in 0..order.len() {
            for edge in 0..4u8 {
                let id = store.neighbor(order[src], edge);
                let cell = store.cell(id);
                if occupied.contains(&cell) {
                    continue;
                }
                let mut key: Vec<u32> = occupied.iter().copied().collect();
                let pos = key.binary_search(&cell).unwrap_err();
                key.insert(pos, cell);
                if visited.contains(&key) {
                    continue;
                }
                if visited.len() >= limit {
                    return Err(Error::SearchLimitExceeded { limit });
                }
                visited.insert(key);
                let mut next = steps.clone();
                next.push((src, edge));
                queue.push_back(next);
            }
        }
    }
    Ok(results)
}

fn boundary_matches<'a>(
    polygons: impl Iterator<Item = &'a Polygon>,
    target: &Signature,
) -> Result<bool> {
    let boundary = match super::boundary_of_ccw_polygons(polygons) {
        Ok(b) => b,
        // unions with pinched boundaries can occur during enumeration;
        // they are simply not matches
        Err(Error::DisconnectedBoundary) | Err(Error::OpenBoundary) => return Ok(false),
        Err(e) => return Err(e),
    };
    let normalized = match boundary.normalize() {
        Ok(n) => n,
        Err(Error::DegeneratePolygon) => return Ok(false),
        Err(e) => return Err(e),
    };
    match canonical_signature(&normalized, target.mode()) {
        Ok(sig) => Ok(&sig == target),
        Err(Error::UnclassifiableAngle) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Derive an assembly spec for a target polygon by exact region cover.
///
/// The target (any similarity copy of the wanted boundary) is rescaled so
/// its area is `n_kites·√3`, posed onto the kite lattice in every
/// orientation with each vertex anchored to nearby lattice vertices, and a
/// pose whose interior is covered by exactly `n_kites` cells yields the
/// cluster. The cluster is re-anchored so one cell is the seed and turned
/// into reflection steps along a breadth-first spanning tree. Deterministic,
/// and practical at kite counts where the breadth-first oracle is not.
pub fn derive_spec_for_tile(target: &Polygon, n_kites: usize) -> Result<AssemblySpec> {
    if n_kites < 1 {
        return Err(Error::InvalidRange);
    }
    let target = target.normalize()?;
    let want_area = &QS3::from_int(n_kites as i64) * &QS3::sqrt3();
    let ratio2 = want_area.checked_div(&target.shoelace_area())?;
    let Some(scale) = ratio2.sqrt()? else {
        return Err(Error::BadFixture(format!(
            "no exact lattice scale for a {n_kites}-kite assembly of this shape"
        )));
    };
    let tile = target.scaled(&scale);

    // lattice neighborhood big enough to hold any pose anchored near the seed
    let (min, max) = tile.bounding_box();
    let w = (&max.x - &min.x).to_f64();
    let h = (&max.y - &min.y).to_f64();
    let diam = (w * w + h * h).sqrt();
    let radius = diam + 6.0;
    let (store, cells) = grow_disk(radius * radius);
    let centroids: Vec<Point> = cells.iter().map(|&c| store.polygon(c).centroid()).collect();
    let mut lattice_vertices: BTreeSet<Point> = BTreeSet::new();
    for &c in &cells {
        for v in store.polygon(c).vertices() {
            lattice_vertices.insert(v.clone());
        }
    }
    let anchor_limit = (diam + 4.0) * (diam + 4.0);
    let anchors: Vec<Point> = lattice_vertices
        .iter()
        .filter(|v| v.dist2(&Point::origin()).to_f64() <= anchor_limit)
        .cloned()
        .collect();

    for mirrored in [false, true] {
        let flipped = if mirrored { tile.mirror_x() } else { tile.clone() };
        for rot in 0..12 {
            let oriented =
                flipped.transformed(&Isometry::rotation_about(&Point::origin(), rot));
            let first = oriented.vertices()[0].clone();
            for anchor in &anchors {
                let shift = anchor - &first;
                let posed = oriented.translated(&shift);
                if !posed
                    .vertices()
                    .iter()
                    .all(|v| lattice_vertices.contains(v))
                {
                    continue;
                }
                let inside: Vec<usize> = (0..cells.len())
                    .filter(|&i| polygon_contains(&posed, &centroids[i]))
                    .collect();
                if inside.len() != n_kites {
                    continue;
                }
                let cluster: Vec<Isometry> = inside
                    .iter()
                    .map(|&i| store.placement(cells[i]).clone())
                    .collect();
                // a centroid count alone is not a cover: the union boundary
                // must reproduce the posed tile exactly
                let Ok(boundary) = boundary_of_placements(&cluster) else {
                    continue;
                };
                let (Ok(bc), Ok(pc)) = (boundary.canonical_cycle(), posed.canonical_cycle())
                else {
                    continue;
                };
                if bc != pc {
                    continue;
                }
                return spec_from_cluster(&cluster);
            }
        }
    }
    Err(Error::BadFixture(format!(
        "no {n_kites}-kite assembly covers the target shape"
    )))
}

/// One placement per geometric cell whose centroid lies within `radius²`
/// of the origin, found by breadth-first reflection growth.
fn grow_disk(radius2: f64) -> (CellStore, Vec<CellId>) {
    let mut store = CellStore::new();
    let origin = Point::origin();
    let mut inside: Vec<CellId> = Vec::new();
    let mut seen_cells: BTreeSet<u32> = BTreeSet::new();
    let mut queue: VecDeque<CellId> = VecDeque::new();
    seen_cells.insert(store.cell(0));
    queue.push_back(0);
    while let Some(id) = queue.pop_front() {
        let centroid = store.polygon(id).centroid();
        if centroid.dist2(&origin).to_f64() > radius2 {
            continue;
        }
        inside.push(id);
        for edge in 0..4u8 {
            let n = store.neighbor(id, edge);
            if seen_cells.insert(store.cell(n)) {
                queue.push_back(n);
            }
        }
    }
    (store, inside)
}

fn polygon_contains(poly: &Polygon, p: &Point) -> bool {
    // crossing-number test; exact, and safe here because cell centroids
    // never lie on lattice edges
    let n = poly.num_vertices();
    let mut inside = false;
    for i in 0..n {
        let (a, b) = poly.edge(i);
        let a_below = a.y <= p.y;
        let b_below = b.y <= p.y;
        if a_below != b_below {
            let o = (b - a).cross(&(p - a)).signum();
            if b.y > a.y {
                if o > 0 {
                    inside = !inside;
                }
            } else if o < 0 {
                inside = !inside;
            }
        }
    }
    inside
}

/// Re-anchor a cluster of placements so one cell is the identity, then emit
/// reflection steps along a breadth-first spanning tree. Cell membership is
/// tested modulo the kite's self-mirror.
fn spec_from_cluster(cluster: &[Isometry]) -> Result<AssemblySpec> {
    let sigma = kite_self_mirror();
    let canon = |p: &Isometry| -> Isometry { p.clone().min(p.compose(&sigma)) };
    let root = cluster
        .iter()
        .min()
        .expect("cluster is non-empty")
        .clone();
    let re_anchor = root.inverse();
    let members: BTreeSet<Isometry> = cluster
        .iter()
        .map(|p| canon(&re_anchor.compose(p)))
        .collect();
    let mut order: Vec<Isometry> = vec![Isometry::identity()];
    let mut steps: Vec<(usize, u8)> = Vec::new();
    let mut placed: BTreeSet<Isometry> = BTreeSet::new();
    placed.insert(canon(&Isometry::identity()));
    let mut cursor = 0usize;
    while cursor < order.len() {
        for edge in 0..4u8 {
            let next = reflect_step(&order[cursor], edge);
            let key = canon(&next);
            if members.contains(&key) && !placed.contains(&key) {
                placed.insert(key);
                order.push(next);
                steps.push((cursor, edge));
            }
        }
        cursor += 1;
    }
    if order.len() != members.len() {
        return Err(Error::BadFixture(
            "cluster is not edge-connected".to_string(),
        ));
    }
    AssemblySpec::new(steps)
}
