//! Periodic-patch verification for the degenerate tiles.
//!
//! A finite set of tile placements passes when (i) every edge either lies
//! on the outer boundary or coincides endpoint-exactly with one edge of
//! another placement, (ii) the interior angles around every interior
//! vertex sum to exactly 360°, and (iii) no two placements' boundaries
//! properly cross. Compatibility with a translation lattice is then
//! checked by translating the whole patch along each lattice vector and
//! re-verifying the overlaid union.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;
use crate::geom::{interior_angles, Isometry, Point, Polygon, Vec2};
use crate::numeric::{parse_qs3, QS3};
use crate::Result;

/// One placed tile: a normalized polygon and the rigid motion applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    pub tile: Polygon,
    pub map: Isometry,
}

impl Placement {
    pub fn new(tile: Polygon, map: Isometry) -> Placement {
        Placement { tile, map }
    }

    /// Transformed polygon, re-oriented counter-clockwise when the map
    /// reflects.
    pub fn polygon(&self) -> Polygon {
        let p = self.tile.transformed(&self.map);
        if self.map.det_sign() < 0 {
            p.reversed()
        } else {
            p
        }
    }

    fn translated(&self, v: &Vec2) -> Placement {
        Placement {
            tile: self.tile.clone(),
            map: Isometry::translation(v.clone()).compose(&self.map),
        }
    }
}

type EdgeKey = (Point, Point);

fn edge_key(a: &Point, b: &Point) -> EdgeKey {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

/// Outcome of the three check families, with enough detail to see what
/// failed where.
#[derive(Debug, Clone, Default)]
pub struct PatchReport {
    pub interior_vertices_checked: usize,
    /// Interior vertices whose angle fan does not close to 360°.
    pub angle_failures: Vec<Point>,
    /// Edges shared by more than two placements.
    pub edge_failures: Vec<(EdgeKey, usize)>,
    /// Pairs of placements that cross, partially overlap, or coincide.
    pub overlaps: Vec<(usize, usize)>,
}

impl PatchReport {
    pub fn pass(&self) -> bool {
        self.angle_failures.is_empty() && self.edge_failures.is_empty() && self.overlaps.is_empty()
    }
}

impl fmt::Display for PatchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "interior vertices checked: {}",
            self.interior_vertices_checked
        )?;
        writeln!(f, "angle failures: {}", self.angle_failures.len())?;
        writeln!(f, "edge failures: {}", self.edge_failures.len())?;
        writeln!(f, "overlapping pairs: {}", self.overlaps.len())?;
        write!(f, "verdict: {}", if self.pass() { "pass" } else { "fail" })
    }
}

fn orient_sign(a: &Point, b: &Point, c: &Point) -> i32 {
    (b - a).cross(&(c - a)).signum()
}

fn collinear_on(a: &Point, b: &Point, p: &Point) -> bool {
    let (lo_x, hi_x) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (lo_y, hi_y) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    lo_x <= &p.x && &p.x <= hi_x && lo_y <= &p.y && &p.y <= hi_y
}

/// True when the two closed segments conflict for an edge-to-edge patch:
/// a transversal crossing through interiors, or a collinear partial
/// overlap that is neither a shared endpoint nor an identical edge.
fn segments_conflict(p1: &Point, p2: &Point, p3: &Point, p4: &Point) -> bool {
    let d1 = orient_sign(p3, p4, p1);
    let d2 = orient_sign(p3, p4, p2);
    let d3 = orient_sign(p1, p2, p3);
    let d4 = orient_sign(p1, p2, p4);
    if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)) {
        return true;
    }
    if d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0 {
        // collinear: identical edges are a legal match, single shared
        // endpoints are fine, anything longer is a partial overlap
        if edge_key(p1, p2) == edge_key(p3, p4) {
            return false;
        }
        for p in [p3, p4] {
            if collinear_on(p1, p2, p) && p != p1 && p != p2 {
                return true; // an endpoint strictly inside the other edge
            }
        }
        for p in [p1, p2] {
            if collinear_on(p3, p4, p) && p != p3 && p != p4 {
                return true;
            }
        }
        return false;
    }
    // one endpoint touching the other segment's interior breaks
    // edge-to-edge matching only if it transversally pokes in; a pure
    // touch (T-vertex) surfaces as an edge-matching failure instead
    false
}

/// Run the three exact check families over a set of placements.
pub fn verify_patch(placements: &[Placement]) -> Result<PatchReport> {
    if placements.len() < 2 {
        return Err(Error::InvalidRange);
    }
    for p in placements {
        if !p.map.is_orthogonal() {
            return Err(Error::NonOrthogonal);
        }
    }
    let polygons: Vec<Polygon> = placements.iter().map(|p| p.polygon()).collect();
    let mut report = PatchReport::default();

    // float bounding boxes as a conservative prefilter: coordinates are
    // correctly rounded, so inflating by 1e-6 can only keep extra pairs
    let boxes: Vec<[f64; 4]> = polygons
        .iter()
        .map(|p| {
            let (lo, hi) = p.bounding_box();
            [
                lo.x.to_f64() - 1e-6,
                lo.y.to_f64() - 1e-6,
                hi.x.to_f64() + 1e-6,
                hi.y.to_f64() + 1e-6,
            ]
        })
        .collect();
    let boxes_disjoint = |i: usize, j: usize| {
        boxes[i][2] < boxes[j][0]
            || boxes[j][2] < boxes[i][0]
            || boxes[i][3] < boxes[j][1]
            || boxes[j][3] < boxes[i][1]
    };

    // (iii) pairwise conflicts, including exact duplicates
    let canon: Vec<Polygon> = polygons
        .iter()
        .map(|p| p.canonical_cycle())
        .collect::<Result<_>>()?;
    for i in 0..polygons.len() {
        for j in (i + 1)..polygons.len() {
            if boxes_disjoint(i, j) {
                continue;
            }
            if canon[i] == canon[j] {
                report.overlaps.push((i, j));
                continue;
            }
            let mut conflict = false;
            'edges: for a in 0..polygons[i].num_vertices() {
                let (a1, a2) = polygons[i].edge(a);
                for b in 0..polygons[j].num_vertices() {
                    let (b1, b2) = polygons[j].edge(b);
                    if segments_conflict(a1, a2, b1, b2) {
                        conflict = true;
                        break 'edges;
                    }
                }
            }
            if conflict {
                report.overlaps.push((i, j));
            }
        }
    }

    // (i) edge multiplicities
    let mut edge_owners: BTreeMap<EdgeKey, Vec<usize>> = BTreeMap::new();
    for (pi, poly) in polygons.iter().enumerate() {
        for e in 0..poly.num_vertices() {
            let (a, b) = poly.edge(e);
            edge_owners.entry(edge_key(a, b)).or_default().push(pi);
        }
    }
    for (key, owners) in &edge_owners {
        if owners.len() > 2 {
            report.edge_failures.push((key.clone(), owners.len()));
        }
    }

    // (ii) angle closure at interior vertices (all incident edges matched).
    // The angle sequence only depends on the tile and the map's chirality,
    // so it is computed once per distinct combination.
    let mut angle_cache: BTreeMap<(Polygon, bool), Vec<u32>> = BTreeMap::new();
    let mut vertex_edges: BTreeMap<Point, BTreeSet<EdgeKey>> = BTreeMap::new();
    let mut vertex_angle: BTreeMap<Point, u32> = BTreeMap::new();
    for (pi, poly) in polygons.iter().enumerate() {
        let key = (
            placements[pi].tile.clone(),
            placements[pi].map.det_sign() < 0,
        );
        if !angle_cache.contains_key(&key) {
            let degrees = interior_angles(poly)?
                .iter()
                .map(|a| a.degrees())
                .collect();
            angle_cache.insert(key.clone(), degrees);
        }
        let angles = &angle_cache[&key];
        for v in 0..poly.num_vertices() {
            let (a, b) = poly.edge(v);
            let prev = poly
                .edge((v + poly.num_vertices() - 1) % poly.num_vertices())
                .0;
            let key_out = edge_key(a, b);
            let key_in = edge_key(prev, a);
            let entry = vertex_edges.entry(a.clone()).or_default();
            entry.insert(key_out);
            entry.insert(key_in);
            *vertex_angle.entry(a.clone()).or_insert(0) += angles[v];
        }
    }
    for (vertex, edges) in &vertex_edges {
        let interior = edges
            .iter()
            .all(|e| edge_owners.get(e).map(|o| o.len()) == Some(2));
        if interior {
            report.interior_vertices_checked += 1;
            if vertex_angle[vertex] != 360 {
                report.angle_failures.push(vertex.clone());
            }
        }
    }
    Ok(report)
}

/// True iff the patch is compatible with the translation lattice spanned
/// by `v1`, `v2`: shifting all placements by either vector and overlaying
/// the result onto the original must still verify.
pub fn translational_closure(placements: &[Placement], v1: &Vec2, v2: &Vec2) -> Result<bool> {
    if v1.cross(v2).is_zero() {
        return Err(Error::DependentVectors);
    }
    for v in [v1, v2] {
        let mut union: Vec<Placement> = placements.to_vec();
        let mut seen: BTreeSet<Polygon> = placements
            .iter()
            .map(|p| p.polygon().canonical_cycle())
            .collect::<Result<_>>()?;
        for p in placements {
            let moved = p.translated(v);
            let cycle = moved.polygon().canonical_cycle()?;
            if seen.insert(cycle) {
                union.push(moved);
            }
        }
        if !verify_patch(&union)?.pass() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A verified periodic patch plus its lattice vectors.
#[derive(Debug, Clone)]
pub struct PeriodicPatch {
    pub placements: Vec<Placement>,
    pub lattice: (Vec2, Vec2),
}

/// Search for a periodic patch of the given tile by bounded edge-matching:
/// try the tile alone and two-tile units glued by point reflection or edge
/// reflection along each boundary edge, then look for two independent
/// translations matching opposite boundary edges, laying out a 3×3 block
/// and verifying it. Returns the patch and a transcript of what was tried.
pub fn derive_periodic_patch(tile: &Polygon) -> (Option<PeriodicPatch>, String) {
    // orient CCW but keep the vertex cycle as given: searching on a raw
    // boundary (straight angles intact) finds tilings whose vertices sit
    // on merged edges
    let tile = if tile.shoelace_area().is_negative() {
        tile.reversed()
    } else {
        tile.clone()
    };
    if tile.shoelace_area().is_zero() {
        return (None, "tile is degenerate".to_string());
    }
    let mut transcript = String::new();
    let seed = Placement::new(tile.clone(), Isometry::identity());
    let units = gluing_units(&tile, &seed);
    transcript.push_str(&format!("tile: {} two-tile gluings tried\n", units.len() - 1));
    for (label, unit) in units {
        let mut candidates = match translation_candidates(&unit) {
            Ok(c) => c,
            Err(_) => continue,
        };
        candidates.sort_by_key(|u| u.norm2());
        // a vector that cannot even glue the unit to one translate of
        // itself cannot be a lattice vector; this prunes almost everything
        let good: Vec<Vec2> = candidates
            .into_iter()
            .filter(|v| translate_compatible(&unit, v))
            .collect();
        transcript.push_str(&format!(
            "unit {label}: {} compatible translation candidates\n",
            good.len()
        ));
        for i in 0..good.len() {
            for j in (i + 1)..good.len() {
                let (v1, v2) = (&good[i], &good[j]);
                if v1.cross(v2).is_zero() {
                    continue;
                }
                if let Some(patch) = try_lattice(&unit, v1, v2) {
                    transcript.push_str(&format!(
                        "unit {label}: lattice ({}, {}) x ({}, {}) verified\n",
                        v1.x, v1.y, v2.x, v2.y
                    ));
                    return (Some(patch), transcript);
                }
            }
        }
        transcript.push_str(&format!("unit {label}: no lattice verified\n"));
    }
    (None, transcript)
}

/// Candidate lattice vectors: translations carrying one boundary edge of
/// the unit onto a parallel, equal-length, oppositely-directed one.
fn translation_candidates(unit: &[Placement]) -> Result<Vec<Vec2>> {
    let mut edges: Vec<(Point, Point)> = Vec::new();
    let mut counts: BTreeMap<EdgeKey, usize> = BTreeMap::new();
    for p in unit {
        let poly = p.polygon();
        for e in 0..poly.num_vertices() {
            let (a, b) = poly.edge(e);
            *counts.entry(edge_key(a, b)).or_insert(0) += 1;
            edges.push((a.clone(), b.clone()));
        }
    }
    // boundary edges only
    let edges: Vec<(Point, Point)> = edges
        .into_iter()
        .filter(|(a, b)| counts[&edge_key(a, b)] == 1)
        .collect();
    let mut seen: BTreeSet<(QS3, QS3)> = BTreeSet::new();
    let mut out = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        for (j, f) in edges.iter().enumerate() {
            if i == j {
                continue;
            }
            let de = &e.1 - &e.0;
            let df = &f.1 - &f.0;
            // f must be e reversed, up to translation
            if !(&de + &df).is_zero() {
                continue;
            }
            let mut v = &f.1 - &e.0;
            if v.is_zero() {
                continue;
            }
            // v and -v span the same lattice row; keep one representative
            if v.x.is_negative() || (v.x.is_zero() && v.y.is_negative()) {
                v = -&v;
            }
            if seen.insert((v.x.clone(), v.y.clone())) {
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// Cheap single-vector filter: the unit and its translate by `v` must
/// overlay without conflicts.
fn translate_compatible(unit: &[Placement], v: &Vec2) -> bool {
    let mut union: Vec<Placement> = unit.to_vec();
    for p in unit {
        union.push(p.translated(v));
    }
    matches!(verify_patch(&union), Ok(r) if r.pass())
}

/// The seed alone plus every valid two-tile unit obtained by gluing a copy
/// of the tile along a boundary edge: for each pair of equal-length edges
/// there is one direct (rotation) and one reflected gluing.
fn gluing_units(tile: &Polygon, seed: &Placement) -> Vec<(String, Vec<Placement>)> {
    let mut units: Vec<(String, Vec<Placement>)> =
        vec![("single".to_string(), vec![seed.clone()])];
    let seed_cycle = seed.polygon().canonical_cycle().expect("tile normalizes");
    let mut seen: BTreeSet<Polygon> = BTreeSet::new();
    let n = tile.num_vertices();
    let origin = Point::origin();
    for e in 0..n {
        let (e0, e1) = tile.edge(e);
        let de = e1 - e0;
        let line_e = crate::geom::Line::through(e0, e1).expect("edges are non-degenerate");
        for f in 0..n {
            let (f0, f1) = tile.edge(f);
            let df = f1 - f0;
            if de.norm2() != df.norm2() {
                continue;
            }
            // map edge f of the copy onto edge e reversed: g(f0)=e1, g(f1)=e0
            let Ok(Some(class)) = crate::geom::angle_class(&df, &-&de) else {
                continue;
            };
            let rot = Isometry::rotation_about(&origin, class.k() as i32);
            let shift = e1 - &rot.apply(f0);
            let direct = Isometry::translation(shift).compose(&rot);
            debug_assert_eq!(direct.apply(f1), *e0);
            let reflected = Isometry::reflection_across(&line_e).compose(&direct);
            for (tag, g) in [("rot", direct), ("refl", reflected)] {
                let partner = Placement::new(tile.clone(), g);
                let Ok(cycle) = partner.polygon().canonical_cycle() else {
                    continue;
                };
                if cycle == seed_cycle || !seen.insert(cycle) {
                    continue;
                }
                let unit = vec![seed.clone(), partner];
                if matches!(verify_patch(&unit), Ok(r) if r.pass()) {
                    units.push((format!("e{e}<-f{f} {tag}"), unit));
                }
            }
        }
    }
    units
}

/// Lay the unit out on a 3×3 block of the candidate lattice and verify it;
/// the center copy must end up completely surrounded.
fn try_lattice(unit: &[Placement], v1: &Vec2, v2: &Vec2) -> Option<PeriodicPatch> {
    let mut placements: Vec<Placement> = Vec::new();
    let mut seen: BTreeSet<Polygon> = BTreeSet::new();
    for i in -1i64..=1 {
        for j in -1i64..=1 {
            let shift = &v1.scaled(&QS3::from_int(i)) + &v2.scaled(&QS3::from_int(j));
            for p in unit {
                let moved = p.translated(&shift);
                let cycle = moved.polygon().canonical_cycle().ok()?;
                if seen.insert(cycle) {
                    placements.push(moved);
                }
            }
        }
    }
    if placements.len() < unit.len() * 9 {
        return None; // lattice too small: copies collide
    }
    let report = verify_patch(&placements).ok()?;
    if !report.pass() || report.interior_vertices_checked == 0 {
        return None;
    }
    // the seed unit must be fully surrounded: every corner interior
    let mut interior_vertices: BTreeSet<Point> = BTreeSet::new();
    {
        // recompute interior vertices the same way verify_patch does
        let polygons: Vec<Polygon> = placements.iter().map(|p| p.polygon()).collect();
        let mut edge_owners: BTreeMap<EdgeKey, usize> = BTreeMap::new();
        for poly in &polygons {
            for e in 0..poly.num_vertices() {
                let (a, b) = poly.edge(e);
                *edge_owners.entry(edge_key(a, b)).or_insert(0) += 1;
            }
        }
        let mut vertex_edges: BTreeMap<Point, BTreeSet<EdgeKey>> = BTreeMap::new();
        for poly in &polygons {
            for v in 0..poly.num_vertices() {
                let (a, b) = poly.edge(v);
                let prev = poly.edge((v + poly.num_vertices() - 1) % poly.num_vertices()).0;
                let entry = vertex_edges.entry(a.clone()).or_default();
                entry.insert(edge_key(a, b));
                entry.insert(edge_key(prev, a));
            }
        }
        for (vertex, edges) in &vertex_edges {
            if edges.iter().all(|e| edge_owners.get(e) == Some(&2)) {
                interior_vertices.insert(vertex.clone());
            }
        }
    }
    for p in unit {
        for corner in p.polygon().vertices() {
            if !interior_vertices.contains(corner) {
                return None;
            }
        }
    }
    if translational_closure(&placements, v1, v2) != Ok(true) {
        return None;
    }
    Some(PeriodicPatch {
        placements,
        lattice: (v1.clone(), v2.clone()),
    })
}

/// Serialize a periodic patch in the fixture format: one placement per
/// line `m00 m01 m10 m11 tx ty tile_id unused`, with the lattice recorded
/// in a structured comment.
pub fn write_periodic_fixture(patch: &PeriodicPatch, tile_id: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# lattice: {} {} {} {}\n",
        patch.lattice.0.x.to_compact_string(),
        patch.lattice.0.y.to_compact_string(),
        patch.lattice.1.x.to_compact_string(),
        patch.lattice.1.y.to_compact_string(),
    ));
    for p in &patch.placements {
        let m = p.map.matrix();
        let t = p.map.translation_part();
        out.push_str(&format!(
            "{} {} {} {} {} {} {} 0\n",
            m[0].to_compact_string(),
            m[1].to_compact_string(),
            m[2].to_compact_string(),
            m[3].to_compact_string(),
            t.x.to_compact_string(),
            t.y.to_compact_string(),
            tile_id,
        ));
    }
    out
}

/// Parse the fixture format; the caller resolves `tile_id`s to polygons.
pub fn parse_periodic_fixture(
    text: &str,
    resolve: impl Fn(&str) -> Result<Polygon>,
) -> Result<PeriodicPatch> {
    let mut lattice: Option<(Vec2, Vec2)> = None;
    let mut placements = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix("# lattice:") {
            let vals: Vec<QS3> = rest
                .split_whitespace()
                .map(parse_qs3)
                .collect::<Result<_>>()?;
            if vals.len() != 4 {
                return Err(Error::BadFixture("lattice needs four values".to_string()));
            }
            lattice = Some((
                Vec2::new(vals[0].clone(), vals[1].clone()),
                Vec2::new(vals[2].clone(), vals[3].clone()),
            ));
            continue;
        }
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 8 {
            return Err(Error::BadFixture(format!(
                "placement line {}: expected 8 fields",
                lineno + 1
            )));
        }
        let q: Vec<QS3> = fields[..6]
            .iter()
            .map(|s| parse_qs3(s))
            .collect::<Result<_>>()?;
        let map = Isometry::new(
            q[0].clone(),
            q[1].clone(),
            q[2].clone(),
            q[3].clone(),
            Vec2::new(q[4].clone(), q[5].clone()),
        )?;
        let tile = resolve(fields[6])?;
        placements.push(Placement::new(tile, map));
    }
    let lattice = lattice.ok_or_else(|| Error::BadFixture("missing lattice comment".to_string()))?;
    Ok(PeriodicPatch {
        placements,
        lattice,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tilefamily::{named_tile, TileName};

    fn chevron() -> Polygon {
        named_tile(TileName::T10).normalized().clone()
    }

    #[test]
    fn far_apart_copies_pass_vacuously() {
        let tile = chevron();
        let a = Placement::new(tile.clone(), Isometry::identity());
        let b = Placement::new(
            tile,
            Isometry::translation(Vec2::new(QS3::from_int(100), QS3::zero())),
        );
        let report = verify_patch(&[a, b]).unwrap();
        assert!(report.pass());
        assert_eq!(report.interior_vertices_checked, 0);
    }

    #[test]
    fn duplicated_placement_fails() {
        let tile = chevron();
        let a = Placement::new(tile.clone(), Isometry::identity());
        let report = verify_patch(&[a.clone(), a]).unwrap();
        assert!(!report.pass());
        assert_eq!(report.overlaps, vec![(0, 1)]);
    }

    #[test]
    fn crossing_placements_fail() {
        let tile = chevron();
        let a = Placement::new(tile.clone(), Isometry::identity());
        let b = Placement::new(
            tile,
            Isometry::translation(Vec2::new(QS3::from_ratio(1, 5), QS3::from_ratio(1, 7))),
        );
        let report = verify_patch(&[a, b]).unwrap();
        assert!(!report.pass());
        assert!(!report.overlaps.is_empty());
    }

    #[test]
    fn single_placement_is_rejected() {
        let tile = chevron();
        let a = Placement::new(tile, Isometry::identity());
        assert!(matches!(verify_patch(&[a]), Err(Error::InvalidRange)));
    }

    #[test]
    fn chevron_periodic_patch_is_found_and_closes() {
        let (patch, transcript) = derive_periodic_patch(&chevron());
        let patch = patch.unwrap_or_else(|| panic!("no chevron patch; transcript:\n{transcript}"));
        assert!(patch.placements.len() >= 8);
        let report = verify_patch(&patch.placements).unwrap();
        assert!(report.pass());
        assert!(report.interior_vertices_checked > 0);
        assert!(
            translational_closure(&patch.placements, &patch.lattice.0, &patch.lattice.1).unwrap()
        );
    }

    #[test]
    fn dependent_vectors_are_rejected() {
        let tile = chevron();
        let a = Placement::new(tile.clone(), Isometry::identity());
        let b = Placement::new(
            tile,
            Isometry::translation(Vec2::new(QS3::from_int(100), QS3::zero())),
        );
        let v = Vec2::new(QS3::from_int(1), QS3::from_int(2));
        let v2 = v.scaled(&QS3::from_int(2));
        assert_eq!(
            translational_closure(&[a, b], &v, &v2),
            Err(Error::DependentVectors)
        );
    }

    #[test]
    fn incompatible_vector_fails_closure() {
        let (patch, _) = derive_periodic_patch(&chevron());
        let patch = patch.unwrap();
        let bad = Vec2::new(QS3::from_ratio(1, 3), QS3::from_ratio(1, 9));
        assert_eq!(
            translational_closure(&patch.placements, &bad, &patch.lattice.1),
            Ok(false)
        );
    }

    #[test]
    fn fixture_roundtrip() {
        let (patch, _) = derive_periodic_patch(&chevron());
        let patch = patch.unwrap();
        let text = write_periodic_fixture(&patch, "t10");
        let parsed = parse_periodic_fixture(&text, |id| {
            assert_eq!(id, "t10");
            Ok(chevron())
        })
        .unwrap();
        assert_eq!(parsed.placements.len(), patch.placements.len());
        assert_eq!(parsed.lattice, patch.lattice);
        let report = verify_patch(&parsed.placements).unwrap();
        assert!(report.pass());
    }

    #[test]
    fn patch_area_equals_union_area() {
        // a passing report implies no gaps and no overlaps, so the sum of
        // tile areas equals the area inside the union's outer boundary
        let (patch, _) = derive_periodic_patch(&chevron());
        let patch = patch.unwrap();
        let polygons: Vec<Polygon> = patch.placements.iter().map(|p| p.polygon()).collect();
        let outer = crate::kite::boundary_of_ccw_polygons(polygons.iter()).unwrap();
        let sum = polygons
            .iter()
            .fold(QS3::zero(), |acc, p| &acc + &p.shoelace_area());
        assert_eq!(outer.shoelace_area().abs(), sum);
    }

    #[test]
    fn report_is_isometry_invariant() {
        let (patch, _) = derive_periodic_patch(&chevron());
        let patch = patch.unwrap();
        let g = Isometry::rotation_about(&Point::from_ints(3, -1), 5);
        let moved: Vec<Placement> = patch
            .placements
            .iter()
            .map(|p| Placement::new(p.tile.clone(), g.compose(&p.map)))
            .collect();
        let r1 = verify_patch(&patch.placements).unwrap();
        let r2 = verify_patch(&moved).unwrap();
        assert_eq!(r1.pass(), r2.pass());
        assert_eq!(
            r1.interior_vertices_checked,
            r2.interior_vertices_checked
        );
    }
}
