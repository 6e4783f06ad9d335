//! The Laves kite and its reflection assemblies.
//!
//! The canonical kite is built by the four-step construction from A=(0,0),
//! B=(1,0): rotate B about A by 120° to get B′, then intersect the
//! perpendicular to AB through B with the perpendicular to AB′ through B′
//! to get C. Assemblies reflect copies of the kite across their own edges;
//! every placement so produced is a cell of the global dual tessellation,
//! which is what makes overlap impossible for well-formed specs and lets
//! the search intern placements as lattice cells.

mod search;

pub use search::{derive_spec_for_tile, search_assembly};

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::geom::{line_intersection, Isometry, Line, Point, Polygon};
use crate::numeric::QS3;
use crate::Result;

/// The Laves kite with labeled vertices A, B, C, B′ in traversal order.
/// Sides |AB| = |AB′| = 1 and |BC| = |B′C| = √3; angles 120/90/60/90.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kite {
    polygon: Polygon,
}

impl Kite {
    pub fn polygon(&self) -> &Polygon {
        &self.polygon
    }

    pub fn vertex_a(&self) -> &Point {
        &self.polygon.vertices()[0]
    }

    pub fn vertex_b(&self) -> &Point {
        &self.polygon.vertices()[1]
    }

    pub fn vertex_c(&self) -> &Point {
        &self.polygon.vertices()[2]
    }

    pub fn vertex_b_prime(&self) -> &Point {
        &self.polygon.vertices()[3]
    }
}

/// Execute the four construction steps exactly.
pub fn laves_kite() -> Kite {
    let a = Point::origin();
    let b = Point::from_ints(1, 0);
    let b_prime = crate::geom::rotate_about(&b, &a, 4); // 120° CCW
    let ab = Line::through(&a, &b).expect("A != B");
    let ab_prime = Line::through(&a, &b_prime).expect("A != B'");
    let c = line_intersection(
        &ab.perpendicular_through(&b),
        &ab_prime.perpendicular_through(&b_prime),
    )
    .expect("perpendiculars of non-parallel sides meet");
    Kite {
        polygon: Polygon::new(vec![a, b, c, b_prime]).unwrap(),
    }
}

/// Ordered reflection steps: each `(source_kite_index, edge_index)` reflects
/// the kite placed at `source_kite_index` across its edge `edge_index`.
/// Edge `i` joins labeled vertex `i` to vertex `i+1 mod 4` in the order
/// A, B, C, B′.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AssemblySpec {
    steps: Vec<(usize, u8)>,
}

impl AssemblySpec {
    pub fn new(steps: Vec<(usize, u8)>) -> Result<AssemblySpec> {
        for (i, &(_, edge)) in steps.iter().enumerate() {
            if edge > 3 {
                return Err(Error::BadKiteIndex {
                    step: i,
                    index: edge as usize,
                });
            }
        }
        Ok(AssemblySpec { steps })
    }

    pub fn empty() -> AssemblySpec {
        AssemblySpec { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[(usize, u8)] {
        &self.steps
    }

    /// Number of kites the spec assembles (steps + seed).
    pub fn kite_count(&self) -> usize {
        self.steps.len() + 1
    }

    /// Parse the plain-text format: one `<source_kite_index> <edge_index>`
    /// per line, `#` comments and blank lines ignored.
    pub fn parse(text: &str) -> Result<AssemblySpec> {
        let mut steps = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let bad = || Error::BadFixture(format!("spec line {}: expected two integers", lineno + 1));
            let src: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let edge: u8 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if parts.next().is_some() {
                return Err(bad());
            }
            steps.push((src, edge));
        }
        AssemblySpec::new(steps)
    }
}

impl fmt::Display for AssemblySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (src, edge) in &self.steps {
            writeln!(f, "{src} {edge}")?;
        }
        Ok(())
    }
}

/// A realized assembly: one isometry per kite, the seed at index 0 placed
/// with the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assembly {
    placements: Vec<Isometry>,
    spec: AssemblySpec,
}

impl Assembly {
    pub fn placements(&self) -> &[Isometry] {
        &self.placements
    }

    pub fn spec(&self) -> &AssemblySpec {
        &self.spec
    }

    pub fn kite_count(&self) -> usize {
        self.placements.len()
    }

    /// The transformed kite polygons, in placement order.
    pub fn kite_polygons(&self) -> Vec<Polygon> {
        let kite = laves_kite();
        self.placements
            .iter()
            .map(|p| kite.polygon().transformed(p))
            .collect()
    }

    /// Outer boundary of the kite union as a raw polygon (no normalization).
    pub fn boundary(&self) -> Result<Polygon> {
        boundary_of_placements(&self.placements)
    }

    /// Total area, which equals `kite_count · √3` for any legal assembly.
    pub fn area(&self) -> Result<QS3> {
        Ok(self.boundary()?.shoelace_area().abs())
    }
}

/// The reflection taking `placement`'s kite across its transformed edge.
pub(crate) fn reflect_step(placement: &Isometry, edge: u8) -> Isometry {
    let kite = laves_kite();
    let verts = kite.polygon().vertices();
    let a = placement.apply(&verts[edge as usize]);
    let b = placement.apply(&verts[(edge as usize + 1) % 4]);
    let line = Line::through(&a, &b).expect("kite edges are non-degenerate");
    Isometry::reflection_across(&line).compose(placement)
}

/// Run a spec: seed kite at the identity, then one reflection per step.
/// Rejects steps that duplicate an existing placement or overlap one.
pub fn assemble(spec: &AssemblySpec) -> Result<Assembly> {
    let kite = laves_kite();
    let mut placements = vec![Isometry::identity()];
    let mut polygons = vec![kite.polygon().clone()];
    for (i, &(src, edge)) in spec.steps().iter().enumerate() {
        if src >= placements.len() {
            return Err(Error::BadKiteIndex {
                step: i,
                index: src,
            });
        }
        let new_placement = reflect_step(&placements[src], edge);
        if placements.contains(&new_placement) {
            return Err(Error::DuplicateKite { step: i });
        }
        let new_poly = kite.polygon().transformed(&new_placement);
        for existing in &polygons {
            if crate::geom::convex_interiors_intersect(existing, &new_poly) {
                return Err(Error::KiteOverlap { step: i });
            }
        }
        placements.push(new_placement);
        polygons.push(new_poly);
    }
    Ok(Assembly {
        placements,
        spec: spec.clone(),
    })
}

/// Boundary of a set of kite placements by directed-edge cancellation.
///
/// Each kite contributes its four edges oriented CCW; an edge shared by two
/// kites appears once in each direction and cancels. What remains must
/// chain into exactly one closed cycle.
pub(crate) fn boundary_of_placements(placements: &[Isometry]) -> Result<Polygon> {
    let kite = laves_kite();
    let polygons: Vec<Polygon> = placements
        .iter()
        .map(|p| {
            let poly = kite.polygon().transformed(p);
            if p.det_sign() < 0 {
                poly.reversed()
            } else {
                poly
            }
        })
        .collect();
    boundary_of_ccw_polygons(polygons.iter())
}

/// Edge-cancellation core over already-transformed CCW kite polygons.
pub(crate) fn boundary_of_ccw_polygons<'a>(
    polygons: impl Iterator<Item = &'a Polygon>,
) -> Result<Polygon> {
    let mut counts: BTreeMap<(Point, Point), usize> = BTreeMap::new();
    for poly in polygons {
        for i in 0..poly.num_vertices() {
            let (a, b) = poly.edge(i);
            let reverse = (b.clone(), a.clone());
            if let Some(c) = counts.get_mut(&reverse) {
                *c -= 1;
                if *c == 0 {
                    counts.remove(&reverse);
                }
            } else {
                *counts.entry((a.clone(), b.clone())).or_insert(0) += 1;
            }
        }
    }
    let mut successors: BTreeMap<Point, Point> = BTreeMap::new();
    let mut remaining = 0usize;
    for ((a, b), c) in &counts {
        if *c != 1 {
            return Err(Error::OpenBoundary);
        }
        if successors.insert(a.clone(), b.clone()).is_some() {
            // a vertex with two outgoing boundary edges: pinched union
            return Err(Error::DisconnectedBoundary);
        }
        remaining += 1;
    }
    if remaining == 0 {
        return Err(Error::OpenBoundary);
    }
    let start = successors.keys().next().unwrap().clone();
    let mut cycle = vec![start.clone()];
    let mut cur = successors.get(&start).ok_or(Error::OpenBoundary)?.clone();
    let mut used = 1usize;
    while cur != start {
        let next = successors.get(&cur).ok_or(Error::OpenBoundary)?.clone();
        cycle.push(cur);
        cur = next;
        used += 1;
        if used > remaining {
            return Err(Error::OpenBoundary);
        }
    }
    if used != remaining {
        return Err(Error::DisconnectedBoundary);
    }
    Polygon::new(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{interior_angles, unit_vector};
    use crate::numeric::parse_qs3;

    fn qs3(s: &str) -> QS3 {
        parse_qs3(s).unwrap()
    }

    #[test]
    fn construction_yields_the_expected_vertices() {
        let k = laves_kite();
        assert_eq!(k.vertex_a(), &Point::origin());
        assert_eq!(k.vertex_b(), &Point::from_ints(1, 0));
        assert_eq!(k.vertex_c(), &Point::new(QS3::one(), QS3::sqrt3()));
        assert_eq!(
            k.vertex_b_prime(),
            &Point::new(qs3("-1/2"), qs3("sqrt3/2"))
        );
    }

    #[test]
    fn kite_side_lengths_and_area() {
        let k = laves_kite();
        assert_eq!(k.vertex_a().dist2(k.vertex_b()), QS3::one());
        assert_eq!(k.vertex_a().dist2(k.vertex_b_prime()), QS3::one());
        assert_eq!(k.vertex_b().dist2(k.vertex_c()), QS3::from_int(3));
        assert_eq!(k.vertex_b_prime().dist2(k.vertex_c()), QS3::from_int(3));
        assert_eq!(k.polygon().shoelace_area().abs(), QS3::sqrt3());
    }

    #[test]
    fn kite_angles() {
        let ks: Vec<u8> = interior_angles(laves_kite().polygon())
            .unwrap()
            .iter()
            .map(|a| a.k())
            .collect();
        assert_eq!(ks, vec![4, 3, 2, 3]);
    }

    #[test]
    fn first_hat_reflection() {
        let spec = AssemblySpec::new(vec![(0, 1)]).unwrap();
        let asm = assemble(&spec).unwrap();
        assert_eq!(asm.kite_count(), 2);
        // the mirrored kite contains the reflection of A across x=1
        let mirrored = &asm.kite_polygons()[1];
        assert!(mirrored.vertices().contains(&Point::from_ints(2, 0)));
    }

    #[test]
    fn empty_spec_is_the_seed_alone() {
        let asm = assemble(&AssemblySpec::empty()).unwrap();
        assert_eq!(asm.kite_count(), 1);
        assert_eq!(
            asm.boundary().unwrap().canonical_cycle().unwrap(),
            laves_kite().polygon().canonical_cycle().unwrap()
        );
    }

    #[test]
    fn reflecting_back_is_a_duplicate() {
        // step 2 reflects kite 1 across the same global line (x = 1)
        let spec = AssemblySpec::new(vec![(0, 1), (1, 1)]).unwrap();
        assert_eq!(assemble(&spec), Err(Error::DuplicateKite { step: 1 }));
    }

    #[test]
    fn bad_source_index_is_rejected() {
        let spec = AssemblySpec::new(vec![(3, 0)]).unwrap();
        assert_eq!(
            assemble(&spec),
            Err(Error::BadKiteIndex { step: 0, index: 3 })
        );
    }

    #[test]
    fn two_kite_boundary_is_a_hexagon_of_area_two_roots() {
        let asm = assemble(&AssemblySpec::new(vec![(0, 1)]).unwrap()).unwrap();
        let boundary = asm.boundary().unwrap();
        assert_eq!(boundary.num_vertices(), 6);
        assert_eq!(
            boundary.shoelace_area().abs(),
            &QS3::from_int(2) * &QS3::sqrt3()
        );
        assert!(boundary.is_simple());
    }

    #[test]
    fn assembly_area_counts_kites() {
        // a short chain of distinct reflections
        let spec = AssemblySpec::new(vec![(0, 1), (1, 2), (2, 1)]).unwrap();
        let asm = assemble(&spec).unwrap();
        assert_eq!(asm.area().unwrap(), &QS3::from_int(4) * &QS3::sqrt3());
    }

    #[test]
    fn boundary_ignores_step_order() {
        // two step orders producing the same placement set give the same
        // boundary cycle
        let a = assemble(&AssemblySpec::new(vec![(0, 1), (0, 2)]).unwrap()).unwrap();
        let b = assemble(&AssemblySpec::new(vec![(0, 2), (0, 1)]).unwrap()).unwrap();
        assert_eq!(
            a.boundary().unwrap().canonical_cycle().unwrap(),
            b.boundary().unwrap().canonical_cycle().unwrap()
        );
    }

    #[test]
    fn placement_matrices_stay_in_the_thirty_degree_world() {
        let spec = AssemblySpec::new(vec![(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let asm = assemble(&spec).unwrap();
        let allowed: Vec<QS3> = vec![
            QS3::zero(),
            QS3::from_ratio(1, 2),
            QS3::from_ratio(-1, 2),
            QS3::from_parts(0, 1, 2),
            QS3::from_parts(0, -1, 2),
            QS3::one(),
            -&QS3::one(),
        ];
        for p in asm.placements() {
            for entry in p.matrix() {
                assert!(allowed.contains(entry), "unexpected entry {entry}");
            }
        }
    }

    #[test]
    fn spec_file_roundtrip() {
        let text = "# the first Hat steps\n0 1\n1 2\n\n2 1 # inline note\n";
        let spec = AssemblySpec::parse(text).unwrap();
        assert_eq!(spec.steps(), &[(0, 1), (1, 2), (2, 1)]);
        let printed = spec.to_string();
        assert_eq!(AssemblySpec::parse(&printed).unwrap(), spec);
        assert!(AssemblySpec::parse("0 9").is_err());
        assert!(AssemblySpec::parse("0").is_err());
        assert!(AssemblySpec::parse("0 1 2").is_err());
    }

    #[test]
    fn unit_vector_sanity() {
        // all twelve directions are exact unit vectors
        for k in 0..12 {
            assert_eq!(unit_vector(k).norm2(), QS3::one());
        }
    }
}
