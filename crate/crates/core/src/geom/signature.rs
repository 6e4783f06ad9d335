//! Scale-aware canonical forms for congruence and similarity testing.

use crate::error::Error;
use crate::numeric::QS3;
use crate::Result;

use super::{turn_class, AngleClass, Isometry, Point, Polygon, Vec2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SignatureMode {
    Congruence,
    Similarity,
}

/// Canonical boundary signature: the lexicographically minimal sequence of
/// (squared edge length, interior angle class) over both traversal
/// directions and all cyclic rotations. In similarity mode each candidate
/// sequence is divided by its own leading squared length, making the
/// signature scale-free. Two polygons are congruent (resp. similar) iff
/// their signatures are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    mode: SignatureMode,
    items: Vec<(QS3, u8)>,
}

impl Signature {
    pub fn mode(&self) -> SignatureMode {
        self.mode
    }

    pub fn items(&self) -> &[(QS3, u8)] {
        &self.items
    }
}

/// Interior angle classes of a normalized (CCW, no straight angles)
/// polygon, indexed by vertex. Errors if any angle is not a multiple
/// of 30°.
pub fn interior_angles(poly: &Polygon) -> Result<Vec<AngleClass>> {
    let n = poly.num_vertices();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let u = poly.edge_vec((i + n - 1) % n);
        let w = poly.edge_vec(i);
        let t = turn_class(&u, &w)?.ok_or(Error::UnclassifiableAngle)?;
        let k = 6 - t; // CCW interior angle = 180° - turn
        if !(1..=11).contains(&k) {
            return Err(Error::UnclassifiableAngle);
        }
        out.push(AngleClass::new(k as u8).unwrap());
    }
    Ok(out)
}

fn edge_items(poly: &Polygon) -> Result<Vec<(QS3, u8)>> {
    let n = poly.num_vertices();
    let angles = interior_angles(poly)?;
    let mut items = Vec::with_capacity(n);
    for i in 0..n {
        // angle at the end vertex of edge i
        items.push((poly.edge_vec(i).norm2(), angles[(i + 1) % n].k()));
    }
    Ok(items)
}

fn min_rotation(items: &[(QS3, u8)], mode: SignatureMode) -> Vec<(QS3, u8)> {
    let n = items.len();
    let mut best: Option<Vec<(QS3, u8)>> = None;
    for start in 0..n {
        let mut cand: Vec<(QS3, u8)> = (0..n)
            .map(|i| items[(start + i) % n].clone())
            .collect();
        if mode == SignatureMode::Similarity {
            let lead = cand[0].0.clone();
            for item in &mut cand {
                item.0 = item.0.checked_div(&lead).expect("zero-length edge");
            }
        }
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.unwrap()
}

/// Canonical signature of a normalized simple polygon whose interior
/// angles all classify as multiples of 30°.
pub fn canonical_signature(poly: &Polygon, mode: SignatureMode) -> Result<Signature> {
    let fwd = min_rotation(&edge_items(poly)?, mode);
    let mirrored = poly.mirror_x().normalize()?;
    let rev = min_rotation(&edge_items(&mirrored)?, mode);
    Ok(Signature {
        mode,
        items: fwd.min(rev),
    })
}

/// Exact similarity witness: `q = map(scale · p)` vertex for vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimilarityWitness {
    pub scale: QS3,
    pub map: Isometry,
    pub reflected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimilarityCheck {
    /// Similar with an exact in-field witness.
    Exact(SimilarityWitness),
    /// Signatures match but the scale factor has no square root in Q[√3],
    /// so no exact witness exists inside the field.
    SimilarNoWitness,
    NotSimilar,
}

impl SimilarityCheck {
    pub fn witness(&self) -> Option<&SimilarityWitness> {
        match self {
            SimilarityCheck::Exact(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_similar(&self) -> bool {
        !matches!(self, SimilarityCheck::NotSimilar)
    }
}

/// Decide similarity of two normalized simple polygons and produce an exact
/// witness when one exists in the field.
///
/// The scale is recovered from the area ratio (`k²` under scaling by `k`);
/// the aligning isometry is found by matching edges, which requires the
/// relative rotation to be a multiple of 30° — always true for boundaries
/// built by this crate.
pub fn similarity_between(p: &Polygon, q: &Polygon) -> Result<SimilarityCheck> {
    let sig_p = canonical_signature(p, SignatureMode::Similarity)?;
    let sig_q = canonical_signature(q, SignatureMode::Similarity)?;
    if sig_p != sig_q {
        return Ok(SimilarityCheck::NotSimilar);
    }
    let ratio2 = q.shoelace_area().checked_div(&p.shoelace_area())?;
    let Some(scale) = ratio2.sqrt()? else {
        return Ok(SimilarityCheck::SimilarNoWitness);
    };
    let scaled = p.scaled(&scale);
    let n = q.num_vertices();
    for mirrored in [false, true] {
        // reversing the mirrored copy restores CCW traversal, so both vertex
        // cycles can be matched with same-direction indexing
        let base = if mirrored {
            scaled.mirror_x().reversed()
        } else {
            scaled.clone()
        };
        if base.num_vertices() != n {
            continue;
        }
        let q_e0 = q.edge_vec(0);
        for offset in 0..n {
            let u = base.edge_vec(offset);
            if u.norm2() != q_e0.norm2() {
                continue;
            }
            let Some(class) = super::angle_class(&u, &q_e0)? else {
                continue;
            };
            let rot = Isometry::rotation_about(&Point::origin(), class.k() as i32);
            let anchor = rot.apply(&base.vertices()[offset]);
            let shift = &q.vertices()[0] - &anchor;
            let align = Isometry::translation(shift).compose(&rot);
            let ok =
                (0..n).all(|i| align.apply(&base.vertices()[(offset + i) % n]) == q.vertices()[i]);
            if ok {
                // fold the pre-mirror into the returned map
                let map = if mirrored {
                    let flip = Isometry::new(
                        QS3::one(),
                        QS3::zero(),
                        QS3::zero(),
                        -&QS3::one(),
                        Vec2::zero(),
                    )
                    .unwrap();
                    align.compose(&flip)
                } else {
                    align
                };
                return Ok(SimilarityCheck::Exact(SimilarityWitness {
                    scale,
                    map,
                    reflected: mirrored,
                }));
            }
        }
    }
    Ok(SimilarityCheck::SimilarNoWitness)
}
