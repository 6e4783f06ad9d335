//! Fixture data compiled into the library: the sign table, the four
//! assembly specs, and the periodic patches, each regenerated and
//! cross-checked by the fixture tests.

use crate::error::Error;
use crate::kite::AssemblySpec;
use crate::tilefamily::{named_tile, SignTable, TileName};
use crate::tiling::{parse_periodic_fixture, PeriodicPatch};
use crate::Result;

pub const SIGN_TABLE_TEXT: &str = include_str!("../fixtures/sign_table.txt");
pub const HAT_SPEC_TEXT: &str = include_str!("../fixtures/hat.spec");
pub const TURTLE_SPEC_TEXT: &str = include_str!("../fixtures/turtle.spec");
pub const T01_SPEC_TEXT: &str = include_str!("../fixtures/t01.spec");
pub const T10_SPEC_TEXT: &str = include_str!("../fixtures/t10.spec");

/// The checked-in disambiguation table for the parametric construction.
pub fn sign_table() -> Result<SignTable> {
    SignTable::parse(SIGN_TABLE_TEXT)
}

pub fn assembly_spec_text(name: TileName) -> Option<&'static str> {
    match name {
        TileName::Hat => Some(HAT_SPEC_TEXT),
        TileName::Turtle => Some(TURTLE_SPEC_TEXT),
        TileName::T01 => Some(T01_SPEC_TEXT),
        TileName::T10 => Some(T10_SPEC_TEXT),
        TileName::T11 => None,
    }
}

/// The checked-in assembly spec for a named tile.
pub fn assembly_spec(name: TileName) -> Result<AssemblySpec> {
    let text = assembly_spec_text(name)
        .ok_or_else(|| Error::UnknownTile(format!("{name} has no assembly fixture")))?;
    AssemblySpec::parse(text)
}

/// Periodic patch fixtures. Tile(1,1) has none: the bounded edge-matching
/// search exhausts one- and two-tile units without finding a translation
/// lattice (see `fixtures/periodic_search_transcript.txt`).
pub fn periodic_fixture_text(name: TileName) -> Option<&'static str> {
    match name {
        TileName::T10 => Some(include_str!("../fixtures/t10_periodic.placements")),
        TileName::T01 => Some(include_str!("../fixtures/t01_periodic.placements")),
        _ => None,
    }
}

/// The checked-in periodic patch for a degenerate tile.
pub fn periodic_patch(name: TileName) -> Result<PeriodicPatch> {
    let text = periodic_fixture_text(name)
        .ok_or_else(|| Error::UnknownTile(format!("{name} has no periodic fixture")))?;
    parse_periodic_fixture(text, |id| {
        let parsed: TileName = id.parse()?;
        Ok(named_tile(parsed).normalized().clone())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_fixtures_parse() {
        assert!(sign_table().is_ok());
        for name in [TileName::Hat, TileName::Turtle, TileName::T01, TileName::T10] {
            let spec = assembly_spec(name).unwrap();
            assert_eq!(Some(spec.kite_count()), name.assembly_kite_count());
        }
        assert!(assembly_spec(TileName::T11).is_err());
    }
}
