//! End-to-end runs of the binary: flags, exit codes, file outputs.

use std::process::Command;

fn monotile() -> Command {
    Command::new(env!("CARGO_BIN_EXE_monotile"))
}

#[test]
fn tile_report_prints_exact_and_float() {
    let out = monotile()
        .args(["tile", "--name", "hat", "--report"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("a: -1/2 + 1/2*sqrt3 (≈ 0.37)"), "{text}");
    assert!(text.contains("area: -12 + 8*sqrt3"), "{text}");
    assert!(text.contains("8 x a + 6 x (1-a)"), "{text}");
}

#[test]
fn tile_accepts_exact_parameter_expressions() {
    let out = monotile()
        .args(["tile", "--a", "1/(1+sqrt3)", "--report"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("(≈ 0.37)"), "{text}");
}

#[test]
fn bad_expression_is_a_usage_error() {
    let out = monotile().args(["tile", "--a", "1 + $"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("parse error"), "{err}");
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = monotile().args(["tile", "--frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kite_assemble_reads_spec_files_and_stdin() {
    use std::io::Write;
    let dir = tempfile::tempdir().unwrap();
    let spec_path = dir.path().join("two.spec");
    std::fs::write(&spec_path, "0 1\n").unwrap();
    let out = monotile()
        .args(["kite", "assemble", "--spec"])
        .arg(&spec_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("kites: 2"), "{text}");

    let mut child = monotile()
        .args(["kite", "assemble", "--spec", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"# comment\n0 1\n0 2\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("kites: 3"), "{text}");
}

#[test]
fn assembling_fixture_reports_matching_tile() {
    let fixture = format!(
        "{}/../core/fixtures/hat.spec",
        env!("CARGO_MANIFEST_DIR")
    );
    let out = monotile()
        .args(["kite", "assemble", "--spec", &fixture])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("kites: 8"), "{text}");
    assert!(text.contains("matches: hat"), "{text}");
}

#[test]
fn search_limit_failure_is_exit_one() {
    let out = monotile()
        .args(["kite", "search", "--target", "hat", "--n", "8", "--limit", "10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("limit"), "{err}");
}

#[test]
fn search_roundtrips_through_assemble() {
    // a 2-kite search target: its unique-ish results pipe back into
    // assemble and reproduce the shape
    let out = monotile()
        .args(["kite", "search", "--target", "t01", "--n", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("no assemblies"), "{text}");
}

#[test]
fn laves_dual_counts() {
    let out = monotile()
        .args(["laves", "--base", "tri", "--radius", "2", "--dual"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("dual faces:"), "{text}");
}

#[test]
fn anim_writes_frames() {
    let dir = tempfile::tempdir().unwrap();
    let out = monotile()
        .args(["anim", "--frames", "3", "--out"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("frame_000.svg").exists());
    assert!(dir.path().join("frame_002.svg").exists());
}

#[test]
fn verify_all_passes_on_a_clean_checkout() {
    let out = monotile().args(["verify", "--all"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success(), "{text}");
    assert!(text.contains("all checks passed"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn cli_is_a_thin_adapter_over_the_library() {
    // the binary's SVG for a named tile is byte-identical to calling the
    // library directly with the same inputs
    use monotile::render::{scene_to_svg, Scene, PALETTE};
    use monotile::tilefamily::{named_tile, TileName};
    let mut scene = Scene::new();
    scene.add(named_tile(TileName::Turtle).normalized().clone(), Some(PALETTE[0]));
    let direct = scene_to_svg(&scene).unwrap();

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("turtle.svg");
    let out = monotile()
        .args(["tile", "--name", "turtle", "--svg"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(std::fs::read(&path).unwrap(), direct);
}

#[test]
fn tile_requires_a_parameter_or_a_name() {
    let out = monotile().args(["tile"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn svg_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.svg");
    let p2 = dir.path().join("b.svg");
    for p in [&p1, &p2] {
        let out = monotile()
            .args(["tile", "--name", "turtle", "--svg"])
            .arg(p)
            .output()
            .unwrap();
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
}
