//! Command-line front end: construction, verification, search and SVG
//! rendering. All geometry lives in the library; this binary only parses
//! flags, calls through, and formats results.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use monotile::fixtures;
use monotile::geom::{
    canonical_signature, interior_angles, similarity_between, SignatureMode, SimilarityCheck,
};
use monotile::kite::{assemble, laves_kite, search_assembly, AssemblySpec};
use monotile::laves::{dual, patch_3464, triangular_patch, Patch};
use monotile::numeric::parse_qs3;
use monotile::render::{animate, scene_to_svg, Scene, PALETTE};
use monotile::tilefamily::{
    build_tile, canonical_sign_table, derive_sign_table, named_tile, symbolic_closure_gap,
    verify_prop2, TileName, TileParam,
};
use monotile::tiling::{translational_closure, verify_patch, Placement};
use monotile::{Error, QS3};

#[derive(Parser)]
#[command(name = "monotile", version, about = "Exact constructions of the Hat/Turtle tile family")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build Tile(a, 1-a) from a parameter or a name
    Tile(TileArgs),
    /// Laves kite constructions, assemblies and the search oracle
    Kite {
        #[command(subcommand)]
        command: KiteCommand,
    },
    /// Tessellation patches and their Laves duals
    Laves(LavesArgs),
    /// Run the exact verification suites
    Verify(VerifyArgs),
    /// Emit SVG frames sweeping the tile parameter
    Anim(AnimArgs),
}

#[derive(Args)]
struct TileArgs {
    #[command(flatten)]
    which: WhichTile,
    /// Write the tile as SVG
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Print exact values and float approximations
    #[arg(long)]
    report: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct WhichTile {
    /// Exact parameter expression, e.g. "37/100" or "1/(1+sqrt3)"
    #[arg(long)]
    a: Option<String>,
    /// Named tile
    #[arg(long, value_enum)]
    name: Option<NameArg>,
}

#[derive(Subcommand)]
enum KiteCommand {
    /// Construct the canonical Laves kite
    Construct {
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run an assembly spec file ("-" reads stdin)
    Assemble {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Search reflection assemblies matching a named tile's shape
    Search {
        #[arg(long, value_enum)]
        target: NameArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1_000_000)]
        limit: usize,
    },
}

#[derive(Args)]
struct LavesArgs {
    #[arg(long, value_enum)]
    base: BaseArg,
    #[arg(long)]
    radius: u32,
    /// Compute the dual (Laves) tessellation as well
    #[arg(long)]
    dual: bool,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    all: bool,
    #[arg(long)]
    closure: bool,
    #[arg(long)]
    assemblies: bool,
    #[arg(long)]
    duals: bool,
    #[arg(long)]
    patches: bool,
}

#[derive(Args)]
struct AnimArgs {
    /// Start parameter (default 0.001)
    #[arg(long, default_value = "1/1000")]
    from: String,
    /// End parameter (default 0.999)
    #[arg(long, default_value = "999/1000")]
    to: String,
    #[arg(long, default_value_t = 20)]
    frames: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum NameArg {
    Hat,
    Turtle,
    T01,
    T11,
    T10,
}

impl From<NameArg> for TileName {
    fn from(n: NameArg) -> TileName {
        match n {
            NameArg::Hat => TileName::Hat,
            NameArg::Turtle => TileName::Turtle,
            NameArg::T01 => TileName::T01,
            NameArg::T11 => TileName::T11,
            NameArg::T10 => TileName::T10,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BaseArg {
    Tri,
    #[value(name = "3464")]
    C3464,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                // bad input rather than a failed computation
                Error::Parse { .. }
                | Error::UnknownTile(_)
                | Error::ParamOutOfRange
                | Error::RadiusOutOfRange
                | Error::InvalidRange => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Tile(args) => cmd_tile(args),
        Command::Kite { command } => match command {
            KiteCommand::Construct { svg } => cmd_kite_construct(svg),
            KiteCommand::Assemble { spec, svg } => cmd_kite_assemble(spec, svg),
            KiteCommand::Search { target, n, limit } => cmd_kite_search(target.into(), n, limit),
        },
        Command::Laves(args) => cmd_laves(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Anim(args) => cmd_anim(args),
    }
}

/// `key: exact (≈ float)` report line.
fn report_line(key: &str, value: &QS3) {
    println!("{key}: {value} (≈ {})", value.to_decimal(2));
}

fn cmd_tile(args: TileArgs) -> Result<ExitCode, Error> {
    let (label, a) = match (&args.which.a, args.which.name) {
        (Some(expr), None) => (expr.clone(), parse_qs3(expr)?),
        (None, Some(name)) => {
            let name: TileName = name.into();
            (name.to_string(), name.param())
        }
        _ => unreachable!("clap enforces exactly one of --a/--name"),
    };
    let tile = build_tile(TileParam::new(a.clone())?)?;
    println!("tile: {label}");
    if args.report {
        report_line("a", &a);
        report_line("b", &tile.param().b());
        println!("edges: 8 x a + 6 x (1-a) raw");
        report_line("area", &tile.normalized().shoelace_area());
        println!(
            "vertices: {} raw, {} normalized",
            tile.raw().num_vertices(),
            tile.normalized().num_vertices()
        );
        println!("simple: {}", tile.normalized().is_simple());
    }
    if let Some(path) = args.svg {
        let mut scene = Scene::new();
        scene.add(tile.normalized().clone(), Some(PALETTE[0]));
        std::fs::write(&path, scene_to_svg(&scene)?)?;
        println!("svg: {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_kite_construct(svg: Option<PathBuf>) -> Result<ExitCode, Error> {
    let kite = laves_kite();
    for (label, v) in [
        ("A", kite.vertex_a()),
        ("B", kite.vertex_b()),
        ("C", kite.vertex_c()),
        ("B'", kite.vertex_b_prime()),
    ] {
        println!("{label} = {v}");
    }
    report_line("area", &kite.polygon().shoelace_area().abs());
    if let Some(path) = svg {
        let mut scene = Scene::new();
        scene.add_item(monotile::render::SceneItem {
            polygon: kite.polygon().clone(),
            fill: Some(PALETTE[0].to_string()),
            stroke_width: 0.02,
            labeled: true,
        });
        std::fs::write(&path, scene_to_svg(&scene)?)?;
        println!("svg: {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_kite_assemble(spec_path: PathBuf, svg: Option<PathBuf>) -> Result<ExitCode, Error> {
    let text = if spec_path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else {
        std::fs::read_to_string(&spec_path)?
    };
    let spec = AssemblySpec::parse(&text)?;
    let asm = assemble(&spec)?;
    let boundary = asm.boundary()?;
    println!("kites: {}", asm.kite_count());
    report_line("area", &boundary.shoelace_area().abs());
    println!(
        "boundary: {} raw edges, {} normalized",
        boundary.num_vertices(),
        boundary.normalize()?.num_vertices()
    );
    let sig = canonical_signature(&boundary.normalize()?, SignatureMode::Similarity)?;
    for name in [TileName::Hat, TileName::Turtle, TileName::T01, TileName::T11, TileName::T10] {
        let tile = named_tile(name);
        let tsig = canonical_signature(tile.normalized(), SignatureMode::Similarity)?;
        if sig == tsig {
            println!("matches: {name}");
        }
    }
    if let Some(path) = svg {
        let mut scene = Scene::new();
        for (i, kite) in asm.kite_polygons().into_iter().enumerate() {
            scene.add(kite, Some(PALETTE[i % PALETTE.len()]));
        }
        scene.add(boundary, None);
        std::fs::write(&path, scene_to_svg(&scene)?)?;
        println!("svg: {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_kite_search(target: TileName, n: usize, limit: usize) -> Result<ExitCode, Error> {
    let tile = named_tile(target);
    let sig = canonical_signature(tile.normalized(), SignatureMode::Similarity)?;
    let specs = search_assembly(&sig, n, limit)?;
    if specs.is_empty() {
        println!("# no assemblies of {n} kites match {target}");
        return Ok(ExitCode::SUCCESS);
    }
    for (i, spec) in specs.iter().enumerate() {
        println!("# spec {} of {} ({} kites)", i + 1, specs.len(), spec.kite_count());
        print!("{spec}");
    }
    Ok(ExitCode::SUCCESS)
}

fn build_patch(base: BaseArg, radius: u32) -> Result<Patch, Error> {
    match base {
        BaseArg::Tri => triangular_patch(radius),
        BaseArg::C3464 => patch_3464(radius),
    }
}

fn cmd_laves(args: LavesArgs) -> Result<ExitCode, Error> {
    let patch = build_patch(args.base, args.radius)?;
    println!("faces: {}", patch.faces().len());
    println!("adjacent pairs: {}", patch.adjacency().len());
    println!("interior vertices: {}", patch.interior_vertices().count());
    let dual_patch = if args.dual {
        let d = dual(&patch)?;
        println!("dual faces: {}", d.faces().len());
        Some(d)
    } else {
        None
    };
    if let Some(path) = args.svg {
        let mut scene = Scene::new();
        for f in patch.faces() {
            scene.add(f.clone(), None);
        }
        if let Some(d) = &dual_patch {
            for (i, f) in d.faces().iter().enumerate() {
                scene.add(f.clone(), Some(PALETTE[i % PALETTE.len()]));
            }
        }
        std::fs::write(&path, scene_to_svg(&scene)?)?;
        println!("svg: {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_anim(args: AnimArgs) -> Result<ExitCode, Error> {
    let from = parse_qs3(&args.from)?;
    let to = parse_qs3(&args.to)?;
    let files = animate(&from, &to, args.frames, &args.out)?;
    for f in &files {
        println!("{}", f.display());
    }
    Ok(ExitCode::SUCCESS)
}

/// Tracks named checks and prints one line per outcome.
struct Checks {
    failures: usize,
}

impl Checks {
    fn new() -> Checks {
        Checks { failures: 0 }
    }

    fn check(&mut self, name: &str, ok: bool) {
        if ok {
            println!("ok   {name}");
        } else {
            println!("FAIL {name}");
            self.failures += 1;
        }
    }

    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<bool, Error>) {
        match f() {
            Ok(ok) => self.check(name, ok),
            Err(e) => {
                println!("FAIL {name}: {e}");
                self.failures += 1;
            }
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let all = args.all || !(args.closure || args.assemblies || args.duals || args.patches);
    let mut checks = Checks::new();
    if all || args.closure {
        verify_closure(&mut checks);
    }
    if all || args.assemblies {
        verify_assemblies(&mut checks);
    }
    if all || args.duals {
        verify_duals(&mut checks);
    }
    if all || args.patches {
        verify_patches(&mut checks);
    }
    if checks.failures == 0 {
        println!("all checks passed");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{} check(s) failed", checks.failures);
        Ok(ExitCode::from(1))
    }
}

fn verify_closure(checks: &mut Checks) {
    checks.run("sign table matches fixture", || {
        let derived = derive_sign_table()?;
        Ok(derived.len() == 1 && derived[0] == fixtures::sign_table()?)
    });
    checks.run("closure gap vanishes symbolically", || {
        let gap = symbolic_closure_gap(canonical_sign_table());
        Ok(gap.iter().all(|c| c.is_zero()))
    });
    checks.run("closure and edge multiset at key parameters", || {
        for expr in ["1/3", "1/2", "37/100", "(sqrt3-1)/2", "(3-sqrt3)/2"] {
            let a = parse_qs3(expr)?;
            let tile = build_tile(TileParam::new(a.clone())?)?;
            let verts = tile.raw().vertices();
            if verts[13].dist2(&verts[0]) != &a * &a {
                return Ok(false);
            }
        }
        Ok(true)
    });
    checks.run("simple across the 97-value parameter grid", || {
        for k in 1..98 {
            let tile = build_tile(TileParam::new(QS3::from_ratio(k, 98))?)?;
            if !tile.raw().is_simple() {
                return Ok(false);
            }
        }
        Ok(true)
    });
    checks.run("scaling similarity (three scales on the hat)", || {
        let hat = named_tile(TileName::Hat);
        for expr in ["1/2", "2", "1+sqrt3"] {
            if !verify_prop2(&hat, &parse_qs3(expr)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
}

fn expected_assembly_scale(name: TileName) -> Option<QS3> {
    match name {
        TileName::Hat | TileName::Turtle => Some(parse_qs3("1+sqrt3").unwrap()),
        TileName::T01 | TileName::T10 => Some(parse_qs3("2*sqrt3").unwrap()),
        TileName::T11 => None,
    }
}

fn verify_assemblies(checks: &mut Checks) {
    for name in [TileName::Hat, TileName::Turtle, TileName::T01, TileName::T10] {
        checks.run(&format!("assembly fixture {name}"), || {
            let spec = fixtures::assembly_spec(name)?;
            let asm = assemble(&spec)?;
            let expected = name.assembly_kite_count().unwrap();
            if asm.kite_count() != expected {
                return Ok(false);
            }
            let boundary = asm.boundary()?;
            let area_ok = boundary.shoelace_area().abs()
                == &QS3::from_int(expected as i64) * &QS3::sqrt3();
            let tile = named_tile(name);
            let witness = similarity_between(tile.normalized(), &boundary.normalize()?)?;
            let scale_ok = match witness {
                SimilarityCheck::Exact(w) => Some(w.scale) == expected_assembly_scale(name),
                _ => false,
            };
            Ok(area_ok && scale_ok)
        });
    }
}

fn verify_duals(checks: &mut Checks) {
    checks.run("dual of the triangle patch is regular hexagons", || {
        let d = dual(&triangular_patch(3)?)?;
        let third = QS3::from_ratio(1, 3);
        Ok(d.faces().iter().all(|f| {
            f.num_vertices() == 6
                && f.edge_lengths2().iter().all(|l| *l == third)
                && interior_angles(f)
                    .map(|a| a.iter().all(|c| c.degrees() == 120))
                    .unwrap_or(false)
        }))
    });
    checks.run("dual of (3.4.6.4) is Laves kites", || {
        let d = dual(&patch_3464(2)?)?;
        let kite = laves_kite();
        let scale = parse_qs3("(3+sqrt3)/6")?;
        for f in d.faces() {
            match similarity_between(kite.polygon(), f)? {
                SimilarityCheck::Exact(w) if w.scale == scale => {}
                _ => return Ok(false),
            }
        }
        Ok(true)
    });
}

fn verify_patches(checks: &mut Checks) {
    for name in [TileName::T10, TileName::T01] {
        checks.run(&format!("periodic patch fixture {name}"), || {
            let patch = fixtures::periodic_patch(name)?;
            let report = verify_patch(&patch.placements)?;
            if !report.pass() || report.interior_vertices_checked == 0 {
                return Ok(false);
            }
            translational_closure(&patch.placements, &patch.lattice.0, &patch.lattice.1)
        });
    }
    checks.run("overlapped mutation is rejected", || {
        let patch = fixtures::periodic_patch(TileName::T10)?;
        let mut placements: Vec<Placement> = patch.placements.clone();
        let nudge = monotile::geom::Isometry::translation(monotile::geom::Vec2::new(
            QS3::from_ratio(1, 5),
            QS3::zero(),
        ));
        let moved = nudge.compose(&placements[0].map);
        placements[0] = Placement::new(placements[0].tile.clone(), moved);
        Ok(!verify_patch(&placements)?.pass())
    });
}
