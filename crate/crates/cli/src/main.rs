//! `hyperk`: classify, construct and check curves in the upper half-plane.
//!
//! Exit codes: 0 success, 1 a verification or expectation failed, 2 parse or
//! usage error, 3 degenerate input or result, 4 output not writable.

mod input;
mod render;
mod svg;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hyperk::constructions::{
    classify_family_limit, disj_family, dyadic_family, fixed_endpoint_family, four_geodesic_config,
    hyp1_witness, normalizer_from_images, pinch_pair, ray_sweep_family, sigma_center_swap,
    witness_search, ContinuousFamily, DEFAULT_GRID,
};
use hyperk::earthquake::{
    pointwise_image_is_curve, tangency_realizability, EarthquakeMap, Realizability,
    RealizabilityInstance, Side,
};
use hyperk::graphs::{automorphisms, build_graph_with, isometry_realizing};
use hyperk::model::number::fmt_rational;
use hyperk::predicates::{hypercycle_pair_type, intersection_pattern};
use hyperk::suites::{run_suites, Scale, SuiteOptions, SUITES};
use hyperk::{
    classify_circle, equidistant_pair, equidistant_pair_exact, Classification, Curve, CurveKind,
    GeneralizedCircle, UhpPoint,
};

use input::Numbers;

#[derive(Debug)]
pub enum Failure {
    Check(String),
    Usage(String),
    Degenerate(String),
    Unwritable(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Degenerate(_) => 3,
            Failure::Unwritable(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Check(m)
            | Failure::Usage(m)
            | Failure::Degenerate(m)
            | Failure::Unwritable(m) => m,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Parser)]
#[command(
    name = "hyperk",
    version,
    about = "Exact curves of the hyperbolic upper half-plane"
)]
struct Cli {
    /// Output style: human-readable text or one JSON record per line.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Accept decimal literals, rounding them to nearby rationals.
    #[arg(long, global = true)]
    inexact: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CurveInput {
    /// Coefficients `a,b,c,d` of a(x²+y²) + bx + cy + d = 0.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// Geodesic endpoints `p,q` (`inf` allowed).
    #[arg(long, allow_hyphen_values = true)]
    geodesic: Option<String>,
    /// Horocycle `center,size`.
    #[arg(long, allow_hyphen_values = true)]
    horocycle: Option<String>,
    /// Hypercycle `p,q,x,y`: endpoints and a point it passes through.
    #[arg(long, allow_hyphen_values = true)]
    hypercycle: Option<String>,
    /// Curve in text form or `kind:args`; repeatable.
    #[arg(long = "curve", allow_hyphen_values = true)]
    curves: Vec<String>,
    /// File with one curve per line.
    #[arg(long)]
    file: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a generalized circle and print its canonical form.
    Classify {
        #[command(flatten)]
        input: CurveInput,
        /// Fail with exit code 1 unless the kind matches.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Build one of the library's gadgets.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Intersection pattern of two curves.
    Intersect {
        #[arg(long = "curve", allow_hyphen_values = true)]
        curves: Vec<String>,
        #[arg(long)]
        file: Option<String>,
    },
    /// Disjointness graph, automorphisms and realizing isometries.
    Graph {
        #[arg(long = "curve", allow_hyphen_values = true)]
        curves: Vec<String>,
        #[arg(long)]
        file: Option<String>,
        /// Allow curves of different kinds.
        #[arg(long)]
        mixed: bool,
        /// Stop after this many automorphisms.
        #[arg(long, default_value_t = 1000)]
        cap: usize,
    },
    /// Simple earthquake along one fault.
    Earthquake {
        /// Fault endpoints `from,to`; the shear acts toward `to`.
        #[arg(long, allow_hyphen_values = true)]
        fault: String,
        #[arg(long, allow_hyphen_values = true)]
        shear: String,
        #[arg(long, default_value = "left")]
        side: String,
        #[command(subcommand)]
        action: Quake,
    },
    /// Continuous curve families and their limits.
    Family {
        /// Number of Chebyshev grid points.
        #[arg(long, global = true)]
        grid: Option<usize>,
        #[command(subcommand)]
        which: Family,
    },
    /// Run a property suite.
    Verify {
        /// Suite name, or `all`.
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// small, medium or full.
        #[arg(long, default_value = "full")]
        scale: String,
        /// Deepest dyadic level.
        #[arg(long, default_value_t = 6)]
        depth: u32,
    },
    /// Write an SVG drawing.
    Render {
        #[arg(long)]
        out: String,
        /// Real-axis window `xmin,xmax`.
        #[arg(long, allow_hyphen_values = true, default_value = "-3,3")]
        window: String,
        #[arg(long, default_value = "3")]
        height: String,
        #[command(subcommand)]
        scene: Scene,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Tangent chain at dyadic level `k`.
    Dyadic {
        #[arg(long)]
        level: u32,
        /// Index range `n_min,n_max`.
        #[arg(long, allow_hyphen_values = true)]
        range: String,
    },
    /// Horocycles tangent to two disjoint horocycles.
    Pinch {
        #[arg(long, allow_hyphen_values = true)]
        h0: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
    },
    /// Hypercycle through `x` and `y` avoiding `h2`.
    Witness {
        #[arg(long, allow_hyphen_values = true)]
        h1: String,
        #[arg(long, allow_hyphen_values = true)]
        h2: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// The two hypercycles at distance `d` from a geodesic.
    Crescent {
        #[arg(long, allow_hyphen_values = true)]
        geodesic: String,
        /// Distance (real).
        #[arg(long)]
        distance: Option<String>,
        /// Exact route: `sinh d` as a rational.
        #[arg(long)]
        sinh: Option<String>,
    },
    /// Four geodesics on cyclically ordered points `x1,x2,y1,y2`.
    Config {
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// Isometry returning a tangent horocycle pair to the standard one.
    Normalizer {
        #[arg(long, allow_hyphen_values = true)]
        h0: String,
        #[arg(long, allow_hyphen_values = true)]
        hinf: String,
    },
    /// Center swap applied to horocycles.
    Sigma {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long = "curve", allow_hyphen_values = true)]
        curves: Vec<String>,
        #[arg(long)]
        file: Option<String>,
    },
}

#[derive(Subcommand)]
enum Quake {
    /// Images of interior points `x,y` and boundary points.
    Apply {
        #[arg(long = "point", allow_hyphen_values = true)]
        points: Vec<String>,
        #[arg(long = "boundary", allow_hyphen_values = true)]
        boundary: Vec<String>,
    },
    /// Whether the pointwise image of a curve is one curve.
    Image {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long, default_value_t = 12)]
        samples: usize,
    },
    /// Whether horocycles with relabeled centers can keep their pattern.
    Certify {
        #[arg(long = "curve", allow_hyphen_values = true)]
        curves: Vec<String>,
        #[arg(long)]
        file: Option<String>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Family between a horocycle and a disjoint hypercycle.
    Disj {
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long, allow_hyphen_values = true)]
        hprime: String,
    },
    /// Rays from 0 sweeping toward the axis.
    RaySweep,
    /// Circles through ±1 tilting to angle `theta`.
    FixedEndpoint {
        #[arg(long, default_value = "0.39269908169872414")]
        theta: String,
    },
}

#[derive(Subcommand)]
enum Scene {
    /// Dyadic tangent chain, with the line y = 1.
    Dyadic {
        #[arg(long, default_value_t = 0)]
        level: u32,
        #[arg(long, allow_hyphen_values = true, default_value = "-2,2")]
        range: String,
    },
    /// Before and after panels of the doubling earthquake on four horocycles.
    Earthquake,
    /// Arbitrary curves.
    Curves {
        #[arg(long = "curve", allow_hyphen_values = true)]
        curves: Vec<String>,
        #[arg(long)]
        file: Option<String>,
    },
    /// Axis only.
    Empty,
}

struct Out {
    format: Format,
    text: String,
}

impl Out {
    fn line(&mut self, s: impl AsRef<str>) {
        if self.format == Format::Text {
            self.text.push_str(s.as_ref());
            self.text.push('\n');
        }
    }

    fn record(&mut self, v: Value) {
        if self.format == Format::Records {
            let _ = writeln!(self.text, "{v}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out {
        format: cli.format,
        text: String::new(),
    };
    if cli.inexact {
        out.line(
            "# inexact input: decimals were rounded to rationals; results are not exact guarantees",
        );
        out.record(json!({"inexact": true}));
    }
    let nums = Numbers {
        inexact: cli.inexact,
    };
    let result = run(cli.command, nums, &mut out);
    print!("{}", out.text);
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cmd: Command, nums: Numbers, out: &mut Out) -> Result<(), Failure> {
    match cmd {
        Command::Classify { input, expect } => classify(&input, expect.as_deref(), nums, out),
        Command::Construct { what } => construct(what, nums, out),
        Command::Intersect { curves, file } => {
            intersect(&nums.curves(&curves, file.as_deref())?, out)
        }
        Command::Graph {
            curves,
            file,
            mixed,
            cap,
        } => graph(&nums.curves(&curves, file.as_deref())?, mixed, cap, out),
        Command::Earthquake {
            fault,
            shear,
            side,
            action,
        } => {
            let p = nums.boundaries(&fault, 2)?;
            let side = Side::parse(&side)?;
            let e = EarthquakeMap::new(&p[0], &p[1], nums.rational(&shear)?, side)?;
            earthquake(&e, action, nums, out)
        }
        Command::Family { grid, which } => family(which, grid, nums, out),
        Command::Verify {
            suite,
            seed,
            scale,
            depth,
        } => verify(&suite, seed, &scale, depth, out),
        Command::Render {
            out: path,
            window,
            height,
            scene,
        } => {
            let w = nums.list(&window, 2)?;
            let view = svg::View {
                xmin: hyperk::model::number::to_f64(&w[0]),
                xmax: hyperk::model::number::to_f64(&w[1]),
                height: nums.real(&height)?,
            };
            if !(view.xmin < view.xmax && view.height > 0.0) {
                return Err(Failure::Usage(format!("empty view {window} × {height}")));
            }
            let text = render::scene(scene, &view, nums)?;
            std::fs::write(&path, text)
                .map_err(|e| Failure::Unwritable(format!("cannot write {path}: {e}")))?;
            out.line(format!("wrote {path}"));
            out.record(json!({"written": path}));
            Ok(())
        }
    }
}

fn curve_json(c: &Curve) -> Value {
    let r = c.to_record();
    json!({
        "kind": c.kind().name(),
        "a": r.a, "b": r.b, "c": r.c, "d": r.d,
        "endpoints": c.endpoints().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "center": c.center().map(|p| p.to_string()),
        "size": c.size().map(fmt_rational),
    })
}

fn describe(c: &Curve) -> String {
    let ends: Vec<String> = c.endpoints().iter().map(|p| p.to_string()).collect();
    match c.kind() {
        CurveKind::Horocycle => {
            format!(
                "Horocycle center {} radius {}",
                c.center().unwrap(),
                fmt_rational(c.size().unwrap())
            )
        }
        CurveKind::Geodesic => format!("Geodesic endpoints {}", ends.join(" ")),
        CurveKind::Hypercycle => format!("Hypercycle endpoints {}", ends.join(" ")),
    }
}

fn canonical(c: &Curve) -> String {
    let [a, b, cc, d] = c.circle().int_coeffs();
    format!("canonical ({a},{b},{cc},{d})")
}

fn classify(
    input: &CurveInput,
    expect: Option<&str>,
    nums: Numbers,
    out: &mut Out,
) -> Result<(), Failure> {
    let mut curves: Vec<Curve> = Vec::new();
    if let Some(s) = &input.coeffs {
        let v = nums.list(s, 4)?;
        let circle =
            match GeneralizedCircle::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()) {
                Ok(c) => c,
                Err(e) => return Err(Failure::Degenerate(e.to_string())),
            };
        match classify_circle(&circle) {
            Classification::Curve(_) => curves.push(Curve::from_circle(circle)?),
            other => return Err(Failure::Degenerate(format!("{circle}: {other:?}"))),
        }
    }
    for (tag, v) in [
        ("geodesic", &input.geodesic),
        ("horocycle", &input.horocycle),
        ("hypercycle", &input.hypercycle),
    ] {
        if let Some(s) = v {
            curves.push(nums.curve(&format!("{tag}:{s}"))?);
        }
    }
    curves.extend(nums.curves(&input.curves, input.file.as_deref())?);
    if curves.is_empty() {
        return Err(Failure::Usage("no curve given".into()));
    }
    let want = expect.map(CurveKind::parse).transpose()?;
    for c in &curves {
        out.line(describe(c));
        out.line(canonical(c));
        out.record(curve_json(c));
    }
    if let Some(k) = want {
        if let Some(c) = curves.iter().find(|c| c.kind() != k) {
            return Err(Failure::Check(format!(
                "{c} is a {}, expected {k}",
                c.kind()
            )));
        }
    }
    Ok(())
}

fn intersect(curves: &[Curve], out: &mut Out) -> Result<(), Failure> {
    if curves.len() != 2 {
        return Err(Failure::Usage(format!(
            "intersect needs two curves, got {}",
            curves.len()
        )));
    }
    let (a, b) = (&curves[0], &curves[1]);
    let p = intersection_pattern(a, b);
    let ty = if a.kind() != CurveKind::Horocycle && b.kind() != CurveKind::Horocycle {
        hypercycle_pair_type(a, b).ok()
    } else {
        None
    };
    out.line(format!(
        "{} interior={} tangent={} shared-endpoints={}",
        p.label(),
        p.interior_count,
        p.tangent,
        p.shared_endpoints
    ));
    for z in p.interior_points() {
        out.line(format!("point {z}"));
    }
    if let Some(t) = ty {
        out.line(format!("pair type {t}"));
    }
    out.record(serde_json::to_value(p.to_record(ty)).unwrap());
    Ok(())
}

fn graph(curves: &[Curve], mixed: bool, cap: usize, out: &mut Out) -> Result<(), Failure> {
    let g = build_graph_with(curves, mixed)?;
    out.line(g.to_text().trim_end());
    out.record(serde_json::to_value(g.to_record()).unwrap());
    let auts = automorphisms(&g, cap)?;
    out.line(format!("automorphisms {}", auts.len()));
    for a in &auts {
        let iso = isometry_realizing(&g, a)?;
        let shown = iso
            .as_ref()
            .map(|i| i.to_string())
            .unwrap_or_else(|| "none".into());
        out.line(format!("{a} isometry {shown}"));
        out.record(json!({"automorphism": a.perm, "isometry": iso.map(|i| i.to_string())}));
    }
    Ok(())
}

fn construct(what: Construct, nums: Numbers, out: &mut Out) -> Result<(), Failure> {
    match what {
        Construct::Dyadic { level, range } => {
            let r = input::split(&range, 2)?;
            let parse = |s: &str| {
                s.parse::<i64>()
                    .map_err(|_| Failure::Usage(format!("not an integer: {s:?}")))
            };
            let f = dyadic_family(level, parse(&r[0])?, parse(&r[1])?)?;
            for h in &f.horocycles {
                out.line(h.to_text());
                out.record(curve_json(h));
            }
            for (i, z) in f.tangency_points.iter().enumerate() {
                out.line(format!("z {} {z}", f.range.0 + i as i64));
                out.record(json!({"tangency": i as i64 + f.range.0, "point": z.to_string()}));
            }
        }
        Construct::Pinch { h0, h } => {
            let (a, b) = (nums.curve(&h0)?, nums.curve(&h)?);
            for p in pinch_pair(&a, &b)? {
                out.line(p.to_string());
                out.record(json!({"center": p.center.to_string(), "size": p.size.to_string()}));
            }
        }
        Construct::Witness { h1, h2, x, y } => {
            let (a, b) = (nums.curve(&h1)?, nums.curve(&h2)?);
            let (px, py) = (nums.point(&x)?, nums.point(&y)?);
            let t = hypercycle_pair_type(&a, &b)?;
            out.line(format!("pair type {t}"));
            let found = if t == hyperk::predicates::HypercyclePairType::Type1 {
                let w = hyp1_witness(
                    &a,
                    &b,
                    &UhpPoint::exact(px.0, px.1)?,
                    &UhpPoint::exact(py.0, py.1)?,
                )?;
                Some(w.curve)
            } else {
                witness_search(&a, &b, &px, &py)?
            };
            match &found {
                Some(w) => out.line(format!("witness {w}")),
                None => out.line("witness none"),
            }
            out.record(json!({"type": t.name(), "witness": found.map(|w| w.to_text())}));
        }
        Construct::Crescent {
            geodesic,
            distance,
            sinh,
        } => {
            let g = nums.curve(&format!("geodesic:{geodesic}"))?;
            match (distance, sinh) {
                (Some(d), None) => {
                    let c = equidistant_pair(&g, nums.real(&d)?)?;
                    for (name, h) in [("first", &c.first), ("second", &c.second)] {
                        let [a, b, cc, dd] = h.normalized(1e-12).coeffs();
                        out.line(format!("{name} a={a:.12} b={b:.12} c={cc:.12} d={dd:.12}"));
                        out.record(json!({"side": name, "coeffs": [a, b, cc, dd]}));
                    }
                }
                (None, Some(s)) => {
                    let c = equidistant_pair_exact(&g, &nums.rational(&s)?)?;
                    for (name, h) in [("first", &c.first), ("second", &c.second)] {
                        out.line(format!("{name} {h}"));
                        out.record(json!({"side": name, "curve": curve_json(h)}));
                    }
                }
                _ => {
                    return Err(Failure::Usage(
                        "give exactly one of --distance and --sinh".into(),
                    ))
                }
            }
        }
        Construct::Config { points } => {
            let p = nums.boundaries(&points, 4)?;
            let r = four_geodesic_config(&p[0], &p[1], &p[2], &p[3])?.verify();
            out.line(format!(
                "incidences {} meets-h {} crosses-both {} arc-classes {} vertex-classes {}",
                r.incidences, r.meets_h, r.crosses_both, r.arc_classes, r.vertex_classes
            ));
            out.record(serde_json::to_value(&r).unwrap());
            if !r.holds() {
                return Err(Failure::Check(format!(
                    "configuration fails: {:?}",
                    r.failures
                )));
            }
        }
        Construct::Normalizer { h0, hinf } => {
            let j = normalizer_from_images(&nums.curve(&h0)?, &nums.curve(&hinf)?)?;
            out.line(j.to_string());
            out.record(json!({"isometry": j.to_string()}));
        }
        Construct::Sigma { p, q, curves, file } => {
            let sw = sigma_center_swap(&nums.boundary(&p)?, &nums.boundary(&q)?)?;
            let hs = nums.curves(&curves, file.as_deref())?;
            let images: Vec<Curve> = hs.iter().map(|h| sw.apply(h)).collect::<Result<_, _>>()?;
            for (h, im) in hs.iter().zip(&images) {
                out.line(format!("{h} -> {im}"));
            }
            let v = sw.tangency_violation(&hs)?;
            let iso = hyperk::graphs::realizing_isometry(&hs, &images)?;
            out.line(format!(
                "tangency violation {}",
                v.map(|(i, j)| format!("{i} {j}")).unwrap_or("none".into())
            ));
            out.line(format!(
                "realizing isometry {}",
                iso.as_ref().map(|i| i.to_string()).unwrap_or("none".into())
            ));
            out.record(json!({
                "images": images.iter().map(Curve::to_text).collect::<Vec<_>>(),
                "tangency_violation": v,
                "isometry": iso.map(|i| i.to_string()),
            }));
        }
    }
    Ok(())
}

fn earthquake(
    e: &EarthquakeMap,
    action: Quake,
    nums: Numbers,
    out: &mut Out,
) -> Result<(), Failure> {
    out.line(e.to_string());
    match action {
        Quake::Apply { points, boundary } => {
            for s in &points {
                let (x, y) = nums.point(s)?;
                if y <= hyperk::qi(0) {
                    return Err(Failure::Usage(format!(
                        "{s} is not in the upper half-plane"
                    )));
                }
                let (u, v) = e.apply_exact(&x, &y);
                out.line(format!(
                    "({}, {}) -> ({}, {})",
                    fmt_rational(&x),
                    fmt_rational(&y),
                    fmt_rational(&u),
                    fmt_rational(&v)
                ));
                out.record(json!({"point": [fmt_rational(&x), fmt_rational(&y)], "image": [fmt_rational(&u), fmt_rational(&v)]}));
            }
            for s in &boundary {
                let b = nums.boundary(s)?;
                let im = e.apply_boundary(&b);
                out.line(format!("{b} -> {im}"));
                out.record(json!({"boundary": b.to_string(), "image": im.to_string()}));
            }
        }
        Quake::Image { curve, samples } => {
            let c = nums.curve(&curve)?;
            let r = pointwise_image_is_curve(e, &c, samples)?;
            out.line(format!("image of {c} is one curve: {}", r.is_curve));
            if let (Some(w), Some(d)) = (&r.witness, &r.determinant) {
                let pts: Vec<String> = w
                    .iter()
                    .map(|p| format!("({}, {})", fmt_rational(&p.0), fmt_rational(&p.1)))
                    .collect();
                out.line(format!("witness {} det {}", pts.join(" "), fmt_rational(d)));
            }
            out.record(json!({
                "is_curve": r.is_curve,
                "witness": r.witness.map(|w| w.iter().map(|p| [fmt_rational(&p.0), fmt_rational(&p.1)]).collect::<Vec<_>>()),
                "determinant": r.determinant.map(|d| fmt_rational(&d)),
            }));
        }
        Quake::Certify { curves, file } => {
            let hs = nums.curves(&curves, file.as_deref())?;
            let inst = RealizabilityInstance::from_horocycles(&hs, |c| e.apply_boundary(c))?;
            match tangency_realizability(&inst)? {
                Realizability::Satisfiable(r) => {
                    let radii: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                    out.line(format!("satisfiable radii {}", radii.join(" ")));
                    out.record(json!({"satisfiable": true, "radii": radii}));
                }
                Realizability::Unsatisfiable(c) => {
                    out.line(format!("unsatisfiable {c}"));
                    out.record(json!({"satisfiable": false, "cycle": c.cycle, "contradiction": c.contradiction}));
                }
            }
        }
    }
    Ok(())
}

fn family(which: Family, grid: Option<usize>, nums: Numbers, out: &mut Out) -> Result<(), Failure> {
    let mut fam: ContinuousFamily = match which {
        Family::Disj { h, hprime } => disj_family(&nums.curve(&h)?, &nums.curve(&hprime)?)?,
        Family::RaySweep => ray_sweep_family(),
        Family::FixedEndpoint { theta } => {
            // an angle is a real parameter; decimals are accepted here
            let t: f64 = match nums.real(&theta) {
                Ok(v) => v,
                Err(_) => theta
                    .parse()
                    .map_err(|_| Failure::Usage(format!("not an angle: {theta:?}")))?,
            };
            fixed_endpoint_family(t)?
        }
    };
    let n = grid.unwrap_or(DEFAULT_GRID);
    if n < 8 {
        return Err(Failure::Usage(format!("grid {n} is below 8")));
    }
    fam = fam.with_grid(n);
    let probes = fam.probes.clone();
    let limit = classify_family_limit(&fam, &probes)?;
    out.line(format!(
        "family {} grid {}",
        fam.name,
        fam.sample_grid.len()
    ));
    if fam.reparametrized {
        out.line("reparametrized");
    }
    out.line(format!("limit {limit}"));
    let mut rec = serde_json::to_value(fam.to_record()).unwrap();
    rec["limit"] = json!(limit.to_string());
    out.record(rec);
    Ok(())
}

fn verify(suite: &str, seed: u64, scale: &str, depth: u32, out: &mut Out) -> Result<(), Failure> {
    if suite != "all" && !SUITES.contains(&suite) {
        return Err(Failure::Usage(format!(
            "unknown suite `{suite}`; choose one of {} or all",
            SUITES.join(", ")
        )));
    }
    let seed = match std::env::var("HYPERK_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("HYPERK_SEED={s:?} is not an integer")))?,
        Err(_) => seed,
    };
    let opts = SuiteOptions {
        seed,
        scale: Scale::parse(scale)?,
        depth,
    };
    out.line(format!("verify {suite} seed {seed} scale {scale}"));
    let reports = run_suites(suite, &opts)?;
    let mut failed = 0;
    let mut total = 0;
    for r in &reports {
        out.line(r.to_string().trim_end());
        for p in &r.properties {
            total += 1;
            if !p.passed() {
                failed += 1;
            }
            out.record(json!({
                "suite": r.suite, "property": p.property, "passed": p.passed(),
                "cases": p.cases, "counterexample": p.counterexample, "notes": p.notes,
            }));
        }
    }
    out.line(format!("{total} properties, {failed} failed"));
    if failed > 0 {
        return Err(Failure::Check(format!("{failed} properties failed")));
    }
    Ok(())
}
