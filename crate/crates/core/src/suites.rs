//! Seeded property suites over the whole library.
//!
//! Each suite runs a list of properties on random or designed inputs and
//! stops a property at its first counterexample. Suites draw from their own
//! stream, derived from the seed and the suite name, so running one suite
//! alone or inside `all` gives the same cases.

use std::fmt;
use std::time::Instant;

use num_traits::{One, Signed, Zero};

use crate::constructions::{
    classify_family_limit, disj_family, dyadic, dyadic_family, fixed_endpoint_default,
    four_geodesic_config, hyp1_witness, normalizer_from_images, pinch_pair, ray_sweep_family,
    sigma_center_swap, witness_search, FamilyLimit,
};
use crate::earthquake::{
    eq_geodesic_image, image_is_curve_under, pointwise_image_is_curve, tangency_realizability,
    EarthquakeMap, Realizability, RealizabilityInstance, Side,
};
use crate::error::{Error, Result};
use crate::graphs::{
    automorphisms, build_graph, build_graph_with, isometry_preserves_graph, isometry_realizing,
    link_preserving_check, realizing_isometry, GraphAutomorphism,
};
use crate::model::isometry::two_point_normalizer;
use crate::model::number::{q, qi};
use crate::model::{
    classify_circle, distance_to_geodesic, equidistant_pair, make_geodesic, make_horocycle,
    BoundaryPoint, Classification, Curve, CurveKind, GeneralizedCircle, Isometry, Orientation,
    Rational, UhpPoint,
};
use crate::predicates::{
    between_tangent, horocycle_leq, hypercycle_pair_type, intersection_pattern, linked, HoroOrder,
};
use crate::random::Sampler;

pub const SUITES: [&str; 12] = [
    "order",
    "boundary-extension",
    "dyadic",
    "pinch",
    "types",
    "betweenness",
    "crescent",
    "four-geodesics",
    "links",
    "families",
    "earthquake",
    "graphs",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Small,
    Medium,
    Full,
}

impl Scale {
    pub fn parse(s: &str) -> Result<Scale> {
        match s {
            "small" => Ok(Scale::Small),
            "medium" => Ok(Scale::Medium),
            "full" => Ok(Scale::Full),
            _ => Err(Error::Parse(format!(
                "unknown scale `{s}` (small, medium, full)"
            ))),
        }
    }

    /// Case count for a property whose full size is `n`.
    pub fn count(self, n: usize) -> usize {
        let div = match self {
            Scale::Small => 10,
            Scale::Medium => 3,
            Scale::Full => 1,
        };
        (n / div).max(1)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub scale: Scale,
    /// Deepest dyadic level checked by the `dyadic` and `pinch` suites.
    pub depth: u32,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            scale: Scale::Full,
            depth: 6,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PropertyResult {
    pub property: String,
    pub cases: usize,
    pub counterexample: Option<String>,
    /// Extra lines printed under the result.
    pub notes: Vec<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub properties: Vec<PropertyResult>,
    pub seconds: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            let tag = if p.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "[{tag}] {}/{} ({} cases)",
                self.suite, p.property, p.cases
            )?;
            for n in &p.notes {
                writeln!(f, "       {n}")?;
            }
            if let Some(c) = &p.counterexample {
                writeln!(f, "       counterexample: {c}")?;
            }
        }
        Ok(())
    }
}

type Case<'a> = Box<dyn FnMut(usize) -> std::result::Result<(), String> + 'a>;

/// Runs `f` on case indices `0..cases`, stopping at the first failure.
fn check(property: &str, cases: usize, mut f: Case<'_>) -> PropertyResult {
    let mut counterexample = None;
    let mut done = 0;
    for i in 0..cases {
        done += 1;
        if let Err(e) = f(i) {
            counterexample = Some(format!("case {i}: {e}"));
            break;
        }
    }
    PropertyResult {
        property: property.to_string(),
        cases: done,
        counterexample,
        notes: Vec::new(),
    }
}

fn single(property: &str, outcome: std::result::Result<Vec<String>, String>) -> PropertyResult {
    match outcome {
        Ok(notes) => PropertyResult {
            property: property.to_string(),
            cases: 1,
            counterexample: None,
            notes,
        },
        Err(e) => PropertyResult {
            property: property.to_string(),
            cases: 1,
            counterexample: Some(e),
            notes: Vec::new(),
        },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s(e: Error) -> String {
    e.to_string()
}

fn suite_seed(seed: u64, name: &str) -> u64 {
    name.bytes().fold(seed ^ 0x9e37_79b9_7f4a_7c15, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Runs one named suite.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut s = Sampler::new(suite_seed(opts.seed, name));
    let sc = opts.scale;
    let start = Instant::now();
    let properties = match name {
        "order" => order(&mut s, sc),
        "boundary-extension" => boundary_extension(&mut s, sc),
        "dyadic" => vec![dyadic_chain(opts.depth)],
        "pinch" => pinch(&mut s, sc, opts.depth.max(8)),
        "types" => types(&mut s, sc),
        "betweenness" => vec![betweenness(&mut s, sc)],
        "crescent" => vec![crescent(&mut s, sc)],
        "four-geodesics" => vec![four_geodesics(&mut s, sc)],
        "links" => links(&mut s, sc),
        "families" => families(&mut s, sc),
        "earthquake" => earthquake(&mut s, sc),
        "graphs" => graphs(&mut s, sc),
        _ => return Err(Error::InvalidInput(format!("unknown suite `{name}`"))),
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        properties,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Runs every suite, or the named one; `all` expands to [`SUITES`].
pub fn run_suites(name: &str, opts: &SuiteOptions) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        SUITES.iter().map(|n| run_suite(n, opts)).collect()
    } else {
        run_suite(name, opts).map(|r| vec![r])
    }
}

fn fin(x: Rational) -> BoundaryPoint {
    BoundaryPoint::Finite(x)
}

/// The horocycles of the earthquake example: `h(−1,1), h(1,1), h(0,1/4), h(∞,2)`.
pub fn quake_example_horocycles() -> Vec<Curve> {
    vec![
        make_horocycle(&fin(qi(-1)), &qi(1)).unwrap(),
        make_horocycle(&fin(qi(1)), &qi(1)).unwrap(),
        make_horocycle(&fin(qi(0)), &q(1, 4)).unwrap(),
        make_horocycle(&BoundaryPoint::Infinity, &qi(2)).unwrap(),
    ]
}

/// The earthquake along the imaginary axis doubling the left half-plane:
/// its boundary map is `x ↦ 2x` for `x < 0`.
pub fn doubling_quake() -> EarthquakeMap {
    EarthquakeMap::new(&fin(qi(0)), &BoundaryPoint::Infinity, qi(2), Side::Left).unwrap()
}

fn pattern_key(a: &Curve, b: &Curve) -> (bool, u8, bool, u8) {
    let p = intersection_pattern(a, b);
    (p.equal, p.interior_count, p.tangent, p.shared_endpoints)
}

// ---------------------------------------------------------------- order

fn order(s: &mut Sampler, sc: Scale) -> Vec<PropertyResult> {
    let nesting = check(
        "nesting-by-probes",
        sc.count(1000),
        Box::new(|_| {
            let g = s.isometry();
            let (s1, s2) = (s.positive(6, 6), s.positive(6, 6));
            let line = |h: &Rational| make_horocycle(&BoundaryPoint::Infinity, h).unwrap();
            let (h1, h2) = (g.apply_curve(&line(&s1)), g.apply_curve(&line(&s2)));
            let (lo, hi) = if s1 < s2 {
                (s1.clone(), s2.clone())
            } else {
                (s2.clone(), s1.clone())
            };
            let leq = matches!(
                horocycle_leq(&h1, &h2).map_err(e2s)?,
                HoroOrder::LessOrEqual | HoroOrder::Equal
            );
            let mut all_meet = true;
            for _ in 0..100 {
                // probe diameters spread over (0, 2·hi), denser between the two heights
                let u = q(s.int(1, 31), 16);
                let diameter = if s.coin(0.5) {
                    &lo + (&hi - &lo) * &u / qi(2)
                } else {
                    &hi * &u
                };
                let probe = make_horocycle(&fin(s.rational(12, 4)), &(diameter / qi(2))).unwrap();
                let probe = g.apply_curve(&probe);
                let m1 = intersection_pattern(&probe, &h1).interior_count > 0;
                let m2 = intersection_pattern(&probe, &h2).interior_count > 0;
                if m1 && !m2 {
                    all_meet = false;
                }
            }
            ensure(leq == all_meet, || {
                format!("{h1} ≤ {h2} is {leq} but probes say {all_meet}")
            })
        }),
    );
    let sigma = check(
        "center-swap-keeps-order",
        sc.count(1000),
        Box::new(|_| {
            let p = s.rational(12, 4);
            let mut qq = s.rational(12, 4);
            if qq == p {
                qq += qi(1);
            }
            let sw = sigma_center_swap(&fin(p.clone()), &fin(qq)).map_err(e2s)?;
            let c = if s.coin(0.5) { fin(p) } else { s.boundary(0.1) };
            let h1 = make_horocycle(&c, &s.positive(6, 6)).unwrap();
            let h2 = make_horocycle(&c, &s.positive(6, 6)).unwrap();
            let before = horocycle_leq(&h1, &h2).map_err(e2s)?;
            let after = horocycle_leq(&sw.apply(&h1).map_err(e2s)?, &sw.apply(&h2).map_err(e2s)?)
                .map_err(e2s)?;
            ensure(before == after, || {
                format!("{h1}, {h2}: {before:?} became {after:?}")
            })
        }),
    );
    vec![nesting, sigma]
}

// ---------------------------------------------------- boundary-extension

fn random_circle(s: &mut Sampler) -> GeneralizedCircle {
    loop {
        let v: Vec<Rational> = (0..4).map(|_| s.rational(9, 5)).collect();
        if let Ok(c) =
            GeneralizedCircle::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())
        {
            return c;
        }
    }
}

fn boundary_extension(s: &mut Sampler, sc: Scale) -> Vec<PropertyResult> {
    let mut out = Vec::new();
    out.push(check(
        "constructor-round-trip",
        sc.count(1000),
        Box::new(|_| {
            let kind = *s.pick(&[
                CurveKind::Geodesic,
                CurveKind::Horocycle,
                CurveKind::Hypercycle,
            ]);
            let c = s.curve_of(kind);
            let got = classify_circle(c.circle());
            ensure(got == Classification::Curve(kind), || {
                format!("{c} built as {kind} classifies as {got:?}")
            })
        }),
    ));
    out.push(check(
        "group-action",
        sc.count(1000),
        Box::new(|_| {
            let (g, h, c) = (s.isometry(), s.isometry(), s.curve());
            ensure(Isometry::identity().apply_curve(&c) == c, || {
                format!("identity moves {c}")
            })?;
            let lhs = g.compose(&h).apply_curve(&c);
            let rhs = g.apply_curve(&h.apply_curve(&c));
            ensure(lhs == rhs, || format!("{g} ∘ {h} on {c}: {lhs} vs {rhs}"))
        }),
    ));
    out.push(check(
        "kind-preservation",
        sc.count(1000),
        Box::new(|_| {
            let (g, c) = (s.isometry(), s.curve());
            let im = g.apply_curve(&c);
            ensure(im.kind() == c.kind(), || format!("{g} sends {c} to {im}"))
        }),
    ));
    out.push(check(
        "normalizer-orientation",
        sc.count(1000),
        Box::new(|_| {
            let p = s.distinct_boundary(2, 0.2);
            let n = two_point_normalizer(&p[0], &p[1]).map_err(e2s)?;
            ensure(n.apply_boundary(&p[0]) == BoundaryPoint::Infinity, || {
                format!("{} is not sent to ∞", p[0])
            })?;
            ensure(n.apply_boundary(&p[1]) == fin(qi(0)), || {
                format!("{} is not sent to 0", p[1])
            })?;
            let (x, y) = s.point();
            let (_, v) = n.apply_exact(&x, &y);
            ensure(v.is_positive(), || {
                format!(
                    "normalizer of {}, {} sends ({x}, {y}) below the axis",
                    p[0], p[1]
                )
            })
        }),
    ));
    out.push(check(
        "canonical-idempotence",
        sc.count(1000),
        Box::new(|_| {
            let c = random_circle(s);
            let once = c.normalized();
            ensure(once.normalized() == once, || {
                format!("{once:?} is not stable")
            })
        }),
    ));
    out.push(check(
        "normalizer-from-images",
        sc.count(1000),
        Box::new(|_| {
            let h0 = make_horocycle(&fin(qi(0)), &q(1, 2)).unwrap();
            let hinf = make_horocycle(&BoundaryPoint::Infinity, &qi(1)).unwrap();
            let g = s.isometry();
            let (a, b) = (g.apply_curve(&h0), g.apply_curve(&hinf));
            let j = normalizer_from_images(&a, &b).map_err(e2s)?;
            ensure(j.apply_curve(&a) == h0 && j.apply_curve(&b) == hinf, || {
                format!("{j} on ({a}, {b})")
            })
        }),
    ));
    out
}

// ---------------------------------------------------------------- dyadic

fn dyadic_chain(depth: u32) -> PropertyResult {
    let mut cases = 0;
    let mut notes = Vec::new();
    for k in 0..=depth {
        let n = 1i64 << k;
        let fam = match dyadic_family(k, -n, n) {
            Ok(f) => f,
            Err(e) => {
                return PropertyResult {
                    property: "chain-tangency-points".into(),
                    cases,
                    counterexample: Some(e.to_string()),
                    notes,
                }
            }
        };
        for (i, z) in fam.tangency_points.iter().enumerate() {
            let m = -n + i as i64;
            let expected = UhpPoint::Exact {
                x: (dyadic(m, k) + dyadic(m + 1, k)) / qi(2),
                y: dyadic(1, k + 1),
            };
            cases += 1;
            if *z != expected {
                return PropertyResult {
                    property: "chain-tangency-points".into(),
                    cases,
                    counterexample: Some(format!("z_{m}^{k} = {z}, expected {expected}")),
                    notes,
                };
            }
        }
        notes.push(format!(
            "k={k}: {} points z_n^{k} for n in [{}, {}]",
            fam.tangency_points.len(),
            -n,
            n - 1
        ));
    }
    PropertyResult {
        property: "chain-tangency-points".into(),
        cases,
        counterexample: None,
        notes,
    }
}

// ----------------------------------------------------------------- pinch

fn pinch(s: &mut Sampler, sc: Scale, depth: u32) -> Vec<PropertyResult> {
    let density = check(
        "pinching-density",
        sc.count(100),
        Box::new(|_| {
            let x = s.rational(12, 7);
            let half = q(1, 2);
            let meets = |h: &Curve, c: &Rational| {
                let other = make_horocycle(&fin(c.clone()), &half).unwrap();
                intersection_pattern(h, &other).interior_count > 0
            };
            let h = make_horocycle(&fin(x.clone()), &half).unwrap();
            let r = &half + q(1, s.int(1, 100));
            let big = make_horocycle(&fin(x.clone()), &r).unwrap();
            let mut found = None;
            for k in 0..=depth {
                let step = dyadic(1, k);
                // dyadics of level k in (x + 1, x + 2] and [x − 2, x − 1)
                let first = (&x + qi(1)) / &step;
                let start = first.floor().to_integer() + 1;
                for m in 0..(2i64 << k) {
                    for c in [
                        Rational::from_integer(&start + m) * &step,
                        -Rational::from_integer(&start + m) * &step + &x * qi(2),
                    ] {
                        if meets(&h, &c) {
                            return Err(format!("h({x}, 1/2) meets h({c}, 1/2)"));
                        }
                        if found.is_none() && meets(&big, &c) {
                            found = Some(k);
                        }
                    }
                }
                if found.is_some() {
                    break;
                }
            }
            ensure(found.is_some(), || {
                format!("h({x}, {r}) meets no member up to level {depth}")
            })
        }),
    );
    let tangency = check(
        "pinch-pair-tangency",
        sc.count(300),
        Box::new(|_| {
            let (h0, h) = loop {
                let (a, b) = (s.horocycle(), s.horocycle());
                if a.center() != b.center() && intersection_pattern(&a, &b).is_disjoint() {
                    break (a, b);
                }
            };
            let out = pinch_pair(&h0, &h).map_err(e2s)?;
            ensure(!out.is_empty(), || {
                format!("no pinching horocycle for {h0}, {h}")
            })?;
            for p in &out {
                ensure(p.is_tangent_to(&h0) && p.is_tangent_to(&h), || {
                    format!("{p} is not tangent to {h0} and {h}")
                })?;
            }
            Ok(())
        }),
    );
    vec![density, tangency]
}

// ----------------------------------------------------------------- types

fn types(s: &mut Sampler, sc: Scale) -> Vec<PropertyResult> {
    let invariance = check(
        "isometry-invariance",
        sc.count(10_000),
        Box::new(|i| {
            let (a, b) = match i % 4 {
                0 => {
                    let p = s.type1_pair();
                    (p.h1, p.h2)
                }
                1 => {
                    let p = if s.coin(0.5) {
                        s.type2_pair()
                    } else {
                        s.type3_pair()
                    };
                    (p.h1, p.h2)
                }
                _ => (s.curve(), s.curve()),
            };
            let g = s.isometry();
            let (ga, gb) = (g.apply_curve(&a), g.apply_curve(&b));
            let (before, after) = (pattern_key(&a, &b), pattern_key(&ga, &gb));
            ensure(before == after, || {
                format!("{a}, {b} under {g}: {before:?} became {after:?}")
            })?;
            if a.kind() != CurveKind::Horocycle && b.kind() != CurveKind::Horocycle {
                let t1 = hypercycle_pair_type(&a, &b).ok();
                let t2 = hypercycle_pair_type(&ga, &gb).ok();
                ensure(t1 == t2, || {
                    format!("{a}, {b} under {g}: type {t1:?} became {t2:?}")
                })?;
            }
            Ok(())
        }),
    );
    let type1 = check(
        "type1-witness",
        sc.count(100),
        Box::new(|_| {
            let p = s.type1_pair();
            let x = UhpPoint::Exact {
                x: p.x.0.clone(),
                y: p.x.1.clone(),
            };
            let y = UhpPoint::Exact {
                x: p.y.0.clone(),
                y: p.y.1.clone(),
            };
            let w = hyp1_witness(&p.h1, &p.h2, &x, &y).map_err(e2s)?;
            ensure(intersection_pattern(&w.curve, &p.h2).is_disjoint(), || {
                format!("{} meets {}", w.curve, p.h2)
            })?;
            for z in [&p.x, &p.y] {
                ensure(w.curve.circle().eval(&z.0, &z.1).is_zero(), || {
                    format!("{} misses ({}, {})", w.curve, z.0, z.1)
                })?;
            }
            Ok(())
        }),
    );
    let crossing = check(
        "type2-type3-no-witness",
        sc.count(200),
        Box::new(|i| {
            let p = if i % 2 == 0 {
                s.type2_pair()
            } else {
                s.type3_pair()
            };
            let found = witness_search(&p.h1, &p.h2, &p.x, &p.y).map_err(e2s)?;
            ensure(found.is_none(), || {
                format!("{} is a witness for {}, {}", found.unwrap(), p.h1, p.h2)
            })
        }),
    );
    vec![invariance, type1, crossing]
}

// ----------------------------------------------------------- betweenness

/// `x² + y² + c y − 1 − c = 0`, or the line `y = 1` for `None`; all pass
/// through `i` with a horizontal tangent, ordered there by `c`.
fn tangent_at_i(c: &Option<Rational>) -> Curve {
    match c {
        Some(c) => Curve::from_coeffs(qi(1), qi(0), c.clone(), -(qi(1) + c)).unwrap(),
        None => Curve::from_coeffs(qi(0), qi(0), qi(1), qi(-1)).unwrap(),
    }
}

fn betweenness(s: &mut Sampler, sc: Scale) -> PropertyResult {
    check(
        "invariance-under-isometries",
        sc.count(1000),
        Box::new(|_| {
            let mut cs: Vec<Option<Rational>> = Vec::new();
            while cs.len() < 3 {
                let c = if s.coin(0.15) {
                    None
                } else {
                    Some(s.rational(12, 4))
                };
                if matches!(&c, Some(v) if *v < qi(-1)) || cs.contains(&c) {
                    continue;
                }
                cs.push(c);
            }
            // None is the largest
            let key =
                |c: &Option<Rational>| c.clone().map(|v| (0, v)).unwrap_or((1, Rational::zero()));
            let mut order = [0usize, 1, 2];
            order.sort_by_key(|&i| key(&cs[i]));
            let expected = order[1];
            let curves: Vec<Curve> = cs.iter().map(tangent_at_i).collect();
            let got = between_tangent(&curves[0], &curves[1], &curves[2]).map_err(e2s)?;
            ensure(got == expected, || {
                format!(
                    "middle of {}, {}, {} is {got}, expected {expected}",
                    curves[0], curves[1], curves[2]
                )
            })?;
            let g = s.isometry();
            let m: Vec<Curve> = curves.iter().map(|c| g.apply_curve(c)).collect();
            let moved = between_tangent(&m[0], &m[1], &m[2]).map_err(e2s)?;
            ensure(moved == expected, || {
                format!("{g} changes the middle curve from {expected} to {moved}")
            })
        }),
    )
}

// -------------------------------------------------------------- crescent

fn crescent(s: &mut Sampler, sc: Scale) -> PropertyResult {
    check(
        "equidistant-distance",
        sc.count(100),
        Box::new(|_| {
            let g = s.geodesic();
            let d = 0.05 + 2.95 * s.unit();
            let cr = equidistant_pair(&g, d).map_err(e2s)?;
            for side in [&cr.first, &cr.second] {
                let pts = side.sample(100);
                ensure(pts.len() == 100, || {
                    format!("only {} samples on the crescent of {g}", pts.len())
                })?;
                for (x, y) in pts {
                    let z = UhpPoint::approx(x, y).map_err(e2s)?;
                    let dist = distance_to_geodesic(&z, &g).map_err(e2s)?;
                    ensure((dist - d).abs() < 1e-9, || {
                        format!("{g}, d = {d}: ({x}, {y}) is at {dist}")
                    })?;
                }
            }
            Ok(())
        }),
    )
}

// -------------------------------------------------------- four-geodesics

fn four_geodesics(s: &mut Sampler, sc: Scale) -> PropertyResult {
    check(
        "three-properties",
        sc.count(1000),
        Box::new(|_| {
            let [a, b, c, d] = s.quadruple();
            let cfg = four_geodesic_config(&a, &b, &c, &d).map_err(e2s)?;
            let r = cfg.verify();
            ensure(r.holds() && r.arc_classes == 10, || {
                format!("({a}, {b}, {c}, {d}): {r:?}")
            })
        }),
    )
}

// ----------------------------------------------------------------- links

fn random_earthquake(s: &mut Sampler) -> EarthquakeMap {
    let p = s.distinct_boundary(2, 0.2);
    let mut shear = s.positive(6, 4);
    if shear.is_one() {
        shear = q(3, 2);
    }
    let side = if s.coin(0.5) { Side::Left } else { Side::Right };
    EarthquakeMap::new(&p[0], &p[1], shear, side).unwrap()
}

fn links(s: &mut Sampler, sc: Scale) -> Vec<PropertyResult> {
    let crossing = check(
        "linked-iff-crossing",
        sc.count(1000),
        Box::new(|_| {
            let p = s.quadruple();
            for (i, j, k, l) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
                let l1 = linked([&p[i], &p[j]], [&p[k], &p[l]]).map_err(e2s)?;
                let g1 = make_geodesic(&p[i], &p[j]).unwrap();
                let g2 = make_geodesic(&p[k], &p[l]).unwrap();
                let cross = intersection_pattern(&g1, &g2).interior_count == 1;
                ensure(l1 == cross, || {
                    format!("{g1}, {g2}: linked {l1}, crossing {cross}")
                })?;
            }
            Ok(())
        }),
    );
    let boundary = check(
        "earthquake-boundary-links",
        sc.count(10_000),
        Box::new(|_| {
            let e = random_earthquake(s);
            let pts = s.distinct_boundary(4, 0.1);
            let images: Vec<BoundaryPoint> = pts.iter().map(|p| e.apply_boundary(p)).collect();
            let r = link_preserving_check(&pts, &images).map_err(e2s)?;
            ensure(r.preserved, || format!("{e} on {pts:?}: {:?}", r.witness))
        }),
    );
    let geodesics = check(
        "earthquake-geodesic-crossings",
        sc.count(1000),
        Box::new(|_| {
            let e = random_earthquake(s);
            let (g1, g2) = (s.geodesic(), s.geodesic());
            if g1 == g2 {
                return Ok(());
            }
            let (i1, i2) = (
                eq_geodesic_image(&e, &g1).map_err(e2s)?,
                eq_geodesic_image(&e, &g2).map_err(e2s)?,
            );
            let before = intersection_pattern(&g1, &g2).interior_count;
            let after = intersection_pattern(&i1, &i2).interior_count;
            ensure(before == after, || {
                format!("{e}: {g1}, {g2} meet {before} times, images {after}")
            })
        }),
    );
    let cubes = single("cube-map-example", {
        let pts: Vec<BoundaryPoint> = (-3i64..=3).map(|x| fin(qi(x))).collect();
        let cubes: Vec<BoundaryPoint> = (-3i64..=3).map(|x| fin(qi(x * x * x))).collect();
        match link_preserving_check(&pts, &cubes) {
            Ok(r) if r.preserved => Ok(vec!["x ↦ x³ preserves links on -3..3".into()]),
            Ok(r) => Err(format!("x ↦ x³ breaks {:?}", r.witness)),
            Err(e) => Err(e.to_string()),
        }
    });
    vec![crossing, boundary, geodesics, cubes]
}

// -------------------------------------------------------------- families

fn families(s: &mut Sampler, sc: Scale) -> Vec<PropertyResult> {
    let disj = check(
        "disj-family",
        sc.count(100),
        Box::new(|_| {
            let (h, hp) = s.disjoint_horo_hyper();
            let fam = disj_family(&h, &hp).map_err(e2s)?;
            if let Some((i, j)) = fam.grid_intersection() {
                return Err(format!(
                    "members {i} and {j} of the family of {h}, {hp} meet"
                ));
            }
            if let Some(i) = fam.betweenness_violation() {
                return Err(format!(
                    "member {i} of the family of {h}, {hp} is out of order"
                ));
            }
            let lim = classify_family_limit(&fam, &fam.probes).map_err(e2s)?;
            let declared = fam.declared_limit.clone().unwrap();
            ensure(lim.agrees_with(&declared, 1e-6), || {
                format!("{h}, {hp}: limit {lim}, expected {declared}")
            })
        }),
    );
    let ray = single("ray-sweep-foliates", {
        let fam = ray_sweep_family();
        match classify_family_limit(&fam, &fam.probes) {
            Ok(FamilyLimit::FoliatesComponent) => Ok(vec![]),
            Ok(l) => Err(format!("ray sweep classified as {l}")),
            Err(e) => Err(e.to_string()),
        }
    });
    let fixed = single("fixed-endpoint-hypercycle", {
        let fam = fixed_endpoint_default();
        match classify_family_limit(&fam, &fam.probes) {
            Ok(l @ FamilyLimit::HypercycleOrGeodesicLimit(_)) => Ok(vec![l.to_string()]),
            Ok(l) => Err(format!("fixed-endpoint family classified as {l}")),
            Err(e) => Err(e.to_string()),
        }
    });
    vec![disj, ray, fixed]
}

// ------------------------------------------------------------ earthquake

fn earthquake(s: &mut Sampler, sc: Scale) -> Vec<PropertyResult> {
    let certificate = single("doubling-certificate", {
        let hs = quake_example_horocycles();
        let e = doubling_quake();
        let id = RealizabilityInstance::from_horocycles(&hs, |c| c.clone())
            .and_then(|i| tangency_realizability(&i));
        let moved = RealizabilityInstance::from_horocycles(&hs, |c| e.apply_boundary(c))
            .and_then(|i| tangency_realizability(&i));
        match (id, moved) {
            (Ok(Realizability::Satisfiable(r)), Ok(Realizability::Unsatisfiable(cert))) => {
                let radii: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                let mut notes = vec![
                    format!(
                        "identity relabeling: satisfiable, radii {}",
                        radii.join(", ")
                    ),
                    format!("relabeling by {e}: unsatisfiable"),
                ];
                notes.extend(cert.cycle.iter().map(|c| format!("  {c}")));
                notes.push(format!("  contradiction: {}", cert.contradiction));
                Ok(notes)
            }
            (a, b) => Err(format!("identity: {a:?}; earthquake: {b:?}")),
        }
    });
    let crossing = check(
        "crossing-horocycles-break",
        sc.count(1000),
        Box::new(|_| {
            let e = random_earthquake(s);
            let h = loop {
                let h = s.horocycle();
                if intersection_pattern(&h, e.fault()).interior_count == 2 {
                    break h;
                }
            };
            let r = pointwise_image_is_curve(&e, &h, 12).map_err(e2s)?;
            ensure(!r.is_curve, || format!("{e} keeps {h} on one curve"))
        }),
    );
    let isometries = check(
        "isometries-keep-curves",
        sc.count(1000),
        Box::new(|_| {
            let g = s.isometry();
            let kind = if s.coin(0.5) {
                CurveKind::Horocycle
            } else {
                CurveKind::Geodesic
            };
            let c = s.curve_of(kind);
            let r = image_is_curve_under(|x, y| g.apply_exact(x, y), &c, 12).map_err(e2s)?;
            ensure(r.is_curve, || {
                format!("{g} breaks {c}: witness {:?}", r.witness)
            })
        }),
    );
    let realizable = check(
        "isometry-relabelings-satisfiable",
        sc.count(200),
        Box::new(|_| {
            let g = s.isometry();
            let n = s.int(2, 5) as usize;
            let mut hs: Vec<Curve> = Vec::new();
            while hs.len() < n {
                let h = if !hs.is_empty() && s.coin(0.3) {
                    // tangent to an earlier member
                    let base = s.pick(&hs).clone();
                    let p = pinch_pair(&base, &s.horocycle())
                        .ok()
                        .and_then(|v| v.iter().find_map(|p| p.to_curve()));
                    match p {
                        Some(p) => p,
                        None => continue,
                    }
                } else {
                    s.horocycle()
                };
                if !hs.contains(&h) && hs.iter().all(|k| k.center() != h.center()) {
                    hs.push(h);
                }
            }
            let inst = RealizabilityInstance::from_horocycles(&hs, |c| g.apply_boundary(c))
                .map_err(e2s)?;
            let r = tangency_realizability(&inst).map_err(e2s)?;
            ensure(r.is_satisfiable(), || {
                format!("{g} on {}: {r:?}", show(&hs))
            })
        }),
    );
    vec![certificate, crossing, isometries, realizable]
}

// ---------------------------------------------------------------- graphs

/// The reflection fixing the geodesic with endpoints `a` and `b`.
pub fn reflection_in_geodesic(a: &BoundaryPoint, b: &BoundaryPoint) -> Isometry {
    match (a, b) {
        (BoundaryPoint::Infinity, BoundaryPoint::Finite(c))
        | (BoundaryPoint::Finite(c), BoundaryPoint::Infinity) => {
            Isometry::reflection_in_vertical(c.clone())
        }
        _ => {
            let (a, b) = (a.as_rational().unwrap(), b.as_rational().unwrap());
            let m = (a + b) / qi(2);
            let r = (b - a) / qi(2);
            // w = −z̄ ↦ (m w + m² − r²) / (w + m)
            Isometry::new(
                m.clone(),
                &m * &m - &r * &r,
                qi(1),
                m,
                Orientation::Reversing,
            )
            .unwrap()
        }
    }
}

fn show(cs: &[Curve]) -> String {
    cs.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

fn all_perms_closed(auts: &[GraphAutomorphism]) -> std::result::Result<(), String> {
    for a in auts {
        ensure(auts.contains(&a.inverse()), || {
            format!("inverse of {a} missing")
        })?;
        for b in auts {
            let c = a.compose(b);
            ensure(auts.contains(&c), || format!("{a} ∘ {b} = {c} missing"))?;
        }
    }
    Ok(())
}

fn graphs(s: &mut Sampler, sc: Scale) -> Vec<PropertyResult> {
    let induced = check(
        "isometries-induce-automorphisms",
        sc.count(1000),
        Box::new(|_| {
            let n = s.int(2, 10) as usize;
            let mut cs: Vec<Curve> = Vec::new();
            while cs.len() < n {
                let c = s.curve();
                if !cs.contains(&c) {
                    cs.push(c);
                }
            }
            let g = build_graph_with(&cs, true).map_err(e2s)?;
            let iso = s.isometry();
            ensure(isometry_preserves_graph(&g, &iso).map_err(e2s)?, || {
                format!("{iso} changes the graph of {}", show(&cs))
            })
        }),
    );
    let closure = check(
        "automorphism-group",
        sc.count(200),
        Box::new(|_| {
            let n = s.int(2, 7) as usize;
            let mut cs: Vec<Curve> = Vec::new();
            while cs.len() < n {
                let c = s.horocycle();
                if !cs.contains(&c) {
                    cs.push(c);
                }
            }
            let g = build_graph(&cs).map_err(e2s)?;
            let auts = automorphisms(&g, 5040).map_err(e2s)?;
            ensure(auts.first().is_some_and(|a| a.is_identity()), || {
                "identity is not listed first".into()
            })?;
            for a in &auts {
                ensure(g.is_automorphism(&a.perm), || {
                    format!("{a} is not an automorphism")
                })?;
            }
            all_perms_closed(&auts)
        }),
    );
    let swap = single("swap-example-realized", {
        let hs = vec![
            make_horocycle(&fin(qi(0)), &q(1, 2)).unwrap(),
            make_horocycle(&fin(qi(1)), &q(1, 2)).unwrap(),
            make_horocycle(&fin(qi(2)), &q(1, 2)).unwrap(),
            make_horocycle(&BoundaryPoint::Infinity, &qi(2)).unwrap(),
        ];
        (|| {
            let g = build_graph(&hs).map_err(e2s)?;
            let auts = automorphisms(&g, 100).map_err(e2s)?;
            let swap = auts
                .iter()
                .find(|a| !a.is_identity())
                .ok_or("no non-trivial automorphism")?;
            let iso = isometry_realizing(&g, swap)
                .map_err(e2s)?
                .ok_or("no isometry found")?;
            for (i, &j) in swap.perm.iter().enumerate() {
                ensure(iso.apply_curve(&hs[i]) == hs[j], || {
                    format!("{iso} does not send {i} to {j}")
                })?;
            }
            Ok(vec![format!("{swap} realized by {iso}")])
        })()
    });
    let quake = single("earthquake-geodesics-unrealizable", {
        let f = |a: i64, b: i64| make_geodesic(&fin(qi(a)), &fin(qi(b))).unwrap();
        let src = vec![f(-1, 1), f(-3, -2), f(2, 3)];
        let e = doubling_quake();
        (|| {
            let dst: Vec<Curve> = src
                .iter()
                .map(|g| eq_geodesic_image(&e, g))
                .collect::<Result<_>>()
                .map_err(e2s)?;
            let (g1, g2) = (
                build_graph(&src).map_err(e2s)?,
                build_graph(&dst).map_err(e2s)?,
            );
            ensure(g1.adjacency == g2.adjacency, || {
                "the earthquake changed the geodesic graph".into()
            })?;
            let found = realizing_isometry(&src, &dst).map_err(e2s)?;
            ensure(found.is_none(), || {
                format!("{} realizes the relabeling", found.unwrap())
            })?;
            let hs = quake_example_horocycles();
            let dq = doubling_quake();
            let inst = RealizabilityInstance::from_horocycles(&hs, |c| dq.apply_boundary(c))
                .map_err(e2s)?;
            let r = tangency_realizability(&inst).map_err(e2s)?;
            ensure(!r.is_satisfiable(), || {
                "the horocycle relabeling is realizable".into()
            })?;
            Ok(vec![format!(
                "{e} keeps the graph of {} but no isometry realizes it",
                show(&src)
            )])
        })()
    });
    let sigma = check(
        "center-swap-realizability",
        sc.count(200),
        Box::new(|i| {
            if i == 0 {
                let hs: Vec<Curve> = [0, 2, 1]
                    .iter()
                    .map(|&c| make_horocycle(&fin(qi(c)), &q(1, 2)).unwrap())
                    .collect();
                let sw = sigma_center_swap(&fin(qi(0)), &fin(qi(3))).map_err(e2s)?;
                let images: Vec<Curve> = hs
                    .iter()
                    .map(|h| sw.apply(h))
                    .collect::<Result<_>>()
                    .map_err(e2s)?;
                let found = realizing_isometry(&hs, &images).map_err(e2s)?;
                ensure(found.is_none(), || {
                    format!("{} realizes the swap on {}", found.unwrap(), show(&hs))
                })?;
                let v = sw.tangency_violation(&hs).map_err(e2s)?;
                return ensure(v.is_some(), || {
                    "the designed witness keeps tangencies".into()
                });
            }
            let p = s.rational(12, 4);
            let mut qq = s.rational(12, 4);
            if qq == p {
                qq += qi(1);
            }
            let sw = sigma_center_swap(&fin(p.clone()), &fin(qq.clone())).map_err(e2s)?;
            let n = s.int(3, 5) as usize;
            let mut hs = vec![make_horocycle(&fin(p), &s.positive(6, 6)).unwrap()];
            while hs.len() < n {
                let h = s.horocycle();
                let c = h.center().unwrap();
                if *c != fin(qq.clone()) && hs.iter().all(|k| k.center() != Some(c)) {
                    hs.push(h);
                }
            }
            let images: Vec<Curve> = hs
                .iter()
                .map(|h| sw.apply(h))
                .collect::<Result<_>>()
                .map_err(e2s)?;
            // an isometry fixing two horocycles with centers a, b is the
            // identity or the reflection in the geodesic (a, b)
            let refl = reflection_in_geodesic(hs[1].center().unwrap(), hs[2].center().unwrap());
            let expected = hs
                .iter()
                .zip(&images)
                .all(|(h, im)| refl.apply_curve(h) == *im);
            let found = realizing_isometry(&hs, &images).map_err(e2s)?;
            ensure(found.is_some() == expected, || {
                format!(
                    "{}: realizing isometry {}, reflection realizes: {expected}",
                    show(&hs),
                    found
                        .as_ref()
                        .map(|g| g.to_string())
                        .unwrap_or("none".into())
                )
            })?;
            if let Some(g) = found {
                ensure(
                    hs.iter()
                        .zip(&images)
                        .all(|(h, im)| g.apply_curve(h) == *im),
                    || format!("{g} does not realize"),
                )?;
            }
            Ok(())
        }),
    );
    vec![induced, closure, swap, quake, sigma]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteOptions::default()).is_err());
        assert!(Scale::parse("huge").is_err());
    }

    #[test]
    fn dyadic_lists_levels() {
        let r = run_suite(
            "dyadic",
            &SuiteOptions {
                depth: 3,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.properties[0].notes.len(), 4);
    }

    #[test]
    fn small_suites_pass() {
        let opts = SuiteOptions {
            seed: 5,
            scale: Scale::Small,
            depth: 4,
        };
        for name in [
            "order",
            "betweenness",
            "four-geodesics",
            "earthquake",
            "graphs",
        ] {
            let r = run_suite(name, &opts).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
