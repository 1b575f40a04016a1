//! Acceptance run: one PASS/FAIL line per criterion, with its time bound.
//! Oracles here are computed separately from the library's own checks.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hyperk::constructions::{
    classify_family_limit, disj_family, dyadic, dyadic_family, fixed_endpoint_default,
    four_geodesic_config, hyp1_witness, ray_sweep_family, sigma_center_swap, witness_search,
    FamilyLimit,
};
use hyperk::earthquake::{
    eq_geodesic_image, exact_samples, pointwise_image_is_curve, tangency_realizability,
    Realizability, RealizabilityInstance,
};
use hyperk::graphs::{
    automorphisms, build_graph, build_graph_with, isometry_realizing, realizing_isometry,
};
use hyperk::predicates::{
    horocycle_leq, hypercycle_pair_type, intersection_pattern, HoroOrder, HypercyclePairType,
};
use hyperk::random::Sampler;
use hyperk::suites::{doubling_quake, quake_example_horocycles};
use hyperk::{
    equidistant_pair, make_geodesic, make_horocycle, q, qi, BoundaryPoint, Curve, CurveKind,
    Rational, UhpPoint,
};
use num_traits::Zero;

type Outcome = Result<String, String>;

fn fin(x: Rational) -> BoundaryPoint {
    BoundaryPoint::Finite(x)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// det of the rows `(x² + y², x, y, 1)`; zero exactly when the four points
/// lie on one generalized circle.
fn lift_det(p: &[(Rational, Rational); 4]) -> Rational {
    let m: Vec<[Rational; 4]> = p
        .iter()
        .map(|(x, y)| {
            [
                x * x + y * y,
                x.clone(),
                y.clone(),
                Rational::from_integer(1.into()),
            ]
        })
        .collect();
    let det3 = |r: [usize; 3], c: [usize; 3]| {
        let e = |i: usize, j: usize| &m[r[i]][c[j]];
        e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
            - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
    };
    let mut total = Rational::zero();
    for j in 0..4 {
        let cols: Vec<usize> = (0..4).filter(|&c| c != j).collect();
        let minor = det3([1, 2, 3], [cols[0], cols[1], cols[2]]);
        let term = &m[0][j] * minor;
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Hyperbolic distance from `(x, y)` to the geodesic with the given ends,
/// through the map sending the ends to `0` and `∞`.
fn distance_oracle(ends: &[BoundaryPoint], x: f64, y: f64) -> f64 {
    let f = |b: &BoundaryPoint| match b {
        BoundaryPoint::Infinity => None,
        b => Some(b.to_f64()),
    };
    let (u, v) = match (f(&ends[0]), f(&ends[1])) {
        (Some(p), None) | (None, Some(p)) => (x - p, y),
        (Some(p), Some(qq)) => {
            // w = (z − p) / (z − q)
            let (nr, ni) = (x - p, y);
            let (dr, di) = (x - qq, y);
            let den = dr * dr + di * di;
            ((nr * dr + ni * di) / den, (ni * dr - nr * di) / den)
        }
        (None, None) => unreachable!(),
    };
    (u.abs() / v.abs()).asinh()
}

fn tangent_horocycles(a: &Curve, b: &Curve) -> bool {
    // h(c1, r1) and h(c2, r2) touch when (c1 − c2)² = 4 r1 r2
    let (c1, c2) = (
        a.center().unwrap().as_rational().unwrap(),
        b.center().unwrap().as_rational().unwrap(),
    );
    let d = c1 - c2;
    &d * &d == qi(4) * a.size().unwrap() * b.size().unwrap()
}

fn c1_dyadic() -> Outcome {
    let mut count = 0;
    for k in 0..=6u32 {
        let n = 1i64 << k;
        let fam = dyadic_family(k, -n, n).map_err(s)?;
        let r = dyadic(1, k + 1);
        for (i, z) in fam.tangency_points.iter().enumerate() {
            let m = -n + i as i64;
            let (xm, xn) = (dyadic(m, k), dyadic(m + 1, k));
            let x = (&xm + &xn) / qi(2);
            let expected = UhpPoint::Exact {
                x: x.clone(),
                y: r.clone(),
            };
            ensure(*z == expected, || format!("k={k} n={m}: {z} vs {expected}"))?;
            // the point (x, r) lies on both circles of radius r centered at (c, r)
            for c in [&xm, &xn] {
                let dx = &x - c;
                ensure(&dx * &dx == &r * &r, || {
                    format!("k={k} n={m}: off the circle at {c}")
                })?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} tangency points"))
}

fn c2_invariance() -> Outcome {
    let mut sm = Sampler::new(2);
    let key = |a: &Curve, b: &Curve| {
        let p = intersection_pattern(a, b);
        (p.equal, p.interior_count, p.tangent, p.shared_endpoints)
    };
    for i in 0..10_000 {
        let (a, b) = match i % 4 {
            0 => {
                let p = sm.type1_pair();
                (p.h1, p.h2)
            }
            1 => {
                let p = if sm.coin(0.5) {
                    sm.type2_pair()
                } else {
                    sm.type3_pair()
                };
                (p.h1, p.h2)
            }
            _ => (sm.curve(), sm.curve()),
        };
        let g = sm.isometry();
        let (ga, gb) = (g.apply_curve(&a), g.apply_curve(&b));
        ensure(key(&a, &b) == key(&ga, &gb), || {
            format!("case {i}: {a}, {b} under {g}")
        })?;
        let hyp = |c: &Curve| c.kind() != CurveKind::Horocycle;
        if hyp(&a) && hyp(&b) {
            let (t1, t2) = (
                hypercycle_pair_type(&a, &b).ok(),
                hypercycle_pair_type(&ga, &gb).ok(),
            );
            ensure(t1 == t2, || format!("case {i}: type {t1:?} became {t2:?}"))?;
        }
    }
    Ok("10000 cases".into())
}

fn c3_four_geodesics() -> Outcome {
    let mut sm = Sampler::new(3);
    for i in 0..1000 {
        let [a, b, c, d] = sm.quadruple();
        let r = four_geodesic_config(&a, &b, &c, &d).map_err(s)?.verify();
        ensure(
            r.incidences
                && r.meets_h
                && r.crosses_both
                && r.failures.is_empty()
                && r.arc_classes == 10,
            || format!("quadruple {i} ({a}, {b}, {c}, {d}): {r:?}"),
        )?;
    }
    Ok("1000 quadruples".into())
}

fn c4_witnesses() -> Outcome {
    let mut sm = Sampler::new(4);
    for i in 0..100 {
        let p = sm.type1_pair();
        ensure(
            hypercycle_pair_type(&p.h1, &p.h2).map_err(s)? == HypercyclePairType::Type1,
            || format!("pair {i} not type1"),
        )?;
        let ex = |z: &(Rational, Rational)| UhpPoint::Exact {
            x: z.0.clone(),
            y: z.1.clone(),
        };
        let w = hyp1_witness(&p.h1, &p.h2, &ex(&p.x), &ex(&p.y)).map_err(s)?;
        ensure(w.curve.kind() == CurveKind::Hypercycle, || {
            format!("pair {i}: witness {} is not a hypercycle", w.curve)
        })?;
        ensure(intersection_pattern(&w.curve, &p.h2).is_disjoint(), || {
            format!("pair {i}: witness meets h2")
        })?;
        for z in [&p.x, &p.y] {
            ensure(w.curve.circle().eval(&z.0, &z.1).is_zero(), || {
                format!("pair {i}: witness misses a point")
            })?;
        }
    }
    for i in 0..200 {
        let (p, want) = if i % 2 == 0 {
            (sm.type2_pair(), HypercyclePairType::Type2)
        } else {
            (sm.type3_pair(), HypercyclePairType::Type3)
        };
        ensure(
            hypercycle_pair_type(&p.h1, &p.h2).map_err(s)? == want,
            || format!("pair {i} not {want:?}"),
        )?;
        let found = witness_search(&p.h1, &p.h2, &p.x, &p.y).map_err(s)?;
        ensure(found.is_none(), || {
            format!("pair {i}: {} misses {}", found.unwrap(), p.h2)
        })?;
    }
    Ok("100 type1 witnesses, none for 100 type2 + 100 type3".into())
}

fn c5_certificate() -> Outcome {
    let hs = quake_example_horocycles();
    let expected = [
        make_horocycle(&fin(qi(-1)), &qi(1)).unwrap(),
        make_horocycle(&fin(qi(1)), &qi(1)).unwrap(),
        make_horocycle(&fin(qi(0)), &q(1, 4)).unwrap(),
        make_horocycle(&BoundaryPoint::Infinity, &qi(2)).unwrap(),
    ];
    ensure(hs == expected, || "example horocycles differ".into())?;
    let e = doubling_quake();
    for x in [-3i64, -1, 1, 5] {
        let want = if x < 0 { fin(qi(2 * x)) } else { fin(qi(x)) };
        ensure(e.apply_boundary(&fin(qi(x))) == want, || {
            format!("boundary map at {x}")
        })?;
    }
    let id = tangency_realizability(
        &RealizabilityInstance::from_horocycles(&hs, |c| c.clone()).map_err(s)?,
    )
    .map_err(s)?;
    ensure(id.is_satisfiable(), || {
        "identity relabeling unsatisfiable".into()
    })?;
    let moved = tangency_realizability(
        &RealizabilityInstance::from_horocycles(&hs, |c| e.apply_boundary(c)).map_err(s)?,
    )
    .map_err(s)?;
    match moved {
        Realizability::Unsatisfiable(cert) => {
            ensure(cert.contradiction.contains("1 ≠ 4·(3/2)·(2/3)"), || {
                format!("contradiction {:?}", cert.contradiction)
            })?;
            Ok(cert.contradiction)
        }
        r => Err(format!("doubled relabeling: {r:?}")),
    }
}

fn c6_separation() -> Outcome {
    let mut sm = Sampler::new(6);
    for i in 0..1000 {
        let p = sm.distinct_boundary(2, 0.2);
        let mut shear = sm.positive(6, 4);
        if shear == qi(1) {
            shear = q(3, 2);
        }
        let side = if sm.coin(0.5) {
            hyperk::earthquake::Side::Left
        } else {
            hyperk::earthquake::Side::Right
        };
        let e = hyperk::earthquake::EarthquakeMap::new(&p[0], &p[1], shear, side).map_err(s)?;
        let h = loop {
            let h = sm.horocycle();
            if intersection_pattern(&h, e.fault()).interior_count == 2 {
                break h;
            }
        };
        let r = pointwise_image_is_curve(&e, &h, 12).map_err(s)?;
        ensure(!r.is_curve, || {
            format!("case {i}: {e} keeps {h} on one curve")
        })?;
        let w = r.witness.ok_or_else(|| format!("case {i}: no witness"))?;
        ensure(!lift_det(&w).is_zero(), || {
            format!("case {i}: witness points are cocircular")
        })?;
    }
    for i in 0..1000 {
        let g = sm.isometry();
        let c = if sm.coin(0.5) {
            sm.horocycle()
        } else {
            sm.geodesic()
        };
        let pts: Vec<(Rational, Rational)> = exact_samples(&c, 8)
            .map_err(s)?
            .iter()
            .map(|(x, y)| g.apply_exact(x, y))
            .collect();
        ensure(pts.len() >= 4, || {
            format!("case {i}: {} samples", pts.len())
        })?;
        for k in 3..pts.len() {
            let quad = [
                pts[0].clone(),
                pts[1].clone(),
                pts[2].clone(),
                pts[k].clone(),
            ];
            ensure(lift_det(&quad).is_zero(), || {
                format!("case {i}: {g} image of {c} not cocircular")
            })?;
        }
    }
    Ok("1000 broken horocycles, 1000 cocircular isometry images".into())
}

fn c7_crescent() -> Outcome {
    let mut sm = Sampler::new(7);
    let mut worst = 0.0f64;
    for i in 0..100 {
        let g = sm.geodesic();
        let d = 0.05 + 2.95 * sm.unit();
        let cr = equidistant_pair(&g, d).map_err(s)?;
        for side in [&cr.first, &cr.second] {
            let pts = side.sample(100);
            ensure(pts.len() == 100, || {
                format!("case {i}: {} samples", pts.len())
            })?;
            for (x, y) in pts {
                let err = (distance_oracle(g.endpoints(), x, y) - d).abs();
                worst = worst.max(err);
                ensure(err < 1e-9, || {
                    format!("case {i}: {g}, d={d}: error {err:e} at ({x}, {y})")
                })?;
            }
        }
    }
    Ok(format!("100 crescents, worst error {worst:.1e}"))
}

fn c8_families() -> Outcome {
    let mut sm = Sampler::new(8);
    for i in 0..100 {
        let (h, hp) = sm.disjoint_horo_hyper();
        ensure(intersection_pattern(&h, &hp).is_disjoint(), || {
            format!("case {i}: input pair meets")
        })?;
        let fam = disj_family(&h, &hp).map_err(s)?;
        match classify_family_limit(&fam, &fam.probes).map_err(s)? {
            FamilyLimit::HorocycleLimit(c) => {
                let dist = c.coefficient_distance(&h.circle().to_approx());
                ensure(dist < 1e-6, || {
                    format!("case {i}: limit {c:?} is {dist:e} from {h}")
                })?;
            }
            l => return Err(format!("case {i}: {h}, {hp} classified {l}")),
        }
    }
    let ray = ray_sweep_family();
    let l = classify_family_limit(&ray, &ray.probes).map_err(s)?;
    ensure(matches!(l, FamilyLimit::FoliatesComponent), || {
        format!("ray sweep: {l}")
    })?;
    let fixed = fixed_endpoint_default();
    let l = classify_family_limit(&fixed, &fixed.probes).map_err(s)?;
    ensure(
        matches!(l, FamilyLimit::HypercycleOrGeodesicLimit(_)),
        || format!("fixed endpoint: {l}"),
    )?;
    Ok("100 horocycle limits, ray sweep foliates, fixed endpoint converges".into())
}

fn c9_graphs() -> Outcome {
    let mut sm = Sampler::new(9);
    for i in 0..1000 {
        let n = sm.int(2, 10) as usize;
        let mut cs: Vec<Curve> = Vec::new();
        while cs.len() < n {
            let c = sm.curve();
            if !cs.contains(&c) {
                cs.push(c);
            }
        }
        let g = sm.isometry();
        let moved: Vec<Curve> = cs.iter().map(|c| g.apply_curve(c)).collect();
        let (a, b) = (
            build_graph_with(&cs, true).map_err(s)?,
            build_graph_with(&moved, true).map_err(s)?,
        );
        for u in 0..n {
            for v in u + 1..n {
                let direct = intersection_pattern(&moved[u], &moved[v]).is_disjoint();
                ensure(
                    a.adjacency[u][v] == b.adjacency[u][v] && b.adjacency[u][v] == direct,
                    || format!("case {i}: edge {u}-{v} changes under {g}"),
                )?;
            }
        }
    }
    let hs = vec![
        make_horocycle(&fin(qi(0)), &q(1, 2)).unwrap(),
        make_horocycle(&fin(qi(1)), &q(1, 2)).unwrap(),
        make_horocycle(&fin(qi(2)), &q(1, 2)).unwrap(),
        make_horocycle(&BoundaryPoint::Infinity, &qi(2)).unwrap(),
    ];
    let g = build_graph(&hs).map_err(s)?;
    let auts = automorphisms(&g, 100).map_err(s)?;
    let swap = auts
        .iter()
        .find(|a| !a.is_identity())
        .ok_or("no swap automorphism")?;
    let iso = isometry_realizing(&g, swap)
        .map_err(s)?
        .ok_or("swap not realized")?;
    for (i, &j) in swap.perm.iter().enumerate() {
        ensure(iso.apply_curve(&hs[i]) == hs[j], || {
            format!("{iso} does not send {i} to {j}")
        })?;
    }
    let f = |a: i64, b: i64| make_geodesic(&fin(qi(a)), &fin(qi(b))).unwrap();
    let src = vec![f(-1, 1), f(-3, -2), f(2, 3)];
    let e = doubling_quake();
    let dst: Vec<Curve> = src
        .iter()
        .map(|c| eq_geodesic_image(&e, c))
        .collect::<Result<_, _>>()
        .map_err(s)?;
    ensure(dst == vec![f(-2, 1), f(-6, -4), f(2, 3)], || {
        "earthquake images differ".into()
    })?;
    ensure(
        build_graph(&src).map_err(s)?.adjacency == build_graph(&dst).map_err(s)?.adjacency,
        || "graph changed".into(),
    )?;
    ensure(realizing_isometry(&src, &dst).map_err(s)?.is_none(), || {
        "earthquake relabeling realized".into()
    })?;
    Ok(format!(
        "1000 isometries, swap realized by {iso}, earthquake relabeling unrealized"
    ))
}

fn c10_sigma() -> Outcome {
    let mut sm = Sampler::new(10);
    for i in 0..1000 {
        let p = sm.rational(12, 4);
        let mut qq = sm.rational(12, 4);
        if qq == p {
            qq += qi(1);
        }
        let sw = sigma_center_swap(&fin(p.clone()), &fin(qq.clone())).map_err(s)?;
        let c = match i % 3 {
            0 => fin(p),
            1 => fin(qq),
            _ => sm.boundary(0.1),
        };
        let (r1, r2) = (sm.positive(6, 6), sm.positive(6, 6));
        let h1 = make_horocycle(&c, &r1).unwrap();
        let h2 = make_horocycle(&c, &r2).unwrap();
        // same center: the order is the order of sizes
        let oracle = if c == BoundaryPoint::Infinity {
            r2.cmp(&r1)
        } else {
            r1.cmp(&r2)
        };
        let want = match oracle {
            std::cmp::Ordering::Less => HoroOrder::LessOrEqual,
            std::cmp::Ordering::Equal => HoroOrder::Equal,
            std::cmp::Ordering::Greater => HoroOrder::GreaterOrEqual,
        };
        let before = horocycle_leq(&h1, &h2).map_err(s)?;
        let after =
            horocycle_leq(&sw.apply(&h1).map_err(s)?, &sw.apply(&h2).map_err(s)?).map_err(s)?;
        ensure(before == want && after == want, || {
            format!("pair {i}: {h1}, {h2}: {before:?} then {after:?}")
        })?;
    }
    let hs: Vec<Curve> = [0, 2, 1]
        .iter()
        .map(|&c| make_horocycle(&fin(qi(c)), &q(1, 2)).unwrap())
        .collect();
    let sw = sigma_center_swap(&fin(qi(0)), &fin(qi(3))).map_err(s)?;
    let imgs: Vec<Curve> = hs
        .iter()
        .map(|h| sw.apply(h))
        .collect::<Result<_, _>>()
        .map_err(s)?;
    ensure(
        tangent_horocycles(&hs[0], &hs[2]) && !tangent_horocycles(&imgs[0], &imgs[2]),
        || "oracle tangency".into(),
    )?;
    let v = sw.tangency_violation(&hs).map_err(s)?;
    ensure(v.is_some(), || "designed witness keeps tangencies".into())?;
    ensure(realizing_isometry(&hs, &imgs).map_err(s)?.is_none(), || {
        "swap realized on the witness".into()
    })?;
    Ok(format!(
        "1000 same-center pairs, tangency broken at {:?}",
        v.unwrap()
    ))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, u64, fn() -> Outcome); 10] = [
        (1, "dyadic exactness", 1, c1_dyadic),
        (2, "isometry invariance", 30, c2_invariance),
        (3, "four-geodesic configuration", 10, c3_four_geodesics),
        (4, "type witnesses", 30, c4_witnesses),
        (5, "earthquake certificate", 1, c5_certificate),
        (6, "earthquake vs isometry", 30, c6_separation),
        (7, "crescent distance", 10, c7_crescent),
        (8, "family limits", 30, c8_families),
        (9, "graph isometries", 60, c9_graphs),
        (10, "center swap", 1, c10_sigma),
    ];
    let mut failed = 0;
    for (n, name, bound, run) in criteria {
        let t = Instant::now();
        let out = run();
        let el = t.elapsed();
        let slow = el > Duration::from_secs(bound);
        match (&out, slow) {
            (Ok(msg), false) => println!(
                "PASS criterion {n} {name}: {msg} ({:.3}s < {bound}s)",
                el.as_secs_f64()
            ),
            (Ok(msg), true) => {
                failed += 1;
                println!(
                    "FAIL criterion {n} {name}: {msg} but took {:.3}s > {bound}s",
                    el.as_secs_f64()
                );
            }
            (Err(e), _) => {
                failed += 1;
                println!("FAIL criterion {n} {name}: {e} ({:.3}s)", el.as_secs_f64());
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
