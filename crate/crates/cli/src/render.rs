//! Scenes for the `render` subcommand.

use hyperk::constructions::dyadic_family;
use hyperk::suites::{doubling_quake, quake_example_horocycles};
use hyperk::{make_horocycle, BoundaryPoint, Curve, CurveKind, UhpPoint};

use crate::input::{self, Numbers};
use crate::svg::{render, Panel, Style, View};
use crate::{Failure, Scene};

fn style(c: &Curve) -> Style {
    match c.kind() {
        CurveKind::Geodesic => Style::Geodesic,
        CurveKind::Horocycle => Style::Horocycle,
        CurveKind::Hypercycle => Style::Hypercycle,
    }
}

fn curves_panel(title: &str, curves: &[Curve], view: &View) -> Panel {
    let mut p = Panel::new(title);
    for c in curves {
        p.add_circle(&c.circle().to_approx(), style(c), view);
    }
    p
}

pub fn scene(scene: Scene, view: &View, nums: Numbers) -> Result<String, Failure> {
    let panels = match scene {
        Scene::Empty => Vec::new(),
        Scene::Curves { curves, file } => {
            let cs = nums.curves(&curves, file.as_deref())?;
            vec![curves_panel("", &cs, view)]
        }
        Scene::Dyadic { level, range } => {
            let r = input::split(&range, 2)?;
            let parse = |s: &str| {
                s.parse::<i64>()
                    .map_err(|_| Failure::Usage(format!("not an integer: {s:?}")))
            };
            let f = dyadic_family(level, parse(&r[0])?, parse(&r[1])?)?;
            let mut cs = f.horocycles.clone();
            cs.push(make_horocycle(&BoundaryPoint::Infinity, &hyperk::qi(1))?);
            let mut p = curves_panel(&format!("level {level}"), &cs, view);
            p.points = f.tangency_points.iter().map(UhpPoint::to_f64).collect();
            vec![p]
        }
        Scene::Earthquake => {
            let e = doubling_quake();
            let hs = quake_example_horocycles();
            let mut before = curves_panel("before", &hs, view);
            before.add_circle(&e.fault().circle().to_approx(), Style::Fault, view);
            let mut after = Panel::new("after");
            after.add_circle(&e.fault().circle().to_approx(), Style::Fault, view);
            for h in &hs {
                // pointwise images, split where the curve crosses the fault
                let mut run: Vec<(f64, f64)> = Vec::new();
                let mut side: Option<bool> = None;
                for (x, y) in h.circle().to_approx().sample(2000) {
                    let z = UhpPoint::approx(x, y)?;
                    let moved = e.moves_point(&z);
                    if side.is_some_and(|s| s != moved) && run.len() > 1 {
                        after
                            .paths
                            .push((std::mem::take(&mut run), Style::Horocycle));
                    }
                    side = Some(moved);
                    let w = e.apply_point(&z).to_f64();
                    if w.1 <= view.height * 1.05 {
                        run.push(w);
                    } else if run.len() > 1 {
                        after
                            .paths
                            .push((std::mem::take(&mut run), Style::Horocycle));
                    } else {
                        run.clear();
                    }
                }
                if run.len() > 1 {
                    after.paths.push((run, Style::Horocycle));
                }
            }
            vec![before, after]
        }
    };
    Ok(render(&panels, view))
}
