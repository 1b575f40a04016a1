//! Can a boundary relabeling carry a horocycle configuration along?
//!
//! Given centers and a required pairwise pattern, decide whether positive
//! radii exist at the (relabeled) centers realizing it. Each radius is
//! written `ρ_v = c_v · t^{±1}` for one free scale `t` per tangency
//! component, so the tangency equalities are solved exactly; the remaining
//! strict inequalities are monomial in the squared scales and are decided by
//! Fourier–Motzkin elimination in logarithmic coordinates.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, Pow, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::model::boundary::BoundaryPoint;
use crate::model::curve::{Curve, CurveKind};
use crate::model::number::{
    fmt_rational, qi, rational_near, rational_sqrt, to_f64, Quad, Rational,
};
use crate::predicates::pattern::intersection_pattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairPattern {
    Tangent,
    Disjoint,
    Crossing,
}

impl PairPattern {
    pub fn name(self) -> &'static str {
        match self {
            PairPattern::Tangent => "tangent",
            PairPattern::Disjoint => "disjoint",
            PairPattern::Crossing => "crossing",
        }
    }
}

/// The pattern of two distinct horocycles.
pub fn pair_pattern(h1: &Curve, h2: &Curve) -> PairPattern {
    let p = intersection_pattern(h1, h2);
    if p.tangent {
        PairPattern::Tangent
    } else if p.interior_count == 0 {
        PairPattern::Disjoint
    } else {
        PairPattern::Crossing
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RealizabilityInstance {
    pub centers: Vec<BoundaryPoint>,
    pub relabeled_centers: Vec<BoundaryPoint>,
    /// Symmetric; the diagonal is ignored.
    pub required_pattern: Vec<Vec<PairPattern>>,
}

impl RealizabilityInstance {
    pub fn new(
        centers: Vec<BoundaryPoint>,
        relabeled_centers: Vec<BoundaryPoint>,
        required_pattern: Vec<Vec<PairPattern>>,
    ) -> Result<Self> {
        let n = centers.len();
        if relabeled_centers.len() != n
            || required_pattern.len() != n
            || required_pattern.iter().any(|r| r.len() != n)
        {
            return invalid(format!(
                "pattern matrix and center lists disagree in size ({n} centers)"
            ));
        }
        for i in 0..n {
            for j in i + 1..n {
                if required_pattern[i][j] != required_pattern[j][i] {
                    return invalid(format!("pattern matrix is not symmetric at ({i}, {j})"));
                }
            }
        }
        if relabeled_centers
            .iter()
            .any(|c| matches!(c, BoundaryPoint::Algebraic(_)))
        {
            return invalid("relabeled centers must be rational or ∞");
        }
        Ok(RealizabilityInstance {
            centers,
            relabeled_centers,
            required_pattern,
        })
    }

    /// The actual pattern of `horocycles`, with centers moved by `map`.
    pub fn from_horocycles<F>(horocycles: &[Curve], map: F) -> Result<Self>
    where
        F: Fn(&BoundaryPoint) -> BoundaryPoint,
    {
        if let Some(h) = horocycles.iter().find(|h| h.kind() != CurveKind::Horocycle) {
            return invalid(format!("{h} is not a horocycle"));
        }
        let n = horocycles.len();
        let centers: Vec<BoundaryPoint> = horocycles
            .iter()
            .map(|h| h.center().unwrap().clone())
            .collect();
        let relabeled = centers.iter().map(&map).collect();
        let mut pattern = vec![vec![PairPattern::Disjoint; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let p = pair_pattern(&horocycles[i], &horocycles[j]);
                pattern[i][j] = p;
                pattern[j][i] = p;
            }
        }
        Self::new(centers, relabeled, pattern)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    /// The constraints that together force the contradiction.
    pub cycle: Vec<String>,
    pub contradiction: String,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycle {
            writeln!(f, "  {c}")?;
        }
        write!(f, "  contradiction: {}", self.contradiction)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Realizability {
    Satisfiable(Vec<Quad>),
    Unsatisfiable(Certificate),
}

impl Realizability {
    pub fn is_satisfiable(&self) -> bool {
        matches!(self, Realizability::Satisfiable(_))
    }
}

// ρ_v = coef · t_root^exp
#[derive(Clone, Debug)]
struct Expr {
    root: usize,
    coef: Rational,
    exp: i64,
}

// One pairwise requirement written as ρ_i · ρ_j^s  (op)  k.
#[derive(Clone, Debug)]
struct Constraint {
    i: usize,
    j: usize,
    s: i64,
    k: Rational,
    op: PairPattern,
    text: String,
}

fn paren(x: &Rational) -> String {
    if x.denom().is_one() {
        fmt_rational(x)
    } else {
        format!("({})", fmt_rational(x))
    }
}

fn paren_quad(x: &Quad) -> String {
    match x.as_rational() {
        Some(r) => paren(r),
        None => format!("({x})"),
    }
}

struct Solver<'a> {
    centers: &'a [BoundaryPoint],
    expr: Vec<Expr>,
    // t_root² when fixed
    fixed: Vec<Option<Rational>>,
    used: Vec<usize>,
    constraints: Vec<Constraint>,
}

impl<'a> Solver<'a> {
    fn value(&self, v: usize) -> Quad {
        let e = &self.expr[v];
        match &self.fixed[e.root] {
            None => Quad::rational(e.coef.clone()),
            Some(r) => match rational_sqrt(r) {
                Some(t) => Quad::rational(if e.exp > 0 {
                    &e.coef * &t
                } else {
                    &e.coef / &t
                }),
                None => {
                    let c = if e.exp > 0 {
                        e.coef.clone()
                    } else {
                        &e.coef / r
                    };
                    Quad::new(qi(0), c, r.clone())
                }
            },
        }
    }

    fn contradiction(&self, c: &Constraint) -> String {
        let (ri, rj) = (self.value(c.i), self.value(c.j));
        if c.s == 1 {
            let (p, q) = (
                self.centers[c.i].as_rational().unwrap(),
                self.centers[c.j].as_rational().unwrap(),
            );
            let d2 = (p - q) * (p - q);
            format!(
                "{} ≠ 4·{}·{}",
                fmt_rational(&d2),
                paren_quad(&ri),
                paren_quad(&rj)
            )
        } else {
            format!("{} ≠ 2·{}", paren_quad(&ri), paren_quad(&rj))
        }
    }

    fn certificate(&self, failing: usize) -> Certificate {
        let c = &self.constraints[failing];
        let root = self.expr[c.i].root;
        let mut cycle: Vec<String> = self
            .used
            .iter()
            .filter(|&&u| {
                let k = &self.constraints[u];
                self.expr[k.i].root == root || self.expr[k.j].root == root
            })
            .map(|&u| self.constraints[u].text.clone())
            .collect();
        cycle.push(c.text.clone());
        Certificate {
            cycle,
            contradiction: self.contradiction(c),
        }
    }

    // substitute t_from = coef · t_to^exp everywhere
    fn substitute(&mut self, from: usize, to: usize, coef: &Rational, exp: i64) {
        for e in self.expr.iter_mut().filter(|e| e.root == from) {
            // (coef · t^exp)^{e.exp}
            let c = if e.exp > 0 {
                coef.clone()
            } else {
                coef.recip()
            };
            e.coef = &e.coef * c;
            e.exp *= exp;
            e.root = to;
        }
    }

    // returns Err(index) on contradiction
    fn equality(&mut self, idx: usize) -> std::result::Result<(), usize> {
        let c = self.constraints[idx].clone();
        let (ei, ej) = (self.expr[c.i].clone(), self.expr[c.j].clone());
        let coefs = &ei.coef * ej.coef.clone().pow(c.s as i32);
        let (gi, gj) = (ei.exp, c.s * ej.exp);
        if ei.root == ej.root {
            let total = gi + gj;
            if total == 0 {
                if coefs != c.k {
                    return Err(idx);
                }
            } else {
                // t^{±2} = k / coefs
                let mut r = &c.k / &coefs;
                if total < 0 {
                    r = r.recip();
                }
                match &self.fixed[ei.root] {
                    Some(old) if *old != r => return Err(idx),
                    Some(_) => {}
                    None => self.fixed[ei.root] = Some(r),
                }
            }
            self.used.push(idx);
            return Ok(());
        }
        match (self.fixed[ei.root].clone(), self.fixed[ej.root].clone()) {
            (Some(ri), Some(rj)) => {
                // compare squares: coefs² · ri^gi · rj^gj = k²
                let lhs = &coefs * &coefs * ri.pow(gi as i32) * rj.pow(gj as i32);
                if lhs != &c.k * &c.k {
                    return Err(idx);
                }
            }
            (_, None) => {
                // t_j^{gj} = k / (coefs · t_i^{gi})  ⇒  t_j = (k/coefs)^{gj} · t_i^{−gi·gj}
                let base = &c.k / &coefs;
                let coef = if gj > 0 { base } else { base.recip() };
                self.substitute(ej.root, ei.root, &coef, -gi * gj);
            }
            (None, Some(_)) => {
                let base = &c.k / &coefs;
                let coef = if gi > 0 { base } else { base.recip() };
                self.substitute(ei.root, ej.root, &coef, -gi * gj);
            }
        }
        self.used.push(idx);
        Ok(())
    }
}

// C · ∏ u_k^{f_k} > 1 with u_k = t_k²
#[derive(Clone, Debug)]
struct Ineq {
    coef: Rational,
    exps: BTreeMap<usize, i64>,
    origin: Vec<usize>,
}

fn fourier_motzkin(
    mut set: Vec<Ineq>,
    vars: &[usize],
) -> (std::result::Result<(), Ineq>, Vec<Vec<Ineq>>) {
    let mut stages = Vec::new();
    for &v in vars {
        stages.push(set.clone());
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for q in set {
            match q.exps.get(&v).copied().unwrap_or(0) {
                0 => rest.push(q),
                f if f > 0 => pos.push(q),
                _ => neg.push(q),
            }
        }
        for p in &pos {
            for n in &neg {
                let (fp, fnn) = (p.exps[&v], -n.exps[&v]);
                let mut exps = BTreeMap::new();
                for (k, e) in p.exps.iter() {
                    *exps.entry(*k).or_insert(0) += e * fnn;
                }
                for (k, e) in n.exps.iter() {
                    *exps.entry(*k).or_insert(0) += e * fp;
                }
                exps.retain(|_, e| *e != 0);
                let mut origin = p.origin.clone();
                origin.extend(n.origin.iter().copied());
                origin.sort();
                origin.dedup();
                rest.push(Ineq {
                    coef: p.coef.clone().pow(fnn as i32) * n.coef.clone().pow(fp as i32),
                    exps,
                    origin,
                });
            }
        }
        set = rest;
    }
    for q in &set {
        if q.coef <= qi(1) {
            return (Err(q.clone()), stages);
        }
    }
    stages.push(set);
    (Ok(()), stages)
}

fn ln_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    let shift = bits.saturating_sub(60);
    let top = to_f64(&Rational::from_integer(n >> shift));
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln x` for positive `x`, without overflowing on large terms.
fn ln_rational(x: &Rational) -> f64 {
    ln_bigint(x.numer()) - ln_bigint(x.denom())
}

/// A positive rational close to `e^l`: a short fraction when one fits,
/// otherwise the exact value of the float.
fn scale_near(l: f64, den: i64) -> Rational {
    let x = l.exp();
    if x.is_finite() && x > 1.0 / den as f64 && x < 1e12 {
        let r = rational_near(x, den);
        if r.is_positive() {
            return r;
        }
    }
    let e = l / std::f64::consts::LN_2;
    let whole = e.floor();
    let frac = Rational::from_f64((e - whole).exp2()).unwrap_or_else(|| qi(1));
    let p = Rational::from_integer(BigInt::one() << whole.abs() as usize);
    if whole >= 0.0 {
        frac * p
    } else {
        frac / p
    }
}

/// Picks log-scales satisfying every stage, from the last variable back.
fn back_substitute(stages: &[Vec<Ineq>], vars: &[usize]) -> BTreeMap<usize, f64> {
    let mut logs: BTreeMap<usize, f64> = BTreeMap::new();
    for (idx, &v) in vars.iter().enumerate().rev() {
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for q in &stages[idx] {
            let f = match q.exps.get(&v) {
                Some(&f) if f != 0 => f as f64,
                _ => continue,
            };
            let mut rest = ln_rational(&q.coef);
            for (k, e) in &q.exps {
                if *k != v {
                    rest += *e as f64 * logs.get(k).copied().unwrap_or(0.0);
                }
            }
            // rest + f·L > 0
            let bound = -rest / f;
            if f > 0.0 {
                lo = lo.max(bound);
            } else {
                hi = hi.min(bound);
            }
        }
        let l = match (lo.is_finite(), hi.is_finite()) {
            (true, true) => (lo + hi) / 2.0,
            (true, false) => lo + 1.0,
            (false, true) => hi - 1.0,
            _ => 0.0,
        };
        logs.insert(v, l);
    }
    logs
}

/// Decides whether the required pattern is realizable at the relabeled
/// centers.
pub fn tangency_realizability(inst: &RealizabilityInstance) -> Result<Realizability> {
    let n = inst.relabeled_centers.len();
    let centers = &inst.relabeled_centers;
    let names: Vec<String> = centers.iter().map(|c| format!("ρ({c})")).collect();
    let mut constraints = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let op = inst.required_pattern[i][j];
            let (a, b) = (&centers[i], &centers[j]);
            if a == b {
                if op != PairPattern::Disjoint {
                    let text = format!("{} and {} share the center {a}", names[i], names[j]);
                    return Ok(Realizability::Unsatisfiable(Certificate {
                        cycle: vec![format!("{} requires {}", text, op.name())],
                        contradiction: format!(
                            "horocycles centered at {a} are never {}",
                            op.name()
                        ),
                    }));
                }
                continue;
            }
            let c = match (a, b) {
                (BoundaryPoint::Infinity, _) | (_, BoundaryPoint::Infinity) => {
                    let (inf, p) = if a.is_infinity() { (i, j) } else { (j, i) };
                    // ρ(∞) vs 2ρ(p): disjoint means the line is higher
                    let op = match op {
                        PairPattern::Disjoint => PairPattern::Crossing,
                        PairPattern::Crossing => PairPattern::Disjoint,
                        t => t,
                    };
                    let rel = match op {
                        PairPattern::Tangent => "=",
                        PairPattern::Crossing => ">",
                        PairPattern::Disjoint => "<",
                    };
                    Constraint {
                        i: inf,
                        j: p,
                        s: -1,
                        k: qi(2),
                        op,
                        text: format!("{} {rel} 2·{}", names[inf], names[p]),
                    }
                }
                _ => {
                    let (p, q) = (a.as_rational().unwrap(), b.as_rational().unwrap());
                    let d2 = (p - q) * (p - q);
                    let rel = match op {
                        PairPattern::Tangent => "=",
                        PairPattern::Disjoint => "<",
                        PairPattern::Crossing => ">",
                    };
                    // disjoint: (p−q)² > 4ρρ, i.e. ρρ < (p−q)²/4
                    Constraint {
                        i,
                        j,
                        s: 1,
                        k: &d2 / qi(4),
                        op,
                        text: format!("4·{}·{} {rel} {}", names[i], names[j], fmt_rational(&d2)),
                    }
                }
            };
            constraints.push(c);
        }
    }
    // ratio equalities first, then products in index order
    let mut order: Vec<usize> = (0..constraints.len())
        .filter(|&k| constraints[k].op == PairPattern::Tangent)
        .collect();
    order.sort_by_key(|&k| {
        (
            constraints[k].s == 1,
            constraints[k].i.min(constraints[k].j),
            constraints[k].i.max(constraints[k].j),
        )
    });
    let mut solver = Solver {
        centers,
        expr: (0..n)
            .map(|v| Expr {
                root: v,
                coef: qi(1),
                exp: 1,
            })
            .collect(),
        fixed: vec![None; n],
        used: Vec::new(),
        constraints,
    };
    for idx in order {
        if let Err(bad) = solver.equality(idx) {
            return Ok(Realizability::Unsatisfiable(solver.certificate(bad)));
        }
    }
    // inequalities as C·∏u^f > 1, where "op" below means value (op) k:
    // Disjoint: value < k, Crossing: value > k
    let mut ineqs = Vec::new();
    for (idx, c) in solver.constraints.iter().enumerate() {
        if c.op == PairPattern::Tangent {
            continue;
        }
        let (ei, ej) = (&solver.expr[c.i], &solver.expr[c.j]);
        let coefs = &ei.coef * ej.coef.clone().pow(c.s as i32);
        let mut coef = &coefs * &coefs / (&c.k * &c.k);
        let mut exps: BTreeMap<usize, i64> = BTreeMap::new();
        for (root, e) in [(ei.root, ei.exp), (ej.root, c.s * ej.exp)] {
            match &solver.fixed[root] {
                Some(r) => coef = coef * r.clone().pow(e as i32),
                None => *exps.entry(root).or_insert(0) += e,
            }
        }
        exps.retain(|_, e| *e != 0);
        if c.op == PairPattern::Disjoint {
            coef = coef.recip();
            exps.values_mut().for_each(|e| *e = -*e);
        }
        ineqs.push(Ineq {
            coef,
            exps,
            origin: vec![idx],
        });
    }
    let vars: Vec<usize> = {
        let mut v: Vec<usize> = ineqs.iter().flat_map(|q| q.exps.keys().copied()).collect();
        v.sort();
        v.dedup();
        v
    };
    let (verdict, stages) = fourier_motzkin(ineqs.clone(), &vars);
    if let Err(bad) = verdict {
        let mut cycle: Vec<String> = solver
            .used
            .iter()
            .map(|&u| solver.constraints[u].text.clone())
            .collect();
        cycle.extend(
            bad.origin
                .iter()
                .map(|&o| solver.constraints[o].text.clone()),
        );
        let contradiction = if bad.origin.len() == 1 {
            let c = &solver.constraints[bad.origin[0]];
            let shown = solver.contradiction(c);
            shown.replace(
                '≠',
                match c.op {
                    PairPattern::Disjoint => "≤",
                    _ => "≥",
                },
            )
        } else {
            format!(
                "the inequalities combine to {} > 1",
                fmt_rational(&bad.coef)
            )
        };
        return Ok(Realizability::Unsatisfiable(Certificate {
            cycle,
            contradiction,
        }));
    }
    // choose rational scales for the free components and verify exactly
    let logs = back_substitute(&stages, &vars);
    for den in [1i64 << 10, 1 << 20, 1 << 40] {
        let mut chosen: BTreeMap<usize, Rational> = BTreeMap::new();
        for (v, l) in &logs {
            chosen.insert(*v, scale_near(l / 2.0, den));
        }
        let ok = ineqs.iter().all(|q| {
            let mut val = q.coef.clone();
            for (k, e) in &q.exps {
                let t = &chosen[k];
                val = val * (t * t).pow(*e as i32);
            }
            val > qi(1)
        });
        if ok {
            for (root, t) in &chosen {
                solver.fixed[*root] = Some(t * t);
            }
            for r in 0..n {
                if solver.fixed[r].is_none() {
                    solver.fixed[r] = Some(qi(1));
                }
            }
            let radii = (0..n).map(|v| solver.value(v)).collect();
            return Ok(Realizability::Satisfiable(radii));
        }
    }
    Err(Error::Indeterminate {
        reason: "feasible region too thin for rational scales".into(),
        candidates: "satisfiable".into(),
    })
}
