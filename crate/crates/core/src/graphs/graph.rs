//! Finite disjointness graphs and their automorphisms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::model::curve::{Curve, CurveKind};
use crate::predicates::pattern::intersection_pattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    Geodesic,
    Horocycle,
    Hypercycle,
    Mixed,
}

impl GraphClass {
    fn of(kind: CurveKind) -> Self {
        match kind {
            CurveKind::Geodesic => GraphClass::Geodesic,
            CurveKind::Horocycle => GraphClass::Horocycle,
            CurveKind::Hypercycle => GraphClass::Hypercycle,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Geodesic => "geodesic",
            GraphClass::Horocycle => "horocycle",
            GraphClass::Hypercycle => "hypercycle",
            GraphClass::Mixed => "mixed",
        }
    }
}

/// Vertices are curves; edges join curves disjoint in the open half-plane.
#[derive(Clone, Debug, PartialEq)]
pub struct DisjointnessGraph {
    pub curves: Vec<Curve>,
    pub adjacency: Vec<Vec<bool>>,
    pub class: GraphClass,
}

/// Graphs larger than this are refused by [`automorphisms`].
pub const MAX_AUTOMORPHISM_VERTICES: usize = 16;

pub fn build_graph(curves: &[Curve]) -> Result<DisjointnessGraph> {
    build_graph_with(curves, false)
}

/// [`build_graph`], optionally accepting curves of different kinds.
pub fn build_graph_with(curves: &[Curve], allow_mixed: bool) -> Result<DisjointnessGraph> {
    let n = curves.len();
    for i in 0..n {
        for j in i + 1..n {
            if curves[i] == curves[j] {
                return invalid(format!("curves {i} and {j} are both {}", curves[i]));
            }
        }
    }
    let class = match curves.first() {
        None => GraphClass::Mixed,
        Some(c) => {
            if curves.iter().all(|d| d.kind() == c.kind()) {
                GraphClass::of(c.kind())
            } else if allow_mixed {
                GraphClass::Mixed
            } else {
                return invalid("curves of different kinds; mixed graphs must be requested");
            }
        }
    };
    let mut adjacency = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let e = intersection_pattern(&curves[i], &curves[j]).interior_count == 0;
            adjacency[i][j] = e;
            adjacency[j][i] = e;
        }
    }
    Ok(DisjointnessGraph {
        curves: curves.to_vec(),
        adjacency,
        class,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub class: GraphClass,
    pub curves: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl DisjointnessGraph {
    /// A graph given only by its adjacency matrix, with no curves attached.
    pub fn abstract_graph(adjacency: Vec<Vec<bool>>) -> Result<Self> {
        let n = adjacency.len();
        for i in 0..n {
            if adjacency[i].len() != n || adjacency[i][i] {
                return invalid("adjacency must be square with an empty diagonal");
            }
            for j in 0..n {
                if adjacency[i][j] != adjacency[j][i] {
                    return invalid(format!("adjacency is not symmetric at ({i}, {j})"));
                }
            }
        }
        Ok(DisjointnessGraph {
            curves: Vec::new(),
            adjacency,
            class: GraphClass::Mixed,
        })
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.adjacency[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].iter().filter(|&&e| e).count()
    }

    pub fn to_record(&self) -> GraphRecord {
        GraphRecord {
            class: self.class,
            curves: self.curves.iter().map(|c| c.to_text()).collect(),
            edges: self.edges(),
        }
    }

    pub fn from_record(r: &GraphRecord) -> Result<Self> {
        let curves = r
            .curves
            .iter()
            .map(|s| Curve::parse_text(s))
            .collect::<Result<Vec<_>>>()?;
        let g = build_graph_with(&curves, r.class == GraphClass::Mixed)?;
        let mut edges = r.edges.clone();
        edges.sort();
        if edges != g.edges() {
            return invalid("recorded edges disagree with the curves");
        }
        Ok(g)
    }

    /// Adjacency lists, one vertex per line: `i: j k ...`.
    pub fn to_text(&self) -> String {
        let mut s = format!("# {} graph, {} vertices\n", self.class.name(), self.len());
        for (i, c) in self.curves.iter().enumerate() {
            s.push_str(&format!("v {i} {}\n", c.to_text()));
        }
        for i in 0..self.len() {
            let nb: Vec<String> = (0..self.len())
                .filter(|&j| self.adjacency[i][j])
                .map(|j| j.to_string())
                .collect();
            s.push_str(&format!("{i}: {}\n", nb.join(" ")));
        }
        s
    }

    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.len();
        if perm.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        (0..n).all(|i| (0..n).all(|j| self.adjacency[i][j] == self.adjacency[perm[i]][perm[j]]))
    }
}

impl fmt::Display for DisjointnessGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// A vertex permutation: vertex `i` goes to `perm[i]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GraphAutomorphism {
    pub perm: Vec<usize>,
}

impl GraphAutomorphism {
    pub fn identity(n: usize) -> Self {
        GraphAutomorphism {
            perm: (0..n).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &GraphAutomorphism) -> GraphAutomorphism {
        GraphAutomorphism {
            perm: other.perm.iter().map(|&i| self.perm[i]).collect(),
        }
    }

    pub fn inverse(&self) -> GraphAutomorphism {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        GraphAutomorphism { perm: inv }
    }
}

impl fmt::Display for GraphAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.perm.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Every automorphism, in lexicographic order of the permutation.
///
/// Backtracking assigns vertices in order; a candidate image must have the
/// same degree and the same sorted neighbour-degree profile and must agree
/// with every assignment made so far.
pub fn automorphisms(g: &DisjointnessGraph, cap: usize) -> Result<Vec<GraphAutomorphism>> {
    let n = g.len();
    if n > MAX_AUTOMORPHISM_VERTICES {
        return Err(Error::TooLarge {
            size: n,
            limit: MAX_AUTOMORPHISM_VERTICES,
        });
    }
    let profile = |v: usize| {
        let mut d: Vec<usize> = (0..n)
            .filter(|&u| g.adjacency[v][u])
            .map(|u| g.degree(u))
            .collect();
        d.sort();
        (g.degree(v), d)
    };
    let profiles: Vec<_> = (0..n).map(profile).collect();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        v: usize,
        g: &DisjointnessGraph,
        profiles: &[(usize, Vec<usize>)],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<GraphAutomorphism>,
        cap: usize,
    ) -> Result<()> {
        let n = perm.len();
        if v == n {
            if out.len() == cap {
                return Err(Error::CapExceeded {
                    cap,
                    found: out.len(),
                });
            }
            out.push(GraphAutomorphism { perm: perm.clone() });
            return Ok(());
        }
        for w in 0..n {
            if used[w] || profiles[w] != profiles[v] {
                continue;
            }
            if (0..v).any(|u| g.adjacency[u][v] != g.adjacency[perm[u]][w]) {
                continue;
            }
            perm[v] = w;
            used[w] = true;
            go(v + 1, g, profiles, perm, used, out, cap)?;
            used[w] = false;
        }
        perm[v] = usize::MAX;
        Ok(())
    }
    go(0, g, &profiles, &mut perm, &mut used, &mut out, cap)?;
    Ok(out)
}
