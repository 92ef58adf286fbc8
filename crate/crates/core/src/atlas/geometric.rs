//! Delsarte-clique covers.

use serde::Serialize;

use super::cliques::cliques_of_size;
use super::drg::DrgCertificate;
use super::graph::Graph;
use crate::spectral::{spectrum, DEFAULT_TOL};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum GeometricVerdict {
    /// Delsarte cliques covering every edge exactly once.
    Geometric { clique_size: usize, cover: Vec<Vec<usize>> },
    NotGeometric { reason: String },
}

impl GeometricVerdict {
    pub fn is_geometric(&self) -> bool {
        matches!(self, GeometricVerdict::Geometric { .. })
    }
}

/// Searches for a set of Delsarte cliques partitioning the edge set.
pub fn is_geometric(g: &Graph, cert: &DrgCertificate) -> GeometricVerdict {
    let no = |r: &str| GeometricVerdict::NotGeometric { reason: r.to_string() };
    let spec = match spectrum(&cert.array, DEFAULT_TOL) {
        Ok(s) => s,
        Err(e) => return no(&format!("spectrum unavailable: {e}")),
    };
    let Some(theta) = spec.theta_min().as_int() else {
        return no("irrational smallest eigenvalue");
    };
    let k = cert.array.k();
    if theta >= 0 || k % theta != 0 {
        return no(&format!("Delsarte bound 1 + {k}/{} is not an integer", -theta));
    }
    let s = (1 + k / -theta) as usize;
    let cliques = cliques_of_size(g, s);
    if cliques.is_empty() {
        return no(&format!("no clique of Delsarte size {s}"));
    }
    let n = g.n();
    let mut edge_id = vec![usize::MAX; n * n];
    for (i, (u, v)) in g.edges().into_iter().enumerate() {
        edge_id[u * n + v] = i;
        edge_id[v * n + u] = i;
    }
    let m = g.edge_count();
    let clique_edges: Vec<Vec<usize>> = cliques
        .iter()
        .map(|c| {
            let mut e = Vec::new();
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    e.push(edge_id[u * n + v]);
                }
            }
            e
        })
        .collect();
    let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (ci, es) in clique_edges.iter().enumerate() {
        for &e in es {
            by_edge[e].push(ci);
        }
    }
    if let Some(e) = by_edge.iter().position(Vec::is_empty) {
        let (u, v) = g.edges()[e];
        return no(&format!("edge ({u}, {v}) lies in no Delsarte clique"));
    }
    let mut covered = vec![false; m];
    let mut chosen = Vec::new();
    if exact_cover(&clique_edges, &by_edge, &mut covered, &mut chosen) {
        let cover = chosen.into_iter().map(|i| cliques[i].clone()).collect();
        GeometricVerdict::Geometric { clique_size: s, cover }
    } else {
        no("Delsarte cliques admit no edge partition")
    }
}

fn exact_cover(cl: &[Vec<usize>], by_edge: &[Vec<usize>], covered: &mut [bool], chosen: &mut Vec<usize>) -> bool {
    // branch on the uncovered edge with fewest usable cliques
    let mut pick: Option<(usize, usize)> = None;
    for (e, cs) in by_edge.iter().enumerate() {
        if covered[e] {
            continue;
        }
        let usable = cs.iter().filter(|&&c| cl[c].iter().all(|&x| !covered[x])).count();
        if usable == 0 {
            return false;
        }
        if pick.is_none_or(|(_, u)| usable < u) {
            pick = Some((e, usable));
        }
    }
    let Some((e, _)) = pick else {
        return true;
    };
    for &c in &by_edge[e] {
        if cl[c].iter().any(|&x| covered[x]) {
            continue;
        }
        for &x in &cl[c] {
            covered[x] = true;
        }
        chosen.push(c);
        if exact_cover(cl, by_edge, covered, chosen) {
            return true;
        }
        chosen.pop();
        for &x in &cl[c] {
            covered[x] = false;
        }
    }
    false
}
