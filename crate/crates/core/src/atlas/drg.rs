//! From-scratch verification of distance-regularity and related counts.

use serde::Serialize;

use super::graph::Graph;
use crate::array::IntersectionArray;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DrgCertificate {
    pub array: IntersectionArray,
    pub diameter: usize,
    pub v: usize,
    /// Number of vertices at distance `i` from any vertex.
    pub k_i: Vec<usize>,
}

/// Checks that `c_i`, `a_i`, `b_i` are constant over all ordered pairs at
/// distance `i`, and returns the intersection array.
pub fn verify_drg(g: &Graph) -> Result<DrgCertificate> {
    let n = g.n();
    if n == 0 {
        return Err(Error::GraphParams("empty graph".into()));
    }
    let dist = g.distance_matrix()?;
    let diameter = dist.iter().flatten().copied().max().unwrap_or(0);
    if diameter == 0 {
        return Err(Error::NotDistanceRegular("single vertex".into()));
    }
    let mut c: Vec<Option<usize>> = vec![None; diameter + 1];
    let mut b: Vec<Option<usize>> = vec![None; diameter + 1];
    let mut a: Vec<Option<usize>> = vec![None; diameter + 1];
    for x in 0..n {
        for y in 0..n {
            let i = dist[x][y];
            let (mut ci, mut ai, mut bi) = (0, 0, 0);
            for z in g.neighbors(y).iter() {
                match dist[x][z] as isize - i as isize {
                    -1 => ci += 1,
                    0 => ai += 1,
                    _ => bi += 1,
                }
            }
            for (slot, val, name) in [(&mut c[i], ci, "c"), (&mut a[i], ai, "a"), (&mut b[i], bi, "b")] {
                match *slot {
                    None => *slot = Some(val),
                    Some(prev) if prev != val => {
                        return Err(Error::NotDistanceRegular(format!(
                            "pair ({x}, {y}) at distance {i} has {name}{i} = {val}, other pairs have {prev}"
                        )))
                    }
                    _ => {}
                }
            }
        }
    }
    let bs: Vec<i64> = (0..diameter).map(|i| b[i].unwrap_or(0) as i64).collect();
    let cs: Vec<i64> = (1..=diameter).map(|i| c[i].unwrap_or(0) as i64).collect();
    let array = IntersectionArray::new(bs, cs)?;
    let k_i = (0..=diameter).map(|i| dist[0].iter().filter(|&&d| d == i).count()).collect();
    Ok(DrgCertificate { array, diameter, v: n, k_i })
}

/// `p[h][i][j]` counted directly, checked constant over all pairs at distance `h`.
pub fn brute_p_numbers(g: &Graph) -> Result<Vec<Vec<Vec<i64>>>> {
    let dist = g.distance_matrix()?;
    let n = g.n();
    let d = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut p: Vec<Vec<Vec<Option<i64>>>> = vec![vec![vec![None; d + 1]; d + 1]; d + 1];
    let mut counts = vec![vec![0i64; d + 1]; d + 1];
    for x in 0..n {
        for y in 0..n {
            let h = dist[x][y];
            for row in counts.iter_mut() {
                row.fill(0);
            }
            for z in 0..n {
                counts[dist[x][z]][dist[y][z]] += 1;
            }
            for i in 0..=d {
                for j in 0..=d {
                    match p[h][i][j] {
                        None => p[h][i][j] = Some(counts[i][j]),
                        Some(prev) if prev != counts[i][j] => {
                            return Err(Error::NotDistanceRegular(format!(
                                "p^{h}_{{{i}{j}}} is {prev} and {} for pair ({x}, {y})",
                                counts[i][j]
                            )))
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    Ok(p.into_iter()
        .map(|m| m.into_iter().map(|r| r.into_iter().map(|x| x.unwrap_or(0)).collect()).collect())
        .collect())
}

/// The local graph of `x` and the original labels of its vertices.
pub fn local_graph(g: &Graph, x: usize) -> (Graph, Vec<usize>) {
    let vs: Vec<usize> = g.neighbors(x).iter().collect();
    (g.induced(&vs), vs)
}

/// `(v, k, λ, μ)` when the graph is strongly regular (connected, diameter 2).
pub fn srg_params(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let k = g.regular_degree()?;
    let n = g.n();
    let (mut lam, mut mu) = (None, None);
    for x in 0..n {
        for y in x + 1..n {
            let common = g.neighbors(x).and_count(g.neighbors(y));
            let slot = if g.adjacent(x, y) { &mut lam } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(p) if p != common => return None,
                _ => {}
            }
        }
    }
    Some((n, k, lam.unwrap_or(0), mu?))
}

/// `min |Γ(x) ∩ Γ(y) ∩ Γ(z)|` over `y, z ∈ Γ(x)` with `∂(y, z) = 2`.
pub fn mu_min(g: &Graph) -> Result<usize> {
    let mut best: Option<usize> = None;
    for x in 0..g.n() {
        let nx = g.neighbors(x);
        let vs: Vec<usize> = nx.iter().collect();
        for (i, &y) in vs.iter().enumerate() {
            for &z in &vs[i + 1..] {
                if g.adjacent(y, z) {
                    continue;
                }
                let c = nx.and(g.neighbors(y)).and_count(g.neighbors(z));
                best = Some(best.map_or(c, |b: usize| b.min(c)));
            }
        }
    }
    best.ok_or(Error::LocallyComplete)
}

/// An induced quadrangle `x, y, z, w` (cycle order), if any.
pub fn find_quadrangle(g: &Graph) -> Option<[usize; 4]> {
    for x in 0..g.n() {
        for z in x + 1..g.n() {
            if g.adjacent(x, z) {
                continue;
            }
            let common: Vec<usize> = g.neighbors(x).and(g.neighbors(z)).iter().collect();
            for (i, &y) in common.iter().enumerate() {
                if let Some(&w) = common[i + 1..].iter().find(|&&w| !g.adjacent(y, w)) {
                    return Some([x, y, z, w]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chorded_square_is_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let e = verify_drg(&g).unwrap_err();
        assert!(matches!(e, Error::NotDistanceRegular(_)), "{e}");
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(verify_drg(&g), Err(Error::Disconnected)));
    }
}
