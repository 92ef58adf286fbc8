//! Exact clique, coclique and claw search by branch and bound.

use serde::Serialize;

use super::graph::{Bits, Graph};

/// Greedy colouring of `p`: vertices in colour order with the colour count
/// reached so far (an upper bound on the clique number of each prefix).
fn colour_sort(g: &Graph, p: &Bits) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(p.len());
    let mut uncoloured = p.clone();
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = q.first() {
            uncoloured.remove(v);
            q.remove(v);
            q = q.and_not(g.neighbors(v));
            out.push((v, colour));
        }
    }
    out
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    /// Stop as soon as a clique of this size is found.
    target: Option<usize>,
}

impl Search<'_> {
    fn expand(&mut self, r: &mut Vec<usize>, mut p: Bits) -> bool {
        let order = colour_sort(self.g, &p);
        for &(v, colour) in order.iter().rev() {
            if r.len() + colour <= self.best.len() {
                return false;
            }
            r.push(v);
            let np = p.and(self.g.neighbors(v));
            if np.is_empty() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                    if self.target.is_some_and(|t| self.best.len() >= t) {
                        return true;
                    }
                }
            } else if self.expand(r, np) {
                return true;
            }
            r.pop();
            p.remove(v);
        }
        false
    }
}

fn search(g: &Graph, target: Option<usize>) -> Vec<usize> {
    let mut s = Search { g, best: Vec::new(), target };
    if g.n() > 0 {
        s.expand(&mut Vec::new(), Bits::full(g.n()));
    }
    let mut best = s.best;
    best.sort_unstable();
    best
}

/// A maximum clique (sorted vertex list).
pub fn max_clique(g: &Graph) -> Vec<usize> {
    search(g, None)
}

/// A maximum coclique (sorted vertex list).
pub fn max_coclique(g: &Graph) -> Vec<usize> {
    max_clique(&g.complement())
}

/// A clique of size `t`, if one exists.
pub fn find_clique(g: &Graph, t: usize) -> Option<Vec<usize>> {
    if t == 0 {
        return Some(Vec::new());
    }
    let c = search(g, Some(t));
    (c.len() >= t).then(|| c[..t].to_vec())
}

/// An independent set of size `t`, if one exists.
pub fn find_coclique(g: &Graph, t: usize) -> Option<Vec<usize>> {
    find_clique(&g.complement(), t)
}

/// An induced `K_{1,t}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClawWitness {
    pub center: usize,
    pub leaves: Vec<usize>,
}

/// The first `t`-claw in vertex order: a `t`-coclique in some local graph.
pub fn find_claw(g: &Graph, t: usize) -> Option<ClawWitness> {
    (0..g.n()).find_map(|x| {
        let vs: Vec<usize> = g.neighbors(x).iter().collect();
        if vs.len() < t {
            return None;
        }
        let local = g.induced(&vs);
        find_coclique(&local, t).map(|c| ClawWitness { center: x, leaves: c.iter().map(|&i| vs[i]).collect() })
    })
}

/// All cliques with exactly `s` vertices, each sorted, in lexicographic order.
pub fn cliques_of_size(g: &Graph, s: usize) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, s: usize, r: &mut Vec<usize>, cand: Bits, out: &mut Vec<Vec<usize>>) {
        if r.len() == s {
            out.push(r.clone());
            return;
        }
        if r.len() + cand.len() < s {
            return;
        }
        let mut cand = cand;
        while let Some(v) = cand.first() {
            cand.remove(v);
            if r.len() + 1 + cand.len() < s {
                break;
            }
            r.push(v);
            rec(g, s, r, cand.and(g.neighbors(v)), out);
            r.pop();
        }
    }
    let mut out = Vec::new();
    if s > 0 {
        rec(g, s, &mut Vec::new(), Bits::full(g.n()), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        // Kneser graph K(5,2)
        let pairs: Vec<u32> = (0u32..32).filter(|x| x.count_ones() == 2).collect();
        Graph::from_fn(10, |u, v| pairs[u] & pairs[v] == 0)
    }

    #[test]
    fn petersen_numbers() {
        let g = petersen();
        assert_eq!(max_clique(&g).len(), 2);
        assert_eq!(max_coclique(&g).len(), 4);
        assert!(find_claw(&g, 3).is_some());
        assert!(find_claw(&g, 4).is_none());
        assert_eq!(cliques_of_size(&g, 2).len(), 15);
        assert!(cliques_of_size(&g, 3).is_empty());
    }

    #[test]
    fn complete_graph() {
        let g = Graph::from_fn(7, |_, _| true);
        assert_eq!(max_clique(&g), (0..7).collect::<Vec<_>>());
        assert_eq!(cliques_of_size(&g, 3).len(), 35);
        assert_eq!(find_clique(&g, 4), Some(vec![0, 1, 2, 3]));
    }
}
