//! Constructors for the named graph families.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::drg::verify_drg;
use super::graph::Graph;
use crate::array::{parse_array, IntersectionArray};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum NamedGraphSpec {
    Hamming { d: usize, q: usize },
    Johnson { n: usize, m: usize },
    Hypercube { n: usize },
    HalvedCube { n: usize },
    FoldedCube { n: usize },
    Cycle { n: usize },
    Icosahedron,
    Gosset,
    Klein,
    Paley { q: usize },
    Triangular { n: usize },
    ComplementTriangular { n: usize },
}

pub const FAMILY_NAMES: [&str; 12] = [
    "hamming",
    "johnson",
    "hypercube",
    "halved_cube",
    "folded_cube",
    "cycle",
    "icosahedron",
    "gosset",
    "klein",
    "paley",
    "triangular",
    "complement_triangular",
];

impl NamedGraphSpec {
    /// Looks up a family by name; `params` are its integer parameters in
    /// the order of the constructor (e.g. `hamming 3,3`).
    pub fn parse(name: &str, params: &[usize]) -> Result<Self> {
        let want = |n: usize| -> Result<()> {
            if params.len() == n {
                Ok(())
            } else {
                Err(Error::GraphParams(format!("{name} takes {n} parameter(s), got {}", params.len())))
            }
        };
        let spec = match name.to_ascii_lowercase().replace('-', "_").as_str() {
            "hamming" => {
                want(2)?;
                NamedGraphSpec::Hamming { d: params[0], q: params[1] }
            }
            "johnson" => {
                want(2)?;
                NamedGraphSpec::Johnson { n: params[0], m: params[1] }
            }
            "hypercube" | "cube" => {
                want(1)?;
                NamedGraphSpec::Hypercube { n: params[0] }
            }
            "halved_cube" => {
                want(1)?;
                NamedGraphSpec::HalvedCube { n: params[0] }
            }
            "folded_cube" => {
                want(1)?;
                NamedGraphSpec::FoldedCube { n: params[0] }
            }
            "cycle" => {
                want(1)?;
                NamedGraphSpec::Cycle { n: params[0] }
            }
            "icosahedron" => {
                want(0)?;
                NamedGraphSpec::Icosahedron
            }
            "gosset" => {
                want(0)?;
                NamedGraphSpec::Gosset
            }
            "klein" => {
                want(0)?;
                NamedGraphSpec::Klein
            }
            "paley" => {
                want(1)?;
                NamedGraphSpec::Paley { q: params[0] }
            }
            "triangular" => {
                want(1)?;
                NamedGraphSpec::Triangular { n: params[0] }
            }
            "complement_triangular" | "gq22" => {
                want(1)?;
                NamedGraphSpec::ComplementTriangular { n: params[0] }
            }
            other => return Err(Error::GraphParams(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn family(&self) -> &'static str {
        match self {
            NamedGraphSpec::Hamming { .. } => "hamming",
            NamedGraphSpec::Johnson { .. } => "johnson",
            NamedGraphSpec::Hypercube { .. } => "hypercube",
            NamedGraphSpec::HalvedCube { .. } => "halved_cube",
            NamedGraphSpec::FoldedCube { .. } => "folded_cube",
            NamedGraphSpec::Cycle { .. } => "cycle",
            NamedGraphSpec::Icosahedron => "icosahedron",
            NamedGraphSpec::Gosset => "gosset",
            NamedGraphSpec::Klein => "klein",
            NamedGraphSpec::Paley { .. } => "paley",
            NamedGraphSpec::Triangular { .. } => "triangular",
            NamedGraphSpec::ComplementTriangular { .. } => "complement_triangular",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            NamedGraphSpec::Hamming { d, q } => vec![d, q],
            NamedGraphSpec::Johnson { n, m } => vec![n, m],
            NamedGraphSpec::Hypercube { n }
            | NamedGraphSpec::HalvedCube { n }
            | NamedGraphSpec::FoldedCube { n }
            | NamedGraphSpec::Cycle { n }
            | NamedGraphSpec::Triangular { n }
            | NamedGraphSpec::ComplementTriangular { n } => vec![n],
            NamedGraphSpec::Paley { q } => vec![q],
            NamedGraphSpec::Icosahedron | NamedGraphSpec::Gosset | NamedGraphSpec::Klein => vec![],
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::GraphParams(format!("{self}: {msg}")));
        match *self {
            NamedGraphSpec::Hamming { d, q } if d < 1 || q < 2 || q.checked_pow(d as u32).is_none_or(|v| v > 1 << 16) => {
                bad("need d >= 1, q >= 2 and q^d <= 65536")
            }
            NamedGraphSpec::Johnson { n, m } if m < 1 || 2 * m > n || n > 20 => bad("need 1 <= m <= n/2 and n <= 20"),
            NamedGraphSpec::Hypercube { n } if !(1..=16).contains(&n) => bad("need 1 <= n <= 16"),
            NamedGraphSpec::HalvedCube { n } if !(2..=16).contains(&n) => bad("need 2 <= n <= 16"),
            NamedGraphSpec::FoldedCube { n } if !(2..=17).contains(&n) => bad("need 2 <= n <= 17"),
            NamedGraphSpec::Cycle { n } if n < 3 => bad("need n >= 3"),
            NamedGraphSpec::Paley { q } if q % 4 != 1 || !is_prime(q) || q > 10_000 => {
                bad("need a prime q = 1 (mod 4), q <= 10000")
            }
            NamedGraphSpec::Triangular { n } | NamedGraphSpec::ComplementTriangular { n } if !(4..=40).contains(&n) => {
                bad("need 4 <= n <= 40")
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        Ok(match *self {
            NamedGraphSpec::Hamming { d, q } => hamming(d, q),
            NamedGraphSpec::Johnson { n, m } => johnson(n, m),
            NamedGraphSpec::Hypercube { n } => hamming(n, 2),
            NamedGraphSpec::HalvedCube { n } => halved_cube(n),
            NamedGraphSpec::FoldedCube { n } => folded_cube(n),
            NamedGraphSpec::Cycle { n } => Graph::from_fn(n, |u, v| v - u == 1 || (u == 0 && v == n - 1)),
            NamedGraphSpec::Icosahedron => icosahedron(),
            NamedGraphSpec::Gosset => gosset(),
            NamedGraphSpec::Klein => klein()?,
            NamedGraphSpec::Paley { q } => paley(q),
            NamedGraphSpec::Triangular { n } => johnson(n, 2),
            NamedGraphSpec::ComplementTriangular { n } => johnson(n, 2).complement(),
        })
    }

    /// The intersection array the construction is known to have.
    pub fn documented_array(&self) -> Option<IntersectionArray> {
        let s = match *self {
            NamedGraphSpec::Cycle { n } if n >= 3 => {
                let d = n / 2;
                let b: Vec<String> = (0..d).map(|i| if i == 0 { "2" } else { "1" }.to_string()).collect();
                let c: Vec<String> =
                    (1..=d).map(|i| if i == d && n % 2 == 0 { "2" } else { "1" }.to_string()).collect();
                format!("{};{}", b.join(","), c.join(","))
            }
            NamedGraphSpec::Hamming { d, q } => hamming_array(d, q),
            NamedGraphSpec::Hypercube { n } => hamming_array(n, 2),
            NamedGraphSpec::Johnson { n, m } => {
                let b: Vec<String> = (0..m).map(|i| ((m - i) * (n - m - i)).to_string()).collect();
                let c: Vec<String> = (1..=m).map(|i| (i * i).to_string()).collect();
                format!("{};{}", b.join(","), c.join(","))
            }
            NamedGraphSpec::Triangular { n } => format!("{},{};1,4", 2 * (n - 2), n - 3),
            NamedGraphSpec::HalvedCube { n } => {
                let d = n / 2;
                let b: Vec<String> = (0..d).map(|i| ((n - 2 * i) * (n - 2 * i - 1) / 2).to_string()).collect();
                let c: Vec<String> = (1..=d)
                    .map(|i| if i == d && n % 2 == 0 { n * (n - 1) / 2 } else { i * (2 * i - 1) }.to_string())
                    .collect();
                format!("{};{}", b.join(","), c.join(","))
            }
            NamedGraphSpec::FoldedCube { n } => {
                let d = n / 2;
                let b: Vec<String> = (0..d).map(|i| (n - i).to_string()).collect();
                let c: Vec<String> =
                    (1..=d).map(|i| if i == d && n % 2 == 0 { 2 * i } else { i }.to_string()).collect();
                format!("{};{}", b.join(","), c.join(","))
            }
            NamedGraphSpec::Icosahedron => "5,2,1;1,2,5".into(),
            NamedGraphSpec::Gosset => "27,10,1;1,10,27".into(),
            NamedGraphSpec::Klein => "7,4,1;1,2,7".into(),
            NamedGraphSpec::Paley { q } => format!("{},{};1,{}", (q - 1) / 2, (q - 1) / 4, (q - 1) / 4),
            NamedGraphSpec::ComplementTriangular { n } => {
                let k = (n - 2) * (n - 3) / 2;
                let lam = (n - 4) * (n - 5) / 2;
                let mu = (n - 3) * (n - 4) / 2;
                format!("{k},{};1,{mu}", k - lam - 1)
            }
            _ => return None,
        };
        parse_array(&s).ok()
    }
}

impl fmt::Display for NamedGraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.params();
        if p.is_empty() {
            write!(f, "{}", self.family())
        } else {
            let p: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            write!(f, "{}({})", self.family(), p.join(","))
        }
    }
}

fn hamming_array(d: usize, q: usize) -> String {
    let b: Vec<String> = (0..d).map(|i| ((d - i) * (q - 1)).to_string()).collect();
    let c: Vec<String> = (1..=d).map(|i| i.to_string()).collect();
    format!("{};{}", b.join(","), c.join(","))
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}

fn hamming(d: usize, q: usize) -> Graph {
    let n = q.pow(d as u32);
    let digits = |mut x: usize| {
        let mut v = vec![0; d];
        for slot in v.iter_mut() {
            *slot = x % q;
            x /= q;
        }
        v
    };
    let words: Vec<Vec<usize>> = (0..n).map(digits).collect();
    Graph::from_fn(n, |u, v| words[u].iter().zip(&words[v]).filter(|(a, b)| a != b).count() == 1)
}

fn subsets(n: usize, m: usize) -> Vec<u32> {
    (0u32..1 << n).filter(|x| x.count_ones() as usize == m).collect()
}

fn johnson(n: usize, m: usize) -> Graph {
    let s = subsets(n, m);
    Graph::from_fn(s.len(), |u, v| (s[u] & s[v]).count_ones() as usize == m - 1)
}

fn halved_cube(n: usize) -> Graph {
    let w: Vec<u32> = (0u32..1 << n).filter(|x| x.count_ones() % 2 == 0).collect();
    Graph::from_fn(w.len(), |u, v| (w[u] ^ w[v]).count_ones() == 2)
}

fn folded_cube(n: usize) -> Graph {
    // words of length n-1; the all-ones flip is the n-th generator
    let m = n - 1;
    let all = (1u32 << m) - 1;
    Graph::from_fn(1 << m, |u, v| {
        let x = (u ^ v) as u32;
        x.count_ones() == 1 || x == all
    })
}

fn icosahedron() -> Graph {
    // 0 = top, 1..=5 upper ring, 6..=10 lower ring, 11 = bottom
    let mut e = Vec::new();
    for i in 0..5 {
        let (u, u1) = (1 + i, 1 + (i + 1) % 5);
        let (l, l1) = (6 + i, 6 + (i + 1) % 5);
        e.extend([(0, u), (u, u1), (l, l1), (l, 11), (u, l), (u, l1)]);
    }
    Graph::from_edges(12, &e).expect("valid icosahedron edges")
}

fn gosset() -> Graph {
    // x_ij and y_ij for pairs i < j of an 8-set
    let pairs = subsets(8, 2);
    let n = pairs.len();
    Graph::from_fn(2 * n, |u, v| {
        let (p, q) = (pairs[u % n], pairs[v % n]);
        let same_side = (u < n) == (v < n);
        if same_side {
            (p & q).count_ones() == 1
        } else {
            p & q == 0
        }
    })
}

/// Nonzero vectors of `F_7^2` up to sign, under `PSL(2,7)`; adjacency is
/// `det(v, w) = ±d` for the first `d` giving the documented array.
fn klein() -> Result<Graph> {
    let mut pts: Vec<(i64, i64)> = Vec::new();
    for x in 0..7 {
        for y in 0..7 {
            if (x, y) == (0, 0) {
                continue;
            }
            let neg = ((7 - x) % 7, (7 - y) % 7);
            if !pts.contains(&neg) {
                pts.push((x, y));
            }
        }
    }
    let want = NamedGraphSpec::Klein.documented_array();
    for d in 1..=3 {
        let g = Graph::from_fn(pts.len(), |u, v| {
            let det = (pts[u].0 * pts[v].1 - pts[u].1 * pts[v].0).rem_euclid(7);
            det == d || det == 7 - d
        });
        if verify_drg(&g).ok().map(|c| c.array) == want {
            return Ok(g);
        }
    }
    Err(Error::NotDistanceRegular("no orbital graph of PSL(2,7) on 24 points has the Klein array".into()))
}

fn paley(q: usize) -> Graph {
    let mut square = vec![false; q];
    for x in 1..q {
        square[x * x % q] = true;
    }
    Graph::from_fn(q, |u, v| square[(v - u) % q])
}

/// The Taylor graph with local graph `local`: two apexes, two copies of the
/// local graph, and `x ~ y'` whenever `x != y` are non-adjacent.
pub fn taylor_from_local(local: &Graph) -> Result<Graph> {
    let n = local.n();
    let k = local.regular_degree().ok_or_else(|| Error::GraphParams("local graph is not regular".into()))?;
    if n == 0 || 2 * k >= n {
        return Err(Error::GraphParams("local graph must be non-empty with valency below n/2".into()));
    }
    // 0 = apex, 1..=n copy, n+1..=2n second copy, 2n+1 = second apex
    let g = Graph::from_fn(2 * n + 2, |u, v| {
        let side = |x: usize| if x == 0 { 0 } else if x <= n { 1 } else if x <= 2 * n { 2 } else { 3 };
        let idx = |x: usize| if x <= n { x - 1 } else { x - n - 1 };
        match (side(u), side(v)) {
            (0, 1) | (2, 3) => true,
            (1, 1) | (2, 2) => local.adjacent(idx(u), idx(v)),
            (1, 2) => idx(u) != idx(v) && !local.adjacent(idx(u), idx(v)),
            _ => false,
        }
    });
    verify_drg(&g)?;
    Ok(g)
}

/// The atlas: every named graph with its documented array.
pub fn atlas() -> Vec<NamedGraphSpec> {
    vec![
        NamedGraphSpec::Cycle { n: 6 },
        NamedGraphSpec::Hypercube { n: 3 },
        NamedGraphSpec::Icosahedron,
        NamedGraphSpec::Johnson { n: 6, m: 3 },
        NamedGraphSpec::Johnson { n: 7, m: 3 },
        NamedGraphSpec::Hamming { d: 3, q: 3 },
        NamedGraphSpec::Hamming { d: 3, q: 4 },
        NamedGraphSpec::HalvedCube { n: 6 },
        NamedGraphSpec::HalvedCube { n: 7 },
        NamedGraphSpec::FoldedCube { n: 5 },
        NamedGraphSpec::Gosset,
        NamedGraphSpec::Klein,
        NamedGraphSpec::Paley { q: 13 },
        NamedGraphSpec::Paley { q: 17 },
        NamedGraphSpec::Triangular { n: 6 },
        NamedGraphSpec::ComplementTriangular { n: 6 },
    ]
}
