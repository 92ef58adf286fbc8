//! Library results checked against independent computations: a symmetric
//! eigensolver, brute-force counts on concrete graphs, and exact identities.

use drg_core::atlas::{
    atlas, brute_p_numbers, find_claw, is_geometric, local_graph, max_clique, max_coclique, mu_min, srg_params,
    taylor_from_local, verify_drg, Graph, GeometricVerdict, NamedGraphSpec,
};
use drg_core::bounds::delsarte_bound;
use drg_core::feasibility::p_tensor;
use drg_core::poly::q;
use drg_core::spectral::{spectrum, taylor_spectrum, trace_check, DEFAULT_TOL};
use drg_core::{parse_array, IntersectionArray};
use nalgebra::DMatrix;
use proptest::prelude::*;

/// Symmetrised tridiagonal matrix `diag(a_i)`, off-diagonal `sqrt(b_i c_{i+1})`.
fn symmetric_eigen(a: &IntersectionArray) -> (Vec<f64>, DMatrix<f64>) {
    let d = a.diameter();
    let m = DMatrix::from_fn(d + 1, d + 1, |i, j| {
        if i == j {
            a.a(i) as f64
        } else if j == i + 1 {
            ((a.b(i) * a.c(i + 1)) as f64).sqrt()
        } else if i == j + 1 {
            ((a.b(j) * a.c(j + 1)) as f64).sqrt()
        } else {
            0.0
        }
    });
    let e = m.symmetric_eigen();
    (e.eigenvalues.iter().copied().collect(), e.eigenvectors)
}

fn arrays() -> impl Strategy<Value = IntersectionArray> {
    (2usize..=4, 2i64..=30)
        .prop_flat_map(|(d, k)| (Just(k), prop::collection::vec(1..=k, d - 1), prop::collection::vec(1..=k, d - 1)))
        .prop_filter_map("admissible", |(k, mut bs, mut cs)| {
            bs.sort_unstable_by(|x, y| y.cmp(x));
            cs.sort_unstable();
            let b = std::iter::once(k).chain(bs).collect();
            let c = std::iter::once(1).chain(cs).collect();
            IntersectionArray::new(b, c).ok().filter(|a| a.is_admissible())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn eigenvalues_match_symmetric_solver(a in arrays()) {
        let s = spectrum(&a, DEFAULT_TOL).unwrap();
        let (mut ev, vecs) = symmetric_eigen(&a);
        let mut order: Vec<usize> = (0..ev.len()).collect();
        order.sort_by(|&i, &j| ev[j].total_cmp(&ev[i]));
        ev = order.iter().map(|&i| ev[i]).collect();
        let v = a.derive().unwrap().v;
        let v = v.numer().to_string().parse::<f64>().unwrap() / v.denom().to_string().parse::<f64>().unwrap();
        prop_assert_eq!(s.len(), ev.len());
        for (i, &oi) in order.iter().enumerate() {
            let tol = 1e-8 * a.k() as f64;
            prop_assert!((s.theta(i).to_f64() - ev[i]).abs() < tol, "{} vs {}", s.theta(i), ev[i]);
            // m(θ) = v w_0^2 for the unit eigenvector w
            let m = v * vecs[(0, oi)] * vecs[(0, oi)];
            prop_assert!((s.m(i).to_f64() - m).abs() < 1e-6 * m.max(1.0), "m {} vs {}", s.m(i), m);
        }
    }

    #[test]
    fn closed_walk_identities(a in arrays()) {
        let s = spectrum(&a, DEFAULT_TOL).unwrap();
        let t = trace_check(&a, &s, 3).unwrap();
        prop_assert!(t.pass, "{:?}", t);
    }

    #[test]
    fn p_numbers_sum_to_valencies(a in arrays()) {
        let p = p_tensor(&a).unwrap();
        let dp = a.derive().unwrap();
        let d = a.diameter();
        for h in 0..=d {
            for i in 0..=d {
                let row = (0..=d).fold(q(0), |s, j| s + p.get(h, i, j));
                prop_assert_eq!(&row, &dp.k_i[i], "h={} i={}", h, i);
            }
        }
        for i in 0..=d {
            prop_assert_eq!(p.get(0, i, i), &dp.k_i[i]);
        }
    }

    #[test]
    fn display_parse_round_trip(a in arrays()) {
        prop_assert_eq!(parse_array(&a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(parse_array(&format!("{{{a}}}")).unwrap(), a);
    }
}

fn p_numbers_agree(g: &Graph, a: &IntersectionArray) -> bool {
    let brute = brute_p_numbers(g).unwrap();
    let p = p_tensor(a).unwrap();
    let d = a.diameter();
    (0..=d).all(|h| (0..=d).all(|i| (0..=d).all(|j| *p.get(h, i, j) == q(brute[h][i][j]))))
}

fn taylor_graphs() -> Vec<(Graph, Graph)> {
    [5, 9, 13, 17]
        .iter()
        .map(|&p| {
            let local = if p == 9 {
                // Paley(9) = 3x3 rook's graph
                NamedGraphSpec::Hamming { d: 2, q: 3 }.build().unwrap()
            } else {
                NamedGraphSpec::Paley { q: p }.build().unwrap()
            };
            (taylor_from_local(&local).unwrap(), local)
        })
        .collect()
}

#[test]
fn atlas_p_numbers_and_delsarte() {
    for spec in atlas() {
        let g = spec.build().unwrap();
        let a = spec.documented_array().unwrap();
        assert_eq!(verify_drg(&g).unwrap().array, a, "{spec}");
        assert!(p_numbers_agree(&g, &a), "{spec}");
        let s = spectrum(&a, DEFAULT_TOL).unwrap();
        if s.theta_min().cmp_int(-1).is_lt() {
            let b = delsarte_bound(a.k(), s.theta_min()).unwrap().floor();
            assert!(max_clique(&g).len() as i64 <= b, "{spec}");
        }
    }
}

#[test]
fn taylor_graphs_from_local_graphs() {
    for (g, local) in taylor_graphs() {
        let (n, k, _, _) = srg_params(&local).unwrap();
        let a = verify_drg(&g).unwrap().array;
        // a1 = k, so c2 = b1 = n - k - 1
        let c2 = (n - k - 1) as i64;
        assert_eq!(a, IntersectionArray::taylor(n as i64, c2).unwrap());
        assert!(p_numbers_agree(&g, &a));
        assert_eq!(taylor_spectrum(n as i64, c2).unwrap(), spectrum(&a, DEFAULT_TOL).unwrap());
        // every local graph is the original strongly regular graph
        for x in 0..g.n() {
            assert_eq!(srg_params(&local_graph(&g, x).0), srg_params(&local));
        }
    }
}

#[test]
fn claw_witnesses_and_local_cocliques() {
    let mut graphs: Vec<Graph> = atlas().iter().map(|s| s.build().unwrap()).collect();
    graphs.extend(taylor_graphs().into_iter().map(|(g, _)| g));
    for g in &graphs {
        // brute oracle: largest coclique over all local graphs
        let alpha = (0..g.n()).map(|x| max_coclique(&local_graph(g, x).0).len()).max().unwrap();
        for t in 2..=5 {
            match find_claw(g, t) {
                Some(w) => {
                    assert!(t <= alpha);
                    assert_eq!(w.leaves.len(), t);
                    for (i, &u) in w.leaves.iter().enumerate() {
                        assert!(g.adjacent(w.center, u));
                        assert!(w.leaves[i + 1..].iter().all(|&v| !g.adjacent(u, v)));
                    }
                }
                None => assert!(t > alpha),
            }
        }
    }
}

#[test]
fn geometric_covers_partition_the_edges() {
    for spec in [NamedGraphSpec::Hamming { d: 3, q: 3 }, NamedGraphSpec::Johnson { n: 6, m: 3 }] {
        let g = spec.build().unwrap();
        let cert = verify_drg(&g).unwrap();
        let GeometricVerdict::Geometric { clique_size, cover } = is_geometric(&g, &cert) else {
            panic!("{spec} should be geometric");
        };
        let mut covered = vec![vec![0u32; g.n()]; g.n()];
        for c in &cover {
            assert_eq!(c.len(), clique_size);
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    assert!(g.adjacent(u, v));
                    covered[u][v] += 1;
                }
            }
        }
        for (u, v) in g.edges() {
            assert_eq!(covered[u.min(v)][u.max(v)], 1, "{spec}: edge {u}-{v}");
        }
    }
    let ico = NamedGraphSpec::Icosahedron.build().unwrap();
    assert!(!is_geometric(&ico, &verify_drg(&ico).unwrap()).is_geometric());
}

#[test]
fn mu_min_by_enumeration() {
    let brute = |g: &Graph| {
        let mut best = usize::MAX;
        for x in 0..g.n() {
            for y in 0..g.n() {
                for z in y + 1..g.n() {
                    if g.adjacent(x, y) && g.adjacent(x, z) && !g.adjacent(y, z) {
                        let c = (0..g.n()).filter(|&w| g.adjacent(w, x) && g.adjacent(w, y) && g.adjacent(w, z)).count();
                        best = best.min(c);
                    }
                }
            }
        }
        best
    };
    for spec in [
        NamedGraphSpec::Cycle { n: 6 },
        NamedGraphSpec::Icosahedron,
        NamedGraphSpec::Johnson { n: 6, m: 3 },
        NamedGraphSpec::HalvedCube { n: 6 },
    ] {
        let g = spec.build().unwrap();
        assert_eq!(mu_min(&g).unwrap(), brute(&g), "{spec}");
    }
    assert_eq!(mu_min(&NamedGraphSpec::Cycle { n: 6 }.build().unwrap()).unwrap(), 0);
    // the local graph is a pentagon: non-adjacent vertices share one neighbour
    assert_eq!(mu_min(&NamedGraphSpec::Icosahedron.build().unwrap()).unwrap(), 1);
}
