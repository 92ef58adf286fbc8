//! Delsarte-clique covers of a few graphs.

use drg_core::atlas::{is_geometric, verify_drg, GeometricVerdict, NamedGraphSpec};

fn main() -> drg_core::Result<()> {
    let graphs = [
        NamedGraphSpec::Hamming { d: 3, q: 3 },
        NamedGraphSpec::Johnson { n: 6, m: 3 },
        NamedGraphSpec::Icosahedron,
        NamedGraphSpec::HalvedCube { n: 6 },
    ];
    for spec in graphs {
        let g = spec.build()?;
        let cert = verify_drg(&g)?;
        match is_geometric(&g, &cert) {
            GeometricVerdict::Geometric { clique_size, cover } => {
                println!("{spec}: geometric, {} cliques of size {clique_size}", cover.len())
            }
            GeometricVerdict::NotGeometric { reason } => println!("{spec}: not geometric ({reason})"),
        }
    }
    Ok(())
}
