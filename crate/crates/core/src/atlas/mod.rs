//! Concrete graphs and from-scratch structural checks.

pub mod cliques;
pub mod drg;
pub mod families;
pub mod geometric;
pub mod graph;

pub use cliques::{cliques_of_size, find_claw, find_clique, find_coclique, max_clique, max_coclique, ClawWitness};
pub use drg::{brute_p_numbers, find_quadrangle, local_graph, mu_min, srg_params, verify_drg, DrgCertificate};
pub use families::{atlas, taylor_from_local, NamedGraphSpec, FAMILY_NAMES};
pub use geometric::{is_geometric, GeometricVerdict};
pub use graph::{Bits, Graph, GraphFile, GRAPH_SCHEMA};

use crate::bounds::StructuralContext;

/// Every structural fact the filters can consume, computed exactly.
pub fn structural_context(g: &Graph) -> crate::Result<StructuralContext> {
    let cert = verify_drg(g)?;
    Ok(StructuralContext {
        has_3_claw: Some(find_claw(g, 3).is_some()),
        has_4_claw: Some(find_claw(g, 4).is_some()),
        has_quadrangle: Some(find_quadrangle(g).is_some()),
        geometric: Some(is_geometric(g, &cert).is_geometric()),
        mu_min: mu_min(g).ok().map(|m| m as i64),
        clique_number: Some(max_clique(g).len() as i64),
        coclique_size: None,
    })
}
