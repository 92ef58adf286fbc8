//! Builds every atlas graph, verifies its array and looks for claws.

use std::time::Instant;

use drg_core::atlas::{atlas, find_claw, max_clique, max_coclique, verify_drg};

fn main() -> drg_core::Result<()> {
    let start = Instant::now();
    for spec in atlas() {
        let g = spec.build()?;
        let cert = verify_drg(&g)?;
        let documented = spec.documented_array();
        let ok = documented.as_ref().map_or("-", |d| if *d == cert.array { "ok" } else { "MISMATCH" });
        let claw3 = find_claw(&g, 3).is_some();
        let claw4 = find_claw(&g, 4).is_some();
        println!(
            "{:<28} n={:<3} {{{}}} [{ok}]  3-claw:{:<5} 4-claw:{:<5} omega={} alpha={}",
            spec.to_string(),
            g.n(),
            cert.array,
            claw3,
            claw4,
            max_clique(&g).len(),
            max_coclique(&g).len(),
        );
    }
    println!("elapsed {:.1?}", start.elapsed());
    Ok(())
}
