//! Post-hoc eliminations on the reference table.

use drg_core::feasibility::feasibility;
use drg_core::golden::reference_table;
use drg_core::search::post_filter;
use drg_core::spectral::DEFAULT_TOL;

fn main() -> drg_core::Result<()> {
    for (case, arr) in reference_table() {
        let rep = feasibility(&arr, DEFAULT_TOL)?;
        let pf = post_filter(&rep);
        let verdict = if pf.eliminated() {
            "eliminated"
        } else if pf.forces_4_claw() {
            "forces a 4-claw"
        } else {
            "survives"
        };
        println!("{case} {{{arr}}}: {verdict}");
        for e in &pf.items {
            println!("    {} ({:?}): {}", e.name, e.outcome, e.detail);
        }
    }
    Ok(())
}
