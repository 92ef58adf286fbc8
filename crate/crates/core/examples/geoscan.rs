//! Parameter scan for geometric graphs with smallest eigenvalue -5.

use drg_core::search::geometric_scan;

fn main() {
    let s = geometric_scan();
    println!("(psi1, k): {:?}", s.pairs);
    for c in &s.candidates {
        let why = if c.rejected_by.is_empty() { "survives".into() } else { c.rejected_by.join(",") };
        println!("  {:>2} {:>2}  tau2={} psi2={}  {{{}}}  {why}", c.psi1, c.k, c.tau2, c.psi2, c.array);
    }
    for a in &s.survivors {
        println!("survivor {{{a}}} (Taylor: {})", a.is_taylor());
    }
}
