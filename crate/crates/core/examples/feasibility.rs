//! F1–F5 and the structural filters for a few arrays.

use drg_core::feasibility::feasibility;
use drg_core::spectral::DEFAULT_TOL;
use drg_core::parse_array;

fn main() -> drg_core::Result<()> {
    let arrays: Vec<String> = match std::env::args().skip(1).collect::<Vec<_>>() {
        v if v.is_empty() => ["39,24,1;1,4,39", "4,2,1;1,1,3", "27,16,4;1,2,24"].map(String::from).to_vec(),
        v => v,
    };
    for text in &arrays {
        let arr = parse_array(text)?;
        let rep = feasibility(&arr, DEFAULT_TOL)?;
        let failed = rep.checks.failed();
        println!("{{{arr}}}: {} {}", rep.verdict(), if failed.is_empty() { String::new() } else { format!("{failed:?}") });
        for f in rep.filters.iter().filter(|f| f.applicable) {
            println!("    {:<18} {} vs {}  {}", f.name, f.lhs, f.rhs, if f.fails() { "fires" } else { "ok" });
        }
    }
    Ok(())
}
