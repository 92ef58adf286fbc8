//! Reproduces the table of feasible arrays, case by case.
//!
//! ```bash
//! cargo run -p drg-core --example search_tables -- C3 C6
//! cargo run -p drg-core --example search_tables -- C1 C2 --kmax=200
//! cargo run -p drg-core --example search_tables -- C4 --no-prune
//! ```

use std::time::Instant;

use drg_core::search::{search_cases, CaseSpec, SearchOptions, CASES};

fn main() -> drg_core::Result<()> {
    let (flags, names): (Vec<String>, Vec<String>) = std::env::args().skip(1).partition(|a| a.starts_with("--"));
    let kmax = flags.iter().find_map(|f| f.strip_prefix("--kmax=")).and_then(|v| v.parse().ok());
    let specs: Vec<&'static CaseSpec> = if names.is_empty() {
        CASES.iter().collect()
    } else {
        names
            .iter()
            .map(|n| CaseSpec::by_name(n).ok_or_else(|| drg_core::Error::Invalid(format!("unknown case {n}"))))
            .collect::<Result<_, _>>()?
    };
    let prune = !flags.iter().any(|f| f == "--no-prune");
    let start = Instant::now();
    let results = search_cases(&specs, &SearchOptions { kmax, prune, ..SearchOptions::default() })?;
    for r in &results {
        println!("{} ({} arrays)", r.case, r.arrays.len());
        for a in &r.arrays {
            println!("  {{{a}}}");
        }
    }
    for r in results.iter().filter(|r| r.stats.group.first() == Some(&r.case)) {
        println!("enumeration {}: {:?}", r.stats.group.join("+"), r.stats.counters);
    }
    println!("elapsed {:.1?}", start.elapsed());
    Ok(())
}
