//! Exact spectrum of an intersection array.
//!
//! ```bash
//! cargo run -p drg-core --example spectrum -- "39,24,1;1,4,39"
//! ```

use drg_core::spectral::{spectrum, trace_check, DEFAULT_TOL};
use drg_core::parse_array;

fn main() -> drg_core::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "10,6,1;1,3,10".into());
    let arr = parse_array(&text)?;
    let dp = arr.derive()?;
    println!("{{{arr}}}: v = {}, k_i = {:?}", dp.v, dp.k_i.iter().map(|x| x.to_string()).collect::<Vec<_>>());

    let spec = spectrum(&arr, DEFAULT_TOL)?;
    for (i, (t, m)) in spec.eigenvalues.iter().zip(&spec.multiplicities).enumerate() {
        println!("  theta_{i} = {:<14} m = {m} ({})", t.tagged(), m.kind());
    }

    let tr = trace_check(&arr, &spec, 3)?;
    for r in &tr.residuals {
        println!("  sum m_i theta_i^{} = {}  residual {}", r.power, r.expected, r.residual);
    }
    Ok(())
}
