//! Valency lists for Taylor graphs without 4-claws.

use drg_core::search::taylor_classify;

fn main() -> drg_core::Result<()> {
    let kmax = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1000);
    let r = taylor_classify(kmax)?;
    println!("l in {:?}", r.ell_values);
    for b in &r.branches {
        println!("{:>6}: {:?}", b.name, b.valencies());
        for c in &b.candidates {
            println!("        {{{}}}  theta = ({}, -1, {})  m1 = {}", c.array, c.theta1, c.theta3, c.m1);
        }
    }
    Ok(())
}
