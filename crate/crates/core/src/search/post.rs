//! Post-hoc eliminations applied to the table of feasible arrays.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::bounds::{delsarte_bound, find_filter};
use crate::feasibility::FeasibilityReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// No 4-claw-free graph can have the array.
    Eliminated,
    /// A graph may exist but must contain a 4-claw.
    Forces4Claw,
    /// Arithmetic recorded for a manual argument; decides nothing.
    Note,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Elimination {
    pub name: &'static str,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PostFilterReport {
    pub array: String,
    pub items: Vec<Elimination>,
}

impl PostFilterReport {
    pub fn eliminated(&self) -> bool {
        self.items.iter().any(|e| e.outcome == Outcome::Eliminated)
    }

    pub fn forces_4_claw(&self) -> bool {
        self.items.iter().any(|e| e.outcome == Outcome::Forces4Claw)
    }

    /// Neither eliminated nor forced to contain a 4-claw.
    pub fn survives(&self) -> bool {
        !self.eliminated() && !self.forces_4_claw()
    }

    pub fn fired(&self, name: &str) -> bool {
        self.items.iter().any(|e| e.name == name && e.outcome != Outcome::Note)
    }

    /// Names of the eliminations that fired, `;`-separated.
    pub fn summary(&self) -> String {
        let v: Vec<&str> = self.items.iter().filter(|e| e.outcome != Outcome::Note).map(|e| e.name).collect();
        v.join(";")
    }
}

/// Runs the eliminations on one feasible array.
pub fn post_filter(r: &FeasibilityReport) -> PostFilterReport {
    let arr = &r.array;
    let (k, a1) = (arr.k(), arr.a(1));
    let mut items = Vec::new();

    // a quadrangle exists, so k >= 3a1 - 3c2 + 7 when k > 2(a1+1)
    if let Some(f) = find_filter(&r.filters, "nonterw_k") {
        if f.fails() {
            items.push(Elimination {
                name: "nonterw_k",
                outcome: Outcome::Eliminated,
                detail: format!("k = {} < 3a1 - 3c2 + 7 = {}", f.lhs, f.rhs),
            });
        }
    }

    if let Some(f) = find_filter(&r.filters, "clawfree_theta") {
        if f.fails() {
            items.push(Elimination {
                name: "clawfree_theta",
                outcome: Outcome::Eliminated,
                detail: format!("θ_D = {} < -3δ/(2δ-3) = {} ({})", f.lhs, f.rhs, f.note),
            });
        }
    }

    let theta_d = r.spectrum.theta_min();
    if let Ok(del) = delsarte_bound(k, theta_d) {
        // the clique k - 2a1 - 1 + ν left after removing two non-adjacent
        // neighbours must fit under the Delsarte bound
        let nu_max = del.floor() - (k - 2 * a1 - 1);
        if nu_max <= 0 && 3 * (a1 + 1) > k {
            items.push(Elimination {
                name: "clique_nu",
                outcome: Outcome::Forces4Claw,
                detail: format!(
                    "ν <= floor({del}) - (k - 2a1 - 1) = {nu_max}, so three pairwise non-adjacent neighbours cover k >= 3(a1+1) = {}",
                    3 * (a1 + 1)
                ),
            });
        }

        if let Some(f) = find_filter(&r.filters, "shilla_coclique") {
            if f.fails() {
                items.push(Elimination {
                    name: "shilla_coclique",
                    outcome: Outcome::Note,
                    detail: format!("4(a1+1) - k = {} > 6(c2-1) = {}: no local 4-coclique", f.lhs, f.rhs),
                });
                items.push(Elimination {
                    name: "delsarte_bound",
                    outcome: Outcome::Note,
                    detail: format!("clique order at most {del}"),
                });
                if let (Some(b), true) = (del.exact(), r.derived.v.is_integer()) {
                    if b.is_integer() {
                        let s = b.to_integer() - 1u32;
                        let v = r.derived.v.to_integer();
                        let two_v: BigInt = v.clone() * 2u32;
                        if !(&two_v % &s).is_zero() {
                            items.push(Elimination {
                                name: "clique_count",
                                outcome: Outcome::Note,
                                detail: format!("2v/{s} = 2·{v}/{s} is not an integer"),
                            });
                        }
                    }
                }
            }
        }
    }

    PostFilterReport { array: arr.to_string(), items }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;
    use crate::feasibility::feasibility;

    fn run(s: &str) -> PostFilterReport {
        post_filter(&feasibility(&parse_array(s).unwrap(), 1e-12).unwrap())
    }

    #[test]
    fn examples() {
        let r = run("65,40,16;1,4,50");
        assert!(r.fired("nonterw_k"));
        assert!(r.items[0].detail.contains("65 < 3a1 - 3c2 + 7 = 67"), "{:?}", r.items);
        let r = run("125,78,1;1,26,125");
        assert!(r.fired("clawfree_theta") && r.eliminated());
        assert!(r.items.iter().any(|e| e.detail.contains("125/47")), "{:?}", r.items);
        assert!(run("44,24,1;1,12,44").survives());
        let r = run("13,8,1;1,4,13");
        assert!(r.fired("clique_nu"));
        let r = run("39,24,1;1,4,39");
        assert!(r.survives());
        let text: Vec<_> = r.items.iter().map(|e| e.detail.as_str()).collect();
        assert!(text.iter().any(|t| t.contains("2·280/13")), "{text:?}");
        assert!(text.iter().any(|t| t.contains("21 > 6(c2-1) = 18")), "{text:?}");
        assert!(text.iter().any(|t| t.contains("at most 14")), "{text:?}");
    }
}
