//! Scan of geometric diameter-3 parameter sets with `θ3 = -5`.
//!
//! Clique parameters follow `b_i = -(θ_D + τ_i)(1 - k/θ_D - ψ_i)` and
//! `c_i = τ_i ψ_{i-1}` with `ψ_0 = τ_1 = 1` and `τ_3 = -θ_3`.

use serde::Serialize;

use crate::array::IntersectionArray;
use crate::feasibility::feasibility;
use crate::spectral::{EigValue, DEFAULT_TOL};

pub const THETA_D: i64 = -5;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeometricCandidate {
    pub psi1: i64,
    pub k: i64,
    pub a1: i64,
    pub tau2: i64,
    pub psi2: i64,
    pub array: IntersectionArray,
    /// Empty for survivors.
    pub rejected_by: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeometricScan {
    pub theta_d: i64,
    pub pairs: Vec<(i64, i64)>,
    pub candidates: Vec<GeometricCandidate>,
    pub survivors: Vec<IntersectionArray>,
}

/// `(ψ1, k)` with `2 <= ψ1 <= -θ3 - 1`, `k/(-θ3) <= 3(ψ1 - 1)` and
/// `2ψ1 <= 1 + k/(-θ3)`.
pub fn scan_pairs() -> Vec<(i64, i64)> {
    let t = -THETA_D;
    let mut out = Vec::new();
    for psi1 in 2..t {
        let mut k = t;
        while k / t <= 3 * (psi1 - 1) {
            if 2 * psi1 <= 1 + k / t {
                out.push((psi1, k));
            }
            k += t;
        }
    }
    out
}

fn check(arr: &IntersectionArray) -> Vec<String> {
    let rep = match feasibility(arr, DEFAULT_TOL) {
        Ok(r) => r,
        Err(e) => return vec![e.to_string()],
    };
    let mut out: Vec<String> = rep.checks.failed().iter().map(|s| s.to_string()).collect();
    if !rep.trace.pass {
        out.push("trace".into());
    }
    if rep.spectrum.theta_min() != &EigValue::Int(THETA_D) {
        out.push(format!("theta_D = {}", rep.spectrum.theta_min()));
    }
    out
}

pub fn geometric_scan() -> GeometricScan {
    let t = -THETA_D;
    let pairs = scan_pairs();
    let mut candidates = Vec::new();
    for &(psi1, k) in &pairs {
        let s = k / t;
        let a1 = (s - 1) + (t - 1) * (psi1 - 1);
        let b1 = (t - 1) * (1 + s - psi1);
        debug_assert_eq!(b1, k - a1 - 1);
        for tau2 in psi1..t {
            for psi2 in psi1 + 1..=s {
                let c2 = tau2 * psi1;
                let b2 = (t - tau2) * (1 + s - psi2);
                let c3 = t * psi2;
                let Ok(array) = IntersectionArray::new(vec![k, b1, b2], vec![1, c2, c3]) else {
                    continue;
                };
                let rejected_by = check(&array);
                candidates.push(GeometricCandidate { psi1, k, a1, tau2, psi2, array, rejected_by });
            }
        }
    }
    let mut survivors: Vec<IntersectionArray> = candidates
        .iter()
        .filter(|c| c.rejected_by.is_empty())
        .map(|c| c.array.clone())
        .collect();
    survivors.sort();
    survivors.dedup();
    GeometricScan { theta_d: THETA_D, pairs, candidates, survivors }
}
