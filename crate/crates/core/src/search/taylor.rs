//! Valency lists for Taylor graphs `{k, c2, 1; 1, c2, k}` without 4-claws.
//!
//! Three branches: equal multiplicities (`θ1 = -θ3 = √k`), and the two
//! integral branches `b1 = ℓ(θ1 + 1)` with `ℓ ∈ {1, 2}`.

use num_traits::Zero;
use serde::Serialize;

use crate::array::IntersectionArray;
use crate::error::{Error, Result};
use crate::poly::q;
use crate::spectral::{taylor_spectrum, EigValue, Spectrum};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TaylorCandidate {
    pub k: i64,
    pub a1: i64,
    pub c2: i64,
    pub array: IntersectionArray,
    pub theta1: String,
    pub theta3: String,
    pub m1: i64,
    pub m3: i64,
    /// `k - 3a1/2 - 1 <= 1 + θ1`.
    pub clique_inequality: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TaylorBranch {
    pub name: String,
    pub constraints: Vec<String>,
    pub candidates: Vec<TaylorCandidate>,
}

impl TaylorBranch {
    pub fn valencies(&self) -> Vec<i64> {
        self.candidates.iter().map(|c| c.k).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TaylorReport {
    pub kmax: i64,
    /// Values of ℓ allowed by `(ℓ-3)a1 + 4(ℓ²-1) <= 0` for some `a1 <= kmax`.
    pub ell_values: Vec<i64>,
    pub branches: Vec<TaylorBranch>,
}

impl TaylorReport {
    pub fn branch(&self, name: &str) -> Option<&TaylorBranch> {
        self.branches.iter().find(|b| b.name == name)
    }
}

pub fn is_sum_of_two_squares(n: i64) -> bool {
    let mut a = 0i64;
    while a * a <= n {
        let r = n - a * a;
        let s = (r as f64).sqrt() as i64;
        if (s - 1..=s + 1).any(|t| t >= 0 && t * t == r) {
            return true;
        }
        a += 1;
    }
    false
}

fn integral_m(x: &crate::spectral::Multiplicity) -> Option<i64> {
    x.positive_integer().and_then(|n| i64::try_from(n).ok())
}

fn candidate(k: i64, c2: i64, spec: &Spectrum) -> Option<TaylorCandidate> {
    let a1 = k - c2 - 1;
    let theta1 = spec.theta(1);
    // k - 3a1/2 - 2 <= θ1
    let lhs = q(2 * k - 3 * a1 - 4) / q(2);
    Some(TaylorCandidate {
        k,
        a1,
        c2,
        array: IntersectionArray::taylor(k, c2).ok()?,
        theta1: theta1.to_string(),
        theta3: spec.theta(3).to_string(),
        m1: integral_m(spec.m(1))?,
        m3: integral_m(spec.m(3))?,
        clique_inequality: theta1.cmp_q(&lhs).is_ge(),
    })
}

fn equal_branch(kmax: i64) -> TaylorBranch {
    let mut out = Vec::new();
    for k in (5..=kmax).step_by(2) {
        let a1 = (k - 1) / 2;
        if a1 % 2 != 0 || !is_sum_of_two_squares(k) {
            continue;
        }
        let spec = taylor_spectrum(k, a1).expect("k > c2 >= 1");
        let Some(c) = candidate(k, a1, &spec) else { continue };
        if c.m1 == c.m3 && c.clique_inequality {
            out.push(c);
        }
    }
    TaylorBranch {
        name: "m1=m3".into(),
        constraints: vec![
            "theta1 = -theta3 = sqrt(k), a1 = c2 = (k-1)/2".into(),
            "a1 even".into(),
            "k a sum of two squares".into(),
            "(k-1)/4 <= 1 + sqrt(k)".into(),
        ],
        candidates: out,
    }
}

fn ell_branch(ell: i64, kmax: i64) -> TaylorBranch {
    let step = 2 * ell + 1;
    let mut out = Vec::new();
    let mut k = step;
    while k <= kmax {
        let a1 = (ell + 1) * (k / step - 1);
        let c2 = ell * a1 / (ell + 1) + 2 * ell;
        // m1 = (2ℓ+1)²(k+1)/(k+(2ℓ+1)²)
        let m1 = q(step * step * (k + 1)) / q(k + step * step);
        let keep = k >= 4
            && a1 % 2 == 0
            && m1.is_integer()
            && m1 < q(k)
            && m1 != q(k + 1) - &m1
            && c2 < k;
        if keep {
            let spec = taylor_spectrum(k, c2).expect("k > c2 >= 1");
            debug_assert_eq!(spec.theta(3), &EigValue::Int(-step));
            debug_assert!((&m1 - spec.m(1).exact().cloned().unwrap_or_default()).is_zero());
            if let Some(c) = candidate(k, c2, &spec) {
                out.push(c);
            }
        }
        k += step;
    }
    let m1_text = format!("m1 = {} - {}/(k+{}) integral", step * step, step.pow(4) - step * step, step * step);
    TaylorBranch {
        name: format!("l={ell}"),
        constraints: vec![
            format!("c2 = {}/{} + {}, k = {step}(a1/{} + 1)", if ell == 1 { "a1".into() } else { format!("{ell}a1") }, ell + 1, 2 * ell, ell + 1),
            format!("theta1 = k/{step}, theta3 = -{step}"),
            m1_text,
            "m1 < k, m1 != m3".into(),
            "a1 even".into(),
        ],
        candidates: out,
    }
}

/// Runs the three branches up to valency `kmax` (at least 25).
pub fn taylor_classify(kmax: i64) -> Result<TaylorReport> {
    if kmax < 25 {
        return Err(Error::Invalid(format!("kmax must be at least 25, got {kmax}")));
    }
    let ell_values: Vec<i64> = (1..=kmax)
        .filter(|&l| (l - 3) * kmax + 4 * (l * l - 1) <= 0)
        .collect();
    let mut branches = vec![equal_branch(kmax)];
    branches.extend(ell_values.iter().map(|&l| ell_branch(l, kmax)));
    Ok(TaylorReport { kmax, ell_values, branches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_squares() {
        let brute = |n: i64| (0..=n).any(|a| (0..=n).any(|b| a * a + b * b == n));
        for n in 0..200 {
            assert_eq!(is_sum_of_two_squares(n), brute(n), "{n}");
        }
    }

    #[test]
    fn small_kmax_rejected() {
        assert!(taylor_classify(24).is_err());
    }
}

