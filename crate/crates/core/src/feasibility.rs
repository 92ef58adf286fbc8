//! The feasibility battery F1–F5 for intersection arrays.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::array::{DerivedParams, IntersectionArray};
use crate::bounds::{structural_filters, FilterVerdict, StructuralContext};
use crate::error::Result;
use crate::poly::{q, Q};
use crate::spectral::{spectrum, trace_check, EigRecord, Multiplicity, Spectrum, TraceReport};

pub const SCHEMA: &str = "drg-feasibility/1";

/// Intersection numbers `p[h][i][j] = |{z : d(x,z)=i, d(y,z)=j}|` for
/// `d(x,y) = h`.
#[derive(Debug, Clone, PartialEq)]
pub struct PTensor {
    pub p: Vec<Vec<Vec<Q>>>,
}

impl PTensor {
    pub fn diameter(&self) -> usize {
        self.p.len() - 1
    }

    pub fn get(&self, h: usize, i: usize, j: usize) -> &Q {
        &self.p[h][i][j]
    }

    /// First entry `(h, i, j)` that is negative or non-integral.
    pub fn first_bad(&self) -> Option<(usize, usize, usize)> {
        let d = self.diameter();
        for h in 0..=d {
            for i in 0..=d {
                for j in 0..=d {
                    let x = &self.p[h][i][j];
                    if x.is_negative() || !x.is_integer() {
                        return Some((h, i, j));
                    }
                }
            }
        }
        None
    }
}

/// Fills the tensor from `p[h][1][j]` using `A_1 A_i = b_{i-1} A_{i-1} +
/// a_i A_i + c_{i+1} A_{i+1}` read off at a pair at distance `h`.
pub fn p_tensor(arr: &IntersectionArray) -> Result<PTensor> {
    arr.check_admissible()?;
    let d = arr.diameter();
    let b = |i: usize| q(arr.b(i));
    let c = |i: usize| q(arr.c(i));
    let a = |i: usize| q(arr.a(i));
    let mut p = vec![vec![vec![Q::zero(); d + 1]; d + 1]; d + 1];
    for h in 0..=d {
        p[h][0][h] = q(1);
        if d == 0 {
            continue;
        }
        if h >= 1 {
            p[h][1][h - 1] = c(h);
        }
        p[h][1][h] = a(h);
        if h < d {
            p[h][1][h + 1] = b(h);
        }
    }
    for i in 1..d {
        for h in 0..=d {
            for j in 0..=d {
                // Σ_l p[h][1][l] p[l][i][j]
                let mut acc = Q::zero();
                if h >= 1 {
                    acc += c(h) * &p[h - 1][i][j];
                }
                acc += a(h) * &p[h][i][j];
                if h < d {
                    acc += b(h) * &p[h + 1][i][j];
                }
                // minus the A_{i-1} and A_i terms of A_1 A_i
                acc -= a(i) * &p[h][i][j];
                acc -= b(i - 1) * &p[h][i - 1][j];
                p[h][i + 1][j] = acc / c(i + 1);
            }
        }
    }
    Ok(PTensor { p })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckVerdict {
    pub pass: bool,
    /// Set when the pass rests on a numeric multiplicity.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub numeric: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckVerdict {
    fn ok() -> Self {
        CheckVerdict { pass: true, numeric: false, witness: None }
    }

    fn fail(w: String) -> Self {
        CheckVerdict { pass: false, numeric: false, witness: Some(w) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Checks {
    #[serde(rename = "F1")]
    pub f1: CheckVerdict,
    #[serde(rename = "F2")]
    pub f2: CheckVerdict,
    #[serde(rename = "F3")]
    pub f3: CheckVerdict,
    #[serde(rename = "F4")]
    pub f4: CheckVerdict,
    #[serde(rename = "F5")]
    pub f5: CheckVerdict,
}

impl Checks {
    pub fn all_pass(&self) -> bool {
        [&self.f1, &self.f2, &self.f3, &self.f4, &self.f5].iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        let v = [("F1", &self.f1), ("F2", &self.f2), ("F3", &self.f3), ("F4", &self.f4), ("F5", &self.f5)];
        v.iter().filter(|(_, c)| !c.pass).map(|(n, _)| *n).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityReport {
    pub array: IntersectionArray,
    pub derived: DerivedParams,
    pub spectrum: Spectrum,
    pub checks: Checks,
    pub trace: TraceReport,
    pub filters: Vec<FilterVerdict>,
}

impl FeasibilityReport {
    pub fn feasible(&self) -> bool {
        self.checks.all_pass()
    }

    pub fn verdict(&self) -> &'static str {
        if self.feasible() {
            "feasible"
        } else {
            "infeasible"
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let fmt_q = |x: &Q| {
            if x.is_integer() {
                x.to_integer().to_string()
            } else {
                format!("{}/{}", x.numer(), x.denom())
            }
        };
        let records: Vec<EigRecord> = self.spectrum.records();
        serde_json::json!({
            "schema": SCHEMA,
            "array": self.array.to_string(),
            "D": self.array.diameter(),
            "v": fmt_q(&self.derived.v),
            "k_i": self.derived.k_i.iter().map(fmt_q).collect::<Vec<_>>(),
            "a_i": self.derived.a,
            "spectrum": records,
            "checks": self.checks,
            "trace": self.trace,
            "filters": self.filters,
            "verdict": self.verdict(),
        })
    }
}

fn f1(dp: &DerivedParams) -> CheckVerdict {
    for (i, k) in dp.k_i.iter().enumerate() {
        if !k.is_integer() || !k.is_positive() {
            return CheckVerdict::fail(format!("k{i} = {k}"));
        }
    }
    CheckVerdict::ok()
}

fn f2(arr: &IntersectionArray, dp: &DerivedParams) -> CheckVerdict {
    let Some(ks) = dp.k_int() else {
        return CheckVerdict::fail("k_i not integral".into());
    };
    for (i, k) in ks.iter().enumerate() {
        let prod = k * BigInt::from(arr.a(i));
        if prod.is_odd() {
            return CheckVerdict::fail(format!("k{i}*a{i} = {prod} is odd"));
        }
    }
    CheckVerdict::ok()
}

fn f3(arr: &IntersectionArray, dp: &DerivedParams) -> CheckVerdict {
    // triangle count v*k*a1/6
    if !dp.v.is_integer() {
        return CheckVerdict::fail("v not integral".into());
    }
    let prod = dp.v.to_integer() * BigInt::from(arr.k()) * BigInt::from(arr.a(1));
    if !prod.is_multiple_of(&BigInt::from(6)) {
        return CheckVerdict::fail(format!("v*k*a1 = {prod} is not divisible by 6"));
    }
    CheckVerdict::ok()
}

fn f4(spec: &Spectrum) -> CheckVerdict {
    let mut numeric = false;
    for (i, m) in spec.multiplicities.iter().enumerate() {
        match m {
            Multiplicity::Exact(_) => {
                if m.positive_integer().is_none() {
                    return CheckVerdict::fail(format!("m{i} = {m}"));
                }
            }
            Multiplicity::Irrational(_) => {
                return CheckVerdict::fail(format!("m{i} = {m} is irrational"));
            }
            Multiplicity::Numeric(x) => {
                if (x - x.round()).abs() > 1e-6 || x.round() < 1.0 {
                    return CheckVerdict::fail(format!("m{i} = {m}"));
                }
                numeric = true;
            }
        }
    }
    CheckVerdict { pass: true, numeric, witness: None }
}

fn f5(arr: &IntersectionArray) -> Result<CheckVerdict> {
    let t = p_tensor(arr)?;
    Ok(match t.first_bad() {
        Some((h, i, j)) => CheckVerdict::fail(format!("p^{h}_{i}{j} = {}", t.p[h][i][j])),
        None => CheckVerdict::ok(),
    })
}

/// Runs F1–F5 and every structural filter; nothing is short-circuited.
pub fn feasibility(arr: &IntersectionArray, tol: f64) -> Result<FeasibilityReport> {
    feasibility_with(arr, tol, &StructuralContext::default())
}

pub fn feasibility_with(
    arr: &IntersectionArray,
    tol: f64,
    ctx: &StructuralContext,
) -> Result<FeasibilityReport> {
    let derived = arr.derive()?;
    let spec = spectrum(arr, tol)?;
    let checks = Checks {
        f1: f1(&derived),
        f2: f2(arr, &derived),
        f3: f3(arr, &derived),
        f4: f4(&spec),
        f5: f5(arr)?,
    };
    let trace = trace_check(arr, &spec, 3)?;
    let filters = structural_filters(arr, &spec, ctx)?;
    Ok(FeasibilityReport { array: arr.clone(), derived, spectrum: spec, checks, trace, filters })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;
    use crate::spectral::DEFAULT_TOL;

    #[test]
    fn boundary_rows() {
        let a = parse_array("39,24,1;1,4,39").unwrap();
        let t = p_tensor(&a).unwrap();
        for i in 1..=3 {
            assert_eq!(t.p[i][1][i - 1], q(a.c(i)));
            assert_eq!(t.p[i][1][i], q(a.a(i)));
            if i < 3 {
                assert_eq!(t.p[i][1][i + 1], q(a.b(i)));
            }
        }
        assert!(t.first_bad().is_none());
        // p^1_23 = b1 b2 / c2
        assert_eq!(t.p[1][2][3], q(24 / 4));
    }

    #[test]
    fn feasible_examples() {
        for s in ["39,24,1;1,4,39", "10,6,1;1,3,10"] {
            let r = feasibility(&parse_array(s).unwrap(), DEFAULT_TOL).unwrap();
            assert!(r.feasible(), "{s}: {:?}", r.checks);
            assert!(r.trace.pass);
        }
    }

    #[test]
    fn f1_witness() {
        let r = feasibility(&parse_array("4,2,1;1,1,3").unwrap(), DEFAULT_TOL).unwrap();
        assert!(!r.checks.f1.pass);
        assert_eq!(r.checks.f1.witness.as_deref(), Some("k3 = 8/3"));
        assert_eq!(r.verdict(), "infeasible");
    }
}
