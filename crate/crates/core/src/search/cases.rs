//! The six-case enumeration of feasible arrays for 4-claw-free graphs.
//!
//! In-loop constraints: `2(a1+1) < k <= 8(a1+1)/3`, `θ_D > -6`,
//! `c2 >= max(2, (a1-6)/6)`, `b2 <= a3+1`, F1–F5, and the case's
//! eigenvalue predicates. Arrays are enumerated with `b_i` non-increasing
//! and `c_i` non-decreasing.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use super::arith::{divide, divisors_in, merge, Factors, Sieve};
use super::numeric::{
    count_above, count_range, minors_at, multiplicities_plausible, multiplicity_f64, nontrivial_eigenvalues,
    linear_range, sign_changes, sylvester, SmallArray, Want,
};
use crate::array::IntersectionArray;
use crate::error::{Error, Result};
use crate::feasibility::{feasibility, FeasibilityReport};
use crate::poly::{q, Q};
use crate::spectral::DEFAULT_TOL;

/// Where `θ_1` lies relative to `a_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    AtLeastA1,
    BelowA1,
}

/// Lower or upper bound on `m_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum M1 {
    AtLeastK,
    AtLeastHalfK,
    BelowK,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseSpec {
    pub name: &'static str,
    pub diameters: &'static [usize],
    pub kmax: i64,
    pub side: Side,
    pub theta1_integral: Option<bool>,
    pub m1: M1,
    pub theta_d_integral: Option<bool>,
}

pub const CASES: [CaseSpec; 6] = [
    CaseSpec {
        name: "C1",
        diameters: &[3, 4],
        kmax: 476,
        side: Side::AtLeastA1,
        theta1_integral: Some(true),
        m1: M1::AtLeastK,
        theta_d_integral: None,
    },
    CaseSpec {
        name: "C2",
        diameters: &[3, 4],
        kmax: 952,
        side: Side::AtLeastA1,
        theta1_integral: Some(false),
        m1: M1::AtLeastHalfK,
        theta_d_integral: None,
    },
    CaseSpec {
        name: "C3",
        diameters: &[3],
        kmax: 790,
        side: Side::BelowA1,
        theta1_integral: None,
        m1: M1::AtLeastK,
        theta_d_integral: None,
    },
    CaseSpec {
        name: "C4",
        diameters: &[3],
        kmax: 36,
        side: Side::BelowA1,
        theta1_integral: Some(false),
        m1: M1::BelowK,
        theta_d_integral: None,
    },
    CaseSpec {
        name: "C5",
        diameters: &[3],
        kmax: 530,
        side: Side::BelowA1,
        theta1_integral: Some(true),
        m1: M1::BelowK,
        theta_d_integral: Some(false),
    },
    CaseSpec {
        name: "C6",
        diameters: &[3],
        kmax: 833,
        side: Side::BelowA1,
        theta1_integral: Some(true),
        m1: M1::BelowK,
        theta_d_integral: Some(true),
    },
];

impl CaseSpec {
    pub fn by_name(name: &str) -> Option<&'static CaseSpec> {
        CASES.iter().find(|c| c.name.eq_ignore_ascii_case(name))
    }

    /// The case's predicates on an exactly evaluated feasible array.
    pub fn matches(&self, r: &FeasibilityReport) -> bool {
        let arr = &r.array;
        let d = arr.diameter();
        if !self.diameters.contains(&d) || arr.k() > self.kmax || d < 2 {
            return false;
        }
        let sp = &r.spectrum;
        let t1 = sp.theta(1);
        let side = t1.cmp_int(arr.a(1));
        let side_ok = match self.side {
            Side::AtLeastA1 => side != Ordering::Less,
            Side::BelowA1 => side == Ordering::Less,
        };
        if !side_ok {
            return false;
        }
        if d == 4 && t1.cmp_int(arr.b(1) - 1) == Ordering::Greater {
            return false;
        }
        if let Some(want) = self.theta1_integral {
            if t1.is_integer() != want {
                return false;
            }
        }
        if let Some(want) = self.theta_d_integral {
            if sp.theta_min().is_integer() != want {
                return false;
            }
        }
        let Some(m1) = sp.m(1).exact() else {
            return false;
        };
        let k = q(arr.k());
        match self.m1 {
            M1::AtLeastK => *m1 >= k,
            M1::AtLeastHalfK => m1 * q(2) >= k,
            M1::BelowK => *m1 < k,
        }
    }
}

/// Every case whose predicates the array satisfies.
pub fn attribute(r: &FeasibilityReport) -> Vec<&'static str> {
    CASES.iter().filter(|c| c.matches(r)).map(|c| c.name).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Prefix pruning, divisor-driven loops and the numeric prefilter.
    /// Disabling them leaves the result unchanged, only slower.
    pub prune: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Overrides every case's valency cap (for quick runs).
    pub kmax: Option<i64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { prune: true, jobs: None, kmax: None }
    }
}

/// Enumeration counters, keyed by stage.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Cases sharing this enumeration.
    pub group: Vec<&'static str>,
    pub counters: BTreeMap<&'static str, u64>,
}

impl SearchStats {
    fn bump(&mut self, key: &'static str) {
        *self.counters.entry(key).or_insert(0) += 1;
    }

    fn absorb(&mut self, o: &SearchStats) {
        for (k, v) in &o.counters {
            *self.counters.entry(k).or_insert(0) += v;
        }
    }

    pub fn get(&self, key: &str) -> u64 {
        self.counters.get(key).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub case: &'static str,
    pub arrays: Vec<IntersectionArray>,
    pub reports: Vec<FeasibilityReport>,
    pub stats: SearchStats,
}

/// Parameters shared by one fused enumeration.
struct Group {
    side: Side,
    kmax: i64,
    d3: bool,
    d4: bool,
    /// `m1 >= k/n` holds for every case in the group.
    m1_div: Option<i64>,
}

struct Ctx<'a> {
    g: &'a Group,
    sieve: &'a Sieve,
    prune: bool,
}

#[derive(Default)]
struct KOut {
    stats: SearchStats,
    hits: Vec<FeasibilityReport>,
}

fn a1_range(k: i64) -> std::ops::RangeInclusive<i64> {
    // 2(a1+1) < k <= 8(a1+1)/3
    let lo = (3 * k + 7) / 8 - 1; // ceil(3k/8) - 1
    let hi = (k - 1) / 2 - 1; // largest a1 with 2(a1+1) < k
    lo.max(0)..=hi
}

fn c2_floor(a1: i64) -> i64 {
    // c2 >= (a1 - 6)/6
    let f = if a1 > 6 { (a1 - 6 + 5) / 6 } else { 0 };
    f.max(2)
}

impl Ctx<'_> {
    /// Final stage for a complete array: exact F1–F5 plus side checks.
    fn finish(&self, s: &SmallArray, out: &mut KOut) {
        let k = s.k();
        let d = s.d;
        out.stats.bump("arrays_generated");
        // integral k_i are guaranteed by the loops; F2 and F3 parity
        let mut k_i = [0i128; 5];
        k_i[0] = 1;
        for i in 0..d {
            k_i[i + 1] = k_i[i] * s.b[i] as i128 / s.c[i + 1] as i128;
        }
        let v: i128 = k_i[..=d].iter().sum();
        if (1..=d).any(|i| (k_i[i] * s.a(i) as i128) % 2 != 0) {
            out.stats.bump("rejected_f2");
            return;
        }
        if (v * k as i128 * s.a(1) as i128) % 6 != 0 {
            out.stats.bump("rejected_f3");
            return;
        }
        // θ_D > -6
        if sylvester(s, d + 2)[..d + 2].iter().any(|&x| x <= 0) {
            out.stats.bump("rejected_theta_min");
            return;
        }
        let a1 = s.a(1);
        let (above, is_eig) = count_above(s, a1);
        let side_ok = match self.g.side {
            Side::BelowA1 => above == 1 && !is_eig,
            Side::AtLeastA1 => above >= 2 || is_eig,
        };
        if !side_ok {
            out.stats.bump("rejected_theta1_side");
            return;
        }
        if d == 4 && count_above(s, s.b[1] - 1).0 != 1 {
            out.stats.bump("rejected_theta1_window");
            return;
        }
        if self.prune {
            let kf: Vec<f64> = k_i[..=d].iter().map(|&x| x as f64).collect();
            let thetas = nontrivial_eigenvalues(s);
            if let Some(n) = self.g.m1_div {
                let m1 = multiplicity_f64(s, &kf, v as f64, thetas[0]);
                if (n as f64) * m1 < k as f64 - 1e-6 * k as f64 {
                    out.stats.bump("rejected_numeric_m1_bound");
                    return;
                }
            }
            if !multiplicities_plausible(s, &kf, v as f64, &thetas) {
                out.stats.bump("rejected_numeric_multiplicity");
                return;
            }
        }
        out.stats.bump("exact_checked");
        let arr = s.to_array();
        let rep = feasibility(&arr, DEFAULT_TOL).expect("search arrays are admissible");
        if !rep.feasible() {
            out.stats.bump("rejected_exact_f1_f5");
            return;
        }
        out.stats.bump("feasible");
        out.hits.push(rep);
    }

    fn run_k(&self, k: i64) -> KOut {
        let mut out = KOut::default();
        let mut divs = Vec::new();
        let fk = self.sieve.factor(k as u64);
        for a1 in a1_range(k) {
            if k * a1 % 2 != 0 {
                continue;
            }
            let b1 = k - a1 - 1;
            let fb1 = self.sieve.factor(b1 as u64);
            let kb1 = merge(&fk, &fb1);
            // Sylvester prefix: det of the 2x2 block of L1 + 6I
            let d2 = 6 * (a1 + 6) - k;
            if d2 <= 0
                && self.prune {
                    out.stats.bump("pruned_prefix_theta_min");
                    continue;
                }
            let c2_lo = c2_floor(a1);
            let c2_hi = k - 1;
            let c2s: Vec<i64> = if self.prune {
                divisors_in(&kb1, c2_lo as u64, c2_hi as u64, &mut divs);
                divs.iter().map(|&x| x as i64).collect()
            } else {
                (c2_lo..=c2_hi).collect()
            };
            for c2 in c2s {
                if (k * b1) % c2 != 0 {
                    continue;
                }
                let k2 = k * b1 / c2;
                let fk2 = divide(&kb1, &self.sieve.factor(c2 as u64));
                if self.prune {
                    if let Some(n) = self.g.m1_div {
                        // Biggs: m1 <= v k / (k + θ1^2) <= v k / (k + a1^2)
                        let k3max = k2 * b1 / c2;
                        let mut vmax = 1 + k + k2 + k3max;
                        if self.g.d4 {
                            vmax += k3max * b1 / c2;
                        }
                        if n * vmax < k + a1 * a1 {
                            out.stats.bump("pruned_v_bound");
                            continue;
                        }
                    }
                }
                for b2 in 1..=b1.min(k - c2) {
                    if (b1 * b2) % c2 != 0 {
                        continue;
                    }
                    let a2 = k - b2 - c2;
                    if (k2 * a2) % 2 != 0 {
                        continue;
                    }
                    let pre = SmallArray { d: 3, b: [k, b1, b2, 0, 0], c: [0, 1, c2, 0, 0] };
                    if self.prune {
                        if let Some(n) = self.g.m1_div {
                            let k3max = k2 * b2 / c2;
                            let mut vmax = 1 + k + k2 + k3max;
                            if self.g.d4 {
                                vmax += k3max * b2 / c2;
                            }
                            if n * vmax < k + a1 * a1 {
                                out.stats.bump("pruned_v_bound");
                                continue;
                            }
                        }
                        let syl = sylvester(&pre, 4);
                        if syl[2] <= 0 || syl[3] <= 0 {
                            out.stats.bump("pruned_prefix_theta_min");
                            continue;
                        }
                        if self.g.side == Side::BelowA1 {
                            // P_0..P_3 at a1 already show two eigenvalues above a1
                            let p = minors_at(&pre, a1, 4);
                            if sign_changes(&p[..4]) >= 2 {
                                out.stats.bump("pruned_prefix_theta1");
                                continue;
                            }
                        }
                    }
                    let fn2 = merge(&fk2, &self.sieve.factor(b2 as u64));
                    let n2 = k2 * b2;
                    if self.g.d3 {
                        self.d3_tail(k, b1, b2, c2, n2, &fn2, &mut divs, &mut out);
                    }
                    if self.g.d4 {
                        self.d4_tail(k, b1, b2, c2, a1, k2, n2, &fn2, &mut out);
                    }
                }
            }
        }
        out
    }

    /// Side of `θ1` against `a1` as a range on the last `c`, given the
    /// prefix minors at `a1` and `P_n(c) = (a1 - k + c) P_{n-1} - b c P_{n-2}`.
    fn side_range(&self, pre: &SmallArray, n: usize, b_last: i64, lo: i64, hi: i64) -> (i64, i64) {
        let k = pre.k();
        let a1 = pre.a(1);
        let p = minors_at(pre, a1, n + 1);
        let (a, b) = ((a1 - k) as i128 * p[n - 1], p[n - 1] - b_last as i128 * p[n - 2]);
        match self.g.side {
            Side::BelowA1 => count_range(&p[..n], a, b, true, true, lo, hi),
            Side::AtLeastA1 => count_range(&p[..n], a, b, false, false, lo, hi),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn d3_tail(
        &self,
        k: i64,
        b1: i64,
        b2: i64,
        c2: i64,
        n2: i64,
        fn2: &Factors,
        divs: &mut Vec<u64>,
        out: &mut KOut,
    ) {
        // c3 >= c2, a3 = k - c3 >= b2 - 1
        let (mut lo, mut hi) = (c2, k - b2 + 1);
        let pre = SmallArray { d: 3, b: [k, b1, b2, 0, 0], c: [0, 1, c2, 0, 0] };
        if self.prune {
            // det(L1 + 6I) = (k - c3 + 6) D3 - b2 c3 D2 > 0
            let syl = sylvester(&pre, 4);
            let (d2, d3) = (syl[2], syl[3]);
            (lo, hi) = linear_range((k as i128 + 6) * d3, -(d3 + b2 as i128 * d2), Want::Pos, lo, hi);
            (lo, hi) = self.side_range(&pre, 4, b2, lo, hi);
        }
        if lo > hi {
            return;
        }
        for c3 in divisors_between(fn2, n2, lo, hi, self.prune, divs) {
            let s = SmallArray { d: 3, b: [k, b1, b2, 0, 0], c: [0, 1, c2, c3, 0] };
            self.finish(&s, out);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn d4_tail(
        &self,
        k: i64,
        b1: i64,
        b2: i64,
        c2: i64,
        a1: i64,
        k2: i64,
        n2: i64,
        fn2: &Factors,
        out: &mut KOut,
    ) {
        let mut divs = Vec::new();
        let mut divs4 = Vec::new();
        let pre3 = SmallArray { d: 4, b: [k, b1, b2, 0, 0], c: [0, 1, c2, 0, 0] };
        let syl3 = sylvester(&pre3, 4);
        let (d2, d3) = (syl3[2], syl3[3]);
        let (mut lo, mut hi) = (c2, k);
        let pw = minors_at(&pre3, b1 - 1, 4);
        if self.prune {
            if sign_changes(&pw[..4]) >= 2 {
                out.stats.bump("pruned_prefix_window");
                return;
            }
            // D4 > 0 with b3 >= 1: c3 (D3 + b2 D2) < (k + 5) D3
            (lo, hi) = linear_range((k as i128 + 5) * d3, -(d3 + b2 as i128 * d2), Want::Pos, lo, hi);
        }
        if lo > hi {
            return;
        }
        let c3s = divisors_between(fn2, n2, lo, hi, self.prune, &mut divs);
        for c3 in c3s {
            let k3 = n2 / c3;
            if self.prune {
                if let Some(n) = self.g.m1_div {
                    let vmax = 1 + k + k2 + k3 + k3 * b2 / c3;
                    if n * vmax < k + a1 * a1 {
                        out.stats.bump("pruned_v_bound");
                        continue;
                    }
                }
            }
            let f3 = if self.prune { Some(divide(fn2, &self.sieve.factor(c3 as u64))) } else { None };
            // b2 <= a3 + 1
            let (mut b3_lo, mut b3_hi) = (1, b2.min(k - c3 - b2 + 1));
            if self.prune {
                // D4 = (k - b3 - c3 + 6) D3 - b2 c3 D2 > 0
                let a = (k - c3 + 6) as i128 * d3 - (b2 * c3) as i128 * d2;
                (b3_lo, b3_hi) = linear_range(a, -d3, Want::Pos, b3_lo, b3_hi);
                // at most one eigenvalue of the leading 4x4 block above b1 - 1
                let x = b1 - 1;
                let a = (x - k + c3) as i128 * pw[3] - (b2 * c3) as i128 * pw[2];
                (b3_lo, b3_hi) = count_range(&pw[..4], a, pw[3], true, false, b3_lo, b3_hi);
                if b3_lo > b3_hi {
                    out.stats.bump("pruned_prefix_window");
                    continue;
                }
            }
            for b3 in b3_lo..=b3_hi {
                // p^1_34 = k3 b3 / k
                if (k3 * b3) % k != 0 {
                    continue;
                }
                let a3 = k - b3 - c3;
                let pre = SmallArray { d: 4, b: [k, b1, b2, b3, 0], c: [0, 1, c2, c3, 0] };
                let (mut c4_lo, mut c4_hi) = (c3, k);
                if self.prune {
                    if (k3 * a3) % 2 != 0 {
                        out.stats.bump("pruned_f2");
                        continue;
                    }
                    // D5 = (k - c4 + 6) D4 - b3 c4 D3 > 0
                    let syl = sylvester(&pre, 5);
                    (c4_lo, c4_hi) =
                        linear_range((k as i128 + 6) * syl[4], -(syl[4] + b3 as i128 * syl[3]), Want::Pos, c4_lo, c4_hi);
                    if c4_lo > c4_hi {
                        out.stats.bump("pruned_c4_theta_min");
                        continue;
                    }
                    // θ1 <= b1 - 1
                    let x = b1 - 1;
                    let p = minors_at(&pre, x, 5);
                    let (a, b) = ((x - k) as i128 * p[4], p[4] - b3 as i128 * p[3]);
                    (c4_lo, c4_hi) = count_range(&p[..5], a, b, true, false, c4_lo, c4_hi);
                    if c4_lo > c4_hi {
                        out.stats.bump("pruned_c4_window");
                        continue;
                    }
                    (c4_lo, c4_hi) = self.side_range(&pre, 5, b3, c4_lo, c4_hi);
                    if c4_lo > c4_hi {
                        out.stats.bump("pruned_c4_side");
                        continue;
                    }
                }
                let n3 = k3 * b3;
                let c4s = match &f3 {
                    Some(f3) if c4_hi - c4_lo > 64 => {
                        let f = merge(f3, &self.sieve.factor(b3 as u64));
                        divisors_between(&f, n3, c4_lo, c4_hi, true, &mut divs4)
                    }
                    _ => divisors_between(&[], n3, c4_lo, c4_hi, false, &mut divs4),
                };
                for c4 in c4s {
                    let s = SmallArray { d: 4, b: [k, b1, b2, b3, 0], c: [0, 1, c2, c3, c4] };
                    self.finish(&s, out);
                }
            }
        }
    }
}

/// Divisors of `n` in `[lo, hi]`, from the factorization or by trial.
fn divisors_between(f: &[(u64, u32)], n: i64, lo: i64, hi: i64, factored: bool, buf: &mut Vec<u64>) -> Vec<i64> {
    if lo > hi {
        return Vec::new();
    }
    if factored {
        divisors_in(f, lo.max(1) as u64, hi as u64, buf);
        buf.iter().map(|&x| x as i64).collect()
    } else {
        (lo.max(1)..=hi).filter(|c| n % c == 0).collect()
    }
}

fn run_group(specs: &[&'static CaseSpec], opts: &SearchOptions) -> Result<Vec<SearchResult>> {
    let side = specs[0].side;
    let cap = |c: &CaseSpec| opts.kmax.map_or(c.kmax, |m| m.min(c.kmax));
    let kmax = specs.iter().map(|c| cap(c)).max().unwrap_or(0);
    let m1_div = if side == Side::AtLeastA1 {
        specs
            .iter()
            .map(|c| match c.m1 {
                M1::AtLeastK => Some(1),
                M1::AtLeastHalfK => Some(2),
                M1::BelowK => None,
            })
            .try_fold(1, |acc, x| x.map(|n| acc.max(n)))
    } else {
        None
    };
    let g = Group {
        side,
        kmax,
        d3: specs.iter().any(|c| c.diameters.contains(&3)),
        d4: specs.iter().any(|c| c.diameters.contains(&4)),
        m1_div,
    };
    let sieve = Sieve::new(((kmax.max(4) as usize) * (kmax.max(4) as usize)).max(1000));
    let ctx = Ctx { g: &g, sieve: &sieve, prune: opts.prune };
    let work = || -> Vec<KOut> { (4..=g.kmax).into_par_iter().map(|k| ctx.run_k(k)).collect() };
    let outs = match opts.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    };
    let mut stats = SearchStats { group: specs.iter().map(|c| c.name).collect(), ..Default::default() };
    let mut hits = Vec::new();
    for o in outs {
        stats.absorb(&o.stats);
        hits.extend(o.hits);
    }
    hits.sort_by(|a, b| a.array.cmp(&b.array));
    Ok(specs
        .iter()
        .map(|spec| {
            let kcap = cap(spec);
            let reports: Vec<FeasibilityReport> = hits
                .iter()
                .filter(|r| r.array.k() <= kcap && spec.matches(r))
                .cloned()
                .collect();
            SearchResult {
                case: spec.name,
                arrays: reports.iter().map(|r| r.array.clone()).collect(),
                reports,
                stats: stats.clone(),
            }
        })
        .collect())
}

/// Runs several cases, fusing those that share an enumeration.
pub fn search_cases(specs: &[&'static CaseSpec], opts: &SearchOptions) -> Result<Vec<SearchResult>> {
    let mut out = Vec::new();
    for side in [Side::AtLeastA1, Side::BelowA1] {
        let group: Vec<_> = specs.iter().copied().filter(|c| c.side == side).collect();
        if !group.is_empty() {
            out.extend(run_group(&group, opts)?);
        }
    }
    out.sort_by_key(|r| specs.iter().position(|c| c.name == r.case));
    Ok(out)
}

pub fn search_case(spec: &'static CaseSpec, opts: &SearchOptions) -> Result<SearchResult> {
    Ok(search_cases(&[spec], opts)?.pop().expect("one result per case"))
}

/// One array of the combined table with its attributions.
#[derive(Debug, Clone)]
pub struct CombinedRow {
    pub array: IntersectionArray,
    /// Case searches that returned the array.
    pub found_in: Vec<&'static str>,
    /// Cases whose predicates the computed spectrum satisfies.
    pub computed: Vec<&'static str>,
    /// Grouping in the reference table, if listed there.
    pub reference: Option<String>,
    pub report: FeasibilityReport,
}

impl CombinedRow {
    /// Reference grouping disagrees with the computed attribution.
    pub fn discrepancy(&self) -> bool {
        matches!(&self.reference, Some(r) if !self.computed.iter().any(|c| c == r))
    }
}

#[derive(Debug, Clone)]
pub struct CombinedResult {
    pub per_case: Vec<SearchResult>,
    pub rows: Vec<CombinedRow>,
}

impl CombinedResult {
    pub fn arrays(&self) -> Vec<IntersectionArray> {
        self.rows.iter().map(|r| r.array.clone()).collect()
    }

    pub fn case(&self, name: &str) -> Option<&SearchResult> {
        self.per_case.iter().find(|r| r.case == name)
    }
}

pub fn search_all(opts: &SearchOptions) -> Result<CombinedResult> {
    let specs: Vec<&'static CaseSpec> = CASES.iter().collect();
    let per_case = search_cases(&specs, opts)?;
    let reference = crate::golden::reference_table();
    let mut rows: BTreeMap<IntersectionArray, CombinedRow> = BTreeMap::new();
    for res in &per_case {
        for rep in &res.reports {
            let row = rows.entry(rep.array.clone()).or_insert_with(|| CombinedRow {
                array: rep.array.clone(),
                found_in: Vec::new(),
                computed: attribute(rep),
                reference: reference
                    .iter()
                    .find(|(_, a)| *a == rep.array)
                    .map(|(c, _)| c.clone()),
                report: rep.clone(),
            });
            row.found_in.push(res.case);
        }
    }
    Ok(CombinedResult { per_case, rows: rows.into_values().collect() })
}

/// `m1` of a report as an exact rational, when available.
pub fn m1_exact(r: &FeasibilityReport) -> Option<Q> {
    r.spectrum.m(1).exact().filter(|m| m.is_positive()).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_valency_slice_finds_known_array() {
        let g = Group { side: Side::BelowA1, kmax: 833, d3: true, d4: false, m1_div: None };
        let sieve = Sieve::new(10000);
        let ctx = Ctx { g: &g, sieve: &sieve, prune: true };
        let out = ctx.run_k(715);
        let found: Vec<String> = out.hits.iter().map(|h| h.array.to_string()).collect();
        assert!(found.contains(&"715,432,25;1,80,675".to_string()), "{found:?}");
        assert!(out.stats.get("arrays_generated") > 0);
    }
}
