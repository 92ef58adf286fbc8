//! Claw-free and structural inequalities on intersection arrays.
//!
//! Each filter reports whether its hypotheses hold. Hypotheses about the
//! graph itself (claws, quadrangles, geometricity) cannot be read off an
//! array; unless a [`StructuralContext`] decides them, the filter is marked
//! `conditional` and evaluated as if the hypothesis held.

use std::cmp::Ordering;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::array::IntersectionArray;
use crate::error::{Error, Result};
use crate::poly::{q, Q};
use crate::spectral::{EigValue, Multiplicity, Spectrum};
use crate::surd::QuadElem;

/// Facts about a concrete graph that sharpen or disable filters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StructuralContext {
    pub has_3_claw: Option<bool>,
    pub has_4_claw: Option<bool>,
    pub has_quadrangle: Option<bool>,
    pub geometric: Option<bool>,
    pub mu_min: Option<i64>,
    pub clique_number: Option<i64>,
    /// Coclique size examined by `shilla_coclique`; 4 when unset.
    pub coclique_size: Option<i64>,
}

impl StructuralContext {
    /// `Some(true)` if the graph has a 3-claw but no 4-claw.
    fn claw3_only(&self) -> Option<bool> {
        match (self.has_3_claw, self.has_4_claw) {
            (Some(true), Some(false)) => Some(true),
            (Some(false), _) | (_, Some(true)) => Some(false),
            _ => None,
        }
    }

    fn has_claw(&self, s: i64) -> Option<bool> {
        match s {
            3 => self.has_3_claw,
            4 => self.has_4_claw,
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FilterVerdict {
    pub name: &'static str,
    pub applicable: bool,
    /// Applicability assumes a graph property that was not verified.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub conditional: bool,
    /// `None` exactly when not applicable.
    pub pass: Option<bool>,
    /// Numeric comparison too close to call.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub marginal: bool,
    pub lhs: String,
    pub rhs: String,
    pub note: String,
}

impl FilterVerdict {
    fn skip(name: &'static str, note: impl Into<String>) -> Self {
        FilterVerdict {
            name,
            applicable: false,
            conditional: false,
            pass: None,
            marginal: false,
            lhs: String::new(),
            rhs: String::new(),
            note: note.into(),
        }
    }

    fn decided(name: &'static str, pass: bool, lhs: impl ToString, rhs: impl ToString) -> Self {
        FilterVerdict {
            name,
            applicable: true,
            conditional: false,
            pass: Some(pass),
            marginal: false,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            note: String::new(),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    fn conditional_on(mut self, hyp: Option<bool>, what: &str) -> Self {
        if hyp.is_none() {
            self.conditional = true;
            if !self.note.is_empty() {
                self.note.push_str("; ");
            }
            self.note.push_str("assumes ");
            self.note.push_str(what);
        }
        self
    }

    /// Applicable and failed.
    pub fn fails(&self) -> bool {
        self.pass == Some(false)
    }
}

/// A real number that is rational, quadratic, or only approximated.
#[derive(Debug, Clone)]
enum Real {
    Q(Q),
    Quad(QuadElem),
    F(f64),
}

impl Real {
    fn int(n: i64) -> Self {
        Real::Q(q(n))
    }

    fn from_eig(t: &EigValue) -> Self {
        match t {
            EigValue::Int(n) => Real::int(*n),
            EigValue::Surd(s) => Real::Quad(s.clone()),
            EigValue::Approx(r) => Real::F(r.value),
        }
    }

    fn from_mult(m: &Multiplicity) -> Self {
        match m {
            Multiplicity::Exact(x) => Real::Q(x.clone()),
            other => Real::F(other.to_f64()),
        }
    }

    fn f64(&self) -> f64 {
        match self {
            Real::Q(x) => x.to_f64().unwrap(),
            Real::Quad(x) => x.to_f64(),
            Real::F(x) => *x,
        }
    }

    fn binop(
        &self,
        o: &Real,
        fq: impl Fn(&Q, &Q) -> Q,
        fquad: impl Fn(&QuadElem, &QuadElem) -> QuadElem,
        ff: impl Fn(f64, f64) -> f64,
    ) -> Real {
        match (self, o) {
            (Real::Q(a), Real::Q(b)) => Real::Q(fq(a, b)),
            (Real::Q(a), Real::Quad(b)) => Real::Quad(fquad(&QuadElem::rational(a.clone(), b.n), b)),
            (Real::Quad(a), Real::Q(b)) => Real::Quad(fquad(a, &QuadElem::rational(b.clone(), a.n))),
            (Real::Quad(a), Real::Quad(b)) if a.n == b.n => Real::Quad(fquad(a, b)),
            _ => Real::F(ff(self.f64(), o.f64())),
        }
    }

    fn add(&self, o: &Real) -> Real {
        self.binop(o, |a, b| a + b, |a, b| a.add(b), |a, b| a + b)
    }

    fn mul(&self, o: &Real) -> Real {
        self.binop(o, |a, b| a * b, |a, b| a.mul(b), |a, b| a * b)
    }

    fn div(&self, o: &Real) -> Real {
        self.binop(o, |a, b| a / b, |a, b| a.div(b), |a, b| a / b)
    }

    fn neg(&self) -> Real {
        self.mul(&Real::int(-1))
    }

    /// Comparison and whether it is marginal (numeric and within 1e-9).
    fn cmp(&self, o: &Real) -> (Ordering, bool) {
        match self.add(&o.neg()) {
            Real::Q(d) => (d.cmp(&Q::zero()), false),
            Real::Quad(d) => (d.signum(), false),
            Real::F(d) => {
                let scale = self.f64().abs().max(o.f64().abs()).max(1.0);
                if d.abs() <= 1e-9 * scale {
                    (Ordering::Equal, true)
                } else {
                    (d.partial_cmp(&0.0).unwrap_or(Ordering::Equal), false)
                }
            }
        }
    }

    fn show(&self) -> String {
        match self {
            Real::Q(x) if x.is_integer() => x.to_integer().to_string(),
            Real::Q(x) => format!("{}/{}", x.numer(), x.denom()),
            Real::Quad(x) => x.to_string(),
            Real::F(x) => format!("{x:.12}"),
        }
    }
}

fn qfmt(x: &Q) -> String {
    Real::Q(x.clone()).show()
}

fn verdict_cmp(name: &'static str, lhs: &Real, rhs: &Real, want: &[Ordering]) -> FilterVerdict {
    let (ord, marginal) = lhs.cmp(rhs);
    let mut v = FilterVerdict::decided(name, want.contains(&ord), lhs.show(), rhs.show());
    if marginal {
        v.marginal = true;
        v.note = "numeric comparison within 1e-9 of the boundary".into();
    }
    v
}

/// Delsarte bound `1 + k/|θ_D|` on the order of a clique.
pub fn delsarte_bound(k: i64, theta_d: &EigValue) -> Result<DelsarteBound> {
    if theta_d.cmp_int(-1) != Ordering::Less {
        return Err(Error::Invalid(format!("Delsarte bound needs θ_D < -1, got {theta_d}")));
    }
    let r = Real::int(1).add(&Real::int(k).div(&Real::from_eig(theta_d).neg()));
    Ok(DelsarteBound(r))
}

/// Value of a Delsarte bound; exact unless `θ_D` was only approximated.
#[derive(Debug, Clone)]
pub struct DelsarteBound(Real);

impl DelsarteBound {
    pub fn exact(&self) -> Option<Q> {
        match &self.0 {
            Real::Q(x) => Some(x.clone()),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.f64()
    }

    /// Largest integer not exceeding the bound.
    pub fn floor(&self) -> i64 {
        match &self.0 {
            Real::Q(x) => x.floor().to_integer().to_i64().unwrap(),
            other => {
                let f = other.f64().floor();
                // the bound is irrational here, so it is never an integer
                f as i64
            }
        }
    }
}

impl std::fmt::Display for DelsarteBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0.show())
    }
}

/// Lower bound `-tδ/(2δ-t)` on `θ_D` for a graph with a `t`-claw and no
/// `(t+1)`-claw, with `δ = k/(a_1+1)`.
pub fn clawfree_theta_bound(t: i64, delta: &Q) -> Result<Q> {
    let two_d = delta * q(2);
    if two_d <= q(t) {
        return Err(Error::Invalid(format!("needs 2δ > t, got δ = {}", qfmt(delta))));
    }
    Ok(-(q(t) * delta) / (two_d - q(t)))
}

/// The clique order `((2δ-t)/(tδ)) k + 1` guaranteed by the same hypotheses.
pub fn clawfree_clique_bound(t: i64, delta: &Q, k: i64) -> Result<Q> {
    let two_d = delta * q(2);
    if two_d <= q(t) {
        return Err(Error::Invalid(format!("needs 2δ > t, got δ = {}", qfmt(delta))));
    }
    Ok((two_d - q(t)) / (q(t) * delta) * q(k) + q(1))
}

/// Lower bound `1 + 2(t-δ)(a_1+1)/(t(t-1))` on `c_2`.
pub fn clawfree_c2_bound(t: i64, delta: &Q, a1: i64) -> Result<Q> {
    if t < 3 {
        return Err(Error::Invalid(format!("needs t >= 3, got {t}")));
    }
    Ok(q(1) + (q(t) - delta) * q(2) / q(t * (t - 1)) * q(a1 + 1))
}

pub fn delta(arr: &IntersectionArray) -> Q {
    Q::new(arr.k().into(), (arr.a(1) + 1).into())
}

pub const FILTER_NAMES: [&str; 16] = [
    "nonterw_k",
    "nonterw_chain",
    "kyp_product",
    "kyp_theta1",
    "kyp_theta2",
    "small_theta1_d3",
    "m1_clique",
    "m1_irrational",
    "vka_b2",
    "vka_theta2",
    "surveyc2",
    "taylor_clique",
    "shilla_coclique",
    "clawfree_theta",
    "clawfree_c2",
    "vka_quadrangle",
];

const CLAW3: &str = "a 3-claw and no 4-claw";

/// Evaluates every filter, in the order of [`FILTER_NAMES`].
pub fn structural_filters(
    arr: &IntersectionArray,
    spec: &Spectrum,
    ctx: &StructuralContext,
) -> Result<Vec<FilterVerdict>> {
    arr.check_admissible()?;
    let d = arr.diameter();
    let k = arr.k();
    let a1 = arr.a(1);
    let c2 = arr.c(2);
    let b1 = arr.b(1);
    let th = |i: usize| Real::from_eig(spec.theta(i));
    let theta_d = spec.theta_min();
    let claw3 = ctx.claw3_only();
    let mut out = Vec::new();

    // non-Terwilliger bounds
    let nonterw_hyp = if k <= 2 * (a1 + 1) {
        Err("needs k > 2(a1+1)")
    } else if ctx.has_quadrangle == Some(false) {
        Err("graph is Terwilliger")
    } else {
        Ok(())
    };
    match nonterw_hyp {
        Err(why) => {
            out.push(FilterVerdict::skip("nonterw_k", why));
            out.push(FilterVerdict::skip("nonterw_chain", why));
        }
        Ok(()) => {
            let rhs = 3 * a1 - 3 * c2 + 7;
            out.push(
                FilterVerdict::decided("nonterw_k", k >= rhs, k, rhs)
                    .with_note("failure forces a Terwilliger graph")
                    .conditional_on(ctx.has_quadrangle, "an induced quadrangle"),
            );
            let bad = (1..=d).find(|&i| {
                arr.c(i) - arr.b(i) < arr.c(i - 1) - arr.b(i - 1) + a1 + 2
            });
            let v = match bad {
                None => FilterVerdict::decided("nonterw_chain", true, "all i", "holds"),
                Some(i) => FilterVerdict::decided(
                    "nonterw_chain",
                    false,
                    format!("c{i}-b{i} = {}", arr.c(i) - arr.b(i)),
                    arr.c(i - 1) - arr.b(i - 1) + a1 + 2,
                ),
            };
            out.push(v.conditional_on(ctx.has_quadrangle, "an induced quadrangle"));
        }
    }

    // (θ1+1)(θD+1) <= -b1, equality iff D = 2
    if d >= 2 {
        let lhs = th(1).add(&Real::int(1)).mul(&th(d).add(&Real::int(1)));
        let want: &[Ordering] = if d == 2 { &[Ordering::Equal] } else { &[Ordering::Less] };
        out.push(verdict_cmp("kyp_product", &lhs, &Real::int(-b1), want));
    } else {
        out.push(FilterVerdict::skip("kyp_product", "needs D >= 2"));
    }

    if d == 3 {
        let m = (a1 + 1 - c2).max(arr.a(3) - arr.b(2));
        out.push(verdict_cmp("kyp_theta1", &th(1), &Real::int(m), &[Ordering::Greater]));
        let e = arr.a(3) - arr.b(2);
        let (lo, hi) = (e.min(-1), e.max(-1));
        let t2 = th(2);
        let (o1, m1) = t2.cmp(&Real::int(lo));
        let (o2, m2) = t2.cmp(&Real::int(hi));
        let mut v = FilterVerdict::decided(
            "kyp_theta2",
            o1 != Ordering::Less && o2 != Ordering::Greater,
            t2.show(),
            format!("[{lo}, {hi}]"),
        );
        v.marginal = m1 || m2;
        out.push(v);
    } else {
        out.push(FilterVerdict::skip("kyp_theta1", "needs D = 3"));
        out.push(FilterVerdict::skip("kyp_theta2", "needs D = 3"));
    }

    // θ1 < a1 forces D <= 3 and, for D = 3, b1 < c3
    if d >= 2 && spec.theta(1).cmp_int(a1) == Ordering::Less {
        let pass = d <= 3 && (d != 3 || b1 < arr.c(3));
        let rhs = if d == 3 { format!("c3 = {}", arr.c(3)) } else { "D <= 3".into() };
        out.push(FilterVerdict::decided("small_theta1_d3", pass, format!("D = {d}, b1 = {b1}"), rhs));
    } else {
        out.push(FilterVerdict::skip("small_theta1_d3", "needs θ1 < a1"));
    }

    // m1 >= order of any clique
    if d >= 3 {
        let mut c = Q::from_integer(if a1 > 0 { 3 } else { 2 }.into());
        let mut cond_used = false;
        if let Some(w) = ctx.clique_number {
            c = c.max(q(w));
        }
        if claw3 != Some(false) {
            let del = delta(arr);
            let mut cond = Q::zero();
            if let Ok(x) = clawfree_clique_bound(3, &del, k) {
                cond = cond.max(x.ceil());
            }
            cond = cond.max(q(k - 1 - 2 * a1 + ctx.mu_min.unwrap_or(0)));
            if cond > c {
                c = cond;
                cond_used = true;
            }
        }
        let mut v = verdict_cmp(
            "m1_clique",
            &Real::from_mult(spec.m(1)),
            &Real::Q(c),
            &[Ordering::Greater, Ordering::Equal],
        );
        if cond_used {
            v = v.conditional_on(claw3, CLAW3);
        }
        out.push(v);
    } else {
        out.push(FilterVerdict::skip("m1_clique", "needs D >= 3"));
    }

    let m1 = Real::from_mult(spec.m(1));
    if d >= 3 && !spec.theta(1).is_integer() && m1.cmp(&Real::int(k)).0 == Ordering::Less {
        out.push(verdict_cmp(
            "m1_irrational",
            &m1,
            &Real::Q(Q::new(k.into(), 2.into())),
            &[Ordering::Greater, Ordering::Equal],
        ));
    } else {
        out.push(FilterVerdict::skip("m1_irrational", "needs D >= 3, θ1 irrational and m1 < k"));
    }

    // consequences of 3-claws without 4-claws when k < 3(a1+1)
    let vka_ok = d >= 3 && (3..3 * (a1 + 1)).contains(&k) && claw3 != Some(false);
    if vka_ok {
        let b2 = arr.b(2);
        let ratio = Real::int(k).div(&Real::from_eig(theta_d).neg());
        let (o, marginal) = Real::int(b2).cmp(&ratio);
        let pass = b2 <= a1 + 1 && b2 <= arr.a(3) + 1 && o != Ordering::Greater;
        let mut v = FilterVerdict::decided(
            "vka_b2",
            pass,
            format!("b2 = {b2}"),
            format!("min({}, {}, {})", a1 + 1, arr.a(3) + 1, ratio.show()),
        );
        v.marginal = marginal;
        out.push(v.conditional_on(claw3, CLAW3));
        if d == 3 {
            out.push(
                verdict_cmp("vka_theta2", &th(2), &Real::int(-1), &[Ordering::Greater, Ordering::Equal])
                    .conditional_on(claw3, CLAW3),
            );
        } else {
            out.push(FilterVerdict::skip("vka_theta2", "needs D = 3"));
        }
    } else {
        let why = "needs a 3-claw, no 4-claw, D >= 3 and 3 <= k < 3(a1+1)";
        out.push(FilterVerdict::skip("vka_b2", why));
        out.push(FilterVerdict::skip("vka_theta2", why));
    }

    // a1 > t(t+1)(c2+1)/2 forces a geometric graph with θD = -t
    let t = (2..=k).find(|&t| (t - 1) * (a1 + 1) < k && k < t * (a1 + t));
    match (t, ctx.geometric) {
        (Some(t), geo) if geo != Some(true) => {
            let premise = 2 * a1 > t * (t + 1) * (c2 + 1);
            let theta_is_t = theta_d.cmp_int(-t) == Ordering::Equal;
            let pass = !premise || (geo.is_none() && theta_is_t);
            out.push(
                FilterVerdict::decided(
                    "surveyc2",
                    pass,
                    format!("a1 = {a1}"),
                    format!("{}", Q::new((t * (t + 1) * (c2 + 1)).into(), 2.into())),
                )
                .with_note(format!("t = {t}; premise {}", if premise { "holds" } else { "fails" }))
                .conditional_on(geo.map(|g| !g), "a non-geometric graph"),
            );
        }
        (Some(_), _) => out.push(FilterVerdict::skip("surveyc2", "graph is geometric")),
        (None, _) => out.push(FilterVerdict::skip("surveyc2", "no t with (t-1)(a1+1) < k < t(a1+t)")),
    }

    // clique of order k-1-2a1+μmin against the Delsarte bound
    if claw3 != Some(false) && d >= 2 && theta_d.cmp_int(-1) == Ordering::Less {
        let mu = ctx.mu_min.unwrap_or(0);
        let lhs = Real::int(k - 1 - 2 * a1 + mu);
        let rhs = delsarte_bound(k, theta_d)?.0;
        out.push(
            verdict_cmp("taylor_clique", &lhs, &rhs, &[Ordering::Less, Ordering::Equal])
                .with_note(format!("μmin = {mu}"))
                .conditional_on(claw3, CLAW3),
        );
    } else {
        out.push(FilterVerdict::skip("taylor_clique", "needs a 3-claw, no 4-claw and θD < -1"));
    }

    // an s-coclique in a local graph needs c2 - 1 >= (s(a1+1) - k)/C(s,2)
    let s = ctx.coclique_size.unwrap_or(4);
    if ctx.has_claw(s) == Some(false) {
        out.push(FilterVerdict::skip("shilla_coclique", format!("graph has no {s}-claw")));
    } else {
        let lhs = s * (a1 + 1) - k;
        let rhs = s * (s - 1) / 2 * (c2 - 1);
        let pass = lhs <= rhs;
        let note = if pass {
            format!("{s}-cocliques in local graphs not excluded")
        } else {
            format!("no local {s}-coclique: graph is forced {s}-claw-free")
        };
        out.push(
            FilterVerdict::decided("shilla_coclique", pass, lhs, rhs)
                .with_note(note)
                .conditional_on(ctx.has_claw(s), &format!("a {s}-claw")),
        );
    }

    let del = delta(arr);
    if claw3 != Some(false) {
        match clawfree_theta_bound(3, &del) {
            Ok(b) => out.push(
                verdict_cmp("clawfree_theta", &Real::from_eig(theta_d), &Real::Q(b), &[Ordering::Greater, Ordering::Equal])
                    .with_note(format!("δ = {}", qfmt(&del)))
                    .conditional_on(claw3, CLAW3),
            ),
            Err(_) => out.push(FilterVerdict::skip("clawfree_theta", "needs 2δ > 3")),
        }
        let b = clawfree_c2_bound(3, &del, a1)?;
        out.push(
            verdict_cmp("clawfree_c2", &Real::int(c2), &Real::Q(b), &[Ordering::Greater, Ordering::Equal])
                .with_note(format!("δ = {}", qfmt(&del)))
                .conditional_on(claw3, CLAW3),
        );
    } else {
        out.push(FilterVerdict::skip("clawfree_theta", "needs a 3-claw and no 4-claw"));
        out.push(FilterVerdict::skip("clawfree_c2", "needs a 3-claw and no 4-claw"));
    }

    // 3-claws without 4-claws and 3 <= k < 3(a1+1) give an induced quadrangle
    if vka_ok {
        let lhs = match ctx.has_quadrangle {
            Some(true) => "quadrangle present",
            Some(false) => "no quadrangle",
            None => "unknown",
        };
        let pass = ctx.has_quadrangle != Some(false);
        out.push(
            FilterVerdict::decided("vka_quadrangle", pass, lhs, "quadrangle required")
                .conditional_on(claw3, CLAW3),
        );
    } else {
        out.push(FilterVerdict::skip(
            "vka_quadrangle",
            "needs a 3-claw, no 4-claw, D >= 3 and 3 <= k < 3(a1+1)",
        ));
    }

    debug_assert_eq!(out.len(), FILTER_NAMES.len());
    debug_assert!(out.iter().zip(FILTER_NAMES).all(|(v, n)| v.name == n));
    Ok(out)
}

pub fn find_filter<'a>(verdicts: &'a [FilterVerdict], name: &str) -> Option<&'a FilterVerdict> {
    verdicts.iter().find(|v| v.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;
    use crate::spectral::{spectrum, DEFAULT_TOL};

    fn qq(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn delsarte_values() {
        assert_eq!(delsarte_bound(39, &EigValue::Int(-3)).unwrap().exact(), Some(q(14)));
        assert_eq!(delsarte_bound(7, &EigValue::Int(-7)).unwrap().exact(), Some(q(2)));
        assert_eq!(delsarte_bound(15, &EigValue::Int(-5)).unwrap().exact(), Some(q(4)));
        assert!(delsarte_bound(5, &EigValue::Int(-1)).is_err());
    }

    #[test]
    fn theta_bound_values() {
        assert_eq!(clawfree_theta_bound(3, &q(2)).unwrap(), q(-6));
        assert_eq!(clawfree_theta_bound(3, &qq(7, 3)).unwrap(), qq(-21, 5));
        assert_eq!(clawfree_theta_bound(3, &qq(5, 2)).unwrap(), qq(-15, 4));
        assert!(clawfree_theta_bound(3, &qq(3, 2)).is_err());
    }

    #[test]
    fn c2_bound_values() {
        assert_eq!(clawfree_c2_bound(3, &q(3), 7).unwrap(), q(1));
        assert_eq!(clawfree_c2_bound(3, &qq(13, 5), 14).unwrap(), q(3));
        assert_eq!(clawfree_c2_bound(3, &q(2), 8).unwrap(), q(4));
    }

    fn filters(s: &str) -> Vec<FilterVerdict> {
        let a = parse_array(s).unwrap();
        let sp = spectrum(&a, DEFAULT_TOL).unwrap();
        structural_filters(&a, &sp, &StructuralContext::default()).unwrap()
    }

    #[test]
    fn nonterw_k_fails_for_27() {
        let f = filters("27,16,4;1,2,24");
        let v = find_filter(&f, "nonterw_k").unwrap();
        assert_eq!(v.pass, Some(false));
        assert_eq!((v.lhs.as_str(), v.rhs.as_str()), ("27", "31"));
    }

    #[test]
    fn shilla_and_kyp_for_39() {
        let f = filters("39,24,1;1,4,39");
        let v = find_filter(&f, "shilla_coclique").unwrap();
        assert_eq!((v.lhs.as_str(), v.rhs.as_str(), v.pass), ("21", "18", Some(false)));
        let v = find_filter(&f, "kyp_product").unwrap();
        assert_eq!((v.lhs.as_str(), v.rhs.as_str(), v.pass), ("-28", "-24", Some(true)));
    }

    #[test]
    fn fixed_order() {
        let f = filters("10,6,1;1,3,10");
        let names: Vec<_> = f.iter().map(|v| v.name).collect();
        assert_eq!(names, FILTER_NAMES);
        let v = find_filter(&f, "kyp_product").unwrap();
        // (sqrt(10)+1)(1-sqrt(10)) = -9 < -b1 = -6
        assert_eq!(v.lhs, "-9");
        assert_eq!(v.pass, Some(true));
    }
}
