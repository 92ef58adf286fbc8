//! Eigenvalues and multiplicities of an intersection array.
//!
//! The eigenvalues of a distance-regular graph are those of the tridiagonal
//! matrix `L1` with rows `(c_i, a_i, b_i)`. Multiplicities come from Biggs'
//! formula `m(θ) = v / Σ k_i u_i(θ)^2`, where `u` is the standard sequence.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::array::{DerivedParams, IntersectionArray};
use crate::brent::brentq;
use crate::error::{Error, Result};
use crate::poly::{q, Poly, Q};
use crate::surd::QuadElem;

pub const DEFAULT_TOL: f64 = 1e-12;

/// Monic integer characteristic polynomial of `L1`, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    pub coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn poly(&self) -> Poly {
        Poly::from_bigints(&self.coeffs)
    }

    pub fn eval_int(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly().fmt(f)
    }
}

/// Leading principal minors `det(xI - L1[..i])` for `i = 0..=D+1`.
pub fn minor_chain(arr: &IntersectionArray) -> Vec<Poly> {
    let d = arr.diameter();
    let mut p = vec![Poly::constant(q(1)), Poly::x()];
    for i in 1..=d {
        let shift = Poly::linear(&q(arr.a(i)));
        let next = shift
            .mul(&p[i])
            .sub(&p[i - 1].scale(&q(arr.b(i - 1) * arr.c(i))));
        p.push(next);
    }
    p
}

pub fn char_poly(arr: &IntersectionArray) -> Result<CharPoly> {
    arr.check_admissible()?;
    let p = minor_chain(arr).pop().expect("chain is non-empty");
    Ok(CharPoly { coeffs: p.to_bigints().expect("integer recurrence") })
}

/// A real algebraic number isolated in `[lo, hi]` as the unique root there
/// of `minpoly`.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxRoot {
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
    pub minpoly: Poly,
    /// `minpoly` is known to be irreducible over the rationals.
    pub irreducible: bool,
}

impl ApproxRoot {
    /// Exact comparison of the root with a rational.
    pub fn cmp_q(&self, x: &Q) -> Ordering {
        let lo = Q::from_float(self.lo).expect("finite");
        let hi = Q::from_float(self.hi).expect("finite");
        if *x < lo {
            return Ordering::Greater;
        }
        if *x > hi {
            return Ordering::Less;
        }
        let sx = self.minpoly.sign_at(x);
        if sx == Ordering::Equal {
            return Ordering::Equal;
        }
        if sx == self.minpoly.sign_at(&lo) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum EigValue {
    Int(i64),
    Surd(QuadElem),
    Approx(ApproxRoot),
}

impl EigValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            EigValue::Int(n) => *n as f64,
            EigValue::Surd(s) => s.to_f64(),
            EigValue::Approx(r) => r.value,
        }
    }

    /// Enclosing interval; degenerate for integers.
    pub fn interval(&self) -> (f64, f64) {
        match self {
            EigValue::Int(n) => (*n as f64, *n as f64),
            EigValue::Surd(s) => {
                let x = s.to_f64();
                let e = x.abs().max(1.0) * 4.0 * f64::EPSILON;
                (x - e, x + e)
            }
            EigValue::Approx(r) => (r.lo, r.hi),
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            EigValue::Int(n) => Some(*n),
            _ => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, EigValue::Int(_))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            EigValue::Int(_) => "int",
            EigValue::Surd(_) => "surd",
            EigValue::Approx(_) => "approx",
        }
    }

    /// Exact comparison with a rational.
    pub fn cmp_q(&self, x: &Q) -> Ordering {
        match self {
            EigValue::Int(n) => q(*n).cmp(x),
            EigValue::Surd(s) => s.cmp_q(x),
            EigValue::Approx(r) => r.cmp_q(x),
        }
    }

    pub fn cmp_int(&self, x: i64) -> Ordering {
        self.cmp_q(&q(x))
    }

    /// `kind:value`, as used in CSV reports.
    pub fn tagged(&self) -> String {
        format!("{}:{}", self.kind(), self)
    }
}

impl fmt::Display for EigValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigValue::Int(n) => write!(f, "{n}"),
            EigValue::Surd(s) => write!(f, "{s}"),
            EigValue::Approx(r) => write!(f, "{:.12}", r.value),
        }
    }
}

fn deflate_linear(p: &Poly, r: i64) -> Poly {
    let (quo, rem) = p.div_rem(&Poly::linear(&q(r)));
    debug_assert!(rem.is_zero());
    quo
}

/// Divisor search in `i128`; `None` when a coefficient or a value overflows.
fn small_integer_root(p: &Poly, bound: i64) -> Option<Option<i64>> {
    let cs: Vec<i128> = (0..=p.degree())
        .map(|i| {
            let c = p.coeff(i);
            c.is_integer().then(|| c.to_integer().to_i128()).flatten()
        })
        .collect::<Option<_>>()?;
    let c0 = cs[0].unsigned_abs();
    for d in 1..=bound {
        if !c0.is_multiple_of(d as u128) {
            continue;
        }
        for r in [d, -d] {
            let mut acc: i128 = 0;
            for c in cs.iter().rev() {
                acc = acc.checked_mul(r as i128)?.checked_add(*c)?;
            }
            if acc == 0 {
                return Some(Some(r));
            }
        }
    }
    Some(None)
}

/// Integer roots of a monic integer polynomial with all roots in `[-bound, bound]`.
fn integer_roots(p: &mut Poly, bound: i64) -> Vec<i64> {
    let mut roots = Vec::new();
    loop {
        if p.degree() == 0 {
            return roots;
        }
        let c0 = p.coeff(0);
        if c0.is_zero() {
            roots.push(0);
            *p = deflate_linear(p, 0);
            continue;
        }
        if let Some(r) = small_integer_root(p, bound) {
            match r {
                Some(r) => {
                    roots.push(r);
                    *p = deflate_linear(p, r);
                    continue;
                }
                None => return roots,
            }
        }
        let c0 = c0.to_integer().abs();
        let mut found = None;
        for d in 1..=bound {
            if !c0.is_multiple_of(&BigInt::from(d)) {
                continue;
            }
            for r in [d, -d] {
                if p.eval(&q(r)).is_zero() {
                    found = Some(r);
                    break;
                }
            }
            if found.is_some() {
                break;
            }
        }
        match found {
            Some(r) => {
                roots.push(r);
                *p = deflate_linear(p, r);
            }
            None => return roots,
        }
    }
}

/// Disjoint rational intervals, each containing exactly one root of `p`.
fn isolate(p: &Poly) -> Vec<(Q, Q)> {
    let b = p.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = p.count_roots(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 && !p.sign_at(&lo).is_eq() && !p.sign_at(&hi).is_eq() {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / q(2);
        // push upper half first so lower intervals come out first
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort();
    out
}

/// Shrinks `[lo, hi]` around the root by exact-sign bisection until its
/// width is at most `tol`; uses a Brent estimate as the first split point.
fn refine(p: &Poly, lo: Q, hi: Q, tol: f64) -> (f64, f64, f64) {
    let lo_f = lo.to_f64().unwrap();
    let hi_f = hi.to_f64().unwrap();
    let est = brentq(|x| p.eval_f64(x), lo_f, hi_f, tol / 4.0, 0.0, 200)
        .unwrap_or((lo_f + hi_f) / 2.0);
    let s_lo = p.sign_at(&lo);
    let mut lo = lo;
    let mut hi = hi;
    let w = tol / 2.0;
    for cand in [est - w, est + w] {
        if let Some(x) = Q::from_float(cand) {
            if x > lo && x < hi {
                if p.sign_at(&x) == s_lo {
                    lo = x;
                } else {
                    hi = x;
                }
            }
        }
    }
    while (&hi - &lo).to_f64().unwrap() > tol {
        let mid_f = ((&lo + &hi) / q(2)).to_f64().unwrap();
        let mid = Q::from_float(mid_f).unwrap();
        if mid <= lo || mid >= hi {
            break;
        }
        if p.sign_at(&mid) == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (lo_f, hi_f) = (lo.to_f64().unwrap(), hi.to_f64().unwrap());
    let value = if est >= lo_f && est <= hi_f { est } else { (lo_f + hi_f) / 2.0 };
    (value, lo_f, hi_f)
}

/// The `D+1` distinct eigenvalues of `L1`, strictly decreasing.
///
/// Integer roots are found by divisor testing, quadratic factors are solved
/// exactly, and anything left is isolated and bracketed to width `tol`.
pub fn eigenvalues(arr: &IntersectionArray, tol: f64) -> Result<Vec<EigValue>> {
    if !(tol > 0.0) {
        return Err(Error::Invalid(format!("tolerance must be positive, got {tol}")));
    }
    let cp = char_poly(arr)?;
    let k = arr.k();
    let d = arr.diameter();
    let mut rest = deflate_linear(&cp.poly(), k);
    let mut vals: Vec<EigValue> = vec![EigValue::Int(k)];
    vals.extend(integer_roots(&mut rest, k).into_iter().map(EigValue::Int));

    let mut approx_roots: Vec<(f64, Q, Q)> = Vec::new();
    if rest.degree() == 2 {
        let (hi, lo) = QuadElem::quadratic_roots(&rest.coeff(1), &rest.coeff(0))
            .ok_or(Error::RootIsolation { expected: d + 1, found: vals.len() })?;
        vals.push(EigValue::Surd(hi));
        vals.push(EigValue::Surd(lo));
    } else if rest.degree() > 2 {
        for (lo, hi) in isolate(&rest) {
            let x = brentq(
                |x| rest.eval_f64(x),
                lo.to_f64().unwrap(),
                hi.to_f64().unwrap(),
                1e-14,
                1e-15,
                200,
            )
            .unwrap_or_else(|| ((&lo + &hi) / q(2)).to_f64().unwrap());
            approx_roots.push((x, lo, hi));
        }
        // split off quadratic factors with integer coefficients
        let mut i = 0;
        'outer: while i < approx_roots.len() {
            for j in i + 1..approx_roots.len() {
                let (x, y) = (approx_roots[i].0, approx_roots[j].0);
                let s = (x + y).round() as i64;
                let p = (x * y).round() as i64;
                let fac = Poly::from_i64(&[p, -s, 1]);
                if fac.divides(&rest) {
                    if let Some((hi, lo)) = QuadElem::quadratic_roots(&q(-s), &q(p)) {
                        vals.push(EigValue::Surd(hi));
                        vals.push(EigValue::Surd(lo));
                        rest = rest.div_rem(&fac).0;
                        approx_roots.remove(j);
                        approx_roots.remove(i);
                        continue 'outer;
                    }
                }
            }
            i += 1;
        }
        let irreducible = rest.degree() <= 5;
        for (x, lo, hi) in approx_roots {
            let n = x.round();
            if (x - n).abs() < 1e-9 && rest.eval(&q(n as i64)).is_zero() {
                vals.push(EigValue::Int(n as i64));
                continue;
            }
            let (value, lo, hi) = refine(&rest, lo, hi, tol);
            vals.push(EigValue::Approx(ApproxRoot {
                value,
                lo,
                hi,
                minpoly: rest.clone(),
                irreducible,
            }));
        }
    }
    vals.sort_by(|a, b| b.to_f64().total_cmp(&a.to_f64()));
    let distinct = vals.windows(2).all(|w| w[0].to_f64() > w[1].to_f64());
    if vals.len() != d + 1 || !distinct {
        return Err(Error::RootIsolation { expected: d + 1, found: vals.len() });
    }
    Ok(vals)
}

/// Values `u_0..u_D` of the standard sequence at an eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub enum StandardSequence {
    Rational(Vec<Q>),
    Quadratic(Vec<QuadElem>),
    /// Values with an error bound obtained from the enclosing interval.
    Numeric { values: Vec<f64>, error: Vec<f64> },
}

impl StandardSequence {
    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            StandardSequence::Rational(v) => v.iter().map(|x| x.to_f64().unwrap()).collect(),
            StandardSequence::Quadratic(v) => v.iter().map(|x| x.to_f64()).collect(),
            StandardSequence::Numeric { values, .. } => values.clone(),
        }
    }
}

/// Standard sequence at a rational test value.
pub fn standard_sequence_q(arr: &IntersectionArray, theta: &Q) -> Vec<Q> {
    let d = arr.diameter();
    let mut u = vec![q(1), theta / q(arr.k())];
    for i in 1..d {
        let next = ((theta - q(arr.a(i))) * &u[i] - q(arr.c(i)) * &u[i - 1]) / q(arr.b(i));
        u.push(next);
    }
    u.truncate(d + 1);
    u
}

fn standard_sequence_quad(arr: &IntersectionArray, theta: &QuadElem) -> Vec<QuadElem> {
    let d = arr.diameter();
    let n = theta.n;
    let mut u = vec![QuadElem::one(n), theta.scale(&(Q::one() / q(arr.k())))];
    for i in 1..d {
        let t = theta.add_q(&q(-arr.a(i))).mul(&u[i]);
        let next = t
            .sub(&u[i - 1].scale(&q(arr.c(i))))
            .scale(&(Q::one() / q(arr.b(i))));
        u.push(next);
    }
    u.truncate(d + 1);
    u
}

/// Standard sequence with entries reduced modulo `f`, i.e. as elements of
/// `Q[x]/(f)` evaluated at a root of `f`.
fn standard_sequence_mod(arr: &IntersectionArray, f: &Poly) -> Vec<Poly> {
    let d = arr.diameter();
    let x = Poly::x().rem(f);
    let mut u = vec![Poly::constant(q(1)), x.scale(&(Q::one() / q(arr.k())))];
    for i in 1..d {
        let t = x.sub(&Poly::constant(q(arr.a(i)))).mul(&u[i]).rem(f);
        let next = t.sub(&u[i - 1].scale(&q(arr.c(i)))).scale(&(Q::one() / q(arr.b(i))));
        u.push(next);
    }
    u.truncate(d + 1);
    u
}

fn standard_sequence_f64(arr: &IntersectionArray, theta: f64) -> Vec<f64> {
    let d = arr.diameter();
    let mut u = vec![1.0, theta / arr.k() as f64];
    for i in 1..d {
        let next = ((theta - arr.a(i) as f64) * u[i] - arr.c(i) as f64 * u[i - 1]) / arr.b(i) as f64;
        u.push(next);
    }
    u.truncate(d + 1);
    u
}

pub fn standard_sequence(arr: &IntersectionArray, theta: &EigValue) -> StandardSequence {
    match theta {
        EigValue::Int(n) => StandardSequence::Rational(standard_sequence_q(arr, &q(*n))),
        EigValue::Surd(s) => StandardSequence::Quadratic(standard_sequence_quad(arr, s)),
        EigValue::Approx(r) => {
            let values = standard_sequence_f64(arr, r.value);
            let lo = standard_sequence_f64(arr, r.lo);
            let hi = standard_sequence_f64(arr, r.hi);
            let error = (0..values.len())
                .map(|i| (lo[i] - values[i]).abs().max((hi[i] - values[i]).abs()))
                .collect();
            StandardSequence::Numeric { values, error }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Multiplicity {
    Exact(Q),
    /// Provably irrational; the value is an approximation.
    Irrational(f64),
    /// Exactness could not be decided.
    Numeric(f64),
}

impl Multiplicity {
    pub fn to_f64(&self) -> f64 {
        match self {
            Multiplicity::Exact(x) => x.to_f64().unwrap(),
            Multiplicity::Irrational(x) | Multiplicity::Numeric(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&Q> {
        match self {
            Multiplicity::Exact(x) => Some(x),
            _ => None,
        }
    }

    /// Exact positive integer value, if any.
    pub fn positive_integer(&self) -> Option<BigInt> {
        self.exact()
            .filter(|x| x.is_integer() && x.is_positive())
            .map(|x| x.to_integer())
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Multiplicity::Exact(_) => "rational",
            Multiplicity::Irrational(_) => "irrational",
            Multiplicity::Numeric(_) => "numeric",
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Exact(x) if x.is_integer() => write!(f, "{}", x.to_integer()),
            Multiplicity::Exact(x) => write!(f, "{}/{}", x.numer(), x.denom()),
            Multiplicity::Irrational(x) | Multiplicity::Numeric(x) => write!(f, "~{x:.9}"),
        }
    }
}

/// Biggs' formula `m(θ) = v / Σ k_i u_i(θ)^2`.
pub fn multiplicity(arr: &IntersectionArray, theta: &EigValue) -> Result<Multiplicity> {
    multiplicity_with(arr, &arr.derive()?, theta, &mut Vec::new())
}

/// `surd_sums` caches `Σ k_i u_i^2` per surd; a conjugate reuses it.
fn multiplicity_with(
    arr: &IntersectionArray,
    dp: &DerivedParams,
    theta: &EigValue,
    surd_sums: &mut Vec<(QuadElem, QuadElem)>,
) -> Result<Multiplicity> {
    let v = &dp.v;
    Ok(match theta {
        EigValue::Int(n) => {
            let u = standard_sequence_q(arr, &q(*n));
            let s = u.iter().zip(&dp.k_i).fold(Q::zero(), |s, (x, k)| s + k * x * x);
            Multiplicity::Exact(v / s)
        }
        EigValue::Surd(t) => {
            let s = match surd_sums.iter().find(|(x, _)| x.conj() == *t) {
                Some((_, s)) => s.conj(),
                None => {
                    let u = standard_sequence_quad(arr, t);
                    u.iter()
                        .zip(&dp.k_i)
                        .fold(QuadElem::zero(t.n), |s, (x, k)| s.add(&x.mul(x).scale(k)))
                }
            };
            surd_sums.push((t.clone(), s.clone()));
            if s.is_rational() {
                Multiplicity::Exact(v / s.a)
            } else {
                Multiplicity::Irrational(v.to_f64().unwrap() / s.to_f64())
            }
        }
        EigValue::Approx(r) => {
            let u = standard_sequence_mod(arr, &r.minpoly);
            let s = u
                .iter()
                .zip(&dp.k_i)
                .fold(Poly::zero(), |s, (x, k)| s.add(&x.mul(x).rem(&r.minpoly).scale(k)));
            let approx = v.to_f64().unwrap() / s.eval_f64(r.value);
            if s.is_constant() {
                Multiplicity::Exact(v / s.coeff(0))
            } else if r.irreducible {
                Multiplicity::Irrational(approx)
            } else {
                Multiplicity::Numeric(approx)
            }
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<EigValue>,
    pub multiplicities: Vec<Multiplicity>,
}

impl Spectrum {
    pub fn theta(&self, i: usize) -> &EigValue {
        &self.eigenvalues[i]
    }

    pub fn m(&self, i: usize) -> &Multiplicity {
        &self.multiplicities[i]
    }

    /// Smallest eigenvalue.
    pub fn theta_min(&self) -> &EigValue {
        self.eigenvalues.last().expect("non-empty spectrum")
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn records(&self) -> Vec<EigRecord> {
        self.eigenvalues
            .iter()
            .zip(&self.multiplicities)
            .map(|(t, m)| EigRecord::new(t, m))
            .collect()
    }
}

pub fn spectrum(arr: &IntersectionArray, tol: f64) -> Result<Spectrum> {
    let eigenvalues = eigenvalues(arr, tol)?;
    let dp = arr.derive()?;
    let mut cache = Vec::new();
    let multiplicities = eigenvalues
        .iter()
        .map(|t| multiplicity_with(arr, &dp, t, &mut cache))
        .collect::<Result<Vec<_>>>()?;
    Ok(Spectrum { eigenvalues, multiplicities })
}

/// Serialized form of one eigenvalue with its multiplicity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigRecord {
    pub kind: &'static str,
    pub value: String,
    pub approx: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lo: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hi: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minpoly: Option<String>,
    pub multiplicity: String,
    pub multiplicity_kind: &'static str,
}

impl EigRecord {
    pub fn new(t: &EigValue, m: &Multiplicity) -> Self {
        let (lo, hi, minpoly) = match t {
            EigValue::Approx(r) => (Some(r.lo), Some(r.hi), Some(r.minpoly.to_string())),
            _ => (None, None, None),
        };
        EigRecord {
            kind: t.kind(),
            value: t.to_string(),
            approx: t.to_f64(),
            lo,
            hi,
            minpoly,
            multiplicity: m.to_string(),
            multiplicity_kind: m.kind(),
        }
    }
}

/// Residual of one closed-walk identity `Σ m_i θ_i^ℓ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceResidual {
    pub power: u32,
    pub expected: String,
    pub residual: String,
    pub exact: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceReport {
    pub pass: bool,
    pub residuals: Vec<TraceResidual>,
}

/// Power sums of the roots of a monic polynomial (Newton's identities).
fn power_sums(f: &Poly, maxpow: u32) -> Vec<Q> {
    let f = f.monic();
    let n = f.degree();
    // e-coefficients: f = x^n + c_{n-1} x^{n-1} + ... ; s_l + Σ_{j=1}^{l-1} c_{n-j} s_{l-j} + l c_{n-l} = 0
    let c = |j: usize| if j <= n { f.coeff(n - j) } else { Q::zero() };
    let mut s = vec![q(n as i64)];
    for l in 1..=maxpow as usize {
        let mut acc = c(l) * q(l as i64);
        for j in 1..l {
            acc += c(j) * &s[l - j];
        }
        s.push(-acc);
    }
    s
}

fn pow_quad(x: &QuadElem, l: u32) -> QuadElem {
    (0..l).fold(QuadElem::one(x.n), |acc, _| acc.mul(x))
}

/// Checks `Σ m_i θ_i^ℓ` against `v`, `0`, `vk`, `vk a_1` for `ℓ = 0..=maxpow`.
///
/// Sums are exact whenever every eigenvalue is an integer, a conjugate surd
/// pair with equal rational multiplicities, or a complete set of conjugate
/// roots of one minimal polynomial with a common rational multiplicity.
pub fn trace_check(arr: &IntersectionArray, spec: &Spectrum, maxpow: u32) -> Result<TraceReport> {
    if maxpow > 3 {
        return Err(Error::Invalid(format!("maxpow must be at most 3, got {maxpow}")));
    }
    let dp = arr.derive()?;
    let v = dp.v.clone();
    let k = q(arr.k());
    let expected = [v.clone(), Q::zero(), &v * &k, &v * &k * q(arr.a(1))];

    let n = spec.len();
    let mut exact = vec![Q::zero(); maxpow as usize + 1];
    let mut numeric = vec![0.0f64; maxpow as usize + 1];
    let mut all_exact = true;
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] {
            continue;
        }
        let m = spec.multiplicities[i].exact();
        match (&spec.eigenvalues[i], m) {
            (EigValue::Int(t), Some(m)) => {
                used[i] = true;
                for (l, e) in exact.iter_mut().enumerate() {
                    *e += m * Q::from_integer(BigInt::from(*t).pow(l as u32));
                }
            }
            (EigValue::Surd(s), Some(m)) => {
                let partner = (i + 1..n).find(|&j| {
                    !used[j]
                        && matches!(&spec.eigenvalues[j], EigValue::Surd(o) if *o == s.conj())
                        && spec.multiplicities[j].exact() == Some(m)
                });
                if let Some(j) = partner {
                    used[i] = true;
                    used[j] = true;
                    for (l, e) in exact.iter_mut().enumerate() {
                        let p = pow_quad(s, l as u32);
                        *e += m * p.a * q(2);
                    }
                }
            }
            (EigValue::Approx(r), Some(m)) => {
                let group: Vec<usize> = (i..n)
                    .filter(|&j| {
                        !used[j]
                            && matches!(&spec.eigenvalues[j], EigValue::Approx(o) if o.minpoly == r.minpoly)
                            && spec.multiplicities[j].exact() == Some(m)
                    })
                    .collect();
                if group.len() == r.minpoly.degree() {
                    for &j in &group {
                        used[j] = true;
                    }
                    let ps = power_sums(&r.minpoly, maxpow);
                    for (l, e) in exact.iter_mut().enumerate() {
                        *e += m * &ps[l];
                    }
                }
            }
            _ => {}
        }
        if !used[i] {
            all_exact = false;
            used[i] = true;
            let t = spec.eigenvalues[i].to_f64();
            let m = spec.multiplicities[i].to_f64();
            for (l, e) in numeric.iter_mut().enumerate() {
                *e += m * t.powi(l as i32);
            }
        }
    }

    let mut residuals = Vec::new();
    for l in 0..=maxpow as usize {
        let res = &exact[l] - &expected[l];
        if all_exact {
            residuals.push(TraceResidual {
                power: l as u32,
                expected: expected[l].to_string(),
                residual: res.to_string(),
                exact: true,
                pass: res.is_zero(),
            });
        } else {
            let r = res.to_f64().unwrap() + numeric[l];
            let scale = expected[2].to_f64().unwrap().max(1.0) * (k.to_f64().unwrap()).powi(l as i32);
            residuals.push(TraceResidual {
                power: l as u32,
                expected: expected[l].to_string(),
                residual: format!("{r:e}"),
                exact: false,
                pass: r.abs() <= 1e-9 * scale,
            });
        }
    }
    Ok(TraceReport { pass: residuals.iter().all(|r| r.pass), residuals })
}

/// Closed-form spectrum of the Taylor array `{k, c2, 1; 1, c2, k}`.
pub fn taylor_spectrum(k: i64, c2: i64) -> Result<Spectrum> {
    if !(k > c2 && c2 >= 1) {
        return Err(Error::Invalid(format!("taylor_spectrum needs k > c2 >= 1, got k={k}, c2={c2}")));
    }
    let s = k - 2 * c2 - 1;
    let disc = s * s + 4 * k;
    let kq = q(k);
    let k1 = q(k + 1);
    let root = (disc as f64).sqrt().round() as i64;
    let (t1, t3, m1, m3) = if root * root == disc {
        let t1 = (s + root) / 2;
        let t3 = (s - root) / 2;
        let t1sq = q(t1 * t1);
        let m1 = &kq * &k1 / (&t1sq + &kq);
        let m3 = &t1sq * &k1 / (&t1sq + &kq);
        (EigValue::Int(t1), EigValue::Int(t3), Multiplicity::Exact(m1), Multiplicity::Exact(m3))
    } else {
        let (hi, lo) = QuadElem::quadratic_roots(&q(-s), &q(-k)).expect("non-square discriminant");
        let t1sq = hi.mul(&hi);
        let den = t1sq.add_q(&kq);
        let m1 = QuadElem::rational(&kq * &k1, hi.n).div(&den);
        let m3 = t1sq.scale(&k1).div(&den);
        let wrap = |x: QuadElem| {
            if x.is_rational() {
                Multiplicity::Exact(x.a)
            } else {
                Multiplicity::Irrational(x.to_f64())
            }
        };
        (EigValue::Surd(hi), EigValue::Surd(lo), wrap(m1), wrap(m3))
    };
    Ok(Spectrum {
        eigenvalues: vec![EigValue::Int(k), t1, EigValue::Int(-1), t3],
        multiplicities: vec![Multiplicity::Exact(q(1)), m1, Multiplicity::Exact(kq), m3],
    })
}

/// Exact integer value of a big rational, if it has one and fits.
pub fn as_i64(x: &Q) -> Option<i64> {
    x.is_integer().then(|| x.to_integer().to_i64()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;

    fn arr(s: &str) -> IntersectionArray {
        parse_array(s).unwrap()
    }

    fn qq(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn char_poly_values() {
        let cp = char_poly(&arr("10,6,1;1,3,10")).unwrap();
        assert_eq!(cp.to_string(), "x^4 - 9x^3 - 20x^2 + 90x + 100");
        let cp = char_poly(&arr("7;1")).unwrap();
        assert_eq!(cp.poly(), Poly::from_i64(&[-7, -6, 1]));
        assert!(cp.eval_int(7).is_zero());
    }

    #[test]
    fn integer_spectrum() {
        let a = arr("39,24,1;1,4,39");
        let s = spectrum(&a, DEFAULT_TOL).unwrap();
        let th: Vec<_> = s.eigenvalues.iter().map(|t| t.as_int().unwrap()).collect();
        assert_eq!(th, vec![39, 13, -1, -3]);
        let m: Vec<_> = s.multiplicities.iter().map(|m| m.exact().unwrap().clone()).collect();
        assert_eq!(m, vec![q(1), q(45), q(39), q(195)]);
    }

    #[test]
    fn surd_spectrum() {
        let s = spectrum(&arr("10,6,1;1,3,10"), DEFAULT_TOL).unwrap();
        let shown: Vec<_> = s.eigenvalues.iter().map(|t| t.to_string()).collect();
        assert_eq!(shown, vec!["10", "sqrt(10)", "-1", "-sqrt(10)"]);
        let m: Vec<_> = s.multiplicities.iter().map(|m| m.to_string()).collect();
        assert_eq!(m, vec!["1", "11", "10", "11"]);
    }

    #[test]
    fn standard_sequence_values() {
        let a = arr("39,24,1;1,4,39");
        assert_eq!(
            standard_sequence_q(&a, &q(13)),
            vec![q(1), qq(1, 3), qq(-1, 18), qq(-1, 6)]
        );
        assert_eq!(standard_sequence_q(&a, &q(39)), vec![q(1); 4]);
        let a = arr("10,6,1;1,3,10");
        assert_eq!(
            standard_sequence_q(&a, &q(-1)),
            vec![q(1), qq(-1, 10), qq(-1, 10), q(1)]
        );
    }

    #[test]
    fn irreducible_cubic_factor() {
        // {3,2,2;1,1,3}: k2 = 6, k3 = 4; residual cubic has no rational roots
        let a = arr("3,2,2;1,1,3");
        let s = spectrum(&a, 1e-12).unwrap();
        assert_eq!(s.len(), 4);
        for t in &s.eigenvalues[1..] {
            if let EigValue::Approx(r) = t {
                assert!(r.hi - r.lo <= 1e-12);
                assert!(r.lo <= r.value && r.value <= r.hi);
            }
        }
        let tr = trace_check(&a, &s, 3).unwrap();
        assert!(tr.pass, "{tr:?}");
    }

    #[test]
    fn taylor_closed_form() {
        let s = taylor_spectrum(27, 10).unwrap();
        let th: Vec<_> = s.eigenvalues.iter().map(|t| t.as_int().unwrap()).collect();
        assert_eq!(th, vec![27, 9, -1, -3]);
        let m: Vec<_> = s.multiplicities.iter().map(|m| m.to_string()).collect();
        assert_eq!(m, vec!["1", "7", "27", "21"]);
        let s = taylor_spectrum(13, 6).unwrap();
        assert_eq!(s.eigenvalues[1].to_string(), "sqrt(13)");
        assert_eq!(s.multiplicities[1].to_string(), "7");
        assert_eq!(s.multiplicities[3].to_string(), "7");
    }

    #[test]
    fn trace_negative_control() {
        let a = arr("39,24,1;1,4,39");
        let mut s = spectrum(&a, DEFAULT_TOL).unwrap();
        assert!(trace_check(&a, &s, 3).unwrap().pass);
        s.multiplicities[1] = Multiplicity::Exact(q(46));
        let tr = trace_check(&a, &s, 3).unwrap();
        assert!(!tr.pass);
        assert_eq!(tr.residuals[0].residual, "1");
    }
}
