//! Exact arithmetic in a real quadratic field `Q(sqrt(n))`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::{q, Q};

/// `a + b*sqrt(n)` with `n` square-free and `n > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    pub a: Q,
    pub b: Q,
    pub n: u64,
}

/// Writes `m = s^2 * r` with `r` square-free; returns `(s, r)`.
pub fn square_free(mut m: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut r = 1u64;
    let mut p = 2u64;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            r *= p;
        }
        p += 1;
    }
    (s, r * m)
}

impl QuadElem {
    pub fn new(a: Q, b: Q, n: u64) -> Self {
        debug_assert!(n > 1 && square_free(n).0 == 1);
        QuadElem { a, b, n }
    }

    pub fn rational(a: Q, n: u64) -> Self {
        QuadElem { a, b: Q::zero(), n }
    }

    pub fn one(n: u64) -> Self {
        Self::rational(q(1), n)
    }

    pub fn zero(n: u64) -> Self {
        Self::rational(q(0), n)
    }

    /// `(p + s*sqrt(m)) / 2`-style roots of `x^2 + c1 x + c0`, for a
    /// non-square positive discriminant. Returns `(larger, smaller)`.
    pub fn quadratic_roots(c1: &Q, c0: &Q) -> Option<(QuadElem, QuadElem)> {
        // x = -c1/2 ± sqrt(disc)/2 with disc = c1^2 - 4 c0
        let disc = c1 * c1 - c0 * q(4);
        if !disc.is_positive() {
            return None;
        }
        // disc = num/den; sqrt(disc) = sqrt(num*den)/den
        let num = disc.numer() * disc.denom();
        let den = disc.denom().clone();
        let m = num.to_u64()?;
        let (s, r) = square_free(m);
        if r == 1 {
            return None;
        }
        let half = Q::new(BigInt::one(), BigInt::from(2));
        let a = -c1 * &half;
        let b = Q::new(BigInt::from(s), den) * half;
        Some((
            QuadElem::new(a.clone(), b.clone(), r),
            QuadElem::new(a, -b, r),
        ))
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadElem { a: self.a.clone(), b: -self.b.clone(), n: self.n }
    }

    pub fn norm(&self) -> Q {
        &self.a * &self.a - &self.b * &self.b * q(self.n as i64)
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.n, o.n);
        QuadElem { a: &self.a + &o.a, b: &self.b + &o.b, n: self.n }
    }

    pub fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.n, o.n);
        QuadElem { a: &self.a - &o.a, b: &self.b - &o.b, n: self.n }
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.n, o.n);
        let n = q(self.n as i64);
        QuadElem {
            a: &self.a * &o.a + &self.b * &o.b * n,
            b: &self.a * &o.b + &self.b * &o.a,
            n: self.n,
        }
    }

    pub fn scale(&self, s: &Q) -> Self {
        QuadElem { a: &self.a * s, b: &self.b * s, n: self.n }
    }

    pub fn add_q(&self, s: &Q) -> Self {
        QuadElem { a: &self.a + s, b: self.b.clone(), n: self.n }
    }

    /// Panics on division by zero.
    pub fn div(&self, o: &Self) -> Self {
        let nrm = o.norm();
        assert!(!nrm.is_zero(), "division by zero in quadratic field");
        self.mul(&o.conj()).scale(&(Q::one() / nrm))
    }

    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Q::zero());
        let sb = self.b.cmp(&Q::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // opposite signs: compare a^2 with b^2 n
        let a2 = &self.a * &self.a;
        let b2n = &self.b * &self.b * q(self.n as i64);
        match a2.cmp(&b2n) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn cmp_q(&self, x: &Q) -> Ordering {
        self.add_q(&-x.clone()).signum()
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN)
            + self.b.to_f64().unwrap_or(f64::NAN) * (self.n as f64).sqrt()
    }
}

fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = format!("sqrt({})", self.n);
        let bpart = if self.b.abs().is_one() {
            root
        } else {
            format!("{}*{}", fmt_q(&self.b.abs()), root)
        };
        match (self.a.is_zero(), self.b.signum()) {
            (_, s) if s.is_zero() => write!(f, "{}", fmt_q(&self.a)),
            (true, s) if s.is_negative() => write!(f, "-{bpart}"),
            (true, _) => write!(f, "{bpart}"),
            (false, s) if s.is_negative() => write!(f, "{}-{bpart}", fmt_q(&self.a)),
            (false, _) => write!(f, "{}+{bpart}", fmt_q(&self.a)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_free_parts() {
        assert_eq!(square_free(72), (6, 2));
        assert_eq!(square_free(10), (1, 10));
        assert_eq!(square_free(49), (7, 1));
        assert_eq!(square_free(1), (1, 1));
    }

    #[test]
    fn roots_of_x2_minus_10() {
        let (hi, lo) = QuadElem::quadratic_roots(&q(0), &q(-10)).unwrap();
        assert_eq!(hi.to_string(), "sqrt(10)");
        assert_eq!(lo.to_string(), "-sqrt(10)");
        assert_eq!(hi.mul(&hi), QuadElem::rational(q(10), 10));
        // golden ratio: x^2 - x - 1
        let (phi, _) = QuadElem::quadratic_roots(&q(-1), &q(-1)).unwrap();
        assert_eq!(phi.to_string(), "1/2+1/2*sqrt(5)");
        assert_eq!(phi.mul(&phi).sub(&phi), QuadElem::one(5));
        assert!(QuadElem::quadratic_roots(&q(0), &q(-9)).is_none());
    }

    #[test]
    fn exact_sign() {
        let x = QuadElem::new(q(3), q(-1), 10); // 3 - sqrt(10) < 0
        assert_eq!(x.signum(), Ordering::Less);
        let y = QuadElem::new(q(4), q(-1), 10);
        assert_eq!(y.signum(), Ordering::Greater);
        assert_eq!(x.div(&x), QuadElem::one(10));
    }
}
