//! Dense univariate polynomials over the rationals.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn qi(n: &BigInt) -> Q {
    Q::from_integer(n.clone())
}

/// Coefficients are stored lowest degree first, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    c: Vec<Q>,
}

impl Poly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn constant(x: Q) -> Self {
        Poly::new(vec![x])
    }

    pub fn x() -> Self {
        Poly::new(vec![q(0), q(1)])
    }

    /// `x - r`
    pub fn linear(r: &Q) -> Self {
        Poly::new(vec![-r.clone(), q(1)])
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&x| q(x)).collect())
    }

    pub fn from_bigints(c: &[BigInt]) -> Self {
        Poly::new(c.iter().map(qi).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.c.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for a in self.c.iter().rev() {
            acc = acc * x + a.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Exact sign of the value at `x`.
    pub fn sign_at(&self, x: &Q) -> Ordering {
        self.eval(x).cmp(&Q::zero())
    }

    pub fn scale(&self, s: &Q) -> Poly {
        Poly::new(self.c.iter().map(|a| a * s).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut r = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                r[i + j] += a * b;
            }
        }
        Poly::new(r)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * q(i as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.leading();
        self.scale(&(Q::one() / l))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut r = self.c.clone();
        let dd = d.degree();
        let lead = d.leading();
        if r.len() < d.c.len() {
            return (Poly::zero(), self.clone());
        }
        let mut quo = vec![Q::zero(); r.len() - dd];
        for i in (0..quo.len()).rev() {
            let f = &r[i + dd] / &lead;
            if !f.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[i + j] -= &f * b;
                }
            }
            quo[i] = f;
        }
        r.truncate(dd);
        (Poly::new(quo), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Sturm chain `p, p', -rem(p, p'), ...`.
    pub fn sturm_chain(&self) -> Vec<Poly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.scale(&q(-1)));
        }
        chain
    }

    /// Number of distinct real roots in `(lo, hi]` via Sturm's theorem.
    pub fn count_roots(&self, lo: &Q, hi: &Q) -> usize {
        let chain = self.sturm_chain();
        let var = |x: &Q| {
            let mut last = Ordering::Equal;
            let mut n = 0usize;
            for p in &chain {
                let s = p.sign_at(x);
                if s == Ordering::Equal {
                    continue;
                }
                if last != Ordering::Equal && s != last {
                    n += 1;
                }
                last = s;
            }
            n
        };
        var(lo).saturating_sub(var(hi))
    }

    /// Integer coefficients if all coefficients are integral.
    pub fn to_bigints(&self) -> Option<Vec<BigInt>> {
        self.c
            .iter()
            .map(|a| a.is_integer().then(|| a.to_integer()))
            .collect()
    }

    /// Cauchy bound on the absolute value of any root.
    pub fn root_bound(&self) -> Q {
        let l = self.leading().abs();
        let m = self.c[..self.degree()]
            .iter()
            .map(|a| a.abs() / &l)
            .max()
            .unwrap_or_else(Q::zero);
        q(1) + m
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let m = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !m.is_one();
            if show_coeff {
                write!(f, "{m}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Integer square root of a non-negative big integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    n.sqrt()
}

pub fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division() {
        // x^4 - 9x^3 - 20x^2 + 90x + 100 = (x - 10)(x + 1)(x^2 - 10)
        let p = Poly::from_i64(&[100, 90, -20, -9, 1]);
        let (quo, r) = p.div_rem(&Poly::linear(&q(10)));
        assert!(r.is_zero());
        assert_eq!(quo, Poly::from_i64(&[-10, -10, 1, 1]));
        assert!(Poly::from_i64(&[-10, 0, 1]).divides(&quo));
        assert_eq!(p.to_string(), "x^4 - 9x^3 - 20x^2 + 90x + 100");
    }

    #[test]
    fn sturm_counts() {
        let p = Poly::from_i64(&[100, 90, -20, -9, 1]);
        assert_eq!(p.count_roots(&q(-100), &q(100)), 4);
        assert_eq!(p.count_roots(&q(0), &q(100)), 2);
        assert_eq!(p.count_roots(&q(-2), &q(-1)), 1);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = Poly::from_i64(&[-10, 0, 1]).mul(&Poly::from_i64(&[1, 1]));
        let b = Poly::from_i64(&[-10, 0, 1]).mul(&Poly::from_i64(&[-3, 1]));
        assert_eq!(a.gcd(&b), Poly::from_i64(&[-10, 0, 1]));
    }
}
