//! Intersection arrays and their derived parameters.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An intersection array `{b0,...,b_{D-1}; c1,...,c_D}`.
///
/// Parsing only checks shape, positivity and `c1 = 1`; admissibility
/// (`a_i >= 0`) is checked by [`IntersectionArray::derive`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionArray {
    b: Vec<i64>,
    c: Vec<i64>,
}

impl IntersectionArray {
    pub fn new(b: Vec<i64>, c: Vec<i64>) -> Result<Self> {
        if b.len() != c.len() {
            return Err(Error::UnequalHalves { b: b.len(), c: c.len() });
        }
        if b.is_empty() {
            return Err(Error::Syntax("empty array".into()));
        }
        for (i, &x) in b.iter().enumerate() {
            if x < 1 {
                return Err(Error::NonPositive { position: format!("b{i}"), value: x });
            }
        }
        for (i, &x) in c.iter().enumerate() {
            if x < 1 {
                return Err(Error::NonPositive { position: format!("c{}", i + 1), value: x });
            }
        }
        if c[0] != 1 {
            return Err(Error::FirstC(c[0]));
        }
        Ok(IntersectionArray { b, c })
    }

    /// Taylor array `{k, c2, 1; 1, c2, k}`.
    pub fn taylor(k: i64, c2: i64) -> Result<Self> {
        Self::new(vec![k, c2, 1], vec![1, c2, k])
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn k(&self) -> i64 {
        self.b[0]
    }

    /// `b_i` for `0 <= i <= D`, with `b_D = 0`.
    pub fn b(&self, i: usize) -> i64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i` for `0 <= i <= D`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// `a_i = k - b_i - c_i`; may be negative for inadmissible arrays.
    pub fn a(&self, i: usize) -> i64 {
        self.k() - self.b(i) - self.c(i)
    }

    pub fn b_slice(&self) -> &[i64] {
        &self.b
    }

    pub fn c_slice(&self) -> &[i64] {
        &self.c
    }

    pub fn is_admissible(&self) -> bool {
        (0..=self.diameter()).all(|i| self.a(i) >= 0)
    }

    pub fn check_admissible(&self) -> Result<()> {
        for i in 0..=self.diameter() {
            let a = self.a(i);
            if a < 0 {
                return Err(Error::Inadmissible { index: i, value: a });
            }
        }
        Ok(())
    }

    /// `b_i >= b_{i+1}` and `c_i <= c_{i+1}` throughout.
    pub fn is_monotone(&self) -> bool {
        self.b.windows(2).all(|w| w[0] >= w[1]) && self.c.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_taylor(&self) -> bool {
        let k = self.k();
        self.diameter() == 3 && self.b[2] == 1 && self.b[1] == self.c[1] && self.c[2] == k
    }

    pub fn derive(&self) -> Result<DerivedParams> {
        self.check_admissible()?;
        let d = self.diameter();
        let a: Vec<i64> = (0..=d).map(|i| self.a(i)).collect();
        let mut k_i = Vec::with_capacity(d + 1);
        k_i.push(BigRational::one());
        for i in 0..d {
            let next = &k_i[i] * BigRational::from_integer(self.b(i).into())
                / BigRational::from_integer(self.c(i + 1).into());
            k_i.push(next);
        }
        let v = k_i.iter().fold(BigRational::zero(), |s, x| s + x);
        Ok(DerivedParams { a, k_i, v })
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{};{}", join(&self.b), join(&self.c))
    }
}

fn parse_half(s: &str, which: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>()
                .map_err(|_| Error::Syntax(format!("bad {which} entry {t:?}")))
        })
        .collect()
}

/// Parses `"b0,b1,...;c1,c2,..."`. Surrounding braces are tolerated.
pub fn parse_array(text: &str) -> Result<IntersectionArray> {
    let t = text.trim();
    let t = t.strip_prefix('{').unwrap_or(t);
    let t = t.strip_suffix('}').unwrap_or(t);
    let mut halves = t.split(';');
    let (Some(b), Some(c), None) = (halves.next(), halves.next(), halves.next()) else {
        return Err(Error::Syntax(format!("expected exactly one ';' in {text:?}")));
    };
    IntersectionArray::new(parse_half(b, "b")?, parse_half(c, "c")?)
}

impl FromStr for IntersectionArray {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_array(s)
    }
}

impl Serialize for IntersectionArray {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IntersectionArray {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_array(&s).map_err(serde::de::Error::custom)
    }
}

/// `a_i`, `k_i` and `v` of an admissible array.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedParams {
    pub a: Vec<i64>,
    pub k_i: Vec<BigRational>,
    pub v: BigRational,
}

impl DerivedParams {
    /// All `k_i` are integers.
    pub fn integral(&self) -> bool {
        self.k_i.iter().all(|x| x.is_integer())
    }

    /// `k_i` as integers, if all are integral.
    pub fn k_int(&self) -> Option<Vec<BigInt>> {
        self.k_i
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn parse_and_render() {
        let a = parse_array("39,24,1;1,4,39").unwrap();
        assert_eq!(a.diameter(), 3);
        assert_eq!(a.b_slice(), &[39, 24, 1]);
        assert_eq!(a.c_slice(), &[1, 4, 39]);
        assert_eq!(a.to_string(), "39,24,1;1,4,39");
        let a = parse_array(" { 5 ; 1 } ").unwrap();
        assert_eq!(a.diameter(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_array("7,4,1;1,2"), Err(Error::UnequalHalves { .. })));
        assert!(matches!(parse_array("7,4,1;2,2,7"), Err(Error::FirstC(2))));
        assert!(matches!(parse_array("7,0,1;1,2,7"), Err(Error::NonPositive { .. })));
        assert!(matches!(parse_array("bad"), Err(Error::Syntax(_))));
        assert!(matches!(parse_array("1;1;1"), Err(Error::Syntax(_))));
    }

    #[test]
    fn derive_values() {
        let d = parse_array("39,24,1;1,4,39").unwrap().derive().unwrap();
        assert_eq!(d.a, vec![0, 14, 34, 0]);
        assert_eq!(d.k_i, vec![q(1), q(39), q(234), q(6)]);
        assert_eq!(d.v, q(280));
        let d = parse_array("13,8,1;1,4,13").unwrap().derive().unwrap();
        assert_eq!(d.k_i, vec![q(1), q(13), q(26), q(2)]);
        assert_eq!(d.v, q(42));
        let d = parse_array("9;1").unwrap().derive().unwrap();
        assert_eq!(d.v, q(10));
    }

    #[test]
    fn inadmissible() {
        let a = parse_array("3,3;1,1").unwrap();
        assert!(matches!(a.derive(), Err(Error::Inadmissible { index: 1, value: -1 })));
    }
}
