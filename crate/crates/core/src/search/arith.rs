//! Small-integer factorization and divisor enumeration for the search loops.

/// Smallest-prime-factor table.
pub struct Sieve {
    spf: Vec<u32>,
}

/// Prime factorization as sorted `(prime, exponent)` pairs.
pub type Factors = Vec<(u64, u32)>;

impl Sieve {
    pub fn new(limit: usize) -> Self {
        let mut spf = vec![0u32; limit + 1];
        for i in 2..=limit {
            if spf[i] == 0 {
                let mut j = i;
                while j <= limit {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        Sieve { spf }
    }

    pub fn limit(&self) -> u64 {
        self.spf.len() as u64 - 1
    }

    /// Factors `n`, falling back to trial division above the table.
    pub fn factor(&self, mut n: u64) -> Factors {
        let mut out: Factors = Vec::new();
        let push = |p: u64, out: &mut Factors| match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        };
        let mut p = 2u64;
        while n > self.limit() && p * p <= n {
            while n.is_multiple_of(p) {
                push(p, &mut out);
                n /= p;
            }
            p += 1;
        }
        if n > self.limit() {
            push(n, &mut out);
            n = 1;
        }
        while n > 1 {
            let p = self.spf[n as usize] as u64;
            push(p, &mut out);
            n /= p;
        }
        out.sort_unstable();
        merge(&out, &Vec::new())
    }
}

/// Product of two factorizations.
pub fn merge(a: &Factors, b: &Factors) -> Factors {
    let mut out: Factors = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x.0 == y.0 => {
                i += 1;
                j += 1;
                (x.0, x.1 + y.1)
            }
            (Some(x), Some(y)) if x.0 < y.0 => {
                i += 1;
                *x
            }
            (Some(x), None) => {
                i += 1;
                *x
            }
            (_, Some(y)) => {
                j += 1;
                *y
            }
            (None, None) => unreachable!(),
        };
        match out.last_mut() {
            Some(l) if l.0 == next.0 => l.1 += next.1,
            _ => out.push(next),
        }
    }
    out
}

/// Quotient `a / b`; `b` must divide `a`.
pub fn divide(a: &Factors, b: &Factors) -> Factors {
    let mut out = a.clone();
    for &(p, e) in b {
        let slot = out.iter_mut().find(|x| x.0 == p).expect("divisor prime present");
        assert!(slot.1 >= e, "not a divisor");
        slot.1 -= e;
    }
    out.retain(|x| x.1 > 0);
    out
}

/// All divisors of the factored number lying in `[lo, hi]`, ascending.
pub fn divisors_in(f: &[(u64, u32)], lo: u64, hi: u64, out: &mut Vec<u64>) {
    out.clear();
    if lo > hi {
        return;
    }
    fn rec(f: &[(u64, u32)], idx: usize, cur: u64, lo: u64, hi: u64, out: &mut Vec<u64>) {
        if idx == f.len() {
            if cur >= lo {
                out.push(cur);
            }
            return;
        }
        let (p, e) = f[idx];
        let mut x = cur;
        for i in 0..=e {
            rec(f, idx + 1, x, lo, hi, out);
            if i < e {
                match x.checked_mul(p) {
                    Some(y) if y <= hi => x = y,
                    _ => break,
                }
            }
        }
    }
    rec(f, 0, 1, lo, hi, out);
    out.sort_unstable();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_and_divisors() {
        let s = Sieve::new(1000);
        assert_eq!(s.factor(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(s.factor(1), vec![]);
        assert_eq!(s.factor(1_000_003), vec![(1_000_003, 1)]);
        assert_eq!(s.factor(2 * 999_983), vec![(2, 1), (999_983, 1)]);
        let f = merge(&s.factor(12), &s.factor(30));
        assert_eq!(f, vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(divide(&f, &s.factor(6)), s.factor(60));
        let mut d = Vec::new();
        divisors_in(&f, 10, 40, &mut d);
        let brute: Vec<u64> = (10..=40).filter(|x| 360 % x == 0).collect();
        assert_eq!(d, brute);
    }
}
