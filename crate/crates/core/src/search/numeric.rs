//! Fixed-size integer and floating-point helpers for the enumeration loops.

/// An intersection array of diameter at most 4 held on the stack.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmallArray {
    pub d: usize,
    /// `b[0..d]`; `b[d] = 0`.
    pub b: [i64; 5],
    /// `c[1..=d]`; `c[0] = 0`.
    pub c: [i64; 5],
}

impl SmallArray {
    pub fn new(b: &[i64], c: &[i64]) -> Self {
        let d = b.len();
        let mut s = SmallArray { d, b: [0; 5], c: [0; 5] };
        s.b[..d].copy_from_slice(b);
        s.c[1..=d].copy_from_slice(c);
        s
    }

    pub fn k(&self) -> i64 {
        self.b[0]
    }

    pub fn a(&self, i: usize) -> i64 {
        self.b[0] - self.b[i] - self.c[i]
    }

    pub fn to_array(&self) -> crate::array::IntersectionArray {
        crate::array::IntersectionArray::new(self.b[..self.d].to_vec(), self.c[1..=self.d].to_vec())
            .expect("search arrays are well formed")
    }
}

/// Leading minors `det(xI - L1[..j])` for `j = 0..=D+1` (only `len` used).
pub fn minors_at(s: &SmallArray, x: i64, len: usize) -> [i128; 6] {
    let mut p = [0i128; 6];
    p[0] = 1;
    p[1] = x as i128;
    for j in 1..len.saturating_sub(1) {
        p[j + 1] = (x - s.a(j)) as i128 * p[j] - (s.b[j - 1] * s.c[j]) as i128 * p[j - 1];
    }
    p
}

/// Sign changes among the non-zero entries of `v`.
pub fn sign_changes(v: &[i128]) -> usize {
    let mut last = 0i128;
    let mut n = 0;
    for &x in v {
        if x == 0 {
            continue;
        }
        if last != 0 && (x > 0) != (last > 0) {
            n += 1;
        }
        last = x;
    }
    n
}

/// Number of eigenvalues of `L1` greater than `x`, and whether `x` is one.
pub fn count_above(s: &SmallArray, x: i64) -> (usize, bool) {
    let n = s.d + 2;
    let p = minors_at(s, x, n);
    if p[n - 1] == 0 {
        (sign_changes(&p[..n - 1]), true)
    } else {
        (sign_changes(&p[..n]), false)
    }
}

/// Leading minors of `L1 + 6I`; the smallest eigenvalue exceeds `-6` iff all
/// are positive.
pub fn sylvester(s: &SmallArray, len: usize) -> [i128; 6] {
    let mut d = [0i128; 6];
    d[0] = 1;
    d[1] = 6;
    for j in 1..len.saturating_sub(1) {
        d[j + 1] = (s.a(j) + 6) as i128 * d[j] - (s.b[j - 1] * s.c[j]) as i128 * d[j - 1];
    }
    d
}

/// Coefficients `[c0, c1, ..., c_{D+1}]` of the characteristic polynomial.
pub fn char_poly_f64(s: &SmallArray) -> Vec<f64> {
    let mut prev = vec![1.0f64];
    let mut cur = vec![0.0f64, 1.0];
    for j in 1..=s.d {
        let mut next = vec![0.0f64; cur.len() + 1];
        for (i, &x) in cur.iter().enumerate() {
            next[i + 1] += x;
            next[i] -= s.a(j) as f64 * x;
        }
        let bc = (s.b[j - 1] * s.c[j]) as f64;
        for (i, &x) in prev.iter().enumerate() {
            next[i] -= bc * x;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Real roots of the monic cubic `x^3 + p2 x^2 + p1 x + p0`, assuming all
/// three are real. Polished with two Newton steps.
pub fn cubic_roots(p2: f64, p1: f64, p0: f64) -> [f64; 3] {
    let shift = p2 / 3.0;
    let p = p1 - p2 * p2 / 3.0;
    let q = 2.0 * p2 * p2 * p2 / 27.0 - p2 * p1 / 3.0 + p0;
    let mut r = if p.abs() < 1e-300 {
        let t = (-q).cbrt();
        [t, t, t]
    } else {
        let m = 2.0 * (-p / 3.0).max(0.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        let tau = 2.0 * std::f64::consts::PI / 3.0;
        [m * phi.cos(), m * (phi - tau).cos(), m * (phi - 2.0 * tau).cos()]
    };
    for x in r.iter_mut() {
        *x -= shift;
        for _ in 0..2 {
            let f = ((*x + p2) * *x + p1) * *x + p0;
            let df = (3.0 * *x + 2.0 * p2) * *x + p1;
            if df != 0.0 {
                *x -= f / df;
            }
        }
    }
    r
}

/// Quotient of the monic polynomial `c` (ascending) by `x - r`.
pub fn deflate(c: &[f64], r: f64) -> Vec<f64> {
    let n = c.len() - 1;
    let mut q = vec![0.0; n];
    let mut acc = c[n];
    for i in (0..n).rev() {
        q[i] = acc;
        acc = c[i] + r * acc;
    }
    q
}

fn eval(c: &[f64], x: f64) -> (f64, f64) {
    let (mut f, mut df) = (0.0, 0.0);
    for &a in c.iter().rev() {
        df = df * x + f;
        f = f * x + a;
    }
    (f, df)
}

/// Largest root of a real-rooted polynomial by Newton's method from an
/// upper bound `x0`; the iterates decrease monotonically.
pub fn newton_largest(c: &[f64], x0: f64) -> f64 {
    let mut x = x0;
    for _ in 0..200 {
        let (f, df) = eval(c, x);
        if df == 0.0 {
            break;
        }
        let step = f / df;
        x -= step;
        if step.abs() <= 1e-14 * x.abs().max(1.0) {
            break;
        }
    }
    x
}

/// Non-trivial eigenvalues `θ1 > ... > θD` of `L1` for `D` in `{3, 4}`.
pub fn nontrivial_eigenvalues(s: &SmallArray) -> Vec<f64> {
    let cp = char_poly_f64(s);
    let q = deflate(&cp, s.k() as f64);
    let mut out = Vec::with_capacity(s.d);
    let cubic = if s.d == 4 {
        let t1 = newton_largest(&q, s.k() as f64);
        out.push(t1);
        deflate(&q, t1)
    } else {
        q.clone()
    };
    let mut r = cubic_roots(cubic[2], cubic[1], cubic[0]);
    for x in r.iter_mut() {
        for _ in 0..2 {
            let (f, df) = eval(&q, *x);
            if df != 0.0 {
                *x -= f / df;
            }
        }
    }
    r.sort_by(|a, b| b.total_cmp(a));
    out.extend(r);
    out
}

/// Eigenvalues of `L1` by bisection on the Sturm count, decreasing.
pub fn eigenvalues_f64(s: &SmallArray) -> Vec<f64> {
    let n = s.d + 1;
    let k = s.k() as f64;
    // number of eigenvalues > x via the LDL^T pivots of xI - T
    let count = |x: f64| {
        let mut cnt = 0;
        let mut q = x;
        if q <= 0.0 {
            cnt += 1;
        }
        for j in 1..n {
            let qq = if q == 0.0 { -1e-300 } else { q };
            q = (x - s.a(j) as f64) - (s.b[j - 1] * s.c[j]) as f64 / qq;
            if q <= 0.0 {
                cnt += 1;
            }
        }
        cnt
    };
    let mut out = Vec::with_capacity(n);
    for idx in 0..n {
        // find x with exactly idx eigenvalues above it and idx+1 above x - ε
        let (mut lo, mut hi) = (-k - 1.0, k + 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if count(mid) > idx {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= 1e-13 * hi.abs().max(1.0) {
                break;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    out
}

/// Biggs' formula in floating point.
pub fn multiplicity_f64(s: &SmallArray, k_i: &[f64], v: f64, theta: f64) -> f64 {
    let mut u_prev = 1.0;
    let mut u = theta / s.k() as f64;
    let mut sum = 1.0 + k_i[1] * u * u;
    for i in 1..s.d {
        let next = ((theta - s.a(i) as f64) * u - s.c[i] as f64 * u_prev) / s.b[i] as f64;
        u_prev = u;
        u = next;
        sum += k_i[i + 1] * u * u;
    }
    v / sum
}

/// True unless some multiplicity is certainly not a positive integer.
pub fn multiplicities_plausible(s: &SmallArray, k_i: &[f64], v: f64, thetas: &[f64]) -> bool {
    thetas.iter().all(|&t| {
        let m = multiplicity_f64(s, k_i, v, t);
        if !m.is_finite() {
            return true;
        }
        let r = m.round();
        r >= 1.0 && (m - r).abs() <= 1e-6 * m.abs().max(1.0)
    })
}

/// Sign requirement on a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Want {
    Pos,
    NonNeg,
    Neg,
    NonPos,
    Zero,
}

/// Integers `c` in `[lo, hi]` with `a + b c` of the wanted sign; an empty
/// range has `lo > hi`.
pub fn linear_range(a: i128, b: i128, want: Want, lo: i64, hi: i64) -> (i64, i64) {
    let (mut l, mut h) = (lo as i128, hi as i128);
    let (a, b, want) = match want {
        Want::Neg => (-a, -b, Want::Pos),
        Want::NonPos => (-a, -b, Want::NonNeg),
        w => (a, b, w),
    };
    if b == 0 {
        let ok = match want {
            Want::Pos => a > 0,
            Want::NonNeg => a >= 0,
            _ => a == 0,
        };
        return if ok { (lo, hi) } else { (1, 0) };
    }
    let floor = |n: i128, d: i128| n.div_euclid(d) - if d < 0 && n.rem_euclid(d) != 0 { 1 } else { 0 };
    let ceil = |n: i128, d: i128| -floor(-n, d);
    match want {
        Want::Pos if b > 0 => l = l.max(floor(-a, b) + 1),
        Want::Pos => h = h.min(ceil(-a, b) - 1),
        Want::NonNeg if b > 0 => l = l.max(ceil(-a, b)),
        Want::NonNeg => h = h.min(floor(-a, b)),
        _ => {
            if (-a) % b != 0 {
                return (1, 0);
            }
            let c = -a / b;
            l = l.max(c);
            h = h.min(c);
        }
    }
    if l > h {
        return (1, 0);
    }
    (l as i64, h as i64)
}

/// Sign of the last non-zero entry (`P_0 = 1`, so one exists).
pub fn last_sign(p: &[i128]) -> i128 {
    p.iter().rev().find(|&&x| x != 0).map_or(1, |x| x.signum())
}

/// Values `c` of the last off-diagonal entry for which the count of
/// eigenvalues above `x` meets the requirement, given the prefix minors
/// `p[..n]` at `x` and `P_n(c) = a + b c`.
///
/// `exactly_one` asks for exactly one eigenvalue above `x` and, if
/// `strict`, `x` not an eigenvalue; otherwise at least two above or `x` an
/// eigenvalue.
pub fn count_range(p: &[i128], a: i128, b: i128, exactly_one: bool, strict: bool, lo: i64, hi: i64) -> (i64, i64) {
    let s = sign_changes(p);
    let sigma = last_sign(p);
    let (a, b) = (sigma * a, sigma * b);
    match (exactly_one, s) {
        (true, 0) => linear_range(a, b, Want::Neg, lo, hi),
        (true, 1) if strict => linear_range(a, b, Want::Pos, lo, hi),
        (true, 1) => linear_range(a, b, Want::NonNeg, lo, hi),
        (true, _) => (1, 0),
        (false, 0) => linear_range(a, b, Want::Zero, lo, hi),
        (false, 1) => linear_range(a, b, Want::NonPos, lo, hi),
        (false, _) => (lo, hi),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic() {
        // (x - 13)(x + 1)(x + 3)
        let mut r = cubic_roots(-9.0, -49.0, -39.0);
        r.sort_by(|a, b| b.total_cmp(a));
        assert!((r[0] - 13.0).abs() < 1e-12 && (r[1] + 1.0).abs() < 1e-12 && (r[2] + 3.0).abs() < 1e-12);
    }

    #[test]
    fn counts_and_bisection() {
        let s = SmallArray::new(&[39, 24, 1], &[1, 4, 39]);
        assert_eq!(count_above(&s, 14), (1, false));
        assert_eq!(count_above(&s, 13), (1, true));
        assert_eq!(count_above(&s, 0), (2, false));
        assert_eq!(count_above(&s, -3), (3, true));
        let e = eigenvalues_f64(&s);
        for (x, y) in e.iter().zip([39.0, 13.0, -1.0, -3.0]) {
            assert!((x - y).abs() < 1e-9, "{e:?}");
        }
        let cp = char_poly_f64(&s);
        assert_eq!(cp.len(), 5);
        assert!(sylvester(&s, 5).iter().take(5).all(|&d| d > 0));
        let k_i = [1.0, 39.0, 234.0, 6.0];
        assert!((multiplicity_f64(&s, &k_i, 280.0, 13.0) - 45.0).abs() < 1e-9);
    }

    #[test]
    fn linear_ranges_match_brute_force() {
        let wants = [Want::Pos, Want::NonNeg, Want::Neg, Want::NonPos, Want::Zero];
        for a in -7..=7i128 {
            for b in -4..=4i128 {
                for &w in &wants {
                    let ok = |c: i64| {
                        let v = a + b * c as i128;
                        match w {
                            Want::Pos => v > 0,
                            Want::NonNeg => v >= 0,
                            Want::Neg => v < 0,
                            Want::NonPos => v <= 0,
                            Want::Zero => v == 0,
                        }
                    };
                    let brute: Vec<i64> = (-10..=10).filter(|&c| ok(c)).collect();
                    let (l, h) = linear_range(a, b, w, -10, 10);
                    let got: Vec<i64> = (l..=h).collect();
                    assert_eq!(got, brute, "a={a} b={b} {w:?}");
                }
            }
        }
    }

    #[test]
    fn count_range_matches_count_above() {
        // D = 3: vary c3 and compare with the direct count at x
        let mut cases = Vec::new();
        for k in 3..=9i64 {
            for b1 in 1..k {
                for b2 in 1..=b1 {
                    for c2 in 1..=k - b2 {
                        for x in -6..=k {
                            cases.push(([k, b1, b2], c2, x));
                        }
                    }
                }
            }
        }
        for (b, c2, x) in cases {
            let k = b[0];
            let pre = SmallArray { d: 3, b: [b[0], b[1], b[2], 0, 0], c: [0, 1, c2, 0, 0] };
            let p = minors_at(&pre, x, 4);
            let (a, bb) = ((x - k) as i128 * p[3], p[3] - b[2] as i128 * p[2]);
            for (one, strict) in [(true, true), (true, false), (false, false)] {
                let (l, h) = count_range(&p[..4], a, bb, one, strict, c2, k);
                for c3 in c2..=k {
                    let s = SmallArray { d: 3, b: pre.b, c: [0, 1, c2, c3, 0] };
                    let (n, eig) = count_above(&s, x);
                    let want = if one { n == 1 && !(strict && eig) } else { n >= 2 || eig };
                    assert_eq!((l..=h).contains(&c3), want, "{b:?} c2={c2} c3={c3} x={x}");
                }
            }
        }
    }

    #[test]
    fn nontrivial_eigenvalues_agree_with_bisection() {
        for (b, c) in [
            (vec![10, 6, 4, 1], vec![1, 2, 6, 10]),
            (vec![39, 24, 1], vec![1, 4, 39]),
            (vec![42, 26, 20, 13], vec![1, 2, 2, 30]),
            (vec![20, 12, 11], vec![1, 3, 10]),
        ] {
            let s = SmallArray::new(&b, &c);
            let fast = nontrivial_eigenvalues(&s);
            let slow = eigenvalues_f64(&s);
            for (x, y) in fast.iter().zip(&slow[1..]) {
                assert!((x - y).abs() < 1e-9, "{b:?}: {fast:?} vs {slow:?}");
            }
        }
    }
}
