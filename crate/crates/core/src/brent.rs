//! Brent's method on a bracketing interval.

/// Finds a root of `f` in `[xa, xb]`, which must bracket a sign change.
///
/// Returns `None` when the endpoints do not bracket a root. Stops when the
/// bracket is narrower than `xtol + rtol * |x|` or after `iter` steps.
pub fn brentq<F>(f: F, xa: f64, xb: f64, xtol: f64, rtol: f64, iter: usize) -> Option<f64>
where
    F: Fn(f64) -> f64,
{
    let mut xpre = xa;
    let mut xcur = xb;
    let mut xblk = 0.0;
    let mut fpre = f(xpre);
    let mut fcur = f(xcur);
    let mut fblk = 0.0;
    let mut spre = 0.0;
    let mut scur = 0.0;

    if fpre * fcur > 0.0 {
        return None;
    }
    if fpre == 0.0 {
        return Some(xpre);
    }
    if fcur == 0.0 {
        return Some(xcur);
    }

    for _ in 0..iter {
        if fpre * fcur < 0.0 {
            xblk = xpre;
            fblk = fpre;
            spre = xcur - xpre;
            scur = spre;
        }
        if fblk.abs() < fcur.abs() {
            xpre = xcur;
            xcur = xblk;
            xblk = xpre;
            fpre = fcur;
            fcur = fblk;
            fblk = fpre;
        }

        let delta = (xtol + rtol * xcur.abs()) / 2.0;
        let sbis = (xblk - xcur) / 2.0;
        if fcur == 0.0 || sbis.abs() < delta {
            return Some(xcur);
        }

        if spre.abs() > delta && fcur.abs() < fpre.abs() {
            let stry = if xpre == xblk {
                // secant
                -fcur * (xcur - xpre) / (fcur - fpre)
            } else {
                // inverse quadratic interpolation
                let dpre = (fpre - fcur) / (xpre - xcur);
                let dblk = (fblk - fcur) / (xblk - xcur);
                -fcur * (fblk * dblk - fpre * dpre) / (dblk * dpre * (fblk - fpre))
            };
            if 2.0 * stry.abs() < spre.abs().min(3.0 * sbis.abs() - delta) {
                spre = scur;
                scur = stry;
            } else {
                spre = sbis;
                scur = sbis;
            }
        } else {
            spre = sbis;
            scur = sbis;
        }

        xpre = xcur;
        fpre = fcur;
        if scur.abs() > delta {
            xcur += scur;
        } else {
            xcur += if sbis > 0.0 { delta } else { -delta };
        }
        fcur = f(xcur);
    }
    Some(xcur)
}

#[cfg(test)]
mod tests {
    use super::brentq;

    #[test]
    fn cube_root() {
        let r = brentq(|x| x * x * x - 0.5, 0.0, 1.0, 1e-14, 1e-15, 200).unwrap();
        assert!((r - 0.5f64.powf(1.0 / 3.0)).abs() <= 1e-13);
    }

    #[test]
    fn sqrt_ten() {
        let r = brentq(|x| x * x - 10.0, 3.0, 4.0, 1e-14, 0.0, 200).unwrap();
        assert!((r - 10f64.sqrt()).abs() <= 1e-13);
    }

    #[test]
    fn no_bracket() {
        assert!(brentq(|x| x * x + 1.0, -1.0, 1.0, 1e-12, 0.0, 100).is_none());
    }
}
