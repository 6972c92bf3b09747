//! Small dense least-squares helper: polynomial fits on scaled abscissae,
//! used by the band-minimum polish. Householder QR, nothing fancy.

/// Fit coefficients c_0..c_deg of p(x) = Σ c_k x^k minimizing Σ (p(x_i)-y_i)².
/// Callers are expected to scale x into O(1) (e.g. [-1,1]) first.
pub fn polyfit(xs: &[f64], ys: &[f64], deg: usize) -> Vec<f64> {
    let m = xs.len();
    let n = deg + 1;
    assert!(m >= n, "underdetermined polynomial fit");
    // Column-major Vandermonde.
    let mut a = vec![0.0_f64; m * n];
    for (i, &x) in xs.iter().enumerate() {
        let mut p = 1.0;
        for j in 0..n {
            a[j * m + i] = p;
            p *= x;
        }
    }
    let mut b = ys.to_vec();

    // Householder QR in place; apply reflectors to b as we go.
    for j in 0..n {
        let (mut norm, col) = (0.0_f64, j * m);
        for i in j..m {
            norm += a[col + i] * a[col + i];
        }
        norm = norm.sqrt();
        if norm == 0.0 {
            continue;
        }
        let alpha = if a[col + j] > 0.0 { -norm } else { norm };
        let mut v = vec![0.0; m - j];
        v[0] = a[col + j] - alpha;
        for i in j + 1..m {
            v[i - j] = a[col + i];
        }
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        a[col + j] = alpha;
        for i in j + 1..m {
            a[col + i] = 0.0;
        }
        for k in j + 1..n {
            let ck = k * m;
            let mut dot = 0.0;
            for i in j..m {
                dot += v[i - j] * a[ck + i];
            }
            let f = 2.0 * dot / vnorm2;
            for i in j..m {
                a[ck + i] -= f * v[i - j];
            }
        }
        let mut dot = 0.0;
        for i in j..m {
            dot += v[i - j] * b[i];
        }
        let f = 2.0 * dot / vnorm2;
        for i in j..m {
            b[i] -= f * v[i - j];
        }
    }

    // Back-substitution on the upper-triangular n×n block.
    let mut c = vec![0.0; n];
    for j in (0..n).rev() {
        let mut s = b[j];
        for k in j + 1..n {
            s -= a[k * m + j] * c[k];
        }
        c[j] = s / a[j * m + j];
    }
    c
}

/// Evaluate p and p' at x for coefficients in ascending order.
pub fn eval_poly_deriv(c: &[f64], x: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &ck in c.iter().rev() {
        dp = dp * x + p;
        p = p * x + ck;
    }
    (p, dp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_exact_cubic() {
        let xs: Vec<f64> = (0..9).map(|i| -1.0 + 0.25 * i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| 2.0 - x + 0.5 * x * x - 3.0 * x * x * x).collect();
        let c = polyfit(&xs, &ys, 3);
        for (got, want) in c.iter().zip([2.0, -1.0, 0.5, -3.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        let (p, dp) = eval_poly_deriv(&c, 0.3);
        assert!((p - (2.0 - 0.3 + 0.5 * 0.09 - 3.0 * 0.027)).abs() < 1e-12);
        assert!((dp - (-1.0 + 0.3 - 9.0 * 0.09)).abs() < 1e-12);
    }

    #[test]
    fn least_squares_averages_noise() {
        // Overdetermined constant fit = mean.
        let xs = vec![-1.0, -0.5, 0.0, 0.5, 1.0];
        let ys = vec![1.0, 3.0, 2.0, 2.0, 2.0];
        let c = polyfit(&xs, &ys, 0);
        assert!((c[0] - 2.0).abs() < 1e-14);
    }
}
