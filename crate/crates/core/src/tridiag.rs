//! Symmetric tridiagonal eigenvalue machinery: Sturm-sequence counting,
//! bisection eigenvalues and inverse-iteration eigenvectors.
//!
//! All discretized operators in this crate reduce to this form, so counting
//! eigenvalues below a threshold and extracting individual eigenpairs both
//! come with guaranteed bracketing.

/// Symmetric tridiagonal matrix: `diag` has length n, `off` has length n-1.
#[derive(Debug, Clone)]
pub struct SymTridiag {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        debug_assert_eq!(off.len() + 1, diag.len());
        SymTridiag { diag, off }
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `lambda` (Sturm sequence via
    /// LDLᵀ pivots: the count of negative pivots of A - λI).
    pub fn count_below(&self, lambda: f64) -> usize {
        let n = self.n();
        if n == 0 {
            return 0;
        }
        // Guard against zero pivots; the perturbation is far below any
        // spacing the callers resolve.
        let guard = 1e-300;
        let mut count = 0usize;
        let mut q = self.diag[0] - lambda;
        if q < 0.0 {
            count += 1;
        }
        for i in 1..n {
            let mut qs = q;
            if qs.abs() < guard {
                qs = if qs >= 0.0 { guard } else { -guard };
            }
            q = (self.diag[i] - lambda) - self.off[i - 1] * self.off[i - 1] / qs;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin bounds containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.n();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i < n - 1 { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// k-th eigenvalue (0-based, ascending) by bisection on the Sturm count.
    pub fn eigenvalue(&self, k: usize) -> f64 {
        let (mut lo, mut hi) = self.gershgorin();
        lo -= 1.0;
        hi += 1.0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if hi - lo < 2.0 * f64::EPSILON * mid.abs().max(1.0) {
                break;
            }
            if self.count_below(mid) <= k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Eigenvector for an eigenvalue estimate `lambda` by inverse iteration,
    /// normalized to unit Euclidean norm. Two iterations from a graded start
    /// vector, with one extra pass if the first two disagree.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.n();
        let mut v: Vec<f64> = (0..n)
            .map(|i| 1.0 / ((i + 1) as f64))
            .collect();
        normalize(&mut v);
        let mut prev = v.clone();
        for it in 0..3 {
            let mut w = self.solve_shifted(lambda, &v);
            normalize(&mut w);
            // Fix overall sign to make iterations comparable.
            if let Some(i) = w.iter().position(|x| x.abs() > 1e-3) {
                if w[i] * v[i] < 0.0 {
                    for x in w.iter_mut() {
                        *x = -*x;
                    }
                }
            }
            prev = std::mem::replace(&mut v, w);
            if it >= 1 {
                let diff: f64 = v
                    .iter()
                    .zip(prev.iter())
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                if diff < 1e-12 {
                    break;
                }
            }
        }
        let _ = prev;
        v
    }

    /// Solve (A - λI) x = b by LDLᵀ with tiny-pivot substitution (standard
    /// inverse-iteration trick: a near-singular pivot only boosts the
    /// eigendirection we are after).
    fn solve_shifted(&self, lambda: f64, b: &[f64]) -> Vec<f64> {
        let n = self.n();
        let scale: f64 = self
            .diag
            .iter()
            .fold(0.0_f64, |m, &d| m.max(d.abs()))
            .max(1.0);
        let tiny = scale * 1e-280;
        let mut d = vec![0.0; n];
        let mut l = vec![0.0; n.saturating_sub(1)];
        d[0] = self.diag[0] - lambda;
        if d[0].abs() < tiny {
            d[0] = if d[0] >= 0.0 { tiny } else { -tiny };
        }
        for i in 1..n {
            l[i - 1] = self.off[i - 1] / d[i - 1];
            d[i] = (self.diag[i] - lambda) - l[i - 1] * self.off[i - 1];
            if d[i].abs() < tiny {
                d[i] = if d[i] >= 0.0 { tiny } else { -tiny };
            }
        }
        let mut x = b.to_vec();
        for i in 1..n {
            let li = l[i - 1];
            x[i] -= li * x[i - 1];
        }
        for i in 0..n {
            x[i] /= d[i];
        }
        for i in (0..n - 1).rev() {
            let li = l[i];
            x[i] -= li * x[i + 1];
        }
        x
    }
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}
