//! The one-parameter family of half-line oscillators
//! `L[γ,ξ] = -d²/dt² + (t-ξ)²` with a Robin condition `u'(0) = γ u(0)`
//! (or Dirichlet) at the origin.
//!
//! Discretization: uniform second-order finite differences derived from the
//! quadratic form with trapezoidal mass, so the Robin condition lands on the
//! diagonal and the matrix stays symmetric tridiagonal after scaling by the
//! square root of the (diagonal) mass. Eigenvalues come from Sturm bisection,
//! eigenvectors from inverse iteration, and every reported value is the
//! Richardson extrapolation of a grid-doubling sequence.
//!
//! Measured convention: with eigenvalues indexed from j = 1, the bands
//! satisfy μ_j(γ,ξ) → 2j-1 as ξ → +∞ (half-line limit of the full-line
//! oscillator levels); `band_ceiling` reports that limit numerically.

use crate::error::{Error, Result};
use crate::tridiag::SymTridiag;

/// Boundary condition at t = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BcLeft {
    Robin(f64),
    Dirichlet,
}

/// One member of the operator family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RobinSpec {
    pub gamma_eff: f64,
    pub xi: f64,
    pub bc_left: BcLeft,
}

impl RobinSpec {
    pub fn robin(gamma_eff: f64, xi: f64) -> Result<Self> {
        let s = RobinSpec { gamma_eff, xi, bc_left: BcLeft::Robin(gamma_eff) };
        s.validate()?;
        Ok(s)
    }

    pub fn dirichlet(xi: f64) -> Result<Self> {
        let s = RobinSpec { gamma_eff: 0.0, xi, bc_left: BcLeft::Dirichlet };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.gamma_eff.is_finite() || !self.xi.is_finite() {
            return Err(Error::Config(format!(
                "RobinSpec requires finite parameters, got gamma_eff={}, xi={}",
                self.gamma_eff, self.xi
            )));
        }
        Ok(())
    }

    /// Ground state of a strongly attractive Robin boundary localizes on the
    /// scale 1/|γ|; such specs are solved on a 4x refined grid and flagged.
    pub fn is_degenerate(&self) -> bool {
        matches!(self.bc_left, BcLeft::Robin(g) if g < -10.0)
    }
}

/// Uniform truncation grid: nodes at i·t_max/n, Dirichlet wall at t_max.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub t_max: f64,
    pub n: usize,
}

impl Grid1D {
    pub fn new(t_max: f64, n: usize) -> Result<Self> {
        if n < 64 {
            return Err(Error::Config(format!("Grid1D needs n >= 64, got {n}")));
        }
        if !(t_max > 0.0) {
            return Err(Error::Config(format!("Grid1D needs t_max > 0, got {t_max}")));
        }
        Ok(Grid1D { t_max, n })
    }

    /// Default truncation rule: Gaussian decay makes anything past
    /// max(ξ,0)+12 irrelevant at the tolerances used here.
    pub fn for_spec(spec: &RobinSpec) -> Self {
        let n = if spec.is_degenerate() { 4 * BASE_N } else { BASE_N };
        Grid1D { t_max: spec.xi.max(0.0) + 12.0, n }
    }

    pub fn spacing(&self) -> f64 {
        self.t_max / self.n as f64
    }

    /// Pairing invariant: the wall must sit well past the potential minimum.
    pub fn validate_for(&self, spec: &RobinSpec) -> Result<()> {
        if self.n < 64 {
            return Err(Error::Config(format!("Grid1D needs n >= 64, got {}", self.n)));
        }
        if self.t_max <= spec.xi + 8.0 {
            return Err(Error::Config(format!(
                "grid/spec pairing violation: t_max={} must exceed xi+8={}",
                self.t_max,
                spec.xi + 8.0
            )));
        }
        Ok(())
    }
}

const BASE_N: usize = 512;
const MAX_DOUBLINGS: usize = 6;

/// Symmetrized discretization plus the diagonal mass (needed to read off
/// boundary values of L²-normalized eigenfunctions).
fn assemble(spec: &RobinSpec, grid: &Grid1D) -> (SymTridiag, Vec<f64>) {
    let n = grid.n;
    let dt = grid.spacing();
    let inv2 = 1.0 / (dt * dt);
    match spec.bc_left {
        BcLeft::Robin(gamma) => {
            let mut diag = Vec::with_capacity(n);
            let mut off = Vec::with_capacity(n - 1);
            let mut mass = Vec::with_capacity(n);
            for i in 0..n {
                let t = i as f64 * dt;
                let v = (t - spec.xi) * (t - spec.xi);
                if i == 0 {
                    diag.push(2.0 * inv2 + v + 2.0 * gamma / dt);
                    mass.push(0.5 * dt);
                } else {
                    diag.push(2.0 * inv2 + v);
                    mass.push(dt);
                }
                if i + 1 < n {
                    off.push(if i == 0 { -std::f64::consts::SQRT_2 * inv2 } else { -inv2 });
                }
            }
            (SymTridiag::new(diag, off), mass)
        }
        BcLeft::Dirichlet => {
            let m = n - 1;
            let mut diag = Vec::with_capacity(m);
            let mass = vec![dt; m];
            for i in 1..n {
                let t = i as f64 * dt;
                let v = (t - spec.xi) * (t - spec.xi);
                diag.push(2.0 * inv2 + v);
            }
            let off = vec![-inv2; m - 1];
            (SymTridiag::new(diag, off), mass)
        }
    }
}

/// Grid metadata attached to converged values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridMeta {
    pub n_final: usize,
    pub t_max: f64,
    /// Richardson extrapolation order used for the reported value.
    pub order: usize,
    pub degenerate_flagged: bool,
}

/// A converged scalar plus the tolerance actually achieved.
#[derive(Debug, Clone, Copy)]
pub struct Converged {
    pub value: f64,
    pub achieved: f64,
    pub meta: GridMeta,
}

/// Richardson driver: evaluate on grids n, 2n, 4n, ... and extrapolate at
/// order 2 until two successive extrapolants agree within tol/2. If the
/// budget runs out the truncation length is doubled once (with the spacing
/// kept) before giving up.
fn converge(
    spec: &RobinSpec,
    tol: f64,
    t_max0: f64,
    base_n: usize,
    allow_tmax_double: bool,
    f: impl Fn(&RobinSpec, &Grid1D) -> f64,
) -> Result<Converged> {
    if !(tol > 0.0) {
        return Err(Error::Config(format!("tolerance must be positive, got {tol}")));
    }
    let degenerate = spec.is_degenerate();
    let mut t_max = t_max0;
    let mut n0 = base_n;
    let mut best = f64::NAN;
    let mut best_err = f64::INFINITY;
    for round in 0..2 {
        let mut n = n0;
        let mut prev_val = f(spec, &Grid1D { t_max, n });
        let mut prev_extrap: Option<f64> = None;
        for _ in 0..MAX_DOUBLINGS {
            n *= 2;
            let val = f(spec, &Grid1D { t_max, n });
            let extrap = (4.0 * val - prev_val) / 3.0;
            if let Some(pe) = prev_extrap {
                let err = (extrap - pe).abs();
                if err < best_err {
                    best = extrap;
                    best_err = err;
                }
                if err <= 0.5 * tol {
                    return Ok(Converged {
                        value: extrap,
                        achieved: err,
                        meta: GridMeta {
                            n_final: n,
                            t_max,
                            order: 2,
                            degenerate_flagged: degenerate,
                        },
                    });
                }
            }
            prev_extrap = Some(extrap);
            prev_val = val;
        }
        if !allow_tmax_double || round == 1 {
            break;
        }
        t_max *= 2.0;
        n0 *= 2;
    }
    Err(Error::Accuracy { requested: tol, achieved: best_err, best })
}

fn base_n_for(spec: &RobinSpec) -> usize {
    if spec.is_degenerate() { 4 * BASE_N } else { BASE_N }
}

/// μ_j(γ_eff, ξ) with absolute error ≤ tol.
pub fn mu(j: usize, spec: &RobinSpec, tol: f64) -> Result<f64> {
    Ok(mu_converged(j, spec, tol)?.value)
}

pub fn mu_converged(j: usize, spec: &RobinSpec, tol: f64) -> Result<Converged> {
    if j == 0 {
        return Err(Error::Config("band index j starts at 1".into()));
    }
    spec.validate()?;
    let t_max = spec.xi.max(0.0) + 12.0;
    converge(spec, tol, t_max, base_n_for(spec), true, |s, g| {
        assemble(s, g).0.eigenvalue(j - 1)
    })
}

/// Same as [`mu`] but on a caller-fixed truncation window, so that a family
/// of evaluations shares one discretization error profile (smooth in ξ).
/// Used by the band-minimum polish.
pub(crate) fn mu_fixed_window(j: usize, spec: &RobinSpec, tol: f64, t_max: f64) -> Result<f64> {
    spec.validate()?;
    Ok(converge(spec, tol, t_max, base_n_for(spec), false, |s, g| {
        assemble(s, g).0.eigenvalue(j - 1)
    })?
    .value)
}

/// μ_j of the Dirichlet realization.
pub fn mu_dirichlet(j: usize, xi: f64, tol: f64) -> Result<f64> {
    let spec = RobinSpec::dirichlet(xi)?;
    Ok(mu_converged(j, &spec, tol)?.value)
}

/// |u_j(0)|² for the L²-normalized j-th eigenfunction (Robin only: the
/// Dirichlet trace is identically zero and is rejected as a misuse).
pub fn boundary_trace_sq(j: usize, spec: &RobinSpec, tol: f64) -> Result<f64> {
    if spec.bc_left == BcLeft::Dirichlet {
        return Err(Error::Domain(
            "boundary_trace_sq requires a Robin boundary condition".into(),
        ));
    }
    if j == 0 {
        return Err(Error::Config("band index j starts at 1".into()));
    }
    spec.validate()?;
    let t_max = spec.xi.max(0.0) + 12.0;
    let c = converge(spec, tol, t_max, base_n_for(spec), true, |s, g| {
        let (t, mass) = assemble(s, g);
        let lam = t.eigenvalue(j - 1);
        let w = t.eigenvector(lam);
        w[0] * w[0] / mass[0]
    })?;
    Ok(c.value.max(0.0))
}

/// Number of eigenvalues of the discretized operator strictly below λ on the
/// given grid. Monotone nondecreasing in λ by construction.
pub fn eig_count_below(spec: &RobinSpec, grid: &Grid1D, lambda: f64) -> Result<usize> {
    spec.validate()?;
    grid.validate_for(spec)?;
    let (t, _) = assemble(spec, grid);
    Ok(t.count_below(lambda))
}

/// One evaluation of the family: the first k eigenvalues and their boundary
/// traces.
#[derive(Debug, Clone)]
pub struct RobinBandPoint {
    pub spec: RobinSpec,
    pub mus: Vec<f64>,
    pub boundary_sq: Vec<f64>,
    pub grid_meta: GridMeta,
    pub tol: f64,
}

pub fn band_point(spec: &RobinSpec, k: usize, tol: f64) -> Result<RobinBandPoint> {
    if k == 0 {
        return Err(Error::Config("band_point needs k >= 1".into()));
    }
    let mut mus = Vec::with_capacity(k);
    let mut boundary_sq = Vec::with_capacity(k);
    let mut meta = None;
    for j in 1..=k {
        let c = mu_converged(j, spec, tol)?;
        mus.push(c.value);
        meta = Some(c.meta);
        boundary_sq.push(match spec.bc_left {
            BcLeft::Dirichlet => 0.0,
            BcLeft::Robin(_) => boundary_trace_sq(j, spec, tol)?,
        });
    }
    for w in mus.windows(2) {
        if !(w[0] < w[1]) {
            return Err(Error::Accuracy {
                requested: tol,
                achieved: (w[1] - w[0]).abs(),
                best: w[0],
            });
        }
    }
    Ok(RobinBandPoint { spec: *spec, mus, boundary_sq, grid_meta: meta.unwrap(), tol })
}

/// Measured ξ → +∞ limit of the j-th band (numerically 2j-1 under this
/// crate's j ≥ 1 indexing). Replaces the analytic ceiling in precondition
/// checks so the code never has to take sides on an indexing convention.
pub fn band_ceiling(j: usize, gamma_eff: f64, tol: f64) -> Result<f64> {
    let hint = (2.0 * j as f64 + 1.0 + gamma_eff * gamma_eff).sqrt();
    let xi_far = hint + 14.0;
    let spec = RobinSpec::robin(gamma_eff, xi_far)?;
    mu(j, &spec, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Exact references: Neumann selects even Hermite levels (4j-3), Dirichlet
    // the odd ones (4j-1), by reflection through t=0 at xi=0.
    #[test]
    fn neumann_levels_at_xi_zero() {
        let spec = RobinSpec::robin(0.0, 0.0).unwrap();
        for j in 1..=4 {
            let v = mu(j, &spec, 1e-9).unwrap();
            let want = 4.0 * j as f64 - 3.0;
            assert!((v - want).abs() < 1e-8, "j={j}: {v} vs {want}");
        }
    }

    #[test]
    fn dirichlet_levels_at_xi_zero() {
        for j in 1..=4 {
            let v = mu_dirichlet(j, 0.0, 1e-9).unwrap();
            let want = 4.0 * j as f64 - 1.0;
            assert!((v - want).abs() < 1e-8, "j={j}: {v} vs {want}");
        }
    }

    #[test]
    fn trace_at_origin_neumann_gaussian() {
        // |φ(0)|² = 2/√π for the xi=0 Neumann ground state.
        let spec = RobinSpec::robin(0.0, 0.0).unwrap();
        let t = boundary_trace_sq(1, &spec, 1e-8).unwrap();
        let want = 2.0 / std::f64::consts::PI.sqrt();
        assert!((t - want).abs() < 1e-7, "{t} vs {want}");
    }

    #[test]
    fn trace_rejected_for_dirichlet() {
        let spec = RobinSpec::dirichlet(0.0).unwrap();
        assert!(matches!(boundary_trace_sq(1, &spec, 1e-6), Err(Error::Domain(_))));
    }

    #[test]
    fn count_monotone_and_anchored() {
        let spec = RobinSpec::robin(0.0, 0.0).unwrap();
        let grid = Grid1D::for_spec(&spec);
        // Positive operator: nothing below 0; one level (μ=1) below 2.
        assert_eq!(eig_count_below(&spec, &grid, 0.0).unwrap(), 0);
        assert_eq!(eig_count_below(&spec, &grid, 2.0).unwrap(), 1);
        assert_eq!(eig_count_below(&spec, &grid, 6.0).unwrap(), 2);
        let mut prev = 0;
        for k in 0..6 {
            let c = eig_count_below(&spec, &grid, k as f64).unwrap();
            assert!(c >= prev);
            prev = c;
        }
    }

    // Oracle: dense finite-difference eigen-count at n = 2^15, t_max = 20,
    // stable under two further grid doublings (n = 2^16, 2^17).
    #[test]
    fn count_matches_dense_grid_oracle() {
        let spec = RobinSpec::robin(-1.0, 1.0).unwrap();
        let grid = Grid1D::new(20.0, 1 << 15).unwrap();
        assert_eq!(eig_count_below(&spec, &grid, 0.5).unwrap(), 1);
        let grid2 = Grid1D::new(20.0, 1 << 16).unwrap();
        assert_eq!(eig_count_below(&spec, &grid2, 0.5).unwrap(), 1);
    }

    // Oracle: dense finite-difference eigensolve (3-level Richardson at
    // n = 4096..16384): μ₁^D(1) = 1.468467746.
    #[test]
    fn dirichlet_shifted_matches_oracle() {
        let v = mu_dirichlet(1, 1.0, 1e-8).unwrap();
        assert!(v > 1.0 && v < 3.0);
        assert!((v - 1.468467746).abs() < 1e-6, "{v}");
    }

    #[test]
    fn count_eigenvalue_consistency() {
        let spec = RobinSpec::robin(-0.5, 0.7).unwrap();
        let grid = Grid1D::new(12.7, 4096).unwrap();
        for j in 1..=3 {
            let (t, _) = super::assemble(&spec, &grid);
            let lam = t.eigenvalue(j - 1);
            assert!(eig_count_below(&spec, &grid, lam + 1e-9).unwrap() >= j);
            assert!(eig_count_below(&spec, &grid, lam - 1e-9).unwrap() < j);
        }
    }

    #[test]
    fn positivity_barrier() {
        // For γ ≥ 0 and ξ ≤ 0 the potential floor ξ² is a lower bound.
        for &(g, xi) in &[(0.0, -0.5), (0.5, -1.0), (1.0, 0.0), (2.0, -2.0)] {
            let spec = RobinSpec::robin(g, xi).unwrap();
            let v = mu(1, &spec, 1e-8).unwrap();
            assert!(v >= xi * xi - 1e-8, "gamma={g} xi={xi}: {v}");
        }
    }

    #[test]
    fn band_ceiling_realizes_2j_minus_1() {
        for j in 1..=2 {
            let c = band_ceiling(j, 0.0, 1e-8).unwrap();
            assert!((c - (2.0 * j as f64 - 1.0)).abs() < 1e-6, "j={j}: {c}");
        }
    }

    #[test]
    fn grid_pairing_enforced() {
        let spec = RobinSpec::robin(0.0, 6.0).unwrap();
        let grid = Grid1D::new(12.0, 512).unwrap();
        assert!(matches!(eig_count_below(&spec, &grid, 1.0), Err(Error::Config(_))));
        assert!(Grid1D::new(1.0, 32).is_err());
    }

    #[test]
    fn band_point_strictly_ordered() {
        let spec = RobinSpec::robin(-2.0, 0.4).unwrap();
        let bp = band_point(&spec, 3, 1e-7).unwrap();
        assert!(bp.mus.windows(2).all(|w| w[0] < w[1]));
        assert!(bp.boundary_sq.iter().all(|&b| b >= 0.0));
        let specd = RobinSpec::dirichlet(0.4).unwrap();
        let bpd = band_point(&specd, 2, 1e-7).unwrap();
        assert!(bpd.boundary_sq.iter().all(|&b| b == 0.0));
    }

    #[test]
    fn degenerate_gamma_flagged() {
        let spec = RobinSpec::robin(-12.0, 0.0).unwrap();
        assert!(spec.is_degenerate());
        let c = mu_converged(1, &spec, 1e-6).unwrap();
        assert!(c.meta.degenerate_flagged);
        // Ground state energy is near -γ² for strongly attractive Robin.
        assert!(c.value < -100.0);
    }
}
