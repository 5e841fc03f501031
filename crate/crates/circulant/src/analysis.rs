//! Polynomial least-squares fits over (degree, diameter) grids and the
//! difference grids used to compare predictions against tabulated values.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::bounds::circulant_upper_bound;
use crate::error::{Error, Result};

/// Default fit window: the bound and record tables up to degree 15 and
/// diameter 10 (the partially filled degree-16 row is excluded).
pub const DEFAULT_DEGREES: (u32, u32) = (3, 15);
pub const DEFAULT_DIAMETERS: (u32, u32) = (2, 10);

/// A dense (degree × diameter) grid of reals with missing cells allowed.
/// Rows are degrees, columns are diameters, both ranges inclusive.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    degrees: (u32, u32),
    diameters: (u32, u32),
    values: Vec<Option<f64>>,
}

impl Grid {
    pub fn new(degrees: (u32, u32), diameters: (u32, u32)) -> Self {
        assert!(degrees.0 <= degrees.1 && diameters.0 <= diameters.1);
        let rows = (degrees.1 - degrees.0 + 1) as usize;
        let cols = (diameters.1 - diameters.0 + 1) as usize;
        Grid {
            degrees,
            diameters,
            values: vec![None; rows * cols],
        }
    }

    pub fn degrees(&self) -> (u32, u32) {
        self.degrees
    }

    pub fn diameters(&self) -> (u32, u32) {
        self.diameters
    }

    fn idx(&self, degree: u32, diameter: u32) -> usize {
        assert!(
            (self.degrees.0..=self.degrees.1).contains(&degree)
                && (self.diameters.0..=self.diameters.1).contains(&diameter),
            "cell ({degree}, {diameter}) outside grid"
        );
        let cols = (self.diameters.1 - self.diameters.0 + 1) as usize;
        (degree - self.degrees.0) as usize * cols + (diameter - self.diameters.0) as usize
    }

    pub fn set(&mut self, degree: u32, diameter: u32, value: f64) {
        let i = self.idx(degree, diameter);
        self.values[i] = Some(value);
    }

    pub fn clear(&mut self, degree: u32, diameter: u32) {
        let i = self.idx(degree, diameter);
        self.values[i] = None;
    }

    pub fn get(&self, degree: u32, diameter: u32) -> Option<f64> {
        self.values[self.idx(degree, diameter)]
    }

    /// Iterate present cells as (degree, diameter, value).
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32, f64)> + '_ {
        let cols = self.diameters.1 - self.diameters.0 + 1;
        self.values.iter().enumerate().filter_map(move |(i, v)| {
            v.map(|v| {
                (
                    self.degrees.0 + i as u32 / cols,
                    self.diameters.0 + i as u32 % cols,
                    v,
                )
            })
        })
    }

    pub fn present(&self) -> usize {
        self.values.iter().flatten().count()
    }

    /// Natural logarithm of every present cell.
    pub fn ln(&self) -> Result<Grid> {
        let mut out = Grid::new(self.degrees, self.diameters);
        for (deg, diam, v) in self.cells() {
            if v <= 0.0 {
                return Err(Error::NonPositiveLog(deg, diam));
            }
            out.set(deg, diam, v.ln());
        }
        Ok(out)
    }

    /// Keep only cells satisfying the predicate (others become missing).
    pub fn retain(&self, mut keep: impl FnMut(u32, u32, f64) -> bool) -> Grid {
        let mut out = Grid::new(self.degrees, self.diameters);
        for (deg, diam, v) in self.cells() {
            if keep(deg, diam, v) {
                out.set(deg, diam, v);
            }
        }
        out
    }

    /// CSV rendering: header row of diameters, one row per degree, missing
    /// cells empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree");
        for diam in self.diameters.0..=self.diameters.1 {
            out.push_str(&format!(",{diam}"));
        }
        out.push('\n');
        for deg in self.degrees.0..=self.degrees.1 {
            out.push_str(&deg.to_string());
            for diam in self.diameters.0..=self.diameters.1 {
                out.push(',');
                if let Some(v) = self.get(deg, diam) {
                    out.push_str(&format_cell(v));
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Stable, locale-free cell formatting for CSV output.
fn format_cell(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        format!("{v:.6}")
    }
}

/// The circulant upper bound as a real-valued grid.
pub fn bound_grid(degrees: (u32, u32), diameters: (u32, u32)) -> Grid {
    let mut grid = Grid::new(degrees, diameters);
    for deg in degrees.0..=degrees.1 {
        for diam in diameters.0..=diameters.1 {
            if let Some(b) = circulant_upper_bound(deg, diam).to_f64() {
                grid.set(deg, diam, b);
            }
        }
    }
    grid
}

/// Value transform applied before fitting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    Identity,
    Log,
}

/// A fitted bivariate polynomial in (degree, diameter).
#[derive(Debug, Clone, PartialEq)]
pub struct PolyFit {
    pub max_total_degree: u32,
    /// Coefficient of the monomial Δ^a · D^b keyed by (a, b).
    pub coefficients: BTreeMap<(u32, u32), f64>,
    pub r_squared: f64,
}

impl PolyFit {
    pub fn eval(&self, degree: f64, diameter: f64) -> f64 {
        self.coefficients
            .iter()
            .map(|(&(a, b), &c)| c * degree.powi(a as i32) * diameter.powi(b as i32))
            .sum()
    }
}

/// Monomial exponents (a, b) with a + b ≤ max, in stable order.
fn monomials(max_total_degree: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for a in 0..=max_total_degree {
        for b in 0..=(max_total_degree - a) {
            out.push((a, b));
        }
    }
    out
}

/// Solve the symmetric linear system `A x = b` by Gaussian elimination with
/// partial pivoting. `A` is row-major m×m.
fn solve(mut a: Vec<f64>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let m = b.len();
    let scale = a
        .iter()
        .fold(0.0f64, |acc, &v| acc.max(v.abs()))
        .max(f64::MIN_POSITIVE);
    for col in 0..m {
        let pivot_row = (col..m)
            .max_by(|&r, &s| {
                a[r * m + col]
                    .abs()
                    .partial_cmp(&a[s * m + col].abs())
                    .unwrap()
            })
            .unwrap();
        if a[pivot_row * m + col].abs() < 1e-12 * scale {
            return Err(Error::SingularFit(format!(
                "rank-deficient design matrix (pivot {col})"
            )));
        }
        if pivot_row != col {
            for k in 0..m {
                a.swap(col * m + k, pivot_row * m + k);
            }
            b.swap(col, pivot_row);
        }
        let pivot = a[col * m + col];
        for row in (col + 1)..m {
            let factor = a[row * m + col] / pivot;
            if factor == 0.0 {
                continue;
            }
            for k in col..m {
                a[row * m + k] -= factor * a[col * m + k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; m];
    for col in (0..m).rev() {
        let mut acc = b[col];
        for k in (col + 1)..m {
            acc -= a[col * m + k] * x[k];
        }
        x[col] = acc / a[col * m + col];
    }
    Ok(x)
}

/// Ordinary least squares of the (optionally log-transformed) grid values
/// on the monomials Δ^a D^b with a + b ≤ `max_total_degree`. The data are
/// centered before solving and the coefficients mapped back, for
/// reproducible conditioning.
pub fn fit_poly(grid: &Grid, max_total_degree: u32, transform: Transform) -> Result<PolyFit> {
    let working = match transform {
        Transform::Identity => grid.clone(),
        Transform::Log => grid.ln()?,
    };
    let samples: Vec<(f64, f64, f64)> = working
        .cells()
        .map(|(deg, diam, v)| (deg as f64, diam as f64, v))
        .collect();
    let terms = monomials(max_total_degree);
    let m = terms.len();
    if samples.len() < m {
        return Err(Error::SingularFit(format!(
            "{} cells cannot determine {m} coefficients",
            samples.len()
        )));
    }

    let n = samples.len() as f64;
    let deg_center = samples.iter().map(|s| s.0).sum::<f64>() / n;
    let diam_center = samples.iter().map(|s| s.1).sum::<f64>() / n;

    // Normal equations on centered coordinates.
    let design: Vec<Vec<f64>> = samples
        .iter()
        .map(|&(deg, diam, _)| {
            let (u, v) = (deg - deg_center, diam - diam_center);
            terms
                .iter()
                .map(|&(a, b)| u.powi(a as i32) * v.powi(b as i32))
                .collect()
        })
        .collect();
    let mut ata = vec![0.0f64; m * m];
    let mut aty = vec![0.0f64; m];
    for (row, &(_, _, y)) in design.iter().zip(&samples) {
        for i in 0..m {
            aty[i] += row[i] * y;
            for j in 0..m {
                ata[i * m + j] += row[i] * row[j];
            }
        }
    }
    let beta = solve(ata, aty)?;

    let y_mean = samples.iter().map(|s| s.2).sum::<f64>() / n;
    let mut ss_res = 0.0;
    let mut ss_tot = 0.0;
    for (row, &(_, _, y)) in design.iter().zip(&samples) {
        let pred: f64 = row.iter().zip(&beta).map(|(x, b)| x * b).sum();
        ss_res += (y - pred) * (y - pred);
        ss_tot += (y - y_mean) * (y - y_mean);
    }
    let r_squared = if ss_tot > 0.0 {
        1.0 - ss_res / ss_tot
    } else if ss_res.abs() < 1e-9 {
        1.0
    } else {
        0.0
    };

    // Expand (Δ - p)^a (D - q)^b back into Δ^i D^j monomials.
    let mut coefficients: BTreeMap<(u32, u32), f64> = terms.iter().map(|&t| (t, 0.0)).collect();
    for (&(a, b), &c) in terms.iter().zip(&beta) {
        for i in 0..=a {
            for j in 0..=b {
                let w = c
                    * binom_f64(a, i)
                    * (-deg_center).powi((a - i) as i32)
                    * binom_f64(b, j)
                    * (-diam_center).powi((b - j) as i32);
                *coefficients.get_mut(&(i, j)).unwrap() += w;
            }
        }
    }

    Ok(PolyFit {
        max_total_degree,
        coefficients,
        r_squared,
    })
}

fn binom_f64(n: u32, k: u32) -> f64 {
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Predicted-minus-actual grid; when `normalize` is set each difference is
/// divided by the actual value.
pub fn diff_grid(fit: &PolyFit, actual: &Grid, normalize: bool) -> Result<Grid> {
    let mut out = Grid::new(actual.degrees(), actual.diameters());
    for (deg, diam, v) in actual.cells() {
        let mut d = fit.eval(deg as f64, diam as f64) - v;
        if normalize {
            if v == 0.0 {
                return Err(Error::DivisionByZero(deg, diam));
            }
            d /= v;
        }
        out.set(deg, diam, d);
    }
    Ok(out)
}

/// Bi-quartic fit of the percentage grid.
pub fn percentage_fit(grid: &Grid) -> Result<PolyFit> {
    fit_poly(grid, 4, Transform::Identity)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_grid(f: impl Fn(f64, f64) -> f64) -> Grid {
        let mut g = Grid::new(DEFAULT_DEGREES, DEFAULT_DIAMETERS);
        for deg in DEFAULT_DEGREES.0..=DEFAULT_DEGREES.1 {
            for diam in DEFAULT_DIAMETERS.0..=DEFAULT_DIAMETERS.1 {
                g.set(deg, diam, f(deg as f64, diam as f64));
            }
        }
        g
    }

    #[test]
    fn exact_polynomial_recovery() {
        let g = sample_grid(|x, y| 2.0 + 0.5 * x - 0.25 * y + 0.125 * x * y - 0.01 * x * x * y);
        let fit = fit_poly(&g, 3, Transform::Identity).unwrap();
        assert!((fit.r_squared - 1.0).abs() < 1e-12, "r2 = {}", fit.r_squared);
        let want = [
            ((0, 0), 2.0),
            ((1, 0), 0.5),
            ((0, 1), -0.25),
            ((1, 1), 0.125),
            ((2, 1), -0.01),
        ];
        for (key, expect) in want {
            let got = fit.coefficients[&key];
            assert!(
                (got - expect).abs() <= 1e-8 * expect.abs().max(1.0),
                "coefficient {key:?}: got {got}, want {expect}"
            );
        }
        for (&key, &c) in &fit.coefficients {
            if !want.iter().any(|&(k, _)| k == key) {
                assert!(c.abs() < 1e-8, "coefficient {key:?} should vanish, got {c}");
            }
        }
    }

    #[test]
    fn quartic_recovers_quartic_terms() {
        let g = sample_grid(|x, y| 1.0 + 0.003 * x * x * x * x - 0.002 * x * y * y * y);
        let fit = fit_poly(&g, 4, Transform::Identity).unwrap();
        assert_eq!(fit.coefficients.len(), 15);
        assert!((fit.coefficients[&(4, 0)] - 0.003).abs() < 1e-9);
        assert!((fit.coefficients[&(1, 3)] + 0.002).abs() < 1e-9);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn too_few_cells_is_singular() {
        let mut g = Grid::new((3, 3), (2, 10));
        for diam in 2..=10 {
            g.set(3, diam, diam as f64);
        }
        assert!(matches!(
            fit_poly(&g, 3, Transform::Identity),
            Err(Error::SingularFit(_))
        ));
    }

    #[test]
    fn rank_deficiency_is_detected() {
        // Two distinct degree values cannot identify Δ², Δ³ terms even with
        // enough cells.
        let mut g = Grid::new((3, 4), (2, 10));
        for deg in 3..=4 {
            for diam in 2..=10 {
                g.set(deg, diam, (deg * diam) as f64);
            }
        }
        assert!(matches!(
            fit_poly(&g, 3, Transform::Identity),
            Err(Error::SingularFit(_))
        ));
    }

    #[test]
    fn log_transform_rejects_nonpositive_cells() {
        let mut g = Grid::new((3, 4), (2, 3));
        g.set(3, 2, 5.0);
        g.set(4, 3, 0.0);
        assert_eq!(g.ln().unwrap_err(), Error::NonPositiveLog(4, 3));
    }

    #[test]
    fn bound_fit_meets_published_quality() {
        let bounds = bound_grid(DEFAULT_DEGREES, DEFAULT_DIAMETERS);
        let all = fit_poly(&bounds, 3, Transform::Log).unwrap();
        assert!(all.r_squared >= 0.998, "r2 = {}", all.r_squared);

        let even = bounds.retain(|deg, _, _| deg % 2 == 0);
        let even_fit = fit_poly(&even, 3, Transform::Log).unwrap();
        assert!(even_fit.r_squared >= 0.999, "even r2 = {}", even_fit.r_squared);

        let odd = bounds.retain(|deg, _, _| deg % 2 == 1);
        let odd_fit = fit_poly(&odd, 3, Transform::Log).unwrap();
        assert!(odd_fit.r_squared >= 0.995, "odd r2 = {}", odd_fit.r_squared);
    }

    #[test]
    fn bound_fit_matches_published_sign_structure() {
        // Published cubic coefficients alternate in a fixed sign pattern.
        let bounds = bound_grid(DEFAULT_DEGREES, DEFAULT_DIAMETERS);
        let fit = fit_poly(&bounds, 3, Transform::Log).unwrap();
        let signs = [
            ((0, 0), -1.0),
            ((1, 0), 1.0),
            ((0, 1), 1.0),
            ((2, 0), -1.0),
            ((1, 1), 1.0),
            ((0, 2), -1.0),
            ((3, 0), 1.0),
            ((2, 1), -1.0),
            ((1, 2), -1.0),
            ((0, 3), 1.0),
        ];
        for (key, sign) in signs {
            let c = fit.coefficients[&key];
            assert!(
                c * sign > 0.0,
                "coefficient {key:?} = {c} has unexpected sign"
            );
        }
    }

    #[test]
    fn even_rows_sit_above_the_joint_fit_and_odd_below() {
        let bounds = bound_grid(DEFAULT_DEGREES, DEFAULT_DIAMETERS);
        let logged = bounds.ln().unwrap();
        let fit = fit_poly(&bounds, 3, Transform::Log).unwrap();
        let diff = diff_grid(&fit, &logged, false).unwrap();
        let mean_of = |parity: u32| {
            let vals: Vec<f64> = diff
                .cells()
                .filter(|&(deg, _, _)| deg % 2 == parity)
                .map(|(_, _, v)| v)
                .collect();
            vals.iter().sum::<f64>() / vals.len() as f64
        };
        // Even-degree bounds exceed the joint prediction, so predicted minus
        // actual is negative there, and positive on odd rows.
        assert!(mean_of(0) < 0.0);
        assert!(mean_of(1) > 0.0);
    }

    #[test]
    fn r_squared_is_affine_invariant() {
        let g = sample_grid(|x, y| (x * y).sin() + x);
        let f1 = fit_poly(&g, 3, Transform::Identity).unwrap();
        let mut scaled = Grid::new(g.degrees(), g.diameters());
        for (deg, diam, v) in g.cells() {
            scaled.set(deg, diam, 3.0 * v + 7.0);
        }
        let f2 = fit_poly(&scaled, 3, Transform::Identity).unwrap();
        assert!((f1.r_squared - f2.r_squared).abs() < 1e-9);
    }

    #[test]
    fn quartic_never_fits_worse_than_cubic() {
        let bounds = bound_grid(DEFAULT_DEGREES, DEFAULT_DIAMETERS);
        let cubic = fit_poly(&bounds, 3, Transform::Log).unwrap();
        let quartic = fit_poly(&bounds, 4, Transform::Log).unwrap();
        assert!(quartic.r_squared >= cubic.r_squared - 1e-12);
    }

    #[test]
    fn perfect_fit_diffs_to_zero() {
        let g = sample_grid(|x, y| 1.0 + x + y * y);
        let fit = fit_poly(&g, 3, Transform::Identity).unwrap();
        let diff = diff_grid(&fit, &g, false).unwrap();
        for (_, _, v) in diff.cells() {
            assert!(v.abs() < 1e-7, "residual {v}");
        }
    }

    #[test]
    fn normalizing_by_zero_is_an_error() {
        let mut g = Grid::new((3, 4), (2, 3));
        g.set(3, 2, 0.0);
        g.set(3, 3, 1.0);
        g.set(4, 2, 2.0);
        g.set(4, 3, 3.0);
        let fit = PolyFit {
            max_total_degree: 3,
            coefficients: BTreeMap::from([((0, 0), 1.0)]),
            r_squared: 1.0,
        };
        assert_eq!(
            diff_grid(&fit, &g, true).unwrap_err(),
            Error::DivisionByZero(3, 2)
        );
    }

    #[test]
    fn normalization_preserves_sign_on_positive_grids() {
        let g = sample_grid(|x, y| 50.0 + x - y);
        let fit = fit_poly(&g, 4, Transform::Identity).unwrap();
        let plain = diff_grid(&fit, &g, false).unwrap();
        let normed = diff_grid(&fit, &g, true).unwrap();
        for ((deg, diam, a), (_, _, b)) in plain.cells().zip(normed.cells()) {
            assert!(
                a == 0.0 || a.signum() == b.signum(),
                "sign flip at ({deg}, {diam})"
            );
        }
    }

    #[test]
    fn constant_percentage_grid_fits_to_its_intercept() {
        let g = sample_grid(|_, _| 100.0);
        let fit = percentage_fit(&g).unwrap();
        assert!((fit.coefficients[&(0, 0)] - 100.0).abs() < 1e-6);
        for (&key, &c) in &fit.coefficients {
            if key != (0, 0) {
                assert!(c.abs() < 1e-6, "coefficient {key:?} = {c}");
            }
        }
        assert!((fit.r_squared - 1.0).abs() < 1e-9);
    }

    #[test]
    fn missing_cells_are_excluded_from_fits() {
        let mut g = sample_grid(|x, y| x + y);
        g.clear(15, 10);
        let fit = fit_poly(&g, 3, Transform::Identity).unwrap();
        assert!((fit.r_squared - 1.0).abs() < 1e-9);
        assert!((fit.eval(15.0, 10.0) - 25.0).abs() < 1e-6);
    }

    #[test]
    fn csv_rendering_is_stable() {
        let mut g = Grid::new((3, 4), (2, 4));
        g.set(3, 2, 8.0);
        g.set(3, 4, 16.5);
        g.set(4, 3, 25.0);
        assert_eq!(g.to_csv(), "degree,2,3,4\n3,8,,16.500000\n4,,25,\n");
    }
}
