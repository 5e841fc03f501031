//! Exact upper bounds for the degree/diameter problem.
//!
//! All bound arithmetic is arbitrary-precision ([`num_bigint::BigUint`]):
//! the circulant bounds grow like `(2t)^D / D!` and overflow fixed-width
//! integers already at moderate parameters. Only [`asymptotic_main_term`]
//! works in floating point, since it is inherently an approximation.
//!
//! The central quantities are the Delannoy numbers `F(t, D)` — the number of
//! lattice points within L¹-distance `D` of the origin in ℤᵗ, which is
//! exactly the maximum ball size of an even-degree circulant with `t`
//! generator pairs — and their odd-degree analogue `F′(t, D)` that accounts
//! for one additional self-inverse generator. Several independent closed
//! forms and recurrences are implemented side by side in [`forms`] so they
//! can cross-check each other exactly.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Arbitrary-precision non-negative integer used for every exact bound.
pub type BigNat = BigUint;

/// Enumeration of the bound families exposed by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// General-graph Moore bound.
    Moore,
    /// Even-degree circulant bound `F(t, D)`.
    CirculantEven,
    /// Odd-degree circulant bound `F′(t, D)`.
    CirculantOdd,
    /// Largest triple-loop (degree-6, `s₁ = 1`) order.
    TripleLoop,
}

/// Dense Pascal triangle up to a fixed row, for exact binomials.
///
/// Rows are built by Pascal-rule additions (never factorial division), so
/// every entry is exact at any size.
struct Pascal {
    rows: Vec<Vec<BigUint>>,
}

impl Pascal {
    /// Build rows `0..=max_n`.
    fn up_to(max_n: u32) -> Pascal {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n as usize + 1);
        rows.push(vec![BigUint::one()]);
        for n in 1..=max_n as usize {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigUint::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigUint::one());
            rows.push(row);
        }
        Pascal { rows }
    }

    /// C(n, k); zero when k > n.
    fn c(&self, n: u32, k: u32) -> BigUint {
        if k > n {
            BigUint::zero()
        } else {
            self.rows[n as usize][k as usize].clone()
        }
    }
}

/// Exact binomial coefficient C(n, k) via Pascal-row iteration.
pub fn binomial(n: u32, k: u32) -> BigNat {
    Pascal::up_to(n).c(n, k)
}

/// Moore bound: the general-graph ceiling on the order of a graph with
/// maximum degree Δ and diameter D.
///
/// `1 + Δ·((Δ−1)^D − 1)/(Δ−2)` for Δ > 2, and `2D + 1` for Δ = 2.
pub fn moore_bound(delta: u32, d: u32) -> BigNat {
    assert!(delta >= 2, "Moore bound needs degree >= 2");
    if delta == 2 {
        return BigUint::from(2 * u64::from(d) + 1);
    }
    let dm1 = BigUint::from(delta - 1);
    let numer = BigUint::from(delta) * (dm1.pow(d) - BigUint::one());
    // (Δ−1)^D ≡ 1 (mod Δ−2), so the division is exact.
    BigUint::one() + numer / BigUint::from(delta - 2)
}

/// Independent closed forms and recurrences for `F(t, D)` and `F′(t, D)`.
///
/// Every `f_*` function computes the same value as [`delannoy_f`] and every
/// `f_prime_*` the same as [`delannoy_f_prime`]; the redundancy exists so the
/// test suite can cross-validate them against each other exactly.
pub mod forms {
    use super::*;

    /// Weighted sum `Σᵢ 2ⁱ C(t,i) C(d,i)`.
    pub fn f_weighted_sum(t: u32, d: u32) -> BigNat {
        let p = Pascal::up_to(t.max(d));
        let mut acc = BigUint::zero();
        let mut pow2 = BigUint::one();
        for i in 0..=t.min(d) {
            acc += &pow2 * p.c(t, i) * p.c(d, i);
            pow2 *= 2u32;
        }
        acc
    }

    /// Binomial product `Σᵢ₌₀ᵗ C(t,i) C(d+i, t)`.
    pub fn f_product_upper(t: u32, d: u32) -> BigNat {
        let p = Pascal::up_to(t + d);
        (0..=t).map(|i| p.c(t, i) * p.c(d + i, t)).sum()
    }

    /// Binomial product `Σᵢ₌₀ᵗ C(d+i, i) C(d, t−i)`.
    pub fn f_product_lower(t: u32, d: u32) -> BigNat {
        let p = Pascal::up_to(t + d);
        (0..=t).map(|i| p.c(d + i, i) * p.c(d, t - i)).sum()
    }

    /// Diagonal sum `Σᵢ₌₀ᵗ C(d,i) C(d+t−i, t−i)`.
    pub fn f_diagonal_desc(t: u32, d: u32) -> BigNat {
        let p = Pascal::up_to(t + d);
        (0..=t).map(|i| p.c(d, i) * p.c(d + t - i, t - i)).sum()
    }

    /// Diagonal sum `Σᵢ₌₀ᵗ C(d,t−i) C(d+i, i)`.
    pub fn f_diagonal_asc(t: u32, d: u32) -> BigNat {
        let p = Pascal::up_to(t + d);
        (0..=t).map(|i| p.c(d, t - i) * p.c(d + i, i)).sum()
    }

    /// Dynamic program on the recurrence
    /// `F(t,d) = F(t−1,d) + F(t,d−1) + F(t−1,d−1)`
    /// with boundary `F(t,0) = 1` (radius-0 ball) and `F(0,d) = 1`
    /// (no generators). It reproduces the degree-row base `F(t,1) = 2t+1`.
    pub fn f_recurrence(t: u32, d: u32) -> BigNat {
        let (t, d) = (t as usize, d as usize);
        let mut table = vec![vec![BigUint::one(); d + 1]; t + 1];
        for ti in 1..=t {
            for di in 1..=d {
                table[ti][di] =
                    &table[ti - 1][di] + &table[ti][di - 1] + &table[ti - 1][di - 1];
            }
        }
        table[t][d].clone()
    }

    /// `F′(t,d) = F(t,d) + F(t,d−1)`, with the `F(·,0) = 1` convention making
    /// `F′(t,1) = 2t + 2`; `F′(t,0)` is fixed at 2 (the radius-0 ball plus the
    /// antipodal vertex reached by the half generator convention).
    pub fn f_prime_sum(t: u32, d: u32) -> BigNat {
        if d == 0 {
            return BigUint::from(2u32);
        }
        f_weighted_sum(t, d) + f_weighted_sum(t, d - 1)
    }

    /// Doubled diagonal `2·Σᵢ C(d−1,i) C(d+t−i, t−i)`.
    pub fn f_prime_double_desc(t: u32, d: u32) -> BigNat {
        assert!(d >= 1);
        let p = Pascal::up_to(t + d);
        let sum: BigUint = (0..=t).map(|i| p.c(d - 1, i) * p.c(d + t - i, t - i)).sum();
        sum * 2u32
    }

    /// Doubled diagonal in complement form `2·Σᵢ C(d−1,i) C(d+t−i, d)` —
    /// termwise the complement of [`f_prime_double_desc`] since
    /// `(d+t−i) − (t−i) = d`.
    pub fn f_prime_double_complement(t: u32, d: u32) -> BigNat {
        assert!(d >= 1);
        let p = Pascal::up_to(t + d);
        let sum: BigUint = (0..=t).map(|i| p.c(d - 1, i) * p.c(d + t - i, d)).sum();
        sum * 2u32
    }

    /// Doubled diagonal `2·Σᵢ C(d−1,t−i) C(d+i, i)`.
    pub fn f_prime_double_asc(t: u32, d: u32) -> BigNat {
        assert!(d >= 1);
        let p = Pascal::up_to(t + d);
        let sum: BigUint = (0..=t).map(|i| p.c(d - 1, t - i) * p.c(d + i, i)).sum();
        sum * 2u32
    }

    /// Dynamic program on the recurrence
    /// `F′(t,d) = F′(t−1,d) + F′(t,d−1) + F′(t−1,d−1)`
    /// with base row `F′(t,1) = 2t + 2` and base column `F′(0,d) = 2`.
    pub fn f_prime_recurrence(t: u32, d: u32) -> BigNat {
        assert!(d >= 1);
        let (t, d) = (t as usize, d as usize);
        let mut table = vec![vec![BigUint::zero(); d + 1]; t + 1];
        for (ti, row) in table.iter_mut().enumerate() {
            row[1] = BigUint::from(2 * ti as u64 + 2);
        }
        for cell in table[0].iter_mut().skip(1) {
            *cell = BigUint::from(2u32);
        }
        for ti in 1..=t {
            for di in 2..=d {
                table[ti][di] =
                    &table[ti - 1][di] + &table[ti][di - 1] + &table[ti - 1][di - 1];
            }
        }
        table[t][d].clone()
    }
}

/// Delannoy number `F(t, D)`: the maximum order of an even-degree circulant
/// with `t` generator pairs (degree `2t`) and diameter `D`. `F(t, 0) = 1`.
pub fn delannoy_f(t: u32, d: u32) -> BigNat {
    forms::f_weighted_sum(t, d)
}

/// Odd-degree analogue `F′(t, D) = F(t, D) + F(t, D−1)`: the maximum order of
/// a circulant of degree `2t + 1` (with the half generator) and diameter `D`.
/// `F′(t, 0) = 2`.
pub fn delannoy_f_prime(t: u32, d: u32) -> BigNat {
    forms::f_prime_sum(t, d)
}

/// Upper bound on the order of a circulant graph of degree Δ and diameter D:
/// `F(t, D)` when `Δ = 2t`, `F′(t, D)` when `Δ = 2t + 1`.
pub fn circulant_upper_bound(delta: u32, d: u32) -> BigNat {
    assert!(delta >= 2, "circulant bound needs degree >= 2");
    let t = delta / 2;
    if delta.is_multiple_of(2) {
        delannoy_f(t, d)
    } else {
        delannoy_f_prime(t, d)
    }
}

/// Maximum order of a triple-loop network (degree 6, `s₁ = 1`) of diameter D,
/// by the closed three-branch formula in `q = ⌊D/3⌋`.
pub fn triple_loop_max(d: u32) -> BigNat {
    assert!(d >= 1);
    let q = u128::from(d / 3);
    let value = match d % 3 {
        0 => 32 * q * q * q + 16 * q * q + 6 * q + 1,
        1 => 32 * q * q * q + 48 * q * q + 30 * q + 7,
        _ => 32 * q * q * q + 80 * q * q + 70 * q + 21,
    };
    BigUint::from(value)
}

/// Leading asymptotic term `(2t)^D / D!` of `F(t, D)` for large t.
pub fn asymptotic_main_term(t: u32, d: u32) -> f64 {
    assert!(t >= 1 && d >= 1);
    let mut acc = 1.0f64;
    for i in 1..=d {
        acc *= 2.0 * f64::from(t) / f64::from(i);
    }
    acc
}
