//! Wigner d^J and D^J rotation matrices for arbitrary half-integer J.
//!
//! Rows and columns are indexed by M = J, J−1, …, −J (descending), matching
//! the closed forms for J = 1/2, 1, 3/2. The general entry is the
//! factorial sum
//!
//!   d^J_{MM'}(θ) = √[(J+M)!(J−M)!(J+M')!(J−M')!]
//!                  · Σ_χ (−1)^χ / [(J−M−χ)!(J+M'−χ)!(χ+M−M')!χ!]
//!                  · (cos θ/2)^{2J+M'−M−2χ} (−sin θ/2)^{M−M'+2χ}
//!
//! with χ running over [max(0, M'−M), min(J−M, J+M')] — the explicit bounds
//! implied by the 1/n! = 0 (n < 0) convention. D^J adds the phase factor
//! e^{iφ(M'−M)} entrywise, so |D| = |d| and the matrix is unitary.
//!
//! Half-integer spins are carried as doubled integers ([`HalfInt`]); 2J is
//! capped at 20 so that every factorial fits exactly in a u64.

use crate::cxmat::{c64, phase, CMatrix};
use thiserror::Error;

/// Largest supported 2J; factorials up to (2J)! are tabulated exactly.
pub const MAX_TWO_J: i32 = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WignerError {
    #[error("closed forms exist only for 2J in {{1, 2, 3}}, got 2J = {0}")]
    NoClosedForm(i32),
    #[error("row offset a = {a} outside 0..=2J = {two_j}")]
    RowOutOfRange { a: i64, two_j: i32 },
}

/// A half-integer stored as its double, so J = 3/2 is `HalfInt::new(3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const fn new(twice: i32) -> Self {
        Self { twice }
    }

    pub const fn twice(self) -> i32 {
        self.twice
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    /// Row/column labels M = J, J−1, …, −J as doubled integers.
    pub fn projections(self) -> impl Iterator<Item = i32> {
        let j = self.twice;
        (0..=j).map(move |k| j - 2 * k)
    }

    /// Index of the projection M within the descending ordering.
    pub fn index_of(self, two_m: i32) -> usize {
        debug_assert!((self.twice - two_m) % 2 == 0 && two_m.abs() <= self.twice);
        ((self.twice - two_m) / 2) as usize
    }
}

impl std::fmt::Display for HalfInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Rotation spec: spin, polar angle θ, axis angle φ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerSpec {
    pub two_j: HalfInt,
    pub theta: f64,
    pub phi: f64,
}

fn factorial(n: i64) -> f64 {
    debug_assert!(
        (0..=20).contains(&n),
        "factorial out of tabulated range: {n}"
    );
    const TABLE: [u64; 21] = [
        1,
        1,
        2,
        6,
        24,
        120,
        720,
        5_040,
        40_320,
        362_880,
        3_628_800,
        39_916_800,
        479_001_600,
        6_227_020_800,
        87_178_291_200,
        1_307_674_368_000,
        20_922_789_888_000,
        355_687_428_096_000,
        6_402_373_705_728_000,
        121_645_100_408_832_000,
        2_432_902_008_176_640_000,
    ];
    TABLE[n as usize] as f64
}

fn check_two_j(two_j: HalfInt) {
    assert!(
        (1..=MAX_TWO_J).contains(&two_j.twice()),
        "2J must be in 1..={MAX_TWO_J}, got {}",
        two_j.twice()
    );
}

/// One entry of d^J; `two_m`, `two_mp` are doubled projections.
fn d_entry(two_j: i32, two_m: i32, two_mp: i32, cos_half: f64, sin_half: f64) -> f64 {
    let j_plus_m = ((two_j + two_m) / 2) as i64;
    let j_minus_m = ((two_j - two_m) / 2) as i64;
    let j_plus_mp = ((two_j + two_mp) / 2) as i64;
    let j_minus_mp = ((two_j - two_mp) / 2) as i64;
    let prefactor =
        (factorial(j_plus_m) * factorial(j_minus_m) * factorial(j_plus_mp) * factorial(j_minus_mp))
            .sqrt();
    let m_minus_mp = ((two_m - two_mp) / 2) as i64;
    let lo = 0.max(-m_minus_mp);
    let hi = j_minus_m.min(j_plus_mp);
    let mut sum = 0.0;
    for chi in lo..=hi {
        let den = factorial(j_minus_m - chi)
            * factorial(j_plus_mp - chi)
            * factorial(chi + m_minus_mp)
            * factorial(chi);
        // cos exponent 2J + M' - M - 2χ and sin exponent M - M' + 2χ
        let p = (2 * two_j + two_mp - two_m) / 2 - 2 * chi as i32;
        let q = (two_m - two_mp) / 2 + 2 * chi as i32;
        let sign = if chi % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign / den * cos_half.powi(p) * (-sin_half).powi(q);
    }
    prefactor * sum
}

/// One row of d^J(θ): the entries d_{M M'} for M' = J … −J.
pub fn little_d_row(two_j: HalfInt, two_m: i32, theta: f64) -> Vec<f64> {
    check_two_j(two_j);
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    two_j
        .projections()
        .map(|two_mp| d_entry(two_j.twice(), two_m, two_mp, c, s))
        .collect()
}

/// The full (2J+1)×(2J+1) real rotation matrix d^J(θ); d^J(0) = 1.
pub fn little_d(two_j: HalfInt, theta: f64) -> CMatrix {
    check_two_j(two_j);
    let n = (two_j.twice() + 1) as usize;
    let mut m = CMatrix::zeros(n, n);
    for (ri, two_m) in two_j.projections().enumerate() {
        for (ci, val) in little_d_row(two_j, two_m, theta).into_iter().enumerate() {
            m[(ri, ci)] = c64(val, 0.0);
        }
    }
    m
}

/// D^J(θ, φ) = e^{iφ(M'−M)} ⊙ d^J(θ); unitary, |D| = |d| entrywise.
pub fn big_d(spec: WignerSpec) -> CMatrix {
    let d = little_d(spec.two_j, spec.theta);
    let n = d.rows();
    let mut phases = CMatrix::zeros(n, n);
    let projections: Vec<i32> = spec.two_j.projections().collect();
    for ri in 0..n {
        for ci in 0..n {
            let diff = (projections[ci] - projections[ri]) as f64 / 2.0;
            phases[(ri, ci)] = phase(spec.phi * diff);
        }
    }
    d.hadamard(&phases).expect("same shape")
}

/// Closed forms for J = 1/2, 1, 3/2.
pub fn little_d_closed(two_j: HalfInt, theta: f64) -> Result<CMatrix, WignerError> {
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    match two_j.twice() {
        1 => Ok(CMatrix::from_real_rows(&[vec![c, -s], vec![s, c]])),
        2 => {
            let (ct, st) = (theta.cos(), theta.sin());
            let r = 2.0_f64.sqrt();
            Ok(CMatrix::from_real_rows(&[
                vec![(1.0 + ct) / 2.0, -st / r, (1.0 - ct) / 2.0],
                vec![st / r, ct, -st / r],
                vec![(1.0 - ct) / 2.0, st / r, (1.0 + ct) / 2.0],
            ]))
        }
        3 => {
            let r3 = 3.0_f64.sqrt();
            Ok(CMatrix::from_real_rows(&[
                vec![c * c * c, -r3 * s * c * c, r3 * s * s * c, -s * s * s],
                vec![
                    r3 * s * c * c,
                    c * (3.0 * c * c - 2.0),
                    s * (3.0 * s * s - 2.0),
                    r3 * s * s * c,
                ],
                vec![
                    r3 * s * s * c,
                    -s * (3.0 * s * s - 2.0),
                    c * (3.0 * c * c - 2.0),
                    -r3 * s * c * c,
                ],
                vec![s * s * s, r3 * s * s * c, r3 * s * c * c, c * c * c],
            ]))
        }
        other => Err(WignerError::NoClosedForm(other)),
    }
}

fn d_entry_derivative(two_j: i32, two_m: i32, two_mp: i32, cos_half: f64, sin_half: f64) -> f64 {
    let j_plus_m = ((two_j + two_m) / 2) as i64;
    let j_minus_m = ((two_j - two_m) / 2) as i64;
    let j_plus_mp = ((two_j + two_mp) / 2) as i64;
    let j_minus_mp = ((two_j - two_mp) / 2) as i64;
    let prefactor =
        (factorial(j_plus_m) * factorial(j_minus_m) * factorial(j_plus_mp) * factorial(j_minus_mp))
            .sqrt();
    let m_minus_mp = ((two_m - two_mp) / 2) as i64;
    let lo = 0.max(-m_minus_mp);
    let hi = j_minus_m.min(j_plus_mp);
    let mut sum = 0.0;
    for chi in lo..=hi {
        let den = factorial(j_minus_m - chi)
            * factorial(j_plus_mp - chi)
            * factorial(chi + m_minus_mp)
            * factorial(chi);
        let p = (2 * two_j + two_mp - two_m) / 2 - 2 * chi as i32;
        let q = (two_m - two_mp) / 2 + 2 * chi as i32;
        let sign = if chi % 2 == 0 { 1.0 } else { -1.0 };
        // d/dθ [c^p (−s)^q] = (p/2) c^{p−1} (−s)^{q+1} − (q/2) c^{p+1} (−s)^{q−1},
        // with vanishing pieces skipped so θ = 0, ±π stay finite.
        let mut term = 0.0;
        if p > 0 {
            term += 0.5 * p as f64 * cos_half.powi(p - 1) * (-sin_half).powi(q + 1);
        }
        if q > 0 {
            term -= 0.5 * q as f64 * cos_half.powi(p + 1) * (-sin_half).powi(q - 1);
        }
        sum += sign / den * term;
    }
    prefactor * sum
}

/// Entrywise ∂d^J/∂θ from the analytic term-by-term derivative.
pub fn little_d_derivative(two_j: HalfInt, theta: f64) -> CMatrix {
    check_two_j(two_j);
    let n = (two_j.twice() + 1) as usize;
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let mut m = CMatrix::zeros(n, n);
    let projections: Vec<i32> = two_j.projections().collect();
    for ri in 0..n {
        for ci in 0..n {
            m[(ri, ci)] = c64(
                d_entry_derivative(two_j.twice(), projections[ri], projections[ci], c, s),
                0.0,
            );
        }
    }
    m
}

/// The θ = π/2 reflection identities for the row M = J − a:
///
///   d_{J−a, M'}(π/2)  = (−1)^a (−1)^{2M'} d_{J−a, −M'}(π/2)
///   ∂θ d_{J−a, M'}(π/2) = −(−1)^a (−1)^{2M'} ∂θ d_{J−a, −M'}(π/2)
///
/// Returns the max residual of each identity over all M'.
pub fn symmetry_half_pi(two_j: HalfInt, a: i64) -> Result<(f64, f64), WignerError> {
    check_two_j(two_j);
    if !(0..=two_j.twice() as i64).contains(&a) {
        return Err(WignerError::RowOutOfRange {
            a,
            two_j: two_j.twice(),
        });
    }
    let theta = std::f64::consts::FRAC_PI_2;
    let d = little_d(two_j, theta);
    let dd = little_d_derivative(two_j, theta);
    let ri = a as usize;
    let sign_a = if a % 2 == 0 { 1.0 } else { -1.0 };
    let mut value_residual: f64 = 0.0;
    let mut derivative_residual: f64 = 0.0;
    for (ci, two_mp) in two_j.projections().enumerate() {
        let ci_neg = two_j.index_of(-two_mp);
        let sign_mp = if two_mp.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let s = sign_a * sign_mp;
        value_residual = value_residual.max((d[(ri, ci)].re - s * d[(ri, ci_neg)].re).abs());
        derivative_residual =
            derivative_residual.max((dd[(ri, ci)].re + s * dd[(ri, ci_neg)].re).abs());
    }
    Ok((value_residual, derivative_residual))
}

/// Max |d^J_{MM'}(π)| off the anti-diagonal; the matrix at θ = π must be
/// anti-diagonal because only χ = J − M survives the cosine powers.
pub fn pi_sparsity(two_j: HalfInt) -> f64 {
    check_two_j(two_j);
    let d = little_d(two_j, std::f64::consts::PI);
    let n = d.rows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            if j != n - 1 - i {
                worst = worst.max(d[(i, j)].norm());
            }
        }
    }
    worst
}
