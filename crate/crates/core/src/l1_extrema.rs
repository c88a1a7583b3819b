//! Row-wise ℓ1-norm of d^J and its extrema over θ ∈ [−π, π].
//!
//! For a fixed row M the function f(θ) = Σ_{M'} |d^J_{MM'}(θ)| is even,
//! 2π-periodic, piecewise smooth with kinks at the zeros of the entries,
//! and bounded by 1 ≤ f ≤ √(2J+1). Extrema are located on a uniform grid
//! by neighbour comparison and refined by ternary search, which handles
//! both smooth and kink extrema without derivatives. The endpoints ±π are
//! treated through the periodic continuation, so they show up as interior
//! extremum candidates.

use crate::report::CheckResult;
use crate::wigner::{little_d_row, HalfInt};
use thiserror::Error;

/// Grid size used by the canonical checks; resolves every kink of the
/// |trig|-sums for 2J ≤ 20 with margin.
pub const DEFAULT_SAMPLES: usize = 10_001;

/// Extrema closer than this in θ are merged.
const MERGE_TOL: f64 = 1e-7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum L1Error {
    #[error("n_samples must be odd and at least 101, got {0}")]
    BadSampleCount(usize),
    #[error("row 2M = {two_m} invalid for 2J = {two_j} (range or parity)")]
    BadRow { two_m: i32, two_j: i32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumKind {
    Max,
    Min,
}

#[derive(Debug, Clone, Copy)]
pub struct Extremum {
    pub theta: f64,
    pub value: f64,
    pub kind: ExtremumKind,
}

/// Sampled ℓ1 profile of one row with its classified extrema.
#[derive(Debug, Clone)]
pub struct L1Profile {
    pub two_j: HalfInt,
    pub row_m: HalfInt,
    pub thetas: Vec<f64>,
    pub values: Vec<f64>,
    pub extrema: Vec<Extremum>,
}

/// f(θ) = Σ_{M'} |d^J_{M M'}(θ)| for the row M.
pub fn l1_row_norm(two_j: HalfInt, two_m: i32, theta: f64) -> f64 {
    little_d_row(two_j, two_m, theta)
        .iter()
        .map(|v| v.abs())
        .sum()
}

fn wrap_to_pi(theta: f64) -> f64 {
    use std::f64::consts::PI;
    let mut t = (theta + PI).rem_euclid(2.0 * PI) - PI;
    if t < -PI {
        t += 2.0 * PI;
    }
    t
}

/// Ternary search for the extremum of g on [lo, hi]; works for strictly
/// unimodal pieces, including V-shaped kinks.
fn ternary_refine(g: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64, maximize: bool) -> f64 {
    while hi - lo > 1e-12 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        let better = if maximize {
            g(m1) > g(m2)
        } else {
            g(m1) < g(m2)
        };
        if better {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    0.5 * (lo + hi)
}

/// Sample f on a uniform grid over [−π, π] (inclusive; n odd so that 0 and
/// ±π are sample points), locate all extrema and refine them to 1e-9 in θ.
pub fn l1_profile(two_j: HalfInt, row_m: HalfInt, n_samples: usize) -> Result<L1Profile, L1Error> {
    use std::f64::consts::PI;
    if n_samples < 101 || n_samples.is_multiple_of(2) {
        return Err(L1Error::BadSampleCount(n_samples));
    }
    let two_m = row_m.twice();
    if two_m.abs() > two_j.twice() || (two_j.twice() - two_m).rem_euclid(2) != 0 {
        return Err(L1Error::BadRow {
            two_m,
            two_j: two_j.twice(),
        });
    }

    let n = n_samples;
    let thetas: Vec<f64> = (0..n)
        .map(|i| -PI + 2.0 * PI * i as f64 / (n - 1) as f64)
        .collect();
    let values: Vec<f64> = thetas
        .iter()
        .map(|&t| l1_row_norm(two_j, two_m, t))
        .collect();
    let f = |t: f64| l1_row_norm(two_j, two_m, wrap_to_pi(t));

    // Periodic neighbours: indices 0 and n-1 are the same point θ = ∓π,
    // so the sample left of 0 is values[n-2] and right of n-1 is values[1].
    let left_of = |i: usize| if i == 0 { values[n - 2] } else { values[i - 1] };
    let right_of = |i: usize| if i == n - 1 { values[1] } else { values[i + 1] };
    let step = thetas[1] - thetas[0];

    let mut extrema: Vec<Extremum> = Vec::new();
    for i in 0..n {
        let (l, v, r) = (left_of(i), values[i], right_of(i));
        let kind = if v > l && v > r {
            ExtremumKind::Max
        } else if v < l && v < r {
            ExtremumKind::Min
        } else {
            continue;
        };
        // f is even and 2π-periodic, so an extremum flagged at ±π can only
        // sit exactly there; interior candidates get refined.
        let theta = if i == 0 {
            -PI
        } else if i == n - 1 {
            PI
        } else {
            ternary_refine(
                &f,
                thetas[i] - step,
                thetas[i] + step,
                kind == ExtremumKind::Max,
            )
        };
        extrema.push(Extremum {
            theta,
            value: f(theta),
            kind,
        });
    }

    extrema.sort_by(|a, b| a.theta.total_cmp(&b.theta));
    let mut merged: Vec<Extremum> = Vec::new();
    for e in extrema {
        match merged.last_mut() {
            Some(last) if (e.theta - last.theta).abs() < MERGE_TOL && e.kind == last.kind => {
                let better = match e.kind {
                    ExtremumKind::Max => e.value > last.value,
                    ExtremumKind::Min => e.value < last.value,
                };
                if better {
                    *last = e;
                }
            }
            _ => merged.push(e),
        }
    }

    Ok(L1Profile {
        two_j,
        row_m,
        thetas,
        values,
        extrema: merged,
    })
}

impl L1Profile {
    /// The extremum nearest to θ, if any lies within `tol`.
    pub fn extremum_near(&self, theta: f64, tol: f64) -> Option<&Extremum> {
        self.extrema
            .iter()
            .min_by(|a, b| (a.theta - theta).abs().total_cmp(&(b.theta - theta).abs()))
            .filter(|e| (e.theta - theta).abs() <= tol)
    }
}

/// The five θ values at which every row's ℓ1-norm is stationary.
pub const CANONICAL_THETAS: [f64; 5] = [
    -std::f64::consts::PI,
    -std::f64::consts::FRAC_PI_2,
    0.0,
    std::f64::consts::FRAC_PI_2,
    std::f64::consts::PI,
];

/// For every row M of spin J, check that each canonical θ lies within 1e-6
/// of a located extremum. The Max/Min classification at ±π/2 and ±π is
/// reported in the detail string (it is exploratory for 2J ≥ 4).
pub fn canonical_extrema_check(two_j: HalfInt) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for two_m in two_j.projections() {
        let profile = l1_profile(two_j, HalfInt::new(two_m), DEFAULT_SAMPLES)
            .expect("valid row and default grid");
        let classify = |theta: f64| -> String {
            match profile.extremum_near(theta, 1e-6) {
                Some(e) => format!("{:?}", e.kind),
                None => "absent".to_string(),
            }
        };
        let detail = format!(
            "row 2M={two_m}: pi/2 -> {}, -pi/2 -> {}, pi -> {}, -pi -> {}",
            classify(std::f64::consts::FRAC_PI_2),
            classify(-std::f64::consts::FRAC_PI_2),
            classify(std::f64::consts::PI),
            classify(-std::f64::consts::PI),
        );
        for (k, &theta) in CANONICAL_THETAS.iter().enumerate() {
            let distance = profile
                .extrema
                .iter()
                .map(|e| (e.theta - theta).abs())
                .fold(f64::INFINITY, f64::min);
            out.push(CheckResult::new(
                format!("l1/canonical/2j={}/2m={}/point{}", two_j.twice(), two_m, k),
                distance,
                1e-6,
                detail.clone(),
            ));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Signature {
    /// Every row has a maximum at ±π/2 (half-integer J behaviour).
    SpinorLike,
    /// Some row turns ±π/2 into a minimum (integer J behaviour).
    VectorLike,
}

/// Classify the spin by how its rows treat θ = ±π/2.
pub fn spinor_vector_signature(two_j: HalfInt) -> Signature {
    for two_m in two_j.projections() {
        let profile = l1_profile(two_j, HalfInt::new(two_m), DEFAULT_SAMPLES)
            .expect("valid row and default grid");
        for theta in [std::f64::consts::FRAC_PI_2, -std::f64::consts::FRAC_PI_2] {
            if let Some(e) = profile.extremum_near(theta, 1e-6) {
                if e.kind == ExtremumKind::Min {
                    return Signature::VectorLike;
                }
            }
        }
    }
    Signature::SpinorLike
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

    fn assert_extremum(p: &L1Profile, theta: f64, value: f64, kind: ExtremumKind) {
        let e = p
            .extremum_near(theta, 1e-6)
            .unwrap_or_else(|| panic!("no extremum near {theta}"));
        assert_eq!(e.kind, kind, "kind at {theta}");
        assert!(
            (e.value - value).abs() < 1e-9,
            "value at {theta}: {} vs {value}",
            e.value
        );
    }

    #[test]
    fn spin_half_profile() {
        let p = l1_profile(HalfInt::new(1), HalfInt::new(1), 1001).unwrap();
        assert_extremum(&p, -PI, 1.0, ExtremumKind::Min);
        assert_extremum(&p, -FRAC_PI_2, SQRT_2, ExtremumKind::Max);
        assert_extremum(&p, 0.0, 1.0, ExtremumKind::Min);
        assert_extremum(&p, FRAC_PI_2, SQRT_2, ExtremumKind::Max);
        assert_extremum(&p, PI, 1.0, ExtremumKind::Min);
        assert_eq!(p.extrema.len(), 5);
    }

    #[test]
    fn spin_one_outer_rows() {
        // f = 1 + |sinθ|/√2: max 1 + 1/√2 at ±π/2, min 1 at {0, ±π}
        for two_m in [2, -2] {
            let p = l1_profile(HalfInt::new(2), HalfInt::new(two_m), 1001).unwrap();
            assert_extremum(&p, FRAC_PI_2, 1.0 + 1.0 / SQRT_2, ExtremumKind::Max);
            assert_extremum(&p, -FRAC_PI_2, 1.0 + 1.0 / SQRT_2, ExtremumKind::Max);
            assert_extremum(&p, 0.0, 1.0, ExtremumKind::Min);
            assert_extremum(&p, PI, 1.0, ExtremumKind::Min);
        }
    }

    #[test]
    fn spin_one_middle_row() {
        // f = √2|sinθ| + |cosθ|: ±π/2 are local minima at √2; the global
        // maximum √3 sits at ±arctan√2 and ±(π − arctan√2) — the calculus
        // oracle for max(√2 s + c) on the first quadrant.
        let p = l1_profile(HalfInt::new(2), HalfInt::new(0), 1001).unwrap();
        assert_extremum(&p, FRAC_PI_2, SQRT_2, ExtremumKind::Min);
        assert_extremum(&p, -FRAC_PI_2, SQRT_2, ExtremumKind::Min);
        let tstar = SQRT_2.atan();
        let sqrt3 = 3.0_f64.sqrt();
        for theta in [tstar, -tstar, PI - tstar, -(PI - tstar)] {
            assert_extremum(&p, theta, sqrt3, ExtremumKind::Max);
        }
        assert_extremum(&p, 0.0, 1.0, ExtremumKind::Min);
        assert_extremum(&p, PI, 1.0, ExtremumKind::Min);
    }

    #[test]
    fn input_validation() {
        assert!(matches!(
            l1_profile(HalfInt::new(2), HalfInt::new(0), 100),
            Err(L1Error::BadSampleCount(100))
        ));
        assert!(matches!(
            l1_profile(HalfInt::new(2), HalfInt::new(1), 101),
            Err(L1Error::BadRow { .. })
        ));
        assert!(matches!(
            l1_profile(HalfInt::new(2), HalfInt::new(4), 101),
            Err(L1Error::BadRow { .. })
        ));
    }

    #[test]
    fn stored_values_recompute() {
        let p = l1_profile(HalfInt::new(3), HalfInt::new(1), 101).unwrap();
        for (t, v) in p.thetas.iter().zip(&p.values) {
            assert!((l1_row_norm(p.two_j, p.row_m.twice(), *t) - v).abs() < 1e-14);
        }
    }

    #[test]
    fn mirror_symmetry_and_bounds() {
        for (two_j, two_m) in [(1, 1), (2, 0), (3, 1), (5, 3)] {
            let p = l1_profile(HalfInt::new(two_j), HalfInt::new(two_m), 501).unwrap();
            let bound = ((two_j + 1) as f64).sqrt();
            for v in &p.values {
                assert!(*v >= 1.0 - 1e-12 && *v <= bound + 1e-12);
            }
            for e in &p.extrema {
                let mirrored = p
                    .extrema
                    .iter()
                    .min_by(|a, b| {
                        (a.theta + e.theta)
                            .abs()
                            .total_cmp(&(b.theta + e.theta).abs())
                    })
                    .unwrap();
                assert!(
                    (mirrored.theta + e.theta).abs() < 1e-6,
                    "no mirror for {}",
                    e.theta
                );
                assert!((mirrored.value - e.value).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn refinement_is_grid_stable() {
        let coarse = l1_profile(HalfInt::new(2), HalfInt::new(0), 1001).unwrap();
        let fine = l1_profile(HalfInt::new(2), HalfInt::new(0), 2001).unwrap();
        assert_eq!(coarse.extrema.len(), fine.extrema.len());
        for (a, b) in coarse.extrema.iter().zip(&fine.extrema) {
            assert!((a.theta - b.theta).abs() < 1e-6);
        }
    }

    #[test]
    fn canonical_points_present_for_small_spins() {
        for two_j in [1, 2, 3] {
            let checks = canonical_extrema_check(HalfInt::new(two_j));
            for c in &checks {
                assert!(c.pass, "{}: residual {}", c.name, c.residual);
            }
        }
    }

    #[test]
    fn spin_three_half_outer_rows_classification() {
        // rows M = ±3/2: maxima at ±π/2, minima at ±π
        for two_m in [3, -3] {
            let p = l1_profile(HalfInt::new(3), HalfInt::new(two_m), 1001).unwrap();
            for theta in [FRAC_PI_2, -FRAC_PI_2] {
                assert_eq!(
                    p.extremum_near(theta, 1e-6).unwrap().kind,
                    ExtremumKind::Max
                );
            }
            for theta in [PI, -PI] {
                let e = p.extremum_near(theta, 1e-6).unwrap();
                assert_eq!(e.kind, ExtremumKind::Min);
                assert!((e.value - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn signatures() {
        assert_eq!(
            spinor_vector_signature(HalfInt::new(1)),
            Signature::SpinorLike
        );
        assert_eq!(
            spinor_vector_signature(HalfInt::new(2)),
            Signature::VectorLike
        );
        assert_eq!(
            spinor_vector_signature(HalfInt::new(3)),
            Signature::SpinorLike
        );
    }
}
