//! From ℓ1 extrema to braid matrices: the θ → φ constraint, the
//! (A, B) = (d^J(θ), D^J(θ, φ)) pairs, and their conjugation onto the
//! canonical type-I / type-II forms for J = 1/2, 1, 3/2.
//!
//! The braid relation D(θ,φ₁)D(θ,φ₂)D(θ,φ₁) = D(θ,φ₂)D(θ,φ₁)D(θ,φ₂)
//! constrains cos φ = cos θ/(1 − cos θ) with φ = φ₂ − φ₁; the two solutions
//! singled out by the ℓ1-norm extrema are {θ = −π/2, φ = π/2} (type I,
//! maximum) and {θ = π, φ = 2π/3} (type II, minimum).

use crate::cxmat::{c64, phase, CMatrix, I};
use crate::tl_braid::BraidPair;
use crate::wigner::{big_d, little_d, HalfInt, WignerSpec};
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BrmError {
    #[error("no braid solution: |cos θ/(1−cos θ)| = {0} > 1")]
    NoBraidSolution(f64),
    #[error("θ = 0 is degenerate (1 − cos θ vanishes)")]
    DegenerateTheta,
    #[error("conjugator is not unitary (residual {0})")]
    NonUnitaryConjugator(f64),
    #[error("canonical forms exist only for 2J in {{1, 2, 3}}, got {0}")]
    UnsupportedSpin(i32),
    #[error("composition pole: 1 + u1·u3 vanishes")]
    CompositionPole,
}

/// Canonical braid-matrix type with its extremal angles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BrmType {
    pub tag: BrmTag,
    pub theta_star: f64,
    pub phi_star: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BrmTag {
    TypeI,
    TypeII,
}

impl BrmType {
    /// ℓ1 maximum: θ* = −π/2, φ* = π/2.
    pub fn type_i() -> Self {
        Self {
            tag: BrmTag::TypeI,
            theta_star: -FRAC_PI_2,
            phi_star: FRAC_PI_2,
        }
    }

    /// ℓ1 minimum: θ* = π, φ* = 2π/3.
    pub fn type_ii() -> Self {
        Self {
            tag: BrmTag::TypeII,
            theta_star: PI,
            phi_star: 2.0 * PI / 3.0,
        }
    }

    /// Residual of cos φ* = cos θ*/(1 − cos θ*).
    pub fn constraint_residual(&self) -> f64 {
        (self.phi_star.cos() - self.theta_star.cos() / (1.0 - self.theta_star.cos())).abs()
    }
}

/// Solve cos φ = cos θ/(1 − cos θ) for φ ∈ [0, π]; the caller picks the
/// sign branch. Requires cos θ ≤ 1/2 (|θ| ≥ π/3) and θ ≠ 0.
pub fn phi_from_theta(theta: f64) -> Result<f64, BrmError> {
    let c = theta.cos();
    if (1.0 - c).abs() < 1e-12 {
        return Err(BrmError::DegenerateTheta);
    }
    let ratio = c / (1.0 - c);
    if ratio.abs() > 1.0 + 1e-14 {
        return Err(BrmError::NoBraidSolution(ratio.abs()));
    }
    Ok(ratio.clamp(-1.0, 1.0).acos())
}

/// Sign branch for φ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiSign {
    Plus,
    Minus,
}

impl PhiSign {
    fn value(self) -> f64 {
        match self {
            PhiSign::Plus => 1.0,
            PhiSign::Minus => -1.0,
        }
    }
}

/// A = d^J(θ), B = D^J(θ, ±φ(θ)) on the (2J+1)-dim space.
pub fn brm_pair(two_j: HalfInt, theta: f64, phi_sign: PhiSign) -> Result<BraidPair, BrmError> {
    let phi = phi_from_theta(theta)? * phi_sign.value();
    let a = little_d(two_j, theta);
    let b = big_d(WignerSpec { two_j, theta, phi });
    Ok(BraidPair::new(a, b))
}

/// Which side the conjugator multiplies from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjugation {
    /// x ↦ u·x·u†
    UXUdag,
    /// x ↦ u†·x·u
    UdagXU,
}

/// Conjugate both members of a pair by the same unitary; the braid residual
/// is invariant.
pub fn conjugate_pair(
    p: &BraidPair,
    u: &CMatrix,
    convention: Conjugation,
) -> Result<BraidPair, BrmError> {
    let ur = u.unitarity_residual();
    if ur > 1e-12 {
        return Err(BrmError::NonUnitaryConjugator(ur));
    }
    let conj = |x: &CMatrix| match convention {
        Conjugation::UXUdag => &(u * x) * &u.dagger(),
        Conjugation::UdagXU => &(&u.dagger() * x) * u,
    };
    Ok(BraidPair::new(conj(&p.a), conj(&p.b)))
}

/// Fully derived braid pair with its conjugated canonical form and the
/// distance to the canonical matrices.
#[derive(Debug, Clone, Serialize)]
pub struct DerivedBrm {
    pub brm_type: BrmType,
    pub two_j: i32,
    pub theta_star: f64,
    pub phi_star: f64,
    pub a: CMatrix,
    pub b: CMatrix,
    pub conjugator: CMatrix,
    pub a_tilde: CMatrix,
    pub b_tilde: CMatrix,
    pub braid_residual: f64,
    pub paper_match_residual: f64,
    pub overall_phase: [f64; 2],
}

/// The 2×2 conjugator V = (1/√2)[[1, i], [i, 1]].
pub fn conjugator_v() -> CMatrix {
    let s = 1.0 / 2.0_f64.sqrt();
    CMatrix::from_rows(&[
        vec![c64(s, 0.0), c64(0.0, s)],
        vec![c64(0.0, s), c64(s, 0.0)],
    ])
}

/// The 3×3 conjugator used for J = 1.
pub fn conjugator_t() -> CMatrix {
    let s = 1.0 / 2.0_f64.sqrt();
    CMatrix::from_rows(&[
        vec![c64(0.5, 0.0), c64(s, 0.0), c64(0.5, 0.0)],
        vec![c64(0.0, s), c64(0.0, 0.0), c64(0.0, -s)],
        vec![c64(-0.5, 0.0), c64(s, 0.0), c64(-0.5, 0.0)],
    ])
}

/// The 4×4 conjugator used for J = 3/2.
pub fn conjugator_u() -> CMatrix {
    let a = 1.0 / (2.0 * 2.0_f64.sqrt());
    let b = 6.0_f64.sqrt() / 4.0;
    CMatrix::from_rows(&[
        vec![c64(0.0, a), c64(0.0, b), c64(0.0, -b), c64(0.0, -a)],
        vec![c64(-b, 0.0), c64(a, 0.0), c64(a, 0.0), c64(-b, 0.0)],
        vec![c64(0.0, -b), c64(0.0, a), c64(0.0, -a), c64(0.0, b)],
        vec![c64(a, 0.0), c64(b, 0.0), c64(b, 0.0), c64(a, 0.0)],
    ])
}

/// Printed canonical pair (Ã, B̃) for the given spin and type.
fn canonical_target(two_j: i32, tag: BrmTag) -> (CMatrix, CMatrix) {
    let s2 = 2.0_f64.sqrt();
    let s3 = 3.0_f64.sqrt();
    let s6 = 6.0_f64.sqrt();
    match (two_j, tag) {
        (1, BrmTag::TypeI) => (
            CMatrix::diag(&[phase(-FRAC_PI_4), phase(-FRAC_PI_4) * I]),
            CMatrix::from_rows(&[
                vec![c64(1.0 / s2, 0.0), c64(0.0, -1.0 / s2)],
                vec![c64(0.0, -1.0 / s2), c64(1.0 / s2, 0.0)],
            ]),
        ),
        (1, BrmTag::TypeII) => (
            CMatrix::diag(&[I, -I]),
            CMatrix::from_rows(&[
                vec![c64(0.0, -0.5), c64(0.0, 0.5 * s3)],
                vec![c64(0.0, 0.5 * s3), c64(0.0, 0.5)],
            ]),
        ),
        (2, BrmTag::TypeI) => (
            CMatrix::diag(&[-I, c64(1.0, 0.0), I]),
            CMatrix::from_real_rows(&[
                vec![0.5, 1.0 / s2, 0.5],
                vec![-1.0 / s2, 0.0, 1.0 / s2],
                vec![0.5, -1.0 / s2, 0.5],
            ]),
        ),
        (2, BrmTag::TypeII) => (
            CMatrix::diag(&[c64(-1.0, 0.0), c64(1.0, 0.0), c64(-1.0, 0.0)]),
            CMatrix::from_rows(&[
                vec![c64(-0.25, 0.0), c64(0.0, s6 / 4.0), c64(0.75, 0.0)],
                vec![c64(0.0, -s6 / 4.0), c64(-0.5, 0.0), c64(0.0, -s6 / 4.0)],
                vec![c64(0.75, 0.0), c64(0.0, s6 / 4.0), c64(-0.25, 0.0)],
            ]),
        ),
        (3, BrmTag::TypeI) => (
            CMatrix::diag(&[
                -phase(FRAC_PI_4),
                phase(FRAC_PI_4),
                phase(-FRAC_PI_4),
                -phase(-FRAC_PI_4),
            ]),
            CMatrix::from_real_rows(&[
                vec![1.0 / (2.0 * s2), s6 / 4.0, -s6 / 4.0, -1.0 / (2.0 * s2)],
                vec![s6 / 4.0, -1.0 / (2.0 * s2), 1.0 / (2.0 * s2), -s6 / 4.0],
                vec![s6 / 4.0, -1.0 / (2.0 * s2), -1.0 / (2.0 * s2), s6 / 4.0],
                vec![1.0 / (2.0 * s2), s6 / 4.0, s6 / 4.0, 1.0 / (2.0 * s2)],
            ]),
        ),
        (3, BrmTag::TypeII) => (
            CMatrix::diag(&[I, I, -I, -I]),
            CMatrix::from_rows(&[
                vec![
                    c64(0.0, -0.125),
                    c64(0.0, 3.0 * s3 / 8.0),
                    c64(0.375, 0.0),
                    c64(-3.0 * s3 / 8.0, 0.0),
                ],
                vec![
                    c64(0.0, 3.0 * s3 / 8.0),
                    c64(0.0, 0.625),
                    c64(-s3 / 8.0, 0.0),
                    c64(0.375, 0.0),
                ],
                vec![
                    c64(-0.375, 0.0),
                    c64(s3 / 8.0, 0.0),
                    c64(0.0, -0.625),
                    c64(0.0, -3.0 * s3 / 8.0),
                ],
                vec![
                    c64(3.0 * s3 / 8.0, 0.0),
                    c64(-0.375, 0.0),
                    c64(0.0, -3.0 * s3 / 8.0),
                    c64(0.0, 0.125),
                ],
            ]),
        ),
        _ => unreachable!("spin validated by caller"),
    }
}

/// Run the whole pipeline for 2J ∈ {1, 2, 3}: extremal angles, the
/// (A, B) pair, the stored conjugator, and the entrywise distance to the
/// canonical target matrices after dividing out one fitted unit phase.
///
/// For 2J = 1 the angles are (−π/2, π/2) / (π, 2π/3); the J = 1 and 3/2
/// derivations use θ* = +π/2 for type I.
pub fn canonical_brm(two_j: HalfInt, brm_type: BrmType) -> Result<DerivedBrm, BrmError> {
    let tj = two_j.twice();
    if !(1..=3).contains(&tj) {
        return Err(BrmError::UnsupportedSpin(tj));
    }
    let theta_star = match brm_type.tag {
        BrmTag::TypeI => {
            if tj == 1 {
                -FRAC_PI_2
            } else {
                FRAC_PI_2
            }
        }
        BrmTag::TypeII => PI,
    };
    let phi_star = brm_type.phi_star;
    let a = little_d(two_j, theta_star);
    let b = big_d(WignerSpec {
        two_j,
        theta: theta_star,
        phi: phi_star,
    });
    let pair = BraidPair::new(a.clone(), b.clone());

    let (conjugator, convention) = match tj {
        1 => (conjugator_v(), Conjugation::UXUdag),
        2 => (conjugator_t(), Conjugation::UdagXU),
        _ => (conjugator_u(), Conjugation::UdagXU),
    };
    let tilde = conjugate_pair(&pair, &conjugator, convention)?;

    let (target_a, target_b) = canonical_target(tj, brm_type.tag);
    let (i0, j0) = target_a.argmax_abs();
    let overall_phase = tilde.a[(i0, j0)] / target_a[(i0, j0)];
    let ra = tilde
        .a
        .residual(&target_a.scale(overall_phase))
        .expect("shape");
    let rb = tilde
        .b
        .residual(&target_b.scale(overall_phase))
        .expect("shape");

    Ok(DerivedBrm {
        brm_type,
        two_j: tj,
        theta_star,
        phi_star,
        a,
        b,
        conjugator,
        a_tilde: tilde.a,
        b_tilde: tilde.b,
        braid_residual: pair.braid_residual.max(tilde.braid_residual),
        paper_match_residual: ra.max(rb),
        overall_phase: [overall_phase.re, overall_phase.im],
    })
}

/// A'(θ) = diag(e^{iθ/2}, e^{−iθ/2}), the diagonalized d^{1/2}(θ).
pub fn a_prime_2d(theta: f64) -> CMatrix {
    CMatrix::diag(&[phase(theta / 2.0), phase(-theta / 2.0)])
}

/// B'(θ, φ) = V·D^{1/2}(θ,φ)·V†.
pub fn b_prime_2d(theta: f64, phi: f64) -> CMatrix {
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let diag_p = c64(c, s * phi.cos());
    let diag_m = c64(c, -s * phi.cos());
    let off = c64(0.0, s * phi.sin());
    CMatrix::from_rows(&[vec![diag_p, off], vec![off, diag_m]])
}

/// Residual of the spectral YBE at J = 1/2 in the diagonal basis:
/// A'(θ₁)B'(θ₂,φ)A'(θ₃) = B'(θ₃,φ)A'(θ₂)B'(θ₁,φ) with u = tan(θ/2)
/// composed by the Lorentz rule (type I, φ = π/2) or the Galileo rule
/// (type II, φ = 2π/3).
pub fn ybe_2d_check(brm_type: BrmType, theta1: f64, theta3: f64) -> Result<f64, BrmError> {
    let (u1, u3) = ((theta1 / 2.0).tan(), (theta3 / 2.0).tan());
    if !u1.is_finite() || !u3.is_finite() {
        return Err(BrmError::CompositionPole);
    }
    let u2 = match brm_type.tag {
        BrmTag::TypeI => {
            let den = 1.0 + u1 * u3;
            if den.abs() < 1e-14 {
                return Err(BrmError::CompositionPole);
            }
            (u1 + u3) / den
        }
        BrmTag::TypeII => u1 + u3,
    };
    let theta2 = 2.0 * u2.atan();
    let phi = brm_type.phi_star;
    let lhs = &(&a_prime_2d(theta1) * &b_prime_2d(theta2, phi)) * &a_prime_2d(theta3);
    let rhs = &(&b_prime_2d(theta3, phi) * &a_prime_2d(theta2)) * &b_prime_2d(theta1, phi);
    Ok(lhs.residual(&rhs).expect("shape"))
}
