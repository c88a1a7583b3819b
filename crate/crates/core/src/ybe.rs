//! Spectral-parameter R̆-matrix families and Yang-Baxter residual checks.
//!
//! Two 4×4 families (the rotation-like type I and the rational
//! R̆ = 1 + uP type II) and the 2×2 families obtained by acting on the
//! topological basis. The middle spectral parameter is fixed by a
//! composition rule: Lorentz (u₁+u₃)/(1+u₁u₃), Galileo u₁+u₃, or
//! multiplicative u₁·u₃. The overall scalar ρ(u) is set to 1 everywhere —
//! both sides of the YBE carry the same product ρ(u₁)ρ(u₂)ρ(u₃).
//!
//! For the 4×4 type-I family the Lorentz rule acts on u = tan θ: the braid
//! points of the family sit at θ = ±π/4 (where R̆ ∝ b_I) and tan(±π/4) = ±1
//! are exactly the Lorentz fixed points.

use crate::cxmat::{c64, phase, CMatrix, C64, I};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum YbeError {
    #[error("singular point: {denominator} vanishes at u = {at}")]
    Singularity { denominator: &'static str, at: C64 },
    #[error("composition pole: 1 + u1·u3 vanishes")]
    CompositionPole,
    #[error("reparameterization ratio vanishes at u = {0}")]
    ZeroRatio(C64),
    #[error("spectral parameter is not finite")]
    NonFinite,
}

/// How the middle spectral parameter u₂ is produced from u₁ and u₃.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositionRule {
    /// u₂ = (u₁+u₃)/(1+u₁u₃), the velocity-addition rule with c = 1.
    Lorentz,
    /// u₂ = u₁ + u₃.
    Galileo,
    /// x₂ = x₁·x₃.
    Multiplicative,
}

impl CompositionRule {
    pub fn compose(self, u1: C64, u3: C64) -> Result<C64, YbeError> {
        match self {
            CompositionRule::Lorentz => {
                let den = c64(1.0, 0.0) + u1 * u3;
                if den.norm() < 1e-14 {
                    return Err(YbeError::CompositionPole);
                }
                Ok((u1 + u3) / den)
            }
            CompositionRule::Galileo => Ok(u1 + u3),
            CompositionRule::Multiplicative => Ok(u1 * u3),
        }
    }
}

/// Which matrix family a [`SpectralFamily`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilyKind {
    /// 4×4 R̆_I(θ, α) = cosθ·1 + sinθ·K(α); the parameter is θ.
    R4TypeI { alpha: f64 },
    /// 4×4 R̆ = 1 + u·P(η).
    R4TypeII { eta: C64 },
    /// 2×2 𝒜_I(u) = diag(1−u²+2iεu, 1−u²−2iεu)/(1+u²).
    ///
    /// This is the diagonal family with ratio (1−u²+2iεu)/(1−u²−2iεu),
    /// normalized per matrix so that the free scalar of each member is
    /// fixed the same way (unitary for real u). Without the normalization
    /// the two members carry mismatched scalars and no composition rule
    /// closes the YBE.
    A2TypeI { epsilon: f64 },
    /// 2×2 ℬ_I(u) = [[1−u², 2iεu], [2iεu, 1−u²]]/(1+u²), same normalization.
    B2TypeI { epsilon: f64 },
    /// 2×2 𝒜(u), diagonal with ratio (γ+u)/(γ−u).
    A2TypeII { gamma: C64 },
    /// 2×2 ℬ(u) at loop value d = 2.
    B2TypeII { gamma: C64, epsilon: f64 },
}

/// A parameterized map u ↦ R̆(u) plus its composition rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralFamily {
    pub kind: FamilyKind,
    pub rule: CompositionRule,
}

impl SpectralFamily {
    pub fn r4_type_i(alpha: f64) -> Self {
        Self {
            kind: FamilyKind::R4TypeI { alpha },
            rule: CompositionRule::Lorentz,
        }
    }

    pub fn r4_type_ii(eta: C64) -> Self {
        Self {
            kind: FamilyKind::R4TypeII { eta },
            rule: CompositionRule::Galileo,
        }
    }

    pub fn a2_type_i(epsilon: f64) -> Self {
        Self {
            kind: FamilyKind::A2TypeI { epsilon },
            rule: CompositionRule::Lorentz,
        }
    }

    pub fn b2_type_i(epsilon: f64) -> Self {
        Self {
            kind: FamilyKind::B2TypeI { epsilon },
            rule: CompositionRule::Lorentz,
        }
    }

    pub fn a2_type_ii(gamma: C64) -> Self {
        Self {
            kind: FamilyKind::A2TypeII { gamma },
            rule: CompositionRule::Galileo,
        }
    }

    pub fn b2_type_ii(gamma: C64, epsilon: f64) -> Self {
        Self {
            kind: FamilyKind::B2TypeII { gamma, epsilon },
            rule: CompositionRule::Galileo,
        }
    }

    pub fn dim(&self) -> usize {
        match self.kind {
            FamilyKind::R4TypeI { .. } | FamilyKind::R4TypeII { .. } => 4,
            _ => 2,
        }
    }

    /// The 2×2 partner for the two-dimensional YBE (𝒜 ↔ ℬ).
    fn partner(&self) -> Option<SpectralFamily> {
        let kind = match self.kind {
            FamilyKind::A2TypeI { epsilon } => FamilyKind::B2TypeI { epsilon },
            FamilyKind::B2TypeI { epsilon } => FamilyKind::A2TypeI { epsilon },
            FamilyKind::A2TypeII { gamma } => FamilyKind::B2TypeII {
                gamma,
                epsilon: 1.0,
            },
            FamilyKind::B2TypeII { gamma, .. } => FamilyKind::A2TypeII { gamma },
            _ => return None,
        };
        Some(SpectralFamily {
            kind,
            rule: self.rule,
        })
    }
}

/// K(α): the θ-derivative of the type-I family at θ = 0; K² = −1.
fn k_matrix(alpha: f64) -> CMatrix {
    let ea = phase(alpha);
    let zero = c64(0.0, 0.0);
    let one = c64(1.0, 0.0);
    CMatrix::from_rows(&[
        vec![zero, zero, zero, ea],
        vec![zero, zero, one, zero],
        vec![zero, -one, zero, zero],
        vec![-ea.inv(), zero, zero, zero],
    ])
}

/// P(η) with P² = 1; at η = −1 it is the 4×4 permutation. Same entry
/// pattern as b_II(q=1, η).
fn p_matrix(eta: C64) -> CMatrix {
    let zero = c64(0.0, 0.0);
    let one = c64(1.0, 0.0);
    CMatrix::from_rows(&[
        vec![one, zero, zero, zero],
        vec![zero, zero, -eta, zero],
        vec![zero, -eta.inv(), zero, zero],
        vec![zero, zero, zero, one],
    ])
}

fn cos_sin(theta: C64) -> (C64, C64) {
    (theta.cos(), theta.sin())
}

/// Evaluate the family at spectral parameter u (θ for the 4×4 type-I form).
pub fn eval_family(fam: &SpectralFamily, u: C64) -> Result<CMatrix, YbeError> {
    if !u.re.is_finite() || !u.im.is_finite() {
        return Err(YbeError::NonFinite);
    }
    match fam.kind {
        FamilyKind::R4TypeI { alpha } => {
            let (c, s) = cos_sin(u);
            Ok(CMatrix::identity(4)
                .scale(c)
                .add(&k_matrix(alpha).scale(s))
                .expect("shape"))
        }
        FamilyKind::R4TypeII { eta } => Ok(CMatrix::identity(4)
            .add(&p_matrix(eta).scale(u))
            .expect("shape")),
        FamilyKind::A2TypeI { epsilon } | FamilyKind::B2TypeI { epsilon } => {
            let two_ieu = I * (2.0 * epsilon) * u;
            let plus = c64(1.0, 0.0) - u * u + two_ieu;
            let minus = c64(1.0, 0.0) - u * u - two_ieu;
            if plus.norm() < 1e-14 {
                return Err(YbeError::Singularity {
                    denominator: "1 - u^2 + 2i*eps*u",
                    at: u,
                });
            }
            if minus.norm() < 1e-14 {
                return Err(YbeError::Singularity {
                    denominator: "1 - u^2 - 2i*eps*u",
                    at: u,
                });
            }
            // plus·minus = (1+u²)², the common normalizer
            let den = c64(1.0, 0.0) + u * u;
            if matches!(fam.kind, FamilyKind::A2TypeI { .. }) {
                Ok(CMatrix::diag(&[plus / den, minus / den]))
            } else {
                let diag = (c64(1.0, 0.0) - u * u) / den;
                let off = two_ieu / den;
                Ok(CMatrix::from_rows(&[vec![diag, off], vec![off, diag]]))
            }
        }
        FamilyKind::A2TypeII { gamma } => {
            let den = gamma - u;
            if den.norm() < 1e-14 {
                return Err(YbeError::Singularity {
                    denominator: "gamma - u",
                    at: u,
                });
            }
            Ok(CMatrix::diag(&[(gamma + u) / den, c64(1.0, 0.0)]))
        }
        FamilyKind::B2TypeII { gamma, epsilon } => {
            let den = gamma - u;
            if den.norm() < 1e-14 {
                return Err(YbeError::Singularity {
                    denominator: "gamma - u",
                    at: u,
                });
            }
            let pref = (den * 2.0).inv();
            let s3u = u * (epsilon * 3.0_f64.sqrt());
            Ok(CMatrix::from_rows(&[
                vec![pref * (gamma * 2.0 - u), pref * s3u],
                vec![pref * s3u, pref * (gamma * 2.0 + u)],
            ]))
        }
    }
}

/// The type-I families compose under the Lorentz rule in w = tan θ. For the
/// 4×4 form the parameter is θ itself, so w = tan θ; for the 2-dim forms
/// the parameter is u = tan(θ/2), so w = 2u/(1−u²). Branch choices in the
/// inverse maps flip the sign of one middle factor on both sides of the
/// YBE, which the cubic relation is insensitive to.
fn compose_parameter(fam: &SpectralFamily, u1: C64, u3: C64) -> Result<C64, YbeError> {
    match fam.kind {
        FamilyKind::R4TypeI { .. } => {
            let t2 = fam.rule.compose(u1.tan(), u3.tan())?;
            Ok(t2.atan())
        }
        FamilyKind::A2TypeI { .. } | FamilyKind::B2TypeI { .. } => {
            let half_tan = |u: C64| -> Result<C64, YbeError> {
                let den = c64(1.0, 0.0) - u * u;
                if den.norm() < 1e-14 {
                    return Err(YbeError::Singularity {
                        denominator: "1 - u^2",
                        at: u,
                    });
                }
                Ok(u * 2.0 / den)
            };
            let w2 = fam.rule.compose(half_tan(u1)?, half_tan(u3)?)?;
            Ok((w2.atan() * 0.5).tan())
        }
        _ => fam.rule.compose(u1, u3),
    }
}

/// Residual of the Yang-Baxter equation at (u₁, u₂(u₁,u₃), u₃).
///
/// 4×4 families check R̆₁₂(u₁)R̆₂₃(u₂)R̆₁₂(u₃) = R̆₂₃(u₃)R̆₁₂(u₂)R̆₂₃(u₁) on
/// the three-site 8-dim space; 2×2 families check
/// 𝒜(u₁)ℬ(u₂)𝒜(u₃) = ℬ(u₃)𝒜(u₂)ℬ(u₁) with the paired partner family.
pub fn ybe_residual(fam: &SpectralFamily, u1: C64, u3: C64) -> Result<f64, YbeError> {
    let u2 = compose_parameter(fam, u1, u3)?;
    if fam.dim() == 4 {
        let i2 = CMatrix::identity(2);
        let r = |u: C64| -> Result<(CMatrix, CMatrix), YbeError> {
            let m = eval_family(fam, u)?;
            Ok((m.kron(&i2), i2.kron(&m)))
        };
        let (r1_a, r2_a) = r(u1)?;
        let (r1_b, r2_b) = r(u2)?;
        let (r1_c, r2_c) = r(u3)?;
        let lhs = &(&r1_a * &r2_b) * &r1_c;
        let rhs = &(&r2_c * &r1_b) * &r2_a;
        Ok(lhs.residual(&rhs).expect("shape"))
    } else {
        let partner = fam.partner().expect("2-dim family has a partner");
        let (a_fam, b_fam) = match fam.kind {
            FamilyKind::A2TypeI { .. } | FamilyKind::A2TypeII { .. } => (*fam, partner),
            _ => (partner, *fam),
        };
        let lhs =
            &(&eval_family(&a_fam, u1)? * &eval_family(&b_fam, u2)?) * &eval_family(&a_fam, u3)?;
        let rhs =
            &(&eval_family(&b_fam, u3)? * &eval_family(&a_fam, u2)?) * &eval_family(&b_fam, u1)?;
        Ok(lhs.residual(&rhs).expect("shape"))
    }
}

/// Max YBE residual over an n×n grid of real (u₁, u₃) in `[lo, hi]²`.
pub fn ybe_grid_scan(fam: &SpectralFamily, lo: f64, hi: f64, n: usize) -> Result<f64, YbeError> {
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let u1 = lo + (hi - lo) * i as f64 / (n - 1) as f64;
            let u3 = lo + (hi - lo) * j as f64 / (n - 1) as f64;
            worst = worst.max(ybe_residual(fam, c64(u1, 0.0), c64(u3, 0.0))?);
        }
    }
    Ok(worst)
}

/// Max residual of the scalar Yang-Baxterization constraint
/// [a(u)b(v) + b(u)a(v) + d·b(v)b(u)]·a(u+v) = [a(v)a(u) − b(u)b(v)]·b(u+v)
/// with a = ρ, b = ρG and G(u) = u/(γ−u), over a deterministic grid of
/// (u, v) pairs (a real k×k grid in [0.1, 0.5]² with k = ⌊√samples⌋, plus
/// the same grid shifted into the complex plane).
pub fn verify_g_constraint(gamma: C64, d: f64, samples: usize) -> Result<f64, YbeError> {
    let k = (samples as f64).sqrt().floor().max(1.0) as usize;
    let mut points: Vec<(C64, C64)> = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let u = 0.1 + 0.4 * i as f64 / k.max(2) as f64;
            let v = 0.1 + 0.4 * j as f64 / k.max(2) as f64;
            points.push((c64(u, 0.0), c64(v, 0.0)));
            points.push((c64(u, 0.07), c64(v, -0.05)));
        }
    }
    let g = |u: C64| -> Result<C64, YbeError> {
        let den = gamma - u;
        if den.norm() < 1e-12 {
            return Err(YbeError::Singularity {
                denominator: "gamma - u",
                at: u,
            });
        }
        Ok(u / den)
    };
    let mut worst: f64 = 0.0;
    for (u, v) in points {
        let (gu, gv, guv) = (g(u)?, g(v)?, g(u + v)?);
        let lhs = (gv + gu + gu * gv * d) * c64(1.0, 0.0);
        let rhs = (c64(1.0, 0.0) - gu * gv) * guv;
        worst = worst.max((lhs - rhs).norm());
    }
    Ok(worst)
}

/// Which 2-dim family a reparameterization targets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReparamFamily {
    /// Cayley ratio (1 + iεβu)/(1 − iεβu) ≡ e^{−iθ}; lands on B'(θ, π/2).
    TypeI { beta: f64, epsilon: f64 },
    /// Ratio (γ+u)/(γ−u) ≡ e^{−iθ}; lands on B'(θ, 2π/3) at loop value 2.
    TypeII { gamma: C64, epsilon: f64 },
}

/// Diagonal D-function form A'(θ) = diag(e^{iθ/2}, e^{−iθ/2}).
pub fn a_prime(theta: C64) -> CMatrix {
    let half = theta * 0.5;
    CMatrix::diag(&[(I * half).exp(), (-I * half).exp()])
}

/// Off-diagonal D-function form B'(θ, φ) in the same diagonal basis.
pub fn b_prime(theta: C64, phi: f64) -> CMatrix {
    let (c, s) = ((theta * 0.5).cos(), (theta * 0.5).sin());
    let diag_p = c + I * s * phi.cos();
    let diag_m = c - I * s * phi.cos();
    let off = I * s * phi.sin();
    CMatrix::from_rows(&[vec![diag_p, off], vec![off, diag_m]])
}

/// Solve the defining ratio for θ (principal log branch) and report how far
/// the reparameterized 2-dim family sits from the D-function closed forms
/// A'(θ), B'(θ, φ) with φ = π/2 (type I) or 2π/3 (type II). The residual
/// allows the θ → −θ ambiguity per matrix and one fitted scalar (the free
/// ρ(u)).
pub fn reparameterize_theta(fam: ReparamFamily, u: C64) -> Result<(C64, f64), YbeError> {
    let (ratio, a_mat, b_mat, phi) = match fam {
        ReparamFamily::TypeI { beta, epsilon } => {
            let t = I * (epsilon * beta) * u;
            let den = c64(1.0, 0.0) - t;
            if den.norm() < 1e-14 {
                return Err(YbeError::Singularity {
                    denominator: "1 - i*eps*beta*u",
                    at: u,
                });
            }
            let ratio = (c64(1.0, 0.0) + t) / den;
            if ratio.norm() < 1e-14 {
                return Err(YbeError::ZeroRatio(u));
            }
            let theta = I * ratio.ln();
            let rho = (I * theta * 0.5).exp();
            let a_mat = CMatrix::diag(&[rho * ratio, rho]);
            let off = rho / den * (-t);
            let diag = rho / den;
            let b_mat = CMatrix::from_rows(&[vec![diag, off], vec![off, diag]]);
            (ratio, a_mat, b_mat, std::f64::consts::FRAC_PI_2)
        }
        ReparamFamily::TypeII { gamma, epsilon } => {
            let den = gamma - u;
            if den.norm() < 1e-14 {
                return Err(YbeError::Singularity {
                    denominator: "gamma - u",
                    at: u,
                });
            }
            let ratio = (gamma + u) / den;
            if ratio.norm() < 1e-14 {
                return Err(YbeError::ZeroRatio(u));
            }
            let theta = I * ratio.ln();
            let rho = (I * theta * 0.5).exp();
            let a_mat = CMatrix::diag(&[rho * ratio, rho]);
            let pref = rho / (den * 2.0);
            let s3u = u * (epsilon * 3.0_f64.sqrt());
            let b_mat = CMatrix::from_rows(&[
                vec![pref * (gamma * 2.0 - u), pref * s3u],
                vec![pref * s3u, pref * (gamma * 2.0 + u)],
            ]);
            (ratio, a_mat, b_mat, 2.0 * std::f64::consts::FRAC_PI_3)
        }
    };
    let theta = I * ratio.ln();
    let fit_residual = |m: &CMatrix, target: &CMatrix| -> f64 {
        let (i, j) = target.argmax_abs();
        if target[(i, j)].norm() < 1e-14 {
            return m.residual(target).expect("shape");
        }
        let c = m[(i, j)] / target[(i, j)];
        m.residual(&target.scale(c)).expect("shape")
    };
    let best = |m: &CMatrix, make: &dyn Fn(C64) -> CMatrix| -> f64 {
        let r1 = fit_residual(m, &make(theta));
        let r2 = fit_residual(m, &make(-theta));
        r1.min(r2)
    };
    let ra = best(&a_mat, &|t| a_prime(t));
    let rb = best(&b_mat, &|t| b_prime(t, phi));
    Ok((theta, ra.max(rb)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn composition_rules() {
        let (a, b) = (c64(0.3, 0.0), c64(0.5, 0.0));
        let lorentz = CompositionRule::Lorentz.compose(a, b).unwrap();
        assert!((lorentz - c64(0.8 / 1.15, 0.0)).norm() < 1e-15);
        assert_eq!(
            CompositionRule::Galileo.compose(a, b).unwrap(),
            c64(0.8, 0.0)
        );
        assert_eq!(
            CompositionRule::Multiplicative.compose(a, b).unwrap(),
            c64(0.15, 0.0)
        );
        assert!(matches!(
            CompositionRule::Lorentz.compose(c64(2.0, 0.0), c64(-0.5, 0.0)),
            Err(YbeError::CompositionPole)
        ));
    }

    #[test]
    fn r4_type_i_at_zero_is_identity() {
        let fam = SpectralFamily::r4_type_i(0.9);
        let m = eval_family(&fam, c64(0.0, 0.0)).unwrap();
        assert!(m.residual(&CMatrix::identity(4)).unwrap() < 1e-15);
    }

    #[test]
    fn r4_type_ii_at_zero_is_identity() {
        let fam = SpectralFamily::r4_type_ii(phase(0.4));
        let m = eval_family(&fam, c64(0.0, 0.0)).unwrap();
        assert!(m.residual(&CMatrix::identity(4)).unwrap() < 1e-15);
    }

    #[test]
    fn a2_type_ii_at_zero_is_identity() {
        for gamma in [c64(1.0, 0.0), c64(2.0, 1.0)] {
            let fam = SpectralFamily::a2_type_ii(gamma);
            let m = eval_family(&fam, c64(0.0, 0.0)).unwrap();
            assert!(m.residual(&CMatrix::identity(2)).unwrap() < 1e-15);
        }
    }

    #[test]
    fn singularity_reported_with_denominator() {
        let fam = SpectralFamily::a2_type_ii(c64(0.3, 0.0));
        match eval_family(&fam, c64(0.3, 0.0)) {
            Err(YbeError::Singularity { denominator, .. }) => {
                assert_eq!(denominator, "gamma - u")
            }
            other => panic!("expected singularity, got {other:?}"),
        }
    }

    #[test]
    fn ybe_r4_type_ii_galileo() {
        let fam = SpectralFamily::r4_type_ii(phase(PI / 3.0));
        let r = ybe_residual(&fam, c64(0.3, 0.0), c64(0.5, 0.0)).unwrap();
        assert!(r < 1e-12, "residual {r}");
        for eta in [c64(1.0, 0.0), c64(-1.0, 0.0), phase(PI / 3.0)] {
            let fam = SpectralFamily::r4_type_ii(eta);
            assert!(ybe_grid_scan(&fam, -1.0, 1.0, 20).unwrap() < 1e-12);
        }
    }

    #[test]
    fn ybe_r4_type_i_lorentz_in_tan_theta() {
        let fam = SpectralFamily::r4_type_i(0.37);
        assert!(ybe_grid_scan(&fam, -1.2, 1.2, 20).unwrap() < 1e-10);
    }

    #[test]
    fn ybe_two_dim_families() {
        // d=2 type II with gamma = 1, eps = 1, (0.2, 0.4) -> u2 = 0.6
        let fam = SpectralFamily::a2_type_ii(c64(1.0, 0.0));
        assert!(ybe_residual(&fam, c64(0.2, 0.0), c64(0.4, 0.0)).unwrap() < 1e-12);
        // type I with Lorentz-composed middle
        for eps in [1.0, -1.0] {
            let fam = SpectralFamily::a2_type_i(eps);
            assert!(ybe_grid_scan(&fam, -0.9, 0.9, 20).unwrap() < 1e-10);
            let famb = SpectralFamily::b2_type_i(eps);
            assert!(ybe_residual(&famb, c64(0.3, 0.0), c64(0.1, 0.0)).unwrap() < 1e-10);
        }
    }

    #[test]
    fn ybe_trivial_at_zero_parameters() {
        for fam in [
            SpectralFamily::r4_type_ii(c64(-1.0, 0.0)),
            SpectralFamily::a2_type_ii(c64(1.5, 0.0)),
            SpectralFamily::r4_type_i(0.2),
        ] {
            let r = ybe_residual(&fam, c64(0.0, 0.0), c64(0.0, 0.0)).unwrap();
            assert!(r < 1e-15);
        }
    }

    #[test]
    fn g_constraint_examples() {
        assert!(verify_g_constraint(c64(1.0, 0.0), 2.0, 25).unwrap() < 1e-13);
        assert!(verify_g_constraint(c64(2.0, 1.0), 2.0, 25).unwrap() < 1e-13);
        // u = v = 0 vanishes identically
        let g = |u: C64, gamma: C64| u / (gamma - u);
        let z = c64(0.0, 0.0);
        let gamma = c64(1.3, 0.0);
        let lhs = (g(z, gamma) + g(z, gamma) + g(z, gamma) * g(z, gamma) * 2.0) * c64(1.0, 0.0);
        let rhs = (c64(1.0, 0.0) - g(z, gamma) * g(z, gamma)) * g(z, gamma);
        assert_eq!((lhs - rhs).norm(), 0.0);
    }

    #[test]
    fn g_constraint_pole_is_an_error() {
        // γ = 0.1 sits exactly on a grid point
        assert!(matches!(
            verify_g_constraint(c64(0.1, 0.0), 2.0, 25),
            Err(YbeError::Singularity { .. })
        ));
    }

    #[test]
    fn reparameterize_type_ii_imaginary_gamma() {
        // gamma = i keeps the ratio unimodular for real u: theta is real.
        let fam = ReparamFamily::TypeII {
            gamma: I,
            epsilon: 1.0,
        };
        let (theta, r) = reparameterize_theta(fam, c64(0.4, 0.0)).unwrap();
        assert!(theta.im.abs() < 1e-12, "theta = {theta}");
        assert!(r < 1e-10, "residual {r}");
    }

    #[test]
    fn reparameterize_type_i_recovers_theta_up_to_sign() {
        let theta0: f64 = 0.6;
        let u = c64((theta0 / 2.0).tan(), 0.0);
        let fam = ReparamFamily::TypeI {
            beta: 1.0,
            epsilon: 1.0,
        };
        let (theta, r) = reparameterize_theta(fam, u).unwrap();
        assert!((theta.re.abs() - theta0).abs() < 1e-12, "theta = {theta}");
        assert!(theta.im.abs() < 1e-12);
        assert!(r < 1e-10, "residual {r}");
    }

    #[test]
    fn reparameterize_at_zero_gives_identity() {
        for fam in [
            ReparamFamily::TypeI {
                beta: 1.0,
                epsilon: 1.0,
            },
            ReparamFamily::TypeII {
                gamma: c64(1.0, 0.0),
                epsilon: 1.0,
            },
        ] {
            let (theta, r) = reparameterize_theta(fam, c64(0.0, 0.0)).unwrap();
            assert!(theta.norm() < 1e-14);
            assert!(r < 1e-12);
        }
    }

    #[test]
    fn eval_family_is_continuous() {
        let h = 1e-6;
        for fam in [
            SpectralFamily::r4_type_i(0.5),
            SpectralFamily::r4_type_ii(phase(0.2)),
            SpectralFamily::a2_type_ii(c64(1.7, 0.0)),
            SpectralFamily::b2_type_i(1.0),
        ] {
            let u = c64(0.31, 0.0);
            let m0 = eval_family(&fam, u).unwrap();
            let m1 = eval_family(&fam, u + c64(h, 0.0)).unwrap();
            let diff = m1.residual(&m0).unwrap();
            assert!(diff < 50.0 * h, "family {fam:?} jump {diff}");
            assert!(diff > 0.0);
        }
    }
}
