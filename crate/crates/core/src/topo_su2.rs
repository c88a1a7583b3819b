//! Concrete 4-qubit realization of the topological basis, the T̂_ij loop
//! operators, the 2×2 braid matrices generated by (α, d), the SU(2)
//! generators living on the rotated basis, and the two-level BCS block.
//!
//! Qubit ordering: site 1 is the most significant bit of the 16-dim index,
//! with ↑ = 0 and ↓ = 1, so |↑↑↑↑⟩ is index 0. The pair states
//!
//!   |ψ_ij⟩ = (|↑_i↑_j⟩ + e^{−iα}|↓_i↓_j⟩)/√2
//!   |φ_ij⟩ = (|↑_i↓_j⟩ − i|↓_i↑_j⟩)/√2
//!
//! build the loop operators T̂_ij = √2(|ψ⟩⟨ψ| + |φ⟩⟨φ|) (type I, d = √2)
//! and T̂_ij = 2|ψ⟩⟨ψ| (type II, d = 2), each tensored with the identity on
//! the untouched sites. |e₁⟩ is a product of pair states; |e₂⟩ is fixed by
//! the required T̂₂₃ action, which for type II coincides with the cup
//! construction (ε/√(d²−1))(d|ψ₂₃ψ₄₁⟩ − |ψ₁₂ψ₃₄⟩).

use crate::cxmat::{c64, phase, CMatrix, C64, I};
use crate::tl_braid::{BraidPair, Sign, TLFamily, TLTag};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TopoError {
    #[error("sites must be distinct and in 1..=4, got ({0}, {1})")]
    BadSites(usize, usize),
    #[error(
        "loop operators are defined for adjacent pairs (12), (23), (34), (41); got ({0}, {1})"
    )]
    UnsupportedPair(usize, usize),
    #[error("the primed family has no site-operator realization; use TypeI or TypeII")]
    UnsupportedFamily,
    #[error("d = {d} is not −(α² + α⁻²) = {expected} for α = {alpha} (residual {residual})")]
    AlphaLoopMismatch {
        alpha: C64,
        d: f64,
        expected: C64,
        residual: f64,
    },
    #[error("quasiparticle energy needs eps_k > 0, got {0}")]
    NonPositiveEps(f64),
    #[error("delta_k must be nonzero")]
    ZeroGap,
}

/// A complex amplitude vector (2, 4 or 16 dimensional here).
#[derive(Debug, Clone)]
pub struct StateVec {
    pub amplitudes: Vec<C64>,
}

impl StateVec {
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn inner(&self, other: &StateVec) -> C64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn scale(&self, s: C64) -> StateVec {
        StateVec {
            amplitudes: self.amplitudes.iter().map(|a| a * s).collect(),
        }
    }

    pub fn add(&self, other: &StateVec) -> StateVec {
        StateVec {
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &StateVec) -> StateVec {
        self.add(&other.scale(c64(-1.0, 0.0)))
    }

    pub fn residual(&self, other: &StateVec) -> f64 {
        self.sub(other)
            .amplitudes
            .iter()
            .map(|a| a.norm())
            .fold(0.0, f64::max)
    }

    /// |v⟩⟨v| as a dense matrix.
    pub fn projector(&self) -> CMatrix {
        let n = self.dim();
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.amplitudes[i] * self.amplitudes[j].conj();
            }
        }
        m
    }
}

fn check_sites(i: usize, j: usize) -> Result<(), TopoError> {
    if i == j || !(1..=4).contains(&i) || !(1..=4).contains(&j) {
        return Err(TopoError::BadSites(i, j));
    }
    Ok(())
}

/// The two-site pair states for (i, j), as 4-dim vectors with
/// slots ordered (site i, site j). The 16-dim embedding happens at the
/// callers via explicit index placement, which is what carries the
/// non-planar pair (4, 1).
pub fn pair_states(
    i: usize,
    j: usize,
    alpha: f64,
    _family: TLFamily,
) -> Result<(StateVec, StateVec), TopoError> {
    check_sites(i, j)?;
    let s = 1.0 / 2.0_f64.sqrt();
    let psi = StateVec {
        amplitudes: vec![c64(s, 0.0), c64(0.0, 0.0), c64(0.0, 0.0), phase(-alpha) * s],
    };
    let phi_state = StateVec {
        amplitudes: vec![c64(0.0, 0.0), c64(s, 0.0), c64(0.0, -s), c64(0.0, 0.0)],
    };
    Ok((psi, phi_state))
}

/// Tensor two pair states covering all four sites into the 16-dim space.
fn product_state(i: usize, j: usize, v: &StateVec, k: usize, l: usize, w: &StateVec) -> StateVec {
    let mut sites = [i, j, k, l];
    sites.sort_unstable();
    debug_assert_eq!(sites, [1, 2, 3, 4], "pairs must partition the four sites");
    let mut out = vec![c64(0.0, 0.0); 16];
    for (ab, amp_v) in v.amplitudes.iter().enumerate() {
        for (cd, amp_w) in w.amplitudes.iter().enumerate() {
            let mut bit = [0usize; 5];
            bit[i] = ab >> 1;
            bit[j] = ab & 1;
            bit[k] = cd >> 1;
            bit[l] = cd & 1;
            let idx = bit[1] * 8 + bit[2] * 4 + bit[3] * 2 + bit[4];
            out[idx] += amp_v * amp_w;
        }
    }
    StateVec { amplitudes: out }
}

/// |v⟩⟨v| on sites (i, j), identity on the other two sites, as 16×16.
fn projector16(i: usize, j: usize, v: &StateVec) -> CMatrix {
    let others: Vec<usize> = (1..=4).filter(|s| *s != i && *s != j).collect();
    let (k, l) = (others[0], others[1]);
    let mut op = CMatrix::zeros(16, 16);
    for cd in 0..4 {
        let mut basis = StateVec {
            amplitudes: vec![c64(0.0, 0.0); 4],
        };
        basis.amplitudes[cd] = c64(1.0, 0.0);
        let embedded = product_state(i, j, v, k, l, &basis);
        op = op.add(&embedded.projector()).expect("shape");
    }
    op
}

const ADJACENT: [(usize, usize); 4] = [(1, 2), (2, 3), (3, 4), (4, 1)];

/// The loop operator T̂_ij on the full 4-qubit space.
pub fn tl_site_operator(family: TLFamily, i: usize, j: usize) -> Result<CMatrix, TopoError> {
    if !ADJACENT.contains(&(i, j)) {
        return Err(TopoError::UnsupportedPair(i, j));
    }
    let (psi, phi_state) = pair_states(i, j, family.alpha_phase, family)?;
    match family.tag {
        TLTag::TypeI => {
            let sum = projector16(i, j, &psi)
                .add(&projector16(i, j, &phi_state))
                .expect("shape");
            Ok(sum.scale(c64(2.0_f64.sqrt(), 0.0)))
        }
        TLTag::TypeII => Ok(projector16(i, j, &psi).scale(c64(2.0, 0.0))),
        TLTag::TypeIIPrime => Err(TopoError::UnsupportedFamily),
    }
}

/// The two-dimensional topological basis living inside the 4-qubit space.
#[derive(Debug, Clone)]
pub struct TopoBasis {
    pub family: TLFamily,
    pub e1: StateVec,
    pub e2: StateVec,
    pub loop_d: f64,
    pub epsilon: f64,
}

/// Build |e₁⟩, |e₂⟩ for the family.
///
/// Type I: |e₁⟩ = (|ψ₁₂ψ₃₄⟩ + |φ₁₂φ₃₄⟩)/√2 and |e₂⟩ from the T̂₂₃ action
/// (the naive product expansion is not orthonormal). Type II:
/// |e₁⟩ = |ψ₁₂ψ₃₄⟩ and the cup construction for |e₂⟩.
pub fn topo_basis(family: TLFamily, epsilon: Sign) -> Result<TopoBasis, TopoError> {
    let eps = epsilon.value();
    let alpha = family.alpha_phase;
    let (psi12, phi12) = pair_states(1, 2, alpha, family)?;
    let (psi34, phi34) = pair_states(3, 4, alpha, family)?;
    let (psi23, _) = pair_states(2, 3, alpha, family)?;
    let (psi41, _) = pair_states(4, 1, alpha, family)?;
    match family.tag {
        TLTag::TypeI => {
            let d = 2.0_f64.sqrt();
            let e1 = product_state(1, 2, &psi12, 3, 4, &psi34)
                .add(&product_state(1, 2, &phi12, 3, 4, &phi34))
                .scale(c64(1.0 / 2.0_f64.sqrt(), 0.0));
            let t23 = tl_site_operator(family, 2, 3)?;
            let te1 = StateVec {
                amplitudes: t23.apply(&e1.amplitudes).expect("dim"),
            };
            let e2 = te1
                .scale(c64(d, 0.0))
                .sub(&e1)
                .scale(c64(1.0 / (eps * (d * d - 1.0).sqrt()), 0.0));
            Ok(TopoBasis {
                family,
                e1,
                e2,
                loop_d: d,
                epsilon: eps,
            })
        }
        TLTag::TypeII => {
            let d = 2.0;
            let e1 = product_state(1, 2, &psi12, 3, 4, &psi34);
            let e2 = product_state(2, 3, &psi23, 4, 1, &psi41)
                .scale(c64(d, 0.0))
                .sub(&e1)
                .scale(c64(eps / (d * d - 1.0).sqrt(), 0.0));
            Ok(TopoBasis {
                family,
                e1,
                e2,
                loop_d: d,
                epsilon: eps,
            })
        }
        TLTag::TypeIIPrime => Err(TopoError::UnsupportedFamily),
    }
}

/// Matrix elements ⟨e_i|T̂|e_j⟩ of T̂₁₂ and T̂₂₃ on the topological basis.
pub fn tl_action_2d(basis: &TopoBasis) -> Result<(CMatrix, CMatrix), TopoError> {
    let t12 = tl_site_operator(basis.family, 1, 2)?;
    let t23 = tl_site_operator(basis.family, 2, 3)?;
    let element = |op: &CMatrix, bra: &StateVec, ket: &StateVec| -> C64 {
        bra.inner(&StateVec {
            amplitudes: op.apply(&ket.amplitudes).expect("dim"),
        })
    };
    let two_by_two = |op: &CMatrix| {
        CMatrix::from_rows(&[
            vec![
                element(op, &basis.e1, &basis.e1),
                element(op, &basis.e1, &basis.e2),
            ],
            vec![
                element(op, &basis.e2, &basis.e1),
                element(op, &basis.e2, &basis.e2),
            ],
        ])
    };
    Ok((two_by_two(&t12), two_by_two(&t23)))
}

/// The 2×2 braid pair generated by a Kauffman weight α with loop value d:
/// A = diag(α + α⁻¹d, α), B = (1/(αd))[[1 + α²d, ε√(d²−1)], [ε√(d²−1), α²d + d²−1]].
///
/// √(d²−1) is taken as its principal complex root, so loop values d < 1
/// (still on the curve d = −(α² + α⁻²)) are admitted.
pub fn ab_from_alpha(alpha: C64, d: f64, epsilon: Sign) -> Result<BraidPair, TopoError> {
    let expected = -(alpha * alpha + (alpha * alpha).inv());
    let residual = (expected - d).norm();
    if residual > 1e-10 {
        return Err(TopoError::AlphaLoopMismatch {
            alpha,
            d,
            expected,
            residual,
        });
    }
    let root = c64(d * d - 1.0, 0.0).sqrt() * epsilon.value();
    let a = CMatrix::diag(&[alpha + alpha.inv() * d, alpha]);
    let pref = (alpha * d).inv();
    let b = CMatrix::from_rows(&[
        vec![pref * (alpha * alpha * d + 1.0), pref * root],
        vec![pref * root, pref * (alpha * alpha * d + d * d - 1.0)],
    ]);
    Ok(BraidPair::new(a, b))
}

/// SU(2) ladder operators built on the rotated topological basis
/// |e₁'⟩ = (|e₁⟩ + i|e₂⟩)/√2, |e₂'⟩ = (i|e₁⟩ + |e₂⟩)/√2.
#[derive(Debug, Clone)]
pub struct Su2Generators {
    pub jp: CMatrix,
    pub jm: CMatrix,
    pub jz: CMatrix,
    pub e1_prime: StateVec,
    pub e2_prime: StateVec,
}

impl Su2Generators {
    /// J² = ½(J₊J₋ + J₋J₊) + J_z².
    pub fn j_squared(&self) -> CMatrix {
        let sym = (&self.jp * &self.jm)
            .add(&(&self.jm * &self.jp))
            .expect("shape")
            .scale(c64(0.5, 0.0));
        sym.add(&(&self.jz * &self.jz)).expect("shape")
    }
}

pub fn su2_generators(basis: &TopoBasis) -> Su2Generators {
    let s = c64(1.0 / 2.0_f64.sqrt(), 0.0);
    let e1p = basis.e1.add(&basis.e2.scale(I)).scale(s);
    let e2p = basis.e1.scale(I).add(&basis.e2).scale(s);
    let outer = |ket: &StateVec, bra: &StateVec| -> CMatrix {
        let n = ket.dim();
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = ket.amplitudes[i] * bra.amplitudes[j].conj();
            }
        }
        m
    };
    let jp = outer(&e1p, &e2p);
    let jm = outer(&e2p, &e1p);
    let jz = outer(&e1p, &e1p)
        .sub(&outer(&e2p, &e2p))
        .expect("shape")
        .scale(c64(0.5, 0.0));
    Su2Generators {
        jp,
        jm,
        jz,
        e1_prime: e1p,
        e2_prime: e2p,
    }
}

/// Parameters of one BCS momentum block.
#[derive(Debug, Clone, Copy)]
pub struct BcsParams {
    pub eps_k: f64,
    pub delta_k: C64,
    pub theta_k: f64,
    pub phi: f64,
    pub tau: C64,
    pub big_e: f64,
}

/// Outcome of the two-level diagonalization.
#[derive(Debug, Clone)]
pub struct BcsSolution {
    pub params: BcsParams,
    /// D(ξ) in the ordered basis (|1,1⟩, |0,0⟩) with J_z = diag(+1/2, −1/2).
    pub d_matrix: CMatrix,
    /// ‖D·H·D† − E·J_z‖
    pub diag_residual: f64,
    /// ‖D(ξ) − e^{τJ₊} e^{ln(1+|τ|²)J_z} e^{−τ*J₋}‖
    pub disentangle_residual: f64,
    /// ‖D(ξ) − [[cos θ/2, sin θ/2·e^{−iφ}], [−sin θ/2·e^{iφ}, cos θ/2]]‖
    pub display_residual: f64,
    /// (|0,0⟩ + τ|1,1⟩)/√(1+|τ|²) = D(ξ)|0,0⟩, in the same basis order.
    pub coherent: StateVec,
    /// The Hermitized Hamiltonian ε·J_z + ½Δ·J₊ + ½Δ*·J₋.
    pub hamiltonian: CMatrix,
}

/// Diagonalize H = ε·J_z + ½Δ·J₊ + ½Δ*·J₋ with D(ξ) = exp(ξJ₊ − ξ*J₋),
/// ξ = (θ/2)e^{−iφ}. The phase convention φ = −arg Δ is the one for which
/// D·H·D† = E·J_z holds exactly; under it the ground (−E/2) eigenvector of
/// H is the τ ↦ −τ coherent state D†|0,0⟩, while D|0,0⟩ is returned as
/// `coherent` per its defining expansion.
pub fn bcs_diagonalize(eps_k: f64, delta_k: C64) -> Result<BcsSolution, TopoError> {
    if eps_k <= 0.0 {
        return Err(TopoError::NonPositiveEps(eps_k));
    }
    if delta_k.norm() == 0.0 {
        return Err(TopoError::ZeroGap);
    }
    let gap = delta_k.norm();
    let theta_k = (gap / eps_k).atan(); // (0, π/2) branch
    let phi = -delta_k.arg();
    let tau = phase(-phi) * (theta_k / 2.0).tan();
    let big_e = eps_k.hypot(gap);

    let zero = c64(0.0, 0.0);
    let jp = CMatrix::from_rows(&[vec![zero, c64(1.0, 0.0)], vec![zero, zero]]);
    let jm = jp.dagger();
    let jz = CMatrix::diag(&[c64(0.5, 0.0), c64(-0.5, 0.0)]);

    let xi = phase(-phi) * (theta_k / 2.0);
    let generator = jp.scale(xi).sub(&jm.scale(xi.conj())).expect("shape");
    let d_matrix = generator.expm().expect("square");

    let hamiltonian = jz
        .scale(c64(eps_k, 0.0))
        .add(&jp.scale(delta_k * 0.5))
        .and_then(|m| m.add(&jm.scale(delta_k.conj() * 0.5)))
        .expect("shape");
    let diag_residual = (&(&d_matrix * &hamiltonian) * &d_matrix.dagger())
        .residual(&jz.scale(c64(big_e, 0.0)))
        .expect("shape");

    let norm = (1.0 + tau.norm_sqr()).sqrt();
    let disentangled = {
        let up = CMatrix::identity(2).add(&jp.scale(tau)).expect("shape");
        let mid = CMatrix::diag(&[c64(norm, 0.0), c64(1.0 / norm, 0.0)]);
        let down = CMatrix::identity(2)
            .sub(&jm.scale(tau.conj()))
            .expect("shape");
        &(&up * &mid) * &down
    };
    let disentangle_residual = d_matrix.residual(&disentangled).expect("shape");

    let (c, s) = ((theta_k / 2.0).cos(), (theta_k / 2.0).sin());
    let display = CMatrix::from_rows(&[
        vec![c64(c, 0.0), phase(-phi) * s],
        vec![phase(phi) * (-s), c64(c, 0.0)],
    ]);
    let display_residual = d_matrix.residual(&display).expect("shape");

    let coherent = StateVec {
        amplitudes: vec![tau / norm, c64(1.0 / norm, 0.0)],
    };

    Ok(BcsSolution {
        params: BcsParams {
            eps_k,
            delta_k,
            theta_k,
            phi,
            tau,
            big_e,
        },
        d_matrix,
        diag_residual,
        disentangle_residual,
        display_residual,
        coherent,
        hamiltonian,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cxmat::braid_residual;
    use std::f64::consts::PI;

    fn fam_i(alpha: f64) -> TLFamily {
        TLFamily::type_i(alpha, Sign::Plus)
    }

    fn fam_ii(alpha: f64) -> TLFamily {
        TLFamily::type_ii(alpha)
    }

    #[test]
    fn pair_states_are_orthonormal() {
        let (psi, phi_state) = pair_states(1, 2, 0.0, fam_i(0.0)).unwrap();
        assert!((psi.norm() - 1.0).abs() < 1e-15);
        assert!((phi_state.norm() - 1.0).abs() < 1e-15);
        assert!(psi.inner(&phi_state).norm() < 1e-15);
        let s = 1.0 / 2.0_f64.sqrt();
        assert!((psi.amplitudes[0] - s).norm() < 1e-15);
        assert!((psi.amplitudes[3] - s).norm() < 1e-15);
        // α = π flips the |↓↓⟩ phase
        let (psi, _) = pair_states(1, 2, PI, fam_i(PI)).unwrap();
        assert!((psi.amplitudes[3] + s).norm() < 1e-14);
        assert!(matches!(
            pair_states(2, 2, 0.0, fam_i(0.0)),
            Err(TopoError::BadSites(2, 2))
        ));
    }

    #[test]
    fn site_operator_trace_and_relations() {
        // type II: trace of 2|ψ⟩⟨ψ| ⊗ I_4 = 2·4 = 8
        let op = tl_site_operator(fam_ii(0.3), 1, 2).unwrap();
        let trace: C64 = (0..16).map(|k| op[(k, k)]).sum();
        assert!((trace - c64(8.0, 0.0)).norm() < 1e-12);
        assert!(matches!(
            tl_site_operator(fam_ii(0.0), 1, 3),
            Err(TopoError::UnsupportedPair(1, 3))
        ));
        assert!(matches!(
            tl_site_operator(TLFamily::type_ii_prime(0.0), 1, 2),
            Err(TopoError::UnsupportedFamily)
        ));
    }

    #[test]
    fn site_operators_satisfy_tl_on_16_dim() {
        for k in 0..8 {
            let alpha = 2.0 * PI * k as f64 / 8.0;
            for (family, d) in [(fam_i(alpha), 2.0_f64.sqrt()), (fam_ii(alpha), 2.0)] {
                let t: Vec<CMatrix> = ADJACENT
                    .iter()
                    .map(|&(i, j)| tl_site_operator(family, i, j).unwrap())
                    .collect();
                for op in &t {
                    let sq = (op * op).residual(&op.scale(c64(d, 0.0))).unwrap();
                    assert!(sq < 1e-12, "alpha={alpha}");
                }
                for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
                    let lhs = &(&t[a] * &t[b]) * &t[a];
                    assert!(
                        lhs.residual(&t[a]).unwrap() < 1e-12,
                        "alpha={alpha} pair {a}{b}"
                    );
                }
                // disjoint supports commute
                let comm = (&t[0] * &t[2]).residual(&(&t[2] * &t[0])).unwrap();
                assert!(comm < 1e-13);
            }
        }
    }

    #[test]
    fn topo_basis_orthonormal_and_annihilated() {
        for family in [fam_i(0.0), fam_i(1.3), fam_ii(0.0), fam_ii(2.1)] {
            for eps in [Sign::Plus, Sign::Minus] {
                let basis = topo_basis(family, eps).unwrap();
                assert!((basis.e1.norm() - 1.0).abs() < 1e-12);
                assert!((basis.e2.norm() - 1.0).abs() < 1e-12);
                assert!(basis.e1.inner(&basis.e2).norm() < 1e-12);
                for (i, j) in [(1, 2), (3, 4)] {
                    let op = tl_site_operator(family, i, j).unwrap();
                    let te2 = op.apply(&basis.e2.amplitudes).unwrap();
                    let worst = te2.iter().map(|a| a.norm()).fold(0.0, f64::max);
                    assert!(worst < 1e-12, "T{i}{j}|e2> != 0");
                    let te1 = StateVec {
                        amplitudes: op.apply(&basis.e1.amplitudes).unwrap(),
                    };
                    assert!(te1.residual(&basis.e1.scale(c64(basis.loop_d, 0.0))) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn t41_action_matches_t23_action() {
        for family in [fam_i(0.7), fam_ii(0.4)] {
            let basis = topo_basis(family, Sign::Plus).unwrap();
            let d = basis.loop_d;
            let root = (d * d - 1.0).sqrt();
            for (i, j) in [(2, 3), (4, 1)] {
                let op = tl_site_operator(family, i, j).unwrap();
                let te1 = StateVec {
                    amplitudes: op.apply(&basis.e1.amplitudes).unwrap(),
                };
                let expected = basis
                    .e1
                    .add(&basis.e2.scale(c64(root, 0.0)))
                    .scale(c64(1.0 / d, 0.0));
                assert!(te1.residual(&expected) < 1e-12, "T{i}{j}|e1>");
                let te2 = StateVec {
                    amplitudes: op.apply(&basis.e2.amplitudes).unwrap(),
                };
                let expected = basis
                    .e1
                    .add(&basis.e2.scale(c64(root, 0.0)))
                    .scale(c64(root / d, 0.0));
                assert!(te2.residual(&expected) < 1e-12, "T{i}{j}|e2>");
            }
        }
    }

    #[test]
    fn two_dim_actions_match_closed_form() {
        // type II at d=2, ε=+1: t23 = (1/2)[[1, √3], [√3, 3]]
        let basis = topo_basis(fam_ii(0.0), Sign::Plus).unwrap();
        let (t12, t23) = tl_action_2d(&basis).unwrap();
        assert!(
            t12.residual(&CMatrix::diag(&[c64(2.0, 0.0), c64(0.0, 0.0)]))
                .unwrap()
                < 1e-12
        );
        let s3 = 3.0_f64.sqrt();
        let expected = CMatrix::from_real_rows(&[vec![0.5, s3 / 2.0], vec![s3 / 2.0, 1.5]]);
        assert!(t23.residual(&expected).unwrap() < 1e-12);

        // type I at d=√2: t23 = (1/√2)[[1, ε], [ε, 1]]
        for eps in [Sign::Plus, Sign::Minus] {
            let basis = topo_basis(fam_i(0.9), eps).unwrap();
            let (t12, t23) = tl_action_2d(&basis).unwrap();
            let d = 2.0_f64.sqrt();
            assert!(
                t12.residual(&CMatrix::diag(&[c64(d, 0.0), c64(0.0, 0.0)]))
                    .unwrap()
                    < 1e-12
            );
            let e = eps.value();
            let expected = CMatrix::from_real_rows(&[vec![1.0 / d, e / d], vec![e / d, 1.0 / d]]);
            assert!(t23.residual(&expected).unwrap() < 1e-12);
            // trace of t12 is d
            assert!((t12[(0, 0)] + t12[(1, 1)] - c64(d, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn ab_from_alpha_reproduces_canonical_matrices() {
        // d=√2, α=e^{3iπ/8}: A = e^{−iπ/8} diag(1, i), B = (1/√2)e^{iπ/8}[[1,−i],[−i,1]]
        let alpha = phase(3.0 * PI / 8.0);
        let pair = ab_from_alpha(alpha, 2.0_f64.sqrt(), Sign::Plus).unwrap();
        let pa = phase(-PI / 8.0);
        let a_expected = CMatrix::diag(&[pa, pa * I]);
        assert!(pair.a.residual(&a_expected).unwrap() < 1e-13);
        let pb = phase(PI / 8.0) * (1.0 / 2.0_f64.sqrt());
        let b_expected = CMatrix::from_rows(&[vec![pb, pb * (-I)], vec![pb * (-I), pb]]);
        assert!(pair.b.residual(&b_expected).unwrap() < 1e-13);
        assert!(pair.braid_residual < 1e-12);

        // d=2, α=i: A = i·diag(−1, 1), B = (−i)·(−1/2)[[1, −√3], [−√3, −1]]
        let pair = ab_from_alpha(I, 2.0, Sign::Plus).unwrap();
        let a_expected = CMatrix::diag(&[-I, I]);
        assert!(pair.a.residual(&a_expected).unwrap() < 1e-13);
        let s3 = 3.0_f64.sqrt();
        let b_expected = CMatrix::from_rows(&[
            vec![I * 0.5, I * (-s3 / 2.0)],
            vec![I * (-s3 / 2.0), I * (-0.5)],
        ]);
        assert!(pair.b.residual(&b_expected).unwrap() < 1e-13);
        assert!(pair.braid_residual < 1e-12);

        // mismatched (α, d) is rejected
        assert!(matches!(
            ab_from_alpha(I, 1.5, Sign::Plus),
            Err(TopoError::AlphaLoopMismatch { .. })
        ));
    }

    #[test]
    fn ab_from_alpha_agrees_with_tl_action() {
        // A = αI + α⁻¹t12 and B = αI + α⁻¹t23 with the 2×2 actions.
        for (family, alpha) in [(fam_i(0.3), phase(3.0 * PI / 8.0)), (fam_ii(0.0), I)] {
            let basis = topo_basis(family, Sign::Plus).unwrap();
            let (t12, t23) = tl_action_2d(&basis).unwrap();
            let pair = ab_from_alpha(alpha, basis.loop_d, Sign::Plus).unwrap();
            let id = CMatrix::identity(2);
            let a2 = id.scale(alpha).add(&t12.scale(alpha.inv())).unwrap();
            let b2 = id.scale(alpha).add(&t23.scale(alpha.inv())).unwrap();
            assert!(pair.a.residual(&a2).unwrap() < 1e-12);
            assert!(pair.b.residual(&b2).unwrap() < 1e-12);
        }
    }

    #[test]
    fn ab_braids_along_the_loop_curve() {
        // α on the unit circle with d = −(α² + α⁻²) ∈ (0, 2]
        for k in 1..10 {
            let angle = PI / 4.0 + (PI / 4.0) * k as f64 / 10.0;
            let alpha = phase(angle);
            let d = -2.0 * (2.0 * angle).cos();
            if d <= 0.0 {
                continue;
            }
            let pair = ab_from_alpha(alpha, d, Sign::Plus).unwrap();
            assert!(pair.braid_residual < 1e-12, "angle={angle}");
        }
    }

    #[test]
    fn su2_algebra_closes() {
        for family in [fam_i(0.5), fam_ii(0.0)] {
            let basis = topo_basis(family, Sign::Plus).unwrap();
            let g = su2_generators(&basis);
            let comm = |a: &CMatrix, b: &CMatrix| (a * b).sub(&(b * a)).unwrap();
            assert!(comm(&g.jz, &g.jp).residual(&g.jp).unwrap() < 1e-12);
            assert!(
                comm(&g.jz, &g.jm)
                    .residual(&g.jm.scale(c64(-1.0, 0.0)))
                    .unwrap()
                    < 1e-12
            );
            assert!(
                comm(&g.jp, &g.jm)
                    .residual(&g.jz.scale(c64(2.0, 0.0)))
                    .unwrap()
                    < 1e-12
            );
            assert!((&g.jp * &g.jp).max_abs() < 1e-12);
            assert!((&g.jm * &g.jm).max_abs() < 1e-12);
            let j2 = g.j_squared();
            for v in [&g.e1_prime, &g.e2_prime] {
                let j2v = StateVec {
                    amplitudes: j2.apply(&v.amplitudes).unwrap(),
                };
                assert!(j2v.residual(&v.scale(c64(0.75, 0.0))) < 1e-12);
            }
            let jz1 = StateVec {
                amplitudes: g.jz.apply(&g.e1_prime.amplitudes).unwrap(),
            };
            assert!(jz1.residual(&g.e1_prime.scale(c64(0.5, 0.0))) < 1e-12);
            let jz2 = StateVec {
                amplitudes: g.jz.apply(&g.e2_prime.amplitudes).unwrap(),
            };
            assert!(jz2.residual(&g.e2_prime.scale(c64(-0.5, 0.0))) < 1e-12);
        }
    }

    #[test]
    fn bcs_three_four_five() {
        let sol = bcs_diagonalize(3.0, c64(4.0, 0.0)).unwrap();
        assert!((sol.params.big_e - 5.0).abs() < 1e-14);
        assert!(sol.diag_residual < 1e-13);
        assert!(sol.disentangle_residual < 1e-13);
        assert!(sol.display_residual < 1e-13);
    }

    #[test]
    fn bcs_small_gap_limit() {
        let sol = bcs_diagonalize(1.0, c64(1e-9, 0.0)).unwrap();
        assert!(sol.params.theta_k < 1e-8);
        assert!(sol.d_matrix.residual(&CMatrix::identity(2)).unwrap() < 1e-8);
        assert!(matches!(
            bcs_diagonalize(-1.0, c64(1.0, 0.0)),
            Err(TopoError::NonPositiveEps(_))
        ));
        assert!(matches!(
            bcs_diagonalize(1.0, c64(0.0, 0.0)),
            Err(TopoError::ZeroGap)
        ));
    }

    #[test]
    fn bcs_ground_state_is_minus_tau_coherent_state() {
        // 2×2 eigendecomposition oracle: H v = λ v solved directly; the
        // −E/2 eigenvector is (|0,0⟩ − τ|1,1⟩)/√(1+|τ|²).
        let sol = bcs_diagonalize(1.0, phase(PI / 3.0)).unwrap();
        let h = &sol.hamiltonian;
        let tau = sol.params.tau;
        let norm = (1.0 + tau.norm_sqr()).sqrt();
        let ground = StateVec {
            amplitudes: vec![-tau / norm, c64(1.0 / norm, 0.0)],
        };
        let hv = StateVec {
            amplitudes: h.apply(&ground.amplitudes).unwrap(),
        };
        assert!(hv.residual(&ground.scale(c64(-sol.params.big_e / 2.0, 0.0))) < 1e-13);
        // oracle cross-check of the eigenvalue from the characteristic polynomial
        let tr = h[(0, 0)] + h[(1, 1)];
        let det = h[(0, 0)] * h[(1, 1)] - h[(0, 1)] * h[(1, 0)];
        let lam_minus = (tr - (tr * tr - det * 4.0).sqrt()) * 0.5;
        assert!((lam_minus - c64(-sol.params.big_e / 2.0, 0.0)).norm() < 1e-13);
        // the returned coherent state is D(ξ)|0,0⟩
        let d_on_00 = sol.d_matrix.apply(&[c64(0.0, 0.0), c64(1.0, 0.0)]).unwrap();
        let coherent = StateVec {
            amplitudes: d_on_00,
        };
        assert!(coherent.residual(&sol.coherent) < 1e-13);
    }

    #[test]
    fn bcs_matches_wigner_half_spin_up_to_row_order() {
        // P·D^{1/2}(θ, −φ)·P = D_BCS(θ, φ) with P the order-reversal.
        use crate::wigner::{big_d, HalfInt, WignerSpec};
        let sol = bcs_diagonalize(2.0, c64(1.0, -1.5)).unwrap();
        let spec = WignerSpec {
            two_j: HalfInt::new(1),
            theta: sol.params.theta_k,
            phi: -sol.params.phi,
        };
        let d12 = big_d(spec);
        let p = CMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        let flipped = &(&p * &d12) * &p;
        assert!(flipped.residual(&sol.d_matrix).unwrap() < 1e-12);
    }

    #[test]
    fn ab_pair_is_braid_pair_for_canonical_examples() {
        let pair = ab_from_alpha(phase(3.0 * PI / 8.0), 2.0_f64.sqrt(), Sign::Minus).unwrap();
        assert!(braid_residual(&pair.a, &pair.b) < 1e-12);
    }
}
