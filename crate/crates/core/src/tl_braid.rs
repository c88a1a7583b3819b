//! Temperley-Lieb generators and the two braid-matrix families.
//!
//! The 4×4 generators come in three flavours: the Bell-basis one with loop
//! value √2 (type I), the permutation-like one with loop value q+q⁻¹
//! (type II'), and the conjugate of the latter by the basis swap V
//! (type II). Every generator satisfies T² = dT and the three-site triple
//! T₁T₂T₁ = T₁; the braid matrices arise as S = 1 + fT with f a root of
//! f² + df + 1 = 0, and decompose back through the Kauffman form
//! S = αI + α⁻¹T with d = −(α² + α⁻²).

use crate::cxmat::{braid_residual, c64, phase, CMatrix, C64, I};
use thiserror::Error;

pub const SQRT_2: f64 = std::f64::consts::SQRT_2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TlError {
    #[error("matrix is outside the two-block (corner/middle) structure")]
    UnsupportedStructure,
    #[error("matrix has {0} distinct eigenvalues; the decomposition needs exactly two")]
    EigenvalueCount(usize),
    #[error("no Kauffman decomposition with a real positive loop value exists")]
    NoRealLoop,
    #[error("loop value q + 1/q is not real (q = {0})")]
    ComplexLoop(C64),
}

/// Sign ±1 used for the ε parameter of the type-I family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TLTag {
    TypeI,
    TypeII,
    TypeIIPrime,
}

/// Family parameters for a Temperley-Lieb generator.
///
/// `alpha_phase` is the angle α of the unit phase q = e^{iα} (type I) or
/// η = e^{iα} (type II / II'); `epsilon` only matters for type I and `q`
/// only for type II / II' (default 1, where the loop value is 2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TLFamily {
    pub tag: TLTag,
    pub alpha_phase: f64,
    pub epsilon: Sign,
    pub q: C64,
}

impl TLFamily {
    pub fn type_i(alpha_phase: f64, epsilon: Sign) -> Self {
        Self {
            tag: TLTag::TypeI,
            alpha_phase,
            epsilon,
            q: c64(1.0, 0.0),
        }
    }

    pub fn type_ii(alpha_phase: f64) -> Self {
        Self {
            tag: TLTag::TypeII,
            alpha_phase,
            epsilon: Sign::Plus,
            q: c64(1.0, 0.0),
        }
    }

    pub fn type_ii_prime(alpha_phase: f64) -> Self {
        Self {
            tag: TLTag::TypeIIPrime,
            alpha_phase,
            epsilon: Sign::Plus,
            q: c64(1.0, 0.0),
        }
    }

    pub fn with_q(mut self, q: C64) -> Self {
        self.q = q;
        self
    }

    /// η = e^{iα} for the type II / II' families.
    pub fn eta(&self) -> C64 {
        phase(self.alpha_phase)
    }
}

/// A Temperley-Lieb generator: the 4×4 matrix together with its loop value.
#[derive(Debug, Clone)]
pub struct TLGen {
    pub family: TLFamily,
    pub matrix: CMatrix,
    pub loop_d: f64,
}

/// Residuals of the Temperley-Lieb relations for one generator.
#[derive(Debug, Clone, Copy)]
pub struct TlResiduals {
    /// ‖T² − dT‖
    pub square: f64,
    /// ‖T₁T₂T₁ − T₁‖ on three sites
    pub triple_left: f64,
    /// ‖T₂T₁T₂ − T₂‖ on three sites
    pub triple_right: f64,
}

impl TlResiduals {
    pub fn max(&self) -> f64 {
        self.square.max(self.triple_left).max(self.triple_right)
    }
}

/// A pair of same-shape square matrices with their braid residual ‖aba − bab‖.
#[derive(Debug, Clone)]
pub struct BraidPair {
    pub a: CMatrix,
    pub b: CMatrix,
    pub braid_residual: f64,
}

impl BraidPair {
    pub fn new(a: CMatrix, b: CMatrix) -> Self {
        let braid_residual = braid_residual(&a, &b);
        Self {
            a,
            b,
            braid_residual,
        }
    }

    /// Worst unitarity residual of the two members.
    pub fn unitarity_residual(&self) -> f64 {
        self.a.unitarity_residual().max(self.b.unitarity_residual())
    }

    /// The pair with both members transposed (still a braid pair).
    pub fn transposed(&self) -> BraidPair {
        BraidPair::new(self.a.transpose(), self.b.transpose())
    }
}

/// Basis swap (1↔2, 3↔4) used to carry T_II' onto T_II.
pub fn swap_v() -> CMatrix {
    CMatrix::from_real_rows(&[
        vec![0.0, 1.0, 0.0, 0.0],
        vec![1.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, 0.0, 1.0],
        vec![0.0, 0.0, 1.0, 0.0],
    ])
}

/// The type-I braid matrix b_I(q) with q = e^{iα}.
pub fn b_type_i(alpha: f64, epsilon: Sign) -> CMatrix {
    let q = phase(alpha);
    let e = epsilon.value();
    let s = 1.0 / SQRT_2;
    CMatrix::from_rows(&[
        vec![c64(s, 0.0), c64(0.0, 0.0), c64(0.0, 0.0), q * s],
        vec![c64(0.0, 0.0), c64(s, 0.0), c64(e * s, 0.0), c64(0.0, 0.0)],
        vec![c64(0.0, 0.0), c64(-e * s, 0.0), c64(s, 0.0), c64(0.0, 0.0)],
        vec![-q.inv() * s, c64(0.0, 0.0), c64(0.0, 0.0), c64(s, 0.0)],
    ])
}

/// The type-II braid matrix b_II(q, η), the q-deformation of the permutation.
pub fn b_type_ii(q: C64, eta: C64) -> CMatrix {
    let zero = c64(0.0, 0.0);
    CMatrix::from_rows(&[
        vec![q, zero, zero, zero],
        vec![zero, zero, -eta, zero],
        vec![zero, -eta.inv(), q - q.inv(), zero],
        vec![zero, zero, zero, q],
    ])
}

/// Bell-basis transform W: unitary, and equal to b_I(q=1, ε=+1). Its first
/// row carries the (1/√2)(1, 0, 0, 1) coefficients of |Φ⁺⟩ in the natural
/// basis (|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩).
pub fn bell_transform() -> CMatrix {
    b_type_i(0.0, Sign::Plus)
}

/// Build the 4×4 generator of the requested family.
pub fn tl_generator(family: TLFamily) -> Result<TLGen, TlError> {
    let zero = c64(0.0, 0.0);
    let (matrix, loop_d) = match family.tag {
        TLTag::TypeI => {
            let ea = phase(family.alpha_phase);
            let e = family.epsilon.value();
            let s = 1.0 / SQRT_2;
            let m = CMatrix::from_rows(&[
                vec![c64(s, 0.0), zero, zero, ea * s],
                vec![zero, c64(s, 0.0), c64(0.0, -e * s), zero],
                vec![zero, c64(0.0, e * s), c64(s, 0.0), zero],
                vec![ea.inv() * s, zero, zero, c64(s, 0.0)],
            ]);
            (m, SQRT_2)
        }
        TLTag::TypeIIPrime | TLTag::TypeII => {
            let q = family.q;
            let d = q + q.inv();
            if d.im.abs() > 1e-12 {
                return Err(TlError::ComplexLoop(q));
            }
            let eta = family.eta();
            let prime = CMatrix::from_rows(&[
                vec![zero, zero, zero, zero],
                vec![zero, q, eta, zero],
                vec![zero, eta.inv(), q.inv(), zero],
                vec![zero, zero, zero, zero],
            ]);
            let m = if family.tag == TLTag::TypeIIPrime {
                prime
            } else {
                let v = swap_v();
                &(&v * &prime) * &v.dagger()
            };
            (m, d.re)
        }
    };
    Ok(TLGen {
        family,
        matrix,
        loop_d,
    })
}

/// Residuals of T² = dT and the three-site triples for one generator.
pub fn tl_residuals(t: &TLGen) -> TlResiduals {
    tl_residuals_raw(&t.matrix, t.loop_d)
}

/// Same, for an arbitrary 4×4 candidate generator and loop value.
pub fn tl_residuals_raw(t: &CMatrix, loop_d: f64) -> TlResiduals {
    let square = (t * t)
        .residual(&t.scale(c64(loop_d, 0.0)))
        .expect("same shape");
    let i2 = CMatrix::identity(2);
    let t1 = t.kron(&i2);
    let t2 = i2.kron(t);
    let triple_left = (&(&t1 * &t2) * &t1).residual(&t1).expect("same shape");
    let triple_right = (&(&t2 * &t1) * &t2).residual(&t2).expect("same shape");
    TlResiduals {
        square,
        triple_left,
        triple_right,
    }
}

/// Which root of f² + df + 1 = 0 to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootChoice {
    Plus,
    Minus,
}

/// Both roots f = ½(−d ± √(d²−4)); for d < 2 they are unit-modulus complex
/// conjugates (f_I = −e^{∓iπ/4} at d = √2, f_II = −1 at d = 2).
pub fn f_roots(d: f64) -> (C64, C64) {
    let disc = c64(d * d - 4.0, 0.0).sqrt();
    let half = c64(0.5, 0.0);
    (half * (disc - d), half * (-disc - d))
}

/// Yang-Baxterized braid matrix S = 1 + fT on three sites: returns the pair
/// (S⊗I₂, I₂⊗S) with its braid residual. The free overall scalar ρ
/// cancels in the cubic braid relation and is dropped.
pub fn braid_from_tl(t: &TLGen, root: RootChoice) -> BraidPair {
    let (fp, fm) = f_roots(t.loop_d);
    let f = match root {
        RootChoice::Plus => fp,
        RootChoice::Minus => fm,
    };
    let s = CMatrix::identity(4)
        .add(&t.matrix.scale(f))
        .expect("same shape");
    let i2 = CMatrix::identity(2);
    BraidPair::new(s.kron(&i2), i2.kron(&s))
}

/// Result of splitting a braiding cross into αI + α⁻¹T.
#[derive(Debug, Clone)]
pub struct KauffmanDecomposition {
    pub alpha: C64,
    pub t: CMatrix,
    pub loop_d: f64,
    /// Unit phase by which the input was rescaled before decomposing; 1 when
    /// the input already has Kauffman-compatible eigenvalues.
    pub rescale: C64,
}

/// Decompose a two-eigenvalue 4×4 braid matrix as ρ·s = αI + α⁻¹T with
/// T² = dT and d = −(α² + α⁻²) > 0.
///
/// The eigenvalues are read off the two invariant 2×2 blocks (corners and
/// middle), clustered at tolerance 1e-9. A unit rescale ρ is admitted
/// because the braid relation leaves the overall scalar of s free; inputs
/// that are already of the form αI + α⁻¹T decompose with ρ = 1 and return
/// the original α.
pub fn kauffman_decompose(s: &CMatrix) -> Result<KauffmanDecomposition, TlError> {
    assert!(
        s.rows() == 4 && s.cols() == 4,
        "kauffman_decompose expects a 4x4 matrix"
    );
    let scale = s.max_abs().max(1.0);
    for i in 0..4 {
        for j in 0..4 {
            let corner = (i == 0 || i == 3) && (j == 0 || j == 3);
            let middle = (i == 1 || i == 2) && (j == 1 || j == 2);
            if !corner && !middle && s[(i, j)].norm() > 1e-12 * scale {
                return Err(TlError::UnsupportedStructure);
            }
        }
    }
    let block_eigs = |a: C64, b: C64, c: C64, d: C64| -> [C64; 2] {
        let tr = a + d;
        let det = a * d - b * c;
        let disc = (tr * tr - det * 4.0).sqrt();
        [(tr + disc) * 0.5, (tr - disc) * 0.5]
    };
    let outer = block_eigs(s[(0, 0)], s[(0, 3)], s[(3, 0)], s[(3, 3)]);
    let middle = block_eigs(s[(1, 1)], s[(1, 2)], s[(2, 1)], s[(2, 2)]);
    let mut distinct: Vec<C64> = Vec::new();
    for lam in outer.iter().chain(middle.iter()) {
        if !distinct.iter().any(|u| (u - lam).norm() < 1e-9 * scale) {
            distinct.push(*lam);
        }
    }
    if distinct.len() != 2 {
        return Err(TlError::EigenvalueCount(distinct.len()));
    }

    // Kauffman eigenvalues are {α, −α⁻³}. Admit a unit rescale ρ solving
    // ρ⁴ = −1/(λ₁³λ₂); enumerate pairings and fourth roots, keep candidates
    // with a real positive loop value and a verified T² = dT, and pick the
    // one closest to ρ = 1 (ties broken towards Im α ≥ 0).
    let mut best: Option<(f64, f64, KauffmanDecomposition)> = None;
    for (l1, l2) in [(distinct[0], distinct[1]), (distinct[1], distinct[0])] {
        let rho4 = -(l1.powu(3) * l2).inv();
        let rho0 = rho4.powf(0.25);
        for k in 0..4 {
            let rho = rho0 * phase(std::f64::consts::FRAC_PI_2 * k as f64);
            let alpha = rho * l1;
            let d = -(alpha * alpha + (alpha * alpha).inv());
            if d.im.abs() > 1e-9 || d.re <= 0.0 {
                continue;
            }
            let t = s
                .scale(rho)
                .sub(&CMatrix::identity(4).scale(alpha))
                .expect("shape")
                .scale(alpha);
            if tl_residuals_raw(&t, d.re).square > 1e-9 * scale {
                continue;
            }
            let key = ((rho - c64(1.0, 0.0)).norm(), -alpha.im.signum());
            if best
                .as_ref()
                .is_none_or(|(k0, k1, _)| (key.0, key.1) < (*k0, *k1))
            {
                best = Some((
                    key.0,
                    key.1,
                    KauffmanDecomposition {
                        alpha,
                        t,
                        loop_d: d.re,
                        rescale: rho,
                    },
                ));
            }
        }
    }
    best.map(|(_, _, dec)| dec).ok_or(TlError::NoRealLoop)
}

/// Spin-operator route to the same generators: T̂₁₂ built from S^± and S^z
/// on two qubits, returned as its 4×4 natural-basis matrix.
pub fn spin_operator_form(family: TLFamily) -> Result<CMatrix, TlError> {
    let zero = c64(0.0, 0.0);
    let one = c64(1.0, 0.0);
    let sp = CMatrix::from_rows(&[vec![zero, one], vec![zero, zero]]);
    let sm = sp.dagger();
    let sz = CMatrix::diag(&[c64(0.5, 0.0), c64(-0.5, 0.0)]);
    let i4 = CMatrix::identity(4);
    let ea = phase(family.alpha_phase);

    let m = match family.tag {
        TLTag::TypeI => {
            // (1/√2)[1 + e^{iα}S⁺S⁺ + e^{-iα}S⁻S⁻ − iε(S⁺S⁻ − S⁻S⁺)];
            // the sign on the iε term is fixed so this equals the 4×4 type-I
            // generator at the same ε.
            let e = family.epsilon.value();
            let pp = sp.kron(&sp).scale(ea);
            let mm = sm.kron(&sm).scale(ea.inv());
            let pm = sp
                .kron(&sm)
                .sub(&sm.kron(&sp))
                .expect("shape")
                .scale(I * (-e));
            i4.add(&pp)
                .and_then(|m| m.add(&mm))
                .and_then(|m| m.add(&pm))
                .expect("shape")
                .scale(c64(1.0 / SQRT_2, 0.0))
        }
        TLTag::TypeII => {
            // ½(1 + 4 SᶻSᶻ) + e^{iα}S⁺S⁺ + e^{-iα}S⁻S⁻
            let zz = sz.kron(&sz).scale(c64(4.0, 0.0));
            let diag = i4.add(&zz).expect("shape").scale(c64(0.5, 0.0));
            diag.add(&sp.kron(&sp).scale(ea))
                .and_then(|m| m.add(&sm.kron(&sm).scale(ea.inv())))
                .expect("shape")
        }
        TLTag::TypeIIPrime => {
            // The primed generator is the V-conjugate of the type-II one.
            let t = spin_operator_form(TLFamily {
                tag: TLTag::TypeII,
                ..family
            })?;
            let v = swap_v();
            &(&v.dagger() * &t) * &v
        }
    };
    Ok(m)
}
