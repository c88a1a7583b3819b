//! Minimal dense complex-matrix kernel.
//!
//! Everything in this crate moves through [`CMatrix`]: a row-major dense
//! matrix of `Complex64` entries, at most 16×16 in practice. The kernel
//! provides products, adjoints, Kronecker and entrywise products, a matrix
//! exponential, and the max-abs-entry residual norm used by every
//! verification routine. All operations are pure; nothing here is clever
//! about sparsity or conditioning because the matrices never warrant it.

use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Complex scalar used throughout the crate.
pub type C64 = Complex64;

/// Shorthand for building a complex scalar.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// The imaginary unit.
pub const I: C64 = C64::new(0.0, 1.0);

/// Unit phase e^{iθ}.
#[inline]
pub fn phase(theta: f64) -> C64 {
    C64::from_polar(1.0, theta)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CxmatError {
    #[error("shape mismatch: left is {0}x{1}, right is {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("entry data has length {got}, expected {rows}x{cols} = {expected}")]
    BadLength {
        rows: usize,
        cols: usize,
        got: usize,
        expected: usize,
    },
    #[error("non-finite entry at ({0}, {1})")]
    NonFinite(usize, usize),
}

/// Dense complex matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl CMatrix {
    /// Build from row-major data, rejecting length mismatches and NaN/Inf.
    pub fn new(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self, CxmatError> {
        if data.len() != rows * cols {
            return Err(CxmatError::BadLength {
                rows,
                cols,
                got: data.len(),
                expected: rows * cols,
            });
        }
        for (k, z) in data.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(CxmatError::NonFinite(k / cols, k % cols));
            }
        }
        Ok(Self { rows, cols, data })
    }

    /// Build from nested row slices. Panics on ragged input or non-finite
    /// entries; intended for literal matrices.
    pub fn from_rows(rows: &[Vec<C64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Self::new(r, c, data).expect("literal matrix must be finite")
    }

    /// Real-valued literal, promoted to complex.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        let promoted: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| c64(x, 0.0)).collect())
            .collect();
        Self::from_rows(&promoted)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c64(1.0, 0.0);
        }
        m
    }

    pub fn diag(entries: &[C64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &z) in entries.iter().enumerate() {
            m[(i, i)] = z;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Standard complex matrix product.
    pub fn matmul(&self, rhs: &CMatrix) -> Result<CMatrix, CxmatError> {
        if self.cols != rhs.rows {
            return Err(CxmatError::ShapeMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn conj(&self) -> CMatrix {
        let data = self.data.iter().map(|z| z.conj()).collect();
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Kronecker product: `(a⊗b)[(i·p+k),(j·q+l)] = a[i,j]·b[k,l]` for `b` of shape p×q.
    pub fn kron(&self, rhs: &CMatrix) -> CMatrix {
        let (p, q) = (rhs.rows, rhs.cols);
        let mut out = CMatrix::zeros(self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        out[(i * p + k, j * q + l)] = a * rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Entrywise (Hadamard) product.
    pub fn hadamard(&self, rhs: &CMatrix) -> Result<CMatrix, CxmatError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(CxmatError::ShapeMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a * b)
            .collect();
        Ok(CMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: C64) -> CMatrix {
        let data = self.data.iter().map(|z| z * s).collect();
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn add(&self, rhs: &CMatrix) -> Result<CMatrix, CxmatError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(CxmatError::ShapeMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, rhs: &CMatrix) -> Result<CMatrix, CxmatError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(CxmatError::ShapeMismatch(
                self.rows, self.cols, rhs.rows, rhs.cols,
            ));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max-absolute-entry norm of the difference; the canonical residual.
    pub fn residual(&self, rhs: &CMatrix) -> Result<f64, CxmatError> {
        Ok(self.sub(rhs)?.max_abs())
    }

    /// `‖a·a† − I‖` in the max-abs norm.
    pub fn unitarity_residual(&self) -> f64 {
        let prod = self.matmul(&self.dagger()).expect("square product");
        prod.sub(&CMatrix::identity(self.rows))
            .expect("same shape")
            .max_abs()
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.is_square() && self.unitarity_residual() <= tol
    }

    /// Induced infinity norm (max absolute row sum); used to pick the expm scaling.
    fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Matrix exponential by scaling-and-squaring over a fixed-degree Taylor
    /// series: scale so that `‖a/2^s‖_inf ≤ 0.5`, sum 18 terms, square back.
    /// Accurate to better than 1e-13 relative for `‖a‖ ≤ 10`.
    pub fn expm(&self) -> Result<CMatrix, CxmatError> {
        if !self.is_square() {
            return Err(CxmatError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let norm = self.norm_inf();
        let s = if norm > 0.5 {
            (norm / 0.5).log2().ceil() as u32
        } else {
            0
        };
        let scaled = self.scale(c64(0.5f64.powi(s as i32), 0.0));

        let mut result = CMatrix::identity(n);
        let mut term = CMatrix::identity(n);
        for k in 1..=18u32 {
            term = term.matmul(&scaled)?.scale(c64(1.0 / k as f64, 0.0));
            result = result.add(&term)?;
        }
        for _ in 0..s {
            result = result.matmul(&result)?;
        }
        Ok(result)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[C64]) -> Result<Vec<C64>, CxmatError> {
        if v.len() != self.cols {
            return Err(CxmatError::ShapeMismatch(self.rows, self.cols, v.len(), 1));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Index of the entry with the largest magnitude.
    pub fn argmax_abs(&self) -> (usize, usize) {
        let mut best = (0, 0);
        let mut best_v = -1.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self[(i, j)].norm();
                if v > best_v {
                    best_v = v;
                    best = (i, j);
                }
            }
        }
        best
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

impl std::ops::Mul<&CMatrix> for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        self.matmul(rhs).expect("matrix product shape mismatch")
    }
}

/// Serialized as nested rows of two-element `[re, im]` arrays.
impl Serialize for CMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<[f64; 2]> = self.row(i).iter().map(|z| [z.re, z.im]).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// Braid residual `‖aba − bab‖` for same-shaped square matrices.
pub fn braid_residual(a: &CMatrix, b: &CMatrix) -> f64 {
    let aba = &(a * b) * a;
    let bab = &(b * a) * b;
    aba.residual(&bab).expect("same shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pauli_x() -> CMatrix {
        CMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]])
    }

    /// The 2x2 basis rotation V = (1/sqrt2) [[1, i], [i, 1]].
    fn v2() -> CMatrix {
        let s = 1.0 / 2.0_f64.sqrt();
        CMatrix::from_rows(&[
            vec![c64(s, 0.0), c64(0.0, s)],
            vec![c64(0.0, s), c64(s, 0.0)],
        ])
    }

    #[test]
    fn matmul_identity_and_involution() {
        let i2 = CMatrix::identity(2);
        assert_eq!(i2.matmul(&i2).unwrap(), i2);
        let x = pauli_x();
        assert!(x.matmul(&x).unwrap().residual(&i2).unwrap() < 1e-15);
    }

    #[test]
    fn matmul_unitarity_of_v() {
        let v = v2();
        let prod = v.matmul(&v.dagger()).unwrap();
        assert!(prod.residual(&CMatrix::identity(2)).unwrap() < 1e-15);
    }

    #[test]
    fn matmul_shape_error() {
        let a = CMatrix::zeros(2, 3);
        let b = CMatrix::zeros(2, 3);
        assert!(matches!(a.matmul(&b), Err(CxmatError::ShapeMismatch(..))));
    }

    #[test]
    fn dagger_basics() {
        let i2 = CMatrix::identity(2);
        assert_eq!(i2.dagger(), i2);
        let n = CMatrix::from_rows(&[vec![c64(0.0, 0.0), I], vec![c64(0.0, 0.0); 2]]);
        let expected =
            CMatrix::from_rows(&[vec![c64(0.0, 0.0); 2], vec![c64(0.0, -1.0), c64(0.0, 0.0)]]);
        assert_eq!(n.dagger(), expected);
        assert_eq!(n.dagger().dagger(), n);
        // dagger(V)·V = I, by direct 2x2 arithmetic.
        let v = v2();
        assert!(
            v.dagger()
                .matmul(&v)
                .unwrap()
                .residual(&CMatrix::identity(2))
                .unwrap()
                < 1e-15
        );
    }

    #[test]
    fn kron_identities() {
        let i2 = CMatrix::identity(2);
        assert_eq!(i2.kron(&i2), CMatrix::identity(4));
        let d = CMatrix::diag(&[c64(1.0, 0.0), c64(2.0, 0.0)]);
        let expected = CMatrix::diag(&[c64(1.0, 0.0), c64(1.0, 0.0), c64(2.0, 0.0), c64(2.0, 0.0)]);
        assert_eq!(d.kron(&i2), expected);
    }

    #[test]
    fn hadamard_ones_and_zeros() {
        let a = CMatrix::from_rows(&[vec![c64(1.0, 2.0), c64(-0.5, 0.0)], vec![I, c64(3.0, 0.0)]]);
        let ones = CMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]);
        assert_eq!(a.hadamard(&ones).unwrap(), a);
        let zeros = CMatrix::zeros(2, 2);
        assert_eq!(zeros.hadamard(&a).unwrap(), zeros);
        assert!(a.hadamard(&CMatrix::zeros(3, 2)).is_err());
    }

    #[test]
    fn expm_trivial_cases() {
        let z = CMatrix::zeros(3, 3);
        assert!(z.expm().unwrap().residual(&CMatrix::identity(3)).unwrap() < 1e-15);
        let d = CMatrix::diag(&[c64(0.0, std::f64::consts::PI), c64(0.0, 0.0)]);
        let expected = CMatrix::diag(&[c64(-1.0, 0.0), c64(1.0, 0.0)]);
        assert!(d.expm().unwrap().residual(&expected).unwrap() < 1e-14);
        assert!(CMatrix::zeros(2, 3).expm().is_err());
    }

    #[test]
    fn expm_matches_su2_rotation_closed_form() {
        // exp(xi J+ - xi* J-) in the 2-dim rep against the closed 2x2 form.
        let (theta, phi) = (1.1, 0.7);
        let xi = c64(theta / 2.0, 0.0) * phase(-phi);
        let jp = CMatrix::from_rows(&[vec![c64(0.0, 0.0), c64(1.0, 0.0)], vec![c64(0.0, 0.0); 2]]);
        let jm = jp.dagger();
        let m = jp.scale(xi).sub(&jm.scale(xi.conj())).unwrap();
        let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
        let closed = CMatrix::from_rows(&[
            vec![c64(c, 0.0), phase(-phi) * s],
            vec![phase(phi) * (-s), c64(c, 0.0)],
        ]);
        assert!(m.expm().unwrap().residual(&closed).unwrap() < 1e-14);
    }

    #[test]
    fn expm_stays_accurate_at_norm_ten() {
        // generator with K² = −1, so exp(tK) = cos t + sin t·K exactly
        let k = CMatrix::from_real_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]);
        let t = 10.0f64;
        let expected = CMatrix::identity(2)
            .scale(c64(t.cos(), 0.0))
            .add(&k.scale(c64(t.sin(), 0.0)))
            .unwrap();
        let got = k.scale(c64(t, 0.0)).expm().unwrap();
        assert!(got.residual(&expected).unwrap() < 1e-13);
    }

    #[test]
    fn residual_basics() {
        let i2 = CMatrix::identity(2);
        assert_eq!(i2.residual(&i2).unwrap(), 0.0);
        assert_eq!(i2.residual(&i2.scale(c64(2.0, 0.0))).unwrap(), 1.0);
        assert!(i2.residual(&CMatrix::identity(3)).is_err());
    }

    #[test]
    fn braid_residual_of_canonical_pair() {
        // A = (1/sqrt2)[[1,1],[-1,1]], B = (1/sqrt2)[[1,-i],[-i,1]] satisfy ABA = BAB.
        let s = 1.0 / 2.0_f64.sqrt();
        let a = CMatrix::from_real_rows(&[vec![s, s], vec![-s, s]]);
        let b = CMatrix::from_rows(&[
            vec![c64(s, 0.0), c64(0.0, -s)],
            vec![c64(0.0, -s), c64(s, 0.0)],
        ]);
        assert!(braid_residual(&a, &b) < 1e-12);
    }

    #[test]
    fn constructors_reject_bad_input() {
        assert!(matches!(
            CMatrix::new(2, 2, vec![c64(1.0, 0.0); 3]),
            Err(CxmatError::BadLength { .. })
        ));
        assert!(matches!(
            CMatrix::new(1, 2, vec![c64(f64::NAN, 0.0), c64(0.0, 0.0)]),
            Err(CxmatError::NonFinite(0, 0))
        ));
    }

    fn small_c64() -> impl Strategy<Value = C64> {
        (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| c64(re, im))
    }

    fn mat2() -> impl Strategy<Value = CMatrix> {
        proptest::collection::vec(small_c64(), 4).prop_map(|d| CMatrix::new(2, 2, d).unwrap())
    }

    proptest! {
        #[test]
        fn kron_is_associative(a in mat2(), b in mat2(), c in mat2()) {
            let left = a.kron(&b).kron(&c);
            let right = a.kron(&b.kron(&c));
            prop_assert!(left.residual(&right).unwrap() < 1e-14);
        }

        #[test]
        fn dagger_antihomomorphism(a in mat2(), b in mat2()) {
            let left = a.matmul(&b).unwrap().dagger();
            let right = b.dagger().matmul(&a.dagger()).unwrap();
            prop_assert!(left.residual(&right).unwrap() < 1e-14);
        }

        #[test]
        fn expm_inverse(a in mat2()) {
            // ‖a‖ ≤ 2 is guaranteed by the entry bounds above only loosely; rescale.
            let a = a.scale(c64(0.4, 0.0));
            let e = a.expm().unwrap();
            let einv = a.scale(c64(-1.0, 0.0)).expm().unwrap();
            prop_assert!(e.matmul(&einv).unwrap().residual(&CMatrix::identity(2)).unwrap() < 1e-12);
        }
    }
}
