//! Dense complex linear algebra on small matrices.
//!
//! Everything here operates on plain `ndarray` arrays of `Complex<T>`; the
//! labeled-space wrappers live in [`crate::state`]. Dimensions in this crate
//! never exceed 2 * 2 * (n_max + 1), so all routines are written for clarity
//! over asymptotic speed.

use crate::error::{Error, Result};
use crate::scalar::{cr, Scalar};
use ndarray::{Array1, Array2};
use num_complex::Complex;

pub type CMatrix<T> = Array2<Complex<T>>;
pub type CVector<T> = Array1<Complex<T>>;

/// n x n identity.
pub fn identity<T: Scalar>(n: usize) -> CMatrix<T> {
    Array2::from_shape_fn((n, n), |(i, j)| {
        if i == j {
            Complex::new(T::one(), T::zero())
        } else {
            Complex::new(T::zero(), T::zero())
        }
    })
}

pub fn zeros<T: Scalar>(rows: usize, cols: usize) -> CMatrix<T> {
    Array2::from_elem((rows, cols), Complex::new(T::zero(), T::zero()))
}

/// Conjugate transpose.
pub fn dag<T: Scalar>(m: &CMatrix<T>) -> CMatrix<T> {
    m.mapv(|z| z.conj()).reversed_axes().as_standard_layout().to_owned()
}

pub fn trace<T: Scalar>(m: &CMatrix<T>) -> Complex<T> {
    m.diag().iter().copied().sum()
}

/// Matrix product.
pub fn mat_mul<T: Scalar>(a: &CMatrix<T>, b: &CMatrix<T>) -> CMatrix<T> {
    a.dot(b)
}

pub fn mat_add<T: Scalar>(a: &CMatrix<T>, b: &CMatrix<T>) -> CMatrix<T> {
    a + b
}

/// Entrywise scaling by a complex factor.
pub fn scale<T: Scalar>(m: &CMatrix<T>, z: Complex<T>) -> CMatrix<T> {
    m.mapv(|x| x * z)
}

/// [a, b] = ab - ba.
pub fn commutator<T: Scalar>(a: &CMatrix<T>, b: &CMatrix<T>) -> CMatrix<T> {
    &a.dot(b) - &b.dot(a)
}

/// Kronecker product, first factor most significant.
pub fn kron<T: Scalar>(a: &CMatrix<T>, b: &CMatrix<T>) -> CMatrix<T> {
    ndarray::linalg::kron(a, b)
}

/// Largest elementwise modulus.
pub fn max_abs<T: Scalar>(m: &CMatrix<T>) -> T {
    m.iter().fold(T::zero(), |acc, z| acc.max(z.norm()))
}

/// Largest elementwise |m - m†|.
pub fn hermiticity_defect<T: Scalar>(m: &CMatrix<T>) -> T {
    let n = m.nrows();
    let mut worst = T::zero();
    for i in 0..n {
        for j in i..n {
            let d = (m[(i, j)] - m[(j, i)].conj()).norm();
            worst = worst.max(d);
        }
    }
    worst
}

/// (m + m†)/2.
pub fn hermitian_part<T: Scalar>(m: &CMatrix<T>) -> CMatrix<T> {
    let half = cr(crate::scalar::fl::<T>(0.5));
    scale(&(m + &dag(m)), half)
}

/// Largest elementwise |a - b|.
pub fn max_abs_diff<T: Scalar>(a: &CMatrix<T>, b: &CMatrix<T>) -> T {
    a.iter()
        .zip(b.iter())
        .fold(T::zero(), |acc, (x, y)| acc.max((*x - *y).norm()))
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order and the matching orthonormal
/// eigenvectors as columns. Inputs with an elementwise Hermiticity defect
/// above [`Scalar::HERMITICITY_TOL`] are rejected with
/// [`Error::NotHermitian`]. For Hermitian input the sweep converges
/// quadratically; at the dimensions used here a handful of sweeps reaches
/// machine precision.
pub fn eig_hermitian<T: Scalar>(m: &CMatrix<T>) -> Result<(Array1<T>, CMatrix<T>)> {
    let defect = hermiticity_defect(m);
    if defect > T::HERMITICITY_TOL {
        return Err(Error::NotHermitian {
            defect: defect.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(eig_hermitian_unchecked(&hermitian_part(m)))
}

/// Jacobi eigensolver core; assumes the input is exactly Hermitian.
pub(crate) fn eig_hermitian_unchecked<T: Scalar>(m: &CMatrix<T>) -> (Array1<T>, CMatrix<T>) {
    let n = m.nrows();
    let mut a = m.clone();
    let mut v = identity::<T>(n);
    if n > 1 {
        let frob = a.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        let stop = T::epsilon() * frob.max(T::one());
        let skip = stop * crate::scalar::fl::<T>(1e-3);
        for _sweep in 0..64 {
            if off_diagonal_norm(&a) <= stop {
                break;
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    let apq = a[(p, q)];
                    let mag = apq.norm();
                    if mag <= skip {
                        continue;
                    }
                    // Unitary 2x2 rotation annihilating a[p, q]. With
                    // a[p,q] = |a| e^{i phi}, the real Jacobi angle applies to
                    // the phase-stripped block.
                    let phase = apq / cr(mag);
                    let tau = (a[(q, q)].re - a[(p, p)].re) / (mag + mag);
                    let t = if tau.is_zero() {
                        T::one()
                    } else {
                        tau.signum() / (tau.abs() + (T::one() + tau * tau).sqrt())
                    };
                    let c = T::one() / (T::one() + t * t).sqrt();
                    let s = t * c;
                    let sp = phase * cr(s);
                    // Column update: A <- A J, V <- V J.
                    for k in 0..n {
                        let akp = a[(k, p)];
                        let akq = a[(k, q)];
                        a[(k, p)] = akp * cr(c) - akq * sp.conj();
                        a[(k, q)] = akp * sp + akq * cr(c);
                        let vkp = v[(k, p)];
                        let vkq = v[(k, q)];
                        v[(k, p)] = vkp * cr(c) - vkq * sp.conj();
                        v[(k, q)] = vkp * sp + vkq * cr(c);
                    }
                    // Row update: A <- J† A.
                    for k in 0..n {
                        let apk = a[(p, k)];
                        let aqk = a[(q, k)];
                        a[(p, k)] = apk * cr(c) - aqk * sp;
                        a[(q, k)] = apk * sp.conj() + aqk * cr(c);
                    }
                    a[(p, q)] = Complex::new(T::zero(), T::zero());
                    a[(q, p)] = Complex::new(T::zero(), T::zero());
                    a[(p, p)] = cr(a[(p, p)].re);
                    a[(q, q)] = cr(a[(q, q)].re);
                }
            }
        }
    }
    // Sort ascending, permuting eigenvector columns alongside.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(i, i)]
            .re
            .partial_cmp(&a[(j, j)].re)
            .expect("eigenvalues of a Hermitian matrix are finite")
    });
    let values = Array1::from_iter(order.iter().map(|&i| a[(i, i)].re));
    let vectors = Array2::from_shape_fn((n, n), |(r, c)| v[(r, order[c])]);
    (values, vectors)
}

fn off_diagonal_norm<T: Scalar>(a: &CMatrix<T>) -> T {
    let n = a.nrows();
    let mut acc = T::zero();
    for p in 0..n {
        for q in 0..n {
            if p != q {
                acc = acc + a[(p, q)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cx;

    fn sigma_x() -> CMatrix<f64> {
        ndarray::array![
            [cx(0.0, 0.0), cx(1.0, 0.0)],
            [cx(1.0, 0.0), cx(0.0, 0.0)]
        ]
    }

    #[test]
    fn eig_of_diagonal_is_the_diagonal() {
        let m = ndarray::array![
            [cx::<f64>(0.25, 0.0), cx(0.0, 0.0)],
            [cx(0.0, 0.0), cx(0.75, 0.0)]
        ];
        let (vals, _) = eig_hermitian(&m).unwrap();
        assert!((vals[0] - 0.25).abs() < 1e-14);
        assert!((vals[1] - 0.75).abs() < 1e-14);
    }

    #[test]
    fn pauli_x_spectrum() {
        let (vals, vecs) = eig_hermitian(&sigma_x()).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-12);
        assert!((vals[1] - 1.0).abs() < 1e-12);
        // Orthonormal columns.
        let gram = mat_mul(&dag(&vecs), &vecs);
        assert!(max_abs_diff(&gram, &identity(2)) < 1e-12);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ndarray::array![
            [cx::<f64>(0.0, 0.0), cx(1.0, 0.0)],
            [cx(0.0, 0.0), cx(0.0, 0.0)]
        ];
        assert!(matches!(eig_hermitian(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn dag_is_an_involution() {
        let m = ndarray::array![
            [cx::<f64>(1.0, 2.0), cx(-0.5, 0.25)],
            [cx(0.0, -1.0), cx(2.0, 0.125)]
        ];
        assert_eq!(dag(&dag(&m)), m);
    }

    #[test]
    fn identity_is_neutral() {
        let m = ndarray::array![
            [cx::<f64>(1.0, 2.0), cx(-0.5, 0.25)],
            [cx(0.0, -1.0), cx(2.0, 0.125)]
        ];
        assert_eq!(mat_mul(&identity(2), &m), m);
    }

    #[test]
    fn works_in_f32() {
        let m = ndarray::array![
            [cx::<f32>(0.25, 0.0), cx(0.0, 0.0)],
            [cx(0.0, 0.0), cx(0.75, 0.0)]
        ];
        let (vals, _) = eig_hermitian(&m).unwrap();
        assert!((vals[1] - 0.75).abs() < 1e-6);
    }
}
