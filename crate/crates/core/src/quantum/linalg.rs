//! Fixed-size dense complex matrices for one- and two-qubit operators.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex;

use crate::scalar::Scalar;

/// Square complex matrix of dimension `N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Operator<T, const N: usize> {
    pub entries: [[Complex<T>; N]; N],
}

pub type Operator2<T> = Operator<T, 2>;
pub type Operator4<T> = Operator<T, 4>;

impl<T: Scalar, const N: usize> Operator<T, N> {
    pub fn zero() -> Self {
        Operator {
            entries: [[Complex::new(T::zero(), T::zero()); N]; N],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.entries[i][i] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_rows(entries: [[Complex<T>; N]; N]) -> Self {
        Operator { entries }
    }

    /// `|v><v|`.
    pub fn outer(v: &[Complex<T>; N]) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.entries[i][j] = v[i] * v[j].conj();
            }
        }
        m
    }

    pub fn scale(&self, s: T) -> Self {
        let mut m = *self;
        for row in &mut m.entries {
            for e in row {
                *e = *e * s;
            }
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.entries[i][j] = self.entries[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex<T> {
        (0..N).fold(Complex::new(T::zero(), T::zero()), |acc, i| acc + self.entries[i][i])
    }

    pub fn apply(&self, v: &[Complex<T>; N]) -> [Complex<T>; N] {
        let mut out = [Complex::new(T::zero(), T::zero()); N];
        for (i, o) in out.iter_mut().enumerate() {
            for j in 0..N {
                *o = *o + self.entries[i][j] * v[j];
            }
        }
        out
    }

    /// `<v|M|v>`.
    pub fn expectation(&self, v: &[Complex<T>; N]) -> Complex<T> {
        let mv = self.apply(v);
        v.iter()
            .zip(mv.iter())
            .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * b)
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for i in 0..N {
            for j in 0..N {
                worst = worst.max((self.entries[i][j] - other.entries[i][j]).norm());
            }
        }
        worst
    }

    /// Largest entrywise modulus of `self - self^dagger`.
    pub fn hermiticity_defect(&self) -> T {
        self.max_abs_diff(&self.adjoint())
    }

    /// Largest entrywise modulus of `self^dagger self - I`.
    pub fn unitarity_defect(&self) -> T {
        (self.adjoint() * *self).max_abs_diff(&Self::identity())
    }

    /// Eigenvalues of a Hermitian matrix, ascending.
    ///
    /// Runs cyclic Jacobi on the real symmetric embedding `[[A, -B], [B, A]]`
    /// of `A + iB`, whose spectrum is that of the matrix with every eigenvalue
    /// doubled.
    pub fn hermitian_eigenvalues(&self) -> Vec<T> {
        let n = 2 * N;
        let mut a = vec![vec![T::zero(); n]; n];
        for i in 0..N {
            for j in 0..N {
                let z = self.entries[i][j];
                a[i][j] = z.re;
                a[i + N][j + N] = z.re;
                a[i][j + N] = -z.im;
                a[i + N][j] = z.im;
            }
        }
        let mut eig = jacobi_eigenvalues(a);
        eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
        eig.into_iter().step_by(2).collect()
    }
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
fn jacobi_eigenvalues<T: Scalar>(mut a: Vec<Vec<T>>) -> Vec<T> {
    let n = a.len();
    for _sweep in 0..100 {
        let off: T = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off <= T::epsilon() * T::epsilon() {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q] == T::zero() {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (T::two() * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}

impl<T: Scalar, const N: usize> Add for Operator<T, N> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.entries[i][j] = self.entries[i][j] + rhs.entries[i][j];
            }
        }
        self
    }
}

impl<T: Scalar, const N: usize> Sub for Operator<T, N> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.entries[i][j] = self.entries[i][j] - rhs.entries[i][j];
            }
        }
        self
    }
}

impl<T: Scalar, const N: usize> Mul for Operator<T, N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                for k in 0..N {
                    m.entries[i][j] = m.entries[i][j] + self.entries[i][k] * rhs.entries[k][j];
                }
            }
        }
        m
    }
}

/// Kronecker product `a ⊗ b`, with `a` acting on the left (most significant) qubit.
pub fn kron<T: Scalar>(a: &Operator2<T>, b: &Operator2<T>) -> Operator4<T> {
    let mut m = Operator4::zero();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    m.entries[2 * i + k][2 * j + l] = a.entries[i][j] * b.entries[k][l];
                }
            }
        }
    }
    m
}
