//! Small dense square matrices over an exact or floating scalar.
//!
//! Everything downstream works with 2×2 and 4×4 matrices, so there is no
//! decomposition machinery here — just arithmetic, conjugate transpose for
//! the complex cases, and exact equality for fixtures.

use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{C64, CRat, Scalar};

/// Square matrix with row-major storage.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zero(n: usize) -> Self {
        Mat {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square matrix expected");
        Mat {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, s: &T) -> Self {
        Mat {
            n: self.n,
            data: self.data.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Kronecker product (self ⊗ rhs).
    pub fn kron(&self, rhs: &Self) -> Self {
        let n = self.n * rhs.n;
        let mut m = Self::zero(n);
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..rhs.n {
                    for l in 0..rhs.n {
                        m.set(
                            i * rhs.n + k,
                            j * rhs.n + l,
                            self.get(i, j).clone() * rhs.get(k, l).clone(),
                        );
                    }
                }
            }
        }
        m
    }

    pub fn trace(&self) -> T {
        let mut t = T::zero();
        for i in 0..self.n {
            t = t + self.get(i, i).clone();
        }
        t
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| {
                let mut s = T::zero();
                for j in 0..self.n {
                    s = s + self.get(i, j).clone() * v[j].clone();
                }
                s
            })
            .collect()
    }
}

impl<T: Scalar> Add for &Mat<T> {
    type Output = Mat<T>;
    fn add(self, rhs: Self) -> Mat<T> {
        assert_eq!(self.n, rhs.n);
        Mat {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Mat<T> {
    type Output = Mat<T>;
    fn sub(self, rhs: Self) -> Mat<T> {
        assert_eq!(self.n, rhs.n);
        Mat {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Neg for &Mat<T> {
    type Output = Mat<T>;
    fn neg(self) -> Mat<T> {
        Mat {
            n: self.n,
            data: self.data.iter().map(|x| -x.clone()).collect(),
        }
    }
}

impl<T: Scalar> Mul for &Mat<T> {
    type Output = Mat<T>;
    fn mul(self, rhs: Self) -> Mat<T> {
        assert_eq!(self.n, rhs.n);
        let mut m = Mat::<T>::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    let cur = m.get(i, j).clone();
                    m.set(i, j, cur + a.clone() * rhs.get(k, j).clone());
                }
            }
        }
        m
    }
}

impl Mat<CRat> {
    pub fn dagger(&self) -> Self {
        self.transpose().map(|z| z.conj())
    }

    pub fn to_c64(&self) -> Mat<C64> {
        self.map(|z| {
            C64::new(
                *z.re.numer() as f64 / *z.re.denom() as f64,
                *z.im.numer() as f64 / *z.im.denom() as f64,
            )
        })
    }
}

impl Mat<C64> {
    pub fn dagger(&self) -> Self {
        self.transpose().map(|z| z.conj())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}
