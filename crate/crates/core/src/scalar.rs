//! Scalar rings the algebra is generic over.
//!
//! Four kinds of coefficients appear throughout: exact rationals (the default
//! for every identity that is exact), complex rationals (projectors that need
//! a genuine imaginary unit), double precision (grids and meshes), and double
//! numbers a + e·b with e² = +1, the commutative ring R ⊕ R in disguise. The
//! double numbers are genuinely needed: the restricted spinor fields on
//! surfaces whose ζ₁ζ₂ squares to +1 have coordinate rings over Ω = R ⊕ R,
//! not over C.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Zero};

/// Exact rational scalar. i128 numerators survive every product this crate
/// forms (coefficients stay tiny; blades contribute only ±1 signs).
pub type Rat = Ratio<i128>;

/// Complexified rational scalar.
pub type CRat = Complex<Rat>;

/// Double-precision complex scalar for the numerical layers.
pub type C64 = Complex<f64>;

/// Shorthand constructor for an exact rational.
pub fn rat(num: i64, den: i64) -> Rat {
    Ratio::new(num as i128, den as i128)
}

/// Shorthand constructor for a complex rational.
pub fn crat(re: Rat, im: Rat) -> CRat {
    Complex::new(re, im)
}

/// Render a rational as `n` or `n/d` (canonical reduced form).
pub fn rat_str(r: &Rat) -> String {
    if r.denom() == &1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Coefficient ring for multivectors: commutative, unital, with exact
/// equality. Everything here is by-value arithmetic on small values.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Embed the rational num/den. `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_int(v: i64) -> Self {
        Self::from_ratio(v, 1)
    }
}

/// Scalars with exact division, as needed by Gaussian elimination.
/// `inv` must only be called on nonzero elements.
pub trait ExactField: Scalar {
    fn inv(&self) -> Self;
}

impl Scalar for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(self)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        rat(num, den)
    }
}

impl ExactField for Rat {
    fn inv(&self) -> Self {
        <Rat as num_traits::Inv>::inv(*self)
    }
}

impl Scalar for CRat {
    fn zero() -> Self {
        Complex::new(<Rat as Scalar>::zero(), <Rat as Scalar>::zero())
    }
    fn one() -> Self {
        Complex::new(<Rat as Scalar>::one(), <Rat as Scalar>::zero())
    }
    fn is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(&self.re) && <Rat as Zero>::is_zero(&self.im)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(rat(num, den), <Rat as Scalar>::zero())
    }
}

impl ExactField for CRat {
    fn inv(&self) -> Self {
        // 1/(a+bi) = (a-bi)/(a²+b²), exactly.
        let n = self.re * self.re + self.im * self.im;
        Complex::new(self.re / n, -self.im / n)
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
}

impl ExactField for f64 {
    fn inv(&self) -> Self {
        1.0 / self
    }
}

impl Scalar for C64 {
    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(num as f64 / den as f64, 0.0)
    }
}

impl ExactField for C64 {
    fn inv(&self) -> Self {
        self.finv()
    }
}

/// Double number a + e·b over a base ring, with e² = +1. Multiplication is
/// (a+eb)(c+ed) = (ac+bd) + e(ad+bc). Not a field: (1+e)(1−e) = 0.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Double<T> {
    pub a: T,
    pub b: T,
}

impl<T: Scalar> Double<T> {
    pub fn new(a: T, b: T) -> Self {
        Double { a, b }
    }

    /// The hyperbolic unit e itself.
    pub fn unit() -> Self {
        Double {
            a: T::zero(),
            b: T::one(),
        }
    }

    /// Conjugation a + eb ↦ a − eb.
    pub fn conj(&self) -> Self {
        Double {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// The idempotent pair (a±b)/2 coordinates: a + eb ↦ (a+b, a−b),
    /// exhibiting Ω ≅ R ⊕ R.
    pub fn split(&self) -> (T, T) {
        (
            self.a.clone() + self.b.clone(),
            self.a.clone() - self.b.clone(),
        )
    }
}

impl<T: Scalar> Add for Double<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Double {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl<T: Scalar> Sub for Double<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Double {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl<T: Scalar> Mul for Double<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Double {
            a: self.a.clone() * rhs.a.clone() + self.b.clone() * rhs.b.clone(),
            b: self.a * rhs.b + self.b * rhs.a,
        }
    }
}

impl<T: Scalar> Neg for Double<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Double {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl<T: Scalar> Scalar for Double<T> {
    fn zero() -> Self {
        Double {
            a: T::zero(),
            b: T::zero(),
        }
    }
    fn one() -> Self {
        Double {
            a: T::one(),
            b: T::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Double {
            a: T::from_ratio(num, den),
            b: T::zero(),
        }
    }
}
