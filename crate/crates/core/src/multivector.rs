//! Dense multivectors over a generic scalar ring.
//!
//! A multivector of Cl(p,q) is a vector of 2^n coefficients indexed by blade
//! mask. With n ≤ 8 the dense representation costs at most 256 scalars, so
//! there is no sparsity machinery: the geometric product is the plain double
//! loop over nonzero coefficients with the blade-level sign rule.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::algebra::{blade_grade, blade_mul, blade_name, parse_blade, Blade, Signature};
use crate::error::{Error, Result};
use crate::scalar::{rat, rat_str, C64, CRat, Rat, Scalar};

/// Element of Cl(p,q) with coefficients in T.
#[derive(Clone, PartialEq, Debug)]
pub struct Multivector<T> {
    sig: Signature,
    coeffs: Vec<T>,
}

impl<T: Scalar> Multivector<T> {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: vec![T::zero(); sig.dim()],
        }
    }

    pub fn scalar(sig: Signature, value: T) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[0] = value;
        m
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, T::one())
    }

    /// The basis blade e_b with coefficient 1.
    pub fn basis(sig: Signature, b: Blade) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[b as usize] = T::one();
        m
    }

    /// Generator e_i, 1-based.
    pub fn generator(sig: Signature, i: u32) -> Self {
        assert!(i >= 1 && i <= sig.n(), "generator index out of range");
        Self::basis(sig, 1 << (i - 1))
    }

    /// Volume element ω = e_{12…n}.
    pub fn volume(sig: Signature) -> Self {
        Self::basis(sig, sig.volume_mask())
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn coeff(&self, b: Blade) -> &T {
        &self.coeffs[b as usize]
    }

    pub fn set_coeff(&mut self, b: Blade, v: T) {
        self.coeffs[b as usize] = v;
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<T>) -> Self {
        assert_eq!(coeffs.len(), sig.dim(), "coefficient vector length");
        Multivector { sig, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &T) -> Self {
        Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.clone() * s.clone())
                .collect(),
        }
    }

    /// Geometric product with a signature check (the operator impl panics).
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.sig != rhs.sig {
            return Err(Error::SignatureMismatch(
                self.sig.label(),
                rhs.sig.label(),
            ));
        }
        let mut out = Self::zero(self.sig);
        for a in self.sig.blades() {
            let ca = &self.coeffs[a as usize];
            if ca.is_zero() {
                continue;
            }
            for b in self.sig.blades() {
                let cb = &rhs.coeffs[b as usize];
                if cb.is_zero() {
                    continue;
                }
                let (m, sign) = blade_mul(self.sig, a, b);
                let term = ca.clone() * cb.clone();
                let cur = out.coeffs[m as usize].clone();
                out.coeffs[m as usize] = if sign > 0 { cur + term } else { cur - term };
            }
        }
        Ok(out)
    }

    /// Projection onto grade k.
    pub fn grade_part(&self, k: u32) -> Self {
        let mut m = Self::zero(self.sig);
        for b in self.sig.blades() {
            if blade_grade(b) == k {
                m.coeffs[b as usize] = self.coeffs[b as usize].clone();
            }
        }
        m
    }

    /// Projection onto the even subalgebra.
    pub fn even_part(&self) -> Self {
        self.parity_part(0)
    }

    /// Projection onto the odd part.
    pub fn odd_part(&self) -> Self {
        self.parity_part(1)
    }

    fn parity_part(&self, parity: u32) -> Self {
        let mut m = Self::zero(self.sig);
        for b in self.sig.blades() {
            if blade_grade(b) % 2 == parity {
                m.coeffs[b as usize] = self.coeffs[b as usize].clone();
            }
        }
        m
    }

    /// Reversion ã: sign flip on grades ≡ 2, 3 (mod 4).
    pub fn reversion(&self) -> Self {
        self.signed_by_grade(|k| matches!(k % 4, 2 | 3))
    }

    /// Grade involution â: sign flip on odd grades.
    pub fn grade_involution(&self) -> Self {
        self.signed_by_grade(|k| k % 2 == 1)
    }

    /// Clifford conjugation (reversion ∘ grade involution): flip on grades
    /// ≡ 1, 2 (mod 4).
    pub fn conjugation(&self) -> Self {
        self.signed_by_grade(|k| matches!(k % 4, 1 | 2))
    }

    fn signed_by_grade(&self, flip: impl Fn(u32) -> bool) -> Self {
        let mut m = self.clone();
        for b in self.sig.blades() {
            if flip(blade_grade(b)) {
                m.coeffs[b as usize] = -m.coeffs[b as usize].clone();
            }
        }
        m
    }

    /// Map coefficients into another scalar ring.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Multivector<U> {
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl Multivector<Rat> {
    /// Embed into complex-rational coefficients.
    pub fn complexify(&self) -> Multivector<CRat> {
        self.map(|c| CRat::new(*c, rat(0, 1)))
    }

    /// Convert to double precision.
    pub fn to_f64(&self) -> Multivector<f64> {
        self.map(|c| *c.numer() as f64 / *c.denom() as f64)
    }

    /// Random multivector with `terms` nonzero small-rational coefficients
    /// at distinct random blades (used by the exact property tests).
    pub fn random(sig: Signature, rng: &mut impl Rng, terms: usize) -> Self {
        let mut m = Self::zero(sig);
        for _ in 0..terms {
            let b = rng.gen_range(0..sig.dim()) as Blade;
            let num = rng.gen_range(-9i64..=9);
            let den = rng.gen_range(1i64..=4);
            m.coeffs[b as usize] = m.coeffs[b as usize] + rat(num, den);
        }
        m
    }

    /// Random multivector with every coefficient filled in.
    pub fn random_dense(sig: Signature, rng: &mut impl Rng) -> Self {
        let mut m = Self::zero(sig);
        for b in sig.blades() {
            let num = rng.gen_range(-9i64..=9);
            let den = rng.gen_range(1i64..=4);
            m.coeffs[b as usize] = rat(num, den);
        }
        m
    }
}

impl Multivector<CRat> {
    /// Convert to double-precision complex coefficients.
    pub fn to_c64(&self) -> Multivector<C64> {
        self.map(|c| {
            C64::new(
                *c.re.numer() as f64 / *c.re.denom() as f64,
                *c.im.numer() as f64 / *c.im.denom() as f64,
            )
        })
    }

    /// Random complex-rational multivector (distinct random blades).
    pub fn random(sig: Signature, rng: &mut impl Rng, terms: usize) -> Self {
        let re = Multivector::<Rat>::random(sig, rng, terms);
        let im = Multivector::<Rat>::random(sig, rng, terms);
        let mut m = Self::zero(sig);
        for b in sig.blades() {
            m.set_coeff(b, CRat::new(*re.coeff(b), *im.coeff(b)));
        }
        m
    }
}

// ---------------------------------------------------------------------------
// Operators. Binary operators panic on signature mismatch; the fallible
// product is `try_mul`.
// ---------------------------------------------------------------------------

impl<T: Scalar> Add for &Multivector<T> {
    type Output = Multivector<T>;
    fn add(self, rhs: Self) -> Multivector<T> {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in +");
        Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Multivector<T> {
    type Output = Multivector<T>;
    fn sub(self, rhs: Self) -> Multivector<T> {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in -");
        Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Mul for &Multivector<T> {
    type Output = Multivector<T>;
    fn mul(self, rhs: Self) -> Multivector<T> {
        self.try_mul(rhs).expect("signature mismatch in *")
    }
}

impl<T: Scalar> Neg for &Multivector<T> {
    type Output = Multivector<T>;
    fn neg(self) -> Multivector<T> {
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// Text format: `c0 + c1*e1 + c12*e12`, blades ascending by mask. Exact
// round-trip for rational coefficients.
// ---------------------------------------------------------------------------

impl fmt::Display for Multivector<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for b in self.sig.blades() {
            let c = &self.coeffs[b as usize];
            if c.is_zero() {
                continue;
            }
            let mag = if *c.numer() < 0 { -*c } else { *c };
            if first {
                if *c.numer() < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if *c.numer() < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if b == 0 {
                write!(f, "{}", rat_str(&mag))?;
            } else {
                write!(f, "{}*{}", rat_str(&mag), blade_name(b))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Multivector<Rat> {
    /// Parse the text format. Accepts terms `c`, `c*e<digits>`, `e<digits>`,
    /// `-e<digits>` joined by + and −.
    pub fn parse(sig: Signature, s: &str) -> Result<Self> {
        let mut m = Self::zero(sig);
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty multivector text".into()));
        }
        // Split into signed terms. A '-' or '+' at position 0 or after
        // another operator binds to the following term.
        let mut terms: Vec<(i64, String)> = Vec::new();
        let mut sign = 1i64;
        let mut cur = String::new();
        for ch in s.chars() {
            match ch {
                '+' | '-' => {
                    if cur.trim().is_empty() {
                        if ch == '-' {
                            sign = -sign;
                        }
                    } else {
                        terms.push((sign, cur.trim().to_string()));
                        cur.clear();
                        sign = if ch == '-' { -1 } else { 1 };
                    }
                }
                '/' => cur.push('/'),
                _ => cur.push(ch),
            }
        }
        if cur.trim().is_empty() {
            return Err(Error::Parse(format!("dangling operator in {:?}", s)));
        }
        terms.push((sign, cur.trim().to_string()));

        for (sgn, term) in terms {
            let (coeff, blade) = match term.split_once('*') {
                Some((c, b)) => (parse_rat(c.trim())?, parse_blade(b, sig)?),
                None => {
                    if term.starts_with('e') && term.len() > 1 {
                        (rat(1, 1), parse_blade(&term, sig)?)
                    } else {
                        (parse_rat(&term)?, 0)
                    }
                }
            };
            let signed = if sgn < 0 { -coeff } else { coeff };
            m.coeffs[blade as usize] = m.coeffs[blade as usize] + signed;
        }
        Ok(m)
    }
}

fn parse_rat(s: &str) -> Result<Rat> {
    let err = || Error::Parse(format!("bad rational {:?}", s));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| err())?;
            let d: i64 = d.trim().parse().map_err(|_| err())?;
            if d == 0 {
                return Err(err());
            }
            Ok(rat(n, d))
        }
        None => {
            let n: i64 = s.trim().parse().map_err(|_| err())?;
            Ok(rat(n, 1))
        }
    }
}
