//! Structure classification of Cl(p,q).
//!
//! The square of the volume element ω = e_{12…n} depends only on p−q mod 8,
//! and drives everything else here: for even n it splits the simple algebras
//! into "positive" (ω² = +1) and "negative" (ω² = −1) classes; for odd n it
//! decides whether the center {1, ω} is R⊕R (the algebra splits into two
//! ideals cut out by ½(1±ω)) or C (the algebra is a complex matrix algebra
//! in disguise). The full matrix-algebra type M_m(K) or M_m(K)⊕M_m(K) with
//! K ∈ {R, C, H} is the usual eightfold pattern in p−q mod 8.

use serde::Serialize;

use crate::algebra::{blade_mul, Signature};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::{rat, Rat};

/// ω² by explicit blade product. Accepts raw (p, q) so the degenerate
/// n = 0 case (ω = 1) can participate in exhaustive sweeps.
pub fn volume_square(p: u32, q: u32) -> i32 {
    if p + q == 0 {
        return 1;
    }
    let sig = Signature::new(p, q).expect("n in 1..=8");
    let v = sig.volume_mask();
    let (m, s) = blade_mul(sig, v, v);
    debug_assert_eq!(m, 0);
    s
}

/// ω² from the mod-8 residue of p−q alone: −1 exactly when
/// (p−q) mod 8 ∈ {2, 3, 6, 7}. Equivalent to (−1)^{n(n−1)/2 + q}.
pub fn volume_square_mod8(p: u32, q: u32) -> i32 {
    match (p as i64 - q as i64).rem_euclid(8) {
        2 | 3 | 6 | 7 => -1,
        _ => 1,
    }
}

/// Sign class of an even-dimensional algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Positivity {
    Positive,
    Negative,
    NotApplicable,
}

/// Positive if n is even and ω² = +1, negative if n is even and ω² = −1;
/// meaningless for odd n (ω is then central, not grade-reversing).
pub fn positivity_class(p: u32, q: u32) -> Positivity {
    if (p + q) % 2 == 1 {
        Positivity::NotApplicable
    } else if volume_square_mod8(p, q) == 1 {
        Positivity::Positive
    } else {
        Positivity::Negative
    }
}

/// Structure of an odd-dimensional Cl(p,q), decided by ω².
#[derive(Clone, PartialEq, Debug)]
pub enum OddStructure {
    /// ω² = +1: the center is R⊕R and the algebra splits into the two-sided
    /// ideals cut out by the central idempotents ½(1+ω) and ½(1−ω).
    Splits {
        plus: Multivector<Rat>,
        minus: Multivector<Rat>,
    },
    /// ω² = −1: the center is C and the algebra is the complexification of
    /// the one-lower-dimensional even pattern.
    Complexifies,
}

impl OddStructure {
    pub fn tag(&self) -> &'static str {
        match self {
            OddStructure::Splits { .. } => "splits",
            OddStructure::Complexifies => "complexifies",
        }
    }
}

/// Classify an odd-dimensional algebra. Splits when (p−q) mod 8 ∈ {1, 5},
/// complexifies when (p−q) mod 8 ∈ {3, 7}.
pub fn classify_odd(sig: Signature) -> Result<OddStructure> {
    if sig.n() % 2 == 0 {
        return Err(Error::InvalidSignature {
            p: sig.p() as i64,
            q: sig.q() as i64,
        });
    }
    if volume_square(sig.p(), sig.q()) == 1 {
        let half = rat(1, 2);
        let one = Multivector::one(sig);
        let omega = Multivector::volume(sig);
        let plus = (&one + &omega).scale(&half);
        let minus = (&one - &omega).scale(&half);
        Ok(OddStructure::Splits { plus, minus })
    } else {
        Ok(OddStructure::Complexifies)
    }
}

/// The coefficient ring of the matrix-algebra form.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum RingTag {
    R,
    C,
    H,
}

impl RingTag {
    /// Real dimension of the ring.
    pub fn dim_r(self) -> usize {
        match self {
            RingTag::R => 1,
            RingTag::C => 2,
            RingTag::H => 4,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            RingTag::R => "R",
            RingTag::C => "C",
            RingTag::H => "H",
        }
    }
}

/// Matrix-algebra form of Cl(p,q): `factors` copies of M_m(K).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct MatrixClass {
    pub factors: u32,
    pub m: u32,
    pub ring: RingTag,
}

impl MatrixClass {
    pub fn label(self) -> String {
        let one = format!("M{}({})", self.m, self.ring.label());
        if self.factors == 2 {
            format!("{} + {}", one, one)
        } else {
            one
        }
    }
}

/// The eightfold matrix-type pattern in (p−q) mod 8, with the matrix size m
/// fixed by dimension count: factors · m² · dim_R(K) = 2^n.
pub fn matrix_class(p: u32, q: u32) -> MatrixClass {
    let (factors, ring) = match (p as i64 - q as i64).rem_euclid(8) {
        0 | 2 => (1, RingTag::R),
        1 => (2, RingTag::R),
        3 | 7 => (1, RingTag::C),
        4 | 6 => (1, RingTag::H),
        5 => (2, RingTag::H),
        _ => unreachable!(),
    };
    let total = 1usize << (p + q);
    let m2 = total / (factors as usize * ring.dim_r());
    let m = (m2 as f64).sqrt().round() as u32;
    debug_assert_eq!((m as usize) * (m as usize), m2);
    MatrixClass { factors, m, ring }
}
