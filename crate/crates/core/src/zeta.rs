//! Splitting a 4D Clifford algebra over a distinguished plane.
//!
//! For a surface spanned by two of the four generators, the algebra breaks up
//! as a rank-4 module over the subalgebra generated by that pair: two grade-3
//! units ζ1, ζ2 commute with everything in the plane's subalgebra, and the
//! four units {1, ζ1, ζ2, ζ1ζ2} carry the sixteen blades bijectively onto
//! (plane subalgebra) × (units).  Depending on the ambient metric and the
//! plane, the pair (ζ1, ζ2, ζ1ζ2) squares like quaternion units, like
//! split (pseudo) units, or like an anti-quaternion triple; when (ζ1ζ2)²=+1
//! the spectral projectors ½(1±ζ1ζ2) are real, otherwise a complex unit is
//! needed: ½(1±iζ1ζ2).
//!
//! Each supported combination of ambient signature and plane signature is an
//! *immersion case*; enumerating the planes with a definite or neutral
//! induced metric inside the five four-dimensional signatures of interest
//! gives nine cases.

use crate::algebra::{blade_mul, Blade, Signature};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::{crat, rat, CRat, Rat, Scalar};

// ---------------------------------------------------------------------------
// case enumeration
// ---------------------------------------------------------------------------

/// Supported (plane signature, ambient signature) combinations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ImmersionCase {
    /// Lorentz plane in (1,3).
    S11M13,
    /// Negative-definite plane in (1,3).
    S02M13,
    /// Lorentz plane in (3,1).
    S11M31,
    /// Positive-definite plane in (3,1).
    S20M31,
    /// Positive-definite plane in (2,2).
    S20M22,
    /// Negative-definite plane in (2,2).
    S02M22,
    /// Lorentz plane in (2,2).
    S11M22,
    /// Plane in Euclidean four-space.
    S20M40,
    /// Plane in anti-Euclidean four-space.
    S02M04,
}

struct CaseData {
    p: u32,
    q: u32,
    /// Generator indices (1-based) spanning the plane.
    inner: (u32, u32),
    zeta1: Blade,
    zeta2: Blade,
}

fn case_data(case: ImmersionCase) -> CaseData {
    use ImmersionCase::*;
    match case {
        S11M13 => CaseData { p: 1, q: 3, inner: (1, 2), zeta1: 0b0111, zeta2: 0b1011 },
        S02M13 => CaseData { p: 1, q: 3, inner: (3, 4), zeta1: 0b1101, zeta2: 0b1110 },
        S11M31 => CaseData { p: 3, q: 1, inner: (3, 4), zeta1: 0b1101, zeta2: 0b1110 },
        S20M31 => CaseData { p: 3, q: 1, inner: (1, 2), zeta1: 0b1011, zeta2: 0b0111 },
        S20M22 => CaseData { p: 2, q: 2, inner: (1, 2), zeta1: 0b0111, zeta2: 0b1011 },
        S02M22 => CaseData { p: 2, q: 2, inner: (3, 4), zeta1: 0b1101, zeta2: 0b1110 },
        S11M22 => CaseData { p: 2, q: 2, inner: (1, 3), zeta1: 0b0111, zeta2: 0b1101 },
        S20M40 => CaseData { p: 4, q: 0, inner: (1, 2), zeta1: 0b0111, zeta2: 0b1011 },
        S02M04 => CaseData { p: 0, q: 4, inner: (1, 2), zeta1: 0b0111, zeta2: 0b1011 },
    }
}

impl ImmersionCase {
    pub fn all() -> [ImmersionCase; 9] {
        use ImmersionCase::*;
        [
            S11M13, S02M13, S11M31, S20M31, S20M22, S02M22, S11M22, S20M40, S02M04,
        ]
    }

    /// Stable text tag, e.g. `s11-in-m13`.
    pub fn tag(self) -> &'static str {
        use ImmersionCase::*;
        match self {
            S11M13 => "s11-in-m13",
            S02M13 => "s02-in-m13",
            S11M31 => "s11-in-m31",
            S20M31 => "s20-in-m31",
            S20M22 => "s20-in-m22",
            S02M22 => "s02-in-m22",
            S11M22 => "s11-in-m22",
            S20M40 => "s20-in-m40",
            S02M04 => "s02-in-m04",
        }
    }

    pub fn parse(s: &str) -> Result<ImmersionCase> {
        let norm = s.trim().to_ascii_lowercase();
        ImmersionCase::all()
            .into_iter()
            .find(|c| c.tag() == norm)
            .ok_or_else(|| {
                Error::UnknownCase(format!(
                    "{} (expected one of: {})",
                    s,
                    ImmersionCase::all().map(|c| c.tag()).join(", ")
                ))
            })
    }

    pub fn ambient(self) -> Signature {
        let d = case_data(self);
        Signature::new(d.p, d.q).expect("case table holds valid signatures")
    }

    /// Generator indices (1-based) spanning the plane.
    pub fn plane_generators(self) -> (u32, u32) {
        case_data(self).inner
    }

    /// Signature (r,s) induced on the plane by the ambient metric.
    pub fn plane_signature(self) -> (u32, u32) {
        let sig = self.ambient();
        let (a, b) = self.plane_generators();
        let mut r = 0;
        let mut s = 0;
        for i in [a, b] {
            if sig.gen_square(i) > 0 {
                r += 1;
            } else {
                s += 1;
            }
        }
        (r, s)
    }
}

// ---------------------------------------------------------------------------
// decomposition over the plane subalgebra
// ---------------------------------------------------------------------------

/// The two grade-3 units for an immersion case together with the exact
/// bookkeeping needed to split arbitrary elements.
#[derive(Clone, Debug)]
pub struct Decomposition {
    case: ImmersionCase,
    sig: Signature,
    zeta_blades: [Blade; 2],
    zeta_squares: [i32; 2],
    /// ζ1ζ2 as (blade, sign).
    zeta12: (Blade, i32),
    zeta12_square: i32,
    /// Blades spanning the plane subalgebra: 1, e_a, e_b, e_a e_b.
    inner_masks: [Blade; 4],
    /// table[i][j] = (blade, sign) with inner_j · unit_i = sign · blade,
    /// where unit_0..3 = 1, ζ1, ζ2, ζ1ζ2.
    table: [[(Blade, i32); 4]; 4],
}

/// Build and validate the unit pair for a case.
///
/// Everything declared in the case table is re-derived here: the units must
/// commute with the plane subalgebra, their squares and the square of their
/// product are computed (not assumed), and the sixteen products
/// (inner blade)·(unit) must hit all sixteen blades of the algebra exactly
/// once.  A violation means the case table is corrupt, so it is an error,
/// not a panic.
pub fn find_zeta_units(case: ImmersionCase) -> Result<Decomposition> {
    let data = case_data(case);
    let sig = Signature::new(data.p, data.q)?;
    let (ga, gb) = data.inner;
    let ma: Blade = 1 << (ga - 1);
    let mb: Blade = 1 << (gb - 1);
    let inner_masks = [0, ma, mb, ma | mb];

    // commutation with the plane subalgebra
    for z in [data.zeta1, data.zeta2] {
        for m in inner_masks {
            if m == 0 {
                continue;
            }
            if !crate::algebra::blades_commute(z, m) {
                return Err(Error::BadIdeal(format!(
                    "unit {} fails to commute with plane blade {} in case {}",
                    crate::algebra::blade_name(z),
                    crate::algebra::blade_name(m),
                    case.tag()
                )));
            }
        }
    }

    let square = |b: Blade| -> i32 { blade_mul(sig, b, b).1 };
    let zeta_squares = [square(data.zeta1), square(data.zeta2)];
    let zeta12 = blade_mul(sig, data.zeta1, data.zeta2);
    let zeta12_square = square(zeta12.0);

    // units 1, ζ1, ζ2, ζ1ζ2 as signed blades
    let units: [(Blade, i32); 4] = [(0, 1), (data.zeta1, 1), (data.zeta2, 1), zeta12];

    let mut seen = [false; 16];
    let mut table = [[(0u16, 0i32); 4]; 4];
    for (i, &(ub, us)) in units.iter().enumerate() {
        for (j, &m) in inner_masks.iter().enumerate() {
            let (b, s) = blade_mul(sig, m, ub);
            table[i][j] = (b, s * us);
            if seen[b as usize] {
                return Err(Error::BadIdeal(format!(
                    "case {}: products do not cover the algebra bijectively",
                    case.tag()
                )));
            }
            seen[b as usize] = true;
        }
    }

    Ok(Decomposition {
        case,
        sig,
        zeta_blades: [data.zeta1, data.zeta2],
        zeta_squares,
        zeta12,
        zeta12_square,
        inner_masks,
        table,
    })
}

impl Decomposition {
    pub fn case(&self) -> ImmersionCase {
        self.case
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn zeta_blade(&self, i: usize) -> Blade {
        self.zeta_blades[i - 1]
    }

    pub fn zeta(&self, i: usize) -> Multivector<Rat> {
        Multivector::basis(self.sig, self.zeta_blades[i - 1])
    }

    pub fn zeta_square(&self, i: usize) -> i32 {
        self.zeta_squares[i - 1]
    }

    /// ζ1ζ2 as an exact multivector.
    pub fn zeta12(&self) -> Multivector<Rat> {
        Multivector::basis(self.sig, self.zeta12.0).scale(&rat(self.zeta12.1 as i64, 1))
    }

    pub fn zeta12_square(&self) -> i32 {
        self.zeta12_square
    }

    /// Blades spanning the plane subalgebra.
    pub fn inner_masks(&self) -> [Blade; 4] {
        self.inner_masks
    }

    /// True when ½(1±ζ1ζ2) are already projectors over the reals.
    pub fn epsilon_is_real(&self) -> bool {
        self.zeta12_square == 1
    }

    /// Spectral projectors for ζ1ζ2, over complex scalars so both the real
    /// and the complex flavours share one type: ½(1 ± u ζ1ζ2) with u = 1
    /// when (ζ1ζ2)² = +1 and u = i otherwise.
    pub fn epsilon_projectors(&self) -> (Multivector<CRat>, Multivector<CRat>) {
        let u = if self.epsilon_is_real() {
            crat(rat(1, 1), rat(0, 1))
        } else {
            crat(rat(0, 1), rat(1, 1))
        };
        let half = crat(rat(1, 2), rat(0, 1));
        let one = Multivector::<CRat>::one(self.sig);
        let z12 = self.zeta12().complexify().scale(&u);
        let plus = (&one + &z12).scale(&half);
        let minus = (&one - &z12).scale(&half);
        (plus, minus)
    }

    /// Real spectral projectors ½(1±ζ1ζ2), present only when (ζ1ζ2)²=+1.
    pub fn epsilon_projectors_real(&self) -> Option<(Multivector<Rat>, Multivector<Rat>)> {
        if !self.epsilon_is_real() {
            return None;
        }
        let half = rat(1, 2);
        let one = Multivector::<Rat>::one(self.sig);
        let z12 = self.zeta12();
        Some(((&one + &z12).scale(&half), (&one - &z12).scale(&half)))
    }

    /// Split `a` into plane-subalgebra components along 1, ζ1, ζ2, ζ1ζ2.
    pub fn split(&self, a: &Multivector<Rat>) -> Result<QuaternionicCoordinates> {
        if a.sig() != self.sig {
            return Err(Error::SignatureMismatch(
                a.sig().label(),
                self.sig.label(),
            ));
        }
        let mut parts: Vec<Multivector<Rat>> = (0..4).map(|_| Multivector::zero(self.sig)).collect();
        for i in 0..4 {
            for j in 0..4 {
                let (b, s) = self.table[i][j];
                let c = *a.coeff(b);
                if !c.is_zero() {
                    parts[i].set_coeff(self.inner_masks[j], c * rat(s as i64, 1));
                }
            }
        }
        let parts: [Multivector<Rat>; 4] = parts.try_into().expect("four components");
        Ok(QuaternionicCoordinates {
            decomp_case: self.case,
            parts,
        })
    }

    /// Recombine components: c0 + c1·ζ1 + c2·ζ2 + c3·ζ1ζ2.
    pub fn assemble(&self, coords: &QuaternionicCoordinates) -> Result<Multivector<Rat>> {
        if coords.decomp_case != self.case {
            return Err(Error::UnknownCase(format!(
                "coordinates belong to case {}, not {}",
                coords.decomp_case.tag(),
                self.case.tag()
            )));
        }
        let z1 = self.zeta(1);
        let z2 = self.zeta(2);
        let z12 = self.zeta12();
        let mut out = coords.parts[0].clone();
        out = &out + &coords.parts[1].try_mul(&z1)?;
        out = &out + &coords.parts[2].try_mul(&z2)?;
        out = &out + &coords.parts[3].try_mul(&z12)?;
        Ok(out)
    }
}

/// Components of an algebra element over the plane subalgebra.
#[derive(Clone, Debug, PartialEq)]
pub struct QuaternionicCoordinates {
    decomp_case: ImmersionCase,
    parts: [Multivector<Rat>; 4],
}

impl QuaternionicCoordinates {
    pub fn case(&self) -> ImmersionCase {
        self.decomp_case
    }

    /// Component along unit i, where units 0..=3 are 1, ζ1, ζ2, ζ1ζ2.
    pub fn part(&self, i: usize) -> &Multivector<Rat> {
        &self.parts[i]
    }

    pub fn parts(&self) -> &[Multivector<Rat>; 4] {
        &self.parts
    }
}

/// Convenience wrapper matching the operation vocabulary: split `a` for a
/// case, building the decomposition on the fly.
pub fn quaternionic_coordinates(
    case: ImmersionCase,
    a: &Multivector<Rat>,
) -> Result<QuaternionicCoordinates> {
    find_zeta_units(case)?.split(a)
}

/// Search all generator pairs for the plane whose subalgebra commutes with
/// both given grade-3 blades.  Returns 1-based indices.
pub fn commutant_plane(sig: Signature, z1: Blade, z2: Blade) -> Option<(u32, u32)> {
    let n = sig.n();
    for a in 1..=n {
        for b in (a + 1)..=n {
            let masks = [1u16 << (a - 1), 1 << (b - 1), (1 << (a - 1)) | (1 << (b - 1))];
            if masks
                .iter()
                .all(|&m| crate::algebra::blades_commute(z1, m) && crate::algebra::blades_commute(z2, m))
            {
                return Some((a, b));
            }
        }
    }
    None
}
