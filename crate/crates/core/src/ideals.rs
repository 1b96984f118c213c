//! Primitive idempotents, minimal left ideals, and their division rings.
//!
//! A minimal left ideal I = Cl(p,q)·e is cut out by a primitive idempotent
//! e = ½(1+e_{α1})···½(1+e_{αk}) built from k commuting blades that square
//! to +1, where k = q − r_{q−p} with r the Radon–Hurwitz sequence. The
//! ideal then has real dimension 2^{n−k}, and e·Cl·e is a division ring
//! K ∈ {R, C, H} acting on I from the right — the scalar ring of the spinor
//! space. Everything here runs in exact rational arithmetic: idempotency,
//! dimension counts, and the division-ring classification are identities,
//! not approximations.

use serde::Serialize;

use crate::algebra::{blade_grade, blade_mul, blade_name, blades_commute, Blade, Signature};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::{rat, ExactField, Rat, Scalar};

// ---------------------------------------------------------------------------
// Radon–Hurwitz numbers
// ---------------------------------------------------------------------------

/// The Radon–Hurwitz sequence: r_0..r_7 = 0,1,2,2,3,3,3,3, extended both
/// ways by r_{i±8} = r_i ± 4.
pub fn rh_number(i: i64) -> i64 {
    const BASE: [i64; 8] = [0, 1, 2, 2, 3, 3, 3, 3];
    let r = i.rem_euclid(8);
    let octave = (i - r) / 8;
    BASE[r as usize] + 4 * octave
}

/// Number k of idempotent factors for Cl(p,q): k = q − r_{q−p}.
pub fn commuting_count(sig: Signature) -> u32 {
    let k = sig.q() as i64 - rh_number(sig.q() as i64 - sig.p() as i64);
    debug_assert!(k >= 0, "negative factor count for {}", sig.label());
    k as u32
}

// ---------------------------------------------------------------------------
// Echelon row spaces with coordinate tracking
// ---------------------------------------------------------------------------

/// Row space in echelon form over an exact field, remembering how each
/// stored row decomposes over the accepted original vectors so that
/// coordinates of later vectors can be read back exactly.
#[derive(Clone, Debug)]
pub struct RowSpace<T> {
    width: usize,
    rows: Vec<EchelonRow<T>>,
    accepted: usize,
}

#[derive(Clone, Debug)]
struct EchelonRow<T> {
    pivot: usize,
    vec: Vec<T>,
    combo: Vec<T>,
}

impl<T: ExactField> RowSpace<T> {
    pub fn new(width: usize) -> Self {
        RowSpace {
            width,
            rows: Vec::new(),
            accepted: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn combo_of(&self, row: &EchelonRow<T>, len: usize) -> Vec<T> {
        let mut c = row.combo.clone();
        c.resize(len, T::zero());
        c
    }

    /// Reduce v in place against the stored rows; returns the coefficients
    /// λ_i such that (input v) = Σ λ_i·row_i + (output v).
    fn reduce(&self, v: &mut [T]) -> Vec<T> {
        let mut lambda = vec![T::zero(); self.rows.len()];
        for (i, row) in self.rows.iter().enumerate() {
            let f = v[row.pivot].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..self.width {
                let t = f.clone() * row.vec[j].clone();
                v[j] = v[j].clone() - t;
            }
            lambda[i] = f;
        }
        lambda
    }

    /// Try to extend the space by one original vector. Returns true when the
    /// vector was independent (rank grew).
    pub fn try_add(&mut self, v: Vec<T>) -> bool {
        assert_eq!(v.len(), self.width);
        let mut r = v;
        let lambda = self.reduce(&mut r);
        let pivot = match r.iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        // combo for r: e_self − Σ λ_i combo_i, then normalized.
        let mut combo = vec![T::zero(); self.accepted + 1];
        combo[self.accepted] = T::one();
        for (i, l) in lambda.iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            let ci = self.combo_of(&self.rows[i], self.accepted + 1);
            for (c, x) in combo.iter_mut().zip(ci) {
                *c = c.clone() - l.clone() * x;
            }
        }
        let inv = r[pivot].clone().inv();
        for x in r.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for x in combo.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        self.rows.push(EchelonRow {
            pivot,
            vec: r,
            combo,
        });
        self.accepted += 1;
        true
    }

    pub fn contains(&self, v: &[T]) -> bool {
        let mut r = v.to_vec();
        self.reduce(&mut r);
        r.iter().all(|x| x.is_zero())
    }

    /// Coordinates of v over the accepted original vectors, if v lies in
    /// the span.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        let mut r = v.to_vec();
        let lambda = self.reduce(&mut r);
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut coords = vec![T::zero(); self.accepted];
        for (i, l) in lambda.iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            let ci = self.combo_of(&self.rows[i], self.accepted);
            for (c, x) in coords.iter_mut().zip(ci) {
                *c = c.clone() + l.clone() * x;
            }
        }
        Some(coords)
    }
}

// ---------------------------------------------------------------------------
// Idempotents
// ---------------------------------------------------------------------------

/// Product of commuting blade projectors Π ½(1+e_{αi}).
#[derive(Clone, Debug, PartialEq)]
pub struct Idempotent {
    sig: Signature,
    factors: Vec<Blade>,
    element: Multivector<Rat>,
}

impl Idempotent {
    /// The unit idempotent (empty factor list).
    pub fn unit(sig: Signature) -> Self {
        Idempotent {
            sig,
            factors: Vec::new(),
            element: Multivector::one(sig),
        }
    }

    /// Validate the factor blades (each squares to +1, all pairwise commute,
    /// masks independent over GF(2)) and build the product.
    pub fn from_factors(sig: Signature, factors: &[Blade]) -> Result<Self> {
        let mut seen: [Blade; 16] = [0; 16];
        for (i, &b) in factors.iter().enumerate() {
            if b == 0 || (b as usize) >= sig.dim() {
                return Err(Error::InvalidFactors(format!(
                    "blade mask {:#x} out of range for {}",
                    b,
                    sig.label()
                )));
            }
            let (_, s) = blade_mul(sig, b, b);
            if s != 1 {
                return Err(Error::InvalidFactors(format!(
                    "{} squares to −1",
                    blade_name(b)
                )));
            }
            for &a in &factors[..i] {
                if !blades_commute(a, b) {
                    return Err(Error::InvalidFactors(format!(
                        "{} and {} do not commute",
                        blade_name(a),
                        blade_name(b)
                    )));
                }
            }
            if !gf2_insert(&mut seen, b) {
                return Err(Error::InvalidFactors(format!(
                    "{} is a product of earlier factors",
                    blade_name(b)
                )));
            }
        }
        let half = rat(1, 2);
        let mut element = Multivector::one(sig);
        for &b in factors {
            let proj = (&Multivector::one(sig) + &Multivector::basis(sig, b)).scale(&half);
            element = &element * &proj;
        }
        Ok(Idempotent {
            sig,
            factors: factors.to_vec(),
            element,
        })
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn factors(&self) -> &[Blade] {
        &self.factors
    }

    pub fn element(&self) -> &Multivector<Rat> {
        &self.element
    }

    pub fn factor_names(&self) -> Vec<String> {
        self.factors.iter().map(|&b| blade_name(b)).collect()
    }
}

/// Insert a mask into a GF(2) triangular basis; false if dependent.
fn gf2_insert(basis: &mut [Blade; 16], mut x: Blade) -> bool {
    while x != 0 {
        let h = (15 - x.leading_zeros()) as usize;
        if basis[h] == 0 {
            basis[h] = x;
            return true;
        }
        x ^= basis[h];
    }
    false
}

/// Construct a primitive idempotent with k = q − r_{q−p} factors. With
/// `preferred` the given blades are validated and used; otherwise a
/// deterministic backtracking search over blades ordered by (grade, mask)
/// picks the first admissible factor set.
pub fn primitive_idempotent(sig: Signature, preferred: Option<&[Blade]>) -> Result<Idempotent> {
    let k = commuting_count(sig) as usize;
    if let Some(blades) = preferred {
        if blades.len() != k {
            return Err(Error::InvalidFactors(format!(
                "{} needs exactly {} factor blade(s), got {}",
                sig.label(),
                k,
                blades.len()
            )));
        }
        return Idempotent::from_factors(sig, blades);
    }
    if k == 0 {
        return Ok(Idempotent::unit(sig));
    }
    let mut cands: Vec<Blade> = sig
        .blades()
        .filter(|&b| b != 0 && blade_mul(sig, b, b).1 == 1)
        .collect();
    cands.sort_by_key(|&b| (blade_grade(b), b));
    let mut chosen: Vec<Blade> = Vec::with_capacity(k);
    if search_factors(&cands, k, 0, &mut chosen) {
        Idempotent::from_factors(sig, &chosen)
    } else {
        Err(Error::InvalidFactors(format!(
            "no commuting factor set of size {} in {}",
            k,
            sig.label()
        )))
    }
}

fn search_factors(cands: &[Blade], k: usize, start: usize, chosen: &mut Vec<Blade>) -> bool {
    if chosen.len() == k {
        return true;
    }
    for i in start..cands.len() {
        let b = cands[i];
        if !chosen.iter().all(|&a| blades_commute(a, b)) {
            continue;
        }
        let mut basis: [Blade; 16] = [0; 16];
        let mut ok = true;
        for &a in chosen.iter() {
            ok &= gf2_insert(&mut basis, a);
        }
        if !(ok && gf2_insert(&mut basis, b)) {
            continue;
        }
        chosen.push(b);
        if search_factors(cands, k, i + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

// ---------------------------------------------------------------------------
// Minimal left ideals
// ---------------------------------------------------------------------------

/// Basis data of a left ideal Cl·e together with the division ring e·Cl·e.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    idem: Idempotent,
    gens: Vec<Blade>,
    basis: Vec<Multivector<Rat>>,
    space: RowSpace<Rat>,
    divring_gens: Vec<Blade>,
    divring: Vec<Multivector<Rat>>,
    divring_class: DivRingTag,
}

impl IdealBasis {
    pub fn idem(&self) -> &Idempotent {
        &self.idem
    }

    pub fn sig(&self) -> Signature {
        self.idem.sig()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Multiplier blades b whose products b·e form the basis.
    pub fn gens(&self) -> &[Blade] {
        &self.gens
    }

    pub fn basis(&self) -> &[Multivector<Rat>] {
        &self.basis
    }

    pub fn divring_dim(&self) -> usize {
        self.divring.len()
    }

    /// Multiplier blades b whose products e·b·e span the division ring.
    pub fn divring_gens(&self) -> &[Blade] {
        &self.divring_gens
    }

    pub fn divring(&self) -> &[Multivector<Rat>] {
        &self.divring
    }

    pub fn divring_class(&self) -> DivRingTag {
        self.divring_class
    }

    /// Exact coordinates of x over the ideal basis, if x lies in the ideal.
    pub fn coordinates(&self, x: &Multivector<Rat>) -> Option<Vec<Rat>> {
        self.space.coordinates(x.coeffs())
    }

    pub fn contains(&self, x: &Multivector<Rat>) -> bool {
        self.space.contains(x.coeffs())
    }
}

/// Sweep b·e over all blades b in mask order, keeping the independent
/// products as the ideal basis; likewise e·b·e for the division ring.
pub fn minimal_left_ideal(idem: &Idempotent) -> Result<IdealBasis> {
    let e = idem.element();
    if &(e * e) != e {
        return Err(Error::BadIdeal("element is not idempotent".into()));
    }
    if e.is_zero() {
        return Err(Error::BadIdeal("zero idempotent".into()));
    }
    let sig = idem.sig();
    let mut space = RowSpace::new(sig.dim());
    let mut gens = Vec::new();
    let mut basis = Vec::new();
    for b in sig.blades() {
        let v = &Multivector::basis(sig, b) * e;
        if v.is_zero() {
            continue;
        }
        if space.try_add(v.coeffs().to_vec()) {
            gens.push(b);
            basis.push(v);
        }
    }
    let mut dr_space = RowSpace::new(sig.dim());
    let mut divring_gens = Vec::new();
    let mut divring = Vec::new();
    for b in sig.blades() {
        let v = &(e * &Multivector::basis(sig, b)) * e;
        if v.is_zero() {
            continue;
        }
        if dr_space.try_add(v.coeffs().to_vec()) {
            divring_gens.push(b);
            divring.push(v);
        }
    }
    let divring_class = classify_unital_span(e, &divring);
    Ok(IdealBasis {
        idem: idem.clone(),
        gens,
        basis,
        space,
        divring_gens,
        divring,
        divring_class,
    })
}

/// True iff the ideal dimension equals 2^{n−k}: any larger ideal means the
/// idempotent splits further.
pub fn is_primitive(idem: &Idempotent) -> Result<bool> {
    let sig = idem.sig();
    let tgt = 1usize << (sig.n() - commuting_count(sig));
    Ok(minimal_left_ideal(idem)?.dim() == tgt)
}

// ---------------------------------------------------------------------------
// Division-ring classification
// ---------------------------------------------------------------------------

/// Isomorphism class of e·Cl·e as a real unital algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum DivRingTag {
    R,
    C,
    H,
    SplitRR,
    SplitHH,
    NotDivisionRing,
}

impl DivRingTag {
    pub fn label(self) -> &'static str {
        match self {
            DivRingTag::R => "R",
            DivRingTag::C => "C",
            DivRingTag::H => "H",
            DivRingTag::SplitRR => "R⊕R",
            DivRingTag::SplitHH => "H⊕H",
            DivRingTag::NotDivisionRing => "not-a-division-ring",
        }
    }
}

/// Classify the unital algebra spanned by `elems` with unit `unit`.
///
/// Dimension 1 is R. Dimension 2 completes the square on the non-unit
/// generator: a negative square is C, a positive one R⊕R. Dimension 4
/// restricts the squaring form to the trace-zero part: negative definite is
/// H, anything else is a split (matrix) algebra. Dimension 8 splits at a
/// non-trivial central idempotent and classifies the two halves.
pub fn classify_unital_span(
    unit: &Multivector<Rat>,
    elems: &[Multivector<Rat>],
) -> DivRingTag {
    let sig = unit.sig();
    let mut space = RowSpace::new(sig.dim());
    let mut bas: Vec<Multivector<Rat>> = Vec::new();
    if space.try_add(unit.coeffs().to_vec()) {
        bas.push(unit.clone());
    }
    for x in elems {
        if space.try_add(x.coeffs().to_vec()) {
            bas.push(x.clone());
        }
    }
    let d = bas.len();
    let coords = |x: &Multivector<Rat>| -> Option<Vec<Rat>> { space.coordinates(x.coeffs()) };

    match d {
        1 => DivRingTag::R,
        2 => {
            let u = &bas[1];
            let sq = match coords(&(u * u)) {
                Some(c) => c,
                None => return DivRingTag::NotDivisionRing,
            };
            // u² = a·unit + b·u; (u − b/2)² = (a + b²/4)·unit.
            let c = sq[0] + sq[1] * sq[1] / rat(4, 1);
            if c < rat(0, 1) {
                DivRingTag::C
            } else if c > rat(0, 1) {
                DivRingTag::SplitRR
            } else {
                DivRingTag::NotDivisionRing
            }
        }
        4 => classify_dim4(unit, &bas, &space),
        8 => classify_dim8(unit, &bas, &space),
        _ => DivRingTag::NotDivisionRing,
    }
}

fn classify_dim4(
    unit: &Multivector<Rat>,
    bas: &[Multivector<Rat>],
    space: &RowSpace<Rat>,
) -> DivRingTag {
    // Trace functional from left multiplication.
    let trace = |x: &Multivector<Rat>| -> Option<Rat> {
        let mut t = rat(0, 1);
        for (j, bj) in bas.iter().enumerate() {
            let col = space.coordinates((x * bj).coeffs())?;
            t = t + col[j];
        }
        Some(t / rat(4, 1))
    };
    // Traceless parts of the non-unit generators.
    let mut w = Vec::new();
    for b in &bas[1..] {
        let t = match trace(b) {
            Some(t) => t,
            None => return DivRingTag::NotDivisionRing,
        };
        w.push(b - &unit.scale(&t));
    }
    // Symmetrized products must be scalar; collect the squaring form.
    let mut g = [[rat(0, 1); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let s = (&(&w[i] * &w[j]) + &(&w[j] * &w[i])).scale(&rat(1, 2));
            let c = match space.coordinates(s.coeffs()) {
                Some(c) => c,
                None => return DivRingTag::NotDivisionRing,
            };
            if c[1..].iter().any(|x| !x.is_zero()) {
                return DivRingTag::NotDivisionRing;
            }
            g[i][j] = c[0];
        }
    }
    // Negative definite ⟺ leading minors alternate in sign starting negative.
    let m1 = g[0][0];
    let m2 = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    let m3 = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
        - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    if m1 < rat(0, 1) && m2 > rat(0, 1) && m3 < rat(0, 1) {
        DivRingTag::H
    } else {
        DivRingTag::NotDivisionRing
    }
}

fn classify_dim8(
    unit: &Multivector<Rat>,
    bas: &[Multivector<Rat>],
    _space: &RowSpace<Rat>,
) -> DivRingTag {
    // Center: x = Σ x_j b_j with [x, b_i] = 0 for all i.
    let d = bas.len();
    let sig = unit.sig();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for bi in bas {
        // For each coefficient slot, one linear constraint over the x_j.
        let comms: Vec<Multivector<Rat>> = bas
            .iter()
            .map(|bj| &(bj * bi) - &(bi * bj))
            .collect();
        for slot in 0..sig.dim() {
            let row: Vec<Rat> = comms.iter().map(|c| c.coeffs()[slot]).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let kernel = kernel_basis(&rows, d);
    if kernel.len() != 2 {
        return DivRingTag::NotDivisionRing;
    }
    // Assemble center elements; pick z independent of the unit.
    let assemble = |c: &[Rat]| -> Multivector<Rat> {
        let mut m = Multivector::zero(sig);
        for (j, x) in c.iter().enumerate() {
            m = &m + &bas[j].scale(x);
        }
        m
    };
    let mut center_space = RowSpace::new(sig.dim());
    center_space.try_add(unit.coeffs().to_vec());
    let mut z = None;
    for c in &kernel {
        let m = assemble(c);
        if center_space.try_add(m.coeffs().to_vec()) {
            z = Some(m);
            break;
        }
    }
    let z = match z {
        Some(z) => z,
        None => return DivRingTag::NotDivisionRing,
    };
    let sq = match center_space.coordinates((&z * &z).coeffs()) {
        Some(c) => c,
        None => return DivRingTag::NotDivisionRing,
    };
    // z² = a·unit + b·z; w = z − (b/2)·unit has w² = c·unit.
    let a = sq[0];
    let b = sq[1];
    let w = &z - &unit.scale(&(b / rat(2, 1)));
    let c = a + b * b / rat(4, 1);
    if c <= rat(0, 1) {
        // Central subalgebra is C (or degenerate): an 8-dimensional algebra
        // over a complex center is a 2×2 complex matrix algebra, not a
        // division ring over R in the sense used here.
        return DivRingTag::NotDivisionRing;
    }
    let s = match rat_sqrt(c) {
        Some(s) => s,
        None => return DivRingTag::NotDivisionRing,
    };
    let half = rat(1, 2);
    let ws = w.scale(&(rat(1, 1) / s));
    let eplus = (&unit.clone() + &ws).scale(&half);
    let eminus = (&unit.clone() - &ws).scale(&half);
    let project = |c: &Multivector<Rat>| -> DivRingTag {
        let elems: Vec<Multivector<Rat>> = bas.iter().map(|b| b * c).collect();
        classify_unital_span(c, &elems)
    };
    match (project(&eplus), project(&eminus)) {
        (DivRingTag::H, DivRingTag::H) => DivRingTag::SplitHH,
        (DivRingTag::R, DivRingTag::R) => DivRingTag::SplitRR,
        _ => DivRingTag::NotDivisionRing,
    }
}

/// Exact square root of a positive rational, if it is a perfect square.
fn rat_sqrt(x: Rat) -> Option<Rat> {
    let isqrt = |v: i128| -> Option<i128> {
        if v < 0 {
            return None;
        }
        let mut r = (v as f64).sqrt().round() as i128;
        while r * r > v {
            r -= 1;
        }
        while (r + 1) * (r + 1) <= v {
            r += 1;
        }
        (r * r == v).then_some(r)
    };
    let n = isqrt(*x.numer())?;
    let d = isqrt(*x.denom())?;
    Some(Rat::new(n, d))
}

/// Kernel of the linear map given by `rows` (each of length `width`).
fn kernel_basis(rows: &[Vec<Rat>], width: usize) -> Vec<Vec<Rat>> {
    // Reduced row echelon form.
    let mut rref: Vec<Vec<Rat>> = Vec::new();
    for r in rows {
        let mut v = r.clone();
        for row in &rref {
            let p = row.iter().position(|x| !x.is_zero()).unwrap();
            let f = v[p];
            if !f.is_zero() {
                for j in 0..width {
                    v[j] = v[j] - f * row[j];
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = rat(1, 1) / v[p];
            for x in v.iter_mut() {
                *x = *x * inv;
            }
            // Back-eliminate this pivot from earlier rows.
            for row in rref.iter_mut() {
                let f = row[p];
                if !f.is_zero() {
                    for j in 0..width {
                        row[j] = row[j] - f * v[j];
                    }
                }
            }
            rref.push(v);
        }
    }
    let pivots: Vec<usize> = rref
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    let mut kernel = Vec::new();
    for free in 0..width {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![rat(0, 1); width];
        v[free] = rat(1, 1);
        for (row, &p) in rref.iter().zip(&pivots) {
            v[p] = -row[free];
        }
        kernel.push(v);
    }
    kernel
}
