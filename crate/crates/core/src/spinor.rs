//! Spinor fields on minimal ideals: restriction projectors, component
//! extraction, and bilinear covariants.
//!
//! A *mother spinor* is an element of a minimal left ideal, written
//! Ψ = φ·e with φ even whenever the idempotent has mixed parity (the even
//! subalgebra then sweeps the whole ideal, so φ is recoverable as twice the
//! even part of Ψ).  Restricting to a surface splits Ψ by the spectral
//! projectors of ζ1ζ2 into ψ⁺ ⊕ ψ⁻; when (ζ1ζ2)² = −1 the split needs the
//! complex unit, so everything in this module is complexified.
//!
//! For the Lorentz signature (1,3) the even subalgebra is generated by
//! u_k = e_{k+1}e_1, three units squaring to +1, so even elements have a 2×2
//! image through the standard sigma matrices; the four complex components
//! φ1..φ4 extracted from the eight even coefficients are the classical
//! Dirac–Hestenes components.  For (4,0) the same construction lands in 2×2
//! matrices over double-complex scalars (the hyperbolic unit e with e²=+1
//! adjoined to C) — an "elliptic" variant of the same dictionary.
//!
//! Bilinear covariants σ, J, S, K, ω are computed from a 4-component column
//! via the fixed gamma matrices, satisfy the Fierz identities, and assemble
//! into the boomerang Z = 4ψψ†γ0.

use crate::algebra::{blade_grade, Signature};
use crate::error::{Error, Result};
use crate::ideals::{Idempotent, IdealBasis, RowSpace};
use crate::mat::Mat;
use crate::multivector::Multivector;
use crate::repr::{sigma_matrices, standard_dirac_rep};
use crate::scalar::{crat, rat, CRat, Double, Rat, Scalar, C64};
use crate::zeta::Decomposition;

// ---------------------------------------------------------------------------
// mother spinors and restriction
// ---------------------------------------------------------------------------

/// An element of a (complexified) minimal left ideal: ψ·e = ψ.
#[derive(Clone, Debug, PartialEq)]
pub struct MotherSpinor {
    idem: Idempotent,
    element: Multivector<CRat>,
}

/// Wrap an ideal element after checking membership exactly.
pub fn mother_spinor(element: Multivector<CRat>, idem: &Idempotent) -> Result<MotherSpinor> {
    if element.sig() != idem.sig() {
        return Err(Error::SignatureMismatch(
            element.sig().label(),
            idem.sig().label(),
        ));
    }
    let e = idem.element().complexify();
    if element.try_mul(&e)? != element {
        return Err(Error::NotInIdeal(
            "element is not fixed by right multiplication with the idempotent".into(),
        ));
    }
    Ok(MotherSpinor {
        idem: idem.clone(),
        element,
    })
}

/// Build Ψ = φ·e from an even element φ.
pub fn mother_from_even(phi: &Multivector<CRat>, idem: &Idempotent) -> Result<MotherSpinor> {
    if !phi.odd_part().is_zero() {
        return Err(Error::BadIdeal("φ must be even".into()));
    }
    let element = phi.try_mul(&idem.element().complexify())?;
    mother_spinor(element, idem)
}

impl MotherSpinor {
    pub fn sig(&self) -> Signature {
        self.element.sig()
    }

    pub fn element(&self) -> &Multivector<CRat> {
        &self.element
    }

    pub fn idem(&self) -> &Idempotent {
        &self.idem
    }

    /// Recover φ with Ψ = φ·e as twice the even part; errors when the
    /// reconstruction does not reproduce Ψ (idempotent without the
    /// even-reduction property).
    pub fn even_component(&self) -> Result<Multivector<CRat>> {
        let phi = self.element.even_part().scale(&crat(rat(2, 1), rat(0, 1)));
        let back = phi.try_mul(&self.idem.element().complexify())?;
        if back != self.element {
            return Err(Error::NotInIdeal(
                "even part does not regenerate the spinor for this idempotent".into(),
            ));
        }
        Ok(phi)
    }
}

/// ψ⁺ ⊕ ψ⁻ split of a spinor by the surface projectors.
#[derive(Clone, Debug)]
pub struct RestrictedField {
    case_tag: &'static str,
    eps_real: bool,
    plus: Multivector<CRat>,
    minus: Multivector<CRat>,
}

impl RestrictedField {
    pub fn case_tag(&self) -> &'static str {
        self.case_tag
    }

    /// True when the projectors are ½(1±ζ1ζ2); false for ½(1±iζ1ζ2).
    pub fn eps_real(&self) -> bool {
        self.eps_real
    }

    pub fn plus(&self) -> &Multivector<CRat> {
        &self.plus
    }

    pub fn minus(&self) -> &Multivector<CRat> {
        &self.minus
    }

    pub fn total(&self) -> Multivector<CRat> {
        &self.plus + &self.minus
    }
}

/// Split ψ with the case's spectral projectors: ψ± = ε±·ψ.
pub fn project_restriction(
    psi: &MotherSpinor,
    dec: &Decomposition,
) -> Result<RestrictedField> {
    if psi.sig() != dec.sig() {
        return Err(Error::SignatureMismatch(
            psi.sig().label(),
            dec.sig().label(),
        ));
    }
    let (ep, em) = dec.epsilon_projectors();
    let plus = ep.try_mul(psi.element())?;
    let minus = em.try_mul(psi.element())?;
    debug_assert_eq!(&plus + &minus, *psi.element());
    Ok(RestrictedField {
        case_tag: dec.case().tag(),
        eps_real: dec.epsilon_is_real(),
        plus,
        minus,
    })
}

/// Check the projector algebra for a *chosen* flavour: with `eps_real` the
/// candidate pair is ½(1±ζ1ζ2), otherwise ½(1±iζ1ζ2).  Returns true only
/// when the pair is idempotent, orthogonal, and complete.
pub fn projector_pair_valid(dec: &Decomposition, eps_real: bool) -> bool {
    let u = if eps_real {
        crat(rat(1, 1), rat(0, 1))
    } else {
        crat(rat(0, 1), rat(1, 1))
    };
    let half = crat(rat(1, 2), rat(0, 1));
    let one = Multivector::<CRat>::one(dec.sig());
    let z = dec.zeta12().complexify().scale(&u);
    let plus = (&one + &z).scale(&half);
    let minus = (&one - &z).scale(&half);
    let ok = |x: Result<Multivector<CRat>>, want: &Multivector<CRat>| match x {
        Ok(v) => v == *want,
        Err(_) => false,
    };
    ok(plus.try_mul(&plus), &plus)
        && ok(minus.try_mul(&minus), &minus)
        && matches!(plus.try_mul(&minus), Ok(v) if v.is_zero())
        && matches!(minus.try_mul(&plus), Ok(v) if v.is_zero())
        && &plus + &minus == one
}

/// Projector algebra with the flavour the case actually requires.
pub fn projector_algebra_check(dec: &Decomposition) -> bool {
    projector_pair_valid(dec, dec.epsilon_is_real())
}

// ---------------------------------------------------------------------------
// even-subalgebra 2×2 images (Lorentz and elliptic dictionaries)
// ---------------------------------------------------------------------------

/// C-linear 2×2 image of an even element, given images of the three units
/// u_k = e_{k+1}e_1.  Requires e_1² = +1 so that the eight even blades
/// decompose as 1, e1e_{k+1} = −u_k, e_{j+1}e_{k+1} = −u_j u_k,
/// e1234 = u1u2u3.
fn even_image<T: Scalar>(
    a: &Multivector<CRat>,
    units: [&Mat<T>; 3],
    embed: &dyn Fn(&CRat) -> T,
) -> Result<Mat<T>> {
    let sig = a.sig();
    if sig.n() != 4 || sig.gen_square(1) != 1 {
        return Err(Error::BadConfig(
            "even 2×2 image needs a 4D signature with e1² = +1".into(),
        ));
    }
    if !a.odd_part().is_zero() {
        return Err(Error::BadIdeal("element must be even".into()));
    }
    let [u1, u2, u3] = units;
    let images: [(u16, Mat<T>); 8] = [
        (0b0000, Mat::identity(2)),
        (0b0011, -u1),
        (0b0101, -u2),
        (0b1001, -u3),
        (0b0110, -&(u1 * u2)),
        (0b1010, -&(u1 * u3)),
        (0b1100, -&(u2 * u3)),
        (0b1111, &(u1 * u2) * u3),
    ];
    let mut m = Mat::<T>::zero(2);
    for (mask, img) in images {
        let c = a.coeff(mask);
        if !c.is_zero() {
            m = &m + &img.scale(&embed(c));
        }
    }
    Ok(m)
}

/// 2×2 image of an even element of the (1,3) algebra through the sigma
/// matrices (u_k ↦ σ_k).  An exact algebra homomorphism.
pub fn pauli_image(a: &Multivector<CRat>) -> Result<Mat<CRat>> {
    if a.sig() != Signature::new(1, 3)? {
        return Err(Error::SignatureMismatch(a.sig().label(), "R(1,3)".into()));
    }
    let s = sigma_matrices();
    even_image(a, [&s[0], &s[1], &s[2]], &|c| *c)
}

/// Unit images for the (4,0) even subalgebra over double-complex scalars:
/// u1 ↦ [[0,−1],[1,0]], u2 ↦ [[0,i],[i,0]], u3 ↦ [[ie,0],[0,−ie]].
pub fn elliptic_units() -> [Mat<Double<CRat>>; 3] {
    let z = Double::<CRat>::zero();
    let o = Double::<CRat>::one();
    let i = Double::new(crat(rat(0, 1), rat(1, 1)), rat_zero());
    let ie = Double::new(rat_zero(), crat(rat(0, 1), rat(1, 1)));
    let u1 = Mat::from_rows(vec![vec![z, -o], vec![o, z]]);
    let u2 = Mat::from_rows(vec![vec![z, i], vec![i, z]]);
    let u3 = Mat::from_rows(vec![vec![ie, z], vec![z, -ie]]);
    [u1, u2, u3]
}

fn rat_zero() -> CRat {
    crat(rat(0, 1), rat(0, 1))
}

/// 2×2 double-complex image of an even element of the (4,0) algebra.
/// An exact algebra homomorphism (the elliptic analogue of [`pauli_image`]).
pub fn elliptic_image(a: &Multivector<CRat>) -> Result<Mat<Double<CRat>>> {
    if a.sig() != Signature::new(4, 0)? {
        return Err(Error::SignatureMismatch(a.sig().label(), "R(4,0)".into()));
    }
    let u = elliptic_units();
    even_image(a, [&u[0], &u[1], &u[2]], &|c| Double::new(*c, rat_zero()))
}

/// The eight even-basis coefficients in the u_k labelling, common to both
/// dictionaries: a⁰, a¹, a², a³, a¹², a¹³, a²³, a¹²³.
#[derive(Clone, Debug, PartialEq)]
pub struct EvenCoefficients {
    pub a0: CRat,
    pub a1: CRat,
    pub a2: CRat,
    pub a3: CRat,
    pub a12: CRat,
    pub a13: CRat,
    pub a23: CRat,
    pub a123: CRat,
}

/// Read the u_k-basis coefficients off an even element (u_k = e_{k+1}e_1,
/// so e.g. the e12-coefficient of the element is −a¹).
pub fn even_coefficients(a: &Multivector<CRat>) -> Result<EvenCoefficients> {
    if a.sig().n() != 4 || a.sig().gen_square(1) != 1 {
        return Err(Error::BadConfig(
            "the u_k dictionary needs a 4D signature with e1² = +1".into(),
        ));
    }
    if !a.odd_part().is_zero() {
        return Err(Error::BadIdeal("element must be even".into()));
    }
    Ok(EvenCoefficients {
        a0: *a.coeff(0b0000),
        a1: -*a.coeff(0b0011),
        a2: -*a.coeff(0b0101),
        a3: -*a.coeff(0b1001),
        a12: -*a.coeff(0b0110),
        a13: -*a.coeff(0b1010),
        a23: -*a.coeff(0b1100),
        a123: *a.coeff(0b1111),
    })
}

/// Rebuild the even element from u_k-basis coefficients.
pub fn even_from_coefficients(sig: Signature, c: &EvenCoefficients) -> Result<Multivector<CRat>> {
    if sig.n() != 4 || sig.gen_square(1) != 1 {
        return Err(Error::BadConfig(
            "the u_k dictionary needs a 4D signature with e1² = +1".into(),
        ));
    }
    let mut a = Multivector::<CRat>::zero(sig);
    a.set_coeff(0b0000, c.a0);
    a.set_coeff(0b0011, -c.a1);
    a.set_coeff(0b0101, -c.a2);
    a.set_coeff(0b1001, -c.a3);
    a.set_coeff(0b0110, -c.a12);
    a.set_coeff(0b1010, -c.a13);
    a.set_coeff(0b1100, -c.a23);
    a.set_coeff(0b1111, c.a123);
    Ok(a)
}

// ---------------------------------------------------------------------------
// Dirac–Hestenes components (Lorentz case)
// ---------------------------------------------------------------------------

/// The four complex components of a real even element of the (1,3) algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct DiracHestenes {
    pub phi1: CRat,
    pub phi2: CRat,
    pub phi3: CRat,
    pub phi4: CRat,
}

fn require_real(c: &CRat, what: &str) -> Result<Rat> {
    if !c.im.is_zero() {
        return Err(Error::BadConfig(format!(
            "{} must be real for the component dictionary",
            what
        )));
    }
    Ok(c.re)
}

/// Extract φ1..φ4 from a real even element:
/// φ1 = a⁰−ia¹², φ2 = −a¹³−ia²³, φ3 = a³−ia¹²³, φ4 = a¹+ia².
pub fn dirac_hestenes_from_even(a: &Multivector<CRat>) -> Result<DiracHestenes> {
    if a.sig() != Signature::new(1, 3)? {
        return Err(Error::SignatureMismatch(a.sig().label(), "R(1,3)".into()));
    }
    let c = even_coefficients(a)?;
    let r = |x: &CRat, w: &str| require_real(x, w);
    let (a0, a1, a2, a3) = (
        r(&c.a0, "a0")?,
        r(&c.a1, "a1")?,
        r(&c.a2, "a2")?,
        r(&c.a3, "a3")?,
    );
    let (a12, a13, a23, a123) = (
        r(&c.a12, "a12")?,
        r(&c.a13, "a13")?,
        r(&c.a23, "a23")?,
        r(&c.a123, "a123")?,
    );
    Ok(DiracHestenes {
        phi1: crat(a0, -a12),
        phi2: crat(-a13, -a23),
        phi3: crat(a3, -a123),
        phi4: crat(a1, a2),
    })
}

impl DiracHestenes {
    /// Invert the dictionary back to the real even element.
    pub fn to_even(&self) -> Result<Multivector<CRat>> {
        let sig = Signature::new(1, 3)?;
        let c = EvenCoefficients {
            a0: crat(self.phi1.re, rat(0, 1)),
            a1: crat(self.phi4.re, rat(0, 1)),
            a2: crat(self.phi4.im, rat(0, 1)),
            a3: crat(self.phi3.re, rat(0, 1)),
            a12: crat(-self.phi1.im, rat(0, 1)),
            a13: crat(-self.phi2.re, rat(0, 1)),
            a23: crat(-self.phi2.im, rat(0, 1)),
            a123: crat(-self.phi3.im, rat(0, 1)),
        };
        even_from_coefficients(sig, &c)
    }

    /// The 2×2 matrix [[φ1*+φ3*, φ4*+φ2*], [φ4−φ2, φ1−φ3]] — for real even
    /// elements this equals the sigma-matrix image.
    pub fn matrix(&self) -> Mat<CRat> {
        Mat::from_rows(vec![
            vec![
                self.phi1.conj() + self.phi3.conj(),
                self.phi4.conj() + self.phi2.conj(),
            ],
            vec![self.phi4 - self.phi2, self.phi1 - self.phi3],
        ])
    }
}

/// Extract the components from a mother spinor by recovering its even
/// representative first.
pub fn dirac_hestenes_from_mother(psi: &MotherSpinor) -> Result<DiracHestenes> {
    let phi = psi.even_component()?;
    dirac_hestenes_from_even(&phi)
}

/// The (x, y) pair carried by an even element's 2×2 image first column:
/// x = φ1*+φ3*, y = φ4−φ2 for real elements, extended C-linearly.
pub fn dh_column(a: &Multivector<CRat>) -> Result<(CRat, CRat)> {
    let m = pauli_image(a)?;
    Ok((*m.get(0, 0), *m.get(1, 0)))
}

// ---------------------------------------------------------------------------
// bilinear covariants
// ---------------------------------------------------------------------------

/// σ, J, S, K, ω computed from a 4-component column via the fixed gamma
/// matrices.
#[derive(Clone, Debug)]
pub struct BilinearCovariants {
    pub sigma: f64,
    pub j: [f64; 4],
    /// Antisymmetric S_{μν}, stored densely.
    pub s: [[f64; 4]; 4],
    pub k: [f64; 4],
    pub omega: f64,
    /// Largest imaginary part encountered in the nominally real quantities.
    pub max_imag: f64,
}

fn sandwich(m: &Mat<C64>, psi: &[C64; 4]) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..4 {
        let mut row = C64::new(0.0, 0.0);
        for j in 0..4 {
            row += *m.get(i, j) * psi[j];
        }
        acc += psi[i].conj() * row;
    }
    acc
}

/// Evaluate the covariants: σ = ψ†γ0ψ, J_μ = ψ†γ0γμψ,
/// S_μν = ψ†γ0 iγμγν ψ, K_μ = ψ†γ0 iγ0123γμ ψ, ω = −ψ†γ0γ0123ψ.
pub fn bilinear_covariants(psi: &[C64; 4]) -> BilinearCovariants {
    let d = standard_dirac_rep();
    let g: Vec<Mat<C64>> = (0..4).map(|mu| d.gamma(mu).to_c64()).collect();
    let g0 = &g[0];
    let vol = d.gamma_vol().to_c64();
    let i_unit = C64::new(0.0, 1.0);

    let mut max_imag: f64 = 0.0;
    let mut real = |z: C64| -> f64 {
        max_imag = max_imag.max(z.im.abs());
        z.re
    };

    let sigma = real(sandwich(g0, psi));
    let mut j = [0.0; 4];
    for mu in 0..4 {
        j[mu] = real(sandwich(&(g0 * &g[mu]), psi));
    }
    let mut s = [[0.0; 4]; 4];
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            let m = (g0 * &(&g[mu] * &g[nu])).scale(&i_unit);
            let v = real(sandwich(&m, psi));
            s[mu][nu] = v;
            s[nu][mu] = -v;
        }
    }
    let mut k = [0.0; 4];
    for mu in 0..4 {
        let m = (g0 * &(&vol * &g[mu])).scale(&i_unit);
        k[mu] = real(sandwich(&m, psi));
    }
    let omega = real(-sandwich(&(g0 * &vol), psi));

    BilinearCovariants {
        sigma,
        j,
        s,
        k,
        omega,
        max_imag,
    }
}

/// Minkowski square with the (+,−,−,−) metric.
pub fn minkowski_sq(v: &[f64; 4]) -> f64 {
    v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3]
}

/// Minkowski inner product with the (+,−,−,−) metric.
pub fn minkowski_dot(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
}

/// Largest relative Fierz defect of a covariant set:
/// J² = σ²+ω², K² = −J², J·K = 0.
pub fn fierz_residual(c: &BilinearCovariants) -> f64 {
    let j2 = minkowski_sq(&c.j);
    let k2 = minkowski_sq(&c.k);
    let jk = minkowski_dot(&c.j, &c.k);
    let jnorm: f64 = c.j.iter().map(|x| x * x).sum::<f64>().sqrt();
    let knorm: f64 = c.k.iter().map(|x| x * x).sum::<f64>().sqrt();
    let r1 = (j2 - c.sigma * c.sigma - c.omega * c.omega).abs() / (1.0 + j2.abs());
    let r2 = (k2 + j2).abs() / (1.0 + j2.abs());
    let r3 = jk.abs() / (1.0 + jnorm * knorm);
    r1.max(r2).max(r3)
}

/// Assemble Z = σ + J + iS − iγ0123 K + ω γ0123 from the covariants
/// (indices raised with (+,−,−,−)).
pub fn boomerang(psi: &[C64; 4]) -> Mat<C64> {
    let c = bilinear_covariants(psi);
    let d = standard_dirac_rep();
    let g: Vec<Mat<C64>> = (0..4).map(|mu| d.gamma(mu).to_c64()).collect();
    let vol = d.gamma_vol().to_c64();
    let i_unit = C64::new(0.0, 1.0);
    let eta = [1.0, -1.0, -1.0, -1.0];

    let mut z = Mat::<C64>::identity(4).scale(&C64::new(c.sigma, 0.0));
    for mu in 0..4 {
        z = &z + &g[mu].scale(&C64::new(eta[mu] * c.j[mu], 0.0));
    }
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            let coeff = eta[mu] * eta[nu] * c.s[mu][nu];
            z = &z + &(&g[mu] * &g[nu]).scale(&(i_unit * C64::new(coeff, 0.0)));
        }
    }
    for mu in 0..4 {
        let coeff = eta[mu] * c.k[mu];
        z = &z - &(&vol * &g[mu]).scale(&(i_unit * C64::new(coeff, 0.0)));
    }
    z = &z + &vol.scale(&C64::new(c.omega, 0.0));
    z
}

/// The matrix oracle 4ψψ†γ0 the assembled boomerang must reproduce.
pub fn boomerang_oracle(psi: &[C64; 4]) -> Mat<C64> {
    let g0 = standard_dirac_rep().gamma(0).to_c64();
    let mut outer = Mat::<C64>::zero(4);
    for i in 0..4 {
        for j in 0..4 {
            outer.set(i, j, psi[i] * psi[j].conj() * C64::new(4.0, 0.0));
        }
    }
    &outer * &g0
}

// ---------------------------------------------------------------------------
// null electromagnetic fields
// ---------------------------------------------------------------------------

/// The symmetric 2×2 matrix [[F1+iF2, iF3], [iF3, F1−iF2]] whose determinant
/// is F1²+F2²+F3².
pub fn em_matrix(f: &[C64; 3]) -> Mat<C64> {
    let i = C64::new(0.0, 1.0);
    Mat::from_rows(vec![
        vec![f[0] + i * f[1], i * f[2]],
        vec![i * f[2], f[0] - i * f[1]],
    ])
}

/// F² = F1²+F2²+F3² — zero exactly when the field F = E + iB is null
/// (E·B = 0 and |E| = |B|).
pub fn em_invariant(f: &[C64; 3]) -> C64 {
    f[0] * f[0] + f[1] * f[1] + f[2] * f[2]
}

/// Null test with an absolute tolerance on |F²|.
pub fn null_em_check(f: &[C64; 3], tol: f64) -> bool {
    em_invariant(f).norm() <= tol
}

// ---------------------------------------------------------------------------
// ideal split dimensions
// ---------------------------------------------------------------------------

/// Complex dimensions (total, plus, minus) of a complexified minimal left
/// ideal under the case projectors — the split must be into equal halves.
pub fn restriction_split_dims(
    basis: &IdealBasis,
    dec: &Decomposition,
) -> Result<(usize, usize, usize)> {
    if basis.sig() != dec.sig() {
        return Err(Error::SignatureMismatch(
            basis.sig().label(),
            dec.sig().label(),
        ));
    }
    let (ep, em) = dec.epsilon_projectors();
    let width = basis.sig().dim();
    let mut total = RowSpace::<CRat>::new(width);
    let mut plus = RowSpace::<CRat>::new(width);
    let mut minus = RowSpace::<CRat>::new(width);
    for b in basis.basis() {
        let bc = b.complexify();
        total.try_add(bc.coeffs().to_vec());
        plus.try_add(ep.try_mul(&bc)?.coeffs().to_vec());
        minus.try_add(em.try_mul(&bc)?.coeffs().to_vec());
    }
    Ok((total.dim(), plus.dim(), minus.dim()))
}

/// Grade census helper used by reports: list of grades present.
pub fn grades_present<T: Scalar>(a: &Multivector<T>) -> Vec<u32> {
    let mut out = Vec::new();
    for g in 0..=a.sig().n() {
        let any = a
            .sig()
            .blades()
            .filter(|&b| blade_grade(b) == g)
            .any(|b| !a.coeff(b).is_zero());
        if any {
            out.push(g);
        }
    }
    out
}
