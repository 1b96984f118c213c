//! Signatures and blade-level arithmetic.
//!
//! A blade e_{i1…ik} (indices ascending) is stored as a bitmask whose set
//! bits are the generator indices. The product of two blades is the XOR of
//! their masks, with a sign composed of (a) the parity of the transpositions
//! needed to interleave the two ascending index sequences and (b) one metric
//! factor e_i² = ±1 per index the blades share.
//!
//! Generator convention: in Cl(p,q) the first p generators square to +1 and
//! the remaining q square to −1, matching the quadratic form
//! x₁² + … + x_p² − x_{p+1}² − … − x_{p+q}².

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Bitmask of generator indices; bit (i−1) set means e_i participates.
pub type Blade = u16;

/// Signature (p,q) of a nondegenerate quadratic form, 1 ≤ p+q ≤ 8.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Signature {
    p: u32,
    q: u32,
}

impl Signature {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        let n = p + q;
        if n < 1 || n > 8 {
            return Err(Error::InvalidSignature {
                p: p as i64,
                q: q as i64,
            });
        }
        Ok(Signature { p, q })
    }

    /// Parse "p,q" (as in a `--sig 3,1` argument).
    pub fn parse(s: &str) -> Result<Self> {
        let mut it = s.split(',');
        let bad = || Error::Parse(format!("expected signature as p,q — got {:?}", s));
        let p: u32 = it
            .next()
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        let q: u32 = it
            .next()
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        if it.next().is_some() {
            return Err(bad());
        }
        Signature::new(p, q)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.p + self.q
    }

    /// Number of coefficients of a multivector: 2^n.
    pub fn dim(&self) -> usize {
        1usize << self.n()
    }

    /// p − q, the residue that drives every classification below.
    pub fn diff(&self) -> i32 {
        self.p as i32 - self.q as i32
    }

    /// Square of the 1-based generator e_i: +1 for i ≤ p, −1 otherwise.
    pub fn gen_square(&self, i: u32) -> i32 {
        debug_assert!(i >= 1 && i <= self.n());
        if i <= self.p {
            1
        } else {
            -1
        }
    }

    /// Display label, e.g. "Cl(3,1)".
    pub fn label(&self) -> String {
        format!("Cl({},{})", self.p, self.q)
    }

    /// Mask of the volume element e_{12…n}.
    pub fn volume_mask(&self) -> Blade {
        ((1u32 << self.n()) - 1) as Blade
    }

    /// All blade masks in ascending order.
    pub fn blades(&self) -> impl Iterator<Item = Blade> {
        0..(self.dim() as Blade)
    }
}

/// Grade (number of indices) of a blade.
pub fn blade_grade(b: Blade) -> u32 {
    b.count_ones()
}

/// Parity sign from interleaving the ascending index sequences of `a` and
/// `b`: counts pairs (i ∈ a, j ∈ b) with j < i, i.e. the transpositions
/// needed to sort the concatenation a·b.
pub fn reorder_sign(a: Blade, b: Blade) -> i32 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Product of two basis blades: resulting mask is the XOR, the sign combines
/// reordering parity with one metric factor per shared generator.
pub fn blade_mul(sig: Signature, a: Blade, b: Blade) -> (Blade, i32) {
    let mut sign = reorder_sign(a, b);
    let mut common = a & b;
    while common != 0 {
        let i = common.trailing_zeros() + 1; // 1-based generator index
        sign *= sig.gen_square(i);
        common &= common - 1;
    }
    (a ^ b, sign)
}

/// Whether two blades commute under the geometric product. With r = grade a,
/// s = grade b and t shared indices, ba = (−1)^{rs−t} ab.
pub fn blades_commute(a: Blade, b: Blade) -> bool {
    let r = blade_grade(a);
    let s = blade_grade(b);
    let t = (a & b).count_ones();
    (r * s - t) % 2 == 0
}

/// Canonical name of a blade: "1" for the empty mask, else "e" followed by
/// the ascending indices, e.g. "e134".
pub fn blade_name(b: Blade) -> String {
    if b == 0 {
        return "1".to_string();
    }
    let mut s = String::from("e");
    for i in 1..=16 {
        if b & (1 << (i - 1)) != 0 {
            s.push_str(&i.to_string());
        }
    }
    s
}

/// Parse a blade name: "1" or "e<digits>" with digits strictly ascending,
/// each between 1 and n.
pub fn parse_blade(tok: &str, sig: Signature) -> Result<Blade> {
    let tok = tok.trim();
    if tok == "1" {
        return Ok(0);
    }
    let digits = tok
        .strip_prefix('e')
        .ok_or_else(|| Error::Parse(format!("bad blade name {:?}", tok)))?;
    if digits.is_empty() {
        return Err(Error::Parse(format!("bad blade name {:?}", tok)));
    }
    let mut mask: Blade = 0;
    let mut last = 0u32;
    for ch in digits.chars() {
        let d = ch
            .to_digit(10)
            .ok_or_else(|| Error::Parse(format!("bad blade name {:?}", tok)))?;
        if d == 0 || d <= last {
            return Err(Error::Parse(format!(
                "blade indices must be ascending and nonzero in {:?}",
                tok
            )));
        }
        if d > sig.n() {
            return Err(Error::Parse(format!(
                "blade index {} exceeds dimension {} in {:?}",
                d,
                sig.n(),
                tok
            )));
        }
        mask |= 1 << (d - 1);
        last = d;
    }
    Ok(mask)
}
