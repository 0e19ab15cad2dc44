//! Monomials as exponent vectors over a fixed ambient variable set.
//!
//! The public [`Monomial`] stores `u32` exponents with overflow-checked
//! arithmetic. The homology and lattice engines internally use [`Packed`], a
//! 16-lane × 8-bit SWAR encoding in a `u128`, which supports divisibility,
//! lcm and product in a handful of word operations. Desk-scale inputs (at
//! most 16 variables, exponents below 128) fit the packed form; anything
//! larger is rejected with a resource error rather than silently truncated.

use crate::error::{Error, Result};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A monomial in `n` variables, stored as its exponent vector.
///
/// The unit monomial is the zero vector. Variables are 1-indexed in the
/// textual form (`x1`, `x2`, ...) to match the vertex labels of graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The unit monomial (all exponents zero) in `n` variables.
    pub fn unit(n: usize) -> Self {
        Monomial { exps: alloc::vec![0; n] }
    }

    /// A single variable `x_i` (1-indexed) in `n` variables.
    pub fn variable(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::Argument(format!("variable index {i} out of range 1..={n}")));
        }
        let mut exps = alloc::vec![0; n];
        exps[i - 1] = 1;
        Ok(Monomial { exps })
    }

    /// Number of ambient variables.
    pub fn vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of the 1-indexed variable `i`.
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// 1-indexed variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.vars(), other.vars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// Product, failing on exponent overflow.
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.vars(), other.vars());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or_else(|| {
                Error::Validation(String::from("exponent overflow in monomial product"))
            })?);
        }
        Ok(Monomial { exps })
    }

    /// Sort key used for the canonical generator order: degree, then the
    /// exponent vector lexicographically.
    pub fn sort_key(&self) -> (u64, Vec<u32>) {
        (self.degree(), self.exps.clone())
    }

    /// Parses the textual form `x1^2*x3`; `1` denotes the unit monomial.
    pub fn parse(text: &str, n: usize) -> Result<Monomial> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse {
                line: 1,
                message: String::from("empty monomial"),
            });
        }
        let mut exps = alloc::vec![0u32; n];
        if text == "1" {
            return Ok(Monomial { exps });
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let rest = factor.strip_prefix('x').ok_or_else(|| Error::Parse {
                line: 1,
                message: format!("expected a factor like x<i> or x<i>^<e>, got `{factor}`"),
            })?;
            let (var, exp) = match rest.split_once('^') {
                Some((v, e)) => (v, e),
                None => (rest, "1"),
            };
            let i: usize = var.parse().map_err(|_| Error::Parse {
                line: 1,
                message: format!("bad variable index `{var}`"),
            })?;
            let e: u32 = exp.parse().map_err(|_| Error::Parse {
                line: 1,
                message: format!("bad exponent `{exp}`"),
            })?;
            if i == 0 || i > n {
                return Err(Error::Parse {
                    line: 1,
                    message: format!("variable x{i} out of range 1..={n}"),
                });
            }
            exps[i - 1] = exps[i - 1].checked_add(e).ok_or_else(|| Error::Parse {
                line: 1,
                message: String::from("exponent overflow"),
            })?;
        }
        Ok(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Packed SWAR representation
// ---------------------------------------------------------------------------

/// Maximum ambient variables representable in packed form.
pub(crate) const PACK_VARS: usize = 16;
/// Maximum exponent representable in packed form (high bit must stay clear
/// for the SWAR comparisons).
pub(crate) const PACK_MAX_EXP: u32 = 127;

const HI: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;

/// A monomial in at most 16 variables with exponents below 128, packed one
/// byte per variable into a `u128`. Divisibility and lcm are constant-time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Packed(pub u128);

impl Packed {
    pub const UNIT: Packed = Packed(0);

    #[inline]
    pub fn exp(self, lane: usize) -> u8 {
        (self.0 >> (8 * lane)) as u8
    }

    #[inline]
    pub fn with_exp(self, lane: usize, e: u8) -> Packed {
        let cleared = self.0 & !(0xffu128 << (8 * lane));
        Packed(cleared | ((e as u128) << (8 * lane)))
    }

    /// Per-byte `self <= other`.
    #[inline]
    pub fn divides(self, other: Packed) -> bool {
        (((other.0 | HI) - self.0) & HI) == HI
    }

    /// Per-byte maximum.
    #[inline]
    pub fn lcm(self, other: Packed) -> Packed {
        // d has 0x80 in each byte where self >= other
        let d = ((self.0 | HI) - other.0) & HI;
        // expand to a full-byte mask: 0x80 -> 0xff, 0x00 -> 0x00
        let mask = d | (d - (d >> 7));
        Packed((self.0 & mask) | (other.0 & !mask))
    }

    /// Product; caller keeps exponents within `PACK_MAX_EXP` (checked
    /// in debug builds and guarded by cap logic upstream).
    #[inline]
    pub fn mul(self, other: Packed) -> Option<Packed> {
        debug_assert_eq!(self.0 & HI, 0);
        debug_assert_eq!(other.0 & HI, 0);
        let sum = self.0 + other.0;
        if sum & HI != 0 {
            return None; // some exponent left the representable range
        }
        Some(Packed(sum))
    }

    #[inline]
    pub fn degree(self) -> u32 {
        let mut d = 0u32;
        let mut v = self.0;
        while v != 0 {
            d += (v as u8) as u32;
            v >>= 8;
        }
        d
    }

    #[inline]
    pub fn support_mask(self, nvars: usize) -> u32 {
        let mut m = 0u32;
        for i in 0..nvars {
            if self.exp(i) > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    pub fn from_monomial(m: &Monomial) -> Result<Packed> {
        if m.vars() > PACK_VARS {
            return Err(Error::Resource {
                what: "packed monomial variables",
                limit: PACK_VARS,
                need: m.vars(),
            });
        }
        let mut v = 0u128;
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > PACK_MAX_EXP {
                return Err(Error::Resource {
                    what: "packed monomial exponent",
                    limit: PACK_MAX_EXP as usize,
                    need: e as usize,
                });
            }
            v |= (e as u128) << (8 * i);
        }
        Ok(Packed(v))
    }

    pub fn to_monomial(self, nvars: usize) -> Monomial {
        Monomial::new((0..nvars).map(|i| self.exp(i) as u32).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let m = Monomial::parse("x1^2*x3", 3).unwrap();
        assert_eq!(m.exponents(), &[2, 0, 1]);
        assert_eq!(m.to_string(), "x1^2*x3");
        assert_eq!(Monomial::parse("1", 4).unwrap(), Monomial::unit(4));
        assert_eq!(Monomial::unit(4).to_string(), "1");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Monomial::parse("y1", 3).is_err());
        assert!(Monomial::parse("x0", 3).is_err());
        assert!(Monomial::parse("x4", 3).is_err());
        assert!(Monomial::parse("x1^", 3).is_err());
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::new(alloc::vec![1, 1, 0]);
        let b = Monomial::new(alloc::vec![0, 1, 1]);
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b).exponents(), &[1, 1, 1]);
        assert!(a.divides(&a.lcm(&b)));
    }

    #[test]
    fn packed_matches_unpacked() {
        let a = Monomial::new(alloc::vec![3, 0, 5, 1]);
        let b = Monomial::new(alloc::vec![1, 2, 5, 0]);
        let (pa, pb) = (Packed::from_monomial(&a).unwrap(), Packed::from_monomial(&b).unwrap());
        assert_eq!(pa.divides(pb), a.divides(&b));
        assert_eq!(pa.lcm(pb).to_monomial(4), a.lcm(&b));
        assert_eq!(pa.mul(pb).unwrap().to_monomial(4), a.checked_mul(&b).unwrap());
        assert_eq!(pa.degree() as u64, a.degree());
    }

    #[test]
    fn packed_rejects_out_of_range() {
        assert!(Packed::from_monomial(&Monomial::unit(17)).is_err());
        assert!(Packed::from_monomial(&Monomial::new(alloc::vec![200])).is_err());
    }
}
