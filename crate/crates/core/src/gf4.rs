//! Arithmetic in the four-element field GF(4) = {0, 1, w, w²}.
//!
//! Elements are stored as 2-bit codes in the polynomial basis {1, w}:
//! bit 0 is the coefficient of 1 and bit 1 the coefficient of w, so
//! `00 → 0`, `01 → 1`, `10 → w`, `11 → w + 1 = w²`. Addition is XOR of the
//! codes; multiplication and inversion go through 4×4 lookup tables.
//!
//! Textual symbols are `0 1 w W`, with capital `W` standing for w².

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// An element of GF(4).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf4(u8);

const MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];

// INV[0] is never read through the public API.
const INV: [u8; 4] = [0, 1, 3, 2];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    /// The primitive element w, with w² = w + 1.
    pub const W: Gf4 = Gf4(2);
    /// w² = w + 1.
    pub const W2: Gf4 = Gf4(3);

    /// All four elements in code order `0, 1, w, w²`.
    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::W, Gf4::W2];
    /// The multiplicative group `1, w, w²`.
    pub const NONZERO: [Gf4; 3] = [Gf4::ONE, Gf4::W, Gf4::W2];

    /// Builds an element from its 2-bit code; `None` if `bits > 3`.
    pub const fn from_bits(bits: u8) -> Option<Gf4> {
        if bits < 4 {
            Some(Gf4(bits))
        } else {
            None
        }
    }

    #[inline]
    pub const fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn add(self, other: Gf4) -> Gf4 {
        Gf4(self.0 ^ other.0)
    }

    #[inline]
    pub const fn mul(self, other: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][other.0 as usize])
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(self) -> Result<Gf4> {
        if self.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(Gf4(INV[self.0 as usize]))
        }
    }

    pub fn pow(self, mut e: u32) -> Gf4 {
        let mut base = self;
        let mut acc = Gf4::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// The textual symbol: one of `0 1 w W`.
    pub const fn symbol(self) -> char {
        match self.0 {
            0 => '0',
            1 => '1',
            2 => 'w',
            _ => 'W',
        }
    }

    /// Parses a single symbol. Accepts `0 1 w W`, plus `w^2`/`w2` as
    /// spellings of w².
    pub fn from_symbol(token: &str) -> Option<Gf4> {
        match token {
            "0" => Some(Gf4::ZERO),
            "1" => Some(Gf4::ONE),
            "w" => Some(Gf4::W),
            "W" | "w^2" | "w2" => Some(Gf4::W2),
            _ => None,
        }
    }
}

/// Field addition.
pub fn add(a: Gf4, b: Gf4) -> Gf4 {
    a.add(b)
}

/// Field multiplication.
pub fn mul(a: Gf4, b: Gf4) -> Gf4 {
    a.mul(b)
}

/// Multiplicative inverse, failing on zero.
pub fn inv(a: Gf4) -> Result<Gf4> {
    a.inv()
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4::add(self, rhs)
    }
}

impl Sub for Gf4 {
    type Output = Gf4;
    #[inline]
    fn sub(self, rhs: Gf4) -> Gf4 {
        Gf4::add(self, rhs)
    }
}

impl Neg for Gf4 {
    type Output = Gf4;
    #[inline]
    fn neg(self) -> Gf4 {
        self
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4::mul(self, rhs)
    }
}

impl Div for Gf4 {
    type Output = Gf4;
    /// Panics on division by zero, like integer division.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Gf4) -> Gf4 {
        self * rhs.inv().expect("division by zero in GF(4)")
    }
}

impl AddAssign for Gf4 {
    fn add_assign(&mut self, rhs: Gf4) {
        *self = *self + rhs;
    }
}

impl SubAssign for Gf4 {
    // characteristic 2
    #[allow(clippy::suspicious_op_assign_impl)]
    fn sub_assign(&mut self, rhs: Gf4) {
        *self += rhs;
    }
}

impl MulAssign for Gf4 {
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = *self * rhs;
    }
}
