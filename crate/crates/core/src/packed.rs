//! Bit-sliced GF(4) vectors of length at most 128.
//!
//! A vector is two bit planes: `lo` holds the coefficient of 1 and `hi` the
//! coefficient of w at every position. Addition is XOR of both planes, and
//! scaling by w maps `(lo, hi)` to `(hi, lo ^ hi)`.

use crate::gf4::Gf4;

pub(crate) const MAX_LEN: usize = 128;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub(crate) struct Packed {
    pub lo: u128,
    pub hi: u128,
}

impl Packed {
    pub fn from_slice(v: &[Gf4]) -> Packed {
        assert!(v.len() <= MAX_LEN, "packed vectors hold at most 128 symbols");
        let mut p = Packed::default();
        for (i, x) in v.iter().enumerate() {
            let b = x.bits();
            p.lo |= ((b & 1) as u128) << i;
            p.hi |= (((b >> 1) & 1) as u128) << i;
        }
        p
    }

    pub fn to_vec(self, len: usize) -> Vec<Gf4> {
        (0..len).map(|i| self.get(i)).collect()
    }

    #[inline]
    pub fn get(self, i: usize) -> Gf4 {
        let b = ((self.lo >> i) & 1) as u8 | ((((self.hi >> i) & 1) as u8) << 1);
        Gf4::from_bits(b).expect("two bits")
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        (self.lo | self.hi) == 0
    }

    #[inline]
    pub fn weight(self) -> u32 {
        (self.lo | self.hi).count_ones()
    }

    #[inline]
    pub fn support(self) -> u128 {
        self.lo | self.hi
    }

    #[inline]
    pub fn add(self, o: Packed) -> Packed {
        Packed {
            lo: self.lo ^ o.lo,
            hi: self.hi ^ o.hi,
        }
    }

    #[inline]
    pub fn scale(self, c: Gf4) -> Packed {
        match c.bits() {
            0 => Packed::default(),
            1 => self,
            2 => Packed {
                lo: self.hi,
                hi: self.lo ^ self.hi,
            },
            _ => Packed {
                lo: self.lo ^ self.hi,
                hi: self.lo,
            },
        }
    }

    /// Position of the lowest nonzero symbol.
    #[inline]
    pub fn lowest(self) -> Option<usize> {
        let s = self.support();
        (s != 0).then(|| s.trailing_zeros() as usize)
    }
}

/// An echelon basis grown one vector at a time.
///
/// Each stored vector is reduced against all earlier ones and scaled so its
/// pivot symbol is 1. Reducing a vector against the basis in insertion order
/// therefore leaves a residue that is zero exactly when the vector lies in
/// the span.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    vecs: Vec<(usize, Packed)>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon { vecs: Vec::new() }
    }

    pub fn with_capacity(n: usize) -> Echelon {
        Echelon {
            vecs: Vec::with_capacity(n),
        }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.vecs.len()
    }

    #[inline]
    pub fn reduce(&self, mut v: Packed) -> Packed {
        for &(p, b) in &self.vecs {
            let c = v.get(p);
            if !c.is_zero() {
                v = v.add(b.scale(c));
            }
        }
        v
    }

    /// Inserts `v`; returns false (and leaves the basis unchanged) when `v`
    /// is already in the span.
    #[inline]
    pub fn insert(&mut self, v: Packed) -> bool {
        let r = self.reduce(v);
        match r.lowest() {
            None => false,
            Some(p) => {
                let inv = r.get(p).inv().expect("nonzero pivot");
                self.vecs.push((p, r.scale(inv)));
                true
            }
        }
    }

    #[inline]
    pub fn pop(&mut self) {
        self.vecs.pop();
    }

    #[inline]
    pub fn contains(&self, v: Packed) -> bool {
        self.reduce(v).is_zero()
    }
}

/// Rank of a set of packed vectors.
pub(crate) fn rank_of(vs: &[Packed]) -> usize {
    let mut e = Echelon::with_capacity(vs.len());
    for &v in vs {
        e.insert(v);
    }
    e.rank()
}
