//! Sign vectors and the signed-permutation group.
//!
//! A sign vector is a fixed-length word over `{+, 0, -}` recording on which
//! side of each oriented hyperplane a face sits. Entries are packed two bits
//! apiece into a `u64`, with entry 0 in the most significant pair, so that
//! plain integer comparison of the packed words is exactly the canonical
//! entrywise order with `0 < + < -`. Composition, negation and the order test
//! are then single word operations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported ground-set size.
pub const MAX_LEN: usize = 32;

const LO: u64 = 0x5555_5555_5555_5555; // low bit of every 2-bit pair

/// One of `+`, `0`, `-`. The derived order `0 < + < -` is the canonical
/// character order used for all tie-breaking in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
#[repr(u8)]
pub enum Sign {
    Zero = 0,
    Plus = 1,
    Minus = 2,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    /// Numeric value in `{-1, 0, 1}`.
    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Zero => 0,
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i8(v: i8) -> Sign {
        match v.signum() {
            0 => Sign::Zero,
            1 => Sign::Plus,
            _ => Sign::Minus,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Zero => '0',
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// A packed sign vector of fixed length `1..=32`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignVector {
    len: u8,
    bits: u64,
}

impl SignVector {
    /// The all-zero vector of the given length.
    pub fn zero(len: usize) -> Result<SignVector> {
        if len == 0 || len > MAX_LEN {
            return Err(Error::GroundSize(len));
        }
        Ok(SignVector {
            len: len as u8,
            bits: 0,
        })
    }

    pub fn from_signs(signs: &[Sign]) -> Result<SignVector> {
        let mut v = SignVector::zero(signs.len())?;
        for (i, &s) in signs.iter().enumerate() {
            v.set(i, s);
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false // length is always >= 1
    }

    #[inline]
    fn shift(i: usize) -> u32 {
        (62 - 2 * i) as u32
    }

    #[inline]
    pub fn get(&self, i: usize) -> Sign {
        debug_assert!(i < self.len());
        match (self.bits >> Self::shift(i)) & 0b11 {
            0 => Sign::Zero,
            1 => Sign::Plus,
            _ => Sign::Minus,
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, s: Sign) {
        debug_assert!(i < self.len());
        let sh = Self::shift(i);
        self.bits = (self.bits & !(0b11 << sh)) | ((s as u64) << sh);
    }

    /// Copy with one entry replaced.
    pub fn with(&self, i: usize, s: Sign) -> SignVector {
        let mut v = *self;
        v.set(i, s);
        v
    }

    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    /// Mask with both bits set on every nonzero entry pair.
    #[inline]
    fn nonzero_mask(&self) -> u64 {
        let nz = (self.bits | (self.bits >> 1)) & LO;
        nz | (nz << 1)
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn zero_count(&self) -> usize {
        self.len() - ((self.bits | (self.bits >> 1)) & LO).count_ones() as usize
    }

    #[inline]
    fn check_len(&self, other: &SignVector) -> Result<()> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    /// Composition `X∘Y`: keep the nonzero entries of `X`, fill the rest
    /// from `Y`.
    pub fn compose(&self, other: &SignVector) -> Result<SignVector> {
        self.check_len(other)?;
        let m = self.nonzero_mask();
        Ok(SignVector {
            len: self.len,
            bits: self.bits | (other.bits & !m),
        })
    }

    /// Entrywise negation.
    pub fn negate(&self) -> SignVector {
        SignVector {
            len: self.len,
            bits: ((self.bits & LO) << 1) | ((self.bits >> 1) & LO),
        }
    }

    /// Conformal order: `X ≤ Y` iff every nonzero entry of `X` agrees
    /// with `Y`.
    pub fn leq(&self, other: &SignVector) -> Result<bool> {
        self.check_len(other)?;
        Ok((other.bits & self.nonzero_mask()) == self.bits)
    }

    /// Indices where `X_i = -Y_i ≠ 0` (the separating set of the pair).
    pub fn conflict_indices(&self, other: &SignVector) -> Result<Vec<usize>> {
        self.check_len(other)?;
        let neg = other.negate();
        Ok((0..self.len())
            .filter(|&i| {
                let s = self.get(i);
                !s.is_zero() && s == neg.get(i)
            })
            .collect())
    }

    /// Restriction `X_Y`: every vector strictly below `X` that agrees with
    /// `X` outside the conflict set, i.e. the result of zeroing any nonempty
    /// subset of the indices where `X_i = -Y_i ≠ 0`. Sorted canonically.
    pub fn restrict(&self, other: &SignVector) -> Result<Vec<SignVector>> {
        let conflicts = self.conflict_indices(other)?;
        if conflicts.len() > 24 {
            return Err(Error::ResourceLimit(format!(
                "restriction with {} conflicting entries",
                conflicts.len()
            )));
        }
        let mut out = Vec::with_capacity((1usize << conflicts.len()) - 1);
        for mask in 1u32..(1u32 << conflicts.len()) {
            let mut z = *self;
            for (k, &i) in conflicts.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    z.set(i, Sign::Zero);
                }
            }
            out.push(z);
        }
        out.sort();
        Ok(out)
    }
}

impl PartialOrd for SignVector {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignVector {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Entrywise canonical order ('0' < '+' < '-'); the packing makes this
        // a word comparison for equal lengths.
        self.len.cmp(&other.len).then(self.bits.cmp(&other.bits))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.signs() {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignVector> {
        let chars: Vec<char> = s.chars().collect();
        let mut v = SignVector::zero(chars.len())?;
        for (i, c) in chars.iter().enumerate() {
            match Sign::from_char(*c) {
                Some(sign) => v.set(i, sign),
                None => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("invalid sign character {c:?}"),
                    })
                }
            }
        }
        Ok(v)
    }
}

/// All sign vectors of a given length, in canonical order.
pub fn full_cube(len: usize) -> Result<Vec<SignVector>> {
    if len == 0 || len > 16 {
        return Err(Error::GroundSize(len));
    }
    let mut out = vec![SignVector::zero(len)?];
    for i in 0..len {
        let mut next = Vec::with_capacity(out.len() * 3);
        for v in &out {
            next.push(*v);
            next.push(v.with(i, Sign::Plus));
            next.push(v.with(i, Sign::Minus));
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// A relabeling of the ground set together with a reorientation subset,
/// acting on sign vectors by `(g·X)_{π(i)} = ±X_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedPermutation {
    /// `image[i]` is the 0-based position that source index `i` moves to.
    image: Vec<u8>,
    /// Bit `i` set means the sign at source index `i` is flipped.
    flips: u32,
}

impl SignedPermutation {
    pub fn new(image: Vec<u8>, flips: u32) -> Result<SignedPermutation> {
        let n = image.len();
        if n == 0 || n > MAX_LEN {
            return Err(Error::GroundSize(n));
        }
        let mut seen = vec![false; n];
        for &t in &image {
            if (t as usize) >= n || seen[t as usize] {
                return Err(Error::Domain(format!("not a permutation: {image:?}")));
            }
            seen[t as usize] = true;
        }
        Ok(SignedPermutation { image, flips })
    }

    pub fn identity(n: usize) -> SignedPermutation {
        SignedPermutation {
            image: (0..n as u8).collect(),
            flips: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn image_of(&self, i: usize) -> usize {
        self.image[i] as usize
    }

    pub fn flips_at(&self, i: usize) -> bool {
        self.flips & (1 << i) != 0
    }

    pub fn apply(&self, v: &SignVector) -> Result<SignVector> {
        if v.len() != self.len() {
            return Err(Error::DimensionMismatch(self.len(), v.len()));
        }
        let mut out = SignVector::zero(v.len())?;
        for i in 0..v.len() {
            let s = if self.flips_at(i) {
                v.get(i).negate()
            } else {
                v.get(i)
            };
            out.set(self.image[i] as usize, s);
        }
        Ok(out)
    }

    /// Group law: `(g.then_after(h))` is `g∘h`, the permutation applying `h`
    /// first. `apply(g∘h, X) = apply(g, apply(h, X))`.
    pub fn after(&self, h: &SignedPermutation) -> Result<SignedPermutation> {
        if self.len() != h.len() {
            return Err(Error::DimensionMismatch(self.len(), h.len()));
        }
        let n = self.len();
        let mut image = vec![0u8; n];
        let mut flips = 0u32;
        for (i, slot) in image.iter_mut().enumerate() {
            let mid = h.image[i] as usize;
            *slot = self.image[mid];
            if h.flips_at(i) ^ self.flips_at(mid) {
                flips |= 1 << i;
            }
        }
        SignedPermutation::new(image, flips)
    }

    #[allow(clippy::needless_range_loop)]
    pub fn inverse(&self) -> SignedPermutation {
        let n = self.len();
        let mut image = vec![0u8; n];
        let mut flips = 0u32;
        for i in 0..n {
            image[self.image[i] as usize] = i as u8;
            if self.flips_at(i) {
                flips |= 1 << self.image[i];
            }
        }
        SignedPermutation { image, flips }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = self.image.iter().map(|t| (t + 1).to_string()).collect();
        let reoriented: Vec<String> = (0..self.len())
            .filter(|&i| self.flips_at(i))
            .map(|i| (i + 1).to_string())
            .collect();
        write!(
            f,
            "relabel [{}] reorient {{{}}}",
            images.join(" "),
            reoriented.join(" ")
        )
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    #[test]
    fn compose_paper_examples() {
        // R∘X = (0-)∘(-+) = (--)
        assert_eq!(sv("0-").compose(&sv("-+")).unwrap(), sv("--"));
        // W∘Y = (-+00+)∘(---++) = (-+-++)
        assert_eq!(sv("-+00+").compose(&sv("---++")).unwrap(), sv("-+-++"));
        // Y∘W = (---++)∘(-+00+) = (---++)
        assert_eq!(sv("---++").compose(&sv("-+00+")).unwrap(), sv("---++"));
    }

    #[test]
    fn compose_zero_identity() {
        for s in ["+-0", "000", "++++", "-0-0"] {
            let x = sv(s);
            let z = SignVector::zero(x.len()).unwrap();
            assert_eq!(x.compose(&z).unwrap(), x);
            assert_eq!(z.compose(&x).unwrap(), x);
            assert_eq!(x.compose(&x).unwrap(), x);
        }
    }

    #[test]
    fn compose_length_mismatch() {
        assert!(sv("+-").compose(&sv("+-0")).is_err());
    }

    #[test]
    fn negate_examples() {
        assert_eq!(sv("+-0").negate(), sv("-+0"));
        assert_eq!(sv("00").negate(), sv("00"));
        assert_eq!(sv("-+-++").negate().negate(), sv("-+-++"));
    }

    #[test]
    fn leq_examples() {
        // A < P < Y with A=(00), P=(+0), Y=(+-)
        assert!(sv("00").leq(&sv("+0")).unwrap());
        assert!(sv("+0").leq(&sv("+-")).unwrap());
        assert!(sv("+0").leq(&sv("+0")).unwrap());
        assert!(!sv("+0").leq(&sv("-+")).unwrap());
    }

    #[test]
    fn restrict_paper_examples() {
        // (--)_{(+-)} = {(0-)}
        assert_eq!(sv("--").restrict(&sv("+-")).unwrap(), vec![sv("0-")]);
        // X_W = {(0++++)}
        assert_eq!(
            sv("+++++").restrict(&sv("-+00+")).unwrap(),
            vec![sv("0++++")]
        );
        // X_Y: seven vectors
        let got = sv("+++++").restrict(&sv("---++")).unwrap();
        let want: Vec<SignVector> = [
            "0++++", "+0+++", "++0++", "00+++", "0+0++", "+00++", "000++",
        ]
        .iter()
        .map(|s| sv(s))
        .collect();
        let mut want = want;
        want.sort();
        assert_eq!(got, want);
        // Y_X = {P, A, R} = {(+0),(00),(0-)}
        let got = sv("+-").restrict(&sv("-+")).unwrap();
        let mut want = vec![sv("+0"), sv("00"), sv("0-")];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn restrict_strictly_below() {
        for (a, b) in [("+-+", "-+-"), ("++0", "--0"), ("+0-", "-0+")] {
            let x = sv(a);
            for z in x.restrict(&sv(b)).unwrap() {
                assert!(z.leq(&x).unwrap());
                assert_ne!(z, x);
            }
        }
    }

    #[test]
    fn canonical_order_is_entrywise() {
        // '0' < '+' < '-' entrywise from the left.
        assert!(sv("00") < sv("0+"));
        assert!(sv("0+") < sv("0-"));
        assert!(sv("0-") < sv("+0"));
        assert!(sv("+-") < sv("-0"));
    }

    #[test]
    fn signed_permutation_action() {
        // swap {1,2}, reorient {1} on (+-): position 2 gets -(+) = '-',
        // position 1 gets the flipped... only index 1 (1-based) is reoriented.
        let g = SignedPermutation::new(vec![1, 0], 0b01).unwrap();
        assert_eq!(g.apply(&sv("+-")).unwrap(), sv("--"));
        let id = SignedPermutation::identity(2);
        assert_eq!(id.apply(&sv("+-")).unwrap(), sv("+-"));
    }

    #[test]
    fn group_laws_exhaustive_n2() {
        let vectors = full_cube(2).unwrap();
        let perms = permutations(2);
        let mut group = Vec::new();
        for p in &perms {
            for flips in 0..4u32 {
                group.push(SignedPermutation::new(p.clone(), flips).unwrap());
            }
        }
        assert_eq!(group.len(), 8);
        for g in &group {
            for h in &group {
                let gh = g.after(h).unwrap();
                for v in &vectors {
                    assert_eq!(gh.apply(v).unwrap(), g.apply(&h.apply(v).unwrap()).unwrap());
                }
            }
            let ginv = g.inverse();
            for v in &vectors {
                assert_eq!(ginv.apply(&g.apply(v).unwrap()).unwrap(), *v);
            }
        }
        // leq is preserved by every group element, over all 9×9 pairs.
        for g in &group {
            for x in &vectors {
                for y in &vectors {
                    assert_eq!(
                        x.leq(y).unwrap(),
                        g.apply(x).unwrap().leq(&g.apply(y).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn action_commutes_with_algebra_n3() {
        let vectors = full_cube(3).unwrap();
        let mut group = Vec::new();
        for p in permutations(3) {
            for flips in 0..8u32 {
                group.push(SignedPermutation::new(p.clone(), flips).unwrap());
            }
        }
        for g in &group {
            for x in &vectors {
                assert_eq!(g.apply(&x.negate()).unwrap(), g.apply(x).unwrap().negate());
                for y in &vectors {
                    let lhs = g.apply(&x.compose(y).unwrap()).unwrap();
                    let rhs = g.apply(x).unwrap().compose(&g.apply(y).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                    // restriction commutes as a set
                    let mut lr: Vec<_> = x
                        .restrict(y)
                        .unwrap()
                        .iter()
                        .map(|z| g.apply(z).unwrap())
                        .collect();
                    lr.sort();
                    let rr = g.apply(x).unwrap().restrict(&g.apply(y).unwrap()).unwrap();
                    assert_eq!(lr, rr);
                }
            }
        }
    }

    #[test]
    fn permutations_count() {
        assert_eq!(permutations(1).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(5).len(), 120);
    }
}
