//! Covector sets and the oriented-matroid axioms.
//!
//! A [`CovectorSet`] is a ground-set size together with a finite set of sign
//! vectors. [`CovectorSet::check_axioms`] verifies the four covector axioms:
//!
//! * SV0: the zero vector is present;
//! * SV1: closed under negation;
//! * SV2: closed under composition;
//! * SV3: for every ordered pair `(X, Y)` whose zero sets satisfy
//!   `X_i = 0 ⇒ Y_i = 0` and which is separated by at least one element,
//!   the restriction `X_Y` meets the set.
//!
//! SV3 is checked in the Edmonds–Mandel form; no cocircuit-elimination
//! variant is used. Witnesses are deterministic: always the first violation
//! in canonical covector order.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::poset::FacePoset;
use crate::sign::{Sign, SignVector, SignedPermutation};

/// A finite set of sign vectors of common length.
#[derive(Clone, PartialEq, Eq)]
pub struct CovectorSet {
    n: usize,
    /// Sorted, deduplicated.
    vectors: Vec<SignVector>,
    index: HashSet<SignVector>,
}

impl CovectorSet {
    pub fn new<I: IntoIterator<Item = SignVector>>(n: usize, vectors: I) -> Result<CovectorSet> {
        if n == 0 || n > crate::sign::MAX_LEN {
            return Err(Error::GroundSize(n));
        }
        let mut vs: Vec<SignVector> = vectors.into_iter().collect();
        for v in &vs {
            if v.len() != n {
                return Err(Error::DimensionMismatch(n, v.len()));
            }
        }
        vs.sort();
        vs.dedup();
        let index = vs.iter().copied().collect();
        Ok(CovectorSet {
            n,
            vectors: vs,
            index,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Sorted canonical order.
    pub fn vectors(&self) -> &[SignVector] {
        &self.vectors
    }

    pub fn contains(&self, v: &SignVector) -> bool {
        self.index.contains(v)
    }

    /// Image of the whole set under a signed permutation.
    pub fn transform(&self, g: &SignedPermutation) -> Result<CovectorSet> {
        let vs: Result<Vec<SignVector>> = self.vectors.iter().map(|v| g.apply(v)).collect();
        CovectorSet::new(self.n, vs?)
    }

    /// Check SV0-SV3, reporting the first witness per failed axiom.
    pub fn check_axioms(&self) -> AxiomReport {
        let zero = SignVector::zero(self.n).expect("n validated");
        let sv0 = if self.contains(&zero) {
            None
        } else {
            Some(AxiomViolation::MissingZero)
        };

        let sv1 = self
            .vectors
            .iter()
            .find(|v| !self.contains(&v.negate()))
            .map(|v| AxiomViolation::NegationMissing(*v));

        let mut sv2 = None;
        'sv2: for x in &self.vectors {
            for y in &self.vectors {
                let c = x.compose(y).expect("equal lengths");
                if !self.contains(&c) {
                    sv2 = Some(AxiomViolation::CompositionMissing(*x, *y));
                    break 'sv2;
                }
            }
        }

        let mut sv3 = None;
        'sv3: for x in &self.vectors {
            for y in &self.vectors {
                if !sv3_guard(x, y) {
                    continue;
                }
                if !self.restriction_meets(x, y) {
                    sv3 = Some(AxiomViolation::RestrictionEmpty(*x, *y));
                    break 'sv3;
                }
            }
        }

        AxiomReport { sv0, sv1, sv2, sv3 }
    }

    /// Does `restrict(x, y)` intersect the set? Candidates are enumerated by
    /// ascending number of zeroed entries so the common case exits early.
    fn restriction_meets(&self, x: &SignVector, y: &SignVector) -> bool {
        let conflicts = x.conflict_indices(y).expect("equal lengths");
        let c = conflicts.len();
        debug_assert!(c > 0, "guard requires a separating element");
        let mut masks: Vec<u32> = (1..(1u32 << c)).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let mut z = *x;
            for (k, &i) in conflicts.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    z.set(i, Sign::Zero);
                }
            }
            if self.contains(&z) {
                return true;
            }
        }
        false
    }

    /// Elements that are zero in every covector.
    pub fn loops(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| self.vectors.iter().all(|v| v.get(i).is_zero()))
            .collect()
    }

    /// Pairs `{i, j}` whose columns agree on every vector or are negatives on
    /// every vector.
    pub fn parallel_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let same = self.vectors.iter().all(|v| v.get(i) == v.get(j));
                let anti = self.vectors.iter().all(|v| v.get(i) == v.get(j).negate());
                if same || anti {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// No loops and no parallel pairs.
    pub fn is_simple(&self) -> bool {
        self.loops().is_empty() && self.parallel_pairs().is_empty()
    }

    /// Length of the longest strict chain in the conformal order.
    pub fn rank(&self) -> usize {
        rank_of(&self.vectors)
    }

    /// Hasse diagram of the conformal order.
    pub fn face_poset(&self) -> FacePoset {
        FacePoset::from_covectors(&self.vectors)
    }
}

impl fmt::Debug for CovectorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CovectorSet(n={}, {} vectors)",
            self.n,
            self.vectors.len()
        )
    }
}

/// Longest-chain length over any slice of sign vectors.
pub fn rank_of(vectors: &[SignVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    // X < Y implies X has strictly more zeros, so processing by descending
    // zero count makes the longest-path recurrence well-founded.
    let mut order: Vec<usize> = (0..vectors.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(vectors[i].zero_count()));
    let mut height = vec![0usize; vectors.len()];
    let mut best = 0;
    for (pos, &i) in order.iter().enumerate() {
        let mut h = 0;
        for &j in &order[..pos] {
            if vectors[j] != vectors[i] && vectors[j].leq(&vectors[i]).unwrap_or(false) {
                h = h.max(height[j] + 1);
            }
        }
        height[i] = h;
        best = best.max(h);
    }
    best
}

fn sv3_guard(x: &SignVector, y: &SignVector) -> bool {
    let zero_implies = (0..x.len()).all(|i| !x.get(i).is_zero() || y.get(i).is_zero());
    if !zero_implies {
        return false;
    }
    (0..x.len()).any(|i| {
        let s = x.get(i);
        !s.is_zero() && s == y.get(i).negate()
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AxiomViolation {
    MissingZero,
    NegationMissing(SignVector),
    CompositionMissing(SignVector, SignVector),
    RestrictionEmpty(SignVector, SignVector),
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::MissingZero => write!(f, "zero vector missing"),
            AxiomViolation::NegationMissing(v) => write!(f, "negation of {v} missing"),
            AxiomViolation::CompositionMissing(x, y) => {
                write!(f, "composition {x}∘{y} missing")
            }
            AxiomViolation::RestrictionEmpty(x, y) => {
                write!(f, "restriction of {x} towards {y} misses the set")
            }
        }
    }
}

/// Outcome of the four axiom checks; `None` means the axiom passed.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub sv0: Option<AxiomViolation>,
    pub sv1: Option<AxiomViolation>,
    pub sv2: Option<AxiomViolation>,
    pub sv3: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.sv0.is_none() && self.sv1.is_none() && self.sv2.is_none() && self.sv3.is_none()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, v) in [
            ("SV0", &self.sv0),
            ("SV1", &self.sv1),
            ("SV2", &self.sv2),
            ("SV3", &self.sv3),
        ] {
            match v {
                None => writeln!(f, "{name}: pass")?,
                Some(w) => writeln!(f, "{name}: FAIL ({w})")?,
            }
        }
        Ok(())
    }
}

/// An axiom-passing covector set with a marked element (0-based index).
#[derive(Clone, Debug)]
pub struct AffineOrientedMatroid {
    om: CovectorSet,
    marked: usize,
}

impl AffineOrientedMatroid {
    /// `marked` is a 0-based element index; it must not be a loop and the
    /// covector set must pass all four axioms.
    pub fn new(om: CovectorSet, marked: usize) -> Result<AffineOrientedMatroid> {
        if marked >= om.ground_size() {
            return Err(Error::InvalidMarking(format!(
                "element {} out of range 1..={}",
                marked + 1,
                om.ground_size()
            )));
        }
        if om.loops().contains(&marked) {
            return Err(Error::InvalidMarking(format!(
                "element {} is a loop",
                marked + 1
            )));
        }
        let report = om.check_axioms();
        if !report.all_pass() {
            return Err(Error::Domain(format!(
                "covector set is not an oriented matroid:\n{report}"
            )));
        }
        Ok(AffineOrientedMatroid { om, marked })
    }

    pub fn covectors(&self) -> &CovectorSet {
        &self.om
    }

    pub fn marked(&self) -> usize {
        self.marked
    }

    /// The sign vectors positive at the marked element. The marked entry is
    /// retained in storage; poset computations on the result ignore it
    /// (it is constant).
    pub fn affine_faces(&self) -> Vec<SignVector> {
        self.om
            .vectors()
            .iter()
            .filter(|v| v.get(self.marked) == Sign::Plus)
            .copied()
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.om.rank()
    }

    /// Rank convention for the affine part: one less than the rank of the
    /// underlying oriented matroid.
    pub fn affine_rank(&self) -> usize {
        self.om.rank().saturating_sub(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign::full_cube;

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    fn set(n: usize, strs: &[&str]) -> CovectorSet {
        CovectorSet::new(n, strs.iter().map(|s| s.parse().unwrap())).unwrap()
    }

    #[test]
    fn zero_only_is_om() {
        for n in 1..=4 {
            let v = CovectorSet::new(n, [SignVector::zero(n).unwrap()]).unwrap();
            assert!(v.check_axioms().all_pass());
            assert_eq!(v.rank(), 0);
        }
    }

    #[test]
    fn full_cube_is_om() {
        let v = CovectorSet::new(2, full_cube(2).unwrap()).unwrap();
        assert!(v.check_axioms().all_pass());
        assert_eq!(v.len(), 9);
        assert!(v.loops().is_empty());
        assert!(v.parallel_pairs().is_empty());
        assert_eq!(v.rank(), 2);
    }

    #[test]
    fn sv1_failure_witness() {
        let v = set(2, &["00", "+0"]);
        let report = v.check_axioms();
        assert!(report.sv0.is_none());
        assert_eq!(report.sv1, Some(AxiomViolation::NegationMissing(sv("+0"))));
    }

    #[test]
    fn loops_and_parallel() {
        let v = CovectorSet::new(3, [SignVector::zero(3).unwrap()]).unwrap();
        assert_eq!(v.loops(), vec![0, 1, 2]);

        let cube = CovectorSet::new(2, full_cube(2).unwrap()).unwrap();
        assert!(cube.loops().is_empty());
        assert!(cube.parallel_pairs().is_empty());

        // doubling the single column of the 1-element cube
        let doubled = set(2, &["00", "++", "--"]);
        assert_eq!(doubled.parallel_pairs(), vec![(0, 1)]);
        // opposite orientations
        let anti = set(2, &["00", "+-", "-+"]);
        assert_eq!(anti.parallel_pairs(), vec![(0, 1)]);
    }

    #[test]
    fn rank_chain() {
        // covectors of 3 coordinate planes in 3-space contain the chain
        // (000) < (+00) < (++0) < (+++)
        let v = CovectorSet::new(3, full_cube(3).unwrap()).unwrap();
        assert_eq!(v.rank(), 3);
    }

    #[test]
    fn affine_faces_of_cube() {
        let om = CovectorSet::new(2, full_cube(2).unwrap()).unwrap();
        let aff = AffineOrientedMatroid::new(om, 1).unwrap();
        let mut got = aff.affine_faces();
        got.sort();
        let mut want = vec![sv("0+"), sv("++"), sv("-+")];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(aff.affine_rank(), 1);
    }

    #[test]
    fn marking_a_loop_rejected() {
        let v = set(2, &["00", "+0", "-0"]);
        assert!(v.check_axioms().all_pass());
        assert!(AffineOrientedMatroid::new(v.clone(), 1).is_err());
        assert!(AffineOrientedMatroid::new(v, 0).is_ok());
    }

    #[test]
    fn every_vector_below_a_maximal_one() {
        // consequence of SV2 in an axiom-passing set
        let v = CovectorSet::new(3, full_cube(3).unwrap()).unwrap();
        let maxima: Vec<SignVector> = v
            .vectors()
            .iter()
            .filter(|x| v.vectors().iter().all(|y| *y == **x || !x.leq(y).unwrap()))
            .copied()
            .collect();
        for x in v.vectors() {
            assert!(maxima.iter().any(|m| x.leq(m).unwrap()));
        }
    }
}
