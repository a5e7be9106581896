//! Chirotopes: alternating sign maps on r-tuples, the bridge between
//! rational vector configurations and covector sets.
//!
//! Storage is one sign per sorted r-subset in lexicographic order; values on
//! arbitrary tuples follow by alternation. `verify_exchange` checks the
//! pivoting form of the exchange axiom literally over all ordered tuple
//! pairs; `gp3_and_bases_ok` is the equivalent fast check (three-term
//! Grassmann–Plücker sign relations plus basis exchange of the support)
//! used by the enumeration inner loop. Tests assert the two agree.

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::Rat;
use crate::matroid::CovectorSet;
use crate::sign::{Sign, SignVector, SignedPermutation};

/// Sorted r-subsets of `0..m` in lexicographic order.
pub fn sorted_tuples(m: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut cur: Vec<usize> = (0..r).collect();
    if r > m {
        return out;
    }
    loop {
        out.push(cur.clone());
        // advance
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + m - r {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Lexicographic rank of a sorted tuple among the r-subsets of `0..m`.
fn lex_rank(m: usize, tuple: &[usize]) -> usize {
    let r = tuple.len();
    let mut rank = 0usize;
    let mut prev: i64 = -1;
    for (i, &t) in tuple.iter().enumerate() {
        for v in (prev + 1) as usize..t {
            rank += crate::geometry::binomial(m - v - 1, r - i - 1) as usize;
        }
        prev = t as i64;
    }
    rank
}

/// Sort a tuple, returning the permutation parity, or `None` on repeats.
fn sort_with_parity(tuple: &[usize]) -> Option<(Vec<usize>, i8)> {
    let mut v = tuple.to_vec();
    let mut parity = 1i8;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            parity = -parity;
            j -= 1;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((v, parity))
}

/// Witness of a failed chirotope check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChirotopeDefect {
    IdenticallyZero,
    /// Ordered tuples `(x, y)` for which no exchange index works.
    ExchangeFailure {
        x: Vec<usize>,
        y: Vec<usize>,
    },
}

impl fmt::Display for ChirotopeDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChirotopeDefect::IdenticallyZero => write!(f, "identically zero"),
            ChirotopeDefect::ExchangeFailure { x, y } => {
                write!(f, "exchange fails for tuples {x:?}, {y:?}")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chirotope {
    m: usize,
    rank: usize,
    /// One sign per sorted r-subset, lexicographic order.
    signs: Vec<i8>,
}

impl Chirotope {
    pub fn new(m: usize, rank: usize, signs: Vec<i8>) -> Result<Chirotope> {
        if m == 0 || m > crate::sign::MAX_LEN {
            return Err(Error::GroundSize(m));
        }
        if rank == 0 || rank > m {
            return Err(Error::Domain(format!("rank {rank} out of range 1..={m}")));
        }
        let want = crate::geometry::binomial(m, rank) as usize;
        if signs.len() != want {
            return Err(Error::DimensionMismatch(want, signs.len()));
        }
        if !signs.iter().all(|s| (-1..=1).contains(s)) {
            return Err(Error::Domain("chirotope signs must be -1, 0 or 1".into()));
        }
        Ok(Chirotope { m, rank, signs })
    }

    /// Signs of the r×r minors of a rational configuration (one vector per
    /// element, coordinates in rank-snace). Exact arithmetic throughout.
    pub fn from_vectors(vectors: &[Vec<Rat>]) -> Result<Chirotope> {
        let m = vectors.len();
        if m == 0 {
            return Err(Error::GroundSize(0));
        }
        let r = vectors[0].len();
        for v in vectors {
            if v.len() != r {
                return Err(Error::DimensionMismatch(r, v.len()));
            }
            if v.iter().all(num::Zero::is_zero) {
                return Err(Error::Domain("zero vector in configuration".into()));
            }
        }
        if m < r {
            return Err(Error::Domain(format!(
                "need at least r = {r} vectors, got {m}"
            )));
        }
        let tuples = sorted_tuples(m, r);
        let signs: Vec<i8> = tuples
            .iter()
            .map(|t| {
                let rows: Vec<Vec<Rat>> = t.iter().map(|&i| vectors[i].clone()).collect();
                let d = crate::geometry::linalg::det(&rows);
                crate::geometry::linalg::sign_of(&d).to_i8()
            })
            .collect();
        if signs.iter().all(|&s| s == 0) {
            return Err(Error::RankDeficient);
        }
        Chirotope::new(m, r, signs)
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Signs in lexicographic sorted-tuple order.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Value on a sorted tuple.
    pub fn eval_sorted(&self, tuple: &[usize]) -> i8 {
        self.signs[lex_rank(self.m, tuple)]
    }

    /// Value on an arbitrary tuple, by alternation; zero on repeats.
    pub fn eval(&self, tuple: &[usize]) -> i8 {
        match sort_with_parity(tuple) {
            None => 0,
            Some((sorted, parity)) => parity * self.eval_sorted(&sorted),
        }
    }

    pub fn negated(&self) -> Chirotope {
        Chirotope {
            m: self.m,
            rank: self.rank,
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }

    /// Image under a signed permutation: relabel elements and flip the
    /// reoriented ones, with alternation parity folded in.
    pub fn transform(&self, g: &SignedPermutation) -> Result<Chirotope> {
        if g.len() != self.m {
            return Err(Error::DimensionMismatch(self.m, g.len()));
        }
        let tuples = sorted_tuples(self.m, self.rank);
        let mut signs = vec![0i8; self.signs.len()];
        let inv = g.inverse();
        for (idx, t) in tuples.iter().enumerate() {
            let pre: Vec<usize> = t.iter().map(|&e| inv.image_of(e)).collect();
            let mut s = self.eval(&pre);
            for &e in &pre {
                if g.flips_at(e) {
                    s = -s;
                }
            }
            signs[idx] = s;
        }
        Chirotope::new(self.m, self.rank, signs)
    }

    /// Literal check of the pivoting exchange property over all ordered
    /// pairs of r-tuples with nonzero product, plus non-triviality.
    pub fn verify_exchange(&self) -> std::result::Result<(), ChirotopeDefect> {
        if self.signs.iter().all(|&s| s == 0) {
            return Err(ChirotopeDefect::IdenticallyZero);
        }
        let r = self.rank;
        let supports = sorted_tuples(self.m, r);
        let nonzero: Vec<&Vec<usize>> = supports
            .iter()
            .filter(|t| self.eval_sorted(t) != 0)
            .collect();
        // Orderings of a support differ from the sorted tuple by a parity
        // sign on both sides of the exchange identity, so it suffices to let
        // x range over "x1 pulled to the front" orderings and y over sorted
        // tuples; each such pair is checked in both roles.
        for xs in &nonzero {
            for ys in &nonzero {
                for x1_pos in 0..r {
                    let mut x: Vec<usize> = Vec::with_capacity(r);
                    x.push(xs[x1_pos]);
                    x.extend(
                        xs.iter()
                            .enumerate()
                            .filter(|&(i, _)| i != x1_pos)
                            .map(|(_, &e)| e),
                    );
                    let y: Vec<usize> = ys.to_vec();
                    let rhs = self.eval(&x) * self.eval(&y);
                    debug_assert!(rhs != 0);
                    let mut ok = false;
                    for i in 0..r {
                        let mut xa = x.clone();
                        xa[0] = y[i];
                        let mut yb = y.clone();
                        yb[i] = x[0];
                        if self.eval(&xa) * self.eval(&yb) == rhs {
                            ok = true;
                            break;
                        }
                    }
                    if !ok {
                        return Err(ChirotopeDefect::ExchangeFailure { x, y });
                    }
                }
            }
        }
        Ok(())
    }

    /// Fast equivalent of [`Chirotope::verify_exchange`]: the support must
    /// satisfy the matroid basis-exchange property and every three-term
    /// Grassmann–Plücker sign relation must be satisfiable.
    pub fn gp3_and_bases_ok(&self) -> bool {
        if self.signs.iter().all(|&s| s == 0) {
            return false;
        }
        let r = self.rank;
        let bases: Vec<Vec<usize>> = sorted_tuples(self.m, r)
            .into_iter()
            .filter(|t| self.eval_sorted(t) != 0)
            .collect();
        // basis exchange on supports
        for b1 in &bases {
            for b2 in &bases {
                for &x in b1 {
                    if b2.contains(&x) {
                        continue;
                    }
                    let mut found = false;
                    for &y in b2 {
                        if b1.contains(&y) {
                            continue;
                        }
                        let mut cand: Vec<usize> = b1.iter().copied().filter(|&e| e != x).collect();
                        cand.push(y);
                        cand.sort_unstable();
                        if self.eval_sorted(&cand) != 0 {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        return false;
                    }
                }
            }
        }
        // three-term GP relations
        let elements: Vec<usize> = (0..self.m).collect();
        let quads = sorted_tuples(self.m, 4.min(self.m));
        if r >= 2 && self.m >= 4 {
            for s in sorted_tuples(self.m, r - 2) {
                for q in &quads {
                    if q.len() < 4 || q.iter().any(|e| s.contains(e)) {
                        continue;
                    }
                    let (a, b, c, d) = (q[0], q[1], q[2], q[3]);
                    if !gp3_ok(self, &s, a, b, c, d) {
                        return false;
                    }
                }
            }
        }
        let _ = elements;
        true
    }

    /// Minimal-support nonzero covectors: for each independent
    /// (r-1)-subset `A`, the vector `e ↦ χ(A, e)` and its negative.
    pub fn cocircuits(&self) -> Vec<SignVector> {
        let r = self.rank;
        let mut out: Vec<SignVector> = Vec::new();
        for a in sorted_tuples(self.m, r - 1) {
            let mut v = SignVector::zero(self.m).expect("valid m");
            let mut any = false;
            for e in 0..self.m {
                if a.contains(&e) {
                    continue;
                }
                let mut t = a.clone();
                t.push(e);
                let s = self.eval(&t);
                if s != 0 {
                    any = true;
                }
                v.set(e, Sign::from_i8(s));
            }
            if any {
                out.push(v);
                out.push(v.negate());
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Covectors: the composition closure of the cocircuits together with
    /// zero, computed to a fixpoint with a worklist.
    pub fn covectors(&self) -> Result<CovectorSet> {
        let cocircuits = self.cocircuits();
        let mut seen: std::collections::HashSet<SignVector> = std::collections::HashSet::new();
        let zero = SignVector::zero(self.m)?;
        seen.insert(zero);
        let mut work: Vec<SignVector> = vec![zero];
        while let Some(x) = work.pop() {
            for c in &cocircuits {
                let z = x.compose(c)?;
                if seen.insert(z) {
                    work.push(z);
                }
            }
        }
        CovectorSet::new(self.m, seen)
    }

    /// Loop: an element in no nonzero tuple.
    pub fn loops(&self) -> Vec<usize> {
        let tuples = sorted_tuples(self.m, self.rank);
        (0..self.m)
            .filter(|e| {
                tuples
                    .iter()
                    .enumerate()
                    .all(|(i, t)| !t.contains(e) || self.signs[i] == 0)
            })
            .collect()
    }

    /// Parallel pair: two non-loops never jointly in a nonzero tuple.
    pub fn parallel_pairs(&self) -> Vec<(usize, usize)> {
        let tuples = sorted_tuples(self.m, self.rank);
        let loops = self.loops();
        let mut out = Vec::new();
        for i in 0..self.m {
            for j in i + 1..self.m {
                if loops.contains(&i) || loops.contains(&j) {
                    continue;
                }
                let dependent = tuples
                    .iter()
                    .enumerate()
                    .all(|(k, t)| !(t.contains(&i) && t.contains(&j)) || self.signs[k] == 0);
                if dependent {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_simple(&self) -> bool {
        self.loops().is_empty() && self.parallel_pairs().is_empty()
    }
}

impl fmt::Debug for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .signs
            .iter()
            .map(|&v| Sign::from_i8(v).to_char())
            .collect();
        write!(f, "Chirotope(m={}, r={}, {})", self.m, self.rank, s)
    }
}

/// One three-term Grassmann–Plücker sign condition: with
/// `t1 = χ(S,a,b)·χ(S,c,d)`, `t2 = χ(S,a,c)·χ(S,b,d)`,
/// `t3 = χ(S,a,d)·χ(S,b,c)`, the numbers `(t1, -t2, t3)` may not be all
/// nonnegative with one positive, nor all nonpositive with one negative.
fn gp3_ok(chi: &Chirotope, s: &[usize], a: usize, b: usize, c: usize, d: usize) -> bool {
    let ev = |x: usize, y: usize| -> i8 {
        let mut t = s.to_vec();
        t.push(x);
        t.push(y);
        chi.eval(&t)
    };
    let t1 = ev(a, b) * ev(c, d);
    let t2 = ev(a, c) * ev(b, d);
    let t3 = ev(a, d) * ev(b, c);
    let v = [t1, -t2, t3];
    let pos = v.iter().any(|&x| x > 0);
    let negv = v.iter().any(|&x| x < 0);
    // a signed sum of these three terms vanishes, so signs must mix
    !(pos ^ negv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    fn vecs(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect()
    }

    #[test]
    fn tuples_and_ranks() {
        let ts = sorted_tuples(5, 3);
        assert_eq!(ts.len(), 10);
        for (i, t) in ts.iter().enumerate() {
            assert_eq!(lex_rank(5, t), i);
        }
        assert_eq!(ts[0], vec![0, 1, 2]);
        assert_eq!(ts[9], vec![2, 3, 4]);
    }

    #[test]
    fn standard_basis_chirotope() {
        let chi = Chirotope::from_vectors(&vecs(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(chi.eval_sorted(&[0, 1, 2]), 1);
        assert_eq!(chi.eval(&[1, 0, 2]), -1);
        assert!(chi.verify_exchange().is_ok());
    }

    #[test]
    fn four_vector_alternation() {
        let chi = Chirotope::from_vectors(&vecs(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]))
            .unwrap();
        // all four triples nonzero
        assert!(chi.signs().iter().all(|&s| s != 0));
        assert!(chi.verify_exchange().is_ok());
        assert!(chi.gp3_and_bases_ok());
    }

    #[test]
    fn rank_deficient_rejected() {
        let r = Chirotope::from_vectors(&vecs(&[&[1, 0, 0], &[2, 0, 0], &[3, 0, 0]]));
        assert!(matches!(r, Err(Error::RankDeficient)));
    }

    #[test]
    fn flipped_sign_breaks_exchange() {
        // four points on the line x=1: uniform rank-2 chirotope
        let chi = Chirotope::from_vectors(&vecs(&[&[1, 1], &[1, 2], &[1, 3], &[1, 4]])).unwrap();
        assert!(chi.verify_exchange().is_ok());
        assert!(chi.gp3_and_bases_ok());
        // flipping the {1,3} minor leaves no consistent ordering of the
        // four points: exchange fails
        let mut signs = chi.signs().to_vec();
        signs[1] = -signs[1];
        let bad = Chirotope::new(4, 2, signs).unwrap();
        assert!(matches!(
            bad.verify_exchange(),
            Err(ChirotopeDefect::ExchangeFailure { .. })
        ));
        assert!(!bad.gp3_and_bases_ok());
        // flipping the {1,2} minor merely reorders the points on the line,
        // so that one stays valid
        let mut signs = chi.signs().to_vec();
        signs[0] = -signs[0];
        let reordered = Chirotope::new(4, 2, signs).unwrap();
        assert!(reordered.verify_exchange().is_ok());
    }

    #[test]
    fn rank1_trivial() {
        let chi = Chirotope::new(1, 1, vec![1]).unwrap();
        assert!(chi.verify_exchange().is_ok());
        let mut cc = chi.cocircuits();
        cc.sort();
        assert_eq!(cc.len(), 2);
        assert_eq!(cc[0].to_string(), "+");
        assert_eq!(cc[1].to_string(), "-");
    }

    #[test]
    fn cocircuits_three_generic_lines() {
        // three pairwise-independent vectors in rank 2
        let chi = Chirotope::from_vectors(&vecs(&[&[1, 0], &[1, 1], &[0, 1]])).unwrap();
        let cc = chi.cocircuits();
        assert_eq!(cc.len(), 6);
        assert!(cc.iter().all(|v| v.zero_count() == 1));
    }

    #[test]
    fn covectors_of_crossing_pair() {
        let chi = Chirotope::from_vectors(&vecs(&[&[1, 0], &[0, 1]])).unwrap();
        let v = chi.covectors().unwrap();
        assert_eq!(v.len(), 9);
        assert!(v.check_axioms().all_pass());
    }

    #[test]
    fn covectors_of_coordinate_planes() {
        let chi = Chirotope::from_vectors(&vecs(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        let v = chi.covectors().unwrap();
        assert_eq!(v.len(), 27);
        assert!(v.check_axioms().all_pass());
        assert_eq!(v.rank(), 3);
    }

    #[test]
    fn negation_gives_same_covectors() {
        let chi = Chirotope::from_vectors(&vecs(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 1],
            &[1, 2, 3],
        ]))
        .unwrap();
        assert_eq!(
            chi.covectors().unwrap().vectors(),
            chi.negated().covectors().unwrap().vectors()
        );
    }

    #[test]
    fn simplicity_detection() {
        // duplicate direction = parallel elements
        let chi = Chirotope::from_vectors(&vecs(&[&[1, 0], &[2, 0], &[0, 1]])).unwrap();
        assert_eq!(chi.parallel_pairs(), vec![(0, 1)]);
        assert!(!chi.is_simple());
        let om = chi.covectors().unwrap();
        assert_eq!(om.parallel_pairs(), vec![(0, 1)]);
    }

    #[test]
    fn exchange_check_agrees_with_fast_check_on_perturbations() {
        let base = Chirotope::from_vectors(&vecs(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 1],
            &[1, 2, 0],
        ]))
        .unwrap();
        // flip/zero single entries and compare the two verifiers
        for i in 0..base.signs().len() {
            for v in [-1i8, 0, 1] {
                let mut signs = base.signs().to_vec();
                signs[i] = v;
                let chi = Chirotope::new(5, 3, signs).unwrap();
                assert_eq!(
                    chi.verify_exchange().is_ok(),
                    chi.gp3_and_bases_ok(),
                    "disagreement at entry {i} value {v}"
                );
            }
        }
    }
}
