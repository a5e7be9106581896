//! Face-combinatorial equivalence: isomorphism-invariant fingerprints and
//! exact canonical forms under the signed-permutation group.
//!
//! Canonical forms are the lexicographically least image of the sorted
//! covector list; ties everywhere use the `0 < + < -` character order. The
//! affine variant pins the marked element to the last position and minimizes
//! over the stabilizer. Equality of canonical forms decides isomorphism;
//! fingerprints only ever certify inequality.

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{GeometricFace, RationalArrangement};
use crate::matroid::{rank_of, CovectorSet};
use crate::sign::{permutations, SignVector, SignedPermutation};

/// Exhaustive canonicalization is kept to small ground sets.
const MAX_CANON: usize = 8;

/// Shape summary of one chamber: facet and vertex counts plus the face
/// vector of its boundary complex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ChamberShape {
    pub bounded: bool,
    /// Number of faces of each dimension strictly below the chamber,
    /// indexed by dimension.
    pub boundary_faces: Vec<usize>,
}

impl ChamberShape {
    pub fn facet_count(&self) -> usize {
        *self.boundary_faces.last().unwrap_or(&0)
    }

    pub fn vertex_count(&self) -> usize {
        *self.boundary_faces.first().unwrap_or(&0)
    }
}

/// Isomorphism-invariant summary of a geometric face set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Fingerprint {
    pub rank: usize,
    /// Faces per dimension, `0..=d`.
    pub faces_per_dim: Vec<usize>,
    pub bounded_per_dim: Vec<usize>,
    /// 1-face split: bounded segments, rays (one endpoint), full lines.
    pub segments: usize,
    pub rays: usize,
    pub lines: usize,
    /// Sorted multiset of chamber shapes.
    pub chamber_shapes: Vec<ChamberShape>,
    /// Per element: faces of each dimension on that hyperplane; sorted to
    /// forget labels.
    pub incidence_profile: Vec<Vec<usize>>,
}

impl Fingerprint {
    /// Dimension of the chambers (the ambient dimension).
    pub fn ambient_dim(&self) -> usize {
        self.faces_per_dim.len().saturating_sub(1)
    }

    pub fn points(&self) -> usize {
        *self.faces_per_dim.first().unwrap_or(&0)
    }

    pub fn chambers(&self) -> usize {
        *self.faces_per_dim.last().unwrap_or(&0)
    }

    pub fn bounded_chambers(&self) -> usize {
        *self.bounded_per_dim.last().unwrap_or(&0)
    }

    /// Sorted multiset of `(facets, vertices)` over bounded chambers.
    pub fn bounded_chamber_shapes(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self
            .chamber_shapes
            .iter()
            .filter(|s| s.bounded)
            .map(|s| (s.facet_count(), s.vertex_count()))
            .collect();
        v.sort();
        v
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank: {}", self.rank)?;
        writeln!(f, "faces by dimension: {:?}", self.faces_per_dim)?;
        writeln!(f, "bounded by dimension: {:?}", self.bounded_per_dim)?;
        writeln!(
            f,
            "1-faces: {} segments, {} rays, {} lines",
            self.segments, self.rays, self.lines
        )?;
        let shapes = self.bounded_chamber_shapes();
        writeln!(f, "bounded chambers (facets, vertices): {shapes:?}")?;
        Ok(())
    }
}

/// Fingerprint of a geometric face set (as produced by
/// [`RationalArrangement::faces`]).
pub fn fingerprint(faces: &[GeometricFace]) -> Fingerprint {
    let covectors: Vec<SignVector> = faces.iter().map(|f| f.covector).collect();
    let d = faces.iter().map(|f| f.dimension).max().unwrap_or(0);
    let mut faces_per_dim = vec![0usize; d + 1];
    let mut bounded_per_dim = vec![0usize; d + 1];
    for f in faces {
        faces_per_dim[f.dimension] += 1;
        if f.bounded {
            bounded_per_dim[f.dimension] += 1;
        }
    }

    // 1-face classification by number of endpoints below
    let (mut segments, mut rays, mut lines) = (0usize, 0usize, 0usize);
    for f in faces.iter().filter(|f| f.dimension == 1) {
        let endpoints = faces
            .iter()
            .filter(|g| g.dimension == 0 && g.covector.leq(&f.covector).unwrap_or(false))
            .count();
        match endpoints {
            0 => lines += 1,
            1 => rays += 1,
            _ => segments += 1,
        }
    }

    let mut chamber_shapes: Vec<ChamberShape> = faces
        .iter()
        .filter(|f| f.dimension == d)
        .map(|chamber| {
            let mut boundary_faces = vec![0usize; d];
            for g in faces {
                if g.dimension < d
                    && g.covector != chamber.covector
                    && g.covector.leq(&chamber.covector).unwrap_or(false)
                {
                    boundary_faces[g.dimension] += 1;
                }
            }
            ChamberShape {
                bounded: chamber.bounded,
                boundary_faces,
            }
        })
        .collect();
    chamber_shapes.sort();

    let n = faces.first().map(|f| f.covector.len()).unwrap_or(0);
    let mut incidence_profile: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let mut per_dim = vec![0usize; d + 1];
            for f in faces {
                if f.covector.get(i).is_zero() {
                    per_dim[f.dimension] += 1;
                }
            }
            per_dim
        })
        .collect();
    incidence_profile.sort();

    Fingerprint {
        rank: rank_of(&covectors),
        faces_per_dim,
        bounded_per_dim,
        segments,
        rays,
        lines,
        chamber_shapes,
        incidence_profile,
    }
}

/// The lexicographically least image of the sorted covector list, with the
/// group element realizing it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalForm {
    pub vectors: Vec<SignVector>,
    pub witness: SignedPermutation,
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vectors {
            writeln!(f, "{v}")?;
        }
        write!(f, "# via {}", self.witness)
    }
}

#[allow(clippy::needless_range_loop)]
fn transformed_sorted(vectors: &[SignVector], image: &[u8], flips: u32) -> Vec<SignVector> {
    let mut out: Vec<SignVector> = vectors
        .iter()
        .map(|v| {
            let mut w = SignVector::zero(v.len()).expect("valid length");
            for i in 0..v.len() {
                let s = if flips & (1 << i) != 0 {
                    v.get(i).negate()
                } else {
                    v.get(i)
                };
                w.set(image[i] as usize, s);
            }
            w
        })
        .collect();
    out.sort();
    out
}

fn min_over_group(
    vectors: &[SignVector],
    n: usize,
    perms: &[Vec<u8>],
) -> (Vec<SignVector>, SignedPermutation) {
    let mut best: Option<(Vec<SignVector>, Vec<u8>, u32)> = None;
    for image in perms {
        for flips in 0u32..(1 << n) {
            let cand = transformed_sorted(vectors, image, flips);
            let better = match &best {
                None => true,
                Some((b, _, _)) => cand < *b,
            };
            if better {
                best = Some((cand, image.clone(), flips));
            }
        }
    }
    let (vectors, image, flips) = best.expect("group is nonempty");
    (
        vectors,
        SignedPermutation::new(image, flips).expect("valid"),
    )
}

/// Minimum of the sorted covector list over all `2^n · n!` signed
/// permutations.
pub fn canonicalize(set: &CovectorSet) -> Result<CanonicalForm> {
    let n = set.ground_size();
    if n > MAX_CANON {
        return Err(Error::ResourceLimit(format!(
            "canonicalization is exhaustive and limited to n ≤ {MAX_CANON} (got {n})"
        )));
    }
    let perms = permutations(n);
    let (vectors, witness) = min_over_group(set.vectors(), n, &perms);
    Ok(CanonicalForm { vectors, witness })
}

/// Minimum over the subgroup keeping the marked element in place, after
/// first relabeling the mark to the last position. Two affine objects are
/// isomorphic iff their canonical forms are equal.
pub fn canonicalize_affine(set: &CovectorSet, mark: usize) -> Result<CanonicalForm> {
    let n = set.ground_size();
    if n > MAX_CANON {
        return Err(Error::ResourceLimit(format!(
            "canonicalization is exhaustive and limited to n ≤ {MAX_CANON} (got {n})"
        )));
    }
    if mark >= n {
        return Err(Error::InvalidMarking(format!(
            "element {} out of range 1..={n}",
            mark + 1
        )));
    }
    // move the mark to the last position
    let mut swap: Vec<u8> = (0..n as u8).collect();
    swap.swap(mark, n - 1);
    let pre = SignedPermutation::new(swap, 0)?;
    let moved = set.transform(&pre)?;
    // permutations fixing the last position, all flips
    let perms: Vec<Vec<u8>> = permutations(n - 1)
        .into_iter()
        .map(|mut p| {
            p.push((n - 1) as u8);
            p
        })
        .collect();
    let (vectors, stab) = min_over_group(moved.vectors(), n, &perms);
    let witness = stab.after(&pre)?;
    Ok(CanonicalForm { vectors, witness })
}

/// Equivalence of covector sets: cheap invariants, then canonical forms.
pub fn covector_sets_equivalent(a: &CovectorSet, b: &CovectorSet) -> Result<bool> {
    if a.ground_size() != b.ground_size() || a.len() != b.len() {
        return Ok(false);
    }
    let zeros = |s: &CovectorSet| {
        let mut h: Vec<usize> = s.vectors().iter().map(|v| v.zero_count()).collect();
        h.sort_unstable();
        h
    };
    if zeros(a) != zeros(b) {
        return Ok(false);
    }
    Ok(canonicalize(a)?.vectors == canonicalize(b)?.vectors)
}

/// Equivalence of affine objects `(covectors, mark)`.
pub fn affine_equivalent(
    a: &CovectorSet,
    mark_a: usize,
    b: &CovectorSet,
    mark_b: usize,
) -> Result<bool> {
    if a.ground_size() != b.ground_size() || a.len() != b.len() {
        return Ok(false);
    }
    Ok(canonicalize_affine(a, mark_a)?.vectors == canonicalize_affine(b, mark_b)?.vectors)
}

/// Face-combinatorial equivalence of affine arrangements, decided through
/// the coned covector sets with the base hyperplane marked. For arrangements
/// in the same ambient dimension a fingerprint comparison runs first and
/// settles most inequivalent pairs; across dimensions (an arrangement versus
/// an axis product of it, say) the dimension-graded fingerprint does not
/// apply and the canonical comparison decides alone.
pub fn arrangements_equivalent(a: &RationalArrangement, b: &RationalArrangement) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    if a.dim() == b.dim() && fingerprint(&a.faces()?) != fingerprint(&b.faces()?) {
        return Ok(false);
    }
    let ca = a.cone().face_covectors()?;
    let cb = b.cone().face_covectors()?;
    affine_equivalent(&ca, a.len(), &cb, b.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::RationalArrangement;
    use crate::sign::full_cube;

    fn cube2() -> CovectorSet {
        CovectorSet::new(2, full_cube(2).unwrap()).unwrap()
    }

    #[test]
    fn canonical_form_is_orbit_constant() {
        let v = cube2();
        let base = canonicalize(&v).unwrap();
        for image in permutations(2) {
            for flips in 0..4u32 {
                let g = SignedPermutation::new(image.clone(), flips).unwrap();
                let moved = v.transform(&g).unwrap();
                assert_eq!(canonicalize(&moved).unwrap().vectors, base.vectors);
            }
        }
        // the full cube is fixed by every group element
        assert_eq!(base.vectors, v.vectors().to_vec());
    }

    #[test]
    fn witness_certifies_the_form() {
        let v = CovectorSet::new(
            3,
            ["000", "+-0", "-+0", "+-+", "-+-"]
                .iter()
                .map(|s| s.parse().unwrap()),
        )
        .unwrap();
        let form = canonicalize(&v).unwrap();
        let moved = v.transform(&form.witness).unwrap();
        assert_eq!(moved.vectors(), &form.vectors[..]);
    }

    #[test]
    fn affine_marks_of_a_symmetric_object_agree() {
        let v = cube2();
        let f0 = canonicalize_affine(&v, 0).unwrap();
        let f1 = canonicalize_affine(&v, 1).unwrap();
        assert_eq!(f0.vectors, f1.vectors);
        assert!(affine_equivalent(&v, 0, &v, 1).unwrap());
    }

    #[test]
    fn reflected_arrangement_is_equivalent() {
        let a =
            RationalArrangement::from_ints(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 1)]).unwrap();
        // mirror image: x -> -x
        let b = RationalArrangement::from_ints(2, &[(&[-1, 0], 0), (&[0, 1], 0), (&[-1, 1], 1)])
            .unwrap();
        assert!(arrangements_equivalent(&a, &b).unwrap());
    }

    #[test]
    fn triangle_vs_pencil_not_equivalent() {
        let triangle = RationalArrangement::general_position(3, 2).unwrap();
        let pencil =
            RationalArrangement::from_ints(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 0)]).unwrap();
        assert!(!arrangements_equivalent(&triangle, &pencil).unwrap());
    }

    #[test]
    fn product_is_equivalent_to_its_base() {
        let lines = RationalArrangement::general_position(4, 2).unwrap();
        let product = lines.product_with_axis().unwrap();
        assert!(arrangements_equivalent(&lines, &product).unwrap());
        let other = RationalArrangement::from_ints(
            2,
            &[(&[1, 0], 0), (&[1, 0], 1), (&[0, 1], 0), (&[0, 1], 1)],
        )
        .unwrap();
        assert!(!arrangements_equivalent(&other, &product).unwrap());
    }

    #[test]
    fn fingerprint_of_crossing_lines() {
        let a = RationalArrangement::from_ints(2, &[(&[1, 0], 0), (&[0, 1], 0)]).unwrap();
        let fp = fingerprint(&a.faces().unwrap());
        assert_eq!(fp.faces_per_dim, vec![1, 4, 4]);
        assert_eq!(fp.rays, 4);
        assert_eq!(fp.segments, 0);
        assert_eq!(fp.rank, 2);
        assert_eq!(fp.chambers(), 4);
    }

    #[test]
    fn size_guard() {
        let v = CovectorSet::new(9, [SignVector::zero(9).unwrap()]).unwrap();
        assert!(canonicalize(&v).is_err());
    }
}
