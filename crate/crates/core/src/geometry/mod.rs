//! Exact rational geometry of affine hyperplane arrangements: face
//! enumeration by sign-vector feasibility, geometric composition and
//! restriction oracles, and the construction families used by the catalog.

mod fm;
pub mod linalg;

pub use fm::{Constraint, Rel};
pub use linalg::{rat, ratio, Rat};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::matroid::CovectorSet;
use crate::poset::FacePoset;
use crate::sign::{Sign, SignVector};

use linalg::sign_of;

/// Desk-scale bounds for exhaustive face enumeration.
const MAX_HYPERPLANES: usize = 12;
const MAX_DIM: usize = 4;

/// An oriented affine hyperplane `normal·x = offset`; the positive side is
/// `normal·x > offset`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hyperplane {
    normal: Vec<Rat>,
    offset: Rat,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rat>, offset: Rat) -> Result<Hyperplane> {
        if normal.is_empty() {
            return Err(Error::InvalidArrangement("empty normal vector".into()));
        }
        if linalg::is_zero_vec(&normal) {
            return Err(Error::InvalidArrangement("zero normal vector".into()));
        }
        Ok(Hyperplane { normal, offset })
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_ints(normal: &[i64], offset: i64) -> Result<Hyperplane> {
        Hyperplane::new(normal.iter().map(|&v| rat(v)).collect(), rat(offset))
    }

    pub fn normal(&self) -> &[Rat] {
        &self.normal
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `normal·p - offset`.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        linalg::dot(&self.normal, point) - &self.offset
    }

    pub fn side(&self, point: &[Rat]) -> Sign {
        sign_of(&self.eval(point))
    }

    /// Same point set: proportional `(normal, offset)` by any nonzero factor.
    fn same_locus(&self, other: &Hyperplane) -> bool {
        // find the factor from the first nonzero normal entry
        let i = self.normal.iter().position(|c| !c.is_zero()).unwrap();
        if other.normal[i].is_zero() {
            return false;
        }
        let f = &self.normal[i] / &other.normal[i];
        self.normal
            .iter()
            .zip(&other.normal)
            .all(|(a, b)| *a == b * &f)
            && self.offset == &other.offset * &f
    }
}

/// A labeled face of an arrangement: its sign vector, dimension,
/// boundedness, and an exact relative-interior witness point.
#[derive(Clone, Debug)]
pub struct GeometricFace {
    pub covector: SignVector,
    pub dimension: usize,
    pub bounded: bool,
    pub witness: Vec<Rat>,
}

/// An ordered list of pairwise-distinct oriented hyperplanes in `ℝ^d`.
#[derive(Clone, Debug)]
pub struct RationalArrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl RationalArrangement {
    /// Validates dimension agreement and pairwise distinctness (as point
    /// sets, regardless of orientation).
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<RationalArrangement> {
        let a = RationalArrangement::new_unchecked(dim, hyperplanes)?;
        for i in 0..a.hyperplanes.len() {
            for j in i + 1..a.hyperplanes.len() {
                if a.hyperplanes[i].same_locus(&a.hyperplanes[j]) {
                    return Err(Error::InvalidArrangement(format!(
                        "hyperplanes {} and {} coincide",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(a)
    }

    /// Skips the distinctness check (for deliberately degenerate inputs).
    pub fn new_unchecked(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<RationalArrangement> {
        if dim == 0 {
            return Err(Error::InvalidArrangement(
                "dimension must be at least 1".into(),
            ));
        }
        if hyperplanes.is_empty() {
            return Err(Error::InvalidArrangement("no hyperplanes".into()));
        }
        for h in &hyperplanes {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch(dim, h.dim()));
            }
        }
        Ok(RationalArrangement { dim, hyperplanes })
    }

    pub fn from_ints(dim: usize, rows: &[(&[i64], i64)]) -> Result<RationalArrangement> {
        let hs: Result<Vec<Hyperplane>> = rows
            .iter()
            .map(|(n, b)| Hyperplane::from_ints(n, *b))
            .collect();
        RationalArrangement::new(dim, hs?)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    /// Rank of the normal-vector matrix.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Rat>> = self.hyperplanes.iter().map(|h| h.normal.clone()).collect();
        linalg::rank(&rows)
    }

    /// A common point of all hyperplanes, if one exists.
    pub fn central_point(&self) -> Option<Vec<Rat>> {
        let cons: Vec<Constraint> = self
            .hyperplanes
            .iter()
            .map(|h| Constraint::new(h.normal.clone(), -h.offset.clone(), Rel::Eq))
            .collect();
        fm::solve(self.dim, &cons)
    }

    pub fn is_central(&self) -> bool {
        self.central_point().is_some()
    }

    fn constraints_for(&self, sigma: &SignVector, upto: usize) -> Vec<Constraint> {
        let mut cons = Vec::with_capacity(upto);
        for (i, h) in self.hyperplanes.iter().take(upto).enumerate() {
            let (coeffs, constant, rel) = match sigma.get(i) {
                Sign::Zero => (h.normal.clone(), -h.offset.clone(), Rel::Eq),
                Sign::Plus => (h.normal.clone(), -h.offset.clone(), Rel::Gt),
                Sign::Minus => (
                    h.normal.iter().map(|c| -c).collect(),
                    h.offset.clone(),
                    Rel::Gt,
                ),
            };
            cons.push(Constraint::new(coeffs, constant, rel));
        }
        cons
    }

    /// Is the open region described by `sigma` nonempty?
    pub fn sign_feasible(&self, sigma: &SignVector) -> Result<bool> {
        if sigma.len() != self.len() {
            return Err(Error::DimensionMismatch(self.len(), sigma.len()));
        }
        Ok(fm::feasible(
            self.dim,
            &self.constraints_for(sigma, self.len()),
        ))
    }

    /// Exact relative-interior point of the region described by `sigma`.
    pub fn witness(&self, sigma: &SignVector) -> Result<Option<Vec<Rat>>> {
        if sigma.len() != self.len() {
            return Err(Error::DimensionMismatch(self.len(), sigma.len()));
        }
        Ok(fm::solve(
            self.dim,
            &self.constraints_for(sigma, self.len()),
        ))
    }

    /// Dimension, boundedness and witness for a feasible sign vector.
    fn face_data(&self, sigma: &SignVector, witness: Vec<Rat>) -> GeometricFace {
        let zero_normals: Vec<Vec<Rat>> = (0..self.len())
            .filter(|&i| sigma.get(i).is_zero())
            .map(|i| self.hyperplanes[i].normal.clone())
            .collect();
        let dimension = self.dim - linalg::rank(&zero_normals);
        GeometricFace {
            covector: *sigma,
            dimension,
            bounded: !self.has_recession_direction(sigma),
            witness,
        }
    }

    /// Does the closed recession cone of the face contain a nonzero vector?
    /// Checked per coordinate direction, normalizing the candidate to ±1.
    fn has_recession_direction(&self, sigma: &SignVector) -> bool {
        let mut cons: Vec<Constraint> = Vec::with_capacity(self.len() + 1);
        for (i, h) in self.hyperplanes.iter().enumerate() {
            let (coeffs, rel) = match sigma.get(i) {
                Sign::Zero => (h.normal.clone(), Rel::Eq),
                Sign::Plus => (h.normal.clone(), Rel::Ge),
                Sign::Minus => (h.normal.iter().map(|c| -c).collect(), Rel::Ge),
            };
            cons.push(Constraint::new(coeffs, Rat::zero(), rel));
        }
        for j in 0..self.dim {
            for s in [1i64, -1] {
                let mut fix = vec![Rat::zero(); self.dim];
                fix[j] = Rat::one();
                cons.push(Constraint::new(fix, rat(-s), Rel::Eq));
                let ok = fm::feasible(self.dim, &cons);
                cons.pop();
                if ok {
                    return true;
                }
            }
        }
        false
    }

    /// All faces: exactly the sign vectors whose region is nonempty, sorted
    /// canonically. Exhaustive over `{+,0,-}^n` with infeasible-prefix
    /// pruning.
    pub fn faces(&self) -> Result<Vec<GeometricFace>> {
        if self.len() > MAX_HYPERPLANES || self.dim > MAX_DIM {
            return Err(Error::ResourceLimit(format!(
                "face enumeration limited to n ≤ {MAX_HYPERPLANES}, d ≤ {MAX_DIM} \
                 (got n = {}, d = {})",
                self.len(),
                self.dim
            )));
        }
        let mut out = Vec::new();
        let mut sigma = SignVector::zero(self.len())?;
        self.extend_face(0, &mut sigma, &mut out);
        out.sort_by_key(|f| f.covector);
        Ok(out)
    }

    fn extend_face(&self, k: usize, sigma: &mut SignVector, out: &mut Vec<GeometricFace>) {
        let cons = self.constraints_for(sigma, k);
        let Some(witness) = fm::solve(self.dim, &cons) else {
            return;
        };
        if k == self.len() {
            out.push(self.face_data(sigma, witness));
            return;
        }
        for s in [Sign::Zero, Sign::Plus, Sign::Minus] {
            sigma.set(k, s);
            self.extend_face(k + 1, sigma, out);
        }
        sigma.set(k, Sign::Zero);
    }

    /// The face covectors as a set.
    pub fn face_covectors(&self) -> Result<CovectorSet> {
        let faces = self.faces()?;
        CovectorSet::new(self.len(), faces.iter().map(|f| f.covector))
    }

    /// Graded face poset with dimensions and boundedness attached.
    pub fn face_poset(&self) -> Result<FacePoset> {
        let faces = self.faces()?;
        let vectors: Vec<SignVector> = faces.iter().map(|f| f.covector).collect();
        let dims: Vec<usize> = faces.iter().map(|f| f.dimension).collect();
        let bounded: Vec<bool> = faces.iter().map(|f| f.bounded).collect();
        Ok(FacePoset::from_graded(&vectors, &dims, &bounded))
    }

    fn require_face(&self, f: &GeometricFace) -> Result<()> {
        if f.covector.len() != self.len() {
            return Err(Error::DimensionMismatch(self.len(), f.covector.len()));
        }
        if !self.sign_feasible(&f.covector)? {
            return Err(Error::Domain(format!("{} is not a face", f.covector)));
        }
        Ok(())
    }

    /// The face reached from the interior of `x` by an infinitesimal step
    /// towards the interior of `y`. Equals the sign-vector composition of
    /// the two covectors.
    pub fn geometric_compose(&self, x: &GeometricFace, y: &GeometricFace) -> Result<GeometricFace> {
        self.require_face(x)?;
        self.require_face(y)?;
        let p = &x.witness;
        let q = &y.witness;
        // One-sided limit along the segment p -> q.
        let mut sigma = SignVector::zero(self.len())?;
        for (i, h) in self.hyperplanes.iter().enumerate() {
            let at_p = h.eval(p);
            let s = if at_p.is_zero() { h.eval(q) } else { at_p };
            sigma.set(i, sign_of(&s));
        }
        // An explicit point p + t(q - p) with the same sign pattern: shrink
        // t until every strict sign is preserved.
        let mut t = ratio(1, 2);
        loop {
            let point: Vec<Rat> = p.iter().zip(q).map(|(a, b)| a + &t * &(b - a)).collect();
            let good = (0..self.len()).all(|i| self.hyperplanes[i].side(&point) == sigma.get(i));
            if good {
                return Ok(self.face_data(&sigma, point));
            }
            t /= rat(2);
        }
    }

    /// The boundary faces of `x` on the side towards `y`: the sign-vector
    /// restriction intersected with the face set. Requires the pair to be
    /// separated by at least one hyperplane with `y` on every hyperplane
    /// containing `x`.
    pub fn geometric_restrict(
        &self,
        x: &GeometricFace,
        y: &GeometricFace,
    ) -> Result<Vec<GeometricFace>> {
        self.require_face(x)?;
        self.require_face(y)?;
        let xc = &x.covector;
        let yc = &y.covector;
        let zeros_ok = (0..self.len()).all(|i| !xc.get(i).is_zero() || yc.get(i).is_zero());
        let separated = !xc.conflict_indices(yc)?.is_empty();
        if !zeros_ok || !separated {
            return Err(Error::Domain(
                "restriction requires a separating hyperplane and the target \
                 on every hyperplane of the source"
                    .into(),
            ));
        }
        let mut out = Vec::new();
        for z in xc.restrict(yc)? {
            if let Some(w) = self.witness(&z)? {
                out.push(self.face_data(&z, w));
            }
        }
        Ok(out)
    }

    /// Central arrangement in `d+1` dimensions: hyperplane `i` becomes
    /// `normal_i·x - offset_i·x_{d+1} = 0`; a base hyperplane `x_{d+1} = 0`,
    /// oriented positively upward, is appended as element `n+1`.
    pub fn cone(&self) -> RationalArrangement {
        let mut hs: Vec<Hyperplane> = self
            .hyperplanes
            .iter()
            .map(|h| {
                let mut normal = h.normal.clone();
                normal.push(-h.offset.clone());
                Hyperplane {
                    normal,
                    offset: Rat::zero(),
                }
            })
            .collect();
        let mut base = vec![Rat::zero(); self.dim + 1];
        base[self.dim] = Rat::one();
        hs.push(Hyperplane {
            normal: base,
            offset: Rat::zero(),
        });
        RationalArrangement {
            dim: self.dim + 1,
            hyperplanes: hs,
        }
    }

    /// Cartesian product of a planar line arrangement with the z-axis.
    pub fn product_with_axis(&self) -> Result<RationalArrangement> {
        if self.dim != 2 {
            return Err(Error::Domain(format!(
                "product construction expects a line arrangement in d=2, got d={}",
                self.dim
            )));
        }
        let hs = self
            .hyperplanes
            .iter()
            .map(|h| {
                let mut normal = h.normal.clone();
                normal.push(Rat::zero());
                Hyperplane {
                    normal,
                    offset: h.offset.clone(),
                }
            })
            .collect();
        Ok(RationalArrangement {
            dim: 3,
            hyperplanes: hs,
        })
    }

    /// Append the horizontal hyperplane (last coordinate = 0).
    pub fn bisect(&self) -> Result<RationalArrangement> {
        let mut base = vec![Rat::zero(); self.dim];
        base[self.dim - 1] = Rat::one();
        let mut hs = self.hyperplanes.clone();
        hs.push(Hyperplane {
            normal: base,
            offset: Rat::zero(),
        });
        RationalArrangement::new(self.dim, hs)
    }

    /// Append an arbitrary hyperplane.
    pub fn with_hyperplane(&self, h: Hyperplane) -> Result<RationalArrangement> {
        let mut hs = self.hyperplanes.clone();
        if h.dim() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, h.dim()));
        }
        hs.push(h);
        RationalArrangement::new(self.dim, hs)
    }

    /// Deterministic general-position arrangement from the moment curve:
    /// hyperplane `i` has normal `(1, t, t², …)` and offset `t^d` with
    /// `t = i`. Every `d` normals are independent and no `d+1` hyperplanes
    /// meet, so chamber and vertex counts attain the closed-form maxima.
    pub fn general_position(n: usize, d: usize) -> Result<RationalArrangement> {
        if n == 0 || d == 0 {
            return Err(Error::Domain("need n ≥ 1 and d ≥ 1".into()));
        }
        let hs = (1..=n as i64)
            .map(|t| {
                let normal: Vec<Rat> = (0..d as u32).map(|k| rat(t.pow(k))).collect();
                Hyperplane {
                    normal,
                    offset: rat(t.pow(d as u32)),
                }
            })
            .collect();
        RationalArrangement::new(d, hs)
    }

    /// Vector configuration of a central arrangement, expressed in
    /// coordinates of the span of the normals (length = rank).
    pub fn vector_configuration(&self) -> Result<Vec<Vec<Rat>>> {
        if !self.is_central() {
            return Err(Error::Domain(
                "vector configuration requires a central arrangement".into(),
            ));
        }
        let rows: Vec<Vec<Rat>> = self.hyperplanes.iter().map(|h| h.normal.clone()).collect();
        Ok(linalg::coordinates_in_row_space(&rows))
    }
}

/// Closed forms for the arrangement maxima: `maxChambers(n,d) = Σ_{i≤d} C(n,i)`
/// and `maxVertices(n,d) = C(n,d)`.
pub fn max_chambers(n: usize, d: usize) -> u64 {
    (0..=d.min(n)).map(|i| binomial(n, i)).sum()
}

pub fn max_vertices(n: usize, d: usize) -> u64 {
    binomial(n, d)
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Nine rational lines realizing the Pappus configuration: two base lines
/// carrying three points each, the six cross-joins, and the line through the
/// three (provably collinear) middle intersection points.
pub fn pappus() -> RationalArrangement {
    // Base points: A=(0,0), B=(1,0), C=(3,0); a=(0,1), b=(2,1), c=(5,1).
    let line = |p: (i64, i64, i64, i64)| -> Hyperplane {
        // through (x1,y1) and (x2,y2): (y2-y1)·x - (x2-x1)·y = x1·y2 - x2·y1
        let (x1, y1, x2, y2) = p;
        Hyperplane {
            normal: vec![rat(y2 - y1), rat(x1 - x2)],
            offset: rat(x1 * y2 - x2 * y1),
        }
    };
    let hs = vec![
        line((0, 0, 1, 0)), // 1: base through A, B, C (y = 0)
        line((0, 1, 2, 1)), // 2: base through a, b, c (y = 1)
        line((0, 0, 2, 1)), // 3: A ∨ b
        line((0, 0, 5, 1)), // 4: A ∨ c
        line((1, 0, 0, 1)), // 5: B ∨ a
        line((1, 0, 5, 1)), // 6: B ∨ c
        line((3, 0, 0, 1)), // 7: C ∨ a
        line((3, 0, 2, 1)), // 8: C ∨ b
        // 9: the Pappus line x - 29y + 9 = 0 through all three middle points
        Hyperplane {
            normal: vec![rat(1), rat(-29)],
            offset: rat(-9),
        },
    ];
    RationalArrangement::new(2, hs).expect("distinct by construction")
}

/// The three middle intersection points of the Pappus configuration.
pub fn pappus_middle_points() -> Vec<Vec<Rat>> {
    vec![
        vec![ratio(2, 3), ratio(1, 3)],  // Ab ∩ Ba
        vec![ratio(15, 8), ratio(3, 8)], // Ac ∩ Ca
        vec![ratio(13, 5), ratio(2, 5)], // Bc ∩ Cb
    ]
}

/// Eight planes from the Goodman–Pollack construction: the four facet planes
/// of a tetrahedron OABC, three planes through the triangles A'B'C, AB'C',
/// A'BC' (with A', B', C' on the edges at O), and the plane spanned by O and
/// the three forced-coplanar points P, Q, R.
pub fn goodman_pollack_8() -> RationalArrangement {
    let plane = |n: &[i64], b: i64| Hyperplane::from_ints(n, b).unwrap();
    let hs = vec![
        plane(&[0, 0, 1], 0), // OAB: z = 0
        plane(&[1, 0, 0], 0), // OBC: x = 0
        plane(&[0, 1, 0], 0), // OAC: y = 0
        plane(&[1, 1, 1], 1), // ABC
        plane(&[2, 3, 1], 1), // A'B'C
        plane(&[1, 3, 5], 1), // AB'C'
        plane(&[2, 1, 5], 1), // A'BC'
        plane(&[1, 2, 4], 0), // plane through O, P, Q, R
    ];
    RationalArrangement::new(3, hs).expect("distinct by construction")
}

/// The points O, P, Q, R of the Goodman–Pollack construction.
pub fn goodman_pollack_points() -> Vec<Vec<Rat>> {
    vec![
        vec![rat(0), rat(0), rat(0)],            // O
        vec![rat(0), rat(2), rat(-1)],           // P = BC ∩ B'C'
        vec![ratio(4, 3), rat(0), ratio(-1, 3)], // Q = AC ∩ A'C'
        vec![rat(2), rat(-1), rat(0)],           // R = AB ∩ A'B'
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign::full_cube;

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    /// Two crossing lines, x = 0 and y = 0, positive sides x > 0 and y > 0.
    pub(crate) fn crossing_lines() -> RationalArrangement {
        RationalArrangement::from_ints(2, &[(&[1, 0], 0), (&[0, 1], 0)]).unwrap()
    }

    #[test]
    fn crossing_lines_faces() {
        let a = crossing_lines();
        let faces = a.faces().unwrap();
        assert_eq!(faces.len(), 9);
        let by_dim = |d: usize| faces.iter().filter(|f| f.dimension == d).count();
        assert_eq!(by_dim(0), 1);
        assert_eq!(by_dim(1), 4);
        assert_eq!(by_dim(2), 4);
        // equals the full cube on 2 elements
        let cube = full_cube(2).unwrap();
        let got: Vec<SignVector> = faces.iter().map(|f| f.covector).collect();
        assert_eq!(got, cube);
        // only the intersection point is bounded
        for f in &faces {
            assert_eq!(f.bounded, f.covector.is_zero());
        }
    }

    #[test]
    fn sign_feasible_parallel_lines() {
        // x = 0 and x = 1, positive sides toward larger x
        let a = RationalArrangement::from_ints(2, &[(&[1, 0], 0), (&[1, 0], 1)]).unwrap();
        assert!(a.sign_feasible(&sv("+-")).unwrap()); // the strip
        assert!(!a.sign_feasible(&sv("-+")).unwrap());
        assert!(!a.sign_feasible(&sv("00")).unwrap());
    }

    #[test]
    fn single_plane_three_faces() {
        let a = RationalArrangement::from_ints(3, &[(&[1, 2, 3], 4)]).unwrap();
        assert_eq!(a.faces().unwrap().len(), 3);
    }

    #[test]
    fn general_position_counts() {
        let a = RationalArrangement::general_position(5, 3).unwrap();
        let faces = a.faces().unwrap();
        let chambers = faces.iter().filter(|f| f.dimension == 3).count();
        let vertices = faces.iter().filter(|f| f.dimension == 0).count();
        let bounded_chambers = faces
            .iter()
            .filter(|f| f.dimension == 3 && f.bounded)
            .count();
        assert_eq!(chambers as u64, max_chambers(5, 3));
        assert_eq!(chambers, 26);
        assert_eq!(vertices, 10);
        assert_eq!(bounded_chambers, 4);

        // n=4, d=3: tetrahedron arrangement
        let a = RationalArrangement::general_position(4, 3).unwrap();
        let faces = a.faces().unwrap();
        let chambers = faces.iter().filter(|f| f.dimension == 3).count();
        let bounded = faces
            .iter()
            .filter(|f| f.dimension == 3 && f.bounded)
            .count();
        assert_eq!(chambers, 15);
        assert_eq!(bounded, 1);

        // triangle of lines
        let a = RationalArrangement::general_position(3, 2).unwrap();
        let faces = a.faces().unwrap();
        let bounded = faces
            .iter()
            .filter(|f| f.dimension == 2 && f.bounded)
            .count();
        assert_eq!(bounded, 1);
    }

    #[test]
    fn max_formulas() {
        assert_eq!(max_chambers(5, 3), 26);
        assert_eq!(max_chambers(2, 3), 4); // 2^n when n ≤ d
        assert_eq!(max_chambers(3, 4), 8);
        assert_eq!(max_vertices(9, 2), 36);
    }

    #[test]
    fn distinctness_enforced() {
        // same line, opposite orientation
        let r = RationalArrangement::from_ints(2, &[(&[1, 0], 0), (&[-2, 0], 0)]);
        assert!(r.is_err());
        let r = RationalArrangement::new_unchecked(
            2,
            vec![
                Hyperplane::from_ints(&[1, 0], 0).unwrap(),
                Hyperplane::from_ints(&[-2, 0], 0).unwrap(),
            ],
        );
        assert!(r.is_ok());
    }

    #[test]
    fn cone_of_point_on_line() {
        // one point on a line (d=1) cones to 2 crossing lines through origin
        let a = RationalArrangement::from_ints(1, &[(&[1], 0)]).unwrap();
        let c = a.cone();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.len(), 2);
        assert!(c.is_central());
        assert_eq!(c.faces().unwrap().len(), 9);
        assert_eq!(c.rank(), a.rank() + 1);
    }

    #[test]
    fn recession_and_boundedness() {
        // strip between x=0 and x=1 is unbounded; add y-bounds to box it
        let strip = RationalArrangement::from_ints(2, &[(&[1, 0], 0), (&[1, 0], 1)]).unwrap();
        let f = strip.faces().unwrap();
        assert!(f.iter().all(|face| !face.bounded));

        let boxed = RationalArrangement::from_ints(
            2,
            &[(&[1, 0], 0), (&[1, 0], 1), (&[0, 1], 0), (&[0, 1], 1)],
        )
        .unwrap();
        let f = boxed.faces().unwrap();
        let bounded_chambers: Vec<_> = f.iter().filter(|x| x.dimension == 2 && x.bounded).collect();
        assert_eq!(bounded_chambers.len(), 1);
        assert_eq!(bounded_chambers[0].covector, sv("+-+-"));
    }

    #[test]
    fn witnesses_lie_in_their_faces() {
        let a = RationalArrangement::general_position(4, 2).unwrap();
        for f in a.faces().unwrap() {
            for (i, h) in a.hyperplanes().iter().enumerate() {
                assert_eq!(h.side(&f.witness), f.covector.get(i));
            }
        }
    }

    #[test]
    fn pappus_collinearity() {
        let pts = pappus_middle_points();
        // determinant of the three homogenized points is exactly zero
        let m: Vec<Vec<Rat>> = pts
            .iter()
            .map(|p| vec![p[0].clone(), p[1].clone(), rat(1)])
            .collect();
        assert_eq!(linalg::det(&m), rat(0));
        // the ninth line contains all three
        let a = pappus();
        let ninth = &a.hyperplanes()[8];
        for p in &pts {
            assert!(ninth.eval(p).is_zero());
        }
        assert_eq!(a.len(), 9);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn goodman_pollack_coplanarity() {
        let pts = goodman_pollack_points();
        // O is the origin; P, Q, R span a rank-2 space with it
        let m: Vec<Vec<Rat>> = pts[1..].to_vec();
        assert_eq!(linalg::det(&m), rat(0));
        let a = goodman_pollack_8();
        let eighth = &a.hyperplanes()[7];
        for p in &pts {
            assert!(eighth.eval(p).is_zero());
        }
        assert_eq!(a.len(), 8);
    }
}
