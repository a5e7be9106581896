//! Randomized property checks and dual-route structural invariants.

use proptest::prelude::*;

use omkit_core::catalog;
use omkit_core::chirotope::Chirotope;
use omkit_core::geometry::{rat, Rat};
use omkit_core::matroid::{rank_of, CovectorSet};
use omkit_core::poset::FacePoset;
use omkit_core::sign::{Sign, SignVector, SignedPermutation};

fn sign_vector(n: usize) -> impl Strategy<Value = SignVector> {
    prop::collection::vec(0u8..3, n).prop_map(|vals| {
        let signs: Vec<Sign> = vals
            .iter()
            .map(|v| match v {
                0 => Sign::Zero,
                1 => Sign::Plus,
                _ => Sign::Minus,
            })
            .collect();
        SignVector::from_signs(&signs).unwrap()
    })
}

fn signed_permutation(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (
        Just((0..n as u8).collect::<Vec<u8>>()).prop_shuffle(),
        0u32..(1 << n),
    )
        .prop_map(|(image, flips)| SignedPermutation::new(image, flips).unwrap())
}

proptest! {
    #[test]
    fn compose_is_associative(
        x in sign_vector(9), y in sign_vector(9), z in sign_vector(9)
    ) {
        let left = x.compose(&y).unwrap().compose(&z).unwrap();
        let right = x.compose(&y.compose(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn order_composition_compatibility(x in sign_vector(9), y in sign_vector(9)) {
        prop_assert!(x.leq(&x.compose(&y).unwrap()).unwrap());
    }

    #[test]
    fn negation_distributes(x in sign_vector(7), y in sign_vector(7)) {
        prop_assert_eq!(
            x.compose(&y).unwrap().negate(),
            x.negate().compose(&y.negate()).unwrap()
        );
    }

    #[test]
    fn restriction_members_strictly_below(x in sign_vector(6), y in sign_vector(6)) {
        for z in x.restrict(&y).unwrap() {
            prop_assert!(z.leq(&x).unwrap());
            prop_assert_ne!(z, x);
        }
    }

    #[test]
    fn action_commutes_with_restriction(
        x in sign_vector(5), y in sign_vector(5), g in signed_permutation(5)
    ) {
        let mut lhs: Vec<SignVector> = x
            .restrict(&y)
            .unwrap()
            .iter()
            .map(|z| g.apply(z).unwrap())
            .collect();
        lhs.sort();
        let rhs = g.apply(&x).unwrap().restrict(&g.apply(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_is_invariant_under_the_group(
        vectors in prop::collection::hash_set(sign_vector(4), 1..25),
        g in signed_permutation(4)
    ) {
        let set = CovectorSet::new(4, vectors).unwrap();
        let moved = set.transform(&g).unwrap();
        prop_assert_eq!(set.rank(), moved.rank());
    }

    #[test]
    fn realizable_configurations_pass_exchange(
        coords in prop::collection::vec((-3i64..=3, -3i64..=3, -3i64..=3), 4..=6)
    ) {
        let vectors: Vec<Vec<Rat>> = coords
            .iter()
            .filter(|(a, b, c)| !(*a == 0 && *b == 0 && *c == 0))
            .map(|(a, b, c)| vec![rat(*a), rat(*b), rat(*c)])
            .collect();
        prop_assume!(vectors.len() >= 3);
        // rank-deficient samples are fine to skip
        if let Ok(chi) = Chirotope::from_vectors(&vectors) {
            prop_assert!(chi.verify_exchange().is_ok());
            prop_assert!(chi.gp3_and_bases_ok());
            let covectors = chi.covectors().unwrap();
            prop_assert!(covectors.check_axioms().all_pass());
        }
    }
}

/// Abstract cover computation agrees with the dimension-graded one on
/// geometric face posets, so every cover steps exactly one dimension.
#[test]
fn covers_step_one_dimension() {
    for name in [
        "fig2-lines",
        "fig3-class2",
        "fig6-tetrahedron",
        "fig11-pyramid",
    ] {
        let a = catalog::build(name).unwrap();
        let faces = a.faces().unwrap();
        let vectors: Vec<SignVector> = faces.iter().map(|f| f.covector).collect();
        let dims: Vec<usize> = faces.iter().map(|f| f.dimension).collect();
        let bounded: Vec<bool> = faces.iter().map(|f| f.bounded).collect();
        let graded = FacePoset::from_graded(&vectors, &dims, &bounded);
        let abstract_poset = FacePoset::from_covectors(&vectors);
        assert_eq!(graded.covers(), abstract_poset.covers(), "{name}");
        for &(lo, hi) in graded.covers() {
            assert_eq!(dims[lo] + 1, dims[hi], "{name}");
        }
    }
}

/// The longest-chain rank of the face covectors equals the linear-algebra
/// rank of the normal matrix across the catalog, and no distinct-hyperplane
/// arrangement produces a loop.
#[test]
fn poset_rank_equals_matrix_rank() {
    for entry in catalog::entries() {
        let a = catalog::build_entry(&entry).unwrap();
        let set = a.face_covectors().unwrap();
        assert_eq!(rank_of(set.vectors()), a.rank(), "{}", entry.name);
        assert!(set.loops().is_empty(), "{}", entry.name);
    }
}

/// Coincident hyperplanes (rejected by the validating constructor) show up
/// combinatorially as a parallel pair.
#[test]
fn coincident_lines_are_parallel_elements() {
    use omkit_core::geometry::{Hyperplane, RationalArrangement};
    let a = RationalArrangement::new_unchecked(
        2,
        vec![
            Hyperplane::from_ints(&[1, 0], 0).unwrap(),
            Hyperplane::from_ints(&[-2, 0], 0).unwrap(), // same line, flipped
        ],
    )
    .unwrap();
    let set = a.face_covectors().unwrap();
    assert_eq!(set.parallel_pairs(), vec![(0, 1)]);
}

/// Geometric composition equals sign-vector composition over all face
/// pairs, and guarded geometric restrictions sit inside the abstract ones,
/// nonempty.
#[test]
fn geometric_operations_match_the_algebra() {
    for name in [
        "fig2-lines",
        "lines3-triangle",
        "fig3-class3",
        "fig1-pencil",
    ] {
        let a = catalog::build(name).unwrap();
        let faces = a.faces().unwrap();
        for x in &faces {
            for y in &faces {
                let composed = a.geometric_compose(x, y).unwrap();
                assert_eq!(
                    composed.covector,
                    x.covector.compose(&y.covector).unwrap(),
                    "{name}"
                );
                // guard: separated, and y on every hyperplane of x
                let zeros_ok = (0..a.len())
                    .all(|i| !x.covector.get(i).is_zero() || y.covector.get(i).is_zero());
                let separated = !x.covector.conflict_indices(&y.covector).unwrap().is_empty();
                if zeros_ok && separated {
                    let seen = a.geometric_restrict(x, y).unwrap();
                    assert!(!seen.is_empty(), "{name}");
                    let abstract_set = x.covector.restrict(&y.covector).unwrap();
                    for f in &seen {
                        assert!(abstract_set.contains(&f.covector), "{name}");
                    }
                } else {
                    assert!(a.geometric_restrict(x, y).is_err(), "{name}");
                }
            }
        }
    }
}

/// Cocircuits of a central arrangement's chirotope are exactly the
/// covectors of its minimal positive-dimensional faces.
#[test]
fn cocircuits_are_ray_covectors() {
    let a = catalog::build("lines3-pencil").unwrap(); // 3 concurrent lines
    let config = a.vector_configuration().unwrap();
    let chi = Chirotope::from_vectors(&config).unwrap();
    let mut cocircuits = chi.cocircuits();
    cocircuits.sort();
    let faces = a.faces().unwrap();
    let mut rays: Vec<SignVector> = faces
        .iter()
        .filter(|f| f.dimension == 1)
        .map(|f| f.covector)
        .collect();
    rays.sort();
    assert_eq!(cocircuits, rays);
}

/// Bisecting an axis product doubles its chamber count: every product
/// chamber meets the horizontal plane.
#[test]
fn bisecting_a_product_doubles_chambers() {
    for base in ["fig3-class2", "fig3-class7", "lines3-triangle"] {
        let product = catalog::build(base).unwrap().product_with_axis().unwrap();
        let chambers = |a: &omkit_core::geometry::RationalArrangement| {
            let d = a.dim();
            a.faces()
                .unwrap()
                .iter()
                .filter(|f| f.dimension == d)
                .count()
        };
        let before = chambers(&product);
        let after = chambers(&product.bisect().unwrap());
        assert_eq!(after, 2 * before, "{base}");
    }
}

/// The two chiral variants of a generic five-line arrangement are
/// isomorphic: a reorientation realizes the reflection.
#[test]
fn chiral_variants_share_canonical_form() {
    let a = omkit_core::geometry::RationalArrangement::general_position(5, 2).unwrap();
    let mirrored: Vec<omkit_core::geometry::Hyperplane> = a
        .hyperplanes()
        .iter()
        .map(|h| {
            let mut normal = h.normal().to_vec();
            normal[0] = -normal[0].clone(); // reflect x -> -x
            omkit_core::geometry::Hyperplane::new(normal, h.offset().clone()).unwrap()
        })
        .collect();
    let b = omkit_core::geometry::RationalArrangement::new(2, mirrored).unwrap();
    let ca = a.cone().face_covectors().unwrap();
    let cb = b.cone().face_covectors().unwrap();
    let fa = omkit_core::iso::canonicalize(&ca).unwrap();
    let fb = omkit_core::iso::canonicalize(&cb).unwrap();
    assert_eq!(fa.vectors, fb.vectors);
}

/// The suspension of the worked four-line arrangement lands on exactly one
/// of the four central essential five-plane classes.
#[test]
fn fig4_suspension_is_one_of_the_four() {
    let cone = catalog::build("fig4-lines").unwrap().cone();
    let mut hits = Vec::new();
    for name in [
        "fig9-suspension-rays16",
        "fig9-suspension-rays20",
        "fig9-suspension-rays12",
        "fig9-suspension-rays10",
    ] {
        let other = catalog::build(name).unwrap();
        if omkit_core::iso::arrangements_equivalent(&cone, &other).unwrap() {
            hits.push(name);
        }
    }
    assert_eq!(hits, vec!["fig9-suspension-rays16"]);
}

/// Transforming a chirotope and its covector set commute.
#[test]
fn chirotope_transform_equivariance() {
    let chi = Chirotope::from_vectors(&[
        vec![rat(1), rat(0), rat(0)],
        vec![rat(0), rat(1), rat(0)],
        vec![rat(0), rat(0), rat(1)],
        vec![rat(1), rat(1), rat(1)],
        vec![rat(1), rat(-1), rat(2)],
    ])
    .unwrap();
    let g = SignedPermutation::new(vec![2, 0, 3, 1, 4], 0b01010).unwrap();
    let direct = chi.transform(&g).unwrap().covectors().unwrap();
    let through_covectors = chi.covectors().unwrap().transform(&g).unwrap();
    assert_eq!(direct.vectors(), through_covectors.vectors());
}
