use mobius_pauli::fflinalg::{FpVector, Modulus};
use mobius_pauli::moebius;
use mobius_pauli::pauli::{self, PauliElement};
use mobius_pauli::projgeom::{self, ProjectivePoint, Subspace};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = (usize, u32)> {
    (
        prop::sample::select(vec![3usize, 5, 7]),
        prop::sample::select(vec![2u32, 3, 5, 7]),
    )
}

fn vectors(p: u32, len: usize, count: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..p, len), 1..=count)
}

proptest! {
    #[test]
    fn polar_image_is_involutive_and_complementary(
        (n, p) in params(),
        seed in vectors(7, 8, 4),
    ) {
        let m = Modulus::new(p).unwrap();
        let pol = moebius::build_a(n, p).unwrap();
        let vs: Vec<FpVector> = seed.iter().map(|r| FpVector::new(m, r[..=n].iter().copied())).collect();
        let s = Subspace::from_vectors(m, n, &vs).unwrap();
        let ps = pol.polar_image(&s).unwrap();
        prop_assert_eq!(s.dim() + ps.dim(), n as isize - 1);
        prop_assert_eq!(pol.polar_image(&ps).unwrap(), s);
    }

    #[test]
    fn every_point_is_self_conjugate((n, p) in params(), raw in prop::collection::vec(0u32..7, 8)) {
        let m = Modulus::new(p).unwrap();
        let v = FpVector::new(m, raw[..=n].iter().copied());
        prop_assume!(!v.is_zero());
        let pol = moebius::build_a(n, p).unwrap();
        let x = ProjectivePoint::new(v).unwrap();
        prop_assert!(pol.conjugate(&x, &x).unwrap());
        prop_assert!(pol.polar_hyperplane(&x).unwrap().contains(&x));
    }

    #[test]
    fn polar_meet_depends_on_parity((n, p) in params(), mask in 1u32..256) {
        let pol = moebius::build_a(n, p).unwrap();
        let idx: Vec<usize> = (0..=n).filter(|&j| mask >> j & 1 == 1).collect();
        prop_assume!(idx.len() >= 2);
        let meet = moebius::polar_meet_of_face(&pol, &idx).unwrap();
        if idx.len().is_multiple_of(2) {
            prop_assert!(meet.is_empty());
        } else {
            let x = moebius::intersection_point(&idx, n, p).unwrap().point;
            prop_assert_eq!(meet.as_point(), Some(x));
        }
    }

    #[test]
    fn commutation_matches_polarity_after_basis_change(
        (n, p) in (prop::sample::select(vec![3usize, 5]), prop::sample::select(vec![2u32, 3, 5])),
        a in prop::collection::vec(0u32..5, 6),
        b in prop::collection::vec(0u32..5, 6),
    ) {
        let m = Modulus::new(p).unwrap();
        let (u, v) = (FpVector::new(m, a[..=n].iter().copied()), FpVector::new(m, b[..=n].iter().copied()));
        prop_assume!(!u.is_zero() && !v.is_zero());
        let pol = moebius::build_a(n, p).unwrap();
        let t = pauli::find_symplectic_to_a(n, p).unwrap();
        let x = PauliElement::canonical(t.mul_vec(&u).unwrap()).unwrap();
        let y = PauliElement::canonical(t.mul_vec(&v).unwrap()).unwrap();
        prop_assert_eq!(pauli::commutes(&x, &y).unwrap(), pol.pairing(&u, &v).unwrap() == 0);
    }
}

#[test]
fn nested_pairs_are_moebius_pairs() {
    for (n, p) in [(5usize, 2u32), (5, 3), (7, 2), (7, 5)] {
        let pair = moebius::build_moebius_pair(n, p).unwrap();
        for mask in 0u32..1 << (n + 1) {
            if mask.count_ones() < 4 || mask.count_ones() % 2 == 1 {
                continue;
            }
            let idx: Vec<usize> = (0..=n).filter(|&j| mask >> j & 1 == 1).collect();
            let np = moebius::nested_pair(&pair, &idx).unwrap();
            assert!(
                moebius::verify_moebius_pair(&np.pair).unwrap().is_valid(),
                "{idx:?} n={n} p={p}"
            );
            // every second vertex lies in the span of the chosen first vertices
            let face = projgeom::span(&np.ambient_first).unwrap();
            assert!(np.ambient_second.iter().all(|y| face.contains(y)));
        }
    }
}

#[test]
fn second_simplex_vertices_are_polar_faces() {
    for (n, p) in [(3usize, 5u32), (5, 7), (9, 3)] {
        let pair = moebius::build_moebius_pair(n, p).unwrap();
        for (j, q) in pair.second.vertices().iter().enumerate() {
            let face = pair.first.face(j).unwrap();
            assert_eq!(
                pair.polarity
                    .polar_image(&face)
                    .unwrap()
                    .as_point()
                    .as_ref(),
                Some(q)
            );
            assert_eq!(
                q.coords(),
                &ProjectivePoint::new(moebius::q_vector(j, n, p).unwrap())
                    .unwrap()
                    .into_coords()
            );
        }
    }
}
