mod common;

use common::{all_strings, approx_eq, dense_matrix, matmul, random_pauli};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torus_core::{PauliKind, PauliOperator};

fn commutes_dense(p: &PauliOperator, q: &PauliOperator) -> bool {
    let (a, b) = (dense_matrix(p), dense_matrix(q));
    approx_eq(&matmul(&a, &b), &matmul(&b, &a))
}

#[test]
fn commutes_matches_dense_for_all_three_qubit_pairs() {
    let strings = all_strings(3);
    assert_eq!(strings.len(), 64);
    let mut checked = 0;
    for p in &strings {
        for q in &strings {
            assert_eq!(p.commutes(q).unwrap(), commutes_dense(p, q), "{p} vs {q}");
            checked += 1;
        }
    }
    assert_eq!(checked, 4096);
}

#[test]
fn multiply_is_phase_exact_against_dense_matrices() {
    let strings = all_strings(2);
    for p in &strings {
        for q in &strings {
            for k in 0..4 {
                let pk = p.times_i_pow(k);
                let prod = pk.multiply(q).unwrap();
                assert!(
                    approx_eq(
                        &dense_matrix(&prod),
                        &matmul(&dense_matrix(&pk), &dense_matrix(q))
                    ),
                    "{pk} · {q}"
                );
            }
        }
    }
}

#[test]
fn x_times_z_matches_matrix_product() {
    let x = PauliOperator::single(1, 0, PauliKind::X).unwrap();
    let z = PauliOperator::single(1, 0, PauliKind::Z).unwrap();
    let y = PauliOperator::single(1, 0, PauliKind::Y).unwrap();
    let xz = x.multiply(&z).unwrap();
    assert!(approx_eq(
        &dense_matrix(&xz),
        &matmul(&dense_matrix(&x), &dense_matrix(&z))
    ));
    // XZ = −iY
    assert_eq!(xz, y.times_i_pow(3));
}

#[test]
fn single_letters_generate_klein_group_up_to_phase() {
    let n = 1;
    let group: Vec<PauliOperator> = vec![
        PauliOperator::identity(n),
        PauliOperator::single(n, 0, PauliKind::X).unwrap(),
        PauliOperator::composite_y(n, 0).unwrap(),
        PauliOperator::single(n, 0, PauliKind::Z).unwrap(),
    ];
    for a in &group {
        for b in &group {
            let prod = a.multiply(b).unwrap().phase_free();
            assert!(group.contains(&prod));
        }
    }
}

proptest! {
    #[test]
    fn square_is_plus_or_minus_identity(seed in any::<u64>(), n in 1usize..80) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_pauli(n, &mut rng);
        let sq = p.multiply(&p).unwrap();
        prop_assert!(sq.x_bits().is_zero() && sq.z_bits().is_zero());
        prop_assert!(sq.phase_exponent() == 0 || sq.phase_exponent() == 2);
        // Hermitian operators (real text coefficient) square to +1.
        let text = p.to_string();
        if text.starts_with("+1") || text.starts_with("-1") {
            prop_assert_eq!(sq.phase_exponent(), 0);
        }
    }

    #[test]
    fn multiply_is_associative(seed in any::<u64>(), n in 1usize..130) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (random_pauli(n, &mut rng), random_pauli(n, &mut rng), random_pauli(n, &mut rng));
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn commutes_is_symmetric_and_identity_is_central(seed in any::<u64>(), n in 1usize..100) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random_pauli(n, &mut rng), random_pauli(n, &mut rng));
        prop_assert_eq!(a.commutes(&b).unwrap(), b.commutes(&a).unwrap());
        prop_assert!(a.commutes(&PauliOperator::identity(n)).unwrap());
        prop_assert_eq!(a.multiply(&PauliOperator::identity(n)).unwrap(), a.clone());
        // ab = ±ba, with the sign given by commutes.
        let ab = a.multiply(&b).unwrap();
        let ba = b.multiply(&a).unwrap();
        let expected = if a.commutes(&b).unwrap() { ba.clone() } else { ba.times_i_pow(2) };
        prop_assert_eq!(ab, expected);
    }

    #[test]
    fn text_form_round_trips(seed in any::<u64>(), n in 0usize..70) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_pauli(n, &mut rng);
        let text = p.to_string();
        let back: PauliOperator = text.parse().unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn weight_is_support_size(seed in any::<u64>(), n in 1usize..100) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_pauli(n, &mut rng);
        let letters = p.to_string().chars().skip(2).filter(|&c| c != 'I').count();
        prop_assert_eq!(p.weight(), letters);
    }
}
