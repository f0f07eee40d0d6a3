use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use torus_core::quasiparticles::{
    braid_phase, create_dyon_pair, create_pair, fuse, move_operator, mutual_monodromy,
    perimeter_excitation_count, planar_restriction, quasiplaque_step_edges, rectangular_membrane,
    transport,
};
use torus_core::{
    AnyonType, Charge, DyonSpec, ExcitationConfig, Move, PauliKind, PauliOperator, Plane, ToricCode,
};

#[test]
fn fusion_is_an_abelian_group() {
    for a in AnyonType::ALL {
        assert_eq!(fuse(a, AnyonType::VACUUM), a);
        assert_eq!(fuse(a, a), AnyonType::VACUUM);
        for b in AnyonType::ALL {
            assert_eq!(fuse(a, b), fuse(b, a));
            for c in AnyonType::ALL {
                assert_eq!(fuse(fuse(a, b), c), fuse(a, fuse(b, c)));
            }
        }
    }
    assert_eq!(fuse(AnyonType::E, AnyonType::M), AnyonType::EPSILON);
}

#[test]
fn monodromy_is_symmetric_bilinear() {
    for a in AnyonType::ALL {
        assert_eq!(mutual_monodromy(a, AnyonType::VACUUM), 1);
        for b in AnyonType::ALL {
            assert_eq!(mutual_monodromy(a, b), mutual_monodromy(b, a));
            for c in AnyonType::ALL {
                assert_eq!(
                    mutual_monodromy(fuse(a, b), c),
                    mutual_monodromy(a, c) * mutual_monodromy(b, c)
                );
            }
        }
    }
    assert_eq!(mutual_monodromy(AnyonType::E, AnyonType::M), -1);
}

/// Brute-force count of violated faces: a face is violated when an odd
/// number of its edges carry X.
fn brute_force_perimeter(code: &ToricCode, edges: &[usize]) -> usize {
    let c = code.complex();
    let set: BTreeSet<usize> = edges.iter().copied().collect();
    (0..c.face_count())
        .filter(|&f| {
            c.boundary_edges(f)
                .unwrap()
                .iter()
                .filter(|e| set.contains(e))
                .count()
                % 2
                == 1
        })
        .count()
}

#[test]
fn perimeter_law_for_small_rectangles() {
    let code = ToricCode::build(3, &[6, 6, 6]).unwrap();
    let c = code.complex();
    for normal in 0..3 {
        for corner in [0, 43, 200] {
            for a in 1..=4 {
                for b in 1..=4 {
                    let m = rectangular_membrane(c, normal, corner, a, b).unwrap();
                    let count = perimeter_excitation_count(&code, &m).unwrap();
                    assert_eq!(count, 2 * (a + b), "normal {normal} {a}×{b}");
                    assert_eq!(count, brute_force_perimeter(&code, &m));
                    assert!(code
                        .syndrome(
                            &PauliOperator::from_support(c.edge_count(), PauliKind::X, m).unwrap()
                        )
                        .unwrap()
                        .violated_vertices
                        .is_empty());
                }
            }
        }
    }
}

#[test]
fn transport_is_reversible() {
    let code = ToricCode::build(2, &[5, 5]).unwrap();
    let c = code.complex();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let e = rng.gen_range(0..c.edge_count());
        let start = create_pair(&code, Charge::E, e).unwrap();
        let v = start.e_positions[0];
        let next: Vec<usize> = c
            .star(v)
            .unwrap()
            .iter()
            .copied()
            .filter(|&f| f != e)
            .collect();
        let step = next[rng.gen_range(0..next.len())];
        let mv = Move::Single {
            kind: PauliKind::Z,
            edge: step,
        };
        let moved = transport(&code, &start, &mv).unwrap();
        assert_eq!(moved.excitation_count(), 2);
        assert_eq!(moved.energy, start.energy);
        let back = transport(&code, &moved, &mv).unwrap();
        assert_eq!(back.e_positions, start.e_positions);
        assert_eq!(back.source.phase_free(), start.source.phase_free());
    }
}

#[test]
fn quasiplaque_steps_move_one_magnetic_loop() {
    let code = ToricCode::build(3, &[4, 4, 4]).unwrap();
    let c = code.complex();
    for v in [0, 21, 63] {
        let star = c.star(v).unwrap().to_vec();
        for &k in &star {
            for &j in &star {
                if k == j {
                    continue;
                }
                let start = create_pair(&code, Charge::M, k).unwrap();
                assert_eq!(start.m_positions.len(), 4);
                let edges = quasiplaque_step_edges(c, v, k, j).unwrap();
                assert_eq!(edges.len(), 4);
                let moved = transport(
                    &code,
                    &start,
                    &Move::QuasiplaqueStep {
                        vertex: v,
                        from: k,
                        to: j,
                    },
                )
                .unwrap();
                let target = create_pair(&code, Charge::M, j).unwrap();
                assert_eq!(moved.m_positions, target.m_positions);
                assert!(moved.e_positions.is_empty());
            }
        }
    }
}

#[test]
fn dyons_violate_both_kinds() {
    let code2 = ToricCode::build(2, &[4, 4]).unwrap();
    for j in 0..code2.n_qubits() {
        let d = create_dyon_pair(&code2, &DyonSpec::Edge(j)).unwrap();
        assert_eq!((d.e_positions.len(), d.m_positions.len()), (2, 2));
    }
    let code3 = ToricCode::build(3, &[4, 4, 4]).unwrap();
    let c = code3.complex();
    for v in [0, 17] {
        for &j in c.star(v).unwrap() {
            let d = create_dyon_pair(&code3, &DyonSpec::Star { vertex: v, edge: j }).unwrap();
            assert_eq!((d.e_positions.len(), d.m_positions.len()), (2, 8));
        }
    }
    assert!(create_dyon_pair(&code3, &DyonSpec::Edge(0)).is_err());
}

#[test]
fn monodromy_depends_only_on_homology_class() {
    let code = ToricCode::build(2, &[5, 5]).unwrap();
    let c = code.complex();
    let center = c.vertex_at(&[2, 2]);
    let stationary = create_pair(&code, Charge::M, c.edge_at(center, 0)).unwrap();
    let inside = code.face_operator(c.face_at(center, 0, 1)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        // Deform a base loop by random faces away from the stationary pair.
        let mut mover = inside.clone();
        let mut crossings = 1;
        for _ in 0..rng.gen_range(0..6) {
            let f = rng.gen_range(0..c.face_count());
            mover = mover.multiply(&code.face_operator(f).unwrap()).unwrap();
            if stationary.m_positions.contains(&f) {
                crossings += 1;
            }
        }
        if mover.is_identity() {
            continue;
        }
        let expected = if crossings % 2 == 1 { -1 } else { 1 };
        assert_eq!(braid_phase(&code, &mover, &stationary).unwrap(), expected);
    }
}

#[test]
fn open_paths_are_rejected_for_braiding() {
    let code = ToricCode::build(2, &[4, 4]).unwrap();
    let stationary = create_pair(&code, Charge::M, 0).unwrap();
    let open = move_operator(&code, &Move::ZWalk(vec![5])).unwrap();
    assert!(braid_phase(&code, &open, &stationary).is_err());
}

#[test]
fn planar_restriction_reproduces_2d_code() {
    let code = ToricCode::build(3, &[3, 4, 5]).unwrap();
    for (axes, offset) in [((0, 1), 2), ((0, 2), 1), ((1, 2), 0)] {
        let r = planar_restriction(&code, Plane { axes, offset }).unwrap();
        let c2 = r.code.complex();
        for f in 0..c2.face_count() {
            let lifted = r.lift(&r.code.face_operator(f).unwrap()).unwrap();
            assert_eq!(lifted, code.face_operator(r.face_map[f]).unwrap());
        }
        // A planar Z string lifted into 3D keeps its endpoints.
        let e = 1;
        let z = PauliOperator::single(c2.edge_count(), e, PauliKind::Z).unwrap();
        let planar = ExcitationConfig::from_operator(&r.code, z.clone()).unwrap();
        let lifted = ExcitationConfig::from_operator(&code, r.lift(&z).unwrap()).unwrap();
        let mapped: Vec<usize> = planar
            .e_positions
            .iter()
            .map(|&v| r.vertex_map[v])
            .collect();
        let mut mapped_sorted = mapped.clone();
        mapped_sorted.sort();
        assert_eq!(lifted.e_positions, mapped_sorted);
    }
    assert!(planar_restriction(
        &code,
        Plane {
            axes: (1, 0),
            offset: 0
        }
    )
    .is_err());
    assert!(planar_restriction(
        &code,
        Plane {
            axes: (0, 1),
            offset: 5
        }
    )
    .is_err());
}
