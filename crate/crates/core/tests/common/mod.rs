#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;
use torus_core::{BitVector, PauliOperator};

pub type Matrix = Vec<Vec<Complex64>>;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// 2×2 matrix of a single-qubit letter.
fn letter_matrix(letter: char) -> [[Complex64; 2]; 2] {
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    match letter {
        'I' => [[l, o], [o, l]],
        'X' => [[o, l], [l, o]],
        'Y' => [[o, -i], [i, o]],
        'Z' => [[l, o], [o, -l]],
        _ => unreachable!(),
    }
}

/// Dense matrix of a Pauli operator, assembled from its text form: the
/// coefficient prefix times the tensor product of textbook 2×2 matrices.
/// Qubit j is bit j of the basis index.
pub fn dense_matrix(p: &PauliOperator) -> Matrix {
    let text = p.to_string();
    let (prefix, letters) = text.split_at(2);
    let coefficient = match prefix {
        "+1" => c(1.0, 0.0),
        "+i" => c(0.0, 1.0),
        "-1" => c(-1.0, 0.0),
        "-i" => c(0.0, -1.0),
        _ => unreachable!(),
    };
    let mats: Vec<_> = letters.chars().map(letter_matrix).collect();
    let dim = 1usize << mats.len();
    let mut out = vec![vec![c(0.0, 0.0); dim]; dim];
    for (row, out_row) in out.iter_mut().enumerate() {
        for (col, entry) in out_row.iter_mut().enumerate() {
            let mut v = coefficient;
            for (j, m) in mats.iter().enumerate() {
                v *= m[(row >> j) & 1][(col >> j) & 1];
            }
            *entry = v;
        }
    }
    out
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![c(0.0, 0.0); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == c(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn approx_eq(a: &Matrix, b: &Matrix) -> bool {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .all(|(x, y)| (x - y).norm() < 1e-12)
}

pub fn random_pauli<R: Rng>(n: usize, rng: &mut R) -> PauliOperator {
    let x = BitVector::from_bools(&(0..n).map(|_| rng.gen()).collect::<Vec<bool>>());
    let z = BitVector::from_bools(&(0..n).map(|_| rng.gen()).collect::<Vec<bool>>());
    PauliOperator::from_parts(x, z, rng.gen_range(0..4)).unwrap()
}

/// All 4^n phase-free Pauli strings on n qubits.
pub fn all_strings(n: usize) -> Vec<PauliOperator> {
    (0..1usize << (2 * n))
        .map(|code| {
            let letters: String = (0..n)
                .map(|j| ['I', 'X', 'Y', 'Z'][(code >> (2 * j)) & 3])
                .collect();
            format!("+1{letters}").parse().unwrap()
        })
        .collect()
}
