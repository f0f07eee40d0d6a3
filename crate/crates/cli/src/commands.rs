use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use torus_core::homology::{betti, homological_degeneracy};
use torus_core::oracle::DEFAULT_CAP;
use torus_core::quasiparticles::{
    braid_phase, create_pair, exchange_statistics, fuse as fuse_pair, fusion_table,
    mutual_monodromy,
};
use torus_core::{AnyonType, Charge, DenseOracle, PauliKind, PauliOperator, ToricCode};

use crate::opspec::OpSpec;
use crate::{BraidPair, CliError};

pub fn build_code(dim: Option<usize>, size: &[usize]) -> Result<ToricCode, CliError> {
    let dim = dim.ok_or_else(|| CliError::Validation("--dim is required".into()))?;
    if !(dim == 2 || dim == 3) {
        return Err(CliError::Validation(format!(
            "--dim must be 2 or 3, got {dim}"
        )));
    }
    let sizes = match size.len() {
        0 => return Err(CliError::Validation("--size is required".into())),
        1 => vec![size[0]; dim],
        n if n == dim => size.to_vec(),
        n => {
            return Err(CliError::Validation(format!(
                "--size takes 1 or {dim} values for a {dim}D lattice, got {n}"
            )))
        }
    };
    Ok(ToricCode::build(dim, &sizes)?)
}

fn operator_json(p: &PauliOperator) -> Value {
    json!({
        "weight": p.weight(),
        "x_support": p.x_bits().iter_ones().collect::<Vec<_>>(),
        "z_support": p.z_bits().iter_ones().collect::<Vec<_>>(),
    })
}

pub fn info(code: &ToricCode) -> Value {
    let c = code.complex();
    json!({
        "counts": c.summary(),
        "ground_energy": code.ground_energy(),
        "n_qubits": code.n_qubits(),
        "stabilizer_weights": { "face": 4, "vertex": 2 * c.dimension() },
    })
}

pub fn degeneracy(code: &ToricCode) -> Result<Value, CliError> {
    let c = code.complex();
    let k = code.logical_qubit_count();
    let homological = homological_degeneracy(c)?;
    Ok(json!({
        "agreement": 1u64 << k == homological,
        "betti": betti(c)?,
        "degeneracy": homological,
        "k": k,
        "stabilizer_rank": code.stabilizer_rank(),
    }))
}

fn random_operator(n: usize, seed: u64) -> PauliOperator {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut op = PauliOperator::identity(n);
    for q in 0..n {
        let kind = match rng.gen_range(0..4) {
            0 => continue,
            1 => PauliKind::X,
            2 => PauliKind::Y,
            _ => PauliKind::Z,
        };
        op = op
            .multiply(&PauliOperator::single(n, q, kind).expect("in range"))
            .expect("same size");
    }
    op
}

pub fn syndrome(code: &ToricCode, specs: &[OpSpec], seed: u64) -> Result<Value, CliError> {
    let n = code.n_qubits();
    let (op, source) = if specs.is_empty() {
        (random_operator(n, seed), "random")
    } else {
        let mut op = PauliOperator::identity(n);
        for s in specs {
            op = op.multiply(&s.operator(n).map_err(CliError::Validation)?)?;
        }
        (op, "ops")
    };
    let s = code.syndrome(&op)?;
    Ok(json!({
        "energy": s.energy,
        "excitation_energy": s.excitation_energy(),
        "ground_energy": s.ground_energy,
        "operator": operator_json(&op),
        "operator_source": source,
        "violated_faces": s.violated_faces,
        "violated_vertices": s.violated_vertices,
    }))
}

pub fn braid(code: &ToricCode, pair: BraidPair) -> Result<Value, CliError> {
    let c = code.complex();
    let n = code.n_qubits();
    let v = 0;
    let f = c.face_at(v, 0, 1);
    let face_edges = c.boundary_edges(f)?.to_vec();
    let (stationary, mover, step_edges, step_kind) = match pair {
        BraidPair::EM => (
            create_pair(code, Charge::M, face_edges[0])?,
            code.face_operator(f)?,
            face_edges.clone(),
            PauliKind::Z,
        ),
        BraidPair::EE => (
            create_pair(code, Charge::E, face_edges[0])?,
            code.face_operator(f)?,
            face_edges.clone(),
            PauliKind::Z,
        ),
        BraidPair::MM => (
            create_pair(code, Charge::M, face_edges[0])?,
            code.vertex_operator(v)?,
            c.star(v)?.to_vec(),
            PauliKind::X,
        ),
    };
    let phase = braid_phase(code, &mover, &stationary)?;
    let dense = if n <= DEFAULT_CAP {
        let steps = step_edges
            .iter()
            .map(|&e| PauliOperator::single(n, e, step_kind))
            .collect::<Result<Vec<_>, _>>()?;
        Some(DenseOracle::default().braid_sign(code, &steps, &stationary.source)?)
    } else {
        None
    };
    Ok(json!({
        "dense_phase": dense,
        "mover": operator_json(&mover),
        "pair": pair.label(),
        "phase": phase,
        "stationary": {
            "e_positions": stationary.e_positions,
            "m_positions": stationary.m_positions,
            "operator": operator_json(&stationary.source),
        },
    }))
}

pub fn fuse(anyons: &[String]) -> Result<Value, CliError> {
    let parsed = anyons
        .iter()
        .map(|a| a.parse::<AnyonType>())
        .collect::<Result<Vec<_>, _>>()?;
    let table: Vec<Vec<AnyonType>> = fusion_table().iter().map(|r| r.to_vec()).collect();
    let mut out = json!({
        "labels": AnyonType::ALL,
        "monodromy": AnyonType::ALL.iter().map(|&a| AnyonType::ALL.iter().map(|&b| mutual_monodromy(a, b)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "table": table,
    });
    if !parsed.is_empty() {
        let result = parsed.iter().copied().fold(AnyonType::VACUUM, fuse_pair);
        out["inputs"] = json!(parsed);
        out["result"] = json!(result);
        out["statistics"] = json!(exchange_statistics(result));
    }
    Ok(out)
}

pub fn spectrum(code: &ToricCode) -> Result<Value, CliError> {
    let oracle = DenseOracle::default();
    let levels = oracle.spectrum(code)?;
    let ground = levels.first().expect("non-empty spectrum");
    Ok(json!({
        "ground_energy": ground.energy,
        "ground_multiplicity": ground.multiplicity,
        "levels": levels,
        "max_energy": levels.last().expect("non-empty spectrum").energy,
        "n_qubits": code.n_qubits(),
    }))
}
