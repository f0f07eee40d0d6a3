//! Operator specs of the form `KIND:edge,edge,...`, where each edge is a raw
//! index or a coordinate tuple `(x,y,axis)` / `(x,y,z,axis)`.

use torus_core::{CellComplex, PauliKind, PauliOperator};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpSpec {
    pub kind: PauliKind,
    pub edges: Vec<usize>,
}

impl OpSpec {
    pub fn parse(text: &str, c: &CellComplex) -> Result<Self, String> {
        let (kind, rest) = text
            .split_once(':')
            .ok_or_else(|| format!("operator spec {text:?} must look like KIND:edge,..."))?;
        let kind: PauliKind = kind.trim().parse().map_err(|e| format!("{e}"))?;
        let mut edges = Vec::new();
        for token in split_top_level(rest)? {
            edges.push(parse_edge(&token, c)?);
        }
        if edges.is_empty() {
            return Err(format!("operator spec {text:?} lists no edges"));
        }
        Ok(Self { kind, edges })
    }

    /// Canonical form with raw indices, used in the resolved config.
    pub fn canonical(&self) -> String {
        let letter = match self.kind {
            PauliKind::X => "X",
            PauliKind::Y => "Y",
            PauliKind::Z => "Z",
        };
        let edges: Vec<String> = self.edges.iter().map(usize::to_string).collect();
        format!("{letter}:{}", edges.join(","))
    }

    pub fn operator(&self, n: usize) -> Result<PauliOperator, String> {
        PauliOperator::from_support(n, self.kind, self.edges.iter().copied())
            .map_err(|e| e.to_string())
    }
}

/// Splits on commas that are not inside parentheses.
fn split_top_level(s: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut current));
                continue;
            }
            _ => {}
        }
        if !(0..=1).contains(&depth) {
            return Err(format!("unbalanced parentheses in {s:?}"));
        }
        current.push(ch);
    }
    if depth != 0 {
        return Err(format!("unbalanced parentheses in {s:?}"));
    }
    out.push(current);
    Ok(out
        .into_iter()
        .map(|t| t.trim().to_string())
        .filter(|t| !t.is_empty())
        .collect())
}

fn parse_edge(token: &str, c: &CellComplex) -> Result<usize, String> {
    let n = c.edge_count();
    if let Some(inner) = token.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        let parts: Vec<usize> = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("bad coordinate in {token:?}"))
            })
            .collect::<Result<_, _>>()?;
        let dim = c.dimension();
        if parts.len() != dim + 1 {
            return Err(format!(
                "edge tuple {token:?} needs {dim} coordinates and an axis"
            ));
        }
        let (position, axis) = (&parts[..dim], parts[dim]);
        if axis >= dim {
            return Err(format!("axis {axis} in {token:?} must be < {dim}"));
        }
        for (i, (&x, &l)) in position.iter().zip(c.sizes()).enumerate() {
            if x >= l {
                return Err(format!("coordinate {i} of {token:?} must be < {l}"));
            }
        }
        return Ok(c.edge_at(c.vertex_at(position), axis));
    }
    let e: usize = token.parse().map_err(|_| format!("bad edge {token:?}"))?;
    if e >= n {
        return Err(format!("edge {e} out of range (lattice has {n} edges)"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_and_indices() {
        let c = CellComplex::build_torus(2, &[3, 3]).unwrap();
        let spec = OpSpec::parse("Z:(1,2,1), 4", &c).unwrap();
        assert_eq!(spec.edges, vec![9 + c.vertex_at(&[1, 2]), 4]);
        assert_eq!(spec.canonical(), format!("Z:{},4", 9 + 5));
        assert!(OpSpec::parse("Z:(1,2)", &c).is_err());
        assert!(OpSpec::parse("Z:(3,0,0)", &c).is_err());
        assert!(OpSpec::parse("Q:1", &c).is_err());
        assert!(OpSpec::parse("X:18", &c).is_err());
        assert!(OpSpec::parse("X:((1,2,0)", &c).is_err());
    }
}
