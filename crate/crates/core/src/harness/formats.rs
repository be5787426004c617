//! JSON formats.
//!
//! Points: `{"dim": 2, "points": [[0, 0], ["1/2", "0.25"]]}`. Coordinates are
//! JSON numbers or strings, read exactly. Partitions:
//! `{"n_parts": 2, "assignment": [0, 1, 0]}`. Graphs:
//! `{"n": 3, "edges": [[0, 1], [1, 2]]}`.

use super::HarnessError;
use crate::exactgeom::rational::format_rational;
use crate::exactgeom::{parse_rational, Point, PointSet, Rational};
use crate::nervecalc::{GraphSpec, Partition};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::path::Path;

/// Upper bound on `n` in graph files.
pub const MAX_FILE_VERTICES: usize = 4096;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointsDoc {
    dim: usize,
    points: Vec<Vec<Value>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionDoc {
    n_parts: usize,
    assignment: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn json_err(e: serde_json::Error) -> HarnessError {
    HarnessError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn coordinate(v: &Value, row: usize, col: usize) -> Result<Rational, HarnessError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => {
            return Err(HarnessError::Coordinate {
                row,
                col,
                message: format!("expected a number, got {other}"),
            })
        }
    };
    parse_rational(&text).map_err(|e| HarnessError::Coordinate {
        row,
        col,
        message: e.to_string(),
    })
}

pub fn parse_points(text: &str) -> Result<PointSet, HarnessError> {
    let doc: PointsDoc = serde_json::from_str(text).map_err(json_err)?;
    if doc.dim == 0 {
        return Err(HarnessError::Schema("dim must be positive".into()));
    }
    let mut pts = Vec::with_capacity(doc.points.len());
    for (row, coords) in doc.points.iter().enumerate() {
        if coords.len() != doc.dim {
            return Err(HarnessError::Ragged {
                row,
                expected: doc.dim,
                found: coords.len(),
            });
        }
        let c = coords
            .iter()
            .enumerate()
            .map(|(col, v)| coordinate(v, row, col))
            .collect::<Result<Vec<_>, _>>()?;
        pts.push(Point::new(c)?);
    }
    Ok(PointSet::new(doc.dim, pts)?)
}

pub fn load_points(path: impl AsRef<Path>) -> Result<PointSet, HarnessError> {
    parse_points(&read(path)?)
}

/// Integers are written as JSON numbers, everything else as `"p/q"` strings.
pub fn points_to_json(ps: &PointSet) -> String {
    let rows: Vec<Value> = ps
        .iter()
        .map(|p| {
            Value::Array(
                p.coords()
                    .iter()
                    .map(|c| {
                        let s = format_rational(c);
                        if c.is_integer() {
                            serde_json::from_str(&s).expect("integers are valid JSON numbers")
                        } else {
                            Value::String(s)
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    serde_json::json!({ "dim": ps.dim(), "points": rows }).to_string()
}

pub fn parse_partition(text: &str) -> Result<Partition, HarnessError> {
    let doc: PartitionDoc = serde_json::from_str(text).map_err(json_err)?;
    Ok(Partition::new(doc.n_parts, doc.assignment)?)
}

pub fn load_partition(path: impl AsRef<Path>) -> Result<Partition, HarnessError> {
    parse_partition(&read(path)?)
}

pub fn partition_to_json(p: &Partition) -> String {
    serde_json::to_string(&PartitionDoc {
        n_parts: p.n_parts(),
        assignment: p.assignment().to_vec(),
    })
    .expect("plain data serializes")
}

pub fn parse_graph(text: &str) -> Result<GraphSpec, HarnessError> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(json_err)?;
    if doc.n > MAX_FILE_VERTICES {
        return Err(HarnessError::Schema(format!("graphs have at most {MAX_FILE_VERTICES} vertices")));
    }
    Ok(GraphSpec::new(doc.n, &doc.edges)?)
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<GraphSpec, HarnessError> {
    parse_graph(&read(path)?)
}

pub fn graph_to_json(g: &GraphSpec) -> String {
    serde_json::to_string(&GraphDoc {
        n: g.n(),
        edges: g.edges(),
    })
    .expect("plain data serializes")
}

fn read(path: impl AsRef<Path>) -> Result<String, HarnessError> {
    let path = path.as_ref();
    std::fs::read_to_string(path).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rational::frac;

    #[test]
    fn three_points() {
        let ps = parse_points(r#"{"dim":2,"points":[[0,0],[1,0],[0,1]]}"#).unwrap();
        assert_eq!(ps.len(), 3);
    }

    #[test]
    fn decimals_are_exact() {
        let ps = parse_points(r#"{"dim":1,"points":[["0.5"],[0.5],[1e-1]]}"#).unwrap();
        assert_eq!(ps.point(0).coord(0), &frac(1, 2));
        assert_eq!(ps.point(1).coord(0), &frac(1, 2));
        assert_eq!(ps.point(2).coord(0), &frac(1, 10));
    }

    #[test]
    fn ragged_rows_rejected() {
        let e = parse_points(r#"{"dim":2,"points":[[0,0],[1]]}"#).unwrap_err();
        assert!(matches!(e, HarnessError::Ragged { row: 1, expected: 2, found: 1 }));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let e = parse_points("{\"dim\":2,\n\"points\":[[0,0],]}").unwrap_err();
        assert!(matches!(e, HarnessError::Json { line: 2, .. }));
    }

    #[test]
    fn round_trips() {
        let ps = parse_points(r#"{"dim":2,"points":[["1/3",2],[-4,"0.75"]]}"#).unwrap();
        assert_eq!(parse_points(&points_to_json(&ps)).unwrap(), ps);
        let p = Partition::new(2, vec![0, 1, 1]).unwrap();
        assert!(parse_partition(&partition_to_json(&p)).unwrap().same_assignment(&p));
        let g = GraphSpec::path(4);
        assert_eq!(parse_graph(&graph_to_json(&g)).unwrap(), g);
    }
}
