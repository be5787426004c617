//! Replays the checked-in fuzz seeds through the same checks the fuzz
//! targets make.

use nerve_forge::exactgeom::parse_rational;
use nerve_forge::exactgeom::rational::format_rational;
use nerve_forge::harness::{graph_to_json, parse_graph, parse_partition, parse_points, partition_to_json, points_to_json};
use std::path::PathBuf;

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| std::fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn point_seeds() {
    let mut ok = 0;
    for s in seeds("parse_points") {
        if let Ok(ps) = parse_points(&s) {
            assert_eq!(parse_points(&points_to_json(&ps)).unwrap(), ps);
            ok += 1;
        }
    }
    assert!(ok >= 3);
}

#[test]
fn partition_seeds() {
    let mut ok = 0;
    for s in seeds("parse_partition") {
        if let Ok(p) = parse_partition(&s) {
            assert_eq!(parse_partition(&partition_to_json(&p)).unwrap(), p);
            ok += 1;
        }
    }
    assert_eq!(ok, 2);
}

#[test]
fn graph_seeds() {
    for s in seeds("parse_graph") {
        let g = parse_graph(&s).unwrap();
        assert_eq!(parse_graph(&graph_to_json(&g)).unwrap(), g);
    }
}

#[test]
fn rational_seeds() {
    let mut rejected = 0;
    for s in seeds("parse_rational") {
        match parse_rational(&s) {
            Ok(r) => assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r),
            Err(_) => rejected += 1,
        }
    }
    assert_eq!(rejected, 2);
}
