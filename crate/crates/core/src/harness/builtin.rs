use super::HarnessError;
use crate::exactgeom::PointSet;

#[derive(Debug, Clone)]
pub struct BuiltinConfig {
    pub name: &'static str,
    pub points: PointSet,
    pub note: &'static str,
}

pub const BUILTIN_NAMES: [&str; 2] = ["p4-blocker-8", "c4-blocker-10"];

const P4_BLOCKER: [[i64; 2]; 8] = [
    [222, 243],
    [238, 13],
    [131, 50],
    [154, 105],
    [166, 145],
    [134, 106],
    [174, 188],
    [18, 51],
];

const C4_BLOCKER: [[i64; 2]; 10] = [
    [0, 0],
    [8, 5],
    [18, 3],
    [7, 4],
    [14, 5],
    [10, 8],
    [11, 7],
    [14, 17],
    [11, 6],
    [12, 12],
];

fn set(rows: &[[i64; 2]]) -> PointSet {
    let r: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    PointSet::from_ints(&r).expect("builtin coordinates are planar")
}

pub fn builtin_config(name: &str) -> Result<BuiltinConfig, HarnessError> {
    match name {
        "p4-blocker-8" => Ok(BuiltinConfig {
            name: "p4-blocker-8",
            points: set(&P4_BLOCKER),
            note: "8 planar points with no 4-part partition whose intersection graph is a path",
        }),
        "c4-blocker-10" => Ok(BuiltinConfig {
            name: "c4-blocker-10",
            points: set(&C4_BLOCKER),
            note: "10 planar points with no 4-part partition whose intersection graph is a 4-cycle",
        }),
        other => Err(HarnessError::UnknownConfig(other.to_string())),
    }
}
