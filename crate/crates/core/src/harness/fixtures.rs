//! Two planar configurations with one order type, one partition and one
//! intersection graph, whose nerves differ in their 2-face.
//!
//! Parts: the segments `{0,1}`, `{2,3}` and the triangle `{4,5,6}`. The
//! segments cross inside the triangle in the first set and outside it in
//! the second. Found by random search over small integer perturbations.

use crate::exactgeom::PointSet;
use crate::nervecalc::Partition;

const WITH_TRIPLE: [[i64; 2]; 7] = [[20, 5], [5, 17], [12, 15], [15, 8], [16, 2], [13, 18], [0, 19]];
const WITHOUT_TRIPLE: [[i64; 2]; 7] = [[20, 7], [2, 16], [12, 15], [17, 8], [16, 5], [15, 21], [-2, 17]];

fn set(rows: &[[i64; 2]]) -> PointSet {
    let r: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    PointSet::from_ints(&r).expect("planar fixture")
}

/// `(set whose nerve has the 2-face, set whose nerve lacks it, partition)`.
/// The identity is an order-type-preserving bijection between the sets.
pub fn face_fixture_pair() -> (PointSet, PointSet, Partition) {
    let p = Partition::new(3, vec![0, 0, 1, 1, 2, 2, 2]).expect("valid fixture partition");
    (set(&WITH_TRIPLE), set(&WITHOUT_TRIPLE), p)
}
