use crate::exactgeom::{Hyperplane, PointSet, RadonPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceKind {
    Convex2d,
    Cyclic,
    Caterpillar,
    Star,
    Cycle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    /// Radon split of the points `indices`; the pair uses the same global indices.
    RadonStep { indices: Vec<usize>, pair: RadonPair },
    /// The line (or hyperplane) cutting the new leaf off its parent. `through`
    /// lists the construction points it passes through (empty for a
    /// separating hyperplane).
    LeafLine {
        hyperplane: Hyperplane,
        through: Vec<usize>,
        leaf_color: usize,
        parent_color: usize,
    },
    /// Vertex-disjoint-but-one split of a cyclic polytope: `q` and `r` share `shared`.
    SubpolytopeSplit {
        q: Vec<usize>,
        r: Vec<usize>,
        shared: usize,
    },
    SectorAssignment { sector: usize, part: usize },
}

/// What a construction did, in order. Carries the base point set so that
/// extensions can match it inside a superset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub kind: TraceKind,
    pub base: PointSet,
    /// Color of the first vertex (the root of the leaf-addition order).
    pub root_color: usize,
    pub events: Vec<TraceEvent>,
}

impl ConstructionTrace {
    pub fn new(kind: TraceKind, base: PointSet, root_color: usize) -> Self {
        ConstructionTrace {
            kind,
            base,
            root_color,
            events: Vec::new(),
        }
    }

    pub fn push(&mut self, e: TraceEvent) {
        self.events.push(e);
    }

    /// `(hyperplane, leaf color, parent color)` for each leaf addition, in order.
    pub fn leaf_lines(&self) -> impl Iterator<Item = (&Hyperplane, usize, usize)> {
        self.events.iter().filter_map(|e| match e {
            TraceEvent::LeafLine {
                hyperplane,
                leaf_color,
                parent_color,
                ..
            } => Some((hyperplane, *leaf_color, *parent_color)),
            _ => None,
        })
    }

    /// Checks that every index is in range and every recorded line passes
    /// through its construction points.
    pub fn is_consistent(&self) -> bool {
        let n = self.base.len();
        self.events.iter().all(|e| match e {
            TraceEvent::RadonStep { indices, pair } => {
                indices.iter().all(|&i| i < n)
                    && pair.part_a.iter().chain(&pair.part_b).all(|i| indices.contains(i))
            }
            TraceEvent::LeafLine {
                hyperplane,
                through,
                ..
            } => through
                .iter()
                .all(|&i| i < n && hyperplane.contains(self.base.point(i))),
            TraceEvent::SubpolytopeSplit { q, r, shared } => {
                q.iter().chain(r).all(|&i| i < n) && q.contains(shared) && r.contains(shared)
            }
            TraceEvent::SectorAssignment { .. } => true,
        })
    }
}
