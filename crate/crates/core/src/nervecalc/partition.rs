use super::NerveError;
use crate::treebuild::trace::ConstructionTrace;

/// An assignment of every point index to one of `n_parts` nonempty classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    n_parts: usize,
    assignment: Vec<usize>,
    trace: Option<ConstructionTrace>,
}

impl Partition {
    pub fn new(n_parts: usize, assignment: Vec<usize>) -> Result<Self, NerveError> {
        if n_parts > assignment.len() {
            return Err(NerveError::EmptyPart(assignment.len()));
        }
        let mut sizes = vec![0usize; n_parts];
        for (i, &c) in assignment.iter().enumerate() {
            if c >= n_parts {
                return Err(NerveError::Partition(format!(
                    "point {i} assigned to part {c}, but there are {n_parts} parts"
                )));
            }
            sizes[c] += 1;
        }
        if let Some(empty) = sizes.iter().position(|&s| s == 0) {
            return Err(NerveError::EmptyPart(empty));
        }
        Ok(Partition {
            n_parts,
            assignment,
            trace: None,
        })
    }

    /// Builds a partition from explicit parts covering `0..n_points`.
    pub fn from_parts(n_points: usize, parts: &[Vec<usize>]) -> Result<Self, NerveError> {
        let mut assignment = vec![usize::MAX; n_points];
        for (c, part) in parts.iter().enumerate() {
            for &i in part {
                if i >= n_points || assignment[i] != usize::MAX {
                    return Err(NerveError::Partition(format!(
                        "point {i} missing from range or listed twice"
                    )));
                }
                assignment[i] = c;
            }
        }
        if let Some(i) = assignment.iter().position(|&c| c == usize::MAX) {
            return Err(NerveError::Partition(format!("point {i} is unassigned")));
        }
        Self::new(parts.len(), assignment)
    }

    pub fn with_trace(mut self, trace: ConstructionTrace) -> Self {
        self.trace = Some(trace);
        self
    }

    pub fn without_trace(mut self) -> Self {
        self.trace = None;
        self
    }

    pub fn n_parts(&self) -> usize {
        self.n_parts
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn part_of(&self, i: usize) -> usize {
        self.assignment[i]
    }

    pub fn trace(&self) -> Option<&ConstructionTrace> {
        self.trace.as_ref()
    }

    /// Point indices of each part, increasing.
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.n_parts];
        for (i, &c) in self.assignment.iter().enumerate() {
            parts[c].push(i);
        }
        parts
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.n_parts];
        for &c in &self.assignment {
            s[c] += 1;
        }
        s
    }

    /// Same classes, ignoring traces.
    pub fn same_assignment(&self, other: &Partition) -> bool {
        self.n_parts == other.n_parts && self.assignment == other.assignment
    }
}
