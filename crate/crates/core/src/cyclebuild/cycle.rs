use super::projection::{project_generic, DEFAULT_PROJECTION_RETRIES};
use super::sectors::{sector_subdivision, SectorLayout};
use super::CycleError;
use crate::exactgeom::radon::radon_on;
use crate::exactgeom::{GeomError, PointSet};
use crate::nervecalc::{intersection_graph, GraphSpec, Partition};
use crate::treebuild::trace::{ConstructionTrace, TraceEvent, TraceKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleOptions {
    /// Seed for the projection directions.
    pub seed: u64,
    /// Skip the size check and succeed whenever the sectors work out, as
    /// they do for a 4-cycle on 13 planar points.
    pub relaxed: bool,
    pub projection_retries: usize,
}

impl Default for CycleOptions {
    fn default() -> Self {
        CycleOptions {
            seed: 0,
            relaxed: false,
            projection_retries: DEFAULT_PROJECTION_RETRIES,
        }
    }
}

pub fn cycle_size(n: usize, d: usize) -> usize {
    n * d + n + 4 * d
}

fn radon(ps: &PointSet, idx: &[usize]) -> Result<(Vec<usize>, Vec<usize>, crate::exactgeom::RadonPair), CycleError> {
    match radon_on(ps, idx) {
        Ok(pair) => Ok((pair.part_a.clone(), pair.part_b.clone(), pair)),
        Err(GeomError::Degeneracy(_)) => Err(CycleError::NotGeneralPosition),
        Err(e) => Err(e.into()),
    }
}

/// A partition of `ps` into `n` parts whose nerve is the cycle `0, 1, .., n-1`.
pub fn cycle_partition(n: usize, ps: &PointSet, opts: &CycleOptions) -> Result<(Partition, SectorLayout), CycleError> {
    if n < 4 {
        return Err(CycleError::CycleTooShort(n));
    }
    let d = ps.dim();
    let needed = cycle_size(n, d);
    if !opts.relaxed && ps.len() < needed {
        return Err(CycleError::TooFewPoints { needed, found: ps.len() });
    }
    let (img, _) = project_generic(ps, opts.seed, opts.projection_retries)?;
    let layout = sector_subdivision(&img, n, d)?;
    layout
        .check(&img, d + 1)
        .map_err(CycleError::VerificationFailed)?;
    let first = layout
        .sectors
        .iter()
        .position(|s| s.members.len() >= d + 2)
        .ok_or(CycleError::TooFewPoints { needed, found: ps.len() })?;

    let mut trace = ConstructionTrace::new(TraceKind::Cycle, ps.clone(), 0);
    let mut assignment = vec![usize::MAX; ps.len()];
    let q1 = &layout.sectors[first].members;
    let (a, b, pair) = radon(ps, &q1[..d + 2])?;
    let (s1, s2) = if a.contains(&q1[0]) { (a, b) } else { (b, a) };
    s1.iter().for_each(|&i| assignment[i] = 0);
    s2.iter().for_each(|&i| assignment[i] = 1);
    q1[d + 2..].iter().for_each(|&i| assignment[i] = 1);
    trace.push(TraceEvent::RadonStep { indices: q1[..d + 2].to_vec(), pair });
    trace.push(TraceEvent::SectorAssignment { sector: first, part: 0 });
    trace.push(TraceEvent::SectorAssignment { sector: first, part: 1 });

    for step in 1..n {
        let s = (first + step) % n;
        let members = &layout.sectors[s].members;
        let prev = &layout.sectors[(first + step - 1) % n].members;
        let part = step;
        let next_part = (step + 1) % n;
        // carried point: last member of the current part in the previous sector
        let carried = *prev
            .iter()
            .rev()
            .find(|&&i| assignment[i] == part)
            .ok_or_else(|| CycleError::VerificationFailed(format!("part {part} missing from sector {s}")))?;
        let mut idx = vec![carried];
        idx.extend_from_slice(&members[..d + 1]);
        let (a, b, pair) = radon(ps, &idx)?;
        let (keep, fresh) = if a.contains(&carried) { (a, b) } else { (b, a) };
        keep.iter().for_each(|&i| assignment[i] = part);
        fresh.iter().for_each(|&i| assignment[i] = next_part);
        members[d + 1..].iter().for_each(|&i| assignment[i] = next_part);
        trace.push(TraceEvent::RadonStep { indices: idx, pair });
        trace.push(TraceEvent::SectorAssignment { sector: s, part });
        trace.push(TraceEvent::SectorAssignment { sector: s, part: next_part });
    }
    let p = Partition::new(n, assignment)?.with_trace(trace);
    let g = intersection_graph(ps, &p)?.to_graph();
    if g != GraphSpec::cycle_graph(n)? {
        return Err(CycleError::VerificationFailed(format!(
            "intersection graph has edges {:?}",
            g.edges()
        )));
    }
    Ok((p, layout))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(cycle_size(4, 2), 20);
        assert_eq!(cycle_size(5, 3), 32);
    }

    #[test]
    fn short_cycles_rejected() {
        let ps = PointSet::from_ints(&[&[0, 0]]).unwrap();
        assert_eq!(
            cycle_partition(3, &ps, &CycleOptions::default()).unwrap_err(),
            CycleError::CycleTooShort(3)
        );
    }
}
