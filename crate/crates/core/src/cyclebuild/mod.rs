//! Partitions whose nerve is a cycle: project to a plane, cut it into
//! angular sectors around one apex, and chain Radon splits around it.

pub mod cycle;
pub mod hamsandwich;
pub mod projection;
pub mod sectors;

pub use cycle::{cycle_partition, cycle_size, CycleOptions};
pub use hamsandwich::ham_sandwich_line;
pub use projection::{project_generic, Projection, DEFAULT_PROJECTION_RETRIES};
pub use sectors::{sector_subdivision, Sector, SectorLayout};

use crate::exactgeom::GeomError;
use crate::nervecalc::NerveError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Nerve(#[from] NerveError),
    #[error("cycles need at least 4 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("need at least {needed} points, found {found}")]
    TooFewPoints { needed: usize, found: usize },
    #[error("points are not in general position")]
    NotGeneralPosition,
    #[error("no generic projection found in {attempts} attempts")]
    RetriesExhausted { attempts: usize },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}
