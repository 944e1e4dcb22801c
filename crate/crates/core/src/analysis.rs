//! The full pipeline on one fan.

use crate::class_group::{class_group, ClassGroupInfo};
use crate::demazure::{choose_v, enumerate_roots, mark_unipotent_subgroup, DemazureRoot, UnipotentChoice};
use crate::fan::{validate_fan, Fan, FanError};
use crate::linalg::{IntVec, LinalgError};
use crate::orbits::{enumerate_basic_subsets, orbit_catalog_with, verdict_with, BasicSubset, InfiniteReason, OrbitRecord, RadiantData, Verdict};

#[derive(Debug, thiserror::Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error("root enumeration failed: {0}")]
    Roots(#[from] LinalgError),
}

impl AnalysisError {
    pub fn kind(&self) -> &'static str {
        match self {
            AnalysisError::Fan(e) => e.kind(),
            AnalysisError::Roots(_) => "RootEnumeration",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Analysis {
    pub fan: Fan,
    pub class_group: ClassGroupInfo,
    /// Absent when the fan is not bilateral.
    pub radiant: Option<RadiantData>,
    pub roots: Vec<DemazureRoot>,
    pub v: Option<UnipotentChoice>,
    pub verdict: Verdict,
    /// Empty when the fan is not bilateral.
    pub basic_subsets: Vec<BasicSubset>,
    pub orbits: Option<Vec<OrbitRecord>>,
}

impl Analysis {
    pub fn from_parts(dim: usize, rays: Vec<IntVec>, max_cones: Vec<Vec<usize>>) -> Result<Self, AnalysisError> {
        Self::run(validate_fan(dim, rays, max_cones)?)
    }

    /// Requires a complete fan.
    pub fn run(fan: Fan) -> Result<Self, AnalysisError> {
        let fan = fan.require_complete()?;
        let class_group = class_group(&fan);
        let radiant = RadiantData::find(&fan);
        let mut roots = enumerate_roots(&fan)?;
        let (v, verdict, basic_subsets, orbits) = match &radiant {
            None => (None, Verdict::Infinite(InfiniteReason::NotRadiant), Vec::new(), None),
            Some(data) => {
                let choice = choose_v(&fan, &data.bilateral, &roots);
                mark_unipotent_subgroup(&mut roots, &choice);
                let verdict = verdict_with(&fan, data);
                let orbits = orbit_catalog_with(&fan, data).ok();
                (Some(choice), verdict, enumerate_basic_subsets(&fan, data), orbits)
            }
        };
        Ok(Analysis {
            fan,
            class_group,
            radiant,
            roots,
            v,
            verdict,
            basic_subsets,
            orbits,
        })
    }

    pub fn semisimple_count(&self) -> usize {
        self.roots.iter().filter(|r| r.is_semisimple()).count()
    }

    pub fn in_u_count(&self) -> usize {
        self.roots.iter().filter(|r| r.in_u).count()
    }
}
