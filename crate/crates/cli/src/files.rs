//! On-disk formats: system spec files and per-component count files.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use minperiodic_core::model::{AttractorSpec, Bunch, ComponentSpec, Side, SystemSpec};
use minperiodic_core::PointCounts;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub manifold_orientable: bool,
    pub attractors: Vec<AttractorEntry>,
    pub components: Vec<ComponentEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AttractorEntry {
    pub id: String,
    pub orientable: bool,
    pub bunches: Vec<BunchEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BunchEntry {
    pub id: String,
    pub degree: u8,
    pub component: String,
    #[serde(default = "one")]
    pub period: u32,
}

fn one() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentEntry {
    pub id: String,
    pub side: Side,
    pub orientable: bool,
}

impl SpecFile {
    pub fn into_spec(self) -> SystemSpec {
        let mut bunches = Vec::new();
        let attractors = self
            .attractors
            .into_iter()
            .map(|a| {
                let bunch_ids = a.bunches.iter().map(|b| b.id.clone()).collect();
                bunches.extend(a.bunches.into_iter().map(|b| Bunch {
                    id: b.id,
                    degree: b.degree,
                    attractor: a.id.clone(),
                    component: b.component,
                    period: b.period,
                }));
                AttractorSpec {
                    id: a.id,
                    orientable: a.orientable,
                    bunch_ids,
                }
            })
            .collect();
        let components = self
            .components
            .into_iter()
            .map(|c| ComponentSpec::new(c.id, c.side, c.orientable, 0, 0))
            .collect();
        SystemSpec::assemble(self.manifold_orientable, attractors, components, bunches)
    }

    /// Inverse of [`SpecFile::into_spec`] for specs whose bunches are listed
    /// by their owners.
    pub fn from_spec(spec: &SystemSpec) -> Self {
        let attractors = spec
            .attractors
            .iter()
            .map(|a| AttractorEntry {
                id: a.id.clone(),
                orientable: a.orientable,
                bunches: a
                    .bunch_ids
                    .iter()
                    .filter_map(|id| spec.bunches.iter().find(|b| &b.id == id))
                    .map(|b| BunchEntry {
                        id: b.id.clone(),
                        degree: b.degree,
                        component: b.component.clone(),
                        period: b.period,
                    })
                    .collect(),
            })
            .collect();
        let components = spec
            .components
            .iter()
            .map(|c| ComponentEntry {
                id: c.id.clone(),
                side: c.side,
                orientable: c.orientable,
            })
            .collect();
        Self {
            manifold_orientable: spec.manifold_orientable,
            attractors,
            components,
        }
    }
}

/// Component id → regularized counts.
pub type CountsFile = BTreeMap<String, PointCounts>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn parse_spec(text: &str) -> Result<SpecFile, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("spec: {e}")))
}

pub fn read_spec(path: &Path) -> Result<SystemSpec, CliError> {
    let text = read(path)?;
    parse_spec(&text)
        .map(SpecFile::into_spec)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn read_counts(path: &Path) -> Result<CountsFile, CliError> {
    let text = read(path)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: counts: {e}", path.display())))
}
