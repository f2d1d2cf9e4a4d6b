//! Instance file schema.
//!
//! ```json
//! {
//!   "n": 3,
//!   "name": "rainbow-triangle",
//!   "matroid1": {"type": "graphic", "vertex_count": 3, "edges": [[0, 1], [1, 2], [2, 0]]},
//!   "matroid2": {"type": "partition", "blocks": [[0, 1], [2]], "capacities": [1, 1]}
//! }
//! ```
//!
//! The other families are `{"type": "uniform", "n", "k"}` and
//! `{"type": "linear_gf2", "row_count", "columns"}` with columns as 0/1 arrays.

use serde::{Deserialize, Serialize};

use crate::matroid::{
    AnyMatroid, GraphicMatroid, LinearMatroidGf2, Matroid, MatroidError, PartitionMatroid, UniformMatroid,
};

use super::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MatroidSpec {
    Uniform {
        n: usize,
        k: usize,
    },
    Partition {
        blocks: Vec<Vec<usize>>,
        capacities: Vec<usize>,
    },
    Graphic {
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
    },
    #[serde(rename = "linear_gf2")]
    LinearGf2 {
        row_count: usize,
        columns: Vec<Vec<u8>>,
    },
}

impl MatroidSpec {
    pub fn build(&self) -> Result<AnyMatroid, MatroidError> {
        Ok(match self {
            MatroidSpec::Uniform { n, k } => AnyMatroid::Uniform(UniformMatroid::new(*n, *k)),
            MatroidSpec::Partition { blocks, capacities } => {
                AnyMatroid::Partition(PartitionMatroid::new(blocks.clone(), capacities.clone())?)
            }
            MatroidSpec::Graphic { vertex_count, edges } => {
                AnyMatroid::Graphic(GraphicMatroid::new(*vertex_count, edges.clone())?)
            }
            MatroidSpec::LinearGf2 { row_count, columns } => {
                AnyMatroid::LinearGf2(LinearMatroidGf2::from_columns(*row_count, columns)?)
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub n: usize,
    pub matroid1: MatroidSpec,
    pub matroid2: MatroidSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl InstanceFile {
    /// Builds both oracles, checking each against the declared ground size.
    pub fn build(&self) -> Result<(AnyMatroid, AnyMatroid), CliError> {
        let build_one = |label: &str, spec: &MatroidSpec| -> Result<AnyMatroid, CliError> {
            let m = spec.build().map_err(|e| match e {
                MatroidError::Invalid(msg) => CliError::Input(format!("{label}.{msg}")),
                other => CliError::Input(format!("{label}: {other}")),
            })?;
            if m.ground_size() != self.n {
                return Err(CliError::Input(format!(
                    "ground size mismatch: {label} has {} elements but n is {}",
                    m.ground_size(),
                    self.n
                )));
            }
            Ok(m)
        };
        Ok((
            build_one("matroid1", &self.matroid1)?,
            build_one("matroid2", &self.matroid2)?,
        ))
    }

    pub fn to_canonical_json(&self) -> String {
        super::canonical_json(self)
    }
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str) -> Result<InstanceFile, CliError> {
    let instance: InstanceFile =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("instance schema: {e}")))?;
    instance.build()?;
    Ok(instance)
}
