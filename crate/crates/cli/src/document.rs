//! JSON documents for lattice states.

use fivevertex::lattice::{boltzmann, gtp_of_state, theta, Family, LatticeState, ModelSpec, Spin};
use fivevertex::patterns::{subtract_staircase, GtPattern, Tableau};
use fivevertex::weyl::Permutation;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// Values recomputed from the grids. Kept in the file for readers only.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Derived {
    pub gtp: GtPattern,
    /// `null` for families without weights.
    pub weight: Option<String>,
    /// `null` when the pattern is not left-strict.
    pub tableau: Option<Tableau>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateDocument {
    pub schema_version: u32,
    pub lambda: Vec<i64>,
    pub r: usize,
    pub w: Vec<usize>,
    pub family: Family,
    pub horizontal: Vec<Vec<usize>>,
    pub vertical: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derived: Option<Derived>,
}

fn grid_out(g: &[Vec<Spin>]) -> Vec<Vec<usize>> {
    g.iter().map(|row| row.iter().map(|&s| usize::from(s)).collect()).collect()
}

fn grid_in(g: &[Vec<usize>]) -> Vec<Vec<Spin>> {
    g.iter().map(|row| row.iter().map(|&s| Spin::from(s)).collect()).collect()
}

pub fn derive(s: &LatticeState) -> Result<Derived, CliError> {
    let gtp = gtp_of_state(s).map_err(CliError::internal)?;
    let weight = boltzmann(s).ok().map(|p| p.to_string());
    let tableau = match subtract_staircase(&gtp) {
        Ok(_) => Some(theta(s).map_err(CliError::internal)?),
        Err(_) => None,
    };
    Ok(Derived { gtp, weight, tableau })
}

impl StateDocument {
    pub fn from_state(s: &LatticeState) -> Result<Self, CliError> {
        let spec = s.spec();
        Ok(StateDocument {
            schema_version: SCHEMA_VERSION,
            lambda: spec.lambda.clone(),
            r: spec.r(),
            w: spec.w.one_line().to_vec(),
            family: spec.family,
            horizontal: grid_out(s.horizontal()),
            vertical: grid_out(s.vertical()),
            derived: Some(derive(s)?),
        })
    }

    /// Rebuilds and re-validates the state; a stale derived block is an error.
    pub fn to_state(&self) -> Result<LatticeState, CliError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::Document(format!("unsupported schema_version {}", self.schema_version)));
        }
        if self.lambda.len() != self.r {
            return Err(CliError::Document(format!("lambda has {} parts but r = {}", self.lambda.len(), self.r)));
        }
        let w = Permutation::new(self.w.clone()).map_err(CliError::document)?;
        let spec = ModelSpec::new(&self.lambda, w, self.family).map_err(CliError::document)?;
        let n = spec.n();
        let shape_ok = |g: &[Vec<usize>], rows: usize, cols: usize| g.len() == rows && g.iter().all(|r| r.len() == cols);
        if !shape_ok(&self.horizontal, self.r, n + 1) {
            return Err(CliError::Document(format!("horizontal grid must be {} x {}", self.r, n + 1)));
        }
        if !shape_ok(&self.vertical, self.r + 1, n) {
            return Err(CliError::Document(format!("vertical grid must be {} x {}", self.r + 1, n)));
        }
        let state = LatticeState::new(spec, grid_in(&self.horizontal), grid_in(&self.vertical))
            .map_err(CliError::document)?;
        if let Some(d) = &self.derived {
            let fresh = derive(&state)?;
            if *d != fresh {
                return Err(CliError::Document("derived block does not match the grids".into()));
            }
        }
        Ok(state)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Document(format!("bad state document: {e}")))
    }
}
