//! TOML seed files.
//!
//! ```toml
//! names = ["a", "b", "c"]
//! mutable = [0]
//! B = [[0], [-1], [-1]]
//! L = [[0, 1, 1], [-1, 0, 0], [-1, 0, 0]]
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError};
use crate::seed::{ExchangeMatrix, IntMatrix, QuantumSeed, QuasiCommutationMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedFile {
    pub names: Vec<String>,
    pub mutable: Vec<usize>,
    #[serde(rename = "B")]
    pub b: IntMatrix,
    #[serde(rename = "L")]
    pub l: IntMatrix,
    /// Documents that any serialized scalar exponents count `q^(1/2)` units.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_half_exponents: Option<bool>,
}

impl SeedFile {
    pub fn from_seed(seed: &QuantumSeed) -> Self {
        Self {
            names: seed.names().to_vec(),
            mutable: seed.exchange_matrix().mutable_rows().to_vec(),
            b: seed.exchange_matrix().entries().clone(),
            l: seed.quasi_commutation().entries().clone(),
            q_half_exponents: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        toml::from_str(text).map_err(|e| {
            let err = ParseError::new(e.message().to_string());
            match e.span() {
                Some(span) => err.at_line(text[..span.start].matches('\n').count() + 1),
                None => err,
            }
        })
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("seed files always serialize")
    }

    /// Validates and builds the seed, tracking expansions in its own frame.
    pub fn to_seed(&self) -> Result<QuantumSeed, Error> {
        let b = ExchangeMatrix::new(self.b.clone(), self.mutable.clone())?;
        let l = QuasiCommutationMatrix::new(self.l.clone())?;
        Ok(QuantumSeed::initial(self.names.clone(), b, l)?)
    }
}

pub fn load(path: &Path) -> Result<QuantumSeed, Error> {
    let text = std::fs::read_to_string(path)?;
    SeedFile::parse(&text)?.to_seed()
}
