//! First-order vocabularies.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Relation and function symbols with arities, plus constants. All names
/// must be distinct across the three kinds.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    #[serde(default)]
    pub relations: BTreeMap<String, usize>,
    #[serde(default)]
    pub functions: BTreeMap<String, usize>,
    #[serde(default)]
    pub constants: Vec<String>,
}

impl Signature {
    pub fn empty() -> Signature {
        Signature::default()
    }

    pub fn validate(&self) -> Result<(), Error> {
        let mut names: Vec<&str> = Vec::new();
        for n in self.relations.keys().chain(self.functions.keys()) {
            names.push(n);
        }
        for c in &self.constants {
            names.push(c);
        }
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(Error::Other("signature names are not distinct".into()));
        }
        Ok(())
    }

    pub fn is_constant(&self, name: &str) -> bool {
        self.constants.iter().any(|c| c == name)
    }

    pub fn from_json(text: &str) -> Result<Signature, Error> {
        let sig: Signature =
            serde_json::from_str(text).map_err(|e| Error::Model(format!("signature: {e}")))?;
        sig.validate()?;
        Ok(sig)
    }

    /// Extend with fresh constants (used by the first-order translation).
    pub fn with_constants(&self, extra: &[String]) -> Signature {
        let mut out = self.clone();
        for c in extra {
            if !out.is_constant(c) {
                out.constants.push(c.clone());
            }
        }
        out
    }
}
