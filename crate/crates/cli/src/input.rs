use std::fs;
use std::io::Read;
use std::path::Path;

use cranklab::format;
use cranklab::hereditary::HeredCollection;
use cranklab::{Caps, Lattice, Poset, SbMatrix};
use sha2::{Digest, Sha256};

use crate::CliError;

/// Raw input bytes with their digest.
pub struct Input {
    pub path: String,
    pub text: String,
    pub sha256: String,
}

impl Input {
    /// Reads `path`, or standard input for `-`.
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let bytes = if path.as_os_str() == "-" {
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
            buf
        } else {
            fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?
        };
        Self::from_bytes(&path.display().to_string(), bytes)
    }

    pub fn from_bytes(path: &str, bytes: Vec<u8>) -> Result<Self, CliError> {
        let sha256 = Sha256::digest(&bytes)
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        let text = String::from_utf8(bytes).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
        Ok(Self {
            path: path.to_string(),
            text,
            sha256,
        })
    }

    pub fn matrix(&self) -> Result<SbMatrix, CliError> {
        Ok(format::parse_matrix(&self.text)?)
    }

    pub fn poset(&self) -> Result<Poset, CliError> {
        Ok(format::parse_poset_json(&self.text)?)
    }

    pub fn lattice(&self) -> Result<Lattice, CliError> {
        Ok(Lattice::from_poset(self.poset()?)?)
    }

    pub fn hered(&self, caps: &Caps) -> Result<HeredCollection, CliError> {
        Ok(format::parse_hered_json(&self.text, caps)?)
    }
}
