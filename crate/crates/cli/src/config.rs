//! Session settings: built-in defaults, then the file named by `PCVAL_CONFIG`
//! or `--config`, then command-line flags.

use std::path::Path;

use pcval::field::Backend;
use pcval::pcv::DEFAULT_MAX_INDEX;
use pcval::Error;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

/// Optional overrides, as read from a config file.
///
/// ```json
/// {"backend": "fp:3", "max_index": 48, "depth": 32, "format": "json"}
/// ```
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub backend: Option<String>,
    pub max_index: Option<usize>,
    pub depth: Option<usize>,
    pub format: Option<Format>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SessionConfig {
    #[serde(serialize_with = "as_string")]
    pub backend: Backend,
    pub max_index: usize,
    pub depth: usize,
    pub format: Format,
}

fn as_string<S: serde::Serializer>(b: &Backend, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&b.to_string())
}

pub const DEFAULT_DEPTH: usize = 40;

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig { backend: Backend::Rational, max_index: DEFAULT_MAX_INDEX, depth: DEFAULT_DEPTH, format: Format::Text }
    }
}

impl SessionConfig {
    pub fn load(path: Option<&Path>) -> Result<ConfigFile, Error> {
        let Some(path) = path else { return Ok(ConfigFile::default()) };
        let text = std::fs::read_to_string(path).map_err(|e| Error::Precondition {
            clause: "config",
            detail: format!("cannot read {}: {e}", path.display()),
        })?;
        serde_json::from_str(&text).map_err(|e| Error::Parse { pos: e.column(), msg: format!("{}: {e}", path.display()) })
    }

    pub fn apply(&mut self, o: ConfigFile) -> Result<(), Error> {
        if let Some(b) = o.backend {
            self.backend = b.parse()?;
        }
        if let Some(n) = o.max_index {
            self.max_index = n;
        }
        if let Some(d) = o.depth {
            self.depth = d;
        }
        if let Some(f) = o.format {
            self.format = f;
        }
        if self.max_index < 8 {
            return Err(Error::Precondition { clause: "max_index", detail: format!("{} is below 8", self.max_index) });
        }
        Ok(())
    }
}
