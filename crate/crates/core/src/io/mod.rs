//! Reading and writing frameworks and results.

mod apx;
mod output;
mod tgf;

use std::path::Path;

pub use self::apx::{emit_apx, parse_apx};
pub use self::output::{
    emit_dot, emit_extensions, emit_trace, extensions_json, render_set, render_sets,
};
pub use self::tgf::{emit_tgf, parse_tgf};

use crate::error::Result;
use crate::framework::Framework;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Tgf,
    Apx,
}

impl InputFormat {
    /// Guesses the format from a `.tgf` or `.apx` extension.
    pub fn from_path(path: &Path) -> Option<Self> {
        let ext = path.extension()?.to_str()?.to_ascii_lowercase();
        match ext.as_str() {
            "tgf" => Some(InputFormat::Tgf),
            "apx" => Some(InputFormat::Apx),
            _ => None,
        }
    }

    pub fn parse(self, text: &str) -> Result<Framework> {
        match self {
            InputFormat::Tgf => parse_tgf(text),
            InputFormat::Apx => parse_apx(text),
        }
    }

    pub fn emit(self, af: &Framework) -> String {
        match self {
            InputFormat::Tgf => emit_tgf(af),
            InputFormat::Apx => emit_apx(af),
        }
    }
}
