//! Files, suites and reports on top of `qhakit-core`.

pub mod compute;
pub mod format;
pub mod render;
pub mod suites;

use std::path::Path;

use qhakit_core::catalog::{builtin, Structure};
use qhakit_core::dynamical::z2_family;

use format::{parse_structure, Document, LoadError};

/// Every check passed.
pub const EXIT_PASS: u8 = 0;
/// The input loaded but at least one check failed.
pub const EXIT_CHECKS_FAILED: u8 = 1;
/// The input did not load or verify, or the request does not apply to it.
pub const EXIT_UNUSABLE: u8 = 2;

pub fn exit_status(passed: bool) -> u8 {
    if passed {
        EXIT_PASS
    } else {
        EXIT_CHECKS_FAILED
    }
}

/// Built-ins as documents; the two k[Z/2] entries carry their dynamical family.
pub fn builtin_document(name: &str) -> Result<Document, LoadError> {
    let entry = builtin(name).map_err(|_| LoadError::NotFound(name.to_string()))?;
    let dynamical = match (&entry.structure, entry.name.as_str()) {
        (Structure::Triangular(t), "z2_triangular" | "semion") => Some(
            z2_family(t.qba()).map_err(|source| LoadError::Construction { location: "builtin dynamical family".to_string(), source })?,
        ),
        _ => None,
    };
    Ok(Document { structure: entry.structure, dynamical })
}

/// An existing path is read as a structure file; anything else is looked up
/// among the built-ins.
pub fn load_input(input: &str) -> Result<Document, LoadError> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io { path: input.to_string(), source })?;
        return parse_structure(&text);
    }
    builtin_document(input)
}
