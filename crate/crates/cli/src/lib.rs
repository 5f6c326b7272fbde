//! Batch front end for `rootgrade-core`: JSON job specs in, JSON result
//! documents out.

pub mod build;
pub mod commands;
pub mod error;
pub mod output;
pub mod spec;

use rootgrade_core::Limits;
use sha2::{Digest, Sha256};

pub use error::CliError;
pub use output::{parse_document, CommandResult, Document};

/// Rendered output and process exit code.
pub struct Response {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn render<T: serde::Serialize>(v: &T, pretty: bool) -> String {
    // through Value so that keys are sorted
    let v = serde_json::to_value(v).expect("serializable");
    if pretty {
        serde_json::to_string_pretty(&v).expect("serializable")
    } else {
        serde_json::to_string(&v).expect("serializable")
    }
}

fn error_response(command: &str, e: &CliError, pretty: bool) -> Response {
    let doc = output::ErrorDocument {
        command: command.to_string(),
        error: output::ErrorDetail {
            kind: e.kind().to_string(),
            message: e.to_string(),
            path: e.path().map(str::to_string),
        },
    };
    Response {
        stdout: render(&doc, pretty) + "\n",
        stderr: format!("rootgrade: {e}\n"),
        code: e.exit_code(),
    }
}

/// Runs `command` (or `explain`) on the raw bytes of a spec file.
pub fn execute(command: &str, input: &[u8], limits: &Limits, pretty: bool) -> Response {
    let text = match std::str::from_utf8(input) {
        Ok(t) => t,
        Err(e) => return error_response(command, &CliError::spec("$", e), pretty),
    };
    let spec = match spec::parse_spec(text) {
        Ok(s) => s,
        Err(e) => return error_response(command, &e, pretty),
    };
    if command == "explain" {
        return match commands::explain(&spec, limits) {
            Ok(s) => Response {
                stdout: s,
                stderr: String::new(),
                code: 0,
            },
            Err(e) => error_response(command, &e, pretty),
        };
    }
    match commands::run(command, &spec, limits) {
        Ok(outcome) => {
            let doc = Document {
                command: command.to_string(),
                input_digest: digest(input),
                result: outcome.result,
            };
            Response {
                stdout: render(&doc, pretty) + "\n",
                stderr: if outcome.passed {
                    String::new()
                } else {
                    format!("rootgrade: {command}: checks did not pass\n")
                },
                code: if outcome.passed { 0 } else { 3 },
            }
        }
        Err(e) => error_response(command, &e, pretty),
    }
}
