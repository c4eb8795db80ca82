//! Run reports and their JSON / text renderings.

use std::fmt;

use grundy_core::sequence::verify_sequence;
use grundy_core::{Error, Graph, Vertex, VertexSequence};
use serde_json::{json, Map, Value};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const NEGATIVE: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const THRESHOLD: i32 = 3;
    pub const UNSUPPORTED: i32 = 4;
    pub const INTRACTABLE: i32 = 5;
    pub const INTERNAL: i32 = 9;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }

    pub fn parse(message: impl fmt::Display) -> Self {
        CliError::new(exit::PARSE, message.to_string())
    }

    pub fn unsupported(message: impl Into<String>) -> Self {
        CliError::new(exit::UNSUPPORTED, message)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLarge { .. } => exit::THRESHOLD,
            Error::IntractablePrime { .. } => exit::INTRACTABLE,
            Error::NotClosedForm | Error::NotSplit => exit::UNSUPPORTED,
            Error::Inconsistent(_) => exit::INTERNAL,
            _ => exit::PARSE,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<crate::format::ParseError> for CliError {
    fn from(e: crate::format::ParseError) -> Self {
        CliError::parse(e)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub input: String,
    pub gamma: Option<usize>,
    pub witness: Option<Vec<Vertex>>,
    /// `oracle`, `closed-form`, `mwis-reduction`, `decomposition`, ...
    pub solver: String,
    pub millis: u64,
    pub diagnostics: Map<String, Value>,
    /// Exit code the report stands for.
    pub code: i32,
}

impl RunReport {
    pub fn new(input: impl Into<String>, solver: impl Into<String>) -> Self {
        RunReport {
            input: input.into(),
            gamma: None,
            witness: None,
            solver: solver.into(),
            millis: 0,
            diagnostics: Map::new(),
            code: exit::OK,
        }
    }

    pub fn note(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.diagnostics.insert(key.to_string(), value.into());
        self
    }

    /// Attaches `gamma` and `witness` after checking the witness on `g`.
    pub fn certify(&mut self, g: &Graph, gamma: usize, witness: &VertexSequence) -> Result<(), CliError> {
        let legal = verify_sequence(g, witness)?.certificate();
        match legal {
            Some(cert) if witness.len() == gamma => {
                self.note("private_sizes", cert.private_sizes());
                self.gamma = Some(gamma);
                self.witness = Some(witness.as_slice().to_vec());
                Ok(())
            }
            _ => Err(CliError::new(exit::INTERNAL, format!("witness {witness:?} failed re-verification"))),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "input": self.input,
            "gamma": self.gamma,
            "witness": self.witness,
            "solver": self.solver,
            "millis": self.millis,
            "diagnostics": Value::Object(self.diagnostics.clone()),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("input: {}\nsolver: {}\n", self.input, self.solver);
        if let Some(g) = self.gamma {
            out.push_str(&format!("gamma: {g}\n"));
        }
        if let Some(w) = &self.witness {
            let w: Vec<String> = w.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("witness: {}\n", w.join(",")));
        }
        for (k, v) in &self.diagnostics {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{}: {}\n", k.replace('_', " "), shown));
        }
        out.push_str(&format!("millis: {}\n", self.millis));
        out
    }
}
