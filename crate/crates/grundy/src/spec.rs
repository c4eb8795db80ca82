//! Main factor descriptors such as `cycle-power:n=6,m=1` or `split:g.gr`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use grundy_core::{Graph, StructuredKind};

use crate::format::{read_graph_file, ParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MainFactorSpec {
    Structured(StructuredKind),
    /// A split graph read from a file.
    Split(PathBuf),
    /// Any graph read from a file.
    File(PathBuf),
}

impl MainFactorSpec {
    pub fn graph(&self) -> Result<Graph, ParseError> {
        match self {
            MainFactorSpec::Structured(k) => k.build().map_err(|e| ParseError { line: 0, message: e.to_string() }),
            MainFactorSpec::Split(p) | MainFactorSpec::File(p) => read_graph_file(p),
        }
    }
}

fn params(body: &str) -> Result<(Option<usize>, Option<usize>), ParseError> {
    let (mut n, mut m) = (None, None);
    for kv in body.split(',').filter(|s| !s.is_empty()) {
        let (k, v) = kv.split_once('=').ok_or_else(|| err(format!("expected key=value, got '{kv}'")))?;
        let v: usize = v.trim().parse().map_err(|_| err(format!("bad value in '{kv}'")))?;
        match k.trim() {
            "n" => n = Some(v),
            "m" => m = Some(v),
            other => return Err(err(format!("unknown parameter '{other}'"))),
        }
    }
    Ok((n, m))
}

fn err(message: String) -> ParseError {
    ParseError { line: 0, message }
}

impl FromStr for MainFactorSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, body) = s.split_once(':').ok_or_else(|| err(format!("expected kind:..., got '{s}'")))?;
        match kind {
            "split" => return Ok(MainFactorSpec::Split(PathBuf::from(body))),
            "file" => return Ok(MainFactorSpec::File(PathBuf::from(body))),
            _ => {}
        }
        let (n, m) = params(body)?;
        let n = n.ok_or_else(|| err(format!("{kind} needs n")))?;
        let need_m = || m.ok_or_else(|| err(format!("{kind} needs m")));
        let no_m = |k: StructuredKind| match m {
            Some(_) => Err(err(format!("{kind} takes no m"))),
            None => Ok(k),
        };
        let spec = match kind {
            "cycle-power" => StructuredKind::CyclePower { n, m: need_m()? },
            "path-power" => StructuredKind::PathPower { n, m: need_m()? },
            "complete" => no_m(StructuredKind::Complete { n })?,
            "edgeless" => no_m(StructuredKind::Edgeless { n })?,
            "co-path" => no_m(StructuredKind::CoPath { n })?,
            "co-cycle" => no_m(StructuredKind::CoCycle { n })?,
            other => return Err(err(format!("unknown main factor kind '{other}'"))),
        };
        spec.validate().map_err(|e| err(e.to_string()))?;
        Ok(MainFactorSpec::Structured(spec))
    }
}

impl fmt::Display for MainFactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MainFactorSpec::Split(p) => write!(f, "split:{}", p.display()),
            MainFactorSpec::File(p) => write!(f, "file:{}", p.display()),
            MainFactorSpec::Structured(k) => match *k {
                StructuredKind::CyclePower { n, m } => write!(f, "cycle-power:n={n},m={m}"),
                StructuredKind::PathPower { n, m } => write!(f, "path-power:n={n},m={m}"),
                StructuredKind::Complete { n } => write!(f, "complete:n={n}"),
                StructuredKind::Edgeless { n } => write!(f, "edgeless:n={n}"),
                StructuredKind::CoPath { n } => write!(f, "co-path:n={n}"),
                StructuredKind::CoCycle { n } => write!(f, "co-cycle:n={n}"),
            },
        }
    }
}
