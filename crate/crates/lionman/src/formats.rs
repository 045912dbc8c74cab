//! JSON file formats for finite spaces and step paths, and the JSONL trace
//! format shared by the CLI and the service.

use lionman_core::disk::DiskPoint;
use lionman_core::finite::{FiniteError, FiniteSpace, PointId, StepPath, StepPathError};
use lionman_core::Sample;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::io::{self, Write};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("space file must give exactly one of \"leq\" and \"opens\"")]
    SpaceShape,
    #[error(transparent)]
    Space(#[from] FiniteError),
    #[error("unknown point {0:?}")]
    UnknownPoint(String),
    #[error(transparent)]
    StepPath(#[from] StepPathError),
    #[error("{0}")]
    Invalid(String),
}

/// `{"points": [...], "leq": [[x, y], ...]}` or `{"points": [...], "opens": [[...], ...]}`.
///
/// `leq` pairs generate the specialization preorder (`x <= y` iff `x` lies
/// in every open set containing `y`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<String>>>,
}

impl SpaceFile {
    pub fn build(&self) -> Result<FiniteSpace, FormatError> {
        match (&self.leq, &self.opens) {
            (Some(pairs), None) => Ok(FiniteSpace::from_relation(&self.points, pairs)?),
            (None, Some(opens)) => Ok(FiniteSpace::from_opens(&self.points, opens)?),
            _ => Err(FormatError::SpaceShape),
        }
    }

    /// The relation form, listing every non-reflexive pair.
    pub fn from_space(space: &FiniteSpace) -> Self {
        let leq = space
            .relation_pairs()
            .into_iter()
            .filter(|(x, y)| x != y)
            .map(|(x, y)| (space.name(x).to_string(), space.name(y).to_string()))
            .collect();
        SpaceFile { points: space.names().to_vec(), leq: Some(leq), opens: None }
    }
}

/// A step path with point names in place of indices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepPathFile {
    pub breakpoints: Vec<f64>,
    pub intervals: Vec<String>,
    pub instants: Vec<String>,
}

impl StepPathFile {
    pub fn from_path(space: &FiniteSpace, path: &StepPath) -> Self {
        let names = |ps: &[PointId]| ps.iter().map(|&p| space.name(p).to_string()).collect();
        StepPathFile {
            breakpoints: path.breakpoints().to_vec(),
            intervals: names(path.intervals()),
            instants: names(path.instants()),
        }
    }

    pub fn build(&self, space: &FiniteSpace) -> Result<StepPath, FormatError> {
        let ids = |ns: &[String]| -> Result<Vec<PointId>, FormatError> {
            ns.iter()
                .map(|n| space.id(n).ok_or_else(|| FormatError::UnknownPoint(n.clone())))
                .collect()
        };
        let path = StepPath::new(self.breakpoints.clone(), ids(&self.intervals)?, ids(&self.instants)?)?;
        path.validate(space)?;
        Ok(path)
    }
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, FormatError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    serde_json::from_str(&text).map_err(|source| FormatError::Json { path: path.display().to_string(), source })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), FormatError> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    std::fs::write(path, text).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

pub fn read_space(path: &Path) -> Result<FiniteSpace, FormatError> {
    read_json::<SpaceFile>(path)?.build()
}

/// How a point is written in a trace.
pub trait TracePoint {
    fn to_json(&self, ctx: &PointNames<'_>) -> Value;
}

/// Point names for finite spaces; disk points need none.
#[derive(Clone, Copy)]
pub struct PointNames<'a>(pub Option<&'a FiniteSpace>);

impl TracePoint for DiskPoint {
    fn to_json(&self, _: &PointNames<'_>) -> Value {
        serde_json::json!([self.x, self.y])
    }
}

impl TracePoint for PointId {
    fn to_json(&self, ctx: &PointNames<'_>) -> Value {
        match ctx.0 {
            Some(space) => Value::from(space.name(*self)),
            None => Value::from(self.0),
        }
    }
}

#[derive(Serialize)]
struct TraceLine {
    step: usize,
    t: f64,
    lion: Value,
    man: Value,
    dist: Option<f64>,
    captured: bool,
}

/// One JSONL line: `{"step", "t", "lion", "man", "dist", "captured"}`.
pub fn trace_line<P: TracePoint>(sample: &Sample<P>, names: &PointNames<'_>) -> String {
    let line = TraceLine {
        step: sample.step,
        t: sample.t,
        lion: sample.lion.to_json(names),
        man: sample.man.to_json(names),
        dist: sample.dist,
        captured: sample.captured,
    };
    serde_json::to_string(&line).expect("finite trace values")
}

pub fn write_trace<P: TracePoint, W: Write>(
    out: &mut W,
    samples: &[Sample<P>],
    names: &PointNames<'_>,
) -> io::Result<()> {
    for s in samples {
        writeln!(out, "{}", trace_line(s, names))?;
    }
    Ok(())
}

/// A disk point as `[x, y]`.
pub fn parse_disk_point(v: &Value) -> Option<DiskPoint> {
    let a = v.as_array()?;
    match a.as_slice() {
        [x, y] => Some(DiskPoint::new(x.as_f64()?, y.as_f64()?)),
        _ => None,
    }
}
