//! Versioned checkpoint files for resumable searches.
//!
//! A checkpoint records the instance parameters, the node counts banked so
//! far, the identifiers of completed task prefixes and the canonical forms
//! found. The task list itself is not stored: prefix enumeration is
//! deterministic and cheap, so resuming re-enumerates it and skips the
//! completed prefixes. Writes go through a temp file and an atomic rename.

use kgeo_core::{CanonicalForm, SearchParams, TaskPrefix};
use std::collections::BTreeSet;
use std::fs;
use std::io::Write as _;
use std::path::Path;
use thiserror::Error;

const MAGIC: &str = "kgeo checkpoint v1";

#[derive(Debug, Error)]
pub enum CheckpointError {
    #[error("checkpoint corrupt: {0}")]
    Corrupt(String),
    #[error("checkpoint was written for a different search instance")]
    ParamsMismatch,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Persistent search progress.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub d: usize,
    pub k: usize,
    pub epsilon: usize,
    pub require_diregular: bool,
    pub split_depth: usize,
    /// Nodes spent on prefix enumeration (recomputed identically on resume).
    pub prefix_nodes: u64,
    /// Nodes of completed tasks, banked across runs.
    pub task_nodes: u64,
    pub completed: BTreeSet<TaskPrefix>,
    pub forms: BTreeSet<CanonicalForm>,
}

impl Checkpoint {
    pub fn fresh(params: &SearchParams) -> Checkpoint {
        Checkpoint {
            d: params.d,
            k: params.k,
            epsilon: params.epsilon,
            require_diregular: params.require_diregular,
            split_depth: params.split_depth,
            prefix_nodes: 0,
            task_nodes: 0,
            completed: BTreeSet::new(),
            forms: BTreeSet::new(),
        }
    }

    pub fn matches(&self, params: &SearchParams) -> bool {
        self.d == params.d
            && self.k == params.k
            && self.epsilon == params.epsilon
            && self.require_diregular == params.require_diregular
            && self.split_depth == params.split_depth
    }

    pub fn render(&self) -> String {
        use std::fmt::Write as _;
        let mut s = String::new();
        let _ = writeln!(s, "{MAGIC}");
        let _ = writeln!(s, "d {}", self.d);
        let _ = writeln!(s, "k {}", self.k);
        let _ = writeln!(s, "epsilon {}", self.epsilon);
        let _ = writeln!(s, "diregular {}", self.require_diregular);
        let _ = writeln!(s, "split_depth {}", self.split_depth);
        let _ = writeln!(s, "prefix_nodes {}", self.prefix_nodes);
        let _ = writeln!(s, "task_nodes {}", self.task_nodes);
        for prefix in &self.completed {
            let _ = writeln!(s, "done {}", render_prefix(prefix));
        }
        for form in &self.forms {
            let _ = writeln!(s, "form {}", form.to_hex());
        }
        let _ = writeln!(s, "end");
        s
    }

    pub fn parse(text: &str) -> Result<Checkpoint, CheckpointError> {
        let corrupt = |why: &str| CheckpointError::Corrupt(why.to_string());
        let mut lines = text.lines();
        if lines.next() != Some(MAGIC) {
            return Err(corrupt("bad or missing header"));
        }
        let mut field = |name: &str| -> Result<String, CheckpointError> {
            let line = lines.next().ok_or_else(|| corrupt("truncated parameter block"))?;
            line.strip_prefix(name)
                .and_then(|rest| rest.strip_prefix(' '))
                .map(str::to_string)
                .ok_or_else(|| corrupt(&format!("expected `{name} ...`")))
        };
        let d = field("d")?.parse().map_err(|_| corrupt("d"))?;
        let k = field("k")?.parse().map_err(|_| corrupt("k"))?;
        let epsilon = field("epsilon")?.parse().map_err(|_| corrupt("epsilon"))?;
        let require_diregular = field("diregular")?.parse().map_err(|_| corrupt("diregular"))?;
        let split_depth = field("split_depth")?.parse().map_err(|_| corrupt("split_depth"))?;
        let prefix_nodes = field("prefix_nodes")?.parse().map_err(|_| corrupt("prefix_nodes"))?;
        let task_nodes = field("task_nodes")?.parse().map_err(|_| corrupt("task_nodes"))?;

        let mut completed = BTreeSet::new();
        let mut forms = BTreeSet::new();
        let mut ended = false;
        for line in lines {
            if ended {
                return Err(corrupt("content after end marker"));
            }
            if line == "end" {
                ended = true;
            } else if let Some(spec) = line.strip_prefix("done ") {
                completed.insert(parse_prefix(spec).ok_or_else(|| corrupt("done line"))?);
            } else if let Some(hex) = line.strip_prefix("form ") {
                forms.insert(CanonicalForm::from_hex(hex).ok_or_else(|| corrupt("form line"))?);
            } else {
                return Err(corrupt("unrecognized line"));
            }
        }
        if !ended {
            return Err(corrupt("missing end marker (interrupted write)"));
        }
        Ok(Checkpoint {
            d,
            k,
            epsilon,
            require_diregular,
            split_depth,
            prefix_nodes,
            task_nodes,
            completed,
            forms,
        })
    }

    pub fn load(path: &Path) -> Result<Checkpoint, CheckpointError> {
        let text = fs::read_to_string(path)?;
        Checkpoint::parse(&text)
    }

    /// Atomic write: temp file in the same directory, then rename.
    pub fn store(&self, path: &Path) -> Result<(), CheckpointError> {
        let name = path
            .file_name()
            .map(|f| f.to_string_lossy().to_string())
            .unwrap_or_else(|| "checkpoint".to_string());
        let tmp = path.with_file_name(format!(".{name}.tmp"));
        {
            let mut file = fs::File::create(&tmp)?;
            file.write_all(self.render().as_bytes())?;
            file.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

/// Empty prefixes render as `-` so every `done` line carries a token.
fn render_prefix(prefix: &TaskPrefix) -> String {
    if prefix.choices.is_empty() {
        return "-".to_string();
    }
    prefix
        .choices
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_prefix(spec: &str) -> Option<TaskPrefix> {
    if spec == "-" {
        return Some(TaskPrefix { choices: Vec::new() });
    }
    let choices: Option<Vec<usize>> = spec.split(',').map(|t| t.parse().ok()).collect();
    Some(TaskPrefix { choices: choices? })
}
