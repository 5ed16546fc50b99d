//! Parallel search driver: splits the tree at `split_depth` into independent
//! tasks, runs them on a worker pool with shared node/wall-clock budgets, and
//! merges canonical forms deterministically. With a checkpoint path, progress
//! is persisted after completed tasks and completed subtrees are skipped on
//! resume.
//!
//! Tasks own private `PartialDigraph` state and never share mutable data;
//! the merge is a set union of canonical forms, so results and (for runs
//! that complete) node counts are identical for every worker count and
//! split depth.

use crate::checkpoint::{Checkpoint, CheckpointError};
use kgeo_core::search::{assemble_outcome, enumerate_prefixes, run_prefix};
use kgeo_core::{CanonicalForm, SearchControl, SearchError, SearchOutcome, SearchParams};
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::{mpsc, Mutex};
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RunnerError {
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Checkpoint(#[from] CheckpointError),
}

#[derive(Debug, Clone)]
pub struct RunnerConfig {
    /// Worker threads (at least 1).
    pub jobs: usize,
    /// Minimum interval between periodic checkpoint writes; the final state
    /// is always written.
    pub checkpoint_interval: Duration,
}

impl Default for RunnerConfig {
    fn default() -> Self {
        RunnerConfig { jobs: 1, checkpoint_interval: Duration::from_secs(2) }
    }
}

struct TaskReport {
    index: usize,
    forms: Vec<CanonicalForm>,
    nodes: u64,
    complete: bool,
}

/// Runs the search described by `params` (including its budgets and
/// checkpoint path) across `config.jobs` workers.
pub fn run_search(
    params: &SearchParams,
    config: &RunnerConfig,
) -> Result<SearchOutcome, RunnerError> {
    params.validate()?;
    let started = Instant::now();
    let checkpoint_path: Option<PathBuf> = params.checkpoint_path.as_ref().map(PathBuf::from);

    let mut state = match &checkpoint_path {
        Some(path) if path.exists() => {
            let loaded = Checkpoint::load(path)?;
            if !loaded.matches(params) {
                return Err(CheckpointError::ParamsMismatch.into());
            }
            loaded
        }
        _ => Checkpoint::fresh(params),
    };

    // Prefix enumeration is deterministic and unbudgeted so the task list is
    // identical across runs and resumes; budgets apply to the task subtrees.
    let mut enum_ctl = SearchControl::new(None);
    let enumeration = enumerate_prefixes(params, &mut enum_ctl)?;
    state.prefix_nodes = enumeration.nodes;
    let tasks = enumeration.prefixes;
    let done_before = state.completed.clone();
    let prev_task_nodes = state.task_nodes;

    let deadline = params.time_budget_secs.map(|s| started + Duration::from_secs(s));
    let node_budget = params.max_nodes;
    let banked_nodes = state.prefix_nodes + prev_task_nodes;

    let next_task = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let live_nodes = AtomicU64::new(0);
    let engine_error: Mutex<Option<SearchError>> = Mutex::new(None);
    let (tx, rx) = mpsc::channel::<TaskReport>();

    let mut run_truncated = false;
    std::thread::scope(|scope| -> Result<(), RunnerError> {
        for _ in 0..config.jobs.max(1) {
            let tx = tx.clone();
            let next_task = &next_task;
            let stop = &stop;
            let live_nodes = &live_nodes;
            let tasks = &tasks;
            let done_before = &done_before;
            let engine_error = &engine_error;
            scope.spawn(move || {
                loop {
                    if stop.load(Ordering::Relaxed) {
                        break;
                    }
                    let index = next_task.fetch_add(1, Ordering::Relaxed);
                    if index >= tasks.len() {
                        break;
                    }
                    if done_before.contains(&tasks[index]) {
                        continue;
                    }
                    let mut since_clock = 0u32;
                    let mut hook = || {
                        let total = banked_nodes + live_nodes.fetch_add(1, Ordering::Relaxed) + 1;
                        if let Some(max) = node_budget {
                            if total > max {
                                stop.store(true, Ordering::Relaxed);
                            }
                        }
                        since_clock += 1;
                        if since_clock >= 1024 {
                            since_clock = 0;
                            if let Some(deadline) = deadline {
                                if Instant::now() >= deadline {
                                    stop.store(true, Ordering::Relaxed);
                                }
                            }
                        }
                        stop.load(Ordering::Relaxed)
                    };
                    let mut ctl = SearchControl::with_hook(None, &mut hook);
                    match run_prefix(params, &tasks[index], &mut ctl) {
                        Ok(sub) => {
                            let forms =
                                sub.leaves.iter().map(kgeo_core::canonical_form).collect();
                            let _ = tx.send(TaskReport {
                                index,
                                forms,
                                nodes: sub.nodes,
                                complete: sub.complete,
                            });
                        }
                        Err(err) => {
                            *engine_error.lock().unwrap() = Some(err);
                            stop.store(true, Ordering::Relaxed);
                            break;
                        }
                    }
                }
            });
        }
        drop(tx);

        let mut last_write = Instant::now();
        for report in rx.iter() {
            if report.complete {
                state.task_nodes += report.nodes;
                state.forms.extend(report.forms);
                state.completed.insert(tasks[report.index].clone());
                if let Some(path) = &checkpoint_path {
                    if last_write.elapsed() >= config.checkpoint_interval {
                        state.store(path)?;
                        last_write = Instant::now();
                    }
                }
            } else {
                // Sound partial findings still surface in the outcome, but
                // the task is not banked, so a resume redoes it.
                state.forms.extend(report.forms);
                run_truncated = true;
            }
        }
        Ok(())
    })?;

    if let Some(err) = engine_error.into_inner().unwrap() {
        return Err(err.into());
    }

    let all_done = tasks.iter().all(|t| state.completed.contains(t));
    let complete = enumeration.complete && !run_truncated && all_done;

    if let Some(path) = &checkpoint_path {
        state.store(path)?;
    }

    // Nodes spent on tasks that did not complete are work performed this run
    // but stay out of the banked count the checkpoint carries forward.
    let completed_this_run = state.task_nodes - prev_task_nodes;
    let unbanked = live_nodes.load(Ordering::Relaxed).saturating_sub(completed_this_run);
    let total_nodes = state.prefix_nodes + state.task_nodes + unbanked;

    let mut outcome = assemble_outcome(params.clone(), state.forms.clone(), total_nodes, complete);
    outcome.duration_ms = Some(started.elapsed().as_millis() as u64);
    Ok(outcome)
}
