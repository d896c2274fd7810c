//! Multi-threaded Hamiltonian cycle counting over a fixed split of the
//! search tree. Results are merged in task order, so counts, node totals
//! and retained cycles do not depend on the number of workers.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use quartic_core::hamilton::search::{Engine, Limits, Mode, Outcome, Task};
use quartic_core::hamilton::{cycles_from_solutions, prepare, CountEngine, HamiltonError, HamiltonReport};
use quartic_core::{EdgeRef, MultiGraph};

#[derive(Debug, Clone, Copy)]
pub struct ParallelOptions {
    pub workers: usize,
    /// Depth of the split; fixed so the task list is the same for any
    /// worker count.
    pub split_depth: usize,
    /// Node budget applied to each task separately.
    pub max_nodes_per_task: Option<u64>,
    pub retain: bool,
}

impl Default for ParallelOptions {
    fn default() -> Self {
        ParallelOptions { workers: 1, split_depth: 10, max_nodes_per_task: None, retain: false }
    }
}

pub fn count_parallel(g: &MultiGraph, forced: &[EdgeRef], opts: &ParallelOptions) -> Result<HamiltonReport, HamiltonError> {
    let start = Instant::now();
    let (idx, root) = prepare(g, forced)?;
    let mut total = Outcome::default();
    if let Some(root) = root {
        let (tasks, above) = Engine::split(&idx, Mode::Hamiltonian, root, opts.split_depth);
        total.nodes = above;
        let limits = Limits { max_nodes: opts.max_nodes_per_task, stop_after: None, retain: opts.retain };
        let results: Vec<Mutex<Option<Outcome>>> = tasks.iter().map(|_| Mutex::new(None)).collect();
        let next = AtomicUsize::new(0);
        let workers = opts.workers.max(1).min(tasks.len().max(1));
        std::thread::scope(|s| {
            for _ in 0..workers {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(task) = tasks.get(i) else { break };
                    let out = match task {
                        Task::Open(state) => Engine::new(&idx, Mode::Hamiltonian, limits).run(state.clone()),
                        Task::Solved(sol) => Outcome {
                            count: 1,
                            solutions: if opts.retain { vec![sol.clone()] } else { Vec::new() },
                            ..Default::default()
                        },
                    };
                    *results[i].lock().unwrap() = Some(out);
                });
            }
        });
        for r in results {
            total.absorb(r.into_inner().unwrap().expect("every task ran"));
        }
    }
    Ok(HamiltonReport {
        count: total.count as u128,
        cycles: opts.retain.then(|| cycles_from_solutions(&idx, &total.solutions)),
        nodes_expanded: total.nodes,
        budget_exhausted: total.exhausted,
        engine: CountEngine::Backtrack,
        elapsed: Some(start.elapsed()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use quartic_core::constructions::catalog;
    use quartic_core::hamilton::{count_hamiltonian_cycles, CountOptions};

    #[test]
    fn matches_sequential() {
        let g = catalog::complete(8);
        let seq = count_hamiltonian_cycles(&g, &CountOptions { retain: true, ..Default::default() });
        for workers in [1, 3, 8] {
            let opts = ParallelOptions { workers, split_depth: 4, retain: true, ..Default::default() };
            let par = count_parallel(&g, &[], &opts).unwrap();
            assert_eq!(par.count, seq.count);
            assert_eq!(par.nodes_expanded, seq.nodes_expanded);
            assert_eq!(par.cycles, seq.cycles);
        }
    }
}
