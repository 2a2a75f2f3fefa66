//! Tanner graphs, variable-induced subgraphs, and the peeling decoder.
//!
//! Peeling repeatedly resolves an erased variable through a dangling check
//! (an active check with exactly one active neighbor), folds the resolved bit
//! into the residual syndrome, and removes both nodes. It stops with either
//! an empty residual or the maximal stopping set covered by the erasure, on
//! which every active check has degree at least two.

use std::collections::VecDeque;

use thiserror::Error;

use crate::gf2::{BitMatrix, BitVector};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TannerError {
    #[error("vector length {actual} does not match {expected} {role}")]
    LengthMismatch {
        role: &'static str,
        expected: usize,
        actual: usize,
    },
}

/// Bipartite adjacency between variables (matrix columns) and checks (rows).
#[derive(Clone)]
pub struct TannerGraph {
    n_vars: usize,
    n_checks: usize,
    var_adj: Vec<Vec<u32>>,
    check_adj: Vec<Vec<u32>>,
}

impl TannerGraph {
    /// Builds the graph of a check matrix: variable `i` is adjacent to check
    /// `j` exactly where the matrix has a one at `(j, i)`.
    pub fn from_matrix(m: &BitMatrix) -> TannerGraph {
        let mut var_adj = vec![Vec::new(); m.cols()];
        let mut check_adj: Vec<Vec<u32>> = vec![Vec::new(); m.rows()];
        for (c, adj) in check_adj.iter_mut().enumerate() {
            for v in m.row(c).support() {
                var_adj[v].push(c as u32);
                adj.push(v as u32);
            }
        }
        TannerGraph {
            n_vars: m.cols(),
            n_checks: m.rows(),
            var_adj,
            check_adj,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn n_checks(&self) -> usize {
        self.n_checks
    }

    pub fn var_neighbors(&self, v: usize) -> &[u32] {
        &self.var_adj[v]
    }

    pub fn check_neighbors(&self, c: usize) -> &[u32] {
        &self.check_adj[c]
    }

    pub fn edge_count(&self) -> usize {
        self.var_adj.iter().map(Vec::len).sum()
    }

    /// Residual state for the subgraph induced by the erased variables and
    /// their checks, with a syndrome attached and nothing peeled yet.
    pub fn induced_subgraph(
        &self,
        syndrome: &BitVector,
        erasure: &BitVector,
    ) -> Result<ResidualState, TannerError> {
        if erasure.len() != self.n_vars {
            return Err(TannerError::LengthMismatch {
                role: "variables",
                expected: self.n_vars,
                actual: erasure.len(),
            });
        }
        if syndrome.len() != self.n_checks {
            return Err(TannerError::LengthMismatch {
                role: "checks",
                expected: self.n_checks,
                actual: syndrome.len(),
            });
        }
        let mut active_var = vec![false; self.n_vars];
        let mut degree = vec![0u32; self.n_checks];
        let mut active_var_count = 0;
        for v in erasure.support() {
            active_var[v] = true;
            active_var_count += 1;
            for &c in &self.var_adj[v] {
                degree[c as usize] += 1;
            }
        }
        let active_check: Vec<bool> = degree.iter().map(|&d| d > 0).collect();
        Ok(ResidualState {
            active_var,
            active_check,
            active_var_count,
            degree,
            residual_syndrome: syndrome.clone(),
            partial_solution: BitVector::zeros(self.n_vars),
        })
    }

    /// Runs the peeling decoder with the default FIFO schedule.
    pub fn peel(
        &self,
        syndrome: &BitVector,
        erasure: &BitVector,
    ) -> Result<ResidualState, TannerError> {
        self.peel_with_schedule(syndrome, erasure, Schedule::Fifo)
    }

    /// Peeling with an explicit dangling-check schedule. The final stopping
    /// set is schedule-independent; the assignment on the peeled part is
    /// deterministic per schedule.
    pub fn peel_with_schedule(
        &self,
        syndrome: &BitVector,
        erasure: &BitVector,
        schedule: Schedule,
    ) -> Result<ResidualState, TannerError> {
        let mut state = self.induced_subgraph(syndrome, erasure)?;
        let mut queue: VecDeque<u32> = (0..self.n_checks as u32)
            .filter(|&c| state.degree[c as usize] == 1)
            .collect();
        while let Some(c) = match schedule {
            Schedule::Fifo => queue.pop_front(),
            Schedule::Lifo => queue.pop_back(),
        } {
            let c = c as usize;
            if !state.active_check[c] || state.degree[c] != 1 {
                continue;
            }
            let v = *self.check_adj[c]
                .iter()
                .find(|&&v| state.active_var[v as usize])
                .expect("dangling check has an active neighbor") as usize;
            let value = state.residual_syndrome.get(c);
            state.partial_solution.set(v, value);
            if value {
                for &k in &self.var_adj[v] {
                    let k = k as usize;
                    let bit = state.residual_syndrome.get(k);
                    state.residual_syndrome.set(k, !bit);
                }
            }
            state.active_var[v] = false;
            state.active_var_count -= 1;
            for &k in &self.var_adj[v] {
                let k = k as usize;
                if !state.active_check[k] {
                    continue;
                }
                state.degree[k] -= 1;
                match state.degree[k] {
                    0 => state.active_check[k] = false,
                    1 => queue.push_back(k as u32),
                    _ => {}
                }
            }
        }
        debug_assert!(state.stopping_set_violations(self) == 0);
        Ok(state)
    }
}

/// Order in which dangling checks are consumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schedule {
    Fifo,
    Lifo,
}

/// Live subgraph, residual syndrome, and partial solution during and after
/// peeling. Vectors keep full-length indexing with activity masks so later
/// stages can use original variable and check indices directly.
#[derive(Clone)]
pub struct ResidualState {
    active_var: Vec<bool>,
    active_check: Vec<bool>,
    active_var_count: usize,
    degree: Vec<u32>,
    residual_syndrome: BitVector,
    partial_solution: BitVector,
}

impl ResidualState {
    pub fn is_empty(&self) -> bool {
        self.active_var_count == 0
    }

    pub fn is_var_active(&self, v: usize) -> bool {
        self.active_var[v]
    }

    pub fn is_check_active(&self, c: usize) -> bool {
        self.active_check[c]
    }

    pub fn active_vars(&self) -> Vec<usize> {
        (0..self.active_var.len()).filter(|&v| self.active_var[v]).collect()
    }

    pub fn active_checks(&self) -> Vec<usize> {
        (0..self.active_check.len()).filter(|&c| self.active_check[c]).collect()
    }

    pub fn active_var_count(&self) -> usize {
        self.active_var_count
    }

    /// Number of active neighbors of check `c`; zero for inactive checks.
    pub fn check_degree(&self, c: usize) -> u32 {
        self.degree[c]
    }

    pub fn residual_syndrome(&self) -> &BitVector {
        &self.residual_syndrome
    }

    /// Assignment accumulated on peeled variables; supported outside the
    /// active set.
    pub fn partial_solution(&self) -> &BitVector {
        &self.partial_solution
    }

    /// True iff the residual syndrome is zero on every check without active
    /// neighbors. Syndromes produced by an error supported on the erasure
    /// always satisfy this; a violation means the input syndrome is
    /// inconsistent with the erasure pattern.
    pub fn inactive_checks_clear(&self) -> bool {
        (0..self.active_check.len())
            .all(|c| self.active_check[c] || !self.residual_syndrome.get(c))
    }

    /// Counts active checks of degree one, recomputing degrees from scratch.
    /// Zero after peeling terminates (the stopping-set property).
    pub fn stopping_set_violations(&self, graph: &TannerGraph) -> usize {
        (0..self.active_check.len())
            .filter(|&c| {
                let degree = graph
                    .check_neighbors(c)
                    .iter()
                    .filter(|&&v| self.active_var[v as usize])
                    .count();
                self.active_check[c] && degree == 1
            })
            .count()
    }
}
