//! Cluster decomposition of residual Tanner graphs.
//!
//! After peeling stalls, the residual graph is split into its biconnected
//! components ("clusters") glued at articulation points ("cut nodes"),
//! forming a forest that alternates cluster and cut-node levels with clusters
//! at the leaves. Each cluster is a small GF(2) system solved by elimination;
//! a bottom-up pass computes per-cluster solutions under cut-node constraints
//! and a top-down pass selects a globally consistent combination, which then
//! merges into a solution of the whole residual syndrome.
//!
//! Cut-node consistency works two ways: a shared variable must take the same
//! value in every cluster containing it, while a shared check needs the
//! per-cluster syndrome contributions to sum to its residual syndrome bit.
//! A cluster is `free` toward its parent when both pin values admit a
//! solution and `frozen` when only one does.

use thiserror::Error;

use crate::gf2::{BitMatrix, BitVector};
use crate::tanner::{ResidualState, TannerGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClusterError {
    #[error("syndrome is inconsistent with the residual erasure pattern")]
    InconsistentSyndrome,
}

/// Node of a residual graph: a variable or a check, with its original index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeKind {
    Var(usize),
    Check(usize),
}

/// Undirected simple graph over tagged nodes. Loops and multi-edges are
/// rejected.
#[derive(Clone)]
pub struct SimpleGraph {
    kinds: Vec<NodeKind>,
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

impl SimpleGraph {
    pub fn new() -> Self {
        Self {
            kinds: Vec::new(),
            adj: Vec::new(),
            edge_count: 0,
        }
    }

    /// Graph on `n` nodes with placeholder tags, for plain graph algorithms.
    pub fn untagged(n: usize) -> Self {
        Self {
            kinds: (0..n).map(NodeKind::Var).collect(),
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn add_node(&mut self, kind: NodeKind) -> usize {
        self.kinds.push(kind);
        self.adj.push(Vec::new());
        self.kinds.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "loops are not allowed");
        debug_assert!(!self.adj[a].contains(&(b as u32)), "multi-edge {a}-{b}");
        self.adj[a].push(b as u32);
        self.adj[b].push(a as u32);
        self.edge_count += 1;
    }

    pub fn len(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kinds.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn kind(&self, node: usize) -> NodeKind {
        self.kinds[node]
    }

    pub fn neighbors(&self, node: usize) -> &[u32] {
        &self.adj[node]
    }
}

impl Default for SimpleGraph {
    fn default() -> Self {
        Self::new()
    }
}

/// Output of [`biconnected_components`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Node sets of the maximal biconnected components, each sorted
    /// ascending. Isolated nodes belong to no component.
    pub components: Vec<Vec<u32>>,
    /// Articulation points, sorted ascending.
    pub articulation_points: Vec<u32>,
}

const UNSET: u32 = u32::MAX;

/// Depth-first biconnectivity decomposition in `O(|V| + |E|)`: a node is an
/// articulation point when some DFS subtree below it has no back edge past
/// it, and the edge stack popped at that moment spans one component.
pub fn biconnected_components(g: &SimpleGraph) -> Decomposition {
    let n = g.len();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut parent = vec![UNSET; n];
    let mut next_edge = vec![0usize; n];
    let mut is_articulation = vec![false; n];
    let mut edge_stack: Vec<(u32, u32)> = Vec::new();
    let mut components: Vec<Vec<u32>> = Vec::new();
    let mut timer = 0u32;
    let mut dfs_stack: Vec<u32> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSET || g.adj[root].is_empty() {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0usize;
        dfs_stack.push(root as u32);
        while let Some(&u) = dfs_stack.last() {
            let u = u as usize;
            if let Some(&v) = g.adj[u].get(next_edge[u]) {
                next_edge[u] += 1;
                let v = v as usize;
                if disc[v] == UNSET {
                    parent[v] = u as u32;
                    edge_stack.push((u as u32, v as u32));
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    dfs_stack.push(v as u32);
                } else if v as u32 != parent[u] && disc[v] < disc[u] {
                    edge_stack.push((u as u32, v as u32));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                dfs_stack.pop();
                let p = parent[u];
                if p == UNSET {
                    continue;
                }
                let p = p as usize;
                low[p] = low[p].min(low[u]);
                if low[u] >= disc[p] {
                    if p != root {
                        is_articulation[p] = true;
                    }
                    let mut nodes = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        nodes.push(e.0);
                        nodes.push(e.1);
                        if e == (p as u32, u as u32) {
                            break;
                        }
                    }
                    nodes.sort_unstable();
                    nodes.dedup();
                    components.push(nodes);
                }
            }
        }
        if root_children > 1 {
            is_articulation[root] = true;
        }
    }
    let articulation_points = (0..n as u32).filter(|&v| is_articulation[v as usize]).collect();
    Decomposition {
        components,
        articulation_points,
    }
}

/// Whether a cluster (or cut node) admits both pin values or exactly one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    Free,
    Frozen(bool),
}

/// A biconnected component of the residual graph, listed by original
/// variable/check indices. The cluster size is its variable count.
#[derive(Clone, Debug)]
pub struct Cluster {
    pub vars: Vec<usize>,
    pub checks: Vec<usize>,
    /// All cut nodes contained in this cluster.
    pub cuts: Vec<usize>,
    pub parent_cut: Option<usize>,
    pub child_cuts: Vec<usize>,
    /// Solutions over `vars` (local coordinates) indexed by pin value. The
    /// root keeps its single solution in slot 0.
    solutions: [Option<BitVector>; 2],
    label: Option<Label>,
    selected: Option<BitVector>,
}

impl Cluster {
    pub fn size(&self) -> usize {
        self.vars.len()
    }

    pub fn label(&self) -> Option<Label> {
        self.label
    }

    pub fn solution(&self, pin: bool) -> Option<&BitVector> {
        self.solutions[pin as usize].as_ref()
    }

    pub fn selected(&self) -> Option<&BitVector> {
        self.selected.as_ref()
    }

    fn local_index(&self, var: usize) -> Option<usize> {
        self.vars.binary_search(&var).ok()
    }
}

/// An articulation point of the residual graph, shared between clusters.
#[derive(Clone, Debug)]
pub struct CutNode {
    pub kind: NodeKind,
    /// Adjacent clusters, ascending by cluster id.
    pub clusters: Vec<usize>,
    pub parent_cluster: Option<usize>,
    pub child_clusters: Vec<usize>,
    label: Option<Label>,
}

impl CutNode {
    pub fn label(&self) -> Option<Label> {
        self.label
    }
}

/// A frozen-value requirement on a cut node, fed into a cluster solve.
#[derive(Clone, Copy, Debug)]
pub struct Constraint {
    pub cut: usize,
    pub value: bool,
}

/// Block-cut forest of a residual graph, plus per-cluster solution state.
pub struct ClusterForest {
    clusters: Vec<Cluster>,
    cut_nodes: Vec<CutNode>,
    roots: Vec<usize>,
    n_vars: usize,
}

/// Result of [`cluster_postprocess`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PostOutcome {
    /// A vector supported on the residual variables matching the residual
    /// syndrome on every check.
    Solved {
        solution: BitVector,
        cluster_sizes: Vec<usize>,
    },
    /// Some cluster exceeded the size bound; decoding is abandoned before
    /// any elimination.
    Oversize { cluster_sizes: Vec<usize> },
}

impl ClusterForest {
    /// Decomposes the residual graph: one cluster per biconnected component,
    /// one cut node per articulation point, connected by containment.
    /// Erased variables with no checks become singleton clusters. The forest
    /// is unrooted; call [`root`](Self::root) before solving.
    pub fn build(residual: &ResidualState, graph: &TannerGraph) -> ClusterForest {
        let mut simple = SimpleGraph::new();
        let mut var_node = vec![UNSET; graph.n_vars()];
        let mut check_node = vec![UNSET; graph.n_checks()];
        for v in residual.active_vars() {
            var_node[v] = simple.add_node(NodeKind::Var(v)) as u32;
        }
        for c in residual.active_checks() {
            check_node[c] = simple.add_node(NodeKind::Check(c)) as u32;
        }
        for v in residual.active_vars() {
            for &c in graph.var_neighbors(v) {
                simple.add_edge(var_node[v] as usize, check_node[c as usize] as usize);
            }
        }

        let decomposition = biconnected_components(&simple);
        let mut clusters: Vec<Cluster> = decomposition
            .components
            .iter()
            .map(|nodes| {
                let mut vars = Vec::new();
                let mut checks = Vec::new();
                for &node in nodes {
                    match simple.kind(node as usize) {
                        NodeKind::Var(v) => vars.push(v),
                        NodeKind::Check(c) => checks.push(c),
                    }
                }
                vars.sort_unstable();
                checks.sort_unstable();
                Cluster {
                    vars,
                    checks,
                    cuts: Vec::new(),
                    parent_cut: None,
                    child_cuts: Vec::new(),
                    solutions: [None, None],
                    label: None,
                    selected: None,
                }
            })
            .collect();
        // Variables with no active checks are not reached by the edge-based
        // decomposition; they form free singleton clusters.
        for v in residual.active_vars() {
            if graph.var_neighbors(v).is_empty() {
                clusters.push(Cluster {
                    vars: vec![v],
                    checks: Vec::new(),
                    cuts: Vec::new(),
                    parent_cut: None,
                    child_cuts: Vec::new(),
                    solutions: [None, None],
                    label: None,
                    selected: None,
                });
            }
        }

        let mut cut_nodes = Vec::new();
        for &node in &decomposition.articulation_points {
            let kind = simple.kind(node as usize);
            let (var_index, check_index) = match kind {
                NodeKind::Var(v) => (Some(v), None),
                NodeKind::Check(c) => (None, Some(c)),
            };
            let cut_id = cut_nodes.len();
            let mut adjacent = Vec::new();
            for (cluster_id, cluster) in clusters.iter_mut().enumerate() {
                let contains = match (var_index, check_index) {
                    (Some(v), _) => cluster.vars.binary_search(&v).is_ok(),
                    (_, Some(c)) => cluster.checks.binary_search(&c).is_ok(),
                    _ => unreachable!(),
                };
                if contains {
                    adjacent.push(cluster_id);
                    cluster.cuts.push(cut_id);
                }
            }
            debug_assert!(adjacent.len() >= 2, "cut node must join clusters");
            cut_nodes.push(CutNode {
                kind,
                clusters: adjacent,
                parent_cluster: None,
                child_clusters: Vec::new(),
                label: None,
            });
        }

        ClusterForest {
            clusters,
            cut_nodes,
            roots: Vec::new(),
            n_vars: graph.n_vars(),
        }
    }

    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn cut_nodes(&self) -> &[CutNode] {
        &self.cut_nodes
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn cluster_sizes(&self) -> Vec<usize> {
        self.clusters.iter().map(Cluster::size).collect()
    }

    pub fn max_cluster_size(&self) -> usize {
        self.cluster_sizes().into_iter().max().unwrap_or(0)
    }

    /// Roots every tree at its cluster with the most variables (ties to the
    /// lowest cluster id) and orients all parent/child relations.
    pub fn root(&mut self) {
        self.roots.clear();
        let mut visited = vec![false; self.clusters.len()];
        for start in 0..self.clusters.len() {
            if visited[start] {
                continue;
            }
            // Collect the tree containing `start`.
            let mut tree = vec![start];
            visited[start] = true;
            let mut queue = vec![start];
            while let Some(b) = queue.pop() {
                for &cut in &self.clusters[b].cuts {
                    for &b2 in &self.cut_nodes[cut].clusters {
                        if !visited[b2] {
                            visited[b2] = true;
                            tree.push(b2);
                            queue.push(b2);
                        }
                    }
                }
            }
            tree.sort_unstable();
            let root = tree
                .iter()
                .copied()
                .max_by(|&a, &b| {
                    self.clusters[a]
                        .size()
                        .cmp(&self.clusters[b].size())
                        .then(b.cmp(&a))
                })
                .expect("tree is nonempty");
            self.roots.push(root);
            // Orient away from the root.
            let mut queue = vec![(root, None::<usize>)];
            while let Some((b, parent_cut)) = queue.pop() {
                self.clusters[b].parent_cut = parent_cut;
                let child_cuts: Vec<usize> = self.clusters[b]
                    .cuts
                    .iter()
                    .copied()
                    .filter(|&c| Some(c) != parent_cut)
                    .collect();
                self.clusters[b].child_cuts = child_cuts.clone();
                for cut in child_cuts {
                    self.cut_nodes[cut].parent_cluster = Some(b);
                    let children: Vec<usize> = self.cut_nodes[cut]
                        .clusters
                        .iter()
                        .copied()
                        .filter(|&b2| b2 != b)
                        .collect();
                    self.cut_nodes[cut].child_clusters = children.clone();
                    for b2 in children {
                        queue.push((b2, Some(cut)));
                    }
                }
            }
        }
        self.roots.sort_unstable();
    }

    /// Solves the local system of one cluster: one equation per internal
    /// check against the residual syndrome, one per frozen constraint, plus
    /// the optional parent pin (a value for a variable cut, a contribution
    /// parity for a check cut). Returns a solution in local coordinates over
    /// the cluster's variables, or `None` when inconsistent.
    pub fn solve_cluster(
        &self,
        cluster_id: usize,
        constraints: &[Constraint],
        pin: Option<(usize, bool)>,
        syndrome: &BitVector,
        graph: &TannerGraph,
    ) -> Option<BitVector> {
        let cluster = &self.clusters[cluster_id];
        let width = cluster.vars.len();
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut rhs: Vec<bool> = Vec::new();

        let cut_row = |cut: usize| -> Vec<usize> {
            match self.cut_nodes[cut].kind {
                NodeKind::Var(v) => vec![cluster.local_index(v).expect("cut variable in cluster")],
                NodeKind::Check(c) => graph
                    .check_neighbors(c)
                    .iter()
                    .filter_map(|&v| cluster.local_index(v as usize))
                    .collect(),
            }
        };

        let is_cut_check =
            |c: usize| -> bool { cluster.cuts.iter().any(|&cut| self.cut_nodes[cut].kind == NodeKind::Check(c)) };
        for &c in &cluster.checks {
            if is_cut_check(c) {
                continue;
            }
            rows.push(
                graph
                    .check_neighbors(c)
                    .iter()
                    .filter_map(|&v| cluster.local_index(v as usize))
                    .collect(),
            );
            rhs.push(syndrome.get(c));
        }
        for constraint in constraints {
            rows.push(cut_row(constraint.cut));
            rhs.push(constraint.value);
        }
        if let Some((cut, value)) = pin {
            rows.push(cut_row(cut));
            rhs.push(value);
        }

        let mut matrix = BitMatrix::zeros(rows.len(), width);
        let mut target = BitVector::zeros(rows.len());
        for (r, row) in rows.iter().enumerate() {
            for &j in row {
                // A check may touch the same local variable once only; the
                // adjacency lists carry no duplicates.
                matrix.set(r, j, true);
            }
            if rhs[r] {
                target.set(r, true);
            }
        }
        let support: Vec<usize> = (0..width).collect();
        matrix
            .solve_restricted(&target, &support)
            .expect("local system dimensions are consistent")
    }

    /// Bottom-up pass: computes pinned solutions for every cluster, labeling
    /// clusters and cut nodes free or frozen. Fails with
    /// [`ClusterError::InconsistentSyndrome`] when some cluster admits no
    /// solution, which cannot happen for syndromes generated by an error
    /// supported on the erasure.
    pub fn compute_solutions(
        &mut self,
        syndrome: &BitVector,
        graph: &TannerGraph,
    ) -> Result<(), ClusterError> {
        assert!(
            self.clusters.is_empty() || !self.roots.is_empty(),
            "forest must be rooted before solving"
        );
        for root in self.roots.clone() {
            for b in self.post_order(root) {
                let constraints = self.summarize_child_cuts(b, syndrome)?;
                let parent = self.clusters[b].parent_cut;
                match parent {
                    None => {
                        let solution = self
                            .solve_cluster(b, &constraints, None, syndrome, graph)
                            .ok_or(ClusterError::InconsistentSyndrome)?;
                        self.clusters[b].solutions = [Some(solution), None];
                        self.clusters[b].label = None;
                    }
                    Some(cut) => {
                        let low = self.solve_cluster(b, &constraints, Some((cut, false)), syndrome, graph);
                        let high = self.solve_cluster(b, &constraints, Some((cut, true)), syndrome, graph);
                        self.clusters[b].label = Some(match (&low, &high) {
                            (Some(_), Some(_)) => Label::Free,
                            (Some(_), None) => Label::Frozen(false),
                            (None, Some(_)) => Label::Frozen(true),
                            (None, None) => return Err(ClusterError::InconsistentSyndrome),
                        });
                        self.clusters[b].solutions = [low, high];
                    }
                }
            }
        }
        Ok(())
    }

    /// Clusters of the tree under `root`, children before parents.
    fn post_order(&self, root: usize) -> Vec<usize> {
        let mut order = Vec::new();
        let mut stack = vec![root];
        while let Some(b) = stack.pop() {
            order.push(b);
            for &cut in &self.clusters[b].child_cuts {
                stack.extend(self.cut_nodes[cut].child_clusters.iter().copied());
            }
        }
        order.reverse();
        order
    }

    /// Labels the child cut nodes of `b` from their already-computed child
    /// clusters and returns the frozen constraints `b` must honor.
    fn summarize_child_cuts(
        &mut self,
        b: usize,
        syndrome: &BitVector,
    ) -> Result<Vec<Constraint>, ClusterError> {
        let mut constraints = Vec::new();
        for cut in self.clusters[b].child_cuts.clone() {
            let children = self.cut_nodes[cut].child_clusters.clone();
            let frozen: Vec<bool> = children
                .iter()
                .filter_map(|&b2| match self.clusters[b2].label {
                    Some(Label::Frozen(pin)) => Some(pin),
                    _ => None,
                })
                .collect();
            let label = match self.cut_nodes[cut].kind {
                NodeKind::Var(_) => {
                    if let Some(&value) = frozen.first() {
                        // Every frozen child pins the shared variable; the
                        // pins must agree or no consistent solution exists.
                        if frozen.iter().any(|&p| p != value) {
                            return Err(ClusterError::InconsistentSyndrome);
                        }
                        Label::Frozen(value)
                    } else {
                        Label::Free
                    }
                }
                NodeKind::Check(c) => {
                    if frozen.len() == children.len() {
                        let total = frozen.iter().fold(false, |acc, &p| acc ^ p);
                        Label::Frozen(syndrome.get(c) ^ total)
                    } else {
                        Label::Free
                    }
                }
            };
            self.cut_nodes[cut].label = Some(label);
            if let Label::Frozen(value) = label {
                constraints.push(Constraint { cut, value });
            }
        }
        Ok(constraints)
    }

    /// Top-down pass: the root and frozen clusters take their unique stored
    /// solution; each free cluster takes the one matching the pin handed down
    /// through its parent cut. At a check cut the leftover contribution is
    /// assigned to the first free child (lowest cluster id) and zero to the
    /// rest.
    pub fn select_solutions(&mut self, syndrome: &BitVector, graph: &TannerGraph) {
        let mut stack: Vec<(usize, Option<bool>)> =
            self.roots.iter().map(|&r| (r, None)).collect();
        while let Some((b, pin)) = stack.pop() {
            let slot = match self.clusters[b].label {
                None => 0,
                Some(Label::Frozen(pin)) => pin as usize,
                Some(Label::Free) => pin.expect("free cluster receives a pin") as usize,
            };
            let solution = self.clusters[b].solutions[slot]
                .clone()
                .expect("computed solution exists for selected pin");
            for &cut in &self.clusters[b].child_cuts.clone() {
                let children = self.cut_nodes[cut].child_clusters.clone();
                match self.cut_nodes[cut].kind {
                    NodeKind::Var(v) => {
                        let local = self.clusters[b].local_index(v).expect("cut variable in cluster");
                        let value = solution.get(local);
                        for b2 in children {
                            stack.push((b2, Some(value)));
                        }
                    }
                    NodeKind::Check(c) => {
                        let contribution = graph
                            .check_neighbors(c)
                            .iter()
                            .filter_map(|&v| self.clusters[b].local_index(v as usize))
                            .fold(false, |acc, local| acc ^ solution.get(local));
                        let mut delta = syndrome.get(c) ^ contribution;
                        let mut free = Vec::new();
                        for b2 in children {
                            match self.clusters[b2].label {
                                Some(Label::Frozen(pin)) => {
                                    delta ^= pin;
                                    stack.push((b2, Some(pin)));
                                }
                                _ => free.push(b2),
                            }
                        }
                        // Children are stored ascending; the lowest id takes
                        // the leftover contribution.
                        for (i, b2) in free.into_iter().enumerate() {
                            stack.push((b2, Some(if i == 0 { delta } else { false })));
                        }
                    }
                }
            }
            self.clusters[b].selected = Some(solution);
        }
    }

    /// Merges selected cluster solutions into one vector over all variables.
    /// Variable cut nodes appear in several clusters; the selections are
    /// consistent by construction and a disagreement is an implementation
    /// bug.
    pub fn merge_solutions(&self) -> BitVector {
        let mut out = BitVector::zeros(self.n_vars);
        let mut written: Vec<Option<bool>> = vec![None; self.n_vars];
        for cluster in &self.clusters {
            let solution = cluster.selected.as_ref().expect("all clusters selected");
            for (local, &v) in cluster.vars.iter().enumerate() {
                let value = solution.get(local);
                if let Some(previous) = written[v] {
                    assert_eq!(
                        previous, value,
                        "cut variable {v} selected inconsistently across clusters"
                    );
                } else {
                    written[v] = Some(value);
                    out.set(v, value);
                }
            }
        }
        out
    }

    /// One line per cluster and per cut node, by id.
    pub fn dump_text(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        let names = |items: &[usize], prefix: &str| {
            items.iter().map(|i| format!("{prefix}{i}")).collect::<Vec<_>>().join(" ")
        };
        for (id, cluster) in self.clusters.iter().enumerate() {
            let label = match cluster.label {
                None if self.roots.contains(&id) => "root".to_string(),
                None => "-".to_string(),
                Some(Label::Free) => "free".to_string(),
                Some(Label::Frozen(pin)) => format!("frozen({})", pin as u8),
            };
            let _ = writeln!(
                out,
                "cluster {id} size {} vars [{}] checks [{}] parent {} label {label}",
                cluster.size(),
                names(&cluster.vars, "v"),
                names(&cluster.checks, "c"),
                cluster.parent_cut.map_or("-".into(), |c| format!("cut{c}")),
            );
        }
        for (id, cut) in self.cut_nodes.iter().enumerate() {
            let kind = match cut.kind {
                NodeKind::Var(v) => format!("v{v}"),
                NodeKind::Check(c) => format!("c{c}"),
            };
            let label = match cut.label {
                None => "-".to_string(),
                Some(Label::Free) => "free".to_string(),
                Some(Label::Frozen(pin)) => format!("frozen({})", pin as u8),
            };
            let _ = writeln!(
                out,
                "cut {id} node {kind} clusters [{}] parent {} label {label}",
                names(&cut.clusters, ""),
                cut.parent_cluster.map_or("-".into(), |b| b.to_string()),
            );
        }
        out
    }
}

/// Full post-processing pipeline on a peeled residual: decompose, enforce the
/// optional cluster size bound, then compute, select, and merge solutions.
///
/// The residual must be a stopping set (peeling output). Returns the merged
/// solution supported on the residual variables, or an oversize verdict when
/// `bound` is exceeded. `Err(InconsistentSyndrome)` signals a syndrome no
/// error on the erasure can produce.
pub fn cluster_postprocess(
    residual: &ResidualState,
    bound: Option<usize>,
    graph: &TannerGraph,
) -> Result<PostOutcome, ClusterError> {
    if residual.is_empty() {
        return Ok(PostOutcome::Solved {
            solution: BitVector::zeros(graph.n_vars()),
            cluster_sizes: Vec::new(),
        });
    }
    if !residual.inactive_checks_clear() {
        return Err(ClusterError::InconsistentSyndrome);
    }
    let mut forest = ClusterForest::build(residual, graph);
    let cluster_sizes = forest.cluster_sizes();
    if let Some(c) = bound {
        if cluster_sizes.iter().any(|&s| s > c) {
            return Ok(PostOutcome::Oversize { cluster_sizes });
        }
    }
    forest.root();
    forest.compute_solutions(residual.residual_syndrome(), graph)?;
    forest.select_solutions(residual.residual_syndrome(), graph);
    Ok(PostOutcome::Solved {
        solution: forest.merge_solutions(),
        cluster_sizes,
    })
}
