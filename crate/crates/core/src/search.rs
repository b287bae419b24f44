//! Exhaustive backtracking search for geodesic Leech and almost geodesic
//! Leech labelings.
//!
//! Edges are assigned in a fixed order (most geodesics first, ties by edge
//! id), labels ascending. A node is cut when one of the enabled pruning
//! rules proves no completion can succeed; every leaf is re-checked from
//! scratch, so disabling a rule changes only the amount of work.

use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::families::{self, FamilyError};
use crate::formulas::{general_weighted_sum_identity, max_label_bound, triangular};
use crate::graph::{census, enumerate_geodesics, EdgeId, GeodesicCensus, GeodesicPath, Graph};
use crate::labeling::{classify_paths, Labeling, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid search configuration: {0}")]
    ConfigInvalid(String),
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("witness failed re-verification: classified {0:?}")]
    WitnessRejected(Verdict),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SearchMode {
    Leech,
    Almost,
}

impl SearchMode {
    pub fn verdict(self) -> Verdict {
        match self {
            SearchMode::Leech => Verdict::GeodesicLeech,
            SearchMode::Almost => Verdict::AlmostGeodesicLeech,
        }
    }
}

/// Switches for the individual pruning rules. All on by default; turning
/// one off never changes a search's status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PruningRules {
    /// Leech mode: no label value twice.
    pub distinct_labels: bool,
    /// Weighted-sum window (and forced label sum) must stay reachable.
    pub weighted_sum: bool,
    /// Completed geodesics: weight at most `t_gp`, repeats as allowed by
    /// the mode.
    pub path_weights: bool,
    /// Labels capped at the configured maximum rather than `t_gp`.
    pub max_label: bool,
    /// Incomplete geodesics: assigned weight plus one per missing edge
    /// must not exceed `t_gp`.
    pub partial_overflow: bool,
}

impl Default for PruningRules {
    fn default() -> Self {
        PruningRules {
            distinct_labels: true,
            weighted_sum: true,
            path_weights: true,
            max_label: true,
            partial_overflow: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub mode: SearchMode,
    pub max_label: u64,
    pub forced_label_sum: Option<u64>,
    pub time_limit: Option<Duration>,
    pub find_all: bool,
    pub node_limit: Option<u64>,
    /// Worker threads; 1 gives reproducible node counts.
    pub workers: usize,
    pub rules: PruningRules,
    /// Rotation/reflection breaking; only honoured on generator cycles.
    pub cycle_symmetry: bool,
}

impl SearchConfig {
    /// Defaults derived from the graph's geodesic census: in Leech mode the
    /// label bound and (when every edge has the same geodesic count) the
    /// forced label sum; in Almost mode the cap is `t_gp`.
    pub fn defaults(g: &Graph, census: &GeodesicCensus, mode: SearchMode) -> Self {
        let (max_label, forced_label_sum) = match mode {
            SearchMode::Leech => {
                let bound = max_label_bound(g, census).max_label;
                let floor = triangular(g.edge_count() as u64);
                let forced = general_weighted_sum_identity(census)
                    .forced_label_sum()
                    .filter(|&s| s >= floor);
                (bound, forced)
            }
            SearchMode::Almost => (census.total.max(1), None),
        };
        SearchConfig {
            mode,
            max_label,
            forced_label_sum,
            time_limit: None,
            find_all: false,
            node_limit: None,
            workers: 1,
            rules: PruningRules::default(),
            cycle_symmetry: false,
        }
    }

    pub fn validate(&self, edge_count: usize) -> Result<(), SearchError> {
        if self.max_label < 1 {
            return Err(SearchError::ConfigInvalid("max_label must be at least 1".into()));
        }
        if self.workers < 1 {
            return Err(SearchError::ConfigInvalid("workers must be at least 1".into()));
        }
        if let Some(s) = self.forced_label_sum {
            let floor = triangular(edge_count as u64);
            if self.mode == SearchMode::Leech && s < floor {
                return Err(SearchError::ConfigInvalid(format!(
                    "forced label sum {s} is below {floor}, the least sum of {edge_count} distinct labels"
                )));
            }
            if s < edge_count as u64 {
                return Err(SearchError::ConfigInvalid(format!(
                    "forced label sum {s} is below the edge count {edge_count}"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SearchStatus {
    Found,
    ExhaustedNone,
    TimedOut,
    NodeLimit,
}

/// How often each rule cut a candidate label.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PruningStats {
    pub distinct_labels: u64,
    pub weighted_sum: u64,
    pub path_weights: u64,
    pub partial_overflow: u64,
    pub symmetry: u64,
    pub leaf_rejected: u64,
}

impl PruningStats {
    fn merge(&mut self, other: &PruningStats) {
        self.distinct_labels += other.distinct_labels;
        self.weighted_sum += other.weighted_sum;
        self.path_weights += other.path_weights;
        self.partial_overflow += other.partial_overflow;
        self.symmetry += other.symmetry;
        self.leaf_rejected += other.leaf_rejected;
    }
}

/// The bounds a search actually ran under; for `ExhaustedNone` this is the
/// exhaustion certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    pub mode: SearchMode,
    pub t_gp: u64,
    /// Largest label tried.
    pub label_cap: u64,
    pub forced_label_sum: Option<u64>,
    /// Right-hand side of `sum_e k_e * a_e = target`.
    pub weighted_sum_target: u64,
    pub weighted_sum_coefficients: Vec<u64>,
    pub edge_order: Vec<EdgeId>,
    pub cycle_symmetry: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witnesses: Vec<Labeling>,
    pub nodes_explored: u64,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
    pub pruning_stats: PruningStats,
    pub bounds: SearchBounds,
    /// False when a `find_all` run stopped early on a limit.
    pub complete: bool,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

struct Problem {
    t: u64,
    order: Vec<EdgeId>,
    /// Geodesic count of the edge at each position; non-increasing.
    coeff: Vec<u64>,
    /// `coeff[p..]` sums.
    coeff_suffix: Vec<u64>,
    target: u64,
    /// Geodesics whose last edge (in assignment order) sits at position p.
    completes: Vec<Vec<usize>>,
    /// Geodesics touched at position p but not yet complete, with the
    /// number of their edges still unassigned afterwards.
    touches: Vec<Vec<(usize, u64)>>,
    geodesic_edges: Vec<Vec<EdgeId>>,
    /// Number of vertices when the graph is a generator cycle.
    cycle_len: Option<usize>,
}

impl Problem {
    fn new(g: &Graph, paths: &[GeodesicPath], census: &GeodesicCensus) -> Self {
        let m = g.edge_count();
        let mut order: Vec<EdgeId> = (0..m).collect();
        order.sort_by_key(|&e| (std::cmp::Reverse(census.per_edge[e]), e));
        let mut position = vec![0; m];
        for (p, &e) in order.iter().enumerate() {
            position[e] = p;
        }
        let coeff: Vec<u64> = order.iter().map(|&e| census.per_edge[e]).collect();
        let mut coeff_suffix = vec![0; m + 1];
        for p in (0..m).rev() {
            coeff_suffix[p] = coeff_suffix[p + 1] + coeff[p];
        }
        let mut completes = vec![Vec::new(); m];
        let mut touches = vec![Vec::new(); m];
        for (gi, path) in paths.iter().enumerate() {
            let mut positions: Vec<usize> = path.edge_ids.iter().map(|&e| position[e]).collect();
            positions.sort_unstable();
            let last = *positions.last().unwrap();
            completes[last].push(gi);
            for (i, &p) in positions.iter().enumerate() {
                if p != last {
                    touches[p].push((gi, (positions.len() - 1 - i) as u64));
                }
            }
        }
        let n = g.vertex_count();
        let cycle_len = (n >= 3
            && families::cycle(n).map(|c| c.edges() == g.edges()).unwrap_or(false))
        .then_some(n);
        Problem {
            t: census.total,
            order,
            coeff,
            coeff_suffix,
            target: triangular(census.total),
            completes,
            touches,
            geodesic_edges: paths.iter().map(|p| p.edge_ids.clone()).collect(),
            cycle_len,
        }
    }

    fn m(&self) -> usize {
        self.order.len()
    }
}

struct Shared {
    nodes: AtomicU64,
    halted: AtomicBool,
    deadline: Option<Instant>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Halt {
    Found,
    TimedOut,
    NodeLimit,
}

enum SumCheck {
    Ok,
    /// Larger labels could still reach the window.
    TooLow,
    /// Larger labels only overshoot further.
    TooHigh,
}

struct Worker<'a> {
    problem: &'a Problem,
    cfg: &'a SearchConfig,
    shared: &'a Shared,
    cap: u64,
    labels: Vec<u64>,
    label_used: Vec<bool>,
    partial: Vec<u64>,
    weight_count: Vec<u32>,
    doubled: u32,
    wsum: u64,
    lsum: u64,
    nodes: u64,
    unflushed: u64,
    stats: PruningStats,
    witnesses: Vec<Labeling>,
    halt: Option<Halt>,
    // per-depth scratch for unused label lists
    scratch: Vec<Vec<u64>>,
}

const FLUSH_EVERY: u64 = 1024;

impl<'a> Worker<'a> {
    fn new(problem: &'a Problem, cfg: &'a SearchConfig, shared: &'a Shared, cap: u64) -> Self {
        let m = problem.m();
        Worker {
            problem,
            cfg,
            shared,
            cap,
            labels: vec![0; m],
            label_used: vec![false; cap as usize + 2],
            partial: vec![0; problem.geodesic_edges.len()],
            weight_count: vec![0; problem.t as usize + 1],
            doubled: 0,
            wsum: 0,
            lsum: 0,
            nodes: 0,
            unflushed: 0,
            stats: PruningStats::default(),
            witnesses: Vec::new(),
            halt: None,
            scratch: vec![Vec::new(); m + 1],
        }
    }

    fn leech(&self) -> bool {
        self.cfg.mode == SearchMode::Leech
    }

    fn halted(&mut self) -> bool {
        if self.halt.is_some() {
            return true;
        }
        if self.shared.halted.load(Ordering::Relaxed) {
            self.halt = Some(Halt::Found);
            return true;
        }
        false
    }

    fn count_node(&mut self) {
        self.nodes += 1;
        self.unflushed += 1;
        if let Some(limit) = self.cfg.node_limit {
            if self.shared.nodes.load(Ordering::Relaxed) + self.unflushed >= limit {
                self.flush();
                self.halt = Some(Halt::NodeLimit);
                self.shared.halted.store(true, Ordering::Relaxed);
                return;
            }
        }
        if self.unflushed >= FLUSH_EVERY {
            self.flush();
            if let Some(deadline) = self.shared.deadline {
                if Instant::now() >= deadline {
                    self.halt = Some(Halt::TimedOut);
                    self.shared.halted.store(true, Ordering::Relaxed);
                }
            }
        }
    }

    fn flush(&mut self) {
        self.shared.nodes.fetch_add(self.unflushed, Ordering::Relaxed);
        self.unflushed = 0;
    }

    fn sum_check(&self, pos: usize, v: u64, unused: &[u64]) -> SumCheck {
        let p = self.problem;
        let rest = &p.coeff[pos + 1..];
        let r = rest.len();
        let wsum = self.wsum + p.coeff[pos] * v;
        let lsum = self.lsum + v;
        if self.leech() {
            // remaining labels are distinct unused values; pair the largest
            // coefficients with the smallest (resp. largest) of them
            let available = unused.iter().copied().filter(|&u| u != v);
            let (mut wmin, mut lmin) = (0u64, 0u64);
            let mut taken = 0;
            for (c, u) in rest.iter().zip(available.clone()) {
                wmin += c * u;
                lmin += u;
                taken += 1;
            }
            if taken < r {
                return SumCheck::TooHigh;
            }
            let (mut wmax, mut lmax) = (0u64, 0u64);
            for (c, u) in rest.iter().zip(available.rev()) {
                wmax += c * u;
                lmax += u;
            }
            if wsum + wmin > p.target {
                return SumCheck::TooHigh;
            }
            if let Some(s) = self.cfg.forced_label_sum {
                if lsum + lmin > s {
                    return SumCheck::TooHigh;
                }
                if lsum + lmax < s {
                    return SumCheck::TooLow;
                }
            }
            if wsum + wmax < p.target {
                return SumCheck::TooLow;
            }
        } else {
            // one weight x is missing and one y doubled: the weighted sum is
            // target - x + y with x != y in 1..=t
            let low = p.target + 1 - p.t.min(p.target);
            let high = p.target + p.t - 1;
            let rest_sum = p.coeff_suffix[pos + 1];
            if wsum + rest_sum > high {
                return SumCheck::TooHigh;
            }
            if let Some(s) = self.cfg.forced_label_sum {
                if lsum + r as u64 > s {
                    return SumCheck::TooHigh;
                }
                if lsum + r as u64 * self.cap < s {
                    return SumCheck::TooLow;
                }
            }
            if wsum + rest_sum * self.cap < low {
                return SumCheck::TooLow;
            }
        }
        SumCheck::Ok
    }

    /// Adds `v`'s contribution to the geodesics completing at `pos`.
    /// Returns `Err(true)` when larger labels are hopeless too.
    fn apply_completions(&mut self, pos: usize, v: u64) -> Result<(), bool> {
        let p = self.problem;
        let check = self.cfg.rules.path_weights;
        let leech = self.leech();
        for (i, &gi) in p.completes[pos].iter().enumerate() {
            let w = self.partial[gi] + v;
            let rejection = if w > p.t {
                Some(true)
            } else {
                let c = self.weight_count[w as usize];
                let clash = if leech { c >= 1 } else { c >= 2 || (c == 1 && self.doubled >= 1) };
                clash.then_some(false)
            };
            if check {
                if let Some(hopeless) = rejection {
                    self.undo_completions(pos, v, i);
                    self.stats.path_weights += 1;
                    return Err(hopeless);
                }
            }
            if w <= p.t {
                let c = &mut self.weight_count[w as usize];
                *c += 1;
                if *c == 2 {
                    self.doubled += 1;
                }
            }
        }
        Ok(())
    }

    fn undo_completions(&mut self, pos: usize, v: u64, applied: usize) {
        let p = self.problem;
        for &gi in &p.completes[pos][..applied] {
            let w = self.partial[gi] + v;
            if w <= p.t {
                let c = &mut self.weight_count[w as usize];
                if *c == 2 {
                    self.doubled -= 1;
                }
                *c -= 1;
            }
        }
    }

    fn assign(&mut self, pos: usize, v: u64) {
        let p = self.problem;
        let e = p.order[pos];
        self.labels[e] = v;
        if (v as usize) < self.label_used.len() {
            self.label_used[v as usize] = true;
        }
        self.wsum += p.coeff[pos] * v;
        self.lsum += v;
        for &(gi, _) in &p.touches[pos] {
            self.partial[gi] += v;
        }
        for &gi in &p.completes[pos] {
            self.partial[gi] += v;
        }
    }

    fn unassign(&mut self, pos: usize, v: u64) {
        let p = self.problem;
        let e = p.order[pos];
        for &gi in &p.completes[pos] {
            self.partial[gi] -= v;
        }
        self.undo_completions(pos, v, p.completes[pos].len());
        for &(gi, _) in &p.touches[pos] {
            self.partial[gi] -= v;
        }
        self.wsum -= p.coeff[pos] * v;
        self.lsum -= v;
        if (v as usize) < self.label_used.len() && !self.labels_contain_other(e, v) {
            self.label_used[v as usize] = false;
        }
        self.labels[e] = 0;
    }

    fn labels_contain_other(&self, except: EdgeId, v: u64) -> bool {
        self.labels
            .iter()
            .enumerate()
            .any(|(e, &a)| e != except && a == v)
    }

    fn symmetry_blocks(&self, e: EdgeId, v: u64) -> bool {
        if !self.cfg.cycle_symmetry {
            return false;
        }
        let Some(n) = self.problem.cycle_len else {
            return false;
        };
        // edge 0 carries a largest label; edge 1 outweighs edge n-1
        let strict = self.leech();
        let exceeds = |a: u64, b: u64| if strict { a >= b } else { a > b };
        (e != 0 && exceeds(v, self.labels[0])) || (e == n - 1 && exceeds(v, self.labels[1]))
    }

    fn dfs(&mut self, pos: usize, only: Option<u64>) {
        let p = self.problem;
        if pos == p.m() {
            self.leaf();
            return;
        }
        let e = p.order[pos];
        let leech = self.leech();
        let rules = self.cfg.rules;

        let mut unused = std::mem::take(&mut self.scratch[pos]);
        unused.clear();
        if leech && rules.weighted_sum {
            unused.extend((1..=self.cap).filter(|&u| !self.label_used[u as usize]));
        }

        let (lo, hi) = match only {
            Some(v) => (v, v),
            None => (1, self.cap),
        };
        for v in lo..=hi {
            if self.halted() {
                break;
            }
            if leech && rules.distinct_labels && self.label_used[v as usize] {
                self.stats.distinct_labels += 1;
                continue;
            }
            if self.symmetry_blocks(e, v) {
                self.stats.symmetry += 1;
                break;
            }
            if rules.weighted_sum {
                match self.sum_check(pos, v, &unused) {
                    SumCheck::Ok => {}
                    SumCheck::TooLow => {
                        self.stats.weighted_sum += 1;
                        continue;
                    }
                    SumCheck::TooHigh => {
                        self.stats.weighted_sum += 1;
                        break;
                    }
                }
            }
            if rules.partial_overflow
                && p.touches[pos]
                    .iter()
                    .any(|&(gi, missing)| self.partial[gi] + v + missing > p.t)
            {
                self.stats.partial_overflow += 1;
                break;
            }
            match self.apply_completions(pos, v) {
                Ok(()) => {}
                Err(true) => break,
                Err(false) => continue,
            }
            self.assign(pos, v);
            self.count_node();
            self.dfs(pos + 1, None);
            self.unassign(pos, v);
        }
        self.scratch[pos] = unused;
    }

    fn leaf(&mut self) {
        if self.leaf_accepts() {
            self.witnesses.push(Labeling::new(self.labels.clone()).expect("labels are positive"));
            if !self.cfg.find_all {
                self.halt = Some(Halt::Found);
                self.shared.halted.store(true, Ordering::Relaxed);
            }
        } else {
            self.stats.leaf_rejected += 1;
        }
    }

    // Full check from the labels alone, independent of the incremental
    // state and of which rules were enabled.
    fn leaf_accepts(&self) -> bool {
        let p = self.problem;
        if let Some(s) = self.cfg.forced_label_sum {
            if self.labels.iter().sum::<u64>() != s {
                return false;
            }
        }
        let mut seen = vec![0u32; p.t as usize + 1];
        let mut doubled = 0;
        for edges in &p.geodesic_edges {
            let w: u64 = edges.iter().map(|&e| self.labels[e]).sum();
            if w == 0 || w > p.t {
                return false;
            }
            let c = &mut seen[w as usize];
            *c += 1;
            match *c {
                1 => {}
                2 => doubled += 1,
                _ => return false,
            }
        }
        match self.cfg.mode {
            SearchMode::Leech => doubled == 0,
            SearchMode::Almost => doubled == 1,
        }
    }
}

/// Searches `g` for a labeling of the configured kind.
pub fn search(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    if g.edge_count() == 0 {
        return Err(SearchError::EmptyGraph);
    }
    cfg.validate(g.edge_count())?;
    let paths = enumerate_geodesics(g);
    let census = crate::graph::GeodesicCensus::from_paths(g, &paths);
    let problem = Problem::new(g, &paths, &census);
    let start = Instant::now();

    let cap = if cfg.rules.max_label {
        cfg.max_label.min(problem.t)
    } else {
        problem.t
    };
    let shared = Shared {
        nodes: AtomicU64::new(0),
        halted: AtomicBool::new(false),
        deadline: cfg.time_limit.map(|d| start + d),
    };

    let mut witnesses = Vec::new();
    let mut stats = PruningStats::default();
    let mut nodes = 0;
    let mut halts = Vec::new();
    if cfg.workers <= 1 {
        let mut w = Worker::new(&problem, cfg, &shared, cap);
        w.dfs(0, None);
        w.flush();
        witnesses = w.witnesses;
        stats = w.stats;
        nodes = w.nodes;
        halts.extend(w.halt);
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| SearchError::ConfigInvalid(format!("thread pool: {e}")))?;
        let branches: Vec<_> = pool.install(|| {
            (1..=cap)
                .into_par_iter()
                .map(|v| {
                    let mut w = Worker::new(&problem, cfg, &shared, cap);
                    if !w.halted() {
                        w.dfs(0, Some(v));
                    }
                    w.flush();
                    (w.witnesses, w.stats, w.nodes, w.halt)
                })
                .collect()
        });
        for (ws, st, n, h) in branches {
            witnesses.extend(ws);
            stats.merge(&st);
            nodes += n;
            halts.extend(h);
        }
        if !cfg.find_all {
            witnesses.truncate(1);
        }
    }

    let limit_hit = halts
        .iter()
        .find(|&&h| h != Halt::Found)
        .copied();
    let status = if !witnesses.is_empty() {
        SearchStatus::Found
    } else {
        match limit_hit {
            Some(Halt::TimedOut) => SearchStatus::TimedOut,
            Some(Halt::NodeLimit) => SearchStatus::NodeLimit,
            _ => SearchStatus::ExhaustedNone,
        }
    };

    for witness in &witnesses {
        let report = classify_paths(g, &paths, witness).expect("witness matches edge count");
        if report.verdict != cfg.mode.verdict() {
            return Err(SearchError::WitnessRejected(report.verdict));
        }
    }

    Ok(SearchOutcome {
        status,
        witnesses,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
        pruning_stats: stats,
        bounds: SearchBounds {
            mode: cfg.mode,
            t_gp: problem.t,
            label_cap: cap,
            forced_label_sum: cfg.forced_label_sum,
            weighted_sum_target: problem.target,
            weighted_sum_coefficients: census.per_edge.clone(),
            edge_order: problem.order.clone(),
            cycle_symmetry: cfg.cycle_symmetry && problem.cycle_len.is_some(),
        },
        complete: limit_hit.is_none() || (!cfg.find_all && status == SearchStatus::Found),
    })
}

/// Named search problems for the graphs discussed in the literature on
/// geodesic Leech labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    C5,
    C10,
    W5,
    W6,
    W7,
    Prism,
    K4,
    /// 1-based index into the bundled forbidden-subgraph list.
    Beineke(usize),
}

impl FromStr for Preset {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "C5" => Preset::C5,
            "C10" => Preset::C10,
            "W5" => Preset::W5,
            "W6" => Preset::W6,
            "W7" => Preset::W7,
            "prism" => Preset::Prism,
            "K4" => Preset::K4,
            _ => {
                let i = s
                    .strip_prefix("beineke_")
                    .and_then(|i| i.parse::<usize>().ok())
                    .filter(|i| (1..=9).contains(i))
                    .ok_or_else(|| SearchError::UnknownPreset(s.to_string()))?;
                Preset::Beineke(i)
            }
        })
    }
}

impl Preset {
    pub fn graph(&self) -> Result<Graph, SearchError> {
        Ok(match *self {
            Preset::C5 => families::cycle(5)?,
            Preset::C10 => families::cycle(10)?,
            Preset::W5 => families::wheel(5)?,
            Preset::W6 => families::wheel(6)?,
            Preset::W7 => families::wheel(7)?,
            Preset::Prism => families::prism(),
            Preset::K4 => families::complete(4)?,
            Preset::Beineke(i) => families::beineke_graphs()?[i - 1].graph.clone(),
        })
    }

    /// W7 is searched for an almost labeling; everything else for a Leech
    /// labeling.
    pub fn mode(&self) -> SearchMode {
        match self {
            Preset::W7 => SearchMode::Almost,
            _ => SearchMode::Leech,
        }
    }

    pub fn problem(&self) -> Result<(Graph, SearchConfig), SearchError> {
        let g = self.graph()?;
        let cfg = SearchConfig::defaults(&g, &census(&g), self.mode());
        Ok((g, cfg))
    }
}

pub fn search_family_presets(name: &str) -> Result<SearchOutcome, SearchError> {
    let (g, cfg) = name.parse::<Preset>()?.problem()?;
    search(&g, &cfg)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CensusVerdict {
    Leech,
    Almost,
    Neither,
    Timeout,
    Error,
}

#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
    /// Graphs searched concurrently; each search is single-threaded.
    pub workers: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub index: usize,
    pub n: usize,
    pub m: usize,
    pub t_gp: u64,
    pub verdict: CensusVerdict,
    pub nodes: u64,
    pub millis: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Labeling>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CensusRow {
    pub fn error(index: usize, message: String) -> Self {
        CensusRow {
            index,
            n: 0,
            m: 0,
            t_gp: 0,
            verdict: CensusVerdict::Error,
            nodes: 0,
            millis: 0,
            witness: None,
            error: Some(message),
        }
    }
}

/// Leech search, then Almost search if the first one is exhausted.
pub fn census_one(index: usize, g: &Graph, opts: &CensusOptions) -> CensusRow {
    let start = Instant::now();
    let c = census(g);
    let mut row = CensusRow {
        index,
        n: g.vertex_count(),
        m: g.edge_count(),
        t_gp: c.total,
        verdict: CensusVerdict::Error,
        nodes: 0,
        millis: 0,
        witness: None,
        error: None,
    };
    for mode in [SearchMode::Leech, SearchMode::Almost] {
        let mut cfg = SearchConfig::defaults(g, &c, mode);
        cfg.time_limit = opts.time_limit;
        cfg.node_limit = opts.node_limit;
        match search(g, &cfg) {
            Ok(outcome) => {
                row.nodes += outcome.nodes_explored;
                match outcome.status {
                    SearchStatus::Found => {
                        row.verdict = match mode {
                            SearchMode::Leech => CensusVerdict::Leech,
                            SearchMode::Almost => CensusVerdict::Almost,
                        };
                        row.witness = outcome.witnesses.into_iter().next();
                        break;
                    }
                    SearchStatus::ExhaustedNone => row.verdict = CensusVerdict::Neither,
                    SearchStatus::TimedOut | SearchStatus::NodeLimit => {
                        row.verdict = CensusVerdict::Timeout;
                        break;
                    }
                }
            }
            Err(e) => {
                row.verdict = CensusVerdict::Error;
                row.error = Some(e.to_string());
                break;
            }
        }
    }
    row.millis = start.elapsed().as_millis() as u64;
    row
}

/// Runs [`census_one`] over a batch; rows come back in input order.
pub fn census_corpus(graphs: &[Graph], opts: &CensusOptions) -> Vec<CensusRow> {
    let run = || {
        graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| census_one(i, g, opts))
            .collect()
    };
    match rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
    {
        Ok(pool) => pool.install(run),
        Err(_) => graphs
            .iter()
            .enumerate()
            .map(|(i, g)| census_one(i, g, opts))
            .collect(),
    }
}
