//! Color coding for circuits with at least `k` and at most `k'` edges.
//!
//! Edges are colored with `k'` colors; a circuit whose edges all carry
//! distinct colors is found by a dynamic program over color subsets. Distinct
//! colors force distinct edges, so every colorful closed walk is a circuit.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::bits::subsets_of_size;
use crate::circuit::{verify_circuit, Circuit};
use crate::graph::{EdgeId, Graph};

/// Largest palette the subset table accepts.
pub const MAX_PALETTE: usize = 24;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("need k <= k', got k = {k}, k' = {k_prime}")]
    RangeInverted { k: usize, k_prime: usize },
    #[error("palette of {0} colors exceeds the supported maximum of {MAX_PALETTE}")]
    PaletteTooLarge(usize),
    #[error("palette must have at least one color")]
    EmptyPalette,
    #[error("epsilon must lie strictly between 0 and 1, got {0}")]
    InvalidEpsilon(f64),
    #[error("max_trials must be positive")]
    ZeroTrials,
    #[error("coloring has {got} entries but the graph has {expected} edges")]
    ColoringMismatch { expected: usize, got: usize },
    #[error("long-cycle oracle budget exceeded: {edges} edges > budget {budget}")]
    CycleBudgetExceeded { edges: usize, budget: usize },
    #[error("operation requires an undirected graph")]
    NotUndirected,
    #[error("operation requires a directed graph")]
    NotDirected,
}

/// An edge coloring with colors `0..palette`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u8>,
    palette: usize,
}

impl Coloring {
    pub fn new(colors: Vec<u8>, palette: usize) -> Result<Self, SolveError> {
        if palette == 0 {
            return Err(SolveError::EmptyPalette);
        }
        if palette > MAX_PALETTE {
            return Err(SolveError::PaletteTooLarge(palette));
        }
        assert!(colors.iter().all(|&c| (c as usize) < palette), "color out of range");
        Ok(Coloring { colors, palette })
    }

    pub fn color(&self, e: EdgeId) -> usize {
        self.colors[e] as usize
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    fn edges_by_color(&self) -> Vec<Vec<EdgeId>> {
        let mut by = vec![Vec::new(); self.palette];
        for (e, &c) in self.colors.iter().enumerate() {
            by[c as usize].push(e);
        }
        by
    }
}

/// Colors each edge independently and uniformly from `0..palette`.
pub fn random_coloring<R: Rng + ?Sized>(g: &Graph, palette: usize, rng: &mut R) -> Result<Coloring, SolveError> {
    if palette == 0 {
        return Err(SolveError::EmptyPalette);
    }
    if palette > MAX_PALETTE {
        return Err(SolveError::PaletteTooLarge(palette));
    }
    let colors = (0..g.m()).map(|_| rng.gen_range(0..palette) as u8).collect();
    Coloring::new(colors, palette)
}

/// `reached(X)` for one start vertex: the vertices `v` with a `(start, v)`
/// trail whose edges use each color of `X` exactly once.
#[derive(Clone, Debug)]
pub struct ColoringTable {
    start: usize,
    palette: usize,
    words: usize,
    rows: Vec<u64>,
    // subsets whose row has been computed
    filled: Vec<bool>,
}

impl ColoringTable {
    fn empty(g: &Graph, palette: usize, start: usize) -> Self {
        let words = g.n().div_ceil(64).max(1);
        let mut table = ColoringTable {
            start,
            palette,
            words,
            rows: vec![0; (1usize << palette) * words],
            filled: vec![false; 1usize << palette],
        };
        table.rows[start / 64] |= 1 << (start % 64);
        table.filled[0] = true;
        table
    }

    /// Computes every subset's row.
    pub fn build(g: &Graph, coloring: &Coloring, start: usize) -> Result<Self, SolveError> {
        check_inputs(g, coloring, start)?;
        let mut table = Self::empty(g, coloring.palette, start);
        table.fill(g, coloring, |_, _| false);
        Ok(table)
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    fn row(&self, set: u32) -> &[u64] {
        let at = set as usize * self.words;
        &self.rows[at..at + self.words]
    }

    pub fn contains(&self, set: u32, v: usize) -> bool {
        self.row(set)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn reached(&self, set: u32) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.row(set).iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                out.push(w * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Fills rows in increasing popcount, then numeric, order. Stops early
    /// and returns the subset as soon as `stop(set, table)` holds.
    fn fill<F>(&mut self, g: &Graph, coloring: &Coloring, mut stop: F) -> Option<u32>
    where
        F: FnMut(u32, &Self) -> bool,
    {
        let by_color = coloring.edges_by_color();
        let words = self.words;
        let mut next = vec![0u64; words];
        for size in 1..=self.palette as u32 {
            for set in subsets_of_size(self.palette as u32, size).map(|s| s as u32) {
                next.iter_mut().for_each(|w| *w = 0);
                let mut colors = set;
                while colors != 0 {
                    let c = colors.trailing_zeros();
                    colors &= colors - 1;
                    let prev = self.row(set & !(1 << c));
                    if prev.iter().all(|&w| w == 0) {
                        continue;
                    }
                    for &e in &by_color[c as usize] {
                        let (a, b) = g.edge(e);
                        if prev[a / 64] >> (a % 64) & 1 == 1 {
                            next[b / 64] |= 1 << (b % 64);
                        }
                        if !g.is_directed() && prev[b / 64] >> (b % 64) & 1 == 1 {
                            next[a / 64] |= 1 << (a % 64);
                        }
                    }
                }
                let at = set as usize * words;
                self.rows[at..at + words].copy_from_slice(&next);
                self.filled[set as usize] = true;
                if stop(set, self) {
                    return Some(set);
                }
            }
        }
        None
    }

    /// Reconstructs a colorful `(start, v)` trail using exactly the colors of
    /// `set`, preferring the lowest color and then the lowest edge id at each
    /// backward step.
    pub fn trail(&self, g: &Graph, coloring: &Coloring, set: u32, v: usize) -> Option<Circuit> {
        if !self.filled[set as usize] || !self.contains(set, v) {
            return None;
        }
        let by_color = coloring.edges_by_color();
        let mut vertices = vec![v];
        let mut edges = Vec::new();
        let (mut set, mut v) = (set, v);
        while set != 0 {
            let mut step = None;
            let mut colors = set;
            'search: while colors != 0 {
                let c = colors.trailing_zeros();
                colors &= colors - 1;
                let rest = set & !(1 << c);
                for &e in &by_color[c as usize] {
                    let (a, b) = g.edge(e);
                    let from = if b == v {
                        a
                    } else if !g.is_directed() && a == v {
                        b
                    } else {
                        continue;
                    };
                    if self.contains(rest, from) {
                        step = Some((rest, from, e));
                        break 'search;
                    }
                }
            }
            let (rest, from, e) = step.expect("table rows are consistent");
            vertices.push(from);
            edges.push(e);
            set = rest;
            v = from;
        }
        debug_assert_eq!(v, self.start);
        vertices.reverse();
        edges.reverse();
        Some(Circuit::from_parts(vertices, edges))
    }
}

fn check_inputs(g: &Graph, coloring: &Coloring, u: usize) -> Result<(), SolveError> {
    if u >= g.n() {
        return Err(SolveError::VertexOutOfRange { vertex: u, n: g.n() });
    }
    if coloring.colors.len() != g.m() {
        return Err(SolveError::ColoringMismatch {
            expected: g.m(),
            got: coloring.colors.len(),
        });
    }
    Ok(())
}

/// A colorful circuit through `u` with length in `[max(k, 1), k']`, where
/// `k'` is the palette size, or `None` if this coloring has none.
pub fn colorful_circuit_dp(g: &Graph, coloring: &Coloring, u: usize, k: usize) -> Result<Option<Circuit>, SolveError> {
    check_inputs(g, coloring, u)?;
    let palette = coloring.palette;
    if k > palette {
        return Err(SolveError::RangeInverted { k, k_prime: palette });
    }
    let lo = k.max(1) as u32;
    let mut table = ColoringTable::empty(g, palette, u);
    let hit = table.fill(g, coloring, |set, t| set.count_ones() >= lo && t.contains(set, u));
    Ok(hit.map(|set| table.trail(g, coloring, set, u).expect("hit row contains u")))
}

/// Independent colorings needed so that a fixed circuit of at most `k'` edges
/// is missed with probability below `epsilon`:
/// `ceil(k'^k' / k'! * ln(1 / epsilon))`.
pub fn trial_count(k_prime: usize, epsilon: f64) -> Result<u64, SolveError> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(SolveError::InvalidEpsilon(epsilon));
    }
    if k_prime == 0 {
        return Ok(1);
    }
    let kp = k_prime as f64;
    let inverse_colorful: f64 = (1..=k_prime).map(|i| kp / i as f64).product();
    let raw = inverse_colorful * -epsilon.ln();
    // absorb floating-point noise around exact integers such as 2 * ln(e)
    let trials = (raw * (1.0 - 1e-12)).ceil();
    Ok((trials as u64).max(1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Randomized,
    ExhaustiveTrails,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverConfig {
    pub mode: SearchMode,
    pub seed: u64,
    pub epsilon: f64,
    pub max_trials: Option<u64>,
}

impl SolverConfig {
    pub fn exhaustive() -> Self {
        SolverConfig {
            mode: SearchMode::ExhaustiveTrails,
            seed: 0,
            epsilon: 0.01,
            max_trials: None,
        }
    }

    pub fn randomized(seed: u64, epsilon: f64) -> Self {
        SolverConfig {
            mode: SearchMode::Randomized,
            seed,
            epsilon,
            max_trials: None,
        }
    }

    pub fn validate(&self) -> Result<(), SolveError> {
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(SolveError::InvalidEpsilon(self.epsilon));
        }
        if self.max_trials == Some(0) {
            return Err(SolveError::ZeroTrials);
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    /// Randomized search found nothing; absence holds only with the
    /// configured confidence.
    NoWithConfidence,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitAnswer {
    pub verdict: Verdict,
    pub certificate: Option<Circuit>,
    pub trials_used: u64,
    /// Search nodes visited by exhaustive enumeration (zero in randomized mode).
    pub nodes_explored: u64,
}

impl CircuitAnswer {
    pub(crate) fn no(verdict: Verdict) -> Self {
        CircuitAnswer {
            verdict,
            certificate: None,
            trials_used: 0,
            nodes_explored: 0,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }
}

/// SplitMix64 finalizer; derives per-trial seeds.
pub fn mix_seed(seed: u64, trial: u64) -> u64 {
    let mut z = (seed ^ trial).wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Does `g` have a circuit with at least `k` and at most `k_prime` edges?
///
/// Circuits are non-empty, so `k = 0` behaves like `k = 1`.
pub fn solve_range_circuit(
    g: &Graph,
    k: usize,
    k_prime: usize,
    config: &SolverConfig,
) -> Result<CircuitAnswer, SolveError> {
    config.validate()?;
    if k > k_prime {
        return Err(SolveError::RangeInverted { k, k_prime });
    }
    let lo = k.max(1);
    if lo > k_prime || lo > g.m() {
        return Ok(CircuitAnswer::no(Verdict::No));
    }
    let answer = match config.mode {
        SearchMode::ExhaustiveTrails => {
            let (found, nodes) = exhaustive_circuit(g, lo, k_prime);
            CircuitAnswer {
                verdict: if found.is_some() { Verdict::Yes } else { Verdict::No },
                certificate: found,
                trials_used: 0,
                nodes_explored: nodes,
            }
        }
        SearchMode::Randomized => randomized_circuit(g, lo, k_prime, config)?,
    };
    if let Some(c) = &answer.certificate {
        assert!(
            verify_circuit(g, c) && (lo..=k_prime).contains(&c.len()),
            "color-coding certificate failed verification"
        );
    }
    Ok(answer)
}

fn randomized_circuit(
    g: &Graph,
    lo: usize,
    k_prime: usize,
    config: &SolverConfig,
) -> Result<CircuitAnswer, SolveError> {
    // Circuits never exceed m edges, so a larger palette only adds misses.
    let palette = k_prime.min(g.m());
    if palette > MAX_PALETTE {
        return Err(SolveError::PaletteTooLarge(palette));
    }
    let mut trials = trial_count(palette, config.epsilon)?;
    if let Some(cap) = config.max_trials {
        trials = trials.min(cap);
    }
    let hit = (0..trials).into_par_iter().find_map_first(|t| {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(config.seed, t));
        let coloring = random_coloring(g, palette, &mut rng).expect("palette checked");
        (0..g.n())
            .filter(|&u| g.out_degree(u) > 0)
            .find_map(|u| colorful_circuit_dp(g, &coloring, u, lo).expect("inputs checked"))
            .map(|c| (t, c))
    });
    Ok(match hit {
        Some((t, c)) => CircuitAnswer {
            verdict: Verdict::Yes,
            certificate: Some(c),
            trials_used: t + 1,
            nodes_explored: 0,
        },
        None => CircuitAnswer {
            verdict: Verdict::NoWithConfidence,
            certificate: None,
            trials_used: trials,
            nodes_explored: 0,
        },
    })
}

/// Exact search: depth-first enumeration of trails of at most `hi` edges.
/// A circuit is found from its smallest vertex, so the trail from start `u`
/// only visits vertices `>= u`.
pub fn exhaustive_circuit(g: &Graph, lo: usize, hi: usize) -> (Option<Circuit>, u64) {
    let mut search = TrailSearch {
        g,
        lo,
        hi,
        used: vec![false; g.m()],
        vertices: Vec::new(),
        edges: Vec::new(),
        back_dist: vec![usize::MAX; g.n()],
        nodes: 0,
    };
    for u in 0..g.n() {
        if g.out_degree(u) == 0 {
            continue;
        }
        search.distances_back_to(u);
        search.vertices.clear();
        search.vertices.push(u);
        if search.extend(u, u) {
            let c = Circuit::from_parts(search.vertices.clone(), search.edges.clone());
            return (Some(c), search.nodes);
        }
    }
    (None, search.nodes)
}

struct TrailSearch<'a> {
    g: &'a Graph,
    lo: usize,
    hi: usize,
    used: Vec<bool>,
    vertices: Vec<usize>,
    edges: Vec<EdgeId>,
    // hop distance from each vertex back to the start, through vertices >= start
    back_dist: Vec<usize>,
    nodes: u64,
}

impl TrailSearch<'_> {
    fn distances_back_to(&mut self, u: usize) {
        self.back_dist.iter_mut().for_each(|d| *d = usize::MAX);
        self.back_dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in self.g.in_neighbors(v) {
                if w >= u && self.back_dist[w] == usize::MAX {
                    self.back_dist[w] = self.back_dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    fn extend(&mut self, start: usize, v: usize) -> bool {
        self.nodes += 1;
        let depth = self.edges.len();
        if depth > 0 && v == start && depth >= self.lo {
            return true;
        }
        for &(w, e) in self.g.out_neighbors(v) {
            if w < start || self.used[e] {
                continue;
            }
            let back = self.back_dist[w];
            if back == usize::MAX || depth + 1 + back > self.hi {
                continue;
            }
            self.used[e] = true;
            self.edges.push(e);
            self.vertices.push(w);
            if self.extend(start, w) {
                return true;
            }
            self.vertices.pop();
            self.edges.pop();
            self.used[e] = false;
        }
        false
    }
}

/// `k`-Circuit: a circuit with exactly `k` edges.
pub fn solve_k_circuit(g: &Graph, k: usize, config: &SolverConfig) -> Result<CircuitAnswer, SolveError> {
    solve_range_circuit(g, k, k, config)
}
