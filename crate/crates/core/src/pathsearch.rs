// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

//! Budgeted walk on the k-cube of parity masks.
//!
//! Vertices are masks `0..2^k`, edges join masks at Hamming distance 1. The
//! walk starts at `0^k` and grows to exactly `C + 2` vertices through four
//! moves:
//!
//! * **selection**: append the heaviest active neighbour of the tail;
//! * **extension**: if the tail touches an earlier vertex `v_i`, reverse the
//!   suffix after `v_i` so that `v_{i+1}` becomes the tail, then append an
//!   unvisited neighbour of it;
//! * **dead end**: append the tail neighbour that maximizes its own weight plus
//!   a proximity bonus toward the remaining unvisited weight (may revisit);
//! * **sweep**: relax the activity threshold `0.5 − ε` step by step.
//!
//! Every tie is broken on a total order, so the walk is a pure function of its
//! inputs.

use crate::error::{Result, SynthError};
use crate::importance::{is_active, phase_importance, ImportanceVector, DEFAULT_GAMMA};
use crate::scalar::Real;
use crate::spectral::{forward_wht, PhaseVector};

#[inline]
pub fn hamming(a: usize, b: usize) -> u32 {
    (a ^ b).count_ones()
}

/// The `k` masks `node ^ (1 << i)` in ascending `i`.
pub fn neighbors(node: usize, qubits: usize) -> Vec<usize> {
    neighbor_iter(node, qubits).collect()
}

#[inline]
fn neighbor_iter(node: usize, qubits: usize) -> impl Iterator<Item = usize> {
    (0..qubits).map(move |i| node ^ (1 << i))
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SearchStats {
    pub dead_ends: usize,
    pub extensions: usize,
    pub revisits: usize,
    /// Last relaxation value the sweep reached (or the fallback value).
    pub final_epsilon: f64,
}

/// A walk on the hypercube, plus the set of masks it has touched.
#[derive(Debug, Clone, PartialEq)]
pub struct PathState {
    nodes: Vec<usize>,
    visited: Vec<bool>,
    first_visits: Vec<usize>,
    qubits: usize,
    budget_nodes: usize,
    pub stats: SearchStats,
}

impl PathState {
    /// The one-vertex walk `[0^k]` with room for `budget_nodes` vertices.
    pub fn start(qubits: usize, budget_nodes: usize) -> Self {
        assert!(qubits >= 1 && qubits < usize::BITS as usize);
        let mut visited = vec![false; 1 << qubits];
        visited[0] = true;
        Self {
            nodes: vec![0],
            visited,
            first_visits: vec![0],
            qubits,
            budget_nodes: budget_nodes.max(1),
            stats: SearchStats::default(),
        }
    }

    /// Builds a walk from an explicit vertex list and checks every invariant.
    pub fn from_nodes(qubits: usize, budget_nodes: usize, nodes: &[usize]) -> Result<Self> {
        if qubits == 0 || qubits >= usize::BITS as usize {
            return Err(SynthError::InvalidArgument(format!(
                "qubit count {qubits} out of range"
            )));
        }
        let mut path = Self::start(qubits, budget_nodes);
        match nodes.first() {
            Some(0) => {}
            _ => return Err(SynthError::MalformedPath("walk must start at 0".into())),
        }
        for &n in &nodes[1..] {
            if n >> qubits != 0 {
                return Err(SynthError::MalformedPath(format!("mask {n} out of range")));
            }
            if hamming(n, path.tail()) != 1 {
                return Err(SynthError::MalformedPath(format!(
                    "{} -> {} is not a hypercube edge",
                    path.tail(),
                    n
                )));
            }
            path.push(n);
        }
        if path.len() > path.budget_nodes {
            return Err(SynthError::MalformedPath(format!(
                "{} vertices exceed budget {}",
                path.len(),
                path.budget_nodes
            )));
        }
        Ok(path)
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn tail(&self) -> usize {
        *self.nodes.last().expect("walk is never empty")
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn budget_nodes(&self) -> usize {
        self.budget_nodes
    }

    pub fn is_complete(&self) -> bool {
        self.nodes.len() >= self.budget_nodes
    }

    pub fn contains(&self, node: usize) -> bool {
        self.visited[node]
    }

    /// Distinct masks in order of first arrival; starts with 0.
    pub fn first_visits(&self) -> &[usize] {
        &self.first_visits
    }

    pub fn distinct_count(&self) -> usize {
        self.first_visits.len()
    }

    /// Checks start vertex, adjacency, budget and visited-set consistency.
    pub fn check_invariants(&self) -> Result<()> {
        if self.nodes.first() != Some(&0) {
            return Err(SynthError::MalformedPath("walk must start at 0".into()));
        }
        if let Some(w) = self.nodes.windows(2).find(|w| hamming(w[0], w[1]) != 1) {
            return Err(SynthError::MalformedPath(format!(
                "{} -> {} is not a hypercube edge",
                w[0], w[1]
            )));
        }
        if self.nodes.len() > self.budget_nodes {
            return Err(SynthError::MalformedPath("budget exceeded".into()));
        }
        let mut seen = vec![false; self.visited.len()];
        for &n in &self.nodes {
            seen[n] = true;
        }
        if seen != self.visited || self.first_visits.len() != seen.iter().filter(|&&b| b).count() {
            return Err(SynthError::MalformedPath("visited set out of sync".into()));
        }
        Ok(())
    }

    fn push(&mut self, node: usize) {
        debug_assert_eq!(hamming(node, self.tail()), 1);
        if self.visited[node] {
            self.stats.revisits += 1;
        } else {
            self.visited[node] = true;
            self.first_visits.push(node);
        }
        self.nodes.push(node);
    }

    /// Reverses `nodes[pivot + 1..]` and appends `next`.
    fn rotate_and_push(&mut self, pivot: usize, next: usize) {
        debug_assert_eq!(hamming(self.nodes[pivot], self.tail()), 1);
        self.nodes[pivot + 1..].reverse();
        self.push(next);
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig<T> {
    pub cnot_budget: usize,
    pub gamma: T,
    pub eps_start: T,
    pub eps_step: T,
    pub eps_max: T,
}

impl<T: Real> SearchConfig<T> {
    pub fn new(cnot_budget: usize) -> Self {
        Self {
            cnot_budget,
            gamma: T::lit(DEFAULT_GAMMA),
            eps_start: T::lit(0.01),
            eps_step: T::lit(0.01),
            eps_max: T::half(),
        }
    }

    pub fn with_gamma(mut self, gamma: T) -> Self {
        self.gamma = gamma;
        self
    }

    pub fn budget_nodes(&self) -> usize {
        self.cnot_budget.saturating_add(2)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.gamma > T::zero()) {
            return Err(SynthError::InvalidArgument("gamma must be positive".into()));
        }
        if !(self.eps_step > T::zero()
            && self.eps_step <= self.eps_max
            && self.eps_max <= T::half()
            && self.eps_start >= T::zero())
        {
            return Err(SynthError::InvalidArgument(format!(
                "need 0 <= eps_start, 0 < eps_step <= eps_max <= 0.5 (got {}, {}, {})",
                self.eps_start, self.eps_step, self.eps_max
            )));
        }
        Ok(())
    }

    /// Relaxation values visited by the sweep, `eps_start + i·eps_step ≤ eps_max`.
    pub fn epsilon_grid(&self) -> Vec<T> {
        let mut out = Vec::new();
        let slack = self.eps_step * T::lit(1e-6);
        let mut i = 0usize;
        loop {
            let eps = self.eps_start + self.eps_step * T::from_usize(i).expect("grid index");
            if eps > self.eps_max + slack {
                break;
            }
            out.push(eps.min(self.eps_max));
            i += 1;
        }
        out
    }
}

/// Greedy growth: append the heaviest active tail neighbour (ties to the
/// smaller mask) until the budget is met or no neighbour is active. Returns
/// the number of vertices appended.
pub fn path_selection<T: Real>(
    path: &mut PathState,
    imp: &ImportanceVector<T>,
    epsilon: T,
) -> usize {
    let mut appended = 0;
    while !path.is_complete() {
        let mut best: Option<(T, usize)> = None;
        for n in neighbor_iter(path.tail(), path.qubits) {
            if !is_active(imp, n, path, epsilon) {
                continue;
            }
            let w = imp[n];
            best = match best {
                Some((bw, bn)) if bw > w || (bw == w && bn < n) => Some((bw, bn)),
                _ => Some((w, n)),
            };
        }
        match best {
            Some((_, n)) => {
                path.push(n);
                appended += 1;
            }
            None => break,
        }
    }
    appended
}

/// One rotation step. Among pivots `i ≤ len − 3` adjacent to the tail, finds
/// the unvisited neighbour `v` of `path[i + 1]` with the largest weight (ties
/// to the smaller mask, then the smaller pivot). If `v` clears `0.5 − ε`, the
/// walk becomes `path[..=i] ++ reverse(path[i+1..]) ++ [v]`.
pub fn path_extension<T: Real>(
    path: &mut PathState,
    imp: &ImportanceVector<T>,
    epsilon: T,
) -> bool {
    let len = path.len();
    if len < 3 || path.is_complete() {
        return false;
    }
    let tail = path.tail();
    let mut best: Option<(T, usize, usize)> = None;
    for (i, &pivot) in path.nodes[..len - 2].iter().enumerate() {
        if hamming(pivot, tail) != 1 {
            continue;
        }
        let hinge = path.nodes[i + 1];
        for v in neighbor_iter(hinge, path.qubits) {
            if path.visited[v] {
                continue;
            }
            let w = imp[v];
            let better = match best {
                None => true,
                Some((bw, bv, _)) => w > bw || (w == bw && v < bv),
            };
            if better {
                best = Some((w, v, i));
            }
        }
    }
    match best {
        Some((w, v, i)) if w > T::half() - epsilon => {
            path.rotate_and_push(i, v);
            path.stats.extensions += 1;
            true
        }
        _ => false,
    }
}

/// Dead-end score of a tail neighbour, evaluated literally:
/// `[c ∉ path]·Imp_c + ω Σ_{j ∉ path, j ≠ c} (k − d(c, j))·Imp_j`.
pub fn dead_end_score<T: Real>(
    candidate: usize,
    path: &PathState,
    imp: &ImportanceVector<T>,
    omega: T,
) -> T {
    let k = path.qubits as u32;
    let own = if path.contains(candidate) {
        T::zero()
    } else {
        imp[candidate]
    };
    let mut pull = T::zero();
    for j in 0..imp.len() {
        if j == candidate || path.contains(j) {
            continue;
        }
        let closeness = T::from_u32(k - hamming(candidate, j)).expect("small integer");
        pull = pull + closeness * imp[j];
    }
    own + omega * pull
}

/// Unvisited weight aggregated per bit, so the proximity sum of the dead-end
/// score costs `O(k)` instead of `O(2^k)`:
/// `Σ_{j unvisited} (k − d(c, j))·w_j = k·W − Σ_b (c_b ? W − W_b : W_b)`.
#[derive(Debug, Clone)]
struct ProximityField<T> {
    total: T,
    bit_mass: Vec<T>,
    absorbed: usize,
}

impl<T: Real> ProximityField<T> {
    fn new(path: &PathState, imp: &ImportanceVector<T>) -> Self {
        let mut field = Self {
            total: T::zero(),
            bit_mass: vec![T::zero(); path.qubits],
            absorbed: path.first_visits.len(),
        };
        for (j, &w) in imp.values().iter().enumerate() {
            if path.visited[j] {
                continue;
            }
            field.total = field.total + w;
            for (b, m) in field.bit_mass.iter_mut().enumerate() {
                if j >> b & 1 == 1 {
                    *m = *m + w;
                }
            }
        }
        field
    }

    /// Removes masks visited since the last call.
    fn sync(&mut self, path: &PathState, imp: &ImportanceVector<T>) {
        for &j in &path.first_visits[self.absorbed..] {
            let w = imp[j];
            self.total = self.total - w;
            for (b, m) in self.bit_mass.iter_mut().enumerate() {
                if j >> b & 1 == 1 {
                    *m = *m - w;
                }
            }
        }
        self.absorbed = path.first_visits.len();
    }

    fn score(&self, candidate: usize, path: &PathState, imp: &ImportanceVector<T>, omega: T) -> T {
        let k = T::from_usize(path.qubits).expect("small integer");
        let mut far = T::zero();
        for (b, &m) in self.bit_mass.iter().enumerate() {
            far = far
                + if candidate >> b & 1 == 1 {
                    self.total - m
                } else {
                    m
                };
        }
        let mut pull = k * self.total - far;
        let own = if path.contains(candidate) {
            T::zero()
        } else {
            let w = imp[candidate];
            pull = pull - k * w;
            w
        };
        own + omega * pull
    }

    fn step(&mut self, path: &mut PathState, imp: &ImportanceVector<T>, omega: T) -> usize {
        self.sync(path, imp);
        let tail = path.tail();
        let mut best: Option<(T, usize)> = None;
        for n in neighbor_iter(tail, path.qubits) {
            let s = self.score(n, path, imp, omega);
            best = match best {
                None => Some((s, n)),
                Some((bs, bn)) => {
                    let tol = T::epsilon() * T::lit(64.0) * (T::one() + bs.abs());
                    if s > bs + tol || ((s - bs).abs() <= tol && n < bn) {
                        Some((s, n))
                    } else {
                        Some((bs, bn))
                    }
                }
            };
        }
        let (_, next) = best.expect("k >= 1 gives at least one neighbour");
        path.push(next);
        path.stats.dead_ends += 1;
        self.sync(path, imp);
        next
    }
}

/// Appends the tail neighbour with the highest dead-end score (ties to the
/// smaller mask). The neighbour may already be on the walk.
pub fn dead_end_step<T: Real>(path: &mut PathState, imp: &ImportanceVector<T>, omega: T) -> usize {
    ProximityField::new(path, imp).step(path, imp, omega)
}

/// Full search from a target phase vector.
pub fn path_search<T: Real>(
    lambda: &PhaseVector<T>,
    config: &SearchConfig<T>,
) -> Result<PathState> {
    config.validate()?;
    let alpha = forward_wht(lambda);
    let imp = phase_importance(&alpha, config.cnot_budget, config.gamma)?;
    search_with_importance(&imp, config)
}

/// Mutation reported to a search observer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchEvent {
    /// Greedy growth appended this many vertices.
    Selected(usize),
    /// A rotation reordered the walk and appended one vertex.
    Rotated,
    /// A dead-end step appended this vertex.
    DeadEnd(usize),
}

/// Search driven by precomputed weights.
pub fn search_with_importance<T: Real>(
    imp: &ImportanceVector<T>,
    config: &SearchConfig<T>,
) -> Result<PathState> {
    search_with_observer(imp, config, |_, _| {})
}

/// [`search_with_importance`] that reports every mutation of the walk.
pub fn search_with_observer<T: Real, F>(
    imp: &ImportanceVector<T>,
    config: &SearchConfig<T>,
    mut observe: F,
) -> Result<PathState>
where
    F: FnMut(SearchEvent, &PathState),
{
    config.validate()?;
    let qubits = imp.qubits();
    let budget = config.budget_nodes();
    if budget > 2 * imp.len() {
        return Err(SynthError::InvalidArgument(format!(
            "budget of {} vertices exceeds twice the {} masks",
            budget,
            imp.len()
        )));
    }
    let mut path = PathState::start(qubits, budget);
    let mut field = ProximityField::new(&path, imp);

    let select = |path: &mut PathState, eps: T, observe: &mut F| {
        let n = path_selection(path, imp, eps);
        if n > 0 {
            observe(SearchEvent::Selected(n), path);
        }
    };

    select(&mut path, T::zero(), &mut observe);
    for eps in config.epsilon_grid() {
        if path.is_complete() {
            break;
        }
        path.stats.final_epsilon = eps.to_f64_lossy();
        while !path.is_complete() && path_extension(&mut path, imp, eps) {
            observe(SearchEvent::Rotated, &path);
            select(&mut path, eps, &mut observe);
        }
        if !path.is_complete() {
            let n = field.step(&mut path, imp, eps);
            observe(SearchEvent::DeadEnd(n), &path);
            select(&mut path, eps, &mut observe);
        }
    }
    while !path.is_complete() {
        path.stats.final_epsilon = config.eps_max.to_f64_lossy();
        let n = field.step(&mut path, imp, config.eps_max);
        observe(SearchEvent::DeadEnd(n), &path);
        select(&mut path, config.eps_max, &mut observe);
    }
    debug_assert!(path.check_invariants().is_ok());
    Ok(path)
}
