//! The Lagrangian `λ_H(x) = Σ_{ijk ∈ H} x_i x_j x_k` over the standard simplex:
//! evaluation, multi-start maximization and certified upper bounds.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{ThreeGraph, Triple};

/// Restarts used by [`maximize`] callers that have no preference.
pub const DEFAULT_RESTARTS: usize = 200;

/// Iteration cap per ascent run.
pub const DEFAULT_MAX_ITERS: usize = 10_000;

/// Subdivision depth used by callers that have no preference.
pub const DEFAULT_CERTIFY_DEPTH: usize = 120;

/// An ascent run stops once a step gains less than this.
const MIN_IMPROVEMENT: f64 = 1e-14;

/// Weights below this count as outside the support.
const SUPPORT_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LagrangianError {
    #[error("weight vector has length {got}, graph has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weights must be nonnegative and sum to 1 (sum {sum})")]
    NotInSimplex { sum: f64 },
    #[error("bound must be a nonnegative number, got {0}")]
    InvalidBound(f64),
    #[error("unresolved cell at depth {depth} (cell bound {cell_bound} vs {bound})")]
    DepthExceeded { depth: usize, cell_bound: f64, bound: f64 },
}

/// A point of the standard simplex.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SimplexWeights {
    x: Vec<f64>,
}

impl SimplexWeights {
    pub fn new(x: Vec<f64>) -> Result<Self, LagrangianError> {
        let sum: f64 = x.iter().sum();
        if x.iter().any(|&v| !(0.0..=1.0).contains(&v)) || (sum - 1.0).abs() > 1e-12 {
            return Err(LagrangianError::NotInSimplex { sum });
        }
        Ok(SimplexWeights { x })
    }

    pub fn uniform(n: usize) -> Self {
        SimplexWeights {
            x: vec![1.0 / n as f64; n],
        }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.x
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Indices with positive weight.
    pub fn support(&self) -> Vec<usize> {
        (0..self.x.len()).filter(|&i| self.x[i] > SUPPORT_TOL).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LagrangianResult {
    pub lower: f64,
    pub maximizer: SimplexWeights,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certified_upper: Option<f64>,
    pub iterations: usize,
    pub restarts: usize,
}

fn check_len(h: &ThreeGraph, x: &[f64]) -> Result<(), LagrangianError> {
    if x.len() != h.n() {
        return Err(LagrangianError::DimensionMismatch {
            expected: h.n(),
            got: x.len(),
        });
    }
    Ok(())
}

fn poly(edges: &[Triple], x: &[f64]) -> f64 {
    edges.iter().map(|e| x[e[0]] * x[e[1]] * x[e[2]]).sum()
}

fn grad(n: usize, edges: &[Triple], x: &[f64]) -> Vec<f64> {
    let mut g = vec![0.0; n];
    for &[i, j, k] in edges {
        g[i] += x[j] * x[k];
        g[j] += x[i] * x[k];
        g[k] += x[i] * x[j];
    }
    g
}

/// `λ_H(x)`; `x` need not lie in the simplex.
pub fn evaluate(h: &ThreeGraph, x: &[f64]) -> Result<f64, LagrangianError> {
    check_len(h, x)?;
    Ok(poly(&h.edges(), x))
}

/// Partial derivatives of `λ_H` at `x`.
pub fn gradient(h: &ThreeGraph, x: &[f64]) -> Result<Vec<f64>, LagrangianError> {
    check_len(h, x)?;
    Ok(grad(h.n(), &h.edges(), x))
}

/// Euclidean projection onto the simplex (sorted-threshold method).
pub fn project_to_simplex(y: &[f64]) -> Vec<f64> {
    if y.is_empty() {
        return Vec::new();
    }
    let mut s = y.to_vec();
    s.sort_by(|a, b| b.total_cmp(a));
    let mut cum = 0.0;
    let mut theta = 0.0;
    for (k, &v) in s.iter().enumerate() {
        cum += v;
        let t = (cum - 1.0) / (k + 1) as f64;
        if v - t > 0.0 {
            theta = t;
        }
    }
    y.iter().map(|&v| (v - theta).max(0.0)).collect()
}

struct Ascent<'a> {
    n: usize,
    edges: &'a [Triple],
    max_iters: usize,
    iterations: usize,
}

impl Ascent<'_> {
    /// Projected gradient ascent with a halving line search from step 1.
    fn climb(&mut self, mut x: Vec<f64>) -> (Vec<f64>, f64) {
        let mut f = poly(self.edges, &x);
        for _ in 0..self.max_iters {
            self.iterations += 1;
            let g = grad(self.n, self.edges, &x);
            let mut step = 1.0;
            let mut accepted = None;
            while step > 1e-20 {
                let y = project_to_simplex(&x.iter().zip(&g).map(|(a, b)| a + step * b).collect::<Vec<_>>());
                let fy = poly(self.edges, &y);
                if fy > f {
                    accepted = Some((y, fy));
                    break;
                }
                step *= 0.5;
            }
            let Some((y, fy)) = accepted else { break };
            let gain = fy - f;
            x = y;
            f = fy;
            if gain < MIN_IMPROVEMENT {
                break;
            }
        }
        (x, f)
    }

    /// Moves all weight of one vertex of an uncovered support pair onto the
    /// other (the one with larger incident sum; ties go to the lower index),
    /// which cannot decrease `λ`. Returns whether anything moved.
    fn shift_support(&self, x: &mut [f64]) -> bool {
        for v in x.iter_mut() {
            if *v <= SUPPORT_TOL {
                *v = 0.0;
            }
        }
        let total: f64 = x.iter().sum();
        x.iter_mut().for_each(|v| *v /= total);
        let support: Vec<usize> = (0..self.n).filter(|&i| x[i] > 0.0).collect();
        let covered = |i: usize, j: usize| {
            self.edges
                .iter()
                .any(|e| e.contains(&i) && e.contains(&j) && e.iter().all(|&k| x[k] > 0.0))
        };
        for (a, &i) in support.iter().enumerate() {
            for &j in &support[a + 1..] {
                if covered(i, j) {
                    continue;
                }
                let g = grad(self.n, self.edges, x);
                let (to, from) = if g[i] >= g[j] { (i, j) } else { (j, i) };
                x[to] += x[from];
                x[from] = 0.0;
                return true;
            }
        }
        false
    }

    fn run(&mut self, start: Vec<f64>) -> (Vec<f64>, f64) {
        let (mut x, mut f) = self.climb(start);
        while self.shift_support(&mut x) {
            (x, f) = self.climb(x);
        }
        (x, f)
    }
}

/// Starting points: the uniform vector, the centroid of each edge, then
/// Dirichlet(1) draws, `restarts` in total.
fn starts(n: usize, edges: &[Triple], restarts: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut out = vec![vec![1.0 / n as f64; n]];
    for e in edges {
        let mut x = vec![0.0; n];
        for &v in e {
            x[v] = 1.0 / 3.0;
        }
        out.push(x);
    }
    out.truncate(restarts);
    if n >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        while out.len() < restarts {
            out.push(dirichlet(&mut rng, n));
        }
    }
    out
}

/// A Dirichlet(1, …, 1) draw: normalized unit exponentials.
pub fn dirichlet(rng: &mut impl rand::Rng, n: usize) -> Vec<f64> {
    let e: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = e.iter().sum();
    e.into_iter().map(|v| v / total).collect()
}

/// Best value of `λ_H` found from `restarts` starts (seed 0).
pub fn maximize(h: &ThreeGraph, restarts: usize, max_iters: usize) -> LagrangianResult {
    maximize_seeded(h, restarts, max_iters, 0)
}

/// [`maximize`] with an explicit seed for the random starts.
pub fn maximize_seeded(h: &ThreeGraph, restarts: usize, max_iters: usize, seed: u64) -> LagrangianResult {
    let n = h.n();
    let edges = h.edges();
    if n == 0 {
        return LagrangianResult {
            lower: 0.0,
            maximizer: SimplexWeights { x: Vec::new() },
            certified_upper: None,
            iterations: 0,
            restarts: 0,
        };
    }
    let restarts = restarts.max(1);
    let mut ascent = Ascent {
        n,
        edges: &edges,
        max_iters,
        iterations: 0,
    };
    let mut best: Option<(Vec<f64>, f64)> = None;
    let all = starts(n, &edges, restarts, seed);
    let used = all.len();
    for start in all {
        let (x, f) = ascent.run(start);
        if best.as_ref().is_none_or(|(_, b)| f > *b) {
            best = Some((x, f));
        }
    }
    let (x, lower) = best.expect("at least one start");
    LagrangianResult {
        lower,
        maximizer: SimplexWeights { x },
        certified_upper: None,
        iterations: ascent.iterations,
        restarts: used,
    }
}

#[inline]
fn add_up(a: f64, b: f64) -> f64 {
    (a + b).next_up()
}

#[inline]
fn add_down(a: f64, b: f64) -> f64 {
    (a + b).next_down()
}

#[inline]
fn mul3_up(a: f64, b: f64, c: f64) -> f64 {
    ((a * b).next_up() * c).next_up()
}

#[inline]
fn mul3_down(a: f64, b: f64, c: f64) -> f64 {
    ((a * b).next_down() * c).next_down().max(0.0)
}

/// A box `[lo, hi]` of weight vectors intersected with the simplex.
struct Cell {
    lo: Vec<f64>,
    hi: Vec<f64>,
    depth: usize,
}

/// Rigorous upper bound on `λ_H` over a cell, or `None` if the cell misses
/// the simplex. All arithmetic rounds toward a larger bound.
///
/// Two estimates are combined: `Σ hi_i hi_j hi_k`, and a centered form
/// around the midpoint `c` with half-widths `r`, whose linear part is
/// maximized exactly over the box and the hyperplane `Σx = 1`.
fn cell_bound(edges: &[Triple], cell: &Cell) -> Option<(f64, Vec<f64>)> {
    let n = cell.lo.len();
    let sum_lo = cell.lo.iter().fold(0.0, |s, &v| add_down(s, v));
    let sum_hi = cell.hi.iter().fold(0.0, |s, &v| add_up(s, v));
    if sum_lo > 1.0 || sum_hi < 1.0 {
        return None;
    }
    let corner = edges
        .iter()
        .fold(0.0, |s, e| add_up(s, mul3_up(cell.hi[e[0]], cell.hi[e[1]], cell.hi[e[2]])));

    let c: Vec<f64> = (0..n).map(|i| 0.5 * (cell.lo[i] + cell.hi[i])).collect();
    let r: Vec<f64> = (0..n)
        .map(|i| (cell.hi[i] - c[i]).next_up().max((c[i] - cell.lo[i]).next_up()))
        .collect();
    let base = (0..n).map(|i| (c[i] - r[i]).next_down()).collect::<Vec<_>>();
    let budget = (1.0 - base.iter().fold(0.0, |s, &v| add_down(s, v))).next_up();

    let mut value = 0.0;
    let mut g_hi = vec![0.0; n];
    let mut g_lo = vec![0.0; n];
    let mut quad = 0.0;
    let mut cubic = 0.0;
    for &[i, j, k] in edges {
        value = add_up(value, mul3_up(c[i], c[j], c[k]));
        g_hi[i] = add_up(g_hi[i], mul3_up(c[j], c[k], 1.0));
        g_hi[j] = add_up(g_hi[j], mul3_up(c[i], c[k], 1.0));
        g_hi[k] = add_up(g_hi[k], mul3_up(c[i], c[j], 1.0));
        g_lo[i] = add_down(g_lo[i], mul3_down(c[j], c[k], 1.0));
        g_lo[j] = add_down(g_lo[j], mul3_down(c[i], c[k], 1.0));
        g_lo[k] = add_down(g_lo[k], mul3_down(c[i], c[j], 1.0));
        quad = add_up(quad, mul3_up(c[i], r[j], r[k]));
        quad = add_up(quad, mul3_up(c[j], r[i], r[k]));
        quad = add_up(quad, mul3_up(c[k], r[i], r[j]));
        cubic = add_up(cubic, mul3_up(r[i], r[j], r[k]));
    }
    // max Σ g_i t_i over 0 ≤ t_i ≤ 2 r_i, Σ t_i = budget, filled greedily.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g_hi[b].total_cmp(&g_hi[a]));
    let mut left = budget;
    let mut linear = 0.0;
    for &i in &order {
        if left <= 0.0 {
            break;
        }
        let take = left.min((2.0 * r[i]).next_up());
        linear = add_up(linear, mul3_up(g_hi[i], take, 1.0));
        left -= take;
    }
    let shift = (0..n).fold(0.0, |s, i| add_down(s, mul3_down(g_lo[i], r[i], 1.0)));
    let centered = add_up(add_up(add_up(value, (linear - shift).next_up()), quad), cubic);

    // A feasible point of the cell, for disproofs.
    let mut probe: Vec<f64> = (0..n).map(|i| cell.lo[i]).collect();
    let mut rest = 1.0 - cell.lo.iter().sum::<f64>();
    for &i in &order {
        let take = rest.min(cell.hi[i] - cell.lo[i]).max(0.0);
        probe[i] += take;
        rest -= take;
    }
    Some((corner.min(centered), probe))
}

/// Proves `λ(H) ≤ bound` by subdividing the simplex.
///
/// `Ok(true)`: proved. `Ok(false)`: a point of the simplex with
/// `λ_H > bound` was found. `Err(DepthExceeded)`: a cell could be neither
/// discarded nor split within `depth` bisections.
pub fn certify_upper_bound(h: &ThreeGraph, bound: f64, depth: usize) -> Result<bool, LagrangianError> {
    if !(bound >= 0.0 && bound.is_finite()) {
        return Err(LagrangianError::InvalidBound(bound));
    }
    let edges = h.edges();
    let n = h.n();
    if edges.is_empty() {
        return Ok(true);
    }
    let mut stack = vec![Cell {
        lo: vec![0.0; n],
        hi: vec![1.0; n],
        depth: 0,
    }];
    while let Some(cell) = stack.pop() {
        let Some((ub, probe)) = cell_bound(&edges, &cell) else {
            continue;
        };
        if ub <= bound {
            continue;
        }
        let total: f64 = probe.iter().sum();
        if (total - 1.0).abs() < 1e-12 && probe.iter().all(|&v| v >= 0.0) {
            let value = poly(&edges, &probe);
            if value > bound * (1.0 + 1e-12) + 1e-15 {
                return Ok(false);
            }
        }
        if cell.depth >= depth {
            return Err(LagrangianError::DepthExceeded {
                depth,
                cell_bound: ub,
                bound,
            });
        }
        let widest = (0..n)
            .max_by(|&a, &b| (cell.hi[a] - cell.lo[a]).total_cmp(&(cell.hi[b] - cell.lo[b])))
            .expect("n >= 3");
        let mid = 0.5 * (cell.lo[widest] + cell.hi[widest]);
        let mut left = Cell {
            lo: cell.lo.clone(),
            hi: cell.hi.clone(),
            depth: cell.depth + 1,
        };
        left.hi[widest] = mid;
        let mut right = cell;
        right.lo[widest] = mid;
        right.depth += 1;
        stack.push(right);
        stack.push(left);
    }
    Ok(true)
}

/// Maximizes and then certifies `lower + slack`, filling `certified_upper`
/// on success.
pub fn maximize_and_certify(
    h: &ThreeGraph,
    restarts: usize,
    slack: f64,
    depth: usize,
) -> Result<LagrangianResult, LagrangianError> {
    let mut result = maximize(h, restarts, DEFAULT_MAX_ITERS);
    let target = result.lower + slack;
    if certify_upper_bound(h, target, depth)? {
        result.certified_upper = Some(target);
    }
    Ok(result)
}
