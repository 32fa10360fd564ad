//! Exact realizability of dense 3-graphs by congruent copies of a triangle,
//! and the point sets whose congruence hypergraph has a complete shadow.

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::PI;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::geometry::{
    candidate_positions, congruence_hypergraph, congruence_residual, CongruenceMode, GeometryError, Point,
    PointConfig, ToleranceParams, Triangle, TriangleType, DEFAULT_TOL,
};
use crate::hypergraph::{NamedGraph, ThreeGraph};

/// Residuals in `(tol, AMBIGUITY_FACTOR·tol]` make a verdict ambiguous.
pub const AMBIGUITY_FACTOR: f64 = 1e3;

/// Largest configuration size accepted by [`realizable_point_sets`].
pub const REALIZABLE_MAX_SIZE: usize = 8;

/// Coordinates closer than this are the same point when comparing
/// configurations.
const MATCH_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RealizabilityError {
    #[error("3-graph has no dense ordering")]
    NotDense,
    #[error("borderline congruence residual {} at a partial placement", .0.residual)]
    Ambiguous(AmbiguousPlacement),
    #[error("configuration size {0} exceeds the supported maximum {REALIZABLE_MAX_SIZE}")]
    TooLarge(usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// The partial placement at which a residual fell into the ambiguous band.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AmbiguousPlacement {
    pub residual: f64,
    pub points: Vec<Point>,
}

/// Points for the vertices of a 3-graph making every edge congruent to `T`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Realization {
    /// Distinct points used by the placement.
    pub config: PointConfig,
    pub graph: ThreeGraph,
    /// `assignment[v]` indexes the point of vertex `v` in `config`.
    pub assignment: Vec<usize>,
}

impl Realization {
    fn from_positions(graph: &ThreeGraph, positions: &[Point], tol: f64) -> Self {
        let mut points: Vec<Point> = Vec::new();
        let assignment = positions
            .iter()
            .map(|&p| match points.iter().position(|q| q.dist(p) <= tol) {
                Some(i) => i,
                None => {
                    points.push(p);
                    points.len() - 1
                }
            })
            .collect();
        Realization {
            config: PointConfig::permissive(points),
            graph: graph.clone(),
            assignment,
        }
    }

    pub fn position(&self, v: usize) -> Point {
        self.config.points[self.assignment[v]]
    }

    pub fn positions(&self) -> Vec<Point> {
        (0..self.assignment.len()).map(|v| self.position(v)).collect()
    }

    /// Whether distinct vertices sit at distinct points.
    pub fn is_injective(&self) -> bool {
        self.config.len() == self.assignment.len()
    }

    /// Largest congruence residual over the edges.
    pub fn max_residual(&self, t: &Triangle) -> f64 {
        self.graph
            .edges()
            .iter()
            .map(|e| congruence_residual(self.position(e[0]), self.position(e[1]), self.position(e[2]), t, 0.0))
            .fold(0.0, f64::max)
    }

    /// Independent check that every edge is congruent to `t` within `tol`.
    pub fn recheck(&self, t: &Triangle, tol: f64) -> bool {
        self.assignment.len() == self.graph.n() && self.max_residual(t) <= tol
    }
}

fn ambiguous(residual: f64, points: &[Point]) -> RealizabilityError {
    RealizabilityError::Ambiguous(AmbiguousPlacement {
        residual,
        points: points.to_vec(),
    })
}

/// Depth-first placement state: vertices are handled in dense order and
/// indexed by their position in that order.
struct Placer<'a> {
    t: &'a Triangle,
    tol: f64,
    sides: Vec<f64>,
    /// Two earlier positions forming an edge with position `k`.
    cover: Vec<(usize, usize)>,
    /// All pairs of earlier positions forming an edge with position `k`.
    checks: Vec<Vec<(usize, usize)>>,
    found: Vec<Vec<Point>>,
}

impl Placer<'_> {
    fn place(&mut self, pts: &mut Vec<Point>) -> Result<(), RealizabilityError> {
        let k = pts.len();
        if k == self.cover.len() {
            let normal = normalize(pts);
            if !self.found.iter().any(|f| same_points(f, &normal)) {
                self.found.push(normal);
            }
            return Ok(());
        }
        let candidates = match k {
            0 => vec![Point::ORIGIN],
            1 => self.sides.iter().map(|&s| Point::new(s, 0.0)).collect(),
            _ => {
                let (x, y) = self.cover[k];
                if pts[x].dist(pts[y]) <= self.tol {
                    return Ok(());
                }
                candidate_positions(pts[x], pts[y], &self.sides, self.tol)?
            }
        };
        'next: for c in candidates {
            for &(a, b) in &self.checks[k] {
                let r = congruence_residual(pts[a], pts[b], c, self.t, self.tol);
                if r > self.tol {
                    if r <= AMBIGUITY_FACTOR * self.tol {
                        let mut partial = pts.clone();
                        partial.push(c);
                        return Err(ambiguous(r, &partial));
                    }
                    continue 'next;
                }
            }
            pts.push(c);
            self.place(pts)?;
            pts.pop();
        }
        Ok(())
    }
}

/// Puts the first point at the origin, the second on the positive x-axis
/// (already true for placements) and the first off-axis point above it.
fn normalize(pts: &[Point]) -> Vec<Point> {
    let flip = pts.iter().find(|p| p.y.abs() > MATCH_TOL).is_some_and(|p| p.y < 0.0);
    pts.iter().map(|&p| if flip { p.reflect() } else { p }).collect()
}

fn same_points(a: &[Point], b: &[Point]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(p, q)| p.dist(*q) <= MATCH_TOL)
}

/// All placements of the vertices of a dense `h` (coincidences allowed) with
/// every edge congruent to `t` within `tol`, up to rigid motion and
/// reflection.
pub fn find_realizations(h: &ThreeGraph, t: &Triangle, tol: f64) -> Result<Vec<Realization>, RealizabilityError> {
    let order = h.dense_ordering().ok_or(RealizabilityError::NotDense)?;
    let n = h.n();
    let mut cover = vec![(0, 0); n];
    let mut checks = vec![Vec::new(); n];
    for k in 2..n {
        for (a, b) in (0..k).tuple_combinations() {
            if h.has_edge([order[a], order[b], order[k]]) {
                checks[k].push((a, b));
            }
        }
        cover[k] = checks[k][0];
    }
    let mut placer = Placer {
        t,
        tol,
        sides: t.distinct_sides(tol),
        cover,
        checks,
        found: Vec::new(),
    };
    placer.place(&mut Vec::with_capacity(n))?;
    let mut out = Vec::with_capacity(placer.found.len());
    for found in &placer.found {
        let mut by_vertex = vec![Point::ORIGIN; n];
        for (k, &v) in order.iter().enumerate() {
            by_vertex[v] = found[k];
        }
        out.push(Realization::from_positions(h, &by_vertex, tol));
    }
    Ok(out)
}

/// Whether some realization uses pairwise distinct points.
pub fn has_distinct_realization(realizations: &[Realization]) -> bool {
    realizations.iter().any(Realization::is_injective)
}

/// `true` iff no placement of `h` realizes all edges as copies of `t`.
pub fn is_exactly_forbidden(h: &ThreeGraph, t: &Triangle) -> Result<bool, RealizabilityError> {
    Ok(find_realizations(h, t, DEFAULT_TOL)?.is_empty())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Forbidden,
    Realizable(Realization),
    Ambiguous(AmbiguousPlacement),
}

impl Verdict {
    pub fn is_forbidden(&self) -> bool {
        matches!(self, Verdict::Forbidden)
    }

    pub fn witness(&self) -> Option<&Realization> {
        match self {
            Verdict::Realizable(r) => Some(r),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ForbiddenCatalog {
    pub triangle: Triangle,
    pub triangle_type: TriangleType,
    pub verdicts: BTreeMap<NamedGraph, Verdict>,
}

/// Forbidden/realizable verdict for every catalog graph. The witness of a
/// realizable graph prefers a placement with distinct points.
pub fn build_forbidden_catalog(t: &Triangle) -> Result<ForbiddenCatalog, RealizabilityError> {
    let triangle_type = t.classify(DEFAULT_TOL)?;
    let mut verdicts = BTreeMap::new();
    for g in NamedGraph::CATALOG {
        let verdict = match find_realizations(&g.graph(), t, DEFAULT_TOL) {
            Ok(found) => match found.iter().find(|r| r.is_injective()).or(found.first()) {
                Some(r) => Verdict::Realizable(r.clone()),
                None => Verdict::Forbidden,
            },
            Err(RealizabilityError::Ambiguous(a)) => Verdict::Ambiguous(a),
            Err(e) => return Err(e),
        };
        verdicts.insert(g, verdict);
    }
    Ok(ForbiddenCatalog {
        triangle: *t,
        triangle_type,
        verdicts,
    })
}

/// Index of the side of `sides` matching `d`, `None` if `d` matches none.
fn side_class(d: f64, sides: &[f64], tol: f64, pts: &[Point]) -> Result<Option<usize>, RealizabilityError> {
    let (i, dev) = sides
        .iter()
        .enumerate()
        .map(|(i, s)| (i, (d - s).abs()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("a triangle has sides");
    if dev <= tol {
        Ok(Some(i))
    } else if dev <= AMBIGUITY_FACTOR * tol {
        Err(ambiguous(dev, pts))
    } else {
        Ok(None)
    }
}

/// Point set plus the side class of each pair, for isometry tests.
#[derive(Clone, Debug)]
struct Classed {
    points: Vec<Point>,
    class: Vec<Vec<usize>>,
}

impl Classed {
    /// Isometry invariant: class counts and the sorted per-point class
    /// profiles.
    fn key(&self) -> (Vec<usize>, Vec<[usize; 3]>) {
        let n = self.points.len();
        let mut totals = vec![0; 3];
        let mut profiles = Vec::with_capacity(n);
        for i in 0..n {
            let mut prof = [0; 3];
            for j in (0..n).filter(|&j| j != i) {
                prof[self.class[i][j]] += 1;
                if j > i {
                    totals[self.class[i][j]] += 1;
                }
            }
            profiles.push(prof);
        }
        profiles.sort_unstable();
        (totals, profiles)
    }

    /// Whether some isometry maps `self` onto `other` as sets.
    fn isometric(&self, other: &Classed) -> bool {
        let n = self.points.len();
        if n != other.points.len() {
            return false;
        }
        if n < 2 {
            return true;
        }
        let (a0, a1) = (self.points[0], self.points[1]);
        let da = a1 - a0;
        for (i, j) in (0..n).cartesian_product(0..n) {
            if i == j || other.class[i][j] != self.class[0][1] {
                continue;
            }
            let (b0, b1) = (other.points[i], other.points[j]);
            let db = b1 - b0;
            let rot = db.y.atan2(db.x) - da.y.atan2(da.x);
            for reflect in [false, true] {
                let map = |p: Point| {
                    let v = p - a0;
                    let v = if reflect {
                        // Reflect across the line through a0 and a1.
                        let u = da * (1.0 / da.norm());
                        u * (2.0 * v.dot(u)) - v
                    } else {
                        v
                    };
                    b0 + v.rotate(rot)
                };
                if self
                    .points
                    .iter()
                    .all(|&p| other.points.iter().any(|&q| q.dist(map(p)) <= MATCH_TOL))
                {
                    return true;
                }
            }
        }
        false
    }
}

/// All point sets of size `2..=max_size` whose pairwise distances are sides
/// of `t`, up to isometry, grouped by size (`levels[k]` has size `k + 2`).
pub fn side_distance_sets(t: &Triangle, max_size: usize, tol: f64) -> Result<Vec<Vec<PointConfig>>, RealizabilityError> {
    if max_size > REALIZABLE_MAX_SIZE {
        return Err(RealizabilityError::TooLarge(max_size));
    }
    let sides = t.distinct_sides(tol);
    let mut level: Vec<Classed> = sides
        .iter()
        .enumerate()
        .map(|(i, &s)| Classed {
            points: vec![Point::ORIGIN, Point::new(s, 0.0)],
            class: vec![vec![usize::MAX, i], vec![i, usize::MAX]],
        })
        .collect();
    let mut levels = Vec::new();
    let mut size = 2;
    while size <= max_size && !level.is_empty() {
        levels.push(level.iter().map(|c| PointConfig::new(c.points.clone())).collect());
        if size == max_size {
            break;
        }
        let mut next: Vec<Classed> = Vec::new();
        let mut buckets: HashMap<(Vec<usize>, Vec<[usize; 3]>), Vec<usize>> = HashMap::new();
        for c in &level {
            let pts = &c.points;
            'cand: for q in candidate_positions(pts[0], pts[1], &sides, tol)? {
                let mut row = Vec::with_capacity(pts.len());
                for &p in pts {
                    match side_class(p.dist(q), &sides, tol, pts)? {
                        Some(k) => row.push(k),
                        None => continue 'cand,
                    }
                }
                let mut class = c.class.clone();
                for (r, &k) in class.iter_mut().zip(&row) {
                    r.push(k);
                }
                row.push(usize::MAX);
                class.push(row);
                let mut points = pts.clone();
                points.push(q);
                let grown = Classed { points, class };
                let bucket = buckets.entry(grown.key()).or_default();
                if bucket.iter().all(|&b| !next[b].isometric(&grown)) {
                    bucket.push(next.len());
                    next.push(grown);
                }
            }
        }
        level = next;
        size += 1;
    }
    Ok(levels)
}

/// All point sets `P` with `3 ≤ |P| ≤ max_size` whose congruence hypergraph
/// for `t` has a complete shadow, up to isometry, in order of size.
pub fn realizable_point_sets(t: &Triangle, max_size: usize) -> Result<Vec<PointConfig>, RealizabilityError> {
    let params = ToleranceParams::default();
    let mut out = Vec::new();
    for configs in side_distance_sets(t, max_size, params.tol)?.into_iter().skip(1) {
        for c in configs {
            if congruence_hypergraph(&c, t, &params, CongruenceMode::Exact)?.has_complete_shadow() {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// The six maximal planar 3-distance sets of size 6 with the pair of
/// distance ratios `(b, c)` (to the shortest distance) they realize.
pub fn maximal_six_point_three_distance_sets() -> Vec<(&'static str, [f64; 2], PointConfig)> {
    let r3 = 3f64.sqrt();
    let gamma = (2.0 + r3).sqrt();
    let tau = (1.0 + 5f64.sqrt()) / 2.0;
    let s5 = (PI / 5.0).sin();
    let p = Point::new;
    let pentagon = {
        let mut pts = PointConfig::regular_polygon(5, 2.0 * s5).points;
        pts.push(Point::ORIGIN);
        pts
    };
    let c_base = vec![
        p(-0.5, 0.0),
        p(0.5, 0.0),
        p(0.0, r3 / 2.0),
        p(0.0, 1.0 + r3 / 2.0),
        p(-(1.0 + r3) / 2.0, -0.5),
        p((1.0 + r3) / 2.0, -0.5),
    ];
    let mut d_base = c_base.clone();
    d_base[3] = p(0.0, -1.0 - r3 / 2.0);
    let e_base = vec![
        p(-1.0, 0.0),
        p(1.0, 0.0),
        p(0.0, r3),
        p(0.0, -(2.0 - r3)),
        p(-(r3 - 1.0), 1.0),
        p(r3 - 1.0, 1.0),
    ];
    let mut f_base = e_base.clone();
    f_base[3] = p(0.0, 2.0 - r3);
    // Rescale so the shortest distance is 1.
    let unit = |pts: Vec<Point>| {
        let c = PointConfig::new(pts);
        let m = c.pairwise_distances().fold(f64::INFINITY, f64::min);
        c.scaled(1.0 / m)
    };
    vec![
        (
            "a",
            [r3, 2.0],
            unit(vec![
                p(-1.0, 0.0),
                p(1.0, 0.0),
                p(0.0, 0.0),
                p(0.0, r3),
                p(0.5, r3 / 2.0),
                p(-0.5, r3 / 2.0),
            ]),
        ),
        ("b", [2.0 * s5, 2.0 * tau * s5], unit(pentagon)),
        ("c", [gamma, 2f64.sqrt() * gamma], unit(c_base)),
        ("d", [gamma, 2f64.sqrt() * gamma], unit(d_base)),
        ("e", [2f64.sqrt(), gamma], unit(e_base)),
        ("f", [2f64.sqrt(), gamma], unit(f_base)),
    ]
}
