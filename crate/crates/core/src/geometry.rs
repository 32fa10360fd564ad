//! Planar primitives with an explicit tolerance scheme.
//!
//! Everything here works in `f64`. Equality of lengths is decided against an
//! absolute tolerance (`DEFAULT_TOL`); decisions whose residual lands between
//! that tolerance and [`COARSE_TOL`] are reported as ambiguous instead of being
//! silently rounded one way or the other.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::ThreeGraph;

/// Absolute tolerance for distance equality.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Upper edge of the "ambiguous" band used by classification.
pub const COARSE_TOL: f64 = 1e-5;

/// Number of equispaced rotation seeds in the registration search.
const ROTATION_SEEDS: usize = 64;

/// Angular resolution of the golden-section refinement.
const ROTATION_RESOLUTION: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("degenerate triangle with sides {0:?}")]
    DegenerateTriangle([f64; 3]),
    #[error("side lengths must be positive and finite, got {0:?}")]
    InvalidSides([f64; 3]),
    #[error("circles are concentric (center distance {0})")]
    ConcentricCircles(f64),
    #[error("points {0} and {1} coincide within tolerance")]
    CoincidentPoints(usize, usize),
    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("non-finite coordinate in point {0}")]
    NonFinite(usize),
    #[error("classification is ambiguous: angles deviate from {candidate} by {deviation:e} rad")]
    AmbiguousClassification {
        candidate: TriangleType,
        deviation: f64,
    },
}

pub type Result<T> = std::result::Result<T, GeometryError>;

#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn polar(radius: f64, angle: f64) -> Self {
        Point::new(radius * angle.cos(), radius * angle.sin())
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn rotate(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Mirror image in the x-axis.
    pub fn reflect(self) -> Self {
        Point::new(self.x, -self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

/// A triangle given by its side lengths, stored ascending.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Triangle {
    sides: [f64; 3],
}

#[derive(Deserialize)]
struct TriangleRepr {
    sides: [f64; 3],
}

impl<'de> Deserialize<'de> for Triangle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TriangleRepr::deserialize(d)?;
        Triangle::new(repr.sides).map_err(serde::de::Error::custom)
    }
}

impl Triangle {
    /// Builds a triangle from three side lengths in any order.
    pub fn new(sides: [f64; 3]) -> Result<Self> {
        if sides.iter().any(|s| !s.is_finite() || *s <= 0.0) {
            return Err(GeometryError::InvalidSides(sides));
        }
        let mut sorted = sides;
        sorted.sort_by(f64::total_cmp);
        if sorted[0] + sorted[1] <= sorted[2] {
            return Err(GeometryError::DegenerateTriangle(sorted));
        }
        Ok(Triangle { sides: sorted })
    }

    /// Triangle with the given interior angles (degrees) and shortest side 1.
    pub fn from_angles(angles_deg: [f64; 3]) -> Result<Self> {
        let sines = angles_deg.map(|a| a.to_radians().sin());
        let min = sines.iter().copied().fold(f64::INFINITY, f64::min);
        Triangle::new(sines.map(|s| s / min))
    }

    pub fn sides(&self) -> [f64; 3] {
        self.sides
    }

    pub fn min_side(&self) -> f64 {
        self.sides[0]
    }

    pub fn max_side(&self) -> f64 {
        self.sides[2]
    }

    /// Distinct side lengths (1, 2 or 3 of them), ascending.
    pub fn distinct_sides(&self, tol: f64) -> Vec<f64> {
        let mut out: Vec<f64> = Vec::with_capacity(3);
        for &s in &self.sides {
            if out.last().is_none_or(|&l| (s - l).abs() > tol) {
                out.push(s);
            }
        }
        out
    }

    pub fn scaled(&self, k: f64) -> Result<Self> {
        Triangle::new(self.sides.map(|s| s * k))
    }

    /// Interior angles in radians, sorted descending.
    pub fn angles_rad(&self) -> [f64; 3] {
        let [a, b, c] = self.sides;
        let opposite = |x: f64, y: f64, z: f64| ((y * y + z * z - x * x) / (2.0 * y * z)).clamp(-1.0, 1.0).acos();
        // Opposite angles follow side order, so reversing gives descending angles.
        [opposite(c, a, b), opposite(b, a, c), opposite(a, b, c)]
    }

    /// Interior angles in degrees, sorted descending.
    pub fn angles(&self) -> [f64; 3] {
        self.angles_rad().map(f64::to_degrees)
    }

    /// A concrete placement: vertex 0 at the origin, vertex 1 on the positive
    /// x-axis at distance `c`, vertex 2 in the upper half-plane with
    /// |v0 v2| = b and |v1 v2| = a.
    pub fn vertices(&self) -> [Point; 3] {
        let [a, b, c] = self.sides;
        let x = (c * c + b * b - a * a) / (2.0 * c);
        let y = (b * b - x * x).max(0.0).sqrt();
        [Point::ORIGIN, Point::new(c, 0.0), Point::new(x, y)]
    }

    pub fn classify(&self, tol: f64) -> Result<TriangleType> {
        classify_triangle(self.sides, tol)
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.sides;
        write!(f, "({a}, {b}, {c})")
    }
}

/// The triangle types that get special treatment in the counting bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleType {
    Equilateral,
    /// Right angled, but not (90°, 60°, 30°).
    Right,
    #[serde(rename = "right_30_60_90")]
    Right306090,
    /// (120°, 30°, 30°).
    #[serde(rename = "obtuse_120_30_30")]
    T120_30_30,
    /// (4·180/7°, 2·180/7°, 180/7°), the chord triangle of the regular 7-gon.
    #[serde(rename = "heptagonal")]
    T7gon,
    /// (108°, 36°, 36°), the golden gnomon.
    #[serde(rename = "golden_gnomon")]
    Golden108,
    /// (72°, 72°, 36°), the golden triangle.
    #[serde(rename = "golden_triangle")]
    Golden72,
    Generic,
}

impl TriangleType {
    pub const ALL: [TriangleType; 8] = [
        TriangleType::Equilateral,
        TriangleType::Right,
        TriangleType::Right306090,
        TriangleType::T120_30_30,
        TriangleType::T7gon,
        TriangleType::Golden108,
        TriangleType::Golden72,
        TriangleType::Generic,
    ];

    pub fn is_right(self) -> bool {
        matches!(self, TriangleType::Right | TriangleType::Right306090)
    }

    pub fn is_golden(self) -> bool {
        matches!(self, TriangleType::Golden108 | TriangleType::Golden72)
    }

    pub fn name(self) -> &'static str {
        match self {
            TriangleType::Equilateral => "equilateral",
            TriangleType::Right => "right",
            TriangleType::Right306090 => "right_30_60_90",
            TriangleType::T120_30_30 => "obtuse_120_30_30",
            TriangleType::T7gon => "heptagonal",
            TriangleType::Golden108 => "golden_gnomon",
            TriangleType::Golden72 => "golden_triangle",
            TriangleType::Generic => "generic",
        }
    }

    /// Angles (degrees, descending) of the representative triangle for the
    /// named types; `None` for `Right` and `Generic`.
    pub fn angles(self) -> Option<[f64; 3]> {
        Some(match self {
            TriangleType::Equilateral => [60.0, 60.0, 60.0],
            TriangleType::Right306090 => [90.0, 60.0, 30.0],
            TriangleType::T120_30_30 => [120.0, 30.0, 30.0],
            TriangleType::T7gon => [720.0 / 7.0, 360.0 / 7.0, 180.0 / 7.0],
            TriangleType::Golden108 => [108.0, 36.0, 36.0],
            TriangleType::Golden72 => [72.0, 72.0, 36.0],
            TriangleType::Right | TriangleType::Generic => return None,
        })
    }
}

impl fmt::Display for TriangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classifies a triangle by comparing its angles (radians) against the named
/// types. A deviation in `(tol, COARSE_TOL]` from any named type is an error
/// rather than a silent choice.
pub fn classify_triangle(sides: [f64; 3], tol: f64) -> Result<TriangleType> {
    if sides.iter().any(|s| !s.is_finite() || *s <= 0.0) {
        return Err(GeometryError::InvalidSides(sides));
    }
    let mut s = sides;
    s.sort_by(f64::total_cmp);
    if s[0] + s[1] <= s[2] + tol {
        return Err(GeometryError::DegenerateTriangle(s));
    }
    let t = Triangle { sides: s };
    let angles = t.angles_rad();

    let deviation = |kind: TriangleType| -> f64 {
        match kind.angles() {
            Some(target) => angles
                .iter()
                .zip(target)
                .map(|(a, t)| (a - t.to_radians()).abs())
                .fold(0.0, f64::max),
            None => (angles[0] - PI / 2.0).abs(),
        }
    };

    let order = [
        TriangleType::Equilateral,
        TriangleType::Right306090,
        TriangleType::Right,
        TriangleType::T120_30_30,
        TriangleType::T7gon,
        TriangleType::Golden108,
        TriangleType::Golden72,
    ];
    for kind in order {
        let d = deviation(kind);
        if d > tol && d <= COARSE_TOL {
            return Err(GeometryError::AmbiguousClassification {
                candidate: kind,
                deviation: d,
            });
        }
    }
    Ok(order
        .into_iter()
        .find(|&k| deviation(k) <= tol)
        .unwrap_or(TriangleType::Generic))
}

/// Slack parameters for approximate congruence.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ToleranceParams {
    /// Relative slack ε.
    pub eps: f64,
    /// Absolute tolerance for length comparisons.
    pub tol: f64,
}

impl Default for ToleranceParams {
    fn default() -> Self {
        ToleranceParams {
            eps: 0.01,
            tol: DEFAULT_TOL,
        }
    }
}

impl ToleranceParams {
    pub fn new(eps: f64, tol: f64) -> Self {
        ToleranceParams { eps, tol }
    }

    /// ε′ = ε · min side.
    pub fn eps_prime(&self, t: &Triangle) -> f64 {
        self.eps * t.min_side()
    }
}

/// A finite ordered planar point set.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct PointConfig {
    pub points: Vec<Point>,
    /// Whether coincident points are acceptable (placement searches allow
    /// them, counting does not).
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub allow_coincident: bool,
}

impl PointConfig {
    pub fn new(points: Vec<Point>) -> Self {
        PointConfig {
            points,
            allow_coincident: false,
        }
    }

    pub fn permissive(points: Vec<Point>) -> Self {
        PointConfig {
            points,
            allow_coincident: true,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Regular `k`-gon with the given side length, centered at the origin,
    /// vertex `i` at angle 90° + i·360°/k (counter-clockwise from the top).
    pub fn regular_polygon(k: usize, side: f64) -> Self {
        let radius = side / (2.0 * (PI / k as f64).sin());
        let points = (0..k)
            .map(|i| Point::polar(radius, PI / 2.0 + 2.0 * PI * (i + 1) as f64 / k as f64))
            .collect();
        PointConfig::new(points)
    }

    /// Checks finiteness and, unless coincidences are allowed, pairwise
    /// separation by more than `tol`.
    pub fn validate(&self, tol: f64) -> Result<()> {
        for (i, p) in self.points.iter().enumerate() {
            if !p.is_finite() {
                return Err(GeometryError::NonFinite(i));
            }
        }
        if !self.allow_coincident {
            self.check_distinct(tol)?;
        }
        Ok(())
    }

    pub fn check_distinct(&self, tol: f64) -> Result<()> {
        for (i, j) in (0..self.len()).tuple_combinations() {
            if self.points[i].dist(self.points[j]) <= tol {
                return Err(GeometryError::CoincidentPoints(i, j));
            }
        }
        Ok(())
    }

    pub fn scaled(&self, k: f64) -> Self {
        PointConfig {
            points: self.points.iter().map(|&p| p * k).collect(),
            allow_coincident: self.allow_coincident,
        }
    }

    pub fn pairwise_distances(&self) -> impl Iterator<Item = f64> + '_ {
        self.points
            .iter()
            .tuple_combinations()
            .map(|(p, q)| p.dist(*q))
    }
}

/// The clustered set of distinct pairwise distances.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceProfile {
    pub values: Vec<f64>,
    pub multiplicity: Vec<usize>,
}

impl DistanceProfile {
    /// The `s` in "s-distance set".
    pub fn distinct(&self) -> usize {
        self.values.len()
    }
}

/// Intersections of two circles in closed form. Tangency within `tol` yields a
/// single point.
pub fn circle_intersections(c1: Point, r1: f64, c2: Point, r2: f64, tol: f64) -> Result<Vec<Point>> {
    let d = c1.dist(c2);
    if d <= tol {
        return Err(GeometryError::ConcentricCircles(d));
    }
    let outer = r1 + r2;
    let inner = (r1 - r2).abs();
    if d > outer + tol || d < inner - tol {
        return Ok(Vec::new());
    }
    let u = (c2 - c1) * (1.0 / d);
    let along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    if (d - outer).abs() <= tol || (d - inner).abs() <= tol {
        return Ok(vec![c1 + u * along]);
    }
    let h = (r1 * r1 - along * along).max(0.0).sqrt();
    let perp = Point::new(-u.y, u.x);
    let foot = c1 + u * along;
    Ok(vec![foot + perp * h, foot - perp * h])
}

/// Every point whose distances to both `p` and `q` lie in `dists`,
/// deduplicated within `tol`.
pub fn candidate_positions(p: Point, q: Point, dists: &[f64], tol: f64) -> Result<Vec<Point>> {
    let mut out: Vec<Point> = Vec::new();
    for &r1 in dists {
        for &r2 in dists {
            for x in circle_intersections(p, r1, q, r2, tol)? {
                if out.iter().all(|y| y.dist(x) > tol) {
                    out.push(x);
                }
            }
        }
    }
    Ok(out)
}

fn sorted_sides(p: Point, q: Point, r: Point) -> [f64; 3] {
    let mut s = [q.dist(r), p.dist(r), p.dist(q)];
    s.sort_by(f64::total_cmp);
    s
}

/// Largest deviation between the sorted side lengths of `pqr` and those of `t`.
/// Returns infinity for collinear or coincident triples.
pub fn congruence_residual(p: Point, q: Point, r: Point, t: &Triangle, tol: f64) -> f64 {
    let s = sorted_sides(p, q, r);
    if s[0] + s[1] <= s[2] + tol {
        return f64::INFINITY;
    }
    s.iter()
        .zip(t.sides())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

/// Exact congruence (reflections included) within `tol`.
pub fn is_congruent(p: Point, q: Point, r: Point, t: &Triangle, tol: f64) -> bool {
    congruence_residual(p, q, r, t, tol) <= tol
}

/// Radius of the smallest disk containing three points.
fn enclosing_radius(a: Point, b: Point, c: Point) -> f64 {
    let ab = a.dist(b);
    let bc = b.dist(c);
    let ca = c.dist(a);
    let (long, u, v, w) = if ab >= bc && ab >= ca {
        (ab, a, b, c)
    } else if bc >= ca {
        (bc, b, c, a)
    } else {
        (ca, c, a, b)
    };
    // Right or obtuse at w (or degenerate): the long side is a diameter.
    if (u - w).dot(v - w) <= 0.0 {
        return long / 2.0;
    }
    let area2 = (v - u).cross(w - u).abs();
    if area2 == 0.0 {
        return long / 2.0;
    }
    ab * bc * ca / (2.0 * area2)
}

/// Minimax error of matching `pts[i]` to `model[i]` after rotating the model
/// by `angle`; the translation is solved exactly as an enclosing-circle radius.
fn residual_at(pts: &[Point; 3], model: &[Point; 3], angle: f64) -> f64 {
    let d = [0, 1, 2].map(|i| pts[i] - model[i].rotate(angle));
    enclosing_radius(d[0], d[1], d[2])
}

fn procrustes_angle(pts: &[Point; 3], model: &[Point; 3]) -> f64 {
    let cp = (pts[0] + pts[1] + pts[2]) * (1.0 / 3.0);
    let cm = (model[0] + model[1] + model[2]) * (1.0 / 3.0);
    let (mut s, mut c) = (0.0, 0.0);
    for i in 0..3 {
        let a = model[i] - cm;
        let b = pts[i] - cp;
        s += a.cross(b);
        c += a.dot(b);
    }
    s.atan2(c)
}

fn golden_section(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > ROTATION_RESOLUTION {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// All 12 labeled placements of `t`: six vertex orders times two orientations.
fn labeled_models(t: &Triangle) -> Vec<[Point; 3]> {
    let base = t.vertices();
    let mut out = Vec::with_capacity(12);
    for perm in (0..3).permutations(3) {
        let m = [base[perm[0]], base[perm[1]], base[perm[2]]];
        out.push(m);
        out.push(m.map(Point::reflect));
    }
    out
}

fn labeling_admissible(pts: &[Point; 3], model: &[Point; 3], slack: f64) -> bool {
    [(0, 1), (1, 2), (0, 2)]
        .iter()
        .all(|&(i, j)| (pts[i].dist(pts[j]) - model[i].dist(model[j])).abs() <= slack)
}

fn minimize_rotation(pts: &[Point; 3], model: &[Point; 3], stop_below: f64) -> f64 {
    let f = |a: f64| residual_at(pts, model, a);
    let seed = procrustes_angle(pts, model);
    let mut best = f(seed);
    if best <= stop_below {
        return best;
    }
    let step = 2.0 * PI / ROTATION_SEEDS as f64;
    let mut seeds: Vec<(f64, f64)> = (0..ROTATION_SEEDS)
        .map(|k| {
            let a = k as f64 * step;
            (a, f(a))
        })
        .collect();
    seeds.push((seed, best));
    seeds.sort_by(|a, b| a.1.total_cmp(&b.1));
    for &(a, _) in seeds.iter().take(3) {
        let (_, v) = golden_section(f, a - step, a + step);
        best = best.min(v);
        if best <= stop_below {
            break;
        }
    }
    best
}

/// Minimax rigid registration error: the smallest `r` such that some placed
/// congruent copy of `t` (any labeling, either orientation) has its vertices
/// within `r` of `p`, `q`, `r` respectively.
pub fn registration_error(p: Point, q: Point, r: Point, t: &Triangle) -> f64 {
    let pts = [p, q, r];
    labeled_models(t)
        .iter()
        .map(|m| minimize_rotation(&pts, m, f64::NEG_INFINITY))
        .fold(f64::INFINITY, f64::min)
}

/// ε-congruence test via minimax registration, with a side-length filter
/// in front of it.
pub fn is_eps_congruent(p: Point, q: Point, r: Point, t: &Triangle, params: &ToleranceParams) -> bool {
    let eps_prime = params.eps_prime(t);
    let slack = 2.0 * eps_prime;
    let s = sorted_sides(p, q, r);
    if s.iter().zip(t.sides()).any(|(a, b)| (a - b).abs() > slack) {
        return false;
    }
    let pts = [p, q, r];
    labeled_models(t)
        .iter()
        .filter(|m| labeling_admissible(&pts, m, slack))
        .any(|m| minimize_rotation(&pts, m, eps_prime) <= eps_prime)
}

/// Whether to count exactly congruent or ε-congruent triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CongruenceMode {
    Exact,
    Eps,
}

/// The 3-graph on the points of `config` whose edges are the triples
/// congruent (or ε-congruent) to `t`.
pub fn congruence_hypergraph(
    config: &PointConfig,
    t: &Triangle,
    params: &ToleranceParams,
    mode: CongruenceMode,
) -> Result<ThreeGraph> {
    for (i, p) in config.points.iter().enumerate() {
        if !p.is_finite() {
            return Err(GeometryError::NonFinite(i));
        }
    }
    config.check_distinct(params.tol)?;
    let pts = &config.points;
    let mut g = ThreeGraph::empty(pts.len());
    for (i, j, k) in (0..pts.len()).tuple_combinations() {
        let hit = match mode {
            CongruenceMode::Exact => is_congruent(pts[i], pts[j], pts[k], t, params.tol),
            CongruenceMode::Eps => is_eps_congruent(pts[i], pts[j], pts[k], t, params),
        };
        if hit {
            g.add_edge([i, j, k]);
        }
    }
    Ok(g)
}

/// Distinct pairwise distances, clustered by single linkage with gap `2·tol`.
pub fn distance_profile(config: &PointConfig, tol: f64) -> DistanceProfile {
    let mut d: Vec<f64> = config.pairwise_distances().collect();
    d.sort_by(f64::total_cmp);
    let mut values = Vec::new();
    let mut multiplicity = Vec::new();
    let mut cluster: Vec<f64> = Vec::new();
    for x in d {
        if let Some(&last) = cluster.last() {
            if x - last > 2.0 * tol {
                values.push(cluster.iter().sum::<f64>() / cluster.len() as f64);
                multiplicity.push(cluster.len());
                cluster.clear();
            }
        }
        cluster.push(x);
    }
    if !cluster.is_empty() {
        values.push(cluster.iter().sum::<f64>() / cluster.len() as f64);
        multiplicity.push(cluster.len());
    }
    DistanceProfile { values, multiplicity }
}

/// diam(P) / min pairwise distance.
pub fn diameter_min_ratio(config: &PointConfig) -> Result<f64> {
    if config.len() < 2 {
        return Err(GeometryError::TooFewPoints {
            needed: 2,
            got: config.len(),
        });
    }
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for (i, j) in (0..config.len()).tuple_combinations() {
        let d = config.points[i].dist(config.points[j]);
        if d == 0.0 {
            return Err(GeometryError::CoincidentPoints(i, j));
        }
        lo = lo.min(d);
        hi = hi.max(d);
    }
    Ok(hi / lo)
}
