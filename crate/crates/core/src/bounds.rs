//! Cluster constructions (lower bounds) and the assembled upper bounds on the
//! number of ε-congruent copies of a triangle among `n` points.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::geometry::{
    congruence_hypergraph, is_congruent, CongruenceMode, GeometryError, Point, PointConfig, ToleranceParams,
    Triangle, TriangleType, DEFAULT_TOL,
};
use crate::hypergraph::ThreeGraph;
use crate::lagrangian::{certify_upper_bound, maximize, LagrangianError, DEFAULT_CERTIFY_DEPTH, DEFAULT_MAX_ITERS};
use crate::realizability::{realizable_point_sets, RealizabilityError, REALIZABLE_MAX_SIZE};

pub use crate::turan::s_of_n;

/// Default relative slack ε for constructions.
pub const DEFAULT_EPS: f64 = 0.01;

/// Slack added to the Lagrangian maximum before certifying it.
pub const CERTIFY_SLACK: f64 = 1e-6;

/// Tolerance for matching a computed Lagrangian maximum to its closed form.
const CLOSED_FORM_TOL: f64 = 1e-9;

const LAGRANGIAN_RESTARTS: usize = 60;

const FALGAS_RAVRY_VAUGHAN: &str = "V. Falgas-Ravry and E. R. Vaughan, Applications of the semi-definite \
method to the Turán density problem for 3-graphs, Combinatorics, Probability and Computing 22 (2013) 21-54";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("construction {kind} needs n divisible by {divisor}, got {n}")]
    DivisibilityViolation { kind: ConstructionKind, n: usize, divisor: usize },
    #[error("construction {kind} does not apply to a triangle of type {found}")]
    TypeMismatch { kind: ConstructionKind, found: TriangleType },
    #[error("construction {kind} has {expected} clusters, got {got} sizes")]
    SizeCount { kind: ConstructionKind, expected: usize, got: usize },
    #[error("eps {eps} is too large for this construction (margin {margin})")]
    EpsTooLarge { eps: f64, margin: f64 },
    #[error("radius {radius} must be positive and below {limit}")]
    RadiusTooLarge { radius: f64, limit: f64 },
    #[error("unknown construction type `{0}`")]
    UnknownKind(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Realizability(#[from] RealizabilityError),
    #[error(transparent)]
    Lagrangian(#[from] LagrangianError),
}

/// The cluster constructions: (a) rectangle, (b) equilateral triangle with
/// center, (c) regular 7-gon, (d) regular pentagon, (e) the triangle itself,
/// and the balanced split for equilateral triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionKind {
    A,
    B,
    C,
    D,
    E,
    Equilateral,
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 6] = [
        ConstructionKind::A,
        ConstructionKind::B,
        ConstructionKind::C,
        ConstructionKind::D,
        ConstructionKind::E,
        ConstructionKind::Equilateral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::A => "a",
            ConstructionKind::B => "b",
            ConstructionKind::C => "c",
            ConstructionKind::D => "d",
            ConstructionKind::E => "e",
            ConstructionKind::Equilateral => "equilateral",
        }
    }

    /// The `n` for which the construction is balanced exactly.
    pub fn divisor(self) -> usize {
        match self {
            ConstructionKind::A => 4,
            ConstructionKind::B => 9,
            ConstructionKind::C => 7,
            ConstructionKind::D => 5,
            ConstructionKind::E => 3,
            ConstructionKind::Equilateral => 1,
        }
    }

    pub fn cluster_count(self) -> usize {
        match self {
            ConstructionKind::A | ConstructionKind::B => 4,
            ConstructionKind::C => 7,
            ConstructionKind::D => 5,
            ConstructionKind::E | ConstructionKind::Equilateral => 3,
        }
    }

    pub fn applies_to(self, kind: TriangleType) -> bool {
        match self {
            ConstructionKind::A => kind.is_right(),
            ConstructionKind::B => kind == TriangleType::T120_30_30,
            ConstructionKind::C => kind == TriangleType::T7gon,
            ConstructionKind::D => kind.is_golden(),
            ConstructionKind::E => true,
            ConstructionKind::Equilateral => kind == TriangleType::Equilateral,
        }
    }

    /// The construction matching the upper bound for a triangle type.
    pub fn for_type(kind: TriangleType) -> ConstructionKind {
        match kind {
            TriangleType::Equilateral => ConstructionKind::Equilateral,
            TriangleType::Right | TriangleType::Right306090 => ConstructionKind::A,
            TriangleType::T120_30_30 => ConstructionKind::B,
            TriangleType::T7gon => ConstructionKind::C,
            TriangleType::Golden108 | TriangleType::Golden72 => ConstructionKind::D,
            TriangleType::Generic => ConstructionKind::E,
        }
    }

    /// Cluster sizes for `n` divisible by [`ConstructionKind::divisor`].
    fn exact_sizes(self, n: usize) -> Vec<usize> {
        match self {
            ConstructionKind::B => vec![2 * n / 9, 2 * n / 9, 2 * n / 9, n / 3],
            ConstructionKind::Equilateral => vec![n / 3, (n + 1) / 3, (n + 2) / 3],
            k => vec![n / k.cluster_count(); k.cluster_count()],
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionKind {
    type Err = BoundsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConstructionKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| BoundsError::UnknownKind(s.to_string()))
    }
}

/// How cluster sizes are chosen when `n` misses the divisibility condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SizePolicy {
    /// Refuse with [`BoundsError::DivisibilityViolation`].
    Exact,
    /// Hand out the remainder one point at a time, each to the cluster that
    /// raises the count most (lowest index on ties). A heuristic, not a
    /// proven optimum.
    Greedy,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClusterConstruction {
    pub kind: ConstructionKind,
    pub triangle: Triangle,
    pub centers: PointConfig,
    pub sizes: Vec<usize>,
    pub radius: f64,
    pub eps: f64,
    /// Smallest side deviation of a non-congruent center triple (repeats
    /// allowed) from `triangle`.
    pub margin: f64,
}

fn center_points(kind: ConstructionKind, t: &Triangle) -> Vec<Point> {
    let [s0, s1, s2] = t.sides();
    match kind {
        ConstructionKind::A => vec![
            Point::ORIGIN,
            Point::new(s0, 0.0),
            Point::new(s0, s1),
            Point::new(0.0, s1),
        ],
        ConstructionKind::B => {
            let mut pts = PointConfig::regular_polygon(3, s2).points;
            pts.push(Point::ORIGIN);
            pts
        }
        ConstructionKind::C => PointConfig::regular_polygon(7, s0).points,
        ConstructionKind::D => PointConfig::regular_polygon(5, s0).points,
        ConstructionKind::E | ConstructionKind::Equilateral => t.vertices().to_vec(),
    }
}

/// Congruent center triples.
fn congruent_triples(centers: &[Point], t: &Triangle) -> Vec<[usize; 3]> {
    (0..centers.len())
        .tuple_combinations()
        .filter(|&(i, j, k)| is_congruent(centers[i], centers[j], centers[k], t, DEFAULT_TOL))
        .map(|(i, j, k)| [i, j, k])
        .collect()
}

fn sorted_deviation(p: Point, q: Point, r: Point, t: &Triangle) -> f64 {
    let mut s = [q.dist(r), p.dist(r), p.dist(q)];
    s.sort_by(f64::total_cmp);
    s.iter().zip(t.sides()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}

/// Smallest sorted-side deviation from `t` over center multisets of size 3
/// that are not congruent to `t`.
fn center_margin(centers: &[Point], t: &Triangle) -> f64 {
    (0..centers.len())
        .combinations_with_replacement(3)
        .map(|c| (centers[c[0]], centers[c[1]], centers[c[2]]))
        .filter(|&(p, q, r)| !is_congruent(p, q, r, t, DEFAULT_TOL))
        .map(|(p, q, r)| sorted_deviation(p, q, r, t))
        .fold(f64::INFINITY, f64::min)
}

fn product_count(sizes: &[usize], triples: &[[usize; 3]]) -> u64 {
    triples
        .iter()
        .map(|e| e.iter().map(|&i| sizes[i] as u64).product::<u64>())
        .sum()
}

impl ClusterConstruction {
    /// Construction of the given kind with explicit cluster sizes.
    pub fn with_sizes(kind: ConstructionKind, t: &Triangle, sizes: Vec<usize>, eps: f64) -> Result<Self, BoundsError> {
        let found = t.classify(DEFAULT_TOL)?;
        if !kind.applies_to(found) {
            return Err(BoundsError::TypeMismatch { kind, found });
        }
        if sizes.len() != kind.cluster_count() {
            return Err(BoundsError::SizeCount {
                kind,
                expected: kind.cluster_count(),
                got: sizes.len(),
            });
        }
        let centers = center_points(kind, t);
        let margin = center_margin(&centers, t);
        let eps_prime = eps * t.min_side();
        let radius = (eps_prime / 4.0).min(margin / 8.0);
        if eps.is_nan() || eps <= 0.0 || margin - 2.0 * radius <= 2.0 * eps_prime {
            return Err(BoundsError::EpsTooLarge { eps, margin });
        }
        Ok(ClusterConstruction {
            kind,
            triangle: *t,
            centers: PointConfig::new(centers),
            sizes,
            radius,
            eps,
            margin,
        })
    }

    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Concrete points: `sizes[i]` uniform random points in the radius disk
    /// around center `i`.
    pub fn sample_points(&self, seed: u64) -> PointConfig {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pts = Vec::with_capacity(self.n());
        for (c, &k) in self.centers.points.iter().zip(&self.sizes) {
            for _ in 0..k {
                let r = self.radius * rng.random::<f64>().sqrt();
                let a = 2.0 * PI * rng.random::<f64>();
                pts.push(*c + Point::polar(r, a));
            }
        }
        PointConfig::new(pts)
    }

    /// Points placed deterministically on a sunflower spiral inside each
    /// disk.
    pub fn spiral_points(&self) -> PointConfig {
        let mut pts = Vec::with_capacity(self.n());
        for (c, &k) in self.centers.points.iter().zip(&self.sizes) {
            pts.extend(spiral(*c, k, self.radius));
        }
        PointConfig::new(pts)
    }
}

/// The golden angle.
fn golden_angle() -> f64 {
    PI * (3.0 - 5f64.sqrt())
}

/// `k` distinct points strictly inside the disk of radius `radius` around
/// `center`.
fn spiral(center: Point, k: usize, radius: f64) -> impl Iterator<Item = Point> {
    (0..k).map(move |j| center + Point::polar(0.9 * radius * ((j as f64 + 0.5) / k as f64).sqrt(), j as f64 * golden_angle()))
}

/// Builds construction `kind` for `t` on `n` points.
pub fn build_construction(
    kind: ConstructionKind,
    t: &Triangle,
    n: usize,
    policy: SizePolicy,
    eps: f64,
) -> Result<ClusterConstruction, BoundsError> {
    let d = kind.divisor();
    let sizes = if n.is_multiple_of(d) {
        kind.exact_sizes(n)
    } else if policy == SizePolicy::Exact {
        return Err(BoundsError::DivisibilityViolation { kind, n, divisor: d });
    } else {
        let base = n - n % d;
        let mut sizes = kind.exact_sizes(base);
        let triples = congruent_triples(&center_points(kind, t), t);
        for _ in base..n {
            let best = (0..sizes.len())
                .max_by_key(|&i| {
                    let mut s = sizes.clone();
                    s[i] += 1;
                    (product_count(&s, &triples), std::cmp::Reverse(i))
                })
                .expect("clusters exist");
            sizes[best] += 1;
        }
        sizes
    };
    ClusterConstruction::with_sizes(kind, t, sizes, eps)
}

/// Σ over congruent center triples of the product of cluster sizes.
pub fn count_construction(c: &ClusterConstruction, t: &Triangle) -> u64 {
    product_count(&c.sizes, &congruent_triples(&c.centers.points, t))
}

/// Places random points in the cluster disks and counts ε-congruent triples
/// directly.
pub fn sample_and_recount(c: &ClusterConstruction, t: &Triangle, eps: f64, seed: u64) -> Result<u64, BoundsError> {
    let eps_prime = eps * t.min_side();
    if c.radius > eps_prime / 4.0 || c.margin - 2.0 * c.radius <= 2.0 * eps_prime {
        return Err(BoundsError::EpsTooLarge { eps, margin: c.margin });
    }
    let params = ToleranceParams::new(eps, DEFAULT_TOL);
    let g = congruence_hypergraph(&c.sample_points(seed), t, &params, CongruenceMode::Eps)?;
    Ok(g.edge_count() as u64)
}

/// Replaces every point of `p` by `counts_per_point` points inside the disk
/// of the given radius around it.
pub fn blow_up(p: &PointConfig, counts_per_point: usize, radius: f64) -> Result<PointConfig, BoundsError> {
    let min = p.pairwise_distances().fold(f64::INFINITY, f64::min);
    let limit = min / 4.0;
    if !(radius > 0.0 && radius < limit) {
        return Err(BoundsError::RadiusTooLarge { radius, limit });
    }
    Ok(PointConfig::new(
        p.points
            .iter()
            .flat_map(|&c| spiral(c, counts_per_point, radius))
            .collect(),
    ))
}

/// A nonnegative rational, serialized as `"num/den"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rational {
    pub num: u64,
    pub den: u64,
}

impl Rational {
    pub const fn new(num: u64, den: u64) -> Self {
        Rational { num, den }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `self · n³` as a float (exact at the sizes used here).
    pub fn times_cube(self, n: usize) -> f64 {
        (self.num as u128 * (n as u128).pow(3)) as f64 / self.den as f64
    }

    /// ⌊self · n³⌋.
    pub fn floor_times_cube(self, n: usize) -> u64 {
        (self.num as u128 * (n as u128).pow(3) / self.den as u128) as u64
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A Turán density used (not proved) by the toolkit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CitedConstant {
    pub name: &'static str,
    pub value: Rational,
    pub citation: &'static str,
}

pub const PI_F32_J4: CitedConstant = CitedConstant {
    name: "pi(F32,J4)",
    value: Rational::new(3, 8),
    citation: FALGAS_RAVRY_VAUGHAN,
};

pub const PI_K4MINUS_F32_C5: CitedConstant = CitedConstant {
    name: "pi(K4_3minus,F32,C5)",
    value: Rational::new(12, 49),
    citation: FALGAS_RAVRY_VAUGHAN,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Provenance {
    SelfContained,
    ExternalCitation(CitedConstant),
}

/// The Lagrangian route: the largest `λ(H(T, P))` over the realizable point
/// sets, matched against its closed form and certified.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LagrangianAnalysis {
    pub configurations: usize,
    pub distinct_hypergraphs: usize,
    pub lambda_max: f64,
    pub closed_form: Rational,
    /// Every hypergraph certified `λ ≤ closed_form + certified_slack`.
    pub certified: bool,
    pub certified_slack: f64,
}

impl LagrangianAnalysis {
    pub fn matches_closed_form(&self) -> bool {
        (self.lambda_max - self.closed_form.to_f64()).abs() <= CLOSED_FORM_TOL
    }
}

/// Runs the Lagrangian route for `t` against the closed form `density`.
pub fn analyze_lagrangian(t: &Triangle, density: Rational) -> Result<LagrangianAnalysis, BoundsError> {
    let configs = realizable_point_sets(t, REALIZABLE_MAX_SIZE)?;
    let params = ToleranceParams::default();
    let mut graphs: Vec<ThreeGraph> = Vec::new();
    for c in &configs {
        let h = congruence_hypergraph(c, t, &params, CongruenceMode::Exact)?;
        let canon = h.canonical_form().expect("at most 8 points");
        if !graphs.contains(&canon) {
            graphs.push(canon);
        }
    }
    let mut lambda_max: f64 = 0.0;
    let mut certified = true;
    let target = density.to_f64() + CERTIFY_SLACK;
    for h in &graphs {
        lambda_max = lambda_max.max(maximize(h, LAGRANGIAN_RESTARTS, DEFAULT_MAX_ITERS).lower);
        certified &= certify_upper_bound(h, target, DEFAULT_CERTIFY_DEPTH)?;
    }
    Ok(LagrangianAnalysis {
        configurations: configs.len(),
        distinct_hypergraphs: graphs.len(),
        lambda_max,
        closed_form: density,
        certified,
        certified_slack: CERTIFY_SLACK,
    })
}

/// How the upper bound for a triangle type is obtained.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TriangleBounds {
    pub triangle: Triangle,
    pub triangle_type: TriangleType,
    pub construction: ConstructionKind,
    /// `h(n, T) ≤ density · n³`; `None` for equilateral triangles, where the
    /// bound is `s(n)`.
    pub density: Option<Rational>,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analysis: Option<LagrangianAnalysis>,
}

impl TriangleBounds {
    pub fn new(t: &Triangle) -> Result<Self, BoundsError> {
        let kind = t.classify(DEFAULT_TOL)?;
        let (density, provenance) = match kind {
            TriangleType::Equilateral => (None, Provenance::SelfContained),
            TriangleType::Right306090 => (Some(Rational::new(1, 16)), Provenance::SelfContained),
            TriangleType::Right => (Some(Rational::new(1, 16)), Provenance::ExternalCitation(PI_F32_J4)),
            TriangleType::T120_30_30 => (Some(Rational::new(4, 81)), Provenance::SelfContained),
            TriangleType::T7gon => (Some(Rational::new(2, 49)), Provenance::ExternalCitation(PI_K4MINUS_F32_C5)),
            TriangleType::Golden108 | TriangleType::Golden72 => (Some(Rational::new(1, 25)), Provenance::SelfContained),
            TriangleType::Generic => (Some(Rational::new(1, 27)), Provenance::SelfContained),
        };
        let analysis = match (density, provenance) {
            (Some(d), Provenance::SelfContained) => Some(analyze_lagrangian(t, d)?),
            _ => None,
        };
        Ok(TriangleBounds {
            triangle: *t,
            triangle_type: kind,
            construction: ConstructionKind::for_type(kind),
            density,
            provenance,
            analysis,
        })
    }

    /// Whether the self-contained route reproduced its closed form.
    pub fn route_verified(&self) -> bool {
        self.analysis
            .as_ref()
            .is_none_or(|a| a.certified && a.matches_closed_form())
    }

    pub fn report(&self, n: usize) -> Result<BoundReport, BoundsError> {
        let lower = if n == 0 {
            0
        } else {
            let c = build_construction(self.construction, &self.triangle, n, SizePolicy::Greedy, DEFAULT_EPS)?;
            count_construction(&c, &self.triangle)
        };
        let (upper, upper_floor) = match self.density {
            Some(d) if self.route_verified() => (d.times_cube(n), d.floor_times_cube(n)),
            Some(_) => {
                // The closed form was not reproduced; fall back to the
                // certified numeric bound.
                let a = self.analysis.as_ref().expect("self-contained routes carry an analysis");
                let v = (a.lambda_max + a.certified_slack) * (n as f64).powi(3);
                (v, v.floor() as u64)
            }
            None => {
                let s = s_of_n(n as u64);
                (s as f64, s)
            }
        };
        Ok(BoundReport {
            triangle_type: self.triangle_type,
            n,
            construction: self.construction,
            lower,
            upper,
            upper_floor,
            density: self.density,
            upper_provenance: self.provenance,
            divisible: n.is_multiple_of(self.construction.divisor()),
            route_verified: self.route_verified(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub triangle_type: TriangleType,
    pub n: usize,
    pub construction: ConstructionKind,
    /// Exact triangle count of the construction.
    pub lower: u64,
    pub upper: f64,
    /// ⌊upper⌋, since counts are integers.
    pub upper_floor: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub density: Option<Rational>,
    pub upper_provenance: Provenance,
    /// Whether `n` meets the divisibility condition of the construction.
    pub divisible: bool,
    pub route_verified: bool,
}

impl BoundReport {
    /// `upper_floor - lower`; zero means the bound is attained.
    pub fn gap(&self) -> u64 {
        self.upper_floor.saturating_sub(self.lower)
    }
}

/// Lower and upper bound on `h(n, T)`.
pub fn upper_bound(t: &Triangle, n: usize) -> Result<BoundReport, BoundsError> {
    TriangleBounds::new(t)?.report(n)
}
