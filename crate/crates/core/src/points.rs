//! Point configurations in projective space: normalization, validation,
//! seeded sampling of "very general" surrogates, star configurations,
//! quadric membership, and rank-greedy generic subsets.
//!
//! Sampled configurations are surrogates for very general points; the
//! crate reports genericity observations and never certifies them.

use std::collections::HashSet;

use num_integer::Integer as IntegerTrait;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{self, ExactMatrix};
use crate::multiindex::monomials_of_degree;
use crate::{binomial, Integer, Rational};

/// A point of P^N in canonical form: integer coordinates with gcd 1,
/// first nonzero coordinate positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: Vec<Integer>,
}

impl ProjectivePoint {
    /// Ambient dimension N (one less than the coordinate count).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Integer] {
        &self.coords
    }

    pub fn coords_rational(&self) -> Vec<Rational> {
        self.coords
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect()
    }
}

/// Canonical representative of a projective class.
///
/// Clears denominators, divides by the coordinate gcd, and fixes the
/// sign so the first nonzero coordinate is positive. Idempotent and
/// invariant under scaling the input by any nonzero rational.
pub fn normalize_point(raw: &[Rational]) -> Result<ProjectivePoint> {
    if raw.is_empty() || raw.iter().all(|c| c.is_zero()) {
        return Err(Error::InvalidPoint);
    }
    let mut l = Integer::one();
    for c in raw {
        l = l.lcm(c.denom());
    }
    let mut ints: Vec<Integer> = raw.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let mut g = Integer::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    for c in ints.iter_mut() {
        *c = &*c / &g;
    }
    if ints.iter().find(|c| !c.is_zero()).unwrap().is_negative() {
        for c in ints.iter_mut() {
            *c = -&*c;
        }
    }
    Ok(ProjectivePoint { coords: ints })
}

/// Normalize integer coordinates directly.
pub fn normalize_point_ints(raw: &[i64]) -> Result<ProjectivePoint> {
    let rats: Vec<Rational> = raw.iter().map(|&v| Rational::from_integer(v.into())).collect();
    normalize_point(&rats)
}

/// A finite configuration of distinct points in P^N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    dim: usize,
    points: Vec<ProjectivePoint>,
    label: String,
}

/// A single invariant violation found by [`PointConfig::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Duplicate { first: usize, second: usize },
    DimensionMismatch { index: usize, expected: usize, found: usize },
    EmptyConfig,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Duplicate { first, second } => {
                write!(f, "duplicate point at indices ({}, {})", first, second)
            }
            Violation::DimensionMismatch { index, expected, found } => write!(
                f,
                "point {} lives in P^{} but the configuration is in P^{}",
                index, found, expected
            ),
            Violation::EmptyConfig => write!(f, "configuration has no points"),
        }
    }
}

impl PointConfig {
    pub fn new(dim: usize, points: Vec<ProjectivePoint>, label: impl Into<String>) -> Self {
        PointConfig {
            dim,
            points,
            label: label.into(),
        }
    }

    /// Build from raw rational coordinate rows, normalizing each.
    pub fn from_rational_rows(dim: usize, rows: &[Vec<Rational>], label: impl Into<String>) -> Result<Self> {
        let mut points = Vec::with_capacity(rows.len());
        for row in rows {
            points.push(normalize_point(row)?);
        }
        Ok(PointConfig::new(dim, points, label))
    }

    pub fn from_int_rows(dim: usize, rows: &[&[i64]], label: impl Into<String>) -> Result<Self> {
        let mut points = Vec::with_capacity(rows.len());
        for row in rows {
            points.push(normalize_point_ints(row)?);
        }
        Ok(PointConfig::new(dim, points, label))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// All invariant violations; empty means the configuration is valid.
    /// Violations are data, not faults.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.points.is_empty() {
            out.push(Violation::EmptyConfig);
        }
        for (i, p) in self.points.iter().enumerate() {
            if p.dim() != self.dim {
                out.push(Violation::DimensionMismatch {
                    index: i,
                    expected: self.dim,
                    found: p.dim(),
                });
            }
        }
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                if self.points[i] == self.points[j] {
                    out.push(Violation::Duplicate { first: i, second: j });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidConfig(v))
        }
    }

    /// The subconfiguration at the given indices (order preserved).
    pub fn subset(&self, indices: &[usize], label: impl Into<String>) -> PointConfig {
        PointConfig::new(
            self.dim,
            indices.iter().map(|&i| self.points[i].clone()).collect(),
            label,
        )
    }
}

/// Deterministically sample `n` distinct points of P^N with integer
/// coordinates in [-height, height].
///
/// Identical `(n, dim, seed, height)` reproduce the same configuration
/// bit for bit. Fails fast when the coordinate box cannot possibly hold
/// `n` distinct points, and after a bounded number of collisions
/// otherwise (distinct projective classes can run out well before the
/// raw tuple count does).
pub fn sample_config(n: usize, dim: usize, seed: u64, height: u32) -> Result<PointConfig> {
    if n < 1 || dim < 1 || height < 1 {
        return Err(Error::InvalidArgument(
            "need n >= 1, dim >= 1, height >= 1".into(),
        ));
    }
    let tuples = (2u128 * height as u128 + 1).pow(dim as u32 + 1) - 1;
    if tuples < n as u128 {
        return Err(Error::CannotSample {
            requested: n,
            dim,
            height,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<Vec<Integer>> = HashSet::new();
    let mut points = Vec::with_capacity(n);
    let mut attempts = 0usize;
    let max_attempts = 1000 * n + 1000;
    while points.len() < n {
        attempts += 1;
        if attempts > max_attempts {
            return Err(Error::CannotSample {
                requested: n,
                dim,
                height,
            });
        }
        let raw: Vec<i64> = (0..=dim)
            .map(|_| rng.gen_range(-(height as i64)..=height as i64))
            .collect();
        if raw.iter().all(|&c| c == 0) {
            continue;
        }
        let p = normalize_point_ints(&raw)?;
        if seen.insert(p.coords.clone()) {
            points.push(p);
        }
    }
    let label = format!("sample(n={}, N={}, seed={}, height={})", n, dim, seed, height);
    Ok(PointConfig::new(dim, points, label))
}

/// A hyperplane of P^N, stored by normalized coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    coeffs: ProjectivePoint,
}

impl Hyperplane {
    pub fn new(coeffs: &[Rational]) -> Result<Self> {
        Ok(Hyperplane {
            coeffs: normalize_point(coeffs)?,
        })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Ok(Hyperplane {
            coeffs: normalize_point_ints(coeffs)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.coeffs.dim()
    }

    pub fn coeffs(&self) -> &[Integer] {
        self.coeffs.coords()
    }

    /// True iff the point lies on the hyperplane.
    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        let dot: Integer = self
            .coeffs()
            .iter()
            .zip(p.coords())
            .map(|(a, b)| a * b)
            .sum();
        dot.is_zero()
    }
}

/// All k-subsets of {0, .., n-1} in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// The star configuration of a proper hyperplane arrangement: one point
/// for every N-subset of the hyperplanes.
///
/// "Meeting properly" is validated in both directions: every N-subset
/// must intersect in a single point, and no point may lie on N+1 of the
/// hyperplanes.
pub fn star_configuration(hyperplanes: &[Hyperplane]) -> Result<PointConfig> {
    let h = hyperplanes.len();
    if h == 0 {
        return Err(Error::InvalidArgument("no hyperplanes given".into()));
    }
    let dim = hyperplanes[0].dim();
    if hyperplanes.iter().any(|hp| hp.dim() != dim) {
        return Err(Error::InvalidArgument(
            "hyperplanes have mixed ambient dimensions".into(),
        ));
    }
    if h < dim {
        return Err(Error::InvalidArgument(format!(
            "need at least {} hyperplanes in P^{}",
            dim, dim
        )));
    }

    let mut points = Vec::with_capacity(binomial(h, dim));
    for subset in combinations(h, dim) {
        let rows: Vec<Vec<Rational>> = subset
            .iter()
            .map(|&i| {
                hyperplanes[i]
                    .coeffs()
                    .iter()
                    .map(|c| Rational::from_integer(c.clone()))
                    .collect()
            })
            .collect();
        let m = ExactMatrix::from_rows(rows)?;
        let kernel = linalg::kernel_basis(&m);
        if kernel.len() != 1 {
            return Err(Error::ImproperConfiguration(format!(
                "hyperplanes {:?} intersect in dimension {}",
                subset,
                kernel.len().saturating_sub(1)
            )));
        }
        points.push(normalize_point(&kernel[0])?);
    }

    for p in &points {
        let on = hyperplanes.iter().filter(|hp| hp.contains(p)).count();
        if on > dim {
            return Err(Error::ImproperConfiguration(format!(
                "point {:?} lies on {} hyperplanes",
                p.coords(),
                on
            )));
        }
    }

    let cfg = PointConfig::new(dim, points, format!("star({} hyperplanes in P^{})", h, dim));
    cfg.ensure_valid()?;
    Ok(cfg)
}

/// Degree-d evaluation matrix: one row per point, one column per
/// degree-d monomial in deglex order.
pub fn evaluation_matrix(cfg: &PointConfig, degree: u32) -> ExactMatrix {
    let monomials = monomials_of_degree(cfg.dim() + 1, degree);
    let rows: Vec<Vec<Rational>> = cfg
        .points()
        .iter()
        .map(|p| {
            monomials
                .iter()
                .map(|m| Rational::from_integer(m.eval_int(p.coords())))
                .collect()
        })
        .collect();
    ExactMatrix::from_rows(rows).expect("rows are uniform by construction")
}

/// A nonzero quadric through all points, or `None` when the degree-2
/// evaluation matrix has full column rank. Guaranteed to exist whenever
/// n <= binom(N+2, 2) - 1.
pub fn quadric_witness(cfg: &PointConfig) -> Result<Option<Vec<Rational>>> {
    cfg.ensure_valid()?;
    let m = evaluation_matrix(cfg, 2);
    Ok(linalg::kernel_basis(&m).into_iter().next())
}

/// Greedy subset of `t` points maximizing evaluation-matrix rank degree
/// by degree (lexicographically over degrees), ties broken by lowest
/// point index.
pub fn generic_subset(cfg: &PointConfig, t: usize) -> Result<PointConfig> {
    cfg.ensure_valid()?;
    let n = cfg.len();
    if t > n {
        return Err(Error::InvalidArgument(format!(
            "requested subset of {} from {} points",
            t, n
        )));
    }
    let dim = cfg.dim();
    // degrees that can distinguish subsets of size <= t
    let mut d_max = 1u32;
    while binomial(d_max as usize + dim, dim) < t {
        d_max += 1;
    }

    let rank_profile = |indices: &[usize]| -> Vec<usize> {
        let sub = cfg.subset(indices, "");
        (1..=d_max)
            .map(|d| {
                let m = evaluation_matrix(&sub, d);
                linalg::naive_rank(&m)
            })
            .collect()
    };

    let mut selected: Vec<usize> = Vec::with_capacity(t);
    for _ in 0..t {
        let mut best: Option<(Vec<usize>, usize)> = None;
        for cand in 0..n {
            if selected.contains(&cand) {
                continue;
            }
            let mut trial = selected.clone();
            trial.push(cand);
            let profile = rank_profile(&trial);
            match &best {
                Some((bp, _)) if *bp >= profile => {}
                _ => best = Some((profile, cand)),
            }
        }
        selected.push(best.expect("t <= n").1);
    }
    Ok(cfg.subset(&selected, format!("{}[greedy {}]", cfg.label(), t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    pub(crate) fn coordinate_points_p2() -> PointConfig {
        PointConfig::from_int_rows(2, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], "coordinate points P^2")
            .unwrap()
    }

    #[test]
    fn normalize_clears_denominators_and_gcd() {
        let p = normalize_point(&[q(2, 3), q(-4, 3), q(0, 1)]).unwrap();
        assert_eq!(p.coords(), &[Integer::from(1), Integer::from(-2), Integer::from(0)]);
        let p = normalize_point(&[q(0, 1), q(0, 1), q(5, 1)]).unwrap();
        assert_eq!(p.coords(), &[Integer::from(0), Integer::from(0), Integer::from(1)]);
        let p = normalize_point(&[q(-1, 1), q(2, 1), q(-3, 1)]).unwrap();
        assert_eq!(p.coords(), &[Integer::from(1), Integer::from(-2), Integer::from(3)]);
    }

    #[test]
    fn normalize_rejects_zero() {
        assert!(normalize_point(&[q(0, 1), q(0, 1)]).is_err());
    }

    #[test]
    fn normalize_idempotent_and_scaling_invariant() {
        let raw = [q(6, 4), q(-9, 4), q(3, 2)];
        let p = normalize_point(&raw).unwrap();
        let again = normalize_point(&p.coords_rational()).unwrap();
        assert_eq!(p, again);
        for s in [q(7, 3), q(-2, 5), q(11, 1)] {
            let scaled: Vec<Rational> = raw.iter().map(|c| c * &s).collect();
            assert_eq!(normalize_point(&scaled).unwrap(), p);
        }
    }

    #[test]
    fn validate_reports_duplicates_and_mismatches() {
        let cfg = coordinate_points_p2();
        assert!(cfg.is_valid());

        let dup = PointConfig::from_int_rows(2, &[&[1, 0, 0], &[2, 0, 0]], "dup").unwrap();
        assert_eq!(
            dup.validate(),
            vec![Violation::Duplicate { first: 0, second: 1 }]
        );

        let mismatch = PointConfig::new(
            2,
            vec![normalize_point_ints(&[1, 0]).unwrap()],
            "mismatch",
        );
        assert!(matches!(
            mismatch.validate()[0],
            Violation::DimensionMismatch { .. }
        ));
    }

    #[test]
    fn sample_single_point() {
        let cfg = sample_config(1, 2, 7, 10).unwrap();
        assert_eq!(cfg.len(), 1);
        assert!(cfg.is_valid());
    }

    #[test]
    fn sample_deterministic_and_valid() {
        let a = sample_config(3, 2, 42, 10).unwrap();
        let b = sample_config(3, 2, 42, 10).unwrap();
        assert_eq!(a, b);
        assert!(a.is_valid());
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn sample_impossible_height_box() {
        // Exhaustive count of distinct points of P^1 with coordinates in
        // {-1, 0, 1}: enumerate all nonzero tuples and normalize.
        let mut classes = HashSet::new();
        for a in -1i64..=1 {
            for b in -1i64..=1 {
                if (a, b) != (0, 0) {
                    classes.insert(normalize_point_ints(&[a, b]).unwrap());
                }
            }
        }
        assert_eq!(classes.len(), 4);
        // 8 nonzero tuples < 10 requested: pigeonhole rejection up front.
        assert!(matches!(
            sample_config(10, 1, 0, 1),
            Err(Error::CannotSample { .. })
        ));
        // 5 requested exceeds the 4 distinct classes but not the tuple
        // bound; the attempt cap catches it.
        assert!(matches!(
            sample_config(5, 1, 0, 1),
            Err(Error::CannotSample { .. })
        ));
    }

    #[test]
    fn star_of_coordinate_hyperplanes() {
        let hps = vec![
            Hyperplane::from_ints(&[1, 0, 0]).unwrap(),
            Hyperplane::from_ints(&[0, 1, 0]).unwrap(),
            Hyperplane::from_ints(&[0, 0, 1]).unwrap(),
        ];
        let cfg = star_configuration(&hps).unwrap();
        assert_eq!(cfg.len(), 3);
        let expected: HashSet<ProjectivePoint> = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
            .iter()
            .map(|c| normalize_point_ints(&c[..]).unwrap())
            .collect();
        let got: HashSet<ProjectivePoint> = cfg.points().iter().cloned().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn star_of_four_lines() {
        let hps = vec![
            Hyperplane::from_ints(&[1, 0, 0]).unwrap(),
            Hyperplane::from_ints(&[0, 1, 0]).unwrap(),
            Hyperplane::from_ints(&[0, 0, 1]).unwrap(),
            Hyperplane::from_ints(&[1, 1, 1]).unwrap(),
        ];
        let cfg = star_configuration(&hps).unwrap();
        assert_eq!(cfg.len(), 6);
        let expected: HashSet<ProjectivePoint> = [
            [0, 0, 1],
            [0, 1, 0],
            [1, 0, 0],
            [0, 1, -1],
            [1, 0, -1],
            [1, -1, 0],
        ]
        .iter()
        .map(|c| normalize_point_ints(&c[..]).unwrap())
        .collect();
        let got: HashSet<ProjectivePoint> = cfg.points().iter().cloned().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn star_rejects_concurrent_lines() {
        let hps = vec![
            Hyperplane::from_ints(&[1, 0, 0]).unwrap(),
            Hyperplane::from_ints(&[0, 1, 0]).unwrap(),
            Hyperplane::from_ints(&[1, 1, 0]).unwrap(),
        ];
        assert!(matches!(
            star_configuration(&hps),
            Err(Error::ImproperConfiguration(_))
        ));
    }

    #[test]
    fn star_counts_on_random_arrangements() {
        for dim in [2usize, 3] {
            let hmax = if dim == 2 { 6 } else { 5 };
            for h in dim..=hmax {
                let mut rng = ChaCha8Rng::seed_from_u64((dim * 100 + h) as u64);
                let hps: Vec<Hyperplane> = (0..h)
                    .map(|_| {
                        loop {
                            let raw: Vec<i64> =
                                (0..=dim).map(|_| rng.gen_range(-9i64..=9)).collect();
                            if raw.iter().any(|&c| c != 0) {
                                return Hyperplane::from_ints(&raw).unwrap();
                            }
                        }
                    })
                    .collect();
                let cfg = star_configuration(&hps).unwrap();
                assert_eq!(cfg.len(), binomial(h, dim));
            }
        }
    }

    #[test]
    fn quadric_witness_small_configs() {
        // every 5-point config in P^2 lies on a conic
        let cfg = sample_config(5, 2, 11, 10).unwrap();
        let w = quadric_witness(&cfg).unwrap();
        assert!(w.is_some());

        // coordinate points: x0x1 (and friends) vanish on all three
        let w = quadric_witness(&coordinate_points_p2()).unwrap().unwrap();
        let monos = monomials_of_degree(3, 2);
        let cfg = coordinate_points_p2();
        for p in cfg.points() {
            let val: Rational = monos
                .iter()
                .zip(&w)
                .map(|(m, c)| c * Rational::from_integer(m.eval_int(p.coords())))
                .sum();
            assert!(val.is_zero());
        }
    }

    #[test]
    fn quadric_witness_none_for_six_general_points() {
        let cfg = sample_config(6, 2, 5, 10).unwrap();
        let m = evaluation_matrix(&cfg, 2);
        assert_eq!(linalg::naive_rank(&m), 6);
        assert!(quadric_witness(&cfg).unwrap().is_none());
    }

    #[test]
    fn generic_subset_avoids_collinear_triple() {
        // points 0,1,2 collinear on x2 = 0; point 3 off the line
        let cfg = PointConfig::from_int_rows(
            2,
            &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]],
            "3 collinear + 1",
        )
        .unwrap();
        let sub = generic_subset(&cfg, 3).unwrap();
        let m = evaluation_matrix(&sub, 1);
        assert_eq!(linalg::naive_rank(&m), 3);
    }

    #[test]
    fn generic_subset_edges() {
        let cfg = coordinate_points_p2();
        assert_eq!(generic_subset(&cfg, 3).unwrap().points(), cfg.points());
        let one = generic_subset(&cfg, 1).unwrap();
        assert_eq!(one.points()[0], cfg.points()[0]);
        assert!(generic_subset(&cfg, 4).is_err());
    }

    #[test]
    fn multiindex_eval_matches_int_eval() {
        use crate::multiindex::MultiIndex;
        let m = MultiIndex(vec![2, 1, 0]);
        let coords = [Integer::from(3), Integer::from(-2), Integer::from(5)];
        assert_eq!(m.eval_int(&coords), Integer::from(-18));
        let rats: Vec<Rational> = coords.iter().map(|c| Rational::from_integer(c.clone())).collect();
        assert_eq!(m.eval(&rats), Rational::from_i64(-18).unwrap());
    }
}
