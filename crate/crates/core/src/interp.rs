//! The derivative-conditions matrix of a fat-point scheme and everything
//! computed from it: initial degrees of symbolic powers, graded pieces,
//! Hilbert functions, minimal generators in low degrees, and graded
//! pieces of products of ideals.
//!
//! A form of degree t lies in (I_X^(m))_t exactly when all its partial
//! derivatives of order < m vanish at every point of X; those conditions
//! are rows of a matrix over the exact coordinates, and the graded piece
//! is its kernel.

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, ExactMatrix, RankKind, RankStrategy, SpanBuilder};
use crate::multiindex::{index_map, monomials_of_degree, monomials_up_to, MultiIndex};
use crate::points::PointConfig;
use crate::{binomial, Rational};

/// Which chart the derivative conditions are written in.
///
/// Affine mode dehomogenizes at each point's largest coordinate and
/// needs binom(m-1+N, N) rows per point; homogeneous mode keeps all
/// N+1 variables and needs binom(m+N, m-1). Both have the same kernel
/// in characteristic zero, so affine is the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Affine,
    Homogeneous,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Affine => "affine",
            Mode::Homogeneous => "homogeneous",
        }
    }
}

/// The conditions matrix for multiplicity `m` and degree `t`, plus the
/// row/column indexing that makes its layout reproducible.
#[derive(Debug, Clone)]
pub struct ConditionsMatrix {
    pub matrix: ExactMatrix,
    pub multiplicity: u32,
    pub degree: u32,
    pub mode: Mode,
    /// Degree-t exponent vectors in deglex order (x0^t first).
    pub column_index: Vec<MultiIndex>,
    /// (point index, derivative order) per row; derivative orders run
    /// over |beta| <= m-1, degrees ascending.
    pub row_index: Vec<(usize, MultiIndex)>,
}

/// Build the conditions matrix whose kernel is (I_X^(m))_t.
///
/// Entries are binomial-scaled derivatives binom(alpha, beta) *
/// lambda^(alpha - beta); the scaling differs from the raw factorial
/// derivative by the positive row constant beta!, which does not change
/// rank or kernel in characteristic zero.
pub fn conditions_matrix(
    cfg: &PointConfig,
    m: u32,
    t: u32,
    mode: Mode,
) -> Result<ConditionsMatrix> {
    if m < 1 {
        return Err(Error::InvalidArgument("multiplicity must be >= 1".into()));
    }
    cfg.ensure_valid()?;
    let dim = cfg.dim();
    let columns = monomials_of_degree(dim + 1, t);

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut row_index = Vec::new();

    match mode {
        Mode::Homogeneous => {
            let betas = monomials_up_to(dim + 1, m - 1);
            for (pi, p) in cfg.points().iter().enumerate() {
                let coords = p.coords_rational();
                for beta in &betas {
                    let row = columns
                        .iter()
                        .map(|alpha| {
                            if beta.leq(alpha) {
                                let scale = Rational::from_integer(alpha.binomial_product(beta));
                                scale * alpha.sub(beta).eval(&coords)
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect();
                    rows.push(row);
                    row_index.push((pi, beta.clone()));
                }
            }
        }
        Mode::Affine => {
            let betas = monomials_up_to(dim, m - 1);
            for (pi, p) in cfg.points().iter().enumerate() {
                // dehomogenization chart: coordinate of largest absolute
                // value, ties to lowest index
                let chart = p
                    .coords()
                    .iter()
                    .enumerate()
                    .max_by(|(i, a), (j, b)| {
                        a.abs().cmp(&b.abs()).then(j.cmp(i))
                    })
                    .map(|(i, _)| i)
                    .expect("points are nonzero");
                let chart_coord = Rational::from_integer(p.coords()[chart].clone());
                let affine: Vec<Rational> = p
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != chart)
                    .map(|(_, c)| Rational::from_integer(c.clone()) / &chart_coord)
                    .collect();
                for beta in &betas {
                    let row = columns
                        .iter()
                        .map(|alpha| {
                            let restricted = MultiIndex(
                                alpha
                                    .0
                                    .iter()
                                    .enumerate()
                                    .filter(|(i, _)| *i != chart)
                                    .map(|(_, &e)| e)
                                    .collect(),
                            );
                            if beta.leq(&restricted) {
                                let scale =
                                    Rational::from_integer(restricted.binomial_product(beta));
                                scale * restricted.sub(beta).eval(&affine)
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect();
                    rows.push(row);
                    row_index.push((pi, beta.clone()));
                }
            }
        }
    }

    Ok(ConditionsMatrix {
        matrix: ExactMatrix::from_rows(rows)?,
        multiplicity: m,
        degree: t,
        mode,
        column_index: columns,
        row_index,
    })
}

/// One rank evaluation performed while searching for an initial degree.
#[derive(Debug, Clone)]
pub struct RankRecord {
    pub degree: u32,
    pub rank: usize,
    pub cols: usize,
    pub kind: RankKind,
    pub primes: Vec<u64>,
    pub agreed: bool,
}

/// alpha(I_X^(m)) together with its certificate.
#[derive(Debug, Clone)]
pub struct AlphaEntry {
    pub m: u32,
    pub alpha: u32,
    /// dim (I^(m))_alpha, from the rank at the witnessing degree.
    pub kernel_dim_at_alpha: usize,
    /// Full column rank verified at degree alpha-1 (vacuous when
    /// alpha-1 < m, where the graded piece is zero a priori).
    pub full_rank_below: bool,
    pub records: Vec<RankRecord>,
    pub warnings: Vec<String>,
}

impl AlphaEntry {
    pub fn is_certified(&self) -> bool {
        self.records.iter().all(|r| r.kind.is_certified())
    }

    pub fn ratio(&self) -> Rational {
        Rational::new(self.alpha.into(), self.m.into())
    }
}

/// Least t with n * binom(m+N, m-1) < binom(t+N, N); the kernel is
/// forced nontrivial there by row/column counts alone.
fn pigeonhole_upper_bound(n: usize, dim: usize, m: u32) -> u32 {
    let rows = n * binomial((m as usize) + dim, (m as usize) - 1);
    let mut t = m;
    while binomial(t as usize + dim, dim) <= rows {
        t += 1;
    }
    t
}

/// The least degree t with (I_X^(m))_t != 0.
///
/// The search window is [m, min(m * alpha_1, pigeonhole bound)] and the
/// search is binary: kernel nontriviality is monotone in the degree
/// (multiply by a linear form off the points).
pub fn alpha_symbolic(
    cfg: &PointConfig,
    m: u32,
    strategy: RankStrategy,
    mode: Mode,
) -> Result<AlphaEntry> {
    if m < 1 {
        return Err(Error::InvalidArgument("multiplicity must be >= 1".into()));
    }
    cfg.ensure_valid()?;
    let n = cfg.len();
    let dim = cfg.dim();

    let mut hi = pigeonhole_upper_bound(n, dim, m);
    if m > 1 {
        let alpha1 = alpha_symbolic(cfg, 1, strategy, mode)?.alpha;
        hi = hi.min(m * alpha1);
    }
    let lo = m;

    let mut records: HashMap<u32, RankRecord> = HashMap::new();
    let probe = |t: u32, records: &mut HashMap<u32, RankRecord>| -> Result<bool> {
        if !records.contains_key(&t) {
            let cm = conditions_matrix(cfg, m, t, mode)?;
            let cols = cm.matrix.cols();
            let res = if cm.matrix.rows() < cols {
                // fewer conditions than coefficients: kernel forced
                linalg::RankResult {
                    rank: cm.matrix.rows(),
                    strategy: RankKind::Exact,
                    primes_used: Vec::new(),
                    primes_agreed: true,
                }
            } else {
                linalg::rank(&cm.matrix, strategy, None)?
            };
            records.insert(
                t,
                RankRecord {
                    degree: t,
                    rank: res.rank,
                    cols,
                    kind: res.strategy,
                    primes: res.primes_used,
                    agreed: res.primes_agreed,
                },
            );
        }
        let r = &records[&t];
        Ok(r.rank < r.cols)
    };

    let mut low = lo;
    let mut high = hi;
    while low < high {
        let mid = low + (high - low) / 2;
        if probe(mid, &mut records)? {
            high = mid;
        } else {
            low = mid + 1;
        }
    }
    let alpha = low;

    // certificate: kernel dimension at alpha, full rank just below
    probe(alpha, &mut records)?;
    let kernel_dim = {
        let r = &records[&alpha];
        r.cols - r.rank
    };
    let full_rank_below = if alpha == m {
        true // degrees below m carry no forms of order-m vanishing
    } else {
        !probe(alpha - 1, &mut records)?
    };

    let mut recs: Vec<RankRecord> = records.into_values().collect();
    recs.sort_by_key(|r| r.degree);
    let warnings: Vec<String> = recs
        .iter()
        .filter(|r| !r.agreed && r.kind == RankKind::MultimodularHeuristic)
        .map(|r| {
            format!(
                "uncertified result: modular primes disagreed at degree {} (m={})",
                r.degree, m
            )
        })
        .collect();

    Ok(AlphaEntry {
        m,
        alpha,
        kernel_dim_at_alpha: kernel_dim,
        full_rank_below,
        records: recs,
        warnings,
    })
}

/// alpha entries for m = 1..=m_max.
#[derive(Debug, Clone)]
pub struct AlphaTable {
    pub label: String,
    pub entries: Vec<AlphaEntry>,
}

impl AlphaTable {
    pub fn alpha(&self, m: u32) -> Option<u32> {
        self.entries.iter().find(|e| e.m == m).map(|e| e.alpha)
    }

    pub fn warnings(&self) -> Vec<String> {
        self.entries.iter().flat_map(|e| e.warnings.clone()).collect()
    }
}

pub fn alpha_table(
    cfg: &PointConfig,
    m_max: u32,
    strategy: RankStrategy,
    mode: Mode,
) -> Result<AlphaTable> {
    if m_max < 1 {
        return Err(Error::InvalidArgument("m_max must be >= 1".into()));
    }
    let mut entries: Vec<AlphaEntry> = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        let entry = alpha_symbolic(cfg, m, strategy, mode)?;
        if entry.alpha < m || (m > 1 && entry.alpha > m * entries[0].alpha) {
            return Err(Error::Internal(format!(
                "alpha_{} = {} escapes [m, m*alpha_1]",
                m, entry.alpha
            )));
        }
        entries.push(entry);
    }
    Ok(AlphaTable {
        label: cfg.label().to_string(),
        entries,
    })
}

/// A basis of a graded piece: linearly independent coefficient vectors
/// over the degree-d deglex monomial basis, each with first nonzero
/// entry 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    pub degree: u32,
    pub forms: Vec<Vec<Rational>>,
}

impl GradedBasis {
    pub fn dim(&self) -> usize {
        self.forms.len()
    }
}

/// Basis of (I_X^(m))_d.
pub fn graded_piece(cfg: &PointConfig, m: u32, d: u32, mode: Mode) -> Result<GradedBasis> {
    if m >= 1 && d < m {
        // a nonzero form vanishing to order m has degree >= m
        return Ok(GradedBasis {
            degree: d,
            forms: Vec::new(),
        });
    }
    let cm = conditions_matrix(cfg, m, d, mode)?;
    Ok(GradedBasis {
        degree: d,
        forms: linalg::kernel_basis(&cm.matrix),
    })
}

/// Hilbert function H_{R/I_X}(d): the rank of the degree-d evaluation
/// matrix.
pub fn hilbert_function(cfg: &PointConfig, d: u32) -> Result<usize> {
    cfg.ensure_valid()?;
    let m = crate::points::evaluation_matrix(cfg, d);
    Ok(linalg::naive_rank(&m))
}

/// True iff X has the generic Hilbert function
/// H(d) = min(binom(d+N, N), n) in every degree; checked up to the
/// degree where the expected value stabilizes at n.
pub fn is_generic_position(cfg: &PointConfig) -> Result<bool> {
    cfg.ensure_valid()?;
    let n = cfg.len();
    let dim = cfg.dim();
    let mut d = 0u32;
    loop {
        let expected = binomial(d as usize + dim, dim).min(n);
        if hilbert_function(cfg, d)? != expected {
            return Ok(false);
        }
        if expected == n {
            return Ok(true);
        }
        d += 1;
    }
}

/// Generators of a homogeneous ideal given degree by degree, complete
/// up to a stated degree.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    /// Number of variables (N+1 for P^N).
    pub nvars: usize,
    /// New minimal generators per degree d = 0..=complete_up_to.
    pub by_degree: Vec<GradedBasis>,
    pub complete_up_to: u32,
}

impl GeneratorSet {
    /// The irrelevant maximal ideal (x_0, .., x_{nvars-1}); its variable
    /// generators are complete in every degree.
    pub fn maximal_ideal(nvars: usize) -> GeneratorSet {
        let monos = monomials_of_degree(nvars, 1);
        let forms = (0..nvars)
            .map(|k| {
                let mut v = vec![Rational::zero(); monos.len()];
                v[k] = Rational::from_integer(1.into());
                v
            })
            .collect();
        GeneratorSet {
            nvars,
            by_degree: vec![
                GradedBasis {
                    degree: 0,
                    forms: Vec::new(),
                },
                GradedBasis { degree: 1, forms },
            ],
            complete_up_to: u32::MAX,
        }
    }

    /// Minimum generator degree; `None` for the zero ideal.
    pub fn min_degree(&self) -> Option<u32> {
        self.by_degree
            .iter()
            .find(|b| !b.forms.is_empty())
            .map(|b| b.degree)
    }

    pub fn counts(&self) -> Vec<(u32, usize)> {
        self.by_degree
            .iter()
            .filter(|b| !b.forms.is_empty())
            .map(|b| (b.degree, b.dim()))
            .collect()
    }

    fn flattened(&self) -> Vec<(u32, &Vec<Rational>)> {
        self.by_degree
            .iter()
            .flat_map(|b| b.forms.iter().map(move |f| (b.degree, f)))
            .collect()
    }
}

/// Multiply a dense degree-d form by the variable `var`.
fn shift_by_var(
    form: &[Rational],
    monos: &[MultiIndex],
    next_index: &HashMap<MultiIndex, usize>,
    next_len: usize,
    var: usize,
) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); next_len];
    for (c, mono) in form.iter().zip(monos) {
        if c.is_zero() {
            continue;
        }
        let mut e = mono.clone();
        e.0[var] += 1;
        out[next_index[&e]] += c;
    }
    out
}

/// New minimal generators of I_X in each degree d <= d_max: a basis of
/// a complement of R_1 * (I_X)_{d-1} inside (I_X)_d.
pub fn minimal_generators_up_to(
    cfg: &PointConfig,
    d_max: u32,
    mode: Mode,
) -> Result<GeneratorSet> {
    cfg.ensure_valid()?;
    let nvars = cfg.dim() + 1;
    let mut by_degree = Vec::with_capacity(d_max as usize + 1);
    let mut prev_piece: Vec<Vec<Rational>> = Vec::new();
    for d in 0..=d_max {
        let piece = graded_piece(cfg, 1, d, mode)?;
        let monos_prev = if d > 0 {
            monomials_of_degree(nvars, d - 1)
        } else {
            Vec::new()
        };
        let monos_d = monomials_of_degree(nvars, d);
        let next_index = index_map(&monos_d);
        let mut span = SpanBuilder::new(monos_d.len());
        for f in &prev_piece {
            for var in 0..nvars {
                span.insert(shift_by_var(f, &monos_prev, &next_index, monos_d.len(), var));
            }
        }
        let mut new_gens = Vec::new();
        for f in &piece.forms {
            if span.insert(f.clone()) {
                new_gens.push(f.clone());
            }
        }
        by_degree.push(GradedBasis {
            degree: d,
            forms: new_gens,
        });
        prev_piece = piece.forms;
    }
    Ok(GeneratorSet {
        nvars,
        by_degree,
        complete_up_to: d_max,
    })
}

type SparsePoly = HashMap<MultiIndex, Rational>;

fn to_sparse(form: &[Rational], monos: &[MultiIndex]) -> SparsePoly {
    form.iter()
        .zip(monos)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, m)| (m.clone(), c.clone()))
        .collect()
}

fn sparse_mul(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    let mut out = SparsePoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let key = ma.add(mb);
            let v = ca * cb;
            *out.entry(key).or_insert_with(Rational::zero) += v;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Basis of the degree-d piece of a product of ideal powers
/// A_1^{e_1} ... A_r^{e_r}, each ideal given by its generator set.
///
/// Exact as long as each generator set is complete up to the degree it
/// must contribute; otherwise an insufficient-generators error.
pub fn product_piece(
    factors: &[(&GeneratorSet, u32)],
    d: u32,
) -> Result<GradedBasis> {
    let active: Vec<(&GeneratorSet, u32)> = factors
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|&(g, e)| (g, e))
        .collect();
    let nvars = factors
        .first()
        .map(|(g, _)| g.nvars)
        .ok_or_else(|| Error::InvalidArgument("no factors given".into()))?;
    if factors.iter().any(|(g, _)| g.nvars != nvars) {
        return Err(Error::VariableMismatch);
    }
    let monos_d = monomials_of_degree(nvars, d);

    if active.is_empty() {
        // empty product is the unit ideal: the full degree-d space
        let forms = (0..monos_d.len())
            .map(|i| {
                let mut v = vec![Rational::zero(); monos_d.len()];
                v[i] = Rational::from_integer(1.into());
                v
            })
            .collect();
        return Ok(GradedBasis { degree: d, forms });
    }

    // completeness: each factor may need generators up to d minus the
    // least possible contribution of all other chosen generators
    let min_total: u32 = active
        .iter()
        .map(|(g, e)| g.min_degree().unwrap_or(0) * e)
        .sum();
    for (g, e) in &active {
        let own_min = g.min_degree().unwrap_or(0);
        let needed = d
            .saturating_sub(min_total - own_min * e)
            .saturating_sub(own_min * (e - 1));
        if g.complete_up_to < needed {
            return Err(Error::InsufficientGenerators {
                needed: needed as usize,
                supplied: g.complete_up_to as usize,
            });
        }
    }

    let gen_lists: Vec<Vec<(u32, SparsePoly)>> = active
        .iter()
        .map(|(g, _)| {
            g.flattened()
                .into_iter()
                .map(|(deg, f)| {
                    let monos = monomials_of_degree(nvars, deg);
                    (deg, to_sparse(f, &monos))
                })
                .collect()
        })
        .collect();

    let mut span = SpanBuilder::new(monos_d.len());
    let next_index = index_map(&monos_d);
    let mut one = SparsePoly::new();
    one.insert(
        MultiIndex(vec![0; nvars]),
        Rational::from_integer(1.into()),
    );

    // depth-first choice of a multiset of generators per factor
    fn descend(
        gen_lists: &[Vec<(u32, SparsePoly)>],
        exponents: &[u32],
        fi: usize,
        start: usize,
        remaining: u32,
        acc_deg: u32,
        acc: &SparsePoly,
        d: u32,
        nvars: usize,
        next_index: &HashMap<MultiIndex, usize>,
        span: &mut SpanBuilder,
    ) {
        if remaining == 0 {
            if fi + 1 < gen_lists.len() {
                descend(
                    gen_lists,
                    exponents,
                    fi + 1,
                    0,
                    exponents[fi + 1],
                    acc_deg,
                    acc,
                    d,
                    nvars,
                    next_index,
                    span,
                );
            } else {
                // multiply by every monomial of the complementary degree
                let pad = d - acc_deg;
                for mu in monomials_of_degree(nvars, pad) {
                    let mut v = vec![Rational::zero(); next_index.len()];
                    for (mono, c) in acc {
                        v[next_index[&mono.add(&mu)]] += c;
                    }
                    span.insert(v);
                }
            }
            return;
        }
        for gi in start..gen_lists[fi].len() {
            let (gdeg, gpoly) = &gen_lists[fi][gi];
            if acc_deg + gdeg > d {
                continue;
            }
            let next = sparse_mul(acc, gpoly);
            descend(
                gen_lists,
                exponents,
                fi,
                gi,
                remaining - 1,
                acc_deg + gdeg,
                &next,
                d,
                nvars,
                next_index,
                span,
            );
        }
    }

    let exponents: Vec<u32> = active.iter().map(|(_, e)| *e).collect();
    descend(
        &gen_lists,
        &exponents,
        0,
        0,
        exponents[0],
        0,
        &one,
        d,
        nvars,
        &next_index,
        &mut span,
    );

    Ok(GradedBasis {
        degree: d,
        forms: span.rows(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::points::{sample_config, PointConfig};

    fn coordinate_points_p2() -> PointConfig {
        PointConfig::from_int_rows(2, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], "coord P^2").unwrap()
    }

    fn collinear_points_p2() -> PointConfig {
        PointConfig::from_int_rows(2, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]], "collinear P^2")
            .unwrap()
    }

    #[test]
    fn single_point_evaluation_row() {
        let cfg = PointConfig::from_int_rows(2, &[&[1, 0, 0]], "pt").unwrap();
        let cm = conditions_matrix(&cfg, 1, 1, Mode::Homogeneous).unwrap();
        assert_eq!(cm.matrix.rows(), 1);
        assert_eq!(cm.matrix.cols(), 3);
        assert_eq!(*cm.matrix.get(0, 0), Rational::from_integer(1.into()));
        assert!(cm.matrix.get(0, 1).is_zero());
        assert!(cm.matrix.get(0, 2).is_zero());
    }

    #[test]
    fn matrix_sizes_match_counting() {
        let cfg = coordinate_points_p2();
        let hom = conditions_matrix(&cfg, 2, 3, Mode::Homogeneous).unwrap();
        assert_eq!(hom.matrix.rows(), 12); // n*binom(m+N, m-1) = 3*4
        assert_eq!(hom.matrix.cols(), 10); // binom(t+N, N) = binom(5,2)
        let aff = conditions_matrix(&cfg, 2, 3, Mode::Affine).unwrap();
        assert_eq!(aff.matrix.rows(), 9); // 3 derivative orders per point
        assert_eq!(aff.matrix.cols(), 10);
    }

    #[test]
    fn b23_rank_and_kernel_for_noncollinear_triple() {
        // oracle: naive rational elimination on the full 12x10 matrix;
        // the kernel must be the product of the three lines x0*x1*x2
        let cfg = coordinate_points_p2();
        let cm = conditions_matrix(&cfg, 2, 3, Mode::Homogeneous).unwrap();
        assert_eq!(linalg::naive_rank(&cm.matrix), 9);
        let kernel = linalg::kernel_basis(&cm.matrix);
        assert_eq!(kernel.len(), 1);
        let xyz_pos = cm
            .column_index
            .iter()
            .position(|m| m.0 == vec![1, 1, 1])
            .unwrap();
        for (i, c) in kernel[0].iter().enumerate() {
            if i == xyz_pos {
                assert_eq!(*c, Rational::from_integer(1.into()));
            } else {
                assert!(c.is_zero());
            }
        }
    }

    #[test]
    fn five_seeded_points_unique_conic_kernel() {
        let cfg = sample_config(5, 2, 11, 10).unwrap();
        let cm = conditions_matrix(&cfg, 1, 2, Mode::Homogeneous).unwrap();
        assert_eq!(cm.matrix.rows(), 5);
        assert_eq!(cm.matrix.cols(), 6);
        assert_eq!(linalg::kernel_basis(&cm.matrix).len(), 1);
    }

    #[test]
    fn alpha_single_point_equals_m() {
        let cfg = PointConfig::from_int_rows(2, &[&[1, 2, 3]], "pt").unwrap();
        for m in 1..=4 {
            for mode in [Mode::Affine, Mode::Homogeneous] {
                let e = alpha_symbolic(&cfg, m, RankStrategy::Exact, mode).unwrap();
                assert_eq!(e.alpha, m);
            }
        }
    }

    #[test]
    fn alpha_noncollinear_triple() {
        let cfg = coordinate_points_p2();
        let e1 = alpha_symbolic(&cfg, 1, RankStrategy::Exact, Mode::Affine).unwrap();
        assert_eq!(e1.alpha, 2);
        let e2 = alpha_symbolic(&cfg, 2, RankStrategy::Exact, Mode::Affine).unwrap();
        assert_eq!(e2.alpha, 3);
        assert_eq!(e2.kernel_dim_at_alpha, 1);
        assert!(e2.full_rank_below);
    }

    #[test]
    fn alpha_five_seeded_points() {
        let cfg = sample_config(5, 2, 11, 10).unwrap();
        for mode in [Mode::Affine, Mode::Homogeneous] {
            assert_eq!(
                alpha_symbolic(&cfg, 1, RankStrategy::Exact, mode).unwrap().alpha,
                2
            );
            assert_eq!(
                alpha_symbolic(&cfg, 2, RankStrategy::Exact, mode).unwrap().alpha,
                4
            );
        }
    }

    #[test]
    fn alpha_mode_invariance_on_samples() {
        for seed in [1u64, 2, 3] {
            let cfg = sample_config(4, 2, seed, 10).unwrap();
            for m in 1..=3 {
                let a = alpha_symbolic(&cfg, m, RankStrategy::Exact, Mode::Affine).unwrap();
                let h = alpha_symbolic(&cfg, m, RankStrategy::Exact, Mode::Homogeneous).unwrap();
                assert_eq!(a.alpha, h.alpha);
            }
        }
    }

    #[test]
    fn graded_piece_examples() {
        let cfg = coordinate_points_p2();
        // m=2, d=3: spanned by x0x1x2 alone
        let gb = graded_piece(&cfg, 2, 3, Mode::Affine).unwrap();
        assert_eq!(gb.dim(), 1);
        // any config, m=2, d=1: empty since d < m
        let gb = graded_piece(&cfg, 2, 1, Mode::Affine).unwrap();
        assert_eq!(gb.dim(), 0);
        // 5 seeded points, m=1, d=2: the unique conic
        let cfg = sample_config(5, 2, 11, 10).unwrap();
        let gb = graded_piece(&cfg, 1, 2, Mode::Affine).unwrap();
        assert_eq!(gb.dim(), 1);
    }

    #[test]
    fn hilbert_function_examples() {
        let cfg = coordinate_points_p2();
        assert_eq!(hilbert_function(&cfg, 0).unwrap(), 1);
        assert_eq!(hilbert_function(&cfg, 1).unwrap(), 3);
        assert_eq!(hilbert_function(&cfg, 2).unwrap(), 3);
        assert!(is_generic_position(&cfg).unwrap());

        let cfg = collinear_points_p2();
        assert_eq!(hilbert_function(&cfg, 0).unwrap(), 1);
        assert_eq!(hilbert_function(&cfg, 1).unwrap(), 2);
        assert_eq!(hilbert_function(&cfg, 2).unwrap(), 3);
        assert!(!is_generic_position(&cfg).unwrap());

        let single = PointConfig::from_int_rows(2, &[&[1, 1, 1]], "pt").unwrap();
        assert_eq!(hilbert_function(&single, 0).unwrap(), 1);
        assert_eq!(hilbert_function(&single, 3).unwrap(), 1);
        assert!(is_generic_position(&single).unwrap());
    }

    #[test]
    fn minimal_generators_examples() {
        let cfg = coordinate_points_p2();
        let gens = minimal_generators_up_to(&cfg, 2, Mode::Affine).unwrap();
        assert_eq!(gens.counts(), vec![(2, 3)]);

        let single = PointConfig::from_int_rows(2, &[&[1, 0, 0]], "pt").unwrap();
        let gens = minimal_generators_up_to(&single, 1, Mode::Affine).unwrap();
        assert_eq!(gens.counts(), vec![(1, 2)]);

        let cfg = sample_config(5, 2, 11, 10).unwrap();
        let gens = minimal_generators_up_to(&cfg, 3, Mode::Affine).unwrap();
        assert_eq!(gens.counts(), vec![(2, 1), (3, 2)]);
    }

    #[test]
    fn product_piece_examples() {
        let cfg = coordinate_points_p2();
        let i_gens = minimal_generators_up_to(&cfg, 3, Mode::Affine).unwrap();
        let m_gens = GeneratorSet::maximal_ideal(3);

        // (M * I)_3 is 7-dimensional inside the 10-dimensional cubics
        let mi = product_piece(&[(&m_gens, 1), (&i_gens, 1)], 3).unwrap();
        assert_eq!(mi.dim(), 7);

        // (M^0 * I)_d = (I)_d
        let alone = product_piece(&[(&m_gens, 0), (&i_gens, 1)], 2).unwrap();
        let direct = graded_piece(&cfg, 1, 2, Mode::Affine).unwrap();
        assert_eq!(alone.dim(), direct.dim());

        // (I^2)_4 is 6-dimensional
        let sq = product_piece(&[(&i_gens, 2)], 4).unwrap();
        assert_eq!(sq.dim(), 6);
    }

    #[test]
    fn product_piece_insufficient_generators() {
        let cfg = sample_config(5, 2, 11, 10).unwrap();
        let gens = minimal_generators_up_to(&cfg, 2, Mode::Affine).unwrap();
        assert!(matches!(
            product_piece(&[(&gens, 1)], 4),
            Err(Error::InsufficientGenerators { .. })
        ));
    }

    #[test]
    fn kernel_monotone_in_degree() {
        for seed in [3u64, 9] {
            let cfg = sample_config(4, 2, seed, 8).unwrap();
            let e = alpha_symbolic(&cfg, 2, RankStrategy::Exact, Mode::Affine).unwrap();
            for extra in 1..=2 {
                let gb = graded_piece(&cfg, 2, e.alpha + extra, Mode::Affine).unwrap();
                assert!(gb.dim() > 0);
            }
        }
    }

    #[test]
    fn alpha_subset_monotonicity() {
        let big = sample_config(6, 2, 17, 10).unwrap();
        let small = big.subset(&[0, 1, 2, 3], "subset");
        for m in 1..=2 {
            let a_small = alpha_symbolic(&small, m, RankStrategy::Exact, Mode::Affine).unwrap();
            let a_big = alpha_symbolic(&big, m, RankStrategy::Exact, Mode::Affine).unwrap();
            assert!(a_small.alpha <= a_big.alpha);
        }
    }
}
