//! Waldschmidt-constant brackets, Chudnovsky-type slack computations,
//! the delta/t0 threshold, the Seshadri lower bound, degreewise
//! Harbourne-Huneke containment checks, and the semicontinuity
//! experiment over sampled configurations.
//!
//! The Waldschmidt constant itself is a limit and is never reported as
//! a number; reports carry only the bracketing interval between the
//! proven lower bounds and the smallest observed ratio.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::interp::{
    alpha_symbolic, alpha_table, graded_piece, minimal_generators_up_to, product_piece,
    AlphaTable, GeneratorSet, Mode,
};
use crate::linalg::{RankStrategy, SpanBuilder};
use crate::points::{sample_config, PointConfig};
use crate::{Integer, Rational};

/// Per-multiplicity row of a Waldschmidt report.
#[derive(Debug, Clone)]
pub struct WaldschmidtRow {
    pub m: u32,
    pub alpha_m: u32,
    /// alpha_m / m, an upper bound for the Waldschmidt constant.
    pub ratio: Rational,
    pub certified: bool,
    /// ratio - (alpha + N - 1)/N, the Chudnovsky slack.
    pub chudnovsky_slack: Rational,
    pub chudnovsky_holds: bool,
}

/// Bracketing data for the Waldschmidt constant of a point
/// configuration, with per-m Chudnovsky verdicts.
#[derive(Debug, Clone)]
pub struct WaldschmidtReport {
    pub label: String,
    pub dim: usize,
    pub n_points: usize,
    pub alpha: u32,
    pub rows: Vec<WaldschmidtRow>,
    /// min over rows of alpha_m / m.
    pub upper_bound: Rational,
    /// alpha / N (holds for every homogeneous ideal).
    pub skoda_lower: Rational,
    /// (alpha + 1) / N (points, characteristic zero).
    pub ev_lower: Rational,
    /// (alpha + N - 1) / N.
    pub chudnovsky_target: Rational,
    pub warnings: Vec<String>,
}

fn ratio(num: u32, den: u32) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

fn rows_from_table(
    table: &AlphaTable,
    dim: usize,
) -> Result<(Vec<WaldschmidtRow>, Rational, Rational, Rational, Rational)> {
    let alpha = table.entries[0].alpha;
    let target = ratio(alpha + dim as u32 - 1, dim as u32);
    let skoda = ratio(alpha, dim as u32);
    let ev = ratio(alpha + 1, dim as u32);
    let mut rows = Vec::with_capacity(table.entries.len());
    for e in &table.entries {
        let r = e.ratio();
        // Skoda and Esnault-Viehweg are theorems for reduced point
        // configurations in characteristic zero; a violation means the
        // rank computations went wrong.
        if r < skoda || r < ev {
            return Err(Error::Internal(format!(
                "ratio {} at m={} undercuts a proven lower bound",
                r, e.m
            )));
        }
        let slack = &r - &target;
        rows.push(WaldschmidtRow {
            m: e.m,
            alpha_m: e.alpha,
            certified: e.is_certified(),
            chudnovsky_holds: !slack.is_negative(),
            chudnovsky_slack: slack,
            ratio: r,
        });
    }
    let upper = rows
        .iter()
        .map(|r| r.ratio.clone())
        .min()
        .expect("m_max >= 1");
    Ok((rows, upper, skoda, ev, target))
}

/// Compute alpha_m for 1 <= m <= m_max and assemble the bracket report.
pub fn waldschmidt_report(
    cfg: &PointConfig,
    m_max: u32,
    strategy: RankStrategy,
    mode: Mode,
) -> Result<WaldschmidtReport> {
    let table = alpha_table(cfg, m_max, strategy, mode)?;
    let (rows, upper, skoda, ev, target) = rows_from_table(&table, cfg.dim())?;
    Ok(WaldschmidtReport {
        label: cfg.label().to_string(),
        dim: cfg.dim(),
        n_points: cfg.len(),
        alpha: table.entries[0].alpha,
        rows,
        upper_bound: upper,
        skoda_lower: skoda,
        ev_lower: ev,
        chudnovsky_target: target,
        warnings: table.warnings(),
    })
}

/// Chudnovsky verdict at a single multiplicity.
#[derive(Debug, Clone)]
pub struct ChudnovskyVerdict {
    pub m: u32,
    pub alpha_m: u32,
    pub slack: Rational,
    pub holds: bool,
}

/// Exact slack alpha_m/m - (alpha + N - 1)/N per multiplicity; reports
/// verdicts only, never asserts the conjecture.
pub fn chudnovsky_check(
    cfg: &PointConfig,
    m_max: u32,
    strategy: RankStrategy,
    mode: Mode,
) -> Result<Vec<ChudnovskyVerdict>> {
    let report = waldschmidt_report(cfg, m_max, strategy, mode)?;
    Ok(report
        .rows
        .into_iter()
        .map(|r| ChudnovskyVerdict {
            m: r.m,
            alpha_m: r.alpha_m,
            slack: r.chudnovsky_slack,
            holds: r.chudnovsky_holds,
        })
        .collect())
}

/// delta = least s with s * alpha > alpha_s, and t0 = (N-1) * delta.
#[derive(Debug, Clone)]
pub struct DeltaReport {
    pub s_max: u32,
    pub alpha: u32,
    pub delta: Option<u32>,
    pub t0: Option<u32>,
    /// alpha_s for s = 1..=s_max (the search trace).
    pub alphas: Vec<(u32, u32)>,
    pub warnings: Vec<String>,
}

pub fn delta_t0(
    cfg: &PointConfig,
    s_max: u32,
    strategy: RankStrategy,
    mode: Mode,
) -> Result<DeltaReport> {
    let table = alpha_table(cfg, s_max, strategy, mode)?;
    let alpha = table.entries[0].alpha;
    let mut delta = None;
    for e in &table.entries {
        if e.m * alpha > e.alpha {
            delta = Some(e.m);
            break;
        }
    }
    Ok(DeltaReport {
        s_max,
        alpha,
        delta,
        t0: delta.map(|d| (cfg.dim() as u32 - 1) * d),
        alphas: table.entries.iter().map(|e| (e.m, e.alpha)).collect(),
        warnings: table.warnings(),
    })
}

/// Seshadri lower bound: the (N-1)-th root of (alpha + N - 1)/(n N).
#[derive(Debug, Clone)]
pub struct SeshadriBound {
    pub radicand: Rational,
    pub root_order: u32,
    /// Decimal approximation of the root to 12 significant digits.
    pub decimal: String,
}

/// Decimal expansion of x^(1/k) to `sig` significant digits, by integer
/// k-th roots at a large fixed scale.
pub fn nth_root_decimal(x: &Rational, k: u32, sig: usize) -> String {
    assert!(k >= 1 && !x.is_negative());
    if x.is_zero() {
        return "0".to_string();
    }
    // y * 10^s has integer part floor((num * 10^(k*s) / den)^(1/k));
    // s is chosen large enough that truncation stays past `sig` digits
    let s: u32 = sig as u32 + 10;
    let scaled: Integer =
        x.numer() * Integer::from(10u32).pow(k * s) / x.denom();
    let root = scaled.nth_root(k);
    let digits = root.to_string();
    // value = digits * 10^(-s)
    let point = digits.len() as i64 - s as i64; // digits before the decimal point
    let mut sig_digits: Vec<u8> = digits.bytes().take(sig + 1).collect();
    // round the last kept digit
    if sig_digits.len() == sig + 1 {
        let last = sig_digits.pop().unwrap();
        if last >= b'5' {
            let mut i = sig_digits.len();
            loop {
                if i == 0 {
                    sig_digits.insert(0, b'1');
                    return format_decimal(&sig_digits, point + 1);
                }
                i -= 1;
                if sig_digits[i] == b'9' {
                    sig_digits[i] = b'0';
                } else {
                    sig_digits[i] += 1;
                    break;
                }
            }
        }
    }
    format_decimal(&sig_digits, point)
}

fn format_decimal(digits: &[u8], point: i64) -> String {
    let d = String::from_utf8(digits.to_vec()).unwrap();
    if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), d)
    } else if (point as usize) >= d.len() {
        format!("{}{}", d, "0".repeat(point as usize - d.len()))
    } else {
        format!("{}.{}", &d[..point as usize], &d[point as usize..])
    }
}

pub fn seshadri_lower_bound(
    cfg: &PointConfig,
    strategy: RankStrategy,
    mode: Mode,
) -> Result<SeshadriBound> {
    let dim = cfg.dim() as u32;
    if dim < 2 {
        return Err(Error::InvalidArgument(
            "the Seshadri bound needs ambient dimension >= 2".into(),
        ));
    }
    let alpha = alpha_symbolic(cfg, 1, strategy, mode)?.alpha;
    let radicand = Rational::new(
        Integer::from(alpha + dim - 1),
        Integer::from(cfg.len() as u32 * dim),
    );
    let root_order = dim - 1;
    Ok(SeshadriBound {
        decimal: nth_root_decimal(&radicand, root_order, 12),
        radicand,
        root_order,
    })
}

/// Verdict for one degree of the containment I^(Nm) ⊆ M^{m(N-1)} I^m.
#[derive(Debug, Clone)]
pub struct HhDegreeVerdict {
    pub degree: u32,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub holds: bool,
}

/// Degreewise Harbourne-Huneke containment check. Passing up to d_max
/// proves nothing beyond d_max; the report says so.
#[derive(Debug, Clone)]
pub struct HhReport {
    pub m: u32,
    pub alpha_symbolic_nm: u32,
    pub d_max: u32,
    pub degrees: Vec<HhDegreeVerdict>,
    pub all_hold: bool,
    pub note: String,
    pub warnings: Vec<String>,
}

/// Check (I^(Nm))_d ⊆ (M^{m(N-1)} I^m)_d for every degree d in
/// [alpha(I^(Nm)), d_max]. Degrees below the left side's initial degree
/// hold vacuously and are not listed.
pub fn hh_points_check(
    cfg: &PointConfig,
    m: u32,
    d_max: Option<u32>,
    strategy: RankStrategy,
    mode: Mode,
) -> Result<HhReport> {
    if m < 1 {
        return Err(Error::InvalidArgument("m must be >= 1".into()));
    }
    cfg.ensure_valid()?;
    let dim = cfg.dim() as u32;
    let nm = dim * m;
    let entry = alpha_symbolic(cfg, nm, strategy, mode)?;
    let start = entry.alpha;
    let d_max = d_max.unwrap_or(start + dim + 1);
    if d_max < start {
        return Err(Error::InvalidArgument(format!(
            "d_max {} is below alpha(I^({})) = {}",
            d_max, nm, start
        )));
    }

    let gens = minimal_generators_up_to(cfg, d_max, mode)?;
    let max_ideal = GeneratorSet::maximal_ideal(cfg.dim() + 1);
    let mut degrees = Vec::new();
    for d in start..=d_max {
        let lhs = graded_piece(cfg, nm, d, mode)?;
        let rhs = product_piece(&[(&max_ideal, m * (dim - 1)), (&gens, m)], d)?;
        let mut span = SpanBuilder::new(
            crate::binomial(d as usize + cfg.dim(), cfg.dim()),
        );
        for f in &rhs.forms {
            span.insert(f.clone());
        }
        let holds = lhs.forms.iter().all(|f| span.contains(f));
        degrees.push(HhDegreeVerdict {
            degree: d,
            lhs_dim: lhs.dim(),
            rhs_dim: rhs.dim(),
            holds,
        });
    }
    Ok(HhReport {
        m,
        alpha_symbolic_nm: start,
        d_max,
        all_hold: degrees.iter().all(|v| v.holds),
        degrees,
        note: "degreewise check only; degrees beyond d_max are unchecked".into(),
        warnings: entry.warnings,
    })
}

/// One sampled configuration's value in a semicontinuity experiment.
#[derive(Debug, Clone)]
pub struct SemicontSample {
    pub label: String,
    pub alpha_m: u32,
    /// Below the observed maximum: the sample is special for this m.
    pub special: bool,
}

/// alpha_m across sampled configurations; the maximum is a lower bound
/// for the very-general value and smaller samples are flagged special.
#[derive(Debug, Clone)]
pub struct SemicontReport {
    pub m: u32,
    pub samples: Vec<SemicontSample>,
    pub max_alpha_m: u32,
    pub warnings: Vec<String>,
}

/// Run the experiment over explicit configurations (callers may mix
/// sampled and hand-built special configurations).
pub fn semicontinuity_over_configs(
    configs: &[PointConfig],
    m: u32,
    strategy: RankStrategy,
    mode: Mode,
) -> Result<SemicontReport> {
    if configs.is_empty() {
        return Err(Error::InvalidArgument("no configurations given".into()));
    }
    let mut values = Vec::with_capacity(configs.len());
    let mut warnings = Vec::new();
    for cfg in configs {
        let e = alpha_symbolic(cfg, m, strategy, mode)?;
        warnings.extend(e.warnings.clone());
        values.push((cfg.label().to_string(), e.alpha));
    }
    let max = values.iter().map(|(_, a)| *a).max().expect("nonempty");
    Ok(SemicontReport {
        m,
        samples: values
            .into_iter()
            .map(|(label, alpha_m)| SemicontSample {
                label,
                alpha_m,
                special: alpha_m < max,
            })
            .collect(),
        max_alpha_m: max,
        warnings,
    })
}

/// Sample one configuration per seed and run the experiment.
pub fn semicontinuity_experiment(
    n: usize,
    dim: usize,
    m: u32,
    seeds: &[u64],
    height: u32,
    strategy: RankStrategy,
    mode: Mode,
) -> Result<SemicontReport> {
    if seeds.is_empty() {
        return Err(Error::InvalidArgument("no seeds given".into()));
    }
    let configs = seeds
        .iter()
        .map(|&s| sample_config(n, dim, s, height))
        .collect::<Result<Vec<_>>>()?;
    semicontinuity_over_configs(&configs, m, strategy, mode)
}

#[allow(dead_code)]
fn rational_to_f64(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}
