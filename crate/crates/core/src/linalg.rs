//! Exact rank and kernel computation over the rationals.
//!
//! The exact path clears denominators row-wise and runs fraction-free
//! (Bareiss) elimination over big integers, which keeps intermediate
//! entries at determinant size instead of letting denominators blow up.
//! The fast path reduces the matrix modulo word-size primes; a rank
//! computed mod p is always a lower bound for the rational rank and
//! agrees with it for all primes outside a fixed finite bad set, so
//! agreement of two independent primes is reported as heuristic
//! evidence and a certify flag escalates to the exact path.

use num_integer::Integer as IntegerTrait;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::{Integer, Rational};

/// Dense row-major matrix over exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "entry count {} does not match {}x{}",
                entries.len(),
                rows,
                cols
            )));
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidArgument("ragged rows".into()));
        }
        Ok(ExactMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.get_mut(c, r) = self.get(r, c).clone();
            }
        }
        t
    }

    /// Integer rows with denominators cleared by each row's lcm.
    /// Row scaling by a nonzero rational preserves rank and kernel.
    fn cleared_rows(&self) -> Vec<Vec<Integer>> {
        (0..self.rows)
            .map(|r| {
                let mut l = Integer::one();
                for e in self.row(r) {
                    l = l.lcm(e.denom());
                }
                self.row(r)
                    .iter()
                    .map(|e| e.numer() * (&l / e.denom()))
                    .collect()
            })
            .collect()
    }
}

/// How a rank should be computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankStrategy {
    /// Fraction-free elimination over the integers; always correct.
    Exact,
    /// One prime; rank is a lower bound for the rational rank.
    Modular,
    /// Two primes; agreement is reported as heuristic evidence.
    Multimodular,
    /// Two primes, then exact elimination; correct and records primes.
    MultimodularCertify,
}

/// Which guarantee the reported rank carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankKind {
    Exact,
    Modular,
    MultimodularCertified,
    MultimodularHeuristic,
}

impl RankKind {
    pub fn is_certified(self) -> bool {
        matches!(self, RankKind::Exact | RankKind::MultimodularCertified)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RankKind::Exact => "exact",
            RankKind::Modular => "modular",
            RankKind::MultimodularCertified => "multimodular-certified",
            RankKind::MultimodularHeuristic => "multimodular-heuristic",
        }
    }
}

#[derive(Debug, Clone)]
pub struct RankResult {
    pub rank: usize,
    pub strategy: RankKind,
    pub primes_used: Vec<u64>,
    /// False when the modular primes disagreed (heuristic result is
    /// then only a lower bound and callers should escalate).
    pub primes_agreed: bool,
}

impl RankResult {
    pub fn is_certified(&self) -> bool {
        self.strategy.is_certified()
    }
}

fn trial_is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Deterministic stream of distinct odd primes in [2^15, 2^16).
///
/// The stream is seeded by a fixed constant so identical inputs always
/// use identical primes and reports stay byte-for-byte reproducible.
pub struct PrimeStream {
    rng: ChaCha8Rng,
    used: Vec<u64>,
}

impl PrimeStream {
    pub fn new() -> Self {
        PrimeStream {
            rng: ChaCha8Rng::seed_from_u64(0x5eed_1ab5),
            used: Vec::new(),
        }
    }

    pub fn next_prime(&mut self) -> u64 {
        loop {
            let candidate = self.rng.gen_range(1u64 << 15..1u64 << 16) | 1;
            if trial_is_prime(candidate) && !self.used.contains(&candidate) {
                self.used.push(candidate);
                return candidate;
            }
        }
    }
}

impl Default for PrimeStream {
    fn default() -> Self {
        Self::new()
    }
}

fn validate_primes(primes: &[u64]) -> Result<()> {
    for (i, &p) in primes.iter().enumerate() {
        if p == 2 || p % 2 == 0 {
            return Err(Error::InvalidArgument(format!("prime {} is even", p)));
        }
        if primes[..i].contains(&p) {
            return Err(Error::InvalidArgument(format!("repeated prime {}", p)));
        }
    }
    Ok(())
}

/// Rank of an integer matrix by two-step fraction-free elimination.
fn bareiss_rank(mut a: Vec<Vec<Integer>>) -> usize {
    if a.is_empty() || a[0].is_empty() {
        return 0;
    }
    let rows = a.len();
    let cols = a[0].len();
    let mut rank = 0;
    let mut prev = Integer::one();
    let mut col = 0;
    while rank < rows && col < cols {
        // pivot search: first nonzero in this column at or below `rank`
        let pivot = (rank..rows).find(|&r| !a[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => {
                col += 1;
                continue;
            }
        };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = num / &prev; // exact division (Bareiss)
            }
            a[r][col] = Integer::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        col += 1;
    }
    rank
}

/// Reduced row echelon form over the rationals.
///
/// Returns the reduced rows and the pivot column of each. Kept separate
/// from the fraction-free path so the two can cross-check each other.
pub fn rref(m: &ExactMatrix) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a: Vec<Vec<Rational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let rows = m.rows();
    let cols = m.cols();
    let mut pivot_cols = Vec::new();
    let mut pr = 0;
    for col in 0..cols {
        if pr >= rows {
            break;
        }
        let pivot = (pr..rows).find(|&r| !a[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        a.swap(pr, pivot);
        let inv = a[pr][col].recip();
        for c in col..cols {
            let v = &a[pr][c] * &inv;
            a[pr][c] = v;
        }
        for r in 0..rows {
            if r != pr && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..cols {
                    let v = &a[r][c] - &factor * &a[pr][c];
                    a[r][c] = v;
                }
            }
        }
        pivot_cols.push(col);
        pr += 1;
    }
    a.truncate(pr);
    (a, pivot_cols)
}

/// Rank by naive rational Gaussian elimination (the rref pivot count).
pub fn naive_rank(m: &ExactMatrix) -> usize {
    rref(m).1.len()
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn reduce_int(n: &Integer, p: u64) -> u64 {
    let m = n.mod_floor(&Integer::from(p));
    let (_, digits) = m.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

/// Rank of the matrix reduced mod p. Returns `None` when p divides a
/// row's denominator lcm (the reduction would kill the row).
fn modular_rank(cleared: &[Vec<Integer>], original: &ExactMatrix, p: u64) -> Option<usize> {
    for r in 0..original.rows() {
        for e in original.row(r) {
            if reduce_int(e.denom(), p) == 0 {
                return None;
            }
        }
    }
    let mut a: Vec<Vec<u64>> = cleared
        .iter()
        .map(|row| row.iter().map(|e| reduce_int(e, p)).collect())
        .collect();
    if a.is_empty() || a[0].is_empty() {
        return Some(0);
    }
    let rows = a.len();
    let cols = a[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank >= rows {
            break;
        }
        let pivot = (rank..rows).find(|&r| a[r][col] != 0);
        let pivot = match pivot {
            Some(q) => q,
            None => continue,
        };
        a.swap(rank, pivot);
        let inv = invmod(a[rank][col], p);
        for r in rank + 1..rows {
            if a[r][col] != 0 {
                let factor = mulmod(a[r][col], inv, p);
                for c in col..cols {
                    let sub = mulmod(factor, a[rank][c], p);
                    a[r][c] = (a[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// Rank of `m` under the requested strategy.
///
/// Caller-supplied primes must be distinct and odd; when absent they
/// are drawn from the deterministic [`PrimeStream`]. Primes that divide
/// a denominator in the matrix are skipped and replaced.
pub fn rank(m: &ExactMatrix, strategy: RankStrategy, primes: Option<&[u64]>) -> Result<RankResult> {
    if let Some(ps) = primes {
        validate_primes(ps)?;
    }
    if m.rows() == 0 || m.cols() == 0 {
        return Ok(RankResult {
            rank: 0,
            strategy: match strategy {
                RankStrategy::Exact => RankKind::Exact,
                RankStrategy::Modular => RankKind::Modular,
                RankStrategy::Multimodular => RankKind::MultimodularHeuristic,
                RankStrategy::MultimodularCertify => RankKind::MultimodularCertified,
            },
            primes_used: Vec::new(),
            primes_agreed: true,
        });
    }
    let cleared = m.cleared_rows();

    let take_primes = |want: usize| -> Vec<(u64, usize)> {
        let mut stream = PrimeStream::new();
        let mut out = Vec::new();
        let mut supplied = primes.map(|ps| ps.iter().copied());
        while out.len() < want {
            let p = match supplied.as_mut().and_then(|it| it.next()) {
                Some(p) => p,
                None => stream.next_prime(),
            };
            if out.iter().any(|&(q, _)| q == p) {
                continue;
            }
            if let Some(r) = modular_rank(&cleared, m, p) {
                out.push((p, r));
            }
        }
        out
    };

    match strategy {
        RankStrategy::Exact => Ok(RankResult {
            rank: bareiss_rank(cleared),
            strategy: RankKind::Exact,
            primes_used: Vec::new(),
            primes_agreed: true,
        }),
        RankStrategy::Modular => {
            let got = take_primes(1);
            Ok(RankResult {
                rank: got[0].1,
                strategy: RankKind::Modular,
                primes_used: vec![got[0].0],
                primes_agreed: true,
            })
        }
        RankStrategy::Multimodular => {
            let mut got = take_primes(2);
            got.sort_unstable();
            let agreed = got[0].1 == got[1].1;
            Ok(RankResult {
                rank: got[0].1.max(got[1].1),
                strategy: RankKind::MultimodularHeuristic,
                primes_used: got.iter().map(|&(p, _)| p).collect(),
                primes_agreed: agreed,
            })
        }
        RankStrategy::MultimodularCertify => {
            let mut got = take_primes(2);
            got.sort_unstable();
            let exact = bareiss_rank(cleared);
            Ok(RankResult {
                rank: exact,
                strategy: RankKind::MultimodularCertified,
                primes_used: got.iter().map(|&(p, _)| p).collect(),
                primes_agreed: got[0].1 == got[1].1 && got[0].1 == exact,
            })
        }
    }
}

/// Basis of the right null space over the rationals.
///
/// Vectors are the reduced-echelon parametrization with pivots chosen
/// left to right, each vector scaled so its first nonzero entry is 1.
/// Output order follows the free columns in ascending order.
pub fn kernel_basis(m: &ExactMatrix) -> Vec<Vec<Rational>> {
    let cols = m.cols();
    if cols == 0 {
        return Vec::new();
    }
    let (red, pivot_cols) = rref(m);
    let mut is_pivot = vec![false; cols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let mut basis = Vec::with_capacity(cols - pivot_cols.len());
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -red[row][free].clone();
        }
        normalize_first_nonzero(&mut v);
        basis.push(v);
    }
    basis
}

/// Scale so the first nonzero entry is 1. No-op for the zero vector.
pub fn normalize_first_nonzero(v: &mut [Rational]) {
    if let Some(first) = v.iter().find(|e| !e.is_zero()).cloned() {
        let inv = first.recip();
        for e in v.iter_mut() {
            *e *= &inv;
        }
    }
}

/// Incremental row-span accumulator used for dimension and membership
/// computations on sets of coefficient vectors.
pub struct SpanBuilder {
    cols: usize,
    /// Reduced rows, each with its pivot column, kept sorted by pivot.
    rows: Vec<(usize, Vec<Rational>)>,
}

impl SpanBuilder {
    pub fn new(cols: usize) -> Self {
        SpanBuilder { cols, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the accumulated rows; returns the remainder.
    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        for (pc, row) in &self.rows {
            if !v[*pc].is_zero() {
                let factor = v[*pc].clone();
                for c in *pc..self.cols {
                    let t = &v[c] - &factor * &row[c];
                    v[c] = t;
                }
            }
        }
        v
    }

    /// True iff `v` lies in the current span.
    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v.to_vec()).iter().all(|e| e.is_zero())
    }

    /// The reduced rows in pivot order; each has first nonzero entry 1.
    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    /// Insert `v`; returns true when it enlarged the span.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut r = self.reduce(v);
        let pc = match r.iter().position(|e| !e.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let inv = r[pc].recip();
        for e in r.iter_mut() {
            *e *= &inv;
        }
        // back-substitute into existing rows to stay fully reduced
        for (_, row) in self.rows.iter_mut() {
            if !row[pc].is_zero() {
                let factor = row[pc].clone();
                for c in pc..self.cols {
                    let t = &row[c] - &factor * &r[c];
                    row[c] = t;
                }
            }
        }
        let pos = self.rows.partition_point(|(q, _)| *q < pc);
        self.rows.insert(pos, (pc, r));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n).unwrap()
    }

    fn qm(rows: usize, cols: usize, vals: &[i64]) -> ExactMatrix {
        ExactMatrix::new(rows, cols, vals.iter().map(|&v| q(v)).collect()).unwrap()
    }

    #[test]
    fn identity_rank() {
        let m = ExactMatrix::identity(3);
        for s in [
            RankStrategy::Exact,
            RankStrategy::Modular,
            RankStrategy::Multimodular,
            RankStrategy::MultimodularCertify,
        ] {
            assert_eq!(rank(&m, s, None).unwrap().rank, 3);
        }
    }

    #[test]
    fn proportional_rows_rank_one() {
        let m = qm(2, 2, &[1, 2, 2, 4]);
        assert_eq!(rank(&m, RankStrategy::Exact, None).unwrap().rank, 1);
    }

    #[test]
    fn empty_matrix_rank_zero() {
        let m = ExactMatrix::zero(0, 5);
        assert_eq!(rank(&m, RankStrategy::Exact, None).unwrap().rank, 0);
        let m = ExactMatrix::zero(4, 0);
        assert_eq!(rank(&m, RankStrategy::Multimodular, None).unwrap().rank, 0);
    }

    #[test]
    fn prime_two_rejected() {
        let m = ExactMatrix::identity(2);
        assert!(rank(&m, RankStrategy::Modular, Some(&[2])).is_err());
        assert!(rank(&m, RankStrategy::Multimodular, Some(&[32771, 32771])).is_err());
    }

    #[test]
    fn identity_kernel_empty() {
        assert!(kernel_basis(&ExactMatrix::identity(3)).is_empty());
    }

    #[test]
    fn zero_matrix_kernel_standard_basis() {
        let basis = kernel_basis(&ExactMatrix::zero(2, 3));
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            for (j, e) in v.iter().enumerate() {
                assert_eq!(*e, if i == j { q(1) } else { q(0) });
            }
        }
    }

    #[test]
    fn rank_with_rational_entries() {
        let m = ExactMatrix::new(
            2,
            2,
            vec![
                Rational::new(1.into(), 3.into()),
                Rational::new(2.into(), 3.into()),
                Rational::new(1.into(), 6.into()),
                Rational::new(1.into(), 3.into()),
            ],
        )
        .unwrap();
        assert_eq!(rank(&m, RankStrategy::Exact, None).unwrap().rank, 1);
        assert_eq!(rank(&m, RankStrategy::Multimodular, None).unwrap().rank, 1);
    }

    #[test]
    fn kernel_orthogonal_to_matrix() {
        let m = qm(2, 4, &[1, 2, 3, 4, 0, 1, 1, 2]);
        let basis = kernel_basis(&m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            for r in 0..m.rows() {
                let dot: Rational = m.row(r).iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn span_builder_membership() {
        let mut sp = SpanBuilder::new(3);
        assert!(sp.insert(vec![q(1), q(2), q(3)]));
        assert!(sp.insert(vec![q(0), q(1), q(1)]));
        assert!(!sp.insert(vec![q(1), q(3), q(4)]));
        assert_eq!(sp.dim(), 2);
        assert!(sp.contains(&[q(2), q(5), q(7)]));
        assert!(!sp.contains(&[q(0), q(0), q(1)]));
    }

    fn random_matrix(seed: u64, rows: usize, cols: usize) -> ExactMatrix {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries = (0..rows * cols)
            .map(|_| {
                let n = rng.gen_range(-20i64..=20);
                let d = rng.gen_range(1i64..=6);
                Rational::new(n.into(), d.into())
            })
            .collect();
        ExactMatrix::new(rows, cols, entries).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn rank_equals_transpose_rank(seed in 0u64..1000, r in 1usize..8, c in 1usize..8) {
            let m = random_matrix(seed, r, c);
            let rk = rank(&m, RankStrategy::Exact, None).unwrap().rank;
            let rt = rank(&m.transpose(), RankStrategy::Exact, None).unwrap().rank;
            prop_assert_eq!(rk, rt);
        }

        #[test]
        fn row_scaling_preserves_rank_and_kernel(seed in 0u64..1000, r in 1usize..6, c in 1usize..6, s in 1i64..9) {
            let m = random_matrix(seed, r, c);
            let mut scaled = m.clone();
            let factor = Rational::new(s.into(), 2.into());
            for ci in 0..c {
                let v = scaled.get(0, ci) * &factor;
                *scaled.get_mut(0, ci) = v;
            }
            prop_assert_eq!(
                rank(&m, RankStrategy::Exact, None).unwrap().rank,
                rank(&scaled, RankStrategy::Exact, None).unwrap().rank
            );
            prop_assert_eq!(kernel_basis(&m), kernel_basis(&scaled));
        }

        #[test]
        fn rank_plus_kernel_dim_is_cols(seed in 0u64..1000, r in 1usize..8, c in 1usize..8) {
            let m = random_matrix(seed, r, c);
            let rk = rank(&m, RankStrategy::Exact, None).unwrap().rank;
            prop_assert_eq!(rk + kernel_basis(&m).len(), c);
        }

        #[test]
        fn modular_rank_lower_bound(seed in 0u64..1000, r in 1usize..8, c in 1usize..8) {
            let m = random_matrix(seed, r, c);
            let exact = rank(&m, RankStrategy::Exact, None).unwrap().rank;
            let modular = rank(&m, RankStrategy::Modular, None).unwrap().rank;
            prop_assert!(modular <= exact);
        }

        #[test]
        fn bareiss_agrees_with_naive(seed in 0u64..1000, r in 1usize..9, c in 1usize..9) {
            let m = random_matrix(seed, r, c);
            prop_assert_eq!(rank(&m, RankStrategy::Exact, None).unwrap().rank, naive_rank(&m));
        }
    }
}
