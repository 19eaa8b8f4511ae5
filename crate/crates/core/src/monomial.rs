//! Exact monomial-ideal arithmetic with embedded-prime-aware symbolic
//! powers.
//!
//! Symbolic powers here follow the associated-prime definition
//! I^(m) = ∩_p (I^m R_p ∩ R), which for monomial ideals and monomial
//! primes is computed by erasing the exponents of the inverted
//! variables. The module carries the product-ideal fixture whose second
//! symbolic power of the square differs from the fourth symbolic power,
//! and doubles as an independent oracle for coordinate-point
//! configurations.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A monomial as an exponent vector over a fixed variable list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn variable(nvars: usize, i: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// self / gcd(self, other): the colon of a principal ideal.
    pub fn quotient_by(&self, other: &Monomial) -> Monomial {
        let g = self.gcd(other);
        Monomial(self.0.iter().zip(&g.0).map(|(a, b)| a - b).collect())
    }

    /// Render against variable names, e.g. `x^2*u*v`.
    pub fn render(&self, vars: &[String]) -> String {
        let mut parts = Vec::new();
        for (e, v) in self.0.iter().zip(vars) {
            match e {
                0 => {}
                1 => parts.push(v.clone()),
                _ => parts.push(format!("{}^{}", v, e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// deglex: ascending degree, then descending lexicographic.
fn deglex(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then(b.0.cmp(&a.0))
}

/// A monomial ideal by its unique minimal generating set, sorted in
/// deglex order. The zero ideal has no generators; the unit ideal is
/// generated by 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: Vec<String>,
    gens: Vec<Monomial>,
}

/// A prime generated by a subset of the variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MonomialPrime {
    pub variables: BTreeSet<usize>,
}

impl MonomialPrime {
    pub fn new(variables: impl IntoIterator<Item = usize>) -> Result<Self> {
        let variables: BTreeSet<usize> = variables.into_iter().collect();
        if variables.is_empty() {
            return Err(Error::InvalidArgument("empty monomial prime".into()));
        }
        Ok(MonomialPrime { variables })
    }

    pub fn render(&self, vars: &[String]) -> String {
        let names: Vec<&str> = self.variables.iter().map(|&i| vars[i].as_str()).collect();
        format!("({})", names.join(", "))
    }
}

/// Drop every monomial divisible by another in the set; the result is
/// the unique minimal generating set.
pub fn minimalize(vars: Vec<String>, gens: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
    let mut sorted: Vec<Monomial> = gens.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    sorted.sort_by(deglex);
    let mut kept: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    MonomialIdeal { vars, gens: kept }
}

impl MonomialIdeal {
    pub fn new(vars: Vec<String>, gens: Vec<Monomial>) -> MonomialIdeal {
        minimalize(vars, gens)
    }

    pub fn zero(vars: Vec<String>) -> MonomialIdeal {
        MonomialIdeal { vars, gens: Vec::new() }
    }

    pub fn unit(vars: Vec<String>) -> MonomialIdeal {
        let n = vars.len();
        MonomialIdeal {
            vars,
            gens: vec![Monomial::one(n)],
        }
    }

    /// Ideal generated by the given variables.
    pub fn of_prime(vars: Vec<String>, p: &MonomialPrime) -> MonomialIdeal {
        let n = vars.len();
        let gens = p.variables.iter().map(|&i| Monomial::variable(n, i)).collect();
        MonomialIdeal { vars, gens }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == 0)
    }

    fn check_vars(&self, other: &MonomialIdeal) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    pub fn contains_monomial(&self, w: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(w))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_vars(other)?;
        Ok(other.gens.iter().all(|g| self.contains_monomial(g)))
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_vars(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.push(a.mul(b));
            }
        }
        Ok(minimalize(self.vars.clone(), prods))
    }

    pub fn power(&self, e: u32) -> MonomialIdeal {
        if e == 0 {
            return MonomialIdeal::unit(self.vars.clone());
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.multiply(self).expect("same variable list");
        }
        acc
    }

    /// Intersection; generated by pairwise lcms. A monomial lies in the
    /// result iff it lies in both inputs.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_vars(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b));
            }
        }
        Ok(minimalize(self.vars.clone(), lcms))
    }

    /// (I : w) for a single monomial w.
    pub fn colon(&self, w: &Monomial) -> MonomialIdeal {
        let gens: Vec<Monomial> = self.gens.iter().map(|g| g.quotient_by(w)).collect();
        minimalize(self.vars.clone(), gens)
    }

    /// (I : J) = ∩ over generators of J.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_vars(other)?;
        let mut acc: Option<MonomialIdeal> = None;
        for g in &other.gens {
            let c = self.colon(g);
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| MonomialIdeal::unit(self.vars.clone())))
    }

    /// I R_p ∩ R for a monomial prime p: set the variables outside p
    /// to 1 (erase their exponents), then minimalize.
    pub fn localize_contract(&self, p: &MonomialPrime) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                Monomial(
                    g.0.iter()
                        .enumerate()
                        .map(|(i, &e)| if p.variables.contains(&i) { e } else { 0 })
                        .collect(),
                )
            })
            .collect::<Vec<_>>();
        minimalize(self.vars.clone(), gens)
    }

    /// Least generator degree; generators realize the initial degree
    /// for monomial ideals.
    pub fn alpha(&self) -> Result<u32> {
        self.gens
            .iter()
            .map(|g| g.degree())
            .min()
            .ok_or(Error::ZeroIdeal)
    }
}

/// Mode of the associated-prime search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssMode {
    /// Decide only whether the full variable prime is associated;
    /// exact unconditionally (socle test via a colon by the maximal
    /// ideal).
    MaxidealOnly,
    /// Enumerate witnesses dividing the componentwise max of the
    /// generator exponents; complete under that witness bound.
    BoundedWitness,
}

#[derive(Debug, Clone)]
pub struct AssPrimes {
    pub primes: Vec<MonomialPrime>,
    /// True when the mode's completeness assumption applies (bounded
    /// witness enumeration); maxideal-only mode answers one membership
    /// question exactly but never claims the full list.
    pub complete_under_witness_bound: bool,
    pub witness_bound: Option<Vec<u32>>,
}

/// Associated primes of R/I.
pub fn ass_primes(ideal: &MonomialIdeal, mode: AssMode) -> Result<AssPrimes> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::InvalidArgument(
            "associated primes need a nonzero proper ideal".into(),
        ));
    }
    let nvars = ideal.vars.len();
    match mode {
        AssMode::MaxidealOnly => {
            let max_prime = MonomialPrime::new(0..nvars)?;
            let m_ideal = MonomialIdeal::of_prime(ideal.vars.clone(), &max_prime);
            let saturated = ideal.colon_ideal(&m_ideal)?;
            let associated = saturated != *ideal;
            Ok(AssPrimes {
                primes: if associated { vec![max_prime] } else { Vec::new() },
                complete_under_witness_bound: false,
                witness_bound: None,
            })
        }
        AssMode::BoundedWitness => {
            let bound: Vec<u32> = (0..nvars)
                .map(|i| ideal.gens.iter().map(|g| g.0[i]).max().unwrap_or(0))
                .collect();
            let mut found: BTreeSet<MonomialPrime> = BTreeSet::new();
            let mut witness = vec![0u32; nvars];
            loop {
                let w = Monomial(witness.clone());
                if !ideal.contains_monomial(&w) {
                    let q = ideal.colon(&w);
                    if !q.is_zero()
                        && !q.is_unit()
                        && q.gens.iter().all(|g| g.degree() == 1)
                    {
                        let vars = q
                            .gens
                            .iter()
                            .map(|g| g.0.iter().position(|&e| e == 1).unwrap());
                        found.insert(MonomialPrime::new(vars)?);
                    }
                }
                // odometer over the witness box
                let mut i = 0;
                loop {
                    if i == nvars {
                        break;
                    }
                    if witness[i] < bound[i] {
                        witness[i] += 1;
                        break;
                    }
                    witness[i] = 0;
                    i += 1;
                }
                if i == nvars {
                    break;
                }
            }
            Ok(AssPrimes {
                primes: found.into_iter().collect(),
                complete_under_witness_bound: true,
                witness_bound: Some(bound),
            })
        }
    }
}

/// The m-th symbolic power: ∩ over the given primes (default: the
/// bounded-witness associated primes of I) of the localized contraction
/// of I^m.
pub fn symbolic_power(
    ideal: &MonomialIdeal,
    m: u32,
    primes: Option<&[MonomialPrime]>,
) -> Result<MonomialIdeal> {
    if m < 1 {
        return Err(Error::InvalidArgument("symbolic power needs m >= 1".into()));
    }
    let default_primes;
    let primes = match primes {
        Some(ps) => ps,
        None => {
            default_primes = ass_primes(ideal, AssMode::BoundedWitness)?.primes;
            &default_primes
        }
    };
    if primes.is_empty() {
        return Err(Error::InvalidArgument(
            "symbolic power needs a nonempty prime list".into(),
        ));
    }
    let power = ideal.power(m);
    let mut acc: Option<MonomialIdeal> = None;
    for p in primes {
        let local = power.localize_contract(p);
        acc = Some(match acc {
            None => local,
            Some(prev) => prev.intersect(&local)?,
        });
    }
    Ok(acc.expect("nonempty prime list"))
}

/// The radical ideal of the N+1 coordinate points of P^N: the
/// intersection of the coordinate primes (x_j : j != i).
pub fn coordinate_points_ideal(dim: usize) -> MonomialIdeal {
    let vars: Vec<String> = (0..=dim).map(|i| format!("x{}", i)).collect();
    let mut acc: Option<MonomialIdeal> = None;
    for i in 0..=dim {
        let p = MonomialPrime::new((0..=dim).filter(|&j| j != i)).unwrap();
        let prime_ideal = MonomialIdeal::of_prime(vars.clone(), &p);
        acc = Some(match acc {
            None => prime_ideal,
            Some(prev) => prev.intersect(&prime_ideal).unwrap(),
        });
    }
    acc.unwrap()
}

/// The coordinate primes of P^N, for symbolic powers of
/// [`coordinate_points_ideal`] taken over the point primes themselves.
pub fn coordinate_point_primes(dim: usize) -> Vec<MonomialPrime> {
    (0..=dim)
        .map(|i| MonomialPrime::new((0..=dim).filter(|&j| j != i)).unwrap())
        .collect()
}

fn parse_fixture(vars: &[&str], gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(
        vars.iter().map(|s| s.to_string()).collect(),
        gens.iter().map(|g| Monomial(g.to_vec())).collect(),
    )
}

/// The two factor ideals of the product fixture in k[x, t, u, v]:
/// (x^4, x^3 u, x u^3, u^4, x^2 u^2 v) and (t^3, t u v, u^2 v).
pub fn fixture_factors() -> (MonomialIdeal, MonomialIdeal) {
    let vars = ["x", "t", "u", "v"];
    let j1 = parse_fixture(
        &vars,
        &[
            &[4, 0, 0, 0],
            &[3, 0, 1, 0],
            &[1, 0, 3, 0],
            &[0, 0, 4, 0],
            &[2, 0, 2, 1],
        ],
    );
    let j2 = parse_fixture(&vars, &[&[0, 3, 0, 0], &[0, 1, 1, 1], &[0, 0, 2, 1]]);
    (j1, j2)
}

/// One named check of the counterexample report.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub witness: String,
}

/// Structured outcome of the embedded-prime counterexample: the square
/// of the second symbolic power differs from the fourth.
#[derive(Debug, Clone)]
pub struct CounterexampleReport {
    pub checks: Vec<CheckOutcome>,
    pub socle_witness: String,
    pub deep_witness: String,
    pub ass_j2: Vec<String>,
    pub conclusion_holds: bool,
}

impl CounterexampleReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Verify, step by step and each with a witness, that for J = J1*J2 the
/// maximal ideal is associated to J (so symbolic powers of J are
/// ordinary powers), not associated to J^2, associated to J^4, and that
/// an explicit monomial lies in (J^(2))^(2) but not in J^(4).
pub fn verify_counterexample() -> Result<CounterexampleReport> {
    let (j1, j2) = fixture_factors();
    let j = j1.multiply(&j2)?;
    let vars = j.vars().to_vec();
    let nvars = vars.len();
    let max_prime = MonomialPrime::new(0..nvars)?;
    let m_ideal = MonomialIdeal::of_prime(vars.clone(), &max_prime);

    let mut checks = Vec::new();

    // (1) y = x^2 t^2 u^3 v is a socle element: y not in J, y*M in J
    let y = Monomial(vec![2, 2, 3, 1]);
    let socle_colon = j.colon(&y);
    let socle_ok = !j.contains_monomial(&y) && socle_colon == m_ideal;
    checks.push(CheckOutcome {
        name: "socle witness for J at the maximal ideal".into(),
        passed: socle_ok,
        witness: y.render(&vars),
    });

    // (2) maximal ideal not associated to J^2
    let j2pow = j.power(2);
    let sat2 = j2pow.colon_ideal(&m_ideal)?;
    let not_ass_sq = sat2 == j2pow;
    checks.push(CheckOutcome {
        name: "maximal ideal not associated to J^2".into(),
        passed: not_ass_sq,
        witness: "(J^2 : M) = J^2".into(),
    });

    // (3) maximal ideal associated to J^4, with explicit witness z
    let j4 = j.power(4);
    let sat4 = j4.colon_ideal(&m_ideal)?;
    let z = sat4
        .generators()
        .iter()
        .find(|g| !j4.contains_monomial(g))
        .cloned();
    let z_ok = z.is_some();
    let z = z.unwrap_or_else(|| Monomial::one(nvars));
    checks.push(CheckOutcome {
        name: "maximal ideal associated to J^4".into(),
        passed: z_ok,
        witness: z.render(&vars),
    });

    // (4) z in (J^(2))^(2) but not in J^4; J^(2) = J^2 because the
    // maximal ideal is associated to J, so (J^(2))^(2) is the symbolic
    // square of J^2 over Ass(R/J^2)
    let ass2 = ass_primes(&j2pow, AssMode::BoundedWitness)?;
    let sym = symbolic_power(&j2pow, 2, Some(&ass2.primes))?;
    let z_in_sym = sym.contains_monomial(&z);
    let z_not_in_j4 = !j4.contains_monomial(&z);
    checks.push(CheckOutcome {
        name: "witness lies in (J^(2))^(2) but not in J^(4)".into(),
        passed: z_in_sym && z_not_in_j4,
        witness: z.render(&vars),
    });

    let conclusion = checks.iter().all(|c| c.passed);
    Ok(CounterexampleReport {
        socle_witness: y.render(&vars),
        deep_witness: z.render(&vars),
        ass_j2: ass2.primes.iter().map(|p| p.render(&vars)).collect(),
        checks,
        conclusion_holds: conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy_ideal(gens: &[&[u32]]) -> MonomialIdeal {
        parse_fixture(&["x", "y"], gens)
    }

    #[test]
    fn minimalize_examples() {
        let i = xy_ideal(&[&[1, 0], &[1, 1]]);
        assert_eq!(i.generators(), &[Monomial(vec![1, 0])]);

        let i = xy_ideal(&[&[2, 0], &[1, 1], &[0, 2], &[2, 1]]);
        assert_eq!(
            i.generators(),
            &[
                Monomial(vec![2, 0]),
                Monomial(vec![1, 1]),
                Monomial(vec![0, 2])
            ]
        );
    }

    #[test]
    fn multiply_and_power() {
        let x = xy_ideal(&[&[1, 0]]);
        let y = xy_ideal(&[&[0, 1]]);
        assert_eq!(x.multiply(&y).unwrap().generators(), &[Monomial(vec![1, 1])]);

        let m = xy_ideal(&[&[1, 0], &[0, 1]]);
        let sq = m.power(2);
        assert_eq!(
            sq.generators(),
            &[
                Monomial(vec![2, 0]),
                Monomial(vec![1, 1]),
                Monomial(vec![0, 2])
            ]
        );
        assert!(m.power(0).is_unit());
    }

    #[test]
    fn fixture_product_alpha() {
        let (j1, j2) = fixture_factors();
        assert_eq!(j1.alpha().unwrap(), 4);
        assert_eq!(j2.alpha().unwrap(), 3);
        let j = j1.multiply(&j2).unwrap();
        assert_eq!(j.alpha().unwrap(), 7);
    }

    #[test]
    fn intersect_examples() {
        let x = xy_ideal(&[&[1, 0]]);
        let y = xy_ideal(&[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap().generators(), &[Monomial(vec![1, 1])]);
        let i = xy_ideal(&[&[2, 0], &[1, 1]]);
        assert_eq!(i.intersect(&i).unwrap(), i);
    }

    #[test]
    fn coordinate_points_ideals() {
        let i = coordinate_points_ideal(1);
        assert_eq!(i.generators(), &[Monomial(vec![1, 1])]);

        let i = coordinate_points_ideal(2);
        assert_eq!(
            i.generators(),
            &[
                Monomial(vec![1, 1, 0]),
                Monomial(vec![1, 0, 1]),
                Monomial(vec![0, 1, 1])
            ]
        );

        let i = coordinate_points_ideal(3);
        assert_eq!(i.generators().len(), 6);
        assert!(i.generators().iter().all(|g| g.degree() == 2));
        assert_eq!(i.alpha().unwrap(), 2);
    }

    #[test]
    fn colon_examples() {
        let xy = xy_ideal(&[&[1, 1]]);
        let x = Monomial(vec![1, 0]);
        assert_eq!(xy.colon(&x).generators(), &[Monomial(vec![0, 1])]);
        let i = xy_ideal(&[&[2, 0], &[1, 1]]);
        assert_eq!(i.colon(&Monomial::one(2)), i);
    }

    #[test]
    fn colon_membership_consistency() {
        // w in (I : v) iff w*v in I, scanned over a small box
        let i = xy_ideal(&[&[3, 0], &[1, 2]]);
        let v = Monomial(vec![1, 1]);
        let c = i.colon(&v);
        for a in 0..6u32 {
            for b in 0..6u32 {
                let w = Monomial(vec![a, b]);
                assert_eq!(c.contains_monomial(&w), i.contains_monomial(&w.mul(&v)));
            }
        }
    }

    #[test]
    fn localize_contract_examples() {
        let i = coordinate_points_ideal(2);
        let p = MonomialPrime::new([0, 1]).unwrap();
        let l = i.localize_contract(&p);
        assert_eq!(
            l.generators(),
            &[Monomial(vec![1, 0, 0]), Monomial(vec![0, 1, 0])]
        );
        let all = MonomialPrime::new([0, 1, 2]).unwrap();
        assert_eq!(i.localize_contract(&all), i);
    }

    #[test]
    fn ass_primes_small_examples() {
        let xy = xy_ideal(&[&[1, 1]]);
        let out = ass_primes(&xy, AssMode::BoundedWitness).unwrap();
        assert_eq!(
            out.primes,
            vec![
                MonomialPrime::new([0]).unwrap(),
                MonomialPrime::new([1]).unwrap()
            ]
        );

        let i = xy_ideal(&[&[2, 0], &[1, 1]]);
        let out = ass_primes(&i, AssMode::BoundedWitness).unwrap();
        assert_eq!(
            out.primes,
            vec![
                MonomialPrime::new([0]).unwrap(),
                MonomialPrime::new([0, 1]).unwrap()
            ]
        );
    }

    #[test]
    fn symbolic_power_of_prime_is_ordinary() {
        let m = xy_ideal(&[&[1, 0], &[0, 1]]);
        for e in 1..=3 {
            assert_eq!(symbolic_power(&m, e, None).unwrap(), m.power(e));
        }
    }

    #[test]
    fn symbolic_power_coordinate_points() {
        let i = coordinate_points_ideal(2);
        let primes = coordinate_point_primes(2);
        let sym2 = symbolic_power(&i, 2, Some(&primes)).unwrap();
        assert_eq!(sym2.alpha().unwrap(), 3);
        assert!(sym2.contains_monomial(&Monomial(vec![1, 1, 1])));
        // x0x1x2 is in the symbolic square but not the ordinary square
        assert!(!i.power(2).contains_monomial(&Monomial(vec![1, 1, 1])));
        // matches the intersection of the three squared coordinate primes
        let mut expect: Option<MonomialIdeal> = None;
        for p in &primes {
            let sq = MonomialIdeal::of_prime(i.vars().to_vec(), p).power(2);
            expect = Some(match expect {
                None => sq,
                Some(prev) => prev.intersect(&sq).unwrap(),
            });
        }
        assert_eq!(sym2, expect.unwrap());
    }

    #[test]
    fn symbolic_power_nesting_invariants() {
        let i = coordinate_points_ideal(2);
        let primes = coordinate_point_primes(2);
        let mut prev: Option<MonomialIdeal> = None;
        for m in 1..=4 {
            let sym = symbolic_power(&i, m, Some(&primes)).unwrap();
            assert!(sym.contains_ideal(&i.power(m)).unwrap());
            assert!(i.contains_ideal(&sym).unwrap());
            if let Some(p) = prev {
                assert!(p.contains_ideal(&sym).unwrap());
            }
            prev = Some(sym);
        }
        assert_eq!(symbolic_power(&i, 1, Some(&primes)).unwrap(), i);
    }

    #[test]
    fn fixture_symbolic_equals_ordinary_low_powers() {
        let (j1, j2) = fixture_factors();
        let j = j1.multiply(&j2).unwrap();
        // the maximal ideal is associated, so J^(n) = J^n
        let ass = ass_primes(&j, AssMode::MaxidealOnly).unwrap();
        assert_eq!(ass.primes.len(), 1);
        let all = ass_primes(&j, AssMode::BoundedWitness).unwrap();
        for n in 1..=2 {
            assert_eq!(symbolic_power(&j, n, Some(&all.primes)).unwrap(), j.power(n));
        }
    }

    #[test]
    fn counterexample_report_passes() {
        let report = verify_counterexample().unwrap();
        for c in &report.checks {
            assert!(c.passed, "failed: {}", c.name);
        }
        assert!(report.conclusion_holds);
        assert_eq!(report.socle_witness, "x^2*t^2*u^3*v");
    }

    #[test]
    fn fixture_subadditive_containments() {
        // J^(mt) ⊆ (J^(m))^(t) instances on the fixture
        let (j1, j2) = fixture_factors();
        let j = j1.multiply(&j2).unwrap();
        let ass = ass_primes(&j, AssMode::BoundedWitness).unwrap();
        let j2pow = j.power(2);
        let ass_sq = ass_primes(&j2pow, AssMode::BoundedWitness).unwrap();
        // (m,t) = (2,2): J^(4) = J^4 ⊆ (J^(2))^(2)
        let sym4 = symbolic_power(&j, 4, Some(&ass.primes)).unwrap();
        let nested = symbolic_power(&j2pow, 2, Some(&ass_sq.primes)).unwrap();
        assert!(nested.contains_ideal(&sym4).unwrap());
    }

    #[test]
    fn zero_and_unit_edges() {
        let z = MonomialIdeal::zero(vec!["x".into(), "y".into()]);
        assert!(z.is_zero());
        assert!(z.alpha().is_err());
        assert!(ass_primes(&z, AssMode::BoundedWitness).is_err());
        let u = MonomialIdeal::unit(vec!["x".into(), "y".into()]);
        assert!(u.is_unit());
        assert!(ass_primes(&u, AssMode::MaxidealOnly).is_err());
    }
}
