//! Exponent vectors and their deglex enumeration.
//!
//! Column order everywhere in the crate is descending lexicographic
//! within a fixed total degree, so the monomial `x0^t` comes first and
//! `xN^t` last. Degree-bounded enumerations list degrees in ascending
//! order with the same within-degree order.

use std::collections::HashMap;

use num_traits::One;

use crate::{binomial, Integer, Rational};

/// An exponent vector over a fixed variable list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise difference; caller must ensure `other.leq(self)`.
    pub fn sub(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Product of componentwise binomials binom(self_i, other_i).
    pub fn binomial_product(&self, other: &MultiIndex) -> Integer {
        let mut acc = Integer::one();
        for (&a, &b) in self.0.iter().zip(&other.0) {
            acc *= Integer::from(binomial(a as usize, b as usize));
        }
        acc
    }

    /// Evaluate the monomial x^self at rational coordinates.
    pub fn eval(&self, coords: &[Rational]) -> Rational {
        let mut acc = Rational::one();
        for (e, c) in self.0.iter().zip(coords) {
            for _ in 0..*e {
                acc *= c;
            }
        }
        acc
    }

    /// Evaluate the monomial x^self at integer coordinates.
    pub fn eval_int(&self, coords: &[Integer]) -> Integer {
        let mut acc = Integer::one();
        for (e, c) in self.0.iter().zip(coords) {
            for _ in 0..*e {
                acc *= c;
            }
        }
        acc
    }
}

fn push_monomials(prefix: &mut Vec<u32>, remaining_vars: usize, degree: u32, out: &mut Vec<MultiIndex>) {
    if remaining_vars == 1 {
        prefix.push(degree);
        out.push(MultiIndex(prefix.clone()));
        prefix.pop();
        return;
    }
    for e in (0..=degree).rev() {
        prefix.push(e);
        push_monomials(prefix, remaining_vars - 1, degree - e, out);
        prefix.pop();
    }
}

/// All exponent vectors of the given total degree over `nvars`
/// variables, in descending lexicographic order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<MultiIndex> {
    assert!(nvars >= 1);
    let mut out = Vec::with_capacity(binomial(degree as usize + nvars - 1, nvars - 1));
    push_monomials(&mut Vec::with_capacity(nvars), nvars, degree, &mut out);
    out
}

/// All exponent vectors of total degree at most `bound`, degrees
/// ascending, descending lex within each degree.
pub fn monomials_up_to(nvars: usize, bound: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    for d in 0..=bound {
        out.extend(monomials_of_degree(nvars, d));
    }
    out
}

/// Position lookup for a monomial list.
pub fn index_map(monomials: &[MultiIndex]) -> HashMap<MultiIndex, usize> {
    monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect()
}
