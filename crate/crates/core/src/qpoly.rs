//! Sparse homogeneous polynomials with nonnegative integer coefficients, and
//! truncated expansions of the Q-functions.
//!
//! A homogeneous symmetric function of degree `n` is determined by its
//! restriction to `n` variables, so equality checks expand both sides in
//! `degree` variables. Coefficients are arbitrary-precision; exponent keys
//! are dense vectors ordered lexicographically, which is graded-lex within a
//! homogeneous polynomial.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde_json::json;

use crate::error::{Error, Result};
use crate::shapes::{SkewShape, StrictPartition};
use crate::tableaux::{self, FillingSearch};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPolynomial {
    nvars: usize,
    degree: usize,
    terms: BTreeMap<Vec<u16>, BigUint>,
}

impl QPolynomial {
    /// The zero polynomial of the given shape.
    pub fn zero(nvars: usize, degree: usize) -> Self {
        QPolynomial {
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The constant 1 in the given number of variables.
    pub fn one(nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; nvars], BigUint::from(1u32));
        QPolynomial {
            nvars,
            degree: 0,
            terms,
        }
    }

    /// Builds a polynomial from term pairs, checking homogeneity and
    /// positivity of the coefficients.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u16>, u64)>,
    {
        let mut map = BTreeMap::new();
        let mut degree: Option<usize> = None;
        for (exp, coef) in terms {
            if exp.len() != nvars {
                return Err(Error::VarCountMismatch(exp.len(), nvars));
            }
            let d: usize = exp.iter().map(|&e| e as usize).sum();
            match degree {
                None => degree = Some(d),
                Some(existing) if existing != d => {
                    return Err(Error::DegreeMismatch(existing, d))
                }
                _ => {}
            }
            if coef > 0 {
                *map.entry(exp).or_insert_with(|| BigUint::from(0u32)) += coef;
            }
        }
        Ok(QPolynomial {
            nvars,
            degree: degree.unwrap_or(0),
            terms: map,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &BigUint)> {
        self.terms.iter().map(|(e, c)| (&e[..], c))
    }

    pub fn coefficient(&self, exp: &[u16]) -> BigUint {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &QPolynomial) -> Result<QPolynomial> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch(self.nvars, other.nvars));
        }
        if !self.is_zero() && !other.is_zero() && self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut terms = self.terms.clone();
        for (exp, coef) in &other.terms {
            *terms.entry(exp.clone()).or_insert_with(|| BigUint::from(0u32)) += coef;
        }
        Ok(QPolynomial {
            nvars: self.nvars,
            degree,
            terms,
        })
    }

    /// Multiplies every coefficient by a positive integer.
    pub fn scale(&self, factor: u64) -> QPolynomial {
        debug_assert!(factor > 0);
        QPolynomial {
            nvars: self.nvars,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    /// Structural equality; constants compare equal across variable counts.
    pub fn equals(&self, other: &QPolynomial) -> bool {
        if self.degree == 0 && other.degree == 0 {
            let a = self.terms.values().next();
            let b = other.terms.values().next();
            return a == b;
        }
        self.nvars == other.nvars && self.terms == other.terms
    }

    /// Invariance under every adjacent transposition of the variables.
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.nvars.saturating_sub(1) {
            for (exp, coef) in &self.terms {
                let mut swapped = exp.clone();
                swapped.swap(i, i + 1);
                if self.terms.get(&swapped) != Some(coef) {
                    return false;
                }
            }
        }
        true
    }

    /// Projects away the last variable: keeps the terms with last exponent
    /// zero and shortens the exponent vectors.
    pub fn drop_last_var(&self) -> QPolynomial {
        assert!(self.nvars > 0);
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[self.nvars - 1] == 0)
            .map(|(e, c)| (e[..self.nvars - 1].to_vec(), c.clone()))
            .collect();
        QPolynomial {
            nvars: self.nvars - 1,
            degree: self.degree,
            terms,
        }
    }

    /// JSON form with terms in graded-lex order and decimal-string
    /// coefficients.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({ "exp": e, "coef": c.to_string() }))
            .collect();
        json!({
            "nvars": self.nvars,
            "degree": self.degree,
            "terms": terms,
        })
    }
}

/// The truncated Q-function of a shape: the content generating function over
/// all GSYT with letter values at most `nvars`. The empty shape yields the
/// constant 1.
pub fn expand_q(shape: &SkewShape, nvars: usize) -> QPolynomial {
    let mut search = FillingSearch::gsyt(shape, nvars as u32);
    let mut terms: BTreeMap<Vec<u16>, BigUint> = BTreeMap::new();
    let one = BigUint::from(1u32);
    while search.next_assignment() {
        let exp: Vec<u16> = search.current_counts().iter().map(|&c| c as u16).collect();
        debug_assert_eq!(exp.len(), nvars);
        match terms.get_mut(&exp[..]) {
            Some(c) => *c += &one,
            None => {
                terms.insert(exp, one.clone());
            }
        }
    }
    QPolynomial {
        nvars,
        degree: shape.ncells(),
        terms,
    }
}

/// Checks the decomposition of a skew Q-function into straight ones: expands
/// the shape in `n = ncells` variables and compares against the sum of its
/// amenable-content expansions with multiplicity.
pub fn verify_decomposition(shape: &SkewShape) -> Result<bool> {
    let n = shape.ncells();
    let lhs = expand_q(shape, n);
    let mut rhs = QPolynomial::zero(n, n);
    for (nu, mult) in tableaux::decompose(shape)? {
        let straight = SkewShape::new(nu, StrictPartition::empty())
            .expect("straight shape is always valid");
        rhs = rhs.add(&expand_q(&straight, n).scale(mult))?;
    }
    Ok(lhs.equals(&rhs))
}
