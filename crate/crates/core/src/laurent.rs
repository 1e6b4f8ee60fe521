//! Laurent polynomials in `t_1, ..., t_d` over the graded class ring, with
//! exact coefficient extraction.
//!
//! Truncated objects (Segre series) carry a per-variable validity floor:
//! coefficients at exponents at or above the floor are exact, anything below
//! has been dropped. Floors propagate through sums and products, and
//! extraction below a floor is an error rather than a silent zero — silent
//! under-truncation is the classic correctness bug in Segre-series code.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graded_ring::GradedPolynomial;

/// A Laurent polynomial with `GradedPolynomial` coefficients.
///
/// `floors[v] = Some(F)` means the stored terms are exact only at exponents
/// `>= F` in variable `v`; `None` means exact everywhere. `bounds[v]` is an
/// upper bound on the exponents of the untruncated polynomial, including the
/// dropped part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<i64>, GradedPolynomial>,
    floors: Vec<Option<i64>>,
    bounds: Vec<i64>,
}

impl LaurentPolynomial {
    pub fn zero(num_vars: usize) -> Self {
        LaurentPolynomial {
            num_vars,
            terms: BTreeMap::new(),
            floors: vec![None; num_vars],
            bounds: vec![0; num_vars],
        }
    }

    pub fn constant(num_vars: usize, c: GradedPolynomial) -> Self {
        let mut p = Self::zero(num_vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; num_vars], c);
        }
        p
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, GradedPolynomial::one())
    }

    /// The variable `t_{var+1}` (zero-based index).
    pub fn var(num_vars: usize, var: usize) -> Self {
        assert!(var < num_vars);
        let mut e = vec![0i64; num_vars];
        e[var] = 1;
        Self::monomial(num_vars, e, GradedPolynomial::one())
    }

    pub fn monomial(num_vars: usize, exponents: Vec<i64>, c: GradedPolynomial) -> Self {
        assert_eq!(exponents.len(), num_vars);
        let mut p = Self::zero(num_vars);
        if !c.is_zero() {
            for (bound, &e) in p.bounds.iter_mut().zip(&exponents) {
                *bound = e.max(0);
            }
            p.terms.insert(exponents, c);
        }
        p
    }

    /// Exact polynomial from a term list; like terms are merged.
    pub fn from_terms<I>(num_vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, GradedPolynomial)>,
    {
        let mut map: BTreeMap<Vec<i64>, GradedPolynomial> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), num_vars);
            if c.is_zero() {
                continue;
            }
            match map.get_mut(&e) {
                Some(acc) => {
                    *acc = acc.add(&c);
                    if acc.is_zero() {
                        map.remove(&e);
                    }
                }
                None => {
                    map.insert(e, c);
                }
            }
        }
        let mut p = LaurentPolynomial {
            num_vars,
            terms: map,
            floors: vec![None; num_vars],
            bounds: vec![0; num_vars],
        };
        p.recompute_bounds_from_terms();
        p
    }

    /// A truncated polynomial: terms below a floor have been dropped.
    pub fn truncated<I>(num_vars: usize, terms: I, floors: Vec<Option<i64>>) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, GradedPolynomial)>,
    {
        assert_eq!(floors.len(), num_vars);
        let mut p = Self::from_terms(num_vars, terms);
        p.floors = floors;
        // the dropped part lives strictly below the floor
        for v in 0..num_vars {
            if let Some(f) = p.floors[v] {
                p.bounds[v] = p.bounds[v].max(f - 1);
            }
        }
        p.canonicalize();
        p
    }

    fn recompute_bounds_from_terms(&mut self) {
        for v in 0..self.num_vars {
            self.bounds[v] = self.terms.keys().map(|e| e[v]).max().unwrap_or(0).max(0);
        }
    }

    fn canonicalize(&mut self) {
        let floors = self.floors.clone();
        self.terms.retain(|e, c| {
            !c.is_zero()
                && e.iter()
                    .zip(&floors)
                    .all(|(&ev, f)| f.is_none_or(|fv| ev >= fv))
        });
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn floor(&self, var: usize) -> Option<i64> {
        self.floors[var]
    }

    /// Upper bound on the exponents of the untruncated polynomial in `var`.
    pub fn bound(&self, var: usize) -> i64 {
        self.bounds[var]
    }

    /// Largest stored exponent in `var`, if any term exists.
    pub fn max_exp(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &GradedPolynomial)> {
        self.terms.iter()
    }

    /// True when the polynomial is zero with nothing truncated away.
    pub fn is_exact_zero(&self) -> bool {
        self.terms.is_empty() && self.floors.iter().all(Option::is_none)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        let floors = (0..self.num_vars)
            .map(|v| max_floor(self.floors[v], other.floors[v]))
            .collect();
        let bounds = (0..self.num_vars)
            .map(|v| self.bounds[v].max(other.bounds[v]))
            .collect();
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            match terms.get_mut(e) {
                Some(acc) => {
                    *acc = acc.add(c);
                    if acc.is_zero() {
                        terms.remove(e);
                    }
                }
                None => {
                    terms.insert(e.clone(), c.clone());
                }
            }
        }
        let mut p = LaurentPolynomial {
            num_vars: self.num_vars,
            terms,
            floors,
            bounds,
        };
        p.canonicalize();
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        if self.is_exact_zero() || other.is_exact_zero() {
            return Self::zero(self.num_vars);
        }
        let floors: Vec<Option<i64>> = (0..self.num_vars)
            .map(|v| {
                max_floor(
                    self.floors[v].map(|f| f + other.bounds[v]),
                    other.floors[v].map(|f| f + self.bounds[v]),
                )
            })
            .collect();
        let bounds: Vec<i64> = (0..self.num_vars)
            .map(|v| self.bounds[v] + other.bounds[v])
            .collect();
        let mut terms: BTreeMap<Vec<i64>, GradedPolynomial> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let c = ca.mul(cb);
                if c.is_zero() {
                    continue;
                }
                match terms.get_mut(&e) {
                    Some(acc) => {
                        *acc = acc.add(&c);
                        if acc.is_zero() {
                            terms.remove(&e);
                        }
                    }
                    None => {
                        terms.insert(e, c);
                    }
                }
            }
        }
        let mut p = LaurentPolynomial {
            num_vars: self.num_vars,
            terms,
            floors,
            bounds,
        };
        p.canonicalize();
        p
    }

    /// Coefficient of `t_{var+1}^exp` as a Laurent polynomial in the other
    /// variables (the extracted variable is zeroed out).
    ///
    /// Errors when `exp` lies below the validity floor of `var`.
    pub fn coefficient_in_var(&self, var: usize, exp: i64) -> Result<Self> {
        assert!(var < self.num_vars);
        if let Some(f) = self.floors[var] {
            if exp < f {
                return Err(Error::UnderTruncated {
                    var: var + 1,
                    requested: exp,
                    floor: f,
                });
            }
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[var] == exp {
                let mut e2 = e.clone();
                e2[var] = 0;
                terms.insert(e2, c.clone());
            }
        }
        let mut floors = self.floors.clone();
        floors[var] = None;
        let mut bounds = self.bounds.clone();
        bounds[var] = 0;
        Ok(LaurentPolynomial {
            num_vars: self.num_vars,
            terms,
            floors,
            bounds,
        })
    }

    /// Coefficient at a full exponent vector.
    pub fn coefficient_of(&self, exponents: &[i64]) -> Result<GradedPolynomial> {
        assert_eq!(exponents.len(), self.num_vars);
        for (v, (&e, f)) in exponents.iter().zip(&self.floors).enumerate() {
            if let Some(fv) = *f {
                if e < fv {
                    return Err(Error::UnderTruncated {
                        var: v + 1,
                        requested: e,
                        floor: fv,
                    });
                }
            }
        }
        Ok(self
            .terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(GradedPolynomial::zero))
    }

    /// The constant term, i.e. the coefficient at the zero exponent vector.
    pub fn constant_term(&self) -> Result<GradedPolynomial> {
        self.coefficient_of(&vec![0; self.num_vars])
    }

    /// Embed a one-variable polynomial into `num_vars` variables at `var`.
    pub fn promote(&self, num_vars: usize, var: usize) -> Self {
        assert_eq!(self.num_vars, 1);
        assert!(var < num_vars);
        let mut floors = vec![None; num_vars];
        floors[var] = self.floors[0];
        let mut bounds = vec![0; num_vars];
        bounds[var] = self.bounds[0];
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = vec![0i64; num_vars];
                e2[var] = e[0];
                (e2, c.clone())
            })
            .collect();
        LaurentPolynomial {
            num_vars,
            terms,
            floors,
            bounds,
        }
    }
}

fn max_floor(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (None, x) => x,
        (x, None) => x,
        (Some(a), Some(b)) => Some(a.max(b)),
    }
}

/// Truncation plan for coefficient extraction against Segre series:
/// `floor_j = target_j - (combined max positive degree of the polynomial
/// factors in t_j)`.
///
/// Each entry of `factor_degrees` lists one factor's maximum positive degree
/// per variable. A floor above zero means the Segre factor in that variable
/// contributes only its constant term.
pub fn required_truncation(factor_degrees: &[Vec<i64>], target: &[i64]) -> Vec<i64> {
    let d = target.len();
    (0..d)
        .map(|v| {
            let combined: i64 = factor_degrees.iter().map(|f| f[v]).sum();
            target[v] - combined
        })
        .collect()
}
