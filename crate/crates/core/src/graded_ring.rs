//! The free graded commutative ring over the integers on named class
//! generators.
//!
//! Generators are Segre classes `s_k(E_m)`, the twisting class `l = c_1(L)`
//! and the flag Chern roots `y_i`. Coefficients are arbitrary-precision
//! integers and no relations are imposed; interpretations of the generators
//! live in `chern_models`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A named degree-graded generator of the class ring.
///
/// The derived order (Segre, then `l`, then roots, each by its indices) is
/// the monomial tie-break order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// The Segre class `s_k(E_m)`, of degree `k >= 1`.
    Segre { k: u32, m: u32 },
    /// The class `l = c_1(L)`, of degree 1.
    ChernL,
    /// A Chern root `y_i` of the reference flag, of degree 1.
    Root { i: u32 },
}

impl Generator {
    pub fn segre(k: u32, m: u32) -> Self {
        assert!(k >= 1, "s_0 is the scalar 1, not a generator");
        Generator::Segre { k, m }
    }

    pub fn root(i: u32) -> Self {
        assert!(i >= 1, "roots are indexed from 1");
        Generator::Root { i }
    }

    pub fn degree(&self) -> u32 {
        match self {
            Generator::Segre { k, .. } => *k,
            Generator::ChernL | Generator::Root { .. } => 1,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Segre { k, m } => write!(f, "s_{k}(E_{m})"),
            Generator::ChernL => write!(f, "l"),
            Generator::Root { i } => write!(f, "y_{i}"),
        }
    }
}

/// A commutative word in the generators: sorted `(generator, power)` pairs
/// with positive powers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(Generator, u32)>,
}

impl Monomial {
    /// The empty monomial `1`.
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn generator(g: Generator) -> Self {
        Monomial {
            factors: vec![(g, 1)],
        }
    }

    pub fn from_powers(mut powers: Vec<(Generator, u32)>) -> Self {
        powers.retain(|&(_, e)| e > 0);
        powers.sort_unstable_by_key(|&(g, _)| g);
        let mut factors: Vec<(Generator, u32)> = Vec::with_capacity(powers.len());
        for (g, e) in powers {
            match factors.last_mut() {
                Some((h, f)) if *h == g => *f += e,
                _ => factors.push((g, e)),
            }
        }
        Monomial { factors }
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(g, e)| g.degree() * e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Monomial::from_powers(factors)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            factors: self.factors.iter().map(|&(g, p)| (g, p * e)).collect(),
        }
    }
}

impl Ord for Monomial {
    /// Graded order, ties broken lexicographically in the generator order.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let mut a = self.factors.iter();
        let mut b = other.factors.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((ga, ea)), Some((gb, eb))) => match ga.cmp(gb) {
                    // a positive power on an earlier generator wins
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => continue,
                        o => return o,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (idx, (g, e)) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Homogeneity of a graded class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(u32),
    Inhomogeneous,
}

/// An element of the free graded ring: a finite sum of monomials with
/// nonzero arbitrary-precision integer coefficients, kept in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedPolynomial {
    terms: std::collections::BTreeMap<Monomial, BigInt>,
}

impl GradedPolynomial {
    pub fn zero() -> Self {
        GradedPolynomial::default()
    }

    pub fn one() -> Self {
        GradedPolynomial::from_int(1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        let c: BigInt = c.into();
        let mut p = GradedPolynomial::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn generator(g: Generator) -> Self {
        let mut p = GradedPolynomial::zero();
        p.terms.insert(Monomial::generator(g), BigInt::one());
        p
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c: BigInt = c.into();
        let mut p = GradedPolynomial::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The constant (degree-zero) coefficient.
    pub fn constant_coefficient(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GradedPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = GradedPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return GradedPolynomial::zero();
        }
        GradedPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = GradedPolynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Common degree of all monomials, if any.
    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    /// Replace every generator by an image polynomial.
    pub fn substitute<F>(&self, image: F) -> Result<GradedPolynomial>
    where
        F: Fn(&Generator) -> Result<GradedPolynomial>,
    {
        let mut out = GradedPolynomial::zero();
        for (m, c) in &self.terms {
            let mut term = GradedPolynomial::from_int(c.clone());
            for (g, e) in m.factors() {
                term = term.mul(&image(g)?.pow(*e));
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Divide every coefficient by two, exactly.
    pub fn half(&self) -> Result<GradedPolynomial> {
        let two = BigInt::from(2);
        let mut terms = std::collections::BTreeMap::new();
        for (m, c) in &self.terms {
            if !(c % &two).is_zero() {
                return Err(Error::OddCoefficient);
            }
            terms.insert(m.clone(), c / &two);
        }
        Ok(GradedPolynomial { terms })
    }
}

impl Add for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, other: Self) -> GradedPolynomial {
        GradedPolynomial::add(self, other)
    }
}

impl Sub for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn sub(self, other: Self) -> GradedPolynomial {
        GradedPolynomial::sub(self, other)
    }
}

impl Mul for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, other: Self) -> GradedPolynomial {
        GradedPolynomial::mul(self, other)
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        GradedPolynomial::neg(self)
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // leading (highest) term first
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let abs = c.magnitude();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
