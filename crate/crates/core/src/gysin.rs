//! The Gysin pushforward evaluators.
//!
//! Two independent routes compute the same class and cross-check each other:
//!
//! - [`gysin_closed`] extracts the coefficient of `prod t_j^{mu_j - 1}` from
//!   `f * prod_{i<j} (t_i - t_j) * prod (l + t_i + t_j) * prod s_{1/t_j}(E_{mu_j})`,
//!   where the middle product runs over pairs with `mu_i + mu_j > 2n + 1`
//!   (`i < j` in the symplectic case, `i <= j` in the even-orthogonal case,
//!   the diagonal contributing `l + 2 t_j`).
//! - [`gysin_tower`] works one variable at a time with the pre-simplification
//!   kernel: relative Segre series `s_{1/t_j}(E_{mu_j}) * prod (1 - t_{j'}/t_j)`
//!   and the lower extraction exponent `mu_j - d + j - 1` per step.
//!
//! Both accept arbitrary (not necessarily symmetric) integer polynomials in
//! `t_1, ..., t_d`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chern_models::ChernModel;
use crate::error::{Error, Result};
use crate::graded_ring::{GradedPolynomial, Homogeneity};
use crate::laurent::{required_truncation, LaurentPolynomial};
use crate::partitions::{
    self, AmbientShape, FormType, OrdinaryPartition, StrictPartition,
};

/// A polynomial in `t_1, ..., t_d` with integer coefficients and nonnegative
/// exponents: the class to be pushed forward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputClass {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl InputClass {
    pub fn zero(num_vars: usize) -> Self {
        InputClass {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: impl Into<BigInt>) -> Self {
        let c: BigInt = c.into();
        let mut p = Self::zero(num_vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; num_vars], c);
        }
        p
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, 1)
    }

    /// The variable `t_{index+1}` (zero-based index).
    pub fn variable(num_vars: usize, index: usize) -> Result<Self> {
        if index >= num_vars {
            return Err(Error::VarOutOfRange { index, num_vars });
        }
        let mut e = vec![0u32; num_vars];
        e[index] = 1;
        let mut p = Self::zero(num_vars);
        p.terms.insert(e, BigInt::one());
        Ok(p)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        InputClass {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = Self::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.num_vars);
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

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        InputClass {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k * c))
                .collect(),
        }
    }

    /// Maximum exponent of each variable over all terms.
    pub fn max_degrees(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.num_vars];
        for e in self.terms.keys() {
            for (v, &ev) in e.iter().enumerate() {
                out[v] = out[v].max(ev as i64);
            }
        }
        out
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degrees.all(|k| k == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    pub fn to_laurent(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            self.num_vars,
            self.terms.iter().map(|(e, c)| {
                (
                    e.iter().map(|&x| x as i64).collect(),
                    GradedPolynomial::from_int(c.clone()),
                )
            }),
        )
    }

    /// Canonical text form, parseable by the CLI expression grammar.
    ///
    /// Terms are ordered by total degree, then lexicographically, both
    /// descending. A leading negative term is written as `0 - ...` since the
    /// grammar has no unary minus.
    pub fn canonical_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (idx, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let neg = c.sign() == num_bigint::Sign::Minus;
            let abs = c.magnitude();
            if idx == 0 {
                if neg {
                    out.push_str("0 - ");
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.iter().all(|&x| x == 0) {
                factors.push(abs.to_string());
            }
            for (v, &ev) in e.iter().enumerate() {
                if ev == 1 {
                    factors.push(format!("t{}", v + 1));
                } else if ev > 1 {
                    factors.push(format!("t{}^{}", v + 1, ev));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for InputClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

/// Which evaluation route produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Closed,
    Tower,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Closed => "closed",
            Route::Tower => "tower",
        }
    }
}

/// A pushforward value together with the data that produced it.
///
/// `fiber_dim` is the dimension matching the grading of `value`
/// (`deg value = deg f - fiber_dim` for homogeneous nonzero output);
/// `flag_fiber_dim` is the combinatorial value `|mu| + |delta| - d^2`. The
/// two differ exactly in the even-orthogonal case, by one for each part of
/// `mu` exceeding `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GysinResult {
    pub value: GradedPolynomial,
    pub shape: AmbientShape,
    pub mu: StrictPartition,
    pub lambda: Option<OrdinaryPartition>,
    pub fiber_dim: u32,
    pub flag_fiber_dim: u32,
    pub model: ChernModel,
    pub route: Route,
}

/// Index pairs `(i, j)` with `mu_i + mu_j > 2n + 1`, zero-based, grouped by
/// the first index. Symplectic shapes take `i < j`, even-orthogonal shapes
/// `i <= j`.
fn isotropy_pairs(shape: &AmbientShape, mu: &StrictPartition) -> Vec<(usize, usize)> {
    let t = shape.threshold();
    let parts = mu.parts();
    let with_diagonal = shape.form_type() == FormType::EvenOrthogonal;
    let mut out = Vec::new();
    for i in 0..parts.len() {
        for j in i..parts.len() {
            if i == j && !with_diagonal {
                continue;
            }
            if parts[i] + parts[j] > t {
                out.push((i, j));
            }
        }
    }
    out
}

fn pair_factor(
    num_vars: usize,
    l_value: &GradedPolynomial,
    i: usize,
    j: usize,
) -> LaurentPolynomial {
    let mut terms: Vec<(Vec<i64>, GradedPolynomial)> =
        vec![(vec![0; num_vars], l_value.clone())];
    if i == j {
        let mut e = vec![0i64; num_vars];
        e[i] = 1;
        terms.push((e, GradedPolynomial::from_int(2)));
    } else {
        for v in [i, j] {
            let mut e = vec![0i64; num_vars];
            e[v] = 1;
            terms.push((e, GradedPolynomial::one()));
        }
    }
    LaurentPolynomial::from_terms(num_vars, terms)
}

/// The top Chern class factors `l + t_i + t_j` (and `l + 2 t_j` on the
/// diagonal in the even-orthogonal case) over all pairs with
/// `mu_i + mu_j > 2n + 1`, with `l` kept as a free generator.
pub fn top_chern_factors(
    shape: &AmbientShape,
    mu: &StrictPartition,
) -> Result<Vec<LaurentPolynomial>> {
    partitions::validate_flag_index(mu, shape)?;
    let d = shape.d() as usize;
    let l = GradedPolynomial::generator(crate::graded_ring::Generator::ChernL);
    Ok(isotropy_pairs(shape, mu)
        .into_iter()
        .map(|(i, j)| pair_factor(d, &l, i, j))
        .collect())
}

/// Pushforward along a projective bundle of lines:
/// `pi_* f(xi) = [t^{r-1}] (f(t) * s_{1/t}(F))` for a rank-`r` bundle `F`.
pub fn projective_pushforward(
    f: &LaurentPolynomial,
    segre: &LaurentPolynomial,
    r: u32,
) -> Result<GradedPolynomial> {
    assert!(r >= 1, "projective bundle of a rank-0 bundle");
    assert_eq!(f.num_vars(), 1);
    assert_eq!(segre.num_vars(), 1);
    f.mul(segre).coefficient_of(&[r as i64 - 1])
}

fn vandermonde_factor(num_vars: usize, i: usize, j: usize) -> LaurentPolynomial {
    let mut ei = vec![0i64; num_vars];
    ei[i] = 1;
    let mut ej = vec![0i64; num_vars];
    ej[j] = 1;
    LaurentPolynomial::from_terms(
        num_vars,
        vec![
            (ei, GradedPolynomial::one()),
            (ej, GradedPolynomial::from_int(-1)),
        ],
    )
}

/// `1 - t_j / t_i`: the relative correction of the tower route.
fn relative_factor(num_vars: usize, i: usize, j: usize) -> LaurentPolynomial {
    let mut e = vec![0i64; num_vars];
    e[i] = -1;
    e[j] = 1;
    LaurentPolynomial::from_terms(
        num_vars,
        vec![
            (vec![0; num_vars], GradedPolynomial::one()),
            (e, GradedPolynomial::from_int(-1)),
        ],
    )
}

struct Validated {
    d: usize,
    flag_fiber_dim: u32,
    fiber_dim: u32,
}

fn validate(model: &ChernModel, mu: &StrictPartition, f: &InputClass) -> Result<Validated> {
    let shape = model.shape();
    partitions::validate_flag_index(mu, &shape)?;
    let d = shape.d() as usize;
    if f.num_vars() != d {
        return Err(Error::WrongVariableCount {
            expected: d,
            got: f.num_vars(),
        });
    }
    let flag_fiber_dim = partitions::profile(mu, &shape)?.fiber_dim;
    let fiber_dim = match shape.form_type() {
        FormType::Symplectic => flag_fiber_dim,
        FormType::EvenOrthogonal => {
            // each diagonal factor raises the output degree by one, so the
            // grading-true fiber dimension drops accordingly
            let diagonal = mu
                .parts()
                .iter()
                .filter(|&&p| 2 * p > shape.threshold())
                .count() as u32;
            flag_fiber_dim
                .checked_sub(diagonal)
                .expect("orthogonal fiber dimension below zero")
        }
    };
    Ok(Validated {
        d,
        flag_fiber_dim,
        fiber_dim,
    })
}

fn assemble(
    model: &ChernModel,
    mu: &StrictPartition,
    v: Validated,
    value: GradedPolynomial,
    route: Route,
) -> GysinResult {
    GysinResult {
        value,
        shape: model.shape(),
        mu: mu.clone(),
        lambda: None,
        fiber_dim: v.fiber_dim,
        flag_fiber_dim: v.flag_fiber_dim,
        model: *model,
        route,
    }
}

/// Evaluate the closed pushforward formula.
pub fn gysin_closed(
    model: &ChernModel,
    mu: &StrictPartition,
    f: &InputClass,
) -> Result<GysinResult> {
    let v = validate(model, mu, f)?;
    let d = v.d;
    if f.is_zero() {
        return Ok(assemble(model, mu, v, GradedPolynomial::zero(), Route::Closed));
    }
    let parts = mu.parts();
    let l_value = model.chern_l();
    let pairs = isotropy_pairs(&model.shape(), mu);

    // truncation plan: combined positive degrees of the polynomial factors
    let mut factor_degrees: Vec<Vec<i64>> = vec![f.max_degrees()];
    for i in 0..d {
        for j in i + 1..d {
            let mut deg = vec![0i64; d];
            deg[i] = 1;
            deg[j] = 1;
            factor_degrees.push(deg);
        }
    }
    for &(i, j) in &pairs {
        let mut deg = vec![0i64; d];
        deg[i] = 1;
        deg[j] = 1;
        factor_degrees.push(deg);
    }
    let target: Vec<i64> = parts.iter().map(|&p| p as i64 - 1).collect();
    let floors = required_truncation(&factor_degrees, &target);

    let mut acc = f.to_laurent();
    for step in 0..d {
        for j in step + 1..d {
            acc = acc.mul(&vandermonde_factor(d, step, j));
        }
        for &(i, j) in pairs.iter().filter(|&&(i, _)| i == step) {
            acc = acc.mul(&pair_factor(d, &l_value, i, j));
        }
        let segre = model
            .segre_series(parts[step], floors[step])?
            .promote(d, step);
        acc = acc.mul(&segre);
        acc = acc.coefficient_in_var(step, target[step])?;
    }
    let value = acc.constant_term()?;
    Ok(assemble(model, mu, v, value, Route::Closed))
}

/// Evaluate by the tower recursion, one projective-bundle step at a time.
///
/// Step `j` multiplies in its top Chern factors, the relative Segre series
/// `s_{1/t_j}(E_{mu_j}) * prod_{j' > j} (1 - t_{j'} / t_j)`, and extracts the
/// coefficient of `t_j^{mu_j - d + j - 1}`. Must agree with [`gysin_closed`]
/// exactly.
pub fn gysin_tower(
    model: &ChernModel,
    mu: &StrictPartition,
    f: &InputClass,
) -> Result<GysinResult> {
    let v = validate(model, mu, f)?;
    let d = v.d;
    if f.is_zero() {
        return Ok(assemble(model, mu, v, GradedPolynomial::zero(), Route::Tower));
    }
    let parts = mu.parts();
    let l_value = model.chern_l();
    let pairs = isotropy_pairs(&model.shape(), mu);

    let mut acc = f.to_laurent();
    for (step, &part) in parts.iter().enumerate() {
        for &(i, j) in pairs.iter().filter(|&&(i, _)| i == step) {
            acc = acc.mul(&pair_factor(d, &l_value, i, j));
        }
        // exponent mu_j - d + j - 1 in one-based terms
        let exp = part as i64 - (d as i64 - step as i64);
        let floor = exp - acc.bound(step);
        let segre = model.segre_series(part, floor)?.promote(d, step);
        acc = acc.mul(&segre);
        for j in step + 1..d {
            acc = acc.mul(&relative_factor(d, step, j));
        }
        acc = acc.coefficient_in_var(step, exp)?;
    }
    let value = acc.constant_term()?;
    Ok(assemble(model, mu, v, value, Route::Tower))
}

/// Pushforward along a Schubert bundle: route through the complement of the
/// Schubert index and record both indices.
pub fn gysin_schubert(
    model: &ChernModel,
    lambda: &OrdinaryPartition,
    f: &InputClass,
    route: Route,
) -> Result<GysinResult> {
    let shape = model.shape();
    let mu = partitions::complement(lambda, &shape)?;
    let mut result = match route {
        Route::Closed => gysin_closed(model, &mu, f)?,
        Route::Tower => gysin_tower(model, &mu, f)?,
    };
    result.lambda = Some(lambda.clone());
    Ok(result)
}

/// Divide the class by two, exactly: the even-orthogonal evaluation with
/// `d = n` covers both connected components of the flag bundle.
pub fn halve_components(result: &GysinResult) -> Result<GysinResult> {
    let shape = result.shape;
    if shape.form_type() != FormType::EvenOrthogonal || shape.d() != shape.n() {
        return Err(Error::HalveShape);
    }
    let mut out = result.clone();
    out.value = result.value.half()?;
    Ok(out)
}
