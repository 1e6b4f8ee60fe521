//! Strict-partition combinatorics for isotropic Grassmann bundles.
//!
//! Everything here is pure integer combinatorics: the maximal strict
//! partition `rho`, complements between Schubert indices and flag indices,
//! the admissibility condition (no two parts sum to `2n+1`), delta vectors,
//! fiber dimensions, cover relations in the admissible subposet, and the
//! profile of the fibration between two nested admissible partitions.

use std::fmt;

use crate::error::{Error, Result};

/// Type of the bilinear form carried by the ambient rank-`2n` bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormType {
    Symplectic,
    EvenOrthogonal,
}

impl FormType {
    /// Lie-type letter used by the CLI: `C` for symplectic, `D` for even orthogonal.
    pub fn letter(self) -> char {
        match self {
            FormType::Symplectic => 'C',
            FormType::EvenOrthogonal => 'D',
        }
    }
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// The ambient data `(n, d)` together with the form type.
///
/// `n` is the half-rank of the ambient bundle, `d` the number of isotropic
/// steps. The admissibility threshold is `2n + 1` for both form types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AmbientShape {
    n: u32,
    d: u32,
    form_type: FormType,
}

impl AmbientShape {
    pub fn new(form_type: FormType, n: u32, d: u32) -> Result<Self> {
        if n == 0 || d == 0 || d > n {
            return Err(Error::InvalidShape { n, d });
        }
        Ok(AmbientShape { n, d, form_type })
    }

    pub fn symplectic(n: u32, d: u32) -> Result<Self> {
        Self::new(FormType::Symplectic, n, d)
    }

    pub fn even_orthogonal(n: u32, d: u32) -> Result<Self> {
        Self::new(FormType::EvenOrthogonal, n, d)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn form_type(&self) -> FormType {
        self.form_type
    }

    /// Rank `2n` of the ambient bundle.
    pub fn ambient_rank(&self) -> u32 {
        2 * self.n
    }

    /// Two parts may never sum to this value: `2n + 1`.
    pub fn threshold(&self) -> u32 {
        2 * self.n + 1
    }
}

/// A strictly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrict);
        }
        Ok(StrictPartition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Product order: does `other` fit under `self` part by part?
    ///
    /// Only defined for equal lengths; differing lengths compare as false.
    pub fn contains(&self, other: &StrictPartition) -> bool {
        self.len() == other.len()
            && self
                .parts
                .iter()
                .zip(other.parts.iter())
                .all(|(a, b)| a >= b)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are trimmed, so `(1,0,0)` and `(1)` are the same partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrdinaryPartition {
    parts: Vec<u32>,
}

impl OrdinaryPartition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(OrdinaryPartition { parts })
    }

    /// The empty partition, written `0`.
    pub fn zero() -> Self {
        OrdinaryPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for OrdinaryPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Delta vector and fiber dimension attached to an admissible flag index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionProfile {
    pub mu: StrictPartition,
    pub delta: Vec<u32>,
    pub fiber_dim: u32,
}

/// Tower shape of the fibration between nested admissible partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationProfile {
    pub k: Vec<u32>,
    pub rel_dim: u32,
}

/// The maximal strict partition `(2n, 2n-1, ..., 2n-d+1)`.
pub fn rho(shape: &AmbientShape) -> StrictPartition {
    let parts = (0..shape.d()).map(|i| shape.ambient_rank() - i).collect();
    StrictPartition { parts }
}

/// Complement of a Schubert index inside `rho`: `mu_i = rho_i - lambda_{d+1-i}`.
///
/// `lambda` must fit in the `d x (2n-d)` box; it is padded with zeros to
/// exactly `d` parts.
pub fn complement(lambda: &OrdinaryPartition, shape: &AmbientShape) -> Result<StrictPartition> {
    let d = shape.d() as usize;
    if lambda.len() > d {
        return Err(Error::LambdaTooLong {
            max: shape.d(),
            got: lambda.len() as u32,
        });
    }
    let width = shape.ambient_rank() - shape.d();
    if let Some(&first) = lambda.parts().first() {
        if first > width {
            return Err(Error::LambdaPartTooBig {
                part: first,
                max: width,
            });
        }
    }
    let r = rho(shape);
    let padded = |j: usize| -> u32 { lambda.parts().get(j).copied().unwrap_or(0) };
    let parts = (0..d).map(|i| r.parts()[i] - padded(d - 1 - i)).collect();
    // weakly decreasing lambda forces strictness, positivity comes from the box
    Ok(StrictPartition { parts })
}

/// Inverse of [`complement`]: the Schubert index of an admissible flag index.
pub fn schubert_index(mu: &StrictPartition, shape: &AmbientShape) -> Result<OrdinaryPartition> {
    validate_in_rho(mu, shape)?;
    let d = shape.d() as usize;
    let r = rho(shape);
    let parts = (0..d)
        .map(|j| r.parts()[d - 1 - j] - mu.parts()[d - 1 - j])
        .collect();
    OrdinaryPartition::new(parts)
}

/// No two distinct parts may sum to the threshold `2n + 1`.
pub fn is_admissible(mu: &StrictPartition, shape: &AmbientShape) -> bool {
    find_inadmissible_pair(mu, shape).is_none()
}

fn find_inadmissible_pair(mu: &StrictPartition, shape: &AmbientShape) -> Option<(u32, u32)> {
    let t = shape.threshold();
    let parts = mu.parts();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if parts[i] + parts[j] == t {
                return Some((parts[i], parts[j]));
            }
        }
    }
    None
}

fn validate_in_rho(mu: &StrictPartition, shape: &AmbientShape) -> Result<()> {
    if mu.len() != shape.d() as usize {
        return Err(Error::WrongPartCount {
            expected: shape.d(),
            got: mu.len() as u32,
        });
    }
    let r = rho(shape);
    for (i, (&p, &bound)) in mu.parts().iter().zip(r.parts()).enumerate() {
        if p > bound {
            return Err(Error::PartOutOfRange {
                part: p,
                max: bound,
                position: i + 1,
            });
        }
    }
    Ok(())
}

/// Check that `mu` is a valid flag index: `d` parts, contained in `rho`,
/// admissible.
pub(crate) fn validate_flag_index(mu: &StrictPartition, shape: &AmbientShape) -> Result<()> {
    validate_in_rho(mu, shape)?;
    if let Some((a, b)) = find_inadmissible_pair(mu, shape) {
        return Err(Error::Inadmissible { a, b });
    }
    Ok(())
}

fn delta_unchecked(parts: &[u32], threshold: u32) -> Vec<u32> {
    (0..parts.len())
        .map(|i| {
            (i + 1..parts.len())
                .filter(|&j| parts[i] + parts[j] < threshold)
                .count() as u32
        })
        .collect()
}

/// `delta_i = #{ j > i : mu_i + mu_j < 2n+1 }`.
pub fn delta(mu: &StrictPartition, shape: &AmbientShape) -> Result<Vec<u32>> {
    validate_flag_index(mu, shape)?;
    Ok(delta_unchecked(mu.parts(), shape.threshold()))
}

/// Rank function `|mu| + |delta(mu)|` on the admissible subposet.
///
/// Every cover relation decreases it by exactly one.
pub fn rank(mu: &StrictPartition, shape: &AmbientShape) -> Result<u32> {
    let d = delta(mu, shape)?;
    Ok(mu.weight() + d.iter().sum::<u32>())
}

/// Delta vector together with the fiber dimension `|mu| + |delta| - d^2`.
pub fn profile(mu: &StrictPartition, shape: &AmbientShape) -> Result<PartitionProfile> {
    let delta = delta(mu, shape)?;
    let rank = mu.weight() + delta.iter().sum::<u32>();
    let dd = shape.d() * shape.d();
    assert!(
        rank >= dd,
        "rank {rank} below d^2 = {dd} for admissible {mu}"
    );
    Ok(PartitionProfile {
        mu: mu.clone(),
        delta,
        fiber_dim: rank - dd,
    })
}

/// All admissible strict partitions contained in `rho` with exactly `d`
/// positive parts, in lexicographic descending order.
pub fn enumerate_admissible(shape: &AmbientShape) -> Vec<StrictPartition> {
    let d = shape.d() as usize;
    let threshold = shape.threshold();
    let top = shape.ambient_rank();
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::with_capacity(d);

    fn rec(cur: &mut Vec<u32>, d: usize, top: u32, threshold: u32, out: &mut Vec<StrictPartition>) {
        let i = cur.len();
        if i == d {
            out.push(StrictPartition { parts: cur.clone() });
            return;
        }
        // rho bound in row i, strictness, and room for the remaining parts
        let hi = (top - i as u32).min(cur.last().map_or(u32::MAX, |&p| p - 1));
        let lo = (d - i) as u32;
        for p in (lo..=hi).rev() {
            if cur.iter().all(|&q| q + p != threshold) {
                cur.push(p);
                rec(cur, d, top, threshold, out);
                cur.pop();
            }
        }
    }

    rec(&mut cur, d, top, threshold, &mut out);
    out
}

/// Covers of `mu` from below in the admissible subposet, generated by the
/// ball moves.
///
/// In the ball picture (ball `i` black when `i` is a part, gray when
/// `2n+1-i` is a part, white otherwise) the covers are:
///
/// - a black ball slides left across a run of gray balls and lands on the
///   first white ball; the skipped positions are exactly the inadmissible
///   intermediates. A black ball never crosses its own mirror: the only
///   reachable self-mirror is `n+1 -> n`, which is the landing of the
///   middle swap below.
/// - the middle swap `n+1 -> n`;
/// - the symmetric double step: parts `n+1+i` and `n+1-i` both decrease by
///   one together (moving either alone would create a pair summing to
///   `2n+1`).
pub fn direct_predecessors(
    mu: &StrictPartition,
    shape: &AmbientShape,
) -> Result<Vec<StrictPartition>> {
    validate_flag_index(mu, shape)?;
    let n = shape.n();
    let threshold = shape.threshold();
    let parts = mu.parts();
    let has = |p: u32| parts.contains(&p);
    let mut out: Vec<StrictPartition> = Vec::new();

    let replace = |from: u32, to: u32| -> StrictPartition {
        let mut q: Vec<u32> = parts.iter().map(|&p| if p == from { to } else { p }).collect();
        q.sort_unstable_by(|a, b| b.cmp(a));
        StrictPartition { parts: q }
    };

    for &p in parts {
        let mut x = p;
        while x > 1 {
            x -= 1;
            if has(x) {
                // another part blocks the slide
                break;
            }
            let gray = has(threshold - x);
            if !gray {
                // white: land here
                out.push(replace(p, x));
                break;
            }
            if threshold - x == p {
                // own mirror, reachable only as n+1 -> n: land on it
                out.push(replace(p, x));
                break;
            }
            // gray from another part: the intermediate is inadmissible, keep sliding
        }
    }

    // double step toward the middle
    for i in 1..n {
        let hi = n + 1 + i;
        let lo = n + 1 - i;
        if has(hi) && has(lo) {
            let q: Vec<u32> = parts
                .iter()
                .map(|&p| if p == hi || p == lo { p - 1 } else { p })
                .collect();
            out.push(StrictPartition { parts: q });
        }
    }

    debug_assert!(out.iter().all(|nu| is_admissible(nu, shape)));
    out.sort_unstable_by(|a, b| b.parts.cmp(&a.parts));
    Ok(out)
}

/// Covers of `mu` from below computed by brute force: the maximal admissible
/// partitions strictly below `mu` in the product order.
///
/// Slow reference route; must agree with [`direct_predecessors`].
pub fn direct_predecessors_brute(
    mu: &StrictPartition,
    shape: &AmbientShape,
) -> Result<Vec<StrictPartition>> {
    validate_flag_index(mu, shape)?;
    let below: Vec<StrictPartition> = enumerate_admissible(shape)
        .into_iter()
        .filter(|nu| nu != mu && mu.contains(nu))
        .collect();
    let mut out: Vec<StrictPartition> = below
        .iter()
        .filter(|nu| !below.iter().any(|tau| tau != *nu && tau.contains(nu)))
        .cloned()
        .collect();
    out.sort_unstable_by(|a, b| b.parts.cmp(&a.parts));
    Ok(out)
}

/// The integers `k_j` and the relative dimension of the fibration attached to
/// admissible `nu` contained in `mu`.
///
/// `k_j` is the largest `i` with `nu_{d+1-i} <= mu_{d+1-j}`; the relative
/// dimension is `(k_1 - 1) + ... + (k_d - d)`.
pub fn fibration_profile(
    nu: &StrictPartition,
    mu: &StrictPartition,
    shape: &AmbientShape,
) -> Result<FibrationProfile> {
    validate_flag_index(nu, shape)?;
    validate_flag_index(mu, shape)?;
    if !mu.contains(nu) {
        return Err(Error::NotContained);
    }
    let d = shape.d() as usize;
    let mut k = Vec::with_capacity(d);
    for j in 1..=d {
        let target = mu.parts()[d - j];
        let kj = (1..=d)
            .rev()
            .find(|&i| nu.parts()[d - i] <= target)
            .expect("k_j >= j always exists for nested partitions");
        k.push(kj as u32);
    }
    let rel_dim = k
        .iter()
        .enumerate()
        .map(|(idx, &kj)| kj - (idx as u32 + 1))
        .sum();
    Ok(FibrationProfile { k, rel_dim })
}
