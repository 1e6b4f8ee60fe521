//! Interpretations of the abstract classes `s_k(E_m)` and `l = c_1(L)`.
//!
//! Three models are provided:
//!
//! - `Trivial`: every positive Segre class and `l` vanish (point base);
//!   pushforwards become plain integers such as degrees.
//! - `FreeSegre`: the classes stay free generators, so a pushforward output
//!   is the universal formula itself.
//! - `RootedFlag`: the full reference flag with Chern roots. The isotropic
//!   steps `E_m`, `m <= n`, have roots `y_1, ..., y_m`; the co-isotropic
//!   steps `E_{2n-i}` add the paired roots `l - y_j`. Segre classes follow
//!   the convention `s(E) = c(E)^{-1}`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graded_ring::{GradedPolynomial, Generator};
use crate::laurent::LaurentPolynomial;
use crate::partitions::AmbientShape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelVariant {
    Trivial,
    FreeSegre,
    RootedFlag,
}

impl ModelVariant {
    /// CLI spelling: `trivial`, `free` or `rooted`.
    pub fn name(self) -> &'static str {
        match self {
            ModelVariant::Trivial => "trivial",
            ModelVariant::FreeSegre => "free",
            ModelVariant::RootedFlag => "rooted",
        }
    }
}

/// A model variant bound to an ambient shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChernModel {
    variant: ModelVariant,
    shape: AmbientShape,
}

impl ChernModel {
    pub fn new(variant: ModelVariant, shape: AmbientShape) -> Self {
        ChernModel { variant, shape }
    }

    pub fn trivial(shape: AmbientShape) -> Self {
        Self::new(ModelVariant::Trivial, shape)
    }

    pub fn free(shape: AmbientShape) -> Self {
        Self::new(ModelVariant::FreeSegre, shape)
    }

    pub fn rooted(shape: AmbientShape) -> Self {
        Self::new(ModelVariant::RootedFlag, shape)
    }

    pub fn variant(&self) -> ModelVariant {
        self.variant
    }

    pub fn shape(&self) -> AmbientShape {
        self.shape
    }

    /// The value of `l = c_1(L)` in this model.
    pub fn chern_l(&self) -> GradedPolynomial {
        match self.variant {
            ModelVariant::Trivial => GradedPolynomial::zero(),
            _ => GradedPolynomial::generator(Generator::ChernL),
        }
    }

    /// Chern roots of the flag step `E_m` in the rooted model.
    ///
    /// For `m <= n` these are `y_1, ..., y_m`; for `m = 2n - i` with
    /// `0 <= i < n` the co-isotropic step adds `l - y_n, ..., l - y_{i+1}`.
    pub fn chern_roots_of(&self, m: u32) -> Result<Vec<GradedPolynomial>> {
        if self.variant != ModelVariant::RootedFlag {
            return Err(Error::NotRootedModel);
        }
        let n = self.shape.n();
        let two_n = self.shape.ambient_rank();
        if m > two_n {
            return Err(Error::FlagIndexOutOfRange { m, max: two_n });
        }
        let l = GradedPolynomial::generator(Generator::ChernL);
        let mut roots: Vec<GradedPolynomial> = Vec::with_capacity(m as usize);
        for i in 1..=m.min(n) {
            roots.push(GradedPolynomial::generator(Generator::root(i)));
        }
        if m > n {
            let i = two_n - m;
            for j in ((i + 1)..=n).rev() {
                roots.push(l.sub(&GradedPolynomial::generator(Generator::root(j))));
            }
        }
        Ok(roots)
    }

    /// The class `s_k(E_m)` in this model; `s_0 = 1` always.
    pub fn segre_class(&self, m: u32, k: u32) -> Result<GradedPolynomial> {
        let two_n = self.shape.ambient_rank();
        if m > two_n {
            return Err(Error::FlagIndexOutOfRange { m, max: two_n });
        }
        if k == 0 {
            return Ok(GradedPolynomial::one());
        }
        match self.variant {
            ModelVariant::Trivial => Ok(GradedPolynomial::zero()),
            ModelVariant::FreeSegre => Ok(GradedPolynomial::generator(Generator::segre(k, m))),
            ModelVariant::RootedFlag => {
                // s(E) = c(E)^{-1}: s_k is the complete homogeneous function
                // of the negated roots
                let roots = self.chern_roots_of(m)?;
                let kk = k as usize;
                let mut h = vec![GradedPolynomial::zero(); kk + 1];
                h[0] = GradedPolynomial::one();
                for r in &roots {
                    let neg = r.neg();
                    for j in 1..=kk {
                        let bump = neg.mul(&h[j - 1]);
                        h[j] = h[j].add(&bump);
                    }
                }
                Ok(h.pop().unwrap())
            }
        }
    }

    /// The Segre series `s_{1/t}(E_m) = sum_k s_k(E_m) t^{-k}` expanded down
    /// to the requested floor, as a one-variable Laurent polynomial.
    ///
    /// In the trivial model the series is exactly `1`. A positive floor
    /// yields just the constant term.
    pub fn segre_series(&self, m: u32, floor: i64) -> Result<LaurentPolynomial> {
        let two_n = self.shape.ambient_rank();
        if m > two_n {
            return Err(Error::FlagIndexOutOfRange { m, max: two_n });
        }
        if self.variant == ModelVariant::Trivial {
            return Ok(LaurentPolynomial::one(1));
        }
        let depth = (-floor).max(0) as u32;
        let mut terms = Vec::with_capacity(depth as usize + 1);
        for k in 0..=depth {
            let c = self.segre_class(m, k)?;
            if !c.is_zero() {
                terms.push((vec![-(k as i64)], c));
            }
        }
        Ok(LaurentPolynomial::truncated(
            1,
            terms,
            vec![Some(-(depth as i64))],
        ))
    }

    /// The finite Chern polynomial `c_{1/t}(E_m) = prod (1 + r_i t^{-1})` of
    /// the rooted model. Exact, no truncation.
    pub fn chern_series(&self, m: u32) -> Result<LaurentPolynomial> {
        let roots = self.chern_roots_of(m)?;
        let mut p = LaurentPolynomial::one(1);
        for r in roots {
            let factor = LaurentPolynomial::from_terms(
                1,
                vec![
                    (vec![0], GradedPolynomial::one()),
                    (vec![-1], r),
                ],
            );
            p = p.mul(&factor);
        }
        Ok(p)
    }

    /// Interpret the free generators of `p` in this model: `s_k(E_m)` and
    /// `l` are replaced by their model values, roots pass through.
    pub fn substitute_classes(&self, p: &GradedPolynomial) -> Result<GradedPolynomial> {
        p.substitute(|g| match g {
            Generator::Segre { k, m } => self.segre_class(*m, *k),
            Generator::ChernL => Ok(self.chern_l()),
            Generator::Root { .. } => Ok(GradedPolynomial::generator(*g)),
        })
    }
}

/// Specialize a rooted-model class at `y_i = 0`, `l = 0`.
pub fn specialize_to_point(p: &GradedPolynomial) -> GradedPolynomial {
    p.substitute(|g| match g {
        Generator::Root { .. } | Generator::ChernL => Ok(GradedPolynomial::zero()),
        Generator::Segre { .. } => Ok(GradedPolynomial::generator(*g)),
    })
    .expect("substitution by constants cannot fail")
}

/// Integer content of a degree-zero class; `None` when generators remain.
pub fn as_integer(p: &GradedPolynomial) -> Option<BigInt> {
    if p.is_zero() {
        return Some(BigInt::from(0));
    }
    if p.num_terms() == 1 {
        let (m, c) = p.terms().next().unwrap();
        if m.is_one() {
            return Some(c.clone());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_ring::Homogeneity;

    fn shape(n: u32, d: u32) -> AmbientShape {
        AmbientShape::symplectic(n, d).unwrap()
    }

    fn y(i: u32) -> GradedPolynomial {
        GradedPolynomial::generator(Generator::root(i))
    }

    fn l() -> GradedPolynomial {
        GradedPolynomial::generator(Generator::ChernL)
    }

    #[test]
    fn roots_of_isotropic_steps() {
        let m = ChernModel::rooted(shape(3, 2));
        assert_eq!(m.chern_roots_of(3).unwrap(), vec![y(1), y(2), y(3)]);
        assert_eq!(m.chern_roots_of(0).unwrap(), vec![]);
    }

    #[test]
    fn roots_of_coisotropic_steps() {
        let m = ChernModel::rooted(shape(3, 2));
        // m = 4 is 2n - i with i = 2
        assert_eq!(
            m.chern_roots_of(4).unwrap(),
            vec![y(1), y(2), y(3), l().sub(&y(3))]
        );
        // the full bundle pairs every root
        assert_eq!(
            m.chern_roots_of(6).unwrap(),
            vec![
                y(1),
                y(2),
                y(3),
                l().sub(&y(3)),
                l().sub(&y(2)),
                l().sub(&y(1))
            ]
        );
        assert_eq!(
            m.chern_roots_of(7),
            Err(Error::FlagIndexOutOfRange { m: 7, max: 6 })
        );
        assert_eq!(
            ChernModel::free(shape(3, 2)).chern_roots_of(3),
            Err(Error::NotRootedModel)
        );
    }

    #[test]
    fn trivial_series_is_exactly_one() {
        let m = ChernModel::trivial(shape(2, 1));
        let s = m.segre_series(4, -5).unwrap();
        assert_eq!(s, LaurentPolynomial::one(1));
        assert_eq!(s.coefficient_of(&[-17]).unwrap(), GradedPolynomial::zero());
    }

    #[test]
    fn free_series_lists_generators() {
        let m = ChernModel::free(shape(3, 2));
        let s = m.segre_series(4, -2).unwrap();
        assert_eq!(s.coefficient_of(&[0]).unwrap(), GradedPolynomial::one());
        assert_eq!(
            s.coefficient_of(&[-1]).unwrap(),
            GradedPolynomial::generator(Generator::segre(1, 4))
        );
        assert_eq!(
            s.coefficient_of(&[-2]).unwrap(),
            GradedPolynomial::generator(Generator::segre(2, 4))
        );
        assert!(s.coefficient_of(&[-3]).is_err());
    }

    #[test]
    fn rooted_line_series_is_geometric() {
        // E_1 has the single root y_1, so s_{1/t} = sum (-y_1)^j t^{-j}
        let m = ChernModel::rooted(shape(2, 1));
        let s = m.segre_series(1, -3).unwrap();
        for j in 0..=3u32 {
            let expect = y(1).neg().pow(j);
            assert_eq!(s.coefficient_of(&[-(j as i64)]).unwrap(), expect);
        }
    }

    #[test]
    fn positive_floor_keeps_only_the_constant_term() {
        let m = ChernModel::free(shape(2, 1));
        let s = m.segre_series(3, 2).unwrap();
        assert_eq!(s.coefficient_of(&[0]).unwrap(), GradedPolynomial::one());
        assert!(s.coefficient_of(&[-1]).is_err());
    }

    #[test]
    fn segre_times_chern_is_one() {
        for n in 1..=4u32 {
            let sh = shape(n, 1);
            let model = ChernModel::rooted(sh);
            let depth = 2 * n as i64 + 2;
            for m in 0..=sh.ambient_rank() {
                let s = model.segre_series(m, -depth).unwrap();
                let c = model.chern_series(m).unwrap();
                let prod = s.mul(&c);
                assert_eq!(prod.coefficient_of(&[0]).unwrap(), GradedPolynomial::one());
                for e in 1..=depth {
                    assert_eq!(
                        prod.coefficient_of(&[-e]).unwrap(),
                        GradedPolynomial::zero(),
                        "n={n}, m={m}, exponent {}",
                        -e
                    );
                }
            }
        }
    }

    #[test]
    fn rooted_specializes_to_trivial() {
        for n in 1..=3u32 {
            let sh = shape(n, 1);
            let rooted = ChernModel::rooted(sh);
            for m in 0..=sh.ambient_rank() {
                let s = rooted.segre_series(m, -4).unwrap();
                for e in 0..=4i64 {
                    let specialized = specialize_to_point(&s.coefficient_of(&[-e]).unwrap());
                    let expect = if e == 0 {
                        GradedPolynomial::one()
                    } else {
                        GradedPolynomial::zero()
                    };
                    assert_eq!(specialized, expect, "n={n}, m={m}, k={e}");
                }
            }
        }
    }

    #[test]
    fn series_coefficients_are_homogeneous() {
        let model = ChernModel::rooted(shape(3, 1));
        for m in 0..=6u32 {
            for k in 0..=5u32 {
                let c = model.segre_class(m, k).unwrap();
                match c.homogeneity() {
                    Homogeneity::Zero => {}
                    Homogeneity::Homogeneous(deg) => assert_eq!(deg, k),
                    Homogeneity::Inhomogeneous => panic!("s_{k}(E_{m}) inhomogeneous"),
                }
            }
        }
    }

    #[test]
    fn substitute_classes_matches_direct_values() {
        let sh = shape(2, 1);
        let free = ChernModel::free(sh);
        let rooted = ChernModel::rooted(sh);
        let formula = free
            .segre_class(3, 2)
            .unwrap()
            .mul(&free.chern_l())
            .add(&free.segre_class(4, 1).unwrap());
        let direct = rooted
            .segre_class(3, 2)
            .unwrap()
            .mul(&rooted.chern_l())
            .add(&rooted.segre_class(4, 1).unwrap());
        assert_eq!(rooted.substitute_classes(&formula).unwrap(), direct);
    }
}
