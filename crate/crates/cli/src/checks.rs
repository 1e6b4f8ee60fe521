//! Built-in verification suites for the `check` command: fast, deterministic
//! reruns of the library invariants at desk scale.

use num_bigint::BigInt;

use gysin_core::chern_models::{as_integer, specialize_to_point, ChernModel, ModelVariant};
use gysin_core::graded_ring::{GradedPolynomial, Generator};
use gysin_core::gysin::{gysin_closed, gysin_tower, halve_components, InputClass};
use gysin_core::laurent::LaurentPolynomial;
use gysin_core::partitions::{
    self, enumerate_admissible, AmbientShape, FormType, OrdinaryPartition, StrictPartition,
};

pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub error: Option<String>,
}

impl SuiteOutcome {
    pub fn ok(&self) -> bool {
        self.error.is_none()
    }
}

pub fn run_all() -> Vec<SuiteOutcome> {
    vec![
        complement_involution(),
        enumeration_count(),
        cover_rank_law(),
        fibration_bound(),
        ring_axioms(),
        shift_identity(),
        segre_inverts_chern(),
        rooted_specializes_to_trivial(),
        degree_table(),
        route_equivalence(),
    ]
}

fn suite(name: &'static str, body: impl FnOnce() -> Result<usize, String>) -> SuiteOutcome {
    match body() {
        Ok(cases) => SuiteOutcome {
            name,
            cases,
            error: None,
        },
        Err(error) => SuiteOutcome {
            name,
            cases: 0,
            error: Some(error),
        },
    }
}

fn shapes(max_n: u32) -> Vec<AmbientShape> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for d in 1..=n {
            out.push(AmbientShape::symplectic(n, d).unwrap());
        }
    }
    out
}

fn all_lambdas(shape: &AmbientShape) -> Vec<OrdinaryPartition> {
    let d = shape.d() as usize;
    let width = shape.ambient_rank() - shape.d();
    let mut out = Vec::new();
    let mut stack = vec![Vec::<u32>::new()];
    while let Some(cur) = stack.pop() {
        if cur.len() == d {
            out.push(OrdinaryPartition::new(cur).unwrap());
            continue;
        }
        let hi = cur.last().copied().unwrap_or(width);
        for p in 0..=hi {
            let mut next = cur.clone();
            next.push(p);
            stack.push(next);
        }
    }
    out
}

fn complement_involution() -> SuiteOutcome {
    suite("partitions::complement_involution", || {
        let mut cases = 0;
        for shape in shapes(4) {
            for lambda in all_lambdas(&shape) {
                let mu = partitions::complement(&lambda, &shape)
                    .map_err(|e| format!("complement failed for {lambda}: {e}"))?;
                let back = partitions::schubert_index(&mu, &shape)
                    .map_err(|e| format!("inverse failed for {mu}: {e}"))?;
                if back != lambda {
                    return Err(format!("involution broken at lambda={lambda}"));
                }
                cases += 1;
            }
        }
        Ok(cases)
    })
}

fn enumeration_count() -> SuiteOutcome {
    suite("partitions::enumeration_count", || {
        fn binomial(n: u32, k: u32) -> u64 {
            let mut r = 1u64;
            for i in 0..k as u64 {
                r = r * (n as u64 - i) / (i + 1);
            }
            r
        }
        let mut cases = 0;
        for shape in shapes(5) {
            let got = enumerate_admissible(&shape).len() as u64;
            let want = (1u64 << shape.d()) * binomial(shape.n(), shape.d());
            if got != want {
                return Err(format!(
                    "count {got} != {want} at n={}, d={}",
                    shape.n(),
                    shape.d()
                ));
            }
            cases += 1;
        }
        Ok(cases)
    })
}

fn cover_rank_law() -> SuiteOutcome {
    suite("partitions::cover_rank_law", || {
        let mut cases = 0;
        for shape in shapes(4) {
            for mu in enumerate_admissible(&shape) {
                let moves = partitions::direct_predecessors(&mu, &shape).unwrap();
                let brute = partitions::direct_predecessors_brute(&mu, &shape).unwrap();
                if moves != brute {
                    return Err(format!("moves != brute force at mu={mu}"));
                }
                let r = partitions::rank(&mu, &shape).unwrap();
                for nu in &moves {
                    if partitions::rank(nu, &shape).unwrap() != r - 1 {
                        return Err(format!("rank law broken at mu={mu}, nu={nu}"));
                    }
                    cases += 1;
                }
                cases += 1;
            }
        }
        Ok(cases)
    })
}

fn fibration_bound() -> SuiteOutcome {
    suite("partitions::fibration_bound", || {
        let mut cases = 0;
        for shape in shapes(3) {
            let all = enumerate_admissible(&shape);
            for mu in &all {
                for nu in &all {
                    if nu == mu || !mu.contains(nu) {
                        continue;
                    }
                    let p = partitions::fibration_profile(nu, mu, &shape).unwrap();
                    let gap = partitions::rank(mu, &shape).unwrap()
                        - partitions::rank(nu, &shape).unwrap();
                    if p.rel_dim >= gap {
                        return Err(format!("bound broken at nu={nu}, mu={mu}"));
                    }
                    cases += 1;
                }
            }
        }
        Ok(cases)
    })
}

fn sample_polys() -> Vec<GradedPolynomial> {
    let l = GradedPolynomial::generator(Generator::ChernL);
    let y1 = GradedPolynomial::generator(Generator::root(1));
    let y2 = GradedPolynomial::generator(Generator::root(2));
    let s13 = GradedPolynomial::generator(Generator::segre(1, 3));
    let s24 = GradedPolynomial::generator(Generator::segre(2, 4));
    vec![
        GradedPolynomial::zero(),
        GradedPolynomial::one(),
        GradedPolynomial::from_int(-3),
        l.clone(),
        y1.add(&y2),
        s13.mul(&l).sub(&GradedPolynomial::from_int(2)),
        s24.add(&y1.mul(&y1)),
        l.pow(2).sub(&y1.mul(&y2)),
    ]
}

fn ring_axioms() -> SuiteOutcome {
    suite("graded_ring::ring_axioms", || {
        let polys = sample_polys();
        let mut cases = 0;
        for a in &polys {
            for b in &polys {
                if a.mul(b) != b.mul(a) {
                    return Err("commutativity broken".to_string());
                }
                if !a.sub(a).is_zero() {
                    return Err("p - p != 0".to_string());
                }
                for c in &polys {
                    if a.mul(b).mul(c) != a.mul(&b.mul(c)) {
                        return Err("associativity broken".to_string());
                    }
                    if a.mul(&b.add(c)) != a.mul(b).add(&a.mul(c)) {
                        return Err("distributivity broken".to_string());
                    }
                    cases += 1;
                }
            }
        }
        Ok(cases)
    })
}

fn shift_identity() -> SuiteOutcome {
    suite("laurent::shift_identity", || {
        let p = {
            let t1 = LaurentPolynomial::var(2, 0);
            let t2inv =
                LaurentPolynomial::monomial(2, vec![0, -1], GradedPolynomial::from_int(1));
            let mix = t1.add(&t2inv);
            mix.mul(&mix).mul(&mix)
        };
        let mut cases = 0;
        for m1 in 0..=2i64 {
            for m2 in 0..=2i64 {
                let shift =
                    LaurentPolynomial::monomial(2, vec![m1, m2], GradedPolynomial::one());
                let shifted = p.mul(&shift);
                for e1 in -3..=3i64 {
                    for e2 in -3..=3i64 {
                        let direct = p.coefficient_of(&[e1, e2]).unwrap();
                        let via = shifted.coefficient_of(&[e1 + m1, e2 + m2]).unwrap();
                        if direct != via {
                            return Err(format!("shift identity broken at ({e1},{e2})"));
                        }
                        cases += 1;
                    }
                }
            }
        }
        Ok(cases)
    })
}

fn segre_inverts_chern() -> SuiteOutcome {
    suite("chern_models::segre_inverts_chern", || {
        let mut cases = 0;
        for n in 1..=3u32 {
            let shape = AmbientShape::symplectic(n, 1).unwrap();
            let model = ChernModel::rooted(shape);
            let depth = 2 * n as i64 + 2;
            for m in 0..=shape.ambient_rank() {
                let s = model.segre_series(m, -depth).unwrap();
                let c = model.chern_series(m).unwrap();
                let prod = s.mul(&c);
                if !prod.coefficient_of(&[0]).unwrap().is_one() {
                    return Err(format!("s*c constant term != 1 at n={n}, m={m}"));
                }
                for e in 1..=depth {
                    if !prod.coefficient_of(&[-e]).unwrap().is_zero() {
                        return Err(format!("s*c != 1 at n={n}, m={m}, order {e}"));
                    }
                }
                cases += 1;
            }
        }
        Ok(cases)
    })
}

fn rooted_specializes_to_trivial() -> SuiteOutcome {
    suite("chern_models::rooted_specializes_to_trivial", || {
        let mut cases = 0;
        for n in 1..=3u32 {
            for d in 1..=n {
                for form in [FormType::Symplectic, FormType::EvenOrthogonal] {
                    let shape = AmbientShape::new(form, n, d).unwrap();
                    for mu in enumerate_admissible(&shape) {
                        let f = hclass(d as usize).pow(2);
                        let rooted =
                            gysin_closed(&ChernModel::rooted(shape), &mu, &f).unwrap();
                        let trivial =
                            gysin_closed(&ChernModel::trivial(shape), &mu, &f).unwrap();
                        if specialize_to_point(&rooted.value) != trivial.value {
                            return Err(format!("specialization broken at mu={mu}"));
                        }
                        cases += 1;
                    }
                }
            }
        }
        Ok(cases)
    })
}

fn hclass(d: usize) -> InputClass {
    let mut p = InputClass::zero(d);
    for j in 0..d {
        p = p.add(&InputClass::variable(d, j).unwrap());
    }
    p
}

fn degree_table() -> SuiteOutcome {
    suite("gysin::degree_table", || {
        let expect_int = |r: &gysin_core::gysin::GysinResult, want: i64| -> Result<(), String> {
            match as_integer(&r.value) {
                Some(v) if v == BigInt::from(want) => Ok(()),
                other => Err(format!("expected {want}, got {other:?} for mu={}", r.mu)),
            }
        };
        let mut cases = 0;
        for n in 1..=5u32 {
            let shape = AmbientShape::symplectic(n, 1).unwrap();
            let model = ChernModel::trivial(shape);
            let f = InputClass::variable(1, 0).unwrap().pow(2 * n - 1);
            let mu = StrictPartition::new(vec![2 * n]).unwrap();
            expect_int(&gysin_closed(&model, &mu, &f).unwrap(), 1)?;
            cases += 1;
        }
        for n in 2..=4u32 {
            let shape = AmbientShape::even_orthogonal(n, 1).unwrap();
            let model = ChernModel::trivial(shape);
            let f = InputClass::variable(1, 0).unwrap().pow(2 * n - 2);
            let mu = StrictPartition::new(vec![2 * n]).unwrap();
            expect_int(&gysin_closed(&model, &mu, &f).unwrap(), 2)?;
            cases += 1;
        }
        {
            let model =
                ChernModel::trivial(AmbientShape::symplectic(2, 2).unwrap());
            let mu = StrictPartition::new(vec![4, 3]).unwrap();
            expect_int(&gysin_closed(&model, &mu, &hclass(2).pow(3)).unwrap(), 2)?;
            cases += 1;
        }
        {
            let model =
                ChernModel::trivial(AmbientShape::symplectic(3, 3).unwrap());
            let mu = StrictPartition::new(vec![6, 5, 4]).unwrap();
            expect_int(&gysin_closed(&model, &mu, &hclass(3).pow(6)).unwrap(), 16)?;
            cases += 1;
        }
        {
            let model =
                ChernModel::trivial(AmbientShape::even_orthogonal(2, 2).unwrap());
            let mu = StrictPartition::new(vec![4, 3]).unwrap();
            let r = gysin_closed(&model, &mu, &hclass(2)).unwrap();
            expect_int(&r, 4)?;
            expect_int(&halve_components(&r).unwrap(), 2)?;
            cases += 1;
        }
        Ok(cases)
    })
}

fn route_equivalence() -> SuiteOutcome {
    suite("gysin::route_equivalence", || {
        let mut cases = 0;
        for n in 1..=2u32 {
            for d in 1..=n {
                for form in [FormType::Symplectic, FormType::EvenOrthogonal] {
                    let shape = AmbientShape::new(form, n, d).unwrap();
                    for variant in [ModelVariant::FreeSegre, ModelVariant::RootedFlag] {
                        let model = ChernModel::new(variant, shape);
                        for mu in enumerate_admissible(&shape) {
                            for e in monomials(d as usize, 3) {
                                let mut f = InputClass::one(d as usize);
                                for (v, &ev) in e.iter().enumerate() {
                                    f = f.mul(
                                        &InputClass::variable(d as usize, v)
                                            .unwrap()
                                            .pow(ev),
                                    );
                                }
                                let closed = gysin_closed(&model, &mu, &f).unwrap();
                                let tower = gysin_tower(&model, &mu, &f).unwrap();
                                if closed.value != tower.value {
                                    return Err(format!(
                                        "routes differ at mu={mu}, e={e:?}"
                                    ));
                                }
                                cases += 1;
                            }
                        }
                    }
                }
            }
        }
        Ok(cases)
    })
}

fn monomials(d: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        let mut next = Vec::new();
        for e in &out {
            let used: u32 = e.iter().sum();
            for k in 0..=(max - used) {
                let mut e2 = e.clone();
                e2.push(k);
                next.push(e2);
            }
        }
        out = next;
    }
    out
}
