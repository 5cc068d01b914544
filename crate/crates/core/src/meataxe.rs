//! Randomised irreducibility testing and composition series splitting.
//!
//! The split routine draws seeded random elements of the acting matrix
//! algebra, spins null-space vectors, and certifies irreducibility through
//! the nullity-one criterion (spin the null vector in the module and a null
//! vector of the transpose in the dual; if both spins fill the space the
//! module is irreducible). The test either certifies, produces a proper
//! invariant subspace, or reports `Inconclusive` — it never guesses.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::RepError;
use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, RowSpace};
use crate::rep::{hom_space, Representation};

/// Randomisation budget: attempts before giving up with `Inconclusive`.
pub const DEFAULT_BUDGET: usize = 64;

#[derive(Clone, Debug)]
pub enum Split {
    Irreducible,
    /// A proper nonzero invariant subspace.
    Reducible(RowSpace),
}

pub fn random_scalar(field: &Field, rng: &mut ChaCha8Rng) -> Scalar {
    match field.order() {
        Some(q) => field.from_code(rng.random_range(0..q)),
        None => field.from_int(rng.random_range(-3..=3)),
    }
}

pub fn random_vector(field: &Field, dim: usize, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    (0..dim).map(|_| random_scalar(field, rng)).collect()
}

/// A random element of the matrix algebra generated by the action: a small
/// linear combination of short products of generator actions.
fn random_algebra_element(rep: &Representation, rng: &mut ChaCha8Rng) -> Matrix {
    let gens = rep.generator_elements();
    let group = rep.domain().parent();
    let mut acc = Matrix::zero(rep.field(), rep.dim(), rep.dim());
    let terms = rng.random_range(2..=4);
    for _ in 0..terms {
        let mut e = group.identity();
        for _ in 0..rng.random_range(1..=3) {
            e = group.mul(e, gens[rng.random_range(0..gens.len())]);
        }
        let c = random_scalar(rep.field(), rng);
        acc = acc.add(&rep.action(e).scale(&c));
    }
    acc
}

fn spin_under(mats: &[Matrix], field: &Field, dim: usize, seed: &[Scalar]) -> RowSpace {
    let mut space = RowSpace::span_rows(field, dim, &[seed.to_vec()]);
    loop {
        let mut grew = false;
        for row in space.basis_rows() {
            for m in mats {
                let img = m.apply(&row);
                if !space.contains(&img) {
                    space = space.sum(&RowSpace::span_rows(field, dim, &[img]));
                    grew = true;
                }
            }
        }
        if !grew {
            return space;
        }
    }
}

/// Dimension cap for the endomorphism-algebra route (a Hom-space solve in
/// dim² unknowns).
const END_ROUTE_DIM_CAP: usize = 12;
/// Vector-enumeration cap for the exhaustive route over finite fields.
const EXHAUSTIVE_SPLIT_CAP: u64 = 30_000;

/// Monic minimal polynomial of a square matrix, little-endian coefficients.
fn minimal_polynomial(u: &Matrix) -> Vec<Scalar> {
    let field = u.field();
    let n = u.rows();
    let flat = |m: &Matrix| -> Vec<Scalar> {
        let mut v = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                v.push(m.get(i, j).clone());
            }
        }
        v
    };
    let mut powers: Vec<Vec<Scalar>> = vec![flat(&Matrix::identity(field, n))];
    let mut cur = Matrix::identity(field, n);
    loop {
        cur = cur.mul(u);
        let target = flat(&cur);
        let span = Matrix::from_fn(field, n * n, powers.len(), |i, j| powers[j][i].clone());
        if let Some(coeffs) = span.solve(&target) {
            // x^k = Σ coeffs_i x^i, so the minimal polynomial is
            // x^k − Σ coeffs_i x^i
            let mut poly: Vec<Scalar> = coeffs.iter().map(|c| -c).collect();
            poly.push(field.one());
            return poly;
        }
        powers.push(target);
    }
}

enum RootSearch {
    Found(Scalar),
    NoRoot,
    Unknown,
}

fn eval_poly(poly: &[Scalar], x: &Scalar) -> Scalar {
    let field = x.field();
    let mut acc = field.zero();
    for c in poly.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn root_in_field(field: &Field, poly: &[Scalar]) -> RootSearch {
    match field.order() {
        Some(q) => {
            for code in 0..q {
                let x = field.from_code(code);
                if eval_poly(poly, &x).is_zero() {
                    return RootSearch::Found(x);
                }
            }
            RootSearch::NoRoot
        }
        None => {
            if poly.len() == 3 {
                // quadratic over the rationals: exact discriminant test
                let b = poly[1].clone();
                let c = poly[0].clone();
                let four = field.from_int(4);
                let disc = &(&b * &b) - &(&four * &c);
                return match disc.rational_sqrt() {
                    Some(s) => {
                        let root = (&s - &b).div(&field.from_int(2)).expect("char 0");
                        debug_assert!(eval_poly(poly, &root).is_zero());
                        RootSearch::Found(root)
                    }
                    None => RootSearch::NoRoot,
                };
            }
            // monic integer polynomial: any rational root is an integer
            // dividing the constant term
            let mut ints = Vec::with_capacity(poly.len());
            for c in poly {
                let r = c.rational().expect("rational field");
                if !num::One::is_one(r.denom()) {
                    return RootSearch::Unknown;
                }
                match i64::try_from(r.numer().clone()) {
                    Ok(v) => ints.push(v),
                    Err(_) => return RootSearch::Unknown,
                }
            }
            let a0 = ints[0].unsigned_abs();
            if a0 == 0 {
                return RootSearch::Found(field.zero());
            }
            if a0 > 1_000_000 {
                return RootSearch::Unknown;
            }
            for d in 1..=a0 {
                if a0 % d != 0 {
                    continue;
                }
                for cand in [d as i64, -(d as i64)] {
                    let x = field.from_int(cand);
                    if eval_poly(poly, &x).is_zero() {
                        return RootSearch::Found(x);
                    }
                }
            }
            RootSearch::NoRoot
        }
    }
}

/// Splitting route through the endomorphism algebra: a singular nonzero
/// endomorphism yields an invariant kernel; when the group order is
/// invertible in the field (so the module is semisimple) an endomorphism
/// whose minimal polynomial is irreducible of full degree certifies that
/// the endomorphisms form a division algebra, hence irreducibility.
fn endomorphism_route(rep: &Representation) -> Option<Split> {
    let dim = rep.dim();
    let ends = hom_space(rep, rep, rep.domain());
    let mut candidates: Vec<Matrix> = ends.basis().to_vec();
    for i in 0..ends.dim() {
        for j in i + 1..ends.dim() {
            candidates.push(ends.basis()[i].add(&ends.basis()[j]));
        }
    }
    for u in &candidates {
        if u.is_zero() {
            continue;
        }
        let kernel = u.kernel_basis();
        if !kernel.is_empty() && kernel.len() < dim {
            return Some(Split::Reducible(RowSpace::span_rows(
                rep.field(),
                dim,
                &kernel,
            )));
        }
    }
    let order = rep.domain().order() as u64;
    let char_ = rep.field().characteristic();
    let semisimple = char_ == 0 || order % char_ != 0;
    if !semisimple {
        return None;
    }
    if ends.dim() == 1 {
        return Some(Split::Irreducible);
    }
    for u in &candidates {
        if u.scalar_multiple_of_identity().is_some() {
            continue;
        }
        let mp = minimal_polynomial(u);
        match root_in_field(rep.field(), &mp) {
            RootSearch::Found(a) => {
                // u − a is singular and nonzero
                let shifted = u.sub(&Matrix::identity(rep.field(), dim).scale(&a));
                let kernel = shifted.kernel_basis();
                if !kernel.is_empty() && kernel.len() < dim {
                    return Some(Split::Reducible(RowSpace::span_rows(
                        rep.field(),
                        dim,
                        &kernel,
                    )));
                }
            }
            RootSearch::NoRoot => {
                let degree = mp.len() - 1;
                if degree == ends.dim() && degree <= 3 {
                    // End = k[u] is a field; with a semisimple module that
                    // certifies irreducibility
                    return Some(Split::Irreducible);
                }
            }
            RootSearch::Unknown => {}
        }
    }
    None
}

/// Exhaustive route: spin every nonzero vector of a small module over a
/// small finite field. Complete and deterministic within the cap.
fn exhaustive_route(rep: &Representation) -> Option<Split> {
    let q = rep.field().order()?;
    let dim = rep.dim();
    let total = q.checked_pow(dim as u32)?;
    if total > EXHAUSTIVE_SPLIT_CAP {
        return None;
    }
    let field = rep.field();
    for code in 1..total {
        let mut c = code;
        let mut v = Vec::with_capacity(dim);
        for _ in 0..dim {
            v.push(field.from_code(c % q));
            c /= q;
        }
        let spun = rep.spin(&[v]);
        if spun.dim() < dim {
            return Some(Split::Reducible(spun));
        }
    }
    Some(Split::Irreducible)
}

/// Split a representation or certify it irreducible. Deterministic routes
/// (endomorphism algebra, exhaustive vector spinning) run first; the seeded
/// random route with nullity-one certification covers the rest.
pub fn split_with_budget(
    rep: &Representation,
    rng: &mut ChaCha8Rng,
    budget: usize,
) -> Result<Split, RepError> {
    let dim = rep.dim();
    assert!(dim >= 1, "cannot split a zero-dimensional module");
    if dim == 1 {
        return Ok(Split::Irreducible);
    }
    let gens = rep.generator_elements();
    if gens.is_empty() {
        // trivial group: every line is invariant
        let mut line = vec![rep.field().zero(); dim];
        line[0] = rep.field().one();
        return Ok(Split::Reducible(RowSpace::span_rows(
            rep.field(),
            dim,
            &[line],
        )));
    }
    if dim <= END_ROUTE_DIM_CAP {
        if let Some(result) = endomorphism_route(rep) {
            return Ok(result);
        }
    }
    if let Some(result) = exhaustive_route(rep) {
        return Ok(result);
    }
    let gen_mats_t: Vec<Matrix> = gens
        .iter()
        .map(|&g| rep.action(g).transpose())
        .collect();

    for _ in 0..budget {
        let theta = random_algebra_element(rep, rng);
        let kernel = theta.kernel_basis();
        if kernel.is_empty() {
            continue;
        }
        for v in &kernel {
            let spun = rep.spin(&[v.clone()]);
            if spun.dim() < dim {
                return Ok(Split::Reducible(spun));
            }
        }
        if kernel.len() == 1 {
            // nullity-one certification through the dual module
            let wt = theta.transpose().kernel_basis();
            let dual_spun = spin_under(&gen_mats_t, rep.field(), dim, &wt[0]);
            if dual_spun.dim() < dim {
                // the annihilator of a proper dual submodule is a proper
                // invariant subspace of the original module
                return Ok(Split::Reducible(dual_spun.annihilator()));
            }
            return Ok(Split::Irreducible);
        }
    }
    Err(RepError::Inconclusive { attempts: budget })
}

pub fn split(rep: &Representation, seed: u64) -> Result<Split, RepError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    split_with_budget(rep, &mut rng, DEFAULT_BUDGET)
}

pub fn is_irreducible(rep: &Representation, seed: u64) -> Result<bool, RepError> {
    Ok(matches!(split(rep, seed)?, Split::Irreducible))
}

/// Irreducible with one-dimensional endomorphism algebra.
pub fn is_absolutely_irreducible(rep: &Representation, seed: u64) -> Result<bool, RepError> {
    assert!(rep.dim() >= 1);
    if !is_irreducible(rep, seed)? {
        return Ok(false);
    }
    let end_dim = hom_space(rep, rep, rep.domain()).dim();
    Ok(end_dim == 1)
}

/// Composition factors with multiplicity, deduplicated up to isomorphism
/// (Hom nonzero in both directions between irreducibles).
pub fn composition_factors(
    rep: &Representation,
    seed: u64,
) -> Result<Vec<(Representation, usize)>, RepError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(Representation, usize)> = Vec::new();
    collect_factors(rep, &mut rng, &mut out)?;
    Ok(out)
}

fn collect_factors(
    rep: &Representation,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<(Representation, usize)>,
) -> Result<(), RepError> {
    if rep.dim() == 0 {
        return Ok(());
    }
    match split_with_budget(rep, rng, DEFAULT_BUDGET)? {
        Split::Irreducible => {
            for (existing, mult) in out.iter_mut() {
                if isomorphic_irreducibles(existing, rep) {
                    *mult += 1;
                    return Ok(());
                }
            }
            out.push((rep.clone(), 1));
            Ok(())
        }
        Split::Reducible(space) => {
            let sub = rep.sub_representation(&space)?;
            let (quot, _) = rep.quotient_representation(&space)?;
            collect_factors(&sub, rng, out)?;
            collect_factors(&quot, rng, out)
        }
    }
}

/// Isomorphism test for irreducible representations on a common domain.
pub fn isomorphic_irreducibles(a: &Representation, b: &Representation) -> bool {
    a.dim() == b.dim()
        && a.domain() == b.domain()
        && hom_space(a, b, a.domain()).dim() >= 1
        && hom_space(b, a, a.domain()).dim() >= 1
}

/// Multiset equality of two composition factor lists.
pub fn same_factor_multiset(
    a: &[(Representation, usize)],
    b: &[(Representation, usize)],
) -> bool {
    if a.iter().map(|x| x.1).sum::<usize>() != b.iter().map(|x| x.1).sum::<usize>() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for (fa, ma) in a {
        let found = b
            .iter()
            .enumerate()
            .find(|(j, (fb, mb))| !used[*j] && mb == ma && isomorphic_irreducibles(fa, fb));
        match found {
            Some((j, _)) => used[j] = true,
            None => return false,
        }
    }
    used.iter().all(|&u| u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupTable;

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn one_dimensional_is_always_absolutely_irreducible() {
        let g = GroupTable::cyclic(4);
        let triv = Representation::trivial(&g.whole(), &f(5));
        assert!(is_absolutely_irreducible(&triv, 1).unwrap());
    }

    #[test]
    fn double_trivial_is_reducible_with_end_dim_four() {
        let g = GroupTable::cyclic(3);
        let field = f(5);
        let triv = Representation::trivial(&g.whole(), &field);
        let double = triv.direct_sum(&triv);
        assert!(!is_absolutely_irreducible(&double, 2).unwrap());
        assert_eq!(hom_space(&double, &double, double.domain()).dim(), 4);
    }

    #[test]
    fn standard_rep_of_s3_over_f5_is_absolutely_irreducible() {
        let g = GroupTable::symmetric(3);
        let field = f(5);
        let t = g.permutation_index(&[1, 0, 2]).unwrap();
        let c = g.permutation_index(&[1, 2, 0]).unwrap();
        let mt = Matrix::from_ints(&field, 2, 2, &[-1, 1, 0, 1]);
        let mc = Matrix::from_ints(&field, 2, 2, &[0, -1, 1, -1]);
        let r = Representation::new(g.whole(), field, 2, vec![(t, mt), (c, mc)]).unwrap();
        assert!(is_absolutely_irreducible(&r, 3).unwrap());
    }

    #[test]
    fn regular_rep_of_z3_mod_3_is_trivial_cubed() {
        let g = GroupTable::cyclic(3);
        let field = f(3);
        let reg = Representation::regular(&g, &field);
        let factors = composition_factors(&reg, 7).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].0.dim(), 1);
        assert_eq!(factors[0].1, 3);
        // the unique factor is the trivial character
        assert!(factors[0]
            .0
            .action(g.cyclic_index(1).unwrap())
            .is_identity());
    }

    #[test]
    fn factor_dimensions_sum_to_total() {
        let g = GroupTable::symmetric(3);
        for p in [5u64, 7] {
            let reg = Representation::regular(&g, &f(p));
            let factors = composition_factors(&reg, 11).unwrap();
            let total: usize = factors.iter().map(|(r, m)| r.dim() * m).sum();
            assert_eq!(total, 6);
        }
    }

    #[test]
    fn multiset_comparison_detects_mismatch() {
        let g = GroupTable::cyclic(3);
        let field = Field::rationals();
        let triv = Representation::trivial(&g.whole(), &field);
        let a = composition_factors(&triv, 1).unwrap();
        let b = composition_factors(&triv.direct_sum(&triv), 1).unwrap();
        assert!(!same_factor_multiset(&a, &b));
        assert!(same_factor_multiset(&b, &b));
    }
}
