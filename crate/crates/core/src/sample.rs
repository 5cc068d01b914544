//! Seeded random constructions: submodule pools, random modules built from
//! sum/sub/quotient constructors, and exhaustive submodule enumeration for
//! small modules over small finite fields.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::RepError;
use crate::field::Field;
use crate::group::{GroupTable, SubgroupHandle};
use crate::matrix::{Matrix, RowSpace};
use crate::meataxe::random_vector;
use crate::rep::{hom_space, Representation};

/// Largest vector-enumeration size for the exhaustive submodule search.
const EXHAUSTIVE_VECTOR_CAP: u64 = 100_000;
const POOL_CAP: usize = 64;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The unipotent Jordan block of the stated size as a representation of a
/// cyclic group (requires `J^n = 1`, so the block size must not exceed the
/// characteristic and the characteristic must divide the group order).
pub fn jordan_block(
    group: &GroupTable,
    field: &Field,
    size: usize,
) -> Result<Representation, RepError> {
    let gen = group
        .cyclic_index(1)
        .expect("jordan blocks are built over cyclic groups");
    let mut j = Matrix::identity(field, size);
    for i in 0..size.saturating_sub(1) {
        j.set(i, i + 1, field.one());
    }
    Representation::new(group.whole(), field.clone(), size, vec![(gen, j)])
}

/// A deduplicated collection of invariant subspaces: zero, the full space,
/// spins of seeded random vectors, and kernels/images of endomorphism basis
/// elements, closed under one round of pairwise sums and intersections.
pub fn submodule_pool(rep: &Representation, seed: u64, random_spins: usize) -> Vec<RowSpace> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = rep.field().clone();
    let dim = rep.dim();
    let mut pool: Vec<RowSpace> = Vec::new();
    let push = |s: RowSpace, pool: &mut Vec<RowSpace>| {
        if pool.len() < POOL_CAP && !pool.contains(&s) {
            pool.push(s);
        }
    };
    push(RowSpace::zero(&field, dim), &mut pool);
    push(RowSpace::full(&field, dim), &mut pool);
    for _ in 0..random_spins {
        let v = random_vector(&field, dim, &mut rng);
        push(rep.spin(&[v]), &mut pool);
    }
    if dim > 0 && dim <= 32 {
        let ends = hom_space(rep, rep, rep.domain());
        for u in ends.basis() {
            let kernel = RowSpace::span_rows(&field, dim, &u.kernel_basis());
            push(kernel, &mut pool);
            let image_rows: Vec<Vec<_>> = (0..dim).map(|j| u.col(j)).collect();
            push(RowSpace::span_rows(&field, dim, &image_rows), &mut pool);
        }
    }
    let snapshot = pool.clone();
    for (i, a) in snapshot.iter().enumerate() {
        for b in snapshot.iter().skip(i + 1) {
            push(a.sum(b), &mut pool);
            push(a.intersect(b), &mut pool);
        }
    }
    pool
}

/// Every invariant subspace, found by spinning all vectors of a small module
/// over a small finite field and closing the cyclic submodules under sums.
/// `None` when the enumeration would be too large or the field is infinite.
pub fn all_submodules(rep: &Representation) -> Option<Vec<RowSpace>> {
    let q = rep.field().order()?;
    let dim = rep.dim() as u32;
    let total = q.checked_pow(dim)?;
    if total > EXHAUSTIVE_VECTOR_CAP {
        return None;
    }
    let field = rep.field().clone();
    let mut found: Vec<RowSpace> = vec![RowSpace::zero(&field, rep.dim())];
    for code in 1..total {
        let mut c = code;
        let mut v = Vec::with_capacity(rep.dim());
        for _ in 0..rep.dim() {
            v.push(field.from_code(c % q));
            c /= q;
        }
        let s = rep.spin(&[v]);
        if !found.contains(&s) {
            found.push(s);
        }
    }
    // close under sums (sums of invariant subspaces are invariant)
    loop {
        let mut grew = false;
        let snapshot = found.clone();
        for (i, a) in snapshot.iter().enumerate() {
            for b in snapshot.iter().skip(i + 1) {
                let s = a.sum(b);
                if !found.contains(&s) {
                    found.push(s);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    found.sort_by_key(RowSpace::dim);
    Some(found)
}

/// A random module over the subgroup K built from a base block (the fixed
/// representation, the trivial character, or the regular module) by up to
/// three random direct-sum / spun-quotient / spun-submodule steps.
pub fn random_module(
    k: &SubgroupHandle,
    w: &Representation,
    rng: &mut ChaCha8Rng,
    max_dim: usize,
) -> Representation {
    let field = w.field().clone();
    let mut blocks: Vec<Representation> = vec![w.clone(), Representation::trivial(k, &field)];
    if k.order() <= 16 {
        blocks.push(Representation::regular_on(k, &field));
    }
    let mut current = blocks[rng.random_range(0..blocks.len())].clone();
    for _ in 0..rng.random_range(1..=3) {
        match rng.random_range(0..3u32) {
            0 => {
                let other = &blocks[rng.random_range(0..blocks.len())];
                if current.dim() + other.dim() <= max_dim {
                    current = current.direct_sum(other);
                }
            }
            1 => {
                if current.dim() > 0 {
                    let v = random_vector(&field, current.dim(), rng);
                    let s = current.spin(&[v]);
                    if s.dim() < current.dim() {
                        current = current
                            .quotient_representation(&s)
                            .expect("spun subspace is invariant")
                            .0;
                    }
                }
            }
            _ => {
                if current.dim() > 0 {
                    let v = random_vector(&field, current.dim(), rng);
                    let s = current.spin(&[v]);
                    if s.dim() > 0 {
                        current = current
                            .sub_representation(&s)
                            .expect("spun subspace is invariant");
                    }
                }
            }
        }
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jordan_block_of_wrong_size_is_rejected() {
        let z3 = GroupTable::cyclic(3);
        let f3 = Field::prime(3).unwrap();
        assert!(jordan_block(&z3, &f3, 2).is_ok());
        assert!(jordan_block(&z3, &f3, 3).is_ok());
        // J_4(1) has order 9 > 3: not a representation of Z/3
        assert!(jordan_block(&z3, &f3, 4).is_err());
        // characteristic 5 doesn't divide 3: J_2(1) has order 5
        let f5 = Field::prime(5).unwrap();
        assert!(jordan_block(&z3, &f5, 2).is_err());
    }

    #[test]
    fn pool_contains_the_obvious_submodules() {
        let z3 = GroupTable::cyclic(3);
        let f3 = Field::prime(3).unwrap();
        let j = jordan_block(&z3, &f3, 2).unwrap();
        let pool = submodule_pool(&j, 42, 8);
        let dims: Vec<usize> = {
            let mut d: Vec<usize> = pool.iter().map(RowSpace::dim).collect();
            d.sort_unstable();
            d.dedup();
            d
        };
        assert_eq!(dims, vec![0, 1, 2]);
    }

    #[test]
    fn exhaustive_submodules_of_the_jordan_plane() {
        let z3 = GroupTable::cyclic(3);
        let f3 = Field::prime(3).unwrap();
        let j = jordan_block(&z3, &f3, 2).unwrap();
        let all = all_submodules(&j).unwrap();
        // 0 ⊂ fixed line ⊂ everything: a unique chain
        assert_eq!(all.len(), 3);
        assert_eq!(all[1].dim(), 1);
    }

    #[test]
    fn random_modules_are_reproducible() {
        use rand_chacha::rand_core::SeedableRng;
        let g = GroupTable::symmetric(3);
        let f3 = Field::prime(3).unwrap();
        let w = Representation::trivial(&g.whole(), &f3);
        let mut rng1 = ChaCha8Rng::seed_from_u64(7);
        let mut rng2 = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let a = random_module(&g.whole(), &w, &mut rng1, 24);
            let b = random_module(&g.whole(), &w, &mut rng2, 24);
            assert_eq!(a.dim(), b.dim());
            assert!(a.actions_equal(&b));
        }
    }
}
