//! Jacobson radical of a group algebra and the duality between module
//! radicals and socle annihilators.
//!
//! The radical of R[K] is computed as the set of group-algebra elements that
//! act as zero on every composition factor of the regular module. Elements
//! of R[K] are coefficient vectors indexed by the member positions of K, as
//! in [`Representation::algebra_action`].

use crate::error::RepError;
use crate::field::Field;
use crate::group::SubgroupHandle;
use crate::matrix::{Matrix, RowSpace};
use crate::meataxe::composition_factors;
use crate::rep::Representation;

/// Desk-scale cap on the group order for radical computations.
pub const RADICAL_ORDER_CAP: usize = 256;

/// Basis of the Jacobson radical of R[K], as a row space of group-algebra
/// coefficient vectors. Dimension zero exactly when char(R) does not divide
/// the group order.
pub fn group_algebra_radical(
    k: &SubgroupHandle,
    field: &Field,
    seed: u64,
) -> Result<RowSpace, RepError> {
    let n = k.order();
    if n > RADICAL_ORDER_CAP {
        return Err(RepError::RadicalCapExceeded {
            order: n,
            cap: RADICAL_ORDER_CAP,
        });
    }
    let regular = Representation::regular_on(k, field);
    let factors = composition_factors(&regular, seed)?;
    // a = (c_pos) is in the radical iff Σ c_pos · F(member pos) = 0 on every
    // distinct composition factor F
    let rows: usize = factors.iter().map(|(f, _)| f.dim() * f.dim()).sum();
    let mut system = Matrix::zero(field, rows, n);
    let mut row0 = 0;
    for (f, _) in &factors {
        let d = f.dim();
        for pos in 0..n {
            let g = k.members()[pos] as usize;
            let m = f.action(g);
            for a in 0..d {
                for b in 0..d {
                    system.set(row0 + a * d + b, pos, m.get(a, b).clone());
                }
            }
        }
        row0 += d * d;
    }
    let kernel = system.kernel_basis();
    Ok(RowSpace::span_rows(field, n, &kernel))
}

/// The largest semisimple submodule of `m`: the joint kernel of the radical
/// acting on the module. With a zero radical this is the whole space.
pub fn semisimple_socle(m: &Representation, radical: &RowSpace) -> RowSpace {
    if radical.dim() == 0 {
        return RowSpace::full(m.field(), m.dim());
    }
    let mut stacked = Matrix::zero(m.field(), 0, m.dim());
    for row in radical.basis_rows() {
        stacked = stacked.vstack(&m.algebra_action(&row));
    }
    let kernel = stacked.kernel_basis();
    RowSpace::span_rows(m.field(), m.dim(), &kernel)
}

/// The radical-times-dual subspace `r · M^∨` inside the dual module.
pub fn radical_times_dual(m: &Representation, radical: &RowSpace) -> RowSpace {
    let dual = m.contragredient();
    let mut rows = Vec::new();
    for coeffs in radical.basis_rows() {
        let act = dual.algebra_action(&coeffs);
        for j in 0..act.cols() {
            rows.push(act.col(j));
        }
    }
    if rows.is_empty() {
        RowSpace::zero(m.field(), m.dim())
    } else {
        RowSpace::span_rows(m.field(), m.dim(), &rows)
    }
}

/// Exact comparison `r·M^∨ = (M[r])°`: the radical times the dual module
/// equals the annihilator of the largest semisimple submodule. Both sides
/// are returned alongside the verdict.
pub struct RadicalDualReport {
    pub radical_dim: usize,
    pub radical_times_dual: RowSpace,
    pub socle_annihilator: RowSpace,
    pub equal: bool,
}

pub fn radical_dual_annihilator_check(
    m: &Representation,
    seed: u64,
) -> Result<RadicalDualReport, RepError> {
    let radical = group_algebra_radical(m.domain(), m.field(), seed)?;
    let lhs = radical_times_dual(m, &radical);
    let socle = semisimple_socle(m, &radical);
    let rhs = socle.annihilator();
    Ok(RadicalDualReport {
        radical_dim: radical.dim(),
        equal: lhs == rhs,
        radical_times_dual: lhs,
        socle_annihilator: rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupTable;

    #[test]
    fn radical_vanishes_in_characteristic_zero() {
        let q = Field::rationals();
        for g in [GroupTable::cyclic(3), GroupTable::symmetric(3)] {
            let r = group_algebra_radical(&g.whole(), &q, 1).unwrap();
            assert_eq!(r.dim(), 0);
        }
    }

    #[test]
    fn radical_of_z3_mod_3_has_dimension_two() {
        let g = GroupTable::cyclic(3);
        let f3 = Field::prime(3).unwrap();
        let r = group_algebra_radical(&g.whole(), &f3, 1).unwrap();
        assert_eq!(r.dim(), 2);
        // the augmentation-type elements g - 1 and g^2 - 1 lie in it
        for residue in [1u32, 2] {
            let mut v = vec![f3.zero(); 3];
            v[g.cyclic_index(residue).unwrap()] = f3.one();
            v[0] = f3.from_int(-1);
            assert!(r.contains(&v));
        }
    }

    #[test]
    fn radical_of_s3_mod_3_has_dimension_four() {
        let g = GroupTable::symmetric(3);
        let f3 = Field::prime(3).unwrap();
        let r = group_algebra_radical(&g.whole(), &f3, 1).unwrap();
        assert_eq!(r.dim(), 4);
    }

    #[test]
    fn maschke_boundary() {
        // characteristic does not divide the order: zero radical
        let g = GroupTable::symmetric(3);
        let f5 = Field::prime(5).unwrap();
        assert_eq!(group_algebra_radical(&g.whole(), &f5, 1).unwrap().dim(), 0);
        // characteristic 2 divides 6: nonzero radical
        let f2 = Field::prime(2).unwrap();
        assert!(group_algebra_radical(&g.whole(), &f2, 1).unwrap().dim() > 0);
    }

    #[test]
    fn order_cap_is_enforced() {
        let g = GroupTable::cyclic(300);
        let f3 = Field::prime(3).unwrap();
        assert!(matches!(
            group_algebra_radical(&g.whole(), &f3, 1),
            Err(RepError::RadicalCapExceeded { .. })
        ));
    }

    #[test]
    fn radical_dual_matches_annihilator_on_jordan_block() {
        let g = GroupTable::cyclic(3);
        let f3 = Field::prime(3).unwrap();
        let one = g.cyclic_index(1).unwrap();
        let j = Matrix::from_ints(&f3, 2, 2, &[1, 1, 0, 1]);
        let m = Representation::new(g.whole(), f3.clone(), 2, vec![(one, j)]).unwrap();
        let report = radical_dual_annihilator_check(&m, 5).unwrap();
        assert!(report.equal);
        assert_eq!(report.radical_times_dual.dim(), 1);
    }

    #[test]
    fn radical_dual_matches_annihilator_on_regular_modules() {
        let f3 = Field::prime(3).unwrap();
        for g in [GroupTable::cyclic(3), GroupTable::symmetric(3)] {
            let m = Representation::regular(&g, &f3);
            let report = radical_dual_annihilator_check(&m, 9).unwrap();
            assert!(report.equal);
        }
        // semisimple case: both sides are zero
        let q = Field::rationals();
        let m = Representation::regular(&GroupTable::cyclic(3), &q);
        let report = radical_dual_annihilator_check(&m, 9).unwrap();
        assert!(report.equal);
        assert_eq!(report.radical_times_dual.dim(), 0);
        assert_eq!(report.socle_annihilator.dim(), 0);
    }
}
