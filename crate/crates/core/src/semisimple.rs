//! Deciders and cross-checks for W-semisimplicity and its strong variant.
//!
//! A representation V of K is W-semisimple when the canonical map from its
//! W-isotypic socle to its W-isotypic coquotient is an isomorphism. That
//! condition has two further equivalent formulations (the composition
//! pairing between the two Hom spaces is a perfect pairing; V splits off
//! its socle with a complement seeing no W either way), and each of the
//! three is computed independently here so their agreement is testable on
//! every instance. The strong variant asks for a complement without any
//! subquotient isomorphic to W; it is hereditary and transfers to
//! contragredients, which is what the remaining checks in this module
//! exercise.


use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{GroupError, RepError};
use crate::field::Scalar;
use crate::group::SubgroupHandle;
use crate::hecke::{
    coords_in_matrix_basis, gram_data, intertwiner_space, HeckeAlgebra,
};
use crate::matrix::{Matrix, RowSpace};
use crate::meataxe::{
    composition_factors, is_absolutely_irreducible, is_irreducible, isomorphic_irreducibles,
    random_vector,
};
use crate::rep::{
    hom_space, isotypic_coquotient, isotypic_socle, socle_to_coquotient_map, Representation,
};
use crate::sample::submodule_pool;

/// The three equivalent semisimplicity conditions, each computed on its own
/// route, plus the witness decomposition when one exists.
#[derive(Clone, Debug)]
pub struct SemisimplicityVerdict {
    pub socle_dim: usize,
    pub coquotient_dim: usize,
    pub map_rank: usize,
    /// socle → coquotient is an isomorphism
    pub condition_map_iso: bool,
    /// the composition pairing between the Hom spaces is perfect
    pub condition_gram_perfect: bool,
    /// V = socle ⊕ V' with Hom(W, V') = Hom(V', W) = 0
    pub condition_splitting: bool,
    /// the complement V' (the coquotient kernel) when condition 3 holds
    pub complement: Option<RowSpace>,
}

impl SemisimplicityVerdict {
    /// The three routes must agree on every instance; disagreement would be
    /// a genuine failure of the equivalence.
    pub fn consistent(&self) -> bool {
        self.condition_map_iso == self.condition_gram_perfect
            && self.condition_gram_perfect == self.condition_splitting
    }

    pub fn is_semisimple(&self) -> bool {
        self.condition_map_iso
    }
}

fn restricted<'a>(v: &'a Representation, k: &SubgroupHandle) -> Representation {
    if v.domain() == k {
        v.clone()
    } else {
        v.restrict(k)
    }
}

/// Decide W-semisimplicity of V over K, computing all three equivalent
/// conditions independently.
pub fn w_semisimplicity(
    v: &Representation,
    w: &Representation,
    k: &SubgroupHandle,
) -> Result<SemisimplicityVerdict, RepError> {
    let vk = restricted(v, k);
    let socle = isotypic_socle(&vk, w, k);
    let coq = isotypic_coquotient(&vk, w, k)?;
    let map = coq.maps.projection.mul(&socle.basis().transpose());
    let map_rank = map.rank();
    let condition_map_iso = map_rank == socle.dim() && map_rank == coq.rep.dim();

    let gd = gram_data(&vk, w, k)?;
    let condition_gram_perfect = gd.nondegenerate();

    let n = &coq.kernel;
    let splits = socle.intersect(n).dim() == 0 && socle.dim() + n.dim() == vk.dim();
    let condition_splitting = if splits {
        let comp = vk.sub_representation(n)?;
        hom_space(w, &comp, k).dim() == 0 && hom_space(&comp, w, k).dim() == 0
    } else {
        false
    };

    Ok(SemisimplicityVerdict {
        socle_dim: socle.dim(),
        coquotient_dim: coq.rep.dim(),
        map_rank,
        condition_map_iso,
        condition_gram_perfect,
        condition_splitting,
        complement: condition_splitting.then(|| n.clone()),
    })
}

#[derive(Clone, Debug)]
pub struct StrongVerdict {
    pub strongly: bool,
    /// V = socle ⊕ N as vector spaces
    pub splits: bool,
    /// no composition factor of the complement is isomorphic to W
    pub complement_avoids_w: bool,
    pub socle: RowSpace,
    pub complement: RowSpace,
}

/// Strong W-semisimplicity: V = socle ⊕ N where the complement N (the
/// coquotient kernel) has no composition factor isomorphic to W. Any valid
/// complement is contained in N, so checking N decides the property.
pub fn strong_w_semisimplicity(
    v: &Representation,
    w: &Representation,
    k: &SubgroupHandle,
    seed: u64,
) -> Result<StrongVerdict, RepError> {
    let vk = restricted(v, k);
    let wk = restricted(w, k);
    let socle = isotypic_socle(&vk, &wk, k);
    let coq = isotypic_coquotient(&vk, &wk, k)?;
    let n = coq.kernel;
    let splits = socle.intersect(&n).dim() == 0 && socle.dim() + n.dim() == vk.dim();
    let n_rep = vk.sub_representation(&n)?;
    let factors = composition_factors(&n_rep, seed)?;
    let complement_avoids_w = factors
        .iter()
        .all(|(f, _)| !isomorphic_irreducibles(f, &wk));
    Ok(StrongVerdict {
        strongly: splits && complement_avoids_w,
        splits,
        complement_avoids_w,
        socle,
        complement: n,
    })
}

#[derive(Clone, Debug, Default)]
pub struct HeredityReport {
    pub samples: usize,
    pub base_surjective: bool,
    pub base_injective: bool,
    pub base_strong: bool,
    pub failures: Vec<String>,
}

impl HeredityReport {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Heredity of the socle→coquotient properties over sampled submodules and
/// quotients: surjectivity passes to quotients, injectivity to submodules,
/// and the strong property to both (with the complement splitting of each
/// submodule checked dimension-wise).
pub fn heredity_check(
    v: &Representation,
    w: &Representation,
    k: &SubgroupHandle,
    seed: u64,
    random_spins: usize,
) -> Result<HeredityReport, RepError> {
    let vk = restricted(v, k);
    let socle = isotypic_socle(&vk, w, k);
    let coq = isotypic_coquotient(&vk, w, k)?;
    let map = coq.maps.projection.mul(&socle.basis().transpose());
    let rank = map.rank();
    let base_surjective = rank == coq.rep.dim();
    let base_injective = rank == socle.dim();
    let strong = strong_w_semisimplicity(&vk, w, k, seed)?;

    let mut report = HeredityReport {
        samples: 0,
        base_surjective,
        base_injective,
        base_strong: strong.strongly,
        failures: Vec::new(),
    };

    for (idx, x) in submodule_pool(&vk, seed, random_spins).into_iter().enumerate() {
        report.samples += 1;
        let sub = vk.sub_representation(&x)?;
        let (quot, _) = vk.quotient_representation(&x)?;
        if base_surjective {
            let qv = w_semisimplicity(&quot, w, k)?;
            if qv.map_rank != qv.coquotient_dim {
                report
                    .failures
                    .push(format!("sample {idx}: quotient map not surjective"));
            }
        }
        if base_injective {
            let sv = w_semisimplicity(&sub, w, k)?;
            if sv.map_rank != sv.socle_dim {
                report
                    .failures
                    .push(format!("sample {idx}: submodule map not injective"));
            }
        }
        if strong.strongly {
            if !strong_w_semisimplicity(&sub, w, k, seed)?.strongly {
                report
                    .failures
                    .push(format!("sample {idx}: submodule lost the strong property"));
            }
            if !strong_w_semisimplicity(&quot, w, k, seed)?.strongly {
                report
                    .failures
                    .push(format!("sample {idx}: quotient lost the strong property"));
            }
            // the submodule splits along the ambient decomposition
            let a = x.intersect(&strong.socle).dim();
            let b = x.intersect(&strong.complement).dim();
            if a + b != x.dim() {
                report.failures.push(format!(
                    "sample {idx}: submodule does not split along socle ⊕ complement"
                ));
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct DualTransferReport {
    pub plain_matches: bool,
    pub strong_matches: bool,
    pub orthogonal_samples: usize,
    pub orthogonal_dims_consistent: bool,
}

/// Both semisimplicity notions transfer to the contragredient (with W
/// replaced by its contragredient), and quotients of nested dual subspaces
/// match the duals of the corresponding subquotients dimension-wise.
pub fn dual_transfer_check(
    v: &Representation,
    w: &Representation,
    k: &SubgroupHandle,
    seed: u64,
    samples: usize,
) -> Result<DualTransferReport, RepError> {
    let vk = restricted(v, k);
    let wk = restricted(w, k);
    let vd = vk.contragredient();
    let wd = wk.contragredient();
    let plain = w_semisimplicity(&vk, &wk, k)?.is_semisimple();
    let plain_dual = w_semisimplicity(&vd, &wd, k)?.is_semisimple();
    let strong = strong_w_semisimplicity(&vk, &wk, k, seed)?.strongly;
    let strong_dual = strong_w_semisimplicity(&vd, &wd, k, seed)?.strongly;

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    let mut consistent = true;
    let mut count = 0;
    for _ in 0..samples {
        if vd.dim() == 0 {
            break;
        }
        let u = vd.spin(&[random_vector(vd.field(), vd.dim(), &mut rng)]);
        if u.dim() == 0 {
            continue;
        }
        // a random invariant subspace inside U
        let mut inner = vec![vd.field().zero(); vd.dim()];
        for row in u.basis_rows() {
            let c = crate::meataxe::random_scalar(vd.field(), &mut rng);
            for (i, x) in row.iter().enumerate() {
                inner[i] = &inner[i] + &(&c * x);
            }
        }
        let t = vd.spin(&[inner]);
        count += 1;
        // T° ⊇ U° and dim(T°/U°) = dim(U/T)
        let t_perp = t.annihilator();
        let u_perp = u.annihilator();
        if !t_perp.contains_space(&u_perp)
            || t_perp.dim() - u_perp.dim() != u.dim() - t.dim()
        {
            consistent = false;
        }
    }

    Ok(DualTransferReport {
        plain_matches: plain == plain_dual,
        strong_matches: strong == strong_dual,
        orthogonal_samples: count,
        orthogonal_dims_consistent: consistent,
    })
}

#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub class_rep: usize,
    pub forward_dim: usize,
    pub backward_dim: usize,
    /// the homothety scalar of β∘α when both intertwiner spaces are lines
    pub composite_scalar: Option<Scalar>,
    /// verdict through the explicit α/β maps, when decidable on this route
    pub component_verdict: Option<bool>,
    pub direct_verdict: bool,
    pub agree: bool,
}

#[derive(Clone, Debug)]
pub struct InducedSemisimplicityReport {
    pub components: Vec<ComponentReport>,
    pub direct_on_restriction: bool,
    pub all_components_agree: bool,
    pub restriction_matches_components: bool,
}

impl InducedSemisimplicityReport {
    pub fn w_semisimple(&self) -> bool {
        self.direct_on_restriction
    }

    pub fn all_consistent(&self) -> bool {
        self.all_components_agree && self.restriction_matches_components
    }
}

/// Semisimplicity of the induction of ϱ to the parent group, decided per
/// double coset: the component at g is semisimple exactly when the composite
/// of the canonical maps W → I(g) → W built from nonzero intertwiners is a
/// nonzero scalar. Each component verdict is cross-checked against the
/// direct three-condition decision, and their conjunction against the
/// direct verdict on the full restriction.
pub fn induced_semisimplicity_check(
    rho: &Representation,
    seed: u64,
) -> Result<InducedSemisimplicityReport, RepError> {
    let k = rho.domain().clone();
    let group = k.parent().clone();
    let whole = group.whole();
    let induced = rho.induce(&whole)?;
    let res = induced.restrict(&k);
    let direct_on_restriction = w_semisimplicity(&res, rho, &k)?.is_semisimple();

    let dcs = k.double_cosets();
    let mut components = Vec::new();
    let mut overall_components = true;
    let mut all_agree = true;
    for &g in dcs.representatives() {
        let conj = rho.conjugate_on_intersection(g)?;
        let (comp, cosets) = conj.induce_with_cosets(&k)?;
        let fwd = intertwiner_space(rho, g)?;
        let bwd = intertwiner_space(rho, group.inverse(g))?;
        let direct = w_semisimplicity(&comp, rho, &k)?.is_semisimple();

        let (composite_scalar, component_verdict) = match (fwd.dim(), bwd.dim()) {
            (0, 0) => (None, Some(true)),
            (0, _) | (_, 0) => (None, Some(false)),
            (1, 1) => {
                let w = rho.dim();
                let lambda_fwd = &fwd.basis[0];
                let lambda_bwd = &bwd.basis[0];
                let field = rho.field();
                let mut alpha = Matrix::zero(field, comp.dim(), w);
                let mut beta = Matrix::zero(field, w, comp.dim());
                for (i, &x) in cosets.iter().enumerate() {
                    let ab = lambda_fwd.mul(rho.action(x));
                    let bb = rho.action(group.inverse(x)).mul(lambda_bwd);
                    for a in 0..w {
                        for b in 0..w {
                            alpha.set(i * w + a, b, ab.get(a, b).clone());
                            beta.set(a, i * w + b, bb.get(a, b).clone());
                        }
                    }
                }
                assert!(
                    hom_space(rho, &comp, &k).contains(&alpha),
                    "α is equivariant"
                );
                assert!(
                    hom_space(&comp, rho, &k).contains(&beta),
                    "β is equivariant"
                );
                let composite = beta.mul(&alpha);
                let c = composite
                    .scalar_multiple_of_identity()
                    .expect("β∘α is an endomorphism of an absolutely irreducible module");
                let nonzero = !c.is_zero();
                (Some(c), Some(nonzero))
            }
            _ => (None, None),
        };
        let agree = component_verdict.map_or(true, |m| m == direct);
        all_agree &= agree;
        overall_components &= direct;
        components.push(ComponentReport {
            class_rep: g,
            forward_dim: fwd.dim(),
            backward_dim: bwd.dim(),
            composite_scalar,
            component_verdict,
            direct_verdict: direct,
            agree,
        });
    }
    let _ = seed;
    Ok(InducedSemisimplicityReport {
        components,
        direct_on_restriction,
        all_components_agree: all_agree,
        restriction_matches_components: overall_components == direct_on_restriction,
    })
}

#[derive(Clone, Debug)]
pub struct GramIntertwineReport {
    pub left_dim: usize,
    pub right_dim: usize,
    pub gram_rank: usize,
    pub gram_full_rank: bool,
    /// transpose(R_T) · Gram = Gram · L_T for every basis element T
    pub gram_intertwines: bool,
    /// for one-dimensional modules: the two action characters coincide, so
    /// the modules are abstractly isomorphic whether or not the pairing is
    /// degenerate
    pub one_dim_characters_match: Option<bool>,
}

/// The pairing intertwines the right action on Hom(W, V) with the left
/// action on Hom(V, W): this is the hermitian identity in matrix form, and
/// with an invertible Gram matrix it realises the module isomorphism.
pub fn gram_intertwines_actions(
    h: &HeckeAlgebra,
    v: &Representation,
) -> Result<GramIntertwineReport, RepError> {
    let gd = gram_data(v, h.rho(), h.k())?;
    let nl = gd.left_basis.len();
    let nr = gd.right_basis.len();
    let field = h.field();
    let mut intertwines = true;
    let mut characters_match = (nl == 1 && nr == 1).then_some(true);
    for t in h.basis() {
        let mut r_t = Matrix::zero(field, nl, nl);
        for (i, phi) in gd.left_basis.iter().enumerate() {
            let img = h.right_action(v, phi, &t);
            let coords = coords_in_matrix_basis(&gd.left_basis, &img)
                .expect("the right action preserves Hom(W, V)");
            for (j, c) in coords.into_iter().enumerate() {
                r_t.set(j, i, c);
            }
        }
        let mut l_t = Matrix::zero(field, nr, nr);
        for (j, psi) in gd.right_basis.iter().enumerate() {
            let img = h.left_action(v, &t, psi);
            let coords = coords_in_matrix_basis(&gd.right_basis, &img)
                .expect("the left action preserves Hom(V, W)");
            for (i, c) in coords.into_iter().enumerate() {
                l_t.set(i, j, c);
            }
        }
        if r_t.transpose().mul(&gd.gram) != gd.gram.mul(&l_t) {
            intertwines = false;
        }
        if let Some(ok) = characters_match {
            characters_match = Some(ok && r_t.get(0, 0) == l_t.get(0, 0));
        }
    }
    Ok(GramIntertwineReport {
        left_dim: nl,
        right_dim: nr,
        gram_rank: gd.rank(),
        gram_full_rank: gd.nondegenerate() && nl == nr && nl > 0,
        gram_intertwines: intertwines,
        one_dim_characters_match: characters_match,
    })
}

#[derive(Clone, Debug)]
pub struct QuasiProjectivityReport {
    pub surjection_samples: usize,
    pub all_surjective: bool,
    pub irreducible_quotient_classes: usize,
    pub h_modules_nonzero: bool,
    pub h_modules_pairwise_distinct: bool,
}

/// Sampled quasi-projectivity: for quotient maps f of the induced module Q,
/// composing with f carries End(Q) onto Hom(Q, Q/X); and distinct
/// irreducible quotients give nonzero, pairwise non-isomorphic right
/// modules over the intertwining algebra. Sampled, not proved.
pub fn quasi_projectivity_sampled(
    h: &HeckeAlgebra,
    q_rep: &Representation,
    seed: u64,
    random_spins: usize,
) -> Result<QuasiProjectivityReport, RepError> {
    let whole = q_rep.domain().clone();
    assert!(whole.is_whole_group());
    let ends = hom_space(q_rep, q_rep, &whole);
    let field = q_rep.field().clone();
    let pool = submodule_pool(q_rep, seed, random_spins);

    let mut all_surjective = true;
    let mut irreducibles: Vec<(Representation, Vec<Scalar>)> = Vec::new();
    let mut h_modules_nonzero = true;
    for x in &pool {
        let (vq, maps) = q_rep.quotient_representation(x)?;
        let target = hom_space(q_rep, &vq, &whole);
        // image of u ↦ f∘u inside Hom(Q, V)
        let composed: Vec<Vec<Scalar>> = ends
            .basis()
            .iter()
            .map(|u| {
                let m = maps.projection.mul(u);
                let mut flat = Vec::with_capacity(m.rows() * m.cols());
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        flat.push(m.get(i, j).clone());
                    }
                }
                flat
            })
            .collect();
        let image_rank = if composed.is_empty() {
            0
        } else {
            RowSpace::span_rows(&field, vq.dim() * q_rep.dim(), &composed).dim()
        };
        if image_rank != target.dim() {
            all_surjective = false;
        }

        if vq.dim() >= 1 && is_irreducible(&vq, seed)? {
            let homs = hom_space(h.rho(), &vq, h.k());
            if homs.dim() == 0 {
                // an irreducible quotient of the induced module always meets W
                h_modules_nonzero = false;
                continue;
            }
            if homs.dim() == 1 {
                let phi = &homs.basis()[0];
                let signature: Vec<Scalar> = h
                    .basis()
                    .iter()
                    .map(|t| {
                        let img = h.right_action(&vq, phi, t);
                        coords_in_matrix_basis(std::slice::from_ref(phi), &img)
                            .expect("action preserves the line")[0]
                            .clone()
                    })
                    .collect();
                if !irreducibles
                    .iter()
                    .any(|(r, _)| isomorphic_irreducibles(r, &vq))
                {
                    irreducibles.push((vq, signature));
                }
            }
        }
    }
    let mut pairwise_distinct = true;
    for i in 0..irreducibles.len() {
        for j in i + 1..irreducibles.len() {
            if irreducibles[i].1 == irreducibles[j].1 {
                pairwise_distinct = false;
            }
        }
    }
    Ok(QuasiProjectivityReport {
        surjection_samples: pool.len(),
        all_surjective,
        irreducible_quotient_classes: irreducibles.len(),
        h_modules_nonzero,
        h_modules_pairwise_distinct: pairwise_distinct,
    })
}

#[derive(Clone, Debug)]
pub struct NormalDescentReport {
    /// characteristic does not divide the order of the normal subgroup
    pub order_invertible: bool,
    /// the restriction of ϱ is a multiple of one absolutely irreducible η
    pub restriction_isotypic: bool,
    pub eta_dim: Option<usize>,
    /// the ϱ-socle and the η-socle of V coincide as subspaces
    pub socles_agree: bool,
    pub all_conditions: bool,
    pub map_rank: usize,
    pub socle_dim: usize,
    pub coquotient_dim: usize,
    /// socle → coquotient is an isomorphism (the conclusion under the
    /// three conditions)
    pub map_is_isomorphism: bool,
}

/// The descent conditions along a normal subgroup K₁ of K, and the
/// conclusion they force: the socle→coquotient map of V is an isomorphism.
pub fn normal_descent_conditions(
    v: &Representation,
    rho: &Representation,
    k1: &SubgroupHandle,
    seed: u64,
) -> Result<NormalDescentReport, RepError> {
    let k = rho.domain().clone();
    if !k1.is_normal_in(&k) {
        return Err(GroupError::NotNormal.into());
    }
    let char_ = rho.field().characteristic();
    let order_invertible = char_ == 0 || (k1.order() as u64) % char_ != 0;

    let restriction = rho.restrict(k1);
    let factors = composition_factors(&restriction, seed)?;
    let mut restriction_isotypic = factors.len() == 1;
    let mut eta_dim = None;
    let mut socles_agree = false;
    if let Some((eta, _)) = factors.first() {
        if restriction_isotypic {
            restriction_isotypic = is_absolutely_irreducible(eta, seed)?
                && isotypic_socle(&restriction, eta, k1).dim() == rho.dim();
            eta_dim = Some(eta.dim());
        }
        let socle_rho = isotypic_socle(v, rho, &k);
        let socle_eta = isotypic_socle(v, eta, k1);
        socles_agree = socle_rho == socle_eta;
    }

    let socle = isotypic_socle(v, rho, &k);
    let coq = isotypic_coquotient(v, rho, &k)?;
    let map = socle_to_coquotient_map(v, rho, &k)?;
    let rank = map.rank();
    Ok(NormalDescentReport {
        order_invertible,
        restriction_isotypic,
        eta_dim,
        socles_agree,
        all_conditions: order_invertible && restriction_isotypic && socles_agree,
        map_rank: rank,
        socle_dim: socle.dim(),
        coquotient_dim: coq.rep.dim(),
        map_is_isomorphism: rank == socle.dim() && rank == coq.rep.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::group::{GroupTable, DEFAULT_ORDER_CAP};
    use crate::sample::jordan_block;

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn direct_sum_of_copies_is_semisimple() {
        let g = GroupTable::symmetric(3);
        let q = Field::rationals();
        let t = g.permutation_index(&[1, 0, 2]).unwrap();
        let c = g.permutation_index(&[1, 2, 0]).unwrap();
        let m1 = Matrix::from_ints(&q, 1, 1, &[-1]);
        let id = Matrix::identity(&q, 1);
        let w = Representation::new(g.whole(), q.clone(), 1, vec![(t, m1), (c, id)]).unwrap();
        let v = w.direct_sum(&w);
        let verdict = w_semisimplicity(&v, &w, &g.whole()).unwrap();
        assert!(verdict.consistent());
        assert!(verdict.is_semisimple());
        assert_eq!(verdict.socle_dim, 2);
    }

    #[test]
    fn jordan_block_is_not_semisimple_but_consistent() {
        let z3 = GroupTable::cyclic(3);
        let f3 = f(3);
        let v = jordan_block(&z3, &f3, 2).unwrap();
        let w = Representation::trivial(&z3.whole(), &f3);
        let verdict = w_semisimplicity(&v, &w, &z3.whole()).unwrap();
        assert!(verdict.consistent());
        assert!(!verdict.is_semisimple());
        assert_eq!(verdict.socle_dim, 1);
        assert_eq!(verdict.coquotient_dim, 1);
        assert_eq!(verdict.map_rank, 0);
    }

    #[test]
    fn strong_semisimplicity_of_irreducible_not_isomorphic_to_w() {
        let g = GroupTable::symmetric(3);
        let q = Field::rationals();
        let t = g.permutation_index(&[1, 0, 2]).unwrap();
        let c = g.permutation_index(&[1, 2, 0]).unwrap();
        let m1 = Matrix::from_ints(&q, 1, 1, &[-1]);
        let id = Matrix::identity(&q, 1);
        let w = Representation::new(g.whole(), q.clone(), 1, vec![(t, m1), (c, id)]).unwrap();
        let v = Representation::trivial(&g.whole(), &q);
        let verdict = strong_w_semisimplicity(&v, &w, &g.whole(), 3).unwrap();
        assert!(verdict.strongly);
        assert_eq!(verdict.complement.dim(), 1);
    }

    #[test]
    fn extension_destroys_strong_semisimplicity() {
        // J_2(1) is an extension of the trivial character by itself; both
        // factors are strongly semisimple, the extension is not
        let z3 = GroupTable::cyclic(3);
        let f3 = f(3);
        let v = jordan_block(&z3, &f3, 2).unwrap();
        let w = Representation::trivial(&z3.whole(), &f3);
        let triv = Representation::trivial(&z3.whole(), &f3);
        assert!(strong_w_semisimplicity(&triv, &w, &z3.whole(), 3).unwrap().strongly);
        let verdict = strong_w_semisimplicity(&v, &w, &z3.whole(), 3).unwrap();
        assert!(!verdict.strongly);
    }

    #[test]
    fn heredity_on_a_semisimple_module() {
        let g = GroupTable::symmetric(3);
        let q = Field::rationals();
        let w = Representation::trivial(&g.whole(), &q);
        let v = Representation::regular(&g, &q);
        let report = heredity_check(&v, &w, &g.whole(), 5, 12).unwrap();
        assert!(report.base_surjective && report.base_injective && report.base_strong);
        assert!(report.all_hold(), "failures: {:?}", report.failures);
    }

    #[test]
    fn dual_transfer_on_jordan_block() {
        let z3 = GroupTable::cyclic(3);
        let f3 = f(3);
        let v = jordan_block(&z3, &f3, 2).unwrap();
        let w = Representation::trivial(&z3.whole(), &f3);
        let report = dual_transfer_check(&v, &w, &z3.whole(), 11, 8).unwrap();
        assert!(report.plain_matches);
        assert!(report.strong_matches);
        assert!(report.orthogonal_dims_consistent);
    }

    #[test]
    fn induced_semisimplicity_for_s3_a3_rational() {
        let g = GroupTable::symmetric(3);
        let q = Field::rationals();
        let c = g.permutation_index(&[1, 2, 0]).unwrap();
        let a3 = SubgroupHandle::generated_by(&g, &[c], DEFAULT_ORDER_CAP).unwrap();
        let rho = Representation::trivial(&a3, &q);
        let report = induced_semisimplicity_check(&rho, 13).unwrap();
        assert!(report.w_semisimple());
        assert!(report.all_consistent());
    }

    #[test]
    fn induced_semisimplicity_fails_for_transposition_subgroup_mod_2() {
        let g = GroupTable::symmetric(3);
        let f2 = f(2);
        let t = g.permutation_index(&[1, 0, 2]).unwrap();
        let k = SubgroupHandle::generated_by(&g, &[t], DEFAULT_ORDER_CAP).unwrap();
        let rho = Representation::trivial(&k, &f2);
        let report = induced_semisimplicity_check(&rho, 13).unwrap();
        assert!(!report.w_semisimple());
        assert!(report.all_consistent());
    }

    #[test]
    fn normal_descent_on_a3_with_trivial_k1() {
        let g = GroupTable::symmetric(3);
        let q = Field::rationals();
        let c = g.permutation_index(&[1, 2, 0]).unwrap();
        let a3 = SubgroupHandle::generated_by(&g, &[c], DEFAULT_ORDER_CAP).unwrap();
        let rho = Representation::trivial(&a3, &q);
        let v = rho.induce(&g.whole()).unwrap().restrict(&a3);
        let k1 = g.trivial_subgroup();
        let report = normal_descent_conditions(&v, &rho, &k1, 17).unwrap();
        assert!(report.order_invertible);
        assert!(report.restriction_isotypic);
        assert!(report.socles_agree);
        assert!(report.all_conditions);
        assert!(report.map_is_isomorphism);
    }

    #[test]
    fn normal_descent_rejects_non_normal_subgroup() {
        let g = GroupTable::symmetric(3);
        let f3 = f(3);
        let t = g.permutation_index(&[1, 0, 2]).unwrap();
        let k12 = SubgroupHandle::generated_by(&g, &[t], DEFAULT_ORDER_CAP).unwrap();
        let rho = Representation::trivial(&g.whole(), &f3);
        let v = Representation::regular(&g, &f3);
        assert!(matches!(
            normal_descent_conditions(&v, &rho, &k12, 1),
            Err(RepError::Group(GroupError::NotNormal))
        ));
    }
}
