//! Matrix representations of finite groups.
//!
//! A [`Representation`] stores invertible generator images only; the action
//! at an arbitrary element is reconstructed through a breadth-first word
//! table and memoised in a write-once per-element cache, so concurrent
//! readers always observe a single consistent value. On top of that this
//! module provides the structural operations the rest of the crate runs on:
//! contragredients, Hom spaces, spun submodules, sub/quotient actions with
//! explicit sections, compact induction, the restriction-of-induction
//! decomposition along double cosets, and isotypic socles and coquotients.

use std::collections::VecDeque;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{GroupError, RepError};
use crate::field::{Field, Scalar};
use crate::group::{GroupTable, SubgroupHandle};
use crate::matrix::{Matrix, RowSpace};

/// Above this much estimated work the construction-time homomorphism check
/// switches from exhaustive to a deterministic sample.
const FULL_VERIFY_WORK_CAP: u64 = 50_000_000;
const SAMPLED_VERIFY_PAIRS: usize = 1024;

#[derive(Clone, Copy)]
enum Word {
    Identity,
    /// element = gen * (element at `prev`)
    Step { prev: u32, gen: u32 },
}

struct RepInner {
    domain: SubgroupHandle,
    field: Field,
    dim: usize,
    gen_elems: Vec<u32>,
    gen_mats: Vec<Matrix>,
    words: Vec<Word>,
    cache: Vec<OnceLock<Matrix>>,
}

/// A finite group (or subgroup) acting by invertible matrices. Cheap to
/// clone; immutable apart from the write-once action cache.
#[derive(Clone)]
pub struct Representation(Arc<RepInner>);

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Representation(dim {} of group of order {} over {})",
            self.dim(),
            self.domain().order(),
            self.field()
        )
    }
}

impl Representation {
    /// Build a representation from generator images and verify that they
    /// define a homomorphism on the stated domain. Verification is
    /// exhaustive at desk scale and sampled above (see `FULL_VERIFY_WORK_CAP`).
    pub fn new(
        domain: SubgroupHandle,
        field: Field,
        dim: usize,
        generators: Vec<(usize, Matrix)>,
    ) -> Result<Representation, RepError> {
        let mut gen_elems = Vec::new();
        let mut gen_mats = Vec::new();
        for (g, m) in generators {
            if !domain.contains(g) {
                return Err(GroupError::NotAMember(g).into());
            }
            if m.rows() != dim || m.cols() != dim || m.field() != &field {
                return Err(RepError::NotAHomomorphism(
                    "generator image has the wrong shape or field".into(),
                ));
            }
            if g == domain.parent().identity() {
                if !m.is_identity() {
                    return Err(RepError::NotAHomomorphism(
                        "identity must act as the identity matrix".into(),
                    ));
                }
                continue;
            }
            gen_elems.push(g as u32);
            gen_mats.push(m);
        }
        if gen_elems.is_empty() && domain.order() > 1 {
            return Err(RepError::GensDontGenerate);
        }

        // breadth-first word table over the domain members
        let parent = domain.parent().clone();
        let n = domain.order();
        let mut words: Vec<Option<Word>> = vec![None; n];
        words[0] = Some(Word::Identity);
        let mut queue: VecDeque<usize> = VecDeque::from([0usize]);
        while let Some(vpos) = queue.pop_front() {
            let v = domain.members()[vpos] as usize;
            for (gi, &ge) in gen_elems.iter().enumerate() {
                let u = parent.mul(ge as usize, v);
                let upos = domain
                    .position_of(u)
                    .expect("subgroup is closed under multiplication");
                if words[upos].is_none() {
                    words[upos] = Some(Word::Step {
                        prev: vpos as u32,
                        gen: gi as u32,
                    });
                    queue.push_back(upos);
                }
            }
        }
        if words.iter().any(Option::is_none) {
            return Err(RepError::GensDontGenerate);
        }
        let words: Vec<Word> = words.into_iter().map(Option::unwrap).collect();

        let rep = Representation(Arc::new(RepInner {
            domain,
            field,
            dim,
            gen_elems,
            gen_mats,
            words,
            cache: (0..n).map(|_| OnceLock::new()).collect(),
        }));
        rep.verify()?;
        Ok(rep)
    }

    fn verify(&self) -> Result<(), RepError> {
        let inner = &self.0;
        let parent = inner.domain.parent();
        for (i, m) in inner.gen_mats.iter().enumerate() {
            let g = inner.gen_elems[i] as usize;
            let Some(minv) = m.inverse() else {
                return Err(RepError::NotAHomomorphism(format!(
                    "image of generator {} is singular",
                    parent.label(g)
                )));
            };
            if self.action(parent.inverse(g)) != &minv {
                return Err(RepError::NotAHomomorphism(format!(
                    "image of the inverse of {} is not the inverse image",
                    parent.label(g)
                )));
            }
        }
        let check_pair = |pos: usize, gi: usize| -> Result<(), RepError> {
            let u = inner.domain.members()[pos] as usize;
            let ge = inner.gen_elems[gi] as usize;
            let lhs = inner.gen_mats[gi].mul(self.action(u));
            if &lhs != self.action(parent.mul(ge, u)) {
                return Err(RepError::NotAHomomorphism(format!(
                    "action({} · {}) differs from action({}) · action({})",
                    parent.label(ge),
                    parent.label(u),
                    parent.label(ge),
                    parent.label(u)
                )));
            }
            Ok(())
        };
        let n = inner.domain.order();
        if inner.gen_elems.is_empty() {
            return Ok(());
        }
        let work = n as u64 * inner.gen_elems.len() as u64 * (inner.dim as u64).pow(3).max(1);
        if work <= FULL_VERIFY_WORK_CAP {
            for pos in 0..n {
                for gi in 0..inner.gen_elems.len() {
                    check_pair(pos, gi)?;
                }
            }
        } else {
            for step in 0..SAMPLED_VERIFY_PAIRS {
                let pos = (step * 2654435761) % n;
                let gi = step % inner.gen_elems.len();
                check_pair(pos, gi)?;
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &SubgroupHandle {
        &self.0.domain
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn generator_elements(&self) -> Vec<usize> {
        self.0.gen_elems.iter().map(|&g| g as usize).collect()
    }

    /// The acting matrix of a domain element, memoised write-once.
    pub fn action(&self, g: usize) -> &Matrix {
        let pos = self
            .0
            .domain
            .position_of(g)
            .expect("element outside the representation domain");
        if let Some(m) = self.0.cache[pos].get() {
            return m;
        }
        // walk down to a cached ancestor, then unwind multiplying forward
        let mut chain: Vec<(usize, u32)> = Vec::new();
        let mut cur = pos;
        loop {
            if self.0.cache[cur].get().is_some() {
                break;
            }
            match self.0.words[cur] {
                Word::Identity => {
                    let _ = self.0.cache[cur].set(Matrix::identity(&self.0.field, self.0.dim));
                    break;
                }
                Word::Step { prev, gen } => {
                    chain.push((cur, gen));
                    cur = prev as usize;
                }
            }
        }
        let mut below = cur;
        while let Some((p, gen)) = chain.pop() {
            let m = self.0.gen_mats[gen as usize].mul(self.0.cache[below].get().unwrap());
            let _ = self.0.cache[p].set(m);
            below = p;
        }
        self.0.cache[pos].get().unwrap()
    }

    /// Σ coeffs[pos] · action(member at pos): the image of a group-algebra
    /// element given by its coefficient vector over the domain members.
    pub fn algebra_action(&self, coeffs: &[Scalar]) -> Matrix {
        assert_eq!(coeffs.len(), self.0.domain.order());
        let mut acc = Matrix::zero(&self.0.field, self.0.dim, self.0.dim);
        for (pos, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let g = self.0.domain.members()[pos] as usize;
            acc = acc.add(&self.action(g).scale(c));
        }
        acc
    }

    /// True when both representations have the same domain and identical
    /// acting matrices (checked on a generating set, which determines all).
    pub fn actions_equal(&self, other: &Representation) -> bool {
        if self.domain() != other.domain() || self.dim() != other.dim() {
            return false;
        }
        let gens: Vec<usize> = self
            .generator_elements()
            .into_iter()
            .chain(other.generator_elements())
            .collect();
        if gens.is_empty() {
            return true;
        }
        gens.iter().all(|&g| self.action(g) == other.action(g))
    }

    /// The one-dimensional trivial representation.
    pub fn trivial(domain: &SubgroupHandle, field: &Field) -> Representation {
        let gens = domain
            .generators()
            .iter()
            .map(|&g| (g as usize, Matrix::identity(field, 1)))
            .collect();
        Representation::new(domain.clone(), field.clone(), 1, gens)
            .expect("trivial representation is a homomorphism")
    }

    /// A one-dimensional representation from scalar values on the canonical
    /// generators of the domain.
    pub fn character(
        domain: &SubgroupHandle,
        field: &Field,
        values: &[Scalar],
    ) -> Result<Representation, RepError> {
        let gens = domain.generators();
        assert_eq!(gens.len(), values.len(), "one value per canonical generator");
        let gen_list = gens
            .iter()
            .zip(values)
            .map(|(&g, v)| (g as usize, Matrix::from_fn(field, 1, 1, |_, _| v.clone())))
            .collect();
        Representation::new(domain.clone(), field.clone(), 1, gen_list)
    }

    /// The left regular representation of a whole group.
    pub fn regular(group: &GroupTable, field: &Field) -> Representation {
        Representation::regular_on(&group.whole(), field)
    }

    /// The left regular representation of a subgroup handle: basis indexed
    /// by member positions, `g · e_h = e_{gh}`.
    pub fn regular_on(k: &SubgroupHandle, field: &Field) -> Representation {
        let parent = k.parent();
        let n = k.order();
        let gens = k
            .generators()
            .iter()
            .map(|&g| {
                let mut m = Matrix::zero(field, n, n);
                for pos in 0..n {
                    let h = k.members()[pos] as usize;
                    let gh = parent.mul(g as usize, h);
                    m.set(k.position_of(gh).expect("closed"), pos, field.one());
                }
                (g as usize, m)
            })
            .collect();
        Representation::new(k.clone(), field.clone(), n, gens)
            .expect("regular representation is a homomorphism")
    }

    /// Restriction to a subgroup of the domain.
    pub fn restrict(&self, k: &SubgroupHandle) -> Representation {
        assert!(
            k.is_contained_in(self.domain()),
            "restriction target must sit inside the domain"
        );
        let gens = k
            .generators()
            .iter()
            .map(|&g| (g as usize, self.action(g as usize).clone()))
            .collect();
        Representation::new(k.clone(), self.0.field.clone(), self.0.dim, gens)
            .expect("restriction of a homomorphism")
    }

    /// The contragredient: `g` acts by the transpose of the inverse action.
    pub fn contragredient(&self) -> Representation {
        let gens = self
            .0
            .gen_elems
            .iter()
            .zip(&self.0.gen_mats)
            .map(|(&g, m)| {
                (
                    g as usize,
                    m.transpose()
                        .inverse()
                        .expect("action matrices are invertible"),
                )
            })
            .collect();
        Representation::new(
            self.0.domain.clone(),
            self.0.field.clone(),
            self.0.dim,
            gens,
        )
        .expect("contragredient of a homomorphism")
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        assert!(self.domain() == other.domain() && self.field() == other.field());
        let dim = self.dim() + other.dim();
        let gens = self
            .domain()
            .generators()
            .iter()
            .map(|&g| {
                let (a, b) = (self.action(g as usize), other.action(g as usize));
                let m = Matrix::from_fn(self.field(), dim, dim, |i, j| {
                    if i < a.rows() && j < a.cols() {
                        a.get(i, j).clone()
                    } else if i >= a.rows() && j >= a.cols() {
                        b.get(i - a.rows(), j - a.cols()).clone()
                    } else {
                        self.field().zero()
                    }
                });
                (g as usize, m)
            })
            .collect();
        Representation::new(self.domain().clone(), self.field().clone(), dim, gens)
            .expect("direct sum of homomorphisms")
    }

    /// Smallest invariant subspace containing the given vectors, by iterated
    /// application of the generator matrices.
    pub fn spin(&self, vectors: &[Vec<Scalar>]) -> RowSpace {
        let mut space = RowSpace::span_rows(self.field(), self.dim(), vectors);
        loop {
            let mut grew = false;
            for row in space.basis_rows() {
                for m in &self.0.gen_mats {
                    let img = m.apply(&row);
                    if !space.contains(&img) {
                        space = space.sum(&RowSpace::span_rows(self.field(), self.dim(), &[img]));
                        grew = true;
                    }
                }
            }
            if !grew {
                return space;
            }
        }
    }

    pub fn is_invariant(&self, space: &RowSpace) -> bool {
        space.basis_rows().iter().all(|row| {
            self.0
                .gen_mats
                .iter()
                .all(|m| space.contains(&m.apply(row)))
        })
    }

    /// The action restricted to an invariant subspace, in the coordinates of
    /// its reduced basis.
    pub fn sub_representation(&self, space: &RowSpace) -> Result<Representation, RepError> {
        if !self.is_invariant(space) {
            return Err(RepError::NotInvariant);
        }
        let k = space.dim();
        let basis_cols = space.basis().transpose(); // dim × k
        let mut gens = Vec::new();
        for (&g, m) in self.0.gen_elems.iter().zip(&self.0.gen_mats) {
            let image = m.mul(&basis_cols); // dim × k
            let coords = basis_cols
                .solve_matrix(&image)
                .expect("invariant subspace images lie in the span");
            gens.push((g as usize, coords));
        }
        Representation::new(self.0.domain.clone(), self.0.field.clone(), k, gens)
    }

    /// Quotient by an invariant subspace, together with the projection and
    /// the elimination-order section realising the quotient inside the
    /// ambient space.
    pub fn quotient_representation(
        &self,
        space: &RowSpace,
    ) -> Result<(Representation, QuotientMaps), RepError> {
        if !self.is_invariant(space) {
            return Err(RepError::NotInvariant);
        }
        let n = self.dim();
        let free = space.free_positions();
        let q = free.len();
        // projection: reduce a vector modulo the subspace, read free coords
        let mut projection = Matrix::zero(self.field(), q, n);
        for j in 0..n {
            let mut e = vec![self.field().zero(); n];
            e[j] = self.field().one();
            let reduced = space.reduce(&e);
            for (i, &fp) in free.iter().enumerate() {
                projection.set(i, j, reduced[fp].clone());
            }
        }
        let mut section = Matrix::zero(self.field(), n, q);
        for (i, &fp) in free.iter().enumerate() {
            section.set(fp, i, self.field().one());
        }
        let gens = self
            .0
            .gen_elems
            .iter()
            .zip(&self.0.gen_mats)
            .map(|(&g, m)| (g as usize, projection.mul(m).mul(&section)))
            .collect();
        let rep = Representation::new(self.0.domain.clone(), self.0.field.clone(), q, gens)?;
        Ok((
            rep,
            QuotientMaps {
                projection,
                section,
            },
        ))
    }

    /// Compact induction of `self` (a representation of H) to an overgroup
    /// K ⊇ H; returns the induced representation and the coset
    /// representatives indexing its block basis.
    pub fn induce_with_cosets(
        &self,
        to: &SubgroupHandle,
    ) -> Result<(Representation, Vec<usize>), RepError> {
        let h = self.domain();
        if !h.is_contained_in(to) {
            return Err(RepError::Group(GroupError::NotClosed(
                "induction target must contain the domain".into(),
            )));
        }
        let parent = h.parent();
        let reps = h.right_coset_reps_within(to);
        let w = self.dim();
        let dim = reps.len() * w;
        // coset index of every element of `to`
        let mut coset_of = vec![usize::MAX; parent.order()];
        for (i, &x) in reps.iter().enumerate() {
            for &m in h.members() {
                coset_of[parent.mul(m as usize, x)] = i;
            }
        }
        let mut gens = Vec::new();
        for &kk in to.generators() {
            let k = kk as usize;
            let kinv = parent.inverse(k);
            let mut mat = Matrix::zero(self.field(), dim, dim);
            for (i, &xi) in reps.iter().enumerate() {
                let j = coset_of[parent.mul(xi, kinv)];
                let xj = reps[j];
                // twist = action(x_j · k · x_i^{-1}), an element of H
                let t = parent.mul(parent.mul(xj, k), parent.inverse(xi));
                let twist = self.action(t);
                for a in 0..w {
                    for b in 0..w {
                        mat.set(j * w + a, i * w + b, twist.get(a, b).clone());
                    }
                }
            }
            gens.push((k, mat));
        }
        let rep = Representation::new(to.clone(), self.field().clone(), dim, gens)?;
        Ok((rep, reps))
    }

    pub fn induce(&self, to: &SubgroupHandle) -> Result<Representation, RepError> {
        Ok(self.induce_with_cosets(to)?.0)
    }

    /// The conjugate representation `x ↦ self(g x g^{-1})` on `K ∩ K^g`.
    pub fn conjugate_on_intersection(&self, g: usize) -> Result<Representation, RepError> {
        let k = self.domain();
        let parent = k.parent();
        let (_, inter) = k.conjugate_and_intersect(g);
        let ginv = parent.inverse(g);
        let gens = inter
            .generators()
            .iter()
            .map(|&x| {
                let conj = parent.mul(parent.mul(g, x as usize), ginv);
                (x as usize, self.action(conj).clone())
            })
            .collect();
        Representation::new(inter, self.field().clone(), self.dim(), gens)
    }

    /// The double-coset decomposition of the restriction to K of the
    /// induction of `self` to the whole parent group: one component
    /// `ind_{K∩K^g}^K(ϱ^g)` per double coset KgK.
    pub fn mackey_components(&self) -> Result<Vec<(usize, Representation)>, RepError> {
        let k = self.domain();
        let dcs = k.double_cosets();
        dcs.representatives()
            .iter()
            .map(|&g| {
                let conj = self.conjugate_on_intersection(g)?;
                Ok((g, conj.induce(k)?))
            })
            .collect()
    }
}

/// Projection and section matrices realising a quotient representation
/// inside its ambient space.
#[derive(Clone, Debug)]
pub struct QuotientMaps {
    /// quotient-dim × ambient-dim
    pub projection: Matrix,
    /// ambient-dim × quotient-dim; projection · section = identity
    pub section: Matrix,
}

/// An exact basis of the space of K-equivariant maps from `source` to
/// `target`.
#[derive(Clone)]
pub struct HomSpace {
    source: Representation,
    target: Representation,
    restricting: SubgroupHandle,
    basis: Vec<Matrix>,
}

impl fmt::Debug for HomSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HomSpace(dim {}: {}d -> {}d over K of order {})",
            self.dim(),
            self.source.dim(),
            self.target.dim(),
            self.restricting.order()
        )
    }
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn restricting_subgroup(&self) -> &SubgroupHandle {
        &self.restricting
    }

    /// Membership test: is `m` in the span of the basis?
    pub fn contains(&self, m: &Matrix) -> bool {
        if m.rows() != self.target.dim() || m.cols() != self.source.dim() {
            return false;
        }
        let field = m.field().clone();
        let vec_len = self.target.dim() * self.source.dim();
        let rows: Vec<Vec<Scalar>> = self.basis.iter().map(flatten).collect();
        let space = RowSpace::span_rows(&field, vec_len, &rows);
        space.contains(&flatten(m))
    }
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            v.push(m.get(i, j).clone());
        }
    }
    v
}

/// Exact basis of `{X : target(k)·X = X·source(k) for all k in K}`, computed
/// as the kernel of the stacked linear system over the generators of K.
pub fn hom_space(
    source: &Representation,
    target: &Representation,
    k: &SubgroupHandle,
) -> HomSpace {
    assert!(
        k.is_contained_in(source.domain()) && k.is_contained_in(target.domain()),
        "both representations must be defined on a group containing K"
    );
    assert!(source.field() == target.field(), "field mismatch");
    let field = source.field();
    let (t, s) = (target.dim(), source.dim());
    let unknowns = t * s;
    let gens = k.generators();
    let mut system = Matrix::zero(field, unknowns * gens.len(), unknowns);
    for (gi, &g) in gens.iter().enumerate() {
        let tm = target.action(g as usize);
        let sm = source.action(g as usize);
        let row0 = gi * unknowns;
        // equation (a,b): Σ_j T[a][j]·X[j][b] − Σ_i X[a][i]·S[i][b] = 0
        for a in 0..t {
            for b in 0..s {
                let r = row0 + a * s + b;
                for j in 0..t {
                    let v = system.get(r, j * s + b) + tm.get(a, j);
                    system.set(r, j * s + b, v);
                }
                for i in 0..s {
                    let v = system.get(r, a * s + i) - sm.get(i, b);
                    system.set(r, a * s + i, v);
                }
            }
        }
    }
    let basis = system
        .kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_fn(field, t, s, |i, j| v[i * s + j].clone()))
        .collect();
    HomSpace {
        source: source.clone(),
        target: target.clone(),
        restricting: k.clone(),
        basis,
    }
}

/// The largest subrepresentation of V that is a sum of copies of W over K:
/// the joint image of all K-maps W → V.
pub fn isotypic_socle(v: &Representation, w: &Representation, k: &SubgroupHandle) -> RowSpace {
    let homs = hom_space(w, v, k);
    let mut rows = Vec::new();
    for phi in homs.basis() {
        for j in 0..phi.cols() {
            rows.push(phi.col(j));
        }
    }
    if rows.is_empty() {
        RowSpace::zero(v.field(), v.dim())
    } else {
        RowSpace::span_rows(v.field(), v.dim(), &rows)
    }
}

/// The largest quotient of V that is a sum of copies of W over K, realised
/// as V / ∩ker(ψ) over all K-maps ψ: V → W.
pub struct IsotypicCoquotient {
    pub rep: Representation,
    pub kernel: RowSpace,
    pub maps: QuotientMaps,
}

pub fn isotypic_coquotient(
    v: &Representation,
    w: &Representation,
    k: &SubgroupHandle,
) -> Result<IsotypicCoquotient, RepError> {
    // the notion is about the K-action; restrict when V lives on a bigger group
    let vk = if v.domain() == k { v.clone() } else { v.restrict(k) };
    let homs = hom_space(&vk, w, k);
    let mut stacked = Matrix::zero(vk.field(), 0, vk.dim());
    for psi in homs.basis() {
        stacked = stacked.vstack(psi);
    }
    let kernel_cols = stacked.kernel_basis();
    let kernel = RowSpace::span_rows(vk.field(), vk.dim(), &kernel_cols);
    let (rep, maps) = vk.quotient_representation(&kernel)?;
    Ok(IsotypicCoquotient { rep, kernel, maps })
}

/// Matrix of the composite `socle ↪ V ↠ coquotient` in the computed bases
/// (coquotient coordinates × socle basis columns).
pub fn socle_to_coquotient_map(
    v: &Representation,
    w: &Representation,
    k: &SubgroupHandle,
) -> Result<Matrix, RepError> {
    let socle = isotypic_socle(v, w, k);
    let coq = isotypic_coquotient(v, w, k)?;
    Ok(coq.maps.projection.mul(&socle.basis().transpose()))
}

/// Induction-restriction adjunction instance:
/// dim Hom_G(ind ϱ, V) = dim Hom_K(ϱ, V|K).
pub fn frobenius_reciprocity_holds(
    rho: &Representation,
    v: &Representation,
    ambient: &SubgroupHandle,
) -> Result<bool, RepError> {
    let induced = rho.induce(ambient)?;
    let lhs = hom_space(&induced, v, ambient).dim();
    let restricted = v.restrict(rho.domain());
    let rhs = hom_space(rho, &restricted, rho.domain()).dim();
    Ok(lhs == rhs)
}

/// Transposing a basis of Hom_K(V, W) must give a basis of
/// Hom_K(W^∨, V^∨); checked dimension- and membership-wise.
pub fn transpose_bridge_holds(
    v: &Representation,
    w: &Representation,
    k: &SubgroupHandle,
) -> bool {
    let fwd = hom_space(v, w, k);
    let dual = hom_space(&w.contragredient(), &v.contragredient(), k);
    if fwd.dim() != dual.dim() {
        return false;
    }
    fwd.basis().iter().all(|psi| dual.contains(&psi.transpose()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP;

    fn s3() -> GroupTable {
        GroupTable::symmetric(3)
    }

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    /// The 2-dimensional representation of S_3: action on the sum-zero
    /// subspace of the natural permutation module.
    fn std2(group: &GroupTable, field: &Field) -> Representation {
        let t = group.permutation_index(&[1, 0, 2]).unwrap();
        let c = group.permutation_index(&[1, 2, 0]).unwrap();
        // basis u = e0 - e1, v = e1 - e2
        // (01): u -> -u, v -> u + v ; (012): u -> v, v -> -u-v
        let mt = Matrix::from_ints(field, 2, 2, &[-1, 1, 0, 1]);
        let mc = Matrix::from_ints(field, 2, 2, &[0, -1, 1, -1]);
        Representation::new(group.whole(), field.clone(), 2, vec![(t, mt), (c, mc)]).unwrap()
    }

    fn sign(group: &GroupTable, field: &Field) -> Representation {
        let t = group.permutation_index(&[1, 0, 2]).unwrap();
        let c = group.permutation_index(&[1, 2, 0]).unwrap();
        let m1 = Matrix::from_ints(field, 1, 1, &[-1]);
        let id = Matrix::identity(field, 1);
        Representation::new(group.whole(), field.clone(), 1, vec![(t, m1), (c, id)]).unwrap()
    }

    #[test]
    fn action_respects_multiplication_everywhere() {
        let g = s3();
        let q = Field::rationals();
        let r = std2(&g, &q);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(r.action(a).mul(r.action(b)), *r.action(g.mul(a, b)));
            }
        }
    }

    #[test]
    fn bad_generator_images_are_rejected() {
        let g = s3();
        let q = Field::rationals();
        let t = g.permutation_index(&[1, 0, 2]).unwrap();
        let c = g.permutation_index(&[1, 2, 0]).unwrap();
        // (01) has order 2 but is sent to a matrix of order 3
        let bad = Matrix::from_ints(&q, 2, 2, &[0, -1, 1, -1]);
        let ok = Matrix::from_ints(&q, 2, 2, &[0, -1, 1, -1]);
        let r = Representation::new(g.whole(), q.clone(), 2, vec![(t, bad), (c, ok)]);
        assert!(matches!(r, Err(RepError::NotAHomomorphism(_))));
    }

    #[test]
    fn contragredient_is_an_involution() {
        let g = s3();
        let r = std2(&g, &f(5));
        let back = r.contragredient().contragredient();
        for e in 0..6 {
            assert_eq!(r.action(e), back.action(e));
        }
        // one-dimensional characters dualise to their inverse
        let s = sign(&g, &f(5));
        let sd = s.contragredient();
        for e in 0..6 {
            let prod = sd.action(e).get(0, 0) * s.action(e).get(0, 0);
            assert!(prod.is_one());
        }
    }

    #[test]
    fn schur_dimensions_for_s3_over_f5() {
        let g = s3();
        let field = f(5);
        let r = std2(&g, &field);
        let s = sign(&g, &field);
        let whole = g.whole();
        assert_eq!(hom_space(&r, &r, &whole).dim(), 1);
        assert_eq!(hom_space(&s, &s, &whole).dim(), 1);
        assert_eq!(hom_space(&r, &s, &whole).dim(), 0);
        assert_eq!(hom_space(&s, &r, &whole).dim(), 0);
    }

    #[test]
    fn hom_space_over_trivial_subgroup_is_everything() {
        let g = s3();
        let field = f(5);
        let r = std2(&g, &field);
        let triv = g.trivial_subgroup();
        assert_eq!(hom_space(&r, &r, &triv).dim(), 4);
    }

    #[test]
    fn spin_of_fixed_vector_in_jordan_block() {
        let z3 = GroupTable::cyclic(3);
        let field = f(3);
        let one = z3.cyclic_index(1).unwrap();
        let j = Matrix::from_ints(&field, 2, 2, &[1, 1, 0, 1]);
        let rep = Representation::new(z3.whole(), field.clone(), 2, vec![(one, j)]).unwrap();
        let e1 = vec![field.one(), field.zero()];
        assert_eq!(rep.spin(&[e1]).dim(), 1);
        let e2 = vec![field.zero(), field.one()];
        assert_eq!(rep.spin(&[e2]).dim(), 2);
        let zero = vec![field.zero(), field.zero()];
        assert_eq!(rep.spin(&[zero]).dim(), 0);
    }

    #[test]
    fn induction_from_whole_group_is_identity() {
        let g = s3();
        let r = std2(&g, &Field::rationals());
        let ind = r.induce(&g.whole()).unwrap();
        assert!(ind.actions_equal(&r));
    }

    #[test]
    fn induction_from_trivial_subgroup_is_regular_sized() {
        let g = s3();
        let q = Field::rationals();
        let triv = Representation::trivial(&g.trivial_subgroup(), &q);
        let ind = triv.induce(&g.whole()).unwrap();
        assert_eq!(ind.dim(), 6);
        // permutation matrices: every row of every action has exactly one 1
        for e in 0..6 {
            let m = ind.action(e);
            for i in 0..6 {
                let ones = (0..6).filter(|&j| m.get(i, j).is_one()).count();
                assert_eq!(ones, 1);
            }
        }
    }

    #[test]
    fn induced_permutation_module_has_index_dimension() {
        let g = s3();
        let q = Field::rationals();
        let t = g.permutation_index(&[1, 0, 2]).unwrap();
        let k = SubgroupHandle::generated_by(&g, &[t], DEFAULT_ORDER_CAP).unwrap();
        let ind = Representation::trivial(&k, &q).induce(&g.whole()).unwrap();
        assert_eq!(ind.dim(), 3);
    }

    #[test]
    fn frobenius_reciprocity_on_s3_instances() {
        let g = s3();
        let q = Field::rationals();
        let c = g.permutation_index(&[1, 2, 0]).unwrap();
        let a3 = SubgroupHandle::generated_by(&g, &[c], DEFAULT_ORDER_CAP).unwrap();
        let rho = Representation::trivial(&a3, &q);
        for v in [std2(&g, &q), sign(&g, &q), Representation::regular(&g, &q)] {
            assert!(frobenius_reciprocity_holds(&rho, &v, &g.whole()).unwrap());
        }
    }

    #[test]
    fn mackey_components_for_normal_and_nonnormal_subgroups() {
        let g = s3();
        let q = Field::rationals();
        // normal: A_3; components are two characters
        let c = g.permutation_index(&[1, 2, 0]).unwrap();
        let a3 = SubgroupHandle::generated_by(&g, &[c], DEFAULT_ORDER_CAP).unwrap();
        let rho = Representation::trivial(&a3, &q);
        let comps = rho.mackey_components().unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|(_, r)| r.dim() == 1));
        // non-normal: ⟨(01)⟩; component dims 1 and 2
        let t = g.permutation_index(&[1, 0, 2]).unwrap();
        let k = SubgroupHandle::generated_by(&g, &[t], DEFAULT_ORDER_CAP).unwrap();
        let rho = Representation::trivial(&k, &q);
        let mut dims: Vec<usize> = rho
            .mackey_components()
            .unwrap()
            .iter()
            .map(|(_, r)| r.dim())
            .collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 2]);
    }

    #[test]
    fn socle_and_coquotient_of_direct_sum() {
        let g = s3();
        let q = Field::rationals();
        let w = sign(&g, &q);
        let v = w.direct_sum(&Representation::trivial(&g.whole(), &q));
        let whole = g.whole();
        let socle = isotypic_socle(&v, &w, &whole);
        assert_eq!(socle.dim(), 1);
        let coq = isotypic_coquotient(&v, &w, &whole).unwrap();
        assert_eq!(coq.rep.dim(), 1);
        // V = W: socle is everything, coquotient kernel is zero
        let socle_w = isotypic_socle(&w, &w, &whole);
        assert_eq!(socle_w.dim(), 1);
        let coq_w = isotypic_coquotient(&w, &w, &whole).unwrap();
        assert_eq!(coq_w.kernel.dim(), 0);
        assert_eq!(coq_w.rep.dim(), 1);
    }

    #[test]
    fn socle_to_coquotient_vanishes_on_jordan_block() {
        let z3 = GroupTable::cyclic(3);
        let field = f(3);
        let one = z3.cyclic_index(1).unwrap();
        let j = Matrix::from_ints(&field, 2, 2, &[1, 1, 0, 1]);
        let v = Representation::new(z3.whole(), field.clone(), 2, vec![(one, j)]).unwrap();
        let w = Representation::trivial(&z3.whole(), &field);
        let whole = z3.whole();
        let socle = isotypic_socle(&v, &w, &whole);
        let coq = isotypic_coquotient(&v, &w, &whole).unwrap();
        assert_eq!(socle.dim(), 1);
        assert_eq!(coq.rep.dim(), 1);
        let map = socle_to_coquotient_map(&v, &w, &whole).unwrap();
        assert_eq!(map.rank(), 0, "socle lies inside the coquotient kernel");
    }

    #[test]
    fn transpose_bridge_on_s3() {
        let g = s3();
        let q = Field::rationals();
        let w = std2(&g, &q);
        for v in [
            Representation::regular(&g, &q),
            w.direct_sum(&sign(&g, &q)),
        ] {
            assert!(transpose_bridge_holds(&v, &w, &g.whole()));
        }
    }

    #[test]
    fn quotient_maps_are_consistent() {
        let g = s3();
        let q = Field::rationals();
        let v = Representation::regular(&g, &q);
        let w = Representation::trivial(&g.whole(), &q);
        let coq = isotypic_coquotient(&v, &w, &g.whole()).unwrap();
        let pi_sigma = coq.maps.projection.mul(&coq.maps.section);
        assert!(pi_sigma.is_identity());
    }
}
