//! The intertwining algebra of a pair (G, K, ϱ).
//!
//! Elements are End(W)-valued functions on G, bi-equivariant under K and
//! supported on finitely many double cosets (for a finite G that is every
//! such function, so the space of all bi-equivariant functions and the
//! algebra coincide here). An element is stored by its values at the
//! minimal double-coset representatives only; evaluation anywhere else goes
//! through a cached breadth-first factorisation `g = h · rep · k` and the
//! bi-equivariance rule. Convolution sums run over a fixed deterministic
//! system of right-coset representatives, and every operation has a variant
//! taking an arbitrary system so that independence of the choice is testable.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{HeckeError, RepError};
use crate::field::{Field, Scalar};
use crate::group::{DoubleCosetSystem, GroupTable, SubgroupHandle};
use crate::matrix::Matrix;
use crate::rep::{hom_space, Representation};

/// Cap on the number of projective classes enumerated when checking
/// invertibility of single-class elements in a multi-dimensional
/// intertwiner space.
const PROJECTIVE_ENUM_CAP: u64 = 4096;

/// Basis of `{A : A·ϱ(x) = ϱ(g x g^{-1})·A for x in K ∩ K^g}` at one element.
#[derive(Clone)]
pub struct IntertwinerSpace {
    pub g: usize,
    pub subgroup: SubgroupHandle,
    pub basis: Vec<Matrix>,
}

impl IntertwinerSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

struct HeckeInner {
    group: GroupTable,
    k: SubgroupHandle,
    rho: Representation,
    cosets: Vec<usize>,
    dcs: DoubleCosetSystem,
    /// per element: (h, k) with element = h · class_rep · k
    factor: Vec<(u32, u32)>,
    ispaces: Vec<IntertwinerSpace>,
    /// linear basis index -> (class id, index inside the class basis)
    basis_index: Vec<(usize, usize)>,
}

/// The intertwining algebra H(G, K, W) of a representation ϱ of K ≤ G.
#[derive(Clone)]
pub struct HeckeAlgebra(Arc<HeckeInner>);

impl PartialEq for HeckeAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}
impl Eq for HeckeAlgebra {}

impl fmt::Debug for HeckeAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HeckeAlgebra(dim {}, {} double cosets, |G| = {}, |K| = {})",
            self.dim(),
            self.class_count(),
            self.group().order(),
            self.k().order()
        )
    }
}

/// A bi-equivariant function, stored by its values at the double-coset
/// representatives in its support.
#[derive(Clone)]
pub struct HeckeElement {
    algebra: HeckeAlgebra,
    values: BTreeMap<u32, Matrix>,
}

impl PartialEq for HeckeElement {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.values == other.values
    }
}
impl Eq for HeckeElement {}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support: Vec<String> = self
            .values
            .iter()
            .map(|(g, m)| format!("{} -> {}", self.algebra.group().label(*g as usize), m))
            .collect();
        write!(f, "HeckeElement{{{}}}", support.join(", "))
    }
}

impl HeckeElement {
    pub fn support(&self) -> Vec<usize> {
        self.values.keys().map(|&g| g as usize).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value_at_rep(&self, class_rep: usize) -> Option<&Matrix> {
        self.values.get(&(class_rep as u32))
    }

    pub fn is_single_class(&self) -> bool {
        self.values.len() == 1
    }

    pub fn scale(&self, c: &Scalar) -> HeckeElement {
        let values = self
            .values
            .iter()
            .map(|(&g, m)| (g, m.scale(c)))
            .filter(|(_, m)| !m.is_zero())
            .collect();
        HeckeElement {
            algebra: self.algebra.clone(),
            values,
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        assert!(self.algebra == other.algebra);
        let mut values = self.values.clone();
        for (&g, m) in &other.values {
            let entry = match values.remove(&g) {
                Some(existing) => existing.add(m),
                None => m.clone(),
            };
            if !entry.is_zero() {
                values.insert(g, entry);
            }
        }
        HeckeElement {
            algebra: self.algebra.clone(),
            values,
        }
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        self.add(&other.scale(&self.algebra.field().from_int(-1)))
    }
}

/// Coordinates of a matrix in the span of a basis of matrices, if it lies
/// in that span.
pub fn coords_in_matrix_basis(basis: &[Matrix], m: &Matrix) -> Option<Vec<Scalar>> {
    let field = m.field();
    if basis.is_empty() {
        return m.is_zero().then(Vec::new);
    }
    let rows = m.rows() * m.cols();
    let mut system = Matrix::zero(field, rows, basis.len());
    for (j, b) in basis.iter().enumerate() {
        for i in 0..m.rows() {
            for jj in 0..m.cols() {
                system.set(i * m.cols() + jj, j, b.get(i, jj).clone());
            }
        }
    }
    let mut rhs = Vec::with_capacity(rows);
    for i in 0..m.rows() {
        for jj in 0..m.cols() {
            rhs.push(m.get(i, jj).clone());
        }
    }
    system.solve(&rhs)
}

impl HeckeAlgebra {
    /// Build the intertwining algebra of ϱ inside the parent group of its
    /// domain.
    pub fn new(rho: &Representation) -> Result<HeckeAlgebra, RepError> {
        let k = rho.domain().clone();
        let group = k.parent().clone();
        let cosets = k.right_coset_reps();
        let dcs = k.double_cosets();

        // breadth-first factorisation g = h · rep · k over each double coset
        let mut factor = vec![(u32::MAX, u32::MAX); group.order()];
        let kgens = k.generators().to_vec();
        for &rep in dcs.representatives() {
            factor[rep] = (0, 0);
            let mut queue: VecDeque<usize> = VecDeque::from([rep]);
            while let Some(u) = queue.pop_front() {
                let (h, kk) = factor[u];
                for &gamma in &kgens {
                    let left = group.mul(gamma as usize, u);
                    if factor[left] == (u32::MAX, u32::MAX) {
                        factor[left] = (group.mul(gamma as usize, h as usize) as u32, kk);
                        queue.push_back(left);
                    }
                    let right = group.mul(u, gamma as usize);
                    if factor[right] == (u32::MAX, u32::MAX) {
                        factor[right] = (h, group.mul(kk as usize, gamma as usize) as u32);
                        queue.push_back(right);
                    }
                }
            }
        }
        debug_assert!(factor.iter().enumerate().all(|(g, &(h, kk))| {
            let rep = dcs.representatives()[dcs.class_of(g)];
            group.mul(h as usize, group.mul(rep, kk as usize)) == g
        }));

        let ispaces: Vec<IntertwinerSpace> = dcs
            .representatives()
            .iter()
            .map(|&g| intertwiner_space(rho, g))
            .collect::<Result<_, _>>()?;
        let mut basis_index = Vec::new();
        for (ci, sp) in ispaces.iter().enumerate() {
            for bi in 0..sp.dim() {
                basis_index.push((ci, bi));
            }
        }
        Ok(HeckeAlgebra(Arc::new(HeckeInner {
            group,
            k,
            rho: rho.clone(),
            cosets,
            dcs,
            factor,
            ispaces,
            basis_index,
        })))
    }

    /// The algebra of the contragredient representation on the same pair
    /// (G, K); the anti-involution maps into it.
    pub fn dual(&self) -> HeckeAlgebra {
        HeckeAlgebra::new(&self.0.rho.contragredient())
            .expect("dual context of a valid context is valid")
    }

    pub fn group(&self) -> &GroupTable {
        &self.0.group
    }

    pub fn k(&self) -> &SubgroupHandle {
        &self.0.k
    }

    pub fn rho(&self) -> &Representation {
        &self.0.rho
    }

    pub fn field(&self) -> &Field {
        self.0.rho.field()
    }

    fn w_dim(&self) -> usize {
        self.0.rho.dim()
    }

    pub fn class_count(&self) -> usize {
        self.0.dcs.class_count()
    }

    pub fn class_representatives(&self) -> &[usize] {
        self.0.dcs.representatives()
    }

    pub fn double_cosets(&self) -> &DoubleCosetSystem {
        &self.0.dcs
    }

    pub fn intertwiner_space_at(&self, g: usize) -> IntertwinerSpace {
        let c = self.0.dcs.class_of(g);
        if self.0.dcs.representatives()[c] == g {
            self.0.ispaces[c].clone()
        } else {
            intertwiner_space(&self.0.rho, g).expect("intertwiner space computation")
        }
    }

    pub fn class_intertwiner_dims(&self) -> Vec<usize> {
        self.0.ispaces.iter().map(|s| s.dim()).collect()
    }

    /// Linear dimension Σ_g dim IntertwinerSpace(g).
    pub fn dim(&self) -> usize {
        self.0.basis_index.len()
    }

    pub fn coset_reps(&self) -> &[usize] {
        &self.0.cosets
    }

    /// A seeded non-minimal system of right-coset representatives, for
    /// testing independence of the choice.
    pub fn permuted_coset_reps(&self, seed: u64) -> Vec<usize> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        self.0
            .cosets
            .iter()
            .map(|&r| {
                let members = self.0.k.members();
                let pick = members[rng.random_range(0..members.len())] as usize;
                self.0.group.mul(pick, r)
            })
            .collect()
    }

    pub fn zero(&self) -> HeckeElement {
        HeckeElement {
            algebra: self.clone(),
            values: BTreeMap::new(),
        }
    }

    /// The unit: supported on K with value id_W at the identity.
    pub fn unit(&self) -> HeckeElement {
        let mut values = BTreeMap::new();
        values.insert(0u32, Matrix::identity(self.field(), self.w_dim()));
        HeckeElement {
            algebra: self.clone(),
            values,
        }
    }

    /// Element supported on a single double coset, with the stated value at
    /// the class representative. The value must lie in the intertwiner
    /// space, otherwise the function would not be well defined.
    pub fn single_class_element(
        &self,
        class_rep: usize,
        value: Matrix,
    ) -> Result<HeckeElement, HeckeError> {
        let mut values = BTreeMap::new();
        if !value.is_zero() {
            values.insert(class_rep as u32, value);
        }
        self.element_from_class_values(values)
    }

    pub fn element_from_class_values(
        &self,
        values: BTreeMap<u32, Matrix>,
    ) -> Result<HeckeElement, HeckeError> {
        let mut clean = BTreeMap::new();
        for (g, m) in values {
            let c = self.0.dcs.class_of(g as usize);
            if self.0.dcs.representatives()[c] != g as usize {
                return Err(HeckeError::PreconditionViolated(format!(
                    "{} is not a double-coset representative",
                    self.0.group.label(g as usize)
                )));
            }
            if m.is_zero() {
                continue;
            }
            if coords_in_matrix_basis(&self.0.ispaces[c].basis, &m).is_none() {
                return Err(HeckeError::PreconditionViolated(format!(
                    "value at {} is outside the intertwiner space",
                    self.0.group.label(g as usize)
                )));
            }
            clean.insert(g, m);
        }
        Ok(HeckeElement {
            algebra: self.clone(),
            values: clean,
        })
    }

    /// The basis: for each double-coset representative and each basis matrix
    /// of its intertwiner space, the single-class element carrying it.
    pub fn basis(&self) -> Vec<HeckeElement> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    pub fn basis_element(&self, i: usize) -> HeckeElement {
        let (ci, bi) = self.0.basis_index[i];
        let rep = self.0.dcs.representatives()[ci];
        let mut values = BTreeMap::new();
        values.insert(rep as u32, self.0.ispaces[ci].basis[bi].clone());
        HeckeElement {
            algebra: self.clone(),
            values,
        }
    }

    /// Value of an element at an arbitrary group element, reconstructed via
    /// the factorisation `g = h · rep · k` and bi-equivariance.
    pub fn evaluate(&self, t: &HeckeElement, g: usize) -> Matrix {
        assert!(t.algebra == *self, "element from a different algebra");
        let c = self.0.dcs.class_of(g);
        let rep = self.0.dcs.representatives()[c];
        match t.values.get(&(rep as u32)) {
            None => Matrix::zero(self.field(), self.w_dim(), self.w_dim()),
            Some(val) => {
                let (h, kk) = self.0.factor[g];
                self.0
                    .rho
                    .action(h as usize)
                    .mul(val)
                    .mul(self.0.rho.action(kk as usize))
            }
        }
    }

    /// Coordinates in the canonical basis.
    pub fn coordinates(&self, t: &HeckeElement) -> Vec<Scalar> {
        assert!(t.algebra == *self);
        let mut out = Vec::with_capacity(self.dim());
        for (ci, sp) in self.0.ispaces.iter().enumerate() {
            let rep = self.0.dcs.representatives()[ci];
            match t.values.get(&(rep as u32)) {
                None => out.extend(std::iter::repeat_n(self.field().zero(), sp.dim())),
                Some(m) => {
                    let coords = coords_in_matrix_basis(&sp.basis, m)
                        .expect("element values lie in the intertwiner spaces");
                    out.extend(coords);
                }
            }
        }
        out
    }

    pub fn from_coordinates(&self, coords: &[Scalar]) -> HeckeElement {
        assert_eq!(coords.len(), self.dim());
        let mut values: BTreeMap<u32, Matrix> = BTreeMap::new();
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (ci, bi) = self.0.basis_index[i];
            let rep = self.0.dcs.representatives()[ci] as u32;
            let add = self.0.ispaces[ci].basis[bi].scale(c);
            let entry = match values.remove(&rep) {
                Some(existing) => existing.add(&add),
                None => add,
            };
            values.insert(rep, entry);
        }
        values.retain(|_, m| !m.is_zero());
        HeckeElement {
            algebra: self.clone(),
            values,
        }
    }

    /// `(t * s)(g)` for a single g, over an explicit coset system.
    pub fn convolution_value_with(
        &self,
        t: &HeckeElement,
        s: &HeckeElement,
        g: usize,
        cosets: &[usize],
    ) -> Matrix {
        let mut acc = Matrix::zero(self.field(), self.w_dim(), self.w_dim());
        for &h in cosets {
            let left = self.evaluate(t, self.0.group.mul(g, self.0.group.inverse(h)));
            if left.is_zero() {
                continue;
            }
            acc = acc.add(&left.mul(&self.evaluate(s, h)));
        }
        acc
    }

    pub fn convolution_value(&self, t: &HeckeElement, s: &HeckeElement, g: usize) -> Matrix {
        self.convolution_value_with(t, s, g, &self.0.cosets)
    }

    pub fn convolve_with(
        &self,
        t: &HeckeElement,
        s: &HeckeElement,
        cosets: &[usize],
    ) -> HeckeElement {
        let mut values = BTreeMap::new();
        for (ci, &rep) in self.0.dcs.representatives().iter().enumerate() {
            let v = self.convolution_value_with(t, s, rep, cosets);
            if v.is_zero() {
                continue;
            }
            assert!(
                coords_in_matrix_basis(&self.0.ispaces[ci].basis, &v).is_some(),
                "convolution value escaped the intertwiner space at {}",
                self.0.group.label(rep)
            );
            values.insert(rep as u32, v);
        }
        HeckeElement {
            algebra: self.clone(),
            values,
        }
    }

    pub fn convolve(&self, t: &HeckeElement, s: &HeckeElement) -> HeckeElement {
        self.convolve_with(t, s, &self.0.cosets)
    }

    /// The algebra anti-involution `T ↦ (g ↦ transpose(T(g^{-1})))` into the
    /// contragredient context.
    pub fn anti_involution(&self, dual: &HeckeAlgebra, t: &HeckeElement) -> HeckeElement {
        assert!(t.algebra == *self);
        assert!(
            dual.k() == self.k() && dual.group() == self.group(),
            "dual algebra must live on the same pair (G, K)"
        );
        let mut values = BTreeMap::new();
        for &rep in dual.0.dcs.representatives() {
            let v = self.evaluate(t, self.0.group.inverse(rep)).transpose();
            if !v.is_zero() {
                values.insert(rep as u32, v);
            }
        }
        dual.element_from_class_values(values)
            .expect("anti-involution lands in the dual algebra")
    }

    /// Right module action `φT = Σ_{K\G} π(g^{-1}) ∘ φ ∘ T(g)` on Hom_K(W, V).
    pub fn right_action_with(
        &self,
        v: &Representation,
        phi: &Matrix,
        t: &HeckeElement,
        cosets: &[usize],
    ) -> Matrix {
        assert!(v.domain().is_whole_group(), "V must be a representation of G");
        let mut acc = Matrix::zero(self.field(), v.dim(), self.w_dim());
        for &g in cosets {
            let tg = self.evaluate(t, g);
            if tg.is_zero() {
                continue;
            }
            acc = acc.add(&v.action(self.0.group.inverse(g)).mul(phi).mul(&tg));
        }
        self.assert_left_equivariant(v, &acc);
        acc
    }

    pub fn right_action(&self, v: &Representation, phi: &Matrix, t: &HeckeElement) -> Matrix {
        self.right_action_with(v, phi, t, &self.0.cosets)
    }

    /// Left module action `Tψ = Σ_{K\G} T(g^{-1}) ∘ ψ ∘ π(g)` on Hom_K(V, W).
    pub fn left_action_with(
        &self,
        v: &Representation,
        t: &HeckeElement,
        psi: &Matrix,
        cosets: &[usize],
    ) -> Matrix {
        assert!(v.domain().is_whole_group(), "V must be a representation of G");
        let mut acc = Matrix::zero(self.field(), self.w_dim(), v.dim());
        for &g in cosets {
            let tg = self.evaluate(t, self.0.group.inverse(g));
            if tg.is_zero() {
                continue;
            }
            acc = acc.add(&tg.mul(psi).mul(v.action(g)));
        }
        self.assert_right_equivariant(v, &acc);
        acc
    }

    pub fn left_action(&self, v: &Representation, t: &HeckeElement, psi: &Matrix) -> Matrix {
        self.left_action_with(v, t, psi, &self.0.cosets)
    }

    fn assert_left_equivariant(&self, v: &Representation, phi: &Matrix) {
        for &k in self.0.k.generators() {
            let lhs = v.action(k as usize).mul(phi);
            let rhs = phi.mul(self.0.rho.action(k as usize));
            assert_eq!(lhs, rhs, "module action left the Hom space");
        }
    }

    fn assert_right_equivariant(&self, v: &Representation, psi: &Matrix) {
        for &k in self.0.k.generators() {
            let lhs = self.0.rho.action(k as usize).mul(psi);
            let rhs = psi.mul(v.action(k as usize));
            assert_eq!(lhs, rhs, "module action left the Hom space");
        }
    }

    /// The operator `E(φ, ψ, g) = ψ ∘ π(g) ∘ φ`, which intertwines ϱ with
    /// its g-conjugate; membership in the intertwiner space is asserted.
    pub fn intertwining_operator(
        &self,
        v: &Representation,
        phi: &Matrix,
        psi: &Matrix,
        g: usize,
    ) -> Matrix {
        let e = psi.mul(v.action(g)).mul(phi);
        let sp = self.intertwiner_space_at(g);
        assert!(
            coords_in_matrix_basis(&sp.basis, &e).is_some(),
            "ψ∘π(g)∘φ escaped the intertwiner space at {}",
            self.0.group.label(g)
        );
        e
    }

    /// The full bi-equivariant function `g ↦ ψ ∘ π(g) ∘ φ` as an element
    /// (its restriction to each double coset lies in the algebra).
    pub fn full_intertwining_element(
        &self,
        v: &Representation,
        phi: &Matrix,
        psi: &Matrix,
    ) -> HeckeElement {
        let mut values = BTreeMap::new();
        for &rep in self.0.dcs.representatives() {
            let e = self.intertwining_operator(v, phi, psi, rep);
            if !e.is_zero() {
                values.insert(rep as u32, e);
            }
        }
        HeckeElement {
            algebra: self.clone(),
            values,
        }
    }

    /// Exact two-sided inverse in basis coordinates, verified by convolution.
    pub fn invert(&self, t: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        let n = self.dim();
        let unit = self.unit();
        let unit_coords = self.coordinates(&unit);
        let mut right_mul = Matrix::zero(self.field(), n, n);
        let mut left_mul = Matrix::zero(self.field(), n, n);
        for i in 0..n {
            let e = self.basis_element(i);
            let ri = self.coordinates(&self.convolve(&e, t));
            let li = self.coordinates(&self.convolve(t, &e));
            for j in 0..n {
                right_mul.set(j, i, ri[j].clone());
                left_mul.set(j, i, li[j].clone());
            }
        }
        let x = right_mul
            .solve(&unit_coords)
            .ok_or(HeckeError::NotInvertible)?;
        let y = left_mul
            .solve(&unit_coords)
            .ok_or(HeckeError::NotInvertible)?;
        let left_inverse = self.from_coordinates(&x);
        let right_inverse = self.from_coordinates(&y);
        if self.convolve(&left_inverse, t) != unit
            || self.convolve(t, &right_inverse) != unit
            || left_inverse != right_inverse
        {
            return Err(HeckeError::NotInvertible);
        }
        Ok(left_inverse)
    }

    /// First hypothesis of the single-class machinery: every intertwiner
    /// space is at most one-dimensional.
    pub fn multiplicity_free(&self) -> MultiplicityFreeResult {
        for (ci, sp) in self.0.ispaces.iter().enumerate() {
            if sp.dim() > 1 {
                return MultiplicityFreeResult {
                    holds: false,
                    witness: Some(self.0.dcs.representatives()[ci]),
                    dims: self.class_intertwiner_dims(),
                };
            }
        }
        MultiplicityFreeResult {
            holds: true,
            witness: None,
            dims: self.class_intertwiner_dims(),
        }
    }

    /// Second hypothesis: every nonzero element supported on a single double
    /// coset is invertible. One-dimensional spaces need only their basis
    /// element checked; multi-dimensional ones are enumerated projectively
    /// over finite fields up to a cap.
    pub fn single_class_invertibility(&self) -> SingleClassInvertibility {
        let mut fully_checked = true;
        let mut unchecked_bound: Option<u64> = None;
        let mut checked = 0usize;
        for (ci, sp) in self.0.ispaces.iter().enumerate() {
            let rep = self.0.dcs.representatives()[ci];
            let d = sp.dim();
            if d == 0 {
                continue;
            }
            if d == 1 {
                checked += 1;
                if self.invert(&self.basis_element_at(ci, 0)).is_err() {
                    return SingleClassInvertibility::Fails {
                        class_rep: rep,
                        coefficients: vec![self.field().one()],
                    };
                }
                continue;
            }
            match self.field().order() {
                Some(q) => {
                    let count = (q.pow(d as u32) - 1) / (q - 1);
                    if count > PROJECTIVE_ENUM_CAP {
                        fully_checked = false;
                        unchecked_bound = Some(count);
                        for bi in 0..d {
                            checked += 1;
                            if self.invert(&self.basis_element_at(ci, bi)).is_err() {
                                let mut coeffs = vec![self.field().zero(); d];
                                coeffs[bi] = self.field().one();
                                return SingleClassInvertibility::Fails {
                                    class_rep: rep,
                                    coefficients: coeffs,
                                };
                            }
                        }
                        continue;
                    }
                    // projective classes: first nonzero coordinate is one
                    for lead in 0..d {
                        let tail = d - lead - 1;
                        for code in 0..q.pow(tail as u32) {
                            let mut coeffs = vec![self.field().zero(); d];
                            coeffs[lead] = self.field().one();
                            let mut c = code;
                            for t in 0..tail {
                                coeffs[lead + 1 + t] = self.field().from_code(c % q);
                                c /= q;
                            }
                            let mut value = Matrix::zero(self.field(), self.w_dim(), self.w_dim());
                            for (bi, coef) in coeffs.iter().enumerate() {
                                value = value.add(&sp.basis[bi].scale(coef));
                            }
                            checked += 1;
                            let elem = HeckeElement {
                                algebra: self.clone(),
                                values: BTreeMap::from([(rep as u32, value)]),
                            };
                            if self.invert(&elem).is_err() {
                                return SingleClassInvertibility::Fails {
                                    class_rep: rep,
                                    coefficients: coeffs,
                                };
                            }
                        }
                    }
                }
                None => {
                    // infinitely many scalars: check the basis directions only
                    fully_checked = false;
                    for bi in 0..d {
                        checked += 1;
                        if self.invert(&self.basis_element_at(ci, bi)).is_err() {
                            let mut coeffs = vec![self.field().zero(); d];
                            coeffs[bi] = self.field().one();
                            return SingleClassInvertibility::Fails {
                                class_rep: rep,
                                coefficients: coeffs,
                            };
                        }
                    }
                }
            }
        }
        if fully_checked {
            SingleClassInvertibility::Holds { checked }
        } else {
            SingleClassInvertibility::PartiallyChecked {
                checked,
                bound: unchecked_bound,
            }
        }
    }

    fn basis_element_at(&self, ci: usize, bi: usize) -> HeckeElement {
        let rep = self.0.dcs.representatives()[ci];
        HeckeElement {
            algebra: self.clone(),
            values: BTreeMap::from([(rep as u32, self.0.ispaces[ci].basis[bi].clone())]),
        }
    }

    /// For a single-class T and bi-equivariant f, f' agreeing at the inverse
    /// of the supporting representative: `f*T(1) = f'*T(1)` and
    /// `T*f(1) = T*f'(1)`.
    pub fn single_class_evaluation_agrees(
        &self,
        t: &HeckeElement,
        f: &HeckeElement,
        fp: &HeckeElement,
    ) -> Result<bool, HeckeError> {
        if !t.is_single_class() {
            return Err(HeckeError::PreconditionViolated(
                "T must be supported on a single double coset".into(),
            ));
        }
        let g = t.support()[0];
        let ginv = self.0.group.inverse(g);
        if self.evaluate(f, ginv) != self.evaluate(fp, ginv) {
            return Err(HeckeError::PreconditionViolated(
                "f and f' must agree at the inverse of the supporting representative".into(),
            ));
        }
        let e = self.0.group.identity();
        Ok(self.convolution_value(f, t, e) == self.convolution_value(fp, t, e)
            && self.convolution_value(t, f, e) == self.convolution_value(t, fp, e))
    }

    /// Diagnostic for the weaker substitute of the invertibility hypothesis:
    /// look for f with f(g^{-1}) ≠ 0 and f*T(1) = T*f(1), by linear solve.
    pub fn weak_commutation_witness(&self, t: &HeckeElement) -> Option<HeckeElement> {
        assert!(t.is_single_class());
        let g = t.support()[0];
        let ginv = self.0.group.inverse(g);
        let n = self.dim();
        let w = self.w_dim();
        let e = self.0.group.identity();
        let mut system = Matrix::zero(self.field(), w * w, n);
        for i in 0..n {
            let ei = self.basis_element(i);
            let diff = self
                .convolution_value(&ei, t, e)
                .sub(&self.convolution_value(t, &ei, e));
            for a in 0..w {
                for b in 0..w {
                    system.set(a * w + b, i, diff.get(a, b).clone());
                }
            }
        }
        for coords in system.kernel_basis() {
            let f = self.from_coordinates(&coords);
            if !self.evaluate(&f, ginv).is_zero() {
                return Some(f);
            }
        }
        None
    }
}

#[derive(Clone, Debug)]
pub struct MultiplicityFreeResult {
    pub holds: bool,
    pub witness: Option<usize>,
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug)]
pub enum SingleClassInvertibility {
    Holds { checked: usize },
    Fails { class_rep: usize, coefficients: Vec<Scalar> },
    PartiallyChecked { checked: usize, bound: Option<u64> },
}

impl SingleClassInvertibility {
    pub fn holds(&self) -> bool {
        matches!(self, SingleClassInvertibility::Holds { .. })
    }

    pub fn failed(&self) -> bool {
        matches!(self, SingleClassInvertibility::Fails { .. })
    }
}

/// Basis of the space of matrices intertwining ϱ with its g-conjugate over
/// K ∩ K^g.
pub fn intertwiner_space(rho: &Representation, g: usize) -> Result<IntertwinerSpace, RepError> {
    let conj = rho.conjugate_on_intersection(g)?;
    let subgroup = conj.domain().clone();
    let homs = hom_space(rho, &conj, &subgroup);
    Ok(IntertwinerSpace {
        g,
        subgroup,
        basis: homs.basis().to_vec(),
    })
}

/// The unique scalar c with `ψ ∘ φ = c · id_W`; `NotScalar` when the
/// composite is not a homothety (which refutes absolute irreducibility).
pub fn pairing_scalar(phi: &Matrix, psi: &Matrix) -> Result<Scalar, RepError> {
    psi.mul(phi)
        .scalar_multiple_of_identity()
        .ok_or(RepError::NotScalar)
}

/// Bases of both Hom spaces together with the matrix of the composition
/// pairing.
pub struct GramData {
    /// basis of Hom_K(W, V)
    pub left_basis: Vec<Matrix>,
    /// basis of Hom_K(V, W)
    pub right_basis: Vec<Matrix>,
    /// gram[i][j] · id_W = right[j] ∘ left[i]
    pub gram: Matrix,
}

impl GramData {
    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    /// Non-degenerate as a pairing: square and of full rank.
    pub fn nondegenerate(&self) -> bool {
        let r = self.gram.rank();
        r == self.left_basis.len() && r == self.right_basis.len()
    }
}

pub fn gram_data(
    v: &Representation,
    w: &Representation,
    k: &SubgroupHandle,
) -> Result<GramData, RepError> {
    let left = hom_space(w, v, k);
    let right = hom_space(v, w, k);
    let mut gram = Matrix::zero(v.field(), left.dim(), right.dim());
    for (i, phi) in left.basis().iter().enumerate() {
        for (j, psi) in right.basis().iter().enumerate() {
            gram.set(i, j, pairing_scalar(phi, psi)?);
        }
    }
    Ok(GramData {
        left_basis: left.basis().to_vec(),
        right_basis: right.basis().to_vec(),
        gram,
    })
}

impl HeckeAlgebra {
    /// `⟨φT, ψ⟩ − ⟨φ, Tψ⟩`, computed through the two homothety scalars;
    /// zero means the pairing is hermitian for this triple.
    pub fn hermitian_defect(
        &self,
        v: &Representation,
        phi: &Matrix,
        psi: &Matrix,
        t: &HeckeElement,
    ) -> Result<Scalar, RepError> {
        let phi_t = self.right_action(v, phi, t);
        let t_psi = self.left_action(v, t, psi);
        let a = pairing_scalar(&phi_t, psi)?;
        let b = pairing_scalar(phi, &t_psi)?;
        Ok(&a - &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP;

    fn s3_a3_rational() -> (GroupTable, HeckeAlgebra, Representation) {
        let g = GroupTable::symmetric(3);
        let q = Field::rationals();
        let c = g.permutation_index(&[1, 2, 0]).unwrap();
        let a3 = SubgroupHandle::generated_by(&g, &[c], DEFAULT_ORDER_CAP).unwrap();
        let rho = Representation::trivial(&a3, &q);
        let h = HeckeAlgebra::new(&rho).unwrap();
        let v = rho.induce(&g.whole()).unwrap();
        (g, h, v)
    }

    #[test]
    fn dimension_of_s3_a3_algebra_is_two() {
        let (_, h, _) = s3_a3_rational();
        assert_eq!(h.class_count(), 2);
        assert_eq!(h.dim(), 2);
    }

    #[test]
    fn group_algebra_case_has_group_order_dimension() {
        let g = GroupTable::cyclic(3);
        let q = Field::rationals();
        let rho = Representation::trivial(&g.trivial_subgroup(), &q);
        let h = HeckeAlgebra::new(&rho).unwrap();
        assert_eq!(h.dim(), 3);
        // convolution of basis indicators mirrors group multiplication
        for a in 0..3usize {
            for b in 0..3usize {
                let ta = h.single_class_element(a, Matrix::identity(&q, 1)).unwrap();
                let tb = h.single_class_element(b, Matrix::identity(&q, 1)).unwrap();
                let prod = h.convolve(&ta, &tb);
                assert_eq!(prod.support(), vec![g.mul(a, b)]);
            }
        }
    }

    #[test]
    fn whole_group_algebra_is_one_dimensional() {
        let g = GroupTable::symmetric(3);
        let f5 = Field::prime(5).unwrap();
        let t = g.permutation_index(&[1, 0, 2]).unwrap();
        let c = g.permutation_index(&[1, 2, 0]).unwrap();
        let mt = Matrix::from_ints(&f5, 2, 2, &[-1, 1, 0, 1]);
        let mc = Matrix::from_ints(&f5, 2, 2, &[0, -1, 1, -1]);
        let rho = Representation::new(g.whole(), f5, 2, vec![(t, mt), (c, mc)]).unwrap();
        let h = HeckeAlgebra::new(&rho).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(h.multiplicity_free().holds);
    }

    #[test]
    fn unit_is_a_two_sided_identity() {
        let (_, h, _) = s3_a3_rational();
        let unit = h.unit();
        for b in h.basis() {
            assert_eq!(h.convolve(&unit, &b), b);
            assert_eq!(h.convolve(&b, &unit), b);
        }
    }

    #[test]
    fn nontrivial_class_indicator_is_self_inverse() {
        let (_, h, _) = s3_a3_rational();
        let rep = h.class_representatives()[1];
        let t = h
            .single_class_element(rep, Matrix::identity(h.field(), 1))
            .unwrap();
        let sq = h.convolve(&t, &t);
        assert_eq!(sq, h.unit());
        let inv = h.invert(&t).unwrap();
        assert_eq!(inv, t);
    }

    #[test]
    fn convolution_is_associative_on_basis_triples() {
        let (_, h, _) = s3_a3_rational();
        let basis = h.basis();
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    let left = h.convolve(&h.convolve(a, b), c);
                    let right = h.convolve(a, &h.convolve(b, c));
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn convolution_is_independent_of_the_coset_system() {
        let (_, h, _) = s3_a3_rational();
        let basis = h.basis();
        for seed in [1u64, 2, 3] {
            let alt = h.permuted_coset_reps(seed);
            for a in &basis {
                for b in &basis {
                    assert_eq!(h.convolve(a, b), h.convolve_with(a, b, &alt));
                }
            }
        }
    }

    #[test]
    fn anti_involution_reverses_products_and_is_involutive() {
        let (_, h, _) = s3_a3_rational();
        let dual = h.dual();
        let basis = h.basis();
        for a in &basis {
            for b in &basis {
                let lhs = h.anti_involution(&dual, &h.convolve(a, b));
                let rhs = dual.convolve(&h.anti_involution(&dual, b), &h.anti_involution(&dual, a));
                assert_eq!(lhs, rhs);
            }
            // double application is the identity under the canonical
            // identification of the bidual with the original space
            let back = dual.anti_involution(&h, &h.anti_involution(&dual, a));
            assert_eq!(&back, a);
        }
        assert_eq!(h.anti_involution(&dual, &h.unit()), dual.unit());
    }

    #[test]
    fn module_axioms_on_the_induced_module() {
        let (_, h, v) = s3_a3_rational();
        let homs_wv = hom_space(h.rho(), &v, h.k());
        let homs_vw = hom_space(&v, h.rho(), h.k());
        let basis = h.basis();
        for phi in homs_wv.basis() {
            // unit acts as the identity
            assert_eq!(h.right_action(&v, phi, &h.unit()), *phi);
            for t in &basis {
                for s in &basis {
                    let a = h.right_action(&v, &h.right_action(&v, phi, t), s);
                    let b = h.right_action(&v, phi, &h.convolve(t, s));
                    assert_eq!(a, b, "(φT)S = φ(T*S)");
                }
            }
        }
        for psi in homs_vw.basis() {
            assert_eq!(h.left_action(&v, &h.unit(), psi), *psi);
            for t in &basis {
                for s in &basis {
                    let a = h.left_action(&v, t, &h.left_action(&v, s, psi));
                    let b = h.left_action(&v, &h.convolve(t, s), psi);
                    assert_eq!(a, b, "(T*S)ψ = T(Sψ)");
                }
            }
        }
    }

    #[test]
    fn hermitian_defect_vanishes_for_s3_a3() {
        let (_, h, v) = s3_a3_rational();
        let homs_wv = hom_space(h.rho(), &v, h.k());
        let homs_vw = hom_space(&v, h.rho(), h.k());
        for phi in homs_wv.basis() {
            for psi in homs_vw.basis() {
                for t in h.basis() {
                    let d = h.hermitian_defect(&v, phi, psi, &t).unwrap();
                    assert!(d.is_zero());
                }
            }
        }
    }

    #[test]
    fn hypotheses_hold_for_s3_a3_rational() {
        let (_, h, _) = s3_a3_rational();
        assert!(h.multiplicity_free().holds);
        assert!(h.single_class_invertibility().holds());
    }

    #[test]
    fn pairing_vanishes_on_the_jordan_block() {
        let z3 = GroupTable::cyclic(3);
        let f3 = Field::prime(3).unwrap();
        let one = z3.cyclic_index(1).unwrap();
        let j = Matrix::from_ints(&f3, 2, 2, &[1, 1, 0, 1]);
        let v = Representation::new(z3.whole(), f3.clone(), 2, vec![(one, j)]).unwrap();
        let w = Representation::trivial(&z3.whole(), &f3);
        let gd = gram_data(&v, &w, &z3.whole()).unwrap();
        assert_eq!(gd.gram.rows(), 1);
        assert_eq!(gd.gram.cols(), 1);
        assert!(gd.gram.get(0, 0).is_zero());
        assert_eq!(gd.rank(), 0);
    }

    #[test]
    fn pairing_is_bilinear() {
        let (_, h, v) = s3_a3_rational();
        let homs_wv = hom_space(h.rho(), &v, h.k());
        let homs_vw = hom_space(&v, h.rho(), h.k());
        let q = h.field();
        let (a, b) = (q.from_int(3), q.from_int(-2));
        let phi = &homs_wv.basis()[0];
        let psi = &homs_vw.basis()[0];
        let base = pairing_scalar(phi, psi).unwrap();
        let scaled = pairing_scalar(&phi.scale(&a), &psi.scale(&b)).unwrap();
        assert_eq!(scaled, &(&a * &b) * &base);
    }

    #[test]
    fn intertwining_operator_covariance() {
        let (g, h, v) = s3_a3_rational();
        let homs_wv = hom_space(h.rho(), &v, h.k());
        let homs_vw = hom_space(&v, h.rho(), h.k());
        let phi = &homs_wv.basis()[0];
        let psi = &homs_vw.basis()[0];
        // E(xgx') = ϱ(x)E(g)ϱ(x') for sampled x, x' in K
        for &x in h.k().members() {
            for &xp in h.k().members() {
                for e in 0..g.order() {
                    let lhs = h.intertwining_operator(
                        &v,
                        phi,
                        psi,
                        g.mul(g.mul(x as usize, e), xp as usize),
                    );
                    let rhs = h
                        .rho()
                        .action(x as usize)
                        .mul(&h.intertwining_operator(&v, phi, psi, e))
                        .mul(h.rho().action(xp as usize));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn single_class_evaluation_lemma() {
        let (_, h, v) = s3_a3_rational();
        let rep = h.class_representatives()[1];
        let t = h
            .single_class_element(rep, Matrix::identity(h.field(), 1))
            .unwrap();
        let homs_wv = hom_space(h.rho(), &v, h.k());
        let homs_vw = hom_space(&v, h.rho(), h.k());
        let e_full =
            h.full_intertwining_element(&v, &homs_wv.basis()[0], &homs_vw.basis()[0]);
        // f' = f + (an element vanishing at the inverse representative)
        let mut extra = BTreeMap::new();
        extra.insert(0u32, Matrix::identity(h.field(), 1));
        let vanishing = h.element_from_class_values(extra).unwrap();
        let fp = e_full.add(&vanishing);
        // identity is in the class of the unit; rep^{-1} is in the other class
        assert!(h.single_class_evaluation_agrees(&t, &e_full, &fp).unwrap());
        assert!(h.single_class_evaluation_agrees(&t, &e_full, &e_full).unwrap());
    }
}
