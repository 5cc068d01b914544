//! Fully enumerated finite groups with subgroup, coset and double-coset
//! machinery.
//!
//! Elements are indices `0..order` with `0` the identity. Groups built from
//! concrete data (residues, permutations, matrices over a finite field) keep
//! a canonical key per element; multiplication goes through a cached
//! order×order table when the order is small enough, and through key
//! arithmetic plus a hash lookup above that (the GL₂(F₉) scenario group has
//! order 5760, past the table cap).

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::GroupError;
use crate::field::Field;
use crate::matrix::Matrix;

/// Orders up to this get a full multiplication table.
const TABLE_CAP: usize = 4096;
/// Orders up to this get an exhaustive associativity check; larger groups
/// are checked on a fixed deterministic sample of triples.
const FULL_ASSOC_CAP: usize = 512;
const SAMPLED_ASSOC_TRIPLES: usize = 100_000;
/// Default bound for breadth-first subgroup closure.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

type ElemKey = Vec<u32>;

/// How element keys multiply.
#[derive(Clone)]
enum MulRule {
    /// Key = [residue]; addition mod n.
    CyclicAdd(u32),
    /// Key = images of 0..degree; composition (a then b is b∘a? see `mul_keys`).
    Permutation(usize),
    /// Key = row-major field element codes of an invertible dim×dim matrix.
    MatrixOverField { field: Field, dim: usize },
}

impl MulRule {
    fn identity_key(&self) -> ElemKey {
        match self {
            MulRule::CyclicAdd(_) => vec![0],
            MulRule::Permutation(d) => (0..*d as u32).collect(),
            MulRule::MatrixOverField { field, dim } => {
                let one = field.code(&field.one());
                let mut k = vec![0u32; dim * dim];
                for i in 0..*dim {
                    k[i * dim + i] = one as u32;
                }
                k
            }
        }
    }

    /// Product a·b of two element keys.
    fn mul_keys(&self, a: &ElemKey, b: &ElemKey) -> ElemKey {
        match self {
            MulRule::CyclicAdd(n) => vec![(a[0] + b[0]) % n],
            // permutations act on points on the left: (a·b)(x) = a(b(x))
            MulRule::Permutation(_) => b.iter().map(|&x| a[x as usize]).collect(),
            MulRule::MatrixOverField { field, dim } => {
                let d = *dim;
                let mut out = vec![0u32; d * d];
                for i in 0..d {
                    for j in 0..d {
                        let mut acc = field.zero();
                        for k in 0..d {
                            let x = field.from_code(a[i * d + k] as u64);
                            let y = field.from_code(b[k * d + j] as u64);
                            acc = &acc + &(&x * &y);
                        }
                        out[i * d + j] = field.code(&acc) as u32;
                    }
                }
                out
            }
        }
    }

    fn inverse_key(&self, key: &ElemKey) -> ElemKey {
        match self {
            MulRule::CyclicAdd(n) => vec![(n - key[0]) % n],
            MulRule::Permutation(d) => {
                let mut inv = vec![0u32; *d];
                for (x, &y) in key.iter().enumerate() {
                    inv[y as usize] = x as u32;
                }
                inv
            }
            MulRule::MatrixOverField { field, dim } => {
                let d = *dim;
                let m = Matrix::from_fn(field, d, d, |i, j| {
                    field.from_code(key[i * d + j] as u64)
                });
                let inv = m.inverse().expect("group elements are invertible");
                let mut out = vec![0u32; d * d];
                for i in 0..d {
                    for j in 0..d {
                        out[i * d + j] = field.code(inv.get(i, j)) as u32;
                    }
                }
                out
            }
        }
    }

    fn label(&self, key: &ElemKey) -> String {
        match self {
            MulRule::CyclicAdd(n) => format!("{} mod {}", key[0], n),
            MulRule::Permutation(_) => {
                let imgs: Vec<String> = key.iter().map(|x| x.to_string()).collect();
                format!("({})", imgs.join(" "))
            }
            MulRule::MatrixOverField { field, dim } => {
                let d = *dim;
                let rows: Vec<String> = (0..d)
                    .map(|i| {
                        let row: Vec<String> = (0..d)
                            .map(|j| field.from_code(key[i * d + j] as u64).to_string())
                            .collect();
                        format!("[{}]", row.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
        }
    }
}

struct GroupInner {
    order: usize,
    rule: MulRule,
    /// elems[0] is the identity; the rest are sorted by key.
    elems: Vec<ElemKey>,
    index: HashMap<ElemKey, u32>,
    table: Option<Vec<u32>>,
    inv: Vec<u32>,
    labels: Vec<String>,
}

/// A fully enumerated finite group. Cheap to clone; immutable once built.
#[derive(Clone)]
pub struct GroupTable(Arc<GroupInner>);

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}
impl Eq for GroupTable {}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable(order {})", self.order())
    }
}

impl GroupTable {
    fn from_keys(rule: MulRule, mut keys: Vec<ElemKey>) -> Result<GroupTable, GroupError> {
        let id = rule.identity_key();
        keys.sort();
        keys.dedup();
        let pos = keys
            .iter()
            .position(|k| *k == id)
            .ok_or_else(|| GroupError::AxiomViolation("identity missing".into()))?;
        keys.remove(pos);
        let mut elems = Vec::with_capacity(keys.len() + 1);
        elems.push(id);
        elems.extend(keys);
        let order = elems.len();
        let mut index = HashMap::with_capacity(order);
        for (i, k) in elems.iter().enumerate() {
            index.insert(k.clone(), i as u32);
        }

        let raw_mul = |a: usize, b: usize| -> Result<u32, GroupError> {
            let k = rule.mul_keys(&elems[a], &elems[b]);
            index
                .get(&k)
                .copied()
                .ok_or_else(|| GroupError::NotClosed(format!("product {} leaves the set", rule.label(&k))))
        };

        let table = if order <= TABLE_CAP {
            let mut t = vec![0u32; order * order];
            for a in 0..order {
                for b in 0..order {
                    t[a * order + b] = raw_mul(a, b)?;
                }
            }
            Some(t)
        } else {
            // closure still has to hold; spot-check a deterministic sample
            for step in 0..SAMPLED_ASSOC_TRIPLES.min(order * 4) {
                let a = (step * 2654435761) % order;
                let b = (step * 40503 + 1) % order;
                raw_mul(a, b)?;
            }
            None
        };

        let mul = |a: usize, b: usize| -> u32 {
            match &table {
                Some(t) => t[a * order + b],
                None => {
                    let k = rule.mul_keys(&elems[a], &elems[b]);
                    index[&k]
                }
            }
        };

        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            let key = rule.inverse_key(&elems[a]);
            let b = *index
                .get(&key)
                .ok_or_else(|| GroupError::NotClosed(format!("inverse of {a} missing")))?
                as usize;
            if mul(a, b) != 0 || mul(b, a) != 0 {
                return Err(GroupError::AxiomViolation(format!(
                    "inverse axiom fails at {a}"
                )));
            }
            inv[a] = b as u32;
        }

        // identity axiom
        for a in 0..order {
            if mul(0, a) != a as u32 || mul(a, 0) != a as u32 {
                return Err(GroupError::AxiomViolation("0 is not a two-sided identity".into()));
            }
        }

        // associativity: exhaustive at small orders, sampled above
        if order <= FULL_ASSOC_CAP {
            for a in 0..order {
                for b in 0..order {
                    let ab = mul(a, b) as usize;
                    for c in 0..order {
                        if mul(ab, c) != mul(a, mul(b, c) as usize) {
                            return Err(GroupError::AxiomViolation(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            for step in 0..SAMPLED_ASSOC_TRIPLES {
                let a = (step * 2654435761) % order;
                let b = (step * 40503 + 7) % order;
                let c = (step * 97 + 13) % order;
                if mul(mul(a, b) as usize, c) != mul(a, mul(b, c) as usize) {
                    return Err(GroupError::AxiomViolation(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }

        let labels = elems.iter().map(|k| rule.label(k)).collect();
        Ok(GroupTable(Arc::new(GroupInner {
            order,
            rule,
            elems,
            index,
            table,
            inv,
            labels,
        })))
    }

    fn close_keys(rule: &MulRule, gens: &[ElemKey], cap: usize) -> Result<Vec<ElemKey>, GroupError> {
        let mut seen: HashMap<ElemKey, ()> = HashMap::new();
        let id = rule.identity_key();
        seen.insert(id.clone(), ());
        let mut queue: VecDeque<ElemKey> = VecDeque::new();
        queue.push_back(id);
        for g in gens {
            if !seen.contains_key(g) {
                seen.insert(g.clone(), ());
                queue.push_back(g.clone());
            }
        }
        while let Some(k) = queue.pop_front() {
            for g in gens {
                for prod in [rule.mul_keys(&k, g), rule.mul_keys(g, &k)] {
                    if !seen.contains_key(&prod) {
                        if seen.len() >= cap {
                            return Err(GroupError::OrderCapExceeded { cap });
                        }
                        seen.insert(prod.clone(), ());
                        queue.push_back(prod);
                    }
                }
            }
        }
        Ok(seen.into_keys().collect())
    }

    /// Z/n under addition.
    pub fn cyclic(n: u32) -> GroupTable {
        assert!(n >= 1);
        let rule = MulRule::CyclicAdd(n);
        let keys = (0..n).map(|k| vec![k]).collect();
        GroupTable::from_keys(rule, keys).expect("cyclic group is a group")
    }

    /// The symmetric group on `degree` points (degree <= 8).
    pub fn symmetric(degree: usize) -> GroupTable {
        assert!((1..=8).contains(&degree), "desk-scale symmetric groups only");
        let rule = MulRule::Permutation(degree);
        let mut keys = Vec::new();
        let mut perm: Vec<u32> = (0..degree as u32).collect();
        loop {
            keys.push(perm.clone());
            // next permutation in lexicographic order
            let Some(i) = (0..degree.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1])
            else {
                break;
            };
            let j = (i + 1..degree).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        GroupTable::from_keys(rule, keys).expect("symmetric group is a group")
    }

    /// Closure of a set of permutations of `0..degree`.
    pub fn from_permutations(degree: usize, gens: &[Vec<u32>], cap: usize) -> Result<GroupTable, GroupError> {
        let rule = MulRule::Permutation(degree);
        for g in gens {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&x| x as usize >= degree) {
                return Err(GroupError::AxiomViolation("not a permutation".into()));
            }
            for &x in g {
                if seen[x as usize] {
                    return Err(GroupError::AxiomViolation("not a permutation".into()));
                }
                seen[x as usize] = true;
            }
        }
        let keys = GroupTable::close_keys(&rule, gens, cap)?;
        GroupTable::from_keys(rule, keys)
    }

    /// GL₂(F_q) by exhaustive enumeration of invertible matrices,
    /// together with its upper-triangular Borel subgroup.
    pub fn gl2_with_borel(q: u64) -> Result<(GroupTable, SubgroupHandle), GroupError> {
        let field = match q {
            2 | 3 | 5 | 7 => Field::prime(q).unwrap(),
            4 => Field::extension(2, 2).unwrap(),
            8 => Field::extension(2, 3).unwrap(),
            9 => Field::extension(3, 2).unwrap(),
            _ => return Err(GroupError::UnsupportedFieldSize(q)),
        };
        let rule = MulRule::MatrixOverField {
            field: field.clone(),
            dim: 2,
        };
        let mut keys = Vec::new();
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    for d in 0..q {
                        let (sa, sb) = (field.from_code(a), field.from_code(b));
                        let (sc, sd) = (field.from_code(c), field.from_code(d));
                        let det = &(&sa * &sd) - &(&sb * &sc);
                        if !det.is_zero() {
                            keys.push(vec![a as u32, b as u32, c as u32, d as u32]);
                        }
                    }
                }
            }
        }
        let group = GroupTable::from_keys(rule, keys)?;
        let zero = field.code(&field.zero()) as u32;
        let borel: Vec<u32> = (0..group.order() as u32)
            .filter(|&g| group.0.elems[g as usize][2] == zero)
            .collect();
        let borel = SubgroupHandle::from_members(&group, borel)?;
        Ok((group, borel))
    }

    /// The field underlying a matrix group, if any.
    pub fn matrix_field(&self) -> Option<&Field> {
        match &self.0.rule {
            MulRule::MatrixOverField { field, .. } => Some(field),
            _ => None,
        }
    }

    /// Decode a matrix-group element back into its matrix.
    pub fn matrix_of(&self, g: usize) -> Option<Matrix> {
        match &self.0.rule {
            MulRule::MatrixOverField { field, dim } => {
                let key = &self.0.elems[g];
                Some(Matrix::from_fn(field, *dim, *dim, |i, j| {
                    field.from_code(key[i * dim + j] as u64)
                }))
            }
            _ => None,
        }
    }

    /// Index of a permutation-group element given its one-line images.
    pub fn permutation_index(&self, images: &[u32]) -> Option<usize> {
        match &self.0.rule {
            MulRule::Permutation(_) => self.0.index.get(images).map(|&i| i as usize),
            _ => None,
        }
    }

    /// One-line images of a permutation-group element.
    pub fn permutation_images(&self, g: usize) -> Option<&[u32]> {
        match &self.0.rule {
            MulRule::Permutation(_) => Some(&self.0.elems[g]),
            _ => None,
        }
    }

    /// Index of a matrix-group element given its row-major entry codes.
    pub fn matrix_index(&self, codes: &[u32]) -> Option<usize> {
        match &self.0.rule {
            MulRule::MatrixOverField { .. } => self.0.index.get(codes).map(|&i| i as usize),
            _ => None,
        }
    }

    /// Index of a cyclic-group element given its residue.
    pub fn cyclic_index(&self, residue: u32) -> Option<usize> {
        match &self.0.rule {
            MulRule::CyclicAdd(n) => Some((residue % n) as usize),
            _ => None,
        }
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.0.table {
            Some(t) => t[a * self.0.order + b] as usize,
            None => {
                let k = self.0.rule.mul_keys(&self.0.elems[a], &self.0.elems[b]);
                self.0.index[&k] as usize
            }
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.0.inv[a] as usize
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        // g^{-1} x g
        self.mul(self.mul(self.inverse(g), x), g)
    }

    pub fn label(&self, g: usize) -> &str {
        &self.0.labels[g]
    }

    pub fn has_full_table(&self) -> bool {
        self.0.table.is_some()
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.0.order
    }

    /// The whole group as a subgroup handle.
    pub fn whole(&self) -> SubgroupHandle {
        SubgroupHandle {
            parent: self.clone(),
            members: Arc::new((0..self.0.order as u32).collect()),
            gens: OnceLock::new(),
        }
    }

    pub fn trivial_subgroup(&self) -> SubgroupHandle {
        let h = SubgroupHandle {
            parent: self.clone(),
            members: Arc::new(vec![0]),
            gens: OnceLock::new(),
        };
        let _ = h.gens.set(Vec::new());
        h
    }
}

/// A subgroup of a [`GroupTable`], stored as a sorted member list.
#[derive(Clone)]
pub struct SubgroupHandle {
    parent: GroupTable,
    members: Arc<Vec<u32>>,
    gens: OnceLock<Vec<u32>>,
}

impl PartialEq for SubgroupHandle {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}
impl Eq for SubgroupHandle {}

impl fmt::Debug for SubgroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SubgroupHandle(order {} in group of order {})",
            self.order(),
            self.parent.order()
        )
    }
}

impl SubgroupHandle {
    /// Validates closure under multiplication and inverse.
    pub fn from_members(parent: &GroupTable, mut members: Vec<u32>) -> Result<SubgroupHandle, GroupError> {
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) {
            return Err(GroupError::NotClosed("identity missing".into()));
        }
        let set: Vec<bool> = {
            let mut v = vec![false; parent.order()];
            for &m in &members {
                if m as usize >= parent.order() {
                    return Err(GroupError::NotAMember(m as usize));
                }
                v[m as usize] = true;
            }
            v
        };
        for &a in &members {
            if !set[parent.inverse(a as usize)] {
                return Err(GroupError::NotClosed(format!("inverse of {a} missing")));
            }
            for &b in &members {
                if !set[parent.mul(a as usize, b as usize)] {
                    return Err(GroupError::NotClosed(format!("product {a}*{b} escapes")));
                }
            }
        }
        Ok(SubgroupHandle {
            parent: parent.clone(),
            members: Arc::new(members),
            gens: OnceLock::new(),
        })
    }

    /// Smallest subgroup containing the generators, by breadth-first closure.
    pub fn generated_by(parent: &GroupTable, gens: &[usize], cap: usize) -> Result<SubgroupHandle, GroupError> {
        assert!(!gens.is_empty(), "generator list must be nonempty");
        let mut seen = vec![false; parent.order()];
        seen[0] = true;
        let mut members: Vec<u32> = vec![0];
        let mut queue: VecDeque<usize> = VecDeque::new();
        queue.push_back(0);
        for &g in gens {
            if g >= parent.order() {
                return Err(GroupError::NotAMember(g));
            }
            if !seen[g] {
                seen[g] = true;
                members.push(g as u32);
                queue.push_back(g);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                for y in [parent.mul(x, g), parent.mul(g, x), parent.inverse(x)] {
                    if !seen[y] {
                        if members.len() >= cap {
                            return Err(GroupError::OrderCapExceeded { cap });
                        }
                        seen[y] = true;
                        members.push(y as u32);
                        queue.push_back(y);
                    }
                }
            }
        }
        members.sort_unstable();
        let handle = SubgroupHandle {
            parent: parent.clone(),
            members: Arc::new(members),
            gens: OnceLock::new(),
        };
        let _ = handle.gens.set(gens.iter().map(|&g| g as u32).collect());
        Ok(handle)
    }

    pub fn parent(&self) -> &GroupTable {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&(g as u32)).is_ok()
    }

    pub fn position_of(&self, g: usize) -> Option<usize> {
        self.members.binary_search(&(g as u32)).ok()
    }

    pub fn is_whole_group(&self) -> bool {
        self.order() == self.parent.order()
    }

    /// A small generating set, computed greedily over the member list when
    /// the handle was not built from explicit generators.
    pub fn generators(&self) -> &[u32] {
        self.gens.get_or_init(|| {
            let mut gens: Vec<u32> = Vec::new();
            let mut closure = vec![false; self.parent.order()];
            closure[0] = true;
            let mut closed: Vec<usize> = vec![0];
            for &m in self.members.iter() {
                if closure[m as usize] {
                    continue;
                }
                gens.push(m);
                // grow the closure with the new generator
                let mut queue: VecDeque<usize> = closed.clone().into();
                queue.push_back(m as usize);
                closure[m as usize] = true;
                closed.push(m as usize);
                while let Some(x) = queue.pop_front() {
                    for &g in &gens {
                        for y in [
                            self.parent.mul(x, g as usize),
                            self.parent.mul(g as usize, x),
                            self.parent.inverse(x),
                        ] {
                            if !closure[y] {
                                closure[y] = true;
                                closed.push(y);
                                queue.push_back(y);
                            }
                        }
                    }
                }
                if closed.len() == self.members.len() {
                    break;
                }
            }
            gens
        })
    }

    /// Minimal-index representatives of the right cosets K\G restricted to
    /// `within` (pass the whole group for K\G itself). `self` must be
    /// contained in `within`.
    pub fn right_coset_reps_within(&self, within: &SubgroupHandle) -> Vec<usize> {
        debug_assert!(self.members.iter().all(|&m| within.contains(m as usize)));
        let mut covered = vec![false; self.parent.order()];
        let mut reps = Vec::new();
        for &g in within.members.iter() {
            if covered[g as usize] {
                continue;
            }
            reps.push(g as usize);
            for &k in self.members.iter() {
                covered[self.parent.mul(k as usize, g as usize)] = true;
            }
        }
        reps
    }

    /// Minimal-index representatives of K\G.
    pub fn right_coset_reps(&self) -> Vec<usize> {
        self.right_coset_reps_within(&self.parent.whole())
    }

    /// K-double-coset decomposition of the parent group.
    pub fn double_cosets(&self) -> DoubleCosetSystem {
        let g = &self.parent;
        let mut class_of = vec![u32::MAX; g.order()];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for e in 0..g.order() {
            if class_of[e] != u32::MAX {
                continue;
            }
            let class_idx = reps.len() as u32;
            reps.push(e);
            // orbit of e under left/right K-multiplication
            let mut orbit = vec![e];
            class_of[e] = class_idx;
            let mut queue: VecDeque<usize> = VecDeque::from([e]);
            while let Some(x) = queue.pop_front() {
                for &k in self.members.iter() {
                    for y in [g.mul(k as usize, x), g.mul(x, k as usize)] {
                        if class_of[y] == u32::MAX {
                            class_of[y] = class_idx;
                            orbit.push(y);
                            queue.push_back(y);
                        }
                    }
                }
            }
            sizes.push(orbit.len());
        }
        DoubleCosetSystem {
            subgroup: self.clone(),
            representatives: reps,
            class_sizes: sizes,
            class_of,
        }
    }

    /// `(K^g, K ∩ K^g)` where `K^g = g^{-1} K g`.
    pub fn conjugate_and_intersect(&self, g: usize) -> (SubgroupHandle, SubgroupHandle) {
        let parent = &self.parent;
        let mut conj: Vec<u32> = self
            .members
            .iter()
            .map(|&k| parent.conjugate(g, k as usize) as u32)
            .collect();
        conj.sort_unstable();
        let inter: Vec<u32> = {
            // sorted merge
            let (mut i, mut j) = (0, 0);
            let mut out = Vec::new();
            while i < self.members.len() && j < conj.len() {
                match self.members[i].cmp(&conj[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        out.push(conj[j]);
                        i += 1;
                        j += 1;
                    }
                }
            }
            out
        };
        let conj_handle = SubgroupHandle {
            parent: parent.clone(),
            members: Arc::new(conj),
            gens: OnceLock::new(),
        };
        let inter_handle = SubgroupHandle {
            parent: parent.clone(),
            members: Arc::new(inter),
            gens: OnceLock::new(),
        };
        (conj_handle, inter_handle)
    }

    pub fn is_normal_in(&self, overgroup: &SubgroupHandle) -> bool {
        overgroup.members.iter().all(|&g| {
            self.members
                .iter()
                .all(|&k| self.contains(self.parent.conjugate(g as usize, k as usize)))
        })
    }

    pub fn is_contained_in(&self, other: &SubgroupHandle) -> bool {
        self.members.iter().all(|&m| other.contains(m as usize))
    }
}

/// The partition of a group into K-double cosets, with minimal-index
/// representatives.
#[derive(Clone)]
pub struct DoubleCosetSystem {
    subgroup: SubgroupHandle,
    representatives: Vec<usize>,
    class_sizes: Vec<usize>,
    class_of: Vec<u32>,
}

impl DoubleCosetSystem {
    pub fn subgroup(&self) -> &SubgroupHandle {
        &self.subgroup
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g] as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> GroupTable {
        GroupTable::symmetric(3)
    }

    /// ⟨(0 1)⟩ inside S_3.
    fn transposition_subgroup(g: &GroupTable) -> SubgroupHandle {
        let t = g.permutation_index(&[1, 0, 2]).unwrap();
        SubgroupHandle::generated_by(g, &[t], DEFAULT_ORDER_CAP).unwrap()
    }

    /// A_3 = ⟨(0 1 2)⟩ inside S_3.
    fn a3(g: &GroupTable) -> SubgroupHandle {
        let c = g.permutation_index(&[1, 2, 0]).unwrap();
        SubgroupHandle::generated_by(g, &[c], DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn s3_from_generators_has_order_6() {
        let g = s3();
        assert_eq!(g.order(), 6);
        let t = g.permutation_index(&[1, 0, 2]).unwrap();
        let c = g.permutation_index(&[1, 2, 0]).unwrap();
        let h = SubgroupHandle::generated_by(&g, &[t, c], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(h.order(), 6);
    }

    #[test]
    fn gl2_orders_match_the_counting_formula() {
        for (q, order, borel) in [(2u64, 6usize, 2usize), (3, 48, 12), (4, 180, 36)] {
            let (g, b) = GroupTable::gl2_with_borel(q).unwrap();
            assert_eq!(g.order(), order, "|GL2(F_{q})|");
            assert_eq!(b.order(), borel, "Borel order at q={q}");
        }
    }

    #[test]
    fn gl2_f9_uses_the_hash_path() {
        let (g, b) = GroupTable::gl2_with_borel(9).unwrap();
        assert_eq!(g.order(), 5760);
        assert_eq!(b.order(), 576);
        assert!(!g.has_full_table());
        // a few sanity products through the hash path
        for a in [1usize, 17, 4000] {
            assert_eq!(g.mul(a, g.inverse(a)), 0);
            assert_eq!(g.mul(0, a), a);
        }
    }

    #[test]
    fn unsupported_q_is_rejected() {
        assert!(matches!(
            GroupTable::gl2_with_borel(6),
            Err(GroupError::UnsupportedFieldSize(6))
        ));
    }

    #[test]
    fn coset_reps_for_a3_and_trivial() {
        let g = s3();
        assert_eq!(g.whole().right_coset_reps(), vec![0]);
        assert_eq!(g.trivial_subgroup().right_coset_reps().len(), 6);
        assert_eq!(a3(&g).right_coset_reps().len(), 2);
    }

    #[test]
    fn double_cosets_of_transposition_subgroup() {
        let g = s3();
        let k = transposition_subgroup(&g);
        let dcs = k.double_cosets();
        let mut sizes = dcs.class_sizes().to_vec();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4]);
        assert_eq!(dcs.class_sizes().iter().sum::<usize>(), 6);
        // |KgK| = |K|^2 / |K ∩ K^g|
        for (i, &rep) in dcs.representatives().iter().enumerate() {
            let (_, inter) = k.conjugate_and_intersect(rep);
            assert_eq!(dcs.class_sizes()[i], k.order() * k.order() / inter.order());
        }
    }

    #[test]
    fn double_cosets_of_normal_subgroup_are_cosets() {
        let g = s3();
        let k = a3(&g);
        assert!(k.is_normal_in(&g.whole()));
        let dcs = k.double_cosets();
        assert_eq!(dcs.class_sizes(), &[3, 3]);
    }

    #[test]
    fn conjugate_of_transposition_subgroups_intersect_trivially() {
        let g = s3();
        let k = transposition_subgroup(&g);
        let c = g.permutation_index(&[1, 2, 0]).unwrap();
        let (kg, inter) = k.conjugate_and_intersect(c);
        assert_eq!(kg.order(), 2);
        assert_ne!(kg, k);
        assert_eq!(inter.order(), 1);
        // conjugating by the identity is a no-op
        let (kid, kint) = k.conjugate_and_intersect(0);
        assert_eq!(kid, k);
        assert_eq!(kint, k);
    }

    #[test]
    fn cyclic_group_generated_by_coprime_pair() {
        let g = GroupTable::cyclic(6);
        assert_eq!(g.order(), 6);
        let a = g.cyclic_index(2).unwrap();
        let b = g.cyclic_index(3).unwrap();
        let h = SubgroupHandle::generated_by(&g, &[a, b], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(h.order(), 6);
        assert_eq!(GroupTable::cyclic(1).order(), 1);
        assert_eq!(GroupTable::cyclic(3).order(), 3);
    }

    #[test]
    fn order_cap_is_enforced() {
        let g = GroupTable::cyclic(100);
        let one = g.cyclic_index(1).unwrap();
        assert!(matches!(
            SubgroupHandle::generated_by(&g, &[one], 10),
            Err(GroupError::OrderCapExceeded { cap: 10 })
        ));
    }

    #[test]
    fn lagrange_holds_for_generated_subgroups() {
        let g = s3();
        for gen in 1..g.order() {
            let h = SubgroupHandle::generated_by(&g, &[gen], DEFAULT_ORDER_CAP).unwrap();
            assert_eq!(g.order() % h.order(), 0);
            assert_eq!(h.right_coset_reps().len(), g.order() / h.order());
        }
    }

    #[test]
    fn generators_of_filtered_subgroup_regenerate_it() {
        let (g, b) = GroupTable::gl2_with_borel(3).unwrap();
        let gens = b.generators().to_vec();
        assert!(!gens.is_empty());
        let regen = SubgroupHandle::generated_by(
            &g,
            &gens.iter().map(|&x| x as usize).collect::<Vec<_>>(),
            DEFAULT_ORDER_CAP,
        )
        .unwrap();
        assert_eq!(regen.order(), b.order());
    }
}
