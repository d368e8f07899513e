//! Fully enumerated permutation groups and their subgroups.
//!
//! Elements are addressed by index everywhere. Index 0 is always the
//! identity, and the remaining indices follow the breadth-first order in
//! which closure under right multiplication by the generators discovered
//! them, so the layout is a pure function of the generator list.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// Groups up to this order get a full Cayley table.
const TABLE_LIMIT: usize = 2500;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    representative: usize,
    elements: Vec<usize>,
}

impl ConjugacyClass {
    /// Lowest element index in the class.
    pub fn representative(&self) -> usize {
        self.representative
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    generator_indices: Vec<usize>,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, usize>,
    /// `right_gen[i * ngens + k]` is the index of `elements[i] * generators[k]`.
    right_gen: Vec<u32>,
    /// BFS tree: element `j > 0` was found as `elements[parent.0] * generators[parent.1]`.
    parent: Vec<(u32, u32)>,
    table: Vec<u32>,
    inverses: Vec<usize>,
    orders: Vec<u64>,
    exponent: u64,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl FiniteGroup {
    /// Closes `gens` with the default order cap.
    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        Self::from_generators_with_cap(degree, gens, DEFAULT_ORDER_CAP)
    }

    pub fn from_generators_with_cap(
        degree: usize,
        gens: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
            // re-validate in case the caller built it from raw parts
            Permutation::from_images(g.images().to_vec())?;
        }
        let ngens = gens.len();
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut lookup = HashMap::new();
        lookup.insert(identity, 0usize);
        let mut right_gen: Vec<u32> = Vec::new();
        let mut parent = vec![(0u32, 0u32)];

        let mut k = 0;
        while k < elements.len() {
            for (gi, g) in gens.iter().enumerate() {
                let prod = elements[k].compose(g);
                let idx = match lookup.get(&prod) {
                    Some(&i) => i,
                    None => {
                        let i = elements.len();
                        if i >= cap {
                            return Err(Error::OrderCapExceeded { cap });
                        }
                        lookup.insert(prod.clone(), i);
                        elements.push(prod);
                        parent.push((k as u32, gi as u32));
                        i
                    }
                };
                right_gen.push(idx as u32);
            }
            k += 1;
        }

        let n = elements.len();
        let mut generator_indices: Vec<usize> =
            gens.iter().map(|g| lookup[g]).filter(|&i| i != 0).collect();
        generator_indices.sort_unstable();
        generator_indices.dedup();

        let mut table = Vec::new();
        if n <= TABLE_LIMIT {
            table = vec![0u32; n * n];
            for i in 0..n {
                let row = i * n;
                table[row] = i as u32;
                for j in 1..n {
                    let (p, gi) = parent[j];
                    let left = table[row + p as usize] as usize;
                    table[row + j] = right_gen[left * ngens + gi as usize];
                }
            }
        }

        let inverses = elements.iter().map(|g| lookup[&g.inverse()]).collect();
        let orders: Vec<u64> = elements.iter().map(Permutation::order).collect();
        let exponent = orders.iter().fold(1u64, |acc, o| acc.lcm(o));

        let mut group = FiniteGroup {
            degree,
            generators: gens,
            generator_indices,
            elements,
            lookup,
            right_gen,
            parent,
            table,
            inverses,
            orders,
            exponent,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        group.compute_classes();
        Ok(group)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(degree, Vec::new()).expect("trivial group always closes")
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                for &g in &self.generator_indices {
                    let y = self.conjugate(x, g);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(ConjugacyClass {
                representative: start,
                elements: members,
            });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Indices of the non-identity generators, deduplicated.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.lookup.get(g).copied()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjugacyClass::size).collect()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.orders[i]
    }

    pub fn is_abelian(&self) -> bool {
        self.class_count() == self.order()
    }

    /// Product `a * b` (apply `a` first).
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        if self.table.is_empty() {
            let p = self.elements[a].compose(&self.elements[b]);
            self.lookup[&p]
        } else {
            self.table[a * self.order() + b] as usize
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Carries a map defined on the generators to all elements along the BFS
    /// tree: `image[j] = step(image[parent], generator slot)`.
    fn propagate<F: FnMut(usize, usize) -> usize>(&self, mut step: F) -> Vec<usize> {
        let mut image = vec![0usize; self.order()];
        for j in 1..self.order() {
            let (p, gi) = self.parent[j];
            image[j] = step(image[p as usize], gi as usize);
        }
        image
    }

    fn right_gen(&self, i: usize, slot: usize) -> usize {
        self.right_gen[i * self.generators.len() + slot] as usize
    }

    // ---- subgroups -------------------------------------------------------

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.close(&[])
    }

    pub fn whole(&self) -> Subgroup {
        self.close(&self.generator_indices.clone())
    }

    /// Closure of `gens` under right multiplication.
    fn close(&self, gens: &[usize]) -> Subgroup {
        let mut gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut mask = FixedBitSet::with_capacity(self.order());
        mask.insert(0);
        let mut members = vec![0usize];
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            for &g in &gens {
                let y = self.mul(x, g);
                if !mask.contains(y) {
                    mask.insert(y);
                    members.push(y);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        Subgroup {
            mask,
            members,
            gens,
        }
    }

    /// Drops redundant generators greedily, scanning in the given order.
    fn reduce(&self, gens: &[usize]) -> Subgroup {
        let mut kept: Vec<usize> = Vec::new();
        let mut cur = self.trivial_subgroup();
        for &g in gens {
            if !cur.contains(g) {
                kept.push(g);
                cur = self.close(&kept);
            }
        }
        cur
    }

    pub fn subgroup_generated(&self, seed: &[usize]) -> Subgroup {
        let h = self.close(seed);
        if h.gens.len() > 4 {
            self.reduce(&h.gens.clone())
        } else {
            h
        }
    }

    /// Subgroup with exactly the given member set (assumed closed).
    pub fn subgroup_from_members(&self, members: &[usize]) -> Subgroup {
        let h = self.reduce(members);
        debug_assert_eq!(h.order(), members.len(), "member set is not a subgroup");
        h
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generator_indices
            .iter()
            .all(|&x| h.gens.iter().all(|&g| h.contains(self.conjugate(g, x))))
    }

    pub fn normal_closure(&self, seed: &[usize]) -> Subgroup {
        let mut h = self.subgroup_generated(seed);
        loop {
            let mut extra: Vec<usize> = Vec::new();
            for &x in &self.generator_indices {
                for &g in &h.gens {
                    let c = self.conjugate(g, x);
                    if !h.contains(c) && !extra.contains(&c) {
                        extra.push(c);
                    }
                }
            }
            if extra.is_empty() {
                return h;
            }
            let mut gens = h.gens.clone();
            gens.extend(extra);
            h = self.subgroup_generated(&gens);
        }
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if b.is_subgroup_of(a) {
            return a.clone();
        }
        if a.is_subgroup_of(b) {
            return b.clone();
        }
        let mut gens = a.gens.clone();
        gens.extend(b.gens.iter().copied().filter(|&g| !a.contains(g)));
        self.subgroup_generated(&gens)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let members: Vec<usize> = a
            .members
            .iter()
            .copied()
            .filter(|&x| b.contains(x))
            .collect();
        self.subgroup_from_members(&members)
    }

    pub fn centralizer(&self, g: usize) -> Subgroup {
        let members: Vec<usize> = (0..self.order())
            .filter(|&x| self.mul(x, g) == self.mul(g, x))
            .collect();
        let c = self.subgroup_from_members(&members);
        debug_assert_eq!(
            c.order() * self.classes[self.class_of[g]].size(),
            self.order()
        );
        c
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let members: Vec<usize> = (0..self.order())
            .filter(|&x| h.gens.iter().all(|&g| h.contains(self.conjugate(g, x))))
            .collect();
        self.subgroup_from_members(&members)
    }

    /// Commutator subgroup `[A, B]`: the normal closure in `<A, B>` of the
    /// commutators of generators.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut seed = Vec::new();
        for &x in &a.gens {
            for &y in &b.gens {
                let c = self.commutator(x, y);
                if c != 0 {
                    seed.push(c);
                }
            }
        }
        let mut conj: Vec<usize> = a.gens.clone();
        conj.extend(&b.gens);
        let mut h = self.subgroup_generated(&seed);
        loop {
            let mut extra: Vec<usize> = Vec::new();
            for &x in &conj {
                for &g in &h.gens {
                    let c = self.conjugate(g, x);
                    if !h.contains(c) && !extra.contains(&c) {
                        extra.push(c);
                    }
                }
            }
            if extra.is_empty() {
                return h;
            }
            let mut gens = h.gens.clone();
            gens.extend(extra);
            h = self.subgroup_generated(&gens);
        }
    }

    pub fn is_abelian_subgroup(&self, h: &Subgroup) -> bool {
        h.gens
            .iter()
            .all(|&a| h.gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The subgroup as a group in its own right, with the map from its
    /// element indices to indices of `self`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<usize>) {
        let gens: Vec<Permutation> = h.gens.iter().map(|&g| self.elements[g].clone()).collect();
        let sub = FiniteGroup::from_generators(self.degree, gens)
            .expect("subgroup of an enumerated group closes");
        let map = sub.propagate(|p, slot| self.mul(p, h.gens[slot]));
        (sub, map)
    }

    /// Quotient by a normal subgroup, realized as the action on cosets.
    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for &x in &n.members {
                coset_of[self.mul(x, g)] = c;
            }
        }
        let action = |g: usize| -> Permutation {
            let images = reps
                .iter()
                .map(|&r| coset_of[self.mul(r, g)] as u32)
                .collect();
            Permutation::from_images(images).expect("coset action is a bijection")
        };
        let gens: Vec<Permutation> = (0..self.generators.len())
            .map(|slot| action(self.right_gen(0, slot)))
            .collect();
        let group = FiniteGroup::from_generators(reps.len(), gens)?;
        let projection = self.propagate(|p, slot| group.right_gen(p, slot));
        debug_assert_eq!(group.order() * n.order(), self.order());
        Ok(Quotient { group, projection })
    }
}

/// `G/N` together with the natural projection on element indices.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: Vec<usize>,
}

impl Quotient {
    /// Full preimage in the parent group of a subgroup of the quotient.
    pub fn preimage(&self, parent: &FiniteGroup, s: &Subgroup) -> Subgroup {
        let members: Vec<usize> = (0..parent.order())
            .filter(|&g| s.contains(self.projection[g]))
            .collect();
        parent.subgroup_from_members(&members)
    }

    /// Image in the quotient of a subgroup of the parent.
    pub fn image(&self, s: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = s.gens.iter().map(|&g| self.projection[g]).collect();
        self.group.subgroup_generated(&gens)
    }
}

/// A subgroup of some enumerated group, stored as a set of element indices.
///
/// The parent group is not stored; operations take it explicitly.
#[derive(Clone, Debug)]
pub struct Subgroup {
    mask: FixedBitSet,
    members: Vec<usize>,
    gens: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.mask.contains(i)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.len() <= other.members.len() && self.mask.is_subset(&other.mask)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mask.hash(state);
    }
}
