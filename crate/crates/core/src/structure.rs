//! Normal subgroups, characteristic series, cores, Sylow subgroups,
//! p-length and Frobenius structure.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{is_power_of, is_prime, p_part};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// All normal subgroups of a group, sorted by order and then by members.
#[derive(Clone, Debug)]
pub struct NormalLattice {
    members: Vec<Subgroup>,
}

impl NormalLattice {
    pub fn members(&self) -> &[Subgroup] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, h: &Subgroup) -> bool {
        self.members.iter().any(|m| m == h)
    }

    /// Nontrivial members containing no smaller nontrivial member.
    pub fn minimal(&self) -> Vec<&Subgroup> {
        let nontrivial: Vec<&Subgroup> = self.members.iter().filter(|m| !m.is_trivial()).collect();
        nontrivial
            .iter()
            .filter(|m| {
                !nontrivial
                    .iter()
                    .any(|n| n.order() < m.order() && n.is_subgroup_of(m))
            })
            .copied()
            .collect()
    }
}

/// Normal closures of all cyclic subgroups, closed under joins.
pub fn normal_subgroups(g: &FiniteGroup) -> NormalLattice {
    let mut seen: HashSet<Subgroup> = HashSet::new();
    let mut base: Vec<Subgroup> = Vec::new();
    for c in g.classes() {
        let n = g.normal_closure(&[c.representative()]);
        if seen.insert(n.clone()) {
            base.push(n);
        }
    }
    let mut members: Vec<Subgroup> = base.clone();
    let mut k = 0;
    while k < members.len() {
        let m = members[k].clone();
        for b in &base {
            if b.is_subgroup_of(&m) {
                continue;
            }
            let j = g.join(&m, b);
            if seen.insert(j.clone()) {
                members.push(j);
            }
        }
        k += 1;
    }
    members.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members().cmp(b.members()))
    });
    NormalLattice { members }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    UpperP(u64),
}

#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup>,
    pub stabilized: bool,
}

fn descending(
    g: &FiniteGroup,
    kind: SeriesKind,
    next: impl Fn(&Subgroup) -> Subgroup,
) -> SeriesReport {
    let mut terms = vec![g.whole()];
    loop {
        let last = terms.last().unwrap();
        let n = next(last);
        if n == *last {
            break;
        }
        terms.push(n);
    }
    let stabilized = terms.last().unwrap().is_trivial();
    SeriesReport {
        kind,
        terms,
        stabilized,
    }
}

/// `G ≥ G' ≥ G'' ≥ …` until it stops shrinking; `stabilized` is set when
/// the last term is trivial.
pub fn derived_series(g: &FiniteGroup) -> SeriesReport {
    descending(g, SeriesKind::Derived, |h| g.commutator_subgroup(h, h))
}

pub fn lower_central_series(g: &FiniteGroup) -> SeriesReport {
    let whole = g.whole();
    descending(g, SeriesKind::LowerCentral, |h| {
        g.commutator_subgroup(h, &whole)
    })
}

pub fn derived_length(g: &FiniteGroup) -> Result<usize> {
    let s = derived_series(g);
    if s.stabilized {
        Ok(s.terms.len() - 1)
    } else {
        Err(Error::NotSolvable)
    }
}

pub fn is_solvable(g: &FiniteGroup) -> bool {
    derived_series(g).stabilized
}

pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    lower_central_series(g).stabilized
}

/// Derived length of the subgroup `h`, or `NotSolvable`.
pub fn subgroup_derived_length(g: &FiniteGroup, h: &Subgroup) -> Result<usize> {
    let mut cur = h.clone();
    let mut n = 0;
    while !cur.is_trivial() {
        let next = g.commutator_subgroup(&cur, &cur);
        if next == cur {
            return Err(Error::NotSolvable);
        }
        cur = next;
        n += 1;
    }
    Ok(n)
}

/// Whether `K/L` is nilpotent for normal `L ≤ K`, using the relative lower
/// central series `K_1 = K`, `K_{i+1} = [K_i, K]L`.
pub fn is_nilpotent_section(g: &FiniteGroup, k: &Subgroup, l: &Subgroup) -> bool {
    let mut cur = k.clone();
    loop {
        if cur.is_subgroup_of(l) {
            return true;
        }
        let next = g.join(&g.commutator_subgroup(&cur, k), l);
        if next == cur {
            return false;
        }
        cur = next;
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Join of the normal closures of class representatives whose normal
/// closure satisfies `keep`. Used for `O_p` and `O_{p'}`: each is generated
/// by the normal closures of its own elements.
fn core_by(
    g: &FiniteGroup,
    element_ok: impl Fn(u64) -> bool,
    keep: impl Fn(usize) -> bool,
) -> Subgroup {
    let mut acc = g.trivial_subgroup();
    for c in g.classes() {
        let x = c.representative();
        if x == 0 || acc.contains(x) || !element_ok(g.element_order(x)) {
            continue;
        }
        let n = g.normal_closure(&[x]);
        if keep(n.order()) {
            acc = g.join(&acc, &n);
        }
    }
    acc
}

/// `O_p(G)`, the largest normal `p`-subgroup.
pub fn core_p(g: &FiniteGroup, p: u64) -> Result<Subgroup> {
    check_prime(p)?;
    Ok(core_by(
        g,
        |o| is_power_of(o, p),
        |n| is_power_of(n as u64, p),
    ))
}

/// `O_{p'}(G)`, the largest normal subgroup of order prime to `p`.
pub fn core_p_prime(g: &FiniteGroup, p: u64) -> Result<Subgroup> {
    check_prime(p)?;
    Ok(core_by(
        g,
        |o| o % p != 0,
        |n| !(n as u64).is_multiple_of(p),
    ))
}

/// `O_{p',p}(G)`, the preimage of `O_p(G/O_{p'}(G))`.
pub fn core_p_prime_p(g: &FiniteGroup, p: u64) -> Result<Subgroup> {
    let n = core_p_prime(g, p)?;
    let q = g.quotient(&n)?;
    let op = core_p(&q.group, p)?;
    Ok(q.preimage(g, &op))
}

/// Join of `O_p(G)` over the primes dividing `|G|`.
pub fn fitting(g: &FiniteGroup) -> Subgroup {
    let mut f = g.trivial_subgroup();
    for p in prime_divisors(g) {
        let op = core_p(g, p).expect("prime");
        f = g.join(&f, &op);
    }
    debug_assert!(is_nilpotent_section(g, &f, &g.trivial_subgroup()));
    f
}

pub fn prime_divisors(g: &FiniteGroup) -> Vec<u64> {
    crate::arith::prime_divisors(g.order() as u64)
}

pub fn sylow(g: &FiniteGroup, p: u64) -> Result<Subgroup> {
    sylow_seeded(g, p, 0)
}

/// Grows a `p`-subgroup one `p`-element of its normalizer at a time; the
/// seed only shuffles the search order.
pub fn sylow_seeded(g: &FiniteGroup, p: u64, seed: u64) -> Result<Subgroup> {
    check_prime(p)?;
    let order = g.order() as u64;
    if !order.is_multiple_of(p) {
        return Err(Error::PrimeDoesNotDivide {
            p,
            order: g.order(),
        });
    }
    let target = p_part(order, p) as usize;
    let mut candidates: Vec<usize> = (1..g.order())
        .filter(|&x| is_power_of(g.element_order(x), p))
        .collect();
    candidates.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut cur = g.trivial_subgroup();
    while cur.order() < target {
        let mut gens = cur.generators().to_vec();
        let x = candidates
            .iter()
            .copied()
            .find(|&x| {
                !cur.contains(x)
                    && cur
                        .generators()
                        .iter()
                        .all(|&h| cur.contains(g.conjugate(h, x)))
            })
            .expect("a non-Sylow p-subgroup has a p-element in its normalizer beyond it");
        gens.push(x);
        cur = g.subgroup_generated(&gens);
    }
    debug_assert_eq!(cur.order(), target);
    Ok(cur)
}

/// Upper `p`-series `1 ≤ O_{p'} ≤ O_{p',p} ≤ …` as subgroups of `G`, with
/// repeated terms removed.
pub fn upper_p_series(g: &FiniteGroup, p: u64) -> Result<SeriesReport> {
    check_prime(p)?;
    if !is_solvable(g) {
        return Err(Error::NotSolvable);
    }
    let mut terms = vec![g.trivial_subgroup()];
    let mut q = g.clone();
    // projection from G onto the current quotient
    let mut proj: Vec<usize> = (0..g.order()).collect();
    let mut want_p = false;
    let mut idle = 0;
    while q.order() > 1 {
        let n = if want_p {
            core_p(&q, p)?
        } else {
            core_p_prime(&q, p)?
        };
        want_p = !want_p;
        if n.is_trivial() {
            idle += 1;
            if idle == 2 {
                return Err(Error::NotSolvable);
            }
            continue;
        }
        idle = 0;
        let quo = q.quotient(&n)?;
        for x in proj.iter_mut() {
            *x = quo.projection[*x];
        }
        let members: Vec<usize> = (0..g.order()).filter(|&x| proj[x] == 0).collect();
        terms.push(g.subgroup_from_members(&members));
        q = quo.group;
    }
    Ok(SeriesReport {
        kind: SeriesKind::UpperP(p),
        terms,
        stabilized: true,
    })
}

/// Number of `p`-factors in the upper `p`-series; 0 for the trivial group.
pub fn p_length(g: &FiniteGroup, p: u64) -> Result<usize> {
    let s = upper_p_series(g, p)?;
    Ok(s.terms
        .windows(2)
        .filter(|w| is_power_of((w[1].order() / w[0].order()) as u64, p))
        .count())
}

#[derive(Clone, Debug)]
pub struct Frobenius {
    pub kernel: Subgroup,
    pub complement: Subgroup,
}

/// Whether `C_G(k) ⊆ K` for every non-identity `k` in the normal subgroup `K`.
fn centralizers_inside(g: &FiniteGroup, k: &Subgroup) -> bool {
    let mut seen = vec![false; g.class_count()];
    for &x in k.members() {
        let c = g.class_of(x);
        if x == 0 || seen[c] {
            continue;
        }
        seen[c] = true;
        let r = g.classes()[c].representative();
        let inside = (0..g.order())
            .filter(|&y| !k.contains(y))
            .all(|y| g.mul(y, r) != g.mul(r, y));
        if !inside {
            return false;
        }
    }
    true
}

/// A subgroup of order `m` meeting `k` trivially.
fn find_complement(g: &FiniteGroup, k: &Subgroup, m: usize) -> Option<Subgroup> {
    let divides = |x: usize| (m as u64).is_multiple_of(g.element_order(x)) && !k.contains(x);
    let reps: Vec<usize> = g
        .classes()
        .iter()
        .map(|c| c.representative())
        .filter(|&x| x != 0 && divides(x))
        .collect();
    let ok = |h: &Subgroup| h.order() == m && h.members().iter().all(|&x| x == 0 || !k.contains(x));
    for &x in &reps {
        if g.element_order(x) as usize == m {
            return Some(g.subgroup_generated(&[x]));
        }
    }
    for &x in &reps {
        let hx = g.subgroup_generated(&[x]);
        for y in 1..g.order() {
            if hx.contains(y) || !divides(y) {
                continue;
            }
            let h = g.subgroup_generated(&[x, y]);
            if ok(&h) {
                return Some(h);
            }
        }
    }
    if g.order() < 200 {
        return all_subgroups(g).into_iter().find(|h| ok(h));
    }
    None
}

/// Kernel and complement when `G` is a Frobenius group.
pub fn frobenius_structure(g: &FiniteGroup) -> Option<Frobenius> {
    if g.order() < 6 || g.is_abelian() {
        return None;
    }
    // a Frobenius group has trivial center
    if g.classes().iter().skip(1).any(|c| c.size() == 1) {
        return None;
    }
    let lattice = normal_subgroups(g);
    let n = g.order();
    for k in lattice.members() {
        let ko = k.order();
        if ko == 1 || ko == n {
            continue;
        }
        let m = n / ko;
        if num_integer::gcd(ko, m) != 1 || (ko - 1) % m != 0 {
            continue;
        }
        if !centralizers_inside(g, k) {
            continue;
        }
        let complement = find_complement(g, k, m)?;
        debug_assert!(is_nilpotent_section(g, k, &g.trivial_subgroup()));
        return Some(Frobenius {
            kernel: k.clone(),
            complement,
        });
    }
    None
}

/// Every subgroup, by iterated closure of pairs. Intended for small groups.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen: HashSet<Subgroup> = HashSet::new();
    let mut out: Vec<Subgroup> = Vec::new();
    let cyclic: Vec<Subgroup> = (0..g.order())
        .map(|x| g.subgroup_generated(&[x]))
        .filter(|h| seen.insert(h.clone()))
        .collect();
    out.extend(cyclic.iter().cloned());
    let mut k = 0;
    while k < out.len() {
        let h = out[k].clone();
        for c in &cyclic {
            if c.is_subgroup_of(&h) {
                continue;
            }
            let j = g.join(&h, c);
            if seen.insert(j.clone()) {
                out.push(j);
            }
        }
        k += 1;
    }
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members().cmp(b.members()))
    });
    out
}
