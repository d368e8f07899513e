//! Group constructors, recipes, and corpus files.

mod recipe;

pub use recipe::{load_corpus, parse_corpus, CorpusEntry, Recipe, CORPUS_HEADER};

use num_integer::Integer;

use crate::arith::{is_prime, pow_mod};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::perm::Permutation;

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let points: Vec<usize> = points.into_iter().collect();
    if points.len() < 2 {
        return Permutation::identity(degree);
    }
    Permutation::from_cycles(degree, &[points]).expect("valid cycle")
}

/// Cyclic group of order `n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::BadParameter("cyclic group needs n >= 1".into()));
    }
    FiniteGroup::from_generators(n, vec![cycle(n, 0..n)])
}

/// `(C_p)^k` as `k` disjoint commuting `p`-cycles on `k·p` points.
pub fn elementary_abelian(p: u64, k: usize) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p = p as usize;
    let degree = (p * k).max(1);
    let gens = (0..k).map(|i| cycle(degree, i * p..(i + 1) * p)).collect();
    FiniteGroup::from_generators(degree, gens)
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::BadParameter("dihedral(n) needs n >= 3".into()));
    }
    let rotation = cycle(n, 0..n);
    let reflection = Permutation::from_images((0..n).map(|x| ((n - x) % n) as u32).collect())?;
    FiniteGroup::from_generators(n, vec![rotation, reflection])
}

/// Quaternion group, right regular action on `±1, ±i, ±j, ±k`.
pub fn quaternion8() -> Result<FiniteGroup> {
    // points: 1, i, j, k, -1, -i, -j, -k
    let i = Permutation::from_cycles(8, &[vec![0, 1, 4, 5], vec![2, 7, 6, 3]])?;
    let j = Permutation::from_cycles(8, &[vec![0, 2, 4, 6], vec![1, 3, 5, 7]])?;
    FiniteGroup::from_generators(8, vec![i, j])
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 6 {
        return Err(Error::BadParameter("symmetric(n) needs 1 <= n <= 6".into()));
    }
    FiniteGroup::from_generators(n, vec![cycle(n, 0..n), cycle(n, 0..2.min(n))])
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 6 {
        return Err(Error::BadParameter(
            "alternating(n) needs 1 <= n <= 6".into(),
        ));
    }
    let gens = (2..n).map(|k| cycle(n, [0, 1, k])).collect();
    FiniteGroup::from_generators(n, gens)
}

/// `A × B` acting on the disjoint union of the two point sets.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let (da, db) = (a.degree(), b.degree());
    let degree = da + db;
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut images: Vec<u32> = g.images().to_vec();
        images.extend(da as u32..degree as u32);
        gens.push(Permutation::from_images(images)?);
    }
    for g in b.generators() {
        let mut images: Vec<u32> = (0..da as u32).collect();
        images.extend(g.images().iter().map(|&x| x + da as u32));
        gens.push(Permutation::from_images(images)?);
    }
    FiniteGroup::from_generators(degree, gens)
}

/// `C_n ⋊ C_m` with the generator of `C_m` acting as `x ↦ u·x (mod n)`,
/// together with the complement `C_m` and the normal subgroup `C_n`.
#[derive(Clone, Debug)]
pub struct SemidirectCyclic {
    pub group: FiniteGroup,
    pub complement: Subgroup,
    pub kernel: Subgroup,
}

/// Realized on the `n` points of `C_n` (translations and the unit
/// multiplication); when `u` has order below `m` modulo `n` an extra
/// `m`-cycle keeps the acting group faithful, so the order is always `m·n`.
pub fn semidirect_cyclic(m: u64, n: u64, u: u64) -> Result<SemidirectCyclic> {
    if m == 0 || n == 0 {
        return Err(Error::BadParameter(
            "semidirect_cyclic needs m, n >= 1".into(),
        ));
    }
    if u.gcd(&n) != 1 {
        return Err(Error::BadAction(format!("gcd({u}, {n}) != 1")));
    }
    if pow_mod(u, m, n) != 1 % n {
        return Err(Error::BadAction(format!("{u}^{m} is not 1 mod {n}")));
    }
    let unit_order = (1..=m).find(|&k| pow_mod(u, k, n) == 1 % n).unwrap_or(1);
    let nn = n as usize;
    let extra = if unit_order < m { m as usize } else { 0 };
    let degree = (nn + extra).max(1);

    let mut t: Vec<u32> = (0..degree as u32).collect();
    let mut a: Vec<u32> = (0..degree as u32).collect();
    for x in 0..nn {
        t[x] = ((x + 1) % nn) as u32;
        a[x] = ((x as u64 * u) % n) as u32;
    }
    for i in 0..extra {
        a[nn + i] = (nn + (i + 1) % extra) as u32;
    }
    let t = Permutation::from_images(t)?;
    let a = Permutation::from_images(a)?;
    let group = FiniteGroup::from_generators(degree, vec![t.clone(), a.clone()])?;
    let ti = group.index_of(&t).expect("generator present");
    let ai = group.index_of(&a).expect("generator present");
    let kernel = group.subgroup_generated(&[ti]);
    let complement = group.subgroup_generated(&[ai]);
    debug_assert_eq!(group.order() as u64, m * n);
    Ok(SemidirectCyclic {
        group,
        complement,
        kernel,
    })
}
