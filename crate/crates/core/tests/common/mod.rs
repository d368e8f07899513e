//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's own lattice, series or table machinery; only raw element
//! data (multiplication, classes, element orders) is taken from the group.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use codegree::{Cyclotomic, FiniteGroup};

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

pub fn corpus_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus/default.corpus")
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

pub fn primes_of(n: u64) -> BTreeSet<u64> {
    (2..=n)
        .filter(|&p| is_prime(p) && n.is_multiple_of(p))
        .collect()
}

pub fn is_closed(g: &FiniteGroup, members: &[usize]) -> bool {
    let set: BTreeSet<usize> = members.iter().copied().collect();
    members
        .iter()
        .all(|&a| members.iter().all(|&b| set.contains(&g.mul(a, b))))
}

/// Normal subgroups as unions of classes containing the identity that are
/// closed under multiplication. Exponential in the class count.
pub fn brute_normal_subgroups(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let classes = g.classes();
    let r = classes.len();
    assert!(r <= 22, "too many classes for the brute-force oracle");
    let n = g.order();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << (r - 1)) {
        let size: usize = 1
            + (1..r)
                .filter(|i| mask >> (i - 1) & 1 == 1)
                .map(|i| classes[i].size())
                .sum::<usize>();
        if !n.is_multiple_of(size) {
            continue;
        }
        let mut members: Vec<usize> = classes[0].elements().to_vec();
        for (i, class) in classes.iter().enumerate().skip(1) {
            if mask >> (i - 1) & 1 == 1 {
                members.extend_from_slice(class.elements());
            }
        }
        members.sort_unstable();
        if is_closed(g, &members) {
            out.insert(members);
        }
    }
    out
}

/// Closure of a set of elements under multiplication.
pub fn close(g: &FiniteGroup, seed: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = seed.iter().copied().collect();
    set.insert(0);
    loop {
        let cur: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &a in &cur {
            for &b in &cur {
                set.insert(g.mul(a, b));
            }
        }
        if set.len() == before {
            return cur;
        }
    }
}

/// Subgroup generated by all commutators `[a, b]` with `a ∈ x`, `b ∈ y`.
pub fn brute_commutator(g: &FiniteGroup, x: &[usize], y: &[usize]) -> Vec<usize> {
    let mut comms = Vec::new();
    for &a in x {
        for &b in y {
            let ab = g.mul(a, b);
            let ba = g.mul(b, a);
            comms.push(g.mul(g.inv(ba), ab));
        }
    }
    close(g, &comms)
}

/// Orders of the derived series terms, stopping when it stabilizes.
pub fn brute_derived_orders(g: &FiniteGroup) -> Vec<usize> {
    let mut cur: Vec<usize> = (0..g.order()).collect();
    let mut out = vec![cur.len()];
    loop {
        let next = brute_commutator(g, &cur, &cur);
        if next.len() == cur.len() {
            return out;
        }
        out.push(next.len());
        cur = next;
    }
}

pub fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Largest normal p-subgroup, from a list of all normal subgroups.
pub fn brute_core_p(normals: &BTreeSet<Vec<usize>>, p: u64) -> Vec<usize> {
    normals
        .iter()
        .filter(|n| is_power_of(n.len() as u64, p))
        .max_by_key(|n| n.len())
        .cloned()
        .unwrap()
}

/// Largest normal subgroup of order prime to `p`.
pub fn brute_core_p_prime(normals: &BTreeSet<Vec<usize>>, p: u64) -> Vec<usize> {
    normals
        .iter()
        .filter(|n| !(n.len() as u64).is_multiple_of(p))
        .max_by_key(|n| n.len())
        .cloned()
        .unwrap()
}

/// Nilpotency via "every Sylow subgroup is normal", element by element.
pub fn brute_is_nilpotent(g: &FiniteGroup, members: &[usize]) -> bool {
    let n = members.len() as u64;
    primes_of(n).into_iter().all(|p| {
        let p_elems: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&x| is_power_of(g.element_order(x), p))
            .collect();
        let mut full = 1;
        let mut m = n;
        while m.is_multiple_of(p) {
            m /= p;
            full *= p;
        }
        // a normal Sylow subgroup is exactly the set of p-elements
        p_elems.len() as u64 == full && is_closed(g, &p_elems)
    })
}

/// `H` acts fixed-point-freely on `K`: only the identity of `K` commutes
/// with a non-identity element of `H`.
pub fn acts_fixed_point_freely(g: &FiniteGroup, h: &[usize], k: &[usize]) -> bool {
    h.iter().filter(|&&x| x != 0).all(|&x| {
        k.iter()
            .filter(|&&y| y != 0)
            .all(|&y| g.mul(x, y) != g.mul(y, x))
    })
}

/// `x ↦ u^j·x + b` on `Z_p`: returns `(j, b)` for the element of the affine
/// realization of `C_p ⋊ C_m` built on points `0..p`.
pub fn affine_coords(g: &FiniteGroup, i: usize, p: u64, u: u64) -> (u64, u64) {
    let e = g.element(i);
    let b = e.apply(0) as u64;
    let a = (e.apply(1) as u64 + p - b) % p;
    let mut j = 0;
    let mut x = 1;
    while x != a {
        x = x * u % p;
        j += 1;
        assert!(j < p, "not an affine element");
    }
    (j, b)
}

/// Hand character table of `C_p ⋊ C_m` (`p` prime, `u` of multiplicative
/// order `m` mod `p`), one row per character, one value per class of `g`:
/// the `m` lifts of characters of `C_m`, then `(p-1)/m` induced characters
/// of degree `m` with `ψ_c(x + b) = Σ_s ζ_p^{c·u^s·b}`.
pub fn affine_frobenius_table(g: &FiniteGroup, m: u64, p: u64, u: u64) -> Vec<Vec<Cyclotomic>> {
    let e = m * p;
    let reps: Vec<(u64, u64)> = g
        .classes()
        .iter()
        .map(|c| affine_coords(g, c.representative(), p, u))
        .collect();
    let mut rows = Vec::new();
    for i in 0..m {
        rows.push(
            reps.iter()
                .map(|&(j, _)| Cyclotomic::root(e, p * (i * j % m)))
                .collect(),
        );
    }
    let orbit: Vec<u64> = (0..m)
        .scan(1, |x, _| {
            let cur = *x;
            *x = *x * u % p;
            Some(cur)
        })
        .collect();
    let mut seen = BTreeSet::new();
    for c in 1..p {
        if seen.contains(&c) {
            continue;
        }
        let coset: Vec<u64> = orbit.iter().map(|s| c * s % p).collect();
        seen.extend(coset.iter().copied());
        rows.push(
            reps.iter()
                .map(|&(j, b)| {
                    if j != 0 {
                        return Cyclotomic::zero(e);
                    }
                    coset.iter().fold(Cyclotomic::zero(e), |acc, &k| {
                        &acc + &Cyclotomic::root(e, m * (k * b % p))
                    })
                })
                .collect(),
        );
    }
    rows
}

/// Hand character table of the dihedral group of order `2n`, `n` odd:
/// trivial, sign, and `ψ_j(r^k) = ζ^{jk} + ζ^{-jk}` for `1 ≤ j < n/2`.
pub fn odd_dihedral_table(g: &FiniteGroup, n: u64) -> Vec<Vec<Cyclotomic>> {
    assert!(n % 2 == 1);
    let e = 2 * n;
    let r = (0..g.order()).find(|&i| g.element_order(i) == n).unwrap();
    let rot_exp = |x: usize| -> Option<u64> {
        let mut y = 0usize;
        for k in 0..n {
            if y == x {
                return Some(k);
            }
            y = g.mul(y, r);
        }
        None
    };
    let reps: Vec<Option<u64>> = g
        .classes()
        .iter()
        .map(|c| rot_exp(c.representative()))
        .collect();
    let mut rows = vec![
        reps.iter()
            .map(|_| Cyclotomic::integer(e, 1))
            .collect::<Vec<_>>(),
        reps.iter()
            .map(|k| Cyclotomic::integer(e, if k.is_some() { 1 } else { -1 }))
            .collect(),
    ];
    for j in 1..=n / 2 {
        rows.push(
            reps.iter()
                .map(|k| match k {
                    Some(k) => {
                        let t = 2 * (j * k % n);
                        &Cyclotomic::root(e, t) + &Cyclotomic::root(e, (e - t) % e)
                    }
                    None => Cyclotomic::zero(e),
                })
                .collect(),
        );
    }
    rows
}

/// Codegree `|G : ker χ| / χ(1)` straight from a table of values.
pub fn codegrees_of(g: &FiniteGroup, rows: &[Vec<Cyclotomic>]) -> BTreeSet<u64> {
    rows.iter()
        .map(|row| {
            let d = &row[0];
            let ker: usize = g
                .classes()
                .iter()
                .zip(row)
                .filter(|(_, v)| *v == d)
                .map(|(c, _)| c.size())
                .sum();
            let deg = d.as_integer().unwrap() as u64;
            (g.order() / ker) as u64 / deg
        })
        .collect()
}

/// Rows of `a` and `b` agree as multisets, class by class.
pub fn same_rows(a: &[Vec<Cyclotomic>], b: &[Vec<Cyclotomic>]) -> bool {
    let mut left: Vec<&Vec<Cyclotomic>> = a.iter().collect();
    if left.len() != b.len() {
        return false;
    }
    for row in b {
        match left.iter().position(|r| *r == row) {
            Some(i) => {
                left.swap_remove(i);
            }
            None => return false,
        }
    }
    true
}

/// A unit of multiplicative order exactly `m` modulo the prime `p`.
pub fn unit_of_order(m: u64, p: u64) -> Option<u64> {
    (2..p).chain([1]).find(|&u| {
        let mut x = 1;
        for k in 1..=m {
            x = x * u % p;
            if x == 1 {
                return k == m;
            }
        }
        false
    })
}
