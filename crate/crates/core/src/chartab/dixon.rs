//! Burnside–Dixon character table construction.
//!
//! The class sums span a commutative algebra whose structure constants are
//! the class multiplication coefficients. Over a prime field `F_ℓ` with
//! `ℓ ≡ 1 (mod exp G)` and `ℓ > 2√|G|` the class matrices are simultaneously
//! diagonalizable with one-dimensional common eigenspaces, one per
//! irreducible character. Each eigenvector gives the central character
//! `ω_χ(C_k) = |C_k| χ(g_k) / χ(1)` mod ℓ, from which the degree and the
//! values mod ℓ follow; values are lifted to `Z[ζ_e]` by recovering the
//! eigenvalue multiplicities of each element through its power map.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::modular::{charpoly_hessenberg, hessenberg, nullspace, roots, rref, Matrix};
use super::CharacterTable;
use crate::arith::{inv_mod, is_prime, pow_mod, root_of_unity};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

const PRIME_BOUND: u64 = 1 << 31;
const RANDOM_ATTEMPTS: usize = 32;

/// Class multiplication coefficients `a[i][j][k]`: the number of pairs
/// `(x, y)` with `x ∈ C_i`, `y ∈ C_j` and `x y = g_k` for the fixed
/// representative `g_k` of class `k`. Stored sparsely per `i`, since the
/// class matrix of a small class has few nonzero entries.
#[derive(Clone, Debug)]
pub struct ClassConstants {
    r: usize,
    /// `entries[i]` holds `(j, k, a[i][j][k])` for the nonzero coefficients,
    /// sorted by `(j, k)`.
    entries: Vec<Vec<(u32, u32, u32)>>,
}

impl ClassConstants {
    pub fn new(g: &FiniteGroup) -> Self {
        let r = g.class_count();
        let mut entries: Vec<Vec<(u32, u32, u32)>> = vec![Vec::new(); r];
        let mut counts = vec![0u32; r * r];
        let mut touched = Vec::new();
        for (k, class) in g.classes().iter().enumerate() {
            let z = class.representative();
            for x in 0..g.order() {
                let i = g.class_of(x);
                let j = g.class_of(g.mul(g.inv(x), z));
                let slot = i * r + j;
                if counts[slot] == 0 {
                    touched.push(slot);
                }
                counts[slot] += 1;
            }
            for slot in touched.drain(..) {
                entries[slot / r].push(((slot % r) as u32, k as u32, counts[slot]));
                counts[slot] = 0;
            }
        }
        for list in &mut entries {
            list.sort_unstable();
        }
        ClassConstants { r, entries }
    }

    pub fn class_count(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        let list = &self.entries[i];
        list.binary_search_by(|&(a, b, _)| (a as usize, b as usize).cmp(&(j, k)))
            .map_or(0, |pos| list[pos].2)
    }

    /// `M_i v` for the class matrix `M_i[j][k] = a[i][j][k]`, modulo `p`.
    fn apply(&self, i: usize, v: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; self.r];
        for &(j, k, a) in &self.entries[i] {
            let x = v[k as usize];
            if x != 0 {
                let slot = &mut out[j as usize];
                *slot = (*slot + a as u64 * x) % p;
            }
        }
        out
    }
}

/// Smallest prime `ℓ ≡ 1 (mod e)` with `ℓ² > 4|G|`.
pub fn working_prime(exponent: u64, order: u64) -> Result<u64> {
    let mut k = 1u64;
    loop {
        let p = k * exponent + 1;
        if p > PRIME_BOUND {
            return Err(Error::NoWorkingPrime {
                exponent,
                bound: PRIME_BOUND,
            });
        }
        if (p as u128) * (p as u128) > 4 * order as u128 && is_prime(p) {
            return Ok(p);
        }
        k += 1;
    }
}

/// An invariant subspace stored as a basis in reduced row echelon form.
struct Space {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Space {
    fn new(mut basis: Matrix, p: u64) -> Self {
        let pivots = rref(&mut basis, p);
        Space { basis, pivots }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Applies the operator to a vector: `(M v)_j = Σ_k M[j][k] v_k`.
type Operator<'a> = dyn Fn(&[u64]) -> Vec<u64> + 'a;

/// Splits `space` into eigenspaces of `op`; `None` if `op` is scalar on it.
fn split(space: &Space, op: &Operator<'_>, p: u64) -> Result<Option<Vec<Space>>> {
    let d = space.dim();
    // restricted matrix: column t holds the coordinates of op(b_t)
    let mut a: Matrix = vec![vec![0u64; d]; d];
    for (t, b) in space.basis.iter().enumerate() {
        let image = op(b);
        for (s, &pc) in space.pivots.iter().enumerate() {
            a[s][t] = image[pc];
        }
    }
    let (h, q) = hessenberg(&a, p, true);
    let q = q.expect("tracked");
    let cp = charpoly_hessenberg(&h, p);
    let eig = roots(&cp, p);
    if eig.len() <= 1 {
        return Ok(None);
    }
    let mut parts = Vec::with_capacity(eig.len());
    let mut total = 0;
    for lambda in eig {
        let mut shifted = h.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = (row[i] + p - lambda) % p;
        }
        // eigenvectors of H, moved back through Q
        let coords: Matrix = nullspace(&shifted, p)
            .into_iter()
            .map(|x| {
                (0..d)
                    .map(|i| {
                        q[i].iter()
                            .zip(&x)
                            .fold(0u64, |acc, (&qi, &xi)| (acc + qi * xi) % p)
                    })
                    .collect()
            })
            .collect();
        total += coords.len();
        let vectors: Matrix = coords
            .iter()
            .map(|c| {
                let mut v = vec![0u64; space.basis[0].len()];
                for (s, &cs) in c.iter().enumerate() {
                    if cs == 0 {
                        continue;
                    }
                    for (x, &y) in v.iter_mut().zip(&space.basis[s]) {
                        *x = (*x + cs * y) % p;
                    }
                }
                v
            })
            .collect();
        parts.push(Space::new(vectors, p));
    }
    if total != d {
        return Err(Error::LiftInconsistent(format!(
            "class matrix not diagonalizable on a {d}-dimensional subspace"
        )));
    }
    Ok(Some(parts))
}

fn settle(spaces: Vec<Space>, pending: &mut Vec<Space>, done: &mut Vec<Vec<u64>>) {
    for s in spaces {
        if s.dim() == 1 {
            done.push(s.basis.into_iter().next().unwrap());
        } else {
            pending.push(s);
        }
    }
}

pub(super) fn build(group: Arc<FiniteGroup>, seed: u64) -> Result<CharacterTable> {
    let g = group.as_ref();
    let n = g.order() as u64;
    let r = g.class_count();
    let e = g.exponent();
    let p = working_prime(e, n)?;
    if g.is_abelian() {
        let rows = abelian_rows(g);
        return finish(group.clone(), e, p, rows, power_maps(g), seed);
    }
    let consts = ClassConstants::new(g);

    let class_matrix = |i: usize| -> Box<Operator<'_>> {
        let consts = &consts;
        Box::new(move |v: &[u64]| consts.apply(i, v, p))
    };

    // ascending class size, identity class excluded
    let mut order: Vec<usize> = (1..r).collect();
    order.sort_by_key(|&i| (g.classes()[i].size(), i));

    let identity: Matrix = (0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect();
    let mut pending = vec![Space::new(identity, p)];
    let mut done: Vec<Vec<u64>> = Vec::new();

    {
        let initial = std::mem::take(&mut pending);
        settle(initial, &mut pending, &mut done);
    }

    for &i in &order {
        if pending.is_empty() {
            break;
        }
        let op = class_matrix(i);
        let current = std::mem::take(&mut pending);
        for space in current {
            match split(&space, op.as_ref(), p)? {
                Some(parts) => settle(parts, &mut pending, &mut done),
                None => pending.push(space),
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    while !pending.is_empty() {
        if attempts == RANDOM_ATTEMPTS {
            return Err(Error::SplitFailure { attempts });
        }
        attempts += 1;
        let weights: Vec<u64> = (0..r).map(|_| rng.gen_range(0..p)).collect();
        let ops: Vec<Box<Operator<'_>>> = (0..r).map(class_matrix).collect();
        let combo = |v: &[u64]| -> Vec<u64> {
            let mut out = vec![0u64; r];
            for (op, &w) in ops.iter().zip(&weights) {
                if w == 0 {
                    continue;
                }
                for (x, y) in out.iter_mut().zip(op(v)) {
                    *x = (*x + w * y) % p;
                }
            }
            out
        };
        let current = std::mem::take(&mut pending);
        for space in current {
            match split(&space, &combo, p)? {
                Some(parts) => settle(parts, &mut pending, &mut done),
                None => pending.push(space),
            }
        }
    }

    if done.len() != r {
        return Err(Error::LiftInconsistent(format!(
            "found {} common eigenvectors for {r} classes",
            done.len()
        )));
    }

    let sizes: Vec<u64> = g.class_sizes().iter().map(|&s| s as u64).collect();
    let inverse_class: Vec<usize> = g
        .classes()
        .iter()
        .map(|c| g.class_of(g.inv(c.representative())))
        .collect();
    let power_maps = power_maps(g);
    let zeta = root_of_unity(e, p);
    let max_degree = (1..=n).take_while(|d| d * d <= n).last().unwrap_or(1);

    // per class: the classes met by the powers of g_c, and the sums
    // o⁻¹ Σ_{t : g_c^t ∈ κ} z^(-jt) for each such class κ and each j < o
    let lift: Vec<(Vec<usize>, Vec<Vec<u64>>)> = power_maps
        .iter()
        .map(|pm| {
            let o = pm.len() as u64;
            let z_inv = inv_mod(pow_mod(zeta, e / o, p), p);
            let o_inv = inv_mod(o % p, p);
            let mut kappas: Vec<usize> = pm.clone();
            kappas.sort_unstable();
            kappas.dedup();
            let sums = (0..o)
                .map(|j| {
                    let zj = pow_mod(z_inv, j, p);
                    let mut out = vec![0u64; kappas.len()];
                    let mut zt = o_inv;
                    for &class in pm {
                        let slot = kappas.binary_search(&class).unwrap();
                        out[slot] = (out[slot] + zt) % p;
                        zt = zt * zj % p;
                    }
                    out
                })
                .collect();
            (kappas, sums)
        })
        .collect();

    let mut rows: Vec<(u64, Vec<Cyclotomic>)> = Vec::with_capacity(r);
    for w in done {
        if w[0] == 0 {
            return Err(Error::LiftInconsistent(
                "eigenvector vanishes on the identity class".into(),
            ));
        }
        let norm = inv_mod(w[0], p);
        let w: Vec<u64> = w.iter().map(|&x| x * norm % p).collect();

        // d^2 = |G| / Σ_k ω_k ω_{k*} / |C_k|
        let s = (0..r).fold(0u64, |acc, k| {
            let t = w[k] * w[inverse_class[k]] % p * inv_mod(sizes[k] % p, p) % p;
            (acc + t) % p
        });
        if s == 0 {
            return Err(Error::LiftInconsistent(
                "zero norm for a central character".into(),
            ));
        }
        let target = (n % p) * inv_mod(s, p) % p;
        let degree = (1..=max_degree)
            .find(|&d| d * d % p == target)
            .ok_or_else(|| Error::LiftInconsistent("no admissible degree".into()))?;

        let values_mod: Vec<u64> = (0..r)
            .map(|k| degree % p * w[k] % p * inv_mod(sizes[k] % p, p) % p)
            .collect();

        let mut values = Vec::with_capacity(r);
        for (c, (kappas, sums)) in lift.iter().enumerate() {
            let step = e / sums.len() as u64;
            let mut coeffs = vec![0i64; e as usize];
            for (j, weights) in sums.iter().enumerate() {
                let m = kappas
                    .iter()
                    .zip(weights)
                    .fold(0u64, |acc, (&k, &wt)| (acc + values_mod[k] * wt) % p);
                if m > degree {
                    return Err(Error::LiftInconsistent(format!(
                        "multiplicity {m} exceeds degree {degree} at class {c}"
                    )));
                }
                coeffs[j * step as usize] = m as i64;
            }
            values.push(Cyclotomic::from_coeffs(e, coeffs));
        }
        rows.push((degree, values));
    }

    finish(group, e, p, rows, power_maps, seed)
}

/// `pm[c][t]` is the class of `g_c^t`, for `t` below the order of `g_c`.
fn power_maps(g: &FiniteGroup) -> Vec<Vec<usize>> {
    g.classes()
        .iter()
        .map(|c| {
            let x = c.representative();
            let o = g.element_order(x) as usize;
            let mut out = Vec::with_capacity(o);
            let mut y = 0;
            for _ in 0..o {
                out.push(g.class_of(y));
                y = g.mul(y, x);
            }
            out
        })
        .collect()
}

/// Sorts the rows, assembles the table and verifies it.
fn finish(
    group: Arc<FiniteGroup>,
    e: u64,
    p: u64,
    mut rows: Vec<(u64, Vec<Cyclotomic>)>,
    power_maps: Vec<Vec<usize>>,
    seed: u64,
) -> Result<CharacterTable> {
    // ascending degree, then descending coefficient flattening (puts the
    // trivial character first)
    rows.sort_by(|(da, va), (db, vb)| {
        da.cmp(db).then_with(|| {
            let fa = va.iter().flat_map(|v| v.coeffs().iter());
            let fb = vb.iter().flat_map(|v| v.coeffs().iter());
            fb.cmp(fa)
        })
    });

    let (degrees, rows): (Vec<u64>, Vec<Vec<Cyclotomic>>) = rows.into_iter().unzip();
    let table = CharacterTable {
        group,
        exponent: e,
        prime: p,
        degrees,
        rows,
        power_maps,
        seed,
    };
    table.verify()?;
    Ok(table)
}

/// Linear characters of an abelian group, built by extension along the
/// generators: when `x^m` is the first power of `x` inside `H`, every
/// `λ ∈ Irr(H)` has exactly `m` extensions to `⟨H, x⟩`, one for each `m`-th
/// root of `λ(x^m)`. Values are kept as exponents of `ζ_e`.
fn abelian_rows(g: &FiniteGroup) -> Vec<(u64, Vec<Cyclotomic>)> {
    let n = g.order();
    let e = g.exponent();
    let mut members = vec![0usize];
    let mut pos = vec![usize::MAX; n];
    pos[0] = 0;
    let mut chars: Vec<Vec<u64>> = vec![vec![0]];
    for &x in g.generator_indices() {
        if pos[x] != usize::MAX {
            continue;
        }
        let mut m = 1u64;
        let mut y = x;
        while pos[y] == usize::MAX {
            y = g.mul(y, x);
            m += 1;
        }
        let anchor = pos[y];
        let old = members.len();
        let mut xj = 0;
        for _ in 1..m {
            xj = g.mul(xj, x);
            for i in 0..old {
                let z = g.mul(members[i], xj);
                pos[z] = members.len();
                members.push(z);
            }
        }
        let step = e / m;
        let mut next = Vec::with_capacity(chars.len() * m as usize);
        for lam in &chars {
            // λ(x^m) has order dividing o(x)/m, so its exponent is divisible by m
            let a = lam[anchor];
            debug_assert_eq!(a % m, 0);
            for t in 0..m {
                let b = (a / m + t * step) % e;
                let mut ext = lam.clone();
                for j in 1..m {
                    ext.extend(lam.iter().map(|&v| (v + b * j) % e));
                }
                next.push(ext);
            }
        }
        chars = next;
    }
    debug_assert_eq!(members.len(), n);
    chars
        .into_iter()
        .map(|lam| {
            let values = g
                .classes()
                .iter()
                .map(|c| Cyclotomic::root(e, lam[pos[c.representative()]]))
                .collect();
            (1, values)
        })
        .collect()
}
