//! Exact elements of `Z[ζ_e]`.
//!
//! A value is stored as a coefficient vector over all powers `ζ_e^0, ..,
//! ζ_e^(e-1)`. This spanning set is not a basis, so equality is decided by a
//! zero test on the difference: the value is evaluated at a primitive `e`-th
//! root of unity modulo two primes `≡ 1 (mod e)`; a nonzero residue proves the
//! value nonzero, and when both residues vanish the polynomial is reduced
//! modulo the cyclotomic polynomial `Φ_e` over the integers.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;

use crate::arith::{
    divisors, mobius, mul_mod, prime_divisors, prime_one_mod, reduce_signed, root_of_unity,
};

struct FieldData {
    /// Monic `Φ_e`, low degree first.
    phi: Vec<i64>,
    /// `(prime, primitive e-th root modulo prime)`.
    probes: [(u64, u64); 2],
    /// Prime divisors of `e`.
    primes: Vec<u64>,
}

fn field(e: u64) -> Arc<FieldData> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&e) {
        return f.clone();
    }
    let phi = cyclotomic_polynomial(e);
    let p1 = prime_one_mod(e, 1 << 30, u64::MAX >> 2).expect("prime exists");
    let p2 = prime_one_mod(e, p1, u64::MAX >> 2).expect("prime exists");
    let data = Arc::new(FieldData {
        phi,
        probes: [(p1, root_of_unity(e, p1)), (p2, root_of_unity(e, p2))],
        primes: prime_divisors(e),
    });
    cache.lock().unwrap().insert(e, data.clone());
    data
}

/// `Φ_n = Π_{d | n} (x^d - 1)^μ(n/d)`, coefficients low degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    let mut poly: Vec<i64> = vec![1];
    let ds = divisors(n);
    for &d in &ds {
        if mobius(n / d) == 1 {
            // multiply by x^d - 1
            let d = d as usize;
            let mut next = vec![0i64; poly.len() + d];
            for (i, &c) in poly.iter().enumerate() {
                next[i + d] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &d in &ds {
        if mobius(n / d) == -1 {
            // exact division by x^d - 1
            let d = d as usize;
            let qlen = poly.len() - d;
            let mut q = vec![0i64; qlen];
            for k in (0..qlen).rev() {
                let above = if k + d < qlen { q[k + d] } else { 0 };
                q[k] = poly[k + d] + above;
            }
            poly = q;
        }
    }
    poly
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    pub fn from_coeffs(order: u64, coeffs: Vec<i64>) -> Self {
        assert!(order >= 1);
        assert_eq!(coeffs.len() as u64, order, "need one coefficient per power");
        Cyclotomic { order, coeffs }
    }

    pub fn zero(order: u64) -> Self {
        Cyclotomic {
            order,
            coeffs: vec![0; order as usize],
        }
    }

    pub fn integer(order: u64, n: i64) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = n;
        z
    }

    /// `ζ_order^k`.
    pub fn root(order: u64, k: u64) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[(k % order) as usize] = 1;
        z
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Rewrites the value over `ζ_new` where `order | new`.
    pub fn lift(&self, new: u64) -> Cyclotomic {
        assert_eq!(
            new % self.order,
            0,
            "{new} is not a multiple of {}",
            self.order
        );
        if new == self.order {
            return self.clone();
        }
        let step = (new / self.order) as usize;
        let mut out = Self::zero(new);
        for (j, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[j * step] = c;
        }
        out
    }

    fn common(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let e = self.order.lcm(&other.order);
        (self.lift(e), other.lift(e))
    }

    /// Complex conjugate: `ζ^j ↦ ζ^-j`.
    pub fn conj(&self) -> Cyclotomic {
        let e = self.order as usize;
        let mut out = Self::zero(self.order);
        for (j, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[(e - j) % e] += c;
        }
        out
    }

    /// Galois action `ζ ↦ ζ^k` for `k` coprime to the order.
    pub fn galois(&self, k: u64) -> Cyclotomic {
        let e = self.order as usize;
        let mut out = Self::zero(self.order);
        for (j, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[(j * k as usize) % e] += c;
        }
        out
    }

    pub fn scale(&self, k: i64) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    /// Value mod `p` with `ζ ↦ z`.
    pub fn eval_mod(&self, p: u64, z: u64) -> u64 {
        let mut acc = 0u64;
        let mut zj = 1u64;
        for &c in &self.coeffs {
            if c != 0 {
                acc = (acc + mul_mod(reduce_signed(c, p), zj, p)) % p;
            }
            zj = mul_mod(zj, z, p);
        }
        acc
    }

    /// Coefficients reduced modulo `Φ_e`: the unique representative of
    /// degree below `φ(e)`, padded with zeros to length `e`.
    pub fn reduced(&self) -> Cyclotomic {
        let f = field(self.order);
        let deg = f.phi.len() - 1;
        let mut a: Vec<i128> = self.coeffs.iter().map(|&c| c as i128).collect();
        for i in (deg..a.len()).rev() {
            let c = a[i];
            if c == 0 {
                continue;
            }
            let shift = i - deg;
            for (j, &pj) in f.phi.iter().enumerate() {
                a[shift + j] -= c * pj as i128;
            }
            debug_assert_eq!(a[i], 0);
        }
        Cyclotomic {
            order: self.order,
            coeffs: a
                .into_iter()
                .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
                .collect(),
        }
    }

    /// Canonical key: reduced coefficients, independent of how the value was
    /// written. Only comparable between values of the same order.
    pub fn canonical_key(&self) -> Vec<i64> {
        self.reduced().coeffs
    }

    pub fn is_zero(&self) -> bool {
        if self.coeffs.iter().all(|&c| c == 0) {
            return true;
        }
        let f = field(self.order);
        // invariant under ζ ↦ ζ·ζ^(e/p): a sum of rotated complete p-cycles
        let e = self.coeffs.len();
        for &p in &f.primes {
            let shift = e / p as usize;
            if (0..e).all(|j| self.coeffs[j] == self.coeffs[(j + shift) % e]) {
                return true;
            }
        }
        for &(p, z) in &f.probes {
            if self.eval_mod(p, z) != 0 {
                return false;
            }
        }
        self.reduced().coeffs.iter().all(|&c| c == 0)
    }

    /// The rational integer this value equals, if any.
    pub fn as_integer(&self) -> Option<i64> {
        let r = self.reduced();
        if r.coeffs[1..].iter().all(|&c| c == 0) {
            Some(r.coeffs[0])
        } else {
            None
        }
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let e = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold((0.0, 0.0), |(re, im), (j, &c)| {
                let t = std::f64::consts::TAU * j as f64 / e;
                (re + c as f64 * t.cos(), im + c as f64 * t.sin())
            })
    }

    pub fn abs(&self) -> f64 {
        let (re, im) = self.to_complex();
        re.hypot(im)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        if a.coeffs == b.coeffs {
            return true;
        }
        (&a - &b).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.scale(-1)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(rhs);
        let e = a.order as usize;
        let bn: Vec<(usize, i64)> = b
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| (j, c))
            .collect();
        let mut out = Cyclotomic::zero(a.order);
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &(j, y) in &bn {
                let k = if i + j >= e { i + j - e } else { i + j };
                out.coeffs[k] += x * y;
            }
        }
        out
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            let term = if j == 0 {
                format!("{mag}")
            } else if mag == 1 {
                format!("z{}^{j}", self.order)
            } else {
                format!("{mag}*z{}^{j}", self.order)
            };
            write!(f, "{sign}{term}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(30).len() - 1, 8);
    }

    #[test]
    fn sum_of_all_roots_is_zero() {
        for e in [2u64, 3, 5, 6, 12, 30, 91] {
            let all = Cyclotomic::from_coeffs(e, vec![1; e as usize]);
            assert!(all.is_zero(), "e = {e}");
        }
    }

    #[test]
    fn primitive_cube_roots() {
        // ζ3 + ζ3² = -1
        let w = Cyclotomic::root(3, 1);
        let w2 = Cyclotomic::root(3, 2);
        assert_eq!(&w + &w2, Cyclotomic::integer(3, -1));
        assert_eq!((&w + &w2).as_integer(), Some(-1));
        assert_eq!(w.conj(), w2);
    }

    #[test]
    fn golden_ratio_over_thirty() {
        // (1 + √5)/2 = 1 + ζ5 + ζ5^4, with ζ5 = ζ30^6
        let phi = Cyclotomic::from_coeffs(30, {
            let mut v = vec![0; 30];
            v[0] = 1;
            v[6] = 1;
            v[24] = 1;
            v
        });
        let sq = &phi * &phi;
        assert_eq!(sq, &phi + &Cyclotomic::integer(30, 1));
        assert!(phi.as_integer().is_none());
        assert!((phi.to_complex().0 - 1.618_033_988_749_895).abs() < 1e-12);
    }

    #[test]
    fn equality_across_orders() {
        assert_eq!(Cyclotomic::root(2, 1), Cyclotomic::integer(6, -1));
        assert_eq!(Cyclotomic::root(3, 1).lift(6), Cyclotomic::root(6, 2));
        assert_ne!(Cyclotomic::root(4, 1), Cyclotomic::root(4, 3));
    }

    #[test]
    fn reduced_form_is_canonical() {
        let a = Cyclotomic::from_coeffs(6, vec![0, 1, 0, 0, 0, 0]);
        let b = Cyclotomic::from_coeffs(6, vec![1, 0, 1, 0, 0, 0]);
        // ζ6 = 1 + ζ6^2 since ζ6^2 - ζ6 + 1 = 0
        assert_eq!(a, b);
        assert_eq!(a.canonical_key(), b.canonical_key());
    }
}
