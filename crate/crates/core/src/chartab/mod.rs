//! Exact irreducible character tables.

mod dixon;
pub mod dump;
mod modular;

use std::sync::Arc;

pub use dixon::{working_prime, ClassConstants};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// Irreducible characters of a group, one row per character and one column
/// per conjugacy class, with values in `Z[ζ_e]` for `e` the group exponent.
///
/// Rows are sorted by ascending degree and then by descending coefficient
/// flattening, so row 0 is always the trivial character.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    exponent: u64,
    prime: u64,
    degrees: Vec<u64>,
    rows: Vec<Vec<Cyclotomic>>,
    /// `power_maps[c][t]` is the class of `g_c^t` for `t < o(g_c)`.
    power_maps: Vec<Vec<usize>>,
    seed: u64,
}

impl CharacterTable {
    /// Runs the Burnside–Dixon construction. The seed only drives the
    /// fallback random splitting and never changes the resulting table.
    pub fn dixon(group: Arc<FiniteGroup>, seed: u64) -> Result<Self> {
        dixon::build(group, seed)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// The working prime of the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, row: usize) -> u64 {
        self.degrees[row]
    }

    pub fn row(&self, row: usize) -> &[Cyclotomic] {
        &self.rows[row]
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.rows[row][class]
    }

    /// Class of `g_c^t`.
    pub fn power_map(&self, class: usize, t: u64) -> usize {
        let pm = &self.power_maps[class];
        pm[(t % pm.len() as u64) as usize]
    }

    /// Character degrees as a sorted set.
    pub fn degree_set(&self) -> Vec<u64> {
        let mut d = self.degrees.clone();
        d.dedup();
        d
    }

    /// `Σ_c |C_c| χ(c) conj(ψ(c))`, which is `|G|` times the inner product.
    fn scaled_inner(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let sizes = self.group.class_sizes();
        let mut acc = Cyclotomic::zero(self.exponent);
        for ((x, y), &s) in a.iter().zip(b).zip(&sizes) {
            let term = (x * &y.conj()).scale(s as i64);
            acc = &acc + &term;
        }
        acc
    }

    /// Checks every table invariant exactly: row and column orthogonality,
    /// `Σ χ(1)² = |G|`, degrees dividing `|G|`, and `|χ(g)| ≤ χ(1)`
    /// numerically.
    pub fn verify(&self) -> Result<()> {
        let g = self.group.as_ref();
        let n = g.order() as i64;
        let r = g.class_count();
        let fail = |msg: String| Err(Error::LiftInconsistent(msg));
        if self.rows.len() != r {
            return fail(format!("{} rows for {r} classes", self.rows.len()));
        }
        let sum_sq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sum_sq != n as u64 {
            return fail(format!("sum of squared degrees is {sum_sq}, not {n}"));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if !(n as u64).is_multiple_of(self.degrees[i]) {
                return fail(format!("degree {} does not divide {n}", self.degrees[i]));
            }
            if row[0] != Cyclotomic::integer(self.exponent, self.degrees[i] as i64) {
                return fail(format!("row {i} disagrees with its degree at the identity"));
            }
            for v in row {
                if v.abs() > self.degrees[i] as f64 + 1e-9 {
                    return fail(format!("row {i} has a value of modulus above its degree"));
                }
            }
        }
        // products accumulate into one dense buffer from sparse values
        let e = self.exponent as usize;
        let sparse: Vec<Vec<Vec<(usize, i64)>>> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        v.coeffs()
                            .iter()
                            .enumerate()
                            .filter(|(_, &c)| c != 0)
                            .map(|(j, &c)| (j, c))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut buf = vec![0i64; e];
        let vanishes = |buf: &mut Vec<i64>, expected: i64| -> bool {
            buf[0] -= expected;
            let zero = buf.iter().all(|&c| c == 0)
                || Cyclotomic::from_coeffs(self.exponent, buf.clone()).is_zero();
            buf.iter_mut().for_each(|c| *c = 0);
            zero
        };
        let sizes = g.class_sizes();
        for i in 0..r {
            for j in i..r {
                for (c, &s) in sizes.iter().enumerate() {
                    for &(a, x) in &sparse[i][c] {
                        for &(b, y) in &sparse[j][c] {
                            buf[if a >= b { a - b } else { a + e - b }] += s as i64 * x * y;
                        }
                    }
                }
                if !vanishes(&mut buf, if i == j { n } else { 0 }) {
                    return fail(format!("rows {i} and {j} are not orthonormal"));
                }
            }
        }
        for c in 0..r {
            for d in c..r {
                for row in &sparse {
                    for &(a, x) in &row[c] {
                        for &(b, y) in &row[d] {
                            buf[if a >= b { a - b } else { a + e - b }] += x * y;
                        }
                    }
                }
                if !vanishes(&mut buf, if c == d { n / sizes[c] as i64 } else { 0 }) {
                    return fail(format!("columns {c} and {d} are not orthogonal"));
                }
            }
        }
        Ok(())
    }

    /// Classes on which the character takes its degree.
    pub fn kernel_classes(&self, row: usize) -> Vec<usize> {
        let d = Cyclotomic::integer(self.exponent, self.degrees[row] as i64);
        (0..self.rows[row].len())
            .filter(|&c| self.rows[row][c] == d)
            .collect()
    }

    pub fn kernel(&self, row: usize) -> Subgroup {
        let g = self.group.as_ref();
        let mut members: Vec<usize> = self
            .kernel_classes(row)
            .into_iter()
            .flat_map(|c| g.classes()[c].elements().iter().copied())
            .collect();
        members.sort_unstable();
        let k = g.subgroup_from_members(&members);
        debug_assert!(g.is_normal(&k));
        k
    }

    /// Order of the kernel, without building the subgroup.
    pub fn kernel_order(&self, row: usize) -> usize {
        let sizes = self.group.class_sizes();
        self.kernel_classes(row).iter().map(|&c| sizes[c]).sum()
    }

    pub fn is_faithful(&self, row: usize) -> bool {
        self.kernel_order(row) == 1
    }

    /// Whether every class inside `n` lies in the kernel.
    pub fn kernel_contains(&self, row: usize, n: &Subgroup) -> bool {
        let g = self.group.as_ref();
        let d = Cyclotomic::integer(self.exponent, self.degrees[row] as i64);
        let mut seen = vec![false; g.class_count()];
        for &x in n.members() {
            let c = g.class_of(x);
            if !seen[c] {
                seen[c] = true;
                if self.rows[row][c] != d {
                    return false;
                }
            }
        }
        true
    }

    /// Multiplicities of the irreducible characters of a normal subgroup in
    /// the restriction of row `row`.
    pub fn restrict(&self, row: usize, sub: &SubgroupTable) -> Result<Vec<u64>> {
        let g = self.group.as_ref();
        sub.check_against(g)?;
        let t = &sub.table;
        let h = t.group.as_ref();
        let restricted: Vec<Cyclotomic> = h
            .classes()
            .iter()
            .map(|c| {
                let x = sub.embedding[c.representative()];
                self.rows[row][g.class_of(x)].clone()
            })
            .collect();
        let order = h.order() as i64;
        (0..t.len())
            .map(|theta| {
                let s = t.scaled_inner(&restricted, &t.rows[theta]);
                match s.as_integer() {
                    Some(v) if v >= 0 && v % order == 0 => Ok((v / order) as u64),
                    _ => Err(Error::LiftInconsistent(
                        "restriction multiplicity is not a nonnegative integer".into(),
                    )),
                }
            })
            .collect()
    }

    pub fn lies_over(&self, row: usize, sub: &SubgroupTable, theta: usize) -> Result<bool> {
        Ok(self.restrict(row, sub)?[theta] > 0)
    }
}

/// Character table of a normal subgroup, with the embedding of its element
/// indices into the parent group.
#[derive(Clone, Debug)]
pub struct SubgroupTable {
    pub subgroup: Subgroup,
    pub table: CharacterTable,
    pub embedding: Vec<usize>,
}

impl SubgroupTable {
    pub fn new(parent: &FiniteGroup, subgroup: &Subgroup, seed: u64) -> Result<Self> {
        if !parent.is_normal(subgroup) {
            return Err(Error::NotNormal);
        }
        let (h, embedding) = parent.subgroup_as_group(subgroup);
        let table = CharacterTable::dixon(Arc::new(h), seed)?;
        Ok(SubgroupTable {
            subgroup: subgroup.clone(),
            table,
            embedding,
        })
    }

    fn check_against(&self, parent: &FiniteGroup) -> Result<()> {
        if !parent.is_normal(&self.subgroup) {
            return Err(Error::NotNormal);
        }
        if self.embedding.len() != self.subgroup.order()
            || self.table.group.order() != self.subgroup.order()
            || self
                .embedding
                .iter()
                .any(|&x| x >= parent.order() || !self.subgroup.contains(x))
        {
            return Err(Error::TableMismatch);
        }
        for (i, &x) in self.embedding.iter().enumerate() {
            if self.table.group.element(i) != parent.element(x) {
                return Err(Error::TableMismatch);
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn table(g: FiniteGroup) -> CharacterTable {
        CharacterTable::dixon(Arc::new(g), 7).unwrap()
    }

    #[test]
    fn trivial_and_c2() {
        let t = table(FiniteGroup::trivial(1));
        assert_eq!(t.degrees(), &[1]);
        let t = table(zoo::cyclic(2).unwrap());
        assert_eq!(t.degrees(), &[1, 1]);
        assert_eq!(t.value(1, 1), &Cyclotomic::integer(2, -1));
    }

    #[test]
    fn s3_table() {
        let t = table(zoo::symmetric(3).unwrap());
        assert_eq!(t.degrees(), &[1, 1, 2]);
        let g = t.group().clone();
        for c in 0..3 {
            let o = g.element_order(g.classes()[c].representative());
            let expect = match o {
                1 => 2,
                2 => 0,
                _ => -1,
            };
            assert_eq!(t.value(2, c), &Cyclotomic::integer(6, expect));
        }
        assert!(t.is_faithful(2));
        assert_eq!(t.kernel_order(1), 3);
    }

    #[test]
    fn a5_and_s4_degrees() {
        let t = table(zoo::alternating(5).unwrap());
        assert_eq!(t.degrees(), &[1, 3, 3, 4, 5]);
        let golden = Cyclotomic::from_coeffs(30, {
            let mut c = vec![0; 30];
            c[0] = 1;
            c[6] = 1;
            c[24] = 1;
            c
        });
        assert!(t.rows()[1..3].iter().any(|r| r.contains(&golden)));

        let s4 = table(zoo::symmetric(4).unwrap());
        assert_eq!(s4.degrees(), &[1, 1, 2, 3, 3]);
        let sign_kernel = s4.kernel(1);
        assert_eq!(sign_kernel.order(), 12);
    }

    #[test]
    fn q8_has_a_faithful_degree_two_character() {
        let t = table(zoo::quaternion8().unwrap());
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
        assert!(t.is_faithful(4));
        assert!((0..4).all(|i| !t.is_faithful(i)));
    }

    #[test]
    fn seed_does_not_change_the_table() {
        let g = Arc::new(zoo::semidirect_cyclic(6, 91, 17).unwrap().group);
        let a = CharacterTable::dixon(g.clone(), 1).unwrap();
        let b = CharacterTable::dixon(g, 99).unwrap();
        assert_eq!(a.rows(), b.rows());
        assert_eq!(a.len(), a.group().class_count());
    }

    #[test]
    fn restriction_to_a_normal_subgroup() {
        let s = zoo::semidirect_cyclic(2, 3, 2).unwrap();
        let g = s.group;
        let t = table(g.clone());
        let sub = SubgroupTable::new(&g, &s.kernel, 3).unwrap();
        // the degree-2 character restricts to the two nontrivial linear
        // characters of C3
        let m = t.restrict(2, &sub).unwrap();
        assert_eq!(m.iter().sum::<u64>(), 2);
        assert_eq!(m[0], 0);
        assert_eq!(t.restrict(0, &sub).unwrap()[0], 1);
        assert!(matches!(
            SubgroupTable::new(&g, &s.complement, 3),
            Err(Error::NotNormal)
        ));
    }
}
