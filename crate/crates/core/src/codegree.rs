//! Codegrees, per-prime codegree sets, and the two prime graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::arith::prime_divisors;
use crate::chartab::{CharacterTable, SubgroupTable};
use crate::error::{Error, Result};
use crate::group::Subgroup;

/// `|G : Ker χ| / χ(1)`.
pub fn codegree(t: &CharacterTable, row: usize) -> Result<u64> {
    let index = (t.group().order() / t.kernel_order(row)) as u64;
    let d = t.degree(row);
    if !index.is_multiple_of(d) {
        return Err(Error::NonIntegralCodegree { row });
    }
    Ok(index / d)
}

/// Simple undirected graph on a set of primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeGraph {
    vertices: Vec<u64>,
    edges: BTreeSet<(u64, u64)>,
}

impl PrimeGraph {
    pub fn new(vertices: Vec<u64>) -> Self {
        let mut vertices = vertices;
        vertices.sort_unstable();
        vertices.dedup();
        PrimeGraph {
            vertices,
            edges: BTreeSet::new(),
        }
    }

    pub fn add_edge(&mut self, a: u64, b: u64) {
        if a != b {
            self.edges.insert((a.min(b), a.max(b)));
        }
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: u64, b: u64) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in &self.vertices {
            writeln!(out, "  {v};").unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(out, "  {a} -- {b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Connected components, each sorted, ordered by least vertex.
pub fn graph_components(graph: &PrimeGraph) -> Vec<Vec<u64>> {
    let mut comp: BTreeMap<u64, usize> = BTreeMap::new();
    let mut out: Vec<Vec<u64>> = Vec::new();
    for &v in graph.vertices() {
        if comp.contains_key(&v) {
            continue;
        }
        let id = out.len();
        let mut stack = vec![v];
        let mut members = Vec::new();
        comp.insert(v, id);
        while let Some(x) = stack.pop() {
            members.push(x);
            for (a, b) in graph.edges() {
                let y = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if let std::collections::btree_map::Entry::Vacant(e) = comp.entry(y) {
                    e.insert(id);
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Everything derived from the codegrees of one group.
#[derive(Clone, Debug)]
pub struct CodegreeProfile {
    pub order: u64,
    pub primes: Vec<u64>,
    pub cod_set: Vec<u64>,
    pub per_character: Vec<u64>,
    pub cod_p: BTreeMap<u64, Vec<u64>>,
    /// Largest `|cod_p(G)|`; 0 for the trivial group.
    pub k_value: usize,
    pub codegree_graph: PrimeGraph,
    pub gk_graph: PrimeGraph,
}

impl CodegreeProfile {
    pub fn cod_p(&self, p: u64) -> &[u64] {
        self.cod_p.get(&p).map(Vec::as_slice).unwrap_or(&[])
    }
}

pub fn profile(t: &CharacterTable) -> Result<CodegreeProfile> {
    let g = t.group();
    let order = g.order() as u64;
    let primes = prime_divisors(order);
    let per_character = (0..t.len())
        .map(|i| codegree(t, i))
        .collect::<Result<Vec<u64>>>()?;
    let cod_set: Vec<u64> = per_character
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let cod_p: BTreeMap<u64, Vec<u64>> = primes
        .iter()
        .map(|&p| (p, cod_set.iter().copied().filter(|c| c % p == 0).collect()))
        .collect();
    let k_value = cod_p.values().map(Vec::len).max().unwrap_or(0);

    let mut codegree_graph = PrimeGraph::new(primes.clone());
    for &c in &cod_set {
        let ps = prime_divisors(c);
        for (i, &a) in ps.iter().enumerate() {
            for &b in &ps[i + 1..] {
                codegree_graph.add_edge(a, b);
            }
        }
    }
    let mut gk_graph = PrimeGraph::new(primes.clone());
    for c in g.classes() {
        let ps = prime_divisors(g.element_order(c.representative()));
        for (i, &a) in ps.iter().enumerate() {
            for &b in &ps[i + 1..] {
                gk_graph.add_edge(a, b);
            }
        }
    }
    Ok(CodegreeProfile {
        order,
        primes,
        cod_set,
        per_character,
        cod_p,
        k_value,
        codegree_graph,
        gk_graph,
    })
}

/// Characters of `G/N` against the characters of `G` containing `N` in
/// their kernel: each quotient character must inflate to exactly one such
/// row, with the same codegree computed in either group.
pub fn lemma21_quotient_check(t: &CharacterTable, n: &Subgroup, seed: u64) -> Result<bool> {
    let g = t.group();
    let q = g.quotient(n)?;
    let qt = CharacterTable::dixon(Arc::new(q.group), seed)?;
    let qg = qt.group();
    let inflatable: Vec<usize> = (0..t.len()).filter(|&i| t.kernel_contains(i, n)).collect();
    if inflatable.len() != qt.len() {
        return Ok(false);
    }
    let mut used = vec![false; t.len()];
    for psi in 0..qt.len() {
        let inflated: Vec<_> = g
            .classes()
            .iter()
            .map(|c| {
                qt.value(psi, qg.class_of(q.projection[c.representative()]))
                    .clone()
            })
            .collect();
        let Some(&chi) = inflatable
            .iter()
            .find(|&&i| !used[i] && t.row(i) == inflated.as_slice())
        else {
            return Ok(false);
        };
        used[chi] = true;
        if codegree(&qt, psi)? != codegree(t, chi)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of checking `cod(θ) | cod(χ)` over all `θ ∈ Irr(N)` lying under
/// `χ ∈ Irr(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityOutcome {
    pub pairs_checked: usize,
    /// `(θ row, χ row)` of the first violation.
    pub violation: Option<(usize, usize)>,
}

impl DivisibilityOutcome {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn lemma21_divisibility_check(
    t: &CharacterTable,
    sub: &SubgroupTable,
) -> Result<DivisibilityOutcome> {
    let theta_cod = (0..sub.table.len())
        .map(|i| codegree(&sub.table, i))
        .collect::<Result<Vec<u64>>>()?;
    let mut pairs_checked = 0;
    for chi in 0..t.len() {
        let c = codegree(t, chi)?;
        let mult = t.restrict(chi, sub)?;
        for (theta, &m) in mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            pairs_checked += 1;
            if c % theta_cod[theta] != 0 {
                return Ok(DivisibilityOutcome {
                    pairs_checked,
                    violation: Some((theta, chi)),
                });
            }
        }
    }
    Ok(DivisibilityOutcome {
        pairs_checked,
        violation: None,
    })
}

/// Multiplicative order of a linear character, read off its values.
pub fn linear_character_order(t: &CharacterTable, row: usize) -> Option<u64> {
    let e = t.exponent();
    let mut order = 1u64;
    for v in t.row(row) {
        let c = v.coeffs();
        let mut nonzero = c.iter().enumerate().filter(|(_, &x)| x != 0);
        let (j, &x) = nonzero.next()?;
        if x != 1 || nonzero.next().is_some() {
            return None;
        }
        let o = e / num_integer::gcd(e, j as u64);
        order = num_integer::lcm(order, o);
    }
    Some(order)
}

/// Every linear character has codegree equal to its order.
pub fn linear_codegree_is_order_check(t: &CharacterTable) -> Result<bool> {
    for row in 0..t.len() {
        if t.degree(row) != 1 {
            continue;
        }
        match linear_character_order(t, row) {
            Some(o) if o == codegree(t, row)? => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Rows whose kernel does not contain `v`.
pub fn rows_over(t: &CharacterTable, v: &Subgroup) -> Vec<usize> {
    (0..t.len()).filter(|&i| !t.kernel_contains(i, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::SubgroupTable;
    use crate::group::FiniteGroup;
    use crate::structure::normal_subgroups;
    use crate::zoo;

    fn table(g: FiniteGroup) -> CharacterTable {
        CharacterTable::dixon(Arc::new(g), 0).unwrap()
    }

    #[test]
    fn small_profiles() {
        let s3 = profile(&table(zoo::symmetric(3).unwrap())).unwrap();
        assert_eq!(s3.cod_set, vec![1, 2, 3]);
        assert_eq!(s3.per_character, vec![1, 2, 3]);
        let a5 = profile(&table(zoo::alternating(5).unwrap())).unwrap();
        assert_eq!(a5.cod_set, vec![1, 12, 15, 20]);
        assert_eq!(graph_components(&a5.codegree_graph), vec![vec![2, 3, 5]]);
        let trivial = profile(&table(FiniteGroup::trivial(1))).unwrap();
        assert_eq!((trivial.cod_set.clone(), trivial.k_value), (vec![1], 0));
        let s4 = profile(&table(zoo::symmetric(4).unwrap())).unwrap();
        assert_eq!(s4.cod_set, vec![1, 2, 3, 8]);
        assert_eq!(s4.cod_p(2), &[2, 8]);
        assert_eq!(s4.k_value, 2);
    }

    #[test]
    fn section_three_group() {
        let g = zoo::semidirect_cyclic(6, 91, 17).unwrap().group;
        let p = profile(&table(g)).unwrap();
        assert_eq!(p.cod_set, vec![1, 2, 3, 6, 7, 13, 91]);
        assert_eq!(p.k_value, 2);
        assert_eq!(
            graph_components(&p.codegree_graph),
            vec![vec![2, 3], vec![7, 13]]
        );
        assert_eq!(graph_components(&p.gk_graph), vec![vec![2, 3], vec![7, 13]]);
    }

    #[test]
    fn components_and_dot() {
        let mut g = PrimeGraph::new(vec![5, 2, 3]);
        assert_eq!(graph_components(&g), vec![vec![2], vec![3], vec![5]]);
        g.add_edge(5, 2);
        assert_eq!(graph_components(&g), vec![vec![2, 5], vec![3]]);
        assert_eq!(g.to_dot("x"), "graph x {\n  2;\n  3;\n  5;\n  2 -- 5;\n}\n");
    }

    #[test]
    fn lemma21_on_small_groups() {
        for g in [
            zoo::symmetric(4).unwrap(),
            zoo::quaternion8().unwrap(),
            zoo::symmetric(3).unwrap(),
        ] {
            let t = table(g.clone());
            for n in normal_subgroups(&g).members() {
                assert!(lemma21_quotient_check(&t, n, 0).unwrap());
                let sub = SubgroupTable::new(&g, n, 0).unwrap();
                assert!(lemma21_divisibility_check(&t, &sub).unwrap().holds());
            }
        }
    }

    #[test]
    fn linear_orders() {
        assert!(linear_codegree_is_order_check(&table(zoo::cyclic(4).unwrap())).unwrap());
        let t = table(zoo::cyclic(4).unwrap());
        let orders: Vec<u64> = (0..4)
            .map(|i| linear_character_order(&t, i).unwrap())
            .collect();
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 2);
        assert!(linear_codegree_is_order_check(&table(zoo::symmetric(4).unwrap())).unwrap());
    }
}
