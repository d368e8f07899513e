//! Orbits of a subgroup acting by conjugation on an abelian normal subgroup
//! and on its character group.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::chartab::CharacterTable;
use crate::codegree::{codegree, rows_over};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitSpace {
    /// Elements of `V`; point `i` is `V.members()[i]`.
    Elements,
    /// Irreducible characters of `V`, ordered by canonical value vector.
    Dual,
}

#[derive(Clone, Debug)]
pub struct ActionOrbits {
    pub space: OrbitSpace,
    pub acting_order: usize,
    /// Orbits as sorted point lists, ordered by least point.
    pub orbits: Vec<Vec<usize>>,
    /// Orbit sizes above 1.
    pub m_star_set: Vec<u64>,
    pub m_star_count: usize,
}

impl ActionOrbits {
    fn new(
        space: OrbitSpace,
        acting_order: usize,
        points: usize,
        step: impl Fn(usize, usize) -> usize,
        gens: usize,
    ) -> Self {
        let mut orbit_of = vec![usize::MAX; points];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..points {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            orbit_of[start] = id;
            let mut orbit = vec![start];
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                for s in 0..gens {
                    let y = step(x, s);
                    if orbit_of[y] == usize::MAX {
                        orbit_of[y] = id;
                        orbit.push(y);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        let m_star_set: Vec<u64> = orbits
            .iter()
            .map(|o| o.len() as u64)
            .filter(|&s| s > 1)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        ActionOrbits {
            space,
            acting_order,
            m_star_count: m_star_set.len(),
            orbits,
            m_star_set,
        }
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.orbits.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }
}

fn check_module(g: &FiniteGroup, v: &Subgroup) -> Result<()> {
    if !g.is_abelian_subgroup(v) {
        return Err(Error::NotAbelian);
    }
    if !g.is_normal(v) {
        return Err(Error::NotNormal);
    }
    Ok(())
}

/// Orbits of `H` on the elements of `V` under `v ↦ h⁻¹ v h`.
pub fn orbits_on_subgroup(g: &FiniteGroup, h: &Subgroup, v: &Subgroup) -> Result<ActionOrbits> {
    check_module(g, v)?;
    let pos: HashMap<usize, usize> = v
        .members()
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, i))
        .collect();
    let gens = h.generators();
    let step = |i: usize, s: usize| pos[&g.conjugate(v.members()[i], gens[s])];
    Ok(ActionOrbits::new(
        OrbitSpace::Elements,
        h.order(),
        v.order(),
        step,
        gens.len(),
    ))
}

/// `Irr(V)` as value vectors over `V.members()`, sorted by canonical key.
pub fn dual_group(g: &FiniteGroup, v: &Subgroup, seed: u64) -> Result<Vec<Vec<Vec<i64>>>> {
    let (vg, embedding) = g.subgroup_as_group(v);
    let t = CharacterTable::dixon(Arc::new(vg), seed)?;
    let vg = t.group();
    // local index of each member of v
    let local: HashMap<usize, usize> = embedding.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut cache: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut chars: Vec<Vec<Vec<i64>>> = (0..t.len())
        .map(|row| {
            v.members()
                .iter()
                .map(|x| {
                    let value = t.value(row, vg.class_of(local[x]));
                    cache
                        .entry(value.coeffs().to_vec())
                        .or_insert_with(|| value.canonical_key())
                        .clone()
                })
                .collect()
        })
        .collect();
    chars.sort();
    Ok(chars)
}

/// Orbits of `H` on `Irr(V)` under `λ^h(v) = λ(h v h⁻¹)`.
pub fn orbits_on_dual(
    g: &FiniteGroup,
    h: &Subgroup,
    v: &Subgroup,
    seed: u64,
) -> Result<ActionOrbits> {
    check_module(g, v)?;
    let chars = dual_group(g, v, seed)?;
    let index: HashMap<&Vec<Vec<i64>>, usize> =
        chars.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let pos: HashMap<usize, usize> = v
        .members()
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, i))
        .collect();
    let gens = h.generators();
    // perm[s][i] = position of h_s v_i h_s⁻¹
    let perm: Vec<Vec<usize>> = gens
        .iter()
        .map(|&hs| {
            let hinv = g.inv(hs);
            v.members()
                .iter()
                .map(|&x| pos[&g.conjugate(x, hinv)])
                .collect()
        })
        .collect();
    let step = |i: usize, s: usize| {
        let moved: Vec<Vec<i64>> = perm[s].iter().map(|&j| chars[i][j].clone()).collect();
        *index.get(&moved).expect("the action permutes Irr(V)")
    };
    Ok(ActionOrbits::new(
        OrbitSpace::Dual,
        h.order(),
        chars.len(),
        step,
        gens.len(),
    ))
}

#[derive(Clone, Debug)]
pub struct CliffordOutcome {
    pub m_star_set: Vec<u64>,
    /// Degrees of the characters whose kernel does not contain `V`.
    pub cd_over: Vec<u64>,
    /// Codegrees of the same characters.
    pub cod_over: Vec<u64>,
    /// For each orbit size in `m_star_set`, a row of that degree over `V`.
    pub witnesses: BTreeMap<u64, usize>,
    pub missing: Vec<u64>,
}

impl CliffordOutcome {
    pub fn holds(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Checks that every nontrivial orbit size of `H` on `Irr(V)` is the degree
/// of some character of `G = HV` lying over a nontrivial character of `V`.
pub fn clifford_inclusion_check(
    t: &CharacterTable,
    h: &Subgroup,
    v: &Subgroup,
    seed: u64,
) -> Result<CliffordOutcome> {
    let g = t.group().as_ref();
    check_module(g, v)?;
    let meet = h.members().iter().filter(|&&x| v.contains(x)).count();
    if meet != 1 {
        return Err(Error::NotComplemented(format!("H ∩ V has order {meet}")));
    }
    if h.order() * v.order() != g.order() {
        return Err(Error::NotComplemented(format!(
            "|H||V| = {} differs from |G| = {}",
            h.order() * v.order(),
            g.order()
        )));
    }
    let dual = orbits_on_dual(g, h, v, seed)?;
    let over = rows_over(t, v);
    let mut witnesses = BTreeMap::new();
    let mut missing = Vec::new();
    for &s in &dual.m_star_set {
        match over.iter().find(|&&r| t.degree(r) == s) {
            Some(&r) => {
                witnesses.insert(s, r);
            }
            None => missing.push(s),
        }
    }
    let cd_over: Vec<u64> = over
        .iter()
        .map(|&r| t.degree(r))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let cod_over: Vec<u64> = over
        .iter()
        .map(|&r| codegree(t, r))
        .collect::<Result<BTreeSet<_>>>()?
        .into_iter()
        .collect();
    Ok(CliffordOutcome {
        m_star_set: dual.m_star_set,
        cd_over,
        cod_over,
        witnesses,
        missing,
    })
}
