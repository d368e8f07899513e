use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::bounds::{cod_bound_holds, dl_bound_holds, log_bound_value, pi_bound_holds};
use super::{
    non_coprime_pair, theorem_d_classify, theorem_d_predicate, Check, CheckRecord, GroupContext,
};
use crate::arith::{is_prime, prime_divisors, prime_power};
use crate::chartab::SubgroupTable;
use crate::codegree::{
    codegree, lemma21_divisibility_check, lemma21_quotient_check, linear_character_order,
};
use crate::error::Result;
use crate::group::Subgroup;
use crate::orbits::{clifford_inclusion_check, orbits_on_dual, orbits_on_subgroup};
use crate::structure::{self, core_p, core_p_prime, is_nilpotent_section, p_length};

type Quantities = BTreeMap<String, Value>;

fn q<const N: usize>(pairs: [(&str, Value); N]) -> Quantities {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn subgroup_json(h: &Subgroup) -> Value {
    json!({ "order": h.order(), "generators": h.generators() })
}

/// Runs one check; checks quantified over primes give one record per prime.
pub fn run_check(
    ctx: &GroupContext,
    check: Check,
    lemma21_max_order: usize,
) -> Result<Vec<CheckRecord>> {
    Ok(match check {
        Check::Table => vec![table(ctx)],
        Check::TheoremD => vec![theorem_d(ctx)],
        Check::NewPrimes => vec![new_primes(ctx)],
        Check::TheoremC => theorem_c(ctx)?,
        Check::PLength => p_length_check(ctx)?,
        Check::TheoremB => vec![theorem_b(ctx)],
        Check::TheoremA => vec![theorem_a(ctx)],
        Check::Lemma21Quotient => vec![lemma21_quotient(ctx, lemma21_max_order)?],
        Check::Lemma21Divisibility => vec![lemma21_divisibility(ctx, lemma21_max_order)?],
        Check::LinearCodegree => vec![linear_codegree(ctx)?],
        Check::Clifford => vec![clifford(ctx)?],
    })
}

/// The table was verified exactly when built; record what was verified.
fn table(ctx: &GroupContext) -> CheckRecord {
    let t = &ctx.table;
    let n = ctx.group.order() as u64;
    let sum_sq: u64 = t.degrees().iter().map(|d| d * d).sum();
    let witness = (sum_sq != n || t.len() != ctx.group.class_count())
        .then(|| json!({ "sum_of_squares": sum_sq, "order": n }));
    CheckRecord::decided(
        Check::Table,
        None,
        q([
            ("classes", json!(t.len())),
            ("exponent", json!(t.exponent())),
            ("prime", json!(t.prime())),
            ("degrees", json!(t.degrees())),
            ("sum_of_squares", json!(sum_sq)),
        ]),
        witness,
    )
}

fn theorem_d(ctx: &GroupContext) -> CheckRecord {
    let g = ctx.group.as_ref();
    if g.order() == 1 {
        return CheckRecord::skipped(Check::TheoremD, None, "trivial group");
    }
    let p = &ctx.profile;
    let predicate = theorem_d_predicate(p);
    let shape = theorem_d_classify(g, p);
    let solvable = ctx.is_solvable();
    let consistent = predicate == shape.is_some();
    let in_particular = !predicate || (solvable && p.primes.len() <= 2 && p.cod_set.len() <= 3);
    let witness = (!consistent || !in_particular).then(|| {
        json!({
            "cod_set": p.cod_set,
            "predicate": predicate,
            "shape": shape,
            "non_coprime_pair": non_coprime_pair(p),
            "solvable": solvable,
        })
    });
    CheckRecord::decided(
        Check::TheoremD,
        None,
        q([
            ("cod_set", json!(p.cod_set)),
            ("predicate", json!(predicate)),
            ("shape", json!(shape)),
            ("solvable", json!(solvable)),
            ("pi_count", json!(p.primes.len())),
        ]),
        witness,
    )
}

fn new_primes(ctx: &GroupContext) -> CheckRecord {
    let g = ctx.group.as_ref();
    let k = ctx.profile.k_value;
    let n = g.order() as u64;
    let lattice = ctx.lattice().members();
    let nilpotent = ctx.is_nilpotent();
    let mut pairs = 0usize;
    let mut best: Option<(usize, usize, Vec<u64>)> = None;
    let mut violation = None;
    for (ki, kk) in lattice.iter().enumerate() {
        let outside = prime_divisors(n / kk.order() as u64);
        for (li, l) in lattice[..=ki].iter().enumerate() {
            if !l.is_subgroup_of(kk) {
                continue;
            }
            if !nilpotent && !is_nilpotent_section(g, kk, l) {
                continue;
            }
            pairs += 1;
            let fresh: Vec<u64> = prime_divisors((kk.order() / l.order()) as u64)
                .into_iter()
                .filter(|p| !outside.contains(p))
                .collect();
            if best.as_ref().is_none_or(|b| fresh.len() > b.2.len()) {
                best = Some((ki, li, fresh.clone()));
            }
            if fresh.len() > k && violation.is_none() {
                violation = Some(json!({
                    "k": subgroup_json(kk),
                    "l": subgroup_json(l),
                    "new_primes": fresh,
                    "k_value": k,
                }));
            }
        }
    }
    let (ki, li, fresh) = best.expect("the pair (1, 1) is always present");
    CheckRecord::decided(
        Check::NewPrimes,
        None,
        q([
            ("k_value", json!(k)),
            ("normal_subgroups", json!(lattice.len())),
            ("nilpotent_pairs", json!(pairs)),
            ("max_new_primes", json!(fresh.len())),
            (
                "max_pair",
                json!({
                    "k_order": lattice[ki].order(),
                    "l_order": lattice[li].order(),
                    "new_primes": fresh,
                }),
            ),
        ]),
        violation,
    )
}

/// Least `n` with `G^(n) ≤ O_p(G)`.
fn derived_length_over(ctx: &GroupContext, op: &Subgroup) -> usize {
    let series = structure::derived_series(&ctx.group);
    series
        .terms
        .iter()
        .position(|t| t.is_subgroup_of(op))
        .expect("solvable group")
}

fn theorem_c(ctx: &GroupContext) -> Result<Vec<CheckRecord>> {
    let g = ctx.group.as_ref();
    let mut out = Vec::new();
    if g.order() == 1 {
        return Ok(vec![CheckRecord::skipped(
            Check::TheoremC,
            None,
            "trivial group",
        )]);
    }
    for &p in &ctx.profile.primes {
        if !ctx.is_solvable() {
            out.push(CheckRecord::skipped(
                Check::TheoremC,
                Some(p),
                "not solvable",
            ));
            continue;
        }
        let opp = core_p_prime(g, p)?;
        if !opp.is_trivial() {
            out.push(CheckRecord::skipped(
                Check::TheoremC,
                Some(p),
                format!("O_p' has order {}", opp.order()),
            ));
            continue;
        }
        let op = core_p(g, p)?;
        let dl = derived_length_over(ctx, &op) as u64;
        let c = ctx.profile.cod_p(p).len() as u64;
        let pl = p_length(g, p)? as u64;
        if c == 0 {
            out.push(
                CheckRecord::decided(
                    Check::TheoremC,
                    Some(p),
                    q([("dl_quotient", json!(dl)), ("cod_p_count", json!(0))]),
                    Some(json!({ "prime": p, "cod_p": [] })),
                )
                .with_note("empty cod_p for a solvable group with trivial O_p'"),
            );
            continue;
        }
        let bound = log_bound_value(24, c, 389);
        let dl_ok = dl_bound_holds(dl, c);
        let pl_ok = pl <= c;
        let witness = (!dl_ok || !pl_ok)
            .then(|| json!({ "dl_quotient": dl, "p_length": pl, "cod_p": ctx.profile.cod_p(p) }));
        out.push(CheckRecord::decided(
            Check::TheoremC,
            Some(p),
            q([
                ("o_p_order", json!(op.order())),
                ("dl_quotient", json!(dl)),
                ("cod_p", json!(ctx.profile.cod_p(p))),
                ("cod_p_count", json!(c)),
                ("bound", json!(bound)),
                ("slack", json!(bound - dl as f64)),
                ("p_length", json!(pl)),
            ]),
            witness,
        ));
    }
    Ok(out)
}

fn p_length_check(ctx: &GroupContext) -> Result<Vec<CheckRecord>> {
    let g = ctx.group.as_ref();
    if g.order() == 1 {
        return Ok(vec![CheckRecord::skipped(
            Check::PLength,
            None,
            "trivial group",
        )]);
    }
    let mut out = Vec::new();
    for &p in &ctx.profile.primes {
        if !ctx.is_solvable() {
            out.push(CheckRecord::skipped(
                Check::PLength,
                Some(p),
                "not solvable",
            ));
            continue;
        }
        let pl = p_length(g, p)? as u64;
        let c = ctx.profile.cod_p(p).len() as u64;
        let witness = (pl > c).then(|| json!({ "p_length": pl, "cod_p": ctx.profile.cod_p(p) }));
        out.push(CheckRecord::decided(
            Check::PLength,
            Some(p),
            q([("p_length", json!(pl)), ("cod_p_count", json!(c))]),
            witness,
        ));
    }
    Ok(out)
}

fn theorem_b(ctx: &GroupContext) -> CheckRecord {
    if ctx.group.order() == 1 {
        return CheckRecord::skipped(Check::TheoremB, None, "trivial group");
    }
    if !ctx.is_solvable() {
        return CheckRecord::skipped(Check::TheoremB, None, "not solvable");
    }
    let k = ctx.profile.k_value as u64;
    let x = ctx.profile.primes.len() as u64;
    let bound = log_bound_value(24 * k, k, 390 * k);
    let witness =
        (!pi_bound_holds(x, k)).then(|| json!({ "pi": ctx.profile.primes, "k_value": k }));
    CheckRecord::decided(
        Check::TheoremB,
        None,
        q([
            ("k_value", json!(k)),
            ("pi_count", json!(x)),
            ("bound", json!(bound)),
            ("slack", json!(bound - x as f64)),
        ]),
        witness,
    )
}

fn theorem_a(ctx: &GroupContext) -> CheckRecord {
    if ctx.group.order() == 1 {
        return CheckRecord::skipped(Check::TheoremA, None, "trivial group");
    }
    if !ctx.is_solvable() {
        return CheckRecord::skipped(Check::TheoremA, None, "not solvable");
    }
    let k = ctx.profile.k_value as u64;
    let x = ctx.profile.cod_set.len() as u64;
    let bound = log_bound_value(24 * k * k, k, 390 * k * k + 1);
    let witness =
        (!cod_bound_holds(x, k)).then(|| json!({ "cod_set": ctx.profile.cod_set, "k_value": k }));
    CheckRecord::decided(
        Check::TheoremA,
        None,
        q([
            ("k_value", json!(k)),
            ("cod_count", json!(x)),
            ("bound", json!(bound)),
            ("slack", json!(bound - x as f64)),
        ]),
        witness,
    )
}

fn lemma21_quotient(ctx: &GroupContext, max_order: usize) -> Result<CheckRecord> {
    if ctx.group.order() > max_order {
        return Ok(CheckRecord::skipped(
            Check::Lemma21Quotient,
            None,
            format!("order above {max_order}"),
        ));
    }
    let lattice = ctx.lattice().members();
    let mut witness = None;
    for n in lattice {
        if !lemma21_quotient_check(&ctx.table, n, ctx.seed)? {
            witness = Some(json!({ "normal_subgroup": subgroup_json(n) }));
            break;
        }
    }
    Ok(CheckRecord::decided(
        Check::Lemma21Quotient,
        None,
        q([("normal_subgroups", json!(lattice.len()))]),
        witness,
    ))
}

fn lemma21_divisibility(ctx: &GroupContext, max_order: usize) -> Result<CheckRecord> {
    if ctx.group.order() > max_order {
        return Ok(CheckRecord::skipped(
            Check::Lemma21Divisibility,
            None,
            format!("order above {max_order}"),
        ));
    }
    let lattice = ctx.lattice().members();
    let mut pairs = 0;
    let mut witness = None;
    for n in lattice {
        let sub = SubgroupTable::new(&ctx.group, n, ctx.seed)?;
        let outcome = lemma21_divisibility_check(&ctx.table, &sub)?;
        pairs += outcome.pairs_checked;
        if let Some((theta, chi)) = outcome.violation {
            witness = Some(json!({
                "normal_subgroup": subgroup_json(n),
                "theta_row": theta,
                "chi_row": chi,
            }));
            break;
        }
    }
    Ok(CheckRecord::decided(
        Check::Lemma21Divisibility,
        None,
        q([
            ("normal_subgroups", json!(lattice.len())),
            ("pairs_checked", json!(pairs)),
        ]),
        witness,
    ))
}

fn linear_codegree(ctx: &GroupContext) -> Result<CheckRecord> {
    let t = &ctx.table;
    let mut linear = 0;
    let mut witness = None;
    for row in 0..t.len() {
        if t.degree(row) != 1 {
            continue;
        }
        linear += 1;
        let order = linear_character_order(t, row);
        let cod = codegree(t, row)?;
        if order != Some(cod) {
            witness = Some(json!({ "row": row, "order": order, "codegree": cod }));
            break;
        }
    }
    Ok(CheckRecord::decided(
        Check::LinearCodegree,
        None,
        q([("linear_characters", json!(linear))]),
        witness,
    ))
}

fn clifford(ctx: &GroupContext) -> Result<CheckRecord> {
    let g = ctx.group.as_ref();
    let (source, h, v) = match &ctx.parts {
        Some((h, v)) if g.is_abelian_subgroup(v) && !v.is_trivial() => {
            ("semidirect", h.clone(), v.clone())
        }
        _ => match structure::frobenius_structure(g) {
            Some(f) if g.is_abelian_subgroup(&f.kernel) => ("frobenius", f.complement, f.kernel),
            _ => {
                return Ok(CheckRecord::skipped(
                    Check::Clifford,
                    None,
                    "no complemented abelian normal subgroup known",
                ))
            }
        },
    };
    let outcome = clifford_inclusion_check(&ctx.table, &h, &v, ctx.seed)?;
    let mut problems: Vec<Value> = Vec::new();
    if !outcome.holds() {
        problems.push(json!({ "orbit_sizes_without_degree": outcome.missing }));
    }
    // characters over a p-group V have codegree divisible by p
    if let Some((p, _)) = prime_power(v.order() as u64) {
        if let Some(&bad) = outcome.cod_over.iter().find(|&&c| c % p != 0) {
            problems.push(json!({ "codegree_not_divisible": bad, "prime": p }));
        }
    }
    // with V the unique minimal normal subgroup, characters over V are faithful
    let lattice = ctx.lattice();
    let minimal = lattice.minimal();
    let unique_minimal = minimal.len() == 1 && *minimal[0] == v;
    if unique_minimal && outcome.cd_over.len() != outcome.cod_over.len() {
        problems.push(json!({ "cd_over": outcome.cd_over, "cod_over": outcome.cod_over }));
    }
    // for |V| prime the element and character orbit sizes agree
    if is_prime(v.order() as u64) {
        let a = orbits_on_subgroup(g, &h, &v)?.sizes();
        let b = orbits_on_dual(g, &h, &v, ctx.seed)?.sizes();
        if a != b {
            problems.push(json!({ "element_orbits": a, "dual_orbits": b }));
        }
    }
    let witness = (!problems.is_empty()).then_some(Value::Array(problems));
    let witnesses: BTreeMap<String, usize> = outcome
        .witnesses
        .iter()
        .map(|(s, r)| (s.to_string(), *r))
        .collect();
    Ok(CheckRecord::decided(
        Check::Clifford,
        None,
        q([
            ("source", json!(source)),
            ("complement", subgroup_json(&h)),
            ("module", subgroup_json(&v)),
            ("m_star_set", json!(outcome.m_star_set)),
            ("m_star_count", json!(outcome.m_star_set.len())),
            ("cd_over", json!(outcome.cd_over)),
            ("cod_over", json!(outcome.cod_over)),
            ("degree_witness_rows", json!(witnesses)),
            ("unique_minimal", json!(unique_minimal)),
        ]),
        witness,
    ))
}
