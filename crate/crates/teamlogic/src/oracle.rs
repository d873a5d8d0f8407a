//! Brute-force semantic ground truth: exhaustive context enumeration,
//! equivalence and validity checks, countermodel search and merging.
//!
//! Everything here is exhaustive within a budget. Exceeding the budget
//! ceiling is an error, never silent sampling.

use std::collections::BTreeSet;

use serde_json::Value;

use crate::error::Error;
use crate::formula::{Formula, FragmentTag};
use crate::semantics::{
    eval_team, FoAssignment, FoStructure, FoTeam, KripkeStructure, PropAssignment, PropTeam,
    SemanticsMode, TeamModel, WorldTeam,
};
use crate::signature::Signature;

pub const DEFAULT_CEILING: u128 = 1 << 24;

#[derive(Debug, Clone)]
pub struct SearchBudget {
    pub max_props: usize,
    pub max_worlds: usize,
    pub max_domain: usize,
    pub max_team: Option<usize>,
    pub mode: SemanticsMode,
    pub ceiling: u128,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_props: 2,
            max_worlds: 2,
            max_domain: 2,
            max_team: None,
            mode: SemanticsMode::Lax,
            ceiling: DEFAULT_CEILING,
        }
    }
}

impl SearchBudget {
    pub fn lax(props: usize, worlds: usize, domain: usize) -> Self {
        SearchBudget {
            max_props: props,
            max_worlds: worlds,
            max_domain: domain,
            ..Default::default()
        }
    }

    pub fn with_mode(mut self, mode: SemanticsMode) -> Self {
        self.mode = mode;
        self
    }
}

/// Outcome of an exhaustive check. `witness` demonstrates failure of the
/// checked property (inequivalence, invalidity) or, for satisfiability
/// probes, success.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<TeamModel>,
    pub contexts_checked: u64,
}

impl Verdict {
    pub fn to_json(&self, key: &str) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert(key.to_string(), Value::Bool(self.holds));
        obj.insert(
            "witness".to_string(),
            self.witness.as_ref().map(|m| m.to_json()).unwrap_or(Value::Null),
        );
        obj.insert("contexts_checked".to_string(), Value::from(self.contexts_checked));
        Value::Object(obj)
    }
}

#[derive(Debug, Clone)]
pub enum ContextKind {
    Prop { props: Vec<String> },
    Kripke { props: Vec<String> },
    Fo { sig: Signature, vars: Vec<String> },
}

/// All assignments over `props`, in binary counting order.
pub fn all_prop_assignments(props: &[String]) -> Vec<PropAssignment> {
    let k = props.len();
    (0..(1usize << k))
        .map(|mask| {
            props
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), mask & (1 << i) != 0))
                .collect()
        })
        .collect()
}

/// All teams over `props` (2^(2^k) of them), smallest first in the canonical
/// bitmask order over the assignment list.
pub fn all_prop_teams(props: &[String]) -> Vec<PropTeam> {
    let rows = all_prop_assignments(props);
    assert!(rows.len() <= 16, "too many assignments to enumerate teams");
    (0..(1u32 << rows.len()))
        .map(|tmask| {
            rows.iter()
                .enumerate()
                .filter(|(i, _)| tmask & (1 << i) != 0)
                .map(|(_, r)| r.clone())
                .collect()
        })
        .collect()
}

fn count_prop_contexts(props: usize) -> u128 {
    if props > 5 {
        return u128::MAX;
    }
    1u128 << (1u128 << props)
}

fn count_kripke_contexts(worlds: usize, props: usize) -> u128 {
    let mut total = 0u128;
    for n in 1..=worlds {
        if n * n > 60 || n * props > 60 {
            return u128::MAX;
        }
        total += (1u128 << (n * n)) * (1u128 << (n * props)) * (1u128 << n);
    }
    total
}

fn pow_u128(base: u128, exp: u128) -> u128 {
    let mut out: u128 = 1;
    for _ in 0..exp {
        out = out.saturating_mul(base);
    }
    out
}

fn count_fo_contexts(sig: &Signature, domain: usize, vars: usize) -> u128 {
    let mut total = 0u128;
    for d in 1..=domain {
        let d = d as u128;
        let mut structures = 1u128;
        for ar in sig.relations.values() {
            structures = structures.saturating_mul(pow_u128(2, pow_u128(d, *ar as u128)));
        }
        for ar in sig.functions.values() {
            structures = structures.saturating_mul(pow_u128(d, pow_u128(d, *ar as u128)));
        }
        structures = structures.saturating_mul(pow_u128(d, sig.constants.len() as u128));
        let assignments = pow_u128(d, vars as u128);
        if assignments > 20 {
            return u128::MAX;
        }
        total = total.saturating_add(structures.saturating_mul(pow_u128(2, assignments)));
    }
    total
}

fn tuples(domain: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        let mut next = Vec::new();
        for t in &out {
            for e in 0..domain {
                let mut t2 = t.clone();
                t2.push(e);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

/// Enumerate Kripke structures with exactly `n` worlds over `props`,
/// together with all world teams.
pub fn for_each_kripke_exact<F>(n: usize, props: &[String], mut visit: F) -> Result<(), Error>
where
    F: FnMut(&KripkeStructure, &WorldTeam) -> Result<bool, Error>,
{
    let worlds: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    'outer: for rmask in 0..(1u64 << pairs.len()) {
        let rel: BTreeSet<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| rmask & (1 << i) != 0)
            .map(|(_, p)| *p)
            .collect();
        for vmask in 0..(1u64 << (n * props.len())) {
            let mut val = std::collections::BTreeMap::new();
            for (pi, p) in props.iter().enumerate() {
                let ws: BTreeSet<usize> =
                    (0..n).filter(|w| vmask & (1 << (pi * n + w)) != 0).collect();
                val.insert(p.clone(), ws);
            }
            let k = KripkeStructure { worlds: worlds.clone(), rel: rel.clone(), val };
            for tmask in 0..(1u64 << n) {
                let team: WorldTeam = (0..n).filter(|w| tmask & (1 << w) != 0).collect();
                if !visit(&k, &team)? {
                    break 'outer;
                }
            }
        }
    }
    Ok(())
}

fn for_each_fo<F>(
    sig: &Signature,
    max_domain: usize,
    vars: &[String],
    mut visit: F,
) -> Result<(), Error>
where
    F: FnMut(&FoStructure, &FoTeam) -> Result<bool, Error>,
{
    for d in 1..=max_domain {
        let domain: Vec<String> = (0..d).map(|i| i.to_string()).collect();
        // enumerate relation interpretations as one mixed-radix counter
        let rel_names: Vec<&String> = sig.relations.keys().collect();
        let rel_tuples: Vec<Vec<Vec<usize>>> =
            rel_names.iter().map(|r| tuples(d, sig.relations[*r])).collect();
        let rel_counts: Vec<u64> = rel_tuples.iter().map(|t| 1u64 << t.len()).collect();
        let fn_names: Vec<&String> = sig.functions.keys().collect();
        let fn_tuples: Vec<Vec<Vec<usize>>> =
            fn_names.iter().map(|f| tuples(d, sig.functions[*f])).collect();
        let fn_counts: Vec<u64> =
            fn_tuples.iter().map(|t| (d as u64).pow(t.len() as u32)).collect();
        let const_count = (d as u64).pow(sig.constants.len() as u32);
        let assignments: Vec<FoAssignment> = tuples(d, vars.len())
            .into_iter()
            .map(|t| vars.iter().cloned().zip(t).collect())
            .collect();

        let total_rel: u64 = rel_counts.iter().product();
        let total_fn: u64 = fn_counts.iter().product();
        'outer: for rcode in 0..total_rel.max(1) {
            let mut rc = rcode;
            let mut relations = std::collections::BTreeMap::new();
            for (i, r) in rel_names.iter().enumerate() {
                let mask = rc % rel_counts[i];
                rc /= rel_counts[i];
                let rows: BTreeSet<Vec<usize>> = rel_tuples[i]
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask & (1 << j) != 0)
                    .map(|(_, t)| t.clone())
                    .collect();
                relations.insert((*r).clone(), rows);
            }
            for fcode in 0..total_fn.max(1) {
                let mut fc = fcode;
                let mut functions = std::collections::BTreeMap::new();
                for (i, f) in fn_names.iter().enumerate() {
                    let mut code = fc % fn_counts[i];
                    fc /= fn_counts[i];
                    let mut map = std::collections::BTreeMap::new();
                    for t in &fn_tuples[i] {
                        map.insert(t.clone(), (code % d as u64) as usize);
                        code /= d as u64;
                    }
                    functions.insert((*f).clone(), map);
                }
                for ccode in 0..const_count.max(1) {
                    let mut cc = ccode;
                    let mut constants = std::collections::BTreeMap::new();
                    for c in &sig.constants {
                        constants.insert(c.clone(), (cc % d as u64) as usize);
                        cc /= d as u64;
                    }
                    let st = FoStructure {
                        domain: domain.clone(),
                        relations: relations.clone(),
                        functions: functions.clone(),
                        constants: constants.clone(),
                    };
                    for tmask in 0..(1u64 << assignments.len()) {
                        let team: FoTeam = assignments
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| tmask & (1 << i) != 0)
                            .map(|(_, a)| a.clone())
                            .collect();
                        if !visit(&st, &team)? {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn padding_props(existing: &BTreeSet<String>, want: usize) -> Vec<String> {
    let mut props: Vec<String> = existing.iter().cloned().collect();
    let mut i = 0;
    while props.len() < want {
        let cand = format!("v{i}");
        if !existing.contains(&cand) {
            props.push(cand);
        }
        i += 1;
    }
    props
}

/// Decide the context kind for a set of formulas: propositional teams for
/// the PL/QBF chains, Kripke models for the modal chain, first-order
/// structures otherwise.
pub fn context_kind_for(
    fs: &[&Formula],
    sig: &Signature,
    budget: &SearchBudget,
) -> Result<ContextKind, Error> {
    let mut tag = FragmentTag::Pl;
    for f in fs {
        let t = f.classify()?;
        tag = tag.join(t).ok_or_else(|| {
            Error::Fragment(format!("formulas mix incomparable fragments ({tag} vs {t})"))
        })?;
    }
    if tag.le(FragmentTag::Qptl) {
        let mut free = BTreeSet::new();
        for f in fs {
            free.extend(f.free_props());
        }
        Ok(ContextKind::Prop { props: padding_props(&free, budget.max_props) })
    } else if tag.le(FragmentTag::Mtl) {
        let mut props = BTreeSet::new();
        for f in fs {
            f.props(&mut props);
        }
        Ok(ContextKind::Kripke { props: props.into_iter().collect() })
    } else {
        let mut vars = BTreeSet::new();
        for f in fs {
            vars.extend(f.free_vars());
        }
        Ok(ContextKind::Fo { sig: sig.clone(), vars: vars.into_iter().collect() })
    }
}

/// Run `pred` over every context of the kind, in canonical order, stopping
/// at the first context where it returns true. That context is the witness.
pub fn search_contexts<F>(
    kind: &ContextKind,
    budget: &SearchBudget,
    mut pred: F,
) -> Result<(Option<TeamModel>, u64), Error>
where
    F: FnMut(&TeamModel) -> Result<bool, Error>,
{
    let mut checked: u64 = 0;
    let mut witness: Option<TeamModel> = None;
    match kind {
        ContextKind::Prop { props } => {
            let count = count_prop_contexts(props.len());
            if count > budget.ceiling {
                return Err(Error::Budget(count, budget.ceiling));
            }
            for team in all_prop_teams(props) {
                if budget.max_team.is_some_and(|m| team.len() > m) {
                    continue;
                }
                let model = TeamModel::Prop { team };
                checked += 1;
                if pred(&model)? {
                    witness = Some(model);
                    break;
                }
            }
        }
        ContextKind::Kripke { props } => {
            let count = count_kripke_contexts(budget.max_worlds, props.len());
            if count > budget.ceiling {
                return Err(Error::Budget(count, budget.ceiling));
            }
            for n in 1..=budget.max_worlds {
                if witness.is_some() {
                    break;
                }
                for_each_kripke_exact(n, props, |k, team| {
                    if budget.max_team.is_some_and(|m| team.len() > m) {
                        return Ok(true);
                    }
                    let model =
                        TeamModel::Kripke { structure: k.clone(), team: team.clone() };
                    checked += 1;
                    if pred(&model)? {
                        witness = Some(model);
                        return Ok(false);
                    }
                    Ok(true)
                })?;
            }
        }
        ContextKind::Fo { sig, vars } => {
            let count = count_fo_contexts(sig, budget.max_domain, vars.len());
            if count > budget.ceiling {
                return Err(Error::Budget(count, budget.ceiling));
            }
            for_each_fo(sig, budget.max_domain, vars, |st, team| {
                if budget.max_team.is_some_and(|m| team.len() > m) {
                    return Ok(true);
                }
                let model = TeamModel::Fo { structure: st.clone(), team: team.clone() };
                checked += 1;
                if pred(&model)? {
                    witness = Some(model);
                    return Ok(false);
                }
                Ok(true)
            })?;
        }
    }
    Ok((witness, checked))
}

/// Exhaustive semantic equivalence. The witness, if any, is the first
/// context in canonical order on which the formulas disagree.
pub fn equiv(f: &Formula, g: &Formula, sig: &Signature, budget: &SearchBudget) -> Result<Verdict, Error> {
    let kind = context_kind_for(&[f, g], sig, budget)?;
    let (witness, checked) = search_contexts(&kind, budget, |model| {
        Ok(eval_team(model, f, budget.mode)? != eval_team(model, g, budget.mode)?)
    })?;
    Ok(Verdict { holds: witness.is_none(), witness, contexts_checked: checked })
}

/// Exhaustive validity. The witness, if any, falsifies the formula.
pub fn valid(f: &Formula, sig: &Signature, budget: &SearchBudget) -> Result<Verdict, Error> {
    let kind = context_kind_for(&[f], sig, budget)?;
    let (witness, checked) =
        search_contexts(&kind, budget, |model| Ok(!eval_team(model, f, budget.mode)?))?;
    Ok(Verdict { holds: witness.is_none(), witness, contexts_checked: checked })
}

/// Exhaustive satisfiability of a finite set.
pub fn consistency_probe(
    fs: &[Formula],
    sig: &Signature,
    budget: &SearchBudget,
) -> Result<Verdict, Error> {
    let refs: Vec<&Formula> = fs.iter().collect();
    let kind = context_kind_for(&refs, sig, budget)?;
    let (witness, checked) = search_contexts(&kind, budget, |model| {
        for f in fs {
            if !eval_team(model, f, budget.mode)? {
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    Ok(Verdict { holds: witness.is_some(), witness, contexts_checked: checked })
}

fn eval_abstract(
    f: &Formula,
    leaves: &[&Formula],
    truth: u32,
    strip: fn(&Formula) -> Option<(&Formula, Option<(&Formula, &Formula)>)>,
) -> bool {
    if let Some((g, two)) = strip(f) {
        match two {
            None => !eval_abstract(g, leaves, truth, strip),
            Some((a, b)) => {
                !eval_abstract(a, leaves, truth, strip) || eval_abstract(b, leaves, truth, strip)
            }
        }
    } else {
        let idx = leaves.iter().position(|l| *l == f).expect("leaf was collected");
        truth & (1 << idx) != 0
    }
}

fn strip_team(f: &Formula) -> Option<(&Formula, Option<(&Formula, &Formula)>)> {
    match f {
        Formula::Sneg(g) => Some((g, None)),
        Formula::Mimp(a, b) => Some((a, Some((a, b)))),
        _ => None,
    }
}

fn strip_classical(f: &Formula) -> Option<(&Formula, Option<(&Formula, &Formula)>)> {
    match f {
        Formula::Not(g) => Some((g, None)),
        Formula::Imp(a, b) => Some((a, Some((a, b)))),
        _ => None,
    }
}

fn taut_entails(
    premises: &[&Formula],
    conclusion: &Formula,
    strip: fn(&Formula) -> Option<(&Formula, Option<(&Formula, &Formula)>)>,
) -> Result<bool, Error> {
    let mut all: Vec<&Formula> = premises.to_vec();
    all.push(conclusion);
    let leaves = leaves_by(&all, strip);
    if leaves.len() > 20 {
        return Err(Error::Other(format!(
            "too many opaque leaves for a truth-table check ({})",
            leaves.len()
        )));
    }
    for truth in 0..(1u32 << leaves.len()) {
        let prems_hold =
            premises.iter().all(|p| eval_abstract(p, &leaves, truth, strip));
        if prems_hold && !eval_abstract(conclusion, &leaves, truth, strip) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maximal subformulas opaque to `strip`, in first-occurrence order.
fn leaves_by<'a>(
    fs: &[&'a Formula],
    strip: fn(&Formula) -> Option<(&Formula, Option<(&Formula, &Formula)>)>,
) -> Vec<&'a Formula> {
    fn walk<'a>(
        f: &'a Formula,
        out: &mut Vec<&'a Formula>,
        strip: fn(&Formula) -> Option<(&Formula, Option<(&Formula, &Formula)>)>,
    ) {
        match strip(f) {
            Some((g, None)) => walk(g, out, strip),
            Some((_, Some((a, b)))) => {
                walk(a, out, strip);
                walk(b, out, strip);
            }
            None => {
                if !out.iter().any(|l| *l == f) {
                    out.push(f);
                }
            }
        }
    }
    let mut out = Vec::new();
    for f in fs {
        walk(f, &mut out, strip);
    }
    out
}

/// Truth-functional validity over `~`/`~>` with all other subformulas as
/// independent atoms.
pub fn taut_boolean_closure(f: &Formula) -> Result<bool, Error> {
    taut_entails(&[], f, strip_team)
}

/// Entailment version used by the proof checker's `taut-L` macro.
pub fn taut_boolean_closure_entails(premises: &[&Formula], c: &Formula) -> Result<bool, Error> {
    taut_entails(premises, c, strip_team)
}

/// Truth-table validity over `!`/`->` with all other subformulas as
/// independent atoms (`taut-classical`).
pub fn taut_classical_entails(premises: &[&Formula], c: &Formula) -> Result<bool, Error> {
    taut_entails(premises, c, strip_classical)
}

#[derive(Debug, Clone)]
pub enum MergeOutcome {
    Merged(TeamModel),
    Unfindable { delta: Formula, contexts_checked: u64 },
}

/// Constructive counter-model merging for flat formulas: one context that
/// satisfies all of `gamma` and falsifies every member of `delta`, built by
/// team union (propositional) or disjoint union of structures plus team
/// union (modal).
pub fn merge_countermodels(
    gamma: &[Formula],
    delta: &[Formula],
    budget: &SearchBudget,
) -> Result<MergeOutcome, Error> {
    for f in gamma.iter().chain(delta.iter()) {
        let tag = f.classify()?;
        if !matches!(tag, FragmentTag::Pl | FragmentTag::Ml) {
            return Err(Error::Fragment(format!(
                "counter-model merging handles PL and ML only, got {tag}"
            )));
        }
    }
    let mut all: Vec<&Formula> = gamma.iter().collect();
    all.extend(delta.iter());
    let kind = context_kind_for(&all, &Signature::empty(), budget)?;

    let mut parts: Vec<TeamModel> = Vec::new();
    for d in delta {
        let (witness, checked) = search_contexts(&kind, budget, |model| {
            for g in gamma {
                if !eval_team(model, g, budget.mode)? {
                    return Ok(false);
                }
            }
            Ok(!eval_team(model, d, budget.mode)?)
        })?;
        match witness {
            Some(m) => parts.push(m),
            None => {
                return Ok(MergeOutcome::Unfindable {
                    delta: d.clone(),
                    contexts_checked: checked,
                })
            }
        }
    }

    let merged = match kind {
        ContextKind::Prop { .. } => {
            let mut team = PropTeam::new();
            for p in parts {
                if let TeamModel::Prop { team: t } = p {
                    team.extend(t);
                }
            }
            TeamModel::Prop { team }
        }
        _ => {
            // disjoint union of the Kripke structures, with the teams
            // shifted into their own component
            let mut worlds = Vec::new();
            let mut rel = BTreeSet::new();
            let mut val: std::collections::BTreeMap<String, BTreeSet<usize>> =
                std::collections::BTreeMap::new();
            let mut team = WorldTeam::new();
            for (idx, p) in parts.into_iter().enumerate() {
                if let TeamModel::Kripke { structure, team: t } = p {
                    let off = worlds.len();
                    for w in &structure.worlds {
                        worlds.push(format!("{idx}.{w}"));
                    }
                    for (a, b) in structure.rel {
                        rel.insert((a + off, b + off));
                    }
                    for (pn, ws) in structure.val {
                        val.entry(pn).or_default().extend(ws.into_iter().map(|w| w + off));
                    }
                    team.extend(t.into_iter().map(|w| w + off));
                }
            }
            TeamModel::Kripke { structure: KripkeStructure { worlds, rel, val }, team }
        }
    };

    // re-verify satisfaction of gamma and falsification of every delta
    for g in gamma {
        if !eval_team(&merged, g, budget.mode)? {
            return Err(Error::Other(format!(
                "merged context fails a member of the satisfied set: {}",
                crate::render::render(g)
            )));
        }
    }
    for d in delta {
        if eval_team(&merged, d, budget.mode)? {
            return Err(Error::Other(format!(
                "merged context satisfies a formula it must falsify: {}",
                crate::render::render(d)
            )));
        }
    }
    Ok(MergeOutcome::Merged(merged))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_prop;

    #[test]
    fn prop_team_counts() {
        let props = vec!["p".to_string(), "q".to_string()];
        assert_eq!(all_prop_teams(&props).len(), 16);
        let props3 = vec!["p".to_string(), "q".to_string(), "r".to_string()];
        assert_eq!(all_prop_teams(&props3).len(), 256);
    }

    #[test]
    fn kripke_context_count_one_world_one_prop() {
        let mut n = 0u64;
        for_each_kripke_exact(1, &["p".to_string()], |_, _| {
            n += 1;
            Ok(true)
        })
        .unwrap();
        assert_eq!(n, 8);
    }

    #[test]
    fn flatness_of_tensor_example() {
        let f = parse_prop("a * b").unwrap();
        let g = parse_prop("a | b").unwrap();
        let v = equiv(&f, &g, &Signature::empty(), &SearchBudget::default()).unwrap();
        assert!(v.holds);
        assert_eq!(v.contexts_checked, 16);
    }

    #[test]
    fn limp_collapse_is_equivalent() {
        let f = parse_prop("p -o q").unwrap();
        let g = parse_prop("q").unwrap();
        assert!(equiv(&f, &g, &Signature::empty(), &SearchBudget::default()).unwrap().holds);
    }

    #[test]
    fn ne_vs_top_witnessed_by_empty_team() {
        let f = parse_prop("NE").unwrap();
        let g = parse_prop("T").unwrap();
        let v = equiv(&f, &g, &Signature::empty(), &SearchBudget::lax(1, 2, 2)).unwrap();
        assert!(!v.holds);
        match v.witness {
            Some(TeamModel::Prop { team }) => assert!(team.is_empty()),
            other => panic!("expected a propositional witness, got {other:?}"),
        }
    }

    #[test]
    fn axioms_l4_l1_are_valid() {
        for s in ["(a -> b) ~> (a ~> b)", "p ~> (q ~> p)"] {
            let f = parse_prop(s).unwrap();
            assert!(valid(&f, &Signature::empty(), &SearchBudget::default()).unwrap().holds, "{s}");
        }
    }

    #[test]
    fn unanimity_fails_on_propositional_teams() {
        let f = parse_prop("~p ~> !p").unwrap();
        let v = valid(&f, &Signature::empty(), &SearchBudget::lax(1, 2, 2)).unwrap();
        assert!(!v.holds);
    }

    #[test]
    fn taut_boolean_closure_examples() {
        let dn = parse_prop("~~x ~> x").unwrap();
        assert!(taut_boolean_closure(&dn).unwrap());
        let l1 = parse_prop("x ~> (y ~> x)").unwrap();
        assert!(taut_boolean_closure(&l1).unwrap());
        let bad = parse_prop("x ~> y").unwrap();
        assert!(!taut_boolean_closure(&bad).unwrap());
        // box p and p are distinct leaves
        let m = parse_prop("box p ~> box p").unwrap();
        assert!(taut_boolean_closure(&m).unwrap());
    }

    #[test]
    fn probe_examples() {
        let sig = Signature::empty();
        let unsat = vec![parse_prop("p").unwrap(), parse_prop("~p").unwrap()];
        assert!(!consistency_probe(&unsat, &sig, &SearchBudget::default()).unwrap().holds);
        let sat = vec![parse_prop("p").unwrap(), parse_prop("~q").unwrap()];
        assert!(consistency_probe(&sat, &sig, &SearchBudget::default()).unwrap().holds);
        let nf = vec![parse_prop("NE").unwrap(), parse_prop("FF").unwrap()];
        assert!(!consistency_probe(&nf, &sig, &SearchBudget::default()).unwrap().holds);
    }

    #[test]
    fn merge_prop_example() {
        let gamma = vec![parse_prop("p").unwrap()];
        let delta = vec![parse_prop("q").unwrap(), parse_prop("r").unwrap()];
        let mut budget = SearchBudget::default();
        budget.max_props = 3;
        match merge_countermodels(&gamma, &delta, &budget).unwrap() {
            MergeOutcome::Merged(TeamModel::Prop { team }) => assert!(!team.is_empty()),
            other => panic!("expected a merged propositional model, got {other:?}"),
        }
    }

    #[test]
    fn merge_reports_unfindable_delta() {
        let gamma = vec![parse_prop("p").unwrap()];
        let delta = vec![parse_prop("p").unwrap()];
        match merge_countermodels(&gamma, &delta, &SearchBudget::default()).unwrap() {
            MergeOutcome::Unfindable { .. } => {}
            other => panic!("expected unfindable, got {other:?}"),
        }
    }
}
