//! Team semantics for all supported logics, on finite models.
//!
//! Evaluation is defined recursively; classical subformulas are evaluated
//! pointwise over the team members. The enumerators for divisions,
//! successor teams and supplementing teams live here as well since the
//! connective semantics quantify over them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use serde_json::Value;

use crate::error::Error;
use crate::formula::Formula;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemanticsMode {
    Lax,
    Strict,
}

pub type PropAssignment = BTreeMap<String, bool>;
pub type PropTeam = BTreeSet<PropAssignment>;
pub type WorldTeam = BTreeSet<usize>;
pub type FoAssignment = BTreeMap<String, usize>;
pub type FoTeam = BTreeSet<FoAssignment>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KripkeStructure {
    pub worlds: Vec<String>,
    pub rel: BTreeSet<(usize, usize)>,
    pub val: BTreeMap<String, BTreeSet<usize>>,
}

impl KripkeStructure {
    pub fn successors(&self, w: usize) -> Vec<usize> {
        self.rel.iter().filter(|(a, _)| *a == w).map(|(_, b)| *b).collect()
    }

    /// `R[T]`, the unique global successor team.
    pub fn global_successor(&self, team: &WorldTeam) -> WorldTeam {
        self.rel.iter().filter(|(a, _)| team.contains(a)).map(|(_, b)| *b).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoStructure {
    /// Non-empty domain; elements are addressed by index.
    pub domain: Vec<String>,
    pub relations: BTreeMap<String, BTreeSet<Vec<usize>>>,
    pub functions: BTreeMap<String, BTreeMap<Vec<usize>, usize>>,
    pub constants: BTreeMap<String, usize>,
}

/// One evaluation context: a team together with its underlying structure.
#[derive(Debug, Clone, PartialEq)]
pub enum TeamModel {
    Prop { team: PropTeam },
    Kripke { structure: KripkeStructure, team: WorldTeam },
    Fo { structure: FoStructure, team: FoTeam },
}

impl TeamModel {
    pub fn team_size(&self) -> usize {
        match self {
            TeamModel::Prop { team } => team.len(),
            TeamModel::Kripke { team, .. } => team.len(),
            TeamModel::Fo { team, .. } => team.len(),
        }
    }
}

/// Classical (single-valuation) counterpart of a team model.
pub enum ClassicalModel<'a> {
    Prop(&'a PropAssignment),
    Kripke(&'a KripkeStructure, usize),
    Fo(&'a FoStructure, &'a FoAssignment),
}

/// No `~`, `~>`, `-o`, `delta`, `shriek` anywhere.
pub fn is_classical_syntax(f: &Formula) -> bool {
    match f {
        Formula::Atom(_) | Formula::Pred(..) | Formula::Eq(..) => true,
        Formula::Not(g) | Formula::Box(g) | Formula::Forall(_, g) => is_classical_syntax(g),
        Formula::Imp(a, b) => is_classical_syntax(a) && is_classical_syntax(b),
        Formula::Sneg(_)
        | Formula::Mimp(..)
        | Formula::Limp(..)
        | Formula::Delta(_)
        | Formula::Shriek(..) => false,
    }
}

fn term_value(st: &FoStructure, s: &FoAssignment, t: &crate::formula::Term) -> Result<usize, Error> {
    use crate::formula::Term;
    match t {
        Term::Var(x) => s
            .get(x)
            .copied()
            .ok_or_else(|| Error::Fragment(format!("variable '{x}' is not assigned"))),
        Term::Const(c) => st
            .constants
            .get(c)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(format!("constant '{c}'"))),
        Term::App(f, args) => {
            let vals: Result<Vec<usize>, Error> =
                args.iter().map(|a| term_value(st, s, a)).collect();
            let vals = vals?;
            st.functions
                .get(f)
                .and_then(|m| m.get(&vals))
                .copied()
                .ok_or_else(|| Error::UnknownSymbol(format!("function '{f}' at {vals:?}")))
        }
    }
}

/// Tarskian truth of a classical formula in a single valuation.
pub fn eval_classical(model: &ClassicalModel, f: &Formula) -> Result<bool, Error> {
    match (model, f) {
        (ClassicalModel::Prop(s), Formula::Atom(p)) => Ok(s.get(p).copied().unwrap_or(false)),
        (ClassicalModel::Prop(s), Formula::Forall(x, g)) => {
            let mut s1 = (*s).clone();
            s1.insert(x.clone(), true);
            let mut s0 = (*s).clone();
            s0.insert(x.clone(), false);
            Ok(eval_classical(&ClassicalModel::Prop(&s1), g)?
                && eval_classical(&ClassicalModel::Prop(&s0), g)?)
        }
        (ClassicalModel::Kripke(k, w), Formula::Atom(p)) => {
            Ok(k.val.get(p).map(|ws| ws.contains(w)).unwrap_or(false))
        }
        (ClassicalModel::Kripke(k, w), Formula::Box(g)) => {
            for v in k.successors(*w) {
                if !eval_classical(&ClassicalModel::Kripke(k, v), g)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        (ClassicalModel::Fo(st, s), Formula::Pred(r, args)) => {
            let vals: Result<Vec<usize>, Error> =
                args.iter().map(|a| term_value(st, s, a)).collect();
            let tuple = vals?;
            Ok(st
                .relations
                .get(r)
                .map(|rows| rows.contains(&tuple))
                .ok_or_else(|| Error::UnknownSymbol(format!("relation '{r}'")))?)
        }
        (ClassicalModel::Fo(st, s), Formula::Eq(a, b)) => {
            Ok(term_value(st, s, a)? == term_value(st, s, b)?)
        }
        (ClassicalModel::Fo(st, s), Formula::Forall(x, g)) => {
            for a in 0..st.domain.len() {
                let mut s2 = (*s).clone();
                s2.insert(x.clone(), a);
                if !eval_classical(&ClassicalModel::Fo(st, &s2), g)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        (_, Formula::Not(g)) => Ok(!eval_classical(model, g)?),
        (_, Formula::Imp(a, b)) => Ok(!eval_classical(model, a)? || eval_classical(model, b)?),
        _ => Err(Error::Fragment(format!(
            "formula does not match the valuation kind: {}",
            crate::render::render(f)
        ))),
    }
}

/// All divisions `(S, U)` of a team: covering pairs in lax mode (3^|T|),
/// partitions in strict mode (2^|T|), in a fixed deterministic order.
pub fn splits<M: Ord + Clone>(
    team: &BTreeSet<M>,
    mode: SemanticsMode,
) -> Vec<(BTreeSet<M>, BTreeSet<M>)> {
    let members: Vec<&M> = team.iter().collect();
    let n = members.len();
    let mut out = Vec::new();
    match mode {
        SemanticsMode::Lax => {
            let total = 3usize.pow(n as u32);
            for mut code in 0..total {
                let mut s = BTreeSet::new();
                let mut u = BTreeSet::new();
                for m in &members {
                    match code % 3 {
                        0 => {
                            u.insert((*m).clone());
                        }
                        1 => {
                            s.insert((*m).clone());
                        }
                        _ => {
                            s.insert((*m).clone());
                            u.insert((*m).clone());
                        }
                    }
                    code /= 3;
                }
                out.push((s, u));
            }
        }
        SemanticsMode::Strict => {
            let total = 1usize << n;
            for code in 0..total {
                let mut s = BTreeSet::new();
                let mut u = BTreeSet::new();
                for (i, m) in members.iter().enumerate() {
                    if code & (1 << i) != 0 {
                        s.insert((*m).clone());
                    } else {
                        u.insert((*m).clone());
                    }
                }
                out.push((s, u));
            }
        }
    }
    out
}

/// Successor teams of `team`. Lax: the subsets of `R[T]` in which every team
/// world has a successor. Strict (experimental): images of functions picking
/// one successor per world.
pub fn successor_teams(
    k: &KripkeStructure,
    team: &WorldTeam,
    mode: SemanticsMode,
) -> Vec<WorldTeam> {
    match mode {
        SemanticsMode::Lax => {
            let global: Vec<usize> = k.global_successor(team).into_iter().collect();
            let mut out = Vec::new();
            for code in 0..(1usize << global.len()) {
                let cand: WorldTeam = global
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| code & (1 << i) != 0)
                    .map(|(_, w)| *w)
                    .collect();
                let covers = team
                    .iter()
                    .all(|w| k.successors(*w).iter().any(|v| cand.contains(v)));
                if covers {
                    out.push(cand);
                }
            }
            out
        }
        SemanticsMode::Strict => {
            let members: Vec<usize> = team.iter().copied().collect();
            let succs: Vec<Vec<usize>> = members.iter().map(|w| k.successors(*w)).collect();
            if succs.iter().any(|s| s.is_empty()) {
                return Vec::new();
            }
            let mut out: Vec<WorldTeam> = Vec::new();
            let total: usize = succs.iter().map(|s| s.len()).product();
            for mut code in 0..total.max(1) {
                let mut img = WorldTeam::new();
                for s in &succs {
                    img.insert(s[code % s.len()]);
                    code /= s.len();
                }
                if !out.contains(&img) {
                    out.push(img);
                }
            }
            if members.is_empty() {
                return vec![WorldTeam::new()];
            }
            out
        }
    }
}

/// Value choices per member for supplementation: non-empty subsets of the
/// domain in lax mode, singletons in strict mode.
fn value_choices(domain: usize, mode: SemanticsMode) -> Vec<Vec<usize>> {
    match mode {
        SemanticsMode::Lax => {
            let mut out = Vec::new();
            for mask in 1..(1usize << domain) {
                out.push((0..domain).filter(|i| mask & (1 << i) != 0).collect());
            }
            out
        }
        SemanticsMode::Strict => (0..domain).map(|i| vec![i]).collect(),
    }
}

fn supplement_generic<K: Ord + Clone, V: Ord + Clone>(
    team: &BTreeSet<BTreeMap<K, V>>,
    x: &K,
    values: &[V],
    mode: SemanticsMode,
) -> Vec<BTreeSet<BTreeMap<K, V>>> {
    let members: Vec<&BTreeMap<K, V>> = team.iter().collect();
    let choices = value_choices(values.len(), mode);
    let per = choices.len();
    let total = per.checked_pow(members.len() as u32).unwrap_or(0);
    if members.is_empty() {
        return vec![BTreeSet::new()];
    }
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut t = BTreeSet::new();
        for m in &members {
            for i in &choices[code % per] {
                let mut ext = (*m).clone();
                ext.insert(x.clone(), values[*i].clone());
                t.insert(ext);
            }
            code /= per;
        }
        out.push(t);
    }
    out
}

/// `T[f/x]` for every supplementing function `f` of the given mode, one team
/// per function (duplicates across functions are not removed).
pub fn supplement_teams_prop(
    team: &PropTeam,
    x: &str,
    mode: SemanticsMode,
) -> Vec<PropTeam> {
    supplement_generic(team, &x.to_string(), &[false, true], mode)
}

pub fn supplement_teams_fo(
    team: &FoTeam,
    x: &str,
    domain: usize,
    mode: SemanticsMode,
) -> Vec<FoTeam> {
    let values: Vec<usize> = (0..domain).collect();
    supplement_generic(team, &x.to_string(), &values, mode)
}

/// `T[A/x]`, the duplicating team.
pub fn duplicate_team_prop(team: &PropTeam, x: &str) -> PropTeam {
    let mut out = PropTeam::new();
    for m in team {
        for v in [false, true] {
            let mut ext = m.clone();
            ext.insert(x.to_string(), v);
            out.insert(ext);
        }
    }
    out
}

pub fn duplicate_team_fo(team: &FoTeam, x: &str, domain: usize) -> FoTeam {
    let mut out = FoTeam::new();
    for m in team {
        for v in 0..domain {
            let mut ext = m.clone();
            ext.insert(x.to_string(), v);
            out.insert(ext);
        }
    }
    out
}

fn prop_team_key(team: &PropTeam, out: &mut String) {
    for m in team {
        for (k, v) in m {
            let _ = write!(out, "{k}={}", u8::from(*v));
        }
        out.push(';');
    }
}

fn fo_team_key(team: &FoTeam, out: &mut String) {
    for m in team {
        for (k, v) in m {
            let _ = write!(out, "{k}={v}");
        }
        out.push(';');
    }
}

fn world_team_key(team: &WorldTeam, out: &mut String) {
    for w in team {
        let _ = write!(out, "{w},");
    }
}

/// Recursive team evaluation with per-call memoization keyed by
/// (subformula, team). Successor-team and supplementation enumeration
/// revisit subteams exponentially often, so the memo matters there.
struct Evaluator {
    mode: SemanticsMode,
    memo: HashMap<(usize, String), bool>,
}

impl Evaluator {
    fn new(mode: SemanticsMode) -> Self {
        Evaluator { mode, memo: HashMap::new() }
    }

    fn key_of(f: &Formula, team_key: String) -> (usize, String) {
        (f as *const Formula as usize, team_key)
    }

    fn prop(&mut self, team: &PropTeam, f: &Formula) -> Result<bool, Error> {
        let mut tk = String::new();
        prop_team_key(team, &mut tk);
        let key = Self::key_of(f, tk);
        if let Some(v) = self.memo.get(&key) {
            return Ok(*v);
        }
        let v = if is_classical_syntax(f) {
            let mut all = true;
            for m in team {
                if !eval_classical(&ClassicalModel::Prop(m), f)? {
                    all = false;
                    break;
                }
            }
            all
        } else {
            match f {
                Formula::Sneg(g) => !self.prop(team, g)?,
                Formula::Mimp(a, b) => !self.prop(team, a)? || self.prop(team, b)?,
                Formula::Limp(a, b) => {
                    let mut ok = true;
                    for (s, u) in splits(team, self.mode) {
                        if self.prop(&s, a)? && !self.prop(&u, b)? {
                            ok = false;
                            break;
                        }
                    }
                    ok
                }
                Formula::Forall(x, g) => self.prop(&duplicate_team_prop(team, x), g)?,
                Formula::Shriek(x, g) => {
                    let mut ok = true;
                    for t in supplement_teams_prop(team, x, self.mode) {
                        if !self.prop(&t, g)? {
                            ok = false;
                            break;
                        }
                    }
                    ok
                }
                _ => {
                    return Err(Error::Fragment(format!(
                        "cannot evaluate {} on a propositional team",
                        crate::render::render(f)
                    )))
                }
            }
        };
        self.memo.insert(key, v);
        Ok(v)
    }

    fn kripke(
        &mut self,
        k: &KripkeStructure,
        team: &WorldTeam,
        f: &Formula,
    ) -> Result<bool, Error> {
        let mut tk = String::new();
        world_team_key(team, &mut tk);
        let key = Self::key_of(f, tk);
        if let Some(v) = self.memo.get(&key) {
            return Ok(*v);
        }
        let v = if is_classical_syntax(f) {
            let mut all = true;
            for w in team {
                if !eval_classical(&ClassicalModel::Kripke(k, *w), f)? {
                    all = false;
                    break;
                }
            }
            all
        } else {
            match f {
                Formula::Sneg(g) => !self.kripke(k, team, g)?,
                Formula::Mimp(a, b) => !self.kripke(k, team, a)? || self.kripke(k, team, b)?,
                Formula::Limp(a, b) => {
                    let mut ok = true;
                    for (s, u) in splits(team, self.mode) {
                        if self.kripke(k, &s, a)? && !self.kripke(k, &u, b)? {
                            ok = false;
                            break;
                        }
                    }
                    ok
                }
                Formula::Box(g) => self.kripke(k, &k.global_successor(team), g)?,
                Formula::Delta(g) => {
                    let mut ok = true;
                    for t in successor_teams(k, team, self.mode) {
                        if !self.kripke(k, &t, g)? {
                            ok = false;
                            break;
                        }
                    }
                    ok
                }
                _ => {
                    return Err(Error::Fragment(format!(
                        "cannot evaluate {} on a world team",
                        crate::render::render(f)
                    )))
                }
            }
        };
        self.memo.insert(key, v);
        Ok(v)
    }

    fn fo(&mut self, st: &FoStructure, team: &FoTeam, f: &Formula) -> Result<bool, Error> {
        let mut tk = String::new();
        fo_team_key(team, &mut tk);
        let key = Self::key_of(f, tk);
        if let Some(v) = self.memo.get(&key) {
            return Ok(*v);
        }
        let v = if is_classical_syntax(f) {
            let mut all = true;
            for s in team {
                if !eval_classical(&ClassicalModel::Fo(st, s), f)? {
                    all = false;
                    break;
                }
            }
            all
        } else {
            match f {
                Formula::Sneg(g) => !self.fo(st, team, g)?,
                Formula::Mimp(a, b) => !self.fo(st, team, a)? || self.fo(st, team, b)?,
                Formula::Limp(a, b) => {
                    let mut ok = true;
                    for (s, u) in splits(team, self.mode) {
                        if self.fo(st, &s, a)? && !self.fo(st, &u, b)? {
                            ok = false;
                            break;
                        }
                    }
                    ok
                }
                Formula::Forall(x, g) => {
                    self.fo(st, &duplicate_team_fo(team, x, st.domain.len()), g)?
                }
                Formula::Shriek(x, g) => {
                    let mut ok = true;
                    for t in supplement_teams_fo(team, x, st.domain.len(), self.mode) {
                        if !self.fo(st, &t, g)? {
                            ok = false;
                            break;
                        }
                    }
                    ok
                }
                _ => {
                    return Err(Error::Fragment(format!(
                        "cannot evaluate {} on a first-order team",
                        crate::render::render(f)
                    )))
                }
            }
        };
        self.memo.insert(key, v);
        Ok(v)
    }
}

/// Team satisfaction `ctx |= f` under the given semantics mode.
pub fn eval_team(model: &TeamModel, f: &Formula, mode: SemanticsMode) -> Result<bool, Error> {
    let mut ev = Evaluator::new(mode);
    match model {
        TeamModel::Prop { team } => ev.prop(team, f),
        TeamModel::Kripke { structure, team } => ev.kripke(structure, team, f),
        TeamModel::Fo { structure, team } => ev.fo(structure, team, f),
    }
}

fn label_of(v: &Value) -> Result<String, Error> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        Value::Bool(b) => Ok(b.to_string()),
        _ => Err(Error::Model(format!("expected a scalar label, got {v}"))),
    }
}

impl TeamModel {
    /// Load a model file: `worlds` marks a Kripke model, `domain` a
    /// first-order one, otherwise a propositional team is expected.
    pub fn from_json(text: &str) -> Result<TeamModel, Error> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| Error::Model(format!("model: {e}")))?;
        let obj = v.as_object().ok_or_else(|| Error::Model("expected an object".into()))?;
        if obj.contains_key("worlds") {
            let worlds: Vec<String> = obj["worlds"]
                .as_array()
                .ok_or_else(|| Error::Model("worlds must be an array".into()))?
                .iter()
                .map(label_of)
                .collect::<Result<_, _>>()?;
            let index = |l: &str| -> Result<usize, Error> {
                worlds
                    .iter()
                    .position(|w| w == l)
                    .ok_or_else(|| Error::Model(format!("unknown world '{l}'")))
            };
            let mut rel = BTreeSet::new();
            for e in obj
                .get("edges")
                .and_then(|e| e.as_array())
                .ok_or_else(|| Error::Model("edges must be an array".into()))?
            {
                let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
                    Error::Model("each edge must be a [from, to] pair".into())
                })?;
                rel.insert((index(&label_of(&pair[0])?)?, index(&label_of(&pair[1])?)?));
            }
            let mut val = BTreeMap::new();
            if let Some(vs) = obj.get("val") {
                for (p, ws) in
                    vs.as_object().ok_or_else(|| Error::Model("val must be an object".into()))?
                {
                    let mut set = BTreeSet::new();
                    for w in ws
                        .as_array()
                        .ok_or_else(|| Error::Model("valuation must be an array".into()))?
                    {
                        set.insert(index(&label_of(w)?)?);
                    }
                    val.insert(p.clone(), set);
                }
            }
            let mut team = BTreeSet::new();
            for w in obj
                .get("team")
                .and_then(|t| t.as_array())
                .ok_or_else(|| Error::Model("team must be an array".into()))?
            {
                team.insert(index(&label_of(w)?)?);
            }
            Ok(TeamModel::Kripke { structure: KripkeStructure { worlds, rel, val }, team })
        } else if obj.contains_key("domain") {
            let domain: Vec<String> = obj["domain"]
                .as_array()
                .ok_or_else(|| Error::Model("domain must be an array".into()))?
                .iter()
                .map(label_of)
                .collect::<Result<_, _>>()?;
            if domain.is_empty() {
                return Err(Error::Model("the domain must be non-empty".into()));
            }
            let index = |l: &str| -> Result<usize, Error> {
                domain
                    .iter()
                    .position(|d| d == l)
                    .ok_or_else(|| Error::Model(format!("unknown element '{l}'")))
            };
            let mut relations = BTreeMap::new();
            if let Some(rs) = obj.get("relations") {
                for (r, rows) in rs
                    .as_object()
                    .ok_or_else(|| Error::Model("relations must be an object".into()))?
                {
                    let mut set = BTreeSet::new();
                    for row in rows
                        .as_array()
                        .ok_or_else(|| Error::Model("relation rows must be arrays".into()))?
                    {
                        let tuple: Result<Vec<usize>, Error> = row
                            .as_array()
                            .ok_or_else(|| Error::Model("relation row must be an array".into()))?
                            .iter()
                            .map(|e| index(&label_of(e)?))
                            .collect();
                        set.insert(tuple?);
                    }
                    relations.insert(r.clone(), set);
                }
            }
            let mut functions = BTreeMap::new();
            if let Some(fs) = obj.get("functions") {
                for (fname, rows) in fs
                    .as_object()
                    .ok_or_else(|| Error::Model("functions must be an object".into()))?
                {
                    let mut map = BTreeMap::new();
                    for row in rows
                        .as_array()
                        .ok_or_else(|| Error::Model("function rows must be arrays".into()))?
                    {
                        let row = row
                            .as_array()
                            .filter(|r| !r.is_empty())
                            .ok_or_else(|| Error::Model("function row must be non-empty".into()))?;
                        let mut tuple = Vec::new();
                        for e in &row[..row.len() - 1] {
                            tuple.push(index(&label_of(e)?)?);
                        }
                        map.insert(tuple, index(&label_of(&row[row.len() - 1])?)?);
                    }
                    functions.insert(fname.clone(), map);
                }
            }
            let mut constants = BTreeMap::new();
            if let Some(cs) = obj.get("constants") {
                for (c, e) in cs
                    .as_object()
                    .ok_or_else(|| Error::Model("constants must be an object".into()))?
                {
                    constants.insert(c.clone(), index(&label_of(e)?)?);
                }
            }
            let mut team = FoTeam::new();
            for row in obj
                .get("team")
                .and_then(|t| t.as_array())
                .ok_or_else(|| Error::Model("team must be an array".into()))?
            {
                let mut s = FoAssignment::new();
                for (var, e) in row
                    .as_object()
                    .ok_or_else(|| Error::Model("assignments must be objects".into()))?
                {
                    s.insert(var.clone(), index(&label_of(e)?)?);
                }
                team.insert(s);
            }
            Ok(TeamModel::Fo {
                structure: FoStructure { domain, relations, functions, constants },
                team,
            })
        } else {
            let mut team = PropTeam::new();
            for row in obj
                .get("team")
                .and_then(|t| t.as_array())
                .ok_or_else(|| Error::Model("team must be an array".into()))?
            {
                let mut s = PropAssignment::new();
                for (p, b) in row
                    .as_object()
                    .ok_or_else(|| Error::Model("assignments must be objects".into()))?
                {
                    let bit = match b {
                        Value::Number(n) => n.as_u64() == Some(1),
                        Value::Bool(b) => *b,
                        _ => return Err(Error::Model(format!("bad truth value {b}"))),
                    };
                    s.insert(p.clone(), bit);
                }
                team.insert(s);
            }
            Ok(TeamModel::Prop { team })
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            TeamModel::Prop { team } => {
                let rows: Vec<Value> = team
                    .iter()
                    .map(|m| {
                        Value::Object(
                            m.iter()
                                .map(|(k, v)| (k.clone(), Value::from(u8::from(*v))))
                                .collect(),
                        )
                    })
                    .collect();
                serde_json::json!({ "team": rows })
            }
            TeamModel::Kripke { structure, team } => {
                let edges: Vec<Value> = structure
                    .rel
                    .iter()
                    .map(|(a, b)| {
                        serde_json::json!([structure.worlds[*a], structure.worlds[*b]])
                    })
                    .collect();
                let val: serde_json::Map<String, Value> = structure
                    .val
                    .iter()
                    .map(|(p, ws)| {
                        (
                            p.clone(),
                            Value::Array(
                                ws.iter().map(|w| structure.worlds[*w].clone().into()).collect(),
                            ),
                        )
                    })
                    .collect();
                serde_json::json!({
                    "worlds": structure.worlds,
                    "edges": edges,
                    "val": val,
                    "team": team.iter().map(|w| structure.worlds[*w].clone()).collect::<Vec<_>>(),
                })
            }
            TeamModel::Fo { structure, team } => {
                let relations: serde_json::Map<String, Value> = structure
                    .relations
                    .iter()
                    .map(|(r, rows)| {
                        (
                            r.clone(),
                            Value::Array(
                                rows.iter()
                                    .map(|row| {
                                        Value::Array(
                                            row.iter()
                                                .map(|e| structure.domain[*e].clone().into())
                                                .collect(),
                                        )
                                    })
                                    .collect(),
                            ),
                        )
                    })
                    .collect();
                let constants: serde_json::Map<String, Value> = structure
                    .constants
                    .iter()
                    .map(|(c, e)| (c.clone(), structure.domain[*e].clone().into()))
                    .collect();
                let rows: Vec<Value> = team
                    .iter()
                    .map(|s| {
                        Value::Object(
                            s.iter()
                                .map(|(x, e)| (x.clone(), structure.domain[*e].clone().into()))
                                .collect(),
                        )
                    })
                    .collect();
                serde_json::json!({
                    "domain": structure.domain,
                    "relations": relations,
                    "constants": constants,
                    "team": rows,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::*;
    use crate::parse::parse_prop;

    fn team_of(rows: &[&[(&str, bool)]]) -> PropTeam {
        rows.iter()
            .map(|r| r.iter().map(|(k, v)| (k.to_string(), *v)).collect())
            .collect()
    }

    #[test]
    fn split_counts() {
        let t = team_of(&[&[("p", true)]]);
        assert_eq!(splits(&t, SemanticsMode::Lax).len(), 3);
        let t2 = team_of(&[&[("p", true)], &[("p", false)]]);
        assert_eq!(splits(&t2, SemanticsMode::Strict).len(), 4);
        let empty = PropTeam::new();
        assert_eq!(splits(&empty, SemanticsMode::Lax).len(), 1);
    }

    #[test]
    fn lax_split_order_for_singleton() {
        let t = team_of(&[&[("p", true)]]);
        let ss = splits(&t, SemanticsMode::Lax);
        assert_eq!(ss[0].0.len(), 0);
        assert_eq!(ss[0].1.len(), 1);
        assert_eq!(ss[1].0.len(), 1);
        assert_eq!(ss[1].1.len(), 0);
        assert_eq!(ss[2].0.len(), 1);
        assert_eq!(ss[2].1.len(), 1);
    }

    #[test]
    fn empty_team_satisfies_classical() {
        let model = TeamModel::Prop { team: PropTeam::new() };
        let f = parse_prop("p & !p").unwrap();
        assert!(eval_team(&model, &f, SemanticsMode::Lax).unwrap());
        assert!(!eval_team(&model, &ne(), SemanticsMode::Lax).unwrap());
    }

    #[test]
    fn strict_counting_formula_detects_singletons() {
        let f = parse_prop("NE && ~(NE * NE)").unwrap();
        let one = TeamModel::Prop { team: team_of(&[&[("p", true), ("q", false)]]) };
        let two = TeamModel::Prop {
            team: team_of(&[&[("p", true), ("q", false)], &[("p", false), ("q", false)]]),
        };
        assert!(eval_team(&one, &f, SemanticsMode::Strict).unwrap());
        assert!(!eval_team(&two, &f, SemanticsMode::Strict).unwrap());
        assert!(!eval_team(&one, &f, SemanticsMode::Lax).unwrap());
    }

    #[test]
    fn box_uses_global_successor() {
        let k = KripkeStructure {
            worlds: vec!["1".into(), "2".into()],
            rel: [(0, 1)].into(),
            val: [("p".to_string(), BTreeSet::from([1]))].into(),
        };
        let model = TeamModel::Kripke { structure: k, team: [0].into() };
        let f = parse_prop("box p").unwrap();
        assert!(eval_team(&model, &f, SemanticsMode::Lax).unwrap());
    }

    #[test]
    fn successor_team_enumeration() {
        let k = KripkeStructure {
            worlds: vec!["1".into(), "2".into(), "3".into()],
            rel: [(0, 1), (0, 2)].into(),
            val: BTreeMap::new(),
        };
        let teams = successor_teams(&k, &[0].into(), SemanticsMode::Lax);
        assert_eq!(teams.len(), 3);
        let k2 = KripkeStructure {
            worlds: vec!["1".into(), "2".into()],
            rel: [(0, 1)].into(),
            val: BTreeMap::new(),
        };
        assert_eq!(successor_teams(&k2, &[0].into(), SemanticsMode::Lax), vec![[1].into()]);
        // a world without successors has no successor teams
        assert!(successor_teams(&k2, &[1].into(), SemanticsMode::Lax).is_empty());
        assert_eq!(successor_teams(&k2, &BTreeSet::new(), SemanticsMode::Lax), vec![BTreeSet::new()]);
    }

    #[test]
    fn supplement_counts() {
        let t = team_of(&[&[("y", true)]]);
        assert_eq!(supplement_teams_prop(&t, "x", SemanticsMode::Lax).len(), 3);
        assert_eq!(supplement_teams_prop(&t, "x", SemanticsMode::Strict).len(), 2);
        let empty = PropTeam::new();
        assert_eq!(supplement_teams_prop(&empty, "x", SemanticsMode::Lax), vec![PropTeam::new()]);
    }

    #[test]
    fn duplicating_team_is_among_lax_supplements() {
        let t = team_of(&[&[("y", true)], &[("y", false)]]);
        let dup = duplicate_team_prop(&t, "x");
        assert!(supplement_teams_prop(&t, "x", SemanticsMode::Lax).contains(&dup));
        assert_eq!(duplicate_team_prop(&PropTeam::new(), "x"), PropTeam::new());
    }

    #[test]
    fn lax_limp_with_classical_consequent_collapses() {
        // p -o q is equivalent to q on every team over {p, q} in lax mode
        let f = parse_prop("p -o q").unwrap();
        let q = parse_prop("q").unwrap();
        for team in crate::oracle::all_prop_teams(&["p".into(), "q".into()]) {
            let model = TeamModel::Prop { team };
            assert_eq!(
                eval_team(&model, &f, SemanticsMode::Lax).unwrap(),
                eval_team(&model, &q, SemanticsMode::Lax).unwrap()
            );
        }
    }
}
