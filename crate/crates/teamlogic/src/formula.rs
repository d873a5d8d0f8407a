//! Formula and term syntax trees.
//!
//! Only twelve primitive node kinds exist after parsing. Derived connectives
//! (`&`, `|`, `*`, `&&`, `||`, `<~>`, `dia`, `exists`, the constants `T`,
//! `F`, `FF`, `NE` and `E(..)`) are surface sugar and are expanded by their
//! constructor functions; the renderer folds them back.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;

/// First-order term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Const(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(x) => {
                out.insert(x.clone());
            }
            Term::Const(_) => {}
            Term::App(_, args) => {
                for a in args {
                    a.vars(out);
                }
            }
        }
    }
}

/// A team-logic formula over the primitive connectives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    /// Propositional atom (also quantifiable in the QBF fragments).
    Atom(String),
    /// First-order relational atom.
    Pred(String, Vec<Term>),
    /// First-order equality atom.
    Eq(Term, Term),
    /// Classical negation; operand must stay classical.
    Not(Box<Formula>),
    /// Classical implication; operands must stay classical.
    Imp(Box<Formula>, Box<Formula>),
    /// Strong (team) negation `~`.
    Sneg(Box<Formula>),
    /// Material (team) implication `~>`.
    Mimp(Box<Formula>, Box<Formula>),
    /// Linear implication `-o`, quantifying team divisions.
    Limp(Box<Formula>, Box<Formula>),
    /// `box`, evaluated on the global successor team.
    Box(Box<Formula>),
    /// `delta`, quantifying successor teams.
    Delta(Box<Formula>),
    /// `forall x.`, evaluated on the duplicating team (or classically).
    Forall(String, Box<Formula>),
    /// `shriek x.`, quantifying supplementing teams.
    Shriek(String, Box<Formula>),
}

pub fn atom(name: &str) -> Formula {
    Formula::Atom(name.to_string())
}

pub fn not(f: Formula) -> Formula {
    Formula::Not(Box::new(f))
}

pub fn imp(a: Formula, b: Formula) -> Formula {
    Formula::Imp(Box::new(a), Box::new(b))
}

pub fn sneg(f: Formula) -> Formula {
    Formula::Sneg(Box::new(f))
}

pub fn mimp(a: Formula, b: Formula) -> Formula {
    Formula::Mimp(Box::new(a), Box::new(b))
}

pub fn limp(a: Formula, b: Formula) -> Formula {
    Formula::Limp(Box::new(a), Box::new(b))
}

pub fn boxf(f: Formula) -> Formula {
    Formula::Box(Box::new(f))
}

pub fn delta(f: Formula) -> Formula {
    Formula::Delta(Box::new(f))
}

pub fn forall(x: &str, f: Formula) -> Formula {
    Formula::Forall(x.to_string(), Box::new(f))
}

pub fn shriek(x: &str, f: Formula) -> Formula {
    Formula::Shriek(x.to_string(), Box::new(f))
}

/// The fixed first proposition used by the `T` constant.
pub const TOP_ATOM: &str = "p0";

/// `T := p0 -> p0` for the fixed first proposition `p0`.
pub fn top() -> Formula {
    imp(atom(TOP_ATOM), atom(TOP_ATOM))
}

/// `F := !T`.
pub fn bot() -> Formula {
    not(top())
}

/// Strong falsum `FF := ~(T ~> T)`, satisfied by no team.
pub fn strong_bot() -> Formula {
    sneg(mimp(top(), top()))
}

/// `NE := ~F`, team non-emptiness.
pub fn ne() -> Formula {
    sneg(bot())
}

/// `E(b) := ~!b` — some team member satisfies `b`.
pub fn esome(b: Formula) -> Formula {
    sneg(not(b))
}

/// `a & b := !(a -> !b)`.
pub fn and(a: Formula, b: Formula) -> Formula {
    not(imp(a, not(b)))
}

/// `a | b := !a -> b`.
pub fn or(a: Formula, b: Formula) -> Formula {
    imp(not(a), b)
}

/// `a && b := ~(a ~> ~b)`.
pub fn wedge(a: Formula, b: Formula) -> Formula {
    sneg(mimp(a, sneg(b)))
}

/// `a || b := ~a ~> b`.
pub fn vee(a: Formula, b: Formula) -> Formula {
    mimp(sneg(a), b)
}

/// `a * b := ~(a -o ~b)`.
pub fn tensor(a: Formula, b: Formula) -> Formula {
    sneg(limp(a, sneg(b)))
}

/// `a <~> b := (a ~> b) && (b ~> a)`.
pub fn strong_iff(a: Formula, b: Formula) -> Formula {
    wedge(mimp(a.clone(), b.clone()), mimp(b, a))
}

/// `dia f := ~delta ~f`.
pub fn dia(f: Formula) -> Formula {
    sneg(delta(sneg(f)))
}

/// `exists x. f := ~shriek x. ~f`.
pub fn exists(x: &str, f: Formula) -> Formula {
    sneg(shriek(x, sneg(f)))
}

/// Classical biconditional `a <-> b := (a -> b) & (b -> a)` (used by the
/// quantifier expansion axiom).
pub fn iff(a: Formula, b: Formula) -> Formula {
    and(imp(a.clone(), b.clone()), imp(b, a))
}

/// Fragments ordered by syntactic inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FragmentTag {
    Pl,
    Qbf,
    Ml,
    Fo,
    BPl,
    BQbf,
    BMl,
    BFo,
    Ptl,
    Qptl,
    Mtl,
    QFo,
}

impl fmt::Display for FragmentTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FragmentTag::Pl => "PL",
            FragmentTag::Qbf => "QBF",
            FragmentTag::Ml => "ML",
            FragmentTag::Fo => "FO",
            FragmentTag::BPl => "B(PL)",
            FragmentTag::BQbf => "B(QBF)",
            FragmentTag::BMl => "B(ML)",
            FragmentTag::BFo => "B(FO)",
            FragmentTag::Ptl => "PTL",
            FragmentTag::Qptl => "QPTL",
            FragmentTag::Mtl => "MTL",
            FragmentTag::QFo => "Q(FO)",
        };
        write!(f, "{s}")
    }
}

use FragmentTag::*;

const ALL_TAGS: [FragmentTag; 12] = [Pl, Qbf, Ml, Fo, BPl, BQbf, BMl, BFo, Ptl, Qptl, Mtl, QFo];

impl FragmentTag {
    pub fn is_classical(self) -> bool {
        matches!(self, Pl | Qbf | Ml | Fo)
    }

    /// Syntactic inclusion order on fragments.
    pub fn le(self, other: FragmentTag) -> bool {
        if self == other {
            return true;
        }
        // covering edges of the inclusion order
        const EDGES: [(FragmentTag, FragmentTag); 13] = [
            (Pl, Qbf),
            (Pl, Ml),
            (Pl, BPl),
            (Qbf, BQbf),
            (Ml, BMl),
            (BPl, BQbf),
            (BPl, BMl),
            (BPl, Ptl),
            (BQbf, Qptl),
            (BMl, Mtl),
            (Ptl, Qptl),
            (Ptl, Mtl),
            (Fo, BFo),
        ];
        let mut frontier = vec![self];
        let mut seen = vec![self];
        if self == BFo && other == QFo {
            return true;
        }
        while let Some(t) = frontier.pop() {
            for (a, b) in EDGES {
                let next = if t == a { Some(b) } else { None };
                if let Some(n) = next {
                    if n == other {
                        return true;
                    }
                    if n == BFo && other == QFo {
                        return true;
                    }
                    if !seen.contains(&n) {
                        seen.push(n);
                        frontier.push(n);
                    }
                }
            }
            if t == BFo && other == QFo {
                return true;
            }
        }
        false
    }

    /// Least upper bound in the fragment order, if one exists.
    pub fn join(self, other: FragmentTag) -> Option<FragmentTag> {
        let mut best: Option<FragmentTag> = None;
        for t in ALL_TAGS {
            if self.le(t) && other.le(t) {
                best = match best {
                    None => Some(t),
                    Some(b) => Some(if t.le(b) { t } else { b }),
                };
            }
        }
        best
    }

    fn boolean_close(self) -> FragmentTag {
        match self {
            Pl => BPl,
            Qbf => BQbf,
            Ml => BMl,
            Fo => BFo,
            t => t,
        }
    }

    fn split_close(self) -> Option<FragmentTag> {
        Some(match self {
            Pl | BPl | Ptl => Ptl,
            Qbf | BQbf | Qptl => Qptl,
            Ml | BMl | Mtl => Mtl,
            Fo | BFo | QFo => QFo,
        })
    }
}

impl Formula {
    /// Number of formula nodes (terms not counted).
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Pred(..) | Formula::Eq(..) => 1,
            Formula::Not(f)
            | Formula::Sneg(f)
            | Formula::Box(f)
            | Formula::Delta(f)
            | Formula::Forall(_, f)
            | Formula::Shriek(_, f) => 1 + f.size(),
            Formula::Imp(a, b) | Formula::Mimp(a, b) | Formula::Limp(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    /// Propositional atoms occurring anywhere (bound or free).
    pub fn props(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(p) => {
                out.insert(p.clone());
            }
            Formula::Pred(..) | Formula::Eq(..) => {}
            Formula::Not(f) | Formula::Sneg(f) | Formula::Box(f) | Formula::Delta(f) => {
                f.props(out)
            }
            Formula::Forall(x, f) | Formula::Shriek(x, f) => {
                out.insert(x.clone());
                f.props(out);
            }
            Formula::Imp(a, b) | Formula::Mimp(a, b) | Formula::Limp(a, b) => {
                a.props(out);
                b.props(out);
            }
        }
    }

    pub fn prop_set(&self) -> BTreeSet<String> {
        let mut s = BTreeSet::new();
        self.props(&mut s);
        s
    }

    /// Free first-order variables.
    pub fn free_vars(&self) -> BTreeSet<String> {
        fn walk(f: &Formula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
            match f {
                Formula::Atom(_) => {}
                Formula::Pred(_, ts) => {
                    let mut vs = BTreeSet::new();
                    for t in ts {
                        t.vars(&mut vs);
                    }
                    for v in vs {
                        if !bound.contains(&v) {
                            out.insert(v);
                        }
                    }
                }
                Formula::Eq(a, b) => {
                    let mut vs = BTreeSet::new();
                    a.vars(&mut vs);
                    b.vars(&mut vs);
                    for v in vs {
                        if !bound.contains(&v) {
                            out.insert(v);
                        }
                    }
                }
                Formula::Not(g) | Formula::Sneg(g) | Formula::Box(g) | Formula::Delta(g) => {
                    walk(g, bound, out)
                }
                Formula::Imp(a, b) | Formula::Mimp(a, b) | Formula::Limp(a, b) => {
                    walk(a, bound, out);
                    walk(b, bound, out);
                }
                Formula::Forall(x, g) | Formula::Shriek(x, g) => {
                    bound.push(x.clone());
                    walk(g, bound, out);
                    bound.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Free propositional atoms (those not captured by a quantifier).
    pub fn free_props(&self) -> BTreeSet<String> {
        fn walk(f: &Formula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
            match f {
                Formula::Atom(p) => {
                    if !bound.contains(p) {
                        out.insert(p.clone());
                    }
                }
                Formula::Pred(..) | Formula::Eq(..) => {}
                Formula::Not(g) | Formula::Sneg(g) | Formula::Box(g) | Formula::Delta(g) => {
                    walk(g, bound, out)
                }
                Formula::Imp(a, b) | Formula::Mimp(a, b) | Formula::Limp(a, b) => {
                    walk(a, bound, out);
                    walk(b, bound, out);
                }
                Formula::Forall(x, g) | Formula::Shriek(x, g) => {
                    bound.push(x.clone());
                    walk(g, bound, out);
                    bound.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn is_classical(&self) -> bool {
        self.classify().map(|t| t.is_classical()).unwrap_or(false)
    }

    /// Least fragment containing this formula.
    pub fn classify(&self) -> Result<FragmentTag, Error> {
        let join2 = |a: FragmentTag, b: FragmentTag| -> Result<FragmentTag, Error> {
            a.join(b)
                .ok_or_else(|| Error::Fragment(format!("no fragment contains both {a} and {b}")))
        };
        match self {
            Formula::Atom(_) => Ok(Pl),
            Formula::Pred(..) | Formula::Eq(..) => Ok(Fo),
            Formula::Not(f) => {
                let t = f.classify()?;
                if !t.is_classical() {
                    return Err(Error::Fragment(format!(
                        "classical negation over a non-classical operand ({t})"
                    )));
                }
                Ok(t)
            }
            Formula::Imp(a, b) => {
                let ta = a.classify()?;
                let tb = b.classify()?;
                let t = join2(ta, tb)?;
                if !t.is_classical() {
                    return Err(Error::Fragment(format!(
                        "classical implication over non-classical operands ({t})"
                    )));
                }
                Ok(t)
            }
            Formula::Sneg(f) => Ok(f.classify()?.boolean_close()),
            Formula::Mimp(a, b) => Ok(join2(a.classify()?, b.classify()?)?.boolean_close()),
            Formula::Limp(a, b) => {
                let t = join2(a.classify()?, b.classify()?)?;
                t.split_close()
                    .ok_or_else(|| Error::Fragment(format!("no splitting fragment over {t}")))
            }
            Formula::Box(f) => {
                let t = f.classify()?;
                match t {
                    Pl | Ml => Ok(Ml),
                    BPl | BMl | Ptl | Mtl => Ok(Mtl),
                    _ => Err(Error::Fragment(format!("box over {t}"))),
                }
            }
            Formula::Delta(f) => {
                let t = f.classify()?;
                if t.le(Mtl) {
                    Ok(Mtl)
                } else {
                    Err(Error::Fragment(format!("delta over {t}")))
                }
            }
            Formula::Forall(_, f) => {
                let t = f.classify()?;
                match t {
                    Pl | Qbf => Ok(Qbf),
                    Fo => Ok(Fo),
                    _ if t.le(Qptl) => Ok(Qptl),
                    _ if t.le(QFo) => Ok(QFo),
                    _ => Err(Error::Fragment(format!("forall over {t}"))),
                }
            }
            Formula::Shriek(_, f) => {
                let t = f.classify()?;
                if t.le(Qptl) {
                    Ok(Qptl)
                } else if t.le(QFo) {
                    Ok(QFo)
                } else {
                    Err(Error::Fragment(format!("shriek over {t}")))
                }
            }
        }
    }

    /// Replace every syntactic occurrence of `target` by `replacement`.
    pub fn substitute_subformula(&self, target: &Formula, replacement: &Formula) -> Formula {
        if self == target {
            return replacement.clone();
        }
        match self {
            Formula::Atom(_) | Formula::Pred(..) | Formula::Eq(..) => self.clone(),
            Formula::Not(f) => not(f.substitute_subformula(target, replacement)),
            Formula::Sneg(f) => sneg(f.substitute_subformula(target, replacement)),
            Formula::Box(f) => boxf(f.substitute_subformula(target, replacement)),
            Formula::Delta(f) => delta(f.substitute_subformula(target, replacement)),
            Formula::Imp(a, b) => imp(
                a.substitute_subformula(target, replacement),
                b.substitute_subformula(target, replacement),
            ),
            Formula::Mimp(a, b) => mimp(
                a.substitute_subformula(target, replacement),
                b.substitute_subformula(target, replacement),
            ),
            Formula::Limp(a, b) => limp(
                a.substitute_subformula(target, replacement),
                b.substitute_subformula(target, replacement),
            ),
            Formula::Forall(x, f) => forall(x, f.substitute_subformula(target, replacement)),
            Formula::Shriek(x, f) => shriek(x, f.substitute_subformula(target, replacement)),
        }
    }

    /// Substitute the proposition `x` by a formula, respecting quantifier
    /// shadowing. Used by the QBF quantifier expansion; `g` must be closed
    /// w.r.t. capture (the expansion substitutes `T`/`F` only).
    pub fn substitute_prop(&self, x: &str, g: &Formula) -> Formula {
        match self {
            Formula::Atom(p) if p == x => g.clone(),
            Formula::Atom(_) | Formula::Pred(..) | Formula::Eq(..) => self.clone(),
            Formula::Not(f) => not(f.substitute_prop(x, g)),
            Formula::Sneg(f) => sneg(f.substitute_prop(x, g)),
            Formula::Box(f) => boxf(f.substitute_prop(x, g)),
            Formula::Delta(f) => delta(f.substitute_prop(x, g)),
            Formula::Imp(a, b) => imp(a.substitute_prop(x, g), b.substitute_prop(x, g)),
            Formula::Mimp(a, b) => mimp(a.substitute_prop(x, g), b.substitute_prop(x, g)),
            Formula::Limp(a, b) => limp(a.substitute_prop(x, g), b.substitute_prop(x, g)),
            Formula::Forall(y, f) => {
                if y == x {
                    self.clone()
                } else {
                    forall(y, f.substitute_prop(x, g))
                }
            }
            Formula::Shriek(y, f) => {
                if y == x {
                    self.clone()
                } else {
                    shriek(y, f.substitute_prop(x, g))
                }
            }
        }
    }

    /// Capture-avoiding substitution of the first-order variable `x` by the
    /// term `t`. Bound variables that would capture are freshened with the
    /// least unused numeric suffix.
    pub fn substitute_var(&self, x: &str, t: &Term) -> Formula {
        let mut avoid = self.all_names();
        let mut tvars = BTreeSet::new();
        t.vars(&mut tvars);
        avoid.extend(tvars.iter().cloned());
        self.subst_var_inner(x, t, &tvars, &mut avoid)
    }

    fn all_names(&self) -> BTreeSet<String> {
        fn term_names(t: &Term, out: &mut BTreeSet<String>) {
            match t {
                Term::Var(v) => {
                    out.insert(v.clone());
                }
                Term::Const(_) => {}
                Term::App(_, args) => args.iter().for_each(|a| term_names(a, out)),
            }
        }
        fn walk(f: &Formula, out: &mut BTreeSet<String>) {
            match f {
                Formula::Atom(p) => {
                    out.insert(p.clone());
                }
                Formula::Pred(_, ts) => ts.iter().for_each(|t| term_names(t, out)),
                Formula::Eq(a, b) => {
                    term_names(a, out);
                    term_names(b, out);
                }
                Formula::Not(g) | Formula::Sneg(g) | Formula::Box(g) | Formula::Delta(g) => {
                    walk(g, out)
                }
                Formula::Imp(a, b) | Formula::Mimp(a, b) | Formula::Limp(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                Formula::Forall(x, g) | Formula::Shriek(x, g) => {
                    out.insert(x.clone());
                    walk(g, out);
                }
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut out);
        out
    }

    fn subst_var_inner(
        &self,
        x: &str,
        t: &Term,
        tvars: &BTreeSet<String>,
        avoid: &mut BTreeSet<String>,
    ) -> Formula {
        fn subst_term(term: &Term, x: &str, t: &Term) -> Term {
            match term {
                Term::Var(v) if v == x => t.clone(),
                Term::Var(_) | Term::Const(_) => term.clone(),
                Term::App(f, args) => {
                    Term::App(f.clone(), args.iter().map(|a| subst_term(a, x, t)).collect())
                }
            }
        }
        match self {
            Formula::Atom(_) => self.clone(),
            Formula::Pred(r, ts) => {
                Formula::Pred(r.clone(), ts.iter().map(|a| subst_term(a, x, t)).collect())
            }
            Formula::Eq(a, b) => Formula::Eq(subst_term(a, x, t), subst_term(b, x, t)),
            Formula::Not(f) => not(f.subst_var_inner(x, t, tvars, avoid)),
            Formula::Sneg(f) => sneg(f.subst_var_inner(x, t, tvars, avoid)),
            Formula::Box(f) => boxf(f.subst_var_inner(x, t, tvars, avoid)),
            Formula::Delta(f) => delta(f.subst_var_inner(x, t, tvars, avoid)),
            Formula::Imp(a, b) => imp(
                a.subst_var_inner(x, t, tvars, avoid),
                b.subst_var_inner(x, t, tvars, avoid),
            ),
            Formula::Mimp(a, b) => mimp(
                a.subst_var_inner(x, t, tvars, avoid),
                b.subst_var_inner(x, t, tvars, avoid),
            ),
            Formula::Limp(a, b) => limp(
                a.subst_var_inner(x, t, tvars, avoid),
                b.subst_var_inner(x, t, tvars, avoid),
            ),
            Formula::Forall(y, f) | Formula::Shriek(y, f) => {
                let is_forall = matches!(self, Formula::Forall(..));
                if y == x {
                    // occurrence bound here, nothing free below
                    return self.clone();
                }
                let (y2, body) = if tvars.contains(y) && f.free_vars().contains(x) {
                    // would capture: freshen y with the least unused suffix
                    let fresh = fresh_name(y, avoid);
                    avoid.insert(fresh.clone());
                    let renamed = f.subst_var_inner(y, &Term::Var(fresh.clone()), tvars, avoid);
                    (fresh, renamed.subst_var_inner(x, t, tvars, avoid))
                } else {
                    (y.clone(), f.subst_var_inner(x, t, tvars, avoid))
                };
                if is_forall {
                    forall(&y2, body)
                } else {
                    shriek(&y2, body)
                }
            }
        }
    }
}

/// `base1`, `base2`, ... — first name with a numeric suffix not in `avoid`.
pub fn fresh_name(base: &str, avoid: &BTreeSet<String>) -> String {
    for i in 1.. {
        let cand = format!("{base}{i}");
        if !avoid.contains(&cand) {
            return cand;
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fragment_order_is_reflexive_and_respects_inclusion() {
        for t in ALL_TAGS {
            assert!(t.le(t));
        }
        assert!(Pl.le(Qptl));
        assert!(BPl.le(Mtl));
        assert!(Ptl.le(Qptl));
        assert!(Fo.le(QFo));
        assert!(!Qbf.le(Mtl));
        assert!(!Ml.le(Qptl));
        assert!(!Pl.le(Fo));
    }

    #[test]
    fn join_of_modal_and_quantified_does_not_exist() {
        assert_eq!(Qbf.join(Ml), None);
        assert_eq!(Mtl.join(Qptl), None);
        assert_eq!(Fo.join(Pl), None);
        assert_eq!(Qbf.join(BPl), Some(BQbf));
        assert_eq!(Ml.join(BPl), Some(BMl));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(imp(atom("a"), atom("b")).classify().unwrap(), Pl);
        assert_eq!(mimp(sneg(atom("a")), atom("b")).classify().unwrap(), BPl);
        assert_eq!(boxf(sneg(atom("p"))).classify().unwrap(), Mtl);
        assert_eq!(limp(atom("p"), atom("q")).classify().unwrap(), Ptl);
        assert_eq!(boxf(atom("p")).classify().unwrap(), Ml);
        assert_eq!(forall("x", or(atom("x"), atom("y"))).classify().unwrap(), Qbf);
        assert!(not(sneg(atom("p"))).classify().is_err());
        assert!(boxf(forall("x", atom("x"))).classify().is_err());
    }

    #[test]
    fn classify_is_monotone_on_subformulas() {
        let f = mimp(tensor(atom("p"), atom("q")), sneg(boxf(atom("p"))));
        let top = f.classify().unwrap();
        fn subs<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
            out.push(f);
            match f {
                Formula::Atom(_) | Formula::Pred(..) | Formula::Eq(..) => {}
                Formula::Not(g)
                | Formula::Sneg(g)
                | Formula::Box(g)
                | Formula::Delta(g)
                | Formula::Forall(_, g)
                | Formula::Shriek(_, g) => subs(g, out),
                Formula::Imp(a, b) | Formula::Mimp(a, b) | Formula::Limp(a, b) => {
                    subs(a, out);
                    subs(b, out);
                }
            }
        }
        let mut all = Vec::new();
        subs(&f, &mut all);
        for s in all {
            assert!(s.classify().unwrap().le(top));
        }
    }

    #[test]
    fn capture_avoiding_substitution_freshens() {
        // (forall y. R(x,y))[x/y] -> forall y1. R(y, y1)
        let f = forall(
            "y",
            Formula::Pred("R".into(), vec![Term::Var("x".into()), Term::Var("y".into())]),
        );
        let got = f.substitute_var("x", &Term::Var("y".into()));
        let want = forall(
            "y1",
            Formula::Pred("R".into(), vec![Term::Var("y".into()), Term::Var("y1".into())]),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn substitution_without_capture_is_plain() {
        let f = forall(
            "y",
            Formula::Pred("R".into(), vec![Term::Var("x".into()), Term::Var("y".into())]),
        );
        let got = f.substitute_var("x", &Term::Const("c".into()));
        let want = forall(
            "y",
            Formula::Pred("R".into(), vec![Term::Const("c".into()), Term::Var("y".into())]),
        );
        assert_eq!(got, want);
    }

    #[test]
    fn subformula_substitution_is_syntactic() {
        let f = mimp(atom("p"), atom("p"));
        assert_eq!(f.substitute_subformula(&atom("p"), &atom("q")), mimp(atom("q"), atom("q")));
        assert_eq!(f.substitute_subformula(&atom("z"), &atom("q")), f);
        let g = and(atom("x"), atom("y"));
        assert_eq!(g.substitute_subformula(&atom("x"), &top()), and(top(), atom("y")));
    }
}
