//! Canonical surface rendering. Inverse of the parser up to desugaring:
//! derived connectives are folded back whenever their defining pattern
//! occurs in the tree.

use crate::formula::{Formula, Term, TOP_ATOM};

fn is_top(f: &Formula) -> bool {
    matches!(f, Formula::Imp(a, b)
        if matches!(&**a, Formula::Atom(p) if p == TOP_ATOM)
        && matches!(&**b, Formula::Atom(p) if p == TOP_ATOM))
}

fn is_bot(f: &Formula) -> bool {
    matches!(f, Formula::Not(g) if is_top(g))
}

/// Derived connectives recognized by the renderer, most specific first.
enum Sugar<'a> {
    Top,
    Bot,
    StrongBot,
    Ne,
    Exist(&'a Formula),
    StrongIff(&'a Formula, &'a Formula),
    Tensor(&'a Formula, &'a Formula),
    Wedge(&'a Formula, &'a Formula),
    Vee(&'a Formula, &'a Formula),
    Dia(&'a Formula),
    Exists(&'a str, &'a Formula),
    And(&'a Formula, &'a Formula),
    Or(&'a Formula, &'a Formula),
}

fn sugar_of(f: &Formula) -> Option<Sugar<'_>> {
    if is_top(f) {
        return Some(Sugar::Top);
    }
    if is_bot(f) {
        return Some(Sugar::Bot);
    }
    match f {
        // FF = ~(T ~> T)
        Formula::Sneg(inner) => match &**inner {
            Formula::Mimp(a, b) if is_top(a) && is_top(b) => Some(Sugar::StrongBot),
            Formula::Not(b) if is_top(b) => Some(Sugar::Ne),
            Formula::Not(b) => Some(Sugar::Exist(b)),
            // <~> before && : ~( (a~>b) ~> ~(b~>a) )
            Formula::Mimp(l, r) => match &**r {
                Formula::Sneg(rr) => {
                    if let (Formula::Mimp(a1, b1), Formula::Mimp(b2, a2)) = (&**l, &**rr) {
                        if a1 == a2 && b1 == b2 {
                            return Some(Sugar::StrongIff(a1, b1));
                        }
                    }
                    Some(Sugar::Wedge(l, rr))
                }
                _ => None,
            },
            // a * b = ~(a -o ~b)
            Formula::Limp(a, nb) => match &**nb {
                Formula::Sneg(b) => Some(Sugar::Tensor(a, b)),
                _ => None,
            },
            // dia f = ~ delta ~f
            Formula::Delta(nf) => match &**nf {
                Formula::Sneg(g) => Some(Sugar::Dia(g)),
                _ => None,
            },
            // exists x. f = ~ shriek x. ~f
            Formula::Shriek(x, nf) => match &**nf {
                Formula::Sneg(g) => Some(Sugar::Exists(x, g)),
                _ => None,
            },
            _ => None,
        },
        // a || b = ~a ~> b
        Formula::Mimp(na, b) => match &**na {
            Formula::Sneg(a) => Some(Sugar::Vee(a, b)),
            _ => None,
        },
        // a & b = !(a -> !b)
        Formula::Not(inner) => match &**inner {
            Formula::Imp(a, nb) => match &**nb {
                Formula::Not(b) => Some(Sugar::And(a, b)),
                _ => None,
            },
            _ => None,
        },
        // a | b = !a -> b
        Formula::Imp(na, b) => match &**na {
            Formula::Not(a) => Some(Sugar::Or(a, b)),
            _ => None,
        },
        _ => None,
    }
}

// precedence levels, loosest to tightest
const LVL_IFF: u8 = 0;
const LVL_IMP: u8 = 1;
const LVL_OR: u8 = 2;
const LVL_AND: u8 = 3;
const LVL_PREFIX: u8 = 4;
const LVL_ATOM: u8 = 5;

pub fn render_term(t: &Term) -> String {
    match t {
        Term::Var(v) | Term::Const(v) => v.clone(),
        Term::App(f, args) => {
            let inner: Vec<String> = args.iter().map(render_term).collect();
            format!("{f}({})", inner.join(", "))
        }
    }
}

fn level(f: &Formula) -> u8 {
    match sugar_of(f) {
        Some(Sugar::Top | Sugar::Bot | Sugar::StrongBot | Sugar::Ne | Sugar::Exist(_)) => LVL_ATOM,
        Some(Sugar::StrongIff(..)) => LVL_IFF,
        Some(Sugar::Tensor(..) | Sugar::Vee(..) | Sugar::Or(..)) => LVL_OR,
        Some(Sugar::Wedge(..) | Sugar::And(..)) => LVL_AND,
        Some(Sugar::Dia(_) | Sugar::Exists(..)) => LVL_PREFIX,
        None => match f {
            Formula::Atom(_) | Formula::Pred(..) | Formula::Eq(..) => LVL_ATOM,
            Formula::Imp(..) | Formula::Mimp(..) | Formula::Limp(..) => LVL_IMP,
            Formula::Not(_)
            | Formula::Sneg(_)
            | Formula::Box(_)
            | Formula::Delta(_)
            | Formula::Forall(..)
            | Formula::Shriek(..) => LVL_PREFIX,
        },
    }
}

fn child(f: &Formula, min: u8, out: &mut String) {
    if level(f) < min {
        out.push('(');
        go(f, out);
        out.push(')');
    } else {
        go(f, out);
    }
}

fn binary(a: &Formula, op: &str, b: &Formula, lvl: u8, right_assoc: bool, out: &mut String) {
    let (lmin, rmin) = if right_assoc { (lvl + 1, lvl) } else { (lvl, lvl + 1) };
    child(a, lmin, out);
    out.push(' ');
    out.push_str(op);
    out.push(' ');
    child(b, rmin, out);
}

fn go(f: &Formula, out: &mut String) {
    if let Some(s) = sugar_of(f) {
        match s {
            Sugar::Top => out.push('T'),
            Sugar::Bot => out.push('F'),
            Sugar::StrongBot => out.push_str("FF"),
            Sugar::Ne => out.push_str("NE"),
            Sugar::Exist(b) => {
                out.push_str("E(");
                go(b, out);
                out.push(')');
            }
            Sugar::StrongIff(a, b) => binary(a, "<~>", b, LVL_IFF, false, out),
            Sugar::Tensor(a, b) => binary(a, "*", b, LVL_OR, false, out),
            Sugar::Vee(a, b) => binary(a, "||", b, LVL_OR, false, out),
            Sugar::Or(a, b) => binary(a, "|", b, LVL_OR, false, out),
            Sugar::Wedge(a, b) => binary(a, "&&", b, LVL_AND, false, out),
            Sugar::And(a, b) => binary(a, "&", b, LVL_AND, false, out),
            Sugar::Dia(g) => {
                out.push_str("dia ");
                child(g, LVL_PREFIX, out);
            }
            Sugar::Exists(x, g) => {
                out.push_str("exists ");
                out.push_str(x);
                out.push_str(". ");
                child(g, LVL_PREFIX, out);
            }
        }
        return;
    }
    match f {
        Formula::Atom(p) => out.push_str(p),
        Formula::Pred(r, args) => {
            out.push_str(r);
            out.push('(');
            let inner: Vec<String> = args.iter().map(render_term).collect();
            out.push_str(&inner.join(", "));
            out.push(')');
        }
        Formula::Eq(a, b) => {
            out.push_str(&render_term(a));
            out.push_str(" = ");
            out.push_str(&render_term(b));
        }
        Formula::Not(g) => {
            out.push('!');
            child(g, LVL_PREFIX, out);
        }
        Formula::Sneg(g) => {
            out.push('~');
            child(g, LVL_PREFIX, out);
        }
        Formula::Box(g) => {
            out.push_str("box ");
            child(g, LVL_PREFIX, out);
        }
        Formula::Delta(g) => {
            out.push_str("delta ");
            child(g, LVL_PREFIX, out);
        }
        Formula::Imp(a, b) => binary(a, "->", b, LVL_IMP, true, out),
        Formula::Mimp(a, b) => binary(a, "~>", b, LVL_IMP, true, out),
        Formula::Limp(a, b) => binary(a, "-o", b, LVL_IMP, true, out),
        Formula::Forall(x, g) => {
            out.push_str("forall ");
            out.push_str(x);
            out.push_str(". ");
            child(g, LVL_PREFIX, out);
        }
        Formula::Shriek(x, g) => {
            out.push_str("shriek ");
            out.push_str(x);
            out.push_str(". ");
            child(g, LVL_PREFIX, out);
        }
    }
}

/// Canonical surface syntax for a formula.
pub fn render(f: &Formula) -> String {
    let mut out = String::new();
    go(f, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::*;

    #[test]
    fn resugars_defined_patterns() {
        assert_eq!(render(&tensor(atom("p"), atom("q"))), "p * q");
        assert_eq!(render(&atom("a")), "a");
        assert_eq!(render(&dia(atom("p"))), "dia p");
        assert_eq!(render(&top()), "T");
        assert_eq!(render(&ne()), "NE");
        assert_eq!(render(&strong_bot()), "FF");
        assert_eq!(render(&esome(atom("b"))), "E(b)");
        assert_eq!(render(&and(atom("a"), atom("b"))), "a & b");
        assert_eq!(render(&or(atom("a"), atom("b"))), "a | b");
        assert_eq!(render(&wedge(atom("a"), atom("b"))), "a && b");
        assert_eq!(render(&vee(atom("a"), atom("b"))), "a || b");
        assert_eq!(render(&strong_iff(atom("a"), atom("b"))), "a <~> b");
        assert_eq!(
            render(&exists("x", tensor(atom("x"), sneg(atom("y"))))),
            "exists x. (x * ~y)"
        );
    }

    #[test]
    fn renders_forall_example() {
        let f = forall("x", Formula::Eq(Term::Var("x".into()), Term::Var("x".into())));
        assert_eq!(render(&f), "forall x. x = x");
    }

    #[test]
    fn right_assoc_implication_chain() {
        let f = mimp(atom("a"), mimp(atom("b"), atom("a")));
        assert_eq!(render(&f), "a ~> b ~> a");
        let g = mimp(mimp(atom("a"), atom("b")), atom("a"));
        assert_eq!(render(&g), "(a ~> b) ~> a");
    }
}
