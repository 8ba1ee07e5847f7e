//! Concrete verdicts on named small quantales, including the failures of
//! closure under joins, complements, products and arbitrary meets.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::document::{DocumentKind, LatticeDocument};
use crate::lattice::{Element, FiniteLattice};
use crate::mu;

use super::checks::{fail, Failure};
use super::{CheckReport, Instance, SuiteReport};

type Verdict = Result<usize, Failure>;

struct Example {
    name: &'static str,
    claim: &'static str,
    document: fn() -> LatticeDocument,
    run: fn(&Instance) -> Verdict,
}

fn zn(n: u64) -> LatticeDocument {
    LatticeDocument::new(DocumentKind::Zn { n })
}

fn p3() -> LatticeDocument {
    LatticeDocument::new(DocumentKind::Powerset { points: 3 })
}

fn pid() -> LatticeDocument {
    LatticeDocument::new(DocumentKind::PidQuotient {
        primes: vec!["x".into(), "x+1".into(), "x+2".into()],
        exponents: vec![2, 1, 1],
    })
}

fn at(l: &FiniteLattice, label: &str) -> Element {
    l.index_of(label)
        .unwrap_or_else(|| panic!("no element labelled {label}"))
}

fn label_set(l: &FiniteLattice, xs: impl IntoIterator<Item = Element>) -> BTreeSet<String> {
    xs.into_iter().map(|x| l.label(x).to_string()).collect()
}

fn names(labels: &[&str]) -> BTreeSet<String> {
    labels.iter().map(|s| s.to_string()).collect()
}

fn expect(ok: bool, elements: &[(&'static str, Element)], detail: &str) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(fail(elements, detail))
    }
}

static EXAMPLES: &[Example] = &[
    Example {
        name: "z12-mu-set",
        claim: "all six ideals of Z12 are mu-elements; (3) is not essential since (3)^(4) = 0",
        document: || zn(12),
        run: z12_mu_set,
    },
    Example {
        name: "z30-two-not-mu",
        claim: "(2) is not a mu-element of Z30, witnessed by (3) and (5)",
        document: || zn(30),
        run: z30_two_not_mu,
    },
    Example {
        name: "powerset-mu-set",
        claim: "the mu-elements of P({1,2,3}) are the empty set, the singletons and X; {1,2} fails with {1,3}, {2,3}",
        document: p3,
        run: powerset_mu_set,
    },
    Example {
        name: "join-failure",
        claim: "{1} and {2} are mu-elements of P({1,2,3}) but their join is not, witnessed by A = {1,3}, B = {2,3}",
        document: p3,
        run: join_failure,
    },
    Example {
        name: "complement-failure",
        claim: "the complement {2,3} of the atom {1} is not a mu-element, witnessed by {1,2} and {1,3}",
        document: p3,
        run: complement_failure,
    },
    Example {
        name: "dual-atom-not-mu",
        claim: "the dual atom {2,3} of P({1,2,3}) is not a mu-element, although {2} below it is",
        document: p3,
        run: dual_atom_not_mu,
    },
    Example {
        name: "product-failure",
        claim: "(6) and (10) are mu-elements of Z900 but (6)(10) = (60) is not",
        document: || zn(900),
        run: product_failure,
    },
    Example {
        name: "meet-family-reaches-zero",
        claim: "finite analog of the arbitrary-meet failure: the mu-elements (4), (6), (9) of Z36 meet at the zero ideal, which remains a mu-element",
        document: || zn(36),
        run: meet_family_reaches_zero,
    },
    Example {
        name: "z180-maximal-not-mu",
        claim: "in Z180 the maximal ideal (5) and the radical (30) are not mu-elements",
        document: || zn(180),
        run: z180_maximal_not_mu,
    },
    Example {
        name: "pid-quotient-mu-list",
        claim: "the mu-elements of R[x]/(x^2(x+1)(x+2)) are exactly (0), (x), (x^2(x+1)), (x^2(x+2)), ((x+1)(x+2)), (x(x+1)(x+2)), R",
        document: pid,
        run: pid_quotient_mu_list,
    },
    Example {
        name: "z12-mu-complements",
        claim: "the nonzero mu-complements of (4) in Z12 are exactly (3) and (6)",
        document: || zn(12),
        run: z12_mu_complements,
    },
    Example {
        name: "singleton-not-mu-closed",
        claim: "{1} is the pseudo-complement (indeed a complement) of {2,3} but is not mu-closed, as {1} <=_mu {1,2}↓",
        document: p3,
        run: singleton_not_mu_closed,
    },
    Example {
        name: "upset-mu-not-global",
        claim: "{2,3} is an atom, hence a mu-element, of {2}↑ but not a mu-element of P({1,2,3})",
        document: p3,
        run: upset_mu_not_global,
    },
    Example {
        name: "pcmu-not-maximal",
        claim: "for a = {1}, b = {2,3} the maximal c with a <= c, b^c = 0 is {1}, yet also {1} <=_mu {1,2}↓",
        document: p3,
        run: pcmu_not_maximal,
    },
    Example {
        name: "mu-closed-up-converse",
        claim: "every mu-element b >= {1} satisfies b <=_mu {1}↑, yet {1} is not mu-closed",
        document: p3,
        run: mu_closed_up_converse,
    },
];

pub fn example_names() -> Vec<&'static str> {
    EXAMPLES.iter().map(|e| e.name).collect()
}

/// Re-derives every concrete verdict above.
pub fn run_paper_examples() -> SuiteReport {
    let checks = EXAMPLES
        .iter()
        .map(|e| {
            let start = Instant::now();
            let inst = Instance::new(e.name, (e.document)()).expect("example documents are valid");
            let verdict = (e.run)(&inst);
            let (elements, counterexample) = match verdict {
                Ok(n) => (n, None),
                Err(f) => (0, Some(f.to_counterexample(e.name, &inst))),
            };
            CheckReport {
                name: e.name.to_string(),
                claim: e.claim.to_string(),
                hypothesis: "fixed instance".to_string(),
                instances_tested: 1,
                skipped_by_hypothesis: 0,
                elements_tested: elements,
                passed: counterexample.is_none(),
                counterexample,
                wall_time_ms: start.elapsed().as_millis() as u64,
            }
        })
        .collect();
    SuiteReport {
        generators: vec![format!("fixed examples: {} instances", EXAMPLES.len())],
        instances: EXAMPLES.len(),
        checks,
    }
}

fn z12_mu_set(i: &Instance) -> Verdict {
    let l = i.lattice();
    expect(
        i.mu_elements().len() == 6,
        &[],
        "not every ideal is a mu-element",
    )?;
    let (three, four) = (at(l, "(3)"), at(l, "(4)"));
    expect(i.mu(three), &[("x", three)], "(3) is not a mu-element")?;
    expect(
        mu::essential_witness(l, three) == Some(four),
        &[("x", three)],
        "(3) is not refuted as essential by (4)",
    )?;
    Ok(l.len())
}

fn z30_two_not_mu(i: &Instance) -> Verdict {
    let l = i.lattice();
    let two = at(l, "(2)");
    let Some((y, z)) = mu::mu_witness(l, two) else {
        return Err(fail(&[("x", two)], "(2) is a mu-element"));
    };
    expect(
        label_set(l, [y, z]) == names(&["(3)", "(5)"]),
        &[("x", two), ("y", y), ("z", z)],
        "witness is not (3), (5)",
    )?;
    let pairs = [
        ("(2)", "(3)", "(6)"),
        ("(2)", "(5)", "(10)"),
        ("(3)", "(5)", "(15)"),
    ];
    for (a, b, m) in pairs {
        expect(l.meet(at(l, a), at(l, b)) == at(l, m), &[], "meet differs")?;
    }
    expect(
        l.meet(two, l.meet(y, z)) == l.bottom(),
        &[],
        "triple meet is not zero",
    )?;
    Ok(1)
}

fn powerset_mu_set(i: &Instance) -> Verdict {
    let l = i.lattice();
    expect(
        label_set(l, i.mu_elements()) == names(&["∅", "{1}", "{2}", "{3}", "X"]),
        &[],
        "mu-set differs",
    )?;
    let x = at(l, "{1,2}");
    let w = mu::mu_witness(l, x);
    expect(
        w.map(|(y, z)| label_set(l, [y, z])) == Some(names(&["{1,3}", "{2,3}"])),
        &[("x", x)],
        "{1,2} is not refuted by {1,3}, {2,3}",
    )?;
    Ok(l.len())
}

fn join_failure(i: &Instance) -> Verdict {
    let l = i.lattice();
    let (x, y) = (at(l, "{1}"), at(l, "{2}"));
    let (a, b) = (at(l, "{1,3}"), at(l, "{2,3}"));
    expect(
        i.mu(x) && i.mu(y),
        &[("x", x), ("y", y)],
        "singletons are not mu-elements",
    )?;
    let j = l.join(x, y);
    expect(!i.mu(j), &[("join", j)], "join is a mu-element")?;
    expect(
        mu::refutes_mu(l, j, (a, b)),
        &[("join", j), ("A", a), ("B", b)],
        "A, B do not refute the join",
    )?;
    Ok(3)
}

fn complement_failure(i: &Instance) -> Verdict {
    let l = i.lattice();
    let (one, rest) = (at(l, "{1}"), at(l, "{2,3}"));
    expect(
        l.complements_of(one) == vec![rest],
        &[("x", one)],
        "complement is not {2,3}",
    )?;
    expect(i.mu(one), &[("x", one)], "{1} is not a mu-element")?;
    let w = mu::mu_witness(l, rest);
    expect(
        w == Some((at(l, "{1,2}"), at(l, "{1,3}"))),
        &[("x", rest)],
        "{2,3} is not refuted by {1,2}, {1,3}",
    )?;
    Ok(2)
}

fn dual_atom_not_mu(i: &Instance) -> Verdict {
    let l = i.lattice();
    let (two, rest) = (at(l, "{2}"), at(l, "{2,3}"));
    expect(
        l.upper_covers(rest) == vec![l.top()],
        &[("x", rest)],
        "{2,3} is not a dual atom",
    )?;
    expect(!i.mu(rest), &[("x", rest)], "{2,3} is a mu-element")?;
    expect(
        i.mu(two) && l.lt(two, rest),
        &[("x", two)],
        "{2} is not a mu-element below {2,3}",
    )?;
    Ok(2)
}

fn product_failure(i: &Instance) -> Verdict {
    let l = i.lattice();
    let q = i.quantale().expect("ideal quantale");
    let (six, ten, sixty) = (at(l, "(6)"), at(l, "(10)"), at(l, "(60)"));
    expect(
        i.mu(six) && i.mu(ten),
        &[("a", six), ("b", ten)],
        "(6) or (10) is not a mu-element",
    )?;
    expect(
        q.mult(six, ten) == sixty,
        &[("a", six), ("b", ten)],
        "(6)(10) is not (60)",
    )?;
    expect(!i.mu(sixty), &[("ab", sixty)], "(60) is a mu-element")?;
    let fast = i.built().fast_verdict(sixty).expect("exponent fast path");
    expect(
        !fast.mu,
        &[("ab", sixty)],
        "fast path calls (60) a mu-element",
    )?;
    Ok(3)
}

fn meet_family_reaches_zero(i: &Instance) -> Verdict {
    let l = i.lattice();
    let family: Vec<Element> = ["(4)", "(6)", "(9)"].iter().map(|s| at(l, s)).collect();
    for &x in &family {
        expect(i.mu(x), &[("x", x)], "member is not a mu-element")?;
    }
    let m = l.meet_all(family.iter().copied());
    expect(
        m == l.bottom(),
        &[("meet", m)],
        "family does not meet at zero",
    )?;
    expect(i.mu(m), &[("meet", m)], "zero ideal is not a mu-element")?;
    Ok(family.len() + 1)
}

fn z180_maximal_not_mu(i: &Instance) -> Verdict {
    let l = i.lattice();
    let five = at(l, "(5)");
    expect(
        l.maximal_elements().contains(&five),
        &[("x", five)],
        "(5) is not maximal",
    )?;
    expect(!i.mu(five), &[("x", five)], "(5) is a mu-element")?;
    let radical = l.meet_all(l.maximal_elements());
    expect(
        l.label(radical) == "(30)",
        &[("radical", radical)],
        "radical is not (30)",
    )?;
    expect(
        !i.mu(radical),
        &[("radical", radical)],
        "(30) is a mu-element",
    )?;
    Ok(2)
}

fn pid_quotient_mu_list(i: &Instance) -> Verdict {
    let l = i.lattice();
    let expected_mu = names(&[
        "(0)",
        "(x)",
        "(x^2(x+1))",
        "(x^2(x+2))",
        "((x+1)(x+2))",
        "(x(x+1)(x+2))",
        "R",
    ]);
    let expected_not = names(&["(x^2)", "(x+1)", "(x+2)", "(x(x+1))", "(x(x+2))"]);
    expect(
        label_set(l, i.mu_elements()) == expected_mu,
        &[],
        "mu-list differs",
    )?;
    let not_mu = l.elements().filter(|&x| !i.mu(x));
    expect(
        label_set(l, not_mu) == expected_not,
        &[],
        "non-mu list differs",
    )?;
    Ok(l.len())
}

fn z12_mu_complements(i: &Instance) -> Verdict {
    let l = i.lattice();
    let (two, three, four, six) = (at(l, "(2)"), at(l, "(3)"), at(l, "(4)"), at(l, "(6)"));
    expect(
        l.meet(three, four) == l.bottom() && l.join(three, four) == l.top(),
        &[("a", three), ("b", four)],
        "(3), (4) are not complements",
    )?;
    expect(
        l.meet(three, two) == six && l.meet(four, two) == four,
        &[],
        "meets with (2) differ",
    )?;
    expect(i.mu(two), &[("x", two)], "(2) is not a mu-element")?;
    expect(
        l.meet(six, four) == l.bottom() && l.join(six, four) == two,
        &[("a", six), ("b", four)],
        "(6)^(4) or (6)v(4) differs",
    )?;
    let all = mu::mu_complements(l, four);
    let nonzero = all.iter().copied().filter(|&y| y != l.bottom());
    expect(
        label_set(l, nonzero) == names(&["(3)", "(6)"]),
        &[("x", four)],
        "nonzero mu-complements of (4) differ",
    )?;
    expect(
        label_set(l, all.iter().copied()) == names(&["(3)", "(6)", "(12)"]),
        &[("x", four)],
        "mu-complements of (4) differ",
    )?;
    Ok(all.len())
}

fn singleton_not_mu_closed(i: &Instance) -> Verdict {
    let l = i.lattice();
    let (one, rest, pair) = (at(l, "{1}"), at(l, "{2,3}"), at(l, "{1,2}"));
    expect(
        l.pseudo_complement(rest) == Some(one),
        &[("x", one)],
        "{1} is not the pseudo-complement of {2,3}",
    )?;
    expect(
        l.complements_of(rest).contains(&one),
        &[("x", one)],
        "{1} is not a complement of {2,3}",
    )?;
    expect(
        mu::mu_closed_witness(l, one) == Some(pair),
        &[("x", one)],
        "{1} is not refuted as mu-closed by {1,2}",
    )?;
    expect(
        mu::is_atom(&l.down_view(pair), one),
        &[("x", one)],
        "{1} is not an atom below {1,2}",
    )?;
    Ok(1)
}

fn upset_mu_not_global(i: &Instance) -> Verdict {
    let l = i.lattice();
    let frame = i.frame().expect("powerset frame");
    let (two, rest) = (at(l, "{2}"), at(l, "{2,3}"));
    let up = l.up_view(two);
    expect(
        mu::is_atom(&up, rest),
        &[("x", rest)],
        "{2,3} is not an atom of {2}↑",
    )?;
    expect(
        mu::mu_in_up(frame, two, rest) == Ok(true),
        &[("x", rest)],
        "{2,3} is not a mu-element of {2}↑",
    )?;
    expect(!i.mu(rest), &[("x", rest)], "{2,3} is a mu-element")?;
    Ok(1)
}

fn pcmu_not_maximal(i: &Instance) -> Verdict {
    let l = i.lattice();
    let frame = i.frame().expect("powerset frame");
    let (a, b, pair) = (at(l, "{1}"), at(l, "{2,3}"), at(l, "{1,2}"));
    let maximal = mu::maximal_above_disjoint(frame, a, b);
    expect(
        maximal == Ok(vec![a]),
        &[("a", a), ("b", b)],
        "maximal c is not {1}",
    )?;
    expect(
        i.mu_down(a, a),
        &[("a", a)],
        "{1} is not a mu-element of its own down-set",
    )?;
    expect(
        mu::mu_in_down(l, pair, a) == Ok(true),
        &[("a", a), ("c", pair)],
        "{1} is not a mu-element below {1,2}",
    )?;
    Ok(1)
}

fn mu_closed_up_converse(i: &Instance) -> Verdict {
    let l = i.lattice();
    let a = at(l, "{1}");
    let above: Vec<Element> = l.above(a).filter(|&b| i.mu(b)).collect();
    expect(
        label_set(l, above.iter().copied()) == names(&["{1}", "X"]),
        &[("a", a)],
        "mu-elements above {1} differ",
    )?;
    for &b in &above {
        expect(
            i.mu_up(a, b),
            &[("a", a), ("b", b)],
            "b is not a mu-element above {1}",
        )?;
    }
    expect(!i.mu_closed(a), &[("a", a)], "{1} is mu-closed")?;
    Ok(above.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_examples_reproduce() {
        let r = run_paper_examples();
        assert!(r.passed(), "{}", r.summary());
        assert_eq!(r.checks.len(), example_names().len());
    }
}
