//! Property suites over enumerated instances.
//!
//! Each suite checks one family of structural statements over every lattice
//! (or rooted tree) up to a size bound and reports the violations it finds.
//! Instances are checked in parallel; failures are sorted, so a report is
//! identical across runs apart from its timing line.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::adjunct::{
    adjunct, adjunct_decompose, check_adjunct_pair, eval_adjunct_expr, is_dismantlable, is_lower_dismantlable,
    AdjunctExpr, ChainLeaf,
};
use crate::derived::{compose_adjunct_zdg_with_case, cover_graph, incomparability_graph, zero_divisor_graph, ComposeCase};
use crate::enumerate::{
    all_lattices_capped, lattices_isomorphic, lower_dismantlable_capped, Generated, ALL_LATTICES_CAP,
    LOWER_DISMANTLABLE_CAP,
};
use crate::error::{Error, Result};
use crate::graph::{self, null_graph, Length, SimpleGraph};
use crate::order::Lattice;
use crate::tree::{is_realizable_capped, lattice_to_tree, non_ancestor_graph, rooted_trees, tree_to_lattice, DEFAULT_REALIZE_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Thm2,
    Thm4,
    Thm6,
    Thm7,
    Thm8,
    Thm9,
    Thm1Roundtrip,
    Lemma1,
    Lemma2,
    Cor1,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `all` runs them.
    pub const CONCRETE: [Suite; 10] = [
        Suite::Thm2,
        Suite::Thm4,
        Suite::Thm6,
        Suite::Thm7,
        Suite::Thm8,
        Suite::Thm9,
        Suite::Thm1Roundtrip,
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Cor1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm2 => "thm2",
            Suite::Thm4 => "thm4",
            Suite::Thm6 => "thm6",
            Suite::Thm7 => "thm7",
            Suite::Thm8 => "thm8",
            Suite::Thm9 => "thm9",
            Suite::Thm1Roundtrip => "thm1-roundtrip",
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Cor1 => "cor1",
            Suite::All => "all",
        }
    }

    /// Size bound used when `--max-n` is not given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Thm2 => 6,
            Suite::Thm4 | Suite::Thm6 | Suite::Lemma1 | Suite::Thm1Roundtrip => 8,
            Suite::Thm7 | Suite::Thm8 => 7,
            Suite::Thm9 | Suite::Lemma2 => 9,
            Suite::Cor1 => 4,
            Suite::All => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::CONCRETE
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Size bounds for a run. `cap` replaces the enumerators' built-in caps.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    pub max_n: Option<usize>,
    pub cap: Option<usize>,
}

impl Limits {
    fn max_n(&self, suite: Suite) -> usize {
        self.max_n.unwrap_or(suite.default_max_n())
    }

    fn cap(&self, default: usize) -> usize {
        self.cap.unwrap_or(default)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub instance: String,
    pub property: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.instances > 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let plural = |n: usize, word: &str| if n == 1 { format!("{n} {word}") } else { format!("{n} {word}s") };
        writeln!(
            f,
            "suite {}: {}, {}",
            self.suite,
            plural(self.instances, "instance"),
            plural(self.failures.len(), "failure")
        )?;
        for x in &self.failures {
            writeln!(f, "  FAIL {}: {}", x.instance, x.property)?;
        }
        write!(f, "time: {:.2}s", self.elapsed.as_secs_f64())
    }
}

/// Runs one suite, or every suite for [`Suite::All`].
pub fn run_suite(suite: Suite, limits: Limits) -> Result<Vec<SuiteReport>> {
    if suite == Suite::All {
        return Suite::CONCRETE
            .into_iter()
            .map(|s| run_one(s, limits))
            .collect();
    }
    Ok(vec![run_one(suite, limits)?])
}

fn run_one(suite: Suite, limits: Limits) -> Result<SuiteReport> {
    let start = Instant::now();
    let n = limits.max_n(suite);
    let (instances, mut failures) = match suite {
        Suite::Thm2 => thm2(n, limits)?,
        Suite::Thm4 => thm4(n, limits)?,
        Suite::Thm6 => thm6(n, limits)?,
        Suite::Thm7 => thm7_8(n, limits, true)?,
        Suite::Thm8 => thm7_8(n, limits, false)?,
        Suite::Thm9 => thm9(n, limits)?,
        Suite::Thm1Roundtrip => thm1(n, limits)?,
        Suite::Lemma1 => lemma1(n, limits)?,
        Suite::Lemma2 => lemma2(n)?,
        Suite::Cor1 => cor1(n)?,
        Suite::All => unreachable!("expanded by run_suite"),
    };
    failures.sort();
    failures.dedup();
    Ok(SuiteReport {
        suite,
        instances,
        failures,
        elapsed: start.elapsed(),
    })
}

type Outcome = (usize, Vec<Failure>);

/// Checks every item in parallel. `check` returns the violated properties.
fn run_instances<T: Sync>(
    items: &[T],
    describe: impl Fn(&T) -> String + Sync,
    check: impl Fn(&T) -> Result<Vec<String>> + Sync,
) -> Result<Outcome> {
    let per_item: Vec<Vec<Failure>> = items
        .par_iter()
        .map(|item| {
            let violated = check(item)?;
            if violated.is_empty() {
                return Ok(Vec::new());
            }
            let instance = describe(item);
            Ok(violated
                .into_iter()
                .map(|property| Failure {
                    instance: instance.clone(),
                    property,
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok((items.len(), per_item.into_iter().flatten().collect()))
}

/// The adjunct expression of `l` when it has one, else its cover relation.
pub fn show_lattice(l: &Lattice) -> String {
    match is_dismantlable(l) {
        Ok(true) => adjunct_decompose(l).map(|e| e.to_string()).unwrap_or_else(|_| l.describe()),
        _ => l.describe(),
    }
}

fn lattices_up_to(n: usize, limits: Limits) -> Result<Vec<Lattice>> {
    let cap = limits.cap(ALL_LATTICES_CAP);
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(all_lattices_capped(k, cap)?);
    }
    Ok(out)
}

fn lower_dismantlable_up_to(n: usize, limits: Limits) -> Result<Vec<Generated>> {
    lower_dismantlable_capped(n, limits.cap(LOWER_DISMANTLABLE_CAP))
}

fn check(out: &mut Vec<String>, ok: bool, property: impl Into<String>) {
    if !ok {
        out.push(property.into());
    }
}

/// `|covers(L1 ]_a^b L2)| = |covers(L1)| + |covers(L2)| + 2`.
fn cover_count_holds(l1: &Lattice, l2: &Lattice, l: &Lattice) -> bool {
    l.covers().len() == l1.covers().len() + l2.covers().len() + 2
}

/// Evaluates `e` one adjunct at a time, checking the cover count of each step.
fn eval_checking_covers(e: &AdjunctExpr) -> Result<(Lattice, bool)> {
    let (base, steps) = e.steps();
    let mut l = base.to_lattice()?;
    let mut ok = true;
    for s in steps {
        let l2 = s.chain.to_lattice()?;
        let a = l.index_of(s.lower).ok_or_else(|| Error::UnknownName(s.lower.into()))?;
        let b = l.index_of(s.upper).ok_or_else(|| Error::UnknownName(s.upper.into()))?;
        let next = adjunct(&l, &l2, a, b)?;
        ok &= cover_count_holds(&l, &l2, &next);
        l = next;
    }
    Ok((l, ok))
}

struct Thm2Instance<'a> {
    l1: &'a Lattice,
    l2: &'a Lattice,
    a: usize,
    b: usize,
}

fn thm2(max_n: usize, limits: Limits) -> Result<Outcome> {
    let hosts = lattices_up_to(max_n, limits)?;
    let guests: Vec<Lattice> = lattices_up_to(max_n.min(4), limits)?
        .iter()
        .map(|l| l.relabel(|i, _| format!("y{i}")))
        .collect::<Result<_>>()?;
    let mut items = Vec::new();
    for l1 in &hosts {
        for a in l1.elements() {
            for b in l1.elements() {
                if check_adjunct_pair(l1, a, b).is_ok() {
                    items.extend(guests.iter().map(|l2| Thm2Instance { l1, l2, a, b }));
                }
            }
        }
    }
    let cases: Vec<ComposeCase> = items
        .par_iter()
        .map(|x| compose_adjunct_zdg_with_case(x.l1, x.l2, x.a, x.b).map(|(_, c)| c))
        .collect::<Result<_>>()?;
    let (count, mut failures) = run_instances(
        &items,
        |x| {
            format!(
                "L1 = {}, L2 = {}, pair ({}, {})",
                show_lattice(x.l1),
                show_lattice(x.l2),
                x.l1.label(x.a),
                x.l1.label(x.b)
            )
        },
        |x| {
            let mut v = Vec::new();
            let (composed, _) = compose_adjunct_zdg_with_case(x.l1, x.l2, x.a, x.b)?;
            let l = adjunct(x.l1, x.l2, x.a, x.b)?;
            check(&mut v, composed == zero_divisor_graph(&l), "composed zdg equals zdg of the adjunct");
            check(&mut v, cover_count_holds(x.l1, x.l2, &l), "adjunct adds exactly two covers");
            Ok(v)
        },
    )?;
    for (case, name) in [
        (ComposeCase::Unchanged, "a"),
        (ComposeCase::NeighboursOfLower, "b"),
        (ComposeCase::FromBottom, "c"),
    ] {
        if max_n >= 6 && !cases.contains(&case) {
            failures.push(Failure {
                instance: "suite".into(),
                property: format!("case ({name}) never exercised"),
            });
        }
    }
    Ok((count, failures))
}

fn thm4(max_n: usize, limits: Limits) -> Result<Outcome> {
    let items: Vec<Lattice> = lattices_up_to(max_n, limits)?
        .into_iter()
        .filter(|l| l.len() >= 2 && l.is_join_reducible(l.top()))
        .collect();
    run_instances(&items, show_lattice, |l| {
        let zero = l.bottom();
        let preds = [
            is_lower_dismantlable(l)?,
            l.elements().filter(|&x| x != zero).all(|x| l.is_meet_irreducible(x)),
            cover_graph(l, &[zero]).is_tree(),
            zero_divisor_graph(l) == incomparability_graph(l, &[zero, l.top()]),
        ];
        let mut v = Vec::new();
        check(
            &mut v,
            preds.iter().all(|&p| p == preds[0]),
            format!(
                "equivalence split (lower dismantlable, meet-irreducible, cover tree, zdg = incomparability) = {preds:?}"
            ),
        );
        Ok(v)
    })
}

fn has_pair(e: &AdjunctExpr, pair: (&str, &str)) -> bool {
    e.pairs().contains(&pair)
}

fn thm6(max_n: usize, limits: Limits) -> Result<Outcome> {
    let items: Vec<Generated> = lower_dismantlable_up_to(max_n, limits)?
        .into_iter()
        .filter(|g| has_pair(&g.expr, ("0", "1")))
        .collect();
    run_instances(
        &items,
        |g| g.expr.to_string(),
        |g| {
            let l = &g.lattice;
            let primes = l.minimal_prime_ideals()?;
            let separated = primes.iter().enumerate().any(|(i, p)| {
                primes[i + 1..]
                    .iter()
                    .any(|q| p.intersection(q) == vec![l.bottom()])
            });
            let preds = [
                graph::is_complete_bipartite(&zero_divisor_graph(l)).is_some(),
                g.expr.chain_count() == 2,
                l.atoms().len() == 2 && l.dual_atoms().len() == 2,
                separated,
                l.is_zero_distributive(),
            ];
            let mut v = Vec::new();
            check(
                &mut v,
                preds.iter().all(|&p| p == preds[0]),
                format!(
                    "equivalence split (complete bipartite, two chains, two atoms and dual atoms, separated minimal primes, 0-distributive) = {preds:?}"
                ),
            );
            Ok(v)
        },
    )
}

fn thm7_8(max_n: usize, limits: Limits, diameter: bool) -> Result<Outcome> {
    let items: Vec<Lattice> = lattices_up_to(max_n, limits)?
        .into_iter()
        .filter(|l| zero_divisor_graph(l).vertex_count() > 0)
        .collect();
    run_instances(&items, show_lattice, |l| {
        let g = zero_divisor_graph(l);
        let mut v = Vec::new();
        if diameter {
            let d = graph::diameter(&g)?;
            check(&mut v, d <= Length::Finite(3), format!("diameter {d} exceeds 3"));
        } else {
            let gr = graph::girth(&g);
            check(
                &mut v,
                matches!(gr, Length::Finite(3) | Length::Finite(4) | Length::Infinite),
                format!("girth {gr} not in {{3, 4, infinite}}"),
            );
        }
        Ok(v)
    })
}

fn is_m_n(l: &Lattice) -> bool {
    l.len() >= 3 && lattices_isomorphic(l, &Lattice::m_n(l.len() - 2))
}

fn thm9(max_n: usize, limits: Limits) -> Result<Outcome> {
    let items: Vec<Generated> = lower_dismantlable_up_to(max_n, limits)?
        .into_iter()
        .filter(|g| g.expr.chain_count() >= 2)
        .collect();
    run_instances(
        &items,
        |g| g.expr.to_string(),
        |g| {
            let l = &g.lattice;
            let zdg = zero_divisor_graph(l);
            let mut v = Vec::new();
            if zdg.vertex_count() == 0 {
                v.push("zdg has no vertices".into());
                return Ok(v);
            }
            let d = graph::diameter(&zdg)?;
            check(&mut v, d <= Length::Finite(2), format!("diameter {d} exceeds 2"));

            let chains = g.expr.chain_count();
            let gr = graph::girth(&zdg);
            check(
                &mut v,
                (gr == Length::Finite(3)) == (chains >= 3),
                format!("girth {gr} with {chains} chains"),
            );
            if chains == 2 {
                let (c1, steps) = g.expr.steps();
                let c2 = steps[0].chain.len();
                let in_c1 = c1.names().iter().filter(|x| zdg.has_vertex(x)).count();
                let want = if c2 >= 2 && in_c1 >= 2 {
                    Length::Finite(4)
                } else {
                    Length::Infinite
                };
                check(
                    &mut v,
                    gr == want,
                    format!("girth {gr} with |C2| = {c2} and {in_c1} zdg vertices in C1"),
                );
            }
            if g.expr.pairs().iter().all(|&p| p == ("0", "1")) {
                check(
                    &mut v,
                    (d == Length::Finite(1)) == is_m_n(l),
                    format!("diameter {d} but M_n membership is {}", is_m_n(l)),
                );
            }
            Ok(v)
        },
    )
}

enum Thm1Instance {
    Tree(crate::tree::RootedTree),
    NotRealizable(SimpleGraph),
}

fn thm1(max_n: usize, limits: Limits) -> Result<Outcome> {
    let realize_cap = limits.cap(DEFAULT_REALIZE_CAP);
    let mut items: Vec<Thm1Instance> = (3..=max_n)
        .flat_map(rooted_trees)
        .filter(|t| t.root_degree() >= 2)
        .map(Thm1Instance::Tree)
        .collect();
    let c5 = ["c1", "c2", "c3", "c4", "c5"];
    let mut pentagon = null_graph(c5);
    for i in 0..5 {
        pentagon.add_edge(c5[i], c5[(i + 1) % 5])?;
    }
    items.push(Thm1Instance::NotRealizable(pentagon));
    run_instances(
        &items,
        |x| match x {
            Thm1Instance::Tree(t) => format!("tree [{}]", t.to_text().trim_end().replace('\n', "; ")),
            Thm1Instance::NotRealizable(g) => format!("graph {g:?}"),
        },
        |x| {
            let mut v = Vec::new();
            match x {
                Thm1Instance::Tree(t) => {
                    let l = tree_to_lattice(t)?;
                    let g = non_ancestor_graph(t)?;
                    let zdg = zero_divisor_graph(&l);
                    check(&mut v, zdg == g, "zdg of the tree lattice equals the non-ancestor graph");
                    check(
                        &mut v,
                        zdg == incomparability_graph(&l, &[l.bottom(), l.top()]),
                        "zdg equals the incomparability graph",
                    );
                    check(
                        &mut v,
                        is_lower_dismantlable(&l)? && l.is_join_reducible(l.top()),
                        "tree lattice is lower dismantlable with join-reducible top",
                    );
                    check(
                        &mut v,
                        l.elements()
                            .all(|x| l.elements().all(|y| !l.incomparable(x, y) || l.meet(x, y) == l.bottom())),
                        "incomparable elements meet in 0",
                    );
                    check(
                        &mut v,
                        lattice_to_tree(&l).ok().as_ref() == Some(t),
                        "lattice_to_tree inverts tree_to_lattice",
                    );
                    let witness = is_realizable_capped(&g, realize_cap)?;
                    check(
                        &mut v,
                        witness.map(|w| non_ancestor_graph(&w).ok() == Some(g.clone())) == Some(true),
                        "non-ancestor graph is realizable",
                    );
                }
                Thm1Instance::NotRealizable(g) => {
                    check(&mut v, is_realizable_capped(g, realize_cap)?.is_none(), "graph is not realizable");
                }
            }
            Ok(v)
        },
    )
}

fn lemma1(max_n: usize, limits: Limits) -> Result<Outcome> {
    let items = lower_dismantlable_up_to(max_n, limits)?;
    run_instances(
        &items,
        |g| g.expr.to_string(),
        |g| {
            let l = &g.lattice;
            let zero = l.bottom();
            let mut v = Vec::new();
            let (rebuilt, covers_ok) = eval_checking_covers(&g.expr)?;
            check(&mut v, covers_ok, "every adjunct adds exactly two covers");
            check(&mut v, rebuilt == *l, "stepwise evaluation matches the lattice");

            let nonzero: Vec<usize> = l.elements().filter(|&x| x != zero).collect();
            check(
                &mut v,
                nonzero
                    .iter()
                    .all(|&a| nonzero.iter().all(|&b| (l.meet(a, b) == zero) == l.incomparable(a, b))),
                "nonzero a, b meet in 0 exactly when incomparable",
            );

            let (_, steps) = g.expr.steps();
            for s in &steps {
                let x = l.index_of(s.upper).expect("pair names are elements");
                let inside: Vec<usize> = s.chain.names().iter().map(|n| l.index_of(n).unwrap()).collect();
                let ok = inside.iter().all(|&a| {
                    l.elements()
                        .filter(|b| !inside.contains(b))
                        .all(|b| l.leq(a, b) == l.leq(x, b))
                });
                check(&mut v, ok, format!("chain {} is below b exactly when {} is", s.chain, s.upper));
            }

            if has_pair(&g.expr, ("0", "1")) {
                let n = zero_divisor_graph(l).vertex_count();
                check(&mut v, n + 2 == l.len(), format!("zdg has {n} vertices, expected |L| - 2"));
            }
            Ok(v)
        },
    )
}

fn two_chain_expr(first: usize, second: usize) -> AdjunctExpr {
    let mut names = vec!["0".to_owned()];
    names.extend((1..first - 1).map(|i| format!("x{i}")));
    names.push("1".to_owned());
    AdjunctExpr::Chain(ChainLeaf(names)).adjoin("0", "1", ChainLeaf((1..=second).map(|i| format!("y{i}")).collect()))
}

fn lemma2(max_n: usize) -> Result<Outcome> {
    let items: Vec<AdjunctExpr> = (3..max_n)
        .flat_map(|first| (1..=max_n - first).map(move |second| two_chain_expr(first, second)))
        .collect();
    run_instances(
        &items,
        |e| e.to_string(),
        |e| {
            let mut v = Vec::new();
            check(&mut v, eval_adjunct_expr(e)?.is_zero_distributive(), "lattice is 0-distributive");
            Ok(v)
        },
    )
}

fn cor1(max_n: usize) -> Result<Outcome> {
    let items: Vec<(usize, usize)> = (1..=max_n).flat_map(|m| (1..=max_n).map(move |n| (m, n))).collect();
    run_instances(
        &items,
        |&(m, n)| two_chain_expr(n + 2, m).to_string(),
        |&(m, n)| {
            let g = zero_divisor_graph(&eval_adjunct_expr(&two_chain_expr(n + 2, m))?);
            let left: Vec<String> = (0..m).map(|i| format!("p{i}")).collect();
            let right: Vec<String> = (0..n).map(|i| format!("q{i}")).collect();
            let k = graph::join(&null_graph(&left), &null_graph(&right))?;
            let mut v = Vec::new();
            check(&mut v, graph::are_isomorphic(&g, &k)?, format!("zdg is not K_{{{m},{n}}}"));
            check(&mut v, graph::diameter(&g)? <= Length::Finite(2), "diameter exceeds 2");
            Ok(v)
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(suite: Suite, max_n: usize) -> SuiteReport {
        let limits = Limits {
            max_n: Some(max_n),
            cap: None,
        };
        run_suite(suite, limits).unwrap().pop().unwrap()
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::CONCRETE.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("thm3".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::CONCRETE {
            let r = run(s, s.default_max_n().min(6));
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn cor1_has_sixteen_instances() {
        assert_eq!(run(Suite::Cor1, 4).instances, 16);
    }

    #[test]
    fn report_is_deterministic() {
        let a = run(Suite::Thm4, 6).to_string();
        let b = run(Suite::Thm4, 6).to_string();
        let strip = |s: &str| s.lines().filter(|l| !l.starts_with("time:")).collect::<Vec<_>>().join("\n");
        assert_eq!(strip(&a), strip(&b));
    }

    #[test]
    fn report_lists_failures() {
        let r = SuiteReport {
            suite: Suite::Thm7,
            instances: 1,
            failures: vec![Failure {
                instance: "C(0,1)".into(),
                property: "bad".into(),
            }],
            elapsed: Duration::ZERO,
        };
        assert!(!r.passed());
        assert_eq!(r.to_string(), "suite thm7: 1 instance, 1 failure\n  FAIL C(0,1): bad\ntime: 0.00s");
    }

    #[test]
    fn caps_surface_as_errors() {
        let limits = Limits {
            max_n: Some(9),
            cap: None,
        };
        assert!(matches!(run_suite(Suite::Thm4, limits), Err(Error::SizeCapExceeded { .. })));
    }
}
