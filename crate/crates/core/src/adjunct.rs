//! The adjunct operation and everything built on it.
//!
//! `L1 ]_a^b L2` places `L2` strictly between `a < b` of `L1` (with `b` not
//! covering `a`), adding the covers `a ≺ 0_{L2}` and `1_{L2} ≺ b`. Every
//! dismantlable lattice is an iterated adjunct of chains, written in text as
//!
//! ```text
//! C(0,a,e,1) ]_0^e C(b) ]_b^1 C(d) ]_0^d C(c)
//! ```
//!
//! The grammar is `expr := chain (']' '_' name '^' name chain)*` with
//! `chain := 'C(' name (',' name)* ')'` and names matching `[A-Za-z0-9_]+`.
//! Whitespace between tokens is ignored.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::order::{ElemId, Lattice, Poset};

/// Largest poset searched for crowns.
pub const DEFAULT_CROWN_CAP: usize = 14;

/// A chain given by its element names, bottom first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainLeaf(pub Vec<String>);

impl ChainLeaf {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        ChainLeaf(names.into_iter().map(Into::into).collect())
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_lattice(&self) -> Result<Lattice> {
        Lattice::chain(self.0.iter().cloned())
    }
}

impl fmt::Display for ChainLeaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({})", self.0.join(","))
    }
}

/// A left-nested adjunct expression: a chain, or an expression with one more
/// chain adjoined at the pair `(lower, upper)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AdjunctExpr {
    Chain(ChainLeaf),
    Node {
        left: Box<AdjunctExpr>,
        right: ChainLeaf,
        lower: String,
        upper: String,
    },
}

/// One adjoined chain of an expression together with its adjunct pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step<'a> {
    pub chain: &'a ChainLeaf,
    pub lower: &'a str,
    pub upper: &'a str,
}

impl AdjunctExpr {
    pub fn chain<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        AdjunctExpr::Chain(ChainLeaf::new(names))
    }

    /// `self ]_lower^upper right`.
    pub fn adjoin(self, lower: impl Into<String>, upper: impl Into<String>, right: ChainLeaf) -> Self {
        AdjunctExpr::Node {
            left: Box::new(self),
            right,
            lower: lower.into(),
            upper: upper.into(),
        }
    }

    /// The first chain and the adjoined chains in application order.
    pub fn steps(&self) -> (&ChainLeaf, Vec<Step<'_>>) {
        match self {
            AdjunctExpr::Chain(c) => (c, Vec::new()),
            AdjunctExpr::Node {
                left,
                right,
                lower,
                upper,
            } => {
                let (base, mut steps) = left.steps();
                steps.push(Step {
                    chain: right,
                    lower,
                    upper,
                });
                (base, steps)
            }
        }
    }

    /// Number of chains in the representation.
    pub fn chain_count(&self) -> usize {
        self.steps().1.len() + 1
    }

    pub fn pairs(&self) -> Vec<(&str, &str)> {
        self.steps().1.iter().map(|s| (s.lower, s.upper)).collect()
    }

    /// All element names, in the order they are introduced.
    pub fn names(&self) -> Vec<&str> {
        let (base, steps) = self.steps();
        let mut out: Vec<&str> = base.names().iter().map(String::as_str).collect();
        for s in steps {
            out.extend(s.chain.names().iter().map(String::as_str));
        }
        out
    }
}

impl fmt::Display for AdjunctExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdjunctExpr::Chain(c) => write!(f, "{c}"),
            AdjunctExpr::Node {
                left,
                right,
                lower,
                upper,
            } => write!(f, "{left} ]_{lower}^{upper} {right}"),
        }
    }
}

impl FromStr for AdjunctExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_adjunct_expr(s)
    }
}

/// Checks that `(a, b)` is an adjunct pair of `l1`: `a < b` and `a ⊀ b`.
pub fn check_adjunct_pair(l1: &Lattice, a: ElemId, b: ElemId) -> Result<()> {
    let invalid = |reason| Error::AdjunctPairInvalid {
        a: l1.label(a).to_owned(),
        b: l1.label(b).to_owned(),
        reason,
    };
    if !l1.lt(a, b) {
        return Err(invalid("lower element is not strictly below upper element"));
    }
    if l1.covered_by(a, b) {
        return Err(invalid("upper element covers lower element"));
    }
    Ok(())
}

/// `L1 ]_a^b L2`. Ids of `l1` are kept; ids of `l2` are shifted by `|L1|`.
pub fn adjunct(l1: &Lattice, l2: &Lattice, a: ElemId, b: ElemId) -> Result<Lattice> {
    check_adjunct_pair(l1, a, b)?;
    let seen: HashSet<&str> = l1.labels().iter().map(String::as_str).collect();
    if let Some(clash) = l2.labels().iter().find(|l| seen.contains(l.as_str())) {
        return Err(Error::DuplicateName(clash.clone()));
    }
    let n1 = l1.len();
    let labels: Vec<String> = l1.labels().iter().chain(l2.labels()).cloned().collect();
    let poset = Poset::from_fn(labels, |x, y| match (x < n1, y < n1) {
        (true, true) => l1.leq(x, y),
        (false, false) => l2.leq(x - n1, y - n1),
        (true, false) => l1.leq(x, a),
        (false, true) => l1.leq(b, y),
    })?;
    Lattice::from_poset(poset)
}

/// Folds the adjunct operation over the expression, left to right.
pub fn eval_adjunct_expr(e: &AdjunctExpr) -> Result<Lattice> {
    let (base, steps) = e.steps();
    let mut seen = HashSet::new();
    for name in e.names() {
        if !seen.insert(name) {
            return Err(Error::DuplicateName(name.to_owned()));
        }
    }
    let mut acc = base.to_lattice()?;
    for step in steps {
        let a = acc
            .index_of(step.lower)
            .ok_or_else(|| Error::UnknownName(step.lower.to_owned()))?;
        let b = acc
            .index_of(step.upper)
            .ok_or_else(|| Error::UnknownName(step.upper.to_owned()))?;
        acc = adjunct(&acc, &step.chain.to_lattice()?, a, b)?;
    }
    Ok(acc)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    fn name(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .bytes()
            .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
            .count();
        if len == 0 {
            return Err(self.error("expected an element name"));
        }
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn chain(&mut self) -> Result<ChainLeaf> {
        self.expect('C')?;
        self.expect('(')?;
        let mut names = vec![self.name()?.to_owned()];
        while self.peek() == Some(',') {
            self.pos += 1;
            names.push(self.name()?.to_owned());
        }
        self.expect(')')?;
        Ok(ChainLeaf(names))
    }
}

/// Parses the adjunct-expression text format.
pub fn parse_adjunct_expr(text: &str) -> Result<AdjunctExpr> {
    let mut p = Parser { src: text, pos: 0 };
    let first = p.chain()?;
    let mut known: HashSet<String> = first.0.iter().cloned().collect();
    let mut expr = AdjunctExpr::Chain(first);
    while p.peek().is_some() {
        p.expect(']')?;
        p.expect('_')?;
        let lower = p.name()?.to_owned();
        p.expect('^')?;
        let upper = p.name()?.to_owned();
        for name in [&lower, &upper] {
            if !known.contains(name) {
                return Err(Error::UnknownName(name.clone()));
            }
        }
        let right = p.chain()?;
        known.extend(right.0.iter().cloned());
        expr = expr.adjoin(lower, upper, right);
    }
    Ok(expr)
}

/// A crown `x1 < y1 > x2 < y2 > … xn < yn > x1` inside a poset, `n ≥ 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crown {
    pub xs: Vec<ElemId>,
    pub ys: Vec<ElemId>,
}

impl Crown {
    /// Whether the listed elements carry exactly the crown comparabilities.
    pub fn is_valid_in(&self, p: &Poset) -> bool {
        let n = self.xs.len();
        if n < 3 || self.ys.len() != n {
            return false;
        }
        let mut all: Vec<ElemId> = self.xs.iter().chain(&self.ys).copied().collect();
        all.sort_unstable();
        all.dedup();
        if all.len() != 2 * n {
            return false;
        }
        for (i, &x) in self.xs.iter().enumerate() {
            for (j, &y) in self.ys.iter().enumerate() {
                let expected = j == i || (j + 1) % n == i;
                if p.lt(x, y) != expected || p.lt(y, x) {
                    return false;
                }
            }
            for &x2 in &self.xs {
                if x != x2 && p.comparable(x, x2) {
                    return false;
                }
            }
        }
        self.ys
            .iter()
            .all(|&y| self.ys.iter().all(|&y2| y == y2 || !p.comparable(y, y2)))
    }
}

/// Exhaustive backtracking search for a crown.
pub fn find_crown(p: &Poset) -> Result<Option<Crown>> {
    find_crown_capped(p, DEFAULT_CROWN_CAP)
}

pub fn find_crown_capped(p: &Poset, cap: usize) -> Result<Option<Crown>> {
    if p.len() > cap {
        return Err(Error::SizeCapExceeded {
            what: "crown search",
            size: p.len(),
            cap,
        });
    }
    for x1 in p.elements() {
        let mut seq = vec![x1];
        if let Some(c) = grow_crown(p, &mut seq) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// `seq` alternates x1, y1, x2, y2, … ; extends it by one element.
fn grow_crown(p: &Poset, seq: &mut Vec<ElemId>) -> Option<Crown> {
    let len = seq.len();
    let last = seq[len - 1];
    let x1 = seq[0];
    let adding_y = len % 2 == 1;
    if !adding_y && len / 2 >= p.len() / 2 {
        return None;
    }
    for e in p.elements() {
        if seq.contains(&e) {
            continue;
        }
        let linked = if adding_y { p.lt(last, e) } else { p.lt(e, last) };
        if !linked {
            continue;
        }
        // x1 is the smallest id among the xs; rotation makes this free.
        if !adding_y && e < x1 {
            continue;
        }
        let mut closes = false;
        let clean = seq[..len - 1].iter().enumerate().all(|(i, &s)| {
            if !p.comparable(s, e) {
                true
            } else if adding_y && i == 0 && p.lt(s, e) {
                closes = true;
                true
            } else {
                false
            }
        });
        if !clean {
            continue;
        }
        seq.push(e);
        if closes {
            if seq.len() >= 6 {
                let xs = seq.iter().step_by(2).copied().collect();
                let ys = seq.iter().skip(1).step_by(2).copied().collect();
                return Some(Crown { xs, ys });
            }
        } else if let Some(c) = grow_crown(p, seq) {
            return Some(c);
        }
        seq.pop();
    }
    None
}

/// Dismantlable iff crown-free. In debug builds the peeling route is run
/// as well and must agree.
pub fn is_dismantlable(l: &Lattice) -> Result<bool> {
    let crown_free = find_crown(l.poset())?.is_none();
    debug_assert_eq!(
        crown_free,
        is_dismantlable_by_peeling(l),
        "dismantlability routes disagree on {l:?}"
    );
    Ok(crown_free)
}

/// Removes doubly irreducible elements one at a time until a single element
/// remains. Greedy first; on a dead end, backtracks over removal choices.
pub fn is_dismantlable_by_peeling(l: &Lattice) -> bool {
    let alive = vec![true; l.len()];
    let mut dead_ends = HashSet::new();
    peel(l, alive, &mut dead_ends)
}

fn peel(l: &Lattice, alive: Vec<bool>, dead_ends: &mut HashSet<Vec<bool>>) -> bool {
    let members: Vec<ElemId> = l.elements().filter(|&x| alive[x]).collect();
    if members.len() <= 1 {
        return true;
    }
    if dead_ends.contains(&alive) {
        return false;
    }
    for &x in &members {
        let reducible = members.iter().any(|&y| {
            y != x
                && members
                    .iter()
                    .any(|&z| z != x && (l.join(y, z) == x || l.meet(y, z) == x))
        });
        if reducible {
            continue;
        }
        let mut next = alive.clone();
        next[x] = false;
        if peel(l, next, dead_ends) {
            return true;
        }
    }
    dead_ends.insert(alive);
    false
}

/// Chain, or dismantlable with every adjunct pair of the form `(0, b)`.
pub fn is_lower_dismantlable(l: &Lattice) -> Result<bool> {
    if l.is_chain() {
        return Ok(true);
    }
    if !is_dismantlable(l)? {
        return Ok(false);
    }
    let e = adjunct_decompose(l)?;
    let zero = l.label(l.bottom());
    Ok(e.pairs().iter().all(|(a, _)| *a == zero))
}

/// A sublattice given by a membership mask over the host's ids.
struct Sub<'a> {
    host: &'a Lattice,
    alive: Vec<bool>,
}

impl Sub<'_> {
    fn members(&self) -> Vec<ElemId> {
        self.host.elements().filter(|&x| self.alive[x]).collect()
    }

    fn strictly_between(&self, a: ElemId, b: ElemId) -> impl Iterator<Item = ElemId> + '_ {
        self.host
            .elements()
            .filter(move |&z| self.alive[z] && self.host.lt(a, z) && self.host.lt(z, b))
    }

    fn covers(&self, x: ElemId, y: ElemId) -> bool {
        self.host.lt(x, y) && self.strictly_between(x, y).next().is_none()
    }

    fn upper(&self, x: ElemId) -> Vec<ElemId> {
        self.members().into_iter().filter(|&y| self.covers(x, y)).collect()
    }

    fn lower(&self, x: ElemId) -> Vec<ElemId> {
        self.members().into_iter().filter(|&y| self.covers(y, x)).collect()
    }
}

/// Writes a dismantlable lattice as an adjunct of chains.
///
/// Repeatedly removes an "ear": a maximal chain `C` of doubly irreducible
/// elements whose lower neighbour `a` and upper neighbour `b` still have
/// some other element strictly between them. Then `L = (L ∖ C) ]_a^b C`.
/// Among valid ears the one holding the largest element id is removed first,
/// so expressions evaluated by [`eval_adjunct_expr`] decompose back into the
/// same chains.
pub fn adjunct_decompose(l: &Lattice) -> Result<AdjunctExpr> {
    if !is_dismantlable(l)? {
        return Err(Error::NotDismantlable);
    }
    let mut sub = Sub {
        host: l,
        alive: vec![true; l.len()],
    };
    let mut ears: Vec<(Vec<ElemId>, ElemId, ElemId)> = Vec::new();
    let base = loop {
        let members = sub.members();
        let is_chain = members
            .iter()
            .all(|&x| members.iter().all(|&y| l.poset().comparable(x, y)));
        if is_chain {
            let mut chain = members;
            chain.sort_by_key(|&x| l.elements().filter(|&y| sub.alive[y] && l.lt(y, x)).count());
            break chain;
        }
        let ear = find_ear(&sub).ok_or_else(|| {
            Error::DecompositionFailed(format!("no removable chain in {}", l.describe()))
        })?;
        for &x in &ear.0 {
            sub.alive[x] = false;
        }
        ears.push(ear);
    };
    let names = |ids: &[ElemId]| ChainLeaf(ids.iter().map(|&x| l.label(x).to_owned()).collect());
    let mut expr = AdjunctExpr::Chain(names(&base));
    for (chain, a, b) in ears.into_iter().rev() {
        expr = expr.adjoin(l.label(a), l.label(b), names(&chain));
    }
    Ok(expr)
}

fn find_ear(sub: &Sub<'_>) -> Option<(Vec<ElemId>, ElemId, ElemId)> {
    let l = sub.host;
    let single = |x: ElemId| -> Option<(ElemId, ElemId)> {
        if x == l.bottom() || x == l.top() {
            return None;
        }
        match (&sub.lower(x)[..], &sub.upper(x)[..]) {
            (&[lo], &[up]) => Some((lo, up)),
            _ => None,
        }
    };
    let mut best: Option<(Vec<ElemId>, ElemId, ElemId)> = None;
    let mut visited = vec![false; l.len()];
    for x in sub.members() {
        if visited[x] || single(x).is_none() {
            continue;
        }
        // walk down and up through doubly irreducible neighbours
        let mut bottom = x;
        while let Some((lo, _)) = single(bottom) {
            if single(lo).is_none() {
                break;
            }
            bottom = lo;
        }
        let mut chain = vec![bottom];
        let (a, mut up) = single(bottom).unwrap();
        while single(up).is_some() {
            chain.push(up);
            up = single(up).unwrap().1;
        }
        let b = up;
        for &c in &chain {
            visited[c] = true;
        }
        let valid = sub.strictly_between(a, b).any(|z| !chain.contains(&z));
        let key = chain.iter().max();
        if valid && best.as_ref().is_none_or(|(c, _, _)| key > c.iter().max()) {
            best = Some((chain, a, b));
        }
    }
    best
}
