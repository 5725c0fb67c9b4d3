//! Finite posets and lattices.
//!
//! Elements are dense ids `0..n`; every element also carries a unique string
//! label that is used for display and for building labelled graphs. The order
//! is stored as a full boolean matrix, and a [`Lattice`] additionally caches
//! its meet and join tables, which every later operation reads.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Index of an element in a [`Poset`] or [`Lattice`].
pub type ElemId = usize;

/// Largest lattice for which [`Lattice::ideals`] will enumerate subsets.
pub const DEFAULT_IDEAL_CAP: usize = 12;

/// A finite partially ordered set.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    leq: Vec<bool>,
}

impl Poset {
    /// Builds a poset from labels and a relation predicate, validating the
    /// partial-order axioms and label uniqueness.
    pub fn from_fn<F>(labels: Vec<String>, mut leq: F) -> Result<Self>
    where
        F: FnMut(ElemId, ElemId) -> bool,
    {
        let n = labels.len();
        let mut m = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                m[x * n + y] = leq(x, y);
            }
        }
        Self::from_matrix(labels, m)
    }

    /// Builds a poset from a row-major `n × n` relation matrix.
    pub fn from_matrix(labels: Vec<String>, leq: Vec<bool>) -> Result<Self> {
        let n = labels.len();
        if leq.len() != n * n {
            return Err(Error::InvalidPoset(format!(
                "relation has {} entries, expected {}",
                leq.len(),
                n * n
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateName(l.clone()));
            }
        }
        let p = Poset { labels, leq };
        p.validate()?;
        Ok(p)
    }

    /// Builds a poset as the reflexive-transitive closure of the given
    /// strict relations `(x, y)` meaning `x < y`.
    pub fn from_relations(labels: Vec<String>, less: &[(ElemId, ElemId)]) -> Result<Self> {
        let n = labels.len();
        let mut m = vec![false; n * n];
        for i in 0..n {
            m[i * n + i] = true;
        }
        for &(x, y) in less {
            if x >= n || y >= n {
                return Err(Error::InvalidPoset(format!("relation ({x}, {y}) out of range")));
            }
            m[x * n + y] = true;
        }
        // Warshall closure
        for k in 0..n {
            for i in 0..n {
                if m[i * n + k] {
                    for j in 0..n {
                        if m[k * n + j] {
                            m[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Self::from_matrix(labels, m)
    }

    fn validate(&self) -> Result<()> {
        let n = self.len();
        for x in 0..n {
            if !self.leq(x, x) {
                return Err(Error::InvalidPoset(format!("not reflexive at `{}`", self.labels[x])));
            }
            for y in 0..n {
                if x != y && self.leq(x, y) && self.leq(y, x) {
                    return Err(Error::InvalidPoset(format!(
                        "not antisymmetric on `{}`, `{}`",
                        self.labels[x], self.labels[y]
                    )));
                }
                if !self.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if self.leq(y, z) && !self.leq(x, z) {
                        return Err(Error::InvalidPoset(format!(
                            "not transitive on `{}` <= `{}` <= `{}`",
                            self.labels[x], self.labels[y], self.labels[z]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn leq(&self, x: ElemId, y: ElemId) -> bool {
        self.leq[x * self.len() + y]
    }

    #[inline]
    pub fn lt(&self, x: ElemId, y: ElemId) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: ElemId, y: ElemId) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    #[inline]
    pub fn incomparable(&self, x: ElemId, y: ElemId) -> bool {
        !self.comparable(x, y)
    }

    /// `x ≺ y`: `x < y` with nothing strictly in between.
    pub fn covered_by(&self, x: ElemId, y: ElemId) -> bool {
        self.lt(x, y) && !(0..self.len()).any(|z| self.lt(x, z) && self.lt(z, y))
    }

    pub fn label(&self, x: ElemId) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<ElemId> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn elements(&self) -> std::ops::Range<ElemId> {
        0..self.len()
    }

    /// All covering pairs `(x, y)` with `x ≺ y`, sorted by `(x, y)`.
    pub fn covers(&self) -> Vec<(ElemId, ElemId)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.covered_by(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The induced subposet on `keep`, with ids renumbered in the given order.
    pub fn induced(&self, keep: &[ElemId]) -> Poset {
        let labels = keep.iter().map(|&x| self.labels[x].clone()).collect();
        let k = keep.len();
        let mut m = vec![false; k * k];
        for (i, &x) in keep.iter().enumerate() {
            for (j, &y) in keep.iter().enumerate() {
                m[i * k + j] = self.leq(x, y);
            }
        }
        Poset { labels, leq: m }
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(x, y)| format!("{}<{}", self.labels[x], self.labels[y]))
            .collect();
        f.debug_struct("Poset")
            .field("labels", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

/// A finite lattice: a bounded poset with total meet and join tables.
#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    poset: Poset,
    meet: Vec<ElemId>,
    join: Vec<ElemId>,
    bottom: ElemId,
    top: ElemId,
    upper_covers: Vec<Vec<ElemId>>,
    lower_covers: Vec<Vec<ElemId>>,
}

/// Validates that `p` is a lattice and computes its tables.
pub fn lattice_from_poset(p: Poset) -> Result<Lattice> {
    Lattice::from_poset(p)
}

impl Lattice {
    pub fn from_poset(poset: Poset) -> Result<Self> {
        let n = poset.len();
        let bottom = poset
            .elements()
            .find(|&x| poset.elements().all(|y| poset.leq(x, y)))
            .ok_or(Error::NoBoundedExtremes)?;
        let top = poset
            .elements()
            .find(|&x| poset.elements().all(|y| poset.leq(y, x)))
            .ok_or(Error::NoBoundedExtremes)?;

        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let glb = poset
                    .elements()
                    .filter(|&z| poset.leq(z, x) && poset.leq(z, y))
                    .find(|&z| {
                        poset
                            .elements()
                            .all(|w| !(poset.leq(w, x) && poset.leq(w, y)) || poset.leq(w, z))
                    })
                    .ok_or_else(|| {
                        Error::NotALattice(
                            poset.label(x).to_owned(),
                            poset.label(y).to_owned(),
                            "greatest lower bound",
                        )
                    })?;
                let lub = poset
                    .elements()
                    .filter(|&z| poset.leq(x, z) && poset.leq(y, z))
                    .find(|&z| {
                        poset
                            .elements()
                            .all(|w| !(poset.leq(x, w) && poset.leq(y, w)) || poset.leq(z, w))
                    })
                    .ok_or_else(|| {
                        Error::NotALattice(
                            poset.label(x).to_owned(),
                            poset.label(y).to_owned(),
                            "least upper bound",
                        )
                    })?;
                meet[x * n + y] = glb;
                meet[y * n + x] = glb;
                join[x * n + y] = lub;
                join[y * n + x] = lub;
            }
        }

        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for (x, y) in poset.covers() {
            upper_covers[x].push(y);
            lower_covers[y].push(x);
        }
        Ok(Lattice {
            poset,
            meet,
            join,
            bottom,
            top,
            upper_covers,
            lower_covers,
        })
    }

    /// The chain `labels[0] < labels[1] < …`.
    pub fn chain<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::NoBoundedExtremes);
        }
        let p = Poset::from_fn(labels, |x, y| x <= y)?;
        Self::from_poset(p)
    }

    /// `M_n`: bottom `0`, top `1` and `n` pairwise incomparable atoms `a1..an`.
    pub fn m_n(n: usize) -> Self {
        let mut labels = vec!["0".to_owned()];
        labels.extend((1..=n).map(|i| format!("a{i}")));
        labels.push("1".to_owned());
        let top = n + 1;
        let p = Poset::from_fn(labels, |x, y| x == y || x == 0 || y == top)
            .expect("M_n is a poset");
        Self::from_poset(p).expect("M_n is a lattice")
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn bottom(&self) -> ElemId {
        self.bottom
    }

    pub fn top(&self) -> ElemId {
        self.top
    }

    pub fn elements(&self) -> std::ops::Range<ElemId> {
        self.poset.elements()
    }

    #[inline]
    pub fn leq(&self, x: ElemId, y: ElemId) -> bool {
        self.poset.leq(x, y)
    }

    #[inline]
    pub fn lt(&self, x: ElemId, y: ElemId) -> bool {
        self.poset.lt(x, y)
    }

    #[inline]
    pub fn incomparable(&self, x: ElemId, y: ElemId) -> bool {
        self.poset.incomparable(x, y)
    }

    #[inline]
    pub fn meet(&self, x: ElemId, y: ElemId) -> ElemId {
        self.meet[x * self.len() + y]
    }

    #[inline]
    pub fn join(&self, x: ElemId, y: ElemId) -> ElemId {
        self.join[x * self.len() + y]
    }

    pub fn covered_by(&self, x: ElemId, y: ElemId) -> bool {
        self.upper_covers[x].contains(&y)
    }

    pub fn upper_covers(&self, x: ElemId) -> &[ElemId] {
        &self.upper_covers[x]
    }

    pub fn lower_covers(&self, x: ElemId) -> &[ElemId] {
        &self.lower_covers[x]
    }

    pub fn covers(&self) -> Vec<(ElemId, ElemId)> {
        self.poset.covers()
    }

    pub fn label(&self, x: ElemId) -> &str {
        self.poset.label(x)
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<ElemId> {
        self.poset.index_of(label)
    }

    /// Same lattice with every label replaced by `f(id, old_label)`.
    pub fn relabel<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(ElemId, &str) -> String,
    {
        let labels: Vec<String> = self.elements().map(|x| f(x, self.label(x))).collect();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateName(l.clone()));
            }
        }
        let mut out = self.clone();
        out.poset.labels = labels;
        Ok(out)
    }

    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.poset.comparable(x, y)))
    }

    /// `{p : 0 ≺ p}`.
    pub fn atoms(&self) -> Vec<ElemId> {
        self.upper_covers[self.bottom].clone()
    }

    /// `{d : d ≺ 1}`.
    pub fn dual_atoms(&self) -> Vec<ElemId> {
        self.lower_covers[self.top].clone()
    }

    pub fn is_join_reducible(&self, x: ElemId) -> bool {
        self.elements()
            .any(|y| y != x && self.elements().any(|z| z != x && self.join(y, z) == x))
    }

    pub fn is_meet_reducible(&self, x: ElemId) -> bool {
        self.elements()
            .any(|y| y != x && self.elements().any(|z| z != x && self.meet(y, z) == x))
    }

    pub fn is_join_irreducible(&self, x: ElemId) -> bool {
        !self.is_join_reducible(x)
    }

    pub fn is_meet_irreducible(&self, x: ElemId) -> bool {
        !self.is_meet_reducible(x)
    }

    pub fn is_doubly_irreducible(&self, x: ElemId) -> bool {
        self.is_join_irreducible(x) && self.is_meet_irreducible(x)
    }

    /// `M(L)`.
    pub fn meet_irreducibles(&self) -> Vec<ElemId> {
        self.elements().filter(|&x| self.is_meet_irreducible(x)).collect()
    }

    /// `J(L)`.
    pub fn join_irreducibles(&self) -> Vec<ElemId> {
        self.elements().filter(|&x| self.is_join_irreducible(x)).collect()
    }

    /// `Irr(L)`: doubly irreducible elements.
    pub fn doubly_irreducibles(&self) -> Vec<ElemId> {
        self.elements().filter(|&x| self.is_doubly_irreducible(x)).collect()
    }

    /// `Red(L)`: elements that are join-reducible or meet-reducible.
    pub fn reducibles(&self) -> Vec<ElemId> {
        self.elements().filter(|&x| !self.is_doubly_irreducible(x)).collect()
    }

    /// `a∧b = a∧c = 0` implies `a∧(b∨c) = 0`, checked over all triples.
    pub fn is_zero_distributive(&self) -> bool {
        let z = self.bottom;
        for a in self.elements() {
            for b in self.elements() {
                if self.meet(a, b) != z {
                    continue;
                }
                for c in self.elements() {
                    if self.meet(a, c) == z && self.meet(a, self.join(b, c)) != z {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `[b) = {x : x ≥ b}`.
    pub fn principal_dual_ideal(&self, b: ElemId) -> Vec<ElemId> {
        self.elements().filter(|&x| self.leq(b, x)).collect()
    }

    /// `(b] = {x : x ≤ b}`.
    pub fn principal_ideal(&self, b: ElemId) -> Vec<ElemId> {
        self.elements().filter(|&x| self.leq(x, b)).collect()
    }

    /// All ideals (nonempty, downward closed, join closed), found by checking
    /// every subset of the carrier.
    pub fn ideals(&self) -> Result<Vec<IdealSet>> {
        self.ideals_capped(DEFAULT_IDEAL_CAP)
    }

    pub fn ideals_capped(&self, cap: usize) -> Result<Vec<IdealSet>> {
        let n = self.len();
        if n > cap {
            return Err(Error::SizeCapExceeded {
                what: "ideal enumeration",
                size: n,
                cap,
            });
        }
        let mut out = Vec::new();
        for mask in 1u64..(1u64 << n) {
            let members: Vec<ElemId> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let down = members
                .iter()
                .all(|&y| self.elements().all(|x| !self.leq(x, y) || mask >> x & 1 == 1));
            let closed = down
                && members
                    .iter()
                    .all(|&a| members.iter().all(|&b| mask >> self.join(a, b) & 1 == 1));
            if closed {
                out.push(IdealSet { members });
            }
        }
        Ok(out)
    }

    /// `I ≠ L` and `a∧b ∈ I` implies `a ∈ I` or `b ∈ I`.
    pub fn is_prime_ideal(&self, ideal: &IdealSet) -> bool {
        if ideal.members.len() == self.len() {
            return false;
        }
        self.elements().all(|a| {
            self.elements().all(|b| {
                !ideal.contains(self.meet(a, b)) || ideal.contains(a) || ideal.contains(b)
            })
        })
    }

    /// Prime ideals that contain no other prime ideal.
    pub fn minimal_prime_ideals(&self) -> Result<Vec<IdealSet>> {
        self.minimal_prime_ideals_capped(DEFAULT_IDEAL_CAP)
    }

    pub fn minimal_prime_ideals_capped(&self, cap: usize) -> Result<Vec<IdealSet>> {
        let primes: Vec<IdealSet> = self
            .ideals_capped(cap)?
            .into_iter()
            .filter(|i| self.is_prime_ideal(i))
            .collect();
        Ok(primes
            .iter()
            .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset(p)))
            .cloned()
            .collect())
    }

    /// Short human-readable rendering: the list of covers.
    pub fn describe(&self) -> String {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(x, y)| format!("{}<{}", self.label(x), self.label(y)))
            .collect();
        format!("covers[{}]", covers.join(" "))
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice")
            .field("poset", &self.poset)
            .field("bottom", &self.label(self.bottom))
            .field("top", &self.label(self.top))
            .finish()
    }
}

/// An ideal of a lattice, as a sorted list of member ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealSet {
    members: Vec<ElemId>,
}

impl IdealSet {
    pub fn members(&self) -> &[ElemId] {
        &self.members
    }

    pub fn contains(&self, x: ElemId) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &IdealSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &IdealSet) -> Vec<ElemId> {
        self.members.iter().copied().filter(|&x| other.contains(x)).collect()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    /// The seven-element lattice with zero-divisor graph of diameter 3.
    pub(crate) fn diameter_three() -> Lattice {
        let l = labels(&["0", "a", "b", "c", "d", "e", "1"]);
        let rel = [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 5),
            (2, 5),
            (2, 4),
            (3, 4),
            (5, 6),
            (4, 6),
        ];
        Lattice::from_poset(Poset::from_relations(l, &rel).unwrap()).unwrap()
    }

    fn ids(l: &Lattice, names: &[&str]) -> Vec<ElemId> {
        let mut v: Vec<ElemId> = names.iter().map(|n| l.index_of(n).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn chain_covers_are_consecutive() {
        let c = Lattice::chain(["0", "m", "1"]).unwrap();
        assert_eq!(c.covers(), vec![(0, 1), (1, 2)]);
        let single = Lattice::chain(["0"]).unwrap();
        assert!(single.covers().is_empty());
    }

    #[test]
    fn diameter_three_covers() {
        let l = diameter_three();
        let mut got: Vec<(String, String)> = l
            .covers()
            .into_iter()
            .map(|(x, y)| (l.label(x).to_owned(), l.label(y).to_owned()))
            .collect();
        got.sort();
        let mut want: Vec<(String, String)> = [
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "e"),
            ("b", "e"),
            ("b", "d"),
            ("c", "d"),
            ("e", "1"),
            ("d", "1"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn diamond_meet_and_join() {
        let p = Poset::from_relations(labels(&["0", "a", "b", "1"]), &[(0, 1), (0, 2), (1, 3), (2, 3)])
            .unwrap();
        let l = lattice_from_poset(p).unwrap();
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(1, 2), 3);
    }

    #[test]
    fn crown_has_no_extremes() {
        // x1 < y1, x2 < y1, x2 < y2, x3 < y2, x3 < y3, x1 < y3
        let p = Poset::from_relations(
            labels(&["x1", "x2", "x3", "y1", "y2", "y3"]),
            &[(0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)],
        )
        .unwrap();
        assert_eq!(lattice_from_poset(p), Err(Error::NoBoundedExtremes));
    }

    #[test]
    fn bowtie_is_not_a_lattice() {
        // 0 < a,b < c,d < 1 with a,b both below c and d
        let p = Poset::from_relations(
            labels(&["0", "a", "b", "c", "d", "1"]),
            &[
                (0, 1),
                (0, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 5),
                (4, 5),
            ],
        )
        .unwrap();
        assert!(matches!(lattice_from_poset(p), Err(Error::NotALattice(..))));
    }

    #[test]
    fn invalid_relations_are_rejected() {
        let cyclic = Poset::from_relations(labels(&["x", "y"]), &[(0, 1), (1, 0)]);
        assert!(matches!(cyclic, Err(Error::InvalidPoset(_))));
        let dup = Poset::from_relations(labels(&["x", "x"]), &[]);
        assert_eq!(dup, Err(Error::DuplicateName("x".into())));
        let not_reflexive = Poset::from_matrix(labels(&["x"]), vec![false]);
        assert!(matches!(not_reflexive, Err(Error::InvalidPoset(_))));
    }

    #[test]
    fn atoms_and_dual_atoms() {
        let m3 = Lattice::m_n(3);
        assert_eq!(m3.atoms(), vec![1, 2, 3]);
        assert_eq!(m3.dual_atoms(), vec![1, 2, 3]);

        let c3 = Lattice::chain(["0", "m", "1"]).unwrap();
        assert_eq!(c3.atoms(), vec![1]);
        assert_eq!(c3.dual_atoms(), vec![1]);

        let f = diameter_three();
        let mut atoms = f.atoms();
        atoms.sort();
        assert_eq!(atoms, ids(&f, &["a", "b", "c"]));
        let mut duals = f.dual_atoms();
        duals.sort();
        assert_eq!(duals, ids(&f, &["d", "e"]));
    }

    #[test]
    fn irreducibility() {
        let m3 = Lattice::m_n(3);
        assert!(m3.is_join_reducible(m3.top()));
        assert!(m3.is_meet_reducible(m3.bottom()));

        let c = Lattice::chain(["0", "p", "q", "1"]).unwrap();
        for x in c.elements() {
            assert!(c.is_doubly_irreducible(x));
        }
        assert_eq!(c.doubly_irreducibles().len(), 4);
        assert!(c.reducibles().is_empty());

        let f = diameter_three();
        let b = f.index_of("b").unwrap();
        assert!(!f.is_meet_irreducible(b));
        assert_eq!(f.meet(f.index_of("d").unwrap(), f.index_of("e").unwrap()), b);
        assert!(f.meet_irreducibles().contains(&f.index_of("a").unwrap()));
    }

    #[test]
    fn zero_distributivity() {
        assert!(!Lattice::m_n(3).is_zero_distributive());
        assert!(Lattice::chain(["0", "p", "q", "1"]).unwrap().is_zero_distributive());
        // 0 < p < 1, 0 < q < 1
        assert!(Lattice::m_n(2).is_zero_distributive());
    }

    #[test]
    fn prime_ideals() {
        let m2 = Lattice::m_n(2);
        let mins = m2.minimal_prime_ideals().unwrap();
        let sets: Vec<Vec<ElemId>> = mins.iter().map(|i| i.members().to_vec()).collect();
        assert_eq!(sets, vec![vec![0, 1], vec![0, 2]]);
        assert_eq!(mins[0].intersection(&mins[1]), vec![0]);

        let c = Lattice::chain(["0", "m", "1"]).unwrap();
        let zero = IdealSet { members: vec![0] };
        assert!(c.is_prime_ideal(&zero));

        let m3 = Lattice::m_n(3);
        let mins = m3.minimal_prime_ideals().unwrap();
        for (i, p) in mins.iter().enumerate() {
            for q in &mins[i + 1..] {
                assert_ne!(p.intersection(q), vec![0]);
            }
        }
    }

    #[test]
    fn ideal_cap() {
        let big = Lattice::chain((0..13).map(|i| format!("c{i}"))).unwrap();
        assert!(matches!(big.ideals(), Err(Error::SizeCapExceeded { .. })));
        assert_eq!(big.ideals_capped(13).unwrap().len(), 13);
    }

    #[test]
    fn ideals_are_principal() {
        let f = diameter_three();
        let ideals = f.ideals().unwrap();
        assert_eq!(ideals.len(), f.len());
        for x in f.elements() {
            assert!(ideals.iter().any(|i| i.members() == f.principal_ideal(x)));
        }
    }

    #[test]
    fn principal_dual_ideals() {
        let f = diameter_three();
        assert_eq!(f.principal_dual_ideal(f.top()), vec![f.top()]);
        assert_eq!(f.principal_dual_ideal(f.bottom()).len(), f.len());
        assert_eq!(f.principal_dual_ideal(f.index_of("e").unwrap()), ids(&f, &["e", "1"]));
    }

    #[test]
    fn meet_join_are_bounds() {
        for l in [diameter_three(), Lattice::m_n(4)] {
            for x in l.elements() {
                for y in l.elements() {
                    let m = l.meet(x, y);
                    let j = l.join(x, y);
                    assert!(l.leq(m, x) && l.leq(m, y) && l.leq(x, j) && l.leq(y, j));
                    for z in l.elements() {
                        if l.leq(z, x) && l.leq(z, y) {
                            assert!(l.leq(z, m));
                        }
                        if l.leq(x, z) && l.leq(y, z) {
                            assert!(l.leq(j, z));
                        }
                    }
                }
            }
        }
    }
}
