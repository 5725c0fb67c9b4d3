//! Exhaustive generation of small lattices up to isomorphism.
//!
//! [`all_lattices`] grows naturally labelled posets one maximal element at a
//! time (each new element chooses a down-set of the elements before it),
//! adds a bottom and a top, keeps the lattices, and rejects isomorphs with a
//! backtracking order-isomorphism test. [`lower_dismantlable`] grows adjunct
//! expressions whose pairs all have the form `(0, b)`.

use std::collections::HashMap;

use crate::adjunct::{adjunct, AdjunctExpr, ChainLeaf};
use crate::error::{Error, Result};
use crate::order::{ElemId, Lattice, Poset};

/// Default largest size for [`all_lattices`].
pub const ALL_LATTICES_CAP: usize = 8;
/// Default largest size for [`lower_dismantlable`].
pub const LOWER_DISMANTLABLE_CAP: usize = 10;

type Signature = Vec<(usize, usize, usize, usize)>;

fn element_invariant(l: &Lattice, x: ElemId) -> (usize, usize, usize, usize) {
    let below = l.elements().filter(|&y| l.leq(y, x)).count();
    let above = l.elements().filter(|&y| l.leq(x, y)).count();
    (below, above, l.lower_covers(x).len(), l.upper_covers(x).len())
}

fn signature(l: &Lattice) -> Signature {
    let mut s: Signature = l.elements().map(|x| element_invariant(l, x)).collect();
    s.sort_unstable();
    s
}

/// An order isomorphism `l1 → l2` (as a map from ids of `l1`), if one exists.
pub fn lattice_isomorphism(l1: &Lattice, l2: &Lattice) -> Option<Vec<ElemId>> {
    if l1.len() != l2.len() || l1.covers().len() != l2.covers().len() {
        return None;
    }
    let inv1: Vec<_> = l1.elements().map(|x| element_invariant(l1, x)).collect();
    let inv2: Vec<_> = l2.elements().map(|x| element_invariant(l2, x)).collect();
    let mut s1 = inv1.clone();
    let mut s2 = inv2.clone();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return None;
    }
    let mut map = vec![usize::MAX; l1.len()];
    let mut used = vec![false; l2.len()];
    extend_iso(0, l1, l2, &inv1, &inv2, &mut map, &mut used).then_some(map)
}

fn extend_iso(
    x: ElemId,
    l1: &Lattice,
    l2: &Lattice,
    inv1: &[(usize, usize, usize, usize)],
    inv2: &[(usize, usize, usize, usize)],
    map: &mut [ElemId],
    used: &mut [bool],
) -> bool {
    if x == l1.len() {
        return true;
    }
    for y in l2.elements() {
        if used[y] || inv1[x] != inv2[y] {
            continue;
        }
        let ok = (0..x).all(|w| l1.leq(w, x) == l2.leq(map[w], y) && l1.leq(x, w) == l2.leq(y, map[w]));
        if !ok {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend_iso(x + 1, l1, l2, inv1, inv2, map, used) {
            return true;
        }
        used[y] = false;
    }
    map[x] = usize::MAX;
    false
}

pub fn lattices_isomorphic(l1: &Lattice, l2: &Lattice) -> bool {
    lattice_isomorphism(l1, l2).is_some()
}

/// Keeps one representative per isomorphism class, in insertion order.
struct IsoClasses<T> {
    buckets: HashMap<Signature, Vec<usize>>,
    items: Vec<T>,
}

impl<T> Default for IsoClasses<T> {
    fn default() -> Self {
        IsoClasses {
            buckets: HashMap::new(),
            items: Vec::new(),
        }
    }
}

impl<T> IsoClasses<T> {
    fn insert(&mut self, l: &Lattice, item: T, get: impl Fn(&T) -> &Lattice) -> bool {
        let bucket = self.buckets.entry(signature(l)).or_default();
        if bucket.iter().any(|&i| lattices_isomorphic(get(&self.items[i]), l)) {
            return false;
        }
        bucket.push(self.items.len());
        self.items.push(item);
        true
    }
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::SizeCapExceeded { what, size: n, cap });
    }
    Ok(())
}

/// All pairwise non-isomorphic lattices with exactly `n` elements.
///
/// Elements are labelled `0`, `x1`, …, `x{n-2}`, `1`.
pub fn all_lattices(n: usize) -> Result<Vec<Lattice>> {
    all_lattices_capped(n, ALL_LATTICES_CAP)
}

pub fn all_lattices_capped(n: usize, cap: usize) -> Result<Vec<Lattice>> {
    check_cap("lattice enumeration", n, cap)?;
    match n {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![Lattice::chain(["0"])?]),
        _ => {}
    }
    let inner = n - 2;
    let mut classes: IsoClasses<Lattice> = IsoClasses::default();
    // below[i]: bitmask of inner elements strictly below inner element i
    let mut below = Vec::with_capacity(inner);
    let mut err = None;
    grow_posets(inner, &mut below, &mut |below| {
        if err.is_some() {
            return;
        }
        match bounded_lattice(below) {
            Ok(Some(l)) => {
                classes.insert(&l.clone(), l, |x: &Lattice| x);
            }
            Ok(None) => {}
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(classes.items)
}

fn grow_posets(k: usize, below: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    let i = below.len();
    if i == k {
        visit(below);
        return;
    }
    for set in 0u32..(1 << i) {
        let down_closed = (0..i).all(|j| set >> j & 1 == 0 || below[j] & !set == 0);
        if down_closed {
            below.push(set);
            grow_posets(k, below, visit);
            below.pop();
        }
    }
}

fn bounded_lattice(below: &[u32]) -> Result<Option<Lattice>> {
    let k = below.len();
    let n = k + 2;
    let mut labels = vec!["0".to_owned()];
    labels.extend((1..=k).map(|i| format!("x{i}")));
    labels.push("1".to_owned());
    let poset = Poset::from_fn(labels, |x, y| {
        x == y || x == 0 || y == n - 1 || (x > 0 && y > 0 && x < n - 1 && y < n - 1 && below[y - 1] >> (x - 1) & 1 == 1)
    })?;
    match Lattice::from_poset(poset) {
        Ok(l) => Ok(Some(l)),
        Err(Error::NotALattice(..)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// A generated lattice together with the expression that produced it.
#[derive(Clone, Debug)]
pub struct Generated {
    pub expr: AdjunctExpr,
    pub lattice: Lattice,
}

/// All pairwise non-isomorphic lower dismantlable lattices with `1..=max_n`
/// elements, ordered by size.
///
/// Starts from chains and adjoins chains at pairs `(0, b)`; every lower
/// dismantlable lattice arises this way from a smaller one.
pub fn lower_dismantlable(max_n: usize) -> Result<Vec<Generated>> {
    lower_dismantlable_capped(max_n, LOWER_DISMANTLABLE_CAP)
}

pub fn lower_dismantlable_capped(max_n: usize, cap: usize) -> Result<Vec<Generated>> {
    check_cap("lower dismantlable enumeration", max_n, cap)?;
    let mut by_size: Vec<IsoClasses<Generated>> = (0..=max_n).map(|_| IsoClasses::default()).collect();
    for (s, classes) in by_size.iter_mut().enumerate().skip(1) {
        let names: Vec<String> = if s == 1 {
            vec!["0".into()]
        } else {
            std::iter::once("0".to_owned())
                .chain((1..s - 1).map(|i| format!("x{i}")))
                .chain(std::iter::once("1".to_owned()))
                .collect()
        };
        let expr = AdjunctExpr::Chain(ChainLeaf(names));
        let lattice = crate::adjunct::eval_adjunct_expr(&expr)?;
        classes.insert(&lattice.clone(), Generated { expr, lattice }, |g| &g.lattice);
    }
    for s in 3..max_n {
        let current = std::mem::take(&mut by_size[s].items);
        for g in &current {
            let l = &g.lattice;
            for b in l.elements() {
                if b == l.bottom() || l.covered_by(l.bottom(), b) {
                    continue;
                }
                for m in 1..=max_n - s {
                    let chain = ChainLeaf((s - 1..s - 1 + m).map(|i| format!("x{i}")).collect());
                    let lattice = adjunct(l, &chain.to_lattice()?, l.bottom(), b)?;
                    let expr = g.expr.clone().adjoin(l.label(l.bottom()), l.label(b), chain);
                    by_size[s + m].insert(&lattice.clone(), Generated { expr, lattice }, |g| &g.lattice);
                }
            }
        }
        by_size[s].items = current;
    }
    Ok(by_size.into_iter().flat_map(|c| c.items).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| all_lattices(n).unwrap().len()).collect();
        assert_eq!(counts, vec![0, 1, 1, 1, 2, 5, 15]);
    }

    #[test]
    fn enumerated_are_pairwise_nonisomorphic() {
        let ls = all_lattices(6).unwrap();
        for (i, a) in ls.iter().enumerate() {
            for b in &ls[i + 1..] {
                assert!(!lattices_isomorphic(a, b));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(all_lattices(9), Err(Error::SizeCapExceeded { .. })));
        assert!(matches!(lower_dismantlable(11), Err(Error::SizeCapExceeded { .. })));
    }

    #[test]
    fn isomorphism_ignores_labels() {
        let a = Lattice::m_n(3);
        let b = a.relabel(|i, _| format!("q{i}")).unwrap();
        let map = lattice_isomorphism(&a, &b).unwrap();
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(a.leq(x, y), b.leq(map[x], map[y]));
            }
        }
        assert!(!lattices_isomorphic(&a, &Lattice::chain(["0", "p", "q", "r", "1"]).unwrap()));
    }

    #[test]
    fn lower_dismantlable_counts_match_rooted_trees() {
        // L ↦ cover graph of L∖{0} is a bijection onto rooted trees on n-1 nodes.
        let gen = lower_dismantlable(9).unwrap();
        let counts: Vec<usize> = (1..=9).map(|n| gen.iter().filter(|g| g.lattice.len() == n).count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 4, 9, 20, 48, 115]);
        for g in &gen {
            assert!(g.expr.pairs().iter().all(|(a, _)| *a == "0"));
        }
    }
}
