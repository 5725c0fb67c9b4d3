//! Graphs derived from a lattice.

use crate::adjunct::check_adjunct_pair;
use crate::error::{Error, Result};
use crate::graph::{self, null_graph, SimpleGraph};
use crate::order::{ElemId, Lattice};

/// `G_{0}(L)`: nonzero elements that meet some other nonzero element in 0,
/// adjacent when their meet is 0.
pub fn zero_divisor_graph(l: &Lattice) -> SimpleGraph {
    let zero = l.bottom();
    let mut g = SimpleGraph::new();
    let nonzero: Vec<ElemId> = l.elements().filter(|&x| x != zero).collect();
    for &x in &nonzero {
        if nonzero.iter().any(|&y| l.meet(x, y) == zero) {
            g.add_vertex(l.label(x));
        }
    }
    for (i, &x) in nonzero.iter().enumerate() {
        for &y in &nonzero[i + 1..] {
            if l.meet(x, y) == zero {
                g.add_edge(l.label(x), l.label(y)).expect("both endpoints are vertices");
            }
        }
    }
    g
}

fn kept(l: &Lattice, exclude: &[ElemId]) -> Vec<ElemId> {
    l.elements().filter(|x| !exclude.contains(x)).collect()
}

/// Undirected Hasse diagram of the subposet `L ∖ exclude`.
pub fn cover_graph(l: &Lattice, exclude: &[ElemId]) -> SimpleGraph {
    let keep = kept(l, exclude);
    let sub = l.poset().induced(&keep);
    let mut g = null_graph(sub.labels());
    for (x, y) in sub.covers() {
        g.add_edge(sub.label(x), sub.label(y)).expect("both endpoints are vertices");
    }
    g
}

fn pair_graph(l: &Lattice, exclude: &[ElemId], adjacent: impl Fn(ElemId, ElemId) -> bool) -> SimpleGraph {
    let keep = kept(l, exclude);
    let mut g = null_graph(keep.iter().map(|&x| l.label(x)));
    for (i, &x) in keep.iter().enumerate() {
        for &y in &keep[i + 1..] {
            if adjacent(x, y) {
                g.add_edge(l.label(x), l.label(y)).expect("both endpoints are vertices");
            }
        }
    }
    g
}

/// Comparable pairs of `L ∖ exclude`.
pub fn comparability_graph(l: &Lattice, exclude: &[ElemId]) -> SimpleGraph {
    pair_graph(l, exclude, |x, y| !l.incomparable(x, y))
}

/// Incomparable pairs of `L ∖ exclude`.
pub fn incomparability_graph(l: &Lattice, exclude: &[ElemId]) -> SimpleGraph {
    pair_graph(l, exclude, |x, y| l.incomparable(x, y))
}

/// Which formula [`compose_adjunct_zdg`] applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComposeCase {
    /// `a ≠ 0` and `a` is not a vertex of `G(L1)`: nothing changes.
    Unchanged,
    /// `a` is a vertex of `G(L1)`: its neighbours are joined to `L2`.
    NeighboursOfLower,
    /// `a = 0`: everything in `L1` not above `b` is joined to `L2`.
    FromBottom,
}

/// The zero-divisor graph of `L1 ]_a^b L2` computed from `G(L1)` alone,
/// without building the adjunct.
pub fn compose_adjunct_zdg(l1: &Lattice, l2: &Lattice, a: ElemId, b: ElemId) -> Result<SimpleGraph> {
    compose_adjunct_zdg_with_case(l1, l2, a, b).map(|(g, _)| g)
}

pub fn compose_adjunct_zdg_with_case(
    l1: &Lattice,
    l2: &Lattice,
    a: ElemId,
    b: ElemId,
) -> Result<(SimpleGraph, ComposeCase)> {
    check_adjunct_pair(l1, a, b)?;
    if let Some(clash) = l2.labels().iter().find(|x| l1.index_of(x).is_some()) {
        return Err(Error::DuplicateName(clash.clone()));
    }
    let g1 = zero_divisor_graph(l1);
    let n2 = null_graph(l2.labels());
    let a_label = l1.label(a);
    if a == l1.bottom() {
        let above_b = l1.principal_dual_ideal(b);
        let outside = l1
            .elements()
            .filter(|&x| x != l1.bottom() && !above_b.contains(&x))
            .map(|x| l1.label(x));
        let j = graph::join(&null_graph(outside), &n2)?;
        Ok((graph::union(&g1, &j), ComposeCase::FromBottom))
    } else if g1.has_vertex(a_label) {
        let ga = null_graph(g1.neighbors(a_label).collect::<Vec<_>>());
        let j = graph::join(&ga, &n2)?;
        Ok((graph::union(&g1, &j), ComposeCase::NeighboursOfLower))
    } else {
        Ok((g1, ComposeCase::Unchanged))
    }
}
