//! Rooted trees and their correspondence with lower dismantlable lattices.
//!
//! A rooted tree `T` whose root has at least two children determines a
//! lattice: add a fresh bottom, and order the nodes so that `u < v` exactly
//! when `v` is an ancestor of `u`. Its zero-divisor graph is the non-ancestor
//! graph of `T`. Conversely the cover graph of `L ∖ {0}` of such a lattice is
//! a tree rooted at the top.
//!
//! Tree file format: `root <label>` on the first line, then one
//! `child parent` pair per line.

use std::collections::{BTreeMap, HashSet};
use std::fmt::{self, Write as _};

use crate::adjunct::is_lower_dismantlable;
use crate::derived::cover_graph;
use crate::error::{Error, Result};
use crate::graph::{self, SimpleGraph};
use crate::order::{Lattice, Poset};

/// Largest graph handed to [`is_realizable`].
pub const DEFAULT_REALIZE_CAP: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    nodes: Vec<String>,
    root: String,
    parent: BTreeMap<String, String>,
}

impl RootedTree {
    /// Builds a tree from its root and `(child, parent)` pairs. Node order is
    /// the root followed by children in first-mention order.
    pub fn new<S: AsRef<str>>(root: &str, edges: impl IntoIterator<Item = (S, S)>) -> Result<Self> {
        let mut nodes = vec![root.to_owned()];
        let mut seen: HashSet<String> = HashSet::from([root.to_owned()]);
        let mut parent = BTreeMap::new();
        let pairs: Vec<(String, String)> = edges
            .into_iter()
            .map(|(c, p)| (c.as_ref().to_owned(), p.as_ref().to_owned()))
            .collect();
        for (child, par) in &pairs {
            if child == root {
                return Err(Error::InvalidTree(format!("root `{root}` has a parent")));
            }
            if parent.insert(child.clone(), par.clone()).is_some() {
                return Err(Error::InvalidTree(format!("`{child}` has two parents")));
            }
            if seen.insert(child.clone()) {
                nodes.push(child.clone());
            }
        }
        for (_, par) in &pairs {
            if !seen.contains(par) {
                return Err(Error::InvalidTree(format!("parent `{par}` is not a node")));
            }
        }
        let t = RootedTree {
            nodes,
            root: root.to_owned(),
            parent,
        };
        for v in &t.nodes {
            // every walk up the parent map reaches the root within |T| steps
            let mut cur = v.as_str();
            let mut steps = 0;
            while cur != t.root {
                cur = &t.parent[cur];
                steps += 1;
                if steps > t.nodes.len() {
                    return Err(Error::InvalidTree(format!("cycle through `{v}`")));
                }
            }
        }
        Ok(t)
    }

    /// Builds a tree from a parent array over nodes `0..n` (node 0 is the root).
    fn from_parent_array(parents: &[usize], name: impl Fn(usize) -> String) -> Self {
        let edges: Vec<(String, String)> = (1..parents.len()).map(|i| (name(i), name(parents[i]))).collect();
        RootedTree::new(&name(0), edges).expect("parent arrays describe trees")
    }

    pub fn root(&self) -> &str {
        &self.root
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn parent(&self, v: &str) -> Option<&str> {
        self.parent.get(v).map(String::as_str)
    }

    pub fn children<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.nodes
            .iter()
            .map(String::as_str)
            .filter(move |c| self.parent(c) == Some(v))
    }

    pub fn root_degree(&self) -> usize {
        self.children(&self.root).count()
    }

    /// `w` lies on the path from `v` to the root (every node is its own ancestor).
    pub fn is_ancestor(&self, w: &str, v: &str) -> bool {
        let mut cur = Some(v);
        while let Some(c) = cur {
            if c == w {
                return true;
            }
            cur = self.parent(c);
        }
        false
    }

    fn require_branching(&self) -> Result<()> {
        match self.root_degree() {
            d if d < 2 => Err(Error::RootDegreeTooSmall(d)),
            _ => Ok(()),
        }
    }

    /// Renders the tree file format.
    pub fn to_text(&self) -> String {
        let mut out = format!("root {}\n", self.root);
        for v in &self.nodes[1..] {
            let _ = writeln!(out, "{v} {}", self.parent[v]);
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidTree("missing `root <label>` line".into()))?;
        let root = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["root", label] => label.to_owned(),
            _ => return Err(Error::InvalidTree(format!("bad header `{header}`"))),
        };
        let mut edges = Vec::new();
        for line in lines {
            match line.split_whitespace().collect::<Vec<_>>()[..] {
                [child, parent] => edges.push((child.to_owned(), parent.to_owned())),
                _ => return Err(Error::InvalidTree(format!("bad line `{line}`"))),
            }
        }
        RootedTree::new(&root, edges)
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `G(T)`: non-root nodes, adjacent when neither is an ancestor of the other.
pub fn non_ancestor_graph(t: &RootedTree) -> Result<SimpleGraph> {
    t.require_branching()?;
    let rest = &t.nodes[1..];
    let mut g = graph::null_graph(rest);
    for (i, u) in rest.iter().enumerate() {
        for v in &rest[i + 1..] {
            if !t.is_ancestor(u, v) && !t.is_ancestor(v, u) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// The lattice of `T` plus a fresh bottom, ordered by ancestry. The bottom is
/// id 0 and labelled `0` (with `_` appended while that clashes with a node).
pub fn tree_to_lattice(t: &RootedTree) -> Result<Lattice> {
    t.require_branching()?;
    let mut zero = "0".to_owned();
    while t.nodes.contains(&zero) {
        zero.push('_');
    }
    let labels: Vec<String> = std::iter::once(zero).chain(t.nodes.iter().cloned()).collect();
    let poset = Poset::from_fn(labels, |x, y| x == 0 || (y > 0 && t.is_ancestor(&t.nodes[y - 1], &t.nodes[x - 1])))?;
    Lattice::from_poset(poset)
}

/// Least common ancestor, found by walking up from the deeper node.
pub fn least_common_ancestor<'a>(t: &'a RootedTree, u: &'a str, v: &'a str) -> &'a str {
    let depth = |mut x: &'a str| {
        let mut d = 0;
        while let Some(p) = t.parent(x) {
            x = p;
            d += 1;
        }
        d
    };
    let (mut a, mut b) = (u, v);
    let (mut da, mut db) = (depth(a), depth(b));
    while da > db {
        a = t.parent(a).unwrap();
        da -= 1;
    }
    while db > da {
        b = t.parent(b).unwrap();
        db -= 1;
    }
    while a != b {
        a = t.parent(a).unwrap();
        b = t.parent(b).unwrap();
    }
    a
}

/// Inverse of [`tree_to_lattice`]: the cover graph of `L ∖ {0}`, rooted at
/// the top, with each element's parent its unique upper cover.
pub fn lattice_to_tree(l: &Lattice) -> Result<RootedTree> {
    if !l.is_join_reducible(l.top()) {
        return Err(Error::PreconditionFailed("top is join-irreducible".into()));
    }
    if !is_lower_dismantlable(l)? {
        return Err(Error::PreconditionFailed("lattice is not lower dismantlable".into()));
    }
    if !cover_graph(l, &[l.bottom()]).is_tree() {
        return Err(Error::PreconditionFailed("cover graph of L minus bottom is not a tree".into()));
    }
    let edges: Vec<(&str, &str)> = l
        .elements()
        .filter(|&x| x != l.bottom() && x != l.top())
        .map(|x| match l.upper_covers(x) {
            [p] => Ok((l.label(x), l.label(*p))),
            _ => Err(Error::PreconditionFailed(format!("`{}` has several upper covers", l.label(x)))),
        })
        .collect::<Result<_>>()?;
    // keep the lattice's element order for the node list
    let tree = RootedTree::new(l.label(l.top()), edges.iter().copied())?;
    let mut nodes = vec![tree.root.clone()];
    nodes.extend(
        l.elements()
            .filter(|&x| x != l.bottom() && x != l.top())
            .map(|x| l.label(x).to_owned()),
    );
    Ok(RootedTree { nodes, ..tree })
}

/// Canonical level sequences of all rooted trees on `n` nodes, one per
/// isomorphism class, in reverse lexicographic order.
pub fn level_sequences(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    let mut seq: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        out.push(seq.clone());
        let Some(p) = (1..n).rev().find(|&i| seq[i] > 1) else {
            break;
        };
        let q = (0..p).rev().find(|&i| seq[i] == seq[p] - 1).unwrap();
        for i in p..n {
            seq[i] = seq[i - p + q];
        }
    }
    out
}

fn parents_from_levels(levels: &[usize]) -> Vec<usize> {
    let mut parents = vec![0; levels.len()];
    for i in 1..levels.len() {
        parents[i] = (0..i).rev().find(|&j| levels[j] + 1 == levels[i]).unwrap();
    }
    parents
}

/// All rooted trees on `n` nodes up to isomorphism. The root is `r`, other
/// nodes are `t1`, `t2`, … in preorder.
pub fn rooted_trees(n: usize) -> Vec<RootedTree> {
    level_sequences(n)
        .iter()
        .map(|levels| {
            RootedTree::from_parent_array(&parents_from_levels(levels), |i| {
                if i == 0 {
                    "r".to_owned()
                } else {
                    format!("t{i}")
                }
            })
        })
        .collect()
}

/// A rooted tree whose non-ancestor graph is `g` (label for label), or
/// `None` when `g` is not a non-ancestor graph.
pub fn is_realizable(g: &SimpleGraph) -> Result<Option<RootedTree>> {
    is_realizable_capped(g, DEFAULT_REALIZE_CAP)
}

pub fn is_realizable_capped(g: &SimpleGraph, cap: usize) -> Result<Option<RootedTree>> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::SizeCapExceeded {
            what: "realizability search",
            size: n,
            cap,
        });
    }
    let mut root = "R".to_owned();
    while g.has_vertex(&root) {
        root.push('_');
    }
    for levels in level_sequences(n + 1) {
        let parents = parents_from_levels(&levels);
        if parents.iter().skip(1).filter(|&&p| p == 0).count() < 2 {
            continue;
        }
        let candidate = RootedTree::from_parent_array(&parents, |i| format!("{i}"));
        let h = non_ancestor_graph(&candidate)?;
        if let Some(map) = graph::find_isomorphism_capped(&h, g, cap.max(graph::DEFAULT_ISO_CAP))? {
            let edges: Vec<(String, String)> = (1..parents.len())
                .map(|i| {
                    let p = if parents[i] == 0 {
                        root.clone()
                    } else {
                        map[&parents[i].to_string()].clone()
                    };
                    (map[&i.to_string()].clone(), p)
                })
                .collect();
            return RootedTree::new(&root, edges).map(Some);
        }
    }
    Ok(None)
}
