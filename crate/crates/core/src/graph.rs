//! Finite simple undirected graphs with string-labelled vertices.
//!
//! Equality is label-sensitive: two graphs are equal when they have the same
//! vertex labels and the same edges between them. Use [`are_isomorphic`] for
//! structural comparison.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};

/// Largest graph (per side) accepted by the isomorphism search.
pub const DEFAULT_ISO_CAP: usize = 16;

/// A distance-like quantity that may be infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => f.write_str("infinite"),
        }
    }
}

/// Diameter and girth of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphMetric {
    pub diameter: Length,
    pub girth: Length,
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    vertices: BTreeSet<String>,
    // (u, v) with u < v
    edges: BTreeSet<(String, String)>,
}

fn ordered(u: &str, v: &str) -> (String, String) {
    if u < v {
        (u.to_owned(), v.to_owned())
    } else {
        (v.to_owned(), u.to_owned())
    }
}

impl SimpleGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from vertex labels and edges between them.
    pub fn from_edges<S, I, E>(vertices: I, edges: E) -> Result<Self>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, S)>,
    {
        let mut g = SimpleGraph::new();
        for v in vertices {
            g.add_vertex(v.as_ref());
        }
        for (u, v) in edges {
            g.add_edge(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: &str) {
        self.vertices.insert(v.to_owned());
    }

    /// Adds the edge `u–v`; both endpoints must already be vertices.
    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<()> {
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop on `{u}`")));
        }
        for w in [u, v] {
            if !self.vertices.contains(w) {
                return Err(Error::InvalidGraph(format!("edge endpoint `{w}` is not a vertex")));
            }
        }
        self.edges.insert(ordered(u, v));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(String::as_str)
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> {
        self.edges.iter().map(|(u, v)| (u.as_str(), v.as_str()))
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        self.edges.contains(&ordered(u, v))
    }

    pub fn neighbors<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.edges.iter().filter_map(move |(a, b)| {
            if a == v {
                Some(b.as_str())
            } else if b == v {
                Some(a.as_str())
            } else {
                None
            }
        })
    }

    /// Index-based adjacency lists, vertices in label order.
    fn adjacency(&self) -> (Vec<&str>, Vec<Vec<usize>>) {
        let names: Vec<&str> = self.vertices().collect();
        let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut adj = vec![Vec::new(); names.len()];
        for (u, v) in self.edges() {
            let (i, j) = (index[u], index[v]);
            adj[i].push(j);
            adj[j].push(i);
        }
        (names, adj)
    }

    fn adjacency_matrix(&self) -> (Vec<&str>, Vec<Vec<bool>>) {
        let (names, adj) = self.adjacency();
        let n = names.len();
        let mut m = vec![vec![false; n]; n];
        for (i, ns) in adj.iter().enumerate() {
            for &j in ns {
                m[i][j] = true;
            }
        }
        (names, m)
    }

    pub fn is_connected(&self) -> bool {
        let (_, adj) = self.adjacency();
        if adj.is_empty() {
            return true;
        }
        bfs(&adj, 0).iter().all(Option::is_some)
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0
            && self.edge_count() + 1 == self.vertex_count()
            && self.is_connected()
    }

    pub fn metric(&self) -> Result<GraphMetric> {
        Ok(GraphMetric {
            diameter: diameter(self)?,
            girth: girth(self),
        })
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "SimpleGraph {{ V: {:?}, E: [{}] }}", self.vertices, edges.join(", "))
    }
}

fn bfs(adj: &[Vec<usize>], src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Union of vertex and edge sets; shared labels denote the same vertex.
pub fn union(g1: &SimpleGraph, g2: &SimpleGraph) -> SimpleGraph {
    SimpleGraph {
        vertices: g1.vertices.union(&g2.vertices).cloned().collect(),
        edges: g1.edges.union(&g2.edges).cloned().collect(),
    }
}

/// `G1 + G2`: the union plus every edge between `V(G1)` and `V(G2)`.
pub fn join(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<SimpleGraph> {
    if let Some(v) = g1.vertices.intersection(&g2.vertices).next() {
        return Err(Error::LabelClash(v.clone()));
    }
    let mut g = union(g1, g2);
    for u in &g1.vertices {
        for v in &g2.vertices {
            g.edges.insert(ordered(u, v));
        }
    }
    Ok(g)
}

/// `N(S)`: vertices `S`, no edges.
pub fn null_graph<S: AsRef<str>>(vertices: impl IntoIterator<Item = S>) -> SimpleGraph {
    SimpleGraph {
        vertices: vertices.into_iter().map(|v| v.as_ref().to_owned()).collect(),
        edges: BTreeSet::new(),
    }
}

/// Largest BFS distance over all vertex pairs; [`Length::Infinite`] when the
/// graph is disconnected, 0 for a single vertex.
pub fn diameter(g: &SimpleGraph) -> Result<Length> {
    let (_, adj) = g.adjacency();
    if adj.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let mut best = 0;
    for src in 0..adj.len() {
        for d in bfs(&adj, src) {
            match d {
                Some(d) => best = best.max(d),
                None => return Ok(Length::Infinite),
            }
        }
    }
    Ok(Length::Finite(best))
}

/// Length of a shortest cycle, or [`Length::Infinite`] for forests.
pub fn girth(g: &SimpleGraph) -> Length {
    let (_, adj) = g.adjacency();
    let n = adj.len();
    let mut best: Option<usize> = None;
    for src in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best.map_or(Length::Infinite, Length::Finite)
}

/// Part sizes `(m, n)` with `m ≤ n` when `g` is exactly `K_{m,n}`.
pub fn is_complete_bipartite(g: &SimpleGraph) -> Option<(usize, usize)> {
    let (_, adj) = g.adjacency();
    let n = adj.len();
    if n < 2 {
        return None;
    }
    let mut side = vec![None; n];
    side[0] = Some(false);
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        let s = side[u].unwrap();
        for &w in &adj[u] {
            match side[w] {
                None => {
                    side[w] = Some(!s);
                    queue.push_back(w);
                }
                Some(t) if t == s => return None,
                Some(_) => {}
            }
        }
    }
    if side.iter().any(Option::is_none) {
        return None;
    }
    let left = side.iter().filter(|s| **s == Some(false)).count();
    let right = n - left;
    (g.edge_count() == left * right).then(|| (left.min(right), left.max(right)))
}

/// Label-preserving map `V(g1) → V(g2)` that is an isomorphism, if any.
pub fn find_isomorphism(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<Option<BTreeMap<String, String>>> {
    find_isomorphism_capped(g1, g2, DEFAULT_ISO_CAP)
}

pub fn find_isomorphism_capped(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    cap: usize,
) -> Result<Option<BTreeMap<String, String>>> {
    let size = g1.vertex_count().max(g2.vertex_count());
    if size > cap {
        return Err(Error::SizeCapExceeded {
            what: "graph isomorphism",
            size,
            cap,
        });
    }
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let (names1, m1) = g1.adjacency_matrix();
    let (names2, m2) = g2.adjacency_matrix();
    let deg = |m: &Vec<Vec<bool>>, i: usize| m[i].iter().filter(|&&b| b).count();
    let deg1: Vec<usize> = (0..names1.len()).map(|i| deg(&m1, i)).collect();
    let deg2: Vec<usize> = (0..names2.len()).map(|i| deg(&m2, i)).collect();
    let mut s1 = deg1.clone();
    let mut s2 = deg2.clone();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return Ok(None);
    }

    // Map high-degree vertices first; they constrain the search the most.
    let mut order: Vec<usize> = (0..names1.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(deg1[i]), i));

    let mut map = vec![usize::MAX; names1.len()];
    let mut used = vec![false; names2.len()];
    if extend(0, &order, &m1, &m2, &deg1, &deg2, &mut map, &mut used) {
        Ok(Some(
            map.iter()
                .enumerate()
                .map(|(i, &j)| (names1[i].to_owned(), names2[j].to_owned()))
                .collect(),
        ))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    k: usize,
    order: &[usize],
    m1: &[Vec<bool>],
    m2: &[Vec<bool>],
    deg1: &[usize],
    deg2: &[usize],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&u) = order.get(k) else {
        return true;
    };
    for v in 0..m2.len() {
        if used[v] || deg1[u] != deg2[v] {
            continue;
        }
        let consistent = order[..k].iter().all(|&w| m1[u][w] == m2[v][map[w]]);
        if !consistent {
            continue;
        }
        map[u] = v;
        used[v] = true;
        if extend(k + 1, order, m1, m2, deg1, deg2, map, used) {
            return true;
        }
        used[v] = false;
        map[u] = usize::MAX;
    }
    false
}

pub fn are_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<bool> {
    Ok(find_isomorphism(g1, g2)?.is_some())
}

/// The same graph with every vertex renamed through `map`.
pub fn rename(g: &SimpleGraph, map: &BTreeMap<String, String>) -> SimpleGraph {
    let get = |v: &str| map.get(v).cloned().unwrap_or_else(|| v.to_owned());
    SimpleGraph {
        vertices: g.vertices().map(get).collect(),
        edges: g.edges().map(|(u, v)| ordered(&get(u), &get(v))).collect(),
    }
}

fn dot_id(s: &str) -> String {
    // DOT IDs: identifiers may not start with a digit, numerals are all digits
    let plain = !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    let numeral = s.chars().all(|c| c.is_ascii_digit());
    if plain && (numeral || !s.starts_with(|c: char| c.is_ascii_digit())) {
        s.to_owned()
    } else {
        format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// Deterministic Graphviz rendering: vertices in label order, then edges in
/// lexicographic order. Highlighted vertices are filled.
pub fn to_dot(g: &SimpleGraph, highlight: Option<&BTreeSet<String>>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        if highlight.is_some_and(|h| h.contains(v)) {
            let _ = writeln!(out, "  {} [style=filled];", dot_id(v));
        } else {
            let _ = writeln!(out, "  {};", dot_id(v));
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", dot_id(u), dot_id(v));
    }
    out.push_str("}\n");
    out
}

/// Edge-list text: the comma-separated vertex labels on the first line, then
/// one `u v` pair per line.
pub fn to_edge_list(g: &SimpleGraph) -> String {
    let mut out = g.vertices().collect::<Vec<_>>().join(",");
    out.push('\n');
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    });
    let mut g = SimpleGraph::new();
    // An absent header means an empty graph.
    let Some((_, header)) = lines.next() else {
        return Ok(g);
    };
    for v in header.split(',').map(str::trim) {
        if v.is_empty() {
            return Err(Error::InvalidGraph("empty vertex label in header".into()));
        }
        if v.contains(char::is_whitespace) {
            return Err(Error::InvalidGraph(format!("vertex label `{v}` contains whitespace")));
        }
        if g.has_vertex(v) {
            return Err(Error::InvalidGraph(format!("vertex `{v}` listed twice")));
        }
        g.add_vertex(v);
    }
    for (lineno, line) in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = parts[..] else {
            return Err(Error::InvalidGraph(format!(
                "line {}: expected `u v`, got `{}`",
                lineno + 1,
                line.trim()
            )));
        };
        g.add_edge(u, v)
            .map_err(|e| Error::InvalidGraph(format!("line {}: {e}", lineno + 1)))?;
    }
    Ok(g)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn complete(names: &[&str]) -> SimpleGraph {
        let mut g = null_graph(names.iter().copied());
        for (i, u) in names.iter().enumerate() {
            for v in &names[i + 1..] {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub(crate) fn cycle(names: &[&str]) -> SimpleGraph {
        let mut g = null_graph(names.iter().copied());
        for i in 0..names.len() {
            g.add_edge(names[i], names[(i + 1) % names.len()]).unwrap();
        }
        g
    }

    pub(crate) fn path(names: &[&str]) -> SimpleGraph {
        let mut g = null_graph(names.iter().copied());
        for w in names.windows(2) {
            g.add_edge(w[0], w[1]).unwrap();
        }
        g
    }

    fn kmn(m: usize, n: usize) -> SimpleGraph {
        let left: Vec<String> = (0..m).map(|i| format!("l{i}")).collect();
        let right: Vec<String> = (0..n).map(|i| format!("r{i}")).collect();
        join(&null_graph(&left), &null_graph(&right)).unwrap()
    }

    #[test]
    fn join_and_union() {
        let e = join(&null_graph(["a"]), &null_graph(["b"])).unwrap();
        assert_eq!(e, SimpleGraph::from_edges(["a", "b"], [("a", "b")]).unwrap());

        let k22 = join(&null_graph(["x1", "x3"]), &null_graph(["y1", "y2"])).unwrap();
        assert_eq!(is_complete_bipartite(&k22), Some((2, 2)));
        assert_eq!(k22.edge_count(), 4);

        let g = cycle(&["a", "b", "c", "d"]);
        assert_eq!(union(&g, &g), g);

        assert_eq!(
            join(&null_graph(["a"]), &null_graph(["a"])),
            Err(Error::LabelClash("a".into()))
        );
    }

    #[test]
    fn join_edge_count() {
        let g1 = path(&["a", "b", "c"]);
        let g2 = cycle(&["x", "y", "z", "w"]);
        let j = join(&g1, &g2).unwrap();
        assert_eq!(j.edge_count(), 2 + 4 + 3 * 4);
    }

    #[test]
    fn invalid_edges() {
        let mut g = null_graph(["a"]);
        assert!(g.add_edge("a", "a").is_err());
        assert!(g.add_edge("a", "b").is_err());
    }

    #[test]
    fn diameters() {
        let sample = SimpleGraph::from_edges(
            ["a", "b", "c", "d", "e"],
            [("d", "a"), ("a", "b"), ("a", "c"), ("b", "c"), ("c", "e")],
        )
        .unwrap();
        assert_eq!(diameter(&sample), Ok(Length::Finite(3)));
        assert_eq!(diameter(&complete(&["a", "b", "c"])), Ok(Length::Finite(1)));
        assert_eq!(diameter(&null_graph(["a", "b"])), Ok(Length::Infinite));
        assert_eq!(diameter(&null_graph(["a"])), Ok(Length::Finite(0)));
        assert_eq!(diameter(&SimpleGraph::new()), Err(Error::EmptyGraph));
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&complete(&["a", "b", "c"])), Length::Finite(3));
        assert_eq!(girth(&kmn(2, 2)), Length::Finite(4));
        assert_eq!(girth(&kmn(1, 5)), Length::Infinite);
        assert_eq!(girth(&path(&["a", "b", "c", "d"])), Length::Infinite);
        assert_eq!(girth(&cycle(&["a", "b", "c", "d", "e"])), Length::Finite(5));
        assert_eq!(girth(&SimpleGraph::new()), Length::Infinite);
    }

    #[test]
    fn complete_bipartite_detection() {
        assert_eq!(is_complete_bipartite(&kmn(3, 2)), Some((2, 3)));
        assert_eq!(is_complete_bipartite(&complete(&["a", "b", "c"])), None);
        assert_eq!(is_complete_bipartite(&path(&["a", "b", "c"])), Some((1, 2)));
        // C_6 is bipartite but not complete bipartite
        assert_eq!(is_complete_bipartite(&cycle(&["a", "b", "c", "d", "e", "f"])), None);
        assert_eq!(is_complete_bipartite(&null_graph(["a", "b"])), None);
        assert_eq!(is_complete_bipartite(&null_graph(["a"])), None);
    }

    #[test]
    fn isomorphism() {
        let k3 = complete(&["a", "b", "c"]);
        let tri = cycle(&["x", "y", "z"]);
        assert_eq!(are_isomorphic(&k3, &tri), Ok(true));
        assert_eq!(are_isomorphic(&kmn(2, 2), &cycle(&["p", "q", "r", "s"])), Ok(true));
        assert_eq!(are_isomorphic(&kmn(1, 3), &path(&["p", "q", "r", "s"])), Ok(false));
        // same degree sequence, different structure
        let two_triangles = union(&cycle(&["a", "b", "c"]), &cycle(&["d", "e", "f"]));
        let hexagon = cycle(&["u", "v", "w", "x", "y", "z"]);
        assert_eq!(are_isomorphic(&two_triangles, &hexagon), Ok(false));

        let map = find_isomorphism(&k3, &tri).unwrap().unwrap();
        assert_eq!(rename(&k3, &map), tri);

        let names: Vec<String> = (0..17).map(|i| format!("v{i}")).collect();
        let big = null_graph(&names);
        assert!(matches!(are_isomorphic(&big, &big), Err(Error::SizeCapExceeded { .. })));
    }

    #[test]
    fn dot_output() {
        let g = SimpleGraph::from_edges(["a", "b"], [("a", "b")]).unwrap();
        let dot = to_dot(&g, None);
        assert!(dot.contains("a -- b;"));
        assert_eq!(dot, to_dot(&g.clone(), None));

        let single = to_dot(&null_graph(["x"]), None);
        assert_eq!(single.lines().filter(|l| l.contains("--")).count(), 0);
        assert!(single.contains("  x;"));

        let hl: BTreeSet<String> = ["b".to_owned()].into();
        assert!(to_dot(&g, Some(&hl)).contains("b [style=filled];"));
        assert!(to_dot(&null_graph(["x y"]), None).contains("\"x y\""));
    }

    #[test]
    fn edge_list_format() {
        let text = "a,b,c\na b\nb c\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, path(&["a", "b", "c"]));
        assert_eq!(to_edge_list(&g), text);
        assert!(parse_edge_list("a,b\na c\n").is_err());
        assert!(parse_edge_list("a,b\na b c\n").is_err());
        assert!(parse_edge_list("a,a\n").is_err());
        assert_eq!(parse_edge_list("").unwrap(), SimpleGraph::new());
    }
}
