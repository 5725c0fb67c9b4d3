//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's enumerators.
#![allow(dead_code)]

use std::collections::BTreeSet;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rel {
    Unknown,
    Less,
    Greater,
    Apart,
}

/// Number of lattices on `n` elements up to isomorphism, found by assigning
/// each unordered pair one of `<`, `>`, `‖`, keeping transitive assignments
/// that form lattices, and collecting canonical forms.
pub fn count_lattices_brute_force(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut rel = vec![vec![Rel::Unknown; n]; n];
    let mut seen = BTreeSet::new();
    assign(0, &pairs, &mut rel, n, &mut seen);
    seen.len()
}

fn set(rel: &mut [Vec<Rel>], i: usize, j: usize, r: Rel) {
    rel[i][j] = r;
    rel[j][i] = match r {
        Rel::Less => Rel::Greater,
        Rel::Greater => Rel::Less,
        x => x,
    };
}

fn lt(rel: &[Vec<Rel>], i: usize, j: usize) -> bool {
    rel[i][j] == Rel::Less
}

/// Every fully known triple through the pair `(i, j)` is transitive.
fn consistent(rel: &[Vec<Rel>], n: usize, i: usize, j: usize) -> bool {
    for k in 0..n {
        if k == i || k == j {
            continue;
        }
        for (x, y, z) in [(i, j, k), (j, i, k), (k, i, j), (k, j, i), (i, k, j), (j, k, i)] {
            let known = rel[x][y] != Rel::Unknown && rel[y][z] != Rel::Unknown && rel[x][z] != Rel::Unknown;
            if known && lt(rel, x, y) && lt(rel, y, z) && !lt(rel, x, z) {
                return false;
            }
        }
    }
    true
}

fn assign(p: usize, pairs: &[(usize, usize)], rel: &mut Vec<Vec<Rel>>, n: usize, seen: &mut BTreeSet<Vec<bool>>) {
    if p == pairs.len() {
        let leq: Vec<bool> = (0..n * n).map(|k| k / n == k % n || lt(rel, k / n, k % n)).collect();
        if is_lattice(&leq, n) {
            seen.insert(canonical(&leq, n));
        }
        return;
    }
    let (i, j) = pairs[p];
    for r in [Rel::Less, Rel::Greater, Rel::Apart] {
        set(rel, i, j, r);
        if consistent(rel, n, i, j) {
            assign(p + 1, pairs, rel, n, seen);
        }
    }
    set(rel, i, j, Rel::Unknown);
}

fn least(set: &[usize], leq: &[bool], n: usize) -> Option<usize> {
    set.iter().copied().find(|&x| set.iter().all(|&y| leq[x * n + y]))
}

fn greatest(set: &[usize], leq: &[bool], n: usize) -> Option<usize> {
    set.iter().copied().find(|&x| set.iter().all(|&y| leq[y * n + x]))
}

/// Every pair has a least upper bound and a greatest lower bound.
pub fn is_lattice(leq: &[bool], n: usize) -> bool {
    (0..n).all(|x| {
        (0..n).all(|y| {
            let upper: Vec<usize> = (0..n).filter(|&z| leq[x * n + z] && leq[y * n + z]).collect();
            let lower: Vec<usize> = (0..n).filter(|&z| leq[z * n + x] && leq[z * n + y]).collect();
            least(&upper, leq, n).is_some() && greatest(&lower, leq, n).is_some()
        })
    })
}

/// Lexicographically least relation matrix over all relabellings.
pub fn canonical(leq: &[bool], n: usize) -> Vec<bool> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    permute(0, &mut perm, &mut |p| {
        let m: Vec<bool> = (0..n * n).map(|k| leq[p[k / n] * n + p[k % n]]).collect();
        if best.as_ref().is_none_or(|b| m < *b) {
            best = Some(m);
        }
    });
    best.unwrap_or_default()
}

fn permute(k: usize, perm: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(k + 1, perm, visit);
        perm.swap(k, i);
    }
}

/// Every parent array on `n` nodes (node 0 the root, `parent[i] < i`).
pub fn all_parent_arrays(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0]];
    for i in 1..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..i).map(move |q| {
                    let mut p = p.clone();
                    p.push(q);
                    p
                })
            })
            .collect();
    }
    if n == 0 {
        out.clear();
    }
    out
}

/// Tree canonical string: sorted child encodings wrapped in brackets.
pub fn ahu(parent: &[usize], v: usize) -> String {
    let mut kids: Vec<String> = (1..parent.len()).filter(|&c| parent[c] == v).map(|c| ahu(parent, c)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Number of rooted trees on `n` nodes up to isomorphism.
pub fn count_rooted_trees_brute_force(n: usize) -> usize {
    all_parent_arrays(n)
        .iter()
        .map(|p| ahu(p, 0))
        .collect::<BTreeSet<_>>()
        .len()
}
