//! Brute-force oracles shared by the integration tests. Everything here works
//! straight from the multiplication of `FiniteGroup` and avoids the
//! library's structural algorithms.

#![allow(dead_code)]

use std::collections::VecDeque;
use std::path::PathBuf;

use agc::file::read_group_file;
use agc::FiniteGroup;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn load_corpus_group(name: &str) -> FiniteGroup {
    let path = corpus_dir().join(format!("{name}.json"));
    read_group_file(&path)
        .and_then(|f| f.to_group())
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// All corpus groups, by file stem, in file-name order.
pub fn corpus_groups() -> Vec<(String, FiniteGroup)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.expect("dir entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let g = read_group_file(&p).and_then(|f| f.to_group()).expect("corpus file");
            (name, g)
        })
        .collect()
}

/// Membership mask of the subgroup generated by `gens`.
pub fn closure(g: &FiniteGroup, gens: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; g.order()];
    inside[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if !inside[y] {
                inside[y] = true;
                queue.push_back(y);
            }
        }
    }
    inside
}

pub fn members(mask: &[bool]) -> Vec<usize> {
    (0..mask.len()).filter(|&i| mask[i]).collect()
}

pub fn commutator(g: &FiniteGroup, x: usize, y: usize) -> usize {
    g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y))
}

/// Derived series by closing the set of all commutators at each step.
pub fn derived_series(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..g.order()).collect();
    let mut series = vec![current.clone()];
    loop {
        let mut comms = vec![false; g.order()];
        for &x in &current {
            for &y in &current {
                comms[commutator(g, x, y)] = true;
            }
        }
        let next = members(&closure(g, &members(&comms)));
        if next.len() == current.len() {
            return series;
        }
        series.push(next.clone());
        current = next;
    }
}

pub fn is_central(g: &FiniteGroup, x: usize) -> bool {
    (0..g.order()).all(|y| g.mul(x, y) == g.mul(y, x))
}

pub fn center(g: &FiniteGroup) -> Vec<usize> {
    (0..g.order()).filter(|&x| is_central(g, x)).collect()
}

pub fn element_order(g: &FiniteGroup, x: usize) -> u64 {
    let mut y = x;
    let mut n = 1;
    while y != 0 {
        y = g.mul(y, x);
        n += 1;
    }
    n
}

/// Normal subgroups as membership masks: joins of normal closures of
/// single elements until nothing new appears.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Vec<bool>> {
    let n = g.order();
    let normal_closure = |x: usize| {
        let mut class: Vec<usize> = (0..n)
            .map(|h| g.mul(g.mul(g.inv(h), x), h))
            .collect();
        class.sort_unstable();
        class.dedup();
        closure(g, &class)
    };
    let mut found: Vec<Vec<bool>> = vec![closure(g, &[])];
    let mut seen = std::collections::HashSet::new();
    seen.insert(found[0].clone());
    let mut generators: Vec<Vec<bool>> = Vec::new();
    let mut covered = vec![false; n];
    for x in 1..n {
        if !covered[x] {
            let nc = normal_closure(x);
            // conjugates of x share its normal closure
            for h in 0..n {
                let y = g.mul(g.mul(g.inv(h), x), h);
                covered[y] = true;
            }
            if !generators.contains(&nc) {
                generators.push(nc);
            }
        }
    }
    let mut frontier = found.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for k in &frontier {
            for gen in &generators {
                let union: Vec<usize> = (0..n).filter(|&i| k[i] || gen[i]).collect();
                let joined = closure(g, &union);
                if seen.insert(joined.clone()) {
                    next.push(joined);
                }
            }
        }
        found.extend(next.iter().cloned());
        frontier = next;
    }
    found
}

/// Frobenius test through the kernel criterion: some normal `K`, `1 < K < G`,
/// contains the centralizer of each of its nonidentity elements.
pub fn is_frobenius(g: &FiniteGroup) -> bool {
    let n = g.order();
    normal_subgroups(g).into_iter().any(|k| {
        let size = k.iter().filter(|&&b| b).count();
        size > 1
            && size < n
            && (1..n)
                .filter(|&x| k[x])
                .all(|x| (0..n).all(|y| !g.commute(x, y) || k[y]))
    })
}

/// Diameter of the commuting graph by BFS over adjacency lists of the
/// noncentral elements; `None` when disconnected or empty.
pub fn commuting_diameter(g: &FiniteGroup) -> Option<u32> {
    let n = g.order();
    let verts: Vec<usize> = (0..n).filter(|&x| !is_central(g, x)).collect();
    if verts.is_empty() {
        return None;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in verts.iter().enumerate() {
        pos[v] = i;
    }
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|&x| {
            verts
                .iter()
                .filter(|&&y| y != x && g.mul(x, y) == g.mul(y, x))
                .map(|&y| pos[y])
                .collect()
        })
        .collect();
    let mut best = 0;
    let mut dist = vec![u32::MAX; verts.len()];
    for s in 0..verts.len() {
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        let far = *dist.iter().max().unwrap();
        if far == u32::MAX {
            return None;
        }
        best = best.max(far);
    }
    Some(best)
}

/// Replaces the value of every `"millis"` field so reports from different
/// runs compare equal.
pub fn strip_timing(text: &str) -> String {
    text.lines()
        .map(|line| match line.find("\"millis\":") {
            Some(at) => {
                let rest = &line[at + 9..];
                let tail: String = rest.trim_start().chars().skip_while(|c| c.is_ascii_digit()).collect();
                format!("{}\"millis\":_{}", &line[..at], tail)
            }
            None => line.to_owned(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}
