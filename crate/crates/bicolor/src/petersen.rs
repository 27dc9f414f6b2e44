//! The Kneser graph on 3-subsets of a 5-symbol palette ("the odd graph on
//! ten triples"), its canonical edge 5-coloring, and the two inverse
//! correspondences that name its 5-cycles by pentagon classes and its
//! 6-cycles by 3-subsets.

use crate::cycles::{canonical_cycle, dihedral_min, CycleClass, OrientedCycleWord};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// A small graph whose vertices are 3-subsets of `I_1^5` and whose edges
/// carry a color from the same palette.
#[derive(Debug, Clone)]
pub struct ColoredGraph {
    vertices: Vec<[u8; 3]>,
    edges: Vec<(usize, usize, u8)>,
    adjacency: Vec<Vec<(usize, u8)>>,
}

impl ColoredGraph {
    pub fn vertices(&self) -> &[[u8; 3]] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, u8)] {
        &self.edges
    }

    pub fn vertex(&self, idx: usize) -> [u8; 3] {
        self.vertices[idx]
    }

    /// Index of a 3-subset given in any element order.
    pub fn vertex_index(&self, subset: [u8; 3]) -> Option<usize> {
        let mut s = subset;
        s.sort_unstable();
        self.vertices.iter().position(|&v| v == s)
    }

    pub fn neighbors(&self, idx: usize) -> &[(usize, u8)] {
        &self.adjacency[idx]
    }

    pub fn edge_color(&self, u: usize, v: usize) -> Option<u8> {
        self.adjacency
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, c)| c)
    }
}

/// Builds the triple graph: ten 3-subsets of {1..5} in lexicographic order,
/// an edge between two subsets meeting in exactly one element, colored by
/// that element.
pub fn build_petersen() -> ColoredGraph {
    let mut vertices = Vec::with_capacity(10);
    for a in 1u8..=5 {
        for b in a + 1..=5 {
            for c in b + 1..=5 {
                vertices.push([a, b, c]);
            }
        }
    }
    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); vertices.len()];
    for u in 0..vertices.len() {
        for v in u + 1..vertices.len() {
            let common: Vec<u8> = vertices[u]
                .iter()
                .filter(|e| vertices[v].contains(e))
                .copied()
                .collect();
            if let [color] = common[..] {
                edges.push((u, v, color));
                adjacency[u].push((v, color));
                adjacency[v].push((u, color));
            }
        }
    }
    ColoredGraph {
        vertices,
        edges,
        adjacency,
    }
}

/// Canonical representative of an unoriented vertex cycle: lexicographic
/// minimum over rotations and reflections of the index word.
pub fn canonical_vertex_cycle(cycle: &[usize]) -> Vec<usize> {
    dihedral_min(cycle)
}

/// All distinct unoriented simple k-cycles of `g`, each in canonical form,
/// sorted lexicographically.
pub fn enumerate_graph_cycles(g: &ColoredGraph, k: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.vertices.len();
    if k < 3 || k > n {
        return Err(Error::precondition(format!(
            "cycle length {k} out of range 3..={n}"
        )));
    }
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    // Paths constrained to vertices >= start, so each cycle is discovered
    // from its least vertex; dihedral canonicalization removes the rest of
    // the symmetry.
    fn extend(
        g: &ColoredGraph,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        k: usize,
        found: &mut BTreeSet<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        if path.len() == k {
            if g.edge_color(last, start).is_some() {
                found.insert(canonical_vertex_cycle(path));
            }
            return;
        }
        for &(next, _) in g.neighbors(last) {
            if next > start && !on_path[next] {
                path.push(next);
                on_path[next] = true;
                extend(g, start, path, on_path, k, found);
                on_path[next] = false;
                path.pop();
            }
        }
    }
    for start in 0..n {
        let mut path = vec![start];
        let mut on_path = vec![false; n];
        on_path[start] = true;
        extend(g, start, &mut path, &mut on_path, k, &mut found);
    }
    Ok(found.into_iter().collect())
}

/// The cyclic word of edge colors read around `cycle`, reduced to a class:
/// all-distinct words give their own class; words that are a shorter
/// distinct word repeated twice give the class of that half.
pub fn induced_color_cycle(g: &ColoredGraph, cycle: &[usize]) -> Result<CycleClass> {
    let word = color_word(g, cycle)?;
    let distinct = |w: &[u8]| {
        let set: BTreeSet<u8> = w.iter().copied().collect();
        set.len() == w.len()
    };
    if distinct(&word) {
        return Ok(canonical_cycle(&OrientedCycleWord::new(word)?));
    }
    let half = word.len() / 2;
    if word.len() % 2 == 0
        && half >= 3
        && word[..half] == word[half..]
        && distinct(&word[..half])
    {
        return Ok(canonical_cycle(&OrientedCycleWord::new(
            word[..half].to_vec(),
        )?));
    }
    Err(Error::input(format!(
        "color word {word:?} is neither all-distinct nor a distinct half repeated twice"
    )))
}

fn color_word(g: &ColoredGraph, cycle: &[usize]) -> Result<Vec<u8>> {
    if cycle.len() < 3 {
        return Err(Error::input("a cycle has at least 3 vertices"));
    }
    let set: BTreeSet<usize> = cycle.iter().copied().collect();
    if set.len() != cycle.len() {
        return Err(Error::input(format!("repeated vertex in cycle {cycle:?}")));
    }
    (0..cycle.len())
        .map(|i| {
            let u = cycle[i];
            let v = cycle[(i + 1) % cycle.len()];
            g.edge_color(u, v).ok_or_else(|| {
                Error::input(format!("cycle step {u}-{v} is not an edge"))
            })
        })
        .collect()
}

/// The two inverse correspondences over the triple graph.
///
/// Every 5-cycle induces an all-distinct color word, giving a map onto the
/// twelve pentagon classes; every 6-cycle induces a period-3 word, giving a
/// map onto the ten 3-subsets. Both maps are bijections — this is a
/// structural fact of the graph, asserted at construction — and the stored
/// tables are their inverses.
#[derive(Debug, Clone)]
pub struct ThetaCorrespondence {
    graph: ColoredGraph,
    theta5: BTreeMap<CycleClass, Vec<usize>>,
    theta3: BTreeMap<CycleClass, Vec<usize>>,
}

pub fn theta_correspondence() -> ThetaCorrespondence {
    let graph = build_petersen();
    let mut theta5 = BTreeMap::new();
    for cycle in enumerate_graph_cycles(&graph, 5).expect("valid length") {
        let class = induced_color_cycle(&graph, &cycle).expect("5-cycle color word");
        assert_eq!(class.len(), 5, "5-cycle induced a short class");
        let displaced = theta5.insert(class, cycle);
        assert!(displaced.is_none(), "two 5-cycles share a color class");
    }
    assert_eq!(theta5.len(), 12, "expected all 12 pentagon classes");
    let mut theta3 = BTreeMap::new();
    for cycle in enumerate_graph_cycles(&graph, 6).expect("valid length") {
        let class = induced_color_cycle(&graph, &cycle).expect("6-cycle color word");
        assert_eq!(class.len(), 3, "6-cycle induced a non-triple class");
        let displaced = theta3.insert(class, cycle);
        assert!(displaced.is_none(), "two 6-cycles share a color triple");
    }
    assert_eq!(theta3.len(), 10, "expected all 10 triples");
    ThetaCorrespondence {
        graph,
        theta5,
        theta3,
    }
}

impl ThetaCorrespondence {
    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    /// The 5-cycle (canonical vertex word) named by a pentagon class.
    pub fn theta5(&self, class: &CycleClass) -> Option<&[usize]> {
        self.theta5.get(class).map(Vec::as_slice)
    }

    /// The 6-cycle named by a triple class.
    pub fn theta3(&self, class: &CycleClass) -> Option<&[usize]> {
        self.theta3.get(class).map(Vec::as_slice)
    }

    pub fn theta3_of_subset(&self, subset: [u8; 3]) -> Option<&[usize]> {
        let mut s = subset;
        s.sort_unstable();
        if s[0] == s[1] || s[1] == s[2] {
            return None;
        }
        self.theta3(&CycleClass::of_subset(s))
    }

    pub fn five_classes(&self) -> impl Iterator<Item = &CycleClass> {
        self.theta5.keys()
    }

    pub fn three_classes(&self) -> impl Iterator<Item = &CycleClass> {
        self.theta3.keys()
    }

    /// The five vertices on `theta5(class)` with their middle symbols: for
    /// each vertex, the element of its 3-set not used by the two cycle
    /// edges at that vertex.
    pub fn star_tags(&self, class: &CycleClass) -> Result<Vec<(usize, u8)>> {
        let cycle = self
            .theta5(class)
            .ok_or_else(|| Error::input(format!("{class} is not a pentagon class")))?;
        let k = cycle.len();
        cycle
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let before = self
                    .graph
                    .edge_color(cycle[(i + k - 1) % k], x)
                    .expect("cycle edge");
                let after = self
                    .graph
                    .edge_color(x, cycle[(i + 1) % k])
                    .expect("cycle edge");
                let rest: Vec<u8> = self
                    .graph
                    .vertex(x)
                    .into_iter()
                    .filter(|&e| e != before && e != after)
                    .collect();
                match rest[..] {
                    [tag] => Ok((x, tag)),
                    _ => Err(Error::internal(format!(
                        "vertex {x} on cycle of {class} has no unique middle symbol"
                    ))),
                }
            })
            .collect()
    }

    /// The edges common to `theta5(y)` and `theta3(class of x)`. Exactly
    /// one shared edge is returned as such; zero gives `None`; two or more
    /// is an error, because callers walking the folded graph's edges rely
    /// on uniqueness.
    pub fn shared_edge(&self, y: &CycleClass, x: [u8; 3]) -> Result<Option<(usize, usize, u8)>> {
        let five = self
            .theta5(y)
            .ok_or_else(|| Error::input(format!("{y} is not a pentagon class")))?;
        let six = self
            .theta3_of_subset(x)
            .ok_or_else(|| Error::input(format!("{x:?} is not a 3-subset of 1..=5")))?;
        let edge_set = |cycle: &[usize]| -> BTreeSet<(usize, usize)> {
            (0..cycle.len())
                .map(|i| {
                    let u = cycle[i];
                    let v = cycle[(i + 1) % cycle.len()];
                    (u.min(v), u.max(v))
                })
                .collect()
        };
        let shared: Vec<(usize, usize)> = edge_set(five)
            .intersection(&edge_set(six))
            .copied()
            .collect();
        match shared[..] {
            [] => Ok(None),
            [(u, v)] => {
                let color = self.graph.edge_color(u, v).expect("shared edge exists");
                Ok(Some((u, v, color)))
            }
            _ => Err(Error::internal(format!(
                "cycles of {y} and {x:?} share {} edges",
                shared.len()
            ))),
        }
    }
}
