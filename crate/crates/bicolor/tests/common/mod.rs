//! A deliberately naive reference enumerator. No supply lookahead, no shared
//! state with the library engine: admissibility is re-derived on every step
//! by scanning the assigned prefix. Slow on purpose — it exists to disagree
//! with the optimized engine if either is wrong.

#![allow(dead_code)]

use bicolor::dataset::FoldedGraph;
use bicolor::solver::GccPair;

fn forced_pair(tag: u8) -> Option<GccPair> {
    match tag {
        1 => Some(GccPair::P1a),
        3 => Some(GccPair::P3b),
        5 => Some(GccPair::P5c),
        _ => None,
    }
}

fn admissible(
    gp: &FoldedGraph,
    assigned: &[GccPair],
    next: GccPair,
    fix_135: bool,
) -> bool {
    let i = assigned.len();
    let (y, x, tag) = gp.graph.edges[i];
    if fix_135 {
        if let Some(p) = forced_pair(tag) {
            if next != p {
                return false;
            }
        }
    }
    let mut used = 0usize;
    for (j, &p) in assigned.iter().enumerate() {
        let (yj, xj, _) = gp.graph.edges[j];
        if yj == y && p.alpha() == next.alpha() {
            return false;
        }
        if xj == x && p.beta() == next.beta() {
            return false;
        }
        if p == next {
            used += 1;
        }
    }
    used < next.weight()
}

fn descend(
    gp: &FoldedGraph,
    assigned: &mut Vec<GccPair>,
    found: &mut Vec<Vec<GccPair>>,
    fix_135: bool,
    cap: usize,
) {
    if found.len() >= cap {
        return;
    }
    if assigned.len() == gp.graph.edges.len() {
        for p in GccPair::ALL {
            let uses = assigned.iter().filter(|&&q| q == p).count();
            if uses != p.weight() {
                return;
            }
        }
        found.push(assigned.clone());
        return;
    }
    for p in GccPair::ALL {
        if admissible(gp, assigned, p, fix_135) {
            assigned.push(p);
            descend(gp, assigned, found, fix_135, cap);
            assigned.pop();
            if found.len() >= cap {
                return;
            }
        }
    }
}

/// Every solution, in the order the chronological search discovers them
/// (which is edgewise-lexicographic), stopping once `cap` have been found.
/// `usize::MAX` means run to exhaustion — feasible under the ansatz only.
pub fn naive_solutions_capped(gp: &FoldedGraph, fix_135: bool, cap: usize) -> Vec<Vec<GccPair>> {
    let mut found = Vec::new();
    descend(gp, &mut Vec::new(), &mut found, fix_135, cap);
    found.sort();
    found
}

pub fn naive_solutions(gp: &FoldedGraph, fix_135: bool) -> Vec<Vec<GccPair>> {
    naive_solutions_capped(gp, fix_135, usize::MAX)
}
