//! The acceptance gate: one test per published claim, one printed verdict
//! line each. Run with `--nocapture --test-threads=1` to see the lines in
//! order. Every check here goes through public API only, and the expected
//! values are frozen copies — not shared with unit-test fixtures — so a
//! regression in either place makes the two disagree.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use bicolor::coloring::{
    check_faithful, check_weight_compatible, is_increasing, is_symmetrically_reversible,
    ColorPairSystem, SymbolPermutationPair,
};
use bicolor::cycles::{cycle_parity, reversal_preserves_parity, CycleClass, Parity};
use bicolor::cyclic::{build_cyclic_bigraph, greedy_bicolor, CyclicParams};
use bicolor::dataset::{
    build_g, build_gprime_quotient, covering_map, cross_validate_gprime, load_dataset,
    pentagon_cycles_check, shipped_errata, validate_dataset, FoldedGraph, check_theta_displays,
};
use bicolor::petersen::{
    build_petersen, enumerate_graph_cycles, induced_color_cycle, theta_correspondence,
};
use bicolor::solver::{
    count_gcc_solutions, enumerate_gcc_solutions, gcc_system, is_distribution_reversible,
    level_distribution, reference_solution, verify_gcc_solution, GccPair, SolveOptions,
};
use bicolor::import::{claimed_level_table, import_paper_solution, printed_solution,
    printed_level_block};

/// Prints the criterion verdict: `pass` when disarmed, `FAIL` when the test
/// unwinds first.
struct Gate {
    n: u32,
    what: &'static str,
    armed: bool,
}

impl Gate {
    fn open(n: u32, what: &'static str) -> Self {
        Gate {
            n,
            what,
            armed: true,
        }
    }

    fn pass(mut self) {
        self.armed = false;
        println!("criterion {:02}: pass — {}", self.n, self.what);
    }
}

impl Drop for Gate {
    fn drop(&mut self) {
        if self.armed {
            println!("criterion {:02}: FAIL — {}", self.n, self.what);
        }
    }
}

fn folded() -> FoldedGraph {
    let ds = load_dataset(Some(&shipped_errata())).expect("dataset loads");
    build_gprime_quotient(&ds).expect("folded graph builds")
}

#[test]
fn criterion_01_cyclic_example() {
    let gate = Gate::open(
        1,
        "the (9,6) walk reproduces all 18 published assignments, checks clean, reverses under (0 1),(0 2)",
    );
    // the printed assignment list, keyed (y, x) -> (alpha, beta)
    const PUBLISHED: [((usize, usize), (usize, usize)); 18] = [
        ((0, 0), (0, 0)),
        ((1, 1), (0, 0)),
        ((2, 2), (0, 0)),
        ((3, 3), (0, 0)),
        ((4, 4), (0, 0)),
        ((5, 5), (0, 0)),
        ((6, 0), (0, 1)),
        ((7, 1), (0, 1)),
        ((8, 2), (0, 1)),
        ((0, 3), (1, 1)),
        ((1, 4), (1, 1)),
        ((2, 5), (1, 1)),
        ((3, 0), (1, 2)),
        ((6, 3), (1, 2)),
        ((4, 1), (1, 2)),
        ((7, 4), (1, 2)),
        ((5, 2), (1, 2)),
        ((8, 5), (1, 2)),
    ];
    let params = CyclicParams::new(9, 6).unwrap();
    let graph = build_cyclic_bigraph(&params);
    let theta = vec![(0, 0), (0, 1), (1, 1), (1, 2)];
    let omega = vec![6, 3, 3, 6];
    let coloring = greedy_bicolor(&params, &theta, &omega).unwrap();
    assert_eq!(coloring.pairs.len(), 18);
    for (edge, pair) in PUBLISHED {
        let idx = graph
            .edges
            .iter()
            .position(|&(y, x, _)| (y, x) == edge)
            .unwrap_or_else(|| panic!("edge {edge:?} missing from the (9,6) graph"));
        assert_eq!(coloring.pairs[idx], pair, "assignment at edge {edge:?}");
    }
    let system = ColorPairSystem::new(params.lambda(), params.mu(), theta, omega).unwrap();
    assert!(check_faithful(&graph, &coloring, &system).unwrap().ok());
    assert!(check_weight_compatible(&coloring, &system).unwrap().ok());
    let perms = SymbolPermutationPair::new(vec![1, 0], vec![2, 1, 0]).unwrap();
    assert!(is_symmetrically_reversible(&graph, &coloring, &system, &perms).unwrap());
    gate.pass();
}

#[test]
fn criterion_02_increasing_theta() {
    let gate = Gate::open(
        2,
        "is_increasing accepts the published pair sets and rejects the antichain",
    );
    assert!(is_increasing(&[(0, 0), (0, 1), (1, 1), (1, 2)]));
    assert!(is_increasing(&gcc_system().theta));
    assert!(!is_increasing(&[(0, 1), (1, 0)]));
    gate.pass();
}

/// Parity of a full-cycle word, rotated to start at symbol 1 and read as a
/// one-line permutation: true when even. Counts inversions directly — no
/// shared code with the library's cycle machinery.
fn word_is_even(word: &[u8]) -> bool {
    let start = word.iter().position(|&s| s == 1).expect("symbol 1 present");
    let lin: Vec<u8> = (0..word.len())
        .map(|i| word[(start + i) % word.len()])
        .collect();
    let mut inversions = 0usize;
    for i in 0..lin.len() {
        for j in i + 1..lin.len() {
            if lin[i] > lin[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

#[test]
fn criterion_03_reversal_parity() {
    let gate = Gate::open(
        3,
        "reversal preserves cycle parity exactly for n = 5, 9, 13 and never for n = 3, 7, 11 (brute force agrees)",
    );
    // deterministic xorshift so the large-n samples stay reproducible
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for (n, expected) in [(3, false), (5, true), (7, false), (9, true), (11, false), (13, true)] {
        assert_eq!(reversal_preserves_parity(n).unwrap(), expected, "n = {n}");

        // brute force: reversal either preserves parity for every cycle word
        // of that length or for none, so sampled words must all agree
        let mut words: Vec<Vec<u8>> = Vec::new();
        if n <= 7 {
            // every cycle word starting at 1
            let mut rest: Vec<u8> = (2..=n as u8).collect();
            let mut stack = vec![(Vec::<u8>::new(), rest.clone())];
            while let Some((head, remaining)) = stack.pop() {
                if remaining.is_empty() {
                    let mut w = vec![1u8];
                    w.extend(&head);
                    words.push(w);
                    continue;
                }
                for (i, &s) in remaining.iter().enumerate() {
                    let mut h = head.clone();
                    h.push(s);
                    let mut r = remaining.clone();
                    r.remove(i);
                    stack.push((h, r));
                }
            }
            rest.clear();
        } else {
            for _ in 0..200 {
                let mut suffix: Vec<u8> = (2..=n as u8).collect();
                for i in (1..suffix.len()).rev() {
                    let j = (next() % (i as u64 + 1)) as usize;
                    suffix.swap(i, j);
                }
                let mut w = vec![1u8];
                w.extend(suffix);
                words.push(w);
            }
        }
        for w in &words {
            let mut rev = w.clone();
            rev.reverse();
            let preserved = word_is_even(w) == word_is_even(&rev);
            assert_eq!(preserved, expected, "word {w:?}");
        }
    }
    gate.pass();
}

#[test]
fn criterion_04_petersen_structure() {
    let gate = Gate::open(
        4,
        "the triangle graph has the published shape: color-sets are element-sets, 12 five-cycles and 10 six-cycles biject onto classes and subsets, six-cycle words have exact period 3",
    );
    let g = build_petersen();
    assert_eq!(g.vertices().len(), 10);
    assert_eq!(g.edges().len(), 15);
    for (i, subset) in g.vertices().iter().enumerate() {
        let mut colors: Vec<u8> = g
            .edges()
            .iter()
            .filter(|&&(u, v, _)| u == i || v == i)
            .map(|&(_, _, c)| c)
            .collect();
        colors.sort_unstable();
        assert_eq!(colors, subset.to_vec(), "vertex {i}");
    }

    let th = theta_correspondence();
    let five = enumerate_graph_cycles(&g, 5).unwrap();
    assert_eq!(five.len(), 12);
    let induced: BTreeSet<CycleClass> = five
        .iter()
        .map(|c| induced_color_cycle(&g, c).unwrap())
        .collect();
    assert_eq!(induced.len(), 12, "induced map is injective");
    let all_five: BTreeSet<CycleClass> = th.five_classes().cloned().collect();
    assert_eq!(induced, all_five, "induced map is onto the 12 classes");

    let six = enumerate_graph_cycles(&g, 6).unwrap();
    assert_eq!(six.len(), 10);
    let mut subsets: BTreeSet<[u8; 3]> = BTreeSet::new();
    for cycle in &six {
        let word: Vec<u8> = (0..6)
            .map(|i| g.edge_color(cycle[i], cycle[(i + 1) % 6]).unwrap())
            .collect();
        for i in 0..3 {
            assert_eq!(word[i], word[i + 3], "period 3 in {word:?}");
        }
        let mut subset = [word[0], word[1], word[2]];
        subset.sort_unstable();
        assert_eq!(
            BTreeSet::from(subset).len(),
            3,
            "exact period (three distinct colors) in {word:?}"
        );
        subsets.insert(subset);
    }
    assert_eq!(subsets.len(), 10, "subset map is injective");
    let all_three: BTreeSet<CycleClass> = th.three_classes().cloned().collect();
    let mapped: BTreeSet<CycleClass> = subsets.iter().map(|&s| CycleClass::of_subset(s)).collect();
    assert_eq!(mapped, all_three, "subset map is onto the 10 subsets");
    gate.pass();
}

#[test]
fn criterion_05_parity_split() {
    let gate = Gate::open(
        5,
        "the named pentagon classes are exactly the odd ones, their barred partners exactly the even ones",
    );
    let ds = load_dataset(Some(&shipped_errata())).unwrap();
    let th = theta_correspondence();
    let odd: BTreeSet<CycleClass> = th
        .five_classes()
        .filter(|c| cycle_parity(c).unwrap() == Parity::Odd)
        .cloned()
        .collect();
    let even: BTreeSet<CycleClass> = th
        .five_classes()
        .filter(|c| cycle_parity(c).unwrap() == Parity::Even)
        .cloned()
        .collect();
    assert_eq!(odd.len(), 6);
    assert_eq!(even.len(), 6);

    let mut named: BTreeSet<CycleClass> = BTreeSet::new();
    let mut barred: BTreeSet<CycleClass> = BTreeSet::new();
    assert_eq!(ds.display1.len(), 12);
    for (label, _) in &ds.display1 {
        let class = ds.display1_class(*label).unwrap();
        if label.bar {
            barred.insert(class);
        } else {
            named.insert(class);
        }
    }
    assert_eq!(named, odd, "y_0..y_5 carry the odd classes");
    assert_eq!(barred, even, "the barred partners carry the even classes");
    gate.pass();
}

#[test]
fn criterion_06_theta_displays() {
    let gate = Gate::open(
        6,
        "every printed correspondence row names a genuine cycle whose induced colors equal its label",
    );
    let ds = load_dataset(Some(&shipped_errata())).unwrap();
    assert_eq!(ds.theta5_rows.len(), 12);
    assert_eq!(ds.theta3_rows.len(), 10);
    let report = check_theta_displays(&ds);
    assert!(report.ok(), "display check: {report}");
    gate.pass();
}

#[test]
fn criterion_07_dataset_validation() {
    let gate = Gate::open(
        7,
        "raw tables carry the duplicated/missing symbol-4 defect; the shipped overlay validates clean",
    );
    let raw = load_dataset(None).unwrap();
    let report = validate_dataset(&raw);
    assert!(!report.ok(), "raw transcription must be defective");
    let messages: Vec<String> = report
        .violations
        .iter()
        .map(|v| format!("{} {}", v.location, v.message))
        .collect();
    assert!(
        messages
            .iter()
            .any(|m| m.starts_with("y_5 ") && m.contains("[1, 2, 3, 4, 4, 5]")),
        "duplicated symbol 4 at y_5"
    );
    assert!(
        messages
            .iter()
            .any(|m| m.starts_with("y'_5 ") && m.contains("[1, 2, 3, 5]")),
        "missing symbol 4 at y'_5"
    );

    let ds = load_dataset(Some(&shipped_errata())).unwrap();
    let shipped = validate_dataset(&ds);
    assert!(shipped.ok(), "shipped overlay: {shipped}");
    let pentagons = pentagon_cycles_check(&ds);
    assert!(pentagons.ok(), "pentagon walks: {pentagons}");
    gate.pass();
}

#[test]
fn criterion_08_covering() {
    let gate = Gate::open(
        8,
        "the sphere graph is (5,3)-biregular on 32 vertices and folds 2-to-1 onto the derived graph, both construction routes agreeing",
    );
    let ds = load_dataset(Some(&shipped_errata())).unwrap();
    let g = build_g(&ds).unwrap();
    assert_eq!(g.y_names.len(), 12);
    assert_eq!(g.x_names.len(), 20);
    assert_eq!(g.graph.edges.len(), 60);
    for y in 0..12 {
        let tags: BTreeSet<u8> = g
            .graph
            .edges
            .iter()
            .filter(|&&(yy, _, _)| yy == y)
            .map(|&(_, _, t)| t)
            .collect();
        assert_eq!(tags, BTreeSet::from([1, 2, 3, 4, 5]), "star of inner vertex {y}");
    }
    for x in 0..20 {
        let star: Vec<u8> = g
            .graph
            .edges
            .iter()
            .filter(|&&(_, xx, _)| xx == x)
            .map(|&(_, _, t)| t)
            .collect();
        assert_eq!(star.len(), 3, "degree of outer vertex {x}");
        assert_eq!(
            star.iter().collect::<BTreeSet<_>>().len(),
            3,
            "distinct tags at outer vertex {x}"
        );
    }

    let cover = covering_map(&ds).unwrap();
    assert_eq!(cover.y_pairs.len(), 6);
    assert_eq!(cover.x_pairs.len(), 10);
    assert!(cover.check_cover(&g).ok());

    // every folded edge is hit by exactly two sphere edges of its tag
    let gp = folded();
    let mut fibers: BTreeMap<(usize, usize, u8), usize> = BTreeMap::new();
    for &(y, x, tag) in &g.graph.edges {
        let fy = cover.y_fiber(y).unwrap();
        let fx = cover.x_fiber(x).unwrap();
        *fibers.entry((fy, fx, tag)).or_default() += 1;
    }
    assert_eq!(fibers.len(), 30);
    for &(y, x, tag) in &gp.graph.edges {
        assert_eq!(fibers.get(&(y, x, tag)), Some(&2), "fiber of ({y}, {x}, {tag})");
    }

    let report = cross_validate_gprime(&ds).unwrap();
    assert!(report.ok(), "route comparison: {report}");
    gate.pass();
}

#[test]
fn criterion_09_anchored_adjacency() {
    let gate = Gate::open(9, "the color-1 edge at y_0 joins x'_1");
    let gp = folded();
    let hits: Vec<usize> = gp
        .graph
        .edges
        .iter()
        .filter(|&&(y, _, tag)| y == 0 && tag == 1)
        .map(|&(_, x, _)| x)
        .collect();
    assert_eq!(hits.len(), 1);
    assert_eq!(gp.x_names[hits[0]], "x'_1");
    gate.pass();
}

#[test]
fn criterion_10_shared_edges() {
    let gate = Gate::open(
        10,
        "every derived edge pins down exactly one shared triangle-graph edge, colored by its own w-color",
    );
    let gp = folded();
    let th = theta_correspondence();
    let cycle_edges = |cycle: &[usize]| -> BTreeSet<(usize, usize)> {
        (0..cycle.len())
            .map(|i| {
                let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                (u.min(v), u.max(v))
            })
            .collect()
    };
    for &(y, x, tag) in &gp.graph.edges {
        let five = cycle_edges(th.theta5(&gp.y_classes[y]).unwrap());
        let six = cycle_edges(th.theta3_of_subset(gp.x_subsets[x]).unwrap());
        let shared: Vec<&(usize, usize)> = five.intersection(&six).collect();
        assert_eq!(shared.len(), 1, "edge ({y}, {x}, {tag})");

        let (u, v, color) = th
            .shared_edge(&gp.y_classes[y], gp.x_subsets[x])
            .unwrap()
            .expect("shared edge exists");
        assert_eq!((u.min(v), u.max(v)), *shared[0]);
        assert_eq!(color, tag, "edge ({y}, {x})");
    }
    gate.pass();
}

#[test]
fn criterion_11_solver_against_oracle() {
    let gate = Gate::open(
        11,
        "the engine matches the naive oracle: full set equality under the ansatz (< 5 s), lexicographic-prefix lockstep plus the exact transfer count 3685171200 unrestricted (< 60 s)",
    );
    let gp = folded();

    let start = Instant::now();
    let engine = enumerate_gcc_solutions(
        &gp,
        &SolveOptions {
            fix_135: true,
            ..SolveOptions::default()
        },
    )
    .unwrap();
    let naive = common::naive_solutions(&gp, true);
    assert_eq!(engine.count, 6);
    assert_eq!(naive.len(), 6);
    let engine_pairs: Vec<Vec<GccPair>> =
        engine.solutions.iter().map(|s| s.pairs.clone()).collect();
    assert_eq!(engine_pairs, naive, "ansatz solution sets");
    assert_eq!(count_gcc_solutions(&gp, true).unwrap(), 6);
    assert!(
        start.elapsed().as_secs() < 5,
        "ansatz round took {:?}",
        start.elapsed()
    );

    // The unrestricted space holds billions of solutions, so set equality is
    // checked in lockstep on a shared lexicographic prefix, and completeness
    // through the transfer count, which a one-time exhaustive engine run
    // reproduced exactly.
    let start = Instant::now();
    const PREFIX: usize = 20_000;
    let engine = enumerate_gcc_solutions(
        &gp,
        &SolveOptions {
            limit: PREFIX,
            ..SolveOptions::default()
        },
    )
    .unwrap();
    let naive = common::naive_solutions_capped(&gp, false, PREFIX);
    let engine_pairs: Vec<Vec<GccPair>> =
        engine.solutions.iter().map(|s| s.pairs.clone()).collect();
    assert_eq!(engine_pairs, naive, "unrestricted prefix");
    assert_eq!(count_gcc_solutions(&gp, false).unwrap(), 3_685_171_200);
    assert!(
        start.elapsed().as_secs() < 60,
        "unrestricted round took {:?}",
        start.elapsed()
    );
    gate.pass();
}

#[test]
fn criterion_12_existence_and_reversibility() {
    let gate = Gate::open(
        12,
        "the ansatz family is nonempty, the reference solution checks out, and reversible solutions exist",
    );
    let gp = folded();
    let outcome = enumerate_gcc_solutions(
        &gp,
        &SolveOptions {
            fix_135: true,
            ..SolveOptions::default()
        },
    )
    .unwrap();
    assert!(outcome.count > 0);

    let reference = reference_solution(&gp).unwrap();
    assert!(verify_gcc_solution(&gp, &reference).unwrap().ok());
    assert!(is_distribution_reversible(&gp, &reference).unwrap());

    let reversible = outcome
        .solutions
        .iter()
        .filter(|s| is_distribution_reversible(&gp, s).unwrap())
        .count();
    assert!(reversible >= 1);
    assert!(
        outcome
            .solutions
            .iter()
            .any(|s| s.pairs == reference.pairs),
        "the reference solution appears in the enumeration"
    );
    gate.pass();
}

#[test]
fn criterion_13_level_tables() {
    let gate = Gate::open(
        13,
        "level tables balance (columns 12, rows 2ω) and the first import reproduces the printed block on its consistent entries",
    );
    let gp = folded();

    let mut pool = enumerate_gcc_solutions(
        &gp,
        &SolveOptions {
            fix_135: true,
            ..SolveOptions::default()
        },
    )
    .unwrap()
    .solutions;
    pool.extend(
        enumerate_gcc_solutions(
            &gp,
            &SolveOptions {
                limit: 500,
                ..SolveOptions::default()
            },
        )
        .unwrap()
        .solutions,
    );
    for sol in &pool {
        let table = level_distribution(&gp, sol);
        assert_eq!(table.column_sums(), [12; 5]);
        for pair in GccPair::ALL {
            let row_sum: usize = table.row(pair).iter().sum();
            assert_eq!(row_sum, 2 * pair.weight(), "row of {pair:?}");
        }
    }

    let doc = printed_solution("ss4").unwrap();
    let (partial, report) = import_paper_solution(&gp, &doc).unwrap();
    let claimed = claimed_level_table(&gp, &doc);
    let printed = printed_level_block("ss4").unwrap();
    // (pair row, expected counts): the four mixed rows of the printed block
    let expected: [(GccPair, [usize; 5]); 4] = [
        (GccPair::P2a, [0, 4, 0, 4, 0]),
        (GccPair::P2b, [0, 4, 0, 0, 0]),
        (GccPair::P4b, [0, 0, 0, 4, 0]),
        (GccPair::P4c, [0, 4, 0, 4, 0]),
    ];
    for (pair, counts) in expected {
        assert_eq!(claimed.row(pair), counts, "claimed row of {pair:?}");
        assert_eq!(printed[pair as usize], counts, "printed row of {pair:?}");
    }

    // the two consistent entries land on the graph at their printed values
    let lookup = |y: usize, x: usize, tag: u8| -> Option<GccPair> {
        let idx = gp
            .graph
            .edges
            .iter()
            .position(|&e| e == (y, x, tag))
            .expect("edge exists");
        partial.pairs[idx]
    };
    let x = |name: &str| gp.x_names.iter().position(|n| n == name).unwrap();
    assert_eq!(lookup(0, x("x'_4"), 4), Some(GccPair::P2a));
    assert_eq!(lookup(0, x("x'_2"), 2), Some(GccPair::P4c));

    // the ten inconsistent entries are each reported, never matched
    assert_eq!(report.of_kind("import.color").len(), 4);
    assert_eq!(report.of_kind("import.adjacency").len(), 6);
    assert_eq!(partial.assigned(), 20);
    gate.pass();
}

#[test]
fn criterion_14_import_reports() {
    let gate = Gate::open(
        14,
        "imports terminate deterministically and the first one flags the (y_1, x_5) entry printed at w-color 2 where the graph derives 3",
    );
    let gp = folded();
    for label in ["ss4", "ss5a", "ss5b"] {
        let doc = printed_solution(label).unwrap();
        let (first_partial, first) = import_paper_solution(&gp, &doc).unwrap();
        let (second_partial, second) = import_paper_solution(&gp, &doc).unwrap();
        assert_eq!(first.violations, second.violations, "report of {label}");
        assert_eq!(first_partial.pairs, second_partial.pairs, "partial of {label}");
        assert!(!first.ok(), "{label} must raise discrepancies");
    }

    let doc = printed_solution("ss4").unwrap();
    let (_, report) = import_paper_solution(&gp, &doc).unwrap();
    let hit = report
        .violations
        .iter()
        .find(|v| v.location.contains("(y_1, x_5)"))
        .expect("the (y_1, x_5) discrepancy is present");
    assert!(hit.message.contains("printed w-color 2"));
    assert!(hit.message.contains("derived w-color 3"));
    gate.pass();
}
