use crate::error::{Error, Result};
use crate::graph::BiregularGraph;
use crate::report::ValidationReport;
use serde::{Deserialize, Serialize};

/// A pair-color alphabet `theta` over the palettes `0..lambda` × `0..mu`,
/// with a positive weight per pair. `omega[i]` is the weight of `theta[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorPairSystem {
    pub lambda: usize,
    pub mu: usize,
    pub theta: Vec<(usize, usize)>,
    pub omega: Vec<usize>,
}

impl ColorPairSystem {
    pub fn new(
        lambda: usize,
        mu: usize,
        theta: Vec<(usize, usize)>,
        omega: Vec<usize>,
    ) -> Result<Self> {
        if theta.is_empty() {
            return Err(Error::input("theta must be nonempty"));
        }
        if theta.len() != omega.len() {
            return Err(Error::input(format!(
                "theta has {} pairs but omega has {} weights",
                theta.len(),
                omega.len()
            )));
        }
        for (i, &(a, b)) in theta.iter().enumerate() {
            if a >= lambda || b >= mu {
                return Err(Error::input(format!(
                    "theta[{i}] = ({a},{b}) outside palettes {lambda} x {mu}"
                )));
            }
            if theta[..i].contains(&(a, b)) {
                return Err(Error::input(format!("theta[{i}] = ({a},{b}) repeated")));
            }
        }
        if let Some(i) = omega.iter().position(|&w| w == 0) {
            return Err(Error::input(format!("omega[{i}] must be >= 1")));
        }
        Ok(ColorPairSystem {
            lambda,
            mu,
            theta,
            omega,
        })
    }

    pub fn weight_sum(&self) -> usize {
        self.omega.iter().sum()
    }

    pub fn weight_of(&self, pair: (usize, usize)) -> Option<usize> {
        self.theta.iter().position(|&p| p == pair).map(|i| self.omega[i])
    }
}

/// True iff `theta` is a chain under the componentwise order: no two pairs
/// are strictly incomparable (one coordinate up, the other down).
pub fn is_increasing(theta: &[(usize, usize)]) -> bool {
    theta.iter().enumerate().all(|(i, &(a, b))| {
        theta[..i]
            .iter()
            .all(|&(a2, b2)| !(a < a2 && b > b2) && !(a > a2 && b < b2))
    })
}

/// Total assignment of a pair to every edge, indexed by edge position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBicoloring {
    pub pairs: Vec<(usize, usize)>,
}

impl EdgeBicoloring {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        EdgeBicoloring { pairs }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Errors unless the coloring covers exactly the edges of `g` with
    /// pairs inside the `lambda` × `mu` palettes.
    fn require_total(&self, g: &BiregularGraph, lambda: usize, mu: usize) -> Result<()> {
        if self.pairs.len() != g.edge_count() {
            return Err(Error::precondition(format!(
                "coloring has {} pairs for a graph with {} edges",
                self.pairs.len(),
                g.edge_count()
            )));
        }
        for (i, &(a, b)) in self.pairs.iter().enumerate() {
            if a >= lambda || b >= mu {
                return Err(Error::precondition(format!(
                    "edge {i}: pair ({a},{b}) outside palettes {lambda} x {mu}"
                )));
            }
        }
        Ok(())
    }
}

/// Star-injectivity: alpha values pairwise distinct on every Y-star, beta
/// values pairwise distinct on every X-star.
pub fn check_proper(g: &BiregularGraph, coloring: &EdgeBicoloring) -> Result<ValidationReport> {
    coloring.require_total(g, usize::MAX, usize::MAX)?;
    let mut report = ValidationReport::new();
    for y in 0..g.y_count {
        let star = g.y_star(y);
        for (k, &e) in star.iter().enumerate() {
            let alpha = coloring.pairs[e].0;
            if star[..k].iter().any(|&f| coloring.pairs[f].0 == alpha) {
                report.push(
                    "proper.alpha",
                    format!("y{y}"),
                    format!("alpha {alpha} repeats on the star (edge {e})"),
                );
            }
        }
    }
    for x in 0..g.x_count {
        let star = g.x_star(x);
        for (k, &e) in star.iter().enumerate() {
            let beta = coloring.pairs[e].1;
            if star[..k].iter().any(|&f| coloring.pairs[f].1 == beta) {
                report.push(
                    "proper.beta",
                    format!("x{x}"),
                    format!("beta {beta} repeats on the star (edge {e})"),
                );
            }
        }
    }
    Ok(report)
}

/// Properness + membership in `theta` + full palette coverage at every
/// vertex. Coverage is checked directly, not inferred from properness.
pub fn check_faithful(
    g: &BiregularGraph,
    coloring: &EdgeBicoloring,
    system: &ColorPairSystem,
) -> Result<ValidationReport> {
    coloring.require_total(g, system.lambda, system.mu)?;
    let mut report = check_proper(g, coloring)?;
    for (i, pair) in coloring.pairs.iter().enumerate() {
        if !system.theta.contains(pair) {
            report.push(
                "membership",
                format!("edge {i}"),
                format!("pair ({},{}) is not in theta", pair.0, pair.1),
            );
        }
    }
    for y in 0..g.y_count {
        let star = g.y_star(y);
        for alpha in 0..system.lambda {
            if !star.iter().any(|&e| coloring.pairs[e].0 == alpha) {
                report.push(
                    "faithful.alpha",
                    format!("y{y}"),
                    format!("no incident edge carries alpha {alpha}"),
                );
            }
        }
    }
    for x in 0..g.x_count {
        let star = g.x_star(x);
        for beta in 0..system.mu {
            if !star.iter().any(|&e| coloring.pairs[e].1 == beta) {
                report.push(
                    "faithful.beta",
                    format!("x{x}"),
                    format!("no incident edge carries beta {beta}"),
                );
            }
        }
    }
    Ok(report)
}

/// Every pair of `theta` used exactly `omega` times, and nothing outside
/// `theta` used at all.
pub fn check_weight_compatible(
    coloring: &EdgeBicoloring,
    system: &ColorPairSystem,
) -> Result<ValidationReport> {
    let mut report = ValidationReport::new();
    for (pair, &want) in system.theta.iter().zip(&system.omega) {
        let got = coloring.pairs.iter().filter(|p| *p == pair).count();
        if got != want {
            report.push(
                "weight.multiplicity",
                format!("pair ({},{})", pair.0, pair.1),
                format!("used {got} times, omega prescribes {want}"),
            );
        }
    }
    let mut seen_foreign: Vec<(usize, usize)> = Vec::new();
    for pair in &coloring.pairs {
        if !system.theta.contains(pair) && !seen_foreign.contains(pair) {
            seen_foreign.push(*pair);
            report.push(
                "weight.foreign",
                format!("pair ({},{})", pair.0, pair.1),
                "used but not in theta".to_string(),
            );
        }
    }
    Ok(report)
}

/// A pair of palette permutations, e.g. the reversing pair (0 1), (0 2).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolPermutationPair {
    pub perm_alpha: Vec<usize>,
    pub perm_beta: Vec<usize>,
}

impl SymbolPermutationPair {
    pub fn new(perm_alpha: Vec<usize>, perm_beta: Vec<usize>) -> Result<Self> {
        for (name, p) in [("alpha", &perm_alpha), ("beta", &perm_beta)] {
            let mut seen = vec![false; p.len()];
            for &v in p {
                if v >= p.len() || seen[v] {
                    return Err(Error::input(format!(
                        "perm_{name} {p:?} is not a permutation of 0..{}",
                        p.len()
                    )));
                }
                seen[v] = true;
            }
        }
        Ok(SymbolPermutationPair {
            perm_alpha,
            perm_beta,
        })
    }

    pub fn identity(lambda: usize, mu: usize) -> Self {
        SymbolPermutationPair {
            perm_alpha: (0..lambda).collect(),
            perm_beta: (0..mu).collect(),
        }
    }

    /// Parses cycle notation like "(0 1)" or "(0 2)(1 3)" into a
    /// permutation of `0..n`.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Vec<usize>> {
        let mut perm: Vec<usize> = (0..n).collect();
        let body = text.trim();
        if body.is_empty() {
            return Ok(perm);
        }
        for cycle in body.split(')') {
            let cycle = cycle.trim();
            if cycle.is_empty() {
                continue;
            }
            let cycle = cycle
                .strip_prefix('(')
                .ok_or_else(|| Error::input(format!("bad cycle notation: {text}")))?;
            let members: Vec<usize> = cycle
                .split(|c: char| c == ' ' || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::input(format!("bad cycle element: {s}")))
                })
                .collect::<Result<_>>()?;
            for &m in &members {
                if m >= n {
                    return Err(Error::input(format!("cycle element {m} out of 0..{n}")));
                }
            }
            for w in members.windows(2) {
                perm[w[0]] = w[1];
            }
            if members.len() > 1 {
                perm[members[members.len() - 1]] = members[0];
            }
        }
        // A repeated element would leave perm non-bijective.
        SymbolPermutationPair::new(perm.clone(), vec![]).map(|p| p.perm_alpha)
    }
}

/// Replaces each (alpha, beta) by (perm_alpha(alpha), perm_beta(beta)).
pub fn apply_pair_permutation(
    coloring: &EdgeBicoloring,
    perms: &SymbolPermutationPair,
) -> Result<EdgeBicoloring> {
    let pairs = coloring
        .pairs
        .iter()
        .map(|&(a, b)| {
            if a >= perms.perm_alpha.len() || b >= perms.perm_beta.len() {
                return Err(Error::input(format!(
                    "pair ({a},{b}) outside the permutation palettes {} x {}",
                    perms.perm_alpha.len(),
                    perms.perm_beta.len()
                )));
            }
            Ok((perms.perm_alpha[a], perms.perm_beta[b]))
        })
        .collect::<Result<_>>()?;
    Ok(EdgeBicoloring::new(pairs))
}

/// True iff the permuted coloring is still faithful and weight-compatible
/// for the same system. Requires the input coloring to be valid already.
pub fn is_symmetrically_reversible(
    g: &BiregularGraph,
    coloring: &EdgeBicoloring,
    system: &ColorPairSystem,
    perms: &SymbolPermutationPair,
) -> Result<bool> {
    if !check_faithful(g, coloring, system)?.ok() || !check_weight_compatible(coloring, system)?.ok()
    {
        return Err(Error::precondition(
            "is_symmetrically_reversible requires a faithful, weight-compatible coloring",
        ));
    }
    let permuted = apply_pair_permutation(coloring, perms)?;
    Ok(check_faithful(g, &permuted, system)?.ok()
        && check_weight_compatible(&permuted, system)?.ok())
}
