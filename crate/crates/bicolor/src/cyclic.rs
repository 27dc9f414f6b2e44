use crate::coloring::EdgeBicoloring;
use crate::error::{Error, Result};
use crate::graph::BiregularGraph;

/// Parameters of the two-cyclic-group family: parts `Y = Z_m`, `X = Z_n`
/// with `m >= n >= 1`, one edge `((i mod m), (i mod n))` for each
/// `i` in `0..m*n/gcd(m,n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicParams {
    pub m: usize,
    pub n: usize,
}

impl CyclicParams {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if n < 1 || m < n {
            return Err(Error::input(format!(
                "need m >= n >= 1, got m = {m}, n = {n}"
            )));
        }
        Ok(CyclicParams { m, n })
    }

    pub fn gcd(&self) -> usize {
        let (mut a, mut b) = (self.m, self.n);
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }

    pub fn edge_count(&self) -> usize {
        self.m * self.n / self.gcd()
    }

    pub fn lambda(&self) -> usize {
        self.n / self.gcd()
    }

    pub fn mu(&self) -> usize {
        self.m / self.gcd()
    }
}

pub fn build_cyclic_bigraph(params: &CyclicParams) -> BiregularGraph {
    let edges = (0..params.edge_count())
        .map(|i| (i % params.m, i % params.n, 0u8))
        .collect();
    BiregularGraph::new(params.m, params.n, params.lambda(), params.mu(), edges)
        .expect("cyclic construction stays in range")
}

/// Walks the edges in construction order `i = 0, 1, ...`, assigning
/// `ordered_theta[k]` to the next `omega[k]` edges and advancing `k` when
/// that weight is spent. The result is weight-compatible by construction;
/// faithfulness is NOT guaranteed and must be checked by the caller.
pub fn greedy_bicolor(
    params: &CyclicParams,
    ordered_theta: &[(usize, usize)],
    omega: &[usize],
) -> Result<EdgeBicoloring> {
    if ordered_theta.len() != omega.len() {
        return Err(Error::input(format!(
            "theta has {} pairs but omega has {} weights",
            ordered_theta.len(),
            omega.len()
        )));
    }
    for (i, p) in ordered_theta.iter().enumerate() {
        if ordered_theta[..i].contains(p) {
            return Err(Error::input(format!("repeated pair ({},{})", p.0, p.1)));
        }
    }
    let total: usize = omega.iter().sum();
    if total != params.edge_count() {
        return Err(Error::input(format!(
            "weights sum to {total}, edge count is {}",
            params.edge_count()
        )));
    }
    let mut pairs = Vec::with_capacity(total);
    for (&pair, &weight) in ordered_theta.iter().zip(omega) {
        pairs.extend(std::iter::repeat(pair).take(weight));
    }
    Ok(EdgeBicoloring::new(pairs))
}
