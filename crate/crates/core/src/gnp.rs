//! Binomial random graphs: seeded sampling, the Monte-Carlo check of the
//! multicyclic-component probability bound, and the sparse-regime
//! representation pipeline (random partition, pairwise multicyclic checks,
//! 2-box blocks, complete-graph Steiner gluing).

use alloc::format;
use alloc::vec::Vec;

use crate::boxrep::Representation;
use crate::compose::{compose, SteinerSystem};
use crate::error::Error;
use crate::graph::{Graph, VertexPartition};
use crate::interval::sparse_two_box;
use crate::rng::Rng;
use crate::Result;

/// A reproducible sample of `G(n, p)`.
#[derive(Clone, Debug)]
pub struct GnpSample {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub graph: Graph,
}

/// Samples `G(n, p)`: every pair is an edge independently with probability
/// `p`. Deterministic per `(n, p, seed)`.
///
/// Sparse probabilities use geometric jumps over the pair sequence, so a
/// sample costs time proportional to the expected edge count.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<GnpSample> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadProbability { p });
    }
    let mut rng = Rng::new(seed).split(0x6E70);
    let mut graph = Graph::empty(n);
    let total = n.saturating_mul(n.saturating_sub(1)) / 2;
    if p >= 1.0 {
        for u in 0..n {
            for v in (u + 1)..n {
                graph.add_edge(u, v)?;
            }
        }
    } else if p > 0.1 {
        let mut idx = 0usize;
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.next_bool(p) {
                    graph.add_edge(u, v)?;
                }
                idx += 1;
            }
        }
        debug_assert_eq!(idx, total);
    } else if p > 0.0 {
        // Skip sampling: the gap to the next edge is geometric.
        let log1mp = libm::log(1.0 - p);
        let mut cursor = 0usize;
        loop {
            let u = rng.next_f64();
            let skip = libm::floor(libm::log(1.0 - u) / log1mp) as usize;
            cursor = match cursor.checked_add(skip) {
                Some(c) => c,
                None => break,
            };
            if cursor >= total {
                break;
            }
            let (a, b) = pair_of_index(n, cursor);
            graph.add_edge(a, b)?;
            cursor += 1;
        }
    }
    Ok(GnpSample { n, p, seed, graph })
}

/// The `idx`-th pair in the row-major order (0,1), (0,2), ..., (0,n-1),
/// (1,2), ...
fn pair_of_index(n: usize, idx: usize) -> (usize, usize) {
    let mut u = 0usize;
    let mut remaining = idx;
    loop {
        let row = n - u - 1;
        if remaining < row {
            return (u, u + 1 + remaining);
        }
        remaining -= row;
        u += 1;
    }
}

/// Result of the multicyclic Monte Carlo: empirical frequency next to the
/// probability bound `2/((1-c)^3 n)` and the binomial standard deviation at
/// that bound.
#[derive(Clone, Copy, Debug)]
pub struct MulticyclicMc {
    pub n: usize,
    pub c: f64,
    pub trials: usize,
    pub hits: usize,
    pub empirical: f64,
    pub bound: f64,
    pub sigma: f64,
}

/// Samples `trials` graphs from `G(n, c/n)` and counts those with a
/// multicyclic component.
pub fn multicyclic_mc(n: usize, c: f64, trials: usize, seed: u64) -> Result<MulticyclicMc> {
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN too
    if !(c < 1.0) {
        return Err(Error::BadParameter(format!(
            "bound is vacuous for c = {c} >= 1"
        )));
    }
    if c < 0.0 {
        return Err(Error::BadParameter(format!("c = {c} negative")));
    }
    if n == 0 || trials == 0 {
        return Err(Error::BadParameter(alloc::string::String::from(
            "n and trials must be positive",
        )));
    }
    let p = c / n as f64;
    let root = Rng::new(seed);
    let mut hits = 0usize;
    for t in 0..trials {
        let sub_seed = root.split(t as u64).next_u64();
        let sample = sample_gnp(n, p, sub_seed)?;
        if !sample.graph.multicyclic_free() {
            hits += 1;
        }
    }
    let bound = 2.0 / ((1.0 - c) * (1.0 - c) * (1.0 - c) * n as f64);
    let capped = bound.min(1.0);
    let sigma = libm::sqrt(capped * (1.0 - capped) / trials as f64);
    Ok(MulticyclicMc {
        n,
        c,
        trials,
        hits,
        empirical: hits as f64 / trials as f64,
        bound,
        sigma,
    })
}

/// Outcome of the sparse-regime pipeline.
#[derive(Clone, Debug)]
pub struct GnpRepResult {
    pub rep: Representation,
    pub max_locality: usize,
    pub classes: usize,
    pub resamples: usize,
}

/// Builds a verified representation of `g` by the sparse-regime pipeline:
/// partition into `ceil(2(1+epsilon)np)` classes uniformly at random, check
/// that every pair of classes induces a graph without multicyclic
/// components (resampling the partition otherwise), represent each pair
/// union in two dimensions, and glue through the complete-graph Steiner
/// system. Locality is at most `2(classes - 1)`.
pub fn gnp_rep(
    g: &Graph,
    np: f64,
    epsilon: f64,
    seed: u64,
    max_retries: usize,
) -> Result<GnpRepResult> {
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN too
    if !(epsilon > 0.0) {
        return Err(Error::BadParameter(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN too
    if !(np >= 0.0) {
        return Err(Error::BadParameter(format!(
            "np must be nonnegative, got {np}"
        )));
    }
    let classes = libm::ceil(2.0 * (1.0 + epsilon) * np).max(1.0) as usize;
    let root = Rng::new(seed).split(0x706172);
    if classes == 1 {
        // Single class: the graph itself must be multicyclic-free.
        if !g.multicyclic_free() {
            return Err(Error::PipelineFailure(alloc::string::String::from(
                "one class and the graph has a multicyclic component",
            )));
        }
        let rep = sparse_two_box(g)?;
        let max_locality = rep.max_locality();
        return Ok(GnpRepResult {
            rep,
            max_locality,
            classes,
            resamples: 0,
        });
    }
    let mut failure = None;
    for attempt in 0..=max_retries {
        let mut rng = root.split(attempt as u64);
        let assignment: Vec<usize> = (0..g.n())
            .map(|_| rng.next_below(classes as u64) as usize)
            .collect();
        let partition = VertexPartition::from_assignment(assignment, classes)?;
        match try_partition(g, &partition, classes) {
            Ok(rep) => {
                let max_locality = rep.max_locality();
                debug_assert!(max_locality <= 2 * (classes - 1));
                return Ok(GnpRepResult {
                    rep,
                    max_locality,
                    classes,
                    resamples: attempt,
                });
            }
            Err(e) => failure = Some(e),
        }
    }
    Err(failure.unwrap_or({
        Error::RetriesExhausted {
            retries: max_retries,
            best_violations: 0,
        }
    }))
}

fn try_partition(g: &Graph, partition: &VertexPartition, classes: usize) -> Result<Representation> {
    let sys = SteinerSystem::complete_graph_edges(classes)?;
    // Check every pair union first so failures name the offending pair.
    for block in &sys.blocks {
        let union = partition.union_of(block);
        let (sub, _) = g.induced(&union);
        if !sub.multicyclic_free() {
            return Err(Error::PipelineFailure(format!(
                "classes {} and {} induce a multicyclic component",
                block[0], block[1]
            )));
        }
    }
    let mut block_reps = Vec::with_capacity(sys.blocks.len());
    for block in &sys.blocks {
        let union = partition.union_of(block);
        let (sub, _) = g.induced(&union);
        block_reps.push(sparse_two_box(&sub)?);
    }
    let rep = compose(g, partition, &sys, &block_reps)?;
    let report = rep.verify(g, 2 * (classes - 1))?;
    if !report.ok {
        return Err(Error::PipelineFailure(format!(
            "composed representation failed verification: {:?}",
            report.first_violation
        )));
    }
    Ok(rep)
}
