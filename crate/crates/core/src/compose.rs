//! Steiner-system composition machinery: affine planes over prime fields,
//! prime windows, the block-union composition bound, the randomized
//! balanced partition, the alpha product function, and the recursive
//! degree/edge drivers that assemble verified representations.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::boxrep::{intersect_reps, pad_universal, Representation};
use crate::error::Error;
use crate::graph::{Graph, VertexPartition};
use crate::interval::{is_interval, IntervalCheck};
use crate::rng::Rng;
use crate::solver::{lbox_exact_with_budget, SolveOutcome};
use crate::Result;

/// A family of k-element blocks over `[s]` covering every t-subset exactly
/// once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSystem {
    pub s: usize,
    pub t: usize,
    pub k: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl SteinerSystem {
    /// The `(2, 2, s)` system formed by the edge set of the complete graph.
    pub fn complete_graph_edges(s: usize) -> Result<SteinerSystem> {
        if s < 2 {
            return Err(Error::BadParameter(format!(
                "(2,2,s) needs s >= 2, got {s}"
            )));
        }
        let mut blocks = Vec::new();
        for i in 0..s {
            for j in (i + 1)..s {
                blocks.push(vec![i, j]);
            }
        }
        Ok(SteinerSystem {
            s,
            t: 2,
            k: 2,
            blocks,
        })
    }

    /// Replication number: blocks through a point, `(s-1)/(k-1)` for `t = 2`.
    pub fn replication(&self) -> usize {
        (self.s - 1) / (self.k - 1)
    }
}

/// First verification failure of a Steiner system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SteinerViolation {
    BadBlockSize { block: usize, size: usize },
    PointOutOfRange { block: usize, point: usize },
    SubsetNotCovered { subset: Vec<usize> },
    SubsetCoveredTwice { subset: Vec<usize> },
    BadBlockCount { expected: usize, got: usize },
}

/// Checks the exactly-one-block property over all t-subsets and the block
/// count `C(s,t)/C(k,t)`.
pub fn verify_steiner(sys: &SteinerSystem) -> core::result::Result<(), SteinerViolation> {
    for (bi, block) in sys.blocks.iter().enumerate() {
        if block.len() != sys.k {
            return Err(SteinerViolation::BadBlockSize {
                block: bi,
                size: block.len(),
            });
        }
        for &p in block {
            if p >= sys.s {
                return Err(SteinerViolation::PointOutOfRange {
                    block: bi,
                    point: p,
                });
            }
        }
    }
    // Count coverage of every t-subset.
    let mut subset = vec![0usize; sys.t];
    fn scan(
        sys: &SteinerSystem,
        subset: &mut Vec<usize>,
        depth: usize,
        start: usize,
    ) -> core::result::Result<(), SteinerViolation> {
        if depth == sys.t {
            let mut count = 0;
            for block in &sys.blocks {
                if subset.iter().all(|p| block.contains(p)) {
                    count += 1;
                }
            }
            if count == 0 {
                return Err(SteinerViolation::SubsetNotCovered {
                    subset: subset.clone(),
                });
            }
            if count > 1 {
                return Err(SteinerViolation::SubsetCoveredTwice {
                    subset: subset.clone(),
                });
            }
            return Ok(());
        }
        for p in start..sys.s {
            subset[depth] = p;
            scan(sys, subset, depth + 1, p + 1)?;
        }
        Ok(())
    }
    scan(sys, &mut subset, 0, 0)?;
    let expected = binomial(sys.s, sys.t) / binomial(sys.k, sys.t);
    if sys.blocks.len() != expected {
        return Err(SteinerViolation::BadBlockCount {
            expected,
            got: sys.blocks.len(),
        });
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut out: u128 = 1;
    for i in 0..k {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out as usize
}

/// Deterministic primality for 64-bit integers: Miller-Rabin with a fixed
/// base set, cross-checked by trial division for small inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut out = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            out = mul_mod(out, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    out
}

/// Trial-division check used to double-check Miller-Rabin results.
pub fn is_prime_trial(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime in `[t, t + t/(2 ln^2 t)]`; existence is guaranteed for
/// `t >= 3275` (Dusart's prime-gap window).
pub fn prime_in_window(t: f64) -> Result<u64> {
    if t < 3275.0 {
        return Err(Error::BelowThreshold {
            got: t,
            threshold: 3275.0,
        });
    }
    let lo = libm::ceil(t) as u64;
    let lnt = libm::log(t);
    let hi = libm::floor(t + t / (2.0 * lnt * lnt)) as u64;
    for q in lo..=hi {
        if is_prime(q) {
            debug_assert!(is_prime_trial(q));
            return Ok(q);
        }
    }
    unreachable!("window [{lo}, {hi}] contains a prime for t >= 3275")
}

/// Smallest prime `q` with `q^2 >= t`; for `t >= 3275^2` the square lies in
/// `[t, t + 7t/ln^2 t]`.
pub fn prime_square_in_window(t: f64) -> Result<u64> {
    let threshold = 3275.0 * 3275.0;
    if t < threshold {
        return Err(Error::BelowThreshold { got: t, threshold });
    }
    let mut k = libm::ceil(libm::sqrt(t)) as u64;
    while (k as f64) * (k as f64) < t {
        k += 1;
    }
    let mut q = k;
    while !is_prime(q) {
        q += 1;
    }
    let lnt = libm::log(t);
    debug_assert!((q as f64) * (q as f64) <= t + 7.0 * t / (lnt * lnt));
    Ok(q)
}

/// The affine plane over the prime field `F_q` as a Steiner system with
/// parameters `(2, q, q^2)`: point `(x, y)` is index `x*q + y`; lines
/// `y = a*x + b` come first (slope-major, intercept-minor), then the `q`
/// vertical lines.
pub fn affine_plane(q: u64) -> Result<SteinerSystem> {
    if !is_prime(q) {
        return Err(Error::NotPrime { value: q });
    }
    let qu = q as usize;
    let mut blocks = Vec::with_capacity(qu * qu + qu);
    for a in 0..q {
        for b in 0..q {
            let mut line = Vec::with_capacity(qu);
            for x in 0..q {
                let y = (a * x + b) % q;
                line.push((x * q + y) as usize);
            }
            blocks.push(line);
        }
    }
    for c in 0..q {
        let mut line = Vec::with_capacity(qu);
        for y in 0..q {
            line.push((c * q + y) as usize);
        }
        blocks.push(line);
    }
    Ok(SteinerSystem {
        s: qu * qu,
        t: 2,
        k: qu,
        blocks,
    })
}

/// Truncated value of the product `prod_{i>=1} (1 + 18*4^i/(9^i ln^2 t))^{-1}`
/// with a certified tail bound.
#[derive(Clone, Copy, Debug)]
pub struct AlphaValue {
    pub t: f64,
    pub value: f64,
    pub tail_bound: f64,
}

/// Evaluates the alpha product at `t >= 2` with truncation error at most
/// `tol`.
///
/// The log of the omitted tail beyond term `N` is at most
/// `(18/ln^2 t) * sum_{i>N} (4/9)^i = 32.4 * (4/9)^{N+1} / ln^2 t`, which
/// also bounds the value error since the value lies in `(0, 1)`.
pub fn alpha(t: f64, tol: f64) -> Result<AlphaValue> {
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN too
    if !(t >= 2.0) {
        return Err(Error::BadParameter(format!("alpha needs t >= 2, got {t}")));
    }
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN too
    if !(tol > 0.0) {
        return Err(Error::BadParameter(format!(
            "alpha needs tol > 0, got {tol}"
        )));
    }
    let ln2t = libm::log(t) * libm::log(t);
    // Term i is (1 + 18*(4/9)^i / ln^2 t)^{-1}.
    let tail = |i: u32| -> f64 { 32.4 * libm::pow(4.0 / 9.0, (i + 1) as f64) / ln2t };
    let mut value = 1.0f64;
    let mut i = 0u32;
    loop {
        i += 1;
        value /= 1.0 + 18.0 * libm::pow(4.0 / 9.0, i as f64) / ln2t;
        if tail(i) <= tol {
            break;
        }
        if i > 10_000 {
            return Err(Error::BadParameter(String::from(
                "alpha failed to converge",
            )));
        }
    }
    Ok(AlphaValue {
        t,
        value,
        tail_bound: tail(i),
    })
}

/// Glues per-block representations through a Steiner system: every block
/// representation is padded to the full vertex set and all are intersected.
///
/// With a `(2, k, s)` system over the partition classes, every non-edge of
/// `g` lies inside some block union, so the intersection realizes `g`, and
/// every class meets exactly `(s-1)/(k-1)` blocks, so per-vertex locality is
/// at most `(s-1)/(k-1)` times the worst block locality (audited here, not
/// assumed).
pub fn compose(
    g: &Graph,
    partition: &VertexPartition,
    sys: &SteinerSystem,
    block_reps: &[Representation],
) -> Result<Representation> {
    if partition.n() != g.n() {
        return Err(Error::VertexCountMismatch {
            expected: g.n(),
            got: partition.n(),
        });
    }
    if sys.t != 2 {
        return Err(Error::InvalidSteiner(format!(
            "composition needs t = 2, got {}",
            sys.t
        )));
    }
    if sys.s != partition.num_classes() {
        return Err(Error::InvalidSteiner(format!(
            "system over [{}] but partition has {} classes",
            sys.s,
            partition.num_classes()
        )));
    }
    if verify_steiner(sys).is_err() {
        return Err(Error::InvalidSteiner(String::from(
            "system failed verification",
        )));
    }
    if block_reps.len() != sys.blocks.len() {
        return Err(Error::InvalidSteiner(format!(
            "{} blocks but {} block representations",
            sys.blocks.len(),
            block_reps.len()
        )));
    }
    let mut padded = Vec::with_capacity(block_reps.len());
    for (bi, (block, rep)) in sys.blocks.iter().zip(block_reps).enumerate() {
        let union = partition.union_of(block);
        match pad_universal(rep, g, &union) {
            Ok(p) => padded.push(p),
            Err(_) => return Err(Error::BadBlockRep { block: bi }),
        }
    }
    let combined = intersect_reps(&padded)?;
    let realized = combined.realize();
    if realized != *g {
        for u in 0..g.n() {
            for v in (u + 1)..g.n() {
                if realized.has_edge(u, v) != g.has_edge(u, v) {
                    return Err(Error::DoesNotRealize {
                        u,
                        v,
                        expected_edge: g.has_edge(u, v),
                    });
                }
            }
        }
    }
    // Locality audit: replication times the worst block locality.
    let replication = sys.replication();
    let max_block_locality = block_reps
        .iter()
        .map(|r| r.max_locality())
        .max()
        .unwrap_or(0);
    let bound = replication * max_block_locality;
    for v in 0..g.n() {
        assert!(
            combined.locality_of(v) <= bound,
            "locality audit failed at vertex {v}: {} > {bound}",
            combined.locality_of(v)
        );
    }
    Ok(combined)
}

/// Uniform random partition into `q^2` classes, resampled until every block
/// union of the affine plane over `F_q` induces maximum degree at most
/// `(1 + slack) * max_degree / q`. Deterministic given the seed.
pub fn balanced_partition(
    g: &Graph,
    q: u64,
    slack: f64,
    seed: u64,
) -> Result<(VertexPartition, SteinerSystem)> {
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN too
    if !(slack > 0.0) {
        return Err(Error::BadParameter(format!(
            "slack must be positive, got {slack}"
        )));
    }
    let sys = affine_plane(q)?;
    let classes = (q * q) as usize;
    let delta = g.max_degree() as f64;
    let bound = (1.0 + slack) * delta / q as f64;
    let retry_cap = libm::ceil(10.0 * classes as f64 * libm::log(g.n() as f64 + 2.0)) as usize;
    let root = Rng::new(seed);
    let mut best: Option<(usize, VertexPartition)> = None;
    for attempt in 0..retry_cap.max(1) {
        let mut rng = root.split(attempt as u64);
        let assignment: Vec<usize> = (0..g.n())
            .map(|_| rng.next_below(classes as u64) as usize)
            .collect();
        let partition = VertexPartition::from_assignment(assignment, classes)?;
        let violations = count_violations(g, &partition, &sys, bound);
        if violations == 0 {
            return Ok((partition, sys));
        }
        if best.as_ref().is_none_or(|(b, _)| violations < *b) {
            best = Some((violations, partition));
        }
    }
    let (best_violations, _) = best.expect("at least one attempt");
    Err(Error::RetriesExhausted {
        retries: retry_cap,
        best_violations,
    })
}

fn count_violations(
    g: &Graph,
    partition: &VertexPartition,
    sys: &SteinerSystem,
    bound: f64,
) -> usize {
    let mut violations = 0;
    for block in &sys.blocks {
        let union = partition.union_of(block);
        let (sub, _) = g.induced(&union);
        if sub.max_degree() as f64 > bound {
            violations += 1;
        }
    }
    violations
}

/// Options for the recursive drivers.
#[derive(Clone, Copy, Debug)]
pub struct DriverOpts {
    /// Solve instances up to this many vertices exactly.
    pub exact_cutoff: usize,
    /// Force this prime for the partition instead of deriving one from the
    /// degree (the derived prime only exists at astronomical scales).
    pub q_override: Option<u64>,
    pub seed: u64,
}

impl Default for DriverOpts {
    fn default() -> Self {
        DriverOpts {
            exact_cutoff: 8,
            q_override: None,
            seed: 0,
        }
    }
}

/// A verified representation with its audited locality (the reported bound
/// is always the audit of the concrete output, never a theoretical constant).
#[derive(Clone, Debug)]
pub struct DriverResult {
    pub rep: Representation,
    pub max_locality: usize,
}

/// Recursive degree-driven driver: exact below the cutoff, interval-graph
/// shortcut, otherwise a balanced partition into `q^2` classes glued through
/// the affine plane, with blocks solved recursively.
pub fn lbox_by_degree(g: &Graph, opts: &DriverOpts) -> Result<DriverResult> {
    lbox_by_degree_depth(g, opts, 0)
}

fn lbox_by_degree_depth(g: &Graph, opts: &DriverOpts, depth: usize) -> Result<DriverResult> {
    if depth > 32 {
        return Err(Error::NoStrategy(String::from(
            "recursion failed to shrink blocks",
        )));
    }
    if g.n() <= opts.exact_cutoff {
        match lbox_exact_with_budget(g, crate::solver::DEFAULT_BUDGET) {
            SolveOutcome::Exact(r) => {
                return Ok(finish(g, r.certificate));
            }
            SolveOutcome::Unknown { .. } => {}
        }
    }
    if let IntervalCheck::Interval(model) = is_interval(g) {
        return Ok(finish(g, model.to_representation()));
    }
    let delta = g.max_degree() as f64;
    let q = match opts.q_override {
        Some(q) => {
            if !is_prime(q) {
                return Err(Error::NotPrime { value: q });
            }
            q
        }
        None => {
            let lnd = libm::log(delta.max(2.0));
            let target = delta / lnd;
            if target < 3275.0 * 3275.0 {
                return Err(Error::NoStrategy(format!(
                    "degree {delta} too small for the derived prime window and n = {} above the exact cutoff; pass a prime override",
                    g.n()
                )));
            }
            prime_square_in_window(target)?
        }
    };
    let slack = 4.0 * libm::sqrt(q as f64 * libm::log(delta.max(2.0)) / delta.max(2.0));
    let (partition, sys) = balanced_partition(g, q, slack, opts.seed)?;
    let mut block_reps = Vec::with_capacity(sys.blocks.len());
    for (bi, block) in sys.blocks.iter().enumerate() {
        let union = partition.union_of(block);
        let (sub, _) = g.induced(&union);
        if sub.n() >= g.n() && g.n() > opts.exact_cutoff {
            return Err(Error::NoStrategy(format!(
                "block {bi} did not shrink (|union| = {}); refusing unbounded recursion",
                sub.n()
            )));
        }
        let sub_opts = DriverOpts {
            seed: Rng::new(opts.seed).split(bi as u64).next_u64(),
            ..*opts
        };
        let sub_result = lbox_by_degree_depth(&sub, &sub_opts, depth + 1)?;
        block_reps.push(sub_result.rep);
    }
    let rep = compose(g, &partition, &sys, &block_reps)?;
    Ok(finish(g, rep))
}

/// Edge-driven driver: peel every vertex of degree at least `sqrt(m)`,
/// represent the rest by degree, then re-add the peeled vertices one
/// dimension each.
pub fn lbox_by_edges(g: &Graph, opts: &DriverOpts) -> Result<DriverResult> {
    let m = g.m() as f64;
    let threshold = libm::sqrt(m);
    let peeled: Vec<usize> = (0..g.n())
        .filter(|&v| (g.degree(v) as f64) >= threshold && g.degree(v) > 0)
        .collect();
    let kept: Vec<usize> = (0..g.n()).filter(|&v| !peeled.contains(&v)).collect();
    let (core, core_verts) = g.induced(&kept);
    let base = lbox_by_degree(&core, opts)?;
    // Re-add peeled vertices (ascending), one new dimension each; the
    // running vertex order is core vertices first, then peeled.
    let mut order: Vec<usize> = core_verts.clone();
    let mut rep = base.rep;
    for &v in &peeled {
        let nbrs: Vec<usize> = order
            .iter()
            .enumerate()
            .filter(|&(_, &u)| g.has_edge(u, v))
            .map(|(i, _)| i)
            .collect();
        rep = rep.add_vertex_dim(&nbrs)?;
        order.push(v);
    }
    // Permute back to the original vertex numbering.
    let mut boxes = vec![crate::boxrep::LocalBox::all(); g.n()];
    for (pos, &orig) in order.iter().enumerate() {
        boxes[orig] = rep.boxed(pos).clone();
    }
    let rep = Representation::new(g.n(), rep.dims(), boxes)?;
    Ok(finish(g, rep))
}

fn finish(g: &Graph, rep: Representation) -> DriverResult {
    let report = rep
        .verify(g, rep.max_locality())
        .expect("vertex counts match");
    assert!(
        report.ok,
        "driver output failed verification: {:?}",
        report.first_violation
    );
    DriverResult {
        max_locality: report.max_locality,
        rep,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_planes_small() {
        let sys = affine_plane(2).unwrap();
        assert_eq!(sys.s, 4);
        assert_eq!(sys.blocks.len(), 6);
        verify_steiner(&sys).unwrap();

        let sys = affine_plane(3).unwrap();
        assert_eq!(sys.s, 9);
        assert_eq!(sys.blocks.len(), 12);
        for p in 0..9 {
            let through = sys.blocks.iter().filter(|b| b.contains(&p)).count();
            assert_eq!(through, 4, "every point lies on q+1 lines");
        }
        verify_steiner(&sys).unwrap();

        assert_eq!(affine_plane(4), Err(Error::NotPrime { value: 4 }));
    }

    #[test]
    fn steiner_verifier_catches_damage() {
        let sys = SteinerSystem::complete_graph_edges(5).unwrap();
        verify_steiner(&sys).unwrap();
        let mut damaged = affine_plane(3).unwrap();
        let removed = damaged.blocks.pop().unwrap();
        match verify_steiner(&damaged) {
            Err(SteinerViolation::SubsetNotCovered { subset }) => {
                assert!(subset.iter().all(|p| removed.contains(p)));
            }
            other => panic!("expected missing pair, got {other:?}"),
        }
    }

    #[test]
    fn primality_cross_check() {
        for n in 0..2000u64 {
            assert_eq!(is_prime(n), is_prime_trial(n), "n = {n}");
        }
        assert!(is_prime(3299));
        assert!(!is_prime(3277)); // 29 * 113
    }

    #[test]
    fn prime_windows() {
        assert_eq!(prime_in_window(3275.0).unwrap(), 3299);
        assert!(matches!(
            prime_in_window(100.0),
            Err(Error::BelowThreshold { .. })
        ));
        let q = prime_square_in_window(3275.0 * 3275.0).unwrap();
        assert_eq!(q, 3299);
        let t = 3275.0f64 * 3275.0;
        let lnt = libm::log(t);
        assert!((q as f64) * (q as f64) <= t + 7.0 * t / (lnt * lnt));
        assert!(matches!(
            prime_square_in_window(100.0),
            Err(Error::BelowThreshold { .. })
        ));
    }

    #[test]
    fn alpha_basics() {
        for t in [2.0, 10.0, 1e6] {
            let a = alpha(t, 1e-12).unwrap();
            assert!(a.value > 0.0 && a.value < 1.0, "alpha({t}) = {}", a.value);
            assert!(a.tail_bound <= 1e-12);
        }
        let a10 = alpha(10.0, 1e-12).unwrap().value;
        let a100 = alpha(100.0, 1e-12).unwrap().value;
        let a1e6 = alpha(1e6, 1e-12).unwrap().value;
        assert!(a10 < a100 && a100 < a1e6, "alpha is increasing");
    }

    #[test]
    fn alpha_functional_identity() {
        // (1 + 18/ln^2 t) * alpha(t^{2/3}) = alpha(t).
        for t in [1e3, 1e6] {
            let tol = 1e-13;
            let lhs = (1.0 + 18.0 / (libm::log(t) * libm::log(t)))
                * alpha(libm::pow(t, 2.0 / 3.0), tol).unwrap().value;
            let rhs = alpha(t, tol).unwrap().value;
            assert!(
                (lhs - rhs).abs() <= 10.0 * 1e-9,
                "identity off by {}",
                (lhs - rhs).abs()
            );
        }
    }

    #[test]
    fn alpha_tail_bound_is_sound() {
        // Compare two truncation depths: the coarse value must sit within
        // its own tail bound of the fine value.
        for t in [2.0, 50.0, 1e4] {
            let coarse = alpha(t, 1e-6).unwrap();
            let fine = alpha(t, 1e-15).unwrap();
            assert!((coarse.value - fine.value).abs() <= coarse.tail_bound + 1e-15);
        }
    }

    #[test]
    fn compose_single_block_identity() {
        // s = k: one block covering everything reduces to padding.
        let g = Graph::cycle(5);
        let partition = VertexPartition::from_assignment(vec![0, 0, 1, 1, 1], 2).unwrap();
        let sys = SteinerSystem {
            s: 2,
            t: 2,
            k: 2,
            blocks: vec![vec![0, 1]],
        };
        let rep = Representation::by_vertex_addition(&g);
        let composed = compose(&g, &partition, &sys, std::slice::from_ref(&rep)).unwrap();
        assert_eq!(composed.realize(), g);
        assert_eq!(composed.max_locality(), rep.max_locality());
    }

    #[test]
    fn compose_c6_singletons() {
        let g = Graph::cycle(6);
        let partition = VertexPartition::from_assignment((0..6).collect(), 6).unwrap();
        let sys = SteinerSystem::complete_graph_edges(6).unwrap();
        let mut block_reps = Vec::new();
        for block in &sys.blocks {
            let union = partition.union_of(block);
            let (sub, _) = g.induced(&union);
            block_reps.push(Representation::by_vertex_addition(&sub));
        }
        let max_block = block_reps.iter().map(|r| r.max_locality()).max().unwrap();
        let composed = compose(&g, &partition, &sys, &block_reps).unwrap();
        assert_eq!(composed.realize(), g);
        for v in 0..6 {
            assert!(composed.locality_of(v) <= 5 * max_block);
        }
    }

    #[test]
    fn compose_two_triangles() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let partition = VertexPartition::from_assignment(vec![0, 0, 0, 1, 1, 1], 2).unwrap();
        let sys = SteinerSystem {
            s: 2,
            t: 2,
            k: 2,
            blocks: vec![vec![0, 1]],
        };
        let block_reps = vec![Representation::by_vertex_addition(&g)];
        let composed = compose(&g, &partition, &sys, &block_reps).unwrap();
        assert_eq!(composed.realize(), g);
    }

    #[test]
    fn compose_rejects_bad_block_rep() {
        let g = Graph::cycle(6);
        let partition = VertexPartition::from_assignment((0..6).collect(), 6).unwrap();
        let sys = SteinerSystem::complete_graph_edges(6).unwrap();
        let mut block_reps: Vec<Representation> = sys
            .blocks
            .iter()
            .map(|block| {
                let union = partition.union_of(block);
                let (sub, _) = g.induced(&union);
                Representation::by_vertex_addition(&sub)
            })
            .collect();
        block_reps[3] = Representation::complete(2); // wrong graph for a non-edge block
        match compose(&g, &partition, &sys, &block_reps) {
            Err(Error::BadBlockRep { block }) => assert_eq!(block, 3),
            other => panic!("expected block error, got {other:?}"),
        }
    }

    #[test]
    fn balanced_partition_edgeless_and_slack() {
        let g = Graph::empty(10);
        let (partition, sys) = balanced_partition(&g, 2, 1.0, 7).unwrap();
        assert_eq!(partition.num_classes(), 4);
        assert_eq!(sys.blocks.len(), 6);

        // Petersen, q = 2, slack 4: bound (1+4)*3/2 exceeds the maximum
        // degree, so the first sample succeeds.
        let petersen = Graph::petersen();
        let (partition, sys) = balanced_partition(&petersen, 2, 4.0, 1).unwrap();
        let bound = 5.0 * 3.0 / 2.0;
        for block in &sys.blocks {
            let union = partition.union_of(block);
            let (sub, _) = petersen.induced(&union);
            assert!((sub.max_degree() as f64) <= bound);
        }
    }

    #[test]
    fn balanced_partition_deterministic() {
        let g = Graph::petersen();
        let (p1, _) = balanced_partition(&g, 2, 4.0, 99).unwrap();
        let (p2, _) = balanced_partition(&g, 2, 4.0, 99).unwrap();
        assert_eq!(p1, p2);
    }

    #[test]
    fn driver_exact_below_cutoff() {
        let g = Graph::cycle(5);
        let r = lbox_by_degree(&g, &DriverOpts::default()).unwrap();
        assert_eq!(r.rep.realize(), g);
        assert_eq!(r.max_locality, 2);
    }

    #[test]
    fn driver_interval_shortcut() {
        let star = Graph::star(5);
        let opts = DriverOpts {
            exact_cutoff: 2,
            ..DriverOpts::default()
        };
        let r = lbox_by_degree(&star, &opts).unwrap();
        assert_eq!(r.rep.realize(), star);
        assert_eq!(r.max_locality, 1);
    }

    #[test]
    fn driver_refuses_without_strategy() {
        // Too big for exact, degree far below the prime window, no override.
        let mut edges = Vec::new();
        for i in 0..12 {
            edges.push((i, (i + 1) % 12));
            edges.push((i, (i + 2) % 12));
        }
        let g = Graph::from_edges(12, &edges).unwrap();
        let opts = DriverOpts {
            exact_cutoff: 4,
            q_override: None,
            seed: 0,
        };
        assert!(matches!(
            lbox_by_degree(&g, &opts),
            Err(Error::NoStrategy(_))
        ));
    }

    #[test]
    fn edges_driver_cases() {
        // Star: the center is peeled, the rest is edgeless.
        let star = Graph::star(9);
        let r = lbox_by_edges(&star, &DriverOpts::default()).unwrap();
        assert_eq!(r.rep.realize(), star);
        assert!(r.max_locality <= 2);

        // Triangle: every vertex peeled, three added dimensions.
        let k3 = Graph::complete(3);
        let r = lbox_by_edges(&k3, &DriverOpts::default()).unwrap();
        assert_eq!(r.rep.realize(), k3);
        assert_eq!(r.rep.dims(), 3);

        // Edgeless graph.
        let e = Graph::empty(5);
        let r = lbox_by_edges(&e, &DriverOpts::default()).unwrap();
        assert_eq!(r.rep.realize(), e);
    }
}
