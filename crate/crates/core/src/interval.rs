//! Interval graph machinery: recognition with certificates, co-interval
//! checks, interval models of complements of shallow trees, greedy optimal
//! coloring of interval models, and constructive 2-dimensional box layouts
//! for forests and graphs without multicyclic components.

use alloc::vec;
use alloc::vec::Vec;

use crate::boxrep::{LocalBox, Representation};
use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

/// One bounded interval per vertex; the intersection graph of the intervals
/// is the modelled graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalModel {
    intervals: Vec<(i64, i64)>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<(i64, i64)>) -> Result<Self> {
        for &(lo, hi) in &intervals {
            if lo > hi {
                return Err(Error::BadInterval { lo, hi });
            }
        }
        Ok(IntervalModel { intervals })
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn interval(&self, v: usize) -> (i64, i64) {
        self.intervals[v]
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    /// The intersection graph of the intervals.
    pub fn realize(&self) -> Graph {
        let n = self.intervals.len();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                let (a, b) = self.intervals[u];
                let (c, d) = self.intervals[v];
                if a <= d && c <= b {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
        g
    }

    /// Checks the model against `g`, naming the first disagreeing pair.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::VertexCountMismatch {
                expected: g.n(),
                got: self.n(),
            });
        }
        for u in 0..g.n() {
            for v in (u + 1)..g.n() {
                let (a, b) = self.intervals[u];
                let (c, d) = self.intervals[v];
                let meets = a <= d && c <= b;
                if meets != g.has_edge(u, v) {
                    return Err(Error::BadIntervalModel { u, v });
                }
            }
        }
        Ok(())
    }

    /// Embeds the model as a 1-dimensional representation (every vertex
    /// 1-local).
    pub fn to_representation(&self) -> Representation {
        let boxes = self
            .intervals
            .iter()
            .map(|&(lo, hi)| LocalBox::from_triples(&[(0, lo, hi)]).expect("valid interval"))
            .collect();
        Representation::new(self.n(), 1, boxes).expect("single dimension")
    }
}

/// Witness that a graph is not an interval graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// An induced cycle of length at least 4 (vertex sequence).
    ChordlessCycle(Vec<usize>),
    /// Three pairwise non-adjacent vertices such that any two are joined by
    /// a path avoiding the closed neighborhood of the third.
    AsteroidalTriple(usize, usize, usize),
}

/// Outcome of interval recognition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalCheck {
    Interval(IntervalModel),
    NotInterval(Obstruction),
}

impl IntervalCheck {
    pub fn is_interval(&self) -> bool {
        matches!(self, IntervalCheck::Interval(_))
    }

    pub fn model(self) -> Option<IntervalModel> {
        match self {
            IntervalCheck::Interval(m) => Some(m),
            IntervalCheck::NotInterval(_) => None,
        }
    }
}

/// Recognizes interval graphs exactly: chordal and asteroidal-triple-free,
/// with a model on yes instances and a named obstruction otherwise.
pub fn is_interval(g: &Graph) -> IntervalCheck {
    if let Some(cycle) = find_chordless_cycle(g) {
        return IntervalCheck::NotInterval(Obstruction::ChordlessCycle(cycle));
    }
    if let Some((a, b, c)) = find_asteroidal_triple(g) {
        return IntervalCheck::NotInterval(Obstruction::AsteroidalTriple(a, b, c));
    }
    let model = build_model(g).expect("chordal AT-free graphs are interval graphs");
    debug_assert!(model.validate(g).is_ok());
    IntervalCheck::Interval(model)
}

/// Builds an interval model of a known-interval graph: per connected
/// component, arrange its maximal cliques consecutively and give each
/// vertex the index range of the cliques containing it; components occupy
/// disjoint ranges.
fn build_model(g: &Graph) -> Option<IntervalModel> {
    let n = g.n();
    let mut intervals = vec![(0i64, 0i64); n];
    let mut offset = 0i64;
    for comp in g.components() {
        let (sub, verts) = g.induced(&comp);
        let cliques = maximal_cliques_chordal(&sub);
        let path = clique_path(&sub, &cliques)?;
        for (local, &orig) in verts.iter().enumerate() {
            let first = path.iter().position(|ci| cliques[*ci].contains(&local))?;
            let last = path.iter().rposition(|ci| cliques[*ci].contains(&local))?;
            intervals[orig] = (offset + first as i64, offset + last as i64);
        }
        offset += path.len() as i64 + 1;
    }
    IntervalModel::new(intervals).ok()
}

/// Maximal cliques of a chordal graph from a perfect elimination order:
/// every maximal clique is some vertex together with its later neighbors.
fn maximal_cliques_chordal(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    // Maximum cardinality search for the elimination order.
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))
            .expect("unvisited vertex exists");
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v).iter() {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order.reverse();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(n);
    for (i, &v) in order.iter().enumerate() {
        let mut clique: Vec<usize> = g.neighbors(v).iter().filter(|&w| pos[w] > i).collect();
        clique.push(v);
        clique.sort_unstable();
        candidates.push(clique);
    }
    // Keep only set-maximal candidates.
    let mut maximal = Vec::new();
    'outer: for (i, c) in candidates.iter().enumerate() {
        for (j, d) in candidates.iter().enumerate() {
            if i != j && c.len() <= d.len() && c.iter().all(|x| d.contains(x)) && c != d {
                continue 'outer;
            }
        }
        if !maximal.contains(c) {
            maximal.push(c.clone());
        }
    }
    maximal
}

/// Arranges the maximal cliques of a connected interval graph in a line so
/// that the cliques containing any vertex are consecutive. Backtracking
/// with two complete prunes: a vertex whose run has closed never reappears,
/// and consecutive cliques overlap.
fn clique_path(g: &Graph, cliques: &[Vec<usize>]) -> Option<Vec<usize>> {
    let k = cliques.len();
    if k == 0 {
        return Some(Vec::new());
    }
    let n = g.n();
    let mut path: Vec<usize> = Vec::with_capacity(k);
    let mut used = vec![false; k];
    // 0 = unseen, 1 = open (in the previous clique), 2 = closed.
    let mut state = vec![0u8; n];
    fn rec(
        cliques: &[Vec<usize>],
        path: &mut Vec<usize>,
        used: &mut [bool],
        state: &mut [u8],
    ) -> bool {
        let k = cliques.len();
        if path.len() == k {
            return true;
        }
        'cand: for c in 0..k {
            if used[c] {
                continue;
            }
            let clique = &cliques[c];
            if !path.is_empty() {
                // Must overlap the previous clique and reopen nothing.
                if !clique.iter().any(|&x| state[x] == 1) {
                    continue;
                }
                if clique.iter().any(|&x| state[x] == 2) {
                    continue 'cand;
                }
            }
            // Apply: members become open, previous open non-members close.
            let prev_open: Vec<usize> = (0..state.len()).filter(|&x| state[x] == 1).collect();
            let mut changed = Vec::new();
            for &x in &prev_open {
                if !clique.contains(&x) {
                    state[x] = 2;
                    changed.push((x, 1u8));
                }
            }
            let mut opened = Vec::new();
            for &x in clique {
                if state[x] == 0 {
                    state[x] = 1;
                    opened.push(x);
                }
            }
            used[c] = true;
            path.push(c);
            if rec(cliques, path, used, state) {
                return true;
            }
            path.pop();
            used[c] = false;
            for x in opened {
                state[x] = 0;
            }
            for (x, s) in changed {
                state[x] = s;
            }
            continue 'cand;
        }
        false
    }
    if rec(cliques, &mut path, &mut used, &mut state) {
        Some(path)
    } else {
        None
    }
}

/// True iff the complement of `g` restricted to `g`'s non-isolated vertices
/// is an interval graph. Edgeless graphs count as co-interval.
pub fn is_cointerval(g: &Graph) -> bool {
    let support: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    if support.is_empty() {
        return true;
    }
    let (sub, _) = g.induced(&support);
    is_interval(&sub.complement()).is_interval()
}

/// Chordality test by maximum cardinality search; on failure extracts an
/// induced cycle of length at least 4.
fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    // MCS: repeatedly take an unvisited vertex with the most visited
    // neighbors; reversing the visit order gives a perfect elimination
    // order exactly when the graph is chordal.
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))
            .expect("unvisited vertex exists");
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v).iter() {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order.reverse(); // elimination order
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for (i, &v) in order.iter().enumerate() {
        // Later neighbors of v in elimination order must form a clique with
        // their earliest member.
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&w| pos[w] > i).collect();
        if let Some(&u) = later.iter().min_by_key(|&&w| pos[w]) {
            for &w in &later {
                if w != u && !g.has_edge(u, w) {
                    return Some(extract_cycle(g));
                }
            }
        }
    }
    None
}

/// Finds some induced cycle of length >= 4; called only when one exists.
fn extract_cycle(g: &Graph) -> Vec<usize> {
    let n = g.n();
    for v in 0..n {
        let nbrs: Vec<usize> = g.neighbors(v).iter().collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                // Shortest u-w path whose interior avoids N[v]; with v it
                // closes an induced cycle of length >= 4.
                if let Some(path) = shortest_path_avoiding(g, u, w, v) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return cycle;
                }
            }
        }
    }
    unreachable!("caller guarantees a chordless cycle exists")
}

/// Shortest path from `u` to `w` whose interior vertices avoid the closed
/// neighborhood of `v` (endpoints excepted); `None` if none exists.
fn shortest_path_avoiding(g: &Graph, u: usize, w: usize, v: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for x in g.neighbors(v).iter() {
        blocked[x] = true;
    }
    blocked[u] = false;
    blocked[w] = false;
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[u] = true;
    let mut queue = vec![u];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        if x == w {
            let mut path = vec![w];
            let mut cur = w;
            while cur != u {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            // Interior must be induced: a shortest path has no shortcuts,
            // but may still touch chords between non-consecutive vertices of
            // equal BFS layers; re-check and fail closed if not induced.
            for i in 0..path.len() {
                for j in (i + 2)..path.len() {
                    if g.has_edge(path[i], path[j]) {
                        return None;
                    }
                }
            }
            return Some(path);
        }
        for y in g.neighbors(x).iter() {
            if !seen[y] && !blocked[y] {
                seen[y] = true;
                prev[y] = x;
                queue.push(y);
            }
        }
    }
    None
}

/// Scans for an asteroidal triple.
#[allow(clippy::needless_range_loop)] // comp[w] rows are built in place
fn find_asteroidal_triple(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    // comp[w][x] = component label of x in G - N[w], or MAX inside N[w].
    let mut comp = vec![vec![usize::MAX; n]; n];
    for w in 0..n {
        let mut label = 0usize;
        for s in 0..n {
            if comp[w][s] != usize::MAX || s == w || g.has_edge(s, w) {
                continue;
            }
            let mut stack = vec![s];
            comp[w][s] = label;
            while let Some(x) = stack.pop() {
                for y in g.neighbors(x).iter() {
                    if y != w && !g.has_edge(y, w) && comp[w][y] == usize::MAX {
                        comp[w][y] = label;
                        stack.push(y);
                    }
                }
            }
            label += 1;
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in (b + 1)..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if comp[c][a] == comp[c][b] && comp[b][a] == comp[b][c] && comp[a][b] == comp[a][c]
                {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Interval model of the complement of a tree of diameter at most 3:
/// the two centers map to `{0}` and `{2}`, their leaves to `[1, 2]` and
/// `[0, 1]` respectively.
pub fn diam3_cointerval(t: &Graph) -> Result<IntervalModel> {
    let n = t.n();
    if n < 2 || t.m() != n - 1 || !t.is_connected() {
        return Err(Error::NotATree);
    }
    let internal: Vec<usize> = (0..n).filter(|&v| t.degree(v) >= 2).collect();
    let (u, v) = match internal.len() {
        0 => {
            // A single edge.
            let e = t.edges()[0];
            (e.0, e.1)
        }
        1 => {
            // A star: the center plus its lowest leaf.
            let c = internal[0];
            let leaf = t.neighbors(c).iter().next().expect("star has leaves");
            (c, leaf)
        }
        2 => {
            let (a, b) = (internal[0], internal[1]);
            if !t.has_edge(a, b) {
                // Two internal vertices not adjacent: some path of length 4.
                return Err(Error::DiameterTooLarge {
                    diameter: tree_diameter(t),
                });
            }
            (a, b)
        }
        _ => {
            return Err(Error::DiameterTooLarge {
                diameter: tree_diameter(t),
            })
        }
    };
    let mut intervals = vec![(0i64, 0i64); n];
    intervals[u] = (0, 0);
    intervals[v] = (2, 2);
    #[allow(clippy::needless_range_loop)] // x names a vertex, not a slot
    for x in 0..n {
        if x == u || x == v {
            continue;
        }
        if t.has_edge(x, u) {
            intervals[x] = (1, 2);
        } else if t.has_edge(x, v) {
            intervals[x] = (0, 1);
        } else {
            return Err(Error::DiameterTooLarge {
                diameter: tree_diameter(t),
            });
        }
    }
    let model = IntervalModel::new(intervals)?;
    model.validate(&t.complement())?;
    Ok(model)
}

/// Diameter of a tree via two BFS sweeps.
fn tree_diameter(t: &Graph) -> usize {
    fn far(t: &Graph, s: usize) -> (usize, usize) {
        let mut dist = vec![usize::MAX; t.n()];
        dist[s] = 0;
        let mut queue = vec![s];
        let mut head = 0;
        let mut best = (s, 0);
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            if dist[v] > best.1 {
                best = (v, dist[v]);
            }
            for w in t.neighbors(v).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push(w);
                }
            }
        }
        best
    }
    if t.n() == 0 {
        return 0;
    }
    let (far1, _) = far(t, 0);
    far(t, far1).1
}

/// Greedy left-endpoint coloring of a validated interval model: uses exactly
/// as many colors as the clique number of the modelled graph.
pub fn interval_color(g: &Graph, model: &IntervalModel) -> Result<Vec<usize>> {
    model.validate(g)?;
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (model.interval(v).0, v));
    let mut colors = vec![usize::MAX; n];
    for &v in &order {
        let mut used: Vec<bool> = vec![false; n];
        for u in g.neighbors(v).iter() {
            if colors[u] != usize::MAX {
                used[colors[u]] = true;
            }
        }
        colors[v] = used.iter().position(|&b| !b).expect("n colors suffice");
    }
    Ok(colors)
}

/// 2-dimensional fully-local representation of a forest: dimension 0 nests
/// rooted-DFS ranges `[pre, post]`, dimension 1 stacks depth layers
/// `[depth, depth+1]`; adjacency is nesting plus depth difference one.
pub fn tree_two_box(t: &Graph) -> Result<Representation> {
    if !t.is_forest() {
        return Err(Error::NotAForest);
    }
    let n = t.n();
    let mut boxes = vec![LocalBox::all(); n];
    let mut clock = 0i64;
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        layout_tree(t, root, usize::MAX, 0, &mut clock, &mut seen, &mut boxes)?;
    }
    Representation::new(n, 2, boxes)
}

/// DFS layout of one tree: `[pre, post]` in dimension 0 and
/// `[depth, depth+1]` in dimension 1. Children are visited in ascending
/// order.
fn layout_tree(
    t: &Graph,
    v: usize,
    parent: usize,
    depth: i64,
    clock: &mut i64,
    seen: &mut [bool],
    boxes: &mut [LocalBox],
) -> Result<()> {
    seen[v] = true;
    let pre = *clock;
    *clock += 1;
    for w in t.neighbors(v).iter() {
        if w != parent {
            layout_tree(t, w, v, depth + 1, clock, seen, boxes)?;
        }
    }
    let post = *clock;
    *clock += 1;
    boxes[v].set(0, pre, post)?;
    boxes[v].set(1, depth, depth + 1)?;
    Ok(())
}

/// 2-dimensional representation of a graph in which every connected
/// component has at most one cycle. Tree components use the nesting-by-depth
/// layout; unicyclic components use an explicit ring layout with hanging
/// subtrees placed in exclusive patches of their cycle vertex. Components
/// occupy disjoint ranges in dimension 0.
pub fn sparse_two_box(g: &Graph) -> Result<Representation> {
    let census = g.cycle_census();
    for (comp, excess) in &census {
        if *excess > 1 {
            return Err(Error::MulticyclicComponent {
                component_vertex: comp[0],
            });
        }
    }
    let n = g.n();
    let mut boxes = vec![LocalBox::all(); n];
    let mut x_offset = 0i64;
    for (comp, excess) in &census {
        let (sub, verts) = g.induced(comp);
        let local = if *excess <= 0 {
            tree_component_boxes(&sub)?
        } else {
            unicyclic_component_boxes(&sub)?
        };
        let mut max_x = x_offset;
        for (i, (bx, by)) in local.into_iter().enumerate() {
            let v = verts[i];
            boxes[v].set(0, bx.0 + x_offset, bx.1 + x_offset)?;
            boxes[v].set(1, by.0, by.1)?;
            max_x = max_x.max(bx.1 + x_offset);
        }
        x_offset = max_x + 1;
    }
    let rep = Representation::new(n, 2, boxes)?;
    debug_assert_eq!(rep.realize(), *g);
    Ok(rep)
}

/// `((x_lo, x_hi), (y_lo, y_hi))` per vertex.
type Rects = Vec<((i64, i64), (i64, i64))>;

/// Per-vertex boxes for a single tree.
fn tree_component_boxes(t: &Graph) -> Result<Rects> {
    let rep = tree_two_box(t)?;
    Ok(collect_boxes(&rep))
}

fn collect_boxes(rep: &Representation) -> Rects {
    rep.boxes()
        .iter()
        .map(|b| {
            let x = match b.get(0) {
                crate::boxrep::IntervalSpec::Bounded(lo, hi) => (lo, hi),
                crate::boxrep::IntervalSpec::All => (0, 0),
            };
            let y = match b.get(1) {
                crate::boxrep::IntervalSpec::Bounded(lo, hi) => (lo, hi),
                crate::boxrep::IntervalSpec::All => (0, 0),
            };
            (x, y)
        })
        .collect()
}

/// Ring layout for a connected graph with exactly one cycle.
///
/// Cycle vertices get long flat boxes forming a ring; the subtree hanging at
/// each cycle vertex is laid out inside an interior slice of that vertex's
/// box (exclusive in dimension 0) and climbs away from the ring in dimension
/// 1, one depth layer per step.
fn unicyclic_component_boxes(g: &Graph) -> Result<Rects> {
    let n = g.n();
    let cycle = find_unique_cycle(g);
    let k = cycle.len();
    let s = 2 * (n as i64) + 16; // patch scale: room for any hanging forest
    let mut bx = vec![(0i64, 0i64); n];
    let mut by = vec![(0i64, 0i64); n];

    // Ring boxes.
    if k == 3 {
        bx[cycle[0]] = (0, 3 * s);
        by[cycle[0]] = (0, s);
        bx[cycle[1]] = (2 * s, 5 * s);
        by[cycle[1]] = (0, s);
        bx[cycle[2]] = (2 * s + 4, 3 * s - 4);
        by[cycle[2]] = (-s, 2 * s);
    } else {
        for (i, &c) in cycle.iter().enumerate() {
            let i = i as i64;
            if (i as usize) < k - 1 {
                bx[c] = (i * s, (i + 1) * s);
            }
        }
        bx[cycle[k - 1]] = (0, k as i64 * s);
        by[cycle[0]] = (0, 2 * s);
        for &c in &cycle[1..k - 2] {
            by[c] = (2 * s, 3 * s);
        }
        by[cycle[k - 2]] = (0, 2 * s);
        by[cycle[k - 1]] = (0, s);
    }

    // Exclusive patch (x-range) and stacking base (top of y-range) per
    // cycle position.
    let patch_of = |i: usize| -> (i64, i64) {
        if k == 3 {
            match i {
                0 => (2, 2 * s - 2),
                1 => (3 * s + 2, 5 * s - 2),
                _ => (2 * s + 6, 3 * s - 6),
            }
        } else if i == k - 1 {
            ((k as i64 - 1) * s + 2, k as i64 * s - 2)
        } else {
            (i as i64 * s + 2, (i as i64 + 1) * s - 2)
        }
    };

    let mut on_cycle = vec![false; n];
    for &c in &cycle {
        on_cycle[c] = true;
    }

    for (i, &c) in cycle.iter().enumerate() {
        let (plo, phi) = patch_of(i);
        let top = by[c].1;
        // DFS over the hanging forest at c.
        let mut clock = plo;
        for w in g.neighbors(c).iter() {
            if !on_cycle[w] {
                layout_hanging(g, w, c, 1, top, s, &mut clock, &mut bx, &mut by, &on_cycle)?;
            }
        }
        if clock > phi {
            return Err(Error::BadParameter(alloc::format!(
                "patch overflow laying out component (clock {clock} > {phi})"
            )));
        }
    }

    Ok((0..n).map(|v| (bx[v], by[v])).collect())
}

#[allow(clippy::too_many_arguments)]
fn layout_hanging(
    g: &Graph,
    v: usize,
    parent: usize,
    depth: i64,
    top: i64,
    s: i64,
    clock: &mut i64,
    bx: &mut [(i64, i64)],
    by: &mut [(i64, i64)],
    on_cycle: &[bool],
) -> Result<()> {
    let pre = *clock;
    *clock += 1;
    for w in g.neighbors(v).iter() {
        if w != parent && !on_cycle[w] {
            layout_hanging(g, w, v, depth + 1, top, s, clock, bx, by, on_cycle)?;
        }
    }
    let post = *clock;
    *clock += 1;
    bx[v] = (pre, post);
    by[v] = (top + (depth - 1) * s, top + depth * s);
    Ok(())
}

/// The unique cycle of a connected unicyclic graph, as a vertex sequence
/// starting at its lowest vertex and moving toward its lower neighbor.
fn find_unique_cycle(g: &Graph) -> Vec<usize> {
    let n = g.n();
    // Repeatedly strip leaves; what remains is the cycle.
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] || deg[v] > 1 {
            continue;
        }
        removed[v] = true;
        for w in g.neighbors(v).iter() {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let start = (0..n)
        .find(|&v| !removed[v])
        .expect("unicyclic component has a cycle");
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .filter(|&w| !removed[w] && w != prev)
            .min()
            .expect("cycle continues");
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
    cycle
}
