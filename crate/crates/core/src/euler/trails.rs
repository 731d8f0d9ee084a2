use super::graph::{reverse_trail, Dir, MultiDigraph, MultiGraph, PartitionSystem, Step, Trail, VertexId};
use crate::error::Result;

fn hierholzer(n: usize, edges: &[(VertexId, VertexId)], start: VertexId) -> Trail {
    let mut adj: Vec<Vec<(usize, Dir, VertexId)>> = vec![Vec::new(); n];
    for (e, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((e, Dir::Forward, b));
        adj[b].push((e, Dir::Backward, a));
    }
    let mut ptr = vec![0; n];
    let mut used = vec![false; edges.len()];
    let mut stack: Vec<(VertexId, Option<Step>)> = vec![(start, None)];
    let mut out = Vec::with_capacity(edges.len());
    while let Some(&(v, _)) = stack.last() {
        while ptr[v] < adj[v].len() && used[adj[v][ptr[v]].0] {
            ptr[v] += 1;
        }
        if let Some(&(e, d, w)) = adj[v].get(ptr[v]) {
            used[e] = true;
            stack.push((w, Some(Step::new(e, d))));
        } else if let Some((_, Some(s))) = stack.pop() {
            out.push(s);
        }
    }
    out.reverse();
    out
}

/// An Eulerian trail, or `None` when the edges are disconnected or more than
/// two vertices have odd degree. Starts at the lower odd vertex if any.
pub fn eulerian_path(g: &MultiGraph) -> Option<Trail> {
    if g.edges.is_empty() {
        return Some(Vec::new());
    }
    if !g.edges_connected() {
        return None;
    }
    let deg = g.degrees();
    let odd: Vec<VertexId> = (0..g.vertex_count).filter(|&v| deg[v] % 2 == 1).collect();
    let start = match odd.len() {
        0 => g.edges[0].0,
        2 => odd[0],
        _ => return None,
    };
    Some(hierholzer(g.vertex_count, &g.edges, start))
}

/// Bipartite double cover: vertex v becomes v⁺ = 2v and v⁻ = 2v + 1, and each
/// edge (u, v) becomes {u⁺, v⁻} with the same id.
pub fn split(g: &MultiDigraph) -> MultiGraph {
    MultiGraph {
        vertex_count: 2 * g.vertex_count,
        edges: g.edges.iter().map(|&(u, v)| (2 * u, 2 * v + 1)).collect(),
    }
}

/// Direction of the first step out of a split-graph vertex: forward from a
/// `+` copy, backward from a `-` copy.
fn side_dir(v: VertexId) -> Dir {
    if v % 2 == 0 {
        Dir::Forward
    } else {
        Dir::Backward
    }
}

fn meets(t: &[Step], start: Option<Dir>, end: Option<Dir>) -> bool {
    let (Some(first), Some(last)) = (t.first(), t.last()) else { return true };
    start.map_or(true, |d| d == first.dir) && end.map_or(true, |d| d == last.dir)
}

/// Picks a trail honoring the endpoint directions from a split-graph trail.
/// A closed trail may be rotated by one step, which swaps its end
/// directions; an open trail may only be reversed.
fn pick(t: Trail, closed: bool, start: Option<Dir>, end: Option<Dir>) -> Option<Trail> {
    let mut candidates = vec![t.clone()];
    if closed && !t.is_empty() {
        let mut r = t[1..].to_vec();
        r.push(t[0]);
        candidates.push(r);
    } else {
        candidates.push(reverse_trail(&t));
    }
    candidates.into_iter().find(|c| meets(c, start, end))
}

/// Antidirected Eulerian trail (consecutive edges alternate between forward
/// and backward traversal) with optional first and last step directions.
pub fn antidirected_eulerian(g: &MultiDigraph, start_dir: Option<Dir>, end_dir: Option<Dir>) -> Option<Trail> {
    let h = split(g);
    let t = eulerian_path(&h)?;
    if t.is_empty() {
        return Some(t);
    }
    let closed = h.step_endpoints(t[0]).0 == h.step_endpoints(t[t.len() - 1]).1;
    debug_assert_eq!(t[0].dir, side_dir(h.step_endpoints(t[0]).0));
    pick(t, closed, start_dir, end_dir)
}

/// Outcome of the forbidden-transition construction: the trail and whether
/// its wrap-around transition is also allowed.
struct FtTrail {
    trail: Trail,
    closed: bool,
}

const VIRTUAL_GROUP: usize = usize::MAX;

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
}

/// Kotzig's pairing-and-merge construction on a graph whose degrees are all
/// even and whose groups all fit in half the degree. Slots are `2e + end`.
/// Returns the transition partner of every slot.
fn kotzig_pairing(n: usize, edges: &[(VertexId, VertexId)], group: &[usize]) -> Vec<usize> {
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(a, b)) in edges.iter().enumerate() {
        at[a].push(2 * e);
        at[b].push(2 * e + 1);
    }
    let mut mate = vec![0; 2 * edges.len()];
    for slots in &mut at {
        slots.sort_by_key(|&s| (group[s], s));
        let half = slots.len() / 2;
        for j in 0..half {
            mate[slots[j]] = slots[j + half];
            mate[slots[j + half]] = slots[j];
        }
    }
    // Split the edges into the cycles the pairing defines.
    let mut cycle = vec![usize::MAX; edges.len()];
    let mut cycles = 0;
    for e0 in 0..edges.len() {
        if cycle[e0] != usize::MAX {
            continue;
        }
        let mut s = 2 * e0;
        loop {
            cycle[s / 2] = cycles;
            s = mate[s ^ 1];
            if s == 2 * e0 {
                break;
            }
        }
        cycles += 1;
    }
    // Merge cycles vertex by vertex in id order.
    let mut uf = UnionFind((0..cycles).collect());
    let mut seen = vec![false; 2 * edges.len()];
    for slots in &at {
        let mut anchor: Option<(usize, usize)> = None;
        for &s in slots {
            if seen[s] {
                continue;
            }
            let t = mate[s];
            seen[s] = true;
            seen[t] = true;
            let Some((a, b)) = anchor else {
                anchor = Some((s, t));
                continue;
            };
            let (ra, rc) = (uf.find(cycle[a / 2]), uf.find(cycle[s / 2]));
            if ra == rc {
                continue;
            }
            let (c, d) = (s, t);
            let keep = if group[a] != group[d] && group[c] != group[b] {
                mate[a] = d;
                mate[d] = a;
                mate[c] = b;
                mate[b] = c;
                d
            } else {
                mate[a] = c;
                mate[c] = a;
                mate[b] = d;
                mate[d] = b;
                c
            };
            uf.0[rc] = ra;
            anchor = Some((a, keep));
        }
    }
    mate
}

/// Follows transitions from leaving slot `start` until arriving at `stop`
/// (or returning to `start` when `stop` is `None`).
fn walk(mate: &[usize], start: usize, stop: Option<usize>, real_edges: usize) -> Trail {
    let mut out = Vec::new();
    let mut s = start;
    loop {
        let step = Step::new(s / 2, if s % 2 == 0 { Dir::Forward } else { Dir::Backward });
        if step.edge < real_edges {
            out.push(step);
        }
        let arrive = s ^ 1;
        if Some(arrive) == stop {
            break;
        }
        s = mate[arrive];
        if stop.is_none() && s == start {
            break;
        }
    }
    out
}

fn ft_core(n: usize, edges: &[(VertexId, VertexId)], groups: &[[usize; 2]], require_cycle: bool) -> Option<FtTrail> {
    if edges.is_empty() {
        return Some(FtTrail { trail: Vec::new(), closed: true });
    }
    let base = MultiGraph { vertex_count: n, edges: edges.to_vec() };
    if !base.edges_connected() {
        return None;
    }
    let deg = base.degrees();
    let odd: Vec<VertexId> = (0..n).filter(|&v| deg[v] % 2 == 1).collect();
    if !(odd.is_empty() || odd.len() == 2 && !require_cycle) {
        return None;
    }
    let m = edges.len();
    let mut work = edges.to_vec();
    let mut group: Vec<usize> = groups.iter().flat_map(|g| g.iter().copied()).collect();
    if odd.len() == 2 {
        work.push((odd[0], odd[1]));
        group.extend([VIRTUAL_GROUP, VIRTUAL_GROUP]);
    }
    // Group sizes against half the (now even) degree.
    let mut sizes: std::collections::HashMap<(VertexId, usize), Vec<usize>> = std::collections::HashMap::new();
    for (e, &(a, b)) in work.iter().enumerate() {
        sizes.entry((a, group[2 * e])).or_default().push(2 * e);
        sizes.entry((b, group[2 * e + 1])).or_default().push(2 * e + 1);
    }
    let mut over: Vec<((VertexId, usize), Vec<usize>)> = sizes
        .into_iter()
        .filter(|((v, _), slots)| slots.len() > (deg[*v] + usize::from(odd.contains(v))) / 2)
        .collect();
    if over.is_empty() {
        let mate = kotzig_pairing(n, &work, &group);
        let trail = if odd.len() == 2 { walk(&mate, mate[2 * m + 1], Some(mate[2 * m]), m) } else { walk(&mate, 0, None, m) };
        return Some(FtTrail { trail, closed: odd.is_empty() });
    }
    // An open trail in an even graph leaves two slots unpaired at its common
    // endpoint, so that endpoint may carry one group of size deg/2 + 1.
    if require_cycle || !odd.is_empty() || over.len() != 1 {
        return None;
    }
    let ((v, _), mut big) = over.pop().expect("one oversized group");
    if big.len() != deg[v] / 2 + 1 {
        return None;
    }
    big.sort_unstable();
    // Ends at v sorted into the components of G - v they lead to; moving both
    // ends of a two-end class away from v would cut it off.
    let mut uf = UnionFind((0..n).collect());
    for &(a, b) in edges {
        if a != v && b != v {
            let (ra, rb) = (uf.find(a), uf.find(b));
            uf.0[ra] = rb;
        }
    }
    let class_of = |uf: &mut UnionFind, s: usize| -> usize {
        let (a, b) = edges[s / 2];
        let other = if s % 2 == 0 { b } else { a };
        if other == v {
            n + s / 2
        } else {
            uf.find(other)
        }
    };
    let mut class_size: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    for (e, &(a, b)) in edges.iter().enumerate() {
        for (end, x) in [(0, a), (1, b)] {
            if x == v {
                *class_size.entry(class_of(&mut uf, 2 * e + end)).or_default() += 1;
            }
        }
    }
    let s1 = big[0];
    let c1 = class_of(&mut uf, s1);
    let s2 = big[1..]
        .iter()
        .copied()
        .find(|&s| !(class_of(&mut uf, s) == c1 && class_size[&c1] == 2) || deg[v] == 2)
        .unwrap_or(big[1]);
    let w = n;
    for s in [s1, s2] {
        let e = s / 2;
        if s % 2 == 0 {
            work[e].0 = w;
        } else {
            work[e].1 = w;
        }
    }
    group[s1] = 0;
    group[s2] = 1;
    let moved = MultiGraph { vertex_count: n + 1, edges: work.clone() };
    if !moved.edges_connected() {
        return None;
    }
    let mate = kotzig_pairing(n + 1, &work, &group);
    Some(FtTrail { trail: walk(&mate, s1, Some(s2), m), closed: false })
}

/// Forbidden-transition Eulerian trail: consecutive edges never share a
/// group at their common vertex (nor do the last and first when
/// `require_cycle`). Rejects partition systems that do not partition the
/// incident edge ends.
pub fn ft_eulerian(g: &MultiGraph, p: &PartitionSystem, require_cycle: bool) -> Result<Option<Trail>> {
    let groups = p.slot_groups(g.vertex_count, &g.edges)?;
    Ok(ft_core(g.vertex_count, &g.edges, &groups, require_cycle).map(|r| r.trail))
}

/// Forbidden-transition antidirected Eulerian trail with optional endpoint
/// directions; groups at v apply at both split copies of v.
pub fn ft_antidirected_eulerian(
    g: &MultiDigraph,
    p: &PartitionSystem,
    start_dir: Option<Dir>,
    end_dir: Option<Dir>,
) -> Result<Option<Trail>> {
    let groups = p.slot_groups(g.vertex_count, &g.edges)?;
    let h = split(g);
    let Some(r) = ft_core(h.vertex_count, &h.edges, &groups, false) else { return Ok(None) };
    if r.trail.is_empty() {
        return Ok(Some(r.trail));
    }
    Ok(pick(r.trail, r.closed, start_dir, end_dir))
}
