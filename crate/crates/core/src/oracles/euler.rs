use crate::error::{Error, Result};
use crate::euler::{AnyGraph, Dir, End, PartitionSystem, Step, Trail, VertexId};

#[derive(Debug, Clone, Copy)]
pub enum EulerMode<'a> {
    Plain,
    Antidirected,
    ForbiddenTransition(&'a PartitionSystem),
    FtAntidirected(&'a PartitionSystem),
}

/// What counts as a valid trail: closed trails also check the transition from
/// the last step back to the first; direction constraints apply to the first
/// and last steps.
#[derive(Debug, Clone, Copy)]
pub struct EulerQuery<'a> {
    pub mode: EulerMode<'a>,
    pub closed: bool,
    pub start_dir: Option<Dir>,
    pub end_dir: Option<Dir>,
}

impl<'a> EulerQuery<'a> {
    pub fn paths(mode: EulerMode<'a>) -> EulerQuery<'a> {
        EulerQuery { mode, closed: false, start_dir: None, end_dir: None }
    }
}

struct Search<'a> {
    edges: &'a [(VertexId, VertexId)],
    directed: bool,
    q: EulerQuery<'a>,
    groups: Option<Vec<[usize; 2]>>,
    alternate: bool,
    used: Vec<bool>,
    trail: Trail,
    count: u64,
    limit: Option<u64>,
    first: Option<Trail>,
}

fn end_index(e: End) -> usize {
    match e {
        End::First => 0,
        End::Second => 1,
    }
}

impl Search<'_> {
    fn from_to(&self, s: Step) -> (VertexId, VertexId) {
        let (a, b) = self.edges[s.edge];
        match s.dir {
            Dir::Forward => (a, b),
            Dir::Backward => (b, a),
        }
    }

    /// Whether `next` may follow `prev` at their shared vertex.
    fn transition_ok(&self, prev: Step, next: Step) -> bool {
        if self.from_to(prev).1 != self.from_to(next).0 {
            return false;
        }
        if self.alternate && prev.dir == next.dir {
            return false;
        }
        if let Some(g) = &self.groups {
            let arrive = end_index(prev.ends().1);
            let leave = end_index(next.ends().0);
            if g[prev.edge][arrive] == g[next.edge][leave] {
                return false;
            }
        }
        true
    }

    fn dirs(&self) -> &'static [Dir] {
        if self.directed && !self.alternate {
            &[Dir::Forward]
        } else {
            &[Dir::Forward, Dir::Backward]
        }
    }

    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.count >= l)
    }

    fn run(&mut self) -> Result<()> {
        if self.trail.len() == self.edges.len() {
            let last = *self.trail.last().expect("nonempty");
            let first = self.trail[0];
            if self.q.end_dir.is_some_and(|d| d != last.dir) {
                return Ok(());
            }
            if self.q.closed && !self.transition_ok(last, first) {
                return Ok(());
            }
            self.count = self.count.checked_add(1).ok_or(Error::Overflow)?;
            if self.first.is_none() {
                self.first = Some(self.trail.clone());
            }
            return Ok(());
        }
        for e in 0..self.edges.len() {
            if self.used[e] {
                continue;
            }
            for &d in self.dirs() {
                let step = Step::new(e, d);
                let ok = match self.trail.last() {
                    Some(&prev) => self.transition_ok(prev, step),
                    None => self.q.start_dir.map_or(true, |sd| sd == d),
                };
                if !ok {
                    continue;
                }
                self.used[e] = true;
                self.trail.push(step);
                self.run()?;
                self.trail.pop();
                self.used[e] = false;
                if self.done() {
                    return Ok(());
                }
            }
        }
        Ok(())
    }
}

fn search(g: AnyGraph, q: EulerQuery, limit: Option<u64>) -> Result<(u64, Option<Trail>)> {
    let (alternate, part) = match q.mode {
        EulerMode::Plain => (false, None),
        EulerMode::Antidirected => (true, None),
        EulerMode::ForbiddenTransition(p) => (false, Some(p)),
        EulerMode::FtAntidirected(p) => (true, Some(p)),
    };
    if alternate && !g.directed() {
        return Err(Error::Precondition("antidirected trails need a directed graph".into()));
    }
    let groups = part.map(|p| p.slot_groups(g.vertex_count(), g.edges())).transpose()?;
    if g.edges().is_empty() {
        return Ok((1, Some(Vec::new())));
    }
    let mut s = Search {
        edges: g.edges(),
        directed: g.directed(),
        q,
        groups,
        alternate,
        used: vec![false; g.edges().len()],
        trail: Vec::new(),
        count: 0,
        limit,
        first: None,
    };
    s.run()?;
    Ok((s.count, s.first))
}

/// Counts Eulerian trails as directed step sequences: an undirected trail and
/// its reverse count twice, and a closed trail counts once per starting step.
/// The empty graph has one (empty) trail.
pub fn count_euler(g: AnyGraph, q: EulerQuery) -> Result<u64> {
    search(g, q, None).map(|r| r.0)
}

/// Plain, antidirected or forbidden-transition Eulerian path count, with no
/// endpoint constraints.
pub fn count_euler_paths(g: AnyGraph, mode: EulerMode) -> Result<u64> {
    count_euler(g, EulerQuery::paths(mode))
}

/// First trail in canonical order satisfying the query, if any.
pub fn find_euler(g: AnyGraph, q: EulerQuery) -> Result<Option<Trail>> {
    search(g, q, Some(1)).map(|r| r.1)
}

/// Step-by-step check of a trail against a query: every edge exactly once,
/// consecutive steps joined, transitions allowed, endpoint directions met.
pub fn trail_satisfies(g: AnyGraph, trail: &[Step], q: EulerQuery) -> Result<bool> {
    let (alternate, part) = match q.mode {
        EulerMode::Plain => (false, None),
        EulerMode::Antidirected => (true, None),
        EulerMode::ForbiddenTransition(p) => (false, Some(p)),
        EulerMode::FtAntidirected(p) => (true, Some(p)),
    };
    let groups = part.map(|p| p.slot_groups(g.vertex_count(), g.edges())).transpose()?;
    let s = Search {
        edges: g.edges(),
        directed: g.directed(),
        q,
        groups,
        alternate,
        used: Vec::new(),
        trail: Vec::new(),
        count: 0,
        limit: None,
        first: None,
    };
    let mut seen = vec![false; g.edges().len()];
    for st in trail {
        if st.edge >= seen.len() || std::mem::replace(&mut seen[st.edge], true) {
            return Ok(false);
        }
        if g.directed() && !alternate && st.dir == Dir::Backward {
            return Ok(false);
        }
    }
    if seen.iter().any(|&x| !x) {
        return Ok(false);
    }
    if trail.windows(2).any(|w| !s.transition_ok(w[0], w[1])) {
        return Ok(false);
    }
    let (Some(&first), Some(&last)) = (trail.first(), trail.last()) else { return Ok(true) };
    if q.closed && !s.transition_ok(last, first) {
        return Ok(false);
    }
    Ok(q.start_dir.map_or(true, |d| d == first.dir) && q.end_dir.map_or(true, |d| d == last.dir))
}
