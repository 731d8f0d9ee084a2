use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use super::board::{Acute, BoardSpec, FreeCell, Instance, Placement, Points, Solution};
use super::label::{compatible, Axis, Label};
use super::tile::{orient, Corner, LegPlacement, Orientation, TileId, View};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Index(usize),
    Grid { row: usize, col: usize },
    At { x: i32, y: i32 },
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Index(i) => write!(f, "cell {i}"),
            Cell::Grid { row, col } => write!(f, "cell ({row},{col})"),
            Cell::At { x, y } => write!(f, "cell at x={x} y={y}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundarySide {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structural {
    CapacityMismatch { expected: usize, found: usize },
    UnknownTile(TileId),
    DuplicateTile(TileId),
    MissingTile(TileId),
    WrongSolutionShape,
    OverlappingCell { x: i32, y: i32 },
    Instance(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Contact { a: Cell, b: Cell, left: Label, right: Label },
    Boundary { side: BoundarySide, cell: Cell, boundary: Label, facing: Label },
    Orientation { cell: Cell, reason: String },
    Disconnected,
    RootMisplaced,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    Structural(Structural),
    Violation(Violation),
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Ok => write!(f, "ok"),
            Verdict::Structural(s) => match s {
                Structural::CapacityMismatch { expected, found } => {
                    write!(f, "structural: {found} placements for {expected} cells")
                }
                Structural::UnknownTile(t) => write!(f, "structural: unknown tile {t}"),
                Structural::DuplicateTile(t) => write!(f, "structural: tile {t} used twice"),
                Structural::MissingTile(t) => write!(f, "structural: tile {t} unused"),
                Structural::WrongSolutionShape => write!(f, "structural: solution shape does not match board"),
                Structural::OverlappingCell { x, y } => write!(f, "structural: two tiles at x={x} y={y}"),
                Structural::Instance(msg) => write!(f, "structural: {msg}"),
            },
            Verdict::Violation(v) => match v {
                Violation::Contact { a, b, left, right } => {
                    write!(f, "violation: contact {a} / {b} has {left} against {right}")
                }
                Violation::Boundary { side, cell, boundary, facing } => {
                    write!(f, "violation: {side:?} boundary {boundary} against {facing} on {cell}")
                }
                Violation::Orientation { cell, reason } => write!(f, "violation: {cell}: {reason}"),
                Violation::Disconnected => write!(f, "violation: placed tiles are not edge-connected"),
                Violation::RootMisplaced => write!(f, "violation: root tile not at origin in its orientation"),
            },
        }
    }
}

type Check = std::result::Result<(), Verdict>;

fn structural(s: Structural) -> Verdict {
    Verdict::Structural(s)
}

fn check_contact(inst: &Instance, a: Cell, b: Cell, left: Option<Label>, right: Option<Label>, axis: Axis) -> Check {
    let (Some(l), Some(r)) = (left, right) else {
        return Err(Verdict::Violation(Violation::Orientation {
            cell: a,
            reason: "placed shape leaves no side facing its neighbour".into(),
        }));
    };
    match compatible(l, r, inst.rule, axis) {
        Ok(true) => Ok(()),
        Ok(false) => Err(Verdict::Violation(Violation::Contact { a, b, left: l, right: r })),
        Err(e) => Err(structural(Structural::Instance(e.to_string()))),
    }
}

fn check_boundary(inst: &Instance, side: BoundarySide, cell: Cell, boundary: Option<Label>, facing: Option<Label>) -> Check {
    let Some(bl) = boundary else { return Ok(()) };
    let facing = facing.expect("strip cells always expose a side toward the boundary");
    let ok = match side {
        BoundarySide::Left => compatible(bl, facing, inst.rule, Axis::Horizontal),
        BoundarySide::Right => compatible(facing, bl, inst.rule, Axis::Horizontal),
    };
    match ok {
        Ok(true) => Ok(()),
        Ok(false) => Err(Verdict::Violation(Violation::Boundary { side, cell, boundary: bl, facing })),
        Err(e) => Err(structural(Structural::Instance(e.to_string()))),
    }
}

/// Maps every placement to its view, checking tile usage.
fn views(inst: &Instance, placements: &[Placement]) -> std::result::Result<Vec<View>, Verdict> {
    let by_id: HashMap<TileId, usize> = inst.tiles.iter().enumerate().map(|(i, t)| (t.id(), i)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(placements.len());
    for (i, p) in placements.iter().enumerate() {
        let Some(&k) = by_id.get(&p.tile) else {
            return Err(structural(Structural::UnknownTile(p.tile)));
        };
        if !seen.insert(p.tile) {
            return Err(structural(Structural::DuplicateTile(p.tile)));
        }
        match orient(&inst.tiles[k], p.orient, inst.allow_reflection) {
            Ok(v) => out.push(v),
            Err(e) => {
                return Err(Verdict::Violation(Violation::Orientation { cell: Cell::Index(i), reason: e.to_string() }))
            }
        }
    }
    if let Some(t) = inst.tiles.iter().find(|t| !seen.contains(&t.id())) {
        return Err(structural(Structural::MissingTile(t.id())));
    }
    Ok(out)
}

fn shape_error(i: usize, reason: &str) -> Verdict {
    Verdict::Violation(Violation::Orientation { cell: Cell::Index(i), reason: reason.into() })
}

/// Checks the geometric placement rule of cell `i` for triangle boards.
fn check_shape(board: &BoardSpec, i: usize, o: Orientation, prev: Option<Orientation>) -> Check {
    match *board {
        BoardSpec::EqTriStrip { first_points, .. } => {
            let want_up = (i % 2 == 0) == (first_points == Points::Up);
            match o {
                Orientation::EqTri { up, .. } if up == want_up => Ok(()),
                _ => Err(shape_error(i, if want_up { "cell must point up" } else { "cell must point down" })),
            }
        }
        BoardSpec::LegStrip { left_acute, .. } => {
            let want_down = (i % 2 == 0) == (left_acute == Acute::Bottom);
            let want = if want_down { LegPlacement::HypDown } else { LegPlacement::HypUp };
            if o == Orientation::Leg(want) {
                Ok(())
            } else {
                Err(shape_error(i, "leg-contact placements must alternate from the left slant"))
            }
        }
        BoardSpec::HypStrip { .. } => {
            let ok = match (i % 2, o, prev) {
                (0, Orientation::Hyp(Corner::Bl | Corner::Tl), _) => true,
                (1, Orientation::Hyp(Corner::Tr), Some(Orientation::Hyp(Corner::Bl))) => true,
                (1, Orientation::Hyp(Corner::Br), Some(Orientation::Hyp(Corner::Tl))) => true,
                _ => false,
            };
            if ok {
                Ok(())
            } else {
                Err(shape_error(i, "triangles must pair into squares along their hypotenuses"))
            }
        }
        _ => match o {
            Orientation::Square { .. } => Ok(()),
            _ => Err(shape_error(i, "square cell needs a square orientation")),
        },
    }
}

fn verify_row(inst: &Instance, placements: &[Placement]) -> Check {
    let vs = views(inst, placements)?;
    for (i, p) in placements.iter().enumerate() {
        let prev = if i > 0 { Some(placements[i - 1].orient) } else { None };
        check_shape(&inst.board, i, p.orient, prev)?;
    }
    for i in 1..vs.len() {
        check_contact(inst, Cell::Index(i - 1), Cell::Index(i), vs[i - 1].e, vs[i].w, Axis::Horizontal)?;
    }
    let (left, right) = match &inst.board {
        BoardSpec::Strip { left, right, .. } | BoardSpec::HypStrip { left, right, .. } => (*left, *right),
        BoardSpec::EqTriStrip { left, .. } => (*left, None),
        _ => (None, None),
    };
    if let Some(first) = vs.first() {
        check_boundary(inst, BoundarySide::Left, Cell::Index(0), left, first.w)?;
    }
    if let Some(last) = vs.last() {
        check_boundary(inst, BoundarySide::Right, Cell::Index(vs.len() - 1), right, last.e)?;
    }
    Ok(())
}

fn verify_rect(inst: &Instance, rows: usize, cols: usize, placements: &[Placement]) -> Check {
    let vs = views(inst, placements)?;
    for (i, p) in placements.iter().enumerate() {
        check_shape(&inst.board, i, p.orient, None)?;
    }
    let at = |r: usize, c: usize| &vs[r * cols + c];
    for r in 0..rows {
        for c in 0..cols {
            let here = Cell::Grid { row: r, col: c };
            if c + 1 < cols {
                check_contact(inst, here, Cell::Grid { row: r, col: c + 1 }, at(r, c).e, at(r, c + 1).w, Axis::Horizontal)?;
            }
            if r + 1 < rows {
                check_contact(inst, here, Cell::Grid { row: r + 1, col: c }, at(r, c).s, at(r + 1, c).n, Axis::Vertical)?;
            }
        }
    }
    Ok(())
}

fn verify_free(inst: &Instance, cells: &[FreeCell]) -> Check {
    let placements: Vec<Placement> = cells.iter().map(|c| Placement { tile: c.tile, orient: c.orient }).collect();
    let vs = views(inst, &placements)?;
    let mut grid: HashMap<(i32, i32), usize> = HashMap::new();
    for (k, c) in cells.iter().enumerate() {
        if !matches!(c.orient, Orientation::Square { .. }) {
            return Err(shape_error(k, "shapeless boards take square orientations"));
        }
        if grid.insert((c.x, c.y), k).is_some() {
            return Err(structural(Structural::OverlappingCell { x: c.x, y: c.y }));
        }
    }
    for c in cells {
        let here = Cell::At { x: c.x, y: c.y };
        let v = &vs[grid[&(c.x, c.y)]];
        if let Some(&k) = grid.get(&(c.x + 1, c.y)) {
            check_contact(inst, here, Cell::At { x: c.x + 1, y: c.y }, v.e, vs[k].w, Axis::Horizontal)?;
        }
        if let Some(&k) = grid.get(&(c.x, c.y + 1)) {
            check_contact(inst, here, Cell::At { x: c.x, y: c.y + 1 }, v.s, vs[k].n, Axis::Vertical)?;
        }
    }
    if let Some(first) = cells.first() {
        let mut seen = HashSet::from([(first.x, first.y)]);
        let mut queue = VecDeque::from([(first.x, first.y)]);
        while let Some((x, y)) = queue.pop_front() {
            for n in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                if grid.contains_key(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        if seen.len() != cells.len() {
            return Err(Verdict::Violation(Violation::Disconnected));
        }
    }
    if let BoardSpec::Shapeless { root: Some(root) } = inst.board {
        let ok = grid
            .get(&(0, 0))
            .map(|&k| cells[k].tile == root.tile && cells[k].orient == Orientation::square(root.rot))
            .unwrap_or(false);
        if !ok {
            return Err(Verdict::Violation(Violation::RootMisplaced));
        }
    }
    Ok(())
}

/// Checks a solution against every constraint its board imposes. Structural
/// problems (wrong tiles, wrong size) are reported apart from illegal contacts.
pub fn verify(inst: &Instance, sol: &Solution) -> Verdict {
    if let Err(e) = inst.validate() {
        return structural(Structural::Instance(e.to_string()));
    }
    let res = match (&inst.board, sol) {
        (BoardSpec::Shapeless { .. }, Solution::Free(cells)) => verify_free(inst, cells),
        (BoardSpec::Shapeless { .. }, _) | (_, Solution::Free(_)) => Err(structural(Structural::WrongSolutionShape)),
        (board, Solution::Cells(ps)) => {
            let cap = board.capacity().unwrap_or(0);
            if ps.len() != cap {
                Err(structural(Structural::CapacityMismatch { expected: cap, found: ps.len() }))
            } else if let BoardSpec::Rect { rows, cols } = *board {
                verify_rect(inst, rows, cols, ps)
            } else {
                verify_row(inst, ps)
            }
        }
    };
    match res {
        Ok(()) => Verdict::Ok,
        Err(v) => v,
    }
}
