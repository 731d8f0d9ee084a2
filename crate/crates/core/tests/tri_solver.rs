use edgematch::model::{verify, Acute, BoardSpec, CompatRule, Instance, Label, RightTriTile, Tile};
use edgematch::oracles::enumerate_strip_solutions;
use edgematch::tri_solver::solve_leg_contact;

const COLORS: [&str; 3] = ["a", "b", "c"];
const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// A leg is `color` (unsigned) or `2 * color + minus` (signed).
fn leg(code: usize, signed: bool) -> Label {
    match signed {
        false => Label::color(COLORS[code]),
        true if code % 2 == 0 => Label::plus(COLORS[code / 2]),
        true => Label::minus(COLORS[code / 2]),
    }
}

fn rename(code: usize, signed: bool, perm: [usize; 3], flips: usize) -> usize {
    if signed {
        let c = code / 2;
        2 * perm[c] + ((code % 2) ^ ((flips >> c) & 1))
    } else {
        perm[code]
    }
}

/// Sorted tile multisets of size `n` over `colors` colors that are minimal
/// among their renamings.
fn canonical_multisets(n: usize, colors: usize, signed: bool) -> Vec<Vec<(usize, usize)>> {
    let per_leg = if signed { 2 * colors } else { colors };
    let types: Vec<(usize, usize)> = (0..per_leg).flat_map(|l| (0..per_leg).map(move |r| (l, r))).collect();
    let perms: Vec<[usize; 3]> = PERMS.iter().copied().filter(|p| p.iter().take(colors).all(|&x| x < colors)).collect();
    let flip_count = if signed { 1 << colors } else { 1 };
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let ms: Vec<(usize, usize)> = idx.iter().map(|&i| types[i]).collect();
        let minimal = perms.iter().all(|&p| {
            (0..flip_count).all(|f| {
                let mut r: Vec<(usize, usize)> =
                    ms.iter().map(|&(l, rr)| (rename(l, signed, p, f), rename(rr, signed, p, f))).collect();
                r.sort_unstable();
                ms <= r
            })
        });
        if minimal {
            out.push(ms);
        }
        // Next nondecreasing index sequence.
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if idx[k] + 1 < types.len() {
                idx[k] += 1;
                for j in k + 1..n {
                    idx[j] = idx[k];
                }
                break;
            }
        }
    }
}

fn instance(ms: &[(usize, usize)], signed: bool, left: Acute) -> Instance {
    let tiles = ms
        .iter()
        .enumerate()
        .map(|(i, &(l, r))| {
            let hyp = if signed { Label::plus(&format!("h{i}")) } else { Label::color(&format!("h{i}")) };
            Tile::RightTri(RightTriTile { id: i as u32, leg_l: leg(l, signed), leg_r: leg(r, signed), hyp })
        })
        .collect();
    let rule = if signed { CompatRule::SignedOpp } else { CompatRule::UnsignedEq };
    Instance::new(BoardSpec::LegStrip { len: ms.len(), left_acute: left }, rule, tiles)
}

fn sweep(max_n: usize, colors: usize, signed: bool) -> usize {
    let mut checked = 0;
    for n in 1..=max_n {
        for ms in canonical_multisets(n, colors, signed) {
            for left in [Acute::Bottom, Acute::Top] {
                let inst = instance(&ms, signed, left);
                let want = enumerate_strip_solutions(&inst, Some(1)).unwrap().count > 0;
                let got = solve_leg_contact(&inst).unwrap();
                assert_eq!(got.is_some(), want, "{ms:?} signed={signed} left={left:?}");
                if let Some(sol) = got {
                    assert!(verify(&inst, &sol).is_ok());
                }
                checked += 1;
            }
        }
    }
    checked
}

#[test]
fn canonical_enumeration_sizes() {
    // Two tiles over one unsigned color: only {(a,a),(a,a)}.
    assert_eq!(canonical_multisets(2, 1, false).len(), 1);
    // One tile over two unsigned colors: (a,a) and (a,b).
    assert_eq!(canonical_multisets(1, 2, false), vec![vec![(0, 0)], vec![(0, 1)]]);
}

#[test]
fn unsigned_matches_brute_force() {
    assert!(sweep(6, 3, false) > 100);
}

#[test]
fn signed_matches_brute_force() {
    assert!(sweep(6, 3, true) > 100);
}
