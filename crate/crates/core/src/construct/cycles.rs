//! Star colorings and compatible families of cycles.
//!
//! Edge `x` of `C_n` joins `x` and `x + 1 mod n`; all patterns below are
//! listed in that order.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::cycle_graph;
use crate::solve::bipartite_perfect_matching;
use crate::verify::{CompatibleFamily, EdgeColoring};

use super::tables::CYCLE5_FAMILY_8_3;
use super::{certify, certify_family, Colored, ConstructError, Family};

/// Intermediate values of the odd-cycle family for `n >= 2r + 1`, `r > 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleFamilyTrace {
    pub n: usize,
    pub r: usize,
    /// `(n - 1 - 2r) / 2`.
    pub b: usize,
    /// `n - 1 = 2rp + u`.
    pub p: usize,
    pub u: usize,
    /// `t[i][l - 1]` is the `l`-th entry of the tuple `T_i`, `l = 1..=b+1`.
    pub t: Vec<Vec<usize>>,
    /// `a_values[i][s]` for `s = 0..2r`.
    pub a_values: Vec<Vec<usize>>,
    /// Closing color of each member.
    pub q: Vec<usize>,
    /// Candidate closing colors, only when `b = 1`.
    pub s_sets: Vec<BTreeSet<usize>>,
    /// The matching chosen when `b = 1`.
    pub matching: Option<Vec<usize>>,
}

/// Star coloring of `C_n` with 3 colors, or 4 when `n = 5`.
pub fn cycle_star_coloring(n: usize) -> Result<Colored, ConstructError> {
    let g = cycle_graph(n)?;
    let colors = cycle_pattern(n);
    let k = if n == 5 { 4 } else { 3 };
    let c = EdgeColoring::new(&g, colors, k)?;
    certify(g, c, "cycle star coloring")
}

fn cycle_pattern(n: usize) -> Vec<usize> {
    let (body, tail): (usize, &[usize]) = match n % 3 {
        _ if n == 5 => (0, &[0, 1, 2, 0, 3]),
        0 => (n, &[]),
        1 => (n - 4, &[0, 1, 0, 2]),
        _ => (n - 8, &[0, 1, 0, 2, 0, 1, 0, 2]),
    };
    (0..body).map(|x| x % 3).chain(tail.iter().copied()).collect()
}

/// `r` pairwise compatible star colorings of `C_n`. The palette is `2r` for
/// even `n`, `2r + 1` for odd `n >= 2r + 1`, and `2r + ceil(2r / (n - 1))`
/// for smaller odd `n`.
pub fn cycle_family(n: usize, r: usize) -> Result<Family, ConstructError> {
    cycle_family_with_trace(n, r).map(|(f, _)| f)
}

/// Like [`cycle_family`], also returning the intermediate values when the
/// general odd construction (`n >= 2r + 1`, `r > 2`) was used.
pub fn cycle_family_with_trace(
    n: usize,
    r: usize,
) -> Result<(Family, Option<CycleFamilyTrace>), ConstructError> {
    if n < 3 || r < 2 {
        return Err(ConstructError::Parameters(format!(
            "cycle family needs n >= 3 and r >= 2, got n={n}, r={r}"
        )));
    }
    let g = cycle_graph(n)?;
    let (members, k, trace) = if n.is_multiple_of(2) {
        (even_family(n, r), 2 * r, None)
    } else if n > 2 * r {
        let (members, trace) = odd_family(n, r)?;
        (members, 2 * r + 1, trace)
    } else {
        let (members, k) = small_odd_family(n, r)?;
        (members, k, None)
    };
    let members = members
        .into_iter()
        .map(|c| EdgeColoring::new(&g, c, k))
        .collect::<Result<Vec<_>, _>>()?;
    let family = CompatibleFamily::new(members, k)?;
    let fam = certify_family(g, family, &format!("cycle family n={n} r={r}"))?;
    Ok((fam, trace))
}

/// Palette that [`cycle_family`] uses for `(n, r)`.
pub(crate) fn family_palette(n: usize, r: usize) -> usize {
    if n.is_multiple_of(2) {
        2 * r
    } else if n > 2 * r {
        2 * r + 1
    } else {
        2 * r + (2 * r).div_ceil(n - 1)
    }
}

fn even_family(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 2 {
        let body = |shift: usize, len: usize| (0..len).map(move |x| (x + shift) % 4);
        if n.is_multiple_of(4) {
            return vec![body(0, n).collect(), body(2, n).collect()];
        }
        return vec![
            body(0, n - 2).chain([2, 1]).collect(),
            body(2, n - 2).chain([0, 3]).collect(),
        ];
    }
    let k = 2 * r;
    (0..r)
        .map(|i| {
            (0..n)
                .map(|x| {
                    if x + 1 < n {
                        (x + 2 * i) % k
                    } else {
                        (n + 1 + 2 * i) % k
                    }
                })
                .collect()
        })
        .collect()
}

type Members = Vec<Vec<usize>>;

/// Odd `n >= 2r + 1`, palette `2r + 1`.
fn odd_family(n: usize, r: usize) -> Result<(Members, Option<CycleFamilyTrace>), ConstructError> {
    if r == 2 {
        let q = n / 4;
        let block = |reps: usize| (0..4 * reps).map(|x| x % 4);
        let members = if n % 4 == 1 {
            vec![
                block(q - 1).chain([0, 1, 2, 4, 3]).collect(),
                [4, 3].into_iter().chain(block(q - 1)).chain([0, 1, 2]).collect(),
            ]
        } else {
            vec![
                block(q).chain([0, 4, 2]).collect(),
                [4, 3].into_iter().chain(block(q)).chain([1]).collect(),
            ]
        };
        return Ok((members, None));
    }
    let trace = odd_trace(n, r)?;
    let b = trace.b;
    let members = (0..r)
        .map(|i| {
            let prev = &trace.t[(i + r - 1) % r];
            let mut f: Vec<usize> = trace.t[i][..b].iter().rev().copied().collect();
            f.extend_from_slice(&trace.a_values[i][..2 * r]);
            f.extend_from_slice(&prev[..b]);
            f.push(trace.q[i]);
            f
        })
        .collect();
    Ok((members, Some(trace)))
}

fn odd_trace(n: usize, r: usize) -> Result<CycleFamilyTrace, ConstructError> {
    let b = (n - 1 - 2 * r) / 2;
    let (p, u) = ((n - 1) / (2 * r), (n - 1) % (2 * r));
    let m = 2 * r as i64;
    let t: Vec<Vec<usize>> = (0..r as i64)
        .map(|i| {
            (1..=b as i64 + 1)
                .map(|l| ((m - 2 * i - 4 + l).rem_euclid(m) + 1) as usize)
                .collect()
        })
        .collect();
    let a_values: Vec<Vec<usize>> = (0..r)
        .map(|i| (0..=2 * r).map(|s| ((2 * r - 1) * i + s) % (2 * r + 1)).collect())
        .collect();
    let mut trace = CycleFamilyTrace {
        n,
        r,
        b,
        p,
        u,
        t,
        a_values,
        q: Vec::new(),
        s_sets: Vec::new(),
        matching: None,
    };
    trace.q = match b {
        0 => trace.a_values.iter().map(|a| a[2 * r]).collect(),
        1 => {
            let odd: BTreeSet<usize> = (1..2 * r).step_by(2).collect();
            trace.s_sets = trace
                .a_values
                .iter()
                .map(|a| {
                    let mut s = odd.clone();
                    s.remove(&a[0]);
                    s.remove(&a[2 * r - 1]);
                    s
                })
                .collect();
            let mut left = trace.s_sets.clone();
            left[0].remove(&1);
            match bipartite_perfect_matching(&left, &odd) {
                Ok(q) => {
                    trace.matching = Some(q.clone());
                    q
                }
                Err(v) => {
                    return Err(ConstructError::Matching {
                        left: v.left,
                        trace: Box::new(trace),
                    })
                }
            }
        }
        _ => trace.t.iter().map(|ti| ti[b]).collect(),
    };
    Ok(trace)
}

/// Odd `n < 2r + 1`: stacks smaller families on disjoint palettes.
fn small_odd_family(n: usize, r: usize) -> Result<(Members, usize), ConstructError> {
    let p = (n - 1) / 2;
    let a = r.div_ceil(p) - 1;
    let mut groups = vec![p; a];
    let last = r - a * p;
    let mut members = Vec::with_capacity(r);
    let mut offset = 0;
    if n == 5 && last == 1 {
        // A lone coloring of C_5 costs 4 colors, so the last two groups are
        // replaced by one three-member family on 8 colors.
        groups.pop();
        for row in CYCLE5_FAMILY_8_3 {
            members.push(row.to_vec());
        }
        offset = 8;
    } else {
        groups.push(last);
    }
    for size in groups {
        let (group, k) = if size == 1 {
            (vec![cycle_pattern(n)], 3)
        } else {
            (odd_family(n, size)?.0, 2 * size + 1)
        };
        members.extend(
            group
                .into_iter()
                .map(|c| c.into_iter().map(|x| x + offset).collect()),
        );
        offset += k;
    }
    Ok((members, offset))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::{star_chromatic_index_exact, SearchLimits};

    #[test]
    fn cycle_colorings_match_exact_values() {
        for n in 3..=14 {
            let c = cycle_star_coloring(n).unwrap();
            let exact = star_chromatic_index_exact(&c.graph, &SearchLimits::default());
            assert_eq!(exact.value, Some(c.palette_size()), "n={n}");
            assert_eq!(c.coloring.colors_used(), c.palette_size());
        }
        assert_eq!(
            cycle_star_coloring(6).unwrap().coloring.colors(),
            &[0, 1, 2, 0, 1, 2]
        );
    }

    #[test]
    fn tails_repeat_with_period_twelve() {
        for n in [4, 7, 8, 10, 11] {
            let base = cycle_pattern(n);
            let longer = cycle_pattern(n + 12);
            assert_eq!(&longer[12..], &base[..], "n={n}");
            assert!(cycle_star_coloring(n + 12).is_ok());
        }
    }

    #[test]
    fn even_r2_patterns() {
        let f = cycle_family(8, 2).unwrap();
        assert_eq!(f.family.member(0).colors(), &[0, 1, 2, 3, 0, 1, 2, 3]);
        assert_eq!(f.family.member(1).colors(), &[2, 3, 0, 1, 2, 3, 0, 1]);
        let f = cycle_family(6, 2).unwrap();
        assert_eq!(f.family.member(0).colors(), &[0, 1, 2, 3, 2, 1]);
        assert_eq!(f.family.member(1).colors(), &[2, 3, 0, 1, 0, 3]);
    }

    #[test]
    fn fifteen_three_trace() {
        let (f, trace) = cycle_family_with_trace(15, 3).unwrap();
        let trace = trace.unwrap();
        assert_eq!((trace.b, trace.p, trace.u), (4, 2, 2));
        assert_eq!(trace.t[0], vec![4, 5, 6, 1, 2]);
        assert_eq!(trace.t[1], vec![2, 3, 4, 5, 6]);
        assert_eq!(trace.t[2], vec![6, 1, 2, 3, 4]);
        assert_eq!((f.k(), f.t()), (7, 3));
    }

    #[test]
    fn matching_branch() {
        // b = 1 means n = 2r + 3.
        for r in 3..=6 {
            let (f, trace) = cycle_family_with_trace(2 * r + 3, r).unwrap();
            let trace = trace.unwrap();
            assert_eq!(trace.b, 1);
            let q = trace.matching.clone().unwrap();
            assert_eq!(q, trace.q);
            assert_eq!(q.iter().collect::<BTreeSet<_>>().len(), r);
            for (i, qi) in q.iter().enumerate() {
                assert!(trace.s_sets[i].contains(qi));
            }
            assert_ne!(q[0], 1);
            assert_eq!(f.k(), 2 * r + 1);
        }
    }

    #[test]
    fn small_odd_palettes() {
        let f = cycle_family(3, 2).unwrap();
        assert_eq!(f.k(), 6);
        assert_eq!(f.family.member(0).colors(), &[0, 1, 2]);
        assert_eq!(f.family.member(1).colors(), &[3, 4, 5]);
        for r in 2..=7 {
            let f = cycle_family(5, r).unwrap();
            assert_eq!(f.k(), 2 * r + (2 * r).div_ceil(4), "r={r}");
        }
    }

    #[test]
    fn predicted_palettes() {
        for n in 3..=20 {
            for r in 2..=6 {
                let f = cycle_family(n, r).unwrap();
                assert_eq!(f.k(), family_palette(n, r), "n={n} r={r}");
                assert_eq!(f.t(), r);
            }
        }
    }
}
