//! Certification of proper, star and star-compatible edge colorings.
//!
//! A coloring is a *star* edge coloring when it is proper and no path or
//! cycle with four edges is bi-colored. Failures carry a [`Violation`] that
//! names the offending edges or vertex sequence; [`Violation::replays_on`]
//! re-checks a witness from scratch.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {got} entries, graph has {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
    #[error("coloring is bound to a different graph")]
    FingerprintMismatch,
    #[error("family members are bound to different graphs")]
    MixedFamily,
}

/// Palette indices assigned to the edges of one graph, in canonical edge
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    fingerprint: u64,
    colors: Vec<usize>,
    palette: usize,
}

impl EdgeColoring {
    /// Binds `colors` to `g`. Entries outside `0..palette` are accepted here
    /// and reported by [`verify_proper`] as a palette overflow.
    pub fn new(g: &Graph, colors: Vec<usize>, palette: usize) -> Result<Self, ColoringError> {
        if colors.len() != g.edge_count() {
            return Err(ColoringError::LengthMismatch {
                expected: g.edge_count(),
                got: colors.len(),
            });
        }
        Ok(EdgeColoring {
            fingerprint: g.fingerprint(),
            colors,
            palette,
        })
    }

    /// Binds `colors` to `g` with the smallest palette that holds them.
    pub fn from_colors(g: &Graph, colors: Vec<usize>) -> Result<Self, ColoringError> {
        let palette = colors.iter().max().map_or(0, |&c| c + 1);
        Self::new(g, colors, palette)
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, e: usize) -> usize {
        self.colors[e]
    }

    pub fn palette_size(&self) -> usize {
        self.palette
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn is_bound_to(&self, g: &Graph) -> bool {
        self.fingerprint == g.fingerprint()
    }

    /// Number of distinct colors that actually occur.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Adds `offset` to every color and to the palette size.
    pub fn shifted(&self, offset: usize) -> Self {
        EdgeColoring {
            fingerprint: self.fingerprint,
            colors: self.colors.iter().map(|&c| c + offset).collect(),
            palette: self.palette + offset,
        }
    }

    /// Relabels the colors that occur onto `0..colors_used()`, keeping their
    /// relative order.
    pub fn compacted(&self) -> Self {
        let used: Vec<usize> = self
            .colors
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let colors = self
            .colors
            .iter()
            .map(|c| used.binary_search(c).expect("color is present"))
            .collect();
        EdgeColoring {
            fingerprint: self.fingerprint,
            colors,
            palette: used.len(),
        }
    }

    /// Applies `perm[c]` to every color.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        EdgeColoring {
            fingerprint: self.fingerprint,
            colors: self.colors.iter().map(|&c| perm[c]).collect(),
            palette: self.palette.max(perm.iter().max().map_or(0, |&m| m + 1)),
        }
    }

    /// Moves this coloring of `src` onto `dst`, where `vertex_map` sends each
    /// vertex of `src` to a vertex of `dst` and every edge must map to an edge.
    pub fn transfer(
        &self,
        src: &Graph,
        dst: &Graph,
        vertex_map: impl Fn(usize) -> usize,
    ) -> Result<Self, ColoringError> {
        if !self.is_bound_to(src) {
            return Err(ColoringError::FingerprintMismatch);
        }
        if src.edge_count() != dst.edge_count() {
            return Err(ColoringError::LengthMismatch {
                expected: dst.edge_count(),
                got: src.edge_count(),
            });
        }
        let mut colors = vec![usize::MAX; dst.edge_count()];
        for (e, &(u, v)) in src.edges().iter().enumerate() {
            let target = dst
                .edge_between(vertex_map(u), vertex_map(v))
                .ok_or(ColoringError::FingerprintMismatch)?;
            colors[target] = self.colors[e];
        }
        if colors.contains(&usize::MAX) {
            return Err(ColoringError::FingerprintMismatch);
        }
        EdgeColoring::new(dst, colors, self.palette)
    }
}

/// `t` pairwise star-compatible colorings of one graph over a shared
/// palette.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibleFamily {
    colorings: Vec<EdgeColoring>,
    palette: usize,
}

impl CompatibleFamily {
    pub fn new(colorings: Vec<EdgeColoring>, palette: usize) -> Result<Self, ColoringError> {
        if let Some(first) = colorings.first() {
            if colorings.iter().any(|c| c.fingerprint != first.fingerprint) {
                return Err(ColoringError::MixedFamily);
            }
        }
        Ok(CompatibleFamily { colorings, palette })
    }

    pub fn members(&self) -> &[EdgeColoring] {
        &self.colorings
    }

    pub fn member(&self, i: usize) -> &EdgeColoring {
        &self.colorings[i]
    }

    /// Number of members.
    pub fn t(&self) -> usize {
        self.colorings.len()
    }

    /// Shared palette size.
    pub fn k(&self) -> usize {
        self.palette
    }

    pub fn into_members(self) -> Vec<EdgeColoring> {
        self.colorings
    }
}

/// What went wrong, with enough detail to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// Two edges meeting at `vertex` share `color`.
    ImproperEdgePair {
        member: Option<usize>,
        vertex: usize,
        edges: (usize, usize),
        color: usize,
    },
    /// A path `v0 v1 v2 v3 v4` whose edges alternate between two colors.
    #[serde(rename = "bicolored-4path")]
    Bicolored4path {
        member: Option<usize>,
        vertices: [usize; 5],
        colors: (usize, usize),
    },
    /// A cycle `v0 v1 v2 v3 v0` whose edges alternate between two colors.
    #[serde(rename = "bicolored-4cycle")]
    Bicolored4cycle {
        member: Option<usize>,
        vertices: [usize; 4],
        colors: (usize, usize),
    },
    /// Members `members.0` and `members.1` both use `color` at `vertex`.
    CompatOverlap {
        members: (usize, usize),
        vertex: usize,
        color: usize,
    },
    /// Edge `edge` has a color outside `0..palette`.
    PaletteOverflow {
        member: Option<usize>,
        edge: usize,
        color: usize,
        palette: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    ImproperEdgePair,
    #[serde(rename = "bicolored-4path")]
    Bicolored4path,
    #[serde(rename = "bicolored-4cycle")]
    Bicolored4cycle,
    CompatOverlap,
    PaletteOverflow,
}

impl Violation {
    pub fn kind(&self) -> FailureKind {
        match self {
            Violation::ImproperEdgePair { .. } => FailureKind::ImproperEdgePair,
            Violation::Bicolored4path { .. } => FailureKind::Bicolored4path,
            Violation::Bicolored4cycle { .. } => FailureKind::Bicolored4cycle,
            Violation::CompatOverlap { .. } => FailureKind::CompatOverlap,
            Violation::PaletteOverflow { .. } => FailureKind::PaletteOverflow,
        }
    }

    fn with_member(self, i: usize) -> Self {
        match self {
            Violation::ImproperEdgePair {
                vertex, edges, color, ..
            } => Violation::ImproperEdgePair {
                member: Some(i),
                vertex,
                edges,
                color,
            },
            Violation::Bicolored4path { vertices, colors, .. } => Violation::Bicolored4path {
                member: Some(i),
                vertices,
                colors,
            },
            Violation::Bicolored4cycle { vertices, colors, .. } => Violation::Bicolored4cycle {
                member: Some(i),
                vertices,
                colors,
            },
            Violation::PaletteOverflow {
                edge, color, palette, ..
            } => Violation::PaletteOverflow {
                member: Some(i),
                edge,
                color,
                palette,
            },
            other => other,
        }
    }

    /// Re-derives the violation directly from the graph and colorings.
    /// `members` holds the single coloring for plain checks, or the family
    /// members for family checks.
    pub fn replays_on(&self, g: &Graph, members: &[&EdgeColoring]) -> bool {
        let pick = |m: &Option<usize>| members.get(m.unwrap_or(0)).copied();
        let color_of = |c: &EdgeColoring, a: usize, b: usize| g.edge_between(a, b).map(|e| c.color(e));
        match self {
            Violation::ImproperEdgePair {
                member,
                vertex,
                edges: (e1, e2),
                color,
            } => {
                let Some(c) = pick(member) else { return false };
                e1 != e2
                    && *e1 < g.edge_count()
                    && *e2 < g.edge_count()
                    && [*e1, *e2].iter().all(|&e| {
                        let (a, b) = g.edge(e);
                        (a == *vertex || b == *vertex) && c.color(e) == *color
                    })
            }
            Violation::Bicolored4path {
                member,
                vertices,
                colors,
            } => {
                let Some(c) = pick(member) else { return false };
                let distinct = vertices.iter().collect::<BTreeSet<_>>().len() == 5;
                let seq: Option<Vec<usize>> = vertices.windows(2).map(|w| color_of(c, w[0], w[1])).collect();
                distinct && seq.is_some_and(|s| s[0] == s[2] && s[1] == s[3] && (s[0], s[1]) == *colors)
            }
            Violation::Bicolored4cycle {
                member,
                vertices,
                colors,
            } => {
                let Some(c) = pick(member) else { return false };
                let distinct = vertices.iter().collect::<BTreeSet<_>>().len() == 4;
                let seq: Option<Vec<usize>> = (0..4)
                    .map(|i| color_of(c, vertices[i], vertices[(i + 1) % 4]))
                    .collect();
                distinct && seq.is_some_and(|s| s[0] == s[2] && s[1] == s[3] && (s[0], s[1]) == *colors)
            }
            Violation::CompatOverlap {
                members: (i, j),
                vertex,
                color,
            } => {
                let (Some(a), Some(b)) = (members.get(*i), members.get(*j)) else {
                    return false;
                };
                i != j
                    && *vertex < g.vertex_count()
                    && incident_colors(g, a, *vertex).contains(color)
                    && incident_colors(g, b, *vertex).contains(color)
            }
            Violation::PaletteOverflow {
                member,
                edge,
                color,
                palette,
            } => {
                let Some(c) = pick(member) else { return false };
                *edge < g.edge_count() && c.color(*edge) == *color && color >= palette
            }
        }
    }
}

/// Outcome of a verification: `ok` exactly when there is no violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_kind: Option<FailureKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Violation>,
}

impl VerificationReport {
    pub fn pass() -> Self {
        VerificationReport {
            ok: true,
            failure_kind: None,
            witness: None,
        }
    }

    pub fn fail(v: Violation) -> Self {
        VerificationReport {
            ok: false,
            failure_kind: Some(v.kind()),
            witness: Some(v),
        }
    }

    fn from_option(v: Option<Violation>) -> Self {
        v.map_or_else(Self::pass, Self::fail)
    }
}

fn check_binding(g: &Graph, c: &EdgeColoring) -> Result<(), ColoringError> {
    if !c.is_bound_to(g) {
        return Err(ColoringError::FingerprintMismatch);
    }
    Ok(())
}

fn find_improper(g: &Graph, c: &EdgeColoring) -> Option<Violation> {
    if let Some((edge, &color)) = c.colors.iter().enumerate().find(|(_, &col)| col >= c.palette) {
        return Some(Violation::PaletteOverflow {
            member: None,
            edge,
            color,
            palette: c.palette,
        });
    }
    for v in 0..g.vertex_count() {
        let adj = g.adjacency(v);
        for (i, &(_, e1)) in adj.iter().enumerate() {
            for &(_, e2) in &adj[i + 1..] {
                if c.colors[e1] == c.colors[e2] {
                    return Some(Violation::ImproperEdgePair {
                        member: None,
                        vertex: v,
                        edges: (e1.min(e2), e1.max(e2)),
                        color: c.colors[e1],
                    });
                }
            }
        }
    }
    None
}

/// Assumes `c` is proper. For each middle edge `v2 v3` (both orientations)
/// and each same-colored pair `e1 = v1 v2`, `e3 = v3 v4` at distance two,
/// looks for a fourth edge at `v4` repeating the middle color.
fn find_bicolored(g: &Graph, c: &EdgeColoring) -> Option<Violation> {
    let col = |e: usize| c.colors[e];
    for (e2, &(a, b)) in g.edges().iter().enumerate() {
        for (v2, v3) in [(a, b), (b, a)] {
            for &(v1, e1) in g.adjacency(v2) {
                if e1 == e2 {
                    continue;
                }
                for &(v4, e3) in g.adjacency(v3) {
                    if e3 == e2 || v4 == v1 || col(e1) != col(e3) {
                        continue;
                    }
                    for &(v5, e4) in g.adjacency(v4) {
                        if e4 == e3 || col(e4) != col(e2) {
                            continue;
                        }
                        let colors = (col(e1), col(e2));
                        if v5 == v1 {
                            return Some(Violation::Bicolored4cycle {
                                member: None,
                                vertices: [v1, v2, v3, v4],
                                colors,
                            });
                        }
                        if v5 != v2 && v5 != v3 {
                            return Some(Violation::Bicolored4path {
                                member: None,
                                vertices: [v1, v2, v3, v4, v5],
                                colors,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// No two edges sharing an endpoint have equal colors, and every color lies
/// in the palette.
pub fn verify_proper(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport, ColoringError> {
    check_binding(g, c)?;
    Ok(VerificationReport::from_option(find_improper(g, c)))
}

/// Proper, and no path or cycle with four edges uses only two colors.
pub fn verify_star(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport, ColoringError> {
    check_binding(g, c)?;
    Ok(VerificationReport::from_option(
        find_improper(g, c).or_else(|| find_bicolored(g, c)),
    ))
}

pub fn incident_colors(g: &Graph, c: &EdgeColoring, v: usize) -> BTreeSet<usize> {
    g.adjacency(v).iter().map(|&(_, e)| c.colors[e]).collect()
}

/// Every member is a star coloring within the family palette and, at every
/// vertex, the incident color sets of distinct members are disjoint.
pub fn verify_compatible_family(
    g: &Graph,
    fam: &CompatibleFamily,
) -> Result<VerificationReport, ColoringError> {
    for c in &fam.colorings {
        check_binding(g, c)?;
    }
    for (i, c) in fam.colorings.iter().enumerate() {
        if let Some((edge, &color)) = c.colors.iter().enumerate().find(|(_, &col)| col >= fam.palette) {
            return Ok(VerificationReport::fail(Violation::PaletteOverflow {
                member: Some(i),
                edge,
                color,
                palette: fam.palette,
            }));
        }
        let report = verify_star(g, c)?;
        if let Some(v) = report.witness {
            return Ok(VerificationReport::fail(v.with_member(i)));
        }
    }
    // owner[v][color] = member that uses color at v
    let mut owner: Vec<Option<usize>> = vec![None; fam.palette];
    for v in 0..g.vertex_count() {
        owner.iter_mut().for_each(|o| *o = None);
        for (i, c) in fam.colorings.iter().enumerate() {
            for &(_, e) in g.adjacency(v) {
                let color = c.colors[e];
                match owner[color] {
                    Some(j) if j != i => {
                        return Ok(VerificationReport::fail(Violation::CompatOverlap {
                            members: (j, i),
                            vertex: v,
                            color,
                        }));
                    }
                    _ => owner[color] = Some(i),
                }
            }
        }
    }
    Ok(VerificationReport::pass())
}
