use crate::graph::path_graph;
use crate::verify::{CompatibleFamily, EdgeColoring};

use super::{certify, certify_family, Colored, ConstructError, Family};

/// Optimal star coloring of `P_n`: `0 1 0` up to four vertices, then
/// `0 1 2` repeated.
pub fn path_star_coloring(n: usize) -> Result<Colored, ConstructError> {
    let g = path_graph(n)?;
    let m = n - 1;
    let (colors, k) = if n <= 4 {
        ((0..m).map(|x| x % 2).collect(), m.min(2))
    } else {
        ((0..m).map(|x| x % 3).collect(), 3)
    };
    let c = EdgeColoring::new(&g, colors, k)?;
    certify(g, c, "path star coloring")
}

/// `r` pairwise compatible star colorings of `P_n` on `2r` colors:
/// member `i` colors edge `x` with `x + 2i mod 2r`.
pub fn path_family(n: usize, r: usize) -> Result<Family, ConstructError> {
    if n < 2 || r < 1 {
        return Err(ConstructError::Parameters(format!(
            "path family needs n >= 2 and r >= 1, got n={n}, r={r}"
        )));
    }
    let g = path_graph(n)?;
    let k = 2 * r;
    let members = (0..r)
        .map(|i| EdgeColoring::new(&g, (0..n - 1).map(|x| (x + 2 * i) % k).collect(), k))
        .collect::<Result<Vec<_>, _>>()?;
    let family = CompatibleFamily::new(members, k)?;
    certify_family(g, family, "path family")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_members() {
        let f = path_family(5, 2).unwrap();
        assert_eq!(f.family.member(0).colors(), &[0, 1, 2, 3]);
        assert_eq!(f.family.member(1).colors(), &[2, 3, 0, 1]);
        let f = path_family(3, 3).unwrap();
        let got: Vec<&[usize]> = f.family.members().iter().map(|m| m.colors()).collect();
        assert_eq!(got, vec![&[0, 1][..], &[2, 3], &[4, 5]]);
        assert_eq!((f.k(), f.t()), (6, 3));
    }

    #[test]
    fn paths() {
        let k: Vec<usize> = (1..=7)
            .map(|n| path_star_coloring(n).unwrap().palette_size())
            .collect();
        assert_eq!(k, [0, 1, 2, 2, 3, 3, 3]);
    }

    #[test]
    fn rejects_degenerate_input() {
        assert!(path_family(1, 2).is_err());
        assert!(path_family(4, 0).is_err());
    }
}
