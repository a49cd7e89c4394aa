//! Named digraphs. Vertices are labelled by their integer index unless
//! stated otherwise.

use super::{DiGraph, EdgePolicy};
use crate::error::{Error, Result};

/// Line graph on `0..=n` with edges `i -> i+1`.
pub fn gen_line(n: usize) -> DiGraph {
    let edges: Vec<_> = (0..n).map(|i| (i, i + 1)).collect();
    DiGraph::from_indices(n + 1, &edges)
}

/// Directed cycle on `n >= 1` vertices.
pub fn gen_cycle(n: usize) -> Result<DiGraph> {
    if n == 0 {
        return Err(Error::Parameter("cycle needs at least one vertex".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(DiGraph::from_indices(n, &edges))
}

/// Alternating cycle on `n = 2k` vertices: `i -> i+1` for even `i`,
/// `i+1 -> i` for odd `i`, indices mod `n`.
pub fn gen_alt_cycle(n: usize) -> Result<DiGraph> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::Parameter(format!(
            "alternating cycle needs a positive even vertex count, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n)
        .map(|i| {
            let j = (i + 1) % n;
            if i % 2 == 0 {
                (i, j)
            } else {
                (j, i)
            }
        })
        .collect();
    Ok(DiGraph::from_indices(n, &edges))
}

/// Two directed paths of lengths `m` and `n` from vertex `0` to a common
/// sink. Vertices `0..m+n`; forward run `0 -> 1 -> ... -> m`, backward run
/// `m+n-1 -> ... -> m`, closed by `0 -> m+n-1`.
///
/// Requires `n >= 1`: with `n = 0` the edge `m-1 -> m` would leave the
/// vertex set.
pub fn gen_mn_cycle(m: usize, n: usize) -> Result<DiGraph> {
    if n == 0 {
        return Err(Error::Parameter(
            "the second run length must be at least 1".into(),
        ));
    }
    let total = m + n;
    let mut edges = Vec::with_capacity(total);
    edges.extend((0..m).map(|i| (i, i + 1)));
    edges.extend((m..total - 1).map(|i| (i + 1, i)));
    edges.push((0, total - 1));
    Ok(DiGraph::from_indices(total, &edges))
}

/// Interval graph used for cylinders: vertices `-2..=2` with edges
/// `-1 -> -2`, `-1 -> 0`, `1 -> 0`, `1 -> 2`.
pub fn gen_j() -> DiGraph {
    DiGraph::from_labels(
        &["-2", "-1", "0", "1", "2"],
        &[("-1", "-2"), ("-1", "0"), ("1", "0"), ("1", "2")],
        EdgePolicy::Strict,
    )
    .expect("fixed graph")
}

/// Complete digraph: every ordered pair of distinct labels is an edge.
pub fn gen_complete<S: AsRef<str>>(labels: &[S]) -> Result<DiGraph> {
    let n = labels.len();
    let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    let edges = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
    DiGraph::build(labels, edges.collect::<Vec<_>>())
}

/// Alternating 4-cycle on `0..4` with two apexes `a`, `b`, each sending an
/// edge to every cycle vertex. 6 vertices, 12 edges.
pub fn gen_suspension_alt4() -> DiGraph {
    let base = gen_alt_cycle(4).expect("even");
    let mut labels: Vec<String> = vec!["a".into()];
    labels.extend(base.labels().iter().cloned());
    labels.push("b".into());
    let mut edges: Vec<_> = base.edges().map(|(u, v)| (u + 1, v + 1)).collect();
    for i in 1..=4 {
        edges.push((0, i));
        edges.push((5, i));
    }
    DiGraph::build(labels, edges).expect("fixed graph")
}

/// The 3x3x3 grid `I2 □ I2 □ I2` without its centre. Vertices are labelled
/// by their coordinate digits, e.g. `"021"`.
pub fn gen_punctured_cube() -> DiGraph {
    let mut labels = Vec::with_capacity(26);
    let mut coords = Vec::with_capacity(26);
    for x in 0..3 {
        for y in 0..3 {
            for z in 0..3 {
                if (x, y, z) != (1, 1, 1) {
                    labels.push(format!("{x}{y}{z}"));
                    coords.push([x, y, z]);
                }
            }
        }
    }
    let mut edges = Vec::new();
    for (i, c) in coords.iter().enumerate() {
        for axis in 0..3 {
            let mut d = *c;
            d[axis] += 1;
            if let Some(j) = coords.iter().position(|e| *e == d) {
                edges.push((i, j));
            }
        }
    }
    DiGraph::build(labels, edges).expect("fixed graph")
}

/// Looks up a generator by name: `i_<n>`, `c_<n>`, `alt_c_<2k>`,
/// `c_<m>_<n>`, `j`, `suspension_alt4`, `punctured_cube`, `complete_<n>`.
pub fn generator_by_name(name: &str) -> Result<DiGraph> {
    let num = |s: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| Error::Input(format!("bad numeric parameter `{s}` in `{name}`")))
    };
    let parts: Vec<&str> = name.split('_').collect();
    match parts.as_slice() {
        ["j"] => Ok(gen_j()),
        ["suspension", "alt4"] => Ok(gen_suspension_alt4()),
        ["punctured", "cube"] => Ok(gen_punctured_cube()),
        ["i", n] => Ok(gen_line(num(n)?)),
        ["c", n] => gen_cycle(num(n)?),
        ["c", m, n] => gen_mn_cycle(num(m)?, num(n)?),
        ["alt", "c", n] => gen_alt_cycle(num(n)?),
        ["complete", n] => {
            let labels: Vec<String> = (0..num(n)?).map(|i| i.to_string()).collect();
            gen_complete(&labels)
        }
        _ => Err(Error::Input(format!("unknown generator `{name}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_list(g: &DiGraph) -> Vec<(String, String)> {
        g.edges()
            .map(|(u, v)| (g.label(u).to_string(), g.label(v).to_string()))
            .collect()
    }

    fn pairs(p: &[(&str, &str)]) -> Vec<(String, String)> {
        let mut v: Vec<_> = p.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        v.sort();
        v
    }

    fn sorted(mut v: Vec<(String, String)>) -> Vec<(String, String)> {
        v.sort();
        v
    }

    #[test]
    fn lines() {
        assert_eq!(gen_line(0).vertex_count(), 1);
        assert_eq!(gen_line(0).edge_count(), 0);
        assert_eq!(edge_list(&gen_line(1)), pairs(&[("0", "1")]));
        assert_eq!(edge_list(&gen_line(2)), pairs(&[("0", "1"), ("1", "2")]));
    }

    #[test]
    fn cycles() {
        assert_eq!(
            sorted(edge_list(&gen_cycle(3).unwrap())),
            pairs(&[("0", "1"), ("1", "2"), ("2", "0")])
        );
        assert!(gen_cycle(0).is_err());
        assert_eq!(gen_cycle(1).unwrap().edge_count(), 0);
        assert_eq!(gen_cycle(2).unwrap().edge_count(), 2);
    }

    #[test]
    fn alternating_cycles() {
        assert_eq!(
            sorted(edge_list(&gen_alt_cycle(4).unwrap())),
            pairs(&[("0", "1"), ("2", "1"), ("2", "3"), ("0", "3")])
        );
        assert!(gen_alt_cycle(3).is_err());
        assert!(gen_alt_cycle(0).is_err());
        assert_eq!(gen_alt_cycle(2).unwrap().edge_count(), 1);
    }

    #[test]
    fn two_run_cycles() {
        assert_eq!(
            sorted(edge_list(&gen_mn_cycle(3, 1).unwrap())),
            pairs(&[("0", "1"), ("1", "2"), ("2", "3"), ("0", "3")])
        );
        assert_eq!(
            sorted(edge_list(&gen_mn_cycle(2, 2).unwrap())),
            pairs(&[("0", "1"), ("1", "2"), ("3", "2"), ("0", "3")])
        );
        assert_eq!(
            sorted(edge_list(&gen_mn_cycle(2, 1).unwrap())),
            pairs(&[("0", "1"), ("1", "2"), ("0", "2")])
        );
        assert!(gen_mn_cycle(2, 0).is_err());
        assert_eq!(gen_mn_cycle(0, 1).unwrap().vertex_count(), 1);
    }

    #[test]
    fn fixed_graphs() {
        let j = gen_j();
        assert_eq!(j.vertex_count(), 5);
        assert_eq!(j.edge_count(), 4);
        let s = gen_suspension_alt4();
        assert_eq!(s.vertex_count(), 6);
        assert_eq!(s.edge_count(), 12);
        let c = gen_punctured_cube();
        assert_eq!(c.vertex_count(), 26);
        assert_eq!(c.edge_count(), 48);
        let k = gen_complete(&["x"]).unwrap();
        assert_eq!((k.vertex_count(), k.edge_count()), (1, 0));
        assert_eq!(gen_complete(&["x", "y", "z"]).unwrap().edge_count(), 6);
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(generator_by_name("i_3").unwrap(), gen_line(3));
        assert_eq!(generator_by_name("c_2_2").unwrap(), gen_mn_cycle(2, 2).unwrap());
        assert_eq!(generator_by_name("alt_c_4").unwrap(), gen_alt_cycle(4).unwrap());
        assert_eq!(generator_by_name("complete_3").unwrap().edge_count(), 6);
        assert!(generator_by_name("c_x").is_err());
        assert!(generator_by_name("nope").is_err());
    }
}
