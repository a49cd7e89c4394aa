use super::{DiGraph, Vertex};

/// Returns `true` when the two graphs are isomorphic.
pub fn is_isomorphic(g: &DiGraph, h: &DiGraph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Backtracking search for a vertex bijection `g -> h` preserving edges in
/// both directions. Candidates are pruned by (out-degree, in-degree).
pub fn find_isomorphism(g: &DiGraph, h: &DiGraph) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let profile = |d: &DiGraph, v: Vertex| (d.out_neighbors(v).len(), d.in_neighbors(v).len());
    let mut gp: Vec<_> = g.vertices().map(|v| profile(g, v)).collect();
    let mut hp: Vec<_> = h.vertices().map(|v| profile(h, v)).collect();
    let (gs, hs) = (gp.clone(), hp.clone());
    gp.sort_unstable();
    hp.sort_unstable();
    if gp != hp {
        return None;
    }

    // Visit high-degree vertices first so conflicts surface early.
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(gs[v].0 + gs[v].1));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn extend(
        k: usize,
        order: &[Vertex],
        g: &DiGraph,
        h: &DiGraph,
        gs: &[(usize, usize)],
        hs: &[(usize, usize)],
        map: &mut [Vertex],
        used: &mut [bool],
    ) -> bool {
        let Some(&v) = order.get(k) else {
            return true;
        };
        for w in h.vertices() {
            if used[w] || gs[v] != hs[w] {
                continue;
            }
            let consistent = order[..k].iter().all(|&u| {
                let mu = map[u];
                g.has_edge(u, v) == h.has_edge(mu, w) && g.has_edge(v, u) == h.has_edge(w, mu)
            });
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(k + 1, order, g, h, gs, hs, map, used) {
                return true;
            }
            used[w] = false;
        }
        map[v] = usize::MAX;
        false
    }
    extend(0, &order, g, h, &gs, &hs, &mut map, &mut used).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{gen_alt_cycle, gen_cycle, gen_line, gen_mn_cycle};

    #[test]
    fn relabelled_cycle() {
        let c3 = gen_cycle(3).unwrap();
        let r = c3
            .relabel(vec!["x".into(), "y".into(), "z".into()])
            .unwrap();
        assert!(is_isomorphic(&c3, &r));
        let shuffled = DiGraph::from_indices(3, &[(2, 1), (1, 0), (0, 2)]);
        let m = find_isomorphism(&c3, &shuffled).unwrap();
        for (u, v) in c3.edges() {
            assert!(shuffled.has_edge(m[u], m[v]));
        }
    }

    #[test]
    fn distinguishes() {
        assert!(!is_isomorphic(&gen_mn_cycle(2, 1).unwrap(), &gen_cycle(3).unwrap()));
        assert!(!is_isomorphic(&gen_line(2), &gen_line(3)));
        assert!(!is_isomorphic(
            &gen_alt_cycle(4).unwrap(),
            &gen_mn_cycle(2, 2).unwrap()
        ));
        // same degree profile, different orientation pattern
        let a = DiGraph::from_indices(4, &[(0, 1), (2, 1), (2, 3)]);
        let b = DiGraph::from_indices(4, &[(0, 1), (1, 2), (3, 2)]);
        assert_eq!(is_isomorphic(&a, &b), find_isomorphism(&a, &b).is_some());
    }
}
