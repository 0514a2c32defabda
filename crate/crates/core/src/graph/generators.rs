//! Named graph families.
//!
//! Labelling conventions: hubs (of stars, wheels and friendship graphs) are
//! vertex 0; Turán parts are consecutive vertex blocks, larger parts first.

use super::{Graph, GraphError};

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter(msg.into())
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Ok(Graph::empty(n)?.complement())
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

/// `K_{1,n-1}` with hub 0.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(invalid(format!("star needs n >= 2, got {n}")));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edge_list(n, &edges)
}

/// Hub 0 joined to every vertex of the cycle `1..=rim`; `wheel(4)` is `W_4`
/// on five vertices.
pub fn wheel(rim: usize) -> Result<Graph, GraphError> {
    if rim < 3 {
        return Err(invalid(format!("wheel needs a rim of >= 3 vertices, got {rim}")));
    }
    let mut edges: Vec<_> = (1..=rim).map(|v| (0, v)).collect();
    edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
    Graph::from_edge_list(rim + 1, &edges)
}

/// `t` triangles sharing the hub 0; triangle `i` is `{0, 2i+1, 2i+2}`.
pub fn friendship(t: usize) -> Result<Graph, GraphError> {
    if t < 1 {
        return Err(invalid("friendship graph needs t >= 1"));
    }
    let mut edges = Vec::with_capacity(3 * t);
    for i in 0..t {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    Graph::from_edge_list(2 * t + 1, &edges)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    complete_multipartite(&[a, b])
}

/// Complete multipartite graph whose parts are consecutive blocks of the
/// given sizes. Zero-size parts are allowed.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &s) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, s));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Part sizes of `T_r(n)`: `n mod r` parts of size `ceil(n/r)` followed by
/// the remaining parts of size `floor(n/r)` (possibly zero when `r > n`).
pub fn turan_part_sizes(r: usize, n: usize) -> Vec<usize> {
    if r == 0 {
        return Vec::new();
    }
    let (q, rem) = (n / r, n % r);
    (0..r).map(|i| if i < rem { q + 1 } else { q }).collect()
}

pub fn turan_graph(r: usize, n: usize) -> Result<Graph, GraphError> {
    if r < 1 || n < 1 {
        return Err(invalid(format!("Turán graph needs r >= 1 and n >= 1, got r={r}, n={n}")));
    }
    complete_multipartite(&turan_part_sizes(r, n))
}

/// `K_n` with the edge `{0, 1}` removed.
pub fn complete_minus_edge(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(invalid(format!("complete_minus_edge needs n >= 2, got {n}")));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if (u, v) != (0, 1) {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Complement of the matching `{2i, 2i+1}` for `i < n/2 - 1`; vertices
/// `n-2` and `n-1` stay universal.
pub fn matching_complement(n: usize) -> Result<Graph, GraphError> {
    if n < 2 || n % 2 == 1 {
        return Err(invalid(format!("matching_complement needs an even n >= 2, got {n}")));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            let matched = v == u + 1 && u % 2 == 0 && v < n - 2;
            if !matched {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Disjoint union, with `h` relabelled after `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let offset = g.order();
    let mut out = Graph::empty(offset + h.order()).expect("order is positive");
    for (u, v) in g.edges() {
        out.set_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.set_edge(u + offset, v + offset);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::degree_profile;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn turan_examples() {
        let t = turan_graph(2, 4).unwrap();
        assert_eq!(t.size(), 4);
        assert!(t.is_turan(2));
        assert_eq!(turan_graph(3, 6).unwrap().size(), 12);
        let k4 = turan_graph(5, 4).unwrap();
        assert_eq!(k4, complete(4).unwrap());
        assert_eq!(turan_part_sizes(3, 7), vec![3, 2, 2]);
        assert_eq!(turan_part_sizes(5, 4), vec![1, 1, 1, 1, 0]);
    }

    #[test]
    fn complete_minus_edge_degrees() {
        assert_eq!(sorted_degrees(&complete_minus_edge(4).unwrap()), vec![3, 3, 2, 2]);
    }

    #[test]
    fn matching_complement_degrees() {
        let g = matching_complement(6).unwrap();
        assert_eq!(sorted_degrees(&g), vec![5, 5, 4, 4, 4, 4]);
        assert!(matching_complement(5).is_err());
        // Exactly n/2 - 1 missing pairs.
        for n in (2..=20).step_by(2) {
            let g = matching_complement(n).unwrap();
            assert_eq!(n * (n - 1) / 2 - g.size(), n / 2 - 1);
        }
    }

    #[test]
    fn friendship_shape() {
        let f = friendship(2).unwrap();
        assert_eq!(f.order(), 5);
        assert_eq!(f.degree(0), 4);
        assert!((1..5).all(|v| f.degree(v) == 2));
    }

    #[test]
    fn star_and_wheel() {
        assert!(star(1).is_err());
        let s = star(6).unwrap();
        assert_eq!(s.size(), 5);
        let w = wheel(4).unwrap();
        assert_eq!((w.order(), w.size()), (5, 8));
        assert_eq!(degree_profile(&w).max_degree, 4);
    }

    #[test]
    fn bipartite_and_union() {
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.size(), 6);
        let two_triangles = disjoint_union(&complete(3).unwrap(), &complete(3).unwrap());
        assert_eq!((two_triangles.order(), two_triangles.size()), (6, 6));
        assert!(!two_triangles.is_connected());
    }
}
