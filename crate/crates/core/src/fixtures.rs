//! Built-in complexes used by the CLI, the verification suites, and tests.

use crate::complex::{Face, SimplicialComplex};

/// The six-channel marketing complex: flyers (F), stand (S), social (FB),
/// TV, email (E), and search (G), with facets
/// {1,2,3}, {3,4,5}, {3,4,6}, {3,5,6}, {4,5,6}.
pub fn prototype() -> SimplicialComplex {
    SimplicialComplex::from_facets(
        6,
        vec![
            Face::from_members([1, 2, 3]),
            Face::from_members([3, 4, 5]),
            Face::from_members([3, 4, 6]),
            Face::from_members([3, 5, 6]),
            Face::from_members([4, 5, 6]),
        ],
    )
    .unwrap()
    .with_labels(prototype_labels())
    .unwrap()
}

pub fn prototype_labels() -> Vec<String> {
    ["F", "S", "FB", "TV", "E", "G"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

/// Variant of the prototype where the whole channel block {FB,TV,E,G} is
/// trackable as one set: facet sizes 3 and 4, so the complex is not pure.
pub fn prototype_nonpure() -> SimplicialComplex {
    SimplicialComplex::from_facets(
        6,
        vec![
            Face::from_members([1, 2, 3]),
            Face::from_members([3, 4, 5, 6]),
        ],
    )
    .unwrap()
    .with_labels(prototype_labels())
    .unwrap()
}

/// A strip of three triangles {1,2,3}, {2,3,5}, {3,4,5} on five
/// vertices. Pure of rank 3; the base-exchange check decides whether it
/// is a matroid.
pub fn triangle_strip() -> SimplicialComplex {
    SimplicialComplex::from_facets(
        5,
        vec![
            Face::from_members([1, 2, 3]),
            Face::from_members([2, 3, 5]),
            Face::from_members([3, 4, 5]),
        ],
    )
    .unwrap()
}

/// Two triangles {1,2,3}, {3,4,5} glued at vertex 3: pure but not a
/// matroid.
pub fn bowtie() -> SimplicialComplex {
    SimplicialComplex::from_facets(
        5,
        vec![
            Face::from_members([1, 2, 3]),
            Face::from_members([3, 4, 5]),
        ],
    )
    .unwrap()
}

/// The uniform matroid U_{k,n}: facets are all k-subsets of `[n]`.
pub fn uniform_matroid(k: usize, n: usize) -> SimplicialComplex {
    assert!(k <= n && n >= 1);
    let mut facets = Vec::new();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for mask in 0..=full {
        if mask.count_ones() as usize == k {
            facets.push(Face::from_members(
                (0..64).filter(|b| mask & (1u64 << b) != 0).map(|b| b + 1),
            ));
        }
    }
    SimplicialComplex::from_facets(n, facets).unwrap()
}

/// Path complex on k vertices: facets {1,2}, {2,3}, ..., {k-1,k}.
pub fn path_complex(k: usize) -> SimplicialComplex {
    assert!(k >= 2);
    let facets = (1..k as u32).map(|i| Face::from_members([i, i + 1]));
    SimplicialComplex::from_facets(k, facets).unwrap()
}

/// The cycle matroid of a graph: ground set elements are edges, faces are
/// acyclic edge subsets, facets the spanning forests.
pub fn graphic_matroid(vertex_count: usize, edges: &[(u32, u32)]) -> SimplicialComplex {
    assert!(!edges.is_empty() && edges.len() <= 64);
    let n = edges.len();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut maximal_forests = Vec::new();
    for mask in 0..=full {
        if is_forest(vertex_count, edges, mask) {
            maximal_forests.push(Face::from_members(
                (0..n as u32).filter(|b| mask & (1u64 << b) != 0).map(|b| b + 1),
            ));
        }
    }
    SimplicialComplex::from_facets(n, maximal_forests).unwrap()
}

fn is_forest(vertex_count: usize, edges: &[(u32, u32)], mask: u64) -> bool {
    let mut parent: Vec<usize> = (0..vertex_count).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for (idx, &(a, b)) in edges.iter().enumerate() {
        if mask & (1u64 << idx) == 0 {
            continue;
        }
        let (ra, rb) = (
            find(&mut parent, a as usize - 1),
            find(&mut parent, b as usize - 1),
        );
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// The graphic matroid of the triangle graph: three edges, bases are the
/// two-edge spanning trees.
pub fn triangle_graphic_matroid() -> SimplicialComplex {
    graphic_matroid(3, &[(1, 2), (1, 3), (2, 3)])
}
