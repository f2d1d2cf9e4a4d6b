use crate::element::ElementSet;

use super::{Matroid, MatroidError};

/// Cycle matroid of a multigraph. Element `i` is `edges[i]`; an edge set is
/// independent iff it is a forest. Self-loops are matroid loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicMatroid {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphicMatroid {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, MatroidError> {
        if let Some((i, &(u, v))) = edges
            .iter()
            .enumerate()
            .find(|(_, &(u, v))| u >= vertex_count || v >= vertex_count)
        {
            return Err(MatroidError::Invalid(format!(
                "edges: edge {i} = ({u}, {v}) has an endpoint outside [0, {vertex_count})"
            )));
        }
        Ok(Self { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

impl Matroid for GraphicMatroid {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        if set.len() >= self.vertex_count.max(1) {
            return set.is_empty();
        }
        let mut dsu = DisjointSet::new(self.vertex_count);
        set.iter().all(|e| {
            let (u, v) = self.edges[e];
            dsu.union(u, v)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Dependent iff some nonempty edge subset has every vertex of even degree.
    fn has_even_subgraph(m: &GraphicMatroid, set: &ElementSet) -> bool {
        let ids = set.to_vec();
        (1u32..1 << ids.len()).any(|mask| {
            let mut degree = vec![0usize; m.vertex_count()];
            for (bit, &e) in ids.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    let (u, v) = m.edges()[e];
                    degree[u] += 1;
                    degree[v] += 1;
                }
            }
            degree.iter().all(|d| d % 2 == 0)
        })
    }

    #[test]
    fn loops_and_parallel_edges() {
        let m = GraphicMatroid::new(2, vec![(0, 0), (0, 1), (1, 0)]).unwrap();
        assert!(!m.is_independent(&[0].into_iter().collect()));
        assert!(m.is_independent(&[1].into_iter().collect()));
        assert!(!m.is_independent(&[1, 2].into_iter().collect()));
    }

    #[test]
    fn rejects_bad_endpoint() {
        assert!(GraphicMatroid::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn agrees_with_even_subgraph_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let vertices = rng.gen_range(1..6);
            let n = rng.gen_range(0..=10);
            let edges = (0..n)
                .map(|_| (rng.gen_range(0..vertices), rng.gen_range(0..vertices)))
                .collect();
            let m = GraphicMatroid::new(vertices, edges).unwrap();
            for mask in 0u32..1 << n {
                let set: ElementSet = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                assert_eq!(m.is_independent(&set), !has_even_subgraph(&m, &set), "{set:?}");
            }
        }
    }
}
