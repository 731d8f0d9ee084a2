//! Eulerian trails: plain, antidirected and with forbidden transitions.

mod graph;
mod trails;

pub use graph::{
    reverse_trail, AnyGraph, Dir, EdgeId, End, MultiDigraph, MultiGraph, PartitionSystem, Step, Trail, VertexId,
};
pub use trails::{antidirected_eulerian, eulerian_path, ft_antidirected_eulerian, ft_eulerian, split};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{trail_satisfies, EulerMode, EulerQuery};

    fn plain(g: &MultiGraph, t: &Trail) -> bool {
        trail_satisfies(AnyGraph::Undirected(g), t, EulerQuery::paths(EulerMode::Plain)).unwrap()
    }

    #[test]
    fn small_plain_cases() {
        let path = MultiGraph::with_edges(3, &[(0, 1), (1, 2)]);
        let t = eulerian_path(&path).unwrap();
        assert_eq!(t.len(), 2);
        assert!(plain(&path, &t));
        let star = MultiGraph::with_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(eulerian_path(&star).is_none());
        let tri = MultiGraph::with_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        let t = eulerian_path(&tri).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(tri.step_endpoints(t[0]).0, tri.step_endpoints(t[2]).1);
    }

    #[test]
    fn loops_and_parallel_edges() {
        let g = MultiGraph::with_edges(2, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        let t = eulerian_path(&g).unwrap();
        assert!(plain(&g, &t));
    }

    #[test]
    fn split_keeps_edge_ids() {
        assert_eq!(split(&MultiDigraph::with_edges(2, &[(0, 1)])).edges, vec![(0, 3)]);
        let empty = split(&MultiDigraph::new(3));
        assert_eq!((empty.vertex_count, empty.edges.len()), (6, 0));
        let h = split(&MultiDigraph::with_edges(3, &[(0, 1), (2, 1)]));
        assert_eq!(h.edges, vec![(0, 3), (4, 3)]);
        assert_eq!(h.degrees()[3], 2);
    }

    #[test]
    fn antidirected_examples() {
        let v = MultiDigraph::with_edges(3, &[(0, 1), (2, 1)]);
        let t = antidirected_eulerian(&v, None, None).unwrap();
        assert_eq!(t.len(), 2);
        assert_ne!(t[0].dir, t[1].dir);
        let chain = MultiDigraph::with_edges(3, &[(0, 1), (1, 2)]);
        assert!(antidirected_eulerian(&chain, None, None).is_none());
        let one = MultiDigraph::with_edges(2, &[(0, 1)]);
        assert_eq!(antidirected_eulerian(&one, Some(Dir::Backward), None).unwrap(), vec![Step::new(0, Dir::Backward)]);
    }

    #[test]
    fn ft_examples() {
        let sq = MultiGraph::with_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let single = PartitionSystem::singletons(4, &sq.edges);
        assert!(ft_eulerian(&sq, &single, true).unwrap().is_some());
        let lumped = PartitionSystem { groups: vec![vec![vec![0, 3]], vec![vec![0, 1]], vec![vec![1, 2]], vec![vec![2, 3]]] };
        assert!(ft_eulerian(&sq, &lumped, true).unwrap().is_none());
        // Bowtie at vertex 0: triangles {0,1,2} and {0,3,4}.
        let bow = MultiGraph::with_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        let mut p = PartitionSystem::singletons(5, &bow.edges);
        p.groups[0] = vec![vec![0, 2], vec![3, 5]];
        let t = ft_eulerian(&bow, &p, true).unwrap().unwrap();
        let q = EulerQuery { mode: EulerMode::ForbiddenTransition(&p), closed: true, start_dir: None, end_dir: None };
        assert!(trail_satisfies(AnyGraph::Undirected(&bow), &t, q).unwrap());
    }

    #[test]
    fn open_trail_tolerates_one_oversized_group_at_its_endpoint() {
        let bow = MultiGraph::with_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        let mut p = PartitionSystem::singletons(5, &bow.edges);
        p.groups[0] = vec![vec![0, 2, 3], vec![5]];
        assert!(ft_eulerian(&bow, &p, true).unwrap().is_none());
        let t = ft_eulerian(&bow, &p, false).unwrap().unwrap();
        let q = EulerQuery::paths(EulerMode::ForbiddenTransition(&p));
        assert!(trail_satisfies(AnyGraph::Undirected(&bow), &t, q).unwrap());
    }

    #[test]
    fn bad_partition_is_rejected() {
        let g = MultiGraph::with_edges(2, &[(0, 1)]);
        let p = PartitionSystem { groups: vec![vec![vec![0]], vec![]] };
        assert!(ft_eulerian(&g, &p, false).is_err());
    }
}
