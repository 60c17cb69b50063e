mod common;

use gpf_core::classical::{
    park_simulate, parking_to_dyck, tree_from_dyck, tree_from_spot_rule, DyckStep, LabeledDyckPath,
};
use gpf_core::parking::candidate_box;
use gpf_core::{enumerate_parking_functions, is_parking_burning, phi, Multigraph, OrderPolicy, ParkingCandidate};

#[test]
fn parking_process_matches_complete_graph_membership() {
    for n in 1..=5 {
        let g = Multigraph::complete(n);
        for b in candidate_box(&g) {
            assert_eq!(park_simulate(&b).success, is_parking_burning(&g, &b).unwrap().accepted, "{b}");
        }
    }
}

#[test]
fn successful_parking_fills_every_spot() {
    for b in enumerate_parking_functions(&Multigraph::complete(4)) {
        let mut spots = park_simulate(&b).spot_of_driver;
        spots.sort_unstable();
        assert_eq!(spots, vec![0, 1, 2, 3]);
    }
}

#[test]
fn spot_rule_is_phi_under_vertex_adding() {
    for n in [3, 4] {
        let g = Multigraph::complete(n);
        for b in enumerate_parking_functions(&g) {
            let (want, _) = phi(&g, &b, &OrderPolicy::VertexAdding).unwrap();
            assert_eq!(tree_from_spot_rule(&b).unwrap(), want, "{b}");
        }
    }
}

#[test]
fn dyck_tree_is_phi_under_right_to_left_depth_first() {
    for n in [3, 4] {
        let g = Multigraph::complete(n);
        for b in enumerate_parking_functions(&g) {
            let d = parking_to_dyck(&b).unwrap();
            assert_eq!(d.to_parking(), b);
            assert_eq!(d.to_string().parse::<LabeledDyckPath>().unwrap(), d);
            let (want, _) = phi(&g, &b, &OrderPolicy::DepthFirstRtl).unwrap();
            assert_eq!(tree_from_dyck(&d).unwrap(), want, "{b} -> {d}");
        }
    }
}

/// Whether the rows of `b` stay weakly above the diagonal, checked without
/// building a path: at least `k` drivers prefer spots below `k`.
fn row_counts_above_diagonal(b: &ParkingCandidate) -> bool {
    (1..=b.len()).all(|k| b.values().iter().filter(|&&x| x < k).count() >= k)
}

#[test]
fn dyck_encoding_exists_exactly_for_parking_functions() {
    for n in 1..=4 {
        let g = Multigraph::complete(n);
        let all = (0..n.pow(n as u32)).map(|mut code| {
            let v: Vec<usize> = (0..n)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            ParkingCandidate::new(v)
        });
        for b in all {
            let parking = is_parking_burning(&g, &b).unwrap().accepted;
            assert_eq!(parking_to_dyck(&b).is_ok(), parking, "{b}");
            assert_eq!(row_counts_above_diagonal(&b), parking, "{b}");
        }
    }
}

#[test]
fn permutations_alternate_steps() {
    for perm in common::permutations(&[0, 1, 2, 3]) {
        let b = ParkingCandidate::new(perm);
        let d = parking_to_dyck(&b).unwrap();
        for (k, step) in d.steps().iter().enumerate() {
            assert_eq!(matches!(step, DyckStep::North), k % 2 == 1, "{d}");
        }
    }
}
