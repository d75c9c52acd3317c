use proptest::prelude::*;

use starsat::factor::d_factor;
use starsat::graph::{Edge, Graph};
use starsat::independence::{alpha_k_cover_bound, alpha_k_exact, greedy_k_independent_by_degree, DEFAULT_BUDGET};
use starsat::io::{host_hash, parse_edge_list, to_edge_list_string};
use starsat::saturation::{
    check_certificate, construct_upper, greedy_saturated, sat_exact, sat_lower_bound, AlphaSource, IsMethod,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        let text = to_edge_list_string(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(host_hash(&back), host_hash(&g));
        prop_assert_eq!(back, g);
    }

    #[test]
    fn greedy_any_order_is_saturated(g in graph(9), r in 2usize..5, seed in any::<u64>()) {
        let mut order: Vec<Edge> = g.edges().collect();
        // deterministic shuffle from the seed
        let mut x = seed | 1;
        for i in (1..order.len()).rev() {
            x ^= x << 13; x ^= x >> 7; x ^= x << 17;
            order.swap(i, (x % (i as u64 + 1)) as usize);
        }
        let cert = greedy_saturated(&g, r, &order).unwrap();
        prop_assert!(cert.is_valid());
    }

    #[test]
    fn whole_host_valid_iff_star_free(g in graph(9), r in 2usize..5) {
        let all: Vec<Edge> = g.edges().collect();
        let cert = check_certificate(&all, &g, r).unwrap();
        prop_assert_eq!(cert.is_valid(), g.max_degree() < r);
    }

    #[test]
    fn sandwich(g in graph(8), r in 2usize..4) {
        let lb = sat_lower_bound(&g, r, AlphaSource::Exact, DEFAULT_BUDGET).unwrap();
        let ex = sat_exact(&g, r, DEFAULT_BUDGET).unwrap();
        let up = construct_upper(&g, r, IsMethod::Exact, DEFAULT_BUDGET).unwrap();
        prop_assert!(ex.exact && ex.certificate.is_valid() && up.certificate.is_valid());
        prop_assert!(lb.ceiled <= ex.value as u64);
        prop_assert!(ex.value <= up.upper);
        if up.via_factor {
            prop_assert_eq!(2 * up.upper, (g.n() - up.ell_used) * (r - 1));
        }
    }

    #[test]
    fn alpha_between_greedy_and_cover(g in graph(16), k in 0usize..3) {
        let exact = alpha_k_exact(&g, k, DEFAULT_BUDGET);
        prop_assert!(exact.exact);
        prop_assert!(greedy_k_independent_by_degree(&g, k).size() <= exact.witness.size());
        prop_assert!(exact.witness.size() <= alpha_k_cover_bound(&g, k));
    }

    #[test]
    fn factor_output_is_regular(g in graph(14), d in 1usize..4) {
        let f = d_factor(&g, d);
        prop_assert!(f.is_valid_for(&g));
    }
}
