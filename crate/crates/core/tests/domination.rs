use proptest::prelude::*;
use topoidx::functionals::domination_degree;
use topoidx::{generate, random_connected, DominationConfig, Error, FamilySpec, Graph};

/// Minimal dominating sets checked through private neighbours, on `Vec<bool>` subsets.
fn brute_force(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let closed = |v: usize| std::iter::once(v).chain(g.neighbors(v).iter().copied());
    let mut best = vec![usize::MAX; n];
    for code in 0u32..(1 << n) {
        let set: Vec<bool> = (0..n).map(|i| code >> i & 1 == 1).collect();
        let dominated = (0..n).all(|v| closed(v).any(|u| set[u]));
        if !dominated {
            continue;
        }
        let minimal = (0..n).filter(|&s| set[s]).all(|s| {
            closed(s).any(|w| closed(w).filter(|&u| set[u]).count() == 1)
        });
        if !minimal {
            continue;
        }
        let size = set.iter().filter(|&&b| b).count();
        for v in (0..n).filter(|&v| set[v]) {
            best[v] = best[v].min(size);
        }
    }
    best
}

fn graph_from_code(n: usize, code: u32) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &e)| e).collect();
    Graph::new(n, &edges).unwrap()
}

#[test]
fn exhaustive_small_graphs() {
    let cfg = DominationConfig::default();
    for n in 1..=5 {
        for code in 0..1u32 << (n * (n - 1) / 2) {
            let g = graph_from_code(n, code);
            assert_eq!(domination_degree(&g, &cfg).unwrap(), brute_force(&g), "n={n} code={code}");
        }
    }
}

#[test]
fn family_values() {
    let cfg = DominationConfig::default();
    let dd = |s: FamilySpec| domination_degree(&generate(&s).unwrap(), &cfg).unwrap();
    assert_eq!(dd(FamilySpec::complete_bipartite(2, 3)), vec![2; 5]);
    assert_eq!(dd(FamilySpec::double_star(2, 3)), vec![2, 2, 3, 3, 4, 4, 4]);
    assert_eq!(dd(FamilySpec::cycle(6)), vec![2; 6]);
}

#[test]
fn bound_is_enforced() {
    let g = generate(&FamilySpec::path(25)).unwrap();
    let err = domination_degree(&g, &DominationConfig::default()).unwrap_err();
    assert_eq!(err, Error::GraphTooLarge { n: 25, max: 24 });
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn agrees_with_brute_force(n in 2usize..=8, seed in any::<u64>(), p in 0.2f64..0.8) {
        let g = random_connected(n, p, seed);
        let dd = domination_degree(&g, &DominationConfig::default()).unwrap();
        prop_assert_eq!(&dd, &brute_force(&g));
        for (v, &d) in dd.iter().enumerate() {
            prop_assert_eq!(d == 1, g.degree(v) == n - 1);
        }
    }
}
