//! Cross-module sweeps: the closed forms, the table, and the enumeration
//! oracle must agree everywhere they overlap.

use num_bigint::BigUint;

use dyck_squares::catalan::{
    self, catalan_from_binomial_difference, catalan_from_factorials, column_term,
};
use dyck_squares::oracle::{self, Symbol};
use dyck_squares::triangle::{NodeCoord, TriangleTable};

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

#[test]
fn mirror_property_up_to_twelve() {
    let table = TriangleTable::build(24).unwrap();
    for n in 0..=12usize {
        for (node, label) in table.nodes() {
            if node.i > 2 * n {
                continue;
            }
            let mirror = NodeCoord::new(2 * n - node.i, node.j);
            assert_eq!(
                table.reverse_dynamics(n, mirror).unwrap(),
                *label,
                "n = {n}, node = ({}, {})",
                node.i,
                node.j
            );
        }
    }
}

#[test]
fn column_sums_of_path_products_equal_catalan_up_to_twelve() {
    let table = TriangleTable::build(24).unwrap();
    for n in 0..=12usize {
        let expected = catalan::catalan(n).unwrap();
        for i in 0..=2 * n {
            let mut sum = big(0);
            for k in 0..=i / 2 {
                sum += table
                    .paths_through(n, NodeCoord::new(i, i - 2 * k))
                    .unwrap();
            }
            assert_eq!(sum, expected, "n = {n}, column {i}");
        }
    }
}

/// Count nonnegative ±1 walks of length `i` ending at height `j`, by trying
/// all 2^i step sequences.
fn brute_force_walks(i: usize) -> Vec<u64> {
    let mut counts = vec![0u64; i + 1];
    'mask: for mask in 0u32..(1 << i) {
        let mut height = 0i64;
        for step in 0..i {
            height += if mask & (1 << step) != 0 { 1 } else { -1 };
            if height < 0 {
                continue 'mask;
            }
        }
        counts[height as usize] += 1;
    }
    counts
}

#[test]
fn dynamics_counts_nonnegative_prefix_walks() {
    let table = TriangleTable::build(14).unwrap();
    for i in 0..=14usize {
        for (j, &walks) in brute_force_walks(i).iter().enumerate() {
            assert_eq!(
                table.dynamics(NodeCoord::new(i, j)).unwrap(),
                big(walks),
                "node ({i}, {j})"
            );
        }
    }
}

#[test]
fn enumeration_count_matches_catalan_up_to_twelve() {
    for n in 0..=12usize {
        let count = oracle::enumerate(n).unwrap().count();
        assert_eq!(big(count as u64), catalan::catalan(n).unwrap(), "n = {n}");
    }
}

#[test]
fn enumeration_count_at_the_default_cap() {
    let count = oracle::enumerate(oracle::DEFAULT_ORACLE_CAP)
        .unwrap()
        .count();
    assert_eq!(count, 2_674_440);
}

#[test]
fn enumeration_is_strictly_increasing_and_valid() {
    for n in 0..=8usize {
        let words: Vec<_> = oracle::enumerate(n).unwrap().collect();
        for word in &words {
            assert!(oracle::validate(word.symbols()), "{word}");
            assert_eq!(word.semilength(), n);
        }
        for pair in words.windows(2) {
            assert!(
                pair[0] < pair[1],
                "order broke between {} and {}",
                pair[0],
                pair[1]
            );
        }
    }
}

#[test]
fn three_catalan_routes_agree_up_to_five_hundred() {
    // running factorials keep the quotient route cheap over the whole sweep
    let mut fact_2n = big(1);
    let mut fact_n = big(1);
    let mut fact_n1 = big(1);
    for n in 0..=500usize {
        let quotient = &fact_2n / (&fact_n * &fact_n1);
        let production = catalan::catalan(n).unwrap();
        assert_eq!(production, quotient, "factorial quotient at {n}");
        assert_eq!(
            production,
            catalan_from_binomial_difference(n),
            "binomial difference at {n}"
        );
        fact_2n *= (2 * n + 1) * (2 * n + 2);
        fact_n *= n + 1;
        fact_n1 *= n + 2;
    }
    // the standalone factorial route recomputes from scratch; spot-check it
    for n in [0usize, 1, 7, 64, 500] {
        assert_eq!(catalan::catalan(n).unwrap(), catalan_from_factorials(n));
    }
}

#[test]
fn column_term_specializations() {
    for n in 4..=50usize {
        assert_eq!(
            column_term(n, 2).unwrap(),
            big((n * (n - 3) / 2) as u64),
            "t({n}, 2)"
        );
        if n >= 6 {
            assert_eq!(
                column_term(n, 3).unwrap(),
                big((n * (n - 1) * (n - 5) / 6) as u64),
                "t({n}, 3)"
            );
        }
        if n >= 8 {
            assert_eq!(
                column_term(n, 4).unwrap(),
                big((n * (n - 1) * (n - 2) * (n - 7) / 24) as u64),
                "t({n}, 4)"
            );
        }
    }
}

#[test]
fn tail_term_is_catalan_of_half_rounded_up() {
    for n in 0..=200usize {
        assert_eq!(
            column_term(n, n / 2).unwrap(),
            catalan::catalan(n.div_ceil(2)).unwrap(),
            "n = {n}"
        );
    }
}

/// For k >= 1 the column term also equals
/// n(n-1)...(n-k+2) * (n-2k+1) / k!, a product of k-1 descending factors.
#[test]
fn descending_product_form_matches_column_terms() {
    for n in 2..=60usize {
        for k in 1..=n / 2 {
            let mut numerator = big((n - 2 * k + 1) as u64);
            for m in 0..k - 1 {
                numerator *= n - m;
            }
            let mut k_factorial = big(1);
            for m in 2..=k {
                k_factorial *= m;
            }
            assert_eq!(
                column_term(n, k).unwrap() * k_factorial,
                numerator,
                "n = {n}, k = {k}"
            );
        }
    }
}

#[test]
fn histogram_squares_match_the_closed_form_terms() {
    for n in 0..=10usize {
        let histogram = oracle::midpoint_histogram(n).unwrap();
        let total: BigUint = histogram.values().sum();
        assert_eq!(total, catalan::catalan(n).unwrap(), "total at {n}");
        for k in 0..=n / 2 {
            let term = column_term(n, k).unwrap();
            assert_eq!(histogram[&(n - 2 * k)], &term * &term, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn ballot_numbers_sit_on_the_table_nodes() {
    // the identity chain d(i, j) = c((i+j)/2, j) = binom(i, k) - binom(i, k-1)
    let table = TriangleTable::build(100).unwrap();
    for (node, label) in table.nodes() {
        assert_eq!(
            catalan::ballot((node.i + node.j) / 2, node.j),
            *label,
            "node ({}, {})",
            node.i,
            node.j
        );
    }
}

#[test]
fn profiles_satisfy_their_contract() {
    for n in 0..=5usize {
        for word in oracle::enumerate(n).unwrap() {
            let profile = word.unbalance_profile();
            let values = profile.values();
            assert_eq!(values.len(), 2 * n + 1);
            assert_eq!(values[0], 0);
            assert_eq!(values[2 * n], 0);
            assert_eq!(profile.midpoint(), values[n]);
            for (p, pair) in values.windows(2).enumerate() {
                assert_eq!(pair[0].abs_diff(pair[1]), 1);
                assert!(pair[1] <= p + 1);
            }
        }
    }
}

#[test]
fn catalan_sits_on_the_triangle_floor() {
    let table = TriangleTable::build(60).unwrap();
    for i in 0..=30usize {
        let c = catalan::catalan(i).unwrap();
        assert_eq!(table.dynamics(NodeCoord::new(2 * i, 0)).unwrap(), c);
        if i >= 1 {
            assert_eq!(table.dynamics(NodeCoord::new(2 * i - 1, 1)).unwrap(), c);
        }
    }
}

#[test]
fn shared_types_are_send_and_sync() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<TriangleTable>();
    assert_send_sync::<oracle::DyckWords>();
    assert_send_sync::<oracle::DyckWord>();
    assert_send_sync::<catalan::Decomposition>();
    assert_send_sync::<catalan::ConvolutionMatrix>();
}

#[test]
fn enumeration_streams_from_any_thread() {
    let handles: Vec<_> = (4..=7usize)
        .map(|n| {
            std::thread::spawn(move || {
                let count = oracle::enumerate(n).unwrap().count() as u64;
                (n, count)
            })
        })
        .collect();
    for handle in handles {
        let (n, count) = handle.join().unwrap();
        assert_eq!(big(count), catalan::catalan(n).unwrap());
    }
}

#[test]
fn words_agree_with_symbol_level_validation() {
    // a word built from raw symbols round-trips through both rule checks
    let word = oracle::enumerate(5).unwrap().nth(17).unwrap();
    assert!(oracle::validate(word.symbols()));
    assert!(oracle::validate_by_positions(word.symbols()));
    assert_eq!(
        word.symbols()
            .iter()
            .filter(|&&s| s == Symbol::Left)
            .count(),
        5
    );
}
