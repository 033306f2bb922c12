use proptest::prelude::*;

use tracedcat::category::{compact_trace, Model};
use tracedcat::formats::{parse_group, parse_matrix, parse_pfn, parse_poset, parse_rational};
use tracedcat::group::GroupTable;
use tracedcat::laws::{check_conway_axioms, check_trace_axioms};
use tracedcat::model_iter::{pfn_model, SetObj};
use tracedcat::model_linear::{fmt_q, partial_trace, q_frac, Dim, Mat, RatMatrix, Q};
use tracedcat::model_order::{clamp, fincppo_model, n_monad, pointwise_model, IntObj};
use tracedcat::CaseBudget;

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    proptest::collection::vec((-3i64..=3, 1i64..=3), rows * cols).prop_map(move |v| {
        let dense: Vec<Vec<Q>> = v.chunks(cols.max(1)).take(rows).map(|r| r.iter().map(|&(n, d)| q_frac(n, d)).collect()).collect();
        let dense = if cols == 0 { vec![vec![]; rows] } else { dense };
        RatMatrix::from_dense(rows, cols, &dense)
    })
}

fn trace_input() -> impl Strategy<Value = (usize, usize, usize, RatMatrix)> {
    (1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(|(x, a, b)| small_matrix(b * x, a * x).prop_map(move |f| (x, a, b, f)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn index_sum_trace_is_the_compact_composite((x, a, b, f) in trace_input()) {
        let m = Mat::new();
        prop_assert_eq!(
            partial_trace(x, a, b, &f).unwrap(),
            compact_trace(&m, &Dim(x), &Dim(a), &Dim(b), &f).unwrap()
        );
    }

    #[test]
    fn trace_axioms_hold_for_any_seed(seed in any::<u64>()) {
        let b = CaseBudget::new(seed).cases(4).max_size(3);
        prop_assert!(check_trace_axioms(&Mat::new(), &b).passed());
        prop_assert!(check_trace_axioms(&fincppo_model(), &b).passed());
        prop_assert!(check_conway_axioms(&fincppo_model(), &b).passed());
        prop_assert!(check_trace_axioms(&pointwise_model(), &b).passed());
        prop_assert!(check_trace_axioms(&pfn_model(), &b).passed());
    }

    #[test]
    fn clamp_is_idempotent_and_monotone(a in -50i64..50, b in -50i64..50) {
        let (ca, cb) = (clamp(&IntObj::new(a)), clamp(&IntObj::new(b)));
        prop_assert_eq!(clamp(&ca), ca.clone());
        prop_assert!(a > b || ca.0 <= cb.0);
        let n = n_monad();
        prop_assert_eq!(n.t(&tracedcat::model_order::int_poset_model(), &IntObj::new(a)), ca);
    }

    #[test]
    fn rationals_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let v = q_frac(n, d);
        prop_assert_eq!(parse_rational(&fmt_q(&v)).unwrap(), v);
    }

    #[test]
    fn matrices_round_trip(m in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| small_matrix(r, c))) {
        let text: String = m
            .to_dense()
            .iter()
            .map(|row| row.iter().map(fmt_q).collect::<Vec<_>>().join(" ") + "\n")
            .collect();
        prop_assert_eq!(parse_matrix(&text).unwrap(), m);
    }

    /// Any set of pairs `i < j` is the cover set of a poset; the parsed
    /// order is its reflexive-transitive closure.
    #[test]
    fn posets_close_transitively(n in 1usize..=6, pairs in proptest::collection::vec((0usize..6, 0usize..6), 0..10)) {
        let pairs: Vec<(usize, usize)> = pairs.into_iter().filter(|&(i, j)| i < j && j < n).collect();
        let mut text = format!("elements: {}\n", (0..n).map(|i| format!("p{i}")).collect::<Vec<_>>().join(" "));
        for (i, j) in &pairs {
            text.push_str(&format!("le: p{i} p{j}\n"));
        }
        let p = parse_poset("P", &text).unwrap();
        let mut reach = vec![vec![false; n]; n];
        for (i, row) in reach.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in &pairs {
            reach[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if reach[i][k] && reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(p.leq(i, j), reach[i][j]);
            }
        }
    }

    #[test]
    fn cyclic_tables_round_trip(n in 1usize..=7) {
        let g = GroupTable::cyclic(n);
        let mut text = format!("elements: {}\n", (0..n).map(|i| format!("r{i}")).collect::<Vec<_>>().join(" "));
        for a in 0..n {
            for b in 0..n {
                text.push_str(&format!("mul: r{a} r{b} r{}\n", g.mul(a, b)));
            }
        }
        let parsed = parse_group(&text).unwrap();
        for a in 0..n {
            for b in 0..n {
                prop_assert_eq!(parsed.mul(a, b), g.mul(a, b));
            }
        }
    }

    #[test]
    fn partial_functions_round_trip(table in proptest::collection::vec(proptest::option::of(0usize..3), 3)) {
        let (dom, cod) = (SetObj::range(3), SetObj::range(3));
        let text = table
            .iter()
            .enumerate()
            .map(|(i, y)| format!("{i} -> {}", y.map_or("undef".to_string(), |y| y.to_string())))
            .collect::<Vec<_>>()
            .join(", ");
        let f = parse_pfn(&dom, &cod, &text).unwrap();
        for (i, y) in table.iter().enumerate() {
            prop_assert_eq!(f.at(&i.to_string()), y.map(|y| y.to_string()));
        }
        let m = pfn_model();
        prop_assert_eq!(m.compose(&m.identity(&cod), &f).unwrap(), f.clone());
    }
}
