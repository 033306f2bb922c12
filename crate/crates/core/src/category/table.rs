//! Shared plumbing for models whose morphisms are finite lookup tables.
//!
//! During a hom-set search a table may hold [`UNKNOWN`] entries. Table
//! operations propagate them, so a predicate built from composition and
//! tensoring can reject a partial table as soon as two known entries clash.

/// Image of an element on which a partial function is undefined.
pub const UNDEF: usize = usize::MAX;
/// Image not yet chosen by a search.
pub const UNKNOWN: usize = usize::MAX - 1;

#[inline]
pub fn is_value(v: usize) -> bool {
    v < UNKNOWN
}

/// `g∘f` on tables; undefined and unknown entries propagate.
pub fn compose_tables(g: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter()
        .map(|&y| if is_value(y) { g[y] } else { y })
        .collect()
}

/// Entrywise agreement, ignoring positions unknown on either side.
pub fn tables_agree(f: &[usize], g: &[usize]) -> bool {
    f.len() == g.len()
        && f
            .iter()
            .zip(g)
            .all(|(&a, &b)| a == UNKNOWN || b == UNKNOWN || a == b)
}

/// Depth-first search over tables with `n` entries.
///
/// Entries are assigned in `order`; `candidates(table, i)` lists the values
/// allowed at entry `i` given the entries assigned so far, and `keep` may
/// prune a partial table. Complete tables surviving `keep` are returned in
/// lexicographic order of the assignment sequence.
pub fn search_tables(
    n: usize,
    order: &[usize],
    candidates: &dyn Fn(&[usize], usize) -> Vec<usize>,
    keep: &dyn Fn(&[usize]) -> bool,
) -> Vec<Vec<usize>> {
    debug_assert_eq!(order.len(), n);
    let mut table = vec![UNKNOWN; n];
    let mut out = Vec::new();
    if keep(&table) {
        go(0, order, &mut table, candidates, keep, &mut out);
    }
    out
}

fn go(
    depth: usize,
    order: &[usize],
    table: &mut Vec<usize>,
    candidates: &dyn Fn(&[usize], usize) -> Vec<usize>,
    keep: &dyn Fn(&[usize]) -> bool,
    out: &mut Vec<Vec<usize>>,
) {
    if depth == order.len() {
        out.push(table.clone());
        return;
    }
    let i = order[depth];
    for v in candidates(table, i) {
        table[i] = v;
        if keep(table) {
            go(depth + 1, order, table, candidates, keep, out);
        }
    }
    table[i] = UNKNOWN;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn search_without_pruning_lists_all_functions() {
        let all = search_tables(2, &[0, 1], &|_, _| vec![0, 1, 2], &|_| true);
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[8], vec![2, 2]);
    }

    #[test]
    fn pruning_sees_partial_tables() {
        // injective maps 3 -> 3
        let all = search_tables(3, &[0, 1, 2], &|_, _| vec![0, 1, 2], &|t| {
            let vals: Vec<_> = t.iter().filter(|&&v| is_value(v)).collect();
            let mut dedup = vals.clone();
            dedup.sort();
            dedup.dedup();
            dedup.len() == vals.len()
        });
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn unknown_propagates_through_composition() {
        let f = vec![1, UNKNOWN, UNDEF];
        let g = vec![2, UNKNOWN];
        assert_eq!(compose_tables(&g, &f), vec![UNKNOWN, UNKNOWN, UNDEF]);
        assert!(tables_agree(&[0, UNKNOWN], &[0, 1]));
        assert!(!tables_agree(&[0, UNDEF], &[0, 1]));
    }
}
