//! Text formats for posets, group tables, matrices, label sets and
//! partial functions. Blank lines and `#` comments are ignored; errors
//! carry 1-based line numbers.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::category::table::UNDEF;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::model_iter::{FinLabelSet, PartialFn, SetObj};
use crate::model_linear::{Q, RatMatrix};
use crate::model_order::FinPoset;

/// Largest carrier a file may declare.
pub const MAX_ELEMENTS: usize = 64;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Splits `key: a b c` into the words after the key.
fn directive<'a>(line: usize, text: &'a str, key: &str) -> Result<Vec<&'a str>> {
    let rest = text
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix(':'))
        .ok_or_else(|| Error::parse(line, format!("expected `{key}: ...`, found `{text}`")))?;
    Ok(rest.split_whitespace().collect())
}

fn elements_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<(usize, Vec<String>)> {
    let (line, text) = lines.next().ok_or_else(|| Error::parse(1, "empty file"))?;
    let names = directive(line, text, "elements")?;
    if names.is_empty() {
        return Err(Error::parse(line, "no elements declared"));
    }
    if names.len() > MAX_ELEMENTS {
        return Err(Error::parse(line, format!("{} elements, at most {MAX_ELEMENTS} allowed", names.len())));
    }
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(Error::parse(line, format!("element `{n}` declared twice")));
        }
    }
    Ok((line, names.into_iter().map(String::from).collect()))
}

fn lookup(line: usize, names: &[String], x: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == x)
        .ok_or_else(|| Error::parse(line, format!("unknown element `{x}`")))
}

/// `elements: a b ...` then `le: x y` lines. The relation is closed
/// reflexively and transitively; a line that makes two distinct elements
/// mutually related is rejected.
pub fn parse_poset(name: &str, text: &str) -> Result<FinPoset> {
    let mut lines = content_lines(text);
    let (_, labels) = elements_header(&mut lines)?;
    let n = labels.len();
    let mut leq: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    for (line, text) in lines {
        let words = directive(line, text, "le")?;
        let [x, y] = words[..] else {
            return Err(Error::parse(line, format!("`le` takes two elements, found {}", words.len())));
        };
        let (x, y) = (lookup(line, &labels, x)?, lookup(line, &labels, y)?);
        if x != y && leq[y][x] {
            return Err(Error::parse(
                line,
                format!("antisymmetry: {} ≤ {} and {} ≤ {}", labels[x], labels[y], labels[y], labels[x]),
            ));
        }
        let below: Vec<usize> = (0..n).filter(|&a| leq[a][x]).collect();
        let above: Vec<usize> = (0..n).filter(|&b| leq[y][b]).collect();
        for &a in &below {
            for &b in &above {
                leq[a][b] = true;
            }
        }
    }
    FinPoset::new(name, labels, leq)
}

/// `elements: e g ...` then `mul: x y z` lines meaning `x·y = z`. Every
/// product must be given exactly once; the group axioms are validated.
pub fn parse_group(text: &str) -> Result<GroupTable> {
    let mut lines = content_lines(text);
    let (header, names) = elements_header(&mut lines)?;
    let n = names.len();
    let mut table = vec![vec![None::<usize>; n]; n];
    let mut last = header;
    for (line, text) in lines {
        last = line;
        let words = directive(line, text, "mul")?;
        let [x, y, z] = words[..] else {
            return Err(Error::parse(line, format!("`mul` takes three elements, found {}", words.len())));
        };
        let (x, y, z) = (lookup(line, &names, x)?, lookup(line, &names, y)?, lookup(line, &names, z)?);
        if let Some(prev) = table[x][y] {
            return Err(Error::parse(
                line,
                format!("{}·{} already given as {}", names[x], names[y], names[prev]),
            ));
        }
        table[x][y] = Some(z);
    }
    let mut full = Vec::with_capacity(n);
    for (x, row) in table.iter().enumerate() {
        let mut out = Vec::with_capacity(n);
        for (y, v) in row.iter().enumerate() {
            out.push(v.ok_or_else(|| Error::parse(last, format!("missing product {}·{}", names[x], names[y])))?);
        }
        full.push(out);
    }
    GroupTable::new(names, full)
}

/// An integer or `p/q`.
pub fn parse_rational(s: &str) -> std::result::Result<Q, String> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| format!("bad numerator in `{s}`"))?;
    let q: BigInt = q.parse().map_err(|_| format!("bad denominator in `{s}`"))?;
    if q.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Q::new(p, q))
}

/// Dense rows of rationals, one row per line.
pub fn parse_matrix(text: &str) -> Result<RatMatrix> {
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (line, text) in content_lines(text) {
        let row = text
            .split_whitespace()
            .map(|w| parse_rational(w).map_err(|m| Error::parse(line, m)))
            .collect::<Result<Vec<Q>>>()?;
        if row.len() > MAX_ELEMENTS {
            return Err(Error::parse(line, format!("{} columns, at most {MAX_ELEMENTS} allowed", row.len())));
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::parse(line, format!("{} entries, expected {}", row.len(), first.len())));
            }
        }
        rows.push(row);
        if rows.len() > MAX_ELEMENTS {
            return Err(Error::parse(line, format!("more than {MAX_ELEMENTS} rows")));
        }
    }
    let cols = rows.first().map_or(0, Vec::len);
    Ok(RatMatrix::from_dense(rows.len(), cols, &rows))
}

/// `name: a b c`.
pub fn parse_label_set(text: &str) -> Result<FinLabelSet> {
    let (line, text) = content_lines(text).next().ok_or_else(|| Error::parse(1, "empty label set"))?;
    let (name, rest) = text
        .split_once(':')
        .ok_or_else(|| Error::parse(line, "expected `name: label ...`"))?;
    let name = name.trim();
    if name.is_empty() {
        return Err(Error::parse(line, "missing set name"));
    }
    let labels: Vec<String> = rest.split_whitespace().map(String::from).collect();
    if labels.len() > MAX_ELEMENTS {
        return Err(Error::parse(line, format!("{} labels, at most {MAX_ELEMENTS} allowed", labels.len())));
    }
    FinLabelSet::new(name, labels).map_err(|e| Error::parse(line, e.to_string()))
}

/// Comma-separated `x -> y` entries; `x -> undef` and unlisted inputs are
/// undefined.
pub fn parse_pfn(dom: &SetObj, cod: &SetObj, text: &str) -> Result<PartialFn> {
    let mut table = vec![UNDEF; dom.size()];
    let mut given = vec![false; dom.size()];
    for (line, text) in content_lines(text) {
        for entry in text.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (x, y) = entry
                .split_once("->")
                .ok_or_else(|| Error::parse(line, format!("expected `x -> y`, found `{entry}`")))?;
            let (x, y) = (x.trim(), y.trim());
            let i = dom
                .element(x)
                .ok_or_else(|| Error::parse(line, format!("`{x}` is not in {dom:?}")))?;
            if given[i] {
                return Err(Error::parse(line, format!("`{x}` mapped twice")));
            }
            given[i] = true;
            if y != "undef" {
                table[i] = cod
                    .element(y)
                    .ok_or_else(|| Error::parse(line, format!("`{y}` is not in {cod:?}")))?;
            }
        }
    }
    PartialFn::new(dom.clone(), cod.clone(), table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model_linear::q;

    #[test]
    fn sigma_file() {
        let p = parse_poset("Σ", "elements: bot top\nle: bot top\n").unwrap();
        assert!(p.has_bottom && p.has_top);
        assert_eq!(p.size(), 2);
    }

    #[test]
    fn closure_and_antisymmetry() {
        let p = parse_poset("C3", "elements: a b c\nle: a b\nle: b c\n").unwrap();
        assert!(p.leq(0, 2));
        let e = parse_poset("bad", "elements: a b c\nle: a b\nle: b c\n\nle: c a\n").unwrap_err();
        assert_eq!(e, Error::parse(5, "antisymmetry: c ≤ a and a ≤ c"));
    }

    #[test]
    fn poset_errors_have_lines() {
        assert!(matches!(parse_poset("x", "le: a b"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_poset("x", "elements: a\nle: a z"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_poset("x", "elements: a a"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_poset("x", "# c\nelements: a\nle: a"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn c2_file() {
        let g = parse_group("elements: e g\nmul: e e e\nmul: e g g\nmul: g e g\nmul: g g e\n").unwrap();
        assert_eq!(g, GroupTable::new(vec!["e".into(), "g".into()], vec![vec![0, 1], vec![1, 0]]).unwrap());
    }

    #[test]
    fn group_errors() {
        let e = parse_group("elements: e g\nmul: e e e\nmul: e g g\nmul: g e g\n").unwrap_err();
        assert_eq!(e, Error::parse(4, "missing product g·g"));
        let e = parse_group("elements: e g\nmul: e e e\nmul: e e g\n").unwrap_err();
        assert_eq!(e, Error::parse(3, "e·e already given as e"));
        // a Latin square with identity a whose product is not associative
        let names = ["a", "b", "c", "d", "e"];
        let sq = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]];
        let mut text = format!("elements: {}\n", names.join(" "));
        for (x, row) in sq.iter().enumerate() {
            for (y, &z) in row.iter().enumerate() {
                text += &format!("mul: {} {} {}\n", names[x], names[y], names[z]);
            }
        }
        match parse_group(&text).unwrap_err() {
            Error::Validation { law, detail } => {
                assert_eq!(law, "associativity");
                assert!(detail.contains('(') && detail.contains("·"), "{detail}");
            }
            e => panic!("{e}"),
        }
    }

    #[test]
    fn matrices() {
        let m = parse_matrix("1 -1/2\n0 3/6\n").unwrap();
        assert_eq!(m.get(0, 1), q(-1) / q(2));
        assert_eq!(m.get(1, 1), q(1) / q(2));
        assert!(matches!(parse_matrix("1 2\n3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix("1/0"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn label_sets_and_pfns() {
        let s = SetObj::base(parse_label_set("S: x y z").unwrap());
        let f = parse_pfn(&s, &s, "x -> y, y -> undef\nz -> z").unwrap();
        assert_eq!(f.table, vec![1, UNDEF, 2]);
        assert!(parse_label_set("S: x x").is_err());
        assert!(matches!(parse_pfn(&s, &s, "x -> y, x -> z"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_pfn(&s, &s, "\nw -> x"), Err(Error::Parse { line: 2, .. })));
    }
}
