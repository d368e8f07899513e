//! Plain-text table dump, format version 1.
//!
//! ```text
//! codegree-table v1
//! order 6
//! exponent 6
//! sizes 1 3 2
//! orders 1 2 3
//! row 1: 1 1 1
//! row 1: 1 -1 1
//! row 2: 2 0 -1
//! ```
//!
//! One `row` line per character: the degree, then one value per class in
//! the order of the `sizes` line. A value is either a rational integer or a
//! sparse coefficient list `{j:c,...}` meaning `Σ c·ζ_e^j`. Lines starting
//! with `#` are comments.

use std::fmt::Write as _;

use super::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

pub const HEADER: &str = "codegree-table v1";

#[derive(Clone, Debug, PartialEq)]
pub struct TableDump {
    pub order: u64,
    pub exponent: u64,
    pub sizes: Vec<u64>,
    pub orders: Vec<u64>,
    pub rows: Vec<(u64, Vec<Cyclotomic>)>,
}

/// A row as a sorted multiset of `(class size, element order, value key)`.
pub type RowSignature = (u64, Vec<(u64, u64, Vec<i64>)>);

impl TableDump {
    pub fn from_table(t: &CharacterTable) -> Self {
        let g = t.group();
        TableDump {
            order: g.order() as u64,
            exponent: t.exponent(),
            sizes: g.class_sizes().iter().map(|&s| s as u64).collect(),
            orders: g
                .classes()
                .iter()
                .map(|c| g.element_order(c.representative()))
                .collect(),
            rows: (0..t.len())
                .map(|i| (t.degree(i), t.row(i).to_vec()))
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        writeln!(out, "{HEADER}").unwrap();
        writeln!(out, "order {}", self.order).unwrap();
        writeln!(out, "exponent {}", self.exponent).unwrap();
        writeln!(out, "sizes {}", join(&self.sizes)).unwrap();
        writeln!(out, "orders {}", join(&self.orders)).unwrap();
        for (d, values) in &self.rows {
            let vals: Vec<String> = values.iter().map(format_value).collect();
            writeln!(out, "row {d}: {}", vals.join(" ")).unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let err = |line: usize, message: &str| Error::Parse {
            line,
            column: 1,
            message: message.to_string(),
        };
        match lines.next() {
            Some((_, HEADER)) => {}
            Some((n, _)) => return Err(err(n, "expected table header")),
            None => return Err(err(1, "empty table dump")),
        }
        let mut field = |name: &str| -> Result<(usize, Vec<u64>)> {
            let (n, l) = lines.next().ok_or_else(|| err(0, "truncated table dump"))?;
            let rest = l
                .strip_prefix(name)
                .ok_or_else(|| err(n, &format!("expected `{name}`")))?;
            let nums = rest
                .split_whitespace()
                .map(|t| t.parse::<u64>().map_err(|_| err(n, "expected an integer")))
                .collect::<Result<Vec<_>>>()?;
            Ok((n, nums))
        };
        let (n, order) = field("order")?;
        let (_, exponent) = field("exponent")?;
        let (_, sizes) = field("sizes")?;
        let (_, orders) = field("orders")?;
        if order.len() != 1 || exponent.len() != 1 || exponent[0] == 0 {
            return Err(err(n, "order and exponent take one positive value"));
        }
        let (order, exponent) = (order[0], exponent[0]);
        if orders.len() != sizes.len() {
            return Err(err(n, "sizes and orders differ in length"));
        }
        let mut rows = Vec::new();
        for (n, l) in lines {
            let rest = l
                .strip_prefix("row")
                .ok_or_else(|| err(n, "expected `row`"))?;
            let (deg, vals) = rest.split_once(':').ok_or_else(|| err(n, "missing `:`"))?;
            let deg: u64 = deg.trim().parse().map_err(|_| err(n, "bad degree"))?;
            let values = vals
                .split_whitespace()
                .map(|t| {
                    parse_value(t, exponent).ok_or_else(|| err(n, &format!("bad value `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if values.len() != sizes.len() {
                return Err(err(n, "row length differs from the class count"));
            }
            rows.push((deg, values));
        }
        Ok(TableDump {
            order,
            exponent,
            sizes,
            orders,
            rows,
        })
    }

    /// Class-order independent description of the table: each row as a
    /// multiset of `(class size, element order, canonical value)` triples,
    /// rows sorted.
    pub fn signature(&self) -> Vec<RowSignature> {
        let mut rows: Vec<RowSignature> = self
            .rows
            .iter()
            .map(|(d, values)| {
                let mut cells: Vec<(u64, u64, Vec<i64>)> = values
                    .iter()
                    .zip(self.sizes.iter().zip(&self.orders))
                    .map(|(v, (&s, &o))| (s, o, v.lift(self.exponent).canonical_key()))
                    .collect();
                cells.sort();
                (*d, cells)
            })
            .collect();
        rows.sort();
        rows
    }
}

/// Printed in the reduced basis, so rational values come out as integers.
fn format_value(v: &Cyclotomic) -> String {
    let r = v.reduced();
    let c = r.coeffs();
    if c[1..].iter().all(|&x| x == 0) {
        return c[0].to_string();
    }
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(j, x)| format!("{j}:{x}"))
        .collect();
    format!("{{{}}}", terms.join(","))
}

fn parse_value(token: &str, exponent: u64) -> Option<Cyclotomic> {
    if let Ok(n) = token.parse::<i64>() {
        return Some(Cyclotomic::integer(exponent, n));
    }
    let inner = token.strip_prefix('{')?.strip_suffix('}')?;
    let mut coeffs = vec![0i64; exponent as usize];
    for term in inner.split(',').filter(|t| !t.is_empty()) {
        let (j, c) = term.split_once(':')?;
        let j: u64 = j.parse().ok()?;
        let c: i64 = c.parse().ok()?;
        if j >= exponent {
            return None;
        }
        coeffs[j as usize] += c;
    }
    Some(Cyclotomic::from_coeffs(exponent, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    const S3: &str = "codegree-table v1\norder 6\nexponent 6\nsizes 1 3 2\norders 1 2 3\n\
                      row 1: 1 1 1\nrow 1: 1 -1 1\nrow 2: 2 0 -1\n";

    #[test]
    fn parses_and_prints() {
        let t = TableDump::parse(S3).unwrap();
        assert_eq!(t.rows.len(), 3);
        assert_eq!(t.rows[2].1[2], Cyclotomic::integer(6, -1));
        assert_eq!(TableDump::parse(&t.to_text()).unwrap(), t);
    }

    #[test]
    fn sparse_values() {
        let v = parse_value("{2:1,4:1}", 6).unwrap();
        // ζ6^2 + ζ6^4 = ζ3 + ζ3^2 = -1
        assert_eq!(v, Cyclotomic::integer(6, -1));
        assert!(parse_value("{7:1}", 6).is_none());
        assert_eq!(format_value(&v), "-1");
        // ζ6^2 = ζ6 - 1
        assert_eq!(format_value(&Cyclotomic::root(6, 2)), "{0:-1,1:1}");
    }

    #[test]
    fn rejects_bad_header() {
        assert!(matches!(
            TableDump::parse("codegree-table v2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
