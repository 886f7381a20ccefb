//! Plain-text instance format.
//!
//! ```text
//! n m
//! x y        (n lines)
//! i j        (m lines, 0-based point ids)
//! ```
//!
//! Lines starting with `#` are comments and may appear anywhere. Blank lines
//! are ignored.

use crate::geom::{coord_max, Point};

use super::{Instance, InstanceError};

fn parse_err(line: usize, msg: impl Into<String>) -> InstanceError {
    InstanceError::Parse {
        line,
        msg: msg.into(),
    }
}

fn two_ints(line: usize, text: &str) -> Result<(i64, i64), InstanceError> {
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<i64, InstanceError> {
        let f = fields
            .next()
            .ok_or_else(|| parse_err(line, format!("missing {what}")))?;
        f.parse::<i64>()
            .map_err(|_| parse_err(line, format!("{what} `{f}` is not an integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(parse_err(line, "expected exactly two fields"));
    }
    Ok((a, b))
}

pub fn parse(bytes: &[u8]) -> Result<Instance, InstanceError> {
    let text = std::str::from_utf8(bytes).map_err(|_| parse_err(0, "input is not UTF-8"))?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let (n, m) = two_ints(hl, header)?;
    if n < 0 || m < 0 {
        return Err(parse_err(hl, "counts must be non-negative"));
    }
    let (n, m) = (n as usize, m as usize);
    let bound = coord_max();

    let mut points = Vec::with_capacity(n);
    for k in 0..n {
        let (line, text) = lines
            .next()
            .ok_or_else(|| parse_err(hl, format!("expected {n} points, found {k}")))?;
        let (x, y) = two_ints(line, text)?;
        let p = Point::new(x, y);
        if !p.in_range(bound) {
            return Err(parse_err(
                line,
                format!("coordinate {p:?} outside [-{bound}, {bound}]"),
            ));
        }
        points.push(p);
    }

    let mut constraints = Vec::with_capacity(m);
    for k in 0..m {
        let (line, text) = lines
            .next()
            .ok_or_else(|| parse_err(hl, format!("expected {m} constraints, found {k}")))?;
        let (i, j) = two_ints(line, text)?;
        for id in [i, j] {
            if id < 0 || id as usize >= n {
                return Err(parse_err(line, format!("constraint index {id} invalid")));
            }
        }
        if i == j {
            return Err(parse_err(line, "constraint joins a point to itself"));
        }
        constraints.push((i as usize, j as usize));
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, "trailing data"));
    }
    Instance::new(points, constraints)
}

pub fn serialize(inst: &Instance) -> Vec<u8> {
    let mut out = format!("{} {}\n", inst.len(), inst.constraints().len());
    for p in inst.points() {
        out.push_str(&format!("{} {}\n", p.x, p.y));
    }
    for (i, j) in inst.constraints() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out.into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_listed_inputs() {
        let a = parse(b"2 0\n0 0\n1 10\n").unwrap();
        assert_eq!(a.len(), 2);
        assert!(a.constraints().is_empty());

        let b = parse(b"4 1\n0 0\n10 1\n5 2\n5 -2\n2 3\n").unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(b.constraints(), &[(2, 3)]);

        let err = parse(b"2 1\n0 0\n1 1\n0 5\n").unwrap_err();
        assert_eq!(
            err,
            InstanceError::Parse {
                line: 4,
                msg: "constraint index 5 invalid".into()
            }
        );
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = b"# header comment\n3 1\n0 0\n\n# mid\n4 1\n1 7\n1 0\n";
        let inst = parse(text).unwrap();
        assert_eq!(serialize(&inst), b"3 1\n0 0\n4 1\n1 7\n0 1\n");
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        assert!(matches!(
            parse(b"2 0\n0 0\n1 x\n"),
            Err(InstanceError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse(b"2 0\n0 0\n"),
            Err(InstanceError::Parse { .. })
        ));
        assert!(matches!(
            parse(b"1 0\n0 0 0\n"),
            Err(InstanceError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse(b"1 0\n99999999999 0\n"),
            Err(InstanceError::Parse { line: 2, .. })
        ));
    }
}
