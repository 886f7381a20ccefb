use std::cmp::Ordering;

use serde::Serialize;

use crate::geom::{Frame, Point, HARD_COORD_LIMIT};
use crate::instance::{validate, Instance, InstanceError, VertexId};

use super::paths::cmp_sqrt_sum_to;

/// Coordinate units per unit of the construction.
pub const ZIGZAG_UNIT: i64 = 1 << 17;

/// Three columns of `n/3` points with the zig-zag constraints, stretched
/// horizontally by `2ρ`.
#[derive(Debug, Clone)]
pub struct Zigzag {
    pub inst: Instance,
    pub s: VertexId,
    pub t: VertexId,
    /// Points per column.
    pub rows: usize,
    pub rho: i64,
    /// `ε` as `(numerator, denominator)`.
    pub eps: (u64, u64),
    pub unit: i64,
}

/// `ε = 1/(64ρ)`: small enough that every term it contributes to a path
/// length stays below one unit.
pub fn default_eps(rho: i64) -> (u64, u64) {
    (1, 64 * rho as u64)
}

/// Builds the construction. Rows `0, 2, 4, …` (counting from the bottom)
/// are shifted right by `1/2 + ε` before the stretch; the constraints join
/// horizontal neighbours, and each vertex of a shifted row in the first two
/// columns to the next column's vertices in the rows above and below. `s`
/// sits one unit below the bottom row, centred on its first two vertices;
/// `t` one unit above the top row, straight above `s`. Point `(c, r)` is
/// nudged by `r²` in `x` and `c²` in `y` (coordinate units) for general
/// position.
pub fn gen_zigzag(n: usize, rho: i64, eps: (u64, u64)) -> Result<Zigzag, InstanceError> {
    let bad = |m: String| Err(InstanceError::Generation(m));
    if n < 6 || !n.is_multiple_of(3) {
        return bad(format!("zigzag needs n ≥ 6 and a multiple of 3, got {n}"));
    }
    if rho < 1 {
        return bad(format!("ρ must be positive, got {rho}"));
    }
    let (en, ed) = eps;
    if en == 0 || ed == 0 || 2 * en >= ed {
        return bad(format!("ε = {en}/{ed} is not in (0, 1/2)"));
    }
    let u = ZIGZAG_UNIT as i128;
    let stretch = 2 * rho as i128 * u;
    if (stretch * en as i128) % ed as i128 != 0 {
        return bad(format!(
            "ε = {en}/{ed} is not a multiple of 1/{} at ρ = {rho}",
            stretch
        ));
    }
    let k = n / 3;
    let shift = stretch / 2 + stretch * en as i128 / ed as i128;
    let reach = 2 * stretch + shift + (k * k) as i128;
    if reach > HARD_COORD_LIMIT as i128 {
        return bad(format!("ρ = {rho} puts coordinates past the kernel bound"));
    }

    let (stretch, shift) = (stretch as i64, shift as i64);
    let unit = ZIGZAG_UNIT;
    let shifted = |r: usize| r.is_multiple_of(2);
    let mut points = Vec::with_capacity(n + 2);
    for c in 0..3i64 {
        for r in 0..k {
            let ri = r as i64;
            let x = c * stretch + if shifted(r) { shift } else { 0 } + ri * ri;
            points.push(Point::new(x, ri * unit + c * c));
        }
    }
    let sx = (points[0].x + points[k].x) / 2;
    points.push(Point::new(sx, -unit));
    points.push(Point::new(sx, k as i64 * unit));
    let (s, t) = (3 * k, 3 * k + 1);

    let id = |c: usize, r: usize| c * k + r;
    let mut cons = Vec::new();
    for r in 0..k {
        cons.push((id(0, r), id(1, r)));
        cons.push((id(1, r), id(2, r)));
        if shifted(r) {
            for c in 0..2 {
                if r > 0 {
                    cons.push((id(c, r), id(c + 1, r - 1)));
                }
                if r + 1 < k {
                    cons.push((id(c, r), id(c + 1, r + 1)));
                }
            }
        }
    }
    let inst = Instance::new(points, cons)?;
    if let Some(v) = validate(&inst, &Frame::canonical()).first() {
        return bad(format!("zigzag n={n} ρ={rho} breaks general position: {v}"));
    }
    Ok(Zigzag {
        inst,
        s,
        t,
        rows: k,
        rho,
        eps,
        unit,
    })
}

/// One inequality of a report, evaluated exactly.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// Left side in construction units.
    pub value: f64,
    pub relation: String,
    pub bound: f64,
    pub holds: bool,
}

impl Zigzag {
    /// `4ρ + n/3 + 4`, the free path bound with ε terms dropped.
    pub fn free_bound(&self) -> f64 {
        (4 * self.rho + self.rows as i64 + 4) as f64
    }

    /// The ε terms of the free path: each of its two long edges is at most
    /// `2ερ` longer.
    pub fn free_eps_correction(&self) -> f64 {
        4.0 * self.rho as f64 * self.eps.0 as f64 / self.eps.1 as f64
    }

    /// `ρ·n/3`.
    pub fn restricted_bound(&self) -> f64 {
        (self.rho * self.rows as i64) as f64
    }

    /// `(ρ·n/3) / (4ρ + n/3 + 4)`.
    pub fn expected_ratio(&self) -> f64 {
        self.restricted_bound() / self.free_bound()
    }

    /// The two path-length inequalities, given the squared edge lengths of
    /// the free and the restricted shortest paths.
    pub fn checks(&self, free_sq: &[u128], restricted_sq: &[u128]) -> Vec<Check> {
        let u = self.unit as u128;
        let (rho, k) = (self.rho as u128, self.rows as u128);
        let (en, ed) = (self.eps.0 as u128, self.eps.1 as u128);
        let len = |sq: &[u128]| sq.iter().map(|&d| (d as f64).sqrt()).sum::<f64>() / u as f64;
        // free < (4ρ + k + 4 + 4ερ)·unit, over the common denominator ε has.
        let free_num = ((4 * rho + k + 4) * ed + 4 * rho * en) * u;
        let free_ok = cmp_sqrt_sum_to(free_sq, free_num, ed) == Ordering::Less;
        let restricted_ok = cmp_sqrt_sum_to(restricted_sq, rho * k * u, 1) != Ordering::Less;
        vec![
            Check {
                name: "free shortest path".into(),
                value: len(free_sq),
                relation: "<".into(),
                bound: self.free_bound() + self.free_eps_correction(),
                holds: free_ok,
            },
            Check {
                name: "restricted shortest path".into(),
                value: len(restricted_sq),
                relation: ">=".into(),
                bound: self.restricted_bound(),
                holds: restricted_ok,
            },
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(gen_zigzag(7, 10, (1, 8)).is_err());
        assert!(gen_zigzag(3, 10, (1, 8)).is_err());
        assert!(gen_zigzag(6, 10, (1, 2)).is_err());
        assert!(gen_zigzag(6, 0, (1, 8)).is_err());
        assert!(gen_zigzag(6, 1 << 30, default_eps(1 << 30)).is_err());
    }

    #[test]
    fn constraint_count() {
        // Two horizontal constraints per row, and up to four diagonals per
        // shifted row.
        let z = gen_zigzag(12, 10, (1, 8)).unwrap();
        assert_eq!(z.inst.len(), 14);
        assert_eq!(z.inst.constraints().len(), 8 + 2 + 4);
    }
}
