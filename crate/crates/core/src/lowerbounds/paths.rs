use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, VecDeque};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::instance::{Instance, VertexId};
use crate::visibility::VisibilityGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Metric {
    Hops,
    Euclidean,
}

impl std::str::FromStr for Metric {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "HOPS" => Ok(Metric::Hops),
            "EUCLIDEAN" => Ok(Metric::Euclidean),
            _ => Err(format!("unknown metric `{s}` (expected HOPS or EUCLIDEAN)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no path from {s} to {t}")]
pub struct NoPath {
    pub s: VertexId,
    pub t: VertexId,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShortestPath {
    pub path: Vec<VertexId>,
    pub hops: usize,
    /// Euclidean length in coordinate units (rounded to `f64`).
    pub length: f64,
    /// Squared lengths of the path's edges, for exact comparisons.
    #[serde(skip)]
    pub edge_lengths_sq: Vec<u128>,
}

impl ShortestPath {
    fn from_path(inst: &Instance, path: Vec<VertexId>) -> Self {
        let edge_lengths_sq = edge_lengths_sq(inst, &path);
        ShortestPath {
            hops: path.len() - 1,
            length: edge_lengths_sq.iter().map(|&d| (d as f64).sqrt()).sum(),
            path,
            edge_lengths_sq,
        }
    }
}

/// Squared length of every edge of `path`.
pub fn edge_lengths_sq(inst: &Instance, path: &[VertexId]) -> Vec<u128> {
    path.windows(2)
        .map(|e| inst.point(e[0]).dist2(inst.point(e[1])) as u128)
        .collect()
}

/// Exact comparison of `Σ √a` with `Σ √b`.
pub fn cmp_sqrt_sums(a: &[u128], b: &[u128]) -> Ordering {
    let fa: f64 = a.iter().map(|&d| (d as f64).sqrt()).sum();
    let fb: f64 = b.iter().map(|&d| (d as f64).sqrt()).sum();
    // Each term carries a relative error of a few ulps.
    let tol = (fa + fb) * (a.len() + b.len() + 4) as f64 * 1e-15;
    if (fa - fb).abs() > tol {
        return fa.partial_cmp(&fb).expect("finite sums");
    }
    let big = |v: &[u128]| v.iter().map(|&d| BigUint::from(d)).collect::<Vec<_>>();
    cmp_sqrt_sums_exact(&big(a), &big(b))
}

/// `Σ √a` against the rational `num/den`.
pub fn cmp_sqrt_sum_to(a: &[u128], num: u128, den: u128) -> Ordering {
    let den2 = BigUint::from(den) * BigUint::from(den);
    let lhs: Vec<BigUint> = a.iter().map(|&d| BigUint::from(d) * &den2).collect();
    let rhs = [BigUint::from(num) * BigUint::from(num)];
    cmp_sqrt_sums_exact(&lhs, &rhs)
}

/// Bounds `Σ √v` between two integers scaled by `2^k`.
fn sqrt_sum_bounds(v: &[BigUint], k: u32) -> (BigUint, BigUint) {
    let mut lo = BigUint::from(0u32);
    let mut hi = BigUint::from(0u32);
    for d in v {
        let scaled = d << (2 * k);
        let r = scaled.sqrt();
        let exact = &r * &r == scaled;
        hi += &r + if exact { 0u32 } else { 1u32 };
        lo += r;
    }
    (lo, hi)
}

fn cmp_sqrt_sums_exact(a: &[BigUint], b: &[BigUint]) -> Ordering {
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort();
    sb.sort();
    if sa == sb {
        return Ordering::Equal;
    }
    let mut k = 32;
    while k <= 4096 {
        let (alo, ahi) = sqrt_sum_bounds(a, k);
        let (blo, bhi) = sqrt_sum_bounds(b, k);
        if ahi < blo {
            return Ordering::Less;
        }
        if bhi < alo {
            return Ordering::Greater;
        }
        if alo == ahi && blo == bhi {
            return alo.cmp(&blo);
        }
        k *= 2;
    }
    // Unseparated at 4096 bits: treated as equal (as √8 and √2 + √2 are).
    Ordering::Equal
}

/// Exact shortest `s`–`t` path in `g` under `metric`.
///
/// The Euclidean search runs Dijkstra in floating point, then relaxes edges
/// under exact comparisons until no edge improves any distance.
pub fn shortest_path(
    inst: &Instance,
    g: &VisibilityGraph,
    s: VertexId,
    t: VertexId,
    metric: Metric,
) -> Result<ShortestPath, NoPath> {
    let pred = match metric {
        Metric::Hops => bfs(g, s),
        Metric::Euclidean => dijkstra_exact(inst, g, s),
    };
    if s != t && pred[t].is_none() {
        return Err(NoPath { s, t });
    }
    let mut path = vec![t];
    while *path.last().unwrap() != s {
        path.push(pred[*path.last().unwrap()].expect("reached vertices have predecessors"));
    }
    path.reverse();
    Ok(ShortestPath::from_path(inst, path))
}

fn bfs(g: &VisibilityGraph, s: VertexId) -> Vec<Option<VertexId>> {
    let mut pred = vec![None; g.len()];
    let mut seen = vec![false; g.len()];
    seen[s] = true;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &(v, _) in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                pred[v] = Some(u);
                q.push_back(v);
            }
        }
    }
    pred
}

struct Key(f64);
impl PartialEq for Key {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Key {}
impl PartialOrd for Key {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Key {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.total_cmp(&o.0)
    }
}

fn dijkstra_exact(inst: &Instance, g: &VisibilityGraph, s: VertexId) -> Vec<Option<VertexId>> {
    let n = g.len();
    let w = |u: VertexId, v: VertexId| inst.point(u).dist2(inst.point(v)) as u128;
    let mut dist = vec![f64::INFINITY; n];
    let mut pred: Vec<Option<VertexId>> = vec![None; n];
    dist[s] = 0.0;
    let mut heap = BinaryHeap::from([Reverse((Key(0.0), s))]);
    while let Some(Reverse((Key(d), u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for &(v, _) in g.neighbors(u) {
            let nd = d + (w(u, v) as f64).sqrt();
            if nd < dist[v] {
                dist[v] = nd;
                pred[v] = Some(u);
                heap.push(Reverse((Key(nd), v)));
            }
        }
    }

    let chain = |pred: &[Option<VertexId>], mut v: VertexId| {
        let mut out = Vec::new();
        while let Some(p) = pred[v] {
            out.push(w(p, v));
            v = p;
        }
        out
    };
    loop {
        let mut changed = false;
        for u in 0..n {
            if u != s && pred[u].is_none() {
                continue;
            }
            for &(v, _) in g.neighbors(u) {
                if v == s || pred[v] == Some(u) {
                    continue;
                }
                let mut via = chain(&pred, u);
                via.push(w(u, v));
                if cmp_sqrt_sums(&via, &chain(&pred, v)) == Ordering::Less {
                    pred[v] = Some(u);
                    changed = true;
                }
            }
        }
        if !changed {
            return pred;
        }
    }
}
