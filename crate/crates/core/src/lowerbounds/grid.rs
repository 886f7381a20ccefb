use crate::geom::{Frame, Point};
use crate::instance::generate::greedy_complete;
use crate::instance::{validate, Instance, InstanceError, VertexId};
use crate::visibility::{build_visibility_graph, local_view, VisibilityGraph};

/// The `n × n` grid with every edge of its triangulation a constraint.
#[derive(Debug, Clone)]
pub struct Grid {
    pub inst: Instance,
    pub rows: usize,
    pub s: VertexId,
    pub t: VertexId,
    /// Vertical distance between rows in coordinate units.
    pub unit: i64,
}

impl Grid {
    /// Id of the vertex in column `c`, row `r` (row 0 at the bottom).
    pub fn id(&self, c: usize, r: usize) -> VertexId {
        c * self.rows + r
    }

    /// Column of `v`, or `None` for `s` and `t`.
    pub fn column(&self, v: VertexId) -> Option<usize> {
        (v < self.rows * self.rows).then(|| v / self.rows)
    }
}

/// Builds the grid. Odd columns sit half a row higher than even ones and
/// columns are `n` row units apart. Point `(c, r)` is nudged by `r²` in `x`
/// and `c²` in `y`, far below the row spacing, so that no three points are
/// collinear and no two share a horizontal line. `s` lies one row below the
/// grid and `t` one row above it, both near the middle.
pub fn gen_grid(n: usize) -> Result<Grid, InstanceError> {
    if n < 2 {
        return Err(InstanceError::Generation(format!(
            "grid needs n ≥ 2, got {n}"
        )));
    }
    let ni = n as i64;
    let unit = 8 * ni * ni;
    let width = ni * unit;
    let mut points = Vec::with_capacity(n * n + 2);
    for c in 0..ni {
        for r in 0..ni {
            let lift = if c % 2 == 1 { unit / 2 } else { 0 };
            points.push(Point::new(c * width + r * r, r * unit + lift + c * c));
        }
    }
    let mid = (ni - 1) * width / 2;
    let top = (ni - 1) * unit + unit / 2 + ni * ni;
    points.push(Point::new(mid + 1, -unit));
    points.push(Point::new(mid + 3, top + unit));
    let (s, t) = (n * n, n * n + 1);

    let id = |c: usize, r: usize| c * n + r;
    let mut edges = Vec::new();
    for c in 0..n {
        for r in 0..n {
            if r + 1 < n {
                edges.push((id(c, r), id(c, r + 1)));
            }
            if c + 1 < n {
                edges.push((id(c, r), id(c + 1, r)));
                // Even columns meet the odd column's row below, odd columns
                // the even column's row above.
                if c % 2 == 0 && r > 0 {
                    edges.push((id(c, r), id(c + 1, r - 1)));
                }
                if c % 2 == 1 && r + 1 < n {
                    edges.push((id(c, r), id(c + 1, r + 1)));
                }
            }
        }
    }
    // Only the outer pockets are left to fill: boundary vertices, s and t.
    let mut rim: Vec<VertexId> = (0..n)
        .flat_map(|i| [id(0, i), id(n - 1, i), id(i, 0), id(i, n - 1)])
        .collect();
    rim.extend([s, t]);
    rim.sort_unstable();
    rim.dedup();
    let edges = greedy_complete(&points, &edges, &rim);
    let inst = Instance::new(points, edges)?;
    if let Some(v) = validate(&inst, &Frame::canonical()).first() {
        return Err(InstanceError::Generation(format!(
            "grid n={n} breaks general position: {v}"
        )));
    }
    Ok(Grid {
        inst,
        rows: n,
        s,
        t,
        unit,
    })
}

/// A grid cut down to what a route prefix saw.
#[derive(Debug, Clone)]
pub struct Trimmed {
    pub inst: Instance,
    pub graph: VisibilityGraph,
    /// Old ids of the kept vertices, in new-id order.
    pub keep: Vec<VertexId>,
    /// Old id → new id.
    pub map: Vec<Option<VertexId>>,
}

/// Keeps the vertices of `pi`, `t`, and all their neighbours in `g`, with
/// the constraints among them, and rebuilds the visibility graph.
pub fn trim(inst: &Instance, g: &VisibilityGraph, pi: &[VertexId], t: VertexId) -> Trimmed {
    let mut marked = vec![false; inst.len()];
    for &v in pi.iter().chain([&t]) {
        marked[v] = true;
        for &(w, _) in g.neighbors(v) {
            marked[w] = true;
        }
    }
    let keep: Vec<VertexId> = (0..inst.len()).filter(|&v| marked[v]).collect();
    let (sub, map) = inst.induced(&keep);
    let graph = build_visibility_graph(&sub);
    Trimmed {
        inst: sub,
        graph,
        keep,
        map,
    }
}

/// True iff `u` sees the same thing in both graphs: the same position, the
/// same neighbours with the same constraint flags, the same incident
/// constraints. Compared by position, so ids may differ.
pub fn same_view(
    a: (&Instance, &VisibilityGraph, VertexId),
    b: (&Instance, &VisibilityGraph, VertexId),
) -> bool {
    let key = |(inst, g, u): (&Instance, &VisibilityGraph, VertexId)| {
        let v = local_view(inst, g, u);
        let mut nbrs: Vec<(Point, bool)> = v
            .neighbors
            .iter()
            .map(|n| (n.point, n.is_constraint))
            .collect();
        nbrs.sort_unstable_by_key(|&(p, c)| (p.x, p.y, c));
        let mut cons: Vec<(i64, i64)> = v
            .incident_constraints
            .iter()
            .map(|s| {
                let z = s.other(v.current);
                (z.x, z.y)
            })
            .collect();
        cons.sort_unstable();
        (v.current, nbrs, cons)
    };
    key(a) == key(b)
}

/// For each column, how many vertices of `pi` touch it: lie in it or have
/// a neighbour in it.
pub fn column_touches(grid: &Grid, g: &VisibilityGraph, pi: &[VertexId]) -> Vec<usize> {
    let mut touches = vec![0; grid.rows];
    for &v in pi {
        let mut cols: Vec<usize> = grid.column(v).into_iter().collect();
        cols.extend(g.neighbors(v).iter().filter_map(|&(w, _)| grid.column(w)));
        cols.sort_unstable();
        cols.dedup();
        for c in cols {
            touches[c] += 1;
        }
    }
    touches
}
