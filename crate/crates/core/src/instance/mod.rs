//! Point sets with non-crossing segment constraints.

mod format;
pub(crate) mod generate;
mod validate;

use thiserror::Error;

use crate::geom::{Point, Segment, HARD_COORD_LIMIT};

pub use format::{parse, serialize};
pub use generate::{fits_general_position, gen_random, greedy_triangulation, RANDOM_BOX_PER_POINT};
pub use validate::{validate, Violation};

/// Vertex identifier: position in [`Instance::points`].
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("constraint {index} refers to missing point {id} (n = {n})")]
    BadIndex { index: usize, id: usize, n: usize },
    #[error("constraint {index} joins point {id} to itself")]
    SelfLoop { index: usize, id: usize },
    #[error("point {id} at {point:?} exceeds the kernel coordinate bound")]
    OutOfRange { id: usize, point: Point },
    #[error("generation failed: {0}")]
    Generation(String),
}

/// Points `P` (ids `0..n`) and constraints `S` as id pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    points: Vec<Point>,
    constraints: Vec<(VertexId, VertexId)>,
    incident: Vec<Vec<usize>>,
}

impl Instance {
    /// Builds an instance. Constraint pairs are stored as `(min, max)`.
    /// Only index and range problems are errors here; geometric problems
    /// are reported by [`validate`].
    pub fn new(
        points: Vec<Point>,
        constraints: Vec<(VertexId, VertexId)>,
    ) -> Result<Self, InstanceError> {
        let n = points.len();
        for (id, &point) in points.iter().enumerate() {
            if !point.in_range(HARD_COORD_LIMIT) {
                return Err(InstanceError::OutOfRange { id, point });
            }
        }
        let mut incident = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(constraints.len());
        for (index, &(i, j)) in constraints.iter().enumerate() {
            for id in [i, j] {
                if id >= n {
                    return Err(InstanceError::BadIndex { index, id, n });
                }
            }
            if i == j {
                return Err(InstanceError::SelfLoop { index, id: i });
            }
            incident[i].push(index);
            incident[j].push(index);
            normalized.push((i.min(j), i.max(j)));
        }
        Ok(Instance {
            points,
            constraints: normalized,
            incident,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, id: VertexId) -> Point {
        self.points[id]
    }

    pub fn constraints(&self) -> &[(VertexId, VertexId)] {
        &self.constraints
    }

    pub fn segment(&self, k: usize) -> Segment {
        let (i, j) = self.constraints[k];
        Segment::new(self.points[i], self.points[j])
    }

    pub fn segments(&self) -> Vec<Segment> {
        (0..self.constraints.len())
            .map(|k| self.segment(k))
            .collect()
    }

    /// Indices of constraints with `id` as an endpoint.
    pub fn incident(&self, id: VertexId) -> &[usize] {
        &self.incident[id]
    }

    /// Neighbour across constraint `k` from `id`.
    pub fn constraint_other(&self, k: usize, id: VertexId) -> VertexId {
        let (i, j) = self.constraints[k];
        if i == id {
            j
        } else {
            i
        }
    }

    pub fn is_constraint(&self, u: VertexId, v: VertexId) -> bool {
        self.incident[u]
            .iter()
            .any(|&k| self.constraint_other(k, u) == v)
    }

    /// Sub-instance on `keep` (in the given order), keeping constraints with
    /// both endpoints kept. Returns the instance and the old→new id map.
    pub fn induced(&self, keep: &[VertexId]) -> (Instance, Vec<Option<VertexId>>) {
        let mut map = vec![None; self.len()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        let points = keep.iter().map(|&i| self.points[i]).collect();
        let constraints = self
            .constraints
            .iter()
            .filter_map(|&(i, j)| Some((map[i]?, map[j]?)))
            .collect();
        let inst = Instance::new(points, constraints).expect("sub-instance of a valid instance");
        (inst, map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_constraints() {
        let pts = vec![Point::new(0, 0), Point::new(1, 1)];
        assert!(matches!(
            Instance::new(pts.clone(), vec![(0, 5)]),
            Err(InstanceError::BadIndex { id: 5, .. })
        ));
        assert!(matches!(
            Instance::new(pts, vec![(1, 1)]),
            Err(InstanceError::SelfLoop { .. })
        ));
    }

    #[test]
    fn induced_keeps_inner_constraints() {
        let pts = vec![
            Point::new(0, 0),
            Point::new(3, 1),
            Point::new(1, 5),
            Point::new(7, 2),
        ];
        let inst = Instance::new(pts, vec![(0, 1), (1, 3), (2, 3)]).unwrap();
        let (sub, map) = inst.induced(&[3, 1, 0]);
        assert_eq!(sub.len(), 3);
        assert_eq!(map[2], None);
        assert_eq!(sub.constraints(), &[(1, 2), (0, 1)]);
    }
}
