//! The two 1-local routing state machines and their traces.
//!
//! [`step`] is the whole algorithm: it maps a [`LocalView`] and a
//! [`MessageState`] to the next hop and the updated message. [`route`] only
//! feeds it views and records what happens.

mod state;
mod steps;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::geom::{Frame, GeomError};
use crate::instance::{Instance, VertexId};
use crate::visibility::{local_view, Adjacency, LocalView};

pub use state::{Endpoint, MessageState, Mode, Phase, MESSAGE_BYTES};
pub use steps::{
    avoid_step_theta6, avoid_step_vis, opposite_step, phase_end_resolution, theta_step,
    AvoidOutcome, Resolution, ThetaOutcome,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RouteError {
    #[error("general position violated: {0}")]
    GeneralPosition(String),
    #[error("routing rule failed: {0}")]
    Rule(String),
    /// Failure of the stand-in opposite-endpoint strategy for the Θ₆-graph,
    /// kept apart from failures of the rules above.
    #[error("substitute opposite-endpoint strategy failed: {0}")]
    Substitute(String),
}

/// One routing decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub next: VertexId,
    /// Phase the hop was taken in.
    pub phase: Phase,
    pub note: String,
    /// Message to send along with the hop.
    pub state: MessageState,
}

/// Decides the next hop from the current view and message alone.
pub fn step(view: &LocalView, st: &MessageState) -> Result<Decision, RouteError> {
    let mut st = st.clone();
    let mut notes: Vec<String> = Vec::new();
    // Phase changes without a hop: THETA→AVOID, AVOID→THETA/OPPOSITE, and
    // one more THETA→AVOID after a resolution.
    for _ in 0..4 {
        match st.phase {
            Phase::Theta => match theta_step(view, &st)? {
                ThetaOutcome::Move(next) => {
                    notes.push("theta".into());
                    return Ok(finish(next, Phase::Theta, notes, st));
                }
                ThetaOutcome::Blocked => {
                    let cone = st
                        .frame
                        .cone_of(view.current, st.dest.point)
                        .map_err(|e: GeomError| RouteError::GeneralPosition(e.to_string()))?;
                    notes.push(format!("blocked in {cone:?}; avoid from {}", view.id));
                    st.enter_avoid(
                        Endpoint {
                            id: view.id,
                            point: view.current,
                        },
                        cone,
                    );
                }
            },
            Phase::Avoid => {
                if let Some(res) = phase_end_resolution(view, &st)? {
                    match res {
                        Resolution::Theta => {
                            notes.push(format!("phase end at {}: nearer endpoint", view.id));
                            st.enter_theta();
                        }
                        Resolution::Opposite(target) => {
                            notes.push(format!(
                                "phase end at {}: opposite endpoint {}",
                                view.id, target.id
                            ));
                            st.enter_opposite(target);
                        }
                    }
                    continue;
                }
                let before = st.avoid_ref_cone;
                let next = match st.mode {
                    Mode::Theta6 => avoid_step_theta6(view, &mut st)?,
                    Mode::Vis => avoid_step_vis(view, &mut st)?,
                };
                if st.avoid_ref_cone != before {
                    notes.push(format!(
                        "reference cone now {:?}",
                        st.avoid_ref_cone.unwrap()
                    ));
                }
                notes.push("avoid".into());
                return Ok(finish(next, Phase::Avoid, notes, st));
            }
            Phase::Opposite => {
                let next = opposite_step(view, &st)?;
                notes.push("opposite".into());
                let arrived = Some(next) == st.opposite_target.map(|e| e.id);
                let taken = Phase::Opposite;
                if arrived {
                    st.enter_theta();
                }
                return Ok(finish(next, taken, notes, st));
            }
        }
    }
    Err(RouteError::Rule(format!(
        "phase changes at {} did not settle on a hop",
        view.id
    )))
}

fn finish(next: VertexId, phase: Phase, notes: Vec<String>, state: MessageState) -> Decision {
    Decision {
        next,
        phase,
        note: notes.join("; "),
        state,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub vertex: VertexId,
    pub phase: Phase,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Reached,
    StepCap,
    Error(RouteError),
}

impl Serialize for Outcome {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Outcome::Reached => "REACHED",
            Outcome::StepCap => "STEP_CAP",
            Outcome::Error(_) => "ERROR",
        })
    }
}

fn frame_pair<S: Serializer>(f: &Frame, s: S) -> Result<S::Ok, S::Error> {
    let d = f.direction();
    [d.x, d.y].serialize(s)
}

/// Every vertex visited, with the phase each hop was taken in. `steps[0]`
/// is the source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub source: VertexId,
    pub dest: VertexId,
    pub mode: Mode,
    #[serde(serialize_with = "frame_pair")]
    pub frame: Frame,
    pub steps: Vec<TraceStep>,
    pub outcome: Outcome,
    pub step_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Message held at each vertex before its decision; one per hop.
    #[serde(skip)]
    pub messages: Vec<MessageState>,
}

impl Trace {
    pub fn vertices(&self) -> Vec<VertexId> {
        self.steps.iter().map(|s| s.vertex).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// Routes from `s` to `t`. The graph must match `mode`: the constrained
/// Θ₆-graph built with `frame` for [`Mode::Theta6`], the visibility graph
/// for [`Mode::Vis`]. `step_cap` defaults to `n²`.
pub fn route(
    inst: &Instance,
    graph: &impl Adjacency,
    s: VertexId,
    t: VertexId,
    mode: Mode,
    frame: Frame,
    step_cap: Option<usize>,
) -> Trace {
    let n = inst.len();
    let cap = step_cap.unwrap_or(n * n).max(1);
    let dest = Endpoint {
        id: t,
        point: inst.point(t),
    };
    let mut st = MessageState::new(dest, frame, mode);
    let mut trace = Trace {
        source: s,
        dest: t,
        mode,
        frame,
        steps: vec![TraceStep {
            vertex: s,
            phase: Phase::Theta,
            note: "start".into(),
        }],
        outcome: Outcome::Reached,
        step_count: 0,
        error: None,
        messages: Vec::new(),
    };
    let mut cur = s;
    let mut opposite_run = 0;
    while cur != t {
        if trace.step_count >= cap {
            trace.outcome = Outcome::StepCap;
            break;
        }
        let view = local_view(inst, graph, cur);
        trace.messages.push(st.clone());
        match step(&view, &st) {
            Ok(d) => {
                debug_assert!(view.neighbor(d.next).is_some());
                opposite_run = if mode == Mode::Theta6 && d.phase == Phase::Opposite {
                    opposite_run + 1
                } else {
                    0
                };
                trace.steps.push(TraceStep {
                    vertex: d.next,
                    phase: d.phase,
                    note: d.note,
                });
                trace.step_count += 1;
                cur = d.next;
                st = d.state;
                if opposite_run > n {
                    trace.outcome = Outcome::Error(RouteError::Substitute(format!(
                        "opposite-endpoint phase exceeded {n} hops"
                    )));
                    break;
                }
            }
            Err(e) => {
                trace.outcome = Outcome::Error(e);
                break;
            }
        }
    }
    if let Outcome::Error(e) = &trace.outcome {
        trace.error = Some(e.to_string());
    }
    trace
}
