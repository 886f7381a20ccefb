use serde::{Deserialize, Serialize};

use crate::chains::{ChainState, Turn};
use crate::geom::{ConeIndex, Frame, Point};
use crate::instance::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Mode {
    Theta6,
    Vis,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Theta6 => "THETA6",
            Mode::Vis => "VIS",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "THETA6" => Ok(Mode::Theta6),
            "VIS" => Ok(Mode::Vis),
            _ => Err(format!("unknown mode `{s}` (expected THETA6 or VIS)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Phase {
    Theta,
    Avoid,
    Opposite,
}

/// A vertex remembered by the message: its id and position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Endpoint {
    pub id: VertexId,
    pub point: Point,
}

/// The message memory. Phase-specific fields are `None` outside their
/// phase.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MessageState {
    pub dest: Endpoint,
    pub frame: Frame,
    pub mode: Mode,
    pub phase: Phase,
    pub avoid_origin: Option<Endpoint>,
    pub avoid_ref_cone: Option<ConeIndex>,
    pub chain: Option<ChainState>,
    pub opposite_target: Option<Endpoint>,
}

/// Byte length of [`MessageState::to_bytes`].
pub const MESSAGE_BYTES: usize = 24 + 16 + 2 + 25 + 2 + 10 + 25;

fn put_endpoint(out: &mut Vec<u8>, e: Option<Endpoint>) {
    out.push(e.is_some() as u8);
    let e = e.unwrap_or(Endpoint {
        id: 0,
        point: Point::new(0, 0),
    });
    out.extend_from_slice(&(e.id as u64).to_le_bytes());
    out.extend_from_slice(&e.point.x.to_le_bytes());
    out.extend_from_slice(&e.point.y.to_le_bytes());
}

struct Reader<'a>(&'a [u8]);

impl Reader<'_> {
    fn u8(&mut self) -> u8 {
        let (h, t) = self.0.split_first().expect("length checked");
        self.0 = t;
        *h
    }
    fn u64(&mut self) -> u64 {
        let (h, t) = self.0.split_at(8);
        self.0 = t;
        u64::from_le_bytes(h.try_into().unwrap())
    }
    fn i64(&mut self) -> i64 {
        self.u64() as i64
    }
    fn endpoint(&mut self) -> Option<Endpoint> {
        let present = self.u8() != 0;
        let id = self.u64() as VertexId;
        let point = Point::new(self.i64(), self.i64());
        present.then_some(Endpoint { id, point })
    }
}

impl MessageState {
    pub fn new(dest: Endpoint, frame: Frame, mode: Mode) -> Self {
        MessageState {
            dest,
            frame,
            mode,
            phase: Phase::Theta,
            avoid_origin: None,
            avoid_ref_cone: None,
            chain: None,
            opposite_target: None,
        }
    }

    pub(crate) fn enter_theta(&mut self) {
        self.phase = Phase::Theta;
        self.avoid_origin = None;
        self.avoid_ref_cone = None;
        self.chain = None;
        self.opposite_target = None;
    }

    pub(crate) fn enter_avoid(&mut self, origin: Endpoint, ref_cone: ConeIndex) {
        self.enter_theta();
        self.phase = Phase::Avoid;
        self.avoid_origin = Some(origin);
        self.avoid_ref_cone = Some(ref_cone);
    }

    pub(crate) fn enter_opposite(&mut self, target: Endpoint) {
        self.enter_theta();
        self.phase = Phase::Opposite;
        self.opposite_target = Some(target);
    }

    /// Fixed-width little-endian encoding, [`MESSAGE_BYTES`] long whatever
    /// the phase or instance size.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(MESSAGE_BYTES);
        out.extend_from_slice(&(self.dest.id as u64).to_le_bytes());
        out.extend_from_slice(&self.dest.point.x.to_le_bytes());
        out.extend_from_slice(&self.dest.point.y.to_le_bytes());
        let d = self.frame.direction();
        out.extend_from_slice(&d.x.to_le_bytes());
        out.extend_from_slice(&d.y.to_le_bytes());
        out.push(self.mode as u8);
        out.push(self.phase as u8);
        put_endpoint(&mut out, self.avoid_origin);
        out.push(self.avoid_ref_cone.is_some() as u8);
        out.push(self.avoid_ref_cone.map_or(0, |c| c.index() as u8));
        out.push(self.chain.is_some() as u8);
        let (pred, turn) = self.chain.map_or((0, 0), |c| {
            (c.predecessor as u64, (c.turn == Turn::Ccw) as u8)
        });
        out.extend_from_slice(&pred.to_le_bytes());
        out.push(turn);
        put_endpoint(&mut out, self.opposite_target);
        debug_assert_eq!(out.len(), MESSAGE_BYTES);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Option<Self> {
        if bytes.len() != MESSAGE_BYTES {
            return None;
        }
        let mut r = Reader(bytes);
        let dest = Endpoint {
            id: r.u64() as VertexId,
            point: Point::new(r.i64(), r.i64()),
        };
        let frame = Frame::new(r.i64(), r.i64()).ok()?;
        let mode = [Mode::Theta6, Mode::Vis].get(r.u8() as usize).copied()?;
        let phase = [Phase::Theta, Phase::Avoid, Phase::Opposite]
            .get(r.u8() as usize)
            .copied()?;
        let avoid_origin = r.endpoint();
        let has_cone = r.u8() != 0;
        let cone = r.u8();
        let has_chain = r.u8() != 0;
        let pred = r.u64() as VertexId;
        let turn = if r.u8() == 0 { Turn::Cw } else { Turn::Ccw };
        let opposite_target = r.endpoint();
        Some(MessageState {
            dest,
            frame,
            mode,
            phase,
            avoid_origin,
            avoid_ref_cone: (has_cone && cone < 6).then(|| ConeIndex::new(cone)),
            chain: has_chain.then_some(ChainState {
                predecessor: pred,
                turn,
            }),
            opposite_target,
        })
    }
}
