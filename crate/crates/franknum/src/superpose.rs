//! Superposition of the three reference orientations under a value schedule,
//! producing an all-positive integer flow.
//!
//! A schedule assigns a positive value to each coordinate and optionally
//! reverses a coordinate's circuits wholesale. For an edge lying in a set of
//! coordinates, the signed sum of their values (signs taken against the
//! edge's stored u < v direction) decides both the final arc direction and
//! the final value. Admissible schedules make every such sum nonzero, so the
//! result is nowhere-zero by construction.

use crate::circuits::CircuitOrientation;
use crate::graph::{EdgeId, Graph, Orientation};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SuperposeError {
    #[error("schedule {name} with values {values:?} is inadmissible: a signed sum of two or three of its values is zero")]
    Inadmissible { name: String, values: [u32; 3] },
    #[error("edge {edge} lies in no coordinate subgraph; the source flow is not nowhere-zero")]
    UncoveredEdge { edge: EdgeId },
}

/// Values sent along the three reference orientations, with per-coordinate
/// reversal flags. `values[i]` and `reversed[i]` apply to coordinate `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueSchedule {
    pub values: [u32; 3],
    pub reversed: [bool; 3],
    pub name: String,
}

impl ValueSchedule {
    pub fn new(values: [u32; 3], reversed: [bool; 3], name: &str) -> Self {
        Self { values, reversed, name: name.to_string() }
    }
}

/// An orientation of the whole edge set together with a positive value per
/// edge. Valid flows conserve value at every vertex; see [`verify_int_flow`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntFlow {
    pub orientation: Orientation,
    pub values: Vec<u32>,
}

/// The five schedules used to build the certificate family, in order
/// S1..S5.
pub fn standard_schedules() -> [ValueSchedule; 5] {
    [
        ValueSchedule::new([1, 2, 4], [false, false, false], "S1"),
        ValueSchedule::new([4, 2, 3], [false, false, false], "S2"),
        ValueSchedule::new([4, 2, 3], [false, false, true], "S3"),
        ValueSchedule::new([2, 1, 4], [false, true, false], "S4"),
        ValueSchedule::new([2, 4, 1], [false, true, false], "S5"),
    ]
}

/// True iff all values are positive and no signed sum of two or three of
/// them vanishes. Exactly the inadmissible sums would create a zero edge in
/// some superposition.
pub fn is_admissible(s: &ValueSchedule) -> bool {
    if s.values.contains(&0) {
        return false;
    }
    let v: Vec<i64> = s.values.iter().map(|&x| x as i64).collect();
    for subset in [[0, 1].as_slice(), &[0, 2], &[1, 2], &[0, 1, 2]] {
        for signs in 0u32..1 << subset.len() {
            let sum: i64 = subset
                .iter()
                .enumerate()
                .map(|(pos, &i)| if signs >> pos & 1 == 1 { -v[i] } else { v[i] })
                .sum();
            if sum == 0 {
                return false;
            }
        }
    }
    true
}

/// Combines the coordinate orientations under `s`: each edge's arc follows
/// the sign of its signed value sum and carries the absolute value.
pub fn superpose(
    g: &Graph,
    co: &CircuitOrientation,
    s: &ValueSchedule,
) -> Result<IntFlow, SuperposeError> {
    if !is_admissible(s) {
        return Err(SuperposeError::Inadmissible { name: s.name.clone(), values: s.values });
    }
    let mut forward = Vec::with_capacity(g.edge_count());
    let mut values = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        let mut sum = 0i64;
        let mut covered = false;
        for i in 0..3 {
            if let Some(dir) = co.coords[i].arc_dir[e] {
                covered = true;
                let effective = dir != s.reversed[i];
                sum += if effective { s.values[i] as i64 } else { -(s.values[i] as i64) };
            }
        }
        if !covered {
            return Err(SuperposeError::UncoveredEdge { edge: e });
        }
        debug_assert_ne!(sum, 0, "admissible schedules cannot cancel");
        forward.push(sum > 0);
        values.push(sum.unsigned_abs() as u32);
    }
    Ok(IntFlow { orientation: Orientation { forward }, values })
}

/// True iff every value is positive and, at every vertex, incoming and
/// outgoing values balance.
pub fn verify_int_flow(g: &Graph, f: &IntFlow) -> bool {
    assert_eq!(f.values.len(), g.edge_count(), "flow must index the graph's edges");
    assert_eq!(f.orientation.forward.len(), g.edge_count());
    if f.values.contains(&0) {
        return false;
    }
    let mut balance = vec![0i64; g.vertex_count()];
    for e in 0..g.edge_count() {
        let (tail, head) = f.orientation.arc(g, e);
        balance[tail] += f.values[e] as i64;
        balance[head] -= f.values[e] as i64;
    }
    balance.iter().all(|&b| b == 0)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Table1Error {
    #[error("no coordinate bit is set")]
    ZeroBits,
    #[error("coordinate pair {pair:?} is not two distinct coordinates in 1..=3")]
    BadPair { pair: (usize, usize) },
    #[error("agreement names pair {pair:?} but the edge is absent from one of those coordinates")]
    AbsentCoordinate { pair: (usize, usize) },
    #[error("agreement for pair {pair:?} appears more than once")]
    DuplicatePair { pair: (usize, usize) },
    #[error("no agreement given for coordinate pair {pair:?}")]
    MissingPair { pair: (usize, usize) },
    #[error("the three pairwise agreements are mutually inconsistent")]
    InconsistentTriple,
}

/// Direction agreement of one edge across two coordinates that both contain
/// it. `pair` is 1-based with the lower coordinate first; `same` is true
/// when the two reference orientations traverse the edge the same way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairAgreement {
    pub pair: (usize, usize),
    pub same: bool,
}

/// Case table for the (1,2,4) no-reversal schedule, kept as an explicit
/// thirteen-row lookup so it can serve as an independent oracle for
/// [`superpose`]. Returns the 1-based coordinate whose direction the edge
/// follows and the resulting value.
pub fn classify_edge_table1(
    bits: [bool; 3],
    agreement: &[PairAgreement],
) -> Result<(usize, u32), Table1Error> {
    let present: Vec<usize> = (1..=3).filter(|&i| bits[i - 1]).collect();
    if present.is_empty() {
        return Err(Table1Error::ZeroBits);
    }

    let mut same = [[None; 4]; 4];
    for a in agreement {
        let (i, j) = a.pair;
        if !(1..=3).contains(&i) || !(1..=3).contains(&j) || i >= j {
            return Err(Table1Error::BadPair { pair: a.pair });
        }
        if !bits[i - 1] || !bits[j - 1] {
            return Err(Table1Error::AbsentCoordinate { pair: a.pair });
        }
        if same[i][j].is_some() {
            return Err(Table1Error::DuplicatePair { pair: a.pair });
        }
        same[i][j] = Some(a.same);
    }
    for w in present.windows(2) {
        let (i, j) = (w[0], w[1]);
        if same[i][j].is_none() {
            return Err(Table1Error::MissingPair { pair: (i, j) });
        }
    }
    if present.len() == 3 {
        if same[1][3].is_none() {
            return Err(Table1Error::MissingPair { pair: (1, 3) });
        }
        let diffs = [same[1][2], same[1][3], same[2][3]]
            .iter()
            .filter(|s| **s == Some(false))
            .count();
        if diffs % 2 == 1 {
            return Err(Table1Error::InconsistentTriple);
        }
    }

    let outcome = match (bits, present.as_slice()) {
        (_, [i]) => (*i, [1, 2, 4][*i - 1]),
        (_, [i, j]) => {
            // pair values under (1,2,4): agreement adds, disagreement
            // leaves the larger value's direction and the difference
            let (vi, vj) = ([1, 2, 4][*i - 1], [1, 2, 4][*j - 1]);
            if same[*i][*j] == Some(true) {
                (*j, vi + vj)
            } else {
                (*j, vj - vi)
            }
        }
        (_, [1, 2, 3]) => {
            match (same[1][2], same[1][3], same[2][3]) {
                (Some(true), Some(true), Some(true)) => (3, 7),
                // o1 against o2 = o3
                (Some(false), Some(false), Some(true)) => (3, 5),
                // o2 against o1 = o3
                (Some(false), Some(true), Some(false)) => (3, 3),
                // o3 against o1 = o2
                (Some(true), Some(false), Some(false)) => (3, 1),
                _ => unreachable!("parity was checked above"),
            }
        }
        _ => unreachable!("present is a nonempty subset of 1..=3"),
    };
    Ok(outcome)
}
