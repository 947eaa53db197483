//! The five-point line on the vertices of a regular pentagon.
//!
//! Every triple of pentagon vertices spans an isosceles, non-equilateral
//! triangle. The vertex shared by its two equal sides (the apex) is the
//! point between the other two. Chord length grows with cyclic distance,
//! so the apex is found purely combinatorially.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::literal::{self, ParseError};

/// One of the pentagon vertices `A..E`, numbered 0..4 in cyclic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Vertex(u8);

impl Vertex {
    pub const A: Vertex = Vertex(0);
    pub const B: Vertex = Vertex(1);
    pub const C: Vertex = Vertex(2);
    pub const D: Vertex = Vertex(3);
    pub const E: Vertex = Vertex(4);
    pub const ALL: [Vertex; 5] = [Self::A, Self::B, Self::C, Self::D, Self::E];

    pub fn new(index: usize) -> Option<Vertex> {
        (index < 5).then_some(Vertex(index as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn letter(self) -> char {
        (b'A' + self.0) as char
    }

    pub fn from_letter(c: char) -> Option<Vertex> {
        match c {
            'A'..='E' => Some(Vertex(c as u8 - b'A')),
            _ => None,
        }
    }

    /// The vertex `k` steps further around the pentagon.
    pub fn shift(self, k: i64) -> Vertex {
        Vertex((self.0 as i64 + k).rem_euclid(5) as u8)
    }

    /// Cyclic distance, 0, 1 or 2.
    pub fn cyclic_distance(self, other: Vertex) -> u8 {
        let d = (self.0 as i8 - other.0 as i8).rem_euclid(5) as u8;
        d.min(5 - d)
    }

    pub fn is_adjacent(self, other: Vertex) -> bool {
        self.cyclic_distance(other) == 1
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Vertex {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        literal::parse_complete(s, |c| c.vertex())
    }
}

impl From<Vertex> for String {
    fn from(v: Vertex) -> String {
        v.to_string()
    }
}

impl TryFrom<String> for Vertex {
    type Error = ParseError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum PentalineError {
    #[error("the vertices are not pairwise distinct")]
    NotDistinct,
    #[error("a segment needs two distinct endpoints")]
    Degenerate,
    #[error("the closed segments share more than one point")]
    OverlappingSegments,
    #[error("the segments do not meet in a common endpoint")]
    NoCommonEndpoint,
}

/// The apex of the isosceles triangle `ijk`.
pub fn apex_of(i: Vertex, j: Vertex, k: Vertex) -> Result<Vertex, PentalineError> {
    if i == j || j == k || i == k {
        return Err(PentalineError::NotDistinct);
    }
    let apex = [(i, j, k), (j, i, k), (k, i, j)]
        .into_iter()
        .find(|&(v, p, q)| v.cyclic_distance(p) == v.cyclic_distance(q))
        .map(|(v, _, _)| v);
    // every 3-subset of a 5-cycle has exactly one vertex equidistant from the others
    Ok(apex.expect("pentagon triangles are isosceles"))
}

/// `(x y z)`: `y` lies between `x` and `z`.
pub fn between5(x: Vertex, y: Vertex, z: Vertex) -> bool {
    apex_of(x, y, z).map(|a| a == y).unwrap_or(false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SegmentClass {
    /// Legs are two consecutive pentagon edges.
    Small,
    /// Base is a pentagon edge.
    Large,
}

/// A length in GF(3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gf3(u8);

impl Gf3 {
    pub const ZERO: Gf3 = Gf3(0);
    pub const ONE: Gf3 = Gf3(1);
    pub const TWO: Gf3 = Gf3(2);
    pub const ALL: [Gf3; 3] = [Self::ZERO, Self::ONE, Self::TWO];

    pub fn value(self) -> u8 {
        self.0
    }
}

impl Add for Gf3 {
    type Output = Gf3;
    fn add(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 + rhs.0) % 3)
    }
}

impl fmt::Display for Gf3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A closed segment: two endpoints and the single interior point.
///
/// Endpoints are stored in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment5 {
    end1: Vertex,
    end2: Vertex,
    apex: Vertex,
    class: SegmentClass,
}

impl Segment5 {
    pub fn ends(&self) -> (Vertex, Vertex) {
        (self.end1, self.end2)
    }

    pub fn apex(&self) -> Vertex {
        self.apex
    }

    pub fn class(&self) -> SegmentClass {
        self.class
    }

    pub fn points(&self) -> [Vertex; 3] {
        [self.end1, self.apex, self.end2]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.points().contains(&v)
    }

    pub fn is_endpoint(&self, v: Vertex) -> bool {
        v == self.end1 || v == self.end2
    }

    pub fn length(&self) -> Gf3 {
        segment_length(self)
    }

    fn other_end(&self, v: Vertex) -> Vertex {
        if v == self.end1 {
            self.end2
        } else {
            self.end1
        }
    }
}

impl fmt::Display for Segment5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.end1, self.end2)
    }
}

pub fn closed_segment(i: Vertex, j: Vertex) -> Result<Segment5, PentalineError> {
    if i == j {
        return Err(PentalineError::Degenerate);
    }
    let apex = Vertex::ALL
        .into_iter()
        .find(|&v| between5(i, v, j))
        .expect("B2/B3: every pair has exactly one point between");
    let class = if i.cyclic_distance(j) == 2 {
        SegmentClass::Small
    } else {
        SegmentClass::Large
    };
    Ok(Segment5 {
        end1: i.min(j),
        end2: i.max(j),
        apex,
        class,
    })
}

/// All ten closed segments, ordered by endpoints.
pub fn all_segments() -> Vec<Segment5> {
    Vertex::ALL
        .into_iter()
        .tuple_combinations()
        .map(|(i, j)| closed_segment(i, j).expect("distinct"))
        .collect()
}

/// Joins two segments meeting exactly in a shared endpoint into the
/// segment spanned by their free ends.
pub fn union_segments(s: &Segment5, t: &Segment5) -> Result<Segment5, PentalineError> {
    let common: Vec<Vertex> = s.points().into_iter().filter(|&v| t.contains(v)).collect();
    match common.as_slice() {
        [v] if s.is_endpoint(*v) && t.is_endpoint(*v) => {
            closed_segment(s.other_end(*v), t.other_end(*v))
        }
        [_] | [] => Err(PentalineError::NoCommonEndpoint),
        _ => Err(PentalineError::OverlappingSegments),
    }
}

pub fn segment_length(s: &Segment5) -> Gf3 {
    length_under(s.class, (Gf3::ONE, Gf3::TWO))
}

fn length_under(class: SegmentClass, labels: (Gf3, Gf3)) -> Gf3 {
    match class {
        SegmentClass::Small => labels.0,
        SegmentClass::Large => labels.1,
    }
}

/// All nonzero labellings `(small, large)` that are additive on every
/// valid union.
pub fn additive_labellings() -> Vec<(Gf3, Gf3)> {
    let segments = all_segments();
    let unions: Vec<(Segment5, Segment5, Segment5)> = segments
        .iter()
        .cartesian_product(segments.iter())
        .filter_map(|(s, t)| union_segments(s, t).ok().map(|u| (*s, *t, u)))
        .collect();
    Gf3::ALL
        .into_iter()
        .cartesian_product(Gf3::ALL)
        .filter(|&(small, large)| small != Gf3::ZERO || large != Gf3::ZERO)
        .filter(|&labels| {
            unions.iter().all(|(s, t, u)| {
                length_under(u.class, labels)
                    == length_under(s.class, labels) + length_under(t.class, labels)
            })
        })
        .collect()
}

pub fn congruent(s: &Segment5, t: &Segment5) -> bool {
    s.class == t.class
}

/// Number of segments of class `class` with `p` as an endpoint.
pub fn layoff_count(p: Vertex, class: SegmentClass) -> usize {
    all_segments()
        .iter()
        .filter(|s| s.class == class && s.is_endpoint(p))
        .count()
}

fn strictly_between_in_order(pos: &[usize], x: usize, y: usize, z: usize) -> bool {
    (pos[x] < pos[y] && pos[y] < pos[z]) || (pos[z] < pos[y] && pos[y] < pos[x])
}

fn positions(order: &[usize], n: usize) -> Vec<usize> {
    let mut pos = vec![0; n];
    for (rank, &p) in order.iter().enumerate() {
        pos[p] = rank;
    }
    pos
}

/// Counts the linear orders of `0..n` whose induced betweenness equals
/// `relation` on every triple of distinct points. Returns `(orders, compatible)`.
pub fn orders_inducing(n: usize, relation: impl Fn(usize, usize, usize) -> bool) -> (usize, usize) {
    let mut total = 0;
    let mut compatible = 0;
    for order in (0..n).permutations(n) {
        total += 1;
        let pos = positions(&order, n);
        let ok = (0..n).permutations(3).all(|t| {
            relation(t[0], t[1], t[2]) == strictly_between_in_order(&pos, t[0], t[1], t[2])
        });
        if ok {
            compatible += 1;
        }
    }
    (total, compatible)
}

/// Counts the linear orders of `0..n` in which every listed triple
/// `(x, y, z)` has `y` strictly between `x` and `z`.
pub fn orders_satisfying(n: usize, triples: &[(usize, usize, usize)]) -> (usize, usize) {
    let mut total = 0;
    let mut compatible = 0;
    for order in (0..n).permutations(n) {
        total += 1;
        let pos = positions(&order, n);
        if triples
            .iter()
            .all(|&(x, y, z)| strictly_between_in_order(&pos, x, y, z))
        {
            compatible += 1;
        }
    }
    (total, compatible)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSearch {
    pub total_orders: usize,
    pub compatible_orders: usize,
    /// Orders of `{A, B, C, E}` tried against `(ABC)`, `(ACE)`, `(EAB)`.
    pub restricted_orders: usize,
    pub restricted_compatible: usize,
}

impl OrderSearch {
    pub fn no_order_exists(&self) -> bool {
        self.compatible_orders == 0 && self.restricted_compatible == 0
    }
}

/// Shows that the apex betweenness does not come from any linear order.
pub fn no_linear_order_witness() -> OrderSearch {
    let (total_orders, compatible_orders) = orders_inducing(5, |x, y, z| {
        between5(Vertex::ALL[x], Vertex::ALL[y], Vertex::ALL[z])
    });
    // A, B, C, E relabelled 0, 1, 2, 3
    let (restricted_orders, restricted_compatible) =
        orders_satisfying(4, &[(0, 1, 2), (0, 2, 3), (3, 0, 1)]);
    OrderSearch {
        total_orders,
        compatible_orders,
        restricted_orders,
        restricted_compatible,
    }
}

/// Two segments of opposite class whose closed sets cover `s`.
pub fn archimedes_cover(s: &Segment5) -> Option<(Segment5, Segment5)> {
    let others: Vec<Segment5> = all_segments()
        .into_iter()
        .filter(|t| t.class != s.class)
        .collect();
    others
        .iter()
        .tuple_combinations()
        .find(|(t, u)| s.points().iter().all(|&v| t.contains(v) || u.contains(v)))
        .map(|(t, u)| (*t, *u))
}

/// A pair of distinct closed segments with the first inside the second.
pub fn nested_segments() -> Option<(Segment5, Segment5)> {
    let segments = all_segments();
    segments
        .iter()
        .cartesian_product(segments.iter())
        .find(|(s, t)| s != t && s.points().iter().all(|&v| t.contains(v)))
        .map(|(s, t)| (*s, *t))
}

/// Outcome of scanning all two-part partitions of the line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DedekindScan {
    /// Partitions with both parts of size ≥ 2 that satisfy the cut
    /// precondition.
    pub cuts: Vec<(Vec<Vertex>, Vec<Vertex>)>,
    /// Partitions with a singleton part; these satisfy the precondition
    /// vacuously.
    pub singleton_partitions: usize,
    pub partitions_checked: usize,
}

pub(crate) fn separates(inside: &[Vertex], outside: &[Vertex]) -> bool {
    inside.iter().any(|&y| {
        outside
            .iter()
            .tuple_combinations()
            .any(|(&x, &z)| between5(x, y, z))
    })
}

pub fn dedekind_scan() -> DedekindScan {
    let mut cuts = Vec::new();
    let mut singleton_partitions = 0;
    let mut partitions_checked = 0;
    // bit 4 is fixed in the complement so each unordered partition is seen once
    for mask in 1u8..16 {
        let (first, second): (Vec<Vertex>, Vec<Vertex>) = Vertex::ALL
            .into_iter()
            .partition(|v| mask & (1 << v.0) != 0);
        partitions_checked += 1;
        if first.len() < 2 || second.len() < 2 {
            singleton_partitions += 1;
            continue;
        }
        if !separates(&first, &second) && !separates(&second, &first) {
            cuts.push((first, second));
        }
    }
    DedekindScan {
        cuts,
        singleton_partitions,
        partitions_checked,
    }
}

/// The ten unordered triples with their apex, in lexicographic order.
pub fn apex_table() -> Vec<([Vertex; 3], Vertex)> {
    Vertex::ALL
        .into_iter()
        .tuple_combinations()
        .map(|(i, j, k)| ([i, j, k], apex_of(i, j, k).expect("distinct")))
        .collect()
}
