//! The prism model.
//!
//! Points live on the five vertical lines over the pentagon vertices. A
//! line is either one of those verticals or the five-point trace of a
//! non-vertical plane through the pentagon centre `O`. Such a trace
//! ("harmonic line") is stored by its heights over `A` and `B`; the other
//! heights follow from `h(k+2) = φ'·h(k+1) − h(k)` with `φ' = 2cos72°`,
//! and the sequence has period five.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::literal::{self, ParseError};
use crate::pentaline::{self, between5, Vertex};
use crate::qfield::QuadSqrt5;
use crate::sampling::Stream;
use crate::scalar::{PentagonScalar, RationalScalar};
use crate::{PrismLine, PrismPoint, Qs5};

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum PrismError {
    #[error("operation needs a harmonic line")]
    WrongVariant,
    #[error("the two points coincide")]
    SamePoint,
    #[error("the two lines coincide")]
    SameLine,
    #[error("the points are not collinear")]
    NotCollinear,
    #[error("the points are not pairwise distinct")]
    NotDistinct,
    #[error("the point lies on the line")]
    IncidentPoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point<S> {
    pub vertex: Vertex,
    pub height: S,
}

impl<S> Point<S> {
    pub fn new(vertex: Vertex, height: S) -> Self {
        Self { vertex, height }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Line<S> {
    Vertical(Vertex),
    Harmonic { h0: S, h1: S },
}

/// Row `k` expresses `h(k)` as `p·h0 + q·h1`.
fn coefficient_row<S: PentagonScalar>(k: Vertex) -> (S, S) {
    let phi = S::phi_prime();
    match k.index() {
        0 => (S::one(), S::zero()),
        1 => (S::zero(), S::one()),
        2 => (-S::one(), phi),
        3 => (-phi.clone(), -phi),
        _ => (phi, -S::one()),
    }
}

/// Runs the height recurrence for `n` terms starting from `h0, h1`.
pub fn extend_heights<S: PentagonScalar>(h0: S, h1: S, n: usize) -> Vec<S> {
    let phi = S::phi_prime();
    let mut out = vec![h0, h1];
    while out.len() < n {
        let k = out.len();
        let next = phi.clone() * out[k - 1].clone() - out[k - 2].clone();
        out.push(next);
    }
    out.truncate(n);
    out
}

impl<S: PentagonScalar> Line<S> {
    pub fn vertical(v: Vertex) -> Self {
        Line::Vertical(v)
    }

    pub fn harmonic(h0: S, h1: S) -> Self {
        Line::Harmonic { h0, h1 }
    }

    /// The pentagon plane itself, `ABCDE`.
    pub fn base() -> Self {
        Line::Harmonic {
            h0: S::zero(),
            h1: S::zero(),
        }
    }

    pub fn is_vertical(&self) -> bool {
        matches!(self, Line::Vertical(_))
    }

    /// Height of the line's point over `v`; `None` for verticals.
    pub fn height_at(&self, v: Vertex) -> Option<S> {
        match self {
            Line::Vertical(_) => None,
            Line::Harmonic { h0, h1 } => {
                let (p, q) = coefficient_row::<S>(v);
                Some(p * h0.clone() + q * h1.clone())
            }
        }
    }

    pub fn point_at(&self, v: Vertex) -> Option<Point<S>> {
        self.height_at(v).map(|h| Point::new(v, h))
    }
}

pub fn heights_of<S: PentagonScalar>(l: &Line<S>) -> Result<[S; 5], PrismError> {
    if l.is_vertical() {
        return Err(PrismError::WrongVariant);
    }
    Ok(Vertex::ALL.map(|v| l.height_at(v).expect("harmonic")))
}

pub fn incident<S: PentagonScalar>(p: &Point<S>, l: &Line<S>) -> bool {
    match l {
        Line::Vertical(v) => p.vertex == *v,
        Line::Harmonic { .. } => l.height_at(p.vertex).as_ref() == Some(&p.height),
    }
}

pub fn line_through<S: PentagonScalar>(p: &Point<S>, q: &Point<S>) -> Result<Line<S>, PrismError> {
    if p == q {
        return Err(PrismError::SamePoint);
    }
    if p.vertex == q.vertex {
        return Ok(Line::Vertical(p.vertex));
    }
    let (pi, qi) = coefficient_row::<S>(p.vertex);
    let (pj, qj) = coefficient_row::<S>(q.vertex);
    let det = pi.clone() * qj.clone() - pj.clone() * qi.clone();
    let h0 = (p.height.clone() * qj - q.height.clone() * qi) / det.clone();
    let h1 = (pi * q.height.clone() - pj * p.height.clone()) / det;
    Ok(Line::Harmonic { h0, h1 })
}

/// Determinant of the 2×2 system solved by `line_through` for vertices `i`, `j`.
pub fn pair_determinant<S: PentagonScalar>(i: Vertex, j: Vertex) -> S {
    let (pi, qi) = coefficient_row::<S>(i);
    let (pj, qj) = coefficient_row::<S>(j);
    pi * qj - pj * qi
}

pub fn intersect<S: PentagonScalar>(
    l: &Line<S>,
    m: &Line<S>,
) -> Result<Option<Point<S>>, PrismError> {
    if l == m {
        return Err(PrismError::SameLine);
    }
    Ok(match (l, m) {
        (Line::Vertical(_), Line::Vertical(_)) => None,
        (Line::Vertical(v), h) | (h, Line::Vertical(v)) => h.point_at(*v),
        _ => Vertex::ALL
            .into_iter()
            .find(|&v| l.height_at(v) == m.height_at(v))
            .and_then(|v| l.point_at(v)),
    })
}

/// Vertices where two harmonic lines have equal height.
pub fn agreement_vertices<S: PentagonScalar>(l: &Line<S>, m: &Line<S>) -> Vec<Vertex> {
    Vertex::ALL
        .into_iter()
        .filter(|&v| l.height_at(v).is_some() && l.height_at(v) == m.height_at(v))
        .collect()
}

pub fn collinear<S: PentagonScalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>) -> bool {
    match line_through(a, b) {
        Ok(l) => incident(c, &l),
        Err(_) => true,
    }
}

/// `(p1 p2 p3)` on a common line: Euclidean order on a vertical, the
/// five-point betweenness of the vertices on a harmonic line.
pub fn between3<S: PentagonScalar>(
    p1: &Point<S>,
    p2: &Point<S>,
    p3: &Point<S>,
) -> Result<bool, PrismError> {
    if p1 == p2 || p2 == p3 || p1 == p3 {
        return Err(PrismError::NotDistinct);
    }
    let line = line_through(p1, p3)?;
    if !incident(p2, &line) {
        return Err(PrismError::NotCollinear);
    }
    Ok(match line {
        Line::Vertical(_) => {
            let up = p1.height < p2.height && p2.height < p3.height;
            let down = p3.height < p2.height && p2.height < p1.height;
            up || down
        }
        Line::Harmonic { .. } => between5(p1.vertex, p2.vertex, p3.vertex),
    })
}

/// A fourth line together with its meeting points with three given lines.
#[derive(Debug, Clone, PartialEq)]
pub struct Transversal<S> {
    pub line: Line<S>,
    pub points: [Point<S>; 3],
}

impl<S: PentagonScalar> Transversal<S> {
    pub fn verify(&self, lines: [&Line<S>; 3]) -> bool {
        let distinct_line = lines.iter().all(|l| **l != self.line);
        let [a, b, c] = &self.points;
        let distinct_points = a != b && b != c && a != c;
        let incidences = self
            .points
            .iter()
            .zip(lines)
            .all(|(p, l)| incident(p, l) && incident(p, &self.line));
        distinct_line && distinct_points && incidences
    }
}

fn finish_transversal<S: PentagonScalar>(
    line: Line<S>,
    lines: [&Line<S>; 3],
) -> Option<Transversal<S>> {
    let points = [
        intersect(&line, lines[0]).ok()??,
        intersect(&line, lines[1]).ok()??,
        intersect(&line, lines[2]).ok()??,
    ];
    let t = Transversal { line, points };
    t.verify(lines).then_some(t)
}

/// Builds a line meeting `x`, `y`, `z` in three distinct points.
///
/// Three harmonics are cut by a vertical where their heights differ. Two
/// harmonics and a vertical are cut by the harmonic through a point of
/// each harmonic at two further vertices. One harmonic and two verticals
/// are cut by a harmonic through a point of the given harmonic at a third
/// vertex, tilted away from it. Three verticals are cut by the base line.
pub fn transversal_for<S: PentagonScalar>(
    x: &Line<S>,
    y: &Line<S>,
    z: &Line<S>,
) -> Result<Transversal<S>, PrismError> {
    if x == y || y == z || x == z {
        return Err(PrismError::SameLine);
    }
    let lines = [x, y, z];
    let verticals: Vec<Vertex> = lines
        .iter()
        .filter_map(|l| match l {
            Line::Vertical(v) => Some(*v),
            _ => None,
        })
        .collect();
    let harmonics: Vec<&Line<S>> = lines.iter().copied().filter(|l| !l.is_vertical()).collect();
    let found = match verticals.len() {
        0 => Vertex::ALL.into_iter().find_map(|v| {
            let [hx, hy, hz] = lines.map(|l| l.height_at(v));
            if hx != hy && hy != hz && hx != hz {
                finish_transversal(Line::Vertical(v), lines)
            } else {
                None
            }
        }),
        1 => {
            let (p, q, a) = (harmonics[0], harmonics[1], verticals[0]);
            let free: Vec<Vertex> = Vertex::ALL.into_iter().filter(|&v| v != a).collect();
            free.iter()
                .flat_map(|&b| free.iter().map(move |&c| (b, c)))
                .filter(|(b, c)| b != c)
                .find_map(|(b, c)| {
                    let r = line_through(&p.point_at(b)?, &q.point_at(c)?).ok()?;
                    if &r == p || &r == q {
                        return None;
                    }
                    finish_transversal(r, lines)
                })
        }
        2 => {
            let p = harmonics[0];
            let third = Vertex::ALL
                .into_iter()
                .find(|v| !verticals.contains(v))
                .expect("five vertices");
            let anchor = p.point_at(third).expect("harmonic");
            let tilt_at = verticals[0];
            let tilted = Point::new(tilt_at, p.height_at(tilt_at).expect("harmonic") + S::one());
            let r = line_through(&anchor, &tilted)?;
            finish_transversal(r, lines)
        }
        _ => finish_transversal(Line::base(), lines),
    };
    // each case above always succeeds; see the module tests
    Ok(found.expect("transversal construction"))
}

/// The canonical refutation of the weak Pasch axiom.
///
/// `P`, `Q`, `R` are the pairwise meets of `l1`, `l2`, `l3`. The vertical
/// `d` over `D` crosses the side `PQ` at its only interior point and meets
/// the lines `PR` and `QR` outside their closed sides.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "S: fmt::Display")]
pub struct PaschStarWitness<S: fmt::Display> {
    pub l1: Line<S>,
    pub l2: Line<S>,
    pub l3: Line<S>,
    pub p: Point<S>,
    pub q: Point<S>,
    pub r: Point<S>,
    pub d: Line<S>,
    pub d_on_pq: Point<S>,
    pub x_d: Point<S>,
    pub z_d: Point<S>,
    pub closed_pq: [Vertex; 3],
    pub closed_qr: [Vertex; 3],
    pub closed_pr: [Vertex; 3],
}

pub fn pasch_star_witness<S: PentagonScalar>() -> PaschStarWitness<S> {
    let two = S::one() + S::one();
    let l1 = Line::harmonic(S::zero(), S::one());
    let l2 = Line::harmonic(S::zero(), two.clone());
    let l3 = Line::harmonic(S::phi_prime(), two);
    let meet = |a: &Line<S>, b: &Line<S>| intersect(a, b).ok().flatten().expect("sides meet");
    let p = meet(&l1, &l2);
    let q = meet(&l2, &l3);
    let r = meet(&l1, &l3);
    let closed = |a: &Point<S>, b: &Point<S>| {
        pentaline::closed_segment(a.vertex, b.vertex)
            .expect("distinct vertices")
            .points()
    };
    let closed_pq = closed(&p, &q);
    let d = Line::Vertical(Vertex::D);
    let d_on_pq = meet(&d, &l2);
    let x_d = meet(&d, &l1);
    let z_d = meet(&d, &l3);
    let w = PaschStarWitness {
        closed_qr: closed(&q, &r),
        closed_pr: closed(&p, &r),
        closed_pq,
        l1,
        l2,
        l3,
        p,
        q,
        r,
        d,
        d_on_pq,
        x_d,
        z_d,
    };
    debug_assert!(w.verify());
    w
}

impl<S: PentagonScalar> PaschStarWitness<S> {
    /// Re-checks every claim of the witness with the model predicates.
    pub fn verify(&self) -> bool {
        let on = |p: &Point<S>, l: &Line<S>| incident(p, l);
        let between = |a: &Point<S>, b: &Point<S>, c: &Point<S>| between3(a, b, c).unwrap_or(false);
        let vertices = [&self.p, &self.q, &self.r];
        let distinct = self.p != self.q && self.q != self.r && self.p != self.r;
        let non_collinear = !collinear(&self.p, &self.q, &self.r);
        let sides = on(&self.p, &self.l1)
            && on(&self.p, &self.l2)
            && on(&self.q, &self.l2)
            && on(&self.q, &self.l3)
            && on(&self.r, &self.l1)
            && on(&self.r, &self.l3);
        let avoids = vertices.iter().all(|v| !on(v, &self.d));
        let enters = on(&self.d_on_pq, &self.d) && between(&self.p, &self.d_on_pq, &self.q);
        let meets_others = on(&self.x_d, &self.d)
            && on(&self.x_d, &self.l1)
            && on(&self.z_d, &self.d)
            && on(&self.z_d, &self.l3);
        let misses = !between(&self.p, &self.x_d, &self.r) && !between(&self.q, &self.z_d, &self.r);
        let misses_closed = !self.closed_pr.contains(&self.x_d.vertex)
            && !self.closed_qr.contains(&self.z_d.vertex);
        distinct
            && non_collinear
            && sides
            && avoids
            && enters
            && meets_others
            && misses
            && misses_closed
    }
}

/// How the lines through an outside point relate to a line.
#[derive(Debug, Clone, PartialEq)]
pub enum Parallelism<S> {
    /// `l` is vertical: the vertical through `X` is the only line missing it.
    UniqueParallel { line: Line<S> },
    /// `l` is harmonic: finitely many lines through `X` meet it.
    FinitelyManyMeet {
        meeting: Vec<Line<S>>,
        sample_parallels: Vec<Line<S>>,
    },
}

pub fn parallels_through<S: PentagonScalar>(
    x: &Point<S>,
    l: &Line<S>,
    sample_count: usize,
) -> Result<Parallelism<S>, PrismError> {
    if incident(x, l) {
        return Err(PrismError::IncidentPoint);
    }
    if l.is_vertical() {
        return Ok(Parallelism::UniqueParallel {
            line: Line::Vertical(x.vertex),
        });
    }
    let mut meeting = vec![Line::Vertical(x.vertex)];
    for v in Vertex::ALL.into_iter().filter(|&v| v != x.vertex) {
        let on_l = l.point_at(v).expect("harmonic");
        meeting.push(line_through(x, &on_l)?);
    }
    let others: Vec<Vertex> = Vertex::ALL.into_iter().filter(|&v| v != x.vertex).collect();
    let mut sample_parallels: Vec<Line<S>> = Vec::with_capacity(sample_count);
    let mut lift = S::zero();
    while sample_parallels.len() < sample_count {
        lift = lift + S::one();
        for &v in &others {
            if sample_parallels.len() == sample_count {
                break;
            }
            let target = Point::new(v, l.height_at(v).expect("harmonic") + lift.clone());
            let candidate = line_through(x, &target)?;
            if intersect(&candidate, l)?.is_none() && !sample_parallels.contains(&candidate) {
                sample_parallels.push(candidate);
            }
        }
    }
    Ok(Parallelism::FinitelyManyMeet {
        meeting,
        sample_parallels,
    })
}

/// A uniformly random vertex with a random height.
pub fn sample_point(stream: &mut Stream) -> PrismPoint {
    let v = stream.vertex();
    Point::new(v, stream.qs5())
}

/// A vertical with probability 1/5, otherwise a random harmonic line.
pub fn sample_line(stream: &mut Stream) -> PrismLine {
    if stream.chance(0.2) {
        Line::Vertical(stream.vertex())
    } else {
        Line::harmonic(stream.qs5(), stream.qs5())
    }
}

impl<S: fmt::Display> fmt::Display for Line<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Vertical(v) => write!(f, "vertical:{v}"),
            Line::Harmonic { h0, h1 } => write!(f, "harmonic:h0={h0},h1={h1}"),
        }
    }
}

impl<S: fmt::Display> fmt::Display for Point<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "point:{},{}", self.vertex, self.height)
    }
}

impl<R: RationalScalar> FromStr for Line<QuadSqrt5<R>> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        literal::parse_complete(s, |c| {
            if c.eat("vertical:") {
                Ok(Line::Vertical(c.vertex()?))
            } else if c.eat("harmonic:") {
                c.expect("h0=")?;
                let h0 = c.qs5()?;
                c.expect(",h1=")?;
                let h1 = c.qs5()?;
                Ok(Line::Harmonic { h0, h1 })
            } else {
                Err(c.error("expected vertical: or harmonic:"))
            }
        })
    }
}

impl<R: RationalScalar> FromStr for Point<QuadSqrt5<R>> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        literal::parse_complete(s, |c| {
            c.expect("point:")?;
            let v = c.vertex()?;
            c.expect(",")?;
            Ok(Point::new(v, c.qs5()?))
        })
    }
}

impl<S: fmt::Display> Serialize for Line<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> Result<Z::Ok, Z::Error> {
        serializer.collect_str(self)
    }
}

impl<S: fmt::Display> Serialize for Point<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> Result<Z::Ok, Z::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Line<Qs5> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl<'de> Deserialize<'de> for Point<Qs5> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::SampleBounds;
    use crate::scalar::OrderedField;
    use num_traits::{One, Zero};
    use Vertex as V;

    fn qi(n: i64) -> Qs5 {
        Qs5::from_int(n)
    }

    fn phi() -> Qs5 {
        Qs5::phi_prime()
    }

    fn pt(v: V, h: Qs5) -> PrismPoint {
        Point::new(v, h)
    }

    /// Recurrence oracle written out independently of the coefficient table.
    fn unrolled(h0: Qs5, h1: Qs5) -> Vec<Qs5> {
        let mut hs = vec![h0, h1];
        for k in 2..6 {
            let next = phi() * hs[k - 1].clone() - hs[k - 2].clone();
            hs.push(next);
        }
        hs
    }

    #[test]
    fn heights_examples() {
        let zero: [Qs5; 5] = std::array::from_fn(|_| Qs5::zero());
        assert_eq!(heights_of(&PrismLine::base()).unwrap(), zero);
        assert_eq!(
            heights_of(&PrismLine::harmonic(qi(0), qi(1))).unwrap(),
            [qi(0), qi(1), phi(), -phi(), qi(-1)]
        );
        assert_eq!(
            heights_of(&PrismLine::harmonic(qi(1), qi(0))).unwrap(),
            [qi(1), qi(0), qi(-1), -phi(), phi()]
        );
        assert_eq!(
            heights_of(&PrismLine::Vertical(V::A)),
            Err(PrismError::WrongVariant)
        );
    }

    #[test]
    fn coefficient_table_matches_recurrence() {
        let mut s = Stream::new(5, 0, SampleBounds::default());
        for _ in 0..50 {
            let (h0, h1) = (s.qs5(), s.qs5());
            let seq = unrolled(h0.clone(), h1.clone());
            assert_eq!(seq[5], seq[0], "period five");
            let l = PrismLine::harmonic(h0, h1);
            for v in V::ALL {
                assert_eq!(l.height_at(v).unwrap(), seq[v.index()]);
            }
        }
    }

    #[test]
    fn every_pair_system_is_invertible() {
        for i in V::ALL {
            for j in V::ALL {
                if i != j {
                    assert!(!pair_determinant::<Qs5>(i, j).is_zero(), "{i}{j}");
                }
            }
        }
    }

    #[test]
    fn incidence_examples() {
        assert!(incident(&pt(V::A, qi(0)), &PrismLine::base()));
        assert!(incident(&pt(V::A, qi(5)), &PrismLine::Vertical(V::A)));
        assert!(incident(
            &pt(V::C, phi()),
            &PrismLine::harmonic(qi(0), qi(1))
        ));
        assert!(!incident(
            &pt(V::C, qi(1)),
            &PrismLine::harmonic(qi(0), qi(1))
        ));
    }

    #[test]
    fn line_through_examples() {
        assert_eq!(
            line_through(&pt(V::A, qi(0)), &pt(V::B, qi(0))).unwrap(),
            PrismLine::base()
        );
        assert_eq!(
            line_through(&pt(V::A, qi(1)), &pt(V::A, qi(2))).unwrap(),
            PrismLine::Vertical(V::A)
        );
        assert_eq!(
            line_through(&pt(V::B, qi(1)), &pt(V::C, phi())).unwrap(),
            PrismLine::harmonic(qi(0), qi(1))
        );
        let p = pt(V::D, qi(3));
        assert_eq!(line_through(&p, &p), Err(PrismError::SamePoint));
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(
            intersect(&PrismLine::Vertical(V::A), &PrismLine::Vertical(V::B)),
            Ok(None)
        );
        let l = PrismLine::harmonic(qi(0), qi(1));
        assert_eq!(
            intersect(&PrismLine::Vertical(V::C), &l),
            Ok(Some(pt(V::C, phi())))
        );
        let m = PrismLine::harmonic(qi(0), qi(2));
        assert_eq!(intersect(&l, &m), Ok(Some(pt(V::A, qi(0)))));
        assert_eq!(agreement_vertices(&l, &m), vec![V::A]);
        assert_eq!(intersect(&l, &l), Err(PrismError::SameLine));
    }

    #[test]
    fn betweenness_examples() {
        let b = |p: PrismPoint, q: PrismPoint, r: PrismPoint| between3(&p, &q, &r);
        assert_eq!(
            b(pt(V::A, qi(0)), pt(V::A, qi(1)), pt(V::A, qi(2))),
            Ok(true)
        );
        assert_eq!(
            b(pt(V::A, qi(0)), pt(V::B, qi(0)), pt(V::C, qi(0))),
            Ok(true)
        );
        assert_eq!(
            b(pt(V::A, qi(0)), pt(V::B, qi(0)), pt(V::E, qi(0))),
            Ok(false)
        );
        assert_eq!(
            b(pt(V::E, qi(0)), pt(V::A, qi(0)), pt(V::B, qi(0))),
            Ok(true)
        );
        assert_eq!(
            b(pt(V::A, qi(0)), pt(V::B, qi(1)), pt(V::C, qi(0))),
            Err(PrismError::NotCollinear)
        );
        assert_eq!(
            b(pt(V::A, qi(0)), pt(V::A, qi(0)), pt(V::C, qi(0))),
            Err(PrismError::NotDistinct)
        );
    }

    #[test]
    fn transversal_cases() {
        let l01 = PrismLine::harmonic(qi(0), qi(1));
        let l02 = PrismLine::harmonic(qi(0), qi(2));
        let l10 = PrismLine::harmonic(qi(1), qi(0));
        let (a, b, c) = (
            PrismLine::Vertical(V::A),
            PrismLine::Vertical(V::B),
            PrismLine::Vertical(V::C),
        );

        let t = transversal_for(&a, &b, &c).unwrap();
        assert_eq!(t.line, PrismLine::base());
        assert_eq!(
            t.points,
            [pt(V::A, qi(0)), pt(V::B, qi(0)), pt(V::C, qi(0))]
        );

        let t = transversal_for(&l01, &l02, &a).unwrap();
        assert!(!t.line.is_vertical());
        assert!(t.verify([&l01, &l02, &a]));

        let t = transversal_for(&l01, &l02, &l10).unwrap();
        assert!(t.line.is_vertical());
        assert!(t.verify([&l01, &l02, &l10]));

        let t = transversal_for(&l01, &a, &b).unwrap();
        assert!(t.verify([&l01, &a, &b]));

        assert_eq!(transversal_for(&a, &a, &b), Err(PrismError::SameLine));
    }

    #[test]
    fn pasch_star_witness_shape() {
        let w = pasch_star_witness::<Qs5>();
        assert!(w.verify());
        assert_eq!(w.l3, PrismLine::harmonic(phi(), qi(2)));
        assert_eq!(
            (w.p.clone(), w.q.clone(), w.r.clone()),
            (pt(V::A, qi(0)), pt(V::B, qi(2)), pt(V::C, phi()))
        );
        assert_eq!(w.d_on_pq, pt(V::D, qi(-2) * phi()));
        assert_eq!(w.x_d, pt(V::D, -phi()));
        let sorted = |mut s: [V; 3]| {
            s.sort();
            s
        };
        assert_eq!(sorted(w.closed_pq), [V::A, V::B, V::D]);
        assert_eq!(sorted(w.closed_qr), [V::B, V::C, V::E]);
        assert_eq!(sorted(w.closed_pr), [V::A, V::B, V::C]);
    }

    #[test]
    fn parallels_vertical_case() {
        let x = pt(V::B, qi(7));
        assert_eq!(
            parallels_through(&x, &PrismLine::Vertical(V::A), 0),
            Ok(Parallelism::UniqueParallel {
                line: PrismLine::Vertical(V::B)
            })
        );
        assert_eq!(
            parallels_through(&pt(V::A, qi(7)), &PrismLine::Vertical(V::A), 0),
            Err(PrismError::IncidentPoint)
        );
    }

    #[test]
    fn parallels_harmonic_case() {
        let x = pt(V::A, qi(1));
        let base = PrismLine::base();
        let Ok(Parallelism::FinitelyManyMeet {
            meeting,
            sample_parallels,
        }) = parallels_through(&x, &base, 100)
        else {
            panic!("expected harmonic classification");
        };
        assert_eq!(meeting.len(), 5);
        for m in &meeting {
            assert!(incident(&x, m));
            assert!(intersect(m, &base).unwrap().is_some());
        }
        assert_eq!(sample_parallels.len(), 100);
        for (i, p) in sample_parallels.iter().enumerate() {
            assert!(incident(&x, p));
            assert_eq!(intersect(p, &base), Ok(None));
            assert!(!sample_parallels[..i].contains(p));
        }
    }

    #[test]
    fn float_instantiation_agrees_approximately() {
        let l: Line<f64> = Line::harmonic(0.0, 1.0);
        let hs = heights_of(&l).unwrap();
        let expect = [0.0, 1.0, f64::phi_prime(), -f64::phi_prime(), -1.0];
        for (h, e) in hs.iter().zip(expect) {
            assert!((h - e).abs() < 1e-12);
        }
        let seq = extend_heights(0.3f64, -1.7, 11);
        assert!((seq[10] - 0.3).abs() < 1e-12);
    }

    #[test]
    fn literal_round_trip() {
        let l = PrismLine::harmonic(phi(), qi(2));
        assert_eq!(l.to_string(), "harmonic:h0=-1/2+1/2*s5,h1=2");
        assert_eq!(l.to_string().parse::<PrismLine>().unwrap(), l);
        let p: PrismPoint = "point:C,-1/2+1/2*s5".parse().unwrap();
        assert_eq!(p, pt(V::C, phi()));
        assert_eq!(
            "point:B,3/2".parse::<PrismPoint>().unwrap(),
            pt(V::B, Qs5::from_ratio(3, 2))
        );
        assert!("point:F,1".parse::<PrismPoint>().is_err());
        assert_eq!(Qs5::one().to_string(), "1");
    }
}
