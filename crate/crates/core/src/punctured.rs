//! The rational Euclidean plane with the origin removed.
//!
//! Lines keep their Euclidean point sets minus the hole, and betweenness
//! is the usual order along a line. A line through the hole meets the
//! other lines through the hole nowhere, which is enough to break Pasch.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::literal::{self, ParseError};
use crate::sampling::Stream;
use crate::scalar::OrderedField;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum PuncturedError {
    #[error("the origin is not a point of the punctured plane")]
    Hole,
    #[error("the two points coincide")]
    SamePoint,
    #[error("the two lines coincide")]
    SameLine,
    #[error("the points are not collinear")]
    NotCollinear,
    #[error("a line needs a nonzero normal (a, b)")]
    DegenerateLine,
}

/// A point other than the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPoint<F> {
    x: F,
    y: F,
}

impl<F: OrderedField> QPoint<F> {
    pub fn new(x: F, y: F) -> Result<Self, PuncturedError> {
        if x.is_zero() && y.is_zero() {
            Err(PuncturedError::Hole)
        } else {
            Ok(Self { x, y })
        }
    }

    pub fn x(&self) -> &F {
        &self.x
    }

    pub fn y(&self) -> &F {
        &self.y
    }
}

/// `a·x + b·y = c`, scaled so the first nonzero of `(a, b)` is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QLine<F> {
    a: F,
    b: F,
    c: F,
}

impl<F: OrderedField> QLine<F> {
    pub fn new(a: F, b: F, c: F) -> Result<Self, PuncturedError> {
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(PuncturedError::DegenerateLine);
        };
        Ok(Self {
            a: a / lead.clone(),
            b: b / lead.clone(),
            c: c / lead,
        })
    }

    pub fn coefficients(&self) -> (&F, &F, &F) {
        (&self.a, &self.b, &self.c)
    }

    pub fn passes_through_hole(&self) -> bool {
        self.c.is_zero()
    }

    fn eval(&self, x: &F, y: &F) -> F {
        self.a.clone() * x.clone() + self.b.clone() * y.clone() - self.c.clone()
    }
}

pub fn q_line_through<F: OrderedField>(
    p: &QPoint<F>,
    q: &QPoint<F>,
) -> Result<QLine<F>, PuncturedError> {
    if p == q {
        return Err(PuncturedError::SamePoint);
    }
    let a = q.y.clone() - p.y.clone();
    let b = p.x.clone() - q.x.clone();
    let c = a.clone() * p.x.clone() + b.clone() * p.y.clone();
    QLine::new(a, b, c)
}

pub fn q_incident<F: OrderedField>(p: &QPoint<F>, l: &QLine<F>) -> bool {
    l.eval(&p.x, &p.y).is_zero()
}

pub fn q_collinear<F: OrderedField>(p: &QPoint<F>, q: &QPoint<F>, r: &QPoint<F>) -> bool {
    let cross = (q.x.clone() - p.x.clone()) * (r.y.clone() - p.y.clone())
        - (q.y.clone() - p.y.clone()) * (r.x.clone() - p.x.clone());
    cross.is_zero()
}

/// `(p1 p2 p3)`: `p2` strictly inside the Euclidean segment `p1 p3`.
pub fn q_between<F: OrderedField>(
    p1: &QPoint<F>,
    p2: &QPoint<F>,
    p3: &QPoint<F>,
) -> Result<bool, PuncturedError> {
    if p1 == p2 || p2 == p3 || p1 == p3 {
        return Err(PuncturedError::SamePoint);
    }
    if !q_collinear(p1, p2, p3) {
        return Err(PuncturedError::NotCollinear);
    }
    let dot = (p2.x.clone() - p1.x.clone()) * (p3.x.clone() - p2.x.clone())
        + (p2.y.clone() - p1.y.clone()) * (p3.y.clone() - p2.y.clone());
    Ok(dot.is_positive_value())
}

/// The meeting point of two lines, unless they are parallel or meet in
/// the hole.
pub fn q_intersect<F: OrderedField>(
    l: &QLine<F>,
    m: &QLine<F>,
) -> Result<Option<QPoint<F>>, PuncturedError> {
    if l == m {
        return Err(PuncturedError::SameLine);
    }
    let det = l.a.clone() * m.b.clone() - l.b.clone() * m.a.clone();
    if det.is_zero() {
        return Ok(None);
    }
    let x = (l.c.clone() * m.b.clone() - l.b.clone() * m.c.clone()) / det.clone();
    let y = (l.a.clone() * m.c.clone() - l.c.clone() * m.a.clone()) / det;
    Ok(QPoint::new(x, y).ok())
}

/// A Pasch failure through the hole: the line `a` enters the triangle
/// `ABC` through `D` on `AB`, runs parallel to `AC` and meets `BC` only
/// where the origin was removed.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "F: fmt::Display")]
pub struct PuncturedPaschWitness<F: fmt::Display> {
    pub a: QPoint<F>,
    pub b: QPoint<F>,
    pub c: QPoint<F>,
    pub line: QLine<F>,
    pub d: QPoint<F>,
}

pub fn q_pasch_witness<F: OrderedField>() -> PuncturedPaschWitness<F> {
    let p = |x: i64, y: i64| QPoint::new(F::from_int(x), F::from_int(y)).expect("not the origin");
    let w = PuncturedPaschWitness {
        a: p(0, 2),
        b: p(-1, -1),
        c: p(1, 1),
        line: QLine::new(F::one(), F::one(), F::zero()).expect("nonzero normal"),
        d: QPoint::new(F::from_ratio(-1, 2), F::from_ratio(1, 2)).expect("not the origin"),
    };
    debug_assert!(w.verify());
    w
}

impl<F: OrderedField> PuncturedPaschWitness<F> {
    pub fn verify(&self) -> bool {
        let avoids = [&self.a, &self.b, &self.c]
            .iter()
            .all(|p| !q_incident(p, &self.line));
        let triangle = !q_collinear(&self.a, &self.b, &self.c);
        let enters = q_incident(&self.d, &self.line)
            && q_between(&self.a, &self.d, &self.b).unwrap_or(false);
        let (Ok(ac), Ok(bc)) = (
            q_line_through(&self.a, &self.c),
            q_line_through(&self.b, &self.c),
        ) else {
            return false;
        };
        let misses_ac = matches!(q_intersect(&self.line, &ac), Ok(None));
        let misses_bc = matches!(q_intersect(&self.line, &bc), Ok(None));
        avoids && triangle && enters && misses_ac && misses_bc
    }

    /// True when `line` and `AC` have no Euclidean meeting point at all.
    pub fn parallel_to_ac(&self) -> bool {
        let ac = q_line_through(&self.a, &self.c).expect("distinct");
        let det = self.line.a.clone() * ac.b.clone() - self.line.b.clone() * ac.a.clone();
        det.is_zero()
    }

    /// True when `line` and `BC` meet, in the Euclidean plane, exactly at
    /// the origin.
    pub fn meets_bc_in_hole(&self) -> bool {
        let bc = q_line_through(&self.b, &self.c).expect("distinct");
        self.line.passes_through_hole() && bc.passes_through_hole() && self.line != bc
    }
}

pub fn sample_point(stream: &mut Stream) -> QPoint<Rational> {
    loop {
        if let Ok(p) = QPoint::new(stream.rational(), stream.rational()) {
            return p;
        }
    }
}

pub fn sample_line(stream: &mut Stream) -> QLine<Rational> {
    loop {
        let (p, q) = (sample_point(stream), sample_point(stream));
        if let Ok(l) = q_line_through(&p, &q) {
            return l;
        }
    }
}

impl<F: fmt::Display> fmt::Display for QPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "qpoint:x={},y={}", self.x, self.y)
    }
}

impl<F: fmt::Display> fmt::Display for QLine<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "qline:a={},b={},c={}", self.a, self.b, self.c)
    }
}

impl FromStr for QPoint<Rational> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        literal::parse_complete(s, |c| {
            c.expect("qpoint:x=")?;
            let x = c.rational()?;
            c.expect(",y=")?;
            let at = c.position();
            let y = c.rational()?;
            QPoint::new(x, y).map_err(|e| ParseError {
                message: e.to_string(),
                position: at,
                token: s[at..].to_string(),
            })
        })
    }
}

impl FromStr for QLine<Rational> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        literal::parse_complete(s, |c| {
            c.expect("qline:a=")?;
            let a = c.rational()?;
            c.expect(",b=")?;
            let b = c.rational()?;
            c.expect(",c=")?;
            let cc = c.rational()?;
            QLine::new(a, b, cc).map_err(|e| c.error(e.to_string()))
        })
    }
}

impl<F: fmt::Display> Serialize for QPoint<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<F: fmt::Display> Serialize for QLine<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QPoint<Rational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

impl<'de> Deserialize<'de> for QLine<Rational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}
