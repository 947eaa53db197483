use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::violation::Violation;
use super::{AxiomId, ModelId};
use crate::gf5plane::{self, FLine, FPoint, Relation};
use crate::literal::{self, ParseError};
use crate::pentaline::{self, between5, Vertex};
use crate::prism::{self, pasch_star_witness, Line};
use crate::punctured::{self, q_pasch_witness};
use crate::sampling::Stream;
use crate::scalar::OrderedField;
use crate::{PrismLine, PrismPoint, QLine, QPoint, Qs5, Rational};

/// Bounds shared by the point and line types of a model.
pub trait Element: Clone + PartialEq + fmt::Debug + fmt::Display + FromStr + Send + Sync {}

impl<T: Clone + PartialEq + fmt::Debug + fmt::Display + FromStr + Send + Sync> Element for T {}

/// A plane (or a line) with incidence and betweenness.
pub trait Geometry: Sync {
    type Point: Element;
    type Line: Element;

    fn model(&self) -> ModelId;

    fn incident(&self, p: &Self::Point, l: &Self::Line) -> bool;

    /// The line through two distinct points.
    fn line_through(&self, p: &Self::Point, q: &Self::Point) -> Option<Self::Line>;

    /// The common point of two distinct lines.
    fn intersect(&self, l: &Self::Line, m: &Self::Line) -> Option<Self::Point>;

    /// `(a b c)`; false unless the points are distinct and collinear.
    fn between(&self, a: &Self::Point, b: &Self::Point, c: &Self::Point) -> bool;

    /// A point `b` with `(a c b)`.
    fn extend(&self, a: &Self::Point, c: &Self::Point) -> Option<Self::Point>;

    /// A point `c` with `(a c b)`.
    fn interior(&self, a: &Self::Point, b: &Self::Point) -> Option<Self::Point>;

    /// A fourth line meeting `x`, `y`, `z` in three distinct points.
    fn transversal(
        &self,
        x: &Self::Line,
        y: &Self::Line,
        z: &Self::Line,
    ) -> Option<(Self::Line, [Self::Point; 3])>;

    /// Up to `n` distinct points of `l`, always the same ones.
    fn points_on_line(&self, l: &Self::Line, n: usize) -> Vec<Self::Point>;

    fn non_collinear_triple(&self) -> Option<[Self::Point; 3]>;

    /// A model-specific refutation of `axiom`, if one is known.
    fn known_counterexample(&self, _axiom: AxiomId) -> Option<Violation<Self::Point, Self::Line>> {
        None
    }

    fn collinear(&self, a: &Self::Point, b: &Self::Point, c: &Self::Point) -> bool {
        if a == b {
            return true;
        }
        self.line_through(a, b)
            .map(|l| self.incident(c, &l))
            .unwrap_or(false)
    }

    /// `x` and `y` on the same side of `o` on their common line.
    fn same_side_of_point(&self, o: &Self::Point, x: &Self::Point, y: &Self::Point) -> bool {
        self.between(o, x, y) || self.between(o, y, x)
    }

    /// `x` and `y` on opposite sides of `l`: the segment `xy` meets `l`.
    fn opposite_sides(&self, l: &Self::Line, x: &Self::Point, y: &Self::Point) -> bool {
        if x == y {
            return false;
        }
        let Some(m) = self.line_through(x, y) else {
            return false;
        };
        if &m == l {
            return false;
        }
        self.intersect(l, &m)
            .map(|w| self.between(x, &w, y))
            .unwrap_or(false)
    }
}

pub trait FiniteGeometry: Geometry {
    fn points(&self) -> Vec<Self::Point>;
    fn lines(&self) -> Vec<Self::Line>;
    fn points_on(&self, l: &Self::Line) -> Vec<Self::Point>;
}

pub trait SampledGeometry: Geometry {
    fn sample_point(&self, s: &mut Stream) -> Self::Point;
    fn sample_line(&self, s: &mut Stream) -> Self::Line;
    fn sample_point_on(&self, l: &Self::Line, s: &mut Stream) -> Self::Point;
    /// A random point strictly between `a` and `b`.
    fn sample_between(
        &self,
        a: &Self::Point,
        b: &Self::Point,
        s: &mut Stream,
    ) -> Option<Self::Point>;

    /// A random line through `p` other than `l`.
    fn sample_line_through(
        &self,
        p: &Self::Point,
        l: &Self::Line,
        s: &mut Stream,
    ) -> Option<Self::Line> {
        for _ in 0..64 {
            let q = self.sample_point(s);
            if self.incident(&q, l) {
                continue;
            }
            if let Some(m) = self.line_through(p, &q) {
                return Some(m);
            }
        }
        None
    }
}

fn pick<T: Clone>(items: &[T], s: &mut Stream) -> T {
    items[s.below(items.len())].clone()
}

/// Finds an extension or interior point by scanning a finite line.
fn scan_line<G: FiniteGeometry>(
    g: &G,
    a: &G::Point,
    b: &G::Point,
    pred: impl Fn(&G::Point) -> bool,
) -> Option<G::Point> {
    let l = g.line_through(a, b)?;
    g.points_on(&l).into_iter().find(|p| pred(p))
}

// ---------------------------------------------------------------- GF(5)

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gf5Geometry {
    pub relation: Relation,
}

impl Gf5Geometry {
    pub fn new(relation: Relation) -> Self {
        Self { relation }
    }
}

impl Geometry for Gf5Geometry {
    type Point = FPoint;
    type Line = FLine;

    fn model(&self) -> ModelId {
        self.relation.model_id()
    }

    fn incident(&self, p: &FPoint, l: &FLine) -> bool {
        l.contains(*p)
    }

    fn line_through(&self, p: &FPoint, q: &FPoint) -> Option<FLine> {
        gf5plane::line_through(*p, *q)
    }

    fn intersect(&self, l: &FLine, m: &FLine) -> Option<FPoint> {
        gf5plane::intersect(l, m)
    }

    fn between(&self, a: &FPoint, b: &FPoint, c: &FPoint) -> bool {
        self.relation.between(*a, *b, *c)
    }

    fn extend(&self, a: &FPoint, c: &FPoint) -> Option<FPoint> {
        scan_line(self, a, c, |b| self.between(a, c, b))
    }

    fn interior(&self, a: &FPoint, b: &FPoint) -> Option<FPoint> {
        scan_line(self, a, b, |c| self.between(a, c, b))
    }

    fn transversal(&self, x: &FLine, y: &FLine, z: &FLine) -> Option<(FLine, [FPoint; 3])> {
        gf5plane::all_lines().into_iter().find_map(|d| {
            if [x, y, z].contains(&&d) {
                return None;
            }
            let pts = [
                self.intersect(&d, x)?,
                self.intersect(&d, y)?,
                self.intersect(&d, z)?,
            ];
            let distinct = pts[0] != pts[1] && pts[1] != pts[2] && pts[0] != pts[2];
            distinct.then_some((d, pts))
        })
    }

    fn points_on_line(&self, l: &FLine, n: usize) -> Vec<FPoint> {
        l.points().into_iter().take(n).collect()
    }

    fn non_collinear_triple(&self) -> Option<[FPoint; 3]> {
        Some([FPoint::new(0, 0), FPoint::new(1, 0), FPoint::new(0, 1)])
    }
}

impl FiniteGeometry for Gf5Geometry {
    fn points(&self) -> Vec<FPoint> {
        gf5plane::all_points()
    }

    fn lines(&self) -> Vec<FLine> {
        gf5plane::all_lines()
    }

    fn points_on(&self, l: &FLine) -> Vec<FPoint> {
        l.points()
    }
}

impl SampledGeometry for Gf5Geometry {
    fn sample_point(&self, s: &mut Stream) -> FPoint {
        FPoint::new(s.below(5) as u8, s.below(5) as u8)
    }

    fn sample_line(&self, s: &mut Stream) -> FLine {
        pick(&gf5plane::all_lines(), s)
    }

    fn sample_point_on(&self, l: &FLine, s: &mut Stream) -> FPoint {
        pick(&l.points(), s)
    }

    fn sample_between(&self, a: &FPoint, b: &FPoint, s: &mut Stream) -> Option<FPoint> {
        let l = self.line_through(a, b)?;
        let inside: Vec<FPoint> = l
            .points()
            .into_iter()
            .filter(|c| self.between(a, c, b))
            .collect();
        (!inside.is_empty()).then(|| pick(&inside, s))
    }
}

// ---------------------------------------------------------- five-point line

/// Lines seen by the five-point line: the line itself, and a line of an
/// embedding plane that crosses it at a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiveLine {
    Main,
    Transversal(Vertex),
}

impl fmt::Display for FiveLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiveLine::Main => f.write_str("main"),
            FiveLine::Transversal(v) => write!(f, "transversal:{v}"),
        }
    }
}

impl FromStr for FiveLine {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        literal::parse_complete(s, |c| {
            if c.eat("main") {
                return Ok(FiveLine::Main);
            }
            c.expect("transversal:")?;
            Ok(FiveLine::Transversal(c.vertex()?))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PentalineGeometry;

impl PentalineGeometry {
    /// Witnesses for the three failing line theorems.
    fn canonical(axiom: AxiomId) -> Option<Violation<Vertex, FiveLine>> {
        use Vertex as V;
        match axiom {
            // segments AC = {B}, CD = {A}, AD = {E}
            AxiomId::T2 => Some(Violation::T2 {
                a: V::A,
                b: V::C,
                c: V::D,
                line: FiveLine::Transversal(V::B),
                z: V::B,
            }),
            AxiomId::T3 => Some(Violation::T3 {
                a: V::A,
                b: V::B,
                c: V::C,
                d: V::E,
            }),
            AxiomId::T4 => Some(Violation::T4 {
                o: V::A,
                p: V::B,
                q: V::C,
                r: V::D,
            }),
            _ => None,
        }
    }
}

impl Geometry for PentalineGeometry {
    type Point = Vertex;
    type Line = FiveLine;

    fn model(&self) -> ModelId {
        ModelId::Pentaline
    }

    fn incident(&self, p: &Vertex, l: &FiveLine) -> bool {
        match l {
            FiveLine::Main => true,
            FiveLine::Transversal(v) => v == p,
        }
    }

    fn line_through(&self, p: &Vertex, q: &Vertex) -> Option<FiveLine> {
        (p != q).then_some(FiveLine::Main)
    }

    fn intersect(&self, l: &FiveLine, m: &FiveLine) -> Option<Vertex> {
        match (l, m) {
            (FiveLine::Main, FiveLine::Transversal(v))
            | (FiveLine::Transversal(v), FiveLine::Main) => Some(*v),
            _ => None,
        }
    }

    fn between(&self, a: &Vertex, b: &Vertex, c: &Vertex) -> bool {
        between5(*a, *b, *c)
    }

    fn extend(&self, a: &Vertex, c: &Vertex) -> Option<Vertex> {
        Vertex::ALL.into_iter().find(|b| between5(*a, *c, *b))
    }

    fn interior(&self, a: &Vertex, b: &Vertex) -> Option<Vertex> {
        pentaline::closed_segment(*a, *b).ok().map(|s| s.apex())
    }

    fn transversal(
        &self,
        _: &FiveLine,
        _: &FiveLine,
        _: &FiveLine,
    ) -> Option<(FiveLine, [Vertex; 3])> {
        None
    }

    fn points_on_line(&self, l: &FiveLine, n: usize) -> Vec<Vertex> {
        self.points_on(l).into_iter().take(n).collect()
    }

    fn non_collinear_triple(&self) -> Option<[Vertex; 3]> {
        None
    }

    fn known_counterexample(&self, axiom: AxiomId) -> Option<Violation<Vertex, FiveLine>> {
        Self::canonical(axiom)
    }
}

impl FiniteGeometry for PentalineGeometry {
    fn points(&self) -> Vec<Vertex> {
        Vertex::ALL.to_vec()
    }

    fn lines(&self) -> Vec<FiveLine> {
        std::iter::once(FiveLine::Main)
            .chain(Vertex::ALL.into_iter().map(FiveLine::Transversal))
            .collect()
    }

    fn points_on(&self, l: &FiveLine) -> Vec<Vertex> {
        match l {
            FiveLine::Main => Vertex::ALL.to_vec(),
            FiveLine::Transversal(v) => vec![*v],
        }
    }
}

impl SampledGeometry for PentalineGeometry {
    fn sample_point(&self, s: &mut Stream) -> Vertex {
        s.vertex()
    }

    fn sample_line(&self, _: &mut Stream) -> FiveLine {
        FiveLine::Main
    }

    fn sample_point_on(&self, l: &FiveLine, s: &mut Stream) -> Vertex {
        match l {
            FiveLine::Main => s.vertex(),
            FiveLine::Transversal(v) => *v,
        }
    }

    fn sample_between(&self, a: &Vertex, b: &Vertex, _: &mut Stream) -> Option<Vertex> {
        self.interior(a, b)
    }

    fn sample_line_through(&self, p: &Vertex, l: &FiveLine, _: &mut Stream) -> Option<FiveLine> {
        let t = FiveLine::Transversal(*p);
        (t != *l).then_some(t)
    }
}

// ---------------------------------------------------------------- prism

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PrismGeometry;

fn prism_point(v: Vertex, h: i64) -> PrismPoint {
    PrismPoint::new(v, Qs5::from_int(h))
}

impl Geometry for PrismGeometry {
    type Point = PrismPoint;
    type Line = PrismLine;

    fn model(&self) -> ModelId {
        ModelId::Prism
    }

    fn incident(&self, p: &PrismPoint, l: &PrismLine) -> bool {
        prism::incident(p, l)
    }

    fn line_through(&self, p: &PrismPoint, q: &PrismPoint) -> Option<PrismLine> {
        prism::line_through(p, q).ok()
    }

    fn intersect(&self, l: &PrismLine, m: &PrismLine) -> Option<PrismPoint> {
        prism::intersect(l, m).ok().flatten()
    }

    fn between(&self, a: &PrismPoint, b: &PrismPoint, c: &PrismPoint) -> bool {
        prism::between3(a, b, c).unwrap_or(false)
    }

    fn extend(&self, a: &PrismPoint, c: &PrismPoint) -> Option<PrismPoint> {
        match self.line_through(a, c)? {
            Line::Vertical(v) => {
                let h = c.height.clone() + c.height.clone() - a.height.clone();
                Some(PrismPoint::new(v, h))
            }
            l => Vertex::ALL
                .into_iter()
                .find(|&b| between5(a.vertex, c.vertex, b))
                .and_then(|b| l.point_at(b)),
        }
    }

    fn interior(&self, a: &PrismPoint, b: &PrismPoint) -> Option<PrismPoint> {
        match self.line_through(a, b)? {
            Line::Vertical(v) => {
                let h = (a.height.clone() + b.height.clone()) / Qs5::from_int(2);
                Some(PrismPoint::new(v, h))
            }
            l => {
                let apex = pentaline::closed_segment(a.vertex, b.vertex).ok()?.apex();
                l.point_at(apex)
            }
        }
    }

    fn transversal(
        &self,
        x: &PrismLine,
        y: &PrismLine,
        z: &PrismLine,
    ) -> Option<(PrismLine, [PrismPoint; 3])> {
        prism::transversal_for(x, y, z)
            .ok()
            .map(|t| (t.line, t.points))
    }

    fn points_on_line(&self, l: &PrismLine, n: usize) -> Vec<PrismPoint> {
        match l {
            Line::Vertical(v) => (0..n as i64).map(|h| prism_point(*v, h)).collect(),
            _ => Vertex::ALL
                .into_iter()
                .take(n)
                .map(|v| l.point_at(v).expect("harmonic"))
                .collect(),
        }
    }

    fn non_collinear_triple(&self) -> Option<[PrismPoint; 3]> {
        Some([
            prism_point(Vertex::A, 0),
            prism_point(Vertex::B, 0),
            prism_point(Vertex::A, 1),
        ])
    }

    fn known_counterexample(&self, axiom: AxiomId) -> Option<Violation<PrismPoint, PrismLine>> {
        let base = |v: Vertex| prism_point(v, 0);
        match axiom {
            AxiomId::B4 | AxiomId::B4star => {
                let w = pasch_star_witness::<Qs5>();
                Some(if axiom == AxiomId::B4 {
                    Violation::B4 {
                        a: w.p,
                        b: w.q,
                        c: w.r,
                        line: w.d,
                        d: w.d_on_pq,
                    }
                } else {
                    Violation::B4star {
                        a: w.p,
                        b: w.q,
                        c: w.r,
                        line: w.d,
                        d: w.d_on_pq,
                        e: w.z_d,
                        f: w.x_d,
                    }
                })
            }
            // the base line is a copy of the five-point line
            AxiomId::T2 => Some(Violation::T2 {
                a: base(Vertex::A),
                b: base(Vertex::C),
                c: base(Vertex::D),
                line: Line::Vertical(Vertex::B),
                z: base(Vertex::B),
            }),
            AxiomId::T3 => Some(Violation::T3 {
                a: base(Vertex::A),
                b: base(Vertex::B),
                c: base(Vertex::C),
                d: base(Vertex::E),
            }),
            AxiomId::T4 => Some(Violation::T4 {
                o: base(Vertex::A),
                p: base(Vertex::B),
                q: base(Vertex::C),
                r: base(Vertex::D),
            }),
            _ => None,
        }
    }
}

impl SampledGeometry for PrismGeometry {
    fn sample_point(&self, s: &mut Stream) -> PrismPoint {
        prism::sample_point(s)
    }

    fn sample_line(&self, s: &mut Stream) -> PrismLine {
        prism::sample_line(s)
    }

    fn sample_point_on(&self, l: &PrismLine, s: &mut Stream) -> PrismPoint {
        match l {
            Line::Vertical(v) => PrismPoint::new(*v, s.qs5()),
            _ => l.point_at(s.vertex()).expect("harmonic"),
        }
    }

    fn sample_between(&self, a: &PrismPoint, b: &PrismPoint, s: &mut Stream) -> Option<PrismPoint> {
        match self.line_through(a, b)? {
            Line::Vertical(v) => {
                let t = Qs5::rational(s.unit_fraction());
                let h = a.height.clone() + t * (b.height.clone() - a.height.clone());
                Some(PrismPoint::new(v, h))
            }
            _ => self.interior(a, b),
        }
    }
}

// ------------------------------------------------------------- punctured

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PuncturedGeometry;

fn q_affine(a: &QPoint, b: &QPoint, t: &Rational) -> Option<QPoint> {
    let x = a.x().clone() + t.clone() * (b.x().clone() - a.x().clone());
    let y = a.y().clone() + t.clone() * (b.y().clone() - a.y().clone());
    QPoint::new(x, y).ok()
}

/// A point and a direction of the Euclidean line `l`.
fn q_parametrize(l: &QLine) -> (Rational, Rational, Rational, Rational) {
    let (a, b, c) = l.coefficients();
    let (x0, y0) = if !b.is_zero() {
        (Rational::zero(), c.clone() / b.clone())
    } else {
        (c.clone() / a.clone(), Rational::zero())
    };
    (x0, y0, -b.clone(), a.clone())
}

fn q_point_at(l: &QLine, t: &Rational) -> Option<QPoint> {
    let (x0, y0, dx, dy) = q_parametrize(l);
    QPoint::new(x0 + t.clone() * dx, y0 + t.clone() * dy).ok()
}

impl Geometry for PuncturedGeometry {
    type Point = QPoint;
    type Line = QLine;

    fn model(&self) -> ModelId {
        ModelId::Punctured
    }

    fn incident(&self, p: &QPoint, l: &QLine) -> bool {
        punctured::q_incident(p, l)
    }

    fn line_through(&self, p: &QPoint, q: &QPoint) -> Option<QLine> {
        punctured::q_line_through(p, q).ok()
    }

    fn intersect(&self, l: &QLine, m: &QLine) -> Option<QPoint> {
        punctured::q_intersect(l, m).ok().flatten()
    }

    fn between(&self, a: &QPoint, b: &QPoint, c: &QPoint) -> bool {
        punctured::q_between(a, b, c).unwrap_or(false)
    }

    fn extend(&self, a: &QPoint, c: &QPoint) -> Option<QPoint> {
        if a == c {
            return None;
        }
        [2, 3]
            .into_iter()
            .find_map(|t| q_affine(a, c, &Rational::from_int(t)))
    }

    fn interior(&self, a: &QPoint, b: &QPoint) -> Option<QPoint> {
        if a == b {
            return None;
        }
        [Rational::from_ratio(1, 2), Rational::from_ratio(1, 4)]
            .iter()
            .find_map(|t| q_affine(a, b, t))
    }

    fn transversal(&self, x: &QLine, y: &QLine, z: &QLine) -> Option<(QLine, [QPoint; 3])> {
        let on_x = self.points_on_line(x, 4);
        let on_y = self.points_on_line(y, 4);
        on_x.iter()
            .flat_map(|p| on_y.iter().map(move |q| (p, q)))
            .find_map(|(p, q)| {
                let d = self.line_through(p, q)?;
                if [x, y, z].contains(&&d) {
                    return None;
                }
                let pts = [
                    self.intersect(&d, x)?,
                    self.intersect(&d, y)?,
                    self.intersect(&d, z)?,
                ];
                let distinct = pts[0] != pts[1] && pts[1] != pts[2] && pts[0] != pts[2];
                distinct.then_some((d, pts))
            })
    }

    fn points_on_line(&self, l: &QLine, n: usize) -> Vec<QPoint> {
        (0..)
            .filter_map(|t: i64| q_point_at(l, &Rational::from_int(t)))
            .take(n)
            .collect()
    }

    fn non_collinear_triple(&self) -> Option<[QPoint; 3]> {
        let p = |x: i64, y: i64| QPoint::new(Rational::from_int(x), Rational::from_int(y)).ok();
        Some([p(1, 0)?, p(0, 1)?, p(1, 1)?])
    }

    fn known_counterexample(&self, axiom: AxiomId) -> Option<Violation<QPoint, QLine>> {
        (axiom == AxiomId::B4).then(|| {
            let w = q_pasch_witness::<Rational>();
            Violation::B4 {
                a: w.a,
                b: w.b,
                c: w.c,
                line: w.line,
                d: w.d,
            }
        })
    }
}

impl SampledGeometry for PuncturedGeometry {
    fn sample_point(&self, s: &mut Stream) -> QPoint {
        punctured::sample_point(s)
    }

    fn sample_line(&self, s: &mut Stream) -> QLine {
        punctured::sample_line(s)
    }

    fn sample_point_on(&self, l: &QLine, s: &mut Stream) -> QPoint {
        loop {
            if let Some(p) = q_point_at(l, &s.rational()) {
                return p;
            }
        }
    }

    fn sample_between(&self, a: &QPoint, b: &QPoint, s: &mut Stream) -> Option<QPoint> {
        if a == b {
            return None;
        }
        (0..64).find_map(|_| q_affine(a, b, &s.unit_fraction()))
    }
}
