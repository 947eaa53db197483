use std::fmt;
use std::str::FromStr;

use super::geometry::Geometry;
use super::report::Witness;
use super::AxiomId;
use crate::pentaline::{self, Segment5, Vertex};

/// A concrete refutation of one axiom, with the points and lines that
/// exhibit it.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation<P, L> {
    /// No line through two distinct points.
    I1 { p: P, q: P },
    /// Two distinct lines through two distinct points.
    I2 { p: P, q: P, l: L, m: L },
    /// A line with fewer than two points, or (`None`) no three
    /// non-collinear points at all.
    I3 { line: Option<L> },
    /// Three pairwise meeting lines without a transversal.
    I4 { x: L, y: L, z: L },
    /// `(a b c)` without `(c b a)` or without a common line.
    B1 { a: P, b: P, c: P },
    /// No `b` with `(a c b)`.
    B2 { a: P, c: P },
    /// Three collinear points with other than one between-point.
    B3 { a: P, b: P, c: P },
    /// `line` enters `abc` at `d` on `ab` and leaves through neither other side.
    B4 { a: P, b: P, c: P, line: L, d: P },
    /// As `B4`, with `line` meeting `bc` at `e` and `ac` at `f`.
    B4star {
        a: P,
        b: P,
        c: P,
        line: L,
        d: P,
        e: P,
        f: P,
    },
    /// An empty open segment.
    T1 { a: P, b: P },
    /// `line` meets the open segment `ab` at `z` and misses `ac` and `bc`.
    T2 { a: P, b: P, c: P, line: L, z: P },
    /// `(a b c)` and `(a c d)` without `(a b d)`.
    T3 { a: P, b: P, c: P, d: P },
    /// Same side of `o` is not transitive on `p`, `q`, `r`.
    T4 { o: P, p: P, q: P, r: P },
    /// Same side of `line` is not transitive on `x`, `y`, `z`.
    T5 { line: L, x: P, y: P, z: P },
    /// A closed segment not covered by two segments of the other class.
    Arch5 { segment: Segment5 },
    /// Two closed segments, one inside the other.
    Cantor5 { inner: Segment5, outer: Segment5 },
    /// A partition of the line into two parts of size at least two that
    /// do not separate each other.
    Dedekind5 {
        first: Vec<Vertex>,
        second: Vec<Vertex>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("witness has no role `{0}`")]
    MissingRole(String),
    #[error("role `{role}`: {message}")]
    BadLiteral { role: String, message: String },
}

fn vertex_list(vs: &[Vertex]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

struct Reader<'a>(&'a Witness);

impl Reader<'_> {
    fn raw(&self, role: &str) -> Result<&str, WitnessError> {
        self.0
            .get(role)
            .ok_or_else(|| WitnessError::MissingRole(role.to_string()))
    }

    fn bad(role: &str, message: impl fmt::Display) -> WitnessError {
        WitnessError::BadLiteral {
            role: role.to_string(),
            message: message.to_string(),
        }
    }

    fn get<T: FromStr>(&self, role: &str) -> Result<T, WitnessError>
    where
        T::Err: fmt::Display,
    {
        self.raw(role)?.parse().map_err(|e| Self::bad(role, e))
    }

    fn vertices(&self, role: &str) -> Result<Vec<Vertex>, WitnessError> {
        self.raw(role)?
            .split(',')
            .map(|t| t.parse::<Vertex>().map_err(|e| Self::bad(role, e)))
            .collect()
    }

    fn segment(&self, role: &str) -> Result<Segment5, WitnessError> {
        let text = self.raw(role)?;
        let inner = text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Self::bad(role, "expected [X,Y]"))?;
        let ends = inner
            .split(',')
            .map(|t| t.parse::<Vertex>().map_err(|e| Self::bad(role, e)))
            .collect::<Result<Vec<_>, _>>()?;
        match ends[..] {
            [i, j] => pentaline::closed_segment(i, j).map_err(|e| Self::bad(role, e)),
            _ => Err(Self::bad(role, "expected two endpoints")),
        }
    }
}

impl<P, L> Violation<P, L>
where
    P: Clone + PartialEq + fmt::Display,
    L: Clone + PartialEq + fmt::Display,
{
    pub fn axiom(&self) -> AxiomId {
        match self {
            Violation::I1 { .. } => AxiomId::I1,
            Violation::I2 { .. } => AxiomId::I2,
            Violation::I3 { .. } => AxiomId::I3,
            Violation::I4 { .. } => AxiomId::I4,
            Violation::B1 { .. } => AxiomId::B1,
            Violation::B2 { .. } => AxiomId::B2,
            Violation::B3 { .. } => AxiomId::B3,
            Violation::B4 { .. } => AxiomId::B4,
            Violation::B4star { .. } => AxiomId::B4star,
            Violation::T1 { .. } => AxiomId::T1,
            Violation::T2 { .. } => AxiomId::T2,
            Violation::T3 { .. } => AxiomId::T3,
            Violation::T4 { .. } => AxiomId::T4,
            Violation::T5 { .. } => AxiomId::T5,
            Violation::Arch5 { .. } => AxiomId::Arch5,
            Violation::Cantor5 { .. } => AxiomId::Cantor5,
            Violation::Dedekind5 { .. } => AxiomId::Dedekind5,
        }
    }

    /// The roles and literals of the witness, in a fixed order.
    pub fn to_witness(&self) -> Witness {
        let mut w = Witness::default();
        match self {
            Violation::I1 { p, q } => {
                w.push("p", p);
                w.push("q", q);
            }
            Violation::T1 { a, b } => {
                w.push("a", a);
                w.push("b", b);
            }
            Violation::I2 { p, q, l, m } => {
                w.push("p", p);
                w.push("q", q);
                w.push("l", l);
                w.push("m", m);
            }
            Violation::I3 { line } => match line {
                Some(l) => w.push("line", l),
                None => w.push("line", "none"),
            },
            Violation::I4 { x, y, z } => {
                w.push("x", x);
                w.push("y", y);
                w.push("z", z);
            }
            Violation::B1 { a, b, c } | Violation::B3 { a, b, c } => {
                w.push("a", a);
                w.push("b", b);
                w.push("c", c);
            }
            Violation::B2 { a, c } => {
                w.push("a", a);
                w.push("c", c);
            }
            Violation::B4 { a, b, c, line, d } => {
                w.push("a", a);
                w.push("b", b);
                w.push("c", c);
                w.push("line", line);
                w.push("d", d);
            }
            Violation::B4star {
                a,
                b,
                c,
                line,
                d,
                e,
                f,
            } => {
                w.push("a", a);
                w.push("b", b);
                w.push("c", c);
                w.push("line", line);
                w.push("d", d);
                w.push("e", e);
                w.push("f", f);
            }
            Violation::T2 { a, b, c, line, z } => {
                w.push("a", a);
                w.push("b", b);
                w.push("c", c);
                w.push("line", line);
                w.push("z", z);
            }
            Violation::T3 { a, b, c, d } => {
                w.push("a", a);
                w.push("b", b);
                w.push("c", c);
                w.push("d", d);
            }
            Violation::T4 { o, p, q, r } => {
                w.push("o", o);
                w.push("p", p);
                w.push("q", q);
                w.push("r", r);
            }
            Violation::T5 { line, x, y, z } => {
                w.push("line", line);
                w.push("x", x);
                w.push("y", y);
                w.push("z", z);
            }
            Violation::Arch5 { segment } => w.push("segment", segment),
            Violation::Cantor5 { inner, outer } => {
                w.push("inner", inner);
                w.push("outer", outer);
            }
            Violation::Dedekind5 { first, second } => {
                w.push("first", vertex_list(first));
                w.push("second", vertex_list(second));
            }
        }
        w
    }

    /// Rebuilds a violation from its witness literals.
    pub fn from_witness(axiom: AxiomId, w: &Witness) -> Result<Self, WitnessError>
    where
        P: FromStr,
        L: FromStr,
        P::Err: fmt::Display,
        L::Err: fmt::Display,
    {
        let r = Reader(w);
        let p = |role: &str| r.get::<P>(role);
        let l = |role: &str| r.get::<L>(role);
        Ok(match axiom {
            AxiomId::I1 => Violation::I1 {
                p: p("p")?,
                q: p("q")?,
            },
            AxiomId::I2 => Violation::I2 {
                p: p("p")?,
                q: p("q")?,
                l: l("l")?,
                m: l("m")?,
            },
            AxiomId::I3 => Violation::I3 {
                line: match r.raw("line")? {
                    "none" => None,
                    _ => Some(l("line")?),
                },
            },
            AxiomId::I4 => Violation::I4 {
                x: l("x")?,
                y: l("y")?,
                z: l("z")?,
            },
            AxiomId::B1 => Violation::B1 {
                a: p("a")?,
                b: p("b")?,
                c: p("c")?,
            },
            AxiomId::B2 => Violation::B2 {
                a: p("a")?,
                c: p("c")?,
            },
            AxiomId::B3 => Violation::B3 {
                a: p("a")?,
                b: p("b")?,
                c: p("c")?,
            },
            AxiomId::B4 => Violation::B4 {
                a: p("a")?,
                b: p("b")?,
                c: p("c")?,
                line: l("line")?,
                d: p("d")?,
            },
            AxiomId::B4star => Violation::B4star {
                a: p("a")?,
                b: p("b")?,
                c: p("c")?,
                line: l("line")?,
                d: p("d")?,
                e: p("e")?,
                f: p("f")?,
            },
            AxiomId::T1 => Violation::T1 {
                a: p("a")?,
                b: p("b")?,
            },
            AxiomId::T2 => Violation::T2 {
                a: p("a")?,
                b: p("b")?,
                c: p("c")?,
                line: l("line")?,
                z: p("z")?,
            },
            AxiomId::T3 => Violation::T3 {
                a: p("a")?,
                b: p("b")?,
                c: p("c")?,
                d: p("d")?,
            },
            AxiomId::T4 => Violation::T4 {
                o: p("o")?,
                p: p("p")?,
                q: p("q")?,
                r: p("r")?,
            },
            AxiomId::T5 => Violation::T5 {
                line: l("line")?,
                x: p("x")?,
                y: p("y")?,
                z: p("z")?,
            },
            AxiomId::Arch5 => Violation::Arch5 {
                segment: r.segment("segment")?,
            },
            AxiomId::Cantor5 => Violation::Cantor5 {
                inner: r.segment("inner")?,
                outer: r.segment("outer")?,
            },
            AxiomId::Dedekind5 => Violation::Dedekind5 {
                first: r.vertices("first")?,
                second: r.vertices("second")?,
            },
        })
    }
}

fn distinct3<P: PartialEq>(a: &P, b: &P, c: &P) -> bool {
    a != b && b != c && a != c
}

fn distinct4<P: PartialEq>(a: &P, b: &P, c: &P, d: &P) -> bool {
    distinct3(a, b, c) && a != d && b != d && c != d
}

/// `(b e c)` holds for the meeting point `e` of `line` and `bc`, if any.
pub(crate) fn exits_through<G: Geometry>(
    g: &G,
    line: &G::Line,
    b: &G::Point,
    c: &G::Point,
) -> bool {
    g.line_through(b, c)
        .filter(|bc| bc != line)
        .and_then(|bc| g.intersect(line, &bc))
        .map(|e| g.between(b, &e, c))
        .unwrap_or(false)
}

/// Number of the three points lying between the other two.
pub(crate) fn between_count<G: Geometry>(g: &G, a: &G::Point, b: &G::Point, c: &G::Point) -> usize {
    [g.between(b, a, c), g.between(a, b, c), g.between(a, c, b)]
        .into_iter()
        .filter(|x| *x)
        .count()
}

impl<P, L> Violation<P, L>
where
    P: Clone + PartialEq + fmt::Display,
    L: Clone + PartialEq + fmt::Display,
{
    /// Replays the violation against the model's primitive predicates.
    pub fn verify<G: Geometry<Point = P, Line = L>>(&self, g: &G) -> bool {
        match self {
            Violation::I1 { p, q } => {
                p != q
                    && !g
                        .line_through(p, q)
                        .is_some_and(|l| g.incident(p, &l) && g.incident(q, &l))
            }
            Violation::I2 { p, q, l, m } => {
                p != q && l != m && [l, m].iter().all(|x| g.incident(p, x) && g.incident(q, x))
            }
            Violation::I3 { line } => match line {
                Some(l) => g.points_on_line(l, 2).len() < 2,
                None => g
                    .non_collinear_triple()
                    .is_none_or(|[a, b, c]| g.collinear(&a, &b, &c)),
            },
            Violation::I4 { x, y, z } => {
                let meet = |l: &L, m: &L| g.intersect(l, m).is_some();
                distinct3(x, y, z)
                    && meet(x, y)
                    && meet(y, z)
                    && meet(x, z)
                    && g.transversal(x, y, z).is_none()
            }
            Violation::B1 { a, b, c } => {
                g.between(a, b, c) && (!g.between(c, b, a) || !g.collinear(a, b, c))
            }
            Violation::B2 { a, c } => {
                a != c && !g.extend(a, c).is_some_and(|b| g.between(a, c, &b))
            }
            Violation::B3 { a, b, c } => {
                distinct3(a, b, c) && g.collinear(a, b, c) && between_count(g, a, b, c) != 1
            }
            Violation::B4 { a, b, c, line, d } => {
                pasch_premise(g, a, b, c, line, d)
                    && !exits_through(g, line, b, c)
                    && !exits_through(g, line, a, c)
            }
            Violation::B4star {
                a,
                b,
                c,
                line,
                d,
                e,
                f,
            } => {
                let meets = |p: &P, q: &P, x: &P| {
                    g.line_through(p, q)
                        .is_some_and(|pq| &pq != line && g.intersect(line, &pq).as_ref() == Some(x))
                };
                pasch_premise(g, a, b, c, line, d)
                    && meets(b, c, e)
                    && meets(a, c, f)
                    && !g.between(b, e, c)
                    && !g.between(a, f, c)
            }
            Violation::T1 { a, b } => {
                a != b && !g.interior(a, b).is_some_and(|c| g.between(a, &c, b))
            }
            Violation::T2 { a, b, c, line, z } => {
                let Some(base) = g.line_through(a, b) else {
                    return false;
                };
                distinct3(a, b, c)
                    && g.incident(c, &base)
                    && &base != line
                    && [a, b, c].iter().all(|p| !g.incident(p, line))
                    && g.intersect(line, &base).as_ref() == Some(z)
                    && g.between(a, z, b)
                    && !g.between(a, z, c)
                    && !g.between(b, z, c)
            }
            Violation::T3 { a, b, c, d } => {
                distinct4(a, b, c, d)
                    && g.collinear(a, b, c)
                    && g.collinear(a, b, d)
                    && g.between(a, b, c)
                    && g.between(a, c, d)
                    && !g.between(a, b, d)
            }
            Violation::T4 { o, p, q, r } => {
                distinct4(o, p, q, r)
                    && g.collinear(o, p, q)
                    && g.collinear(o, p, r)
                    && g.same_side_of_point(o, p, q)
                    && g.same_side_of_point(o, p, r)
                    && !g.same_side_of_point(o, q, r)
            }
            Violation::T5 { line, x, y, z } => {
                [x, y, z].iter().all(|p| !g.incident(p, line))
                    && !g.opposite_sides(line, x, y)
                    && !g.opposite_sides(line, y, z)
                    && g.opposite_sides(line, x, z)
            }
            Violation::Arch5 { segment } => pentaline::archimedes_cover(segment).is_none(),
            Violation::Cantor5 { inner, outer } => {
                inner != outer && inner.points().iter().all(|v| outer.contains(*v))
            }
            Violation::Dedekind5 { first, second } => {
                let mut all: Vec<Vertex> = first.iter().chain(second).copied().collect();
                all.sort();
                all.dedup();
                all.len() == 5
                    && first.len() + second.len() == 5
                    && first.len() >= 2
                    && second.len() >= 2
                    && !pentaline::separates(first, second)
                    && !pentaline::separates(second, first)
            }
        }
    }
}

/// `abc` is a triangle, `line` avoids its vertices and crosses `ab` at `d`.
fn pasch_premise<G: Geometry>(
    g: &G,
    a: &G::Point,
    b: &G::Point,
    c: &G::Point,
    line: &G::Line,
    d: &G::Point,
) -> bool {
    distinct3(a, b, c)
        && !g.collinear(a, b, c)
        && [a, b, c].iter().all(|p| !g.incident(p, line))
        && g.incident(d, line)
        && g.between(a, d, b)
}
