//! The affine plane of order five with a midpoint betweenness and its
//! complement.
//!
//! Over GF(5), `C = A + 4(B − A)` means `A` is the midpoint of `B` and
//! `C`, because `4 ≡ −1`. Every collinear triple then has exactly one
//! midpoint. Swapping the relation for its complement on collinear
//! triples gives two between-points per triple.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::engine::{self, AxiomReport, ModelId, Strategy};
use crate::literal::{self, ParseError};

const P: u8 = 5;

fn inv(v: u8) -> u8 {
    // 1·1 = 2·3 = 4·4 = 1 (mod 5)
    [0, 1, 3, 2, 4][v as usize]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FPoint {
    pub x: u8,
    pub y: u8,
}

impl FPoint {
    pub fn new(x: u8, y: u8) -> Self {
        Self { x: x % P, y: y % P }
    }

    fn add(self, o: FPoint) -> FPoint {
        FPoint::new(self.x + o.x, self.y + o.y)
    }

    fn sub(self, o: FPoint) -> FPoint {
        FPoint::new(self.x + P - o.x, self.y + P - o.y)
    }

    fn scale(self, k: u8) -> FPoint {
        FPoint::new(self.x * k, self.y * k)
    }
}

/// `a·x + b·y = c` with the first nonzero of `(a, b)` equal to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FLine {
    a: u8,
    b: u8,
    c: u8,
}

impl FLine {
    pub fn new(a: u8, b: u8, c: u8) -> Option<Self> {
        let (a, b, c) = (a % P, b % P, c % P);
        let lead = if a != 0 {
            a
        } else if b != 0 {
            b
        } else {
            return None;
        };
        let k = inv(lead);
        Some(Self {
            a: a * k % P,
            b: b * k % P,
            c: c * k % P,
        })
    }

    pub fn coefficients(&self) -> (u8, u8, u8) {
        (self.a, self.b, self.c)
    }

    pub fn contains(&self, p: FPoint) -> bool {
        (self.a as u32 * p.x as u32 + self.b as u32 * p.y as u32) % P as u32 == self.c as u32
    }

    /// The five points of the line, in lexicographic order.
    pub fn points(&self) -> Vec<FPoint> {
        all_points()
            .into_iter()
            .filter(|p| self.contains(*p))
            .collect()
    }

    pub fn is_parallel(&self, other: &FLine) -> bool {
        (self.a, self.b) == (other.a, other.b)
    }
}

/// The 25 points in lexicographic order.
pub fn all_points() -> Vec<FPoint> {
    (0..P)
        .flat_map(|x| (0..P).map(move |y| FPoint::new(x, y)))
        .collect()
}

/// The 30 lines in lexicographic order of `(a, b, c)`.
pub fn all_lines() -> Vec<FLine> {
    let mut lines: Vec<FLine> = (0..P)
        .flat_map(|b| (0..P).map(move |c| FLine { a: 1, b, c }))
        .chain((0..P).map(|c| FLine { a: 0, b: 1, c }))
        .collect();
    lines.sort();
    lines
}

pub fn line_through(p: FPoint, q: FPoint) -> Option<FLine> {
    if p == q {
        return None;
    }
    let d = q.sub(p);
    let (a, b) = (d.y, (P - d.x) % P);
    FLine::new(a, b, (a * p.x + b * p.y) % P)
}

pub fn collinear(p: FPoint, q: FPoint, r: FPoint) -> bool {
    match line_through(p, q) {
        Some(l) => l.contains(r),
        None => true,
    }
}

pub fn intersect(l: &FLine, m: &FLine) -> Option<FPoint> {
    if l == m || l.is_parallel(m) {
        return None;
    }
    let det = (5 * P as u32 + l.a as u32 * m.b as u32 - m.a as u32 * l.b as u32) % P as u32;
    let k = inv(det as u8) as u32;
    let p = P as u32;
    let x = (p * p + l.c as u32 * m.b as u32 - m.c as u32 * l.b as u32) % p * k % p;
    let y = (p * p + l.a as u32 * m.c as u32 - m.a as u32 * l.c as u32) % p * k % p;
    Some(FPoint::new(x as u8, y as u8))
}

fn distinct(p: FPoint, q: FPoint, r: FPoint) -> bool {
    p != q && q != r && p != r
}

/// `X` between `Y` and `Z` under the midpoint relation: `Z = X + 4(Y − X)`.
pub fn between_mid(y: FPoint, x: FPoint, z: FPoint) -> bool {
    distinct(y, x, z) && collinear(y, x, z) && x.add(y.sub(x).scale(4)) == z
}

/// `X` between `Y` and `Z` under the complementary relation.
pub fn between_comp(y: FPoint, x: FPoint, z: FPoint) -> bool {
    distinct(y, x, z) && collinear(y, x, z) && !between_mid(y, x, z)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Midpoint,
    Complement,
}

impl Relation {
    pub fn between(self, y: FPoint, x: FPoint, z: FPoint) -> bool {
        match self {
            Relation::Midpoint => between_mid(y, x, z),
            Relation::Complement => between_comp(y, x, z),
        }
    }

    pub fn model_id(self) -> ModelId {
        match self {
            Relation::Midpoint => ModelId::Gf5Mid,
            Relation::Complement => ModelId::Gf5Comp,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("the points are not distinct and collinear")]
pub struct NotCollinear;

/// How many of the three points lie between the other two.
pub fn triple_between_count(
    relation: Relation,
    [p1, p2, p3]: [FPoint; 3],
) -> Result<u8, NotCollinear> {
    if !distinct(p1, p2, p3) || !collinear(p1, p2, p3) {
        return Err(NotCollinear);
    }
    let count = [(p2, p1, p3), (p1, p2, p3), (p1, p3, p2)]
        .into_iter()
        .filter(|&(y, x, z)| relation.between(y, x, z))
        .count();
    Ok(count as u8)
}

/// The exhaustive report for I1–I4, B1–B4 and B4*.
pub fn axiom_suite_gf5(relation: Relation) -> Vec<AxiomReport> {
    use engine::AxiomId::*;
    engine::run_suite(
        &engine::StructureHandle::new(relation.model_id()),
        &[I1, I2, I3, I4, B1, B2, B3, B4, B4star],
        Strategy::Exhaustive,
    )
}

impl fmt::Display for FPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gf5:{},{}", self.x, self.y)
    }
}

impl fmt::Display for FLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gf5line:{},{},{}", self.a, self.b, self.c)
    }
}

fn residue(c: &mut literal::Cursor<'_>) -> Result<u8, ParseError> {
    let at = c.position();
    let v = c.small_int()?;
    if v >= P as u64 {
        return Err(ParseError {
            message: "expected a residue 0..4".into(),
            position: at,
            token: v.to_string(),
        });
    }
    Ok(v as u8)
}

impl FromStr for FPoint {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        literal::parse_complete(s, |c| {
            c.expect("gf5:")?;
            let x = residue(c)?;
            c.expect(",")?;
            Ok(FPoint::new(x, residue(c)?))
        })
    }
}

impl FromStr for FLine {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        literal::parse_complete(s, |c| {
            c.expect("gf5line:")?;
            let a = residue(c)?;
            c.expect(",")?;
            let b = residue(c)?;
            c.expect(",")?;
            let cc = residue(c)?;
            FLine::new(a, b, cc).ok_or_else(|| c.error("a and b cannot both vanish"))
        })
    }
}

macro_rules! string_serde {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                String::deserialize(deserializer)?
                    .parse()
                    .map_err(serde::de::Error::custom)
            }
        }
    };
}

string_serde!(FPoint);
string_serde!(FLine);
