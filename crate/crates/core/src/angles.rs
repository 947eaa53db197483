//! Angles and triangles of the prism model.
//!
//! Every model line is cut out by a plane through the pentagon centre `O`
//! (a vertical line by the vertical plane through `O`). Two such planes
//! split space into two pairs of opposite wedges; the dihedral angles of
//! the pairs are the two angle measures of the lines and sum to π. Three
//! pairwise meeting lines give three planes through `O`, and the angles
//! of the triangle are the angles of the spherical triangle those planes
//! cut from the unit sphere around `O`.
//!
//! Membership in a wedge is decided exactly from height signs; only the
//! measures are computed in floating point.

use num_traits::{Float, FloatConst};

use crate::pentaline::Vertex;
use crate::prism::{incident, intersect, Line, Point};
use crate::scalar::{Overflow, PentagonScalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum AngleError {
    #[error("the two lines coincide")]
    SameLine,
    #[error("the point lies on a leg")]
    OnLeg,
    #[error("the point lies on a side line of the triangle")]
    OnBoundary,
    #[error("two of the lines do not intersect")]
    NotIntersecting,
    #[error("the three lines share a common point")]
    ConcurrentLines,
    #[error("the lines are not pairwise distinct")]
    DegenerateVertices,
    #[error("two planes are numerically indistinguishable")]
    NumericallyDegenerate,
    #[error("a height overflows the float type")]
    Overflow,
}

impl From<Overflow> for AngleError {
    fn from(_: Overflow) -> Self {
        AngleError::Overflow
    }
}

const DEGENERATE_ANGLE: f64 = 1e-10;

/// The two dihedral measures of a pair of lines, smaller first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnglePair<F> {
    pub theta: F,
    pub complement: F,
}

/// Which pair of opposite wedges is taken as the angle domain: the pair
/// where the two height differences have opposite signs (`Between`) or
/// equal signs (`Outside`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WedgeChoice {
    Between,
    Outside,
}

type Vec3<F> = [F; 3];

fn dot<F: Float>(a: &Vec3<F>, b: &Vec3<F>) -> F {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross<F: Float>(a: &Vec3<F>, b: &Vec3<F>) -> Vec3<F> {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn normalize<F: Float>(v: Vec3<F>) -> Vec3<F> {
    let n = dot(&v, &v).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

fn vertex_angle<F: Float + FloatConst>(v: Vertex) -> F {
    F::TAU() * F::from(v.index()).expect("small") / F::from(5).expect("small")
}

/// Position of a model point in space, pentagon on the unit circle.
pub fn embed<S: PentagonScalar, F: Float + FloatConst>(
    p: &Point<S>,
) -> Result<Vec3<F>, AngleError> {
    let t = vertex_angle::<F>(p.vertex);
    Ok([t.cos(), t.sin(), p.height.to_real()?])
}

/// Unit normal of the plane through `O` that carries `l`.
pub fn plane_normal<S: PentagonScalar, F: Float + FloatConst>(
    l: &Line<S>,
) -> Result<Vec3<F>, AngleError> {
    match l {
        Line::Vertical(v) => {
            let t = vertex_angle::<F>(*v);
            Ok([-t.sin(), t.cos(), F::zero()])
        }
        Line::Harmonic { h0, h1 } => {
            // z = αx + βy through the heights over V0 = (1, 0) and V1 = (cos72°, sin72°)
            let t = vertex_angle::<F>(Vertex::B);
            let alpha: F = h0.to_real()?;
            let beta = (h1.to_real::<F>()? - alpha * t.cos()) / t.sin();
            Ok(normalize([alpha, beta, -F::one()]))
        }
    }
}

pub fn angle_pair<S: PentagonScalar, F: Float + FloatConst>(
    l: &Line<S>,
    m: &Line<S>,
) -> Result<AnglePair<F>, AngleError> {
    if l == m {
        return Err(AngleError::SameLine);
    }
    let c = dot(&plane_normal::<S, F>(l)?, &plane_normal::<S, F>(m)?).abs();
    let theta = c.min(F::one()).acos();
    Ok(AnglePair {
        theta,
        complement: F::PI() - theta,
    })
}

/// Side of `x` relative to the plane of `l`: -1, 0 or +1.
///
/// For a harmonic line this is the sign of the height difference over
/// `x`'s vertex. For the vertical over `v` it is the sign of
/// `sin(72°·(k − v))`, which depends only on `k − v mod 5`.
pub fn side_of<S: PentagonScalar>(x: &Point<S>, l: &Line<S>) -> i8 {
    match l {
        Line::Vertical(v) => match (x.vertex.index() + 5 - v.index()) % 5 {
            0 => 0,
            1 | 2 => 1,
            _ => -1,
        },
        Line::Harmonic { .. } => {
            let h = l.height_at(x.vertex).expect("harmonic");
            (x.height.clone() - h).sign()
        }
    }
}

pub fn wedge_contains<S: PentagonScalar>(
    x: &Point<S>,
    l: &Line<S>,
    m: &Line<S>,
    choice: WedgeChoice,
) -> Result<bool, AngleError> {
    if l == m {
        return Err(AngleError::SameLine);
    }
    if incident(x, l) || incident(x, m) {
        return Err(AngleError::OnLeg);
    }
    let product = side_of(x, l) * side_of(x, m);
    Ok(match choice {
        WedgeChoice::Between => product < 0,
        WedgeChoice::Outside => product > 0,
    })
}

/// Three pairwise meeting lines with vertices `P = l1∩l2`, `Q = l2∩l3`,
/// `R = l1∩l3`.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangle<S> {
    pub lines: [Line<S>; 3],
    pub vertices: [Point<S>; 3],
}

pub fn triangle_of<S: PentagonScalar>(
    l1: &Line<S>,
    l2: &Line<S>,
    l3: &Line<S>,
) -> Result<Triangle<S>, AngleError> {
    if l1 == l2 || l2 == l3 || l1 == l3 {
        return Err(AngleError::DegenerateVertices);
    }
    let meet = |a: &Line<S>, b: &Line<S>| {
        intersect(a, b)
            .map_err(|_| AngleError::DegenerateVertices)?
            .ok_or(AngleError::NotIntersecting)
    };
    let p = meet(l1, l2)?;
    let q = meet(l2, l3)?;
    let r = meet(l1, l3)?;
    if p == q || q == r || p == r {
        return Err(AngleError::ConcurrentLines);
    }
    Ok(Triangle {
        lines: [l1.clone(), l2.clone(), l3.clone()],
        vertices: [p, q, r],
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleAngles<F> {
    /// Angles at `P`, `Q`, `R`.
    pub angles: [F; 3],
    pub sum: F,
    /// `sum − π`.
    pub excess: F,
    /// Area of the spherical triangle, computed from the vertex directions
    /// alone.
    pub area: F,
}

/// Interior angle at `a` of the spherical triangle `abc`.
fn spherical_angle<F: Float>(a: &Vec3<F>, b: &Vec3<F>, c: &Vec3<F>) -> F {
    let y = dot(a, &cross(b, c)).abs();
    let x = dot(b, c) - dot(a, b) * dot(a, c);
    y.atan2(x)
}

/// Area of the spherical triangle on unit vectors `a`, `b`, `c`.
pub fn spherical_area<F: Float>(a: &Vec3<F>, b: &Vec3<F>, c: &Vec3<F>) -> F {
    let triple = dot(a, &cross(b, c)).abs();
    let denom = F::one() + dot(a, b) + dot(b, c) + dot(c, a);
    (F::one() + F::one()) * triple.atan2(denom)
}

pub fn triangle_angle_sum<S: PentagonScalar, F: Float + FloatConst>(
    t: &Triangle<S>,
) -> Result<TriangleAngles<F>, AngleError> {
    let guard = F::from(DEGENERATE_ANGLE).expect("representable");
    let [l1, l2, l3] = &t.lines;
    for (a, b) in [(l1, l2), (l2, l3), (l1, l3)] {
        if angle_pair::<S, F>(a, b)?.theta < guard {
            return Err(AngleError::NumericallyDegenerate);
        }
    }
    let [p, q, r] = &t.vertices;
    let dp = normalize(embed::<S, F>(p)?);
    let dq = normalize(embed::<S, F>(q)?);
    let dr = normalize(embed::<S, F>(r)?);
    let angles = [
        spherical_angle(&dp, &dq, &dr),
        spherical_angle(&dq, &dr, &dp),
        spherical_angle(&dr, &dp, &dq),
    ];
    let sum = angles[0] + angles[1] + angles[2];
    Ok(TriangleAngles {
        angles,
        sum,
        excess: sum - F::PI(),
        area: spherical_area(&dp, &dq, &dr),
    })
}

/// Membership in the intersection of the three chosen angle domains, with
/// choices for the vertices `P`, `Q`, `R` in that order.
pub fn triangle_interior_contains<S: PentagonScalar>(
    x: &Point<S>,
    t: &Triangle<S>,
    choices: [WedgeChoice; 3],
) -> Result<bool, AngleError> {
    let [l1, l2, l3] = &t.lines;
    if t.lines.iter().any(|l| incident(x, l)) {
        return Err(AngleError::OnBoundary);
    }
    Ok(wedge_contains(x, l1, l2, choices[0])?
        && wedge_contains(x, l2, l3, choices[1])?
        && wedge_contains(x, l1, l3, choices[2])?)
}
