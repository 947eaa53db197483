//! The checkers proper: one exhaustive and one sampled search per axiom.
//!
//! Exhaustive searches walk points and lines in the model's enumeration
//! order and return the first violation found.

use itertools::Itertools;

use super::geometry::{FiniteGeometry, SampledGeometry};
use super::violation::{between_count, exits_through, Violation};
use super::AxiomId;
use crate::pentaline;
use crate::sampling::Stream;

type Found<G> = Option<Violation<<G as super::Geometry>::Point, <G as super::Geometry>::Line>>;

/// Rejection budget per requested sample.
const ATTEMPTS: usize = 64;

pub(crate) fn exhaustive<G: FiniteGeometry>(g: &G, axiom: AxiomId) -> Found<G> {
    let points = g.points();
    let lines = g.lines();
    match axiom {
        AxiomId::I1 => points.iter().tuple_combinations().find_map(|(p, q)| {
            let ok = g
                .line_through(p, q)
                .is_some_and(|l| g.incident(p, &l) && g.incident(q, &l));
            (!ok).then(|| Violation::I1 {
                p: p.clone(),
                q: q.clone(),
            })
        }),
        AxiomId::I2 => points.iter().tuple_combinations().find_map(|(p, q)| {
            let through: Vec<&G::Line> = lines
                .iter()
                .filter(|l| g.incident(p, l) && g.incident(q, l))
                .collect();
            (through.len() > 1).then(|| Violation::I2 {
                p: p.clone(),
                q: q.clone(),
                l: through[0].clone(),
                m: through[1].clone(),
            })
        }),
        AxiomId::I3 => {
            let triple = points
                .iter()
                .tuple_combinations()
                .any(|(a, b, c)| !g.collinear(a, b, c));
            if !triple {
                return Some(Violation::I3 { line: None });
            }
            lines
                .iter()
                .find(|l| g.points_on(l).len() < 2)
                .map(|l| Violation::I3 {
                    line: Some(l.clone()),
                })
        }
        AxiomId::I4 => lines.iter().tuple_combinations().find_map(|(x, y, z)| {
            let meet = g.intersect(x, y).is_some()
                && g.intersect(y, z).is_some()
                && g.intersect(x, z).is_some();
            (meet && g.transversal(x, y, z).is_none()).then(|| Violation::I4 {
                x: x.clone(),
                y: y.clone(),
                z: z.clone(),
            })
        }),
        AxiomId::B1 => ordered_triples(&points).find_map(|(a, b, c)| {
            let bad = g.between(a, b, c) && (!g.between(c, b, a) || !g.collinear(a, b, c));
            bad.then(|| Violation::B1 {
                a: a.clone(),
                b: b.clone(),
                c: c.clone(),
            })
        }),
        AxiomId::B2 => ordered_pairs(&points).find_map(|(a, c)| {
            let ok = points.iter().any(|b| g.between(a, c, b));
            (!ok).then(|| Violation::B2 {
                a: a.clone(),
                c: c.clone(),
            })
        }),
        AxiomId::B3 => lines.iter().find_map(|l| {
            g.points_on(l)
                .iter()
                .tuple_combinations()
                .find_map(|(a, b, c)| {
                    (between_count(g, a, b, c) != 1).then(|| Violation::B3 {
                        a: a.clone(),
                        b: b.clone(),
                        c: c.clone(),
                    })
                })
        }),
        AxiomId::B4 | AxiomId::B4star => {
            exhaustive_pasch(g, &points, &lines, axiom == AxiomId::B4star)
        }
        AxiomId::T1 => ordered_pairs(&points).find_map(|(a, b)| {
            let ok = points.iter().any(|c| g.between(a, c, b));
            (!ok).then(|| Violation::T1 {
                a: a.clone(),
                b: b.clone(),
            })
        }),
        AxiomId::T2 => lines.iter().find_map(|base| {
            let on = g.points_on(base);
            let found = ordered_triples(&on).find_map(|(a, b, c)| {
                lines.iter().filter(|l| *l != base).find_map(|l| {
                    degenerate_pasch_fails(g, a, b, c, l).map(|z| Violation::T2 {
                        a: a.clone(),
                        b: b.clone(),
                        c: c.clone(),
                        line: l.clone(),
                        z,
                    })
                })
            });
            found
        }),
        AxiomId::T3 => lines.iter().find_map(|l| {
            let on = g.points_on(l);
            on.iter().permutations(4).find_map(|v| {
                let (a, b, c, d) = (v[0], v[1], v[2], v[3]);
                let bad = g.between(a, b, c) && g.between(a, c, d) && !g.between(a, b, d);
                bad.then(|| Violation::T3 {
                    a: a.clone(),
                    b: b.clone(),
                    c: c.clone(),
                    d: d.clone(),
                })
            })
        }),
        AxiomId::T4 => lines.iter().find_map(|l| {
            let on = g.points_on(l);
            on.iter()
                .permutations(4)
                .find_map(|v| half_line_fails(g, v[0], v[1], v[2], v[3]))
        }),
        AxiomId::T5 => lines.iter().find_map(|l| {
            let off: Vec<G::Point> = points
                .iter()
                .filter(|p| !g.incident(p, l))
                .cloned()
                .collect();
            let found = ordered_triples(&off).find_map(|(x, y, z)| half_plane_fails(g, l, x, y, z));
            found
        }),
        AxiomId::Arch5 | AxiomId::Cantor5 | AxiomId::Dedekind5 => None,
    }
}

fn ordered_pairs<T>(items: &[T]) -> impl Iterator<Item = (&T, &T)> {
    items.iter().enumerate().flat_map(move |(i, a)| {
        items
            .iter()
            .enumerate()
            .filter(move |(j, _)| *j != i)
            .map(move |(_, b)| (a, b))
    })
}

fn ordered_triples<T>(items: &[T]) -> impl Iterator<Item = (&T, &T, &T)> {
    items.iter().permutations(3).map(|v| (v[0], v[1], v[2]))
}

fn exhaustive_pasch<G: FiniteGeometry>(
    g: &G,
    points: &[G::Point],
    lines: &[G::Line],
    weak: bool,
) -> Found<G> {
    for (a, b, c) in ordered_triples(points) {
        if g.collinear(a, b, c) {
            continue;
        }
        let (ab, bc, ac) = (
            g.line_through(a, b).expect("distinct"),
            g.line_through(b, c).expect("distinct"),
            g.line_through(a, c).expect("distinct"),
        );
        for line in lines {
            if let Some(v) = pasch_case(g, a, b, c, line, [&ab, &bc, &ac], weak) {
                return Some(v);
            }
        }
    }
    None
}

/// The Pasch conclusion for one triangle and one line, if it fails.
fn pasch_case<G: super::Geometry>(
    g: &G,
    a: &G::Point,
    b: &G::Point,
    c: &G::Point,
    line: &G::Line,
    [ab, bc, ac]: [&G::Line; 3],
    weak: bool,
) -> Found<G> {
    if [a, b, c].iter().any(|p| g.incident(p, line)) {
        return None;
    }
    let d = g.intersect(line, ab).filter(|d| g.between(a, d, b))?;
    if weak {
        let e = g.intersect(line, bc)?;
        let f = g.intersect(line, ac)?;
        let fails = !g.between(b, &e, c) && !g.between(a, &f, c);
        fails.then(|| Violation::B4star {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            line: line.clone(),
            d,
            e,
            f,
        })
    } else {
        let fails = !exits_through(g, line, b, c) && !exits_through(g, line, a, c);
        fails.then(|| Violation::B4 {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            line: line.clone(),
            d,
        })
    }
}

/// The meeting point `z` if `l` crosses the open segment `ab` of the
/// collinear triple and misses the other two open segments.
fn degenerate_pasch_fails<G: super::Geometry>(
    g: &G,
    a: &G::Point,
    b: &G::Point,
    c: &G::Point,
    l: &G::Line,
) -> Option<G::Point> {
    if [a, b, c].iter().any(|p| g.incident(p, l)) {
        return None;
    }
    let base = g.line_through(a, b)?;
    if &base == l || !g.incident(c, &base) {
        return None;
    }
    let z = g.intersect(l, &base)?;
    (g.between(a, &z, b) && !g.between(a, &z, c) && !g.between(b, &z, c)).then_some(z)
}

fn half_line_fails<G: super::Geometry>(
    g: &G,
    o: &G::Point,
    p: &G::Point,
    q: &G::Point,
    r: &G::Point,
) -> Found<G> {
    let bad = g.same_side_of_point(o, p, q)
        && g.same_side_of_point(o, p, r)
        && !g.same_side_of_point(o, q, r);
    bad.then(|| Violation::T4 {
        o: o.clone(),
        p: p.clone(),
        q: q.clone(),
        r: r.clone(),
    })
}

fn half_plane_fails<G: super::Geometry>(
    g: &G,
    l: &G::Line,
    x: &G::Point,
    y: &G::Point,
    z: &G::Point,
) -> Found<G> {
    let bad = !g.opposite_sides(l, x, y) && !g.opposite_sides(l, y, z) && g.opposite_sides(l, x, z);
    bad.then(|| Violation::T5 {
        line: l.clone(),
        x: x.clone(),
        y: y.clone(),
        z: z.clone(),
    })
}

/// `k` pairwise distinct random points of `l`.
fn distinct_on<G: SampledGeometry>(
    g: &G,
    l: &G::Line,
    k: usize,
    s: &mut Stream,
) -> Option<Vec<G::Point>> {
    let mut out: Vec<G::Point> = Vec::with_capacity(k);
    for _ in 0..ATTEMPTS {
        if out.len() == k {
            break;
        }
        let p = g.sample_point_on(l, s);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    (out.len() == k).then_some(out)
}

fn distinct_points<G: SampledGeometry>(g: &G, k: usize, s: &mut Stream) -> Option<Vec<G::Point>> {
    let mut out: Vec<G::Point> = Vec::with_capacity(k);
    for _ in 0..ATTEMPTS {
        if out.len() == k {
            break;
        }
        let p = g.sample_point(s);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    (out.len() == k).then_some(out)
}

/// Three distinct lines meeting pairwise, built from shared points.
fn meeting_triple<G: SampledGeometry>(g: &G, s: &mut Stream) -> Option<[G::Line; 3]> {
    let x = g.sample_line(s);
    let px = g.sample_point_on(&x, s);
    let y = g.line_through(&px, &g.sample_point(s))?;
    let qx = g.sample_point_on(&x, s);
    let qy = g.sample_point_on(&y, s);
    let z = g.line_through(&qx, &qy)?;
    let distinct = x != y && y != z && x != z;
    let meet = g.intersect(&x, &y).is_some()
        && g.intersect(&y, &z).is_some()
        && g.intersect(&x, &z).is_some();
    (distinct && meet).then_some([x, y, z])
}

/// Runs `trial` until `n` trials have produced a verdict or the attempt
/// budget is spent; stops at the first violation.
fn sample_loop<G: SampledGeometry>(
    n: usize,
    s: &mut Stream,
    mut trial: impl FnMut(&mut Stream) -> Option<Found<G>>,
) -> Found<G> {
    let mut done = 0;
    let mut attempts = 0;
    while done < n && attempts < n * ATTEMPTS {
        attempts += 1;
        if let Some(verdict) = trial(s) {
            done += 1;
            if verdict.is_some() {
                return verdict;
            }
        }
    }
    None
}

pub(crate) fn sampled<G: SampledGeometry>(
    g: &G,
    axiom: AxiomId,
    s: &mut Stream,
    n: usize,
) -> Found<G> {
    match axiom {
        AxiomId::I1 => sample_loop::<G>(n, s, |s| {
            let v = distinct_points(g, 2, s)?;
            let (p, q) = (&v[0], &v[1]);
            let ok = g
                .line_through(p, q)
                .is_some_and(|l| g.incident(p, &l) && g.incident(q, &l));
            Some((!ok).then(|| Violation::I1 {
                p: p.clone(),
                q: q.clone(),
            }))
        }),
        AxiomId::I2 => sample_loop::<G>(n, s, |s| {
            let v = distinct_points(g, 3, s)?;
            let (p, q, r) = (&v[0], &v[1], &v[2]);
            let l = g.line_through(p, q)?;
            if g.incident(r, &l) {
                return None;
            }
            let m = g.line_through(p, r)?;
            if m != l && g.incident(q, &m) {
                return Some(Some(Violation::I2 {
                    p: p.clone(),
                    q: q.clone(),
                    l,
                    m,
                }));
            }
            // any two points of l determine l again
            let on = g.points_on_line(&l, 4);
            let found = on.iter().tuple_combinations().find_map(|(u, w)| {
                let k = g.line_through(u, w)?;
                (k != l).then(|| Violation::I2 {
                    p: u.clone(),
                    q: w.clone(),
                    l: l.clone(),
                    m: k,
                })
            });
            Some(found)
        }),
        AxiomId::I3 => {
            let triple_ok = g
                .non_collinear_triple()
                .is_some_and(|[a, b, c]| !g.collinear(&a, &b, &c));
            if !triple_ok {
                return Some(Violation::I3 { line: None });
            }
            sample_loop::<G>(n, s, |s| {
                let l = g.sample_line(s);
                let ok = distinct_on(g, &l, 2, s).is_some();
                Some((!ok).then_some(Violation::I3 { line: Some(l) }))
            })
        }
        AxiomId::I4 => sample_loop::<G>(n, s, |s| {
            let [x, y, z] = meeting_triple(g, s)?;
            let ok = g.transversal(&x, &y, &z).is_some_and(|(d, pts)| {
                let distinct = pts[0] != pts[1] && pts[1] != pts[2] && pts[0] != pts[2];
                distinct
                    && [&x, &y, &z]
                        .into_iter()
                        .zip(&pts)
                        .all(|(l, p)| g.incident(p, l) && g.incident(p, &d))
                    && d != x
                    && d != y
                    && d != z
            });
            Some((!ok).then_some(Violation::I4 { x, y, z }))
        }),
        AxiomId::B1 => sample_loop::<G>(n, s, |s| {
            let l = g.sample_line(s);
            let v = distinct_on(g, &l, 2, s)?;
            let (a, c) = (&v[0], &v[1]);
            let b = g.sample_between(a, c, s)?;
            let bad = g.between(a, &b, c) && (!g.between(c, &b, a) || !g.collinear(a, &b, c));
            Some(bad.then(|| Violation::B1 {
                a: a.clone(),
                b,
                c: c.clone(),
            }))
        }),
        AxiomId::B2 => sample_loop::<G>(n, s, |s| {
            let v = distinct_points(g, 2, s)?;
            let (a, c) = (&v[0], &v[1]);
            let ok = g.extend(a, c).is_some_and(|b| g.between(a, c, &b));
            Some((!ok).then(|| Violation::B2 {
                a: a.clone(),
                c: c.clone(),
            }))
        }),
        AxiomId::B3 => sample_loop::<G>(n, s, |s| {
            let l = g.sample_line(s);
            let v = distinct_on(g, &l, 3, s)?;
            let (a, b, c) = (&v[0], &v[1], &v[2]);
            Some((between_count(g, a, b, c) != 1).then(|| Violation::B3 {
                a: a.clone(),
                b: b.clone(),
                c: c.clone(),
            }))
        }),
        AxiomId::B4 | AxiomId::B4star => sample_loop::<G>(n, s, |s| {
            let v = distinct_points(g, 3, s)?;
            let (a, b, c) = (&v[0], &v[1], &v[2]);
            if g.collinear(a, b, c) {
                return None;
            }
            let ab = g.line_through(a, b)?;
            let bc = g.line_through(b, c)?;
            let ac = g.line_through(a, c)?;
            let d = g.sample_between(a, b, s)?;
            let line = g.sample_line_through(&d, &ab, s)?;
            if [a, b, c].iter().any(|p| g.incident(p, &line)) {
                return None;
            }
            let weak = axiom == AxiomId::B4star;
            if weak && (g.intersect(&line, &bc).is_none() || g.intersect(&line, &ac).is_none()) {
                return None;
            }
            Some(pasch_case(g, a, b, c, &line, [&ab, &bc, &ac], weak))
        }),
        AxiomId::T1 => sample_loop::<G>(n, s, |s| {
            let v = distinct_points(g, 2, s)?;
            let (a, b) = (&v[0], &v[1]);
            let ok = g.interior(a, b).is_some_and(|c| g.between(a, &c, b));
            Some((!ok).then(|| Violation::T1 {
                a: a.clone(),
                b: b.clone(),
            }))
        }),
        AxiomId::T2 => sample_loop::<G>(n, s, |s| {
            let base = g.sample_line(s);
            let v = distinct_on(g, &base, 3, s)?;
            let (a, b, c) = (&v[0], &v[1], &v[2]);
            let z = g.sample_between(a, b, s)?;
            let l = g.sample_line_through(&z, &base, s)?;
            if [a, b, c].iter().any(|p| g.incident(p, &l)) {
                return None;
            }
            Some(
                degenerate_pasch_fails(g, a, b, c, &l).map(|z| Violation::T2 {
                    a: a.clone(),
                    b: b.clone(),
                    c: c.clone(),
                    line: l,
                    z,
                }),
            )
        }),
        AxiomId::T3 => sample_loop::<G>(n, s, |s| {
            let l = g.sample_line(s);
            let v = distinct_on(g, &l, 2, s)?;
            let (a, d) = (&v[0], &v[1]);
            // build (a c d), then (a b c), so the premises hold by construction
            let c = g.sample_between(a, d, s)?;
            let b = g.sample_between(a, &c, s)?;
            if !(g.between(a, &b, &c) && g.between(a, &c, d)) {
                return None;
            }
            Some((!g.between(a, &b, d)).then(|| Violation::T3 {
                a: a.clone(),
                b,
                c,
                d: d.clone(),
            }))
        }),
        AxiomId::T4 => sample_loop::<G>(n, s, |s| {
            let l = g.sample_line(s);
            let v = distinct_on(g, &l, 4, s)?;
            Some(half_line_fails(g, &v[0], &v[1], &v[2], &v[3]))
        }),
        AxiomId::T5 => sample_loop::<G>(n, s, |s| {
            let l = g.sample_line(s);
            let v = distinct_points(g, 3, s)?;
            if v.iter().any(|p| g.incident(p, &l)) {
                return None;
            }
            Some(half_plane_fails(g, &l, &v[0], &v[1], &v[2]))
        }),
        AxiomId::Arch5 | AxiomId::Cantor5 | AxiomId::Dedekind5 => None,
    }
}

/// The continuity statements of the five-point line, checked over all
/// segments and partitions.
pub(crate) fn continuity<P, L>(axiom: AxiomId) -> Option<Violation<P, L>> {
    match axiom {
        AxiomId::Arch5 => pentaline::all_segments()
            .into_iter()
            .find(|s| pentaline::archimedes_cover(s).is_none())
            .map(|segment| Violation::Arch5 { segment }),
        AxiomId::Cantor5 => {
            pentaline::nested_segments().map(|(inner, outer)| Violation::Cantor5 { inner, outer })
        }
        AxiomId::Dedekind5 => pentaline::dedekind_scan()
            .cuts
            .into_iter()
            .next()
            .map(|(first, second)| Violation::Dedekind5 { first, second }),
        _ => None,
    }
}
