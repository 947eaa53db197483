//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::process::Command;
use std::time::{Duration, Instant};

use itertools::Itertools;
use planecheck::angles::{self, WedgeChoice};
use planecheck::engine::{check_axiom, run_suite, verify_witness, StructureHandle};
use planecheck::gf5plane::{self, Relation};
use planecheck::pentaline::{self, between5, SegmentClass};
use planecheck::prism::{self, Line, Parallelism, Point};
use planecheck::punctured;
use planecheck::sampling::{SampleBounds, Stream};
use planecheck::{
    AxiomId, ModelId, OrderedField, PrismLine, Qs5, Rational, Status, Strategy, Vertex,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

const A: Vertex = Vertex::A;
const B: Vertex = Vertex::B;
const C: Vertex = Vertex::C;
const D: Vertex = Vertex::D;
const E: Vertex = Vertex::E;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Outcome {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn pentaline_suite() -> Outcome {
    use AxiomId::*;
    let start = Instant::now();
    let handle = StructureHandle::new(ModelId::Pentaline);
    let reports = run_suite(&handle, &handle.supported_axioms(), Strategy::Exhaustive);
    within(Duration::from_secs(1), start)?;
    let status = |a: AxiomId| reports.iter().find(|r| r.axiom == a).map(|r| r.status);
    for a in [B1, B2, B3, T1, Cantor5, Arch5, Dedekind5] {
        ensure(status(a) == Some(Status::Holds), || {
            format!("{a}: {:?}", status(a))
        })?;
    }
    for a in [T2, T3, T4] {
        let r = reports
            .iter()
            .find(|r| r.axiom == a)
            .ok_or(format!("{a} missing"))?;
        ensure(r.status == Status::Fails, || format!("{a}: {}", r.status))?;
        let w = r.witness.as_ref().ok_or(format!("{a} has no witness"))?;
        ensure(
            verify_witness(ModelId::Pentaline, a, w).unwrap_or(false),
            || format!("{a} witness {w}"),
        )?;
    }
    let t3 = reports
        .iter()
        .find(|r| r.axiom == T3)
        .and_then(|r| r.witness.clone())
        .unwrap();
    let roles: Vec<Option<&str>> = ["a", "b", "c", "d"].iter().map(|k| t3.get(k)).collect();
    ensure(
        roles == [Some("A"), Some("B"), Some("C"), Some("E")],
        || format!("T3 witness {t3}"),
    )?;
    ensure(
        between5(A, B, C) && between5(A, C, E) && !between5(A, B, E) && between5(E, A, B),
        || "T3 witness triples".into(),
    )
}

fn triple_table() -> Outcome {
    for (x, y, z) in [(A, B, C), (C, A, D), (A, C, E), (E, A, B)] {
        ensure(between5(x, y, z), || format!("({x}{y}{z}) should hold"))?;
    }
    ensure(!between5(A, B, E), || "(ABE) should not hold".into())
}

/// Number of permutations of `0..n` whose order makes `pred` true.
fn count_orders(n: usize, pred: impl Fn(&[usize]) -> bool) -> (usize, usize) {
    let mut total = 0;
    let mut good = 0;
    for order in (0..n).permutations(n) {
        total += 1;
        let mut pos = vec![0; n];
        for (rank, &p) in order.iter().enumerate() {
            pos[p] = rank;
        }
        if pred(&pos) {
            good += 1;
        }
    }
    (total, good)
}

fn inside(pos: &[usize], x: usize, y: usize, z: usize) -> bool {
    (pos[x] < pos[y] && pos[y] < pos[z]) || (pos[z] < pos[y] && pos[y] < pos[x])
}

fn non_orderability() -> Outcome {
    let v = Vertex::ALL;
    let (total, good) = count_orders(5, |pos| {
        (0..5)
            .permutations(3)
            .all(|t| between5(v[t[0]], v[t[1]], v[t[2]]) == inside(pos, t[0], t[1], t[2]))
    });
    ensure(total == 120 && good == 0, || {
        format!("{good} of {total} orders induce the relation")
    })?;
    // A, B, C, E as 0, 1, 2, 3
    let (total4, good4) = count_orders(4, |pos| {
        inside(pos, 0, 1, 2) && inside(pos, 0, 2, 3) && inside(pos, 3, 0, 1)
    });
    ensure(total4 == 24 && good4 == 0, || {
        format!("{good4} of {total4} orders fit the triples")
    })?;
    let search = pentaline::no_linear_order_witness();
    ensure(
        search.total_orders == 120 && search.restricted_orders == 24 && search.no_order_exists(),
        || format!("{search:?}"),
    )
}

fn gf3_lengths() -> Outcome {
    let segments = pentaline::all_segments();
    ensure(segments.len() == 10, || {
        format!("{} segments", segments.len())
    })?;
    let length = |c: SegmentClass| match c {
        SegmentClass::Small => 1u8,
        SegmentClass::Large => 2u8,
    };
    let mut invalid = BTreeSet::new();
    let mut mixed = BTreeSet::new();
    for (s, t) in segments.iter().tuple_combinations() {
        let (s1, s2) = s.ends();
        let (t1, t2) = t.ends();
        let shares = [s1, s2].iter().any(|v| *v == t1 || *v == t2);
        if !shares {
            continue;
        }
        if s.class() != t.class() {
            mixed.insert((*s, *t));
        }
        match pentaline::union_segments(s, t) {
            Ok(u) => {
                let sum = (length(s.class()) + length(t.class())) % 3;
                ensure(u.length().value() == sum, || format!("{s} + {t} = {u}"))?;
                ensure(s.length().value() == length(s.class()), || {
                    format!("length of {s}")
                })?;
            }
            Err(_) => {
                invalid.insert((*s, *t));
            }
        }
    }
    ensure(invalid == mixed, || {
        format!("invalid {invalid:?} vs mixed {mixed:?}")
    })
}

fn gf5_exhaustive() -> Outcome {
    use AxiomId::*;
    let start = Instant::now();
    for (relation, want) in [(Relation::Midpoint, 1u8), (Relation::Complement, 2u8)] {
        for line in gf5plane::all_lines() {
            for (p, q, r) in line.points().into_iter().tuple_combinations() {
                let n = gf5plane::triple_between_count(relation, [p, q, r])
                    .map_err(|e| e.to_string())?;
                ensure(n == want, || {
                    format!("{relation:?} count {n} on {p} {q} {r}")
                })?;
            }
        }
    }
    let handle = StructureHandle::new(ModelId::Gf5Mid);
    let reports = run_suite(
        &handle,
        &[I1, I2, I3, I4, B1, B2, B3, B4],
        Strategy::Exhaustive,
    );
    for r in &reports {
        let want = if r.axiom == B4 {
            Status::Fails
        } else {
            Status::Holds
        };
        ensure(r.status == want, || {
            format!("gf5-mid {}: {}", r.axiom, r.status)
        })?;
    }
    let b4 = reports.iter().find(|r| r.axiom == B4).unwrap();
    let w = b4.witness.as_ref().ok_or("B4 without witness")?;
    ensure(
        verify_witness(ModelId::Gf5Mid, B4, w).unwrap_or(false),
        || format!("B4 witness {w}"),
    )?;
    within(Duration::from_secs(1), start)
}

fn prism_sampled() -> Outcome {
    use AxiomId::*;
    let handle = StructureHandle::new(ModelId::Prism);
    for (axiom, samples) in [
        (I1, 1000),
        (I2, 1000),
        (I4, 500),
        (B1, 1000),
        (B2, 1000),
        (B3, 1000),
    ] {
        let r = check_axiom(&handle, axiom, Strategy::Sampled { seed: 42, samples })
            .map_err(|e| e.to_string())?;
        ensure(r.status == Status::HoldsOnSample, || {
            format!("{axiom}: {} {:?}", r.status, r.witness)
        })?;
    }
    let mut s = Stream::new(42, 1000, SampleBounds::default());
    let mut pairs = 0;
    while pairs < 1000 {
        let l: PrismLine = Line::harmonic(s.qs5(), s.qs5());
        let m: PrismLine = Line::harmonic(s.qs5(), s.qs5());
        if l == m {
            continue;
        }
        pairs += 1;
        let agree = Vertex::ALL
            .iter()
            .filter(|&&v| l.height_at(v) == m.height_at(v))
            .count();
        ensure(agree <= 1, || format!("{l} and {m} agree {agree} times"))?;
        ensure(prism::agreement_vertices(&l, &m).len() == agree, || {
            format!("{l} {m}")
        })?;
    }
    Ok(())
}

fn pasch_star() -> Outcome {
    let w = prism::pasch_star_witness::<Qs5>();
    ensure(w.verify(), || "witness does not verify".into())?;
    let set = |a: [Vertex; 3]| a.into_iter().collect::<BTreeSet<_>>();
    ensure(set(w.closed_pq) == set([A, B, D]), || {
        format!("cl(PQ) {:?}", w.closed_pq)
    })?;
    ensure(set(w.closed_qr) == set([B, C, E]), || {
        format!("cl(QR) {:?}", w.closed_qr)
    })?;
    ensure(set(w.closed_pr) == set([A, C, B]), || {
        format!("cl(PR) {:?}", w.closed_pr)
    })?;
    ensure(w.d == Line::Vertical(D), || format!("d = {}", w.d))?;
    ensure(
        prism::incident(&w.x_d, &w.l1) && prism::incident(&w.z_d, &w.l3),
        || "meets".into(),
    )?;
    ensure(
        !set(w.closed_pr).contains(&w.x_d.vertex) && !set(w.closed_qr).contains(&w.z_d.vertex),
        || format!("d meets l1 at {} and l3 at {}", w.x_d, w.z_d),
    )
}

fn parallelism() -> Outcome {
    let q = |n: i64, d: i64| Qs5::from_ratio(n, d);
    for lv in Vertex::ALL {
        for xv in Vertex::ALL.into_iter().filter(|&v| v != lv) {
            let x = Point::new(xv, q(3, 2));
            let l = Line::Vertical(lv);
            let Parallelism::UniqueParallel { line } =
                prism::parallels_through(&x, &l, 0).map_err(|e| e.to_string())?
            else {
                return Err("vertical line without a unique parallel".into());
            };
            ensure(line == Line::Vertical(xv), || format!("parallel {line}"))?;
            ensure(
                prism::intersect(&line, &l)
                    .map_err(|e| e.to_string())?
                    .is_none(),
                || "meets".into(),
            )?;
            // every harmonic through x meets a vertical
            for h in [q(0, 1), q(-7, 3), q(5, 1)] {
                let through =
                    prism::line_through(&x, &Point::new(lv, h)).map_err(|e| e.to_string())?;
                ensure(prism::intersect(&through, &l).unwrap().is_some(), || {
                    format!("{through} misses {l}")
                })?;
            }
        }
    }
    let l = Line::harmonic(q(1, 2), Qs5::phi_prime());
    let x = Point::new(Vertex::C, q(7, 1));
    let Parallelism::FinitelyManyMeet {
        meeting,
        sample_parallels,
    } = prism::parallels_through(&x, &l, 120).map_err(|e| e.to_string())?
    else {
        return Err("harmonic line with a unique parallel".into());
    };
    ensure(meeting.len() <= 5, || {
        format!("{} meeting lines", meeting.len())
    })?;
    ensure(meeting.iter().all_unique(), || {
        "repeated meeting line".into()
    })?;
    for m in &meeting {
        ensure(
            prism::incident(&x, m) && prism::intersect(m, &l).unwrap().is_some(),
            || format!("{m}"),
        )?;
    }
    ensure(
        sample_parallels.len() >= 100 && sample_parallels.iter().all_unique(),
        || format!("{} parallels", sample_parallels.len()),
    )?;
    for p in &sample_parallels {
        ensure(
            prism::incident(&x, p) && prism::intersect(p, &l).unwrap().is_none(),
            || format!("{p}"),
        )?;
    }
    Ok(())
}

fn angle_checks() -> Outcome {
    let pair: planecheck::AnglePair =
        angles::angle_pair(&PrismLine::base(), &Line::Vertical(Vertex::A))
            .map_err(|e| e.to_string())?;
    ensure(
        (pair.theta - PI / 2.0).abs() <= 1e-12 && (pair.complement - PI / 2.0).abs() <= 1e-12,
        || format!("{pair:?}"),
    )?;

    let mut s = Stream::new(42, 2000, SampleBounds::default());
    let mut pairs = 0;
    while pairs < 1000 {
        let (l, m) = (prism::sample_line(&mut s), prism::sample_line(&mut s));
        if l == m {
            continue;
        }
        pairs += 1;
        let p: planecheck::AnglePair = angles::angle_pair(&l, &m).map_err(|e| e.to_string())?;
        ensure((p.theta + p.complement - PI).abs() <= 1e-12, || {
            format!("{l} {m}: {p:?}")
        })?;
    }

    let mut triangles = 0;
    let mut attempts = 0;
    while triangles < 100 {
        attempts += 1;
        ensure(attempts < 10_000, || "could not build 100 triangles".into())?;
        let picks: Vec<usize> = (0..3).map(|_| s.below(5)).collect();
        if !picks.iter().all_unique() {
            continue;
        }
        let [p, q, r] = [0, 1, 2].map(|i| Point::new(Vertex::ALL[picks[i]], s.qs5()));
        let (Ok(l1), Ok(l2), Ok(l3)) = (
            prism::line_through(&p, &r),
            prism::line_through(&p, &q),
            prism::line_through(&q, &r),
        ) else {
            continue;
        };
        let Ok(t) = angles::triangle_of(&l1, &l2, &l3) else {
            continue;
        };
        let a: angles::TriangleAngles<f64> = match angles::triangle_angle_sum(&t) {
            Ok(a) => a,
            Err(angles::AngleError::NumericallyDegenerate) => continue,
            Err(e) => return Err(e.to_string()),
        };
        triangles += 1;
        ensure(a.sum > PI + 1e-9, || {
            format!("sum {} for {p} {q} {r}", a.sum)
        })?;
        ensure((a.sum - PI - a.area).abs() <= 1e-9, || {
            format!("sum {} area {}", a.sum, a.area)
        })?;
    }

    let w = prism::pasch_star_witness::<Qs5>();
    let t = angles::triangle_of(&w.l1, &w.l2, &w.l3).map_err(|e| e.to_string())?;
    let choices = [
        WedgeChoice::Between,
        WedgeChoice::Outside,
        WedgeChoice::Between,
    ];
    for k in 0..20 {
        let h = Rational::from_ratio(4 * k + 1, 30);
        let want = Rational::from_int(1) < h && h < Rational::from_int(2);
        let x = Point::new(Vertex::B, Qs5::rational(h.clone()));
        let got = angles::triangle_interior_contains(&x, &t, choices).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("height {h}: got {got}"))?;
    }
    Ok(())
}

fn punctured_pasch() -> Outcome {
    let w = punctured::q_pasch_witness::<Rational>();
    ensure(w.verify(), || "witness does not verify".into())?;
    ensure(
        punctured::q_between(&w.a, &w.d, &w.b).unwrap_or(false),
        || "(ADB) fails".into(),
    )?;
    ensure(w.parallel_to_ac(), || "line not parallel to AC".into())?;
    ensure(w.meets_bc_in_hole(), || {
        "line does not meet BC in the hole".into()
    })
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_planecheck"))
            .args(["suite", "--model", "prism", "--seed", "7", "--json", "-"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success(), || {
        String::from_utf8_lossy(&a.stderr).into_owned()
    })?;
    ensure(!a.stdout.is_empty(), || "empty output".into())?;
    ensure(a.stdout == b.stdout, || "outputs differ".into())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("pentaline exhaustive suite", pentaline_suite),
        ("five-point triple table", triple_table),
        ("no linear order", non_orderability),
        ("GF(3) segment lengths", gf3_lengths),
        ("gf5 exhaustive", gf5_exhaustive),
        ("prism sampled", prism_sampled),
        ("weak Pasch counterexample", pasch_star),
        ("parallelism trichotomy", parallelism),
        ("angles", angle_checks),
        ("punctured Pasch witness", punctured_pasch),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
