use std::f64::consts::PI;

use planecheck::prism::{
    self, agreement_vertices, between3, extend_heights, heights_of, incident, intersect,
    line_through, Line, Parallelism, Point,
};
use planecheck::{OrderedField, PrismLine, PrismPoint, Qs5, Rational, Vertex};
use proptest::prelude::*;

fn qs5() -> impl Strategy<Value = Qs5> {
    (-20i64..=20, 1i64..=4, -20i64..=20, 1i64..=4).prop_map(|(a, da, b, db)| {
        Qs5::new(Rational::from_ratio(a, da), Rational::from_ratio(b, db))
    })
}

fn vertex() -> impl Strategy<Value = Vertex> {
    (0usize..5).prop_map(|i| Vertex::ALL[i])
}

fn point() -> impl Strategy<Value = PrismPoint> {
    (vertex(), qs5()).prop_map(|(v, h)| Point::new(v, h))
}

fn harmonic() -> impl Strategy<Value = PrismLine> {
    (qs5(), qs5()).prop_map(|(a, b)| Line::harmonic(a, b))
}

fn line() -> impl Strategy<Value = PrismLine> {
    prop_oneof![1 => vertex().prop_map(Line::Vertical), 4 => harmonic()]
}

/// Heights of the plane `z = αx + βy` over the unit pentagon.
fn plane_heights(h0: f64, h1: f64) -> [f64; 5] {
    let t = 2.0 * PI / 5.0;
    let alpha = h0;
    let beta = (h1 - h0 * t.cos()) / t.sin();
    std::array::from_fn(|k| alpha * (t * k as f64).cos() + beta * (t * k as f64).sin())
}

proptest! {
    #[test]
    fn harmonic_heights_lie_on_a_plane_through_the_centre(h0 in qs5(), h1 in qs5()) {
        let exact = heights_of(&Line::harmonic(h0.clone(), h1.clone())).unwrap();
        let want = plane_heights(h0.to_f64().unwrap(), h1.to_f64().unwrap());
        for (e, w) in exact.iter().zip(want) {
            prop_assert!((e.to_f64().unwrap() - w).abs() <= 1e-9 * (1.0 + w.abs()));
        }
    }

    #[test]
    fn height_recurrence_has_period_five(h0 in qs5(), h1 in qs5()) {
        let seq = extend_heights(h0.clone(), h1.clone(), 12);
        for k in 0..7 {
            prop_assert_eq!(&seq[k], &seq[k + 5]);
        }
        let heights = heights_of(&Line::harmonic(h0, h1)).unwrap();
        prop_assert_eq!(&seq[..5], &heights[..]);
    }

    #[test]
    fn two_points_span_exactly_one_line(p in point(), q in point(), m in line()) {
        prop_assume!(p != q);
        let l = line_through(&p, &q).unwrap();
        prop_assert!(incident(&p, &l) && incident(&q, &l));
        if m != l {
            prop_assert!(!(incident(&p, &m) && incident(&q, &m)));
        }
    }

    #[test]
    fn distinct_lines_share_at_most_one_point(l in line(), m in line()) {
        prop_assume!(l != m);
        let shared = Vertex::ALL
            .into_iter()
            .filter(|&v| match (&l, &m) {
                (Line::Harmonic { .. }, Line::Harmonic { .. }) => l.height_at(v) == m.height_at(v),
                _ => false,
            })
            .count();
        prop_assert!(shared <= 1);
        if let Some(x) = intersect(&l, &m).unwrap() {
            prop_assert!(incident(&x, &l) && incident(&x, &m));
        }
    }

    #[test]
    fn harmonic_pairs_agree_in_at_most_one_vertex(l in harmonic(), m in harmonic()) {
        prop_assume!(l != m);
        prop_assert!(agreement_vertices(&l, &m).len() <= 1);
    }

    #[test]
    fn betweenness_is_symmetric_and_exclusive(l in line(), picks in proptest::collection::vec(qs5(), 3)) {
        let pts: Vec<PrismPoint> = match &l {
            Line::Vertical(v) => picks.iter().map(|h| Point::new(*v, h.clone())).collect(),
            Line::Harmonic { .. } => vec![
                l.point_at(Vertex::A).unwrap(),
                l.point_at(Vertex::C).unwrap(),
                l.point_at(Vertex::D).unwrap(),
            ],
        };
        let (a, b, c) = (&pts[0], &pts[1], &pts[2]);
        prop_assume!(a != b && b != c && a != c);
        prop_assert_eq!(between3(a, b, c).unwrap(), between3(c, b, a).unwrap());
        let count = [between3(b, a, c), between3(a, b, c), between3(a, c, b)]
            .into_iter()
            .filter(|r| *r.as_ref().unwrap())
            .count();
        prop_assert_eq!(count, 1);
    }

    #[test]
    fn transversal_exists_for_any_three_lines(x in line(), y in line(), z in line()) {
        prop_assume!(x != y && y != z && x != z);
        let t = prism::transversal_for(&x, &y, &z).unwrap();
        prop_assert!(t.verify([&x, &y, &z]));
    }
}

#[test]
fn parallels_to_a_vertical_are_unique() {
    let x = Point::new(Vertex::C, Qs5::from_int(3));
    for v in Vertex::ALL.into_iter().filter(|&v| v != Vertex::C) {
        let l = Line::Vertical(v);
        let Parallelism::UniqueParallel { line } = prism::parallels_through(&x, &l, 0).unwrap()
        else {
            panic!("vertical gives a unique parallel");
        };
        assert_eq!(line, Line::Vertical(Vertex::C));
    }
}
