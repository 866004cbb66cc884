use std::f64::consts::{PI, TAU};

use dentcurve::synth::{polar_curvature_oracle, polar_trace, PolarShapeSpec, RadialHarmonics};
use dentcurve::{curvature_profile, total_turning, BoundaryTrace, Point};
use proptest::prelude::*;

fn rose(n: usize) -> PolarShapeSpec {
    PolarShapeSpec::new(100.0, 20.0, 5, n, Point::new(0.0, 0.0)).unwrap()
}

fn transform(trace: &BoundaryTrace, f: impl Fn(Point) -> Point) -> BoundaryTrace {
    BoundaryTrace::new(trace.points().iter().map(|&p| f(p)).collect()).unwrap()
}

#[test]
fn rose_matches_polar_oracle() {
    let spec = rose(1024);
    let profile = curvature_profile(&polar_trace(&spec).unwrap(), None).unwrap();
    let oracle = polar_curvature_oracle(&spec);
    let worst = profile
        .kappa()
        .iter()
        .zip(&oracle)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    assert!(worst < 1e-3, "max error {worst}");
}

#[test]
fn oracle_agreement_for_n_at_least_64_m() {
    for (lobes, amp) in [(1u32, 30.0), (3, 8.0), (4, 5.0), (7, 2.0)] {
        let spec = PolarShapeSpec::new(80.0, amp, lobes, 64 * lobes as usize, Point::new(5.0, -3.0)).unwrap();
        let profile = curvature_profile(&polar_trace(&spec).unwrap(), None).unwrap();
        for (a, b) in profile.kappa().iter().zip(polar_curvature_oracle(&spec)) {
            assert!((a - b).abs() < 1e-3, "m={lobes}: {a} vs {b}");
        }
    }
}

/// Central differences over the samples, with derivatives taken with
/// respect to the sample index.
fn finite_difference_curvature(trace: &BoundaryTrace) -> Vec<f64> {
    let p = trace.points();
    let n = p.len();
    (0..n)
        .map(|i| {
            let (a, b, c) = (p[(i + n - 1) % n], p[i], p[(i + 1) % n]);
            let (dx, dy) = ((c.x - a.x) / 2.0, (c.y - a.y) / 2.0);
            let (ddx, ddy) = (c.x - 2.0 * b.x + a.x, c.y - 2.0 * b.y + a.y);
            (dx * ddy - dy * ddx) / (dx * dx + dy * dy).powf(1.5)
        })
        .collect()
}

#[test]
fn finite_differences_agree_on_dense_smooth_curve() {
    let spec = PolarShapeSpec::new(100.0, 10.0, 3, 4096, Point::new(0.0, 0.0)).unwrap();
    let trace = polar_trace(&spec).unwrap();
    let spectral = curvature_profile(&trace, None).unwrap();
    for (a, b) in spectral.kappa().iter().zip(finite_difference_curvature(&trace)) {
        assert!((a - b).abs() < 1e-3, "{a} vs {b}");
    }
}

#[test]
fn rigid_motions_preserve_profile() {
    let trace = polar_trace(&rose(1024)).unwrap();
    let base = curvature_profile(&trace, None).unwrap();
    let moved = transform(&trace, |p| Point::new(p.x + 317.25, p.y - 41.5));
    let (s, c) = (0.7f64.sin(), 0.7f64.cos());
    let rotated = transform(&trace, |p| Point::new(c * p.x - s * p.y, s * p.x + c * p.y));
    for other in [moved, rotated] {
        let k = curvature_profile(&other, None).unwrap();
        for (a, b) in base.kappa().iter().zip(k.kappa()) {
            assert!((a - b).abs() < 1e-9);
        }
    }
}

#[test]
fn scaling_divides_curvature() {
    let trace = polar_trace(&rose(1024)).unwrap();
    let base = curvature_profile(&trace, None).unwrap();
    let scaled = curvature_profile(&transform(&trace, |p| Point::new(3.0 * p.x, 3.0 * p.y)), None).unwrap();
    for (a, b) in base.kappa().iter().zip(scaled.kappa()) {
        assert!((b - a / 3.0).abs() <= 1e-9 * (a / 3.0).abs().max(1e-3));
    }
}

#[test]
fn start_shift_rotates_profile() {
    let trace = polar_trace(&rose(512)).unwrap();
    let base = curvature_profile(&trace, None).unwrap();
    let m = 77;
    let mut pts = trace.points().to_vec();
    pts.rotate_left(m);
    let shifted = curvature_profile(&BoundaryTrace::new(pts).unwrap(), None).unwrap();
    let n = base.len();
    for i in 0..n {
        assert!((shifted.kappa()[i] - base.kappa()[(i + m) % n]).abs() < 1e-12);
    }
}

#[test]
fn ellipse_turning_number_is_one() {
    let n = 2048;
    let trace = BoundaryTrace::new(
        (0..n)
            .map(|t| {
                let th = TAU * t as f64 / n as f64;
                Point::new(60.0 * th.cos(), 25.0 * th.sin())
            })
            .collect(),
    )
    .unwrap();
    let profile = curvature_profile(&trace, None).unwrap();
    assert!((total_turning(&profile) - 1.0).abs() < 1e-6);
    // curvature extremes a/b² and b/a²
    let max = profile.kappa().iter().cloned().fold(f64::MIN, f64::max);
    let min = profile.kappa().iter().cloned().fold(f64::MAX, f64::min);
    assert!((max - 60.0 / 625.0).abs() < 1e-9);
    assert!((min - 25.0 / 3600.0).abs() < 1e-9);
    let _ = PI;
}

fn harmonic_shape() -> impl Strategy<Value = RadialHarmonics> {
    (
        prop::collection::vec((2u32..6, -6.0f64..6.0, -6.0f64..6.0), 1..4),
        256usize..1024,
    )
        .prop_map(|(terms, samples)| RadialHarmonics {
            radius: 100.0,
            terms,
            samples,
            center: Point::new(10.0, 20.0),
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn convex_ccw_curves_have_nonnegative_curvature(a in 0.0f64..1.0, b in 0.2f64..1.0, n in 64usize..512) {
        // ellipses are convex for any axes
        let trace = BoundaryTrace::new(
            (0..n)
                .map(|t| {
                    let th = TAU * t as f64 / n as f64;
                    Point::new((40.0 + 40.0 * a) * th.cos(), 40.0 * b * th.sin())
                })
                .collect(),
        )
        .unwrap();
        let profile = curvature_profile(&trace, None).unwrap();
        prop_assert!(profile.kappa().iter().all(|&k| k >= 0.0));
    }

    #[test]
    fn smooth_blobs_turn_once(shape in harmonic_shape()) {
        let profile = curvature_profile(&shape.trace().unwrap(), None).unwrap();
        prop_assert!((total_turning(&profile) - 1.0).abs() < 0.05);
    }

    #[test]
    fn start_shift_is_a_cyclic_permutation(shape in harmonic_shape(), frac in 0.0f64..1.0) {
        let trace = shape.trace().unwrap();
        let n = trace.len();
        let m = (frac * n as f64) as usize % n;
        let mut pts = trace.points().to_vec();
        pts.rotate_left(m);
        let base = curvature_profile(&trace, None).unwrap();
        let shifted = curvature_profile(&BoundaryTrace::new(pts).unwrap(), None).unwrap();
        for i in 0..n {
            prop_assert!((shifted.kappa()[i] - base.kappa()[(i + m) % n]).abs() < 1e-9);
        }
    }
}
