use dentcurve::synth::{polar_curvature_oracle, polar_trace, PolarShapeSpec, RadialHarmonics};
use dentcurve::{count_indentations, curvature_profile, segment_regions, BoundaryTrace, Point, Severity, Sign};
use proptest::prelude::*;

fn rose_trace(n: usize) -> BoundaryTrace {
    polar_trace(&PolarShapeSpec::new(100.0, 20.0, 5, n, Point::new(0.0, 0.0)).unwrap()).unwrap()
}

fn count(trace: &BoundaryTrace, sigma: f64) -> usize {
    let profile = curvature_profile(trace, None).unwrap();
    count_indentations(&profile, Severity::new(sigma).unwrap()).count
}

#[test]
fn rose_segments_into_ten_alternating_regions() {
    let spec = PolarShapeSpec::new(100.0, 20.0, 5, 1024, Point::new(0.0, 0.0)).unwrap();
    let profile = curvature_profile(&polar_trace(&spec).unwrap(), None).unwrap();
    let oracle = polar_curvature_oracle(&spec);
    let seg = segment_regions(&profile);
    assert_eq!(seg.regions.len(), 10);
    for pair in seg.regions.windows(2) {
        assert_ne!(pair[0].sign, pair[1].sign);
    }
    let negatives: Vec<_> = seg.regions.iter().filter(|r| r.sign == Sign::Negative).collect();
    assert_eq!(negatives.len(), 5);
    for r in negatives {
        // valley κ = (R − a − a·m²)/(R − a)² = −0.065625; samples miss θ = π/5 slightly
        assert!((r.peak_abs_kappa - 0.065625).abs() < 1e-3);
        assert!((r.peak_abs_kappa + oracle[r.peak_index]).abs() < 1e-9);
        assert!(r.mean_kappa < 0.0);
    }
}

#[test]
fn rose_counts_follow_severity() {
    let trace = rose_trace(1024);
    assert_eq!(count(&trace, 0.01), 5);
    assert_eq!(count(&trace, 0.1), 0);
    assert_eq!(count(&trace, 0.065), 5);
    assert_eq!(count(&trace, 0.066), 0);
}

#[test]
fn circle_has_no_indentations() {
    let trace = polar_trace(&PolarShapeSpec::new(20.0, 0.0, 0, 256, Point::new(0.0, 0.0)).unwrap()).unwrap();
    for sigma in [1e-6, 0.01, 1.0] {
        assert_eq!(count(&trace, sigma), 0);
    }
}

#[test]
fn accepted_regions_satisfy_the_predicate() {
    let profile = curvature_profile(&rose_trace(1024), None).unwrap();
    let report = count_indentations(&profile, Severity::new(0.01).unwrap());
    assert_eq!(report.count, report.regions.len());
    assert_eq!(report.n, 1024);
    assert_eq!(report.sigma, 0.01);
    for r in &report.regions {
        assert!(r.mean_kappa < 0.0 && r.peak_abs_kappa > 0.01);
    }
}

#[test]
fn wrap_around_valley_is_counted_once() {
    // start the trace at the bottom of a valley
    let spec = PolarShapeSpec::new(100.0, 20.0, 5, 1000, Point::new(0.0, 0.0)).unwrap();
    let mut pts = polar_trace(&spec).unwrap().into_points();
    pts.rotate_left(100); // θ = π/5
    let trace = BoundaryTrace::new(pts).unwrap();
    assert_eq!(count(&trace, 0.01), 5);
    let seg = segment_regions(&curvature_profile(&trace, None).unwrap());
    assert_eq!(seg.regions.len(), 10);
    assert!(seg.regions.iter().any(|r| r.start > r.end));
}

#[test]
fn scale_consistency_on_analytic_traces() {
    let small = polar_trace(&PolarShapeSpec::new(100.0, 20.0, 5, 1024, Point::new(0.0, 0.0)).unwrap()).unwrap();
    let big = polar_trace(&PolarShapeSpec::new(300.0, 60.0, 5, 1024, Point::new(0.0, 0.0)).unwrap()).unwrap();
    for sigma in [0.005, 0.03, 0.06, 0.07] {
        assert_eq!(count(&small, sigma), count(&big, sigma / 3.0));
    }
}

fn harmonic_shape() -> impl Strategy<Value = RadialHarmonics> {
    (
        prop::collection::vec((2u32..7, -12.0f64..12.0, -12.0f64..12.0), 1..4),
        128usize..768,
    )
        .prop_map(|(terms, samples)| RadialHarmonics {
            radius: 100.0,
            terms,
            samples,
            center: Point::new(0.0, 0.0),
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn count_is_monotone_in_sigma(shape in harmonic_shape(), mut sigmas in prop::collection::vec(1e-4f64..0.5, 2..8)) {
        let profile = curvature_profile(&shape.trace().unwrap(), None).unwrap();
        sigmas.sort_by(f64::total_cmp);
        let counts: Vec<usize> = sigmas
            .iter()
            .map(|&s| count_indentations(&profile, Severity::new(s).unwrap()).count)
            .collect();
        prop_assert!(counts.windows(2).all(|w| w[0] >= w[1]), "{counts:?}");
    }

    #[test]
    fn sigma_limits(shape in harmonic_shape()) {
        let profile = curvature_profile(&shape.trace().unwrap(), None).unwrap();
        let negatives = segment_regions(&profile)
            .regions
            .iter()
            .filter(|r| r.sign == Sign::Negative)
            .count();
        prop_assert_eq!(count_indentations(&profile, Severity::new(1e-300).unwrap()).count, negatives);
        prop_assert_eq!(count_indentations(&profile, Severity::new(1e300).unwrap()).count, 0);
    }

    #[test]
    fn start_and_reversal_do_not_change_count(shape in harmonic_shape(), frac in 0.0f64..1.0, sigma in 1e-3f64..0.2) {
        let trace = shape.trace().unwrap();
        let n = trace.len();
        let mut shifted = trace.points().to_vec();
        shifted.rotate_left((frac * n as f64) as usize % n);
        let mut reversed = trace.points().to_vec();
        reversed.reverse();
        let base = count(&trace, sigma);
        prop_assert_eq!(count(&BoundaryTrace::new(shifted).unwrap(), sigma), base);
        prop_assert_eq!(count(&BoundaryTrace::new(reversed).unwrap(), sigma), base);
    }

    #[test]
    fn regions_tile_and_alternate(shape in harmonic_shape()) {
        let profile = curvature_profile(&shape.trace().unwrap(), None).unwrap();
        let seg = segment_regions(&profile);
        let n = profile.len();
        prop_assert_eq!(seg.regions.iter().map(|r| r.len).sum::<usize>(), n);
        if seg.regions.len() > 1 {
            for i in 0..seg.regions.len() {
                let (a, b) = (&seg.regions[i], &seg.regions[(i + 1) % seg.regions.len()]);
                prop_assert_ne!(a.sign, b.sign);
                prop_assert_eq!((a.end + 1) % n, b.start);
            }
        }
    }
}
