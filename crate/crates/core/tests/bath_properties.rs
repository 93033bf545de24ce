use oscbath::bath::{
    canonicalize, free_energy_integrand, memory_susceptibility, roots, srt_memory, susceptibility, BathSpec,
    CanonicalBath, Cutoff, Regime,
};
use oscbath::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn spec_strategy() -> impl Strategy<Value = BathSpec> {
    prop_oneof![
        (0.1f64..10.0, 0.01f64..8.0).prop_map(|(omega0, gamma)| BathSpec::Ohmic { omega0, gamma }),
        (0.1f64..10.0, 0.01f64..4.0, 0.001f64..0.1).prop_map(|(omega0, g, tau_scaled)| {
            BathSpec::SingleRelaxationTime { omega0, gamma: g * omega0, tau_scaled }
        }),
        (0.1f64..10.0, 0.01f64..4.0, 10.0f64..1e6, any::<bool>()).prop_map(|(omega0, g, op, large)| BathSpec::Qed {
            omega0,
            gamma: g * omega0,
            omega_prime_scaled: op,
            large_cutoff_limit: large,
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn roots_satisfy_the_quadratic(omega0 in 1e-3f64..1e3, ratio in 1e-3f64..1e3) {
        let gamma = ratio * omega0;
        let r = roots(omega0, gamma).unwrap();
        // Vieta: z₁ + z₁* = γ, z₁z₁* = ω₀²
        let sum = r.z1 + r.z1_conj;
        let product = r.z1 * r.z1_conj;
        prop_assert!((sum.re - gamma).abs() <= 1e-13 * gamma);
        prop_assert!(sum.im.abs() <= 1e-13 * gamma.max(omega0));
        prop_assert!((product.re / (omega0 * omega0) - 1.0).abs() <= 1e-13);
        prop_assert!(r.z1.re > 0.0 && r.z1_conj.re > 0.0);
        match r.regime {
            Regime::Underdamped => prop_assert!(gamma < 2.0 * omega0 && r.z1 == r.z1_conj.conj()),
            _ => prop_assert!(gamma >= 2.0 * omega0 && r.z1.im == 0.0 && r.z1.re <= r.z1_conj.re),
        }
    }

    #[test]
    fn canonical_form_is_consistent(spec in spec_strategy()) {
        let Ok(c) = canonicalize(&spec) else { return Ok(()) };
        prop_assert_eq!(c.omega0, spec.omega0());
        prop_assert_eq!(c.gamma, spec.gamma());
        match spec {
            BathSpec::Ohmic { .. } => prop_assert!(c.is_ohmic()),
            BathSpec::SingleRelaxationTime { omega0, gamma, tau_scaled } => {
                let (o, op) = (c.omega.finite().unwrap(), c.omega_prime.finite().unwrap());
                prop_assert!((o * tau_scaled / omega0 - 1.0).abs() < 1e-14);
                prop_assert!((o - op - gamma).abs() <= 1e-12 * o);
            }
            BathSpec::Qed { omega0, gamma, large_cutoff_limit: true, .. } => {
                prop_assert!(c.omega_prime.is_infinite());
                prop_assert!((c.omega.finite().unwrap() * gamma / (omega0 * omega0) - 1.0).abs() < 1e-14);
            }
            BathSpec::Qed { omega0, gamma, .. } => {
                let (o, op) = (c.omega.finite().unwrap(), c.omega_prime.finite().unwrap());
                let lhs = 1.0 / o;
                let rhs = 1.0 / op + gamma / (omega0 * omega0);
                prop_assert!((lhs / rhs - 1.0).abs() < 1e-13);
                prop_assert!(o < op);
            }
        }
    }

    #[test]
    fn oscillator_term_of_the_integrand_is_positive(spec in spec_strategy(), w in 1e-4f64..1e4) {
        // the cutoff Lorentzians may drive the full integrand negative
        let Ok(c) = canonicalize(&spec) else { return Ok(()) };
        let g = free_energy_integrand(&c.ohmic_part(), w * c.omega0);
        prop_assert!(g > 0.0, "g = {g} for {c:?} at {w}");
    }
}

#[test]
fn srt_friction_tends_to_gamma() {
    let gamma = 0.7;
    let deviations: Vec<f64> = [1e2, 1e4, 1e6].iter().map(|&op| (srt_memory(1.0, gamma, op).0 - gamma).abs()).collect();
    assert!(deviations[0] > deviations[1] && deviations[1] > deviations[2]);
    assert!(deviations[2] < 1e-5);
}

/// Unwrapped phase derivative of α along the real axis, by central
/// differences: Im d log α/dω.
fn phase_slope(bath: &CanonicalBath, w: f64) -> f64 {
    let h = 1e-5 * w.max(1e-2);
    let alpha = |x: f64| susceptibility(bath, 1.0, Complex64::new(x, 0.0)).unwrap();
    let (a, b) = (alpha(w + h), alpha(w - h));
    (a / b).arg() / (2.0 * h)
}

#[test]
fn integrand_is_the_phase_slope_of_the_susceptibility() {
    let baths = [
        CanonicalBath::ohmic(1.0, 0.3).unwrap(),
        CanonicalBath::ohmic(1.0, 3.0).unwrap(),
        canonicalize(&BathSpec::SingleRelaxationTime { omega0: 1.0, gamma: 1.0, tau_scaled: 0.05 }).unwrap(),
        canonicalize(&BathSpec::Qed { omega0: 1.0, gamma: 0.5, omega_prime_scaled: 50.0, large_cutoff_limit: false })
            .unwrap(),
        canonicalize(&BathSpec::Qed { omega0: 1.0, gamma: 0.5, omega_prime_scaled: 0.0, large_cutoff_limit: true })
            .unwrap(),
    ];
    let mut r = ChaCha8Rng::seed_from_u64(26);
    for bath in &baths {
        for _ in 0..30 {
            let w = 10f64.powf(r.gen_range(-2.0..2.0));
            let slope = phase_slope(bath, w);
            let g = free_energy_integrand(bath, w);
            assert!((slope - g).abs() <= 1e-8 * g.abs().max(1.0), "{bath:?} w={w}: {slope} vs {g}");
        }
    }
}

#[test]
fn memory_kernel_form_matches_combined_susceptibility() {
    let mut r = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..50 {
        let omega0 = r.gen_range(0.5..2.0);
        let gamma = r.gen_range(0.05..3.0) * omega0;
        let specs = [
            BathSpec::SingleRelaxationTime { omega0, gamma, tau_scaled: r.gen_range(0.001..0.2) },
            BathSpec::Qed {
                omega0,
                gamma,
                omega_prime_scaled: 10f64.powf(r.gen_range(1.0..4.0)),
                large_cutoff_limit: false,
            },
            BathSpec::Qed { omega0, gamma, omega_prime_scaled: 1.0, large_cutoff_limit: true },
        ];
        let z = Complex64::new(r.gen_range(-5.0..5.0), r.gen_range(0.0..5.0));
        for spec in &specs {
            let Ok(c) = canonicalize(spec) else { continue };
            let a = memory_susceptibility(spec, z).unwrap();
            let b = susceptibility(&c, 1.0, z).unwrap();
            assert!((a - b).norm() <= 1e-12 * b.norm().max(1.0), "{spec:?} z={z}: {a} vs {b}");
        }
    }
}

#[test]
fn large_cutoff_qed_is_the_limit_of_finite_cutoffs() {
    let limit =
        canonicalize(&BathSpec::Qed { omega0: 1.0, gamma: 0.2, omega_prime_scaled: 1.0, large_cutoff_limit: true })
            .unwrap();
    let finite =
        canonicalize(&BathSpec::Qed { omega0: 1.0, gamma: 0.2, omega_prime_scaled: 1e9, large_cutoff_limit: false })
            .unwrap();
    let (a, b) = (limit.omega.finite().unwrap(), finite.omega.finite().unwrap());
    assert!((a - b).abs() < 1e-8 * a);
    assert_eq!(limit.omega_prime, Cutoff::Infinite);
    for w in [0.1, 1.0, 3.0, 30.0] {
        let (x, y) = (free_energy_integrand(&limit, w), free_energy_integrand(&finite, w));
        // the finite cutoff shifts g by O(1/Ω′)
        assert!((x - y).abs() < 1e-8 * x.abs().max(1.0), "{w}: {x} vs {y}");
    }
}
