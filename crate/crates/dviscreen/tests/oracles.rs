//! Fast cross-checks of the closed forms against the brute-force oracles.
//! The full-size runs required for sign-off live in `acceptance.rs`; these
//! smaller ones keep the feedback loop short while developing.

mod common;

use common::{
    dome_min_brute, dot, grid_search_dual_min, random_dome_region, random_small_problem, uniform,
};
use dviscreen::dataio::rng::SplitMix64;
use dviscreen::problem::Loss;
use dviscreen::screen::dome::{dome_max, dome_min};
use dviscreen::screen::ssnsv::{essnsv_bounds, region_essnsv, SPathState};
use dviscreen::solver::{solve_dual, FixedAssignments};

#[test]
fn solver_matches_lattice_search_on_small_problems() {
    let mut rng = SplitMix64::new(0xA11CE);
    for trial in 0..12 {
        let l = 1 + (trial % 3); // up to 3 here; l = 4 runs in acceptance
        let n = 1 + (trial % 3);
        let loss = if trial % 2 == 0 {
            Loss::Hinge
        } else {
            Loss::Absolute
        };
        let problem = random_small_problem(&mut rng, l, n, loss);
        let c = uniform(&mut rng, 0.1, 2.0);
        let sol = solve_dual(
            &problem,
            c,
            None,
            &FixedAssignments::none(l),
            1e-10,
            200_000,
        )
        .unwrap();
        assert!(sol.converged);
        let m = match loss {
            Loss::Hinge => 1000,
            Loss::Absolute => 2000,
        };
        let lattice = grid_search_dual_min(&problem, c, m);
        assert!(
            (sol.objective - lattice).abs() <= 1e-4,
            "trial {trial}: solver {} vs lattice {}",
            sol.objective,
            lattice
        );
        // the lattice is a subset of the box, so its minimum cannot beat
        // the true optimum by more than solver tolerance
        assert!(lattice >= sol.objective - 1e-8);
    }
}

#[test]
fn dome_closed_form_matches_brute_force_sample() {
    let mut rng = SplitMix64::new(0xD03E);
    for trial in 0..40 {
        let n = 2 + (trial % 2);
        let region = random_dome_region(&mut rng, n, true);
        let v: Vec<f64> = (0..n).map(|_| uniform(&mut rng, -2.0, 2.0)).collect();
        let closed = dome_min(&v, &region);
        let brute = dome_min_brute(&v, &region);
        assert!(
            (closed - brute).abs() <= 1e-5,
            "trial {trial} (n={n}): closed {closed} vs brute {brute}"
        );
    }
}

#[test]
fn dome_bounds_contain_sampled_feasible_points() {
    let mut rng = SplitMix64::new(0xB0B);
    for _ in 0..50 {
        let n = 1 + (rng.next_u64() % 3) as usize;
        let region = random_dome_region(&mut rng, n, true);
        let v: Vec<f64> = (0..n).map(|_| uniform(&mut rng, -2.0, 2.0)).collect();
        let lo = dome_min(&v, &region);
        let hi = dome_max(&v, &region);
        assert!(lo <= hi + 1e-12);
        let mut sampled = 0;
        let mut attempts = 0;
        while sampled < 1000 && attempts < 100_000 {
            attempts += 1;
            // rejection-sample the ball, then filter by the half-space
            let w: Vec<f64> = (0..n)
                .map(|i| region.o()[i] + region.r() * uniform(&mut rng, -1.0, 1.0))
                .collect();
            if region.contains(&w, 0.0) {
                sampled += 1;
                let s = dot(&v, &w);
                assert!(
                    s >= lo - 1e-9 && s <= hi + 1e-9,
                    "sampled value {s} outside [{lo}, {hi}]"
                );
            }
        }
        assert!(sampled > 0, "region too thin to sample");
    }
}

#[test]
fn essnsv_closed_forms_match_generic_dome_sample() {
    let mut rng = SplitMix64::new(0xE55);
    let mut checked = 0;
    for _ in 0..50 {
        let n = 2 + (rng.next_u64() % 2) as usize;
        // random state with ⟨w_sa, ŵ⟩ ≥ ‖w_sa‖² so the region is nonempty,
        // mirroring what solved path states satisfy by the variational
        // inequality
        let w_sa: Vec<f64> = (0..n).map(|_| uniform(&mut rng, -1.5, 1.5)).collect();
        let wsa_norm2 = dot(&w_sa, &w_sa);
        if wsa_norm2 < 1e-3 {
            continue;
        }
        let stretch = uniform(&mut rng, 1.0, 2.5);
        let mut w_hat: Vec<f64> = w_sa.iter().map(|x| stretch * x).collect();
        for x in &mut w_hat {
            *x += uniform(&mut rng, -0.2, 0.2);
        }
        if dot(&w_sa, &w_hat) < wsa_norm2 {
            continue;
        }
        let state = SPathState {
            rho: -wsa_norm2 + 0.5 * dot(&w_sa, &w_hat),
            s_a: 1.0,
            s_b: 0.5,
            w_sa,
            w_hat_sb: w_hat,
        };
        let region = region_essnsv(&state).unwrap();
        for _ in 0..4 {
            let xbar: Vec<f64> = (0..n).map(|_| uniform(&mut rng, -2.0, 2.0)).collect();
            let (lo, hi) = essnsv_bounds(&state, &xbar).unwrap();
            assert!((lo - dome_min(&xbar, &region)).abs() <= 1e-9);
            assert!((hi - dome_max(&xbar, &region)).abs() <= 1e-9);
            checked += 1;
        }
    }
    assert!(checked >= 100, "only {checked} states checked");
}
