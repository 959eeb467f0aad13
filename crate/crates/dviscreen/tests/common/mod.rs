//! Shared brute-force oracles and random fixtures for the integration
//! tests. Everything here is deliberately independent of the closed forms
//! it checks: the dual oracle enumerates a lattice, the dome oracle scans
//! parametrized boundaries.

#![allow(dead_code)]

use dviscreen::dataio::rng::SplitMix64;
use dviscreen::problem::{build_problem, Instance, Loss, ProblemData};
use dviscreen::screen::dome::DomeRegion;

use rayon::prelude::*;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

// ---------------------------------------------------------------------
// Exhaustive lattice search for the dual objective
// ---------------------------------------------------------------------

/// Minimum of `(C/2)‖Zᵀθ‖² − ⟨ȳ, θ⟩` over the lattice
/// `θᵢ ∈ {lo + span·j/m : j = 0..=m}`, by full enumeration of all but the
/// last coordinate. The last coordinate of each tuple is minimized exactly
/// in O(1): the objective restricted to it is a convex parabola, so the
/// lattice minimum is at one of the two lattice points bracketing the
/// unconstrained vertex, clamped to the box.
///
/// Supports up to 4 instances; the iteration count is `(m+1)^(l−1)`.
pub fn grid_search_dual_min(problem: &ProblemData, c: f64, m: usize) -> f64 {
    let l = problem.len();
    assert!(l >= 1 && l <= 4, "lattice search supports l in 1..=4");
    let interval = problem.interval();
    let lo = interval.lo;
    let span = interval.hi - interval.lo;

    // pairwise Gram of the rows and the linear term, as fixed arrays
    let mut gram = [[0.0f64; 4]; 4];
    let mut ybar = [0.0f64; 4];
    for i in 0..l {
        ybar[i] = problem.ybar(i);
        for j in 0..l {
            gram[i][j] = dot(problem.z_row(i), problem.z_row(j));
        }
    }
    let c2 = 0.5 * c;
    let grid_point = move |j: usize| lo + span * (j as f64 / m as f64);

    // value of the best lattice choice of the LAST coordinate, given the
    // partial sums of the others: s = ‖u‖², dlast = ⟨u, z_last⟩,
    // lin = Σ ȳᵢθᵢ over fixed coordinates
    let last = l - 1;
    let q_last = c2 * gram[last][last];
    let inner_min = move |s: f64, dlast: f64, lin: f64| -> f64 {
        let a0 = c2 * s - lin;
        let b = 2.0 * c2 * dlast - ybar[last];
        let eval = |t: f64| a0 + t * (b + q_last * t);
        if q_last > 0.0 {
            let t_star = -b / (2.0 * q_last);
            let pos = ((t_star - lo) / span * m as f64).floor();
            let j0 = if pos.is_nan() || pos < 0.0 {
                0
            } else if pos >= m as f64 {
                m
            } else {
                pos as usize
            };
            let f0 = eval(grid_point(j0));
            if j0 < m {
                f0.min(eval(grid_point(j0 + 1)))
            } else {
                f0
            }
        } else {
            // row is zero: objective linear in the last coordinate
            eval(if b < 0.0 {
                grid_point(m)
            } else {
                grid_point(0)
            })
        }
    };

    if l == 1 {
        return inner_min(0.0, 0.0, 0.0);
    }

    // enumerate coordinate 0 in parallel; inner coordinates sequentially
    (0..=m)
        .into_par_iter()
        .map(|j0| {
            let t0 = grid_point(j0);
            let mut best = f64::INFINITY;
            match l {
                2 => {
                    let s = t0 * t0 * gram[0][0];
                    best = inner_min(s, t0 * gram[0][1], t0 * ybar[0]);
                }
                3 => {
                    let mut t1 = grid_point(0);
                    for j1 in 0..=m {
                        if j1 > 0 {
                            t1 = grid_point(j1);
                        }
                        let s = t0 * t0 * gram[0][0]
                            + 2.0 * t0 * t1 * gram[0][1]
                            + t1 * t1 * gram[1][1];
                        let dlast = t0 * gram[0][2] + t1 * gram[1][2];
                        let lin = t0 * ybar[0] + t1 * ybar[1];
                        let f = inner_min(s, dlast, lin);
                        if f < best {
                            best = f;
                        }
                    }
                }
                4 => {
                    for j1 in 0..=m {
                        let t1 = grid_point(j1);
                        // state at (t0, t1, t2 = lo), stepped incrementally in t2
                        let h = span / m as f64;
                        let t2_0 = grid_point(0);
                        let mut s = t0 * t0 * gram[0][0]
                            + 2.0 * t0 * t1 * gram[0][1]
                            + t1 * t1 * gram[1][1]
                            + 2.0 * (t0 * gram[0][2] + t1 * gram[1][2]) * t2_0
                            + t2_0 * t2_0 * gram[2][2];
                        let mut d2 = t0 * gram[0][2] + t1 * gram[1][2] + t2_0 * gram[2][2];
                        let mut dlast = t0 * gram[0][3] + t1 * gram[1][3] + t2_0 * gram[2][3];
                        let mut lin = t0 * ybar[0] + t1 * ybar[1] + t2_0 * ybar[2];
                        let g22 = gram[2][2];
                        let g23 = gram[2][3];
                        let y2 = ybar[2];
                        let mut j2 = 0;
                        loop {
                            let f = inner_min(s, dlast, lin);
                            if f < best {
                                best = f;
                            }
                            if j2 == m {
                                break;
                            }
                            j2 += 1;
                            s += h * (2.0 * d2 + h * g22);
                            d2 += h * g22;
                            dlast += h * g23;
                            lin += h * y2;
                        }
                    }
                }
                _ => unreachable!(),
            }
            best
        })
        .reduce(|| f64::INFINITY, f64::min)
}

// ---------------------------------------------------------------------
// Brute-force dome minimization
// ---------------------------------------------------------------------

fn refine_1d<F: Fn(f64) -> Option<f64>>(eval: F, center: f64, mut step: f64, rounds: usize) -> f64 {
    let mut best_arg = center;
    let mut best = eval(center).unwrap_or(f64::INFINITY);
    for _ in 0..rounds {
        step /= 10.0;
        let mut local_best = best;
        let mut local_arg = best_arg;
        for k in -30..=30 {
            let arg = best_arg + step * k as f64;
            if let Some(v) = eval(arg) {
                if v < local_best {
                    local_best = v;
                    local_arg = arg;
                }
            }
        }
        best = local_best;
        best_arg = local_arg;
    }
    best
}

/// Brute-force minimum of `vᵀw` over a dome in 1, 2, or 3 dimensions, by
/// dense scans of the sphere and of the sphere∩plane circle with local
/// refinement. Resolution is far below the 1e-5 comparison tolerance.
pub fn dome_min_brute(v: &[f64], region: &DomeRegion) -> f64 {
    let n = v.len();
    let o = region.o();
    let r = region.r();
    let u = region.u();
    let d = region.d();
    let u_norm = norm(u);
    let feasible = |w: &[f64]| u_norm == 0.0 || dot(u, w) <= d + 1e-12;

    match n {
        1 => {
            let mut candidates = vec![o[0] - r, o[0] + r];
            if u_norm > 0.0 {
                let plane = d / u[0];
                if (plane - o[0]).abs() <= r {
                    candidates.push(plane);
                }
            }
            candidates
                .into_iter()
                .filter(|&w| feasible(&[w]))
                .map(|w| v[0] * w)
                .fold(f64::INFINITY, f64::min)
        }
        2 => {
            let eval = |angle: f64| {
                let w = [o[0] + r * angle.cos(), o[1] + r * angle.sin()];
                feasible(&w).then(|| dot(v, &w))
            };
            let steps = 6400usize;
            let coarse_step = std::f64::consts::TAU / steps as f64;
            let mut best = f64::INFINITY;
            let mut best_angle = 0.0;
            for k in 0..steps {
                let angle = coarse_step * k as f64;
                if let Some(val) = eval(angle) {
                    if val < best {
                        best = val;
                        best_angle = angle;
                    }
                }
            }
            let refined = refine_1d(eval, best_angle, coarse_step, 6);
            best.min(refined)
        }
        3 => {
            let eval = |polar: f64, azimuth: f64| {
                let w = [
                    o[0] + r * polar.sin() * azimuth.cos(),
                    o[1] + r * polar.sin() * azimuth.sin(),
                    o[2] + r * polar.cos(),
                ];
                feasible(&w).then(|| dot(v, &w))
            };
            let polar_steps = 1300usize;
            let az_steps = 2600usize;
            let dp = std::f64::consts::PI / polar_steps as f64;
            let da = std::f64::consts::TAU / az_steps as f64;
            // trig tables keep the ~3.4M-point coarse scan cheap
            let az_table: Vec<(f64, f64)> =
                (0..az_steps).map(|ka| (da * ka as f64).sin_cos()).collect();
            let (mut best, mut best_p, mut best_a) = (f64::INFINITY, 0.0, 0.0);
            for kp in 0..=polar_steps {
                let polar = dp * kp as f64;
                let (sin_p, cos_p) = polar.sin_cos();
                let w2 = o[2] + r * cos_p;
                for (ka, (sin_a, cos_a)) in az_table.iter().enumerate() {
                    let w = [o[0] + r * sin_p * cos_a, o[1] + r * sin_p * sin_a, w2];
                    if feasible(&w) {
                        let val = dot(v, &w);
                        if val < best {
                            best = val;
                            best_p = polar;
                            best_a = da * ka as f64;
                        }
                    }
                }
            }
            // local 2-d refinement around the best sphere point
            let (mut step_p, mut step_a) = (dp, da);
            for _ in 0..6 {
                step_p /= 10.0;
                step_a /= 10.0;
                let (mut lb, mut lp, mut la) = (best, best_p, best_a);
                for ip in -12..=12 {
                    for ia in -12..=12 {
                        let p = best_p + step_p * ip as f64;
                        let a = best_a + step_a * ia as f64;
                        if let Some(val) = eval(p, a) {
                            if val < lb {
                                lb = val;
                                lp = p;
                                la = a;
                            }
                        }
                    }
                }
                best = lb;
                best_p = lp;
                best_a = la;
            }
            // scan the sphere∩plane circle explicitly; boundary optima sit
            // there and the filtered sphere scan only approaches them
            if u_norm > 0.0 {
                let d_prime = d - dot(u, o);
                let chord2 = r * r - d_prime * d_prime / (u_norm * u_norm);
                if chord2 > 0.0 {
                    let chord = chord2.sqrt();
                    let center: Vec<f64> = (0..3)
                        .map(|i| o[i] + d_prime / (u_norm * u_norm) * u[i])
                        .collect();
                    // orthonormal basis of the plane through `center` normal to u
                    let pick = if u[0].abs() < 0.9 {
                        [1.0, 0.0, 0.0]
                    } else {
                        [0.0, 1.0, 0.0]
                    };
                    let mut e1 = [0.0f64; 3];
                    let cu = dot(&pick, u) / (u_norm * u_norm);
                    for i in 0..3 {
                        e1[i] = pick[i] - cu * u[i];
                    }
                    let e1n = norm(&e1);
                    for x in &mut e1 {
                        *x /= e1n;
                    }
                    let e2 = [
                        (u[1] * e1[2] - u[2] * e1[1]) / u_norm,
                        (u[2] * e1[0] - u[0] * e1[2]) / u_norm,
                        (u[0] * e1[1] - u[1] * e1[0]) / u_norm,
                    ];
                    let eval_circle = |angle: f64| {
                        let w = [
                            center[0] + chord * (angle.cos() * e1[0] + angle.sin() * e2[0]),
                            center[1] + chord * (angle.cos() * e1[1] + angle.sin() * e2[1]),
                            center[2] + chord * (angle.cos() * e1[2] + angle.sin() * e2[2]),
                        ];
                        Some(dot(v, &w))
                    };
                    let steps = 6400usize;
                    let cs = std::f64::consts::TAU / steps as f64;
                    let (mut cb, mut cba) = (f64::INFINITY, 0.0);
                    for k in 0..steps {
                        let angle = cs * k as f64;
                        let val = eval_circle(angle).unwrap();
                        if val < cb {
                            cb = val;
                            cba = angle;
                        }
                    }
                    best = best.min(refine_1d(eval_circle, cba, cs, 6)).min(cb);
                }
            }
            best
        }
        _ => panic!("brute-force dome oracle supports n in 1..=3"),
    }
}

// ---------------------------------------------------------------------
// Random fixtures
// ---------------------------------------------------------------------

pub fn uniform(rng: &mut SplitMix64, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.next_f64()
}

/// Random small problem for the lattice-search comparisons. `l = 4`
/// problems use the `[0, 1]` hinge box to keep the enumeration tractable.
pub fn random_small_problem(rng: &mut SplitMix64, l: usize, n: usize, loss: Loss) -> ProblemData {
    let instances: Vec<Instance> = (0..l)
        .map(|_| {
            let features: Vec<f64> = (0..n).map(|_| uniform(rng, -1.0, 1.0)).collect();
            let label = match loss {
                Loss::Hinge => {
                    if rng.next_f64() < 0.5 {
                        1.0
                    } else {
                        -1.0
                    }
                }
                Loss::Absolute => uniform(rng, -2.0, 2.0),
            };
            Instance::new(features, label)
        })
        .collect();
    build_problem(&instances, loss).unwrap()
}

/// Random feasible dome region with the plane genuinely meeting the ball.
pub fn random_dome_region(rng: &mut SplitMix64, n: usize, allow_zero_u: bool) -> DomeRegion {
    let o: Vec<f64> = (0..n).map(|_| uniform(rng, -1.0, 1.0)).collect();
    let r = uniform(rng, 0.3, 1.5);
    if allow_zero_u && rng.next_f64() < 0.1 {
        return DomeRegion::new(vec![0.0; n], uniform(rng, 0.0, 1.0), o, r).unwrap();
    }
    let u: Vec<f64> = loop {
        let candidate: Vec<f64> = (0..n).map(|_| uniform(rng, -1.0, 1.0)).collect();
        if norm(&candidate) > 0.1 {
            break candidate;
        }
    };
    let frac = uniform(rng, -0.9, 0.9);
    let d = dot(&u, &o) + frac * r * norm(&u);
    DomeRegion::new(u, d, o, r).unwrap()
}

/// Random classification/regression data in general position.
pub fn random_gaussian_problem(
    seed: u64,
    l: usize,
    n: usize,
    loss: Loss,
    separation: f64,
) -> ProblemData {
    use dviscreen::dataio::rng::GaussianSource;
    let mut g = GaussianSource::new(seed);
    let instances: Vec<Instance> = (0..l)
        .map(|i| {
            let positive = i % 2 == 0;
            match loss {
                Loss::Hinge => {
                    let shift = if positive { separation } else { -separation };
                    let features: Vec<f64> = (0..n).map(|_| shift + g.next_normal()).collect();
                    Instance::new(features, if positive { 1.0 } else { -1.0 })
                }
                Loss::Absolute => {
                    let features: Vec<f64> = (0..n).map(|_| g.next_normal()).collect();
                    let y =
                        features.iter().sum::<f64>() / (n as f64).sqrt() + 0.3 * g.next_normal();
                    Instance::new(features, y)
                }
            }
        })
        .collect();
    build_problem(&instances, loss).unwrap()
}
