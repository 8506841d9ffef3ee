//! The verification suites behind `teich-lab verify`: each returns the list
//! of per-identity check records. Randomized checks draw from a seeded
//! generator and report the seed in the enclosing report.

use crate::report::CheckRecord;
use num_complex::Complex64;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use teich_core::fatgraph::{build_standard_spine, torus_spine, EdgeId, FatGraph, HalfEdge};
use teich_core::laurent::Rational;
use teich_core::path::{steps_of_walk, transport_walk, EdgePath};
use teich_core::qalg::QCoeff;
use teich_core::qgeo::{self, TwistGen};
use teich_core::shear::{
    classical_skein_check, flip_shear, geodesic_laurent, geodesic_trace, left_edge_matrix,
    pentagon_map_check, right_edge_matrix, ShearPoint,
};
use teich_core::thurston::{
    self, alphabet_table, cf_expand, classify, cluster_decompose, converge_ratio, run_lengths,
    splitting_sequence, tropical_recursion_residuals, tropical_twist, unzip_sequence, Domain,
    Letter, MeasureTriple, TropicalPoint,
};
use teich_core::wp::{casimir_kernel, face_vectors_span_kernel, poisson_bracket, wp_matrix};

pub fn random_closed_walk(g: &FatGraph, rng: &mut ChaCha8Rng) -> Vec<HalfEdge> {
    loop {
        let start = HalfEdge(rng.gen_range(0..g.half_edge_count()));
        let mut walk = vec![start];
        let mut h = start;
        for _ in 0..200 {
            let exit = if rng.gen_bool(0.5) { g.sigma(h) } else { g.sigma_inv(h) };
            let nh = g.alpha(exit);
            if nh == start && walk.len() >= 2 {
                return walk;
            }
            walk.push(nh);
            h = nh;
        }
    }
}

/// Classical suite: flip invariance of traces, the torus Poisson algebra,
/// Casimir ranks, the trace skein relation, and the classical pentagon map.
pub fn classical_suite(seed: u64) -> Vec<CheckRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    // flip invariance over spines, shears, paths
    let spines = [
        torus_spine(),
        build_standard_spine(2, 1).unwrap(),
        build_standard_spine(1, 2).unwrap(),
        build_standard_spine(0, 3).unwrap(),
    ];
    let mut worst: f64 = 0.0;
    for g in &spines {
        let flippable: Vec<EdgeId> =
            (0..g.edge_count()).map(EdgeId).filter(|&e| g.is_flippable(e)).collect();
        for _ in 0..25 {
            let s = ShearPoint::new((0..g.edge_count()).map(|_| rng.gen_range(-2.0..2.0)).collect());
            let e = *flippable.choose(&mut rng).unwrap();
            let (g2, s2) = flip_shear(g, &s, e).unwrap();
            for _ in 0..10 {
                let walk = random_closed_walk(g, &mut rng);
                if walk.iter().all(|&h| g.edge_of(h) == e) {
                    continue;
                }
                let w2 = transport_walk(g, &g2, e, &walk).unwrap();
                let p1 = EdgePath::new(steps_of_walk(g, &walk).unwrap()).unwrap();
                let p2 = EdgePath::new(steps_of_walk(&g2, &w2).unwrap()).unwrap();
                let t1 = geodesic_trace(g, &p1, &s).unwrap();
                let t2 = geodesic_trace(&g2, &p2, &s2).unwrap();
                worst = worst.max((t1 - t2).abs() / t1.abs().max(1.0));
            }
        }
    }
    out.push(
        CheckRecord::numeric(
            "flip-trace-invariance",
            "|tr P| invariant under coordinate flips with path transport",
            worst,
            1e-9,
        )
        .with_params(format!("seed={seed}, 4 spines x 25 shears x 10 paths")),
    );

    // torus bracket closure, exact
    {
        let g = torus_spine();
        let b = wp_matrix(&g);
        let gx = geodesic_laurent(&g, &teich_core::path::slope_path(&g, 1, 0).unwrap());
        let gy = geodesic_laurent(&g, &teich_core::path::slope_path(&g, 0, 1).unwrap());
        let gz = {
            // gamma_Z traverses X and Y once each
            let x = g.edge_by_label("X").unwrap();
            let y = g.edge_by_label("Y").unwrap();
            use teich_core::path::{Step, Turn};
            let p = EdgePath::new(vec![
                Step { edge: x, turn: Turn::Left },
                Step { edge: y, turn: Turn::Right },
            ])
            .unwrap();
            geodesic_laurent(&g, &p)
        };
        let half = Rational::new(1, 2);
        let ok1 = poisson_bracket(&gx, &gy, &b) == gx.mul(&gy).scale(half).sub(&gz);
        let ok2 = poisson_bracket(&gy, &gz, &b) == gy.mul(&gz).scale(half).sub(&gx);
        let ok3 = poisson_bracket(&gz, &gx, &b) == gz.mul(&gx).scale(half).sub(&gy);
        out.push(CheckRecord::exact(
            "torus-bracket-closure",
            "{G_X, G_Y} = G_X G_Y / 2 - G_Z and cyclic permutations",
            ok1 && ok2 && ok3,
        ));
    }

    // Casimir ranks over the spine family
    {
        let mut ok = true;
        for genus in 0..=3usize {
            for holes in 1..=3usize {
                if !(genus == 1 && holes == 1) && genus + holes < 3 {
                    continue;
                }
                let g = build_standard_spine(genus, holes).unwrap();
                let b = wp_matrix(&g);
                let (rank, kernel) = casimir_kernel(&b);
                ok &= rank == 6 * genus + 2 * holes - 6;
                ok &= kernel.len() == holes;
                ok &= face_vectors_span_kernel(&g, &b);
            }
        }
        out.push(CheckRecord::exact(
            "casimir-rank",
            "rank B = 6g - 6 + 2s; kernel spanned by face vectors",
            ok,
        ));
    }

    // trace skein relation on random products
    {
        let mut worst: f64 = 0.0;
        for _ in 0..200 {
            let a = right_edge_matrix(rng.gen_range(-2.0..2.0))
                .mul(&left_edge_matrix(rng.gen_range(-2.0..2.0)));
            let b = left_edge_matrix(rng.gen_range(-2.0..2.0))
                .mul(&right_edge_matrix(rng.gen_range(-2.0..2.0)));
            worst = worst.max(classical_skein_check(&a, &b).unwrap());
        }
        out.push(CheckRecord::numeric(
            "classical-skein",
            "tr(AB) + tr(AB^{-1}) - tr A tr B = 0 on SL2",
            worst,
            1e-10,
        ));
    }

    // classical pentagon map
    {
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let x = rng.gen_range(-4.0..4.0);
            let y = rng.gen_range(-4.0..4.0);
            worst = worst.max(pentagon_map_check(x, y));
        }
        out.push(CheckRecord::numeric(
            "pentagon-map",
            "five-fold flip iteration returns all seven coordinates",
            worst,
            1e-9,
        ));
    }

    out
}

/// Quantum suite: the torus operator identities and trace recursions.
pub fn quantum_suite(seed: u64) -> Vec<CheckRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let g = qgeo::torus_generators();
    let xi = QCoeff::xi();

    let so3 = g.gx.q_commutator(&g.gy, 2).unwrap() == g.gz.scale(&xi)
        && g.gy.q_commutator(&g.gz, 2).unwrap() == g.gx.scale(&xi)
        && g.gz.q_commutator(&g.gx, 2).unwrap() == g.gy.scale(&xi);
    out.push(CheckRecord::exact("soq3", "q-commutators of the generator triple", so3));

    let turpr = {
        let a = g.gx.mul(&g.gy).unwrap()
            == g.tgz.scale(&QCoeff::q_pow(-2)).add(&g.gz.scale(&QCoeff::q_pow(2))).unwrap();
        let b = g.gy.mul(&g.gx).unwrap()
            == g.tgz.scale(&QCoeff::q_pow(2)).add(&g.gz.scale(&QCoeff::q_pow(-2))).unwrap();
        a && b
    };
    out.push(CheckRecord::exact(
        "product-rule",
        "G_X G_Y resolves into q^{∓1/2}-weighted curves (both orders)",
        turpr,
    ));

    let tgz_ok = {
        // displayed five-term form with doubled middle coefficient
        let mid = g.tgz.coeff(&[2, -2, 0]);
        let ones = [[-2, -2, -4], [2, -2, -4], [2, -2, 4], [2, 2, 4]]
            .iter()
            .all(|u| g.tgz.coeff(&u[..]) == QCoeff::one());
        mid == QCoeff::q_pow(4).add(&QCoeff::q_pow(-4)) && ones && g.tgz.term_count() == 5
    };
    out.push(CheckRecord::exact(
        "flip-image-coefficients",
        "flip image of G_Z has unit outer and q+q^{-1} middle coefficients",
        tgz_ok,
    ));

    let m = qgeo::markov_element(&g);
    let markov = [&g.gx, &g.gy, &g.gz]
        .iter()
        .all(|x| m.mul(x).unwrap().sub(&x.mul(&m).unwrap()).unwrap().is_zero());
    out.push(CheckRecord::exact("markov-central", "the Markov element is central", markov));

    // Chebyshev powers from word traces
    let cheb = {
        let spine = torus_spine();
        let w = teich_core::path::slope_block_word(1, 0).unwrap();
        let mut ww = w.clone();
        ww.extend_from_slice(&w);
        let steps = teich_core::path::block_word_to_steps(&spine, &ww).unwrap();
        let raw = qgeo::q_trace(&qgeo::q_path_product(&spine, &qgeo::QWord::geodesic(steps)).unwrap())
            .unwrap();
        let g2 = qgeo::hermitized(&raw).unwrap();
        let ok2 = g2 == qgeo::chebyshev_like(&g.gx, 2).unwrap();
        let g3 = g.gx.mul(&g2).unwrap().sub(&g.gx).unwrap();
        let ok3 = g3 == qgeo::chebyshev_like(&g.gx, 3).unwrap();
        ok2 && ok3
    };
    out.push(CheckRecord::exact(
        "chebyshev-powers",
        "n-fold concatenations satisfy the trace power rule (n = 2, 3)",
        cheb,
    ));

    let herm = {
        let mut ok = g.gx.is_hermitian() && g.gy.is_hermitian() && g.gz.is_hermitian();
        ok &= g.tgz.is_hermitian();
        for m1 in 1..=5i64 {
            ok &= qgeo::curve_trace(m1, 1).unwrap().is_hermitian();
        }
        ok
    };
    out.push(CheckRecord::exact("hermitian-traces", "quantum geodesics are self-adjoint", herm));

    let cont = qgeo::cont_residuals(6, 4).unwrap();
    let cont_ok = cont.rec_left.iter().all(|x| x.is_zero())
        && cont.rec_right.iter().all(|x| x.is_zero())
        && cont.closed_left.iter().all(|x| x.is_zero())
        && cont.closed_right.iter().all(|x| x.is_zero());
    out.push(CheckRecord::exact(
        "trace-recursions",
        "two-sided recursions (m ≤ 6) and closed forms (m ≤ 4) for T(m,1)",
        cont_ok,
    ));

    let (diff, rhs) = qgeo::cont7_certificate().unwrap();
    out.push(CheckRecord::exact(
        "positivity-certificate",
        "the certificate difference reduces to its explicit positive form",
        diff == rhs,
    ));
    let mut min_val = f64::INFINITY;
    for _ in 0..1000 {
        let z = [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)];
        let v = diff.evaluate(Complex64::new(1.0, 0.0), &z);
        min_val = min_val.min(v.re);
    }
    out.push(
        CheckRecord::numeric(
            "positivity-numeric",
            "certificate nonnegative at q = 1 over random real points",
            (-min_val).max(0.0),
            1e-10,
        )
        .with_params(format!("seed={seed}, 1000 points in [-3,3]^3")),
    );

    // trace equality along continued-fraction words
    let cf8 = {
        let mut ok = true;
        for cf in [&[1u32, 1, 2][..], &[2, 3], &[1, 2, 1]] {
            let (l, lt) = teich_core::path::cf_block_words(cf).unwrap();
            for n in 1..l.len() {
                ok &= qgeo::block_word_trace(&l[n]).unwrap()
                    == qgeo::block_word_trace(&lt[n]).unwrap();
            }
        }
        ok
    };
    let cf9 = {
        let mut ok = true;
        for cf in [&[1u32, 1, 2][..], &[2, 1, 3], &[1, 2, 2]] {
            let (r1, r2) = qgeo::cf9_residuals(cf).unwrap();
            ok &= r1.is_zero() && r2.is_zero();
        }
        ok
    };
    out.push(CheckRecord::exact(
        "word-bracket-resolutions",
        "q-commutators of consecutive word traces select the two skein resolutions",
        cf9,
    ));

    out.push(CheckRecord::exact(
        "word-trace-equality",
        "the swapped-prefix words carry the same quantum trace",
        cf8,
    ));

    // naturality of the twist substitutions
    let mut nat_ok = true;
    for (mx, my) in [(1u64, 1u64), (2, 1), (1, 2), (3, 2), (5, 3), (5, 1), (4, 3)] {
        if mx + my > 8 {
            continue;
        }
        nat_ok &= qgeo::naturality_check(mx, my).unwrap();
    }
    out.push(CheckRecord::exact(
        "twist-naturality",
        "unzipping twists act naturally on quantum traces",
        nat_ok,
    ));

    // improved-ordering flip identities in the classical limit
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let v: Vec<f64> = (0..5).map(|_| rng.gen_range(-2.0..2.0)).collect();
        for case in 1..=3u8 {
            worst = worst.max(qgeo::flip_identity_residual(case, v[0], v[1], v[2], v[3], v[4]));
        }
        worst = worst.max(qgeo::flip_coincidence_residual(1, v[0], v[4]));
        worst = worst.max(qgeo::flip_coincidence_residual(2, v[0], v[4]));
        worst = worst.max(qgeo::flip_coincidence_residual(3, v[0], v[4]));
        worst = worst.max(qgeo::helper_identity_residual(1, v[0], v[2], v[4]));
        worst = worst.max(qgeo::helper_identity_residual(2, v[0], v[2], v[4]));
    }
    out.push(CheckRecord::numeric(
        "flip-word-identities",
        "local path products match across a flip at ħ = 0, with coincidences",
        worst,
        1e-10,
    ));

    out
}

/// Dilogarithm suite: functional relations, asymptotics, duality, and the
/// finite pentagon.
pub fn dilog_suite(_seed: u64) -> Vec<CheckRecord> {
    use teich_core::dilog::{
        duality_check, pentagon_finite, phi_hbar, shift_relation_residuals, CyclicRep,
        DilogParams,
    };
    let mut out = Vec::new();

    let mut worst: f64 = 0.0;
    for hbar in [1.0 / 3.0, 0.3, 1.0] {
        let p = DilogParams::new(hbar).unwrap();
        for i in 0..=40 {
            let z = -10.0 + 0.5 * i as f64;
            let a = phi_hbar(z, &p).unwrap();
            let b = phi_hbar(-z, &p).unwrap();
            worst = worst.max((a - b - z).abs());
        }
    }
    out.push(CheckRecord::numeric(
        "odd-part-relation",
        "phi(z) - phi(-z) = z on a 41-point grid, three couplings",
        worst,
        1e-7,
    ));

    let mut worst: f64 = 0.0;
    for hbar in [1.0 / 3.0, 0.3, 1.0] {
        let p = DilogParams::new(hbar).unwrap();
        for i in 0..14 {
            let z = -6.5 + i as f64;
            let (r1, r2) = shift_relation_residuals(z, &p).unwrap();
            worst = worst.max(r1).max(r2);
        }
    }
    out.push(CheckRecord::numeric(
        "shift-relations",
        "both imaginary-shift difference relations of phi",
        worst,
        1e-7,
    ));

    let mut worst: f64 = 0.0;
    for hbar in [1.0 / 3.0, 0.3, 1.0] {
        let p = DilogParams::new(hbar).unwrap();
        worst = worst.max((phi_hbar(25.0, &p).unwrap() - 25.0).abs());
        worst = worst.max(phi_hbar(-25.0, &p).unwrap().abs());
    }
    out.push(CheckRecord::numeric(
        "asymptotics",
        "phi(z) ~ (z + |z|)/2 at |z| = 25",
        worst,
        1e-3,
    ));

    let mut worst: f64 = 0.0;
    for (z, h) in [(0.7, 2.0), (-1.3, 0.5), (0.4, 3.0), (1.9, 1.0)] {
        worst = worst.max(duality_check(z, h).unwrap());
    }
    out.push(CheckRecord::numeric("self-duality", "phi^h(z)/h = phi^{1/h}(z/h)", worst, 1e-7));

    let p = DilogParams::new(0.01).unwrap();
    let v = phi_hbar(0.5, &p).unwrap();
    out.push(CheckRecord::numeric(
        "classical-limit",
        "phi^h approaches log(1 + e^z) as h -> 0",
        (v - teich_core::shear::phi(0.5)).abs(),
        0.05,
    ));

    for (m, n) in [(1u32, 3u32), (3, 5)] {
        let rep = CyclicRep::new(m, n).unwrap();
        let mut worst: f64 = 0.0;
        let mut scalar_dev: f64 = 0.0;
        for u in [0.5, 1.0, 2.0] {
            for v in [0.5, 1.0, 2.0] {
                let r = pentagon_finite(u, v, &rep).unwrap();
                scalar_dev = scalar_dev.max(r.deviation_scalar);
                worst = worst.max(r.deviation_recorded.unwrap());
            }
        }
        out.push(CheckRecord::numeric(
            &format!("pentagon-{m}-{n}"),
            "five-term cyclic product equals the recorded constant times 1",
            worst.max(scalar_dev),
            1e-8,
        ));
    }

    out
}

/// Thurston suite: continued-fraction equivalences, tropical dynamics, and
/// proper-length convergence.
pub fn thurston_suite(seed: u64) -> Vec<CheckRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    // three-way oracle: splitting runs = Euclidean quotients = unzip counts
    {
        let mut ok = true;
        for m1 in 2..=50u64 {
            for m2 in 1..m1 {
                if num_integer_gcd(m1, m2) != 1 {
                    continue;
                }
                let cf = cf_expand(m1, m2).unwrap();
                let (w, coll) = splitting_sequence(m2 as f64, m1 as f64, 500);
                ok &= coll && run_lengths(&w) == cf;
                let t = MeasureTriple::new(m1, m2, m1 + m2).unwrap();
                let (runs, _) = unzip_sequence(&t).unwrap();
                let counts: Vec<u32> = runs.iter().map(|r| r.count).collect();
                ok &= counts == cf;
            }
        }
        out.push(CheckRecord::exact(
            "cf-splitting-unzip",
            "splitting runs, Euclidean quotients, and twist counts agree (m1 ≤ 50)",
            ok,
        ));
    }

    // tropical dynamics: no return to the third domain
    {
        let mut ok = true;
        for _ in 0..10_000 {
            let mut p = TropicalPoint::from_ints(rng.gen_range(-50..50), rng.gen_range(-50..50));
            let mut entered = false;
            for _ in 0..50 {
                let gen = if rng.gen_bool(0.5) { TwistGen::X } else { TwistGen::Y };
                p = tropical_twist(&p, gen);
                let inside = matches!(classify(&p), Domain::I | Domain::II);
                if entered && !inside {
                    ok = false;
                }
                entered = entered || inside;
            }
        }
        out.push(CheckRecord::exact(
            "tropical-absorbing",
            "once in domains I ∪ II the dynamics never leaves",
            ok,
        ));
    }

    // exact tropical recursions
    {
        let mut ok = true;
        for _ in 0..50 {
            let p = TropicalPoint::from_ints(rng.gen_range(1..20), rng.gen_range(0..20));
            let cf: Vec<u32> = (0..6).map(|_| rng.gen_range(1..4)).collect();
            let r = tropical_recursion_residuals(&p, &cf).unwrap();
            ok &= r.iter().all(|x| num_traits::Zero::is_zero(x));
        }
        out.push(CheckRecord::exact(
            "tropical-length-recursion",
            "stage lengths obey the two-term quotient recursion exactly",
            ok,
        ));
    }

    // convergence of proper/graph length ratios
    {
        let g = torus_spine();
        let mut ok = true;
        let mut last_gap: f64 = 0.0;
        for trial in 0..20 {
            let s = if trial == 0 {
                ShearPoint::zeros(3)
            } else {
                ShearPoint::new((0..3).map(|_| rng.gen_range(-1.5..1.5)).collect())
            };
            let cf: Vec<u32> = if trial < 10 {
                thurston::golden_cf(15)
            } else {
                (0..15).map(|_| rng.gen_range(1..4)).collect()
            };
            let rows = converge_ratio(&g, &s, &cf, 15, [1.0, 1.0, 1.0]).unwrap();
            let gaps: Vec<f64> =
                rows.windows(2).map(|w| (w[1].ratio - w[0].ratio).abs()).collect();
            for k in 4..gaps.len() {
                ok &= gaps[k] <= gaps[k - 1] + 1e-15;
            }
            last_gap = last_gap.max(*gaps.last().unwrap());
        }
        out.push(CheckRecord::exact(
            "ratio-cauchy",
            "length ratios are Cauchy with shrinking increments",
            ok,
        ));
        out.push(CheckRecord::numeric(
            "ratio-final-gap",
            "last increment below 1e-3 by depth 15",
            last_gap,
            1e-3,
        ));
    }

    // long-word trace estimate with a fitted constant on held-out depths
    {
        let g = torus_spine();
        let mut ok = true;
        for trial in 0..5 {
            let s = ShearPoint::new((0..3).map(|_| rng.gen_range(-1.0..1.0)).collect());
            let cf: Vec<u32> = if trial == 0 {
                thurston::golden_cf(14)
            } else {
                (0..14).map(|_| rng.gen_range(1..4)).collect()
            };
            let data = thurston::appendix_estimate_data(&g, &s, &cf, 5, 8).unwrap();
            // fit C on odd rows, verify on even rows
            let mut c_fit: f64 = 0.0;
            for (k, (lhs, p, q)) in data.iter().enumerate() {
                if k % 2 == 0 {
                    c_fit = c_fit.max(lhs / (p + q) as f64);
                }
            }
            let c_fit = c_fit.max(1e-9) * 1.5;
            for (k, (lhs, p, q)) in data.iter().enumerate() {
                if k % 2 == 1 {
                    ok &= *lhs <= c_fit * (p + q) as f64;
                }
            }
            ok &= thurston::count_ratio_matches_cf(&cf, 5, 8);
        }
        out.push(CheckRecord::exact(
            "long-word-estimate",
            "trace defect bounded linearly in the word counts; count ratio matches the quotient tail",
            ok,
        ));
    }

    // letter calculus
    {
        use Letter::*;
        let t = alphabet_table();
        let expect: [[Option<Letter>; 4]; 4] = [
            [Some(A), None, Some(D), None],
            [Some(P), Some(B), Some(B), Some(P)],
            [Some(A), Some(D), Some(D), Some(A)],
            [Some(P), None, Some(B), None],
        ];
        out.push(CheckRecord::exact(
            "letter-table",
            "the 4×4 letter multiplication table",
            t == expect,
        ));
        let mut worst: f64 = 0.0;
        for _ in 0..50 {
            let m = rng.gen_range(1..=5usize);
            let k = rng.gen_range(1..=5usize);
            let l: Vec<f64> = (0..m).map(|_| rng.gen_range(-1.5..1.5)).collect();
            let r: Vec<f64> = (0..k).map(|_| rng.gen_range(-1.5..1.5)).collect();
            worst = worst.max(cluster_decompose(&l, &r));
        }
        out.push(CheckRecord::numeric(
            "cluster-decomposition",
            "left/right cluster products decompose over the letters",
            worst,
            1e-10,
        ));
    }

    out
}

fn num_integer_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_integer_gcd(b, a % b)
    }
}

/// Runs the named suite.
pub fn run_suite(name: &str, seed: u64) -> Option<Vec<CheckRecord>> {
    match name {
        "classical" => Some(classical_suite(seed)),
        "quantum" => Some(quantum_suite(seed)),
        "dilog" => Some(dilog_suite(seed)),
        "thurston" => Some(thurston_suite(seed)),
        "all" => {
            let mut v = classical_suite(seed);
            v.extend(quantum_suite(seed));
            v.extend(dilog_suite(seed));
            v.extend(thurston_suite(seed));
            Some(v)
        }
        _ => None,
    }
}
