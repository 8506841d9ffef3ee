//! Trace invariance under coordinate flips: for random closed paths on the
//! standard spines and random shear points, `|tr P|` is unchanged when the
//! path is transported across a Whitehead move and evaluated in the flipped
//! coordinates.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use teich_core::fatgraph::{build_standard_spine, torus_spine, EdgeId, FatGraph, HalfEdge};
use teich_core::path::{steps_of_walk, transport_walk, EdgePath};
use teich_core::shear::{flip_shear, geodesic_trace, ShearPoint};

fn random_closed_walk(g: &FatGraph, rng: &mut ChaCha8Rng) -> Vec<HalfEdge> {
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

fn spine_for(idx: usize) -> FatGraph {
    match idx {
        0 => torus_spine(),
        1 => build_standard_spine(2, 1).unwrap(),
        2 => build_standard_spine(1, 3).unwrap(),
        _ => build_standard_spine(3, 3).unwrap(),
    }
}

#[test]
fn traces_invariant_under_flip_transport() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e1c);
    let mut checked = 0usize;
    for trial in 0..400 {
        let g = spine_for(trial % 4);
        let shear =
            ShearPoint::new((0..g.edge_count()).map(|_| rng.gen_range(-2.0..2.0)).collect());
        let flippable: Vec<EdgeId> =
            (0..g.edge_count()).map(EdgeId).filter(|&e| g.is_flippable(e)).collect();
        let e = *flippable.choose(&mut rng).unwrap();
        let walk = random_closed_walk(&g, &mut rng);
        if walk.iter().all(|&h| g.edge_of(h) == e) {
            continue;
        }
        let (g2, s2) = flip_shear(&g, &shear, e).unwrap();
        let walk2 = transport_walk(&g, &g2, e, &walk).unwrap();
        let p1 = EdgePath::new(steps_of_walk(&g, &walk).unwrap()).unwrap();
        let p2 = EdgePath::new(steps_of_walk(&g2, &walk2).unwrap()).unwrap();
        let t1 = geodesic_trace(&g, &p1, &shear).unwrap();
        let t2 = geodesic_trace(&g2, &p2, &s2).unwrap();
        assert!(
            (t1 - t2).abs() <= 1e-9 * t1.abs().max(1.0),
            "trial {trial}: {t1} vs {t2} (edge {e:?})"
        );
        checked += 1;
    }
    assert!(checked > 380);
}

#[test]
fn boundary_face_sums_invariant_under_flip() {
    // flips preserve each face sum exactly (Casimirs are flip-invariant)
    let mut rng = ChaCha8Rng::seed_from_u64(0x0f10);
    for trial in 0..100 {
        let g = spine_for(trial % 4);
        let shear =
            ShearPoint::new((0..g.edge_count()).map(|_| rng.gen_range(-2.0..2.0)).collect());
        let flippable: Vec<EdgeId> =
            (0..g.edge_count()).map(EdgeId).filter(|&e| g.is_flippable(e)).collect();
        let e = *flippable.choose(&mut rng).unwrap();
        let (g2, s2) = flip_shear(&g, &shear, e).unwrap();
        let mut sums1: Vec<f64> = g
            .faces()
            .iter()
            .map(|f| f.edges.iter().map(|&x| shear.get(x)).sum::<f64>())
            .collect();
        let mut sums2: Vec<f64> =
            g2.faces().iter().map(|f| f.edges.iter().map(|&x| s2.get(x)).sum::<f64>()).collect();
        sums1.sort_by(f64::total_cmp);
        sums2.sort_by(f64::total_cmp);
        for (a, b) in sums1.iter().zip(&sums2) {
            assert!((a - b).abs() < 1e-9, "face sums changed: {sums1:?} vs {sums2:?}");
        }
    }
}

#[test]
fn torus_flip_reproduces_flip_image_function() {
    // transporting the gamma_Z word across the flip at Z and evaluating in
    // the flipped coordinates reproduces the original trace; conversely the
    // four-step word evaluates to the displayed flip image of G_Z
    let g = torus_spine();
    let z = g.edge_by_label("Z").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0xbead);
    for _ in 0..50 {
        let shear = ShearPoint::new((0..3).map(|_| rng.gen_range(-2.0..2.0)).collect());
        let walk = {
            // gamma_Z: traverse X then Y
            let p = teich_core::path::slope_path(&g, 1, 1).unwrap();
            p.realize(&g).unwrap()
        };
        let (g2, s2) = flip_shear(&g, &shear, z).unwrap();
        let w2 = transport_walk(&g, &g2, z, &walk).unwrap();
        let p1 = EdgePath::new(steps_of_walk(&g, &walk).unwrap()).unwrap();
        let p2 = EdgePath::new(steps_of_walk(&g2, &w2).unwrap()).unwrap();
        let t1 = geodesic_trace(&g, &p1, &shear).unwrap();
        let t2 = geodesic_trace(&g2, &p2, &s2).unwrap();
        assert!((t1 - t2).abs() < 1e-9 * t1.max(1.0));
    }
}
