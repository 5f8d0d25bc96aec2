use excited_vdw::config::{Axis, Scale};
use excited_vdw::oracle::relative_gap;
use excited_vdw::propagator::{dyadic, Branch};
use excited_vdw::response::permittivity_imag_axis;
use excited_vdw::*;
use proptest::prelude::*;

fn atom(omega: f64, gamma: f64, d2: f64) -> TwoLevelAtom {
    TwoLevelAtom::new(omega, gamma, d2).unwrap()
}

fn state() -> impl Strategy<Value = AtomState> {
    prop_oneof![Just(AtomState::Ground), Just(AtomState::Excited)]
}

prop_compose! {
    fn pair()(wb in 0.5..2.0f64, ratio in 1e-3..0.2f64, detune in -0.5..0.5f64,
              da in 0.5..2.0f64, db in 0.5..2.0f64, sa in state(), sb in state())
              -> PairConfiguration {
        PairConfiguration::new(atom(wb * (1.0 + detune), 0.0, da), sa, atom(wb, ratio * wb, db), sb)
    }
}

proptest! {
    #[test]
    fn pair_antisymmetry(cfg in pair(), r in 0.1..10.0f64) {
        use AtomState::{Excited as E, Ground as G};
        let s = |a, b| pair_closed_nearzone(&cfg.with_states(a, b), r).unwrap();
        prop_assert_eq!(s(E, G).shift, -s(G, E).shift);
        prop_assert_eq!(s(E, E).shift, -s(G, G).shift);
        prop_assert_eq!(s(E, G).half_width, s(G, E).half_width);
        prop_assert!(s(E, G).half_width >= 0.0 && s(G, G).half_width >= 0.0);
    }

    #[test]
    fn pair_inverse_sixth_power(cfg in pair(), r in 0.1..10.0f64) {
        let near = pair_closed_nearzone(&cfg, r).unwrap().shift;
        let far = pair_closed_nearzone(&cfg, 2.0 * r).unwrap().shift;
        prop_assert!(relative_gap(far * 64.0, near) < 1e-13);
    }

    #[test]
    fn propagator_even_and_symmetric(w in 0.01..5.0f64, x in -2.0..2.0f64, y in -2.0..2.0f64, z in 0.1..2.0f64) {
        let plus = dyadic(w, [x, y, z], Branch::Forward).unwrap();
        let minus = dyadic(-w, [x, y, z], Branch::Forward).unwrap();
        let back = dyadic(w, [-x, -y, -z], Branch::Forward).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                prop_assert_eq!(plus.m[i][j], minus.m[i][j]);
                prop_assert!((plus.m[i][j] - plus.m[j][i]).norm() <= 1e-14 * plus.m[i][j].norm().max(1.0));
                prop_assert!((plus.m[i][j] - back.m[i][j]).norm() <= 1e-12 * plus.m[i][j].norm().max(1.0));
            }
        }
    }

    #[test]
    fn conventional_response_is_causal(w in 0.1..3.0f64, gamma in 0.0..0.5f64, x in -5.0..5.0f64, st in state()) {
        let a = atom(w, gamma, 1.0);
        let pos = polarizability(&a, st, ResponseKind::Conventional, x);
        let neg = polarizability(&a, st, ResponseKind::Conventional, -x);
        if let (Ok(p), Ok(n)) = (pos, neg) {
            prop_assert!((p.value() - n.value().conj()).norm() <= 1e-12 * p.value().norm().max(1.0));
        }
    }

    #[test]
    fn kinds_coincide_without_width(w in 0.1..3.0f64, x in -5.0..5.0f64, st in state()) {
        let a = atom(w, 0.0, 1.0);
        if let Ok(c) = polarizability(&a, st, ResponseKind::Coherent, x) {
            let v = polarizability(&a, st, ResponseKind::Conventional, x).unwrap();
            prop_assert_eq!(c, v);
        }
    }

    #[test]
    fn imaginary_axis_permittivity_decreases(w in 0.1..3.0f64, gamma in 0.0..0.5f64, n in 0.01..2.0f64, u in 0.0..10.0f64) {
        let m = MediumState::cold(atom(w, gamma, 1.0), n).unwrap();
        let e0 = permittivity_imag_axis(&m, ResponseKind::Conventional, u).unwrap().re();
        let e1 = permittivity_imag_axis(&m, ResponseKind::Conventional, u + 0.1).unwrap().re();
        prop_assert!(e0 > e1 && e1 > 1.0);
    }

    #[test]
    fn pair_quadrature_matches_closed(cfg in pair(), r in 0.1..10.0f64) {
        let c = pair_closed_nearzone(&cfg, r).unwrap();
        let q = pair_quadrature_nearzone(&cfg, r).unwrap();
        prop_assert!(relative_gap(q.shift, c.shift) <= 1e-5);
        prop_assert!(relative_gap(q.half_width, c.half_width) <= 1e-5);
    }

    #[test]
    fn surface_quadrature_matches_closed(cfg in pair(), n_g in 0.0..1.0f64, z0 in 0.1..10.0f64) {
        let medium = MediumState::new(cfg.atom_b, n_g, 1.0 - n_g).unwrap();
        let p = SurfaceProblem::new(cfg.atom_a, cfg.state_a, medium, z0).unwrap();
        prop_assert!(relative_gap(surface_potential_spectral(&p).unwrap(), surface_potential_qed(&p)) <= 1e-5);
    }

    #[test]
    fn cold_media_agree_exactly(wa in 0.5..2.0f64, wb in 0.5..2.0f64, ratio in 1e-3..0.2f64,
                                na in 0.1..3.0f64, nb in 0.1..3.0f64, l in 0.1..10.0f64) {
        let p = SlabProblem::new(
            MediumState::cold(atom(wa, 0.0, 1.0), na).unwrap(),
            MediumState::cold(atom(wb, ratio * wb, 1.0), nb).unwrap(),
            l,
        ).unwrap();
        let f = media_force(&p).unwrap();
        prop_assert_eq!(f.qed, f.lifshitz);
        prop_assert!(f.qed > 0.0);
    }

    #[test]
    fn populations_are_conserved(w in 0.1..3.0f64, n in 0.01..10.0f64, t in 1e-3..1e3f64) {
        let m = boltzmann_populations(atom(w, 0.0, 1.0), n, t).unwrap();
        prop_assert!(relative_gap(m.n_g() + m.n_e(), n) < 1e-14);
        prop_assert!(m.n_e() <= m.n_g());
    }

    #[test]
    fn sharp_lifshitz_quadrature_is_exact(wa in 0.5..2.0f64, wb in 0.5..2.0f64, l in 0.5..2.0f64) {
        let p = SlabProblem::new(
            MediumState::cold(atom(wa, 0.0, 1.0), 1.0).unwrap(),
            MediumState::cold(atom(wb, 0.0, 1.0), 1.0).unwrap(),
            l,
        ).unwrap();
        let q = media_force_lifshitz_quadrature(&p).unwrap();
        prop_assert!(relative_gap(q, media_force(&p).unwrap().lifshitz) < 1e-9);
    }

    #[test]
    fn sweep_values_ascend(min in 0.01..1.0f64, span in 0.01..10.0f64, points in 2usize..300, log in any::<bool>()) {
        let scale = if log { Scale::Log } else { Scale::Lin };
        let s = SweepAxis::new(Axis::OmegaA, min, min + span, points, scale).unwrap();
        let v = s.values();
        prop_assert_eq!(v.len(), points);
        prop_assert_eq!(v[0], min);
        prop_assert_eq!(v[points - 1], min + span);
        prop_assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn config_round_trips(cfg in pair(), r in 0.1..10.0f64) {
        let text = serde_json::json!({
            "problem": "pair",
            "atom_a": cfg.atom_a,
            "atom_b": cfg.atom_b,
            "state_a": cfg.state_a,
            "state_b": cfg.state_b,
            "geometry": r,
        }).to_string();
        let parsed = parse_config(&text).unwrap();
        prop_assert_eq!(parse_config(&parsed.to_json()).unwrap(), parsed.clone());
        prop_assert_eq!(parsed.pair_configuration(), cfg);
    }
}
