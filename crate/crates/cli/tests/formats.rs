use proptest::prelude::*;
use sgcloc::export::{map_from_rows, read_csv, write_csv};
use sgcloc::{parse_config, Output, RunConfig};
use sgcloc_core::{GridSpec, LocalizationMap};

fn config_strategy() -> impl Strategy<Value = RunConfig> {
    (
        (0.1f64..5.0, 0.1f64..5.0, 1e-6f64..1.0, -50.0f64..50.0, -50.0f64..50.0, 0.0f64..6.3),
        (0.0f64..30.0, 0.1f64..4.0, 0.1f64..4.0, -3.2f64..3.2, -3.2f64..3.2),
        (-2.0f64..-0.01, 0.01f64..2.0, 1usize..60, 1usize..60),
        (0.0f64..1.0, proptest::sample::subsequence(vec![Output::Csv, Output::Heatmap, Output::Peaks, Output::Audit], 0..=4)),
    )
        .prop_map(|((g1, g2, op, dp, dc, th), (o0, k1, k2, dph, eph), (lo, hi, hx, hy), (prom, outputs))| {
            let mut c = RunConfig::default();
            c.base.gamma1 = g1;
            c.base.gamma2 = g2;
            c.base.omega_p = op;
            c.base.delta_p = dp;
            c.base.delta_c = dc;
            c.base.theta = th;
            c.wave.omega0 = o0;
            c.wave.kappa1 = k1;
            c.wave.kappa2 = k2;
            c.wave.delta_phase = dph;
            c.wave.eta_phase = eph;
            c.grid = GridSpec { x_min: lo, x_max: hi, y_min: lo * 0.5, y_max: hi * 1.5, nx: 2 * hx + 1, ny: 2 * hy + 1 };
            c.prominence = prom;
            c.outputs = outputs;
            c
        })
}

proptest! {
    #[test]
    fn echoed_config_parses_back_exactly(cfg in config_strategy()) {
        let again = parse_config(&cfg.echo()).unwrap();
        prop_assert_eq!(again, cfg);
    }

    #[test]
    fn csv_round_trips_to_nine_digits(
        n in 1usize..6,
        half in 0.05f64..2.0,
        scale in -30i32..30,
        seed in any::<u64>(),
    ) {
        let grid = GridSpec::square(half, 2 * n + 1);
        let mag = 10f64.powi(scale);
        let map = LocalizationMap::from_fn(grid, |x, y| mag * ((x * 13.1 + seed as f64 * 1e-9).sin() + y * y - 0.3));
        let mut buf = Vec::new();
        write_csv(&map, &mut buf).unwrap();
        let (g, values) = map_from_rows(&read_csv(&buf[..]).unwrap()).unwrap();
        prop_assert_eq!((g.nx, g.ny), (grid.nx, grid.ny));
        prop_assert!((g.x_max - grid.x_max).abs() <= 5e-9 * grid.x_max.abs());
        for (a, b) in values.iter().zip(&map.values) {
            prop_assert!((a - b).abs() <= 5e-9 * b.abs(), "{} vs {}", a, b);
        }
    }
}
