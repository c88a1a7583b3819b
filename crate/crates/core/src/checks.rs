//! Registry of named verification checks.
//!
//! Each suite returns `CheckResult`s with the tolerance pinned at the value
//! the identity is expected to hold at; `all_checks` is what the CLI's
//! `verify` runs. Anything sampled pseudo-randomly draws from a ChaCha
//! stream seeded by the caller, so two runs with the same seed are
//! byte-identical.

use crate::brm_pipeline::{brm_pair, canonical_brm, phi_from_theta, BrmType, PhiSign};
use crate::cxmat::{c64, phase, CMatrix, C64, I};
use crate::l1_extrema::{
    canonical_extrema_check, l1_profile, spinor_vector_signature, ExtremumKind, Signature,
    DEFAULT_SAMPLES,
};
use crate::report::CheckResult;
use crate::tl_braid::{
    b_type_i, b_type_ii, braid_from_tl, tl_generator, tl_residuals, RootChoice, Sign, TLFamily,
};
use crate::topo_su2::{
    ab_from_alpha, bcs_diagonalize, su2_generators, tl_action_2d, tl_site_operator, topo_basis,
    StateVec,
};
use crate::wigner::{
    big_d, little_d, little_d_closed, little_d_derivative, pi_sparsity, symmetry_half_pi, HalfInt,
    WignerSpec,
};
use crate::ybe::{verify_g_constraint, ybe_grid_scan, SpectralFamily};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

fn alpha_grid(n: usize) -> Vec<f64> {
    (0..n).map(|k| 2.0 * PI * k as f64 / n as f64).collect()
}

type FamilyGrid = Box<dyn Fn(f64) -> Vec<TLFamily>>;

/// Criterion 1: T² = dT and the triples for all three families over a
/// 12-point α grid.
pub fn tl_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let families: [(&str, FamilyGrid); 3] = [
        (
            "type-i",
            Box::new(|a| {
                vec![
                    TLFamily::type_i(a, Sign::Plus),
                    TLFamily::type_i(a, Sign::Minus),
                ]
            }),
        ),
        ("type-ii", Box::new(|a| vec![TLFamily::type_ii(a)])),
        (
            "type-ii-prime",
            Box::new(|a| vec![TLFamily::type_ii_prime(a)]),
        ),
    ];
    for (name, make) in &families {
        let (mut sq, mut tl, mut tr): (f64, f64, f64) = (0.0, 0.0, 0.0);
        for alpha in alpha_grid(12) {
            for fam in make(alpha) {
                let r = tl_residuals(&tl_generator(fam).expect("unimodular q"));
                sq = sq.max(r.square);
                tl = tl.max(r.triple_left);
                tr = tr.max(r.triple_right);
            }
        }
        out.push(CheckResult::new(
            format!("temperley/{name}/square"),
            sq,
            1e-12,
            "max over 12-point alpha grid",
        ));
        out.push(CheckResult::new(
            format!("temperley/{name}/triple-left"),
            tl,
            1e-12,
            "T1 T2 T1 = T1 on three sites",
        ));
        out.push(CheckResult::new(
            format!("temperley/{name}/triple-right"),
            tr,
            1e-12,
            "T2 T1 T2 = T2 on three sites",
        ));
    }
    out
}

/// Criterion 2: 8×8 braid residuals for b_I, b_II and S = 1 + fT.
pub fn braid_suite() -> Vec<CheckResult> {
    let i2 = CMatrix::identity(2);
    let mut out = Vec::new();

    let mut worst: f64 = 0.0;
    for alpha in alpha_grid(12) {
        for eps in [Sign::Plus, Sign::Minus] {
            let b = b_type_i(alpha, eps);
            let pair = crate::tl_braid::BraidPair::new(b.kron(&i2), i2.kron(&b));
            worst = worst.max(pair.braid_residual);
        }
    }
    out.push(CheckResult::new(
        "braid/b-type-i",
        worst,
        1e-12,
        "alpha grid, both epsilon signs",
    ));

    let mut worst: f64 = 0.0;
    for alpha in alpha_grid(12) {
        let b = b_type_ii(c64(1.0, 0.0), phase(alpha));
        let pair = crate::tl_braid::BraidPair::new(b.kron(&i2), i2.kron(&b));
        worst = worst.max(pair.braid_residual);
    }
    out.push(CheckResult::new(
        "braid/b-type-ii",
        worst,
        1e-12,
        "eta grid at q = 1",
    ));

    for (name, make) in [
        (
            "s-type-i",
            Box::new(|a: f64| TLFamily::type_i(a, Sign::Plus)) as Box<dyn Fn(f64) -> TLFamily>,
        ),
        ("s-type-ii", Box::new(TLFamily::type_ii)),
        ("s-type-ii-prime", Box::new(TLFamily::type_ii_prime)),
    ] {
        for (root, root_name) in [
            (RootChoice::Plus, "root-plus"),
            (RootChoice::Minus, "root-minus"),
        ] {
            let mut worst: f64 = 0.0;
            for alpha in alpha_grid(12) {
                let t = tl_generator(make(alpha)).expect("unimodular q");
                worst = worst.max(braid_from_tl(&t, root).braid_residual);
            }
            out.push(CheckResult::new(
                format!("braid/{name}/{root_name}"),
                worst,
                1e-12,
                "S = 1 + fT on three sites",
            ));
        }
    }
    out
}

/// Criterion 3: YBE grids for the 4×4 and 2-dim families plus the scalar
/// G(u) constraint.
pub fn ybe_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();

    let mut worst: f64 = 0.0;
    for alpha in [0.0, 0.37, 2.1] {
        let fam = SpectralFamily::r4_type_i(alpha);
        worst = worst.max(ybe_grid_scan(&fam, -1.2, 1.2, 20).expect("no poles on grid"));
    }
    out.push(CheckResult::new(
        "ybe/r4-type-i",
        worst,
        1e-10,
        "Lorentz composition, 20x20 theta grid",
    ));

    let mut worst: f64 = 0.0;
    for eta in [c64(1.0, 0.0), c64(-1.0, 0.0), phase(PI / 3.0)] {
        let fam = SpectralFamily::r4_type_ii(eta);
        worst = worst.max(ybe_grid_scan(&fam, -1.0, 1.0, 20).expect("no poles"));
    }
    out.push(CheckResult::new(
        "ybe/r4-type-ii",
        worst,
        1e-12,
        "Galileo composition, 20x20 u grid",
    ));

    let mut worst: f64 = 0.0;
    for eps in [1.0, -1.0] {
        let fam = SpectralFamily::a2_type_i(eps);
        worst = worst.max(ybe_grid_scan(&fam, -0.9, 0.9, 20).expect("no poles"));
    }
    out.push(CheckResult::new(
        "ybe/2d-type-i",
        worst,
        1e-10,
        "Lorentz-composed middle argument",
    ));

    let mut worst: f64 = 0.0;
    for gamma in [c64(1.0, 0.0), c64(2.0, 1.0)] {
        let fam = SpectralFamily::a2_type_ii(gamma);
        worst = worst.max(ybe_grid_scan(&fam, -0.45, 0.45, 20).expect("grid avoids gamma"));
    }
    out.push(CheckResult::new(
        "ybe/2d-type-ii",
        worst,
        1e-12,
        "Galileo-composed middle argument",
    ));

    for (name, gamma) in [("gamma-1", c64(1.0, 0.0)), ("gamma-2+i", c64(2.0, 1.0))] {
        let r = verify_g_constraint(gamma, 2.0, 25).expect("grid avoids gamma");
        out.push(CheckResult::new(
            format!("ybe/g-constraint/{name}"),
            r,
            1e-13,
            "scalar Yang-Baxterization constraint at d = 2",
        ));
    }
    out
}

/// Criterion 4: closed forms, unitarity, analytic derivative.
pub fn wigner_suite(seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5747);
    let mut out = Vec::new();

    let mut worst: f64 = 0.0;
    for two_j in [1, 2, 3] {
        for k in 0..100 {
            let theta = -PI + 2.0 * PI * k as f64 / 99.0;
            let j = HalfInt::new(two_j);
            let r = little_d(j, theta)
                .residual(&little_d_closed(j, theta).expect("closed form"))
                .expect("shape");
            worst = worst.max(r);
        }
    }
    out.push(CheckResult::new(
        "wigner/closed-form",
        worst,
        1e-13,
        "2J in {1,2,3}, 100 theta points",
    ));

    let mut worst_u: f64 = 0.0;
    let mut worst_abs: f64 = 0.0;
    for _ in 0..50 {
        let theta = rng.gen_range(-PI..PI);
        let phi = rng.gen_range(-PI..PI);
        for two_j in 1..=8 {
            let j = HalfInt::new(two_j);
            let dd = big_d(WignerSpec {
                two_j: j,
                theta,
                phi,
            });
            worst_u = worst_u.max(dd.unitarity_residual());
            let d = little_d(j, theta);
            for ri in 0..d.rows() {
                for ci in 0..d.cols() {
                    worst_abs = worst_abs.max((dd[(ri, ci)].norm() - d[(ri, ci)].norm()).abs());
                }
            }
        }
    }
    out.push(CheckResult::new(
        "wigner/unitarity",
        worst_u,
        1e-12,
        "2J <= 8, 50 seeded (theta, phi)",
    ));
    out.push(CheckResult::new(
        "wigner/abs-d-equality",
        worst_abs,
        1e-13,
        "|D| = |d| entrywise",
    ));

    let h = 1e-5;
    let mut worst: f64 = 0.0;
    for two_j in 1..=8 {
        let j = HalfInt::new(two_j);
        for k in 0..13 {
            let theta = -3.0 + 6.0 * k as f64 / 12.0;
            let fd = little_d(j, theta + h)
                .sub(&little_d(j, theta - h))
                .expect("shape")
                .scale(c64(0.5 / h, 0.0));
            worst = worst.max(little_d_derivative(j, theta).residual(&fd).expect("shape"));
        }
    }
    out.push(CheckResult::new(
        "wigner/derivative",
        worst,
        1e-6,
        "analytic vs central differences, h = 1e-5",
    ));

    let mut worst: f64 = 0.0;
    for two_j in [1, 4, 8] {
        let j = HalfInt::new(two_j);
        let (t1, t2) = (0.71, -1.18);
        let r = little_d(j, t1)
            .matmul(&little_d(j, t2))
            .expect("shape")
            .residual(&little_d(j, t1 + t2))
            .expect("shape");
        worst = worst.max(r);
    }
    out.push(CheckResult::new(
        "wigner/composition",
        worst,
        1e-12,
        "d(t1) d(t2) = d(t1 + t2)",
    ));
    out
}

/// Criterion 5: the θ = π/2 reflection identities and the θ = π sparsity.
pub fn appendix_c_suite() -> Vec<CheckResult> {
    let (mut wv, mut wd, mut ws): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for two_j in 1..=8 {
        let j = HalfInt::new(two_j);
        for a in 0..=two_j as i64 {
            let (v, d) = symmetry_half_pi(j, a).expect("a in range");
            wv = wv.max(v);
            wd = wd.max(d);
        }
        ws = ws.max(pi_sparsity(j));
    }
    vec![
        CheckResult::new(
            "appxc/symmetry-half-pi/value",
            wv,
            1e-12,
            "all rows, 2J <= 8",
        ),
        CheckResult::new(
            "appxc/symmetry-half-pi/derivative",
            wd,
            1e-12,
            "all rows, 2J <= 8",
        ),
        CheckResult::new(
            "appxc/pi-sparsity",
            ws,
            1e-13,
            "d(pi) anti-diagonal, 2J <= 8",
        ),
    ]
}

fn kind_check(
    name: String,
    profile_kind: Option<ExtremumKind>,
    expected: ExtremumKind,
) -> CheckResult {
    let residual = match profile_kind {
        Some(k) if k == expected => 0.0,
        _ => 1.0,
    };
    CheckResult::new(
        name,
        residual,
        0.5,
        format!("expected {expected:?}, found {profile_kind:?}"),
    )
}

/// Criterion 6: the canonical extremum set and the figure values.
pub fn l1_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for two_j in [1, 2, 3] {
        out.extend(canonical_extrema_check(HalfInt::new(two_j)));
    }

    // Fig. 1: J = 1/2 — max √2 at ±π/2, min 1 at {0, ±π}.
    let p = l1_profile(HalfInt::new(1), HalfInt::new(1), DEFAULT_SAMPLES).expect("valid row");
    for (tag, theta, value, kind) in [
        ("max-at+half-pi", FRAC_PI_2, SQRT_2, ExtremumKind::Max),
        ("max-at-half-pi", -FRAC_PI_2, SQRT_2, ExtremumKind::Max),
        ("min-at-zero", 0.0, 1.0, ExtremumKind::Min),
        ("min-at-pi", PI, 1.0, ExtremumKind::Min),
        ("min-at-minus-pi", -PI, 1.0, ExtremumKind::Min),
    ] {
        let e = p.extremum_near(theta, 1e-6);
        out.push(CheckResult::new(
            format!("l1/fig1/{tag}/value"),
            e.map_or(f64::INFINITY, |e| (e.value - value).abs()),
            1e-9,
            "J=1/2 row M=1/2",
        ));
        out.push(kind_check(
            format!("l1/fig1/{tag}/kind"),
            e.map(|e| e.kind),
            kind,
        ));
    }

    // Fig. 2: J = 1, M = ±1 — max 1 + 1/√2 at ±π/2.
    for two_m in [2, -2] {
        let p =
            l1_profile(HalfInt::new(2), HalfInt::new(two_m), DEFAULT_SAMPLES).expect("valid row");
        let e = p.extremum_near(FRAC_PI_2, 1e-6);
        out.push(CheckResult::new(
            format!("l1/fig2/2m={two_m}/max-value"),
            e.map_or(f64::INFINITY, |e| (e.value - (1.0 + 1.0 / SQRT_2)).abs()),
            1e-9,
            "J=1 outer rows at pi/2",
        ));
        out.push(kind_check(
            format!("l1/fig2/2m={two_m}/kind"),
            e.map(|e| e.kind),
            ExtremumKind::Max,
        ));
    }

    // Fig. 3: J = 1, M = 0 — ±π/2 are local minima of value √2; the global
    // max is √3 at ±arctan√2 (calculus oracle for √2|sin| + |cos|).
    let p = l1_profile(HalfInt::new(2), HalfInt::new(0), DEFAULT_SAMPLES).expect("valid row");
    for (tag, theta) in [("plus", FRAC_PI_2), ("minus", -FRAC_PI_2)] {
        let e = p.extremum_near(theta, 1e-6);
        out.push(CheckResult::new(
            format!("l1/fig3/half-pi-{tag}/value"),
            e.map_or(f64::INFINITY, |e| (e.value - SQRT_2).abs()),
            1e-9,
            "J=1 middle row at +-pi/2",
        ));
        out.push(kind_check(
            format!("l1/fig3/half-pi-{tag}/kind"),
            e.map(|e| e.kind),
            ExtremumKind::Min,
        ));
    }
    let tstar = SQRT_2.atan();
    for (tag, theta) in [("plus", tstar), ("minus", -tstar)] {
        let e = p.extremum_near(theta, 1e-6);
        out.push(CheckResult::new(
            format!("l1/fig3/global-max-{tag}/value"),
            e.map_or(f64::INFINITY, |e| (e.value - 3.0_f64.sqrt()).abs()),
            1e-9,
            "global max sqrt(3) at +-arctan(sqrt 2)",
        ));
        out.push(kind_check(
            format!("l1/fig3/global-max-{tag}/kind"),
            e.map(|e| e.kind),
            ExtremumKind::Max,
        ));
    }

    for (two_j, expected) in [
        (1, Signature::SpinorLike),
        (2, Signature::VectorLike),
        (3, Signature::SpinorLike),
    ] {
        let got = spinor_vector_signature(HalfInt::new(two_j));
        out.push(CheckResult::new(
            format!("l1/signature/2j={two_j}"),
            if got == expected { 0.0 } else { 1.0 },
            0.5,
            format!("expected {expected:?}, found {got:?}"),
        ));
    }
    out
}

/// Criterion 7: the six canonical derived pairs against their target forms.
pub fn brm_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for two_j in [1, 2, 3] {
        for (brm_type, tag) in [
            (BrmType::type_i(), "type-i"),
            (BrmType::type_ii(), "type-ii"),
        ] {
            let derived = canonical_brm(HalfInt::new(two_j), brm_type).expect("supported spin");
            out.push(CheckResult::new(
                format!("brm/canonical/2j={two_j}/{tag}/paper-match"),
                derived.paper_match_residual,
                1e-12,
                format!(
                    "one fitted unit phase [{:.3}, {:.3}]",
                    derived.overall_phase[0], derived.overall_phase[1]
                ),
            ));
            out.push(CheckResult::new(
                format!("brm/canonical/2j={two_j}/{tag}/braid"),
                derived.braid_residual,
                1e-12,
                "ABA = BAB before and after conjugation",
            ));
        }
    }
    out
}

/// Criterion 8: the braid relation along the whole constraint curve at
/// J = 1/2, both φ branches.
pub fn constraint_curve_suite() -> Vec<CheckResult> {
    let mut worst: f64 = 0.0;
    let mut points = 0;
    for k in 0..200 {
        let span = PI - PI / 3.0;
        let theta = if k < 100 {
            -PI + span * (k as f64 + 0.5) / 100.0
        } else {
            PI / 3.0 + span * ((k - 100) as f64 + 0.5) / 100.0
        };
        if phi_from_theta(theta).is_err() {
            continue;
        }
        for sign in [PhiSign::Plus, PhiSign::Minus] {
            let pair = brm_pair(HalfInt::new(1), theta, sign).expect("on the curve");
            worst = worst.max(pair.braid_residual);
            points += 1;
        }
    }
    vec![CheckResult::new(
        "brm/constraint-curve",
        worst,
        1e-12,
        format!("{points} (theta, +-phi) samples on cos(phi) = cos(theta)/(1 - cos(theta))"),
    )]
}

/// Criterion 9: topological basis, 2×2 actions, A/B reproduction, SU(2).
pub fn topo_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let families = |alpha: f64| {
        [
            TLFamily::type_i(alpha, Sign::Plus),
            TLFamily::type_ii(alpha),
        ]
    };

    let mut worst_tl: f64 = 0.0;
    for k in 0..8 {
        let alpha = 2.0 * PI * k as f64 / 8.0;
        for family in families(alpha) {
            let d = if matches!(family.tag, crate::tl_braid::TLTag::TypeI) {
                SQRT_2
            } else {
                2.0
            };
            let ops: Vec<CMatrix> = [(1, 2), (2, 3), (3, 4), (4, 1)]
                .iter()
                .map(|&(i, j)| tl_site_operator(family, i, j).expect("adjacent pair"))
                .collect();
            for op in &ops {
                worst_tl = worst_tl.max((op * op).residual(&op.scale(c64(d, 0.0))).expect("shape"));
            }
            for (a, b) in [(0usize, 1usize), (1, 2), (2, 3), (3, 0)] {
                let lhs = &(&ops[a] * &ops[b]) * &ops[a];
                worst_tl = worst_tl.max(lhs.residual(&ops[a]).expect("shape"));
            }
        }
    }
    out.push(CheckResult::new(
        "topo/site-operators-tl",
        worst_tl,
        1e-12,
        "16-dim T-L relations, 8-point alpha grid",
    ));

    let mut worst_on: f64 = 0.0;
    let mut worst_t12: f64 = 0.0;
    let mut worst_t23: f64 = 0.0;
    for alpha in [0.0, 1.1, 2.7] {
        for family in families(alpha) {
            for eps in [Sign::Plus, Sign::Minus] {
                let basis = topo_basis(family, eps).expect("realizable family");
                worst_on = worst_on.max((basis.e1.norm() - 1.0).abs());
                worst_on = worst_on.max((basis.e2.norm() - 1.0).abs());
                worst_on = worst_on.max(basis.e1.inner(&basis.e2).norm());
                let (t12, t23) = tl_action_2d(&basis).expect("adjacent pairs");
                let d = basis.loop_d;
                let root = basis.epsilon * (d * d - 1.0).sqrt();
                let t12_expected = CMatrix::diag(&[c64(d, 0.0), c64(0.0, 0.0)]);
                let t23_expected = CMatrix::from_real_rows(&[
                    vec![1.0 / d, root / d],
                    vec![root / d, (d * d - 1.0) / d],
                ]);
                worst_t12 = worst_t12.max(t12.residual(&t12_expected).expect("shape"));
                worst_t23 = worst_t23.max(t23.residual(&t23_expected).expect("shape"));
            }
        }
    }
    out.push(CheckResult::new(
        "topo/orthonormality",
        worst_on,
        1e-12,
        "both families, both epsilon, alpha grid",
    ));
    out.push(CheckResult::new(
        "topo/t12-action",
        worst_t12,
        1e-12,
        "diag(d, 0)",
    ));
    out.push(CheckResult::new(
        "topo/t23-action",
        worst_t23,
        1e-12,
        "(1/d)[[1, eps*sqrt(d^2-1)], [.., d^2-1]]",
    ));

    // A/B at the two canonical (d, α) points.
    {
        let alpha = phase(3.0 * PI / 8.0);
        let pair = ab_from_alpha(alpha, SQRT_2, Sign::Plus).expect("consistent (alpha, d)");
        let pa = phase(-PI / 8.0);
        let ta = CMatrix::diag(&[pa, pa * I]);
        let pb = phase(PI / 8.0) * (1.0 / SQRT_2);
        let tb = CMatrix::from_rows(&[vec![pb, pb * (-I)], vec![pb * (-I), pb]]);
        let r = pair
            .a
            .residual(&ta)
            .expect("shape")
            .max(pair.b.residual(&tb).expect("shape"));
        out.push(CheckResult::new(
            "topo/ab-type-i",
            r.max(pair.braid_residual),
            1e-12,
            "d = sqrt2, alpha = e^{3i pi/8}",
        ));
    }
    {
        let pair = ab_from_alpha(I, 2.0, Sign::Plus).expect("consistent (alpha, d)");
        let ta = CMatrix::diag(&[-I, I]);
        let s3 = 3.0_f64.sqrt();
        let tb = CMatrix::from_rows(&[
            vec![I * 0.5, I * (-s3 / 2.0)],
            vec![I * (-s3 / 2.0), I * (-0.5)],
        ]);
        let r = pair
            .a
            .residual(&ta)
            .expect("shape")
            .max(pair.b.residual(&tb).expect("shape"));
        out.push(CheckResult::new(
            "topo/ab-type-ii",
            r.max(pair.braid_residual),
            1e-12,
            "d = 2, alpha = i",
        ));
    }

    let mut worst_comm: f64 = 0.0;
    let mut worst_j2: f64 = 0.0;
    let mut worst_nil: f64 = 0.0;
    for family in families(0.6) {
        let basis = topo_basis(family, Sign::Plus).expect("realizable family");
        let g = su2_generators(&basis);
        let comm = |a: &CMatrix, b: &CMatrix| (a * b).sub(&(b * a)).expect("shape");
        worst_comm = worst_comm.max(comm(&g.jz, &g.jp).residual(&g.jp).expect("shape"));
        worst_comm = worst_comm.max(
            comm(&g.jz, &g.jm)
                .residual(&g.jm.scale(c64(-1.0, 0.0)))
                .expect("shape"),
        );
        worst_comm = worst_comm.max(
            comm(&g.jp, &g.jm)
                .residual(&g.jz.scale(c64(2.0, 0.0)))
                .expect("shape"),
        );
        worst_nil = worst_nil
            .max((&g.jp * &g.jp).max_abs())
            .max((&g.jm * &g.jm).max_abs());
        let j2 = g.j_squared();
        for v in [&g.e1_prime, &g.e2_prime] {
            let j2v = StateVec {
                amplitudes: j2.apply(&v.amplitudes).expect("dim"),
            };
            worst_j2 = worst_j2.max(j2v.residual(&v.scale(c64(0.75, 0.0))));
        }
    }
    out.push(CheckResult::new(
        "topo/su2-commutators",
        worst_comm,
        1e-12,
        "[Jz, J+-] and [J+, J-]",
    ));
    out.push(CheckResult::new(
        "topo/su2-j-squared",
        worst_j2,
        1e-12,
        "J^2 = 3/4 on span{e1', e2'}",
    ));
    out.push(CheckResult::new(
        "topo/su2-nilpotent",
        worst_nil,
        1e-12,
        "(J+)^2 = (J-)^2 = 0",
    ));
    out
}

/// Criterion 10: the BCS block over seeded (ε, Δ) samples.
pub fn bcs_suite(seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xBC5);
    let (mut diag, mut energy, mut disentangle, mut display): (f64, f64, f64, f64) =
        (0.0, 0.0, 0.0, 0.0);
    for _ in 0..20 {
        let eps_k = rng.gen_range(0.2..3.0);
        let modulus = rng.gen_range(0.2..3.0);
        let arg = rng.gen_range(0.0..2.0 * PI);
        let delta: C64 = phase(arg) * modulus;
        let sol = bcs_diagonalize(eps_k, delta).expect("valid block");
        diag = diag.max(sol.diag_residual);
        // energy read back from the diagonalized matrix against the formula
        let dhd = &(&sol.d_matrix * &sol.hamiltonian) * &sol.d_matrix.dagger();
        let extracted = 2.0 * dhd[(0, 0)].re;
        energy = energy.max((extracted - sol.params.big_e).abs() / sol.params.big_e);
        disentangle = disentangle.max(sol.disentangle_residual);
        display = display.max(sol.display_residual);
    }
    vec![
        CheckResult::new(
            "bcs/diag-residual",
            diag,
            1e-12,
            "D H D^dag = E Jz, 20 seeded samples",
        ),
        CheckResult::new(
            "bcs/energy",
            energy,
            1e-12,
            "E = sqrt(eps^2 + |Delta|^2), relative",
        ),
        CheckResult::new(
            "bcs/disentangle",
            disentangle,
            1e-10,
            "Gaussian disentangling identity",
        ),
        CheckResult::new(
            "bcs/display",
            display,
            1e-12,
            "D(xi) equals the closed 2x2 form",
        ),
    ]
}

/// Matrix-kernel spot checks (random inputs, seeded).
pub fn cxmat_suite(seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC8);
    let mut rand_mat = |scale: f64| {
        let data: Vec<C64> = (0..4)
            .map(|_| c64(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale)))
            .collect();
        CMatrix::new(2, 2, data).expect("finite")
    };
    let (mut kron_r, mut dag_r, mut exp_r): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for _ in 0..25 {
        let (a, b, c) = (rand_mat(2.0), rand_mat(2.0), rand_mat(2.0));
        kron_r = kron_r.max(
            a.kron(&b)
                .kron(&c)
                .residual(&a.kron(&b.kron(&c)))
                .expect("shape"),
        );
        dag_r = dag_r.max(
            a.matmul(&b)
                .expect("shape")
                .dagger()
                .residual(&b.dagger().matmul(&a.dagger()).expect("shape"))
                .expect("shape"),
        );
        let m = rand_mat(0.5);
        let e = m.expm().expect("square");
        let einv = m.scale(c64(-1.0, 0.0)).expm().expect("square");
        exp_r = exp_r.max(
            e.matmul(&einv)
                .expect("shape")
                .residual(&CMatrix::identity(2))
                .expect("shape"),
        );
    }
    vec![
        CheckResult::new(
            "cxmat/kron-associativity",
            kron_r,
            1e-14,
            "random 2x2 triples",
        ),
        CheckResult::new(
            "cxmat/dagger-antihomomorphism",
            dag_r,
            1e-14,
            "(ab)^dag = b^dag a^dag",
        ),
        CheckResult::new("cxmat/expm-inverse", exp_r, 1e-12, "expm(a) expm(-a) = 1"),
    ]
}

/// Everything `verify` runs.
pub fn all_checks(seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.extend(cxmat_suite(seed));
    out.extend(tl_suite());
    out.extend(braid_suite());
    out.extend(ybe_suite());
    out.extend(wigner_suite(seed));
    out.extend(appendix_c_suite());
    out.extend(l1_suite());
    out.extend(brm_suite());
    out.extend(constraint_curve_suite());
    out.extend(topo_suite());
    out.extend(bcs_suite(seed));
    out
}

/// Families accepted by the CLI's ybe-check subcommand, with per-family
/// tolerances.
pub fn ybe_family_scan(family: &str, grid: usize) -> Option<CheckResult> {
    let (check, tol, detail): (f64, f64, &str) = match family {
        "r4-type1" => (
            ybe_grid_scan(&SpectralFamily::r4_type_i(0.37), -1.2, 1.2, grid).ok()?,
            1e-10,
            "Lorentz composition",
        ),
        "r4-type2" => (
            ybe_grid_scan(&SpectralFamily::r4_type_ii(c64(-1.0, 0.0)), -1.0, 1.0, grid).ok()?,
            1e-12,
            "Galileo composition",
        ),
        "2d-type1" => (
            ybe_grid_scan(&SpectralFamily::a2_type_i(1.0), -0.9, 0.9, grid).ok()?,
            1e-10,
            "Lorentz composition",
        ),
        "2d-type2" => (
            ybe_grid_scan(
                &SpectralFamily::a2_type_ii(c64(1.0, 0.0)),
                -0.45,
                0.45,
                grid,
            )
            .ok()?,
            1e-12,
            "Galileo composition",
        ),
        _ => return None,
    };
    Some(CheckResult::new(
        format!("ybe-scan/{family}"),
        check,
        tol,
        detail,
    ))
}

/// The braid point of the 4×4 type-I family sits at half the 2×2 star
/// angle; checked as part of the pipeline cross-checks.
pub fn r4_braid_point_check() -> CheckResult {
    let fam = SpectralFamily::r4_type_i(-FRAC_PI_2);
    let i2 = CMatrix::identity(2);
    let mut worst: f64 = 0.0;
    for theta in [FRAC_PI_4, -FRAC_PI_4] {
        let r = crate::ybe::eval_family(&fam, c64(theta, 0.0)).expect("regular point");
        worst = worst.max(crate::cxmat::braid_residual(&r.kron(&i2), &i2.kron(&r)));
    }
    CheckResult::new(
        "ybe/r4-type-i-braid-point",
        worst,
        1e-12,
        "three-site braid relation at theta = +-pi/4",
    )
}
