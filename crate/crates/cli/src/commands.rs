use dirac_hulthen::oracle::{
    approx_error_scan, fd_eigenvalue, EffectivePotentialKind, FdSolution, OracleConfig,
};
use dirac_hulthen::spectrum::{conjugate_energy, doublet_partner, solve_energy, splitting_sweep};
use dirac_hulthen::tables::{table_rows, table_states};
use dirac_hulthen::wavefunction::{
    geometric_grid, normalize, RadialFunction, GRID_DECAY_LENGTHS, GRID_POINTS, GRID_R_MIN,
};
use dirac_hulthen::{PhysicalParameters, StateLabel, SymmetryLimit};
use rayon::prelude::*;

use crate::args::{ApproxArgs, CommonArgs, DoubletArgs, OdeKind, OracleArgs, SeedRoot, WavefunctionArgs};
use crate::output::{fixed, sci, Table};
use crate::CliError;

/// A finished CSV plus any per-row physics failures it records.
pub struct Report {
    pub table: Table,
    pub failures: Vec<String>,
}

impl From<Table> for Report {
    fn from(table: Table) -> Self {
        Self { table, failures: Vec::new() }
    }
}

fn params(c: &CommonArgs) -> Result<PhysicalParameters, CliError> {
    Ok(PhysicalParameters::new(c.mass, c.delta, c.v0, c.s0, c.u0, c.c_sym)?)
}

fn provenance(command: &str, c: &CommonArgs, extra: &str) -> String {
    let mut line = format!(
        "dirac-hulthen {} {command} symmetry={} M={} delta={} V0={} S0={} U0={} C={}",
        env!("CARGO_PKG_VERSION"),
        c.symmetry,
        c.mass,
        c.delta,
        c.v0,
        c.s0,
        c.u0,
        c.c_sym
    );
    if !extra.is_empty() {
        line.push(' ');
        line.push_str(extra);
    }
    line
}

fn state_label(c: &CommonArgs, name: Option<&str>) -> Result<StateLabel, CliError> {
    if let Some(name) = name.or(c.state.as_deref()) {
        return Ok(StateLabel::parse_spectroscopic(name, c.symmetry)?);
    }
    match (c.n, c.kappa) {
        (Some(n), Some(kappa)) => Ok(StateLabel::new(n, kappa)?),
        _ => Err(CliError::Usage("give --state NAME or both --n and --kappa".into())),
    }
}

/// start, start + step, … up to stop (inclusive within half a step).
fn stepped(start: f64, stop: f64, step: f64, what: &str) -> Result<Vec<f64>, CliError> {
    if !(step > 0.0) || !(stop >= start) || !start.is_finite() || !stop.is_finite() {
        return Err(CliError::Usage(format!("{what}: need step > 0 and stop >= start")));
    }
    let count = ((stop - start) / step + 0.5).floor() as usize;
    Ok((0..=count).map(|i| start + step * i as f64).collect())
}

pub fn solve(c: &CommonArgs) -> Result<Report, CliError> {
    let p = params(c)?;
    let label = state_label(c, None)?;
    let s = solve_energy(&p, c.symmetry, label)?;
    let mut t = Table::new(
        provenance("solve", c, ""),
        &["symmetry", "state", "n", "kappa", "E [1/fm]", "q", "eta", "residual"],
    );
    t.push(vec![
        c.symmetry.to_string(),
        label.spectroscopic(c.symmetry),
        label.n.to_string(),
        label.kappa.to_string(),
        fixed(s.energy, c.precision),
        sci(s.q),
        sci(s.eta),
        sci(s.residual),
    ]);
    Ok(t.into())
}

pub fn table(c: &CommonArgs) -> Result<Report, CliError> {
    let with_tensor = params(c)?;
    let without = with_tensor.with_u0(0.0);
    let limit = c.symmetry;
    let angular = match limit {
        SymmetryLimit::PSpin => "l_tilde",
        SymmetryLimit::Spin => "l",
    };
    let e_u0 = format!("E(U0={}) [1/fm]", c.u0);
    let partner_u0 = format!("partner E(U0={}) [1/fm]", c.u0);
    let mut t = Table::new(
        provenance("table", c, ""),
        &[
            angular,
            "n",
            "kappa",
            "state",
            &e_u0,
            "E(U0=0) [1/fm]",
            "partner n",
            "partner kappa",
            "partner state",
            &partner_u0,
            "partner E(U0=0) [1/fm]",
        ],
    );
    let energy = |p: &PhysicalParameters, l: StateLabel| -> Result<String, CliError> {
        Ok(fixed(solve_energy(p, limit, l)?.energy, c.precision))
    };
    for row in table_rows(limit) {
        let (a, b) = (row.negative, row.positive);
        t.push(vec![
            row.angular.to_string(),
            a.display_n(limit).to_string(),
            a.kappa.to_string(),
            a.spectroscopic(limit),
            energy(&with_tensor, a)?,
            energy(&without, a)?,
            b.display_n(limit).to_string(),
            b.kappa.to_string(),
            b.spectroscopic(limit),
            energy(&with_tensor, b)?,
            energy(&without, b)?,
        ]);
    }
    Ok(t.into())
}

pub fn doublets(c: &CommonArgs, a: &DoubletArgs) -> Result<Report, CliError> {
    let p = params(c)?;
    let limit = c.symmetry;
    let label = state_label(c, a.pair.as_deref())?;
    let partner = doublet_partner(label, limit).ok_or_else(|| {
        CliError::Usage(format!("{} has no {limit} doublet partner", label.spectroscopic(limit)))
    })?;
    let grid = stepped(a.u0_start, a.u0_stop, a.u0_step, "U0 grid")?;
    let extra = format!(
        "pair={}/{} u0_start={} u0_stop={} u0_step={}",
        label.spectroscopic(limit),
        partner.spectroscopic(limit),
        a.u0_start,
        a.u0_stop,
        a.u0_step
    );
    let mut t = Table::new(
        provenance("doublets", c, &extra),
        &["U0 [1/fm]", "state_a", "E_a [1/fm]", "state_b", "E_b [1/fm]", "splitting [1/fm]"],
    );
    let mut failures = Vec::new();
    let (name_a, name_b) = (label.spectroscopic(limit), partner.spectroscopic(limit));
    for pt in splitting_sweep(&p, limit, label, &grid) {
        let u0 = fixed(pt.u0, 6);
        match pt.report {
            Some(r) => t.push(vec![
                u0,
                name_a.clone(),
                fixed(r.partner_a.energy, c.precision),
                name_b.clone(),
                fixed(r.partner_b.energy, c.precision),
                fixed(r.splitting, c.precision),
            ]),
            None => {
                failures.push(format!("U0 = {u0}: no bound state for one of {name_a}, {name_b}"));
                t.push(vec![u0, name_a.clone(), String::new(), name_b.clone(), String::new(), String::new()]);
            }
        }
    }
    Ok(Report { table: t, failures })
}

pub fn approx(c: &CommonArgs, a: &ApproxArgs) -> Result<Report, CliError> {
    if a.deltas.is_empty() || a.deltas.iter().any(|d| !(*d > 0.0)) {
        return Err(CliError::Usage("--deltas must be positive".into()));
    }
    if !(a.r_start > 0.0) {
        return Err(CliError::Usage("--r-start must be positive".into()));
    }
    let radii = stepped(a.r_start, a.r_stop, a.r_step, "r grid")?;
    let deltas: Vec<String> = a.deltas.iter().map(|d| d.to_string()).collect();
    let extra = format!(
        "deltas={} r_start={} r_stop={} r_step={}",
        deltas.join(";"),
        a.r_start,
        a.r_stop,
        a.r_step
    );
    let mut t = Table::new(
        provenance("approx", c, &extra),
        &["delta [1/fm]", "r [fm]", "1/r^2 [1/fm^2]", "approximant [1/fm^2]", "relative_error"],
    );
    for row in approx_error_scan(&a.deltas, &radii)? {
        t.push(vec![
            row.delta.to_string(),
            fixed(row.r, 6),
            sci(row.exact),
            sci(row.approximant),
            sci(row.relative_error),
        ]);
    }
    Ok(t.into())
}

pub fn wavefunction(c: &CommonArgs, a: &WavefunctionArgs) -> Result<Report, CliError> {
    let p = params(c)?;
    let label = state_label(c, None)?;
    let state = solve_energy(&p, c.symmetry, label)?;
    let r_max = a.r_max.unwrap_or(GRID_DECAY_LENGTHS / state.decay_rate());
    let points = a.points.unwrap_or(GRID_POINTS);
    if !(r_max > GRID_R_MIN) || points < 3 {
        return Err(CliError::Usage("need --r-max above the inner radius and --points >= 3".into()));
    }
    let f = normalize(RadialFunction::sample(&state, &geometric_grid(GRID_R_MIN, r_max, points))?)?;
    let extra = format!(
        "state={} E={} r_min={GRID_R_MIN} r_max={r_max} points={points}",
        label.spectroscopic(c.symmetry),
        fixed(state.energy, c.precision)
    );
    let mut t = Table::new(
        provenance("wavefunction", c, &extra),
        &["r [fm]", "F [fm^-1/2]", "G [fm^-1/2]"],
    );
    for ((r, upper), lower) in f.grid.iter().zip(&f.upper).zip(&f.lower) {
        t.push(vec![sci(*r), sci(*upper), sci(*lower)]);
    }
    Ok(t.into())
}

struct OracleJob {
    limit: SymmetryLimit,
    params: PhysicalParameters,
    label: StateLabel,
}

pub fn oracle(c: &CommonArgs, a: &OracleArgs) -> Result<Report, CliError> {
    let p = params(c)?;
    let jobs: Vec<OracleJob> = if a.all_tables {
        let mut jobs = Vec::new();
        for limit in [SymmetryLimit::PSpin, SymmetryLimit::Spin] {
            for label in table_states(limit) {
                for u0 in [c.u0, 0.0] {
                    jobs.push(OracleJob { limit, params: p.with_u0(u0), label });
                }
            }
        }
        jobs
    } else {
        vec![OracleJob { limit: c.symmetry, params: p, label: state_label(c, None)? }]
    };
    let kind = match a.ode {
        OdeKind::Approximated => EffectivePotentialKind::ApproximatedOde,
        OdeKind::Exact => EffectivePotentialKind::ExactOde,
    };
    let config = |params: &PhysicalParameters| {
        let d = OracleConfig::for_params(params);
        OracleConfig {
            r_min: a.r_min.unwrap_or(d.r_min),
            r_max: a.r_max.unwrap_or(d.r_max),
            grid_points: a.grid_points.unwrap_or(d.grid_points),
            ..d
        }
    };
    config(&p).validate()?;

    let results: Vec<Result<(f64, FdSolution), String>> = jobs
        .par_iter()
        .map(|job| {
            let reference = match a.seed {
                SeedRoot::Analytic => solve_energy(&job.params, job.limit, job.label)
                    .map(|s| s.energy)
                    .map_err(|e| e.to_string())?,
                SeedRoot::Conjugate => conjugate_energy(&job.params, job.limit, job.label)
                    .ok_or_else(|| "no conjugate root".to_string())?,
            };
            let cfg = config(&job.params);
            fd_eigenvalue(&job.params, job.limit, job.label.kappa, kind, job.label.n as usize, &cfg, reference)
                .map(|sol| (reference, sol))
                .map_err(|e| e.to_string())
        })
        .collect();

    let seed = match a.seed {
        SeedRoot::Analytic => "analytic",
        SeedRoot::Conjugate => "conjugate",
    };
    let ode = match a.ode {
        OdeKind::Approximated => "approximated",
        OdeKind::Exact => "exact",
    };
    let extra = format!("ode={ode} seed={seed} all_tables={}", a.all_tables);
    let mut t = Table::new(
        provenance("oracle", c, &extra),
        &[
            "symmetry",
            "U0 [1/fm]",
            "state",
            "n",
            "kappa",
            "reference_E [1/fm]",
            "oracle_E [1/fm]",
            "abs_diff [1/fm]",
            "E_coarse [1/fm]",
            "E_fine [1/fm]",
            "h_coarse [fm]",
            "nodes",
            "iterations",
            "status",
        ],
    );
    let mut failures = Vec::new();
    for (job, result) in jobs.iter().zip(results) {
        let head = vec![
            job.limit.to_string(),
            job.params.tensor_u0.to_string(),
            job.label.spectroscopic(job.limit),
            job.label.n.to_string(),
            job.label.kappa.to_string(),
        ];
        let tail = match result {
            Ok((reference, sol)) => vec![
                fixed(reference, c.precision),
                fixed(sol.energy, c.precision),
                sci((sol.energy - reference).abs()),
                fixed(sol.energy_coarse, c.precision),
                fixed(sol.energy_fine, c.precision),
                sci(sol.h_coarse),
                sol.nodes.to_string(),
                sol.iterations.to_string(),
                "ok".to_string(),
            ],
            Err(msg) => {
                failures.push(format!("{} {}: {msg}", head[0], head[2]));
                let mut blank = vec![String::new(); 8];
                blank.push(msg);
                blank
            }
        };
        t.push(head.into_iter().chain(tail).collect());
    }
    Ok(Report { table: t, failures })
}
