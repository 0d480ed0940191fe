use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use sphere_spectra::clifford::{run_oracle_suite, OracleConfig};
use sphere_spectra::exact::{binomial, HalfInt};
use sphere_spectra::rep::{
    branch_down, branch_up, casimir_scalar, spinor_form_components, weyl_dim, GroupId, Kind, Weight,
};
use sphere_spectra::spectra::{
    dirac_spectrum, higher_spin_spectrum, verify_grid, z_function, Pairing, SpectrumEntry,
    VerifyOptions,
};

use crate::{Command, Direction, Format};

pub const FORMAT_VERSION: &str = "1";

pub struct Output {
    pub text: String,
    pub status: u8,
}

type CmdResult = Result<Output, String>;

fn document(command: &str, params: Value, rows: Vec<Value>, summary: Value) -> Value {
    let mut m = Map::new();
    m.insert("format_version".into(), json!(FORMAT_VERSION));
    m.insert("command".into(), json!(command));
    m.insert("params".into(), params);
    m.insert("rows".into(), Value::Array(rows));
    m.insert("summary".into(), summary);
    Value::Object(m)
}

fn emit(doc: &Value, status: u8) -> Output {
    let mut text = serde_json::to_string_pretty(doc).expect("serializable");
    text.push('\n');
    Output { text, status }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn group(n: usize) -> Result<GroupId, String> {
    GroupId::new(n).map_err(err)
}

fn weight(n: usize, text: &str) -> Result<Weight, String> {
    let w = Weight::parse(group(n)?, text).map_err(err)?;
    w.require_dominant().map_err(err)?;
    Ok(w)
}

fn big(x: &BigUint) -> Value {
    // JSON numbers lose precision past 2^53; keep those as strings
    match u64::try_from(x.clone()) {
        Ok(v) if v < 1 << 53 => json!(v),
        _ => json!(x.to_string()),
    }
}

pub fn run(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Spectrum { n, j, lmax, format } => spectrum(*n, *j, *lmax, *format),
        Command::Dim { n, weight } => dim(*n, weight),
        Command::Branch { n, weight, direction, a1max } => branch(*n, weight, *direction, a1max.as_deref()),
        Command::Decompose { n, k } => decompose(*n, *k),
        Command::Ratio { n, alpha, alpha_prime } => ratio(*n, alpha, alpha_prime),
        Command::Verify { nmax, lmax, clifford_cap, swap_pairing } => {
            verify(*nmax, *lmax, *clifford_cap, *swap_pairing)
        }
    }
}

fn spectrum(n: usize, j: usize, lmax: usize, format: Format) -> CmdResult {
    if 2 * j >= n {
        return Err(format!("j = {j} must satisfy j < n/2 for n = {n}"));
    }
    let entries = if j == 0 {
        dirac_spectrum(n, lmax)
    } else {
        higher_spin_spectrum(n, j, lmax)
    }
    .map_err(err)?;
    if format == Format::Csv {
        let mut text = String::from("eigenvalue,multiplicity,ktype,branch,l\n");
        for e in &entries {
            text.push_str(&format!(
                "{},{},\"{}\",{},{}\n",
                e.eigenvalue,
                e.multiplicity,
                e.ktype.weight,
                e.branch_tag.as_str(),
                e.ktype.l
            ));
        }
        return Ok(Output { text, status: 0 });
    }
    let rows = entries.iter().map(spectrum_row).collect();
    let total: BigUint = entries.iter().map(|e| &e.multiplicity).sum();
    let doc = document(
        "spectrum",
        json!({ "n": n, "j": j, "lmax": lmax }),
        rows,
        json!({ "entries": entries.len(), "total_multiplicity": big(&total) }),
    );
    Ok(emit(&doc, 0))
}

fn spectrum_row(e: &SpectrumEntry) -> Value {
    json!({
        "eigenvalue": e.eigenvalue.to_string(),
        "multiplicity": big(&e.multiplicity),
        "ktype": e.ktype.weight.to_string(),
        "branch": e.branch_tag.as_str(),
        "l": e.ktype.l,
    })
}

fn dim(n: usize, text: &str) -> CmdResult {
    let w = weight(n, text)?;
    let d = weyl_dim(&w).map_err(err)?;
    let c = casimir_scalar(&w).map_err(err)?;
    let mut summary = json!({ "dimension": big(&d), "casimir": c.to_string() });
    let g = w.group();
    if g.kind() == Kind::D && w.entries().last().is_some_and(|x| *x != HalfInt::ZERO) {
        let flipped = w.flip_last();
        summary["note"] = json!(format!(
            "the outer sign flip {flipped} has the same dimension {}",
            weyl_dim(&flipped).map_err(err)?
        ));
    }
    let doc = document(
        "dim",
        json!({ "n": n, "weight": w.to_string() }),
        vec![json!({ "weight": w.to_string(), "dimension": big(&d), "casimir": c.to_string() })],
        summary,
    );
    Ok(emit(&doc, 0))
}

fn weight_rows(ws: &[Weight]) -> Result<(Vec<Value>, BigUint), String> {
    let mut total = BigUint::default();
    let mut rows = Vec::with_capacity(ws.len());
    for w in ws {
        let d = weyl_dim(w).map_err(err)?;
        rows.push(json!({ "weight": w.to_string(), "dimension": big(&d) }));
        total += d;
    }
    Ok((rows, total))
}

fn branch(n: usize, text: &str, direction: Direction, a1max: Option<&str>) -> CmdResult {
    match direction {
        Direction::Down => {
            let alpha = weight(n + 1, text)?;
            let lams = branch_down(&alpha).map_err(err)?;
            let (rows, total) = weight_rows(&lams)?;
            let d = weyl_dim(&alpha).map_err(err)?;
            let doc = document(
                "branch",
                json!({ "n": n, "weight": alpha.to_string(), "direction": "down" }),
                rows,
                json!({
                    "from": format!("Spin({})", n + 1),
                    "to": format!("Spin({n})"),
                    "count": lams.len(),
                    "dimension": big(&d),
                    "sum_of_dimensions": big(&total),
                    "identity_holds": d == total,
                }),
            );
            Ok(emit(&doc, 0))
        }
        Direction::Up => {
            let lam = weight(n, text)?;
            let a1 = a1max.ok_or("--a1max is required for --direction up")?;
            let a1: HalfInt = a1.parse().map_err(err)?;
            let alphas = branch_up(&lam, a1).map_err(err)?;
            let (rows, _) = weight_rows(&alphas)?;
            let doc = document(
                "branch",
                json!({ "n": n, "weight": lam.to_string(), "direction": "up", "a1max": a1.to_string() }),
                rows,
                json!({ "from": format!("Spin({n})"), "to": format!("Spin({})", n + 1), "count": alphas.len() }),
            );
            Ok(emit(&doc, 0))
        }
    }
}

fn decompose(n: usize, k: usize) -> CmdResult {
    let g = group(n)?;
    let comps = spinor_form_components(g, k).map_err(err)?;
    let rows = comps
        .iter()
        .map(|c| {
            json!({
                "j": c.j,
                "weights": c.weights.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "dimension": big(&c.dimension),
            })
        })
        .collect();
    let total: BigUint = comps.iter().map(|c| &c.dimension).sum();
    let expected = binomial(n as i64, k as i64) * g.spinor_dim();
    let doc = document(
        "decompose",
        json!({ "n": n, "k": k }),
        rows,
        json!({
            "components": comps.len(),
            "sum_of_dimensions": big(&total),
            "binomial_times_spinor_dim": expected.to_string(),
            "identity_holds": expected.to_biguint().as_ref() == Some(&total),
        }),
    );
    Ok(emit(&doc, 0))
}

fn ratio(n: usize, alpha: &str, alpha_prime: &str) -> CmdResult {
    let a = weight(n + 1, alpha)?;
    let b = weight(n + 1, alpha_prime)?;
    let za = z_function(n, &a).map_err(err)?;
    let zb = z_function(n, &b).map_err(err)?;
    let r = za.checked_div(&zb).map_err(err)?;
    let doc = document(
        "ratio",
        json!({ "n": n, "alpha": a.to_string(), "alpha_prime": b.to_string() }),
        vec![
            json!({ "weight": a.to_string(), "z": za.to_string() }),
            json!({ "weight": b.to_string(), "z": zb.to_string() }),
        ],
        json!({ "ratio": r.to_string() }),
    );
    Ok(emit(&doc, 0))
}

fn verify(nmax: usize, lmax: usize, cap: usize, swap: bool) -> CmdResult {
    if !(2..=64).contains(&nmax) || !(1..=200).contains(&lmax) {
        return Err(format!("need 2 ≤ nmax ≤ 64 and 1 ≤ lmax ≤ 200, got {nmax}, {lmax}"));
    }
    if cap > 8 {
        return Err(format!("clifford cap {cap} is above the supported 8"));
    }
    let options = VerifyOptions {
        pairing: if swap { Pairing::Swapped } else { Pairing::Validated },
        ..Default::default()
    };
    let reports = verify_grid(2..=nmax, lmax, options).map_err(err)?;
    let mut rows = Vec::new();
    let mut failures = 0usize;
    let mut checks = 0usize;
    for r in &reports {
        checks += r.checks_run;
        failures += r.failures.len();
        rows.push(json!({
            "suite": "spectra",
            "n": r.n,
            "j_max": r.j_max,
            "cases": r.cases_checked,
            "checks": r.checks_run,
            "failures": r.failures.iter().map(|f| json!({
                "case": f.case, "expected": f.expected, "got": f.got,
            })).collect::<Vec<_>>(),
            "normalization": r.diagnostics.iter().map(|(j, d)| json!({
                "j": j, "constant": d.as_ref().map(ToString::to_string),
            })).collect::<Vec<_>>(),
        }));
    }
    let oracle_cap = cap.min(nmax);
    if oracle_cap >= 3 {
        let cfg = OracleConfig { n_cap: oracle_cap, ..Default::default() };
        let report = run_oracle_suite(&cfg).map_err(err)?;
        for c in &report.checks {
            checks += 1;
            failures += usize::from(!c.passed);
            rows.push(json!({
                "suite": "clifford",
                "property": c.property,
                "n": c.n,
                "k": c.k_form,
                "j": c.j,
                "passed": c.passed,
                "detail": c.detail,
            }));
        }
    }
    let doc = document(
        "verify",
        json!({ "nmax": nmax, "lmax": lmax, "clifford_cap": cap, "pairing": if swap { "swapped" } else { "validated" } }),
        rows,
        json!({ "checks": checks, "failures": failures, "passed": failures == 0 }),
    );
    Ok(emit(&doc, u8::from(failures > 0)))
}
