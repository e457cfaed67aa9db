use std::path::Path;
use std::time::Instant;

use ipsig_core::complex::{product_staircase, write_complex_file, ComplexFile, SimplicialComplex};
use ipsig_core::intersection_homology::ih;
use ipsig_core::ip_witt::{check_ip, check_witt};
use ipsig_core::pseudomanifold::{check_boundary_pseudomanifold, orient};
use ipsig_core::symmetric_signature::{
    duality_matrices, fundamental_cycle, signature, symmetric_complex, verify_symmetric_conditions,
};
use ipsig_core::zlinalg::Coefficients;
use ipsig_core::Error;
use serde_json::{json, Value};

use crate::input;
use crate::report::{diagnostic, Failure, InputDigest, Report};
use crate::{Cli, Command};

/// Results plus the verdict that `--strict` turns into the exit status.
type Outcome = Result<(Value, Option<bool>), Failure>;

fn coefficients(s: &str) -> Coefficients {
    if s == "Q" {
        Coefficients::Q
    } else {
        Coefficients::Z
    }
}

fn name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Orient { .. } => "orient",
        Command::Stratify { .. } => "stratify",
        Command::Ih { .. } => "ih",
        Command::CheckIp { .. } => "check-ip",
        Command::CheckWitt { .. } => "check-witt",
        Command::Signature { .. } => "signature",
        Command::SymmetricComplex { .. } => "symmetric-complex",
        Command::Product { .. } => "product",
        Command::Suspend { .. } => "suspend",
        Command::Cone { .. } => "cone",
    }
}

pub fn run(cli: &Cli) -> (Report, u8) {
    let start = Instant::now();
    let mut report = Report::new(name(&cli.command));
    let outcome = dispatch(cli, &mut report);
    report.timings.insert("total_seconds".into(), start.elapsed().as_secs_f64());
    match outcome {
        Ok((results, verdict)) => {
            report.results = Some(results);
            let code = if cli.flags.strict && verdict == Some(false) { 1 } else { 0 };
            (report, code)
        }
        Err(f) => {
            report.error = Some(diagnostic(&f));
            (report, 2)
        }
    }
}

fn dispatch(cli: &Cli, report: &mut Report) -> Outcome {
    let flags = &cli.flags;
    let strat_path = flags.stratification.as_deref();
    let mut digests: Vec<InputDigest> = Vec::new();
    let out = match &cli.command {
        Command::Validate { input } => {
            let f = input::load(input, None, &mut digests)?;
            validate(&f.complex)
        }
        Command::Orient { input } => {
            let f = input::load(input, None, &mut digests)?;
            orientation(&f)
        }
        Command::Stratify { input } => {
            let f = input::load(input, strat_path, &mut digests)?;
            let st = input::stratification(&f)?;
            Ok((serde_json::to_value(&st).expect("serializable"), None))
        }
        Command::Ih { input } => {
            let f = input::load(input, strat_path, &mut digests)?;
            let p = input::perversity(&flags.perversity, &mut digests)?;
            report.param("perversity", &flags.perversity);
            report.param("coefficients", &flags.coefficients);
            report.param("relative", flags.relative);
            let st = input::stratification(&f)?;
            let r = ih(&f.complex, &st, &p, coefficients(&flags.coefficients), flags.relative)?;
            Ok((serde_json::to_value(&r).expect("serializable"), None))
        }
        Command::CheckIp { input } | Command::CheckWitt { input } => {
            let f = input::load(input, strat_path, &mut digests)?;
            report.param("audit", flags.audit);
            let st = input::stratification(&f)?;
            let r = if matches!(cli.command, Command::CheckIp { .. }) {
                check_ip(&f.complex, Some(&st), flags.audit)?
            } else {
                check_witt(&f.complex, Some(&st), flags.audit)?
            };
            let verdict = r.verdict();
            let mut v = serde_json::to_value(&r).expect("serializable");
            v["verdict"] = json!(verdict);
            Ok((v, Some(verdict)))
        }
        Command::Signature { input } => {
            let f = input::load(input, strat_path, &mut digests)?;
            let st = input::stratification(&f)?;
            let o = input::orientation(&f)?;
            let r = signature(&f.complex, Some(&st), o.as_ref())?;
            Ok((serde_json::to_value(&r).expect("serializable"), None))
        }
        Command::SymmetricComplex { input } => {
            let f = input::load(input, strat_path, &mut digests)?;
            report.param("coefficients", &flags.coefficients);
            symmetric(&f, coefficients(&flags.coefficients))
        }
        Command::Product { left, right, save } => {
            let a = input::load(left, None, &mut digests)?;
            let b = input::load(right, None, &mut digests)?;
            let p = product_staircase(&a.complex, &b.complex).into_complex();
            construction(p, save.as_deref())
        }
        Command::Suspend { input, save } => {
            let f = input::load(input, None, &mut digests)?;
            construction(f.complex.suspension(), save.as_deref())
        }
        Command::Cone { input, save } => {
            let f = input::load(input, None, &mut digests)?;
            construction(f.complex.cone(), save.as_deref())
        }
    };
    report.inputs = digests;
    if strat_path.is_some() {
        report.param("stratification", strat_path.map(|p| p.display().to_string()));
    }
    out
}

fn validate(k: &SimplicialComplex) -> Outcome {
    let b = check_boundary_pseudomanifold(k);
    let ok = b.verdict.ok;
    let boundary = b.decomposition.boundary.as_ref().map(|c| c.f_vector());
    Ok((
        json!({
            "name": k.name(),
            "dimension": k.dim(),
            "f_vector": k.f_vector(),
            "euler_characteristic": k.euler_characteristic(),
            "pseudomanifold": ok,
            "verdict": b.verdict,
            "boundary_f_vector": boundary,
            "boundary_is_pseudomanifold": b.boundary_is_pseudomanifold,
            "collar": b.collar,
        }),
        Some(ok),
    ))
}

fn orientation(f: &ComplexFile) -> Outcome {
    match orient(&f.complex) {
        Ok(o) => Ok((json!({"orientable": true, "orientation": o.to_facet_signs(&f.complex)}), Some(true))),
        Err(Error::NonOrientable(w)) => Ok((json!({"orientable": false, "witness": w}), Some(false))),
        Err(e) => Err(e.into()),
    }
}

fn symmetric(f: &ComplexFile, coeff: Coefficients) -> Outcome {
    let k = &f.complex;
    let st = input::stratification(f)?;
    let o = match input::orientation(f)? {
        Some(o) => o,
        None => orient(k)?,
    };
    let xi = fundamental_cycle(k, &o, Some(&st))?;
    let xi_summary = serde_json::to_value(&xi).expect("serializable");
    let data = symmetric_complex(k, &st, xi)?;
    let conditions = verify_symmetric_conditions(&data);
    let duality = if coeff == Coefficients::Z {
        match duality_matrices(&data, Coefficients::Z) {
            Ok(r) => serde_json::to_value(&r).expect("serializable"),
            Err(e) => json!({"error": e.to_string()}),
        }
    } else {
        serde_json::to_value(&conditions.duality).expect("serializable")
    };
    let pass = conditions.all_pass();
    Ok((
        json!({
            "fundamental_cycle": xi_summary,
            "product_simplices": data.product_simplices.to_string(),
            "product_materialized": data.product.is_some(),
            "c_ranks": data.c.ranks(),
            "d_ranks": data.d.as_ref().map(|d| d.ranks()),
            "involution": data.involution,
            "conditions": conditions,
            "duality": duality,
            "all_conditions_hold": pass,
        }),
        Some(pass),
    ))
}

fn construction(k: SimplicialComplex, save: Option<&Path>) -> Outcome {
    let text = write_complex_file(&ComplexFile::new(k.clone()));
    if let Some(p) = save {
        std::fs::write(p, &text).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
    }
    let doc: Value = serde_json::from_str(&text).expect("own output parses");
    Ok((json!({"f_vector": k.f_vector(), "complex": doc}), None))
}
