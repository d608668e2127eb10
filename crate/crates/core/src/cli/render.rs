//! Human-readable text and CSV renderings of [`Report`]s.

use std::fmt::Write;

use crate::error::{Error, Result};

use super::report::*;

fn vec_text(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(|q| q.0.to_string()).collect();
    format!("[{}]", parts.join(" "))
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref()
        .map_or_else(|| "-".to_string(), ToString::to_string)
}

fn times(ts: &[usize]) -> String {
    if ts.is_empty() {
        return "{}".into();
    }
    let parts: Vec<String> = ts.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn text(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Dims(d) => dims_text(&mut out, d),
        Report::Profile(p) => profile_text(&mut out, p),
        Report::Reachdim(r) => reachdim_text(&mut out, r),
        Report::Basis(b) => basis_text(&mut out, b),
        Report::Member(m) => member_text(&mut out, m),
        Report::Annihilator(a) => annihilator_text(&mut out, a),
        Report::Report(f) => full_text(&mut out, f),
    }
    out
}

fn dims_table(out: &mut String, d: &DimsReport) {
    let _ = writeln!(
        out,
        "{:>4}  {:>14}  {:>14}  factored",
        "t", "r(t)", "closed form"
    );
    for row in &d.rows {
        let _ = writeln!(
            out,
            "{:>4}  {:>14}  {:>14}  {}",
            row.t,
            row.r,
            opt(&row.closed_form),
            row.factored
        );
    }
}

fn dims_text(out: &mut String, d: &DimsReport) {
    let _ = writeln!(
        out,
        "state dimensions for m = {}, k = {}, p = {}",
        d.m, d.k, d.p
    );
    dims_table(out, d);
    let _ = writeln!(out, "r* = {} = {}", d.r_star, d.r_star_factored);
    let _ = writeln!(out, "t* bound (alpha + max tau + 1) = {}", d.t_star_bound);
    let _ = writeln!(out, "t* minimal = {}", d.t_star_minimal);
}

fn mprimes(ps: &[MPrimeReport]) -> String {
    let parts: Vec<String> = ps
        .iter()
        .map(|p| format!("{} (nu={}, theta={})", p.prime, p.nu, p.theta))
        .collect();
    if parts.is_empty() {
        "none".into()
    } else {
        parts.join(", ")
    }
}

fn profile_text(out: &mut String, p: &ProfileReport) {
    let _ = writeln!(out, "profile for m = {}, k = {}, p = {}", p.m, p.k, p.p);
    let _ = writeln!(out, "alpha = {}", p.alpha);
    let _ = writeln!(out, "k primes (d = {}):", p.d);
    for kp in &p.k_primes {
        let _ = writeln!(
            out,
            "  {}: mu={} beta={} tau={} eta={} in_m={}",
            kp.prime, kp.mu, kp.beta, kp.tau, kp.eta, kp.in_m
        );
    }
    let _ = writeln!(
        out,
        "m primes, nu > theta: {}",
        mprimes(&p.m_primes_absorbed)
    );
    let _ = writeln!(
        out,
        "m primes, nu <= theta: {}",
        mprimes(&p.m_primes_surplus)
    );
    let _ = writeln!(out, "p1 = {}", p.p1);
    let _ = writeln!(out, "r* = {}", p.r_star);
    let _ = writeln!(out, "t* bound = {}", p.t_star_bound);
    let _ = writeln!(out, "t* minimal = {}", p.t_star_minimal);
}

fn reachdim_text(out: &mut String, r: &ReachDimReport) {
    let _ = writeln!(
        out,
        "r = {} for m = {}, k = {}, p = {}: {}",
        r.r,
        r.m,
        r.k,
        r.p,
        if r.reachable {
            "reachable"
        } else {
            "not reachable"
        }
    );
    let _ = writeln!(out, "witness times: {}", times(&r.witnesses));
    if r.at_initial {
        let _ = writeln!(out, "r is the initial dimension (t = 0)");
    }
    if let Some(t) = r.invariant_from {
        let _ = writeln!(out, "r = r*: every t >= {t} is a witness");
    }
}

fn subspace_text(out: &mut String, s: &SubspaceReport) {
    let _ = writeln!(out, "R_{} in V_{}: dim {}", s.t, s.ambient, s.dim);
    for b in &s.basis {
        let _ = writeln!(out, "  {}", vec_text(b));
    }
}

fn basis_text(out: &mut String, b: &BasisReport) {
    let _ = writeln!(out, "generators A^{} ⋉→ δ_{}^i:", b.subspace.t, b.p);
    for (i, g) in b.generators.iter().enumerate() {
        let _ = writeln!(out, "  i={}: {}", i + 1, vec_text(g));
    }
    subspace_text(out, &b.subspace);
}

fn member_text(out: &mut String, m: &MemberReport) {
    let _ = writeln!(out, "x = {}", vec_text(&m.x));
    if let Some(v) = &m.verdict {
        let status = if v.reachable {
            "reachable"
        } else {
            "not reachable"
        };
        let _ = writeln!(
            out,
            "t = {}: {} (rank with x = {}, dim R_t = {})",
            v.t, status, v.rank_with, v.rank_without
        );
        if let Some(e) = v.expected_dim {
            let _ = writeln!(
                out,
                "  dimension mismatch: states at t = {} live in V_{e}",
                v.t
            );
        }
    }
    if let (Some(tm), Some(ts)) = (m.scan_t_max, &m.reachable_times) {
        let _ = writeln!(out, "reachable at t <= {tm}: {}", times(ts));
    }
}

fn union_text(out: &mut String, u: &UnionReport) {
    let _ = writeln!(out, "p = {}, t* = {}, r* = {}", u.p, u.t_star, u.r_star);
    for (i, q) in u.per_generator.iter().enumerate() {
        let _ = writeln!(out, "q_{}(z) = {}", i + 1, q.text);
    }
    let _ = writeln!(out, "q(z) = lcm = {}", u.q.text);
    let _ = writeln!(out, "f(z) on V_{} = {}", u.r_star, u.f.text);
    match &u.f_over_q {
        Some(c) => {
            let _ = writeln!(out, "f = ({}) · q", c.text);
        }
        None => {
            let _ = writeln!(out, "q does not divide f");
        }
    }
    let verdict = match u.verdict.as_str() {
        "proper_subset" => "union of R_t (t >= t*) is a proper subset of V_r*",
        _ => "inconclusive (q = f)",
    };
    let _ = writeln!(out, "verdict: {verdict}");
}

fn annihilator_text(out: &mut String, a: &AnnihilatorReport) {
    if let (Some(x), Some(q)) = (&a.vector, &a.vector_annihilator) {
        let _ = writeln!(out, "x = {}", vec_text(x));
        let _ = writeln!(out, "minimal annihilator of x: {}", q.text);
    }
    if let Some(f) = &a.reach_filter {
        let _ = writeln!(out, "necessary reachability filter: {f}");
    }
    if let Some(u) = &a.union {
        union_text(out, u);
    }
    if let (Some(n), Some(f)) = (a.space_dim, &a.space_annihilator) {
        let _ = writeln!(out, "minimal annihilator of V_{n}: {}", f.text);
    }
}

fn section<T>(out: &mut String, title: &str, s: &Section<T>, body: impl FnOnce(&mut String, &T)) {
    let _ = writeln!(out, "== {title} ==");
    match s {
        Section::Ok(v) => body(out, v),
        Section::Error(e) => {
            let _ = writeln!(out, "unavailable ({}): {}", e.kind, e.message);
        }
    }
    out.push('\n');
}

fn full_text(out: &mut String, f: &FullReport) {
    let _ = writeln!(out, "A ({}x{}):", f.rows, f.cols);
    for row in &f.matrix {
        let _ = writeln!(out, "  {}", vec_text(row));
    }
    let _ = writeln!(out, "initial space V_{}\n", f.p);
    section(out, "shape", &f.shape, |o, s| {
        let _ = writeln!(o, "dimension-bounded: m = {}, k = {}", s.m, s.k);
    });
    section(out, "profile", &f.profile, profile_text);
    section(out, "state dimensions", &f.dims, dims_text);
    section(out, "reachable subspaces", &f.subspaces, |o, ss| {
        for s in ss {
            subspace_text(o, s);
        }
    });
    section(out, "annihilators", &f.annihilators, union_text);
    section(out, "subspace relations", &f.relations, |o, rows| {
        for r in rows {
            let _ = writeln!(
                o,
                "R_{} vs R_{}: {}, dim intersection = {}",
                r.t1, r.t2, r.relation, r.intersection_dim
            );
        }
    });
}

/// CSV rendering; only tabular reports support it.
pub fn csv(report: &Report) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::invalid(format!("csv: {e}"));
    match report {
        Report::Dims(d) => {
            w.write_record(["t", "r", "closed_form", "factored"])
                .map_err(io)?;
            for row in &d.rows {
                w.write_record([
                    row.t.to_string(),
                    row.r.to_string(),
                    row.closed_form.map(|c| c.to_string()).unwrap_or_default(),
                    row.factored.clone(),
                ])
                .map_err(io)?;
            }
        }
        Report::Basis(b) => {
            w.write_record(["index", "vector"]).map_err(io)?;
            for (i, v) in b.subspace.basis.iter().enumerate() {
                w.write_record([(i + 1).to_string(), vec_text(v)])
                    .map_err(io)?;
            }
        }
        Report::Member(m) => {
            let ts = m
                .reachable_times
                .as_ref()
                .ok_or_else(|| Error::invalid("csv output of member needs --t-max"))?;
            w.write_record(["t", "reachable"]).map_err(io)?;
            for t in 0..=m.scan_t_max.unwrap_or(0) {
                w.write_record([t.to_string(), ts.contains(&t).to_string()])
                    .map_err(io)?;
            }
        }
        Report::Reachdim(r) => {
            w.write_record(["t"]).map_err(io)?;
            for t in &r.witnesses {
                w.write_record([t.to_string()]).map_err(io)?;
            }
        }
        _ => {
            return Err(Error::invalid(
                "csv output is available for dims, reachdim, basis and member",
            ))
        }
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::invalid(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
