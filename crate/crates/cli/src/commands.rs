use anyhow::{bail, Result};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use intpoly::arith::int::{field_discriminant, is_squarefree};
use intpoly::arith::poly::ParseCoeff;
use intpoly::arith::Field;
use intpoly::domain::{Domain, DomainSpec};
use intpoly::intpoly::presentation::PresentationReport;
use intpoly::intpoly::{
    expand_in_basis, ideal_report, regular_basis, verify_global_relations, verify_presentation, w::w_u64, Expansion,
};
use intpoly::json::ToJson;
use intpoly::quad_ideal::{class_group, polya_ostrowski_group, PogResult};
use intpoly::wpc::{check_condition_suite, check_wpc_over_z, numthm_split_analysis, FiniteAlgebra};
use intpoly::{with_domain, Error, Poly};

use crate::report::Report;
use crate::{read_input, Command};

pub fn dispatch(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Basis { domain, upto } => with_domain!(domain, d => basis(&d, *upto)),
        Command::Membership { domain, poly } => {
            let text = poly.text()?;
            with_domain!(domain, d => membership(&d, &text))
        }
        Command::Expand { domain, poly, upto } => {
            let text = poly.text()?;
            with_domain!(domain, d => expand(&d, &text, *upto))
        }
        Command::Ideals { domain, upto } => ideals(domain, *upto),
        Command::Pog { domain: Some(domain), .. } => pog(domain),
        Command::Pog { sweep_from: Some(from), sweep_to: Some(to), .. } => pog_sweep(*from, *to),
        Command::Pog { .. } => bail!("pog needs --domain or --sweep-from/--sweep-to"),
        Command::Classgroup { domain } => classgroup(domain),
        Command::VerifyPresentation { domain, q, maxdeg } => {
            let q = match (q, domain) {
                (Some(q), _) => *q,
                (None, DomainSpec::LocalizedIntegers(p)) => *p,
                (None, _) => bail!("--q is required unless the domain is Zloc:p"),
            };
            let r = with_domain!(domain, d => verify_presentation(&d, q, *maxdeg))?;
            Ok(presentation(&r))
        }
        Command::VerifyRelations { domain, q, depth } => {
            let r = with_domain!(domain, d => verify_global_relations(&d, q, *depth))?;
            let rows = r
                .towers
                .iter()
                .flat_map(|(q, _, rels)| {
                    rels.iter()
                        .map(move |c| vec![q.to_string(), c.k.to_string(), c.degree.to_string(), c.holds.to_string()])
                })
                .collect();
            let text = format!(
                "{}: relations for q in {:?} through depth {}: {}",
                r.domain,
                r.towers.iter().map(|t| t.0).collect::<Vec<_>>(),
                r.depth,
                if r.pass { "all vanish" } else { "FAILED" }
            );
            Ok(Report::new(r.to_json(), text).table(vec!["q", "k", "degree", "holds"], rows).negative(!r.pass))
        }
        Command::Wpc { algebra, conditions } => wpc(&read_input(algebra)?, *conditions),
        Command::SplitAnalysis { domain, bound } => split(domain, *bound),
        Command::WTable { kmax, nmax } => w_table(*kmax, *nmax),
    }
}

fn coeff_list<F: ParseCoeff>(f: &Poly<F>) -> String {
    f.coeffs().iter().map(ParseCoeff::format_coeff).collect::<Vec<_>>().join(",")
}

fn parse_poly<D: Domain>(d: &D, text: &str) -> Result<Poly<D::Elem>> {
    let f = Poly::parse(&d.ctx(), text)?;
    d.check_field(&f)?;
    Ok(f)
}

fn not_polya(spec: &DomainSpec, q: u64, class: &str) -> Report {
    let json = json!({"domain": spec.to_string(), "polya": false, "obstruction": {"q": q, "class": class}});
    let text = format!("{spec} is not a Pólya domain: Π_{q} is not principal ({class})");
    Report::new(json, text)
        .table(
            vec!["domain", "polya", "q", "class"],
            vec![vec![spec.to_string(), "false".into(), q.to_string(), class.into()]],
        )
        .negative(true)
}

fn basis<D: Domain>(d: &D, upto: u64) -> Result<Report> {
    let b = match regular_basis(d, upto) {
        Ok(b) => b,
        Err(Error::NotPrincipal { q, class }) => return Ok(not_polya(&d.spec(), q, &class)),
        Err(e) => return Err(e.into()),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for (n, g) in b.polys.iter().enumerate() {
        text.push_str(&format!("G_{n} = {g}    sigma = {}\n", b.sigmas[n]));
        rows.push(vec![n.to_string(), b.sigmas[n].format_coeff(), coeff_list(g)]);
    }
    Ok(Report::new(b.to_json(), text).table(vec!["n", "sigma", "poly"], rows))
}

fn membership<D: Domain>(d: &D, text: &str) -> Result<Report> {
    let f = parse_poly(d, text)?;
    let m = d.is_member(&f)?;
    let mut json = m.to_json();
    json["domain"] = json!(d.spec().to_string());
    json["poly"] = f.to_json();
    let summary = match (&m.witness, &m.value) {
        (Some(a), Some(v)) => format!("{f} is not in Int({}): f({a}) = {v}", d.spec()),
        _ if m.member => format!("{f} is in Int({})", d.spec()),
        _ => format!("{f} is not in Int({})", d.spec()),
    };
    let row = vec![
        d.spec().to_string(),
        coeff_list(&f),
        m.member.to_string(),
        m.witness.as_ref().map(ParseCoeff::format_coeff).unwrap_or_default(),
        m.value.as_ref().map(ParseCoeff::format_coeff).unwrap_or_default(),
        m.method.to_string(),
    ];
    Ok(Report::new(json, summary)
        .table(vec!["domain", "poly", "member", "witness", "value", "method"], vec![row])
        .negative(!m.member))
}

fn expand<D: Domain>(d: &D, text: &str, upto: Option<u64>) -> Result<Report> {
    let f = parse_poly(d, text)?;
    let deg = f.degree().unwrap_or(0) as u64;
    let upto = upto.unwrap_or(deg);
    if upto < deg {
        bail!("--upto {upto} is below the degree {deg}");
    }
    let b = match regular_basis(d, upto) {
        Ok(b) => b,
        Err(Error::NotPrincipal { q, class }) => return Ok(not_polya(&d.spec(), q, &class)),
        Err(e) => return Err(e.into()),
    };
    let e = expand_in_basis(d, &f, &b)?;
    let mut json = e.to_json();
    json["domain"] = json!(d.spec().to_string());
    json["poly"] = f.to_json();
    Ok(match &e {
        Expansion::Coefficients(c) => {
            let terms: Vec<String> =
                c.iter().enumerate().filter(|(_, x)| !x.is_zero_elem()).map(|(n, x)| format!("({x}) G_{n}")).collect();
            let text = format!("{f} = {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
            let rows = c.iter().enumerate().map(|(n, x)| vec![n.to_string(), x.format_coeff()]).collect();
            Report::new(json, text).table(vec!["n", "coefficient"], rows)
        }
        Expansion::NotIntegral { index, coefficient } => {
            let text = format!("{f} is not in Int({}): coefficient of G_{index} is {coefficient}", d.spec());
            Report::new(json, text)
                .table(vec!["n", "coefficient"], vec![vec![index.to_string(), coefficient.format_coeff()]])
                .negative(true)
        }
    })
}

fn ideals(spec: &DomainSpec, upto: u64) -> Result<Report> {
    spec.validate()?;
    let reports = (0..=upto).into_par_iter().map(|n| ideal_report(spec, n)).collect::<Result<Vec<_>, _>>()?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for r in &reports {
        text.push_str(&format!("{}!_D = {}    J_{} = {}\n", r.n, r.factorial, r.n, r.characteristic));
        rows.push(vec![r.n.to_string(), r.factorial.to_string(), r.characteristic.to_string()]);
    }
    let json = json!({
        "domain": spec.to_string(),
        "upto": upto,
        "ideals": reports.iter().map(ToJson::to_json).collect::<Vec<_>>(),
    });
    Ok(Report::new(json, text).table(vec!["n", "factorial", "characteristic"], rows))
}

fn quad_radicand(spec: &DomainSpec) -> Result<&BigInt> {
    match spec {
        DomainSpec::ImagQuadraticOrder(d) => {
            spec.validate()?;
            Ok(d)
        }
        other => bail!("{other} is not an imaginary quadratic order; use Quad:d"),
    }
}

fn pog_row(r: &PogResult) -> Vec<String> {
    vec![
        r.d.to_string(),
        r.disc.to_string(),
        r.class_number.to_string(),
        r.order.to_string(),
        r.is_trivial.to_string(),
        r.is_proper.to_string(),
    ]
}

const POG_HEADERS: [&str; 6] = ["d", "disc", "class_number", "pog_order", "is_trivial", "is_proper"];

fn pog(spec: &DomainSpec) -> Result<Report> {
    let r = polya_ostrowski_group(quad_radicand(spec)?)?;
    let text = format!(
        "Po(Q(sqrt {})): order {} in a class group of order {}{}",
        r.d,
        r.order,
        r.class_number,
        if r.is_trivial { ", trivial (Pólya field)" } else { ", not a Pólya field" }
    );
    Ok(Report::new(r.to_json(), text).table(POG_HEADERS.to_vec(), vec![pog_row(&r)]).negative(!r.is_trivial))
}

fn pog_sweep(from: i64, to: i64) -> Result<Report> {
    if from > to || to >= 0 {
        bail!("sweep range {from}..={to} must be nonempty and negative");
    }
    let ds: Vec<BigInt> = (from..=to).map(BigInt::from).filter(is_squarefree).collect();
    let results = ds.par_iter().map(polya_ostrowski_group).collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<Vec<String>> = results.iter().map(pog_row).collect();
    let mut text = format!("{:>8} {:>8} {:>4} {:>4}  polya\n", "d", "disc", "h", "|Po|");
    for r in &results {
        text.push_str(&format!("{:>8} {:>8} {:>4} {:>4}  {}\n", r.d, r.disc, r.class_number, r.order, r.is_trivial));
    }
    let json = json!({
        "from": from,
        "to": to,
        "fields": results.iter().map(ToJson::to_json).collect::<Vec<_>>(),
    });
    Ok(Report::new(json, text).table(POG_HEADERS.to_vec(), rows))
}

fn classgroup(spec: &DomainSpec) -> Result<Report> {
    let d = quad_radicand(spec)?;
    let g = class_group(&field_discriminant(d))?;
    let mut text = format!("Cl(disc {}) has order {}\n", g.disc, g.class_number());
    let mut rows = Vec::new();
    for (c, ideal) in g.reduced_forms.iter().enumerate() {
        text.push_str(&format!("  [{c}] {ideal}  order {}\n", g.order_of(c)));
        rows.push(vec![c.to_string(), ideal.to_string(), ideal.norm().to_string(), g.order_of(c).to_string()]);
    }
    Ok(Report::new(g.to_json(), text).table(vec!["class", "ideal", "norm", "order"], rows))
}

fn presentation(r: &PresentationReport) -> Report {
    let rows = r
        .monomials
        .iter()
        .map(|m| {
            let exps: Vec<String> = m.exponents.iter().map(u64::to_string).collect();
            vec![m.n.to_string(), exps.join(" "), m.degree.to_string(), m.lead_matches.to_string()]
        })
        .collect();
    let text = format!(
        "{}, q = {}, degree <= {}: {} relations vanish: {}, distinct degrees: {}, leads match: {}\n{}",
        r.domain,
        r.q,
        r.maxdeg,
        r.relations.len(),
        r.relations.iter().all(|c| c.holds),
        r.distinct_degrees,
        r.monomials.iter().all(|m| m.lead_matches),
        if r.pass { "certificate holds" } else { "certificate FAILED" }
    );
    Report::new(r.to_json(), text).table(vec!["n", "exponents", "degree", "lead_matches"], rows).negative(!r.pass)
}

fn wpc(input: &str, conditions: bool) -> Result<Report> {
    let a = FiniteAlgebra::from_json(input)?;
    let report = check_wpc_over_z(&a)?;
    let mut json = report.to_json();
    let mut text = format!("algebra of order {}: ", report.order);
    text.push_str(if report.overall { "WPC" } else { "not WPC" });
    text.push_str(&format!(" [{}]\n", report.label));
    let mut rows = Vec::new();
    for v in &report.primes {
        text.push_str(&format!("  p = {}: {} residues, a^p = a for all: {}", v.p, v.residues, v.congruence));
        if let Some(w) = &v.witness {
            text.push_str(&format!(", witness {:?} with a^p = {:?}", strs(&w.element), strs(&w.power)));
        }
        text.push('\n');
        let (elem, power) =
            v.witness.as_ref().map(|w| (strs(&w.element).join(" "), strs(&w.power).join(" "))).unwrap_or_default();
        rows.push(vec![
            v.p.to_string(),
            v.residues.to_string(),
            v.congruence.to_string(),
            v.frobenius.to_string(),
            elem,
            power,
        ]);
    }
    if conditions {
        let suites = a.primes()?.iter().map(|&p| check_condition_suite(&a, p)).collect::<Result<Vec<_>, _>>()?;
        for s in &suites {
            text.push_str(&format!(
                "  p = {}: (2) {} (4) {} (5) {} (8) {}, residue degrees {:?}\n",
                s.p, s.frobenius, s.reduced_prime_fields, s.embeds_in_fp_power, s.max_ideal_product, s.residue_degrees
            ));
        }
        json["conditions"] = Value::Array(suites.iter().map(ToJson::to_json).collect());
    }
    Ok(Report::new(json, text)
        .table(vec!["p", "residues", "condition_1", "condition_2", "witness", "witness_power"], rows)
        .negative(!report.overall))
}

fn strs(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

fn split(spec: &DomainSpec, bound: u64) -> Result<Report> {
    let r = numthm_split_analysis(quad_radicand(spec)?, bound)?;
    let mut text = format!("Q(sqrt {}), disc {}, p <= {}\n", r.d, r.disc, r.bound);
    let mut rows = Vec::new();
    for s in &r.primes {
        let ideals: Vec<String> = s.ideals.iter().map(ToString::to_string).collect();
        text.push_str(&format!("  {:>5} {:<8} ({}) {}\n", s.p, s.splitting.as_str(), s.kronecker, ideals.join(" * ")));
        rows.push(vec![
            s.p.to_string(),
            s.kronecker.to_string(),
            s.splitting.as_str().to_string(),
            s.root_count.to_string(),
            ideals.join(" "),
            s.residue_sizes.iter().map(u64::to_string).collect::<Vec<_>>().join(" "),
            s.prime_fields.to_string(),
            s.consistent.to_string(),
        ]);
    }
    text.push_str(&format!("split: {:?}\nconsistent: {}\n", r.split, r.consistent));
    Ok(Report::new(r.to_json(), text).table(
        vec!["p", "kronecker", "splitting", "root_count", "ideals", "residue_sizes", "prime_fields", "consistent"],
        rows,
    ))
}

fn w_table(kmax: u64, nmax: u64) -> Result<Report> {
    if kmax < 2 {
        bail!("--kmax must be at least 2");
    }
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for k in 2..=kmax {
        for n in 0..=nmax {
            let w = w_u64(k, n);
            rows.push(vec![k.to_string(), n.to_string(), w.to_string()]);
            entries.push(json!({"k": k, "n": n, "w": w}));
        }
    }
    let mut text = format!("{:>6}", "n\\k");
    for k in 2..=kmax {
        text.push_str(&format!(" {k:>6}"));
    }
    text.push('\n');
    for n in 0..=nmax {
        text.push_str(&format!("{n:>6}"));
        for k in 2..=kmax {
            text.push_str(&format!(" {:>6}", w_u64(k, n)));
        }
        text.push('\n');
    }
    Ok(Report::new(json!({"kmax": kmax, "nmax": nmax, "table": entries}), text).table(vec!["k", "n", "w"], rows))
}
