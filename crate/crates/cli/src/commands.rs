use std::fmt::Write as _;
use std::path::Path;

use groupomega::group::{conjugacy_class_count, quotient};
use groupomega::group_algebra::ideal_powers;
use groupomega::jennings::{jennings_ideal_dims, p_degrees_of_series, p_lower_central_series};
use groupomega::matchings::{cyclic_border, extend_matching, pgroup_chain_border, MatchingViolation};
use groupomega::slice_bounds::{
    classify_family, degree_ideal_bound, delta, delta_prime_trend, hoeffding_bound, ideal_bound, nilpotent_bound,
    HypothesisCheck,
};
use groupomega::tensor_rank::{flat_rank_exact, slice_rank_exact};
use groupomega::tpp_omega::{
    char_degrees, instance_from_json, nec_tpp_check, omega_solve, packing_check, validate_degrees, verify_stpp,
    verify_tpp,
};
use groupomega::young::{
    binomial_bound_check, parse_shapes, shape_nec_tpp, shape_ratio, subgroup_order_ratio, theorem_young_scan,
    young_order, LatticeShape,
};
use groupomega::{
    AnyMatching, Budget, Element, Group, GroupSpec, PDegreeVector, Subgroup, Tensor3,
};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::report::{Failure, Report};

type Out = Result<Report, Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn parse_group(spec: &str) -> Result<(GroupSpec, Group), Failure> {
    let s = GroupSpec::parse(spec)?;
    let g = s.build()?;
    Ok((s, g))
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

fn ratio(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

fn big(x: &BigUint) -> Value {
    Value::String(x.to_string())
}

fn rational_arg(s: &str) -> Result<BigRational, Failure> {
    s.parse()
        .or_else(|_| s.parse::<num_bigint::BigInt>().map(BigRational::from_integer))
        .or_else(|_| usage(format!("`{s}` is not a rational number")))
}

fn list<T: ToString>(v: impl IntoIterator<Item = T>) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn degrees_or_group(
    group: Option<&str>,
    p: Option<u64>,
    degrees: Option<&str>,
) -> Result<(Option<Group>, PDegreeVector), Failure> {
    match (group, degrees) {
        (Some(_), Some(_)) => usage("give either a group or --degrees, not both"),
        (None, None) => usage("a group or --degrees is required"),
        (None, Some(d)) => Ok((None, d.parse()?)),
        (Some(spec), None) => {
            let p = p.ok_or_else(|| Failure::Usage("-p <prime> is required with a group".into()))?;
            let (_, g) = parse_group(spec)?;
            let series = p_lower_central_series(&g, p)?;
            Ok((Some(g), p_degrees_of_series(&series)))
        }
    }
}

pub fn group_info(spec: &str) -> Out {
    let (s, g) = parse_group(spec)?;
    let classes = conjugacy_class_count(&g);
    let center = g.center().len();
    let json = json!({
        "group": s.to_string(),
        "order": g.order(),
        "abelian": g.is_abelian(),
        "exponent": g.exponent(),
        "classes": classes,
        "centerOrder": center,
        "generators": g.generators().iter().map(|e| e.index()).collect::<Vec<_>>(),
        "backend": if g.is_permutation_backend() { "permutation" } else { "table" },
    });
    let text = format!(
        "group      {s}\norder      {}\nabelian    {}\nexponent   {}\nclasses    {classes}\ncenter     {center}\n",
        g.order(),
        g.is_abelian(),
        g.exponent()
    );
    Ok(Report::new(json, text))
}

fn hypothesis_json(h: &Option<HypothesisCheck>) -> Value {
    match h {
        None => Value::Null,
        Some(h) => json!({
            "constant": ratio(&h.constant),
            "holds": h.holds,
            "deltaLowerBound": ratio(&h.delta_lower_bound),
            "boundMet": h.bound_met,
        }),
    }
}

pub fn jennings(
    group: Option<&str>,
    p: Option<u64>,
    degrees: Option<&str>,
    max_variance: Option<&str>,
    expectation: Option<&str>,
    max_length: Option<usize>,
) -> Out {
    let (g, r) = degrees_or_group(group, p, degrees)?;
    let mut json = json!({
        "p": r.p,
        "pDegrees": r.r,
        "idealDims": jennings_ideal_dims(&r).iter().map(big).collect::<Vec<_>>(),
    });
    let mut text = format!("p-degrees  {r}\n");
    if let (Some(g), Some(spec)) = (&g, group) {
        let series = p_lower_central_series(g, r.p)?;
        let orders: Vec<usize> = series.groups.iter().map(Subgroup::len).collect();
        json["group"] = json!(spec);
        json["seriesOrders"] = json!(orders);
        writeln!(text, "series     {}", list(&orders)).unwrap();
    }
    writeln!(text, "dim I^k    {}", list(jennings_ideal_dims(&r))).unwrap();
    if max_variance.is_some() || expectation.is_some() || max_length.is_some() {
        let m = max_variance.map(rational_arg).transpose()?;
        let c = expectation.map(rational_arg).transpose()?;
        let cl = classify_family(&r, m, c, max_length)?;
        json["classification"] = json!({
            "mean": ratio(&cl.mean),
            "variance": ratio(&cl.variance),
            "ell": cl.ell,
            "boundedVariance": hypothesis_json(&cl.bounded_variance),
            "linearExpectation": hypothesis_json(&cl.linear_expectation),
            "boundedLength": hypothesis_json(&cl.bounded_length),
            "hypothesesHold": cl.hypotheses_hold(),
        });
        writeln!(text, "mean       {}\nvariance   {}", cl.mean, cl.variance).unwrap();
        for (name, h) in [
            ("variance", &cl.bounded_variance),
            ("expectation", &cl.linear_expectation),
            ("length", &cl.bounded_length),
        ] {
            if let Some(h) = h {
                writeln!(
                    text,
                    "{name:<11}{} (constant {}, implies δ_G >= {}, met: {})",
                    if h.holds { "holds" } else { "fails" },
                    h.constant,
                    h.delta_lower_bound,
                    h.bound_met
                )
                .unwrap();
            }
        }
    }
    Ok(Report::new(json, text))
}

pub fn ideal_dims(spec: &str, p: u64, dump_basis: bool) -> Out {
    let (s, g) = parse_group(spec)?;
    let field = groupomega::PrimeField::new(p)?;
    let chain = ideal_powers(&g, field);
    let dims = chain.dims();
    let mut json = json!({
        "group": s.to_string(),
        "p": p,
        "dims": dims,
        "nilpotent": chain.nilpotent,
    });
    let mut text = format!("dim I^k    {}\nnilpotent  {}\n", list(&dims), chain.nilpotent);
    if dump_basis {
        let bases: Vec<String> = chain.powers.iter().map(|v| v.to_text()).collect();
        for (k, b) in bases.iter().enumerate() {
            write!(text, "# I^{k}\n{b}").unwrap();
        }
        json["bases"] = json!(bases);
    }
    Ok(Report::new(json, text))
}

pub fn slice_bound(group: Option<&str>, p: Option<u64>, degrees: Option<&str>) -> Out {
    if let (Some(spec), None) = (group, degrees) {
        let p = p.ok_or_else(|| Failure::Usage("-p <prime> is required".into()))?;
        let (_, g) = parse_group(spec)?;
        let r = ideal_bound(&g, p)?;
        let json = json!({
            "order": big(&BigUint::from(r.order)),
            "pDegrees": r.p_degrees.as_ref().map(|d| json!(d.r)),
            "deltaG": r.delta.as_ref().map(|d| ratio(&d.delta_g)),
            "deltaPrimeG": r.delta.as_ref().map(|d| ratio(&d.delta_prime_g)),
            "hoeffding": r.hoeffding,
            "idealExact": big(&BigUint::from(r.ideal_exact)),
            "argmin": [r.argmin.0, r.argmin.1],
            "trivial": big(&BigUint::from(r.trivial)),
        });
        let mut text = format!("order      {}\n", r.order);
        if let (Some(d), Some(dl), Some(h)) = (&r.p_degrees, &r.delta, r.hoeffding) {
            write!(
                text,
                "p-degrees  {}\nδ_G        {}\nδ'_G       {}\ntail bound {h:.6}\n",
                list(&d.r),
                dl.delta_g,
                dl.delta_prime_g
            )
            .unwrap();
        }
        writeln!(text, "ideal      {} at (a, b) = ({}, {})", r.ideal_exact, r.argmin.0, r.argmin.1).unwrap();
        return Ok(Report::new(json, text));
    }
    let (_, r) = degrees_or_group(group, p, degrees)?;
    let d = delta(&r)?;
    let order = BigUint::from(r.p).pow(r.n() as u32);
    let h = hoeffding_bound(&order, &d.delta_g);
    let (exact, split) = degree_ideal_bound(&r);
    let json = json!({
        "order": big(&order),
        "pDegrees": r.r,
        "deltaG": ratio(&d.delta_g),
        "deltaPrimeG": ratio(&d.delta_prime_g),
        "hoeffding": h,
        "idealExact": big(&exact),
        "argmin": [split.0, split.1],
        "trivial": big(&order),
    });
    let text = format!(
        "order      {order}\np-degrees  {}\nδ_G        {}\nδ'_G       {}\ntail bound {h:.6}\nideal      {exact} at (a, b) = ({}, {})\n",
        list(&r.r),
        d.delta_g,
        d.delta_prime_g,
        split.0,
        split.1
    );
    Ok(Report::new(json, text))
}

pub fn nilpotent(spec: &str) -> Out {
    let s = GroupSpec::parse(spec)?;
    let b = nilpotent_bound(&s)?;
    let per: Vec<Value> = b
        .per_prime
        .iter()
        .map(|x| {
            json!({
                "p": x.p,
                "sylowOrder": x.sylow_order,
                "sylowBound": x.sylow_bound,
                "extended": big(&BigUint::from(x.extended)),
            })
        })
        .collect();
    let json = json!({
        "group": s.to_string(),
        "order": big(&BigUint::from(b.order)),
        "bound": big(&BigUint::from(b.bound)),
        "prime": b.prime,
        "perPrime": per,
    });
    let mut text = format!("order      {}\nbound      {} (via p = {})\n", b.order, b.bound, b.prime);
    for x in &b.per_prime {
        writeln!(
            text,
            "  p = {}: Sylow order {}, bound {}, times index {}",
            x.p, x.sylow_order, x.sylow_bound, x.extended
        )
        .unwrap();
    }
    Ok(Report::new(json, text))
}

pub fn tensor_rank(path: &Path, flat: bool) -> Out {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let t = Tensor3::from_text(&text)?;
    if flat {
        let c = flat_rank_exact(&t)?;
        let json = json!({
            "flatRank": c.value,
            "codim": c.codim,
            "maxRank": c.max_rank,
            "witness": c.v.to_text(),
        });
        let text = format!(
            "flat rank  {} = codim {} + max rank {}\nsubspace V\n{}",
            c.value,
            c.codim,
            c.max_rank,
            c.v.to_text()
        );
        Ok(Report::new(json, text))
    } else {
        let c = slice_rank_exact(&t)?;
        let json = json!({
            "sliceRank": c.value,
            "witness": { "A": c.a.to_text(), "B": c.b.to_text(), "C": c.c.to_text() },
        });
        let text = format!(
            "slice rank {} = codim A {} + codim B {} + codim C {}\nA\n{}B\n{}C\n{}",
            c.value,
            c.a.codim(),
            c.b.codim(),
            c.c.codim(),
            c.a.to_text(),
            c.b.to_text(),
            c.c.to_text()
        );
        Ok(Report::new(json, text))
    }
}

pub fn tpp_verify(path: &Path, budget: Budget) -> Out {
    let (spec, inst) = instance_from_json(&read_json(path)?)?;
    let g = spec.build()?;
    let mut results = Vec::new();
    let mut text = String::new();
    let mut all = true;
    for (i, t) in inst.triples.iter().enumerate() {
        let v = verify_tpp(&g, t, budget)?;
        let nec = nec_tpp_check(&g, t)?;
        all &= v.holds();
        let (s, tt, u) = t.sizes();
        writeln!(text, "triple {i} ({s}, {tt}, {u}): {v}; nec-TPP vacuous: {}", nec.vacuous).unwrap();
        results.push(json!({
            "holds": v.holds(),
            "counterexample": v.witness().map(|w| json!([w.s.index(), w.t.index(), w.u.index()])),
            "necTpp": { "logRatio": nec.log_ratio, "classes": big(&nec.classes), "vacuous": nec.vacuous },
        }));
    }
    let json = json!({ "group": spec.to_string(), "holds": all, "triples": results });
    Ok(Report::new(json, text).with_verdict(all))
}

pub fn stpp_verify(path: &Path, budget: Budget) -> Out {
    let (spec, inst) = instance_from_json(&read_json(path)?)?;
    let g = spec.build()?;
    let v = verify_stpp(&g, &inst, budget)?;
    let pack = packing_check(g.order(), &inst);
    let json = json!({
        "group": spec.to_string(),
        "holds": v.holds(),
        "counterexample": v.witness().map(|w| w.to_string()),
        "packing": {
            "sums": [pack.sums.0.to_string(), pack.sums.1.to_string(), pack.sums.2.to_string()],
            "withinBound": pack.within_bound,
            "ratios": [ratio(&pack.ratios.0), ratio(&pack.ratios.1), ratio(&pack.ratios.2)],
        },
    });
    let text = format!(
        "STPP       {v}\npacking    ΣST={} ΣTU={} ΣSU={} (|G| = {}, within bound: {})\n",
        pack.sums.0,
        pack.sums.1,
        pack.sums.2,
        g.order(),
        pack.within_bound
    );
    Ok(Report::new(json, text).with_verdict(v.holds()))
}

pub fn omega(path: &Path, degrees: Option<&str>) -> Out {
    let (spec, inst) = instance_from_json(&read_json(path)?)?;
    let d: Vec<BigUint> = match degrees {
        Some(text) => {
            let d = text
                .split(',')
                .map(|x| x.trim().parse::<BigUint>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| Failure::Usage(format!("bad degree list `{text}`")))?;
            validate_degrees(spec.order(), &d)?;
            d
        }
        None => char_degrees(&spec)?,
    };
    let products: Vec<BigUint> = inst
        .triples
        .iter()
        .map(|t| {
            let (s, tt, u) = t.sizes();
            BigUint::from(s) * tt * u
        })
        .collect();
    let sol = omega_solve(&products, &d)?;
    let json = json!({
        "group": spec.to_string(),
        "omegaStar": sol.omega_star,
        "givesBound": sol.gives_bound,
        "monotone": sol.monotone,
        "signChanges": sol.sign_changes,
        "infeasible": sol.infeasible,
    });
    let mut text = if sol.gives_bound {
        format!("ω <= {:.9}\n", sol.omega_star)
    } else {
        "no bound below 3\n".to_string()
    };
    if sol.infeasible {
        text.push_str("warning: the inequality already fails at ω = 2; not a genuine (S)TPP instance\n");
    }
    if !sol.monotone {
        writeln!(text, "warning: sign changes at {}", list(&sol.sign_changes)).unwrap();
    }
    Ok(Report::new(json, text))
}

fn matching_report(spec: &GroupSpec, g: &Group, m: &AnyMatching, budget: Budget) -> Out {
    let v = m.verify(g, budget)?;
    let mut json = m.to_json(spec);
    json["cardinality"] = json!(m.cardinality());
    json["verified"] = json!(v.holds());
    json["counterexample"] = match v.witness() {
        None => Value::Null,
        Some(w) => violation_json(w),
    };
    let kind = if m.is_border() { "border matching" } else { "matching" };
    let text = format!("{kind} of cardinality {} in {spec}: {v}\n", m.cardinality());
    Ok(Report::new(json, text).with_verdict(v.holds()))
}

fn violation_json(w: &MatchingViolation) -> Value {
    match w {
        MatchingViolation::Diagonal { i } => json!({ "kind": "diagonal", "i": i }),
        MatchingViolation::Cross { i, j, k } => json!({ "kind": "cross", "i": i, "j": j, "k": k }),
        MatchingViolation::Positivity { i, j, k, weight } => {
            json!({ "kind": "positivity", "i": i, "j": j, "k": k, "weight": weight.to_string() })
        }
    }
}

pub fn matching_verify(path: &Path, budget: Budget) -> Out {
    let (spec, m) = AnyMatching::from_json(&read_json(path)?)?;
    let g = spec.build()?;
    matching_report(&spec, &g, &m, budget)
}

pub fn matching_cyclic(m: usize, budget: Budget) -> Out {
    let spec = GroupSpec::Cyclic(m);
    let g = spec.build()?;
    matching_report(&spec, &g, &AnyMatching::Border(cyclic_border(m)?), budget)
}

pub fn matching_extend(spec: &str, normal: &str, sub: &Path, quot: &Path, budget: Budget) -> Out {
    let (s, g) = parse_group(spec)?;
    let elems = normal
        .split(',')
        .map(|x| x.trim().parse::<usize>().map(Element::new))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::Usage(format!("bad element list `{normal}`")))?;
    if let Some(e) = elems.iter().find(|e| e.index() >= g.order()) {
        return usage(format!("element {e} outside the group"));
    }
    let n = Subgroup::from_elements(&g, &elems)?;
    let q = quotient(&g, &n)?;
    let (_, m_n) = AnyMatching::from_json(&read_json(sub)?)?;
    let (_, m_q) = AnyMatching::from_json(&read_json(quot)?)?;
    let out = extend_matching(&g, &q, &m_n, &m_q, budget)?;
    matching_report(&s, &g, &out, budget)
}

pub fn matching_chain(spec: &str, p: u64, budget: Budget) -> Out {
    let (s, g) = parse_group(spec)?;
    let m = pgroup_chain_border(&g, p, budget)?;
    matching_report(&s, &g, &AnyMatching::Border(m), budget)
}

fn shape_json(shape: &LatticeShape) -> Value {
    json!({
        "shape": shape.kind.to_string(),
        "n": shape.n(),
        "blockSizes": shape.line_partitions.iter().map(|p| p.block_sizes()).collect::<Vec<_>>(),
        "subgroupOrders": shape.line_partitions.iter().map(|p| big(&young_order(p))).collect::<Vec<_>>(),
    })
}

pub fn young_shape(text: &str) -> Out {
    let shape = parse_shapes(text)?.remove(0);
    let r = shape_ratio(&shape)?;
    let nec = shape_nec_tpp(&shape);
    let mut json = shape_json(&shape);
    json["logRatio"] = json!(r.log_ratio);
    json["necTppVacuous"] = json!(nec.vacuous);
    let text = format!(
        "{}: n = {}, line sizes {}\nsubgroup order {}\nln(n!/(|H1||H2||H3|)^(2/3)) = {:.6}\nnec-TPP vacuous: {}\n",
        shape.kind,
        shape.n(),
        list(shape.line_partitions[0].block_sizes()),
        young_order(&shape.line_partitions[0]),
        r.log_ratio,
        nec.vacuous
    );
    Ok(Report::new(json, text))
}

pub fn young_ratio(shapes: &[String]) -> Out {
    let shapes: Vec<LatticeShape> = match shapes {
        [] => return usage("give --shape (once or twice), or --hexagon and --triangle"),
        [_] | [_, _] => shapes
            .iter()
            .map(|s| parse_shapes(s).map(|mut v| v.remove(0)))
            .collect::<Result<_, _>>()?,
        _ => return usage("at most two shapes"),
    };
    if let [a, b] = &shapes[..] {
        let r = subgroup_order_ratio(a, b);
        let approx = r.to_f64().unwrap_or(f64::NAN);
        let json = json!({
            "numerator": shape_json(a),
            "denominator": shape_json(b),
            "ratio": ratio(&r),
            "approx": approx,
        });
        let text = format!("|H({})| / |H({})| = {r} ≈ {approx:.6}\n", a.kind, b.kind);
        return Ok(Report::new(json, text));
    }
    let r = shape_ratio(&shapes[0])?;
    let mut json = shape_json(&shapes[0]);
    json["logRatio"] = json!(r.log_ratio);
    let text = format!("{}: ln(n!/(|H1||H2||H3|)^(2/3)) = {:.6}\n", shapes[0].kind, r.log_ratio);
    Ok(Report::new(json, text))
}

pub fn young_scan(shapes: &str, c: f64, d: f64) -> Out {
    let rows = theorem_young_scan(&parse_shapes(shapes)?, c, d)?;
    let all = rows.iter().all(|r| r.passes);
    let mut text = format!("{:<14}{:>6}{:>14}{:>14}{:>14}\n", "shape", "n", "ln ratio", "threshold", "margin");
    for r in &rows {
        writeln!(
            text,
            "{:<14}{:>6}{:>14.4}{:>14.4}{:>14.4}{}",
            r.shape.to_string(),
            r.n,
            r.log_ratio,
            r.threshold,
            r.margin,
            if r.passes { "" } else { "  FAIL" }
        )
        .unwrap();
    }
    let json = json!({
        "c": c,
        "d": d,
        "allPass": all,
        "rows": rows.iter().map(|r| json!({
            "shape": r.shape.to_string(),
            "n": r.n,
            "logRatio": r.log_ratio,
            "threshold": r.threshold,
            "margin": r.margin,
            "passes": r.passes,
        })).collect::<Vec<_>>(),
    });
    Ok(Report::new(json, text).with_verdict(all))
}

pub fn binomial(n: u64, t: Option<u64>) -> Out {
    let pairs: Vec<(u64, u64)> = match t {
        Some(t) => vec![(n, t)],
        None => (2..=n).flat_map(|m| (1..m).map(move |t| (m, t))).collect(),
    };
    let mut failures = Vec::new();
    for &(m, t) in &pairs {
        if !binomial_bound_check(m, t)? {
            failures.push(json!([m, t]));
        }
    }
    let holds = failures.is_empty();
    let json = json!({ "checked": pairs.len(), "holds": holds, "failures": failures });
    let text = format!("checked {} pairs: {}\n", pairs.len(), if holds { "all hold" } else { "some fail" });
    Ok(Report::new(json, text).with_verdict(holds))
}

pub fn delta_prime(cs: &str, ells: Option<&str>) -> Out {
    let cs = cs
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::Usage(format!("bad exponent list `{cs}`")))?;
    let ells: Vec<u64> = match ells {
        Some(text) => text
            .split(',')
            .map(|x| x.trim().parse::<u64>().ok().filter(|&l| l >= 2))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Failure::Usage(format!("bad length list `{text}` (lengths must be >= 2)")))?,
        None => (4..=16).map(|k| 1u64 << k).collect(),
    };
    let tables: Vec<_> = cs.iter().map(|&c| delta_prime_trend(&ells, c)).collect();
    let mut text = String::new();
    for t in &tables {
        writeln!(text, "c = {}: δ' = {}, normalized band {:.4}", t.c, t.class, t.band).unwrap();
        for r in &t.rows {
            writeln!(text, "  ℓ = {:<8} δ' = {:<14.8} normalized {:.6}", r.ell, r.delta_prime, r.normalized).unwrap();
        }
    }
    let json = json!({
        "tables": tables.iter().map(|t| json!({
            "c": t.c,
            "class": t.class.to_string(),
            "band": t.band,
            "rows": t.rows.iter().map(|r| json!({
                "ell": r.ell, "deltaPrime": r.delta_prime, "normalized": r.normalized,
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    Ok(Report::new(json, text))
}
