//! Acceptance gate. Run with `--nocapture` to see one line per criterion.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use softclass::codec::{parse_mapping, parse_soft_set, Canonical, ContextRegistry};
use softclass::demo;
use softclass::oracle::{
    check_law, class_mapping_count, enumerate_class_mappings, enumerate_soft_sets, run_exhaustive,
    search_counterexample_among, search_within, soft_set_count, sweep_exhaustive, Bounds, LawId,
    Verdict,
};
use softclass::{
    combine_pointwise, ClassMapping, CombineOp, Context, MapMode, ResultMode, SoftSet,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ctx1() -> Arc<Context> {
    Arc::new(Context::new(["a", "b", "c"], ["e1", "e2", "e3", "e4"]).unwrap())
}

fn ctx2() -> Arc<Context> {
    Arc::new(Context::new(["x", "y", "z"], ["e1p", "e2p", "e3p"]).unwrap())
}

fn m1() -> ClassMapping {
    ClassMapping::new(
        &ctx1(),
        &ctx2(),
        [("a", "y"), ("b", "z"), ("c", "y")],
        [("e1", "e3p"), ("e2", "e3p"), ("e3", "e2p"), ("e4", "e3p")],
        MapMode::Strict,
    )
    .unwrap()
}

fn soft(ctx: &Arc<Context>, entries: &[(&str, &[&str])]) -> SoftSet {
    SoftSet::new(ctx, entries.iter().map(|(k, v)| (*k, v.iter()))).unwrap()
}

fn paper_pair() -> [SoftSet; 2] {
    let x = ctx1();
    [
        soft(
            &x,
            &[
                ("e1", &["c"]),
                ("e2", &["b", "c"]),
                ("e3", &["a", "b", "c"]),
            ],
        ),
        soft(
            &x,
            &[
                ("e1", &["a"]),
                ("e2", &["a", "c"]),
                ("e3", &["b"]),
                ("e4", &["b", "c"]),
            ],
        ),
    ]
}

fn ac1_worked_example() -> Outcome {
    let f = m1();
    let fa = soft(
        f.source(),
        &[("e2", &[]), ("e3", &["a"]), ("e4", &["a", "b", "c"])],
    );
    let image = f.image(&fa, ResultMode::Raw).map_err(|e| e.to_string())?;
    let expected = soft(f.target(), &[("e2p", &["y"]), ("e3p", &["y", "z"])]);
    ensure(image == expected, format!("image {image} != {expected}"))?;

    let gc = soft(f.target(), &[("e1p", &["x", "z"]), ("e2p", &["y"])]);
    let pre = f
        .preimage(&gc, ResultMode::Raw)
        .map_err(|e| e.to_string())?;
    let expected = soft(f.source(), &[("e3", &["a", "c"])]);
    ensure(pre == expected, format!("preimage {pre} != {expected}"))?;
    Ok(format!("f(F,A) = {image}, f⁻¹(G,C) = {pre}"))
}

fn ac2_counterexamples() -> Outcome {
    let f = m1();
    let [a, b] = paper_pair();
    let full = ResultMode::Full;
    let err = |e: softclass::Error| e.to_string();
    let of_meet = f
        .image(&a.intersection(&b).map_err(err)?, full)
        .map_err(err)?;
    let meet_of = combine_pointwise(
        &f.image(&a, full).map_err(err)?,
        &f.image(&b, full).map_err(err)?,
        CombineOp::Intersection,
    )
    .map_err(err)?;
    let y = f.target();
    ensure(
        of_meet == soft(y, &[("e1p", &[]), ("e2p", &["z"]), ("e3p", &["y"])]),
        format!("f(F∩G) = {of_meet}"),
    )?;
    ensure(
        meet_of == soft(y, &[("e1p", &[]), ("e2p", &["z"]), ("e3p", &["y", "z"])]),
        format!("f(F)∩f(G) = {meet_of}"),
    )?;
    ensure(
        of_meet.is_soft_subset(&meet_of).unwrap(),
        "f(F∩G) ⊄ f(F)∩f(G)",
    )?;
    ensure(
        !meet_of.is_soft_subset(&of_meet).unwrap(),
        "inclusion is not strict",
    )?;

    let image_x = f
        .image(&SoftSet::full_absolute(f.source()), full)
        .map_err(err)?;
    ensure(
        !SoftSet::full_absolute(y).is_soft_subset(&image_x).unwrap(),
        format!("Ỹ ⊆ f(X̃) = {image_x}"),
    )?;
    Ok(format!("{of_meet} ⊊ {meet_of}; Ỹ ⊄ {image_x}"))
}

fn ac3_theorem_suite() -> Outcome {
    let started = Instant::now();
    let report =
        sweep_exhaustive(Bounds::uniform(2), &LawId::THEOREMS).map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    ensure(report.laws.len() == 10, "missing laws")?;
    ensure(
        report.violation_count() == 0,
        format!("{} violations", report.violation_count()),
    )?;
    ensure(
        report.laws.iter().all(|l| l.instances > 0),
        "a law was never exercised",
    )?;

    let (x, y) = Bounds::uniform(2).contexts().unwrap();
    let largest = run_exhaustive(&x, &y, &LawId::THEOREMS).map_err(|e| e.to_string())?;
    let l3 = largest.get(LawId::L3).unwrap().instances;
    ensure(
        l3 == 16 * 25 * 25,
        format!("L3 instances at (2,2,2,2): {l3}"),
    )?;
    ensure(
        elapsed < Duration::from_secs(30),
        format!("took {elapsed:?}"),
    )?;
    let total: u64 = report.laws.iter().map(|l| l.instances).sum();
    Ok(format!(
        "0 violations over {total} instances, {l3} per binary law at the largest size, {elapsed:.2?}"
    ))
}

fn ac4_strictness() -> Outcome {
    let mut found = Vec::new();
    for law in [LawId::N1, LawId::N2] {
        let (size, w) = search_within(law, Bounds::uniform(3))
            .map_err(|e| e.to_string())?
            .ok_or(format!("no {law} witness within size 3"))?;
        ensure(w.verdict == Verdict::Violated, "witness not violated")?;
        ensure(
            w.recheck().unwrap().verdict == Verdict::Violated,
            "witness did not recheck",
        )?;
        found.push(format!(
            "{law} at |X|={} |Y|={} |E|={} |E'|={}",
            size.universe, size.target_universe, size.attributes, size.target_attributes
        ));
    }

    let f = m1();
    let n1 = check_law(LawId::N1, &f, &[]).map_err(|e| e.to_string())?;
    ensure(n1.verdict == Verdict::Violated, "pinned N1 holds")?;
    let searched =
        search_counterexample_among(LawId::N1, [f.clone()], &[]).map_err(|e| e.to_string())?;
    ensure(searched.as_ref() == Some(&n1), "N1 search on M1 disagrees")?;
    let n2 = check_law(LawId::N2, &f, &paper_pair()).map_err(|e| e.to_string())?;
    ensure(n2.verdict == Verdict::Violated, "pinned N2 holds")?;
    ensure(n2.recheck().unwrap() == n2, "pinned N2 did not recheck")?;
    Ok(format!("{}; pinned instances violated", found.join(", ")))
}

fn ac5_medical_demo() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_softclass");
    let out = Command::new(bin)
        .args(["demo", "medical"])
        .output()
        .unwrap();
    ensure(out.status.success(), "demo failed")?;
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let doc = lines.next().unwrap_or_default();
    let image =
        parse_soft_set(doc.as_bytes(), &ContextRegistry::new()).map_err(|e| e.to_string())?;
    let expected = soft(
        &demo::cause_context(),
        &[("e1p", &["alpha", "beta"]), ("e2p", &["gamma"])],
    );
    ensure(image == expected, format!("image {image}"))?;
    let legend: Vec<&str> = lines.collect();
    ensure(
        legend
            == [
                "infrequent high potency = {acidity, blood pressure}",
                "frequent low potency = {fatigue}",
            ],
        format!("legend {legend:?}"),
    )?;

    let out = Command::new(bin)
        .args(["demo", "medical", "--strict"])
        .output()
        .unwrap();
    let err = String::from_utf8(out.stderr).unwrap();
    ensure(!out.status.success(), "strict demo succeeded")?;
    ensure(
        err.contains("e3"),
        format!("strict error does not name e3: {err}"),
    )?;
    Ok(format!("{image}; strict: {}", err.trim()))
}

fn ac6_codec() -> Outcome {
    let (x, _) = Bounds::uniform(2).contexts().unwrap();
    let registry = ContextRegistry::new();
    let mut count = 0;
    for s in enumerate_soft_sets(&x).unwrap() {
        let text = s.to_canonical();
        let back = parse_soft_set(text.as_bytes(), &registry).map_err(|e| e.to_string())?;
        ensure(
            back == s && back.to_canonical() == text,
            format!("round trip of {s}"),
        )?;
        count += 1;
    }
    ensure(count == 25, format!("{count} soft sets"))?;
    for mapping in [m1(), demo::knowledge(MapMode::Partial).unwrap()] {
        let text = mapping.to_canonical();
        let back = parse_mapping(text.as_bytes(), &registry).map_err(|e| e.to_string())?;
        ensure(
            back == mapping && back.to_canonical() == text,
            format!("round trip of {mapping:?}"),
        )?;
    }
    Ok("25 soft sets and 2 mappings byte-identical".into())
}

fn ac7_counts() -> Outcome {
    let mut seen = Vec::new();
    for ((x, e), expected) in [((1, 1), 3), ((1, 2), 9), ((2, 2), 25)] {
        let (ctx, _) = Bounds {
            universe: x,
            target_universe: 0,
            attributes: e,
            target_attributes: 0,
        }
        .contexts()
        .unwrap();
        let n = enumerate_soft_sets(&ctx).unwrap().count() as u64;
        ensure(
            n == expected && soft_set_count(x, e) == expected,
            format!("({x},{e}): {n}"),
        )?;
        seen.push(n.to_string());
    }
    let (x, y) = Bounds::uniform(2).contexts().unwrap();
    let m = enumerate_class_mappings(&x, &y).unwrap().count() as u64;
    ensure(
        m == 16 && class_mapping_count(&x, &y) == 16,
        format!("{m} mappings"),
    )?;
    Ok(format!("soft sets {}; mappings {m}", seen.join(", ")))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 7] = [
        (
            "AC1",
            "worked example image and inverse image",
            ac1_worked_example,
        ),
        ("AC2", "counterexample reproduction", ac2_counterexamples),
        ("AC3", "theorem suite up to size 2", ac3_theorem_suite),
        ("AC4", "strictness witnesses up to size 3", ac4_strictness),
        ("AC5", "medical demo", ac5_medical_demo),
        ("AC6", "codec round trip", ac6_codec),
        ("AC7", "enumeration counts", ac7_counts),
    ];
    let mut failed = Vec::new();
    for (id, name, run) in criteria {
        match run() {
            Ok(detail) => println!("{id} PASS  {name}: {detail}"),
            Err(why) => {
                println!("{id} FAIL  {name}: {why}");
                failed.push(id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
