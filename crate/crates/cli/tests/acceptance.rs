//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use common::{coloring_determinant, corpus, pretzel_grid, LEFT_TREFOIL, RIGHT_TREFOIL};
use kinkiness::bounds::{
    audit_crossing_change_sequence, braid_kappa_plus_lb, chi_upper_bound, diagram_kappa_minus_lb,
    diagram_kappa_plus_lb, positive_braid_profile,
};
use kinkiness::braiding::{braid_from_diagram, is_braided_form, vogel_step};
use kinkiness::families::{
    pretzel_classify, pretzel_diagram, pretzel_invariants, square_twist_generators, torus_braid, twist_invariants,
    twist_knot_diagram, PretzelParams,
};
use kinkiness::poly::LaurentPoly;
use kinkiness::{BraidWord, OrientedDiagram, Sign};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

const TORUS_BUDGET: Duration = Duration::from_secs(1);
const BRAIDING_BUDGET: Duration = Duration::from_secs(10);
const RANDOM_BRAIDS: usize = 200;
const SCAN_REPEATS: usize = 3;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn pd(text: &str) -> OrientedDiagram {
    text.parse().expect("fixture diagrams parse")
}

fn torus_sharpness() -> Check {
    let start = Instant::now();
    let mut count = 0;
    for p in 2..=7i64 {
        for q in 2..=7i64 {
            let Ok(w) = torus_braid(p, q) else { continue };
            let genus = ((p - 1) * (q - 1) / 2) as u64;
            let bound = braid_kappa_plus_lb(&w).kappa_plus_lb;
            ensure!(bound == genus, "T({p},{q}): bound {bound}, expected {genus}");
            let profile = positive_braid_profile(&w).map_err(|e| e.to_string())?;
            ensure!(
                profile.genus == genus
                    && profile.unknotting == genus
                    && profile.u_plus == genus
                    && profile.kappa_plus == genus
                    && profile.kappa_minus == 0
                    && profile.u_minus == 0,
                "T({p},{q}): profile {profile:?}"
            );
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < TORUS_BUDGET, "took {elapsed:?}");
    Ok(format!("{count} torus knots in {elapsed:.2?}"))
}

fn trefoil_anchors() -> Check {
    let w: BraidWord = "B2: 1 1 1".parse().unwrap();
    let report = braid_kappa_plus_lb(&w);
    ensure!(report.kappa_plus_lb == 1, "bound {}", report.kappa_plus_lb);
    ensure!(chi_upper_bound(&w, 0) == -1, "chi(0) = {}", chi_upper_bound(&w, 0));
    ensure!(chi_upper_bound(&w, 1) == 1, "chi(1) = {}", chi_upper_bound(&w, 1));
    ensure!(!audit_crossing_change_sequence(&[Sign::Negative], &report).consistent, "negative change accepted");
    ensure!(audit_crossing_change_sequence(&[Sign::Positive], &report).consistent, "positive change rejected");
    Ok("bound 1, chi -1/1, audit rejects one negative change".into())
}

fn diagram_hand_checks() -> Check {
    let right = diagram_kappa_plus_lb(&pd(RIGHT_TREFOIL)).kappa_plus_lb;
    ensure!(right == 1, "right trefoil {right}");
    let left = pd(LEFT_TREFOIL);
    let left_bound = diagram_kappa_plus_lb(&left).kappa_plus_lb;
    let s_minus = left.seifert_data().s_minus;
    ensure!(left_bound == 0 && s_minus == 2, "left trefoil {left_bound}, s_minus {s_minus}");
    let kink = diagram_kappa_plus_lb(&pd("X+(1,2,2,1)")).kappa_plus_lb;
    ensure!(kink == 0, "kink {kink}");
    Ok("right 1, left 0 with s_minus 2, kink 0".into())
}

fn mirror_duality(corpus: &[(String, OrientedDiagram)]) -> Check {
    for (name, d) in corpus {
        let report = diagram_kappa_minus_lb(d);
        let mirror = diagram_kappa_plus_lb(&d.mirror());
        ensure!(
            report.kappa_minus_lb == Some(mirror.kappa_plus_lb) && report.raw_minus == Some(mirror.raw),
            "{name}"
        );
    }
    Ok(format!("{} diagrams", corpus.len()))
}

fn braiding_conservation(corpus: &[(String, OrientedDiagram)]) -> Check {
    let start = Instant::now();
    let mut checked = 0;
    let mut moves = 0;
    for (name, d) in corpus.iter().filter(|(_, d)| d.is_connected()) {
        let data = d.seifert_data();
        let form = braid_from_diagram(d).map_err(|e| format!("{name}: {e}"))?;
        ensure!(form.braid.exponent_sum() == data.writhe, "{name}: e != w");
        ensure!(form.braid.strands() == data.s, "{name}: strands != s");
        ensure!(form.braid.closure_components().components == data.components, "{name}: components");
        let mut current = d.clone();
        while !is_braided_form(&current) {
            let (next, _) = vogel_step(&current).map_err(|e| format!("{name}: {e}"))?;
            let (a, b) = (current.stats(), next.stats());
            ensure!(
                b.writhe == a.writhe
                    && b.x_plus == a.x_plus + 1
                    && b.x_minus == a.x_minus + 1
                    && next.seifert_data().s == current.seifert_data().s,
                "{name}: step changed writhe or s"
            );
            current = next;
            moves += 1;
        }
        checked += 1;
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < BRAIDING_BUDGET, "took {elapsed:?}");
    Ok(format!("{checked} diagrams, {moves} moves, {elapsed:.2?}"))
}

fn positive_core(corpus: &[(String, OrientedDiagram)]) -> Check {
    let mut checked = 0;
    for (name, d) in corpus {
        let data = d.seifert_data();
        if data.x_plus == 0 {
            continue;
        }
        let core = d.positive_core().map_err(|e| format!("{name}: {e}"))?;
        let core_data = core.seifert_data();
        ensure!(core.is_all_positive(), "{name}: core has a negative crossing");
        ensure!(core_data.s == data.s - data.s_minus, "{name}: circles");
        ensure!(core.crossing_count() == data.x_plus, "{name}: crossings");
        ensure!(Some(core_data.chi_s) == data.chi_q, "{name}: chi");
        checked += 1;
    }
    Ok(format!("{checked} diagrams with a positive crossing"))
}

fn pretzel_oracle() -> Check {
    let k = |p, q, r| PretzelParams::new(p, q, r).unwrap();
    let sig = pretzel_invariants(k(-9, 5, -9)).signature;
    ensure!(sig == 0, "signature K(-9,5,-9) = {sig}");
    let genus = pretzel_diagram(k(-9, 5, -9)).seifert_genus().map_err(|e| e.to_string())?;
    ensure!(genus.as_int() == Some(1), "surface genus {genus}");
    let trefoil = pretzel_invariants(k(1, 1, 1));
    ensure!(
        trefoil.alexander.equivalent(&LaurentPoly::new(0, vec![1, -1, 1]))
            && trefoil.determinant == 3
            && trefoil.signature == 2,
        "K(1,1,1): {trefoil:?}"
    );
    let grid = pretzel_grid(9);
    for &params in &grid {
        let trivial = pretzel_invariants(params).alexander == LaurentPoly::constant(1);
        ensure!(trivial == (params.pair_product_sum() == -1), "{params:?}");
    }
    let f = pretzel_classify(k(5, 7, -3));
    ensure!(f.alexander_trivial && f.infinite_order && f.not_positively_unknottable, "K(5,7,-3): {f:?}");
    Ok(format!("anchors hold, triviality criterion over {} parameter triples", grid.len()))
}

fn twist_knots() -> Check {
    for m in 1..=50 {
        let expected = 4 * m as u64 + 1;
        let closed = twist_invariants(m).map_err(|e| e.to_string())?;
        let diagram = coloring_determinant(&twist_knot_diagram(m).map_err(|e| e.to_string())?);
        ensure!(closed.determinant == expected && diagram == expected, "m = {m}: {} / {diagram}", closed.determinant);
        let k = closed.kappa_profile;
        ensure!(k.kappa_plus == 0 && k.kappa_minus == 0 && k.unknotting == 1, "m = {m}: {k:?}");
    }
    let generators = square_twist_generators(50);
    ensure!(generators == vec![2, 6, 12, 20, 30, 42], "generators {generators:?}");
    Ok("determinants 4m+1 for m <= 50 from both oracles".into())
}

fn random_braids() -> Check {
    let mut rng = common::rng(20);
    for _ in 0..RANDOM_BRAIDS {
        let w = common::random_braid(&mut rng, 6, 12);
        let d = w.closure_diagram();
        ensure!(w.closure_components().components == d.component_count(), "{w}: components");
        ensure!(d.seifert_data().s == w.strands(), "{w}: circles");
        ensure!(d.writhe() == w.exponent_sum(), "{w}: writhe");
    }
    Ok(format!("{RANDOM_BRAIDS} braids"))
}

fn scan_determinism() -> Check {
    let mut fixture = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    fixture.push("tests/fixtures/scan.tsv");
    let path = fixture.to_str().unwrap();
    for flags in [&[][..], &["--mirror", "--raw"], &["--format", "json", "--mirror"]] {
        let mut outputs = Vec::new();
        for _ in 0..SCAN_REPEATS {
            let out = Command::new(env!("CARGO_BIN_EXE_kinkiness"))
                .args(flags)
                .args(["scan", path])
                .output()
                .map_err(|e| e.to_string())?;
            ensure!(out.status.success(), "scan {flags:?} failed");
            outputs.push(out.stdout);
        }
        ensure!(outputs.windows(2).all(|w| w[0] == w[1]), "scan {flags:?} output differs between runs");
    }
    Ok(format!("{SCAN_REPEATS} runs per flag set are byte-identical"))
}

fn main() {
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("torus sharpness", Box::new(torus_sharpness)),
        ("trefoil anchors", Box::new(trefoil_anchors)),
        ("diagram bound hand checks", Box::new(diagram_hand_checks)),
        ("mirror duality", Box::new(|| mirror_duality(&corpus))),
        ("braiding conservation", Box::new(|| braiding_conservation(&corpus))),
        ("positive-core bookkeeping", Box::new(|| positive_core(&corpus))),
        ("pretzel oracle", Box::new(pretzel_oracle)),
        ("twist knots", Box::new(twist_knots)),
        ("oracle equivalence on random braids", Box::new(random_braids)),
        ("scan determinism", Box::new(scan_determinism)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("acceptance {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("acceptance {:>2} FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
