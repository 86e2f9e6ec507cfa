//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs under `cargo test` with its own main.

mod common;

use std::time::{Duration, Instant};

use common::{rank_q, support_i64};
use slackcert::cas::slack::{minor_generators, slack_ideal, symbolic_slack, toric_ideal, toric_ideal_bounded};
use slackcert::cas::{ideal_contains, ideal_equals, Budget};
use slackcert::certify::{certify_expression, certify_poset, verify_certificate, Expr, Outcome, Refusal};
use slackcert::graph::{support_blocks_at, vertex_split_condition, NonIncidenceGraph, SplitCondition};
use slackcert::linalg::{is_2level, support_rank};
use slackcert::order_polytope::{empty_filter_label, full_filter_label, order_polytope, FacetLabel};
use slackcert::polytope::{
    combinatorially_equivalent, dual, facet_product, facet_wedge, hypercube, join, point, product, simplex,
    vertex_split, vertex_sum, CombPolytope,
};
use slackcert::poset::{
    all_posets, all_posets_up_to, build_poset, op_direct_sum, op_join, op_ordinal_sum, op_partial_ordinal_sum,
    split_cover, split_maximal, split_minimal, Poset,
};
use slackcert::Error;

struct Verdict {
    passed: bool,
    summary: String,
}

fn ok(passed: bool, summary: impl Into<String>) -> Verdict {
    Verdict {
        passed,
        summary: summary.into(),
    }
}

fn main() {
    let criteria: Vec<(u32, &str, Duration, fn() -> Verdict)> = vec![
        (1, "order polytopes of chains and antichains", Duration::from_secs(1), c1),
        (2, "2-levelness of all posets up to 6 elements", Duration::from_secs(120), c2),
        (3, "poset and polytope operations commute", Duration::from_secs(600), c3),
        (4, "square: slack ideal equals toric ideal", Duration::from_secs(30), c4),
        (5, "pyramid over the square keeps its slack ideal", Duration::from_secs(120), c5),
        (6, "simplices have zero slack and toric ideals", Duration::from_secs(1), c6),
        (7, "vertex sum and vertex split support ranks", Duration::from_secs(1), c7),
        (8, "certifier soundness up to 7 elements", Duration::from_secs(900), c8),
        (9, "split-safety condition vs block detector", Duration::from_secs(60), c9),
        (10, "toric ideal contains slack ideal", Duration::from_secs(600), c10),
        (11, "3-antichain negative control", Duration::from_secs(5), c11),
    ];
    let mut failed = 0;
    for (n, name, limit, f) in criteria {
        let t = Instant::now();
        let out = f();
        let el = t.elapsed();
        let in_time = el <= limit;
        let pass = out.passed && in_time;
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {n:>2} {}: {name} | {} | {:.2}s (limit {}s){}",
            if pass { "PASS" } else { "FAIL" },
            out.summary,
            el.as_secs_f64(),
            limit.as_secs(),
            if in_time { "" } else { " over time" }
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

/// Support is a permutation matrix.
fn is_permutation(s: &[Vec<u8>]) -> bool {
    let n = s.len();
    s.iter().all(|r| r.len() == n && r.iter().filter(|&&x| x == 1).count() == 1)
        && (0..n).all(|j| s.iter().filter(|r| r[j] == 1).count() == 1)
}

fn c1() -> Verdict {
    let mut bad = Vec::new();
    for n in 1..=6 {
        let o = order_polytope(&Poset::chain(n));
        if !(o.dim() == n && o.num_vertices() == n + 1 && is_permutation(o.support())) {
            bad.push(format!("chain {n}"));
        }
        if !combinatorially_equivalent(&o, &simplex(n)) {
            bad.push(format!("chain {n} vs simplex"));
        }
    }
    for d in 1..=3 {
        let o = order_polytope(&Poset::antichain(d));
        // every facet misses exactly half the vertices of a cube
        let halves = o.support().iter().all(|r| r.iter().filter(|&&x| x == 1).count() == 1 << (d - 1));
        if !(o.num_vertices() == 1 << d && o.num_facets() == 2 * d && halves) {
            bad.push(format!("antichain {d}"));
        }
        if !combinatorially_equivalent(&o, &hypercube(d)) {
            bad.push(format!("antichain {d} vs cube"));
        }
    }
    ok(bad.is_empty(), format!("6 chains, 3 antichains, failures {bad:?}"))
}

fn c2() -> Verdict {
    let mut fails = 0;
    let mut n_posets = 0;
    for p in all_posets_up_to(6) {
        n_posets += 1;
        let o = order_polytope(&p);
        let s = support_i64(o.support());
        let r = rank_q(&s);
        let mut with_ones = s.clone();
        with_ones.push(vec![1; o.num_vertices()]);
        let ones_in_span = rank_q(&with_ones) == r;
        let oracle = r == p.len() + 1 && ones_in_span;
        if !oracle || !is_2level(&o) || support_rank(o.support()) != r {
            fails += 1;
        }
    }
    ok(fails == 0, format!("{n_posets} posets, {fails} failures"))
}

fn facet(p: &Poset, f: FacetLabel) -> String {
    f.render(p)
}

fn c3() -> Verdict {
    let mut checks = 0usize;
    let mut fails: Vec<String> = Vec::new();
    let mut check = |name: String, a: &CombPolytope, b: &CombPolytope| {
        checks += 1;
        if !combinatorially_equivalent(a, b) {
            fails.push(name);
        }
    };
    let small = all_posets_up_to(5);
    // unary: reversal, cover splits, extremal splits
    for p in &small {
        let o = order_polytope(p);
        check(format!("reverse {:?}", p.cover_labels()), &order_polytope(&p.reverse()), &o);
        for &(a, b) in p.covers() {
            let lhs = order_polytope(&split_cover(p, p.label(a), p.label(b)).unwrap());
            let rhs = facet_wedge(&o, &facet(p, FacetLabel::Cover(a, b))).unwrap();
            check(format!("split cover {a}<{b} of {:?}", p.cover_labels()), &lhs, &rhs);
        }
        for c in p.maximal_elements() {
            let lhs = order_polytope(&split_maximal(p, p.label(c)).unwrap());
            let rhs = facet_wedge(&o, &facet(p, FacetLabel::Max(c))).unwrap();
            check(format!("split max {c} of {:?}", p.cover_labels()), &lhs, &rhs);
        }
        for c in p.minimal_elements() {
            let lhs = order_polytope(&split_minimal(p, p.label(c)).unwrap());
            let rhs = facet_wedge(&o, &facet(p, FacetLabel::Min(c))).unwrap();
            check(format!("split min {c} of {:?}", p.cover_labels()), &lhs, &rhs);
        }
    }
    // binary: pairs with at most five elements between them
    for p in &small {
        for q0 in &small {
            if p.len() + q0.len() > 5 {
                continue;
            }
            let q = q0.relabel(|s| format!("q{s}")).unwrap();
            let (op, oq) = (order_polytope(p), order_polytope(&q));
            let tag = format!("{:?} / {:?}", p.cover_labels(), q.cover_labels());
            check(
                format!("join {tag}"),
                &order_polytope(&op_join(p, &q).unwrap()),
                &join(&op, &oq).unwrap(),
            );
            check(
                format!("direct sum {tag}"),
                &order_polytope(&op_direct_sum(p, &q).unwrap()),
                &product(&op, &oq).unwrap(),
            );
            if p.is_empty() || q.is_empty() {
                continue;
            }
            check(
                format!("ordinal sum {tag}"),
                &order_polytope(&op_ordinal_sum(p, &q).unwrap()),
                &vertex_sum(&op, &empty_filter_label(), &oq, &full_filter_label(&q)).unwrap(),
            );
            for a in p.maximal_elements() {
                for b in q.minimal_elements() {
                    let lhs = order_polytope(&op_partial_ordinal_sum(p, p.label(a), &q, q.label(b)).unwrap());
                    let rhs = facet_product(
                        &op,
                        &facet(p, FacetLabel::Max(a)),
                        &oq,
                        &facet(&q, FacetLabel::Min(b)),
                    )
                    .unwrap();
                    check(format!("partial ordinal sum {a},{b} {tag}"), &lhs, &rhs);
                }
            }
        }
    }
    let first: Vec<_> = fails.iter().take(3).collect();
    ok(
        fails.is_empty(),
        format!("{checks} equivalences, {} failures {first:?}", fails.len()),
    )
}

fn edge_map(base: &CombPolytope, big: &CombPolytope, wrap: impl Fn(&str) -> String) -> Vec<usize> {
    let gs = NonIncidenceGraph::new(base);
    let g = NonIncidenceGraph::new(big);
    gs.edges()
        .iter()
        .map(|&(f, v)| {
            let pf = big.facet_index(&wrap(&base.facets()[f])).unwrap();
            let pv = big.vertex_index(&wrap(&base.vertices()[v])).unwrap();
            g.edge_between(g.facet_node(pf), g.vertex_node(pv)).unwrap()
        })
        .collect()
}

fn c4() -> Verdict {
    let sq = hypercube(2);
    let b = Budget::default();
    let s = slack_ideal(&sq, b).unwrap();
    let t = toric_ideal(&sq).unwrap();
    let cycles = NonIncidenceGraph::new(&sq).chordless_cycles(None).unwrap();
    let principal = t.generators().len() == 1 && cycles.len() == 1 && cycles[0].len() == 8;
    let g = &t.generators()[0];
    // one binomial, every slack variable to the first power
    let shape = g.len() == 2 && g.total_degree() == 4 && g.support_vars().len() == 8;
    let eq = ideal_equals(&s, &t, b).unwrap();
    ok(principal && shape && eq, format!("toric generator {g}, equal {eq}"))
}

fn c5() -> Verdict {
    let sq = hypercube(2);
    let pyr = join(&point(), &sq).unwrap();
    let b = Budget::default();
    let ip = slack_ideal(&pyr, b).unwrap();
    let map = edge_map(&sq, &pyr, |l| format!("·∨[{l}]"));
    let is = slack_ideal(&sq, b).unwrap().embed(pyr.num_slack_variables(), &map);
    let eq = ideal_equals(&ip, &is, b).unwrap();
    ok(eq, format!("pyramid has {} slack variables, aligned equal {eq}", ip.nvars()))
}

fn c6() -> Verdict {
    let b = Budget::default();
    let mut bad = Vec::new();
    for d in 1..=5 {
        let s = simplex(d);
        let no_minors = minor_generators(&symbolic_slack(&s), d + 2).is_empty() && s.num_facets() < d + 2;
        let si = slack_ideal(&s, b).unwrap();
        let ti = toric_ideal(&s).unwrap();
        let no_cycles = NonIncidenceGraph::new(&s).chordless_cycles(None).unwrap().is_empty();
        if !(no_minors && si.is_zero() && ti.is_zero() && no_cycles) {
            bad.push(d);
        }
    }
    ok(bad.is_empty(), format!("d = 1..5, failures {bad:?}"))
}

fn c7() -> Verdict {
    let sq = hypercube(2);
    let v = sq.vertices()[0].clone();
    let vs = vertex_sum(&sq, &v, &sq, &v).unwrap();
    let sp = vertex_split(&sq, &v).unwrap();
    let r_sum = rank_q(&support_i64(vs.support()));
    let r_split = rank_q(&support_i64(sp.support()));
    let pass = r_sum == 5
        && support_rank(vs.support()) == 5
        && vs.dim() == 4
        && r_split == 4
        && support_rank(sp.support()) == 4
        && sp.dim() == 3;
    ok(pass, format!("vertex sum rank {r_sum} (dim {}), vertex split rank {r_split} (dim {})", vs.dim(), sp.dim()))
}

fn c8() -> Verdict {
    let b = Budget::default();
    let (mut certified, mut refused, mut fails) = (0, 0, Vec::new());
    for n in 0..=7 {
        for p in all_posets(n) {
            // hypotheses checked independently of the certifier
            let has3 = (0..p.len()).any(|x| {
                (x + 1..p.len()).any(|y| {
                    !p.comparable(x, y) && (y + 1..p.len()).any(|z| !p.comparable(x, z) && !p.comparable(y, z))
                })
            });
            let ranked = p.rank_function().is_some();
            match certify_poset(&p, b) {
                Ok(Outcome::Certified(c)) => {
                    certified += 1;
                    let rep = verify_certificate(&c, &order_polytope(&p), b);
                    if has3 || !ranked || !rep.passed() {
                        fails.push(p.cover_labels());
                    }
                }
                Ok(Outcome::Refused(r)) => {
                    refused += 1;
                    let valid = match &r {
                        Refusal::ThreeAntichain { witness } => {
                            let idx: Vec<usize> = witness.iter().map(|s| p.index_of(s).unwrap()).collect();
                            idx.len() == 3
                                && !p.comparable(idx[0], idx[1])
                                && !p.comparable(idx[0], idx[2])
                                && !p.comparable(idx[1], idx[2])
                        }
                        Refusal::Unranked { .. } => !has3 && !ranked,
                    };
                    if !valid || (!has3 && ranked) {
                        fails.push(p.cover_labels());
                    }
                }
                Err(_) => fails.push(p.cover_labels()),
            }
        }
    }
    ok(
        fails.is_empty(),
        format!("{certified} certified and verified, {refused} refused, {} failures", fails.len()),
    )
}

/// Unsafe exactly when the support splits into more than one block.
fn agrees(p: &CombPolytope, v: usize) -> (bool, SplitCondition) {
    let c = vertex_split_condition(p, &p.vertices()[v]).unwrap();
    let blocks = support_blocks_at(p.support(), v).len();
    let agree = match c {
        SplitCondition::Unsafe { .. } => blocks > 1,
        _ => blocks <= 1,
    };
    (agree, c)
}

fn c9() -> Verdict {
    let mut disagreements = 0;
    let mut wrong = Vec::new();
    // factors: neither simplices nor pyramids
    let fence = build_poset(&["1", "2", "3", "4"], &[("1", "3"), ("2", "3"), ("2", "4")]).unwrap();
    let chain_plus = build_poset(&["a", "b", "c"], &[("a", "b")]).unwrap();
    let sq = hypercube(2);
    let factors: Vec<(&str, CombPolytope)> = vec![
        ("square", sq.clone()),
        ("cube", hypercube(3)),
        ("prism", vertex_split(&sq, &sq.vertices()[0]).unwrap()),
        ("fence", order_polytope(&fence)),
        ("chain+point", order_polytope(&chain_plus)),
        ("octahedron", dual(&hypercube(3))),
    ];
    let mut sums = 0;
    'outer: for (i, (na, a)) in factors.iter().enumerate() {
        for (nb, bq) in factors.iter().skip(i) {
            for (va, vb) in [(0, 0), (a.num_vertices() - 1, 1)] {
                if sums == 20 {
                    break 'outer;
                }
                sums += 1;
                let (v, w) = (&a.vertices()[va], &bq.vertices()[vb]);
                let s = vertex_sum(a, v, bq, w).unwrap();
                let point = s.vertex_index(&format!("[{v}]⊕[{w}]")).unwrap();
                for k in 0..s.num_vertices() {
                    let (agree, c) = agrees(&s, k);
                    if !agree {
                        disagreements += 1;
                    }
                    if c.is_safe() == (k == point) {
                        wrong.push(format!("{na}+{nb} at {}", s.vertices()[k]));
                    }
                }
            }
        }
    }
    // Safe or apex everywhere on simplices, cubes, and block-free order polytopes
    let mut safe_checked = 0;
    let mut bodies: Vec<CombPolytope> = (1..=5).map(simplex).chain((1..=3).map(hypercube)).collect();
    bodies.extend(all_posets_up_to(5).iter().map(order_polytope));
    for (idx, p) in bodies.iter().enumerate() {
        let structured = idx < 8;
        for k in 0..p.num_vertices() {
            let (agree, c) = agrees(p, k);
            if !agree {
                disagreements += 1;
            }
            let blocks = support_blocks_at(p.support(), k).len();
            if structured || blocks <= 1 {
                safe_checked += 1;
                if !c.is_safe() {
                    wrong.push(format!("unsafe vertex {} of body {idx}", p.vertices()[k]));
                }
            }
        }
    }
    ok(
        disagreements == 0 && wrong.is_empty(),
        format!(
            "{sums} vertex sums, {safe_checked} vertices expected safe, {disagreements} detector disagreements, wrong {:?}",
            wrong.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn c10() -> Verdict {
    let b = Budget::default();
    let (mut tested, mut budget, mut fails) = (0, 0, 0);
    for p in all_posets_up_to(7) {
        let o = order_polytope(&p);
        if o.num_slack_variables() > 12 {
            continue;
        }
        tested += 1;
        let r = slack_ideal(&o, b).and_then(|s| ideal_contains(&toric_ideal_bounded(&o, None)?, &s, b));
        match r {
            Ok(true) => {}
            Ok(false) => fails += 1,
            Err(Error::BudgetExceeded(_) | Error::CapExceeded { .. }) => budget += 1,
            Err(_) => fails += 1,
        }
    }
    ok(
        fails == 0,
        format!("{tested} order polytopes with at most 12 slack variables, {fails} failures, {budget} over budget"),
    )
}

fn c11() -> Verdict {
    let a3 = Poset::antichain(3);
    let refused = match certify_poset(&a3, Budget::default()) {
        Ok(Outcome::Refused(Refusal::ThreeAntichain { witness })) => witness.len() == 3,
        _ => false,
    };
    let is_cube = combinatorially_equivalent(&order_polytope(&a3), &hypercube(3));
    let no_cube_leaf = matches!(
        certify_expression(&Expr::parse("hypercube(3)").unwrap(), Budget::default()),
        Err(Error::UnknownBase(_))
    );
    ok(
        refused && is_cube && no_cube_leaf,
        format!("refused {refused}, order polytope is the 3-cube {is_cube}, cube rejected as a leaf {no_cube_leaf}"),
    )
}
