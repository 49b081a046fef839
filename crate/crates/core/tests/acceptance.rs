//! Acceptance suite: one line per criterion, nonzero exit on any failure.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{brute_force_diagonals, brute_force_is_comonoid, random_complement_closed_t1, random_t1, random_word, w};
use pratt_core::analysis::{back_and_forth, classify, continuum_witness, infinite_crossword};
use pratt_core::constructions::{
    antichain_family, cx_evaluate, cx_separate, cx_stratum, grid_chains, omega_infty, order_comonoid,
    sunflower_extract, CxParams, CxPoint, Direction, ProductUpsets,
};
use pratt_core::crossword::{
    binary_witness, decompose_diagonal, diagonal_step, diversity_check, near_disjoint_witness, validate, BinaryKind,
};
use pratt_core::error::Error;
use pratt_core::lattice::{is_free_family, lattice_close, Freeness};
use pratt_core::{
    close, is_comonoid, solve_diagonal, ComonoidCheck, Crossword, Family, Preorder, SolveOutcome, Word, DEFAULT_BUDGET,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Check = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Check,
}

fn down_up_chain(n: usize) -> Family {
    let p = Preorder::chain(n);
    let d = order_comonoid(&p, Direction::Down).unwrap();
    d.with(order_comonoid(&p, Direction::Up).unwrap().words().iter().cloned()).unwrap()
}

fn c1_non_closure() -> Check {
    let f = down_up_chain(3);
    match is_comonoid(&f, DEFAULT_BUDGET).map_err(|e| e.to_string())? {
        ComonoidCheck::Counterexample(c) => {
            let v = validate(&c, &f).unwrap();
            ensure!(v.is_crossword(), "counterexample does not validate");
            ensure!(c.diagonal() == w(3, &[1]), "diagonal is {} instead of 010", c.diagonal());
            Ok(format!("diagonal {}", c.diagonal()))
        }
        other => Err(format!("expected a counterexample, got {other:?}")),
    }
}

fn c2_finite_discreteness() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    for i in 0..50 {
        let f = random_t1(&mut rng, 5);
        let c = close(&f, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure!(c.certified && c.family.len() == 32, "family {i}: closure has {} words", c.family.len());
        let l = lattice_close(&f);
        for z in Word::enumerate(5).unwrap() {
            let cw = back_and_forth(&f, &z).map_err(|e| format!("family {i}, target {z}: {e}"))?;
            ensure!(cw.diagonal() == z, "family {i}: wrong diagonal for {z}");
            ensure!(validate(&cw, &l).unwrap().is_crossword(), "family {i}: crossword for {z} does not validate");
        }
    }
    Ok("50 families, 1600 diagonals".into())
}

fn c3_complement_closed() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    for i in 0..50 {
        let n = rng.gen_range(2..=6);
        let f = random_complement_closed_t1(&mut rng, n);
        ensure!(classify(&f).complement_closed, "family {i} is not complement-closed");
        let c = close(&f, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure!(c.certified && c.family.len() == 1 << n, "family {i} on {n} points closes to {} words", c.family.len());
    }
    Ok("50 families discrete".into())
}

fn c4_witnesses() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=8);
        let (x, y) = (random_word(&mut rng, n), random_word(&mut rng, n));
        let extra: Vec<Word> = (0..rng.gen_range(0..4)).map(|_| random_word(&mut rng, n)).collect();
        let f = Family::from_words(n, [Word::empty(n), Word::full(n), x.clone(), y.clone()].into_iter().chain(extra)).unwrap();
        let m = binary_witness(BinaryKind::Meet, &x, &y).unwrap();
        ensure!(validate(&m, &f).unwrap().is_crossword() && m.diagonal() == x.meet(&y), "meet witness fails for {x}, {y}");
        let j = binary_witness(BinaryKind::Join, &x, &y).unwrap();
        ensure!(validate(&j, &f).unwrap().is_crossword() && j.diagonal() == x.join(&y), "join witness fails for {x}, {y}");
    }
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let k = rng.gen_range(0..=n);
        // assign each point to one of k parts or to none
        let owner: Vec<Option<usize>> = (0..n).map(|_| if k == 0 || rng.gen_bool(0.2) { None } else { Some(rng.gen_range(0..k)) }).collect();
        let xs: Vec<Word> = (0..k).map(|p| Word::from_fn(n, |a| owner[a] == Some(p))).collect();
        let f = Family::from_words(n, xs.iter().cloned().chain([Word::empty(n), Word::full(n)])).unwrap();
        let r = near_disjoint_witness(n, &xs).unwrap();
        let union = xs.iter().fold(Word::empty(n), |acc, x| acc.join(x));
        ensure!(validate(&r.crossword, &f).unwrap().is_crossword(), "near-disjoint witness does not validate");
        ensure!(r.crossword.diagonal() == union, "near-disjoint diagonal differs from the union");
    }
    for _ in 0..1000 {
        let n = rng.gen_range(0..=8);
        let c = Crossword::from_fn(n, |_, _| rng.gen_bool(0.5));
        let d = decompose_diagonal(&c);
        ensure!(d.union() == c.diagonal(), "decomposition does not reconstruct the diagonal");
        let dv = diversity_check(&c);
        let rows: HashSet<&Word> = c.rows().iter().collect();
        let cols: HashSet<Word> = c.cols().into_iter().collect();
        ensure!(dv.distinct_rows == rows.len() && dv.distinct_cols == cols.len(), "diversity counts differ");
        ensure!(dv.bound_ok, "diversity bound fails");
    }
    Ok("1000 binary, 200 near-disjoint, 1000 decompositions".into())
}

fn c5_omega() -> Check {
    for n in [3, 4] {
        let f = omega_infty(n).map_err(|e| e.to_string())?;
        ensure!(is_comonoid(&f, DEFAULT_BUDGET).unwrap().is_ok(), "omega_infty({n}) is not a comonoid");
        ensure!(brute_force_is_comonoid(&f), "enumeration disagrees for omega_infty({n})");
        let c = classify(&f);
        ensure!(!c.discrete && !c.t1, "omega_infty({n}) classified as discrete={} t1={}", c.discrete, c.t1);
        ensure!(c.t1_failure.is_some(), "no unseparated pair reported");
        // the top cannot be separated from n-1
        ensure!(f.iter().all(|x| !x.contains(n) || x.contains(n - 1)), "top separated from {}", n - 1);
        let step = diagonal_step(&f, DEFAULT_BUDGET).unwrap();
        ensure!(
            step.family.iter().filter(|z| (0..n).all(|a| z.contains(a))).all(|z| z.contains(n)),
            "a diagonal covers 0..{n} without the top"
        );
    }
    Ok("n = 3, 4".into())
}

fn c6_solver_oracle() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let mut targets = 0;
    for i in 0..100 {
        let n = rng.gen_range(1..=4);
        let count = rng.gen_range(1..=8);
        let f = Family::from_words(n, (0..count).map(|_| random_word(&mut rng, n))).unwrap();
        let reachable = brute_force_diagonals(&f);
        for z in Word::enumerate(n).unwrap() {
            targets += 1;
            let found = match solve_diagonal(&f, &z, DEFAULT_BUDGET).unwrap() {
                SolveOutcome::Found(c) => {
                    ensure!(c.diagonal() == z && validate(&c, &f).unwrap().is_crossword(), "family {i}: bad crossword");
                    true
                }
                SolveOutcome::Unsat => false,
                SolveOutcome::BudgetExceeded => return Err(format!("family {i}: budget exceeded")),
            };
            ensure!(found == reachable.contains(&z), "family {i} target {z}: solver says {found}");
        }
    }
    Ok(format!("100 families, {targets} targets"))
}

fn c7_antichain_collapse() -> Check {
    let members = [vec![0, 1], vec![1, 2], vec![0, 2]];
    let f = antichain_family(&members).map_err(|e| e.to_string())?;
    let e = |n: usize| Word::from_fn(3, |a| members[a].contains(&n));
    ensure!(f.len() == 3 && (0..3).all(|n| f.contains(&e(n))), "family is not e0, e1, e2");
    ensure!(classify(&f).t1, "family is not T1");
    match is_free_family(&f).map_err(|e| e.to_string())? {
        Freeness::Relation(r) => {
            let joins: BTreeSet<Word> = r.joinands.iter().map(|&i| f.words()[i].clone()).collect();
            let meets: BTreeSet<Word> = r.meetands.iter().map(|&i| f.words()[i].clone()).collect();
            ensure!(joins == BTreeSet::from([e(0), e(1)]) && meets == BTreeSet::from([e(2)]), "unexpected relation {r:?}");
        }
        Freeness::Free => return Err("family reported free".into()),
    }
    let c = close(&f, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure!(c.certified && c.family.len() == 8, "closure has {} words", c.family.len());
    Ok("e0 ∨ e1 ≥ e2; closure has 8 words".into())
}

fn lower_triangle(r: usize, c: usize) -> Word {
    Word::from_fn(r * c, |p| p % c < p / c)
}

fn c8_continuum() -> Check {
    let g = grid_chains(4, 4).map_err(|e| e.to_string())?;
    let cw = continuum_witness(&g.xs, &g.ys).map_err(|e| e.to_string())?;
    let z = lower_triangle(4, 4);
    ensure!(cw.z == z, "z = {}", cw.z);
    ensure!(cw.zs.len() == 3, "{} words z_i", cw.zs.len());
    for (i, zi) in cw.zs.iter().enumerate() {
        let mut expect = z.clone();
        expect.insert(g.point(i, i));
        ensure!(*zi == expect, "z_{i} = {zi}");
        ensure!(z.leq(zi) && *zi != z, "z_{i} not strictly above z");
        for zj in &cw.zs[i + 1..] {
            ensure!(zi.meet(zj) == z, "z_i ∧ z_j differs from z");
        }
    }
    Ok("z = strict lower triangle, z_i = z ∪ {(i,i)}".into())
}

fn c9_infinite_crossword() -> Check {
    let g = grid_chains(4, 4).map_err(|e| e.to_string())?;
    let c = infinite_crossword(&g.xs, &g.ys).map_err(|e| e.to_string())?;
    let members = Family::from_words(16, g.xs.iter().chain(&g.ys).cloned()).unwrap();
    ensure!(validate(&c, &members).unwrap().is_crossword(), "crossword does not validate over the chains");
    for p in 0..16 {
        let (r, col) = (p / 4, p % 4);
        ensure!(*c.row(p) == g.ys[r], "row {p} is not y_{r}");
        ensure!(c.col(p) == g.xs[col + 1], "column {p} is not x_{}", col + 1);
    }
    let seen: BTreeSet<Word> = c.rows().iter().cloned().chain(c.cols()).collect();
    // the terminal A stands in for the union of the chain and does not occur
    let expected: BTreeSet<Word> = g.ys[..4].iter().chain(&g.xs[1..]).cloned().collect();
    ensure!(seen == expected, "rows and columns are not the chain members");
    ensure!(members.iter().filter(|m| !m.is_full()).all(|m| seen.contains(m)), "a proper chain member is missing");
    Ok(format!("{} distinct rows and columns", seen.len()))
}

fn encode_oracle(p: &CxParams, a: &CxPoint) -> Vec<bool> {
    let nw = usize::BITS as usize - (p.n_bound - 1).leading_zeros() as usize;
    let gw = usize::BITS as usize - (p.gamma_max - 1).leading_zeros() as usize;
    let (nw, gw) = (nw.max(1), gw.max(1));
    let mut bits = Vec::new();
    for &(n, g) in &a.aprime {
        for k in 0..nw {
            bits.push((n >> k) & 1 == 1);
        }
        for k in 0..gw {
            bits.push((g >> k) & 1 == 1);
        }
    }
    bits.extend(&a.adoubleprime);
    bits
}

fn u_oracle(enc: &[bool], k: usize) -> bool {
    let b = enc.get(k / 2).copied().unwrap_or(false);
    if k.is_multiple_of(2) {
        b
    } else {
        !b
    }
}

fn random_point(rng: &mut StdRng, p: &CxParams) -> CxPoint {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    while pairs.len() < p.prefix_len {
        let pair = (rng.gen_range(0..p.n_bound), rng.gen_range(0..p.gamma_max));
        if !pairs.contains(&pair) {
            pairs.push(pair);
        }
    }
    CxPoint::new(pairs, (0..p.island_bits).map(|_| rng.gen_bool(0.5)).collect())
}

fn c10_kernels() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0010);
    let (mut identities, mut separations) = (0, 0);
    for _ in 0..1000 {
        let prefix = rng.gen_range(1..=4);
        let p = CxParams::new(prefix, rng.gen_range(8..=64), rng.gen_range(2..=10), rng.gen_range(prefix..=6)).unwrap();
        let a = random_point(&mut rng, &p);
        let enc = encode_oracle(&p, &a);
        for _ in 0..8 {
            let beta = rng.gen_range(0..=p.gamma_max);
            let gamma = rng.gen_range(0..p.gamma_max);
            let n = rng.gen_range(0..p.n_bound);
            if cx_stratum(&p, &a, beta).unwrap() && gamma >= beta {
                identities += 1;
                ensure!(!a.aprime.contains(&(n, gamma)), "pair ({n},{gamma}) above the stratum occurs in a'");
                ensure!(cx_evaluate(&p, n, gamma, &a).unwrap() == u_oracle(&enc, n), "stratum identity fails");
            }
        }
        let b = random_point(&mut rng, &p);
        match cx_separate(&p, &a, &b) {
            Ok(s) => {
                separations += 1;
                ensure!(cx_evaluate(&p, s.n, s.beta, &a).unwrap(), "separator misses the first point");
                ensure!(!cx_evaluate(&p, s.n, s.beta, &b).unwrap(), "separator contains the second point");
            }
            Err(Error::IdenticalPoints) => ensure!(a == b, "distinct points reported identical"),
            Err(Error::GammaTooSmall { .. }) => {
                ensure!(a.stratum().max(b.stratum()) >= p.gamma_max, "gamma bound wrongly reported too small")
            }
            Err(Error::GeneratorOutOfRange { index, .. }) => ensure!(index >= p.n_bound, "generator wrongly out of range"),
            Err(e) => return Err(e.to_string()),
        }
    }
    let mut flowers = 0;
    for _ in 0..200 {
        let j = rng.gen_range(1..=3);
        let count = rng.gen_range(2..=12);
        let alphabet: Vec<u8> = (0..rng.gen_range(j as u8 + 1..=16)).collect();
        let tuples: Vec<Vec<u8>> = (0..count).map(|_| alphabet.choose_multiple(&mut rng, j).copied().collect()).collect();
        let t = rng.gen_range(2..=3);
        match sunflower_extract(&tuples, t) {
            Ok(s) => {
                flowers += 1;
                ensure!(s.split < j && s.core.len() == s.split && s.tails.len() == t, "wrong sunflower dimensions");
                let mut perm = s.perm.clone();
                perm.sort_unstable();
                ensure!(perm == (0..j).collect::<Vec<_>>(), "perm is not a permutation");
                let mut used = HashSet::new();
                for (&k, tail) in s.picked.iter().zip(&s.tails) {
                    ensure!(tail.len() == j - s.split, "tail length");
                    let permuted: Vec<u8> = s.perm.iter().map(|&c| tuples[k][c]).collect();
                    ensure!(permuted[..s.split] == s.core[..] && permuted[s.split..] == tail[..], "tuple {k} is not core ++ tail");
                    for v in tail {
                        ensure!(used.insert(*v) && !s.core.contains(v), "tails overlap");
                    }
                }
            }
            Err(Error::NoSunflower { .. }) => {
                // every tuple set with t pairwise disjoint tuples has a split-0 sunflower
                let mut used = HashSet::new();
                let disjoint = tuples.iter().filter(|tp| if tp.iter().all(|v| !used.contains(v)) { used.extend(tp.iter().copied()); true } else { false }).count();
                ensure!(disjoint < t, "greedy disjoint family of size {disjoint} was missed");
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(format!("{identities} identities, {separations} separations, {flowers} sunflowers"))
}

fn c11_products() -> Check {
    let mut products = 0;
    let mut upsets = 0;
    for k in 1..=3 {
        for mask in 0..1u32 << k {
            let factors: Vec<Preorder> = (0..k).map(|i| Preorder::chain(if mask >> i & 1 == 1 { 3 } else { 2 })).collect();
            let p = ProductUpsets::new(&factors).map_err(|e| e.to_string())?;
            let all = order_comonoid(p.order(), Direction::Up).unwrap();
            for x in all.iter() {
                let r = p.check(x).map_err(|e| e.to_string())?;
                ensure!(r.cond_ii && r.cond_iii && r.cond_iv, "up-set {x} fails: {r:?}");
            }
            products += 1;
            upsets += all.len();
        }
    }
    Ok(format!("{products} products, {upsets} up-sets"))
}

fn c12_closure_laws() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0012);
    for i in 0..100 {
        let n = rng.gen_range(2..=5);
        let small: Vec<Word> = (0..rng.gen_range(0..=3)).map(|_| random_word(&mut rng, n)).collect();
        let more: Vec<Word> = (0..rng.gen_range(1..=3)).map(|_| random_word(&mut rng, n)).collect();
        let s = Family::from_words(n, small.clone()).unwrap();
        let t = Family::from_words(n, small.into_iter().chain(more)).unwrap();
        let cs = close(&s, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let ct = close(&t, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure!(cs.certified && ct.certified, "pair {i}: closure not certified");
        ensure!(s.is_subset(&cs.family), "pair {i}: not extensive");
        ensure!(cs.family.is_subset(&ct.family), "pair {i}: not monotone");
        let again = close(&cs.family, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure!(again.family == cs.family, "pair {i}: not idempotent");
        ensure!(brute_force_is_comonoid(&cs.family) || n > 4, "pair {i}: closure is not a comonoid");
    }
    Ok("100 nested pairs".into())
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "non-closure witness on the 3-chain", limit: Some(Duration::from_secs(1)), run: c1_non_closure },
        Criterion { id: 2, name: "finite T1 families are discrete", limit: Some(Duration::from_secs(30)), run: c2_finite_discreteness },
        Criterion { id: 3, name: "complement-closed T1 collapse", limit: None, run: c3_complement_closed },
        Criterion { id: 4, name: "witness suite", limit: Some(Duration::from_secs(10)), run: c4_witnesses },
        Criterion { id: 5, name: "omega with infinity, finite analog", limit: Some(Duration::from_secs(5)), run: c5_omega },
        Criterion { id: 6, name: "solver against enumeration", limit: None, run: c6_solver_oracle },
        Criterion { id: 7, name: "antichain collapse", limit: None, run: c7_antichain_collapse },
        Criterion { id: 8, name: "continuum witness on the 4x4 grid", limit: None, run: c8_continuum },
        Criterion { id: 9, name: "chain crossword on the 4x4 grid", limit: None, run: c9_infinite_crossword },
        Criterion { id: 10, name: "counterexample kernels and sunflowers", limit: Some(Duration::from_secs(10)), run: c10_kernels },
        Criterion { id: 11, name: "product up-set degeneracy", limit: None, run: c11_products },
        Criterion { id: 12, name: "closure operator laws", limit: None, run: c12_closure_laws },
    ];
    let total = Instant::now();
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(c.run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if took > limit => Err(format!("took {took:.2?}, limit {limit:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS [{:>2}] {} ({took:.2?}): {detail}", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL [{:>2}] {} ({took:.2?}): {why}", c.id, c.name);
            }
        }
    }
    let took = total.elapsed();
    let budget = Duration::from_secs(60);
    if took > budget {
        failed += 1;
        println!("FAIL suite took {took:.2?}, limit {budget:?}");
    }
    println!("{} of {} criteria passed in {took:.2?}", criteria.len() - failed.min(criteria.len()), criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
