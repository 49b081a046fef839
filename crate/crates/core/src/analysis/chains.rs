use crate::crossword::near_disjoint_witness;
use crate::error::{Error, Result};
use crate::matrix::Crossword;
use crate::word::Word;

fn check_ground(xs: &[Word], ys: &[Word]) -> Result<usize> {
    let n = xs.first().or(ys.first()).ok_or(Error::EmptyInput("chain"))?.len();
    if let Some(bad) = xs.iter().chain(ys).find(|w| w.len() != n) {
        return Err(Error::GroundMismatch { expected: n, found: bad.len() });
    }
    Ok(n)
}

fn check_monotone(chain: &[Word], name: &'static str, descending: bool, strict: bool) -> Result<()> {
    for (i, pair) in chain.windows(2).enumerate() {
        let (lo, hi) = if descending { (&pair[1], &pair[0]) } else { (&pair[0], &pair[1]) };
        if !lo.leq(hi) {
            return Err(Error::ChainNotMonotone { chain: name, index: i + 1 });
        }
        if strict && lo == hi {
            return Err(Error::ChainNotStrict { chain: name, index: i + 1 });
        }
    }
    Ok(())
}

fn nonempty(chain: &[Word], name: &'static str) -> Result<()> {
    if chain.is_empty() {
        return Err(Error::EmptyInput(name));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnionRoute {
    /// The descending chain ends at `∅`; the meets `x_n ∧ y_n` form a
    /// near-disjoint family.
    NearDisjoint,
    /// The ascending chain ends at `A`; the witness is the complement of a
    /// near-disjoint witness for the shifted joins.
    Dual,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainUnion {
    pub union: Word,
    pub route: UnionRoute,
    /// A crossword over the lattice generated by the chains with diagonal
    /// `union`.
    pub witness: Crossword,
}

/// `⋁_n x_n ∧ y_n` for a descending `xs` and an ascending `ys` of equal
/// length, where the last `x` is `∅` or the last `y` is `A`.
pub fn chain_union(xs: &[Word], ys: &[Word]) -> Result<ChainUnion> {
    nonempty(xs, "descending")?;
    nonempty(ys, "ascending")?;
    if xs.len() != ys.len() {
        return Err(Error::ChainLengthMismatch { xs: xs.len(), ys: ys.len() });
    }
    let n = check_ground(xs, ys)?;
    check_monotone(xs, "descending", true, false)?;
    check_monotone(ys, "ascending", false, false)?;
    let union = xs.iter().zip(ys).fold(Word::empty(n), |acc, (x, y)| acc.join(&x.meet(y)));

    let (route, witness) = if xs.last().is_some_and(Word::is_empty) {
        let meets: Vec<Word> = xs.iter().zip(ys).map(|(x, y)| x.meet(y)).collect();
        (UnionRoute::NearDisjoint, near_disjoint_witness(n, &meets)?.crossword)
    } else if ys.last().is_some_and(Word::is_full) {
        // w_k = x_k ∨ y'_k with y'_0 = ∅ and y'_k = y_{k-1}; the final term is A
        let joins: Vec<Word> = (0..xs.len())
            .map(|k| if k == 0 { xs[0].clone() } else { xs[k].join(&ys[k - 1]) })
            .collect();
        let complements: Vec<Word> = joins.iter().map(Word::negate).collect();
        (UnionRoute::Dual, near_disjoint_witness(n, &complements)?.crossword.complement())
    } else {
        return Err(Error::ChainTerminal("the descending chain must end at ∅ or the ascending chain at A"));
    };
    assert_eq!(witness.diagonal(), union, "witness diagonal must equal the chain union");
    Ok(ChainUnion { union, route, witness })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuumWitness {
    pub m: Vec<usize>,
    pub n: Vec<usize>,
    pub z: Word,
    /// `z_i = z ∨ (x_{m(i)} ∧ y_{n(i+1)})` for each recorded `i` with a
    /// successor.
    pub zs: Vec<Word>,
}

/// Builds index sequences `m(i)`, `n(i)` so that each `x_{m(i)} ∧ y_{n(i+1)}`
/// holds a point outside every `x_{m(j)} ∧ y_{n(j)}`, then the pairwise
/// independent words `z_i` above `z = ⋁ x_{m(i)} ∧ y_{n(i)}`.
///
/// The containment hypothesis is checked on non-terminal indices only, since
/// the terminal words `∅` and `⋁ y` satisfy it trivially.
pub fn continuum_witness(xs: &[Word], ys: &[Word]) -> Result<ContinuumWitness> {
    nonempty(xs, "descending")?;
    nonempty(ys, "ascending")?;
    let size = check_ground(xs, ys)?;
    check_monotone(xs, "descending", true, false)?;
    check_monotone(ys, "ascending", false, false)?;
    if !xs.last().is_some_and(Word::is_empty) {
        return Err(Error::ChainTerminal("the descending chain must end at ∅"));
    }
    let top = ys.last().expect("nonempty").clone();
    let (last_m, last_n) = (xs.len() - 1, ys.len() - 1);
    for m in 0..last_m {
        let xm = xs[m].meet(&top);
        if let Some(n) = (0..last_n).find(|&n| xm.leq(&ys[n])) {
            return Err(Error::ContainmentHypothesis { m, n });
        }
    }

    let (mut ms, mut ns) = (vec![0usize], vec![0usize]);
    loop {
        let (mj, nj) = (*ms.last().expect("nonempty"), *ns.last().expect("nonempty"));
        if mj == last_m || nj == last_n {
            break;
        }
        let a = xs[mj].meet(&top).minus(&ys[nj]).first().expect("hypothesis leaves a point");
        let next_n = (nj + 1..ys.len()).find(|&k| ys[k].contains(a)).expect("a lies in the top");
        let next_m = (mj + 1..xs.len()).find(|&k| !xs[k].contains(a)).expect("the chain ends at ∅");
        if next_n == last_n || next_m == last_m {
            break;
        }
        ms.push(next_m);
        ns.push(next_n);
    }

    let z = ms.iter().zip(&ns).fold(Word::empty(size), |acc, (&m, &n)| acc.join(&xs[m].meet(&ys[n])));
    let zs: Vec<Word> = (0..ms.len() - 1).map(|i| z.join(&xs[ms[i]].meet(&ys[ns[i + 1]]))).collect();
    for (i, zi) in zs.iter().enumerate() {
        assert!(z.leq(zi) && *zi != z, "z_{i} must strictly contain z");
        for zj in &zs[i + 1..] {
            assert_eq!(zi.meet(zj), z, "distinct z_i must meet in z");
        }
    }
    Ok(ContinuumWitness { m: ms, n: ns, z, zs })
}

/// `C = ⋁_n x_n × y_n` for strict chains of equal length running from `A`
/// down to `∅` and from `∅` up to `A`. Every row of `C` is some `y_n` and
/// every column some `x_m`.
pub fn infinite_crossword(xs: &[Word], ys: &[Word]) -> Result<Crossword> {
    nonempty(xs, "descending")?;
    nonempty(ys, "ascending")?;
    if xs.len() != ys.len() {
        return Err(Error::ChainLengthMismatch { xs: xs.len(), ys: ys.len() });
    }
    let n = check_ground(xs, ys)?;
    check_monotone(xs, "descending", true, true)?;
    check_monotone(ys, "ascending", false, true)?;
    if !xs.last().is_some_and(Word::is_empty) {
        return Err(Error::ChainTerminal("the descending chain must end at ∅"));
    }
    if !ys.last().is_some_and(Word::is_full) {
        return Err(Error::ChainTerminal("the ascending chain must end at A"));
    }
    let c = xs.iter().zip(ys).fold(Crossword::zeros(n), |acc, (x, y)| acc.union(&Crossword::product(x, y)));
    for r in c.rows() {
        assert!(xs.contains(r) || ys.contains(r), "row {r} is not a chain member");
    }
    for col in c.cols() {
        assert!(xs.contains(&col) || ys.contains(&col), "column {col} is not a chain member");
    }
    Ok(c)
}
