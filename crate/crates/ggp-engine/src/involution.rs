//! The Zelevinsky involution on multisegments, computed by the
//! Moeglin–Waldspurger chain-extraction recipe.

use crate::multisegment::Multisegment;
use crate::rat;
use crate::segment::Segment;

/// Computes the dual multisegment `m^#`, so that the Zelevinsky data of
/// `L(m)` is `m^#` and vice versa.  Applying it twice is the identity,
/// and the cuspidal support is preserved.
pub fn zelevinsky_involution(m: &Multisegment) -> Multisegment {
    let mut out: Vec<Segment> = Vec::new();
    for (_, line) in m.lines() {
        out.extend(involute_line(&line).segments().iter().cloned());
    }
    Multisegment::new(out)
}

/// One cuspidal line.  Repeatedly extracts a maximal chain: start from a
/// segment with the largest end (shortest among those), then, as long as
/// some remaining segment whose end is exactly one smaller precedes the
/// current one, move to it (again shortest among the candidates).  The
/// ends visited by the chain form one segment of the dual; every chain
/// member is then shortened by one on the right (dropped when emptied).
fn involute_line(m: &Multisegment) -> Multisegment {
    let mut pool: Vec<Segment> = m.segments().to_vec();
    let mut dual: Vec<Segment> = Vec::new();
    let one = rat::int(1);
    while !pool.is_empty() {
        let top_end = pool.iter().map(|s| s.b).max().unwrap();
        let first = pick_shortest_with_end(&pool, top_end).unwrap();
        let mut chain: Vec<usize> = vec![first];
        let mut cur_end = top_end - one;
        loop {
            let prev = pool[*chain.last().unwrap()].clone();
            let cand = pool
                .iter()
                .enumerate()
                .filter(|(i, s)| {
                    !chain.contains(i) && s.b == cur_end && s.precedes(&prev)
                })
                .max_by_key(|(_, s)| s.a)
                .map(|(i, _)| i);
            match cand {
                Some(i) => {
                    chain.push(i);
                    cur_end -= one;
                }
                None => break,
            }
        }
        let label = pool[first].label.clone();
        // The chain visited the ends cur_end+1 ..= top_end.
        dual.push(Segment::make(label, cur_end + one, top_end).unwrap());
        // Shorten every chain member by one on the right.
        let mut chain_sorted = chain.clone();
        chain_sorted.sort_unstable_by(|x, y| y.cmp(x));
        for i in chain_sorted {
            let s = pool.remove(i);
            if s.a <= s.b - one {
                pool.push(Segment::make(s.label.clone(), s.a, s.b - one).unwrap());
            }
        }
    }
    Multisegment::new(dual)
}

fn pick_shortest_with_end(pool: &[Segment], end: crate::rat::Rat) -> Option<usize> {
    pool.iter()
        .enumerate()
        .filter(|(_, s)| s.b == end)
        .max_by_key(|(_, s)| s.a)
        .map(|(i, _)| i)
}
