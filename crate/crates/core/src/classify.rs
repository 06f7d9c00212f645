//! Wilf classification: group pattern sets by their generating function.

use std::collections::HashMap;
use std::io::Write;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::Result;
use crate::gf::GfEngine;
use crate::matcher::contains_noncontiguous;
use crate::pattern_set::{canonical_set, PatternSet};
use crate::ratfun::RationalGf;
use crate::tree::enumerate_trees;

/// Default number of sequence terms listed per class.
pub const PREFIX_LEN: usize = 15;

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct WilfClass {
    pub id: String,
    pub gf: RationalGf,
    pub members: Vec<PatternSet>,
    /// `av(1), ..., av(prefix_len)`.
    #[serde(serialize_with = "serialize_ints")]
    pub sequence_prefix: Vec<BigInt>,
}

fn serialize_ints<S: serde::Serializer>(
    v: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::Serialize;
    json_ints(v).serialize(s)
}

/// Integers as exact JSON numbers.
pub fn json_ints(v: &[BigInt]) -> Vec<serde_json::Number> {
    v.iter()
        .map(|c| c.to_string().parse().expect("integer literal"))
        .collect()
}

/// Spreadsheet-style class labels: A..Z, AA, AB, ...
pub fn class_label(mut i: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'A' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).unwrap()
}

/// Partition `sets` by exact generating-function equality. Classes are
/// ordered by their sequence prefix; members keep their input order.
pub fn wilf_classify(sets: &[PatternSet], prefix_len: usize) -> Vec<WilfClass> {
    let gfs: Vec<RationalGf> = sets
        .par_iter()
        .map_init(GfEngine::new, |engine, set| engine.gf_set(set))
        .collect();
    let mut groups: Vec<(RationalGf, Vec<PatternSet>)> = Vec::new();
    let mut slot: HashMap<RationalGf, usize> = HashMap::new();
    for (set, g) in sets.iter().zip(gfs) {
        let i = *slot.entry(g.clone()).or_insert_with(|| {
            groups.push((g, Vec::new()));
            groups.len() - 1
        });
        groups[i].1.push(set.clone());
    }
    let mut classes: Vec<WilfClass> = groups
        .into_iter()
        .map(|(gf, members)| {
            let sequence_prefix = gf
                .series(prefix_len)
                .expect("avoidance generating functions expand at 0")
                .split_off(1);
            WilfClass {
                id: String::new(),
                gf,
                members,
                sequence_prefix,
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        a.sequence_prefix
            .cmp(&b.sequence_prefix)
            .then_with(|| a.gf.to_string().cmp(&b.gf.to_string()))
    });
    for (i, c) in classes.iter_mut().enumerate() {
        c.id = class_label(i);
    }
    classes
}

/// Unordered pairs `{t, s}` with `k1` and `k2` leaves where neither contains
/// the other, one representative per orbit under simultaneous reflection.
pub fn incomparable_pairs(k1: usize, k2: usize) -> Result<Vec<PatternSet>> {
    let first = enumerate_trees(k1)?;
    let second = enumerate_trees(k2)?;
    let mut seen = std::collections::HashSet::new();
    let mut pairs = Vec::new();
    for t in &first {
        for s in &second {
            if t == s || (k1 == k2 && s < t) {
                continue;
            }
            if contains_noncontiguous(t, s) || contains_noncontiguous(s, t) {
                continue;
            }
            let set = canonical_set(vec![t.clone(), s.clone()], false)?;
            let mirror = set.reflect();
            let key = if mirror < set { mirror } else { set };
            if seen.insert(key.clone()) {
                pairs.push(key);
            }
        }
    }
    pairs.sort();
    Ok(pairs)
}

/// Classes as a JSON array.
pub fn write_json<W: Write>(classes: &[WilfClass], out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, classes)?;
    Ok(())
}

/// Classes as CSV. List-valued cells are space separated; members are
/// separated by `;` and the patterns within a member by `,`.
pub fn write_csv<W: Write>(classes: &[WilfClass], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["class", "gf_num", "gf_den", "terms", "members"])?;
    let join = |v: &[BigInt]| {
        v.iter()
            .map(BigInt::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    for c in classes {
        let members: Vec<String> = c.members.iter().map(|m| m.literals().join(",")).collect();
        w.write_record([
            c.id.clone(),
            join(c.gf.num().coeffs()),
            join(c.gf.den().coeffs()),
            join(&c.sequence_prefix),
            members.join(";"),
        ])?;
    }
    w.flush()?;
    Ok(())
}
