use rayon::prelude::*;
use serde::Serialize;

use partmzv::exact_core::{rat_int, Rational};
use partmzv::mzv::{degree, verify_sum_formula, zdegree_limit, Limit};
use partmzv::partition_eval::{
    eval_hook_moment, eval_qk, moller_transform, qbracket_enum, PartitionFunction,
};
use partmzv::partitions::partitions_up_to;
use partmzv::qbracket_fast::{
    degree_probe, eisenstein, qbracket_fast, qbracket_float, quasimod_detect,
};
use partmzv::word_algebra::{
    basis_words, iota_s, iota_s_explicit, iota_s_genseries, quasi_shuffle, shuffle,
};
use partmzv::{Letter, Model, Word, WordSum};

pub const NAMES: [&str; 9] = [
    "double-shuffle",
    "iota",
    "oracle",
    "bloch-okounkov",
    "moller",
    "limits",
    "sum-formula",
    "quasimod",
    "three-one",
];

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn case(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Case {
    Case {
        name: name.into(),
        pass,
        detail: detail.into(),
    }
}

fn words_up_to(weight: u32) -> Vec<Word> {
    basis_words(weight)
        .into_iter()
        .filter(|x| !x.is_empty())
        .collect()
}

fn ws(k: &[u32], d: &[u32]) -> WordSum {
    WordSum::from_word(Word::new(k, d).unwrap())
}

pub fn run(name: &str) -> Option<Vec<Case>> {
    Some(match name {
        "double-shuffle" => double_shuffle(),
        "iota" => iota(),
        "oracle" => oracle(),
        "bloch-okounkov" => bloch_okounkov(),
        "moller" => moller(),
        "limits" => limits(),
        "sum-formula" => sum_formula(),
        "quasimod" => quasimod(),
        "three-one" => three_one(),
        _ => return None,
    })
}

fn double_shuffle() -> Vec<Case> {
    let words = words_up_to(4);
    let mut pairs = Vec::new();
    for (i, u) in words.iter().enumerate() {
        for v in &words[i..] {
            if u.weight() + v.weight() <= 5 {
                pairs.push((u, v));
            }
        }
    }
    pairs
        .par_iter()
        .map(|&(u, v)| {
            let (a, b) = (WordSum::from_word(u.clone()), WordSum::from_word(v.clone()));
            let diff = &shuffle(&a, &b) - &quasi_shuffle(Model::Seki, &a, &b);
            let f = qbracket_fast(Model::Seki, &diff, 30);
            case(
                format!("{u} , {v}"),
                f.is_zero(),
                if f.is_zero() {
                    String::new()
                } else {
                    f.to_string()
                },
            )
        })
        .collect()
}

fn iota() -> Vec<Case> {
    words_up_to(5)
        .par_iter()
        .map(|x| {
            let a = iota_s_explicit(x);
            let s = WordSum::from_word(x.clone());
            let detail = if a != iota_s_genseries(x) {
                "routes differ"
            } else if iota_s(&a) != s {
                "not an involution"
            } else if qbracket_fast(Model::Seki, &a, 30) != qbracket_fast(Model::Seki, &s, 30) {
                "q-bracket changes"
            } else {
                ""
            };
            case(x.to_string(), detail.is_empty(), detail)
        })
        .collect()
}

fn oracle() -> Vec<Case> {
    let words = words_up_to(4);
    let jobs: Vec<(Model, &Word)> = Model::ALL
        .iter()
        .flat_map(|&m| words.iter().map(move |x| (m, x)))
        .collect();
    jobs.par_iter()
        .map(|&(m, x)| {
            let s = WordSum::from_word(x.clone());
            let ok = qbracket_enum(&PartitionFunction::word(m, s.clone()), 20)
                == qbracket_fast(m, &s, 20);
            case(
                format!("{m} {x}"),
                ok,
                if ok {
                    ""
                } else {
                    "enumeration and fast bracket differ"
                },
            )
        })
        .collect()
}

fn bloch_okounkov() -> Vec<Case> {
    let products: [&[u32]; 10] = [
        &[2],
        &[3],
        &[4],
        &[6],
        &[2, 2],
        &[3, 3],
        &[2, 4],
        &[2, 2, 2],
        &[3, 5],
        &[2, 3, 3],
    ];
    products
        .par_iter()
        .map(|ks| {
            let ks = ks.to_vec();
            let wt = ks.iter().sum();
            let name = ks
                .iter()
                .map(|k| format!("Q_{k}"))
                .collect::<Vec<_>>()
                .join(" ");
            let f = PartitionFunction::custom("Q product", move |l| {
                ks.iter().map(|&k| eval_qk(k, l)).product()
            });
            match quasimod_detect(&qbracket_enum(&f, 30), wt) {
                Ok(Some(p)) => case(name, true, p.to_string()),
                Ok(None) => case(
                    name,
                    false,
                    format!("no quasimodular form of weight <= {wt} fits"),
                ),
                Err(e) => case(name, false, e.to_string()),
            }
        })
        .collect()
}

fn moller() -> Vec<Case> {
    let mut out = Vec::new();
    for (k, d) in [(1u32, 1u32), (1, 2), (2, 0)] {
        let s = ws(&[k], &[d]);
        let f = PartitionFunction::word(Model::Seki, s.clone());
        let m = PartitionFunction::custom("moller", move |l| {
            moller_transform(&PartitionFunction::word(Model::Seki, s.clone()), l)
        });
        let ok = qbracket_enum(&m, 12) == qbracket_enum(&f, 12);
        out.push(case(format!("<M ({k};{d})> = <({k};{d})>"), ok, ""));
    }
    let parts = partitions_up_to(10);
    for k in 2..=4u32 {
        let f = PartitionFunction::word(Model::Seki, ws(&[1], &[k - 1]));
        let bad = parts
            .par_iter()
            .find_any(|l| moller_transform(&f, l) != eval_hook_moment(k, l));
        out.push(case(
            format!("M (1;{}) = T_{k}", k - 1),
            bad.is_none(),
            bad.map(|l| format!("differs at {l}")).unwrap_or_default(),
        ));
    }
    out
}

fn limits() -> Vec<Case> {
    let samples = [0.9, 0.95, 0.99, 0.995];
    let words: Vec<Word> = words_up_to(5)
        .into_iter()
        .filter(|x| degree(x).1.len() == 1)
        .collect();
    words
        .par_iter()
        .map(|x| {
            let Ok(Limit::Value(z)) = zdegree_limit(x) else {
                return case(x.to_string(), false, "no limit");
            };
            let s = WordSum::from_word(x.clone());
            let p = degree_probe(
                &|q| qbracket_float(Model::Seki, &s, q),
                degree(x).0,
                &samples,
            );
            let v = z.eval();
            let err = (p.estimate - v).abs();
            case(
                x.to_string(),
                err < 5e-2,
                format!("{z} = {v:.6}, probe {:.6}", p.estimate),
            )
        })
        .collect()
}

fn sum_formula() -> Vec<Case> {
    let mut out = Vec::new();
    for a in 0..=4 {
        for b in 0..=4 - a {
            let name = format!("(a,b) = ({a},{b})");
            match verify_sum_formula(a, b) {
                Ok(r) => out.push(case(
                    name,
                    r.holds(1e-9),
                    format!(
                        "{:.12} {:.12} {:.12}",
                        r.lhs_value, r.depth_sum_value, r.zeta_value
                    ),
                )),
                Err(e) => out.push(case(name, false, e.to_string())),
            }
        }
    }
    out
}

fn quasimod() -> Vec<Case> {
    let mut out = Vec::new();
    for k in [2u32, 4, 6] {
        let g = eisenstein(k, 30).unwrap();
        let p = quasimod_detect(&g, k).ok().flatten();
        let ok = p.as_ref().is_some_and(|p| p.terms.len() == 1);
        out.push(case(
            format!("G{k}"),
            ok,
            p.map(|p| p.to_string()).unwrap_or_default(),
        ));
    }
    for (k, d) in [(2u32, 0u32), (4, 0), (3, 1)] {
        let a = Letter::new(k, d).unwrap();
        for n in 1..=3usize {
            let s = WordSum::from_word(Word(vec![a; n]));
            let wt = (k + d) * n as u32;
            let r = quasimod_detect(&qbracket_fast(Model::Seki, &s, 60), wt);
            let name = format!("({k};{d})^{n}");
            out.push(match r {
                Ok(Some(p)) => case(name, true, p.to_string()),
                Ok(None) => case(name, false, "not detected"),
                Err(e) => case(name, false, e.to_string()),
            });
        }
    }
    let r = quasimod_detect(&qbracket_fast(Model::Seki, &ws(&[2, 2], &[0, 0]), 30), 4);
    out.push(match r {
        Ok(Some(p)) => case("(2,2;0,0)", true, p.to_string()),
        Ok(None) => case("(2,2;0,0)", false, "not detected"),
        Err(e) => case("(2,2;0,0)", false, e.to_string()),
    });
    let r = quasimod_detect(&qbracket_fast(Model::Seki, &ws(&[3], &[0]), 40), 6);
    out.push(case("(3;0) is not quasimodular", matches!(r, Ok(None)), ""));
    out
}

fn three_one() -> Vec<Case> {
    let mut t = ws(&[3, 1], &[0, 0]).scale(&rat_int(4));
    t.add_scaled(&ws(&[3], &[1]), &rat_int(2));
    t.add_scaled(&ws(&[3], &[0]), &-rat_int(2));
    let r = quasimod_detect(&qbracket_fast(Model::Seki, &t, 30), 4);
    let c = match r {
        Ok(Some(p)) => {
            let top = p
                .terms
                .get(&(0, 1, 0))
                .cloned()
                .unwrap_or_else(|| Rational::from_integer(0.into()));
            case("T(1)", top == rat_int(1), p.to_string())
        }
        Ok(None) => case("T(1)", false, "not detected"),
        Err(e) => case("T(1)", false, e.to_string()),
    };
    vec![c]
}
