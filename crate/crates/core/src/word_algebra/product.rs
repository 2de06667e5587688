use std::collections::HashMap;

use num_traits::One;

use super::model::diamond;
use super::{iota_s, model_convert, Letter, Model, Word, WordSum};
use crate::exact_core::Rational;

fn qsh_rec(
    u: &[Letter],
    v: &[Letter],
    i: usize,
    j: usize,
    dia: &dyn Fn(Letter, Letter) -> Vec<(Letter, Rational)>,
    memo: &mut HashMap<(usize, usize), WordSum>,
) -> WordSum {
    if i == u.len() {
        return WordSum::from_word(Word(v[j..].to_vec()));
    }
    if j == v.len() {
        return WordSum::from_word(Word(u[i..].to_vec()));
    }
    if let Some(s) = memo.get(&(i, j)) {
        return s.clone();
    }
    let mut out = qsh_rec(u, v, i + 1, j, dia, memo).prepend(u[i]);
    out += &qsh_rec(u, v, i, j + 1, dia, memo).prepend(v[j]);
    let tail = qsh_rec(u, v, i + 1, j + 1, dia, memo);
    for (l, c) in dia(u[i], v[j]) {
        out.add_scaled(&tail.prepend(l), &c);
    }
    memo.insert((i, j), out.clone());
    out
}

fn qsh_words(
    u: &Word,
    v: &Word,
    dia: &dyn Fn(Letter, Letter) -> Vec<(Letter, Rational)>,
) -> WordSum {
    qsh_rec(&u.0, &v.0, 0, 0, dia, &mut HashMap::new())
}

fn bilinear(u: &WordSum, v: &WordSum, f: impl Fn(&Word, &Word) -> WordSum) -> WordSum {
    let mut out = WordSum::zero();
    for (a, x) in u.iter() {
        for (b, y) in v.iter() {
            out.add_scaled(&f(a, b), &(x * y));
        }
    }
    out
}

/// The quasi-shuffle product `∗_F`: `aw ∗ bv = a(w ∗ bv) + b(aw ∗ v) + (a⋄b)(w ∗ v)`.
pub fn quasi_shuffle(model: Model, u: &WordSum, v: &WordSum) -> WordSum {
    let dia = move |a: Letter, b: Letter| diamond(model, a, b);
    bilinear(u, v, |a, b| qsh_words(a, b, &dia))
}

/// Pointwise product of the functions represented in `model`.
///
/// In the monomial model pointwise multiplication is the quasi-shuffle with `(k1;d1)⋄(k2;d2) = (k1+k2;d1+d2)`,
/// so both factors are converted there and the result converted back.
pub fn pointwise_product(model: Model, u: &WordSum, v: &WordSum) -> WordSum {
    let um = model_convert(model, Model::Monomial, u);
    let vm = model_convert(model, Model::Monomial, v);
    let add = |a: Letter, b: Letter| {
        vec![(
            Letter {
                k: a.k + b.k,
                d: a.d + b.d,
            },
            Rational::one(),
        )]
    };
    let p = bilinear(&um, &vm, |a, b| qsh_words(a, b, &add));
    model_convert(Model::Monomial, model, &p)
}

/// The shuffle product `u ⧢ v = ι(ιu ∗_s ιv)` in the seki model.
pub fn shuffle(u: &WordSum, v: &WordSum) -> WordSum {
    iota_s(&quasi_shuffle(Model::Seki, &iota_s(u), &iota_s(v)))
}
