use super::{pointwise_product, quasi_shuffle, Letter, Model, Word, WordSum};

/// The derivation `D f = |·| f − |·| ⊛ f`, where `|λ|` is the word `(1;1)` in every model.
pub fn derive(model: Model, s: &WordSum) -> WordSum {
    let size = WordSum::from_word(Word(vec![Letter { k: 1, d: 1 }]));
    &pointwise_product(model, s, &size) - &quasi_shuffle(model, s, &size)
}
