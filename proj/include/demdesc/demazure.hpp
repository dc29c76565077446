#pragma once

#include <vector>

#include "demdesc/character.hpp"
#include "demdesc/weyl.hpp"

namespace demdesc {

/**
 * Demazure (divided-difference) operator D_i on the character ring, via the
 * closed formula on exponentials. With m = <lambda, alpha_i-check>:
 *   m >= 0   ->  e^lambda + e^{lambda-alpha_i} + ... + e^{lambda-m alpha_i}
 *   m == -1  ->  0
 *   m <= -2  ->  -(e^{lambda+alpha_i} + ... + e^{lambda+(-m-1) alpha_i})
 * extended Z-linearly. Idempotent, and the D_i satisfy the braid relations.
 */
Character demazure_apply(int i, const Character& f);

// Independent route: (f - e^{-alpha_i} * s_i(f)) / (1 - e^{-alpha_i}) by
// exact division. Agrees with demazure_apply on every input.
Character demazure_oracle(int i, const Character& f);

// D_{i_1}(D_{i_2}(... D_{i_n}(f))): rightmost index applies first.
Character demazure_word(const Word& word, const Character& f);

// D_w via any reduced word for w (well-defined by Matsumoto's theorem; the
// canonical word is used).
Character demazure_w(const WeylElement& w, const Character& f);

// 0-Hecke (Demazure) product: fold w * s = ws when the length grows, else w.
WeylElement demazure_product(const RootDatumPtr& rd, const Word& word);

// All Weyl elements arising as products of subwords; for a reduced word of
// w this is exactly the Bruhat interval [e, w]. Sorted canonically.
// WordTooLong for words longer than 20 letters.
std::vector<WeylElement> subword_interval(const RootDatumPtr& rd, const Word& word);

}  // namespace demdesc
