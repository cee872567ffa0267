#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keypoly/compositions.hpp"
#include "keypoly/permutation.hpp"
#include "keypoly/polynomial.hpp"

namespace keypoly {

// partial_i f = (f - s_i f) / (x_i - x_{i+1}), computed termwise.
Polynomial partial(int i, const Polynomial& f);
// partial_i by exact synthetic division of f - s_i f.
Polynomial partial_by_division(int i, const Polynomial& f);
// pi_i f = partial_i(x_i f).
Polynomial pi(int i, const Polynomial& f);
// pibar_i = pi_i - 1.
Polynomial pibar(int i, const Polynomial& f);
// pihat_i f = -partial_i(x_{i+1} f).
Polynomial pihat(int i, const Polynomial& f);

enum class OperatorKind { Partial, Pi, PiBar, PiHat };

struct OperatorStep {
  OperatorKind kind;
  int index;
  bool operator==(const OperatorStep&) const = default;
};

// Read as a product: the rightmost step acts first.
using OperatorWord = std::vector<OperatorStep>;

// Parses "pihat:2,pihat:1" (names: partial, pi, pibar, pihat).
OperatorWord parse_operator_word(std::string_view text);
std::string operator_word_to_string(const OperatorWord& w);

Polynomial apply(const OperatorWord& w, const Polynomial& f);
// Applies op_{i1} ... op_{ik} for the word [i1..ik], rightmost first.
Polynomial apply_along(OperatorKind kind, std::span<const int> word, const Polynomial& f);

// pi_{w_a} x^{sort(a)}, with a w_a = sort(a).
Polynomial key_ops(const WeakComposition& a);
// pibar_{w_a} x^{sort(a)}.
Polynomial atom_ops(const WeakComposition& a);
// pihat_{w} x^{revsort(a)}, with a w = revsort(a).
Polynomial ykey_ops(const WeakComposition& a);
// I(atom_{rev(a)}).
Polynomial yatom_ops(const WeakComposition& a);
// partial_{w^{-1} w0} x1^{n-1} x2^{n-2} ... x_{n-1}.
Polynomial schubert_ops(const Permutation& w);
// (-1)^{l(w)} partial_{w^{-1}} x2 x3^2 ... xn^{n-1}.
Polynomial yschubert_ops(const Permutation& w);

}  // namespace keypoly
