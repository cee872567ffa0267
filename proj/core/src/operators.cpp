#include "keypoly/operators.hpp"

#include <stdexcept>

namespace keypoly {

namespace {

void check_index(int i, const Polynomial& f) {
  if (i < 1 || i >= f.nvars()) throw std::invalid_argument("operator index out of range");
}

Exponent unit(int n, int i) {
  Exponent e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return e;
}

}  // namespace

Polynomial partial(int i, const Polynomial& f) {
  check_index(i, f);
  const auto a = static_cast<std::size_t>(i - 1), b = a + 1;
  Polynomial r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    int p = e[a], q = e[b];
    Exponent g = e;
    if (p > q) {
      for (int k = 0; k < p - q; ++k) {
        g[a] = p - 1 - k;
        g[b] = q + k;
        r.add_term(g, c);
      }
    } else if (p < q) {
      for (int k = 0; k < q - p; ++k) {
        g[a] = p + k;
        g[b] = q - 1 - k;
        r.add_term(g, -c);
      }
    }
  }
  return r;
}

Polynomial partial_by_division(int i, const Polynomial& f) {
  check_index(i, f);
  return (f - f.swap_variables(i)).divide_by_difference(i);
}

Polynomial pi(int i, const Polynomial& f) {
  check_index(i, f);
  return partial(i, f.multiply_by_monomial(unit(f.nvars(), i)));
}

Polynomial pibar(int i, const Polynomial& f) { return pi(i, f) - f; }

Polynomial pihat(int i, const Polynomial& f) {
  check_index(i, f);
  return -partial(i, f.multiply_by_monomial(unit(f.nvars(), i + 1)));
}

namespace {

Polynomial apply_step(OperatorKind kind, int i, const Polynomial& f) {
  switch (kind) {
    case OperatorKind::Partial:
      return partial(i, f);
    case OperatorKind::Pi:
      return pi(i, f);
    case OperatorKind::PiBar:
      return pibar(i, f);
    case OperatorKind::PiHat:
      return pihat(i, f);
  }
  throw std::logic_error("unknown operator kind");
}

std::string_view kind_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::Partial:
      return "partial";
    case OperatorKind::Pi:
      return "pi";
    case OperatorKind::PiBar:
      return "pibar";
    case OperatorKind::PiHat:
      return "pihat";
  }
  return "?";
}

}  // namespace

OperatorWord parse_operator_word(std::string_view text) {
  OperatorWord w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string tok;
    for (char c : text.substr(pos, end - pos))
      if (!std::isspace(static_cast<unsigned char>(c))) tok.push_back(c);
    pos = end + 1;
    if (tok.empty()) continue;
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("operator step needs name:index, got " + tok);
    std::string name = tok.substr(0, colon);
    int idx = std::stoi(tok.substr(colon + 1));
    OperatorKind kind;
    if (name == "partial") kind = OperatorKind::Partial;
    else if (name == "pi") kind = OperatorKind::Pi;
    else if (name == "pibar") kind = OperatorKind::PiBar;
    else if (name == "pihat") kind = OperatorKind::PiHat;
    else throw std::invalid_argument("unknown operator: " + name);
    w.push_back({kind, idx});
  }
  return w;
}

std::string operator_word_to_string(const OperatorWord& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += std::string(kind_name(w[k].kind)) + ":" + std::to_string(w[k].index);
  }
  return s;
}

Polynomial apply(const OperatorWord& w, const Polynomial& f) {
  Polynomial r = f;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = apply_step(it->kind, it->index, r);
  return r;
}

Polynomial apply_along(OperatorKind kind, std::span<const int> word, const Polynomial& f) {
  Polynomial r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = apply_step(kind, *it, r);
  return r;
}

Polynomial key_ops(const WeakComposition& a) {
  auto s = sorting_permutations(a);
  return apply_along(OperatorKind::Pi, s.to_sort_word, Polynomial::monomial(a.sorted()));
}

Polynomial atom_ops(const WeakComposition& a) {
  auto s = sorting_permutations(a);
  return apply_along(OperatorKind::PiBar, s.to_sort_word, Polynomial::monomial(a.sorted()));
}

Polynomial ykey_ops(const WeakComposition& a) {
  auto s = sorting_permutations(a);
  return apply_along(OperatorKind::PiHat, s.to_revsort_word, Polynomial::monomial(a.revsorted()));
}

Polynomial yatom_ops(const WeakComposition& a) { return atom_ops(a.rev()).reverse_variables(); }

Polynomial schubert_ops(const Permutation& w) {
  int n = w.size();
  Exponent delta(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) delta[static_cast<std::size_t>(i)] = n - 1 - i;
  auto word = (w.inverse() * Permutation::longest(n)).reduced_word();
  return apply_along(OperatorKind::Partial, word, Polynomial::monomial(delta));
}

Polynomial yschubert_ops(const Permutation& w) {
  int n = w.size();
  Exponent rho(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rho[static_cast<std::size_t>(i)] = i;
  auto word = w.inverse().reduced_word();
  Polynomial r = apply_along(OperatorKind::Partial, word, Polynomial::monomial(rho));
  return w.length() % 2 ? -r : r;
}

}  // namespace keypoly
