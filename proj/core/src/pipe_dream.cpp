#include "keypoly/pipe_dream.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <stdexcept>

#include "keypoly/fillings.hpp"
#include "keypoly/operators.hpp"

namespace keypoly {

bool PipeDream::has_cross(int row, int col) const {
  return std::binary_search(crosses.begin(), crosses.end(), std::make_pair(row, col));
}

std::optional<Permutation> PipeDream::trace() const {
  // Row 1 is the row next to the column exits. A pipe enters row i from the
  // left moving right; an elbow turns a rightward pipe toward the exits and a
  // pipe moving toward the exits to the right.
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  std::set<std::pair<int, int>> crossed;
  std::vector<std::vector<int>> through(static_cast<std::size_t>(n * n + 1));
  for (int start = 1; start <= n; ++start) {
    int i = start, j = 1;
    bool rightward = true;
    while (true) {
      if (i == 0) {
        w[static_cast<std::size_t>(start - 1)] = j;
        break;
      }
      if (j > n + 1) throw std::logic_error("pipe left the grid");
      if (has_cross(i, j)) {
        through[static_cast<std::size_t>((i - 1) * n + (j - 1))].push_back(start);
      } else {
        rightward = !rightward;
      }
      if (rightward) ++j;
      else --i;
    }
  }
  for (const auto& [i, j] : crosses) {
    const auto& pipes = through[static_cast<std::size_t>((i - 1) * n + (j - 1))];
    if (pipes.size() != 2) throw std::logic_error("cross tile not visited by two pipes");
    auto key = std::minmax(pipes[0], pipes[1]);
    if (!crossed.insert(key).second) return std::nullopt;
  }
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int v : w) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return std::nullopt;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(w));
}

WeakComposition PipeDream::weight() const {
  std::vector<int> wt(static_cast<std::size_t>(n), 0);
  for (const auto& [i, j] : crosses) {
    int slot = young ? n - i : i - 1;
    ++wt[static_cast<std::size_t>(slot)];
  }
  return WeakComposition(std::move(wt));
}

std::string PipeDream::to_ascii() const {
  std::string s;
  for (int i = n; i >= 1; --i) {
    int label = young ? n + 1 - i : i;
    s += std::to_string(label) + " ";
    for (int j = 1; j + i <= n + 1; ++j) {
      if (j + i == n + 1) s += " ,";
      else s += has_cross(i, j) ? " +" : " .";
    }
    s += '\n';
  }
  return s;
}

std::string PipeDream::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["young"] = young;
  auto cs = nlohmann::ordered_json::array();
  for (const auto& [r, c] : crosses) cs.push_back({r, c});
  j["crosses"] = cs;
  return j.dump();
}

std::vector<PipeDream> enumerate_pd(const Permutation& w) {
  const int n = w.size();
  const int target = w.length();
  // Reading order: row 1 right to left, then row 2, ... Cross (i, j)
  // contributes s_{i+j-1}; the product in reading order must be a reduced
  // word for w.
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = n - i; j >= 1; --j) cells.emplace_back(i, j);

  std::vector<PipeDream> out;
  std::vector<std::pair<int, int>> chosen;
  auto rec = [&](auto&& self, std::size_t k, const Permutation& u) -> void {
    int len = static_cast<int>(chosen.size());
    if (len == target) {
      if (u == w) {
        PipeDream p{n, chosen, false};
        std::sort(p.crosses.begin(), p.crosses.end());
        out.push_back(std::move(p));
      }
      return;
    }
    if (k == cells.size() || target - len > static_cast<int>(cells.size() - k)) return;
    auto [i, j] = cells[k];
    int s = i + j - 1;
    if (u(s) < u(s + 1)) {
      Permutation v = u.times_simple(s);
      // v must remain a prefix of a reduced word for w.
      if ((v.inverse() * w).length() == target - len - 1) {
        chosen.emplace_back(i, j);
        self(self, k + 1, v);
        chosen.pop_back();
      }
    }
    self(self, k + 1, u);
  };
  rec(rec, 0, Permutation::identity(n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PipeDream> enumerate_pd_naive(const Permutation& w) {
  const int n = w.size();
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) cells.emplace_back(i, j);
  if (cells.size() > 20) throw std::invalid_argument("staircase too large for exhaustive search");
  std::vector<PipeDream> out;
  for (unsigned long mask = 0; mask < (1UL << cells.size()); ++mask) {
    PipeDream p{n, {}, false};
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (mask >> k & 1UL) p.crosses.push_back(cells[k]);
    std::sort(p.crosses.begin(), p.crosses.end());
    auto traced = p.trace();
    if (traced && *traced == w) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial schubert_pd(const Permutation& w) {
  Polynomial p(w.size());
  for (const auto& d : enumerate_pd(w)) p.add_term(d.weight().parts(), 1);
  return p;
}

std::vector<PipeDream> enumerate_ypd(const Permutation& w) {
  auto out = enumerate_pd(w.rev());
  for (auto& d : out) d.young = true;
  return out;
}

Polynomial yschubert_pd(const Permutation& w) {
  Polynomial p(w.size());
  for (const auto& d : enumerate_ypd(w)) p.add_term(d.weight().parts(), 1);
  return p;
}

bool is_vexillary(const Permutation& w) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!(w(j) < w(i))) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (!(w(k) > w(i))) continue;
        for (int l = k + 1; l <= n; ++l)
          if (w(i) < w(l) && w(l) < w(k)) return false;
      }
    }
  return true;
}

bool vexillary_identity_check(const Permutation& w) {
  WeakComposition code = lehmer_code(w);
  Polynomial sch = schubert_pd(w);
  return sch == key_ops(code) && sch == generating_polynomial(Family::KSSF, code.parts(), w.size());
}

}  // namespace keypoly
