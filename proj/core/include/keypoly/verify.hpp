#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace keypoly {

// Parameter range: number of variables (or parts, or alphabet size) in
// [min_len, max_len] and size up to max_size.
struct VerifyRange {
  int min_len = 1;
  int max_len = 3;
  int max_size = 5;
};

struct TheoremResult {
  std::string id;
  int checked = 0;
  int failures = 0;
  std::vector<std::string> counterexamples;  // first few failures
  bool ok() const { return failures == 0; }
  std::string to_string() const;
  std::string to_json() const;
};

struct Theorem {
  std::string id;
  std::string statement;
  VerifyRange defaults;
  std::function<void(const VerifyRange&, TheoremResult&)> run;
};

const std::vector<Theorem>& theorems();
const Theorem* find_theorem(std::string_view id);
TheoremResult run_theorem(const Theorem& t, const VerifyRange& range);

}  // namespace keypoly
