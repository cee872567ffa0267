// keypoly: command-line front end for the keypoly library.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "keypoly/basis.hpp"
#include "keypoly/classify.hpp"
#include "keypoly/crystal.hpp"
#include "keypoly/expansion.hpp"
#include "keypoly/fillings.hpp"
#include "keypoly/generators.hpp"
#include "keypoly/operators.hpp"
#include "keypoly/pipe_dream.hpp"
#include "keypoly/verify.hpp"

using namespace keypoly;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  int n = 0;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, std::vector<std::string> formats = {"text", "json"}) {
  cmd->add_option("--n", c.n, "number of variables (defaults to the index length)");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", c.out, "write output to this file instead of stdout");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot open " + c.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

int resolve_n(const Common& c, int index_length) {
  if (c.n > 0) return c.n;
  if (index_length > 0) return index_length;
  throw UsageError("--n is required");
}

std::vector<int> parse_index(const std::string& s) {
  try {
    return parse_int_list(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad index: ") + e.what());
  }
}

// ---- compute

using Route = std::function<Polynomial()>;

std::map<std::string, Route> routes_for(const std::string& basis, const std::string& index, int& n) {
  std::map<std::string, Route> r;
  if (basis == "schubert" || basis == "yschubert") {
    Permutation w = Permutation::parse(index);
    n = w.size();
    if (basis == "schubert") {
      r["pipedreams"] = [w] { return schubert_pd(w); };
      r["ops"] = [w] { return schubert_ops(w); };
    } else {
      r["pipedreams"] = [w] { return yschubert_pd(w); };
      r["ops"] = [w] { return yschubert_ops(w); };
      r["crystal"] = [w] { return ysch_via_rfyc(w); };
    }
    return r;
  }
  auto b = parse_basis(basis);
  if (!b) throw UsageError("unknown basis " + basis);
  std::vector<int> idx = parse_index(index);
  if (!is_symmetric_index(*b)) {
    if (n > 0 && n != static_cast<int>(idx.size())) throw UsageError("--n must equal the index length");
    n = static_cast<int>(idx.size());
  } else if (n <= 0) {
    throw UsageError("--n is required for this basis");
  }
  const int nv = n;
  WeakComposition a(idx);
  r["fillings"] = [b, idx, nv] { return basis_polynomial(*b, idx, nv); };
  switch (*b) {
    case BasisId::Key:
      r["ops"] = [a] { return key_ops(a); };
      r["compat"] = [a] { return key_via_compatible(a); };
      r["rkeys"] = [a] { return key_via_right_keys(a); };
      r["rowfrank"] = [a] { return key_via_row_frank(a); };
      if (nv >= 2) r["crystal"] = [a] { return key_crystal(a).character(); };
      break;
    case BasisId::YKey:
      r["ops"] = [a] { return ykey_ops(a); };
      r["compat"] = [a] { return ykey_via_compatible(a); };
      r["rkeys"] = [a] { return ykey_via_left_keys(a); };
      r["rowfrank"] = [a] { return ykey_via_row_frank(a); };
      if (nv >= 2) r["crystal"] = [a] { return young_key_crystal(a).character(); };
      break;
    case BasisId::Atom:
      r["ops"] = [a] { return atom_ops(a); };
      r["rkeys"] = [a] { return atom_via_right_keys(a); };
      break;
    case BasisId::YAtom:
      r["ops"] = [a] { return yatom_ops(a); };
      r["rkeys"] = [a] { return yatom_via_left_keys(a); };
      break;
    case BasisId::Particle:
      r["compat"] = [a] { return particle_via_flag(a); };
      break;
    case BasisId::Schur:
      if (nv >= 2) r["crystal"] = [idx, nv] { return build_crystal(Partition(idx), nv).character(); };
      break;
    default:
      break;
  }
  return r;
}

int cmd_compute(const Common& c, const std::string& basis, const std::string& index, const std::string& via) {
  int n = c.n;
  auto routes = routes_for(basis, index, n);
  std::string def = routes.count("fillings") ? "fillings" : "pipedreams";
  std::string chosen = via.empty() ? def : via;
  if (chosen != "all" && !routes.count(chosen)) {
    std::string avail;
    for (const auto& [k, _] : routes) avail += " " + k;
    throw UsageError("route " + chosen + " is not available for " + basis + "; available:" + avail);
  }
  std::map<std::string, Polynomial> results;
  for (const auto& [name, f] : routes)
    if (chosen == "all" || chosen == name) results.emplace(name, f());
  const Polynomial& ref = results.begin()->second;
  bool agree = true;
  for (const auto& [name, p] : results) agree = agree && p == ref;

  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["basis"] = basis;
    j["index"] = index;
    j["n"] = n;
    j["polynomial"] = nlohmann::ordered_json::parse(ref.to_json());
    auto rs = nlohmann::ordered_json::object();
    for (const auto& [name, p] : results) rs[name] = p.to_string();
    j["routes"] = rs;
    j["agree"] = agree;
    emit(c, j.dump(2));
  } else {
    std::string s;
    if (results.size() == 1 || agree) {
      s = ref.to_string() + "\n";
      if (results.size() > 1) {
        s += "routes agree:";
        for (const auto& [name, p] : results) s += " " + name;
        s += "\n";
      }
    } else {
      s = "routes disagree\n";
      for (const auto& [name, p] : results) {
        s += name + ": " + p.to_string() + "\n";
        if (!(p == ref)) s += "  diff vs " + results.begin()->first + ": " + (p - ref).to_string() + "\n";
      }
    }
    emit(c, s);
  }
  return agree ? kExitOk : kExitMismatch;
}

// ---- enumerate

int cmd_enumerate(const Common& c, const std::string& family, const std::string& index) {
  auto f = parse_family(family);
  if (!f) throw UsageError("unknown family " + family);
  std::vector<int> idx = parse_index(index);
  int n = is_composition_family(*f) ? resolve_n(c, 0) : resolve_n(c, static_cast<int>(idx.size()));
  auto fillings = enumerate_family(*f, idx, n);
  if (c.format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& t : fillings) arr.push_back(nlohmann::ordered_json::parse(t.to_json()));
    nlohmann::ordered_json j;
    j["family"] = family;
    j["index"] = idx;
    j["n"] = n;
    j["count"] = fillings.size();
    j["fillings"] = arr;
    emit(c, j.dump(2));
  } else {
    std::string s;
    for (const auto& t : fillings) s += t.to_ascii() + "\n";
    s += std::to_string(fillings.size()) + " fillings\n";
    emit(c, s);
  }
  return kExitOk;
}

// ---- expand

int cmd_expand(const Common& c, const std::string& basis, const std::string& poly, const std::string& from) {
  auto b = parse_basis(basis);
  if (!b) throw UsageError("unknown basis " + basis);
  if (poly.empty() == from.empty()) throw UsageError("give exactly one of --poly or --from");
  Polynomial p;
  int n = c.n;
  if (!from.empty()) {
    auto colon = from.find(':');
    if (colon == std::string::npos) throw UsageError("--from expects basis:index");
    auto routes = routes_for(from.substr(0, colon), from.substr(colon + 1), n);
    p = routes.count("fillings") ? routes.at("fillings")() : routes.at("pipedreams")();
  } else {
    try {
      p = Polynomial::parse(poly, c.n > 0 ? std::optional<int>(c.n) : std::nullopt);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad polynomial: ") + e.what());
    }
    n = p.nvars();
  }
  Expansion e;
  try {
    e = expand(p, *b, n);
  } catch (const ExpansionError& err) {
    emit(c, c.format == "json" ? nlohmann::ordered_json{{"error", err.what()}}.dump() : std::string(err.what()));
    return kExitMismatch;
  }
  if (c.format == "json") emit(c, e.to_json());
  else emit(c, e.to_string() + (e.integral() ? "" : "\nnon-integral"));
  return kExitOk;
}

// ---- crystal

int cmd_crystal(const Common& c, const std::string& shape, const std::string& demazure, const std::string& young,
                const std::string& rf, int blocks) {
  if (!rf.empty()) {
    Permutation w = Permutation::parse(rf);
    auto set = blocks > 0 ? enumerate_rf(w, blocks) : rfyc(w);
    auto g = factorization_graph(set, w.size());
    if (c.format == "dot") emit(c, g.to_dot("factorizations"));
    else if (c.format == "json") emit(c, g.to_json());
    else {
      std::string s;
      for (std::size_t v = 0; v < g.labels.size(); ++v) s += g.labels[v] + "  wt " + g.weights[v].to_string() + "\n";
      s += std::to_string(g.labels.size()) + " factorizations\n";
      emit(c, s);
    }
    return kExitOk;
  }
  CrystalGraph g;
  if (!demazure.empty()) g = key_crystal(WeakComposition(parse_index(demazure)));
  else if (!young.empty()) g = young_key_crystal(WeakComposition(parse_index(young)));
  else {
    if (shape.empty()) throw UsageError("give a shape, --demazure, --young or --rf");
    g = build_crystal(Partition(parse_index(shape)), resolve_n(c, 0));
  }
  if (c.format == "dot") emit(c, g.to_dot());
  else if (c.format == "json") emit(c, g.to_json());
  else {
    std::string s;
    for (const auto& e : g.edges)
      s += g.labels[static_cast<std::size_t>(e.from)] + " -" + std::to_string(e.color) + "-> " +
           g.labels[static_cast<std::size_t>(e.to)] + "\n";
    s += std::to_string(g.labels.size()) + " vertices, character " + g.character().to_string() + "\n";
    emit(c, s);
  }
  return kExitOk;
}

// ---- pipedreams

int cmd_pipedreams(const Common& c, const std::string& perm, bool young) {
  Permutation w = Permutation::parse(perm);
  auto pds = young ? enumerate_ypd(w) : enumerate_pd(w);
  if (c.format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& d : pds) {
      auto j = nlohmann::ordered_json::parse(d.to_json());
      j["weight"] = d.weight().parts();
      arr.push_back(j);
    }
    emit(c, nlohmann::ordered_json{{"permutation", w.to_string()}, {"young", young}, {"pipe_dreams", arr}}.dump(2));
  } else {
    std::string s;
    for (const auto& d : pds) s += d.to_ascii() + "wt " + d.weight().to_string() + "\n\n";
    s += std::to_string(pds.size()) + " pipe dreams\n";
    emit(c, s);
  }
  return kExitOk;
}

// ---- verify

int cmd_verify(const Common& c, const std::string& id, int max_len, int max_size, bool list) {
  if (list || id.empty()) {
    std::string s;
    for (const auto& t : theorems()) s += t.id + "  " + t.statement + "\n";
    emit(c, s);
    return list ? kExitOk : kExitUsage;
  }
  std::vector<const Theorem*> chosen;
  if (id == "all") {
    for (const auto& t : theorems()) chosen.push_back(&t);
  } else {
    const Theorem* t = find_theorem(id);
    if (!t) throw UsageError("unknown theorem id " + id);
    chosen.push_back(t);
  }
  bool ok = true;
  std::string text;
  auto arr = nlohmann::ordered_json::array();
  for (const auto* t : chosen) {
    VerifyRange g = t->defaults;
    if (c.n > 0) g.min_len = g.max_len = c.n;
    if (max_len > 0) g.max_len = max_len;
    if (max_size >= 0) g.max_size = max_size;
    auto r = run_theorem(*t, g);
    ok = ok && r.ok();
    text += r.to_string();
    arr.push_back(nlohmann::ordered_json::parse(r.to_json()));
  }
  emit(c, c.format == "json" ? arr.dump(2) : text);
  return ok ? kExitOk : kExitMismatch;
}

// ---- classify

int cmd_classify(const Common& c, const std::string& name, const std::string& index, bool check, int max_len,
                 int max_size) {
  auto cl = parse_classifier(name);
  if (!cl) throw UsageError("unknown classifier " + name);
  if (check) {
    auto r = verify_classifier(*cl, max_len > 0 ? max_len : 4, max_size >= 0 ? max_size : 6);
    emit(c, r.to_string());
    return r.ok() ? kExitOk : kExitMismatch;
  }
  if (index.empty()) throw UsageError("index required unless --check is given");
  auto idx = parse_index(index);
  bool v = false;
  switch (*cl) {
    case Classifier::YqsQs: v = yqs_eq_qs(Composition(idx), resolve_n(c, static_cast<int>(idx.size()))); break;
    case Classifier::KeyYkey: v = key_inter_ykey(WeakComposition(idx)); break;
    case Classifier::AtomYatom: v = atom_eq_yatom(WeakComposition(idx)); break;
    case Classifier::QkeyYqkey: v = qk_eq_yqk(WeakComposition(idx)); break;
    case Classifier::ParticleYparticle: v = fp_eq_yfp(WeakComposition(idx)); break;
    case Classifier::FslideYfslide: v = slide_intersection(WeakComposition(idx), false); break;
    case Classifier::MslideYmslide: v = slide_intersection(WeakComposition(idx), true); break;
  }
  if (c.format == "json") emit(c, nlohmann::ordered_json{{"classifier", name}, {"index", idx}, {"result", v}}.dump());
  else emit(c, v ? "true" : "false");
  return kExitOk;
}

// ---- apply-op

int cmd_apply(const Common& c, const std::string& word, const std::string& poly) {
  OperatorWord w;
  Polynomial p;
  try {
    w = parse_operator_word(word);
    p = Polynomial::parse(poly, c.n > 0 ? std::optional<int>(c.n) : std::nullopt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Polynomial q = keypoly::apply(w, p);
  emit(c, c.format == "json" ? q.to_json() : q.to_string());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"keypoly: key polynomials, Young analogues and related bases"};
  app.require_subcommand(1);

  Common common;
  std::string basis, index, via, family, poly, from, shape, demazure, young, rf, perm, theorem, name, word;
  int blocks = 0, max_len = 0, max_size = -1;
  bool young_pd = false, list = false, check = false;

  auto* compute = app.add_subcommand("compute", "compute a basis polynomial, optionally by every route");
  compute->add_option("basis", basis, "basis name, or schubert / yschubert")->required();
  compute->add_option("index", index, "weak composition 2,3,0, composition, partition or permutation")->required();
  compute->add_option("--via", via, "route: fillings, ops, compat, rkeys, rowfrank, crystal, pipedreams or all");
  add_common(compute, common);

  auto* enumerate = app.add_subcommand("enumerate", "list the fillings of a family");
  enumerate->add_option("family", family, "family name, e.g. KSSF, YKSSF, RCT")->required();
  enumerate->add_option("index", index)->required();
  add_common(enumerate, common);

  auto* expand_cmd = app.add_subcommand("expand", "expand a polynomial in a basis");
  expand_cmd->add_option("basis", basis)->required();
  expand_cmd->add_option("--poly", poly, "polynomial text such as \"x^(1,0) + x^(0,1)\"");
  expand_cmd->add_option("--from", from, "basis:index, e.g. key:0,3,2");
  add_common(expand_cmd, common);

  auto* crystal = app.add_subcommand("crystal", "crystal graphs and reduced factorizations");
  crystal->add_option("shape", shape, "partition for B(lambda)");
  crystal->add_option("--demazure", demazure, "highest-weight Demazure crystal of key_a");
  crystal->add_option("--young", young, "lowest-weight Demazure crystal of ykey_a");
  crystal->add_option("--rf", rf, "permutation: RFYC(w), or RF^l(w) with --blocks");
  crystal->add_option("--blocks", blocks, "number of blocks l");
  add_common(crystal, common, {"text", "json", "dot"});

  auto* pipedreams = app.add_subcommand("pipedreams", "reduced pipe dreams of a permutation");
  pipedreams->add_option("perm", perm, "one-line permutation, 21534 or 2,1,5,3,4")->required();
  pipedreams->add_flag("--young", young_pd, "Young pipe dreams");
  add_common(pipedreams, common);

  auto* verify = app.add_subcommand("verify", "run a theorem suite");
  verify->add_option("theorem", theorem, "theorem id or all");
  verify->add_option("--max-len", max_len, "largest number of variables");
  verify->add_option("--max-size", max_size, "largest index size");
  verify->add_flag("--list", list, "list theorem ids");
  add_common(verify, common);

  auto* classify = app.add_subcommand("classify", "evaluate a coincidence predicate");
  classify->add_option("classifier", name, "yqs-qs, key-ykey, atom-yatom, qkey-yqkey, particle-yparticle, "
                                           "fslide-yfslide or mslide-ymslide")->required();
  classify->add_option("index", index);
  classify->add_flag("--check", check, "compare the predicate with exhaustive search");
  classify->add_option("--max-len", max_len);
  classify->add_option("--max-size", max_size);
  add_common(classify, common);

  auto* apply_op = app.add_subcommand("apply-op", "apply an operator word to a polynomial");
  apply_op->add_option("word", word, "e.g. pihat:2,pihat:1 (rightmost acts first)")->required();
  apply_op->add_option("poly", poly)->required();
  add_common(apply_op, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(common, basis, index, via);
    if (*enumerate) return cmd_enumerate(common, family, index);
    if (*expand_cmd) return cmd_expand(common, basis, poly, from);
    if (*crystal) return cmd_crystal(common, shape, demazure, young, rf, blocks);
    if (*pipedreams) return cmd_pipedreams(common, perm, young_pd);
    if (*verify) return cmd_verify(common, theorem, max_len, max_size, list);
    if (*classify) return cmd_classify(common, name, index, check, max_len, max_size);
    if (*apply_op) return cmd_apply(common, word, poly);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
