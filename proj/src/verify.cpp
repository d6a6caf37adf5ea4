#include "operadlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "operadlab/encodings.hpp"

namespace operadlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_size(std::size_t n, std::size_t max_n, const char* what) {
  if (n > max_n) {
    throw resource_limit_error(std::string(what) + "(" + std::to_string(n) +
                               ") exceeds maximum " + std::to_string(max_n));
  }
}

}  // namespace

CoverClassification classify_cover(const Permutation& pi, const Permutation& rho) {
  const auto& v = pi.word().letters();
  const auto& w = rho.word().letters();
  if (v.size() != w.size()) {
    throw domain_error("not a cover pair: length mismatch");
  }
  std::size_t i = 0;
  while (i < v.size() && v[i] == w[i]) ++i;
  const bool is_cover = i + 1 < v.size() && v[i] < v[i + 1] &&
                        w[i] == v[i + 1] && w[i + 1] == v[i] &&
                        std::equal(v.begin() + i + 2, v.end(), w.begin() + i + 2);
  if (!is_cover) {
    throw domain_error("not a right weak cover pair: " + pi.str() + " -> " +
                       rho.str());
  }
  const int pos = static_cast<int>(i) + 1;
  if (tonks_independent(pi, pos)) {
    return CoverClassification{pi, rho, std::nullopt};
  }
  return CoverClassification{pi, rho,
                             StrictRotation{tonks_map(pi), tonks_map(rho)}};
}

bool check_local_indices(const Word& tau, int u, int v) {
  if (u >= v) {
    throw domain_error("check_local_indices needs u < v, got u=" +
                       std::to_string(u) + " v=" + std::to_string(v));
  }
  if (tau.contains(u) || tau.contains(v)) {
    throw duplicate_letter_error("u and v must not occur in the context");
  }
  const int n = insertion_index(v, tau);
  std::vector<int> extended = tau.letters();
  extended.push_back(v);
  const int m = insertion_index(u, Word(std::move(extended)));
  int between = 0;
  for (int x : tau.letters()) {
    if (u < x && x < v) ++between;
  }
  return n - m == between;
}

std::string VerificationReport::text() const {
  std::ostringstream out;
  out << check << " n=" << n << ": " << (passed() ? "PASS" : "FAIL") << " ("
      << instances << " instances";
  if (!passed()) out << ", " << failures.size() << " failures";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", elapsed_seconds);
  out << ", " << buf << "s)";
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < failures.size() && i < kShown; ++i) {
    out << "\n  " << failures[i];
  }
  if (failures.size() > kShown) {
    out << "\n  ... and " << failures.size() - kShown << " more";
  }
  return out.str();
}

std::string VerificationReport::tsv_line() const {
  std::string joined;
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i > 0) joined += ';';
    joined += failures[i];
  }
  return check + "\t" + std::to_string(n) + "\t" + std::to_string(instances) +
         "\t" + joined;
}

Poset weak_order_poset(std::size_t n) {
  Poset poset;
  const std::vector<Permutation> perms = enumerate_permutations(n);
  std::map<Permutation, std::size_t> rank;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    poset.elements.push_back(perms[i].str());
    rank.emplace(perms[i], i);
  }
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (const Permutation& cover : weak_covers_right(perms[i])) {
      poset.covers.emplace_back(i, rank.at(cover));
    }
  }
  return poset;
}

Poset tamari_poset(int n, int max_n) {
  Poset poset;
  const std::vector<BinaryTree> trees = enumerate_trees(n, max_n);
  std::map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    poset.elements.push_back(trees[i].str());
    rank.emplace(trees[i].str(), i);
  }
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (const BinaryTree& next : rotations(trees[i])) {
      poset.covers.emplace_back(i, rank.at(next.str()));
    }
  }
  return poset;
}

QuotientPoset quotient_poset(std::size_t n, std::size_t max_n) {
  require_size(n, max_n, "quotient_poset");
  const TonksClassPartition partition = tonks_classes(n, max_n);
  std::map<Permutation, std::size_t> class_of;
  for (std::size_t c = 0; c < partition.classes.size(); ++c) {
    for (const Permutation& member : partition.classes[c].members) {
      class_of.emplace(member, c);
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const Permutation& pi : enumerate_permutations(n)) {
    const std::size_t ci = class_of.at(pi);
    for (const Permutation& rho : weak_covers_right(pi)) {
      const std::size_t cj = class_of.at(rho);
      if (ci != cj) edges.emplace(ci, cj);
    }
  }

  QuotientPoset result;
  for (const TonksClass& cls : partition.classes) {
    result.poset.elements.push_back(cls.representative.str());
    result.class_trees.push_back(cls.tree);
  }
  result.poset.covers.assign(edges.begin(), edges.end());

  // Bijectivity of class -> tree onto Y_n.
  std::set<std::string> class_tree_set;
  for (const BinaryTree& t : result.class_trees) class_tree_set.insert(t.str());
  std::set<std::string> all_trees;
  std::map<std::string, std::size_t> tree_rank;
  const std::vector<BinaryTree> trees = enumerate_trees(static_cast<int>(n));
  for (std::size_t i = 0; i < trees.size(); ++i) {
    all_trees.insert(trees[i].str());
    tree_rank.emplace(trees[i].str(), i);
  }
  bool iso = class_tree_set.size() == result.class_trees.size() &&
             class_tree_set == all_trees;

  // Quotient covers must map exactly onto the rotation covers.
  if (iso) {
    std::set<std::pair<std::size_t, std::size_t>> mapped, tamari;
    for (const auto& [a, b] : result.poset.covers) {
      mapped.emplace(tree_rank.at(result.class_trees[a].str()),
                     tree_rank.at(result.class_trees[b].str()));
    }
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (const BinaryTree& next : rotations(trees[i])) {
        tamari.emplace(i, tree_rank.at(next.str()));
      }
    }
    iso = mapped == tamari;
  }
  result.isomorphic_to_tamari = iso;
  return result;
}

VerificationReport verify_identities(std::size_t n, std::size_t max_n) {
  require_size(n, max_n, "verify_identities");
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "identities";
  report.n = n;

  if (n == 0) {
    report.instances = 1;
    const Permutation empty;
    if (!(tonks_map(empty).is_leaf() && loday_ronco(empty).is_leaf() &&
          phihat(empty).is_leaf() && varphi(empty).is_leaf())) {
      report.failures.push_back("pi=<empty>: maps disagree on the empty case");
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
  }

  for (const Permutation& pi : enumerate_permutations(n)) {
    ++report.instances;
    const std::string tag = "pi=" + pi.str() + ": ";
    const BinaryTree phi = tonks_map(pi);
    if (phihat(pi) != phi) {
      report.failures.push_back(tag + "phihat != tonks_map");
    }
    if (varphi(pi) != phi) {
      report.failures.push_back(tag + "varphi != tonks_map");
    }
    const BinaryTree psi = loday_ronco(pi);
    if (eval(decreasing_encoding(pi.word())) != psi) {
      report.failures.push_back(tag + "eval(f) != loday_ronco");
    }
    if (loday_ronco(inverse(pi)) != phi) {
      report.failures.push_back(tag + "tonks_map != loday_ronco(inverse)");
    }

    const Term h = head_insertion(pi.word());
    const auto root = is_l_factor(h);
    if (!root.has_value() || *root != pi.at(1)) {
      report.failures.push_back(tag + "h is not an l-factor rooted at pi_1");
    }
    std::vector<int> expected_indices(n);
    for (std::size_t k = 0; k < n; ++k) expected_indices[k] = static_cast<int>(k) + 1;
    if (h.indices() != expected_indices) {
      report.failures.push_back(tag + "ind(h) != [n]");
    }

    const RootDecomposition hdec = h_root_decomposition(pi.word());
    if (hdec.root_index != pi.at(1) || !eq_mod_I(h, hdec.rebuild())) {
      report.failures.push_back(tag + "h root decomposition not congruent");
    }
    const Term f = decreasing_encoding(pi.word());
    const RootDecomposition fdec = f_normalization(pi.word());
    if (fdec.root_index != static_cast<int>(n) ||
        !eq_mod_I(f, fdec.rebuild())) {
      report.failures.push_back(tag + "f normalization not congruent");
    }
  }
  std::sort(report.failures.begin(), report.failures.end());
  report.elapsed_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_order_preservation(std::size_t n, std::size_t max_n) {
  require_size(n, max_n, "verify_order_preservation");
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "order";
  report.n = n;

  for (const Permutation& pi : enumerate_permutations(n)) {
    const BinaryTree from = tonks_map(pi);
    for (const Permutation& rho : weak_covers_right(pi)) {
      ++report.instances;
      const std::string tag = "pi=" + pi.str() + " rho=" + rho.str() + ": ";
      const BinaryTree to = tonks_map(rho);
      const CoverClassification verdict = classify_cover(pi, rho);
      if (verdict.collapsed()) {
        if (from != to) {
          report.failures.push_back(tag + "independent swap changed the image");
        }
      } else {
        if (verdict.rotation->tree_from != from ||
            verdict.rotation->tree_to != to) {
          report.failures.push_back(tag + "classification trees inconsistent");
        }
        const std::vector<BinaryTree> up = rotations(from);
        if (!std::binary_search(up.begin(), up.end(), to)) {
          report.failures.push_back(tag +
                                    "dependent swap is not a single rotation");
        }
      }
      if (!tamari_leq(from, to)) {
        report.failures.push_back(tag + "tamari order violated");
      }
    }
  }
  std::sort(report.failures.begin(), report.failures.end());
  report.elapsed_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_classes(std::size_t n, std::size_t max_n) {
  require_size(n, max_n, "verify_classes");
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "classes";
  report.n = n;

  const TonksClassPartition partition = tonks_classes(n, max_n);
  if (partition.classes.size() != catalan(static_cast<int>(n))) {
    report.failures.push_back(
        "class count " + std::to_string(partition.classes.size()) +
        " != C_" + std::to_string(n));
  }

  const std::vector<BinaryTree> trees = enumerate_trees(static_cast<int>(n));
  std::set<std::string> tree_set;
  for (const BinaryTree& t : trees) tree_set.insert(t.str());
  std::set<std::string> class_trees;
  for (const TonksClass& cls : partition.classes) {
    class_trees.insert(cls.tree.str());
  }
  if (class_trees.size() != partition.classes.size() || class_trees != tree_set) {
    report.failures.push_back("class -> tree is not a bijection onto Y_n");
  }

  std::map<std::string, std::vector<Permutation>> fibers;
  std::set<std::string> psi_images;
  for (const Permutation& pi : enumerate_permutations(n)) {
    ++report.instances;
    fibers[tonks_map(pi).str()].push_back(pi);
    psi_images.insert(loday_ronco(pi).str());
    for (int pos = 1; pos + 1 <= static_cast<int>(n); ++pos) {
      if (tonks_independent(pi, pos)) {
        std::vector<int> swapped = pi.word().letters();
        std::swap(swapped[pos - 1], swapped[pos]);
        if (tonks_map(Permutation(std::move(swapped))) != tonks_map(pi)) {
          report.failures.push_back("pi=" + pi.str() + " pos=" +
                                    std::to_string(pos) +
                                    ": independent swap changed the image");
        }
      }
    }
  }
  for (const TonksClass& cls : partition.classes) {
    for (const Permutation& member : cls.members) {
      if (tonks_map(member) != cls.tree) {
        report.failures.push_back("pi=" + member.str() +
                                  ": image differs from its class tree");
      }
    }
    auto it = fibers.find(cls.tree.str());
    if (it == fibers.end() || it->second != cls.members) {
      report.failures.push_back("class of " + cls.representative.str() +
                                " != fiber of its tree");
    }
  }
  if (psi_images != tree_set) {
    report.failures.push_back("loday_ronco is not onto Y_n");
  }
  std::sort(report.failures.begin(), report.failures.end());
  report.elapsed_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_quotient(std::size_t n, std::size_t max_n) {
  require_size(n, max_n, "verify_quotient");
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "quotient";
  report.n = n;
  const QuotientPoset q = quotient_poset(n, max_n);
  report.instances = static_cast<long long>(q.poset.elements.size() +
                                            q.poset.covers.size());
  if (!q.isomorphic_to_tamari) {
    report.failures.push_back("quotient of S_" + std::to_string(n) +
                              " is not isomorphic to the Tamari order");
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

namespace {

void local_index_sweep(std::vector<int>& word, std::vector<bool>& used,
                       std::size_t n, VerificationReport& report) {
  const Word tau{std::vector<int>(word)};
  for (int u = 1; u <= static_cast<int>(n) + 1; ++u) {
    if (static_cast<std::size_t>(u) <= n && used[u]) continue;
    for (int v = u + 1; v <= static_cast<int>(n) + 1; ++v) {
      if (static_cast<std::size_t>(v) <= n && used[v]) continue;
      ++report.instances;
      if (!check_local_indices(tau, u, v)) {
        report.failures.push_back("tau=" + tau.str() + " u=" +
                                  std::to_string(u) + " v=" + std::to_string(v));
      }
    }
  }
  for (int next = 1; next <= static_cast<int>(n); ++next) {
    if (used[next]) continue;
    used[next] = true;
    word.push_back(next);
    local_index_sweep(word, used, n, report);
    word.pop_back();
    used[next] = false;
  }
}

}  // namespace

VerificationReport verify_local_indices(std::size_t n, std::size_t max_n) {
  require_size(n, max_n, "verify_local_indices");
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "local-indices";
  report.n = n;
  std::vector<int> word;
  std::vector<bool> used(n + 1, false);
  local_index_sweep(word, used, n, report);
  std::sort(report.failures.begin(), report.failures.end());
  report.elapsed_seconds = seconds_since(start);
  return report;
}

namespace {

Term random_term(int generators, std::vector<int>& pool, std::size_t& next,
                 std::mt19937& rng) {
  if (generators == 1) return Term::gen(pool[next++]);
  std::uniform_int_distribution<int> split(1, generators - 1);
  const int head_size = split(rng);
  Term head = random_term(head_size, pool, next, rng);
  Term arg = random_term(generators - head_size, pool, next, rng);
  std::uniform_int_distribution<int> position(1, head.arity());
  return compose(head, position(rng), arg);
}

}  // namespace

VerificationReport verify_soundness_fuzz(long long pairs, int max_generators,
                                         unsigned seed) {
  if (max_generators < 3) {
    throw domain_error("soundness fuzz needs at least 3 generators");
  }
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "soundness-fuzz";
  report.n = static_cast<std::size_t>(max_generators);

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> size_dist(3, max_generators);
  for (long long i = 0; i < pairs; ++i) {
    ++report.instances;
    const int g = size_dist(rng);
    std::vector<int> pool(static_cast<std::size_t>(g));
    for (int k = 0; k < g; ++k) pool[static_cast<std::size_t>(k)] = k + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t next = 0;
    const Term t = random_term(g, pool, next, rng);

    const std::vector<RewriteStep> steps = applicable_steps(t);
    std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
    const RewriteStep step = steps[pick(rng)];
    const std::string tag = "term=" + t.str() + " step=" + step.str() + ": ";

    const Term rewritten = apply_rewrite(t, step);
    if (eval(rewritten) != eval(t)) {
      report.failures.push_back(tag + "evaluation changed");
    }
    if (rewritten.arity() != t.arity()) {
      report.failures.push_back(tag + "arity changed");
    }
    if (rewritten.indices() != t.indices()) {
      report.failures.push_back(tag + "index set changed");
    }
    if (apply_rewrite(rewritten, step.inverted()) != t) {
      report.failures.push_back(tag + "inverse step does not restore");
    }
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

namespace {

// All terms with the canonical left-to-right indexing start..start+g-1.
std::vector<Term> canonical_terms(int generators, int start) {
  if (generators == 1) return {Term::gen(start)};
  std::vector<Term> out;
  for (int k = 1; k < generators; ++k) {
    const std::vector<Term> heads = canonical_terms(k, start);
    const std::vector<Term> args = canonical_terms(generators - k, start + k);
    for (const Term& head : heads) {
      for (const Term& arg : args) {
        for (int n = 1; n <= head.arity(); ++n) {
          out.push_back(compose(head, n, arg));
        }
      }
    }
  }
  return out;
}

}  // namespace

VerificationReport verify_completeness(int max_generators) {
  if (max_generators < 1 || max_generators > 7) {
    throw resource_limit_error("completeness check supports 1..7 generators");
  }
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "completeness";
  report.n = static_cast<std::size_t>(max_generators);

  for (int g = 1; g <= max_generators; ++g) {
    const std::vector<Term> terms = canonical_terms(g, 1);
    std::map<std::string, std::size_t> id;
    for (std::size_t i = 0; i < terms.size(); ++i) id.emplace(terms[i].str(), i);
    report.instances += static_cast<long long>(terms.size());

    // Connected components of the index-erased rewrite graph.
    std::vector<std::size_t> component(terms.size(), terms.size());
    std::size_t components = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (component[i] != terms.size()) continue;
      const std::size_t label = components++;
      std::vector<std::size_t> stack{i};
      component[i] = label;
      while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        for (const RewriteStep& step : applicable_steps(terms[cur])) {
          const Term next = index_erased(apply_rewrite(terms[cur], step));
          const std::size_t j = id.at(next.str());
          if (component[j] == terms.size()) {
            component[j] = label;
            stack.push_back(j);
          }
        }
      }
    }

    // Soundness direction: one evaluation per component.
    std::map<std::size_t, std::string> component_eval;
    std::set<std::string> distinct_evals;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string image = eval(terms[i]).str();
      distinct_evals.insert(image);
      auto [it, inserted] = component_eval.emplace(component[i], image);
      if (!inserted && it->second != image) {
        report.failures.push_back("g=" + std::to_string(g) + " term=" +
                                  terms[i].str() +
                                  ": rewrite class mixes evaluations");
      }
    }
    // Completeness direction: as many components as evaluations.
    if (components != distinct_evals.size()) {
      report.failures.push_back(
          "g=" + std::to_string(g) + ": " + std::to_string(components) +
          " rewrite classes but " + std::to_string(distinct_evals.size()) +
          " evaluations");
    }
  }
  std::sort(report.failures.begin(), report.failures.end());
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace operadlab
