#include "operadlab/rewrite.hpp"

#include <algorithm>

namespace operadlab {

RewriteStep RewriteStep::inverted() const {
  RewriteStep inv = *this;
  inv.direction = direction == Direction::left_to_right
                      ? Direction::right_to_left
                      : Direction::left_to_right;
  return inv;
}

std::string RewriteStep::str() const {
  std::string out = axiom == Axiom::assoc1 ? "assoc1" : "assoc2";
  out += direction == Direction::left_to_right ? " L>R @" : " R>L @";
  if (path.empty()) {
    out += "root";
  } else {
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i > 0) out += '.';
      out += path[i] == PathStep::head ? "head" : "arg";
    }
  }
  out += " (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
  return out;
}

namespace {

// Rewrites the node at the end of the path with `leaf_fn`, rebuilding the
// spine on the way out.
template <typename F>
Term rewrite_at(const Term& t, const std::vector<PathStep>& path,
                std::size_t depth, F&& leaf_fn) {
  if (depth == path.size()) return leaf_fn(t);
  if (t.is_gen()) {
    throw path_error("path step " + std::to_string(depth + 1) +
                     " descends into a generator");
  }
  if (path[depth] == PathStep::head) {
    Term h = rewrite_at(t.head(), path, depth + 1, leaf_fn);
    return compose(h, t.position(), t.arg());
  }
  Term a = rewrite_at(t.arg(), path, depth + 1, leaf_fn);
  return compose(t.head(), t.position(), a);
}

Term apply_at_node(const Term& node, const RewriteStep& step) {
  if (node.is_gen()) {
    throw pattern_error("addressed node is a generator, not a composition");
  }
  const bool forward = step.direction == Direction::left_to_right;
  if (step.axiom == Axiom::assoc1) {
    if (forward) {
      // (A o_n B) o_m C -> A o_n (B o_{m-n+1} C)
      if (node.head().is_gen()) {
        throw pattern_error("assoc1 needs a composition in head position");
      }
      const Term& a = node.head().head();
      const Term& b = node.head().arg();
      const Term& c = node.arg();
      if (node.head().position() != step.n || node.position() != step.m) {
        throw pattern_error("step parameters (n=" + std::to_string(step.n) +
                            ", m=" + std::to_string(step.m) +
                            ") do not match the addressed node");
      }
      if (!(step.n <= step.m && step.m < step.n + b.arity())) {
        throw side_condition_error("assoc1 needs n <= m < n+|B|");
      }
      return compose(a, step.n, compose(b, step.m - step.n + 1, c));
    }
    // A o_n (B o_{m-n+1} C) -> (A o_n B) o_m C
    if (node.arg().is_gen()) {
      throw pattern_error("assoc1 reversed needs a composition in arg position");
    }
    const Term& a = node.head();
    const Term& b = node.arg().head();
    const Term& c = node.arg().arg();
    if (node.position() != step.n ||
        node.arg().position() != step.m - step.n + 1) {
      throw pattern_error("step parameters (n=" + std::to_string(step.n) +
                          ", m=" + std::to_string(step.m) +
                          ") do not match the addressed node");
    }
    if (!(step.n <= step.m && step.m < step.n + b.arity())) {
      throw side_condition_error("assoc1 needs n <= m < n+|B|");
    }
    return compose(compose(a, step.n, b), step.m, c);
  }
  // assoc2
  if (forward) {
    // (A o_n B) o_m C -> (A o_{m-|B|+1} C) o_n B
    if (node.head().is_gen()) {
      throw pattern_error("assoc2 needs a composition in head position");
    }
    const Term& a = node.head().head();
    const Term& b = node.head().arg();
    const Term& c = node.arg();
    if (node.head().position() != step.n || node.position() != step.m) {
      throw pattern_error("step parameters (n=" + std::to_string(step.n) +
                          ", m=" + std::to_string(step.m) +
                          ") do not match the addressed node");
    }
    if (!(step.n + b.arity() <= step.m)) {
      throw side_condition_error("assoc2 needs n+|B| <= m");
    }
    return compose(compose(a, step.m - b.arity() + 1, c), step.n, b);
  }
  // (A o_{m-|B|+1} C) o_n B -> (A o_n B) o_m C
  if (node.head().is_gen()) {
    throw pattern_error("assoc2 reversed needs a composition in head position");
  }
  const Term& a = node.head().head();
  const Term& c = node.head().arg();
  const Term& b = node.arg();
  if (node.position() != step.n ||
      node.head().position() != step.m - b.arity() + 1) {
    throw pattern_error("step parameters (n=" + std::to_string(step.n) +
                        ", m=" + std::to_string(step.m) +
                        ") do not match the addressed node");
  }
  if (!(step.n + b.arity() <= step.m)) {
    throw side_condition_error("assoc2 needs n+|B| <= m");
  }
  return compose(compose(a, step.n, b), step.m, c);
}

}  // namespace

Term apply_rewrite(const Term& t, const RewriteStep& step) {
  return rewrite_at(t, step.path, 0,
                    [&](const Term& node) { return apply_at_node(node, step); });
}

namespace {

void collect_steps(const Term& t, std::vector<PathStep>& path,
                   std::vector<RewriteStep>& out) {
  if (t.is_gen()) return;
  if (!t.head().is_gen()) {
    // Node reads (A o_q B') o_p X. Exactly one orientation applies,
    // depending on where p falls relative to q and q+|B'|.
    const int q = t.head().position();
    const int p = t.position();
    const int b_arity = t.head().arg().arity();
    if (p < q) {
      // Matches the right side of assoc2: (A o_{m-|B|+1} C) o_n B
      // with n = p, C = B', B = X, and m = q + |X| - 1.
      out.push_back(RewriteStep{Axiom::assoc2, Direction::right_to_left, path,
                                p, q + t.arg().arity() - 1});
    } else if (p < q + b_arity) {
      out.push_back(
          RewriteStep{Axiom::assoc1, Direction::left_to_right, path, q, p});
    } else {
      out.push_back(
          RewriteStep{Axiom::assoc2, Direction::left_to_right, path, q, p});
    }
  }
  if (!t.arg().is_gen()) {
    // A o_p (B o_k C) always matches the right side of assoc1 with
    // n = p, m = p + k - 1.
    const int p = t.position();
    const int k = t.arg().position();
    out.push_back(RewriteStep{Axiom::assoc1, Direction::right_to_left, path, p,
                              p + k - 1});
  }
  path.push_back(PathStep::head);
  collect_steps(t.head(), path, out);
  path.back() = PathStep::arg;
  collect_steps(t.arg(), path, out);
  path.pop_back();
}

}  // namespace

std::vector<RewriteStep> applicable_steps(const Term& t) {
  std::vector<RewriteStep> out;
  std::vector<PathStep> path;
  collect_steps(t, path, out);
  return out;
}

bool eq_mod_I(const Term& a, const Term& b) { return eval(a) == eval(b); }

namespace {

void prefix_path(std::vector<RewriteStep>& steps, PathStep front) {
  for (RewriteStep& s : steps) s.path.insert(s.path.begin(), front);
}

std::pair<RootDecomposition, std::vector<RewriteStep>> normalize_checked(
    const Term& t) {
  if (t.is_gen()) {
    return {RootDecomposition{t.gen_index(), std::nullopt, std::nullopt}, {}};
  }
  // l-factor shape: head is an l-factor, arg is a generator inserted at
  // the rank of its index.
  auto [dec, trace] = normalize_checked(t.head());
  prefix_path(trace, PathStep::head);
  const int i = dec.root_index;
  const int r = t.position();
  const int x = t.arg().gen_index();
  if (x < i) {
    if (dec.left.has_value()) {
      // (H o_1 B_L) o_r 2^x -> H o_1 (B_L o_r 2^x) by assoc1; the
      // insertion rank of x lands inside B_L because everything else in
      // the term is larger.
      trace.push_back(RewriteStep{Axiom::assoc1, Direction::left_to_right, {},
                                  1, r});
      dec.left = compose(*dec.left, r, Term::gen(x));
    } else {
      // r = 1; (2^i o_2 B_R) o_1 2^x or 2^i o_1 2^x is already normal.
      dec.left = Term::gen(x);
    }
  } else {
    if (dec.right.has_value()) {
      int s = 1;
      for (int y : dec.right->indices()) {
        if (y < x) ++s;
      }
      if (dec.left.has_value()) {
        // assoc2 pulls 2^x past B_L, assoc1 then pushes it into B_R.
        trace.push_back(RewriteStep{Axiom::assoc2, Direction::left_to_right,
                                    {}, 1, r});
        trace.push_back(RewriteStep{Axiom::assoc1, Direction::left_to_right,
                                    std::vector<PathStep>{PathStep::head}, 2,
                                    s + 1});
      } else {
        // r = s + 1; one assoc1 at the root.
        trace.push_back(RewriteStep{Axiom::assoc1, Direction::left_to_right,
                                    {}, 2, r});
      }
      dec.right = compose(*dec.right, s, Term::gen(x));
    } else if (dec.left.has_value()) {
      // (2^i o_1 B_L) o_r 2^x with r = |B_L| + 1: assoc2 at the root.
      trace.push_back(RewriteStep{Axiom::assoc2, Direction::left_to_right, {},
                                  1, r});
      dec.right = Term::gen(x);
    } else {
      // 2^i o_2 2^x is already normal.
      dec.right = Term::gen(x);
    }
  }
  return {std::move(dec), std::move(trace)};
}

}  // namespace

std::pair<RootDecomposition, std::vector<RewriteStep>> normalize_l_factor(
    const Term& t) {
  if (!is_l_factor(t).has_value()) {
    throw domain_error("normalize_l_factor: term is not an l-factor: " +
                       t.str());
  }
  return normalize_checked(t);
}

}  // namespace operadlab
