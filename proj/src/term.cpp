#include "operadlab/term.hpp"

#include <algorithm>
#include <cctype>

namespace operadlab {

Term Term::gen(int index) {
  if (index < 1) {
    throw domain_error("generator index must be positive, got " +
                       std::to_string(index));
  }
  auto node = std::make_shared<const Node>(
      Node{Term{}, Term{}, index, 2, std::vector<int>{index}});
  return Term{std::move(node)};
}

bool Term::is_gen() const { return node_->head.node_ == nullptr; }

int Term::gen_index() const {
  if (!is_gen()) throw std::logic_error("gen_index on a composition");
  return node_->number;
}

const Term& Term::head() const {
  if (is_gen()) throw std::logic_error("head of a generator");
  return node_->head;
}

int Term::position() const {
  if (is_gen()) throw std::logic_error("position of a generator");
  return node_->number;
}

const Term& Term::arg() const {
  if (is_gen()) throw std::logic_error("arg of a generator");
  return node_->arg;
}

int Term::arity() const { return node_->arity; }

const std::vector<int>& Term::indices() const { return node_->indices; }

bool Term::has_index(int k) const {
  return std::binary_search(node_->indices.begin(), node_->indices.end(), k);
}

std::string Term::str() const {
  if (is_gen()) return "2^" + std::to_string(gen_index());
  return "(" + head().str() + " o_" + std::to_string(position()) + " " +
         arg().str() + ")";
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (is_gen() != other.is_gen()) return false;
  if (node_->number != other.node_->number) return false;
  if (is_gen()) return true;
  return head() == other.head() && arg() == other.arg();
}

bool Term::operator<(const Term& other) const {
  if (is_gen() != other.is_gen()) return is_gen();
  if (is_gen()) return gen_index() < other.gen_index();
  if (position() != other.position()) return position() < other.position();
  if (head() != other.head()) return head() < other.head();
  return arg() < other.arg();
}

Term compose(const Term& a, int n, const Term& b) {
  if (n < 1 || n > a.arity()) {
    throw position_error("composition position " + std::to_string(n) +
                         " out of range 1.." + std::to_string(a.arity()));
  }
  std::vector<int> merged;
  merged.reserve(a.indices().size() + b.indices().size());
  std::merge(a.indices().begin(), a.indices().end(), b.indices().begin(),
             b.indices().end(), std::back_inserter(merged));
  for (std::size_t i = 1; i < merged.size(); ++i) {
    if (merged[i] == merged[i - 1]) {
      throw index_clash_error("index " + std::to_string(merged[i]) +
                              " occurs in both operands");
    }
  }
  auto node = std::make_shared<const Term::Node>(Term::Node{
      a, b, n, a.arity() + b.arity() - 1, std::move(merged)});
  return Term{std::move(node)};
}

namespace {

int parse_int(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
    throw parse_error("expected integer at position " + std::to_string(pos));
  }
  int value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > 1'000'000) throw parse_error("integer too large in term");
    ++pos;
  }
  return value;
}

void expect(std::string_view text, std::size_t& pos, std::string_view lit) {
  if (text.substr(pos, lit.size()) != lit) {
    throw parse_error("expected '" + std::string(lit) + "' at position " +
                      std::to_string(pos));
  }
  pos += lit.size();
}

Term parse_term(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw parse_error("unexpected end of term text");
  if (text[pos] == '2') {
    expect(text, pos, "2^");
    return Term::gen(parse_int(text, pos));
  }
  expect(text, pos, "(");
  Term head = parse_term(text, pos);
  expect(text, pos, " o_");
  int n = parse_int(text, pos);
  expect(text, pos, " ");
  Term arg = parse_term(text, pos);
  expect(text, pos, ")");
  return compose(head, n, arg);
}

}  // namespace

Term Term::parse(std::string_view text) {
  std::size_t pos = 0;
  Term t = parse_term(text, pos);
  if (pos != text.size()) {
    throw parse_error("trailing characters after term at position " +
                      std::to_string(pos));
  }
  return t;
}

BinaryTree eval(const Term& t) {
  if (t.is_gen()) return corolla();
  return graft_at(eval(t.head()), t.position(), eval(t.arg()));
}

namespace {

// Checks the l-factor shape and returns the root index: generators are
// inserted one at a time, each at the rank of its index among the indices
// already present plus itself.
std::optional<int> l_factor_root(const Term& t) {
  if (t.is_gen()) return t.gen_index();
  if (!t.arg().is_gen()) return std::nullopt;
  const Term& head = t.head();
  const int j = t.arg().gen_index();
  int below = 0;
  for (int x : head.indices()) {
    if (x < j) ++below;
  }
  if (t.position() != below + 1) return std::nullopt;
  return l_factor_root(head);
}

}  // namespace

std::optional<int> is_l_factor(const Term& t) { return l_factor_root(t); }

namespace {

Term reindex(const Term& t, int& next) {
  if (t.is_gen()) return Term::gen(next++);
  Term head = reindex(t.head(), next);
  Term arg = reindex(t.arg(), next);
  return compose(head, t.position(), arg);
}

}  // namespace

Term index_erased(const Term& t) {
  int next = 1;
  return reindex(t, next);
}

Term RootDecomposition::rebuild() const {
  Term t = Term::gen(root_index);
  if (right.has_value()) t = compose(t, 2, *right);
  if (left.has_value()) t = compose(t, 1, *left);
  return t;
}

}  // namespace operadlab
