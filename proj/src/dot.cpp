#include "operadlab/dot.hpp"

#include <array>
#include <map>
#include <sstream>

#include "operadlab/maps.hpp"
#include "operadlab/verify.hpp"

namespace operadlab {

namespace {

// Pastel fills, recycled when a figure has more fibers than entries.
constexpr std::array<const char*, 16> kPalette = {
    "#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f", "#cab2d6", "#ffff99",
    "#1f78b4", "#33a02c", "#e31a1c", "#ff7f00", "#6a3d9a", "#b15928",
    "#8dd3c7", "#bebada", "#fccde5", "#d9d9d9"};

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string weak_dot(std::size_t n, bool color_fibers) {
  std::ostringstream out;
  out << "digraph weak_order_" << n << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";

  const Poset poset = weak_order_poset(n);
  std::map<std::string, std::size_t> fiber;
  if (color_fibers) {
    const TonksClassPartition partition = tonks_classes(n, n);
    for (std::size_t c = 0; c < partition.classes.size(); ++c) {
      for (const Permutation& member : partition.classes[c].members) {
        fiber.emplace(member.str(), c);
      }
    }
  }
  for (const std::string& element : poset.elements) {
    out << "  " << quoted(element);
    if (color_fibers) {
      out << " [style=filled, fillcolor=\""
          << kPalette[fiber.at(element) % kPalette.size()] << "\"]";
    }
    out << ";\n";
  }
  for (const auto& [lo, hi] : poset.covers) {
    out << "  " << quoted(poset.elements[lo]) << " -> "
        << quoted(poset.elements[hi]);
    if (color_fibers && fiber.at(poset.elements[lo]) == fiber.at(poset.elements[hi])) {
      out << " [style=dashed, color=red]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string tamari_dot(std::size_t n) {
  std::ostringstream out;
  out << "digraph tamari_" << n << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  const Poset poset = tamari_poset(static_cast<int>(n));
  for (const std::string& element : poset.elements) {
    out << "  " << quoted(element) << ";\n";
  }
  for (const auto& [lo, hi] : poset.covers) {
    out << "  " << quoted(poset.elements[lo]) << " -> "
        << quoted(poset.elements[hi]) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string quotient_dot(std::size_t n) {
  std::ostringstream out;
  out << "digraph quotient_" << n << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  const QuotientPoset q = quotient_poset(n, n);
  for (std::size_t i = 0; i < q.poset.elements.size(); ++i) {
    out << "  " << quoted(q.poset.elements[i]) << " [label="
        << quoted(q.class_trees[i].str()) << "];\n";
  }
  for (const auto& [lo, hi] : q.poset.covers) {
    out << "  " << quoted(q.poset.elements[lo]) << " -> "
        << quoted(q.poset.elements[hi]) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string lattice_dot(std::size_t n, LatticeOrder order, bool color_fibers,
                        std::size_t max_n) {
  if (n > max_n) {
    throw resource_limit_error("lattice_dot(" + std::to_string(n) +
                               ") exceeds maximum " + std::to_string(max_n));
  }
  switch (order) {
    case LatticeOrder::weak:
      return weak_dot(n, color_fibers);
    case LatticeOrder::tamari:
      return tamari_dot(n);
    case LatticeOrder::quotient:
      return quotient_dot(n);
  }
  throw domain_error("unknown lattice order");
}

}  // namespace operadlab
