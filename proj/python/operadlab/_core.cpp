// Python bindings. Values cross the boundary in their canonical text
// forms: words and permutations as digit or comma-separated strings,
// trees as "(...)" strings, terms as "2^k"/"(... o_n ...)" strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "operadlab/dot.hpp"
#include "operadlab/encodings.hpp"
#include "operadlab/maps.hpp"
#include "operadlab/verify.hpp"

namespace py = pybind11;
using namespace operadlab;

namespace {

std::vector<std::string> to_strings(const std::vector<Permutation>& perms) {
  std::vector<std::string> out;
  out.reserve(perms.size());
  for (const Permutation& p : perms) out.push_back(p.str());
  return out;
}

py::object decomposition_tuple(const RootDecomposition& dec) {
  py::object left = dec.left ? py::cast(dec.left->str()) : py::none();
  py::object right = dec.right ? py::cast(dec.right->str()) : py::none();
  return py::make_tuple(dec.root_index, left, right);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Permutations, planar binary trees, and the operadic term calculus "
      "behind the Tonks and Loday-Ronco maps";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const resource_limit_error& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  // words and permutations
  m.def("standardize",
        [](const std::string& a) { return standardize(Word::parse(a)).str(); },
        py::arg("word"));
  m.def("reverse_word",
        [](const std::string& a) { return reverse(Word::parse(a)).str(); },
        py::arg("word"));
  m.def(
      "split_below_above",
      [](const std::string& a, int x) {
        auto [below, above] = split_below_above(Word::parse(a), x);
        return py::make_tuple(below.str(), above.str());
      },
      py::arg("word"), py::arg("x"));
  m.def(
      "insertion_index",
      [](int x, const std::string& sigma) {
        return insertion_index(x, Word::parse(sigma));
      },
      py::arg("x"), py::arg("context"));
  m.def("inversions",
        [](const std::string& pi) { return inversions(Permutation::parse(pi)); },
        py::arg("perm"));
  m.def("inverse",
        [](const std::string& pi) { return inverse(Permutation::parse(pi)).str(); },
        py::arg("perm"));
  m.def("weak_covers_right",
        [](const std::string& pi) {
          return to_strings(weak_covers_right(Permutation::parse(pi)));
        },
        py::arg("perm"));
  m.def("weak_covers_left",
        [](const std::string& pi) {
          return to_strings(weak_covers_left(Permutation::parse(pi)));
        },
        py::arg("perm"));
  m.def(
      "weak_leq",
      [](const std::string& lo, const std::string& hi) {
        return weak_leq(Permutation::parse(lo), Permutation::parse(hi));
      },
      py::arg("lo"), py::arg("hi"));
  m.def("permutations",
        [](std::size_t n) { return to_strings(enumerate_permutations(n)); },
        py::arg("n"));

  // trees
  m.def(
      "graft_root",
      [](const std::string& t1, const std::string& t2) {
        return graft_root(BinaryTree::parse(t1), BinaryTree::parse(t2)).str();
      },
      py::arg("t1"), py::arg("t2"));
  m.def(
      "graft_at",
      [](const std::string& t, int i, const std::string& s) {
        return graft_at(BinaryTree::parse(t), i, BinaryTree::parse(s)).str();
      },
      py::arg("t"), py::arg("i"), py::arg("s"));
  m.def("internal_nodes",
        [](const std::string& t) { return BinaryTree::parse(t).internal_nodes(); },
        py::arg("tree"));
  m.def("rotations",
        [](const std::string& t) {
          std::vector<std::string> out;
          for (const BinaryTree& u : rotations(BinaryTree::parse(t))) {
            out.push_back(u.str());
          }
          return out;
        },
        py::arg("tree"));
  m.def(
      "tamari_leq",
      [](const std::string& lo, const std::string& hi) {
        return tamari_leq(BinaryTree::parse(lo), BinaryTree::parse(hi));
      },
      py::arg("lo"), py::arg("hi"));
  m.def(
      "trees",
      [](int n, int max_n) {
        std::vector<std::string> out;
        for (const BinaryTree& t : enumerate_trees(n, max_n)) {
          out.push_back(t.str());
        }
        return out;
      },
      py::arg("n"), py::arg("max_n") = 12);
  m.def("catalan", &catalan, py::arg("n"));

  // terms
  m.def(
      "compose",
      [](const std::string& a, int n, const std::string& b) {
        return compose(Term::parse(a), n, Term::parse(b)).str();
      },
      py::arg("a"), py::arg("n"), py::arg("b"));
  m.def("eval_term",
        [](const std::string& t) { return eval(Term::parse(t)).str(); },
        py::arg("term"));
  m.def("term_arity",
        [](const std::string& t) { return Term::parse(t).arity(); },
        py::arg("term"));
  m.def("is_l_factor",
        [](const std::string& t) -> py::object {
          auto root = is_l_factor(Term::parse(t));
          return root ? py::cast(*root) : py::none();
        },
        py::arg("term"));
  m.def(
      "eq_mod_i",
      [](const std::string& a, const std::string& b) {
        return eq_mod_I(Term::parse(a), Term::parse(b));
      },
      py::arg("a"), py::arg("b"));
  m.def("normalize_l_factor",
        [](const std::string& t) {
          auto [dec, trace] = normalize_l_factor(Term::parse(t));
          std::vector<std::string> steps;
          for (const RewriteStep& s : trace) steps.push_back(s.str());
          return py::make_tuple(decomposition_tuple(dec), steps);
        },
        py::arg("term"));

  // encodings
  m.def("head_insertion",
        [](const std::string& a) { return head_insertion(Word::parse(a)).str(); },
        py::arg("word"));
  m.def("decreasing_encoding",
        [](const std::string& a) {
          return decreasing_encoding(Word::parse(a)).str();
        },
        py::arg("word"));
  m.def("u_count",
        [](const std::string& a, int x) { return u_count(Word::parse(a), x); },
        py::arg("word"), py::arg("x"));
  m.def("g_map",
        [](const std::string& a) { return g_map(Word::parse(a)).str(); },
        py::arg("word"));
  m.def("h_root_decomposition",
        [](const std::string& a) {
          return decomposition_tuple(h_root_decomposition(Word::parse(a)));
        },
        py::arg("word"));
  m.def("f_normalization",
        [](const std::string& a) {
          return decomposition_tuple(f_normalization(Word::parse(a)));
        },
        py::arg("word"));

  // maps
  m.def("loday_ronco",
        [](const std::string& pi) {
          return loday_ronco(Permutation::parse(pi)).str();
        },
        py::arg("perm"));
  m.def("phihat",
        [](const std::string& pi) { return phihat(Permutation::parse(pi)).str(); },
        py::arg("perm"));
  m.def("varphi",
        [](const std::string& pi) { return varphi(Permutation::parse(pi)).str(); },
        py::arg("perm"));
  m.def("tonks_map",
        [](const std::string& pi) {
          return tonks_map(Permutation::parse(pi)).str();
        },
        py::arg("perm"));
  m.def(
      "tonks_independent",
      [](const std::string& pi, int pos) {
        return tonks_independent(Permutation::parse(pi), pos);
      },
      py::arg("perm"), py::arg("pos"));
  m.def(
      "tonks_classes",
      [](std::size_t n, std::size_t max_n) {
        py::list out;
        for (const TonksClass& cls : tonks_classes(n, max_n).classes) {
          out.append(py::make_tuple(cls.tree.str(), to_strings(cls.members)));
        }
        return out;
      },
      py::arg("n"), py::arg("max_n") = 8);

  // verification
  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("check", &VerificationReport::check)
      .def_readonly("n", &VerificationReport::n)
      .def_readonly("instances", &VerificationReport::instances)
      .def_readonly("failures", &VerificationReport::failures)
      .def_readonly("elapsed_seconds", &VerificationReport::elapsed_seconds)
      .def("passed", &VerificationReport::passed)
      .def("text", &VerificationReport::text)
      .def("tsv_line", &VerificationReport::tsv_line)
      .def("__repr__", [](const VerificationReport& r) {
        return "<VerificationReport " + r.check + " n=" + std::to_string(r.n) +
               (r.passed() ? " PASS>" : " FAIL>");
      });

  m.def(
      "classify_cover",
      [](const std::string& pi, const std::string& rho) -> py::object {
        CoverClassification verdict =
            classify_cover(Permutation::parse(pi), Permutation::parse(rho));
        if (verdict.collapsed()) return py::none();
        return py::make_tuple(verdict.rotation->tree_from.str(),
                              verdict.rotation->tree_to.str());
      },
      py::arg("pi"), py::arg("rho"),
      "None when the cover collapses, otherwise the (from, to) rotation pair");
  m.def(
      "check_local_indices",
      [](const std::string& tau, int u, int v) {
        return check_local_indices(Word::parse(tau), u, v);
      },
      py::arg("tau"), py::arg("u"), py::arg("v"));
  m.def("verify_identities", &verify_identities, py::arg("n"),
        py::arg("max_n") = 9);
  m.def("verify_order_preservation", &verify_order_preservation, py::arg("n"),
        py::arg("max_n") = 9);
  m.def("verify_classes", &verify_classes, py::arg("n"), py::arg("max_n") = 9);
  m.def("verify_quotient", &verify_quotient, py::arg("n"), py::arg("max_n") = 9);
  m.def("verify_local_indices", &verify_local_indices, py::arg("n"),
        py::arg("max_n") = 9);
  m.def("verify_soundness_fuzz", &verify_soundness_fuzz, py::arg("pairs"),
        py::arg("max_generators") = 10, py::arg("seed") = 20240901);
  m.def("verify_completeness", &verify_completeness, py::arg("max_generators"));
  m.def(
      "quotient_poset",
      [](std::size_t n, std::size_t max_n) {
        QuotientPoset q = quotient_poset(n, max_n);
        std::vector<std::string> trees;
        for (const BinaryTree& t : q.class_trees) trees.push_back(t.str());
        return py::make_tuple(q.poset.elements, trees, q.poset.covers,
                              q.isomorphic_to_tamari);
      },
      py::arg("n"), py::arg("max_n") = 8,
      "(representatives, class trees, cover index pairs, isomorphic_to_tamari)");
  m.def(
      "lattice_dot",
      [](std::size_t n, const std::string& order, bool color_fibers) {
        LatticeOrder which = LatticeOrder::weak;
        if (order == "tamari") which = LatticeOrder::tamari;
        else if (order == "quotient") which = LatticeOrder::quotient;
        else if (order != "weak") throw domain_error("unknown order " + order);
        return lattice_dot(n, which, color_fibers, n);
      },
      py::arg("n"), py::arg("order") = "weak", py::arg("color_fibers") = false);
}
