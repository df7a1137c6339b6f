#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ppgrowth/error.hpp"
#include "ppgrowth/growthlab.hpp"
#include "ppgrowth/serialize.hpp"

namespace py = pybind11;
using namespace ppgrowth;

namespace {

py::int_ to_py(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

// Structured results cross the boundary as JSON text; the package decodes it.
std::string dump(const json& j) { return j.dump(); }

Automorphism moves_from_text(const std::vector<std::string>& moves, int rank) {
  std::vector<ElementaryMove> ms;
  for (const auto& t : moves) ms.push_back(parse_move(t, rank));
  return Automorphism(rank, std::move(ms));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Growth of potentially positive words in free groups.";

  // Messages carry the error kind as a prefix, e.g. "NotInDomain: ...".
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("reduce", [](const std::string& w, int rank) { return format_word(parse_word(w, rank)); },
        py::arg("word"), py::arg("rank") = 2);
  m.def("canonical", [](const std::string& w, int rank) { return format_word(parse_cyclic(w, rank)); },
        py::arg("word"), py::arg("rank") = 2, "Least rotation of the cyclic reduction.");
  m.def("enumerate_cyclic",
        [](int rank, std::size_t n) {
          std::vector<std::string> out;
          for (const auto& w : enumerate_cyclic(rank, n)) out.push_back(format_word(w));
          return out;
        },
        py::arg("rank"), py::arg("length"));
  m.def("apply_moves",
        [](const std::vector<std::string>& moves, const std::string& w, int rank, bool cyclic) {
          Automorphism phi = moves_from_text(moves, rank);
          return cyclic ? format_word(phi.apply(parse_cyclic(w, rank))) : format_word(phi.apply(parse_word(w, rank)));
        },
        py::arg("moves"), py::arg("word"), py::arg("rank") = 2, py::arg("cyclic") = true,
        "Apply moves such as 'b->ba', 'a->A' or 'a<->b' left to right.");

  py::class_<Automaton>(m, "Automaton")
      .def_static("build", &build_named, py::arg("name"))
      .def_static("from_text", &read_automaton, py::arg("text"))
      .def("to_text", &write_automaton)
      .def_property_readonly("rank", &Automaton::rank)
      .def_property_readonly("size", &Automaton::size)
      .def_property_readonly("edge_count", [](const Automaton& a) { return a.edges().size(); })
      .def("properties_json", [](const Automaton& a) { return dump(to_json(check_properties(a))); })
      .def("charpoly",
           [](const Automaton& a) {
             IntPolynomial p = charpoly(adjacency_matrix(a));
             py::list out;
             for (int i = 0; i <= p.degree(); ++i) out.append(to_py(p.coefficient(i)));
             return out;
           },
           "Coefficients of det(xI - A), constant term first.")
      .def("dominant_root_json",
           [](const Automaton& a, int digits) { return dump(to_json(dominant_root(charpoly(adjacency_matrix(a)), digits))); },
           py::arg("digits") = kDefaultDigits)
      .def("count_closed_paths", [](const Automaton& a, unsigned long n) { return to_py(count_closed_paths(a, n)); },
           py::arg("length"))
      .def("language",
           [](const Automaton& a, std::size_t n) {
             std::vector<std::string> out;
             for (const auto& w : language(a, n)) out.push_back(format_word(w));
             return out;
           },
           py::arg("length"))
      .def("accepts", [](const Automaton& a, const std::string& w) { return accepts(a, parse_cyclic(w, a.rank())); },
           py::arg("word"))
      .def("__eq__", [](const Automaton& a, const Automaton& b) { return a == b; })
      .def("__repr__", [](const Automaton& a) {
        return "<Automaton rank " + std::to_string(a.rank()) + ", " + std::to_string(a.size()) + " nodes>";
      });

  m.def("decide_json",
        [](const std::string& w, std::optional<std::size_t> max_steps) {
          py::gil_scoped_release release;
          return dump(to_json(decide_pp2(parse_cyclic(w, 2), max_steps)));
        },
        py::arg("word"), py::arg("max_steps") = py::none());
  m.def("positivize_rank_word",
        [](int r, const std::string& w) {
          Automorphism phi = positivize_rank_word(r, parse_cyclic(w, r));
          std::vector<std::string> out;
          for (const auto& mv : phi.moves()) out.push_back(format_move(mv, r));
          return out;
        },
        py::arg("rank"), py::arg("word"));
  m.def("goldstein_check",
        [](const std::string& w) {
          std::vector<std::string> out;
          for (const auto& p : goldstein_check(parse_cyclic(w, 2))) out.push_back(format_pair(p));
          return out;
        },
        py::arg("word"));

  m.def("encode_f", [](long n, const std::string& w) { return format_word(encode_f(n, parse_cyclic(w, 2))); },
        py::arg("n"), py::arg("word"));
  m.def("decode_f", [](long n, const std::string& w) { return format_word(decode_f(n, parse_cyclic(w, 2))); },
        py::arg("n"), py::arg("word"));
  m.def("encode_signal", [](long n, const std::string& w) { return format_word(encode_signal(n, parse_cyclic(w, 2))); },
        py::arg("n"), py::arg("word"));
  m.def("decode_signal",
        [](const std::string& w) {
          SignalDecoding d = decode_signal(parse_cyclic(w, 2));
          return py::make_tuple(d.n, format_word(d.word));
        },
        py::arg("word"));

  m.def("growth_table_json",
        [](const std::vector<int>& ranks, int digits) {
          std::vector<TableRow> rows;
          {
            py::gil_scoped_release release;
            rows = growth_table(ranks, digits + 4);
          }
          json arr = json::array();
          for (const auto& r : rows) arr.push_back(to_json(r, digits));
          return dump(arr);
        },
        py::arg("ranks"), py::arg("digits") = 4);
  m.def("count_language",
        [](const std::string& spec, std::size_t n, int rank) {
          mpz_class c;
          {
            py::gil_scoped_release release;
            c = count_language(named_spec(spec, rank), n);
          }
          return to_py(c);
        },
        py::arg("spec"), py::arg("length"), py::arg("rank") = 2);
  m.def("sample_json",
        [](std::size_t length, std::size_t count, std::uint64_t seed, std::size_t max_draws) {
          py::gil_scoped_release release;
          return dump(to_json(sample_pp2(length, count, seed, max_draws)));
        },
        py::arg("length"), py::arg("count"), py::arg("seed"), py::arg("max_draws") = 1'000'000);
}
