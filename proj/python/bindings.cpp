#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wordmaps/big.hpp"
#include "wordmaps/classifier.hpp"
#include "wordmaps/errors.hpp"
#include "wordmaps/finite_field.hpp"
#include "wordmaps/fricke.hpp"
#include "wordmaps/triangular.hpp"

namespace py = pybind11;
using namespace wordmaps;
using nlohmann::json;

// Structured results cross the boundary as JSON text; the Python side decodes them.
PYBIND11_MODULE(_core, m) {
  m.doc() = "word maps on SL(2) and PSL(2)";

  py::register_exception<InapplicableError>(m, "InapplicableError");
  py::register_exception<VerificationError>(m, "VerificationError");
  py::register_exception<WordParseError>(m, "WordParseError", PyExc_ValueError);

  m.def("normalize", [](const std::string& w, int n) { return parse_word(w, n).to_string(); }, py::arg("word"),
        py::arg("generators") = 2);
  m.def("exponent_sums", [](const std::string& w, int n) { return exponent_sums(parse_word(w, n)); }, py::arg("word"),
        py::arg("generators") = 2);
  m.def("derived_level", [](const std::string& w, int n) { return to_string(classify_derived_level(parse_word(w, n)).level); },
        py::arg("word"), py::arg("generators") = 2);

  m.def(
      "analyze_json",
      [](const std::string& w, int n, const std::vector<std::string>& big, bool ff, int prime) {
        AnalyzeOptions opts;
        for (const auto& a : big) opts.big_samples.push_back(parse_rational(a));
        opts.do_ff = ff;
        opts.prime = prime;
        return report_json(analyze(parse_word(w, n), opts)).dump();
      },
      py::arg("word"), py::arg("generators") = 2, py::arg("big") = std::vector<std::string>{}, py::arg("ff") = false,
      py::arg("prime") = 5);

  m.def("trace_polys", [](const std::string& w) {
    auto tm = trace_polys(parse_word(w));
    return std::make_pair(tm.P.to_string(), tm.Q.to_string());
  });

  m.def("big_slice_json", [](const std::string& w, const std::string& a) {
    auto rep = big_slice(parse_word(w), parse_rational(a));
    json levels = json::array();
    for (const auto& l : rep.levels) levels.push_back({{"s_exponent", l.exponent}, {"p", l.p.to_string()}});
    return json{{"R", rep.R.to_string()}, {"levels", levels}, {"root_mode", rep.root_mode},
                {"verdict", to_string(rep.verdict)}}
        .dump();
  });

  m.def("minus_id", [](const std::string& w) {
    auto r = minus_id_criterion(parse_word(w));
    return std::make_tuple(r.N, r.in_image, r.route);
  });

  m.def(
      "ff_image",
      [](const std::string& w, int p, bool projective, int n) {
        auto img = ff_image(parse_word(w, n), p, projective);
        return std::make_tuple(img.image_size, img.group_order, img.full);
      },
      py::arg("word"), py::arg("prime"), py::arg("projective") = false, py::arg("generators") = 2);

  m.def(
      "verify_paper",
      [](std::uint64_t seed) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& s : verify_paper_suite(seed)) out.emplace_back(s.name, s.passed, s.detail);
        return out;
      },
      py::arg("seed") = 1);
}
