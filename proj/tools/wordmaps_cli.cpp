#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wordmaps/big.hpp"
#include "wordmaps/classifier.hpp"
#include "wordmaps/errors.hpp"
#include "wordmaps/finite_field.hpp"
#include "wordmaps/fricke.hpp"
#include "wordmaps/triangular.hpp"

using namespace wordmaps;
using nlohmann::json;

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  return out;
}

// "[[a,b],[c,d]]" with rational entries
std::optional<RationalMatrix> parse_matrix(const std::string& text) {
  if (text.find('[') == std::string::npos) return std::nullopt;
  std::string flat;
  for (char ch : text) flat += (ch == '[' || ch == ']') ? ' ' : ch;
  std::vector<std::string> parts;
  for (const auto& p : split_list(flat)) {
    std::string t;
    for (char ch : p)
      if (ch != ' ') t += ch;
    if (!t.empty()) parts.push_back(t);
  }
  if (parts.size() != 4) throw std::invalid_argument("a matrix target needs four entries");
  return RationalMatrix(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
                        parse_rational(parts[3]));
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word maps on SL(2) and PSL(2): criteria, certificates and replication checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "seed for the randomized steps");

  std::string word_text;
  int generators = 2;
  bool as_json = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "run every criterion and print the verdicts");
  std::string big_list;
  bool ff = false;
  int ff_prime = 5;
  analyze_cmd->add_option("word", word_text, "word, e.g. \"[x,y] x^2\"")->required();
  analyze_cmd->add_option("--generators", generators, "number of generators");
  analyze_cmd->add_option("--big", big_list, "comma separated slice values t = a for the trace-map criterion");
  analyze_cmd->add_flag("--ff", ff, "also enumerate the image over PSL(2, p) (heuristic)");
  analyze_cmd->add_option("--prime", ff_prime, "prime for --ff");
  analyze_cmd->add_flag("--json", as_json, "JSON output");

  auto* trace_cmd = app.add_subcommand("trace", "trace polynomials P_w = tr w and Q_w = tr(w y)");
  trace_cmd->add_option("word", word_text)->required();
  trace_cmd->add_flag("--json", as_json);

  auto* big_cmd = app.add_subcommand("big", "elimination on the slice t = a");
  std::string big_t;
  big_cmd->add_option("word", word_text)->required();
  big_cmd->add_option("--t", big_t, "slice value")->required();
  big_cmd->add_flag("--json", as_json);

  auto* witness_cmd = app.add_subcommand("witness", "preimage of a unipotent matrix or of a trace value");
  std::string target;
  witness_cmd->add_option("word", word_text)->required();
  witness_cmd->add_option("--generators", generators);
  witness_cmd->add_option("--target", target, "matrix [[a,b],[c,d]] of trace 2, or a number (trace)")->required();
  witness_cmd->add_flag("--json", as_json);

  auto* minus_cmd = app.add_subcommand("minusid", "the -id criterion for two-letter words");
  minus_cmd->add_option("word", word_text)->required();
  minus_cmd->add_flag("--json", as_json);

  auto* ff_cmd = app.add_subcommand("ff-image", "exhaustive image over SL(2, p) or PSL(2, p) (heuristic)");
  int prime = 5;
  bool projective = false;
  ff_cmd->add_option("word", word_text)->required();
  ff_cmd->add_option("--generators", generators);
  ff_cmd->add_option("--prime", prime)->required();
  ff_cmd->add_flag("--projective", projective);
  ff_cmd->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify-paper", "rerun the reference exact computations");
  verify_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze_cmd) {
      Word w = parse_word(word_text, generators);
      AnalyzeOptions opts;
      for (const auto& a : split_list(big_list)) opts.big_samples.push_back(parse_rational(a));
      opts.do_ff = ff;
      opts.prime = ff_prime;
      opts.seed = seed;
      std::cout << render_report(analyze(w, opts), as_json);
      if (as_json) std::cout << "\n";
    } else if (*trace_cmd) {
      Word w = parse_word(word_text, 2);
      auto tm = trace_polys(w);
      if (as_json) print({{"word", w.to_string()}, {"P", tm.P.to_string()}, {"Q", tm.Q.to_string()}});
      else std::cout << "P = " << tm.P.to_string() << "\nQ = " << tm.Q.to_string() << "\n";
    } else if (*big_cmd) {
      Word w = parse_word(word_text, 2);
      auto rep = big_slice(w, parse_rational(big_t));
      json levels = json::array();
      for (const auto& l : rep.levels) levels.push_back({{"s_exponent", l.exponent}, {"p", l.p.to_string()}});
      json j = {{"word", w.to_string()},     {"a", rational_json(rep.a)},  {"h1", rep.h1.to_string()},
                {"h2", rep.h2.to_string()},  {"R", rep.R.to_string()},     {"levels", levels},
                {"root_mode", rep.root_mode}, {"verdict", to_string(rep.verdict)}, {"reason", rep.reason}};
      if (as_json) {
        print(j);
      } else {
        std::cout << "h1 = " << j["h1"].get<std::string>() << "\nh2 = " << j["h2"].get<std::string>()
                  << "\nR = " << j["R"].get<std::string>() << "\n";
        for (const auto& l : rep.levels) std::cout << "  s^" << l.exponent << ": " << l.p.to_string() << "\n";
        std::cout << "verdict: " << to_string(rep.verdict) << " (" << rep.reason << ")\n";
      }
    } else if (*witness_cmd) {
      Word w = parse_word(word_text, generators);
      if (auto X = parse_matrix(target)) {
        auto wit = unipotent_witness(w, *X);
        json z = json::array();
        for (const auto& m : wit.Z) z.push_back(matrix_json(m));
        json a = json::array();
        for (const auto& v : wit.a) a.push_back(rational_json(v));
        json j = {{"word", w.to_string()}, {"target", matrix_json(*X)}, {"a", a}, {"c", rational_json(wit.c)},
                  {"S", matrix_json(wit.S)}, {"Z", z}, {"verified", "exact"}};
        if (as_json) {
          print(j);
        } else {
          for (std::size_t i = 0; i < wit.Z.size(); ++i) std::cout << "Z" << i + 1 << " = " << to_string(wit.Z[i]) << "\n";
          std::cout << "w(Z) = " << to_string(*X) << " (exact)\n";
        }
      } else {
        if (w.num_generators() != 2) throw InapplicableError("trace targets need a two-generator word");
        auto res = preimage_for_trace(w, Complex(to_double(parse_rational(target)), 0.0), seed);
        json j = {{"word", w.to_string()}, {"target_trace", target}, {"x", matrix_json(res.x)},
                  {"y", matrix_json(res.y)}, {"s", complex_json(res.s0)}, {"t", complex_json(res.t0)},
                  {"u", complex_json(res.u0)}, {"residual", res.residual}};
        if (as_json) print(j);
        else std::cout << "x = " << j["x"].dump() << "\ny = " << j["y"].dump() << "\nresidual " << res.residual << "\n";
      }
    } else if (*minus_cmd) {
      Word w = parse_word(word_text, 2);
      auto r = minus_id_criterion(w);
      json j = {{"word", w.to_string()}, {"N", r.N}, {"in_image", r.in_image}, {"route", r.route}};
      if (r.in_image) {
        j["x"] = matrix_json(r.x);
        j["y"] = matrix_json(r.y);
        j["residual"] = r.residual;
      }
      if (as_json) {
        print(j);
      } else {
        std::cout << "N = " << r.N << "\n";
        std::cout << (r.in_image ? "-id in image via " + r.route : std::string("no conclusion")) << "\n";
        if (r.in_image) std::cout << "x = " << j["x"].dump() << "\ny = " << j["y"].dump() << "\n";
      }
    } else if (*ff_cmd) {
      Word w = parse_word(word_text, generators);
      auto img = ff_image(w, prime, projective);
      json classes = json::array();
      for (const auto& c : img.by_trace) classes.push_back({{"trace", c.trace}, {"hit", c.hit}, {"total", c.total}});
      json missing = json::array();
      for (const auto& m : img.missing)
        missing.push_back(json::array({json::array({m.e[0], m.e[1]}), json::array({m.e[2], m.e[3]})}));
      json j = {{"word", w.to_string()}, {"p", prime},        {"group", projective ? "PSL" : "SL"},
                {"group_order", img.group_order}, {"image_size", img.image_size}, {"full", img.full},
                {"tuples", img.tuples},     {"by_trace", classes}, {"missing", missing},
                {"note", "heuristic: finite fields say nothing about characteristic zero"}};
      if (as_json) {
        print(j);
      } else {
        std::cout << (projective ? "PSL(2, " : "SL(2, ") << prime << "): image " << img.image_size << " of "
                  << img.group_order << (img.full ? " (full)" : "") << "\n";
        for (const auto& c : img.by_trace) std::cout << "  trace " << c.trace << ": " << c.hit << "/" << c.total << "\n";
        std::cout << "heuristic only\n";
      }
    } else if (*verify_cmd) {
      auto suite = verify_paper_suite(seed);
      bool ok = true;
      json j = json::array();
      for (const auto& s : suite) {
        ok = ok && s.passed;
        j.push_back({{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
        if (!as_json) std::cout << (s.passed ? "PASS " : "FAIL ") << s.name << ": " << s.detail << "\n";
      }
      if (as_json) print(j);
      if (!ok) return 3;
    }
  } catch (const WordParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
