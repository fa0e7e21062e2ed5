// cayley_forge: synthesize, verify and measure words in A and B for SL_n(Z/kZ).
//
// Exit codes: 0 success, 1 verification mismatch, 2 bad input, 3 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "cayley/cayley.hpp"

using namespace cayley;
using json = nlohmann::ordered_json;

namespace {

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("cayley_forge");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("CAYLEY_FORGE_LOG")) {
    auto level = spdlog::level::from_str(env);
    if (level == spdlog::level::off && std::string(env) != "off")
      spdlog::warn("unknown CAYLEY_FORGE_LOG level '{}', keeping 'warn'", env);
    else
      spdlog::set_level(level);
  }
}

// "2^2,3" -> [(2,2,4), (3,1,3)].
std::vector<PrimePower> parse_factors(const std::string& text) {
  std::vector<PrimePower> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto caret = item.find('^');
    try {
      std::size_t used = 0;
      std::int64_t p = std::stoll(item.substr(0, caret), &used);
      if (used != item.substr(0, caret).size()) throw std::invalid_argument(item);
      int m = 1;
      if (caret != std::string::npos) {
        m = std::stoi(item.substr(caret + 1), &used);
        if (used != item.size() - caret - 1) throw std::invalid_argument(item);
      }
      if (p < 2 || m < 1 || m > 62) throw std::invalid_argument(item);
      std::int64_t power = 1;
      for (int i = 0; i < m; ++i) {
        if (power > std::numeric_limits<std::int64_t>::max() / p) throw std::out_of_range(item);
        power *= p;
      }
      out.push_back({p, m, power});
    } catch (const std::logic_error&) {
      throw Error(Errc::parse_error, "bad factor '" + item + "' (expected p or p^m)");
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

Modulus make_modulus(std::int64_t k, const std::string& factors) {
  if (factors.empty()) return Modulus(k);
  return Modulus(k, parse_factors(factors));
}

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Matrix load_matrix(const std::string& path, std::size_t n, const Modulus& mod) {
  std::istringstream in(read_all(path));
  Matrix m = read_matrix(in, mod);
  if (m.dim() != n)
    throw Error(Errc::shape_mismatch, "matrix file has n = " + std::to_string(m.dim()) + ", expected " + std::to_string(n));
  return m;
}

json report_json(const SynthesisReport& r, bool with_word) {
  json factors = json::array();
  for (const auto& f : r.factors) factors.push_back({{"kind", to_string(f.kind)}, {"length", f.length}});
  json j{{"n", r.input.dim()},
         {"k", r.input.modulus().value()},
         {"length", r.length},
         {"runs", r.word.runs().size()},
         {"bound", r.bound},
         {"ratio", static_cast<double>(r.length) / r.bound},
         {"verified", r.verified},
         {"factors", factors}};
  if (with_word) j["word"] = serialize(r.word);
  return j;
}

json stats_json(const StatsSummary& s, bool exhaustive) {
  json j{{"n", s.n},
         {"k", s.k},
         {"samples", s.samples},
         {"min_length", s.min_length},
         {"max_length", s.max_length},
         {"mean_length", s.mean_length},
         {"bound", s.bound},
         {"lower_bound", s.lower_bound},
         {"max_ratio_to_bound", s.max_ratio_to_bound},
         {"mean_ratio_to_lower", s.mean_ratio_to_lower},
         {"seconds_per_synthesis", s.seconds_per_synthesis},
         {"verified", s.verified}};
  if (exhaustive) j["diameter"] = s.diameter;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Short words in the generators A, B of SL_n(Z/kZ)"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::int64_t k = 0;
  std::string factors;
  auto add_nk = [&](CLI::App* sub) {
    sub->add_option("--n", n, "matrix dimension (>= 3)")->required();
    sub->add_option("--k", k, "modulus (>= 2)")->required();
    sub->add_option("--factors", factors, "prime factorization of k, e.g. 2^3,5");
  };

  auto* synth = app.add_subcommand("synth", "write a matrix as a word and report its length");
  add_nk(synth);
  std::string matrix_path = "-";
  bool as_json = false, no_verify = false;
  synth->add_option("matrix", matrix_path, "matrix file, or - for stdin");
  synth->add_flag("--json", as_json, "emit a JSON report (word included)");
  synth->add_flag("--no-verify", no_verify, "skip evaluating the word");

  auto* verify = app.add_subcommand("verify", "check that a word evaluates to a matrix");
  add_nk(verify);
  std::string verify_matrix, verify_word;
  verify->add_option("matrix", verify_matrix, "matrix file")->required();
  verify->add_option("word", verify_word, "word file")->required();

  auto* bfs = app.add_subcommand("bfs", "exact distances for tiny groups (CSV histogram)");
  add_nk(bfs);

  auto* st = app.add_subcommand("stats", "word-length statistics over seeded random elements");
  add_nk(st);
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool exhaustive = false, stats_json_out = false, stats_no_verify = false;
  st->add_option("--samples", samples, "number of random elements")->default_val(100);
  st->add_option("--seed", seed, "random seed")->default_val(1);
  st->add_option("--threads", threads, "worker threads")->default_val(1)->check(CLI::Range(1u, 1024u));
  st->add_flag("--exhaustive", exhaustive, "use every element of a BFS-enumerable group");
  st->add_flag("--json", stats_json_out, "emit JSON instead of CSV");
  st->add_flag("--no-verify", stats_no_verify, "skip evaluating the words");

  CLI11_PARSE(app, argc, argv);

  try {
    Modulus mod = make_modulus(k, factors);
    check_dimension(n);
    spdlog::debug("n = {}, k = {}, {} prime factor(s)", n, k, mod.factors().size());

    if (*synth) {
      Matrix m = load_matrix(matrix_path, n, mod);
      SynthesisReport r = synthesize(m, {!no_verify});
      spdlog::info("{} factors, length {}, bound {:.0f}", r.factors.size(), r.length, r.bound);
      if (as_json) {
        std::cout << report_json(r, true).dump(2) << '\n';
      } else {
        std::cout << serialize(r.word) << '\n';
        std::cerr << "length " << r.length << " (bound " << static_cast<std::uint64_t>(r.bound) << ", ratio "
                  << static_cast<double>(r.length) / r.bound << "), " << r.factors.size() << " factors, "
                  << (r.verified ? "verified" : "not verified") << '\n';
      }
      return 0;
    }

    if (*verify) {
      Matrix m = load_matrix(verify_matrix, n, mod);
      Word w = parse_word(read_all(verify_word));
      bool ok = evaluate(w, n, mod) == m;
      std::cout << (ok ? "OK" : "mismatch") << '\n';
      spdlog::info("word length {}", w.length());
      return ok ? 0 : 1;
    }

    if (*bfs) {
      BfsTable t = bfs_distances(n, mod);
      std::cout << "# n=" << n << " k=" << k << " elements=" << t.distances.size() << " diameter=" << t.diameter
                << '\n';
      std::cout << "distance,count\n";
      for (std::size_t d = 0; d < t.histogram.size(); ++d) std::cout << d << ',' << t.histogram[d] << '\n';
      return 0;
    }

    if (*st) {
      StatsSummary s = exhaustive ? exhaustive_stats(n, mod, !stats_no_verify)
                                  : stats(n, mod, samples, {seed, threads, !stats_no_verify});
      json j = stats_json(s, exhaustive);
      if (stats_json_out) {
        std::cout << j.dump(2) << '\n';
      } else {
        std::string header, row;
        for (auto& [key, value] : j.items()) {
          header += (header.empty() ? "" : ",") + key;
          row += (row.empty() ? "" : ",") + value.dump();
        }
        std::cout << header << '\n' << row << '\n';
      }
      return 0;
    }
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return e.code() == Errc::invariant_breach ? 3 : 2;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 3;
  }
  return 0;
}
