#pragma once

// End-to-end synthesis: decompose, write each factor as a word, concatenate,
// check the length bound and verify by evaluation.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cayley/decomp.hpp"
#include "cayley/error.hpp"
#include "cayley/matrix.hpp"
#include "cayley/rowsynth.hpp"
#include "cayley/word.hpp"

namespace cayley {

/// 3600 n^2 ln k.
inline double length_bound(std::size_t n, std::int64_t k) {
  return 3600.0 * static_cast<double>(n) * static_cast<double>(n) * std::log(static_cast<double>(k));
}

struct FactorReport {
  FactorKind kind;
  std::uint64_t length;
};

struct SynthesisReport {
  Matrix input;
  Word word;
  std::uint64_t length = 0;
  double bound = 0;
  std::vector<FactorReport> factors;
  bool verified = false;
};

struct SynthesisOptions {
  bool verify = true;
};

inline Word factor_word(const FactorSpec& f) {
  if (const auto* r = std::get_if<RowSpec>(&f)) return row_matrix_word(*r);
  if (const auto* c = std::get_if<ColSpec>(&f)) return col_matrix_word(*c);
  return row_matrix_word(as_row_spec(std::get<ElemSpec>(f)));
}

inline SynthesisReport synthesize(const Matrix& m, SynthesisOptions opts = {}) {
  check_dimension(m.dim());
  Factorization f = decompose(m);
  SynthesisReport rep{m, Word{}, 0, length_bound(m.dim(), m.modulus().value()), {}, false};
  rep.factors.reserve(f.factors.size());
  for (const auto& factor : f.factors) {
    Word w = factor_word(factor);
    rep.factors.push_back({kind_of(factor), w.length()});
    rep.word.append(w);
  }
  rep.length = rep.word.length();
  if (static_cast<double>(rep.length) > rep.bound)
    throw Error(Errc::invariant_breach, "word length " + std::to_string(rep.length) + " exceeds bound " +
                                            std::to_string(rep.bound));
  if (opts.verify) {
    if (!(evaluate(rep.word, m.dim(), m.modulus()) == m))
      throw Error(Errc::invariant_breach, "synthesized word does not evaluate to the input");
    rep.verified = true;
  }
  return rep;
}

}  // namespace cayley
