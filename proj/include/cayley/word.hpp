#pragma once

// Words over {A, B}, kept run-length encoded end to end.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/matrix.hpp"

namespace cayley {

struct Run {
  Gen letter;
  std::int64_t exp;

  friend bool operator==(const Run&, const Run&) = default;
};

/// A word in canonical run-length form: adjacent runs have distinct letters
/// and no run has exponent 0. Only adjacent runs are ever merged.
class Word {
 public:
  Word() = default;

  static Word letter(Gen g, std::int64_t e = 1) {
    Word w;
    w.append(g, e);
    return w;
  }

  void append(Gen g, std::int64_t e) {
    if (e == 0) return;
    if (!runs_.empty() && runs_.back().letter == g) {
      Run& last = runs_.back();
      length_ -= magnitude(last.exp);
      last.exp += e;
      if (last.exp == 0) {
        runs_.pop_back();
      } else {
        length_ += magnitude(last.exp);
      }
      return;
    }
    runs_.push_back({g, e});
    length_ += magnitude(e);
  }

  void append(const Word& w) {
    if (runs_.capacity() < runs_.size() + w.runs_.size())
      runs_.reserve(std::max(2 * runs_.capacity(), runs_.size() + w.runs_.size()));
    for (const Run& r : w.runs_) append(r.letter, r.exp);
  }

  /// Appends the inverse of w without materializing it.
  void append_inverse(const Word& w) {
    for (auto it = w.runs_.rbegin(); it != w.runs_.rend(); ++it) append(it->letter, -it->exp);
  }

  /// Appends w^e (e may be negative).
  void append_power(const Word& w, std::int64_t e) {
    for (std::int64_t i = 0; i < e; ++i) append(w);
    for (std::int64_t i = 0; i < -e; ++i) append_inverse(w);
  }

  Word& operator*=(const Word& w) {
    append(w);
    return *this;
  }
  friend Word operator*(Word u, const Word& v) {
    u.append(v);
    return u;
  }

  Word inverse() const {
    Word w;
    w.append_inverse(*this);
    return w;
  }

  std::span<const Run> runs() const noexcept { return runs_; }
  bool empty() const noexcept { return runs_.empty(); }

  /// Cayley-graph word length: sum of |exponent| over runs.
  std::uint64_t length() const noexcept { return length_; }

  friend bool operator==(const Word& u, const Word& v) noexcept { return u.runs_ == v.runs_; }

 private:
  static std::uint64_t magnitude(std::int64_t e) noexcept {
    return e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  }

  std::vector<Run> runs_;
  std::uint64_t length_ = 0;
};

inline Word concat(std::span<const Word> ws) {
  Word out;
  for (const Word& w : ws) out.append(w);
  return out;
}

inline Word invert(const Word& w) { return w.inverse(); }

// ---------------------------------------------------------------------------
// Evaluation.
//
// The running product is kept as X = Y * B^s. A B-run only moves s; an A-run
// becomes a single column operation on Y, because B^s e_{1,2} B^-s is a signed
// elementary matrix. Cost: O(n) per A-run, O(1) per B-run.

class Evaluator {
 public:
  Evaluator(std::size_t n, Modulus mod) : n_(n), mod_(std::move(mod)), small_(mod_.value() < (std::int64_t{1} << 31)) {
    check_dimension(n);
    const std::size_t order = 2 * n;
    image_.resize(order * n);
    // B e_0 = sigma e_{n-1}, B e_a = e_{a-1}.
    const std::int64_t sigma = (n % 2 == 1) ? 1 : -1;
    for (std::size_t a = 0; a < n; ++a) image_[a] = {a, 1};
    for (std::size_t s = 1; s < order; ++s) {
      for (std::size_t a = 0; a < n; ++a) {
        Image prev = image_[(s - 1) * n + a];
        image_[s * n + a] = prev.index == 0 ? Image{n - 1, prev.sign * sigma} : Image{prev.index - 1, prev.sign};
      }
    }
  }

  /// x <- x * w.
  void apply(Matrix& x, const Word& w) const {
    const std::size_t n = n_;
    const auto order = static_cast<std::int64_t>(2 * n);
    // Column-major working copy.
    std::vector<std::int64_t> y(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) y[j * n + i] = x(i, j);
    std::int64_t s = 0;
    for (const Run& r : w.runs()) {
      if (r.letter == Gen::B) {
        s = ((s + r.exp % order) % order + order) % order;
        continue;
      }
      const Image& from = image_[static_cast<std::size_t>(s) * n + 0];
      const Image& to = image_[static_cast<std::size_t>(s) * n + 1];
      std::int64_t coef = mod_.reduce(r.exp);
      if (from.sign * to.sign < 0) coef = mod_.neg(coef);
      add_column(y, to.index, from.index, coef);
    }
    // X = Y * B^s: column c of X is sign * column image(c) of Y.
    for (std::size_t c = 0; c < n; ++c) {
      const Image& im = image_[static_cast<std::size_t>(s) * n + c];
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t v = y[im.index * n + i];
        x.data()[i * n + c] = im.sign > 0 ? v : mod_.neg(v);
      }
    }
  }

  Matrix evaluate(const Word& w) const {
    Matrix x = Matrix::identity(n_, mod_);
    apply(x, w);
    return x;
  }

 private:
  struct Image {
    std::size_t index;
    std::int64_t sign;
  };

  void add_column(std::vector<std::int64_t>& y, std::size_t dst, std::size_t src, std::int64_t coef) const {
    const std::size_t n = n_;
    std::int64_t* d = y.data() + dst * n;
    const std::int64_t* sc = y.data() + src * n;
    const std::int64_t k = mod_.value();
    if (small_) {
      const auto uk = static_cast<std::uint64_t>(k);
      for (std::size_t i = 0; i < n; ++i) {
        if (sc[i] == 0) continue;
        d[i] = static_cast<std::int64_t>((static_cast<std::uint64_t>(d[i]) +
                                          static_cast<std::uint64_t>(coef) * static_cast<std::uint64_t>(sc[i])) % uk);
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (sc[i] == 0) continue;
        d[i] = mod_.add(d[i], mod_.mul(coef, sc[i]));
      }
    }
  }

  std::size_t n_;
  Modulus mod_;
  bool small_;
  std::vector<Image> image_;  // image_[s*n + a]: B^s e_a = sign * e_index
};

inline Matrix evaluate(const Word& w, std::size_t n, const Modulus& mod) { return Evaluator(n, mod).evaluate(w); }

/// x <- x * w.
inline void apply_word(Matrix& x, const Word& w) { Evaluator(x.dim(), x.modulus()).apply(x, w); }

// ---------------------------------------------------------------------------
// Text format: whitespace-separated tokens A, B, A^<int>, B^<int>.

inline Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  std::size_t token_no = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    std::string_view tok = text.substr(start, pos - start);
    ++token_no;
    auto fail = [&](const std::string& why) {
      throw Error(Errc::parse_error, "token " + std::to_string(token_no) + " at offset " + std::to_string(start) +
                                         " (\"" + std::string(tok) + "\"): " + why);
    };
    Gen g;
    if (tok[0] == 'A') {
      g = Gen::A;
    } else if (tok[0] == 'B') {
      g = Gen::B;
    } else {
      fail("expected A or B");
    }
    std::int64_t e = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^' || tok.size() == 2) fail("expected ^<int>");
      std::string_view num = tok.substr(2);
      if (num[0] == '+') num.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), e);
      if (ec != std::errc() || ptr != num.data() + num.size()) fail("bad exponent");
    }
    w.append(g, e);
  }
  return w;
}

inline std::string serialize(const Word& w) {
  std::string out;
  for (const Run& r : w.runs()) {
    if (!out.empty()) out += ' ';
    out += (r.letter == Gen::A ? 'A' : 'B');
    if (r.exp != 1) {
      out += '^';
      out += std::to_string(r.exp);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Binary framing: "CFW1", varint run count, then per run a letter byte and a
// zigzag varint exponent.

namespace detail {

inline void put_varint(std::string& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

inline std::uint64_t get_varint(std::string_view in, std::size_t& pos) {
  std::uint64_t v = 0;
  for (int shift = 0; shift < 64; shift += 7) {
    if (pos >= in.size()) throw Error(Errc::parse_error, "truncated varint at byte " + std::to_string(pos));
    auto byte = static_cast<std::uint8_t>(in[pos++]);
    v |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
    if ((byte & 0x80) == 0) return v;
  }
  throw Error(Errc::parse_error, "varint too long at byte " + std::to_string(pos));
}

}  // namespace detail

inline std::string encode_binary(const Word& w) {
  std::string out = "CFW1";
  detail::put_varint(out, w.runs().size());
  for (const Run& r : w.runs()) {
    out.push_back(r.letter == Gen::A ? 'A' : 'B');
    auto zz = (static_cast<std::uint64_t>(r.exp) << 1) ^ static_cast<std::uint64_t>(r.exp >> 63);
    detail::put_varint(out, zz);
  }
  return out;
}

inline Word decode_binary(std::string_view in) {
  if (in.substr(0, 4) != "CFW1") throw Error(Errc::parse_error, "missing CFW1 header");
  std::size_t pos = 4;
  std::uint64_t count = detail::get_varint(in, pos);
  Word w;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (pos >= in.size()) throw Error(Errc::parse_error, "truncated run " + std::to_string(i));
    char c = in[pos++];
    if (c != 'A' && c != 'B') throw Error(Errc::parse_error, "bad letter byte at " + std::to_string(pos - 1));
    std::uint64_t zz = detail::get_varint(in, pos);
    auto e = static_cast<std::int64_t>((zz >> 1) ^ (~(zz & 1) + 1));
    w.append(c == 'A' ? Gen::A : Gen::B, e);
  }
  if (pos != in.size()) throw Error(Errc::parse_error, "trailing bytes after word");
  return w;
}

}  // namespace cayley
