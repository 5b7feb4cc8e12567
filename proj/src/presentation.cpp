#include "schur/presentation.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "schur/errors.hpp"
#include "schur/smith.hpp"

namespace schur {

namespace {

// Parenthesised powers expand their word; this bounds the expanded length.
constexpr std::size_t kMaxWordLength = 1'000'000;

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  Presentation parse() {
    Presentation p;
    expect('<');
    skip_space();
    if (peek() != '|') {
      for (;;) {
        const std::size_t at = skip_space();
        std::string name = identifier();
        if (index_.count(name)) throw ParseError("duplicate generator '" + name + "'", at);
        index_.emplace(name, p.generator_names.size());
        p.generator_names.push_back(std::move(name));
        skip_space();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    expect('|');
    skip_space();
    if (peek() != '>') {
      for (;;) {
        p.relators.push_back(reduce(word()));
        skip_space();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    expect('>');
    if (skip_space() != text_.size()) throw ParseError("trailing input", pos_);
    return p;
  }

 private:
  std::size_t skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      const std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
      throw ParseError(std::string("expected '") + c + "', found " + found, pos_);
    }
    ++pos_;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError("expected a generator name", pos_);
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    long long value = 0;
    const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_)
      throw ParseError("expected an integer exponent", start);
    return value;
  }

  bool at_term_start() {
    skip_space();
    const char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '[';
  }

  Word word() {
    if (!at_term_start()) throw ParseError("expected a word", pos_);
    Word w;
    while (at_term_start()) {
      Word t = term();
      w.insert(w.end(), t.begin(), t.end());
      check_length(w);
    }
    return w;
  }

  Word term() {
    const std::size_t start = pos_;
    Word base = atom();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    const long long n = integer();
    if (base.size() == 1) {
      long long e = 0;
      if (__builtin_mul_overflow(base[0].exponent, n, &e))
        throw ParseError("exponent overflow", start);
      if (e == 0) return {};
      return {Letter{base[0].generator, e}};
    }
    const Word unit = n < 0 ? inverse(base) : base;
    const unsigned long long reps = n < 0 ? 0ULL - static_cast<unsigned long long>(n)
                                          : static_cast<unsigned long long>(n);
    if (!unit.empty() && reps > kMaxWordLength / unit.size())
      throw ParseError("expanded word too long", start);
    Word out;
    for (unsigned long long i = 0; i < reps; ++i) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  Word atom() {
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (peek() == '[') {
      ++pos_;
      Word u = word();
      expect(',');
      Word v = word();
      expect(']');
      Word out = u;
      out.insert(out.end(), v.begin(), v.end());
      const Word ui = inverse(u), vi = inverse(v);
      out.insert(out.end(), ui.begin(), ui.end());
      out.insert(out.end(), vi.begin(), vi.end());
      return out;
    }
    const std::string name = identifier();
    auto it = index_.find(name);
    if (it == index_.end()) throw ParseError("unknown generator '" + name + "'", start);
    return {Letter{it->second, 1}};
  }

  void check_length(const Word& w) const {
    if (w.size() > kMaxWordLength) throw ParseError("expanded word too long", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> index_;
};

Letter letter(std::size_t g, long long e) { return Letter{g, e}; }

Word commutator(std::size_t a, std::size_t b) {
  return {letter(a, 1), letter(b, 1), letter(a, -1), letter(b, -1)};
}

}  // namespace

Word reduce(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().generator == l.generator) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, -it->exponent});
  return out;
}

Presentation parse_presentation(std::string_view text, bool aspherical) {
  Presentation p = PresentationParser(text).parse();
  p.aspherical = aspherical;
  return p;
}

std::string to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += names.at(l.generator);
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

std::string to_string(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generator_names.size(); ++i)
    out += (i ? ", " : "") + p.generator_names[i];
  out += " | ";
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    out += (j ? ", " : "") + to_string(p.relators[j], p.generator_names);
  return out + ">";
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m = zero_matrix(static_cast<Eigen::Index>(p.generator_count()),
                            static_cast<Eigen::Index>(p.relators.size()));
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    for (const auto& l : p.relators[j]) {
      if (l.generator >= p.generator_count())
        throw InvalidArgument("relator refers to generator " + std::to_string(l.generator));
      m(static_cast<Eigen::Index>(l.generator), static_cast<Eigen::Index>(j)) +=
          from_int64(l.exponent);
    }
  return m;
}

FgAbelianGroup abelianization(const Presentation& p) { return cokernel_group(exponent_matrix(p)); }

MultiplierBounds multiplier_bounds(const Presentation& p) {
  // One 0-cell, so the complex has d_1 = 0 and no 3-cells: H_2 = ker d_2.
  const IntMatrix d2 = exponent_matrix(p);
  MultiplierBounds b;
  b.h2_complex = homology(d2, zero_matrix(d2.cols(), 0));
  b.relator_bound = p.relators.size();
  b.rank_bound = b.h2_complex.free_rank();
  b.exact = p.aspherical;
  return b;
}

namespace presentations {

Presentation cyclic(long n) {
  return Presentation{{"a"}, {reduce({letter(0, n)})}, false};
}

Presentation free_abelian(std::size_t n) {
  Presentation p;
  for (std::size_t i = 0; i < n; ++i) p.generator_names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p.relators.push_back(commutator(i, j));
  p.aspherical = true;
  return p;
}

Presentation dihedral(long n) {
  return Presentation{{"r", "s"},
                      {reduce({letter(0, n)}), {letter(1, 2)},
                       {letter(1, 1), letter(0, 1), letter(1, 1), letter(0, 1)}},
                      false};
}

Presentation quaternion8() {
  return Presentation{{"i", "j"},
                      {{letter(0, 2), letter(1, -2)},
                       {letter(1, -1), letter(0, 1), letter(1, 1), letter(0, 1)}},
                      false};
}

Presentation symmetric3() {
  return Presentation{{"a", "b"},
                      {{letter(0, 3)}, {letter(1, 2)},
                       {letter(0, 1), letter(1, 1), letter(0, 1), letter(1, 1)}},
                      false};
}

Presentation cyclic_product(long m, long n) {
  return Presentation{{"a", "b"}, {reduce({letter(0, m)}), reduce({letter(1, n)}), commutator(0, 1)}, false};
}

}  // namespace presentations

}  // namespace schur
