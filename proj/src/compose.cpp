#include "schur/compose.hpp"

#include <cctype>

#include "schur/bar_oracle.hpp"
#include "schur/errors.hpp"

namespace schur {

GroupExpr GroupExpr::cyclic(const Integer& order) {
  if (sgn(order) <= 0) throw InvalidArgument("cyclic group order must be at least 1");
  return GroupExpr(std::make_shared<const Node>(Node{CyclicFinite{order}}));
}

GroupExpr GroupExpr::infinite_cyclic() {
  return GroupExpr(std::make_shared<const Node>(Node{CyclicInfinite{}}));
}

GroupExpr GroupExpr::abelian(FgAbelianGroup group) {
  return GroupExpr(std::make_shared<const Node>(Node{AbelianLeaf{std::move(group)}}));
}

GroupExpr GroupExpr::free_product(GroupExpr left, GroupExpr right) {
  return GroupExpr(std::make_shared<const Node>(Node{FreeProduct{std::move(left), std::move(right)}}));
}

GroupExpr GroupExpr::direct_product(GroupExpr left, GroupExpr right) {
  return GroupExpr(
      std::make_shared<const Node>(Node{DirectProduct{std::move(left), std::move(right)}}));
}

GroupExpr GroupExpr::finite(std::string name, FiniteGroup group) {
  return GroupExpr(std::make_shared<const Node>(
      Node{FiniteLeaf{std::move(name), std::make_shared<const FiniteGroup>(std::move(group))}}));
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t cap) : text_(text), cap_(cap) {}

  GroupExpr parse() {
    GroupExpr e = free_product();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool is_word_char(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  // Peeks the operator `x`, which must stand alone as a word.
  bool at_direct_operator() {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == 'x' &&
           (pos_ + 1 == text_.size() || !is_word_char(text_[pos_ + 1]));
  }

  GroupExpr free_product() {
    GroupExpr e = direct_product();
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '*') return e;
      ++pos_;
      e = GroupExpr::free_product(std::move(e), direct_product());
    }
  }

  GroupExpr direct_product() {
    GroupExpr e = primary();
    while (at_direct_operator()) {
      ++pos_;
      e = GroupExpr::direct_product(std::move(e), primary());
    }
    return e;
  }

  Integer positive_integer(std::size_t& start) {
    skip_space();
    start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a positive integer", start);
    Integer n(std::string(text_.substr(start, pos_ - start)));
    return n;
  }

  GroupExpr primary() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) throw ParseError("expected a group", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      GroupExpr e = free_product();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return e;
    }
    while (pos_ < text_.size() && is_word_char(text_[pos_])) ++pos_;
    const std::string word(text_.substr(start, pos_ - start));
    if (word.empty()) throw ParseError("expected a group", start);

    if (word == "Z") {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t at = 0;
        Integer n = positive_integer(at);
        if (sgn(n) == 0) throw ParseError("cyclic group of order 0", at);
        return GroupExpr::cyclic(n);
      }
      return GroupExpr::infinite_cyclic();
    }
    if (word == "1") return GroupExpr::cyclic(1);
    if (word == "Q8") return GroupExpr::finite(word, quaternion_group());
    if (word == "S3") return GroupExpr::finite(word, symmetric3_group());
    if (word == "A4") return GroupExpr::finite(word, alternating4_group());
    if (word == "table" && pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      const std::size_t path_start = pos_;
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             text_[pos_] != ')')
        ++pos_;
      if (path_start == pos_) throw ParseError("expected a table path", path_start);
      const std::string path(text_.substr(path_start, pos_ - path_start));
      return GroupExpr::finite("table:" + path, load_table(path, cap_));
    }
    if (word.size() > 1 && word[0] == 'D' &&
        word.find_first_not_of("0123456789", 1) == std::string::npos) {
      const Integer n(word.substr(1));
      if (sgn(n) == 0) throw ParseError("dihedral group needs n >= 1", start);
      if (2 * n > static_cast<unsigned long>(cap_))
        throw CapacityError("group " + word + " of order " + to_string(Integer(2 * n)) +
                            " exceeds the cap of " + std::to_string(cap_));
      return GroupExpr::finite(word, dihedral_group(n.get_ui(), cap_));
    }
    throw ParseError("unknown group '" + word + "'", start);
  }

  std::string_view text_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

enum class Prec { Free, Direct, Atom };

Prec precedence(const GroupExpr& e) {
  return std::visit(overloaded{[](const GroupExpr::FreeProduct&) { return Prec::Free; },
                               [](const GroupExpr::DirectProduct&) { return Prec::Direct; },
                               [](const auto&) { return Prec::Atom; }},
                    e.node().value);
}

std::string render(const GroupExpr& e, Prec context, bool right_operand) {
  std::string s = to_string(e);
  const Prec p = precedence(e);
  const bool wrap = p < context || (p == context && p != Prec::Atom && right_operand);
  return wrap ? "(" + s + ")" : s;
}

struct MultiplierEvaluator {
  const ComposeOptions& options;
  DerivationTrace trace;

  // Returns (M(e), e_ab).
  std::pair<FgAbelianGroup, FgAbelianGroup> eval(const GroupExpr& e) {
    return std::visit(
        overloaded{
            [&](const GroupExpr::CyclicFinite& c) {
              FgAbelianGroup ab = FgAbelianGroup::cyclic(c.order);
              trace.push_back({Rule::Cyclic, to_string(e), {}, "cyclic groups have trivial multiplier"});
              return std::pair{FgAbelianGroup{}, ab};
            },
            [&](const GroupExpr::CyclicInfinite&) {
              trace.push_back({Rule::Cyclic, to_string(e), {}, "cyclic groups have trivial multiplier"});
              return std::pair{FgAbelianGroup{}, FgAbelianGroup::free(1)};
            },
            [&](const GroupExpr::AbelianLeaf& a) { return abelian_leaf(e, a.group); },
            [&](const GroupExpr::FreeProduct& f) {
              auto [ml, al] = eval(f.left);
              auto [mr, ar] = eval(f.right);
              FgAbelianGroup m = direct_sum(ml, mr);
              trace.push_back({Rule::FreeProduct, to_string(e), m,
                               "M(A * B) = M(A) + M(B) = " + to_string(ml) + " + " + to_string(mr)});
              return std::pair{m, direct_sum(al, ar)};
            },
            [&](const GroupExpr::DirectProduct& d) {
              auto [ml, al] = eval(d.left);
              auto [mr, ar] = eval(d.right);
              const FgAbelianGroup cross = tensor(al, ar);
              FgAbelianGroup m = direct_sum(direct_sum(ml, mr), cross);
              trace.push_back({Rule::DirectProduct, to_string(e), m,
                               "M(A x B) = M(A) + M(B) + A_ab (x) B_ab = " + to_string(ml) + " + " +
                                   to_string(mr) + " + (" + to_string(al) + ") (x) (" +
                                   to_string(ar) + ") = " + to_string(ml) + " + " + to_string(mr) +
                                   " + " + to_string(cross)});
              return std::pair{m, direct_sum(al, ar)};
            },
            [&](const GroupExpr::FiniteLeaf& f) {
              if (f.group->order() > options.oracle_cap)
                throw CapacityError("finite group " + f.name + " of order " +
                                    std::to_string(f.group->order()) + " exceeds the oracle cap of " +
                                    std::to_string(options.oracle_cap));
              FgAbelianGroup m = bar_h2(*f.group, options.oracle_cap);
              FgAbelianGroup ab = bar_h1(*f.group);
              trace.push_back({Rule::BarOracle, to_string(e), m,
                               "H_2 of the normalized bar complex, order " +
                                   std::to_string(f.group->order())});
              return std::pair{m, ab};
            }},
        e.node().value);
  }

  // A = C_1 x ... x C_k over the canonical summands (free first, then invariant factors
  // ascending): folding M(P x C) = M(P) + P_ab (x) C gives M(A) = sum_{i<j} C_i (x) C_j.
  std::pair<FgAbelianGroup, FgAbelianGroup> abelian_leaf(const GroupExpr& e, const FgAbelianGroup& a) {
    FgAbelianGroup m, prefix;
    std::string detail = "iterated direct product over summands";
    for (const Integer& order : canonical_summands(a)) {
      const FgAbelianGroup c = sgn(order) == 0 ? FgAbelianGroup::free(1) : FgAbelianGroup::cyclic(order);
      m = direct_sum(m, tensor(prefix, c));
      prefix = direct_sum(prefix, c);
      detail += " [" + to_string(c) + "]";
    }
    trace.push_back({Rule::AbelianClosedForm, to_string(e), m, detail});
    return {m, a};
  }
};

}  // namespace

GroupExpr parse_expr(std::string_view text, std::size_t cap) { return ExprParser(text, cap).parse(); }

std::string to_string(const GroupExpr& e) {
  return std::visit(
      overloaded{[](const GroupExpr::CyclicFinite& c) {
                   return c.order == 1 ? std::string("1") : "Z/" + to_string(c.order);
                 },
                 [](const GroupExpr::CyclicInfinite&) { return std::string("Z"); },
                 [](const GroupExpr::AbelianLeaf& a) { return "{" + to_string(a.group) + "}"; },
                 [](const GroupExpr::FreeProduct& f) {
                   return render(f.left, Prec::Free, false) + " * " + render(f.right, Prec::Free, true);
                 },
                 [](const GroupExpr::DirectProduct& d) {
                   return render(d.left, Prec::Direct, false) + " x " +
                          render(d.right, Prec::Direct, true);
                 },
                 [](const GroupExpr::FiniteLeaf& f) { return f.name; }},
      e.node().value);
}

FgAbelianGroup abelianize_expr(const GroupExpr& e) {
  return std::visit(
      overloaded{[](const GroupExpr::CyclicFinite& c) { return FgAbelianGroup::cyclic(c.order); },
                 [](const GroupExpr::CyclicInfinite&) { return FgAbelianGroup::free(1); },
                 [](const GroupExpr::AbelianLeaf& a) { return a.group; },
                 [](const GroupExpr::FreeProduct& f) {
                   return direct_sum(abelianize_expr(f.left), abelianize_expr(f.right));
                 },
                 [](const GroupExpr::DirectProduct& d) {
                   return direct_sum(abelianize_expr(d.left), abelianize_expr(d.right));
                 },
                 [](const GroupExpr::FiniteLeaf& f) { return bar_h1(*f.group); }},
      e.node().value);
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::Cyclic: return "cyclic";
    case Rule::FreeProduct: return "free-product";
    case Rule::DirectProduct: return "direct-product";
    case Rule::AbelianClosedForm: return "abelian-closed-form";
    case Rule::BarOracle: return "bar-oracle";
  }
  return "unknown";
}

MultiplierResult schur_multiplier(const GroupExpr& e, const ComposeOptions& options) {
  MultiplierEvaluator ev{options, {}};
  FgAbelianGroup m = ev.eval(e).first;
  return {std::move(m), std::move(ev.trace)};
}

FiniteGroup finite_group_of(const GroupExpr& e, std::size_t cap) {
  auto cyclic_of = [cap](const Integer& order) {
    if (order > static_cast<unsigned long>(cap))
      throw CapacityError("cyclic group of order " + to_string(order) + " exceeds the cap of " +
                          std::to_string(cap));
    return cyclic_group(order.get_ui(), cap);
  };
  return std::visit(
      overloaded{[&](const GroupExpr::CyclicFinite& c) { return cyclic_of(c.order); },
                 [](const GroupExpr::CyclicInfinite&) -> FiniteGroup {
                   throw InvalidArgument("Z is infinite; the bar oracle needs a finite group");
                 },
                 [&](const GroupExpr::AbelianLeaf& a) {
                   if (!a.group.is_finite())
                     throw InvalidArgument("abelian group " + to_string(a.group) + " is infinite");
                   FiniteGroup g = cyclic_group(1, cap);
                   for (const auto& d : a.group.invariant_factors()) g = direct_product(g, cyclic_of(d), cap);
                   return g;
                 },
                 [](const GroupExpr::FreeProduct&) -> FiniteGroup {
                   throw InvalidArgument("free products are infinite; the bar oracle needs a finite group");
                 },
                 [&](const GroupExpr::DirectProduct& d) {
                   FiniteGroup l = finite_group_of(d.left, cap);
                   FiniteGroup r = finite_group_of(d.right, cap);
                   return direct_product(l, r, cap);
                 },
                 [&](const GroupExpr::FiniteLeaf& f) {
                   if (f.group->order() > cap)
                     throw CapacityError("group " + f.name + " exceeds the cap of " + std::to_string(cap));
                   return *f.group;
                 }},
      e.node().value);
}

}  // namespace schur
