#include "schur/finite_group.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "schur/errors.hpp"

namespace schur {

namespace {

void check_cap(std::size_t order, std::size_t cap) {
  if (order > cap)
    throw CapacityError("group order " + std::to_string(order) + " exceeds the cap of " +
                        std::to_string(cap));
}

GroupTable table_from(const std::vector<std::vector<std::int32_t>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  GroupTable t(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) t(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return t;
}

}  // namespace

FiniteGroup::FiniteGroup(GroupTable table) : table_(std::move(table)) {
  const Eigen::Index n = table_.rows();
  if (n == 0 || table_.cols() != n) throw InvalidArgument("group table must be square and nonempty");
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto v = table_(i, j);
      if (v < 0 || v >= n) throw InvalidArgument("group table entry out of range");
      if (seen[static_cast<std::size_t>(v)]++) throw InvalidArgument("group table is not a Latin square");
    }
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Eigen::Index i = 0; i < n; ++i)
      if (seen[static_cast<std::size_t>(table_(i, j))]++)
        throw InvalidArgument("group table is not a Latin square");
  }
  identity_ = -1;
  for (Eigen::Index e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (Eigen::Index g = 0; g < n && ok; ++g) ok = table_(e, g) == g && table_(g, e) == g;
    if (ok) identity_ = static_cast<std::int32_t>(e);
  }
  if (identity_ < 0) throw InvalidArgument("group table has no identity");
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      for (Eigen::Index c = 0; c < n; ++c)
        if (table_(table_(a, b), c) != table_(a, table_(b, c)))
          throw InvalidArgument("group table is not associative");
  inverse_.resize(static_cast<std::size_t>(n));
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      if (table_(a, b) == identity_) inverse_[static_cast<std::size_t>(a)] = static_cast<std::int32_t>(b);
}

bool FiniteGroup::is_abelian() const { return table_ == table_.transpose(); }

Permutation parse_permutation(std::string_view cycles, std::size_t degree) {
  std::vector<std::vector<std::int32_t>> parsed;
  std::size_t pos = 0;
  std::int32_t largest = 0;
  auto skip = [&] {
    while (pos < cycles.size() && (cycles[pos] == ' ' || cycles[pos] == ',')) ++pos;
  };
  skip();
  while (pos < cycles.size()) {
    if (cycles[pos] != '(') throw ParseError("expected '(' in permutation", pos);
    ++pos;
    std::vector<std::int32_t> cycle;
    for (;;) {
      skip();
      if (pos < cycles.size() && cycles[pos] == ')') {
        ++pos;
        break;
      }
      std::int32_t point = 0;
      auto [ptr, ec] = std::from_chars(cycles.data() + pos, cycles.data() + cycles.size(), point);
      if (ec != std::errc() || point < 1) throw ParseError("expected a positive point", pos);
      pos = static_cast<std::size_t>(ptr - cycles.data());
      if (std::find(cycle.begin(), cycle.end(), point - 1) != cycle.end())
        throw ParseError("repeated point in cycle", pos);
      cycle.push_back(point - 1);
      largest = std::max(largest, point);
    }
    parsed.push_back(std::move(cycle));
    skip();
  }
  const std::size_t n = std::max(degree, static_cast<std::size_t>(largest));
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::int32_t>(i);
  // Cycles compose right to left, matching (p q)(x) = p(q(x)).
  for (auto it = parsed.rbegin(); it != parsed.rend(); ++it) {
    Permutation c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::int32_t>(i);
    for (std::size_t k = 0; k < it->size(); ++k)
      c[static_cast<std::size_t>((*it)[k])] = (*it)[(k + 1) % it->size()];
    Permutation next(n);
    for (std::size_t i = 0; i < n; ++i) next[i] = c[static_cast<std::size_t>(p[i])];
    p = std::move(next);
  }
  return p;
}

FiniteGroup cyclic_group(std::size_t n, std::size_t cap) {
  if (n == 0) throw InvalidArgument("cyclic group of order 0");
  check_cap(n, cap);
  const auto m = static_cast<Eigen::Index>(n);
  GroupTable t(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) t(i, j) = static_cast<std::int32_t>((i + j) % m);
  return FiniteGroup(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap) {
  check_cap(a.order() * b.order(), cap);
  const auto na = static_cast<std::int32_t>(a.order()), nb = static_cast<std::int32_t>(b.order());
  GroupTable t(na * nb, na * nb);
  for (std::int32_t x = 0; x < na * nb; ++x)
    for (std::int32_t y = 0; y < na * nb; ++y)
      t(x, y) = a.multiply(x / nb, y / nb) * nb + b.multiply(x % nb, y % nb);
  return FiniteGroup(std::move(t));
}

FiniteGroup dihedral_group(std::size_t n, std::size_t cap) {
  if (n < 1) throw InvalidArgument("dihedral group needs n >= 1");
  check_cap(2 * n, cap);
  // Element k < n is the rotation r^k; element n + k is the reflection s r^k.
  const auto m = static_cast<std::int32_t>(n);
  GroupTable t(2 * m, 2 * m);
  for (std::int32_t x = 0; x < 2 * m; ++x)
    for (std::int32_t y = 0; y < 2 * m; ++y) {
      const std::int32_t i = x % m, j = y % m;
      const bool fx = x >= m, fy = y >= m;
      // r^i r^j = r^(i+j); r^i s r^j = s r^(j-i); s r^i r^j = s r^(i+j); s r^i s r^j = r^(j-i)
      const std::int32_t k = fy ? ((j - i) % m + m) % m : (i + j) % m;
      t(x, y) = ((fx != fy) ? m : 0) + k;
    }
  return FiniteGroup(std::move(t));
}

FiniteGroup quaternion_group() {
  // Elements {1, i, j, k, -1, -i, -j, -k} as sign * unit, encoded unit + 4 * (sign < 0).
  static const int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  GroupTable t(8, 8);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int ux = x % 4, uy = y % 4;
      int sign = unit_sign[ux][uy] * (x >= 4 ? -1 : 1) * (y >= 4 ? -1 : 1);
      t(x, y) = unit_product[ux][uy] + (sign < 0 ? 4 : 0);
    }
  return FiniteGroup(std::move(t));
}

FiniteGroup symmetric3_group() {
  return from_permutations({parse_permutation("(1 2)", 3), parse_permutation("(1 2 3)", 3)});
}

FiniteGroup alternating4_group() {
  return from_permutations({parse_permutation("(1 2 3)", 4), parse_permutation("(1 2)(3 4)", 4)});
}

FiniteGroup from_permutations(const std::vector<Permutation>& generators, std::size_t cap) {
  std::size_t degree = 0;
  for (const auto& g : generators) degree = std::max(degree, g.size());
  auto pad = [degree](Permutation p) {
    for (auto i = static_cast<std::int32_t>(p.size()); i < static_cast<std::int32_t>(degree); ++i)
      p.push_back(i);
    return p;
  };
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    Permutation p = pad(g);
    std::vector<char> hit(degree);
    for (auto v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || hit[static_cast<std::size_t>(v)]++)
        throw InvalidArgument("generator is not a permutation");
    }
    gens.push_back(std::move(p));
  }
  auto compose = [degree](const Permutation& p, const Permutation& q) {
    Permutation r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = p[static_cast<std::size_t>(q[x])];
    return r;
  };

  std::vector<Permutation> elements{pad({})};
  std::map<Permutation, std::int32_t> index{{elements[0], 0}};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& g : gens) {
      Permutation p = compose(elements[next], g);
      if (index.count(p)) continue;
      index.emplace(p, static_cast<std::int32_t>(elements.size()));
      elements.push_back(std::move(p));
      check_cap(elements.size(), cap);
    }
  }
  const auto n = static_cast<Eigen::Index>(elements.size());
  GroupTable t(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      t(a, b) = index.at(compose(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]));
  return FiniteGroup(std::move(t));
}

FiniteGroup parse_table(std::string_view text, std::size_t cap) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  if (!(in >> n) || n <= 0) throw InvalidArgument("table: first line must be a positive order");
  check_cap(static_cast<std::size_t>(n), cap);
  std::vector<std::vector<std::int32_t>> rows(static_cast<std::size_t>(n),
                                              std::vector<std::int32_t>(static_cast<std::size_t>(n)));
  for (auto& row : rows)
    for (auto& v : row)
      if (!(in >> v)) throw InvalidArgument("table: expected " + std::to_string(n * n) + " entries");
  std::string extra;
  if (in >> extra) throw InvalidArgument("table: trailing data '" + extra + "'");
  return FiniteGroup(table_from(rows));
}

FiniteGroup load_table(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open table file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str(), cap);
}

std::string format_table(const FiniteGroup& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (Eigen::Index i = 0; i < g.table().rows(); ++i) {
    for (Eigen::Index j = 0; j < g.table().cols(); ++j) out << (j ? " " : "") << g.table()(i, j);
    out << '\n';
  }
  return out.str();
}

FiniteGroup relabel(const FiniteGroup& g, const std::vector<std::int32_t>& relabel) {
  const auto n = static_cast<Eigen::Index>(g.order());
  if (static_cast<Eigen::Index>(relabel.size()) != n) throw InvalidArgument("relabel: size mismatch");
  GroupTable t(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      t(relabel[static_cast<std::size_t>(a)], relabel[static_cast<std::size_t>(b)]) =
          relabel[static_cast<std::size_t>(g.table()(a, b))];
  return FiniteGroup(std::move(t));
}

}  // namespace schur
