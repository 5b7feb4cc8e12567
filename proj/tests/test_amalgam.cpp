#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "schur/amalgam.hpp"
#include "schur/compose.hpp"
#include "schur/errors.hpp"
#include "schur/json_io.hpp"

using namespace schur;
using schur::testing::Zfree;
using schur::testing::Zmod;

namespace {

AbGroupMap map_of(std::vector<FgAbelianGroup> source, std::vector<FgAbelianGroup> target, IntMatrix m) {
  return {GeneratedGroup(source), GeneratedGroup(target), std::move(m)};
}

std::vector<long> small_orders(const GeneratedGroup& g) {
  std::vector<long> out;
  for (const auto& o : g.orders()) out.push_back(o.get_si());
  return out;
}

std::vector<long> apply(const AbGroupMap& f, const std::vector<long>& x, const std::vector<long>& target) {
  std::vector<long> y(target.size(), 0);
  for (std::size_t i = 0; i < target.size(); ++i) {
    long v = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      v += f.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)).get_si() * x[j];
    y[i] = ((v % target[i]) + target[i]) % target[i];
  }
  return y;
}

bool is_zero_vec(const std::vector<long>& v) {
  for (long x : v)
    if (x) return false;
  return true;
}

// A random finite group given by one to three cyclic summands of order 1..8, total order <= 64.
std::vector<FgAbelianGroup> random_summands(std::mt19937& rng) {
  for (;;) {
    std::uniform_int_distribution<int> count(1, 3), order(1, 8);
    std::vector<FgAbelianGroup> out;
    long total = 1;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      const long o = order(rng);
      total *= o;
      out.push_back(Zmod(o));
    }
    if (total <= 64) return out;
  }
}

// A well-defined map: entry (i, j) must be a multiple of o_i / gcd(o_i, d_j).
IntMatrix random_map(std::mt19937& rng, const GeneratedGroup& source, const GeneratedGroup& target) {
  IntMatrix m = zero_matrix(target.generator_count(), source.generator_count());
  std::uniform_int_distribution<long> coef(-3, 3);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Integer& o = target.orders()[static_cast<std::size_t>(i)];
      const Integer& d = source.orders()[static_cast<std::size_t>(j)];
      const Integer step = sgn(o) == 0 ? (sgn(d) == 0 ? Integer(1) : Integer(0)) : Integer(o / gcd(o, d));
      m(i, j) = step * coef(rng);
    }
  return m;
}

}  // namespace

TEST_CASE("check_map examples") {
  CHECK(check_map(map_of({Zmod(2)}, {Zmod(4)}, make_matrix({{2}}))));
  CHECK_FALSE(check_map(map_of({Zmod(2)}, {Zmod(4)}, make_matrix({{1}}))));
  CHECK(check_map(map_of({Zmod(2)}, {Zmod(4), Zmod(6)}, make_matrix({{2}, {3}}))));
  CHECK_FALSE(check_map(map_of({Zmod(2)}, {Zfree(1)}, make_matrix({{1}}))));
  CHECK(check_map(map_of({Zfree(1)}, {Zmod(3)}, make_matrix({{1}}))));
  CHECK_THROWS_AS(check_map(map_of({Zmod(2)}, {Zmod(4)}, make_matrix({{1, 2}}))), InvalidArgument);
}

TEST_CASE("generator ordering") {
  const GeneratedGroup g(normalize(2, {6, 2}));
  CHECK(g.orders() == std::vector<Integer>{0, 0, 2, 6});
  CHECK(g.canonical() == normalize(2, {2, 6}));
  const GeneratedGroup sum({Zmod(4), Zfree(1), Zmod(6)});
  CHECK(sum.orders() == std::vector<Integer>{4, 0, 6});
  CHECK(sum.canonical() == normalize(1, {2, 12}));
  CHECK(sum.relations() == make_matrix({{4, 0}, {0, 0}, {0, 6}}));
}

TEST_CASE("kernel_of_map examples") {
  const auto a = normalize(1, {2, 4});
  CHECK(kernel_of_map(map_of({a}, {Zmod(3)}, zero_matrix(1, 3))) == a);
  CHECK(kernel_of_map(map_of({Zfree(1)}, {Zfree(1)}, make_matrix({{2}}))).is_trivial());
  CHECK(kernel_of_map(map_of({Zmod(2)}, {Zmod(4), Zmod(6)}, make_matrix({{2}, {3}}))).is_trivial());
  CHECK(kernel_of_map(map_of({Zfree(1)}, {Zmod(6)}, make_matrix({{2}}))) == Zfree(1));
  CHECK(kernel_of_map(map_of({Zfree(2)}, {Zfree(1)}, make_matrix({{2, -3}}))) == Zfree(1));
  CHECK(kernel_of_map(map_of({Zmod(12)}, {Zmod(4)}, make_matrix({{1}}))) == Zmod(3));
  CHECK_THROWS_AS(kernel_of_map(map_of({Zmod(2)}, {Zmod(4)}, make_matrix({{1}}))), IllDefinedMap);
}

TEST_CASE("cokernel_of_map examples") {
  CHECK(cokernel_of_map(map_of({Zfree(1)}, {Zfree(1)}, make_matrix({{2}}))) == Zmod(2));
  const auto b = normalize(1, {3});
  CHECK(cokernel_of_map(map_of({Zmod(2)}, {b}, zero_matrix(2, 1))) == b);
  CHECK(cokernel_of_map(map_of({Zmod(2)}, {Zmod(2), Zmod(2)}, make_matrix({{1}, {1}}))) == Zmod(2));
  CHECK_THROWS_AS(cokernel_of_map(map_of({Zmod(2)}, {Zmod(4)}, make_matrix({{1}}))), IllDefinedMap);
}

TEST_CASE("kernel and cokernel match enumeration") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 150; ++trial) {
    const GeneratedGroup source(random_summands(rng)), target(random_summands(rng));
    const AbGroupMap f{source, target, random_map(rng, source, target)};
    REQUIRE(check_map(f));
    const auto so = small_orders(source), to = small_orders(target);
    const auto s_elems = schur::testing::elements(so), t_elems = schur::testing::elements(to);

    // Kernel: subgroup of the source cut out by f(x) = 0.
    auto in_kernel = [&](const std::vector<long>& x) { return is_zero_vec(apply(f, x, to)); };
    const auto kernel = kernel_of_map(f);
    CHECK(schur::testing::killed_profile(s_elems, so, 64, in_kernel) ==
          schur::testing::killed_profile(kernel, 64));

    // Cokernel: |{t + im : d t in im}| = |{t : d t in im}| / |im|.
    std::set<std::vector<long>> image;
    for (const auto& x : s_elems) image.insert(apply(f, x, to));
    std::map<long, long> profile;
    for (long d = 1; d <= 64; ++d) {
      long count = 0;
      for (const auto& t : t_elems) {
        std::vector<long> dt(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) dt[i] = (d * t[i]) % to[i];
        count += image.count(dt) ? 1 : 0;
      }
      profile[d] = count / static_cast<long>(image.size());
    }
    const auto coker = cokernel_of_map(f);
    CHECK(profile == schur::testing::killed_profile(coker, 64));
  }
}

TEST_CASE("solve: trivial H") {
  AmalgamProblem p;
  p.m_g1 = Zmod(2);
  p.m_g2 = normalize(1, {3});
  p.g1_ab = normalize(0, {2, 2});
  p.g2_ab = Zfree(3);
  p.beta = zero_matrix(5, 0);
  const auto s = solve(p);
  CHECK(s.sub == direct_sum(p.m_g1, p.m_g2));
  CHECK(s.quot.is_trivial());
  CHECK(s.determined);
  REQUIRE(s.value);
  CHECK(*s.value == direct_sum(p.m_g1, p.m_g2));
  bool perfect_note = false;
  for (const auto& n : s.notes) perfect_note |= n.find("perfect") != std::string::npos;
  CHECK(perfect_note);
}

TEST_CASE("solve: SL(2,Z)") {
  AmalgamProblem p;
  p.h_ab = Zmod(2);
  p.g1_ab = Zmod(4);
  p.g2_ab = Zmod(6);
  p.beta = make_matrix({{2}, {3}});
  const auto s = solve(p);
  CHECK(s.sub.is_trivial());
  CHECK(s.quot.is_trivial());
  CHECK(s.determined);
  REQUIRE(s.value);
  CHECK(s.value->is_trivial());

  const auto built = make_amalgam_problem(parse_expr("Z/2"), parse_expr("Z/4"), parse_expr("Z/6"),
                                          make_matrix({{2}}), make_matrix({{3}}));
  CHECK(built.beta == p.beta);
  CHECK(built.g1_ab == p.g1_ab);
  CHECK(solve(built).value->is_trivial());
}

TEST_CASE("solve: trefoil") {
  AmalgamProblem p;
  p.h_ab = p.g1_ab = p.g2_ab = Zfree(1);
  p.beta = make_matrix({{2}, {-3}});
  const auto s = solve(p);
  CHECK(s.sub.is_trivial());
  CHECK(s.quot.is_trivial());
  CHECK(s.determined);
  CHECK(s.value->is_trivial());
}

TEST_CASE("solve: Z/2 amalgamated over itself") {
  AmalgamProblem p;
  p.h_ab = p.g1_ab = p.g2_ab = Zmod(2);
  p.beta = make_matrix({{1}, {1}});
  const auto s = solve(p);
  CHECK(s.sub.is_trivial());
  CHECK(s.quot.is_trivial());
  CHECK(s.value->is_trivial());
}

TEST_CASE("solve: undetermined extension") {
  // Z *_Z Z with both inclusions zero on H_ab: ker(beta) = Z (free, splits).
  AmalgamProblem split;
  split.h_ab = split.g1_ab = split.g2_ab = Zfree(1);
  split.m_g1 = Zmod(2);
  split.beta = zero_matrix(2, 1);
  const auto s1 = solve(split);
  CHECK(s1.determined);
  CHECK(*s1.value == normalize(1, {2}));

  // Torsion quotient over a nontrivial sub is left open.
  AmalgamProblem open;
  open.h_ab = Zmod(2);
  open.g1_ab = Zmod(2);
  open.g2_ab = Zmod(2);
  open.m_g1 = Zmod(2);
  open.beta = zero_matrix(2, 1);
  const auto s2 = solve(open);
  CHECK(s2.sub == Zmod(2));
  CHECK(s2.quot == Zmod(2));
  CHECK_FALSE(s2.determined);
  CHECK_FALSE(s2.value);
}

TEST_CASE("solve: alpha") {
  AmalgamProblem p;
  p.m_h = Zmod(2);
  p.m_g1 = Zmod(2);
  p.m_g2 = Zmod(4);
  p.beta = zero_matrix(0, 0);
  // Unknown alpha: the sub side is only an upper bound.
  const auto unknown = solve(p);
  CHECK_FALSE(unknown.sub_exact);
  CHECK_FALSE(unknown.determined);
  CHECK(unknown.sub == normalize(0, {2, 4}));

  p.alpha = make_matrix({{1}, {2}});
  const auto known = solve(p);
  CHECK(known.sub_exact);
  CHECK(known.sub == Zmod(4));
  CHECK(known.determined);
  CHECK(*known.value == Zmod(4));

  p.alpha = make_matrix({{1}, {1}});
  CHECK_THROWS_AS(solve(p), IllDefinedMap);
  p.alpha = make_matrix({{1, 0}});
  CHECK_THROWS_AS(solve(p), IllDefinedMap);
}

TEST_CASE("solve rejects bad beta") {
  AmalgamProblem p;
  p.h_ab = Zmod(2);
  p.g1_ab = Zmod(4);
  p.g2_ab = Zmod(6);
  p.beta = make_matrix({{1}, {3}});
  CHECK_THROWS_AS(solve(p), IllDefinedMap);
  p.beta = make_matrix({{2}});
  CHECK_THROWS_AS(solve(p), IllDefinedMap);
  CHECK_THROWS_AS(make_amalgam_problem(parse_expr("Z"), parse_expr("Z"), parse_expr("Z"),
                                       make_matrix({{1}}), zero_matrix(1, 2)),
                  IllDefinedMap);
}

TEST_CASE("trivial H reproduces the free product rule") {
  std::mt19937 rng(321);
  for (int trial = 0; trial < 50; ++trial) {
    auto leaf = [&rng]() {
      return rng() % 2 ? GroupExpr::cyclic(std::uniform_int_distribution<long>(1, 12)(rng))
                       : GroupExpr::abelian(schur::testing::random_group(rng, 3, 3, 12));
    };
    const GroupExpr g1 = leaf(), g2 = leaf();
    const auto n1 = GeneratedGroup(abelianize_expr(g1)).generator_count();
    const auto n2 = GeneratedGroup(abelianize_expr(g2)).generator_count();
    const auto p = make_amalgam_problem(GroupExpr::cyclic(1), g1, g2, zero_matrix(n1, 0), zero_matrix(n2, 0));
    const auto s = solve(p);
    REQUIRE(s.value);
    CHECK(*s.value == schur_multiplier(GroupExpr::free_product(g1, g2)).multiplier);
  }
}

TEST_CASE("perfect H with trivial multiplier") {
  std::mt19937 rng(322);
  for (int trial = 0; trial < 30; ++trial) {
    AmalgamProblem p;
    p.m_g1 = schur::testing::random_group(rng);
    p.m_g2 = schur::testing::random_group(rng);
    p.g1_ab = schur::testing::random_group(rng);
    p.g2_ab = schur::testing::random_group(rng);
    p.beta = zero_matrix(GeneratedGroup({p.g1_ab, p.g2_ab}).generator_count(), 0);
    const auto s = solve(p);
    REQUIRE(s.value);
    CHECK(*s.value == direct_sum(p.m_g1, p.m_g2));
  }
}

TEST_CASE("solution record invariants") {
  std::mt19937 rng(323);
  for (int trial = 0; trial < 200; ++trial) {
    AmalgamProblem p;
    p.m_h = schur::testing::random_group(rng, 1, 2, 6);
    p.m_g1 = schur::testing::random_group(rng, 1, 2, 6);
    p.m_g2 = schur::testing::random_group(rng, 1, 2, 6);
    p.h_ab = schur::testing::random_group(rng, 1, 2, 6);
    p.g1_ab = schur::testing::random_group(rng, 1, 2, 6);
    p.g2_ab = schur::testing::random_group(rng, 1, 2, 6);
    if (rng() % 2) p.alpha = random_map(rng, GeneratedGroup(p.m_h), GeneratedGroup({p.m_g1, p.m_g2}));
    p.beta = random_map(rng, GeneratedGroup(p.h_ab), GeneratedGroup({p.g1_ab, p.g2_ab}));
    const auto s = solve(p);
    CHECK(s.determined == s.value.has_value());
    if (!s.sub_exact) CHECK_FALSE(s.determined);
    if (s.value) {
      CHECK(min_generators(*s.value) <= min_generators(s.sub) + min_generators(s.quot));
      if (s.quot.is_free()) CHECK(torsion(*s.value) == torsion(s.sub));
      if (s.sub.is_trivial()) CHECK(*s.value == s.quot);
    }
    CHECK(s.quot == kernel_of_map(beta_map(p)));
  }
}

TEST_CASE("amalgam JSON") {
  const Json j = Json::parse(R"({
    "M_H": {"rank": 0, "factors": []}, "M_G1": {"rank": 0, "factors": []},
    "M_G2": {"rank": 0, "factors": []}, "H_ab": {"rank": 0, "factors": [2]},
    "G1_ab": {"rank": 0, "factors": [4]}, "G2_ab": {"rank": 0, "factors": [6]},
    "beta": [[2], [3]]})");
  const auto p = amalgam_problem_from_json(j);
  CHECK(p.h_ab == Zmod(2));
  CHECK_FALSE(p.alpha);
  CHECK(p.beta == make_matrix({{2}, {3}}));
  CHECK(solve(p).value->is_trivial());

  const auto back = amalgam_problem_from_json(to_json(p));
  CHECK(back.beta == p.beta);
  CHECK(back.g2_ab == p.g2_ab);
  CHECK(back.alpha == p.alpha);

  AmalgamProblem big;
  big.m_h = FgAbelianGroup::cyclic(Integer("100000000000000000000"));
  big.m_g1 = big.m_h;
  big.alpha = make_matrix({{1}});
  big.beta = zero_matrix(0, 0);
  const Json bj = to_json(big);
  CHECK(bj["M_H"]["factors"][0] == "100000000000000000000");
  CHECK(amalgam_problem_from_json(bj).m_h == big.m_h);
  CHECK(*solve(big).value == Zmod(1));

  Json missing = j;
  missing.erase("beta");
  CHECK_THROWS_AS(amalgam_problem_from_json(missing), IllDefinedMap);
  Json bad_shape = j;
  bad_shape["beta"] = Json::parse("[[2, 1], [3, 1]]");
  CHECK_THROWS_AS(amalgam_problem_from_json(bad_shape), IllDefinedMap);
  Json bad_group = j;
  bad_group["H_ab"] = Json::parse(R"({"rank": -1, "factors": []})");
  CHECK_THROWS_AS(amalgam_problem_from_json(bad_group), IllDefinedMap);
  Json zero_order = j;
  zero_order["H_ab"] = Json::parse(R"({"rank": 0, "factors": [0]})");
  CHECK_THROWS_AS(amalgam_problem_from_json(zero_order), IllDefinedMap);
}
