#include <doctest.h>

#include <numeric>
#include <random>

#include "spinecheck/error.hpp"
#include "spinecheck/vfunc.hpp"

using namespace spinecheck;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Unknown;
}

std::vector<std::int64_t> exact_values(const VFunction& v) {
  std::vector<std::int64_t> out;
  for (const auto& iv : v.values()) {
    REQUIRE(iv.is_point());
    out.push_back(iv.lo);
  }
  return out;
}

// t_s as the double sum sum_{k > s} sum_{m >= k} a_m.
std::vector<BigInt> torsion_double_sum(const LaurentPoly& delta, std::int64_t g) {
  std::vector<BigInt> out;
  for (std::int64_t s = 0; s <= g; ++s) {
    BigInt total = 0;
    for (std::int64_t k = s + 1; k <= g; ++k)
      for (std::int64_t m = k; m <= g; ++m) total += delta.coeff(m);
    out.push_back(total);
  }
  return out;
}

// R-function of a sum by enumerating every split j = j_1 + ... + j_n.
std::int64_t r_brute(const std::vector<RFunction>& rs, std::int64_t j, std::size_t from = 0) {
  if (from + 1 == rs.size()) return rs[from].at(j);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t j1 = -2; j1 <= j + 2; ++j1) best = std::min(best, rs[from].at(j1) + r_brute(rs, j - j1, from + 1));
  return best;
}

const std::vector<std::pair<int, int>> kPool = {{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}};

}  // namespace

TEST_CASE("v_eval and unknot") {
  const VFunction u = v_unknot();
  CHECK(v_eval(u, -3) == IntInterval::point(3));
  CHECK(v_eval(u, 0) == IntInterval::point(0));
  CHECK(v_eval(u, 7) == IntInterval::point(0));
  CHECK(v_eval(u, -2) == IntInterval::point(2));

  const VFunction t = v_lspace(KnotExpr::torus(2, 3));
  CHECK(v_eval(t, -1) == IntInterval::point(1));
  CHECK(v_eval(t, t.genus() + 5) == IntInterval::point(0));
  CHECK(v_eval(t, -4) == IntInterval::point(4));

  CHECK_THROWS_AS(VFunction(1, {IntInterval::point(2), IntInterval::point(0)}), Error);
  CHECK_THROWS_AS(VFunction(1, {IntInterval::point(1), IntInterval::point(1)}), Error);
  CHECK_THROWS_AS(VFunction(1, {IntInterval{2, 1}, IntInterval::point(0)}), Error);
}

TEST_CASE("torsion_coeffs") {
  CHECK(torsion_coeffs(alexander(KnotExpr::torus(2, 3)), 1) == std::vector<BigInt>{1, 0});
  CHECK(torsion_coeffs(LaurentPoly{{0, 1}}, 0) == std::vector<BigInt>{0});
  const LaurentPoly t34{{3, 1}, {2, -1}, {0, 1}, {-2, -1}, {-3, 1}};
  CHECK(alexander(KnotExpr::torus(3, 4)) == t34);
  CHECK(torsion_coeffs(t34, 3) == std::vector<BigInt>{1, 1, 1, 0});
  CHECK(kind_of([] { torsion_coeffs(LaurentPoly{{1, 1}, {0, -1}}, 1); }) == ErrorKind::NotSymmetric);

  for (int q = 3; q <= 13; ++q) {
    for (int p = 2; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const KnotExpr k = KnotExpr::torus(p, q);
      const auto g = genus(k);
      CHECK(torsion_coeffs(alexander(k), g) == torsion_double_sum(alexander(k), g));
    }
  }
}

TEST_CASE("v_lspace") {
  CHECK(exact_values(v_lspace(KnotExpr::torus(2, 3))) == std::vector<std::int64_t>{1, 0});
  CHECK(exact_values(v_lspace(KnotExpr::torus(2, 5))) == std::vector<std::int64_t>{1, 1, 0});
  CHECK(v_eval(v_lspace(KnotExpr::torus(2, 7)), 0) == IntInterval::point(2));
  CHECK(kind_of([] { v_lspace(KnotExpr::alt_signature(-2)); }) == ErrorKind::NotLSpace);
  CHECK(kind_of([] { v_lspace(KnotExpr::mirror(KnotExpr::torus(2, 3))); }) == ErrorKind::NotLSpace);
}

TEST_CASE("v_alternating") {
  const VFunction v = v_alternating(-6);
  CHECK(v_eval(v, 0) == IntInterval::point(2));
  CHECK(v_eval(v, 1) == IntInterval{1, 2});
  CHECK(v_eval(v_alternating(2), 0) == IntInterval::point(0));
  CHECK(v_eval(v_alternating(-16), 0) == IntInterval::point(4));
  CHECK(kind_of([] { v_alternating(-5); }) == ErrorKind::OddSignature);

  // Closed form of the table: V_0 = ceil(-sigma/4) rounded as 2k, 2k+1, 2k+1, 2k+2.
  for (std::int64_t k = 0; k < 6; ++k) {
    CHECK(alternating_v0(-8 * k) == 2 * k);
    CHECK(alternating_v0(-8 * k - 2) == 2 * k + 1);
    CHECK(alternating_v0(-8 * k - 4) == 2 * k + 1);
    CHECK(alternating_v0(-8 * k - 6) == 2 * k + 2);
  }

  VOptions small;
  small.horizon = 3;
  const VFunction h = v_alternating(-6, small);
  CHECK(h.genus() == 3);
  CHECK(v_eval(h, 2) == IntInterval{0, 1});
  CHECK(v_eval(h, 3) == IntInterval::point(0));
}

TEST_CASE("r_from_v") {
  const RFunction r = r_from_v(v_lspace(KnotExpr::torus(2, 3)));
  CHECK(r.values() == std::vector<std::int64_t>{0, 1, 1});
  CHECK(r.at(5) == 4);
  CHECK(r.at(-3) == 0);
  const RFunction u = r_from_v(v_unknot());
  for (std::int64_t j = 0; j < 6; ++j) CHECK(u.at(j) == j);
  CHECK(r_from_v(v_lspace(KnotExpr::torus(2, 5))).values() == std::vector<std::int64_t>{0, 1, 1, 2, 2});
  CHECK(kind_of([] { r_from_v(v_alternating(-6)); }) == ErrorKind::IntervalValued);
}

TEST_CASE("min_plus_convolve") {
  CHECK(min_plus_convolve({0, 1, 1}, {0, 1, 1}) == std::vector<std::int64_t>{0, 1, 1});
  CHECK(min_plus_convolve({0, 1, 2, 3}, {5, 1, 0, 0}) == std::vector<std::int64_t>{5, 1, 0, 0});
}

TEST_CASE("v_sum") {
  const VFunction t23 = v_lspace(KnotExpr::torus(2, 3));
  CHECK(exact_values(v_sum({t23, t23})) == std::vector<std::int64_t>{1, 1, 0});
  CHECK(v_sum({t23, v_unknot()}) == t23);
  const VFunction mixed = v_sum({t23, v_lspace(KnotExpr::torus(2, 5))});
  CHECK(v_eval(mixed, 0).lo >= 1);
  CHECK(v_eval(mixed, 1).lo >= 1);
  CHECK(kind_of([&] { v_sum({t23, v_alternating(-4)}); }) == ErrorKind::IntervalValued);

  std::mt19937 rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, kPool.size() - 1), count(2, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<VFunction> parts;
    std::vector<RFunction> rs;
    for (std::size_t i = count(rng); i > 0; --i) {
      const auto [p, q] = kPool[pick(rng)];
      parts.push_back(v_lspace(KnotExpr::torus(p, q)));
      rs.push_back(r_from_v(parts.back()));
    }
    const VFunction v = v_sum(parts);
    std::int64_t total_genus = 0;
    for (const auto& part : parts) total_genus += part.genus();
    REQUIRE(v.genus() == total_genus);
    for (std::int64_t j = 0; j <= total_genus; ++j) {
      CHECK(v_eval(v, j).lo == r_brute(rs, total_genus + j) - j);
    }
    // Order of summands is irrelevant.
    std::vector<VFunction> reversed(parts.rbegin(), parts.rend());
    CHECK(v_sum(reversed) == v);
    // Grouping is irrelevant.
    if (parts.size() >= 3) {
      const VFunction head = v_sum({parts[0], parts[1]});
      std::vector<VFunction> regrouped{head};
      regrouped.insert(regrouped.end(), parts.begin() + 2, parts.end());
      CHECK(v_sum(regrouped) == v);
    }
  }
}

TEST_CASE("v_of dispatch") {
  CHECK(v_of(KnotExpr::unknot()) == v_unknot());
  const KnotExpr hkl = KnotExpr::explicit_v(3, {3, 2, 1, 0});
  CHECK(exact_values(v_of(hkl)) == std::vector<std::int64_t>{3, 2, 1, 0});
  CHECK(kind_of([] { v_of(KnotExpr::mirror(KnotExpr::torus(2, 3))); }) == ErrorKind::MirrorVUnavailable);
  CHECK(v_of(KnotExpr::mirror(KnotExpr::mirror(KnotExpr::torus(2, 5)))) == v_lspace(KnotExpr::torus(2, 5)));
  CHECK(v_of(KnotExpr::mirror(KnotExpr::alt_signature(6))) == v_alternating(-6));
  CHECK(v_of(KnotExpr::alt_diagram(braid_closure_pd(2, {1, 1, 1, 1, 1, 1, 1}))) == v_alternating(-6));
  CHECK(v_of(KnotExpr::mirror(KnotExpr::alt_diagram(braid_closure_pd(2, {-1, -1, -1})))) == v_alternating(-2));
  CHECK(v_of(KnotExpr::sum({KnotExpr::torus(2, 3), KnotExpr::unknot()})) == v_lspace(KnotExpr::torus(2, 3)));
}

TEST_CASE("V-function identities hold on every construction") {
  std::vector<VFunction> all = {v_unknot(), v_sum({v_lspace(KnotExpr::torus(2, 3)), v_lspace(KnotExpr::torus(3, 5))})};
  for (std::int64_t sigma = -20; sigma <= 8; sigma += 2) all.push_back(v_alternating(sigma, VOptions{12}));
  for (int q = 3; q <= 9; ++q)
    for (int p = 2; p < q; ++p)
      if (std::gcd(p, q) == 1) all.push_back(v_lspace(KnotExpr::torus(p, q)));

  for (const auto& v : all) {
    const std::int64_t g = v.genus();
    for (std::int64_t s = -2 * g - 1; s <= 2 * g + 1; ++s) {
      const IntInterval here = v_eval(v, s);
      const IntInterval prev = v_eval(v, s - 1);
      if (s >= 0) CHECK(v_eval(v, -s) == here + s);
      CHECK(prev.lo - here.lo >= 0);
      CHECK(prev.lo - here.lo <= 1);
      CHECK(prev.hi - here.hi >= 0);
      CHECK(prev.hi - here.hi <= 1);
      CHECK(here.lo >= std::max<std::int64_t>(0, -s));
    }
  }
}
