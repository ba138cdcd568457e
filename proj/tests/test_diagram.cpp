#include <doctest.h>

#include <Eigen/Dense>
#include <numeric>
#include <random>

#include "spinecheck/diagram.hpp"
#include "spinecheck/error.hpp"
#include "spinecheck/knots.hpp"

using namespace spinecheck;

namespace {

// Trefoil code with three negative crossings (left-handed).
const char* kLeftTrefoil = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]";
const char* kFigureEight = "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]";

PDCode right_trefoil() { return braid_closure_pd(2, {1, 1, 1}); }
PDCode torus_2_7() { return braid_closure_pd(2, {1, 1, 1, 1, 1, 1, 1}); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Unknown;
}

// State-circle formula for reduced alternating diagrams:
// sigma = s_A - n_+ - 1, where the A-smoothing joins edges (i,j) and (k,l).
std::int64_t signature_from_states(const PDCode& pd) {
  const int labels = static_cast<int>(pd.size()) * 2;
  std::vector<int> parent(labels + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& x : pd.crossings()) {
    parent[find(x[0])] = find(x[1]);
    parent[find(x[2])] = find(x[3]);
  }
  int circles = 0;
  for (int l = 1; l <= labels; ++l) circles += find(l) == l;
  int positive = 0;
  for (int s : pd.crossing_signs()) positive += s > 0;
  return circles - positive - 1;
}

std::int64_t float_signature(const IntMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) a(r, c) = m[r][c].convert_to<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  std::int64_t sig = 0;
  for (double ev : solver.eigenvalues()) sig += ev > 1e-9 ? 1 : (ev < -1e-9 ? -1 : 0);
  return sig;
}

// Alternating braid words: odd generators positive, even ones negative, every
// generator used at least twice so the closure is reduced.
std::optional<PDCode> random_alternating(std::mt19937& rng) {
  std::uniform_int_distribution<int> strands_d(2, 4), length(4, 11);
  const int strands = strands_d(rng);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::vector<int> word;
  std::vector<int> uses(strands, 0);
  for (int i = length(rng); i > 0; --i) {
    const int g = gen(rng);
    word.push_back(g % 2 == 1 ? g : -g);
    ++uses[g];
  }
  for (int g = 1; g < strands; ++g) {
    if (uses[g] < 2) return std::nullopt;
  }
  try {
    return braid_closure_pd(strands, word);
  } catch (const Error&) {
    return std::nullopt;  // closure is a link
  }
}

}  // namespace

TEST_CASE("parse_pd") {
  const PDCode pd = parse_pd(kLeftTrefoil);
  CHECK(pd.size() == 3);
  CHECK(pd.to_string() == kLeftTrefoil);
  CHECK(parse_pd("  PD[ X(1, 4,2,5) ,X(3,6,4,1),X(5,2,6,3)] ") == pd);
  CHECK(kind_of([] { parse_pd("PD[]"); }) == ErrorKind::ValidationError);
  CHECK(kind_of([] { parse_pd("PD[X(1,2,3)]"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,7)]"); }) == ErrorKind::ValidationError);
  CHECK(kind_of([] { parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,5)]"); }) == ErrorKind::ValidationError);
  CHECK(kind_of([] { parse_pd("PD[X(0,1,1,2)]"); }) == ErrorKind::SyntaxError);
  // Two disjoint one-crossing curls: labels fine, two components.
  CHECK(kind_of([] { parse_pd("PD[X(1,2,2,1),X(3,4,4,3)]"); }) == ErrorKind::ValidationError);
}

TEST_CASE("crossing signs and mirror") {
  CHECK(parse_pd(kLeftTrefoil).writhe() == -3);
  CHECK(right_trefoil().writhe() == 3);
  CHECK(parse_pd(kFigureEight).writhe() == 0);
  const PDCode m = parse_pd(kLeftTrefoil).mirrored();
  CHECK(m.writhe() == 3);
  CHECK(m.mirrored() == parse_pd(kLeftTrefoil));
}

TEST_CASE("faces satisfy the Euler count") {
  CHECK(faces(parse_pd(kLeftTrefoil)).size() == 5);
  CHECK(faces(parse_pd(kFigureEight)).size() == 6);
  CHECK(faces(parse_pd("PD[X(1,2,2,1)]")).size() == 3);
  CHECK(faces(braid_closure_pd(3, {1, 2, 1, 2, 1, 2, 1, 2})).size() == 10);
  // Same labels and strand structure, but the cyclic order at one crossing is
  // reflected; the rotation system is no longer planar.
  CHECK(kind_of([] { faces(parse_pd("PD[X(1,5,2,4),X(3,6,4,1),X(5,2,6,3)]")); }) == ErrorKind::NonPlanar);
}

TEST_CASE("is_alternating") {
  CHECK(is_alternating(parse_pd(kLeftTrefoil)));
  CHECK(is_alternating(parse_pd(kFigureEight)));
  CHECK(is_alternating(braid_closure_pd(3, {1, 1, 1, -2, -2, -2})));
  CHECK_FALSE(is_alternating(braid_closure_pd(3, {1, 1, 1, -2, -2, 2})));
  CHECK_FALSE(is_alternating(braid_closure_pd(3, {1, 2, 1, 2, 1, 2, 1, 2})));
  CHECK(is_alternating(parse_pd("PD[X(1,2,2,1)]")));
}

TEST_CASE("goeritz") {
  const GoeritzData right = goeritz(right_trefoil());
  REQUIRE(right.matrix.size() == 2);
  CHECK(matrix_signature(right.matrix) == -2);
  CHECK(abs(matrix_determinant(right.matrix)) == 3);
  CHECK(right.mu == 0);

  const GoeritzData fig8 = goeritz(parse_pd(kFigureEight));
  CHECK(abs(matrix_determinant(fig8.matrix)) == 5);

  CHECK(kind_of([] { goeritz(braid_closure_pd(3, {1, 1, 1, -2, -2, 2})); }) == ErrorKind::NotAlternating);

  // Row sums of the full form vanish, so the reduced form is symmetric with
  // diagonal dominating the off-diagonal mass.
  for (std::size_t r = 0; r < fig8.matrix.size(); ++r) {
    for (std::size_t c = 0; c < fig8.matrix.size(); ++c) CHECK(fig8.matrix[r][c] == fig8.matrix[c][r]);
  }
}

TEST_CASE("matrix_signature") {
  CHECK(matrix_signature({{2, 0}, {0, -3}}) == 0);
  CHECK(matrix_signature({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
  CHECK(matrix_signature({{0, 1}, {1, 0}}) == 0);
  CHECK(matrix_signature({{0, 0}, {0, 0}}) == 0);
  CHECK(matrix_signature({}) == 0);
  CHECK_THROWS_AS(matrix_signature({{1, 2}, {3, 1}}), Error);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> size_d(1, 6), entry(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size_d(rng);
    IntMatrix m(n, std::vector<BigInt>(n));
    for (int r = 0; r < n; ++r)
      for (int c = r; c < n; ++c) m[r][c] = m[c][r] = entry(rng);
    if (matrix_determinant(m) == 0) continue;  // keep the float oracle well posed
    CHECK(matrix_signature(m) == float_signature(m));
  }
}

TEST_CASE("signature_alt") {
  CHECK(signature_alt(right_trefoil()) == -2);
  // Seifert-matrix oracle for the right trefoil: V = [[-1,1],[0,-1]].
  CHECK(matrix_signature({{-2, 1}, {1, -2}}) == -2);
  CHECK(signature_alt(parse_pd(kLeftTrefoil)) == 2);
  CHECK(signature_alt(parse_pd(kFigureEight)) == 0);
  CHECK(signature_alt(torus_2_7()) == -6);
  CHECK(signature_alt(parse_pd("PD[X(1,2,2,1)]")) == 0);
  CHECK(kind_of([] { signature_alt(braid_closure_pd(3, {1, 2, 1, 2, 1, 2, 1, 2})); }) ==
        ErrorKind::NotAlternating);
}

TEST_CASE("alexander_from_pd agrees with torus formula") {
  CHECK(alexander_from_pd(right_trefoil()) == alexander(KnotExpr::torus(2, 3)));
  CHECK(alexander_from_pd(parse_pd(kLeftTrefoil)) == alexander(KnotExpr::torus(2, 3)));
  CHECK(alexander_from_pd(parse_pd(kFigureEight)) == LaurentPoly{{1, -1}, {0, 3}, {-1, -1}});
  CHECK(alexander_from_pd(torus_2_7()) == alexander(KnotExpr::torus(2, 7)));
  CHECK(alexander_from_pd(braid_closure_pd(3, {1, 2, 1, 2, 1, 2, 1, 2})) == alexander(KnotExpr::torus(3, 4)));
  CHECK(alexander_from_pd(braid_closure_pd(3, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2})) ==
        alexander(KnotExpr::torus(3, 5)));
  CHECK(alexander_from_pd(parse_pd("PD[X(1,2,2,1)]")) == LaurentPoly{{0, 1}});
}

TEST_CASE("properties over random reduced alternating braid closures") {
  std::mt19937 rng(2024);
  int tested = 0;
  while (tested < 150) {
    const auto pd = random_alternating(rng);
    if (!pd) continue;
    ++tested;
    const std::int64_t sigma = signature_alt(*pd);
    CHECK(sigma % 2 == 0);
    CHECK(sigma == signature_from_states(*pd));
    CHECK(signature_alt(pd->mirrored()) == -sigma);
    CHECK(faces(*pd).size() == pd->size() + 2);

    const LaurentPoly delta = alexander_from_pd(*pd);
    CHECK(lp_eval_int(delta, 1) == 1);
    const BigInt det_goeritz = abs(matrix_determinant(goeritz(*pd).matrix));
    CHECK(Rational(det_goeritz) == abs(lp_eval_int(delta, -1)));
  }
}
