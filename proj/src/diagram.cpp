#include "spinecheck/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "spinecheck/error.hpp"

namespace spinecheck {

namespace {

// Position of one end of an edge: crossing index and slot 0..3.
struct Dart {
  int crossing;
  int slot;
};

// For each label, both ends. Assumes labels were validated.
std::vector<std::array<Dart, 2>> edge_ends(const std::vector<Crossing>& crossings) {
  const int labels = static_cast<int>(crossings.size()) * 2;
  std::vector<std::array<Dart, 2>> ends(labels + 1);
  std::vector<int> seen(labels + 1, 0);
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    for (int s = 0; s < 4; ++s) {
      const int label = crossings[c][s];
      ends[label][seen[label]++] = Dart{c, s};
    }
  }
  return ends;
}

Dart other_end(const std::vector<std::array<Dart, 2>>& ends, int label, Dart here) {
  const auto& pair = ends[label];
  if (pair[0].crossing == here.crossing && pair[0].slot == here.slot) return pair[1];
  return pair[0];
}

class PdCursor {
 public:
  explicit PdCursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }

  int positive_int() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a positive integer");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9) fail("edge label too large");
    const int value = std::stoi(digits);
    if (value <= 0) fail("edge labels must be positive");
    return value;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos_) + " in PD code");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PDCode::PDCode(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
  const int n = static_cast<int>(crossings_.size());
  if (n == 0) {
    throw Error(ErrorKind::ValidationError, "PD code has no crossings (give the unknot as U)");
  }
  std::vector<int> uses(2 * n + 1, 0);
  for (const auto& x : crossings_) {
    for (int label : x) {
      if (label < 1 || label > 2 * n) {
        throw Error(ErrorKind::ValidationError,
                    "edge label " + std::to_string(label) + " outside 1.." + std::to_string(2 * n));
      }
      ++uses[label];
    }
  }
  for (int label = 1; label <= 2 * n; ++label) {
    if (uses[label] != 2) {
      throw Error(ErrorKind::ValidationError, "edge label " + std::to_string(label) + " used " +
                                                  std::to_string(uses[label]) + " times");
    }
  }

  // Walk the strand starting out of crossing 0 along its under-strand. Every
  // under-strand must be entered at slot 0, and the walk must cover all edges.
  const auto ends = edge_ends(crossings_);
  signs_.assign(n, 0);
  std::vector<int> under_entries(n, 0);
  Dart at{0, 2};
  int steps = 0;
  while (true) {
    const Dart next = other_end(ends, crossings_[at.crossing][at.slot], at);
    ++steps;
    if (steps > 2 * n) break;
    switch (next.slot) {
      case 0: ++under_entries[next.crossing]; break;
      case 1: signs_[next.crossing] = signs_[next.crossing] == 0 ? -1 : 2; break;
      case 2:
        throw Error(ErrorKind::ValidationError,
                    "under-strand at crossing " + std::to_string(next.crossing + 1) +
                        " is traversed against its i -> k orientation");
      case 3: signs_[next.crossing] = signs_[next.crossing] == 0 ? 1 : 2; break;
    }
    if (next.crossing == 0 && next.slot == 0) break;
    at = Dart{next.crossing, (next.slot + 2) % 4};
  }
  const bool single = steps == 2 * n &&
                      std::all_of(under_entries.begin(), under_entries.end(), [](int u) { return u == 1; }) &&
                      std::all_of(signs_.begin(), signs_.end(), [](int s) { return s == 1 || s == -1; });
  if (!single) {
    throw Error(ErrorKind::ValidationError,
                "PD code does not describe a single connected knot component");
  }
}

int PDCode::writhe() const { return std::accumulate(signs_.begin(), signs_.end(), 0); }

PDCode PDCode::mirrored() const {
  // Switching a crossing makes the old over-strand the new under-strand.
  // Its incoming end becomes slot 0; the cyclic order is preserved.
  std::vector<Crossing> out;
  out.reserve(crossings_.size());
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const auto& x = crossings_[c];
    // sign -1: over-strand runs j -> l, so j is incoming; sign +1: l is incoming.
    if (signs_[c] < 0) {
      out.push_back({x[1], x[2], x[3], x[0]});
    } else {
      out.push_back({x[3], x[0], x[1], x[2]});
    }
  }
  return PDCode(std::move(out));
}

std::string PDCode::to_string() const {
  std::ostringstream out;
  out << "PD[";
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const auto& x = crossings_[c];
    if (c) out << ",";
    out << "X(" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << ")";
  }
  out << "]";
  return out.str();
}

PDCode braid_closure_pd(int strands, const std::vector<int>& word) {
  if (strands < 1) throw Error(ErrorKind::ValidationError, "braid needs at least one strand");
  // Strands run upward; fresh labels at every crossing output, then the top
  // ends are glued back onto the bottom ends.
  int next_label = 1;
  std::vector<int> bottom(strands), current(strands);
  for (int s = 0; s < strands; ++s) bottom[s] = current[s] = next_label++;
  std::vector<Crossing> crossings;
  for (int letter : word) {
    const int i = (letter < 0 ? -letter : letter) - 1;
    if (letter == 0 || i + 1 >= strands) {
      throw Error(ErrorKind::ValidationError, "braid letter " + std::to_string(letter) + " out of range");
    }
    const int in_l = current[i], in_r = current[i + 1];
    const int out_l = next_label++, out_r = next_label++;
    if (letter > 0) {
      crossings.push_back({in_r, out_r, out_l, in_l});
    } else {
      crossings.push_back({in_l, in_r, out_r, out_l});
    }
    current[i] = out_l;
    current[i + 1] = out_r;
  }
  std::map<int, int> rename;
  for (int s = 0; s < strands; ++s) {
    if (current[s] == bottom[s]) {
      throw Error(ErrorKind::ValidationError, "braid closure has a crossingless strand");
    }
    rename[current[s]] = bottom[s];
  }
  std::map<int, int> compact;
  for (auto& x : crossings) {
    for (int& label : x) {
      if (auto it = rename.find(label); it != rename.end()) label = it->second;
      label = compact.try_emplace(label, static_cast<int>(compact.size()) + 1).first->second;
    }
  }
  return PDCode(std::move(crossings));
}

PDCode parse_pd(std::string_view text) {
  PdCursor cur(text);
  cur.expect_word("PD");
  cur.expect('[');
  std::vector<Crossing> crossings;
  if (!cur.try_consume(']')) {
    do {
      cur.expect('X');
      cur.expect('(');
      Crossing x{};
      for (int s = 0; s < 4; ++s) {
        if (s) cur.expect(',');
        x[s] = cur.positive_int();
      }
      cur.expect(')');
      crossings.push_back(x);
    } while (cur.try_consume(','));
    cur.expect(']');
  }
  if (!cur.at_end()) cur.fail("trailing characters");
  return PDCode(std::move(crossings));
}

std::vector<Face> faces(const PDCode& pd) {
  const auto& xs = pd.crossings();
  const int n = static_cast<int>(xs.size());
  const auto ends = edge_ends(xs);

  std::vector<std::array<bool, 4>> used(n, {false, false, false, false});
  std::vector<Face> result;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      if (used[c][s]) continue;
      Face face;
      Corner at{c, s};
      while (!used[at.crossing][at.slot]) {
        used[at.crossing][at.slot] = true;
        face.push_back(at);
        // The region between slots p and p+1 continues along edge p+1 into
        // the corner that starts at that edge's far end.
        const int out_slot = (at.slot + 1) % 4;
        const Dart far = other_end(ends, xs[at.crossing][out_slot], Dart{at.crossing, out_slot});
        at = Corner{far.crossing, far.slot};
      }
      if (!(at == face.front())) {
        throw Error(ErrorKind::NonPlanar, "rotation system does not close into faces");
      }
      result.push_back(std::move(face));
    }
  }
  if (static_cast<int>(result.size()) != n + 2) {
    throw Error(ErrorKind::NonPlanar, "Euler check failed: " + std::to_string(n) + " crossings, " +
                                          std::to_string(result.size()) + " faces");
  }
  return result;
}

bool is_alternating(const PDCode& pd) {
  // Each edge must leave one crossing as an under-strand (slot 0/2) and reach
  // the other as an over-strand (slot 1/3).
  const auto ends = edge_ends(pd.crossings());
  for (std::size_t label = 1; label < ends.size(); ++label) {
    const bool a_under = ends[label][0].slot % 2 == 0;
    const bool b_under = ends[label][1].slot % 2 == 0;
    if (a_under == b_under) return false;
  }
  return true;
}

GoeritzData goeritz(const PDCode& pd) {
  if (!is_alternating(pd)) throw Error(ErrorKind::NotAlternating, pd.to_string());
  const auto fs = faces(pd);
  const int n = static_cast<int>(pd.size());

  // Corners at odd slots, (j,k) and (l,i), are the A-corners.
  GoeritzData data;
  data.white.resize(fs.size());
  std::vector<std::array<int, 4>> face_of(n);
  for (std::size_t f = 0; f < fs.size(); ++f) {
    const bool white = fs[f].front().slot % 2 == 1;
    for (const auto& corner : fs[f]) {
      if ((corner.slot % 2 == 1) != white) {
        throw Error(ErrorKind::NotAlternating, "no checkerboard coloring with uniform crossing type");
      }
      face_of[corner.crossing][corner.slot] = static_cast<int>(f);
    }
    data.white[f] = white;
  }

  std::vector<int> white_index(fs.size(), -1);
  int whites = 0;
  for (std::size_t f = 0; f < fs.size(); ++f) {
    if (data.white[f]) white_index[f] = whites++;
  }

  // Every crossing has incidence -1 for this coloring; the negative crossings
  // are exactly those of type II.
  IntMatrix full(whites, std::vector<BigInt>(whites, 0));
  for (int c = 0; c < n; ++c) {
    const int a = white_index[face_of[c][1]];
    const int b = white_index[face_of[c][3]];
    if (a == b) continue;
    full[a][b] += 1;
    full[b][a] += 1;
    full[a][a] -= 1;
    full[b][b] -= 1;
  }
  data.matrix.assign(whites - 1, std::vector<BigInt>(whites - 1, 0));
  for (int r = 0; r + 1 < whites; ++r) {
    for (int col = 0; col + 1 < whites; ++col) data.matrix[r][col] = full[r][col];
  }
  const auto& signs = pd.crossing_signs();
  data.mu = -static_cast<std::int64_t>(std::count(signs.begin(), signs.end(), -1));
  return data;
}

std::int64_t matrix_signature(const IntMatrix& m) {
  const std::size_t size = m.size();
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size));
  for (std::size_t r = 0; r < size; ++r) {
    if (m[r].size() != size) throw Error(ErrorKind::ValidationError, "matrix is not square");
    for (std::size_t c = 0; c < size; ++c) a[r][c] = Rational(m[r][c]);
  }
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      if (a[r][c] != a[c][r]) throw Error(ErrorKind::ValidationError, "matrix is not symmetric");
    }
  }

  std::int64_t signature = 0;
  std::size_t k = 0;
  while (k < size) {
    std::size_t pivot = k;
    while (pivot < size && a[pivot][pivot] == 0) ++pivot;
    if (pivot == size) {
      // No usable diagonal entry: e_i <- e_i + e_j makes a[i][i] = 2 a[i][j].
      std::size_t pi = size, pj = size;
      for (std::size_t i = k; i < size && pi == size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == size) break;  // remaining block is zero
      for (std::size_t c = k; c < size; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = k; r < size; ++r) a[r][pi] += a[r][pj];
      pivot = pi;
    }
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      for (auto& row : a) std::swap(row[pivot], row[k]);
    }
    const Rational p = a[k][k];
    signature += p > 0 ? 1 : -1;
    for (std::size_t r = k + 1; r < size; ++r) {
      if (a[r][k] == 0) continue;
      const Rational factor = a[r][k] / p;
      for (std::size_t c = k + 1; c < size; ++c) a[r][c] -= factor * a[k][c];
    }
    ++k;
  }
  return signature;
}

BigInt matrix_determinant(const IntMatrix& m) {
  // Fraction-free Bareiss elimination.
  const std::size_t size = m.size();
  if (size == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < size && a[r][k] == 0) ++r;
      if (r == size) return 0;
      std::swap(a[r], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

std::int64_t signature_alt(const PDCode& pd) {
  const GoeritzData g = goeritz(pd);
  if (matrix_determinant(g.matrix) == 0) {
    throw Error(ErrorKind::DegenerateForm, "Goeritz form of " + pd.to_string() + " is singular");
  }
  return matrix_signature(g.matrix) - g.mu;
}

namespace {

LaurentPoly polynomial_determinant(std::vector<std::vector<LaurentPoly>> a) {
  const std::size_t size = a.size();
  if (size == 0) return LaurentPoly::constant(1);
  LaurentPoly prev = LaurentPoly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < size && a[r][k].is_zero()) ++r;
      if (r == size) return {};
      std::swap(a[r], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        a[i][j] = lp_exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
    }
    prev = a[k][k];
  }
  return negate ? -a[size - 1][size - 1] : a[size - 1][size - 1];
}

}  // namespace

LaurentPoly alexander_from_pd(const PDCode& pd) {
  const auto& xs = pd.crossings();
  const int n = static_cast<int>(xs.size());

  // Wirtinger arcs: the two edges of an over-strand belong to the same arc.
  std::vector<int> parent(2 * n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& x : xs) parent[find(x[1])] = find(x[3]);
  std::map<int, int> arc_index;
  for (int label = 1; label <= 2 * n; ++label) arc_index.try_emplace(find(label), 0);
  int arcs = 0;
  for (auto& [root, idx] : arc_index) idx = arcs++;
  auto arc = [&](int label) { return arc_index.at(find(label)); };

  const LaurentPoly one_minus_t{{0, 1}, {1, -1}};
  const LaurentPoly t{{1, 1}};
  const LaurentPoly minus_one{{0, -1}};
  std::vector<std::vector<LaurentPoly>> rows(n, std::vector<LaurentPoly>(arcs));
  for (int c = 0; c < n; ++c) {
    const auto& x = xs[c];
    const int over = arc(x[1]);
    const int in = arc(x[0]);
    const int out = arc(x[2]);
    rows[c][over] = rows[c][over] + one_minus_t;
    if (pd.crossing_signs()[c] > 0) {
      rows[c][in] = rows[c][in] + t;
      rows[c][out] = rows[c][out] + minus_one;
    } else {
      rows[c][in] = rows[c][in] + minus_one;
      rows[c][out] = rows[c][out] + t;
    }
  }

  // Any first elementary minor; drop the last row and column.
  const std::size_t minor = static_cast<std::size_t>(std::min(n, arcs) - 1);
  std::vector<std::vector<LaurentPoly>> sub(minor, std::vector<LaurentPoly>(minor));
  for (std::size_t r = 0; r < minor; ++r) {
    for (std::size_t c = 0; c < minor; ++c) sub[r][c] = rows[r][c];
  }
  LaurentPoly delta = polynomial_determinant(std::move(sub));
  if (delta.is_zero()) {
    throw Error(ErrorKind::DegenerateForm, "Alexander minor vanished for " + pd.to_string());
  }
  delta = lp_symmetrize(delta);
  if (lp_eval_int(delta, 1) < 0) delta = -delta;
  return delta;
}

}  // namespace spinecheck
