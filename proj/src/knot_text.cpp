#include "spinecheck/knot_text.hpp"

#include <cctype>
#include <charconv>

#include "spinecheck/error.hpp"

namespace spinecheck {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  KnotExpr parse() {
    KnotExpr k = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return k;
  }

 private:
  KnotExpr expr() {
    std::vector<KnotExpr> parts;
    parts.push_back(term());
    while (try_consume("#")) parts.push_back(term());
    return KnotExpr::sum(std::move(parts));
  }

  KnotExpr term() {
    skip_ws();
    if (try_consume("mirror(")) {
      KnotExpr inner = expr();
      expect(")");
      return KnotExpr::mirror(std::move(inner));
    }
    if (try_consume("T(")) {
      const auto p = integer();
      expect(",");
      const auto q = integer();
      expect(")");
      return KnotExpr::torus(p, q);
    }
    if (try_consume("alt(")) {
      expect("sigma");
      expect("=");
      const auto sigma = integer();
      expect(")");
      return KnotExpr::alt_signature(sigma);
    }
    if (try_consume("pd(")) {
      skip_ws();
      const auto close = text_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated PD code");
      const std::string_view pd_text = text_.substr(pos_, close + 1 - pos_);
      pos_ = close + 1;
      expect(")");
      return KnotExpr::alt_diagram(parse_pd(pd_text));
    }
    if (try_consume("vtable(")) return vtable();
    if (try_consume("U")) return KnotExpr::unknot();
    fail("expected a knot term");
  }

  KnotExpr vtable() {
    expect("g");
    expect("=");
    const auto g = integer();
    expect(";");
    expect("v");
    expect("=");
    std::vector<std::int64_t> values{integer()};
    while (try_consume(",")) values.push_back(integer());
    std::optional<int> arf;
    std::optional<bool> slice;
    while (try_consume(";")) {
      if (!arf && !slice && try_consume("arf")) {
        expect("=");
        const auto b = integer();
        if (b != 0 && b != 1) fail("arf must be 0 or 1");
        arf = static_cast<int>(b);
      } else if (!slice && try_consume("slice")) {
        expect("=");
        if (try_consume("true")) {
          slice = true;
        } else if (try_consume("false")) {
          slice = false;
        } else {
          fail("slice must be true or false");
        }
      } else {
        fail("expected arf= or slice=");
      }
    }
    expect(")");
    return KnotExpr::explicit_v(g, std::move(values), arf, slice);
  }

  std::int64_t integer() {
    skip_ws();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_consume(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!try_consume(token)) fail("expected '" + std::string(token) + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos_) + " in knot '" +
                                            std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

KnotExpr parse_knot(std::string_view text) { return Parser(text).parse(); }

std::string to_text(const KnotExpr& k) {
  if (k.is<node::Unknot>()) return "U";
  if (k.is<node::Torus>()) {
    const auto& t = k.as<node::Torus>();
    return "T(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
  }
  if (k.is<node::AltSignature>()) return "alt(sigma=" + std::to_string(k.as<node::AltSignature>().sigma) + ")";
  if (k.is<node::AltDiagram>()) return "pd(" + k.as<node::AltDiagram>().pd.to_string() + ")";
  if (k.is<node::ExplicitV>()) {
    const auto& e = k.as<node::ExplicitV>();
    std::string out = "vtable(g=" + std::to_string(e.genus) + ";v=";
    for (std::size_t i = 0; i < e.values.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(e.values[i]);
    }
    if (e.arf) out += ";arf=" + std::to_string(*e.arf);
    if (e.slice) out += std::string(";slice=") + (*e.slice ? "true" : "false");
    return out + ")";
  }
  if (k.is<node::Mirror>()) return "mirror(" + to_text(*k.as<node::Mirror>().inner) + ")";
  std::string out;
  for (const auto& part : k.as<node::Sum>().parts) {
    if (!out.empty()) out += "#";
    out += to_text(part);
  }
  return out;
}

}  // namespace spinecheck
