#include <doctest.h>

#include "spinecheck/error.hpp"
#include "spinecheck/knot_text.hpp"

using namespace spinecheck;

namespace {

ErrorKind kind_of(const char* text) {
  try {
    parse_knot(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::Unknown;
}

}  // namespace

TEST_CASE("parse_knot shapes") {
  CHECK(parse_knot("U") == KnotExpr::unknot());
  CHECK(parse_knot(" T( 2 , 3 ) ") == KnotExpr::torus(2, 3));
  CHECK(parse_knot("mirror(T(2,5))") == KnotExpr::mirror(KnotExpr::torus(2, 5)));
  CHECK(parse_knot("alt(sigma=-6)") == KnotExpr::alt_signature(-6));
  CHECK(parse_knot("T(2,3)#T(2,3) # T(3,4)") ==
        KnotExpr::sum({KnotExpr::torus(2, 3), KnotExpr::torus(2, 3), KnotExpr::torus(3, 4)}));
  CHECK(parse_knot("vtable(g=2;v=2,1,0;arf=1;slice=false)") == KnotExpr::explicit_v(2, {2, 1, 0}, 1, false));
  const KnotExpr pd = parse_knot("pd(PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)])");
  CHECK(pd.is<node::AltDiagram>());
}

TEST_CASE("parse_knot errors") {
  CHECK(kind_of("T(2,") == ErrorKind::SyntaxError);
  CHECK(kind_of("") == ErrorKind::SyntaxError);
  CHECK(kind_of("U U") == ErrorKind::SyntaxError);
  CHECK(kind_of("T(2,3)#") == ErrorKind::SyntaxError);
  CHECK(kind_of("knot") == ErrorKind::SyntaxError);
  CHECK(kind_of("alt(sigma=-3)") == ErrorKind::OddSignature);
  CHECK(kind_of("T(2,4)") == ErrorKind::ValidationError);
  CHECK(kind_of("vtable(g=1;v=2,0)") == ErrorKind::ValidationError);
  const std::string t34 = "pd(" + braid_closure_pd(3, {1, 2, 1, 2, 1, 2, 1, 2}).to_string() + ")";
  CHECK(kind_of(t34.c_str()) == ErrorKind::NotAlternating);
}

TEST_CASE("canonical text round-trips") {
  const char* inputs[] = {
      "U",
      "T(2,3)",
      "mirror(T(3,4))",
      "mirror(mirror(U))",
      "alt(sigma=4)",
      "T(2,3)#mirror(alt(sigma=-2))#U",
      "vtable(g=3;v=2,1,1,0;arf=0)",
      "vtable(g=0;v=0;slice=true)",
      "pd(PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)])",
      "mirror(T(2,3)#T(2,5))",
  };
  for (const char* in : inputs) {
    CAPTURE(in);
    const KnotExpr k = parse_knot(in);
    const std::string text = to_text(k);
    CHECK(parse_knot(text) == k);
    CHECK(to_text(parse_knot(text)) == text);
  }
  CHECK(to_text(parse_knot(" T( 2 ,3 )#U ")) == "T(2,3)#U");
}
