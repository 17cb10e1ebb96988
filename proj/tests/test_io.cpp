#include <doctest.h>

#include "rotor/code_io.hpp"
#include "rotor/constructions.hpp"
#include "rotor/products.hpp"

using namespace rotor;

TEST_CASE("canonical text round-trips byte for byte") {
  for (const RotorCode& c : {rp2_1(), rp2_9(), torus2(2, 3), hamming_free_free()}) {
    const std::string text = canonical_code_text(c);
    RotorCode back = parse_code_text(text);
    CHECK(canonical_code_text(back) == text);
    CHECK(back.hx() == c.hx());
    CHECK(back.hz() == c.hz());
    CHECK(back.meta == c.meta);
    CHECK(back.homology.torsion == c.homology.torsion);
  }
}

TEST_CASE("code with no Z checks") {
  RotorCode c = make_code("single", IntMatrix{{2}}, IntMatrix(0, 1));
  RotorCode back = parse_code_text(canonical_code_text(c));
  CHECK(back.n() == 1);
  CHECK(back.hz().rows() == 0);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_code_text("{"), CodeFormatError);
  CHECK_THROWS_AS(parse_code_text("[]"), CodeFormatError);
  CHECK_THROWS_AS(parse_code_text(R"({"name":"x","n":2,"hx":[[1]],"hz":[]})"), CodeFormatError);
  CHECK_THROWS_AS(parse_code_text(R"({"name":"x","n":1,"hx":[[1.5]],"hz":[]})"), CodeFormatError);
  CHECK_THROWS_AS(parse_code_text(R"({"name":"x","n":1,"hz":[]})"), CodeFormatError);
  CHECK_THROWS_AS(parse_code_text(R"({"schema":"other","name":"x","n":1,"hx":[],"hz":[]})"), CodeFormatError);
  CHECK_THROWS_AS(parse_code_text(R"({"name":"x","n":2,"hx":[[1,1]],"hz":[[1,0]]})"), CssViolation);
}

TEST_CASE("parameter strings and tags") {
  CHECK(parameter_string(rp2_4(), "2", "2") == "[[4,(0,2),(2,2)]]");
  Json t = tagged(3, "exact");
  CHECK(t["value"] == 3);
  CHECK(t["method"] == "exact");
}
