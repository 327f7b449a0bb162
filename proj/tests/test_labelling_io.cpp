#include "doctest.h"
#include "sadm/error.hpp"
#include "sadm/fixtures.hpp"
#include "sadm/labelling_io.hpp"
#include "support.hpp"

using namespace sadm;
using sadm::test::kInf;
using sadm::test::lab_of;
using sadm::test::mm_of;

TEST_CASE("certificate text format") {
  const auto fig1 = fixtures::fig1();
  const auto lab = lab_of(fig1, "A C F G", "B E H");
  const auto mm =
      mm_of(fig1, {{"A", 1}, {"B", 2}, {"C", 3}, {"E", 4}, {"F", 5}, {"G", kInf}, {"H", kInf}});
  const std::string text = format_certificate(fig1, lab, mm);
  CHECK(text == "in: A C F G\nout: B E H\nundec: D\nmm: A=1 B=2 C=3 E=4 F=5 G=inf H=inf\n");

  auto cert = parse_certificate(fig1, text);
  CHECK(cert.lab == lab);
  REQUIRE(cert.mm);
  CHECK(*cert.mm == mm);

  CHECK(format_labelling(fig1, Labelling(fig1.size())) == "in:\nout:\nundec: A B C D E F G H\n");
  CHECK(format_numbering(fig1, MinMaxNumbering(fig1.size())) == "mm:\n");
}

TEST_CASE("certificate parsing edge cases") {
  const auto fig1 = fixtures::fig1();
  auto partial = parse_certificate(fig1, "out: B\r\n\r\nin: A C\r\n");
  CHECK(partial.lab == lab_of(fig1, "A C", "B"));
  CHECK_FALSE(partial.mm);

  CHECK_THROWS_AS(parse_certificate(fig1, "in: Z\n"), UndeclaredArgument);
  CHECK_THROWS_AS(parse_certificate(fig1, "in: A\nundec: A\n"), SyntaxError);
  CHECK_THROWS_AS(parse_certificate(fig1, "in: A\nin: C\n"), SyntaxError);
  CHECK_THROWS_AS(parse_certificate(fig1, "maybe: A\n"), SyntaxError);
  CHECK_THROWS_AS(parse_certificate(fig1, "A B\n"), SyntaxError);
  CHECK_THROWS_AS(parse_certificate(fig1, "mm: A=0\n"), SyntaxError);
  CHECK_THROWS_AS(parse_certificate(fig1, "mm: A=x\n"), SyntaxError);
  CHECK_THROWS_AS(parse_certificate(fig1, "mm: A=1 A=2\n"), SyntaxError);
  CHECK_THROWS_AS(parse_certificate(fig1, "mm: A\n"), SyntaxError);
}
