#include "doctest.h"
#include "sadm/construct.hpp"
#include "sadm/error.hpp"
#include "sadm/fixtures.hpp"
#include "support.hpp"

using namespace sadm;
using sadm::test::id;
using sadm::test::lab_of;
using sadm::test::mm_of;
using sadm::test::set_of;

namespace {

const auto fig1 = fixtures::fig1();
const auto sq5 = fixtures::sq5();

// Records queue traffic and checks admissibility at every loop boundary.
struct Recorder : ConstructObserver {
  const ArgumentationFramework* af = nullptr;
  std::vector<std::pair<ArgId, MinMaxValue>> enqueued, dequeued;
  std::size_t iterations = 0;
  bool always_admissible = true;
  bool queue_all_in = true;

  void on_enqueue(ArgId x, MinMaxValue v) override { enqueued.emplace_back(x, v); }
  void on_dequeue(ArgId x, MinMaxValue v) override { dequeued.emplace_back(x, v); }
  void on_iteration(const Labelling& lab, const MinMaxNumbering&) override {
    ++iterations;
    always_admissible = always_admissible && is_admissible_labelling(*af, lab);
    for (std::size_t i = dequeued.size(); i < enqueued.size(); ++i)
      queue_all_in = queue_all_in && lab.is_in(enqueued[i].first);
  }
};

}  // namespace

TEST_CASE("construct_for golden traces") {
  auto c = construct_for(fig1, id(fig1, "C"));
  CHECK(c.lab == lab_of(fig1, "A C D", "B"));
  CHECK(c.mm == mm_of(fig1, {{"A", 1}, {"B", 2}, {"C", 3}, {"D", 1}}));

  auto f = construct_for(fig1, id(fig1, "F"));
  CHECK(f.lab == lab_of(fig1, "A C D F", "B E"));
  CHECK(f.mm == mm_of(fig1, {{"A", 1}, {"B", 2}, {"C", 3}, {"D", 1}, {"E", 2}, {"F", 3}}));

  auto e = construct_for(sq5, id(sq5, "E"));
  CHECK(e.lab == lab_of(sq5, "A C E", "B D"));
  CHECK(e.mm == mm_of(sq5, {{"A", 1}, {"B", 2}, {"C", 3}, {"D", 4}, {"E", 5}}));
}

TEST_CASE("FIFO order gives the correct numbers where set-based selection does not") {
  auto f = construct_for(fig1, id(fig1, "F"));
  CHECK(*f.mm[id(fig1, "E")] == MinMaxValue(2));
  CHECK(*f.mm[id(fig1, "F")] == MinMaxValue(3));

  // Numbering produced when C is processed before D.
  auto set_trace = mm_of(fig1, {{"A", 1}, {"B", 2}, {"C", 3}, {"D", 1}, {"E", 4}, {"F", 5}});
  CHECK_FALSE(verify_minmax(fig1, f.lab, set_trace));
  CHECK(verify_minmax(fig1, f.lab, f.mm));
}

TEST_CASE("construct_for rejects arguments outside the grounded extension") {
  CHECK_THROWS_AS(construct_for(fig1, id(fig1, "G")), NotInGrounded);
  try {
    construct_for(fig1, id(fig1, "G"));
  } catch (const NotInGrounded& e) {
    CHECK(e.argument() == "G");
    CHECK(std::string(e.what()).find("'G'") != std::string::npos);
  }
  CHECK_THROWS_AS(construct_for(fixtures::self_attacker(), arg(0)), NotInGrounded);
  CHECK_THROWS_AS(construct_for(fig1, id(fig1, "B")), NotInGrounded);
}

TEST_CASE("unattacked main argument returns from initialization") {
  Recorder rec;
  rec.af = &fig1;
  auto r = construct_for(fig1, id(fig1, "A"), &rec);
  CHECK(rec.iterations == 0);
  CHECK(r.lab == lab_of(fig1, "A", ""));
  CHECK(r.mm == mm_of(fig1, {{"A", 1}}));

  // D is unattacked but comes after A, so A is also labelled.
  auto d = construct_for(fig1, id(fig1, "D"));
  CHECK(d.lab == lab_of(fig1, "A D", ""));
}

TEST_CASE("grounded_with_minmax") {
  auto g = grounded_with_minmax(fig1);
  CHECK(g.lab == lab_of(fig1, "A C D F", "B E"));
  CHECK(g.mm == mm_of(fig1, {{"A", 1}, {"B", 2}, {"C", 3}, {"D", 1}, {"E", 2}, {"F", 3}}));

  CHECK(grounded_with_minmax(sq5).lab == lab_of(sq5, "A C E", "B D"));

  auto xy = parse_tgf("X\nY\n#\n");
  auto r = grounded_with_minmax(xy);
  CHECK(r.lab == lab_of(xy, "X Y", ""));
  CHECK(r.mm == mm_of(xy, {{"X", 1}, {"Y", 1}}));

  CHECK(grounded_with_minmax(fixtures::self_attacker()).lab == Labelling(1));
}

TEST_CASE("property: construct invariants on random frameworks") {
  for (const auto& entry : test::random_corpus(400, 1, 14, 21)) {
    const auto& af = entry.af;
    const ArgSet grounded = grounded_extension_fixpoint(af);
    const auto full = grounded_with_minmax(af);
    REQUIRE(full.lab == args2lab(af, grounded));
    REQUIRE(verify_minmax(af, full.lab, full.mm));

    for (std::size_t i = 0; i < af.size(); ++i) {
      ArgId a = arg(i);
      if (!grounded.contains(a)) {
        REQUIRE_THROWS_AS(construct_for(af, a), NotInGrounded);
        continue;
      }
      Recorder rec;
      rec.af = &af;
      auto r = construct_for(af, a, &rec);
      REQUIRE(r.lab.is_in(a));
      REQUIRE(is_strongly_admissible_labelling(af, r.lab));
      REQUIRE(verify_minmax(af, r.lab, r.mm));
      REQUIRE_FALSE(r.mm.has_infinity());
      REQUIRE(lab_leq(r.lab, full.lab));
      for (ArgId x : r.mm.domain()) REQUIRE(*r.mm[x] == *full.mm[x]);

      REQUIRE(rec.always_admissible);
      REQUIRE(rec.queue_all_in);
      std::vector<char> seen(af.size(), 0);
      for (std::size_t k = 0; k < rec.enqueued.size(); ++k) {
        auto [x, v] = rec.enqueued[k];
        REQUIRE(v >= MinMaxValue(1));
        REQUIRE(v == *r.mm[x]);
        REQUIRE_FALSE(seen[x.index()]);
        seen[x.index()] = 1;
        if (k > 0) REQUIRE(rec.enqueued[k - 1].second <= v);
      }
      for (std::size_t k = 1; k < rec.dequeued.size(); ++k)
        REQUIRE(rec.dequeued[k - 1].second <= rec.dequeued[k].second);
    }
  }
}

TEST_CASE("step count on chains stays far below n^3") {
  for (std::size_t n : {11u, 101u, 1001u, 10001u}) {
    auto af = fixtures::chain(n);
    auto r = construct_for(af, arg(n - 1));
    const double n3 = static_cast<double>(n) * n * n;
    CHECK(static_cast<double>(r.steps) <= 4.0 * n3);
    // Each attack is visited a bounded number of times on a chain.
    CHECK(r.steps <= 2 * n);
  }
}
