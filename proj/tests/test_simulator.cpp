#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lbeval/errors.hpp"
#include "lbeval/simulator.hpp"

using namespace lbeval;

namespace {

bool throws_code(Errc want, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

felem dot(const FieldExtension& f, std::span<const felem> a,
          std::span<const felem> b) {
  felem acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

std::vector<felem> random_vec(const FieldExtension& f, int len,
                              std::mt19937_64& rng) {
  std::uniform_int_distribution<felem> pick(0, f.order() - 1);
  std::vector<felem> v(static_cast<std::size_t>(len));
  for (auto& x : v) x = pick(rng);
  return v;
}

}  // namespace

TEST_CASE("deploy") {
  auto f8 = make_extension_field(2, 3);
  RSCode code = RSCode::full_length(f8, 2);

  SUBCASE("no blocks, empty stores") {
    Cluster c = Cluster::deploy(code, {});
    CHECK(c.block_count() == 0);
  }
  SUBCASE("zero block stores zeros everywhere") {
    std::vector<std::vector<felem>> blocks{{0, 0}};
    Cluster c = Cluster::deploy(code, blocks);
    for (int j = 0; j < c.nodes(); ++j) CHECK(c.read_symbol(j, 0) == 0);
  }
  SUBCASE("node j holds symbol j of every block") {
    std::mt19937_64 rng(83);
    std::vector<std::vector<felem>> blocks;
    for (int i = 0; i < 3; ++i) blocks.push_back(random_vec(*f8, 2, rng));
    Cluster c = Cluster::deploy(code, blocks);
    for (int b = 0; b < 3; ++b) {
      auto cw = code.encode(blocks[static_cast<std::size_t>(b)]);
      for (int j = 0; j < c.nodes(); ++j)
        CHECK(c.read_symbol(j, b) == cw[static_cast<std::size_t>(j)]);
    }
  }
  SUBCASE("wrong block shape rejected") {
    std::vector<std::vector<felem>> blocks{{1, 2, 3}};
    CHECK(throws_code(Errc::LengthMismatch,
                      [&] { Cluster::deploy(code, blocks); }));
  }
}

TEST_CASE("failing nodes") {
  auto f8 = make_extension_field(2, 3);
  RSCode code = RSCode::full_length(f8, 2);
  std::vector<std::vector<felem>> blocks{{1, 2}};
  Cluster c = Cluster::deploy(code, blocks);

  SUBCASE("empty set is a no-op, repeated failure is idempotent") {
    Cluster c1 = fail_nodes(std::move(c), {});
    CHECK(c1.failed().empty());
    std::vector<int> era{3, 5};
    Cluster c2 = fail_nodes(std::move(c1), era);
    Cluster c3 = fail_nodes(std::move(c2), era);
    CHECK(c3.failed() == std::set<int>{3, 5});
  }
  SUBCASE("reads of failed nodes panic") {
    std::vector<int> era{2};
    Cluster c1 = fail_nodes(std::move(c), era);
    CHECK(throws_code(Errc::FailedNodeRead, [&] { c1.read_symbol(2, 0); }));
    CHECK(c1.read_symbol(3, 0) != 0xffffffffu);  // other nodes still readable
  }
}

TEST_CASE("scheme evaluation matches the naive baseline exhaustively (RS[8,2])") {
  auto f8 = make_extension_field(2, 3);
  RSCode code = RSCode::full_length(f8, 2);
  std::vector<std::vector<felem>> blocks;
  for (felem x0 = 0; x0 < 8; ++x0)
    for (felem x1 = 0; x1 < 8; ++x1) blocks.push_back({x0, x1});
  Cluster c = Cluster::deploy(code, blocks);

  for (felem p0 = 0; p0 < 8; ++p0)
    for (felem p1 = 0; p1 < 8; ++p1) {
      std::vector<felem> p{p0, p1};
      const bool zero_target = p0 == 0 && p1 == 0;
      for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
        auto r = c.evaluate(b, p, SchemeParams::rate_half());
        const auto expect =
            dot(*f8, p, blocks[static_cast<std::size_t>(b)]);
        CHECK(r.values.front() == expect);
        CHECK(r.bits_downloaded == (zero_target ? 0 : 8));
        CHECK(r.bits_naive == 6);
        auto nv = c.evaluate_naive(b, p);
        CHECK(nv.values.front() == expect);
        CHECK(nv.bits_downloaded == 6);
      }
    }
}

TEST_CASE("erasure-tolerant evaluation on Q = 16") {
  auto f16 = make_extension_field(4, 2);
  RSCode code = RSCode::full_length(f16, 4);
  std::mt19937_64 rng(89);
  std::vector<std::vector<felem>> blocks;
  for (int i = 0; i < 4; ++i) blocks.push_back(random_vec(*f16, 4, rng));
  std::vector<int> era{1, 6, 12};
  Cluster c = fail_nodes(Cluster::deploy(code, blocks), era);
  auto params = SchemeParams::main(Rat(3, 4), Rat(1, 4), Rat(1, 2));

  SUBCASE("values agree with the naive baseline, failed nodes silent") {
    for (int b = 0; b < 4; ++b) {
      auto p = random_vec(*f16, 4, rng);
      auto r = c.evaluate(b, p, params);
      auto nv = c.evaluate_naive(b, p);
      CHECK(r.values == nv.values);
      CHECK(r.bits_downloaded <= (16 - 3) * 3 * 2);
      for (int e : era)
        CHECK(std::find(r.nodes_contacted.begin(), r.nodes_contacted.end(), e) ==
              r.nodes_contacted.end());
      CHECK(r.nodes_contacted.size() == 13);
    }
  }
  SUBCASE("too many failures rejected at evaluation time") {
    std::vector<int> more{2};
    Cluster c2 = fail_nodes(std::move(c), more);
    std::vector<felem> p{1, 0, 0, 0};
    CHECK(throws_code(Errc::TooManyErasures, [&] { c2.evaluate(0, p, params); }));
  }
  SUBCASE("ledger accumulates") {
    const auto before = c.total_downloaded_bits();
    auto p = random_vec(*f16, 4, rng);
    auto r = c.evaluate(0, p, params);
    CHECK(c.total_downloaded_bits() == before + r.bits_downloaded);
  }
}

TEST_CASE("naive evaluation needs k survivors") {
  auto f8 = make_extension_field(2, 3);
  RSCode code = RSCode::full_length(f8, 2);
  std::vector<std::vector<felem>> blocks{{3, 5}};
  std::vector<int> era{0, 1, 2, 3, 4, 5, 6};  // one survivor, k = 2
  Cluster c = fail_nodes(Cluster::deploy(code, blocks), era);
  std::vector<felem> p{1, 1};
  CHECK(throws_code(Errc::InsufficientSurvivors,
                    [&] { c.evaluate_naive(0, p); }));
}

TEST_CASE("sum of squares via local squaring") {
  auto f16 = make_extension_field(4, 2);
  RSCode code = RSCode::full_length(f16, 2);
  std::mt19937_64 rng(97);
  std::vector<int> info{0, 1};

  SUBCASE("matches the direct sum, 100 random systematic blocks") {
    std::vector<std::vector<felem>> blocks;
    for (int i = 0; i < 100; ++i) blocks.push_back(random_vec(*f16, 2, rng));
    Cluster c = Cluster::deploy_systematic(code, blocks, info);
    for (int b = 0; b < 100; ++b) {
      felem direct = 0;
      for (felem x : blocks[static_cast<std::size_t>(b)])
        direct = f16->add(direct, f16->mul(x, x));
      auto r = c.evaluate_sum_of_squares(b);
      CHECK(r.values.front() == direct);
      // characteristic 2: sum of squares is the square of the sum
      felem s = 0;
      for (felem x : blocks[static_cast<std::size_t>(b)]) s = f16->add(s, x);
      CHECK(r.values.front() == f16->mul(s, s));
    }
  }
  SUBCASE("zero data sums to zero") {
    std::vector<std::vector<felem>> blocks{{0, 0}};
    Cluster c = Cluster::deploy_systematic(code, blocks, info);
    CHECK(c.evaluate_sum_of_squares(0).values.front() == 0);
  }
  SUBCASE("non-systematic deployment rejected") {
    std::vector<std::vector<felem>> blocks{{1, 2}};
    Cluster c = Cluster::deploy(code, blocks);
    CHECK(throws_code(Errc::NotSystematic,
                      [&] { c.evaluate_sum_of_squares(0); }));
  }
  SUBCASE("dimension bound enforced") {
    RSCode wide = RSCode::full_length(f16, 7);  // 2k-1 = 13 > rate-half bound 6
    std::vector<std::vector<felem>> blocks{{0, 0, 0, 0, 0, 0, 0}};
    std::vector<int> info7{0, 1, 2, 3, 4, 5, 6};
    Cluster c = Cluster::deploy_systematic(wide, blocks, info7);
    CHECK(throws_code(Errc::DimensionTooLarge,
                      [&] { c.evaluate_sum_of_squares(0); }));
  }
}

TEST_CASE("base-field batching recovers all t dot products at one evaluation's cost") {
  auto f16 = make_extension_field(4, 2);
  RSCode code = RSCode::full_length(f16, 3);
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<felem> base_pick(0, 3);

  SUBCASE("componentwise oracle on single-basis-vector blocks") {
    // block i carries zeta_i * y, so only coordinate i of the batch is live
    std::vector<felem> y{base_pick(rng), base_pick(rng), base_pick(rng)};
    std::vector<std::vector<felem>> blocks;
    for (felem zeta : f16->basis()) {
      std::vector<felem> x(3);
      for (std::size_t j = 0; j < 3; ++j) x[j] = f16->mul(zeta, y[j]);
      blocks.push_back(std::move(x));
    }
    Cluster c = Cluster::deploy(code, blocks);
    std::vector<felem> b{base_pick(rng), base_pick(rng), base_pick(rng)};
    felem expect = 0;
    for (std::size_t j = 0; j < 3; ++j)
      expect = f16->base().add(expect, f16->base().mul(b[j], y[j]));
    for (int i = 0; i < f16->ext_degree(); ++i) {
      auto r = c.evaluate_batched_base_field(i, b, SchemeParams::rate_half());
      REQUIRE(r.values.size() == 2);
      for (int m = 0; m < f16->ext_degree(); ++m)
        CHECK(r.values[static_cast<std::size_t>(m)] == (m == i ? expect : 0));
    }
  }
  SUBCASE("ledger shows one evaluation's cost and coefficients are checked") {
    std::vector<std::vector<felem>> blocks{random_vec(*f16, 3, rng)};
    Cluster c = Cluster::deploy(code, blocks);
    std::vector<felem> b{1, 2, 3};
    auto batched = c.evaluate_batched_base_field(0, b, SchemeParams::rate_half());
    auto plain = c.evaluate(0, b, SchemeParams::rate_half());
    CHECK(batched.bits_downloaded == plain.bits_downloaded);

    std::vector<felem> bad{1, 5, 0};  // 5 is outside GF(4)
    CHECK(throws_code(Errc::CoefficientNotInBase, [&] {
      c.evaluate_batched_base_field(0, bad, SchemeParams::rate_half());
    }));
  }
  SUBCASE("zero batch gives t zeros") {
    std::vector<std::vector<felem>> blocks{random_vec(*f16, 3, rng)};
    Cluster c = Cluster::deploy(code, blocks);
    std::vector<felem> b{0, 0, 0};
    auto r = c.evaluate_batched_base_field(0, b, SchemeParams::rate_half());
    for (felem v : r.values) CHECK(v == 0);
  }
}

TEST_CASE("shorter codes fold absent points into the erasure set") {
  auto f16 = make_extension_field(4, 2);
  // n = 14 < Q = 16: two absent points plus one failure stays under gamma*Q = 4
  std::vector<felem> pts;
  for (felem a = 0; a < 14; ++a) pts.push_back(a);
  RSCode code(f16, 4, pts);
  std::mt19937_64 rng(103);
  std::vector<std::vector<felem>> blocks{random_vec(*f16, 4, rng)};
  std::vector<int> era{3};
  Cluster c = fail_nodes(Cluster::deploy(code, blocks), era);
  auto params = SchemeParams::main(Rat(3, 4), Rat(1, 4), Rat(1, 2));

  auto p = random_vec(*f16, 4, rng);
  auto r = c.evaluate(0, p, params);
  auto nv = c.evaluate_naive(0, p);
  CHECK(r.values == nv.values);
  CHECK(r.nodes_contacted.size() == 13);
}
