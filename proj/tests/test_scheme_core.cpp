#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lbeval/errors.hpp"
#include "lbeval/rs_code.hpp"
#include "lbeval/scheme_core.hpp"

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

SubspaceAssignment full_assignment(const FieldExtension& f, std::size_t n) {
  std::vector<std::vector<felem>> basis(n);
  for (auto& b : basis) b.assign(f.basis().begin(), f.basis().end());
  return SubspaceAssignment(f, std::move(basis));
}

SubspaceAssignment zero_assignment(const FieldExtension& f, std::size_t n) {
  return SubspaceAssignment(f, std::vector<std::vector<felem>>(n));
}

felem dot(const FieldExtension& f, std::span<const felem> a,
          std::span<const felem> b) {
  felem acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

// all dual codewords by enumerating base combinations of the dual basis
std::vector<std::vector<felem>> enumerate_dual(const FieldExtension& f,
                                               const RSCode& code) {
  auto basis = code.dual_code_basis();
  std::vector<std::vector<felem>> out;
  const felem Q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) total *= Q;
  for (std::uint64_t sel = 0; sel < total; ++sel) {
    std::vector<felem> v(static_cast<std::size_t>(code.length()), 0);
    std::uint64_t s = sel;
    for (const auto& b : basis) {
      const felem lambda = static_cast<felem>(s % Q);
      s /= Q;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = f.add(v[j], f.mul(lambda, b[j]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

TEST_CASE("find_witness") {
  auto f = make_extension_field(2, 3);
  RSCode code = RSCode::full_length(f, 2);
  Mat g = code.generator_matrix();

  SUBCASE("zero target gives the zero witness") {
    std::vector<felem> p{0, 0};
    for (felem x : find_witness(*f, g, p)) CHECK(x == 0);
  }
  SUBCASE("G^T w = p on random targets, deterministically") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<felem> pick(0, 7);
    Mat gt = transpose(g);
    for (int rep = 0; rep < 100; ++rep) {
      std::vector<felem> p{pick(rng), pick(rng)};
      auto w = find_witness(*f, g, p);
      CHECK(mat_vec(*f, gt, w) == p);
      CHECK(find_witness(*f, g, p) == w);
    }
  }
}

TEST_CASE("verify_linear_scheme") {
  auto f = make_extension_field(2, 2);
  RSCode code = RSCode::full_length(f, 2);
  Mat g = code.generator_matrix();

  SUBCASE("full subspaces accept every target") {
    auto v = full_assignment(*f, 4);
    for (felem p0 = 0; p0 < 4; ++p0)
      for (felem p1 = 0; p1 < 4; ++p1) {
        std::vector<felem> p{p0, p1};
        CHECK(verify_linear_scheme(*f, g, p, v));
      }
  }
  SUBCASE("zero subspaces reject p = (1,0); brute force agrees") {
    auto v = zero_assignment(*f, 4);
    std::vector<felem> p{1, 0};
    CHECK_FALSE(verify_linear_scheme(*f, g, p, v));

    // with V = {0} the condition collapses to zeta_i w in C-perp for all i
    auto w = find_witness(*f, g, p);
    auto duals = enumerate_dual(*f, code);
    bool all_in = true;
    for (felem zeta : f->basis()) {
      std::vector<felem> zw(w.size());
      for (std::size_t j = 0; j < w.size(); ++j) zw[j] = f->mul(zeta, w[j]);
      bool found = false;
      for (const auto& y : duals)
        if (y == zw) {
          found = true;
          break;
        }
      if (!found) all_in = false;
    }
    CHECK_FALSE(all_in);
  }
  SUBCASE("zero target accepted by any assignment") {
    auto v = zero_assignment(*f, 4);
    std::vector<felem> p{0, 0};
    CHECK(verify_linear_scheme(*f, g, p, v));
  }
}

TEST_CASE("decompose_witness and its invariants") {
  auto f = make_extension_field(2, 2);
  RSCode code = RSCode::full_length(f, 2);
  Mat g = code.generator_matrix();
  Mat gt = transpose(g);

  SUBCASE("zero target with any assignment yields a valid all-zero witness") {
    auto v = zero_assignment(*f, 4);
    std::vector<felem> p{0, 0};
    auto wit = decompose_witness(*f, g, p, v);
    for (felem x : wit.w) CHECK(x == 0);
    for (const auto& z : wit.z)
      for (felem x : z) CHECK(x == 0);
  }
  SUBCASE("definitional round-trip: zeta_i w - z^(i) = sum a * beta") {
    auto v = full_assignment(*f, 4);
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<felem> pick(0, 3);
    for (int rep = 0; rep < 30; ++rep) {
      std::vector<felem> p{pick(rng), pick(rng)};
      auto wit = decompose_witness(*f, g, p, v);
      CHECK(mat_vec(*f, gt, wit.w) == p);
      for (std::size_t i = 0; i < wit.z.size(); ++i) {
        // z^(i) is a dual codeword
        auto gtz = mat_vec(*f, gt, wit.z[i]);
        for (felem x : gtz) CHECK(x == 0);
        for (std::size_t j = 0; j < 4; ++j) {
          const felem vij =
              f->sub(f->mul(f->basis()[i], wit.w[j]), wit.z[i][j]);
          felem recon = 0;
          auto nb = v.node_basis(j);
          for (std::size_t l = 0; l < nb.size(); ++l)
            recon = f->add(recon, f->mul(wit.a[i][j][l], nb[l]));
          CHECK(recon == vij);
        }
      }
    }
  }
  SUBCASE("NotAScheme when verification fails") {
    auto v = zero_assignment(*f, 4);
    std::vector<felem> p{1, 0};
    CHECK(throws_code(Errc::NotAScheme,
                      [&] { decompose_witness(*f, g, p, v); }));
  }
}

TEST_CASE("node_response") {
  auto f = make_extension_field(2, 2);
  SUBCASE("trivial cases") {
    auto r = node_response(*f, 0, 3, std::vector<felem>{});
    CHECK(r.values.empty());
    CHECK(r.bit_count == 0);
    auto rz = node_response(*f, 1, 0, std::vector<felem>{1, 2});
    CHECK(rz.values == std::vector<felem>{0, 0});
  }
  SUBCASE("GF(4): V = span(alpha), symbol alpha -> (tr(alpha^2)) = (1)") {
    auto r = node_response(*f, 2, 2, std::vector<felem>{2});
    CHECK(r.values == std::vector<felem>{1});
    CHECK(r.bit_count == 1);
  }
}

TEST_CASE("soundness: accepted schemes reconstruct exactly, exhaustively") {
  auto f = make_extension_field(2, 2);
  RSCode code = RSCode::full_length(f, 2);
  Mat g = code.generator_matrix();
  auto v = full_assignment(*f, 4);
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<felem> pick(0, 3);

  for (int rep = 0; rep < 10; ++rep) {
    std::vector<felem> p{pick(rng), pick(rng)};
    REQUIRE(verify_linear_scheme(*f, g, p, v));
    auto wit = decompose_witness(*f, g, p, v);
    for (felem m0 = 0; m0 < 4; ++m0)
      for (felem m1 = 0; m1 < 4; ++m1) {
        std::vector<felem> msg{m0, m1};
        auto cw = code.encode(msg);
        std::vector<NodeResponse> resp;
        for (int j = 0; j < 4; ++j)
          resp.push_back(node_response(*f, j, cw[static_cast<std::size_t>(j)],
                                       v.node_basis(static_cast<std::size_t>(j))));
        CHECK(generic_reconstruct(*f, wit, resp) == dot(*f, p, msg));
      }
  }
}

TEST_CASE("zero-dimensional nodes contribute no bits and are never read") {
  auto f = make_extension_field(2, 2);
  RSCode code = RSCode::full_length(f, 2);
  Mat g = code.generator_matrix();
  // V_1 = {0}; remaining nodes carry the full field
  std::vector<std::vector<felem>> basis(4);
  for (std::size_t j = 0; j < 4; ++j)
    if (j != 1) basis[j].assign(f->basis().begin(), f->basis().end());
  SubspaceAssignment v(*f, std::move(basis));
  CHECK(v.bandwidth_bits(*f) == 6);  // 3 nodes * 2 symbols * 1 bit

  std::vector<felem> p{2, 1};
  if (verify_linear_scheme(*f, g, p, v)) {
    auto wit = decompose_witness(*f, g, p, v);
    std::vector<felem> msg{1, 3};
    auto cw = code.encode(msg);
    // responses omit node 1 entirely
    std::vector<NodeResponse> resp;
    for (int j : {0, 2, 3})
      resp.push_back(node_response(*f, j, cw[static_cast<std::size_t>(j)],
                                   v.node_basis(static_cast<std::size_t>(j))));
    CHECK(generic_reconstruct(*f, wit, resp) == dot(*f, p, msg));
  }
}

TEST_CASE("bandwidth additivity") {
  auto f = make_extension_field(4, 2);
  std::vector<std::vector<felem>> basis(3);
  basis[0] = {1};
  basis[1] = {};
  basis[2] = {1, 4};
  SubspaceAssignment v(*f, std::move(basis));
  CHECK(v.bandwidth_bits(*f) == (1 + 0 + 2) * 2);  // ceil(log2 4) = 2
}

TEST_CASE("perp_char_check") {
  auto f = make_extension_field(2, 2);
  RSCode code = RSCode::full_length(f, 2);
  Mat g = code.generator_matrix();

  SUBCASE("full subspaces: both sides are everything") {
    auto v = full_assignment(*f, 4);
    auto [lr, rl] = perp_char_check(*f, g, v);
    CHECK(lr);
    CHECK(rl);
  }
  SUBCASE("random dim-<=1 assignments agree on both sides") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<felem> pick(0, 3);
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<std::vector<felem>> basis(4);
      for (auto& b : basis) {
        const felem x = pick(rng);
        if (x != 0) b = {x};
      }
      SubspaceAssignment v(*f, std::move(basis));
      auto [lr, rl] = perp_char_check(*f, g, v);
      CHECK(lr);
      CHECK(rl);
    }
  }
  SUBCASE("guard against oversized enumeration") {
    auto f10 = make_extension_field(2, 10);
    RSCode big = RSCode::full_length(f10, 256);
    CHECK(throws_code(Errc::TooLargeForExhaustive, [&] {
      perp_char_check(*f10, big.generator_matrix(),
                      zero_assignment(*f10, 1024));
    }));
  }
}
