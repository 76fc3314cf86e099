#include "sandcoh/errors.hpp"
#include "sandcoh/io.hpp"
#include "sandcoh/random.hpp"

#include <doctest.h>

#include <cstdlib>
#include <string>

using namespace sandcoh;

namespace {

std::string error_text(const std::string& text) {
  try {
    parse_state(text, "in.state");
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST_CASE("state round trip is bit exact") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const DensityMatrix rho = random_density(3, 1 + s % 3, RngSeed{s});
    const LoadedState back = parse_state(state_to_json(rho));
    CHECK(back.rho.mat() == rho.mat());
    CHECK_FALSE(back.pure.has_value());

    const PureState psi = random_pure(4, RngSeed{s});
    const LoadedState p = parse_state(state_to_json(psi));
    REQUIRE(p.pure.has_value());
    CHECK(p.pure->amplitudes() == psi.amplitudes());
  }
}

TEST_CASE("state parse errors carry positional context") {
  CHECK(error_text("{\"dim\": 2, \"matrix\": [[[1,0],[0,0]]") .find("byte") != std::string::npos);
  CHECK(error_text("{\"matrix\": []}").find("dim") != std::string::npos);
  CHECK(error_text("{\"dim\": 2, \"matrix\": [[[1,0],[0,0]],[[0,0],[0]]]}").find("matrix[1][1]") !=
        std::string::npos);
  CHECK(error_text("{\"dim\": 2, \"vector\": [[1,0]]}").find("vector") != std::string::npos);
  CHECK(error_text("{\"dim\": 2}").find("exactly one") != std::string::npos);

  try {
    parse_state("{\"dim\": 2, \"matrix\": [[[1,0],[0,0]],[[0,0],[1,0]]]}", "in.state");
    FAIL("expected a trace error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDensityMatrix);
    CHECK(std::string(e.what()).find("in.state") != std::string::npos);
  }
}

TEST_CASE("channel round trip and flag revalidation") {
  const KrausSet k = random_incoherent_channel(3, 2, RngSeed{4});
  const KrausSet back = parse_channel(channel_to_json(k));
  REQUIRE(back.size() == k.size());
  for (std::size_t n = 0; n < k.size(); ++n) CHECK(back.operators()[n] == k.operators()[n]);
  CHECK(back.incoherent());

  const std::string hadamard =
      "{\"dim\": 2, \"incoherent\": true, \"kraus\": [[[[0.7071067811865476,0],[0.7071067811865476,0]],"
      "[[0.7071067811865476,0],[-0.7071067811865476,0]]]]}";
  try {
    parse_channel(hadamard);
    FAIL("expected IncoherentFlagMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncoherentFlagMismatch);
  }
}

TEST_CASE("files") {
  const std::string path = "io_test_tmp.state";
  const DensityMatrix rho = random_density(2, 2, RngSeed{5});
  save_state(path, rho);
  CHECK(load_state(path).rho.mat() == rho.mat());
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_state("does/not/exist.state"), Error);
}

TEST_CASE("format_double round trips") {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0}) CHECK(std::stod(format_double(x)) == x);
  CHECK(format_double(std::nan("")) == "NaN");
}
