#pragma once

#include "sandcoh/channels.hpp"
#include "sandcoh/states.hpp"

#include <optional>
#include <string>

namespace sandcoh {

// State files are JSON documents:
//   {"dim": 2, "matrix": [[[re, im], [re, im]], [[re, im], [re, im]]]}
// or, for a pure state,
//   {"dim": 2, "vector": [[re, im], [re, im]]}
// Channel files:
//   {"dim": 2, "kraus": [<matrix>, ...], "incoherent": true}
// with "incoherent" optional and re-checked on load.

struct LoadedState {
  DensityMatrix rho;
  std::optional<PureState> pure; // set when the file held a "vector"
};

LoadedState parse_state(const std::string& text, const std::string& source = "<string>");
LoadedState load_state(const std::string& path);

std::string state_to_json(const DensityMatrix& rho);
std::string state_to_json(const PureState& psi);
void save_state(const std::string& path, const DensityMatrix& rho);
void save_state(const std::string& path, const PureState& psi);

KrausSet parse_channel(const std::string& text, const std::string& source = "<string>");
KrausSet load_channel(const std::string& path);
std::string channel_to_json(const KrausSet& channel);

// "%.17g": round-trips every double.
std::string format_double(double x);

} // namespace sandcoh
