#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdualkit {

/// Failure categories shared by every module. The CLI maps them onto exit codes.
enum class Errc {
  invalid_argument,
  parse_error,
  rank_mismatch,
  rank_too_high,
  inconsistent_chain,
  invalid_index,
  same_type_pair,
  non_admissible_move,
  unsupported_diagram,
  group_mismatch,
  no_known_dual,
  unknown_coulomb_dim,
  overflow,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace sdualkit
