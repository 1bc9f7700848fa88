#include "sdualkit/error.hpp"

namespace sdualkit {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
  case Errc::invalid_argument: return "invalid_argument";
  case Errc::parse_error: return "parse_error";
  case Errc::rank_mismatch: return "rank_mismatch";
  case Errc::rank_too_high: return "rank_too_high";
  case Errc::inconsistent_chain: return "inconsistent_chain";
  case Errc::invalid_index: return "invalid_index";
  case Errc::same_type_pair: return "same_type_pair";
  case Errc::non_admissible_move: return "non_admissible_move";
  case Errc::unsupported_diagram: return "unsupported_diagram";
  case Errc::group_mismatch: return "group_mismatch";
  case Errc::no_known_dual: return "no_known_dual";
  case Errc::unknown_coulomb_dim: return "unknown_coulomb_dim";
  case Errc::overflow: return "overflow";
  }
  return "unknown";
}

} // namespace sdualkit
