#include "sdualkit/brane.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sdualkit/error.hpp"
#include "sdualkit/partitions.hpp"

namespace sdualkit {

BraneDiagram::BraneDiagram(std::vector<Brane> b, std::vector<int> d)
    : branes(std::move(b)), dims(std::move(d)) {
  validate();
}

void BraneDiagram::validate() const {
  if (dims.size() != branes.size() + 1) {
    throw Error(Errc::invalid_argument, "diagram with " + std::to_string(branes.size()) +
                                            " branes needs " + std::to_string(branes.size() + 1) +
                                            " segments, got " + std::to_string(dims.size()));
  }
  if (std::any_of(dims.begin(), dims.end(), [](int v) { return v < 0; })) {
    throw Error(Errc::invalid_argument, "negative segment dimension");
  }
}

std::string BraneDiagram::to_string() const {
  std::string s = std::to_string(dims[0]);
  for (std::size_t i = 0; i < branes.size(); ++i) {
    s += ' ';
    s += static_cast<char>(branes[i]);
    s += ' ';
    s += std::to_string(dims[i + 1]);
  }
  return s;
}

BraneDiagram BraneDiagram::parse(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(current);
      current.clear();
    }
  };
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      flush();
    } else if (c == 'o' || c == 'x') {
      flush();
      tokens.emplace_back(1, c);
    } else {
      current += c;
    }
  }
  flush();

  BraneDiagram d;
  d.dims.clear();
  bool expect_dim = true;
  for (const auto &tok : tokens) {
    if (expect_dim) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw Error(Errc::parse_error, "expected a segment dimension, got '" + tok + "'");
      }
      d.dims.push_back(value);
    } else {
      if (tok == "o") {
        d.branes.push_back(Brane::ns5);
      } else if (tok == "x") {
        d.branes.push_back(Brane::d5);
      } else {
        throw Error(Errc::parse_error, "expected 'o' or 'x', got '" + tok + "'");
      }
    }
    expect_dim = !expect_dim;
  }
  if (d.dims.empty() || expect_dim) {
    throw Error(Errc::parse_error, "diagram must start and end with a segment dimension");
  }
  try {
    d.validate();
  } catch (const Error &e) {
    throw Error(Errc::parse_error, e.what());
  }
  return d;
}

void QuiverData::validate() const {
  if (v.size() != w.size()) {
    throw Error(Errc::invalid_argument, "quiver needs as many framings as gauge nodes");
  }
  auto negative = [](int x) { return x < 0; };
  if (std::any_of(v.begin(), v.end(), negative) || std::any_of(w.begin(), w.end(), negative)) {
    throw Error(Errc::invalid_argument, "negative quiver dimension");
  }
}

namespace {

BraneDiagram unfold_quiver(const QuiverData &q, Brane separator, Brane flavor) {
  q.validate();
  BraneDiagram d;
  d.branes.push_back(separator);
  for (std::size_t i = 0; i < q.length(); ++i) {
    d.dims.push_back(q.v[i]);
    for (int k = 0; k < q.w[i]; ++k) {
      d.branes.push_back(flavor);
      d.dims.push_back(q.v[i]);
    }
    d.branes.push_back(separator);
  }
  d.dims.push_back(0);
  return d;
}

} // namespace

BraneDiagram quiver_to_diagram(const QuiverData &q) { return unfold_quiver(q, Brane::ns5, Brane::d5); }

BraneDiagram quiver_to_dual_diagram(const QuiverData &q) {
  return unfold_quiver(q, Brane::d5, Brane::ns5);
}

BraneDiagram sdual(const BraneDiagram &d) {
  BraneDiagram out = d;
  for (auto &b : out.branes) {
    b = exchanged(b);
  }
  return out;
}

BraneDiagram concat(const BraneDiagram &d1, const BraneDiagram &d2) {
  if (d1.dims.back() != d2.dims.front()) {
    throw Error(Errc::invalid_argument, "cannot join segment " + std::to_string(d1.dims.back()) +
                                            " to segment " + std::to_string(d2.dims.front()));
  }
  BraneDiagram out = d1;
  out.branes.insert(out.branes.end(), d2.branes.begin(), d2.branes.end());
  out.dims.insert(out.dims.end(), d2.dims.begin() + 1, d2.dims.end());
  return out;
}

BraneDiagram hw_move(const BraneDiagram &d, std::size_t i) {
  d.validate();
  if (i + 1 >= d.branes.size()) {
    throw Error(Errc::invalid_index, "no brane pair at index " + std::to_string(i) + " in a " +
                                         std::to_string(d.branes.size()) + "-brane diagram");
  }
  if (d.branes[i] == d.branes[i + 1]) {
    throw Error(Errc::same_type_pair, "branes " + std::to_string(i) + " and " +
                                          std::to_string(i + 1) + " have the same type");
  }
  const int left = d.dims[i];
  const int middle = d.dims[i + 1];
  const int right = d.dims[i + 2];
  const int moved = left + right + 1 - middle;
  if (moved < 0) {
    throw Error(Errc::non_admissible_move, "move at " + std::to_string(i) +
                                               " would leave segment dimension " +
                                               std::to_string(moved));
  }
  BraneDiagram out = d;
  std::swap(out.branes[i], out.branes[i + 1]);
  out.dims[i + 1] = moved;
  return out;
}

LinkingData linking_numbers(const BraneDiagram &d) {
  d.validate();
  LinkingData out;
  const auto total_ns5 = static_cast<int>(std::count(d.branes.begin(), d.branes.end(), Brane::ns5));
  int ns5_left = 0;
  int d5_left = 0;
  for (std::size_t p = 0; p < d.branes.size(); ++p) {
    const int left = d.dims[p];
    const int right = d.dims[p + 1];
    if (d.branes[p] == Brane::ns5) {
      out.ns5.push_back(right - left + d5_left);
      ++ns5_left;
    } else {
      out.d5.push_back(left - right + (total_ns5 - ns5_left));
      ++d5_left;
    }
  }
  std::sort(out.ns5.begin(), out.ns5.end());
  std::sort(out.d5.begin(), out.d5.end());
  return out;
}

std::vector<SpaceDescriptor> diagram_blocks(const BraneDiagram &d) {
  d.validate();
  std::vector<SpaceDescriptor> blocks;
  for (std::size_t p = 0; p < d.branes.size(); ++p) {
    blocks.push_back(d.branes[p] == Brane::ns5 ? ns5_block(d.dims[p], d.dims[p + 1])
                                               : d5_block(d.dims[p], d.dims[p + 1]));
  }
  return blocks;
}

SpaceDescriptor expected_space(const BraneDiagram &d) {
  d.validate();
  if (d.branes.size() == 1) {
    return diagram_blocks(d).front();
  }
  const bool all_ns5 = !d.branes.empty() &&
                       std::all_of(d.branes.begin(), d.branes.end(), [](Brane b) { return b == Brane::ns5; });
  if (all_ns5 && d.dims.front() == 0) {
    OrbitDescriptor orbit = chain_to_orbit(d.dims);
    SpaceDescriptor m = orbit.n > 0 ? orbit_closure_space(orbit.jordan_type) : point_space();
    m.chain = d.dims;
    return m;
  }
  throw Error(Errc::unsupported_diagram, "no expected space for diagram '" + d.to_string() + "'");
}

} // namespace sdualkit
