#include "sdualkit/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "sdualkit/error.hpp"
#include "sdualkit/exactalg.hpp"

namespace sdualkit {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) {
      throw Error(Errc::invalid_argument, "negative part in partition");
    }
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  n_ = std::accumulate(parts.begin(), parts.end(), 0);
  parts_ = std::move(parts);
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') {
      throw Error(Errc::parse_error, "unterminated partition: " + std::string(text));
    }
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value <= 0) {
      throw Error(Errc::parse_error, "bad partition part '" + std::string(item) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    text = text.substr(comma + 1);
    if (trim(text).empty()) {
      throw Error(Errc::parse_error, "trailing comma in partition");
    }
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) {
    throw Error(Errc::invalid_argument, "partitions of a negative integer");
  }
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool dominates(const Partition &a, const Partition &b) {
  if (a.n() != b.n()) {
    throw Error(Errc::invalid_argument, "dominance between partitions of different integers");
  }
  int sa = 0;
  int sb = 0;
  for (std::size_t i = 0; i < std::max(a.length(), b.length()); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) {
      return false;
    }
  }
  return true;
}

Partition transpose(const Partition &lambda) {
  std::vector<int> t(lambda.empty() ? 0 : static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda.parts()) {
    for (int k = 0; k < part; ++k) {
      ++t[static_cast<std::size_t>(k)];
    }
  }
  return Partition(std::move(t));
}

std::int64_t centralizer_dim(const Partition &lambda) {
  const Partition columns = transpose(lambda);
  std::int64_t sum = 0;
  for (int c : columns.parts()) {
    sum += std::int64_t{c} * c;
  }
  return sum;
}

std::int64_t orbit_dim(const Partition &lambda) {
  return std::int64_t{lambda.n()} * lambda.n() - centralizer_dim(lambda);
}

std::int64_t rank_profile(const Partition &lambda, int k) {
  if (k < 0) {
    throw Error(Errc::invalid_argument, "negative power in rank_profile");
  }
  std::int64_t r = 0;
  for (int part : lambda.parts()) {
    r += std::max(part - k, 0);
  }
  return r;
}

Partition hook(int a, int b) {
  if (a < 1 || b < 0) {
    throw Error(Errc::invalid_argument, "hook(a, b) needs a >= 1 and b >= 0");
  }
  std::vector<int> parts{a};
  parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
  return Partition(std::move(parts));
}

std::map<int, std::int64_t> numeric_jordan_oracle(const Partition &lambda) {
  const int n = lambda.n();
  if (n > 64) {
    throw Error(Errc::invalid_argument, "numeric Jordan oracle limited to n <= 64");
  }
  const auto size = static_cast<std::size_t>(n);
  IntegerMatrix jordan(size, size);
  std::size_t offset = 0;
  for (int part : lambda.parts()) {
    for (int i = 0; i + 1 < part; ++i) {
      jordan(offset + static_cast<std::size_t>(i), offset + static_cast<std::size_t>(i) + 1) = 1;
    }
    offset += static_cast<std::size_t>(part);
  }

  std::map<int, std::int64_t> ranks;
  IntegerMatrix power = IntegerMatrix::identity(size);
  bool vanished = false;
  for (int k = 0; k <= n; ++k) {
    if (vanished) {
      ranks[k] = 0;
      continue;
    }
    auto r = static_cast<std::int64_t>(matrix_rank(power));
    ranks[k] = r;
    vanished = (r == 0);
    IntegerMatrix next(size, size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t l = 0; l < size; ++l) {
        if (power(i, l) == 0) continue;
        for (std::size_t j = 0; j < size; ++j) {
          if (jordan(l, j) != 0) {
            next(i, j) += power(i, l) * jordan(l, j);
          }
        }
      }
    }
    power = std::move(next);
  }
  return ranks;
}

std::string_view to_string(OrbitKind kind) {
  switch (kind) {
  case OrbitKind::orbit_closure: return "orbit_closure";
  case OrbitKind::slice: return "slice";
  case OrbitKind::group_times_slice: return "group_times_slice";
  case OrbitKind::nilpotent_cone: return "nilpotent_cone";
  }
  return "unknown";
}

OrbitDescriptor OrbitDescriptor::closure(const Partition &lambda) {
  OrbitDescriptor d{lambda.n(), lambda, OrbitKind::orbit_closure};
  if (d.is_nilpotent_cone()) {
    d.kind = OrbitKind::nilpotent_cone;
  }
  return d;
}

bool OrbitDescriptor::is_nilpotent_cone() const {
  return (kind == OrbitKind::orbit_closure || kind == OrbitKind::nilpotent_cone) && n > 0 &&
         jordan_type == Partition{n};
}

std::int64_t OrbitDescriptor::dim() const {
  switch (kind) {
  case OrbitKind::orbit_closure:
  case OrbitKind::nilpotent_cone:
    return orbit_dim(jordan_type);
  case OrbitKind::slice:
    return centralizer_dim(jordan_type);
  case OrbitKind::group_times_slice:
    return std::int64_t{n} * n + centralizer_dim(jordan_type);
  }
  return 0;
}

bool chain_is_convex(const std::vector<int> &dims) {
  int previous_jump = 0;
  for (std::size_t k = 1; k < dims.size(); ++k) {
    int jump = dims[k] - dims[k - 1];
    if (jump < previous_jump) {
      return false;
    }
    previous_jump = jump;
  }
  return true;
}

OrbitDescriptor chain_to_orbit(const std::vector<int> &dims) {
  if (dims.empty() || dims.front() != 0) {
    throw Error(Errc::inconsistent_chain, "chain must start at dimension 0");
  }
  if (std::any_of(dims.begin(), dims.end(), [](int v) { return v < 0; })) {
    throw Error(Errc::inconsistent_chain, "negative dimension in chain");
  }
  const int steps = static_cast<int>(dims.size()) - 1;
  const int target = dims.back();

  if (chain_is_convex(dims)) {
    std::vector<int> jumps;
    for (std::size_t k = 1; k < dims.size(); ++k) {
      jumps.push_back(dims[k] - dims[k - 1]);
    }
    return OrbitDescriptor::closure(transpose(Partition(std::move(jumps))));
  }

  if (target > kChainBruteForceLimit) {
    throw Error(Errc::invalid_argument, "non-convex chain beyond brute-force scale (v_n = " +
                                            std::to_string(target) + ")");
  }
  auto feasible = [&](const Partition &mu) {
    for (int k = 1; k <= steps; ++k) {
      if (rank_profile(mu, k) > dims[static_cast<std::size_t>(steps - k)]) {
        return false;
      }
    }
    return true;
  };
  std::vector<Partition> candidates;
  for (auto &mu : partitions_of(target)) {
    if (feasible(mu)) {
      candidates.push_back(std::move(mu));
    }
  }
  if (candidates.empty()) {
    throw Error(Errc::inconsistent_chain, "no Jordan type satisfies the chain's rank bounds");
  }
  // A dominance maximum, if it exists, is also the lexicographic maximum.
  const Partition &best = *std::max_element(candidates.begin(), candidates.end());
  for (const auto &mu : candidates) {
    if (!dominates(best, mu)) {
      throw Error(Errc::inconsistent_chain, "feasible Jordan types have no dominance maximum");
    }
  }
  return OrbitDescriptor::closure(best);
}

} // namespace sdualkit
