#include "sdualkit/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>

#include "sdualkit/abelian_coulomb.hpp"
#include "sdualkit/brane.hpp"
#include "sdualkit/error.hpp"
#include "sdualkit/partitions.hpp"
#include "sdualkit/spaces.hpp"

namespace sdualkit {

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult &c) { return !c.pass; }));
}

std::uint64_t seed_from_environment() {
  const char *env = std::getenv("SDUALKIT_SEED");
  if (env == nullptr || *env == '\0') {
    return kDefaultSeed;
  }
  char *end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  return (end != nullptr && *end == '\0') ? v : kDefaultSeed;
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Collects failures; keeps the first few messages.
class Tally {
public:
  void expect(bool ok, const std::function<std::string()> &what) {
    ++cases_;
    if (!ok) {
      ++failures_;
      if (messages_.size() < 3) {
        messages_.push_back(what());
      }
    }
  }
  void merge(const Tally &o) {
    cases_ += o.cases_;
    failures_ += o.failures_;
    for (const auto &m : o.messages_) {
      if (messages_.size() < 3) messages_.push_back(m);
    }
  }
  CheckResult result(std::string name, const std::string &unit = "cases") const {
    CheckResult r{std::move(name), failures_ == 0, {}};
    if (failures_ == 0) {
      r.detail = std::to_string(cases_) + " " + unit;
    } else {
      r.detail = std::to_string(failures_) + "/" + std::to_string(cases_) + " failed";
      for (const auto &m : messages_) {
        r.detail += "; " + m;
      }
    }
    return r;
  }

private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
};

TorusTheory rank1(const std::vector<int> &linear, const std::vector<int> &multiplicative = {}) {
  TorusTheory t;
  t.rank = 1;
  for (int a : linear) t.linear_weights.push_back(LinearForm{{a}});
  for (int b : multiplicative) t.multiplicative_weights.push_back(LinearForm{{b}});
  return t;
}

std::string expect_presentation(Tally &tally, const TorusTheory &t, const std::string &want) {
  std::string got;
  try {
    got = present_rank1(t).relation_text();
  } catch (const Error &e) {
    got = std::string("error: ") + e.what();
  }
  tally.expect(got == want, [&] { return "got '" + got + "', want '" + want + "'"; });
  return got;
}

// ------------------------------------------------------------ known rings

std::vector<CheckResult> check_coulomb_examples(std::uint64_t) {
  std::vector<CheckResult> out;
  {
    Tally t;
    expect_presentation(t, rank1({}), "x*y = 1  [T^*(C^x)]");
    out.push_back(t.result("coulomb-no-flavor"));
  }
  {
    Tally t;
    expect_presentation(t, rank1({1}), "x*y = w  [C^2]");
    out.push_back(t.result("coulomb-one-flavor"));
  }
  {
    Tally t;
    for (int l = 2; l <= 6; ++l) {
      expect_presentation(t, rank1(std::vector<int>(static_cast<std::size_t>(l), 1)),
                          "x*y = w^" + std::to_string(l) + "  [A_" + std::to_string(l - 1) + " singularity]");
    }
    out.push_back(t.result("coulomb-l-flavors"));
  }
  {
    Tally t;
    const char *coefficient[] = {"", "", "4", "27", "256"};
    for (int l = 2; l <= 4; ++l) {
      expect_presentation(t, rank1({l}),
                          std::string("x*y = ") + coefficient[l] + "*w^" + std::to_string(l) + "  [A_" +
                              std::to_string(l - 1) + " singularity]");
    }
    out.push_back(t.result("coulomb-charge-l"));
  }
  {
    Tally t;
    expect_presentation(t, rank1({}, {1}), "point");
    out.push_back(t.result("coulomb-multiplicative-point"));
  }
  return out;
}

// ------------------------------------------------- product axioms, grading

// Cocharacters in the box |lambda|_inf <= radius, indexed mixed-radix.
struct Box {
  int rank;
  int radius;
  std::vector<Cocharacter> points;

  Box(int r, int rad) : rank(r), radius(rad), points(cocharacter_box(r, rad)) {}

  std::size_t index(const Cocharacter &v) const {
    std::size_t idx = 0;
    for (int i = 0; i < rank; ++i) {
      idx = idx * static_cast<std::size_t>(2 * radius + 1) + static_cast<std::size_t>(v[i] + radius);
    }
    return idx;
  }
};

Cocharacter add(const Cocharacter &a, const Cocharacter &b) {
  Cocharacter c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

TorusTheory random_theory(Rng &rng, int rank) {
  TorusTheory t;
  t.rank = rank;
  const int count = uniform(rng, 0, 4);
  for (int j = 0; j < count; ++j) {
    LatticeVector a(static_cast<std::size_t>(rank));
    for (auto &x : a) x = uniform(rng, -3, 3);
    t.linear_weights.push_back(LinearForm{a});
  }
  return t;
}

// Exponent vectors packed into 8-bit lanes; lane-wise sums stay below 256.
std::uint64_t pack(const std::vector<unsigned> &d) {
  std::uint64_t key = 0;
  for (std::size_t j = 0; j < d.size(); ++j) key |= std::uint64_t{d[j]} << (8 * j);
  return key;
}

struct AxiomTally {
  Tally assoc;
  Tally grading;
};

AxiomTally check_theory_axioms(const TorusTheory &t, Rng &rng) {
  AxiomTally out;
  const Box small(t.rank, 2);
  const Box big(t.rank, 4);
  const std::size_t ns = small.points.size();
  const std::size_t nb = big.points.size();

  // c(lambda, mu) exponents for lambda in the small box, mu in the big box,
  // and for lambda in the big box, mu in the small box.
  std::vector<std::uint64_t> small_big(ns * nb);
  std::vector<std::uint64_t> big_small(nb * ns);
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t k = 0; k < nb; ++k) {
      small_big[i * nb + k] = pack(structure_exponents(t, small.points[i], big.points[k]));
      big_small[k * ns + i] = pack(structure_exponents(t, big.points[k], small.points[i]));
    }
  }

  std::unordered_map<std::uint64_t, std::optional<int>> degree_of;
  auto exponents_to_poly = [&](std::uint64_t key) {
    std::vector<std::pair<LinearForm, unsigned>> factors;
    for (std::size_t j = 0; j < t.linear_weights.size(); ++j) {
      factors.emplace_back(t.linear_weights[j], static_cast<unsigned>((key >> (8 * j)) & 0xff));
    }
    return eval_product(static_cast<std::size_t>(t.rank), factors);
  };
  // Equal exponent vectors give equal products; otherwise compare polynomials.
  auto same_product = [&](std::uint64_t a1, std::uint64_t a2, std::uint64_t b1, std::uint64_t b2) {
    if (a1 + a2 == b1 + b2) return true;
    return exponents_to_poly(a1 + a2) == exponents_to_poly(b1 + b2);
  };

  for (std::size_t il = 0; il < ns; ++il) {
    const auto &lambda = small.points[il];
    for (std::size_t im = 0; im < ns; ++im) {
      const auto &mu = small.points[im];
      const auto lm = add(lambda, mu);
      const std::size_t ilm = big.index(lm);
      const std::uint64_t c_lm = small_big[il * nb + big.index(mu)];
      const std::uint64_t c_ml = small_big[im * nb + big.index(lambda)];
      out.assoc.expect(same_product(c_lm, 0, c_ml, 0), [&] { return "commutativity fails"; });

      auto [it, inserted] = degree_of.try_emplace(c_lm);
      if (inserted) it->second = structure_constant(t, lambda, mu).homogeneous_degree();
      const std::int64_t want2 =
          monopole_degree2(t, lambda) + monopole_degree2(t, mu) - monopole_degree2(t, lm);
      out.grading.expect(it->second && 2 * std::int64_t{*it->second} == want2, [&] {
        return "structure constant at " + CoulombElement::basis(lambda).to_string() + " * " +
               CoulombElement::basis(mu).to_string() + " is not of degree " + std::to_string(want2) + "/2";
      });

      for (std::size_t in = 0; in < ns; ++in) {
        const auto &nu = small.points[in];
        const std::uint64_t left2 = big_small[ilm * ns + in];
        const std::uint64_t c_mn = small_big[im * nb + big.index(nu)];
        const std::uint64_t right2 = small_big[il * nb + big.index(add(mu, nu))];
        out.assoc.expect(same_product(c_lm, left2, c_mn, right2), [&] { return "associativity fails"; });
      }
    }
  }

  // Full products of random elements through multiply().
  auto random_element = [&] {
    CoulombElement x(t.rank);
    for (int k = 0; k < 2; ++k) {
      const auto &lambda = small.points[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ns) - 1))];
      Polynomial c = Polynomial::constant(static_cast<std::size_t>(t.rank), uniform(rng, -2, 2));
      c += Polynomial::variable(static_cast<std::size_t>(t.rank),
                                static_cast<std::size_t>(uniform(rng, 0, t.rank - 1)));
      x += CoulombElement::term(lambda, c);
    }
    return x;
  };
  for (int s = 0; s < 4; ++s) {
    const auto x = random_element();
    const auto y = random_element();
    const auto z = random_element();
    out.assoc.expect(multiply(t, multiply(t, x, y), z) == multiply(t, x, multiply(t, y, z)),
                     [&] { return "multiply() not associative on " + x.to_string(); });
    out.assoc.expect(multiply(t, x, y) == multiply(t, y, x),
                     [&] { return "multiply() not commutative on " + x.to_string(); });
  }
  return out;
}

std::vector<CheckResult> check_product_axioms(std::uint64_t seed) {
  constexpr int kTheories = 240;
  Rng rng(seed);
  std::vector<std::pair<TorusTheory, std::uint64_t>> jobs;
  for (int i = 0; i < kTheories; ++i) {
    jobs.emplace_back(random_theory(rng, 1 + i % 3), rng());
  }

  const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::future<AxiomTally>> futures;
  for (unsigned w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w] {
      AxiomTally acc;
      for (std::size_t i = w; i < jobs.size(); i += workers) {
        Rng local(jobs[i].second);
        AxiomTally one = check_theory_axioms(jobs[i].first, local);
        acc.assoc.merge(one.assoc);
        acc.grading.merge(one.grading);
      }
      return acc;
    }));
  }
  AxiomTally total;
  for (auto &f : futures) {
    AxiomTally one = f.get();
    total.assoc.merge(one.assoc);
    total.grading.merge(one.grading);
  }
  return {total.assoc.result("abelian-assoc-comm", "products over " + std::to_string(kTheories) + " theories"),
          total.grading.result("abelian-grading", "structure constants")};
}

// ---------------------------------------------------------------- orbits

BraneDiagram ns5_run(const std::vector<int> &dims) {
  return BraneDiagram(std::vector<Brane>(dims.size() - 1, Brane::ns5), dims);
}

std::vector<CheckResult> check_orbits(std::uint64_t) {
  Tally chain;
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> dims(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) dims[static_cast<std::size_t>(k)] = k;
    const OrbitDescriptor orbit = chain_to_orbit(dims);
    chain.expect(orbit.jordan_type == Partition{n} && orbit.is_nilpotent_cone(),
                 [&] { return "chain 0..n for n=" + std::to_string(n) + " gave " + orbit.jordan_type.to_string(); });
    const SpaceDescriptor composed = compose_all(diagram_blocks(ns5_run(dims)));
    // A single block stays a block; longer runs are recognized as orbit closures.
    const bool kind_ok = n == 1 || composed.kind == SpaceKind::orbit_closure;
    chain.expect(composed.dim == std::int64_t{n} * n - n && kind_ok, [&] {
      return "composed chain for n=" + std::to_string(n) + " is " + composed.to_string();
    });
  }

  Tally profile;
  for (int n = 0; n <= 10; ++n) {
    for (const auto &lambda : partitions_of(n)) {
      const auto oracle = numeric_jordan_oracle(lambda);
      for (const auto &[k, rank] : oracle) {
        profile.expect(rank_profile(lambda, k) == rank, [&] {
          return "rank of x^" + std::to_string(k) + " for " + lambda.to_string();
        });
      }
    }
  }
  return {chain.result("chain-regular-orbit"), profile.result("rank-profile-oracle")};
}

// ----------------------------------------------------------- dual table

std::vector<CheckResult> check_dual_table(std::uint64_t) {
  Tally table;
  for (int n = 1; n <= 7; ++n) {
    for (const auto &lambda : partitions_of(n)) {
      const SpaceDescriptor m = group_times_slice(lambda);
      const SpaceDescriptor d = sdual_pair(m);
      table.expect(d.kind == SpaceKind::orbit_closure && d.partition == transpose(lambda),
                   [&] { return "dual of " + m.body() + " is " + d.body(); });
      const SpaceDescriptor dd = normalized(sdual_pair(d));
      const SpaceDescriptor base = normalized(m);
      table.expect(dd.kind == base.kind && dd.dim == base.dim,
                   [&] { return "double dual of " + m.body() + " is " + dd.body(); });
    }
  }

  Tally order;
  for (int n = 0; n <= 8; ++n) {
    const auto all = partitions_of(n);
    for (const auto &a : all) {
      order.expect(transpose(transpose(a)) == a, [&] { return "transpose twice moves " + a.to_string(); });
      for (const auto &b : all) {
        order.expect(dominates(a, b) == dominates(transpose(b), transpose(a)),
                     [&] { return "dominance of " + a.to_string() + " over " + b.to_string(); });
      }
    }
  }
  return {table.result("dual-slice-orbit"), order.result("partition-transpose-dominance")};
}

// --------------------------------------------------------------- Kostant

std::vector<CheckResult> check_kostant(std::uint64_t) {
  Tally tally;
  auto run = [&](const SpaceDescriptor &m, const GroupDescriptor &g) {
    const KostantCheck k = kostant_reduction_check(m, g);
    tally.expect(k.pass, [&] {
      return m.body() + " under " + g.to_string() + ": " + std::to_string(k.lhs) + " vs " + std::to_string(k.rhs);
    });
  };
  for (int n = 1; n <= 6; ++n) {
    const auto g = GroupDescriptor::gl(n);
    run(point_space(g), g);
    run(cotangent_of_group(g), g);
  }
  for (int r = 1; r <= 4; ++r) {
    const auto g = GroupDescriptor::torus(r);
    run(point_space(g), g);
    run(cotangent_of_group(g), g);
  }

  // Every rank-one theory with at most six weights, charges in [-2, 2].
  std::vector<std::vector<int>> multisets{{}};
  for (int size = 1; size <= 6; ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size), 0);
    while (true) {
      std::vector<int> m;
      for (int i : idx) m.push_back(i - 2);
      multisets.push_back(m);
      int p = size - 1;
      while (p >= 0 && idx[static_cast<std::size_t>(p)] == 4) --p;
      if (p < 0) break;
      const int v = ++idx[static_cast<std::size_t>(p)];
      for (int q = p + 1; q < size; ++q) idx[static_cast<std::size_t>(q)] = v;
    }
  }
  const auto u1 = GroupDescriptor::torus(1);
  for (const auto &lin : multisets) {
    for (const auto &mult : multisets) {
      if (lin.size() + mult.size() > 6 || mult.size() > 2) continue;
      run(cotangent_of_rep(rank1(lin, mult)), u1);
    }
  }
  return {tally.result("kostant-reduction")};
}

// ----------------------------------------------------------------- branes

BraneDiagram random_diagram(Rng &rng, int max_branes, int max_dim) {
  const int count = uniform(rng, 1, max_branes);
  BraneDiagram d;
  d.branes.clear();
  d.dims.clear();
  for (int i = 0; i < count; ++i) d.branes.push_back(uniform(rng, 0, 1) == 0 ? Brane::ns5 : Brane::d5);
  for (int i = 0; i <= count; ++i) d.dims.push_back(uniform(rng, 0, max_dim));
  if (uniform(rng, 0, 1) == 0) {
    d.dims.front() = 0;
    d.dims.back() = 0;
  }
  return d;
}

std::vector<std::size_t> admissible_moves(const BraneDiagram &d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < d.branes.size(); ++i) {
    if (d.branes[i] != d.branes[i + 1] && d.dims[i] + d.dims[i + 2] + 1 - d.dims[i + 1] >= 0) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<CheckResult> check_branes(std::uint64_t seed) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<BraneDiagram> corpus;
  while (corpus.size() < 600) {
    BraneDiagram d = random_diagram(rng, 12, 9);
    if (!admissible_moves(d).empty()) corpus.push_back(std::move(d));
  }

  Tally involution;
  Tally commute;
  for (const auto &d : corpus) {
    const LinkingData base = linking_numbers(d);
    for (std::size_t i : admissible_moves(d)) {
      const BraneDiagram moved = hw_move(d, i);
      involution.expect(hw_move(moved, i) == d,
                        [&] { return "hw " + std::to_string(i) + " twice on " + d.to_string(); });
      involution.expect(linking_numbers(moved) == base,
                        [&] { return "linking changed by hw " + std::to_string(i) + " on " + d.to_string(); });
      commute.expect(sdual(moved) == hw_move(sdual(d), i),
                     [&] { return "sdual/hw " + std::to_string(i) + " on " + d.to_string(); });
    }
    // A random walk keeps the linking numbers.
    BraneDiagram walk = d;
    for (int step = 0; step < 8; ++step) {
      const auto moves = admissible_moves(walk);
      if (moves.empty()) break;
      walk = hw_move(walk, moves[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(moves.size()) - 1))]);
    }
    involution.expect(linking_numbers(walk) == base, [&] { return "linking changed along a walk from " + d.to_string(); });
  }

  Tally concat_tally;
  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    BraneDiagram left = corpus[i];
    BraneDiagram right = corpus[i + 1];
    right.dims.front() = left.dims.back();
    const BraneDiagram joined = concat(left, right);
    concat_tally.expect(sdual(joined) == concat(sdual(left), sdual(right)),
                        [&] { return "sdual of " + joined.to_string(); });
    concat_tally.expect(linking_numbers(joined).ns5.size() == linking_numbers(left).ns5.size() +
                                                                 linking_numbers(right).ns5.size(),
                        [&] { return "brane count of " + joined.to_string(); });
  }

  // Block-by-block: the composition of the dual blocks of an NS5 chain has
  // the dimension of the dual of the orbit closure it realizes.
  Tally shadow;
  for (int length = 2; length <= 5; ++length) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> jumps(static_cast<std::size_t>(length));
      for (auto &j : jumps) j = uniform(rng, 0, 3);
      std::sort(jumps.begin(), jumps.end());
      std::vector<int> dims{0};
      for (int j : jumps) dims.push_back(dims.back() + j);
      if (dims.back() == 0) continue;
      const BraneDiagram d = ns5_run(dims);
      const SpaceDescriptor orbit = expected_space(d);
      const SpaceDescriptor composed = compose_all(diagram_blocks(d));
      const SpaceDescriptor dual_composed = compose_all(diagram_blocks(sdual(d)));
      const SpaceDescriptor dual = sdual_pair(normalized(orbit));
      shadow.expect(composed.dim == orbit.dim && dual_composed.dim == dual.dim, [&] {
        return "chain " + d.to_string() + ": " + dual_composed.to_string() + " vs " + dual.to_string();
      });
    }
  }

  return {involution.result("hw-involution-linking", "checks on " + std::to_string(corpus.size()) + " diagrams"),
          commute.result("sdual-hw-commute"), concat_tally.result("sdual-concat"),
          shadow.result("ns5-chain-dual-dims")};
}

std::vector<CheckResult> check_quivers(std::uint64_t) {
  Tally tally;
  for (int length = 1; length <= 4; ++length) {
    std::vector<int> digits(static_cast<std::size_t>(2 * length), 0);
    while (true) {
      QuiverData q;
      q.v.assign(digits.begin(), digits.begin() + length);
      q.w.assign(digits.begin() + length, digits.end());
      const BraneDiagram direct = quiver_to_dual_diagram(q);
      const BraneDiagram via = sdual(quiver_to_diagram(q));
      tally.expect(via.to_string() == direct.to_string(), [&] { return via.to_string() + " vs " + direct.to_string(); });
      std::size_t p = 0;
      while (p < digits.size() && digits[p] == 4) digits[p++] = 0;
      if (p == digits.size()) break;
      ++digits[p];
    }
  }
  return {tally.result("quiver-dual-pattern", "quivers")};
}

std::vector<CheckResult> check_hyperspherical(std::uint64_t) {
  Tally tally;
  std::ostringstream got;
  got << "T^*(C) under T(1): " << hyperspherical_deficit(cotangent_of_rep(rank1({1})), GroupDescriptor::torus(1));
  got << "\nT^*GL(n) under GL(n):";
  for (int n = 1; n <= 6; ++n) {
    const auto g = GroupDescriptor::gl(n);
    got << ' ' << hyperspherical_deficit(cotangent_of_group(g), g);
  }
  got << "\npt under GL(n):";
  for (int n = 1; n <= 6; ++n) {
    const auto g = GroupDescriptor::gl(n);
    got << ' ' << hyperspherical_deficit(point_space(g), g);
  }
  const std::string want = "T^*(C) under T(1): 0\n"
                           "T^*GL(n) under GL(n): 0 2 6 12 20 30\n"
                           "pt under GL(n): -2 -6 -12 -20 -30 -42";
  tally.expect(got.str() == want, [&] { return "got '" + got.str() + "'"; });
  return {tally.result("hyperspherical-deficit")};
}

std::vector<CheckResult> check_u1_flavors(std::uint64_t) {
  Tally tally;
  for (int l = 1; l <= 6; ++l) {
    const RingPresentation p = present_rank1(rank1(std::vector<int>(static_cast<std::size_t>(l), 1)));
    const bool tag_ok = l == 1 ? p.tag == VarietyTag::affine_plane
                               : p.tag == VarietyTag::type_A_singularity && p.singularity_index == l - 1;
    tally.expect(tag_ok, [&] { return "U(1) with " + std::to_string(l) + " flavors: " + p.relation_text(); });
    const QuiverData q{{1}, {l}};
    tally.expect(sdual(quiver_to_diagram(q)).to_string() == quiver_to_dual_diagram(q).to_string(),
                 [&] { return "diagram for U(1) with " + std::to_string(l) + " flavors"; });
  }
  return {tally.result("u1-flavors-cross")};
}

struct CheckGroup {
  std::vector<std::string> names;
  std::vector<CheckResult> (*run)(std::uint64_t);
};

const std::vector<CheckGroup> &groups() {
  static const std::vector<CheckGroup> all{
      {{"coulomb-no-flavor", "coulomb-one-flavor", "coulomb-l-flavors", "coulomb-charge-l",
        "coulomb-multiplicative-point"},
       check_coulomb_examples},
      {{"abelian-assoc-comm", "abelian-grading"}, check_product_axioms},
      {{"chain-regular-orbit", "rank-profile-oracle"}, check_orbits},
      {{"dual-slice-orbit", "partition-transpose-dominance"}, check_dual_table},
      {{"kostant-reduction"}, check_kostant},
      {{"hw-involution-linking", "sdual-hw-commute", "sdual-concat", "ns5-chain-dual-dims"}, check_branes},
      {{"quiver-dual-pattern"}, check_quivers},
      {{"hyperspherical-deficit"}, check_hyperspherical},
      {{"u1-flavors-cross"}, check_u1_flavors},
  };
  return all;
}

bool matches(std::string_view name, std::string_view filter) {
  return filter.empty() || name.find(filter) != std::string_view::npos;
}

} // namespace

std::vector<std::string> verify_check_names() {
  std::vector<std::string> out;
  for (const auto &g : groups()) out.insert(out.end(), g.names.begin(), g.names.end());
  return out;
}

VerifyReport run_verify(std::string_view filter, std::uint64_t seed, std::ostream &out) {
  std::vector<std::pair<const CheckGroup *, std::future<std::vector<CheckResult>>>> pending;
  for (const auto &g : groups()) {
    if (std::any_of(g.names.begin(), g.names.end(), [&](const std::string &n) { return matches(n, filter); })) {
      pending.emplace_back(&g, std::async(std::launch::async, [&g, seed] {
                             try {
                               return g.run(seed);
                             } catch (const std::exception &e) {
                               std::vector<CheckResult> failed;
                               for (const auto &n : g.names) failed.push_back({n, false, std::string("threw: ") + e.what()});
                               return failed;
                             }
                           }));
    }
  }
  VerifyReport report;
  for (auto &[group, fut] : pending) {
    for (auto &r : fut.get()) {
      if (!matches(r.name, filter)) continue;
      out << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  " << r.detail << "\n";
      report.checks.push_back(std::move(r));
    }
  }
  out << (report.checks.size() - report.failures()) << "/" << report.checks.size() << " checks passed\n";
  return report;
}

} // namespace sdualkit
