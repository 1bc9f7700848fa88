// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only if all pass.
// Every check compares library output against values computed here.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sdualkit/abelian_coulomb.hpp"
#include "sdualkit/brane.hpp"
#include "sdualkit/cli.hpp"
#include "sdualkit/error.hpp"
#include "sdualkit/partitions.hpp"
#include "sdualkit/spaces.hpp"

using namespace sdualkit;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;
  long checks = 0;

  void expect(bool ok, const std::string &what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string slurp(const std::string &path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string golden_path(const std::string &name) { return std::string(SDUALKIT_GOLDEN_DIR) + "/" + name; }

TorusTheory theory(int rank, std::vector<LatticeVector> linear, std::vector<LatticeVector> mult = {}) {
  TorusTheory t;
  t.rank = rank;
  for (auto &a : linear) t.linear_weights.emplace_back(a);
  for (auto &b : mult) t.multiplicative_weights.emplace_back(b);
  return t;
}

std::string text(const std::vector<int> &xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + ")";
}

// ---- criterion 1 ----

Outcome coulomb_examples() {
  Outcome o;
  for (const char *name : {"no_flavor", "one_flavor", "flavors_2", "flavors_3", "flavors_4", "flavors_5", "flavors_6",
                           "charge_2", "charge_3", "charge_4", "mult_point"}) {
    const std::string base = golden_path(std::string("coulomb_") + name);
    std::istringstream in;
    std::ostringstream out, err;
    const int code = run_cli({"coulomb", base + ".json"}, in, out, err);
    o.expect(code == 0, std::string(name) + ": exit " + std::to_string(code));
    o.expect(out.str() == slurp(base + ".out"), std::string(name) + ": got '" + out.str() + "'");
  }
  // r'_1 r'_{-1} in rank 1 is prod_j (a_j w)^{|a_j|}; check the coefficient directly.
  for (int l = 1; l <= 4; ++l) {
    const auto t = theory(1, {{l}});
    const Polynomial c = structure_constant(t, {1}, {-1});
    Integer expected = 1;
    for (int i = 0; i < l; ++i) expected *= l;
    o.expect(c.term_count() == 1 && c.coefficient({l}) == expected, "charge " + std::to_string(l) + " coefficient");
  }
  return o;
}

// ---- criteria 2 and 3 ----

// Exponent of weight value pairs under the product r'_x r'_y.
inline int d(int x, int y) { return std::max(x, 0) + std::max(y, 0) - std::max(x + y, 0); }

Integer eval(const Polynomial &p, const std::vector<Integer> &w) {
  Integer total = 0;
  for (const auto &[e, c] : p.terms()) {
    Integer term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= w[i];
    }
    total += term;
  }
  return total;
}

// prod_j (a_j . w)^{d_j} at an integer point.
Integer oracle_constant(const TorusTheory &t, const Cocharacter &l, const Cocharacter &m, const std::vector<Integer> &w) {
  Integer r = 1;
  for (const auto &a : t.linear_weights) {
    std::int64_t pl = 0, pm = 0;
    Integer aw = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
      pl += a.coeffs[i] * l[i];
      pm += a.coeffs[i] * m[i];
      aw += Integer(a.coeffs[i]) * w[i];
    }
    for (int k = d(static_cast<int>(pl), static_cast<int>(pm)); k > 0; --k) r *= aw;
  }
  return r;
}

std::vector<Cocharacter> box(int rank, int radius) {
  std::vector<Cocharacter> pts{{}};
  for (int i = 0; i < rank; ++i) {
    std::vector<Cocharacter> next;
    for (const auto &p : pts) {
      for (int x = -radius; x <= radius; ++x) {
        auto q = p;
        q.push_back(x);
        next.push_back(q);
      }
    }
    pts = next;
  }
  return pts;
}

std::vector<TorusTheory> random_theories(std::size_t count) {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> rank(1, 3), nweights(0, 4), entry(-3, 3);
  std::vector<TorusTheory> out;
  while (out.size() < count) {
    const int r = rank(rng);
    std::vector<LatticeVector> ws;
    for (int j = nweights(rng); j > 0; --j) {
      LatticeVector a(static_cast<std::size_t>(r));
      for (auto &x : a) x = entry(rng);
      ws.push_back(a);
    }
    out.push_back(theory(r, ws));
  }
  return out;
}

Outcome check_theory(const TorusTheory &t, std::uint64_t salt, bool grading) {
  Outcome o;
  const auto pts = box(t.rank, 2);
  const std::size_t np = pts.size(), nw = t.linear_weights.size();
  // pairing[j][p] = <a_j, pts[p]>
  std::vector<std::vector<int>> pairing(nw, std::vector<int>(np));
  for (std::size_t j = 0; j < nw; ++j) {
    for (std::size_t p = 0; p < np; ++p) pairing[j][p] = static_cast<int>(t.linear_weights[j].pair(pts[p]));
  }
  if (!grading) {
    // Associativity and commutativity on exponent vectors, all triples.
    for (std::size_t a = 0; a < np && o.pass; ++a) {
      for (std::size_t b = 0; b < np; ++b) {
        for (std::size_t c = 0; c < np; ++c) {
          for (std::size_t j = 0; j < nw; ++j) {
            const int x = pairing[j][a], y = pairing[j][b], z = pairing[j][c];
            if (d(x, y) + d(x + y, z) != d(y, z) + d(x, y + z)) {
              o.expect(false, "exponent associativity");
            }
          }
          ++o.checks;
        }
      }
    }
  } else {
    // Grading: sum_j d_j equals deg(l) + deg(m) - deg(l+m) with 2 deg = sum_j |<a_j, .>|.
    for (std::size_t a = 0; a < np; ++a) {
      for (std::size_t b = 0; b < np; ++b) {
        int total = 0, dl = 0, dm = 0, ds = 0;
        for (std::size_t j = 0; j < nw; ++j) {
          const int x = pairing[j][a], y = pairing[j][b];
          total += d(x, y);
          dl += std::abs(x);
          dm += std::abs(y);
          ds += std::abs(x + y);
        }
        o.expect(2 * total == dl + dm - ds, "grading identity");
      }
    }
  }

  // The library against the oracle at random integer points, and its own
  // multiply on random triples of elements.
  std::mt19937_64 rng(kSeed ^ salt);
  std::uniform_int_distribution<std::size_t> pick(0, np - 1);
  std::uniform_int_distribution<int> val(-5, 5);
  for (int s = 0; s < 60; ++s) {
    const auto &l = pts[pick(rng)];
    const auto &m = pts[pick(rng)];
    const Polynomial c = structure_constant(t, l, m);
    const Polynomial c2 = structure_constant(t, m, l);
    std::vector<Integer> w(static_cast<std::size_t>(t.rank));
    for (auto &x : w) x = val(rng);
    o.expect(eval(c, w) == oracle_constant(t, l, m, w), "structure constant vs oracle " + text(std::vector<int>(l.begin(), l.end())));
    o.expect(c == c2, "commutativity");
    if (grading) {
      const auto h = c.homogeneous_degree();
      Cocharacter sum = l;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += m[i];
      const auto expected2 = monopole_degree2(t, l) + monopole_degree2(t, m) - monopole_degree2(t, sum);
      o.expect(h && 2 * *h == expected2, "library structure constant degree");
      std::int64_t oracle2 = 0;
      for (const auto &a : t.linear_weights) oracle2 += std::abs(a.pair(l));
      o.expect(monopole_degree2(t, l) == oracle2, "monopole degree");
    }
  }
  for (int s = 0; s < 3 && !grading; ++s) {
    auto element = [&] {
      CoulombElement e = CoulombElement::basis(pts[pick(rng)]);
      e += CoulombElement::term(pts[pick(rng)], Polynomial::constant(static_cast<std::size_t>(t.rank), val(rng)));
      return e;
    };
    const auto x = element(), y = element(), z = element();
    o.expect(multiply(t, multiply(t, x, y), z) == multiply(t, x, multiply(t, y, z)), "multiply associativity");
    o.expect(multiply(t, x, y) == multiply(t, y, x), "multiply commutativity");
  }
  return o;
}

Outcome over_theories(bool grading) {
  const auto theories = random_theories(240);
  std::vector<std::future<Outcome>> jobs;
  for (std::size_t i = 0; i < theories.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] { return check_theory(theories[i], i, grading); }));
  }
  Outcome all;
  for (auto &j : jobs) {
    const Outcome o = j.get();
    all.checks += o.checks;
    if (!o.pass && all.pass) {
      all.pass = false;
      all.detail = o.detail;
    }
  }
  return all;
}

// ---- criterion 4 ----

std::int64_t diagram_rank(const Partition &p, int k) {
  std::int64_t r = 0;
  for (int part : p.parts()) r += std::max(part - k, 0);
  return r;
}

Outcome regular_orbits() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> dims;
    for (int k = 0; k <= n; ++k) dims.push_back(k);
    o.expect(chain_to_orbit(dims).jordan_type == Partition{n}, "chain_to_orbit " + text(dims));
    const auto composed = compose_all(diagram_blocks(BraneDiagram(std::vector<Brane>(n, Brane::ns5), dims)));
    // 2 sum_i i (i+1) over i < n minus 2 sum_i i^2 over 0 < i < n.
    std::int64_t expected = 0;
    for (std::int64_t i = 0; i < n; ++i) expected += 2 * i * (i + 1);
    for (std::int64_t i = 1; i < n; ++i) expected -= 2 * i * i;
    o.expect(expected == std::int64_t{n} * n - n, "closed form n^2 - n");
    o.expect(composed.dim == expected, "composed dimension n=" + std::to_string(n));
  }
  for (int n = 0; n <= 10; ++n) {
    for (const auto &p : partitions_of(n)) {
      const auto numeric = numeric_jordan_oracle(p);
      for (int k = 0; k <= n; ++k) {
        o.expect(rank_profile(p, k) == numeric.at(k), "rank profile " + p.to_string());
        o.expect(diagram_rank(p, k) == numeric.at(k), "diagram rank " + p.to_string());
      }
    }
  }
  return o;
}

// ---- criterion 5 ----

std::vector<int> conjugate(const std::vector<int> &parts) {
  std::vector<int> t;
  for (int c = 1; !parts.empty() && c <= parts.front(); ++c) {
    int len = 0;
    for (int p : parts) len += p >= c ? 1 : 0;
    t.push_back(len);
  }
  return t;
}

bool dominates_oracle(const std::vector<int> &a, const std::vector<int> &b) {
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

Outcome duality_table() {
  Outcome o;
  for (int n = 1; n <= 7; ++n) {
    for (const auto &lambda : partitions_of(n)) {
      const Partition lt(conjugate(lambda.parts()));
      const auto m = group_times_slice(lambda);
      const auto dual = sdual_pair(m);
      o.expect(dual == orbit_closure_space(lt), "dual of GL x Slice" + lambda.to_string());
      const auto back = normalized(sdual_pair(dual));
      o.expect(back.kind == normalized(m).kind && back.dim == m.dim, "double dual " + lambda.to_string());
    }
  }
  for (int n = 0; n <= 8; ++n) {
    const auto all = partitions_of(n);
    for (const auto &a : all) {
      o.expect(transpose(a).parts() == conjugate(a.parts()), "transpose " + a.to_string());
      o.expect(transpose(transpose(a)) == a, "transpose involution");
      for (const auto &b : all) {
        o.expect(dominates(a, b) == dominates_oracle(a.parts(), b.parts()), "dominance");
        o.expect(dominates(a, b) == dominates(transpose(b), transpose(a)), "dominance reversal");
      }
    }
  }
  return o;
}

// ---- criterion 6 ----

Outcome kostant() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const auto g = GroupDescriptor::gl(n);
    const auto pt = kostant_reduction_check(point_space(g), g);
    o.expect(pt.pass && pt.lhs == 2 * n, "pt under GL(" + std::to_string(n) + ")");
    const auto tg = kostant_reduction_check(cotangent_of_group(g), g);
    o.expect(tg.pass && tg.lhs == 0, "T^*GL(" + std::to_string(n) + ")");
  }
  for (int r = 1; r <= 4; ++r) {
    const auto g = GroupDescriptor::torus(r);
    o.expect(kostant_reduction_check(point_space(g), g).pass, "pt under T(" + std::to_string(r) + ")");
    o.expect(kostant_reduction_check(cotangent_of_group(g), g).pass, "T^*T(" + std::to_string(r) + ")");
  }
  // All rank-1 theories: multisets of charges in [-2,2], at most 6 weights of
  // which at most 2 multiplicative. dim M_C is 2 unless some multiplicative
  // charge is nonzero.
  const auto u = GroupDescriptor::torus(1);
  int seen = 0;
  auto run = [&](const std::vector<int> &lin, const std::vector<int> &mul) {
    std::vector<LatticeVector> a, b;
    for (int c : lin) a.push_back({c});
    for (int c : mul) b.push_back({c});
    const auto check = kostant_reduction_check(cotangent_of_rep(theory(1, a, b)), u);
    const bool killed = std::any_of(mul.begin(), mul.end(), [](int c) { return c != 0; });
    o.expect(check.pass && check.lhs == (killed ? 0 : 2), "rank-1 theory " + text(lin) + " mult " + text(mul));
    ++seen;
  };
  std::vector<std::vector<int>> multisets[7];
  multisets[0] = {{}};
  for (int k = 1; k <= 6; ++k) {
    for (const auto &s : multisets[k - 1]) {
      for (int c = s.empty() ? -2 : s.back(); c <= 2; ++c) {
        auto t = s;
        t.push_back(c);
        multisets[k].push_back(t);
      }
    }
  }
  for (int m = 0; m <= 2; ++m) {
    for (int l = 0; l + m <= 6; ++l) {
      for (const auto &mul : multisets[m]) {
        for (const auto &lin : multisets[l]) run(lin, mul);
      }
    }
  }
  o.expect(seen > 1000, "enumeration size");
  return o;
}

// ---- criterion 7 ----

struct Diagram {
  std::vector<char> branes;
  std::vector<int> dims;
};

Diagram random_diagram(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> count(1, 12), dim(0, 9), coin(0, 1);
  Diagram d;
  d.dims = {dim(rng)};
  for (int i = count(rng); i > 0; --i) {
    d.branes.push_back(coin(rng) ? 'o' : 'x');
    d.dims.push_back(dim(rng));
  }
  return d;
}

std::string render(const Diagram &d) {
  std::string s = std::to_string(d.dims[0]);
  for (std::size_t i = 0; i < d.branes.size(); ++i) {
    s += ' ';
    s += d.branes[i];
    s += ' ' + std::to_string(d.dims[i + 1]);
  }
  return s;
}

std::optional<Diagram> hw_oracle(Diagram d, std::size_t i) {
  if (i + 1 >= d.branes.size() || d.branes[i] == d.branes[i + 1]) return std::nullopt;
  const int mid = d.dims[i] + d.dims[i + 2] + 1 - d.dims[i + 1];
  if (mid < 0) return std::nullopt;
  std::swap(d.branes[i], d.branes[i + 1]);
  d.dims[i + 1] = mid;
  return d;
}

Diagram swap_oracle(Diagram d) {
  for (auto &b : d.branes) b = b == 'o' ? 'x' : 'o';
  return d;
}

std::pair<std::vector<int>, std::vector<int>> linking_oracle(const Diagram &d) {
  std::vector<int> ns5, d5;
  for (std::size_t p = 0; p < d.branes.size(); ++p) {
    int left = 0, right = 0;
    for (std::size_t q = 0; q < p; ++q) left += d.branes[q] != d.branes[p] ? 1 : 0;
    for (std::size_t q = p + 1; q < d.branes.size(); ++q) right += d.branes[q] != d.branes[p] ? 1 : 0;
    if (d.branes[p] == 'o') {
      ns5.push_back(d.dims[p + 1] - d.dims[p] + left);
    } else {
      d5.push_back(d.dims[p] - d.dims[p + 1] + right);
    }
  }
  std::sort(ns5.begin(), ns5.end());
  std::sort(d5.begin(), d5.end());
  return {ns5, d5};
}

Outcome brane_calculus() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  int admissible = 0;
  for (int i = 0; i < 600; ++i) {
    const Diagram raw = random_diagram(rng);
    const auto d = BraneDiagram::parse(render(raw));
    const auto l = linking_numbers(d);
    o.expect(std::make_pair(l.ns5, l.d5) == linking_oracle(raw), "linking " + render(raw));
    o.expect(sdual(d).to_string() == render(swap_oracle(raw)), "sdual " + render(raw));
    for (std::size_t p = 0; p + 1 < raw.branes.size(); ++p) {
      const auto expected = hw_oracle(raw, p);
      if (!expected) {
        bool threw = false;
        try {
          hw_move(d, p);
        } catch (const Error &) {
          threw = true;
        }
        o.expect(threw, "inadmissible move accepted on " + render(raw));
        continue;
      }
      ++admissible;
      const auto moved = hw_move(d, p);
      o.expect(moved.to_string() == render(*expected), "hw " + std::to_string(p) + " on " + render(raw));
      o.expect(hw_move(moved, p) == d, "hw involution on " + render(raw));
      const auto lm = linking_numbers(moved);
      o.expect(std::make_pair(lm.ns5, lm.d5) == linking_oracle(raw), "linking invariance on " + render(raw));
      o.expect(sdual(moved) == hw_move(sdual(d), p), "sdual/hw commute on " + render(raw));
    }
    Diagram tail = random_diagram(rng);
    tail.dims.front() = raw.dims.back();
    Diagram joined = raw;
    joined.branes.insert(joined.branes.end(), tail.branes.begin(), tail.branes.end());
    joined.dims.insert(joined.dims.end(), tail.dims.begin() + 1, tail.dims.end());
    const auto b = BraneDiagram::parse(render(tail));
    o.expect(concat(d, b).to_string() == render(joined), "concat");
    o.expect(sdual(concat(d, b)) == concat(sdual(d), sdual(b)), "sdual over concat");
  }
  o.expect(admissible >= 500, "only " + std::to_string(admissible) + " admissible moves");
  return o;
}

// ---- criterion 8 ----

// One NS5 per gauge node boundary; w_i D5s sit in segment i.
std::string pattern(const std::vector<int> &v, const std::vector<int> &w, char gauge, char flavor) {
  std::string s = "0 ";
  s += gauge;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += ' ' + std::to_string(v[i]);
    for (int k = 0; k < w[i]; ++k) {
      s += ' ';
      s += flavor;
      s += ' ' + std::to_string(v[i]);
    }
    s += ' ';
    s += gauge;
  }
  return s + " 0";
}

Outcome quiver_patterns() {
  Outcome o;
  for (int l = 1; l <= 4; ++l) {
    std::vector<int> digits(static_cast<std::size_t>(2 * l), 0);
    while (true) {
      const std::vector<int> v(digits.begin(), digits.begin() + l), w(digits.begin() + l, digits.end());
      const QuiverData q{v, w};
      const auto d = quiver_to_diagram(q);
      const auto dual = quiver_to_dual_diagram(q);
      o.expect(d.to_string() == pattern(v, w, 'o', 'x'), "pattern " + text(v) + text(w));
      o.expect(dual.to_string() == pattern(v, w, 'x', 'o'), "dual pattern " + text(v) + text(w));
      o.expect(sdual(d) == dual, "sdual of quiver " + text(v) + text(w));
      std::size_t p = 0;
      while (p < digits.size() && digits[p] == 4) digits[p++] = 0;
      if (p == digits.size()) break;
      ++digits[p];
    }
  }
  return o;
}

// ---- criterion 9 ----

Outcome hyperspherical() {
  Outcome o;
  auto formula = [](std::int64_t dim_m, std::int64_t dim_g, std::int64_t rank_g) { return dim_m + (dim_g - rank_g) - 2 * dim_g; };
  std::ostringstream got;
  const auto t1 = GroupDescriptor::torus(1);
  const auto c = hyperspherical_deficit(cotangent_of_rep(theory(1, {{1}})), t1);
  o.expect(c == formula(2, 1, 1), "T^*C");
  got << "T^*(C) under T(1): " << c << "\nT^*GL(n) under GL(n):";
  for (int n = 1; n <= 6; ++n) {
    const auto g = GroupDescriptor::gl(n);
    const auto v = hyperspherical_deficit(cotangent_of_group(g), g);
    o.expect(v == std::int64_t{n} * n - n && v == formula(2 * n * n, n * n, n), "T^*GL");
    got << ' ' << v;
  }
  got << "\npt under GL(n):";
  for (int n = 1; n <= 6; ++n) {
    const auto g = GroupDescriptor::gl(n);
    const auto v = hyperspherical_deficit(point_space(g), g);
    o.expect(v == -(std::int64_t{n} * n + n) && v == formula(0, n * n, n), "pt");
    got << ' ' << v;
  }
  got << "\n";
  o.expect(got.str() == slurp(golden_path("hyperspherical.txt")), "golden mismatch:\n" + got.str());
  return o;
}

// ---- criterion 10 ----

Outcome verify_binary(const std::string &binary) {
  Outcome o;
  if (binary.empty()) {
    o.expect(false, "no sdualkit binary given");
    return o;
  }
  const auto start = Clock::now();
  FILE *pipe = popen((binary + " verify 2>&1").c_str(), "r");
  if (pipe == nullptr) {
    o.expect(false, "could not start " + binary);
    return o;
  }
  std::string output;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) output += buf.data();
  const int status = pclose(pipe);
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  o.expect(status == 0, "verify exited with status " + std::to_string(status) + "\n" + output);
  o.expect(output.find("FAIL") == std::string::npos, "verify reported failures\n" + output);
  o.expect(seconds < 120.0, "verify took " + std::to_string(seconds) + " s");
  o.detail = o.pass ? std::to_string(seconds).substr(0, 5) + " s" : o.detail;
  return o;
}

} // namespace

int main(int argc, char **argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char *name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "rank-1 Coulomb branch golden cases", 1.0, coulomb_examples},
      {2, "abelian product associative and commutative", 30.0, [] { return over_theories(false); }},
      {3, "structure constants homogeneous of the monopole degree", 30.0, [] { return over_theories(true); }},
      {4, "regular chains and rank profiles", 10.0, regular_orbits},
      {5, "duality table and transpose", 10.0, duality_table},
      {6, "Kostant reduction dimensions", 10.0, kostant},
      {7, "brane calculus invariants", 10.0, brane_calculus},
      {8, "quiver diagram patterns", 30.0, quiver_patterns},
      {9, "hyperspherical deficits", 1.0, hyperspherical},
      {10, "verify end to end", 120.0, [&] { return verify_binary(binary); }},
  };
  int failures = 0;
  for (const auto &c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.pass && seconds > c.budget_seconds) {
      o.pass = false;
      o.detail = "took " + std::to_string(seconds) + " s";
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.name << "  (" << o.checks
              << " checks, " << static_cast<int>(seconds * 1000) << " ms)";
    if (!o.pass || !o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << std::endl;
    failures += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
