#include "sdualkit/serialize.hpp"

#include "sdualkit/error.hpp"

namespace sdualkit {

namespace {

[[noreturn]] void fail(const std::string &what) { throw Error(Errc::parse_error, what); }

const Json &require(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T> T as(const Json &j, const char *what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception &) {
    fail(std::string("field '") + what + "' has the wrong type");
  }
}

std::vector<LinearForm> weights_from_json(const Json &j, const char *what) {
  if (!j.is_array()) {
    fail(std::string("field '") + what + "' must be an array of weight vectors");
  }
  std::vector<LinearForm> out;
  for (const auto &w : j) {
    out.emplace_back(as<LatticeVector>(w, what));
  }
  return out;
}

Json weights_to_json(const std::vector<LinearForm> &ws) {
  Json arr = Json::array();
  for (const auto &w : ws) {
    arr.push_back(w.coeffs);
  }
  return arr;
}

} // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

// ----------------------------------------------------------------- theories

Json to_json(const TorusTheory &t) {
  Json j;
  j["rank"] = t.rank;
  j["linear_weights"] = weights_to_json(t.linear_weights);
  j["multiplicative_weights"] = weights_to_json(t.multiplicative_weights);
  return j;
}

TorusTheory theory_from_json(const Json &j) {
  TorusTheory t;
  t.rank = as<int>(require(j, "rank"), "rank");
  if (t.rank < 0) {
    fail("rank must be nonnegative");
  }
  if (j.contains("linear_weights")) {
    t.linear_weights = weights_from_json(j.at("linear_weights"), "linear_weights");
  }
  if (j.contains("multiplicative_weights")) {
    t.multiplicative_weights = weights_from_json(j.at("multiplicative_weights"), "multiplicative_weights");
  }
  for (const auto &[key, value] : j.items()) {
    if (key != "rank" && key != "linear_weights" && key != "multiplicative_weights") {
      fail("unknown field '" + key + "' in torus theory");
    }
  }
  try {
    t.validate();
  } catch (const Error &e) {
    fail(e.what());
  }
  return t;
}

// ----------------------------------------------------------------- diagrams

Json to_json(const BraneDiagram &d) {
  Json branes = Json::array();
  for (Brane b : d.branes) {
    branes.push_back(std::string(1, static_cast<char>(b)));
  }
  Json j;
  j["branes"] = branes;
  j["dims"] = d.dims;
  return j;
}

BraneDiagram diagram_from_json(const Json &j) {
  BraneDiagram d;
  d.branes.clear();
  for (const auto &b : require(j, "branes")) {
    auto s = as<std::string>(b, "branes");
    if (s == "o") {
      d.branes.push_back(Brane::ns5);
    } else if (s == "x") {
      d.branes.push_back(Brane::d5);
    } else {
      fail("brane symbol must be \"o\" or \"x\", got \"" + s + "\"");
    }
  }
  d.dims = as<std::vector<int>>(require(j, "dims"), "dims");
  try {
    d.validate();
  } catch (const Error &e) {
    fail(e.what());
  }
  return d;
}

BraneDiagram parse_diagram(std::string_view text) {
  auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text[start] == '{') {
    return diagram_from_json(parse_json(text));
  }
  return BraneDiagram::parse(text);
}

// ------------------------------------------------------------------- groups

Json to_json(const GroupDescriptor &g) {
  Json j;
  j["kind"] = std::string(to_string(g.kind()));
  switch (g.kind()) {
  case GroupKind::trivial:
    break;
  case GroupKind::torus:
    j["rank"] = g.size();
    break;
  case GroupKind::gl:
    j["n"] = g.size();
    break;
  case GroupKind::product: {
    Json factors = Json::array();
    for (const auto &f : g.factors()) {
      factors.push_back(to_json(f));
    }
    j["factors"] = factors;
    break;
  }
  }
  return j;
}

GroupDescriptor group_from_json(const Json &j) {
  auto kind = as<std::string>(require(j, "kind"), "kind");
  if (kind == "trivial") {
    return GroupDescriptor::trivial();
  }
  if (kind == "torus") {
    return GroupDescriptor::torus(as<int>(require(j, "rank"), "rank"));
  }
  if (kind == "gl") {
    return GroupDescriptor::gl(as<int>(require(j, "n"), "n"));
  }
  if (kind == "product") {
    std::vector<GroupDescriptor> factors;
    for (const auto &f : require(j, "factors")) {
      factors.push_back(group_from_json(f));
    }
    return GroupDescriptor::product(std::move(factors));
  }
  fail("unknown group kind '" + kind + "'");
}

// ------------------------------------------------------------------- spaces

Json to_json(const SpaceDescriptor &m) {
  Json j;
  j["kind"] = std::string(to_string(m.kind));
  j["dim"] = m.dim;
  j["left_group"] = to_json(m.left_group);
  j["right_group"] = to_json(m.right_group);
  if (m.n != 0) j["n"] = m.n;
  if (m.partition) j["partition"] = m.partition->parts();
  if (m.theory) j["theory"] = to_json(*m.theory);
  if (!m.chain.empty()) j["chain"] = m.chain;
  if (!m.factors.empty()) {
    Json factors = Json::array();
    for (const auto &f : m.factors) {
      factors.push_back(to_json(f));
    }
    j["factors"] = factors;
  }
  if (m.conjectural) j["conjectural"] = true;
  if (m.possibly_singular) j["possibly_singular"] = true;
  if (m.twisted) j["twisted"] = true;
  j["text"] = m.to_string();
  return j;
}

SpaceDescriptor space_from_json(const Json &j) {
  auto kind_name = as<std::string>(require(j, "kind"), "kind");
  auto kind = space_kind_from_string(kind_name);
  if (!kind) {
    fail("unknown space kind '" + kind_name + "'");
  }
  auto group_field = [&](const char *key) {
    return j.contains(key) ? group_from_json(j.at(key)) : GroupDescriptor::trivial();
  };
  auto partition_field = [&] {
    return Partition(as<std::vector<int>>(require(j, "partition"), "partition"));
  };
  auto chain_field = [&] { return as<std::vector<int>>(require(j, "chain"), "chain"); };
  auto factors_field = [&] {
    std::vector<SpaceDescriptor> out;
    for (const auto &f : require(j, "factors")) {
      out.push_back(space_from_json(f));
    }
    return out;
  };

  SpaceDescriptor m;
  try {
    switch (*kind) {
    case SpaceKind::point:
      m = point_space();
      break;
    case SpaceKind::cotangent_of_rep:
      m = cotangent_of_rep(theory_from_json(require(j, "theory")));
      break;
    case SpaceKind::cotangent_of_group:
      m = cotangent_of_group(group_field("left_group"), !group_field("right_group").is_trivial());
      break;
    case SpaceKind::group_times_slice:
      m = group_times_slice(partition_field());
      break;
    case SpaceKind::orbit_closure:
      m = orbit_closure_space(partition_field());
      break;
    case SpaceKind::type_A_singularity:
    case SpaceKind::affine_plane:
    case SpaceKind::torus_cotangent:
    case SpaceKind::coulomb_branch:
      m.kind = *kind;
      m.n = j.contains("n") ? as<int>(j.at("n"), "n") : (*kind == SpaceKind::affine_plane ? 1 : 0);
      m.dim = (*kind == SpaceKind::type_A_singularity || *kind == SpaceKind::affine_plane) ? 2 : 2 * std::int64_t{m.n};
      break;
    case SpaceKind::ns5_block:
    case SpaceKind::d5_block: {
      auto chain = chain_field();
      if (chain.size() != 2) {
        fail("a single fivebrane block needs a two-entry chain");
      }
      m = *kind == SpaceKind::ns5_block ? ns5_block(chain[0], chain[1]) : d5_block(chain[0], chain[1]);
      break;
    }
    case SpaceKind::product:
      m = product_space(factors_field());
      break;
    case SpaceKind::reduction:
      m.kind = SpaceKind::reduction;
      if (j.contains("factors")) m.factors = factors_field();
      if (j.contains("chain")) m.chain = chain_field();
      m.dim = as<std::int64_t>(require(j, "dim"), "dim");
      break;
    }
  } catch (const Error &e) {
    if (e.code() == Errc::parse_error) throw;
    fail(e.what());
  }

  if (j.contains("left_group")) m.left_group = group_field("left_group");
  if (j.contains("right_group")) m.right_group = group_field("right_group");
  if (j.contains("theory") && *kind != SpaceKind::cotangent_of_rep) {
    m.theory = theory_from_json(j.at("theory"));
  }
  if (j.contains("chain") && *kind != SpaceKind::ns5_block && *kind != SpaceKind::d5_block &&
      *kind != SpaceKind::reduction) {
    m.chain = chain_field();
  }
  if (j.contains("n") && (*kind == SpaceKind::point || *kind == SpaceKind::cotangent_of_group)) {
    m.n = as<int>(j.at("n"), "n");
  }
  m.conjectural = j.value("conjectural", false);
  m.possibly_singular = j.value("possibly_singular", false);
  m.twisted = j.value("twisted", false);

  if (j.contains("dim") && as<std::int64_t>(j.at("dim"), "dim") != m.dim) {
    fail("dim " + j.at("dim").dump() + " is inconsistent with kind " + kind_name + " (expected " +
         std::to_string(m.dim) + ")");
  }
  return m;
}

// ------------------------------------------------------------------- output

Json to_json(const RingPresentation &p) {
  Json gens = Json::array();
  std::vector<std::string> names;
  for (const auto &g : p.generators) {
    gens.push_back({{"name", g.name}, {"degree2", g.degree2}});
    names.push_back(g.name);
  }
  Json rels = Json::array();
  for (const auto &r : p.relations) {
    rels.push_back({{"lhs", r.lhs.to_string(names)}, {"rhs", r.rhs.to_string(names)}});
  }
  Json j;
  j["generators"] = gens;
  j["relations"] = rels;
  j["variety"] = std::string(to_string(p.tag));
  if (p.tag == VarietyTag::type_A_singularity) {
    j["singularity_index"] = p.singularity_index;
  }
  j["text"] = p.to_string();
  return j;
}

Json to_json(const LinkingData &l) {
  Json j;
  j["ns5"] = l.ns5;
  j["d5"] = l.d5;
  return j;
}

Json to_json(const Partition &p) { return p.parts(); }

Json to_json(const OrbitDescriptor &o) {
  Json j;
  j["kind"] = std::string(to_string(o.kind));
  j["n"] = o.n;
  j["jordan_type"] = o.jordan_type.parts();
  j["dim"] = o.dim();
  return j;
}

} // namespace sdualkit
