#include "sdualkit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"

#include "sdualkit/abelian_coulomb.hpp"
#include "sdualkit/brane.hpp"
#include "sdualkit/error.hpp"
#include "sdualkit/partitions.hpp"
#include "sdualkit/repl.hpp"
#include "sdualkit/serialize.hpp"
#include "sdualkit/spaces.hpp"
#include "sdualkit/verify.hpp"

namespace sdualkit {

namespace {

int exit_code_for(Errc code) {
  switch (code) {
  case Errc::invalid_argument:
  case Errc::parse_error:
    return exit_parse_error;
  default:
    return exit_unsupported;
  }
}

std::string slurp(std::istream &in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// `-` reads `in`; inline JSON is used as is; otherwise an existing file is
// read, and anything else is returned unchanged when `allow_inline` is set.
std::string read_input(const std::string &arg, std::istream &in, bool allow_inline) {
  if (arg == "-") {
    return slurp(in);
  }
  const auto start = arg.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && arg[start] == '{') {
    return arg;
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg);
    if (!file) {
      throw Error(Errc::parse_error, "cannot read '" + arg + "'");
    }
    return slurp(file);
  }
  if (allow_inline) {
    return arg;
  }
  throw Error(Errc::parse_error, "no such file '" + arg + "' and not inline JSON");
}

std::string join_words(const std::vector<std::string> &words) {
  std::string s;
  for (const auto &w : words) {
    if (!s.empty()) s += ' ';
    s += w;
  }
  return s;
}

// `0,1,3`, `[0,1,3]` or `0 1 3`.
std::vector<int> parse_int_list(const std::string &text) {
  std::string body = text;
  std::replace(body.begin(), body.end(), ',', ' ');
  body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '[' || c == ']'; }), body.end());
  std::istringstream in(body);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception &) {
      throw Error(Errc::parse_error, "expected an integer, got '" + tok + "'");
    }
  }
  if (out.empty()) {
    throw Error(Errc::parse_error, "expected a list of integers, got '" + text + "'");
  }
  return out;
}

std::string int_list_text(const std::vector<std::int64_t> &xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(xs[i]);
  }
  return s + "]";
}

void emit(std::ostream &out, const Json &j) { out << j.dump(2) << "\n"; }

int run_coulomb(const std::string &input, bool table, int cutoff, bool json, std::istream &in,
                std::ostream &out, std::ostream &err) {
  const TorusTheory theory = theory_from_json(parse_json(read_input(input, in, false)));
  if (!table) {
    try {
      const RingPresentation p = present_rank1(theory);
      if (json) {
        emit(out, to_json(p));
      } else {
        out << p.relation_text() << "\n";
      }
      return exit_ok;
    } catch (const Error &e) {
      if (e.code() != Errc::rank_too_high) throw;
      err << "error: " << e.what() << "\n"
          << "hint: rerun with --table to print the structure constants instead\n";
      return exit_unsupported;
    }
  }

  const Reduction red = reduce_multiplicative(theory);
  const auto entries = structure_table(red.theory, cutoff);
  if (json) {
    Json rows = Json::array();
    for (const auto &[key, poly] : entries) {
      rows.push_back({{"lambda", key.first}, {"mu", key.second}, {"coefficient", poly.to_string()}});
    }
    emit(out, {{"rank", red.theory.rank}, {"cutoff", cutoff}, {"entries", rows}});
    return exit_ok;
  }
  out << "rank " << red.theory.rank << ", cutoff " << cutoff << "\n";
  for (const auto &[key, poly] : entries) {
    Cocharacter sum = key.first;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += key.second[i];
    out << CoulombElement::basis(key.first).to_string() << " * " << CoulombElement::basis(key.second).to_string()
        << " = " << CoulombElement::term(sum, poly).to_string() << "\n";
  }
  return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  CLI::App app{"Coulomb branches, brane diagrams and S-dual Hamiltonian spaces", "sdualkit"};
  app.require_subcommand(1, 1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  auto *coulomb = app.add_subcommand("coulomb", "Coulomb branch of an abelian theory");
  bool table = false;
  int cutoff = 1;
  std::string theory_input;
  coulomb->add_flag("--table", table, "Print structure constants instead of a presentation");
  coulomb->add_option("--cutoff", cutoff, "Box radius for --table")->check(CLI::Range(0, 6));
  coulomb->add_option("theory", theory_input, "JSON file, '-' for stdin, or inline JSON")->required();

  auto *diagram = app.add_subcommand("diagram", "Brane diagram operations");
  diagram->require_subcommand(1, 1);
  std::vector<std::string> diagram_words;
  std::size_t hw_index = 0;
  auto *d_sdual = diagram->add_subcommand("sdual", "Exchange NS5 and D5 branes");
  d_sdual->add_option("diagram", diagram_words, "ASCII or JSON diagram")->required();
  auto *d_hw = diagram->add_subcommand("hw", "Hanany-Witten move on branes i, i+1");
  d_hw->add_option("i", hw_index, "Left brane index (from 0)")->required();
  d_hw->add_option("diagram", diagram_words, "ASCII or JSON diagram")->required();
  auto *d_link = diagram->add_subcommand("linking", "Linking numbers");
  d_link->add_option("diagram", diagram_words, "ASCII or JSON diagram")->required();

  auto *orbit = app.add_subcommand("orbit", "Nilpotent orbits and partitions");
  orbit->require_subcommand(1, 1);
  std::string orbit_arg;
  auto *o_chain = orbit->add_subcommand("chain", "Orbit closure of a chain of dimensions");
  o_chain->add_option("dims", orbit_arg, "e.g. 0,1,2,3")->required();
  auto *o_dual = orbit->add_subcommand("dual", "Transpose partition and dual space");
  o_dual->add_option("partition", orbit_arg, "e.g. [3,1,1]")->required();
  auto *o_dims = orbit->add_subcommand("dims", "Orbit and slice dimensions");
  o_dims->add_option("partition", orbit_arg, "e.g. [3,1,1]")->required();

  auto *dual = app.add_subcommand("dual", "S-dual of a space descriptor");
  std::string descriptor_input;
  dual->add_option("descriptor", descriptor_input, "JSON file, '-' for stdin, or inline JSON")->required();

  auto *verify = app.add_subcommand("verify", "Run the verification suite");
  std::string filter;
  verify->add_option("--filter", filter, "Only checks whose name contains this");

  auto *repl = app.add_subcommand("repl", "Interactive diagram session");
  std::vector<std::string> repl_words;
  repl->add_option("diagram", repl_words, "Initial diagram")->required();

  for (auto *sub : {coulomb, diagram, d_sdual, d_hw, d_link, orbit, o_chain, o_dual, o_dims, dual, verify, repl}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse_error;
  }

  try {
    if (coulomb->parsed()) {
      return run_coulomb(theory_input, table, cutoff, json, in, out, err);
    }

    if (diagram->parsed()) {
      const BraneDiagram d = parse_diagram(read_input(join_words(diagram_words), in, true));
      if (d_link->parsed()) {
        const LinkingData l = linking_numbers(d);
        if (json) {
          emit(out, to_json(l));
        } else {
          out << render_linking(l) << "\n";
        }
        return exit_ok;
      }
      const BraneDiagram result = d_sdual->parsed() ? sdual(d) : hw_move(d, hw_index);
      if (json) {
        emit(out, to_json(result));
      } else {
        out << result.to_string() << "\n";
      }
      return exit_ok;
    }

    if (orbit->parsed()) {
      if (o_chain->parsed()) {
        const OrbitDescriptor o = chain_to_orbit(parse_int_list(orbit_arg));
        if (json) {
          emit(out, to_json(o));
        } else {
          out << o.jordan_type.to_string() << "  " << to_string(o.kind) << "  dim " << o.dim() << "\n";
        }
        return exit_ok;
      }
      const Partition lambda = Partition::parse(orbit_arg);
      if (o_dual->parsed()) {
        const SpaceDescriptor m = group_times_slice(lambda);
        const SpaceDescriptor d = sdual_pair(m);
        if (json) {
          emit(out, {{"partition", to_json(lambda)},
                     {"transpose", to_json(transpose(lambda))},
                     {"space", to_json(m)},
                     {"dual", to_json(d)}});
        } else {
          out << "transpose " << transpose(lambda).to_string() << "\n"
              << m.to_string() << "  <->  " << d.to_string() << "\n";
        }
        return exit_ok;
      }
      std::vector<std::int64_t> ranks;
      for (int k = 0; k <= lambda.n(); ++k) ranks.push_back(rank_profile(lambda, k));
      if (json) {
        emit(out, {{"n", lambda.n()},
                   {"orbit_dim", orbit_dim(lambda)},
                   {"centralizer_dim", centralizer_dim(lambda)},
                   {"rank_profile", ranks}});
      } else {
        out << "n " << lambda.n() << "\n"
            << "orbit_dim " << orbit_dim(lambda) << "\n"
            << "centralizer_dim " << centralizer_dim(lambda) << "\n"
            << "rank_profile " << int_list_text(ranks) << "\n";
      }
      return exit_ok;
    }

    if (dual->parsed()) {
      const SpaceDescriptor m = space_from_json(parse_json(read_input(descriptor_input, in, false)));
      const SpaceDescriptor d = sdual_pair(m);
      if (json) {
        emit(out, to_json(d));
      } else {
        out << d.to_string() << "\n";
      }
      return exit_ok;
    }

    if (verify->parsed()) {
      const auto names = verify_check_names();
      if (std::none_of(names.begin(), names.end(),
                       [&](const std::string &n) { return n.find(filter) != std::string::npos; })) {
        err << "error: no check matches '" << filter << "'\n";
        return exit_parse_error;
      }
      std::ostringstream lines;
      const VerifyReport report = run_verify(filter, seed_from_environment(), json ? lines : out);
      if (json) {
        Json checks = Json::array();
        for (const auto &c : report.checks) {
          checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        emit(out, {{"checks", checks}, {"passed", report.all_passed()}});
      }
      return report.all_passed() ? exit_ok : exit_check_failed;
    }

    if (repl->parsed()) {
      DiagramSession session(parse_diagram(read_input(join_words(repl_words), in, true)));
      const bool prompt = &in == &std::cin && isatty(STDIN_FILENO) != 0;
      run_repl(session, in, out, prompt);
      return exit_ok;
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return exit_parse_error;
}

} // namespace sdualkit
