#include "sdualkit/repl.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "sdualkit/error.hpp"

namespace sdualkit {

namespace {

std::string join(const std::vector<int> &xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(xs[i]);
  }
  return s + "]";
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) {
    words.push_back(w);
  }
  return words;
}

} // namespace

std::string render_linking(const LinkingData &l) { return "linking o=" + join(l.ns5) + " x=" + join(l.d5); }

DiagramSession::DiagramSession(BraneDiagram initial) {
  initial.validate();
  history_.push_back(std::move(initial));
}

std::string DiagramSession::render() const {
  return current().to_string() + "\n" + render_linking(linking_numbers(current())) + "\n";
}

bool DiagramSession::execute(std::string_view line, std::ostream &out) {
  const auto words = split_words(line);
  if (words.empty()) {
    return true;
  }
  const std::string &cmd = words[0];
  auto reject = [&](const std::string &msg) {
    out << "error: " << msg << "\n";
    return false;
  };
  if (finished_) {
    return reject("session has ended");
  }
  try {
    if (cmd == "hw") {
      if (words.size() != 2) {
        return reject("usage: hw <i>");
      }
      std::size_t i = 0;
      const auto &arg = words[1];
      auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), i);
      if (ec != std::errc() || ptr != arg.data() + arg.size()) {
        return reject("brane index must be a nonnegative integer, got '" + arg + "'");
      }
      history_.push_back(hw_move(current(), i));
    } else if (cmd == "sdual" && words.size() == 1) {
      history_.push_back(sdual(current()));
    } else if (cmd == "undo" && words.size() == 1) {
      if (history_.size() == 1) {
        return reject("nothing to undo");
      }
      history_.pop_back();
    } else if (cmd == "dims" && words.size() == 1) {
      out << "dims " << join(current().dims) << "\n";
    } else if (cmd == "linking" && words.size() == 1) {
      // render() below already reports it.
    } else if (cmd == "quit" && words.size() == 1) {
      finished_ = true;
      return true;
    } else {
      return reject("unknown command '" + std::string(line) + "'");
    }
  } catch (const Error &e) {
    return reject(e.what());
  }
  out << render();
  return true;
}

void run_repl(DiagramSession &session, std::istream &in, std::ostream &out, bool prompt) {
  out << session.render();
  std::string line;
  while (!session.finished()) {
    if (prompt) {
      out << "> " << std::flush;
    }
    if (!std::getline(in, line)) {
      break;
    }
    session.execute(line, out);
  }
}

BraneDiagram replay(const BraneDiagram &initial, const std::vector<std::string> &commands) {
  DiagramSession session(initial);
  std::ostringstream sink;
  for (const auto &c : commands) {
    session.execute(c, sink);
    if (session.finished()) {
      break;
    }
  }
  return session.current();
}

} // namespace sdualkit
