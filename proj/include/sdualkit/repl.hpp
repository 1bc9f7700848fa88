#pragma once

// Line-oriented session for applying moves to a brane diagram.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sdualkit/brane.hpp"

namespace sdualkit {

class DiagramSession {
public:
  explicit DiagramSession(BraneDiagram initial);

  const BraneDiagram &current() const { return history_.back(); }
  const std::vector<BraneDiagram> &history() const { return history_; }
  bool finished() const { return finished_; }

  /// Runs one command (`hw <i>`, `sdual`, `linking`, `dims`, `undo`, `quit`)
  /// and writes its response. Returns false when the command was rejected;
  /// the state is then unchanged.
  bool execute(std::string_view line, std::ostream &out);

  /// `0 o 1 x 1 o 0` followed by the linking line.
  std::string render() const;

private:
  std::vector<BraneDiagram> history_;
  bool finished_ = false;
};

/// Reads commands from `in` until quit or end of input. With `prompt` set a
/// `> ` marker is written before each command.
void run_repl(DiagramSession &session, std::istream &in, std::ostream &out, bool prompt);

/// Replays a transcript of commands from scratch and returns the final diagram.
BraneDiagram replay(const BraneDiagram &initial, const std::vector<std::string> &commands);

std::string render_linking(const LinkingData &l);

} // namespace sdualkit
