#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "blockcheck/assignment.hpp"
#include "blockcheck/engine.hpp"

namespace blockcheck {

// Trace files:
//
//   t blockcheck 1
//   d <tag> <clause lits> 0 w <witness lits> 0
//   s <tau lits> 0 <blocking set lits> 0      (supbc, one line per τ)
//
// The "w" section holds the blocking literal or blocking set and is empty
// for supbc; per-τ sets follow as "s" lines and are absent in compact mode.

std::string write_trace(const EliminationTrace& trace);
EliminationTrace parse_trace(std::istream& in);
EliminationTrace parse_trace(std::string_view text);

// Model files: "v <signed lits> 0", possibly over several "v" lines.
// Comment ("c") and status ("s") lines are ignored.

std::string write_model(const PartialAssignment& model);
PartialAssignment parse_model(std::istream& in);
PartialAssignment parse_model(std::string_view text);

}  // namespace blockcheck
