#include "blockcheck/trace_io.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

#include "blockcheck/error.hpp"

namespace blockcheck {
namespace {

void put_lits(std::ostream& os, std::span<const Lit> lits) {
  for (Lit l : lits) os << ' ' << l.to_dimacs();
  os << " 0";
}

class LineReader {
 public:
  LineReader(std::string_view line, std::size_t line_no) : is_(std::string(line)), line_(line_no) {}

  std::string word() {
    std::string w;
    if (!(is_ >> w)) throw ParseError(line_, "unexpected end of line");
    return w;
  }

  std::vector<Lit> lits_until_zero() {
    std::vector<Lit> out;
    while (true) {
      const std::string token = word();
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line_, "invalid literal '" + token + "'");
      if (value == 0) return out;
      out.push_back(Lit::from_dimacs(value));
    }
  }

  bool at_end() {
    std::string rest;
    return !(is_ >> rest);
  }

 private:
  std::istringstream is_;
  std::size_t line_;
};

}  // namespace

std::string write_trace(const EliminationTrace& trace) {
  std::ostringstream os;
  os << "t blockcheck 1\n";
  for (const auto& e : trace.entries) {
    os << "d " << property_tag(e.property);
    put_lits(os, e.clause.lits());
    os << " w";
    put_lits(os, e.witness);
    os << '\n';
    if (e.super)
      for (const auto& entry : e.super->per_tau) {
        os << 's';
        const auto tau = entry.tau.literals();
        put_lits(os, tau);
        put_lits(os, entry.blocking_set.lits());
        os << '\n';
      }
  }
  return os.str();
}

EliminationTrace parse_trace(std::istream& in) {
  EliminationTrace trace;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    LineReader r(line, line_no);
    std::string head;
    {
      std::istringstream probe(line);
      if (!(probe >> head) || head == "c") continue;
    }
    r.word();
    if (head == "t") {
      if (r.word() != "blockcheck" || r.word() != "1")
        throw ParseError(line_no, "unsupported trace header");
      have_header = true;
    } else if (!have_header) {
      throw ParseError(line_no, "missing 't blockcheck 1' header");
    } else if (head == "d") {
      const std::string tag = r.word();
      auto p = parse_property(tag);
      if (!p) throw ParseError(line_no, "unknown property tag '" + tag + "'");
      TraceEntry e{.clause = Clause(r.lits_until_zero()), .property = *p, .witness = {}, .super = {}};
      if (r.word() != "w") throw ParseError(line_no, "expected 'w' section");
      e.witness = r.lits_until_zero();
      if (*p == Property::supbc)
        e.super = BlockingWitness{.kind = BlockingWitness::Kind::super};
      trace.entries.push_back(std::move(e));
    } else if (head == "s") {
      if (trace.entries.empty() || !trace.entries.back().super)
        throw ParseError(line_no, "'s' line without a preceding supbc entry");
      auto& w = *trace.entries.back().super;
      const auto tau_lits = r.lits_until_zero();
      const Clause set(r.lits_until_zero());
      auto tau = PartialAssignment::from_literals(tau_lits);
      if (w.per_tau.empty()) w.external_vars = tau.domain();
      else if (tau.domain() != w.external_vars)
        throw ParseError(line_no, "per-tau entries disagree on external variables");
      w.per_tau.push_back({std::move(tau), set});
    } else {
      throw ParseError(line_no, "unknown trace line '" + head + "'");
    }
    if (!r.at_end()) throw ParseError(line_no, "trailing tokens");
  }
  if (!have_header) throw ParseError(line_no, "missing 't blockcheck 1' header");
  return trace;
}

EliminationTrace parse_trace(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_trace(in);
}

std::string write_model(const PartialAssignment& model) {
  std::ostringstream os;
  os << 'v';
  for (int v : model.to_dimacs()) os << ' ' << v;
  os << " 0\n";
  return os.str();
}

PartialAssignment parse_model(std::istream& in) {
  PartialAssignment model;
  std::string line;
  std::size_t line_no = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream is(line);
    std::string head;
    if (!(is >> head) || head == "c" || head == "s") continue;
    if (head != "v") throw ParseError(line_no, "expected 'v' line in model file");
    any = true;
    std::string token;
    while (is >> token) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line_no, "invalid literal '" + token + "'");
      if (value == 0) break;
      model.assign(Lit::from_dimacs(value));
    }
  }
  if (!any) throw ParseError(line_no, "no 'v' line in model file");
  return model;
}

PartialAssignment parse_model(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_model(in);
}

}  // namespace blockcheck
