#include "blockcheck/dimacs.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>

#include "blockcheck/error.hpp"

namespace blockcheck {
namespace {

bool parse_int(std::string_view token, long long& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

DimacsResult parse_dimacs(std::istream& in, const DimacsOptions& options) {
  DimacsResult result;
  bool have_header = false;
  std::vector<Lit> pending;
  std::size_t pending_line = 0;
  std::size_t line_no = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split(line);
    if (tokens.empty()) continue;
    if (tokens.front().front() == 'c') continue;
    if (tokens.front() == "%") break;  // SATLIB trailer
    if (tokens.front() == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "cnf")
        throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      long long v = 0, c = 0;
      if (!parse_int(tokens[2], v) || !parse_int(tokens[3], c) || v < 0 || c < 0)
        throw ParseError(line_no, "malformed header counts");
      result.declared_vars = static_cast<std::size_t>(v);
      result.declared_clauses = static_cast<std::size_t>(c);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause data before 'p cnf' header");
    for (auto token : tokens) {
      long long value = 0;
      if (!parse_int(token, value) || value > INT32_MAX || value < -INT32_MAX)
        throw ParseError(line_no, "invalid literal '" + std::string(token) + "'");
      if (value == 0) {
        Clause c(std::move(pending));
        pending.clear();
        result.clauses_in_order.push_back(c);
        result.formula.add(c);
        ++result.clauses_read;
        continue;
      }
      if (pending.empty()) pending_line = line_no;
      const auto var = static_cast<std::size_t>(value < 0 ? -value : value);
      if (var > result.declared_vars) {
        const std::string msg = "variable " + std::to_string(var) +
                                " exceeds declared count " + std::to_string(result.declared_vars);
        if (options.strict) throw ParseError(line_no, msg);
        result.warnings.push_back("line " + std::to_string(line_no) + ": " + msg);
      }
      pending.push_back(Lit::from_dimacs(static_cast<int>(value)));
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(pending_line, "unterminated clause at end of input");
  if (result.clauses_read != result.declared_clauses) {
    const std::string msg = "header declares " + std::to_string(result.declared_clauses) +
                            " clauses, found " + std::to_string(result.clauses_read);
    if (options.strict) throw ParseError(line_no, msg);
    result.warnings.push_back(msg);
  }
  return result;
}

DimacsResult parse_dimacs(std::string_view text, const DimacsOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in, options);
}

std::string write_dimacs(const Formula& f, std::size_t num_vars) {
  std::ostringstream os;
  os << "p cnf " << std::max<std::size_t>(num_vars, f.max_var()) << ' ' << f.size() << '\n';
  for (const Clause& c : f.clauses()) {
    for (Lit l : c) os << l.to_dimacs() << ' ';
    os << "0\n";
  }
  return os.str();
}

Clause parse_clause(std::string_view text) {
  std::vector<Lit> lits;
  bool terminated = false;
  for (auto token : split(text)) {
    long long value = 0;
    if (terminated) throw ParseError(1, "literals after terminating 0 in clause");
    if (!parse_int(token, value) || value > INT32_MAX || value < -INT32_MAX)
      throw ParseError(1, "invalid literal '" + std::string(token) + "'");
    if (value == 0) {
      terminated = true;
      continue;
    }
    lits.push_back(Lit::from_dimacs(static_cast<int>(value)));
  }
  return Clause(std::move(lits));
}

}  // namespace blockcheck
