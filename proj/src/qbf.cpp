#include "blockcheck/qbf.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>

#include "blockcheck/error.hpp"

namespace blockcheck {

std::string write_qdimacs(const QbfInstance& q) {
  std::uint32_t max_var = q.matrix.max_var();
  for (Var v : q.universals) max_var = std::max(max_var, v.id());
  for (Var v : q.existentials) max_var = std::max(max_var, v.id());

  std::ostringstream os;
  os << "p cnf " << max_var << ' ' << q.matrix.size() << '\n';
  auto block = [&](char tag, std::vector<Var> vars) {
    if (vars.empty()) return;
    std::sort(vars.begin(), vars.end());
    os << tag;
    for (Var v : vars) os << ' ' << v.id();
    os << " 0\n";
  };
  block('a', q.universals);
  block('e', q.existentials);
  for (const Clause& c : q.matrix.clauses()) {
    for (Lit l : c) os << l.to_dimacs() << ' ';
    os << "0\n";
  }
  return os.str();
}

QbfInstance parse_qdimacs(std::istream& in) {
  QbfInstance q;
  bool have_header = false;
  bool seen_clause = false;
  int blocks = 0;
  char last_block = 0;
  std::vector<Lit> pending;
  std::size_t line_no = 0;
  std::string line;

  auto read_ints = [&](std::istringstream& is) {
    std::vector<long long> out;
    std::string token;
    while (is >> token) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || value > INT32_MAX ||
          value < -INT32_MAX)
        throw ParseError(line_no, "invalid integer '" + token + "'");
      out.push_back(value);
    }
    return out;
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream is(line);
    std::string head;
    if (!(is >> head) || head[0] == 'c') continue;
    if (head == "p") {
      std::string fmt;
      long long v = -1, c = -1;
      if (have_header || !(is >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0)
        throw ParseError(line_no, "malformed header");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "data before header");
    if (head == "a" || head == "e") {
      if (seen_clause) throw ParseError(line_no, "quantifier block after clauses");
      const char tag = head[0];
      if (tag == last_block || (tag == 'a' && last_block == 'e') || blocks == 2)
        throw ParseError(line_no, "only a single forall block followed by a single exists "
                                  "block is supported");
      auto ints = read_ints(is);
      if (ints.empty() || ints.back() != 0) throw ParseError(line_no, "unterminated block");
      ints.pop_back();
      auto& target = tag == 'a' ? q.universals : q.existentials;
      for (long long v : ints) {
        if (v <= 0) throw ParseError(line_no, "quantified variables must be positive");
        target.emplace_back(static_cast<std::uint32_t>(v));
      }
      last_block = tag;
      ++blocks;
      continue;
    }
    std::istringstream whole(line);
    for (long long v : read_ints(whole)) {
      seen_clause = true;
      if (v == 0) {
        q.matrix.add(Clause(std::move(pending)));
        pending.clear();
      } else {
        pending.push_back(Lit::from_dimacs(static_cast<int>(v)));
      }
    }
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (!pending.empty()) throw ParseError(line_no, "unterminated clause at end of input");

  std::vector<Var> bound = q.universals;
  bound.insert(bound.end(), q.existentials.begin(), q.existentials.end());
  std::sort(bound.begin(), bound.end());
  for (Var v : q.matrix.variables()) {
    if (std::binary_search(bound.begin(), bound.end(), v)) continue;
    if (!q.universals.empty())
      throw ParseError(line_no, "free variable " + std::to_string(v.id()) +
                                    " would need an outer existential block");
    q.existentials.push_back(v);
  }
  return q;
}

QbfInstance parse_qdimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_qdimacs(in);
}

}  // namespace blockcheck
