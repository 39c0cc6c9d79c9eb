#include "blockcheck/clause.hpp"

#include <sstream>

namespace blockcheck {

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

Clause Clause::from_dimacs(std::span<const int> lits) {
  std::vector<Lit> out;
  out.reserve(lits.size());
  for (int v : lits) out.push_back(Lit::from_dimacs(v));
  return Clause(std::move(out));
}

std::vector<Var> Clause::variables() const {
  std::vector<Var> vars;
  for (Lit l : lits_)
    if (vars.empty() || vars.back() != l.var()) vars.push_back(l.var());
  return vars;
}

std::vector<int> Clause::to_dimacs() const {
  std::vector<int> out;
  out.reserve(lits_.size());
  for (Lit l : lits_) out.push_back(l.to_dimacs());
  return out;
}

std::string Clause::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (i) os << ' ';
    os << lits_[i].to_dimacs();
  }
  return os.str();
}

Clause Clause::with(Lit l) const {
  Clause out = *this;
  auto it = std::lower_bound(out.lits_.begin(), out.lits_.end(), l);
  if (it == out.lits_.end() || *it != l) out.lits_.insert(it, l);
  return out;
}

Clause Clause::without(Lit l) const {
  Clause out = *this;
  auto it = std::lower_bound(out.lits_.begin(), out.lits_.end(), l);
  if (it != out.lits_.end() && *it == l) out.lits_.erase(it);
  return out;
}

Clause Clause::complemented() const {
  std::vector<Lit> out;
  out.reserve(lits_.size());
  for (Lit l : lits_) out.push_back(~l);
  return Clause(std::move(out));
}

Clause operator|(const Clause& a, const Clause& b) {
  Clause out;
  out.lits_.reserve(a.size() + b.size());
  std::set_union(a.lits_.begin(), a.lits_.end(), b.lits_.begin(), b.lits_.end(),
                 std::back_inserter(out.lits_));
  return out;
}

Clause operator-(const Clause& a, const Clause& b) {
  Clause out;
  std::set_difference(a.lits_.begin(), a.lits_.end(), b.lits_.begin(), b.lits_.end(),
                      std::back_inserter(out.lits_));
  return out;
}

}  // namespace blockcheck
