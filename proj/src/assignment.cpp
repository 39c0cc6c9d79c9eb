#include "blockcheck/assignment.hpp"

#include "blockcheck/error.hpp"

namespace blockcheck {

PartialAssignment PartialAssignment::from_literals(std::span<const Lit> lits) {
  PartialAssignment t;
  for (Lit l : lits) t.assign(l);
  return t;
}

PartialAssignment PartialAssignment::from_dimacs(std::span<const int> lits) {
  PartialAssignment t;
  for (int v : lits)
    if (v != 0) t.assign(Lit::from_dimacs(v));
  return t;
}

PartialAssignment PartialAssignment::from_bits(std::span<const Var> vars, std::uint64_t bits) {
  PartialAssignment t;
  const std::size_t n = vars.size();
  for (std::size_t i = 0; i < n; ++i) t.assign(vars[i], ((bits >> (n - 1 - i)) & 1u) != 0);
  return t;
}

bool PartialAssignment::satisfies(const Clause& c) const {
  for (Lit l : c)
    if (satisfies(l)) return true;
  return false;
}

bool PartialAssignment::falsifies(const Clause& c) const {
  for (Lit l : c)
    if (!falsifies(l)) return false;
  return true;
}

void PartialAssignment::assign(Var v, bool value) {
  if (v.id() >= values_.size()) values_.resize(v.id() + 1, -1);
  values_[v.id()] = value ? 1 : 0;
}

void PartialAssignment::unassign(Var v) {
  if (v.id() < values_.size()) values_[v.id()] = -1;
}

void PartialAssignment::flip(Lit l) {
  if (!assigned(l.var()))
    throw PreconditionError("flip of unassigned variable " + std::to_string(l.var().id()));
  values_[l.var().id()] ^= 1;
}

PartialAssignment PartialAssignment::restricted_to(std::span<const Var> vars) const {
  PartialAssignment out;
  for (Var v : vars)
    if (auto b = value(v)) out.assign(v, *b);
  return out;
}

std::vector<Var> PartialAssignment::domain() const {
  std::vector<Var> out;
  for (std::uint32_t i = 0; i < values_.size(); ++i)
    if (values_[i] >= 0) out.emplace_back(i);
  return out;
}

std::size_t PartialAssignment::size() const {
  std::size_t n = 0;
  for (auto v : values_) n += v >= 0;
  return n;
}

std::vector<Lit> PartialAssignment::literals() const {
  std::vector<Lit> out;
  for (std::uint32_t i = 0; i < values_.size(); ++i)
    if (values_[i] >= 0) out.emplace_back(Var(i), values_[i] == 1);
  return out;
}

std::vector<int> PartialAssignment::to_dimacs() const {
  std::vector<int> out;
  for (Lit l : literals()) out.push_back(l.to_dimacs());
  return out;
}

bool PartialAssignment::subset_of(const PartialAssignment& other) const {
  for (Lit l : literals())
    if (!other.satisfies(l)) return false;
  return true;
}

}  // namespace blockcheck
