#include "blockcheck/formula.hpp"

#include <algorithm>

#include "blockcheck/error.hpp"

namespace blockcheck {

Formula::Formula(std::initializer_list<Clause> clauses) {
  for (const Clause& c : clauses) add(c);
}

Formula::Formula(std::span<const Clause> clauses) {
  for (const Clause& c : clauses) add(c);
}

Formula Formula::from_dimacs(std::initializer_list<std::initializer_list<int>> clauses) {
  Formula f;
  for (auto c : clauses) f.add(Clause::from_dimacs(c));
  return f;
}

Formula Formula::from_dimacs(const std::vector<std::vector<int>>& clauses) {
  Formula f;
  for (const auto& c : clauses) f.add(Clause::from_dimacs(c));
  return f;
}

void Formula::grow_occurrences(Lit l) {
  if (l.code() >= occ_.size()) occ_.resize(l.code() + 2);
}

ClauseId Formula::add(const Clause& c) {
  if (auto it = index_.find(c); it != index_.end()) return it->second;
  const auto id = static_cast<ClauseId>(slots_.size());
  slots_.push_back(c);
  alive_.push_back(true);
  index_.emplace(c, id);
  for (Lit l : c) {
    grow_occurrences(l);
    occ_[l.code()].push_back(id);
  }
  return id;
}

void Formula::remove(ClauseId id) {
  if (!alive(id)) throw PreconditionError("remove of dead clause id " + std::to_string(id));
  alive_[id] = false;
  const Clause& c = slots_[id];
  index_.erase(c);
  for (Lit l : c) {
    auto& list = occ_[l.code()];
    list.erase(std::find(list.begin(), list.end(), id));
  }
}

bool Formula::erase(const Clause& c) {
  auto id = find(c);
  if (!id) return false;
  remove(*id);
  return true;
}

std::optional<ClauseId> Formula::find(const Clause& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<ClauseId> Formula::ids() const {
  std::vector<ClauseId> out;
  out.reserve(index_.size());
  for (const auto& [c, id] : index_) out.push_back(id);
  return out;
}

std::vector<ClauseId> Formula::ids_by_insertion() const {
  std::vector<ClauseId> out;
  for (ClauseId id = 0; id < slots_.size(); ++id)
    if (alive_[id]) out.push_back(id);
  return out;
}

std::vector<Clause> Formula::clauses() const {
  std::vector<Clause> out;
  out.reserve(index_.size());
  for (const auto& [c, id] : index_) out.push_back(c);
  return out;
}

std::span<const ClauseId> Formula::occurrences(Lit l) const {
  if (l.code() >= occ_.size()) return {};
  return occ_[l.code()];
}

std::vector<ClauseId> Formula::occurring_any(std::span<const Lit> lits) const {
  std::vector<ClauseId> out;
  for (Lit l : lits) {
    auto occ = occurrences(l);
    out.insert(out.end(), occ.begin(), occ.end());
  }
  std::sort(out.begin(), out.end(),
            [&](ClauseId a, ClauseId b) { return slots_[a] < slots_[b]; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Var> Formula::variables() const {
  std::vector<Var> out;
  for (std::uint32_t code = 0; code < occ_.size(); code += 2) {
    const bool used = !occ_[code].empty() || (code + 1 < occ_.size() && !occ_[code + 1].empty());
    if (used) out.emplace_back(code / 2);
  }
  return out;
}

std::uint32_t Formula::max_var() const {
  auto vars = variables();
  return vars.empty() ? 0 : vars.back().id();
}

Formula Formula::with(const Clause& c) const {
  Formula out = *this;
  out.add(c);
  return out;
}

Formula Formula::without(const Clause& c) const {
  Formula out = *this;
  out.erase(c);
  return out;
}

void Formula::rebuild_occurrences() {
  for (auto& list : occ_) list.clear();
  for (ClauseId id = 0; id < slots_.size(); ++id) {
    if (!alive_[id]) continue;
    for (Lit l : slots_[id]) {
      grow_occurrences(l);
      occ_[l.code()].push_back(id);
    }
  }
}

bool Formula::occurrences_consistent() const {
  Formula fresh = *this;
  fresh.rebuild_occurrences();
  const std::size_t n = std::max(occ_.size(), fresh.occ_.size());
  for (std::uint32_t code = 0; code < n; ++code) {
    std::vector<ClauseId> a(occurrences(Lit::from_code(code)).begin(),
                            occurrences(Lit::from_code(code)).end());
    std::vector<ClauseId> b(fresh.occurrences(Lit::from_code(code)).begin(),
                            fresh.occurrences(Lit::from_code(code)).end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return true;
}

}  // namespace blockcheck
