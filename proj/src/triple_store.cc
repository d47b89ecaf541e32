// Copyright 2026 The Agatha Pipeline Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "agatha/triple_store.h"

#include <vector>

namespace agatha {

namespace {

bool UnifyPosition(const PatternTerm &position, const Term &value,
                   Binding *binding) {
  if (const Term *constant = std::get_if<Term>(&position)) {
    return *constant == value;
  }
  const std::string &name = std::get<Variable>(position).name;
  auto [it, inserted] = binding->emplace(name, value);
  return inserted || it->second == value;
}

}  // namespace

bool Unify(const TriplePattern &pattern, const Triple &triple, Binding *binding) {
  return UnifyPosition(pattern.subject, triple.subject, binding) &&
         UnifyPosition(pattern.predicate, triple.predicate, binding) &&
         UnifyPosition(pattern.object, triple.object, binding);
}

const Term *Resolve(const PatternTerm &position, const Binding &binding) {
  if (const Term *constant = std::get_if<Term>(&position)) return constant;
  auto it = binding.find(std::get<Variable>(position).name);
  return it == binding.end() ? nullptr : &it->second;
}

TripleIndex::TripleIndex(const TripleIndex &other) : triples_(other.triples_) {
  Rebuild();
}

TripleIndex &TripleIndex::operator=(const TripleIndex &other) {
  if (this != &other) {
    triples_ = other.triples_;
    Rebuild();
  }
  return *this;
}

void TripleIndex::Rebuild() {
  by_subject_.clear();
  by_predicate_.clear();
  by_object_.clear();
  for (const Triple &t : triples_) {
    by_subject_[t.subject].insert(&t);
    by_predicate_[t.predicate].insert(&t);
    by_object_[t.object].insert(&t);
  }
}

bool TripleIndex::Insert(const Triple &triple) {
  auto [it, inserted] = triples_.insert(triple);
  if (!inserted) return false;
  const Triple *t = &*it;
  by_subject_[t->subject].insert(t);
  by_predicate_[t->predicate].insert(t);
  by_object_[t->object].insert(t);
  return true;
}

bool TripleIndex::Erase(const Triple &triple) {
  auto it = triples_.find(triple);
  if (it == triples_.end()) return false;
  const Triple *t = &*it;
  auto unlink = [t](std::map<Term, Postings> &index, const Term &key) {
    auto entry = index.find(key);
    entry->second.erase(t);
    if (entry->second.empty()) index.erase(entry);
  };
  unlink(by_subject_, t->subject);
  unlink(by_predicate_, t->predicate);
  unlink(by_object_, t->object);
  triples_.erase(it);
  return true;
}

const TripleIndex::Postings *TripleIndex::Find(
    const std::map<Term, Postings> &index, const Term &key) const {
  auto it = index.find(key);
  return it == index.end() ? nullptr : &it->second;
}

bool TripleIndex::CheckConsistency() const {
  auto check = [&](const std::map<Term, Postings> &index, auto key_of) {
    size_t total = 0;
    for (const auto &[key, postings] : index) {
      if (postings.empty()) return false;
      for (const Triple *t : postings) {
        auto it = triples_.find(*t);
        if (it == triples_.end() || &*it != t || key_of(*t) != key) return false;
      }
      total += postings.size();
    }
    return total == triples_.size();
  };
  return check(by_subject_, [](const Triple &t) { return t.subject; }) &&
         check(by_predicate_, [](const Triple &t) { return t.predicate; }) &&
         check(by_object_, [](const Triple &t) { return t.object; });
}

TripleStore::TripleStore(const Graph &graph) {
  for (const Triple &t : graph) {
    CheckTriple(t);
    index_.Insert(t);
  }
}

TripleStore::TripleStore(const TripleStore &other) {
  std::shared_lock lock(other.mu_);
  index_ = other.index_;
}

TripleStore &TripleStore::operator=(const TripleStore &other) {
  if (this == &other) return *this;
  TripleIndex copy = other.Read([](const TripleIndex &index) { return index; });
  std::unique_lock lock(mu_);
  index_ = std::move(copy);
  return *this;
}

size_t TripleStore::Insert(std::span<const Triple> triples) {
  for (const Triple &t : triples) CheckTriple(t);
  std::unique_lock lock(mu_);
  size_t added = 0;
  for (const Triple &t : triples) added += index_.Insert(t) ? 1 : 0;
  return added;
}

size_t TripleStore::Insert(const Triple &triple) {
  return Insert(std::span<const Triple>(&triple, 1));
}

size_t TripleStore::Delete(const TriplePattern &pattern) {
  std::unique_lock lock(mu_);
  Binding empty;
  std::vector<Triple> doomed;
  index_.ForEachMatch(Resolve(pattern.subject, empty),
                      Resolve(pattern.predicate, empty),
                      Resolve(pattern.object, empty), [&](const Triple &t) {
                        Binding b;
                        if (Unify(pattern, t, &b)) doomed.push_back(t);
                      });
  for (const Triple &t : doomed) index_.Erase(t);
  return doomed.size();
}

size_t TripleStore::size() const {
  return Read([](const TripleIndex &index) { return index.size(); });
}

bool TripleStore::Contains(const Triple &triple) const {
  return Read([&](const TripleIndex &index) { return index.Contains(triple); });
}

Graph TripleStore::Snapshot() const {
  return Read([](const TripleIndex &index) { return index.triples(); });
}

}  // namespace agatha
