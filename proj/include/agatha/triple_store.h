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

#ifndef AGATHA_TRIPLE_STORE_H_
#define AGATHA_TRIPLE_STORE_H_

#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <variant>

#include "agatha/term.h"

namespace agatha {

struct Variable {
  std::string name;  // without the leading '?'

  auto operator<=>(const Variable &) const = default;
  bool operator==(const Variable &) const = default;
};

using PatternTerm = std::variant<Term, Variable>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;

  bool operator==(const TriplePattern &) const = default;
};

using Binding = std::map<std::string, Term>;

// Unifies `pattern` with `triple`, extending *binding. Returns false (and
// leaves *binding unspecified) on a clash, including a variable that occurs
// twice with different values.
bool Unify(const TriplePattern &pattern, const Triple &triple, Binding *binding);

// The bound term at a pattern position: a constant, or a variable already
// present in `binding`; nullptr otherwise.
const Term *Resolve(const PatternTerm &position, const Binding &binding);

// Set of triples with subject, predicate and object indexes. Not
// synchronized; see TripleStore.
class TripleIndex {
 public:
  TripleIndex() = default;
  TripleIndex(const TripleIndex &other);
  TripleIndex &operator=(const TripleIndex &other);
  TripleIndex(TripleIndex &&) = default;
  TripleIndex &operator=(TripleIndex &&) = default;

  bool Insert(const Triple &triple);  // true if newly added
  bool Erase(const Triple &triple);   // true if it was present
  bool Contains(const Triple &triple) const { return triples_.count(triple) != 0; }
  size_t size() const { return triples_.size(); }
  const Graph &triples() const { return triples_; }

  // Calls fn(triple) for every triple agreeing with the non-null positions,
  // in triple order.
  template <typename Fn>
  void ForEachMatch(const Term *s, const Term *p, const Term *o, Fn &&fn) const;

  // Every index entry refers to a stored triple and vice versa.
  bool CheckConsistency() const;

 private:
  struct PtrLess {
    bool operator()(const Triple *a, const Triple *b) const { return *a < *b; }
  };
  using Postings = std::set<const Triple *, PtrLess>;

  const Postings *Find(const std::map<Term, Postings> &index, const Term &key) const;
  void Rebuild();

  Graph triples_;
  std::map<Term, Postings> by_subject_;
  std::map<Term, Postings> by_predicate_;
  std::map<Term, Postings> by_object_;
};

// Single-writer, multiple-reader wrapper: mutations take an exclusive lock,
// reads a shared one, so a batch insert is never observed half applied.
class TripleStore {
 public:
  TripleStore() = default;
  explicit TripleStore(const Graph &graph);
  TripleStore(const TripleStore &other);
  TripleStore &operator=(const TripleStore &other);

  // Validates every triple before adding any; returns the number of new ones.
  size_t Insert(std::span<const Triple> triples);
  size_t Insert(const Triple &triple);

  // Removes every triple unifying with the pattern.
  size_t Delete(const TriplePattern &pattern);

  size_t size() const;
  bool Contains(const Triple &triple) const;
  Graph Snapshot() const;

  template <typename Fn>
  decltype(auto) Read(Fn &&fn) const {
    std::shared_lock lock(mu_);
    return fn(static_cast<const TripleIndex &>(index_));
  }

 private:
  mutable std::shared_mutex mu_;
  TripleIndex index_;
};

template <typename Fn>
void TripleIndex::ForEachMatch(const Term *s, const Term *p, const Term *o,
                               Fn &&fn) const {
  const Postings *best = nullptr;
  bool empty = false;
  auto consider = [&](const Term *key, const std::map<Term, Postings> &index) {
    if (key == nullptr || empty) return;
    const Postings *postings = Find(index, *key);
    if (postings == nullptr) {
      empty = true;
    } else if (best == nullptr || postings->size() < best->size()) {
      best = postings;
    }
  };
  consider(s, by_subject_);
  consider(p, by_predicate_);
  consider(o, by_object_);
  if (empty) return;
  auto accept = [&](const Triple &t) {
    if (s != nullptr && t.subject != *s) return;
    if (p != nullptr && t.predicate != *p) return;
    if (o != nullptr && t.object != *o) return;
    fn(t);
  };
  if (best == nullptr) {
    for (const Triple &t : triples_) accept(t);
  } else {
    for (const Triple *t : *best) accept(*t);
  }
}

}  // namespace agatha

#endif  // AGATHA_TRIPLE_STORE_H_
