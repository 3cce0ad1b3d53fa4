// Copyright 2026 The NSQA Authors.
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

#ifndef NSQA_LINKERS_LEXICON_H_
#define NSQA_LINKERS_LEXICON_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nsqa/kb/term.h"

namespace nsqa::linkers {

// Splits a tab-separated file into rows of exactly `columns` fields,
// skipping blank lines and '#' comments. Throws nsqa::Error with
// file:line on malformed rows.
std::vector<std::vector<std::string>> read_tsv(const std::string &path, size_t columns);

// Parses "dbr:Spain" or "<http://...>" into an IRI term in prefixed form.
kb::Term parse_iri(std::string_view text, const kb::PrefixTable &prefixes);

// Parses a score column; must lie in [0,1].
double parse_unit_score(const std::string &text, const std::string &where);

// Case-folded, punctuation stripped, whitespace collapsed:
// "Benicio del Toro!" -> "benicio del toro".
std::string normalize_mention(std::string_view text);

struct LexiconEntry {
  std::string surface;  // normalized
  kb::Term iri;
  double score = 1.0;
};

// Surface form -> (IRI, score) table. Used both for entities
// ("benicio del toro" -> dbr:Benicio_del_Toro) and for type lemmas
// ("movie" -> dbo:Film). TSV format: `surface \t IRI \t score`.
class Lexicon {
 public:
  static Lexicon load(const std::string &path, const kb::PrefixTable &prefixes);

  void add(std::string_view surface, kb::Term iri, double score);

  // Entries whose normalized surface equals normalize_mention(surface).
  std::vector<LexiconEntry> lookup(std::string_view surface) const;
  const std::multimap<std::string, LexiconEntry> &entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::multimap<std::string, LexiconEntry> entries_;
};

// Alignment of AMR predicate keys ("star-01.arg1.arg2", "mod",
// "location|pay-01|instrument") to KB relations with probabilities.
// TSV format: `key \t relation IRI \t probability`.
class AlignmentTable {
 public:
  struct Entry {
    kb::Term relation;
    double probability;
  };

  static AlignmentTable load(const std::string &path, const kb::PrefixTable &prefixes);

  void add(std::string key, kb::Term relation, double probability);
  const std::vector<Entry> *find(const std::string &key) const;
  const std::map<std::string, std::vector<Entry>> &entries() const { return entries_; }

 private:
  std::map<std::string, std::vector<Entry>> entries_;
};

}  // namespace nsqa::linkers

#endif  // NSQA_LINKERS_LEXICON_H_
