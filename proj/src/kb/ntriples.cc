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

#include "nsqa/kb/ntriples.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace nsqa::kb {
namespace {

class LineParser {
 public:
  LineParser(std::string_view line, size_t lineno, const PrefixTable &prefixes)
      : line_(line), lineno_(lineno), prefixes_(prefixes) {}

  Triple parse() {
    Term s = read_iri("subject");
    Term p = read_iri("predicate");
    skip_space();
    Term o = (!at_end() && peek() == '"') ? read_literal() : read_iri("object");
    skip_space();
    if (at_end() || peek() != '.') fail("missing final '.'");
    ++pos_;
    skip_space();
    if (!at_end() && peek() != '#') fail("trailing content after '.'");
    return {std::move(s), std::move(p), std::move(o)};
  }

 private:
  [[noreturn]] void fail(const std::string &what) {
    throw KbError(KbErrorKind::MalformedLine, lineno_,
                  "line " + std::to_string(lineno_) + ": " + what);
  }

  bool at_end() const { return pos_ >= line_.size(); }
  char peek() const { return line_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string read_bracketed() {
    ++pos_;  // '<'
    size_t close = line_.find('>', pos_);
    if (close == std::string_view::npos) fail("unterminated IRI");
    std::string iri(line_.substr(pos_, close - pos_));
    pos_ = close + 1;
    return iri;
  }

  Term read_iri(const char *position) {
    skip_space();
    if (at_end() || peek() != '<') fail(std::string("expected IRI as ") + position);
    return Term::iri(prefixes_.compact(read_bracketed()));
  }

  Term read_literal() {
    ++pos_;  // opening quote
    std::string lexical;
    while (true) {
      if (at_end()) fail("unterminated literal");
      char c = peek();
      if (c == '"') break;
      if (c == '\\') {
        ++pos_;
        if (at_end()) fail("dangling escape");
        char e = peek();
        switch (e) {
          case 'n': lexical += '\n'; break;
          case 't': lexical += '\t'; break;
          case 'r': lexical += '\r'; break;
          default: lexical += e; break;
        }
      } else {
        lexical += c;
      }
      ++pos_;
    }
    ++pos_;  // closing quote
    if (!at_end() && peek() == '@') {
      size_t start = ++pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) ++pos_;
      if (pos_ == start) fail("empty language tag");
      return Term::literal(std::move(lexical), {}, std::string(line_.substr(start, pos_ - start)));
    }
    if (line_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      if (at_end() || peek() != '<') fail("expected datatype IRI");
      return Term::literal(std::move(lexical), prefixes_.compact(read_bracketed()));
    }
    return Term::literal(std::move(lexical));
  }

  std::string_view line_;
  size_t lineno_;
  const PrefixTable &prefixes_;
  size_t pos_ = 0;
};

}  // namespace

std::vector<Triple> parse_ntriples(std::string_view text, const PrefixTable &prefixes) {
  std::vector<Triple> out;
  size_t lineno = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t eol = text.find('\n', start);
    std::string_view line =
        text.substr(start, eol == std::string_view::npos ? std::string_view::npos : eol - start);
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      out.push_back(LineParser(line, lineno, prefixes).parse());
    }
    if (eol == std::string_view::npos) break;
    start = eol + 1;
  }
  return out;
}

KnowledgeBase load_ntriples(const std::string &path, const PrefixTable &prefixes,
                            LoadStats *stats) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open N-Triples file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<Triple> triples = parse_ntriples(text, prefixes);
  const size_t parsed = triples.size();
  KnowledgeBase kb = KnowledgeBase::from_triples(std::move(triples));
  if (stats != nullptr) {
    stats->lines = static_cast<size_t>(std::count(text.begin(), text.end(), '\n'));
    stats->triples = kb.size();
    stats->duplicates = parsed - kb.size();
  }
  return kb;
}

}  // namespace nsqa::kb
