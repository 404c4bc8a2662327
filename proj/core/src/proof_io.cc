/* Copyright 2026 The Parakeet Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "parakeet/proof_io.h"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace parakeet {

namespace {

// ---------------------------------------------------------------------------
// Formatting

void collect_symbols(const Term& t, std::map<std::string, std::size_t>& out) {
  if (t.is_var()) return;
  if (t.name() != symbols::kEquality) out.emplace(t.name(), t.arity());
  for (const Term& a : t.args()) collect_symbols(a, out);
}

void collect_symbols(const Clause& c, std::map<std::string, std::size_t>& out) {
  for (const Literal& l : c) collect_symbols(l.atom, out);
}

struct Style {
  bool marked;
  std::string term(const Term& t) const {
    return marked ? to_marked_string(t) : to_string(t);
  }
  std::string literal(const Literal& l) const {
    return marked ? to_marked_string(l) : to_string(l);
  }
  std::string clause(const Clause& c) const {
    return marked ? to_marked_string(c) : to_string(c);
  }
  std::string subst(const Substitution& s) const {
    return marked ? to_marked_string(s) : to_string(s);
  }
};

std::string format_source(const AxiomSource& src, const Style& style) {
  std::string out = "[";
  out += source_kind_name(src.kind);
  if (src.kind != SourceKind::kGoal && src.kind != SourceKind::kExt) {
    out += ' ';
    out += src.name;
  }
  if (src.original) {
    out += " instance " + style.subst(src.instantiation) + " of " +
           style.clause(*src.original);
  }
  out += ']';
  return out;
}

std::string format_nodes(const Proof& proof, const Style& style,
                         std::string_view line_prefix) {
  std::vector<const ProofNode*> order = listing_order(proof.root);
  std::unordered_map<const ProofNode*, std::size_t> number;
  std::ostringstream out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const ProofNode* node = order[i];
    number[node] = i + 1;
    auto ref = [&](std::size_t k) {
      return "(" + std::to_string(number.at(node->premises()[k].get())) + ")";
    };
    out << line_prefix << '(' << i + 1 << ") " << rule_name(node->rule());
    if (node->is<rules::Axiom>()) {
      if (const AxiomSource* src = proof.registry.find(node->clause())) {
        out << ' ' << format_source(*src, style);
      }
    } else if (node->is<rules::Assume>()) {
      out << ' ' << style.literal(Literal::pos(node->as<rules::Assume>().atom));
    } else if (node->is<rules::Subst>()) {
      out << " from " << ref(0) << " using "
          << style.subst(node->as<rules::Subst>().sub);
    } else if (node->is<rules::Refl>()) {
      out << ' ' << style.term(node->as<rules::Refl>().term);
    } else if (node->is<rules::Equality>()) {
      const auto& eq = node->as<rules::Equality>();
      out << " on " << style.literal(eq.literal) << " at [";
      for (std::size_t k = 0; k < eq.path.size(); ++k) {
        out << (k ? "," : "") << eq.path[k];
      }
      out << "] with " << style.term(eq.replacement);
    } else {
      out << " from " << ref(0) << " and " << ref(1) << " on "
          << style.literal(Literal::pos(node->as<rules::Resolve>().atom));
    }
    out << ": " << style.clause(node->clause()) << '\n';
  }
  return out.str();
}

}  // namespace

std::string format_listing(const Proof& proof) {
  std::map<std::string, std::size_t> syms;
  for (const ProofNode* node : listing_order(proof.root)) {
    collect_symbols(node->clause(), syms);
    const Rule& r = node->rule();
    if (auto* a = std::get_if<rules::Assume>(&r)) collect_symbols(a->atom, syms);
    if (auto* s = std::get_if<rules::Subst>(&r)) {
      for (const auto& [v, t] : s->sub) collect_symbols(t, syms);
    }
    if (auto* f = std::get_if<rules::Refl>(&r)) collect_symbols(f->term, syms);
    if (auto* e = std::get_if<rules::Equality>(&r)) {
      collect_symbols(e->literal.atom, syms);
      collect_symbols(e->replacement, syms);
    }
    if (auto* v = std::get_if<rules::Resolve>(&r)) collect_symbols(v->atom, syms);
    if (node->is<rules::Axiom>()) {
      if (const AxiomSource* src = proof.registry.find(node->clause())) {
        if (src->original) collect_symbols(*src->original, syms);
        for (const auto& [v, t] : src->instantiation) collect_symbols(t, syms);
      }
    }
  }
  std::string header = "% symbols:";
  for (const auto& [name, arity] : syms) {
    header += ' ' + name + '/' + std::to_string(arity);
  }
  return header + '\n' + format_nodes(proof, Style{false}, "");
}

std::string format_machine(const Proof& proof) {
  return format_nodes(proof, Style{true}, "node ");
}

namespace {

// ---------------------------------------------------------------------------
// Parsing

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line,
             const std::set<std::string>* symbols)
      : text_(text), line_(line), symbols_(symbols) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ProofParseError(line_, what + " at column " + std::to_string(pos_ + 1));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(std::string_view s) {
    skip_space();
    return text_.substr(pos_, s.size()) == s;
  }
  bool accept(std::string_view s) {
    if (!peek(s)) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '%' ||
           c == '\'' || c == '$' || c == '#';
  }
  std::string ident() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t number() {
    std::string s = ident();
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected number");
    }
    return std::stoul(s);
  }

  Term term() {
    if (accept("?")) return Term::var(ident());
    std::string name = ident();
    if (accept("(")) {
      std::vector<Term> args;
      do {
        args.push_back(term());
      } while (accept(","));
      expect(")");
      return Term::app(std::move(name), std::move(args));
    }
    if (symbols_ != nullptr && !symbols_->contains(name)) {
      return Term::var(std::move(name));
    }
    return Term::constant(std::move(name));
  }

  Literal literal() {
    bool positive = !accept("~");
    Term lhs = term();
    if (accept("!=")) {
      if (!positive) fail("'~' before a disequation");
      return Literal::eq(std::move(lhs), term(), false);
    }
    if (accept("=")) return Literal::eq(std::move(lhs), term(), positive);
    return Literal{positive, std::move(lhs)};
  }

  Clause clause() {
    if (peek("False")) {
      std::size_t save = pos_;
      skip_space();
      pos_ += 5;
      if (pos_ >= text_.size() || !ident_char(text_[pos_])) return Clause{};
      pos_ = save;
    }
    std::vector<Literal> lits;
    do {
      lits.push_back(literal());
    } while (accept("|"));
    return Clause(std::move(lits));
  }

  Substitution subst() {
    expect("{");
    Substitution s;
    if (accept("}")) return s;
    do {
      std::string var = ident();
      expect("->");
      s.bind(std::move(var), term());
    } while (accept(","));
    expect("}");
    return s;
  }

  std::size_t ref() {
    expect("(");
    std::size_t n = number();
    expect(")");
    return n;
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
  const std::set<std::string>* symbols_;
};

AxiomSource parse_source(LineParser& p) {
  AxiomSource src;
  p.expect("[");
  std::string kind = p.ident();
  if (kind == "fact") {
    src.kind = SourceKind::kFact;
  } else if (kind == "goal") {
    src.kind = SourceKind::kGoal;
  } else if (kind == "def") {
    src.kind = SourceKind::kDefinition;
  } else if (kind == "ext") {
    src.kind = SourceKind::kExt;
  } else {
    p.fail("unknown axiom source '" + kind + "'");
  }
  if (src.kind == SourceKind::kFact || src.kind == SourceKind::kDefinition) {
    src.name = p.ident();
  } else {
    src.name = kind;
  }
  if (p.accept("instance")) {
    src.instantiation = p.subst();
    p.expect("of");
    src.original = p.clause();
  }
  p.expect("]");
  return src;
}

}  // namespace

Proof parse_proof(std::string_view text) {
  Proof proof;
  std::set<std::string> syms;
  bool have_header = false;
  std::vector<ProofRef> nodes;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    line = line.substr(first);
    if (line.starts_with("% symbols:")) {
      std::istringstream in(std::string(line.substr(10)));
      std::string entry;
      while (in >> entry) syms.insert(entry.substr(0, entry.rfind('/')));
      have_header = true;
      continue;
    }
    if (line.starts_with("%") || line.starts_with("#")) continue;
    bool machine = line.starts_with("node ");
    if (machine) line.remove_prefix(5);
    if (!machine && !have_header) {
      throw ProofParseError(line_no, "listing without a '% symbols:' header");
    }
    LineParser p(line, line_no, machine ? nullptr : &syms);
    std::size_t n = p.ref();
    if (n != nodes.size() + 1) p.fail("steps must be numbered consecutively");
    std::string rule = p.ident();
    auto premise = [&](std::size_t k) -> ProofRef {
      if (k == 0 || k > nodes.size()) p.fail("reference to unknown step");
      return nodes[k - 1];
    };
    Rule r;
    std::vector<ProofRef> premises;
    std::optional<AxiomSource> source;
    if (rule == "Axiom") {
      r = rules::Axiom{};
      if (p.peek("[")) source = parse_source(p);
    } else if (rule == "Assume") {
      Literal l = p.literal();
      if (!l.positive) p.fail("Assume takes an atom");
      r = rules::Assume{l.atom};
    } else if (rule == "Subst") {
      p.expect("from");
      premises.push_back(premise(p.ref()));
      p.expect("using");
      r = rules::Subst{p.subst()};
    } else if (rule == "Refl") {
      r = rules::Refl{p.term()};
    } else if (rule == "Equality") {
      p.expect("on");
      rules::Equality eq;
      eq.literal = p.literal();
      p.expect("at");
      p.expect("[");
      if (!p.accept("]")) {
        do {
          eq.path.push_back(p.number());
        } while (p.accept(","));
        p.expect("]");
      }
      p.expect("with");
      eq.replacement = p.term();
      r = std::move(eq);
    } else if (rule == "Resolve") {
      p.expect("from");
      premises.push_back(premise(p.ref()));
      p.expect("and");
      premises.push_back(premise(p.ref()));
      p.expect("on");
      Literal l = p.literal();
      if (!l.positive) p.fail("Resolve pivots on an atom");
      r = rules::Resolve{l.atom};
    } else {
      p.fail("unknown rule '" + rule + "'");
    }
    p.expect(":");
    Clause c = p.clause();
    if (!p.at_end()) p.fail("trailing input");
    if (source) proof.registry.add(c, *source);
    nodes.push_back(std::make_shared<const ProofNode>(std::move(c), std::move(r),
                                                      std::move(premises)));
  }
  if (nodes.empty()) throw ProofParseError(line_no, "empty proof");
  proof.root = nodes.back();
  return proof;
}

Clause parse_marked_clause(std::string_view text) {
  LineParser p(text, 1, nullptr);
  Clause c = p.clause();
  if (!p.at_end()) p.fail("trailing input");
  return c;
}

Term parse_marked_term(std::string_view text) {
  LineParser p(text, 1, nullptr);
  Term t = p.term();
  if (!p.at_end()) p.fail("trailing input");
  return t;
}

}  // namespace parakeet
