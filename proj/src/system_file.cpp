#include "diffelim/system_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "diffelim/error.hpp"

namespace diffelim {

namespace {

struct Statement {
  std::string text;
  int line;
};

std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  int line = 1;
  std::string cur;
  bool comment = false;
  auto flush = [&] {
    auto b = cur.find_first_not_of(" \t\r");
    if (b != std::string::npos) {
      auto e = cur.find_last_not_of(" \t\r");
      out.push_back({cur.substr(b, e - b + 1), line});
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
      comment = false;
      ++line;
    } else if (comment) {
      continue;
    } else if (c == '#') {
      comment = true;
    } else if (c == ';') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"vars", "keep", "params"};
  return k;
}

class Parser {
 public:
  Parser(const std::string& text, int line, const std::set<std::string>& declared,
         const std::set<std::string>& params, std::shared_ptr<VarRegistry> reg)
      : s_(text), line_(line), declared_(declared), params_(params), reg_(std::move(reg)) {}

  Polynomial equation() {
    Polynomial lhs = expr();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      Polynomial rhs = expr();
      lhs -= rhs;
    }
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return lhs;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  Polynomial expr() {
    skip_ws();
    Polynomial acc = term();
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '*' && c != '/') return acc;
      ++pos_;
      Polynomial f = unary();
      if (c == '*') {
        acc *= f;
      } else {
        if (!f.is_constant() || f.is_zero()) fail("division by a non-constant or zero");
        acc = acc * Rational(1 / f.constant_term());
      }
    }
  }

  Polynomial unary() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  unsigned long integer() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected an integer");
    std::string digits = s_.substr(b, pos_ - b);
    if (digits.size() > 9) fail("integer " + digits + " is too large here");
    return std::stoul(digits);
  }

  Polynomial power() {
    bool was_ident = false;
    Polynomial base = atom(was_ident);
    while (true) {
      skip_ws();
      if (peek() != '^') return base;
      ++pos_;
      skip_ws();
      unsigned long e;
      if (peek() == '(') {
        ++pos_;
        e = integer();
        skip_ws();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
      } else {
        e = integer();
      }
      base = base.pow(static_cast<unsigned>(e));
    }
  }

  Polynomial atom(bool& was_ident) {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t b = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      try {
        return Polynomial::constant(reg_, parse_rational(s_.substr(b, pos_ - b)));
      } catch (const Error&) {
        fail("malformed number '" + s_.substr(b, pos_ - b) + "'");
      }
    }
    if (ident_start(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && ident_char(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(b, pos_ - b);
      if (!declared_.count(name)) fail("undeclared identifier '" + name + "'");
      unsigned order = 0;
      while (peek() == '\'') {
        ++order;
        ++pos_;
      }
      // x^(k) is a derivative when it directly follows an identifier
      if (order == 0 && peek() == '^' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '(') {
        std::size_t save = pos_;
        pos_ += 2;
        std::size_t db = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ > db && peek() == ')') {
          order = static_cast<unsigned>(std::stoul(s_.substr(db, pos_ - db)));
          ++pos_;
        } else {
          pos_ = save;
        }
      }
      if (order > 0 && params_.count(name)) fail("parameter '" + name + "' cannot carry a derivative");
      was_ident = true;
      return Polynomial::variable(reg_, reg_->intern({name, order}));
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
  int line_;
  const std::set<std::string>& declared_;
  const std::set<std::string>& params_;
  std::shared_ptr<VarRegistry> reg_;
};

std::vector<std::string> parse_names(const std::string& rest, int line) {
  std::vector<std::string> out;
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty name in declaration", line);
    std::string name = item.substr(b, e - b + 1);
    if (!ident_start(static_cast<unsigned char>(name[0])) ||
        !std::all_of(name.begin(), name.end(), [](char c) { return ident_char(static_cast<unsigned char>(c)); }))
      throw ParseError("invalid variable name '" + name + "'", line);
    if (keywords().count(name)) throw ParseError("'" + name + "' is reserved", line);
    out.push_back(name);
  }
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out;
}

}  // namespace

DiffSystem parse_system(std::string_view text) {
  DiffSystem S;
  S.registry = VarRegistry::create();
  auto stmts = split_statements(text);
  std::set<std::string> declared, params;
  std::vector<Statement> equations;
  for (const auto& st : stmts) {
    std::string word = st.text.substr(0, st.text.find_first_of(" \t"));
    if (keywords().count(word) && word.size() < st.text.size()) {
      auto names = parse_names(st.text.substr(word.size()), st.line);
      auto& group = word == "vars" ? S.eliminate : word == "keep" ? S.keep : S.params;
      for (auto& n : names) {
        if (!declared.insert(n).second) throw ParseError("'" + n + "' declared twice", st.line);
        if (word == "params") params.insert(n);
        group.push_back(n);
      }
    } else {
      equations.push_back(st);
    }
  }
  // base variables first, so that the registry order follows the headers
  for (const auto* group : {&S.eliminate, &S.keep, &S.params})
    for (const auto& n : *group) S.registry->intern({n, 0});
  for (const auto& st : equations) {
    Parser p(st.text, st.line, declared, params, S.registry);
    Polynomial eq = p.equation();
    if (eq.is_zero()) continue;
    S.equations.push_back(std::move(eq));
  }
  S.validate();
  return S;
}

DiffSystem load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

std::string print_system(const DiffSystem& S) {
  std::string out;
  if (!S.eliminate.empty()) out += "vars " + join(S.eliminate) + ";\n";
  if (!S.keep.empty()) out += "keep " + join(S.keep) + ";\n";
  if (!S.params.empty()) out += "params " + join(S.params) + ";\n";
  for (const auto& eq : S.equations) out += eq.to_string() + "\n";
  return out;
}

Polynomial transport(const Polynomial& p, const std::shared_ptr<VarRegistry>& target) {
  if (p.registry() == target || !p.registry()) {
    if (!p.registry()) return Polynomial::constant(target, p.constant_term());
    return p;
  }
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    std::vector<std::pair<VarIndex, Exponent>> pairs;
    for (auto [v, e] : t.mono.support()) pairs.emplace_back(target->intern(p.registry()->at(v)), e);
    terms.push_back({Monomial::from_pairs(pairs), t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

bool same_system(const DiffSystem& a, const DiffSystem& b) {
  if (a.eliminate != b.eliminate || a.keep != b.keep || a.params != b.params) return false;
  if (a.equations.size() != b.equations.size()) return false;
  for (std::size_t i = 0; i < a.equations.size(); ++i)
    if (!(transport(a.equations[i], b.registry) == b.equations[i])) return false;
  return true;
}

DiffSystem with_keep(const DiffSystem& S, const std::vector<std::string>& keep) {
  DiffSystem out = S;
  std::vector<std::string> all = S.eliminate;
  all.insert(all.end(), S.keep.begin(), S.keep.end());
  for (const auto& k : keep)
    if (std::find(all.begin(), all.end(), k) == all.end())
      throw PreconditionError("'" + k + "' is not a declared non-parameter variable");
  out.eliminate.clear();
  out.keep.clear();
  for (const auto& n : all) {
    if (std::find(keep.begin(), keep.end(), n) != keep.end())
      out.keep.push_back(n);
    else
      out.eliminate.push_back(n);
  }
  return out;
}

}  // namespace diffelim
