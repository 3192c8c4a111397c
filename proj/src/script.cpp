#include "chern/script.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "chern/groebner.hpp"
#include "chern/rng.hpp"

namespace chern {

namespace {

enum class Tok { Name, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(&s) { advance(); }

  const Token& cur() const { return cur_; }

  void advance() {
    skip();
    cur_.line = line_;
    cur_.col = col_;
    if (i_ >= s_->size()) {
      cur_ = Token{Tok::End, "", line_, col_};
      return;
    }
    char c = (*s_)[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s_->size() &&
             (std::isalnum(static_cast<unsigned char>((*s_)[j])) || (*s_)[j] == '_'))
        ++j;
      cur_ = Token{Tok::Name, s_->substr(i_, j - i_), line_, col_};
      bump(j - i_);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_->size() && std::isdigit(static_cast<unsigned char>((*s_)[j]))) ++j;
      cur_ = Token{Tok::Int, s_->substr(i_, j - i_), line_, col_};
      bump(j - i_);
      return;
    }
    static const std::string punct = ";,=/^+-*()[]";
    if (punct.find(c) != std::string::npos) {
      cur_ = Token{Tok::Punct, std::string(1, c), line_, col_};
      bump(1);
      return;
    }
    throw InputError(pos() + ": unexpected character '" + std::string(1, c) + "'");
  }

  std::string pos() const { return std::to_string(line_) + ":" + std::to_string(col_); }

 private:
  void skip() {
    while (i_ < s_->size()) {
      char c = (*s_)[i_];
      if (c == '#') {
        while (i_ < s_->size() && (*s_)[i_] != '\n') bump(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump(1);
      } else {
        break;
      }
    }
  }

  void bump(size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if ((*s_)[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++i_;
    }
  }

  const std::string* s_;
  size_t i_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_{Tok::End, "", 1, 1};
};

[[noreturn]] void fail(const Token& t, const std::string& expected) {
  std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  throw InputError(std::to_string(t.line) + ":" + std::to_string(t.col) + ": unexpected " + got +
                   " (expected " + expected + ")");
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lx_(text) {}

  Script parse() {
    Script s;
    while (lx_.cur().kind != Tok::End) {
      const Token& t = lx_.cur();
      if (t.kind != Tok::Name)
        fail(t, "a statement: ring, ideal, quotient, module, or task");
      if (t.text == "ring")
        s.stmts.push_back(ring_decl());
      else if (t.text == "ideal")
        s.stmts.push_back(ideal_decl());
      else if (t.text == "quotient")
        s.stmts.push_back(quotient_decl());
      else if (t.text == "module")
        s.stmts.push_back(module_decl());
      else if (t.text == "task")
        s.stmts.push_back(task_stmt());
      else
        fail(t, "ring, ideal, quotient, module, or task");
    }
    return s;
  }

 private:
  std::string expect_name(const std::string& what) {
    if (lx_.cur().kind != Tok::Name) fail(lx_.cur(), what);
    std::string n = lx_.cur().text;
    lx_.advance();
    return n;
  }

  long long expect_int(const std::string& what) {
    if (lx_.cur().kind != Tok::Int) fail(lx_.cur(), what);
    long long v = std::stoll(lx_.cur().text);
    lx_.advance();
    return v;
  }

  void expect_punct(const std::string& p) {
    if (lx_.cur().kind != Tok::Punct || lx_.cur().text != p) fail(lx_.cur(), "'" + p + "'");
    lx_.advance();
  }

  bool accept_punct(const std::string& p) {
    if (lx_.cur().kind == Tok::Punct && lx_.cur().text == p) {
      lx_.advance();
      return true;
    }
    return false;
  }

  void expect_keyword(const std::string& k) {
    if (lx_.cur().kind != Tok::Name || lx_.cur().text != k) fail(lx_.cur(), "'" + k + "'");
    lx_.advance();
  }

  void declare(const std::string& name, const Token& at) {
    if (!declared_.insert(name).second)
      throw InputError(std::to_string(at.line) + ":" + std::to_string(at.col) + ": name '" +
                       name + "' is already declared");
  }

  RingPtr ring_of(const std::string& name, const Token& at) {
    auto it = rings_.find(name);
    if (it == rings_.end())
      throw InputError(std::to_string(at.line) + ":" + std::to_string(at.col) + ": '" + name +
                       "' is not a declared ring");
    return it->second;
  }

  Script::Stmt ring_decl() {
    Token at = lx_.cur();
    lx_.advance();
    Script::Stmt st;
    st.kind = Script::Kind::Ring;
    st.line = at.line;
    st.col = at.col;
    st.name = expect_name("ring name");
    declare(st.name, at);
    expect_punct("=");
    expect_keyword("char");
    long long p = expect_int("prime characteristic");
    expect_punct(",");
    expect_keyword("vars");
    std::vector<std::string> vars;
    while (lx_.cur().kind == Tok::Name) {
      vars.push_back(lx_.cur().text);
      lx_.advance();
    }
    if (vars.empty()) fail(lx_.cur(), "variable names");
    expect_punct(";");
    st.ring = Ring::make(p, vars);
    rings_[st.name] = st.ring;
    current_ring_name_ = st.name;
    return st;
  }

  Script::Stmt quotient_decl() {
    Token at = lx_.cur();
    lx_.advance();
    Script::Stmt st;
    st.kind = Script::Kind::Quotient;
    st.line = at.line;
    st.col = at.col;
    st.name = expect_name("quotient ring name");
    declare(st.name, at);
    expect_punct("=");
    Token base_at = lx_.cur();
    st.base = expect_name("base ring name");
    RingPtr base = ring_of(st.base, base_at);
    expect_punct("/");
    Token div_at = lx_.cur();
    st.divisor = expect_name("ideal name");
    auto it = ideals_.find(st.divisor);
    if (it == ideals_.end())
      throw InputError(std::to_string(div_at.line) + ":" + std::to_string(div_at.col) + ": '" +
                       st.divisor + "' is not a declared ideal");
    if (!same_ring(it->second.ring(), base))
      throw InputError(std::to_string(div_at.line) + ":" + std::to_string(div_at.col) +
                       ": ideal '" + st.divisor + "' does not live in ring '" + st.base + "'");
    expect_punct(";");
    st.ring = Ring::quotient_of(base, it->second.gens());
    rings_[st.name] = st.ring;
    current_ring_name_ = st.name;
    return st;
  }

  // term := INT ['*'] varpow {'*' varpow} | varpow {'*' varpow}
  Polynomial parse_polynomial(const RingPtr& R) {
    std::vector<Term> terms;
    bool first = true;
    while (true) {
      int64_t sign = 1;
      if (accept_punct("-")) {
        sign = -1;
      } else if (accept_punct("+")) {
        if (first) fail(lx_.cur(), "a term");
      } else if (!first) {
        break;
      }
      first = false;
      int64_t coeff = 1;
      bool have_coeff = false;
      if (lx_.cur().kind == Tok::Int) {
        coeff = std::stoll(lx_.cur().text);
        lx_.advance();
        have_coeff = true;
      }
      std::vector<int32_t> exps(R->nvars(), 0);
      bool have_var = false;
      bool pending_star = have_coeff && accept_punct("*");
      while (lx_.cur().kind == Tok::Name) {
        pending_star = false;
        Token vt = lx_.cur();
        int idx = R->var_index(vt.text);
        if (idx < 0)
          throw InputError(std::to_string(vt.line) + ":" + std::to_string(vt.col) +
                           ": unknown variable '" + vt.text + "'");
        lx_.advance();
        int32_t e = 1;
        if (accept_punct("^")) e = static_cast<int32_t>(expect_int("exponent"));
        exps[idx] += e;
        have_var = true;
        if (!accept_punct("*")) break;  // '*' is required between variables
        pending_star = true;
      }
      if (pending_star) fail(lx_.cur(), "a variable after '*'");
      if (!have_coeff && !have_var) fail(lx_.cur(), "a term");
      terms.push_back(Term{R->field().reduce(sign * coeff), Monomial(std::move(exps))});
    }
    return R->normalize(std::move(terms));
  }

  Script::Stmt ideal_decl() {
    Token at = lx_.cur();
    lx_.advance();
    Script::Stmt st;
    st.kind = Script::Kind::IdealDecl;
    st.line = at.line;
    st.col = at.col;
    st.name = expect_name("ideal name");
    declare(st.name, at);
    expect_punct("=");
    if (current_ring_name_.empty())
      throw InputError(std::to_string(at.line) + ":" + std::to_string(at.col) +
                       ": declare a ring before its ideals");

    // op call?
    static const std::map<std::string, int> ops = {{"intersect", 2}, {"sum", 2}, {"product", 2},
                                                   {"colon", 2},     {"power", 2},
                                                   {"saturate", 2}};
    if (lx_.cur().kind == Tok::Name && ops.count(lx_.cur().text)) {
      // lookahead: an op name followed by '(' is a call, otherwise it is a
      // polynomial starting with a variable of that name
      std::string op = lx_.cur().text;
      Lexer save = lx_;
      lx_.advance();
      if (accept_punct("(")) {
        Token a_at = lx_.cur();
        std::string aname = expect_name("ideal name");
        expect_punct(",");
        Ideal A = ideal_of(aname, a_at);
        Ideal result = A;
        if (op == "power") {
          long long n = expect_int("power exponent");
          result = ideal_power(A, static_cast<int>(n));
        } else {
          Token b_at = lx_.cur();
          std::string bname = expect_name("ideal name");
          Ideal B = ideal_of(bname, b_at);
          if (op == "intersect")
            result = ideal_intersection(A, B);
          else if (op == "sum")
            result = ideal_sum(A, B);
          else if (op == "product")
            result = ideal_product(A, B);
          else if (op == "colon")
            result = colon(A, B);
          else
            result = saturate(A, B).first;
        }
        expect_punct(")");
        expect_punct(";");
        st.ring_name = ring_name_of(result.ring());
        st.polys = result.gens();
        ideals_.emplace(st.name, result);
        return st;
      }
      lx_ = save;  // not a call: fall through to the polynomial list
    }

    RingPtr R = rings_.at(current_ring_name_);
    st.ring_name = current_ring_name_;
    do {
      st.polys.push_back(parse_polynomial(R));
    } while (accept_punct(","));
    expect_punct(";");
    ideals_.emplace(st.name, Ideal(R, st.polys));
    return st;
  }

  Script::Stmt module_decl() {
    Token at = lx_.cur();
    lx_.advance();
    Script::Stmt st;
    st.kind = Script::Kind::Module;
    st.line = at.line;
    st.col = at.col;
    st.name = expect_name("module name");
    declare(st.name, at);
    expect_punct("=");
    if (current_ring_name_.empty())
      throw InputError(std::to_string(at.line) + ":" + std::to_string(at.col) +
                       ": declare a ring before its modules");
    RingPtr R = rings_.at(current_ring_name_);
    st.ring_name = current_ring_name_;
    do {
      expect_punct("[");
      std::vector<Polynomial> vec;
      do {
        vec.push_back(parse_polynomial(R));
      } while (accept_punct(","));
      expect_punct("]");
      if (!st.vectors.empty() && st.vectors.front().size() != vec.size())
        throw InputError(std::to_string(at.line) + ":" + std::to_string(at.col) +
                         ": module vectors have inconsistent lengths");
      st.vectors.push_back(std::move(vec));
    } while (accept_punct(","));
    expect_punct(";");
    st.rank = static_cast<int>(st.vectors.front().size());
    try {
      modules_.emplace(st.name, GradedSubmodule(R, st.rank, st.vectors));
    } catch (const InputError& e) {
      throw InputError(std::to_string(at.line) + ":" + std::to_string(at.col) + ": " + e.what());
    }
    return st;
  }

  Script::Stmt task_stmt() {
    Token at = lx_.cur();
    lx_.advance();
    Script::Stmt st;
    st.kind = Script::Kind::Task;
    st.line = at.line;
    st.col = at.col;
    st.name = expect_name("task name");
    while (lx_.cur().kind == Tok::Name || lx_.cur().kind == Tok::Int) {
      std::string a = lx_.cur().text;
      lx_.advance();
      if (accept_punct("=")) {
        if (lx_.cur().kind != Tok::Name && lx_.cur().kind != Tok::Int)
          fail(lx_.cur(), "a value after '='");
        st.kwargs.emplace_back(a, lx_.cur().text);
        lx_.advance();
      } else {
        st.args.push_back(a);
      }
    }
    expect_punct(";");
    // arguments must refer to declared names
    for (const std::string& a : st.args) {
      if (!declared_.count(a))
        throw InputError(std::to_string(st.line) + ":" + std::to_string(st.col) +
                         ": task argument '" + a + "' is not declared");
    }
    return st;
  }

  Ideal ideal_of(const std::string& name, const Token& at) {
    auto it = ideals_.find(name);
    if (it == ideals_.end())
      throw InputError(std::to_string(at.line) + ":" + std::to_string(at.col) + ": '" + name +
                       "' is not a declared ideal");
    return it->second;
  }

  std::string ring_name_of(const RingPtr& R) {
    for (const auto& [n, r] : rings_)
      if (same_ring(r, R)) return n;
    return current_ring_name_;
  }

  Lexer lx_;
  std::map<std::string, RingPtr> rings_;
  std::map<std::string, Ideal> ideals_;
  std::map<std::string, GradedSubmodule> modules_;
  std::set<std::string> declared_;
  std::string current_ring_name_;
};

}  // namespace

Script parse_script(const std::string& text) { return Parser(text).parse(); }

bool operator==(const Script& a, const Script& b) {
  if (a.stmts.size() != b.stmts.size()) return false;
  for (size_t i = 0; i < a.stmts.size(); ++i) {
    const auto& x = a.stmts[i];
    const auto& y = b.stmts[i];
    if (x.kind != y.kind || x.name != y.name) return false;
    switch (x.kind) {
      case Script::Kind::Ring:
        if (!same_ring(x.ring, y.ring)) return false;
        break;
      case Script::Kind::Quotient:
        if (x.base != y.base || x.divisor != y.divisor || !same_ring(x.ring, y.ring))
          return false;
        break;
      case Script::Kind::IdealDecl:
        if (x.ring_name != y.ring_name || x.polys != y.polys) return false;
        break;
      case Script::Kind::Module:
        if (x.ring_name != y.ring_name || x.rank != y.rank || x.vectors != y.vectors)
          return false;
        break;
      case Script::Kind::Task:
        if (x.args != y.args || x.kwargs != y.kwargs) return false;
        break;
    }
  }
  return true;
}

std::string print_script(const Script& s) {
  std::ostringstream os;
  std::map<std::string, RingPtr> rings;
  for (const auto& st : s.stmts) {
    switch (st.kind) {
      case Script::Kind::Ring: {
        os << "ring " << st.name << " = char " << st.ring->p() << ", vars";
        for (const auto& v : st.ring->vars()) os << " " << v;
        os << ";\n";
        rings[st.name] = st.ring;
        break;
      }
      case Script::Kind::Quotient: {
        os << "quotient " << st.name << " = " << st.base << " / " << st.divisor << ";\n";
        rings[st.name] = st.ring;
        break;
      }
      case Script::Kind::IdealDecl: {
        const RingPtr& R = rings.at(st.ring_name);
        os << "ideal " << st.name << " = ";
        if (st.polys.empty()) os << "0";
        for (size_t i = 0; i < st.polys.size(); ++i)
          os << (i ? ", " : "") << R->to_string(st.polys[i]);
        os << ";\n";
        break;
      }
      case Script::Kind::Module: {
        const RingPtr& R = rings.at(st.ring_name);
        os << "module " << st.name << " = ";
        for (size_t v = 0; v < st.vectors.size(); ++v) {
          os << (v ? ", [" : "[");
          for (size_t i = 0; i < st.vectors[v].size(); ++i)
            os << (i ? ", " : "") << R->to_string(st.vectors[v][i]);
          os << "]";
        }
        os << ";\n";
        break;
      }
      case Script::Kind::Task: {
        os << "task " << st.name;
        for (const auto& a : st.args) os << " " << a;
        for (const auto& [k, v] : st.kwargs) os << " " << k << "=" << v;
        os << ";\n";
        break;
      }
    }
  }
  return os.str();
}

namespace {

struct Env {
  std::map<std::string, RingPtr> rings;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, GradedSubmodule> modules;
};

std::string task_pos(const Script::Stmt& st) {
  return std::to_string(st.line) + ":" + std::to_string(st.col);
}

const Ideal& env_ideal(const Env& env, const Script::Stmt& st, const std::string& name) {
  auto it = env.ideals.find(name);
  if (it == env.ideals.end())
    throw InputError(task_pos(st) + ": '" + name + "' is not an ideal");
  return it->second;
}

long long kw_int(const Script::Stmt& st, const std::string& key, long long dflt) {
  for (const auto& [k, v] : st.kwargs) {
    if (k == key) {
      try {
        return std::stoll(v);
      } catch (...) {
        throw InputError(task_pos(st) + ": " + key + " expects an integer, got '" + v + "'");
      }
    }
  }
  return dflt;
}

std::string kw_str(const Script::Stmt& st, const std::string& key, const std::string& dflt) {
  for (const auto& [k, v] : st.kwargs)
    if (k == key) return v;
  return dflt;
}

int ring_dim_of(const RingPtr& R) {
  RingPtr amb = R->is_quotient() ? Ring::make(R->p(), R->vars(), R->order()) : R;
  return krull_dim(Ideal(amb, R->quotient_gens()));
}

}  // namespace

std::vector<ExperimentReport> run_script(const Script& s, const LabConfig& cfg) {
  Env env;
  std::vector<ExperimentReport> out;
  for (const auto& st : s.stmts) {
    switch (st.kind) {
      case Script::Kind::Ring:
      case Script::Kind::Quotient:
        env.rings[st.name] = st.ring;
        break;
      case Script::Kind::IdealDecl:
        env.ideals.emplace(st.name, Ideal(env.rings.at(st.ring_name), st.polys));
        break;
      case Script::Kind::Module:
        env.modules.emplace(st.name,
                            GradedSubmodule(env.rings.at(st.ring_name), st.rank, st.vectors));
        break;
      case Script::Kind::Task: {
        LabConfig tcfg = cfg;
        if (!cfg.lock_nmax) tcfg.nmax = static_cast<int>(kw_int(st, "nmax", cfg.nmax));
        if (!cfg.lock_trials) tcfg.trials = static_cast<int>(kw_int(st, "trials", cfg.trials));
        if (!cfg.lock_seed)
          tcfg.seed = static_cast<uint64_t>(kw_int(st, "seed", static_cast<long long>(cfg.seed)));

        auto ring_arg = [&](size_t i) -> RingPtr {
          if (i >= st.args.size())
            throw InputError(task_pos(st) + ": task '" + st.name + "' needs more arguments");
          auto it = env.rings.find(st.args[i]);
          if (it == env.rings.end())
            throw InputError(task_pos(st) + ": '" + st.args[i] + "' is not a ring");
          return it->second;
        };

        if (st.name == "gb") {
          const Ideal& I = env_ideal(env, st, st.args.at(0));
          ExperimentReport rep;
          rep.claim = "groebner_basis";
          rep.entry = st.args[0];
          rep.inputs = "reduced basis under grevlex";
          rep.seed = tcfg.seed;
          nlohmann::ordered_json basis = nlohmann::ordered_json::array();
          for (const Polynomial& g : I.groebner()) basis.push_back(I.ring()->to_string(g));
          rep.evidence["basis"] = basis;
          out.push_back(std::move(rep));
        } else if (st.name == "dim") {
          ExperimentReport rep;
          rep.claim = "krull_dimension";
          rep.entry = st.args.at(0);
          rep.seed = tcfg.seed;
          if (env.rings.count(st.args[0]))
            rep.evidence["dim"] = ring_dim_of(env.rings.at(st.args[0]));
          else
            rep.evidence["dim"] = krull_dim(env_ideal(env, st, st.args[0]));
          out.push_back(std::move(rep));
        } else if (st.name == "depth") {
          ExperimentReport rep;
          rep.claim = "depth";
          rep.entry = st.args.at(0);
          rep.seed = tcfg.seed;
          RingPtr R = ring_arg(0);
          rep.evidence["depth"] = depth(R, derive_seed(tcfg.seed, "depth:" + st.args[0]),
                                        tcfg.structure());
          rep.evidence["dim"] = ring_dim_of(R);
          out.push_back(std::move(rep));
        } else if (st.name == "length") {
          ExperimentReport rep;
          rep.claim = "length";
          rep.entry = st.args.at(0);
          rep.seed = tcfg.seed;
          rep.evidence["lambda"] = length_zero_dim(env_ideal(env, st, st.args[0]));
          out.push_back(std::move(rep));
        } else if (st.name == "coeffs") {
          // coeffs [R] J
          std::string iname = st.args.size() >= 2 ? st.args[1] : st.args.at(0);
          const Ideal& I = env_ideal(env, st, iname);
          if (st.args.size() >= 2 && !same_ring(ring_arg(0), I.ring()))
            throw InputError(task_pos(st) + ": ideal '" + iname + "' does not live in '" +
                             st.args[0] + "'");
          ExperimentReport rep;
          rep.claim = "hilbert_coefficients";
          rep.entry = iname;
          rep.inputs = "nmax=" + std::to_string(tcfg.nmax);
          rep.seed = tcfg.seed;
          try {
            int d = ring_dim_of(I.ring());
            HilbertSamuelTable T = hs_sample(I, tcfg.nmax + 2);
            std::vector<long> head(T.values.begin(), T.values.end() - 2);
            EVector fit = fit_evector(head, d);
            EVector refit = fit_evector(T.values, d);
            if (fit.e != refit.e) throw UnstableError("pseudo-stabilization detected");
            nlohmann::ordered_json vals = nlohmann::ordered_json::array();
            for (int n = 0; n <= tcfg.nmax; ++n) vals.push_back(T.values[n]);
            rep.evidence["values"] = vals;
            nlohmann::ordered_json e = nlohmann::ordered_json::array();
            for (long v : refit.e) e.push_back(v);
            rep.evidence["e"] = e;
            rep.evidence["n0"] = refit.n0;
          } catch (const UnstableError& ex) {
            rep.verdict = Verdict::Unstable;
            rep.evidence["error"] = ex.what();
          }
          out.push_back(std::move(rep));
        } else if (st.name == "sign") {
          CorpusEntry entry;
          entry.name = st.args.at(0);
          entry.ring = ring_arg(0);
          std::string expect = kw_str(st, "expect", "");
          if (expect != "cm" && expect != "noncm")
            throw InputError(task_pos(st) + ": sign task needs expect=cm or expect=noncm");
          entry.flags.cm_expected = expect == "cm";
          entry.flags.constructed_unmixed = kw_str(st, "unmixed", "false") == "true";
          out.push_back(sign_test(entry, tcfg));
        } else if (st.name == "northcott") {
          CorpusEntry entry{st.args.at(0), ring_arg(0), {true, true, false}, ""};
          out.push_back(
              northcott_check(entry, env_ideal(env, st, st.args.at(1)), st.args[1], tcfg));
        } else if (st.name == "gotonishida") {
          CorpusEntry entry{st.args.at(0), ring_arg(0), {false, true, false}, ""};
          out.push_back(
              goto_nishida_check(entry, env_ideal(env, st, st.args.at(1)), st.args[1], tcfg));
        } else if (st.name == "huckabamarley") {
          CorpusEntry entry{st.args.at(0), ring_arg(0), {true, true, false}, ""};
          out.push_back(huckaba_marley_check(entry, env_ideal(env, st, st.args.at(1)),
                                             env_ideal(env, st, st.args.at(2)),
                                             "I = " + st.args[1] + ", J = " + st.args[2], tcfg));
        } else if (st.name == "modulecheck") {
          auto it = env.modules.find(st.args.at(0));
          if (it == env.modules.end())
            throw InputError(task_pos(st) + ": '" + st.args[0] + "' is not a module");
          ModuleEntry me{st.args[0], it->second, std::nullopt};
          std::string expect = kw_str(st, "free", "");
          if (expect == "true") me.expect_free = true;
          if (expect == "false") me.expect_free = false;
          out.push_back(module_check(me, tcfg));
        } else {
          throw InputError(task_pos(st) + ": unknown task '" + st.name + "'");
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace chern
