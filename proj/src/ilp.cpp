#include "symtree/ilp.hpp"

#include <algorithm>
#include <charconv>

#include "symtree/error.hpp"

namespace symtree {

namespace {

bool valid_name_char(char c) {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) return true;
  return std::string_view("_.!#$%&/,;?@'|~{}").find(c) != std::string_view::npos;
}

bool valid_name(std::string_view name) {
  if (name.empty() || name.size() > 255) return false;
  if ((name[0] >= '0' && name[0] <= '9') || name[0] == '.') return false;
  if (name.front() == 'e' || name.front() == 'E') {
    // "e12" style tokens would read as exponents in some LP readers.
    if (name.size() > 1 && std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return false;
    }
  }
  return std::all_of(name.begin(), name.end(), valid_name_char);
}

}  // namespace

std::size_t IlpModel::add_variable(std::string name) {
  if (name.empty()) throw InputError("variable names cannot be empty");
  const std::size_t id = names_.size();
  if (!index_.emplace(name, id).second) throw InputError("duplicate variable name: " + name);
  names_.push_back(std::move(name));
  return id;
}

std::vector<Term> IlpModel::normalize(std::vector<Term> terms) const {
  std::vector<Term> out;
  for (const Term& t : terms) {
    if (t.var >= names_.size()) throw InputError("term references an undeclared variable");
    auto it = std::find_if(out.begin(), out.end(), [&](const Term& o) { return o.var == t.var; });
    if (it == out.end()) {
      out.push_back(t);
    } else {
      it->coef += t.coef;
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coef == 0; });
  return out;
}

void IlpModel::add_constraint(std::vector<Term> terms, Sense sense, std::int64_t rhs) {
  auto norm = normalize(std::move(terms));
  if (norm.empty()) throw InputError("constraint has no terms");
  constraints_.push_back({std::move(norm), sense, rhs});
}

void IlpModel::set_objective(std::vector<Term> terms) { objective_ = normalize(std::move(terms)); }

void IlpModel::add_comment(std::string line) {
  if (line.find('\n') != std::string::npos) throw InputError("comment lines cannot contain newlines");
  comments_.push_back(std::move(line));
}

std::optional<std::size_t> IlpModel::find_variable(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::int64_t IlpModel::evaluate(const std::vector<std::uint8_t>& assignment) const {
  std::int64_t total = 0;
  for (const Term& t : objective_) total += t.coef * assignment.at(t.var);
  return total;
}

bool IlpModel::satisfies(const std::vector<std::uint8_t>& assignment) const {
  if (assignment.size() != names_.size()) return false;
  for (const auto& c : constraints_) {
    std::int64_t act = 0;
    for (const Term& t : c.terms) act += t.coef * assignment[t.var];
    const bool ok = c.sense == Sense::le ? act <= c.rhs : c.sense == Sense::ge ? act >= c.rhs : act == c.rhs;
    if (!ok) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kLineWidth = 78;

class LineWriter {
 public:
  explicit LineWriter(std::string& out) : out_(out) {}

  void start(std::string head) {
    line_ = " " + std::move(head);
    bare_ = true;
  }

  void token(std::string_view tok) {
    if (!bare_ && line_.size() + 1 + tok.size() > kLineWidth) {
      out_ += line_;
      out_ += '\n';
      line_ = "  ";
    }
    line_ += ' ';
    line_ += tok;
    bare_ = false;
  }

  void finish() {
    out_ += line_;
    out_ += '\n';
    line_.clear();
  }

 private:
  std::string& out_;
  std::string line_;
  bool bare_ = true;
};

void write_terms(LineWriter& w, const IlpModel& m, const std::vector<Term>& terms) {
  bool first = true;
  for (const Term& t : terms) {
    std::string tok;
    const std::int64_t mag = t.coef < 0 ? -t.coef : t.coef;
    if (t.coef < 0) {
      tok = "- ";
    } else if (!first) {
      tok = "+ ";
    }
    if (mag != 1) tok += std::to_string(mag) + " ";
    tok += m.variable(t.var);
    w.token(tok);
    first = false;
  }
}

std::string_view sense_text(Sense s) {
  switch (s) {
    case Sense::le:
      return "<=";
    case Sense::ge:
      return ">=";
    case Sense::eq:
      break;
  }
  return "=";
}

}  // namespace

std::string export_lp(const IlpModel& m) {
  for (const auto& name : m.variables()) {
    if (!valid_name(name)) throw InputError("not a valid LP variable name: " + name);
  }
  std::string out;
  for (const auto& c : m.comments()) out += "\\ " + c + "\n";
  LineWriter w(out);
  out += "Minimize\n";
  w.start("obj:");
  write_terms(w, m, m.objective());
  w.finish();
  out += "Subject To\n";
  for (std::size_t k = 0; k < m.constraint_count(); ++k) {
    const auto& c = m.constraints()[k];
    w.start("c" + std::to_string(k + 1) + ":");
    write_terms(w, m, c.terms);
    w.token(std::string(sense_text(c.sense)) + " " + std::to_string(c.rhs));
    w.finish();
  }
  out += "Binary\n";
  for (const auto& name : m.variables()) out += " " + name + "\n";
  out += "End\n";
  return out;
}

namespace {

class LpReader {
 public:
  explicit LpReader(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.starts_with("\\")) {
        if (!tokens_.empty()) throw InputError("LP: comments are only supported before the model");
        std::string_view body = line.substr(1);
        if (body.starts_with(" ")) body.remove_prefix(1);
        comments_.emplace_back(body);
        continue;
      }
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) tokens_.emplace_back(line.substr(i, j - i));
        i = j;
      }
    }
  }

  IlpModel read() {
    IlpModel m;
    for (auto& c : comments_) m.add_comment(c);
    expect("Minimize");
    expect("obj:");
    std::vector<std::pair<std::int64_t, std::string>> objective;
    while (!at("Subject")) objective.push_back(read_term());
    expect("Subject");
    expect("To");
    struct Raw {
      std::vector<std::pair<std::int64_t, std::string>> terms;
      Sense sense;
      std::int64_t rhs;
    };
    std::vector<Raw> raws;
    while (!at("Binary")) {
      const std::string name = next();
      if (name != "c" + std::to_string(raws.size() + 1) + ":") throw InputError("LP: unexpected constraint name " + name);
      Raw r{};
      while (!at("<=") && !at(">=") && !at("=")) r.terms.push_back(read_term());
      const std::string s = next();
      r.sense = s == "<=" ? Sense::le : s == ">=" ? Sense::ge : Sense::eq;
      r.rhs = parse_int(next());
      raws.push_back(std::move(r));
    }
    expect("Binary");
    while (!at("End")) m.add_variable(next());
    expect("End");
    if (pos_ != tokens_.size()) throw InputError("LP: trailing content after End");
    auto resolve = [&](const std::vector<std::pair<std::int64_t, std::string>>& raw) {
      std::vector<Term> terms;
      for (const auto& [coef, name] : raw) {
        auto id = m.find_variable(name);
        if (!id) throw InputError("LP: variable not declared binary: " + name);
        terms.push_back({*id, coef});
      }
      return terms;
    };
    m.set_objective(resolve(objective));
    for (const auto& r : raws) m.add_constraint(resolve(r.terms), r.sense, r.rhs);
    return m;
  }

 private:
  bool at(std::string_view tok) const { return pos_ < tokens_.size() && tokens_[pos_] == tok; }

  std::string next() {
    if (pos_ >= tokens_.size()) throw InputError("LP: unexpected end of input");
    return tokens_[pos_++];
  }

  void expect(std::string_view tok) {
    if (!at(tok)) throw InputError("LP: expected " + std::string(tok));
    ++pos_;
  }

  static std::int64_t parse_int(const std::string& s) {
    std::int64_t v = 0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || p != e) throw InputError("LP: expected an integer, got " + s);
    return v;
  }

  static bool is_number(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  }

  std::pair<std::int64_t, std::string> read_term() {
    std::int64_t sign = 1;
    if (at("+")) {
      ++pos_;
    } else if (at("-")) {
      ++pos_;
      sign = -1;
    }
    std::int64_t coef = 1;
    std::string tok = next();
    if (is_number(tok)) {
      coef = parse_int(tok);
      tok = next();
    }
    return {sign * coef, tok};
  }

  std::vector<std::string> comments_;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

class BranchAndBound {
 public:
  BranchAndBound(const IlpModel& m, const SolveBudget& budget)
      : m_(m), budget_(budget), start_(std::chrono::steady_clock::now()) {
    const std::size_t n = m.variable_count();
    occurs_.resize(n);
    obj_.assign(n, 0);
    value_.assign(n, 0);
    min_act_.assign(m.constraint_count(), 0);
    max_act_.assign(m.constraint_count(), 0);
    for (std::size_t k = 0; k < m.constraint_count(); ++k) {
      for (const Term& t : m.constraints()[k].terms) {
        occurs_[t.var].push_back({k, t.coef});
        (t.coef < 0 ? min_act_[k] : max_act_[k]) += t.coef;
      }
    }
    for (const Term& t : m.objective()) {
      obj_[t.var] = t.coef;
      if (t.coef < 0) neg_free_ += t.coef;
    }
  }

  SolveResult run() {
    SolveResult out;
    bool root_ok = true;
    for (std::size_t k = 0; k < m_.constraint_count(); ++k) root_ok = root_ok && !violated(k);
    if (root_ok) dfs(0);
    out.nodes = nodes_;
    if (best_) {
      out.objective = best_;
      out.assignment = best_assignment_;
    }
    out.status = exhausted_ ? SolveStatus::budget_exhausted : best_ ? SolveStatus::optimal : SolveStatus::infeasible;
    return out;
  }

 private:
  bool violated(std::size_t k) const {
    const auto& c = m_.constraints()[k];
    switch (c.sense) {
      case Sense::le:
        return min_act_[k] > c.rhs;
      case Sense::ge:
        return max_act_[k] < c.rhs;
      case Sense::eq:
        break;
    }
    return min_act_[k] > c.rhs || max_act_[k] < c.rhs;
  }

  // Applies (sign = +1) or reverts (sign = -1) fixing `v` to `val`.
  bool apply(std::size_t v, std::uint8_t val, int sign) {
    bool ok = true;
    for (const auto& [k, a] : occurs_[v]) {
      if (a > 0) {
        (val ? min_act_[k] : max_act_[k]) += sign * (val ? a : -a);
      } else {
        (val ? max_act_[k] : min_act_[k]) += sign * (val ? a : -a);
      }
      if (sign > 0 && violated(k)) ok = false;
    }
    const std::int64_t c = obj_[v];
    fixed_obj_ += sign * c * val;
    if (c < 0) neg_free_ -= sign * c;
    return ok;
  }

  bool out_of_budget() {
    if (nodes_ > budget_.max_nodes) return true;
    if (budget_.time_limit && (nodes_ & 0xfff) == 0) {
      return std::chrono::steady_clock::now() - start_ > *budget_.time_limit;
    }
    return false;
  }

  void dfs(std::size_t depth) {
    if (depth == value_.size()) {
      best_ = fixed_obj_;
      best_assignment_ = value_;
      return;
    }
    for (std::uint8_t val : {std::uint8_t{1}, std::uint8_t{0}}) {
      ++nodes_;
      if (out_of_budget()) {
        exhausted_ = true;
        return;
      }
      value_[depth] = val;
      const bool ok = apply(depth, val, +1);
      if (ok && (!best_ || fixed_obj_ + neg_free_ < *best_)) dfs(depth + 1);
      apply(depth, val, -1);
      if (exhausted_) return;
    }
    value_[depth] = 0;
  }

  const IlpModel& m_;
  SolveBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> occurs_;
  std::vector<std::int64_t> obj_;
  std::vector<std::uint8_t> value_;
  std::vector<std::int64_t> min_act_;
  std::vector<std::int64_t> max_act_;
  std::int64_t fixed_obj_ = 0;
  std::int64_t neg_free_ = 0;
  std::optional<std::int64_t> best_;
  std::vector<std::uint8_t> best_assignment_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

IlpModel parse_lp(std::string_view text) { return LpReader(text).read(); }

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal:
      return "optimal";
    case SolveStatus::infeasible:
      return "infeasible";
    case SolveStatus::budget_exhausted:
      break;
  }
  return "budget-exhausted";
}

SolveResult solve_binary(const IlpModel& m, const SolveBudget& budget) {
  SolveResult r = BranchAndBound(m, budget).run();
  if (r.status == SolveStatus::optimal && (!m.satisfies(r.assignment) || m.evaluate(r.assignment) != *r.objective)) {
    throw InvariantError("solver returned an assignment that does not check out");
  }
  return r;
}

}  // namespace symtree
