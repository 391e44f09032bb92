#include "coxkit/coxeter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace coxkit {

std::string label_str(unsigned m) { return label_is_finite(m) ? std::to_string(m) : "oo"; }

ParseError::ParseError(int line_, int col_, const std::string& what_)
    : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                         std::to_string(col_) + ": " + what_),
      line(line_),
      col(col_) {}

SystemPtr CoxeterSystem::create(std::vector<std::string> names,
                                std::vector<std::vector<unsigned>> matrix) {
  const size_t n = names.size();
  if (matrix.size() != n) throw std::invalid_argument("CoxeterSystem: matrix size mismatch");
  if (std::set<std::string>(names.begin(), names.end()).size() != n)
    throw std::invalid_argument("CoxeterSystem: duplicate generator name");
  std::set<unsigned> finite_labels;
  for (size_t s = 0; s < n; ++s) {
    if (matrix[s].size() != n) throw std::invalid_argument("CoxeterSystem: matrix not square");
    if (matrix[s][s] != 1) throw std::invalid_argument("CoxeterSystem: diagonal labels must be 1");
    for (size_t t = 0; t < n; ++t) {
      if (s == t) continue;
      if (matrix[s][t] != matrix[t][s])
        throw std::invalid_argument("CoxeterSystem: asymmetric labels");
      if (label_is_finite(matrix[s][t])) {
        if (matrix[s][t] < 2)
          throw std::invalid_argument("CoxeterSystem: off-diagonal labels must be >= 2");
        finite_labels.insert(matrix[s][t]);
      }
    }
  }
  auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
  sys->names_ = std::move(names);
  sys->matrix_ = std::move(matrix);
  sys->field_ = FieldContext::make(finite_labels);
  sys->form_.assign(n, std::vector<FieldElem>(n));
  for (size_t s = 0; s < n; ++s)
    for (size_t t = 0; t < n; ++t)
      sys->form_[s][t] = sys->field_->form_entry(s == t ? 1 : sys->matrix_[s][t]);
  return sys;
}

int CoxeterSystem::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> CoxeterSystem::components(bool (*keep)(unsigned)) const {
  const int n = rank();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack = {s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int t = 0; t < n; ++t) {
        if (t == v || comp[t] != -1 || !keep(matrix_[v][t])) continue;
        comp[t] = comp[v];
        stack.push_back(t);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<std::vector<int>> CoxeterSystem::odd_components() const {
  return components(
      [](unsigned m) { return label_is_finite(m) && m >= 3 && m % 2 == 1; });
}

std::vector<int> CoxeterSystem::odd_component_of(int s) const {
  for (auto& comp : odd_components())
    if (std::binary_search(comp.begin(), comp.end(), s)) return comp;
  throw std::logic_error("odd_component_of: index out of range");
}

SystemPtr CoxeterSystem::restriction(const std::vector<int>& subset) const {
  std::vector<std::string> names;
  std::vector<std::vector<unsigned>> matrix(subset.size(),
                                            std::vector<unsigned>(subset.size()));
  for (size_t i = 0; i < subset.size(); ++i) {
    names.push_back(names_.at(subset[i]));
    for (size_t j = 0; j < subset.size(); ++j) matrix[i][j] = label(subset[i], subset[j]);
  }
  return create(std::move(names), std::move(matrix));
}

namespace {

struct Token {
  std::string text;
  int line, col;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
    } else if (c == ';') {
      tokens.push_back({";", line, col});
      ++col;
      ++i;
    } else {
      int start_col = col;
      std::string word;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != ';' && text[i] != '#') {
        word += text[i];
        ++col;
        ++i;
      }
      tokens.push_back({std::move(word), line, start_col});
    }
  }
  return tokens;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

SystemPtr parse_system(const std::string& text) {
  auto tokens = tokenize(text);
  size_t pos = 0;
  auto peek = [&]() -> const Token* { return pos < tokens.size() ? &tokens[pos] : nullptr; };
  auto fail_at_end = [&](const std::string& msg) -> ParseError {
    if (tokens.empty()) return ParseError(1, 1, msg);
    const Token& t = tokens.back();
    return ParseError(t.line, t.col + static_cast<int>(t.text.size()), msg);
  };

  std::vector<std::string> names;
  std::map<std::string, int> index;

  const Token* t = peek();
  if (!t || t->text != "nodes")
    throw t ? ParseError(t->line, t->col, "expected 'nodes'") : fail_at_end("expected 'nodes'");
  ++pos;
  while ((t = peek()) && t->text != ";") {
    if (t->text == "nodes" || t->text == "edge")
      throw ParseError(t->line, t->col, "missing ';' after nodes statement");
    if (is_integer(t->text) || t->text == "oo")
      throw ParseError(t->line, t->col, "node id must not be a label token");
    if (index.count(t->text)) throw ParseError(t->line, t->col, "duplicate node '" + t->text + "'");
    index[t->text] = static_cast<int>(names.size());
    names.push_back(t->text);
    ++pos;
  }
  if (t) ++pos;  // consume ';'; end of input also closes the statement
  if (names.empty()) throw ParseError(tokens[0].line, tokens[0].col, "no nodes declared");

  const size_t n = names.size();
  std::vector<std::vector<unsigned>> matrix(n, std::vector<unsigned>(n, 2));
  for (size_t s = 0; s < n; ++s) matrix[s][s] = 1;
  std::vector<std::vector<bool>> declared(n, std::vector<bool>(n, false));

  while ((t = peek())) {
    if (t->text != "edge") throw ParseError(t->line, t->col, "expected 'edge'");
    ++pos;
    const Token* args[3];
    for (int k = 0; k < 3; ++k) {
      args[k] = peek();
      if (!args[k] || args[k]->text == ";")
        throw args[k] ? ParseError(args[k]->line, args[k]->col, "edge needs two node ids and a label")
                      : fail_at_end("edge needs two node ids and a label");
      ++pos;
    }
    t = peek();
    if (t && t->text != ";")
      throw ParseError(t->line, t->col, "missing ';' after edge statement");
    if (t) ++pos;

    int endpoints[2];
    for (int k = 0; k < 2; ++k) {
      auto it = index.find(args[k]->text);
      if (it == index.end())
        throw ParseError(args[k]->line, args[k]->col, "unknown node '" + args[k]->text + "'");
      endpoints[k] = it->second;
    }
    unsigned m;
    if (args[2]->text == "oo") {
      m = infinite_label;
    } else if (is_integer(args[2]->text)) {
      unsigned long v = std::stoul(args[2]->text);
      if (v < 2) throw ParseError(args[2]->line, args[2]->col, "edge label must be >= 2 or oo");
      m = static_cast<unsigned>(v);
    } else {
      throw ParseError(args[2]->line, args[2]->col, "label must be an integer >= 2 or oo");
    }
    int a = endpoints[0], b = endpoints[1];
    if (a == b) throw ParseError(args[0]->line, args[0]->col, "edge endpoints must differ");
    if (declared[a][b] && matrix[a][b] != m)
      throw ParseError(args[2]->line, args[2]->col,
                       "conflicting labels for edge " + names[a] + " " + names[b]);
    declared[a][b] = declared[b][a] = true;
    matrix[a][b] = matrix[b][a] = m;
  }

  return CoxeterSystem::create(std::move(names), std::move(matrix));
}

std::string render_dsl(const CoxeterSystem& sys) {
  std::ostringstream os;
  os << "nodes";
  for (const auto& name : sys.names()) os << " " << name;
  os << " ;";
  for (int s = 0; s < sys.rank(); ++s)
    for (int t = s + 1; t < sys.rank(); ++t)
      if (sys.label(s, t) != 2) os << " edge " << sys.name(s) << " " << sys.name(t) << " "
                                   << label_str(sys.label(s, t)) << " ;";
  return os.str();
}

}  // namespace coxkit
