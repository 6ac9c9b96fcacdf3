#include "quigen/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "quigen/errors.hpp"

namespace quigen {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// one summand of a relation: optional scalar, '*', dot-separated arrow names
struct RawTerm {
  std::string coeff;  // may be empty (meaning 1)
  std::vector<std::string> path;
  bool negate = false;
};

std::vector<RawTerm> parse_relation_expr(const std::string& expr, int line) {
  std::vector<RawTerm> terms;
  size_t i = 0;
  auto skip_ws = [&] { while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i; };
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= expr.size()) {
      if (first) throw ParseError(line, "empty relation");
      break;
    }
    RawTerm t;
    if (expr[i] == '+' || expr[i] == '-') {
      t.negate = (expr[i] == '-');
      ++i;
    } else if (!first) {
      throw ParseError(line, "expected '+' or '-' between relation terms");
    }
    skip_ws();
    size_t j = i;
    while (j < expr.size() && !std::isspace(static_cast<unsigned char>(expr[j])) &&
           expr[j] != '+' && expr[j] != '-')
      ++j;
    std::string tok = expr.substr(i, j - i);
    if (tok.empty()) throw ParseError(line, "dangling sign in relation");
    i = j;
    size_t star = tok.find('*');
    std::string path = tok;
    if (star != std::string::npos) {
      t.coeff = tok.substr(0, star);
      path = tok.substr(star + 1);
      if (t.coeff.empty()) throw ParseError(line, "empty coefficient");
    }
    size_t p = 0;
    while (p <= path.size()) {
      size_t dot = path.find('.', p);
      std::string arr = path.substr(p, dot == std::string::npos ? std::string::npos : dot - p);
      if (!valid_name(arr)) throw ParseError(line, "bad arrow name '" + arr + "'");
      t.path.push_back(arr);
      if (dot == std::string::npos) break;
      p = dot + 1;
    }
    terms.push_back(std::move(t));
    first = false;
  }
  return terms;
}

}  // namespace

AlgebraSpec parse_algebra_text(const std::string& text, const std::string& label) {
  AlgebraSpec spec;
  spec.label = label;
  bool saw_field = false, saw_vertices = false, saw_nilpotency = false;
  std::map<std::string, int> arrow_of;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = strip(raw);
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string key;
    ls >> key;
    if (key == "field") {
      std::string rest = strip(s.substr(5));
      if (rest == "Q") {
        spec.field = Field::rationals();
      } else if (rest.rfind("GF", 0) == 0) {
        std::string num = strip(rest.substr(2));
        if (!num.empty() && num.front() == '(' && num.back() == ')')
          num = strip(num.substr(1, num.size() - 2));
        try {
          spec.field = Field::prime(std::stol(num));
        } catch (const std::exception& e) {
          throw ParseError(line, std::string("bad field: ") + e.what());
        }
      } else {
        throw ParseError(line, "field must be Q or GF(p)");
      }
      saw_field = true;
    } else if (key == "vertices") {
      int n = 0;
      if (!(ls >> n) || n <= 0) throw ParseError(line, "vertices needs a positive count");
      spec.n_vertices = n;
      saw_vertices = true;
    } else if (key == "arrow") {
      // arrow NAME : i -> j
      auto toks = split_ws(s.substr(5));
      std::string joined;
      for (const auto& t : toks) joined += t;
      size_t colon = joined.find(':');
      size_t arr = joined.find("->");
      if (colon == std::string::npos || arr == std::string::npos || arr < colon)
        throw ParseError(line, "arrow syntax is: arrow name : i -> j");
      std::string name = joined.substr(0, colon);
      if (!valid_name(name)) throw ParseError(line, "bad arrow name '" + name + "'");
      if (arrow_of.count(name)) throw ParseError(line, "duplicate arrow '" + name + "'");
      if (!saw_vertices) throw ParseError(line, "arrow before vertices line");
      int i = 0, j = 0;
      try {
        i = std::stoi(joined.substr(colon + 1, arr - colon - 1));
        j = std::stoi(joined.substr(arr + 2));
      } catch (const std::exception&) {
        throw ParseError(line, "arrow endpoints must be integers");
      }
      if (i < 1 || i > spec.n_vertices || j < 1 || j > spec.n_vertices)
        throw ParseError(line, "arrow endpoint out of range");
      arrow_of[name] = static_cast<int>(spec.arrows.size());
      spec.arrows.push_back(Arrow{name, i - 1, j - 1});
    } else if (key == "relation") {
      auto raw_terms = parse_relation_expr(s.substr(8), line);
      Relation r;
      r.line = line;
      for (const auto& rt : raw_terms) {
        RelationTerm term;
        term.coeff = spec.field.reduce(Scalar(1));
        if (!rt.coeff.empty()) {
          try {
            term.coeff = spec.field.parse(rt.coeff);
          } catch (const std::exception&) {
            throw ParseError(line, "bad coefficient '" + rt.coeff + "'");
          }
        }
        if (rt.negate) term.coeff = spec.field.neg(term.coeff);
        if (spec.field.is_zero(term.coeff))
          throw ParseError(line, "zero coefficient in relation");
        int prev_tgt = -1;
        for (const auto& an : rt.path) {
          auto it = arrow_of.find(an);
          if (it == arrow_of.end())
            throw ParseError(line, "unknown arrow '" + an + "'");
          const Arrow& a = spec.arrows[it->second];
          if (prev_tgt >= 0 && a.src != prev_tgt)
            throw ParseError(line, "path is not composable at '" + an + "'");
          prev_tgt = a.tgt;
          term.arrows.push_back(it->second);
        }
        int len = static_cast<int>(term.arrows.size());
        int src = spec.arrows[term.arrows.front()].src;
        int tgt = spec.arrows[term.arrows.back()].tgt;
        if (r.terms.empty()) {
          r.src = src;
          r.tgt = tgt;
          r.length = len;
        } else {
          if (src != r.src || tgt != r.tgt)
            throw ParseError(line, "relation terms are not parallel");
          if (len != r.length)
            throw ParseError(line,
                             "relation terms have different lengths; only "
                             "length-homogeneous relations are supported");
        }
        r.terms.push_back(std::move(term));
      }
      if (r.length < 2)
        throw ParseError(line, "relations must have path length at least 2");
      spec.relations.push_back(std::move(r));
    } else if (key == "nilpotency") {
      int n = 0;
      if (!(ls >> n) || n < 1) throw ParseError(line, "nilpotency needs a positive bound");
      spec.nilpotency = n;
      saw_nilpotency = true;
    } else {
      throw ParseError(line, "unknown directive '" + key + "'");
    }
  }
  if (!saw_field) throw ParseError(0, "missing field line");
  if (!saw_vertices) throw ParseError(0, "missing vertices line");
  if (!saw_nilpotency) throw ParseError(0, "missing nilpotency line");
  for (const auto& r : spec.relations)
    if (r.length > spec.nilpotency)
      throw ParseError(r.line, "relation length exceeds the nilpotency bound");
  return spec;
}

AlgebraPtr load_algebra_file(const std::string& path) {
  std::string stem = path;
  size_t slash = stem.find_last_of('/');
  if (slash != std::string::npos) stem = stem.substr(slash + 1);
  size_t dot = stem.find_last_of('.');
  if (dot != std::string::npos) stem = stem.substr(0, dot);
  return Algebra::build(parse_algebra_text(read_file(path), stem));
}

RepPtr parse_module_text(const std::string& text, AlgebraPtr alg) {
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  std::vector<int> dims;
  std::vector<Mat> maps;
  bool saw_dims = false;
  const Field& F = alg->field();
  while (std::getline(is, raw)) {
    ++line;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = strip(raw);
    if (s.empty()) continue;
    auto toks = split_ws(s);
    if (toks[0] == "dims") {
      if (saw_dims) throw ParseError(line, "duplicate dims line");
      if (static_cast<int>(toks.size()) - 1 != alg->vertices())
        throw ParseError(line, "dims needs one entry per vertex");
      for (size_t k = 1; k < toks.size(); ++k) {
        int d = 0;
        try {
          d = std::stoi(toks[k]);
        } catch (const std::exception&) {
          throw ParseError(line, "bad dimension '" + toks[k] + "'");
        }
        if (d < 0) throw ParseError(line, "negative dimension");
        dims.push_back(d);
      }
      saw_dims = true;
      maps.clear();
      for (int a = 0; a < alg->n_arrows(); ++a)
        maps.emplace_back(dims[alg->arrow(a).tgt], dims[alg->arrow(a).src]);
    } else if (toks[0] == "map") {
      if (!saw_dims) throw ParseError(line, "map before dims line");
      if (toks.size() < 2) throw ParseError(line, "map needs an arrow name");
      int a = alg->arrow_index(toks[1]);
      if (a < 0) throw ParseError(line, "unknown arrow '" + toks[1] + "'");
      Mat& m = maps[a];
      std::vector<Scalar> entries;
      for (size_t k = 2; k < toks.size(); ++k) {
        if (toks[k] == ";") continue;  // optional row separator
        try {
          entries.push_back(F.parse(toks[k]));
        } catch (const std::exception&) {
          throw ParseError(line, "bad entry '" + toks[k] + "'");
        }
      }
      if (static_cast<int>(entries.size()) != m.nrows * m.ncols)
        throw ParseError(line, "map " + toks[1] + " needs " +
                                   std::to_string(m.nrows * m.ncols) +
                                   " entries (row-major), got " +
                                   std::to_string(entries.size()));
      for (int r = 0; r < m.nrows; ++r)
        for (int c = 0; c < m.ncols; ++c) m.at(r, c) = entries[r * m.ncols + c];
    } else {
      throw ParseError(line, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!saw_dims) throw ParseError(0, "missing dims line");
  auto M = make_rep(alg, std::move(dims), std::move(maps));
  if (auto err = check_module(*M)) throw Error("module: " + *err);
  return M;
}

RepPtr load_module_file(const std::string& path, AlgebraPtr alg) {
  return parse_module_text(read_file(path), alg);
}

std::string module_to_text(const Representation& M) {
  const auto& alg = *M.alg;
  const Field& F = alg.field();
  std::ostringstream os;
  os << "dims";
  for (int d : M.dims) os << " " << d;
  os << "\n";
  for (int a = 0; a < alg.n_arrows(); ++a) {
    if (is_zero(F, M.maps[a])) continue;
    os << "map " << alg.arrow(a).name;
    for (int r = 0; r < M.maps[a].nrows; ++r) {
      for (int c = 0; c < M.maps[a].ncols; ++c)
        os << " " << F.str(M.maps[a].at(r, c));
      if (r + 1 < M.maps[a].nrows) os << " ;";
    }
    os << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed for " + path);
}

}  // namespace quigen
