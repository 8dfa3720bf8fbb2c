#include "repvar/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "repvar/canonical.hpp"

namespace repvar {

namespace {

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// A cursor over one line; columns are 1-based.
struct Cursor {
  const std::string& s;
  std::size_t line;
  std::size_t pos = 0;
  std::size_t col_offset = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, pos + 1 + col_offset, msg); }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip_ws();
    std::size_t b = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) fail("expected a name");
    return s.substr(b, pos - b);
  }
  // Digits with an optional "/digits".
  mpq_class number() {
    skip_ws();
    std::size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) fail("expected a number");
    std::string txt = s.substr(b, pos - b);
    if (pos < s.size() && s[pos] == '/') {
      std::size_t slash = pos++;
      std::size_t d = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (d == pos) {
        pos = slash;
        return mpq_class(txt);
      }
      std::string den = s.substr(d, pos - d);
      if (den.find_first_not_of('0') == std::string::npos) {
        pos = d;
        fail("zero denominator");
      }
      mpq_class q(txt + "/" + den);
      q.canonicalize();
      return q;
    }
    return mpq_class(txt);
  }
  std::size_t count() {
    mpq_class q = number();
    if (q.get_den() != 1 || !q.get_num().fits_ulong_p()) fail("expected a nonnegative integer");
    return q.get_num().get_ui();
  }
};

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur)) {
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    std::size_t hash = cur.find('#');
    if (hash != std::string::npos) cur.erase(hash);
    out.push_back(cur);
  }
  return out;
}

std::string first_word(const std::string& line) {
  std::istringstream in(line);
  std::string w;
  in >> w;
  return w;
}

// One truncated-polynomial entry: sum of [c][*]t[^k] terms.
std::vector<mpq_class> parse_entry(Cursor& c, std::size_t order) {
  std::vector<mpq_class> coeffs(order);
  bool first = true;
  for (;;) {
    char ch = c.peek();
    int sign = 1;
    if (ch == '+' || ch == '-') {
      ++c.pos;
      sign = ch == '-' ? -1 : 1;
    } else if (!first) {
      break;
    }
    first = false;
    mpq_class coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coef = c.number();
      have_coef = true;
      if (c.peek() == '*') ++c.pos;
    }
    std::size_t power = 0;
    if (c.peek() == 't') {
      ++c.pos;
      power = 1;
      if (c.accept('^')) power = c.count();
    } else if (!have_coef) {
      c.fail("expected a matrix entry");
    }
    if (power >= order) {
      if (order == 1) c.fail("entry mentions t over a field");
      continue;  // vanishes in k[t]/(t^order)
    }
    coeffs[power] += sign * coef;
  }
  return coeffs;
}

// Nested [[a,b],[c,d]] or flat [a, b; c, d].
std::vector<std::vector<std::vector<mpq_class>>> parse_matrix(Cursor& c, std::size_t order) {
  std::vector<std::vector<std::vector<mpq_class>>> rows;
  c.expect('[');
  if (c.accept(']')) return rows;
  if (c.peek() == '[') {
    do {
      c.expect('[');
      std::vector<std::vector<mpq_class>> row;
      if (!c.accept(']')) {
        do row.push_back(parse_entry(c, order));
        while (c.accept(','));
        c.expect(']');
      }
      rows.push_back(std::move(row));
    } while (c.accept(','));
    c.expect(']');
  } else {
    std::vector<std::vector<mpq_class>> row;
    for (;;) {
      row.push_back(parse_entry(c, order));
      if (c.accept(',')) continue;
      if (c.accept(';')) {
        rows.push_back(std::move(row));
        row.clear();
        continue;
      }
      c.expect(']');
      rows.push_back(std::move(row));
      break;
    }
  }
  return rows;
}

// Fills `coeff` (one Mat per power of t) with a parsed matrix of the given shape.
std::vector<Mat> to_mats(Cursor& c, const std::vector<std::vector<std::vector<mpq_class>>>& rows, Field f,
                         std::size_t order, std::size_t r, std::size_t cols, const std::string& what) {
  std::vector<Mat> out(order, Mat(f, r, cols));
  if (rows.empty()) {
    if (r * cols != 0) c.fail(what + ": expected a " + std::to_string(r) + "x" + std::to_string(cols) + " matrix");
    return out;
  }
  if (rows.size() != r) c.fail(what + ": expected " + std::to_string(r) + " rows, got " + std::to_string(rows.size()));
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != cols)
      c.fail(what + ": row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) + " entries, expected " +
             std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < order; ++k)
        if (rows[i][j][k] != 0) {
          try {
            out[k].set(i, j, Scalar(f, rows[i][j][k]));
          } catch (const Error& e) {
            c.fail(e.what());
          }
        }
  }
  return out;
}

std::string format_coefficient(const mpq_class& q) { return q.get_str(); }

std::string format_relation(const Relation& rho, const Quiver& q) {
  std::string s;
  for (std::size_t i = 0; i < rho.terms.size(); ++i) {
    const auto& t = rho.terms[i];
    mpq_class c = t.coefficient;
    bool neg = c < 0;
    if (neg) c = -c;
    if (i == 0)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (c != 1) s += format_coefficient(c) + "*";
    s += t.path.to_string(q);
  }
  return s;
}

std::string format_entry(const std::vector<Scalar>& coeffs) {
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    std::string c = coeffs[k].to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (!s.empty())
      s += neg ? "-" : "+";
    else if (neg)
      s += "-";
    if (k == 0)
      s += c;
    else {
      if (c != "1") s += c + "*";
      s += k == 1 ? "t" : "t^" + std::to_string(k);
    }
  }
  return s.empty() ? "0" : s;
}

std::string format_matrix(const std::vector<const Mat*>& coeffs) {
  const Mat& m0 = *coeffs.front();
  if (m0.empty()) return "[]";
  std::string s = "[";
  for (std::size_t i = 0; i < m0.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m0.cols(); ++j) {
      std::vector<Scalar> e;
      for (const Mat* m : coeffs) e.push_back(m->at(i, j));
      s += (j ? "," : "") + format_entry(e);
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace

std::pair<Field, std::size_t> parse_field(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  std::size_t order = 1;
  std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    std::string tail = s.substr(slash + 1);
    s.erase(slash);
    if (tail.rfind("t^", 0) != 0 || tail.size() == 2 || tail.find_first_not_of("0123456789", 2) != std::string::npos)
      throw BadParameters("bad truncation '" + tail + "', expected t^N");
    order = std::stoul(tail.substr(2));
    if (order == 0) throw BadParameters("truncation order must be positive");
  }
  if (s == "q") {
    if (order > 1) throw BadParameters("truncated families are supported over GF(p) only");
    return {Field::rationals(), 1};
  }
  if (s.rfind("gf", 0) == 0) {
    std::string p = s.substr(2);
    if (!p.empty() && p.front() == '(' && p.back() == ')') p = p.substr(1, p.size() - 2);
    if (!p.empty() && p.find_first_not_of("0123456789") == std::string::npos && p.size() <= 10)
      return {Field::prime(static_cast<std::uint32_t>(std::stoul(p))), order};
  }
  throw BadParameters("unknown field '" + text + "'");
}

std::string field_spec(Field f, std::size_t order) {
  std::string s = f.is_rational() ? "Q" : "GF " + std::to_string(f.characteristic());
  if (order > 1) s += " / t^" + std::to_string(order);
  return s;
}

std::optional<BoundQuiver> builtin_quiver(const std::string& name) {
  if (name == "kronecker") return kronecker_quiver();
  if (name == "square") return commutative_square();
  for (const char* prefix : {"canonical:", "canonical_"}) {
    std::string pre(prefix);
    if (name.rfind(pre, 0) != 0) continue;
    std::vector<std::size_t> p;
    try {
      p = parse_weights(name.substr(pre.size()));
    } catch (const BadParameters&) {
      return std::nullopt;
    }
    return canonical_bound_quiver(p, default_lambda(p));
  }
  return std::nullopt;
}

std::vector<BoundQuiver> parse_quivers(const std::string& text) {
  std::vector<BoundQuiver> out;
  auto lines = split_lines(text);
  bool bound_set = false;
  std::vector<std::pair<std::size_t, std::string>> pending;  // relations, parsed once arrows are known
  auto finish = [&]() {
    if (out.empty()) return;
    BoundQuiver& bq = out.back();
    for (const auto& [ln, body] : pending) {
      Cursor c{body, ln};
      c.col_offset = lines[ln - 1].size() - body.size();
      Relation rho;
      bool first = true;
      while (!c.at_end()) {
        mpq_class sign(1);
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
          ++c.pos;
          if (ch == '-') sign = -1;
        } else if (!first) {
          c.fail("expected '+' or '-'");
        }
        first = false;
        c.skip_ws();
        std::size_t b = c.pos;
        while (c.pos < body.size() && (is_word_char(body[c.pos]) || body[c.pos] == '.' || body[c.pos] == '/')) ++c.pos;
        std::string tok = body.substr(b, c.pos - b);
        mpq_class coef(1);
        if (c.peek() == '*') {
          c.pos = b;
          coef = c.number();
          c.expect('*');
          c.skip_ws();
          b = c.pos;
          while (c.pos < body.size() && (is_word_char(body[c.pos]) || body[c.pos] == '.')) ++c.pos;
          tok = body.substr(b, c.pos - b);
        }
        if (tok.empty()) c.fail("expected a path");
        std::optional<Path> path;
        try {
          path = Path::parse(bq.quiver, tok);
        } catch (const Error& e) {
          c.pos = b;
          c.fail(e.what());
        }
        rho.terms.push_back({sign * coef, *path});
      }
      if (rho.terms.empty()) throw ParseError(ln, 1, "empty relation");
      bq.relations.push_back(std::move(rho));
    }
    pending.clear();
    if (!bound_set) bq.bound = bq.quiver.is_acyclic() ? bq.quiver.longest_path() + 1 : 2;
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    std::string kw = first_word(line);
    if (kw.empty()) continue;
    Cursor c{line, i + 1};
    c.word();
    try {
      if (kw == "quiver") {
        finish();
        out.emplace_back();
        out.back().name = c.word();
        bound_set = false;
      } else if (kw == "module" || kw == "dim" || kw == "mat") {
        break;
      } else if (out.empty()) {
        c.pos = 0;
        c.fail("expected 'quiver NAME' first");
      } else if (kw == "vertex") {
        while (!c.at_end()) out.back().quiver.add_vertex(c.word());
      } else if (kw == "arrow") {
        std::string name = c.word();
        std::size_t ends[2];
        for (auto& e : ends) {
          c.skip_ws();
          std::size_t at = c.pos;
          std::string v = c.word();
          try {
            e = out.back().quiver.vertex_index(v);
          } catch (const Error& err) {
            c.pos = at;
            c.fail(err.what());
          }
        }
        out.back().quiver.add_arrow(name, ends[0], ends[1]);
      } else if (kw == "relation") {
        c.skip_ws();
        pending.emplace_back(i + 1, line.substr(c.pos));
      } else if (kw == "bound") {
        out.back().bound = c.count();
        bound_set = true;
      } else {
        c.pos = 0;
        c.fail("unknown keyword '" + kw + "'");
      }
      if (!c.at_end() && kw != "vertex" && kw != "relation") c.fail("unexpected trailing text");
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(i + 1, 1, e.what());
    }
  }
  finish();
  return out;
}

BoundQuiver parse_quiver(const std::string& text) {
  auto qs = parse_quivers(text);
  if (qs.empty()) throw ParseError(1, 1, "no quiver declaration");
  return qs.front();
}

std::string emit_quiver(const BoundQuiver& bq) {
  std::string s = "quiver " + bq.name + "\n";
  for (const auto& v : bq.quiver.vertex_names()) s += "vertex " + v + "\n";
  for (const auto& a : bq.quiver.arrows())
    s += "arrow " + a.name + " " + bq.quiver.vertex_name(a.source) + " " + bq.quiver.vertex_name(a.target) + "\n";
  for (const auto& r : bq.relations) s += "relation " + format_relation(r, bq.quiver) + "\n";
  s += "bound " + std::to_string(bq.bound) + "\n";
  return s;
}

ModuleFile parse_module(const std::string& text, const std::vector<BoundQuiver>& known) {
  auto lines = split_lines(text);
  std::vector<BoundQuiver> quivers = parse_quivers(text);
  quivers.insert(quivers.end(), known.begin(), known.end());

  ModuleFile mf;
  std::size_t header = 0;
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (first_word(lines[i]) == "module") {
      header = i + 1;
      break;
    }
  if (header == 0) throw ParseError(1, 1, "no 'module' line");

  {
    const std::string& line = lines[header - 1];
    Cursor c{line, header};
    c.word();
    mf.name = c.word();
    c.skip_ws();
    std::size_t over_at = c.pos;
    if (c.word() != "over") {
      c.pos = over_at;
      c.fail("expected 'over'");
    }
    c.skip_ws();
    std::size_t field_at = c.pos;
    std::size_t on = line.find(" on ", field_at);
    if (on == std::string::npos) c.fail("expected 'on QUIVER'");
    Field f;
    try {
      std::tie(f, mf.order) = parse_field(line.substr(field_at, on - field_at));
    } catch (const Error& e) {
      c.pos = field_at;
      c.fail(e.what());
    }
    c.pos = on + 4;
    c.skip_ws();
    std::size_t name_at = c.pos;
    std::string qname = c.word();
    if (!c.at_end()) c.fail("unexpected trailing text");
    std::optional<BoundQuiver> bq;
    for (const auto& q : quivers)
      if (q.name == qname) bq = q;
    if (!bq) bq = builtin_quiver(qname);
    if (!bq) {
      c.pos = name_at;
      c.fail("unknown quiver '" + qname + "'");
    }
    try {
      mf.algebra = Algebra::build(*bq, f);
    } catch (const Error& e) {
      c.pos = name_at;
      c.fail(e.what());
    }
  }

  const Quiver& q = mf.algebra->quiver();
  const Field f = mf.algebra->field();
  DimVec d(q.vertex_count(), 0);
  std::vector<std::optional<std::vector<Mat>>> mats(q.arrow_count());
  std::vector<std::pair<std::size_t, std::string>> mat_lines;
  bool have_dim = false;
  for (std::size_t i = header; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    std::string kw = first_word(line);
    if (kw.empty()) continue;
    Cursor c{line, i + 1};
    c.word();
    if (kw == "dim") {
      if (have_dim) c.fail("duplicate 'dim' line");
      have_dim = true;
      while (!c.at_end()) {
        std::size_t at = c.pos;
        std::string item = c.word();
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) {
          c.pos = at;
          c.skip_ws();
          c.fail("expected VERTEX=DIM");
        }
        std::size_t v;
        try {
          v = q.vertex_index(item.substr(0, eq));
        } catch (const Error& e) {
          c.pos = at;
          c.skip_ws();
          c.fail(e.what());
        }
        std::string num = item.substr(eq + 1);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
          c.pos = at;
          c.skip_ws();
          c.fail("bad dimension '" + num + "'");
        }
        d[v] = std::stoul(num);
      }
    } else if (kw == "mat") {
      mat_lines.emplace_back(i + 1, line);
    } else if (kw == "quiver" || kw == "module") {
      c.pos = 0;
      c.fail("a module block must come last");
    } else {
      c.pos = 0;
      c.skip_ws();
      c.fail("unknown keyword '" + kw + "'");
    }
  }
  if (!have_dim) throw ParseError(header, 1, "missing 'dim' line");

  for (const auto& [ln, line] : mat_lines) {
    Cursor c{line, ln};
    c.word();
    c.skip_ws();
    std::size_t name_at = c.pos;
    std::size_t b = c.pos;
    while (c.pos < line.size() && !std::isspace(static_cast<unsigned char>(line[c.pos])) && line[c.pos] != '=') ++c.pos;
    std::string aname = line.substr(b, c.pos - b);
    auto a = q.find_arrow(aname);
    if (!a) {
      c.pos = name_at;
      c.fail("unknown arrow '" + aname + "'");
    }
    if (mats[*a]) {
      c.pos = name_at;
      c.fail("duplicate matrix for arrow " + aname);
    }
    c.expect('=');
    auto rows = parse_matrix(c, mf.order);
    if (!c.at_end()) c.fail("unexpected trailing text");
    const Arrow& ar = q.arrow(*a);
    mats[*a] = to_mats(c, rows, f, mf.order, d[ar.target], d[ar.source], "arrow " + aname);
  }

  if (mf.truncated()) {
    std::vector<TMat> maps;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const Arrow& ar = q.arrow(a);
      TMat t(f, mf.order, d[ar.target], d[ar.source]);
      if (mats[a])
        for (std::size_t k = 0; k < mf.order; ++k) t.coeff(k) = (*mats[a])[k];
      maps.push_back(std::move(t));
    }
    mf.family = TruncatedRepresentation(mf.algebra, mf.order, d, std::move(maps));
  } else {
    std::vector<Mat> maps;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const Arrow& ar = q.arrow(a);
      maps.push_back(mats[a] ? (*mats[a])[0] : Mat(f, d[ar.target], d[ar.source]));
    }
    mf.module = Representation(mf.algebra, d, std::move(maps));
  }
  return mf;
}

namespace {

std::string module_header(const AlgebraPtr& alg, const std::string& name, std::size_t order, const DimVec& d) {
  const BoundQuiver& bq = alg->bound_quiver();
  std::string s = emit_quiver(bq) + "\nmodule " + name + " over " + field_spec(alg->field(), order) + " on " + bq.name +
                  "\ndim";
  for (std::size_t x = 0; x < d.size(); ++x) s += " " + bq.quiver.vertex_name(x) + "=" + std::to_string(d[x]);
  return s + "\n";
}

}  // namespace

std::string emit_module(const Representation& m, const std::string& name) {
  std::string s = module_header(m.algebra(), name, 1, m.dim());
  for (std::size_t a = 0; a < m.maps().size(); ++a)
    if (!m.map(a).empty()) s += "mat " + m.quiver().arrow(a).name + " = " + format_matrix({&m.map(a)}) + "\n";
  return s;
}

std::string emit_module(const TruncatedRepresentation& m, const std::string& name) {
  std::string s = module_header(m.algebra(), name, m.order(), m.dim());
  for (std::size_t a = 0; a < m.maps().size(); ++a) {
    const TMat& t = m.map(a);
    if (t.rows() == 0 || t.cols() == 0) continue;
    std::vector<const Mat*> cs;
    for (std::size_t k = 0; k < t.order(); ++k) cs.push_back(&t.coeff(k));
    s += "mat " + m.quiver().arrow(a).name + " = " + format_matrix(cs) + "\n";
  }
  return s;
}

Cochain parse_cochain(const std::string& text, const Representation& n, const Representation& m) {
  require_same_algebra(n, m);
  const Quiver& q = n.quiver();
  const Field f = n.field();
  Cochain z = zero_cochain(n, m);
  std::vector<bool> seen(q.arrow_count(), false);
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    // Split on ';' outside brackets so that one line may hold several entries.
    std::size_t depth = 0, start = 0;
    for (std::size_t j = 0; j <= line.size(); ++j) {
      char ch = j < line.size() ? line[j] : ';';
      if (ch == '[') ++depth;
      if (ch == ']' && depth > 0) --depth;
      if (ch != ';' || depth != 0) continue;
      std::string piece = line.substr(start, j - start);
      Cursor c{piece, i + 1};
      c.col_offset = start;
      start = j + 1;
      if (c.at_end()) continue;
      std::size_t b = c.pos;
      std::string kw = first_word(piece);
      if (kw == "cochain") continue;
      if (kw == "mat") {
        c.word();
        c.skip_ws();
        b = c.pos;
      }
      while (c.pos < piece.size() && !std::isspace(static_cast<unsigned char>(piece[c.pos])) && piece[c.pos] != '=')
        ++c.pos;
      std::string aname = piece.substr(b, c.pos - b);
      auto a = q.find_arrow(aname);
      if (!a) {
        c.pos = b;
        c.fail("unknown arrow '" + aname + "'");
      }
      if (seen[*a]) {
        c.pos = b;
        c.fail("duplicate entry for arrow " + aname);
      }
      seen[*a] = true;
      c.expect('=');
      std::vector<std::vector<std::vector<mpq_class>>> rows;
      if (c.peek() == '[') {
        rows = parse_matrix(c, 1);
      } else {
        rows = {{parse_entry(c, 1)}};  // a bare scalar for a 1x1 block
      }
      if (!c.at_end()) c.fail("unexpected trailing text");
      const Arrow& ar = q.arrow(*a);
      z[*a] = to_mats(c, rows, f, 1, m.dim(ar.target), n.dim(ar.source), "arrow " + aname)[0];
    }
  }
  return z;
}

std::string emit_cochain(const Cochain& z, const Quiver& q) {
  std::string s;
  for (std::size_t a = 0; a < z.size(); ++a)
    if (!z[a].empty()) s += "mat " + q.arrow(a).name + " = " + format_matrix({&z[a]}) + "\n";
  return s;
}

}  // namespace repvar
