#include "vfm/scenario.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vfm/errors.hpp"
#include "vfm/parse.hpp"

namespace vfm {

namespace {

struct Line {
  int number = 0;
  std::string text;  // comment removed
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

/// Cursor over one line that remembers columns for error messages.
class Cursor {
 public:
  Cursor(const Line& line) : line_(line) {}  // NOLINT(google-explicit-constructor)

  void skip_space() {
    while (pos_ < line_.text.size() && is_space(line_.text[pos_])) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= line_.text.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  SourcePos here() const { return {line_.number, column()}; }
  std::size_t pos() const { return pos_; }
  void seek(std::size_t p) { pos_ = p; }
  const std::string& text() const { return line_.text; }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.text.size() && !is_space(line_.text[pos_])) ++pos_;
    return line_.text.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_.number, column()); }
  [[noreturn]] void fail_at(std::size_t p, const std::string& what) const {
    throw ParseError(what, line_.number, static_cast<int>(p) + 1);
  }

 private:
  const Line& line_;
  std::size_t pos_ = 0;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string s(text.substr(start, end - start));
    if (!s.empty() && s.back() == '\r') s.pop_back();
    if (const auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    out.push_back({++number, std::move(s)});
    start = end + 1;
  }
  return out;
}

double parse_double(Cursor& c) {
  c.skip_space();
  const std::size_t start = c.pos();
  const std::string w = c.word();
  char* end = nullptr;
  const double v = std::strtod(w.c_str(), &end);
  if (w.empty() || *end != '\0' || !std::isfinite(v)) c.fail_at(start, "expected a number, got '" + w + "'");
  return v;
}

long parse_integer(Cursor& c, long lo) {
  c.skip_space();
  const std::size_t start = c.pos();
  const std::string w = c.word();
  char* end = nullptr;
  const long v = std::strtol(w.c_str(), &end, 10);
  if (w.empty() || *end != '\0') c.fail_at(start, "expected an integer, got '" + w + "'");
  if (v < lo) c.fail_at(start, "value must be at least " + std::to_string(lo));
  return v;
}

void expect_end(Cursor& c) {
  if (!c.done()) c.fail("unexpected text '" + c.text().substr(c.pos()) + "'");
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  return true;
}

/// "(a, b), (c, d)" -> vectors, each entry a constant expression.
std::vector<ExactVector> parse_vectors(Cursor& c, int n, int line) {
  std::vector<ExactVector> out;
  if (c.done()) return out;
  const std::string& t = c.text();
  for (;;) {
    c.skip_space();
    if (c.pos() >= t.size() || t[c.pos()] != '(') c.fail("expected '(' to start a lattice vector");
    const std::size_t open = c.pos();
    const std::size_t close = t.find(')', open);
    if (close == std::string::npos) c.fail_at(open, "unterminated lattice vector");
    ExactVector v;
    std::size_t start = open + 1;
    for (;;) {
      std::size_t comma = t.find(',', start);
      if (comma == std::string::npos || comma > close) comma = close;
      v.push_back(parse_scalar(std::string_view(t).substr(start, comma - start),
                               {line, static_cast<int>(start) + 1}));
      if (comma == close) break;
      start = comma + 1;
    }
    if (static_cast<int>(v.size()) != n)
      c.fail_at(open, "lattice vector needs " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
    bool zero = true;
    for (const auto& x : v) zero = zero && x.is_zero();
    if (zero) c.fail_at(open, "lattice generators must be nonzero");
    out.push_back(std::move(v));
    c.seek(close + 1);
    if (c.done()) break;
    if (t[c.pos()] != ',') c.fail("expected ',' between lattice vectors");
    c.seek(c.pos() + 1);
  }
  return out;
}

}  // namespace

std::string Scenario::field_text(std::size_t i) const {
  if (projective) return projective_fields.at(i).str();
  return affine_fields.at(i).str();
}

Scenario parse_scenario(std::string_view text, std::optional<std::uint64_t> default_seed) {
  Scenario s;
  if (default_seed) s.probe.seed = *default_seed;
  int ambient_line = 0;
  bool vars_given = false;
  std::optional<Chart> chart;
  const auto lines = split_lines(text);
  for (const Line& line : lines) {
    Cursor c(line);
    if (c.done()) continue;
    c.seek(0);
    c.skip_space();
    const std::size_t key_pos = c.pos();
    const std::string key = c.word();

    if (key == "name") {
      c.skip_space();
      const std::size_t p = c.pos();
      s.name = c.word();
      if (!valid_identifier(s.name)) c.fail_at(p, "scenario name must be an identifier");
      expect_end(c);
    } else if (key == "ambient") {
      if (ambient_line) c.fail_at(key_pos, "ambient declared twice (first on line " + std::to_string(ambient_line) + ")");
      c.skip_space();
      const std::size_t p = c.pos();
      const std::string a = c.word();
      if (a.size() < 2 || (a[0] != 'P' && a[0] != 'C')) c.fail_at(p, "ambient must be Pn or Cn");
      char* end = nullptr;
      const long n = std::strtol(a.c_str() + 1, &end, 10);
      if (*end != '\0' || n < 1 || n > 8) c.fail_at(p, "ambient dimension must be an integer in 1..8");
      expect_end(c);
      s.projective = a[0] == 'P';
      s.n = static_cast<int>(n);
      ambient_line = line.number;
      if (!s.projective) s.vars = z_vars(1, s.n);
    } else if (key == "vars") {
      if (!ambient_line) c.fail_at(key_pos, "declare the ambient before vars");
      if (s.projective) c.fail_at(key_pos, "projective ambients use z0..zn; vars is for Cn only");
      if (chart) c.fail_at(key_pos, "vars must come before the first field");
      std::vector<std::string> vars;
      while (!c.done()) {
        const std::size_t p = c.pos();
        std::string v = c.word();
        if (!valid_identifier(v) || v == "i" || v[0] == 'd') c.fail_at(p, "invalid variable name '" + v + "'");
        for (const auto& w : vars)
          if (w == v) c.fail_at(p, "variable '" + v + "' declared twice");
        vars.push_back(std::move(v));
      }
      if (static_cast<int>(vars.size()) != s.n)
        c.fail_at(key_pos, "C" + std::to_string(s.n) + " needs " + std::to_string(s.n) + " variables");
      s.vars = std::move(vars);
      vars_given = true;
    } else if (key == "field") {
      if (!ambient_line) c.fail_at(key_pos, "declare the ambient before fields");
      c.skip_space();
      const std::size_t name_pos = c.pos();
      std::size_t p = name_pos;
      while (p < line.text.size() && !is_space(line.text[p]) && line.text[p] != '=') ++p;
      const std::string name = line.text.substr(name_pos, p - name_pos);
      if (!valid_identifier(name)) c.fail_at(name_pos, "field name must be an identifier");
      for (const auto& other : s.field_names)
        if (other == name) c.fail_at(name_pos, "field '" + name + "' declared twice");
      c.seek(p);
      c.skip_space();
      if (c.pos() >= line.text.size() || line.text[c.pos()] != '=') c.fail("expected '=' after the field name");
      const std::size_t expr_start = c.pos() + 1;
      std::size_t expr_end = line.text.size();
      if (const auto semi = line.text.find(';', expr_start); semi != std::string::npos) {
        for (std::size_t q = semi + 1; q < line.text.size(); ++q)
          if (!is_space(line.text[q])) c.fail_at(q, "unexpected text after ';'");
        expr_end = semi;
      }
      const std::string_view expr = std::string_view(line.text).substr(expr_start, expr_end - expr_start);
      const SourcePos at{line.number, static_cast<int>(expr_start) + 1};
      if (s.projective) {
        auto comps = parse_field(expr, z_vars(0, s.n), at);
        try {
          s.projective_fields.emplace_back(s.n, std::move(comps));
        } catch (const InvalidArgument& e) {
          throw ParseError(e.what(), line.number, static_cast<int>(expr_start) + 1);
        }
      } else {
        if (!chart) chart = Chart::affine(s.vars);
        s.affine_fields.emplace_back(*chart, parse_field(expr, s.vars, at));
      }
      s.field_names.push_back(name);
    } else if (key == "lattice") {
      if (!ambient_line) c.fail_at(key_pos, "declare the ambient before the lattice");
      if (s.lattice) c.fail_at(key_pos, "lattice declared twice");
      s.lattice = LatticeData(s.n, parse_vectors(c, s.n, line.number));
    } else if (key == "seed") {
      c.skip_space();
      const std::size_t p = c.pos();
      const std::string w = c.word();
      char* end = nullptr;
      const unsigned long long v = std::strtoull(w.c_str(), &end, 10);
      if (w.empty() || *end != '\0' || w[0] == '-') c.fail_at(p, "seed must be a non-negative integer");
      expect_end(c);
      s.probe.seed = v;
      s.seed_given = true;
    } else if (key == "probe.h") {
      s.probe.h = parse_double(c);
      if (!(s.probe.h > 0)) c.fail("probe.h must be positive");
      expect_end(c);
    } else if (key == "probe.t_max") {
      s.probe.t_max = parse_double(c);
      if (!(s.probe.t_max > 0)) c.fail("probe.t_max must be positive");
      expect_end(c);
    } else if (key == "probe.depth") {
      s.probe.depth = static_cast<int>(parse_integer(c, 5));
      expect_end(c);
    } else if (key == "probe.points") {
      s.probe.points = static_cast<int>(parse_integer(c, 1));
      expect_end(c);
    } else if (key == "probe.paths") {
      s.probe.paths = static_cast<int>(parse_integer(c, 1));
      expect_end(c);
    } else if (key == "probe.steps") {
      s.probe.steps = static_cast<int>(parse_integer(c, 1));
      expect_end(c);
    } else {
      c.fail_at(key_pos, "unknown key '" + key + "'");
    }
  }
  if (!ambient_line) throw ParseError("missing 'ambient' declaration", 1, 1);
  if (static_cast<int>(s.field_names.size()) != s.n)
    throw ParseError(s.ambient() + " needs " + std::to_string(s.n) + " fields, got " +
                         std::to_string(s.field_names.size()),
                     ambient_line, 1);
  (void)vars_given;
  return s;
}

Scenario load_scenario(const std::string& path, std::optional<std::uint64_t> default_seed) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Scenario s = parse_scenario(buf.str(), default_seed);
  if (s.name.empty()) s.name = std::filesystem::path(path).stem().string();
  return s;
}

}  // namespace vfm
