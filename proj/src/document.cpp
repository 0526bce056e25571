#include "liechar/document.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "liechar/error.hpp"

namespace liechar {

const Representation* AlgebraDocument::find_rep(std::string_view rep_name) const {
  for (const auto& r : reps)
    if (r.name == rep_name) return &r.rep;
  return nullptr;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Line {
  std::size_t number;
  bool indented;
  std::string_view text;  // trimmed, comment removed
};

class DocumentParser {
 public:
  explicit DocumentParser(std::string_view text) {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(start, end - start);
      ++number;
      start = end + 1;
      if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      const bool indented = !raw.empty() && (raw.front() == ' ' || raw.front() == '\t');
      raw = trim(raw);
      if (!raw.empty()) lines_.push_back({number, indented, raw});
      if (end == text.size()) break;
    }
  }

  AlgebraDocument run() {
    std::optional<std::size_t> dim;
    std::optional<std::vector<std::string>> basis;
    std::vector<std::pair<std::size_t, BracketEntry>> brackets;  // line, entry
    struct PendingRep {
      std::size_t line;
      std::string name;
      std::optional<std::size_t> space_dim;
      std::vector<std::pair<std::size_t, std::vector<std::vector<Rat>>>> mats;
    };
    std::vector<PendingRep> reps;
    struct PendingIso {
      std::size_t line;
      std::string reference;
      std::vector<std::pair<std::size_t, std::pair<std::size_t, std::vector<std::pair<std::size_t, Rat>>>>> images;
    };
    std::optional<PendingIso> iso;
    AlgebraDocument doc;

    std::size_t i = 0;
    while (i < lines_.size()) {
      const Line& line = lines_[i];
      if (line.indented) fail(line, "document", "unexpected indented line");
      const auto [key, value] = split_key(line, "document");
      if (key == "name") {
        doc.name = std::string(value);
        ++i;
      } else if (key == "dim") {
        dim = parse_index(line, "dim", value);
        ++i;
      } else if (key == "basis") {
        basis = parse_names(line, value);
        ++i;
      } else if (key == "brackets") {
        if (!value.empty()) fail(line, "brackets", "entries go on the following indented lines");
        ++i;
        for (std::size_t n = 0; i < lines_.size() && lines_[i].indented; ++i, ++n) {
          const std::string path = "brackets[" + std::to_string(n) + "]";
          brackets.emplace_back(lines_[i].number, parse_bracket(lines_[i], path));
        }
      } else if (key.substr(0, 4) == "rep ") {
        PendingRep rep{line.number, std::string(trim(key.substr(4))), std::nullopt, {}};
        if (rep.name.empty()) fail(line, "rep", "missing representation name");
        const std::string path = "rep " + rep.name;
        ++i;
        for (; i < lines_.size() && lines_[i].indented; ++i) {
          const Line& l = lines_[i];
          if (l.text.front() == '[') {
            rep.mats.emplace_back(l.number, parse_matrix(l, path + ".matrix[" + std::to_string(rep.mats.size()) + "]"));
          } else {
            const auto [k, v] = split_key(l, path);
            if (k != "space_dim") fail(l, path, "unknown field '" + std::string(k) + "'");
            rep.space_dim = parse_index(l, path + ".space_dim", v);
          }
        }
        reps.push_back(std::move(rep));
      } else if (key == "iso") {
        if (iso) fail(line, "iso", "duplicate iso block");
        iso = PendingIso{line.number, {}, {}};
        ++i;
        for (; i < lines_.size() && lines_[i].indented; ++i) {
          const Line& l = lines_[i];
          const std::string path = "iso[" + std::to_string(iso->images.size()) + "]";
          if (l.text.front() == '[') {
            iso->images.emplace_back(l.number, parse_image(l, path));
          } else {
            const auto [k, v] = split_key(l, "iso");
            if (k != "reference") fail(l, "iso", "unknown field '" + std::string(k) + "'");
            iso->reference = std::string(v);
          }
        }
        if (iso->reference.empty()) fail(line, "iso", "missing reference");
      } else {
        fail(line, "document", "unknown field '" + std::string(key) + "'");
      }
    }

    const Line eof{lines_.empty() ? 1 : lines_.back().number, false, {}};
    if (!dim) fail(eof, "dim", "missing");
    if (!basis) {
      basis.emplace();
      for (std::size_t k = 0; k < *dim; ++k) basis->push_back("e" + std::to_string(k + 1));
    }
    if (basis->size() != *dim)
      fail(eof, "basis", "has " + std::to_string(basis->size()) + " names but dim is " + std::to_string(*dim));

    std::vector<BracketEntry> entries;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t n = 0; n < brackets.size(); ++n) {
      const auto& [ln, e] = brackets[n];
      const Line at{ln, true, {}};
      const std::string path = "brackets[" + std::to_string(n) + "]";
      if (e.i >= *dim || e.j >= *dim) fail(at, path, "basis index out of range 1.." + std::to_string(*dim));
      if (e.i >= e.j) fail(at, path, "entry [" + std::to_string(e.i + 1) + ", " + std::to_string(e.j + 1) + ", ...] needs i < j", Errc::index_order);
      for (const auto& [k, c] : e.terms)
        if (k >= *dim) fail(at, path, "result index out of range 1.." + std::to_string(*dim));
      if (!seen.insert({e.i, e.j}).second) fail(at, path, "duplicate bracket");
      entries.push_back(e);
    }
    doc.algebra = LieAlgebra::from_brackets(*basis, entries);
    if (const auto report = validate(doc.algebra); !report.empty())
      fail(eof, "brackets", report.front().describe(doc.algebra), Errc::jacobi_violation);

    std::set<std::string> rep_names;
    for (auto& pending : reps) {
      const Line at{pending.line, false, {}};
      const std::string path = "rep " + pending.name;
      if (!rep_names.insert(pending.name).second) fail(at, path, "duplicate representation name");
      if (!pending.space_dim) fail(at, path + ".space_dim", "missing");
      if (pending.mats.size() != *dim)
        fail(at, path, "needs " + std::to_string(*dim) + " matrices, found " + std::to_string(pending.mats.size()));
      Representation rep{{}, *pending.space_dim};
      for (std::size_t k = 0; k < pending.mats.size(); ++k) {
        const auto& [ln, rows] = pending.mats[k];
        const std::size_t n = *pending.space_dim;
        const Line ml{ln, true, {}};
        const std::string mpath = path + ".matrix[" + std::to_string(k) + "]";
        RatMatrix m(n, n);
        if (rows.size() == 1 && rows.front().size() == n * n) {
          for (std::size_t a = 0; a < n * n; ++a) m(a / n, a % n) = rows.front()[a];
        } else if (rows.size() == n) {
          for (std::size_t a = 0; a < n; ++a) {
            if (rows[a].size() != n) fail(ml, mpath, "row " + std::to_string(a + 1) + " needs " + std::to_string(n) + " entries");
            for (std::size_t b = 0; b < n; ++b) m(a, b) = rows[a][b];
          }
        } else if (n == 0 && rows.size() == 1 && rows.front().empty()) {
        } else {
          fail(ml, mpath, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
        }
        rep.mats.push_back(std::move(m));
      }
      if (const auto bad = rep_validate(doc.algebra, rep); !bad.empty()) {
        const auto& names = doc.algebra.basis_names();
        fail(at, path, "not a representation: bracket of (" + names[bad.front().first] + ", " +
                           names[bad.front().second] + ") is not preserved", Errc::invalid_argument);
      }
      doc.reps.push_back({pending.name, std::move(rep)});
    }

    if (iso) {
      IsomorphismSpec spec{iso->reference, RatMatrix(*dim, *dim)};
      std::set<std::size_t> cols;
      for (std::size_t n = 0; n < iso->images.size(); ++n) {
        const auto& [ln, image] = iso->images[n];
        const Line at{ln, true, {}};
        const std::string path = "iso[" + std::to_string(n) + "]";
        const auto& [j, terms] = image;
        if (j >= *dim) fail(at, path, "reference index out of range 1.." + std::to_string(*dim));
        if (!cols.insert(j).second) fail(at, path, "duplicate image");
        for (const auto& [k, c] : terms) {
          if (k >= *dim) fail(at, path, "target index out of range 1.." + std::to_string(*dim));
          spec.map(k, j) += c;
        }
      }
      doc.iso = std::move(spec);
    }
    return doc;
  }

 private:
  [[noreturn]] static void fail(const Line& line, const std::string& path, const std::string& what,
                                Errc code = Errc::parse_syntax) {
    throw Error(code, "line " + std::to_string(line.number) + ": " + path + ": " + what);
  }

  static std::pair<std::string_view, std::string_view> split_key(const Line& line, const std::string& path) {
    const auto colon = line.text.find(':');
    if (colon == std::string_view::npos) fail(line, path, "expected 'key: value'");
    return {trim(line.text.substr(0, colon)), trim(line.text.substr(colon + 1))};
  }

  static std::size_t parse_index(const Line& line, const std::string& path, std::string_view v) {
    std::size_t out = 0;
    if (v.empty()) fail(line, path, "expected a non-negative integer");
    for (char ch : v) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) fail(line, path, "expected a non-negative integer");
      out = out * 10 + static_cast<std::size_t>(ch - '0');
    }
    return out;
  }

  static std::vector<std::string> parse_names(const Line& line, std::string_view v) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    while (!v.empty()) {
      const auto comma = v.find(',');
      const auto item = trim(v.substr(0, comma));
      if (item.empty()) fail(line, "basis", "empty basis name");
      if (!seen.insert(std::string(item)).second) fail(line, "basis", "duplicate name '" + std::string(item) + "'");
      names.emplace_back(item);
      if (comma == std::string_view::npos) break;
      v.remove_prefix(comma + 1);
    }
    return names;
  }

  // Cursor over one bracketed expression.
  struct Cursor {
    const Line& line;
    std::string path;
    std::string_view s;
    std::size_t pos = 0;

    void skip() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
      skip();
      return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c) {
      if (peek() != c) fail(line, path, std::string("expected '") + c + "' at column " + std::to_string(pos + 1));
      ++pos;
    }
    std::string_view token() {
      skip();
      const std::size_t start = pos;
      while (pos < s.size() && s[pos] != ',' && s[pos] != ']' && s[pos] != ':' && s[pos] != ';' && s[pos] != '[' &&
             !std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (start == pos) fail(line, path, "expected a value at column " + std::to_string(pos + 1));
      return s.substr(start, pos - start);
    }
    std::size_t index() {
      const auto t = token();
      std::size_t v = 0;
      for (char ch : t) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail(line, path, "expected a 1-based index, got '" + std::string(t) + "'");
        v = v * 10 + static_cast<std::size_t>(ch - '0');
      }
      if (v == 0) fail(line, path, "indices are 1-based");
      return v - 1;
    }
    Rat rational() {
      const auto t = token();
      try {
        return parse_rat(t);
      } catch (const Error& e) {
        fail(line, path, e.what());
      }
    }
    void finish() {
      if (peek() != '\0') fail(line, path, "trailing characters");
    }
    // [k:c, k:c, ...]
    std::vector<std::pair<std::size_t, Rat>> combination() {
      std::vector<std::pair<std::size_t, Rat>> terms;
      expect('[');
      if (peek() == ']') {
        ++pos;
        return terms;
      }
      while (true) {
        const auto k = index();
        expect(':');
        terms.emplace_back(k, rational());
        if (peek() == ',') {
          ++pos;
          continue;
        }
        expect(']');
        return terms;
      }
    }
  };

  static BracketEntry parse_bracket(const Line& line, const std::string& path) {
    Cursor c{line, path, line.text};
    c.expect('[');
    BracketEntry e;
    e.i = c.index();
    c.expect(',');
    e.j = c.index();
    c.expect(',');
    e.terms = c.combination();
    c.expect(']');
    c.finish();
    return e;
  }

  static std::pair<std::size_t, std::vector<std::pair<std::size_t, Rat>>> parse_image(const Line& line,
                                                                                         const std::string& path) {
    Cursor c{line, path, line.text};
    c.expect('[');
    const auto j = c.index();
    c.expect(',');
    auto terms = c.combination();
    c.expect(']');
    c.finish();
    return {j, std::move(terms)};
  }

  static std::vector<std::vector<Rat>> parse_matrix(const Line& line, const std::string& path) {
    Cursor c{line, path, line.text};
    c.expect('[');
    std::vector<std::vector<Rat>> rows(1);
    if (c.peek() == ']') {
      ++c.pos;
      c.finish();
      return rows;
    }
    while (true) {
      rows.back().push_back(c.rational());
      const char next = c.peek();
      ++c.pos;
      if (next == ',') continue;
      if (next == ';') {
        rows.emplace_back();
        continue;
      }
      if (next == ']') break;
      fail(line, path, "expected ',', ';' or ']'");
    }
    c.finish();
    return rows;
  }

  std::vector<Line> lines_;
};

std::string combination_text(const std::vector<std::pair<std::size_t, Rat>>& terms) {
  std::string out = "[";
  for (std::size_t n = 0; n < terms.size(); ++n) {
    if (n) out += ", ";
    out += std::to_string(terms[n].first + 1) + ":" + to_string(terms[n].second);
  }
  return out + "]";
}

}  // namespace

AlgebraDocument parse_algebra(std::string_view text) { return DocumentParser(text).run(); }

AlgebraDocument load_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_algebra(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string render_algebra(const AlgebraDocument& doc) {
  std::ostringstream out;
  const LieAlgebra& L = doc.algebra;
  if (!doc.name.empty()) out << "name: " << doc.name << '\n';
  out << "dim: " << L.dim() << '\n';
  out << "basis: ";
  for (std::size_t i = 0; i < L.dim(); ++i) out << (i ? ", " : "") << L.basis_names()[i];
  out << '\n';
  out << "brackets:\n";
  for (const auto& e : L.brackets())
    out << "  [" << e.i + 1 << ", " << e.j + 1 << ", " << combination_text(e.terms) << "]\n";
  for (const auto& [name, rep] : doc.reps) {
    out << "rep " << name << ":\n";
    out << "  space_dim: " << rep.space_dim << '\n';
    for (const auto& m : rep.mats) out << "  " << m.to_string() << '\n';
  }
  if (doc.iso) {
    out << "iso:\n";
    out << "  reference: " << doc.iso->reference << '\n';
    for (std::size_t j = 0; j < doc.iso->map.cols(); ++j) {
      std::vector<std::pair<std::size_t, Rat>> terms;
      for (std::size_t k = 0; k < doc.iso->map.rows(); ++k)
        if (doc.iso->map(k, j) != 0) terms.emplace_back(k, doc.iso->map(k, j));
      if (!terms.empty()) out << "  [" << j + 1 << ", " << combination_text(terms) << "]\n";
    }
  }
  return out.str();
}

IsoVerification verify_iso(const AlgebraDocument& doc, const std::filesystem::path& base_dir) {
  if (!doc.iso) throw Error(Errc::not_found, "document has no iso block");
  const AlgebraDocument reference = load_algebra_file(base_dir / doc.iso->reference);
  if (reference.algebra.dim() != doc.algebra.dim())
    throw Error(Errc::dimension_mismatch, "reference algebra has dimension " + std::to_string(reference.algebra.dim()));
  IsoVerification v;
  v.reference_name = reference.name.empty() ? doc.iso->reference : reference.name;
  v.check = check_isomorphism(reference.algebra, doc.algebra, doc.iso->map);
  return v;
}

}  // namespace liechar
