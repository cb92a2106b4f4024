#ifndef ALTRING_SAF_IO_HPP
#define ALTRING_SAF_IO_HPP

#include <altring/catalog.hpp>
#include <altring/finite_search.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

namespace altring {

/*
 * Structure-constant files (.saf), line oriented:
 *
 *   saf 1
 *   field Q | field GF <p>
 *   dim <d>
 *   unit <d coords>        (optional)
 *   idem <d coords>        (optional)
 *   mul <i> <j> <k> <c>    e_i e_j gains c e_k, 1-based
 *
 * '#' starts a comment, blank lines are skipped. The canonical form writes
 * unit and idem before the mul lines, mul lines sorted by (i, j, k), no
 * zero coefficients, rationals in lowest terms and residues in [0, p).
 */

using AnyAlgebra = std::variant<Algebra<Rational>, Algebra<ModP>>;

inline constexpr std::size_t kMaxFileDim = 256;

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) words.emplace_back(line.substr(i, j - i));
      i = j;
    }
    if (!words.empty()) out.push_back({number, std::move(words)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

// Integer word for a header field; syntax errors carry the line number.
inline long long header_integer(const Line& l, std::size_t word) {
  if (word >= l.words.size() || !is_integer_literal(l.words[word]))
    throw ParseError(Errc::syntax_error, l.number, "expected an integer");
  try {
    return parse_integer(l.words[word]);
  } catch (const Error&) {
    throw ParseError(Errc::syntax_error, l.number, "integer out of range: " + l.words[word]);
  }
}

inline void expect_words(const Line& l, std::size_t n, std::string_view what) {
  if (l.words.size() != n) throw ParseError(Errc::syntax_error, l.number, "expected '" + std::string(what) + "'");
}

template <FieldScalar S>
S parse_scalar(const Field& f, const Line& l, const std::string& word) {
  try {
    return S::parse(f, word);
  } catch (const Error& e) {
    throw ParseError(e.code() == Errc::division_by_zero ? Errc::semantic_error : Errc::syntax_error, l.number,
                     "bad coefficient '" + word + "'");
  }
}

template <FieldScalar S>
Vec<S> parse_coords(const Field& f, const Line& l, std::size_t first, std::size_t d) {
  if (l.words.size() != first + d)
    throw ParseError(Errc::syntax_error, l.number,
                     "expected " + std::to_string(d) + " coordinates after '" + l.words[0] + "'");
  Vec<S> v;
  for (std::size_t i = 0; i < d; ++i) v.push_back(parse_scalar<S>(f, l, l.words[first + i]));
  return v;
}

struct Header {
  Field field;
  std::size_t dim = 0;
};

inline Header parse_header(const std::vector<Line>& lines, std::string_view magic) {
  std::size_t last = lines.empty() ? 1 : lines.back().number;
  if (lines.empty() || lines[0].words[0] != magic || lines[0].words.size() != 2)
    throw ParseError(Errc::syntax_error, lines.empty() ? last : lines[0].number,
                     "expected '" + std::string(magic) + " 1'");
  if (header_integer(lines[0], 1) != 1) throw ParseError(Errc::semantic_error, lines[0].number, "unsupported version");
  Header h;
  if (lines.size() < 2 || lines[1].words[0] != "field")
    throw ParseError(Errc::syntax_error, lines.size() < 2 ? last : lines[1].number, "expected 'field Q' or 'field GF <p>'");
  const auto& fl = lines[1];
  if (fl.words.size() == 2 && fl.words[1] == "Q") {
    h.field = Field::rationals();
  } else if (fl.words.size() == 3 && fl.words[1] == "GF") {
    const auto p = header_integer(fl, 2);
    if (p < 2 || !is_prime_number(static_cast<std::uint64_t>(p)) || p > 2147483647LL)
      throw ParseError(Errc::semantic_error, fl.number, "modulus " + fl.words[2] + " is not a prime below 2^31");
    h.field = Field::gf(static_cast<std::uint64_t>(p));
  } else {
    throw ParseError(Errc::syntax_error, fl.number, "expected 'field Q' or 'field GF <p>'");
  }
  if (lines.size() < 3 || lines[2].words[0] != "dim")
    throw ParseError(Errc::syntax_error, lines.size() < 3 ? last : lines[2].number, "expected 'dim <d>'");
  expect_words(lines[2], 2, "dim <d>");
  const auto d = header_integer(lines[2], 1);
  if (d < 1 || d > static_cast<long long>(kMaxFileDim))
    throw ParseError(Errc::semantic_error, lines[2].number, "dimension must lie in [1, " + std::to_string(kMaxFileDim) + "]");
  h.dim = static_cast<std::size_t>(d);
  return h;
}

template <FieldScalar S>
Algebra<S> parse_body(const Header& h, const std::vector<Line>& lines) {
  const Field& f = h.field;
  const std::size_t d = h.dim;
  Algebra<S> alg(f, d);
  std::optional<std::pair<std::size_t, Vec<S>>> unit, idem;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> seen;
  for (std::size_t li = 3; li < lines.size(); ++li) {
    const auto& l = lines[li];
    const auto& kw = l.words[0];
    if (kw == "unit" || kw == "idem") {
      auto& slot = kw == "unit" ? unit : idem;
      if (slot) throw ParseError(Errc::semantic_error, l.number, "second '" + kw + "' line");
      slot = std::make_pair(l.number, parse_coords<S>(f, l, 1, d));
    } else if (kw == "mul") {
      expect_words(l, 5, "mul <i> <j> <k> <c>");
      std::array<std::size_t, 3> ijk{};
      for (std::size_t w = 0; w < 3; ++w) {
        const auto v = header_integer(l, w + 1);
        if (v < 1 || v > static_cast<long long>(d))
          throw ParseError(Errc::semantic_error, l.number, "index " + l.words[w + 1] + " outside [1, " + std::to_string(d) + "]");
        ijk[w] = static_cast<std::size_t>(v - 1);
      }
      auto key = std::make_tuple(ijk[0], ijk[1], ijk[2]);
      if (auto it = seen.find(key); it != seen.end())
        throw ParseError(Errc::semantic_error, l.number,
                         "duplicate triple (" + l.words[1] + ", " + l.words[2] + ", " + l.words[3] +
                             "), first given on line " + std::to_string(it->second));
      seen.emplace(key, l.number);
      alg.set_coeff(ijk[0], ijk[1], ijk[2], parse_scalar<S>(f, l, l.words[4]));
    } else if (kw == "saf" || kw == "field" || kw == "dim") {
      throw ParseError(Errc::syntax_error, l.number, "header line '" + kw + "' out of place");
    } else {
      throw ParseError(Errc::syntax_error, l.number, "unknown keyword '" + kw + "'");
    }
  }
  try {
    if (unit) alg.set_unit(unit->second);
  } catch (const Error&) {
    throw ParseError(Errc::semantic_error, unit->first, "unit annotation fails validation");
  }
  try {
    if (idem) alg.set_idempotent(idem->second);
  } catch (const Error&) {
    throw ParseError(Errc::semantic_error, idem->first, "idem annotation is not a nonzero idempotent");
  }
  return alg;
}

}  // namespace detail

inline AnyAlgebra parse_saf(std::string_view text) {
  const auto lines = detail::tokenize(text);
  const auto h = detail::parse_header(lines, "saf");
  if (h.field.finite()) return detail::parse_body<ModP>(h, lines);
  return detail::parse_body<Rational>(h, lines);
}

/// Parses and requires the scalar type S.
template <FieldScalar S>
Algebra<S> parse_saf_as(std::string_view text) {
  auto any = parse_saf(text);
  if (auto* a = std::get_if<Algebra<S>>(&any)) return std::move(*a);
  throw Error(Errc::field_mismatch, "file field does not match the requested scalar type");
}

template <FieldScalar S>
std::string serialize_saf(const Algebra<S>& a) {
  std::ostringstream out;
  out << "saf 1\n";
  if (a.field().finite()) out << "field GF " << a.field().p << "\n";
  else out << "field Q\n";
  out << "dim " << a.dim() << "\n";
  if (a.unit()) out << "unit " << vec_to_string<S>(*a.unit()) << "\n";
  if (a.idempotent()) out << "idem " << vec_to_string<S>(*a.idempotent()) << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& t : a.terms(i, j))
        out << "mul " << i + 1 << " " << j + 1 << " " << t.k + 1 << " " << t.c.to_string() << "\n";
  return out.str();
}

inline std::string serialize_saf(const AnyAlgebra& a) {
  return std::visit([](const auto& alg) { return serialize_saf(alg); }, a);
}

/*
 * Linear maps:            Map tables (finite fields only):
 *   lmap 1                  tmap 1
 *   dim <d>                 entry <d coords of x> <d coords of T(x)>
 *   row <d coords>  x d
 * Row k of an lmap holds coordinate k of the images; column j is D(e_j).
 * The field comes from the algebra the map is read against.
 */
template <FieldScalar S>
LinearMap<S> parse_linear_map(std::string_view text, const Field& f, std::size_t expected_dim) {
  const auto lines = detail::tokenize(text);
  if (lines.empty() || lines[0].words.size() != 2 || lines[0].words[0] != "lmap")
    throw ParseError(Errc::syntax_error, lines.empty() ? 1 : lines[0].number, "expected 'lmap 1'");
  if (detail::header_integer(lines[0], 1) != 1) throw ParseError(Errc::semantic_error, lines[0].number, "unsupported version");
  if (lines.size() < 2 || lines[1].words[0] != "dim")
    throw ParseError(Errc::syntax_error, lines.size() < 2 ? lines[0].number : lines[1].number, "expected 'dim <d>'");
  detail::expect_words(lines[1], 2, "dim <d>");
  const auto d = detail::header_integer(lines[1], 1);
  if (d != static_cast<long long>(expected_dim))
    throw ParseError(Errc::semantic_error, lines[1].number,
                     "map dimension " + lines[1].words[1] + " differs from algebra dimension " + std::to_string(expected_dim));
  LinearMap<S> m(f, expected_dim, expected_dim);
  std::size_t row = 0;
  for (std::size_t li = 2; li < lines.size(); ++li) {
    const auto& l = lines[li];
    if (l.words[0] != "row") throw ParseError(Errc::syntax_error, l.number, "expected 'row <coords>'");
    if (row == expected_dim) throw ParseError(Errc::semantic_error, l.number, "more than " + std::to_string(d) + " rows");
    auto v = detail::parse_coords<S>(f, l, 1, expected_dim);
    for (std::size_t c = 0; c < expected_dim; ++c) m(row, c) = v[c];
    ++row;
  }
  if (row != expected_dim)
    throw ParseError(Errc::semantic_error, lines.back().number,
                     "expected " + std::to_string(expected_dim) + " rows, found " + std::to_string(row));
  return m;
}

template <FieldScalar S>
std::string serialize_linear_map(const LinearMap<S>& m) {
  std::ostringstream out;
  out << "lmap 1\ndim " << m.cols() << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) out << "row " << vec_to_string<S>(m.row(r)) << "\n";
  return out.str();
}

inline MapTable parse_map_table(std::string_view text, const FiniteRing& r) {
  const auto lines = detail::tokenize(text);
  if (lines.empty() || lines[0].words.size() != 2 || lines[0].words[0] != "tmap")
    throw ParseError(Errc::syntax_error, lines.empty() ? 1 : lines[0].number, "expected 'tmap 1'");
  if (detail::header_integer(lines[0], 1) != 1) throw ParseError(Errc::semantic_error, lines[0].number, "unsupported version");
  const Field& f = r.algebra().field();
  const std::size_t d = r.algebra().dim();
  std::vector<std::optional<FiniteRing::Index>> values(r.size());
  std::vector<std::size_t> where(r.size(), 0);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& l = lines[li];
    if (l.words[0] != "entry") throw ParseError(Errc::syntax_error, l.number, "expected 'entry <x> <T(x)>'");
    if (l.words.size() != 1 + 2 * d)
      throw ParseError(Errc::syntax_error, l.number, "expected " + std::to_string(2 * d) + " coordinates");
    Vec<ModP> x, y;
    for (std::size_t i = 0; i < d; ++i) {
      x.push_back(detail::parse_scalar<ModP>(f, l, l.words[1 + i]));
      y.push_back(detail::parse_scalar<ModP>(f, l, l.words[1 + d + i]));
    }
    const auto xi = r.index(x);
    if (values[xi])
      throw ParseError(Errc::semantic_error, l.number, "second entry for (" + r.label(xi) + "), first on line " +
                                                           std::to_string(where[xi]));
    values[xi] = r.index(y);
    where[xi] = l.number;
  }
  MapTable t;
  for (FiniteRing::Index i = 0; i < r.size(); ++i) {
    if (!values[i])
      throw ParseError(Errc::semantic_error, lines.empty() ? 1 : lines.back().number,
                       "table is not total: no entry for (" + r.label(i) + ")");
    t.values.push_back(*values[i]);
  }
  return t;
}

inline std::string serialize_map_table(const FiniteRing& r, const MapTable& t) {
  std::ostringstream out;
  out << "tmap 1\n";
  for (FiniteRing::Index x = 0; x < r.size(); ++x) out << "entry " << r.label(x) << " " << r.label(t[x]) << "\n";
  return out.str();
}

}  // namespace altring

#endif  // ALTRING_SAF_IO_HPP
