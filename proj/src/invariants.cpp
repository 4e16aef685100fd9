#include "sympair/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "sympair/errors.hpp"
#include "sympair/linalg.hpp"

namespace sympair {

namespace {

bool is_power_kind(PairKind k) { return k == PairKind::AI || k == PairKind::AII; }

}  // namespace

TraceWord TraceWord::power(PairKind kind, std::vector<unsigned> exponents) {
  if (!is_power_kind(kind))
    throw DomainError("exponent-vector words belong to AI/AII, not " + std::string(to_string(kind)));
  return TraceWord(kind, PowerWord{std::move(exponents)});
}

TraceWord TraceWord::product(PairKind kind,
                             std::vector<std::pair<std::size_t, std::size_t>> factors) {
  if (is_power_kind(kind))
    throw DomainError("block-product words belong to AIII/BDI/CI, not " +
                      std::string(to_string(kind)));
  return TraceWord(kind, BlockWord{std::move(factors)});
}

TraceWord TraceWord::squares(std::vector<std::size_t> indices) {
  std::vector<std::pair<std::size_t, std::size_t>> factors;
  factors.reserve(indices.size());
  for (std::size_t i : indices) factors.emplace_back(i, i);
  return product(PairKind::BDI, std::move(factors));
}

bool TraceWord::is_constant() const { return degree() == 0; }

unsigned TraceWord::degree() const {
  if (is_power()) {
    unsigned s = 0;
    for (unsigned a : power_word().exponents) s += a;
    return s;
  }
  return 2 * static_cast<unsigned>(block_word().factors.size());
}

std::size_t TraceWord::min_tuple_length() const {
  if (is_power()) return power_word().exponents.size();
  std::size_t len = 0;
  for (const auto& [a, b] : block_word().factors) len = std::max({len, a + 1, b + 1});
  return len;
}

KroneckerDetInvariant KroneckerDetInvariant::make(std::size_t r, std::vector<RMatrix> t) {
  if (r < 1) throw DomainError("Kronecker invariant needs r >= 1");
  for (const auto& m : t)
    if (m.rows() != r || m.cols() != r)
      throw DomainError("Kronecker invariant coefficients must all be " + std::to_string(r) +
                        "x" + std::to_string(r));
  return KroneckerDetInvariant{r, std::move(t)};
}

WordEvaluator::WordEvaluator(const CommutingTuple& t) : tuple_(t) {
  if (t.pair.is_block_kind()) blocks_ = block_parts(t);
}

void WordEvaluator::check(const TraceWord& w) const {
  if (w.kind() != tuple_.pair.kind())
    throw DomainError("word " + to_text(w) + " evaluated on a " + tuple_.pair.label() + " tuple");
  if (w.is_power()) {
    if (w.power_word().exponents.size() != tuple_.d())
      throw DimensionError("word " + to_text(w) + " needs a tuple of length " +
                           std::to_string(w.power_word().exponents.size()));
  } else if (w.min_tuple_length() > tuple_.d()) {
    throw DimensionError("word " + to_text(w) + " indexes past the tuple length " +
                         std::to_string(tuple_.d()));
  }
}

const RMatrix& WordEvaluator::power(std::size_t i, unsigned e) {
  const auto key = std::make_pair(i, e);
  auto it = powers_.find(key);
  if (it == powers_.end()) {
    RMatrix value = e == 1 ? tuple_.mats[i] : power(i, e - 1) * tuple_.mats[i];
    it = powers_.emplace(key, std::move(value)).first;
  }
  return it->second;
}

const RMatrix& WordEvaluator::factor(std::size_t a, std::size_t b) {
  const auto key = std::make_pair(a, b);
  auto it = factors_.find(key);
  if (it == factors_.end()) {
    RMatrix value = tuple_.pair.kind() == PairKind::BDI ? blocks_[a].q * blocks_[b].q.transpose()
                                                        : blocks_[a].q * blocks_[b].r;
    it = factors_.emplace(key, std::move(value)).first;
  }
  return it->second;
}

RMatrix WordEvaluator::word_matrix(const TraceWord& w) {
  check(w);
  if (w.is_power()) {
    RMatrix acc = RMatrix::identity(tuple_.pair.ambient_dim());
    const auto& a = w.power_word().exponents;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > 0) acc = acc * power(i, a[i]);
    return acc;
  }
  RMatrix acc = RMatrix::identity(tuple_.pair.n());
  for (const auto& [a, b] : w.block_word().factors) acc = acc * factor(a, b);
  return acc;
}

Rational eval_trace_word(const TraceWord& w, const CommutingTuple& t) {
  return WordEvaluator(t).trace(w);
}

Rational restrict_trace_word(const TraceWord& w, const CartanPoint& pt) {
  if (w.is_power()) {
    const auto& a = w.power_word().exponents;
    if (a.size() != pt.d())
      throw DimensionError("word " + to_text(w) + " restricted to a point with d = " +
                           std::to_string(pt.d()));
    Rational sum = 0;
    Rational term;
    for (std::size_t j = 0; j < pt.n(); ++j) {
      term = 1;
      for (std::size_t i = 0; i < a.size(); ++i)
        for (unsigned e = 0; e < a[i]; ++e) term *= pt(i, j);
      sum += term;
    }
    if (w.kind() == PairKind::AII) sum *= 2;
    return sum;
  }
  if (w.min_tuple_length() > pt.d())
    throw DimensionError("word " + to_text(w) + " indexes past d = " + std::to_string(pt.d()));
  Rational sum = 0;
  Rational term;
  for (std::size_t j = 0; j < pt.n(); ++j) {
    term = 1;
    for (const auto& [a, b] : w.block_word().factors) term *= pt(a, j) * pt(b, j);
    sum += term;
  }
  return sum;
}

Rational pfaffian_norm(const RMatrix& x, const PairDescriptor& p) {
  if (p.kind() != PairKind::AII) throw DomainError("Pfaffian norm is defined for AII only");
  if (x.rows() != p.ambient_dim() || x.cols() != p.ambient_dim())
    throw DimensionError("pfaffian_norm: matrix size does not match " + p.label());
  const RMatrix wx = p.form() * x;
  if (!wx.is_skew_symmetric()) throw DomainError("pfaffian_norm: W x is not skew, x is not in g1");
  return pfaffian(wx);
}

namespace {

void check_kron(const KroneckerDetInvariant& inv, std::size_t d, std::size_t n) {
  if (inv.t.size() != d)
    throw DimensionError("Kronecker invariant has " + std::to_string(inv.t.size()) +
                         " coefficients for d = " + std::to_string(d));
  if (inv.r < 1) throw DomainError("Kronecker invariant needs r >= 1");
  for (const auto& m : inv.t)
    if (m.rows() != inv.r || m.cols() != inv.r) throw DimensionError("Kronecker coefficient size");
  if (n == 0) throw DimensionError("empty pair");
}

}  // namespace

Rational eval_kron_det(const KroneckerDetInvariant& inv, const CommutingTuple& t) {
  const PairDescriptor& p = t.pair;
  if (p.kind() != PairKind::BDI || p.n() != p.m())
    throw DomainError("Kronecker determinant invariant needs BDI with n = m, got " + p.label());
  check_kron(inv, t.d(), p.n());
  const auto blocks = block_parts(t);
  RMatrix sum(inv.r * p.n(), inv.r * p.n());
  for (std::size_t i = 0; i < t.d(); ++i) sum += kronecker(inv.t[i], blocks[i].q);
  return det(sum);
}

Rational restrict_kron_det(const KroneckerDetInvariant& inv, const CartanPoint& pt) {
  check_kron(inv, pt.d(), pt.n());
  Rational result = 1;
  for (std::size_t j = 0; j < pt.n(); ++j) {
    RMatrix s(inv.r, inv.r);
    for (std::size_t i = 0; i < pt.d(); ++i) s += pt(i, j) * inv.t[i];
    result *= det(s);
  }
  return result;
}

RPoly charpoly_word(const TraceWord& w, const CommutingTuple& t) {
  if (!w.is_power()) throw DomainError("charpoly_word takes an AI/AII exponent word");
  return charpoly(WordEvaluator(t).word_matrix(w));
}

namespace {

bool is_least_rotation(const std::vector<std::size_t>& s) {
  for (std::size_t shift = 1; shift < s.size(); ++shift) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      const std::size_t rotated = s[(k + shift) % s.size()];
      if (rotated < s[k]) return false;
      if (rotated > s[k]) break;
    }
  }
  return true;
}

}  // namespace

std::vector<TraceWord> enumerate_trace_words(PairKind kind, std::size_t d, unsigned max_degree,
                                             unsigned max_length) {
  std::vector<TraceWord> out;
  if (d == 0) return out;
  if (is_power_kind(kind)) {
    std::vector<unsigned> a(d);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
      if (i + 1 == d) {
        a[i] = left;
        out.push_back(TraceWord::power(kind, a));
        return;
      }
      for (unsigned e = left + 1; e-- > 0;) {
        a[i] = e;
        rec(i + 1, left - e);
      }
    };
    for (unsigned deg = 1; deg <= max_degree; ++deg) rec(0, deg);
    return out;
  }
  const std::size_t letters = d * d;
  const unsigned longest = std::min(max_length, max_degree / 2);
  for (unsigned len = 1; len <= longest; ++len) {
    std::vector<std::size_t> s(len, 0);
    while (true) {
      if (is_least_rotation(s)) {
        std::vector<std::pair<std::size_t, std::size_t>> factors;
        for (std::size_t letter : s) factors.emplace_back(letter / d, letter % d);
        out.push_back(TraceWord::product(kind, std::move(factors)));
      }
      std::size_t k = len;
      while (k > 0 && s[k - 1] + 1 == letters) s[--k] = 0;
      if (k == 0) break;
      ++s[k - 1];
    }
  }
  return out;
}

std::string to_text(const TraceWord& w) {
  std::string s = std::string(to_string(w.kind())) + ":tr[";
  if (w.is_power()) {
    const auto& a = w.power_word().exponents;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(a[i]);
    }
  } else {
    const auto& f = w.block_word().factors;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) s += ',';
      s += "(" + std::to_string(f[i].first + 1) + "," + std::to_string(f[i].second + 1) + ")";
    }
  }
  return s + "]";
}

std::string to_text(const KroneckerDetInvariant& inv) {
  std::string s = "BDI:kron[" + std::to_string(inv.r);
  for (const auto& m : inv.t) {
    s += ';';
    bool first = true;
    for (const auto& x : m.entries()) {
      if (!first) s += ',';
      first = false;
      s += x.get_str();
    }
  }
  return s + "]";
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::size_t parse_count(std::string_view s, std::string_view context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw DomainError("expected a non-negative integer in '" + std::string(context) + "'");
  return static_cast<std::size_t>(std::stoull(std::string(s)));
}

std::size_t parse_index(std::string_view s, std::string_view context) {
  const std::size_t i = parse_count(s, context);
  if (i == 0) throw DomainError("indices are 1-based in '" + std::string(context) + "'");
  return i - 1;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

TraceWord parse_tr_body(PairKind kind, std::string_view body, std::string_view text) {
  if (is_power_kind(kind)) {
    std::vector<unsigned> a;
    if (!body.empty())
      for (auto part : split(body, ',')) a.push_back(static_cast<unsigned>(parse_count(part, text)));
    return TraceWord::power(kind, std::move(a));
  }
  if (body.empty()) return TraceWord::product(kind, {});
  if (body.front() != '(') {
    if (kind != PairKind::BDI)
      throw DomainError("index-list shorthand is BDI only: '" + std::string(text) + "'");
    std::vector<std::size_t> idx;
    for (auto part : split(body, ',')) idx.push_back(parse_index(part, text));
    return TraceWord::squares(std::move(idx));
  }
  std::vector<std::pair<std::size_t, std::size_t>> factors;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] != '(') throw DomainError("malformed factor list in '" + std::string(text) + "'");
    const std::size_t close = body.find(')', pos);
    if (close == std::string_view::npos)
      throw DomainError("unclosed factor in '" + std::string(text) + "'");
    const auto inner = split(body.substr(pos + 1, close - pos - 1), ',');
    if (inner.size() != 2) throw DomainError("factor needs two indices in '" + std::string(text) + "'");
    factors.emplace_back(parse_index(inner[0], text), parse_index(inner[1], text));
    pos = close + 1;
    if (pos < body.size()) {
      if (body[pos] != ',') throw DomainError("expected ',' between factors in '" + std::string(text) + "'");
      ++pos;
    }
  }
  return TraceWord::product(kind, std::move(factors));
}

}  // namespace

std::variant<TraceWord, KroneckerDetInvariant> parse_invariant(std::string_view raw) {
  const std::string text = strip_spaces(raw);
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("invariant text lacks 'KIND:' prefix: '" + text + "'");
  const PairKind kind = parse_pair_kind(std::string_view(text).substr(0, colon));
  std::string_view rest = std::string_view(text).substr(colon + 1);
  if (rest.empty() || rest.back() != ']') throw DomainError("invariant text must end in ']': '" + text + "'");
  if (rest.starts_with("tr[")) return parse_tr_body(kind, rest.substr(3, rest.size() - 4), text);
  if (rest.starts_with("kron[")) {
    if (kind != PairKind::BDI) throw DomainError("kron invariants are BDI only: '" + text + "'");
    const auto parts = split(rest.substr(5, rest.size() - 6), ';');
    const std::size_t r = parse_count(parts[0], text);
    std::vector<RMatrix> ts;
    for (std::size_t k = 1; k < parts.size(); ++k) {
      const auto entries = split(parts[k], ',');
      if (entries.size() != r * r)
        throw DomainError("kron coefficient needs " + std::to_string(r * r) + " entries: '" + text + "'");
      RMatrix m(r, r);
      for (std::size_t e = 0; e < entries.size(); ++e) m(e / r, e % r) = parse_rational(entries[e]);
      ts.push_back(std::move(m));
    }
    return KroneckerDetInvariant::make(r, std::move(ts));
  }
  throw DomainError("unknown invariant form: '" + text + "'");
}

TraceWord parse_trace_word(std::string_view text) {
  auto inv = parse_invariant(text);
  if (auto* w = std::get_if<TraceWord>(&inv)) return std::move(*w);
  throw DomainError("expected a trace word, got '" + std::string(text) + "'");
}

}  // namespace sympair
