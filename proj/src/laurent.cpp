#include "glp/laurent.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "glp/checked.hpp"

namespace glp {

namespace {

void require_same_universe(std::size_t a, std::size_t b) {
  if (a != b)
    throw UniverseMismatch("polynomials over " + std::to_string(a) + " and " + std::to_string(b) + " vertices");
}

void require_universe(std::size_t n) {
  if (n > kMaxVertices) throw PreconditionError("universe exceeds kMaxVertices");
}

std::int16_t add_exponent(std::int16_t a, std::int16_t b) {
  int r = int{a} + int{b};
  if (r > std::numeric_limits<std::int16_t>::max() || r < std::numeric_limits<std::int16_t>::min())
    throw IntegerOverflow("exponent overflow");
  return static_cast<std::int16_t>(r);
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < kMaxVertices; ++i) r[i] = add_exponent(a[i], b[i]);
  return r;
}

Monomial add_monomials(const Monomial& a, const Monomial& b) { return {add_exponents(a.x, b.x), add_exponents(a.a, b.a)}; }

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::uint64_t h = 14695981039346656037ull;
    for (auto v : e) {
      h ^= static_cast<std::uint16_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Sorts, merges equal keys and drops zeros.
template <class Key>
void canonicalize(std::vector<std::pair<Key, std::int64_t>>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::int64_t c = terms[i].second;
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].first == terms[i].first; ++j) c = checked_add(c, terms[j].second);
    if (c != 0) terms[out++] = {terms[i].first, c};
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonical term lists, b scaled by `sign`.
template <class Key>
std::vector<std::pair<Key, std::int64_t>> merge_add(const std::vector<std::pair<Key, std::int64_t>>& a,
                                                    const std::vector<std::pair<Key, std::int64_t>>& b,
                                                    std::int64_t sign) {
  std::vector<std::pair<Key, std::int64_t>> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, checked_mul(b[j].second, sign));
      ++j;
    } else {
      std::int64_t c = checked_add(a[i].second, checked_mul(b[j].second, sign));
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Key, class Hash, class Combine>
std::vector<std::pair<Key, std::int64_t>> multiply_terms(const std::vector<std::pair<Key, std::int64_t>>& a,
                                                         const std::vector<std::pair<Key, std::int64_t>>& b,
                                                         Combine combine) {
  std::unordered_map<Key, std::int64_t, Hash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::int64_t& slot = acc[combine(ka, kb)];
      slot = checked_add(slot, checked_mul(ca, cb));
    }
  std::vector<std::pair<Key, std::int64_t>> out;
  out.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) out.emplace_back(k, c);
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, b, p);
    b = mul_mod(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t signed_to_mod(std::int64_t c, std::uint64_t p) {
  std::int64_t r = c % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

// Appends "·SYM_label^e" factors for every nonzero exponent.
void append_factors(std::string& out, bool& any, const char* sym, const Exponents& e, std::size_t n,
                    std::span<const std::string> labels) {
  for (std::size_t v = 0; v < n; ++v) {
    if (e[v] == 0) continue;
    if (any) out += "·";
    out += sym;
    out += "_";
    out += v < labels.size() ? labels[v] : std::to_string(v + 1);
    if (e[v] != 1) out += "^" + std::to_string(e[v]);
    any = true;
  }
}

// Renders one term; the sign is handled by the caller.
std::string render_term(std::uint64_t magnitude, const Exponents* a, const Exponents* x, std::size_t n,
                        std::span<const std::string> labels) {
  std::string body;
  bool any = false;
  if (a) append_factors(body, any, "A", *a, n, labels);
  if (x) append_factors(body, any, "X", *x, n, labels);
  if (!any) return std::to_string(magnitude);
  if (magnitude == 1) return body;
  return std::to_string(magnitude) + "·" + body;
}

std::uint64_t magnitude(std::int64_t c) {
  return c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
}

template <class Render>
std::string join_signed(std::size_t count, Render render_at) {
  if (count == 0) return "0";
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    auto [negative, body] = render_at(i);
    if (i == 0)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  ExponentsHash h;
  return h(m.x) * 31 + h(m.a);
}

// ---------------------------------------------------------------- CoefPoly

CoefPoly CoefPoly::constant(std::size_t universe, std::int64_t c) {
  require_universe(universe);
  CoefPoly p(universe);
  if (c != 0) p.terms_.emplace_back(Exponents{}, c);
  return p;
}

CoefPoly CoefPoly::a(std::size_t universe, VertexId v, int exponent) {
  require_universe(universe);
  if (v.index >= universe) throw PreconditionError("vertex outside universe");
  if (exponent < 0) throw PreconditionError("A-variables take nonnegative exponents");
  CoefPoly p(universe);
  Exponents e{};
  e[v.index] = static_cast<std::int16_t>(exponent);
  p.terms_.emplace_back(e, 1);
  return p;
}

CoefPoly CoefPoly::a_product(std::size_t universe, const VertexMultiset& m) {
  require_universe(universe);
  CoefPoly p(universe);
  Exponents e{};
  for (const auto& [v, c] : m) {
    if (v.index >= universe) throw PreconditionError("vertex outside universe");
    e[v.index] = add_exponent(e[v.index], static_cast<std::int16_t>(c));
  }
  p.terms_.emplace_back(e, 1);
  return p;
}

std::int64_t CoefPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().first == Exponents{}) return terms_.front().second;
  return 0;
}

bool CoefPoly::is_integer() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Exponents{}); }

bool CoefPoly::is_coefficientwise_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

CoefPoly CoefPoly::operator-() const { return scaled(-1); }

CoefPoly operator+(const CoefPoly& a, const CoefPoly& b) {
  require_same_universe(a.n_, b.n_);
  CoefPoly r(a.n_);
  r.terms_ = merge_add(a.terms_, b.terms_, 1);
  return r;
}

CoefPoly operator-(const CoefPoly& a, const CoefPoly& b) {
  require_same_universe(a.n_, b.n_);
  CoefPoly r(a.n_);
  r.terms_ = merge_add(a.terms_, b.terms_, -1);
  return r;
}

CoefPoly operator*(const CoefPoly& a, const CoefPoly& b) {
  require_same_universe(a.n_, b.n_);
  CoefPoly r(a.n_);
  r.terms_ = multiply_terms<Exponents, ExponentsHash>(a.terms_, b.terms_, add_exponents);
  return r;
}

CoefPoly CoefPoly::scaled(std::int64_t c) const {
  CoefPoly r(n_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second = checked_mul(t.second, c);
  return r;
}

std::string CoefPoly::to_string(std::span<const std::string> labels) const {
  return join_signed(terms_.size(), [&](std::size_t i) {
    const auto& [e, c] = terms_[i];
    return std::pair{c < 0, render_term(magnitude(c), &e, nullptr, n_, labels)};
  });
}

// ------------------------------------------------------ LaurentMonomialIndex

LaurentMonomialIndex::LaurentMonomialIndex(VertexMultiset numerator, VertexMultiset denominator)
    : u_(std::move(numerator)), t_(std::move(denominator)) {
  if (!u_.is_disjoint_from(t_)) throw PreconditionError("Laurent monomial numerator and denominator must be disjoint");
}

LaurentMonomialIndex LaurentMonomialIndex::from_exponents(std::size_t universe, const Exponents& x) {
  VertexMultiset u, t;
  for (std::uint32_t v = 0; v < universe; ++v) {
    if (x[v] > 0) u.add(VertexId{v}, x[v]);
    if (x[v] < 0) t.add(VertexId{v}, -x[v]);
  }
  return {std::move(u), std::move(t)};
}

Exponents LaurentMonomialIndex::exponents() const {
  Exponents e{};
  for (const auto& [v, c] : u_) e[v.index] = add_exponent(e[v.index], static_cast<std::int16_t>(c));
  for (const auto& [v, c] : t_) e[v.index] = add_exponent(e[v.index], static_cast<std::int16_t>(-c));
  return e;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(std::size_t universe, std::int64_t c) {
  return monomial(universe, Monomial{}, c);
}

LaurentPoly LaurentPoly::constant(const CoefPoly& c) {
  LaurentPoly p(c.universe());
  for (const auto& [e, k] : c.terms()) p.terms_.emplace_back(Monomial{Exponents{}, e}, k);
  return p;
}

LaurentPoly LaurentPoly::x(std::size_t universe, VertexId v, int exponent) {
  if (v.index >= universe) throw PreconditionError("vertex outside universe");
  Monomial m;
  m.x[v.index] = static_cast<std::int16_t>(exponent);
  return monomial(universe, m);
}

LaurentPoly LaurentPoly::a(std::size_t universe, VertexId v, int exponent) {
  if (v.index >= universe) throw PreconditionError("vertex outside universe");
  if (exponent < 0) throw PreconditionError("A-variables take nonnegative exponents");
  Monomial m;
  m.a[v.index] = static_cast<std::int16_t>(exponent);
  return monomial(universe, m);
}

LaurentPoly LaurentPoly::monomial(std::size_t universe, const Monomial& m, std::int64_t c) {
  require_universe(universe);
  LaurentPoly p(universe);
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

LaurentPoly LaurentPoly::laurent_monomial(std::size_t universe, const LaurentMonomialIndex& m) {
  return monomial(universe, Monomial{m.exponents(), Exponents{}});
}

LaurentPoly LaurentPoly::from_terms(std::size_t universe, std::vector<Term> terms) {
  require_universe(universe);
  LaurentPoly p(universe);
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

std::vector<std::pair<Exponents, CoefPoly>> LaurentPoly::x_terms() const {
  std::vector<std::pair<Exponents, CoefPoly>> out;
  for (const auto& [m, c] : terms_) {
    if (out.empty() || out.back().first != m.x) out.emplace_back(m.x, CoefPoly(n_));
    out.back().second.terms_.emplace_back(m.a, c);
  }
  return out;
}

CoefPoly LaurentPoly::coefficient_of(const Exponents& x) const {
  CoefPoly c(n_);
  auto lo = std::lower_bound(terms_.begin(), terms_.end(), x,
                             [](const Term& t, const Exponents& key) { return t.first.x < key; });
  for (auto it = lo; it != terms_.end() && it->first.x == x; ++it) c.terms_.emplace_back(it->first.a, it->second);
  return c;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_universe(a.n_, b.n_);
  LaurentPoly r(a.n_);
  r.terms_ = merge_add(a.terms_, b.terms_, 1);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_universe(a.n_, b.n_);
  LaurentPoly r(a.n_);
  r.terms_ = merge_add(a.terms_, b.terms_, -1);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_universe(a.n_, b.n_);
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);
  LaurentPoly r(a.n_);
  r.terms_ = multiply_terms<Monomial, MonomialHash>(a.terms_, b.terms_, add_monomials);
  return r;
}

LaurentPoly LaurentPoly::scaled(std::int64_t c) const {
  LaurentPoly r(n_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second = checked_mul(t.second, c);
  return r;
}

LaurentPoly LaurentPoly::times(const CoefPoly& c) const { return *this * LaurentPoly::constant(c); }

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  LaurentPoly r(n_);
  r.terms_.reserve(terms_.size());
  for (const auto& [k, c] : terms_) r.terms_.emplace_back(add_monomials(k, m), c);
  return r;
}

LaurentPoly LaurentPoly::divided_by_x(const VertexMultiset& t) const {
  Monomial m;
  for (const auto& [v, c] : t) {
    if (v.index >= n_) throw PreconditionError("vertex outside universe");
    m.x[v.index] = add_exponent(m.x[v.index], static_cast<std::int16_t>(-c));
  }
  return shifted(m);
}

std::int64_t LaurentPoly::coefficient_sum() const {
  std::int64_t s = 0;
  for (const auto& t : terms_) s = checked_add(s, t.second);
  return s;
}

bool LaurentPoly::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return std::all_of(t.first.x.begin(), t.first.x.end(), [](std::int16_t e) { return e >= 0; });
  });
}

std::uint64_t LaurentPoly::evaluate_mod(std::span<const std::uint64_t> x, std::span<const std::uint64_t> a,
                                        std::uint64_t p) const {
  if (x.size() < n_ || a.size() < n_) throw PreconditionError("evaluation point too short");
  std::vector<std::uint64_t> x_inv(n_);
  for (std::size_t v = 0; v < n_; ++v) x_inv[v] = x[v] % p == 0 ? 0 : pow_mod(x[v], p - 2, p);
  std::uint64_t total = 0;
  for (const auto& [m, c] : terms_) {
    std::uint64_t term = signed_to_mod(c, p);
    for (std::size_t v = 0; v < n_; ++v) {
      if (m.x[v] > 0) term = mul_mod(term, pow_mod(x[v], static_cast<std::uint64_t>(m.x[v]), p), p);
      if (m.x[v] < 0) {
        if (x_inv[v] == 0) throw PreconditionError("evaluation at a zero of a denominator");
        term = mul_mod(term, pow_mod(x_inv[v], static_cast<std::uint64_t>(-m.x[v]), p), p);
      }
      if (m.a[v] > 0) term = mul_mod(term, pow_mod(a[v], static_cast<std::uint64_t>(m.a[v]), p), p);
    }
    total = (total + term) % p;
  }
  return total;
}

std::string LaurentPoly::to_string(std::span<const std::string> labels) const {
  return join_signed(terms_.size(), [&](std::size_t i) {
    const auto& [m, c] = terms_[i];
    return std::pair{c < 0, render_term(magnitude(c), &m.a, &m.x, n_, labels)};
  });
}

std::string LaurentPoly::to_fraction_string(std::span<const std::string> labels) const {
  Exponents den{};
  for (const auto& [m, c] : terms_)
    for (std::size_t v = 0; v < n_; ++v) den[v] = std::max<std::int16_t>(den[v], static_cast<std::int16_t>(-m.x[v]));
  Monomial lift{den, Exponents{}};
  LaurentPoly num = shifted(lift);
  bool trivial = std::all_of(den.begin(), den.end(), [](std::int16_t e) { return e == 0; });
  if (trivial) return num.to_string(labels);
  std::string d;
  bool any = false;
  append_factors(d, any, "X", den, n_, labels);
  return "(" + num.to_string(labels) + ")/(" + d + ")";
}

// ------------------------------------------------------------- free helpers

CoefPoly coefficient_of(const LaurentPoly& p, const LaurentMonomialIndex& m) { return p.coefficient_of(m.exponents()); }

bool is_coefficientwise_nonnegative(const LaurentPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const LaurentPoly::Term& t) { return t.second > 0; });
}

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i + 1));
  return out;
}

}  // namespace glp
