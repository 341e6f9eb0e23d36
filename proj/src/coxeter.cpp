#include "dualart/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "dualart/error.hpp"
#include "json.hpp"

namespace dualart {

using nlohmann::json;

// ---------------------------------------------------------------- matrix

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<unsigned>> rows,
                             std::vector<std::size_t> order) {
  const std::size_t n = rows.size();
  if (n == 0) throw InvalidMatrix("rank 0 system");
  for (const auto& r : rows)
    if (r.size() != n) throw InvalidMatrix("matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i][i] != 1) throw InvalidMatrix("diagonal entry m(" + std::to_string(i + 1) + "," +
                                             std::to_string(i + 1) + ") must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i])
        throw InvalidMatrix("m(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") != m(" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ")");
      if (i != j && rows[i][j] == 1)
        throw InvalidMatrix("off-diagonal entry equal to 1");
    }
  }
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  if (order.size() != n) throw InvalidMatrix("order has wrong length");
  std::vector<bool> seen(n, false);
  for (auto o : order) {
    if (o >= n || seen[o]) throw InvalidMatrix("order is not a permutation");
    seen[o] = true;
  }
  rank_ = n;
  entries_.reserve(n * n);
  for (const auto& r : rows) entries_.insert(entries_.end(), r.begin(), r.end());
  order_ = std::move(order);
}

std::vector<std::vector<unsigned>> CoxeterMatrix::rows() const {
  std::vector<std::vector<unsigned>> out(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    out[i].assign(entries_.begin() + i * rank_, entries_.begin() + (i + 1) * rank_);
  return out;
}

unsigned long CoxeterMatrix::conductor() const {
  unsigned long n = 1;
  for (auto m : entries_)
    if (m >= 3) n = std::lcm(n, static_cast<unsigned long>(m));
  return n;
}

CoxeterMatrix CoxeterMatrix::restrict_to(std::span<const std::size_t> indices) const {
  std::vector<std::vector<unsigned>> rows(indices.size(), std::vector<unsigned>(indices.size()));
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b) rows[a][b] = (*this)(indices[a], indices[b]);
  return CoxeterMatrix(std::move(rows));
}

// ---------------------------------------------------------------- parsing

namespace {

unsigned entry_from_json(const json& v) {
  if (v.is_number_integer()) {
    const auto x = v.get<long long>();
    if (x < 1 || x > 1'000'000) throw InvalidMatrix("entry out of range: " + v.dump());
    return static_cast<unsigned>(x);
  }
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "inf" || s == "infinity" || s == "\xE2\x88\x9E") return kInfinity;
  }
  throw ParseError("matrix entries must be integers or \"inf\", got " + v.dump());
}

CoxeterMatrix from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("matrix")) throw ParseError("missing \"matrix\"");
  const json& m = doc.at("matrix");
  if (!m.is_array()) throw ParseError("\"matrix\" must be an array");
  std::vector<std::vector<unsigned>> rows;
  for (const auto& r : m) {
    if (!r.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<unsigned> row;
    for (const auto& v : r) row.push_back(entry_from_json(v));
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> order;
  if (doc.contains("order")) {
    const json& o = doc.at("order");
    if (!o.is_array()) throw ParseError("\"order\" must be an array");
    for (const auto& v : o) {
      if (!v.is_number_integer() || v.get<long long>() < 1)
        throw ParseError("order entries must be positive integers");
      order.push_back(static_cast<std::size_t>(v.get<long long>() - 1));
    }
    if (order.empty()) throw ParseError("empty order");
  }
  return CoxeterMatrix(std::move(rows), std::move(order));
}

// Minimal TOML reader for `key = [ ... ]` assignments; values are arrays
// of integers and quoted strings, which are rewritten as JSON.
json toml_subset(const std::string& text) {
  std::string cleaned;
  bool in_str = false;
  char quote = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_str) {
      cleaned += c == '\'' ? '"' : c;
      if (c == quote) in_str = false;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      cleaned += '\n';
      continue;
    }
    if (c == '"' || c == '\'') {
      in_str = true;
      quote = c;
      cleaned += '"';
      continue;
    }
    cleaned += c;
  }
  json doc = json::object();
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < cleaned.size() && std::isspace(static_cast<unsigned char>(cleaned[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= cleaned.size()) break;
    std::string key;
    while (i < cleaned.size() &&
           (std::isalnum(static_cast<unsigned char>(cleaned[i])) || cleaned[i] == '_'))
      key += cleaned[i++];
    if (key.empty()) throw ParseError("expected a key");
    skip_ws();
    if (i >= cleaned.size() || cleaned[i] != '=') throw ParseError("expected '=' after " + key);
    ++i;
    skip_ws();
    if (i >= cleaned.size() || cleaned[i] != '[') throw ParseError("expected array for " + key);
    const std::size_t start = i;
    int depth = 0;
    bool str = false;
    for (; i < cleaned.size(); ++i) {
      const char c = cleaned[i];
      if (str) {
        if (c == '"') str = false;
        continue;
      }
      if (c == '"') str = true;
      else if (c == '[') ++depth;
      else if (c == ']' && --depth == 0) break;
    }
    if (depth != 0) throw ParseError("unbalanced brackets in " + key);
    std::string value = cleaned.substr(start, i - start + 1);
    ++i;
    // TOML allows trailing commas
    std::string compact;
    for (std::size_t k = 0; k < value.size(); ++k) {
      if (value[k] == ',') {
        std::size_t t = k + 1;
        while (t < value.size() && std::isspace(static_cast<unsigned char>(value[t]))) ++t;
        if (t < value.size() && value[t] == ']') continue;
      }
      compact += value[k];
    }
    try {
      doc[key] = json::parse(compact);
    } catch (const json::exception& e) {
      throw ParseError("bad TOML array for " + key + ": " + e.what());
    }
  }
  return doc;
}

}  // namespace

CoxeterMatrix parse_system(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception&) {
    doc = toml_subset(text);
  }
  return from_json(doc);
}

std::string serialize_system(const CoxeterMatrix& m) {
  json rows = json::array();
  for (const auto& r : m.rows()) {
    json row = json::array();
    for (auto v : r) {
      if (v == kInfinity) row.push_back("inf");
      else row.push_back(v);
    }
    rows.push_back(row);
  }
  json order = json::array();
  for (auto o : m.order()) order.push_back(o + 1);
  return json{{"matrix", rows}, {"order", order}}.dump();
}

// ---------------------------------------------------------------- system

namespace {

// Memoized Laplace expansion over column subsets.
Scalar determinant(const std::vector<std::vector<Scalar>>& a,
                   const std::shared_ptr<const NumberField>& field) {
  const std::size_t n = a.size();
  std::unordered_map<std::uint64_t, Scalar> memo;
  auto rec = [&](auto&& self, std::size_t row, std::uint64_t cols) -> Scalar {
    if (row == n) return Scalar::from_integer(field, 1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    Scalar acc = Scalar::from_integer(field, 0);
    int parity = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols >> j & 1)) continue;
      if (!a[row][j].is_zero()) {
        Scalar term = a[row][j] * self(self, row + 1, cols & ~(std::uint64_t{1} << j));
        acc = parity ? acc - term : acc + term;
      }
      parity ^= 1;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return rec(rec, 0, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

}  // namespace

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix)
    : matrix_(std::move(matrix)),
      field_(std::make_shared<NumberField>(matrix_.conductor())) {
  const std::size_t n = matrix_.rank(), d = field_->degree();
  rows_.assign(n * n * d, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> v(d, 0);
      if (i == j) v[0] = -1;
      else v = field_->two_cos_pi_over(matrix_(i, j));
      std::copy(v.begin(), v.end(), rows_.begin() + (i * n + j) * d);
    }
  if (n > 24) throw UnsupportedSystem("rank above 24");
  // Sylvester's criterion on the leading principal minors of 2B
  spherical_ = true;
  for (std::size_t k = 1; k <= n && spherical_; ++k) {
    std::vector<std::vector<Scalar>> minor;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Scalar> row;
      for (std::size_t j = 0; j < k; ++j) row.push_back(form(i, j));
      minor.push_back(std::move(row));
    }
    if (determinant(minor, field_).sign() <= 0) spherical_ = false;
  }
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::create(CoxeterMatrix matrix) {
  return std::shared_ptr<const CoxeterSystem>(new CoxeterSystem(std::move(matrix)));
}

std::span<const Rational> CoxeterSystem::generator_row(std::size_t i, std::size_t j) const {
  const std::size_t n = rank(), d = field_->degree();
  return {rows_.data() + (i * n + j) * d, d};
}

Scalar CoxeterSystem::form(std::size_t i, std::size_t j) const {
  // row i of s_i is delta_ij - 2B(alpha_i, alpha_j)
  auto r = generator_row(i, j);
  std::vector<Rational> v(r.begin(), r.end());
  for (auto& q : v) q = -q;
  if (i == j) v[0] += 1;
  return Scalar(field_, std::move(v));
}

bool CoxeterSystem::is_spherical() const { return spherical_; }

GroupElement CoxeterSystem::identity() const {
  const std::size_t n = rank(), d = field_->degree();
  std::vector<Rational> id(n * n * d, 0);
  for (std::size_t i = 0; i < n; ++i) id[(i * n + i) * d] = 1;
  return GroupElement(shared_from_this(), id, id, 0);
}

GroupElement CoxeterSystem::generator(std::size_t i) const {
  if (i >= rank())
    throw IndexOutOfRange("generator " + std::to_string(i) + " of rank " + std::to_string(rank()));
  const std::size_t n = rank(), d = field_->degree();
  std::vector<Rational> m(n * n * d, 0);
  for (std::size_t k = 0; k < n; ++k) m[(k * n + k) * d] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    auto r = generator_row(i, j);
    std::copy(r.begin(), r.end(), m.begin() + (i * n + j) * d);
  }
  return GroupElement(shared_from_this(), m, m, 1);
}

GroupElement CoxeterSystem::from_word(std::span<const std::size_t> word) const {
  GroupElement g = identity();
  for (auto i : word) g = g.times_generator(i);
  return g;
}

std::vector<GroupElement> CoxeterSystem::coxeter_tuple() const {
  std::vector<GroupElement> out;
  for (auto o : matrix_.order()) out.push_back(generator(o));
  return out;
}

GroupElement CoxeterSystem::coxeter_element() const { return from_word(matrix_.order()); }

void require_same_system(const CoxeterSystem& a, const CoxeterSystem& b) {
  if (&a == &b) return;
  if (!(a.matrix().rows() == b.matrix().rows()))
    throw SystemMismatch("elements belong to different Coxeter systems");
}

// ---------------------------------------------------------------- elements

namespace {

std::vector<Rational> mat_mul(const NumberField& f, std::size_t n, const std::vector<Rational>& a,
                              const std::vector<Rational>& b) {
  const std::size_t d = f.degree();
  std::vector<Rational> out(n * n * d, 0);
  if (d == 1) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& x = a[r * n + k];
        if (x == 0) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (b[k * n + c] != 0) out[r * n + c] += x * b[k * n + c];
      }
    return out;
  }
  std::vector<Rational> acc(2 * d - 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < n; ++k)
        f.multiply_accumulate({a.data() + (r * n + k) * d, d}, {b.data() + (k * n + c) * d, d}, acc);
      f.reduce(acc, {out.data() + (r * n + c) * d, d});
    }
  return out;
}

// m <- m * s_i: col_j += g_ij col_i for j != i, then col_i <- -col_i
void right_mul_gen(const CoxeterSystem& sys, std::vector<Rational>& m, std::size_t i) {
  const std::size_t n = sys.rank(), d = sys.field().degree();
  std::vector<Rational> tmp(d);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    auto g = sys.generator_row(i, j);
    if (NumberField::is_zero(g)) continue;
    for (std::size_t r = 0; r < n; ++r) {
      std::span<const Rational> src{m.data() + (r * n + i) * d, d};
      if (NumberField::is_zero(src)) continue;
      sys.field().multiply(src, g, tmp);
      for (std::size_t k = 0; k < d; ++k) m[(r * n + j) * d + k] += tmp[k];
    }
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < d; ++k) {
      auto& q = m[(r * n + i) * d + k];
      q = -q;
    }
}

// m <- s_i * m: row_i <- -row_i + sum_{l != i} g_il row_l
void left_mul_gen(const CoxeterSystem& sys, std::vector<Rational>& m, std::size_t i) {
  const std::size_t n = sys.rank(), d = sys.field().degree();
  std::vector<Rational> tmp(d);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t k = 0; k < d; ++k) {
      auto& q = m[(i * n + c) * d + k];
      q = -q;
    }
  for (std::size_t l = 0; l < n; ++l) {
    if (l == i) continue;
    auto g = sys.generator_row(i, l);
    if (NumberField::is_zero(g)) continue;
    for (std::size_t c = 0; c < n; ++c) {
      std::span<const Rational> src{m.data() + (l * n + c) * d, d};
      if (NumberField::is_zero(src)) continue;
      sys.field().multiply(g, src, tmp);
      for (std::size_t k = 0; k < d; ++k) m[(i * n + c) * d + k] += tmp[k];
    }
  }
}

bool is_identity_matrix(const std::vector<Rational>& m, std::size_t n, std::size_t d) {
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& q = m[(r * n + c) * d + k];
        if (q != ((r == c && k == 0) ? 1 : 0)) return false;
      }
  return true;
}

}  // namespace

GroupElement::GroupElement(SystemPtr system, std::vector<Rational> mat, std::vector<Rational> inv,
                           std::optional<std::size_t> known_length)
    : system_(std::move(system)),
      mat_(std::move(mat)),
      inv_(std::move(inv)),
      known_length_(known_length) {}

std::span<const Rational> GroupElement::entry(std::size_t r, std::size_t c) const {
  const std::size_t n = rank(), d = system_->field().degree();
  return {mat_.data() + (r * n + c) * d, d};
}

Scalar GroupElement::entry_scalar(std::size_t r, std::size_t c) const {
  auto e = entry(r, c);
  return Scalar(system_->field_ptr(), std::vector<Rational>(e.begin(), e.end()));
}

bool GroupElement::is_identity() const {
  return is_identity_matrix(mat_, rank(), system_->field().degree());
}

bool GroupElement::column_negative(const std::vector<Rational>& m, std::size_t col) const {
  // w(alpha) is a root: all coordinates share one sign
  const std::size_t n = rank(), d = system_->field().degree();
  for (std::size_t r = 0; r < n; ++r) {
    std::span<const Rational> e{m.data() + (r * n + col) * d, d};
    const int s = system_->field().sign(e);
    if (s != 0) return s < 0;
  }
  return false;
}

bool GroupElement::is_descent(std::size_t i, Side side) const {
  if (i >= rank()) throw IndexOutOfRange("descent index");
  // right: w(alpha_i) < 0; left: w^-1(alpha_i) < 0
  return column_negative(side == Side::Right ? mat_ : inv_, i);
}

std::vector<std::size_t> GroupElement::descents(Side side) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rank(); ++i)
    if (is_descent(i, side)) out.push_back(i);
  return out;
}

std::uint64_t GroupElement::descent_mask(Side side) const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    if (is_descent(i, side)) mask |= std::uint64_t{1} << i;
  return mask;
}

std::size_t GroupElement::length() const {
  if (known_length_) return *known_length_;
  const std::size_t n = rank(), d = system_->field().degree();
  std::vector<Rational> m = mat_;
  std::size_t len = 0;
  while (!is_identity_matrix(m, n, d)) {
    std::size_t i = 0;
    while (i < n && !column_negative(m, i)) ++i;
    if (i == n) throw std::logic_error("non-identity element without descent");
    right_mul_gen(*system_, m, i);
    ++len;
  }
  return len;
}

GroupElement GroupElement::times_generator(std::size_t i) const {
  if (i >= rank()) throw IndexOutOfRange("generator index");
  std::vector<Rational> m = mat_, v = inv_;
  right_mul_gen(*system_, m, i);
  left_mul_gen(*system_, v, i);
  std::optional<std::size_t> len;
  if (known_length_) len = is_descent(i, Side::Right) ? *known_length_ - 1 : *known_length_ + 1;
  return GroupElement(system_, std::move(m), std::move(v), len);
}

GroupElement GroupElement::generator_times(std::size_t i) const {
  if (i >= rank()) throw IndexOutOfRange("generator index");
  std::vector<Rational> m = mat_, v = inv_;
  left_mul_gen(*system_, m, i);
  right_mul_gen(*system_, v, i);
  std::optional<std::size_t> len;
  if (known_length_) len = is_descent(i, Side::Left) ? *known_length_ - 1 : *known_length_ + 1;
  return GroupElement(system_, std::move(m), std::move(v), len);
}

std::vector<std::size_t> GroupElement::reduced_word() const {
  std::vector<std::size_t> word;
  GroupElement w = *this;
  while (!w.is_identity()) {
    std::size_t i = 0;
    while (!w.is_descent(i, Side::Left)) ++i;
    word.push_back(i);
    w = w.generator_times(i);
  }
  return word;
}

std::string GroupElement::key() const {
  const std::size_t n = rank(), d = system_->field().degree();
  std::string s;
  s.reserve(mat_.size() * 3);
  for (std::size_t r = 0; r < n; ++r) {
    if (r) s += ';';
    for (std::size_t c = 0; c < n; ++c) {
      if (c) s += ',';
      for (std::size_t k = 0; k < d; ++k) {
        if (k) s += ' ';
        s += mat_[(r * n + c) * d + k].get_str();
      }
    }
  }
  return s;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  require_same_system(*a.system_, *b.system_);
  const std::size_t n = a.rank();
  const auto& f = a.system_->field();
  return GroupElement(a.system_, mat_mul(f, n, a.mat_, b.mat_), mat_mul(f, n, b.inv_, a.inv_));
}

GroupElement inverse(const GroupElement& a) {
  return GroupElement(a.system_, a.inv_, a.mat_, a.known_length_);
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  if (a.system_ != b.system_) require_same_system(*a.system_, *b.system_);
  return a.mat_ == b.mat_;
}

std::string serialize_element(const GroupElement& g) {
  json rows = json::array();
  for (std::size_t r = 0; r < g.rank(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < g.rank(); ++c) {
      json coeffs = json::array();
      for (const auto& q : g.entry(r, c)) coeffs.push_back(rational_to_string(q));
      row.push_back(coeffs);
    }
    rows.push_back(row);
  }
  return rows.dump();
}

GroupEnumeration enumerate_group(const SystemPtr& system, std::size_t cap) {
  GroupEnumeration out;
  std::unordered_set<std::string> seen;
  out.elements.push_back(system->identity());
  seen.insert(out.elements.back().key());
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (std::size_t i = 0; i < system->rank(); ++i) {
      GroupElement next = out.elements[head].times_generator(i);
      if (!seen.insert(next.key()).second) continue;
      if (out.elements.size() == cap) {
        out.exceeds_cap = true;
        return out;
      }
      out.elements.push_back(std::move(next));
    }
  }
  return out;
}

GroupElement longest_element(const SystemPtr& system) {
  if (!system->is_spherical()) throw UnsupportedSystem("longest element of an infinite group");
  GroupElement w = system->identity();
  for (;;) {
    std::size_t i = 0;
    while (i < system->rank() && w.is_descent(i, Side::Right)) ++i;
    if (i == system->rank()) return w;
    w = w.times_generator(i);
  }
}

}  // namespace dualart
