#include "dualart/artin.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "dualart/error.hpp"
#include "dualart/hurwitz.hpp"
#include "json.hpp"

namespace dualart {

SimpleTable::SimpleTable(SystemPtr system, const GroupElement& w0)
    : system_(std::move(system)), rank_(system_->rank()) {
  intern_locked(system_->identity());
  w0_ = intern_locked(w0);
}

SimpleTable::Id SimpleTable::intern_locked(const GroupElement& g) {
  auto [it, fresh] = index_.try_emplace(g.key(), static_cast<Id>(elements_.size()));
  if (!fresh) return it->second;
  elements_.push_back(g);
  left_.push_back(g.descent_mask(Side::Left));
  right_.push_back(g.descent_mask(Side::Right));
  times_.resize(times_.size() + rank_, kUnknown);
  pre_.resize(pre_.size() + rank_, kUnknown);
  twisted_.push_back(kUnknown);
  complement_.push_back(kUnknown);
  return it->second;
}

SimpleTable::Id SimpleTable::intern(const GroupElement& g) {
  std::lock_guard lock(mutex_);
  return intern_locked(g);
}

const GroupElement& SimpleTable::element(Id id) const {
  std::lock_guard lock(mutex_);
  return elements_.at(id);
}

std::uint64_t SimpleTable::left_descents(Id id) const {
  std::lock_guard lock(mutex_);
  return left_[id];
}

std::uint64_t SimpleTable::right_descents(Id id) const {
  std::lock_guard lock(mutex_);
  return right_[id];
}

SimpleTable::Id SimpleTable::times(Id id, std::size_t s) {
  std::lock_guard lock(mutex_);
  auto& slot = times_[id * rank_ + s];
  if (slot == kUnknown) {
    const Id r = intern_locked(elements_[id].times_generator(s));
    times_[id * rank_ + s] = r;
    return r;
  }
  return static_cast<Id>(slot);
}

SimpleTable::Id SimpleTable::pre(std::size_t s, Id id) {
  std::lock_guard lock(mutex_);
  if (pre_[id * rank_ + s] == kUnknown) {
    const Id r = intern_locked(elements_[id].generator_times(s));
    pre_[id * rank_ + s] = r;
  }
  return static_cast<Id>(pre_[id * rank_ + s]);
}

SimpleTable::Id SimpleTable::twisted(Id id) {
  std::lock_guard lock(mutex_);
  if (twisted_[id] == kUnknown) {
    const GroupElement& w0 = elements_[w0_];
    const Id r = intern_locked(w0 * elements_[id] * w0);
    twisted_[id] = r;
  }
  return static_cast<Id>(twisted_[id]);
}

SimpleTable::Id SimpleTable::complement(Id id) {
  std::lock_guard lock(mutex_);
  if (complement_[id] == kUnknown) {
    const Id r = intern_locked(elements_[w0_] * inverse(elements_[id]));
    complement_[id] = r;
  }
  return static_cast<Id>(complement_[id]);
}

namespace {

// Slide letters of L(v) missing from R(u) across the seam.
bool make_left_weighted(SimpleTable& t, SimpleTable::Id& u, SimpleTable::Id& v) {
  bool changed = false;
  for (;;) {
    const std::uint64_t missing = t.left_descents(v) & ~t.right_descents(u);
    if (!missing) return changed;
    const auto s = static_cast<std::size_t>(std::countr_zero(missing));
    u = t.times(u, s);
    v = t.pre(s, v);
    changed = true;
  }
}

}  // namespace

ArtinSystem::ArtinSystem(CoxeterMatrix matrix) : matrix_(std::move(matrix)) {
  const std::size_t n = matrix_.rank();
  factor_of_.assign(n, n);
  local_.assign(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (factor_of_[s] != n) continue;
    std::vector<std::size_t> comp{s}, stack{s};
    const std::size_t id = factors_.size();
    factor_of_[s] = id;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (v != u && !matrix_.is_infinite(u, v) && factor_of_[v] == n) {
          factor_of_[v] = id;
          comp.push_back(v);
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    for (std::size_t k = 0; k < comp.size(); ++k) local_[comp[k]] = k;
    auto sys = CoxeterSystem::create(matrix_.restrict_to(comp));
    if (!sys->is_spherical())
      throw UnsupportedSystem("the factor on generators " + std::to_string(comp.front() + 1) +
                              ",... is infinite and has no Garside structure here");
    GroupElement w0 = longest_element(sys);
    bool central = true;
    for (std::size_t k = 0; k < sys->rank() && central; ++k)
      central = w0 * sys->generator(k) == sys->generator(k) * w0;
    auto table = std::make_shared<SimpleTable>(sys, w0);
    factors_.push_back({comp, sys, std::move(w0), central, std::move(table)});
  }
}

std::shared_ptr<const ArtinSystem> ArtinSystem::create(const CoxeterMatrix& matrix) {
  return std::shared_ptr<const ArtinSystem>(new ArtinSystem(matrix));
}

namespace {

// Append one simple to a left-weighted form and restore the invariants.
void append_simple(const ArtinSystem::Factor& f, GarsideForm& out, SimpleTable::Id s) {
  if (s == 0) return;
  SimpleTable& t = *f.table;
  auto& v = out.simples;
  v.push_back(s);
  for (std::size_t i = v.size(); i-- > 1;)
    if (!make_left_weighted(t, v[i - 1], v[i])) break;
  std::erase(v, SimpleTable::Id{0});
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == t.w0()) ++lead;
  if (lead) {
    out.delta += static_cast<long>(lead);
    v.erase(v.begin(), v.begin() + static_cast<long>(lead));
  }
}

SimpleTable::Id twist(const ArtinSystem::Factor& f, SimpleTable::Id s, long power) {
  if (f.w0_central || power % 2 == 0) return s;
  return f.table->twisted(s);
}

}  // namespace

GarsideForm ArtinSystem::normalize(std::size_t factor, long delta,
                                   const std::vector<GroupElement>& simples) const {
  const Factor& f = factors_[factor];
  GarsideForm out{delta, {}};
  for (const auto& s : simples) append_simple(f, out, f.table->intern(s));
  return out;
}

GarsideForm ArtinSystem::multiply(std::size_t factor, const GarsideForm& a,
                                  const GarsideForm& b) const {
  const Factor& f = factors_[factor];
  // Delta^p A Delta^q B = Delta^(p+q) tau^q(A) B
  GarsideForm out{a.delta + b.delta, {}};
  out.simples.reserve(a.simples.size() + b.simples.size());
  for (auto s : a.simples) out.simples.push_back(twist(f, s, b.delta));
  for (auto s : b.simples) append_simple(f, out, s);
  return out;
}

GarsideForm ArtinSystem::invert(std::size_t factor, const GarsideForm& a) const {
  const Factor& f = factors_[factor];
  // a_i^-1 = Delta^-1 x_i with x_i = w0 a_i^-1; gather the Delta^-1 in front
  const long r = static_cast<long>(a.simples.size());
  GarsideForm out{-a.delta - r, {}};
  for (long i = r; i >= 1; --i) {
    const auto x = f.table->complement(a.simples[static_cast<std::size_t>(i - 1)]);
    append_simple(f, out, twist(f, x, a.delta + i - 1));
  }
  return out;
}

ArtinElement ArtinSystem::identity() const { return ArtinElement(shared_from_this(), {}); }

ArtinElement ArtinSystem::generator(std::size_t i) const {
  if (i >= rank()) throw IndexOutOfRange("Artin generator " + std::to_string(i + 1));
  const std::size_t f = factor_of_[i];
  GarsideForm form = normalize(f, 0, {factors_[f].system->generator(local_[i])});
  return ArtinElement(shared_from_this(), {{f, std::move(form)}});
}

ArtinElement ArtinSystem::from_word(const std::vector<int>& letters) const {
  ArtinElement acc = identity();
  for (int l : letters) {
    if (l == 0) throw IndexOutOfRange("letter 0");
    ArtinElement g = generator(static_cast<std::size_t>(std::abs(l)) - 1);
    acc = acc * (l > 0 ? g : inverse(g));
  }
  return acc;
}

std::vector<ArtinElement> ArtinSystem::artin_tuple() const {
  std::vector<ArtinElement> out;
  for (auto o : matrix_.order()) out.push_back(generator(o));
  return out;
}

ArtinElement ArtinSystem::delta(std::size_t factor, long power) const {
  if (power == 0) return identity();
  return ArtinElement(shared_from_this(), {{factor, GarsideForm{power, {}}}});
}

ArtinElement::ArtinElement(ArtinSystemPtr system, std::vector<Syllable> syllables)
    : system_(std::move(system)), syllables_(std::move(syllables)) {}

ArtinElement operator*(const ArtinElement& a, const ArtinElement& b) {
  if (a.system_ != b.system_ && !(a.system_->matrix() == b.system_->matrix()))
    throw SystemMismatch("Artin elements of different systems");
  std::vector<Syllable> out = a.syllables_;
  for (const auto& syl : b.syllables_) {
    if (!out.empty() && out.back().factor == syl.factor) {
      GarsideForm f = a.system_->multiply(syl.factor, out.back().form, syl.form);
      out.pop_back();
      if (!f.is_identity()) out.push_back({syl.factor, std::move(f)});
    } else {
      out.push_back(syl);
    }
  }
  return ArtinElement(a.system_, std::move(out));
}

ArtinElement inverse(const ArtinElement& a) {
  std::vector<Syllable> out;
  for (auto it = a.syllables_.rbegin(); it != a.syllables_.rend(); ++it)
    out.push_back({it->factor, a.system_->invert(it->factor, it->form)});
  return ArtinElement(a.system_, std::move(out));
}

bool operator==(const ArtinElement& a, const ArtinElement& b) {
  if (a.system_ == b.system_) return a.syllables_ == b.syllables_;
  if (!(a.system_->matrix() == b.system_->matrix()))
    throw SystemMismatch("Artin elements of different systems");
  return canonical_key(a) == canonical_key(b);
}

namespace {

std::string simple_name(const ArtinSystem& sys, std::size_t factor, SimpleTable::Id id) {
  std::string s;
  for (auto i : sys.factors()[factor].simple(id).reduced_word()) s += "s" + std::to_string(sys.factors()[factor].indices[i] + 1);
  return s;
}

}  // namespace

std::string ArtinElement::to_string() const {
  if (syllables_.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < syllables_.size(); ++k) {
    if (k) s += " * ";
    const auto& syl = syllables_[k];
    std::string part;
    if (syl.form.delta != 0)
      part += "D" + std::to_string(syl.factor + 1) + "^" + std::to_string(syl.form.delta);
    for (const auto& x : syl.form.simples) part += "[" + simple_name(*system_, syl.factor, x) + "]";
    s += part;
  }
  return s;
}

std::string ArtinElement::to_json() const {
  using nlohmann::json;
  json syl = json::array();
  for (const auto& x : syllables_) {
    json simples = json::array();
    for (auto g : x.form.simples)
      simples.push_back(json::parse(serialize_element(system_->factors()[x.factor].simple(g))));
    syl.push_back({{"factor", x.factor}, {"delta_pow", x.form.delta}, {"simples", simples}});
  }
  return json{{"syllables", syl}}.dump();
}

std::string canonical_key(const ArtinElement& a) {
  std::string s;
  for (const auto& x : a.syllables()) {
    s += std::to_string(x.factor) + ":" + std::to_string(x.form.delta);
    for (auto g : x.form.simples) s += "/" + a.system().factors()[x.factor].simple(g).key();
    s += ";";
  }
  return s;
}

WellStabilized well_stabilized_check(const CoxeterMatrix& matrix, std::size_t cap) {
  WellStabilized out;
  const auto art = ArtinSystem::create(matrix);
  const auto w = CoxeterSystem::create(matrix);
  const std::size_t n = matrix.rank();
  const auto orbit = hurwitz_orbit(w->coxeter_tuple(), cap);
  out.orbit_size = orbit.size();
  out.orbit_complete = orbit.complete;
  if (orbit.complete) {
    out.generators = schreier_stabilizer(orbit);
    out.method = "schreier";
  } else {
    // blocks of consecutive positions in the order, one per factor
    const auto& order = matrix.order();
    std::vector<std::size_t> starts;
    bool contiguous = art->factors().size() > 1;
    for (std::size_t p = 0; p < n && contiguous; ++p) {
      if (p == 0 || art->factor_of(order[p]) != art->factor_of(order[p - 1])) starts.push_back(p);
    }
    contiguous = contiguous && starts.size() == art->factors().size();
    if (!contiguous) {
      out.method = "none";
      out.verdict = Verdict::Inconclusive;
      return out;
    }
    starts.push_back(n);
    for (std::size_t b = 0; b + 1 < starts.size(); ++b) {
      std::vector<std::size_t> block(order.begin() + static_cast<long>(starts[b]),
                                     order.begin() + static_cast<long>(starts[b + 1]));
      const auto sub = CoxeterSystem::create(matrix.restrict_to(block));
      const auto o = hurwitz_orbit(sub->coxeter_tuple(), cap);
      if (!o.complete) {
        out.method = "none";
        out.verdict = Verdict::Inconclusive;
        out.generators.clear();
        return out;
      }
      for (const auto& g : schreier_stabilizer(o))
        out.generators.push_back(g.embedded(starts[b], n));
    }
    out.method = "free-product";
  }
  const auto tuple = art->artin_tuple();
  const std::string key = tuple_key(tuple);
  for (const auto& g : out.generators) {
    if (tuple_key(hurwitz_apply(g, tuple)) != key) {
      out.verdict = Verdict::Refuted;
      out.witness = g;
      return out;
    }
  }
  out.verdict = Verdict::Proven;
  return out;
}

TauEquivalence tau_equivalences(const SystemPtr& w, const ArtinSystemPtr& art, const BraidWord& tau,
                                const BraidWord& tau2) {
  const auto wt = w->coxeter_tuple();
  const auto at = art->artin_tuple();
  TauEquivalence r{};
  r.approx = hurwitz_apply(tau, wt).back() == hurwitz_apply(tau2, wt).back();
  r.dot_approx = hurwitz_apply(tau, at).back() == hurwitz_apply(tau2, at).back();
  return r;
}

TauEquivalence tau_equivalences(const CoxeterMatrix& matrix, const BraidWord& tau,
                                const BraidWord& tau2) {
  return tau_equivalences(CoxeterSystem::create(matrix), ArtinSystem::create(matrix), tau, tau2);
}

}  // namespace dualart
