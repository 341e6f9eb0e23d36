#include "dualart/interval.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace dualart {

IntervalPoset::IntervalPoset(SystemPtr system, Orbit<GroupElement> orbit)
    : system_(std::move(system)), orbit_(std::move(orbit)) {
  struct Raw {
    std::string key;
    std::size_t height;
    GroupElement g;
  };
  std::unordered_map<std::string, std::size_t> raw_index;
  std::vector<Raw> raw;
  std::unordered_map<std::string, GroupElement> label_by_key;
  std::vector<std::tuple<std::string, std::string, std::string>> raw_covers;
  auto intern = [&](const GroupElement& g, std::size_t h) -> std::string {
    std::string k = g.key();
    if (!raw_index.contains(k)) {
      raw_index.emplace(k, raw.size());
      raw.push_back({k, h, g});
    }
    return k;
  };
  for (const auto& t : orbit_.nodes) {
    GroupElement acc = system_->identity();
    std::string prev = intern(acc, 0);
    for (std::size_t i = 0; i < t.size(); ++i) {
      acc = acc * t[i];
      std::string cur = intern(acc, i + 1);
      std::string lk = t[i].key();
      label_by_key.try_emplace(lk, t[i]);
      raw_covers.emplace_back(prev, cur, std::move(lk));
      prev = std::move(cur);
    }
  }
  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (raw[a].height != raw[b].height) return raw[a].height < raw[b].height;
    return raw[a].key < raw[b].key;
  });
  for (std::size_t p : perm) {
    index_.emplace(raw[p].key, elements_.size());
    keys_.push_back(raw[p].key);
    heights_.push_back(raw[p].height);
    elements_.push_back(raw[p].g);
  }
  std::vector<std::string> label_keys;
  for (const auto& [k, g] : label_by_key) label_keys.push_back(k);
  std::sort(label_keys.begin(), label_keys.end());
  std::unordered_map<std::string, std::size_t> label_index;
  for (const auto& k : label_keys) {
    label_index.emplace(k, labels_.size());
    labels_.push_back(label_by_key.at(k));
  }
  std::vector<Cover> covers;
  for (const auto& [lo, hi, lab] : raw_covers)
    covers.push_back({index_.at(lo), index_.at(hi), label_index.at(lab)});
  std::sort(covers.begin(), covers.end(), [](const Cover& a, const Cover& b) {
    return std::tie(a.lower, a.upper) < std::tie(b.lower, b.upper);
  });
  for (const auto& c : covers)
    if (covers_.empty() || covers_.back().lower != c.lower || covers_.back().upper != c.upper)
      covers_.push_back(c);
  below_.resize(elements_.size());
  above_.resize(elements_.size());
  for (std::size_t c = 0; c < covers_.size(); ++c) {
    below_[covers_[c].upper].push_back(c);
    above_[covers_[c].lower].push_back(c);
  }
  for (std::size_t e = 0; e < elements_.size(); ++e)
    if (heights_[e] == 1) atoms_.push_back(e);
}

std::optional<std::size_t> IntervalPoset::find(const GroupElement& g) const {
  require_same_system(*system_, g.system());
  auto it = index_.find(g.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t IntervalPoset::index_of(const GroupElement& g) const {
  if (auto i = find(g)) return *i;
  throw NotInInterval(element_name(g) + " is not in the interval");
}

std::optional<std::size_t> IntervalPoset::top() const {
  return find(system_->coxeter_element());
}

std::optional<std::size_t> IntervalPoset::atom_number(const GroupElement& g) const {
  auto e = find(g);
  if (!e || heights_[*e] != 1) return std::nullopt;
  return static_cast<std::size_t>(std::lower_bound(atoms_.begin(), atoms_.end(), *e) - atoms_.begin());
}

bool IntervalPoset::leq(std::size_t a, std::size_t b) const {
  if (heights_[a] > heights_[b]) return false;
  std::vector<bool> seen(elements_.size(), false);
  std::vector<std::size_t> stack{a};
  seen[a] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    if (u == b) return true;
    for (std::size_t c : above_[u]) {
      const std::size_t v = covers_[c].upper;
      if (!seen[v] && heights_[v] <= heights_[b]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return false;
}

bool IntervalPoset::leq(const GroupElement& a, const GroupElement& b) const {
  return leq(index_of(a), index_of(b));
}

std::size_t IntervalPoset::len(const GroupElement& a) const { return heights_[index_of(a)]; }

ReducedWords IntervalPoset::red(std::size_t a) const {
  ReducedWords out;
  out.complete = complete();
  std::vector<GroupElement> suffix;
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == bottom()) {
      out.words.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (std::size_t c : below_[v]) {
      suffix.push_back(labels_[covers_[c].label]);
      self(self, covers_[c].lower);
      suffix.pop_back();
    }
  };
  rec(rec, a);
  std::vector<std::pair<std::string, std::size_t>> order;
  for (std::size_t i = 0; i < out.words.size(); ++i) order.emplace_back(tuple_key(out.words[i]), i);
  std::sort(order.begin(), order.end());
  std::vector<Tuple<GroupElement>> sorted;
  for (const auto& [k, i] : order) sorted.push_back(std::move(out.words[i]));
  out.words = std::move(sorted);
  return out;
}

IntervalPoset build_interval(const SystemPtr& system, std::size_t cap) {
  return IntervalPoset(system, hurwitz_orbit(system->coxeter_tuple(), cap));
}

PanTransitivity pan_transitive_check(const IntervalPoset& p, std::size_t cap) {
  PanTransitivity out;
  bool refuted = false, all_proven = p.complete();
  for (std::size_t e = 0; e < p.size(); ++e) {
    const ReducedWords r = p.red(e);
    ElementTransitivity et{e, r.words.size(), Verdict::Proven, std::nullopt};
    if (r.words.size() > 1) {
      const Connectivity c = connected_by_moves(r.words, cap);
      if (c.connected) {
        et.verdict = p.complete() ? Verdict::Proven : Verdict::NoViolationWithinBound;
      } else {
        std::size_t missing = 0;
        while (c.witnesses[missing]) ++missing;
        if (c.orbit_complete) {
          et.verdict = Verdict::Refuted;
          et.separated = std::make_pair(std::size_t{0}, missing);
        } else {
          const auto other = hurwitz_orbit(r.words[missing], cap);
          if (other.complete) {
            et.verdict = Verdict::Refuted;
            et.separated = std::make_pair(std::size_t{0}, missing);
          } else {
            et.verdict = Verdict::NoViolationWithinBound;
          }
        }
      }
    } else if (!p.complete()) {
      et.verdict = Verdict::NoViolationWithinBound;
    }
    refuted = refuted || et.verdict == Verdict::Refuted;
    all_proven = all_proven && et.verdict == Verdict::Proven;
    out.elements.push_back(et);
  }
  out.overall = refuted ? Verdict::Refuted
                        : (all_proven ? Verdict::Proven : Verdict::NoViolationWithinBound);
  return out;
}

std::string element_name(const GroupElement& g) {
  const auto w = g.reduced_word();
  if (w.empty()) return "1";
  std::string s;
  for (auto i : w) s += "s" + std::to_string(i + 1);
  return s;
}

std::string poset_to_dot(const IntervalPoset& p) {
  std::string s = "digraph interval {\n  rankdir=BT;\n";
  for (std::size_t e = 0; e < p.size(); ++e)
    s += "  n" + std::to_string(e) + " [label=\"" + element_name(p.elements()[e]) + "\"];\n";
  for (const auto& c : p.covers())
    s += "  n" + std::to_string(c.lower) + " -> n" + std::to_string(c.upper) + " [label=\"" +
         element_name(p.labels()[c.label]) + "\"];\n";
  return s + "}\n";
}

std::string poset_to_json(const IntervalPoset& p) {
  using nlohmann::json;
  json elements = json::array();
  for (std::size_t e = 0; e < p.size(); ++e)
    elements.push_back({{"id", e},
                        {"name", element_name(p.elements()[e])},
                        {"height", p.height(e)},
                        {"matrix", json::parse(serialize_element(p.elements()[e]))}});
  json covers = json::array();
  for (const auto& c : p.covers())
    covers.push_back({{"lower", c.lower}, {"upper", c.upper},
                      {"label", element_name(p.labels()[c.label])}});
  return json{{"schema", "dualart.interval/1"},
              {"complete", p.complete()},
              {"rank", p.rank()},
              {"orbit_nodes", p.orbit().size()},
              {"elements", elements},
              {"covers", covers}}
      .dump(2);
}

}  // namespace dualart
