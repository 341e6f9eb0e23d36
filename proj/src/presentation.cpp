#include "dualart/presentation.hpp"

#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "dualart/error.hpp"

namespace dualart {

namespace {

void require_complete(const IntervalPoset& p) {
  if (!p.complete()) throw IncompleteInterval("the interval was truncated by its orbit cap");
}

int atom_letter(const IntervalPoset& p, const GroupElement& t) {
  auto a = p.atom_number(t);
  if (!a) throw NotAnAtom(element_name(t) + " is not an atom of the interval");
  return static_cast<int>(*a) + 1;
}

}  // namespace

LabelWord reduce_word(const LabelWord& w) {
  LabelWord out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Presentation emit_presentation(const IntervalPoset& p, PresentationStyle style) {
  require_complete(p);
  Presentation pres;
  pres.style = style;
  for (auto e : p.atoms()) pres.generators.push_back(element_name(p.elements()[e]));
  auto word_of = [&](const Tuple<GroupElement>& t) {
    LabelWord w;
    for (const auto& x : t) w.push_back(atom_letter(p, x));
    return w;
  };
  if (style == PresentationStyle::Interval) {
    for (std::size_t e = 0; e < p.size(); ++e) {
      if (p.height(e) < 2) continue;
      const auto r = p.red(e);
      const LabelWord first = word_of(r.words.front());
      for (std::size_t k = 1; k < r.words.size(); ++k)
        pres.relations.emplace_back(first, word_of(r.words[k]));
    }
    return pres;
  }
  const auto& atoms = p.atoms();
  for (std::size_t a = 0; a < atoms.size(); ++a)
    for (std::size_t b = 0; b < atoms.size(); ++b) {
      if (a == b) continue;
      const GroupElement& t = p.elements()[atoms[a]];
      const GroupElement& u = p.elements()[atoms[b]];
      const GroupElement tu = t * u;
      auto e = p.find(tu);
      if (!e || p.height(*e) != 2) continue;
      const int conj = atom_letter(p, tu * t);
      pres.relations.push_back({{static_cast<int>(a) + 1, static_cast<int>(b) + 1},
                                {conj, static_cast<int>(a) + 1}});
    }
  return pres;
}

std::string render_word(const Presentation& p, const LabelWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += p.generators.at(static_cast<std::size_t>(std::abs(w[i])) - 1);
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

std::string render_text(const Presentation& p) {
  std::string s = "gens: ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) s += ", ";
    s += p.generators[i];
  }
  s += ";\nrels:";
  for (const auto& [l, r] : p.relations) s += "\n  " + render_word(p, l) + " = " + render_word(p, r) + ";";
  return s + "\n";
}

std::string render_gap(const Presentation& p) {
  std::string s = "F := FreeGroup(";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) s += ", ";
    s += "\"" + p.generators[i] + "\"";
  }
  s += ");;\n";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    s += p.generators[i] + " := F." + std::to_string(i + 1) + ";;\n";
  s += "rels := [";
  for (std::size_t k = 0; k < p.relations.size(); ++k) {
    const auto& [l, r] = p.relations[k];
    s += k ? ",\n  " : "\n  ";
    LabelWord rel = l;
    for (auto it = r.rbegin(); it != r.rend(); ++it) rel.push_back(-*it);
    s += render_word(p, rel);
  }
  s += "\n];;\nG := F / rels;;\n";
  return s;
}

Presentation parse_presentation_text(const std::string& text) {
  Presentation pres;
  const auto g = text.find("gens:");
  const auto r = text.find("rels:");
  if (g == std::string::npos || r == std::string::npos || r < g)
    throw ParseError("expected 'gens:' and 'rels:' sections");
  auto trim = [](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
  };
  std::string gens = text.substr(g + 5, r - g - 5);
  const auto semi = gens.find(';');
  if (semi == std::string::npos) throw ParseError("gens section must end with ';'");
  gens = gens.substr(0, semi);
  std::map<std::string, int> index;
  std::stringstream gs(gens);
  std::string name;
  while (std::getline(gs, name, ',')) {
    name = trim(name);
    if (name.empty()) continue;
    if (index.contains(name)) throw ParseError("duplicate generator " + name);
    pres.generators.push_back(name);
    index.emplace(name, static_cast<int>(pres.generators.size()));
  }
  auto parse_word = [&](std::string w) {
    w = trim(w);
    LabelWord out;
    if (w == "1") return out;
    std::stringstream ws(w);
    std::string tok;
    while (std::getline(ws, tok, '*')) {
      tok = trim(tok);
      int sign = 1;
      if (tok.size() > 3 && tok.ends_with("^-1")) {
        sign = -1;
        tok = trim(tok.substr(0, tok.size() - 3));
      }
      auto it = index.find(tok);
      if (it == index.end()) throw ParseError("unknown generator '" + tok + "'");
      out.push_back(sign * it->second);
    }
    return out;
  };
  std::stringstream rs(text.substr(r + 5));
  std::string rel;
  while (std::getline(rs, rel, ';')) {
    rel = trim(rel);
    if (rel.empty()) continue;
    const auto eq = rel.find('=');
    if (eq == std::string::npos) throw ParseError("relation without '=': " + rel);
    pres.relations.emplace_back(parse_word(rel.substr(0, eq)), parse_word(rel.substr(eq + 1)));
  }
  return pres;
}

GroupElement evaluate(const IntervalPoset& p, const LabelWord& w) {
  GroupElement acc = p.system()->identity();
  for (int l : w) {
    const std::size_t a = static_cast<std::size_t>(std::abs(l)) - 1;
    if (a >= p.atoms().size()) throw IndexOutOfRange("label index");
    const GroupElement& t = p.elements()[p.atoms()[a]];
    acc = acc * (l > 0 ? t : inverse(t));
  }
  return acc;
}

std::pair<LabelWord, LabelWord> relation_instance(const IntervalPoset& p, const BraidWord& tau,
                                                  std::size_t i, std::size_t j) {
  require_complete(p);
  const std::size_t n = p.rank();
  if (tau.strands() != n) throw StrandMismatch("tau must act on the Coxeter tuple");
  if (i == 0 || i > j || j >= n)
    throw IndexOutOfRange("need 0 < i <= j < n, got i=" + std::to_string(i) +
                          " j=" + std::to_string(j));
  const auto start = p.system()->coxeter_tuple();
  auto build = [&](const BraidWord& base) {
    LabelWord w;
    for (std::size_t k = 0; k <= j; ++k) {
      BraidWord beta(n);
      for (std::size_t m = 1; m <= k; ++m) beta = beta * BraidWord::sigma(n, n - m);
      beta = beta * base;
      w.push_back(atom_letter(p, hurwitz_apply(beta, start).back()));
    }
    std::reverse(w.begin(), w.end());
    return w;
  };
  return {build(tau), build(BraidWord::sigma(n, n - i) * tau)};
}

bool one_step_rewrite(const Presentation& hurwitz, const LabelWord& a, const LabelWord& b) {
  if (a.size() != b.size()) return false;
  if (a == b) return true;
  for (std::size_t k = 0; k + 1 < a.size(); ++k) {
    bool outside = true;
    for (std::size_t m = 0; m < a.size() && outside; ++m)
      if ((m < k || m > k + 1) && a[m] != b[m]) outside = false;
    if (!outside) continue;
    const LabelWord wa{a[k], a[k + 1]}, wb{b[k], b[k + 1]};
    for (const auto& [l, r] : hurwitz.relations)
      if ((l == wa && r == wb) || (l == wb && r == wa)) return true;
  }
  return false;
}

bool rewrite_connected(const Presentation& pres, const LabelWord& a, const LabelWord& b,
                       std::size_t cap) {
  if (a == b) return true;
  std::set<LabelWord> seen{a};
  std::deque<LabelWord> queue{a};
  while (!queue.empty() && seen.size() <= cap) {
    LabelWord w = std::move(queue.front());
    queue.pop_front();
    for (const auto& [l, r] : pres.relations) {
      if (l.size() != r.size()) continue;
      for (int dir = 0; dir < 2; ++dir) {
        const LabelWord& from = dir ? r : l;
        const LabelWord& to = dir ? l : r;
        if (from.size() > w.size()) continue;
        for (std::size_t k = 0; k + from.size() <= w.size(); ++k) {
          if (!std::equal(from.begin(), from.end(), w.begin() + static_cast<long>(k))) continue;
          LabelWord v = w;
          std::copy(to.begin(), to.end(), v.begin() + static_cast<long>(k));
          if (v == b) return true;
          if (seen.insert(v).second) queue.push_back(std::move(v));
        }
      }
    }
  }
  return false;
}

LabelWord express_label_via_simples(const IntervalPoset& p, const GroupElement& t) {
  require_complete(p);
  if (!p.atom_number(t)) throw NotAnAtom(element_name(t) + " is not an atom of the interval");
  const std::size_t n = p.rank();
  const auto simples = p.system()->coxeter_tuple();
  BraidWord tau(n);
  bool found = false;
  for (std::size_t pos = 0; pos < n && !found; ++pos)
    if (simples[pos] == t) {
      // carry entry pos to the end unchanged: s_{n-1} ... s_{pos+1}
      for (std::size_t k = n - 1; k > pos; --k) tau = tau * BraidWord::sigma(n, k);
      found = true;
    }
  for (std::size_t v = 0; v < p.orbit().size() && !found; ++v)
    if (p.orbit().nodes[v].back() == t) {
      tau = p.orbit().tree_word(v);
      found = true;
    }
  if (!found) throw NotAnAtom(element_name(t) + " is not the last entry of any orbit tuple");
  const FreeWord last = hurwitz_apply(tau, free_basis(n)).back();
  LabelWord out;
  for (int l : last.letters()) {
    const int g = atom_letter(p, simples[static_cast<std::size_t>(std::abs(l)) - 1]);
    out.push_back(l > 0 ? g : -g);
  }
  return out;
}

LabelWord psi_image(const IntervalPoset& p, const std::vector<int>& artin_word) {
  require_complete(p);
  LabelWord out;
  for (int l : artin_word) {
    const std::size_t i = static_cast<std::size_t>(std::abs(l));
    if (l == 0 || i > p.rank()) throw IndexOutOfRange("Artin generator " + std::to_string(l));
    const int g = atom_letter(p, p.system()->generator(i - 1));
    out.push_back(l > 0 ? g : -g);
  }
  return out;
}

}  // namespace dualart
