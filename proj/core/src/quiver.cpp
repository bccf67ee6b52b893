#include "cellua/quiver.hpp"

#include <algorithm>
#include <map>

namespace cellua {

namespace {

using Word = QuiverPresentation::Word;
using Combo = std::vector<std::pair<Word, Scalar>>;

bool word_less(const Word& a, const Word& b) {
  if (a.arrows.size() != b.arrows.size())
    return a.arrows.size() < b.arrows.size();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.source < b.source;
}

bool word_eq(const Word& a, const Word& b) {
  return a.source == b.source && a.arrows == b.arrows;
}

Word concat(const Word& a, const Word& b) {
  Word w;
  w.source = a.source;
  w.arrows = a.arrows;
  w.arrows.insert(w.arrows.end(), b.arrows.begin(), b.arrows.end());
  return w;
}

Combo combo_normalize(Combo c) {
  std::sort(c.begin(), c.end(),
            [](const auto& x, const auto& y) { return word_less(x.first, y.first); });
  Combo out;
  for (auto& [w, s] : c) {
    if (!out.empty() && word_eq(out.back().first, w))
      out.back().second += s;
    else
      out.emplace_back(w, s);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& t) { return t.second.is_zero(); }),
            out.end());
  return out;
}

struct Rule {
  Word lhs;
  Combo rhs;  // strictly smaller words
};

struct Rewriter {
  const QuiverPresentation& q;
  std::vector<Rule> rules;

  // Leftmost occurrence of any rule LHS inside w; returns (rule, offset).
  std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const {
    for (std::size_t off = 0; off + 1 <= w.arrows.size(); ++off)
      for (std::size_t r = 0; r < rules.size(); ++r) {
        const auto& l = rules[r].lhs.arrows;
        if (off + l.size() > w.arrows.size()) continue;
        if (std::equal(l.begin(), l.end(), w.arrows.begin() + off))
          return std::make_pair(r, off);
      }
    return std::nullopt;
  }

  Combo reduce(Combo c) const {
    for (;;) {
      bool changed = false;
      Combo next;
      for (const auto& [w, s] : c) {
        const auto redex = find_redex(w);
        if (!redex) {
          next.emplace_back(w, s);
          continue;
        }
        changed = true;
        const Rule& rule = rules[redex->first];
        const std::size_t off = redex->second;
        Word prefix, suffix;
        prefix.source = w.source;
        prefix.arrows.assign(w.arrows.begin(), w.arrows.begin() + off);
        const std::size_t tail = off + rule.lhs.arrows.size();
        suffix.source = tail < w.arrows.size() ? q.arrows[w.arrows[tail]].from
                                               : q.word_target(w);
        suffix.arrows.assign(w.arrows.begin() + tail, w.arrows.end());
        for (const auto& [rw, rs] : rule.rhs)
          next.emplace_back(concat(concat(prefix, rw), suffix), s * rs);
      }
      c = combo_normalize(std::move(next));
      if (!changed) return c;
    }
  }

  // Largest word becomes the LHS; empty combos give no rule.
  std::optional<Rule> orient(Combo c) const {
    c = combo_normalize(std::move(c));
    if (c.empty()) return std::nullopt;
    const auto& [lead, coeff] = c.back();
    if (lead.arrows.empty())
      fail(ErrorKind::Input, "relation reduces to a vertex idempotent");
    Rule r;
    r.lhs = lead;
    const Scalar inv = coeff.inverse();
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      r.rhs.emplace_back(c[i].first, -(c[i].second * inv));
    return r;
  }
};

} // namespace

bool QuiverPresentation::word_composable(const Word& w) const {
  std::size_t at = w.source;
  for (const std::size_t a : w.arrows) {
    if (a >= arrows.size()) return false;
    if (arrows[a].from != at) return false;
    at = arrows[a].to;
  }
  return true;
}

std::string QuiverPresentation::word_name(const Word& w) const {
  if (w.arrows.empty()) return "e" + vertices[w.source];
  std::string out;
  for (const std::size_t a : w.arrows) out += arrows[a].name;
  return out;
}

PathAlgebraResult build_path_algebra(const QuiverPresentation& q,
                                     const Field& f, std::size_t cap) {
  for (const auto& rel : q.relations) {
    if (rel.terms.empty()) fail(ErrorKind::Input, "empty relation");
    for (const auto& [w, s] : rel.terms)
      if (!q.word_composable(w))
        fail(ErrorKind::Input, "relation path is not composable: " + q.word_name(w));
    const auto& w0 = rel.terms[0].first;
    for (const auto& [w, s] : rel.terms)
      if (w.source != w0.source || q.word_target(w) != q.word_target(w0))
        fail(ErrorKind::Input, "relation mixes paths with different endpoints");
  }

  Rewriter rw{q, {}};
  for (const auto& rel : q.relations) {
    Combo c(rel.terms.begin(), rel.terms.end());
    if (const auto r = rw.orient(std::move(c))) rw.rules.push_back(*r);
  }

  // Close the oriented system: interreduce, then resolve overlap ambiguities
  // until every overlap reduces to zero.
  const std::size_t rule_limit = 1000;
  for (bool changed = true; changed;) {
    changed = false;
    // Interreduce right-hand sides and drop rules whose LHS became reducible.
    for (std::size_t i = 0; i < rw.rules.size(); ++i) {
      Rewriter others{q, {}};
      for (std::size_t k = 0; k < rw.rules.size(); ++k)
        if (k != i) others.rules.push_back(rw.rules[k]);
      if (others.find_redex(rw.rules[i].lhs)) {
        Combo c = rw.rules[i].rhs;
        c.emplace_back(rw.rules[i].lhs, -Scalar::one(f));
        c = others.reduce(combo_normalize(std::move(c)));
        rw.rules.erase(rw.rules.begin() + static_cast<long>(i));
        if (const auto r = others.orient(std::move(c))) rw.rules.push_back(*r);
        changed = true;
        break;
      }
      const Combo reduced = rw.reduce(rw.rules[i].rhs);
      if (!std::equal(reduced.begin(), reduced.end(), rw.rules[i].rhs.begin(),
                      rw.rules[i].rhs.end(),
                      [](const auto& a, const auto& b) {
                        return word_eq(a.first, b.first) && a.second == b.second;
                      }) ||
          reduced.size() != rw.rules[i].rhs.size()) {
        rw.rules[i].rhs = reduced;
        changed = true;
      }
    }
    if (changed) continue;
    // Overlaps: a suffix of one LHS equals a prefix of another.
    for (std::size_t i = 0; i < rw.rules.size() && !changed; ++i)
      for (std::size_t j = 0; j < rw.rules.size() && !changed; ++j) {
        const auto& u = rw.rules[i].lhs.arrows;
        const auto& v = rw.rules[j].lhs.arrows;
        for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
          if (!std::equal(u.end() - static_cast<long>(k), u.end(), v.begin()))
            continue;
          // w = u . v[k:]; reduce both resolutions.
          Word w = rw.rules[i].lhs;
          w.arrows.insert(w.arrows.end(), v.begin() + static_cast<long>(k),
                          v.end());
          Word tail;
          tail.source = q.arrows[v[k - 1]].to;
          tail.arrows.assign(v.begin() + static_cast<long>(k), v.end());
          Combo via_i;
          for (const auto& [rwd, rs] : rw.rules[i].rhs)
            via_i.emplace_back(concat(rwd, tail), rs);
          Word head;
          head.source = rw.rules[i].lhs.source;
          head.arrows.assign(u.begin(), u.end() - static_cast<long>(k));
          Combo via_j;
          for (const auto& [rwd, rs] : rw.rules[j].rhs)
            via_j.emplace_back(concat(head, rwd), rs);
          Combo diff = rw.reduce(combo_normalize(std::move(via_i)));
          const Combo other = rw.reduce(combo_normalize(std::move(via_j)));
          for (const auto& [ow, os] : other) diff.emplace_back(ow, -os);
          diff = rw.reduce(combo_normalize(std::move(diff)));
          if (!diff.empty()) {
            if (const auto r = rw.orient(std::move(diff))) {
              if (r->lhs.arrows.size() > 2 * cap + 1)
                fail(ErrorKind::CapExceeded,
                     "rewriting closure exceeds the path-length cap");
              rw.rules.push_back(*r);
            }
            changed = true;
            break;
          }
        }
      }
    if (rw.rules.size() > rule_limit)
      fail(ErrorKind::CapExceeded, "rewriting system did not close");
  }

  // Irreducible words by length; only the new tail needs a redex check.
  auto tail_irreducible = [&](const Word& w) {
    for (const Rule& r : rw.rules) {
      const auto& l = r.lhs.arrows;
      if (l.size() > w.arrows.size()) continue;
      if (std::equal(l.begin(), l.end(), w.arrows.end() - static_cast<long>(l.size())))
        return false;
    }
    return true;
  };
  std::vector<Word> basis;
  std::vector<Word> frontier;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    Word e;
    e.source = v;
    basis.push_back(e);
    frontier.push_back(e);
  }
  for (std::size_t len = 1; len <= cap + 1; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].from != q.word_target(w)) continue;
        Word x = w;
        x.arrows.push_back(a);
        if (tail_irreducible(x)) next.push_back(x);
      }
    if (len == cap + 1) {
      if (!next.empty())
        fail(ErrorKind::CapExceeded,
             "algebra is not multiplication-closed within the cap: "
             "irreducible path " +
                 q.word_name(next.front()) + " exceeds length " +
                 std::to_string(cap));
      break;
    }
    basis.insert(basis.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  std::sort(basis.begin(), basis.end(), word_less);

  PathAlgebraResult out;
  out.basis_words = basis;
  out.alg.field = f;
  out.alg.dim = basis.size();
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out.alg.basis_names.push_back(q.word_name(basis[i]));
    pos[{basis[i].source, basis[i].arrows}] = i;
  }
  out.alg.mult.assign(basis.size() * basis.size(), {});
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (q.word_target(basis[i]) != basis[j].source) continue;
      const Combo red = rw.reduce({{concat(basis[i], basis[j]), Scalar::one(f)}});
      SparseVec prod;
      for (const auto& [w, s] : red) {
        const auto it = pos.find({w.source, w.arrows});
        if (it == pos.end())
          fail(ErrorKind::CapExceeded,
               "product reduces to a path outside the cap: " + q.word_name(w));
        prod.emplace_back(it->second, s);
      }
      out.alg.basis_product(i, j) = sparse_normalize(std::move(prod));
    }
  out.vertex_idempotent.resize(q.vertices.size());
  SparseVec unit;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    Word e;
    e.source = v;
    out.vertex_idempotent[v] = pos.at({e.source, e.arrows});
    unit.emplace_back(out.vertex_idempotent[v], Scalar::one(f));
  }
  out.alg.unit = sparse_normalize(std::move(unit));
  return out;
}

} // namespace cellua
