#include "forge/box_product.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace forge {

std::vector<Signature> inner_signatures(const BoxTerm& t, const Signature& d) {
  std::vector<Signature> inner(t.outer.arity());
  for (std::size_t i = 0; i < inner.size(); ++i) inner[i].output = t.outer.inputs[i];
  for (std::size_t j = 0; j < t.block.size(); ++j) inner[t.block[j]].inputs.push_back(d.inputs[j]);
  return inner;
}

Permutation gluing_permutation(const BoxTerm& t) {
  const std::size_t n = t.outer.arity();
  std::vector<int> offset(n + 1, 0), seen(n, 0);
  for (int b : t.block) ++offset[b + 1];
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] += offset[i];
  std::vector<int> rho(t.block.size());
  for (std::size_t j = 0; j < t.block.size(); ++j) rho[j] = offset[t.block[j]] + seen[t.block[j]]++;
  return Permutation(std::move(rho));
}

int BoxProduct::classify(const Signature& d, const GluedTerm& t, const Collection& y) const {
  const std::size_t n = t.inner.size();
  const std::size_t k = d.arity();
  if (t.rho.size() != k) throw ArityMismatch("gluing permutation has the wrong size");
  std::vector<int> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + static_cast<int>(t.inner[i].arity());
  auto block_of = [&](int pos) {
    return static_cast<int>(std::upper_bound(offset.begin(), offset.end(), pos) - offset.begin()) - 1;
  };
  BoxTerm s{t.outer, t.x, std::vector<int>(k), t.ys};
  std::vector<std::vector<int>> tau(n);
  for (std::size_t j = 0; j < k; ++j) {
    int b = block_of(t.rho(j));
    s.block[j] = b;
    tau[b].push_back(t.rho(j) - offset[b]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Permutation p(tau[i]);
    if (p.is_identity()) continue;
    const Component* c = y.find(t.inner[i]);
    if (!c) throw InvalidArgument("box term with an empty inner component");
    s.ys[i] = c->act(t.ys[i], p);
  }
  auto comp = classes.find(d);
  if (comp == classes.end()) throw InvalidArgument("no box product component at this signature");
  auto it = comp->second.find(s);
  if (it == comp->second.end()) throw InvalidArgument("box term is not a valid summand");
  return it->second;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::string term_name(const BoxTerm& t, const Component& xc, const std::vector<Signature>& inner,
                      const Collection& y) {
  std::string s = xc.names[t.x] + "{";
  for (std::size_t i = 0; i < t.ys.size(); ++i) {
    if (i) s += ",";
    s += y.find(inner[i])->names[t.ys[i]];
  }
  s += "}<";
  for (std::size_t j = 0; j < t.block.size(); ++j) s += (j ? "," : "") + std::to_string(t.block[j] + 1);
  return s + ">";
}

}  // namespace

BoxProduct box_product(const Collection& x, const Collection& y, std::size_t max_arity) {
  if (!(x.colours() == y.colours())) throw ColourMismatch("box product of collections over different colours");
  BoxProduct out;
  out.result = Collection(x.colours());
  const std::size_t nc = x.colours().size();
  for (std::size_t k = 0; k <= max_arity; ++k)
    for (auto& dins : all_tuples(nc, k)) {
      if (!std::is_sorted(dins.begin(), dins.end())) continue;
      for (std::size_t c = 0; c < nc; ++c) {
        Signature d{dins, static_cast<ColourId>(c)};
        std::vector<BoxTerm> terms;
        for (const auto& [osig, xc] : x.components()) {
          if (osig.output != d.output || xc.size() == 0) continue;
          const std::size_t n = osig.arity();
          if (n == 0 && k > 0) continue;
          // Odometer over block assignments {0..k-1} -> {0..n-1}.
          std::vector<int> block(k, 0);
          while (true) {
            BoxTerm proto{osig, 0, block, {}};
            auto inner = inner_signatures(proto, d);
            std::vector<const Component*> yc(n);
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) ok = (yc[i] = y.find(inner[i])) && yc[i]->size();
            if (ok) {
              std::vector<int> ys(n, 0);
              std::function<void(std::size_t)> fill = [&](std::size_t i) {
                if (i == n) {
                  for (std::size_t e = 0; e < xc.size(); ++e) terms.push_back({osig, static_cast<int>(e), block, ys});
                  return;
                }
                for (std::size_t v = 0; v < yc[i]->size(); ++v) {
                  ys[i] = static_cast<int>(v);
                  fill(i + 1);
                }
              };
              fill(0);
            }
            std::size_t j = 0;
            while (j < k && ++block[j] == static_cast<int>(n)) block[j++] = 0;
            if (j == k) break;
          }
        }
        if (terms.empty()) continue;
        std::sort(terms.begin(), terms.end());
        auto& index = out.classes[d];
        for (std::size_t i = 0; i < terms.size(); ++i) index[terms[i]] = static_cast<int>(i);

        // Quotient by the outer stabilizer: (x.s, y o s, blocks relabelled).
        UnionFind uf(terms.size());
        for (std::size_t i = 0; i < terms.size(); ++i) {
          const BoxTerm& t = terms[i];
          const Component& xc = *x.find(t.outer);
          for (const auto& s : xc.group().elements) {
            Permutation inv = s.inverse();
            BoxTerm u{t.outer, xc.act(t.x, s), t.block, permute(t.ys, s)};
            for (auto& b : u.block) b = inv(b);
            uf.unite(static_cast<int>(i), index.at(u));
          }
        }
        std::vector<int> class_of(terms.size(), -1);
        auto& reps = out.representatives[d];
        for (std::size_t i = 0; i < terms.size(); ++i) {
          int root = uf.find(static_cast<int>(i));
          if (root == static_cast<int>(i)) {
            class_of[i] = static_cast<int>(reps.size());
            reps.push_back(terms[i]);
          } else {
            class_of[i] = class_of[root];
          }
        }
        for (auto& [t, id] : index) id = class_of[id];

        Component comp;
        comp.sig = d;
        for (const auto& r : reps) comp.names.push_back(term_name(r, *x.find(r.outer), inner_signatures(r, d), y));
        for (const auto& xi : stabilizer(d.inputs).elements) {
          std::vector<int> row;
          for (const auto& r : reps) {
            GluedTerm g{r.outer, r.x, inner_signatures(r, d), r.ys, gluing_permutation(r) * xi};
            row.push_back(out.classify(d, g, y));
          }
          comp.action.push_back(std::move(row));
        }
        out.result.set(std::move(comp));
      }
    }
  return out;
}

}  // namespace forge
