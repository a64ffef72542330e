#include "spslat/canonical.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "spslat/error.hpp"

namespace spslat {

namespace {

using Colouring = std::vector<std::uint32_t>;

class Canonicaliser {
 public:
  Canonicaliser(std::size_t n, const CoverList& covers)
      : n_(n), out_(n), in_(n) {
    for (auto [a, b] : covers) {
      if (a >= n || b >= n) throw InvalidInput("cover pair out of range");
      out_[a].push_back(b);
      in_[b].push_back(a);
    }
  }

  CanonicalLabeling run() {
    Colouring start(n_, 0);
    search(refine(std::move(start)));
    return std::move(*best_);
  }

 private:
  // Renumbers signatures densely in sorted order, so the result depends only
  // on the signatures and not on vertex ids.
  template <typename Sig>
  static Colouring renumber(const std::vector<Sig>& sig) {
    std::vector<Sig> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Colouring out(sig.size());
    for (std::size_t v = 0; v < sig.size(); ++v)
      out[v] = static_cast<std::uint32_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
          sorted.begin());
    return out;
  }

  static std::size_t count(const Colouring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  Colouring refine(Colouring c) const {
    using Sig = std::tuple<std::uint32_t, std::vector<std::uint32_t>,
                           std::vector<std::uint32_t>>;
    std::size_t classes = count(c);
    while (true) {
      std::vector<Sig> sig(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        auto& [own, up, down] = sig[v];
        own = c[v];
        for (ElementId w : out_[v]) up.push_back(c[w]);
        for (ElementId w : in_[v]) down.push_back(c[w]);
        std::sort(up.begin(), up.end());
        std::sort(down.begin(), down.end());
      }
      Colouring next = renumber(sig);
      const std::size_t k = count(next);
      c = std::move(next);
      if (k == classes) return c;
      classes = k;
    }
  }

  void search(const Colouring& c) {
    if (count(c) == n_) {
      leaf(c);
      return;
    }
    // First non-singleton class by colour.
    std::vector<std::size_t> size(count(c), 0);
    for (auto x : c) ++size[x];
    std::uint32_t target = 0;
    while (size[target] < 2) ++target;
    for (std::size_t v = 0; v < n_; ++v) {
      if (c[v] != target) continue;
      // v keeps the colour, the rest of its class moves just above it.
      std::vector<std::pair<std::uint32_t, std::uint32_t>> sig(n_);
      for (std::size_t w = 0; w < n_; ++w)
        sig[w] = {c[w], c[w] == target && w != v ? 1u : 0u};
      search(refine(renumber(sig)));
    }
  }

  void leaf(const Colouring& c) {
    CanonicalLabeling cand;
    cand.form.n = n_;
    cand.label.assign(c.begin(), c.end());
    for (std::size_t a = 0; a < n_; ++a)
      for (ElementId b : out_[a]) cand.form.covers.emplace_back(c[a], c[b]);
    std::sort(cand.form.covers.begin(), cand.form.covers.end());
    if (!best_ || cand.form < best_->form) best_ = std::move(cand);
  }

  std::size_t n_;
  std::vector<std::vector<ElementId>> out_, in_;
  std::optional<CanonicalLabeling> best_;
};

}  // namespace

CanonicalLabeling canonical_labeling(std::size_t n, const CoverList& covers) {
  if (n == 0) return {};
  return Canonicaliser(n, covers).run();
}

}  // namespace spslat
