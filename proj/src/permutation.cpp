#include "braid/permutation.hpp"

#include <numeric>
#include <utility>

namespace braid {

Permutation::Permutation(int n) : image_(n) {
  std::iota(image_.begin(), image_.end(), 1);
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p(n);
  std::swap(p.image_[a - 1], p.image_[b - 1]);
  return p;
}

Permutation Permutation::reversal(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p.image_[i] = n - i;
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation out(degree());
  for (int i = 0; i < degree(); ++i)
    out.image_[i] = next.image_[image_[i] - 1];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (int i = 0; i < degree(); ++i) out.image_[image_[i] - 1] = i + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (image_[i] != i + 1) return false;
  return true;
}

Permutation permutation_projection(const BraidWord& w) {
  const int n = w.index().strands();
  std::vector<int> img(n);
  std::vector<int> pos(n + 1);  // pos[v] = 0-based slot holding value v
  std::iota(img.begin(), img.end(), 1);
  std::iota(pos.begin(), pos.end(), -1);
  // Appending the strand-pair transposition (t s) to a left-to-right
  // product swaps the values t and s wherever they occur in the image.
  for (const auto& l : w.letters()) {
    const int pu = pos[l.upper], pl = pos[l.lower];
    std::swap(img[pu], img[pl]);
    std::swap(pos[l.upper], pos[l.lower]);
  }
  return Permutation(std::move(img));
}

}  // namespace braid
