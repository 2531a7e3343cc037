#include "chartfold/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace chartfold {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 1);
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.img[a - 1], p.img[b - 1]);
  return p;
}

Permutation Permutation::then(const Permutation& q) const {
  Permutation r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) r.img[i] = q.img[img[i] - 1];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) r.img[img[i] - 1] = (int)i + 1;
  return r;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != (int)i + 1) return false;
  return true;
}

int Permutation::cycle_count() const {
  int n_ = n(), count = 0;
  std::vector<bool> seen(n_, false);
  for (int i = 1; i <= n_; ++i) {
    if (seen[i - 1]) continue;
    ++count;
    for (int j = i; !seen[j - 1]; j = (*this)(j)) seen[j - 1] = true;
  }
  return count;
}

bool Permutation::is_single_cycle() const { return cycle_count() == 1; }

Permutation perm_image(const Word& w) {
  Permutation p = Permutation::identity(w.degree);
  for (const Letter& l : w.letters)
    p = p.then(Permutation::transposition(w.degree, l.index, l.index + 1));
  return p;
}

Word free_reduce(const Word& w) {
  Word out;
  out.kind = w.kind;
  out.degree = w.degree;
  for (const Letter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().index == l.index &&
        out.letters.back().sign == -l.sign && w.kind == Kind::Braid) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

static void push_reduced(FreeWord& w, const Letter& l) {
  if (!w.empty() && w.back().index == l.index && w.back().sign == -l.sign)
    w.pop_back();
  else
    w.push_back(l);
}

FreeWord free_mul(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  for (const Letter& l : b) push_reduced(out, l);
  return out;
}

FreeWord free_inv(const FreeWord& a) {
  FreeWord out;
  for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(it->inverse());
  return out;
}

FreeImage artin_image(const Word& w) {
  int n = w.degree;
  FreeImage im;
  im.gen_images.resize(n);
  for (int i = 1; i <= n; ++i) im.gen_images[i - 1] = {Letter{i, +1}};
  // sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
  for (const Letter& l : w.letters) {
    int i = l.index;
    FreeWord xi = im.gen_images[i - 1];
    FreeWord xj = im.gen_images[i];
    if (l.sign > 0) {
      im.gen_images[i - 1] = free_mul(free_mul(xi, xj), free_inv(xi));
      im.gen_images[i] = xi;
    } else {
      // inverse: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
      im.gen_images[i - 1] = xj;
      im.gen_images[i] = free_mul(free_mul(free_inv(xj), xi), xj);
    }
  }
  return im;
}

bool braid_equal(const Word& a, const Word& b) {
  if (a.degree != b.degree) return false;
  return artin_image(a) == artin_image(b);
}

Permutation closure_permutation(const Word& beta, int strands) {
  Permutation p = Permutation::identity(strands);
  for (const Letter& l : beta.letters) {
    if (l.index < 1 || l.index >= strands)
      throw invalid_argument("braid letter exceeds strand count");
    p = p.then(Permutation::transposition(strands, l.index, l.index + 1));
  }
  return p;
}

bool closure_is_knot(const Word& beta, int strands) {
  return closure_permutation(beta, strands).is_single_cycle();
}

}  // namespace chartfold
