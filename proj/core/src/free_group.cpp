#include "mcgrep/free_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mcgrep {

FreeWord free_reduce(FreeWord w) {
  std::size_t out = 0;
  for (int a : w) {
    if (out > 0 && w[out - 1] == -a) {
      --out;
    } else {
      w[out++] = a;
    }
  }
  w.resize(out);
  return w;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord r(w.rbegin(), w.rend());
  for (int& a : r) a = -a;
  return r;
}

FreeGroupEndo FreeGroupEndo::identity(int rank) {
  std::vector<FreeWord> images;
  for (int k = 1; k <= rank; ++k) images.push_back({k});
  return FreeGroupEndo(std::move(images));
}

FreeGroupEndo::FreeGroupEndo(std::vector<FreeWord> images) : images_(std::move(images)) {
  for (auto& w : images_) w = free_reduce(std::move(w));
}

FreeWord FreeGroupEndo::apply(const FreeWord& w) const {
  FreeWord out;
  for (int a : w) {
    const FreeWord& img = image(a > 0 ? a : -a);
    if (a > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      const FreeWord inv = free_inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(std::move(out));
}

FreeGroupEndo FreeGroupEndo::compose(const FreeGroupEndo& other) const {
  if (other.rank() != rank()) throw std::invalid_argument("rank mismatch in compose");
  std::vector<FreeWord> images;
  images.reserve(images_.size());
  for (const auto& w : other.images_) images.push_back(apply(w));
  return FreeGroupEndo(std::move(images));
}

namespace {

FreeGroupEndo artin_letter(int rank, const Letter& l) {
  FreeGroupEndo e = FreeGroupEndo::identity(rank);
  std::vector<FreeWord> images = e.images();
  const int i = l.index;
  if (l.sign > 0) {
    images[i - 1] = {i, i + 1, -i};
    images[i] = {i};
  } else {
    images[i - 1] = {i + 1};
    images[i] = {-(i + 1), i, i + 1};
  }
  return FreeGroupEndo(std::move(images));
}

int strands_of(const Word& w) {
  const auto kind = w.context().kind();
  if (kind != GroupKind::braid && kind != GroupKind::sphere) {
    throw std::invalid_argument("expected a braid or sphere word, got " + w.context().name());
  }
  return w.context().strands();
}

}  // namespace

FreeGroupEndo artin_apply(const Word& w) {
  if (w.context().kind() != GroupKind::braid) {
    throw std::invalid_argument("artin_apply expects a braid(n) word, got " +
                                w.context().name());
  }
  const int n = w.context().strands();
  FreeGroupEndo result = FreeGroupEndo::identity(n);
  // Outermost map is the leftmost letter, so fold from the right.
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    result = artin_letter(n, *it).compose(result);
  }
  return result;
}

std::vector<int> strand_permutation(const Word& w) {
  const int n = strands_of(w);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const int i = it->index;
    for (int& p : perm) {
      if (p == i) {
        p = i + 1;
      } else if (p == i + 1) {
        p = i;
      }
    }
  }
  return perm;
}

bool is_trivial_in_sphere_group(const Word& w) {
  const int n = strands_of(w);
  const FreeGroupEndo phi = artin_apply(w.in_context(Context::braid(n)));

  // Kill x_1 ... x_n by eliminating x_n = (x_1 ... x_{n-1})^{-1}.
  std::vector<FreeWord> projection;
  for (int k = 1; k < n; ++k) projection.push_back({k});
  FreeWord last(n - 1);
  std::iota(last.begin(), last.end(), 1);
  projection.push_back(free_inverse(last));
  const FreeGroupEndo proj(std::move(projection));

  std::vector<FreeWord> images;
  for (int k = 1; k < n; ++k) images.push_back(proj.apply(phi.image(k)));
  if (n == 2) return true;  // the quotient is infinite cyclic on x_1 with x_1 = x_1

  // Inner means images[k] = g x_k g^{-1} for one g. The image of x_1 pins g to
  // u x_1^m for the reduced conjugator u and some integer m.
  const FreeWord& first = images[0];
  if (first.size() % 2 == 0) return false;
  const std::size_t half = first.size() / 2;
  if (first[half] != 1) return false;
  const FreeWord u(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(half));
  FreeWord rebuilt = u;
  rebuilt.push_back(1);
  const FreeWord u_inv = free_inverse(u);
  rebuilt.insert(rebuilt.end(), u_inv.begin(), u_inv.end());
  if (free_reduce(rebuilt) != first) return false;

  std::size_t bound = 2;
  for (const auto& img : images) bound = std::max(bound, img.size() + 2);
  const long limit = static_cast<long>(bound);
  for (long m = -limit; m <= limit; ++m) {
    FreeWord g = u;
    for (long r = 0; r < (m < 0 ? -m : m); ++r) g.push_back(m < 0 ? -1 : 1);
    g = free_reduce(std::move(g));
    const FreeWord g_inv = free_inverse(g);
    bool inner = true;
    for (int k = 2; k < n && inner; ++k) {
      FreeWord conj = g;
      conj.push_back(k);
      conj.insert(conj.end(), g_inv.begin(), g_inv.end());
      inner = free_reduce(std::move(conj)) == images[k - 1];
    }
    if (inner) return true;
  }
  return false;
}

}  // namespace mcgrep
