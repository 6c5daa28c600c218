#include "rookschur/partial_perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rookschur/linalg.hpp"

namespace rookschur {

PartialPerm PartialPerm::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return from_images(n, std::move(images));
}

PartialPerm PartialPerm::empty_map(int n) {
  return from_images(n, std::vector<int>(n, 0));
}

PartialPerm PartialPerm::from_images(int n, std::vector<int> images) {
  if (n < 0) throw std::invalid_argument("PartialPerm: negative ambient size");
  if (static_cast<int>(images.size()) != n)
    throw std::invalid_argument("PartialPerm: image list length differs from n");
  std::vector<bool> hit(n + 1, false);
  for (int v : images) {
    if (v < 0 || v > n) throw std::invalid_argument("PartialPerm: image out of range");
    if (v != 0) {
      if (hit[v]) throw std::invalid_argument("PartialPerm: images must be distinct");
      hit[v] = true;
    }
  }
  PartialPerm p;
  p.images_ = std::move(images);
  return p;
}

PartialPerm PartialPerm::parse(int n, const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '[') body = body.substr(1);
  if (!body.empty() && body.back() == ']') body.pop_back();
  std::vector<int> images;
  if (n > 0) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
      if (item == "-") {
        images.push_back(0);
      } else if (!item.empty()) {
        images.push_back(std::stoi(item));
      } else {
        throw std::invalid_argument("PartialPerm::parse: empty slot in \"" + s + "\"");
      }
    }
  }
  return from_images(n, std::move(images));
}

std::string PartialPerm::str() const {
  std::string out = "[";
  for (int i = 1; i <= n(); ++i) {
    if (i > 1) out += ',';
    out += defined_at(i) ? std::to_string(image(i)) : std::string("-");
  }
  out += ']';
  return out;
}

int PartialPerm::rank() const {
  int r = 0;
  for (int v : images_) r += (v != 0);
  return r;
}

Subset PartialPerm::domain() const {
  std::vector<int> d;
  for (int i = 1; i <= n(); ++i) {
    if (defined_at(i)) d.push_back(i);
  }
  return Subset(n(), std::move(d));
}

Subset PartialPerm::range() const {
  std::vector<int> r;
  for (int v : images_) {
    if (v != 0) r.push_back(v);
  }
  std::sort(r.begin(), r.end());
  return Subset(n(), std::move(r));
}

bool PartialPerm::is_idempotent() const { return compose(*this, *this) == *this; }

PartialPerm compose(const PartialPerm& sigma, const PartialPerm& tau) {
  if (sigma.n() != tau.n())
    throw std::invalid_argument("compose: ambient size mismatch");
  std::vector<int> images(sigma.n(), 0);
  for (int i = 1; i <= sigma.n(); ++i) {
    int t = tau.image(i);
    if (t != 0) images[i - 1] = sigma.image(t);
  }
  return PartialPerm::from_images(sigma.n(), std::move(images));
}

PartialPerm inverse(const PartialPerm& sigma) {
  std::vector<int> images(sigma.n(), 0);
  for (int i = 1; i <= sigma.n(); ++i) {
    int v = sigma.image(i);
    if (v != 0) images[v - 1] = i;
  }
  return PartialPerm::from_images(sigma.n(), std::move(images));
}

PartialPerm idempotent(const Subset& x) {
  std::vector<int> images(x.n, 0);
  for (int e : x.elements) images[e - 1] = e;
  return PartialPerm::from_images(x.n, std::move(images));
}

PartialPerm iota(const Subset& x) {
  std::vector<int> images(x.n, 0);
  for (int k = 0; k < x.size(); ++k) images[k] = x.elements[k];
  return PartialPerm::from_images(x.n, std::move(images));
}

PartialPerm embed(const PartialPerm& sigma, int n) {
  if (n < sigma.n()) throw std::invalid_argument("embed: ambient size too small");
  std::vector<int> images(n, 0);
  for (int i = 1; i <= sigma.n(); ++i) images[i - 1] = sigma.image(i);
  return PartialPerm::from_images(n, std::move(images));
}

PartialPerm p_map(const PartialPerm& sigma) {
  int r = sigma.rank();
  PartialPerm inside = compose(inverse(iota(sigma.range())),
                               compose(sigma, iota(sigma.domain())));
  std::vector<int> images(r);
  for (int k = 1; k <= r; ++k) {
    images[k - 1] = inside.image(k);
    if (images[k - 1] == 0 || images[k - 1] > r)
      throw std::logic_error("p_map: pattern is not a permutation of {1..r}");
  }
  return PartialPerm::from_images(r, std::move(images));
}

std::vector<PartialPerm> enumerate_symmetric(int r) {
  std::vector<int> one_line(r);
  std::iota(one_line.begin(), one_line.end(), 1);
  std::vector<PartialPerm> out;
  do {
    out.push_back(PartialPerm::from_images(r, one_line));
  } while (std::next_permutation(one_line.begin(), one_line.end()));
  return out;
}

std::vector<PartialPerm> enumerate_rook(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_rook: negative n");
  if (n > 6) throw resource_error("enumerate_rook: n > 6 is past the desk-scale bound");
  std::vector<PartialPerm> out;
  out.reserve(rook_monoid_size(n));
  for (int r = 0; r <= n; ++r) {
    auto doms = enumerate_subsets(n, r);
    auto patterns = enumerate_symmetric(r);
    for (const Subset& dom : doms) {
      for (const Subset& ran : enumerate_subsets(n, r)) {
        for (const PartialPerm& w : patterns) {
          // sigma = iota_R w iota_D^-: maps the k-th smallest of D to the
          // w(k)-th smallest of R.
          std::vector<int> images(n, 0);
          for (int k = 1; k <= r; ++k) {
            images[dom.elements[k - 1] - 1] = ran.elements[w.image(k) - 1];
          }
          out.push_back(PartialPerm::from_images(n, std::move(images)));
        }
      }
    }
  }
  return out;
}

unsigned long long rook_monoid_size(int n) {
  unsigned long long total = 0;
  for (int r = 0; r <= n; ++r) {
    unsigned long long c = binomial(n, r);
    total += c * c * factorial(r);
  }
  return total;
}

}  // namespace rookschur
