#include "kerov/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kerov {

CycleType CycleType::of(std::vector<int> parts) {
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("cycle type parts must be positive");
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  CycleType t;
  t.parts_ = std::move(parts);
  t.weight_ = std::accumulate(t.parts_.begin(), t.parts_.end(), 0);
  return t;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Permutation::Permutation(int degree) {
  if (degree < 0) throw std::invalid_argument("permutation degree must be >= 0");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int k = degree();
  std::vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > k || seen[v]) throw std::invalid_argument("not a bijection of [k]");
    seen[v] = 1;
  }
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p(degree);
  if (a < 1 || b < 1 || a > degree || b > degree || a == b)
    throw std::invalid_argument("bad transposition");
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::vector<char> seen(static_cast<std::size_t>(degree) + 1, 0);
  for (const auto& cyc : cycles) {
    if (cyc.empty()) throw std::invalid_argument("empty cycle");
    for (int x : cyc) {
      if (x < 1 || x > degree) throw std::invalid_argument("cycle element out of range");
      if (seen[x]) throw std::invalid_argument("overlapping cycle supports");
      seen[x] = 1;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i)
      p.images_[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
  }
  return p;
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int max_elt = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected integer in cycle notation");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1) throw std::invalid_argument("cycle elements are positive");
      cyc.push_back(v);
      max_elt = std::max(max_elt, v);
      skip_ws();
    }
    if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++i;  // ')'
    if (cyc.empty()) throw std::invalid_argument("empty cycle");
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  if (degree == 0) degree = max_elt;
  if (degree < max_elt) throw std::invalid_argument("degree smaller than largest element");
  if (degree == 0) throw std::invalid_argument("cannot infer degree from empty input");
  return from_cycles(degree, cycles);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in composition");
  std::vector<int> img(images_.size());
  for (int x = 1; x <= degree(); ++x) img[x - 1] = images_[rhs.images_[x - 1] - 1];
  Permutation p(0);
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int x = 1; x <= degree(); ++x) img[images_[x - 1] - 1] = x;
  Permutation p(0);
  p.images_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= degree(); ++x)
    if (images_[x - 1] != x) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size() + 1, 0);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      seen[x] = 1;
      cyc.push_back(x);
      x = images_[x - 1];
    } while (x != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<char> seen(images_.size() + 1, 0);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start]) continue;
    ++count;
    int x = start;
    do {
      seen[x] = 1;
      x = images_[x - 1];
    } while (x != start);
  }
  return count;
}

CycleType Permutation::cycle_type() const {
  std::vector<int> parts;
  for (const auto& c : cycles()) parts.push_back(static_cast<int>(c.size()));
  return CycleType::of(std::move(parts));
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  for (const auto& c : cycles()) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

int absolute_length(const Permutation& p) { return p.degree() - p.cycle_count(); }

bool leq(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in absolute order");
  return absolute_length(q) == absolute_length(p) + absolute_length(p.inverse() * q);
}

bool is_transitive(const Permutation& tau, const Permutation& taubar) {
  if (tau.degree() != taubar.degree())
    throw std::invalid_argument("degree mismatch in transitivity check");
  const int k = tau.degree();
  if (k == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : {tau(x), taubar(x), tau.inverse()(x), taubar.inverse()(x)}) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == k;
}

Permutation canonical_of_type(const CycleType& mu) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : mu.parts()) {
    std::vector<int> cyc(part);
    std::iota(cyc.begin(), cyc.end(), next);
    next += part;
    cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(mu.weight(), cycles);
}

NonCrossingPartition::NonCrossingPartition(std::vector<std::vector<int>> blocks, int ground_size)
    : ground_size_(ground_size) {
  std::vector<char> seen(static_cast<std::size_t>(ground_size) + 1, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > ground_size || seen[x])
        throw std::invalid_argument("blocks must partition [j]");
      seen[x] = 1;
    }
  }
  for (int x = 1; x <= ground_size; ++x)
    if (!seen[x]) throw std::invalid_argument("blocks must partition [j]");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  if (!crossing_free(blocks)) throw std::invalid_argument("partition has a crossing");
  blocks_ = std::move(blocks);
}

bool NonCrossingPartition::crossing_free(const std::vector<std::vector<int>>& blocks) {
  // block id per element, then scan quadruples a<b<c<d
  int max_elt = 0;
  for (const auto& b : blocks)
    for (int x : b) max_elt = std::max(max_elt, x);
  std::vector<int> owner(static_cast<std::size_t>(max_elt) + 1, -1);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (int x : blocks[i]) owner[x] = static_cast<int>(i);
  for (int a = 1; a <= max_elt; ++a)
    for (int b = a + 1; b <= max_elt; ++b)
      for (int c = b + 1; c <= max_elt; ++c)
        for (int d = c + 1; d <= max_elt; ++d)
          if (owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b]) return false;
  return true;
}

bool NonCrossingPartition::refines(const NonCrossingPartition& rhs) const {
  if (ground_size_ != rhs.ground_size_) throw std::invalid_argument("ground set mismatch");
  std::vector<int> owner(static_cast<std::size_t>(ground_size_) + 1, -1);
  for (std::size_t i = 0; i < rhs.blocks_.size(); ++i)
    for (int x : rhs.blocks_[i]) owner[x] = static_cast<int>(i);
  for (const auto& b : blocks_)
    for (int x : b)
      if (owner[x] != owner[b.front()]) return false;
  return true;
}

std::vector<NonCrossingPartition> enumerate_noncrossing(int j) {
  if (j < 0) throw std::invalid_argument("ground size must be >= 0");
  std::vector<NonCrossingPartition> out;
  if (j == 0) return out;
  // restricted growth strings enumerate all set partitions of [j]
  std::vector<int> rgs(j, 0);
  while (true) {
    int block_count = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(block_count);
    for (int x = 1; x <= j; ++x) blocks[rgs[x - 1]].push_back(x);
    if (NonCrossingPartition::crossing_free(blocks))
      out.emplace_back(std::move(blocks), j);
    int i = j - 1;
    while (i > 0) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < cap) break;
      --i;
    }
    if (i == 0) break;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

Permutation nc_to_perm(const NonCrossingPartition& pi) {
  std::vector<int> img(pi.ground_size());
  for (const auto& block : pi.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i)
      img[block[i] - 1] = block[(i + 1) % block.size()];
  }
  Permutation p(std::move(img));
  return p;
}

NonCrossingPartition perm_to_nc(const Permutation& p) {
  const int j = p.degree();
  std::vector<int> full(j);
  std::iota(full.begin(), full.end(), 2);
  if (j > 0) full[j - 1] = 1;
  Permutation cycle{std::move(full)};
  if (!leq(p, cycle))
    throw std::invalid_argument("permutation is not below the full cycle");
  return NonCrossingPartition(p.cycles(), j);
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial out of range");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

Permutation nth_permutation_lex(int degree, std::uint64_t index) {
  std::vector<int> pool(degree);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> img;
  img.reserve(degree);
  for (int i = degree; i >= 1; --i) {
    std::uint64_t f = factorial(i - 1);
    std::uint64_t d = index / f;
    index %= f;
    img.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return Permutation(std::move(img));
}

void for_each_factorization(
    const Permutation& sigma,
    const std::function<void(const Permutation&, const Permutation&)>& fn) {
  const int k = sigma.degree();
  std::vector<int> one_line(k);
  std::iota(one_line.begin(), one_line.end(), 1);
  do {
    Permutation tau{one_line};
    fn(tau, tau.inverse() * sigma);
  } while (std::next_permutation(one_line.begin(), one_line.end()));
}

std::vector<std::pair<Permutation, Permutation>>
enumerate_factorizations(const Permutation& sigma) {
  std::vector<std::pair<Permutation, Permutation>> out;
  out.reserve(factorial(sigma.degree()));
  for_each_factorization(sigma,
                         [&](const Permutation& t, const Permutation& tb) { out.emplace_back(t, tb); });
  return out;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& stack, std::vector<CycleType>& out) {
  if (n == 0) {
    out.push_back(CycleType::of(stack));
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    stack.push_back(part);
    partitions_rec(n - part, part, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<CycleType> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<CycleType> out;
  std::vector<int> stack;
  partitions_rec(n, n, stack, out);
  return out;
}

}  // namespace kerov
