#include "kerov/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace kerov {

YoungDiagram::YoungDiagram(std::vector<long> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0) throw std::invalid_argument("row lengths must be non-negative");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("row lengths must be weakly decreasing");
  }
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  n_ = std::accumulate(rows_.begin(), rows_.end(), 0L);
}

YoungDiagram diagram_from_pq(const std::vector<long>& p, const std::vector<long>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("p and q must have equal length");
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < 0 || q[i] < 0) throw std::invalid_argument("entries must be non-negative");
  std::vector<long> rows;
  long suffix = std::accumulate(q.begin(), q.end(), 0L);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (long r = 0; r < p[i]; ++r) rows.push_back(suffix);
    suffix -= q[i];
  }
  return YoungDiagram(std::move(rows));
}

namespace {

// chi via beta numbers: remove a border strip of length `part` by lowering
// one beta number, sign given by the strictly intermediate beta numbers.
mpz_class mn_rec(std::vector<long> beta, const std::vector<int>& parts, std::size_t next,
                 std::map<std::pair<std::vector<long>, std::size_t>, mpz_class>& memo) {
  std::sort(beta.begin(), beta.end());
  if (next == parts.size()) return 1;  // all cells removed, chi of the empty diagram
  auto key = std::make_pair(beta, next);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const long part = parts[next];
  mpz_class total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    long lowered = beta[i] - part;
    if (lowered < 0) continue;
    bool clash = std::find(beta.begin(), beta.end(), lowered) != beta.end();
    if (clash) continue;
    int height = 0;
    for (long b : beta)
      if (b > lowered && b < beta[i]) ++height;
    std::vector<long> nxt = beta;
    nxt[i] = lowered;
    mpz_class sub = mn_rec(std::move(nxt), parts, next + 1, memo);
    if (height % 2 == 1) sub = -sub;
    total += sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

std::vector<long> beta_numbers(const YoungDiagram& lambda) {
  const auto& rows = lambda.rows();
  const long ell = static_cast<long>(rows.size());
  std::vector<long> beta;
  for (long i = 0; i < ell; ++i) beta.push_back(rows[static_cast<std::size_t>(i)] + (ell - 1 - i));
  return beta;
}

}  // namespace

mpz_class mn_character(const YoungDiagram& lambda, const CycleType& mu) {
  if (mu.weight() > lambda.n())
    throw std::invalid_argument("cycle type heavier than the diagram");
  std::vector<int> parts = mu.parts();
  for (long i = mu.weight(); i < lambda.n(); ++i) parts.push_back(1);

  static std::map<std::pair<std::vector<long>, std::vector<int>>, mpz_class> memo;
  static std::mutex memo_mutex;
  auto outer_key = std::make_pair(beta_numbers(lambda), parts);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    if (auto it = memo.find(outer_key); it != memo.end()) return it->second;
  }
  std::map<std::pair<std::vector<long>, std::size_t>, mpz_class> local;
  mpz_class value = mn_rec(outer_key.first, parts, 0, local);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::move(outer_key), value);
  }
  return value;
}

mpq_class normalized_character(const YoungDiagram& lambda, const CycleType& mu) {
  const long n = lambda.n();
  const int k = mu.weight();
  if (k > n) throw std::invalid_argument("cycle type heavier than the diagram");
  mpz_class falling = 1;
  for (int i = 0; i < k; ++i) falling *= (n - i);
  mpz_class dim = mn_character(lambda, CycleType::of({}));
  mpq_class value(falling * mn_character(lambda, mu), dim);
  value.canonicalize();
  if (value.get_den() != 1)
    throw std::logic_error("normalized character must be an integer");
  return value;
}

TransitionMeasure transition_measure(const YoungDiagram& lambda) {
  const auto& rows = lambda.rows();
  const long ell = static_cast<long>(rows.size());
  // contents of addable corners (local minima) and removable corners
  // (local maxima) of the profile, cell (i, j) having content j - i
  std::vector<long> addable, removable;
  for (long i = 1; i <= ell + 1; ++i) {
    long here = i <= ell ? rows[static_cast<std::size_t>(i - 1)] : 0;
    long above = i == 1 ? -1 : rows[static_cast<std::size_t>(i - 2)];
    if (i == 1 || here < above) addable.push_back(here + 1 - i);
    long below = i <= ell ? (i == ell ? 0 : rows[static_cast<std::size_t>(i)]) : 0;
    if (i <= ell && here > below) removable.push_back(here - i);
  }
  std::sort(addable.begin(), addable.end());
  std::sort(removable.begin(), removable.end());

  TransitionMeasure tm;
  for (long x : addable) tm.atoms.emplace_back(x);
  for (std::size_t i = 0; i < addable.size(); ++i) {
    mpq_class w = 1;
    for (long y : removable) w *= mpq_class(addable[i] - y);
    for (std::size_t k = 0; k < addable.size(); ++k)
      if (k != i) w /= mpq_class(addable[i] - addable[k]);
    w.canonicalize();
    tm.weights.push_back(w);
  }
  return tm;
}

std::vector<mpq_class> moments(const TransitionMeasure& tm, int up_to) {
  std::vector<mpq_class> out(static_cast<std::size_t>(up_to) + 1, 0);
  std::vector<mpq_class> powers = tm.weights;
  for (int r = 0; r <= up_to; ++r) {
    mpq_class m = 0;
    for (const auto& w : powers) m += w;
    out[static_cast<std::size_t>(r)] = m;
    for (std::size_t i = 0; i < powers.size(); ++i) powers[i] *= tm.atoms[i];
  }
  return out;
}

std::vector<mpq_class> free_cumulants_numeric(const YoungDiagram& lambda, int up_to) {
  if (up_to < 2) throw std::invalid_argument("cumulants are computed up to at least R_2");
  TransitionMeasure tm = transition_measure(lambda);
  std::vector<mpq_class> m = moments(tm, up_to);
  std::vector<mpq_class> r(static_cast<std::size_t>(up_to) + 1, 0);
  r[0] = 1;
  // m_n = sum over pi in NC(n) of prod_B R_{|B|}; solve upward
  for (int n = 1; n <= up_to; ++n) {
    mpq_class rest = 0;
    for (const auto& pi : enumerate_noncrossing(n)) {
      if (pi.block_count() == 1) continue;  // the full block carries R_n itself
      mpq_class prod = 1;
      for (const auto& block : pi.blocks()) prod *= r[block.size()];
      rest += prod;
    }
    r[static_cast<std::size_t>(n)] = m[static_cast<std::size_t>(n)] - rest;
  }
  return r;
}

}  // namespace kerov
