#include "ginv/symrep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "ginv/straighten.hpp"

namespace ginv {

namespace {

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class exact_div(const mpz_class& num, const mpz_class& den,
                    const char* what) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error(std::string("inexact division in ") + what);
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

void check_partition(const Partition& p, int n = -1) {
  int total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1]))
      throw std::invalid_argument("not a partition (weakly decreasing positive parts)");
    total += p[i];
  }
  if (n >= 0 && total != n)
    throw std::invalid_argument("partition has the wrong total");
}

void gen_partitions(int n, int max_part, Partition& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return out;
}

mpz_class hook_dimension(const Partition& lambda) {
  check_partition(lambda);
  int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (n == 0) return 1;
  // Column lengths of the diagram (conjugate partition).
  std::vector<int> conj(static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda)
    for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
  mpz_class hooks = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      hooks *= (lambda[i] - j) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i)) - 1;
  return exact_div(factorial(n), hooks, "hook_dimension");
}

mpz_class class_size(int n, const Partition& mu) {
  check_partition(mu, n);
  // Centralizer order: prod over part sizes k of k^{m_k} * m_k!.
  mpz_class z = 1;
  std::size_t i = 0;
  while (i < mu.size()) {
    std::size_t j = i;
    while (j < mu.size() && mu[j] == mu[i]) ++j;
    auto mult = static_cast<unsigned long>(j - i);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(mu[i]), mult);
    z *= pw * factorial(static_cast<int>(mult));
    i = j;
  }
  return exact_div(factorial(n), z, "class_size");
}

int class_sign(int n, const Partition& mu) {
  check_partition(mu, n);
  return (n - static_cast<int>(mu.size())) % 2 == 0 ? 1 : -1;
}

std::vector<int> class_representative(int n, const Partition& mu) {
  check_partition(mu, n);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  int start = 1;
  for (int len : mu) {
    for (int i = start; i < start + len - 1; ++i)
      sigma[static_cast<std::size_t>(i - 1)] = i + 1;
    sigma[static_cast<std::size_t>(start + len - 2)] = start;
    start += len;
  }
  return sigma;
}

Partition cycle_type_power(const Partition& mu, int k) {
  check_partition(mu);
  if (k < 1) throw std::invalid_argument("cycle_type_power: k must be positive");
  Partition out;
  for (int len : mu) {
    int g = std::gcd(len, k);
    for (int i = 0; i < g; ++i) out.push_back(len / g);
  }
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

namespace {

// Murnaghan-Nakayama on beta numbers.  The partition (padded with zeros to
// exactly n rows) is encoded as the strictly decreasing set
// {lambda_i + n - i : i = 1..n}; removing a border strip of length k turns
// one element b into b - k (legal when b - k is absent), with sign
// (-1)^(number of elements strictly between b - k and b).
class StripEvaluator {
public:
  explicit StripEvaluator(const Partition& mu) : mu_(mu) {}

  mpz_class eval(const std::vector<int>& beta) { return eval_at(beta, 0); }

private:
  mpz_class eval_at(const std::vector<int>& beta, std::size_t pos) {
    if (pos == mu_.size()) return 1;  // all boxes removed
    auto key = std::make_pair(beta, pos);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int k = mu_[pos];
    mpz_class total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      int b = beta[i];
      if (b < k) break;  // beta is sorted descending
      int t = b - k;
      bool occupied = false;
      int between = 0;
      for (int other : beta) {
        if (other == t) {
          occupied = true;
          break;
        }
        if (other > t && other < b) ++between;
      }
      if (occupied) continue;
      std::vector<int> next = beta;
      next[i] = t;
      std::sort(next.begin(), next.end(), std::greater<int>());
      mpz_class sub = eval_at(next, pos + 1);
      if (between % 2)
        total -= sub;
      else
        total += sub;
    }
    return memo_.emplace(std::move(key), std::move(total)).first->second;
  }

  const Partition& mu_;
  std::map<std::pair<std::vector<int>, std::size_t>, mpz_class> memo_;
};

std::vector<int> beta_numbers(const Partition& lambda, int n) {
  std::vector<int> beta(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int part = i < static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(i)] : 0;
    beta[static_cast<std::size_t>(i)] = part + (n - 1 - i);
  }
  return beta;
}

}  // namespace

CharacterTable::CharacterTable(int n) : n_(n) {
  if (n < 1 || n > 14)
    throw std::invalid_argument("character_table: supported range is 1 <= n <= 14");
  parts_ = partitions_of(n);
  sizes_.reserve(parts_.size());
  for (const Partition& mu : parts_) sizes_.push_back(class_size(n, mu));
  chi_.assign(parts_.size(), std::vector<mpz_class>(parts_.size()));
  for (std::size_t c = 0; c < parts_.size(); ++c) {
    StripEvaluator strip(parts_[c]);  // memo shared across rows of the column
    for (std::size_t l = 0; l < parts_.size(); ++l)
      chi_[l][c] = strip.eval(beta_numbers(parts_[l], n));
  }
  // The identity column must reproduce the hook-length dimensions; the two
  // formulas are independent, so this catches bugs in either.
  std::size_t id = index_of(Partition(static_cast<std::size_t>(n), 1));
  for (std::size_t l = 0; l < parts_.size(); ++l)
    if (chi_[l][id] != hook_dimension(parts_[l]))
      throw std::logic_error("character_table: dimension cross-check failed");
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i] == p) return i;
  throw std::invalid_argument("character_table: unknown partition");
}

ClassFunction module_character(const MultidegreeSpace& space) {
  const std::vector<int>& v = space.valence();
  for (int vi : v)
    if (vi != v[0]) throw std::invalid_argument("module_character: non-symmetric weight vector");
  int n = space.n();
  std::vector<Partition> classes = partitions_of(n);
  ClassFunction chi;
  chi.n = n;
  chi.values.assign(classes.size(), 0);
  const std::vector<GraphMonomial>& basis = space.basis();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<int> sigma = class_representative(n, classes[c]);
    mpz_class trace = 0;
    for (const GraphMonomial& g : basis) {
      ZCombo image = straighten_graph(apply_permutation(sigma, g));
      if (auto it = image.find(g); it != image.end()) trace += it->second;
    }
    chi.values[c] = trace;
  }
  return chi;
}

ClassFunction sym_power_character(const ClassFunction& chi, int d) {
  if (d != 2 && d != 3)
    throw std::invalid_argument("sym_power_character: only d = 2 and d = 3");
  std::vector<Partition> classes = partitions_of(chi.n);
  if (classes.size() != chi.values.size())
    throw std::invalid_argument("sym_power_character: value count does not match class count");
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i], i);
  ClassFunction out;
  out.n = chi.n;
  out.values.reserve(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const mpz_class& x1 = chi.values[c];
    const mpz_class& x2 = chi.values[index.at(cycle_type_power(classes[c], 2))];
    if (d == 2) {
      out.values.push_back(exact_div(x1 * x1 + x2, 2, "sym_power_character"));
    } else {
      const mpz_class& x3 = chi.values[index.at(cycle_type_power(classes[c], 3))];
      out.values.push_back(
          exact_div(x1 * x1 * x1 + 3 * x1 * x2 + 2 * x3, 6, "sym_power_character"));
    }
  }
  return out;
}

std::map<Partition, long long> decompose(const ClassFunction& chi) {
  CharacterTable table(chi.n);
  if (table.partitions().size() != chi.values.size())
    throw std::invalid_argument("decompose: value count does not match class count");
  mpz_class order = factorial(chi.n);
  std::map<Partition, long long> out;
  for (std::size_t l = 0; l < table.partitions().size(); ++l) {
    mpz_class acc = 0;
    for (std::size_t c = 0; c < chi.values.size(); ++c)
      acc += table.class_sizes()[c] * table.value(l, c) * chi.values[c];
    mpz_class mult = exact_div(acc, order, "decompose");
    if (mult < 0 || !mult.fits_slong_p())
      throw std::logic_error("decompose: multiplicity out of range");
    if (mult != 0) out.emplace(table.partitions()[l], mult.get_si());
  }
  return out;
}

long long sign_multiplicity(const ClassFunction& chi) {
  std::vector<Partition> classes = partitions_of(chi.n);
  if (classes.size() != chi.values.size())
    throw std::invalid_argument("sign_multiplicity: value count does not match class count");
  mpz_class acc = 0;
  for (std::size_t c = 0; c < classes.size(); ++c)
    acc += class_size(chi.n, classes[c]) * class_sign(chi.n, classes[c]) * chi.values[c];
  mpz_class mult = exact_div(acc, factorial(chi.n), "sign_multiplicity");
  if (mult < 0 || !mult.fits_slong_p())
    throw std::logic_error("sign_multiplicity: multiplicity out of range");
  return mult.get_si();
}

}  // namespace ginv
