#include "betasum/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace betasum {

namespace {

const Int kZero = 0;

std::vector<Int>& factorial_table() {
  thread_local std::vector<Int> table{Int(1)};
  return table;
}

// Pascal rows, grown on demand.  rows[n][r] = C(n, r).
std::vector<std::vector<Int>>& pascal_rows() {
  thread_local std::vector<std::vector<Int>> rows;
  return rows;
}

void grow_pascal(long n) {
  auto& rows = pascal_rows();
  while (static_cast<long>(rows.size()) <= n) {
    const long k = static_cast<long>(rows.size());
    std::vector<Int> row(static_cast<size_t>(k) + 1);
    row.front() = 1;
    row.back() = 1;
    if (k >= 2) {
      const auto& prev = rows.back();
      for (long r = 1; r < k; ++r) row[r] = prev[r - 1] + prev[r];
    }
    rows.push_back(std::move(row));
  }
}

}  // namespace

Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: requires n >= 0");
  auto& table = factorial_table();
  while (static_cast<long>(table.size()) <= n) {
    table.push_back(table.back() * static_cast<long>(table.size()));
  }
  return table[n];
}

namespace detail {

const Int& binomial_ref(long n, long r) {
  if (r < 0 || r > n) return kZero;
  grow_pascal(n);
  return pascal_rows()[n][r];
}

}  // namespace detail

Int binomial(long n, long r) {
  if (n < 0) throw std::domain_error("binomial: requires n >= 0");
  if (r < 0 || r > n) return 0;
  if (n < detail::kBinomialTableCap) return detail::binomial_ref(n, r);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return out;
}

Int multinomial(std::span<const long> parts) {
  long total = 0;
  bool negative_part = false;
  for (long p : parts) {
    total += p;
    if (p < 0) negative_part = true;
  }
  if (total < 0) throw std::domain_error("multinomial: requires total >= 0");
  if (negative_part) return 0;
  Int out = 1;
  long prefix = 0;
  for (long p : parts) {
    prefix += p;
    out *= binomial(prefix, p);
  }
  return out;
}

Int multinomial(std::initializer_list<long> parts) {
  return multinomial(std::span<const long>(parts.begin(), parts.size()));
}

}  // namespace betasum
