#include "streett/bigint.hpp"

#include <algorithm>

namespace streett {

BigUint::BigUint(std::uint64_t v)
{
  while (v) {
    limbs_.push_back(static_cast<std::uint32_t>(v));
    v >>= 32;
  }
}

void BigUint::trim()
{
  while (!limbs_.empty() && limbs_.back() == 0)
    limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs)
{
  limbs_.resize(std::max(limbs_.size(), rhs.limbs_.size()), 0);
  std::uint64_t carry = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sum = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
  }
  if (carry)
    limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUint& BigUint::operator*=(const BigUint& rhs)
{
  if (is_zero() || rhs.is_zero()) {
    limbs_.clear();
    return *this;
  }
  std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out[i + j] + carry +
                          static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j];
      out[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    out[i + rhs.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  limbs_ = std::move(out);
  trim();
  return *this;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const
{
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() <=> rhs.limbs_.size();
  for (size_t i = limbs_.size(); i-- > 0;)
    if (limbs_[i] != rhs.limbs_[i])
      return limbs_[i] <=> rhs.limbs_[i];
  return std::strong_ordering::equal;
}

BigUint BigUint::factorial(unsigned n)
{
  BigUint out(1);
  for (unsigned i = 2; i <= n; ++i)
    out *= BigUint(i);
  return out;
}

BigUint BigUint::pow(std::uint64_t base, unsigned exp)
{
  return pow(BigUint(base), exp);
}

BigUint BigUint::pow(const BigUint& base, unsigned exp)
{
  BigUint out(1);
  BigUint sq = base;
  while (exp) {
    if (exp & 1)
      out *= sq;
    exp >>= 1;
    if (exp)
      sq *= sq;
  }
  return out;
}

BigUint BigUint::binomial(unsigned a, unsigned b)
{
  if (b > a)
    return BigUint(0);
  b = std::min(b, a - b);
  // Pascal row, additions only
  std::vector<BigUint> row{BigUint(1)};
  for (unsigned i = 1; i <= a; ++i) {
    row.push_back(BigUint(0));
    for (size_t j = std::min<size_t>(row.size() - 1, b); j > 0; --j)
      row[j] += row[j - 1];
  }
  return row[b];
}

std::string BigUint::to_string() const
{
  if (is_zero())
    return "0";
  std::vector<std::uint32_t> work = limbs_;
  std::string out;
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0)
      work.pop_back();
    std::string chunk = std::to_string(rem);
    if (!work.empty())
      chunk.insert(chunk.begin(), 9 - chunk.size(), '0');
    out.insert(0, chunk);
  }
  return out;
}

} // namespace streett
