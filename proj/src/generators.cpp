#include "streett/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace streett {

namespace {

struct SeededCoin {
  std::mt19937_64 rng;

  explicit SeededCoin(std::uint64_t seed) : rng(seed) {}

  bool flip(double p)
  {
    std::uint64_t r = rng();
    if (p >= 1.0)
      return true;
    if (p <= 0.0)
      return false;
    return r < static_cast<std::uint64_t>(p * 18446744073709551616.0);
  }
};

} // namespace

StreettNSA random_nsa(const GenSpec& spec)
{
  if (spec.n < 1 || spec.n > kMaxStates || spec.k < 0 || spec.k > kMaxPairs || spec.sigma < 1)
    throw domain_error("generator spec out of range");
  if (spec.transition_density <= 0.0 || spec.transition_density > 1.0)
    throw domain_error("transition density must lie in (0,1]");
  if (spec.pair_density < 0.0 || spec.pair_density > 1.0)
    throw domain_error("pair density must lie in [0,1]");

  SeededCoin coin(spec.seed);
  StreettNSA nsa;
  nsa.n = spec.n;
  nsa.alphabet.size = spec.sigma;
  nsa.basis = PairBasis::states;
  for (int s = 0; s < spec.n; ++s)
    for (int a = 0; a < spec.sigma; ++a)
      for (int t = 0; t < spec.n; ++t)
        if (coin.flip(spec.transition_density))
          nsa.transitions.push_back(Transition{s, a, t});
  nsa.pairs.resize(spec.k);
  for (int i = 0; i < spec.k; ++i) {
    for (int s = 0; s < spec.n; ++s)
      if (coin.flip(spec.pair_density))
        nsa.pairs[i].g_states |= state_bit(s);
    for (int s = 0; s < spec.n; ++s)
      if (coin.flip(spec.pair_density))
        nsa.pairs[i].b_states |= state_bit(s);
  }
  for (int s = 0; s < spec.n; ++s)
    if (coin.flip(0.5))
      nsa.initial |= state_bit(s);
  if (nsa.initial == 0)
    nsa.initial = state_bit(0);
  nsa.validate();
  return nsa;
}

int full_streett_triple_bits(int n, int k)
{
  return n * (2 * k + 1) * n;
}

// triple id = (src * (2k+1) + mark) * n + dst
std::vector<MarkedTriple> letter_triples(std::uint64_t letter_mask, int n, int k)
{
  std::vector<MarkedTriple> out;
  int marks = 2 * k + 1;
  while (letter_mask) {
    int bit = std::countr_zero(letter_mask);
    letter_mask &= letter_mask - 1;
    out.push_back(MarkedTriple{bit / (marks * n), (bit / n) % marks, bit % n});
  }
  return out;
}

StreettNSA full_streett_restricted(int n, int k, const std::vector<std::uint64_t>& letters)
{
  if (n < 1 || n > kMaxStates || k < 1 || k > kMaxPairs)
    throw domain_error("full Streett parameters out of range");
  if (letters.empty())
    throw domain_error("at least one letter is needed");
  if (!std::is_sorted(letters.begin(), letters.end()) ||
      std::adjacent_find(letters.begin(), letters.end()) != letters.end())
    throw domain_error("letter masks must be sorted and unique");
  int bits = full_streett_triple_bits(n, k);
  if (bits < 64)
    for (std::uint64_t mask : letters)
      if (mask >> bits)
        throw domain_error("letter mask uses triples outside the space");

  StreettNSA nsa;
  nsa.n = n;
  nsa.alphabet.size = static_cast<int>(letters.size());
  nsa.initial = full_state_set(n);
  nsa.basis = PairBasis::transitions;
  nsa.pairs.resize(k);

  std::set<Transition> transitions;
  for (size_t a = 0; a < letters.size(); ++a)
    for (const auto& triple : letter_triples(letters[a], n, k))
      transitions.insert(Transition{triple.src, static_cast<int>(a), triple.dst});
  nsa.transitions.assign(transitions.begin(), transitions.end());

  for (size_t a = 0; a < letters.size(); ++a)
    for (const auto& triple : letter_triples(letters[a], n, k)) {
      if (triple.mark == 0)
        continue;
      int id = nsa.transition_id(Transition{triple.src, static_cast<int>(a), triple.dst});
      auto& pair = nsa.pairs[(triple.mark - 1) % k];
      auto& side = triple.mark <= k ? pair.g_transitions : pair.b_transitions;
      side.push_back(id);
    }
  for (auto& pair : nsa.pairs)
    for (auto* side : {&pair.g_transitions, &pair.b_transitions}) {
      std::sort(side->begin(), side->end());
      side->erase(std::unique(side->begin(), side->end()), side->end());
    }
  nsa.validate();
  return nsa;
}

StreettNSA full_streett(int n, int k)
{
  int bits = full_streett_triple_bits(n, k);
  if (bits > 12)
    throw capacity_error("explicit full Streett alphabet needs " + std::to_string(bits)
                         + " triple bits, above the 12-bit cap; sample letters instead");
  std::vector<std::uint64_t> letters(std::uint64_t{1} << bits);
  for (std::uint64_t i = 0; i < letters.size(); ++i)
    letters[i] = i;
  return full_streett_restricted(n, k, letters);
}

std::vector<std::uint64_t> sample_full_streett_letters(int n, int k, int count,
                                                       std::uint64_t seed)
{
  int bits = full_streett_triple_bits(n, k);
  if (bits > 63)
    throw capacity_error("triple space beyond 63 bits cannot be sampled as masks");
  std::uint64_t space = std::uint64_t{1} << bits;
  if (static_cast<std::uint64_t>(count) > space)
    throw domain_error("sample larger than the letter space");
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> picked;
  while (picked.size() < static_cast<size_t>(count))
    picked.insert(rng() & (space - 1));
  return {picked.begin(), picked.end()};
}

StreettNSA to_state_based(const StreettNSA& nsa, int state_cap)
{
  nsa.validate();
  if (nsa.basis != PairBasis::transitions)
    throw basis_error("input already has state-based pairs");
  int k = nsa.k();

  // annotation = mark set of the incoming transition:
  // bit i-1 for G_i, bit k+i-1 for B_i
  auto marks_of = [&](int transition_id) -> std::uint32_t {
    return nsa.g_mask(transition_id) | (nsa.b_mask(transition_id) << k);
  };

  std::map<std::pair<int, std::uint32_t>, int> ids;
  std::vector<std::pair<int, std::uint32_t>> split_states;
  std::vector<std::pair<int, std::uint32_t>> frontier;
  auto intern = [&](int q, std::uint32_t ann) {
    auto key = std::make_pair(q, ann);
    auto it = ids.find(key);
    if (it != ids.end())
      return it->second;
    int id = static_cast<int>(split_states.size());
    if (id >= state_cap)
      throw capacity_error("mark-splitting exceeds the " + std::to_string(state_cap)
                           + "-state cap");
    ids.emplace(key, id);
    split_states.push_back(key);
    frontier.push_back(key);
    return id;
  };

  StreettNSA out;
  out.alphabet = nsa.alphabet;
  out.basis = PairBasis::states;
  out.pairs.resize(k);

  for (int q : states_of(nsa.initial))
    out.initial |= state_bit(intern(q, 0));

  std::set<Transition> transitions;
  while (!frontier.empty()) {
    auto [q, ann] = frontier.back();
    frontier.pop_back();
    int src_id = ids.at({q, ann});
    for (size_t t = 0; t < nsa.transitions.size(); ++t) {
      if (nsa.transitions[t].src != q)
        continue;
      int dst_id = intern(nsa.transitions[t].dst, marks_of(static_cast<int>(t)));
      transitions.insert(Transition{src_id, nsa.transitions[t].letter, dst_id});
    }
  }
  out.n = static_cast<int>(split_states.size());
  out.transitions.assign(transitions.begin(), transitions.end());
  for (int s = 0; s < out.n; ++s) {
    std::uint32_t ann = split_states[s].second;
    for (int i = 1; i <= k; ++i) {
      if (ann & (std::uint32_t{1} << (i - 1)))
        out.pairs[i - 1].g_states |= state_bit(s);
      if (ann & (std::uint32_t{1} << (k + i - 1)))
        out.pairs[i - 1].b_states |= state_bit(s);
    }
  }
  out.validate();
  return out;
}

LassoEnumerator::LassoEnumerator(int sigma, int max_prefix, int max_cycle)
  : sigma_(sigma), max_prefix_(max_prefix), max_cycle_(max_cycle), total_(1), prefix_len_(-1)
{
  if (sigma < 1 || max_prefix < 0 || max_cycle < 1)
    throw domain_error("lasso limits out of range");
  advance_shape();
}

// odometer increment, least-significant at the back
bool LassoEnumerator::bump_word(std::vector<int>& word) const
{
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (++*it < sigma_)
      return true;
    *it = 0;
  }
  return false;
}

bool LassoEnumerator::advance_shape()
{
  for (;;) {
    ++prefix_len_;
    if (prefix_len_ > std::min(max_prefix_, total_ - 1)) {
      ++total_;
      if (total_ > max_prefix_ + max_cycle_)
        return false;
      prefix_len_ = std::max(0, total_ - max_cycle_) - 1;
      continue;
    }
    int cycle_len = total_ - prefix_len_;
    if (cycle_len < 1 || cycle_len > max_cycle_)
      continue;
    prefix_.assign(prefix_len_, 0);
    cycle_.assign(cycle_len, 0);
    fresh_shape_ = true;
    return true;
  }
}

std::optional<Lasso> LassoEnumerator::next()
{
  if (done_)
    return std::nullopt;
  if (fresh_shape_) {
    fresh_shape_ = false;
    return Lasso{prefix_, cycle_};
  }
  if (bump_word(cycle_))
    return Lasso{prefix_, cycle_};
  if (!prefix_.empty() && bump_word(prefix_)) {
    std::fill(cycle_.begin(), cycle_.end(), 0);
    return Lasso{prefix_, cycle_};
  }
  if (!advance_shape()) {
    done_ = true;
    return std::nullopt;
  }
  fresh_shape_ = false;
  return Lasso{prefix_, cycle_};
}

std::vector<Lasso> enumerate_lassos(int sigma, int max_prefix, int max_cycle)
{
  std::vector<Lasso> out;
  LassoEnumerator it(sigma, max_prefix, max_cycle);
  while (auto lasso = it.next())
    out.push_back(std::move(*lasso));
  return out;
}

} // namespace streett
