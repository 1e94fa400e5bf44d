#include "wcx/root_datum.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "wcx/errors.hpp"

namespace wcx {

namespace {

void require_same_length(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size())
    throw InputError("weight length mismatch: " + to_string(a) + " vs " + to_string(b));
}

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

WeightVector operator+(const WeightVector& a, const WeightVector& b) {
  require_same_length(a, b);
  WeightVector out{a.entries, a.sim + b.sim};
  for (std::size_t i = 0; i < a.size(); ++i) out.entries[i] += b.entries[i];
  return out;
}

WeightVector operator-(const WeightVector& a, const WeightVector& b) {
  require_same_length(a, b);
  WeightVector out{a.entries, a.sim - b.sim};
  for (std::size_t i = 0; i < a.size(); ++i) out.entries[i] -= b.entries[i];
  return out;
}

std::string to_string(const WeightVector& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w.entries[i];
  os << ';' << w.sim << ')';
  return os.str();
}

WeightVector parse_weight(std::string_view text) {
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  WeightVector out;
  auto semi = text.find(';');
  auto body = text.substr(0, semi);
  if (semi != std::string_view::npos) out.sim = parse_int(text.substr(semi + 1));
  if (body.find_first_not_of(' ') == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    out.entries.push_back(parse_int(body.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

WeylElement::WeylElement(std::vector<int> one_line) : perm_(std::move(one_line)) {
  std::vector<char> seen(perm_.size(), 0);
  for (int v : perm_) {
    if (v < 0 || static_cast<std::size_t>(v) >= perm_.size() || seen[static_cast<std::size_t>(v)])
      throw InputError("WeylElement: not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

WeylElement WeylElement::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return WeylElement(std::move(p));
}

int WeylElement::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < perm_.size(); ++i)
    for (std::size_t j = i + 1; j < perm_.size(); ++j)
      if (perm_[i] > perm_[j]) ++inv;
  return inv;
}

WeylElement WeylElement::inverse() const {
  std::vector<int> inv(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) inv[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
  return WeylElement(std::move(inv));
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  // apply(b, apply(a, v))_i = apply(a, v)_{b(i)} = v_{a(b(i))}
  if (a.rank() != b.rank()) throw InputError("WeylElement: rank mismatch");
  std::vector<int> out(a.perm_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.perm_[static_cast<std::size_t>(b.perm_[i])];
  return WeylElement(std::move(out));
}

std::vector<int> WeylElement::apply(std::span<const int> v) const {
  if (v.size() != perm_.size()) throw InputError("WeylElement: length mismatch");
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[static_cast<std::size_t>(perm_[i])];
  return out;
}

BlockComposition::BlockComposition(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  for (int b : blocks_)
    if (b <= 0) throw InputError("BlockComposition: blocks must be positive");
}

int BlockComposition::n() const { return std::accumulate(blocks_.begin(), blocks_.end(), 0); }

std::vector<int> BlockComposition::offsets() const {
  std::vector<int> off{0};
  for (int b : blocks_) off.push_back(off.back() + b);
  return off;
}

int BlockComposition::block_of(int i) const {
  int acc = 0;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    acc += blocks_[k];
    if (i < acc) return static_cast<int>(k);
  }
  throw InputError("BlockComposition: coordinate out of range");
}

std::vector<std::pair<int, int>> BlockComposition::radical_roots() const {
  std::vector<std::pair<int, int>> roots;
  const int n = this->n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (block_of(i) != block_of(j)) roots.emplace_back(i, j);
  return roots;
}

int BlockComposition::radical_dim() const {
  int sq = 0;
  for (int b : blocks_) sq += b * b;
  const int n = this->n();
  return (n * n - sq) / 2;
}

bool BlockComposition::has_boundary(int k) const {
  auto off = offsets();
  return k > 0 && k < n() && std::find(off.begin(), off.end(), k) != off.end();
}

std::string to_string(const BlockComposition& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.blocks().size(); ++i) os << (i ? "," : "") << c.blocks()[i];
  os << ')';
  return os.str();
}

WeightVector rho(int n) {
  if (n < 1) throw InputError("rho: n must be positive");
  WeightVector r;
  for (int i = n - 1; i >= 0; --i) r.entries.push_back(i);
  return r;
}

WeightVector act(const WeylElement& w, const WeightVector& lambda) {
  if (static_cast<std::size_t>(w.rank()) != lambda.size()) throw InputError("act: length mismatch");
  return WeightVector{w.apply(lambda.entries), lambda.sim};
}

WeightVector dot_action(const WeylElement& w, const WeightVector& lambda) {
  if (static_cast<std::size_t>(w.rank()) != lambda.size()) throw InputError("dot_action: length mismatch");
  if (lambda.size() == 0) return lambda;
  const WeightVector r = rho(static_cast<int>(lambda.size()));
  return act(w, lambda + r) - r;
}

std::vector<WeylElement> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<WeylElement> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<WeylElement> minimal_coset_reps(const BlockComposition& comp) {
  const auto off = comp.offsets();
  std::vector<WeylElement> reps;
  for (auto& w : all_permutations(comp.n())) {
    bool increasing = true;
    for (std::size_t b = 0; b + 1 < off.size() && increasing; ++b)
      for (int i = off[b]; i + 1 < off[b + 1]; ++i)
        if (w[i] > w[i + 1]) { increasing = false; break; }
    if (increasing) reps.push_back(std::move(w));
  }
  std::stable_sort(reps.begin(), reps.end(), [](const WeylElement& a, const WeylElement& b) {
    return a.length() < b.length();
  });
  return reps;
}

WeylElement longest_element(const BlockComposition& comp) {
  const auto off = comp.offsets();
  std::vector<int> p(static_cast<std::size_t>(comp.n()));
  for (std::size_t b = 0; b + 1 < off.size(); ++b)
    for (int i = off[b]; i < off[b + 1]; ++i) p[static_cast<std::size_t>(i)] = off[b] + off[b + 1] - 1 - i;
  return WeylElement(std::move(p));
}

bool dominant_for(const BlockComposition& comp, const WeightVector& mu) {
  if (static_cast<std::size_t>(comp.n()) != mu.size()) throw InputError("dominant_for: length mismatch");
  const auto off = comp.offsets();
  for (std::size_t b = 0; b + 1 < off.size(); ++b)
    for (int i = off[b]; i + 1 < off[b + 1]; ++i)
      if (mu.entries[static_cast<std::size_t>(i)] < mu.entries[static_cast<std::size_t>(i + 1)]) return false;
  return true;
}

WeightVector levi_dual(const BlockComposition& comp, const WeightVector& mu) {
  WeightVector out = act(longest_element(comp), mu);
  for (int& e : out.entries) e = -e;
  out.sim = -mu.sim;
  return out;
}

WeightVector radical_root_sum(const BlockComposition& comp) {
  WeightVector out{std::vector<int>(static_cast<std::size_t>(comp.n()), 0), 0};
  for (auto [i, j] : comp.radical_roots()) {
    ++out.entries[static_cast<std::size_t>(i)];
    --out.entries[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace wcx
