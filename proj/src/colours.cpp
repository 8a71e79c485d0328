#include "forge/colours.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace forge {

ColourSet::ColourSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidArgument("colour names must be non-empty");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate colour '" + n + "'");
  }
}

ColourSet ColourSet::lexicographic(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  return ColourSet(std::move(names));
}

ColourSet ColourSet::numbered(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return ColourSet(std::move(names));
}

ColourId ColourSet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw ColourMismatch("unknown colour '" + name + "'");
  return static_cast<ColourId>(it - names_.begin());
}

bool ColourSet::contains(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || hit[v])
      throw InvalidArgument("not a permutation");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  do {
    Permutation p;
    p.image_ = image;
    out.push_back(std::move(p));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

Permutation Permutation::from_one_based(const std::vector<int>& image) {
  std::vector<int> zero(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) zero[i] = image[i] - 1;
  return Permutation(std::move(zero));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out[i] = image_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) p.image_[image_[i]] = static_cast<int>(i);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i)) return false;
  return true;
}

std::uint64_t Permutation::code() const {
  std::uint64_t c = image_.size();
  for (int v : image_) c = (c << 4) | static_cast<std::uint64_t>(v);
  return c;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ArityMismatch("composing permutations of different sizes");
  Permutation p;
  p.image_.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) p.image_[i] = a.image_[b.image_[i]];
  return p;
}

Permutation direct_sum(std::span<const Permutation> parts) {
  std::vector<int> image;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  image.reserve(total);
  int offset = 0;
  for (const auto& p : parts) {
    for (std::size_t j = 0; j < p.size(); ++j) image.push_back(offset + p(j));
    offset += static_cast<int>(p.size());
  }
  return Permutation::trusted(std::move(image));
}

Permutation block_permutation(const Permutation& sigma, std::span<const std::size_t> block_sizes) {
  if (sigma.size() != block_sizes.size()) throw ArityMismatch("block permutation size mismatch");
  std::vector<std::size_t> offset(block_sizes.size() + 1, 0);
  for (std::size_t i = 0; i < block_sizes.size(); ++i) offset[i + 1] = offset[i] + block_sizes[i];
  std::vector<int> image;
  image.reserve(offset.back());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    std::size_t old = sigma(i);
    for (std::size_t j = 0; j < block_sizes[old]; ++j) image.push_back(static_cast<int>(offset[old] + j));
  }
  return Permutation::trusted(std::move(image));
}

bool Signature::is_ordered() const { return std::is_sorted(inputs.begin(), inputs.end()); }

std::string to_string(const Signature& sig, const ColourSet& colours) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < sig.inputs.size(); ++i) {
    if (i) os << ',';
    os << colours.name(sig.inputs[i]);
  }
  os << ';' << colours.name(sig.output) << ')';
  return os.str();
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p(i) + 1;
  os << ']';
  return os.str();
}

void validate(const Signature& sig, const ColourSet& colours) {
  auto ok = [&](ColourId c) { return c >= 0 && static_cast<std::size_t>(c) < colours.size(); };
  if (!ok(sig.output)) throw ColourMismatch("output colour out of range");
  for (ColourId c : sig.inputs)
    if (!ok(c)) throw ColourMismatch("input colour out of range");
}

SortedSignature sort_signature(const Signature& sig) {
  const std::size_t n = sig.arity();
  std::vector<int> rho(n);
  std::vector<ColourId> sorted(sig.inputs);
  // Stable insertion sort; arities are small.
  for (std::size_t i = 0; i < n; ++i) {
    rho[i] = static_cast<int>(i);
    for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
      std::swap(sorted[j - 1], sorted[j]);
      std::swap(rho[j - 1], rho[j]);
    }
  }
  return {Signature{std::move(sorted), sig.output}, Permutation::trusted(std::move(rho))};
}

std::vector<Permutation> stabilizer_subgroup(const Signature& sig) {
  // Filters all of Sigma_n; arities stay small throughout the workbench.
  std::vector<Permutation> out;
  for (auto& p : Permutation::all(sig.arity()))
    if (permute(sig.inputs, p) == sig.inputs) out.push_back(std::move(p));
  return out;
}

std::vector<std::vector<ColourId>> all_tuples(std::size_t n_colours, std::size_t length) {
  std::vector<std::vector<ColourId>> out;
  if (n_colours == 0) {
    if (length == 0) out.emplace_back();
    return out;
  }
  std::vector<ColourId> cur(length, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (static_cast<std::size_t>(++cur[i]) < n_colours) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (length == 0) return out;
  }
}

std::vector<Signature> ordered_signatures(const ColourSet& colours, std::size_t max_arity) {
  std::vector<Signature> out;
  const std::size_t nc = colours.size();
  for (std::size_t n = 0; n <= max_arity; ++n) {
    for (auto& tuple : all_tuples(nc, n)) {
      if (!std::is_sorted(tuple.begin(), tuple.end())) continue;
      for (std::size_t c = 0; c < nc; ++c) out.push_back({tuple, static_cast<ColourId>(c)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace forge
