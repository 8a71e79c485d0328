#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "forge/errors.hpp"

namespace forge {

using ColourId = int;

/// A finite, totally ordered set of colours. The order is the position in
/// the list; lookups by name go through `index_of`.
class ColourSet {
 public:
  ColourSet() = default;
  explicit ColourSet(std::vector<std::string> names);

  /// Colours sorted lexicographically by name.
  static ColourSet lexicographic(std::vector<std::string> names);
  /// Colours named "0", "1", ..., "n-1" in numeric order.
  static ColourSet numbered(int n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(ColourId c) const { return names_.at(c); }
  const std::vector<std::string>& names() const { return names_; }
  ColourId index_of(const std::string& name) const;
  bool contains(const std::string& name) const;

  bool operator==(const ColourSet&) const = default;

 private:
  std::vector<std::string> names_;
};

/// One-line notation of a permutation of {0,...,n-1}: `image(i)` is where i
/// goes. Products follow function composition: (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  Permutation(std::initializer_list<int> image) : Permutation(std::vector<int>(image)) {}

  static Permutation identity(std::size_t n);
  /// Skips validation; for images that are permutations by construction.
  static Permutation trusted(std::vector<int> image) {
    Permutation p;
    p.image_ = std::move(image);
    return p;
  }
  /// All n! permutations in lexicographic order of their one-line notation.
  static std::vector<Permutation> all(std::size_t n);
  /// Build from 1-based one-line notation, as written in files and docs.
  static Permutation from_one_based(const std::vector<int>& image);

  std::size_t size() const { return image_.size(); }
  int operator()(std::size_t i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  bool is_identity() const;
  /// Packs the permutation into 64 bits; valid for n <= 15.
  std::uint64_t code() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

/// Right action on sequences: (seq . p)_i = seq_{p(i)}.
template <class T>
std::vector<T> permute(std::span<const T> seq, const Permutation& p) {
  std::vector<T> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) out[i] = seq[p(i)];
  return out;
}

template <class T>
std::vector<T> permute(const std::vector<T>& seq, const Permutation& p) {
  return permute(std::span<const T>(seq), p);
}

/// Direct sum: acts by `parts[i]` on the i-th block of consecutive positions.
Permutation direct_sum(std::span<const Permutation> parts);

/// The block permutation induced by sigma on blocks of the given sizes:
/// if a sequence is the concatenation of blocks B_0..B_{n-1}, then permuting
/// it by the result gives the concatenation B_{sigma(0)}, ..., B_{sigma(n-1)}.
Permutation block_permutation(const Permutation& sigma, std::span<const std::size_t> block_sizes);

/// Index (c_1,...,c_n; c) of an operad component.
struct Signature {
  std::vector<ColourId> inputs;
  ColourId output = 0;

  std::size_t arity() const { return inputs.size(); }
  bool is_ordered() const;
  Signature permuted(const Permutation& p) const { return {permute(inputs, p), output}; }

  auto operator<=>(const Signature&) const = default;
  bool operator==(const Signature&) const = default;
};

std::string to_string(const Signature& sig, const ColourSet& colours);
std::string to_string(const Permutation& p);

/// Checks every colour of `sig` lies in `colours`.
void validate(const Signature& sig, const ColourSet& colours);

struct SortedSignature {
  Signature ordered;
  /// Stable sort permutation: sig.inputs . rho == ordered.inputs.
  Permutation rho;
};

SortedSignature sort_signature(const Signature& sig);

/// Permutations sigma with sig.inputs . sigma == sig.inputs, in lexicographic
/// order. For an ordered signature this is the subgroup Sigma_{c_1...c_n}.
std::vector<Permutation> stabilizer_subgroup(const Signature& sig);

/// Every ordered signature over `colours` with arity <= max_arity, in
/// lexicographic order.
std::vector<Signature> ordered_signatures(const ColourSet& colours, std::size_t max_arity);

/// Every (not necessarily ordered) colour tuple of the given length.
std::vector<std::vector<ColourId>> all_tuples(std::size_t n_colours, std::size_t length);

}  // namespace forge
