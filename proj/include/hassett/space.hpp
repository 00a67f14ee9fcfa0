#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "hassett/rational.hpp"

namespace hassett {

/// A subset of the markings 1..n, n <= 62. Value type backed by a bitmask.
class MarkSet {
 public:
  static constexpr int kMaxMarks = 62;

  MarkSet() = default;
  static MarkSet of(std::initializer_list<int> marks);
  static MarkSet of(const std::vector<int>& marks);
  static MarkSet full(int n);

  /// Accepts "{1,3}", "1,3", "{}" or "".
  static MarkSet parse(std::string_view text);

  bool contains(int mark) const { return mark >= 1 && (bits_ >> (mark - 1)) & 1u; }
  bool empty() const { return bits_ == 0; }
  int count() const;
  int min_mark() const;  // smallest element; 0 if empty

  MarkSet with(int mark) const;
  MarkSet without(int mark) const;
  MarkSet unite(const MarkSet& o) const { return MarkSet(bits_ | o.bits_); }
  MarkSet intersect(const MarkSet& o) const { return MarkSet(bits_ & o.bits_); }
  MarkSet minus(const MarkSet& o) const { return MarkSet(bits_ & ~o.bits_); }
  MarkSet complement_in(int n) const;
  bool subset_of(const MarkSet& o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> elements() const;
  std::uint64_t bits() const { return bits_; }
  static MarkSet from_bits(std::uint64_t bits) { return MarkSet(bits); }

  std::string str() const;  // "{1,3}"

  /// Canonical order: by size, then by smallest differing element.
  int compare(const MarkSet& o) const;

  friend bool operator==(const MarkSet& a, const MarkSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const MarkSet& a, const MarkSet& b) { return a.compare(b) < 0; }

 private:
  explicit MarkSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// An ordered list of marking weights, each in (0, 1].
class WeightDatum {
 public:
  WeightDatum() = default;
  explicit WeightDatum(std::vector<Rational> weights);

  /// Comma-separated rationals; empty string means no markings.
  static WeightDatum parse(std::string_view text);

  int size() const { return static_cast<int>(weights_.size()); }
  const Rational& at(int mark) const;  // 1-based
  const std::vector<Rational>& weights() const { return weights_; }
  Rational total() const;
  Rational subset_weight(const MarkSet& marks) const;
  Rational min_weight() const;  // requires size() >= 1

  std::string str() const;  // "1,1/2"
  int compare(const WeightDatum& o) const;
  friend bool operator==(const WeightDatum& a, const WeightDatum& b) {
    return a.weights_ == b.weights_;
  }

 private:
  std::vector<Rational> weights_;
};

/// A moduli space of weighted pointed stable curves, given by genus and
/// weight datum. Construction enforces 2g - 2 + sum(weights) > 0 strictly.
class ModuliSpace {
 public:
  ModuliSpace(int genus, WeightDatum weights);

  int genus() const { return genus_; }
  int marks() const { return weights_.size(); }
  const WeightDatum& weights() const { return weights_; }
  const Rational& weight(int mark) const { return weights_.at(mark); }
  Rational subset_weight(const MarkSet& marks) const { return weights_.subset_weight(marks); }
  MarkSet all_marks() const { return MarkSet::full(marks()); }

  std::string str() const;  // "g=1, weights=(1,1/2)"
  int compare(const ModuliSpace& o) const;
  friend bool operator==(const ModuliSpace& a, const ModuliSpace& b) {
    return a.genus_ == b.genus_ && a.weights_ == b.weights_;
  }

 private:
  int genus_;
  WeightDatum weights_;
};

/// Convenience factory, same validation as the constructor.
ModuliSpace make_space(int genus, std::vector<Rational> weights);

/// The space with the same genus and marking count, all weights equal to 1.
ModuliSpace unit_weight_space(int genus, int marks);

}  // namespace hassett
