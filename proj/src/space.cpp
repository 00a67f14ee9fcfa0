#include "hassett/space.hpp"

#include <algorithm>
#include <bit>

#include "hassett/errors.hpp"

namespace hassett {

MarkSet MarkSet::of(std::initializer_list<int> marks) {
  return of(std::vector<int>(marks));
}

MarkSet MarkSet::of(const std::vector<int>& marks) {
  std::uint64_t bits = 0;
  for (int m : marks) {
    if (m < 1 || m > kMaxMarks)
      throw InvalidGeneratorError("marking index " + std::to_string(m) + " out of range 1.." +
                                  std::to_string(kMaxMarks));
    bits |= std::uint64_t(1) << (m - 1);
  }
  return MarkSet(bits);
}

MarkSet MarkSet::full(int n) {
  if (n < 0 || n > kMaxMarks)
    throw InvalidSpaceError("marking count " + std::to_string(n) + " out of range 0.." +
                            std::to_string(kMaxMarks));
  if (n == 0) return MarkSet();
  return MarkSet(~std::uint64_t(0) >> (64 - n));
}

int MarkSet::count() const { return std::popcount(bits_); }

int MarkSet::min_mark() const {
  if (bits_ == 0) return 0;
  return std::countr_zero(bits_) + 1;
}

MarkSet MarkSet::with(int mark) const {
  MarkSet single = of({mark});
  return unite(single);
}

MarkSet MarkSet::without(int mark) const {
  MarkSet single = of({mark});
  return minus(single);
}

MarkSet MarkSet::complement_in(int n) const { return full(n).minus(*this); }

std::vector<int> MarkSet::elements() const {
  std::vector<int> out;
  for (int m = 1; m <= kMaxMarks; ++m)
    if (contains(m)) out.push_back(m);
  return out;
}

std::string MarkSet::str() const {
  std::string out = "{";
  bool first = true;
  for (int m : elements()) {
    if (!first) out += ',';
    out += std::to_string(m);
    first = false;
  }
  out += '}';
  return out;
}

int MarkSet::compare(const MarkSet& o) const {
  int ca = count(), cb = o.count();
  if (ca != cb) return ca < cb ? -1 : 1;
  if (bits_ == o.bits_) return 0;
  // Equal sizes: the set owning the smallest non-shared element sorts first.
  std::uint64_t diff = bits_ ^ o.bits_;
  std::uint64_t low = diff & (~diff + 1);
  return (bits_ & low) ? -1 : 1;
}

MarkSet MarkSet::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw ParseError("unterminated marking set: " + std::string(text));
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> marks;
  size_t pos = 0;
  while (pos < body.size()) {
    size_t next = body.find(',', pos);
    std::string_view piece = body.substr(pos, next == std::string_view::npos ? next : next - pos);
    size_t begin = piece.find_first_not_of(' ');
    size_t end = piece.find_last_not_of(' ');
    if (begin == std::string_view::npos)
      throw ParseError("empty entry in marking set: " + std::string(text));
    piece = piece.substr(begin, end - begin + 1);
    int value = 0;
    for (char c : piece) {
      if (c < '0' || c > '9')
        throw ParseError("bad marking index \"" + std::string(piece) + "\"");
      value = value * 10 + (c - '0');
      if (value > MarkSet::kMaxMarks) break;
    }
    marks.push_back(value);
    if (next == std::string_view::npos) break;
    pos = next + 1;
    if (pos == body.size()) throw ParseError("trailing comma in marking set: " + std::string(text));
  }
  MarkSet out = MarkSet::of(marks);
  if (out.count() != static_cast<int>(marks.size()))
    throw ParseError("repeated marking in set: " + std::string(text));
  return out;
}

WeightDatum::WeightDatum(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) > MarkSet::kMaxMarks)
    throw InvalidSpaceError("more than " + std::to_string(MarkSet::kMaxMarks) +
                            " markings are not supported");
  for (size_t i = 0; i < weights_.size(); ++i) {
    const Rational& a = weights_[i];
    if (a.sign() <= 0 || a > Rational(1))
      throw InvalidSpaceError("weight " + a.str() + " at marking " + std::to_string(i + 1) +
                              " outside (0,1]");
  }
}

WeightDatum WeightDatum::parse(std::string_view text) {
  std::vector<Rational> weights;
  size_t pos = 0;
  if (!text.empty()) {
    while (true) {
      size_t next = text.find(',', pos);
      std::string_view piece =
          text.substr(pos, next == std::string_view::npos ? next : next - pos);
      size_t begin = piece.find_first_not_of(' ');
      if (begin == std::string_view::npos) throw ParseError("empty weight entry");
      size_t end = piece.find_last_not_of(' ');
      weights.push_back(Rational::parse(piece.substr(begin, end - begin + 1)));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  }
  return WeightDatum(std::move(weights));
}

const Rational& WeightDatum::at(int mark) const {
  if (mark < 1 || mark > size())
    throw InvalidGeneratorError("marking index " + std::to_string(mark) + " out of range 1.." +
                                std::to_string(size()));
  return weights_[mark - 1];
}

Rational WeightDatum::total() const { return subset_weight(MarkSet::full(size())); }

Rational WeightDatum::subset_weight(const MarkSet& marks) const {
  Rational sum;
  for (int m = 1; m <= size(); ++m)
    if (marks.contains(m)) sum += weights_[m - 1];
  return sum;
}

Rational WeightDatum::min_weight() const {
  if (weights_.empty()) throw Error("min_weight on empty weight datum");
  return *std::min_element(weights_.begin(), weights_.end());
}

std::string WeightDatum::str() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += weights_[i].str();
  }
  return out;
}

int WeightDatum::compare(const WeightDatum& o) const {
  if (size() != o.size()) return size() < o.size() ? -1 : 1;
  for (int i = 0; i < size(); ++i) {
    if (weights_[i] < o.weights_[i]) return -1;
    if (o.weights_[i] < weights_[i]) return 1;
  }
  return 0;
}

ModuliSpace::ModuliSpace(int genus, WeightDatum weights)
    : genus_(genus), weights_(std::move(weights)) {
  if (genus_ < 0) throw InvalidSpaceError("negative genus");
  Rational slack = Rational(2 * genus_ - 2) + weights_.total();
  if (!(slack > Rational(0)))
    throw InvalidSpaceError("unstable space: 2g-2+sum(weights) = " + slack.str() +
                            " must be > 0 (g=" + std::to_string(genus_) + ", weights=(" +
                            weights_.str() + "))");
}

std::string ModuliSpace::str() const {
  return "g=" + std::to_string(genus_) + ", weights=(" + weights_.str() + ")";
}

int ModuliSpace::compare(const ModuliSpace& o) const {
  if (genus_ != o.genus_) return genus_ < o.genus_ ? -1 : 1;
  return weights_.compare(o.weights_);
}

ModuliSpace make_space(int genus, std::vector<Rational> weights) {
  return ModuliSpace(genus, WeightDatum(std::move(weights)));
}

ModuliSpace unit_weight_space(int genus, int marks) {
  return ModuliSpace(genus, WeightDatum(std::vector<Rational>(marks, Rational(1))));
}

}  // namespace hassett
