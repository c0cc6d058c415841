#include "sumset/group.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "sumset/error.hpp"

namespace sumset {

GroupElement::GroupElement(std::map<Coord, Value> entries) {
  for (auto it = entries.begin(); it != entries.end();) {
    if (it->second == 0)
      it = entries.erase(it);
    else
      ++it;
  }
  entries_ = std::move(entries);
}

Value GroupElement::at(Coord coord) const noexcept {
  auto it = entries_.find(coord);
  return it == entries_.end() ? 0 : it->second;
}

std::vector<Coord> GroupElement::support() const {
  std::vector<Coord> out;
  out.reserve(entries_.size());
  for (const auto& [coord, value] : entries_) out.push_back(coord);
  return out;
}

Pattern::Pattern(std::vector<Value> values) : values_(std::move(values)) {
  for (Value v : values_)
    if (v == 0)
      throw Error(ErrorKind::kInvalidArgument, "pattern entries must be >= 1");
}

PointColouring::PointColouring(Colour colour_count, Rule rule)
    : colour_count_(colour_count), rule_(std::move(rule)) {
  if (colour_count_ == 0)
    throw Error(ErrorKind::kInvalidArgument, "colour count must be positive");
}

PointColouring PointColouring::from_table(Colour colour_count,
                                          std::map<GroupElement, Colour> table) {
  for (const auto& [x, colour] : table)
    if (colour >= colour_count)
      throw Error(ErrorKind::kInvalidArgument,
                  "table colour " + std::to_string(colour) + " out of range");
  auto shared = std::make_shared<const std::map<GroupElement, Colour>>(std::move(table));
  return PointColouring(colour_count, [shared](const GroupElement& x) -> Colour {
    auto it = shared->find(x);
    if (it == shared->end())
      throw Error(ErrorKind::kDomain, "element outside the colouring's carrier");
    return it->second;
  });
}

Colour PointColouring::operator()(const GroupElement& x) const {
  Colour colour = rule_(x);
  if (colour >= colour_count_)
    throw Error(ErrorKind::kInternal, "colouring returned colour " +
                                          std::to_string(colour) + " >= r");
  return colour;
}

SetColouring::SetColouring(std::size_t arity, Rule rule,
                           std::optional<std::vector<Coord>> index_set)
    : arity_(arity), rule_(std::move(rule)), index_set_(std::move(index_set)) {}

Colour SetColouring::operator()(std::span<const Coord> tuple) const {
  if (tuple.size() != arity_)
    throw Error(ErrorKind::kInvalidArgument,
                "tuple of size " + std::to_string(tuple.size()) +
                    " for a colouring of arity " + std::to_string(arity_));
  for (std::size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i - 1] >= tuple[i])
      throw Error(ErrorKind::kInvalidArgument, "tuple is not strictly increasing");
  if (index_set_) {
    for (Coord a : tuple)
      if (!std::binary_search(index_set_->begin(), index_set_->end(), a))
        throw Error(ErrorKind::kDomain,
                    "coordinate " + std::to_string(a) + " outside the index set");
  }
  return rule_(tuple);
}

Pattern make_pattern(std::size_t r, std::size_t l) {
  if (l > r)
    throw Error(ErrorKind::kInvalidArgument,
                "invalid level " + std::to_string(l) + " > r=" + std::to_string(r));
  std::vector<Value> values(2 * l, 2);
  values.insert(values.end(), r - l, 4);
  return Pattern(std::move(values));
}

GroupElement apply_pattern(const Pattern& s, std::span<const Coord> a) {
  if (s.size() != a.size())
    throw Error(ErrorKind::kInvalidArgument,
                "arity mismatch: pattern of length " + std::to_string(s.size()) +
                    ", tuple of length " + std::to_string(a.size()));
  std::map<Coord, Value> entries;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0 && a[i - 1] >= a[i])
      throw Error(ErrorKind::kInvalidArgument, "coordinate tuple is not strictly increasing");
    entries.emplace_hint(entries.end(), a[i], s.values()[i]);
  }
  return GroupElement(std::move(entries));
}

SetColouring induced_colouring(PointColouring c, Pattern s) {
  const std::size_t k = s.size();
  return SetColouring(k, [c = std::move(c), s = std::move(s)](std::span<const Coord> a) {
    return c(apply_pattern(s, a));
  });
}

GroupElement add(const GroupElement& x, const GroupElement& y) {
  std::map<Coord, Value> entries = x.entries();
  for (const auto& [coord, value] : y.entries()) entries[coord] += value;
  return GroupElement(std::move(entries));
}

GroupElement doubled(const GroupElement& x) { return add(x, x); }

ElementSet sumset(const ElementSet& xs) {
  ElementSet out;
  for (auto it = xs.begin(); it != xs.end(); ++it)
    for (auto jt = it; jt != xs.end(); ++jt) out.insert(add(*it, *jt));
  return out;
}

MonochromeResult is_monochromatic(const PointColouring& c, const ElementSet& s) {
  MonochromeResult result;
  const GroupElement* first = nullptr;
  for (const auto& x : s) {
    Colour colour = c(x);
    if (!result.colour) {
      result.colour = colour;
      first = &x;
    } else if (colour != *result.colour) {
      result.constant = false;
      result.colour.reset();
      result.witnesses = std::make_pair(*first, x);
      return result;
    }
  }
  return result;
}

std::vector<Value> values_along_support(const GroupElement& x) {
  std::vector<Value> out;
  out.reserve(x.support_size());
  for (const auto& [coord, value] : x.entries()) out.push_back(value);
  return out;
}

}  // namespace sumset
