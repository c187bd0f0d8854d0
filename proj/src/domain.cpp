#include "lfdl/domain.hpp"

#include <algorithm>

#include "lfdl/gallop.hpp"

namespace lfdl {

Domain Domain::of(std::vector<Value> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return from_sorted(std::move(values));
}

Domain Domain::from_sorted(std::vector<Value> values) {
#ifndef NDEBUG
  for (size_t i = 1; i < values.size(); ++i) assert(values[i - 1] < values[i]);
#endif
  if (values.empty()) return Domain();
  return Domain(std::make_shared<const std::vector<Value>>(std::move(values)), 0);
}

Domain Domain::int_range(int64_t first, int64_t last) {
  std::vector<Value> values;
  if (first <= last) {
    values.reserve(static_cast<size_t>(last - first + 1));
    for (int64_t v = first; v <= last; ++v) values.push_back(Value::integer(v));
  }
  return from_sorted(std::move(values));
}

Domain Domain::raise_lower_bound(const Value& t) const {
  if (!data_) return Domain();
  size_t at = gallop_lower_bound(std::span<const Value>(data_->data(), data_->size()),
                                 begin_, t);
  return Domain(data_, at);
}

bool operator==(const Domain& a, const Domain& b) {
  if (a.data_ == b.data_ && a.begin_ == b.begin_) return true;
  auto va = a.values();
  auto vb = b.values();
  return std::equal(va.begin(), va.end(), vb.begin(), vb.end());
}

bool DomainStore::is_false() const {
  for (const Domain& d : domains_)
    if (d.empty()) return true;
  return false;
}

bool DomainStore::all_singleton() const {
  for (const Domain& d : domains_)
    if (d.size() != 1) return false;
  return true;
}

bool DomainStore::lower_bounds_equal() const {
  if (domains_.empty() || is_false()) return false;
  const Value lb = domains_.front().lower_bound();
  for (const Domain& d : domains_)
    if (d.lower_bound() != lb) return false;
  return true;
}

bool operator==(const DomainStore& a, const DomainStore& b) {
  return a.domains_ == b.domains_;
}

}  // namespace lfdl
