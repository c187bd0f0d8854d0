#include "lfdl/iterator.hpp"

#include "lfdl/gallop.hpp"

namespace lfdl {

void DomainIterator::seek(const Value& t) {
  assert(at_end() || !(t < key()));
  pos_ = gallop_lower_bound(domain_.values(), pos_, t);
}

}  // namespace lfdl
