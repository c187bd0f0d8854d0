#include "lfdl/value.hpp"

#include <deque>
#include <mutex>
#include <ostream>
#include <unordered_map>

namespace lfdl {

namespace {

// Process-wide symbol table. Entries live in a deque so the string storage
// is stable; handing out `const std::string*` keeps comparisons lock-free.
struct Interner {
  std::mutex mutex;
  std::deque<std::string> storage;
  std::unordered_map<std::string_view, const std::string*> table;

  const std::string* intern(std::string_view text) {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = table.find(text);
    if (it != table.end()) return it->second;
    storage.emplace_back(text);
    const std::string* entry = &storage.back();
    table.emplace(*entry, entry);
    return entry;
  }
};

Interner& interner() {
  static Interner instance;
  return instance;
}

}  // namespace

Value Value::symbol(std::string_view text) {
  return Value(0, interner().intern(text));
}

std::ostream& operator<<(std::ostream& os, const Value& v) {
  if (v.is_int()) return os << v.as_int();
  return os << v.text();
}

}  // namespace lfdl
