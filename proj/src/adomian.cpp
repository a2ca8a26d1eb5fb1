#include "cdara/adomian.hpp"

namespace cdara {

namespace {

void require_size(const ComponentList& list, std::size_t n, const char* name) {
  if (list.size() < n + 1)
    throw MissingComponentError(std::string(name) + ": needs components through index " +
                                std::to_string(n) + ", have " + std::to_string(list.size()));
}

}  // namespace

Expression adomian_a(const ComponentList& u, std::size_t n) {
  require_size(u, n, "adomian_a");
  Expression acc;
  for (std::size_t k = 0; k <= n; ++k)
    acc = add(acc, multiply(u[k], differentiate(u[n - k], Axis::X)));
  return acc;
}

Expression adomian_b(const ComponentList& v, std::size_t n) {
  require_size(v, n, "adomian_b");
  Expression acc;
  for (std::size_t k = 0; k <= n; ++k)
    acc = add(acc, multiply(v[k], differentiate(v[n - k], Axis::X)));
  return acc;
}

Expression adomian_c(const ComponentList& u, const ComponentList& v, std::size_t n) {
  require_size(u, n, "adomian_c");
  require_size(v, n, "adomian_c");
  Expression acc;
  for (std::size_t k = 0; k <= n; ++k) acc = add(acc, multiply(u[k], v[n - k]));
  return acc;
}

}  // namespace cdara
